//! The bundled invariant sweep behind `edgewise selftest`.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::duality::duality_selftest_with;
use crate::duality::{functor_f, functor_g};
use crate::exec::Exec;
use crate::homology::{
    chain_complex_with, rational_rank, smith_normal_form, verdict_with, IntegerMatrix,
};
use crate::ordinal::{monotone_maps, OrdinalMap};
use crate::simplicial::{eta, gamma_check, mu};
use crate::simplicial::{phi_map, psi_map, skeleton, subdivide};
use crate::word::{compose, decompose, eval_map, oracle_of, Letter, Word};

/// A deliberately wrong rule, used to confirm the harness catches it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// `Op ∘ Op` composes to `Op` instead of `Id`.
    OpOpRule,
}

#[derive(Clone, Copy, Debug)]
pub struct SelftestOptions {
    /// Largest simplex dimension for the homology sweep.
    pub max_n: usize,
    pub seed: u64,
    pub fault: Option<Fault>,
    pub exec: Exec,
}

impl Default for SelftestOptions {
    fn default() -> Self {
        SelftestOptions {
            max_n: 3,
            seed: 0,
            fault: None,
            exec: Exec::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub counterexample: Option<String>,
}

impl CheckResult {
    fn from_outcomes(name: &str, outcomes: Vec<Option<String>>) -> Self {
        let cases = outcomes.len();
        let mut failed = outcomes.into_iter().flatten();
        let counterexample = failed.next();
        let failures = counterexample.iter().count() + failed.count();
        CheckResult {
            name: name.to_string(),
            cases,
            failures,
            counterexample,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelftestReport {
    pub checks: Vec<CheckResult>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    /// Fixed-width summary, one row per check.
    pub fn table(&self) -> String {
        let width = self
            .checks
            .iter()
            .map(|c| c.name.len())
            .max()
            .unwrap_or(5)
            .max(5);
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<width$}  {:>8}  {:>8}  result",
            "check", "cases", "failures"
        );
        for c in &self.checks {
            let status = if c.passed() { "pass" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{:<width$}  {:>8}  {:>8}  {status}",
                c.name, c.cases, c.failures
            );
            if let Some(example) = &c.counterexample {
                let _ = writeln!(out, "    counterexample: {example}");
            }
        }
        out
    }
}

fn faulty_compose(outer: &Word, inner: &Word) -> Word {
    let mut letters = Vec::new();
    for l in outer.letters() {
        match l {
            Letter::Id => letters.extend_from_slice(inner.letters()),
            Letter::Op => letters.extend(inner.letters().iter().rev().map(|l| match l {
                Letter::Id => Letter::Op,
                other => *other,
            })),
            Letter::C0 => letters.push(Letter::C0),
        }
    }
    Word::new(letters).expect("nonempty")
}

/// All composable pairs `[a] -> [b] -> [c]` with objects up to `max`.
fn composable_pairs(max: usize) -> Vec<(OrdinalMap, OrdinalMap)> {
    let mut pairs = Vec::new();
    for a in 0..=max {
        for b in 0..=max {
            for c in 0..=max {
                for f in monotone_maps(a, b) {
                    for g in monotone_maps(b, c) {
                        pairs.push((f.clone(), g));
                    }
                }
            }
        }
    }
    pairs
}

fn maps_up_to(max: usize) -> Vec<OrdinalMap> {
    (0..=max)
        .flat_map(|a| (0..=max).flat_map(move |b| monotone_maps(a, b)))
        .collect()
}

pub fn run(options: &SelftestOptions) -> SelftestReport {
    let exec = options.exec;
    let mut checks = Vec::new();

    let duality = duality_selftest_with(4, exec, functor_f, functor_g);
    checks.push(CheckResult {
        name: "duality FG = id, GF = id (n <= 4)".into(),
        cases: duality.interval_maps_checked + duality.ordinal_maps_checked,
        failures: usize::from(!duality.passed()),
        counterexample: duality.counterexample.map(|c| format!("{c:?}")),
    });

    let words = Word::all_up_to(4);
    checks.push(CheckResult::from_outcomes(
        "decompose(oracle_of(w)) = w (len <= 4)",
        exec.map(&words, |w| match decompose(&oracle_of(w)) {
            Ok(back) if back == *w => None,
            Ok(back) => Some(format!("{w} -> {back}")),
            Err(e) => Some(format!("{w}: {e}")),
        }),
    ));

    let short = Word::all_up_to(2);
    let maps = maps_up_to(2);
    let mut word_pairs = Vec::new();
    for outer in &short {
        for inner in &short {
            word_pairs.push((outer.clone(), inner.clone()));
        }
    }
    let fault = options.fault;
    checks.push(CheckResult::from_outcomes(
        "word composition vs functor composition",
        exec.map(&word_pairs, |(outer, inner)| {
            let composed = match fault {
                Some(Fault::OpOpRule) => faulty_compose(outer, inner),
                None => compose(outer, inner),
            };
            maps.iter().find_map(|f| {
                let direct = eval_map(&composed, f);
                let nested = eval_map(outer, &eval_map(inner, f));
                (direct != nested)
                    .then(|| format!("{outer} after {inner} gave {composed}: differs on {f:?}"))
            })
        }),
    ));

    let pairs = composable_pairs(2);
    let mid = Word::all_up_to(3);
    checks.push(CheckResult::from_outcomes(
        "eval_map functoriality (len <= 3)",
        exec.map(&mid, |w| {
            pairs.iter().find_map(|(f, g)| {
                let whole = eval_map(w, &f.then_unchecked(g));
                let parts = eval_map(w, f).then_unchecked(&eval_map(w, g));
                (whole != parts).then(|| format!("{w} on {f:?} then {g:?}"))
            })
        }),
    ));

    let mut psi_phi = Vec::new();
    for n in 1..=3 {
        for k in 0..=3 {
            for s in monotone_maps(k, n) {
                let back = phi_map(n, &s).and_then(|t| psi_map(n, &t));
                psi_phi.push(match back {
                    Ok(b) if b == s => None,
                    other => Some(format!("n = {n}, {s:?} -> {other:?}")),
                });
            }
        }
    }
    checks.push(CheckResult::from_outcomes(
        "psi . phi = id (n <= 3)",
        psi_phi,
    ));

    let mut mu_eta = Vec::new();
    for n in 0..=6 {
        for m in 0..=n {
            let back = eta(n, m).and_then(|e| mu(n, &e));
            mu_eta.push((back != Ok(m)).then(|| format!("mu(eta({m})) = {back:?} in [1]^{n}")));
        }
    }
    checks.push(CheckResult::from_outcomes("mu . eta = id (n <= 6)", mu_eta));

    let gammas: Vec<_> = (0..=6).map(gamma_check).collect();
    checks.push(CheckResult::from_outcomes(
        "gamma natural transformation (n <= 6)",
        gammas
            .iter()
            .map(|g| g.failures.first().map(|f| format!("n = {}: {f}", g.n)))
            .collect(),
    ));

    let euler_words = Word::all_up_to(3);
    checks.push(CheckResult::from_outcomes(
        "chain Euler characteristic = V - E + F",
        exec.map(&euler_words, |w| {
            (1..=2).find_map(|n| {
                let x = subdivide(w, n);
                let from_chains = match chain_complex_with(&x, 2, Exec::Sequential) {
                    Ok(c) => c.euler_characteristic(),
                    Err(e) => return Some(format!("{w} on Δ^{n}: {e}")),
                };
                let from_skeleton = skeleton(&x).euler_characteristic();
                (from_chains != from_skeleton)
                    .then(|| format!("{w} on Δ^{n}: {from_chains} vs {from_skeleton}"))
            })
        }),
    ));

    let max_n = options.max_n;
    checks.push(CheckResult::from_outcomes(
        &format!("criterion = connectivity = homology (n <= {max_n})"),
        exec.map(&words, |w| match verdict_with(w, max_n, Exec::Sequential) {
            Ok(v) if v.consistent => None,
            Ok(v) => Some(format!("{w}: {}", v.certification)),
            Err(e) => Some(format!("{w}: {e}")),
        }),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let matrices: Vec<IntegerMatrix> = (0..50)
        .map(|_| {
            let rows = rng.gen_range(1..=6);
            let cols = rng.gen_range(1..=6);
            let entries: Vec<Vec<i64>> = (0..rows)
                .map(|_| (0..cols).map(|_| rng.gen_range(-4..=4)).collect())
                .collect();
            IntegerMatrix::from_rows(&entries)
        })
        .collect();
    checks.push(CheckResult::from_outcomes(
        &format!("smith rank = rational rank (seed {})", options.seed),
        exec.map(&matrices, |m| {
            let snf = smith_normal_form(m);
            let divides = snf.diagonal.windows(2).all(|d| d[1] % d[0] == 0);
            let rank = rational_rank(m);
            (snf.rank != rank || !divides)
                .then(|| format!("{m:?}: smith {:?}, rational rank {rank}", snf.diagonal))
        }),
    ));

    SelftestReport { checks }
}
