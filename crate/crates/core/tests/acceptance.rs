//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Runs without the libtest harness so the summary is always printed.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use edgewise::duality::{duality_selftest, functor_f, functor_f_by_precomposition};
use edgewise::homology::{chain_complex, components, homology};
use edgewise::ordinal::{concat_maps, monotone_maps, OrdinalMap};
use edgewise::simplicial::{
    eta, gamma_check, mu, phi_map, psi_map, skeleton, subdivide, SimplicialSetView,
};
use edgewise::word::{
    compose, decompose, eval_map, eval_object, interval_edges, interval_of, oracle_of, sum, Gap,
    SimplicialInterval, Word,
};

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn strings(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn pairs(xs: &[(&str, &str)]) -> BTreeSet<(String, String)> {
    xs.iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect()
}

fn subdivision(
    word: &str,
    m: usize,
    vertices: &[&str],
    edges: Option<&[(&str, &str)]>,
    counts: (usize, usize, usize),
) -> Check {
    let x = subdivide(&w(word), m);
    let g = skeleton(&x);
    ensure(g.vertices == strings(vertices), || {
        format!("vertices {:?}", g.vertices)
    })?;
    if let Some(edges) = edges {
        let got: BTreeSet<_> = g.edge_pairs().into_iter().collect();
        ensure(got == pairs(edges), || format!("edges {got:?}"))?;
    }
    ensure(g.counts() == counts, || {
        format!("(V, E, F) = {:?}", g.counts())
    })?;
    let chi = chain_complex(&x, m + 1)
        .map_err(|e| e.to_string())?
        .euler_characteristic();
    ensure(g.euler_characteristic() == 1 && chi == 1, || {
        format!("χ = {chi}")
    })?;
    Ok(format!("V={} E={} F={} χ=1", counts.0, counts.1, counts.2))
}

fn segal_interval() -> Check {
    let x = subdivide(&Word::segal(), 1);
    let g = skeleton(&x);
    ensure(g.vertices == strings(&["00", "01", "11"]), || {
        format!("{:?}", g.vertices)
    })?;
    let got: BTreeSet<_> = g.edge_pairs().into_iter().collect();
    ensure(got == pairs(&[("00", "01"), ("11", "01")]), || {
        format!("{got:?}")
    })?;
    ensure(g.edges.len() == 2 && g.triangles.is_empty(), || {
        format!("{:?}", g.counts())
    })?;
    Ok("00->01, 11->01".into())
}

fn segal_triangle() -> Check {
    subdivision(
        "Op+Id",
        2,
        &["00", "01", "02", "11", "12", "22"],
        Some(&[
            ("00", "01"),
            ("00", "02"),
            ("01", "02"),
            ("11", "01"),
            ("11", "02"),
            ("12", "02"),
            ("22", "02"),
            ("11", "12"),
            ("22", "12"),
        ]),
        (6, 9, 4),
    )
}

fn squared_segal_triangle() -> Check {
    // All monotone strings of length 4 over {0, 1, 2}.
    let mut labels = vec![
        "0000", "0001", "0002", "0011", "0012", "0022", "0111", "0112", "0122", "0222", "1111",
        "1112", "1122", "1222", "2222",
    ];
    labels.sort();
    subdivision("Op+Id+Op+Id", 2, &labels, None, (15, 30, 16))
}

fn doubled_identity_triangle() -> Check {
    let detail = subdivision(
        "Id+Id",
        2,
        &["00", "01", "02", "11", "12", "22"],
        None,
        (6, 9, 4),
    )?;
    let g = skeleton(&subdivide(&w("Id+Id"), 2));
    ensure(g.has_edge("01", "12"), || "edge 01->12 missing".into())?;
    Ok(format!("{detail}, has 01->12"))
}

fn duality() -> Check {
    let report = duality_selftest(5);
    ensure(report.passed(), || format!("{:?}", report.counterexample))?;
    // F agrees with the hom-functor definition computed by precomposition.
    for a in 0..=5 {
        for b in 0..=5 {
            for f in monotone_maps(a, b) {
                ensure(functor_f(&f) == functor_f_by_precomposition(&f), || {
                    format!("F({f:?})")
                })?;
            }
        }
    }
    Ok(format!(
        "{} interval maps, {} ordinal maps",
        report.interval_maps_checked, report.ordinal_maps_checked
    ))
}

fn round_trip() -> Check {
    let words = Word::all_up_to(4);
    ensure(words.len() == 81 + 27 + 9 + 3, || {
        format!("{} words", words.len())
    })?;
    for word in &words {
        let back = decompose(&oracle_of(word)).map_err(|e| format!("{word}: {e}"))?;
        ensure(back == *word, || format!("{word} -> {back}"))?;
    }
    Ok(format!("{} words", words.len()))
}

fn weak_equivalence() -> Check {
    let words = Word::all_up_to(4);
    for word in &words {
        let criterion = word.c0_count() == 0;
        let connected = interval_of(word).is_connected();
        // Connectivity again, straight from the simplicial set.
        let one_piece = components(&subdivide(word, 1)) == 1;
        let acyclic = (1..=2).try_fold(true, |acc, n| {
            let c = chain_complex(&subdivide(word, n), n + 1)?;
            Ok::<_, edgewise::Error>(acc && homology(&c, true).vanishes_through(n))
        });
        let acyclic = acyclic.map_err(|e| format!("{word}: {e}"))?;
        ensure(
            criterion == connected && connected == one_piece && one_piece == acyclic,
            || {
                format!("{word}: criterion {criterion}, interval {connected}, skeleton {one_piece}, homology {acyclic}")
            },
        )?;
    }
    Ok(format!("{} words, n = 1, 2", words.len()))
}

/// `T*(Δ¹)` computed from the functor's action on generators alone.
fn interval_from_oracle(word: &Word) -> Result<SimplicialInterval, String> {
    let (vertices, edges) = interval_edges(&oracle_of(word)).map_err(|e| e.to_string())?;
    let mut gaps = vec![Gap::Empty; vertices.len() - 1];
    for e in edges {
        gaps[e.from.min(e.to)] = if e.from < e.to {
            Gap::Forward
        } else {
            Gap::Backward
        };
    }
    Ok(SimplicialInterval { gaps })
}

fn wedge_law() -> Check {
    let words = Word::all_up_to(3);
    let mut checked = 0;
    for a in &words {
        for b in &words {
            let joined = sum(a, b);
            let expected = interval_of(a).wedge(&interval_of(b));
            ensure(interval_of(&joined) == expected, || format!("{a} + {b}"))?;
            ensure(interval_from_oracle(&joined)? == expected, || {
                format!("{a} + {b} via oracle")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} pairs"))
}

fn no_high_simplices() -> Check {
    for word in Word::all_up_to(4) {
        let x = subdivide(&word, 1);
        for k in 2..=4 {
            let n = x.nondegenerate(k).len();
            ensure(n == 0, || {
                format!("{word}: {n} nondegenerate {k}-simplices")
            })?;
        }
    }
    Ok("120 words, k = 2..4".into())
}

fn retraction() -> Check {
    let mut simplices = 0;
    for n in 1..=3 {
        for k in 0..=3 {
            for s in monotone_maps(k, n) {
                let back = phi_map(n, &s)
                    .and_then(|t| psi_map(n, &t))
                    .map_err(|e| e.to_string())?;
                ensure(back == s, || format!("n = {n}: {s:?} -> {back:?}"))?;
                simplices += 1;
            }
        }
    }
    for n in 0..=8 {
        let r = gamma_check(n);
        ensure(r.passed(), || format!("gamma n = {n}: {:?}", r.failures))?;
    }
    for n in 0..=6 {
        for m in 0..=n {
            let back = eta(n, m).and_then(|e| mu(n, &e));
            ensure(back == Ok(m), || format!("mu(eta({m})) in [1]^{n}"))?;
        }
    }
    Ok(format!(
        "{simplices} simplices, gamma n <= 8, mu eta n <= 6"
    ))
}

fn all_maps(max: usize) -> Vec<OrdinalMap> {
    (0..=max)
        .flat_map(|a| (0..=max).flat_map(move |b| monotone_maps(a, b)))
        .collect()
}

fn algebraic_laws() -> Check {
    let maps = all_maps(2);
    let mut cases = 0;

    for word in Word::all_up_to(3) {
        for f in &maps {
            for g in maps.iter().filter(|g| g.src() == f.dst()) {
                let whole = eval_map(&word, &f.then(g).unwrap());
                let parts = eval_map(&word, f).then(&eval_map(&word, g)).unwrap();
                ensure(whole == parts, || {
                    format!("functoriality: {word} on {f:?}, {g:?}")
                })?;
                cases += 1;
            }
        }
    }

    let short = Word::all_up_to(2);
    for a in &short {
        for b in &short {
            for f in &maps {
                let direct = eval_map(&sum(a, b), f);
                let blocks = concat_maps(&eval_map(a, f), &eval_map(b, f));
                ensure(direct == blocks, || format!("sum: {a} + {b} on {f:?}"))?;
                let composed = eval_map(&compose(a, b), f);
                let nested = eval_map(a, &eval_map(b, f));
                ensure(composed == nested, || {
                    format!("composition: {a} after {b} on {f:?}")
                })?;
                cases += 2;
            }
            for c in &short {
                let left = compose(&sum(a, b), c);
                let right = sum(&compose(a, c), &compose(b, c));
                ensure(left == right, || {
                    format!("distribution: ({a} + {b}) after {c}")
                })?;
                for f in &maps {
                    // (T1 + T2) ∘ T3 evaluated blockwise on T3(f).
                    let inner = eval_map(c, f);
                    let blocks = concat_maps(&eval_map(a, &inner), &eval_map(b, &inner));
                    ensure(eval_map(&left, f) == blocks, || {
                        format!("distribution on maps: ({a} + {b}) after {c} on {f:?}")
                    })?;
                }
                cases += 1;
            }
        }
    }

    for word in Word::all_up_to(4)
        .into_iter()
        .filter(|w| w.c0_count() < w.len())
    {
        for k in 0..=8 {
            ensure(k <= eval_object(&word, k), || {
                format!("growth: {word} at {k}")
            })?;
            cases += 1;
        }
    }

    for word in Word::all_up_to(3) {
        for n in 1..=2 {
            let c =
                chain_complex(&subdivide(&word, n), n + 1).map_err(|e| format!("{word}: {e}"))?;
            for k in 2..c.boundaries.len() {
                let square = c.boundaries[k - 1].mul(&c.boundaries[k]);
                ensure(square.is_zero(), || {
                    format!("∂∂ ≠ 0 for {word} on Δ^{n}, degree {k}")
                })?;
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} cases"))
}

struct Criterion {
    id: usize,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Check,
}

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion {
            id: 1,
            name: "Segal subdivision of Δ^1",
            limit: secs(1),
            run: segal_interval,
        },
        Criterion {
            id: 2,
            name: "Segal subdivision of Δ^2",
            limit: secs(1),
            run: segal_triangle,
        },
        Criterion {
            id: 3,
            name: "E^2 subdivision of Δ^2",
            limit: secs(2),
            run: squared_segal_triangle,
        },
        Criterion {
            id: 4,
            name: "Id+Id subdivision of Δ^2",
            limit: None,
            run: doubled_identity_triangle,
        },
        Criterion {
            id: 5,
            name: "Duality FG = id, GF = id",
            limit: secs(10),
            run: duality,
        },
        Criterion {
            id: 6,
            name: "Classification round-trip",
            limit: secs(5),
            run: round_trip,
        },
        Criterion {
            id: 7,
            name: "Weak equivalence criterion",
            limit: secs(60),
            run: weak_equivalence,
        },
        Criterion {
            id: 8,
            name: "Wedge law",
            limit: None,
            run: wedge_law,
        },
        Criterion {
            id: 9,
            name: "No high simplices in T*(Δ^1)",
            limit: None,
            run: no_high_simplices,
        },
        Criterion {
            id: 10,
            name: "Retraction Δ^n <-> (Δ^1)^n",
            limit: None,
            run: retraction,
        },
        Criterion {
            id: 11,
            name: "Algebraic laws",
            limit: None,
            run: algebraic_laws,
        },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => {
                Err(format!("took {elapsed:.2?}, limit {limit:.0?}"))
            }
            (other, _) => other,
        };
        let (status, detail) = match &outcome {
            Ok(d) => ("PASS", d.as_str()),
            Err(d) => ("FAIL", d.as_str()),
        };
        println!(
            "[{status}] {:>2}. {:<38} {:>9.2?}  {detail}",
            c.id, c.name, elapsed
        );
        failed += usize::from(outcome.is_err());
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
