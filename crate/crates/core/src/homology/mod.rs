//! Integral homology of normalized chain complexes, and the weak equivalence
//! verdict for a word.

use serde::Serialize;

use crate::error::Result;
use crate::exec::Exec;
use crate::simplicial::{subdivide, SimplicialSetView};
use crate::word::{interval_of, is_we_preserving, SimplicialInterval, Word};

pub mod chain;
pub mod matrix;

pub use chain::{chain_complex, chain_complex_with, ChainComplex};
pub use matrix::{rational_rank, smith_normal_form, IntegerMatrix, SmithForm};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeHomology {
    pub degree: usize,
    pub betti: usize,
    pub torsion: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    pub reduced: bool,
    pub degrees: Vec<DegreeHomology>,
    /// False when simplices above the computed range could still kill cycles
    /// in the top degree.
    pub top_degree_exact: bool,
}

impl HomologyReport {
    pub fn betti(&self, k: usize) -> usize {
        self.degrees[k].betti
    }

    /// Whether every group in degrees `0..=k` is zero.
    pub fn vanishes_through(&self, k: usize) -> bool {
        self.degrees
            .iter()
            .take(k + 1)
            .all(|d| d.betti == 0 && d.torsion.is_empty())
    }

    pub fn vanishes(&self) -> bool {
        self.vanishes_through(self.degrees.len().saturating_sub(1))
    }
}

pub fn homology(c: &ChainComplex, reduced: bool) -> HomologyReport {
    homology_with(c, reduced, Exec::default())
}

/// `H_k = ker ∂_k / im ∂_{k+1}`: rank `nullity(∂_k) - rank(∂_{k+1})`, torsion
/// the invariant factors of `∂_{k+1}` above one. The reduced variant replaces
/// `∂_0` by the augmentation.
pub fn homology_with(c: &ChainComplex, reduced: bool, exec: Exec) -> HomologyReport {
    let top = c.top_degree();
    let forms: Vec<SmithForm> = exec.map(&c.boundaries, smith_normal_form);
    let degrees = (0..=top)
        .map(|k| {
            let outgoing_rank = if k == 0 {
                usize::from(reduced && c.rank(0) > 0)
            } else {
                forms[k].rank
            };
            let (incoming_rank, torsion) = match forms.get(k + 1) {
                Some(f) => (f.rank, f.torsion()),
                None => (0, Vec::new()),
            };
            DegreeHomology {
                degree: k,
                betti: c.rank(k) - outgoing_rank - incoming_rank,
                torsion,
            }
        })
        .collect();
    HomologyReport {
        reduced,
        degrees,
        top_degree_exact: c.above_top == 0,
    }
}

/// Homological evidence for one subdivided simplex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplexEvidence {
    pub n: usize,
    pub reduced: HomologyReport,
    pub vanishes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub word: String,
    /// No letter is `C0`.
    pub criterion: bool,
    pub interval: SimplicialInterval,
    /// A one dimensional zigzag is contractible iff it is connected.
    pub interval_contractible: bool,
    pub evidence: Vec<SimplexEvidence>,
    pub preserving: bool,
    pub consistent: bool,
    pub certification: String,
}

/// Combines the word criterion, the shape of `T*(Δ¹)` and the reduced homology
/// of `T*(Δⁿ)` for `n = 1..=max_n`, flagging any disagreement.
pub fn verdict(w: &Word, max_n: usize) -> Result<Verdict> {
    verdict_with(w, max_n, Exec::default())
}

pub fn verdict_with(w: &Word, max_n: usize, exec: Exec) -> Result<Verdict> {
    let criterion = is_we_preserving(w);
    let interval = interval_of(w);
    let interval_contractible = interval.is_connected();
    let mut evidence = Vec::new();
    for n in 1..=max_n {
        let x = subdivide(w, n);
        let c = chain_complex_with(&x, n + 1, exec)?;
        let reduced = homology_with(&c, true, exec);
        let vanishes = reduced.vanishes_through(n);
        evidence.push(SimplexEvidence {
            n,
            reduced,
            vanishes,
        });
    }
    let consistent =
        criterion == interval_contractible && evidence.iter().all(|e| e.vanishes == criterion);
    let certification = if !criterion {
        "not preserving: T*(Δ¹) is disconnected"
    } else if max_n >= 2 {
        "preserving: T*(Δ¹) contractible; T*(Δⁿ) homologically contractible"
    } else {
        "preserving: T*(Δ¹) contractible"
    };
    Ok(Verdict {
        word: w.to_string(),
        criterion,
        interval,
        interval_contractible,
        evidence,
        preserving: criterion,
        consistent,
        certification: certification.to_string(),
    })
}

/// Connected components of the 1-skeleton, by union-find.
pub fn components<X: SimplicialSetView>(x: &X) -> usize {
    let vertices = x.level(0);
    let index: std::collections::HashMap<_, _> = vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i))
        .collect();
    let mut parent: Vec<usize> = (0..vertices.len()).collect();
    fn find(parent: &mut [usize], mut a: usize) -> usize {
        while parent[a] != a {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        a
    }
    let mut count = vertices.len();
    for e in x.nondegenerate(1) {
        let a = find(&mut parent, index[&x.face(1, 0, &e)]);
        let b = find(&mut parent, index[&x.face(1, 1, &e)]);
        if a != b {
            parent[a] = b;
            count -= 1;
        }
    }
    count
}
