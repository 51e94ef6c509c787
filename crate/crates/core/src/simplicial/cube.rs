//! The embedding of the poset `[n]` into the cube `[1]^n` and its retraction,
//! and the induced comparison maps between `Δ^n` and `(Δ¹)^n`.
//!
//! Cube coordinates are numbered `1..=n` from the left. `eta(n, m)` is the
//! chain element with `n - m` zeros followed by `m` ones; `mu` reads off the
//! position of the first one.

use std::fmt;

use serde::Serialize;

use super::Tuple;
use crate::error::{Error, Result};
use crate::ordinal::OrdinalMap;

/// An object of the poset `[1]^n`, ordered componentwise.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CubeVertex {
    bits: Vec<bool>,
}

impl CubeVertex {
    pub fn new(bits: Vec<bool>) -> Self {
        CubeVertex { bits }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Componentwise `self ≤ other`, i.e. a morphism `self -> other` exists.
    pub fn le(&self, other: &CubeVertex) -> bool {
        self.bits.len() == other.bits.len()
            && self.bits.iter().zip(&other.bits).all(|(a, b)| a <= b)
    }

    /// All `2^n` vertices, in binary counting order.
    pub fn all(n: usize) -> Vec<CubeVertex> {
        (0..1usize << n)
            .map(|code| CubeVertex {
                bits: (0..n).map(|p| code >> (n - 1 - p) & 1 == 1).collect(),
            })
            .collect()
    }
}

impl fmt::Display for CubeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// `η(m)`: `n - m` zeros then `m` ones.
pub fn eta(n: usize, m: usize) -> Result<CubeVertex> {
    if m > n {
        return Err(Error::IndexOutOfRange { index: m, max: n });
    }
    Ok(CubeVertex {
        bits: (1..=n).map(|p| p > n - m).collect(),
    })
}

/// `μ(v) = n - min{i : v_i = 1} + 1`, and `0` on the all-zero vertex.
pub fn mu(n: usize, v: &CubeVertex) -> Result<usize> {
    if v.len() != n {
        return Err(Error::CubeLength {
            expected: n,
            got: v.len(),
        });
    }
    Ok(match v.bits.iter().position(|&b| b) {
        Some(p) => n - (p + 1) + 1,
        None => 0,
    })
}

/// `Φ(σ) = η ∘ σ`: a simplex of `Δ^n` becomes an `n`-tuple of simplices of
/// `Δ¹`, one per cube coordinate.
pub fn phi_map(n: usize, s: &OrdinalMap) -> Result<Tuple<OrdinalMap>> {
    if s.dst() != n {
        return Err(Error::MismatchedObjects {
            left: s.dst(),
            right: n,
        });
    }
    let images: Vec<CubeVertex> = s
        .values()
        .iter()
        .map(|&v| eta(n, v))
        .collect::<Result<_>>()?;
    let components = (0..n)
        .map(|j| {
            let column = images.iter().map(|c| usize::from(c.bits[j])).collect();
            OrdinalMap::new(column, 1)
        })
        .collect::<Result<_>>()?;
    Ok(Tuple(components))
}

/// `Ψ(τ) = μ ∘ τ`: read the cube vertex at each position and collapse it.
pub fn psi_map(n: usize, t: &Tuple<OrdinalMap>) -> Result<OrdinalMap> {
    if t.0.len() != n {
        return Err(Error::CubeLength {
            expected: n,
            got: t.0.len(),
        });
    }
    let Some(first) = t.0.first() else {
        // Δ^0 receives the unique map out of the one-point set.
        return Err(Error::RaggedTuple);
    };
    let k = first.src();
    if t.0.iter().any(|c| c.src() != k || c.dst() != 1) {
        return Err(Error::RaggedTuple);
    }
    let values = (0..=k)
        .map(|pos| {
            let v = CubeVertex::new(t.0.iter().map(|c| c.at(pos) == 1).collect());
            mu(n, &v)
        })
        .collect::<Result<Vec<_>>>()?;
    OrdinalMap::new(values, n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaReport {
    pub n: usize,
    pub vertices_checked: usize,
    pub pairs_checked: usize,
    pub failures: Vec<String>,
}

impl GammaReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that `Γ_v : v -> η(μ(v))` exists for every vertex of `[1]^n`, that
/// `η ∘ μ` is monotone (so the `Γ_v` assemble into a natural transformation
/// from the identity), that `μ ∘ η = id`, and that `Γ` is the identity on the
/// image of `η`.
pub fn gamma_check(n: usize) -> GammaReport {
    let mut failures = Vec::new();
    let cube = CubeVertex::all(n);
    let retract = |v: &CubeVertex| eta(n, mu(n, v).expect("length n")).expect("μ(v) ≤ n");
    let images: Vec<CubeVertex> = cube.iter().map(retract).collect();

    for (v, r) in cube.iter().zip(&images) {
        if !v.le(r) {
            failures.push(format!("no morphism {v} -> η(μ({v})) = {r}"));
        }
    }
    let mut pairs = 0;
    for (a, (v, rv)) in cube.iter().zip(&images).enumerate() {
        for (w, rw) in cube[a..].iter().zip(&images[a..]) {
            if v.le(w) {
                pairs += 1;
                if !rv.le(rw) {
                    failures.push(format!("η∘μ not monotone on {v} ≤ {w}"));
                }
            }
        }
    }
    for m in 0..=n {
        let e = eta(n, m).expect("m ≤ n");
        if mu(n, &e) != Ok(m) {
            failures.push(format!("μ(η({m})) != {m}"));
        }
        if retract(&e) != e {
            failures.push(format!("Γ is not the identity at η({m}) = {e}"));
        }
    }
    GammaReport {
        n,
        vertices_checked: cube.len(),
        pairs_checked: pairs,
        failures,
    }
}
