//! Finite simplicial sets presented levelwise, with the contravariant action
//! of the simplex category.
//!
//! A view never stores its levels. Subdivision needs level `T(n)` of the base
//! to produce level `n`, so everything is computed on demand; use
//! [`materialize`] to snapshot levels `0..=D`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;

use serde::Serialize;

use crate::exec::Exec;
use crate::ordinal::{degeneracy, face, monotone_maps, OrdinalMap};
use crate::word::{eval_map, eval_object, Word};

pub mod cube;
pub mod skeleton;

pub use cube::{eta, gamma_check, mu, phi_map, psi_map, CubeVertex, GammaReport};
pub use skeleton::{skeleton, SkeletonEdge, SkeletonGraph, SkeletonTriangle};

/// A simplicial set: levels of simplices and the action of monotone maps.
///
/// `act(f, σ)` for `f : [a] -> [b]` and `σ` in level `b` yields a simplex in
/// level `a`, contravariantly: `act(f.then(g), σ) = act(f, act(g, σ))`.
pub trait SimplicialSetView: Sync {
    type Simplex: Clone + Eq + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync;

    /// The `n`-simplices in a fixed, deterministic order.
    fn level(&self, n: usize) -> Vec<Self::Simplex>;

    /// Panics if `s` does not belong to level `f.dst()`.
    fn act(&self, f: &OrdinalMap, s: &Self::Simplex) -> Self::Simplex;

    /// `d_i σ` for `σ` in level `k ≥ 1`.
    fn face(&self, k: usize, i: usize, s: &Self::Simplex) -> Self::Simplex {
        self.act(&face(k, i).expect("face index in range"), s)
    }

    /// `s_i σ` for `σ` in level `k`.
    fn degeneracy(&self, k: usize, i: usize, s: &Self::Simplex) -> Self::Simplex {
        self.act(&degeneracy(k, i).expect("degeneracy index in range"), s)
    }

    /// Whether the `k`-simplex `s` is `s_i` of some `(k-1)`-simplex.
    ///
    /// Uses `σ = s_i τ ⇒ τ = d_i σ`, so only the candidates `s_i d_i σ` need
    /// checking.
    fn is_degenerate(&self, k: usize, s: &Self::Simplex) -> bool {
        (0..k).any(|i| {
            let d = self.face(k, i, s);
            self.degeneracy(k - 1, i, &d) == *s
        })
    }

    /// The nondegenerate `k`-simplices, in level order.
    fn nondegenerate(&self, k: usize) -> Vec<Self::Simplex> {
        self.nondegenerate_with(k, Exec::default())
    }

    fn nondegenerate_with(&self, k: usize, exec: Exec) -> Vec<Self::Simplex> {
        let level = self.level(k);
        exec.filter_map(&level, |s| (!self.is_degenerate(k, s)).then(|| s.clone()))
    }

    /// The `i`-th vertex of a `k`-simplex.
    fn vertex(&self, k: usize, i: usize, s: &Self::Simplex) -> Self::Simplex {
        let at = OrdinalMap::constant(0, i, k).expect("vertex index in range");
        self.act(&at, s)
    }
}

impl<X: SimplicialSetView + ?Sized> SimplicialSetView for &X {
    type Simplex = X::Simplex;

    fn level(&self, n: usize) -> Vec<Self::Simplex> {
        (**self).level(n)
    }

    fn act(&self, f: &OrdinalMap, s: &Self::Simplex) -> Self::Simplex {
        (**self).act(f, s)
    }
}

/// `Δ^m`: level `n` is every monotone map `[n] -> [m]`, acted on by
/// precomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StandardSimplex {
    pub m: usize,
}

pub fn standard_simplex(m: usize) -> StandardSimplex {
    StandardSimplex { m }
}

impl SimplicialSetView for StandardSimplex {
    type Simplex = OrdinalMap;

    fn level(&self, n: usize) -> Vec<OrdinalMap> {
        monotone_maps(n, self.m)
    }

    fn act(&self, f: &OrdinalMap, s: &OrdinalMap) -> OrdinalMap {
        f.then_unchecked(s)
    }
}

/// `T*(X) = X ∘ T` for the endofunctor `T` named by a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivided<X> {
    pub word: Word,
    pub base: X,
}

/// The subdivision of `Δ^m` by `w`.
pub fn subdivide(w: &Word, m: usize) -> Subdivided<StandardSimplex> {
    Subdivided {
        word: w.clone(),
        base: standard_simplex(m),
    }
}

/// The subdivision of an arbitrary view by `w`.
pub fn subdivide_view<X: SimplicialSetView>(w: &Word, base: X) -> Subdivided<X> {
    Subdivided {
        word: w.clone(),
        base,
    }
}

impl<X: SimplicialSetView> SimplicialSetView for Subdivided<X> {
    type Simplex = X::Simplex;

    fn level(&self, n: usize) -> Vec<X::Simplex> {
        self.base.level(eval_object(&self.word, n))
    }

    fn act(&self, f: &OrdinalMap, s: &X::Simplex) -> X::Simplex {
        self.base.act(&eval_map(&self.word, f), s)
    }
}

/// A simplex of a product: a pair of simplices of the same dimension.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair<A, B>(pub A, pub B);

impl<A: fmt::Display, B: fmt::Display> fmt::Display for Pair<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// `X × Y`, levelwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Product<X, Y> {
    pub left: X,
    pub right: Y,
}

pub fn product<X: SimplicialSetView, Y: SimplicialSetView>(left: X, right: Y) -> Product<X, Y> {
    Product { left, right }
}

impl<X: SimplicialSetView, Y: SimplicialSetView> SimplicialSetView for Product<X, Y> {
    type Simplex = Pair<X::Simplex, Y::Simplex>;

    fn level(&self, n: usize) -> Vec<Self::Simplex> {
        let right = self.right.level(n);
        self.left
            .level(n)
            .into_iter()
            .flat_map(|a| right.iter().map(move |b| Pair(a.clone(), b.clone())))
            .collect()
    }

    fn act(&self, f: &OrdinalMap, s: &Self::Simplex) -> Self::Simplex {
        Pair(self.left.act(f, &s.0), self.right.act(f, &s.1))
    }
}

/// A simplex of a power `X^n`: one simplex per factor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tuple<S>(pub Vec<S>);

impl<S: fmt::Display> fmt::Display for Tuple<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, s) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// `X^n`; the empty power is the one-point simplicial set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Power<X> {
    pub base: X,
    pub n: usize,
}

pub fn power<X: SimplicialSetView>(base: X, n: usize) -> Power<X> {
    Power { base, n }
}

impl<X: SimplicialSetView> SimplicialSetView for Power<X> {
    type Simplex = Tuple<X::Simplex>;

    fn level(&self, k: usize) -> Vec<Self::Simplex> {
        let factor = self.base.level(k);
        let mut out = vec![Vec::new()];
        for _ in 0..self.n {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<X::Simplex>| {
                    factor.iter().map(move |s| {
                        let mut next = prefix.clone();
                        next.push(s.clone());
                        next
                    })
                })
                .collect();
        }
        out.into_iter().map(Tuple).collect()
    }

    fn act(&self, f: &OrdinalMap, s: &Self::Simplex) -> Self::Simplex {
        Tuple(s.0.iter().map(|x| self.base.act(f, x)).collect())
    }
}

/// Levels `0..=D` of a view with face and degeneracy tables.
///
/// `faces["k,i"][j]` is the index in level `k-1` of `d_i` of simplex `j` in
/// level `k`; `degeneracies["k,i"][j]` is the index in level `k+1` of `s_i` of
/// simplex `j` in level `k` (present for `k < D`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Materialized {
    pub levels: Vec<Vec<String>>,
    pub faces: BTreeMap<String, Vec<usize>>,
    pub degeneracies: BTreeMap<String, Vec<usize>>,
}

pub fn materialize<X: SimplicialSetView>(x: &X, max_dim: usize) -> Materialized {
    let levels: Vec<Vec<X::Simplex>> = (0..=max_dim).map(|n| x.level(n)).collect();
    let index: Vec<HashMap<&X::Simplex, usize>> = levels
        .iter()
        .map(|l| l.iter().enumerate().map(|(j, s)| (s, j)).collect())
        .collect();
    let mut faces = BTreeMap::new();
    let mut degeneracies = BTreeMap::new();
    for k in 0..=max_dim {
        if k >= 1 {
            for i in 0..=k {
                let table = levels[k]
                    .iter()
                    .map(|s| index[k - 1][&x.face(k, i, s)])
                    .collect();
                faces.insert(format!("{k},{i}"), table);
            }
        }
        if k < max_dim {
            for i in 0..=k {
                let table = levels[k]
                    .iter()
                    .map(|s| index[k + 1][&x.degeneracy(k, i, s)])
                    .collect();
                degeneracies.insert(format!("{k},{i}"), table);
            }
        }
    }
    Materialized {
        levels: levels
            .iter()
            .map(|l| l.iter().map(|s| s.to_string()).collect())
            .collect(),
        faces,
        degeneracies,
    }
}
