//! The contravariant equivalence between the simplex category and the
//! interval category.
//!
//! `F = Hom(-, [1])` sends `[n]` to `{n+1}` and `G = Hom(-, {1})` sends `{m}`
//! to `[m-1]`. An element of either hom-set is a 0/1 step function, and its
//! coordinate in the dual object is read off from its zero set: `G(g)(i)` is
//! the position of the step function whose zeros are `g⁻¹{0..=i}`. In that
//! coordinate `F` and `G` are mutually inverse and satisfy the Galois
//! condition `i ≤ G(g)(j) ⇔ g(i) ≤ j`.

use serde::Serialize;

use crate::exec::Exec;
use crate::ordinal::{interval_maps, monotone_maps, IntervalMap, OrdinalMap};

/// A hom-set into the two-point object, sorted ascending pointwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedHomSet {
    pub elements: Vec<OrdinalMap>,
}

impl OrderedHomSet {
    /// Position of `h` in the ascending order (its number of ones).
    pub fn position(&self, h: &OrdinalMap) -> Option<usize> {
        self.elements.binary_search(h).ok()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// All monotone maps `[n] -> [1]`, ascending; there are `n + 2` of them.
///
/// For maps into a two-point chain "some coordinate is smaller" and pointwise
/// order agree, and lexicographic order on value strings realizes both.
pub fn ordered_hom_delta(n: usize) -> OrderedHomSet {
    OrderedHomSet {
        elements: monotone_maps(n, 1),
    }
}

/// All interval maps `{m} -> {1}`, ascending; there are `m` of them, from the
/// step at the top (only `m` sent to 1) down to the step right after 0.
pub fn ordered_hom_interval(m: usize) -> Vec<IntervalMap> {
    interval_maps(m, 1)
}

/// `G(g) : [m-1] -> [n-1]` for `g : {n} -> {m}`, with
/// `G(g)(i) = |g⁻¹{0, ..., i}| - 1`.
pub fn functor_g(g: &IntervalMap) -> OrdinalMap {
    let n = g.src();
    let m = g.dst();
    // g is monotone, so the preimage of an initial segment is one too.
    let values = (0..m)
        .map(|i| g.values().partition_point(|&v| v <= i) - 1)
        .collect();
    OrdinalMap::from_raw(values, n - 1)
}

/// `F(f) : {m+1} -> {n+1}` for `f : [n] -> [m]`.
///
/// The step function `h` on `[m]` with `i` zeros is pulled back to `h ∘ f`,
/// which has `|{j : f(j) < i}|` zeros.
pub fn functor_f(f: &OrdinalMap) -> IntervalMap {
    let m = f.dst();
    let values = (0..=m + 1)
        .map(|i| f.values().partition_point(|&v| v < i))
        .collect();
    IntervalMap::new(values, f.src() + 1).expect("F(f) is an interval map")
}

/// `F(f)` computed literally: precompose every `h ∈ Hom([m], [1])` with `f`
/// and locate the result by zero count. Used to cross-check [`functor_f`].
pub fn functor_f_by_precomposition(f: &OrdinalMap) -> IntervalMap {
    let target = ordered_hom_delta(f.src());
    let source = ordered_hom_delta(f.dst());
    let top = source.len() - 1;
    let values = (0..source.len())
        .map(|zeros| {
            let h = &source.elements[top - zeros];
            let pulled = f.then_unchecked(h);
            let position = target
                .position(&pulled)
                .expect("pullback is a step function");
            target.len() - 1 - position
        })
        .collect();
    IntervalMap::new(values, f.src() + 1).expect("F(f) is an interval map")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum DualityCounterexample {
    /// `F(G(g)) != g`
    Interval { map: String, got: String },
    /// `G(F(f)) != f`
    Ordinal { map: String, got: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub max_n: usize,
    pub interval_maps_checked: usize,
    pub ordinal_maps_checked: usize,
    pub counterexample: Option<DualityCounterexample>,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks `FG = id` on every interval map with objects in `1..=max_n` and
/// `GF = id` on every ordinal map with objects in `0..=max_n`.
pub fn duality_selftest(max_n: usize) -> DualityReport {
    duality_selftest_with(max_n, Exec::default(), functor_f, functor_g)
}

/// [`duality_selftest`] over caller supplied functors.
pub fn duality_selftest_with<F, G>(max_n: usize, exec: Exec, f: F, g: G) -> DualityReport
where
    F: Fn(&OrdinalMap) -> IntervalMap + Sync + Send,
    G: Fn(&IntervalMap) -> OrdinalMap + Sync + Send,
{
    let intervals: Vec<IntervalMap> = (1..=max_n)
        .flat_map(|a| (1..=max_n).flat_map(move |b| interval_maps(a, b)))
        .collect();
    let ordinals: Vec<OrdinalMap> = (0..=max_n)
        .flat_map(|a| (0..=max_n).flat_map(move |b| monotone_maps(a, b)))
        .collect();

    let bad_interval = exec.find_first(&intervals, |h| {
        let back = f(&g(h));
        (back != *h).then(|| DualityCounterexample::Interval {
            map: format!("{h:?}"),
            got: format!("{back:?}"),
        })
    });
    let counterexample = bad_interval.or_else(|| {
        exec.find_first(&ordinals, |h| {
            let back = g(&f(h));
            (back != *h).then(|| DualityCounterexample::Ordinal {
                map: format!("{h:?}"),
                got: format!("{back:?}"),
            })
        })
    });
    DualityReport {
        max_n,
        interval_maps_checked: intervals.len(),
        ordinal_maps_checked: ordinals.len(),
        counterexample,
    }
}
