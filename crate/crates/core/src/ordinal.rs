//! The simplex category and the interval category, skeletally.
//!
//! The object `[n] = {0, ..., n}` of the simplex category is identified with
//! `n`, and the object `{m} = {0, ..., m}` of the interval category with `m`.
//! Morphisms are stored as dense value sequences.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monotone map `[src] -> [dst]`, a morphism of the simplex category.
///
/// `values[k]` is the image of `k`; the domain is `values.len() - 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMap", into = "RawMap")]
pub struct OrdinalMap {
    values: Vec<usize>,
    dst: usize,
}

#[derive(Serialize, Deserialize)]
struct RawMap {
    dst: usize,
    values: Vec<usize>,
}

impl TryFrom<RawMap> for OrdinalMap {
    type Error = Error;

    fn try_from(raw: RawMap) -> Result<Self> {
        OrdinalMap::new(raw.values, raw.dst)
    }
}

impl From<OrdinalMap> for RawMap {
    fn from(f: OrdinalMap) -> Self {
        RawMap {
            dst: f.dst,
            values: f.values,
        }
    }
}

fn check_monotone(values: &[usize], bound: usize) -> Result<()> {
    if values.is_empty() {
        return Err(Error::EmptyMap);
    }
    for (position, &value) in values.iter().enumerate() {
        if value > bound {
            return Err(Error::ValueOutOfRange {
                position,
                value,
                bound,
            });
        }
    }
    if let Some(position) = values.windows(2).position(|w| w[0] > w[1]) {
        return Err(Error::NotMonotone { position });
    }
    Ok(())
}

impl OrdinalMap {
    pub fn new(values: Vec<usize>, dst: usize) -> Result<Self> {
        check_monotone(&values, dst)?;
        Ok(OrdinalMap { values, dst })
    }

    /// Builds a map whose invariants the caller has already established.
    pub(crate) fn from_raw(values: Vec<usize>, dst: usize) -> Self {
        debug_assert!(
            check_monotone(&values, dst).is_ok(),
            "{values:?} -> [{dst}]"
        );
        OrdinalMap { values, dst }
    }

    pub fn identity(n: usize) -> Self {
        OrdinalMap::from_raw((0..=n).collect(), n)
    }

    /// The constant map `[n] -> [dst]` with value `value`.
    pub fn constant(n: usize, value: usize, dst: usize) -> Result<Self> {
        OrdinalMap::new(vec![value; n + 1], dst)
    }

    pub fn src(&self) -> usize {
        self.values.len() - 1
    }

    pub fn dst(&self) -> usize {
        self.dst
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn at(&self, k: usize) -> usize {
        self.values[k]
    }

    pub fn is_identity(&self) -> bool {
        self.dst == self.src() && self.values.iter().enumerate().all(|(k, &v)| k == v)
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.values[0] == 0
            && self.values[self.src()] == self.dst
            && self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    /// Diagrammatic composition: first `self`, then `g`.
    pub fn then(&self, g: &OrdinalMap) -> Result<OrdinalMap> {
        if self.dst != g.src() {
            return Err(Error::MismatchedObjects {
                left: self.dst,
                right: g.src(),
            });
        }
        Ok(OrdinalMap::from_raw(
            self.values.iter().map(|&v| g.values[v]).collect(),
            g.dst,
        ))
    }

    /// Same as [`then`](Self::then) for callers that have checked the objects.
    ///
    /// Panics if `self.dst() != g.src()`.
    pub fn then_unchecked(&self, g: &OrdinalMap) -> OrdinalMap {
        assert_eq!(self.dst, g.src(), "composing {self} with {g}");
        OrdinalMap::from_raw(self.values.iter().map(|&v| g.values[v]).collect(), g.dst)
    }
}

impl fmt::Display for OrdinalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_values(f, &self.values, self.dst)
    }
}

impl fmt::Debug for OrdinalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        write_values(f, &self.values, self.dst)?;
        write!(f, "):[{}]->[{}]", self.src(), self.dst)
    }
}

/// Value strings: digits run together when every value fits in one digit,
/// dot separated otherwise.
fn write_values(f: &mut fmt::Formatter<'_>, values: &[usize], bound: usize) -> fmt::Result {
    if bound < 10 {
        for v in values {
            write!(f, "{v}")?;
        }
        Ok(())
    } else {
        for (k, v) in values.iter().enumerate() {
            if k > 0 {
                write!(f, ".")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// `compose(f, g) = g ∘ f`; requires `f.dst() == g.src()`.
pub fn compose(f: &OrdinalMap, g: &OrdinalMap) -> Result<OrdinalMap> {
    f.then(g)
}

/// The coface `[n-1] -> [n]` whose image omits `i`.
pub fn face(n: usize, i: usize) -> Result<OrdinalMap> {
    if n == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    Ok(OrdinalMap::from_raw(
        (0..n).map(|k| if k < i { k } else { k + 1 }).collect(),
        n,
    ))
}

/// The codegeneracy `[n+1] -> [n]` hitting `i` twice.
pub fn degeneracy(n: usize, i: usize) -> Result<OrdinalMap> {
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    Ok(OrdinalMap::from_raw(
        (0..=n + 1)
            .map(|k| if k <= i { k } else { k - 1 })
            .collect(),
        n,
    ))
}

/// Order reversal on both ends: `k ↦ dst - f(src - k)`.
pub fn opposite(f: &OrdinalMap) -> OrdinalMap {
    let n = f.src();
    OrdinalMap::from_raw((0..=n).map(|k| f.dst - f.values[n - k]).collect(), f.dst)
}

/// `[a] * [b] = [a + b + 1]`.
pub fn concat_objects(a: usize, b: usize) -> usize {
    a + b + 1
}

/// Blockwise concatenation `f * g : [n1 + m1 + 1] -> [n2 + m2 + 1]`.
///
/// The second block is shifted past the first codomain so the result lands in
/// the concatenated object.
pub fn concat_maps(f: &OrdinalMap, g: &OrdinalMap) -> OrdinalMap {
    let offset = f.dst + 1;
    let mut values = Vec::with_capacity(f.values.len() + g.values.len());
    values.extend_from_slice(&f.values);
    values.extend(g.values.iter().map(|&v| v + offset));
    OrdinalMap::from_raw(values, concat_objects(f.dst, g.dst))
}

/// Every monotone map `[src] -> [dst]`, in lexicographic order of values.
pub fn monotone_maps(src: usize, dst: usize) -> Vec<OrdinalMap> {
    let mut out = Vec::with_capacity(binomial(src + dst + 1, dst));
    let mut current = vec![0usize; src + 1];
    loop {
        out.push(OrdinalMap::from_raw(current.clone(), dst));
        // Advance to the lexicographic successor among nondecreasing sequences.
        let Some(pos) = current.iter().rposition(|&v| v < dst) else {
            return out;
        };
        let next = current[pos] + 1;
        for v in &mut current[pos..] {
            *v = next;
        }
    }
}

/// Number of monotone maps `[src] -> [dst]`.
pub fn count_monotone_maps(src: usize, dst: usize) -> usize {
    binomial(src + dst + 1, dst)
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// A face or degeneracy generator of the simplex category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Generator {
    /// `face(n, i) : [n-1] -> [n]`
    Face { n: usize, i: usize },
    /// `degeneracy(n, i) : [n+1] -> [n]`
    Degeneracy { n: usize, i: usize },
}

impl Generator {
    pub fn to_map(self) -> OrdinalMap {
        match self {
            Generator::Face { n, i } => face(n, i),
            Generator::Degeneracy { n, i } => degeneracy(n, i),
        }
        .expect("generator indices are valid by construction")
    }
}

/// Canonical epi-mono factorization of `f`.
///
/// The result is listed in application order: first the degeneracies, with
/// descending indices, then the faces, with ascending indices. Composing the
/// list left to right reproduces `f`; an identity yields an empty list.
pub fn factorize(f: &OrdinalMap) -> Vec<Generator> {
    let mut gens = Vec::new();
    let n = f.src();
    // Each repeat position k (f(k) = f(k+1)) is collapsed by one degeneracy.
    let repeats: Vec<usize> = (0..n).filter(|&k| f.at(k) == f.at(k + 1)).collect();
    let mut level = n;
    for &k in repeats.iter().rev() {
        level -= 1;
        gens.push(Generator::Degeneracy { n: level, i: k });
    }
    let mut image = f.values.clone();
    image.dedup();
    let missing = (0..=f.dst).filter(|v| image.binary_search(v).is_err());
    for (level, j) in (image.len()..).zip(missing) {
        gens.push(Generator::Face { n: level, i: j });
    }
    gens
}

/// Composes a generator list in application order.
pub fn recompose(src: usize, gens: &[Generator]) -> Result<OrdinalMap> {
    gens.iter()
        .try_fold(OrdinalMap::identity(src), |acc, g| acc.then(&g.to_map()))
}

/// A monotone, endpoint preserving map `{src} -> {dst}` of the interval
/// category.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IntervalMap {
    values: Vec<usize>,
    dst: usize,
}

impl IntervalMap {
    pub fn new(values: Vec<usize>, dst: usize) -> Result<Self> {
        check_monotone(&values, dst)?;
        let m = values.len() - 1;
        if m < 1 {
            return Err(Error::IntervalTooSmall { m });
        }
        if dst < 1 {
            return Err(Error::IntervalTooSmall { m: dst });
        }
        if values[0] != 0 || values[m] != dst {
            return Err(Error::NotEndpointPreserving);
        }
        Ok(IntervalMap { values, dst })
    }

    pub fn identity(m: usize) -> Result<Self> {
        IntervalMap::new((0..=m).collect(), m)
    }

    pub fn src(&self) -> usize {
        self.values.len() - 1
    }

    pub fn dst(&self) -> usize {
        self.dst
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn at(&self, k: usize) -> usize {
        self.values[k]
    }

    pub fn then(&self, g: &IntervalMap) -> Result<IntervalMap> {
        if self.dst != g.src() {
            return Err(Error::MismatchedObjects {
                left: self.dst,
                right: g.src(),
            });
        }
        Ok(IntervalMap {
            values: self.values.iter().map(|&v| g.values[v]).collect(),
            dst: g.dst,
        })
    }
}

impl fmt::Display for IntervalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_values(f, &self.values, self.dst)
    }
}

impl fmt::Debug for IntervalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        write_values(f, &self.values, self.dst)?;
        write!(f, "):{{{}}}->{{{}}}", self.src(), self.dst)
    }
}

/// Every interval map `{src} -> {dst}`, lexicographically.
pub fn interval_maps(src: usize, dst: usize) -> Vec<IntervalMap> {
    if src < 1 || dst < 1 {
        return Vec::new();
    }
    // Endpoints are pinned; the interior is any monotone sequence.
    if src == 1 {
        return vec![IntervalMap {
            values: vec![0, dst],
            dst,
        }];
    }
    monotone_maps(src - 2, dst)
        .into_iter()
        .map(|inner| {
            let mut values = Vec::with_capacity(src + 1);
            values.push(0);
            values.extend_from_slice(inner.values());
            values.push(dst);
            IntervalMap { values, dst }
        })
        .collect()
}
