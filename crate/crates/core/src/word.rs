//! Endofunctors of the simplex category as words over `{Id, Op, C0}`.
//!
//! A word `[L0, L1, ..., Lk]` denotes the concatenation `L0 + L1 + ... + Lk`:
//! on objects `[n] ↦ [n] * ... * [n]` with `C0` contributing `[0]`, and on
//! morphisms the blockwise concatenation of the letter actions.
//!
//! The functor is recovered from its level 0 and level 1 data (a
//! [`SubdivisionOracle`]) by reading the zigzag `T*(Δ¹)`: one gap per letter,
//! spanned by a forward edge (`Id`), a backward edge (`Op`) or nothing (`C0`).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::duality::ordered_hom_delta;
use crate::error::{Error, Result};
use crate::ordinal::{concat_maps, degeneracy, face, monotone_maps, opposite, OrdinalMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Letter {
    Id,
    Op,
    C0,
}

impl Letter {
    pub const ALL: [Letter; 3] = [Letter::Id, Letter::Op, Letter::C0];

    pub fn eval_object(self, n: usize) -> usize {
        match self {
            Letter::Id | Letter::Op => n,
            Letter::C0 => 0,
        }
    }

    pub fn eval_map(self, f: &OrdinalMap) -> OrdinalMap {
        match self {
            Letter::Id => f.clone(),
            Letter::Op => opposite(f),
            Letter::C0 => OrdinalMap::identity(0),
        }
    }

    pub fn gap(self) -> Gap {
        match self {
            Letter::Id => Gap::Forward,
            Letter::Op => Gap::Backward,
            Letter::C0 => Gap::Empty,
        }
    }

    fn from_gap(gap: Gap) -> Letter {
        match gap {
            Gap::Forward => Letter::Id,
            Gap::Backward => Letter::Op,
            Gap::Empty => Letter::C0,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::Id => "Id",
            Letter::Op => "Op",
            Letter::C0 => "C0",
        })
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Id" => Ok(Letter::Id),
            "Op" => Ok(Letter::Op),
            "C0" => Ok(Letter::C0),
            other => Err(Error::WordParse(format!(
                "unknown letter {other:?} (expected Id, Op or C0)"
            ))),
        }
    }
}

/// A nonempty sum of basis functors.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::WordParse("a word needs at least one letter".into()));
        }
        Ok(Word(letters))
    }

    pub fn letter(letter: Letter) -> Self {
        Word(vec![letter])
    }

    /// Segal's subdivision `Op + Id`.
    pub fn segal() -> Self {
        Word(vec![Letter::Op, Letter::Id])
    }

    /// `E^k`, Segal's subdivision applied `k` times (`k ≥ 1`).
    pub fn segal_power(k: usize) -> Self {
        let mut w = Word::segal();
        for _ in 1..k {
            w = compose(&w, &Word::segal());
        }
        w
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn c0_count(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::C0).count()
    }

    /// Every word of exactly `len` letters, in lexicographic letter order.
    pub fn all_of_length(len: usize) -> Vec<Word> {
        let mut words = vec![Vec::new()];
        for _ in 0..len {
            words = words
                .into_iter()
                .flat_map(|w: Vec<Letter>| {
                    Letter::ALL.iter().map(move |&l| {
                        let mut next = w.clone();
                        next.push(l);
                        next
                    })
                })
                .collect();
        }
        words
            .into_iter()
            .filter_map(|w| Word::new(w).ok())
            .collect()
    }

    /// Every word with `1..=max_len` letters.
    pub fn all_up_to(max_len: usize) -> Vec<Word> {
        (1..=max_len).flat_map(Word::all_of_length).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, letter) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("+")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Err(Error::WordParse("empty input".into()));
        }
        let letters = s
            .split('+')
            .map(|part| part.trim().parse())
            .collect::<Result<Vec<Letter>>>()?;
        Word::new(letters)
    }
}

impl TryFrom<String> for Word {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Word> for String {
    fn from(w: Word) -> String {
        w.to_string()
    }
}

/// `T(n)`: the word sends `[n]` to `[eval_object(w, n)]`.
pub fn eval_object(w: &Word, n: usize) -> usize {
    let active = w.len() - w.c0_count();
    active * n + w.len() - 1
}

/// `T(f)`: letter actions concatenated left to right.
pub fn eval_map(w: &Word, f: &OrdinalMap) -> OrdinalMap {
    let mut letters = w.letters().iter();
    let first = letters.next().expect("words are nonempty").eval_map(f);
    letters.fold(first, |acc, l| concat_maps(&acc, &l.eval_map(f)))
}

/// `w1 + w2`.
pub fn sum(w1: &Word, w2: &Word) -> Word {
    let mut letters = w1.0.clone();
    letters.extend_from_slice(&w2.0);
    Word(letters)
}

/// `Op ∘ w`: reverse the summands and flip each one.
fn op_after(inner: &Word) -> Vec<Letter> {
    inner
        .0
        .iter()
        .rev()
        .map(|l| match l {
            Letter::Id => Letter::Op,
            Letter::Op => Letter::Id,
            Letter::C0 => Letter::C0,
        })
        .collect()
}

/// `outer ∘ inner`, distributing over the summands of `outer`.
pub fn compose(outer: &Word, inner: &Word) -> Word {
    let mut letters = Vec::new();
    for l in &outer.0 {
        match l {
            Letter::Id => letters.extend_from_slice(&inner.0),
            Letter::Op => letters.extend(op_after(inner)),
            Letter::C0 => letters.push(Letter::C0),
        }
    }
    Word(letters)
}

/// The induced functor preserves weak equivalences exactly when no summand is
/// the constant functor.
pub fn is_we_preserving(w: &Word) -> bool {
    w.c0_count() == 0
}

/// What joins two consecutive vertices of a simplicial interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Gap {
    /// A nondegenerate edge from the lower vertex to the upper one.
    Forward,
    /// A nondegenerate edge from the upper vertex to the lower one.
    Backward,
    /// No edge.
    Empty,
}

impl fmt::Display for Gap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Gap::Forward => "forward",
            Gap::Backward => "backward",
            Gap::Empty => "none",
        })
    }
}

/// A one dimensional zigzag on vertices listed in ascending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialInterval {
    pub gaps: Vec<Gap>,
}

impl SimplicialInterval {
    pub fn vertex_count(&self) -> usize {
        self.gaps.len() + 1
    }

    /// A zigzag is contractible iff it is connected iff no gap is empty.
    pub fn is_connected(&self) -> bool {
        !self.gaps.contains(&Gap::Empty)
    }

    pub fn components(&self) -> usize {
        1 + self.gaps.iter().filter(|&&g| g == Gap::Empty).count()
    }

    /// Pointed union `self ∨ other`: the bottom vertex of `self` is glued to
    /// the top vertex of `other`, so in ascending order `other` comes first.
    pub fn wedge(&self, other: &SimplicialInterval) -> SimplicialInterval {
        let mut gaps = other.gaps.clone();
        gaps.extend_from_slice(&self.gaps);
        SimplicialInterval { gaps }
    }
}

/// `T*(Δ¹)` read straight off the word: the gap at ascending position `g`
/// belongs to the letter at word position `len - 1 - g`.
pub fn interval_of(w: &Word) -> SimplicialInterval {
    SimplicialInterval {
        gaps: w.letters().iter().rev().map(|l| l.gap()).collect(),
    }
}

/// Level 0 and level 1 data of an endofunctor: `T([0])`, `T([1])`, `T(d⁰)`,
/// `T(d¹)` and `T(s⁰)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionOracle {
    pub t0: usize,
    pub t1: usize,
    pub td0: OrdinalMap,
    pub td1: OrdinalMap,
    pub ts0: OrdinalMap,
}

impl SubdivisionOracle {
    /// Object bookkeeping plus the images of `s⁰d⁰ = s⁰d¹ = id`.
    pub fn validate(&self) -> Result<()> {
        let malformed = |msg: String| Err(Error::MalformedOracle(msg));
        for (name, map) in [("td0", &self.td0), ("td1", &self.td1)] {
            if map.src() != self.t0 || map.dst() != self.t1 {
                return malformed(format!(
                    "{name} must map [{}] -> [{}], got {map:?}",
                    self.t0, self.t1
                ));
            }
        }
        if self.ts0.src() != self.t1 || self.ts0.dst() != self.t0 {
            return malformed(format!(
                "ts0 must map [{}] -> [{}], got {:?}",
                self.t1, self.t0, self.ts0
            ));
        }
        let id = OrdinalMap::identity(self.t0);
        for (name, d) in [("td0", &self.td0), ("td1", &self.td1)] {
            if d.then_unchecked(&self.ts0) != id {
                return malformed(format!("ts0 does not split {name}"));
            }
        }
        Ok(())
    }
}

pub fn oracle_of(w: &Word) -> SubdivisionOracle {
    let gen = |m: Result<OrdinalMap>| eval_map(w, &m.expect("generator in range"));
    SubdivisionOracle {
        t0: eval_object(w, 0),
        t1: eval_object(w, 1),
        td0: gen(face(1, 0)),
        td1: gen(face(1, 1)),
        ts0: gen(degeneracy(0, 0)),
    }
}

/// One nondegenerate edge of `T*(Δ¹)`, by vertex positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalEdge {
    pub edge: OrdinalMap,
    pub from: usize,
    pub to: usize,
}

/// The vertices (ascending) and nondegenerate edges of `T*(Δ¹)` as computed
/// from the oracle alone.
pub fn interval_edges(o: &SubdivisionOracle) -> Result<(Vec<OrdinalMap>, Vec<IntervalEdge>)> {
    o.validate()?;
    let vertices = ordered_hom_delta(o.t0);
    let degenerate: Vec<OrdinalMap> = vertices
        .elements
        .iter()
        .map(|v| o.ts0.then_unchecked(v))
        .collect();
    let mut edges = Vec::new();
    for e in monotone_maps(o.t1, 1) {
        if degenerate.contains(&e) {
            continue;
        }
        let locate = |m: OrdinalMap| vertices.position(&m).expect("vertex of T*(Δ¹)");
        let from = locate(o.td1.then_unchecked(&e));
        let to = locate(o.td0.then_unchecked(&e));
        edges.push(IntervalEdge { edge: e, from, to });
    }
    Ok((vertices.elements, edges))
}

/// Recovers the word of an endofunctor from its level 0 and level 1 data.
///
/// Fails with [`Error::MalformedOracle`] unless the nondegenerate edges of
/// `T*(Δ¹)` form a zigzag between consecutive vertices with at most one edge
/// per gap, and the recovered word reproduces the oracle.
pub fn decompose(o: &SubdivisionOracle) -> Result<Word> {
    let (vertices, edges) = interval_edges(o)?;
    let gap_count = vertices.len() - 1;
    let mut gaps = vec![Gap::Empty; gap_count];
    let mut seen = vec![false; gap_count];
    for IntervalEdge { edge, from, to } in edges {
        if from.abs_diff(to) != 1 {
            return Err(Error::MalformedOracle(format!(
                "edge {edge} joins non-consecutive vertices {} and {}",
                vertices[from], vertices[to]
            )));
        }
        let g = from.min(to);
        if seen[g] {
            return Err(Error::MalformedOracle(format!(
                "gap {g} carries more than one nondegenerate edge"
            )));
        }
        seen[g] = true;
        gaps[g] = if from < to {
            Gap::Forward
        } else {
            Gap::Backward
        };
    }
    let word = Word(gaps.iter().rev().map(|&g| Letter::from_gap(g)).collect());
    if oracle_of(&word) != *o {
        return Err(Error::MalformedOracle(format!(
            "zigzag reads as {word} but that word has different level 1 data"
        )));
    }
    Ok(word)
}
