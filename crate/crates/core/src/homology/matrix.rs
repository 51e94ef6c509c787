//! Dense integer matrices and Smith normal form over ℤ.
//!
//! Entries are `i64`; every arithmetic step is checked, and an overflow
//! aborts rather than producing a wrong answer.

use std::fmt;

use serde::Serialize;

#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

fn checked(v: Option<i64>) -> i64 {
    v.expect("integer overflow in exact matrix arithmetic")
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntegerMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Panics unless every row has the same length.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntegerMatrix {
            rows: rows.len(),
            cols,
            entries: rows.concat(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    /// Panics on a shape mismatch.
    pub fn mul(&self, rhs: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let mut out = IntegerMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let term = checked(a.checked_mul(rhs[(k, j)]));
                    out[(i, j)] = checked(out[(i, j)].checked_add(term));
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.entries.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[target] -= q * row[source]
    fn sub_row(&mut self, target: usize, source: usize, q: i64) {
        if q == 0 {
            return;
        }
        for j in 0..self.cols {
            let s = self[(source, j)];
            if s != 0 {
                let t = checked(q.checked_mul(s));
                self[(target, j)] = checked(self[(target, j)].checked_sub(t));
            }
        }
    }

    /// col[target] -= q * col[source]
    fn sub_col(&mut self, target: usize, source: usize, q: i64) {
        if q == 0 {
            return;
        }
        for i in 0..self.rows {
            let s = self[(i, source)];
            if s != 0 {
                let t = checked(q.checked_mul(s));
                self[(i, target)] = checked(self[(i, target)].checked_sub(t));
            }
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntegerMatrix {
    type Output = i64;

    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntegerMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegerMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

/// The nonzero invariant factors `d_1 | d_2 | ... | d_r` and the rank `r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmithForm {
    pub diagonal: Vec<i64>,
    pub rank: usize,
}

impl SmithForm {
    /// Invariant factors greater than one: the torsion they produce.
    pub fn torsion(&self) -> Vec<i64> {
        self.diagonal.iter().copied().filter(|&d| d > 1).collect()
    }
}

/// Position of the nonzero entry of least absolute value in the lower right
/// block starting at `(t, t)`.
fn smallest_pivot(m: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, i64)> = None;
    for i in t..m.rows {
        for j in t..m.cols {
            let a = m[(i, j)].abs();
            if a != 0 && best.is_none_or(|(_, _, b)| a < b) {
                best = Some((i, j, a));
                if a == 1 {
                    return Some((i, j));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Diagonalizes by unimodular row and column operations.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let mut a = m.clone();
    let limit = a.rows.min(a.cols);
    let mut t = 0;
    while t < limit {
        let Some((pi, pj)) = smallest_pivot(&a, t) else {
            break;
        };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        loop {
            // Clear column t below the pivot, then row t right of it; a
            // nonzero remainder becomes the new, strictly smaller pivot.
            let mut dirty = false;
            for i in t + 1..a.rows {
                let q = a[(i, t)] / a[(t, t)];
                a.sub_row(i, t, q);
                if a[(i, t)] != 0 {
                    dirty = true;
                }
            }
            for j in t + 1..a.cols {
                let q = a[(t, j)] / a[(t, t)];
                a.sub_col(j, t, q);
                if a[(t, j)] != 0 {
                    dirty = true;
                }
            }
            if dirty {
                let (pi, pj) = smallest_in_cross(&a, t);
                a.swap_rows(t, pi);
                a.swap_cols(t, pj);
                continue;
            }
            // Pivot must divide the rest of the block.
            let p = a[(t, t)];
            let offender = (t + 1..a.rows).find(|&i| (t + 1..a.cols).any(|j| a[(i, j)] % p != 0));
            match offender {
                Some(i) => a.sub_row(t, i, -1),
                None => break,
            }
        }
        if a[(t, t)] < 0 {
            a[(t, t)] = -a[(t, t)];
        }
        t += 1;
    }
    let diagonal: Vec<i64> = (0..t).map(|i| a[(i, i)]).collect();
    SmithForm {
        rank: diagonal.len(),
        diagonal,
    }
}

/// The smallest nonzero entry in row `t` or column `t` (from `t` on).
fn smallest_in_cross(a: &IntegerMatrix, t: usize) -> (usize, usize) {
    let column = (t..a.rows).map(|i| (i, t));
    let row = (t + 1..a.cols).map(|j| (t, j));
    column
        .chain(row)
        .filter(|&(i, j)| a[(i, j)] != 0)
        .min_by_key(|&(i, j)| a[(i, j)].abs())
        .expect("the pivot itself is nonzero")
}

/// Rank over ℚ by fraction-free (Bareiss) elimination, independent of the
/// Smith reduction.
pub fn rational_rank(m: &IntegerMatrix) -> usize {
    let mut a: Vec<Vec<i128>> = (0..m.rows)
        .map(|i| m.row(i).iter().map(|&e| i128::from(e)).collect())
        .collect();
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..m.cols {
        let Some(p) = (rank..m.rows).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..m.rows {
            for j in col + 1..m.cols {
                let v = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
                a[i][j] = v / prev;
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        rank += 1;
        if rank == m.rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    #[test]
    fn examples() {
        let z = IntegerMatrix::zeros(3, 2);
        assert_eq!(smith_normal_form(&z).rank, 0);
        assert_eq!(
            smith_normal_form(&IntegerMatrix::identity(3)).diagonal,
            [1, 1, 1]
        );
        let m = IntegerMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(smith_normal_form(&m).diagonal, [1, 6]);
        let m = IntegerMatrix::from_rows(&[vec![2, 0], vec![0, 4]]);
        assert_eq!(smith_normal_form(&m).diagonal, [2, 4]);
        assert_eq!(smith_normal_form(&m).torsion(), [2, 4]);
    }

    #[test]
    fn reference_example() {
        let m = IntegerMatrix::from_rows(&[
            vec![-6, 111, -36, 6],
            vec![5, -672, 210, 74],
            vec![0, -255, 81, 24],
            vec![-7, 255, -81, -10],
        ]);
        assert_eq!(smith_normal_form(&m).diagonal, [1, 3, 21]);
        assert_eq!(rational_rank(&m), 3);
    }

    #[test]
    fn empty_shapes() {
        for (r, c) in [(0, 0), (0, 3), (4, 0)] {
            let m = IntegerMatrix::zeros(r, c);
            assert_eq!(smith_normal_form(&m).rank, 0);
            assert_eq!(rational_rank(&m), 0);
        }
    }

    #[test]
    fn products() {
        let a = IntegerMatrix::from_rows(&[vec![1, -1, 0], vec![0, 1, -1]]);
        let b = IntegerMatrix::from_rows(&[vec![1], vec![1], vec![1]]);
        assert!(a.mul(&b).is_zero());
        assert_eq!(a.column(1), [-1, 1]);
    }

    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }

    fn det(m: &[Vec<i64>]) -> i64 {
        if m.is_empty() {
            return 1;
        }
        (0..m.len())
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| [&r[..j], &r[j + 1..]].concat())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum()
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0..1usize << n)
            .filter(|s| s.count_ones() as usize == k)
            .map(|s| (0..n).filter(|i| s >> i & 1 == 1).collect())
            .collect()
    }

    /// gcd of all k×k minors.
    fn determinantal_divisor(m: &IntegerMatrix, k: usize) -> i64 {
        let mut g = 0;
        for rows in subsets(m.rows(), k) {
            for cols in subsets(m.cols(), k) {
                let minor: Vec<Vec<i64>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| m[(i, j)]).collect())
                    .collect();
                g = gcd(g, det(&minor));
            }
        }
        g
    }

    fn small_matrix() -> impl Strategy<Value = IntegerMatrix> {
        (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-5i64..=5, c), r)
                .prop_map(|rows| IntegerMatrix::from_rows(&rows))
        })
    }

    proptest! {
        #[test]
        fn smith_matches_determinantal_divisors(m in small_matrix()) {
            let snf = smith_normal_form(&m);
            prop_assert_eq!(snf.rank, rational_rank(&m));
            prop_assert!(snf.diagonal.iter().all(|&d| d > 0));
            prop_assert!(snf.diagonal.windows(2).all(|d| d[1] % d[0] == 0));
            let mut product = 1;
            for k in 1..=m.rows().min(m.cols()) {
                let dk = determinantal_divisor(&m, k);
                if k <= snf.rank {
                    product *= snf.diagonal[k - 1];
                    prop_assert_eq!(product, dk);
                } else {
                    prop_assert_eq!(dk, 0);
                }
            }
        }
    }
}
