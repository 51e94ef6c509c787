use std::collections::HashMap;

use serde::Serialize;

use super::matrix::IntegerMatrix;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::simplicial::SimplicialSetView;

/// Normalized chains of a simplicial set through some dimension `D`.
///
/// `boundaries[k]` maps degree `k` to degree `k - 1`; `boundaries[0]` is the
/// zero map to the zero group. Columns are indexed by `bases[k]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainComplex {
    pub bases: Vec<Vec<String>>,
    pub boundaries: Vec<IntegerMatrix>,
    /// Number of nondegenerate simplices one degree above the top. When it is
    /// zero the homology in the top degree is exact.
    pub above_top: usize,
}

impl ChainComplex {
    pub fn top_degree(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn rank(&self, k: usize) -> usize {
        self.bases[k].len()
    }

    /// Alternating sum of basis sizes.
    pub fn euler_characteristic(&self) -> i64 {
        self.bases
            .iter()
            .enumerate()
            .map(|(k, b)| {
                if k % 2 == 0 {
                    b.len() as i64
                } else {
                    -(b.len() as i64)
                }
            })
            .sum()
    }

    /// Verifies `∂_{k-1} ∂_k = 0` in every degree.
    pub fn check_nilpotent(&self) -> Result<()> {
        for k in 2..self.boundaries.len() {
            if !self.boundaries[k - 1].mul(&self.boundaries[k]).is_zero() {
                return Err(Error::BoundaryNotNilpotent { degree: k });
            }
        }
        Ok(())
    }
}

pub fn chain_complex<X: SimplicialSetView>(x: &X, max_dim: usize) -> Result<ChainComplex> {
    chain_complex_with(x, max_dim, Exec::default())
}

/// Builds the normalized complex: the boundary of a nondegenerate `σ` is
/// `Σ (-1)^i d_i σ` with degenerate faces dropped.
pub fn chain_complex_with<X: SimplicialSetView>(
    x: &X,
    max_dim: usize,
    exec: Exec,
) -> Result<ChainComplex> {
    let bases: Vec<Vec<X::Simplex>> = (0..=max_dim)
        .map(|k| x.nondegenerate_with(k, exec))
        .collect();
    let above_top = x.nondegenerate_with(max_dim + 1, exec).len();

    let mut boundaries = vec![IntegerMatrix::zeros(0, bases[0].len())];
    for k in 1..=max_dim {
        let row_of: HashMap<&X::Simplex, usize> = bases[k - 1]
            .iter()
            .enumerate()
            .map(|(r, s)| (s, r))
            .collect();
        let columns: Vec<Vec<(usize, i64)>> = exec.map(&bases[k], |s| {
            (0..=k)
                .filter_map(|i| {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    row_of.get(&x.face(k, i, s)).map(|&r| (r, sign))
                })
                .collect()
        });
        let mut m = IntegerMatrix::zeros(bases[k - 1].len(), bases[k].len());
        for (c, column) in columns.into_iter().enumerate() {
            for (r, sign) in column {
                m[(r, c)] += sign;
            }
        }
        boundaries.push(m);
    }

    let complex = ChainComplex {
        bases: bases
            .iter()
            .map(|b| b.iter().map(|s| s.to_string()).collect())
            .collect(),
        boundaries,
        above_top,
    };
    complex.check_nilpotent()?;
    Ok(complex)
}
