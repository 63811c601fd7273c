//! Commutators of the traceless, non-central part of the centralizer basis.

use serde::{Deserialize, Serialize};

use super::basis::{basis_m, m_coefficients};
use crate::error::{Error, Result};
use crate::linalg::Mat4;
use crate::scalar::Scalar;

/// Row and column order of the commutator table.
pub const TABLE_INDICES: [usize; 6] = [2, 3, 4, 6, 7, 8];

/// `[Mᵢ, Mⱼ]` expressed in the `M` basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CommutatorEntry {
    Zero,
    /// `coeff · M_index`.
    Multiple {
        coeff: i64,
        index: usize,
    },
}

impl std::fmt::Display for CommutatorEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Self::Zero => write!(f, "0"),
            Self::Multiple { coeff, index } => write!(f, "{coeff}M{index}"),
        }
    }
}

/// Rows and columns follow [`TABLE_INDICES`].
pub type CommutatorTable = [[CommutatorEntry; 6]; 6];

/// Writes `A` as `c·Mₖ` for a single `k`, or zero. Fails if `A` has a
/// component outside the span of `M₁..M₈`, more than one nonzero
/// coefficient, or a non-integer coefficient.
pub fn decompose_single(a: &Mat4<i64>, i: usize, j: usize) -> Result<CommutatorEntry> {
    let fail = || Error::DecompositionFailure(i, j);
    let four_a = a.scale(4);
    let c = m_coefficients(&four_a);
    let back = c.iter().enumerate().fold(Mat4::zero(), |acc, (k, &v)| {
        acc + basis_m::<i64>(k + 1).scale(v)
    });
    if back != four_a {
        return Err(fail());
    }
    let nonzero: Vec<(usize, i64)> = c
        .iter()
        .enumerate()
        .filter(|(_, &v)| v != 0)
        .map(|(k, &v)| (k + 1, v))
        .collect();
    match nonzero.as_slice() {
        [] => Ok(CommutatorEntry::Zero),
        [(k, v)] if v % 4 == 0 => Ok(CommutatorEntry::Multiple {
            coeff: v / 4,
            index: *k,
        }),
        _ => Err(fail()),
    }
}

/// `[Mᵢ, Mⱼ]` for `i, j ∈ {2,3,4,6,7,8}`, computed in exact integer arithmetic.
pub fn commutator_table() -> Result<CommutatorTable> {
    let mut table = [[CommutatorEntry::Zero; 6]; 6];
    for (r, &i) in TABLE_INDICES.iter().enumerate() {
        for (c, &j) in TABLE_INDICES.iter().enumerate() {
            let br = basis_m::<i64>(i).commutator(&basis_m(j));
            table[r][c] = decompose_single(&br, i, j)?;
        }
    }
    Ok(table)
}

/// Looks up `[Mᵢ, Mⱼ]` in a table by basis index.
pub fn table_entry(table: &CommutatorTable, i: usize, j: usize) -> Option<CommutatorEntry> {
    let r = TABLE_INDICES.iter().position(|&k| k == i)?;
    let c = TABLE_INDICES.iter().position(|&k| k == j)?;
    Some(table[r][c])
}

/// Generic ring version of the decomposition, returning all eight
/// coefficients; used to cross-check the table over rationals.
pub fn commutator_coefficients<T: Scalar>(i: usize, j: usize) -> [T; 8] {
    m_coefficients(&basis_m::<T>(i).commutator(&basis_m(j)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational64;

    #[test]
    fn spot_entries() {
        let t = commutator_table().unwrap();
        let m = |coeff, index| CommutatorEntry::Multiple { coeff, index };
        assert_eq!(table_entry(&t, 2, 3), Some(m(2, 8)));
        assert_eq!(table_entry(&t, 3, 4), Some(m(-2, 6)));
        assert_eq!(table_entry(&t, 6, 7), Some(m(-2, 8)));
        assert_eq!(table_entry(&t, 8, 6), Some(m(-2, 7)));
        assert_eq!(table_entry(&t, 2, 2), Some(CommutatorEntry::Zero));
        assert_eq!(table_entry(&t, 1, 2), None);
    }

    #[test]
    fn antisymmetric() {
        let t = commutator_table().unwrap();
        for r in 0..6 {
            for c in 0..6 {
                let flipped = match t[c][r] {
                    CommutatorEntry::Zero => CommutatorEntry::Zero,
                    CommutatorEntry::Multiple { coeff, index } => CommutatorEntry::Multiple {
                        coeff: -coeff,
                        index,
                    },
                };
                assert_eq!(t[r][c], flipped);
            }
        }
    }

    #[test]
    fn rational_agrees_with_integer() {
        let t = commutator_table().unwrap();
        for &i in &TABLE_INDICES {
            for &j in &TABLE_INDICES {
                let q = commutator_coefficients::<Rational64>(i, j);
                let expect: [Rational64; 8] = match table_entry(&t, i, j).unwrap() {
                    CommutatorEntry::Zero => [Rational64::from_integer(0); 8],
                    CommutatorEntry::Multiple { coeff, index } => std::array::from_fn(|k| {
                        Rational64::from_integer(if k + 1 == index { coeff } else { 0 })
                    }),
                };
                assert_eq!(q, expect);
            }
        }
    }

    #[test]
    fn outside_span_is_rejected() {
        let p1 = super::super::basis::basis_p::<i64>(1);
        assert_eq!(
            decompose_single(&p1, 0, 0),
            Err(Error::DecompositionFailure(0, 0))
        );
        let two = basis_m::<i64>(2) + basis_m(3);
        assert!(decompose_single(&two, 0, 0).is_err());
    }
}
