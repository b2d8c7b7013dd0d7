//! Exact integer and rational linear algebra.
//!
//! Dense matrices over `BigInt`/`BigRational` at desk scale (up to roughly
//! 40x40). Determinants use fraction-free Bareiss elimination; cokernels go
//! through the Smith normal form.

mod matrix;
mod snf;

pub use matrix::{IntMatrix, RationalMatrix};
pub use matrix::MatrixJson;
pub use snf::{
    bigint_strings, AbelianGroupInvariants, ImageLattice, SmithDecomposition, cokernel_invariants,
    kernel_basis, nullspace_primitive, smith_normal_form, solve_integral,
};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("matrix is singular")]
    Singular,
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("rank deficiency is not one (nullity {nullity})")]
    RankDeficiencyNotOne { nullity: usize },
    #[error("invalid matrix data: {0}")]
    BadData(String),
}

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// The empty 0x0 matrix has determinant 1.
pub fn determinant(a: &IntMatrix) -> BigInt {
    assert!(a.is_square(), "determinant requires a square matrix");
    let n = a.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = (0..n).map(|i| a.row(i).to_vec()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            // find a row below with nonzero entry in column k
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev; // exact by Bareiss
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Exact inverse over the rationals. Errors on singular input.
pub fn exact_inverse(a: &IntMatrix) -> Result<RationalMatrix, LinAlgError> {
    if !a.is_square() {
        return Err(LinAlgError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let mut work = RationalMatrix::from_int(a);
    let mut inv = RationalMatrix::identity(n);
    // Gauss-Jordan with first-nonzero pivoting; exact rationals throughout.
    for col in 0..n {
        let pivot_row = (col..n)
            .find(|&r| !work.get(r, col).is_zero())
            .ok_or(LinAlgError::Singular)?;
        work.swap_rows(col, pivot_row);
        inv.swap_rows(col, pivot_row);
        let p = work.get(col, col).clone();
        work.scale_row(col, &p.recip());
        inv.scale_row(col, &p.recip());
        for r in 0..n {
            if r != col && !work.get(r, col).is_zero() {
                let f = work.get(r, col).clone();
                work.sub_scaled_row(r, col, &f);
                inv.sub_scaled_row(r, col, &f);
            }
        }
    }
    Ok(inv)
}

/// Remove row and column `index`.
pub fn strike(a: &IntMatrix, index: usize) -> IntMatrix {
    assert!(a.is_square(), "strike requires a square matrix");
    assert!(index < a.rows(), "strike index out of range");
    let n = a.rows();
    let mut entries = Vec::with_capacity((n - 1) * (n - 1));
    for i in 0..n {
        if i == index {
            continue;
        }
        for j in 0..n {
            if j == index {
                continue;
            }
            entries.push(a.get(i, j).clone());
        }
    }
    IntMatrix::new(n - 1, n - 1, entries)
}

/// Number of arborescences toward the struck vertex: the determinant of a
/// reduced Laplacian (matrix-tree theorem for digraphs). The 0x0 reduced
/// Laplacian of a single-vertex digraph counts 1.
pub fn arborescence_count(l_reduced: &IntMatrix) -> BigInt {
    determinant(l_reduced)
}

/// True when all off-diagonal entries are nonpositive.
pub fn is_z_matrix(a: &IntMatrix) -> bool {
    if !a.is_square() {
        return false;
    }
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if i != j && a.get(i, j).is_positive() {
                return false;
            }
        }
    }
    true
}

/// All leading principal minors, computed exactly.
pub fn leading_principal_minors(a: &IntMatrix) -> Vec<BigInt> {
    assert!(a.is_square());
    (1..=a.rows())
        .map(|k| {
            let sub = a.submatrix(0..k, 0..k);
            determinant(&sub)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    #[test]
    fn determinant_cartan_a_series() {
        // det Cartan(A_{m-1}) = m, checked for m = 2..9 against cofactor recursion
        for m_size in 2..=9usize {
            let ell = m_size - 1;
            let a = IntMatrix::tridiagonal(ell, 2, -1, -1);
            assert_eq!(determinant(&a), BigInt::from(m_size));
            assert_eq!(cofactor_det(&a), BigInt::from(m_size));
        }
    }

    // independent oracle: Laplace expansion along the first row
    fn cofactor_det(a: &IntMatrix) -> BigInt {
        let n = a.rows();
        if n == 0 {
            return BigInt::one();
        }
        if n == 1 {
            return a.get(0, 0).clone();
        }
        let mut acc = BigInt::zero();
        for j in 0..n {
            if a.get(0, j).is_zero() {
                continue;
            }
            let mut entries = Vec::new();
            for i in 1..n {
                for jj in 0..n {
                    if jj != j {
                        entries.push(a.get(i, jj).clone());
                    }
                }
            }
            let minor = IntMatrix::new(n - 1, n - 1, entries);
            let term = a.get(0, j) * cofactor_det(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn determinant_identity_and_empty() {
        assert_eq!(determinant(&IntMatrix::identity(4)), BigInt::one());
        assert_eq!(determinant(&IntMatrix::identity(0)), BigInt::one());
        assert_eq!(arborescence_count(&IntMatrix::identity(0)), BigInt::one());
    }

    #[test]
    fn inverse_cartan_a2() {
        let a = m(&[&[2, -1], &[-1, 2]]);
        let inv = exact_inverse(&a).unwrap();
        let third = BigRational::new(BigInt::one(), BigInt::from(3));
        assert_eq!(inv.get(0, 0), &(third.clone() * BigInt::from(2)));
        assert_eq!(inv.get(0, 1), &third);
        // A * A^{-1} = I exactly
        let prod = inv.mul_int_left(&a);
        assert!(prod.is_identity());
    }

    #[test]
    fn inverse_identity() {
        let inv = exact_inverse(&IntMatrix::identity(3)).unwrap();
        assert!(inv.is_identity());
    }

    #[test]
    fn inverse_singular_rejected() {
        let a = m(&[&[30, -15], &[-20, 10]]);
        assert_eq!(exact_inverse(&a), Err(LinAlgError::Singular));
    }

    #[test]
    fn strike_examples() {
        let c_ext = m(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]);
        assert_eq!(strike(&c_ext, 0), m(&[&[2, -1], &[-1, 2]]));
        assert_eq!(strike(&m(&[&[30, -15], &[-20, 10]]), 0), m(&[&[10]]));
        assert_eq!(strike(&IntMatrix::identity(2), 1), IntMatrix::identity(1));
    }

    #[test]
    fn arborescence_cycle_both_orientations() {
        // Cayley digraph of Z/m with generators {1, m-1}: reduced Laplacian
        // equals Cartan(A_{m-1}), so the count is m.
        for m_size in 2..=8usize {
            let l = IntMatrix::tridiagonal(m_size - 1, 2, -1, -1);
            assert_eq!(arborescence_count(&l), BigInt::from(m_size));
        }
    }

    #[test]
    fn arborescence_klein_four_three_generators() {
        // Z/2 x Z/2 with generators (1,0),(0,1),(1,1): reduced Laplacian 4I - J
        let l = m(&[&[3, -1, -1], &[-1, 3, -1], &[-1, -1, 3]]);
        let count = arborescence_count(&l);
        assert_eq!(count, BigInt::from(16));
        assert!(count > BigInt::from(4));
    }

    #[test]
    fn z_matrix_shape() {
        assert!(is_z_matrix(&m(&[&[2, -1], &[-1, 2]])));
        assert!(!is_z_matrix(&m(&[&[2, 1], &[-1, 2]])));
    }
}
