//! Smith normal form and the cokernel bookkeeping built on it.
//!
//! Pivoting picks the smallest-absolute-value nonzero entry of the working
//! submatrix, ties broken by lowest (row, col). This keeps intermediate
//! entries small and makes the output deterministic.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::IntMatrix;
use super::{exact_inverse, LinAlgError};

/// U·A·V = S with U, V unimodular and S diagonal with a divisibility chain.
#[derive(Debug, Clone)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    pub fn diagonal(&self) -> Vec<BigInt> {
        self.s.diagonal()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let rows = a.rows();
    let cols = a.cols();
    let mut s = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        'pivot: loop {
            let Some((pi, pj)) = find_pivot(&s, t) else {
                break 'pivot; // submatrix is zero
            };
            if pi != t {
                s.swap_rows(t, pi);
                u.swap_rows(t, pi);
            }
            if pj != t {
                s.swap_cols(t, pj);
                v.swap_cols(t, pj);
            }
            // clear column t below the pivot
            let mut residue = false;
            for i in t + 1..rows {
                if s.get(i, t).is_zero() {
                    continue;
                }
                let q = s.get(i, t) / s.get(t, t);
                if !q.is_zero() {
                    s.sub_scaled_row(i, t, &q);
                    u.sub_scaled_row(i, t, &q);
                }
                if !s.get(i, t).is_zero() {
                    residue = true;
                }
            }
            // clear row t right of the pivot
            for j in t + 1..cols {
                if s.get(t, j).is_zero() {
                    continue;
                }
                let q = s.get(t, j) / s.get(t, t);
                if !q.is_zero() {
                    s.sub_scaled_col(j, t, &q);
                    v.sub_scaled_col(j, t, &q);
                }
                if !s.get(t, j).is_zero() {
                    residue = true;
                }
            }
            if residue {
                continue 'pivot; // smaller entries appeared; re-select pivot
            }
            // divisibility fix-up: pivot must divide the remaining block
            let p = s.get(t, t).clone();
            let mut fixed = true;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !s.get(i, j).mod_floor(&p).is_zero() {
                        s.add_row_to(t, i);
                        u.add_row_to(t, i);
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break 'pivot;
            }
        }
    }

    // normalize diagonal signs
    for t in 0..rows.min(cols) {
        if s.get(t, t).is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithDecomposition { u, s, v }
}

fn find_pivot(s: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for i in t..s.rows() {
        for j in t..s.cols() {
            let e = s.get(i, j);
            if e.is_zero() {
                continue;
            }
            let a = e.abs();
            match &best {
                Some((b, _, _)) if *b <= a => {}
                _ => best = Some((a, i, j)),
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Canonical invariant-factor form of a finitely generated abelian group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianGroupInvariants {
    pub free_rank: usize,
    /// torsion coefficients d_1 | d_2 | ..., each >= 2
    #[serde(with = "bigint_strings")]
    pub torsion: Vec<BigInt>,
}

/// BigInt vectors cross the wire as decimal strings.
pub mod bigint_strings {
    use std::str::FromStr;

    use num_bigint::BigInt;
    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_seq(v.iter().map(|e| e.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<BigInt>, D::Error> {
        let raw = Vec::<String>::deserialize(de)?;
        raw.iter()
            .map(|s| BigInt::from_str(s).map_err(D::Error::custom))
            .collect()
    }
}

impl AbelianGroupInvariants {
    pub fn trivial() -> Self {
        AbelianGroupInvariants {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion.iter().product::<BigInt>().max(BigInt::one()))
    }
}

impl fmt::Display for AbelianGroupInvariants {
    /// Renders "Z^r x Z/d1 x Z/d2 ..." with the free part omitted when r = 0,
    /// and "0" for the trivial group. This string is a bit-exact contract for
    /// the CLI and golden tests.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" x "))
    }
}

/// Invariants of coker(A) = Z^rows / (column span of A).
pub fn cokernel_invariants(a: &IntMatrix) -> AbelianGroupInvariants {
    let snf = smith_normal_form(a);
    let diag = snf.diagonal();
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    let torsion = diag
        .into_iter()
        .filter(|d| *d >= BigInt::from(2))
        .collect();
    AbelianGroupInvariants {
        free_rank: a.rows() - rank,
        torsion,
    }
}

/// The primitive integer right-null vector of a square matrix whose rank
/// deficiency is exactly one, sign-normalized so the first nonzero
/// coordinate is positive. Nonsingular input yields `None`; nullity >= 2 is
/// an error.
pub fn nullspace_primitive(a: &IntMatrix) -> Result<Option<Vec<BigInt>>, LinAlgError> {
    if !a.is_square() {
        return Err(LinAlgError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let snf = smith_normal_form(a);
    let diag = snf.diagonal();
    let zero_positions: Vec<usize> = (0..n).filter(|&i| diag[i].is_zero()).collect();
    match zero_positions.len() {
        0 => Ok(None),
        1 => {
            // A·(V e_j) = U^{-1} S e_j = 0; columns of unimodular V are primitive.
            let j = zero_positions[0];
            let mut x = snf.v.col(j);
            if let Some(first) = x.iter().find(|e| !e.is_zero()) {
                if first.is_negative() {
                    for e in &mut x {
                        *e = -e.clone();
                    }
                }
            }
            Ok(Some(x))
        }
        k => Err(LinAlgError::RankDeficiencyNotOne { nullity: k }),
    }
}

/// Solve A·y = c over the integers; `None` when no integral solution exists.
pub fn solve_integral(a: &IntMatrix, c: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows(), c.len());
    let snf = smith_normal_form(a);
    let uc = snf.u.mul_vec(c);
    let diag = snf.diagonal();
    let mut z = vec![BigInt::zero(); a.cols()];
    for i in 0..a.rows() {
        let d = diag.get(i).cloned().unwrap_or_else(BigInt::zero);
        if d.is_zero() {
            if !uc[i].is_zero() {
                return None;
            }
        } else {
            let (q, r) = uc[i].div_rem(&d);
            if !r.is_zero() {
                return None;
            }
            z[i] = q;
        }
    }
    Some(snf.v.mul_vec(&z))
}

/// Basis of the integral kernel of A (a saturated sublattice), as columns.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(a);
    let diag = snf.diagonal();
    let zero_cols: Vec<usize> = (0..a.cols())
        .filter(|&j| diag.get(j).is_none_or(|d| d.is_zero()))
        .collect();
    let mut out = IntMatrix::zero(a.cols(), zero_cols.len());
    for (k, &j) in zero_cols.iter().enumerate() {
        for i in 0..a.cols() {
            out.set(i, k, snf.v.get(i, j).clone());
        }
    }
    out
}

/// Membership and canonical coset reduction for the lattice spanned by the
/// columns of a fixed integer matrix.
///
/// With U·A·V = S, a vector x lies in the column span of A iff every
/// coordinate of U·x is divisible by the matching diagonal entry of S (zero
/// rows demand zero coordinates). The canonical representative of x + im(A)
/// is U^{-1}·((U·x) mod diag S), which is bit-stable across runs.
#[derive(Debug, Clone)]
pub struct ImageLattice {
    u: IntMatrix,
    u_inv: IntMatrix,
    diag: Vec<BigInt>,
    ambient_dim: usize,
}

impl ImageLattice {
    pub fn new(a: &IntMatrix) -> Self {
        let snf = smith_normal_form(a);
        let u_inv = exact_inverse(&snf.u)
            .expect("unimodular U is invertible")
            .to_int()
            .expect("inverse of unimodular matrix is integral");
        let mut diag = snf.diagonal();
        diag.resize(a.rows(), BigInt::zero());
        ImageLattice {
            u: snf.u,
            u_inv,
            diag,
            ambient_dim: a.rows(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        assert_eq!(x.len(), self.ambient_dim);
        let ux = self.u.mul_vec(x);
        ux.iter().zip(&self.diag).all(|(c, d)| {
            if d.is_zero() {
                c.is_zero()
            } else {
                c.mod_floor(d).is_zero()
            }
        })
    }

    /// Canonical representative of the coset x + im(A).
    pub fn canonical_coset(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.ambient_dim);
        let ux = self.u.mul_vec(x);
        let reduced: Vec<BigInt> = ux
            .iter()
            .zip(&self.diag)
            .map(|(c, d)| if d.is_zero() { c.clone() } else { c.mod_floor(d) })
            .collect();
        self.u_inv.mul_vec(&reduced)
    }

    pub fn same_coset(&self, x: &[BigInt], y: &[BigInt]) -> bool {
        self.canonical_coset(x) == self.canonical_coset(y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intlinalg::determinant;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    fn check_decomposition(a: &IntMatrix) {
        let snf = smith_normal_form(a);
        assert_eq!(snf.u.mul(a).mul(&snf.v), snf.s, "U·A·V != S for {a:?}");
        assert!(determinant(&snf.u).abs().is_one(), "U not unimodular");
        assert!(determinant(&snf.v).abs().is_one(), "V not unimodular");
        let diag = snf.diagonal();
        for w in diag.windows(2) {
            if w[0].is_zero() {
                assert!(w[1].is_zero(), "zero before nonzero in {diag:?}");
            } else {
                assert!(w[1].mod_floor(&w[0]).is_zero(), "chain broken in {diag:?}");
            }
        }
        for d in &diag {
            assert!(!d.is_negative());
        }
        // off-diagonal of S must vanish
        for i in 0..snf.s.rows() {
            for j in 0..snf.s.cols() {
                if i != j {
                    assert!(snf.s.get(i, j).is_zero());
                }
            }
        }
    }

    #[test]
    fn snf_cartan_a2() {
        let a = m(&[&[2, -1], &[-1, 2]]);
        let snf = smith_normal_form(&a);
        check_decomposition(&a);
        assert_eq!(snf.diagonal(), vec![BigInt::from(1), BigInt::from(3)]);
    }

    #[test]
    fn snf_identity() {
        for n in [1usize, 4] {
            let a = IntMatrix::identity(n);
            let snf = smith_normal_form(&a);
            assert_eq!(snf.s, a);
            check_decomposition(&a);
        }
    }

    #[test]
    fn snf_singular_example() {
        let a = m(&[&[30, -15], &[-20, 10]]);
        let snf = smith_normal_form(&a);
        check_decomposition(&a);
        assert_eq!(snf.diagonal(), vec![BigInt::from(5), BigInt::zero()]);
    }

    #[test]
    fn snf_rectangular() {
        let a = m(&[&[2, 4, 4], &[-6, 6, 12]]);
        check_decomposition(&a);
    }

    #[test]
    fn cokernel_examples() {
        // fundamental group of A2 is Z/3
        let inv = cokernel_invariants(&m(&[&[2, -1], &[-1, 2]]));
        assert_eq!(inv.free_rank, 0);
        assert_eq!(inv.torsion, vec![BigInt::from(3)]);
        assert_eq!(inv.to_string(), "Z/3");

        // the singular example after the cokernel relations: Z + Z/5
        let inv = cokernel_invariants(&m(&[&[30, -15], &[-20, 10]]));
        assert_eq!(inv.free_rank, 1);
        assert_eq!(inv.torsion, vec![BigInt::from(5)]);
        assert_eq!(inv.to_string(), "Z^1 x Z/5");

        let inv = cokernel_invariants(&IntMatrix::identity(3));
        assert!(inv.is_trivial());
        assert_eq!(inv.to_string(), "0");
    }

    #[test]
    fn nullspace_examples() {
        let delta = nullspace_primitive(&m(&[&[30, -15], &[-20, 10]]))
            .unwrap()
            .unwrap();
        assert_eq!(delta, vec![BigInt::from(1), BigInt::from(2)]);

        // extended Cartan of A2: all-ones marks vector
        let c_ext = m(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]);
        let delta = nullspace_primitive(&c_ext).unwrap().unwrap();
        assert_eq!(delta, vec![BigInt::one(); 3]);

        assert_eq!(nullspace_primitive(&m(&[&[2, -1], &[-1, 2]])).unwrap(), None);

        let err = nullspace_primitive(&IntMatrix::zero(2, 2)).unwrap_err();
        assert_eq!(err, LinAlgError::RankDeficiencyNotOne { nullity: 2 });
    }

    #[test]
    fn image_lattice_membership() {
        // im(C^t) for Cartan(A2): x in im iff x1 = x2 mod 3
        let c = m(&[&[2, -1], &[-1, 2]]);
        let lat = ImageLattice::new(&c.transpose());
        assert!(lat.contains(&[BigInt::from(2), BigInt::from(-1)]));
        assert!(!lat.contains(&[BigInt::from(1), BigInt::zero()]));
        let a = [BigInt::from(4), BigInt::from(1)];
        let b = [BigInt::from(1), BigInt::from(1)];
        assert!(lat.same_coset(&a, &b));
        // canonical form is idempotent
        let canon = lat.canonical_coset(&a);
        assert_eq!(lat.canonical_coset(&canon), canon);
    }
}
