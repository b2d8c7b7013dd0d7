use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::chipfire::{self, BurningCertificate, ChipConfig, ChipSystem};
use crate::cyclotomic::Cyclotomic;
use crate::intlinalg::{
    cokernel_invariants, kernel_basis, solve_integral, strike, AbelianGroupInvariants, IntMatrix,
};

use super::table::CharacterTable;
use super::McKayError;

/// Tensor multiplicities m_ij with chi_gamma * chi_i = sum_j m_ij chi_j,
/// computed by exact character averaging.
pub fn tensor_multiplicities(
    table: &CharacterTable,
    gamma: &[i64],
) -> Result<IntMatrix, McKayError> {
    let chi_gamma = table.character_of(gamma)?;
    let nc = table.num_classes();
    let order = BigRational::from_integer(BigInt::from(table.order));
    let mut m = IntMatrix::zero(nc, nc);
    for i in 0..nc {
        for j in 0..nc {
            let mut acc = Cyclotomic::zero(table.exponent);
            for c in 0..nc {
                let term = chi_gamma[c]
                    .mul(&table.characters[i][c])
                    .mul(&table.characters[j][c].conjugate())
                    .scale(&BigRational::from_integer(BigInt::from(
                        table.classes[c].size,
                    )));
                acc = acc.add(&term);
            }
            let entry = acc
                .to_rational()
                .map(|q| q / &order)
                .filter(|q| q.is_integer() && !q.is_negative())
                .ok_or(McKayError::NotIntegral(i, j))?;
            m.set(i, j, entry.to_integer());
        }
    }
    Ok(m)
}

/// A character table together with one nonnegative virtual character and
/// the matrices the McKay construction attaches to it.
#[derive(Debug, Clone)]
pub struct McKayData {
    pub table: CharacterTable,
    pub gamma: Vec<i64>,
    pub degree: BigInt,
    pub m: IntMatrix,
    /// nI - M
    pub c_ext: IntMatrix,
    /// nI - M with the trivial row and column struck
    pub c: IntMatrix,
    /// degree vector (the character-table column of the identity)
    pub delta_e: Vec<BigInt>,
    pub dual_involution: Vec<usize>,
    /// kernel classes of gamma: classes where chi_gamma attains the degree
    pub kernel_classes: Vec<usize>,
}

/// Assemble the extended and reduced McKay-Cartan matrices, verifying the
/// eigenvector equation C~ . delta^(g) = (n - chi_gamma(g)) . delta^(g) for
/// every class column and the row-sum identity at the identity.
pub fn mckay_cartan(table: &CharacterTable, gamma: &[i64]) -> Result<McKayData, McKayError> {
    let m = tensor_multiplicities(table, gamma)?;
    let n = table.degree_of(gamma);
    let nc = table.num_classes();
    let c_ext = IntMatrix::identity(nc).scale(&n).sub(&m);
    let c = if nc > 0 { strike(&c_ext, 0) } else { c_ext.clone() };
    let chi_gamma = table.character_of(gamma)?;

    // eigenvector equations, one per class column of the character table
    for g in 0..nc {
        let column: Vec<Cyclotomic> = (0..nc).map(|i| table.characters[i][g].clone()).collect();
        let eigen = Cyclotomic::from_rational(table.exponent, BigRational::from_integer(n.clone()))
            .sub(&chi_gamma[g]);
        for i in 0..nc {
            let mut lhs = Cyclotomic::zero(table.exponent);
            for j in 0..nc {
                lhs = lhs.add(
                    &column[j].scale(&BigRational::from_integer(c_ext.get(i, j).clone())),
                );
            }
            let rhs = eigen.mul(&column[i]);
            if lhs != rhs {
                return Err(McKayError::CorruptTable(format!(
                    "eigenvector equation fails at class {g}, row {i}"
                )));
            }
        }
    }
    let delta_e = table.degrees.clone();
    // row sums against the degree vector: sum_j m_ij d_j = n d_i
    for i in 0..nc {
        let acc: BigInt = (0..nc).map(|j| m.get(i, j) * &delta_e[j]).sum();
        if acc != &n * &delta_e[i] {
            return Err(McKayError::CorruptTable(format!(
                "degree row-sum identity fails at row {i}"
            )));
        }
    }
    let kernel_classes: Vec<usize> = (0..nc)
        .filter(|&g| {
            chi_gamma[g].to_integer().as_ref() == Some(&n)
        })
        .collect();
    Ok(McKayData {
        table: table.clone(),
        gamma: gamma.to_vec(),
        degree: n,
        m,
        c_ext,
        c,
        delta_e,
        dual_involution: table.dual_involution()?,
        kernel_classes,
    })
}

impl McKayData {
    pub fn is_faithful(&self) -> bool {
        self.kernel_classes == [0]
    }

    /// Build the certified chip system for the reduced McKay-Cartan matrix,
    /// additionally verifying that C + Cᵗ is positive definite.
    pub fn certify(&self) -> Result<ChipSystem, McKayError> {
        if !self.is_faithful() {
            return Err(McKayError::NotFaithful(self.kernel_classes.clone()));
        }
        let sys = ChipSystem::certify(self.c.clone())?;
        if !chipfire::symmetrization_positive_definite(&self.c) {
            return Err(McKayError::CorruptTable(
                "C + C^t is not positive definite for a faithful gamma".into(),
            ));
        }
        Ok(sys)
    }

    /// The critical group, cross-checked through all four presentations:
    /// coker(Cᵗ), the degree-orthogonal quotient, the quotient by the
    /// trivial axis, and the split form of coker(C̃ᵗ).
    pub fn critical_group(&self) -> Result<AbelianGroupInvariants, McKayError> {
        if !self.is_faithful() {
            return Err(McKayError::NotFaithful(self.kernel_classes.clone()));
        }
        let k = cokernel_invariants(&self.c.transpose());
        let nc = self.table.num_classes();
        let ext_t = self.c_ext.transpose();

        // (delta_e)-perp / im(C~^t)
        let mut delta_row = IntMatrix::zero(1, nc);
        for j in 0..nc {
            delta_row.set(0, j, self.delta_e[j].clone());
        }
        let basis = kernel_basis(&delta_row);
        let mut coords = IntMatrix::zero(basis.cols(), nc);
        for j in 0..nc {
            let col = ext_t.col(j);
            let y = solve_integral(&basis, &col)
                .expect("columns of the extended transpose are orthogonal to the degrees");
            for i in 0..basis.cols() {
                coords.set(i, j, y[i].clone());
            }
        }
        let perp = cokernel_invariants(&coords);

        // Z^{l+1} / (Z e_0 + im(C~^t))
        let mut augmented = IntMatrix::zero(nc, nc + 1);
        augmented.set(0, 0, BigInt::one());
        for i in 0..nc {
            for j in 0..nc {
                augmented.set(i, j + 1, ext_t.get(i, j).clone());
            }
        }
        let quotient = cokernel_invariants(&augmented);

        // coker(C~^t) = Z + K
        let ext = cokernel_invariants(&ext_t);

        if perp != k {
            return Err(McKayError::PresentationsDisagree(format!(
                "coker(C^t) = {k} but the degree-orthogonal quotient is {perp}"
            )));
        }
        if quotient != k {
            return Err(McKayError::PresentationsDisagree(format!(
                "coker(C^t) = {k} but the trivial-axis quotient is {quotient}"
            )));
        }
        if ext.free_rank != k.free_rank + 1 || ext.torsion != k.torsion {
            return Err(McKayError::PresentationsDisagree(format!(
                "coker(C~^t) = {ext} does not split as Z + {k}"
            )));
        }
        Ok(k)
    }

    /// The burning configuration b0 = [m_01, ..., m_0l], validated through
    /// the chip engine; stabilizing v + b0 for recurrent v takes exactly
    /// sum_i delta_i topplings.
    pub fn burning_config_b0(&self) -> Result<BurningCertificate, McKayError> {
        let sys = self.certify()?;
        let l = self.c.rows();
        let b0 = ChipConfig((1..=l).map(|j| self.m.get(0, j).clone()).collect());
        let cert = sys.check_burning(&b0)?;
        let expected_total: BigInt = self.delta_e[1..].iter().sum();
        if cert.z.iter().sum::<BigInt>() != expected_total {
            return Err(McKayError::CorruptTable(
                "burning totals disagree with the degree vector".into(),
            ));
        }
        Ok(cert)
    }

    /// Symmetry checks: multiplying by any linear character permutes the
    /// extended matrix, and C~_ij = C~_{j* i*} under the dual involution.
    pub fn verify_symmetries(&self) -> Result<(), McKayError> {
        let nc = self.table.num_classes();
        // the permutation induced by each linear character
        for phi in 0..nc {
            if self.table.degrees[phi] != BigInt::one() {
                continue;
            }
            let mut perm = Vec::with_capacity(nc);
            for i in 0..nc {
                let product: Vec<Cyclotomic> = (0..nc)
                    .map(|c| self.table.characters[i][c].mul(&self.table.characters[phi][c]))
                    .collect();
                let target = (0..nc)
                    .find(|&j| self.table.characters[j] == product)
                    .ok_or_else(|| {
                        McKayError::CorruptTable(format!(
                            "row {i} times linear row {phi} is not a row"
                        ))
                    })?;
                perm.push(target);
            }
            for i in 0..nc {
                for j in 0..nc {
                    if self.c_ext.get(i, j) != self.c_ext.get(perm[i], perm[j]) {
                        return Err(McKayError::CorruptTable(format!(
                            "linear-character symmetry fails at ({i}, {j}) for row {phi}"
                        )));
                    }
                }
            }
        }
        // transpose symmetry through the involution
        let inv = &self.dual_involution;
        for i in 0..nc {
            for j in 0..nc {
                if self.c_ext.get(i, j) != self.c_ext.get(inv[j], inv[i]) {
                    return Err(McKayError::CorruptTable(format!(
                        "contragredient symmetry fails at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Structure constants of the representation ring: chi_i chi_j =
/// sum_k N_ijk chi_k, all entries nonnegative integers.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    nc: usize,
    entries: Vec<BigInt>,
}

impl StructureConstants {
    pub fn get(&self, i: usize, j: usize, k: usize) -> &BigInt {
        &self.entries[(i * self.nc + j) * self.nc + k]
    }

    /// Coefficients of the product of two virtual characters.
    pub fn multiply(&self, x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
        let nc = self.nc;
        let mut out = vec![BigInt::zero(); nc];
        for i in 0..nc {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..nc {
                if y[j].is_zero() {
                    continue;
                }
                let f = &x[i] * &y[j];
                for k in 0..nc {
                    let n = self.get(i, j, k);
                    if !n.is_zero() {
                        out[k] += n * &f;
                    }
                }
            }
        }
        out
    }
}

pub fn structure_constants(table: &CharacterTable) -> Result<StructureConstants, McKayError> {
    let nc = table.num_classes();
    let order = BigRational::from_integer(BigInt::from(table.order));
    let mut entries = vec![BigInt::zero(); nc * nc * nc];
    for i in 0..nc {
        for j in i..nc {
            for k in 0..nc {
                let mut acc = Cyclotomic::zero(table.exponent);
                for c in 0..nc {
                    let term = table.characters[i][c]
                        .mul(&table.characters[j][c])
                        .mul(&table.characters[k][c].conjugate())
                        .scale(&BigRational::from_integer(BigInt::from(
                            table.classes[c].size,
                        )));
                    acc = acc.add(&term);
                }
                let v = acc
                    .to_rational()
                    .map(|q| q / &order)
                    .filter(|q| q.is_integer() && !q.is_negative())
                    .ok_or(McKayError::NotIntegral(i, j))?
                    .to_integer();
                entries[(i * nc + j) * nc + k] = v.clone();
                entries[(j * nc + i) * nc + k] = v;
            }
        }
    }
    let sc = StructureConstants { nc, entries };
    // unit row and degree multiplicativity
    for i in 0..nc {
        for k in 0..nc {
            let want = if i == k { BigInt::one() } else { BigInt::zero() };
            if *sc.get(0, i, k) != want {
                return Err(McKayError::CorruptTable(
                    "trivial character is not the unit of the ring".into(),
                ));
            }
        }
        for j in 0..nc {
            let total: BigInt = (0..nc).map(|k| sc.get(i, j, k) * &table.degrees[k]).sum();
            if total != &table.degrees[i] * &table.degrees[j] {
                return Err(McKayError::CorruptTable(format!(
                    "structure constants break degrees at ({i}, {j})"
                )));
            }
        }
    }
    Ok(sc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mckay::catalog_table;
    use crate::mckay::table::abelian_character_table;

    fn a4_data() -> McKayData {
        let table = catalog_table("A4").unwrap();
        let gamma = table.natural_gamma.clone().unwrap();
        mckay_cartan(&table, &gamma).unwrap()
    }

    #[test]
    fn a4_matrices_match_reference() {
        let data = a4_data();
        assert_eq!(
            data.m,
            IntMatrix::from_rows(&[
                &[0, 0, 0, 1],
                &[0, 0, 0, 1],
                &[0, 0, 0, 1],
                &[1, 1, 1, 2],
            ])
        );
        assert_eq!(
            data.c_ext,
            IntMatrix::from_rows(&[
                &[3, 0, 0, -1],
                &[0, 3, 0, -1],
                &[0, 0, 3, -1],
                &[-1, -1, -1, 1],
            ])
        );
        assert_eq!(
            data.c,
            IntMatrix::from_rows(&[&[3, 0, -1], &[0, 3, -1], &[-1, -1, 1]])
        );
        assert!(data.is_faithful());
        data.verify_symmetries().unwrap();
    }

    #[test]
    fn a4_critical_group_is_z3() {
        let data = a4_data();
        let k = data.critical_group().unwrap();
        assert_eq!(k.to_string(), "Z/3");
    }

    #[test]
    fn a4_burning_config() {
        let data = a4_data();
        let cert = data.burning_config_b0().unwrap();
        assert_eq!(cert.b, ChipConfig::from_i64(&[0, 0, 1]));
        assert_eq!(
            cert.z,
            vec![BigInt::from(1), BigInt::from(1), BigInt::from(3)]
        );
    }

    #[test]
    fn trivial_gamma_gives_identity_multiplicities() {
        let table = catalog_table("A4").unwrap();
        let m = tensor_multiplicities(&table, &[1, 0, 0, 0]).unwrap();
        assert!(m.is_identity());
    }

    #[test]
    fn adding_trivial_summands_changes_nothing() {
        let table = catalog_table("A4").unwrap();
        let data = mckay_cartan(&table, &[0, 0, 0, 1]).unwrap();
        let padded = mckay_cartan(&table, &[2, 0, 0, 1]).unwrap();
        assert_eq!(data.c_ext, padded.c_ext);
        assert_eq!(
            data.burning_config_b0().unwrap().b,
            padded.burning_config_b0().unwrap().b
        );
    }

    #[test]
    fn nonfaithful_gamma_rejected() {
        // gamma = 2 chi_2 on Z/4 has the order-2 subgroup in its kernel
        let table = abelian_character_table(&[4]).unwrap();
        let data = mckay_cartan(&table, &[0, 0, 2, 0]).unwrap();
        assert!(!data.is_faithful());
        assert_eq!(data.kernel_classes, vec![0, 2]);
        assert!(matches!(
            data.certify().unwrap_err(),
            McKayError::NotFaithful(_)
        ));
    }

    #[test]
    fn cyclic_mckay_is_affine_a_series() {
        // Z/m with gamma = chi_1 + chi_{m-1}: the extended matrix is the
        // circulant affine Cartan matrix of the A series
        for m in [2usize, 3, 5] {
            let table = abelian_character_table(&[m as u64]).unwrap();
            let mut gamma = vec![0i64; m];
            gamma[1] += 1;
            gamma[m - 1] += 1;
            let data = mckay_cartan(&table, &gamma).unwrap();
            for i in 0..m {
                for j in 0..m {
                    let want = if i == j {
                        2
                    } else if (i + 1) % m == j || (j + 1) % m == i {
                        if m == 2 { -2 } else { -1 }
                    } else {
                        0
                    };
                    assert_eq!(*data.c_ext.get(i, j), BigInt::from(want), "m={m} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn a4_chi1_kernel_contains_klein_class() {
        let table = catalog_table("A4").unwrap();
        let data = mckay_cartan(&table, &[0, 1, 0, 0]).unwrap();
        assert!(!data.is_faithful());
        // chi_1 takes the value 1 on the identity and the double-transposition class
        assert_eq!(data.kernel_classes, vec![0, 3]);
        // multiples of the trivial character have everything in the kernel
        let trivial = mckay_cartan(&table, &[2, 0, 0, 0]).unwrap();
        assert_eq!(trivial.kernel_classes, vec![0, 1, 2, 3]);
    }

    #[test]
    fn cyclic_five_burning_config() {
        // b0 = e_1 + e_4 with total toppling count 4 (the degrees sum)
        let table = catalog_table("cyclic-5").unwrap();
        let gamma = table.natural_gamma.clone().unwrap();
        let data = mckay_cartan(&table, &gamma).unwrap();
        let cert = data.burning_config_b0().unwrap();
        assert_eq!(cert.b, ChipConfig::from_i64(&[1, 0, 0, 1]));
        assert_eq!(cert.z.iter().sum::<BigInt>(), BigInt::from(4));
    }

    #[test]
    fn table_automorphism_preserves_critical_group() {
        // complex conjugation swaps the two nontrivial linear rows of the
        // alternating-group table together with the two 3-cycle classes
        let table = catalog_table("A4").unwrap();
        let mut permuted = table.clone();
        permuted.characters.swap(1, 2);
        for row in &mut permuted.characters {
            row.swap(1, 2);
        }
        permuted.classes.swap(1, 2);
        permuted.power_map.swap(1, 2);
        for pm in &mut permuted.power_map {
            for t in pm.iter_mut() {
                if *t == 1 {
                    *t = 2;
                } else if *t == 2 {
                    *t = 1;
                }
            }
        }
        permuted.validate().unwrap();
        let k1 = mckay_cartan(&table, &[0, 0, 0, 1])
            .unwrap()
            .critical_group()
            .unwrap();
        let k2 = mckay_cartan(&permuted, &[0, 0, 0, 1])
            .unwrap()
            .critical_group()
            .unwrap();
        assert_eq!(k1, k2);
    }

    #[test]
    fn a4_structure_constants() {
        let table = catalog_table("A4").unwrap();
        let sc = structure_constants(&table).unwrap();
        // chi_3^2 = chi_0 + chi_1 + chi_2 + 2 chi_3
        let sq: Vec<BigInt> = (0..4).map(|k| sc.get(3, 3, k).clone()).collect();
        assert_eq!(
            sq,
            vec![BigInt::one(), BigInt::one(), BigInt::one(), BigInt::from(2)]
        );
        // chi_1 chi_3 = chi_3
        let p: Vec<BigInt> = (0..4).map(|k| sc.get(1, 3, k).clone()).collect();
        assert_eq!(
            p,
            vec![BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::one()]
        );
    }
}
