//! The ring-without-unit structure on the critical group: cosets of
//! degree-zero virtual characters modulo the row lattice of the extended
//! McKay-Cartan matrix, multiplied through the representation ring.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::intlinalg::ImageLattice;

use super::quiver::{structure_constants, McKayData, StructureConstants};
use super::McKayError;

/// A canonical coset representative in the rng I(gamma).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RngElement(pub Vec<BigInt>);

impl RngElement {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }
}

/// Multiplication context: the structure constants of the representation
/// ring and the coset lattice im(C̃ᵗ) with its canonical reduction.
#[derive(Debug, Clone)]
pub struct RngStructure {
    constants: StructureConstants,
    lattice: ImageLattice,
    delta_e: Vec<BigInt>,
}

impl RngStructure {
    pub fn new(data: &McKayData) -> Result<RngStructure, McKayError> {
        Ok(RngStructure {
            constants: structure_constants(&data.table)?,
            lattice: ImageLattice::new(&data.c_ext.transpose()),
            delta_e: data.delta_e.clone(),
        })
    }

    pub fn degree(&self, x: &[BigInt]) -> BigInt {
        x.iter().zip(&self.delta_e).map(|(a, d)| a * d).sum()
    }

    /// Canonical representative of a degree-zero coset.
    pub fn canonical(&self, x: &[BigInt]) -> Result<RngElement, McKayError> {
        let deg = self.degree(x);
        if !deg.is_zero() {
            return Err(McKayError::NotDegreeZero(deg.to_string()));
        }
        Ok(RngElement(self.lattice.canonical_coset(x)))
    }

    /// x·y: lift to the representation ring, multiply by structure
    /// constants, reduce to canonical coset form.
    pub fn multiply(&self, x: &RngElement, y: &RngElement) -> Result<RngElement, McKayError> {
        for e in [x, y] {
            let deg = self.degree(&e.0);
            if !deg.is_zero() {
                return Err(McKayError::NotDegreeZero(deg.to_string()));
            }
        }
        let product = self.constants.multiply(&x.0, &y.0);
        self.canonical(&product)
    }

    /// n-fold power of a degree-zero element.
    pub fn power(&self, x: &RngElement, n: u32) -> Result<RngElement, McKayError> {
        assert!(n >= 1);
        let mut acc = x.clone();
        for _ in 1..n {
            acc = self.multiply(&acc, x)?;
        }
        Ok(acc)
    }

    /// Integer multiple of a coset.
    pub fn scale(&self, x: &RngElement, k: i64) -> Result<RngElement, McKayError> {
        let scaled: Vec<BigInt> = x.0.iter().map(|c| c * BigInt::from(k)).collect();
        self.canonical(&scaled)
    }

    pub fn zero(&self) -> RngElement {
        RngElement(vec![BigInt::zero(); self.delta_e.len()])
    }

    /// The degree-zero generators e_i - d_i e_0 in canonical form.
    pub fn standard_generators(&self) -> Result<Vec<RngElement>, McKayError> {
        let nc = self.delta_e.len();
        (1..nc)
            .map(|i| {
                let mut v = vec![BigInt::zero(); nc];
                v[i] = BigInt::from(1);
                v[0] = -self.delta_e[i].clone();
                self.canonical(&v)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mckay::catalog_table;
    use crate::mckay::quiver::mckay_cartan;
    use crate::mckay::table::abelian_character_table;

    fn u_generator(rng: &RngStructure, nc: usize) -> RngElement {
        // u = e_1 - e_0, the usual change-of-variable generator
        let mut v = vec![BigInt::zero(); nc];
        v[0] = BigInt::from(-1);
        v[1] = BigInt::from(1);
        rng.canonical(&v).unwrap()
    }

    #[test]
    fn a4_rng_u_squares_to_zero() {
        let table = catalog_table("A4").unwrap();
        let data = mckay_cartan(&table, &[0, 0, 0, 1]).unwrap();
        let rng = RngStructure::new(&data).unwrap();
        let u = u_generator(&rng, 4);
        assert!(!u.is_zero());
        assert!(rng.multiply(&u, &u).unwrap().is_zero());
        assert!(rng.scale(&u, 3).unwrap().is_zero());
        assert!(!rng.scale(&u, 2).unwrap().is_zero());
    }

    #[test]
    fn cyclic_sl2_rng_relations() {
        // Z/m in the special linear plane: mu = 0 and u^2 = 0
        for m in 2..=9usize {
            let table = abelian_character_table(&[m as u64]).unwrap();
            let mut gamma = vec![0i64; m];
            gamma[1] += 1;
            gamma[m - 1] += 1;
            let data = mckay_cartan(&table, &gamma).unwrap();
            let rng = RngStructure::new(&data).unwrap();
            let u = u_generator(&rng, m);
            assert!(rng.multiply(&u, &u).unwrap().is_zero(), "m = {m}");
            assert!(rng.scale(&u, m as i64).unwrap().is_zero(), "m = {m}");
            if m > 1 {
                assert!(!u.is_zero());
            }
        }
    }

    #[test]
    fn scalar_representation_power_relation() {
        // gamma = n*chi_1 on Z/m: u^m = -sum_k binom(m,k) u^k and the
        // critical group is (Z/n)^(m-1)
        for (m, n) in [(2u32, 2i64), (3, 3), (2, 4)] {
            let table = abelian_character_table(&[m as u64]).unwrap();
            let mut gamma = vec![0i64; m as usize];
            gamma[1] = n;
            let data = mckay_cartan(&table, &gamma).unwrap();
            let k = data.critical_group().unwrap();
            assert_eq!(k.free_rank, 0);
            assert_eq!(k.torsion, vec![BigInt::from(n); m as usize - 1]);

            let rng = RngStructure::new(&data).unwrap();
            let u = u_generator(&rng, m as usize);
            let lhs = rng.power(&u, m).unwrap();
            let mut rhs = rng.zero();
            for k in 1..m {
                let binom = (1..=m).product::<u32>()
                    / ((1..=k).product::<u32>() * (1..=m - k).product::<u32>());
                let term = rng.scale(&rng.power(&u, k).unwrap(), -(binom as i64)).unwrap();
                let sum: Vec<BigInt> = rhs.0.iter().zip(&term.0).map(|(a, b)| a + b).collect();
                rhs = rng.canonical(&sum).unwrap();
            }
            assert_eq!(lhs, rhs, "m = {m}, n = {n}");
        }
    }

    #[test]
    fn degree_zero_enforced() {
        let table = catalog_table("A4").unwrap();
        let data = mckay_cartan(&table, &[0, 0, 0, 1]).unwrap();
        let rng = RngStructure::new(&data).unwrap();
        let mut v = vec![BigInt::zero(); 4];
        v[1] = BigInt::from(1);
        assert!(matches!(
            rng.canonical(&v),
            Err(McKayError::NotDegreeZero(_))
        ));
    }

    #[test]
    fn multiplication_is_well_defined_on_cosets() {
        let table = catalog_table("A4").unwrap();
        let data = mckay_cartan(&table, &[0, 0, 0, 1]).unwrap();
        let rng = RngStructure::new(&data).unwrap();
        let u = u_generator(&rng, 4);
        // shift a lift by rows of the extended matrix: same coset, same product
        let mut shifted = vec![BigInt::from(-1), BigInt::from(1), BigInt::zero(), BigInt::zero()];
        for j in 0..4 {
            shifted[j] += data.c_ext.get(2, j);
            shifted[j] -= data.c_ext.get(0, j) * BigInt::from(2);
        }
        let u2 = rng.canonical(&shifted).unwrap();
        assert_eq!(u, u2);
        assert_eq!(rng.multiply(&u, &u).unwrap(), rng.multiply(&u2, &u).unwrap());
    }
}
