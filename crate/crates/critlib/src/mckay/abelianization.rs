//! The determinant character, the special-linear test, and the surjection
//! from the critical group onto the group of linear characters.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cyclotomic::Cyclotomic;
use crate::intlinalg::{cokernel_invariants, AbelianGroupInvariants, IntMatrix};

use super::quiver::McKayData;
use super::rng::RngStructure;
use super::table::CharacterTable;
use super::McKayError;

/// Rows of degree one, in table order. Row 0 (trivial) always leads.
pub fn linear_character_indices(table: &CharacterTable) -> Vec<usize> {
    (0..table.num_irreducibles())
        .filter(|&i| table.degrees[i] == BigInt::one())
        .collect()
}

/// Determinant of the representation behind row `chi_index`, recovered from
/// power sums via Newton's identities and matched against a linear row.
pub fn det_character(table: &CharacterTable, chi_index: usize) -> Result<usize, McKayError> {
    let d = usize::try_from(table.degrees[chi_index].clone())
        .map_err(|_| McKayError::CorruptTable("degree overflow".into()))?;
    let nc = table.num_classes();
    let mut det_values = Vec::with_capacity(nc);
    for c in 0..nc {
        // power sums p_k = chi(g^k) for k = 1..d
        let p: Vec<Cyclotomic> = (1..=d)
            .map(|k| table.characters[chi_index][table.power_map[c][k - 1]].clone())
            .collect();
        // Newton: k e_k = sum_{t=1..k} (-1)^(t-1) e_{k-t} p_t
        let mut e = vec![Cyclotomic::one(table.exponent)];
        for k in 1..=d {
            let mut acc = Cyclotomic::zero(table.exponent);
            for t in 1..=k {
                let term = e[k - t].mul(&p[t - 1]);
                acc = if t % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
            }
            e.push(acc.scale(&BigRational::new(BigInt::one(), BigInt::from(k))));
        }
        det_values.push(e[d].clone());
    }
    linear_character_indices(table)
        .into_iter()
        .find(|&r| table.characters[r] == det_values)
        .ok_or(McKayError::NoMatchingLinearCharacter(chi_index))
}

/// Index of the product of two linear characters within the table rows.
fn linear_product(table: &CharacterTable, a: usize, b: usize) -> Result<usize, McKayError> {
    let product: Vec<Cyclotomic> = (0..table.num_classes())
        .map(|c| table.characters[a][c].mul(&table.characters[b][c]))
        .collect();
    (0..table.num_irreducibles())
        .find(|&k| table.characters[k] == product)
        .ok_or_else(|| {
            McKayError::CorruptTable("product of linear characters is not a row".into())
        })
}

/// det(gamma) as a linear-row index: the product of the summands'
/// determinants with multiplicity.
pub fn det_of_gamma(data: &McKayData) -> Result<usize, McKayError> {
    let table = &data.table;
    let mut acc = 0usize; // trivial row
    for (i, &mult) in data.gamma.iter().enumerate() {
        let di = det_character(table, i)?;
        for _ in 0..mult {
            acc = linear_product(table, acc, di)?;
        }
    }
    Ok(acc)
}

/// True when gamma lands in the special linear group: its determinant
/// character is trivial.
pub fn is_in_sl(data: &McKayData) -> Result<bool, McKayError> {
    Ok(det_of_gamma(data)? == 0)
}

/// Invariant factors of the group of linear characters, presented by its
/// multiplication table and computed through a relation-matrix cokernel.
pub fn dual_group_invariants(table: &CharacterTable) -> Result<AbelianGroupInvariants, McKayError> {
    let lin = linear_character_indices(table);
    let s = lin.len();
    let pos = |row: usize| lin.iter().position(|&r| r == row).unwrap();
    // relations: e_a + e_b - e_(a*b) for a <= b, plus the identity row
    let mut relations: Vec<Vec<BigInt>> = Vec::new();
    for a in 0..s {
        for b in a..s {
            let prod = linear_product(table, lin[a], lin[b])?;
            let mut rel = vec![BigInt::zero(); s];
            rel[a] += 1;
            rel[b] += 1;
            rel[pos(prod)] -= 1;
            relations.push(rel);
        }
    }
    let mut triv = vec![BigInt::zero(); s];
    triv[pos(0)] = BigInt::one();
    relations.push(triv);
    let mut m = IntMatrix::zero(s, relations.len());
    for (j, rel) in relations.iter().enumerate() {
        for i in 0..s {
            m.set(i, j, rel[i].clone());
        }
    }
    Ok(cokernel_invariants(&m))
}

/// The verified data of the surjection from the critical group onto the
/// character group of the abelianization.
#[derive(Debug, Clone)]
pub struct AbelianizationReport {
    /// det of each irreducible row, as a linear-row index
    pub det_indices: Vec<usize>,
    pub k_invariants: AbelianGroupInvariants,
    pub dual_invariants: AbelianGroupInvariants,
    pub is_isomorphism: bool,
}

/// Build the map e_i -> det(chi_i), check that it kills the trivial axis
/// and every row of the extended matrix (so it descends to the critical
/// group), and compare the two sides.
pub fn abelianization_map(data: &McKayData) -> Result<AbelianizationReport, McKayError> {
    if !data.is_faithful() {
        return Err(McKayError::NotFaithful(data.kernel_classes.clone()));
    }
    if !is_in_sl(data)? {
        return Err(McKayError::NotInSL);
    }
    let table = &data.table;
    let nc = table.num_classes();
    let det_indices: Vec<usize> = (0..nc)
        .map(|i| det_character(table, i))
        .collect::<Result<_, _>>()?;
    if det_indices[0] != 0 {
        return Err(McKayError::KernelCheckFailed(
            "the trivial character must map to the identity".into(),
        ));
    }
    // pi applied to an integer vector over the rows
    let pi = |x: &[BigInt]| -> Result<usize, McKayError> {
        let mut acc = 0usize;
        for (i, c) in x.iter().enumerate() {
            let count = u64::try_from(c.abs()).expect("small exponents");
            let factor = if c.is_negative() {
                // inverse of a linear character is its conjugate row
                data.dual_involution[det_indices[i]]
            } else {
                det_indices[i]
            };
            for _ in 0..count {
                acc = linear_product(table, acc, factor)?;
            }
        }
        Ok(acc)
    };
    // every row of the extended matrix must die under pi
    for i in 0..nc {
        let row: Vec<BigInt> = (0..nc).map(|j| data.c_ext.get(i, j).clone()).collect();
        let image = pi(&row)?;
        if image != 0 {
            return Err(McKayError::KernelCheckFailed(format!(
                "row {i} of the extended matrix maps to row {image}"
            )));
        }
    }
    let k_invariants = data.critical_group()?;
    let dual_invariants = dual_group_invariants(table)?;
    let is_isomorphism = k_invariants == dual_invariants;
    Ok(AbelianizationReport {
        det_indices,
        k_invariants,
        dual_invariants,
        is_isomorphism,
    })
}

/// Outcome of checking that the surjection annihilates all products of
/// degree-zero cosets, and that products vanish outright whenever the two
/// sides have equal order.
#[derive(Debug, Clone)]
pub struct ProductsReport {
    pub pairs_checked: usize,
    pub all_products_annihilated: bool,
    pub products_vanish: Option<bool>,
}

pub fn verify_products_annihilated(data: &McKayData) -> Result<ProductsReport, McKayError> {
    let report = abelianization_map(data)?;
    let rng = RngStructure::new(data)?;
    let generators = rng.standard_generators()?;
    let table = &data.table;
    let nc = table.num_classes();
    let det_indices = &report.det_indices;
    let pi_of = |x: &[BigInt]| -> Result<usize, McKayError> {
        let mut acc = 0usize;
        for (i, c) in x.iter().enumerate() {
            let count = u64::try_from(c.abs()).expect("small exponents");
            let factor = if c.is_negative() {
                data.dual_involution[det_indices[i]]
            } else {
                det_indices[i]
            };
            for _ in 0..count {
                acc = linear_product(table, acc, factor)?;
            }
        }
        Ok(acc)
    };
    debug_assert_eq!(det_indices.len(), nc);
    let sides_match = report.is_isomorphism;
    let mut pairs = 0;
    let mut annihilated = true;
    let mut vanish = true;
    for x in &generators {
        for y in &generators {
            let product = rng.multiply(x, y)?;
            pairs += 1;
            if pi_of(&product.0)? != 0 {
                annihilated = false;
            }
            if !product.is_zero() {
                vanish = false;
            }
        }
    }
    Ok(ProductsReport {
        pairs_checked: pairs,
        all_products_annihilated: annihilated,
        products_vanish: sides_match.then_some(vanish),
    })
}

/// Per-case answer to the open question whether the basis vectors of the
/// nontrivial linear characters are superstable for special-linear
/// embeddings. `None` when the stable grid exceeds the guard.
pub fn linear_basis_vectors_superstable(
    data: &McKayData,
    guard: u64,
) -> Result<Option<bool>, McKayError> {
    let sys = data.certify()?;
    if sys.stable_grid_size() > num_bigint::BigInt::from(guard) {
        return Ok(None);
    }
    let mut all = true;
    for i in linear_character_indices(&data.table) {
        if i == 0 {
            continue;
        }
        let mut e = crate::chipfire::ChipConfig::zero(sys.size());
        e.0[i - 1] = BigInt::one();
        if !sys.is_superstable(&e)? {
            all = false;
        }
    }
    Ok(Some(all))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mckay::catalog_table;
    use crate::mckay::quiver::mckay_cartan;
    use crate::mckay::table::abelian_character_table;

    #[test]
    fn det_of_linear_character_is_itself() {
        let table = abelian_character_table(&[5]).unwrap();
        for i in 0..5 {
            assert_eq!(det_character(&table, i).unwrap(), i);
        }
    }

    #[test]
    fn det_of_a4_rotation_is_trivial() {
        let table = catalog_table("A4").unwrap();
        assert_eq!(det_character(&table, 3).unwrap(), 0);
    }

    #[test]
    fn det_of_s4_two_dim_is_sign() {
        let table = catalog_table("S4").unwrap();
        // rows: trivial, sign, 2-dim, standard, standard*sign
        assert_eq!(det_character(&table, 2).unwrap(), 1);
        assert_eq!(det_character(&table, 3).unwrap(), 1);
        assert_eq!(det_character(&table, 4).unwrap(), 0);
    }

    #[test]
    fn sl_test_for_scalar_cyclic_representations() {
        // gamma = n * chi_1 on Z/m is special linear exactly when m | n
        for (m, n, want) in [(3u64, 3i64, true), (3, 4, false), (2, 4, true), (4, 2, false)] {
            let table = abelian_character_table(&[m]).unwrap();
            let mut gamma = vec![0i64; m as usize];
            gamma[1] = n;
            let data = mckay_cartan(&table, &gamma).unwrap();
            assert_eq!(is_in_sl(&data).unwrap(), want, "m={m} n={n}");
        }
        // a single chi_1 on Z/3 is not special linear
        let table = abelian_character_table(&[3]).unwrap();
        let data = mckay_cartan(&table, &[0, 1, 0]).unwrap();
        assert!(!is_in_sl(&data).unwrap());
    }

    #[test]
    fn a4_abelianization_is_isomorphism() {
        let table = catalog_table("A4").unwrap();
        let data = mckay_cartan(&table, &[0, 0, 0, 1]).unwrap();
        let report = abelianization_map(&data).unwrap();
        assert!(report.is_isomorphism);
        assert_eq!(report.k_invariants.to_string(), "Z/3");
        assert_eq!(report.dual_invariants.to_string(), "Z/3");
    }

    #[test]
    fn klein_four_in_sl3_surjects_without_isomorphism() {
        // the diagonal representation with r = diag(-1,-1,1), s = diag(1,-1,-1)
        // is the sum of the three nontrivial characters of Z/2 x Z/2
        let table = abelian_character_table(&[2, 2]).unwrap();
        let data = mckay_cartan(&table, &[0, 1, 1, 1]).unwrap();
        assert!(data.is_faithful());
        assert!(is_in_sl(&data).unwrap());
        let report = abelianization_map(&data).unwrap();
        assert!(!report.is_isomorphism);
        assert_eq!(report.k_invariants.to_string(), "Z/4 x Z/4");
        assert_eq!(report.dual_invariants.to_string(), "Z/2 x Z/2");
    }

    #[test]
    fn dual_group_invariants_examples() {
        let table = catalog_table("binary-dihedral-3").unwrap();
        assert_eq!(dual_group_invariants(&table).unwrap().to_string(), "Z/4");
        let table = catalog_table("binary-dihedral-4").unwrap();
        assert_eq!(
            dual_group_invariants(&table).unwrap().to_string(),
            "Z/2 x Z/2"
        );
        let table = catalog_table("binary-icosahedral").unwrap();
        assert!(dual_group_invariants(&table).unwrap().is_trivial());
    }

    #[test]
    fn products_annihilated_for_a4() {
        let table = catalog_table("A4").unwrap();
        let data = mckay_cartan(&table, &[0, 0, 0, 1]).unwrap();
        let report = verify_products_annihilated(&data).unwrap();
        assert!(report.all_products_annihilated);
        assert_eq!(report.products_vanish, Some(true));
    }

    #[test]
    fn products_vacuous_for_binary_icosahedral() {
        let table = catalog_table("binary-icosahedral").unwrap();
        let gamma = table.natural_gamma.clone().unwrap();
        let data = mckay_cartan(&table, &gamma).unwrap();
        let report = verify_products_annihilated(&data).unwrap();
        assert!(report.all_products_annihilated);
        // the critical group is trivial, so products vanish vacuously
        assert_eq!(report.products_vanish, Some(true));
    }

    #[test]
    fn scalar_cubic_products_nonzero_but_annihilated() {
        // gamma = 3 chi_1 on Z/3 lands in the special linear group; the
        // critical group (Z/3)^2 is strictly larger than the character
        // group Z/3, products are killed by the surjection yet nonzero
        let table = abelian_character_table(&[3]).unwrap();
        let data = mckay_cartan(&table, &[0, 3, 0]).unwrap();
        let report = verify_products_annihilated(&data).unwrap();
        assert!(report.all_products_annihilated);
        assert_eq!(report.products_vanish, None);
        let rng = crate::mckay::RngStructure::new(&data).unwrap();
        let mut v = vec![BigInt::zero(); 3];
        v[0] = BigInt::from(-1);
        v[1] = BigInt::one();
        let u = rng.canonical(&v).unwrap();
        assert!(!rng.multiply(&u, &u).unwrap().is_zero());
    }

    #[test]
    fn linear_basis_vectors_superstable_cases() {
        use crate::chipfire::DEFAULT_GUARD;
        for (name, want) in [("A4", true), ("S4", true), ("A5", true)] {
            let table = catalog_table(name).unwrap();
            let gamma = table.natural_gamma.clone().unwrap();
            let data = mckay_cartan(&table, &gamma).unwrap();
            let got = linear_basis_vectors_superstable(&data, DEFAULT_GUARD).unwrap();
            assert_eq!(got, Some(want), "{name}");
        }
    }
}
