use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclotomic::Cyclotomic;

use super::McKayError;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClassInfo {
    pub label: String,
    pub size: u64,
    pub rep_order: u64,
}

/// Exact character table: one row per irreducible, one column per class,
/// with power maps carrying each class to the class of its k-th powers.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub name: String,
    pub order: u64,
    pub exponent: u64,
    pub classes: Vec<ClassInfo>,
    /// `power_map[c][k-1]` = class of g^k for g in class c, k = 1..max degree
    pub power_map: Vec<Vec<usize>>,
    /// row 0 is the trivial character
    pub characters: Vec<Vec<Cyclotomic>>,
    pub degrees: Vec<BigInt>,
    /// designated faithful representation, as coefficients over the rows
    pub natural_gamma: Option<Vec<i64>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct TableJson {
    name: String,
    order: u64,
    exponent: u64,
    classes: Vec<ClassInfo>,
    power_map: Vec<Vec<usize>>,
    characters: Vec<Vec<ValueJson>>,
    #[serde(default)]
    natural_gamma: Option<Vec<i64>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct ValueJson {
    num: Vec<i64>,
    den: i64,
}

impl CharacterTable {
    pub fn from_json_str(json: &str) -> Result<CharacterTable, McKayError> {
        let raw: TableJson =
            serde_json::from_str(json).map_err(|e| McKayError::CorruptTable(e.to_string()))?;
        let n = raw.exponent;
        let characters: Vec<Vec<Cyclotomic>> = raw
            .characters
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| {
                        let den = BigInt::from(v.den);
                        let coeffs = v
                            .num
                            .iter()
                            .map(|&c| BigRational::new(BigInt::from(c), den.clone()))
                            .collect();
                        Cyclotomic::from_raw(n, coeffs)
                    })
                    .collect()
            })
            .collect();
        let degrees = characters
            .iter()
            .map(|row| {
                row.first()
                    .and_then(|v| v.to_integer())
                    .ok_or_else(|| McKayError::CorruptTable("missing degree column".into()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let table = CharacterTable {
            name: raw.name,
            order: raw.order,
            exponent: n,
            classes: raw.classes,
            power_map: raw.power_map,
            characters,
            degrees,
            natural_gamma: raw.natural_gamma,
        };
        table.validate()?;
        Ok(table)
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn num_irreducibles(&self) -> usize {
        self.characters.len()
    }

    pub fn value(&self, row: usize, class: usize) -> &Cyclotomic {
        &self.characters[row][class]
    }

    /// Exact re-validation of the table axioms; every load path runs this.
    pub fn validate(&self) -> Result<(), McKayError> {
        let nc = self.num_classes();
        let bad = |msg: String| Err(McKayError::CorruptTable(msg));
        if self.num_irreducibles() != nc {
            return bad(format!(
                "{} irreducibles vs {} classes",
                self.num_irreducibles(),
                nc
            ));
        }
        if self.classes.iter().map(|c| c.size).sum::<u64>() != self.order {
            return bad("class sizes do not sum to the group order".into());
        }
        if self.classes[0].size != 1 || self.classes[0].rep_order != 1 {
            return bad("class 0 must be the identity class".into());
        }
        for row in &self.characters {
            if row.len() != nc {
                return bad("ragged character rows".into());
            }
        }
        // trivial character first
        if !self.characters[0]
            .iter()
            .all(|v| *v == Cyclotomic::one(self.exponent))
        {
            return bad("row 0 is not the trivial character".into());
        }
        // degrees positive integers summing squarewise to |G|
        let mut degree_sq = BigInt::zero();
        for (i, d) in self.degrees.iter().enumerate() {
            if !d.is_positive() {
                return bad(format!("degree of row {i} is not positive"));
            }
            if self.characters[i][0].to_integer().as_ref() != Some(d) {
                return bad(format!("degree mismatch at row {i}"));
            }
            degree_sq += d * d;
        }
        if degree_sq != BigInt::from(self.order) {
            return bad("squared degrees do not sum to the group order".into());
        }
        // exact row orthogonality
        for i in 0..nc {
            for j in i..nc {
                let mut acc = Cyclotomic::zero(self.exponent);
                for c in 0..nc {
                    let term = self.characters[i][c]
                        .mul(&self.characters[j][c].conjugate())
                        .scale(&BigRational::from_integer(BigInt::from(
                            self.classes[c].size,
                        )));
                    acc = acc.add(&term);
                }
                let want = if i == j {
                    BigInt::from(self.order)
                } else {
                    BigInt::zero()
                };
                if acc.to_integer() != Some(want) {
                    return bad(format!("row orthogonality fails at ({i}, {j})"));
                }
            }
        }
        // power maps: defined up to the maximal degree, fixing k = 1
        let max_degree = self.degrees.iter().max().cloned().unwrap_or_else(BigInt::one);
        let max_degree = usize::try_from(max_degree).unwrap_or(usize::MAX);
        if self.power_map.len() != nc {
            return bad("power map must cover every class".into());
        }
        for (c, pm) in self.power_map.iter().enumerate() {
            if pm.len() < max_degree {
                return bad(format!("power map of class {c} shorter than max degree"));
            }
            if pm[0] != c {
                return bad(format!("power map of class {c} does not fix k = 1"));
            }
            if pm.iter().any(|&t| t >= nc) {
                return bad(format!("power map of class {c} is out of range"));
            }
            let o = self.classes[c].rep_order as usize;
            for (k, &t) in pm.iter().enumerate() {
                if (k + 1) % o == 0 && t != 0 {
                    return bad(format!("class {c} to the power {} is not the identity", k + 1));
                }
            }
        }
        if let Some(g) = &self.natural_gamma {
            if g.len() != nc || g.iter().any(|&c| c < 0) {
                return bad("natural gamma must be a nonnegative vector over the rows".into());
            }
        }
        Ok(())
    }

    /// The character of a nonnegative virtual character, per class.
    pub fn character_of(&self, gamma: &[i64]) -> Result<Vec<Cyclotomic>, McKayError> {
        if gamma.len() != self.num_irreducibles() {
            return Err(McKayError::CorruptTable(format!(
                "gamma length {} vs {} irreducibles",
                gamma.len(),
                self.num_irreducibles()
            )));
        }
        if let Some(i) = gamma.iter().position(|&c| c < 0) {
            return Err(McKayError::NegativeCoefficient(i));
        }
        Ok((0..self.num_classes())
            .map(|c| {
                let mut acc = Cyclotomic::zero(self.exponent);
                for (i, &coeff) in gamma.iter().enumerate() {
                    if coeff != 0 {
                        acc = acc.add(
                            &self.characters[i][c]
                                .scale(&BigRational::from_integer(BigInt::from(coeff))),
                        );
                    }
                }
                acc
            })
            .collect())
    }

    /// Degree of a nonnegative virtual character.
    pub fn degree_of(&self, gamma: &[i64]) -> BigInt {
        gamma
            .iter()
            .zip(&self.degrees)
            .map(|(&c, d)| BigInt::from(c) * d)
            .sum()
    }

    /// The involution i -> i* with conj(chi_i) = chi_{i*}.
    pub fn dual_involution(&self) -> Result<Vec<usize>, McKayError> {
        let nc = self.num_classes();
        let mut out = Vec::with_capacity(nc);
        for i in 0..self.num_irreducibles() {
            let conj: Vec<Cyclotomic> =
                (0..nc).map(|c| self.characters[i][c].conjugate()).collect();
            let found = (0..self.num_irreducibles())
                .find(|&j| self.characters[j] == conj)
                .ok_or_else(|| {
                    McKayError::CorruptTable(format!("row {i} has no conjugate row"))
                })?;
            out.push(found);
        }
        Ok(out)
    }
}

/// Character table of the abelian group Z/d1 x Z/d2 x ... (trivial factors
/// permitted). Classes and characters are indexed by tuples enumerated in
/// odometer order, so class 0 and row 0 are the identities.
pub fn abelian_character_table(invariants: &[u64]) -> Result<CharacterTable, McKayError> {
    if invariants.contains(&0) {
        return Err(McKayError::CorruptTable(
            "abelian invariants must be positive".into(),
        ));
    }
    let invariants: Vec<u64> = invariants.iter().copied().filter(|&d| d > 1).collect();
    let order: u64 = invariants.iter().product::<u64>().max(1);
    let exponent = invariants.iter().fold(1u64, |acc, &d| acc.lcm(&d)).max(1);
    let elements = abelian_elements(&invariants);
    let classes: Vec<ClassInfo> = elements
        .iter()
        .map(|g| {
            let rep_order = g
                .iter()
                .zip(&invariants)
                .fold(1u64, |acc, (&gi, &d)| acc.lcm(&(d / gi.gcd(&d))));
            ClassInfo {
                label: format!(
                    "({})",
                    g.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
                ),
                size: 1,
                rep_order,
            }
        })
        .collect();
    // all degrees are 1, so the power map only needs k = 1
    let power_map: Vec<Vec<usize>> = (0..elements.len()).map(|c| vec![c]).collect();
    let characters: Vec<Vec<Cyclotomic>> = elements
        .iter()
        .map(|t| {
            elements
                .iter()
                .map(|g| {
                    let mut e = 0u64;
                    for ((&ti, &gi), &d) in t.iter().zip(g).zip(&invariants) {
                        e = (e + ti * gi * (exponent / d)) % exponent;
                    }
                    Cyclotomic::root_of_unity(exponent, e)
                })
                .collect()
        })
        .collect();
    let degrees = vec![BigInt::one(); elements.len()];
    let name = if invariants.is_empty() {
        "Z/1".to_string()
    } else {
        invariants
            .iter()
            .map(|d| format!("Z/{d}"))
            .collect::<Vec<_>>()
            .join(" x ")
    };
    let table = CharacterTable {
        name,
        order,
        exponent,
        classes,
        power_map,
        characters,
        degrees,
        natural_gamma: None,
    };
    table.validate()?;
    Ok(table)
}

/// Enumerate the elements of Z/d1 x ... in odometer order (identity first).
pub fn abelian_elements(invariants: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![vec![0; invariants.len()]];
    loop {
        let mut next = out.last().unwrap().clone();
        let mut pos = invariants.len();
        while pos > 0 {
            let i = pos - 1;
            next[i] += 1;
            if next[i] < invariants[i] {
                break;
            }
            next[i] = 0;
            pos -= 1;
        }
        if pos == 0 {
            break;
        }
        out.push(next);
    }
    out
}

/// Character table of the binary dihedral (dicyclic) group of order 4m,
/// presented as r² = s² = tᵐ = rst. Class order: identity, the central
/// involution, the m-1 two-element classes on the cyclic part, then the
/// two classes outside it. The natural gamma is the first 2-dimensional
/// representation, the inclusion into the special unitary group.
pub fn dicyclic_character_table(m: u64) -> Result<CharacterTable, McKayError> {
    if m < 2 {
        return Err(McKayError::CorruptTable(
            "binary dihedral groups need m >= 2".into(),
        ));
    }
    let order = 4 * m;
    let exponent = (2 * m).lcm(&4);
    let zeta = |k: i64| {
        let two_m = 2 * m as i64;
        let k = k.rem_euclid(two_m) as u64;
        Cyclotomic::root_of_unity(exponent, k * (exponent / (2 * m)))
    };
    let i_unit = Cyclotomic::root_of_unity(exponent, exponent / 4);

    let mut classes = vec![
        ClassInfo {
            label: "1A".into(),
            size: 1,
            rep_order: 1,
        },
        ClassInfo {
            label: "2A".into(),
            size: 1,
            rep_order: 2,
        },
    ];
    for j in 1..m {
        let o = 2 * m / (2 * m).gcd(&j);
        classes.push(ClassInfo {
            label: format!("t{j}"),
            size: 2,
            rep_order: o,
        });
    }
    classes.push(ClassInfo {
        label: "r".into(),
        size: m,
        rep_order: 4,
    });
    classes.push(ClassInfo {
        label: "rt".into(),
        size: m,
        rep_order: 4,
    });

    // class index of t^j for any integer j
    let class_of_t = |j: i64| -> usize {
        let two_m = 2 * m as i64;
        let j = j.rem_euclid(two_m) as u64;
        let folded = j.min(2 * m - j);
        if folded == 0 {
            0
        } else if folded == m {
            1
        } else {
            1 + folded as usize
        }
    };
    // power map up to the maximum degree 2
    let mut power_map = vec![vec![0usize, 0], vec![1, 0]];
    for j in 1..m {
        power_map.push(vec![class_of_t(j as i64), class_of_t(2 * j as i64)]);
    }
    power_map.push(vec![m as usize + 1, 1]); // r^2 = central involution
    power_map.push(vec![m as usize + 2, 1]);

    let nc = classes.len();
    let one = Cyclotomic::one(exponent);
    let mone = Cyclotomic::from_integer(exponent, -1);
    let rat = |v: i64| Cyclotomic::from_integer(exponent, v);

    // linear characters: alpha = value at t, beta = value at r
    let mut characters: Vec<Vec<Cyclotomic>> = Vec::new();
    let linear_pairs: Vec<(Cyclotomic, Cyclotomic)> = if m.is_multiple_of(2) {
        vec![
            (one.clone(), one.clone()),
            (one.clone(), mone.clone()),
            (mone.clone(), one.clone()),
            (mone.clone(), mone.clone()),
        ]
    } else {
        vec![
            (one.clone(), one.clone()),
            (one.clone(), mone.clone()),
            (mone.clone(), i_unit.clone()),
            (mone.clone(), i_unit.conjugate()),
        ]
    };
    for (alpha, beta) in linear_pairs {
        let mut row = Vec::with_capacity(nc);
        let alpha_pow = |k: u64| {
            let mut acc = one.clone();
            for _ in 0..k {
                acc = acc.mul(&alpha);
            }
            acc
        };
        row.push(one.clone()); // identity
        row.push(alpha_pow(m)); // central t^m
        for j in 1..m {
            row.push(alpha_pow(j));
        }
        row.push(beta.clone()); // r class
        row.push(alpha.mul(&beta)); // rt class
        characters.push(row);
    }
    // 2-dimensional characters
    for k in 1..m {
        let mut row = Vec::with_capacity(nc);
        row.push(rat(2));
        row.push(rat(if k % 2 == 0 { 2 } else { -2 }));
        for j in 1..m {
            row.push(zeta((k * j) as i64).add(&zeta(-((k * j) as i64))));
        }
        row.push(rat(0));
        row.push(rat(0));
        characters.push(row);
    }
    let degrees = characters
        .iter()
        .map(|row| row[0].to_integer().unwrap())
        .collect();
    let mut natural_gamma = vec![0i64; nc];
    natural_gamma[4] = 1;
    let table = CharacterTable {
        name: format!("binary-dihedral-{m}"),
        order,
        exponent,
        classes,
        power_map,
        characters,
        degrees,
        natural_gamma: Some(natural_gamma),
    };
    table.validate()?;
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_z3_table() {
        let t = abelian_character_table(&[3]).unwrap();
        assert_eq!(t.order, 3);
        assert_eq!(t.exponent, 3);
        assert_eq!(t.num_classes(), 3);
        // omega grid: chi_j(g^k) = zeta_3^{jk}
        assert_eq!(*t.value(1, 2), Cyclotomic::root_of_unity(3, 2));
        assert_eq!(*t.value(2, 2), Cyclotomic::root_of_unity(3, 1));
    }

    #[test]
    fn abelian_klein_four_table_is_real() {
        let t = abelian_character_table(&[2, 2]).unwrap();
        assert_eq!(t.order, 4);
        for i in 0..4 {
            for c in 0..4 {
                let v = t.value(i, c).to_integer().unwrap();
                assert!(v == BigInt::one() || v == BigInt::from(-1));
            }
        }
    }

    #[test]
    fn abelian_trivial_group() {
        let t = abelian_character_table(&[1]).unwrap();
        assert_eq!(t.order, 1);
        assert_eq!(t.num_classes(), 1);
    }

    #[test]
    fn dicyclic_tables_validate() {
        for m in 2..=8 {
            let t = dicyclic_character_table(m).unwrap();
            assert_eq!(t.order, 4 * m);
            assert_eq!(t.num_classes() as u64, m + 3);
        }
    }

    #[test]
    fn dicyclic_linear_characters_group() {
        // m odd: the linear characters form a cyclic group of order 4
        let t = dicyclic_character_table(3).unwrap();
        let lin: Vec<usize> = (0..t.num_irreducibles())
            .filter(|&i| t.degrees[i] == BigInt::one())
            .collect();
        assert_eq!(lin.len(), 4);
    }

    #[test]
    fn dual_involution_pairs_conjugates() {
        let t = abelian_character_table(&[5]).unwrap();
        assert_eq!(t.dual_involution().unwrap(), vec![0, 4, 3, 2, 1]);
    }
}
