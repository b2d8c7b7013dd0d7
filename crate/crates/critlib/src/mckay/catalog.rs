use super::table::{abelian_character_table, dicyclic_character_table, CharacterTable};
use super::McKayError;

/// One validated table plus its designated natural representation.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub table: CharacterTable,
}

const BUNDLED: &[(&str, &str)] = &[
    ("A4", include_str!("../../data/a4.json")),
    ("S4", include_str!("../../data/s4.json")),
    ("A5", include_str!("../../data/a5.json")),
    (
        "binary-tetrahedral",
        include_str!("../../data/binary_tetrahedral.json"),
    ),
    (
        "binary-octahedral",
        include_str!("../../data/binary_octahedral.json"),
    ),
    (
        "binary-icosahedral",
        include_str!("../../data/binary_icosahedral.json"),
    ),
];

/// Look a group up by name: `cyclic-m` (m >= 1) and `binary-dihedral-m`
/// (m >= 2) are generated, everything else comes from the bundled data.
/// Every path revalidates the table invariants.
pub fn catalog_table(name: &str) -> Result<CharacterTable, McKayError> {
    if let Some(m) = name.strip_prefix("cyclic-") {
        let m: u64 = m
            .parse()
            .map_err(|_| McKayError::UnknownGroup(name.into()))?;
        if m == 0 {
            return Err(McKayError::UnknownGroup(name.into()));
        }
        let mut table = abelian_character_table(&[m])?;
        table.name = format!("cyclic-{m}");
        // the two-dimensional representation diag(zeta, zeta^{-1})
        let mut gamma = vec![0i64; m as usize];
        if m == 1 {
            gamma[0] = 2;
        } else {
            gamma[1] += 1;
            gamma[(m - 1) as usize] += 1;
        }
        table.natural_gamma = Some(gamma);
        return Ok(table);
    }
    if let Some(m) = name.strip_prefix("binary-dihedral-") {
        let m: u64 = m
            .parse()
            .map_err(|_| McKayError::UnknownGroup(name.into()))?;
        return dicyclic_character_table(m);
    }
    for (key, json) in BUNDLED {
        if *key == name {
            return CharacterTable::from_json_str(json);
        }
    }
    Err(McKayError::UnknownGroup(name.into()))
}

/// The validated catalog used by the batch verifiers: cyclic groups up to
/// order 12, binary dihedral up to m = 8, the three exceptional binary
/// groups, and the rotation groups A4, S4, A5.
pub fn bundled_groups() -> Result<Vec<CatalogEntry>, McKayError> {
    let mut names: Vec<String> = Vec::new();
    for m in 1..=12u64 {
        names.push(format!("cyclic-{m}"));
    }
    for m in 2..=8u64 {
        names.push(format!("binary-dihedral-{m}"));
    }
    for fixed in [
        "binary-tetrahedral",
        "binary-octahedral",
        "binary-icosahedral",
        "A4",
        "S4",
        "A5",
    ] {
        names.push(fixed.into());
    }
    names
        .into_iter()
        .map(|name| {
            catalog_table(&name).map(|table| CatalogEntry { name, table })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn catalog_loads_and_validates() {
        let entries = bundled_groups().unwrap();
        assert_eq!(entries.len(), 12 + 7 + 6);
        for e in &entries {
            assert!(e.table.natural_gamma.is_some(), "{} lacks gamma", e.name);
        }
    }

    #[test]
    fn bundled_orders() {
        for (name, order) in [
            ("A4", 12u64),
            ("S4", 24),
            ("A5", 60),
            ("binary-tetrahedral", 24),
            ("binary-octahedral", 48),
            ("binary-icosahedral", 120),
            ("cyclic-7", 7),
            ("binary-dihedral-5", 20),
        ] {
            assert_eq!(catalog_table(name).unwrap().order, order, "{name}");
        }
    }

    #[test]
    fn trivial_group_has_one_by_one_table() {
        let t = catalog_table("cyclic-1").unwrap();
        assert_eq!(t.num_classes(), 1);
        assert_eq!(t.degrees, vec![BigInt::from(1)]);
    }

    #[test]
    fn unknown_group_rejected() {
        assert!(matches!(
            catalog_table("dodecahedral"),
            Err(McKayError::UnknownGroup(_))
        ));
    }

    #[test]
    fn a4_table_matches_reference_values() {
        use crate::cyclotomic::Cyclotomic;
        let t = catalog_table("A4").unwrap();
        // column of the 3-cycle class: 1, omega, omega^2, 0
        let omega = Cyclotomic::root_of_unity(6, 2);
        assert_eq!(*t.value(1, 1), omega);
        assert_eq!(*t.value(2, 1), omega.mul(&omega));
        assert!(t.value(3, 1).is_zero());
        assert_eq!(t.value(3, 3).to_integer(), Some(BigInt::from(-1)));
    }
}
