//! Cayley digraphs of finite abelian groups and their arborescence counts,
//! tied to the critical groups of scalar-type representations.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::intlinalg::{
    arborescence_count, cokernel_invariants, strike, AbelianGroupInvariants, IntMatrix,
};

use super::table::abelian_elements;
use super::McKayError;

/// Result of the arborescence comparison for one generating multiset.
#[derive(Debug, Clone)]
pub struct CayleyReport {
    pub group_order: u64,
    pub generator_count: usize,
    pub arborescences: BigInt,
    pub critical_invariants: AbelianGroupInvariants,
    /// generators sum to zero (the special-linear condition)
    pub zero_sum: bool,
    /// count exceeds the group order, expected exactly when three or more
    /// generators are used
    pub exceeds_order: bool,
    /// the two-generator cyclic case: critical group matches the group
    pub matches_group: Option<bool>,
}

/// Build the Cayley digraph of Z/d1 x ... with the given generator multiset
/// (tuples), check the hypotheses (nonzero, generating, zero-sum), and
/// compare the arborescence count toward the identity with the group order.
pub fn cayley_digraph_check(
    invariants: &[u64],
    generators: &[Vec<u64>],
) -> Result<CayleyReport, McKayError> {
    let invariants: Vec<u64> = invariants.iter().copied().filter(|&d| d > 1).collect();
    let rank = invariants.len();
    let order: u64 = invariants.iter().product::<u64>().max(1);
    if generators.is_empty() {
        return Err(McKayError::GeneratorsInvalid("no generators given".into()));
    }
    for g in generators {
        if g.len() != rank {
            return Err(McKayError::GeneratorsInvalid(format!(
                "generator {g:?} has wrong arity (expected {rank})"
            )));
        }
        if g.iter().zip(&invariants).any(|(&x, &d)| x >= d) {
            return Err(McKayError::GeneratorsInvalid(format!(
                "generator {g:?} out of range"
            )));
        }
        if g.iter().all(|&x| x == 0) {
            return Err(McKayError::GeneratorsInvalid(
                "the identity is not a permitted generator".into(),
            ));
        }
    }
    // generation: close the generator set under addition
    let add = |a: &[u64], b: &[u64]| -> Vec<u64> {
        a.iter()
            .zip(b)
            .zip(&invariants)
            .map(|((&x, &y), &d)| (x + y) % d)
            .collect()
    };
    let mut reached: BTreeSet<Vec<u64>> = BTreeSet::new();
    reached.insert(vec![0; rank]);
    let mut frontier: Vec<Vec<u64>> = vec![vec![0; rank]];
    while let Some(v) = frontier.pop() {
        for g in generators {
            let w = add(&v, g);
            if reached.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }
    if reached.len() as u64 != order {
        return Err(McKayError::GeneratorsInvalid(format!(
            "generators only reach {} of {} elements",
            reached.len(),
            order
        )));
    }
    let zero_sum = {
        let mut acc = vec![0u64; rank];
        for g in generators {
            acc = add(&acc, g);
        }
        acc.iter().all(|&x| x == 0)
    };

    // Laplacian of the Cayley digraph, vertices in odometer order
    let elements = abelian_elements(&invariants);
    let index_of = |v: &[u64]| elements.iter().position(|e| e == v).unwrap();
    let n = elements.len();
    let r = generators.len();
    let mut lap = IntMatrix::zero(n, n);
    for (i, v) in elements.iter().enumerate() {
        lap.set(i, i, BigInt::from(r as u64) + lap.get(i, i));
        for g in generators {
            let j = index_of(&add(v, g));
            let val = lap.get(i, j) - 1;
            lap.set(i, j, val);
        }
    }
    let reduced = strike(&lap, 0);
    let arborescences = arborescence_count(&reduced);
    let critical_invariants = cokernel_invariants(&reduced.transpose());
    let exceeds_order = arborescences > BigInt::from(order);

    let matches_group = if r == 2 {
        let group = AbelianGroupInvariants {
            free_rank: 0,
            torsion: invariants
                .iter()
                .map(|&d| BigInt::from(d))
                .filter(|d| !d.is_zero() && *d != BigInt::from(1))
                .collect(),
        };
        Some(critical_invariants == group && arborescences == BigInt::from(order))
    } else {
        None
    };

    Ok(CayleyReport {
        group_order: order,
        generator_count: r,
        arborescences,
        critical_invariants,
        zero_sum,
        exceeds_order,
        matches_group,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_two_generator_case_matches() {
        for m in 2..=9u64 {
            let report =
                cayley_digraph_check(&[m], &[vec![1], vec![m - 1]]).unwrap();
            assert!(report.zero_sum);
            assert_eq!(report.arborescences, BigInt::from(m));
            assert_eq!(report.matches_group, Some(true));
            assert!(!report.exceeds_order);
        }
    }

    #[test]
    fn klein_four_three_generators_exceed() {
        let report = cayley_digraph_check(
            &[2, 2],
            &[vec![1, 0], vec![0, 1], vec![1, 1]],
        )
        .unwrap();
        assert!(report.zero_sum);
        assert_eq!(report.arborescences, BigInt::from(16));
        assert!(report.exceeds_order);
        assert_eq!(report.critical_invariants.to_string(), "Z/4 x Z/4");
    }

    #[test]
    fn cyclic_six_three_generators_exceed() {
        let report = cayley_digraph_check(&[6], &[vec![1], vec![2], vec![3]]).unwrap();
        assert!(report.zero_sum);
        assert!(report.exceeds_order);
        assert!(report.arborescences > BigInt::from(6));
    }

    #[test]
    fn invalid_generators_rejected() {
        assert!(matches!(
            cayley_digraph_check(&[4], &[vec![2]]),
            Err(McKayError::GeneratorsInvalid(_))
        ));
        assert!(matches!(
            cayley_digraph_check(&[4], &[vec![0]]),
            Err(McKayError::GeneratorsInvalid(_))
        ));
        assert!(matches!(
            cayley_digraph_check(&[4], &[vec![6]]),
            Err(McKayError::GeneratorsInvalid(_))
        ));
    }
}
