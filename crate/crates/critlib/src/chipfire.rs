//! The chip-firing engine.
//!
//! A [`ChipSystem`] wraps an avalanche-finite matrix certified at
//! construction: it is a Z-matrix whose exact inverse exists and is
//! entrywise nonnegative, with a positive witness vector r = C⁻¹·𝟙
//! satisfying C·r = 𝟙 > 0. Everything downstream (stabilization,
//! recurrence, superstability, burning tests) relies on that certificate.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::intlinalg::{
    self, cokernel_invariants, exact_inverse, kernel_basis, nullspace_primitive, solve_integral,
    strike, AbelianGroupInvariants, ImageLattice, IntMatrix, LinAlgError, RationalMatrix,
};

/// Upper bound on the stable-configuration grid enumerated by the
/// representative searches. Overridable per call (CLI: `CRITLIB_GUARD`).
pub const DEFAULT_GUARD: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChipError {
    #[error("matrix is not a Z-matrix (positive off-diagonal at ({0}, {1}))")]
    NotZMatrix(usize, usize),
    #[error("matrix is not avalanche-finite: {0}")]
    NotAvalancheFinite(String),
    #[error("configuration length {got} does not match system size {want}")]
    LengthMismatch { got: usize, want: usize },
    #[error("invalid toppling at node {node}: {have} chips < threshold {need}")]
    InvalidToppling { node: usize, have: BigInt, need: BigInt },
    #[error("negative chip count at node {0}")]
    NegativeInput(usize),
    #[error("stable-configuration grid of size {size} exceeds the guard {guard}")]
    TooLarge { size: BigInt, guard: u64 },
    #[error("vector is not in the image lattice")]
    NotInImage,
    #[error("support does not reach every node (first unreached: {0})")]
    NotCovering(usize),
    #[error("burning configuration has a negative entry at node {0}")]
    NotNonnegative(usize),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

/// An integer chip vector. Ordering is lexicographic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChipConfig(pub Vec<BigInt>);

impl ChipConfig {
    pub fn from_i64(values: &[i64]) -> Self {
        ChipConfig(values.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn zero(len: usize) -> Self {
        ChipConfig(vec![BigInt::zero(); len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|v| !v.is_negative())
    }

    pub fn add(&self, other: &ChipConfig) -> ChipConfig {
        assert_eq!(self.len(), other.len());
        ChipConfig(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &ChipConfig) -> ChipConfig {
        assert_eq!(self.len(), other.len());
        ChipConfig(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn add_unit(&self, i: usize) -> ChipConfig {
        let mut v = self.clone();
        v.0[i] += 1;
        v
    }
}

impl std::fmt::Debug for ChipConfig {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl std::fmt::Display for ChipConfig {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Proof data that a Z-matrix is avalanche-finite: the exact inverse is
/// entrywise nonnegative and r = C⁻¹·𝟙 is a positive vector with C·r = 𝟙.
#[derive(Debug, Clone)]
pub struct AvalancheCertificate {
    pub witness_r: Vec<BigRational>,
    pub inverse_nonneg: bool,
}

/// Which node to fire next during stabilization. Both strategies reach the
/// same stable configuration with the same firing counts (confluence); the
/// FIFO queue is the default.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiringStrategy {
    FifoQueue,
    MaxSurplus,
}

/// Ordered log of one stabilization: fired nodes plus per-node totals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiringRecord {
    pub sequence: Vec<usize>,
    #[serde(with = "crate::intlinalg::bigint_strings")]
    pub counts: Vec<BigInt>,
}

impl FiringRecord {
    pub fn empty(len: usize) -> Self {
        FiringRecord {
            sequence: Vec::new(),
            counts: vec![BigInt::zero(); len],
        }
    }

    pub fn total_firings(&self) -> BigInt {
        self.counts.iter().sum()
    }
}

/// Certificate produced by [`ChipSystem::check_burning`].
#[derive(Debug, Clone)]
pub struct BurningCertificate {
    pub b: ChipConfig,
    pub z: Vec<BigInt>,
    pub reached: BTreeSet<usize>,
}

/// An avalanche-finite matrix with its firing digraph, cached exact inverse,
/// and coset bookkeeping for im(Cᵗ). Immutable after certification.
#[derive(Debug, Clone)]
pub struct ChipSystem {
    c: IntMatrix,
    inverse: RationalMatrix,
    digraph: Vec<Vec<usize>>,
    diag: Vec<BigInt>,
    v_c: ChipConfig,
    certificate: AvalancheCertificate,
    image_ct: ImageLattice,
}

impl ChipSystem {
    /// Certify that `c` is avalanche-finite and build the system.
    pub fn certify(c: IntMatrix) -> Result<ChipSystem, ChipError> {
        if !c.is_square() {
            return Err(LinAlgError::NotSquare {
                rows: c.rows(),
                cols: c.cols(),
            }
            .into());
        }
        let n = c.rows();
        for i in 0..n {
            for j in 0..n {
                if i != j && c.get(i, j).is_positive() {
                    return Err(ChipError::NotZMatrix(i, j));
                }
            }
        }
        let inverse = exact_inverse(&c)
            .map_err(|_| ChipError::NotAvalancheFinite("matrix is singular".into()))?;
        if !inverse.is_entrywise_nonnegative() {
            return Err(ChipError::NotAvalancheFinite(
                "inverse has a negative entry".into(),
            ));
        }
        let ones = vec![BigInt::one(); n];
        let witness_r = inverse.mul_int_vec(&ones);
        if witness_r.iter().any(|r| !r.is_positive()) {
            return Err(ChipError::NotAvalancheFinite(
                "witness vector C^{-1}*1 is not positive".into(),
            ));
        }
        // C·r = C·C⁻¹·𝟙 must reproduce 𝟙 exactly
        let cr = RationalMatrix::from_int(&c).mul_vec(&witness_r);
        if cr.iter().any(|x| !x.is_one()) {
            return Err(ChipError::NotAvalancheFinite(
                "C * witness != all-ones".into(),
            ));
        }
        let digraph = (0..n)
            .map(|i| (0..n).filter(|&j| c.get(i, j).is_negative()).collect())
            .collect();
        let diag = (0..n).map(|i| c.get(i, i).clone()).collect::<Vec<_>>();
        let v_c = ChipConfig(diag.iter().map(|d| d - 1).collect());
        let image_ct = ImageLattice::new(&c.transpose());
        Ok(ChipSystem {
            certificate: AvalancheCertificate {
                witness_r,
                inverse_nonneg: true,
            },
            c,
            inverse,
            digraph,
            diag,
            v_c,
            image_ct,
        })
    }

    pub fn size(&self) -> usize {
        self.c.rows()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.c
    }

    pub fn inverse(&self) -> &RationalMatrix {
        &self.inverse
    }

    pub fn certificate(&self) -> &AvalancheCertificate {
        &self.certificate
    }

    pub fn digraph(&self) -> &[Vec<usize>] {
        &self.digraph
    }

    pub fn diagonal(&self) -> &[BigInt] {
        &self.diag
    }

    /// v^C = [c₁₁-1, ..., c_ℓℓ-1], the pointwise maximal stable config.
    pub fn v_c(&self) -> &ChipConfig {
        &self.v_c
    }

    pub fn image_ct(&self) -> &ImageLattice {
        &self.image_ct
    }

    fn check_len(&self, v: &ChipConfig) -> Result<(), ChipError> {
        if v.len() != self.size() {
            return Err(ChipError::LengthMismatch {
                got: v.len(),
                want: self.size(),
            });
        }
        Ok(())
    }

    pub fn is_stable(&self, v: &ChipConfig) -> bool {
        v.len() == self.size()
            && v.0
                .iter()
                .zip(&self.diag)
                .all(|(x, d)| !x.is_negative() && x < d)
    }

    /// Fire node `i` once: subtract row i of C.
    pub fn topple(&self, v: &ChipConfig, i: usize) -> Result<ChipConfig, ChipError> {
        self.check_len(v)?;
        if v.0[i] < self.diag[i] {
            return Err(ChipError::InvalidToppling {
                node: i,
                have: v.0[i].clone(),
                need: self.diag[i].clone(),
            });
        }
        let mut out = v.clone();
        for j in 0..self.size() {
            out.0[j] -= self.c.get(i, j);
        }
        Ok(out)
    }

    pub fn stabilize(&self, v: &ChipConfig) -> Result<(ChipConfig, FiringRecord), ChipError> {
        self.stabilize_with(v, FiringStrategy::FifoQueue)
    }

    pub fn stabilize_with(
        &self,
        v: &ChipConfig,
        strategy: FiringStrategy,
    ) -> Result<(ChipConfig, FiringRecord), ChipError> {
        self.check_len(v)?;
        if let Some(i) = v.0.iter().position(|x| x.is_negative()) {
            return Err(ChipError::NegativeInput(i));
        }
        match strategy {
            FiringStrategy::FifoQueue => Ok(self.stabilize_fifo(v)),
            FiringStrategy::MaxSurplus => Ok(self.stabilize_max_surplus(v)),
        }
    }

    fn stabilize_fifo(&self, v: &ChipConfig) -> (ChipConfig, FiringRecord) {
        let n = self.size();
        let mut cur = v.clone();
        let mut record = FiringRecord::empty(n);
        let mut queue: VecDeque<usize> = VecDeque::new();
        let mut queued = vec![false; n];
        for i in 0..n {
            if cur.0[i] >= self.diag[i] {
                queue.push_back(i);
                queued[i] = true;
            }
        }
        while let Some(i) = queue.pop_front() {
            queued[i] = false;
            if cur.0[i] < self.diag[i] {
                continue;
            }
            for j in 0..n {
                cur.0[j] -= self.c.get(i, j);
                // nodes enter the queue when they cross their threshold
                if cur.0[j] >= self.diag[j] && !queued[j] {
                    queue.push_back(j);
                    queued[j] = true;
                }
            }
            record.sequence.push(i);
            record.counts[i] += 1;
        }
        debug_assert!(self.is_stable(&cur));
        (cur, record)
    }

    fn stabilize_max_surplus(&self, v: &ChipConfig) -> (ChipConfig, FiringRecord) {
        let n = self.size();
        let mut cur = v.clone();
        let mut record = FiringRecord::empty(n);
        loop {
            let mut best: Option<(BigInt, usize)> = None;
            for i in 0..n {
                let surplus = &cur.0[i] - &self.diag[i];
                if surplus.is_negative() {
                    continue;
                }
                match &best {
                    Some((s, _)) if *s >= surplus => {}
                    _ => best = Some((surplus, i)),
                }
            }
            let Some((_, i)) = best else { break };
            for j in 0..n {
                cur.0[j] -= self.c.get(i, j);
            }
            record.sequence.push(i);
            record.counts[i] += 1;
        }
        (cur, record)
    }

    /// Xᵢ(v) = stab(v + eᵢ).
    pub fn avalanche_op(&self, v: &ChipConfig, i: usize) -> Result<ChipConfig, ChipError> {
        self.check_len(v)?;
        Ok(self.stabilize(&v.add_unit(i))?.0)
    }

    /// Recurrence test via stab(v + diag) = v: adding the diagonal pushes
    /// every coordinate to its threshold, so the added vector qualifies for
    /// the defining property of recurrence.
    pub fn is_recurrent(&self, v: &ChipConfig) -> Result<bool, ChipError> {
        self.check_len(v)?;
        if !self.is_stable(v) {
            return Ok(false);
        }
        let bumped = ChipConfig(v.0.iter().zip(&self.diag).map(|(x, d)| x + d).collect());
        Ok(self.stabilize(&bumped)?.0 == *v)
    }

    /// Product-space size of the stable-configuration grid.
    pub fn stable_grid_size(&self) -> BigInt {
        self.diag.iter().product()
    }

    fn guard_check(&self, guard: u64) -> Result<(), ChipError> {
        let size = self.stable_grid_size();
        if size > BigInt::from(guard) {
            return Err(ChipError::TooLarge { size, guard });
        }
        Ok(())
    }

    /// All stable configurations in lexicographic order.
    pub fn stable_configs(&self, guard: u64) -> Result<Vec<ChipConfig>, ChipError> {
        self.guard_check(guard)?;
        let n = self.size();
        let mut out = Vec::new();
        let mut cur = ChipConfig::zero(n);
        loop {
            out.push(cur.clone());
            // odometer increment, least significant coordinate last
            let mut pos = n;
            while pos > 0 {
                let i = pos - 1;
                cur.0[i] += 1;
                if cur.0[i] < self.diag[i] {
                    break;
                }
                cur.0[i] = BigInt::zero();
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
        }
        Ok(out)
    }

    /// The |det C| recurrent configurations, in lexicographic order.
    pub fn recurrent_representatives(&self, guard: u64) -> Result<Vec<ChipConfig>, ChipError> {
        let mut out = Vec::new();
        for v in self.stable_configs(guard)? {
            if self.is_recurrent(&v)? {
                out.push(v);
            }
        }
        Ok(out)
    }

    /// Superstables are v^C minus the recurrents (the duality bijection).
    pub fn superstable_representatives(&self, guard: u64) -> Result<Vec<ChipConfig>, ChipError> {
        let mut out: Vec<ChipConfig> = self
            .recurrent_representatives(guard)?
            .into_iter()
            .map(|v| self.v_c.sub(&v))
            .collect();
        out.sort();
        Ok(out)
    }

    /// Superstability via the duality route: u nonnegative and v^C - u
    /// recurrent.
    pub fn is_superstable(&self, u: &ChipConfig) -> Result<bool, ChipError> {
        self.check_len(u)?;
        if !u.is_nonnegative() {
            return Ok(false);
        }
        let dual = self.v_c.sub(u);
        if !dual.is_nonnegative() {
            // some coordinate is >= c_ii, so z = e_i cluster-fires u
            return Ok(false);
        }
        self.is_recurrent(&dual)
    }

    /// Definitional superstability: no nonzero z >= 0 with u - Cᵗz >= 0.
    /// Any such z satisfies z <= (Cᵗ)⁻¹·u entrywise because the inverse is
    /// nonnegative, which bounds the search box exactly.
    pub fn is_superstable_direct(&self, u: &ChipConfig) -> Result<bool, ChipError> {
        self.check_len(u)?;
        if !u.is_nonnegative() {
            return Ok(false);
        }
        let n = self.size();
        let mut bounds = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = BigRational::zero();
            for j in 0..n {
                acc += self.inverse.get(j, i) * BigRational::from_integer(u.0[j].clone());
            }
            bounds.push(acc.floor().to_integer());
        }
        if bounds.iter().any(|b| b.is_negative()) {
            return Ok(true);
        }
        let mut z = vec![BigInt::zero(); n];
        loop {
            let mut pos = n;
            while pos > 0 {
                let i = pos - 1;
                z[i] += 1;
                if z[i] <= bounds[i] {
                    break;
                }
                z[i] = BigInt::zero();
                pos -= 1;
            }
            if pos == 0 {
                return Ok(true); // box exhausted, no witness found
            }
            let ctz = self.c.mul_vec_transposed(&z);
            let ok = u
                .0
                .iter()
                .zip(&ctz)
                .all(|(ui, wi)| !(ui - wi).is_negative());
            if ok {
                return Ok(false); // z cluster-fires u
            }
        }
    }

    /// Energy E(u) = ‖C⁻¹u‖², exact.
    pub fn energy(&self, u: &ChipConfig) -> Result<BigRational, ChipError> {
        self.check_len(u)?;
        let x = self.inverse.mul_int_vec(&u.0);
        Ok(x.iter().map(|c| c * c).sum())
    }

    /// Validate a burning configuration: b >= 0, b = Cᵗz with z integral
    /// (hence z >= 0 by nonnegativity of the inverse), and supp(b) reaches
    /// every node of the firing digraph.
    pub fn check_burning(&self, b: &ChipConfig) -> Result<BurningCertificate, ChipError> {
        self.check_len(b)?;
        if let Some(i) = b.0.iter().position(|x| x.is_negative()) {
            return Err(ChipError::NotNonnegative(i));
        }
        let z = solve_integral(&self.c.transpose(), &b.0).ok_or(ChipError::NotInImage)?;
        debug_assert!(z.iter().all(|zi| !zi.is_negative()));
        let n = self.size();
        let mut reached = BTreeSet::new();
        let mut queue: VecDeque<usize> = (0..n).filter(|&i| !b.0[i].is_zero()).collect();
        for &i in &queue {
            reached.insert(i);
        }
        while let Some(i) = queue.pop_front() {
            for &j in &self.digraph[i] {
                if reached.insert(j) {
                    queue.push_back(j);
                }
            }
        }
        if let Some(missing) = (0..n).find(|i| !reached.contains(i)) {
            return Err(ChipError::NotCovering(missing));
        }
        Ok(BurningCertificate {
            b: b.clone(),
            z,
            reached,
        })
    }

    /// One-shot recurrence test: v is recurrent iff stab(v + b) = v for a
    /// burning configuration b. When v is recurrent the firing counts must
    /// equal the certificate's z vector.
    pub fn recurrent_test_via_burning(
        &self,
        cert: &BurningCertificate,
        v: &ChipConfig,
    ) -> Result<bool, ChipError> {
        self.check_len(v)?;
        let (stab, record) = self.stabilize(&v.add(&cert.b))?;
        let recurrent = stab == *v;
        if recurrent {
            debug_assert_eq!(record.counts, cert.z, "burning firing counts mismatch");
        }
        Ok(recurrent)
    }

    /// The unique recurrent configuration representing 0 + im(Cᵗ).
    pub fn zero_coset_recurrent(&self, guard: u64) -> Result<ChipConfig, ChipError> {
        for v in self.recurrent_representatives(guard)? {
            if self.image_ct.contains(&v.0) {
                return Ok(v);
            }
        }
        unreachable!("recurrents represent every coset, including zero")
    }
}

/// Consistency report for the cokernel relations tying a singular extended
/// matrix to the avalanche-finite matrix obtained by striking a row/column.
#[derive(Debug, Clone)]
pub struct ExtendedCokernelReport {
    pub delta: Vec<BigInt>,
    pub gamma: Vec<BigInt>,
    pub strike_index: usize,
    /// delta and gamma both have coordinate 1 at the strike index
    pub hypotheses_hold: bool,
    pub coker_struck_t: AbelianGroupInvariants,
    pub perp_quotient: AbelianGroupInvariants,
    pub coker_extended_t: AbelianGroupInvariants,
    /// coker(Cᵗ) = δ⊥ / im(C̃ᵗ)
    pub perp_relation_holds: bool,
    /// coker(C̃ᵗ) = Z ⊕ coker(Cᵗ)
    pub split_relation_holds: bool,
}

impl ExtendedCokernelReport {
    pub fn relations_hold(&self) -> bool {
        self.perp_relation_holds && self.split_relation_holds
    }
}

/// Check the relations coker(C̃ᵗ) = Z ⊕ coker(Cᵗ) and coker(Cᵗ) = δ⊥/im(C̃ᵗ)
/// for a singular square matrix with one-dimensional nullspaces on both
/// sides. The relations are computed unconditionally; the report records
/// whether the δ/γ unit-coordinate hypotheses guaranteeing them hold.
pub fn extended_cokernel_relations(
    c_ext: &IntMatrix,
    strike_index: usize,
) -> Result<ExtendedCokernelReport, ChipError> {
    let delta = nullspace_primitive(c_ext)?
        .ok_or(LinAlgError::RankDeficiencyNotOne { nullity: 0 })?;
    let gamma = nullspace_primitive(&c_ext.transpose())?
        .ok_or(LinAlgError::RankDeficiencyNotOne { nullity: 0 })?;
    let struck = strike(c_ext, strike_index);
    let coker_struck_t = cokernel_invariants(&struck.transpose());

    // delta-perp as a saturated sublattice, then im(C̃ᵗ) in its basis
    let n = c_ext.rows();
    let mut delta_row = IntMatrix::zero(1, n);
    for j in 0..n {
        delta_row.set(0, j, delta[j].clone());
    }
    let basis = kernel_basis(&delta_row); // n x (n-1)
    let ext_t = c_ext.transpose();
    let mut coords = IntMatrix::zero(basis.cols(), n);
    for j in 0..n {
        // columns of C̃ᵗ pair to zero with the right null vector of C̃
        let col = ext_t.col(j);
        let y = solve_integral(&basis, &col).expect("column lies in the saturated lattice");
        for i in 0..basis.cols() {
            coords.set(i, j, y[i].clone());
        }
    }
    let perp_quotient = cokernel_invariants(&coords);
    let coker_extended_t = cokernel_invariants(&ext_t);

    let one = BigInt::one();
    let hypotheses_hold = delta[strike_index] == one && gamma[strike_index] == one;
    let perp_relation_holds = coker_struck_t == perp_quotient;
    let split_relation_holds = coker_extended_t.free_rank == coker_struck_t.free_rank + 1
        && coker_extended_t.torsion == coker_struck_t.torsion;

    Ok(ExtendedCokernelReport {
        delta,
        gamma,
        strike_index,
        hypotheses_hold,
        coker_struck_t,
        perp_quotient,
        coker_extended_t,
        perp_relation_holds,
        split_relation_holds,
    })
}

/// Verify C + Cᵗ is positive definite through leading principal minors.
pub fn symmetrization_positive_definite(c: &IntMatrix) -> bool {
    let sym = c.add(&c.transpose());
    intlinalg::leading_principal_minors(&sym)
        .iter()
        .all(|m| m.is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cartan_a2() -> ChipSystem {
        ChipSystem::certify(IntMatrix::from_rows(&[&[2, -1], &[-1, 2]])).unwrap()
    }

    fn mckay_a4() -> ChipSystem {
        // McKay-Cartan matrix of the 3-dimensional rotation representation
        // of the alternating group on four letters
        ChipSystem::certify(IntMatrix::from_rows(&[
            &[3, 0, -1],
            &[0, 3, -1],
            &[-1, -1, 1],
        ]))
        .unwrap()
    }

    #[test]
    fn certify_accepts_cartan_a2_with_witness() {
        let sys = cartan_a2();
        let one = BigRational::one();
        assert_eq!(sys.certificate().witness_r, vec![one.clone(), one]);
        assert!(sys.certificate().inverse_nonneg);
    }

    #[test]
    fn certify_rejects_singular() {
        let err = ChipSystem::certify(IntMatrix::from_rows(&[&[1, -1], &[-1, 1]])).unwrap_err();
        assert!(matches!(err, ChipError::NotAvalancheFinite(_)));
    }

    #[test]
    fn certify_rejects_positive_offdiagonal() {
        let err = ChipSystem::certify(IntMatrix::from_rows(&[&[2, 1], &[-1, 2]])).unwrap_err();
        assert_eq!(err, ChipError::NotZMatrix(0, 1));
    }

    #[test]
    fn topple_steps() {
        let sys = cartan_a2();
        let v = sys.topple(&ChipConfig::from_i64(&[2, 2]), 0).unwrap();
        assert_eq!(v, ChipConfig::from_i64(&[0, 3]));
        let v = sys.topple(&v, 1).unwrap();
        assert_eq!(v, ChipConfig::from_i64(&[1, 1]));
        let err = sys.topple(&ChipConfig::from_i64(&[1, 1]), 0).unwrap_err();
        assert!(matches!(err, ChipError::InvalidToppling { node: 0, .. }));
    }

    #[test]
    fn stabilize_rho_plus_highest_root_a2() {
        // two topplings: the height of the highest root is the Coxeter
        // number minus one
        let sys = cartan_a2();
        let (stab, rec) = sys.stabilize(&ChipConfig::from_i64(&[2, 2])).unwrap();
        assert_eq!(stab, ChipConfig::from_i64(&[1, 1]));
        assert_eq!(rec.total_firings(), BigInt::from(2));
    }

    #[test]
    fn stabilize_mckay_a4_example() {
        // adding the burning configuration to a recurrent state returns it
        // after 5 = 1 + 1 + 3 topplings
        let sys = mckay_a4();
        let (stab, rec) = sys.stabilize(&ChipConfig::from_i64(&[2, 2, 1])).unwrap();
        assert_eq!(stab, ChipConfig::from_i64(&[2, 2, 0]));
        assert_eq!(rec.total_firings(), BigInt::from(5));
        assert_eq!(
            rec.counts,
            vec![BigInt::from(1), BigInt::from(1), BigInt::from(3)]
        );
    }

    #[test]
    fn stabilize_stable_is_identity() {
        let sys = cartan_a2();
        let v = ChipConfig::from_i64(&[1, 0]);
        let (stab, rec) = sys.stabilize(&v).unwrap();
        assert_eq!(stab, v);
        assert!(rec.sequence.is_empty());
    }

    #[test]
    fn stabilize_rejects_negative() {
        let sys = cartan_a2();
        let err = sys.stabilize(&ChipConfig::from_i64(&[-1, 0])).unwrap_err();
        assert_eq!(err, ChipError::NegativeInput(0));
    }

    #[test]
    fn avalanche_op_examples() {
        let sys = cartan_a2();
        // stab([2,1]) topples node 0 to [0,2], which is still unstable at
        // node 1 (threshold 2), so one more toppling lands on [1,0]
        let v = sys.avalanche_op(&ChipConfig::from_i64(&[1, 1]), 0).unwrap();
        assert_eq!(v, ChipConfig::from_i64(&[1, 0]));
        assert!(sys.is_recurrent(&v).unwrap());
        let v = sys.avalanche_op(&ChipConfig::from_i64(&[0, 0]), 0).unwrap();
        assert_eq!(v, ChipConfig::from_i64(&[1, 0]));
    }

    #[test]
    fn recurrents_and_superstables_mckay_a4() {
        let sys = mckay_a4();
        let rec = sys.recurrent_representatives(DEFAULT_GUARD).unwrap();
        let expect: Vec<ChipConfig> = [[1, 2, 0], [2, 1, 0], [2, 2, 0]]
            .iter()
            .map(|v| ChipConfig::from_i64(v))
            .collect();
        assert_eq!(rec, expect);
        let sup = sys.superstable_representatives(DEFAULT_GUARD).unwrap();
        let expect: Vec<ChipConfig> = [[0, 0, 0], [0, 1, 0], [1, 0, 0]]
            .iter()
            .map(|v| ChipConfig::from_i64(v))
            .collect();
        assert_eq!(sup, expect);
    }

    #[test]
    fn recurrents_cartan_a1() {
        // stable configs of [2] are {0, 1}; stab(v + 2) = v holds for both
        let sys = ChipSystem::certify(IntMatrix::from_rows(&[&[2]])).unwrap();
        let rec = sys.recurrent_representatives(DEFAULT_GUARD).unwrap();
        assert_eq!(
            rec,
            vec![ChipConfig::from_i64(&[0]), ChipConfig::from_i64(&[1])]
        );
    }

    #[test]
    fn recurrence_examples() {
        let sys = mckay_a4();
        for v in [[2, 2, 0], [1, 2, 0], [2, 1, 0]] {
            assert!(sys.is_recurrent(&ChipConfig::from_i64(&v)).unwrap());
        }
        assert!(!sys.is_recurrent(&ChipConfig::from_i64(&[0, 0, 0])).unwrap());
        let a2 = cartan_a2();
        assert!(a2.is_recurrent(&ChipConfig::from_i64(&[1, 1])).unwrap());
        assert!(!a2.is_recurrent(&ChipConfig::from_i64(&[0, 0])).unwrap());
    }

    #[test]
    fn superstable_examples() {
        let sys = mckay_a4();
        assert!(sys
            .is_superstable(&ChipConfig::from_i64(&[0, 0, 0]))
            .unwrap());
        assert!(!sys
            .is_superstable(&ChipConfig::from_i64(&[1, 1, 0]))
            .unwrap());
        assert!(!sys
            .is_superstable(&ChipConfig::from_i64(&[-1, 0, 0]))
            .unwrap());
        // the direct definitional search agrees on every stable config
        for v in sys.stable_configs(DEFAULT_GUARD).unwrap() {
            assert_eq!(
                sys.is_superstable(&v).unwrap(),
                sys.is_superstable_direct(&v).unwrap(),
                "disagreement at {v:?}"
            );
        }
    }

    #[test]
    fn energy_examples() {
        let sys = cartan_a2();
        assert_eq!(
            sys.energy(&ChipConfig::zero(2)).unwrap(),
            BigRational::zero()
        );
        let e = sys.energy(&ChipConfig::from_i64(&[1, 0])).unwrap();
        assert_eq!(e, BigRational::new(BigInt::from(5), BigInt::from(9)));
    }

    #[test]
    fn burning_certificate_mckay_a4() {
        let sys = mckay_a4();
        let cert = sys
            .check_burning(&ChipConfig::from_i64(&[0, 0, 1]))
            .unwrap();
        assert_eq!(
            cert.z,
            vec![BigInt::from(1), BigInt::from(1), BigInt::from(3)]
        );
        assert!(sys
            .recurrent_test_via_burning(&cert, &ChipConfig::from_i64(&[2, 2, 0]))
            .unwrap());
        assert!(!sys
            .recurrent_test_via_burning(&cert, &ChipConfig::from_i64(&[0, 0, 0]))
            .unwrap());
    }

    #[test]
    fn burning_rejects_zero() {
        let sys = cartan_a2();
        let err = sys.check_burning(&ChipConfig::zero(2)).unwrap_err();
        assert!(matches!(err, ChipError::NotCovering(_)));
    }

    #[test]
    fn zero_coset_representatives() {
        use crate::rootsys::{root_system, DynkinType};
        // type A with odd rank: rho minus the middle fundamental weight
        let a3 = ChipSystem::certify(root_system(DynkinType::new('A', 3).unwrap()).cartan)
            .unwrap();
        assert_eq!(
            a3.zero_coset_recurrent(DEFAULT_GUARD).unwrap(),
            ChipConfig::from_i64(&[1, 0, 1])
        );
        // determinant one: the Weyl vector is the only recurrent
        let e8 = ChipSystem::certify(root_system(DynkinType::new('E', 8).unwrap()).cartan)
            .unwrap();
        assert_eq!(
            e8.zero_coset_recurrent(DEFAULT_GUARD).unwrap(),
            ChipConfig(vec![BigInt::one(); 8])
        );
        // the A4 quiver system: one of the three recurrents lies in im(C^t)
        let sys = mckay_a4();
        assert_eq!(
            sys.zero_coset_recurrent(DEFAULT_GUARD).unwrap(),
            ChipConfig::from_i64(&[2, 2, 0])
        );
    }

    #[test]
    fn extended_relations_hold_for_extended_cartan_a2() {
        let c_ext = IntMatrix::from_rows(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]);
        let report = extended_cokernel_relations(&c_ext, 0).unwrap();
        assert!(report.hypotheses_hold);
        assert!(report.relations_hold());
        assert_eq!(report.coker_struck_t.torsion, vec![BigInt::from(3)]);
    }

    #[test]
    fn extended_relations_fail_for_nonunit_gamma() {
        let c_ext = IntMatrix::from_rows(&[&[30, -15], &[-20, 10]]);
        let report = extended_cokernel_relations(&c_ext, 0).unwrap();
        assert_eq!(report.delta, vec![BigInt::from(1), BigInt::from(2)]);
        assert_eq!(report.gamma, vec![BigInt::from(2), BigInt::from(3)]);
        assert!(!report.hypotheses_hold);
        assert!(!report.perp_relation_holds);
        assert!(!report.split_relation_holds);
        // the struck matrix [10] has cokernel Z/10 while the perp quotient is Z/5
        assert_eq!(report.coker_struck_t.torsion, vec![BigInt::from(10)]);
        assert_eq!(report.perp_quotient.torsion, vec![BigInt::from(5)]);
    }

    #[test]
    fn guard_rejects_oversized_enumeration() {
        let sys = cartan_a2();
        let err = sys.stable_configs(2).unwrap_err();
        assert!(matches!(err, ChipError::TooLarge { .. }));
    }

    #[test]
    fn systems_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<ChipSystem>();
        assert_send_sync::<ChipConfig>();
        assert_send_sync::<FiringRecord>();
        assert_send_sync::<crate::rootsys::RootSystemData>();
        assert_send_sync::<crate::mckay::CharacterTable>();
        assert_send_sync::<crate::mckay::McKayData>();
    }
}
