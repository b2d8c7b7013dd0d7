use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::chipfire::{ChipConfig, ChipError, ChipSystem};
use crate::intlinalg::IntMatrix;

use super::data::{
    extended_dual_game_matrix, numbers_fire, DynkinType, RootSysError, RootSystemData,
};

fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Side-by-side listing of the configurations named by the minuscule-weight
/// theorem and the ones the chip-firing engine enumerates.
#[derive(Debug, Clone)]
pub struct MinusculeTheoremReport {
    pub dynkin: DynkinType,
    pub index_of_connection: i64,
    pub minuscule_nodes: Vec<usize>,
    pub expected_superstables: Vec<ChipConfig>,
    pub computed_superstables: Vec<ChipConfig>,
    pub expected_recurrents: Vec<ChipConfig>,
    pub computed_recurrents: Vec<ChipConfig>,
}

impl MinusculeTheoremReport {
    pub fn passed(&self) -> bool {
        self.expected_superstables == self.computed_superstables
            && self.expected_recurrents == self.computed_recurrents
    }
}

/// Enumerate recurrents/superstables of the Cartan matrix and compare with
/// zero-plus-minuscule-weights and the Weyl vector family.
pub fn verify_minuscule_theorem(
    data: &RootSystemData,
    guard: u64,
) -> Result<MinusculeTheoremReport, ChipError> {
    let l = data.rank();
    let sys = ChipSystem::certify(data.cartan.clone())?;
    let mut expected_superstables = vec![ChipConfig::zero(l)];
    for &i in &data.minuscule_nodes {
        expected_superstables.push(ChipConfig::zero(l).add_unit(i));
    }
    expected_superstables.sort();
    let ones = ChipConfig(vec![BigInt::from(1); l]);
    let mut expected_recurrents = vec![ones.clone()];
    for &i in &data.minuscule_nodes {
        let mut v = ones.clone();
        v.0[i] -= 1;
        expected_recurrents.push(v);
    }
    expected_recurrents.sort();
    Ok(MinusculeTheoremReport {
        dynkin: data.dynkin,
        index_of_connection: data.index_of_connection,
        minuscule_nodes: data.minuscule_nodes.clone(),
        expected_superstables,
        computed_superstables: sys.superstable_representatives(guard)?,
        expected_recurrents,
        computed_recurrents: sys.recurrent_representatives(guard)?,
    })
}

/// Burning configurations for a Cartan matrix are exactly the nonzero
/// dominant weights lying in the root lattice.
pub fn burning_configurations_cartan(data: &RootSystemData, b: &[BigInt]) -> bool {
    if b.len() != data.rank() {
        return false;
    }
    if b.iter().all(|x| x.is_zero()) {
        return false;
    }
    if b.iter().any(|x| x.is_negative()) {
        return false;
    }
    let sys = ChipSystem::certify(data.cartan.clone()).expect("Cartan matrix is avalanche-finite");
    sys.image_ct().contains(b)
}

/// A maximal chain in the root order together with the toppling run
/// rho + highest root -> rho that descends it.
#[derive(Debug, Clone)]
pub struct ChainFromRho {
    /// indices into the poset, bottom (a simple root) to top (highest root)
    pub chain: Vec<usize>,
    /// fired nodes, in toppling order (0-based)
    pub fired: Vec<usize>,
    /// states from rho + highest root down to rho
    pub states: Vec<ChipConfig>,
}

/// Descend a maximal chain of the root poset (lowest connecting node first
/// at each choice) and replay it as topplings from rho + highest root.
pub fn stabilization_chain_from_rho(data: &RootSystemData) -> Result<ChainFromRho, ChipError> {
    let sys = ChipSystem::certify(data.cartan.clone())?;
    // walk down from the highest root along the lowest node whose pairing
    // with the current root is positive; only those descents topple validly
    let mut chain = vec![data.highest_root];
    let mut steps = Vec::new(); // connecting simple roots, top to bottom
    let mut cur = data.highest_root;
    while data.poset.roots[cur].height > 1 {
        let mut below = data.poset.lower_covers(cur);
        below.sort_by_key(|&(_, i)| i);
        let (lo, i) = below
            .into_iter()
            .find(|&(_, i)| data.poset.roots[cur].weight[i] > 0)
            .expect("some positive-pairing descent exists below every root");
        steps.push(i);
        chain.push(lo);
        cur = lo;
    }
    // the bottom of the chain is the simple root itself
    let bottom = data.poset.roots[cur]
        .simple
        .iter()
        .position(|&c| c == 1)
        .expect("chain bottom is a simple root");
    steps.push(bottom);
    chain.reverse();

    // topple from rho + highest root, following the chain top-down
    let rho_plus = ChipConfig(to_big(&data.rho())).add(&ChipConfig(to_big(
        &data.highest().weight,
    )));
    let mut states = vec![rho_plus];
    let mut fired = Vec::new();
    for &i in &steps {
        let next = sys.topple(states.last().unwrap(), i)?;
        states.push(next);
        fired.push(i);
    }
    let rho = ChipConfig(to_big(&data.rho()));
    assert_eq!(states.last().unwrap(), &rho, "chain must stabilize to rho");
    assert_eq!(fired.len() as i64, data.coxeter_number - 1);
    Ok(ChainFromRho {
        chain,
        fired,
        states,
    })
}

/// Number of maximal chains of the root order (equivalently, of toppling
/// sequences from rho + highest root down to rho).
pub fn maximal_chain_count(data: &RootSystemData) -> BigInt {
    let n = data.poset.len();
    let mut count = vec![BigInt::from(0); n];
    // process by height: chains into a simple root count once
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&k| data.poset.roots[k].height);
    for k in order {
        if data.poset.roots[k].height == 1 {
            count[k] = BigInt::from(1);
            continue;
        }
        count[k] = data
            .poset
            .lower_covers(k)
            .iter()
            .map(|&(lo, _)| count[lo].clone())
            .sum();
    }
    count[data.highest_root].clone()
}

/// The toppling run (rho - lambda) + alpha* -> rho - lambda for a minuscule
/// node, with the matching padded numbers-game looping sequence for the
/// dual extended matrix.
#[derive(Debug, Clone)]
pub struct LoopingRun {
    pub dynkin: DynkinType,
    pub node: usize,
    /// fired nodes of the toppling run (0-based, finite nodes)
    pub fired: Vec<usize>,
    /// rho - lambda, then (rho - lambda) + alpha*, then one state per
    /// toppling, ending back at rho - lambda
    pub topple_states: Vec<ChipConfig>,
    /// padded numbers-game states in phi-perp, one per toppling plus the
    /// initial lambda state; first equals last
    pub padded_states: Vec<Vec<BigInt>>,
    /// the padding functional [1, dual marks]
    pub padding: Vec<i64>,
    /// the extended matrix of the dual game
    pub game_matrix: IntMatrix,
}

/// Run the minuscule looping construction at `node`, firing the
/// lowest-index negative coordinate at each step, and verify every step on
/// both sides (valid topplings; valid dual-game firings staying in
/// phi-perp).
pub fn minuscule_toppling_and_looping(
    data: &RootSystemData,
    node: usize,
) -> Result<LoopingRun, RootSysError> {
    if !data.minuscule_nodes.contains(&node) {
        return Err(RootSysError::NotMinuscule(node));
    }
    let l = data.rank();
    let sys = ChipSystem::certify(data.cartan.clone()).expect("Cartan is avalanche-finite");
    let game = extended_dual_game_matrix(data);
    let padding = data.dual_marks.clone();

    let pad = |u: &[BigInt]| -> Vec<BigInt> {
        let head: BigInt = -(0..l)
            .map(|j| BigInt::from(padding[j + 1]) * &u[j])
            .sum::<BigInt>();
        let mut out = vec![head];
        out.extend_from_slice(u);
        out
    };

    let lambda: Vec<BigInt> = (0..l)
        .map(|j| BigInt::from(if j == node { 1 } else { 0 }))
        .collect();
    let alpha_star = to_big(&data.highest_short().weight);
    // u0 = lambda - alpha*, the reflection of lambda through alpha*
    let mut u: Vec<BigInt> = (0..l).map(|j| &lambda[j] - &alpha_star[j]).collect();

    let mut fired = Vec::new();
    let mut u_states = vec![lambda.clone(), u.clone()];
    while let Some(i) = u.iter().position(|x| x.is_negative()) {
        // minuscule weights keep every fired coordinate at exactly -1
        debug_assert_eq!(u[i], BigInt::from(-1));
        u = numbers_fire(&data.cartan, &u, i)?;
        fired.push(i);
        u_states.push(u.clone());
    }
    assert_eq!(u, lambda, "numbers game must return to the weight");
    assert_eq!(
        fired.len() as i64,
        data.highest_short().height,
        "step count must be the height of the highest short root"
    );

    // toppling side: v = rho - u
    let rho = data.rho();
    let topple_states: Vec<ChipConfig> = u_states
        .iter()
        .map(|state| {
            ChipConfig(
                (0..l)
                    .map(|j| BigInt::from(rho[j]) - &state[j])
                    .collect(),
            )
        })
        .collect();
    for (k, &i) in fired.iter().enumerate() {
        let stepped = sys
            .topple(&topple_states[k + 1], i)
            .expect("chain step must be a valid toppling");
        assert_eq!(stepped, topple_states[k + 2]);
    }
    assert_eq!(topple_states.first(), topple_states.last());

    // padded side: the same run is a looping sequence of the dual game,
    // with the wrap-around step firing the affine node 0
    let padded_states: Vec<Vec<BigInt>> = u_states.iter().map(|s| pad(s)).collect();
    for state in &padded_states {
        let functional: BigInt = state
            .iter()
            .zip(&padding)
            .map(|(x, &p)| x * BigInt::from(p))
            .sum();
        assert!(functional.is_zero(), "padded state left phi-perp");
    }
    let wrapped = numbers_fire(&game, &padded_states[0], 0)?;
    assert_eq!(wrapped, padded_states[1], "affine firing must open the loop");
    for (k, &i) in fired.iter().enumerate() {
        let stepped = numbers_fire(&game, &padded_states[k + 1], i + 1)?;
        assert_eq!(stepped, padded_states[k + 2], "dual game step mismatch");
    }

    Ok(LoopingRun {
        dynkin: data.dynkin,
        node,
        fired,
        topple_states,
        padded_states,
        padding,
        game_matrix: game,
    })
}
