use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::intlinalg::{determinant, nullspace_primitive, IntMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootSysError {
    #[error("unknown Dynkin family {0:?}")]
    UnknownFamily(char),
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: usize },
    #[error("cannot parse Dynkin type from {0:?}")]
    Unparseable(String),
    #[error("node {0} is not minuscule")]
    NotMinuscule(usize),
    #[error("numbers firing needs a negative coordinate at node {0}")]
    NotNegativeAtNode(usize),
}

/// One of the irreducible families A-G with its rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynkinType {
    family: char,
    rank: usize,
}

impl DynkinType {
    pub fn new(family: char, rank: usize) -> Result<Self, RootSysError> {
        let ok = match family {
            'A' => rank >= 1,
            'B' | 'C' => rank >= 2,
            'D' => rank >= 3,
            'E' => (6..=8).contains(&rank),
            'F' => rank == 4,
            'G' => rank == 2,
            _ => return Err(RootSysError::UnknownFamily(family)),
        };
        if !ok {
            return Err(RootSysError::InvalidRank { family, rank });
        }
        Ok(DynkinType { family, rank })
    }

    pub fn family(&self) -> char {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, 'A' | 'D' | 'E')
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = RootSysError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .ok_or_else(|| RootSysError::Unparseable(s.into()))?
            .to_ascii_uppercase();
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| RootSysError::Unparseable(s.into()))?;
        DynkinType::new(family, rank)
    }
}

/// Cartan matrix c_ij = (alpha_i, alpha_j~) in Bourbaki numbering.
/// Row i lists the fundamental-weight coordinates of the simple root i.
pub fn cartan_matrix(ty: DynkinType) -> IntMatrix {
    let l = ty.rank();
    let mut c = IntMatrix::identity(l).scale(&BigInt::from(2));
    let mut bond = |i: usize, j: usize, cij: i64, cji: i64| {
        c.set(i, j, BigInt::from(cij));
        c.set(j, i, BigInt::from(cji));
    };
    match ty.family() {
        'A' => {
            for i in 0..l - 1 {
                bond(i, i + 1, -1, -1);
            }
        }
        'B' => {
            for i in 0..l - 2 {
                bond(i, i + 1, -1, -1);
            }
            bond(l - 2, l - 1, -2, -1); // alpha_l is the short root
        }
        'C' => {
            for i in 0..l - 2 {
                bond(i, i + 1, -1, -1);
            }
            bond(l - 2, l - 1, -1, -2); // alpha_l is the long root
        }
        'D' => {
            for i in 0..l - 2 {
                bond(i, i + 1, -1, -1);
            }
            bond(l - 3, l - 1, -1, -1);
        }
        'E' => {
            // chain 1-3-4-5-6(-7)(-8) with node 2 attached to node 4
            let chain: &[usize] = &[0, 2, 3, 4, 5, 6, 7];
            for w in chain[..l - 1].windows(2) {
                bond(w[0], w[1], -1, -1);
            }
            bond(1, 3, -1, -1);
        }
        'F' => {
            bond(0, 1, -1, -1);
            bond(1, 2, -2, -1); // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            bond(2, 3, -1, -1);
        }
        'G' => {
            bond(0, 1, -1, -3); // alpha_1 short, alpha_2 long
        }
        _ => unreachable!(),
    }
    c
}

/// A positive root in both coordinate systems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    /// coordinates over the simple roots
    pub simple: Vec<i64>,
    /// coordinates over the fundamental weights (= Cᵗ·simple)
    pub weight: Vec<i64>,
    pub height: i64,
    /// half squared length under the integral symmetrization
    pub half_length: i64,
}

/// Positive roots ordered by (height, simple coordinates), with the cover
/// relations of the root order: (lower, upper, i) when upper = lower + alpha_i.
#[derive(Debug, Clone)]
pub struct RootPoset {
    pub roots: Vec<Root>,
    pub covers: Vec<(usize, usize, usize)>,
}

impl RootPoset {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn index_of(&self, simple: &[i64]) -> Option<usize> {
        self.roots.iter().position(|r| r.simple == simple)
    }

    /// Covers below `idx`: pairs (lower index, connecting simple root).
    pub fn lower_covers(&self, idx: usize) -> Vec<(usize, usize)> {
        self.covers
            .iter()
            .filter(|&&(_, up, _)| up == idx)
            .map(|&(lo, _, i)| (lo, i))
            .collect()
    }
}

/// Everything the verifiers need about one irreducible root system.
#[derive(Debug, Clone)]
pub struct RootSystemData {
    pub dynkin: DynkinType,
    pub cartan: IntMatrix,
    /// (l+1)x(l+1) with index 0 the affine node alpha_0 = -highest root
    pub extended_cartan: IntMatrix,
    pub poset: RootPoset,
    pub highest_root: usize,
    pub highest_short_root: usize,
    /// [1, delta_1, ..., delta_l]: left null vector of the extended Cartan
    /// transpose; the finite part expands the highest root in simple roots
    pub marks: Vec<i64>,
    /// [1, dual marks]: the finite part expands the highest root of the dual
    /// system in simple coroots; 1-entries single out the minuscule nodes
    pub dual_marks: Vec<i64>,
    /// [1, phi_1, ..., phi_l]: right null vector of the extended Cartan
    pub phi: Vec<i64>,
    /// 0-based node indices of the minuscule fundamental weights
    pub minuscule_nodes: Vec<usize>,
    pub coxeter_number: i64,
    pub index_of_connection: i64,
    /// symmetrizing half lengths d_i = (alpha_i, alpha_i)/2, gcd 1
    pub sym_d: Vec<i64>,
}

impl RootSystemData {
    pub fn rank(&self) -> usize {
        self.dynkin.rank()
    }

    pub fn highest(&self) -> &Root {
        &self.poset.roots[self.highest_root]
    }

    pub fn highest_short(&self) -> &Root {
        &self.poset.roots[self.highest_short_root]
    }

    /// Weyl vector in weight coordinates: the all-ones vector.
    pub fn rho(&self) -> Vec<i64> {
        vec![1; self.rank()]
    }

    /// (x, y) under the integral symmetrization, for simple-root coordinates.
    pub fn form(&self, x: &[i64], y: &[i64]) -> i64 {
        let l = self.rank();
        let mut acc: i64 = 0;
        for i in 0..l {
            if x[i] == 0 {
                continue;
            }
            for j in 0..l {
                if y[j] == 0 {
                    continue;
                }
                let cij = i64::try_from(self.cartan.get(i, j).clone()).unwrap();
                acc += x[i] * cij * self.sym_d[j] * y[j];
            }
        }
        acc
    }
}

/// Build the full data record for one type, asserting its structural
/// invariants along the way.
pub fn root_system(ty: DynkinType) -> RootSystemData {
    let l = ty.rank();
    let cartan = cartan_matrix(ty);
    let c: Vec<Vec<i64>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| i64::try_from(cartan.get(i, j).clone()).unwrap())
                .collect()
        })
        .collect();

    // symmetrizing diagonal: d_i c_ij = d_j c_ji, integral with gcd 1
    let sym_d = symmetrizing_diagonal(&c);

    // closure of the simple roots under root strings
    let mut known: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut by_height: Vec<Vec<Vec<i64>>> = vec![Vec::new()];
    for i in 0..l {
        let mut root = vec![0i64; l];
        root[i] = 1;
        known.insert(root.clone(), ());
        by_height[0].push(root);
    }
    by_height[0].sort();
    loop {
        let top = by_height.last().unwrap().clone();
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in &top {
            for i in 0..l {
                let mut cand = beta.clone();
                cand[i] += 1;
                if known.contains_key(&cand) || next.contains(&cand) {
                    continue;
                }
                // p = steps down the alpha_i string from beta
                let mut p = 0i64;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains_key(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                // pairing <beta, alpha_i~> is the i-th weight coordinate
                let pairing: i64 = (0..l).map(|j| beta[j] * c[j][i]).sum();
                if p - pairing >= 1 {
                    next.push(cand);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort();
        for r in &next {
            known.insert(r.clone(), ());
        }
        by_height.push(next);
    }

    let mut roots: Vec<Root> = Vec::new();
    for (h, level) in by_height.iter().enumerate() {
        for simple in level {
            let weight: Vec<i64> = (0..l).map(|j| (0..l).map(|i| simple[i] * c[i][j]).sum()).collect();
            let mut norm = 0i64;
            for i in 0..l {
                for j in 0..l {
                    norm += simple[i] * c[i][j] * sym_d[j] * simple[j];
                }
            }
            assert_eq!(norm % 2, 0);
            roots.push(Root {
                simple: simple.clone(),
                weight,
                height: (h + 1) as i64,
                half_length: norm / 2,
            });
        }
    }
    let index: HashMap<Vec<i64>, usize> = roots
        .iter()
        .enumerate()
        .map(|(k, r)| (r.simple.clone(), k))
        .collect();
    let mut covers = Vec::new();
    for (k, r) in roots.iter().enumerate() {
        for i in 0..l {
            if r.simple[i] == 0 {
                continue;
            }
            let mut below = r.simple.clone();
            below[i] -= 1;
            if below.iter().all(|&x| x == 0) {
                continue;
            }
            if let Some(&lo) = index.get(&below) {
                covers.push((lo, k, i));
            }
        }
    }
    let poset = RootPoset { roots, covers };

    // highest root: unique maximum of the root order
    let max_height = poset.roots.iter().map(|r| r.height).max().unwrap();
    let tops: Vec<usize> = (0..poset.len())
        .filter(|&k| poset.roots[k].height == max_height)
        .collect();
    assert_eq!(tops.len(), 1, "root order must have a unique maximum");
    let highest_root = tops[0];
    for r in &poset.roots {
        let diff_ok = (0..l).all(|i| poset.roots[highest_root].simple[i] >= r.simple[i]);
        assert!(diff_ok, "highest root must dominate coordinatewise");
    }

    // highest short root: root-order maximum among minimal-length roots
    let d_min = poset.roots.iter().map(|r| r.half_length).min().unwrap();
    let shorts: Vec<usize> = (0..poset.len())
        .filter(|&k| poset.roots[k].half_length == d_min)
        .collect();
    let highest_short_root = *shorts
        .iter()
        .max_by_key(|&&k| poset.roots[k].height)
        .unwrap();
    for &k in &shorts {
        let dominated = (0..l)
            .all(|i| poset.roots[highest_short_root].simple[i] >= poset.roots[k].simple[i]);
        assert!(dominated, "highest short root must dominate all short roots");
    }

    let alpha_tilde = poset.roots[highest_root].clone();
    let alpha_star = poset.roots[highest_short_root].clone();
    let d_long = alpha_tilde.half_length;
    let d_short = alpha_star.half_length;

    let exact_div = |num: i64, den: i64| {
        assert_eq!(num % den, 0, "coroot coefficient must be integral");
        num / den
    };
    let mut marks = vec![1i64];
    marks.extend(alpha_tilde.simple.iter().copied());
    let mut phi = vec![1i64];
    phi.extend((0..l).map(|i| exact_div(alpha_tilde.simple[i] * sym_d[i], d_long)));
    let mut dual_marks = vec![1i64];
    dual_marks.extend((0..l).map(|i| exact_div(alpha_star.simple[i] * sym_d[i], d_short)));

    let minuscule_nodes: Vec<usize> = (0..l).filter(|&i| dual_marks[i + 1] == 1).collect();

    // extended Cartan with alpha_0 = -(highest root)
    let mut ext = IntMatrix::zero(l + 1, l + 1);
    ext.set(0, 0, BigInt::from(2));
    for j in 0..l {
        ext.set(0, j + 1, BigInt::from(-alpha_tilde.weight[j]));
        let mut pair = 0i64;
        for k in 0..l {
            pair += c[j][k] * sym_d[k] * alpha_tilde.simple[k];
        }
        assert_eq!(pair % d_long, 0);
        ext.set(j + 1, 0, BigInt::from(-pair / d_long));
        for k in 0..l {
            ext.set(j + 1, k + 1, cartan.get(j, k).clone());
        }
    }

    let coxeter_number = 1 + alpha_tilde.height;
    let det = determinant(&cartan);
    let index_of_connection = i64::try_from(det).unwrap();

    let data = RootSystemData {
        dynkin: ty,
        cartan,
        extended_cartan: ext,
        poset,
        highest_root,
        highest_short_root,
        marks,
        dual_marks,
        phi,
        minuscule_nodes,
        coxeter_number,
        index_of_connection,
        sym_d,
    };
    assert_invariants(&data);
    data
}

fn symmetrizing_diagonal(c: &[Vec<i64>]) -> Vec<i64> {
    let l = c.len();
    // BFS over the diagram with rational ratios, then clear denominators
    let mut num = vec![0i64; l];
    let mut den = vec![0i64; l];
    num[0] = 1;
    den[0] = 1;
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for j in 0..l {
            if i == j || c[i][j] == 0 || den[j] != 0 {
                continue;
            }
            // c_ij d_j = c_ji d_i, so d_j = d_i * c_ji / c_ij
            num[j] = num[i] * c[j][i].abs();
            den[j] = den[i] * c[i][j].abs();
            let g = num[j].gcd(&den[j]);
            num[j] /= g;
            den[j] /= g;
            stack.push(j);
        }
    }
    assert!(den.iter().all(|&d| d != 0), "diagram must be connected");
    let lcm = den.iter().fold(1i64, |acc, &d| acc.lcm(&d));
    let mut d: Vec<i64> = (0..l).map(|i| num[i] * (lcm / den[i])).collect();
    let g = d.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    for x in &mut d {
        *x /= g;
    }
    d
}

fn assert_invariants(data: &RootSystemData) {
    let l = data.rank();
    let ty = data.dynkin;
    // kernel equations for the extended Cartan matrix
    let phi_big: Vec<BigInt> = data.phi.iter().map(|&x| BigInt::from(x)).collect();
    let marks_big: Vec<BigInt> = data.marks.iter().map(|&x| BigInt::from(x)).collect();
    assert!(
        data.extended_cartan
            .mul_vec(&phi_big)
            .iter()
            .all(|x| x.is_zero()),
        "{ty}: extended Cartan does not annihilate phi"
    );
    assert!(
        data.extended_cartan
            .mul_vec_transposed(&marks_big)
            .iter()
            .all(|x| x.is_zero()),
        "{ty}: transpose of extended Cartan does not annihilate the marks"
    );
    // Coxeter number relations
    assert_eq!(
        data.coxeter_number,
        1 + data.marks[1..].iter().sum::<i64>(),
        "{ty}: h != 1 + sum of marks"
    );
    assert_eq!(
        data.poset.len() as i64 * 2,
        data.coxeter_number * l as i64,
        "{ty}: |positive roots| != h*l/2"
    );
    // index of connection counts the minuscule weights
    assert_eq!(
        data.index_of_connection,
        1 + data.minuscule_nodes.len() as i64,
        "{ty}: f != 1 + #minuscule"
    );
    // weight coordinates agree with the Cartan transpose everywhere
    for r in &data.poset.roots {
        for j in 0..l {
            let w: i64 = (0..l)
                .map(|i| {
                    r.simple[i] * i64::try_from(data.cartan.get(i, j).clone()).unwrap()
                })
                .sum();
            assert_eq!(w, r.weight[j]);
        }
    }
    if ty.is_simply_laced() {
        assert_eq!(data.highest_root, data.highest_short_root);
        assert_eq!(data.marks, data.dual_marks);
        assert_eq!(data.marks, data.phi);
        assert_eq!(data.cartan, data.cartan.transpose());
    }
    // the dual game padding equals the dual marks
    let game = extended_dual_game_matrix(data);
    let null = nullspace_primitive(&game)
        .expect("dual game matrix has nullity 1")
        .expect("dual game matrix is singular");
    let dual_big: Vec<BigInt> = data.dual_marks.iter().map(|&x| BigInt::from(x)).collect();
    assert_eq!(null, dual_big, "{ty}: dual game padding != dual marks");
}

/// The matrix governing the padded numbers game: the transpose of the
/// extended Cartan matrix of the dual root system, built directly from this
/// system's data (finite block = this Cartan matrix; node 0 corresponds to
/// the negated coroot of the highest short root).
pub fn extended_dual_game_matrix(data: &RootSystemData) -> IntMatrix {
    let l = data.rank();
    let alpha_star = data.highest_short();
    let d_short = alpha_star.half_length;
    let mut g = IntMatrix::zero(l + 1, l + 1);
    g.set(0, 0, BigInt::from(2));
    for j in 0..l {
        // row 0: negated weight coordinates of the highest short root
        g.set(0, j + 1, BigInt::from(-alpha_star.weight[j]));
        // column 0: -(alpha_j, alpha_star)/d_star
        let pair = {
            let mut unit = vec![0i64; l];
            unit[j] = 1;
            data.form(&unit, &alpha_star.simple)
        };
        assert_eq!(pair % d_short, 0);
        g.set(j + 1, 0, BigInt::from(-pair / d_short));
        for k in 0..l {
            g.set(j + 1, k + 1, data.cartan.get(j, k).clone());
        }
    }
    g
}

/// One numbers-game firing with an arbitrary square matrix: requires
/// u_i < 0 and replaces u_j by u_j - m_ij * u_i.
pub fn numbers_fire(
    matrix: &IntMatrix,
    u: &[BigInt],
    i: usize,
) -> Result<Vec<BigInt>, RootSysError> {
    assert!(matrix.is_square() && matrix.rows() == u.len());
    if !u[i].is_negative() {
        return Err(RootSysError::NotNegativeAtNode(i));
    }
    Ok((0..u.len())
        .map(|j| &u[j] - matrix.get(i, j) * &u[i])
        .collect())
}

/// The positive roots with their order relation.
pub fn positive_roots(ty: DynkinType) -> RootPoset {
    root_system(ty).poset
}

/// The pair (highest root, highest short root).
pub fn highest_roots(ty: DynkinType) -> (Root, Root) {
    let data = root_system(ty);
    (data.highest().clone(), data.highest_short().clone())
}

/// 0-based indices of the minuscule fundamental weights.
pub fn minuscule_dominant_weights(ty: DynkinType) -> Vec<usize> {
    root_system(ty).minuscule_nodes
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn ty(s: &str) -> DynkinType {
        s.parse().unwrap()
    }

    #[test]
    fn type_validation() {
        assert!(DynkinType::new('A', 1).is_ok());
        assert!(DynkinType::new('B', 1).is_err());
        assert!(DynkinType::new('D', 2).is_err());
        assert!(DynkinType::new('E', 9).is_err());
        assert!(DynkinType::new('F', 4).is_ok());
        assert!(DynkinType::new('G', 2).is_ok());
        assert!(DynkinType::new('H', 3).is_err());
        assert_eq!(ty("e6").to_string(), "E6");
        assert!("X9".parse::<DynkinType>().is_err());
    }

    #[test]
    fn cartan_matrices_match_known_forms() {
        assert_eq!(
            cartan_matrix(ty("A2")),
            IntMatrix::from_rows(&[&[2, -1], &[-1, 2]])
        );
        assert_eq!(
            cartan_matrix(ty("G2")),
            IntMatrix::from_rows(&[&[2, -1], &[-3, 2]])
        );
        // the E6 matrix in Bourbaki numbering
        assert_eq!(
            cartan_matrix(ty("E6")),
            IntMatrix::from_rows(&[
                &[2, 0, -1, 0, 0, 0],
                &[0, 2, 0, -1, 0, 0],
                &[-1, 0, 2, -1, 0, 0],
                &[0, -1, -1, 2, -1, 0],
                &[0, 0, 0, -1, 2, -1],
                &[0, 0, 0, 0, -1, 2],
            ])
        );
        assert_eq!(determinant(&cartan_matrix(ty("G2"))), BigInt::one());
        assert_eq!(determinant(&cartan_matrix(ty("E6"))), BigInt::from(3));
    }

    #[test]
    fn positive_roots_counts() {
        assert_eq!(positive_roots(ty("A2")).len(), 3);
        assert_eq!(positive_roots(ty("B4")).len(), 16);
        assert_eq!(positive_roots(ty("E8")).len(), 120);
        assert_eq!(positive_roots(ty("F4")).len(), 24);
        assert_eq!(positive_roots(ty("G2")).len(), 6);
    }

    #[test]
    fn a2_roots_explicit() {
        let poset = positive_roots(ty("A2"));
        let simples: Vec<Vec<i64>> = poset.roots.iter().map(|r| r.simple.clone()).collect();
        assert_eq!(simples, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    // translate a B4 root from simple coordinates to the e-basis used in
    // the reference Hasse diagram: alpha_i = e_i - e_{i+1}, alpha_4 = e_4
    fn b4_to_e(simple: &[i64]) -> Vec<i64> {
        let mut e = vec![0i64; 4];
        for (i, &c) in simple.iter().enumerate() {
            if i < 3 {
                e[i] += c;
                e[i + 1] -= c;
            } else {
                e[3] += c;
            }
        }
        e
    }

    #[test]
    fn b4_figure_shape() {
        let data = root_system(ty("B4"));
        assert_eq!(b4_to_e(&data.highest().simple), vec![1, 1, 0, 0]);
        assert_eq!(b4_to_e(&data.highest_short().simple), vec![1, 0, 0, 0]);
        // height profile of the reference diagram, bottom row up
        let mut profile = vec![0usize; data.coxeter_number as usize - 1];
        for r in &data.poset.roots {
            profile[r.height as usize - 1] += 1;
        }
        assert_eq!(profile, vec![4, 3, 3, 2, 2, 1, 1]);
        // the top of the diagram has a single edge below it
        assert_eq!(data.poset.lower_covers(data.highest_root).len(), 1);
        assert_eq!(data.coxeter_number, 8);
        assert_eq!(data.marks, vec![1, 1, 2, 2, 2]);
        assert_eq!(data.dual_marks, vec![1, 2, 2, 2, 1]);
        assert_eq!(data.minuscule_nodes, vec![3]);
    }

    #[test]
    fn c4_dual_structures() {
        let data = root_system(ty("C4"));
        // highest root 2e_1, highest short root e_1 + e_2 = lambda_2
        assert_eq!(data.highest().simple, vec![2, 2, 2, 1]);
        assert_eq!(data.highest_short().simple, vec![1, 2, 2, 1]);
        assert_eq!(data.highest_short().weight, vec![0, 1, 0, 0]);
        assert_eq!(data.marks, vec![1, 2, 2, 2, 1]);
        assert_eq!(data.phi, vec![1, 1, 1, 1, 1]);
        assert_eq!(data.dual_marks, vec![1, 1, 2, 2, 2]);
        assert_eq!(data.minuscule_nodes, vec![0]);
    }

    #[test]
    fn e6_minuscule_nodes() {
        let data = root_system(ty("E6"));
        assert_eq!(data.minuscule_nodes, vec![0, 5]);
        assert_eq!(data.coxeter_number, 12);
        assert_eq!(data.marks, vec![1, 1, 2, 2, 3, 2, 1]);
        // alpha* = alpha~ points along the second fundamental weight
        assert_eq!(data.highest().weight, vec![0, 1, 0, 0, 0, 0]);
    }

    #[test]
    fn minuscule_tables() {
        assert_eq!(minuscule_dominant_weights(ty("A3")), vec![0, 1, 2]);
        assert_eq!(minuscule_dominant_weights(ty("C5")), vec![0]);
        assert_eq!(minuscule_dominant_weights(ty("D5")), vec![0, 3, 4]);
        assert_eq!(minuscule_dominant_weights(ty("E7")), vec![6]);
        assert!(minuscule_dominant_weights(ty("E8")).is_empty());
        assert!(minuscule_dominant_weights(ty("F4")).is_empty());
        assert!(minuscule_dominant_weights(ty("G2")).is_empty());
    }

    #[test]
    fn all_types_build_with_invariants() {
        // the constructor asserts the kernel equations, h = 1 + sum(marks),
        // f = 1 + #minuscule, |Phi+| = h*l/2, and coordinate consistency
        for l in 1..=10 {
            root_system(DynkinType::new('A', l).unwrap());
        }
        for l in 2..=10 {
            root_system(DynkinType::new('B', l).unwrap());
            root_system(DynkinType::new('C', l).unwrap());
        }
        for l in 3..=10 {
            root_system(DynkinType::new('D', l).unwrap());
        }
        for l in 6..=8 {
            root_system(DynkinType::new('E', l).unwrap());
        }
        root_system(ty("F4"));
        root_system(ty("G2"));
    }

    #[test]
    fn numbers_fire_basic() {
        let c = cartan_matrix(ty("A2"));
        let u = vec![BigInt::from(-1), BigInt::zero()];
        let fired = numbers_fire(&c, &u, 0).unwrap();
        assert_eq!(fired, vec![BigInt::from(1), BigInt::from(-1)]);
        let err = numbers_fire(&c, &fired, 0).unwrap_err();
        assert_eq!(err, RootSysError::NotNegativeAtNode(0));
    }

    #[test]
    fn extended_cartan_b4_c4() {
        let b4 = root_system(ty("B4"));
        assert_eq!(
            b4.extended_cartan,
            IntMatrix::from_rows(&[
                &[2, 0, -1, 0, 0],
                &[0, 2, -1, 0, 0],
                &[-1, -1, 2, -1, 0],
                &[0, 0, -1, 2, -2],
                &[0, 0, 0, -1, 2],
            ])
        );
        let c4 = root_system(ty("C4"));
        assert_eq!(
            c4.extended_cartan,
            IntMatrix::from_rows(&[
                &[2, -2, 0, 0, 0],
                &[-1, 2, -1, 0, 0],
                &[0, -1, 2, -1, 0],
                &[0, 0, -1, 2, -1],
                &[0, 0, 0, -2, 2],
            ])
        );
        // the padded game matrix for C4 is the transpose of B4's extended
        // Cartan, with the affine node attached to node 2
        let game = extended_dual_game_matrix(&c4);
        assert_eq!(game, b4.extended_cartan.transpose());
    }
}
