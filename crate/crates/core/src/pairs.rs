//! Structure of pairs `(τ, κ)` of involutions under simultaneous conjugation.
//!
//! The edges of `τ` and `κ` split `[n]` into connected blocks (the
//! characteristic partition). On each block the pair is an alternating path
//! or an alternating cycle, which determines the case:
//!
//! * singleton: a point fixed by both;
//! * case I: even path, the two restricted lengths differ by one;
//! * case II: odd path, equal restricted lengths;
//! * case III: even cycle, equal restricted lengths.
//!
//! The walk order recorded for each block is a renumbering `p_1, p_2, …`
//! under which the longer involution (or `τ`, when lengths agree) is
//! `(p_1 p_2)(p_3 p_4)⋯` and the other is `(p_2 p_3)(p_4 p_5)⋯`, closing with
//! `(p_m p_1)` in case III.

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::error::{check_degree, ModelError, Result};
use crate::partition::IntPartition;
use crate::perm::{Involution, Permutation};
use crate::sign::{sign_unchecked, Sign};

/// A set partition of `{1..n}`: sorted blocks, ordered by their minima.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn is_single_block(&self) -> bool {
        self.blocks.len() == 1
    }

    /// Block sizes as an integer partition of `n`.
    pub fn numerical(&self) -> IntPartition {
        IntPartition::new(self.blocks.iter().map(Vec::len).collect())
    }

    /// Whether `perm` lies in the Young subgroup of the blocks.
    pub fn contains_in_young_subgroup(&self, perm: &Permutation) -> bool {
        let mut block_of = vec![0; self.n + 1];
        for (b, block) in self.blocks.iter().enumerate() {
            for &p in block {
                block_of[p] = b;
            }
        }
        (1..=self.n).all(|i| block_of[i] == block_of[perm.apply(i)])
    }
}

/// Finest partition of `[n]` whose Young subgroup contains both involutions:
/// the connected components of the graph with the transpositions of `τ` and
/// `κ` as edges.
pub fn characteristic_partition(tau: &Involution, kappa: &Involution) -> Result<SetPartition> {
    check_degree(tau.degree(), kappa.degree())?;
    let n = tau.degree();
    let mut uf = UnionFind::<usize>::new(n);
    for (a, b) in tau.transpositions().chain(kappa.transpositions()) {
        uf.union(a - 1, b - 1);
    }
    let labels = uf.into_labeling();
    let mut block_index = vec![usize::MAX; n];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    // Scanning points in increasing order sorts blocks by minimum and each block internally.
    for (point, &root) in labels.iter().enumerate() {
        if block_index[root] == usize::MAX {
            block_index[root] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[block_index[root]].push(point + 1);
    }
    Ok(SetPartition { n, blocks })
}

/// One of the two involutions of a pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Tau,
    Kappa,
}

impl Side {
    fn other(self) -> Side {
        match self {
            Side::Tau => Side::Kappa,
            Side::Kappa => Side::Tau,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseKind {
    Singleton,
    /// Even open path; `longer` names the involution with one more transposition.
    CaseI {
        longer: Side,
    },
    CaseII,
    CaseIII,
}

impl CaseKind {
    pub fn tag(&self) -> &'static str {
        match self {
            CaseKind::Singleton => "singleton",
            CaseKind::CaseI { .. } => "case_i",
            CaseKind::CaseII => "case_ii",
            CaseKind::CaseIII => "case_iii",
        }
    }
}

/// Case of a connected block together with its normal-form walk order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockCase {
    pub kind: CaseKind,
    pub order: Vec<usize>,
}

impl BlockCase {
    /// The reversal `p_i ↔ p_{m+1−i}` for paths and `p_i ↔ p_{m+2−i}` (indices
    /// mod `m`) for cycles, as 1-based transpositions.
    pub fn reversal(&self) -> Vec<(usize, usize)> {
        let m = self.order.len();
        let partner = |i: usize| -> usize {
            // 0-based positions.
            match self.kind {
                CaseKind::CaseIII => (m - i) % m,
                _ => m - 1 - i,
            }
        };
        (0..m)
            .filter(|&i| i < partner(i))
            .map(|i| (self.order[i], self.order[partner(i)]))
            .collect()
    }
}

/// Classifies one block of the characteristic partition of `(τ, κ)`.
///
/// Fails if `block` is not closed under both involutions or is not
/// connected by their transpositions.
pub fn classify_block(tau: &Involution, kappa: &Involution, block: &[usize]) -> Result<BlockCase> {
    check_degree(tau.degree(), kappa.degree())?;
    let not_connected = || ModelError::BlockNotConnected {
        block: block.to_vec(),
    };
    let Some(&first) = block.iter().min() else {
        return Err(not_connected());
    };
    let n = tau.degree();
    let mut in_block = vec![false; n + 1];
    for &p in block {
        if p == 0 || p > n || std::mem::replace(&mut in_block[p], true) {
            return Err(not_connected());
        }
    }
    if block
        .iter()
        .any(|&p| !in_block[tau.apply(p)] || !in_block[kappa.apply(p)])
    {
        return Err(not_connected());
    }

    let step = |side: Side, p: usize| match side {
        Side::Tau => tau.apply(p),
        Side::Kappa => kappa.apply(p),
    };
    if block.len() == 1 {
        return Ok(BlockCase {
            kind: CaseKind::Singleton,
            order: vec![first],
        });
    }

    let fixed_by = |side: Side| -> Vec<usize> {
        let mut v: Vec<usize> = block
            .iter()
            .copied()
            .filter(|&p| step(side, p) == p)
            .collect();
        v.sort_unstable();
        v
    };
    let tau_fixed = fixed_by(Side::Tau);
    let kappa_fixed = fixed_by(Side::Kappa);

    let (kind, start, first_side) = if tau_fixed.is_empty() && kappa_fixed.is_empty() {
        (CaseKind::CaseIII, first, Side::Tau)
    } else if block.len() % 2 == 1 {
        let start = *kappa_fixed.first().ok_or_else(not_connected)?;
        (CaseKind::CaseII, start, Side::Tau)
    } else {
        // Both endpoints are fixed by the shorter involution.
        let (longer, endpoints) = if tau_fixed.is_empty() {
            (Side::Tau, &kappa_fixed)
        } else {
            (Side::Kappa, &tau_fixed)
        };
        (CaseKind::CaseI { longer }, endpoints[0], longer)
    };

    let mut order = vec![start];
    let mut current = start;
    let mut side = first_side;
    loop {
        let next = step(side, current);
        if next == current || next == start {
            break;
        }
        order.push(next);
        current = next;
        side = side.other();
        if order.len() > block.len() {
            return Err(not_connected());
        }
    }
    if order.len() != block.len() {
        return Err(not_connected());
    }
    Ok(BlockCase { kind, order })
}

/// Outcome of the dichotomy for a pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairStatus {
    /// `σ` commutes with both involutions and `S(σ,τ)·S(σ,κ) = −1`.
    Witness(Permutation),
    /// `λ` is an involution in the Young subgroup of the characteristic
    /// partition with `λτλ⁻¹ = κ`.
    Conjugator(Involution),
}

impl PairStatus {
    pub fn is_witness(&self) -> bool {
        matches!(self, PairStatus::Witness(_))
    }
}

/// Full classification record of a pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairProfile {
    pub partition: SetPartition,
    pub cases: Vec<BlockCase>,
    pub numerical: IntPartition,
    pub status: PairStatus,
}

impl PairProfile {
    /// Checks the status element against `(τ, κ)` by direct computation.
    pub fn validate(&self, tau: &Involution, kappa: &Involution) -> bool {
        match &self.status {
            PairStatus::Witness(sigma) => {
                tau.conjugate_unchecked(sigma) == *tau
                    && kappa.conjugate_unchecked(sigma) == *kappa
                    && sign_unchecked(sigma, tau) * sign_unchecked(sigma, kappa) == Sign::Minus
            }
            PairStatus::Conjugator(lambda) => {
                let as_perm = lambda.to_permutation();
                tau.conjugate_unchecked(&as_perm) == *kappa
                    && self.partition.contains_in_young_subgroup(&as_perm)
            }
        }
    }

    pub fn to_json(&self) -> PairProfileJson {
        PairProfileJson {
            blocks: self.partition.blocks().to_vec(),
            cases: self
                .cases
                .iter()
                .map(|c| CaseJson {
                    tag: c.kind.tag().to_string(),
                    order: c.order.clone(),
                    longer: match c.kind {
                        CaseKind::CaseI { longer } => Some(longer),
                        _ => None,
                    },
                })
                .collect(),
            numerical: self.numerical.parts().to_vec(),
            status: match &self.status {
                PairStatus::Witness(sigma) => StatusJson {
                    kind: "witness".into(),
                    element: sigma.to_string(),
                },
                PairStatus::Conjugator(lambda) => StatusJson {
                    kind: "conjugator".into(),
                    element: lambda.to_string(),
                },
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairProfileJson {
    pub blocks: Vec<Vec<usize>>,
    pub cases: Vec<CaseJson>,
    pub numerical: Vec<usize>,
    pub status: StatusJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseJson {
    pub tag: String,
    pub order: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub longer: Option<Side>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatusJson {
    #[serde(rename = "type")]
    pub kind: String,
    pub element: String,
}

/// Classifies every block and produces either a sign-reversing commuting
/// element (when some block is case I) or a block-wise conjugating involution.
pub fn dichotomy(tau: &Involution, kappa: &Involution) -> Result<PairProfile> {
    let partition = characteristic_partition(tau, kappa)?;
    let cases = partition
        .blocks()
        .iter()
        .map(|block| classify_block(tau, kappa, block))
        .collect::<Result<Vec<_>>>()?;
    let n = tau.degree();
    let status = match cases
        .iter()
        .find(|c| matches!(c.kind, CaseKind::CaseI { .. }))
    {
        Some(block) => {
            let swaps: Vec<[usize; 2]> =
                block.reversal().into_iter().map(|(a, b)| [a, b]).collect();
            PairStatus::Witness(Permutation::from_cycles(n, &swaps)?)
        }
        None => {
            let swaps: Vec<(usize, usize)> = cases.iter().flat_map(BlockCase::reversal).collect();
            PairStatus::Conjugator(Involution::new(n, &swaps)?)
        }
    };
    Ok(PairProfile {
        numerical: partition.numerical(),
        partition,
        cases,
        status,
    })
}

/// A `σ` with `(τ₂, κ₂) = (στ₁σ⁻¹, σκ₁σ⁻¹)`, if the pairs are simultaneously conjugate.
///
/// The per-block data (size and case, including which side is longer in
/// case I) is a complete orbit invariant; when the multisets agree, matching
/// the walk orders block by block gives the conjugator.
pub fn simultaneous_conjugator(
    first: (&Involution, &Involution),
    second: (&Involution, &Involution),
) -> Result<Option<Permutation>> {
    check_degree(first.0.degree(), second.0.degree())?;
    let mut a = dichotomy(first.0, first.1)?.cases;
    let mut b = dichotomy(second.0, second.1)?.cases;
    let key = |c: &BlockCase| (c.order.len(), c.kind);
    a.sort_by_key(key);
    b.sort_by_key(key);
    if a.len() != b.len() || a.iter().zip(&b).any(|(x, y)| key(x) != key(y)) {
        return Ok(None);
    }
    let n = first.0.degree();
    let mut images = vec![0; n];
    for (x, y) in a.iter().zip(&b) {
        for (&from, &to) in x.order.iter().zip(&y.order) {
            images[from - 1] = to;
        }
    }
    let sigma = Permutation::new(&images)?;
    debug_assert_eq!(first.0.conjugate_unchecked(&sigma), *second.0);
    debug_assert_eq!(first.1.conjugate_unchecked(&sigma), *second.1);
    Ok(Some(sigma))
}
