//! The dictionary between power-graph colorings and extremal set theory:
//! antichain covers of the Boolean lattice (the single-edge graph) and
//! covers of disjoint set-pairs by cross-intersecting families (the
//! three-vertex graph with two bidirected edges and one oriented edge).

use num::bigint::BigInt;
use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::certificate::AcyclicCover;
use crate::certificate::Coloring;
use crate::digraph::{generate, GraphFamily};
use crate::error::{Error, Result};
use crate::params::{chromatic_number, constructive_power_coloring, Budget};
use crate::power::{and_power, PowerIndex};
use crate::rates::SolveCell;
use crate::ratio::Rational;

/// A pair of disjoint subsets of `[t]`, encoded as the ternary sequence with
/// 1s on the first set and 2s on the second.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetPair {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl SetPair {
    pub fn new(mut a: Vec<usize>, mut b: Vec<usize>) -> Result<Self> {
        a.sort_unstable();
        a.dedup();
        b.sort_unstable();
        b.dedup();
        if a.iter().any(|x| b.binary_search(x).is_ok()) {
            return Err(Error::InvalidSetPair(format!(
                "sets {a:?} and {b:?} overlap"
            )));
        }
        Ok(SetPair { a, b })
    }

    /// Decodes a vertex of the t-th power of the three-vertex graph.
    pub fn from_power_vertex(t: usize, idx: usize) -> Self {
        let seq = PowerIndex::new(3, t).decode(idx);
        let a = (0..t).filter(|&i| seq[i] == 1).collect();
        let b = (0..t).filter(|&i| seq[i] == 2).collect();
        SetPair { a, b }
    }

    pub fn to_power_vertex(&self, t: usize) -> usize {
        let mut seq = vec![0usize; t];
        for &i in &self.a {
            seq[i] = 1;
        }
        for &i in &self.b {
            seq[i] = 2;
        }
        PowerIndex::new(3, t).encode(&seq)
    }
}

/// Partition of all `2^t` subsets of `[t]` (as bit masks) into the `t + 1`
/// cardinality levels, each an antichain under inclusion.
pub fn antichain_cover(t: usize) -> Result<Vec<Vec<u32>>> {
    if t > 20 {
        return Err(Error::TooLarge {
            required: t,
            limit: 20,
        });
    }
    let mut levels = vec![Vec::new(); t + 1];
    for mask in 0u32..1 << t {
        levels[mask.count_ones() as usize].push(mask);
    }
    Ok(levels)
}

/// No set in the family contains another.
pub fn is_antichain(masks: &[u32]) -> bool {
    masks.iter().enumerate().all(|(i, &x)| {
        masks
            .iter()
            .enumerate()
            .all(|(j, &y)| i == j || (x & y != x && x & y != y))
    })
}

/// Whether `A_i` meets `B_j` and `A_j` meets `B_i` for every pair of
/// distinct members (equivalently, `A_k` misses `B_l` only at `k == l`).
pub fn is_cross_intersecting(pairs: &[SetPair]) -> Result<bool> {
    for p in pairs {
        // rebuild to re-check disjointness of possibly hand-made pairs
        SetPair::new(p.a.clone(), p.b.clone())?;
    }
    for (i, p) in pairs.iter().enumerate() {
        for q in &pairs[i + 1..] {
            let pa_qb = p.a.iter().any(|x| q.b.contains(x));
            let qa_pb = q.a.iter().any(|x| p.b.contains(x));
            if !pa_qb || !qa_pb {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Exact value of `sum_i 1 / C(|A_i|+|B_i|, |A_i|)` and whether it is at
/// most one, which holds for every cross-intersecting family.
pub fn bollobas_inequality(pairs: &[SetPair]) -> (Rational, bool) {
    let total: Rational = pairs
        .iter()
        .map(|p| Rational::new(BigInt::one(), binomial(p.a.len() + p.b.len(), p.a.len())))
        .sum();
    let holds = total <= Rational::one();
    (total, holds)
}

/// Bounds on the minimum number of cross-intersecting families covering all
/// disjoint set-pairs of `[t]`.
#[derive(Debug, Clone)]
pub struct BollobasReport {
    pub t: usize,
    /// The 0/1 blocks form a symmetric clique, forcing `2^t` families.
    pub lower: u128,
    /// Color count of the lifted two-class dicoloring (at most
    /// `(t+1)^3 * 2^t`).
    pub constructive_upper: usize,
    pub chi: Option<SolveCell>,
    pub exact: Option<usize>,
    /// Color classes of the best proper coloring available, decoded to
    /// families; each verifies cross-intersecting and satisfies the
    /// set-pair inequality.
    pub families: Vec<Vec<SetPair>>,
}

pub fn coloring_to_families(t: usize, coloring: &Coloring) -> Vec<Vec<SetPair>> {
    coloring
        .color_classes()
        .into_iter()
        .filter(|class| !class.is_empty())
        .map(|class| {
            class
                .into_iter()
                .map(|v| SetPair::from_power_vertex(t, v))
                .collect()
        })
        .collect()
}

/// Exact branch cap: `3^t <= 2^13`.
const EXACT_VERTEX_CAP: usize = 1 << 13;

pub fn bollobas_cover_bounds(t: usize, budget_secs: f64) -> Result<BollobasReport> {
    let f = generate(GraphFamily::Bollobas).expect("fixed generator");
    let lower = 1u128 << t;
    let two_class = AcyclicCover {
        classes: vec![vec![0], vec![1, 2]],
    };
    let constructive = constructive_power_coloring(&f, &two_class, t)?;
    let vertices = PowerIndex::new(3, t).total().ok_or(Error::TooLarge {
        required: usize::MAX,
        limit: EXACT_VERTEX_CAP,
    })?;
    let mut chi_cell = None;
    let mut exact = None;
    let mut best_coloring = constructive.clone();
    if vertices <= EXACT_VERTEX_CAP {
        let power = and_power(&f, t)?;
        let chi = chromatic_number(&power, Budget::seconds(budget_secs));
        chi_cell = Some(SolveCell {
            lower: chi.lower,
            upper: chi.upper,
            optimal: chi.optimal,
        });
        if chi.optimal {
            exact = Some(chi.upper);
        }
        if chi.upper < best_coloring.k {
            best_coloring = chi.coloring;
        }
    }
    let families = coloring_to_families(t, &best_coloring);
    for family in &families {
        assert!(
            is_cross_intersecting(family)?,
            "a proper-coloring class must decode to a cross-intersecting family"
        );
        let (_, holds) = bollobas_inequality(family);
        assert!(holds, "set-pair inequality must hold on emitted families");
    }
    Ok(BollobasReport {
        t,
        lower,
        constructive_upper: constructive.k,
        chi: chi_cell,
        exact,
        families,
    })
}
