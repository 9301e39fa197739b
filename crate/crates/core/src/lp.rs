//! Exact-rational covering LPs: fractional chromatic and fractional
//! dichromatic numbers over maximal independent / maximal acyclic sets.
//!
//! The simplex is a dense two-phase tableau over `BigRational` with Bland's
//! anticycling rule. Every solution carries primal weights and a dual vector;
//! feasibility of both and exact strong duality are re-verified from scratch
//! before a solution is returned, so no tolerance enters anywhere.

use num::{One, Signed, Zero};

use crate::bits::BitSet;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::ratio::{format_ratio, log2_ratio, Rational};

/// Default cap on enumerated maximal sets.
pub const DEFAULT_ENUM_LIMIT: usize = 1_000_000;

/// Ground set plus covering sets (bit rows). Construction rejects systems
/// that leave an element uncovered, which keeps the covering LP feasible.
#[derive(Debug, Clone)]
pub struct SetSystem {
    pub ground: usize,
    pub sets: Vec<BitSet>,
}

impl SetSystem {
    pub fn new(ground: usize, sets: Vec<BitSet>) -> Result<Self> {
        let mut covered = BitSet::new(ground);
        for s in &sets {
            covered.union_with(s);
        }
        for v in 0..ground {
            if !covered.contains(v) {
                return Err(Error::UncoveredElement(v));
            }
        }
        Ok(SetSystem { ground, sets })
    }

    /// Cardinality of a largest set.
    pub fn max_set_size(&self) -> usize {
        self.sets.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    pub fn sets_containing(&self, v: usize) -> Vec<usize> {
        (0..self.sets.len())
            .filter(|&i| self.sets[i].contains(v))
            .collect()
    }
}

/// Enumerates all inclusion-maximal sets of a hereditary property by
/// extension in increasing vertex order. `can_add(s, v)` must decide whether
/// `s + v` still satisfies the property, given that `s` does.
///
/// Every maximal set has a unique increasing build order, so each is emitted
/// exactly once and the output is lexicographic on element lists.
fn maximal_hereditary_sets(
    n: usize,
    can_add: &dyn Fn(&BitSet, usize) -> bool,
    limit: usize,
) -> Result<Vec<BitSet>> {
    let mut out = Vec::new();
    let mut s = BitSet::new(n);
    let node_budget = limit.saturating_mul(64).max(1 << 22);
    let mut nodes = 0usize;
    fn dfs(
        n: usize,
        s: &mut BitSet,
        start: usize,
        can_add: &dyn Fn(&BitSet, usize) -> bool,
        out: &mut Vec<BitSet>,
        limit: usize,
        nodes: &mut usize,
        node_budget: usize,
    ) -> Result<()> {
        *nodes += 1;
        if *nodes > node_budget {
            return Err(Error::EnumerationOverflow {
                limit,
                partial: out.len(),
            });
        }
        let mut extendable = false;
        let mut forward = Vec::new();
        for v in 0..n {
            if !s.contains(v) && can_add(s, v) {
                extendable = true;
                if v >= start {
                    forward.push(v);
                }
            }
        }
        if !extendable {
            if out.len() >= limit {
                return Err(Error::EnumerationOverflow {
                    limit,
                    partial: out.len(),
                });
            }
            out.push(s.clone());
            return Ok(());
        }
        for v in forward {
            s.insert(v);
            dfs(n, s, v + 1, can_add, out, limit, nodes, node_budget)?;
            s.remove(v);
        }
        Ok(())
    }
    dfs(n, &mut s, 0, can_add, &mut out, limit, &mut nodes, node_budget)?;
    Ok(out)
}

/// All inclusion-maximal acyclic vertex sets, lexicographic order.
pub fn maximal_acyclic_sets(g: &Digraph) -> Result<SetSystem> {
    maximal_acyclic_sets_capped(g, DEFAULT_ENUM_LIMIT)
}

pub fn maximal_acyclic_sets_capped(g: &Digraph, limit: usize) -> Result<SetSystem> {
    let can_add = |s: &BitSet, v: usize| {
        let mut ext = s.clone();
        ext.insert(v);
        g.is_acyclic_on(&ext)
    };
    let sets = maximal_hereditary_sets(g.n(), &can_add, limit)?;
    SetSystem::new(g.n(), sets)
}

/// All inclusion-maximal independent sets of the symmetrized graph.
pub fn maximal_independent_sets(g: &Digraph) -> Result<SetSystem> {
    maximal_independent_sets_capped(g, DEFAULT_ENUM_LIMIT)
}

pub fn maximal_independent_sets_capped(g: &Digraph, limit: usize) -> Result<SetSystem> {
    let sym = g.symmetrize();
    let can_add = |s: &BitSet, v: usize| sym.out_row(v).is_disjoint(s);
    let sets = maximal_hereditary_sets(g.n(), &can_add, limit)?;
    SetSystem::new(g.n(), sets)
}

/// Exact optimum of `min sum w_S  s.t.  sum_{S contains v} w_S >= 1, w >= 0`
/// with primal and dual certificates.
#[derive(Debug, Clone)]
pub struct LpSolution {
    pub value: Rational,
    /// Weight per set, aligned with the system's set order.
    pub weights: Vec<Rational>,
    /// Dual value per ground element.
    pub dual: Vec<Rational>,
}

impl LpSolution {
    /// Re-derives optimality from scratch: primal feasibility, dual
    /// feasibility, and exact strong duality.
    pub fn verify(&self, sys: &SetSystem) -> Result<()> {
        if self.weights.len() != sys.sets.len() || self.dual.len() != sys.ground {
            return Err(Error::LpCertificate("certificate shape mismatch".into()));
        }
        if self.weights.iter().any(|w| w.is_negative()) {
            return Err(Error::LpCertificate("negative primal weight".into()));
        }
        if self.dual.iter().any(|y| y.is_negative()) {
            return Err(Error::LpCertificate("negative dual value".into()));
        }
        for v in 0..sys.ground {
            let total: Rational = sys
                .sets
                .iter()
                .zip(&self.weights)
                .filter(|(s, _)| s.contains(v))
                .map(|(_, w)| w.clone())
                .sum();
            if total < Rational::one() {
                return Err(Error::LpCertificate(format!(
                    "element {v} covered with weight {} < 1",
                    format_ratio(&total)
                )));
            }
        }
        for (i, s) in sys.sets.iter().enumerate() {
            let total: Rational = s.iter().map(|v| self.dual[v].clone()).sum();
            if total > Rational::one() {
                return Err(Error::LpCertificate(format!(
                    "set {i} has dual load {} > 1",
                    format_ratio(&total)
                )));
            }
        }
        let primal: Rational = self.weights.iter().cloned().sum();
        let dual: Rational = self.dual.iter().cloned().sum();
        if primal != self.value || dual != self.value {
            return Err(Error::LpCertificate(format!(
                "duality gap: primal {} dual {} claimed {}",
                format_ratio(&primal),
                format_ratio(&dual),
                format_ratio(&self.value)
            )));
        }
        Ok(())
    }

    /// Display form: exact rationals as `"p/q"`, log2 marked approximate.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "value": format_ratio(&self.value),
            "value_log2": log2_ratio(&self.value.clone().max(Rational::one())),
            "approx": true,
            "weights": self.weights.iter().map(format_ratio).collect::<Vec<_>>(),
            "dual": self.dual.iter().map(format_ratio).collect::<Vec<_>>(),
        })
    }
}

/// Dense exact simplex on the covering LP in equality form
/// `[M | -I | I] (w, s, a) = 1`, minimizing phase costs under Bland's rule.
struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    m: usize,
    n: usize,
}

impl Tableau {
    fn new(sys: &SetSystem) -> Self {
        let m = sys.sets.len();
        let n = sys.ground;
        let cols = m + 2 * n;
        let mut rows = vec![vec![Rational::zero(); cols]; n];
        for v in 0..n {
            for (j, s) in sys.sets.iter().enumerate() {
                if s.contains(v) {
                    rows[v][j] = Rational::one();
                }
            }
            rows[v][m + v] = -Rational::one();
            rows[v][m + n + v] = Rational::one();
        }
        Tableau {
            rows,
            rhs: vec![Rational::one(); n],
            basis: (0..n).map(|v| m + n + v).collect(),
            m,
            n,
        }
    }

    fn reduced_cost(&self, cost: &dyn Fn(usize) -> Rational, cb: &[(usize, Rational)], j: usize) -> Rational {
        let mut rc = cost(j);
        for (i, c) in cb {
            let entry = &self.rows[*i][j];
            if !entry.is_zero() {
                rc -= c * entry;
            }
        }
        rc
    }

    fn pivot(&mut self, r: usize, j: usize) {
        let pivot = self.rows[r][j].clone();
        for x in self.rows[r].iter_mut() {
            *x /= &pivot;
        }
        self.rhs[r] /= &pivot;
        for i in 0..self.n {
            if i == r {
                continue;
            }
            let factor = self.rows[i][j].clone();
            if factor.is_zero() {
                continue;
            }
            for c in 0..self.rows[i].len() {
                let delta = &factor * &self.rows[r][c];
                self.rows[i][c] -= delta;
            }
            let delta = &factor * &self.rhs[r];
            self.rhs[i] -= delta;
        }
        self.basis[r] = j;
    }

    /// Primal simplex with Dantzig pricing, switching to Bland's rule during
    /// degenerate streaks so cycling is impossible. Tie-breaks everywhere are
    /// on the smallest index, keeping runs bit-reproducible. `allowed` bounds
    /// the entering columns.
    fn run(&mut self, cost: &dyn Fn(usize) -> Rational, allowed: usize) {
        let mut degenerate_streak = 0u32;
        loop {
            let cb: Vec<(usize, Rational)> = self
                .basis
                .iter()
                .enumerate()
                .filter_map(|(i, &b)| {
                    let c = cost(b);
                    (!c.is_zero()).then_some((i, c))
                })
                .collect();
            let bland = degenerate_streak > 32;
            let mut entering: Option<(usize, Rational)> = None;
            for j in 0..allowed {
                if self.basis.contains(&j) {
                    continue;
                }
                let rc = self.reduced_cost(cost, &cb, j);
                if rc.is_negative() {
                    if bland {
                        entering = Some((j, rc));
                        break;
                    }
                    match &entering {
                        Some((_, best)) if rc >= *best => {}
                        _ => entering = Some((j, rc)),
                    }
                }
            }
            let Some((j, _)) = entering else { return };
            let mut leave: Option<usize> = None;
            for i in 0..self.n {
                if self.rows[i][j].is_positive() {
                    let better = match leave {
                        None => true,
                        Some(l) => {
                            let ratio_i = &self.rhs[i] / &self.rows[i][j];
                            let ratio_l = &self.rhs[l] / &self.rows[l][j];
                            ratio_i < ratio_l
                                || (ratio_i == ratio_l && self.basis[i] < self.basis[l])
                        }
                    };
                    if better {
                        leave = Some(i);
                    }
                }
            }
            let r = leave.expect("covering LP cannot be unbounded");
            if self.rhs[r].is_zero() {
                degenerate_streak += 1;
            } else {
                degenerate_streak = 0;
            }
            self.pivot(r, j);
        }
    }
}

/// Solves the covering LP of a set system exactly. The returned certificates
/// are verified before returning.
pub fn fractional_cover_number(sys: &SetSystem) -> LpSolution {
    let mut t = Tableau::new(sys);
    let (m, n) = (t.m, t.n);
    // phase 1: drive artificials to zero
    let phase1 = move |j: usize| {
        if j >= m + n {
            Rational::one()
        } else {
            Rational::zero()
        }
    };
    t.run(&phase1, m + n);
    // the surplus block keeps all rows independent, so any leftover basic
    // artificial (necessarily at zero) can pivot out through its own row
    for r in 0..n {
        if t.basis[r] >= m + n {
            debug_assert!(t.rhs[r].is_zero());
            let j = (0..m + n)
                .find(|&j| !t.rows[r][j].is_zero())
                .expect("row with only artificial support");
            t.pivot(r, j);
        }
    }
    let phase2 = move |j: usize| {
        if j < m {
            Rational::one()
        } else {
            Rational::zero()
        }
    };
    t.run(&phase2, m + n);

    let mut weights = vec![Rational::zero(); m];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < m {
            weights[b] = t.rhs[i].clone();
        }
    }
    // dual = c_B B^{-1}; B^{-1} sits under the artificial columns
    let mut dual = vec![Rational::zero(); n];
    for (v, y) in dual.iter_mut().enumerate() {
        let col = m + n + v;
        for (i, row) in t.rows.iter().enumerate() {
            if t.basis[i] < m && !row[col].is_zero() {
                *y += &row[col] * Rational::one();
            }
        }
    }
    let value: Rational = weights.iter().cloned().sum();
    let solution = LpSolution {
        value,
        weights,
        dual,
    };
    solution
        .verify(sys)
        .expect("exact simplex output must satisfy its own certificates");
    solution
}

/// Fractional dichromatic number: covering LP over maximal acyclic sets.
pub fn fractional_dichromatic(g: &Digraph) -> Result<(SetSystem, LpSolution)> {
    fractional_dichromatic_capped(g, DEFAULT_ENUM_LIMIT)
}

pub fn fractional_dichromatic_capped(
    g: &Digraph,
    limit: usize,
) -> Result<(SetSystem, LpSolution)> {
    let sys = maximal_acyclic_sets_capped(g, limit)?;
    let sol = fractional_cover_number(&sys);
    Ok((sys, sol))
}

/// Fractional chromatic number: covering LP over maximal independent sets.
pub fn fractional_chromatic(g: &Digraph) -> Result<(SetSystem, LpSolution)> {
    fractional_chromatic_capped(g, DEFAULT_ENUM_LIMIT)
}

pub fn fractional_chromatic_capped(g: &Digraph, limit: usize) -> Result<(SetSystem, LpSolution)> {
    let sys = maximal_independent_sets_capped(g, limit)?;
    let sol = fractional_cover_number(&sys);
    Ok((sys, sol))
}
