//! Brute-force oracles shared by the acceptance suite. Everything here is
//! deliberately independent of the library's solver paths: plain subset
//! sweeps, permutation scans, recursive cycle detection, and mask DP, so a
//! solver bug cannot hide behind shared code.

use dilworth_core::bits::BitSet;
use dilworth_core::digraph::Digraph;
use dilworth_core::lp::{fractional_cover_number, LpSolution, SetSystem};
use dilworth_core::ratio::Rational;
use rand::Rng;

pub fn random_digraph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Digraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Digraph::from_edges(n, &edges).unwrap()
}

pub fn random_symmetric_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Digraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
                edges.push((v, u));
            }
        }
    }
    Digraph::from_edges(n, &edges).unwrap()
}

fn members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

fn is_independent(g: &Digraph, mask: u32) -> bool {
    let vs = members(mask, g.n());
    vs.iter().all(|&u| {
        vs.iter()
            .all(|&v| u == v || (!g.has_edge(u, v) && !g.has_edge(v, u)))
    })
}

fn is_symmetric_clique(g: &Digraph, mask: u32) -> bool {
    let vs = members(mask, g.n());
    vs.iter().all(|&u| {
        vs.iter()
            .all(|&v| u == v || (g.has_edge(u, v) && g.has_edge(v, u)))
    })
}

/// Recursive three-state cycle detection on the induced subgraph; a
/// different algorithm from the library's elimination-based check.
fn is_acyclic_dfs(g: &Digraph, mask: u32) -> bool {
    const WHITE: u8 = 0;
    const GRAY: u8 = 1;
    const BLACK: u8 = 2;
    let vs = members(mask, g.n());
    let mut state = vec![WHITE; g.n()];
    fn visit(g: &Digraph, mask: u32, v: usize, state: &mut [u8]) -> bool {
        state[v] = GRAY;
        for w in 0..g.n() {
            if mask >> w & 1 == 1 && g.has_edge(v, w) {
                if state[w] == GRAY {
                    return false;
                }
                if state[w] == WHITE && !visit(g, mask, w, state) {
                    return false;
                }
            }
        }
        state[v] = BLACK;
        true
    }
    for &v in &vs {
        if state[v] == WHITE && !visit(g, mask, v, &mut state) {
            return false;
        }
    }
    true
}

fn has_transitive_order(g: &Digraph, vs: &[usize]) -> bool {
    // permutation scan with early abort
    fn rec(g: &Digraph, prefix: &mut Vec<usize>, rest: &mut Vec<usize>) -> bool {
        if rest.is_empty() {
            return true;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            if prefix.iter().all(|&u| g.has_edge(u, v)) {
                prefix.push(v);
                if rec(g, prefix, rest) {
                    return true;
                }
                prefix.pop();
            }
            rest.insert(i, v);
        }
        false
    }
    rec(g, &mut Vec::new(), &mut vs.to_vec())
}

pub fn alpha_oracle(g: &Digraph) -> usize {
    (0u32..1 << g.n())
        .filter(|&m| is_independent(g, m))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap()
}

pub fn omega_s_oracle(g: &Digraph) -> usize {
    (0u32..1 << g.n())
        .filter(|&m| is_symmetric_clique(g, m))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap()
}

pub fn a_oracle(g: &Digraph) -> usize {
    (0u32..1 << g.n())
        .filter(|&m| is_acyclic_dfs(g, m))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap()
}

pub fn omega_tr_oracle(g: &Digraph) -> usize {
    (0u32..1 << g.n())
        .filter(|&m| has_transitive_order(g, &members(m, g.n())))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap()
}

/// Minimum number of property-satisfying subsets covering the vertex set,
/// by DP over masks.
fn cover_dp(n: usize, admissible: &[bool]) -> usize {
    let full = (1u32 << n) - 1;
    let mut best = vec![u32::MAX; 1 << n];
    best[0] = 0;
    for mask in 1u32..=full {
        let low = mask & mask.wrapping_neg();
        // submasks of mask containing the lowest vertex
        let mut s = mask;
        let mut best_here = u32::MAX;
        while s > 0 {
            if s & low != 0 && admissible[s as usize] && best[(mask ^ s) as usize] != u32::MAX {
                best_here = best_here.min(best[(mask ^ s) as usize] + 1);
            }
            s = (s - 1) & mask;
        }
        best[mask as usize] = best_here;
    }
    best[full as usize] as usize
}

pub fn chi_oracle(g: &Digraph) -> usize {
    let masks: Vec<bool> = (0u32..1 << g.n()).map(|m| is_independent(g, m)).collect();
    cover_dp(g.n(), &masks)
}

pub fn chi_dir_oracle(g: &Digraph) -> usize {
    let masks: Vec<bool> = (0u32..1 << g.n()).map(|m| is_acyclic_dfs(g, m)).collect();
    cover_dp(g.n(), &masks)
}

/// Covering LP over every property-satisfying subset (not only maximal
/// ones), with both certificates re-verified; equality against the
/// maximal-set LP is the tested restriction lemma.
fn lp_over_all(g: &Digraph, admissible: impl Fn(u32) -> bool) -> LpSolution {
    let n = g.n();
    let sets: Vec<BitSet> = (1u32..1 << n)
        .filter(|&m| admissible(m))
        .map(|m| BitSet::from_indices(n, &members(m, n)))
        .collect();
    let sys = SetSystem::new(n, sets).expect("full system covers every vertex");
    let sol = fractional_cover_number(&sys);
    sol.verify(&sys).expect("oracle LP certificates must verify");
    sol
}

pub fn chi_f_oracle(g: &Digraph) -> Rational {
    lp_over_all(g, |m| is_independent(g, m)).value
}

pub fn chi_dir_f_oracle(g: &Digraph) -> Rational {
    lp_over_all(g, |m| is_acyclic_dfs(g, m)).value
}
