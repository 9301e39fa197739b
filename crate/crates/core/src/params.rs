//! Exact combinatorial parameters with verified certificates: independence
//! number, symmetric and transitive clique numbers, acyclicity number,
//! chromatic number (DSATUR branch-and-bound with clique lower bound), and
//! dichromatic number (set cover over maximal acyclic sets with an exact LP
//! lower bound).
//!
//! Solvers are deterministic: static vertex orders, lexicographic
//! tie-breaks, and single-threaded search. A time budget turns an exact
//! answer into an explicit bracket, never a silent wrong value.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use sha2::{Digest, Sha256};

use crate::bits::BitSet;
use crate::certificate::{
    verify_cover, AcyclicCover, Coloring, SubsetCertificate, SubsetKind,
};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::lp::{fractional_cover_number, maximal_acyclic_sets_capped, SetSystem, DEFAULT_ENUM_LIMIT};
use crate::power::{PowerIndex, TypeVector, DEFAULT_POWER_VERTEX_LIMIT};
use crate::ratio::ratio_to_f64;

/// Wall-clock budget for one solver call. The default is 60 seconds.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub const DEFAULT_SECONDS: f64 = 60.0;

    pub fn unlimited() -> Self {
        Budget { deadline: None }
    }

    pub fn seconds(secs: f64) -> Self {
        Budget {
            deadline: Some(Instant::now() + Duration::from_secs_f64(secs.max(0.0))),
        }
    }

    pub fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::seconds(Budget::DEFAULT_SECONDS)
    }
}

fn digest(trace: &str) -> String {
    Sha256::digest(trace.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Exact (or best-known, when `optimal` is false) subset parameter with its
/// verified witness and a digest of the search trace.
#[derive(Debug, Clone)]
pub struct SubsetResult {
    pub value: usize,
    pub certificate: SubsetCertificate,
    pub optimal: bool,
    pub nodes: u64,
    pub search_digest: String,
}

/// Chromatic-number result; `lower == upper` iff `optimal`. The coloring
/// always witnesses `upper`.
#[derive(Debug, Clone)]
pub struct ColoringResult {
    pub lower: usize,
    pub upper: usize,
    pub coloring: Coloring,
    pub optimal: bool,
    pub nodes: u64,
    pub search_digest: String,
}

impl ColoringResult {
    pub fn value(&self) -> usize {
        self.upper
    }
}

/// Dichromatic-number result; the cover always witnesses `upper`.
#[derive(Debug, Clone)]
pub struct CoverResult {
    pub lower: usize,
    pub upper: usize,
    pub cover: AcyclicCover,
    pub optimal: bool,
    pub nodes: u64,
    pub search_digest: String,
}

impl CoverResult {
    pub fn value(&self) -> usize {
        self.upper
    }
}

// ---------------------------------------------------------------------------
// maximum clique on a symmetric adjacency (Tomita-style coloring bound)
// ---------------------------------------------------------------------------

struct CliqueSearch<'a> {
    adj: &'a [BitSet],
    best: Vec<usize>,
    nodes: u64,
    stopped: bool,
    budget: Budget,
}

impl<'a> CliqueSearch<'a> {
    /// Greedy-coloring order of the candidate set: vertices grouped by color
    /// class, paired with their class number as a clique-size bound.
    fn color_order(&self, cands: &BitSet) -> Vec<(usize, usize)> {
        let mut classes: Vec<BitSet> = Vec::new();
        let n = cands.capacity();
        for v in cands.iter() {
            match classes.iter_mut().find(|c| self.adj[v].is_disjoint(c)) {
                Some(class) => class.insert(v),
                None => {
                    let mut class = BitSet::new(n);
                    class.insert(v);
                    classes.push(class);
                }
            }
        }
        let mut order = Vec::with_capacity(cands.len());
        for (ci, class) in classes.iter().enumerate() {
            for v in class.iter() {
                order.push((v, ci + 1));
            }
        }
        order
    }

    fn expand(&mut self, current: &mut Vec<usize>, cands: &BitSet) {
        self.nodes += 1;
        if self.stopped || (self.nodes & 0x3ff == 0 && self.budget.expired()) {
            self.stopped = true;
            return;
        }
        let order = self.color_order(cands);
        let mut pool = cands.clone();
        for i in (0..order.len()).rev() {
            let (v, bound) = order[i];
            if current.len() + bound <= self.best.len() {
                return;
            }
            current.push(v);
            let mut next = pool.clone();
            next.intersect_with(&self.adj[v]);
            if next.is_empty() {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            } else {
                self.expand(current, &next);
            }
            current.pop();
            pool.remove(v);
            if self.stopped {
                return;
            }
        }
    }
}

/// Maximum clique of a symmetric adjacency; returns the clique, whether the
/// search completed, and the node count.
fn max_clique(adj: &[BitSet], budget: Budget) -> (Vec<usize>, bool, u64) {
    let n = adj.len();
    let mut search = CliqueSearch {
        adj,
        best: Vec::new(),
        nodes: 0,
        stopped: false,
        budget,
    };
    if n > 0 {
        let mut current = Vec::new();
        search.expand(&mut current, &BitSet::full(n));
    }
    let mut best = search.best;
    best.sort_unstable();
    (best, !search.stopped, search.nodes)
}

fn symmetric_rows(g: &Digraph) -> Vec<BitSet> {
    (0..g.n()).map(|v| g.out_row(v).clone()).collect()
}

/// Size of a largest edgeless subset (edges in either direction forbidden).
pub fn independence_number(g: &Digraph, budget: Budget) -> SubsetResult {
    let comp = g.symmetrize().complement();
    let rows = symmetric_rows(&comp);
    let (best, complete, nodes) = max_clique(&rows, budget);
    SubsetResult {
        value: best.len(),
        certificate: SubsetCertificate {
            kind: SubsetKind::Independent,
            vertices: best.clone(),
            order: None,
        },
        optimal: complete,
        nodes,
        search_digest: digest(&format!("independence nodes={nodes} best={best:?}")),
    }
}

/// Size of a largest set with all pairs bidirected.
pub fn symmetric_clique_number(g: &Digraph, budget: Budget) -> SubsetResult {
    let bi = g.bidirected();
    let rows = symmetric_rows(&bi);
    let (best, complete, nodes) = max_clique(&rows, budget);
    SubsetResult {
        value: best.len(),
        certificate: SubsetCertificate {
            kind: SubsetKind::SymmetricClique,
            vertices: best.clone(),
            order: None,
        },
        optimal: complete,
        nodes,
        search_digest: digest(&format!("symclique nodes={nodes} best={best:?}")),
    }
}

struct TransSearch<'a> {
    g: &'a Digraph,
    best: Vec<usize>,
    nodes: u64,
    stopped: bool,
    budget: Budget,
}

impl<'a> TransSearch<'a> {
    fn expand(&mut self, prefix: &mut Vec<usize>, cands: &BitSet) {
        self.nodes += 1;
        if self.stopped || (self.nodes & 0x3ff == 0 && self.budget.expired()) {
            self.stopped = true;
            return;
        }
        if prefix.len() > self.best.len() {
            self.best = prefix.clone();
        }
        if prefix.len() + cands.len() <= self.best.len() {
            return;
        }
        for v in cands.iter() {
            prefix.push(v);
            let mut next = cands.clone();
            next.intersect_with(self.g.out_row(v));
            self.expand(prefix, &next);
            prefix.pop();
            if self.stopped {
                return;
            }
        }
    }
}

/// Largest vertex set admitting a linear order with every forward pair an
/// edge (reverse edges may also be present).
pub fn transitive_clique_number(g: &Digraph, budget: Budget) -> SubsetResult {
    let mut search = TransSearch {
        g,
        best: Vec::new(),
        nodes: 0,
        stopped: false,
        budget,
    };
    let mut prefix = Vec::new();
    search.expand(&mut prefix, &BitSet::full(g.n()));
    let order = search.best.clone();
    let mut vertices = order.clone();
    vertices.sort_unstable();
    let nodes = search.nodes;
    SubsetResult {
        value: order.len(),
        certificate: SubsetCertificate {
            kind: SubsetKind::TransitiveClique,
            vertices,
            order: Some(order.clone()),
        },
        optimal: !search.stopped,
        nodes,
        search_digest: digest(&format!("transclique nodes={nodes} best={order:?}")),
    }
}

struct AcyclicSearch<'a> {
    g: &'a Digraph,
    best: Vec<usize>,
    nodes: u64,
    stopped: bool,
    budget: Budget,
}

impl<'a> AcyclicSearch<'a> {
    fn expand(&mut self, current: &mut BitSet, count: usize, start: usize) {
        self.nodes += 1;
        if self.stopped || (self.nodes & 0xff == 0 && self.budget.expired()) {
            self.stopped = true;
            return;
        }
        if count > self.best.len() {
            self.best = current.to_vec();
        }
        let mut addable = Vec::new();
        for v in start..self.g.n() {
            current.insert(v);
            if self.g.is_acyclic_on(current) {
                addable.push(v);
            }
            current.remove(v);
        }
        if count + addable.len() <= self.best.len() {
            return;
        }
        for (i, &v) in addable.iter().enumerate() {
            if count + (addable.len() - i) <= self.best.len() {
                return;
            }
            current.insert(v);
            self.expand(current, count + 1, v + 1);
            current.remove(v);
            if self.stopped {
                return;
            }
        }
    }
}

/// Largest vertex set inducing no directed cycle (a bidirected edge is a
/// 2-cycle).
pub fn acyclicity_number(g: &Digraph, budget: Budget) -> SubsetResult {
    let mut search = AcyclicSearch {
        g,
        best: Vec::new(),
        nodes: 0,
        stopped: false,
        budget,
    };
    let mut current = BitSet::new(g.n());
    search.expand(&mut current, 0, 0);
    let vertices = search.best.clone();
    let order = g
        .topo_order_on(&BitSet::from_indices(g.n(), &vertices))
        .expect("search only keeps acyclic sets");
    let nodes = search.nodes;
    SubsetResult {
        value: vertices.len(),
        certificate: SubsetCertificate {
            kind: SubsetKind::Acyclic,
            vertices: vertices.clone(),
            order: Some(order),
        },
        optimal: !search.stopped,
        nodes,
        search_digest: digest(&format!("acyclicity nodes={nodes} best={vertices:?}")),
    }
}

// ---------------------------------------------------------------------------
// chromatic number: DSATUR greedy + branch-and-bound feasibility
// ---------------------------------------------------------------------------

fn dsatur_greedy(rows: &[BitSet]) -> Vec<usize> {
    let n = rows.len();
    let degree: Vec<usize> = rows.iter().map(|r| r.len()).collect();
    let mut colors = vec![usize::MAX; n];
    let mut neighbor_colors: Vec<Vec<bool>> = vec![Vec::new(); n];
    for _ in 0..n {
        // max saturation, then max degree, then min index
        let mut pick = usize::MAX;
        let mut key = (0usize, 0usize);
        for v in 0..n {
            if colors[v] != usize::MAX {
                continue;
            }
            let sat = neighbor_colors[v].iter().filter(|&&b| b).count();
            let cand = (sat, degree[v]);
            if pick == usize::MAX || cand > key {
                pick = v;
                key = cand;
            }
        }
        let v = pick;
        let c = (0..n)
            .find(|&c| !neighbor_colors[v].get(c).copied().unwrap_or(false))
            .expect("n colors always suffice");
        colors[v] = c;
        for u in rows[v].iter() {
            if neighbor_colors[u].len() <= c {
                neighbor_colors[u].resize(c + 1, false);
            }
            neighbor_colors[u][c] = true;
        }
    }
    colors
}

enum KColorOutcome {
    Found(Vec<usize>),
    Infeasible,
    Timeout,
}

struct KColorSearch<'a> {
    rows: &'a [BitSet],
    degree: Vec<usize>,
    k: usize,
    colors: Vec<usize>,
    nodes: u64,
    budget: Budget,
    stopped: bool,
}

impl<'a> KColorSearch<'a> {
    fn solve(&mut self, uncolored: usize, max_used: usize) -> bool {
        self.nodes += 1;
        if self.stopped || (self.nodes & 0x3ff == 0 && self.budget.expired()) {
            self.stopped = true;
            return false;
        }
        if uncolored == 0 {
            return true;
        }
        let n = self.rows.len();
        // DSATUR branching vertex
        let mut pick = usize::MAX;
        let mut key = (0usize, 0usize);
        for v in 0..n {
            if self.colors[v] != usize::MAX {
                continue;
            }
            let mut seen = vec![false; self.k];
            let mut sat = 0;
            for u in self.rows[v].iter() {
                let c = self.colors[u];
                if c != usize::MAX && !seen[c] {
                    seen[c] = true;
                    sat += 1;
                }
            }
            let cand = (sat, self.degree[v]);
            if pick == usize::MAX || cand > key {
                pick = v;
                key = cand;
            }
        }
        let v = pick;
        let mut forbidden = vec![false; self.k];
        for u in self.rows[v].iter() {
            if self.colors[u] != usize::MAX {
                forbidden[self.colors[u]] = true;
            }
        }
        // allow one fresh color at most: canonical color order
        let limit = self.k.min(max_used + 2);
        for c in 0..limit {
            if forbidden[c] {
                continue;
            }
            self.colors[v] = c;
            if self.solve(uncolored - 1, max_used.max(c)) {
                return true;
            }
            self.colors[v] = usize::MAX;
            if self.stopped {
                return false;
            }
        }
        false
    }
}

fn k_coloring(rows: &[BitSet], k: usize, clique: &[usize], budget: Budget, nodes: &mut u64) -> KColorOutcome {
    let n = rows.len();
    if clique.len() > k {
        return KColorOutcome::Infeasible;
    }
    let mut search = KColorSearch {
        rows,
        degree: rows.iter().map(|r| r.len()).collect(),
        k,
        colors: vec![usize::MAX; n],
        nodes: 0,
        budget,
        stopped: false,
    };
    for (i, &v) in clique.iter().enumerate() {
        search.colors[v] = i;
    }
    let max_used = clique.len().saturating_sub(1);
    let found = search.solve(n - clique.len(), max_used);
    *nodes += search.nodes;
    if found {
        KColorOutcome::Found(search.colors)
    } else if search.stopped {
        KColorOutcome::Timeout
    } else {
        KColorOutcome::Infeasible
    }
}

fn normalize_coloring(colors: Vec<usize>) -> Coloring {
    // compact color ids in order of first appearance
    let mut map: HashMap<usize, usize> = HashMap::new();
    let mut next = 0;
    let colors: Vec<usize> = colors
        .into_iter()
        .map(|c| {
            *map.entry(c).or_insert_with(|| {
                let id = next;
                next += 1;
                id
            })
        })
        .collect();
    Coloring { colors, k: next }
}

/// Exact chromatic number of the symmetrized graph, with a verified proper
/// coloring; a bracketing `(lower, upper)` when the budget runs out.
pub fn chromatic_number(g: &Digraph, budget: Budget) -> ColoringResult {
    let sym = g.symmetrize();
    let rows = symmetric_rows(&sym);
    let n = g.n();
    if n == 0 {
        return ColoringResult {
            lower: 0,
            upper: 0,
            coloring: Coloring { colors: vec![], k: 0 },
            optimal: true,
            nodes: 0,
            search_digest: digest("chromatic empty"),
        };
    }
    let (clique, _clique_complete, mut nodes) = max_clique(&rows, budget);
    let mut lower = clique.len().max(1);
    let mut best = normalize_coloring(dsatur_greedy(&rows));
    let mut upper = best.k;
    let mut timed_out = false;
    while lower < upper {
        if budget.expired() {
            timed_out = true;
            break;
        }
        match k_coloring(&rows, upper - 1, &clique, budget, &mut nodes) {
            KColorOutcome::Found(colors) => {
                best = normalize_coloring(colors);
                upper = best.k;
            }
            KColorOutcome::Infeasible => {
                lower = upper;
            }
            KColorOutcome::Timeout => {
                timed_out = true;
                break;
            }
        }
    }
    let optimal = lower == upper && !timed_out;
    if optimal {
        lower = upper;
    }
    ColoringResult {
        lower,
        upper,
        optimal,
        nodes,
        search_digest: digest(&format!(
            "chromatic nodes={nodes} lower={lower} upper={upper} clique={clique:?}"
        )),
        coloring: best,
    }
}

// ---------------------------------------------------------------------------
// dichromatic number: set cover over maximal acyclic sets, LP lower bound
// ---------------------------------------------------------------------------

struct CoverSearch<'a> {
    sys: &'a SetSystem,
    by_element: Vec<Vec<usize>>,
    best: Vec<usize>,
    target_lower: usize,
    max_size: usize,
    nodes: u64,
    stopped: bool,
    budget: Budget,
    memo: HashMap<Vec<u64>, usize>,
}

impl<'a> CoverSearch<'a> {
    fn bnb(&mut self, chosen: &mut Vec<usize>, covered: &BitSet) {
        self.nodes += 1;
        if self.stopped || (self.nodes & 0xff == 0 && self.budget.expired()) {
            self.stopped = true;
            return;
        }
        if self.best.len() <= self.target_lower {
            return;
        }
        let uncovered_count = self.sys.ground - covered.len();
        if uncovered_count == 0 {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return;
        }
        if chosen.len() + uncovered_count.div_ceil(self.max_size) >= self.best.len() {
            return;
        }
        let key = covered.words().to_vec();
        if let Some(&seen) = self.memo.get(&key) {
            if seen <= chosen.len() {
                return;
            }
        }
        self.memo.insert(key, chosen.len());
        // branch on the uncovered element with fewest covering sets
        let mut pick = usize::MAX;
        let mut fewest = usize::MAX;
        for v in 0..self.sys.ground {
            if !covered.contains(v) {
                let cnt = self.by_element[v].len();
                if cnt < fewest {
                    fewest = cnt;
                    pick = v;
                }
            }
        }
        for &si in &self.by_element[pick].clone() {
            let mut next = covered.clone();
            next.union_with(&self.sys.sets[si]);
            chosen.push(si);
            self.bnb(chosen, &next);
            chosen.pop();
            if self.stopped || self.best.len() <= self.target_lower {
                return;
            }
        }
    }
}

fn greedy_cover(sys: &SetSystem) -> Vec<usize> {
    let mut covered = BitSet::new(sys.ground);
    let mut chosen = Vec::new();
    while covered.len() < sys.ground {
        let mut pick = 0;
        let mut gain = 0;
        for (i, s) in sys.sets.iter().enumerate() {
            let g = s.len() - s.intersection_count(&covered);
            if g > gain {
                gain = g;
                pick = i;
            }
        }
        chosen.push(pick);
        covered.union_with(&sys.sets[pick]);
    }
    chosen
}

/// Converts chosen covering sets into a partition cover with per-class
/// topological orders: each vertex joins the first chosen set containing it.
fn cover_from_sets(g: &Digraph, sys: &SetSystem, chosen: &[usize]) -> AcyclicCover {
    let n = g.n();
    let mut assigned = vec![usize::MAX; n];
    for (ci, &si) in chosen.iter().enumerate() {
        for v in sys.sets[si].iter() {
            if assigned[v] == usize::MAX {
                assigned[v] = ci;
            }
        }
    }
    let mut classes = Vec::new();
    for ci in 0..chosen.len() {
        let members: Vec<usize> = (0..n).filter(|&v| assigned[v] == ci).collect();
        if members.is_empty() {
            continue;
        }
        let order = g
            .topo_order_on(&BitSet::from_indices(n, &members))
            .expect("subset of an acyclic set is acyclic");
        classes.push(order);
    }
    AcyclicCover { classes }
}

/// Exact dichromatic number with a verified acyclic cover; a bracket when
/// the budget runs out. Falls back to direct class assignment if the
/// maximal-set enumeration overflows its cap.
pub fn dichromatic_number(g: &Digraph, budget: Budget) -> CoverResult {
    dichromatic_number_capped(g, budget, DEFAULT_ENUM_LIMIT)
}

pub fn dichromatic_number_capped(g: &Digraph, budget: Budget, enum_limit: usize) -> CoverResult {
    let n = g.n();
    if n == 0 {
        return CoverResult {
            lower: 0,
            upper: 0,
            cover: AcyclicCover { classes: vec![] },
            optimal: true,
            nodes: 0,
            search_digest: digest("dichromatic empty"),
        };
    }
    match maximal_acyclic_sets_capped(g, enum_limit) {
        Ok(sys) => {
            let lp = fractional_cover_number(&sys);
            let lp_f = ratio_to_f64(&lp.value);
            let mut lower = lp_f.ceil() as usize;
            // exact ceiling from the rational, immune to float edge cases
            let ceil = (lp.value.numer() + lp.value.denom() - 1u8) / lp.value.denom();
            if let Some(c) = num::ToPrimitive::to_usize(&ceil) {
                lower = c;
            }
            let greedy = greedy_cover(&sys);
            let by_element: Vec<Vec<usize>> = (0..n).map(|v| sys.sets_containing(v)).collect();
            let mut search = CoverSearch {
                sys: &sys,
                by_element,
                best: greedy,
                target_lower: lower,
                max_size: sys.max_set_size().max(1),
                nodes: 0,
                stopped: false,
                budget,
                memo: HashMap::new(),
            };
            let mut chosen = Vec::new();
            search.bnb(&mut chosen, &BitSet::new(n));
            let upper = search.best.len();
            let optimal = !search.stopped || upper == lower;
            let lower = if search.stopped { lower } else { upper };
            let cover = cover_from_sets(g, &sys, &search.best);
            let nodes = search.nodes;
            CoverResult {
                lower: lower.min(upper),
                upper,
                optimal,
                nodes,
                search_digest: digest(&format!(
                    "dichromatic sets={} nodes={nodes} lower={lower} upper={upper}",
                    sys.sets.len()
                )),
                cover,
            }
        }
        Err(_) => direct_dicoloring(g, budget),
    }
}

/// Fallback dicoloring search assigning vertices to classes directly.
fn direct_dicoloring(g: &Digraph, budget: Budget) -> CoverResult {
    let n = g.n();
    // greedy sequential upper bound
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        let mut placed = false;
        for class in classes.iter_mut() {
            class.push(v);
            let set = BitSet::from_indices(n, class);
            if g.is_acyclic_on(&set) {
                placed = true;
                break;
            }
            class.pop();
        }
        if !placed {
            classes.push(vec![v]);
        }
    }
    let mut upper = classes.len();
    let mut best = classes;
    let mut lower = 1;
    let mut timed_out = false;
    'outer: while lower < upper {
        if budget.expired() {
            timed_out = true;
            break;
        }
        let k = upper - 1;
        match assign_dicolor(g, k, budget) {
            Some(Some(assignment)) => {
                let mut cls: Vec<Vec<usize>> = vec![Vec::new(); k];
                for (v, &c) in assignment.iter().enumerate() {
                    cls[c].push(v);
                }
                cls.retain(|c| !c.is_empty());
                upper = cls.len();
                best = cls;
            }
            Some(None) => {
                lower = upper;
                break 'outer;
            }
            None => {
                timed_out = true;
                break 'outer;
            }
        }
    }
    let classes: Vec<Vec<usize>> = best
        .iter()
        .map(|members| {
            g.topo_order_on(&BitSet::from_indices(n, members))
                .expect("greedy classes are acyclic")
        })
        .collect();
    let optimal = lower == upper && !timed_out;
    CoverResult {
        lower,
        upper,
        optimal,
        nodes: 0,
        search_digest: digest(&format!("dichromatic-direct lower={lower} upper={upper}")),
        cover: AcyclicCover { classes },
    }
}

/// `Some(Some(assignment))` = k classes suffice; `Some(None)` = proven
/// impossible; `None` = timeout.
fn assign_dicolor(g: &Digraph, k: usize, budget: Budget) -> Option<Option<Vec<usize>>> {
    let n = g.n();
    let mut assignment = vec![usize::MAX; n];
    let mut nodes = 0u64;
    fn rec(
        g: &Digraph,
        k: usize,
        v: usize,
        max_used: usize,
        assignment: &mut Vec<usize>,
        budget: &Budget,
        nodes: &mut u64,
    ) -> Option<bool> {
        *nodes += 1;
        if *nodes & 0xff == 0 && budget.expired() {
            return None;
        }
        let n = g.n();
        if v == n {
            return Some(true);
        }
        let limit = k.min(max_used + 2);
        for c in 0..limit {
            assignment[v] = c;
            let members: Vec<usize> = (0..=v).filter(|&u| assignment[u] == c).collect();
            if g.is_acyclic_on(&BitSet::from_indices(n, &members)) {
                match rec(g, k, v + 1, max_used.max(c), assignment, budget, nodes) {
                    Some(true) => return Some(true),
                    Some(false) => {}
                    None => return None,
                }
            }
            assignment[v] = usize::MAX;
        }
        Some(false)
    }
    match rec(g, k, 0, 0, &mut assignment, &budget, &mut nodes) {
        Some(true) => Some(Some(assignment)),
        Some(false) => Some(None),
        None => None,
    }
}

// ---------------------------------------------------------------------------
// constructive coloring of AND powers from a dicoloring of the base graph
// ---------------------------------------------------------------------------

/// Colors the t-th AND power by the pair (class-index sequence, exact type),
/// which is proper whenever the cover verifies. When every class is an
/// independent set the type component is redundant and dropped, so a proper
/// coloring of the base graph lifts to exactly its sequence coloring.
pub fn constructive_power_coloring(g: &Digraph, cover: &AcyclicCover, t: usize) -> Result<Coloring> {
    match verify_cover(g, cover)? {
        crate::certificate::Verdict::Valid => {}
        crate::certificate::Verdict::Invalid(v) => {
            return Err(Error::UnverifiedCover(v.detail));
        }
    }
    let n = g.n();
    let codec = PowerIndex::new(n, t);
    let total = codec.total().ok_or(Error::TooLarge {
        required: usize::MAX,
        limit: DEFAULT_POWER_VERTEX_LIMIT,
    })?;
    if total > DEFAULT_POWER_VERTEX_LIMIT {
        return Err(Error::TooLarge {
            required: total,
            limit: DEFAULT_POWER_VERTEX_LIMIT,
        });
    }
    let class_of = cover.class_of(n)?;
    let classes_independent = cover.classes.iter().all(|class| {
        class.iter().all(|&u| {
            class
                .iter()
                .all(|&v| u == v || !(g.has_edge(u, v) || g.has_edge(v, u)))
        })
    });
    let mut key_ids: HashMap<(Vec<usize>, Vec<usize>), usize> = HashMap::new();
    let mut colors = Vec::with_capacity(total);
    for x in 0..total {
        let seq = codec.decode(x);
        let class_seq: Vec<usize> = seq.iter().map(|&a| class_of[a]).collect();
        let type_part = if classes_independent {
            Vec::new()
        } else {
            TypeVector::of_sequence(n, &seq).counts
        };
        let next = key_ids.len();
        let id = *key_ids.entry((class_seq, type_part)).or_insert(next);
        colors.push(id);
    }
    Ok(Coloring {
        colors,
        k: key_ids.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::{verify_certificate, verify_coloring, Certificate};
    use crate::digraph::{generate, GraphFamily};
    use crate::power::and_power;

    fn gen(f: GraphFamily) -> Digraph {
        generate(f).unwrap()
    }

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence_number(&gen(GraphFamily::Cycle(5)).symmetrize(), b()).value, 2);
        assert_eq!(independence_number(&gen(GraphFamily::Complete(3)), b()).value, 1);
        let r = independence_number(&gen(GraphFamily::Cycle(5)), b());
        assert_eq!(r.value, 2);
        assert!(verify_certificate(&gen(GraphFamily::Cycle(5)), &Certificate::Subset(r.certificate))
            .unwrap()
            .is_valid());
    }

    #[test]
    fn pentagon_square_independence() {
        let c5 = gen(GraphFamily::Cycle(5)).symmetrize();
        let sq = and_power(&c5, 2).unwrap();
        let r = independence_number(&sq, b());
        assert_eq!(r.value, 5);
        assert!(r.optimal);
    }

    #[test]
    fn symmetric_clique_examples() {
        let f = gen(GraphFamily::Bollobas);
        let r = symmetric_clique_number(&f, b());
        assert_eq!(r.value, 2);
        assert!(verify_certificate(&f, &Certificate::Subset(r.certificate)).unwrap().is_valid());
        assert_eq!(symmetric_clique_number(&gen(GraphFamily::Tournament(5)), b()).value, 1);
        assert_eq!(symmetric_clique_number(&gen(GraphFamily::Complete(4)), b()).value, 4);
    }

    #[test]
    fn transitive_clique_examples() {
        let s5 = gen(GraphFamily::CycleComplement(5));
        let r = transitive_clique_number(&s5, b());
        assert_eq!(r.value, 4);
        assert!(verify_certificate(&s5, &Certificate::Subset(r.certificate)).unwrap().is_valid());
        assert_eq!(transitive_clique_number(&gen(GraphFamily::Cycle(3)), b()).value, 2);
        // transitive tournament on 4 vertices
        let tt4 = Digraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(transitive_clique_number(&tt4, b()).value, 4);
    }

    #[test]
    fn acyclicity_examples() {
        let t5 = gen(GraphFamily::Tournament(5));
        let r = acyclicity_number(&t5, b());
        assert_eq!(r.value, 3);
        assert!(verify_certificate(&t5, &Certificate::Subset(r.certificate)).unwrap().is_valid());
        for k in 3..=7 {
            assert_eq!(acyclicity_number(&gen(GraphFamily::Cycle(k)), b()).value, k - 1);
        }
        assert_eq!(acyclicity_number(&gen(GraphFamily::AltCycle5Complement), b()).value, 2);
    }

    #[test]
    fn chromatic_examples() {
        for t in 1..=4 {
            let p = and_power(&gen(GraphFamily::SingleEdge), t).unwrap();
            let r = chromatic_number(&p, b());
            assert!(r.optimal);
            assert_eq!(r.value(), t + 1, "single-edge power t={t}");
            assert!(verify_coloring(&p, &r.coloring).unwrap().is_valid());
        }
        for n in 1..=5 {
            assert_eq!(chromatic_number(&gen(GraphFamily::Complete(n)), b()).value(), n);
        }
    }

    #[test]
    fn pentagon_square_chromatic() {
        let c5 = gen(GraphFamily::Cycle(5)).symmetrize();
        let sq = and_power(&c5, 2).unwrap();
        let r = chromatic_number(&sq, b());
        assert!(r.optimal);
        assert_eq!(r.value(), 5);
        assert!(verify_coloring(&sq, &r.coloring).unwrap().is_valid());
    }

    #[test]
    fn dichromatic_examples() {
        let f = gen(GraphFamily::Bollobas);
        let r = dichromatic_number(&f, b());
        assert!(r.optimal);
        assert_eq!(r.value(), 2);
        assert!(verify_cover(&f, &r.cover).unwrap().is_valid());

        let c3 = gen(GraphFamily::Cycle(3));
        let r = dichromatic_number(&c3, b());
        assert_eq!(r.value(), 2);

        let k3 = gen(GraphFamily::Complete(3));
        let r = dichromatic_number(&k3, b());
        assert_eq!(r.value(), 3);
        assert_eq!(r.value(), chromatic_number(&k3, b()).value());
    }

    #[test]
    fn dichromatic_fallback_agrees() {
        for g in [gen(GraphFamily::Tournament(5)), gen(GraphFamily::AltCycle5Complement)] {
            let normal = dichromatic_number(&g, b());
            let direct = direct_dicoloring(&g, b());
            assert!(normal.optimal && direct.optimal);
            assert_eq!(normal.value(), direct.value());
        }
    }

    #[test]
    fn constructive_coloring_bollobas() {
        let f = gen(GraphFamily::Bollobas);
        let cover = AcyclicCover {
            classes: vec![vec![0], vec![1, 2]],
        };
        let coloring = constructive_power_coloring(&f, &cover, 2).unwrap();
        let p = and_power(&f, 2).unwrap();
        assert!(verify_coloring(&p, &coloring).unwrap().is_valid());
        assert!(coloring.k <= 36);
    }

    #[test]
    fn constructive_coloring_symmetric_base() {
        // proper coloring of a symmetric graph lifts to its sequence coloring at t=1
        let c5 = gen(GraphFamily::Cycle(5)).symmetrize();
        let proper = chromatic_number(&c5, b()).coloring;
        let cover = AcyclicCover {
            classes: proper.color_classes().into_iter().filter(|c| !c.is_empty()).collect(),
        };
        let lifted = constructive_power_coloring(&c5, &cover, 1).unwrap();
        let classes_of = cover.class_of(5).unwrap();
        for v in 0..5 {
            for u in 0..5 {
                assert_eq!(
                    lifted.colors[v] == lifted.colors[u],
                    classes_of[v] == classes_of[u]
                );
            }
        }
    }

    #[test]
    fn constructive_coloring_cyclic_triangle() {
        let c3 = gen(GraphFamily::Cycle(3));
        let cover = AcyclicCover {
            classes: vec![vec![0, 1], vec![2]],
        };
        let coloring = constructive_power_coloring(&c3, &cover, 3).unwrap();
        let p = and_power(&c3, 3).unwrap();
        assert_eq!(p.n(), 27);
        assert!(verify_coloring(&p, &coloring).unwrap().is_valid());
        // unverifiable cover is rejected
        let bad = AcyclicCover {
            classes: vec![vec![0, 1, 2]],
        };
        assert!(constructive_power_coloring(&c3, &bad, 2).is_err());
    }

    #[test]
    fn reverse_invariance_of_parameters() {
        for g in [
            gen(GraphFamily::Tournament(5)),
            gen(GraphFamily::AltCycle5),
            gen(GraphFamily::Bollobas),
            gen(GraphFamily::Cycle(4)),
        ] {
            let r = g.reverse();
            assert_eq!(independence_number(&g, b()).value, independence_number(&r, b()).value);
            assert_eq!(
                symmetric_clique_number(&g, b()).value,
                symmetric_clique_number(&r, b()).value
            );
            assert_eq!(
                transitive_clique_number(&g, b()).value,
                transitive_clique_number(&r, b()).value
            );
            assert_eq!(acyclicity_number(&g, b()).value, acyclicity_number(&r, b()).value);
            assert_eq!(chromatic_number(&g, b()).value(), chromatic_number(&r, b()).value());
            assert_eq!(dichromatic_number(&g, b()).value(), dichromatic_number(&r, b()).value());
        }
    }

    #[test]
    fn budget_exhaustion_brackets() {
        // an already-expired budget must yield a bracket, never a wrong answer
        let c5 = gen(GraphFamily::Cycle(5)).symmetrize();
        let sq = and_power(&c5, 2).unwrap();
        let r = chromatic_number(&sq, Budget::seconds(0.0));
        assert!(r.lower <= 5 && 5 <= r.upper);
        assert!(verify_coloring(&sq, &r.coloring).unwrap().is_valid());
        let s = independence_number(&sq, Budget::seconds(0.0));
        assert!(s.value <= 5);
        assert!(!s.optimal || s.value == 5);
    }
}
