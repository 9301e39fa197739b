//! Loop-free directed graphs on labeled vertices with bit-row adjacency,
//! plus the transformations and constructions the rest of the crate builds on:
//! complement, reverse, symmetrization, union, closure graphs and their
//! realizability, vertex-transitivity testing, and named graph generators.

use crate::bits::BitSet;
use crate::error::{Error, Result};

/// Default cap for the exhaustive vertex-transitivity backtracking.
pub const DEFAULT_VT_LIMIT: usize = 12;

/// A directed graph on vertices `0..n` with no self-loops.
///
/// `rows[u]` is the out-neighborhood of `u` as a bit set. Vertex identity is
/// positional and every operation is label-stable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    rows: Vec<BitSet>,
}

impl Digraph {
    /// The edgeless digraph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Digraph {
            n,
            rows: vec![BitSet::new(n); n],
        }
    }

    /// Builds a digraph from an edge list; duplicates collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Digraph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::EdgeOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.rows[u].insert(v);
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn out_row(&self, u: usize) -> &BitSet {
        &self.rows[u]
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u].insert(v);
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Directed edges in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.rows[u].iter() {
                out.push((u, v));
            }
        }
        out
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.rows[u].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.rows[u].contains(v)).count()
    }

    pub fn max_out_degree(&self) -> usize {
        (0..self.n).map(|u| self.out_degree(u)).max().unwrap_or(0)
    }

    pub fn max_in_degree(&self) -> usize {
        let mut indeg = vec![0usize; self.n];
        for u in 0..self.n {
            for v in self.rows[u].iter() {
                indeg[v] += 1;
            }
        }
        indeg.into_iter().max().unwrap_or(0)
    }

    /// Edge `(u,v)` present iff absent here, for all ordered pairs `u != v`.
    pub fn complement(&self) -> Digraph {
        let mut g = Digraph::empty(self.n);
        for u in 0..self.n {
            let mut row = self.rows[u].clone();
            row.invert();
            row.remove(u);
            g.rows[u] = row;
        }
        g
    }

    /// Transposed adjacency.
    pub fn reverse(&self) -> Digraph {
        let mut g = Digraph::empty(self.n);
        for u in 0..self.n {
            for v in self.rows[u].iter() {
                g.rows[v].insert(u);
            }
        }
        g
    }

    /// Underlying undirected graph as a symmetric digraph.
    pub fn symmetrize(&self) -> Digraph {
        let rev = self.reverse();
        let mut g = self.clone();
        for u in 0..self.n {
            g.rows[u].union_with(&rev.rows[u]);
        }
        g
    }

    /// Subgraph of edges present in both directions (bidirected edges only).
    pub fn bidirected(&self) -> Digraph {
        let rev = self.reverse();
        let mut g = self.clone();
        for u in 0..self.n {
            g.rows[u].intersect_with(&rev.rows[u]);
        }
        g
    }

    pub fn union(&self, other: &Digraph) -> Result<Digraph> {
        if self.n != other.n {
            return Err(Error::MismatchedVertexCount {
                left: self.n,
                right: other.n,
            });
        }
        let mut g = self.clone();
        for u in 0..self.n {
            g.rows[u].union_with(&other.rows[u]);
        }
        Ok(g)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|u| {
            self.rows[u]
                .iter()
                .all(|v| self.rows[v].contains(u))
        })
    }

    /// True when no edge appears together with its reverse.
    pub fn is_oriented(&self) -> bool {
        (0..self.n).all(|u| {
            self.rows[u]
                .iter()
                .all(|v| !self.rows[v].contains(u))
        })
    }

    /// Closure graph: symmetric digraph joining `a,b` when `(a,b)` or `(b,a)`
    /// is an edge, or some `v` is an out-neighbor of both.
    pub fn closure_graph(&self) -> Digraph {
        let mut g = self.symmetrize();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if !g.rows[a].contains(b) && !self.rows[a].is_disjoint(&self.rows[b]) {
                    g.rows[a].insert(b);
                    g.rows[b].insert(a);
                }
            }
        }
        g
    }

    /// Replaces every undirected edge `{a,b}` of a symmetric graph by a fresh
    /// vertex receiving the two oriented edges `(a,.)`, `(b,.)`. The closure of
    /// the result induces the original graph on the original vertices.
    pub fn closure_gadget(&self) -> Result<Digraph> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let mut undirected = Vec::new();
        for a in 0..self.n {
            for b in self.rows[a].iter() {
                if a < b {
                    undirected.push((a, b));
                }
            }
        }
        let mut g = Digraph::empty(self.n + undirected.len());
        for (i, &(a, b)) in undirected.iter().enumerate() {
            let ve = self.n + i;
            g.rows[a].insert(ve);
            g.rows[b].insert(ve);
        }
        Ok(g)
    }

    /// Subgraph induced on `verts`, relabeled to `0..verts.len()` in the
    /// given order.
    pub fn induced(&self, verts: &[usize]) -> Digraph {
        let mut g = Digraph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if i != j && self.rows[u].contains(v) {
                    g.rows[i].insert(j);
                }
            }
        }
        g
    }

    /// Kahn elimination on the subgraph induced by `set`; a bidirected edge is
    /// a 2-cycle, so both endpoints can never survive together.
    pub fn is_acyclic_on(&self, set: &BitSet) -> bool {
        self.topo_order_on(set).is_some()
    }

    /// Topological order of the subgraph induced by `set`, or `None` if it has
    /// a directed cycle. Deterministic: the smallest-index source is taken
    /// first.
    pub fn topo_order_on(&self, set: &BitSet) -> Option<Vec<usize>> {
        let members = set.to_vec();
        let mut indeg: Vec<usize> = members
            .iter()
            .map(|&v| {
                members
                    .iter()
                    .filter(|&&u| u != v && self.rows[u].contains(v))
                    .count()
            })
            .collect();
        let mut done = vec![false; members.len()];
        let mut order = Vec::with_capacity(members.len());
        for _ in 0..members.len() {
            let Some(i) = (0..members.len()).find(|&i| !done[i] && indeg[i] == 0) else {
                return None;
            };
            done[i] = true;
            order.push(members[i]);
            for (j, &w) in members.iter().enumerate() {
                if !done[j] && self.rows[members[i]].contains(w) {
                    indeg[j] -= 1;
                }
            }
        }
        Some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.is_acyclic_on(&BitSet::full(self.n))
    }

    /// Whether the automorphism group acts transitively on vertices, by
    /// backtracking with degree-profile pruning. Rejects `n` above `limit`.
    pub fn is_vertex_transitive_with_limit(&self, limit: usize) -> Result<bool> {
        if self.n > limit {
            return Err(Error::TransitivityLimit { n: self.n, limit });
        }
        if self.n <= 1 {
            return Ok(true);
        }
        let profile: Vec<(usize, usize)> = (0..self.n)
            .map(|v| (self.out_degree(v), self.in_degree(v)))
            .collect();
        if profile.iter().any(|p| *p != profile[0]) {
            return Ok(false);
        }
        for target in 1..self.n {
            if !self.has_automorphism_mapping(0, target, &profile) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_vertex_transitive(&self) -> Result<bool> {
        self.is_vertex_transitive_with_limit(DEFAULT_VT_LIMIT)
    }

    fn has_automorphism_mapping(&self, src: usize, dst: usize, profile: &[(usize, usize)]) -> bool {
        let mut image = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        image[src] = dst;
        used[dst] = true;
        let order: Vec<usize> = std::iter::once(src)
            .chain((0..self.n).filter(|&v| v != src))
            .collect();
        self.extend_mapping(self, &order, 1, &mut image, &mut used, profile, profile)
    }

    /// Extends a partial vertex mapping from `self` into `other`, checking
    /// adjacency both ways against all previously assigned vertices.
    fn extend_mapping(
        &self,
        other: &Digraph,
        order: &[usize],
        depth: usize,
        image: &mut [usize],
        used: &mut [bool],
        self_profile: &[(usize, usize)],
        other_profile: &[(usize, usize)],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for w in 0..other.n {
            if used[w] || self_profile[v] != other_profile[w] {
                continue;
            }
            let ok = order[..depth].iter().all(|&p| {
                let q = image[p];
                self.rows[v].contains(p) == other.rows[w].contains(q)
                    && self.rows[p].contains(v) == other.rows[q].contains(w)
            });
            if ok {
                image[v] = w;
                used[w] = true;
                if self.extend_mapping(other, order, depth + 1, image, used, self_profile, other_profile) {
                    return true;
                }
                image[v] = usize::MAX;
                used[w] = false;
            }
        }
        false
    }

    /// Exact isomorphism test by backtracking; intended for small graphs
    /// (the crate only relies on it for n <= 8).
    pub fn is_isomorphic(&self, other: &Digraph) -> bool {
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return false;
        }
        let prof = |g: &Digraph| -> Vec<(usize, usize)> {
            (0..g.n).map(|v| (g.out_degree(v), g.in_degree(v))).collect()
        };
        let sp = prof(self);
        let op = prof(other);
        let mut sorted_sp = sp.clone();
        let mut sorted_op = op.clone();
        sorted_sp.sort_unstable();
        sorted_op.sort_unstable();
        if sorted_sp != sorted_op {
            return false;
        }
        let order: Vec<usize> = (0..self.n).collect();
        let mut image = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        self.extend_mapping(other, &order, 0, &mut image, &mut used, &sp, &op)
    }
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Named transformation, for the CLI surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transform {
    Complement,
    Reverse,
    Symmetrize,
}

pub fn transform(g: &Digraph, kind: Transform) -> Digraph {
    match kind {
        Transform::Complement => g.complement(),
        Transform::Reverse => g.reverse(),
        Transform::Symmetrize => g.symmetrize(),
    }
}

/// Generator tags for the graphs used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFamily {
    /// Cyclically oriented k-cycle, k >= 3.
    Cycle(usize),
    /// Complement of the cyclic k-cycle.
    CycleComplement(usize),
    /// Rotational tournament on m vertices, m odd: (i,j) iff j-i mod m in 1..=(m-1)/2.
    Tournament(usize),
    /// The 5-cycle oriented as alternating as possible (edge set fixed below).
    AltCycle5,
    /// Complement of `AltCycle5`.
    AltCycle5Complement,
    /// Two vertices, single directed edge (0,1).
    SingleEdge,
    /// Three vertices: 0 joined to 1 and 2 by bidirected edges, plus (1,2).
    Bollobas,
    /// Complete symmetric digraph.
    Complete(usize),
    /// Edgeless graph.
    Empty(usize),
}

/// Edge set of the alternating-oriented 5-cycle on cyclic order 0-1-2-3-4-0:
/// vertex 3 has outdegree one with out-neighbor 2, vertices 4 and 1 have
/// outdegree two, vertices 2 and 0 are sinks.
pub const ALT_CYCLE5_EDGES: [(usize, usize); 5] = [(3, 2), (4, 3), (4, 0), (1, 0), (1, 2)];

/// Edge set of the three-vertex graph whose AND powers encode covers by
/// cross-intersecting set-pair families.
pub const BOLLOBAS_EDGES: [(usize, usize); 5] = [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2)];

pub fn generate(family: GraphFamily) -> Result<Digraph> {
    match family {
        GraphFamily::Cycle(k) => {
            if k < 3 {
                return Err(Error::InvalidFamily(format!("cycle needs k >= 3, got {k}")));
            }
            let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
            Digraph::from_edges(k, &edges)
        }
        GraphFamily::CycleComplement(k) => Ok(generate(GraphFamily::Cycle(k))?.complement()),
        GraphFamily::Tournament(m) => {
            if m % 2 == 0 || m == 0 {
                return Err(Error::InvalidFamily(format!(
                    "rotational tournament needs odd m >= 1, got {m}"
                )));
            }
            let mut g = Digraph::empty(m);
            for i in 0..m {
                for r in 1..=(m - 1) / 2 {
                    g.add_edge(i, (i + r) % m);
                }
            }
            Ok(g)
        }
        GraphFamily::AltCycle5 => Digraph::from_edges(5, &ALT_CYCLE5_EDGES),
        GraphFamily::AltCycle5Complement => Ok(generate(GraphFamily::AltCycle5)?.complement()),
        GraphFamily::SingleEdge => Digraph::from_edges(2, &[(0, 1)]),
        GraphFamily::Bollobas => Digraph::from_edges(3, &BOLLOBAS_EDGES),
        GraphFamily::Complete(n) => {
            if n == 0 {
                return Err(Error::InvalidFamily("complete graph needs n >= 1".into()));
            }
            Ok(Digraph::empty(n).complement())
        }
        GraphFamily::Empty(n) => {
            if n == 0 {
                return Err(Error::InvalidFamily("empty graph needs n >= 1".into()));
            }
            Ok(Digraph::empty(n))
        }
    }
}

/// Answer of the closure-realizability search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Realizability {
    /// A witness digraph whose closure equals the input.
    Yes(Digraph),
    No,
    /// Outside the decision horizon (n > 5 and not triangle-free).
    Unknown,
}

/// Decides whether `g` is the closure graph of some digraph.
///
/// Triangle-free inputs are decided exactly: a closure edge outside the
/// witness's symmetrization always sits in a triangle, so the witness must be
/// a directed version of `g` itself with all indegrees <= 1, which bounds
/// `|E(g)| <= |V(g)|` and leaves a small orientation search. Other inputs are
/// decided by exhaustive search over all digraphs for n <= 5.
pub fn is_closure_realizable(g: &Digraph) -> Realizability {
    if !g.is_symmetric() {
        return Realizability::No;
    }
    let n = g.n();
    let mut undirected = Vec::new();
    for a in 0..n {
        for b in g.out_row(a).iter() {
            if a < b {
                undirected.push((a, b));
            }
        }
    }
    let triangle_free = (0..n).all(|a| {
        g.out_row(a).iter().filter(|&b| b > a).all(|b| {
            g.out_row(b)
                .iter()
                .filter(|&c| c > b)
                .all(|c| !g.has_edge(a, c))
        })
    });
    if triangle_free {
        if undirected.len() >= n + 1 {
            return Realizability::No;
        }
        let mut witness = Digraph::empty(n);
        let mut indeg = vec![0usize; n];
        if orient_search(g, &undirected, 0, &mut witness, &mut indeg) {
            debug_assert_eq!(&witness.closure_graph(), g);
            return Realizability::Yes(witness);
        }
        return Realizability::No;
    }
    if n <= 5 {
        let slots: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
            .collect();
        for mask in 0u64..(1u64 << slots.len()) {
            let mut f = Digraph::empty(n);
            for (i, &(u, v)) in slots.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    f.add_edge(u, v);
                }
            }
            if &f.closure_graph() == g {
                return Realizability::Yes(f);
            }
        }
        return Realizability::No;
    }
    Realizability::Unknown
}

/// Assigns each undirected edge one of `a->b`, `b->a`, `a<->b` keeping every
/// indegree <= 1; any complete assignment closes back to the original graph.
fn orient_search(
    g: &Digraph,
    edges: &[(usize, usize)],
    idx: usize,
    witness: &mut Digraph,
    indeg: &mut [usize],
) -> bool {
    if idx == edges.len() {
        return &witness.closure_graph() == g;
    }
    let (a, b) = edges[idx];
    // (head receives the edge; None in a slot means that direction is off)
    let options: [(bool, bool); 3] = [(true, false), (false, true), (true, true)];
    for (fwd, bwd) in options {
        let add_b = fwd as usize;
        let add_a = bwd as usize;
        if indeg[b] + add_b > 1 || indeg[a] + add_a > 1 {
            continue;
        }
        if fwd {
            witness.add_edge(a, b);
            indeg[b] += 1;
        }
        if bwd {
            witness.add_edge(b, a);
            indeg[a] += 1;
        }
        if orient_search(g, edges, idx + 1, witness, indeg) {
            return true;
        }
        if fwd {
            witness.rows[a].remove(b);
            indeg[b] -= 1;
        }
        if bwd {
            witness.rows[b].remove(a);
            indeg[a] -= 1;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(f: GraphFamily) -> Digraph {
        generate(f).unwrap()
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert!(matches!(
            Digraph::from_edges(3, &[(0, 0)]),
            Err(Error::SelfLoop(0))
        ));
        assert!(matches!(
            Digraph::from_edges(3, &[(0, 3)]),
            Err(Error::EdgeOutOfRange { .. })
        ));
        let g = Digraph::from_edges(3, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn single_edge_graph() {
        let l = gen(GraphFamily::SingleEdge);
        assert_eq!(l.n(), 2);
        assert_eq!(l.edges(), vec![(0, 1)]);
    }

    #[test]
    fn tournament_t5() {
        let t5 = gen(GraphFamily::Tournament(5));
        assert_eq!(t5.n(), 5);
        assert_eq!(t5.edge_count(), 10);
        assert!((0..5).all(|v| t5.out_degree(v) == 2));
        assert!(t5.is_oriented());
        assert!(matches!(
            generate(GraphFamily::Tournament(4)),
            Err(Error::InvalidFamily(_))
        ));
    }

    #[test]
    fn cycle_c3() {
        let c3 = gen(GraphFamily::Cycle(3));
        assert_eq!(c3.edges(), vec![(0, 1), (1, 2), (2, 0)]);
        // complement of the cyclic triangle is the reversed cyclic triangle
        let cc = c3.complement();
        assert_eq!(cc.edges(), vec![(0, 2), (1, 0), (2, 1)]);
        assert!(cc.is_isomorphic(&c3));
    }

    #[test]
    fn alt_cycle_degree_constraints() {
        let a5 = gen(GraphFamily::AltCycle5);
        let mut outdegs: Vec<usize> = (0..5).map(|v| a5.out_degree(v)).collect();
        assert_eq!(a5.out_row(3).to_vec(), vec![2]);
        outdegs.sort_unstable();
        assert_eq!(outdegs, vec![0, 0, 1, 2, 2]);
        // underlying graph is the 5-cycle in cyclic vertex order
        let sym = a5.symmetrize();
        let c5_sym = gen(GraphFamily::Cycle(5)).symmetrize();
        assert_eq!(sym, c5_sym);
    }

    #[test]
    fn complement_is_involution() {
        for g in [
            gen(GraphFamily::Tournament(5)),
            gen(GraphFamily::AltCycle5),
            gen(GraphFamily::Bollobas),
        ] {
            assert_eq!(g.complement().complement(), g);
            assert_eq!(g.reverse().reverse(), g);
            assert_eq!(g.reverse().edge_count(), g.edge_count());
        }
    }

    #[test]
    fn cycle_complement_matches() {
        for k in 3..=7 {
            assert_eq!(
                gen(GraphFamily::CycleComplement(k)),
                gen(GraphFamily::Cycle(k)).complement()
            );
        }
    }

    #[test]
    fn symmetrize_and_union() {
        let l = gen(GraphFamily::SingleEdge);
        let sym = l.symmetrize();
        assert_eq!(sym.edges(), vec![(0, 1), (1, 0)]);
        assert_eq!(l.union(&l.reverse()).unwrap(), sym);
        let c3 = gen(GraphFamily::Cycle(3));
        assert_eq!(c3.union(&c3).unwrap(), c3);
        assert_eq!(
            c3.union(&c3.reverse()).unwrap(),
            gen(GraphFamily::Complete(3))
        );
        assert!(l.union(&c3).is_err());
    }

    #[test]
    fn closure_of_two_edges_is_triangle() {
        // edges (a,c),(b,c): a and b collide at c
        let g = Digraph::from_edges(3, &[(0, 2), (1, 2)]).unwrap();
        assert_eq!(g.closure_graph(), gen(GraphFamily::Complete(3)));
        assert_eq!(Digraph::empty(3).closure_graph(), Digraph::empty(3));
        let k2 = gen(GraphFamily::Complete(2));
        assert_eq!(k2.closure_graph(), k2);
    }

    #[test]
    fn closure_contains_symmetrization() {
        let graphs = [
            gen(GraphFamily::Tournament(5)),
            gen(GraphFamily::AltCycle5),
            gen(GraphFamily::Bollobas),
            gen(GraphFamily::Cycle(6)),
        ];
        for g in graphs {
            let cl = g.closure_graph();
            assert!(cl.is_symmetric());
            let sym = g.symmetrize();
            for u in 0..g.n() {
                assert!(sym.out_row(u).is_subset(cl.out_row(u)));
            }
        }
    }

    #[test]
    fn gadget_small_cases() {
        let k2 = gen(GraphFamily::Complete(2));
        let gadget = k2.closure_gadget().unwrap();
        assert_eq!(gadget.n(), 3);
        assert_eq!(gadget.edges(), vec![(0, 2), (1, 2)]);

        let k3 = gen(GraphFamily::Complete(3));
        let gadget = k3.closure_gadget().unwrap();
        assert_eq!(gadget.n(), 6);
        assert_eq!(gadget.edge_count(), 6);
        let cl = gadget.closure_graph();
        assert_eq!(cl.induced(&[0, 1, 2]), k3);

        let path = Digraph::from_edges(3, &[(0, 1), (1, 0), (1, 2), (2, 1)]).unwrap();
        let cl = path.closure_gadget().unwrap().closure_graph();
        assert_eq!(cl.induced(&[0, 1, 2]), path);

        assert!(gen(GraphFamily::SingleEdge).closure_gadget().is_err());
    }

    #[test]
    fn acyclicity_checks() {
        let c3 = gen(GraphFamily::Cycle(3));
        assert!(!c3.is_acyclic());
        assert!(c3.is_acyclic_on(&BitSet::from_indices(3, &[0, 1])));
        let two_cycle = gen(GraphFamily::Complete(2));
        assert!(!two_cycle.is_acyclic());
        let order = c3.topo_order_on(&BitSet::from_indices(3, &[1, 2])).unwrap();
        assert_eq!(order, vec![1, 2]);
    }

    #[test]
    fn vertex_transitivity() {
        assert!(gen(GraphFamily::Cycle(5)).is_vertex_transitive().unwrap());
        assert!(gen(GraphFamily::Tournament(5)).is_vertex_transitive().unwrap());
        assert!(!gen(GraphFamily::AltCycle5).is_vertex_transitive().unwrap());
        let k13 = gen(GraphFamily::Complete(13));
        assert!(matches!(
            k13.is_vertex_transitive(),
            Err(Error::TransitivityLimit { .. })
        ));
        assert!(k13.is_vertex_transitive_with_limit(13).unwrap());
    }

    #[test]
    fn transitivity_invariant_under_reverse_and_complement() {
        for g in [
            gen(GraphFamily::Cycle(4)),
            gen(GraphFamily::AltCycle5),
            gen(GraphFamily::Tournament(7)),
            gen(GraphFamily::Bollobas),
        ] {
            let base = g.is_vertex_transitive().unwrap();
            assert_eq!(base, g.reverse().is_vertex_transitive().unwrap());
            assert_eq!(base, g.complement().is_vertex_transitive().unwrap());
        }
    }

    #[test]
    fn realizability_k23_rejected() {
        // K_{2,3}: parts {0,1} and {2,3,4}
        let mut edges = Vec::new();
        for a in 0..2 {
            for b in 2..5 {
                edges.push((a, b));
                edges.push((b, a));
            }
        }
        let k23 = Digraph::from_edges(5, &edges).unwrap();
        assert_eq!(is_closure_realizable(&k23), Realizability::No);
    }

    #[test]
    fn realizability_small_yes_cases() {
        let k3 = gen(GraphFamily::Complete(3));
        match is_closure_realizable(&k3) {
            Realizability::Yes(f) => assert_eq!(f.closure_graph(), k3),
            other => panic!("expected witness for K_3, got {other:?}"),
        }
        let empty = Digraph::empty(3);
        match is_closure_realizable(&empty) {
            Realizability::Yes(f) => assert_eq!(f.edge_count(), 0),
            other => panic!("expected empty witness, got {other:?}"),
        }
    }

    #[test]
    fn realizability_triangle_free_path_scales() {
        // 6-cycle: triangle-free, |E|=|V|; orienting it cyclically realizes it
        let c6 = gen(GraphFamily::Cycle(6)).symmetrize();
        match is_closure_realizable(&c6) {
            Realizability::Yes(f) => assert_eq!(f.closure_graph(), c6),
            other => panic!("expected witness for C_6, got {other:?}"),
        }
    }
}
