//! AND and OR products and powers of digraphs, the mixed-radix codec naming
//! power vertices, exact-type class subgraphs, and compound-family unions.

use crate::bits::BitSet;
use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Default materialization threshold for power graphs.
pub const DEFAULT_POWER_VERTEX_LIMIT: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerOp {
    And,
    Or,
}

impl PowerOp {
    pub fn name(self) -> &'static str {
        match self {
            PowerOp::And => "and",
            PowerOp::Or => "or",
        }
    }
}

/// Mixed-radix codec between sequences over `[0, base)^len` and integers in
/// `[0, base^len)`, with the first coordinate most significant. The layout is
/// fixed: certificate files name power vertices through it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowerIndex {
    pub base: usize,
    pub len: usize,
}

impl PowerIndex {
    pub fn new(base: usize, len: usize) -> Self {
        PowerIndex { base, len }
    }

    /// `base^len`, or `None` on overflow past `usize`.
    pub fn total(&self) -> Option<usize> {
        let mut acc: usize = 1;
        for _ in 0..self.len {
            acc = acc.checked_mul(self.base)?;
        }
        Some(acc)
    }

    pub fn encode(&self, seq: &[usize]) -> usize {
        debug_assert_eq!(seq.len(), self.len);
        let mut idx = 0;
        for &a in seq {
            debug_assert!(a < self.base);
            idx = idx * self.base + a;
        }
        idx
    }

    pub fn decode(&self, mut idx: usize) -> Vec<usize> {
        let mut seq = vec![0; self.len];
        for slot in seq.iter_mut().rev() {
            *slot = idx % self.base;
            idx /= self.base;
        }
        debug_assert_eq!(idx, 0);
        seq
    }
}

#[inline]
fn and_pair_edge(f: &Digraph, g: &Digraph, a: (usize, usize), b: (usize, usize)) -> bool {
    if a == b {
        return false;
    }
    (a.0 == b.0 || f.has_edge(a.0, b.0)) && (a.1 == b.1 || g.has_edge(a.1, b.1))
}

#[inline]
fn or_pair_edge(f: &Digraph, g: &Digraph, a: (usize, usize), b: (usize, usize)) -> bool {
    a != b && (f.has_edge(a.0, b.0) || g.has_edge(a.1, b.1))
}

fn product_capped(
    f: &Digraph,
    g: &Digraph,
    op: PowerOp,
    cap: usize,
) -> Result<Digraph> {
    let required = f
        .n()
        .checked_mul(g.n())
        .ok_or(Error::TooLarge { required: usize::MAX, limit: cap })?;
    if required > cap {
        return Err(Error::TooLarge { required, limit: cap });
    }
    let ng = g.n();
    let mut prod = Digraph::empty(required);
    for a0 in 0..f.n() {
        for a1 in 0..ng {
            let a = a0 * ng + a1;
            for b0 in 0..f.n() {
                for b1 in 0..ng {
                    let edge = match op {
                        PowerOp::And => and_pair_edge(f, g, (a0, a1), (b0, b1)),
                        PowerOp::Or => or_pair_edge(f, g, (a0, a1), (b0, b1)),
                    };
                    if edge {
                        prod.add_edge(a, b0 * ng + b1);
                    }
                }
            }
        }
    }
    Ok(prod)
}

/// AND product: a coordinate pair may advance along an edge or stay fixed,
/// with at least one advancing.
pub fn and_product(f: &Digraph, g: &Digraph) -> Result<Digraph> {
    and_product_capped(f, g, DEFAULT_POWER_VERTEX_LIMIT)
}

pub fn and_product_capped(f: &Digraph, g: &Digraph, cap: usize) -> Result<Digraph> {
    product_capped(f, g, PowerOp::And, cap)
}

/// OR product: an edge as soon as one coordinate pair is an edge.
pub fn or_product(f: &Digraph, g: &Digraph) -> Result<Digraph> {
    or_product_capped(f, g, DEFAULT_POWER_VERTEX_LIMIT)
}

pub fn or_product_capped(f: &Digraph, g: &Digraph, cap: usize) -> Result<Digraph> {
    product_capped(f, g, PowerOp::Or, cap)
}

pub fn and_power(g: &Digraph, t: usize) -> Result<Digraph> {
    power_capped(g, t, PowerOp::And, DEFAULT_POWER_VERTEX_LIMIT)
}

pub fn or_power(g: &Digraph, t: usize) -> Result<Digraph> {
    power_capped(g, t, PowerOp::Or, DEFAULT_POWER_VERTEX_LIMIT)
}

/// t-fold self-product; vertex `i` encodes its sequence via [`PowerIndex`]
/// (iterated row-major products agree with that codec).
pub fn power_capped(g: &Digraph, t: usize, op: PowerOp, cap: usize) -> Result<Digraph> {
    let required = PowerIndex::new(g.n(), t)
        .total()
        .ok_or(Error::TooLarge { required: usize::MAX, limit: cap })?;
    if required > cap {
        return Err(Error::TooLarge { required, limit: cap });
    }
    if t == 0 {
        return Ok(Digraph::empty(1));
    }
    let mut acc = g.clone();
    for _ in 1..t {
        acc = product_capped(&acc, g, op, cap)?;
    }
    Ok(acc)
}

/// Pairwise adjacency oracle for a power graph, available at any size.
#[derive(Clone, Copy)]
pub struct PowerOracle<'a> {
    base: &'a Digraph,
    t: usize,
    op: PowerOp,
    codec: PowerIndex,
}

impl<'a> PowerOracle<'a> {
    pub fn new(base: &'a Digraph, t: usize, op: PowerOp) -> Self {
        PowerOracle {
            base,
            t,
            op,
            codec: PowerIndex::new(base.n(), t),
        }
    }

    pub fn codec(&self) -> PowerIndex {
        self.codec
    }

    pub fn has_edge_seq(&self, x: &[usize], y: &[usize]) -> bool {
        debug_assert!(x.len() == self.t && y.len() == self.t);
        if x == y {
            return false;
        }
        match self.op {
            PowerOp::And => x
                .iter()
                .zip(y)
                .all(|(&a, &b)| a == b || self.base.has_edge(a, b)),
            PowerOp::Or => x
                .iter()
                .zip(y)
                .any(|(&a, &b)| self.base.has_edge(a, b)),
        }
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.has_edge_seq(&self.codec.decode(x), &self.codec.decode(y))
    }
}

/// Per-letter occurrence counts of a sequence; the exact type (epsilon = 0).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TypeVector {
    pub counts: Vec<usize>,
}

impl TypeVector {
    pub fn new(counts: Vec<usize>) -> Self {
        TypeVector { counts }
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn of_sequence(base_n: usize, seq: &[usize]) -> Self {
        let mut counts = vec![0; base_n];
        for &a in seq {
            counts[a] += 1;
        }
        TypeVector { counts }
    }

    /// Number of sequences with this type.
    pub fn multinomial(&self) -> u128 {
        let mut acc: u128 = 1;
        let mut placed = 0usize;
        for &c in &self.counts {
            for i in 0..c {
                acc = acc * (placed + i + 1) as u128 / (i + 1) as u128;
            }
            placed += c;
        }
        acc
    }

    /// All type vectors over `base_n` letters with the given total, in
    /// lexicographic order of their count vectors.
    pub fn enumerate(base_n: usize, total: usize) -> Vec<TypeVector> {
        let mut out = Vec::new();
        let mut counts = vec![0; base_n];
        fn rec(counts: &mut Vec<usize>, pos: usize, left: usize, out: &mut Vec<TypeVector>) {
            if pos + 1 == counts.len() {
                counts[pos] = left;
                out.push(TypeVector::new(counts.clone()));
                return;
            }
            for c in 0..=left {
                counts[pos] = c;
                rec(counts, pos + 1, left - c, out);
            }
        }
        if base_n == 0 {
            return out;
        }
        rec(&mut counts, 0, total, &mut out);
        out
    }
}

/// Power-vertex indices of all sequences with exact type `tv`, in
/// lexicographic sequence order.
pub fn type_class_vertices(base_n: usize, t: usize, tv: &TypeVector) -> Result<Vec<usize>> {
    if tv.counts.len() != base_n {
        return Err(Error::InvalidTypeVector(format!(
            "type vector has {} entries for a {base_n}-vertex base",
            tv.counts.len()
        )));
    }
    if tv.total() != t {
        return Err(Error::InvalidTypeVector(format!(
            "counts sum to {} but t={t}",
            tv.total()
        )));
    }
    let codec = PowerIndex::new(base_n, t);
    let mut out = Vec::new();
    let mut remaining = tv.counts.clone();
    let mut seq = Vec::with_capacity(t);
    fn rec(
        codec: &PowerIndex,
        remaining: &mut [usize],
        seq: &mut Vec<usize>,
        t: usize,
        out: &mut Vec<usize>,
    ) {
        if seq.len() == t {
            out.push(codec.encode(seq));
            return;
        }
        for a in 0..remaining.len() {
            if remaining[a] > 0 {
                remaining[a] -= 1;
                seq.push(a);
                rec(codec, remaining, seq, t, out);
                seq.pop();
                remaining[a] += 1;
            }
        }
    }
    rec(&codec, &mut remaining, &mut seq, t, &mut out);
    Ok(out)
}

/// Subgraph of the t-th AND power induced on the sequences of exact type
/// `tv`, together with the power-vertex indices of its vertices.
pub fn type_class_subgraph(g: &Digraph, t: usize, tv: &TypeVector) -> Result<(Digraph, Vec<usize>)> {
    let verts = type_class_vertices(g.n(), t, tv)?;
    let oracle = PowerOracle::new(g, t, PowerOp::And);
    let seqs: Vec<Vec<usize>> = verts.iter().map(|&v| oracle.codec().decode(v)).collect();
    let mut sub = Digraph::empty(verts.len());
    for i in 0..seqs.len() {
        for j in 0..seqs.len() {
            if i != j && oracle.has_edge_seq(&seqs[i], &seqs[j]) {
                sub.add_edge(i, j);
            }
        }
    }
    Ok((sub, verts))
}

/// Union of the t-th AND powers of a family on a common vertex set (not the
/// power of the union).
pub fn compound_union_power(family: &[Digraph], t: usize) -> Result<Digraph> {
    compound_union_power_capped(family, t, DEFAULT_POWER_VERTEX_LIMIT)
}

pub fn compound_union_power_capped(family: &[Digraph], t: usize, cap: usize) -> Result<Digraph> {
    let mut iter = family.iter();
    let first = iter
        .next()
        .ok_or_else(|| Error::InvalidFamily("compound family must be non-empty".into()))?;
    let mut acc = power_capped(first, t, PowerOp::And, cap)?;
    for g in iter {
        if g.n() != first.n() {
            return Err(Error::MismatchedVertexCount {
                left: first.n(),
                right: g.n(),
            });
        }
        acc = acc.union(&power_capped(g, t, PowerOp::And, cap)?)?;
    }
    Ok(acc)
}

/// Out-closure of a power vertex factorizes over coordinates:
/// `|{y : y = x or x->y}| = prod_i (1 + outdeg(x_i))`.
pub fn out_closure_size(g: &Digraph, seq: &[usize]) -> u128 {
    seq.iter()
        .map(|&a| (1 + g.out_degree(a)) as u128)
        .product()
}

/// Out-closure of a single letter: the letter and its out-neighbors.
pub fn letter_closure(g: &Digraph, a: usize) -> BitSet {
    let mut s = g.out_row(a).clone();
    s.insert(a);
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{generate, GraphFamily};

    fn gen(f: GraphFamily) -> Digraph {
        generate(f).unwrap()
    }

    #[test]
    fn codec_round_trip() {
        let codec = PowerIndex::new(3, 4);
        assert_eq!(codec.total(), Some(81));
        for idx in 0..81 {
            let seq = codec.decode(idx);
            assert_eq!(codec.encode(&seq), idx);
        }
        assert_eq!(codec.encode(&[1, 0, 2, 2]), 1 * 27 + 0 * 9 + 2 * 3 + 2);
    }

    #[test]
    fn and_square_of_single_edge() {
        let l = gen(GraphFamily::SingleEdge);
        let p = and_product(&l, &l).unwrap();
        assert_eq!(p.n(), 4);
        // 00 -> {01,10,11}, 01 -> 11, 10 -> 11
        assert_eq!(p.edges(), vec![(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]);
        assert_eq!(and_power(&l, 2).unwrap(), p);
        assert_eq!(and_power(&l, 1).unwrap(), l);
    }

    #[test]
    fn and_power_of_empty_factors() {
        let e2 = gen(GraphFamily::Empty(2));
        let p = and_product(&e2, &e2).unwrap();
        assert_eq!(p.n(), 4);
        assert_eq!(p.edge_count(), 0);
    }

    #[test]
    fn identity_factor_is_isomorphic() {
        let c3 = gen(GraphFamily::Cycle(3));
        let k1 = gen(GraphFamily::Empty(1));
        let p = and_product(&c3, &k1).unwrap();
        assert!(p.is_isomorphic(&c3));
    }

    #[test]
    fn or_square_of_single_edge() {
        let l = gen(GraphFamily::SingleEdge);
        let p = or_product(&l, &l).unwrap();
        assert!(p.has_edge(0b00, 0b01));
        assert!(!p.has_edge(0b01, 0b00));
        let k1 = gen(GraphFamily::Empty(1));
        let o = or_product(&k1, &k1).unwrap();
        assert_eq!((o.n(), o.edge_count()), (1, 0));
    }

    #[test]
    fn complement_power_duality_on_c3() {
        let c3 = gen(GraphFamily::Cycle(3));
        let lhs = or_product(&c3, &c3).unwrap().complement();
        let rhs = and_product(&c3.complement(), &c3.complement()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn alt_cycle_complement_square_size() {
        let a5c = gen(GraphFamily::AltCycle5Complement);
        let sq = and_power(&a5c, 2).unwrap();
        assert_eq!(sq.n(), 25);
    }

    #[test]
    fn size_cap_enforced() {
        let c3 = gen(GraphFamily::Cycle(3));
        match power_capped(&c3, 4, PowerOp::And, 80) {
            Err(Error::TooLarge { required, limit }) => {
                assert_eq!((required, limit), (81, 80));
            }
            other => panic!("expected TooLarge, got {other:?}"),
        }
    }

    #[test]
    fn oracle_matches_materialized() {
        let a5c = gen(GraphFamily::AltCycle5Complement);
        let sq = and_power(&a5c, 2).unwrap();
        let oracle = PowerOracle::new(&a5c, 2, PowerOp::And);
        for x in 0..25 {
            for y in 0..25 {
                assert_eq!(sq.has_edge(x, y), oracle.has_edge(x, y));
            }
        }
    }

    #[test]
    fn type_classes_partition_power() {
        for (g, t) in [(gen(GraphFamily::Cycle(3)), 3), (gen(GraphFamily::SingleEdge), 4)] {
            let total: u128 = TypeVector::enumerate(g.n(), t)
                .iter()
                .map(|tv| tv.multinomial())
                .sum();
            assert_eq!(total, (g.n() as u128).pow(t as u32));
        }
    }

    #[test]
    fn type_class_of_permutations() {
        let c3 = gen(GraphFamily::Cycle(3));
        let tv = TypeVector::new(vec![1, 1, 1]);
        let (sub, verts) = type_class_subgraph(&c3, 3, &tv).unwrap();
        assert_eq!(verts.len(), 6);
        assert_eq!(tv.multinomial(), 6);
        assert!(sub.is_vertex_transitive().unwrap());

        let l = gen(GraphFamily::SingleEdge);
        let (sub, verts) = type_class_subgraph(&l, 4, &TypeVector::new(vec![2, 2])).unwrap();
        assert_eq!(verts.len(), 6);
        assert_eq!(sub.n(), 6);
    }

    #[test]
    fn type_vector_validation() {
        let c3 = gen(GraphFamily::Cycle(3));
        assert!(type_class_subgraph(&c3, 3, &TypeVector::new(vec![1, 1])).is_err());
        assert!(type_class_subgraph(&c3, 3, &TypeVector::new(vec![1, 1, 2])).is_err());
    }

    #[test]
    fn compound_union_basics() {
        let l = gen(GraphFamily::SingleEdge);
        let family = vec![l.clone(), l.reverse()];
        let u1 = compound_union_power(&family, 1).unwrap();
        assert_eq!(u1, gen(GraphFamily::Complete(2)));
        let single = compound_union_power(&[l.clone()], 3).unwrap();
        assert_eq!(single, and_power(&l, 3).unwrap());
        // t=2: comparability digraph of the 2-cube
        let u2 = compound_union_power(&family, 2).unwrap();
        let codec = PowerIndex::new(2, 2);
        for x in 0..4 {
            for y in 0..4 {
                let xs = codec.decode(x);
                let ys = codec.decode(y);
                let le = xs.iter().zip(&ys).all(|(a, b)| a <= b);
                let ge = xs.iter().zip(&ys).all(|(a, b)| a >= b);
                let comparable = x != y && (le || ge);
                assert_eq!(u2.has_edge(x, y), comparable, "pair {xs:?} {ys:?}");
            }
        }
    }

    #[test]
    fn out_closure_factorizes() {
        let t5 = gen(GraphFamily::Tournament(5));
        let p = and_power(&t5, 2).unwrap();
        let codec = PowerIndex::new(5, 2);
        for x in 0..25 {
            let seq = codec.decode(x);
            let closure = 1 + p.out_degree(x) as u128;
            assert_eq!(closure, out_closure_size(&t5, &seq));
        }
    }
}
