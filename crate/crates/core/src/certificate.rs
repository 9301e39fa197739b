//! Verifiable certificates for the exact parameters: proper colorings,
//! acyclic covers with per-class topological orders, and subset witnesses.
//!
//! Verification distinguishes structural rejection (malformed data: bad
//! indices, wrong lengths) from logical failure (a well-formed certificate
//! whose claim is false); the latter reports the first violation found.

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::io::graph_hash;

/// Vertex coloring; proper means no edge of the symmetrized graph joins two
/// vertices of equal color.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    /// Color index per vertex, each below `k`.
    pub colors: Vec<usize>,
    /// Palette size.
    pub k: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        let k = colors.iter().copied().max().map_or(0, |m| m + 1);
        Coloring { colors, k }
    }

    pub fn color_classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }

    /// Number of colors actually used.
    pub fn used(&self) -> usize {
        let mut seen = vec![false; self.k];
        for &c in &self.colors {
            seen[c] = true;
        }
        seen.into_iter().filter(|&b| b).count()
    }
}

/// Cover of the vertex set by acyclic classes. Each class is listed in a
/// topological order of its induced subgraph, which is the acyclicity
/// witness: no edge may point from a later position to an earlier one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AcyclicCover {
    pub classes: Vec<Vec<usize>>,
}

impl AcyclicCover {
    pub fn k(&self) -> usize {
        self.classes.len()
    }

    /// Index of the first class containing each vertex.
    pub fn class_of(&self, n: usize) -> Result<Vec<usize>> {
        let mut out = vec![usize::MAX; n];
        for (ci, class) in self.classes.iter().enumerate() {
            for &v in class {
                if v >= n {
                    return Err(Error::MalformedCertificate(format!(
                        "class {ci} lists vertex {v} but n={n}"
                    )));
                }
                if out[v] == usize::MAX {
                    out[v] = ci;
                }
            }
        }
        if let Some(v) = out.iter().position(|&c| c == usize::MAX) {
            return Err(Error::MalformedCertificate(format!(
                "vertex {v} is not covered by any class"
            )));
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubsetKind {
    Independent,
    SymmetricClique,
    TransitiveClique,
    Acyclic,
}

impl SubsetKind {
    pub fn name(self) -> &'static str {
        match self {
            SubsetKind::Independent => "independent",
            SubsetKind::SymmetricClique => "symmetric-clique",
            SubsetKind::TransitiveClique => "transitive-clique",
            SubsetKind::Acyclic => "acyclic",
        }
    }
}

/// Witness subset for one of the four subset parameters. `order` is required
/// for transitive cliques and optional for acyclic sets (without it the
/// verifier falls back to elimination).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetCertificate {
    pub kind: SubsetKind,
    pub vertices: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Coloring(Coloring),
    Cover(AcyclicCover),
    Subset(SubsetCertificate),
}

/// Outcome of a verification run on structurally sound input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Violation),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

/// First violation found, in checking order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub detail: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.detail)
    }
}

fn check_indices(n: usize, verts: &[usize], what: &str) -> Result<()> {
    for &v in verts {
        if v >= n {
            return Err(Error::MalformedCertificate(format!(
                "{what} lists vertex {v} but n={n}"
            )));
        }
    }
    let mut seen = vec![false; n];
    for &v in verts {
        if seen[v] {
            return Err(Error::MalformedCertificate(format!(
                "{what} lists vertex {v} twice"
            )));
        }
        seen[v] = true;
    }
    Ok(())
}

pub fn verify_coloring(g: &Digraph, coloring: &Coloring) -> Result<Verdict> {
    let n = g.n();
    if coloring.colors.len() != n {
        return Err(Error::MalformedCertificate(format!(
            "coloring has {} entries for n={n}",
            coloring.colors.len()
        )));
    }
    if let Some((v, &c)) = coloring
        .colors
        .iter()
        .enumerate()
        .find(|(_, &c)| c >= coloring.k)
    {
        return Err(Error::MalformedCertificate(format!(
            "vertex {v} has color {c} outside palette of size {}",
            coloring.k
        )));
    }
    for u in 0..n {
        for v in g.out_row(u).iter() {
            if coloring.colors[u] == coloring.colors[v] {
                return Ok(Verdict::Invalid(Violation {
                    detail: format!(
                        "edge ({u},{v}) joins two vertices of color {}",
                        coloring.colors[u]
                    ),
                }));
            }
        }
    }
    Ok(Verdict::Valid)
}

pub fn verify_cover(g: &Digraph, cover: &AcyclicCover) -> Result<Verdict> {
    let n = g.n();
    let mut covered = vec![false; n];
    for (ci, class) in cover.classes.iter().enumerate() {
        check_indices(n, class, &format!("class {ci}"))?;
        for &v in class {
            covered[v] = true;
        }
        // order witness: no edge from a later position to an earlier one
        for i in 0..class.len() {
            for j in i + 1..class.len() {
                if g.has_edge(class[j], class[i]) {
                    return Ok(Verdict::Invalid(Violation {
                        detail: format!(
                            "class {ci}: edge ({},{}) goes backward in the listed order",
                            class[j], class[i]
                        ),
                    }));
                }
            }
        }
    }
    if let Some(v) = covered.iter().position(|&b| !b) {
        return Ok(Verdict::Invalid(Violation {
            detail: format!("vertex {v} is not covered by any class"),
        }));
    }
    Ok(Verdict::Valid)
}

pub fn verify_subset(g: &Digraph, cert: &SubsetCertificate) -> Result<Verdict> {
    let n = g.n();
    check_indices(n, &cert.vertices, "subset")?;
    if let Some(order) = &cert.order {
        check_indices(n, order, "order")?;
        let mut a = cert.vertices.clone();
        let mut b = order.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Err(Error::MalformedCertificate(
                "order is not a permutation of the subset".into(),
            ));
        }
    }
    match cert.kind {
        SubsetKind::Independent => {
            for (i, &u) in cert.vertices.iter().enumerate() {
                for &v in &cert.vertices[i + 1..] {
                    if g.has_edge(u, v) || g.has_edge(v, u) {
                        return Ok(Verdict::Invalid(Violation {
                            detail: format!("vertices {u},{v} are adjacent"),
                        }));
                    }
                }
            }
        }
        SubsetKind::SymmetricClique => {
            for (i, &u) in cert.vertices.iter().enumerate() {
                for &v in &cert.vertices[i + 1..] {
                    if !(g.has_edge(u, v) && g.has_edge(v, u)) {
                        return Ok(Verdict::Invalid(Violation {
                            detail: format!("pair {u},{v} is not bidirected"),
                        }));
                    }
                }
            }
        }
        SubsetKind::TransitiveClique => {
            let order = cert.order.as_ref().ok_or_else(|| {
                Error::MalformedCertificate("transitive clique requires an order".into())
            })?;
            for i in 0..order.len() {
                for j in i + 1..order.len() {
                    if !g.has_edge(order[i], order[j]) {
                        return Ok(Verdict::Invalid(Violation {
                            detail: format!(
                                "forward pair ({},{}) is not an edge",
                                order[i], order[j]
                            ),
                        }));
                    }
                }
            }
        }
        SubsetKind::Acyclic => match &cert.order {
            Some(order) => {
                for i in 0..order.len() {
                    for j in i + 1..order.len() {
                        if g.has_edge(order[j], order[i]) {
                            return Ok(Verdict::Invalid(Violation {
                                detail: format!(
                                    "edge ({},{}) goes backward in the listed order",
                                    order[j], order[i]
                                ),
                            }));
                        }
                    }
                }
            }
            None => {
                let set = crate::bits::BitSet::from_indices(n, &cert.vertices);
                if !g.is_acyclic_on(&set) {
                    return Ok(Verdict::Invalid(Violation {
                        detail: "subset induces a directed cycle".into(),
                    }));
                }
            }
        },
    }
    Ok(Verdict::Valid)
}

/// Dispatch over the three certificate shapes.
pub fn verify_certificate(g: &Digraph, cert: &Certificate) -> Result<Verdict> {
    match cert {
        Certificate::Coloring(c) => verify_coloring(g, c),
        Certificate::Cover(c) => verify_cover(g, c),
        Certificate::Subset(c) => verify_subset(g, c),
    }
}

/// On-disk certificate: binds a claim to its graph by hash.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateEnvelope {
    pub kind: String,
    pub graph_hash: String,
    pub value: usize,
    pub witness: serde_json::Value,
    pub optimal: bool,
}

impl CertificateEnvelope {
    pub fn new(g: &Digraph, kind: &str, value: usize, cert: &Certificate, optimal: bool) -> Self {
        let witness = match cert {
            Certificate::Coloring(c) => serde_json::to_value(c),
            Certificate::Cover(c) => serde_json::to_value(c),
            Certificate::Subset(c) => serde_json::to_value(c),
        }
        .expect("certificate serialization cannot fail");
        CertificateEnvelope {
            kind: kind.to_string(),
            graph_hash: graph_hash(g),
            value,
            witness,
            optimal,
        }
    }

    pub fn decode_witness(&self) -> Result<Certificate> {
        let val = self.witness.clone();
        match self.kind.as_str() {
            "coloring" => Ok(Certificate::Coloring(serde_json::from_value(val)?)),
            "acyclic-cover" | "dicoloring" => Ok(Certificate::Cover(serde_json::from_value(val)?)),
            "independent" | "symmetric-clique" | "transitive-clique" | "acyclic" => {
                Ok(Certificate::Subset(serde_json::from_value(val)?))
            }
            other => Err(Error::MalformedCertificate(format!(
                "unknown certificate kind {other:?}"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{generate, GraphFamily};

    #[test]
    fn coloring_verification() {
        let k2 = generate(GraphFamily::Complete(2)).unwrap();
        let bad = Coloring::new(vec![0, 0]);
        match verify_coloring(&k2, &bad).unwrap() {
            Verdict::Invalid(v) => assert!(v.detail.contains("(0,1)")),
            Verdict::Valid => panic!("monochrome K_2 must fail"),
        }
        let good = Coloring::new(vec![0, 1]);
        assert!(verify_coloring(&k2, &good).unwrap().is_valid());
        // properness refers to the symmetrized graph
        let l = generate(GraphFamily::SingleEdge).unwrap();
        assert!(!verify_coloring(&l, &bad).unwrap().is_valid());
        assert!(verify_coloring(&l, &Coloring { colors: vec![0, 5], k: 6 }).unwrap().is_valid());
        assert!(verify_coloring(&l, &Coloring { colors: vec![0], k: 1 }).is_err());
        assert!(verify_coloring(&l, &Coloring { colors: vec![0, 3], k: 2 }).is_err());
    }

    #[test]
    fn cover_verification() {
        let c3 = generate(GraphFamily::Cycle(3)).unwrap();
        let cover = AcyclicCover {
            classes: vec![vec![0, 1], vec![2]],
        };
        assert!(verify_cover(&c3, &cover).unwrap().is_valid());
        // listing {0,1} as (1,0) puts edge (0,1) backward
        let bad = AcyclicCover {
            classes: vec![vec![1, 0], vec![2]],
        };
        assert!(!verify_cover(&c3, &bad).unwrap().is_valid());
        // singletons always verify
        let singles = AcyclicCover {
            classes: (0..3).map(|v| vec![v]).collect(),
        };
        assert!(verify_cover(&c3, &singles).unwrap().is_valid());
        let missing = AcyclicCover {
            classes: vec![vec![0, 1]],
        };
        assert!(!verify_cover(&c3, &missing).unwrap().is_valid());
        let oob = AcyclicCover {
            classes: vec![vec![0, 7]],
        };
        assert!(verify_cover(&c3, &oob).is_err());
    }

    #[test]
    fn subset_verification() {
        let t5 = generate(GraphFamily::Tournament(5)).unwrap();
        let tc = SubsetCertificate {
            kind: SubsetKind::TransitiveClique,
            vertices: vec![0, 1, 2],
            order: Some(vec![0, 1, 2]),
        };
        assert!(verify_subset(&t5, &tc).unwrap().is_valid());
        let tc_missing_order = SubsetCertificate {
            kind: SubsetKind::TransitiveClique,
            vertices: vec![0, 1, 2],
            order: None,
        };
        assert!(verify_subset(&t5, &tc_missing_order).is_err());
        let acyc = SubsetCertificate {
            kind: SubsetKind::Acyclic,
            vertices: vec![0, 1, 2],
            order: None,
        };
        assert!(verify_subset(&t5, &acyc).unwrap().is_valid());
        let whole = SubsetCertificate {
            kind: SubsetKind::Acyclic,
            vertices: (0..5).collect(),
            order: None,
        };
        assert!(!verify_subset(&t5, &whole).unwrap().is_valid());
        let sym = SubsetCertificate {
            kind: SubsetKind::SymmetricClique,
            vertices: vec![0, 1],
            order: None,
        };
        assert!(!verify_subset(&t5, &sym).unwrap().is_valid());
    }

    #[test]
    fn envelope_round_trip() {
        let g = generate(GraphFamily::Bollobas).unwrap();
        let cert = Certificate::Subset(SubsetCertificate {
            kind: SubsetKind::SymmetricClique,
            vertices: vec![0, 1],
            order: None,
        });
        let env = CertificateEnvelope::new(&g, "symmetric-clique", 2, &cert, true);
        let text = serde_json::to_string(&env).unwrap();
        let back: CertificateEnvelope = serde_json::from_str(&text).unwrap();
        assert_eq!(back.decode_witness().unwrap(), cert);
        assert_eq!(back.graph_hash, graph_hash(&g));
    }
}
