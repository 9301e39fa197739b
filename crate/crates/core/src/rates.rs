//! Bound sandwiches for the Dilworth rate: capacity-style lower bounds
//! through the complement (Alon's degree bound, cited constants for 5-cycle
//! orientations, symmetric cliques) against fractional-dichromatic and per-t
//! power upper bounds, with exact pinning when the two sides meet.
//!
//! Everything comparable is compared exactly: bounds live under the log as
//! `RootRational` values, and the logarithm is applied only for display.

use serde::Serialize;

use crate::digraph::{generate, Digraph, GraphFamily};
use crate::error::{Error, Result};
use crate::io::graph_hash;
use crate::lp::{fractional_chromatic, fractional_dichromatic};
use crate::params::{
    acyclicity_number, chromatic_number, dichromatic_number, independence_number,
    symmetric_clique_number, transitive_clique_number, Budget,
};
use crate::power::{and_power, compound_union_power, type_class_subgraph, TypeVector};
use crate::ratio::{
    format_ratio, log2_ratio, pow_ratio, rat_int, ratio_to_f64, Rational, RootRational,
};

/// Exact probability distribution on the vertices of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distribution {
    probs: Vec<Rational>,
}

impl Distribution {
    pub fn new(probs: Vec<Rational>) -> Result<Self> {
        use num::{One, Signed};
        if probs.iter().any(|p| p.is_negative()) {
            return Err(Error::InvalidDistribution("negative probability".into()));
        }
        let total: Rational = probs.iter().cloned().sum();
        if total != Rational::one() {
            return Err(Error::InvalidDistribution(format!(
                "probabilities sum to {}",
                format_ratio(&total)
            )));
        }
        Ok(Distribution { probs })
    }

    pub fn uniform(n: usize) -> Self {
        use num::BigInt;
        Distribution {
            probs: vec![Rational::new(BigInt::from(1), BigInt::from(n as u64)); n],
        }
    }

    /// Empirical distribution `counts / t` of a type vector.
    pub fn of_type(tv: &TypeVector) -> Result<Self> {
        use num::BigInt;
        let t = tv.total();
        if t == 0 {
            return Err(Error::InvalidDistribution("empty type".into()));
        }
        Distribution::new(
            tv.counts
                .iter()
                .map(|&c| Rational::new(BigInt::from(c as u64), BigInt::from(t as u64)))
                .collect(),
        )
    }

    pub fn probs(&self) -> &[Rational] {
        &self.probs
    }
}

/// Base-2 entropy; zero-probability terms contribute nothing.
pub fn entropy(p: &Distribution) -> f64 {
    use num::Zero;
    p.probs
        .iter()
        .filter(|q| !q.is_zero())
        .map(|q| {
            let x = ratio_to_f64(q);
            -x * log2_ratio(q)
        })
        .sum()
}

/// Alon's degree bound on Sperner capacity: `log2(min(max outdegree, max
/// indegree) + 1)`, returned with the integer under the log.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlonBound {
    pub argument: usize,
    pub log2: f64,
}

pub fn alon_sperner_upper(g: &Digraph) -> AlonBound {
    let argument = g.max_out_degree().min(g.max_in_degree()) + 1;
    AlonBound {
        argument,
        log2: (argument as f64).log2(),
    }
}

/// Bracket on a capacity-like quantity; endpoints are exact under the log.
#[derive(Debug, Clone)]
pub struct CapacityBracket {
    pub lower: RootRational,
    pub upper: RootRational,
    pub lower_optimal: bool,
    pub tight: bool,
}

impl CapacityBracket {
    fn new(lower: RootRational, upper: RootRational, lower_optimal: bool) -> Self {
        let tight = lower_optimal && lower.cmp_exact(&upper).is_eq();
        CapacityBracket {
            lower,
            upper,
            lower_optimal,
            tight,
        }
    }

    pub fn lower_log2(&self) -> f64 {
        self.lower.log2()
    }

    pub fn upper_log2(&self) -> f64 {
        self.upper.log2()
    }
}

/// Bracket on the Sperner capacity: transitive clique below, Alon above.
pub fn sperner_capacity_bounds(g: &Digraph, budget: Budget) -> CapacityBracket {
    let tr = transitive_clique_number(g, budget);
    let alon = alon_sperner_upper(g);
    CapacityBracket::new(
        RootRational::integer(tr.value.max(1)),
        RootRational::integer(alon.argument),
        tr.optimal,
    )
}

/// Bracket on `Gamma(G)` (capacity of the complement): acyclicity number
/// below, Alon's bound on the complement above.
pub fn gamma_bounds(g: &Digraph, budget: Budget) -> CapacityBracket {
    let a = acyclicity_number(g, budget);
    let alon = alon_sperner_upper(&g.complement());
    CapacityBracket::new(
        RootRational::integer(a.value.max(1)),
        RootRational::integer(alon.argument),
        a.optimal,
    )
}

/// Sperner capacities established in the literature for orientations of the
/// 5-cycle: `sqrt 5` for the alternating orientation, `2` for every other.
/// These enter bound reports tagged `cited`, never computed.
pub fn cited_sperner_capacity(g: &Digraph) -> Option<(RootRational, &'static str)> {
    if g.n() != 5 || g.edge_count() != 5 || !g.is_oriented() {
        return None;
    }
    let sym = g.symmetrize();
    if (0..5).any(|v| sym.out_degree(v) != 2) {
        return None;
    }
    // degree-2 on 5 vertices is a single 5-cycle iff connected
    let mut seen = vec![false; 5];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for w in sym.out_row(v).iter() {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    if seen.iter().any(|&s| !s) {
        return None;
    }
    let alt = generate(GraphFamily::AltCycle5).expect("fixed generator");
    if g.is_isomorphic(&alt) {
        Some((
            RootRational::new(rat_int(5), 2),
            "capacity of the alternating 5-cycle orientation",
        ))
    } else {
        Some((
            RootRational::integer(2),
            "capacity of a non-alternating 5-cycle orientation",
        ))
    }
}

/// One bound on the non-logarithmic Dilworth rate, with provenance.
#[derive(Debug, Clone)]
pub struct BoundEntry {
    pub provenance: String,
    /// Value under the log; `None` when only a float is available.
    pub exact: Option<RootRational>,
    pub log2: f64,
    /// Whether the producing computation completed exactly.
    pub optimal: bool,
}

impl BoundEntry {
    fn exact_entry(provenance: &str, value: RootRational, optimal: bool) -> Self {
        BoundEntry {
            provenance: provenance.to_string(),
            log2: value.log2(),
            exact: Some(value),
            optimal,
        }
    }
}

/// Solver status cell: `lower == upper` means exact.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SolveCell {
    pub lower: usize,
    pub upper: usize,
    pub optimal: bool,
}

/// One row of the per-t table of a bound report.
#[derive(Debug, Clone)]
pub struct PerTRow {
    pub t: usize,
    pub vertices: usize,
    pub chi: SolveCell,
    pub chi_dir: SolveCell,
    pub chi_dir_f: Option<Rational>,
    pub root_chi: Option<RootRational>,
    pub root_chi_dir: Option<RootRational>,
    pub root_chi_dir_f: Option<RootRational>,
}

/// Exactly pinned rate value with the bound pair that closed it.
#[derive(Debug, Clone)]
pub struct PinnedValue {
    pub exact: RootRational,
    pub log2: f64,
    pub justification: String,
}

/// Sandwich of lower and upper bounds on the Dilworth rate of one graph.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub graph_hash: String,
    pub n: usize,
    pub lower_bounds: Vec<BoundEntry>,
    pub upper_bounds: Vec<BoundEntry>,
    pub per_t: Vec<PerTRow>,
    pub pinned: Option<PinnedValue>,
}

impl BoundReport {
    pub fn best_lower(&self) -> Option<&BoundEntry> {
        self.lower_bounds
            .iter()
            .filter(|e| e.optimal && e.exact.is_some())
            .max_by(|a, b| a.exact.as_ref().unwrap().cmp_exact(b.exact.as_ref().unwrap()))
    }

    pub fn best_upper(&self) -> Option<&BoundEntry> {
        self.upper_bounds
            .iter()
            .filter(|e| e.optimal && e.exact.is_some())
            .min_by(|a, b| a.exact.as_ref().unwrap().cmp_exact(b.exact.as_ref().unwrap()))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entry = |e: &BoundEntry| {
            serde_json::json!({
                "provenance": e.provenance,
                "exact": e.exact.as_ref().map(|r| r.format()),
                "log2": e.log2,
                "approx": true,
                "optimal": e.optimal,
            })
        };
        let cell = |c: &SolveCell| {
            serde_json::json!({
                "lower": c.lower,
                "upper": c.upper,
                "status": if c.optimal { "optimal" } else { "bracket" },
            })
        };
        serde_json::json!({
            "graph_hash": self.graph_hash,
            "n": self.n,
            "lower_bounds": self.lower_bounds.iter().map(entry).collect::<Vec<_>>(),
            "upper_bounds": self.upper_bounds.iter().map(entry).collect::<Vec<_>>(),
            "per_t": self.per_t.iter().map(|row| serde_json::json!({
                "t": row.t,
                "vertices": row.vertices,
                "chi": cell(&row.chi),
                "chi_dir": cell(&row.chi_dir),
                "chi_dir_f": row.chi_dir_f.as_ref().map(format_ratio),
                "root_chi_log2": row.root_chi.as_ref().map(|r| r.log2()),
                "root_chi_dir_log2": row.root_chi_dir.as_ref().map(|r| r.log2()),
                "root_chi_dir_f_log2": row.root_chi_dir_f.as_ref().map(|r| r.log2()),
            })).collect::<Vec<_>>(),
            "pinned": self.pinned.as_ref().map(|p| serde_json::json!({
                "exact": p.exact.format(),
                "log2": p.log2,
                "approx": true,
                "justification": p.justification,
            })),
        })
    }

    /// CSV of the per-t table, one row per t.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "t,chi,chi_status,chidir,chidir_status,chidirf_exact,root_chi,root_chidir,root_chidirf\n",
        );
        for row in &self.per_t {
            let status = |c: &SolveCell| if c.optimal { "optimal" } else { "bracket" };
            let root = |r: &Option<RootRational>| {
                r.as_ref().map_or(String::new(), |v| format!("{:.6}", v.log2()))
            };
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                row.t,
                row.chi.upper,
                status(&row.chi),
                row.chi_dir.upper,
                status(&row.chi_dir),
                row.chi_dir_f.as_ref().map_or(String::new(), format_ratio),
                root(&row.root_chi),
                root(&row.root_chi_dir),
                root(&row.root_chi_dir_f),
            ));
        }
        out
    }
}

/// Assembles the bound sandwich for one digraph with per-t power diagnostics
/// up to `t_max`. Each table cell gets its own `per_cell_secs` budget; an
/// exhausted budget marks the cell as a bracket, never fabricates.
pub fn dilworth_bounds(g: &Digraph, t_max: usize, per_cell_secs: f64) -> Result<BoundReport> {
    let n = g.n();
    let cell = || Budget::seconds(per_cell_secs);
    let mut lower_bounds = Vec::new();
    let mut upper_bounds = Vec::new();

    // lower bounds: rate >= log n - Gamma(G), with Gamma(G) the capacity of
    // the complement, bounded above by Alon's degree bound or a cited value
    let complement = g.complement();
    let alon = alon_sperner_upper(&complement);
    lower_bounds.push(BoundEntry::exact_entry(
        "gamma-alon: log2 n minus Alon degree bound on the complement",
        RootRational::new(rat_int(n) / rat_int(alon.argument), 1),
        true,
    ));
    if let Some((capacity, provenance)) = cited_sperner_capacity(&complement) {
        // rate >= n / capacity, carried exactly under the root
        let base = pow_ratio(&rat_int(n), capacity.root) / capacity.base.clone();
        lower_bounds.push(BoundEntry::exact_entry(
            &format!("gamma-cited: log2 n minus {provenance}"),
            RootRational::new(base, capacity.root),
            true,
        ));
    }
    let omega_s = symmetric_clique_number(g, cell());
    lower_bounds.push(BoundEntry::exact_entry(
        "symmetric-clique: an s-clique forces chi of the t-th power above s^t",
        RootRational::integer(omega_s.value.max(1)),
        omega_s.optimal,
    ));

    // upper bounds: fractional dichromatic number, then per-t roots
    match fractional_dichromatic(g) {
        Ok((_, sol)) => {
            upper_bounds.push(BoundEntry::exact_entry(
                "fractional-dichromatic",
                RootRational::of(sol.value.clone()),
                true,
            ));
        }
        Err(Error::EnumerationOverflow { .. }) => {}
        Err(e) => return Err(e),
    }

    let mut per_t = Vec::new();
    for t in 1..=t_max {
        let power = match and_power(g, t) {
            Ok(p) => p,
            Err(Error::TooLarge { .. }) => break,
            Err(e) => return Err(e),
        };
        let chi = chromatic_number(&power, cell());
        let chi_cell = SolveCell {
            lower: chi.lower,
            upper: chi.upper,
            optimal: chi.optimal,
        };
        let chidir = dichromatic_number(&power, cell());
        let chidir_cell = SolveCell {
            lower: chidir.lower,
            upper: chidir.upper,
            optimal: chidir.optimal,
        };
        let chidirf = match fractional_dichromatic(&power) {
            Ok((_, sol)) => Some(sol.value),
            Err(Error::EnumerationOverflow { .. }) => None,
            Err(e) => return Err(e),
        };
        let root_chi = chi
            .optimal
            .then(|| RootRational::new(rat_int(chi.upper), t as u32));
        let root_chi_dir = chidir
            .optimal
            .then(|| RootRational::new(rat_int(chidir.upper), t as u32));
        let root_chi_dir_f = chidirf
            .as_ref()
            .map(|v| RootRational::new(v.clone(), t as u32));
        for (root, tag) in [
            (&root_chi, "chi-power"),
            (&root_chi_dir, "dichromatic-power"),
            (&root_chi_dir_f, "fractional-dichromatic-power"),
        ] {
            if let Some(r) = root {
                upper_bounds.push(BoundEntry::exact_entry(
                    &format!("{tag} t={t}"),
                    r.clone(),
                    true,
                ));
            }
        }
        per_t.push(PerTRow {
            t,
            vertices: power.n(),
            chi: chi_cell,
            chi_dir: chidir_cell,
            chi_dir_f: chidirf,
            root_chi,
            root_chi_dir,
            root_chi_dir_f,
        });
    }

    let best_lower = lower_bounds
        .iter()
        .filter(|e| e.optimal)
        .filter_map(|e| e.exact.clone().map(|x| (x, e.provenance.clone())))
        .max_by(|a, b| a.0.cmp_exact(&b.0));
    let best_upper = upper_bounds
        .iter()
        .filter(|e| e.optimal)
        .filter_map(|e| e.exact.clone().map(|x| (x, e.provenance.clone())))
        .min_by(|a, b| a.0.cmp_exact(&b.0));
    let mut pinned = None;
    if let (Some((lo, lo_src)), Some((hi, hi_src))) = (&best_lower, &best_upper) {
        let ord = lo.cmp_exact(hi);
        assert!(
            ord != std::cmp::Ordering::Greater,
            "bound sandwich inverted: {} ({lo_src}) > {} ({hi_src})",
            lo.format(),
            hi.format()
        );
        if ord == std::cmp::Ordering::Equal {
            pinned = Some(PinnedValue {
                exact: lo.clone(),
                log2: lo.log2(),
                justification: format!("lower [{lo_src}] meets upper [{hi_src}]"),
            });
        }
    }

    Ok(BoundReport {
        graph_hash: graph_hash(g),
        n,
        lower_bounds,
        upper_bounds,
        per_t,
        pinned,
    })
}

/// Per-t union chromatic numbers for a compound family.
#[derive(Debug, Clone)]
pub struct CompoundRow {
    pub t: usize,
    pub union_chi: SolveCell,
    pub member_chi: Vec<SolveCell>,
    /// union chi >= max member chi, checked on optimal cells
    pub sane: bool,
}

#[derive(Debug, Clone)]
pub struct CompoundReport {
    pub rows: Vec<CompoundRow>,
    /// One bound report per member; their minimum tracks the family rate in
    /// the limit — the finite-t rows make no equality claim against it.
    pub member_reports: Vec<BoundReport>,
}

impl CompoundReport {
    /// Smallest pinned member value, when every member is pinned.
    pub fn reference_min(&self) -> Option<RootRational> {
        let mut best: Option<RootRational> = None;
        for report in &self.member_reports {
            let pin = report.pinned.as_ref()?.exact.clone();
            best = Some(match best {
                None => pin,
                Some(b) if pin.cmp_exact(&b).is_lt() => pin,
                Some(b) => b,
            });
        }
        best
    }
}

pub fn compound_report(
    family: &[Digraph],
    t_max: usize,
    per_cell_secs: f64,
) -> Result<CompoundReport> {
    let mut rows = Vec::new();
    for t in 1..=t_max {
        let union = compound_union_power(family, t)?;
        let chi = chromatic_number(&union, Budget::seconds(per_cell_secs));
        let union_cell = SolveCell {
            lower: chi.lower,
            upper: chi.upper,
            optimal: chi.optimal,
        };
        let mut member_chi = Vec::new();
        for g in family {
            let p = and_power(g, t)?;
            let c = chromatic_number(&p, Budget::seconds(per_cell_secs));
            member_chi.push(SolveCell {
                lower: c.lower,
                upper: c.upper,
                optimal: c.optimal,
            });
        }
        let sane = member_chi
            .iter()
            .all(|m| !(m.optimal && union_cell.optimal) || m.upper <= union_cell.upper);
        rows.push(CompoundRow {
            t,
            union_chi: union_cell,
            member_chi,
            sane,
        });
    }
    let member_reports = family
        .iter()
        .map(|g| dilworth_bounds(g, 1, per_cell_secs))
        .collect::<Result<Vec<_>>>()?;
    Ok(CompoundReport {
        rows,
        member_reports,
    })
}

/// Inspection record for one exact type class of one AND power.
#[derive(Debug, Clone)]
pub struct WithinTypeReport {
    pub class_size: usize,
    pub alpha: usize,
    pub alpha_optimal: bool,
    pub chi_f: Rational,
    /// `chi_f == class_size / alpha` (the vertex-transitive identity),
    /// present only when alpha is exact.
    pub identity_holds: Option<bool>,
    pub entropy: f64,
}

pub fn within_type_report(
    g: &Digraph,
    t: usize,
    tv: &TypeVector,
    budget: Budget,
) -> Result<WithinTypeReport> {
    let (sub, verts) = type_class_subgraph(g, t, tv)?;
    let alpha = independence_number(&sub, budget);
    let (_, chi_f) = fractional_chromatic(&sub)?;
    let identity_holds = alpha
        .optimal
        .then(|| chi_f.value == rat_int(verts.len()) / rat_int(alpha.value.max(1)));
    let dist = Distribution::of_type(tv)?;
    Ok(WithinTypeReport {
        class_size: verts.len(),
        alpha: alpha.value,
        alpha_optimal: alpha.optimal,
        chi_f: chi_f.value,
        identity_holds,
        entropy: entropy(&dist),
    })
}
