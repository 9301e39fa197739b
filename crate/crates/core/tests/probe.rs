use dilworth_core::digraph::{generate, GraphFamily};
use dilworth_core::lp::{fractional_dichromatic, maximal_acyclic_sets};
use dilworth_core::params::{chromatic_number, dichromatic_number, Budget};
use dilworth_core::power::and_power;
use dilworth_core::ratio::format_ratio;
use std::time::Instant;

#[test]
#[ignore]
fn probe_single_edge_powers() {
    let l = generate(GraphFamily::SingleEdge).unwrap();
    for t in 1..=8 {
        let p = and_power(&l, t).unwrap();
        let start = Instant::now();
        let r = chromatic_number(&p, Budget::seconds(60.0));
        println!(
            "t={t} n={} chi=[{},{}] optimal={} nodes={} in {:?}",
            p.n(),
            r.lower,
            r.upper,
            r.optimal,
            r.nodes,
            start.elapsed()
        );
    }
}

#[test]
#[ignore]
fn probe_alt_cycle_square() {
    let a5c = generate(GraphFamily::AltCycle5Complement).unwrap();
    let sq = and_power(&a5c, 2).unwrap();
    let start = Instant::now();
    let sys = maximal_acyclic_sets(&sq).unwrap();
    println!(
        "maximal acyclic sets of the square: {} (max size {}) in {:?}",
        sys.sets.len(),
        sys.max_set_size(),
        start.elapsed()
    );
    let start = Instant::now();
    let (_, sol) = fractional_dichromatic(&sq).unwrap();
    println!("chi_dir_f = {} in {:?}", format_ratio(&sol.value), start.elapsed());
    let start = Instant::now();
    let r = dichromatic_number(&sq, Budget::seconds(120.0));
    println!(
        "chi_dir=[{},{}] optimal={} nodes={} in {:?}",
        r.lower,
        r.upper,
        r.optimal,
        r.nodes,
        start.elapsed()
    );
    let start = Instant::now();
    let chi = chromatic_number(&sq, Budget::seconds(120.0));
    println!(
        "chi=[{},{}] optimal={} nodes={} in {:?}",
        chi.lower,
        chi.upper,
        chi.optimal,
        chi.nodes,
        start.elapsed()
    );
}

#[test]
#[ignore]
fn probe_bollobas_powers() {
    let f = generate(GraphFamily::Bollobas).unwrap();
    for t in 1..=4 {
        let p = and_power(&f, t).unwrap();
        let start = Instant::now();
        let r = chromatic_number(&p, Budget::seconds(60.0));
        println!(
            "t={t} n={} chi=[{},{}] optimal={} nodes={} in {:?}",
            p.n(), r.lower, r.upper, r.optimal, r.nodes, start.elapsed()
        );
    }
}
