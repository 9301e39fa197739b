//! Zero-error information-theoretic parameters of directed graphs.
//!
//! A noisy channel whose confusabilities form a digraph `G` admits a
//! zero-error confirmation protocol whose optimal message length per block
//! is governed by chromatic numbers of AND powers of `G`; complete zero-error
//! decoding is governed the same way by the closure graph of `G`. This crate
//! computes the finite quantities behind those rates — exact and fractional
//! (di)chromatic numbers, independence/clique/acyclicity parameters, and
//! Sperner-capacity bounds — and assembles them into bound sandwiches with
//! machine-checkable certificates for every reported value.

pub mod bits;
pub mod certificate;
pub mod digraph;
pub mod error;
pub mod extremal;
pub mod io;
pub mod lp;
pub mod params;
pub mod power;
pub mod protocol;
pub mod rates;
pub mod ratio;

pub use certificate::{
    verify_certificate, AcyclicCover, Certificate, CertificateEnvelope, Coloring,
    SubsetCertificate, SubsetKind, Verdict, Violation,
};
pub use digraph::{
    generate, is_closure_realizable, transform, Digraph, GraphFamily, Realizability, Transform,
};
pub use error::{Error, Result};
pub use params::{
    acyclicity_number, chromatic_number, constructive_power_coloring, dichromatic_number,
    independence_number, symmetric_clique_number, transitive_clique_number, Budget,
    ColoringResult, CoverResult, SubsetResult,
};
pub use power::{
    and_power, and_product, compound_union_power, or_power, or_product, type_class_subgraph,
    PowerIndex, PowerOp, PowerOracle, TypeVector,
};
pub use ratio::{Rational, RootRational};
