//! Invariants of Newton nondegenerate surface singularities in `C^3`.
//!
//! Starting from the monomial support of a defining equation this crate
//! builds the Newton polyhedron, runs Oka's algorithm to obtain the
//! resolution (plumbing) graph, and evaluates computation sequences that
//! yield the geometric genus, the part `Sp_{<=0}` of the spectrum, the
//! Poincaré series of the Newton filtration and the normalized
//! Seiberg-Witten invariant of the link. Independent brute-force oracles
//! (lattice point counts, zeta/counting function expansions) live in
//! [`series`] and [`polygon`].
//!
//! All arithmetic is exact: integers are [`num_bigint::BigInt`] and
//! rationals are [`num_rational::BigRational`].

pub mod error;
pub mod export;
pub mod graph;
pub mod lattice;
pub mod linalg;
pub mod newton;
pub mod polygon;
pub mod puiseux;
pub mod sequences;
pub mod series;

pub use error::{Error, Result};
pub use graph::{
    canonical_cycle, intersection_data, merle_teissier_zk, minimal_cycle, minimal_model,
    oka_graph, wt_cycle, Cycle, IntersectionData, OkaGraph, PlumbingGraph, RatCycle,
};
pub use lattice::{
    canonical_primitive_sequence, content, denominator_beta, determinant_alpha, negative_cf,
    CfExpansion, IntVec3, Rational, UnitChoice,
};
pub use newton::{NewtonPolyhedron, Support};
pub use puiseux::PuiseuxPoly;
pub use sequences::{Analysis, RatioTestKind, SequenceResult, SeqStep, TieBreak};
