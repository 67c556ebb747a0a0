//! Exact arithmetic for certifying upper bounds on Euclidean s-distance sets
//! whose squared distances are algebraic numbers.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is exact: big
//! rationals, number-field elements in a power basis, polynomials over `F_p`
//! and residue fields `F_p[x]/(g)`.
//!
//! The two bounds computed here:
//!
//! * the mod-𝔭 bound: if every squared distance is nonzero modulo a prime
//!   ideal 𝔭 and the distances fall into `s` residue classes, then
//!   `|X| <= C(d+s, s) + C(d+s-1, s-1)` ([`bounds::modp_certificate`]);
//! * the LRS-ratio refinement through the ratios
//!   `K_j = prod_{i != j} a_i / (a_i - a_j)` ([`bounds::lrs_report`]).
//!
//! [`verify`] rebuilds the matrices used in the proofs of both bounds on
//! concrete point sets and checks their claimed properties exactly.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod bounds;
pub mod finite_field;
pub mod geometry;
pub mod linalg;
pub mod number_field;
pub mod poly;
pub mod prime_ideal;
pub mod verify;

pub use arith::{binomial, dim_p, factor_integer, primes_up_to, Rational};
pub use bounds::{
    certify_search, combined_report, congruent_pair_obstruction, lrs_ratio, lrs_report,
    modp_certificate, BoundInput, BoundReport, LrsReport, ModPCertificate, SearchConfig,
};
pub use finite_field::{fp_factor, FpPoly, ResidueElement, ResidueField};
pub use geometry::{distance_set, squared_distance, DistanceSet, PointSet};
pub use number_field::{NfElement, NumberField};
pub use poly::{IntPoly, QPoly};
pub use prime_ideal::{primes_above, reduce_element, PrimeIdeal};
pub use verify::{
    adjacency_matrix, check_congruence_pattern, eigen_multiplicity, fx_matrix, lrs_matrix,
    rank_over_field, verify_point_set, EvalMatrix, VerificationReport,
};
