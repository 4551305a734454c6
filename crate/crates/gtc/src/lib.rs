//! Generalized twisted centralizer codes over prime fields.
//!
//! For square matrices A and D over F_p, the code C(A, D) is the set of
//! matrices B with AB = BAD, viewed as vectors of length n² through the
//! column-major vectorization. Taking D = I gives the ordinary
//! centralizer code of A. This crate constructs such codes from their
//! Kronecker-product parity check, computes their [n², k, d] parameters
//! and the dimension bounds they obey, decodes single symbol errors by
//! syndrome lookup, punctures codes on coordinate masks, searches for
//! good twists D at random, and verifies the action of graph
//! automorphisms of A and AD on the code.
//!
//! Matrices are dense and exact; moduli are primes up to 255. Distance
//! computations are exhaustive and refuse, rather than estimate, when
//! the codeword count exceeds the caller's enumeration limit.

pub mod analysis;
pub mod code;
pub mod decode;
pub mod error;
pub mod field;
pub mod graph;
pub mod matrix;
pub mod puncture;
pub mod rng;
pub mod search;

pub use analysis::{
    analyze, bound_report, centralizer_dimension, find_invertible_codeword, minimum_distance,
    product_code_check, weight_distribution, CodeReport, DEFAULT_DIST_LIMIT,
    DEFAULT_INVERTIBLE_BUDGET,
};
pub use code::{is_codeword, parity_check_matrix, syndrome, GtcCode};
pub use decode::{build_syndrome_table, correct_single_error, serialize_syndrome, SyndromeTable};
pub use error::{Error, Result};
pub use field::{field_inverse, is_prime, FieldElement, MAX_MODULUS};
pub use graph::{
    automorphism_group, group_act, is_adjacency_like, is_graph_automorphism, permute_vector,
    verify_coordinate_action, Permutation, AUTOMORPHISM_N_LIMIT,
};
pub use matrix::{Matrix, RowEchelon};
pub use puncture::{
    puncture, punctured_minimum_distance, zero_constrained_subcode, PositionMask, PuncturedCode,
};
pub use rng::XorShift64Star;
pub use search::{search_twists, Objective, SearchEntry, SearchResult};
