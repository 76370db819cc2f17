//! Exact arithmetic for the generalized coin problem graded by number of
//! solutions: denumerant counting, level-p Apery sets, level-p Frobenius
//! numbers, Sylvester numbers and sums, Bernoulli-weighted power sums, and
//! the closed-form families for triples of consecutive triangular numbers.
//!
//! Everything is a pure function of immutable inputs; tables and Apery
//! sets never mutate after construction, so all of it can be used from
//! multiple threads freely. The `parallel` feature (default) adds rayon
//! fan-out to the batch helpers.

#![forbid(unsafe_code)]

pub mod apery;
pub mod batch;
pub mod bernoulli;
pub mod denumerant;
pub mod error;
pub mod gens;
pub mod triangular;

pub use apery::{
    exact_rep_frobenius, p_apery_set, p_frobenius, p_power_sum, p_sylvester_number,
    p_sylvester_number_positive, p_sylvester_sum, summarize, two_var_g, two_var_n, two_var_s,
    PAperySet, PFrobeniusSummary,
};
pub use bernoulli::{bernoulli, ExactRational};
pub use denumerant::{
    closed_form_d23, denumerant, enumerate_representations, BruteForce, DenumerantTable,
    Representation, Representations, DEFAULT_MAX_CELLS,
};
pub use error::{Error, Result};
pub use gens::{gcd_consecutive_triangular, triangular, GeneratorSet, TriangularTriple};
