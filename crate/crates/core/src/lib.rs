//! Computational commutative-semiring toolkit.
//!
//! Semirings, ideals, Euclidean norms, factorization, polynomial contents,
//! localization and semifields of fractions, with decision procedures for ℕ,
//! the Boolean semifield and the min-plus semiring, and exhaustive checks over
//! table-defined finite semirings.

pub mod euclid;
pub mod factor;
pub mod finite;
pub mod frac;
pub mod handle;
pub mod harness;
pub mod poly;
pub mod semiring;
pub mod verdict;

pub use semiring::{
    nat, Boolean, Divisibility, ElementSyntax, MinPlus, Natural, Naturals, Semiring, Tropical,
};
pub use verdict::Verdict;
