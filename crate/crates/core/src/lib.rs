//! Numerical laboratory for Turán-type inequalities: lower bounds on
//! `‖P'‖ / ‖P‖` over `[-1, 1]` for polynomials whose zeros are mostly confined
//! to the closed upper half of the unit disk.

mod error;
mod roots;

pub mod bounds;
pub mod classes;
pub mod constructions;
pub mod levelsets;
pub mod polynomial;
pub mod search;
pub mod supnorm;

pub use error::{Error, Result};
pub use polynomial::{Backing, Complex, Interval, Polynomial, RealPolynomial, EXPANSION_CAP};

// The guide's snippets run as doc-tests so they cannot drift from the API.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/polynomials.md")]
    struct Polynomials;
    #[doc = include_str!("../../../book/src/supnorm.md")]
    struct SupNorm;
    #[doc = include_str!("../../../book/src/classes.md")]
    struct Classes;
    #[doc = include_str!("../../../book/src/bounds.md")]
    struct Bounds;
    #[doc = include_str!("../../../book/src/levelsets.md")]
    struct LevelSets;
    #[doc = include_str!("../../../book/src/search.md")]
    struct Search;
    #[doc = include_str!("../../../book/src/constructions.md")]
    struct Constructions;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}
