//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong while constructing or transforming instances.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// The given order has a pair with no infimum or supremum.
    #[error("not a lattice: elements {0} and {1} have no unique {2}")]
    NotALattice(usize, usize, &'static str),

    /// An operation required distributivity and the lattice is not distributive.
    #[error("lattice is not distributive (witness: {0}, {1}, {2})")]
    NotDistributive(usize, usize, usize),

    /// Universal extension requires the image of every designated element to be complemented.
    #[error("image of element {0} is not complemented in the codomain")]
    NotComplemented(usize),

    /// An exhaustive search or closure was asked for on an instance above the guard.
    #[error("instance too large for {what}: size {size} exceeds bound {bound}")]
    SizeExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },

    /// The operation is only defined on T0 instances.
    #[error("space is not T0")]
    NotT0,

    /// The operation is only defined on spectral topologies.
    #[error("topology is not spectral")]
    NotSpectral,

    /// A file did not match the expected schema.
    #[error("schema error: {0}")]
    Schema(String),

    /// A structural invariant on an instance failed.
    #[error("invariant violation: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
