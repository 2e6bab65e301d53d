//! A finite-scale toolkit for Pervin spaces, Frith frames, bitopologies,
//! and the Stone-type dualities connecting them.
//!
//! Everything is computed on explicit finite carriers: lattices come with
//! full meet/join tables, spaces with explicit subset families, and every
//! classical equivalence the library knows about is re-checked on the
//! instances it touches rather than assumed.  See the `examples/` directory
//! for runnable tours of each area.

pub mod adjunction;
pub mod bitop;
pub mod bits;
pub mod catalog;
pub mod congruence;
pub mod dot;
pub mod duality;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod files;
pub mod frith;
pub mod lattice;
pub mod pervin;
pub mod poset;
pub mod report;
pub mod suite;
