//! Finite fields GF(p^e) and exact dense linear algebra over them.

pub mod exterior;
pub mod field;
pub mod jordan;
pub mod matrix;

pub use exterior::{binomial, ext_power_matrix, subsets, sym_power_matrix};
pub use field::{is_prime, make_field, Elem, FieldSpec, GaloisField};
pub use jordan::{jordan_type_from_ranks, nilpotent_jordan_type, rank_sequence};
pub use matrix::{GfMatrix, MatrixDump};
