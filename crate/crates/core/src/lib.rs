//! Numerical semigroups generated by Fibonacci and Lucas triples.
//!
//! The library decides symmetry of `S(F_a, F_b, F_c)` and `S(L_k, L_m, L_n)`
//! from index arithmetic, evaluates the closed forms for the Frobenius
//! number, genus and Hilbert series of the symmetric ones, and carries a
//! sieve-based oracle that checks every closed form by exhaustion.

pub mod classify;
mod decimal;
pub mod error;
pub mod kernel;
pub mod oracle;
pub mod sequences;

pub use num_bigint::BigUint;

/// Arbitrary-precision nonnegative integer.
pub type BigNat = BigUint;

pub use classify::{
    classify, classify_fibonacci, classify_generic, classify_lucas, Family, IndexTriple, Status, Verdict,
};
pub use error::Error;
pub use kernel::{GenSet2, GenSet3, HilbertForm, Pair, RelationMatrix, SymmetricCertificate};
pub use oracle::OracleReport;
pub use sequences::{SeqIndex, TwoAdicSplit};
