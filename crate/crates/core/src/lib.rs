//! Exact computational Lie theory for the exceptional dual pairs
//! `G × G' ⊂ E_n` with one member of type `G2`.
//!
//! The crate computes restricted root systems and integrability exponents
//! from marked Dynkin diagrams, implements the closed-form branching rules
//! for the `K`-types `V(nω)` of the minimal representation, and verifies
//! every closed form against an independent character oracle built on
//! Freudenthal's formula and weight push-forward.
//!
//! Module map:
//!
//! - [`root`]: Cartan types, root systems, Weyl dimension formula.
//! - [`characters`]: dominant characters, tensor products, symmetric powers,
//!   restriction along lattice maps.
//! - [`branching`]: closed-form branching rules and Gelfand–Tsetlin counts.
//! - [`geometry`]: restricted root data and integrability exponents.
//! - [`invariants`]: invariant dimensions for `K̃` and `K'`.
//! - [`quaternionic`]: K-types of quaternionic `R¹(W)` and see-saw counts.
//! - [`verify`]: verification suites and reports.

pub mod branching;
pub mod characters;
mod error;
pub mod geometry;
pub mod invariants;
pub mod quaternionic;
pub mod root;
pub mod verify;

use num_bigint::BigInt;

pub use error::{Error, Result};

/// `C(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(8, 7), BigInt::from(8));
        assert_eq!(binomial(10, 7), BigInt::from(120));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(-1, 0), BigInt::from(0));
        assert_eq!(binomial(15, 11), BigInt::from(1365));
    }
}
