//! Multiplicative orders modulo `n` and the order functions
//!
//! ```text
//! alpha_n(a) = O_n(a^n)    beta_n(a) = PO_n(a^n)    (0 when gcd(a, n) != 1)
//! ```
//!
//! together with exact lifting formulas that reduce any modulus to its
//! square-free part (or twice it when `4 | n`), a sweep that checks every
//! lifting law against direct computation, and Steinhaus triangles over
//! `Z/nZ`.
//!
//! ```
//! use ordlift::{alpha, alpha_fast, lifting::make_base_pair, lift_order};
//!
//! assert_eq!(alpha(2, 19).unwrap(), 18);
//! assert_eq!(alpha_fast(5, 16).unwrap(), 1);
//!
//! let pair = make_base_pair(125, 5).unwrap();
//! assert_eq!(lift_order(&pair, 7).unwrap(), 20);
//! ```

pub mod arith;
mod error;
pub mod lifting;
pub mod orders;
pub mod steinhaus;
pub mod table;
pub mod verify;

pub use arith::{
    euler_phi, factorize, gcd_conv, is_prime, mod_pow, radical, valuation, Factorization,
};
pub use error::{Error, PairDefect, Result};
pub use lifting::{
    alpha_fast, alpha_prime_power, beta_fast, beta_prime_power, canonical_base, lift_alpha,
    lift_beta, lift_order, make_base_pair, order_fast, order_formula_unchecked, proj_order_fast,
    BasePair, TwoAdicCase,
};
pub use orders::{
    alpha, alpha_oracle, beta, beta_oracle, mult_order, proj_order, remainder_gcd, OrderRecord,
};
pub use steinhaus::{
    ap_sequence, is_balanced, length_admissible, search_balanced_ap, triangle, TriangleSummary,
    ZnSequence,
};
pub use table::{Format, Function, Table, TableSpec};
pub use verify::{verify_claims, verify_claims_with_workers, LawReport, VerifyReport};
