//! Order lifting from a base modulus `n2` to a multiple `n1` sharing its
//! prime support.
//!
//! For a [`BasePair`] `(n1, n2)` and `a` coprime to `n1`:
//!
//! ```text
//! O_{n1}(a)     = O_{n2}(a) * n1 / gcd(n1, R_{n2}(a))
//! alpha_{n1}(a) = alpha_{n2}(a) / gcd(alpha_{n2}(a), gcd(n1, R_{n2}(a)) / n2)
//! beta_{n1}(a)  = beta_{n2}(a)  / gcd(beta_{n2}(a),  gcd(n1, R_{n2}(a)) / n2)
//! ```
//!
//! The pair must satisfy `rad(n1) | n2 | n1`, strengthened to
//! `2 rad(n1) | n2` when `4 | n1`. Without the strengthening the order
//! formula is wrong: for `(24, 6)` and `a = 7` it yields 4 while
//! `O_24(7) = 2`.
//!
//! [`alpha_fast`] and [`beta_fast`] route every modulus through its
//! [`canonical_base`], so only the square-free (or twice square-free) base
//! ever needs a direct order computation.

use crate::arith::{self, gcd, v};
use crate::error::{Error, PairDefect, Result};
use crate::orders;

/// Which form of the lifting hypothesis a pair falls under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TwoAdicCase {
    /// `v2(n1) <= 1`: requires `rad(n1) | n2 | n1`.
    Small,
    /// `v2(n1) >= 2`: requires `2 rad(n1) | n2 | n1`.
    Large,
}

/// A validated `(n1, n2)` pair for which the lifting formulas hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasePair {
    n1: u64,
    n2: u64,
    case: TwoAdicCase,
}

impl BasePair {
    pub fn new(n1: u64, n2: u64) -> Result<Self> {
        make_base_pair(n1, n2)
    }

    pub fn n1(&self) -> u64 {
        self.n1
    }

    pub fn n2(&self) -> u64 {
        self.n2
    }

    pub fn two_adic_case(&self) -> TwoAdicCase {
        self.case
    }
}

pub fn make_base_pair(n1: u64, n2: u64) -> Result<BasePair> {
    if n1 == 0 || n2 == 0 {
        return Err(Error::ZeroModulus);
    }
    let invalid = |reason| Err(Error::InvalidPair { n1, n2, reason });
    if !n1.is_multiple_of(n2) {
        return invalid(PairDefect::NotDivisor);
    }
    let rad = arith::radical(n1)?;
    if !n2.is_multiple_of(rad) {
        return invalid(PairDefect::RadicalMissing);
    }
    let case = if v(n1, 2) <= 1 {
        TwoAdicCase::Small
    } else {
        if !n2.is_multiple_of(2 * rad) {
            return invalid(PairDefect::TwoAdicCaseViolated);
        }
        TwoAdicCase::Large
    };
    Ok(BasePair { n1, n2, case })
}

/// `rad(n)` when `v2(n) <= 1`, otherwise `2 rad(n)`.
pub fn canonical_base(n: u64) -> Result<u64> {
    let rad = arith::radical(n)?;
    Ok(if n.is_multiple_of(4) { 2 * rad } else { rad })
}

fn exact_div(numerator: u64, denominator: u64) -> Result<u64> {
    if denominator == 0 || !numerator.is_multiple_of(denominator) {
        return Err(Error::InexactDivision {
            numerator,
            denominator,
        });
    }
    Ok(numerator / denominator)
}

fn ensure_coprime(a: i64, n: u64) -> Result<()> {
    if gcd(a.unsigned_abs(), n) != 1 {
        return Err(Error::NotCoprime { a, n });
    }
    Ok(())
}

/// Evaluates `O_{n2}(a) * n1 / gcd(n1, R_{n2}(a))` for any `n2 | n1`,
/// without checking the lifting hypothesis. The value is only guaranteed
/// to be `O_{n1}(a)` when `(n1, n2)` is a valid [`BasePair`].
pub fn order_formula_unchecked(a: i64, n1: u64, n2: u64) -> Result<u64> {
    let base_order = orders::mult_order(a, n2)?.order();
    let rg = orders::remainder_gcd(a, n2, n1)?;
    let factor = exact_div(n1, rg)?;
    base_order
        .checked_mul(factor)
        .ok_or(Error::Overflow(base_order as u128 * factor as u128))
}

/// `O_{n1}(a)` lifted from `O_{n2}(a)`.
pub fn lift_order(pair: &BasePair, a: i64) -> Result<u64> {
    ensure_coprime(a, pair.n1)?;
    order_formula_unchecked(a, pair.n1, pair.n2)
}

// value / gcd(value, gcd(n1, R_{n2}(a)) / n2)
fn lift_quotient(pair: &BasePair, a: i64, base_value: u64) -> Result<u64> {
    let rg = orders::remainder_gcd(a, pair.n2, pair.n1)?;
    let excess = exact_div(rg, pair.n2)?;
    exact_div(base_value, gcd(base_value, excess))
}

/// `alpha_{n1}(a)` lifted from `alpha_{n2}(a)`.
pub fn lift_alpha(pair: &BasePair, a: i64) -> Result<u64> {
    ensure_coprime(a, pair.n1)?;
    let base = orders::alpha(a, pair.n2)?;
    lift_quotient(pair, a, base)
}

/// `beta_{n1}(a)` lifted from `beta_{n2}(a)`.
pub fn lift_beta(pair: &BasePair, a: i64) -> Result<u64> {
    ensure_coprime(a, pair.n1)?;
    let base = orders::beta(a, pair.n2)?;
    lift_quotient(pair, a, base)
}

fn canonical_pair(n: u64) -> Result<BasePair> {
    make_base_pair(n, canonical_base(n)?)
}

/// `alpha_n(a)` computed through the canonical base of `n`. Total: 0 when
/// `a` is not coprime to `n`.
pub fn alpha_fast(a: i64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    if gcd(a.unsigned_abs(), n) != 1 {
        return Ok(0);
    }
    lift_alpha(&canonical_pair(n)?, a)
}

/// `beta_n(a)` computed through the canonical base of `n`. Total: 0 when
/// `a` is not coprime to `n`.
pub fn beta_fast(a: i64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    if gcd(a.unsigned_abs(), n) != 1 {
        return Ok(0);
    }
    lift_beta(&canonical_pair(n)?, a)
}

/// `O_n(a)` computed through the canonical base of `n`.
pub fn order_fast(a: i64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    ensure_coprime(a, n)?;
    lift_order(&canonical_pair(n)?, a)
}

/// `PO_n(a)` computed through the canonical base of `n`: the lifted order,
/// halved when `a` reaches `-1` halfway.
pub fn proj_order_fast(a: i64, n: u64) -> Result<u64> {
    let d = order_fast(a, n)?;
    if n > 2 && d % 2 == 0 && arith::mod_pow(a, d / 2, n)? == n - 1 {
        Ok(d / 2)
    } else {
        Ok(d)
    }
}

fn prime_power(p: u64, k: u32) -> Result<u64> {
    p.checked_pow(k)
        .ok_or(Error::Overflow((p as u128).saturating_pow(k)))
}

/// `alpha_{p^k}(a) = O_p(a)`, independent of `k >= 1`; 0 when `p | a`.
pub fn alpha_prime_power(a: i64, p: u64, k: u32) -> Result<u64> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k == 0 {
        return Err(Error::ZeroModulus);
    }
    prime_power(p, k)?;
    if a.unsigned_abs().is_multiple_of(p) {
        return Ok(0);
    }
    Ok(orders::mult_order(a, p)?.order())
}

/// `beta_{p^k}(a) = beta_p(a)`, independent of `k >= 1`; 0 when `p | a`.
pub fn beta_prime_power(a: i64, p: u64, k: u32) -> Result<u64> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k == 0 {
        return Err(Error::ZeroModulus);
    }
    prime_power(p, k)?;
    orders::beta(a, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_order(a: i64, n: u64) -> u64 {
        let b = arith::reduce(a, n);
        let mut x = b % n;
        let mut e = 1;
        while x != 1 % n {
            x = x * b % n;
            e += 1;
        }
        e
    }

    #[test]
    fn make_base_pair_examples() {
        let p = make_base_pair(9, 3).unwrap();
        assert_eq!(p.two_adic_case(), TwoAdicCase::Small);
        assert_eq!(
            make_base_pair(24, 6),
            Err(Error::InvalidPair {
                n1: 24,
                n2: 6,
                reason: PairDefect::TwoAdicCaseViolated
            })
        );
        assert_eq!(
            make_base_pair(24, 12).unwrap().two_adic_case(),
            TwoAdicCase::Large
        );
        assert!(matches!(
            make_base_pair(9, 2),
            Err(Error::InvalidPair {
                reason: PairDefect::NotDivisor,
                ..
            })
        ));
        assert!(matches!(
            make_base_pair(18, 3),
            Err(Error::InvalidPair {
                reason: PairDefect::RadicalMissing,
                ..
            })
        ));
        assert_eq!(make_base_pair(0, 1), Err(Error::ZeroModulus));
        assert_eq!(
            make_base_pair(1, 1).unwrap().two_adic_case(),
            TwoAdicCase::Small
        );
    }

    #[test]
    fn valid_pairs_share_radical() {
        for n1 in 1..=3000u64 {
            for n2 in arith::factorize(n1).unwrap().divisors() {
                if make_base_pair(n1, n2).is_ok() {
                    assert_eq!(arith::radical(n1).unwrap(), arith::radical(n2).unwrap());
                }
            }
        }
    }

    #[test]
    fn canonical_base_examples() {
        assert_eq!(canonical_base(9).unwrap(), 3);
        assert_eq!(canonical_base(24).unwrap(), 12);
        assert_eq!(canonical_base(30).unwrap(), 30);
        assert_eq!(canonical_base(1).unwrap(), 1);
        assert_eq!(canonical_base(4).unwrap(), 4);
        for n in 1..=5000 {
            assert!(
                make_base_pair(n, canonical_base(n).unwrap()).is_ok(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn lift_order_examples() {
        let p93 = make_base_pair(9, 3).unwrap();
        assert_eq!(lift_order(&p93, 2).unwrap(), 6);
        assert_eq!(brute_order(2, 9), 6);
        for n in [5u64, 12, 35, 64] {
            let pair = make_base_pair(n, n).unwrap();
            for a in [1i64, 7, 11, 13] {
                if gcd(a as u64, n) == 1 {
                    assert_eq!(lift_order(&pair, a).unwrap(), brute_order(a, n));
                }
            }
        }
        // O_5(7) = 4 and 7^4 - 1 = 2400 = 2^5 3 5^2
        let p = make_base_pair(125, 5).unwrap();
        assert_eq!(brute_order(7, 125), 20);
        assert_eq!(lift_order(&p, 7).unwrap(), 20);
        assert!(matches!(lift_order(&p93, 3), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn lift_alpha_examples() {
        assert_eq!(lift_alpha(&make_base_pair(9, 3).unwrap(), 2).unwrap(), 2);
        assert_eq!(lift_alpha(&make_base_pair(25, 5).unwrap(), 2).unwrap(), 4);
        assert_eq!(orders::alpha_oracle(2, 25).unwrap(), 4);
        for n in [7u64, 15, 16, 30] {
            let pair = make_base_pair(n, n).unwrap();
            assert_eq!(
                lift_alpha(&pair, 11).unwrap(),
                orders::alpha(11, n).unwrap()
            );
        }
    }

    #[test]
    fn lift_beta_examples() {
        assert_eq!(lift_beta(&make_base_pair(9, 3).unwrap(), 2).unwrap(), 1);
        assert_eq!(lift_beta(&make_base_pair(25, 5).unwrap(), 2).unwrap(), 2);
        assert_eq!(orders::beta_oracle(2, 25).unwrap(), 2);
        for n in [7u64, 15, 16, 30] {
            let pair = make_base_pair(n, n).unwrap();
            assert_eq!(lift_beta(&pair, 11).unwrap(), orders::beta(11, n).unwrap());
        }
    }

    #[test]
    fn fast_path_examples() {
        assert_eq!(alpha_fast(2, 15).unwrap(), 4);
        assert_eq!(alpha_fast(3, 20).unwrap(), 1);
        assert_eq!(alpha_fast(5, 16).unwrap(), 1);
        assert_eq!(beta_fast(2, 27).unwrap(), 1);
        assert_eq!(beta_fast(2, 5).unwrap(), 2);
        assert_eq!(beta_fast(6, 12).unwrap(), 0);
        assert_eq!(alpha_fast(0, 1).unwrap(), 1);
        assert_eq!(order_fast(7, 24).unwrap(), 2);
        assert_eq!(proj_order_fast(2, 5).unwrap(), 2);
    }

    #[test]
    fn counterexample_pair() {
        assert!(make_base_pair(24, 6).is_err());
        assert_eq!(orders::mult_order(7, 24).unwrap().order(), 2);
        assert_eq!(order_formula_unchecked(7, 24, 6).unwrap(), 4);
    }

    #[test]
    fn fast_paths_match_direct() {
        for n in 1..=1200u64 {
            for a in -25..=25i64 {
                assert_eq!(alpha_fast(a, n).unwrap(), orders::alpha(a, n).unwrap());
                assert_eq!(beta_fast(a, n).unwrap(), orders::beta(a, n).unwrap());
                match orders::mult_order(a, n) {
                    Ok(rec) => {
                        assert_eq!(order_fast(a, n).unwrap(), rec.order());
                        assert_eq!(
                            proj_order_fast(a, n).unwrap(),
                            orders::proj_order(a, n).unwrap()
                        );
                    }
                    Err(_) => assert!(order_fast(a, n).is_err()),
                }
            }
        }
    }

    #[test]
    fn prime_power_examples() {
        assert_eq!(alpha_prime_power(2, 3, 5).unwrap(), 2);
        assert_eq!(orders::alpha_oracle(2, 243).unwrap(), 2);
        for a in [1i64, 3, 5, 7, -9] {
            for k in 1..=8 {
                assert_eq!(alpha_prime_power(a, 2, k).unwrap(), 1);
            }
        }
        assert_eq!(alpha_prime_power(3, 3, 2).unwrap(), 0);
        assert_eq!(beta_prime_power(2, 3, 4).unwrap(), 1);
        assert_eq!(beta_prime_power(2, 2, 5).unwrap(), 0);
        assert_eq!(beta_prime_power(3, 2, 5).unwrap(), 1);
        assert_eq!(beta_prime_power(10, 5, 2).unwrap(), 0);
        assert_eq!(alpha_prime_power(2, 4, 2), Err(Error::NotPrime(4)));
        assert!(matches!(
            alpha_prime_power(2, 3, 50),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn prime_power_values_are_stable_in_k() {
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
            for k in 1..=6u32 {
                let pk = p.pow(k);
                for a in -10..=30i64 {
                    assert_eq!(
                        alpha_prime_power(a, p, k).unwrap(),
                        orders::alpha(a, pk).unwrap()
                    );
                    assert_eq!(
                        beta_prime_power(a, p, k).unwrap(),
                        orders::beta(a, pk).unwrap()
                    );
                }
            }
        }
    }
}
