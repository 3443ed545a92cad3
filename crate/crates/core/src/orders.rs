//! Direct computation of multiplicative and projective orders, and of the
//! order functions `alpha_n(a) = O_n(a^n)` and `beta_n(a) = PO_n(a^n)`.
//!
//! `R_n(a) = a^{O_n(a)} - 1` outgrows any fixed width quickly, so it is
//! never formed. Callers only ever need `gcd(n1, R_{n2}(a))`, which equals
//! `gcd(n1, (a^{O_{n2}(a)} - 1) mod n1)`; see [`remainder_gcd`].

use crate::arith::{self, gcd, pow_mod, reduce};
use crate::error::{Error, Result};

/// `O_n(a)` together with the modulus and reduced base it was computed for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrderRecord {
    modulus: u64,
    base: u64,
    order: u64,
}

impl OrderRecord {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// The base reduced into `[0, modulus)`.
    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// `gcd(n1, R_modulus(base))` for a multiple `n1` of the modulus, where
    /// `base` is the reduced representative in `[0, modulus)`.
    pub fn remainder_gcd(&self, n1: u64) -> Result<u64> {
        if n1 == 0 {
            return Err(Error::ZeroModulus);
        }
        if !n1.is_multiple_of(self.modulus) {
            return Err(Error::InvalidPair {
                n1,
                n2: self.modulus,
                reason: crate::PairDefect::NotDivisor,
            });
        }
        let t = pow_mod(self.base % n1, self.order, n1);
        Ok(gcd(minus_one_mod(t, n1), n1))
    }
}

// (t - 1) mod n for t in [0, n)
fn minus_one_mod(t: u64, n: u64) -> u64 {
    if t == 0 {
        n - 1
    } else {
        t - 1
    }
}

fn check_coprime(a: i64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    if gcd(a.unsigned_abs(), n) != 1 {
        return Err(Error::NotCoprime { a, n });
    }
    Ok(reduce(a, n))
}

/// Order of a reduced unit `b` modulo `n`, by stripping prime factors off
/// `phi(n)` while the congruence still holds.
pub(crate) fn unit_order(b: u64, n: u64) -> u64 {
    if n <= 2 {
        return 1;
    }
    let phi = arith::factorize(n).expect("n > 0").euler_phi();
    let mut order = phi;
    for &(q, e) in arith::factorize(phi).expect("phi > 0").factors() {
        for _ in 0..e {
            if pow_mod(b, order / q, n) == 1 {
                order /= q;
            } else {
                break;
            }
        }
    }
    order
}

/// Projective order of a reduced unit `b` modulo `n`.
pub(crate) fn unit_proj_order(b: u64, n: u64) -> u64 {
    let d = unit_order(b, n);
    if n > 2 && d.is_multiple_of(2) && pow_mod(b, d / 2, n) == n - 1 {
        d / 2
    } else {
        d
    }
}

/// `O_n(a)`, the least `e >= 1` with `a^e = 1 (mod n)`.
pub fn mult_order(a: i64, n: u64) -> Result<OrderRecord> {
    let base = check_coprime(a, n)?;
    Ok(OrderRecord {
        modulus: n,
        base,
        order: unit_order(base, n),
    })
}

/// `gcd(n1, R_{n2}(a))` for `n2 | n1`, without materializing `R_{n2}(a)`.
///
/// The result is always a multiple of `n2` and a divisor of `n1`.
pub fn remainder_gcd(a: i64, n2: u64, n1: u64) -> Result<u64> {
    check_coprime(a, n1)?;
    if n2 == 0 {
        return Err(Error::ZeroModulus);
    }
    if !n1.is_multiple_of(n2) {
        return Err(Error::InvalidPair {
            n1,
            n2,
            reason: crate::PairDefect::NotDivisor,
        });
    }
    let order = unit_order(reduce(a, n2), n2);
    let t = pow_mod(reduce(a, n1), order, n1);
    Ok(gcd(minus_one_mod(t, n1), n1))
}

/// `PO_n(a)`, the least `e >= 1` with `a^e = +-1 (mod n)`.
pub fn proj_order(a: i64, n: u64) -> Result<u64> {
    let b = check_coprime(a, n)?;
    Ok(unit_proj_order(b, n))
}

/// `alpha_n(a)`: `O_n(a^n)` when `gcd(a, n) = 1`, else 0.
pub fn alpha(a: i64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    if gcd(a.unsigned_abs(), n) != 1 {
        return Ok(0);
    }
    let d = unit_order(reduce(a, n), n);
    Ok(d / gcd(d, n))
}

/// `beta_n(a)`: `PO_n(a^n)` when `gcd(a, n) = 1`, else 0.
pub fn beta(a: i64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    if gcd(a.unsigned_abs(), n) != 1 {
        return Ok(0);
    }
    let an = pow_mod(reduce(a, n), n, n);
    Ok(unit_proj_order(an, n))
}

// Plain exponent scan: least e >= 1 with `hits(x^e)`.
fn scan_order(x: u64, n: u64, hits: impl Fn(u64) -> bool) -> u64 {
    let mut acc = x;
    let mut e = 1;
    while !hits(acc) {
        acc = ((acc as u128 * x as u128) % n as u128) as u64;
        e += 1;
        debug_assert!(e <= n, "no unit power reached 1");
    }
    e
}

/// `alpha_n(a)` by literal exponent iteration on `a^n`. Verification only.
pub fn alpha_oracle(a: i64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    if gcd(a.unsigned_abs(), n) != 1 {
        return Ok(0);
    }
    let an = pow_mod(reduce(a, n), n, n);
    let one = 1 % n;
    Ok(scan_order(an, n, |x| x == one))
}

/// `beta_n(a)` by literal exponent iteration on `a^n`. Verification only.
pub fn beta_oracle(a: i64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    if gcd(a.unsigned_abs(), n) != 1 {
        return Ok(0);
    }
    let an = pow_mod(reduce(a, n), n, n);
    let one = 1 % n;
    let minus_one = n - 1;
    Ok(scan_order(an, n, |x| x == one || x == minus_one))
}
