//! Sweeps that check every order-lifting law against direct computation
//! over a bounded `(n, a)` grid.
//!
//! Each law is reported separately with its check count, failure count and
//! the first counterexample in grid order. Grid cells indexed by the modulus
//! are evaluated in parallel and merged in ascending order, so the report
//! does not depend on the worker count.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{self, gcd, lcm, pow_mod, v};
use crate::error::{Error, PairDefect};
use crate::lifting::{self, make_base_pair};
use crate::orders;

/// Primes up to this bound are used for the prime-power laws.
pub const PRIME_POWER_PRIME_LIMIT: u64 = 50;
/// Largest exponent `k` checked for the prime-power laws.
pub const PRIME_POWER_MAX_EXPONENT: u32 = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub name: &'static str,
    pub statement: &'static str,
    pub checks: u64,
    pub failures: u64,
    pub first_counterexample: Option<String>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub n_max: u64,
    pub a_max: u64,
    pub laws: Vec<LawReport>,
}

impl VerifyReport {
    pub fn total_checks(&self) -> u64 {
        self.laws.iter().map(|l| l.checks).sum()
    }

    pub fn total_failures(&self) -> u64 {
        self.laws.iter().map(|l| l.failures).sum()
    }

    pub fn passed(&self) -> bool {
        self.total_failures() == 0
    }

    pub fn law(&self, name: &str) -> Option<&LawReport> {
        self.laws.iter().find(|l| l.name == name)
    }
}

#[derive(Debug, Default, Clone)]
struct Tally {
    checks: u64,
    failures: u64,
    first: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, context: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(context());
            }
        }
    }

    fn absorb(&mut self, later: Tally) {
        self.checks += later.checks;
        self.failures += later.failures;
        if self.first.is_none() {
            self.first = later.first;
        }
    }
}

macro_rules! laws {
    ($( $field:ident => ($name:literal, $statement:literal) ),* $(,)?) => {
        #[derive(Debug, Default, Clone)]
        struct Tallies { $( $field: Tally, )* }

        impl Tallies {
            fn absorb(&mut self, later: Tallies) {
                $( self.$field.absorb(later.$field); )*
            }

            fn into_reports(self) -> Vec<LawReport> {
                vec![$( LawReport {
                    name: $name,
                    statement: $statement,
                    checks: self.$field.checks,
                    failures: self.$field.failures,
                    first_counterexample: self.$field.first,
                }, )*]
            }
        }
    };
}

laws! {
    alpha_oracle => ("alpha-oracle-equivalence", "alpha_fast = alpha = exponent-scan alpha"),
    beta_oracle => ("beta-oracle-equivalence", "beta_fast = beta = exponent-scan beta"),
    order_structure => ("order-structure", "a^O = 1, a^(O/q) != 1 for q | O, O | phi(n), PO in {O, O/2}"),
    order_lifting => ("order-lifting", "O_n1(a) = O_n2(a) n1 / gcd(n1, R_n2(a)) on valid pairs"),
    alpha_lifting => ("alpha-lifting", "alpha_n1 = alpha_n2 / gcd(alpha_n2, gcd(n1, R_n2)/n2) on valid pairs"),
    beta_lifting => ("beta-lifting", "beta_n1 = beta_n2 / gcd(beta_n2, gcd(n1, R_n2)/n2) on valid pairs"),
    excluded_pair => ("excluded-pair-rejected", "4 | n1 and n2 = rad(n1) is rejected; (24, 6, a=7) formula gives 4 != 2"),
    alpha_divides_base => ("alpha-divides-base", "rad(n1) | n2 | n1 implies alpha_n1(a) | alpha_n2(a)"),
    coprime_lcm => ("coprime-lcm", "gcd(m, n) = 1 implies alpha_mn(a) | lcm(alpha_m(a), alpha_n(a))"),
    alpha_prime_power => ("alpha-prime-power", "alpha_{p^k}(a) = O_p(a) for all k"),
    beta_prime_power => ("beta-prime-power", "beta_{p^k}(a) = beta_p(a) for all k"),
    ratio_transfer => ("ratio-transfer", "same radical, v2 <= 1: alpha/beta agree; v2 >= 2: alpha = beta"),
    alternative => ("alpha-beta-alternative", "alpha_n(a) in {beta_n(a), 2 beta_n(a)}"),
    phi_quotient => ("alpha-divides-phi-quotient", "alpha_n(a) | phi(n) / gcd(phi(n), n)"),
    prime_power_orders => ("odd-prime-power-orders", "O_{p^k}(a) = d p^max(0, k - k0), k0 = v_p(R_p(a))"),
}

fn divides(d: u64, m: u64) -> bool {
    m == 0 || (d != 0 && m.is_multiple_of(d))
}

fn sweep_modulus(n: u64, a_max: u64, radical_classes: &BTreeMap<u64, Vec<u64>>) -> Tallies {
    let mut t = Tallies::default();
    let a_max = a_max as i64;
    let factorization = arith::factorize(n).expect("n > 0");
    let rad = factorization.radical();
    let phi = factorization.euler_phi();
    let divisors = factorization.divisors();

    for a in -a_max..=a_max {
        let al = orders::alpha(a, n).unwrap();
        let be = orders::beta(a, n).unwrap();
        let al_fast = lifting::alpha_fast(a, n).unwrap();
        let be_fast = lifting::beta_fast(a, n).unwrap();
        let al_scan = orders::alpha_oracle(a, n).unwrap();
        let be_scan = orders::beta_oracle(a, n).unwrap();
        t.alpha_oracle.check(al == al_fast && al == al_scan, || {
            format!("n={n} a={a}: alpha={al} alpha_fast={al_fast} scan={al_scan}")
        });
        t.beta_oracle.check(be == be_fast && be == be_scan, || {
            format!("n={n} a={a}: beta={be} beta_fast={be_fast} scan={be_scan}")
        });

        let coprime = gcd(a.unsigned_abs(), n) == 1;
        t.alternative.check(
            if coprime {
                al == be || al == 2 * be
            } else {
                al == 0 && be == 0
            },
            || format!("n={n} a={a}: alpha={al} beta={be}"),
        );
        if coprime {
            let quotient = phi / gcd(phi, n);
            t.phi_quotient.check(divides(al, quotient), || {
                format!("n={n} a={a}: alpha={al} does not divide {quotient}")
            });

            let rec = orders::mult_order(a, n).unwrap();
            let d = rec.order();
            let b = rec.base();
            let one = 1 % n;
            let minimal = arith::factorize(d)
                .unwrap()
                .primes()
                .all(|q| pow_mod(b, d / q, n) != one);
            let po = orders::proj_order(a, n).unwrap();
            t.order_structure.check(
                pow_mod(b, d, n) == one
                    && minimal
                    && phi.is_multiple_of(d)
                    && (po == d || 2 * po == d),
                || format!("n={n} a={a}: order={d} proj_order={po}"),
            );
        }

        for &n2 in divisors.iter().filter(|&&n2| n2 % rad == 0) {
            let al2 = orders::alpha(a, n2).unwrap();
            t.alpha_divides_base.check(divides(al, al2), || {
                format!("n1={n} n2={n2} a={a}: alpha_n1={al} alpha_n2={al2}")
            });
        }

        for &m in divisors.iter().take_while(|&&m| m * m <= n) {
            let k = n / m;
            if gcd(m, k) != 1 {
                continue;
            }
            let (am, ak) = (orders::alpha(a, m).unwrap(), orders::alpha(a, k).unwrap());
            let bound = lcm(am, ak);
            t.coprime_lcm.check(divides(al, bound), || {
                format!("m={m} n={k} a={a}: alpha_mn={al} lcm={bound}")
            });
        }
    }

    // lifting theorems over every valid pair
    let valid: Vec<_> = divisors
        .iter()
        .filter_map(|&n2| make_base_pair(n, n2).ok())
        .collect();
    for a in (1..=a_max).filter(|&a| gcd(a as u64, n) == 1) {
        let order = orders::mult_order(a, n).unwrap().order();
        let al = orders::alpha(a, n).unwrap();
        let be = orders::beta(a, n).unwrap();
        for pair in &valid {
            let n2 = pair.n2();
            let lifted = lifting::lift_order(pair, a);
            t.order_lifting.check(lifted == Ok(order), || {
                format!("n1={n} n2={n2} a={a}: lifted={lifted:?} direct={order}")
            });
            let lifted = lifting::lift_alpha(pair, a);
            t.alpha_lifting.check(lifted == Ok(al), || {
                format!("n1={n} n2={n2} a={a}: lifted={lifted:?} direct={al}")
            });
            let lifted = lifting::lift_beta(pair, a);
            t.beta_lifting.check(lifted == Ok(be), || {
                format!("n1={n} n2={n2} a={a}: lifted={lifted:?} direct={be}")
            });
        }
    }

    if v(n, 2) >= 2 {
        let rejected = make_base_pair(n, rad);
        t.excluded_pair.check(
            matches!(
                rejected,
                Err(Error::InvalidPair {
                    reason: PairDefect::TwoAdicCaseViolated,
                    ..
                })
            ),
            || format!("n1={n} n2={rad}: {rejected:?}"),
        );
        if n == 24 && a_max >= 7 {
            let formula = lifting::order_formula_unchecked(7, 24, 6);
            let direct = orders::mult_order(7, 24).map(|r| r.order());
            t.excluded_pair
                .check(formula == Ok(4) && direct == Ok(2), || {
                    format!("n1=24 n2=6 a=7: formula={formula:?} direct={direct:?}")
                });
        }
    }

    // ratio transfer against every partner with the same radical
    let two_adic = v(n, 2);
    for a in (1..=a_max).filter(|&a| gcd(a as u64, n) == 1) {
        let al = orders::alpha(a, n).unwrap();
        let be = orders::beta(a, n).unwrap();
        if two_adic >= 2 {
            t.ratio_transfer.check(al == be, || {
                format!("n={n} a={a}: v2>=2 but alpha={al} beta={be}")
            });
            continue;
        }
        for &n2 in &radical_classes[&rad] {
            if n2 == n || v(n2, 2) >= 2 {
                continue;
            }
            let al2 = orders::alpha(a, n2).unwrap();
            let be2 = orders::beta(a, n2).unwrap();
            t.ratio_transfer.check(al * be2 == al2 * be, || {
                format!("n1={n} n2={n2} a={a}: {al}/{be} vs {al2}/{be2}")
            });
        }
    }
    t
}

fn sweep_prime(p: u64, a_max: u64) -> Tallies {
    let mut t = Tallies::default();
    let a_max = a_max as i64;
    for a in -a_max..=a_max {
        let al1 = lifting::alpha_prime_power(a, p, 1).unwrap();
        let be1 = lifting::beta_prime_power(a, p, 1).unwrap();
        for k in 1..=PRIME_POWER_MAX_EXPONENT {
            let pk = p.pow(k);
            let (al_k, al_direct) = (
                lifting::alpha_prime_power(a, p, k).unwrap(),
                orders::alpha(a, pk).unwrap(),
            );
            t.alpha_prime_power
                .check(al_k == al1 && al_k == al_direct, || {
                    format!("p={p} k={k} a={a}: formula={al_k} direct={al_direct} k=1:{al1}")
                });
            let (be_k, be_direct) = (
                lifting::beta_prime_power(a, p, k).unwrap(),
                orders::beta(a, pk).unwrap(),
            );
            t.beta_prime_power
                .check(be_k == be1 && be_k == be_direct, || {
                    format!("p={p} k={k} a={a}: formula={be_k} direct={be_direct} k=1:{be1}")
                });
        }
    }

    if p == 2 {
        return t;
    }
    // largest power of p that fits, to read off k0 = v_p(R_p(a))
    let mut ceiling = p;
    let mut ceiling_exp = 1u32;
    while let Some(next) = ceiling.checked_mul(p) {
        ceiling = next;
        ceiling_exp += 1;
    }
    for a in (2..=a_max).filter(|&a| !(a as u64).is_multiple_of(p)) {
        let d = orders::mult_order(a, p).unwrap().order();
        let k0 = v(orders::remainder_gcd(a, p, ceiling).unwrap(), p);
        for k in 1..=PRIME_POWER_MAX_EXPONENT {
            let direct = orders::mult_order(a, p.pow(k)).unwrap().order();
            let predicted = d * p.pow(k.saturating_sub(k0));
            t.prime_power_orders
                .check(k0 < ceiling_exp && direct == predicted, || {
                    format!(
                        "p={p} a={a} k={k}: direct={direct} predicted={predicted} (d={d}, k0={k0})"
                    )
                });
        }
    }
    t
}

/// Runs every law over `1 <= n <= n_max` and `|a| <= a_max` on the global
/// rayon pool.
pub fn verify_claims(n_max: u64, a_max: u64) -> VerifyReport {
    let radical_classes = radical_classes(n_max);
    let mut total = (1..=n_max)
        .into_par_iter()
        .map(|n| sweep_modulus(n, a_max, &radical_classes))
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Tallies::default(), |mut acc, t| {
            acc.absorb(t);
            acc
        });
    let primes: Vec<u64> = (2..=PRIME_POWER_PRIME_LIMIT.min(n_max))
        .filter(|&p| arith::is_prime(p))
        .collect();
    for t in primes
        .par_iter()
        .map(|&p| sweep_prime(p, a_max))
        .collect::<Vec<_>>()
    {
        total.absorb(t);
    }
    VerifyReport {
        n_max,
        a_max,
        laws: total.into_reports(),
    }
}

/// [`verify_claims`] on a dedicated pool of `workers` threads (0 picks the
/// rayon default).
pub fn verify_claims_with_workers(n_max: u64, a_max: u64, workers: usize) -> VerifyReport {
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(|| verify_claims(n_max, a_max)),
        Err(_) => verify_claims(n_max, a_max),
    }
}

fn radical_classes(n_max: u64) -> BTreeMap<u64, Vec<u64>> {
    let mut classes: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for n in 1..=n_max {
        classes
            .entry(arith::radical(n).unwrap())
            .or_default()
            .push(n);
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_is_clean() {
        let report = verify_claims(50, 10);
        for law in &report.laws {
            assert!(law.passed(), "{}: {:?}", law.name, law.first_counterexample);
            assert!(law.checks > 0, "{} ran no checks", law.name);
        }
    }

    #[test]
    fn vacuous_sweep_passes() {
        let report = verify_claims(1, 1);
        assert!(report.passed());
        assert_eq!(report.law("odd-prime-power-orders").unwrap().checks, 0);
    }

    #[test]
    fn counterexample_is_exercised_at_24() {
        let report = verify_claims(24, 7);
        assert!(report.passed());
        // n1 = 4, 8, 12, 16, 20, 24 plus the explicit (24, 6, 7) check
        assert_eq!(report.law("excluded-pair-rejected").unwrap().checks, 7);
    }

    #[test]
    fn report_is_independent_of_worker_count() {
        let one = verify_claims_with_workers(120, 8, 1);
        let four = verify_claims_with_workers(120, 8, 4);
        assert_eq!(one, four);
    }

    #[test]
    fn tally_keeps_first_counterexample() {
        let mut a = Tally::default();
        a.check(true, || "x".into());
        let mut b = Tally::default();
        b.check(false, || "first".into());
        let mut c = Tally::default();
        c.check(false, || "second".into());
        a.absorb(b);
        a.absorb(c);
        assert_eq!((a.checks, a.failures), (3, 2));
        assert_eq!(a.first.as_deref(), Some("first"));
    }

    #[test]
    fn literal_ratio_transfer_fails_when_partner_has_v2_at_least_two() {
        // why the law restricts both moduli to v2 <= 1
        let (a, n1, n2) = (3, 10, 20);
        let lhs = orders::alpha(a, n1).unwrap() * orders::beta(a, n2).unwrap();
        let rhs = orders::alpha(a, n2).unwrap() * orders::beta(a, n1).unwrap();
        assert_eq!((lhs, rhs), (2, 1));
    }
}
