//! Congruences for generalized Bernoulli numbers of quadratic characters.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use rayon::prelude::*;

use crate::arith::{is_odd_prime, mod_pow, vp, PAdicValuation, Rational};
use crate::dirichlet::{generalized_bernoulli_number, quadratic_character, DirichletCharacter};
use crate::error::{Error, Result};
use crate::verify::VerificationReport;

/// `Σ_{a=1}^{p} a^r mod p`, by direct summation.
pub fn power_sum_mod_p(p: u64, r: u64) -> Result<u64> {
    if !is_odd_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if r == 0 {
        return Err(Error::OutOfRange {
            what: "r",
            detail: "exponent must be positive".into(),
        });
    }
    Ok((1..=p).fold(0, |acc, a| (acc + mod_pow(a, r, p)) % p))
}

/// Reduces `q` modulo `m`, if its denominator is a unit mod `m`.
pub fn rational_mod(q: &Rational, m: u64) -> Option<u64> {
    let m = BigInt::from(m);
    let inv = q.denom().modinv(&m)?;
    let r = (q.numer() * inv) % &m;
    let r = if r.is_negative() { r + &m } else { r };
    r.to_u64()
}

fn character_residue(chi: &DirichletCharacter<Rational>, a: u64, m: u64) -> u64 {
    rational_mod(chi.value(a as i64), m).expect("quadratic character values are integers")
}

/// `Σ_{a=1}^{upto} χ(a) a^n mod m`, by direct summation.
fn twisted_power_sum(chi: &DirichletCharacter<Rational>, n: u64, upto: u64, m: u64) -> u64 {
    (1..=upto).fold(0, |acc, a| {
        let term = character_residue(chi, a, m) as u128 * mod_pow(a, n, m) as u128 % m as u128;
        (acc + term as u64) % m
    })
}

/// Checks `p² B_{n,χ} ≡ Σ_{a ≤ p²} χ(a) aⁿ (mod p²)` for the quadratic
/// character mod `p`, together with the intermediate reductions.
pub fn congruence_p2(p: u64, n: usize) -> Result<VerificationReport> {
    let chi = quadratic_character(p)?;
    let mut report = VerificationReport::new("congruence-p2");
    let params = format!("p={p} n={n}");
    let p2 = p * p;
    let nn = n as u64;
    let half = (p - 1) / 2;

    let brute = twisted_power_sum(&chi, nn, p2, p2);
    let scaled = generalized_bernoulli_number(&chi, n) * Rational::from(p2);
    match rational_mod(&scaled, p2) {
        Some(lhs) => {
            report.record("p2_bernoulli_congruence", &params, &lhs, &brute);
            let expected = if nn % (p - 1) == half { p2 - p } else { 0 };
            report.record("p2_bernoulli_pattern", &params, &lhs, &expected);
        }
        None => report.record_failure(
            "p2_bernoulli_congruence",
            &params,
            &format!("{scaled} is not p-integral"),
        ),
    }

    let short = twisted_power_sum(&chi, nn, p, p2);
    report.record("p2_sum_reduction", &params, &brute, &(p * short % p2));

    let short_mod_p = twisted_power_sum(&chi, nn, p, p);
    report.record(
        "euler_criterion_sum",
        &params,
        &short_mod_p,
        &power_sum_mod_p(p, nn + half)?,
    );
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    IntegerBranch,
    PoleBranch,
    ParityZero,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::IntegerBranch => "integer_branch",
            Branch::PoleBranch => "pole_branch",
            Branch::ParityZero => "parity_zero",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropA1Verdict {
    pub p: u64,
    pub n: usize,
    pub branch: Branch,
    pub b_value: Rational,
    pub holds: bool,
}

/// Classifies `B_{n,χ}` for the quadratic character mod `p`, `n ≤ n_max`,
/// and checks the integrality / valuation statement of each branch.
pub fn check_prop_a1(p: u64, n_max: usize) -> Result<Vec<PropA1Verdict>> {
    let chi = quadratic_character(p)?;
    let delta = chi.parity().delta();
    let half = (p - 1) / 2;
    Ok((0..=n_max)
        .into_par_iter()
        .map(|n| {
            let b = generalized_bernoulli_number(&chi, n);
            let (branch, holds) = if n % 2 != delta {
                (Branch::ParityZero, b.is_zero())
            } else if n as u64 % (p - 1) != half {
                let p_integral = vp(&b, p).map(|v| v >= PAdicValuation::Finite(0)).unwrap_or(false);
                (Branch::IntegerBranch, p_integral && b.is_integer())
            } else {
                let pole = vp(&b, p).ok() == Some(PAdicValuation::Finite(-1));
                let scaled = &b * Rational::from(p);
                let residue = scaled.is_integer().then(|| rational_mod(&scaled, p)).flatten();
                (Branch::PoleBranch, pole && residue == Some(p - 1))
            };
            PropA1Verdict {
                p,
                n,
                branch,
                b_value: b,
                holds,
            }
        })
        .collect())
}

/// [`check_prop_a1`] for several primes, as a report. Also checks
/// `(p-1)/2 ≡ δ_χ (mod 2)` for each prime.
pub fn prop_a1_report(primes: &[u64], n_max: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("prop-a1");
    for &p in primes {
        let chi = quadratic_character(p)?;
        let half = ((p - 1) / 2) as usize;
        report.record("parity_symbol", &format!("p={p}"), &(half % 2), &chi.parity().delta());
        for v in check_prop_a1(p, n_max)? {
            report.record_bool(
                &format!("prop_a1_{}", v.branch),
                &format!("p={} n={}", v.p, v.n),
                v.holds,
                &v.b_value.to_string(),
            );
        }
    }
    Ok(report)
}

/// Whether `b` is a nonzero integer multiple of `1/p` with numerator ≡ -1 mod p.
pub fn is_pole_value(b: &Rational, p: u64) -> bool {
    let scaled = b * Rational::from(p);
    scaled.is_integer() && !scaled.is_zero() && {
        let r = scaled.numer() % BigInt::from(p);
        r == BigInt::from(p) - BigInt::one() || r == -BigInt::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn power_sums() {
        assert_eq!(power_sum_mod_p(5, 4).unwrap(), 4);
        assert_eq!(power_sum_mod_p(5, 3).unwrap(), 0);
        assert_eq!(power_sum_mod_p(3, 2).unwrap(), 2);
        assert!(power_sum_mod_p(4, 1).is_err());
        assert!(power_sum_mod_p(2, 1).is_err());
        assert!(power_sum_mod_p(5, 0).is_err());
    }

    #[test]
    fn rational_residues() {
        assert_eq!(rational_mod(&q("-1"), 7), Some(6));
        assert_eq!(rational_mod(&q("1/2"), 5), Some(3));
        assert_eq!(rational_mod(&q("1/5"), 25), None);
    }

    #[test]
    fn p2_examples() {
        for (p, n) in [(5, 2), (3, 3), (7, 3)] {
            let report = congruence_p2(p, n).unwrap();
            assert!(report.all_passed(), "{report}");
        }
        let r = congruence_p2(7, 3).unwrap();
        let c = r
            .checks()
            .iter()
            .find(|c| c.identity == "p2_bernoulli_congruence")
            .unwrap();
        assert_eq!(c.lhs, (336 % 49).to_string());
    }

    #[test]
    fn prop_a1_examples() {
        let v = &check_prop_a1(11, 5).unwrap()[5];
        assert_eq!((v.branch, v.holds), (Branch::PoleBranch, true));
        assert_eq!(v.b_value, q("-12750/11"));
        let v = &check_prop_a1(19, 9).unwrap()[9];
        assert_eq!((v.branch, v.holds), (Branch::PoleBranch, true));
        assert_eq!(v.b_value, q("-66751985430/19"));
        let v = &check_prop_a1(7, 7).unwrap()[7];
        assert_eq!((v.branch, v.holds), (Branch::IntegerBranch, true));
        assert_eq!(v.b_value, q("8176"));
        let v = &check_prop_a1(3, 1).unwrap()[1];
        assert_eq!((v.branch, v.b_value.clone()), (Branch::PoleBranch, q("-1/3")));
        assert!(is_pole_value(&q("-12750/11"), 11));
        assert!(!is_pole_value(&q("8176"), 7));
    }

    #[test]
    fn prop_a1_table_primes() {
        let report = prop_a1_report(&[3, 5, 7, 11, 13], 12).unwrap();
        assert!(report.all_passed(), "{report}");
        assert!(check_prop_a1(9, 3).is_err());
    }
}
