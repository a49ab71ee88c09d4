//! Partial-power-sum polynomials `S_n(x)` and `S_{n,a}(x)`.

use crate::arith::{binomial, Rational};
use crate::bernoulli::{bernoulli_number, bernoulli_poly};
use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Power `n` and offset `a ∈ (0, 1]` of a shifted partial sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialSumSpec {
    n: usize,
    a: Rational,
}

impl PartialSumSpec {
    pub fn new(n: usize, a: Rational) -> Result<Self> {
        check_offset(&a)?;
        Ok(PartialSumSpec { n, a })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }
}

pub(crate) fn check_offset(a: &Rational) -> Result<()> {
    if !a.is_positive() || *a > 1 {
        return Err(Error::OutOfRange {
            what: "offset a",
            detail: format!("{a} is not in (0, 1]"),
        });
    }
    Ok(())
}

/// `S_n(x)`, with `S_n(M) = Σ_{k=1}^{M-1} k^n`.
pub fn s_n(n: usize) -> Polynomial<Rational> {
    let b = bernoulli_poly(n + 1);
    let at_one = b.evaluate(&Rational::one());
    (&b - &Polynomial::constant(at_one)).scale(&Rational::frac(1, n as i64 + 1))
}

/// `S_{n,a}(x) = (B_{n+1}(x + a - 1) - B_{n+1}(a)) / (n + 1)`.
pub fn s_na(spec: &PartialSumSpec) -> Polynomial<Rational> {
    let b = bernoulli_poly(spec.n + 1);
    let at_a = b.evaluate(&spec.a);
    let shifted = b.shift(&(&spec.a - &Rational::one()));
    (&shifted - &Polynomial::constant(at_a)).scale(&Rational::frac(1, spec.n as i64 + 1))
}

/// `S_{n,a}(x)` rebuilt from the unshifted sums:
/// `a^n S_0(x) + Σ_{k<n} C(n,k) a^k S_{n-k}(x - 1)`.
pub fn s_na_recursive(spec: &PartialSumSpec) -> Polynomial<Rational> {
    let n = spec.n;
    let a = &spec.a;
    let mut acc = s_n(0).scale(&a.powu(n as u32));
    let minus_one = -Rational::one();
    for k in 0..n {
        let weight = Rational::from(binomial(n as u64, k as u64)) * a.powu(k as u32);
        acc = &acc + &s_n(n - k).shift(&minus_one).scale(&weight);
    }
    acc
}

/// `φ_k(x) = (-1)^{k+1} (B_{2k+2}(x) - B_{2k+2}) / (2k + 2)`, positive on `(0, 1)`.
pub fn phi(k: usize) -> Polynomial<Rational> {
    let m = 2 * k + 2;
    let sign = if k.is_multiple_of(2) { -1 } else { 1 };
    let b = &bernoulli_poly(m) - &Polynomial::constant(bernoulli_number(m));
    b.scale(&Rational::frac(sign, m as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn x_minus(c: i64) -> Polynomial<Rational> {
        Polynomial::from_ints(&[-c, 1])
    }

    #[test]
    fn small_sums() {
        let x = Polynomial::x();
        let half = q("1/2");
        assert_eq!(s_n(1), (&x_minus(1) * &x).scale(&half));
        let two_x_minus_one = Polynomial::from_ints(&[-1, 2]);
        assert_eq!(s_n(2), (&(&x_minus(1) * &x) * &two_x_minus_one).scale(&q("1/6")));
        let xx1 = &x * &x_minus(1);
        assert_eq!(s_n(3), (&xx1 * &xx1).scale(&q("1/4")));
        // S_6 = (x^7 - 7/2 x^6 + 7/2 x^5 - 7/6 x^3 + 1/6 x) / 7
        let s6 = Polynomial::new(
            ["0", "1/6", "0", "-7/6", "0", "7/2", "-7/2", "1"]
                .iter()
                .map(|s| q(s))
                .collect(),
        )
        .scale(&q("1/7"));
        assert_eq!(s_n(6), s6);
    }

    #[test]
    fn shifted_sums() {
        for a in ["1", "1/2", "1/3", "3/4"] {
            let spec = PartialSumSpec::new(0, q(a)).unwrap();
            assert_eq!(s_na(&spec), x_minus(1));
            assert_eq!(s_na_recursive(&spec), x_minus(1));
            // (2a + x - 2)(x - 1) / 2
            let spec1 = PartialSumSpec::new(1, q(a)).unwrap();
            let first = Polynomial::new(vec![&q(a) * &q("2") - q("2"), q("1")]);
            assert_eq!(s_na(&spec1), (&first * &x_minus(1)).scale(&q("1/2")));
        }
        // the S_{2,1/4} expansion from the χ₄ worked example
        let spec = PartialSumSpec::new(2, q("1/4")).unwrap();
        let x1 = x_minus(1);
        let x2 = x_minus(2);
        let expected = &(&x1.scale(&q("1/16")) + &(&x1 * &x2).scale(&q("1/4")))
            + &(&(&x1 * &x2) * &Polynomial::from_ints(&[-3, 2])).scale(&q("1/6"));
        assert_eq!(s_na(&spec), expected);
        assert_eq!(s_na_recursive(&spec), expected);
        assert_eq!(
            s_na_recursive(&PartialSumSpec::new(3, Rational::one()).unwrap()),
            s_n(3)
        );
    }

    #[test]
    fn offset_range() {
        assert!(PartialSumSpec::new(2, q("0")).is_err());
        assert!(PartialSumSpec::new(2, q("5/4")).is_err());
        assert!(PartialSumSpec::new(2, q("-1/2")).is_err());
        assert!(PartialSumSpec::new(2, q("1")).is_ok());
    }

    #[test]
    fn phi_is_positive_inside_unit_interval() {
        for k in 0..6 {
            let p = phi(k);
            for i in 1..20 {
                assert!(p.evaluate(&Rational::frac(i, 20)).is_positive(), "k = {k}, x = {i}/20");
            }
        }
    }
}
