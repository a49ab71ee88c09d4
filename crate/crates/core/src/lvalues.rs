//! Special values at non-positive integers, each reachable by at least two
//! independent routes.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::arith::{binomial, Rational, Scalar};
use crate::bernoulli::{bernoulli_number, bernoulli_poly, euler_number, euler_poly, EulerParameter};
use crate::dirichlet::{
    chi4, generalized_bernoulli_number, generalized_bernoulli_poly, tilde_bernoulli_poly, DirichletCharacter,
};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::sums::{check_offset, s_n, s_na, PartialSumSpec};
use crate::verify::VerificationReport;

/// `coefficient · π^power`, kept exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiPower {
    pub coefficient: Rational,
    pub power: u32,
}

impl fmt::Display for PiPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.power {
            0 => write!(f, "{}", self.coefficient),
            p => write!(f, "{}*pi^{p}", self.coefficient),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    ClosedForm,
    Integral,
    EulerPoly,
    HurwitzScaled,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::ClosedForm => "closed_form",
            Route::Integral => "integral",
            Route::EulerPoly => "euler_poly",
            Route::HurwitzScaled => "hurwitz_scaled",
        })
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace('-', "_").as_str() {
            "closed_form" => Ok(Route::ClosedForm),
            "integral" => Ok(Route::Integral),
            "euler_poly" => Ok(Route::EulerPoly),
            "hurwitz_scaled" => Ok(Route::HurwitzScaled),
            _ => Err(Error::Parse(format!("unknown route {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ValueParams {
    pub n: usize,
    pub a: Option<Rational>,
    pub character: Option<String>,
}

/// A special value together with the route that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct SpecialValueResult<S: Scalar> {
    pub value: S,
    pub route: Route,
    pub params: ValueParams,
}

fn unsupported<T>(route: Route, family: &str) -> Result<T> {
    Err(Error::Hypothesis(format!(
        "route {route} is not available for {family}"
    )))
}

fn inv(n: usize) -> Rational {
    Rational::frac(1, n as i64)
}

/// ζ(-n, a) = -B_{n+1}(a)/(n+1).
pub fn hurwitz_neg(n: usize, a: &Rational) -> Result<Rational> {
    check_offset(a)?;
    Ok(-bernoulli_poly(n + 1).evaluate(a) * inv(n + 1))
}

/// ζ(-n, a) = ∫_{1-a}^{2-a} S_{n,a}(x) dx.
pub fn hurwitz_neg_integral(n: usize, a: &Rational) -> Result<Rational> {
    let spec = PartialSumSpec::new(n, a.clone())?;
    let lo = Rational::one() - a;
    let hi = Rational::from(2) - a;
    Ok(s_na(&spec).integrate(&lo, &hi))
}

/// ζ(-n) from the Bernoulli numbers.
pub fn riemann_neg(n: usize) -> Rational {
    match n {
        0 => Rational::frac(-1, 2),
        _ if n.is_multiple_of(2) => Rational::zero(),
        _ => -bernoulli_number(n + 1) * inv(n + 1),
    }
}

/// ζ(-n) = ∫_0^1 S_n(x) dx.
pub fn riemann_neg_integral(n: usize) -> Rational {
    s_n(n).integrate(&Rational::zero(), &Rational::one())
}

/// ζ(2n) = (-1)^{n+1} (2π)^{2n} B_{2n} / (2 (2n)!).
pub fn zeta_even_positive(n: usize) -> Result<PiPower> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "n",
            detail: "zeta_even_positive needs n >= 1".into(),
        });
    }
    let m = 2 * n;
    let factorial: Rational = (1..=m as i64).map(Rational::from).product();
    let sign = if n % 2 == 1 { Rational::one() } else { -Rational::one() };
    let coefficient = sign * Rational::from(2).powu(m as u32) * bernoulli_number(m) / (Rational::from(2) * factorial);
    Ok(PiPower {
        coefficient,
        power: m as u32,
    })
}

fn require_nontrivial<S: Scalar>(chi: &DirichletCharacter<S>) -> Result<()> {
    if chi.is_trivial() {
        return Err(Error::Hypothesis(format!(
            "{} is trivial; use riemann_neg for ζ(-n)",
            chi.label()
        )));
    }
    Ok(())
}

/// L(-n, χ) = -B_{n+1,χ}/(n+1) for non-trivial χ.
pub fn l_neg<S: Scalar>(chi: &DirichletCharacter<S>, n: usize) -> Result<S> {
    require_nontrivial(chi)?;
    Ok(generalized_bernoulli_number(chi, n + 1).scale(&-inv(n + 1)))
}

/// L(-n, χ) = k^n Σ_r χ(r) ζ(-n, r/k).
pub fn l_neg_hurwitz<S: Scalar>(chi: &DirichletCharacter<S>, n: usize) -> Result<S> {
    let k = chi.modulus() as i64;
    let mut acc = S::zero_in(&chi.ring());
    for r in 1..=k {
        let v = chi.value(r);
        if v.is_zero() {
            continue;
        }
        acc = acc.try_add(&v.scale(&hurwitz_neg(n, &Rational::frac(r, k))?))?;
    }
    Ok(acc.scale(&Rational::from(k).powu(n as u32)))
}

/// `S_{n,χ}(x) = k^n Σ_r χ(r) S_{n,r/k}(x + 1 - r/k)`.
pub fn s_n_chi<S: Scalar>(chi: &DirichletCharacter<S>, n: usize) -> Polynomial<S> {
    twisted_partial_sum(chi, n, &Rational::one())
}

/// `S_{n,a,χ}(x) = k^n Σ_r χ(r) S_{n,b_r}(x + 1 - b_r)` with `b_r = (r + a - 1)/k`.
pub fn twisted_partial_sum<S: Scalar>(chi: &DirichletCharacter<S>, n: usize, a: &Rational) -> Polynomial<S> {
    let k = chi.modulus() as i64;
    let mut acc = Polynomial::zero_in(&chi.ring());
    for r in 1..=k {
        let v = chi.value(r);
        if v.is_zero() {
            continue;
        }
        let b = (Rational::from(r) + a - Rational::one()) / Rational::from(k);
        let spec = PartialSumSpec::new(n, b.clone()).expect("offset in (0, 1]");
        let piece = s_na(&spec).shift(&(Rational::one() - &b));
        acc = &acc + &piece.times(v);
    }
    acc.scale(&Rational::from(k).powu(n as u32))
}

/// L(-n, χ) = ∫_0^1 S_{n,χ}(x) dx.
pub fn l_neg_integral<S: Scalar>(chi: &DirichletCharacter<S>, n: usize) -> S {
    s_n_chi(chi, n).integrate(&Rational::zero(), &Rational::one())
}

/// `P_{n,χ}(x) = (B_{n+1,χ}(kx) - B_{n+1,χ}) / (n+1)`, so `P_{n,χ}(M) = Σ_{r ≤ Mk} χ(r) r^n`.
pub fn p_n_chi<S: Scalar>(chi: &DirichletCharacter<S>, n: usize) -> Polynomial<S> {
    let b = generalized_bernoulli_poly(chi, n + 1);
    let b0 = b.evaluate(&Rational::zero());
    let stretched = b.scale_arg(&Rational::from(chi.modulus()));
    (&stretched - &Polynomial::constant(b0)).scale(&inv(n + 1))
}

/// L(-n, χ) = ∫_{-1/2}^{1/2} P_{n,χ}(x) dx, valid when χ and n have the same parity.
pub fn l_neg_via_p<S: Scalar>(chi: &DirichletCharacter<S>, n: usize) -> Result<S> {
    if chi.parity().delta() != n % 2 {
        return Err(Error::Hypothesis(format!(
            "parity: {} is {} but n = {n} is {}",
            chi.label(),
            chi.parity(),
            crate::dirichlet::Parity::of_integer(n)
        )));
    }
    let half = Rational::frac(1, 2);
    Ok(p_n_chi(chi, n).integrate(&-&half, &half))
}

fn require_twist_hypotheses<S: Scalar>(chi: &DirichletCharacter<S>, a: &Rational) -> Result<()> {
    require_nontrivial(chi)?;
    if !chi.is_primitive() {
        return Err(Error::Hypothesis(format!("{} is not primitive", chi.label())));
    }
    check_offset(a)
}

/// L(-n, a, χ) = -B̃_{n+1,χ}(a)/(n+1) for primitive non-trivial χ.
pub fn twisted_l_neg<S: Scalar>(chi: &DirichletCharacter<S>, n: usize, a: &Rational) -> Result<S> {
    require_twist_hypotheses(chi, a)?;
    Ok(tilde_bernoulli_poly(chi, n + 1).evaluate(a).scale(&-inv(n + 1)))
}

/// L(-n, a, χ) = k^n Σ_r χ(r) ζ(-n, (r + a - 1)/k).
pub fn twisted_l_neg_hurwitz<S: Scalar>(chi: &DirichletCharacter<S>, n: usize, a: &Rational) -> Result<S> {
    require_twist_hypotheses(chi, a)?;
    let k = chi.modulus() as i64;
    let mut acc = S::zero_in(&chi.ring());
    for r in 1..=k {
        let v = chi.value(r);
        if v.is_zero() {
            continue;
        }
        let b = (Rational::from(r) + a - Rational::one()) / Rational::from(k);
        acc = acc.try_add(&v.scale(&hurwitz_neg(n, &b)?))?;
    }
    Ok(acc.scale(&Rational::from(k).powu(n as u32)))
}

/// L(-n, a, χ) = ∫_0^1 S_{n,a,χ}(x) dx.
pub fn twisted_l_neg_integral<S: Scalar>(chi: &DirichletCharacter<S>, n: usize, a: &Rational) -> Result<S> {
    require_twist_hypotheses(chi, a)?;
    Ok(twisted_partial_sum(chi, n, a).integrate(&Rational::zero(), &Rational::one()))
}

/// ζ(1-k, a, γ) = E_{c,k-1}(a) / (1 + c^{-1}), with `c` given directly.
pub fn lerch_special<S: Scalar>(param: &EulerParameter<S>, k: usize, a: &Rational) -> Result<S> {
    if k == 0 {
        return Err(Error::OutOfRange {
            what: "k",
            detail: "k must be positive".into(),
        });
    }
    if !a.is_positive() {
        return Err(Error::OutOfRange {
            what: "a",
            detail: format!("{a} is not positive"),
        });
    }
    let c = param.c();
    if c.is_zero() {
        return Err(Error::Hypothesis("Lerch parameter c must be nonzero".into()));
    }
    let denom = S::one_in(&c.ring()).try_add(&c.try_inverse()?)?;
    euler_poly(param, k - 1).evaluate(a).try_div(&denom)
}

/// L(-n, χ₄) via `(4^{n+1}/2) ∫_{3/4}^{7/4} S_{n,1/4}(x) dx` for even n, zero for odd n.
pub fn chi4_first_rep(n: usize) -> Rational {
    if n % 2 == 1 {
        return Rational::zero();
    }
    let spec = PartialSumSpec::new(n, Rational::frac(1, 4)).expect("1/4 is a valid offset");
    let integral = s_na(&spec).integrate(&Rational::frac(3, 4), &Rational::frac(7, 4));
    Rational::from(4).powu(n as u32 + 1) * Rational::frac(1, 2) * integral
}

/// L(-n, χ₄) via `-(1/4) ∫_0^2 (E_{1,n}(x) - E_{1,n} - 1/(n+1)) dx`.
pub fn chi4_second_rep(n: usize) -> Rational {
    let param = EulerParameter::classical();
    let e = euler_poly(&param, n);
    let shift = euler_number(&param, n) + inv(n + 1);
    let integrand = &e - &Polynomial::constant(shift);
    integrand.integrate(&Rational::zero(), &Rational::from(2)) * Rational::frac(-1, 4)
}

/// `E_{1,n}/2`, the Euler-number form of L(-n, χ₄).
pub fn chi4_euler_closed(n: usize) -> Rational {
    euler_number(&EulerParameter::classical(), n) * Rational::frac(1, 2)
}

/// ∫_0^{1/2} S_n(x) dx for even n ≥ 2, by direct integration.
pub fn even_n_half_integral(n: usize) -> Result<Rational> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::OutOfRange {
            what: "n",
            detail: format!("{n} is not an even integer >= 2"),
        });
    }
    Ok(s_n(n).integrate(&Rational::zero(), &Rational::frac(1, 2)))
}

/// `(2^{-n-1} - 2) B_{n+2} / ((n+1)(n+2))`.
pub fn even_n_half_integral_closed(n: usize) -> Rational {
    let two_pow = Rational::from(2).pow(-(n as i64) - 1).expect("2 != 0");
    (two_pow - Rational::from(2)) * bernoulli_number(n + 2) * inv(n + 1) * inv(n + 2)
}

pub fn zeta_value(n: usize, route: Route) -> Result<SpecialValueResult<Rational>> {
    let value = match route {
        Route::ClosedForm => riemann_neg(n),
        Route::Integral => riemann_neg_integral(n),
        Route::HurwitzScaled => hurwitz_neg(n, &Rational::one())?,
        Route::EulerPoly => return unsupported(route, "ζ(-n)"),
    };
    Ok(SpecialValueResult {
        value,
        route,
        params: ValueParams {
            n,
            ..Default::default()
        },
    })
}

pub fn hurwitz_value(n: usize, a: &Rational, route: Route) -> Result<SpecialValueResult<Rational>> {
    let value = match route {
        Route::ClosedForm => hurwitz_neg(n, a)?,
        Route::Integral => hurwitz_neg_integral(n, a)?,
        _ => return unsupported(route, "ζ(-n, a)"),
    };
    Ok(SpecialValueResult {
        value,
        route,
        params: ValueParams {
            n,
            a: Some(a.clone()),
            character: None,
        },
    })
}

pub fn l_value<S: Scalar>(chi: &DirichletCharacter<S>, n: usize, route: Route) -> Result<SpecialValueResult<S>> {
    require_nontrivial(chi)?;
    let value = match route {
        Route::ClosedForm => l_neg(chi, n)?,
        Route::Integral => l_neg_integral(chi, n),
        Route::HurwitzScaled => l_neg_hurwitz(chi, n)?,
        Route::EulerPoly => return unsupported(route, "L(-n, χ)"),
    };
    let params = ValueParams {
        n,
        a: None,
        character: Some(chi.label().to_string()),
    };
    Ok(SpecialValueResult { value, route, params })
}

pub fn twisted_value<S: Scalar>(
    chi: &DirichletCharacter<S>,
    n: usize,
    a: &Rational,
    route: Route,
) -> Result<SpecialValueResult<S>> {
    let value = match route {
        Route::ClosedForm => twisted_l_neg(chi, n, a)?,
        Route::Integral => twisted_l_neg_integral(chi, n, a)?,
        Route::HurwitzScaled => twisted_l_neg_hurwitz(chi, n, a)?,
        Route::EulerPoly => return unsupported(route, "L(-n, a, χ)"),
    };
    let params = ValueParams {
        n,
        a: Some(a.clone()),
        character: Some(chi.label().to_string()),
    };
    Ok(SpecialValueResult { value, route, params })
}

pub fn chi4_value(n: usize, route: Route) -> Result<SpecialValueResult<Rational>> {
    let value = match route {
        Route::ClosedForm => l_neg(&chi4(), n)?,
        Route::Integral => chi4_first_rep(n),
        Route::EulerPoly => chi4_second_rep(n),
        Route::HurwitzScaled => l_neg_hurwitz(&chi4(), n)?,
    };
    let params = ValueParams {
        n,
        a: None,
        character: Some("chi4".into()),
    };
    Ok(SpecialValueResult { value, route, params })
}

/// Checks, on a grid of `n` and `a`, the intermediate identities that give
/// independent derivations of `ζ(-n, a) = ∫_{1-a}^{2-a} S_{n,a}(x) dx`.
pub fn verify_proof_identities(n_max: usize, a_set: &[Rational]) -> VerificationReport {
    verify_proof_identities_with(n_max, a_set, &|n, a| hurwitz_neg(n, a).expect("offset checked"))
}

/// As [`verify_proof_identities`], with the closed-form Hurwitz values
/// supplied by `hurwitz`, so a corrupted value source can be shown to fail.
pub fn verify_proof_identities_with(
    n_max: usize,
    a_set: &[Rational],
    hurwitz: &(dyn Fn(usize, &Rational) -> Rational + Sync),
) -> VerificationReport {
    let mut report = VerificationReport::new("proof-identities");
    for a in a_set {
        if let Err(e) = check_offset(a) {
            report.record_failure("offset", &format!("a={a}"), &e.to_string());
        }
    }
    let a_set: Vec<&Rational> = a_set.iter().filter(|a| check_offset(a).is_ok()).collect();
    let cells: Vec<(usize, &Rational)> = (0..=n_max).flat_map(|n| a_set.iter().map(move |a| (n, *a))).collect();
    let parts: Vec<VerificationReport> = cells
        .par_iter()
        .map(|&(n, a)| proof_identity_cell(n, a, hurwitz))
        .collect();
    for part in parts {
        report.extend(part);
    }
    report
}

fn proof_identity_cell(
    n: usize,
    a: &Rational,
    hurwitz: &(dyn Fn(usize, &Rational) -> Rational + Sync),
) -> VerificationReport {
    let mut report = VerificationReport::new("proof-identities");
    let params = format!("n={n} a={a}");
    let one = Rational::one();
    let lo = &one - a;
    let hi = Rational::from(2) - a;
    let a_pow = |e: usize| a.powu(e as u32);
    let sign = |e: usize| {
        if e.is_multiple_of(2) {
            Rational::one()
        } else {
            -Rational::one()
        }
    };

    // ζ(-n,a) = a^n - a^{n+1}/(n+1) + Σ_k C(n,k) a^k ζ(k-n)
    let rhs: Rational = a_pow(n) - a_pow(n + 1) * inv(n + 1)
        + (0..=n)
            .map(|k| Rational::from(binomial(n as u64, k as u64)) * a_pow(k) * riemann_neg(n - k))
            .sum::<Rational>();
    report.record("hurwitz_binomial_expansion", &params, &hurwitz(n, a), &rhs);

    if n >= 1 {
        // ∫_{1-a}^{2-a} S_n(x-1) dx = (-a)^{n+1}/(n+1) + ζ(-n)
        let lhs = s_n(n).shift(&-Rational::one()).integrate(&lo, &hi);
        let rhs = (-a).powu(n as u32 + 1) * inv(n + 1) + riemann_neg(n);
        report.record("shifted_integral", &format!("k={n} a={a}"), &lhs, &rhs);
    } else {
        // the k = 0 exception: ∫_{1-a}^{2-a} S_0(x) dx = ζ(0) + (1 - a) = ζ(0, a)
        let lhs = s_n(0).integrate(&lo, &hi);
        report.record("shifted_integral_k0", &params, &lhs, &(riemann_neg(0) + (&one - a)));
        report.record("shifted_integral_k0_hurwitz", &params, &lhs, &hurwitz(0, a));
    }

    // S_{n,a}(x) = a^n S_0(x) + Σ_{k<n} C(n,k) a^k S_{n-k}(x-1)
    let spec = PartialSumSpec::new(n, a.clone()).expect("offset checked");
    report.record(
        "recursive_partial_sum",
        &params,
        &s_na(&spec),
        &crate::sums::s_na_recursive(&spec),
    );

    // a^{n+1} = Σ_k (-1)^{k+1} C(n+1,k+1) (V_{n-k} - a^{n-k}) + (-1)^{n+1}/(n+2),
    // once with V_j = ∫ S_{j,a} (collapsing_sum_integral) and once with V_j = ζ(-j,a) (collapsing_sum_zeta)
    let collapse = |value: &dyn Fn(usize) -> Rational| -> Rational {
        (0..=n)
            .map(|k| sign(k + 1) * Rational::from(binomial(n as u64 + 1, k as u64 + 1)) * (value(n - k) - a_pow(n - k)))
            .sum::<Rational>()
            + sign(n + 1) * inv(n + 2)
    };
    let integral = |j: usize| {
        let spec = PartialSumSpec::new(j, a.clone()).expect("offset checked");
        s_na(&spec).integrate(&lo, &hi)
    };
    report.record("collapsing_sum_integral", &params, &a_pow(n + 1), &collapse(&integral));
    report.record(
        "collapsing_sum_zeta",
        &params,
        &a_pow(n + 1),
        &collapse(&|j| hurwitz(j, a)),
    );
    report
}
