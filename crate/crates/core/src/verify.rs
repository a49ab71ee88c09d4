//! Verification reports and the named identity suites.

use std::fmt;

/// One checked equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub identity: String,
    pub params: String,
    pub lhs: String,
    pub rhs: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    /// Records `lhs == rhs` and returns whether it held.
    pub fn record<T: PartialEq + fmt::Display>(&mut self, identity: &str, params: &str, lhs: &T, rhs: &T) -> bool {
        let passed = lhs == rhs;
        self.checks.push(Check {
            identity: identity.to_string(),
            params: params.to_string(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            passed,
        });
        passed
    }

    /// Records a boolean property; `detail` is shown as the left side.
    pub fn record_bool(&mut self, identity: &str, params: &str, holds: bool, detail: &str) -> bool {
        self.checks.push(Check {
            identity: identity.to_string(),
            params: params.to_string(),
            lhs: detail.to_string(),
            rhs: "true".to_string(),
            passed: holds,
        });
        holds
    }

    pub fn record_failure(&mut self, identity: &str, params: &str, detail: &str) {
        self.record_bool(identity, params, false, detail);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn all_passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failures = self.failures();
        writeln!(
            f,
            "suite {}: {} checks, {} failed",
            self.suite,
            self.checks.len(),
            failures.len()
        )?;
        for c in failures {
            writeln!(
                f,
                "  FAIL {} [{}]: lhs = {}, rhs = {}",
                c.identity, c.params, c.lhs, c.rhs
            )?;
        }
        Ok(())
    }
}

use std::str::FromStr;

use rayon::prelude::*;

use crate::arith::{Rational, Scalar};
use crate::bernoulli::{bernoulli_number, bernoulli_poly, euler_number, euler_poly, EulerParameter};
use crate::congruence::{congruence_p2, prop_a1_report};
use crate::dirichlet::{
    chi4, generalized_bernoulli_number, generalized_bernoulli_poly, power_residue_character, quadratic_character,
    DirichletCharacter,
};
use crate::error::{Error, Result};
use crate::lvalues::{
    chi4_euler_closed, chi4_first_rep, chi4_second_rep, even_n_half_integral, even_n_half_integral_closed, hurwitz_neg,
    hurwitz_neg_integral, l_neg, l_neg_hurwitz, l_neg_integral, l_neg_via_p, lerch_special, p_n_chi, riemann_neg,
    riemann_neg_integral, s_n_chi, twisted_l_neg, twisted_l_neg_hurwitz, twisted_l_neg_integral,
    verify_proof_identities, zeta_even_positive,
};
use crate::poly::Polynomial;
use crate::sums::{phi, s_n, s_na, s_na_recursive, PartialSumSpec};

/// The offsets `a` used by the Hurwitz grids.
pub const HURWITZ_OFFSETS: [(i64, i64); 8] = [(1, 1), (1, 2), (1, 3), (2, 3), (1, 4), (3, 4), (1, 5), (1, 7)];

/// Primes covered by the quadratic-character tables.
pub const TABLE_PRIMES: [u64; 8] = [3, 5, 7, 11, 13, 17, 19, 23];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    HurwitzIntegral,
    ProofIdentities,
    SumsOracle,
    LfunctionRoutes,
    Chi4,
    ParityIntegral,
    PropA1,
    EulerProps,
    BernoulliProps,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::HurwitzIntegral,
        Suite::ProofIdentities,
        Suite::SumsOracle,
        Suite::LfunctionRoutes,
        Suite::Chi4,
        Suite::ParityIntegral,
        Suite::PropA1,
        Suite::EulerProps,
        Suite::BernoulliProps,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::HurwitzIntegral => "hurwitz-integral",
            Suite::ProofIdentities => "proof-identities",
            Suite::SumsOracle => "sums-oracle",
            Suite::LfunctionRoutes => "lfunction-routes",
            Suite::Chi4 => "chi4",
            Suite::ParityIntegral => "parity-integral",
            Suite::PropA1 => "prop-a1",
            Suite::EulerProps => "euler-props",
            Suite::BernoulliProps => "bernoulli-props",
        }
    }

    pub fn default_n_max(self) -> usize {
        match self {
            Suite::HurwitzIntegral | Suite::ProofIdentities => 30,
            Suite::EulerProps => 20,
            Suite::BernoulliProps => 40,
            _ => 12,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteParams {
    pub n_max: Option<usize>,
    pub primes: Option<Vec<u64>>,
}

pub fn run_suite(suite: Suite, params: &SuiteParams) -> Result<VerificationReport> {
    let n_max = params.n_max.unwrap_or_else(|| suite.default_n_max());
    let mut report = match suite {
        Suite::HurwitzIntegral => hurwitz_integral(n_max),
        Suite::ProofIdentities => verify_proof_identities(n_max, &hurwitz_offsets()),
        Suite::SumsOracle => sums_oracle(n_max),
        Suite::LfunctionRoutes => lfunction_routes(n_max)?,
        Suite::Chi4 => chi4_suite(n_max)?,
        Suite::ParityIntegral => parity_integral(n_max)?,
        Suite::PropA1 => prop_a1(params.primes.as_deref().unwrap_or(&TABLE_PRIMES), n_max)?,
        Suite::EulerProps => euler_props(n_max)?,
        Suite::BernoulliProps => bernoulli_props(n_max)?,
    };
    report.suite = suite.name().to_string();
    Ok(report)
}

pub fn hurwitz_offsets() -> Vec<Rational> {
    HURWITZ_OFFSETS.iter().map(|&(p, q)| Rational::frac(p, q)).collect()
}

fn merge(suite: &str, parts: Vec<VerificationReport>) -> VerificationReport {
    let mut report = VerificationReport::new(suite);
    for part in parts {
        report.extend(part);
    }
    report
}

fn hurwitz_integral(n_max: usize) -> VerificationReport {
    let offsets = hurwitz_offsets();
    let cells: Vec<(usize, &Rational)> = (0..=n_max).flat_map(|n| offsets.iter().map(move |a| (n, a))).collect();
    let mut parts: Vec<VerificationReport> = cells
        .par_iter()
        .map(|&(n, a)| {
            let mut r = VerificationReport::new("");
            let lhs = hurwitz_neg(n, a).expect("grid offsets are valid");
            let rhs = hurwitz_neg_integral(n, a).expect("grid offsets are valid");
            r.record("hurwitz_integral", &format!("n={n} a={a}"), &lhs, &rhs);
            r
        })
        .collect();
    let mut riemann = VerificationReport::new("");
    for n in 0..=n_max {
        riemann.record(
            "riemann_integral",
            &format!("n={n}"),
            &riemann_neg(n),
            &riemann_neg_integral(n),
        );
    }
    parts.push(riemann);
    merge("hurwitz-integral", parts)
}

fn brute_partial_sum(n: usize, a: &Rational, m: i64) -> Rational {
    (0..=m - 2).map(|k| (Rational::from(k) + a).powu(n as u32)).sum()
}

fn sums_oracle(n_max: usize) -> VerificationReport {
    let offsets: Vec<Rational> = [(1, 1), (1, 2), (1, 3), (1, 4), (2, 3), (3, 4)]
        .iter()
        .map(|&(p, q)| Rational::frac(p, q))
        .collect();
    let cells: Vec<(usize, &Rational)> = (0..=n_max).flat_map(|n| offsets.iter().map(move |a| (n, a))).collect();
    let mut parts: Vec<VerificationReport> = cells
        .par_iter()
        .map(|&(n, a)| {
            let mut r = VerificationReport::new("");
            let spec = PartialSumSpec::new(n, a.clone()).expect("grid offsets are valid");
            let poly = s_na(&spec);
            for m in 2..=12 {
                let params = format!("n={n} a={a} M={m}");
                r.record(
                    "partial_sum_oracle",
                    &params,
                    &poly.evaluate(&Rational::from(m)),
                    &brute_partial_sum(n, a, m),
                );
            }
            r.record(
                "recursive_partial_sum",
                &format!("n={n} a={a}"),
                &poly,
                &s_na_recursive(&spec),
            );
            r
        })
        .collect();

    let mut r = VerificationReport::new("");
    // S_n(x) + (-1)^n S_n(1 - x) = 0; fails at n = 0 since S_0(0) = -1
    for n in 1..=n_max.max(40) {
        let reflected = s_n(n).scale_arg(&-Rational::one()).shift(&-Rational::one());
        let reflected = if n % 2 == 0 { reflected } else { reflected.negate() };
        r.record(
            "antisymmetry",
            &format!("n={n}"),
            &(&s_n(n) + &reflected),
            &Polynomial::zero(),
        );
    }
    for k in 1..=15 {
        r.record(
            "trivial_zero",
            &format!("k={k}"),
            &riemann_neg(2 * k),
            &Rational::zero(),
        );
    }
    for k in 0..=10 {
        let f = phi(k);
        let samples = (1..=200).map(|i| f.evaluate(&Rational::frac(i, 201)));
        let all_positive = samples.clone().all(|v| v.is_positive());
        r.record_bool(
            "phi_sign_definite",
            &format!("k={k}"),
            all_positive,
            "phi_k > 0 at i/201, i = 1..200",
        );
        let area = f.integrate(&Rational::zero(), &Rational::one());
        let sign = if k % 2 == 0 { -Rational::one() } else { Rational::one() };
        r.record(
            "odd_signed_area",
            &format!("k={k}"),
            &riemann_neg(2 * k + 1),
            &(sign * area),
        );
        let closed = -bernoulli_number(2 * k + 2) / Rational::from(2 * k as i64 + 2);
        r.record(
            "odd_value_closed_form",
            &format!("k={k}"),
            &riemann_neg_integral(2 * k + 1),
            &closed,
        );
    }
    for n in (2..=n_max.max(12)).step_by(2) {
        let direct = even_n_half_integral(n).expect("even n >= 2");
        r.record(
            "even_half_integral",
            &format!("n={n}"),
            &direct,
            &even_n_half_integral_closed(n),
        );
    }
    parts.push(r);
    merge("sums-oracle", parts)
}

/// The real characters used by the L-function route checks.
pub fn route_characters() -> Result<Vec<DirichletCharacter<Rational>>> {
    let mut chars = vec![quadratic_character(3)?, chi4()];
    for p in [5, 7, 11] {
        chars.push(quadratic_character(p)?);
    }
    Ok(chars)
}

fn l_routes_for<S: Scalar>(chi: &DirichletCharacter<S>, n: usize) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("");
    let params = format!("chi={} n={n}", chi.label());
    let closed = l_neg(chi, n)?;
    let s = s_n_chi(chi, n);
    r.record_bool(
        "s_n_chi_constant",
        &params,
        s.degree().unwrap_or(0) == 0,
        &s.to_string(),
    );
    r.record("l_neg_integral", &params, &closed, &l_neg_integral(chi, n));
    r.record("l_neg_hurwitz", &params, &closed, &l_neg_hurwitz(chi, n)?);
    if chi.parity().delta() == n % 2 {
        r.record("l_neg_via_p", &params, &closed, &l_neg_via_p(chi, n)?);
    }
    Ok(r)
}

fn lfunction_routes(n_max: usize) -> Result<VerificationReport> {
    let chars = route_characters()?;
    let cells: Vec<(&DirichletCharacter<Rational>, usize)> =
        chars.iter().flat_map(|c| (0..=n_max).map(move |n| (c, n))).collect();
    let mut parts = cells
        .par_iter()
        .map(|&(chi, n)| l_routes_for(chi, n))
        .collect::<Result<Vec<_>>>()?;

    let twist_chars = [quadratic_character(3)?, chi4(), quadratic_character(5)?];
    let offsets = [
        Rational::one(),
        Rational::frac(1, 2),
        Rational::frac(1, 3),
        Rational::frac(3, 4),
    ];
    let mut cells = Vec::new();
    for chi in &twist_chars {
        for n in 0..=n_max.min(10) {
            cells.extend(offsets.iter().map(|a| (chi, n, a)));
        }
    }
    let twisted = cells
        .par_iter()
        .map(|&(chi, n, a)| -> Result<VerificationReport> {
            let mut r = VerificationReport::new("");
            let params = format!("chi={} n={n} a={a}", chi.label());
            let closed = twisted_l_neg(chi, n, a)?;
            r.record("twisted_hurwitz", &params, &closed, &twisted_l_neg_hurwitz(chi, n, a)?);
            r.record(
                "twisted_integral",
                &params,
                &closed,
                &twisted_l_neg_integral(chi, n, a)?,
            );
            if a.is_integer() {
                r.record("twisted_at_one", &params, &closed, &l_neg(chi, n)?);
            }
            Ok(r)
        })
        .collect::<Result<Vec<_>>>()?;
    parts.extend(twisted);

    // a character with values in Q(i), mod 5
    let quartic = power_residue_character(5, 4)?;
    for n in 0..=n_max.min(8) {
        parts.push(l_routes_for(&quartic, n)?);
    }
    Ok(merge("lfunction-routes", parts))
}

fn chi4_suite(n_max: usize) -> Result<VerificationReport> {
    let chi = chi4();
    let mut r = VerificationReport::new("chi4");
    for n in 1..=n_max {
        let params = format!("n={n}");
        let closed = l_neg(&chi, n)?;
        r.record("chi4_first_rep", &params, &chi4_first_rep(n), &closed);
        r.record("chi4_second_rep", &params, &chi4_second_rep(n), &closed);
        r.record("chi4_euler_number", &params, &chi4_euler_closed(n), &closed);
    }
    r.record("chi4_second_rep_n0", "n=0", &chi4_second_rep(0), &chi4_euler_closed(0));
    r.record("chi4_worked_example", "n=2", &l_neg(&chi, 2)?, &Rational::frac(-1, 2));
    for n in 0..=n_max / 2 {
        let m = 2 * n;
        let scaled = Rational::from(4).powu(m as u32 + 1) / Rational::from(2) * hurwitz_neg(m, &Rational::frac(1, 4))?;
        r.record("chi4_hurwitz_scaling", &format!("n={m}"), &l_neg(&chi, m)?, &scaled);
    }
    for n in 0..=12 {
        let b = bernoulli_poly(2 * n + 1);
        r.record(
            "bernoulli_quarter_symmetry",
            &format!("n={n}"),
            &b.evaluate(&Rational::frac(3, 4)),
            &-b.evaluate(&Rational::frac(1, 4)),
        );
    }
    let param = EulerParameter::classical();
    for n in 0..=n_max.max(20) {
        let integral = euler_poly(&param, n).integrate(&Rational::zero(), &Rational::from(2));
        r.record(
            "euler_integral",
            &format!("n={n}"),
            &integral,
            &Rational::frac(2, n as i64 + 1),
        );
    }
    Ok(r)
}

fn parity_integral(n_max: usize) -> Result<VerificationReport> {
    let chars = route_characters()?;
    let cells: Vec<(&DirichletCharacter<Rational>, usize)> =
        chars.iter().flat_map(|c| (0..=n_max).map(move |n| (c, n))).collect();
    let parts = cells
        .par_iter()
        .map(|&(chi, n)| -> Result<VerificationReport> {
            let mut r = VerificationReport::new("");
            let params = format!("chi={} n={n}", chi.label());
            let k = chi.modulus() as i64;
            let p = p_n_chi(chi, n);
            for m in 1..=6 {
                let brute: Rational = (1..=m * k)
                    .map(|x| chi.value(x) * Rational::from(x).powu(n as u32))
                    .sum();
                r.record(
                    "p_n_chi_oracle",
                    &format!("{params} M={m}"),
                    &p.evaluate(&Rational::from(m)),
                    &brute,
                );
            }
            if chi.parity().delta() == n % 2 {
                r.record("l_neg_via_p", &params, &l_neg_via_p(chi, n)?, &l_neg(chi, n)?);
                let b = generalized_bernoulli_poly(chi, n);
                let half = Rational::frac(k, 2);
                r.record("midpoint_symmetry", &params, &b.evaluate(&half), &b.evaluate(&-half));
            } else {
                r.record_bool(
                    "parity_rejected",
                    &params,
                    l_neg_via_p(chi, n).is_err(),
                    "l_neg_via_p errors",
                );
            }
            Ok(r)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(merge("parity-integral", parts))
}

fn prop_a1(primes: &[u64], n_max: usize) -> Result<VerificationReport> {
    let mut report = prop_a1_report(primes, n_max)?;
    let cells: Vec<(u64, usize)> = primes.iter().flat_map(|&p| (0..=n_max).map(move |n| (p, n))).collect();
    let parts = cells
        .par_iter()
        .map(|&(p, n)| congruence_p2(p, n))
        .collect::<Result<Vec<_>>>()?;
    for part in parts {
        report.extend(part);
    }
    Ok(report)
}

/// Classical Euler numbers E_0..E_20.
const EULER_NUMBERS: [i64; 21] = [
    1,
    0,
    -1,
    0,
    5,
    0,
    -61,
    0,
    1385,
    0,
    -50521,
    0,
    2702765,
    0,
    -199360981,
    0,
    19391512145,
    0,
    -2404879675441,
    0,
    370371188237525,
];

fn euler_identities<S: Scalar>(r: &mut VerificationReport, param: &EulerParameter<S>, n_max: usize, label: &str) {
    let ring = param.ring();
    let polys = crate::bernoulli::euler_polys(param, n_max);
    r.record(
        "euler_base",
        &format!("c={label}"),
        &polys[0],
        &Polynomial::constant(S::one_in(&ring)),
    );
    for n in 1..=n_max {
        let params = format!("c={label} n={n}");
        let e = &polys[n];
        r.record(
            "euler2_derivative",
            &params,
            &e.derivative(),
            &polys[n - 1].scale(&Rational::from(n as i64)),
        );
        let lhs = e
            .shift(&Rational::one())
            .checked_add(&e.mul_scalar(param.c()).expect("same ring"))
            .expect("same ring");
        let one_plus_c = S::one_in(&ring).try_add(param.c()).expect("same ring");
        let rhs = Polynomial::monomial(one_plus_c, n);
        r.record("euler3_difference", &params, &lhs, &rhs);
    }
}

fn euler_props(n_max: usize) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("euler-props");
    let classical = EulerParameter::classical();
    for (n, &e) in EULER_NUMBERS.iter().enumerate().take(n_max + 1) {
        r.record(
            "euler1_classical_numbers",
            &format!("n={n}"),
            &euler_number(&classical, n),
            &Rational::from(e),
        );
    }
    for c in ["1", "2", "-1/2", "1/3", "-3", "5/7", "0"] {
        let c: Rational = c.parse()?;
        let label = c.to_string();
        euler_identities(&mut r, &EulerParameter::new(c)?, n_max, &label);
    }
    let i = crate::arith::CyclotomicElement::zeta(4)?;
    euler_identities(&mut r, &EulerParameter::new(i)?, n_max.min(12), "i");

    // Σ (-1)^m (m + a)^{k-1} = 2^{k-1} (ζ(1-k, a/2) - ζ(1-k, (a+1)/2))
    for k in 1..=n_max {
        for a in [
            Rational::one(),
            Rational::frac(1, 2),
            Rational::frac(1, 3),
            Rational::frac(3, 4),
        ] {
            let lerch = lerch_special(&classical, k, &a)?;
            let half = Rational::frac(1, 2);
            let hurwitz = Rational::from(2).powu(k as u32 - 1)
                * (hurwitz_neg(k - 1, &(&a * &half))? - hurwitz_neg(k - 1, &((&a + Rational::one()) * &half))?);
            r.record("lerch_alternating_hurwitz", &format!("k={k} a={a}"), &lerch, &hurwitz);
        }
    }
    Ok(r)
}

fn bernoulli_props(n_max: usize) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("bernoulli-props");
    let one = Rational::one();
    let half = Rational::frac(1, 2);
    for n in 0..=n_max {
        let params = format!("n={n}");
        let b = bernoulli_poly(n);
        let rhs = if n == 0 {
            Polynomial::zero()
        } else {
            Polynomial::monomial(Rational::from(n as i64), n - 1)
        };
        r.record("difference_equation", &params, &(&b.shift(&one) - &b), &rhs);
        let reflected = b.scale_arg(&-Rational::one()).shift(&-Rational::one());
        let sign = if n % 2 == 0 { one.clone() } else { -one.clone() };
        r.record("reflection", &params, &reflected, &b.scale(&sign));
        let midpoint = (Rational::from(2).pow(1 - n as i64)? - &one) * bernoulli_number(n);
        r.record("midpoint", &params, &b.evaluate(&half), &midpoint);
        if n >= 3 && n % 2 == 1 {
            for x in [Rational::zero(), one.clone(), half.clone()] {
                r.record(
                    "odd_vanishing",
                    &format!("n={n} x={x}"),
                    &b.evaluate(&x),
                    &Rational::zero(),
                );
            }
        }
        r.record(
            "cache_recompute",
            &params,
            &bernoulli_number(n),
            &crate::bernoulli::BernoulliCache::new().get(n),
        );
    }
    // ζ(2n) against the Basel-type constants
    let basel = [(1, 6), (1, 90), (1, 945), (1, 9450), (1, 93555)];
    for (i, &(p, q)) in basel.iter().enumerate() {
        r.record(
            "zeta_even_positive",
            &format!("n={}", i + 1),
            &zeta_even_positive(i + 1)?.coefficient,
            &Rational::frac(p, q),
        );
    }
    for chi in route_characters()? {
        let k = chi.modulus() as i64;
        for n in 0..=n_max.min(12) {
            let params = format!("chi={} n={n}", chi.label());
            let b = generalized_bernoulli_poly(&chi, n);
            let lhs = &b.shift(&Rational::from(k)) - &b;
            let mut rhs = Polynomial::zero();
            if n > 0 {
                for rr in 1..=k {
                    let term = crate::poly::Polynomial::from_ints(&[rr, 1])
                        .powu(n - 1)
                        .scale(chi.value(rr));
                    rhs = &rhs + &term;
                }
                rhs = rhs.scale(&Rational::from(n as i64));
            }
            r.record("generalized_difference_equation", &params, &lhs, &rhs);
            if chi.parity().delta() != n % 2 {
                r.record(
                    "parity_vanishing",
                    &params,
                    &generalized_bernoulli_number(&chi, n),
                    &Rational::zero(),
                );
            }
        }
    }
    Ok(r)
}
