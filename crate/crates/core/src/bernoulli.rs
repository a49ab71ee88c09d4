//! Bernoulli numbers and polynomials, and the Euler polynomials `E_{c,n}(t)`.

use std::sync::{OnceLock, RwLock};

use crate::arith::{binomial, Rational, Scalar};
use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Append-only table of Bernoulli numbers with `B_1 = -1/2`.
///
/// Readers only ever see fully computed prefixes; extension happens under the
/// write lock and is deterministic, so concurrent fills are idempotent.
#[derive(Debug, Default)]
pub struct BernoulliCache {
    numbers: RwLock<Vec<Rational>>,
}

impl BernoulliCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// The process-wide table used by [`bernoulli_number`].
    pub fn global() -> &'static BernoulliCache {
        static GLOBAL: OnceLock<BernoulliCache> = OnceLock::new();
        GLOBAL.get_or_init(BernoulliCache::new)
    }

    pub fn len(&self) -> usize {
        self.numbers.read().expect("bernoulli cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, n: usize) -> Rational {
        if let Some(b) = self.numbers.read().expect("bernoulli cache poisoned").get(n) {
            return b.clone();
        }
        let mut table = self.numbers.write().expect("bernoulli cache poisoned");
        while table.len() <= n {
            let next = next_bernoulli(&table);
            table.push(next);
        }
        table[n].clone()
    }
}

/// Solves `Σ_{k=0}^{m} C(m+1, k) B_k = 0` for `B_m`, given `B_0..B_{m-1}`.
fn next_bernoulli(prev: &[Rational]) -> Rational {
    let m = prev.len() as u64;
    if m == 0 {
        return Rational::one();
    }
    if m >= 3 && m % 2 == 1 {
        return Rational::zero();
    }
    let sum: Rational = prev
        .iter()
        .enumerate()
        .filter(|(_, b)| !b.is_zero())
        .map(|(k, b)| b * &Rational::from(binomial(m + 1, k as u64)))
        .sum();
    -sum / Rational::from(m + 1)
}

pub fn bernoulli_number(n: usize) -> Rational {
    BernoulliCache::global().get(n)
}

/// `B_n(x) = Σ_k C(n,k) B_k x^{n-k}`.
pub fn bernoulli_poly(n: usize) -> Polynomial<Rational> {
    let coeffs = (0..=n)
        .map(|i| {
            // coefficient of x^i comes from k = n - i
            let k = n - i;
            bernoulli_number(k) * Rational::from(binomial(n as u64, k as u64))
        })
        .collect();
    Polynomial::new(coeffs)
}

/// The parameter `c` of the Euler polynomials, with `1 + c` invertible.
#[derive(Clone, Debug, PartialEq)]
pub struct EulerParameter<S: Scalar> {
    c: S,
    one_plus_c_inv: S,
}

impl<S: Scalar> EulerParameter<S> {
    pub fn new(c: S) -> Result<Self> {
        let one_plus_c = S::one_in(&c.ring()).try_add(&c)?;
        if one_plus_c.is_zero() {
            return Err(Error::Hypothesis("Euler parameter c = -1 makes 1 + c singular".into()));
        }
        let one_plus_c_inv = one_plus_c.try_inverse()?;
        Ok(EulerParameter { c, one_plus_c_inv })
    }

    pub fn c(&self) -> &S {
        &self.c
    }

    pub fn ring(&self) -> S::Ring {
        self.c.ring()
    }
}

impl EulerParameter<Rational> {
    /// `c = 1`, the classical Euler polynomials.
    pub fn classical() -> Self {
        Self::new(Rational::one()).expect("1 + 1 is invertible")
    }
}

/// `E_{c,0}, …, E_{c,n}`, built from `E' = n E_{n-1}` and the value at zero
/// that makes `E_{c,n}(t+1) + c E_{c,n}(t) = (1+c) t^n` hold.
pub fn euler_polys<S: Scalar>(param: &EulerParameter<S>, n: usize) -> Vec<Polynomial<S>> {
    let ring = param.ring();
    let (zero, one) = (Rational::zero(), Rational::one());
    let mut out = Vec::with_capacity(n + 1);
    out.push(Polynomial::constant(S::one_in(&ring)));
    for m in 1..=n {
        let prev = &out[m - 1];
        let m_q = Rational::from(m as u64);
        let integral = prev.integrate(&zero, &one);
        let constant = integral
            .scale(&-&m_q)
            .try_mul(&param.one_plus_c_inv)
            .expect("same ring");
        let next = &prev.antiderivative().scale(&m_q) + &Polynomial::constant(constant);
        out.push(next);
    }
    out
}

pub fn euler_poly<S: Scalar>(param: &EulerParameter<S>, n: usize) -> Polynomial<S> {
    euler_polys(param, n).pop().expect("at least E_0")
}

/// `E_{c,n} = 2^n E_{c,n}(1/2)`.
pub fn euler_number<S: Scalar>(param: &EulerParameter<S>, n: usize) -> S {
    euler_poly(param, n)
        .evaluate(&Rational::frac(1, 2))
        .scale(&Rational::from(2i64).powu(n as u32))
}
