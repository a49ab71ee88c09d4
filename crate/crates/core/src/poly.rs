//! Dense univariate polynomials with exact coefficients.
//!
//! Coefficients are stored in ascending order (`coeffs[i]` multiplies `x^i`)
//! and the vector is always trimmed, so the zero polynomial is the empty
//! vector and equality is structural.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::{Rational, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<S: Scalar> {
    coeffs: Vec<S>,
    ring: S::Ring,
}

impl<S: Scalar> Polynomial<S> {
    pub fn zero_in(ring: &S::Ring) -> Self {
        Polynomial {
            coeffs: Vec::new(),
            ring: ring.clone(),
        }
    }

    /// Builds a polynomial from ascending coefficients, checking that every
    /// coefficient lives in `ring`.
    pub fn from_coeffs_in(ring: &S::Ring, coeffs: Vec<S>) -> Result<Self> {
        if let Some(bad) = coeffs.iter().find(|c| &c.ring() != ring) {
            return Err(Error::Hypothesis(format!(
                "coefficient {bad} is not in the polynomial's ring"
            )));
        }
        Ok(Self::from_trusted(ring.clone(), coeffs))
    }

    fn from_trusted(ring: S::Ring, mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs, ring }
    }

    pub fn constant(c: S) -> Self {
        let ring = c.ring();
        Self::from_trusted(ring, vec![c])
    }

    pub fn monomial(c: S, degree: usize) -> Self {
        let ring = c.ring();
        let mut coeffs = vec![S::zero_in(&ring); degree];
        coeffs.push(c);
        Self::from_trusted(ring, coeffs)
    }

    pub fn ring(&self) -> &S::Ring {
        &self.ring
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> S {
        self.coeffs.get(i).cloned().unwrap_or_else(|| S::zero_in(&self.ring))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&S> {
        self.coeffs.last()
    }

    /// The constant value, if the polynomial has degree at most zero.
    pub fn as_constant(&self) -> Option<S> {
        match self.coeffs.len() {
            0 => Some(S::zero_in(&self.ring)),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::Hypothesis(format!(
                "polynomial ring mismatch: {:?} vs {:?}",
                self.ring, other.ring
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = c.try_add(s)?;
        }
        Ok(Self::from_trusted(self.ring.clone(), coeffs))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.negate())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero_in(&self.ring));
        }
        let mut coeffs = vec![S::zero_in(&self.ring); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].try_add(&a.try_mul(b)?)?;
            }
        }
        Ok(Self::from_trusted(self.ring.clone(), coeffs))
    }

    pub fn powu(&self, e: usize) -> Self {
        let mut acc = Self::constant(S::one_in(&self.ring));
        for _ in 0..e {
            acc = acc.checked_mul(self).expect("same ring");
        }
        acc
    }

    pub fn negate(&self) -> Self {
        Polynomial {
            coeffs: self.coeffs.iter().map(S::negate).collect(),
            ring: self.ring.clone(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::from_trusted(self.ring.clone(), self.coeffs.iter().map(|c| c.scale(r)).collect())
    }

    pub fn mul_scalar(&self, s: &S) -> Result<Self> {
        let coeffs = self.coeffs.iter().map(|c| c.try_mul(s)).collect::<Result<Vec<_>>>()?;
        Self::from_coeffs_in(&self.ring, coeffs)
    }

    /// Horner evaluation at a rational point.
    pub fn evaluate(&self, x: &Rational) -> S {
        let mut acc = S::zero_in(&self.ring);
        for c in self.coeffs.iter().rev() {
            acc = acc
                .scale(x)
                .try_add(c)
                .expect("coefficients share the polynomial's ring");
        }
        acc
    }

    /// `q(x) = p(x + c)`.
    pub fn shift(&self, c: &Rational) -> Self {
        // Horner in the polynomial ring: acc <- acc * (x + c) + a_i.
        let mut acc: Vec<S> = Vec::with_capacity(self.coeffs.len());
        for a in self.coeffs.iter().rev() {
            acc.push(S::zero_in(&self.ring));
            for j in (1..acc.len()).rev() {
                let carried = acc[j - 1].try_add(&acc[j].scale(c)).expect("same ring");
                acc[j] = carried;
            }
            acc[0] = acc[0].scale(c).try_add(a).expect("same ring");
        }
        Self::from_trusted(self.ring.clone(), acc)
    }

    /// `q(x) = p(lambda * x)`.
    pub fn scale_arg(&self, lambda: &Rational) -> Self {
        let mut power = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c.scale(&power));
            power *= lambda;
        }
        Self::from_trusted(self.ring.clone(), coeffs)
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(&Rational::from(i as u64)))
            .collect();
        Self::from_trusted(self.ring.clone(), coeffs)
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(S::zero_in(&self.ring));
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.scale(&Rational::frac(1, i as i64 + 1)));
        }
        Self::from_trusted(self.ring.clone(), coeffs)
    }

    /// Exact `∫_lo^hi p(x) dx`.
    pub fn integrate(&self, lo: &Rational, hi: &Rational) -> S {
        let anti = self.antiderivative();
        anti.evaluate(hi).try_sub(&anti.evaluate(lo)).expect("same ring")
    }
}

impl<S: Scalar> Polynomial<S>
where
    S::Ring: Default,
{
    pub fn new(coeffs: Vec<S>) -> Self {
        Self::from_trusted(S::Ring::default(), coeffs)
    }

    pub fn zero() -> Self {
        Self::zero_in(&S::Ring::default())
    }
}

impl Polynomial<Rational> {
    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    /// Embeds a rational polynomial into `ring` and multiplies it by `s`.
    pub fn times<T: Scalar>(&self, s: &T) -> Polynomial<T> {
        let ring = s.ring();
        let coeffs = self.coeffs.iter().map(|c| s.scale(c)).collect();
        Polynomial::from_trusted(ring, coeffs)
    }

    pub fn lift<T: Scalar>(&self, ring: &T::Ring) -> Polynomial<T> {
        self.times(&T::one_in(ring))
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor.leading_coeff().ok_or(Error::DivisionByZero)?;
        let lead_inv = lead.recip()?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd] * &lead_inv;
            if !top.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &(&top * d);
                }
            }
            quot[i] = top;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }
}

fn render_coefficient<S: Scalar>(c: &S) -> (bool, String) {
    match c.to_rational() {
        Some(r) => (r.is_negative(), r.abs().to_string()),
        None => (false, format!("({c})")),
    }
}

impl<S: Scalar> fmt::Display for Polynomial<S> {
    /// Descending powers, e.g. `1/6*x^3 - 1/2*x^2 + 1/3*x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (negative, magnitude) = render_coefficient(c);
            let var = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            let term = if var.is_empty() {
                magnitude
            } else if magnitude == "1" {
                var
            } else {
                format!("{magnitude}*{var}")
            };
            match (first, negative) {
                (true, true) => write!(f, "-{term}")?,
                (true, false) => write!(f, "{term}")?,
                (false, true) => write!(f, " - {term}")?,
                (false, false) => write!(f, " + {term}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

// Operator forms panic on a ring mismatch; the `checked_*` methods report it.
impl<S: Scalar> Add for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn add(self, rhs: Self) -> Polynomial<S> {
        self.checked_add(rhs).expect("polynomial ring mismatch")
    }
}

impl<S: Scalar> Sub for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn sub(self, rhs: Self) -> Polynomial<S> {
        self.checked_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl<S: Scalar> Mul for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn mul(self, rhs: Self) -> Polynomial<S> {
        self.checked_mul(rhs).expect("polynomial ring mismatch")
    }
}

impl<S: Scalar> Neg for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn neg(self) -> Polynomial<S> {
        self.negate()
    }
}

impl<S: Scalar> Add for Polynomial<S> {
    type Output = Polynomial<S>;
    fn add(self, rhs: Self) -> Polynomial<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for Polynomial<S> {
    type Output = Polynomial<S>;
    fn sub(self, rhs: Self) -> Polynomial<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Mul for Polynomial<S> {
    type Output = Polynomial<S>;
    fn mul(self, rhs: Self) -> Polynomial<S> {
        &self * &rhs
    }
}
