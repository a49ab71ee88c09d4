use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use super::{Rational, Scalar};
use crate::error::{Error, Result};
use crate::poly::Polynomial;

static PHI_CACHE: OnceLock<RwLock<HashMap<u64, Arc<Polynomial<Rational>>>>> = OnceLock::new();

pub fn euler_phi(m: u64) -> u64 {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn compute_cyclotomic(m: u64) -> Polynomial<Rational> {
    // Φ_m = (x^m - 1) / ∏_{d | m, d < m} Φ_d
    let mut num = Polynomial::monomial(Rational::one(), m as usize);
    num = &num - &Polynomial::constant(Rational::one());
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        let (quot, rem) = num.div_rem(&cyclotomic_polynomial(d)).expect("Φ_d is monic");
        debug_assert!(rem.is_zero());
        num = quot;
    }
    num
}

/// The m-th cyclotomic polynomial, memoised per order.
pub fn cyclotomic_polynomial(m: u64) -> Arc<Polynomial<Rational>> {
    assert!(m >= 1, "cyclotomic order must be positive");
    let cache = PHI_CACHE.get_or_init(Default::default);
    if let Some(phi) = cache.read().expect("phi cache poisoned").get(&m) {
        return phi.clone();
    }
    // Computed outside the lock: the recursion re-enters the cache for divisors.
    let phi = Arc::new(compute_cyclotomic(m));
    cache
        .write()
        .expect("phi cache poisoned")
        .entry(m)
        .or_insert(phi)
        .clone()
}

/// An element of `Q[z]/Φ_m(z)`, stored as its canonical remainder:
/// exactly `φ(m)` rational coefficients in ascending powers of `z`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicElement {
    order: u64,
    coeffs: Vec<Rational>,
}

impl CyclotomicElement {
    fn check_order(m: u64) -> Result<()> {
        if m == 0 {
            return Err(Error::InvalidOrder(m));
        }
        Ok(())
    }

    fn reduce(m: u64, p: &Polynomial<Rational>) -> Self {
        let phi = cyclotomic_polynomial(m);
        let (_, rem) = p.div_rem(&phi).expect("Φ_m is monic");
        let mut coeffs = rem.coeffs().to_vec();
        coeffs.resize(euler_phi(m) as usize, Rational::zero());
        CyclotomicElement { order: m, coeffs }
    }

    /// Reduces an arbitrary ascending coefficient list modulo `Φ_m`.
    pub fn from_coeffs(m: u64, coeffs: Vec<Rational>) -> Result<Self> {
        Self::check_order(m)?;
        Ok(Self::reduce(m, &Polynomial::new(coeffs)))
    }

    pub fn from_rational(m: u64, r: Rational) -> Result<Self> {
        Self::check_order(m)?;
        let mut coeffs = vec![Rational::zero(); euler_phi(m) as usize];
        coeffs[0] = r;
        Ok(CyclotomicElement { order: m, coeffs })
    }

    /// The primitive root of unity `ζ_m`.
    pub fn zeta(m: u64) -> Result<Self> {
        Self::zeta_pow(m, 1)
    }

    /// `ζ_m^e` for any integer exponent.
    pub fn zeta_pow(m: u64, e: i64) -> Result<Self> {
        Self::check_order(m)?;
        let e = e.rem_euclid(m as i64) as usize;
        Ok(Self::reduce(m, &Polynomial::monomial(Rational::one(), e)))
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn as_poly(&self) -> Polynomial<Rational> {
        Polynomial::new(self.coeffs.clone())
    }

    fn same_order(&self, rhs: &Self) -> Result<()> {
        if self.order != rhs.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: rhs.order,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.same_order(rhs)?;
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        Ok(CyclotomicElement {
            order: self.order,
            coeffs,
        })
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.same_order(rhs)?;
        Ok(Self::reduce(self.order, &(&self.as_poly() * &rhs.as_poly())))
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Extended Euclid against Φ_m, which is irreducible, so gcd = 1.
        let phi = cyclotomic_polynomial(self.order);
        let (mut r0, mut r1) = ((*phi).clone(), self.as_poly());
        let (mut s0, mut s1) = (Polynomial::<Rational>::zero(), Polynomial::constant(Rational::one()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = &s0 - &(&q * &s1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        let unit = r0.as_constant().expect("Φ_m is irreducible");
        let inv = s0.scale(&unit.recip()?);
        Ok(Self::reduce(self.order, &inv))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }
}

impl Scalar for CyclotomicElement {
    type Ring = u64;

    fn ring(&self) -> u64 {
        self.order
    }

    fn from_rational_in(ring: &u64, r: Rational) -> Self {
        Self::from_rational(*ring, r).expect("valid cyclotomic order")
    }

    fn is_zero(&self) -> bool {
        CyclotomicElement::is_zero(self)
    }

    fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(rhs)
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.checked_mul(rhs)
    }

    fn negate(&self) -> Self {
        CyclotomicElement {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn scale(&self, r: &Rational) -> Self {
        CyclotomicElement {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    fn try_inverse(&self) -> Result<Self> {
        self.inverse()
    }

    fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }
}

impl fmt::Display for CyclotomicElement {
    /// Ascending powers of `z = ζ_m`, e.g. `-1 - z`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let term = match (i, mag == 1) {
                (0, _) => mag.to_string(),
                (1, true) => "z".to_string(),
                (1, false) => format!("{mag}*z"),
                (_, true) => format!("z^{i}"),
                (_, false) => format!("{mag}*z^{i}"),
            };
            let sep = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            write!(f, "{sep}{term}")?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]_{}", self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cyc(m: u64, cs: &[i64]) -> CyclotomicElement {
        CyclotomicElement::from_coeffs(m, cs.iter().map(|&c| Rational::from(c)).collect()).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), Polynomial::from_ints(&[-1, 1]));
        assert_eq!(*cyclotomic_polynomial(4), Polynomial::from_ints(&[1, 0, 1]));
        assert_eq!(*cyclotomic_polynomial(12), Polynomial::from_ints(&[1, 0, -1, 0, 1]));
        assert_eq!(*cyclotomic_polynomial(5), Polynomial::from_ints(&[1, 1, 1, 1, 1]));
        for m in 1..40 {
            assert_eq!(cyclotomic_polynomial(m).degree(), Some(euler_phi(m) as usize));
        }
    }

    #[test]
    fn root_of_unity_arithmetic() {
        let i = CyclotomicElement::zeta(4).unwrap();
        assert_eq!(
            i.checked_mul(&i).unwrap(),
            CyclotomicElement::from_rational(4, Rational::from(-1)).unwrap()
        );
        let w = CyclotomicElement::zeta(3).unwrap();
        assert_eq!(w.checked_mul(&w).unwrap(), cyc(3, &[-1, -1]));
        assert!(cyc(3, &[1, 1]).checked_add(&cyc(3, &[-1, -1])).unwrap().is_zero());
        assert_eq!(CyclotomicElement::zeta_pow(6, 6).unwrap(), cyc(6, &[1]));
        assert_eq!(cyc(3, &[-1, -1]).to_string(), "-1 - z");
    }

    #[test]
    fn mismatched_orders() {
        let a = CyclotomicElement::zeta(3).unwrap();
        let b = CyclotomicElement::zeta(4).unwrap();
        assert_eq!(a.checked_add(&b), Err(Error::OrderMismatch { left: 3, right: 4 }));
        assert!(a.checked_mul(&b).is_err());
        assert_eq!(CyclotomicElement::zeta(0), Err(Error::InvalidOrder(0)));
    }

    #[test]
    fn inverses() {
        for m in [3u64, 4, 5, 7, 8, 12] {
            let one = CyclotomicElement::from_rational(m, Rational::one()).unwrap();
            let x = cyc(m, &[2, -1, 3]);
            assert_eq!(x.checked_mul(&x.inverse().unwrap()).unwrap(), one);
        }
        assert!(cyc(5, &[0]).inverse().is_err());
    }

    fn arb_element(m: u64) -> impl Strategy<Value = CyclotomicElement> {
        prop::collection::vec((-20i64..20, 1i64..6), 0..8).prop_map(move |cs| {
            CyclotomicElement::from_coeffs(m, cs.into_iter().map(|(n, d)| Rational::frac(n, d)).collect()).unwrap()
        })
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..9).prop_map(|(n, d)| Rational::frac(n, d))
    }

    proptest! {
        #[test]
        fn ring_axioms((a, b, c) in prop::sample::select(vec![3u64, 5, 7, 8, 12])
            .prop_flat_map(|m| (arb_element(m), arb_element(m), arb_element(m))))
        {
            let add = |x: &CyclotomicElement, y: &CyclotomicElement| x.checked_add(y).unwrap();
            let mul = |x: &CyclotomicElement, y: &CyclotomicElement| x.checked_mul(y).unwrap();
            prop_assert_eq!(add(&add(&a, &b), &c), add(&a, &add(&b, &c)));
            prop_assert_eq!(mul(&mul(&a, &b), &c), mul(&a, &mul(&b, &c)));
            prop_assert_eq!(mul(&a, &b), mul(&b, &a));
            prop_assert_eq!(mul(&a, &add(&b, &c)), add(&mul(&a, &b), &mul(&a, &c)));
            prop_assert_eq!(a.coeffs().len() as u64, euler_phi(a.order()));
        }

        #[test]
        fn low_orders_match_rationals(m in 1u64..3, a in arb_rational(), b in arb_rational()) {
            let ea = CyclotomicElement::from_rational(m, a.clone()).unwrap();
            let eb = CyclotomicElement::from_rational(m, b.clone()).unwrap();
            prop_assert_eq!(ea.checked_add(&eb).unwrap().to_rational(), Some(&a + &b));
            prop_assert_eq!(ea.checked_mul(&eb).unwrap().to_rational(), Some(&a * &b));
            prop_assert_eq!(ea.negate().to_rational(), Some(-&a));
            prop_assert_eq!(ea.scale(&b).to_rational(), Some(&a * &b));
            if !a.is_zero() {
                prop_assert_eq!(ea.inverse().unwrap().to_rational(), Some(a.recip().unwrap()));
            }
            prop_assert_eq!(ea == eb, a == b);
        }
    }
}
