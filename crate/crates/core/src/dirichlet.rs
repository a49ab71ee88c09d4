//! Dirichlet characters as validated value tables, and the generalized
//! Bernoulli numbers and polynomials attached to them.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::arith::{is_odd_prime, mod_pow, CyclotomicElement, Rational, Scalar};
use crate::bernoulli::bernoulli_poly;
use crate::error::{Error, Result};
use crate::poly::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// 0 for even, 1 for odd.
    pub fn delta(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn of_integer(n: usize) -> Parity {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// A Dirichlet character modulo `k`, stored as its values on `1..=k`.
#[derive(Clone, Debug, PartialEq)]
pub struct DirichletCharacter<S: Scalar> {
    modulus: u64,
    values: Vec<S>,
    parity: Parity,
    trivial: bool,
    primitive: bool,
    label: String,
}

impl<S: Scalar> DirichletCharacter<S> {
    /// Validates a value table `χ(1), …, χ(k)`.
    pub fn from_table(k: u64, values: Vec<S>) -> Result<Self> {
        Self::labelled(k, values, format!("table:{k}"))
    }

    fn labelled(k: u64, values: Vec<S>, label: String) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidCharacter(msg));
        if k == 0 {
            return invalid("modulus must be positive".into());
        }
        if values.len() as u64 != k {
            return invalid(format!("table has {} entries, expected {k}", values.len()));
        }
        let ring = values[0].ring();
        if values.iter().any(|v| v.ring() != ring) {
            return invalid("values live in different rings".into());
        }
        let one = S::one_in(&ring);
        if values[0] != one {
            return invalid(format!("χ(1) = {} but must be 1", values[0]));
        }
        for (i, v) in values.iter().enumerate() {
            let r = i as u64 + 1;
            let unit = r.gcd(&k) == 1;
            if unit == v.is_zero() {
                return invalid(format!("support: χ({r}) = {v} but gcd({r}, {k}) = {}", r.gcd(&k)));
            }
        }
        let at = |r: u64| &values[((r + k - 1) % k) as usize];
        for r in (1..=k).filter(|r| r.gcd(&k) == 1) {
            for s in (r..=k).filter(|s| s.gcd(&k) == 1) {
                if *at(r * s) != at(r).try_mul(at(s))? {
                    return invalid(format!("multiplicativity: χ({r}·{s}) ≠ χ({r})·χ({s}) mod {k}"));
                }
            }
        }
        let minus_one = at(k - 1 + k);
        let parity = if *minus_one == one {
            Parity::Even
        } else if *minus_one == one.negate() {
            Parity::Odd
        } else {
            return invalid(format!("parity: χ(-1) = {minus_one} is not ±1"));
        };
        let trivial = values.iter().all(|v| v.is_zero() || *v == one);
        let primitive = (1..k).filter(|d| k.is_multiple_of(*d)).all(|d| {
            // some a ≡ b (mod d), both units mod k, with χ(a) ≠ χ(b)
            let units: Vec<u64> = (1..=k).filter(|r| r.gcd(&k) == 1).collect();
            units
                .iter()
                .any(|&a| units.iter().any(|&b| a % d == b % d && at(a) != at(b)))
        });
        Ok(DirichletCharacter {
            modulus: k,
            values,
            parity,
            trivial,
            primitive,
            label,
        })
    }

    /// The modulus `k` (the paper-style "conductor"; see [`Self::is_primitive`]).
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn ring(&self) -> S::Ring {
        self.values[0].ring()
    }

    /// `χ(r)` for any integer `r`.
    pub fn value(&self, r: i64) -> &S {
        let k = self.modulus as i64;
        &self.values[((r - 1).rem_euclid(k)) as usize]
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_trivial(&self) -> bool {
        self.trivial
    }

    pub fn is_primitive(&self) -> bool {
        self.primitive
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }
}

impl DirichletCharacter<Rational> {
    /// The principal character modulo `k`.
    pub fn trivial(k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidCharacter("modulus must be positive".into()));
        }
        let values = (1..=k).map(|r| Rational::from(i64::from(r.gcd(&k) == 1))).collect();
        Self::labelled(k, values, format!("trivial:{k}"))
    }
}

/// Legendre-symbol character modulo an odd prime `p`.
pub fn quadratic_character(p: u64) -> Result<DirichletCharacter<Rational>> {
    if !is_odd_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let values = (1..=p)
        .map(|a| match mod_pow(a, (p - 1) / 2, p) {
            0 => Rational::zero(),
            1 => Rational::one(),
            _ => -Rational::one(),
        })
        .collect();
    DirichletCharacter::labelled(p, values, format!("kronecker:{p}"))
}

/// The non-trivial character modulo 4.
pub fn chi4() -> DirichletCharacter<Rational> {
    let values = [1, 0, -1, 0].into_iter().map(Rational::from).collect();
    DirichletCharacter::labelled(4, values, "chi4".into()).expect("χ₄ is a character")
}

fn primitive_root(p: u64) -> u64 {
    let phi = p - 1;
    let factors: Vec<u64> = (2..=phi)
        .filter(|q| phi.is_multiple_of(*q) && crate::arith::is_prime(*q))
        .collect();
    (2..p)
        .find(|&g| factors.iter().all(|q| mod_pow(g, phi / q, p) != 1))
        .expect("odd primes have primitive roots")
}

/// The character modulo an odd prime `p` sending the least primitive root to
/// `ζ_m`. Requires `m | p - 1`.
pub fn power_residue_character(p: u64, m: u64) -> Result<DirichletCharacter<CyclotomicElement>> {
    if !is_odd_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if m == 0 || !(p - 1).is_multiple_of(m) {
        return Err(Error::OutOfRange {
            what: "character order",
            detail: format!("{m} does not divide {}", p - 1),
        });
    }
    let g = primitive_root(p);
    let mut values = vec![CyclotomicElement::from_rational(m, Rational::zero())?; p as usize];
    let mut power = 1u64;
    for i in 0..(p - 1) {
        values[(power - 1) as usize] = CyclotomicElement::zeta_pow(m, i as i64)?;
        power = power * g % p;
    }
    DirichletCharacter::labelled(p, values, format!("order{m}:{p}"))
}

/// `B_{n,χ}(x) = k^{n-1} Σ_{r=1}^k χ(r) B_n((r + x)/k)`.
pub fn generalized_bernoulli_poly<S: Scalar>(chi: &DirichletCharacter<S>, n: usize) -> Polynomial<S> {
    let k = chi.modulus();
    let k_q = Rational::from(k);
    let b = bernoulli_poly(n);
    // Σ_r χ(r) B_n(y + r/k), then substitute y = x/k.
    let mut acc = Polynomial::zero_in(&chi.ring());
    for r in 1..=k {
        let v = chi.value(r as i64);
        if v.is_zero() {
            continue;
        }
        acc = &acc + &b.shift(&Rational::frac(r as i64, k as i64)).times(v);
    }
    let k_inv = k_q.recip().expect("k > 0");
    acc.scale_arg(&k_inv).scale(&k_q.pow(n as i64 - 1).expect("k > 0"))
}

/// `B_{n,χ} = B_{n,χ}(0) = k^{n-1} Σ χ(r) B_n(r/k)`.
pub fn generalized_bernoulli_number<S: Scalar>(chi: &DirichletCharacter<S>, n: usize) -> S {
    generalized_bernoulli_poly(chi, n).evaluate(&Rational::zero())
}

/// `B̃_{n,χ}(x) = B_{n,χ}(x - 1)`; equals `B_n(x)` for the trivial character mod 1.
pub fn tilde_bernoulli_poly<S: Scalar>(chi: &DirichletCharacter<S>, n: usize) -> Polynomial<S> {
    generalized_bernoulli_poly(chi, n).shift(&-Rational::one())
}

/// A generalized Bernoulli number together with its polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralizedBernoulli<S: Scalar> {
    pub n: usize,
    pub chi: DirichletCharacter<S>,
    pub value: S,
    pub polynomial: Polynomial<S>,
}

impl<S: Scalar> GeneralizedBernoulli<S> {
    pub fn compute(chi: &DirichletCharacter<S>, n: usize) -> Self {
        let polynomial = generalized_bernoulli_poly(chi, n);
        let value = polynomial.evaluate(&Rational::zero());
        GeneralizedBernoulli {
            n,
            chi: chi.clone(),
            value,
            polynomial,
        }
    }
}

/// Textual character syntax: `kronecker:p`, `chi4`, `trivial:k`, or
/// `table:k:v1,…,vk` with rational entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CharacterLiteral {
    Kronecker(u64),
    Chi4,
    Trivial(u64),
    Table(u64, Vec<Rational>),
}

impl CharacterLiteral {
    pub fn build(&self) -> Result<DirichletCharacter<Rational>> {
        match self {
            CharacterLiteral::Kronecker(p) => quadratic_character(*p),
            CharacterLiteral::Chi4 => Ok(chi4()),
            CharacterLiteral::Trivial(k) => DirichletCharacter::trivial(*k),
            CharacterLiteral::Table(k, values) => {
                DirichletCharacter::from_table(*k, values.clone()).map(|c| c.with_label(self.to_string()))
            }
        }
    }
}

impl FromStr for CharacterLiteral {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("bad character literal {s:?}: {why}"));
        let number = |t: &str| t.parse::<u64>().map_err(|_| bad("expected a positive integer"));
        let mut parts = s.splitn(3, ':');
        match (parts.next(), parts.next(), parts.next()) {
            (Some("chi4"), None, None) => Ok(CharacterLiteral::Chi4),
            (Some("kronecker"), Some(p), None) => Ok(CharacterLiteral::Kronecker(number(p)?)),
            (Some("trivial"), Some(k), None) => Ok(CharacterLiteral::Trivial(number(k)?)),
            (Some("table"), Some(k), Some(vals)) => {
                let values = vals.split(',').map(str::parse).collect::<Result<Vec<Rational>>>()?;
                Ok(CharacterLiteral::Table(number(k)?, values))
            }
            _ => Err(bad("unknown form")),
        }
    }
}

impl fmt::Display for CharacterLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharacterLiteral::Kronecker(p) => write!(f, "kronecker:{p}"),
            CharacterLiteral::Chi4 => f.write_str("chi4"),
            CharacterLiteral::Trivial(k) => write!(f, "trivial:{k}"),
            CharacterLiteral::Table(k, values) => {
                let vals: Vec<String> = values.iter().map(Rational::to_string).collect();
                write!(f, "table:{k}:{}", vals.join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn ints(vals: &[i64]) -> Vec<Rational> {
        vals.iter().map(|&v| Rational::from(v)).collect()
    }

    #[test]
    fn quadratic_tables() {
        assert_eq!(
            quadratic_character(5).unwrap().values(),
            ints(&[1, -1, -1, 1, 0]).as_slice()
        );
        assert_eq!(quadratic_character(3).unwrap().values(), ints(&[1, -1, 0]).as_slice());
        assert_eq!(quadratic_character(7).unwrap().parity(), Parity::Odd);
        assert_eq!(quadratic_character(13).unwrap().parity(), Parity::Even);
        assert_eq!(quadratic_character(2), Err(Error::NotOddPrime(2)));
        assert_eq!(quadratic_character(9), Err(Error::NotOddPrime(9)));
    }

    #[test]
    fn legendre_matches_squares() {
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            let chi = quadratic_character(p).unwrap();
            let squares: Vec<u64> = (1..p).map(|a| a * a % p).collect();
            for a in 1..p {
                let expected = if squares.contains(&a) { 1 } else { -1 };
                assert_eq!(*chi.value(a as i64), Rational::from(expected));
            }
        }
    }

    #[test]
    fn chi4_values() {
        let chi = chi4();
        assert_eq!(*chi.value(3), Rational::from(-1));
        assert_eq!(*chi.value(2), Rational::zero());
        assert_eq!(*chi.value(5), Rational::one());
        assert_eq!(*chi.value(-1), Rational::from(-1));
        assert_eq!(chi.parity(), Parity::Odd);
        assert!(chi.is_primitive());
        assert!(!chi.is_trivial());
        let from_table = DirichletCharacter::from_table(4, ints(&[1, 0, -1, 0])).unwrap();
        assert_eq!(from_table.values(), chi.values());
    }

    #[test]
    fn table_validation() {
        let t1 = DirichletCharacter::from_table(1, ints(&[1])).unwrap();
        assert!(t1.is_trivial() && t1.is_primitive());
        let t4 = DirichletCharacter::from_table(4, ints(&[1, 0, 1, 0])).unwrap();
        assert!(t4.is_trivial() && !t4.is_primitive());
        let cases: [(u64, &[i64], &str); 4] = [
            (5, &[1, 1, -1, -1, 0], "multiplicativity"),
            (4, &[1, 1, -1, 0], "support"),
            (3, &[-1, 1, 0], "χ(1)"),
            (3, &[1, -1], "entries"),
        ];
        for (k, vals, needle) in cases {
            match DirichletCharacter::from_table(k, ints(vals)) {
                Err(Error::InvalidCharacter(msg)) => assert!(msg.contains(needle), "{msg}"),
                other => panic!("expected validation error, got {other:?}"),
            }
        }
    }

    #[test]
    fn primitivity() {
        assert!(quadratic_character(11).unwrap().is_primitive());
        assert!(!DirichletCharacter::trivial(6).unwrap().is_primitive());
        // χ₃ induced to modulus 6: values on 1..6 are (1, 0, 0, 0, -1, 0)
        let induced = DirichletCharacter::from_table(6, ints(&[1, 0, 0, 0, -1, 0])).unwrap();
        assert!(!induced.is_primitive());
        assert_eq!(induced.parity(), Parity::Odd);
    }

    #[test]
    fn cyclotomic_character() {
        let chi = power_residue_character(5, 4).unwrap();
        let i = CyclotomicElement::zeta(4).unwrap();
        assert_eq!(*chi.value(2), i);
        assert_eq!(chi.parity(), Parity::Odd);
        assert!(chi.is_primitive());
        assert!(power_residue_character(7, 4).is_err());
    }

    #[test]
    fn generalized_bernoulli_examples() {
        let chi = chi4();
        assert_eq!(generalized_bernoulli_poly(&chi, 2), Polynomial::from_ints(&[0, -1]));
        assert_eq!(generalized_bernoulli_number(&chi, 2), Rational::zero());
        assert_eq!(generalized_bernoulli_number(&chi, 7), q("427/2"));
        assert_eq!(
            generalized_bernoulli_number(&quadratic_character(11).unwrap(), 5),
            q("-12750/11")
        );
        assert_eq!(
            generalized_bernoulli_number(&quadratic_character(3).unwrap(), 3),
            q("2/3")
        );
        assert_eq!(tilde_bernoulli_poly(&chi, 2), Polynomial::from_ints(&[1, -1]));
        let gb = GeneralizedBernoulli::compute(&chi, 5);
        assert_eq!(gb.value, gb.polynomial.evaluate(&Rational::zero()));
        assert_eq!(tilde_bernoulli_poly(&chi, 5).evaluate(&Rational::one()), gb.value);
    }

    #[test]
    fn trivial_character_reduces_to_bernoulli() {
        let t1 = DirichletCharacter::trivial(1).unwrap();
        for n in 0..12 {
            assert_eq!(tilde_bernoulli_poly(&t1, n), bernoulli_poly(n));
            assert_eq!(
                generalized_bernoulli_poly(&t1, n),
                bernoulli_poly(n).shift(&Rational::one())
            );
        }
    }

    #[test]
    fn literals() {
        for s in ["kronecker:11", "chi4", "trivial:6", "table:4:1,0,-1,0"] {
            let lit: CharacterLiteral = s.parse().unwrap();
            assert_eq!(lit.to_string(), s);
            assert!(lit.build().is_ok());
        }
        assert_eq!(
            "table:4:1,0,-1,0"
                .parse::<CharacterLiteral>()
                .unwrap()
                .build()
                .unwrap()
                .values(),
            chi4().values()
        );
        for bad in ["chi5", "kronecker", "kronecker:x", "table:3", "table:3:1,a,0", ""] {
            assert!(bad.parse::<CharacterLiteral>().is_err(), "{bad}");
        }
        assert!("kronecker:9".parse::<CharacterLiteral>().unwrap().build().is_err());
        assert!("table:3:1,1,1".parse::<CharacterLiteral>().unwrap().build().is_err());
    }
}
