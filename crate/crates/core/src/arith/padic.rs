use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{is_prime, Rational};
use crate::error::{Error, Result};

/// `ord_p` of a rational; zero has infinite valuation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PAdicValuation {
    Finite(i64),
    Infinity,
}

impl PAdicValuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            PAdicValuation::Finite(v) => Some(v),
            PAdicValuation::Infinity => None,
        }
    }
}

impl Ord for PAdicValuation {
    fn cmp(&self, other: &Self) -> Ordering {
        use PAdicValuation::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinity) => Ordering::Less,
            (Infinity, Finite(_)) => Ordering::Greater,
            (Infinity, Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for PAdicValuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for PAdicValuation {
    type Output = PAdicValuation;
    fn add(self, rhs: Self) -> Self {
        match (self, rhs) {
            (PAdicValuation::Finite(a), PAdicValuation::Finite(b)) => PAdicValuation::Finite(a + b),
            _ => PAdicValuation::Infinity,
        }
    }
}

impl fmt::Display for PAdicValuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PAdicValuation::Finite(v) => write!(f, "{v}"),
            PAdicValuation::Infinity => f.write_str("inf"),
        }
    }
}

fn multiplicity(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.clone();
    let mut count = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return count;
        }
        n = q;
        count += 1;
    }
}

/// p-adic valuation of `q`. `p` must be prime.
pub fn vp(q: &Rational, p: u64) -> Result<PAdicValuation> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if q.is_zero() {
        return Ok(PAdicValuation::Infinity);
    }
    let p = BigInt::from(p);
    Ok(PAdicValuation::Finite(
        multiplicity(q.numer(), &p) - multiplicity(q.denom(), &p),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn table_values() {
        assert_eq!(vp(&q("-12750/11"), 11).unwrap(), PAdicValuation::Finite(-1));
        assert_eq!(vp(&Rational::zero(), 7).unwrap(), PAdicValuation::Infinity);
        assert_eq!(vp(&q("-691/2730"), 7).unwrap(), PAdicValuation::Finite(-1));
        assert_eq!(vp(&q("-691/2730"), 691).unwrap(), PAdicValuation::Finite(1));
        assert_eq!(vp(&q("48/7"), 2).unwrap(), PAdicValuation::Finite(4));
    }

    #[test]
    fn rejects_non_primes() {
        assert_eq!(vp(&q("3"), 9), Err(Error::NotPrime(9)));
        assert_eq!(vp(&q("3"), 1), Err(Error::NotPrime(1)));
    }

    fn arb_nonzero() -> impl Strategy<Value = Rational> {
        (prop_oneof![-5000i64..-1, 1i64..5000], 1i64..5000).prop_map(|(n, d)| Rational::frac(n, d))
    }

    proptest! {
        #[test]
        fn valuation_laws(a in arb_nonzero(), b in arb_nonzero(), p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13])) {
            let va = vp(&a, p).unwrap();
            let vb = vp(&b, p).unwrap();
            prop_assert_eq!(vp(&(&a * &b), p).unwrap(), va + vb);
            prop_assert!(vp(&(&a + &b), p).unwrap() >= va.min(vb));
        }
    }
}
