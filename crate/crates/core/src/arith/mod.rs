//! Exact scalar arithmetic: rationals, p-adic valuations and cyclotomic numbers.

mod cyclotomic;
mod padic;
mod primes;
mod rational;
mod scalar;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, CyclotomicElement};
pub use padic::{vp, PAdicValuation};
pub use primes::{is_odd_prime, is_prime, mod_pow};
pub use rational::Rational;
pub use scalar::Scalar;

use num_bigint::BigInt;

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pascal_rows() {
        for n in 0..30u64 {
            for k in 1..=n {
                assert_eq!(binomial(n + 1, k), binomial(n, k) + binomial(n, k - 1));
            }
        }
        assert_eq!(binomial(13, 20), BigInt::from(0));
        assert_eq!(binomial(40, 20), BigInt::from(137846528820u64));
    }
}
