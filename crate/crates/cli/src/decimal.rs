//! Decimal rendering of exact rationals for plot output.

use num_bigint::BigInt;
use num_traits::Signed;
use zetaval_core::Rational;

fn pow10(e: i64) -> BigInt {
    BigInt::from(10u32).pow(e.unsigned_abs() as u32)
}

/// `q / 10^e` as a numerator/denominator pair of non-negative integers.
fn over_pow10(num: &BigInt, den: &BigInt, e: i64) -> (BigInt, BigInt) {
    if e >= 0 {
        (num.clone(), den * pow10(e))
    } else {
        (num * pow10(e), den.clone())
    }
}

/// Renders `q` to `sig` significant digits, rounding half to even.
pub fn round_sig(q: &Rational, sig: u32) -> String {
    if q.is_zero() {
        return "0".to_string();
    }
    let num = q.numer().abs();
    let den = q.denom().clone();
    // find e with 10^e <= |q| < 10^{e+1}
    let mut e = num.to_string().len() as i64 - den.to_string().len() as i64;
    loop {
        let (a, b) = over_pow10(&num, &den, e);
        if a < b {
            e -= 1;
        } else if a >= &b * 10 {
            e += 1;
        } else {
            break;
        }
    }
    let (a, b) = over_pow10(&num, &den, e - (sig as i64 - 1));
    let mut digits = &a / &b;
    let twice_rem = (&a % &b) * 2;
    if twice_rem > b || (twice_rem == b && (&digits % 2u32) == BigInt::from(1u32)) {
        digits += 1u32;
    }
    if digits == pow10(sig as i64) {
        digits /= 10u32;
        e += 1;
    }
    let digits = digits.to_string();
    let sign = if q.is_negative() { "-" } else { "" };
    let body = if (-5..sig as i64).contains(&e) {
        if e >= 0 {
            let (int, frac) = digits.split_at(e as usize + 1);
            join_point(int, frac.trim_end_matches('0'))
        } else {
            let zeros = "0".repeat((-e - 1) as usize);
            format!("0.{zeros}{}", digits.trim_end_matches('0'))
        }
    } else {
        let (lead, rest) = digits.split_at(1);
        format!("{}e{e}", join_point(lead, rest.trim_end_matches('0')))
    };
    format!("{sign}{body}")
}

fn join_point(int: &str, frac: &str) -> String {
    if frac.is_empty() {
        int.to_string()
    } else {
        format!("{int}.{frac}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> String {
        round_sig(&s.parse().unwrap(), 12)
    }

    #[test]
    fn rendering() {
        assert_eq!(r("0"), "0");
        assert_eq!(r("1/2"), "0.5");
        assert_eq!(r("-1/12"), "-0.0833333333333");
        assert_eq!(r("2/3"), "0.666666666667");
        assert_eq!(r("1/24"), "0.0416666666667");
        assert_eq!(r("100"), "100");
        assert_eq!(r("1/3000000"), "3.33333333333e-7");
        assert_eq!(r("1234567890123456"), "1.23456789012e15");
        assert_eq!(r("999999999999"), "999999999999");
        assert_eq!(r("9999999999999"), "1e13");
    }

    #[test]
    fn half_even() {
        let two = |s: &str| round_sig(&s.parse().unwrap(), 2);
        assert_eq!(two("1/8"), "0.12");
        assert_eq!(two("3/8"), "0.38");
        assert_eq!(two("-1/8"), "-0.12");
        assert_eq!(two("995/10"), "1e2");
        assert_eq!(two("985/10"), "98");
        assert_eq!(two("975/10"), "98");
    }
}
