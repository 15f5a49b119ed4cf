// SPDX-License-Identifier: MIT OR Apache-2.0

//! Small conveniences over [`BigRational`]: integer-pair constructors, exact
//! factorial/Pochhammer primitives, `p/q` parsing and deterministic
//! rendering. Everything here is exact; no floats.

use alloc::string::{String, ToString};
use core::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational from an integer.
pub fn q_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact rational `num/den`. Panics if `den == 0`.
pub fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact factorial `n!`.
pub fn factorial(n: u32) -> BigRational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    BigRational::from_integer(acc)
}

/// Exact rising factorial (Pochhammer symbol) `(a)_n = a(a+1)⋯(a+n−1)`,
/// with the empty-product convention `(a)_0 = 1`.
pub fn pochhammer(a: &BigRational, n: u32) -> BigRational {
    let mut acc = BigRational::one();
    let mut term = a.clone();
    for _ in 0..n {
        acc *= &term;
        term += BigRational::one();
    }
    acc
}

/// Parse a rational from `"p"`, `"p/q"` or a plain decimal such as `"2.5"`.
///
/// Returns `None` on malformed input or a zero denominator.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int_part.trim_start().starts_with('-');
        let i: BigInt = if int_part.is_empty() || int_part == "-" {
            BigInt::zero()
        } else {
            int_part.parse().ok()?
        };
        let f: BigInt = frac_part.parse().ok()?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let frac = BigRational::new(f, scale);
        let int = BigRational::from_integer(i);
        return Some(if negative { int - frac } else { int + frac });
    }
    let n: BigInt = s.parse().ok()?;
    Some(BigRational::from_integer(n))
}

/// Render as `"p/q"` (or `"p"` when the denominator is 1), matching the
/// JSON schema used by the CLI.
pub fn render_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        let mut s = String::new();
        let _ = write!(s, "{}/{}", r.numer(), r.denom());
        s
    }
}

/// Nearest-`f64` value of an exact rational.
pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// True when `r` is an integer and `r ≥ 0`.
pub fn is_nonneg_int(r: &BigRational) -> bool {
    r.denom().is_one() && !r.numer().is_negative()
}

/// If `2r` is a nonnegative integer, return it.
///
/// This is the exactness gate for the general-γ moment convention: the
/// product `n!(n+γ)(2γ+1)_{n−1}` is rational for every rational γ, but the
/// `n = 1` positive-sequence value `Γ(2γ+1)` is exact only when `2γ` is a
/// nonnegative integer.
pub fn two_gamma_as_int(gamma: &BigRational) -> Option<u32> {
    let two_g = gamma * q_int(2);
    if is_nonneg_int(&two_g) {
        two_g.numer().to_u32()
    } else {
        None
    }
}

/// Exact `Γ(m+1) = m!` for a nonnegative integer `m`, as a rational.
pub fn gamma_int(m: u32) -> BigRational {
    factorial(m)
}

/// Exact `Γ(k + 1/2) = (2k)! √π / (4^k k!)` — the rational cofactor only,
/// i.e. `Γ(k+1/2)/√π`. Useful for half-integer Gamma bookkeeping.
pub fn gamma_half_cofactor(k: u32) -> BigRational {
    // Γ(1/2 + k) = (2k)!/(4^k k!) · √π
    let num = factorial(2 * k);
    let den = factorial(k) * BigRational::from_integer(BigInt::from(4u32).pow(k));
    num / den
}
