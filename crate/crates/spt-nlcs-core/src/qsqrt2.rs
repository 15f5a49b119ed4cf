// SPDX-License-Identifier: MIT OR Apache-2.0

//! Exact arithmetic in the quadratic field ℚ[√2].
//!
//! The shift-operator polynomial families have coefficients of the form
//! `a + b√2` with `a, b ∈ ℚ` (the recurrences mix a `√2·x` term with
//! rational ones), so they are exactly representable here. The pair is kept
//! separated; nothing is ever rounded.

use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::rational::{q_int, render_rational, to_f64};

/// `a + b·√2` with exact rational `a`, `b`.
#[derive(Clone, PartialEq, Eq)]
pub struct Qs2 {
    /// Rational part.
    pub a: BigRational,
    /// Coefficient of √2.
    pub b: BigRational,
}

impl Qs2 {
    /// Build from parts.
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Qs2 { a, b }
    }

    /// The rational `r` embedded as `r + 0·√2`.
    pub fn from_rational(r: BigRational) -> Self {
        Qs2 { a: r, b: BigRational::zero() }
    }

    /// `√2` itself.
    pub fn sqrt2() -> Self {
        Qs2 { a: BigRational::zero(), b: BigRational::one() }
    }

    /// Integer shorthand.
    pub fn int(n: i64) -> Self {
        Qs2::from_rational(q_int(n))
    }

    /// Multiplicative inverse; `None` for zero.
    /// `(a + b√2)⁻¹ = (a − b√2)/(a² − 2b²)`; the norm `a² − 2b²` vanishes
    /// only at zero since √2 is irrational.
    pub fn inv(&self) -> Option<Self> {
        let norm = &self.a * &self.a - q_int(2) * &self.b * &self.b;
        if norm.is_zero() {
            return None;
        }
        Some(Qs2 { a: &self.a / &norm, b: -(&self.b / &norm) })
    }

    /// True iff both parts are zero.
    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Nearest-f64 value `a + b·√2`.
    pub fn to_f64(&self) -> f64 {
        to_f64(&self.a) + to_f64(&self.b) * core::f64::consts::SQRT_2
    }

    /// Deterministic rendering `a` / `b√2` / `a+b√2` (exact parts as `p/q`).
    pub fn render(&self) -> String {
        use core::fmt::Write as _;
        let mut s = String::new();
        if self.b.is_zero() {
            let _ = write!(s, "{}", render_rational(&self.a));
        } else if self.a.is_zero() {
            let _ = write!(s, "{}*sqrt2", render_rational(&self.b));
        } else {
            let _ = write!(s, "{}+{}*sqrt2", render_rational(&self.a), render_rational(&self.b));
        }
        s
    }
}

impl fmt::Debug for Qs2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl Zero for Qs2 {
    fn zero() -> Self {
        Qs2::from_rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        Qs2::is_zero(self)
    }
}

impl One for Qs2 {
    fn one() -> Self {
        Qs2::from_rational(BigRational::one())
    }
}

impl Add for Qs2 {
    type Output = Qs2;
    fn add(self, rhs: Qs2) -> Qs2 {
        Qs2 { a: self.a + rhs.a, b: self.b + rhs.b }
    }
}

impl AddAssign for Qs2 {
    fn add_assign(&mut self, rhs: Qs2) {
        self.a += rhs.a;
        self.b += rhs.b;
    }
}

impl Sub for Qs2 {
    type Output = Qs2;
    fn sub(self, rhs: Qs2) -> Qs2 {
        Qs2 { a: self.a - rhs.a, b: self.b - rhs.b }
    }
}

impl SubAssign for Qs2 {
    fn sub_assign(&mut self, rhs: Qs2) {
        self.a -= rhs.a.clone();
        self.b -= rhs.b.clone();
    }
}

impl Neg for Qs2 {
    type Output = Qs2;
    fn neg(self) -> Qs2 {
        Qs2 { a: -self.a, b: -self.b }
    }
}

impl Mul for Qs2 {
    type Output = Qs2;
    // (a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2
    fn mul(self, rhs: Qs2) -> Qs2 {
        let ac = &self.a * &rhs.a;
        let bd = &self.b * &rhs.b;
        let ad = &self.a * &rhs.b;
        let bc = &self.b * &rhs.a;
        Qs2 { a: ac + q_int(2) * bd, b: ad + bc }
    }
}

impl MulAssign for Qs2 {
    fn mul_assign(&mut self, rhs: Qs2) {
        let out = self.clone() * rhs;
        *self = out;
    }
}

impl Mul<&Qs2> for &Qs2 {
    type Output = Qs2;
    fn mul(self, rhs: &Qs2) -> Qs2 {
        self.clone() * rhs.clone()
    }
}
