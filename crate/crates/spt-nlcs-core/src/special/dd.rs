// SPDX-License-Identifier: MIT OR Apache-2.0

//! Double-double arithmetic: unevaluated sums `hi + lo` of two `f64`s
//! giving ≈106 bits (≈32 decimal digits) of working precision.
//!
//! The Macdonald-function series suffer catastrophic cancellation
//! (`K_τ` from `I_{±τ}` differences loses a factor `e^{2x}`), and the
//! log-series of `K₀/K₁` cancel against `ln(x/2)·I₀`; plain `f64` is
//! useless there beyond x ≈ 3. These kernels run in double-double and
//! round once at the end.
//!
//! The implementation is the classical error-free-transformation toolkit
//! (two-sum / two-prod with FMA) plus the handful of transcendental
//! routines the crate needs: exp, ln, sqrt, powi, sin·π, cosh and a
//! Stirling Gamma. Each routine documents its validated domain; all are
//! cross-checked against the exact series oracle in the test-suite.

#![allow(clippy::many_single_char_names)]

use crate::fm;

/// Unevaluated `hi + lo` with `|lo| ≤ ulp(hi)/2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dd {
    /// Leading component.
    pub hi: f64,
    /// Trailing error term.
    pub lo: f64,
}

/// π as a double-double (error ≤ 2⁻¹⁰⁶ π).
pub const DD_PI: Dd = Dd { hi: 3.141592653589793, lo: 1.2246467991473532e-16 };
/// ln 2 as a double-double.
pub const DD_LN2: Dd = Dd { hi: 0.6931471805599453, lo: 2.3190468138462996e-17 };
/// Euler–Mascheroni γ as a double-double.
pub const DD_EULER: Dd = Dd { hi: 0.5772156649015329, lo: -4.942915152430645e-18 };

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    // requires |a| >= |b|
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = fm::fma(a, b, -p);
    (p, err)
}

impl Dd {
    /// Lift an `f64` (exact).
    #[inline]
    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact small-integer value.
    #[inline]
    pub fn from_int(n: i64) -> Self {
        Dd { hi: n as f64, lo: 0.0 }
    }

    /// Correctly-rounded ratio of two exact integers.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Dd::from_int(num).div(Dd::from_int(den))
    }

    /// Round to nearest `f64`.
    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    /// Renormalize a raw pair.
    #[inline]
    fn renorm(hi: f64, lo: f64) -> Self {
        let (s, e) = quick_two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    /// Sum.
    #[inline]
    pub fn add(self, rhs: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let (s1, s2b) = quick_two_sum(s1, s2 + t1);
        Dd::renorm(s1, s2b + t2)
    }

    /// Difference.
    #[inline]
    pub fn sub(self, rhs: Dd) -> Dd {
        self.add(rhs.neg())
    }

    /// Negation.
    #[inline]
    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    /// Product.
    #[inline]
    pub fn mul(self, rhs: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, rhs.hi);
        let p2 = p2 + self.hi * rhs.lo + self.lo * rhs.hi;
        Dd::renorm(p1, p2)
    }

    /// Quotient (two Newton corrections on the `f64` seed).
    #[inline]
    pub fn div(self, rhs: Dd) -> Dd {
        let q1 = self.hi / rhs.hi;
        let r = self.sub(rhs.mul(Dd::from_f64(q1)));
        let q2 = r.hi / rhs.hi;
        let r2 = r.sub(rhs.mul(Dd::from_f64(q2)));
        let q3 = r2.hi / rhs.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd::renorm(s, e + q3)
    }

    /// Scale by an exact `f64` (e.g. a power of two or small integer).
    #[inline]
    pub fn scale(self, s: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, s);
        Dd::renorm(p1, p2 + self.lo * s)
    }

    /// Divide by an exact `f64`. Unlike `scale(1.0/d)` this does not round
    /// the reciprocal, so series terms like `term/k` keep full precision.
    #[inline]
    pub fn div_scalar(self, d: f64) -> Dd {
        let q0 = self.hi / d;
        let (p1, p2) = two_prod(q0, d);
        let (s, e) = two_sum(self.hi, -p1);
        let rem = s + (e + (self.lo - p2));
        Dd::renorm(q0, rem / d)
    }

    /// Square root (requires `self ≥ 0`).
    pub fn sqrt(self) -> Dd {
        if self.hi == 0.0 {
            return Dd::from_f64(0.0);
        }
        let y = fm::sqrt(self.hi);
        // One Newton step in double-double: y' = y + (x − y²)/(2y)
        let yd = Dd::from_f64(y);
        let corr = self.sub(yd.mul(yd)).div(yd.scale(2.0));
        yd.add(corr)
    }

    /// Integer power by repeated squaring.
    pub fn powi(self, n: i32) -> Dd {
        if n == 0 {
            return Dd::from_f64(1.0);
        }
        let mut base = if n < 0 { Dd::from_f64(1.0).div(self) } else { self };
        let mut e = n.unsigned_abs();
        let mut acc = Dd::from_f64(1.0);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    /// `e^self`. Validated for `|self| ≤ 709` (f64 range). Argument is
    /// reduced by `ln 2`; the Taylor tail at `|r| ≤ ln2/2` is below
    /// 10⁻³⁸ after 26 terms.
    pub fn exp(self) -> Dd {
        if self.hi < -745.0 {
            return Dd::from_f64(0.0);
        }
        let k = fm::round(self.hi / DD_LN2.hi);
        let r = self.sub(DD_LN2.scale(k));
        let mut term = Dd::from_f64(1.0);
        let mut sum = Dd::from_f64(1.0);
        for i in 1..=26 {
            term = term.mul(r).div_scalar(i as f64);
            sum = sum.add(term);
        }
        // scale by 2^k exactly
        let two_k = fm::powi(2.0, k as i32);
        sum.scale(two_k)
    }

    /// Natural log (requires `self > 0`). Newton on [`Dd::exp`] from the
    /// `f64` seed; two corrections reach full double-double accuracy.
    pub fn ln(self) -> Dd {
        let mut y = Dd::from_f64(fm::ln(self.hi));
        for _ in 0..2 {
            // y += x·e^{−y} − 1
            let e = self.mul(y.neg().exp());
            y = y.add(e.sub(Dd::from_f64(1.0)));
        }
        y
    }

    /// `cosh(self)` via the exponential.
    pub fn cosh(self) -> Dd {
        let e = self.exp();
        let ei = Dd::from_f64(1.0).div(e);
        e.add(ei).scale(0.5)
    }

    /// `sin(π·self)` with exact integer reduction — accurate even for
    /// large arguments since the reduction `self − round(self)` is exact
    /// in `f64`.
    pub fn sin_pi(self) -> Dd {
        let n = fm::round(self.hi);
        let frac = self.sub(Dd::from_f64(n)); // |frac| ≤ 1/2, exact reduction
        let x = DD_PI.mul(frac);
        // Taylor: sin t = Σ (−1)^k t^{2k+1}/(2k+1)!, |t| ≤ π/2
        let x2 = x.mul(x);
        let mut term = x;
        let mut sum = x;
        for k in 1..=18 {
            term = term.mul(x2).neg().div_scalar((2 * k) as f64 * (2 * k + 1) as f64);
            sum = sum.add(term);
        }
        if (n as i64) % 2 == 0 {
            sum
        } else {
            sum.neg()
        }
    }

    /// Simultaneous `(sin self, cos self)`. The argument is reduced by
    /// multiples of π (`self − k·π`, `|t| ≤ π/2 + ulp`), then both series
    /// are summed jointly; 19 pairs of terms leave the tail below 10⁻³⁶
    /// at `|t| = π/2`. Accurate for `|self| ≲ 10⁶` (the reduction loses
    /// one double-double digit per decade of magnitude).
    pub fn sin_cos(self) -> (Dd, Dd) {
        let k = fm::round(self.hi / DD_PI.hi);
        let t = self.sub(DD_PI.scale(k));
        let t2 = t.mul(t);
        // sin t = t − t³/3! + …, cos t = 1 − t²/2! + …
        let mut sterm = t;
        let mut s = t;
        let mut cterm = Dd::from_f64(1.0);
        let mut c = Dd::from_f64(1.0);
        for j in 1..=19 {
            let tj = 2 * j; // next even index
            cterm = cterm.mul(t2).neg().div_scalar((tj - 1) as f64 * tj as f64);
            c = c.add(cterm);
            sterm = sterm.mul(t2).neg().div_scalar(tj as f64 * (tj + 1) as f64);
            s = s.add(sterm);
        }
        if (k as i64) % 2 == 0 {
            (s, c)
        } else {
            (s.neg(), c.neg())
        }
    }

    /// `self^p` for `self > 0` via `exp(p · ln self)`; `p` enters exactly.
    pub fn powf(self, p: f64) -> Dd {
        self.ln().scale(p).exp()
    }
}

// ---------------------------------------------------------------------------
// Complex double-double
// ---------------------------------------------------------------------------

/// Complex number with double-double components, for quadrature pipelines
/// that must accumulate well below the f64 rounding floor.
#[derive(Clone, Copy, Debug)]
pub struct Cdd {
    /// Real part.
    pub re: Dd,
    /// Imaginary part.
    pub im: Dd,
}

impl Cdd {
    /// Zero.
    pub fn zero() -> Cdd {
        Cdd { re: Dd::from_f64(0.0), im: Dd::from_f64(0.0) }
    }

    /// Lift an exact `f64` pair.
    pub fn from_parts(re: f64, im: f64) -> Cdd {
        Cdd { re: Dd::from_f64(re), im: Dd::from_f64(im) }
    }

    /// Round both components to `f64`.
    pub fn to_parts(self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    /// Component-wise sum.
    pub fn add(self, rhs: Cdd) -> Cdd {
        Cdd { re: self.re.add(rhs.re), im: self.im.add(rhs.im) }
    }

    /// Complex product.
    pub fn mul(self, rhs: Cdd) -> Cdd {
        Cdd {
            re: self.re.mul(rhs.re).sub(self.im.mul(rhs.im)),
            im: self.re.mul(rhs.im).add(self.im.mul(rhs.re)),
        }
    }

    /// Scale both components by a real double-double.
    pub fn scale_dd(self, s: Dd) -> Cdd {
        Cdd { re: self.re.mul(s), im: self.im.mul(s) }
    }

    /// Component-wise negation.
    pub fn neg(self) -> Cdd {
        Cdd { re: self.re.neg(), im: self.im.neg() }
    }

    /// Divide both components by an exact `f64`.
    pub fn div_scalar(self, d: f64) -> Cdd {
        Cdd { re: self.re.div_scalar(d), im: self.im.div_scalar(d) }
    }

    /// Divide both components by a real double-double.
    pub fn div_dd(self, d: Dd) -> Cdd {
        Cdd { re: self.re.div(d), im: self.im.div(d) }
    }

    /// `e^self = e^re (cos im, sin im)`.
    pub fn exp(self) -> Cdd {
        let m = self.re.exp();
        let (s, c) = self.im.sin_cos();
        Cdd { re: m.mul(c), im: m.mul(s) }
    }
}

/// Gegenbauer polynomial `C_n^λ(y)` in double-double via the standard
/// three-term recurrence `n C_n = 2(n+λ−1) y C_{n−1} − (n+2λ−2) C_{n−2}`.
pub fn gegenbauer_dd(n: u32, lambda: f64, y: Dd) -> Dd {
    let lam = Dd::from_f64(lambda);
    if n == 0 {
        return Dd::from_f64(1.0);
    }
    let mut prev = Dd::from_f64(1.0);
    let mut cur = y.mul(lam).scale(2.0);
    for k in 2..=n {
        let kf = k as f64;
        let a = lam.add(Dd::from_f64(kf - 1.0)).scale(2.0); // 2(k+λ−1)
        let b = lam.scale(2.0).add(Dd::from_f64(kf - 2.0)); // k+2λ−2
        let next = a.mul(y).mul(cur).sub(b.mul(prev)).div_scalar(kf);
        prev = cur;
        cur = next;
    }
    cur
}

/// Stirling coefficients `B_{2k}/(2k(2k−1))` for `ln Γ`, k = 1..11.
fn stirling_coeffs() -> [Dd; 11] {
    [
        Dd::from_ratio(1, 12),
        Dd::from_ratio(-1, 360),
        Dd::from_ratio(1, 1260),
        Dd::from_ratio(-1, 1680),
        Dd::from_ratio(1, 1188),
        Dd::from_ratio(-691, 360_360),
        Dd::from_ratio(1, 156),
        Dd::from_ratio(-3617, 122_400),
        Dd::from_ratio(43_867, 244_188),
        Dd::from_ratio(-174_611, 125_400),
        Dd::from_ratio(854_513, 63_756),
    ]
}

/// `ln Γ(x)` for `x ≥ 20` by the Stirling series; next omitted term at
/// x = 20 is below 2·10⁻²⁸ relative.
fn lngamma_stirling(x: Dd) -> Dd {
    let lnx = x.ln();
    let half = Dd::from_ratio(1, 2);
    // (x − 1/2) ln x − x + ln(2π)/2
    let ln_2pi_half = DD_PI.scale(2.0).ln().scale(0.5);
    let mut acc = x.sub(half).mul(lnx).sub(x).add(ln_2pi_half);
    let x2 = x.mul(x);
    let mut xp = x; // x^{2k−1}
    for (k, c) in stirling_coeffs().iter().enumerate() {
        acc = acc.add(c.div(xp));
        if k + 1 < 11 {
            xp = xp.mul(x2);
        }
    }
    acc
}

/// `Γ(x)` in double-double for `x > 0`. Arguments below 20 are shifted up
/// with the recurrence `Γ(x) = Γ(x+m)/∏(x+k)`.
///
/// Validated domain: `0 < x ≤ 170` (beyond which Γ overflows f64 anyway);
/// relative error ≤ 10⁻²⁶ against the exact oracle.
pub fn gamma_dd(x: Dd) -> Dd {
    debug_assert!(x.hi > 0.0, "gamma_dd requires a positive argument");
    let mut shift = Dd::from_f64(1.0);
    let mut y = x;
    while y.hi < 20.0 {
        shift = shift.mul(y);
        y = y.add(Dd::from_f64(1.0));
    }
    lngamma_stirling(y).exp().div(shift)
}

#[cfg(test)]
mod unit {
    use super::*;

    #[test]
    fn arithmetic_roundtrip() {
        let a = Dd::from_ratio(1, 3);
        let b = Dd::from_ratio(1, 7);
        let s = a.add(b); // 10/21
        let back = s.mul(Dd::from_int(21));
        assert!((back.to_f64() - 10.0).abs() < 1e-30);
        let q = a.div(b); // 7/3
        assert!((q.mul(Dd::from_int(3)).to_f64() - 7.0).abs() < 1e-30);
    }

    #[test]
    fn exp_ln_inverse() {
        for &x in &[0.1, 1.0, 3.5, 20.0, 300.0] {
            let d = Dd::from_f64(x);
            let roundtrip = d.ln().exp();
            let rel = (roundtrip.sub(d)).to_f64() / x;
            assert!(rel.abs() < 1e-29, "x = {x}: rel = {rel:e}");
        }
        // exp(ln 2) = 2 through the constant
        let two = DD_LN2.exp();
        assert!((two.to_f64() - 2.0).abs() < 1e-30);
    }

    #[test]
    fn gamma_small_integers() {
        // Γ(6) = 120, Γ(11) = 3628800
        assert!((gamma_dd(Dd::from_int(6)).to_f64() - 120.0).abs() < 1e-10);
        assert!((gamma_dd(Dd::from_int(11)).to_f64() - 3_628_800.0).abs() < 1e-4);
    }

    #[test]
    fn sin_pi_exact_points() {
        assert!(Dd::from_ratio(1, 2).sin_pi().to_f64() - 1.0 == 0.0);
        assert!(Dd::from_int(3).sin_pi().to_f64().abs() < 1e-30);
    }

    #[test]
    fn div_scalar_exact_remainder() {
        // 1/3 as a double-double: hi+lo must reproduce the infinite binary
        // expansion to ~32 digits: |3·(1/3) − 1| below 1e-32.
        let third = Dd::from_f64(1.0).div_scalar(3.0);
        let back = third.scale(3.0).sub(Dd::from_f64(1.0));
        assert!(back.to_f64().abs() < 1e-32, "residual {:e}", back.to_f64());
        // Matches the full double-double division.
        let full = Dd::from_f64(1.0).div(Dd::from_int(3));
        assert!(third.sub(full).to_f64().abs() < 1e-33);
    }

    #[test]
    fn sin_cos_reference_values() {
        // References carried to 36 digits and split into hi+lo pairs.
        let cases: [(f64, (f64, f64), (f64, f64)); 2] = [
            (
                1.0,
                (0.8414709848078965, 1.776845092935536e-18),
                (0.5403023058681398, -4.760954612604417e-17),
            ),
            (
                10.0,
                (-0.5440211108893698, -3.8949898668223557e-17),
                (-0.8390715290764524, -1.4147119988953418e-17),
            ),
        ];
        for (x, sr, cr) in cases {
            let (s, c) = Dd::from_f64(x).sin_cos();
            let sref = Dd::renorm(sr.0, sr.1);
            let cref = Dd::renorm(cr.0, cr.1);
            assert!(s.sub(sref).to_f64().abs() < 1e-31, "sin({x})");
            assert!(c.sub(cref).to_f64().abs() < 1e-31, "cos({x})");
        }
        // Pythagorean identity at an awkward point.
        let (s, c) = Dd::from_f64(1.2345).sin_cos();
        let p = s.mul(s).add(c.mul(c)).sub(Dd::from_f64(1.0));
        assert!(p.to_f64().abs() < 1e-31);
    }

    #[test]
    fn complex_exp_matches_euler() {
        // e^{iπ/2} = i through the double-double pipeline.
        let z = Cdd { re: Dd::from_f64(0.0), im: DD_PI.scale(0.5) };
        let e = z.exp();
        assert!(e.re.to_f64().abs() < 1e-31);
        assert!((e.im.to_f64() - 1.0).abs() < 1e-31);
        // Generic point against the f64 evaluation (agreement at f64 level).
        let w = Cdd::from_parts(0.3, -1.7).exp();
        let (wr, wi) = w.to_parts();
        let m = fm::exp(0.3);
        assert!((wr - m * fm::cos(-1.7)).abs() < 1e-15);
        assert!((wi - m * fm::sin(-1.7)).abs() < 1e-15);
    }

    #[test]
    fn gegenbauer_dd_matches_closed_forms() {
        // Exact-binary y = 1/4 keeps the closed forms exact in f64.
        // C₂^λ(y) = 2λ(λ+1)y² − λ at λ = 3/2: 7.5/16 − 1.5 = −1.03125.
        let y = Dd::from_ratio(1, 4);
        let c2 = gegenbauer_dd(2, 1.5, y);
        assert!((c2.to_f64() + 1.03125).abs() < 1e-28);
        // λ = 1 gives Chebyshev U: U₄(1/4) = 16/256 − 12/16 + 1 = 0.3125.
        let u4 = gegenbauer_dd(4, 1.0, y);
        assert!((u4.to_f64() - 0.3125).abs() < 1e-28);
    }
}
