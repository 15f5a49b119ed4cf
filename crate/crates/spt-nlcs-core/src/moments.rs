// SPDX-License-Identifier: MIT OR Apache-2.0

//! The positive-number sequence of the symmetric Pöschl–Teller oscillator
//! and the three factorial-type products built from it.
//!
//! # The sequence
//!
//! For a parameter γ ≥ 0 the oscillator's spectrum bookkeeping uses
//!
//! ```text
//! x_0^γ = 0,
//! x_1^γ = Γ(2γ+1),
//! x_n^γ = n (n+γ) (n+2γ−1) / (n+γ−1),   n ≥ 2,
//! ```
//!
//! which degenerates to `x_n = n²` at γ = 0 and to `x_n = (n+1)²` (for
//! n ≥ 2; `x_1 = Γ(3) = 2`) at γ = 1. The `n = 1` value follows the
//! Gamma-function convention of the source analysis; the *generic* `n = 1`
//! formula value `2(1+γ)` is what the factorial products below use.
//!
//! # Three factorial products, three names
//!
//! The analysis overloads one symbol `x_n!` for three distinct products.
//! They differ only in their treatment of the first factor, but the
//! difference propagates factors of 2 through every downstream identity, so
//! this crate names them:
//!
//! * [`gen_factorial`] — `gf(n) = n! (n+γ) (2γ+1)_{n−1}`, `gf(0) = 1`.
//!   The coherent-state coefficient denominators and the reproducing
//!   kernel use this one. Σ rⁿ/gf(n) = 2·₁F₂(γ; γ+1, 2γ; r) − 1.
//! * [`seq_factorial`] — `sf(n) = ∏_{k=1..n} x_k` with the generic
//!   `x_1 = 2(1+γ)`, equivalently `sf(n) = n!(n+γ)(2γ)_n/γ = 2·gf(n)` for
//!   n ≥ 1 and `sf(0) = 1`. Wavefunctions, Bargmann images and the
//!   measure-moment identities use this one.
//!   Σ rⁿ/sf(n) = ₁F₂(γ; γ+1, 2γ; r), and `sf(n, 0) = 2(n!)²` (n ≥ 1),
//!   `sf(n, 1) = ((n+1)!)²` for **all** n.
//! * [`growth_weight`] — `cont(n) = sf(n)/2` (so `cont(0) = 1/2`), i.e. the
//!   literal Γ-ratio weight `n!(n+γ)Γ(n+2γ)/Γ(2γ+1)` of the growth
//!   condition on the Fock–Bargmann space.
//!   Σ rⁿ/cont(n) = 2·₁F₂(γ; γ+1, 2γ; r), the normalization constant.
//!
//! All three are rational for rational γ and are computed exactly.
//!
//! # Moment conventions
//!
//! [`moments_for`] produces the Stieltjes moment tables the Hankel module
//! consumes: `(n!)²` (γ = 0 convention), `((n+1)!)²` (γ = 1 convention) and
//! the general-γ convention `gf(n, γ)`.

use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::fm;
use crate::rational::{factorial, pochhammer, q_int, to_f64, two_gamma_as_int};

/// Which moment sequence a Hankel/orthogonal-polynomial construction uses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceSpec {
    /// `μ_n = (n!)²` — the γ = 0 convention.
    FactorialSquared,
    /// `μ_n = ((n+1)!)²` — the γ = 1 convention.
    ShiftedFactorialSquared,
    /// `μ_n = n!(n+γ)(2γ+1)_{n−1}` — the general-γ convention
    /// ([`gen_factorial`]). γ must be a nonnegative rational.
    GeneralGamma(BigRational),
}

impl SequenceSpec {
    /// The γ this convention represents.
    pub fn gamma(&self) -> BigRational {
        match self {
            SequenceSpec::FactorialSquared => BigRational::zero(),
            SequenceSpec::ShiftedFactorialSquared => BigRational::one(),
            SequenceSpec::GeneralGamma(g) => g.clone(),
        }
    }
}

/// Errors from the exact moment layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MomentError {
    /// γ must be a nonnegative rational.
    NegativeGamma,
    /// The requested value is exact only when 2γ is a nonnegative integer
    /// (the `n = 1` sequence value is `Γ(2γ+1)`); use the float path.
    ExactnessUnavailable,
}

impl fmt::Display for MomentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MomentError::NegativeGamma => write!(f, "gamma must be a nonnegative rational"),
            MomentError::ExactnessUnavailable => write!(
                f,
                "exact value unavailable: the n = 1 sequence value Gamma(2*gamma + 1) \
                 is exact only when 2*gamma is a nonnegative integer; use the f64 path"
            ),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for MomentError {}

fn check_gamma(gamma: &BigRational) -> Result<(), MomentError> {
    if gamma.is_negative() {
        Err(MomentError::NegativeGamma)
    } else {
        Ok(())
    }
}

/// Exact sequence value `x_n^γ`.
///
/// * `x_0 = 0`;
/// * `x_1 = Γ(2γ+1)` — exact only when 2γ ∈ ℤ≥0, otherwise
///   [`MomentError::ExactnessUnavailable`] (use [`x_seq_f64`]);
/// * `x_n = n(n+γ)(n+2γ−1)/(n+γ−1)` for n ≥ 2 — exact for every rational γ.
///
/// Examples: `x_2^1 = 9`, `x_5^0 = 25`, `x_1^{1/2} = Γ(2) = 1`.
pub fn x_seq(n: u32, gamma: &BigRational) -> Result<BigRational, MomentError> {
    check_gamma(gamma)?;
    match n {
        0 => Ok(BigRational::zero()),
        1 => {
            let two_g = two_gamma_as_int(gamma).ok_or(MomentError::ExactnessUnavailable)?;
            // Γ(2γ+1) with 2γ = two_g ∈ ℤ≥0 is (two_g)!.
            Ok(factorial(two_g))
        }
        _ => {
            let nq = q_int(n as i64);
            let num = &nq * (&nq + gamma) * (&nq + q_int(2) * gamma - BigRational::one());
            let den = &nq + gamma - BigRational::one();
            Ok(num / den)
        }
    }
}

/// Float sequence value `x_n^γ`; supports every γ ≥ 0 (uses the Gamma
/// function for `n = 1`).
pub fn x_seq_f64(n: u32, gamma: f64) -> f64 {
    match n {
        0 => 0.0,
        1 => crate::special::gamma_real(2.0 * gamma + 1.0),
        _ => {
            let nf = n as f64;
            nf * (nf + gamma) * (nf + 2.0 * gamma - 1.0) / (nf + gamma - 1.0)
        }
    }
}

/// Exact generalized factorial `gf(n, γ) = n!(n+γ)(2γ+1)_{n−1}`, `gf(0) = 1`.
///
/// This is the coherent-state denominator convention. Reductions:
/// `gf(n, 0) = (n!)²` and `gf(n, 1) = ((n+1)!)²/2` for n ≥ 1.
pub fn gen_factorial(n: u32, gamma: &BigRational) -> Result<BigRational, MomentError> {
    check_gamma(gamma)?;
    if n == 0 {
        return Ok(BigRational::one());
    }
    let two_g_plus_1 = q_int(2) * gamma + BigRational::one();
    Ok(factorial(n) * (q_int(n as i64) + gamma) * pochhammer(&two_g_plus_1, n - 1))
}

/// Float generalized factorial (for large γ or quick paths).
pub fn gen_factorial_f64(n: u32, gamma: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut acc = (n as f64) + gamma;
    for k in 1..=n {
        acc *= k as f64;
    }
    for k in 0..(n - 1) {
        acc *= 2.0 * gamma + 1.0 + k as f64;
    }
    acc
}

/// Exact product factorial `sf(n, γ) = ∏_{k=1..n} x_k^γ` with the generic
/// first factor `x_1 = 2(1+γ)`; equals `2·gf(n, γ)` for n ≥ 1, and
/// `sf(0) = 1` (empty product).
///
/// Reductions: `sf(n, 0) = 2(n!)²` for n ≥ 1; `sf(n, 1) = ((n+1)!)²` for
/// **all** n ≥ 0 (the γ = 1 reduction is kink-free).
pub fn seq_factorial(n: u32, gamma: &BigRational) -> Result<BigRational, MomentError> {
    if n == 0 {
        check_gamma(gamma)?;
        return Ok(BigRational::one());
    }
    Ok(q_int(2) * gen_factorial(n, gamma)?)
}

/// Float product factorial.
pub fn seq_factorial_f64(n: u32, gamma: f64) -> f64 {
    if n == 0 {
        1.0
    } else {
        2.0 * gen_factorial_f64(n, gamma)
    }
}

/// `ln sf(n, γ)` in f64 — overflow-safe path for the harmonic-oscillator
/// limit (γ ~ 10⁴, where `sf(n) ~ n!(2γ)ⁿ` overflows long before n = 256).
pub fn ln_seq_factorial_f64(n: u32, gamma: f64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let mut acc = fm::ln(2.0) + fm::ln(n as f64 + gamma);
    for k in 1..=n {
        acc += fm::ln(k as f64);
    }
    for k in 0..(n - 1) {
        acc += fm::ln(2.0 * gamma + 1.0 + k as f64);
    }
    acc
}

/// Exact growth-condition weight `cont(n, γ) = sf(n, γ)/2`, i.e. the
/// literal `n!(n+γ)Γ(n+2γ)/Γ(2γ+1)` (value **1/2** at n = 0).
pub fn growth_weight(n: u32, gamma: &BigRational) -> Result<BigRational, MomentError> {
    Ok(seq_factorial(n, gamma)? / q_int(2))
}

/// Exact moment table `μ_0 .. μ_{count−1}` for a [`SequenceSpec`].
///
/// * `FactorialSquared` → `(n!)²`
/// * `ShiftedFactorialSquared` → `((n+1)!)²`
/// * `GeneralGamma(γ)` → `gf(n, γ)` — e.g. γ = 2 gives `1, 3, 40, …`
pub fn moments_for(spec: &SequenceSpec, count: usize) -> Result<Vec<BigRational>, MomentError> {
    let mut out = Vec::with_capacity(count);
    match spec {
        SequenceSpec::FactorialSquared => {
            for n in 0..count {
                let f = factorial(n as u32);
                out.push(&f * &f);
            }
        }
        SequenceSpec::ShiftedFactorialSquared => {
            for n in 0..count {
                let f = factorial(n as u32 + 1);
                out.push(&f * &f);
            }
        }
        SequenceSpec::GeneralGamma(g) => {
            check_gamma(g)?;
            for n in 0..count {
                out.push(gen_factorial(n as u32, g)?);
            }
        }
    }
    Ok(out)
}

/// Normalization series value `Σ_{n≥0} rⁿ/sf(n, γ)` = ₁F₂(γ; γ+1, 2γ; r) in
/// f64, summed directly from the exact weights (reference path; the fast
/// path is [`crate::special::hyp1f2`]).
pub fn norm_series_f64(gamma: f64, r: f64, terms: usize) -> f64 {
    let mut acc = 0.0;
    for n in 0..terms {
        let s = seq_factorial_f64(n as u32, gamma);
        if !s.is_finite() {
            break;
        }
        let t = fm::powi(r, n as i32) / s;
        acc += t;
        if t.abs() < 1e-18 * acc.abs() && n > 2 {
            break;
        }
    }
    acc
}

/// Asymptotic regime report for large γ: returns the maximum over
/// `1 ≤ n ≤ n_max` of `|x_n^γ/(2γn) − 1|` together with a flag that the
/// deviation is monotone increasing in n.
///
/// The rational product form `x_n^γ = n(n+γ)(n+2γ−1)/(n+γ−1)` is used for
/// every n here (at n = 1 that is the limit-consistent continuation
/// `2(1+γ)`, not the sequence's Γ(2γ+1) convention, which has no harmonic
/// limit). For fixed n, `x_n^γ/(2γn) = (1 + n/γ)(1 + (n−1)/(2γ))/(1 +
/// (n−1)/γ) → 1` with deviation `≈ (n+1)/(2γ)`; the bound `< 10/γ` holds
/// for n ≤ 6 at γ ≥ 100.
pub fn asymptotic_deviation(n_max: u32, gamma: f64) -> (f64, bool) {
    let mut worst: f64 = 0.0;
    let mut monotone = true;
    let mut prev: f64 = 0.0;
    for n in 1..=n_max {
        let nf = n as f64;
        let x = nf * (nf + gamma) * (nf + 2.0 * gamma - 1.0) / (nf + gamma - 1.0);
        let dev = fm::abs(x / (2.0 * gamma * nf) - 1.0);
        if dev + 1e-15 < prev {
            monotone = false;
        }
        prev = dev;
        if dev > worst {
            worst = dev;
        }
    }
    (worst, monotone)
}

/// Exact-to-f64 shortcut for tests and CLI tables.
pub fn moment_f64(spec: &SequenceSpec, n: u32) -> Result<f64, MomentError> {
    let v = moments_for(spec, n as usize + 1)?;
    Ok(to_f64(&v[n as usize]))
}
