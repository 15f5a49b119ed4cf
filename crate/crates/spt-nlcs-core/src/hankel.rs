// SPDX-License-Identifier: MIT OR Apache-2.0

//! Monic orthogonal polynomials from moment sequences, exactly.
//!
//! A [`SequenceSpec`] supplies the even moments `μ_{2k}` of a symmetric
//! measure on the line (odd moments vanish). [`monic_ops`] builds the monic
//! orthogonal family by the Stieltjes recurrence
//!
//! ```text
//! P_{n+1}(x) = x·P_n(x) − β_n·P_{n−1}(x),   β_n = ξ_n/ξ_{n−1},
//! ξ_n = ⟨P_n, P_n⟩ = ⟨P_n, xⁿ⟩  (monic + orthogonality)
//! ```
//!
//! entirely in `BigRational` — every ξ, β, and coefficient below is exact.
//! The equivalent Hankel-determinant route (`Δ_k = det[μ_{i+j}]_{i,j<k}`,
//! `ξ_n = Δ_{n+1}/Δ_n`, and the classical bordered-determinant formula for
//! `P_n` itself) is also implemented and the two constructions are
//! certified equal in tests through degree 6 on every built-in convention.
//!
//! For the `(n!)²` convention the measure is explicit —
//! `dη₀(t) = 2K₀(2|t|)|t| dt` — and quadrature ties the exact ξ's to the
//! [`crate::special`] Macdonald kernel. The `((n+1)!)²` convention carries
//! the companion family (named `Q_n` in reports); even-degree members
//! satisfy `x·Q_{2n}(x) = P_{2n+1}(x)` exactly ([`kernel_identity_check`]).
//!
//! The half-line images `V_n` ([`half_line_poly`]) are the even-degree
//! polynomials re-expressed in `x = t²`, carried as (monic polynomial,
//! exact norm²) pairs so that no irrational normalization ever enters the
//! rational arithmetic.

use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::fm;
use crate::moments::{moments_for, MomentError, SequenceSpec};
use crate::poly::Poly;

/// Errors from Hankel-side construction and evaluation.
#[derive(Clone, Debug, PartialEq)]
pub enum HankelError {
    /// The moment sequence failed positive-definiteness: the first norm
    /// `ξ_n ≤ 0` is reported (equivalently the `(n+1)×(n+1)` Hankel
    /// determinant is not positive).
    NonPositiveDefinite {
        /// Degree at which positivity first fails.
        n: usize,
    },
    /// Requested index beyond the constructed range.
    OutOfRange {
        /// Requested index.
        n: usize,
        /// Largest available index.
        max: usize,
    },
    /// An even-degree polynomial unexpectedly carried odd-degree terms.
    ParityViolation,
    /// Weight-class parameter outside `{1, 2}`: the remaining members of
    /// the ultra-exponential weight class have no closed Macdonald form
    /// here and are out of scope.
    UnsupportedWeightClass {
        /// The offending parameter.
        k: i64,
    },
    /// Weight evaluation requires `x > 0`.
    WeightDomain,
    /// Propagated moment-layer error.
    Moments(MomentError),
}

impl core::fmt::Display for HankelError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            HankelError::NonPositiveDefinite { n } => {
                write!(f, "moment sequence is not positive-definite: xi_{n} <= 0")
            }
            HankelError::OutOfRange { n, max } => {
                write!(f, "index {n} out of computed range (max {max})")
            }
            HankelError::ParityViolation => {
                write!(f, "internal parity invariant breached (odd coefficient in even polynomial)")
            }
            HankelError::UnsupportedWeightClass { k } => {
                write!(
                    f,
                    "ultra-exponential weight class parameter k = {k} is out of scope (supported: k = 1, 2)"
                )
            }
            HankelError::WeightDomain => write!(f, "weight requires x > 0"),
            HankelError::Moments(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for HankelError {}

impl From<MomentError> for HankelError {
    fn from(e: MomentError) -> Self {
        HankelError::Moments(e)
    }
}

/// A constructed monic orthogonal system (immutable once built).
#[derive(Clone, Debug)]
pub struct OrthoSystem {
    spec: SequenceSpec,
    /// Even moments `μ_{2k}`, k = 0..=n_max (odd moments are identically 0).
    even_moments: Vec<BigRational>,
    /// Monic polynomials `P_0..P_{n_max}`.
    polys: Vec<Poly<BigRational>>,
    /// Norms `ξ_0..ξ_{n_max}`.
    xi: Vec<BigRational>,
    /// Recurrence coefficients; `betas[n]` = β_n for n ≥ 1 (`betas[0]` is 0
    /// by convention — the recurrence never uses it).
    betas: Vec<BigRational>,
}

/// Moment `μ_j` of the symmetrized measure (0 for odd `j`).
fn mu(even: &[BigRational], j: usize) -> BigRational {
    if j % 2 == 1 {
        BigRational::zero()
    } else {
        even[j / 2].clone()
    }
}

/// `⟨p, x^m⟩` under the moment functional.
fn pair_xm(even: &[BigRational], p: &Poly<BigRational>, m: usize) -> BigRational {
    let mut acc = BigRational::zero();
    for (j, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            acc += c * mu(even, j + m);
        }
    }
    acc
}

/// Build the monic orthogonal system of a [`SequenceSpec`] through degree
/// `n_max` (inclusive) by the exact Stieltjes recurrence.
///
/// Fails with [`HankelError::NonPositiveDefinite`] at the first degree
/// whose norm is not strictly positive.
pub fn monic_ops(spec: &SequenceSpec, n_max: usize) -> Result<OrthoSystem, HankelError> {
    let even = moments_for(spec, n_max + 1)?;
    let mut polys: Vec<Poly<BigRational>> = Vec::with_capacity(n_max + 1);
    let mut xi: Vec<BigRational> = Vec::with_capacity(n_max + 1);
    let mut betas: Vec<BigRational> = Vec::with_capacity(n_max + 1);
    betas.push(BigRational::zero());

    polys.push(Poly::constant(BigRational::one()));
    xi.push(even[0].clone());
    if !xi[0].is_positive() {
        return Err(HankelError::NonPositiveDefinite { n: 0 });
    }
    if n_max >= 1 {
        polys.push(Poly::x());
        xi.push(pair_xm(&even, &polys[1], 1));
        if !xi[1].is_positive() {
            return Err(HankelError::NonPositiveDefinite { n: 1 });
        }
    }
    for n in 1..n_max {
        let beta = &xi[n] / &xi[n - 1];
        let next = polys[n].mul_x().sub(&polys[n - 1].scale(&beta));
        let norm = pair_xm(&even, &next, n + 1);
        betas.push(beta);
        polys.push(next);
        if !norm.is_positive() {
            return Err(HankelError::NonPositiveDefinite { n: n + 1 });
        }
        xi.push(norm);
    }
    if n_max >= 1 {
        betas.push(&xi[n_max] / &xi[n_max - 1]);
    }
    Ok(OrthoSystem { spec: spec.clone(), even_moments: even, polys, xi, betas })
}

impl OrthoSystem {
    /// The convention this system was built from.
    pub fn spec(&self) -> &SequenceSpec {
        &self.spec
    }

    /// Even moments `μ_{2k}` (odd moments of the symmetric measure vanish).
    pub fn even_moments(&self) -> &[BigRational] {
        &self.even_moments
    }

    /// Monic polynomials `P_0..P_{n_max}`.
    pub fn polys(&self) -> &[Poly<BigRational>] {
        &self.polys
    }

    /// Largest constructed degree.
    pub fn n_max(&self) -> usize {
        self.polys.len() - 1
    }

    /// Exact norm `ξ_n = ⟨P_n, P_n⟩`.
    pub fn norm_xi(&self, n: usize) -> Result<&BigRational, HankelError> {
        self.xi.get(n).ok_or(HankelError::OutOfRange { n, max: self.n_max() })
    }

    /// Exact recurrence coefficient `β_n = A_n² = ξ_n/ξ_{n−1}` (n ≥ 1)
    /// together with the float `A_n = √β_n`.
    pub fn recurrence_a(&self, n: usize) -> Result<(BigRational, f64), HankelError> {
        if n == 0 || n > self.n_max() {
            return Err(HankelError::OutOfRange { n, max: self.n_max() });
        }
        let beta = self.betas[n].clone();
        let a = fm::sqrt(beta.to_f64().unwrap_or(f64::NAN));
        Ok((beta, a))
    }

    /// Half-line image: the degree-`n` monic `v_n` with
    /// `P_{2n}(t) = v_n(t²)`, paired with its exact norm `ξ_{2n}`
    /// (the normalized polynomial is `v_n/√ξ_{2n}`).
    pub fn half_line_poly(&self, n: usize) -> Result<HalfLinePoly, HankelError> {
        if 2 * n > self.n_max() {
            return Err(HankelError::OutOfRange { n: 2 * n, max: self.n_max() });
        }
        let p = &self.polys[2 * n];
        let cs = p.coeffs();
        let mut half = Vec::with_capacity(n + 1);
        for (j, c) in cs.iter().enumerate() {
            if j % 2 == 1 {
                if !c.is_zero() {
                    return Err(HankelError::ParityViolation);
                }
            } else {
                half.push(c.clone());
            }
        }
        Ok(HalfLinePoly { monic: Poly::new(half), norm: self.xi[2 * n].clone() })
    }

    /// Evaluate `P_n` at a float point.
    pub fn eval_f64(&self, n: usize, x: f64) -> Result<f64, HankelError> {
        if n > self.n_max() {
            return Err(HankelError::OutOfRange { n, max: self.n_max() });
        }
        let mut acc = 0.0;
        for c in self.polys[n].coeffs().iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        Ok(acc)
    }
}

/// Half-line polynomial as a (monic, exact norm²) pair: the orthonormal
/// object is `monic/√norm`, kept factored so the arithmetic stays rational.
#[derive(Clone, Debug, PartialEq)]
pub struct HalfLinePoly {
    /// Monic polynomial in the half-line variable `x = t²`.
    pub monic: Poly<BigRational>,
    /// Exact squared norm (`= ξ_{2n}` of the line system).
    pub norm: BigRational,
}

/// Hankel determinants `Δ_0..Δ_k` with `Δ_0 = 1`,
/// `Δ_k = det[μ_{i+j}]_{0≤i,j<k}`, by fraction-exact Gaussian elimination.
pub fn hankel_determinants(even_moments: &[BigRational], k_max: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        out.push(det_rational(&build_hankel(even_moments, k)));
    }
    out
}

fn build_hankel(even: &[BigRational], k: usize) -> Vec<Vec<BigRational>> {
    (0..k).map(|i| (0..k).map(|j| mu(even, i + j)).collect()).collect()
}

/// Exact determinant by Gaussian elimination with column pivoting.
fn det_rational(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    if n == 0 {
        return BigRational::one();
    }
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut det = BigRational::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero());
        let Some(p) = pivot else {
            return BigRational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        det *= a[col][col].clone();
        let inv = BigRational::one() / a[col][col].clone();
        for r in (col + 1)..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] * &inv;
            for c in col..n {
                let sub = &factor * &a[col][c];
                a[r][c] -= sub;
            }
        }
    }
    det
}

/// The classical bordered-determinant construction of the monic `P_n`
/// (the degree-`j` coefficient is the signed minor of the moment matrix
/// bordered with the `1, x, …, xⁿ` row, divided by `Δ_n`).
///
/// Exponentially slower than the recurrence; used to certify the two
/// constructions agree (tests run it through n = 6).
pub fn determinant_poly(even_moments: &[BigRational], n: usize) -> Poly<BigRational> {
    if n == 0 {
        return Poly::constant(BigRational::one());
    }
    let delta_n = det_rational(&build_hankel(even_moments, n));
    assert!(!delta_n.is_zero(), "singular Hankel matrix");
    let mut coeffs = Vec::with_capacity(n + 1);
    for j in 0..=n {
        // minor: rows i = 0..n−1 with entries μ_{i+c} for c ≠ j, c = 0..n
        let minor: Vec<Vec<BigRational>> = (0..n)
            .map(|i| (0..=n).filter(|&c| c != j).map(|c| mu(even_moments, i + c)).collect())
            .collect();
        let sign = if (n + j) % 2 == 0 { BigRational::one() } else { -BigRational::one() };
        coeffs.push(sign * det_rational(&minor) / delta_n.clone());
    }
    Poly::new(coeffs)
}

/// Report row of [`kernel_identity_check`].
#[derive(Clone, Debug, PartialEq)]
pub struct KernelIdentityRow {
    /// Half-degree index: the row checks `x·Q_{2n} = P_{2n+1}`.
    pub n: usize,
    /// Exact equality verdict.
    pub equal: bool,
}

/// Exact check of `x·Q_{2n}(x) = P_{2n+1}(x)` for `n ≤ n_max`, where `P`
/// is the `(n!)²` system and `Q` the `((n+1)!)²` system.
pub fn kernel_identity_check(n_max: usize) -> Result<Vec<KernelIdentityRow>, HankelError> {
    let p_sys = monic_ops(&SequenceSpec::FactorialSquared, 2 * n_max + 1)?;
    let q_sys = monic_ops(&SequenceSpec::ShiftedFactorialSquared, 2 * n_max)?;
    let mut rows = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let lhs = q_sys.polys()[2 * n].mul_x();
        let rhs = &p_sys.polys()[2 * n + 1];
        rows.push(KernelIdentityRow { n, equal: lhs == *rhs });
    }
    Ok(rows)
}

/// Weight member of the ultra-exponential class:
/// `k = 1` → `e^{−x}`; `k = 2` → `2K₀(2√x)`. Other orders are out of scope.
pub fn dp_weight(x: f64, k: i64) -> Result<f64, HankelError> {
    if !(x > 0.0) {
        return Err(HankelError::WeightDomain);
    }
    match k {
        1 => Ok(fm::exp(-x)),
        2 => Ok(2.0 * crate::special::bessel_k0(2.0 * fm::sqrt(x))),
        other => Err(HankelError::UnsupportedWeightClass { k: other }),
    }
}

/// `A_n/n` for `n = 1..=n_max` on a built system (float view of the exact β).
pub fn a_over_n(sys: &OrthoSystem, n_max: usize) -> Result<Vec<f64>, HankelError> {
    let mut out = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let (_, a) = sys.recurrence_a(n)?;
        out.push(a / n as f64);
    }
    Ok(out)
}

/// Running mean of `|A_n/n − π/4|` accumulated from n = `start` up to each
/// checkpoint (inclusive). The sequence of running means is the object the
/// trend assertion brackets: it decreases across 8 → 16 → 32 → 48.
pub fn a_ratio_running_deviation(
    sys: &OrthoSystem,
    start: usize,
    checkpoints: &[usize],
) -> Result<Vec<f64>, HankelError> {
    let target = core::f64::consts::FRAC_PI_4;
    let mut out = Vec::with_capacity(checkpoints.len());
    for &cp in checkpoints {
        if cp < start {
            return Err(HankelError::OutOfRange { n: cp, max: sys.n_max() });
        }
        let mut acc = 0.0;
        let mut count = 0usize;
        for n in start..=cp {
            let (_, a) = sys.recurrence_a(n)?;
            acc += fm::abs(a / n as f64 - target);
            count += 1;
        }
        out.push(acc / count as f64);
    }
    Ok(out)
}

/// ξ-invariant: `ξ_n = β_1 β_2 ⋯ β_n · μ_0` (exact telescoping of
/// `β_n = ξ_n/ξ_{n−1}`). Returns true iff it holds for every computed n.
pub fn xi_product_invariant(sys: &OrthoSystem) -> bool {
    let mut prod = sys.even_moments()[0].clone();
    for n in 1..=sys.n_max() {
        prod *= sys.betas[n].clone();
        if prod != sys.xi[n] {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod unit {
    use super::*;
    use crate::rational::{q, q_int};

    fn gamma0() -> OrthoSystem {
        monic_ops(&SequenceSpec::FactorialSquared, 8).unwrap()
    }

    #[test]
    fn p_family_first_members() {
        let sys = gamma0();
        // P2 = x² − 1, P3 = x³ − 4x, P4 = x⁴ − (32/3)x² + 20/3
        assert_eq!(sys.polys()[2], Poly::new(alloc::vec![q(-1, 1), q_int(0), q_int(1)]));
        assert_eq!(
            sys.polys()[3],
            Poly::new(alloc::vec![q_int(0), q(-4, 1), q_int(0), q_int(1)])
        );
        assert_eq!(
            sys.polys()[4],
            Poly::new(alloc::vec![q(20, 3), q_int(0), q(-32, 3), q_int(0), q_int(1)])
        );
    }

    #[test]
    fn xi_values_and_product_invariant() {
        let sys = gamma0();
        assert_eq!(sys.norm_xi(2).unwrap(), &q_int(3));
        assert_eq!(sys.norm_xi(4).unwrap(), &q(656, 3));
        assert_eq!(sys.norm_xi(6).unwrap(), &q(3_681_936, 41));
        assert!(xi_product_invariant(&sys));
    }

    #[test]
    fn determinant_route_matches_recurrence() {
        for spec in [
            SequenceSpec::FactorialSquared,
            SequenceSpec::ShiftedFactorialSquared,
            SequenceSpec::GeneralGamma(q(5, 2)),
        ] {
            let sys = monic_ops(&spec, 6).unwrap();
            let even = sys.even_moments();
            let deltas = hankel_determinants(even, 7);
            for n in 0..=6usize {
                assert_eq!(determinant_poly(even, n), sys.polys()[n], "poly n = {n}");
                // ξ_n = Δ_{n+1}/Δ_n
                assert_eq!(
                    sys.norm_xi(n).unwrap(),
                    &(&deltas[n + 1] / &deltas[n]),
                    "xi n = {n}"
                );
            }
        }
    }

    #[test]
    fn orthogonality_by_moments() {
        let sys = monic_ops(&SequenceSpec::ShiftedFactorialSquared, 8).unwrap();
        for n in 0..=8usize {
            for m in 0..n {
                assert!(
                    pair_xm(sys.even_moments(), &sys.polys()[n], m).is_zero(),
                    "<P_{n}, x^{m}> != 0"
                );
            }
        }
    }

    #[test]
    fn non_positive_definite_detected() {
        // μ = (1, 0, 1, 0, 1): Δ_3 = 0 → ξ_2 = 0, reported at n = 2.
        // Craft via a tiny custom spec path: feed the Hankel layer directly.
        let even = alloc::vec![q_int(1), q_int(1), q_int(1)];
        let deltas = hankel_determinants(&even, 3);
        assert!(deltas[3].is_zero());
        // The public constructor sees it through a degenerate GeneralGamma
        // surrogate — no built-in spec is degenerate, so assert the
        // determinant signal directly and the OutOfRange plumbing instead.
        let sys = gamma0();
        assert!(matches!(
            sys.norm_xi(99),
            Err(HankelError::OutOfRange { n: 99, max: 8 })
        ));
    }

    #[test]
    fn half_line_images() {
        let sys = gamma0();
        let v1 = sys.half_line_poly(1).unwrap();
        assert_eq!(v1.monic, Poly::new(alloc::vec![q(-1, 1), q_int(1)]));
        assert_eq!(v1.norm, q_int(3));
        let v0 = sys.half_line_poly(0).unwrap();
        assert_eq!(v0.monic, Poly::constant(q_int(1)));
        let v3 = sys.half_line_poly(3).unwrap();
        assert_eq!(
            v3.monic,
            Poly::new(alloc::vec![q(-4716, 41), q(9612, 41), q(-1593, 41), q_int(1)])
        );
        assert_eq!(v3.norm, q(3_681_936, 41));
    }

    #[test]
    fn kernel_identity_through_n5() {
        let rows = kernel_identity_check(5).unwrap();
        assert!(rows.iter().all(|r| r.equal));
    }

    #[test]
    fn dp_weight_values_and_errors() {
        assert!((dp_weight(1.0, 1).unwrap() - (-1.0f64).exp()).abs() < 1e-16);
        // 2K₀(1) at x = 1/4
        assert!(
            (dp_weight(0.25, 2).unwrap() - 0.8420488764814166666712548).abs() < 1e-12
        );
        assert!(matches!(
            dp_weight(1.0, 3),
            Err(HankelError::UnsupportedWeightClass { k: 3 })
        ));
        assert!(matches!(dp_weight(-1.0, 1), Err(HankelError::WeightDomain)));
    }
}
