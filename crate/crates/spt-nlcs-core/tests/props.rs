// SPDX-License-Identifier: MIT OR Apache-2.0

//! Property suites over the exact kernels.
//!
//! Each block states an algebraic law that must hold for *every* admissible
//! input, then lets the shrinker hunt for counterexamples: positivity and
//! telescoping of the moment tables, determinant/recurrence consistency of
//! the Hankel systems, ring laws in ℚ[√2], polynomial evaluation
//! homomorphisms, Gauss–Legendre polynomial exactness, and the
//! parse/render bijection. Case counts are kept modest — every single case
//! runs exact big-rational arithmetic.

use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use spt_nlcs_core::cstates::nlcs_coefficients;
use spt_nlcs_core::hankel::{hankel_determinants, monic_ops, xi_product_invariant};
use spt_nlcs_core::moments::{
    gen_factorial, moments_for, seq_factorial, x_seq, x_seq_f64, MomentError, SequenceSpec,
};
use spt_nlcs_core::poly::Poly;
use spt_nlcs_core::quadrature::gauss_legendre;
use spt_nlcs_core::qsqrt2::Qs2;
use spt_nlcs_core::rational::{parse_rational, q, q_int, render_rational, to_f64};
use spt_nlcs_core::report::{CheckRecord, CheckStatus};
use spt_nlcs_core::shiftpoly::{mp_eval, mp_eval_2f1};
use spt_nlcs_core::special::hyp1f2;
use spt_nlcs_core::{BigRational, Complex64};

// ---------------------------------------------------------------------------
// Moment tables
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// x_n > 0 for n ≥ 1, the float twin tracks the exact value, and the
    /// sequence factorial telescopes through x_n.
    #[test]
    fn moment_sequence_laws(n in 1u32..40, gn in 0i64..12, gd in 1i64..7) {
        let g = q(gn, gd);
        let gf64 = gn as f64 / gd as f64;

        if n >= 2 {
            let x = x_seq(n, &g).unwrap();
            prop_assert!(x.is_positive());
            let twin = x_seq_f64(n, gf64);
            let exact = to_f64(&x);
            prop_assert!((twin - exact).abs() <= 1e-12 * exact.abs());
            let ratio = seq_factorial(n, &g).unwrap() / seq_factorial(n - 1, &g).unwrap();
            prop_assert_eq!(ratio, x);
        } else {
            // n = 1: the exact value Γ(2γ+1) exists iff 2γ ∈ ℤ≥0, and the
            // telescoping step is 2·gf(1, γ) = 2(1+γ), not x_1.
            match x_seq(1, &g) {
                Ok(x) => {
                    prop_assert!(x.is_positive());
                    let exact = to_f64(&x);
                    prop_assert!((x_seq_f64(1, gf64) - exact).abs() <= 1e-12 * exact);
                }
                Err(e) => {
                    prop_assert_eq!(e, MomentError::ExactnessUnavailable);
                    prop_assert!((2 * gn) % gd != 0, "gate fired although 2γ ∈ ℤ");
                }
            }
            let first = seq_factorial(1, &g).unwrap() / seq_factorial(0, &g).unwrap();
            prop_assert_eq!(first, q_int(2) * (BigRational::one() + &g));
        }
        let sf = seq_factorial(n, &g).unwrap();
        let gf = gen_factorial(n, &g).unwrap();
        prop_assert_eq!(sf, q_int(2) * gf);
    }

    /// Moment growth: μ_{n−1}·μ_{n+1} ≥ μ_n² (log-convexity of the general
    /// tables — a necessary condition for Stieltjes moment sequences).
    #[test]
    fn moments_are_log_convex(gn in 0i64..10, gd in 1i64..5, count in 3usize..10) {
        let spec = SequenceSpec::GeneralGamma(q(gn, gd));
        let m = moments_for(&spec, count).unwrap();
        for k in 1..count - 1 {
            prop_assert!(&m[k - 1] * &m[k + 1] >= &m[k] * &m[k], "log-convexity broke at {}", k);
        }
    }
}

// ---------------------------------------------------------------------------
// Hankel systems
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// For every admissible γ the system builds (positive-definite), its
    /// norms telescope both as β-products and as determinant ratios, and
    /// each polynomial is monic with parity (−1)ⁿ.
    #[test]
    fn monic_systems_certify_themselves(gn in 0i64..8, gd in 1i64..4, n_max in 2usize..6) {
        let spec = SequenceSpec::GeneralGamma(q(gn, gd));
        let sys = monic_ops(&spec, n_max).unwrap();
        prop_assert!(xi_product_invariant(&sys));

        let dets = hankel_determinants(sys.even_moments(), n_max + 1);
        for k in 0..=n_max {
            prop_assert!(dets[k + 1].is_positive());
            let ratio = &dets[k + 1] / &dets[k];
            prop_assert_eq!(&ratio, sys.norm_xi(k).unwrap());
        }

        for (n, p) in sys.polys().iter().enumerate() {
            prop_assert_eq!(p.degree(), Some(n));
            prop_assert!(p.coeff(n).is_one(), "P_{} is not monic", n);
            // Parity: alternating zero pattern.
            for (j, c) in p.coeffs().iter().enumerate() {
                if (n + j) % 2 == 1 {
                    prop_assert!(c.is_zero(), "parity violated at degree {} coeff {}", n, j);
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Exact algebra: ℚ[√2] and polynomials
// ---------------------------------------------------------------------------

fn qs2_strategy() -> impl Strategy<Value = Qs2> {
    (-20i64..=20, 1i64..=6, -20i64..=20, 1i64..=6)
        .prop_map(|(an, ad, bn, bd)| Qs2::new(q(an, ad), q(bn, bd)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Field laws in ℚ[√2]: commutativity, distributivity, inverses.
    #[test]
    fn qs2_field_laws(a in qs2_strategy(), b in qs2_strategy(), c in qs2_strategy()) {
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!(
            a.clone() * (b.clone() + c.clone()),
            a.clone() * b.clone() + a.clone() * c.clone()
        );
        if !a.is_zero() {
            let inv = a.clone().inv().unwrap();
            prop_assert_eq!(a.clone() * inv, Qs2::one());
        }
        // √2·√2 = 2 — the defining relation, mixed into a random product.
        let root_sq = Qs2::sqrt2() * Qs2::sqrt2();
        prop_assert_eq!(root_sq * a.clone(), Qs2::int(2) * a);
    }

    /// Polynomial evaluation is a ring homomorphism: (p+q)(x) = p(x)+q(x)
    /// and (p·q)(x) = p(x)·q(x), exactly over ℚ.
    #[test]
    fn poly_eval_is_a_homomorphism(
        pc in prop::collection::vec(-9i64..=9, 1..6),
        qc in prop::collection::vec(-9i64..=9, 1..6),
        xn in -6i64..=6,
        xd in 1i64..=4,
    ) {
        let p = Poly::new(pc.iter().map(|&v| q_int(v)).collect());
        let r = Poly::new(qc.iter().map(|&v| q_int(v)).collect());
        let x = q(xn, xd);
        prop_assert_eq!(p.add(&r).eval(&x), p.eval(&x) + r.eval(&x));
        prop_assert_eq!(p.mul(&r).eval(&x), p.eval(&x) * r.eval(&x));
        prop_assert_eq!(p.sub(&r).add(&r), p);
    }

    /// parse ∘ render is the identity on ℚ.
    #[test]
    fn rational_render_roundtrip(n in -99999i64..=99999, d in 1i64..=9999) {
        let v = q(n, d);
        let back = parse_rational(&render_rational(&v)).unwrap();
        prop_assert_eq!(back, v);
    }
}

// ---------------------------------------------------------------------------
// Quadrature and float kernels
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// An n-point Gauss–Legendre rule integrates every monomial of degree
    /// ≤ 2n−1 exactly: 0 for odd k, 2/(k+1) for even k.
    #[test]
    fn gauss_legendre_is_polynomially_exact(n in 2usize..12, seed in 0u32..1000) {
        let k = (seed as usize) % (2 * n); // degree in 0..=2n−1
        let (xs, ws) = gauss_legendre(n);
        let val: f64 = xs.iter().zip(&ws).map(|(x, w)| w * x.powi(k as i32)).sum();
        let want = if k % 2 == 1 { 0.0 } else { 2.0 / (k as f64 + 1.0) };
        prop_assert!((val - want).abs() < 1e-13, "degree {} under {}-point rule: {}", k, n, val);
    }

    /// Partial coefficient mass never exceeds its ₁F₂ limit, and is
    /// monotone in the truncation order.
    #[test]
    fn coefficient_mass_is_monotone_bounded(
        re in -1.5f64..1.5,
        im in -1.5f64..1.5,
        gamma in 0.0f64..4.0,
        n_max in 4usize..40,
    ) {
        let z = Complex64::new(re, im);
        let r = re * re + im * im;
        let limit = if gamma > 0.0 {
            hyp1f2(gamma, gamma + 1.0, 2.0 * gamma, r)
        } else {
            // γ = 0: Σ r^n/(n!)² = entire I₀-type series.
            hyp1f2(1.0, 1.0, 1.0, r)
        };
        let cs = nlcs_coefficients(z, gamma, n_max);
        let mut acc = 0.0f64;
        for c in &cs.coeffs {
            acc += c.re * c.re + c.im * c.im;
        }
        prop_assert!(acc <= limit * (1.0 + 1e-12));
        prop_assert!(acc >= 1.0); // the n = 0 term alone contributes 1
    }

    /// The Meixner–Pollaczek recurrence and its terminating-₂F₁ closed form
    /// agree on random interior parameters.
    #[test]
    fn mp_closed_form_matches_recurrence(
        lambda in 0.3f64..3.0,
        u in -2.0f64..2.0,
        phi in 0.3f64..2.8,
        n in 0u32..9,
    ) {
        let rec = mp_eval(lambda, u, phi, n as usize);
        let closed = mp_eval_2f1(lambda, u, phi, n);
        let denom = rec[n as usize].abs().max(1.0);
        prop_assert!(
            (closed.re - rec[n as usize]).abs() / denom < 1e-9,
            "lambda={}, u={}, phi={}, n={}: {} vs {}",
            lambda, u, phi, n, closed.re, rec[n as usize]
        );
        prop_assert!(closed.im.abs() / denom < 1e-9);
    }

    /// Grading is a threshold function of the relative error.
    #[test]
    fn grade_is_a_threshold(rel in 0.0f64..2.0, tol in 1e-12f64..1.0) {
        let status = CheckRecord::grade(rel, tol);
        if rel <= tol {
            prop_assert_eq!(status, CheckStatus::Pass);
        } else {
            prop_assert_eq!(status, CheckStatus::Fail);
        }
        prop_assert_eq!(CheckRecord::grade(f64::NAN, tol), CheckStatus::Fail);
        prop_assert_eq!(CheckRecord::grade(f64::INFINITY, tol), CheckStatus::Fail);
    }
}
