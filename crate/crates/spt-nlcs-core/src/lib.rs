// SPDX-License-Identifier: MIT OR Apache-2.0

//! Exact and floating-point kernels for nonlinear coherent states (NLCS) of
//! the symmetric Pöschl–Teller oscillator, together with the orthogonal
//! polynomial families attached to their moment problem.
//!
//! The library is organised around one hierarchy of objects:
//!
//! * **Moment sequences** ([`moments`]) — the positive-number sequence
//!   `x_n^γ = n(n+γ)(n+2γ−1)/(n+γ−1)` and three distinct factorial-type
//!   products built from it. All three appear in the underlying analysis
//!   under a single overloaded symbol; here each has a name, an exact
//!   (`BigRational`) evaluator and a float evaluator, and every downstream
//!   operation documents which one it uses.
//! * **Hankel / monic orthogonal polynomials** ([`hankel`]) — exact monic
//!   systems from a moment sequence via three-term recurrence, certified
//!   against Hankel-determinant ratios, plus the half/whole-line symmetry
//!   bookkeeping and Gauss-type quadrature cross-checks.
//! * **Shift-operator polynomial families** ([`shiftpoly`]) — the √2-lattice
//!   families generated by the oscillator's shift operators, exact in
//!   ℚ[√2], their Meixner–Pollaczek closed forms, generating functions and
//!   the explicit orthogonality weight on the real line.
//! * **Special functions** ([`special`]) — self-contained Bessel `J/I/K`,
//!   Gamma (double-double precision where cancellation demands it),
//!   hypergeometric ₁F₂/₂F₁ kernels, Gegenbauer and Chebyshev polynomials.
//!   No external special-function crate is used: every routine carries an
//!   explicit validated domain and an accuracy statement tested against a
//!   slow exact-series oracle ([`oracle`]).
//! * **Coherent states** ([`cstates`]) — NLCS coefficient vectors,
//!   normalization constants, θ-space wavefunctions in both series and
//!   closed (Bessel) form, Pöschl–Teller eigenfunctions, Barut–Girardello
//!   reference states and the resolution-of-identity moment checks.
//! * **Bargmann-type transform** ([`bargmann`]) — the integral transform to
//!   the Fock–Bargmann space of the moment problem, its reproducing kernel,
//!   growth condition and isometry inner product.
//! * **Quadrature** ([`quadrature`]) — Gauss–Legendre rules (Newton on the
//!   Legendre recurrence) and semi-infinite panels adapted to Macdonald-type
//!   integrands, with doubling-based convergence control.
//!
//! # Exact vs floating paths
//!
//! Everything that can be exact is exact: moment tables, Hankel
//! determinants, monic recurrences, ℚ[√2] polynomial coefficients, the
//! q-normalized integer-weight family. Floating-point enters only where the
//! mathematics is genuinely transcendental (Bessel values, quadratures,
//! wavefunctions). The [`oracle`] module provides an arbitrary-precision
//! fixed-point series engine (default 256 bits) used by the test-suite and
//! the CLI verification suite to pin the float paths independently.
//!
//! # `no_std`
//!
//! The crate is `no_std`-compatible: disable default features and enable
//! `libm` to route float intrinsics through the `libm` crate
//! (`default-features = false, features = ["libm"]`). `alloc` is required.

#![cfg_attr(not(any(feature = "std", test)), no_std)]
#![forbid(unsafe_code)]
#![deny(missing_docs)]

#[cfg(not(any(feature = "std", feature = "libm")))]
compile_error!("spt-nlcs-core requires either the `std` feature (default) or the `libm` feature");

extern crate alloc;

pub mod bargmann;
pub mod cstates;
pub(crate) mod fm;
pub mod hankel;
pub mod moments;
pub mod oracle;
pub mod poly;
pub mod qsqrt2;
pub mod quadrature;
pub mod rational;
pub mod report;
pub mod shiftpoly;
pub mod special;

pub use num_bigint::BigInt;
pub use num_complex::Complex64;
pub use num_rational::BigRational;
