// SPDX-License-Identifier: MIT OR Apache-2.0

//! Dense univariate polynomials over an exact coefficient ring.
//!
//! Coefficients are stored in ascending degree order with no trailing
//! zeros. The type is deliberately small: the orthogonal-polynomial code
//! needs ring operations, `x·p` shifts and Horner evaluation — nothing else.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// Dense polynomial, ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

impl<C> Poly<C>
where
    C: Clone + Zero + PartialEq,
{
    /// Build from ascending coefficients (trailing zeros trimmed).
    pub fn new(coeffs: Vec<C>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    /// The constant polynomial `c`.
    pub fn constant(c: C) -> Self {
        Poly::new(vec![c])
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Ascending coefficient slice (empty for zero).
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    /// Multiply by `x` (degree shift).
    pub fn mul_x(&self) -> Self {
        if self.coeffs.is_empty() {
            return Poly::zero();
        }
        let mut v = Vec::with_capacity(self.coeffs.len() + 1);
        v.push(C::zero());
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    fn trim(&mut self) {
        while let Some(last) = self.coeffs.last() {
            if last.is_zero() {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }
}

impl<C> Poly<C>
where
    C: Clone + Zero + PartialEq + Add<Output = C> + Mul<Output = C>,
{
    /// Horner evaluation at `x`.
    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Scale every coefficient by `s`.
    pub fn scale(&self, s: &C) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    /// Polynomial sum.
    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(self.coeff(k) + rhs.coeff(k));
        }
        Poly::new(v)
    }

    /// Polynomial product.
    pub fn mul(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Poly::zero();
        }
        let mut v = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = a.clone() * b.clone();
                v[i + j] = v[i + j].clone() + t;
            }
        }
        Poly::new(v)
    }
}

impl<C> Poly<C>
where
    C: Clone + Zero + PartialEq + Add<Output = C> + Mul<Output = C> + Neg<Output = C> + Sub<Output = C>,
{
    /// Polynomial difference.
    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(self.coeff(k) - rhs.coeff(k));
        }
        Poly::new(v)
    }
}

impl<C> Poly<C>
where
    C: Clone + Zero + One + PartialEq,
{
    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::new(vec![C::zero(), C::one()])
    }
}
