//! Polynomials whose coefficients live in another ring.
//!
//! `RingPoly<ResiduePoly>` holds `epsilon_n(x)` and `lambda_n(x)`,
//! `RingPoly<UniPoly>` with `q`-polynomial coefficients holds the
//! Rogers-Szegö and q-Newton polynomials, and with `x`-polynomial
//! coefficients it is the `z`-polynomial side of a generating function.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::integer::Integer;
use super::poly::UniPoly;
use super::residue::ResiduePoly;

/// Minimal commutative-ring interface for polynomial coefficients.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn is_zero_coeff(&self) -> bool;
    /// Zero element of the same shape (same variable tag or modulus).
    fn zero_like(&self) -> Self;
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_sub(&self, other: &Self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
    fn ring_neg(&self) -> Self;
}

impl Coeff for Integer {
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
    fn zero_like(&self) -> Self {
        Integer::zero()
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_neg(&self) -> Self {
        -self
    }
}

impl Coeff for UniPoly {
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
    fn zero_like(&self) -> Self {
        UniPoly::zero(self.var())
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_neg(&self) -> Self {
        -self
    }
}

impl Coeff for ResiduePoly {
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
    fn zero_like(&self) -> Self {
        ResiduePoly::zero(self.modulus())
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_neg(&self) -> Self {
        -self
    }
}

/// Dense polynomial `sum_i coeffs[i] * t^i` over a coefficient ring.
///
/// Trailing zero coefficients are stripped.
#[derive(Clone, Debug, PartialEq)]
pub struct RingPoly<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> RingPoly<C> {
    pub fn new(coeffs: Vec<C>) -> Self {
        let mut p = Self { coeffs };
        while p.coeffs.last().is_some_and(Coeff::is_zero_coeff) {
            p.coeffs.pop();
        }
        p
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&C> {
        self.coeffs.get(i)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.ring_add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(Coeff::ring_neg).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut acc: Vec<Option<C>> = vec![None; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                let term = a.ring_mul(b);
                let slot = &mut acc[i + j];
                *slot = Some(match slot.take() {
                    Some(prev) => prev.ring_add(&term),
                    None => term,
                });
            }
        }
        Self::new(acc.into_iter().map(|c| c.expect("every slot is written")).collect())
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.ring_mul(c)).collect())
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        let Some(first) = self.coeffs.first() else {
            return Self::zero();
        };
        let zero = first.zero_like();
        let mut coeffs = vec![zero; k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, m: u32, one: &C) -> Self {
        (0..m).fold(Self::constant(one.clone()), |acc, _| acc.mul(self))
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> RingPoly<D> {
        RingPoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<C: Coeff> Add for &RingPoly<C> {
    type Output = RingPoly<C>;
    fn add(self, rhs: Self) -> RingPoly<C> {
        RingPoly::add(self, rhs)
    }
}

impl<C: Coeff> Sub for &RingPoly<C> {
    type Output = RingPoly<C>;
    fn sub(self, rhs: Self) -> RingPoly<C> {
        RingPoly::sub(self, rhs)
    }
}

impl<C: Coeff> Mul for &RingPoly<C> {
    type Output = RingPoly<C>;
    fn mul(self, rhs: Self) -> RingPoly<C> {
        RingPoly::mul(self, rhs)
    }
}

impl<C: Coeff> Neg for &RingPoly<C> {
    type Output = RingPoly<C>;
    fn neg(self) -> RingPoly<C> {
        RingPoly::neg(self)
    }
}

impl UniPoly {
    /// Lifts an integer polynomial into a polynomial over another ring.
    pub fn lift_coeffs<C: Coeff>(&self, f: impl Fn(&Integer) -> C) -> RingPoly<C> {
        RingPoly::new(self.coeffs().iter().map(f).collect())
    }
}

impl RingPoly<ResiduePoly> {
    /// Coefficient of `q^j` in every entry, as a polynomial in `var`.
    pub fn component(&self, j: usize, var: super::Var) -> UniPoly {
        UniPoly::new(var, self.coeffs.iter().map(|c| c.coeff(j).clone()).collect())
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for RingPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero_coeff() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Var;

    #[test]
    fn residue_coefficient_polys() {
        // (1 + q x)(1 + q^2 x) mod q^2 - 1 = 1 + (1+q) x + q x^2
        let one = ResiduePoly::one(2);
        let f1 = RingPoly::new(vec![one.clone(), ResiduePoly::q_pow(2, 1)]);
        let f2 = RingPoly::new(vec![one.clone(), ResiduePoly::q_pow(2, 2)]);
        let prod = &f1 * &f2;
        assert_eq!(prod.component(0, Var::X), UniPoly::from_i64s(Var::X, &[1, 1, 0]));
        assert_eq!(prod.component(1, Var::X), UniPoly::from_i64s(Var::X, &[0, 1, 1]));
        assert_eq!((&prod - &prod).degree(), None);
        assert_eq!(prod.shift(2).degree(), Some(4));
        assert_eq!(f1.pow(0, &one), RingPoly::constant(one));
    }
}
