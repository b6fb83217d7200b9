use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::integer::{is_prime, Integer};
use super::poly::{write_terms, UniPoly, Var};
use crate::error::{Error, Result};

/// Element of `Z[q]/(q^p - 1)`, stored as exactly `p` coefficients.
///
/// Coefficient `j` multiplies `q^j`; the representative of `q^m` is
/// `q^(m mod p)`. The full length-`p` vector is kept even when trailing
/// coefficients vanish, so equality is componentwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResiduePoly {
    coeffs: Vec<Integer>,
}

impl ResiduePoly {
    pub fn from_coeffs(coeffs: Vec<Integer>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::ModulusTooSmall(coeffs.len()));
        }
        Ok(Self { coeffs })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn zero(p: usize) -> Self {
        assert!(p >= 2, "modulus degree must be at least 2, got {p}");
        Self { coeffs: vec![Integer::zero(); p] }
    }

    pub fn one(p: usize) -> Self {
        Self::monomial(p, Integer::one(), 0)
    }

    /// `c * q^exp`, folded mod `p`.
    pub fn monomial(p: usize, c: Integer, exp: u64) -> Self {
        let mut r = Self::zero(p);
        r.coeffs[(exp % p as u64) as usize] = c;
        r
    }

    pub fn q_pow(p: usize, exp: u64) -> Self {
        Self::monomial(p, Integer::one(), exp)
    }

    /// `1 + q + ... + q^(p-1)`.
    pub fn all_ones(p: usize) -> Self {
        assert!(p >= 2, "modulus degree must be at least 2, got {p}");
        Self { coeffs: vec![Integer::one(); p] }
    }

    /// Folds the exponents of a `q`-polynomial modulo `p`.
    pub fn reduce(a: &UniPoly, p: usize) -> Result<Self> {
        if p < 2 {
            return Err(Error::ModulusTooSmall(p));
        }
        let mut r = Self::zero(p);
        for (m, c) in a.coeffs().iter().enumerate() {
            r.coeffs[m % p] += c;
        }
        Ok(r)
    }

    pub fn modulus(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    /// Coefficient of `q^j`, `0 <= j < p`.
    pub fn coeff(&self, j: usize) -> &Integer {
        &self.coeffs[j]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Sum of the coefficients, i.e. the value at `q = 1`.
    pub fn coeff_sum(&self) -> Integer {
        self.coeffs.iter().sum()
    }

    fn check_modulus(&self, other: &Self) -> Result<()> {
        if self.modulus() == other.modulus() {
            Ok(())
        } else {
            Err(Error::ModulusMismatch { left: self.modulus(), right: other.modulus() })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_modulus(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { coeffs })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_modulus(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self { coeffs })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_modulus(other)?;
        let p = self.modulus();
        let mut out = Self::zero(p);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out.coeffs[(i + j) % p] += a * b;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Integer) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplication by `q^e`, a cyclic rotation of the coefficients.
    pub fn mul_q_pow(&self, e: u64) -> Self {
        let p = self.modulus();
        let mut coeffs = self.coeffs.clone();
        coeffs.rotate_right((e % p as u64) as usize);
        Self { coeffs }
    }

    /// The representative `c_0 + ... + c_{p-1} q^{p-1}` as an exact
    /// polynomial in `q`.
    pub fn lift(&self) -> UniPoly {
        UniPoly::new(Var::Q, self.coeffs.clone())
    }

    /// Reduction modulo `1 + q + ... + q^(p-1)` for prime `p`.
    ///
    /// Substitutes `q^(p-1) = -(1 + q + ... + q^(p-2))`, leaving a
    /// polynomial of degree `< p - 1`. Two residues agree at every
    /// primitive `p`-th root of unity iff their reductions are equal.
    pub fn cyclotomic_reduce(&self) -> Result<UniPoly> {
        let p = self.modulus();
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let top = &self.coeffs[p - 1];
        let coeffs = self.coeffs[..p - 1].iter().map(|c| c - top).collect();
        Ok(UniPoly::new(Var::Q, coeffs))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&ResiduePoly> for &ResiduePoly {
            type Output = ResiduePoly;
            fn $method(self, rhs: &ResiduePoly) -> ResiduePoly {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<ResiduePoly> for ResiduePoly {
            type Output = ResiduePoly;
            fn $method(self, rhs: ResiduePoly) -> ResiduePoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &ResiduePoly {
    type Output = ResiduePoly;
    fn neg(self) -> ResiduePoly {
        ResiduePoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for ResiduePoly {
    type Output = ResiduePoly;
    fn neg(self) -> ResiduePoly {
        -&self
    }
}

impl fmt::Display for ResiduePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, 'q', &self.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(c: &[i64]) -> ResiduePoly {
        ResiduePoly::from_i64s(c).unwrap()
    }

    fn q(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(Var::Q, c)
    }

    #[test]
    fn reduce_folds_exponents() {
        assert_eq!(ResiduePoly::reduce(&q(&[0, 0, 0, 1]), 2).unwrap(), r(&[0, 1]));
        assert_eq!(ResiduePoly::reduce(&q(&[1, 1, 2, 1, 1]), 2).unwrap(), r(&[4, 2]));
        let a = q(&[3, -1, 4, 1, -5, 9, 2, 6, 5]);
        let folded = ResiduePoly::reduce(&a, 10).unwrap();
        assert_eq!(folded.lift(), a);
        assert_eq!(folded.modulus(), 10);
        assert_eq!(ResiduePoly::reduce(&a, 1), Err(Error::ModulusTooSmall(1)));
    }

    #[test]
    fn ring_ops() {
        let qq = ResiduePoly::q_pow(2, 1);
        assert_eq!(&qq * &qq, ResiduePoly::one(2));
        assert!((&r(&[1, 1]) * &r(&[1, -1])).is_zero());
        assert_eq!(&ResiduePoly::q_pow(3, 1) * &r(&[1, 1, 1]), r(&[1, 1, 1]));
        assert_eq!(r(&[1, 2, 3]).mul_q_pow(4), r(&[3, 1, 2]));
        assert_eq!(
            r(&[1, 2]).checked_mul(&r(&[1, 2, 3])),
            Err(Error::ModulusMismatch { left: 2, right: 3 })
        );
        assert_eq!(ResiduePoly::from_i64s(&[1]), Err(Error::ModulusTooSmall(1)));
    }

    #[test]
    fn cyclotomic() {
        assert!(r(&[1, 1, 1]).cyclotomic_reduce().unwrap().is_zero());
        for p in [2usize, 3, 5, 7, 11] {
            let c = ResiduePoly::all_ones(p).scale(&Integer::from(7));
            assert!(c.cyclotomic_reduce().unwrap().is_zero());
        }
        assert_eq!(
            r(&[2, 2, 2]).cyclotomic_reduce(),
            ResiduePoly::all_ones(3).scale(&Integer::from(2)).cyclotomic_reduce()
        );
        assert_eq!(r(&[5, 1, 0]).cyclotomic_reduce().unwrap(), q(&[5, 1]));
        assert_eq!(r(&[1, 0, 0, 0]).cyclotomic_reduce(), Err(Error::NotPrime(4)));
    }

    #[test]
    fn display() {
        assert_eq!(r(&[2, 2, 2]).to_string(), "2+2q+2q^2");
        assert_eq!(r(&[0, 1, 0]).to_string(), "q");
        assert_eq!(r(&[0, 0]).to_string(), "0");
        assert_eq!(r(&[-1, 1]).to_string(), "-1+q");
    }
}
