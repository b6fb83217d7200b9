use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::integer::Integer;
use crate::error::{Error, Result};

/// Name of the indeterminate a [`UniPoly`] is written in.
///
/// The tag is metadata only, but mixing tags in arithmetic is a usage error.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Z,
    Q,
    S,
}

impl Var {
    pub fn symbol(self) -> char {
        match self {
            Var::X => 'x',
            Var::Z => 'z',
            Var::Q => 'q',
            Var::S => 's',
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Dense univariate polynomial with integer coefficients.
///
/// `coeffs[i]` is the coefficient of `var^i`. Trailing zeros are always
/// stripped, so the zero polynomial has no coefficients and equality is
/// structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    var: Var,
    coeffs: Vec<Integer>,
}

impl UniPoly {
    pub fn new(var: Var, coeffs: Vec<Integer>) -> Self {
        let mut p = Self { var, coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(var: Var, coeffs: &[i64]) -> Self {
        Self::new(var, coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn zero(var: Var) -> Self {
        Self { var, coeffs: Vec::new() }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, Integer::one())
    }

    pub fn constant(var: Var, c: Integer) -> Self {
        Self::new(var, vec![c])
    }

    /// `c * var^exp`.
    pub fn monomial(var: Var, c: Integer, exp: usize) -> Self {
        if c.is_zero() {
            return Self::zero(var);
        }
        let mut coeffs = vec![Integer::zero(); exp + 1];
        coeffs[exp] = c;
        Self { var, coeffs }
    }

    /// The polynomial `var` itself.
    pub fn var_poly(var: Var) -> Self {
        Self::monomial(var, Integer::one(), 1)
    }

    /// `(a + b var)`, a common building block.
    pub fn linear(var: Var, a: i64, b: i64) -> Self {
        Self::from_i64s(var, &[a, b])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Same coefficients written in another indeterminate.
    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    /// Coefficient of `var^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Integer {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check_var(&self, other: &Self) -> Result<()> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(Error::VarMismatch { left: self.var, right: other.var })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Ok(Self::new(self.var, coeffs))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Ok(Self::new(self.var, coeffs))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.var));
        }
        let mut coeffs = vec![Integer::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Ok(Self::new(self.var, coeffs))
    }

    pub fn pow(&self, mut m: u32) -> Self {
        let mut acc = Self::one(self.var);
        let mut base = self.clone();
        while m > 0 {
            if m & 1 == 1 {
                acc = &acc * &base;
            }
            m >>= 1;
            if m > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, c: &Integer) -> Self {
        Self::new(self.var, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Integer::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { var: self.var, coeffs }
    }

    /// Divides every coefficient by `d`, failing if any remainder is nonzero.
    pub fn div_exact(&self, d: &Integer) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            if !(a % d).is_zero() {
                return Err(Error::InexactDivision { divisor: d.to_string() });
            }
            coeffs.push(a / d);
        }
        Ok(Self::new(self.var, coeffs))
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, t: &Integer) -> Integer {
        self.coeffs
            .iter()
            .rev()
            .fold(Integer::zero(), |acc, c| acc * t + c)
    }

    /// Composition `self(inner)`; the result is written in `inner`'s variable.
    pub fn compose(&self, inner: &UniPoly) -> UniPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(UniPoly::zero(inner.var), |acc, c| {
                &(&acc * inner) + &UniPoly::constant(inner.var, c.clone())
            })
    }

    /// `var^n * self(1/var)`. Requires `deg self <= n`.
    pub fn reversed(&self, n: usize) -> Self {
        assert!(self.coeffs.len() <= n + 1, "degree exceeds reversal length {n}");
        let coeffs = (0..=n).map(|i| self.coeff(n - i)).collect();
        Self::new(self.var, coeffs)
    }

    /// Multiplies every coefficient of `var^i` by `(-1)^i`, i.e. `self(-var)`.
    pub fn negate_var(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        Self::new(self.var, coeffs)
    }

    /// Substitutes `var -> var^m`.
    pub fn inflate(&self, m: usize) -> Self {
        if self.is_zero() || m == 1 {
            return self.clone();
        }
        let mut coeffs = vec![Integer::zero(); (self.coeffs.len() - 1) * m + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * m] = c.clone();
        }
        Self::new(self.var, coeffs)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&UniPoly> for &UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: &UniPoly) -> UniPoly {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: UniPoly) -> UniPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.var, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

/// Writes `c0 + c1 v + c2 v^2 + ...` in ascending powers, e.g. `1-q-q^2+q^5`.
pub(crate) fn write_terms(f: &mut fmt::Formatter<'_>, sym: char, coeffs: &[Integer]) -> fmt::Result {
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if c.is_negative() {
            f.write_str("-")?;
        } else if !first {
            f.write_str("+")?;
        }
        first = false;
        match i {
            0 => write!(f, "{mag}")?,
            _ => {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                if i == 1 {
                    write!(f, "{sym}")?;
                } else {
                    write!(f, "{sym}^{i}")?;
                }
            }
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.var.symbol(), &self.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_i64s(Var::X, coeffs)
    }

    #[test]
    fn ring_arithmetic() {
        assert_eq!(&x(&[1, 1]) * &x(&[1, -1]), x(&[1, 0, -1]));
        assert_eq!(x(&[1, 1]).pow(2), x(&[1, 2, 1]));
        assert_eq!(x(&[3, 0, 7]).pow(0), x(&[1]));
        assert_eq!(&x(&[1, 2, 3]) - &x(&[1, 2, 3]), UniPoly::zero(Var::X));
        assert_eq!(x(&[0, 0, 0]).degree(), None);
        assert_eq!(x(&[1, 0, 2, 0]).degree(), Some(2));
    }

    #[test]
    fn tag_mismatch_is_an_error() {
        let q = UniPoly::one(Var::Q);
        assert_eq!(
            x(&[1]).checked_add(&q),
            Err(Error::VarMismatch { left: Var::X, right: Var::Q })
        );
    }

    #[test]
    #[should_panic(expected = "variable mismatch")]
    fn tag_mismatch_panics_in_operators() {
        let _ = &x(&[1]) * &UniPoly::one(Var::Z);
    }

    #[test]
    fn evaluation_and_substitution() {
        let p = x(&[1, 1, 2, 1, 1]);
        assert_eq!(p.eval(&Integer::from(1)), Integer::from(6));
        assert_eq!(p.eval(&Integer::from(-1)), Integer::from(2));
        assert_eq!(UniPoly::zero(Var::X).eval(&Integer::from(9)), Integer::zero());
        // (1+x) composed with s^2 is 1+s^2
        let s2 = UniPoly::monomial(Var::S, Integer::one(), 2);
        assert_eq!(x(&[1, 1]).compose(&s2), UniPoly::from_i64s(Var::S, &[1, 0, 1]));
        assert_eq!(x(&[1, 1]).inflate(2), x(&[1, 0, 1]));
        assert_eq!(x(&[1, 2]).negate_var(), x(&[1, -2]));
        assert_eq!(x(&[1, 2]).reversed(3), x(&[0, 0, 2, 1]));
    }

    #[test]
    fn display_ascending() {
        assert_eq!(x(&[1, 2, 2, 1]).to_string(), "1+2x+2x^2+x^3");
        assert_eq!(UniPoly::from_i64s(Var::Q, &[1, -1, -1]).to_string(), "1-q-q^2");
        assert_eq!(UniPoly::from_i64s(Var::Q, &[0, -1]).to_string(), "-q");
        assert_eq!(UniPoly::zero(Var::X).to_string(), "0");
    }

    #[test]
    fn div_exact() {
        assert_eq!(x(&[2, 4]).div_exact(&Integer::from(2)), Ok(x(&[1, 2])));
        assert!(x(&[2, 3]).div_exact(&Integer::from(2)).is_err());
    }
}
