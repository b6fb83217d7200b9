//! Rational generating functions in `z` with `x`-polynomial coefficients,
//! and the catalog of named generating functions.

use num_traits::One;

use super::families::{e_poly, l_poly, o_poly};
use super::general::b_polys;
use crate::algebra::{Integer, RingPoly, UniPoly, Var};
use crate::error::{Error, Result};

/// Polynomial in `z` whose coefficients are polynomials in `x`.
pub type ZPoly = RingPoly<UniPoly>;

/// `numerator / denominator` as a formal power series in `z`.
///
/// The denominator's constant term is the `x`-polynomial `1`, so the series
/// is computed by the linear recurrence the denominator defines.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalGF {
    numerator: ZPoly,
    denominator: ZPoly,
}

impl RationalGF {
    pub fn new(numerator: ZPoly, denominator: ZPoly) -> Result<Self> {
        match denominator.coeff(0) {
            Some(c) if *c == UniPoly::one(Var::X) => Ok(Self { numerator, denominator }),
            _ => Err(Error::IllFormedDenominator),
        }
    }

    pub fn numerator(&self) -> &ZPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &ZPoly {
        &self.denominator
    }

    /// Sum of two series, over the product of the denominators.
    pub fn add(&self, other: &Self) -> Self {
        Self {
            numerator: &(&self.numerator * &other.denominator) + &(&other.numerator * &self.denominator),
            denominator: &self.denominator * &other.denominator,
        }
    }

    pub fn neg(&self) -> Self {
        Self { numerator: -&self.numerator, denominator: self.denominator.clone() }
    }

    /// Multiplies the series by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        Self { numerator: self.numerator.shift(k), denominator: self.denominator.clone() }
    }

    /// Divides the numerator by an integer, which must divide every coefficient.
    pub fn div_exact(&self, d: i64) -> Result<Self> {
        let d = Integer::from(d);
        let coeffs = self
            .numerator
            .coeffs()
            .iter()
            .map(|c| c.div_exact(&d))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { numerator: RingPoly::new(coeffs), denominator: self.denominator.clone() })
    }
}

/// Coefficients `c_0, ..., c_terms` of the series expansion of `gf`.
pub fn series_expand(gf: &RationalGF, terms: usize) -> Vec<UniPoly> {
    let den = gf.denominator.coeffs();
    let mut out: Vec<UniPoly> = Vec::with_capacity(terms + 1);
    for n in 0..=terms {
        let mut c = gf.numerator.coeff(n).cloned().unwrap_or_else(|| UniPoly::zero(Var::X));
        for (i, d) in den.iter().enumerate().skip(1).take_while(|(i, _)| *i <= n) {
            c = &c - &(d * &out[n - i]);
        }
        out.push(c);
    }
    out
}

/// Builds a `z`-polynomial from `x`-polynomial coefficients given as
/// integer slices, e.g. `zx(&[&[1], &[-1, -1]])` is `1 - (1+x) z`.
pub fn zx(coeffs: &[&[i64]]) -> ZPoly {
    RingPoly::new(coeffs.iter().map(|c| UniPoly::from_i64s(Var::X, c)).collect())
}

/// A polynomial in `z` with integer coefficients, as a [`ZPoly`].
pub fn z_int(p: &UniPoly) -> ZPoly {
    p.lift_coeffs(|c| UniPoly::constant(Var::X, c.clone()))
}

fn one_minus_z(power: u32) -> ZPoly {
    z_int(&UniPoly::linear(Var::Z, 1, -1).pow(power))
}

fn z_power_poly(p: &UniPoly, power: u32) -> ZPoly {
    z_int(&p.clone().with_var(Var::Z).pow(power))
}

fn gf(num: ZPoly, den: ZPoly) -> RationalGF {
    RationalGF::new(num, den).expect("catalog denominators have constant term 1")
}

/// `sum_n e_n(x) z^n` as a single fraction.
pub fn gf_e() -> RationalGF {
    gf(zx(&[&[1], &[0, -1], &[-1, 0, 1]]), &zx(&[&[1], &[-1, -1]]) * &zx(&[&[1], &[], &[-1, 0, 1]]))
}

/// `sum_n e_n(x) z^n` as half the sum of two simple fractions.
pub fn gf_e_split() -> RationalGF {
    let a = gf(zx(&[&[1]]), zx(&[&[1], &[-1, -1]]));
    let b = gf(zx(&[&[1], &[1, -1]]), zx(&[&[1], &[], &[-1, 0, 1]]));
    a.add(&b).div_exact(2).expect("split form halves exactly")
}

/// `sum_n o_n(x) z^n`.
pub fn gf_o() -> RationalGF {
    gf(zx(&[&[], &[0, 1]]), &zx(&[&[1], &[-1, -1]]) * &zx(&[&[1], &[], &[-1, 0, 1]]))
}

pub fn gf_o_split() -> RationalGF {
    let a = gf(zx(&[&[1]]), zx(&[&[1], &[-1, -1]]));
    let b = gf(zx(&[&[1], &[1, -1]]), zx(&[&[1], &[], &[-1, 0, 1]]));
    a.add(&b.neg()).div_exact(2).expect("split form halves exactly")
}

/// `sum_n e*_n(x) z^n` with `e*_n(x) = x^n e_n(1/x)`.
pub fn gf_e_star() -> RationalGF {
    gf(zx(&[&[1], &[-1], &[1, 0, -1]]), &zx(&[&[1], &[-1, -1]]) * &zx(&[&[1], &[], &[1, 0, -1]]))
}

pub fn gf_e_star_split() -> RationalGF {
    let a = gf(zx(&[&[1]]), zx(&[&[1], &[-1, -1]]));
    let b = gf(zx(&[&[1], &[-1, 1]]), zx(&[&[1], &[], &[1, 0, -1]]));
    a.add(&b).div_exact(2).expect("split form halves exactly")
}

/// `sum_n L_n(x) z^n`.
pub fn gf_l() -> RationalGF {
    gf(zx(&[&[1], &[], &[-1, -1, -1]]), &zx(&[&[1], &[-1, -1]]) * &zx(&[&[1], &[], &[-1, 0, -1]]))
}

pub fn gf_l_split() -> RationalGF {
    let a = gf(zx(&[&[1]]), zx(&[&[1], &[-1, -1]]));
    let b = gf(zx(&[&[1], &[1, 1]]), zx(&[&[1], &[], &[-1, 0, -1]]));
    a.add(&b).div_exact(2).expect("split form halves exactly")
}

/// `sum_n e(n, 2k) z^n`.
pub fn gf_e_even_column(k: usize) -> RationalGF {
    let a = gf(zx(&[&[1]]), one_minus_z(2 * k as u32 + 1));
    let sign = if k % 2 == 0 { 1 } else { -1 };
    let b = gf(zx(&[&[sign], &[sign]]), z_power_poly(&UniPoly::from_i64s(Var::Z, &[1, 0, -1]), k as u32 + 1));
    a.add(&b).div_exact(2).expect("column form halves exactly").shift(2 * k)
}

/// `sum_n e(n, 2k+1) z^n`.
pub fn gf_e_odd_column(k: usize) -> RationalGF {
    let a = gf(zx(&[&[1]]), one_minus_z(2 * k as u32 + 2));
    let sign = if k % 2 == 0 { -1 } else { 1 };
    let b = gf(zx(&[&[sign]]), z_power_poly(&UniPoly::from_i64s(Var::Z, &[1, 0, -1]), k as u32 + 1));
    a.add(&b).div_exact(2).expect("column form halves exactly").shift(2 * k + 1)
}

/// `sum_n e(n, c) z^n = z^c a_c(z) / ((1+z)^c (1-z)^(c+1))`, where `a_c` is
/// `e_c` for `c = 0, 3 (mod 4)` and `o_c` otherwise.
pub fn gf_e_column_rewritten(c: usize) -> RationalGF {
    let a = if matches!(c % 4, 0 | 3) { e_poly(c) } else { o_poly(c) };
    let num = z_int(&a.with_var(Var::Z)).shift(c);
    let den = &z_power_poly(&UniPoly::linear(Var::Z, 1, 1), c as u32) * &one_minus_z(c as u32 + 1);
    gf(num, den)
}

/// `sum_n L(n, k) z^n = z^k e_k(z) / ((1-z)^(k+1) (1+z)^k)`.
pub fn gf_l_column(k: usize) -> RationalGF {
    let num = z_int(&e_poly(k).with_var(Var::Z)).shift(k);
    let den = &one_minus_z(k as u32 + 1) * &z_power_poly(&UniPoly::linear(Var::Z, 1, 1), k as u32);
    gf(num, den)
}

/// `sum_n e(n, n-k) z^n = z^k L_{k+2}(-z) / ((1-z)^a (1+z^2)^(floor(k/2)+1))`
/// with the `(1-z)` exponent `a` given explicitly.
fn gf_e_codiagonal_with(k: usize, one_minus_z_exp: u32) -> RationalGF {
    let num = z_int(&l_poly(k + 2).with_var(Var::Z).negate_var()).shift(k);
    let den = &one_minus_z(one_minus_z_exp)
        * &z_power_poly(&UniPoly::from_i64s(Var::Z, &[1, 0, 1]), (k / 2) as u32 + 1);
    gf(num, den)
}

/// Per-parity form: `(1-z)` exponent `2m+1` for `k = 2m` and `2m+3` for `k = 2m+1`.
pub fn gf_e_codiagonal(k: usize) -> RationalGF {
    let exp = if k % 2 == 0 { k + 1 } else { k + 2 };
    gf_e_codiagonal_with(k, exp as u32)
}

/// Compact form with `(1-z)` exponent `floor((k+1)/2) + 1`.
pub fn gf_e_codiagonal_compact(k: usize) -> RationalGF {
    gf_e_codiagonal_with(k, ((k + 1) / 2 + 1) as u32)
}

/// `sum_n e_n(x, p) z^n = (1/(1-(x+1)z) + sum_i b_i z^i / (1-(1+x^p)z^p)) / p`.
pub fn gf_general_e(p: usize) -> Result<RationalGF> {
    let b = b_polys(p)?;
    let a = gf(zx(&[&[1]]), zx(&[&[1], &[-1, -1]]));
    let mut den = vec![UniPoly::zero(Var::X); p + 1];
    den[0] = UniPoly::one(Var::X);
    den[p] = -(UniPoly::one(Var::X) + UniPoly::monomial(Var::X, Integer::one(), p));
    let rest = gf(RingPoly::new(b), RingPoly::new(den));
    a.add(&rest).div_exact(p as i64)
}

/// A generating function from the catalog, looked up by equation label.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GfEntry {
    pub name: &'static str,
    pub title: &'static str,
    /// Whether the entry takes a column/offset parameter `k`.
    pub uses_k: bool,
    /// Whether the entry takes an odd prime `p`.
    pub uses_p: bool,
}

pub const GF_CATALOG: &[GfEntry] = &[
    GfEntry { name: "2.5", title: "sum e_n(x) z^n", uses_k: false, uses_p: false },
    GfEntry { name: "2.6", title: "sum o_n(x) z^n", uses_k: false, uses_p: false },
    GfEntry { name: "2.7", title: "sum e*_n(x) z^n", uses_k: false, uses_p: false },
    GfEntry { name: "2.11", title: "sum_n e(n,2k) z^n", uses_k: true, uses_p: false },
    GfEntry { name: "2.12", title: "sum_n e(n,2k+1) z^n", uses_k: true, uses_p: false },
    GfEntry { name: "2.13", title: "sum_n e(n,k) z^n, rewritten form", uses_k: true, uses_p: false },
    GfEntry { name: "3.11", title: "sum L_n(x) z^n", uses_k: false, uses_p: false },
    GfEntry { name: "3.12", title: "sum_n L(n,k) z^n", uses_k: true, uses_p: false },
    GfEntry { name: "3.13", title: "sum_n e(n,n-k) z^n, per-parity form", uses_k: true, uses_p: false },
    GfEntry { name: "4.29", title: "sum e_n(x,p) z^n", uses_k: false, uses_p: true },
];

/// Builds the named generating function; `None` for an unknown name.
pub fn named_gf(name: &str, k: usize, p: usize) -> Option<Result<RationalGF>> {
    let gf = match name {
        "2.5" => gf_e(),
        "2.6" => gf_o(),
        "2.7" => gf_e_star(),
        "2.11" => gf_e_even_column(k),
        "2.12" => gf_e_odd_column(k),
        "2.13" => gf_e_column_rewritten(k),
        "3.11" => gf_l(),
        "3.12" => gf_l_column(k),
        "3.13" => gf_e_codiagonal(k),
        "4.29" => return Some(gf_general_e(p)),
        _ => return None,
    };
    Some(Ok(gf))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::families::e_star_poly;
    use crate::identities::general::general_e_polys;

    fn x(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(Var::X, c)
    }

    #[test]
    fn geometric_series() {
        let g = RationalGF::new(zx(&[&[1]]), zx(&[&[1], &[-1, -1]])).unwrap();
        let s = series_expand(&g, 6);
        for (n, c) in s.iter().enumerate() {
            assert_eq!(*c, x(&[1, 1]).pow(n as u32));
        }
    }

    #[test]
    fn rejects_bad_denominator() {
        assert_eq!(RationalGF::new(zx(&[&[1]]), zx(&[&[2]])), Err(Error::IllFormedDenominator));
        assert_eq!(RationalGF::new(zx(&[&[1]]), zx(&[&[1, 1]])), Err(Error::IllFormedDenominator));
        assert_eq!(RationalGF::new(zx(&[&[1]]), zx(&[])), Err(Error::IllFormedDenominator));
    }

    #[test]
    fn family_generating_functions() {
        let n = 30;
        for (gf, family) in [
            (gf_e(), e_poly as fn(usize) -> UniPoly),
            (gf_e_split(), e_poly),
            (gf_o(), o_poly),
            (gf_o_split(), o_poly),
            (gf_e_star(), e_star_poly),
            (gf_e_star_split(), e_star_poly),
            (gf_l(), l_poly),
            (gf_l_split(), l_poly),
        ] {
            let s = series_expand(&gf, n);
            for (m, c) in s.iter().enumerate() {
                assert_eq!(*c, family(m), "term {m}");
            }
        }
        assert_eq!(series_expand(&gf_e(), 2), vec![x(&[1]), x(&[1]), x(&[1, 1])]);
    }

    #[test]
    fn first_rows_of_losanitsch_series() {
        let s = series_expand(&gf_l(), 4);
        let shown: Vec<String> = s.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["1", "1+x", "1+x+x^2", "1+2x+2x^2+x^3", "1+2x+4x^2+2x^3+x^4"]);
    }

    #[test]
    fn general_series_for_three() {
        let s = series_expand(&gf_general_e(3).unwrap(), 12);
        let es = general_e_polys(12, 3).unwrap();
        assert_eq!(s, es);
    }

    #[test]
    fn catalog_lookup() {
        for entry in GF_CATALOG {
            assert!(named_gf(entry.name, 1, 3).unwrap().is_ok(), "{}", entry.name);
        }
        assert!(named_gf("9.99", 0, 3).is_none());
        assert!(named_gf("4.29", 0, 4).unwrap().is_err());
        let col0: Vec<UniPoly> = series_expand(&gf_e_even_column(0), 3);
        assert_eq!(col0, vec![x(&[1]); 4]);
    }
}
