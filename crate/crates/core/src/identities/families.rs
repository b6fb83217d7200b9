//! Closed-form polynomial families in `x`.

use crate::algebra::{Integer, ResiduePoly, RingPoly, UniPoly, Var};
use crate::triangles::{IntTriangle, ResidueTriangle};

fn one_plus_x() -> UniPoly {
    UniPoly::linear(Var::X, 1, 1)
}

fn halve(p: UniPoly) -> UniPoly {
    p.div_exact(&Integer::from(2))
        .unwrap_or_else(|e| panic!("closed form must halve exactly: {e}"))
}

/// `e_n(x)`: `((1+x)^2m + (1-x^2)^m)/2` for `n = 2m` and
/// `((1+x)^(2m+1) + (1-x)(1-x^2)^m)/2` for `n = 2m+1`.
pub fn e_poly(n: usize) -> UniPoly {
    let m = (n / 2) as u32;
    let tail = UniPoly::from_i64s(Var::X, &[1, 0, -1]).pow(m);
    let tail = if n % 2 == 0 { tail } else { &UniPoly::linear(Var::X, 1, -1) * &tail };
    halve(&one_plus_x().pow(n as u32) + &tail)
}

/// `o_n(x) = (1+x)^n - e_n(x)`.
pub fn o_poly(n: usize) -> UniPoly {
    &one_plus_x().pow(n as u32) - &e_poly(n)
}

/// `e*_n(x) = x^n e_n(1/x)`.
pub fn e_star_poly(n: usize) -> UniPoly {
    e_poly(n).reversed(n)
}

/// `L_n(x)`: `((1+x)^2m + (1+x^2)^m)/2` for `n = 2m` and
/// `((1+x)^(2m+1) + (1+x)(1+x^2)^m)/2` for `n = 2m+1`.
pub fn l_poly(n: usize) -> UniPoly {
    let m = (n / 2) as u32;
    let tail = UniPoly::from_i64s(Var::X, &[1, 0, 1]).pow(m);
    let tail = if n % 2 == 0 { tail } else { &one_plus_x() * &tail };
    halve(&one_plus_x().pow(n as u32) + &tail)
}

/// `Lbar_n(x) = (1+x)^n - L_n(x)`.
pub fn lbar_poly(n: usize) -> UniPoly {
    &one_plus_x().pow(n as u32) - &l_poly(n)
}

/// Row `n` of an integer triangle as a polynomial in `x`.
pub fn row_poly(t: &IntTriangle, n: usize) -> UniPoly {
    UniPoly::new(Var::X, t.row(n).to_vec())
}

/// Row `n` of a residue triangle as a polynomial in `x` over `Z[q]/(q^p-1)`,
/// e.g. `epsilon_n(x)` or `lambda_n(x)`.
pub fn residue_row_poly(t: &ResidueTriangle, n: usize) -> RingPoly<ResiduePoly> {
    RingPoly::new(t.row(n).to_vec())
}

/// `a(x) + q b(x)` as a polynomial in `x` over `Z[q]/(q^p-1)`.
pub fn residue_pair(a: &UniPoly, b: &UniPoly, p: usize) -> RingPoly<ResiduePoly> {
    let len = a.coeffs().len().max(b.coeffs().len());
    RingPoly::new(
        (0..len)
            .map(|i| {
                let mut c = vec![Integer::default(); p];
                c[0] = a.coeff(i);
                c[1] = b.coeff(i);
                ResiduePoly::from_coeffs(c).expect("p >= 2")
            })
            .collect(),
    )
}

/// An integer polynomial in `x` viewed over `Z[q]/(q^p-1)`.
pub fn lift_to_residues(a: &UniPoly, p: usize) -> RingPoly<ResiduePoly> {
    a.lift_coeffs(|c| ResiduePoly::monomial(p, c.clone(), 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangles::{e_o_tables, losanitsch_tables};

    fn x(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(Var::X, c)
    }

    #[test]
    fn closed_forms_small_rows() {
        assert_eq!(e_poly(4), x(&[1, 2, 2, 2, 1]));
        assert_eq!(l_poly(4), x(&[1, 2, 4, 2, 1]));
        assert_eq!(e_poly(0), x(&[1]));
        assert_eq!(o_poly(0), x(&[]));
        assert_eq!(o_poly(1), x(&[0, 1]));
        for n in 0..10 {
            assert_eq!(l_poly(2 * n + 1), &x(&[1, 1]) * &l_poly(2 * n));
        }
    }

    #[test]
    fn closed_forms_match_tables() {
        let (e, o) = e_o_tables(30);
        let (l, lbar) = losanitsch_tables(30);
        for n in 0..=30 {
            assert_eq!(e_poly(n), row_poly(&e, n));
            assert_eq!(o_poly(n), row_poly(&o, n));
            assert_eq!(l_poly(n), row_poly(&l, n));
            assert_eq!(lbar_poly(n), row_poly(&lbar, n));
        }
    }

    #[test]
    fn residue_pair_layout() {
        let r = residue_pair(&x(&[1, 2]), &x(&[0, 3, 4]), 3);
        assert_eq!(r.component(0, Var::X), x(&[1, 2]));
        assert_eq!(r.component(1, Var::X), x(&[0, 3, 4]));
        assert_eq!(r.component(2, Var::X), x(&[]));
    }
}
