//! Subsets with sum divisible by an odd prime `p`.

use crate::algebra::{is_prime, Integer, UniPoly, Var};
use crate::error::{Error, Result};
use crate::triangles::epsilon_table;

fn require_odd_prime(p: usize) -> Result<()> {
    if p % 2 == 1 && is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotOddPrime(p))
    }
}

/// `e_n(x, p) = sum_k e(n, k, 0, p) x^k`, read off the epsilon table.
pub fn general_e_poly(n: usize, p: usize) -> Result<UniPoly> {
    require_odd_prime(p)?;
    general_e_polys(n, p).map(|mut v| v.swap_remove(n))
}

/// `e_0(x, p), ..., e_max_n(x, p)`.
pub fn general_e_polys(max_n: usize, p: usize) -> Result<Vec<UniPoly>> {
    require_odd_prime(p)?;
    let eps = epsilon_table(max_n, p)?;
    Ok((0..=max_n)
        .map(|n| UniPoly::new(Var::X, eps.row(n).iter().map(|r| r.coeff(0).clone()).collect()))
        .collect())
}

/// `b_0(x), ..., b_{p-1}(x)` with `b_i(x) = p e_i(x, p) - (1+x)^i`, so that
/// `p e_{pn+i}(x, p) = (1+x)^(pn+i) + b_i(x) (1+x^p)^n`.
pub fn b_polys(p: usize) -> Result<Vec<UniPoly>> {
    require_odd_prime(p)?;
    let es = general_e_polys(p - 1, p)?;
    let one_plus_x = UniPoly::linear(Var::X, 1, 1);
    Ok(es
        .iter()
        .enumerate()
        .map(|(i, e)| &e.scale(&Integer::from(p)) - &one_plus_x.pow(i as u32))
        .collect())
}

/// Right-hand side `((1+x)^m + b_i(x)(1+x^p)^n) / p` for `m = pn + i`.
pub fn general_e_closed(m: usize, p: usize, b: &[UniPoly]) -> UniPoly {
    let (n, i) = (m / p, m % p);
    let one_plus_xp = UniPoly::from_i64s(Var::X, &[1]) + UniPoly::monomial(Var::X, Integer::from(1), p);
    let sum = &UniPoly::linear(Var::X, 1, 1).pow(m as u32) + &(&b[i] * &one_plus_xp.pow(n as u32));
    sum.div_exact(&Integer::from(p))
        .unwrap_or_else(|e| panic!("closed form for e_{m}(x, {p}) must divide exactly: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b_polys_for_three() {
        let b = b_polys(3).unwrap();
        assert_eq!(b[0], UniPoly::from_i64s(Var::X, &[2]));
        assert_eq!(b[1], UniPoly::from_i64s(Var::X, &[2, -1]));
        assert_eq!(b[2], UniPoly::from_i64s(Var::X, &[2, -2, 2]));
    }

    #[test]
    fn degrees() {
        for p in [3, 5, 7, 11] {
            for (i, b) in b_polys(p).unwrap().iter().enumerate() {
                assert_eq!(b.degree(), Some(i), "b_{i} for p={p}");
            }
        }
    }

    #[test]
    fn closed_form_matches_table() {
        for p in [3, 5, 7] {
            let b = b_polys(p).unwrap();
            let es = general_e_polys(3 * p, p).unwrap();
            for (m, e) in es.iter().enumerate() {
                assert_eq!(general_e_closed(m, p, &b), *e, "m={m} p={p}");
            }
        }
    }

    #[test]
    fn rejects_even_or_composite() {
        assert_eq!(b_polys(2), Err(Error::NotOddPrime(2)));
        assert_eq!(b_polys(9), Err(Error::NotOddPrime(9)));
        assert_eq!(general_e_poly(4, 4), Err(Error::NotOddPrime(4)));
    }
}
