//! Polynomial families with exact `q`-polynomial coefficients:
//! Rogers-Szegö, q-Newton, q-Fibonacci and the pentagonal partial sums.

use num_traits::One;

use crate::algebra::{binomial, Integer, QBinomialTable, ResiduePoly, RingPoly, UniPoly, Var};
use crate::triangles::IntTriangle;

/// Polynomial in `x` (or `s`) with coefficients in `Z[q]`.
pub type QPoly = RingPoly<UniPoly>;

fn q_mono(exp: usize) -> UniPoly {
    UniPoly::monomial(Var::Q, Integer::one(), exp)
}

fn q_one() -> UniPoly {
    UniPoly::one(Var::Q)
}

/// `r_n(x, q) = sum_k [n k]_q x^k`.
pub fn rogers_szego(n: usize) -> QPoly {
    RingPoly::new(crate::algebra::q_binomial_row(n))
}

/// `r_0, ..., r_max_n` from `r_n = (x+1) r_{n-1} + (q^(n-1) - 1) x r_{n-2}`.
pub fn rogers_szego_recursive(max_n: usize) -> Vec<QPoly> {
    let x_plus_1 = RingPoly::new(vec![q_one(), q_one()]);
    let mut out: Vec<QPoly> = vec![RingPoly::constant(q_one())];
    for n in 1..=max_n {
        let mut next = &x_plus_1 * &out[n - 1];
        if n >= 2 {
            let c = &q_mono(n - 1) - &q_one();
            next = &next + &out[n - 2].scale(&c).shift(1);
        }
        out.push(next);
    }
    out.truncate(max_n + 1);
    out
}

/// `p_n(x, q) = prod_{j=1..n} (1 + q^j x)`.
pub fn q_newton(n: usize) -> QPoly {
    (1..=n).fold(RingPoly::constant(q_one()), |acc, j| {
        &acc * &RingPoly::new(vec![q_one(), q_mono(j)])
    })
}

/// `sum_k q^C(k+1,2) [n k]_q x^k`.
pub fn q_newton_expanded(n: usize, table: &QBinomialTable) -> QPoly {
    RingPoly::new(
        (0..=n)
            .map(|k| table.get(n as i64, k as i64).shift(k * (k + 1) / 2))
            .collect(),
    )
}

/// `F_n(s, q) = sum_{k <= (n-1)/2} q^(k(k-1)) [n-1-k k]_q s^k`.
pub fn q_fibonacci(n: usize, table: &QBinomialTable) -> QPoly {
    if n == 0 {
        return RingPoly::zero();
    }
    RingPoly::new(
        (0..=(n - 1) / 2)
            .map(|k| table.get((n - 1 - k) as i64, k as i64).shift(k * k.saturating_sub(1)))
            .collect(),
    )
}

/// `F_0, ..., F_max_n`, seeded from the sum for `n <= 2` and continued by
/// `F_n = F_{n-1} + q^(n-3) s F_{n-2}`.
pub fn q_fibonacci_recursive(max_n: usize) -> Vec<QPoly> {
    let table = QBinomialTable::new(2);
    let mut out: Vec<QPoly> = (0..=2.min(max_n)).map(|n| q_fibonacci(n, &table)).collect();
    for n in 3..=max_n {
        let next = &out[n - 1] + &out[n - 2].scale(&q_mono(n - 3)).shift(1);
        out.push(next);
    }
    out
}

/// Fibonacci polynomial `F_n(s) = sum_k C(n-1-k, k) s^k`.
pub fn fibonacci_poly(n: usize) -> UniPoly {
    if n == 0 {
        return UniPoly::zero(Var::S);
    }
    let coeffs = (0..=(n - 1) / 2).map(|k| binomial((n - 1 - k) as i64, k as i64)).collect();
    UniPoly::new(Var::S, coeffs)
}

/// Substitutes a value for `q` in every coefficient.
pub fn eval_q(poly: &QPoly, q: i64, var: Var) -> UniPoly {
    let t = Integer::from(q);
    UniPoly::new(var, poly.coeffs().iter().map(|c| c.eval(&t)).collect())
}

/// Reduces every coefficient modulo `q^p - 1`.
pub fn reduce_q(poly: &QPoly, p: usize) -> RingPoly<ResiduePoly> {
    poly.map(|c| ResiduePoly::reduce(c, p).expect("p >= 2"))
}

/// `f_n(s) = sum_k L(n-1-k, k) s^k`.
pub fn losanitsch_fibonacci(n: usize, l: &IntTriangle) -> UniPoly {
    if n == 0 {
        return UniPoly::zero(Var::S);
    }
    let coeffs = (0..=(n - 1) / 2).map(|k| l.value((n - 1 - k) as i64, k as i64)).collect();
    UniPoly::new(Var::S, coeffs)
}

/// `f(n) = sum_k (-1)^k q^C(k+1,2) [n-1-k k]_q` for `n = 0..=max_n`.
pub fn pentagonal_f_all(max_n: usize) -> Vec<UniPoly> {
    let table = QBinomialTable::new(max_n.max(1));
    (0..=max_n)
        .map(|n| {
            (0..n).fold(UniPoly::zero(Var::Q), |acc, k| {
                let term = table.get(n as i64 - 1 - k as i64, k as i64).shift(k * (k + 1) / 2);
                if k % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                }
            })
        })
        .collect()
}

pub fn pentagonal_f(n: usize) -> UniPoly {
    pentagonal_f_all(n).swap_remove(n)
}

/// `f(0..=max_n)` from `f(n) = f(n-1) - q^(n-2) f(n-3) + q^(n-2) f(n-4)`,
/// seeded with `f(0) = 0, f(1) = f(2) = 1, f(3) = 1 - q`.
pub fn pentagonal_f_recursive(max_n: usize) -> Vec<UniPoly> {
    let mut out = vec![
        UniPoly::zero(Var::Q),
        q_one(),
        q_one(),
        UniPoly::from_i64s(Var::Q, &[1, -1]),
    ];
    for n in 4..=max_n {
        let step = &out[n - 4] - &out[n - 3];
        let next = &out[n - 1] + &step.shift(n - 2);
        out.push(next);
    }
    out.truncate(max_n + 1);
    out
}

/// `phi(n) = f(n) mod (q^2 - 1)`.
pub fn pentagonal_phi(n: usize) -> ResiduePoly {
    ResiduePoly::reduce(&pentagonal_f(n), 2).expect("p = 2")
}

/// `prod_{m >= 1} (1 - q^m)` truncated to degree `max_deg`.
pub fn euler_product(max_deg: usize) -> UniPoly {
    let mut coeffs = vec![Integer::from(0); max_deg + 1];
    coeffs[0] = Integer::one();
    for m in 1..=max_deg {
        for d in (m..=max_deg).rev() {
            let prev = coeffs[d - m].clone();
            coeffs[d] -= prev;
        }
    }
    UniPoly::new(Var::Q, coeffs)
}

/// Largest generalized pentagonal exponent present in `f(n)`:
/// `m(3m-1)/2` enters at `n = 3m` and `m(3m+1)/2` at `n = 3m+1`.
/// `None` for `n = 0`, where `f(0) = 0`.
pub fn pentagonal_prefix_degree(n: usize) -> Option<usize> {
    if n == 0 {
        return None;
    }
    let m = n / 3;
    Some(if n % 3 == 0 { m * (3 * m - 1) / 2 } else { m * (3 * m + 1) / 2 })
}

/// Truncation of a polynomial to degree `<= d`.
pub fn truncate(p: &UniPoly, d: usize) -> UniPoly {
    UniPoly::new(p.var(), p.coeffs().iter().take(d + 1).cloned().collect())
}
