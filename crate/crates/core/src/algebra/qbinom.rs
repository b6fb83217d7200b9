use super::poly::{UniPoly, Var};

/// Gaussian binomial `[n k]_q`; the zero polynomial outside `0 <= k <= n`.
///
/// Built with the additive recursion `[n k] = q^k [n-1 k] + [n-1 k-1]`, so
/// no division is ever performed.
pub fn q_binomial(n: i64, k: i64) -> UniPoly {
    if n < 0 || k < 0 || k > n {
        return UniPoly::zero(Var::Q);
    }
    let (n, k) = (n as usize, k as usize);
    // Only columns 0..=k are needed.
    let mut row = vec![UniPoly::one(Var::Q)];
    for m in 1..=n {
        row = next_row(&row, m, k);
    }
    row.swap_remove(k)
}

/// Row `n` of the q-Pascal triangle: `[n 0], ..., [n n]`.
pub fn q_binomial_row(n: usize) -> Vec<UniPoly> {
    let mut row = vec![UniPoly::one(Var::Q)];
    for m in 1..=n {
        row = next_row(&row, m, m);
    }
    row
}

fn next_row(prev: &[UniPoly], m: usize, max_k: usize) -> Vec<UniPoly> {
    (0..=m.min(max_k))
        .map(|j| {
            let stay = prev.get(j).map(|p| p.shift(j)).unwrap_or_else(|| UniPoly::zero(Var::Q));
            let step = if j > 0 { prev[j - 1].clone() } else { UniPoly::zero(Var::Q) };
            &stay + &step
        })
        .collect()
}

/// All Gaussian binomials `[n k]_q` for `0 <= k <= n <= max_n`.
#[derive(Clone, Debug)]
pub struct QBinomialTable {
    rows: Vec<Vec<UniPoly>>,
}

impl QBinomialTable {
    pub fn new(max_n: usize) -> Self {
        let mut rows = vec![vec![UniPoly::one(Var::Q)]];
        for m in 1..=max_n {
            let next = next_row(&rows[m - 1], m, m);
            rows.push(next);
        }
        Self { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `[n k]_q`, zero outside the triangle. Panics if `n > max_n`.
    pub fn get(&self, n: i64, k: i64) -> UniPoly {
        if n < 0 || k < 0 || k > n {
            return UniPoly::zero(Var::Q);
        }
        self.rows[n as usize][k as usize].clone()
    }

    pub fn row(&self, n: usize) -> &[UniPoly] {
        &self.rows[n]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{binomial, Integer};

    /// Inversion generating function by listing all weight-k words.
    fn inversion_gf(n: usize, k: usize) -> Vec<i64> {
        let mut counts = vec![0i64; k * (n - k) + 1];
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let bits: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
            let mut inv = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[i] && !bits[j] {
                        inv += 1;
                    }
                }
            }
            counts[inv] += 1;
        }
        counts
    }

    #[test]
    fn small_cases() {
        assert_eq!(q_binomial(2, 1), UniPoly::from_i64s(Var::Q, &[1, 1]));
        assert_eq!(q_binomial(4, 2), UniPoly::from_i64s(Var::Q, &[1, 1, 2, 1, 1]));
        assert_eq!(inversion_gf(4, 2), vec![1, 1, 2, 1, 1]);
        assert_eq!(q_binomial(9, 0), UniPoly::one(Var::Q));
        assert!(q_binomial(3, 4).is_zero());
        assert!(q_binomial(3, -1).is_zero());
        assert_eq!(q_binomial(4, 2).eval(&Integer::from(1)), Integer::from(6));
        assert_eq!(q_binomial(4, 2).eval(&Integer::from(-1)), Integer::from(2));
    }

    #[test]
    fn shape_of_gaussian_polynomials() {
        let table = QBinomialTable::new(20);
        for n in 0..=20i64 {
            for k in 0..=n {
                let g = table.get(n, k);
                assert_eq!(g, q_binomial(n, k));
                let deg = (k * (n - k)) as usize;
                assert_eq!(g.degree(), Some(deg), "degree of [{n} {k}]");
                assert!(g.has_nonnegative_coeffs());
                assert_eq!(g.reversed(deg), g, "[{n} {k}] palindromic");
                assert_eq!(g.eval(&Integer::from(1)), binomial(n, k));
            }
        }
    }

    #[test]
    fn matches_inversion_enumeration() {
        for n in 0..=12usize {
            let row = q_binomial_row(n);
            for k in 0..=n {
                let expected = UniPoly::from_i64s(Var::Q, &inversion_gf(n, k));
                assert_eq!(row[k], expected, "[{n} {k}]");
            }
        }
    }
}
