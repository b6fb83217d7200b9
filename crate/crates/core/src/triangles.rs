//! Number triangles by recursion and by closed form.
//!
//! * `e(n, k)`, `o(n, k)`: k-subsets of `{1..n}` with even / odd sum.
//! * `L(n, k)`, `Lbar(n, k)`: Losanitsch's triangle and its complement in
//!   Pascal's triangle.
//! * `epsilon(n, k, p)`, `lambda(n, k, p)`: the residues of
//!   `q^C(k+1,2) [n k]_q` and `[n k]_q` modulo `q^p - 1`, whose coefficients
//!   are `e(n, k, j, p)` and `L(n, k, j, p)`.

use num_traits::{One, Zero};

use crate::algebra::{binomial, exact_div, Integer, ResiduePoly};
use crate::error::{Error, Result};

/// Which rule produced a triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `a(n,k) = a(n-2,k) + C(n-1,k-1) - a(n-2,k-2)`.
    ParityRecursion,
    /// `L(n,k) = L(n-2,k) + C(n-2,k-1) + L(n-2,k-2)`.
    LosanitschRecursion,
    /// Pascal's triangle minus another triangle.
    BinomialComplement,
    /// Closed form evaluated entrywise.
    ClosedForm,
    /// `eps(n,k) = q^k (eps(n-1,k) + eps(n-1,k-1))` mod `q^p - 1`.
    EpsilonRecursion,
    /// `lambda(n,k) = q^k lambda(n-1,k) + lambda(n-1,k-1)` mod `q^p - 1`.
    LambdaRecursion,
    /// Coefficient of `q^j` of a residue triangle.
    ResidueCoefficient,
    /// Brute-force enumeration.
    Enumeration,
}

/// Immutable table with rows `0..=N`, row `n` holding entries `k = 0..=n`.
#[derive(Clone, Debug, PartialEq)]
pub struct Triangle<T> {
    rule: Rule,
    rows: Vec<Vec<T>>,
}

pub type IntTriangle = Triangle<Integer>;
pub type ResidueTriangle = Triangle<ResiduePoly>;

impl<T> Triangle<T> {
    pub fn from_rows(rule: Rule, rows: Vec<Vec<T>>) -> Self {
        assert!(!rows.is_empty(), "a triangle has at least row 0");
        for (n, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n + 1, "row {n} must have {} entries", n + 1);
        }
        Self { rule, rows }
    }

    pub fn rule(&self) -> Rule {
        self.rule
    }

    /// Last row index `N`.
    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[T] {
        &self.rows[n]
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&T> {
        self.rows.get(n).and_then(|r| r.get(k))
    }

    /// Entry `(n, k)`; panics outside `0 <= k <= n <= N`.
    pub fn entry(&self, n: usize, k: usize) -> &T {
        self.get(n, k)
            .unwrap_or_else(|| panic!("entry ({n}, {k}) outside triangle of {} rows", self.rows.len()))
    }

    /// Entries `(n, k)` for `n = k..=N`.
    pub fn column(&self, k: usize) -> impl Iterator<Item = &T> + '_ {
        self.rows.iter().skip(k).map(move |r| &r[k])
    }

    pub fn map<U>(&self, rule: Rule, f: impl Fn(usize, usize, &T) -> U) -> Triangle<U> {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(n, row)| row.iter().enumerate().map(|(k, t)| f(n, k, t)).collect())
            .collect();
        Triangle { rule, rows }
    }
}

impl IntTriangle {
    /// `entry(n, k)` with zero outside `0 <= k <= n`. Panics if `n > N`.
    pub fn value(&self, n: i64, k: i64) -> Integer {
        if n < 0 || k < 0 || k > n {
            return Integer::zero();
        }
        assert!(n as usize <= self.max_n(), "row {n} beyond triangle of {} rows", self.rows.len());
        self.rows[n as usize][k as usize].clone()
    }

    /// Row-by-row flattening `T(0,0), T(1,0), T(1,1), ...`.
    pub fn read_by_rows(&self) -> Vec<Integer> {
        self.rows.iter().flatten().cloned().collect()
    }

    fn build(rule: Rule, max_n: usize, mut f: impl FnMut(&[Vec<Integer>], usize, usize) -> Integer) -> Self {
        let mut rows: Vec<Vec<Integer>> = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            let row = (0..=n).map(|k| f(&rows, n, k)).collect();
            rows.push(row);
        }
        Self::from_rows(rule, rows)
    }
}

impl ResidueTriangle {
    pub fn modulus(&self) -> usize {
        self.rows[0][0].modulus()
    }

    /// Residue at `(n, k)`, zero outside the triangle. Panics if `n > N`.
    pub fn value(&self, n: i64, k: i64) -> ResiduePoly {
        if n < 0 || k < 0 || k > n {
            return ResiduePoly::zero(self.modulus());
        }
        self.rows[n as usize][k as usize].clone()
    }

    /// Triangle of the coefficients of `q^j`.
    pub fn coefficient(&self, j: usize) -> Result<IntTriangle> {
        let p = self.modulus();
        if j >= p {
            return Err(Error::ResidueIndex { j, p });
        }
        Ok(self.map(Rule::ResidueCoefficient, |_, _, r| r.coeff(j).clone()))
    }
}

/// Looks up `t(n, k)` in partially built rows, zero outside the triangle.
fn prev(rows: &[Vec<Integer>], n: i64, k: i64) -> Integer {
    if n < 0 || k < 0 || k > n {
        Integer::zero()
    } else {
        rows[n as usize][k as usize].clone()
    }
}

fn c(n: usize, k: i64) -> Integer {
    binomial(n as i64, k)
}

/// Even-sum and odd-sum triangles `(e, o)` for rows `0..=max_n`.
///
/// Both satisfy `a(n,k) = a(n-2,k) + C(n-1,k-1) - a(n-2,k-2)` from rows 0
/// and 1 given by the definitions (the empty set is even, `{1}` is odd).
pub fn e_o_tables(max_n: usize) -> (IntTriangle, IntTriangle) {
    let build = |base: [&[i64]; 2]| {
        IntTriangle::build(Rule::ParityRecursion, max_n, |rows, n, k| {
            if n < 2 {
                return Integer::from(base[n][k]);
            }
            let (ni, ki) = (n as i64, k as i64);
            prev(rows, ni - 2, ki) + c(n - 1, ki - 1) - prev(rows, ni - 2, ki - 2)
        })
    };
    (build([&[1], &[1, 0]]), build([&[0], &[0, 1]]))
}

/// Losanitsch's triangle and its complement `Lbar = C - L`, rows `0..=max_n`.
pub fn losanitsch_tables(max_n: usize) -> (IntTriangle, IntTriangle) {
    let l = IntTriangle::build(Rule::LosanitschRecursion, max_n, |rows, n, k| {
        if n < 2 {
            return Integer::one();
        }
        let (ni, ki) = (n as i64, k as i64);
        prev(rows, ni - 2, ki) + c(n - 2, ki - 1) + prev(rows, ni - 2, ki - 2)
    });
    let lbar = l.map(Rule::BinomialComplement, |n, k, v| c(n, k as i64) - v);
    (l, lbar)
}

/// `e(n, k) = sum_j C(floor((n+1)/2), 2j) C(floor(n/2), k - 2j)`.
pub fn e_closed(n: usize, k: usize) -> Integer {
    let (hi, lo) = ((n + 1) / 2, n / 2);
    (0..=k / 2)
        .map(|j| c(hi, 2 * j as i64) * c(lo, (k - 2 * j) as i64))
        .sum()
}

/// `o(n, k) = C(n, k) - e(n, k)`.
pub fn o_closed(n: usize, k: usize) -> Integer {
    c(n, k as i64) - e_closed(n, k)
}

/// `C(floor(n/2), floor(k/2))`, or 0 for even `n` and odd `k`.
fn palindromic_term(n: usize, k: usize) -> Integer {
    if n % 2 == 0 && k % 2 == 1 {
        Integer::zero()
    } else {
        c(n / 2, (k / 2) as i64)
    }
}

/// `L(n, k) = (C(n, k) + C(floor(n/2), floor(k/2))) / 2`, with the second
/// term dropped for even `n` and odd `k`.
pub fn losanitsch_closed(n: usize, k: usize) -> Integer {
    exact_div(&(c(n, k as i64) + palindromic_term(n, k)), &Integer::from(2))
}

/// `Lbar(n, k) = (C(n, k) - C(floor(n/2), floor(k/2))) / 2`, same caveat.
pub fn losanitsch_bar_closed(n: usize, k: usize) -> Integer {
    exact_div(&(c(n, k as i64) - palindromic_term(n, k)), &Integer::from(2))
}

/// `[n k]_q` at `q = -1`, in closed form.
pub fn qbinom_at_minus1(n: usize, k: usize) -> Integer {
    if k > n {
        return Integer::zero();
    }
    palindromic_term(n, k)
}

pub fn qbinom_minus1_table(max_n: usize) -> IntTriangle {
    IntTriangle::build(Rule::ClosedForm, max_n, |_, n, k| qbinom_at_minus1(n, k))
}

/// Which subset-parity column column `k` of Losanitsch's triangle copies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// Parity of `C(k+1, 2)`: even for `k = 0, 3 (mod 4)`.
    pub fn of_column(k: usize) -> Self {
        if (k * (k + 1) / 2) % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Checks that column `k` of `L` is the `e`-column for `k = 0, 3 (mod 4)`
/// and the `o`-column otherwise, on rows `0..=max_n`.
pub fn column_composition_check(max_n: usize) -> bool {
    let (e, o) = e_o_tables(max_n);
    let (l, _) = losanitsch_tables(max_n);
    (0..=max_n).all(|k| {
        let source = match Parity::of_column(k) {
            Parity::Even => &e,
            Parity::Odd => &o,
        };
        l.column(k).eq(source.column(k))
    })
}

fn check_modulus(p: usize) -> Result<()> {
    if p < 2 {
        Err(Error::ModulusTooSmall(p))
    } else {
        Ok(())
    }
}

fn residue_table(
    rule: Rule,
    max_n: usize,
    p: usize,
    step: impl Fn(&ResiduePoly, &ResiduePoly, u64) -> ResiduePoly,
) -> Result<ResidueTriangle> {
    check_modulus(p)?;
    let zero = ResiduePoly::zero(p);
    let mut rows = vec![vec![ResiduePoly::one(p)]];
    for n in 1..=max_n {
        let last: &Vec<ResiduePoly> = &rows[n - 1];
        let row = (0..=n)
            .map(|k| {
                if k == 0 {
                    return ResiduePoly::one(p);
                }
                let same = last.get(k).unwrap_or(&zero);
                step(same, &last[k - 1], k as u64)
            })
            .collect();
        rows.push(row);
    }
    Ok(Triangle::from_rows(rule, rows))
}

/// `epsilon(n, k, p) = sum_j e(n, k, j, p) q^j` for rows `0..=max_n`.
pub fn epsilon_table(max_n: usize, p: usize) -> Result<ResidueTriangle> {
    residue_table(Rule::EpsilonRecursion, max_n, p, |same, diag, k| (same + diag).mul_q_pow(k))
}

/// `lambda(n, k, p) = sum_j L(n, k, j, p) q^j` for rows `0..=max_n`.
pub fn lambda_table(max_n: usize, p: usize) -> Result<ResidueTriangle> {
    residue_table(Rule::LambdaRecursion, max_n, p, |same, diag, k| &same.mul_q_pow(k) + diag)
}

fn residue_coefficient(
    table: fn(usize, usize) -> Result<ResidueTriangle>,
    n: usize,
    k: usize,
    j: usize,
    p: usize,
) -> Result<Integer> {
    check_modulus(p)?;
    if j >= p {
        return Err(Error::ResidueIndex { j, p });
    }
    if k > n {
        return Ok(Integer::zero());
    }
    Ok(table(n, p)?.entry(n, k).coeff(j).clone())
}

/// `e(n, k, j, p)`: k-subsets of `{1..n}` with sum `= j (mod p)`.
pub fn e_residue(n: usize, k: usize, j: usize, p: usize) -> Result<Integer> {
    residue_coefficient(epsilon_table, n, k, j, p)
}

/// `L(n, k, j, p)`: the p-Losanitsch numbers.
pub fn l_residue(n: usize, k: usize, j: usize, p: usize) -> Result<Integer> {
    residue_coefficient(lambda_table, n, k, j, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&c| Integer::from(c)).collect()
    }

    fn r(c: &[i64]) -> ResiduePoly {
        ResiduePoly::from_i64s(c).unwrap()
    }

    #[test]
    fn e_and_o_rows() {
        let (e, o) = e_o_tables(6);
        assert_eq!(e.row(6), ints(&[1, 3, 6, 10, 9, 3, 0]).as_slice());
        assert_eq!(e.row(5), ints(&[1, 2, 4, 6, 3, 0]).as_slice());
        assert_eq!(*e.entry(5, 3), Integer::from(6));
        assert_eq!(*o.entry(4, 2), Integer::from(4));
        for n in 0..=6 {
            assert!(e.entry(n, 0).is_one());
            assert!(o.entry(n, 0).is_zero());
        }
        let (e0, _) = e_o_tables(0);
        assert_eq!(e0.read_by_rows(), ints(&[1]));
    }

    #[test]
    fn e_closed_form() {
        assert_eq!(e_closed(6, 4), Integer::from(9));
        assert_eq!(e_closed(4, 2), Integer::from(2));
        // sum_k C(4, 2k)^2 = 1 + 36 + 1
        assert_eq!(e_closed(8, 4), Integer::from(38));
        assert_eq!(oracle::subset_residue_counts(8, 4, 2).unwrap()[0], Integer::from(38));
        let (e, o) = e_o_tables(30);
        for n in 0..=30 {
            for k in 0..=n {
                assert_eq!(e_closed(n, k), *e.entry(n, k));
                assert_eq!(o_closed(n, k), *o.entry(n, k));
            }
        }
    }

    #[test]
    fn losanitsch_rows() {
        let (l, lbar) = losanitsch_tables(7);
        assert_eq!(l.row(6), ints(&[1, 3, 9, 10, 9, 3, 1]).as_slice());
        assert_eq!(*lbar.entry(6, 3), Integer::from(10));
        for n in 0..=7 {
            assert!(l.entry(n, n).is_one());
        }
        assert_eq!(losanitsch_closed(6, 3), Integer::from(10));
        assert_eq!(losanitsch_closed(6, 2), Integer::from(9));
        assert_eq!(losanitsch_closed(7, 3), Integer::from(19));
        let (l, lbar) = losanitsch_tables(30);
        for n in 0..=30 {
            for k in 0..=n {
                assert_eq!(losanitsch_closed(n, k), *l.entry(n, k), "L({n},{k})");
                assert_eq!(losanitsch_bar_closed(n, k), *lbar.entry(n, k), "Lbar({n},{k})");
            }
        }
    }

    #[test]
    fn columns_alternate_between_e_and_o() {
        assert!(column_composition_check(6));
        assert!(column_composition_check(30));
        let (l, _) = losanitsch_tables(6);
        let col1: Vec<Integer> = l.column(1).cloned().collect();
        assert_eq!(col1, ints(&[1, 1, 2, 2, 3, 3]));
        let (_, o) = e_o_tables(6);
        assert_eq!(o.column(1).cloned().collect::<Vec<_>>(), col1);
        assert_eq!(Parity::of_column(0), Parity::Even);
        assert_eq!(Parity::of_column(1), Parity::Odd);
        assert_eq!(Parity::of_column(2), Parity::Odd);
        assert_eq!(Parity::of_column(3), Parity::Even);
    }

    #[test]
    fn q_binomial_at_minus_one() {
        assert_eq!(qbinom_at_minus1(4, 2), Integer::from(2));
        assert_eq!(qbinom_at_minus1(6, 3), Integer::zero());
        assert_eq!(qbinom_at_minus1(7, 5), Integer::from(3));
        let t = qbinom_minus1_table(7);
        assert_eq!(t.row(7), ints(&[1, 1, 3, 3, 3, 3, 1, 1]).as_slice());
        assert_eq!(t.row(6), ints(&[1, 0, 3, 0, 3, 0, 1]).as_slice());
    }

    #[test]
    fn residue_tables() {
        let eps2 = epsilon_table(7, 2).unwrap();
        assert_eq!(*eps2.entry(5, 3), r(&[6, 4]));
        let eps3 = epsilon_table(6, 3).unwrap();
        assert_eq!(*eps3.entry(4, 2), r(&[2, 2, 2]));
        let lam2 = lambda_table(7, 2).unwrap();
        assert_eq!(*lam2.entry(7, 3), r(&[19, 16]));
        let lam3 = lambda_table(6, 3).unwrap();
        assert_eq!(*lam3.entry(5, 2), r(&[4, 3, 3]));
        for n in 0..=7 {
            assert_eq!(*eps2.entry(n, 0), ResiduePoly::one(2));
            assert_eq!(*lam2.entry(n, n), ResiduePoly::one(2));
        }
        assert_eq!(epsilon_table(3, 1), Err(Error::ModulusTooSmall(1)));
    }

    #[test]
    fn residue_coefficients() {
        for j in 0..3 {
            assert_eq!(e_residue(3, 2, j, 3).unwrap(), Integer::one());
        }
        // pair sums of {1..5}: 3,4,5,6,5,6,7,7,8,9 -> four of them are 0 mod 3
        assert_eq!(e_residue(5, 2, 0, 3).unwrap(), Integer::from(4));
        assert_eq!(oracle::subset_residue_counts(5, 2, 3).unwrap(), ints(&[4, 3, 3]));
        let (l, _) = losanitsch_tables(10);
        for n in 0..=10 {
            for k in 0..=n {
                assert_eq!(l_residue(n, k, 0, 2).unwrap(), *l.entry(n, k));
            }
        }
        assert_eq!(e_residue(4, 2, 3, 3), Err(Error::ResidueIndex { j: 3, p: 3 }));
        assert_eq!(l_residue(4, 2, 2, 2), Err(Error::ResidueIndex { j: 2, p: 2 }));
        assert_eq!(
            epsilon_table(4, 3).unwrap().coefficient(5),
            Err(Error::ResidueIndex { j: 5, p: 3 })
        );
    }
}
