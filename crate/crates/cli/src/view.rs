//! Linearizing triangles and scalar families into plain sequences.

use std::fmt;
use std::str::FromStr;

use losanitsch_core::identities::families::row_poly;
use losanitsch_core::identities::qpoly::losanitsch_fibonacci;
use losanitsch_core::triangles::{e_o_tables, losanitsch_tables, qbinom_minus1_table, IntTriangle};
use losanitsch_core::Integer;

use crate::error::{CliError, Result};

/// Where the numbers come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    E,
    O,
    L,
    LBar,
    QBinomMinus1,
    /// `f_n(1) = sum_k L(n-1-k, k)`.
    LosanitschFibonacci,
}

impl Source {
    pub const NAMES: &'static [&'static str] = &["e", "o", "L", "Lbar", "qbinom_minus1", "fib"];

    pub fn is_triangle(self) -> bool {
        self != Source::LosanitschFibonacci
    }

    /// Rows `0..=max_n` of a triangle source.
    pub fn triangle(self, max_n: usize) -> Option<IntTriangle> {
        match self {
            Source::E => Some(e_o_tables(max_n).0),
            Source::O => Some(e_o_tables(max_n).1),
            Source::L => Some(losanitsch_tables(max_n).0),
            Source::LBar => Some(losanitsch_tables(max_n).1),
            Source::QBinomMinus1 => Some(qbinom_minus1_table(max_n)),
            Source::LosanitschFibonacci => None,
        }
    }
}

impl FromStr for Source {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "e" => Source::E,
            "o" => Source::O,
            "L" => Source::L,
            "Lbar" => Source::LBar,
            "qbinom_minus1" => Source::QBinomMinus1,
            "fib" => Source::LosanitschFibonacci,
            _ => {
                return Err(CliError::Usage(format!(
                    "unknown sequence source {s:?}; expected one of {}",
                    Source::NAMES.join(", ")
                )))
            }
        })
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = [Source::E, Source::O, Source::L, Source::LBar, Source::QBinomMinus1, Source::LosanitschFibonacci]
            .iter()
            .position(|s| s == self)
            .unwrap();
        f.write_str(Source::NAMES[i])
    }
}

/// How a triangle is read off as a sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Linearization {
    /// `T(0,0), T(1,0), T(1,1), T(2,0), ...`
    Rows,
    /// `T(k,k), T(k+1,k), ...`
    Column(usize),
    /// `T(d,0), T(d+1,1), ...`, i.e. entries `T(n, n-d)`.
    Diagonal(usize),
    /// `a(0), a(1), ...` of a scalar family.
    Scalar,
}

impl fmt::Display for Linearization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Linearization::Rows => f.write_str("read by rows"),
            Linearization::Column(k) => write!(f, "column {k}"),
            Linearization::Diagonal(d) => write!(f, "diagonal {d}"),
            Linearization::Scalar => f.write_str("terms"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SequenceView {
    pub source: Source,
    pub rule: Linearization,
}

impl SequenceView {
    pub fn new(source: Source, rule: Linearization) -> Result<Self> {
        if source.is_triangle() == (rule == Linearization::Scalar) {
            return Err(CliError::Usage(format!("{source} cannot be read as {rule:?}")));
        }
        Ok(Self { source, rule })
    }

    /// Default reading: rows for triangles, scalar otherwise.
    pub fn default_for(source: Source) -> Self {
        let rule = if source.is_triangle() { Linearization::Rows } else { Linearization::Scalar };
        Self { source, rule }
    }

    /// Values drawn from rows `0..=max_n` (terms `0..=max_n` for a scalar family).
    pub fn values(&self, max_n: usize) -> Vec<Integer> {
        if self.rule == Linearization::Scalar {
            let (l, _) = losanitsch_tables(max_n);
            let one = Integer::from(1);
            return (0..=max_n).map(|n| losanitsch_fibonacci(n, &l).eval(&one)).collect();
        }
        let t = self.source.triangle(max_n).expect("triangle source");
        match self.rule {
            Linearization::Rows => t.read_by_rows(),
            Linearization::Column(k) => t.column(k).cloned().collect(),
            Linearization::Diagonal(d) => (d..=max_n).map(|n| t.entry(n, n - d).clone()).collect(),
            Linearization::Scalar => unreachable!(),
        }
    }

    /// Row `n` as an `x`-polynomial, for display.
    pub fn row_text(&self, max_n: usize, n: usize) -> Option<String> {
        self.source.triangle(max_n).map(|t| row_poly(&t, n).to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| Integer::from(x)).collect()
    }

    #[test]
    fn rows_count() {
        let v = SequenceView::default_for(Source::L).values(6);
        assert_eq!(v.len(), 7 * 8 / 2);
        assert_eq!(&v[..10], &ints(&[1, 1, 1, 1, 1, 1, 1, 2, 2, 1])[..]);
    }

    #[test]
    fn column_and_diagonal() {
        let col = SequenceView::new(Source::E, Linearization::Column(2)).unwrap().values(6);
        assert_eq!(col, ints(&[0, 1, 2, 4, 6]));
        let diag = SequenceView::new(Source::L, Linearization::Diagonal(1)).unwrap().values(6);
        assert_eq!(diag, ints(&[1, 1, 2, 2, 3, 3]));
    }

    #[test]
    fn scalar_family() {
        let v = SequenceView::default_for(Source::LosanitschFibonacci).values(8);
        assert_eq!(v, ints(&[0, 1, 1, 2, 2, 4, 5, 9, 12]));
        assert!(SequenceView::new(Source::LosanitschFibonacci, Linearization::Rows).is_err());
        assert!(SequenceView::new(Source::L, Linearization::Scalar).is_err());
    }

    #[test]
    fn names_round_trip() {
        for name in Source::NAMES {
            assert_eq!(name.parse::<Source>().unwrap().to_string(), *name);
        }
        assert!("bogus".parse::<Source>().is_err());
    }
}
