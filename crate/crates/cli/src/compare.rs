//! Aligning a computed sequence with a b-file under small index shifts.

use std::fmt;

use losanitsch_core::Integer;

use crate::bfile::BFile;

/// Shifts tried, in order: 0, -1, +1, -2, +2, ...
pub const MAX_SHIFT: i64 = 4;

pub fn shift_order() -> impl Iterator<Item = i64> {
    std::iter::once(0).chain((1..=MAX_SHIFT).flat_map(|s| [-s, s]))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub index: i64,
    pub ours: Integer,
    pub theirs: Integer,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Every overlapping term agrees once b-file index `i` is read as our position `i + shift`.
    Match { shift: i64, compared: usize },
    /// No shift aligns; the first disagreement at shift 0.
    NoAlignment { first: Option<Mismatch> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub verdict: Verdict,
    /// b-file terms lying past the computed range.
    pub beyond: usize,
}

impl Comparison {
    pub fn is_match(&self) -> bool {
        matches!(self.verdict, Verdict::Match { .. })
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.verdict {
            Verdict::Match { shift, compared } => {
                write!(f, "match: shift {shift}, {compared} terms compared, {} beyond range", self.beyond)
            }
            Verdict::NoAlignment { first: Some(m) } => write!(
                f,
                "mismatch: no shift in [-{MAX_SHIFT}, {MAX_SHIFT}] aligns; at b-file index {} computed {} but b-file has {}",
                m.index, m.ours, m.theirs
            ),
            Verdict::NoAlignment { first: None } => {
                write!(f, "mismatch: no shift in [-{MAX_SHIFT}, {MAX_SHIFT}] leaves enough overlapping terms")
            }
        }
    }
}

struct Attempt {
    compared: usize,
    beyond: usize,
    first: Option<Mismatch>,
}

fn attempt(ours: &[Integer], theirs: &BFile, shift: i64) -> Attempt {
    let mut a = Attempt { compared: 0, beyond: 0, first: None };
    for (idx, v) in theirs.entries() {
        let pos = idx + shift;
        if pos < 0 {
            continue;
        }
        match ours.get(pos as usize) {
            None => a.beyond += 1,
            Some(o) => {
                a.compared += 1;
                if o != v && a.first.is_none() {
                    a.first = Some(Mismatch { index: *idx, ours: o.clone(), theirs: v.clone() });
                }
            }
        }
    }
    a
}

/// Compares `ours` (indexed from 0) against `theirs`. A shift counts only if
/// at most `|shift|` terms drop out of the overlap and at least one remains.
pub fn compare(ours: &[Integer], theirs: &BFile) -> Comparison {
    let full = ours.len().min(theirs.len());
    let mut at_zero = None;
    for shift in shift_order() {
        let a = attempt(ours, theirs, shift);
        let enough = a.compared > 0 && a.compared + shift.unsigned_abs() as usize >= full;
        if enough && a.first.is_none() {
            return Comparison { verdict: Verdict::Match { shift, compared: a.compared }, beyond: a.beyond };
        }
        if shift == 0 {
            at_zero = Some(a);
        }
    }
    let a = at_zero.expect("shift 0 is tried first");
    Comparison { verdict: Verdict::NoAlignment { first: a.first }, beyond: a.beyond }
}
