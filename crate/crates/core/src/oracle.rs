//! Brute-force ground truth.
//!
//! Everything here enumerates objects directly (k-subsets, binary words,
//! bead arrangements) and counts them. Nothing in this module uses a
//! recursion or closed form from elsewhere in the crate, so it can serve
//! as an independent oracle for [`crate::triangles`] and
//! [`crate::identities`].

use std::collections::HashSet;

use num_traits::Zero;

use crate::algebra::Integer;
use crate::error::{Error, Result};

/// Largest `n` accepted by the enumerators (`2^24` words worst case).
pub const ENUMERATION_BOUND: usize = 24;

fn guard(n: usize) -> Result<()> {
    if n > ENUMERATION_BOUND {
        Err(Error::EnumerationBound { n, max: ENUMERATION_BOUND })
    } else {
        Ok(())
    }
}

/// A binary word `(b_1, ..., b_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    bits: Vec<bool>,
}

impl Word {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    /// Parses a string of `0`/`1` characters.
    pub fn parse(s: &str) -> Option<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn reversed(&self) -> Self {
        Self { bits: self.bits.iter().rev().copied().collect() }
    }

    pub fn is_palindrome(&self) -> bool {
        self.bits.iter().eq(self.bits.iter().rev())
    }
}

impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// A subset `{i_1 < ... < i_k}` of `{1, ..., n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KSubset {
    n: usize,
    elements: Vec<usize>,
}

impl KSubset {
    /// Sorts and deduplicates; returns `None` if an element is outside `1..=n`.
    pub fn new(n: usize, mut elements: Vec<usize>) -> Option<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.iter().any(|&i| i == 0 || i > n) {
            return None;
        }
        Some(Self { n, elements })
    }

    /// Subset whose indicator is bit `i - 1` of `mask`.
    pub fn from_mask(n: usize, mask: u32) -> Self {
        let elements = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        Self { n, elements }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Element sum.
    pub fn sum(&self) -> usize {
        self.elements.iter().sum()
    }

    /// Indicator word `w(S)`.
    pub fn indicator(&self) -> Word {
        let mut bits = vec![false; self.n];
        for &i in &self.elements {
            bits[i - 1] = true;
        }
        Word::new(bits)
    }

    /// `S* = {n + 1 - i : i in S}`.
    pub fn star(&self) -> Self {
        let mut elements: Vec<usize> = self.elements.iter().map(|&i| self.n + 1 - i).collect();
        elements.reverse();
        Self { n: self.n, elements }
    }
}

/// Number of pairs `i < j` with a one at `i` and a zero at `j`.
pub fn inv(w: &Word) -> usize {
    let mut ones = 0;
    let mut count = 0;
    for &b in w.bits() {
        if b {
            ones += 1;
        } else {
            count += ones;
        }
    }
    count
}

/// Indicator word of `S*`.
pub fn star_word(s: &KSubset) -> Word {
    s.star().indicator()
}

/// Calls `f` on every `n`-bit mask with exactly `k` bits set.
fn for_each_mask(n: usize, k: usize, mut f: impl FnMut(u32)) {
    if k > n {
        return;
    }
    if k == 0 {
        f(0);
        return;
    }
    let limit = 1u64 << n;
    let mut mask: u64 = (1 << k) - 1;
    while mask < limit {
        f(mask as u32);
        // Gosper's hack: next larger integer with the same popcount.
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
}

fn inv_of_mask(n: usize, mask: u32) -> usize {
    let mut ones = 0;
    let mut count = 0;
    for i in 0..n {
        if mask >> i & 1 == 1 {
            ones += 1;
        } else {
            count += ones;
        }
    }
    count
}

fn residue_histogram(p: usize, values: impl FnOnce(&mut dyn FnMut(usize))) -> Vec<Integer> {
    assert!(p >= 1, "modulus must be positive");
    let mut counts = vec![0u64; p];
    values(&mut |v| counts[v % p] += 1);
    counts.into_iter().map(Integer::from).collect()
}

/// Entry `j` counts the k-subsets `S` of `{1..n}` with `sum(S) = j (mod p)`.
pub fn subset_residue_counts(n: usize, k: usize, p: usize) -> Result<Vec<Integer>> {
    guard(n)?;
    Ok(residue_histogram(p, |push| {
        for_each_mask(n, k, |mask| {
            let sum: usize = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).sum();
            push(sum);
        })
    }))
}

/// Entry `j` counts the words of length `n` and weight `k` with
/// `inv(w) = j (mod p)`.
pub fn inv_residue_counts(n: usize, k: usize, p: usize) -> Result<Vec<Integer>> {
    guard(n)?;
    Ok(residue_histogram(p, |push| {
        for_each_mask(n, k, |mask| push(inv_of_mask(n, mask)))
    }))
}

/// Reversal classes `{w, reverse(w)}` of weight-`k` words of length `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReversalClasses {
    /// Number of classes.
    pub classes: Integer,
    /// Number of palindromic words (singleton classes).
    pub palindromes: Integer,
}

pub fn reversal_classes(n: usize, k: usize) -> Result<ReversalClasses> {
    guard(n)?;
    let mut reps = HashSet::new();
    let mut palindromes = 0u64;
    for_each_mask(n, k, |mask| {
        let rev = reverse_bits(mask, n);
        if rev == mask {
            palindromes += 1;
        }
        reps.insert(mask.min(rev));
    });
    Ok(ReversalClasses {
        classes: Integer::from(reps.len()),
        palindromes: Integer::from(palindromes),
    })
}

fn reverse_bits(mask: u32, n: usize) -> u32 {
    if n == 0 {
        0
    } else {
        mask.reverse_bits() >> (32 - n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Bead {
    White,
    Blue,
    Red,
}

/// Lexicographically least image of a cyclic arrangement under the
/// dihedral group (all rotations and reflections).
fn dihedral_canonical(beads: &[Bead]) -> Vec<Bead> {
    let m = beads.len();
    let mut best: Option<Vec<Bead>> = None;
    let reflected: Vec<Bead> = beads.iter().rev().copied().collect();
    for base in [beads, reflected.as_slice()] {
        for r in 0..m {
            let image: Vec<Bead> = base[r..].iter().chain(&base[..r]).copied().collect();
            if best.as_ref().is_none_or(|b| image < *b) {
                best = Some(image);
            }
        }
    }
    best.unwrap_or_default()
}

/// Bracelets with `n_white` white beads, one blue bead and `k_red` red
/// beads, counted up to rotation and reflection.
pub fn bracelet_count(n_white: usize, k_red: usize) -> Result<Integer> {
    let m = n_white + k_red + 1;
    guard(m - 1)?;
    let mut seen = HashSet::new();
    for blue in 0..m {
        // red positions: a k_red-subset of the m-1 non-blue slots
        for_each_mask(m - 1, k_red, |mask| {
            let mut beads = Vec::with_capacity(m);
            let mut slot = 0;
            for pos in 0..m {
                if pos == blue {
                    beads.push(Bead::Blue);
                } else {
                    beads.push(if mask >> slot & 1 == 1 { Bead::Red } else { Bead::White });
                    slot += 1;
                }
            }
            seen.insert(dihedral_canonical(&beads));
        });
    }
    Ok(Integer::from(seen.len()))
}

/// All k-subsets of `{1..n}`, in mask order.
pub fn k_subsets(n: usize, k: usize) -> Result<Vec<KSubset>> {
    guard(n)?;
    let mut out = Vec::new();
    for_each_mask(n, k, |mask| out.push(KSubset::from_mask(n, mask)));
    Ok(out)
}

/// All words of length `n` and weight `k`.
pub fn words(n: usize, k: usize) -> Result<Vec<Word>> {
    guard(n)?;
    let mut out = Vec::new();
    for_each_mask(n, k, |mask| out.push(Word::new((0..n).map(|i| mask >> i & 1 == 1).collect())));
    Ok(out)
}

/// Total of a count vector.
pub fn total(counts: &[Integer]) -> Integer {
    counts.iter().fold(Integer::zero(), |acc, c| acc + c)
}
