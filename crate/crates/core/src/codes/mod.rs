//! Codes, coincidence sets and descendant sets.
//!
//! Words are stored as `Vec<u8>` symbol strings. All indices are 0-based;
//! reports add one when rendered.

mod analyze;
mod verify;

use alloc::vec::Vec;
use core::fmt;

use crate::setfam::{full_mask, Family, Subset, MAX_GROUND};
use crate::{Error, Result};

pub use analyze::{analyze, coincidence_family, Analysis, CoincidenceProfile, ProofCase};
pub use verify::{
    bh_sandwich_holds, extends_twfp_direct, is_2wfp_structural, is_twfp_direct, DirectViolation,
    StructuralReason, StructuralViolation, Verdict,
};

/// A code of `m` pairwise distinct words of length `n` over `{0, .., q-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Code {
    n: usize,
    q: u16,
    words: Vec<Vec<u8>>,
}

pub(crate) fn check_params(n: usize, q: usize) -> Result<()> {
    if !(1..=MAX_GROUND).contains(&n) {
        return Err(Error::CodeLength(n));
    }
    if !(2..=256).contains(&q) {
        return Err(Error::Alphabet(q));
    }
    Ok(())
}

impl Code {
    pub fn new(n: usize, q: usize, words: Vec<Vec<u8>>) -> Result<Self> {
        check_params(n, q)?;
        for (index, w) in words.iter().enumerate() {
            check_word(w, n, q as u16, index)?;
        }
        // sort a copy of the indices to spot duplicates in O(m log m)
        let mut order: Vec<usize> = (0..words.len()).collect();
        order.sort_by(|&a, &b| words[a].cmp(&words[b]).then(a.cmp(&b)));
        for pair in order.windows(2) {
            if words[pair[0]] == words[pair[1]] {
                let (a, b) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
                return Err(Error::DuplicateWord(a, b));
            }
        }
        Ok(Code { n, q: q as u16, words })
    }

    /// Words given as strings of decimal digits, e.g. `["000", "011"]`.
    /// Only usable for `q <= 10`.
    pub fn from_digits(q: usize, words: &[&str]) -> Result<Self> {
        let n = words.first().map_or(0, |w| w.len());
        let parsed = words
            .iter()
            .map(|w| w.bytes().map(|b| b.wrapping_sub(b'0')).collect())
            .collect();
        Code::new(n, q, parsed)
    }

    pub(crate) fn from_trusted(n: usize, q: u16, words: Vec<Vec<u8>>) -> Self {
        Code { n, q, words }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn q(&self) -> usize {
        self.q as usize
    }

    pub fn words(&self) -> &[Vec<u8>] {
        &self.words
    }

    pub fn word(&self, i: usize) -> Result<&[u8]> {
        self.words.get(i).map(Vec::as_slice).ok_or(Error::Index { index: i, m: self.len() })
    }

    /// The code restricted to the given word indices, in that order.
    pub fn subcode(&self, indices: &[usize]) -> Result<Code> {
        let mut words = Vec::with_capacity(indices.len());
        for (a, &i) in indices.iter().enumerate() {
            if indices[..a].contains(&i) {
                return Err(Error::RepeatedIndex);
            }
            words.push(self.word(i)?.to_vec());
        }
        Ok(Code { n: self.n, q: self.q, words })
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.len() {
            Ok(())
        } else {
            Err(Error::Index { index: i, m: self.len() })
        }
    }

    /// Agreement mask of two words; no checks.
    #[inline]
    pub(crate) fn agree(&self, i: usize, j: usize) -> u64 {
        agreement(&self.words[i], &self.words[j])
    }

    /// All pairwise agreement masks, row-major `m × m`; the diagonal is `[n]`.
    pub(crate) fn agreement_matrix(&self) -> Vec<u64> {
        let m = self.len();
        let full = full_mask(self.n);
        let mut out = alloc::vec![full; m * m];
        for i in 0..m {
            for j in i + 1..m {
                let a = self.agree(i, j);
                out[i * m + j] = a;
                out[j * m + i] = a;
            }
        }
        out
    }
}

#[inline]
pub(crate) fn agreement(a: &[u8], b: &[u8]) -> u64 {
    a.iter().zip(b).enumerate().fold(0, |acc, (p, (x, y))| if x == y { acc | 1 << p } else { acc })
}

fn check_word(w: &[u8], n: usize, q: u16, index: usize) -> Result<()> {
    if w.len() != n {
        return Err(Error::WordLength { index, len: w.len(), n });
    }
    if let Some((pos, &symbol)) = w.iter().enumerate().find(|(_, &s)| s as u16 >= q) {
        return Err(Error::Symbol { index, pos, symbol, q });
    }
    Ok(())
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.q > 10 { " " } else { "" };
        f.write_str("{")?;
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            for (p, s) in w.iter().enumerate() {
                if p > 0 {
                    f.write_str(sep)?;
                }
                write!(f, "{s}")?;
            }
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{}) {self}", self.n, self.len(), self.q)
    }
}

/// `I(i, j)`: the positions where words `i` and `j` agree.
pub fn coincidence_set(code: &Code, i: usize, j: usize) -> Result<Subset> {
    code.check_index(i)?;
    code.check_index(j)?;
    if i == j {
        return Err(Error::RepeatedIndex);
    }
    Ok(Subset::raw(code.n, code.agree(i, j)))
}

fn check_coalition(code: &Code, coalition: &[usize]) -> Result<()> {
    if coalition.is_empty() {
        return Err(Error::EmptyCoalition);
    }
    coalition.iter().try_for_each(|&i| code.check_index(i))
}

/// `U(X)`: positions on which every word of the coalition agrees.
pub fn undetectable_positions(code: &Code, coalition: &[usize]) -> Result<Subset> {
    check_coalition(code, coalition)?;
    let first = coalition[0];
    let bits = coalition[1..]
        .iter()
        .fold(full_mask(code.n), |acc, &j| acc & code.agree(first, j));
    Ok(Subset::raw(code.n, bits))
}

fn check_descendant(code: &Code, y: &[u8]) -> Result<()> {
    check_word(y, code.n, code.q, usize::MAX).map_err(|e| match e {
        Error::Symbol { pos, symbol, q, .. } => Error::Symbol { index: usize::MAX, pos, symbol, q },
        e => e,
    })
}

/// Wide-sense descendant test: `y` keeps the coalition's common value on
/// every undetectable position.
pub fn in_wdesc(y: &[u8], code: &Code, coalition: &[usize]) -> Result<bool> {
    check_descendant(code, y)?;
    let u = undetectable_positions(code, coalition)?;
    let x = &code.words[coalition[0]];
    Ok(u.bits() & !agreement(y, x) == 0)
}

/// Narrow-sense descendant test: every coordinate of `y` is some coalition
/// member's symbol at that coordinate.
pub fn in_desc(y: &[u8], code: &Code, coalition: &[usize]) -> Result<bool> {
    check_descendant(code, y)?;
    check_coalition(code, coalition)?;
    Ok(y.iter().enumerate().all(|(p, s)| coalition.iter().any(|&i| code.words[i][p] == *s)))
}

/// Iterates `Family` members of `X_i` as masks, skipping `i` itself.
pub(crate) fn coincidence_masks(code: &Code, i: usize) -> impl Iterator<Item = (usize, u64)> + '_ {
    (0..code.len()).filter(move |&j| j != i).map(move |j| (j, code.agree(i, j)))
}

pub(crate) fn family_of(code: &Code, i: usize) -> Family {
    Family::raw(code.n, coincidence_masks(code, i).map(|(_, m)| m))
}
