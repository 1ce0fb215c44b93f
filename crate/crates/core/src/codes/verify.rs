use alloc::vec::Vec;
use core::fmt;

use super::{agreement, coincidence_masks, family_of, Code};
use crate::setfam::full_mask;
use crate::{Error, Result};

/// Outcome of a frameproof check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<V> {
    Frameproof,
    Violation(V),
}

impl<V> Verdict<V> {
    pub fn is_frameproof(&self) -> bool {
        matches!(self, Verdict::Frameproof)
    }

    pub fn violation(&self) -> Option<&V> {
        match self {
            Verdict::Frameproof => None,
            Verdict::Violation(v) => Some(v),
        }
    }
}

/// A coalition whose wide-sense descendant set contains an outside codeword.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectViolation {
    /// Sorted word indices.
    pub coalition: Vec<usize>,
    pub framed: usize,
}

impl fmt::Display for DirectViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("X={")?;
        for (i, x) in self.coalition.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", x + 1)?;
        }
        write!(f, "}} frames word {}", self.framed + 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructuralReason {
    /// `I(i, inner) ⊆ I(i, outer)`, equal sets included.
    Containment { inner: usize, outer: usize },
    /// `I(i, a) ∪ I(i, b) = [n]`.
    Covering { a: usize, b: usize },
}

/// A word whose coincidence family is not a non-2-covering Sperner family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructuralViolation {
    pub word: usize,
    pub reason: StructuralReason,
}

impl fmt::Display for StructuralViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = self.word + 1;
        match self.reason {
            StructuralReason::Containment { inner, outer } => {
                write!(f, "X_{i} not Sperner: I({i},{}) ⊆ I({i},{})", inner + 1, outer + 1)
            }
            StructuralReason::Covering { a, b } => {
                write!(f, "X_{i} covering: I({i},{}) ∪ I({i},{}) = [n]", a + 1, b + 1)
            }
        }
    }
}

/// Visits coalitions drawn from `0..m` with at most `t` members, in
/// lexicographic order of their sorted index lists. Each visit gets the
/// coalition and its undetectable mask; returning `true` stops the walk.
fn walk_coalitions(
    m: usize,
    t: usize,
    full: u64,
    agree: &dyn Fn(usize, usize) -> u64,
    visit: &mut dyn FnMut(&[usize], u64) -> bool,
) -> bool {
    fn rec(
        m: usize,
        t: usize,
        stack: &mut Vec<usize>,
        undetectable: u64,
        agree: &dyn Fn(usize, usize) -> u64,
        visit: &mut dyn FnMut(&[usize], u64) -> bool,
    ) -> bool {
        let start = stack.last().map_or(0, |&x| x + 1);
        for x in start..m {
            let u = match stack.first() {
                Some(&first) => undetectable & agree(first, x),
                None => undetectable,
            };
            stack.push(x);
            if visit(stack, u) || (stack.len() < t && rec(m, t, stack, u, agree, visit)) {
                return true;
            }
            stack.pop();
        }
        false
    }
    if t == 0 {
        return false;
    }
    rec(m, t, &mut Vec::with_capacity(t), full, agree, visit)
}

/// Definitional wide-sense `t`-frameproof check. Returns the lexicographically
/// least framing coalition, then the least framed word.
pub fn is_twfp_direct(code: &Code, t: usize) -> Verdict<DirectViolation> {
    let m = code.len();
    let agree_m = code.agreement_matrix();
    let agree = |a: usize, b: usize| agree_m[a * m + b];
    let mut found = None;
    walk_coalitions(m, t, full_mask(code.n()), &agree, &mut |x, u| {
        if x.len() < 2 {
            // wdesc of a single word is that word
            return false;
        }
        let first = x[0];
        let framed = (0..m).find(|k| !x.contains(k) && u & !agree(first, *k) == 0);
        if let Some(framed) = framed {
            found = Some(DirectViolation { coalition: x.to_vec(), framed });
        }
        found.is_some()
    });
    match found {
        Some(v) => Verdict::Violation(v),
        None => Verdict::Frameproof,
    }
}

/// Whether appending `w` to a `t`-frameproof `code` keeps it `t`-frameproof,
/// checked from the definition on the coalitions that involve `w`. `w` must
/// differ from every codeword.
pub fn extends_twfp_direct(code: &Code, w: &[u8], t: usize) -> bool {
    let m = code.len();
    let words = code.words();
    let full = full_mask(code.n());
    let agree_m = code.agreement_matrix();
    let agree = |a: usize, b: usize| agree_m[a * m + b];
    let with_w: Vec<u64> = words.iter().map(|x| agreement(x, w)).collect();
    // w framed by an old coalition
    let framed_w = walk_coalitions(m, t, full, &agree, &mut |x, u| x.len() >= 2 && u & !with_w[x[0]] == 0);
    if framed_w {
        return false;
    }
    if t < 2 {
        return true;
    }
    // an old word framed by a coalition that contains w
    let framed_old = walk_coalitions(m, t - 1, full, &agree, &mut |y, u| {
        let u = u & with_w[y[0]];
        (0..m).any(|k| !y.contains(&k) && u & !agree(y[0], k) == 0)
    });
    !framed_old
}

/// Structural 2-frameproof check: every coincidence family must be Sperner
/// (as a multiset) and non-2-covering. Words are scanned in order; for each,
/// containment is checked before covering.
pub fn is_2wfp_structural(code: &Code) -> Verdict<StructuralViolation> {
    let full = full_mask(code.n());
    for i in 0..code.len() {
        let family = family_of(code, i);
        if family.is_sperner() && family.is_non_2_covering() {
            continue;
        }
        let masks: Vec<(usize, u64)> = coincidence_masks(code, i).collect();
        let pairs = || {
            masks.iter().enumerate().flat_map(|(a, &(j, x))| masks[a + 1..].iter().map(move |&(k, y)| (j, x, k, y)))
        };
        let reason = pairs()
            .find_map(|(j, x, k, y)| {
                if x & !y == 0 {
                    Some(StructuralReason::Containment { inner: j, outer: k })
                } else if y & !x == 0 {
                    Some(StructuralReason::Containment { inner: k, outer: j })
                } else {
                    None
                }
            })
            .or_else(|| pairs().find_map(|(j, x, k, y)| (x | y == full).then_some(StructuralReason::Covering { a: j, b: k })))
            .expect("a failing family has a witness pair");
        return Verdict::Violation(StructuralViolation { word: i, reason });
    }
    Verdict::Frameproof
}

/// `I(i,j) ∩ I(i,k) ⊆ I(j,k) ⊆ (I(i,j) ∩ I(i,k)) ∪ ¬(I(i,j) ∪ I(i,k))`.
pub fn bh_sandwich_holds(code: &Code, i: usize, j: usize, k: usize) -> Result<bool> {
    for x in [i, j, k] {
        code.check_index(x)?;
    }
    if i == j || i == k || j == k {
        return Err(Error::RepeatedIndex);
    }
    let full = full_mask(code.n());
    let (ij, ik, jk) = (code.agree(i, j), code.agree(i, k), code.agree(j, k));
    let lower = ij & ik;
    let upper = lower | (!(ij | ik) & full);
    Ok(lower & !jk == 0 && jk & !upper == 0)
}
