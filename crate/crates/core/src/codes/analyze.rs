//! Per-codeword coincidence profiles and the case split of the length-even
//! and length-odd bound arguments.

use alloc::vec::Vec;

use super::{family_of, Code};
use crate::setfam::{are_cross_k_intersecting, Family};
use crate::{Error, Result};

/// Which branch of the bound arguments a coincidence family falls into.
///
/// Even `n` (with `h = n/2`): the first three come from the general lemma on
/// non-2-covering Sperner families and can hold together; the last two cover
/// what remains.
/// Odd `n` (with `h = (n-1)/2`): a family is all-small, all-large, or it
/// straddles the middle and then falls into exactly one of `OddSmallLayerDisjoint`,
/// `OddCrossDisjoint` or `OddTwoIntersecting` (checked in that order), with
/// `OddWideSpread` added when the spread is at least `h + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProofCase {
    /// `u >= h + 1`.
    EvenWideTop,
    /// `l <= h - 2`.
    EvenLowBottom,
    /// `l = u = h`.
    EvenMiddleLayer,
    /// `l = u = h - 1`; records whether that layer is intersecting.
    EvenLowerLayer { intersecting: bool },
    /// `l = h - 1`, `u = h`; records whether the lower layer is intersecting
    /// and whether the two layers are cross-intersecting.
    EvenTwoLayers { lower_intersecting: bool, cross_intersecting: bool },
    /// `u <= h`.
    OddAllSmall,
    /// `l >= h + 1`.
    OddAllLarge,
    /// Straddling with `u - l >= h + 1`.
    OddWideSpread,
    /// Straddling; the `h`-layer is nonempty and not intersecting.
    OddSmallLayerDisjoint,
    /// Straddling; some set of size `<= h - 1` misses some set of size `>= h + 1`.
    OddCrossDisjoint,
    /// Straddling; neither disjointness occurs.
    OddTwoIntersecting,
}

impl ProofCase {
    pub fn label(self) -> &'static str {
        match self {
            ProofCase::EvenWideTop => "even-wide-top",
            ProofCase::EvenLowBottom => "even-low-bottom",
            ProofCase::EvenMiddleLayer => "even-middle-layer",
            ProofCase::EvenLowerLayer { intersecting: true } => "even-case1-intersecting",
            ProofCase::EvenLowerLayer { intersecting: false } => "even-case1-disjoint",
            ProofCase::EvenTwoLayers { lower_intersecting: false, .. } => "even-case2-lower-disjoint",
            ProofCase::EvenTwoLayers { cross_intersecting: false, .. } => "even-case2-cross-disjoint",
            ProofCase::EvenTwoLayers { .. } => "even-case2-intersecting",
            ProofCase::OddAllSmall => "odd-all-small",
            ProofCase::OddAllLarge => "odd-all-large",
            ProofCase::OddWideSpread => "odd-wide-spread",
            ProofCase::OddSmallLayerDisjoint => "odd-case1",
            ProofCase::OddCrossDisjoint => "odd-case2",
            ProofCase::OddTwoIntersecting => "odd-case3",
        }
    }
}

/// Summary of the coincidence family `X_i` of one codeword.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoincidenceProfile {
    pub index: usize,
    /// `(I(i, j))` for `j != i`, in `j` order.
    pub family: Family,
    pub min_size: usize,
    pub max_size: usize,
    pub is_sperner: bool,
    pub is_non_2_covering: bool,
    /// Odd `n` only: the `(n-1)/2`-layer is intersecting (vacuous when empty).
    pub middle_layer_intersecting: Option<bool>,
    /// Odd `n` only: sets of size `<= (n-3)/2` cross-intersect sets of size `>= (n+1)/2`.
    pub low_high_cross_intersecting: Option<bool>,
    /// Odd `n` only: `u <= (n-1)/2`.
    pub all_small: Option<bool>,
    /// Odd `n` only: `l >= (n+1)/2`.
    pub all_large: Option<bool>,
    pub cases: Vec<ProofCase>,
}

impl CoincidenceProfile {
    /// `d_i = u_i - l_i`.
    pub fn spread(&self) -> usize {
        self.max_size - self.min_size
    }
}

fn intersecting(f: &Family) -> bool {
    f.is_k_intersecting(1).expect("k = 1")
}

fn cross(a: &Family, b: &Family) -> bool {
    are_cross_k_intersecting(a, b, 1).expect("same ground set, k = 1")
}

/// Builds the profile of codeword `i`.
pub fn coincidence_family(code: &Code, i: usize) -> Result<CoincidenceProfile> {
    if code.len() < 2 {
        return Err(Error::TooFewWords { needed: 2, m: code.len() });
    }
    code.check_index(i)?;
    let n = code.n();
    let family = family_of(code, i);
    let (l, u) = family.size_extremes()?;
    let mut profile = CoincidenceProfile {
        index: i,
        min_size: l,
        max_size: u,
        is_sperner: family.is_sperner(),
        is_non_2_covering: family.is_non_2_covering(),
        middle_layer_intersecting: None,
        low_high_cross_intersecting: None,
        all_small: None,
        all_large: None,
        cases: Vec::new(),
        family,
    };
    if n % 2 == 1 {
        classify_odd(&mut profile, n);
    } else {
        classify_even(&mut profile, n);
    }
    Ok(profile)
}

fn classify_odd(p: &mut CoincidenceProfile, n: usize) {
    let h = (n - 1) / 2;
    let (l, u) = (p.min_size, p.max_size);
    let low = p.family.filter_sizes(|k| k < h);
    let middle = p.family.filter_sizes(|k| k == h);
    let high = p.family.filter_sizes(|k| k > h);
    let middle_int = intersecting(&middle);
    let cross_int = cross(&low, &high);
    p.middle_layer_intersecting = Some(middle_int);
    p.low_high_cross_intersecting = Some(cross_int);
    p.all_small = Some(u <= h);
    p.all_large = Some(l > h);
    if u <= h {
        p.cases.push(ProofCase::OddAllSmall);
    } else if l > h {
        p.cases.push(ProofCase::OddAllLarge);
    } else {
        if u - l > h {
            p.cases.push(ProofCase::OddWideSpread);
        }
        p.cases.push(if !middle.is_empty() && !middle_int {
            ProofCase::OddSmallLayerDisjoint
        } else if !low.is_empty() && !cross_int {
            ProofCase::OddCrossDisjoint
        } else {
            ProofCase::OddTwoIntersecting
        });
    }
}

fn classify_even(p: &mut CoincidenceProfile, n: usize) {
    let h = n / 2;
    let (l, u) = (p.min_size, p.max_size);
    if u > h {
        p.cases.push(ProofCase::EvenWideTop);
    }
    if l + 2 <= h {
        p.cases.push(ProofCase::EvenLowBottom);
    }
    if !p.cases.is_empty() {
        return;
    }
    let lower = p.family.filter_sizes(|k| k + 1 == h);
    if l == h {
        p.cases.push(ProofCase::EvenMiddleLayer);
    } else if u + 1 == h {
        p.cases.push(ProofCase::EvenLowerLayer { intersecting: intersecting(&lower) });
    } else {
        let upper = p.family.filter_sizes(|k| k == h);
        p.cases.push(ProofCase::EvenTwoLayers {
            lower_intersecting: intersecting(&lower),
            cross_intersecting: cross(&upper, &lower),
        });
    }
}

/// All coincidence profiles and the minimum spread `d = min_i d_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Analysis {
    pub n: usize,
    pub profiles: Vec<CoincidenceProfile>,
    pub min_spread: usize,
}

pub fn analyze(code: &Code) -> Result<Analysis> {
    let profiles = (0..code.len()).map(|i| coincidence_family(code, i)).collect::<Result<Vec<_>>>()?;
    let min_spread = profiles.iter().map(CoincidenceProfile::spread).min().unwrap_or(0);
    Ok(Analysis { n: code.n(), profiles, min_spread })
}
