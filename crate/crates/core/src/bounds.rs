//! Exact upper bounds on the size of `(n, m, q)` wide-sense 2-frameproof
//! codes, plus the set-family bounds they are built from.
//!
//! All arithmetic is integral. Binomials up to `C(64, 32)` fit in `u64`;
//! intermediate products go through `u128`/`i128`.

use core::fmt;

use crate::{Error, Result};

/// Largest length with exact tables.
pub const MAX_N: u64 = 64;

/// `C(n, k)` for `0 <= k <= n <= 64`.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n || n > MAX_N {
        return Err(Error::Binomial { n, k });
    }
    Ok(binom(n, k))
}

/// Unchecked binomial; 0 when `k > n`.
pub(crate) fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc = C(n, i) here; the division is exact
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("C(n, k) fits in u64 for n <= 64")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundMethod {
    StinsonWei,
    Panoui,
    ImprovedEven,
    ImprovedOdd,
}

impl BoundMethod {
    pub fn label(self) -> &'static str {
        match self {
            BoundMethod::StinsonWei => "stinson-wei",
            BoundMethod::Panoui => "panoui",
            BoundMethod::ImprovedEven => "improved-even",
            BoundMethod::ImprovedOdd => "improved-odd",
        }
    }

    pub fn citation(self) -> &'static str {
        match self {
            BoundMethod::StinsonWei => "Stinson-Wei: Sperner's theorem applied to one coincidence family",
            BoundMethod::Panoui => "Panoui: non-2-covering Sperner coincidence families",
            BoundMethod::ImprovedEven => "even length: shadows of intersecting layers in coincidence families",
            BoundMethod::ImprovedOdd => "odd length: layer spread and 2-intersecting complements",
        }
    }
}

impl fmt::Display for BoundMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A bound on `m` for length `n`, with provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub n: u64,
    pub method: BoundMethod,
    /// The bound, present only where it is known to hold.
    pub value: Option<u64>,
    /// The right-hand side evaluated as written, whenever it is a
    /// nonnegative integer, even outside the stated range.
    pub formula_value: Option<u64>,
    pub conditions: &'static str,
}

impl BoundReport {
    pub fn applicable(&self) -> bool {
        self.value.is_some()
    }

    pub fn citation(&self) -> &'static str {
        self.method.citation()
    }
}

fn to_u64(v: i128) -> Option<u64> {
    u64::try_from(v).ok()
}

/// `C(n, ⌊n/2⌋) + 1`, valid for every `q`.
pub fn bound_stinson_wei(n: u64) -> BoundReport {
    let formula_value = (1..=MAX_N).contains(&n).then(|| binom(n, n / 2) + 1);
    BoundReport {
        n,
        method: BoundMethod::StinsonWei,
        value: formula_value,
        formula_value,
        conditions: "n >= 1; stated for q = 2, holds for every q since |X_i| = m - 1 and X_i is Sperner",
    }
}

/// Even `n`: `C(n, n/2 - 1) + 1`. Odd `n`: `C(n, (n-1)/2) - (n-1)/2`.
///
/// The odd formula gives 2 at `n = 3`, yet `{000, 011, 101, 110}` is a
/// 2-frameproof `(3, 4, 2)` code, so odd `n < 5` is reported inapplicable.
pub fn bound_panoui(n: u64) -> BoundReport {
    let in_range = (1..=MAX_N).contains(&n);
    let (formula_value, value, conditions) = if !in_range {
        (None, None, "1 <= n <= 64")
    } else if n.is_multiple_of(2) {
        let v = binom(n, n / 2 - 1) + 1;
        (Some(v), Some(v), "n even")
    } else {
        let v = to_u64(binom(n, (n - 1) / 2) as i128 - ((n - 1) / 2) as i128);
        let ok = n >= 5;
        (
            v,
            v.filter(|_| ok),
            "n odd; refuted at n = 3 by a verified (3,4,2) code, so only n >= 5 is reported (true threshold unknown)",
        )
    };
    BoundReport { n, method: BoundMethod::Panoui, value, formula_value, conditions }
}

/// Milner: a `k`-intersecting Sperner family on `[n]` has at most
/// `C(n, ⌊(n+k+1)/2⌋)` members (0 once that layer index exceeds `n`).
pub fn bound_milner(n: u64, k: u64) -> Result<u64> {
    if !(1..=MAX_N).contains(&n) {
        return Err(Error::Parameter("Milner bound needs 1 <= n <= 64"));
    }
    Ok(binom(n, (n + k).div_ceil(2)))
}

/// A Sperner family on `[n]` with a singleton has at most
/// `C(n-1, ⌊(n-1)/2⌋) + 1` members.
pub fn bound_singleton(n: u64) -> Result<u64> {
    if !(2..=MAX_N).contains(&n) {
        return Err(Error::Parameter("singleton bound needs 2 <= n <= 64"));
    }
    Ok(binom(n - 1, (n - 1) / 2) + 1)
}

/// Bound on a Sperner family on `[n]` whose smallest and largest members
/// have sizes `l <= n/2 <= u`.
///
/// Four cases, with `f = ⌊n/2⌋`, `c = ⌈n/2⌉`, `B = C(n, f)`:
/// `l = f, u = c` gives `B`; both ends pulled out gives the spread formula;
/// exactly one end pulled out gives `B` minus the arithmetic series of
/// shade (or shadow) gains. Values below zero clamp to 0.
pub fn bound_sperner_lu(n: u64, l: u64, u: u64) -> Result<u64> {
    if !(1..=MAX_N).contains(&n) || 2 * l > n || 2 * u < n || u > n {
        return Err(Error::Inapplicable("needs 0 <= l <= n/2 <= u <= n"));
    }
    let (f, c) = (n / 2, n.div_ceil(2));
    let base = binom(n, f) as i128;
    let (n_, l_, u_, f_, c_) = (n as i128, l as i128, u as i128, f as i128, c as i128);
    let v = match (l == f, u == c) {
        (true, true) => base,
        (false, false) => {
            if n.is_multiple_of(2) {
                base - (u_ - l_) * (n_ / 2) - (u_ - l_ - 1).pow(2) / 4
            } else {
                base - (u_ - l_ - 1) * ((n_ + 1) / 2) - (u_ - l_ - 2).pow(2) / 4
            }
        }
        (false, true) => base - (f_ - l_) * c_ - (f_ - l_) * (f_ - l_ - 1) / 2,
        (true, false) => base - (u_ - c_) * c_ - (u_ - c_) * (u_ - c_ - 1) / 2,
    };
    Ok(to_u64(v).unwrap_or(0))
}

/// Bound on a non-2-covering Sperner family with extremes `l <= u`.
///
/// Even `n >= 6`, `h = n/2`: `u >= h+1` gives `C(n, h-1) - h`; `l <= h-2`
/// gives `C(n, h-1) - h - 1`; `l = u = h` gives `C(n, h)/2`. The smallest
/// applicable value is returned. Odd `n >= 7` with `l >= (n+1)/2` gives
/// `C(n, (n+3)/2)`. `Ok(None)` when no case applies.
pub fn bound_non2cov_sperner(n: u64, l: u64, u: u64) -> Result<Option<u64>> {
    if l > u || u > n || n > MAX_N {
        return Err(Error::Parameter("needs l <= u <= n <= 64"));
    }
    if n.is_multiple_of(2) {
        if n < 6 {
            return Err(Error::Inapplicable("even branch needs n >= 6"));
        }
        let h = n / 2;
        let below = binom(n, h - 1);
        let mut best: Option<u64> = None;
        let mut offer = |v: u64| best = Some(best.map_or(v, |b| b.min(v)));
        if u > h {
            offer(below - h);
        }
        if l + 2 <= h {
            offer(below - h - 1);
        }
        if l == h && u == h {
            offer(binom(n, h) / 2);
        }
        Ok(best)
    } else {
        if n < 7 {
            return Err(Error::Inapplicable("odd branch needs n >= 7"));
        }
        Ok((2 * l > n).then(|| binom(n, (n + 3) / 2)))
    }
}

/// Even `n >= 8`: `C(n, n/2-1) - n/2 + 1`.
/// Odd `n >= 7`: `C(n, (n-1)/2) - (n²-9)/8 - ⌊(n-5)²/64⌋` for `n ≡ 1 (mod 4)`,
/// `C(n, (n-1)/2) - ((n+1)²-8)/8 - ⌊(n-3)²/64⌋` for `n ≡ 3 (mod 4)`.
pub fn bound_improved(n: u64) -> BoundReport {
    let in_range = (1..=MAX_N).contains(&n);
    let ni = n as i128;
    let (method, formula_value, ok, conditions) = if !in_range {
        (BoundMethod::ImprovedEven, None, false, "1 <= n <= 64")
    } else if n.is_multiple_of(2) {
        let v = to_u64(binom(n, n / 2 - 1) as i128 - ni / 2 + 1);
        (BoundMethod::ImprovedEven, v, n >= 8, "n even, n >= 8")
    } else {
        let base = binom(n, (n - 1) / 2) as i128;
        let v = if n % 4 == 1 {
            base - (ni * ni - 9) / 8 - (ni - 5).pow(2) / 64
        } else {
            base - ((ni + 1).pow(2) - 8) / 8 - (ni - 3).pow(2) / 64
        };
        // (n²-9)/8 is not integral at n = 1
        let v = if n == 1 { None } else { to_u64(v) };
        (BoundMethod::ImprovedOdd, v, n >= 7, "n odd, n >= 7")
    };
    BoundReport { n, method, value: formula_value.filter(|_| ok), formula_value, conditions }
}

/// The smallest applicable bound among the improved, Panoui and Stinson-Wei
/// reports, preferring that order on ties.
pub fn best_upper_bound(n: u64) -> BoundReport {
    let mut best = bound_stinson_wei(n);
    for r in [bound_panoui(n), bound_improved(n)] {
        if let (Some(v), Some(b)) = (r.value, best.value) {
            if v <= b {
                best = r;
            }
        }
    }
    best
}
