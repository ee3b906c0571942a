//! Feasibility of Segre invariants and zero-cycle length bookkeeping.
//!
//! A rank-2 bundle with `c1 = 2r - t` and Segre invariant `2s - t` sits in an
//! extension `0 -> O(r-s) -> E -> O(r+s-t) (x) I_Z -> 0` with maximal
//! subbundle `O(r-s)`. Feasibility of `(r, t, c2, s)` is the existence of such
//! a bundle; the cycle length `l(Z)` follows from the Whitney formula
//! `c2 = c1(L) c1(Q) + l(Z)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::system::CsType;

/// Is there a rank-2 bundle with invariants `(2, 2r - t, c2)` and Segre
/// invariant `2s - t`?
///
/// For `s >= 1` (stable side) the bound is `c2 >= s^2 + s + r^2 - t(r + s)`;
/// for `s <= 0` it is `c2 >= r^2 - s^2 - t(r - s)`.
pub fn segre_feasible(r: i64, t: i64, c2: i64, s: i64) -> bool {
    if s >= 1 {
        c2 >= s * s + s + r * r - t * (r + s)
    } else {
        c2 >= r * r - s * s - t * (r - s)
    }
}

/// Length of the zero cycle in the extension:
/// `l(Z) = c2 + s^2 - r^2 + t(r - s) = c2 - (r - s)(r + s - t)`.
///
/// Fails with [`Error::Feasibility`] when the value would be negative (no
/// extension exists).
pub fn cycle_length(r: i64, t: i64, c2: i64, s: i64) -> Result<i64> {
    let ell = c2 + s * s - r * r + t * (r - s);
    if ell < 0 {
        return Err(Error::Feasibility(format!(
            "cycle length {ell} < 0 for (r={r}, t={t}, c2={c2}, s={s})"
        )));
    }
    Ok(ell)
}

/// The candidate range of `s` for a semistable system: `-r < s <= r`, with
/// `s = 0` admitted at `r = 0` (the trivial bundle realizes it).
pub(crate) fn segre_range(r: i64) -> std::ops::RangeInclusive<i64> {
    if r == 0 {
        0..=0
    } else {
        (-r + 1)..=r
    }
}

/// All `s` in the candidate range with [`segre_feasible`] true, sorted.
pub fn feasible_segre_values(r: i64, t: i64, c2: i64) -> Vec<i64> {
    if r < 0 {
        return Vec::new();
    }
    segre_range(r)
        .filter(|&s| segre_feasible(r, t, c2, s))
        .collect()
}

/// A violated necessary condition for alpha-semistability.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Violation {
    /// `r < 0`.
    NegativeR,
    /// `s` outside `(-r, r]`.
    SOutOfRange,
    /// `c2 < 0`.
    NegativeC2,
}

/// Screens the numerical data against the necessary conditions for
/// alpha-semistability: `r >= 0`, `-r < s <= r`, `c2 >= 0`. Empty result
/// means the screen passes. Requires `k >= 2`.
pub fn necessary_conditions(cs: &CsType, s: i64) -> Result<Vec<Violation>> {
    if cs.k < 2 {
        return Err(Error::Precondition(format!(
            "necessary conditions assume k >= 2, got k = {}",
            cs.k
        )));
    }
    let mut out = Vec::new();
    if cs.r < 0 {
        out.push(Violation::NegativeR);
    }
    let in_range = cs.r >= 0 && segre_range(cs.r).contains(&s);
    if !in_range {
        out.push(Violation::SOutOfRange);
    }
    if cs.c2 < 0 {
        out.push(Violation::NegativeC2);
    }
    Ok(out)
}
