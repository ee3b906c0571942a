//! Non-emptiness verdicts for the moduli of stable systems of type
//! `(2, 2r - t, c2, 2)`.
//!
//! [`nonempty_sufficient`] packages the sufficient conditions (cases 1-4);
//! no clause firing is NOT a proof of emptiness. Inside the window where the
//! bundle class is pinned to a single negative Segre parameter,
//! [`nonempty_iff`] is a complete answer with an exact threshold in `b`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{rat, ratio, Rational};

/// Which sufficient clause fired, with the witness parameter for the search
/// clause.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NonemptyCase {
    pub case: u8,
    /// The negative Segre parameter found by clause 3's search, if any.
    pub s0: Option<i64>,
}

/// First satisfied sufficient condition for `M_alpha(2, 2r-t, c2, 2)` to be
/// nonempty, or `None` when no clause fires. Requires `a > 0` and
/// `c1 = 2r - t > 0`.
///
/// Clauses, tried in order:
///  1. `c2 >= r^2 - t + 2`;
///  2. `r^2 - rt <= c2 < r^2 - t + 2`, `r >= 2 + t`, `a > t/2`;
///  3. some integer `s0` with `t + 2 - r <= s0 <= -1`, `a > t/2 - s0` and
///     `c2 >= r^2 - s0^2 + (s0 - r) t` (searched from -1 downward);
///  4. `c2 in {2r - t, 2r - t - 1}` and `a > r - 1 - t/2`.
pub fn nonempty_sufficient(r: i64, t: i64, c2: i64, a: &Rational) -> Result<Option<NonemptyCase>> {
    let c1 = 2 * r - t;
    if c1 <= 0 {
        return Err(Error::Precondition(format!(
            "requires c1 = 2r - t > 0, got c1 = {c1}"
        )));
    }
    if !a.is_positive() {
        return Err(Error::Precondition(format!("requires a > 0, got a = {a}")));
    }
    let half_t = ratio(t, 2);
    if c2 >= r * r - t + 2 {
        return Ok(Some(NonemptyCase { case: 1, s0: None }));
    }
    if r * r - r * t <= c2 && c2 < r * r - t + 2 && r >= 2 + t && *a > half_t {
        return Ok(Some(NonemptyCase { case: 2, s0: None }));
    }
    let mut s0 = -1;
    while s0 >= t + 2 - r {
        if *a > &half_t - rat(s0) && c2 >= r * r - s0 * s0 + (s0 - r) * t {
            return Ok(Some(NonemptyCase { case: 3, s0: Some(s0) }));
        }
        s0 -= 1;
    }
    if (c2 == 2 * r - t || c2 == 2 * r - t - 1) && *a > rat(r - 1) - half_t {
        return Ok(Some(NonemptyCase { case: 4, s0: None }));
    }
    Ok(None)
}

/// The exact `b` threshold of the complete criterion:
/// `B = c2/2 - r^2/2 + rt - r s0 + s0^2/2 - t^2/4 - (3/2) s0 + (3/4) t`.
pub fn proposition_bound(r: i64, t: i64, c2: i64, s0: i64) -> Rational {
    ratio(c2, 2) - ratio(r * r, 2) + rat(r * t) - rat(r * s0) + ratio(s0 * s0, 2)
        - ratio(t * t, 4)
        - ratio(3 * s0, 2)
        + ratio(3 * t, 4)
}

fn check_window(r: i64, t: i64, c2: i64, s0: i64) -> Result<()> {
    if !(t + 2 - r <= s0 && s0 < 0) {
        return Err(Error::Precondition(format!(
            "s0 = {s0} outside [{}, -1]",
            t + 2 - r
        )));
    }
    let lo = r * r - s0 * s0 + (s0 - r) * t;
    let hi = r * r - (s0 + 1) * (s0 + 1) + (s0 - r + 1) * t;
    if !(lo <= c2 && c2 < hi) {
        return Err(Error::Precondition(format!(
            "c2 = {c2} outside the window [{lo}, {hi}) for s0 = {s0}"
        )));
    }
    Ok(())
}

/// Complete non-emptiness criterion inside the window
/// `r^2 - s0^2 + (s0 - r) t <= c2 < r^2 - (s0+1)^2 + (s0 - r + 1) t` with
/// `t + 2 - r <= s0 < 0`:
/// nonempty iff `a > -s0 + t/2`, or `a = -s0 + t/2` and `b > B`.
/// With `semistable = true` the final inequality relaxes to `b >= B`.
pub fn nonempty_iff(
    r: i64,
    t: i64,
    c2: i64,
    s0: i64,
    a: &Rational,
    b: &Rational,
    semistable: bool,
) -> Result<bool> {
    check_window(r, t, c2, s0)?;
    let threshold_a = rat(-s0) + ratio(t, 2);
    if *a > threshold_a {
        return Ok(true);
    }
    if *a < threshold_a {
        return Ok(false);
    }
    let bound = proposition_bound(r, t, c2, s0);
    Ok(if semistable { *b >= bound } else { *b > bound })
}

/// For small nonpositive `c1` (`2r - t` in `{0, -1}`) and `k >= 2`, the only
/// semistable datum is the trivial one: `(t, r, c2, k) = (0, 0, 0, 2)`.
pub fn trivial_only(r: i64, t: i64, c2: i64, k: i64) -> Result<bool> {
    let c1 = 2 * r - t;
    if !(c1 == 0 || c1 == -1) {
        return Err(Error::Precondition(format!(
            "requires c1 in {{0, -1}}, got c1 = {c1}"
        )));
    }
    if k < 2 {
        return Err(Error::Precondition(format!("requires k >= 2, got k = {k}")));
    }
    Ok(t == 0 && r == 0 && c2 == 0 && k == 2)
}
