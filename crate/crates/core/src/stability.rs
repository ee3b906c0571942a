//! Stability decision procedures against line-bundle subsystems.
//!
//! Each `compare_sub_*` function orders the subsystem's reduced Hilbert
//! polynomial against the system's (`Less` = subsystem strictly smaller, the
//! stable direction) without constructing the polynomials: the parameter's
//! degree determines which coefficients can differ, and the comparison
//! reduces to slope and constant-part data. The polynomial route stays
//! available through [`reduced_hilbert_rank2`] / [`reduced_hilbert_sub`] and
//! the test suites check the two agree exactly.

use std::cmp::Ordering;

use serde::Serialize;

use crate::cohomology::h0_line;
use crate::error::{Error, Result};
use crate::rational::{rat, ratio, Rational};
use crate::segre::segre_feasible;
use crate::system::{slope_gap_a, AlphaLinear, CsType, SubsystemData};

#[allow(unused_imports)] // referenced by the module docs
use crate::system::{reduced_hilbert_rank2, reduced_hilbert_sub};

fn ordering_from_sign(sign: i32) -> Ordering {
    match sign {
        s if s > 0 => Ordering::Less,
        0 => Ordering::Equal,
        _ => Ordering::Greater,
    }
}

/// Constant-part gap for a linear parameter `am + b`, valid when the slope
/// gap vanishes: positive means the subsystem's constant part is smaller.
/// Equals `(c1^2 - 2 c2 - 2 c1L^2) - (4b - 6a)(w - k/2)` up to a positive
/// factor.
fn constant_gap_linear(cs: &CsType, alpha: &AlphaLinear, sub: &SubsystemData) -> Rational {
    let c1 = cs.c1();
    let lhs = rat(c1 * c1 - 2 * cs.c2 - 2 * sub.c1_l * sub.c1_l);
    let rhs = (rat(4) * &alpha.b - rat(6) * &alpha.a) * (rat(sub.w) - ratio(cs.k, 2));
    lhs - rhs
}

/// Orders `p^a_(L,W)` against `p^a_(E,V)` for a constant parameter `a >= 0`.
///
/// The slope gap `mu(E) - mu(L)` decides; on a tie, the sign of
/// `4a(k - 2w) - (4c2 - c1^2)` decides.
pub fn compare_sub_constant(cs: &CsType, a: &Rational, sub: &SubsystemData) -> Ordering {
    let c1 = cs.c1();
    let mu_gap = cs.slope() - rat(sub.c1_l);
    if !num_traits::Zero::is_zero(&mu_gap) {
        return ordering_from_sign(mu_gap.signum());
    }
    let d = rat(4) * a * rat(cs.k - 2 * sub.w) - rat(4 * cs.c2 - c1 * c1);
    ordering_from_sign(d.signum())
}

/// Orders the subsystem against the system for any parameter of degree >= 2.
///
/// Only the leading data matters: `w < k/2` gives `Less`, `w > k/2` gives
/// `Greater`, and on the tie `w = k/2` the slope gap decides, with constant
/// coefficients declared non-binding (full ties return `Equal`).
pub fn compare_sub_highdeg(cs: &CsType, sub: &SubsystemData) -> Ordering {
    match (2 * sub.w).cmp(&cs.k) {
        Ordering::Less => Ordering::Less,
        Ordering::Greater => Ordering::Greater,
        Ordering::Equal => {
            let mu_gap = cs.slope() - rat(sub.c1_l);
            ordering_from_sign(mu_gap.signum())
        }
    }
}

/// Orders the subsystem against the system for a linear parameter `am + b`
/// with `a > 0`: the slope gap decides, and on a tie the constant-part gap
/// `(c1^2 - 2c2 - 2 c1L^2) - (4b - 6a)(w - k/2)` decides.
pub fn compare_sub_linear(cs: &CsType, alpha: &AlphaLinear, sub: &SubsystemData) -> Ordering {
    let gap = slope_gap_a(cs, sub, &alpha.a);
    if !num_traits::Zero::is_zero(&gap) {
        return ordering_from_sign(gap.signum());
    }
    ordering_from_sign(constant_gap_linear(cs, alpha, sub).signum())
}

/// Outcome of classifying a system against its maximal subsystem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Classification {
    AlphaUnstable,
    AlphaStable,
    StrictlySemistable,
}

/// Classifies `(E, V)` by its maximal subsystem `(O(r-s), W_max)`.
///
/// The slope gap against the maximal subsystem controls every other
/// subsystem: negative means unstable, positive stable, and on a tie the
/// constant-part comparison decides (equality is strict semistability).
///
/// Requires `maxsub.c1_l = r - s`, `maxsub.w` within the section capacity,
/// and `(r, t, c2, s)` feasible.
pub fn classify_with_maximal(
    cs: &CsType,
    alpha: &AlphaLinear,
    maxsub: &SubsystemData,
    s: i64,
) -> Result<Classification> {
    if maxsub.c1_l != cs.r - s {
        return Err(Error::Precondition(format!(
            "maximal subbundle degree {} inconsistent with s = {} (expected {})",
            maxsub.c1_l,
            s,
            cs.r - s
        )));
    }
    if maxsub.w > cs.k.min(h0_line(cs.r - s)) {
        return Err(Error::Precondition(format!(
            "w = {} exceeds the section capacity of O({})",
            maxsub.w,
            cs.r - s
        )));
    }
    if !segre_feasible(cs.r, cs.t, cs.c2, s) {
        return Err(Error::Precondition(format!(
            "(r={}, t={}, c2={}, s={s}) is not feasible",
            cs.r, cs.t, cs.c2
        )));
    }
    let gap = slope_gap_a(cs, maxsub, &alpha.a);
    Ok(match gap.signum() {
        sign if sign < 0 => Classification::AlphaUnstable,
        sign if sign > 0 => Classification::AlphaStable,
        _ => match constant_gap_linear(cs, alpha, maxsub).signum() {
            sign if sign > 0 => Classification::AlphaStable,
            0 => Classification::StrictlySemistable,
            _ => Classification::AlphaUnstable,
        },
    })
}

/// For `c1` in `{0, -1}` and `k >= 2`, the only semistable datum is the
/// trivial bundle with its full section space: `(r, t, c2, k) = (0, 0, 0, 2)`.
pub fn trivial_semistable(cs: &CsType) -> Result<bool> {
    let c1 = cs.c1();
    if !(c1 == 0 || c1 == -1) {
        return Err(Error::Precondition(format!(
            "trivial_semistable applies to c1 in {{0, -1}}, got c1 = {c1}"
        )));
    }
    if cs.k < 2 {
        return Err(Error::Precondition(format!(
            "trivial_semistable assumes k >= 2, got k = {}",
            cs.k
        )));
    }
    Ok(cs.r == 0 && cs.t == 0 && cs.c2 == 0 && cs.k == 2)
}
