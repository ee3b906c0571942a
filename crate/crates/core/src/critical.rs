//! Critical values of the stability parameter and the chamber decomposition.
//!
//! A linear parameter `alpha = am + b > 0` is a wall (critical value) exactly
//! when some semistable system achieves reduced-Hilbert-polynomial equality
//! with its maximal subsystem `(O(r-s), W_max)` with `dim W_max != k/2`.
//! Equality at `(a, b)` pins the witness class `(s, w)` through two equations:
//! the slope gap `s - t/2 + a(k/2 - w) = 0` (for `k = 2`) and the constant
//! part `c1^2 - 2c2 - 2(r-s)^2 = (4b - 6a)(w - k/2)`.
//!
//! Two independent routes compute the walls:
//!  * [`equality_locus`] enumerates witness classes by brute force, solves the
//!    two equations, and keeps the classes that are actually realizable by a
//!    bundle with sections (the oracle);
//!  * [`critical_values_closed_form`] evaluates per-family closed formulas in
//!    `(r, t, c2, a)`.
//!
//! The acceptance suite checks the two agree exactly over the whole grid.

use serde::Serialize;

use crate::cohomology::h0_line;
use crate::error::{Error, Result};
use crate::rational::{rat, ratio, Rational};
use crate::segre::{cycle_length, segre_feasible, segre_range};
use crate::system::{AlphaLinear, CsType};

/// A witness class: the Segre parameter `s` and section count `w = dim W_max`
/// of a maximal subsystem realizing Hilbert-polynomial equality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Witness {
    pub s: i64,
    pub w: i64,
}

/// A wall `alpha = am + b` together with every witness class realizing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalValue {
    pub a: Rational,
    pub b: Rational,
    pub witnesses: Vec<Witness>,
}

/// Accumulates walls keyed by `(a, b)`, merging coincident parameters.
#[derive(Default)]
struct WallMap {
    walls: Vec<CriticalValue>,
}

impl WallMap {
    fn push(&mut self, a: Rational, b: Rational, s: i64, w: i64) {
        let witness = Witness { s, w };
        if let Some(cv) = self.walls.iter_mut().find(|cv| cv.a == a && cv.b == b) {
            if !cv.witnesses.contains(&witness) {
                cv.witnesses.push(witness);
            }
        } else {
            self.walls.push(CriticalValue {
                a,
                b,
                witnesses: vec![witness],
            });
        }
    }

    fn into_sorted(mut self) -> Vec<CriticalValue> {
        for cv in &mut self.walls {
            cv.witnesses.sort();
        }
        self.walls
            .sort_by(|x, y| (&x.a, &x.b).cmp(&(&y.a, &y.b)));
        self.walls
    }
}

/// Largest possible `h^0(O(d) (x) I_Z)` over reduced zero cycles `Z` of length
/// `ell`: collinear configurations maximize the count. `h0(O(d)) - ell` when
/// the points impose independent conditions (`ell <= d + 1`), else the forms
/// through the whole line, `h0(O(d-1))`.
pub(crate) fn h0_max_ideal(d: i64, ell: i64) -> i64 {
    if d < 0 {
        0
    } else if ell <= d + 1 {
        h0_line(d) - ell
    } else {
        h0_line(d - 1)
    }
}

/// Solves the constant-part equality for `b` given a witness class.
fn solve_b(cs: &CsType, s: i64, w: i64, a: &Rational) -> Rational {
    let c1 = cs.c1();
    let lhs = rat(c1 * c1 - 2 * cs.c2 - 2 * (cs.r - s) * (cs.r - s));
    // (4b - 6a) (w - k/2) = lhs
    let four_b_minus_6a = lhs / (rat(w) - ratio(cs.k, 2));
    (four_b_minus_6a + rat(6) * a) / rat(4)
}

/// Brute-force equality locus: every wall `(a, b)` realized by some witness
/// class, sorted by `(a, b)`.
///
/// For each feasible `s` and each admissible `w != k/2` the slope-gap
/// equation is solved for `a`; classes with `a <= 0` or without the section
/// capacity to carry `V` are discarded:
///  * `s <= 0` (the bundle is not stable) forces `w = 0`, and the quotient
///    must carry all `k` sections, maximized by collinear cycles;
///  * `s >= 1` requires `w <= h0(O(r-s))` on the subbundle side and
///    `k - w` quotient sections at general position (the cycle must avoid
///    curves of degree `2s - 1 - t`, so general position is the right count).
pub fn equality_locus(cs: &CsType) -> Vec<CriticalValue> {
    let mut walls = WallMap::default();
    if cs.r < 0 {
        return walls.into_sorted();
    }
    for s in segre_range(cs.r) {
        if !segre_feasible(cs.r, cs.t, cs.c2, s) {
            continue;
        }
        let ell = match cycle_length(cs.r, cs.t, cs.c2, s) {
            Ok(ell) => ell,
            Err(_) => continue,
        };
        let quotient_degree = cs.r + s - cs.t;
        for w in 0..=cs.k {
            if 2 * w == cs.k {
                continue;
            }
            // slope gap: s - t/2 + a (k/2 - w) = 0
            let a = ratio(cs.t - 2 * s, cs.k - 2 * w);
            if !a.is_positive() {
                continue;
            }
            if s <= 0 {
                if w != 0 {
                    continue;
                }
                if h0_max_ideal(quotient_degree, ell) < cs.k {
                    continue;
                }
            } else {
                if w > h0_line(cs.r - s) {
                    continue;
                }
                let general_capacity = (h0_line(quotient_degree) - ell).max(0);
                if cs.k - w > general_capacity {
                    continue;
                }
            }
            let b = solve_b(cs, s, w, &a);
            walls.push(a, b, s, w);
        }
    }
    walls.into_sorted()
}

/// Wall value of `b` for the stable-bundle family (`s >= 1`, `w = 2`) at a
/// given `a = s - t/2`.
pub(crate) fn b_stable_family(r: i64, t: i64, c2: i64, a: &Rational) -> Rational {
    if t == 0 {
        // r^2/2 - c2/2 + a r - a^2/2 + 3a/2
        ratio(r * r - c2, 2) + a * rat(r) - a * a / rat(2) + a * ratio(3, 2)
    } else {
        // (r^2 - a^2 + 2ra + 2a - c2 - r)/2 + 1/8
        (rat(r * r - c2 - r) - a * a + rat(2 * r) * a + rat(2) * a) / rat(2) + ratio(1, 8)
    }
}

/// Wall value of `b` for the unstable-bundle family (`s <= 0`, `w = 0`) at a
/// given `a = t/2 - s`.
pub(crate) fn b_unstable_family(r: i64, t: i64, c2: i64, a: &Rational) -> Rational {
    if t == 0 {
        // c2/2 - r^2/2 + r a + a^2/2 + 3a/2
        ratio(c2 - r * r, 2) + rat(r) * a + a * a / rat(2) + a * ratio(3, 2)
    } else {
        // (a^2 - r^2 + 2ra + 2a + c2 + r)/2 - 1/8
        (a * a + rat(c2 + r - r * r) + rat(2 * r) * a + rat(2) * a) / rat(2) - ratio(1, 8)
    }
}

/// The c2 windows in which walls are classified, listed low to high as
/// (start, optional end). Below the lowest start no classification applies.
pub(crate) fn c2_windows(r: i64, t: i64) -> Vec<(i64, Option<i64>)> {
    let mut out = Vec::new();
    if t == 0 {
        for s0 in (2 - r)..0 {
            out.push((r * r - s0 * s0, Some(r * r - (s0 + 1) * (s0 + 1))));
        }
        out.push((r * r, Some(r * r + 2)));
        out.push((r * r + 2, None));
    } else {
        let threshold = |s: i64| r * r - s * s - (r - s);
        for s0 in (3 - r)..0 {
            out.push((threshold(s0), Some(threshold(s0 + 1))));
        }
        out.push((r * r - r, Some(r * r + 1)));
        out.push((r * r + 1, None));
    }
    out
}

/// Smallest `c2` covered by the closed-form classification for `(r, t)`.
pub fn lowest_window_start(r: i64, t: i64) -> i64 {
    c2_windows(r, t)
        .iter()
        .map(|w| w.0)
        .min()
        .expect("window list is never empty")
}

/// Closed-form critical values for `k = 2`, keyed only on `(r, t, c2)`.
///
/// Families:
///  * stable family: `a = s - t/2` for `1 <= s <= r - 1` with `(r, t, c2, s)`
///    feasible; witness `(s, 2)`;
///  * unstable family: `a = t/2 - s` for `2 - r + t <= s <= t - 1` with
///    `(r, t, c2, s)` feasible; witness `(s, 0)`;
///  * unstable-family boundary `s = 1 - r + t` (quotient twist of degree 1):
///    only when the cycle has length 0 or 1, i.e. `c2` in
///    `{2r - 1 - t, 2r - t}`; witness `(s, 0)`.
///
/// Fails with [`Error::Range`] when `c2` lies below every window.
pub fn critical_values_closed_form(r: i64, t: i64, c2: i64) -> Result<Vec<CriticalValue>> {
    if r < 1 {
        return Err(Error::Precondition(format!(
            "closed form requires r >= 1, got r = {r}"
        )));
    }
    if !(t == 0 || t == 1) {
        return Err(Error::Precondition(format!("t must be 0 or 1, got {t}")));
    }
    if c2 < lowest_window_start(r, t) {
        return Err(Error::Range(format!(
            "c2 = {c2} is below every window for (r = {r}, t = {t}); smallest is {}",
            lowest_window_start(r, t)
        )));
    }
    let mut walls = WallMap::default();
    for s in 1..r {
        if segre_feasible(r, t, c2, s) {
            let a = rat(s) - ratio(t, 2);
            let b = b_stable_family(r, t, c2, &a);
            walls.push(a, b, s, 2);
        }
    }
    for s in (2 - r + t)..t {
        if segre_feasible(r, t, c2, s) {
            let a = ratio(t, 2) - rat(s);
            let b = b_unstable_family(r, t, c2, &a);
            walls.push(a, b, s, 0);
        }
    }
    let s = 1 - r + t;
    if r >= 2 && s <= 0 {
        let ell = c2 - (2 * r - 1 - t);
        if ell == 0 || ell == 1 {
            let a = ratio(t, 2) - rat(s);
            if a.is_positive() {
                let b = b_unstable_family(r, t, c2, &a);
                walls.push(a, b, s, 0);
            }
        }
    }
    Ok(walls.into_sorted())
}

/// Result of a wall membership test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalQuery {
    pub critical: bool,
    pub witnesses: Vec<Witness>,
}

/// Is `alpha` a wall for this numerical type? Membership in the equality
/// locus, with the realizing witness classes.
pub fn is_critical(cs: &CsType, alpha: &AlphaLinear) -> CriticalQuery {
    let witnesses = equality_locus(cs)
        .into_iter()
        .find(|cv| cv.a == alpha.a && cv.b == alpha.b)
        .map(|cv| cv.witnesses)
        .unwrap_or_default();
    CriticalQuery {
        critical: !witnesses.is_empty(),
        witnesses,
    }
}

/// For a regular `alpha`, the nearest walls sharing its slope coefficient:
/// the largest critical `b` below and the smallest above (`None` = unbounded
/// on that side). Every parameter strictly between the bounds yields the same
/// stability verdict for every subsystem candidate.
///
/// Fails with [`Error::CriticalInput`] when `alpha` itself is a wall.
pub fn regular_window(
    cs: &CsType,
    alpha: &AlphaLinear,
) -> Result<(Option<Rational>, Option<Rational>)> {
    let locus = equality_locus(cs);
    if locus
        .iter()
        .any(|cv| cv.a == alpha.a && cv.b == alpha.b)
    {
        return Err(Error::CriticalInput(format!(
            "alpha = ({})m + ({}) is a critical value",
            alpha.a, alpha.b
        )));
    }
    let mut lower: Option<Rational> = None;
    let mut upper: Option<Rational> = None;
    for cv in locus.into_iter().filter(|cv| cv.a == alpha.a) {
        if cv.b < alpha.b {
            if lower.as_ref().is_none_or(|lo| cv.b > *lo) {
                lower = Some(cv.b);
            }
        } else if upper.as_ref().is_none_or(|hi| cv.b < *hi) {
            upper = Some(cv.b);
        }
    }
    Ok((lower, upper))
}

/// A chamber representative: an interior parameter value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChamberRep {
    pub rep: AlphaLinear,
}

/// Walls sorted under the asymptotic order of `am + b`, with a representative
/// interior parameter per chamber.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChamberDecomposition {
    pub walls: Vec<CriticalValue>,
    pub chambers: Vec<ChamberRep>,
}

/// Chamber decomposition from the equality locus. Representatives are
/// midpoints in `b` (and one unit beyond the extremes) for each occurring
/// slope `a`, plus one representative for each `a` strictly between
/// consecutive occurring slopes.
pub fn chambers(cs: &CsType) -> ChamberDecomposition {
    let walls = equality_locus(cs);
    let mut chambers = Vec::new();
    // group indices by equal `a`, in sorted order
    let mut groups: Vec<(Rational, Vec<Rational>)> = Vec::new();
    for cv in &walls {
        match groups.last_mut() {
            Some((a, bs)) if *a == cv.a => bs.push(cv.b.clone()),
            _ => groups.push((cv.a.clone(), vec![cv.b.clone()])),
        }
    }
    for (i, (a, bs)) in groups.iter().enumerate() {
        chambers.push(ChamberRep {
            rep: AlphaLinear::new(a.clone(), bs.first().unwrap() - rat(1)),
        });
        for pair in bs.windows(2) {
            chambers.push(ChamberRep {
                rep: AlphaLinear::new(a.clone(), (&pair[0] + &pair[1]) / rat(2)),
            });
        }
        chambers.push(ChamberRep {
            rep: AlphaLinear::new(a.clone(), bs.last().unwrap() + rat(1)),
        });
        if let Some((next_a, _)) = groups.get(i + 1) {
            chambers.push(ChamberRep {
                rep: AlphaLinear::new((a + next_a) / rat(2), rat(0)),
            });
        }
    }
    ChamberDecomposition { walls, chambers }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stability::compare_sub_linear;
    use crate::system::SubsystemData;
    use std::cmp::Ordering;

    fn cs(r: i64, t: i64, c2: i64) -> CsType {
        CsType::new(r, t, c2, 2).unwrap()
    }

    fn wall(a: Rational, b: Rational, witnesses: &[(i64, i64)]) -> CriticalValue {
        CriticalValue {
            a,
            b,
            witnesses: witnesses.iter().map(|&(s, w)| Witness { s, w }).collect(),
        }
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            equality_locus(&cs(3, 0, 12)),
            vec![
                wall(rat(1), ratio(5, 2), &[(1, 2)]),
                wall(rat(1), ratio(13, 2), &[(-1, 0)]),
            ]
        );
        assert_eq!(equality_locus(&cs(0, 0, 0)), vec![]);
        assert_eq!(
            equality_locus(&cs(4, 0, 16)),
            vec![
                wall(rat(1), rat(6), &[(-1, 0)]),
                wall(rat(2), rat(13), &[(-2, 0)]),
            ]
        );
    }

    #[test]
    fn oracle_odd_parity() {
        assert_eq!(
            equality_locus(&cs(3, 1, 11)),
            vec![
                wall(ratio(1, 2), ratio(-1, 2), &[(1, 2)]),
                wall(ratio(1, 2), ratio(9, 2), &[(0, 0)]),
                wall(ratio(3, 2), ratio(5, 2), &[(2, 2)]),
            ]
        );
        assert_eq!(
            equality_locus(&cs(2, 1, 2)),
            vec![wall(ratio(1, 2), ratio(3, 2), &[(0, 0)])]
        );
    }

    #[test]
    fn closed_form_examples() {
        let walls = critical_values_closed_form(3, 0, 12).unwrap();
        assert_eq!(
            walls.iter().map(|w| (&w.a, &w.b)).collect::<Vec<_>>(),
            vec![(&rat(1), &ratio(5, 2)), (&rat(1), &ratio(13, 2))]
        );
        let walls = critical_values_closed_form(4, 0, 16).unwrap();
        assert_eq!(
            walls.iter().map(|w| (&w.a, &w.b)).collect::<Vec<_>>(),
            vec![(&rat(1), &rat(6)), (&rat(2), &rat(13))]
        );
        let walls = critical_values_closed_form(3, 1, 11).unwrap();
        assert!(walls
            .iter()
            .any(|w| w.a == ratio(1, 2) && w.b == ratio(-1, 2)));
    }

    #[test]
    fn closed_form_range_error() {
        assert!(matches!(
            critical_values_closed_form(3, 0, 4),
            Err(Error::Range(_))
        ));
        assert!(matches!(
            critical_values_closed_form(0, 0, 5),
            Err(Error::Precondition(_))
        ));
        // r = 1 covers everything from c2 = r^2 = 1 up, all wall-free
        assert_eq!(critical_values_closed_form(1, 0, 3).unwrap(), vec![]);
        assert!(critical_values_closed_form(1, 0, 0).is_err());
    }

    #[test]
    fn is_critical_examples() {
        let c = cs(3, 0, 12);
        let hit = is_critical(&c, &AlphaLinear::new(rat(1), ratio(5, 2)));
        assert!(hit.critical);
        assert_eq!(hit.witnesses, vec![Witness { s: 1, w: 2 }]);
        assert!(!is_critical(&c, &AlphaLinear::from_ints(1, 3)).critical);
        assert!(!is_critical(&c, &AlphaLinear::from_ints(2, 5)).critical);
    }

    #[test]
    fn regular_window_examples() {
        let c = cs(3, 0, 12);
        assert_eq!(
            regular_window(&c, &AlphaLinear::from_ints(1, 4)).unwrap(),
            (Some(ratio(5, 2)), Some(ratio(13, 2)))
        );
        assert_eq!(
            regular_window(&c, &AlphaLinear::from_ints(1, 7)).unwrap(),
            (Some(ratio(13, 2)), None)
        );
        assert_eq!(
            regular_window(&c, &AlphaLinear::from_ints(3, 0)).unwrap(),
            (None, None)
        );
        assert!(matches!(
            regular_window(&c, &AlphaLinear::new(rat(1), ratio(5, 2))),
            Err(Error::CriticalInput(_))
        ));
    }

    #[test]
    fn window_movement_invariance() {
        // within a window, re-querying at a shifted b keeps regularity
        let c = cs(3, 0, 12);
        for b in [rat(3), ratio(7, 2), rat(4), rat(5), rat(6)] {
            let alpha = AlphaLinear::new(rat(1), b);
            assert!(!is_critical(&c, &alpha).critical);
            assert_eq!(
                regular_window(&c, &alpha).unwrap(),
                (Some(ratio(5, 2)), Some(ratio(13, 2)))
            );
        }
    }

    #[test]
    fn chambers_examples() {
        let decomposition = chambers(&cs(3, 0, 12));
        assert_eq!(decomposition.walls.len(), 2);
        // three chambers along a = 1, no other slope occurs
        assert_eq!(decomposition.chambers.len(), 3);
        assert!(decomposition.chambers.iter().all(|c| c.rep.a == rat(1)));

        assert!(chambers(&cs(1, 0, 3)).walls.is_empty());

        let decomposition = chambers(&cs(4, 0, 16));
        assert_eq!(
            decomposition
                .walls
                .iter()
                .map(|w| (&w.a, &w.b))
                .collect::<Vec<_>>(),
            vec![(&rat(1), &rat(6)), (&rat(2), &rat(13))]
        );
        // two chambers per slope plus one between the slopes
        assert_eq!(decomposition.chambers.len(), 5);
    }

    #[test]
    fn emitted_walls_satisfy_both_equalities() {
        // re-substitution: each witness yields exact Hilbert-polynomial
        // equality with the maximal subsystem at the wall
        for (r, t, c2) in [(3i64, 0i64, 12i64), (4, 0, 16), (3, 1, 11), (2, 1, 3), (5, 0, 30)] {
            let c = cs(r, t, c2);
            for cv in equality_locus(&c) {
                let alpha = AlphaLinear::new(cv.a.clone(), cv.b.clone());
                for witness in &cv.witnesses {
                    let maxsub = SubsystemData::new(r - witness.s, witness.w);
                    assert_eq!(
                        compare_sub_linear(&c, &alpha, &maxsub),
                        Ordering::Equal,
                        "wall ({}, {}) witness {:?}",
                        cv.a,
                        cv.b,
                        witness
                    );
                }
            }
        }
    }

    #[test]
    fn closed_form_matches_oracle_spot_grid() {
        for r in 1..=5 {
            for t in 0..=1 {
                for c2 in lowest_window_start(r, t)..=40 {
                    let closed = critical_values_closed_form(r, t, c2).unwrap();
                    let oracle = equality_locus(&cs(r, t, c2));
                    assert_eq!(closed, oracle, "(r={r}, t={t}, c2={c2})");
                }
            }
        }
    }
}
