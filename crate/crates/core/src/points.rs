//! Reduced zero cycles in the plane as exact rational point configurations.
//!
//! Section counts of twisted ideal sheaves reduce to ranks of monomial
//! evaluation matrices: for a cycle `Z` of distinct points and a degree `d`,
//! `h^0(I_Z(d)) = h^0(O(d)) - rank M` where `M` evaluates the degree-`d`
//! monomials at the points. All ranks are exact (fraction-free elimination on
//! denominator-cleared integer rows); there is no tolerance anywhere.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::cohomology::{h0_line, CANONICAL_DEGREE};
use crate::error::{Error, Result};
use crate::linalg::{eliminate, rank};
use crate::rational::Rational;
use crate::segre::{cycle_length, segre_feasible};

/// Bounds for randomly drawn coordinates (numerator and denominator).
const COORD_NUM_BOUND: i64 = 30;
const COORD_DEN_BOUND: i64 = 8;
/// Resampling budget for the randomized generators.
const MAX_ATTEMPTS: usize = 64;

/// A finite set of distinct points of the plane with exact rational
/// homogeneous coordinates, each triple normalized so its first nonzero
/// coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfig {
    points: Vec<[Rational; 3]>,
}

fn normalize(triple: [Rational; 3]) -> Result<[Rational; 3]> {
    let Some(pivot) = triple.iter().find(|c| !c.is_zero()).cloned() else {
        return Err(Error::Precondition(
            "(0, 0, 0) is not a projective point".into(),
        ));
    };
    Ok(triple.map(|c| c / &pivot))
}

impl PointConfig {
    /// Normalizes and validates: no zero triple, points pairwise distinct.
    pub fn new(points: Vec<[Rational; 3]>) -> Result<Self> {
        let mut normalized = Vec::with_capacity(points.len());
        for triple in points {
            let p = normalize(triple)?;
            if normalized.contains(&p) {
                return Err(Error::Precondition(format!(
                    "duplicate point ({}, {}, {})",
                    p[0], p[1], p[2]
                )));
            }
            normalized.push(p);
        }
        Ok(PointConfig { points: normalized })
    }

    pub fn empty() -> Self {
        PointConfig { points: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[[Rational; 3]] {
        &self.points
    }

    /// The configuration with point `i` removed.
    pub fn without(&self, i: usize) -> PointConfig {
        let mut points = self.points.clone();
        points.remove(i);
        PointConfig { points }
    }
}

impl Serialize for PointConfig {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.points.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PointConfig {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let points = Vec::<[Rational; 3]>::deserialize(deserializer)?;
        PointConfig::new(points).map_err(de::Error::custom)
    }
}

/// Exponent triples `(i, j, k)` with `i + j + k = d`, in a fixed order.
fn monomial_exponents(d: i64) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for i in (0..=d).rev() {
        for j in (0..=(d - i)).rev() {
            out.push((i as u32, j as u32, (d - i - j) as u32));
        }
    }
    out
}

fn pow(x: &Rational, e: u32) -> Rational {
    let mut acc = Rational::from(1);
    for _ in 0..e {
        acc = acc * x;
    }
    acc
}

/// The evaluation matrix of degree-`d` monomials at the points, with each
/// row scaled to integers (row scaling preserves rank).
fn evaluation_rows(z: &PointConfig, d: i64) -> Vec<Vec<BigInt>> {
    let exponents = monomial_exponents(d);
    z.points
        .iter()
        .map(|p| {
            let row: Vec<Rational> = exponents
                .iter()
                .map(|&(i, j, k)| pow(&p[0], i) * pow(&p[1], j) * pow(&p[2], k))
                .collect();
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.into_iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect()
        })
        .collect()
}

/// `h^0(P^2, O(d) (x) I_Z)`: the corank of the evaluation matrix. Zero for
/// `d < 0`.
pub fn h0_ideal(z: &PointConfig, d: i64) -> i64 {
    if d < 0 {
        return 0;
    }
    if z.is_empty() {
        return h0_line(d);
    }
    h0_line(d) - rank(&evaluation_rows(z, d)) as i64
}

/// Is `Z` contained in no curve of degree `d`? Vacuously true for `d < 0`.
pub fn lies_on_no_curve(z: &PointConfig, d: i64) -> bool {
    h0_ideal(z, d) == 0
}

/// The Cayley-Bacharach property at degree `d`: every degree-`d` form
/// vanishing on all but one point of `Z` vanishes on all of `Z`, i.e.
/// `h^0(I_{Z \ p}(d)) = h^0(I_Z(d))` for every `p`.
pub fn cayley_bacharach(z: &PointConfig, d: i64) -> bool {
    if d < 0 || z.is_empty() {
        return true;
    }
    let rows = evaluation_rows(z, d);
    let echelon = eliminate(&rows);
    let full_rank = echelon.rank;
    let pivots: HashSet<usize> = echelon.pivot_rows.into_iter().collect();
    for i in 0..z.len() {
        // dropping a non-pivot row cannot change the rank
        if !pivots.contains(&i) {
            continue;
        }
        let sub: Vec<Vec<BigInt>> = rows
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, row)| row.clone())
            .collect();
        if rank(&sub) != full_rank {
            return false;
        }
    }
    true
}

/// Degree of the twist whose Cayley-Bacharach property governs local freeness
/// of the extension with sub `O(r-s)` and quotient `O(r+s-t)`:
/// `(s - r) + (r + s - t) + (-3) = 2s - t - 3`.
pub fn extension_twist_degree(r: i64, s: i64, t: i64) -> i64 {
    (s - r) + (r + s - t) + CANONICAL_DEGREE
}

fn draw_rational(rng: &mut ChaCha8Rng) -> Rational {
    let n = rng.gen_range(-COORD_NUM_BOUND..=COORD_NUM_BOUND);
    let d = rng.gen_range(1..=COORD_DEN_BOUND);
    Rational::new(n, d)
}

/// `l` distinct deterministic pseudo-random points on the line `z = 0`.
pub fn gen_collinear(l: usize, seed: u64) -> PointConfig {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut slopes: Vec<Rational> = Vec::with_capacity(l);
    let mut guard = 0usize;
    while slopes.len() < l {
        let u = draw_rational(&mut rng);
        if !slopes.contains(&u) {
            slopes.push(u);
        }
        guard += 1;
        assert!(guard < 100_000, "coordinate space exhausted");
    }
    let one = Rational::from(1);
    let zero = Rational::from(0);
    PointConfig::new(
        slopes
            .into_iter()
            .map(|u| [one.clone(), u, zero.clone()])
            .collect(),
    )
    .expect("collinear points are distinct by construction")
}

fn draw_affine_config(rng: &mut ChaCha8Rng, l: usize) -> PointConfig {
    let one = Rational::from(1);
    let mut points: Vec<[Rational; 3]> = Vec::with_capacity(l);
    let mut guard = 0usize;
    while points.len() < l {
        let p = [draw_rational(rng), draw_rational(rng), one.clone()];
        if !points.contains(&p) {
            points.push(p);
        }
        guard += 1;
        assert!(guard < 100_000, "coordinate space exhausted");
    }
    PointConfig::new(points).expect("affine points are distinct by construction")
}

/// `l` deterministic pseudo-random points imposing independent conditions on
/// curves of every degree up to 6, resampling on failure.
pub fn gen_general(l: usize, seed: u64) -> Result<PointConfig> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let config = draw_affine_config(&mut rng, l);
        let independent = (0..=6).all(|d| h0_ideal(&config, d) == (h0_line(d) - l as i64).max(0));
        if independent {
            return Ok(config);
        }
    }
    Err(Error::Generation(format!(
        "no general configuration of {l} points after {MAX_ATTEMPTS} attempts (seed {seed})"
    )))
}

/// Certificate recorded with a witness configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessCertificate {
    /// Degree in which the cycle must avoid all curves.
    pub no_curve_degree: i64,
    pub no_curve: bool,
    /// Degree of the Cayley-Bacharach twist.
    pub cb_degree: i64,
    pub cb: bool,
}

/// A witness cycle with its certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertifiedConfig {
    pub points: PointConfig,
    pub certificate: WitnessCertificate,
}

/// Builds a cycle certifying that a locally free extension with maximal
/// subbundle `O(r-s)` and the given invariants exists.
///
/// For `s >= 1` the cycle has length `l(Z) = c2 + s^2 - r^2 + t(r-s)`, avoids
/// all curves of degree `2s - 1 - t`, and satisfies Cayley-Bacharach in
/// degree `2s - 3 - t`; general position achieves both. For `s <= 0` any
/// cycle of the right length works (both conditions are vacuous at negative
/// degrees) and a collinear one maximizes quotient sections.
pub fn witness_config(r: i64, t: i64, c2: i64, s: i64, seed: u64) -> Result<CertifiedConfig> {
    if !segre_feasible(r, t, c2, s) {
        return Err(Error::Feasibility(format!(
            "(r={r}, t={t}, c2={c2}, s={s}) is not feasible"
        )));
    }
    let ell = cycle_length(r, t, c2, s)? as usize;
    let no_curve_degree = 2 * s - 1 - t;
    let cb_degree = extension_twist_degree(r, s, t);
    let config = if s <= 0 {
        gen_collinear(ell, seed)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut found = None;
        for _ in 0..MAX_ATTEMPTS {
            let candidate = draw_affine_config(&mut rng, ell);
            if lies_on_no_curve(&candidate, no_curve_degree)
                && cayley_bacharach(&candidate, cb_degree)
            {
                found = Some(candidate);
                break;
            }
        }
        found.ok_or_else(|| {
            Error::Generation(format!(
                "no witness of length {ell} for (r={r}, t={t}, c2={c2}, s={s}) after {MAX_ATTEMPTS} attempts"
            ))
        })?
    };
    let certificate = WitnessCertificate {
        no_curve_degree,
        no_curve: lies_on_no_curve(&config, no_curve_degree),
        cb_degree,
        cb: cayley_bacharach(&config, cb_degree),
    };
    Ok(CertifiedConfig {
        points: config,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};
    use proptest::prelude::*;

    fn pt(x: i64, y: i64, z: i64) -> [Rational; 3] {
        [rat(x), rat(y), rat(z)]
    }

    fn config(points: Vec<[Rational; 3]>) -> PointConfig {
        PointConfig::new(points).unwrap()
    }

    #[test]
    fn normalization_and_distinctness() {
        let c = config(vec![pt(2, 4, 6)]);
        assert_eq!(c.points()[0], [rat(1), rat(2), rat(3)]);
        assert!(PointConfig::new(vec![pt(0, 0, 0)]).is_err());
        // same projective point twice
        assert!(PointConfig::new(vec![pt(1, 2, 3), pt(2, 4, 6)]).is_err());
        let c = config(vec![pt(0, 3, 5)]);
        assert_eq!(c.points()[0], [rat(0), rat(1), ratio(5, 3)]);
    }

    #[test]
    fn h0_ideal_examples() {
        let collinear = config(vec![pt(1, 0, 0), pt(1, 1, 0), pt(1, 2, 0)]);
        assert_eq!(h0_ideal(&collinear, 1), 1);
        assert_eq!(h0_ideal(&PointConfig::empty(), 2), 6);
        assert_eq!(h0_ideal(&config(vec![pt(1, 1, 1)]), 0), 0);
    }

    #[test]
    fn no_curve_examples() {
        let collinear = config(vec![pt(1, 0, 0), pt(1, 1, 0), pt(1, 2, 0)]);
        assert!(!lies_on_no_curve(&collinear, 1));
        let general = config(vec![pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)]);
        assert!(lies_on_no_curve(&general, 1));
        assert!(lies_on_no_curve(&collinear, -1));
    }

    #[test]
    fn cayley_bacharach_examples() {
        let any = config(vec![pt(1, 2, 3), pt(1, 0, 0), pt(0, 1, 5)]);
        assert!(cayley_bacharach(&any, -3));
        assert!(!cayley_bacharach(&config(vec![pt(1, 1, 1)]), 0));
        // four points in general position: the base locus of a pencil of
        // conics; no line through three of them, so degree 1 is vacuous
        let four = config(vec![pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1)]);
        assert!(cayley_bacharach(&four, 1));
    }

    #[test]
    fn cayley_bacharach_detects_failure() {
        // two points: the line pencil through one misses the other
        let two = config(vec![pt(1, 0, 0), pt(0, 1, 0)]);
        assert!(!cayley_bacharach(&two, 1));
        // three collinear points do satisfy it in degree 1
        let collinear = config(vec![pt(1, 0, 0), pt(1, 1, 0), pt(1, 2, 0)]);
        assert!(cayley_bacharach(&collinear, 1));
    }

    #[test]
    fn twist_degree_examples() {
        assert_eq!(extension_twist_degree(2, 1, 0), -1);
        assert_eq!(extension_twist_degree(5, 5, 0), 7);
        assert_eq!(extension_twist_degree(3, 0, 1), -4);
    }

    #[test]
    fn gen_collinear_lies_on_line() {
        for l in [0usize, 1, 3, 7, 10] {
            let z = gen_collinear(l, 11);
            assert_eq!(z.len(), l);
            if l >= 1 {
                assert!(h0_ideal(&z, 1) >= 1);
            }
        }
        // determinism per seed
        assert_eq!(gen_collinear(5, 3), gen_collinear(5, 3));
        assert_ne!(gen_collinear(5, 3), gen_collinear(5, 4));
    }

    #[test]
    fn gen_general_independence() {
        let z = gen_general(4, 5).unwrap();
        assert_eq!(h0_ideal(&z, 1), 0);
        assert_eq!(gen_general(0, 9).unwrap(), PointConfig::empty());
        assert_eq!(gen_general(7, 2).unwrap(), gen_general(7, 2).unwrap());
    }

    #[test]
    fn witness_examples() {
        let w = witness_config(2, 0, 7, 1, 1).unwrap();
        assert_eq!(w.points.len(), 4);
        assert_eq!(w.certificate.no_curve_degree, 1);
        assert!(w.certificate.no_curve);
        assert_eq!(w.certificate.cb_degree, -1);
        assert!(w.certificate.cb);

        let w = witness_config(2, 0, 6, 1, 1).unwrap();
        assert_eq!(w.points.len(), 3);
        assert!(w.certificate.no_curve);

        let w = witness_config(3, 0, 10, -1, 1).unwrap();
        assert_eq!(w.points.len(), 2);
        assert_eq!(w.certificate.cb_degree, -5);
        assert!(w.certificate.cb);

        assert!(matches!(
            witness_config(2, 0, 6, 2, 1),
            Err(Error::Feasibility(_))
        ));
    }

    #[test]
    fn serde_round_trip() {
        let z = config(vec![pt(1, 2, 3), pt(0, 1, 7)]);
        let json = serde_json::to_string(&z).unwrap();
        assert_eq!(json, r#"[["1","2","3"],["0","1","7"]]"#);
        let back: PointConfig = serde_json::from_str(&json).unwrap();
        assert_eq!(back, z);
        assert!(serde_json::from_str::<PointConfig>(r#"[["0","0","0"]]"#).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        /// Rank-corank identity and removal monotonicity.
        #[test]
        fn rank_corank_and_monotonicity(seed in 0u64..500, l in 1usize..8, d in 0i64..4) {
            let z = draw_affine_config(&mut ChaCha8Rng::seed_from_u64(seed), l);
            let h = h0_ideal(&z, d);
            let m_rank = rank(&evaluation_rows(&z, d)) as i64;
            prop_assert_eq!(h + m_rank, h0_line(d));
            for i in 0..z.len() {
                let h_minus = h0_ideal(&z.without(i), d);
                prop_assert!(h <= h_minus && h_minus <= h + 1);
            }
        }

        /// Collinear configurations achieve the exact section-count formula.
        #[test]
        fn collinear_formula(l in 0usize..=10, d in 0i64..=5, seed in 0u64..100) {
            let z = gen_collinear(l, seed);
            let expected = if (l as i64) <= d + 1 {
                h0_line(d) - l as i64
            } else {
                h0_line(d - 1)
            };
            prop_assert_eq!(h0_ideal(&z, d), expected);
        }

        /// The optimized test agrees with the point-by-point definition.
        #[test]
        fn cayley_bacharach_matches_definition(
            seed in 0u64..300, l in 1usize..7, d in -1i64..3, collinear in any::<bool>()
        ) {
            let z = if collinear {
                gen_collinear(l, seed)
            } else {
                draw_affine_config(&mut ChaCha8Rng::seed_from_u64(seed), l)
            };
            let by_definition = (0..z.len())
                .all(|i| h0_ideal(&z.without(i), d) == h0_ideal(&z, d));
            prop_assert_eq!(cayley_bacharach(&z, d), by_definition);
        }
    }
}
