//! Numerical data of coherent systems on the plane and their reduced Hilbert
//! polynomials and slopes.
//!
//! A rank-2 coherent system is encoded by [`CsType`]: the pair `(r, t)` with
//! `t` the parity bit determines `c1 = 2r - t`, and `c2`, `k` complete the
//! type `(2, c1, c2, k)`. Line-bundle subsystems carry only their degree and
//! section count ([`SubsystemData`]). Stability parameters are linear
//! polynomials `am + b` ([`AlphaLinear`]) or arbitrary [`QPoly`] values.

use serde::{Deserialize, Serialize};

use crate::cohomology::hilbert_poly_line;
use crate::error::{Error, Result};
use crate::rational::{rat, ratio, Rational};
use crate::QPoly;

/// Numerical type `(2, 2r - t, c2, k)` of a rank-2 coherent system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CsType {
    pub r: i64,
    /// Parity of the first Chern class: `c1 = 2r - t` with `t` in `{0, 1}`.
    pub t: i64,
    pub c2: i64,
    /// Dimension of the section space `V`.
    pub k: i64,
}

impl CsType {
    pub fn new(r: i64, t: i64, c2: i64, k: i64) -> Result<Self> {
        if !(t == 0 || t == 1) {
            return Err(Error::Precondition(format!("t must be 0 or 1, got {t}")));
        }
        if k < 0 {
            return Err(Error::Precondition(format!("k must be >= 0, got {k}")));
        }
        Ok(CsType { r, t, c2, k })
    }

    pub fn c1(&self) -> i64 {
        2 * self.r - self.t
    }

    /// Slope of the underlying bundle, `c1 / 2`.
    pub fn slope(&self) -> Rational {
        ratio(self.c1(), 2)
    }
}

/// Numerical data `(c1(L), dim W)` of a line-bundle coherent subsystem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubsystemData {
    #[serde(rename = "c1L")]
    pub c1_l: i64,
    pub w: i64,
}

impl SubsystemData {
    pub fn new(c1_l: i64, w: i64) -> Self {
        SubsystemData { c1_l, w }
    }
}

/// A linear stability parameter `a m + b` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlphaLinear {
    pub a: Rational,
    pub b: Rational,
}

impl AlphaLinear {
    pub fn new(a: Rational, b: Rational) -> Self {
        AlphaLinear { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        AlphaLinear::new(rat(a), rat(b))
    }

    pub fn to_poly(&self) -> QPoly {
        QPoly::new(vec![self.b.clone(), self.a.clone()])
    }

    /// `a m + b > 0` under the asymptotic order: `a > 0`, or `a = 0, b > 0`.
    pub fn is_positive(&self) -> bool {
        self.to_poly().is_positive()
    }
}

/// Reduced Hilbert polynomial of a rank-2 system:
/// `(k/2) alpha + m^2/2 + ((c1+3)/2) m + ((c1^2+3c1)/2 - c2)/2 + 1`.
pub fn reduced_hilbert_rank2(cs: &CsType, alpha: &QPoly) -> QPoly {
    let c1 = cs.c1();
    let base = QPoly::new(vec![
        (ratio(c1 * c1 + 3 * c1, 2) - rat(cs.c2)) * ratio(1, 2) + rat(1),
        ratio(c1 + 3, 2),
        ratio(1, 2),
    ]);
    &base + &alpha.scale(&ratio(cs.k, 2))
}

/// Reduced Hilbert polynomial of a line-bundle subsystem:
/// `w alpha + P_L(m)` with `L = O(c1L)`.
pub fn reduced_hilbert_sub(sub: &SubsystemData, alpha: &QPoly) -> QPoly {
    &hilbert_poly_line(sub.c1_l) + &alpha.scale(&rat(sub.w))
}

/// Slope gap with respect to the parameter `a`:
/// `mu_a(E, V) - mu_a(L, W) = (c1/2 - c1L) + a (k/2 - w)`.
pub fn slope_gap_a(cs: &CsType, sub: &SubsystemData, a: &Rational) -> Rational {
    cs.slope() - rat(sub.c1_l) + a * (ratio(cs.k, 2) - rat(sub.w))
}
