//! Cohomology bookkeeping for line bundles `O(d)` on the projective plane.
//!
//! Everything here reduces to integer arithmetic on degrees: `h^0(O(d))`
//! counts the degree-`d` forms in three variables and the Hilbert polynomial
//! of `O(d)` is the binomial expression `(m+d+1)(m+d+2)/2`. Higher cohomology
//! never appears explicitly: `h^1(O(e)) = 0` for all `e` and `h^2(O(e)) = 0`
//! for `e >= -2`, so section counts and Euler characteristics coincide in the
//! ranges used.

use crate::rational::{rat, ratio};
use crate::QPoly;

/// The degree of the canonical bundle on the plane.
pub const CANONICAL_DEGREE: i64 = -3;

/// `h^0(P^2, O(d))`: the number of degree-`d` monomials in three variables,
/// `(d+1)(d+2)/2` for `d >= 0` and `0` otherwise.
pub fn h0_line(d: i64) -> i64 {
    if d >= 0 {
        (d + 1) * (d + 2) / 2
    } else {
        0
    }
}

/// The Hilbert polynomial of `O(d)`:
/// `m^2/2 + (d + 3/2) m + (d^2 + 3d)/2 + 1`.
pub fn hilbert_poly_line(d: i64) -> QPoly {
    QPoly::new(vec![
        ratio(d * d + 3 * d, 2) + rat(1),
        rat(d) + ratio(3, 2),
        ratio(1, 2),
    ])
}
