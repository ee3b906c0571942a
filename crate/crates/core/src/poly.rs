//! Dense univariate polynomials over an exact scalar type.
//!
//! The coefficient type is generic over [`num_traits::Num`]; the crate root
//! exposes [`QPoly`](crate::QPoly) = `Poly<Rational>`, the carrier for Hilbert
//! polynomials and stability parameters. Comparison uses the asymptotic
//! (coefficient-lexicographic, highest degree first) order: `p < q` exactly
//! when `p(m) < q(m)` for all sufficiently large `m`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Num;
use serde::{Serialize, Serializer};

/// Scalar types usable as polynomial coefficients and matrix entries.
pub trait Scalar: Num + Clone {}

impl<T: Num + Clone> Scalar for T {}

/// A polynomial stored as coefficients indexed by degree (index `i` holds the
/// coefficient of `m^i`). The highest stored coefficient is nonzero; the zero
/// polynomial is the empty sequence.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    /// Builds a polynomial from coefficients (low degree to high), trimming
    /// trailing zeros.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// `c * m^degree`.
    pub fn monomial(c: T, degree: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `m^i` (zero beyond the stored range).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }
}

impl<T: Scalar + PartialOrd> Poly<T> {
    /// Compares under the asymptotic order: coefficients are compared from the
    /// highest degree present in either polynomial downward and the first
    /// difference decides. Equivalent to the sign of `p(m) - q(m)` for all
    /// sufficiently large `m`.
    pub fn cmp_asymptotic(&self, other: &Self) -> Ordering {
        let n = self.coeffs.len().max(other.coeffs.len());
        for i in (0..n).rev() {
            let a = self.coeff(i);
            let b = other.coeff(i);
            match a.partial_cmp(&b) {
                Some(Ordering::Equal) => continue,
                Some(ord) => return ord,
                None => panic!("incomparable polynomial coefficients"),
            }
        }
        Ordering::Equal
    }

    /// `self > 0` under the asymptotic order (positive leading coefficient).
    pub fn is_positive(&self) -> bool {
        self.cmp_asymptotic(&Poly::zero()) == Ordering::Greater
    }
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl<T: Scalar> $trait for Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<T: Scalar + Neg<Output = T>> Neg for &Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: fmt::Display> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})m"),
                _ => format!("({c})m^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl<T: Serialize> Serialize for Poly<T> {
    /// Serializes as the coefficient array, low degree to high.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}
