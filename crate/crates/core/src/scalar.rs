// SPDX-License-Identifier: Apache-2.0

//! Complex scalars in two arithmetic modes.
//!
//! [`Exact`] is a Gaussian rational (`Complex<Rational64>`): every operation
//! is closed and never rounds. [`Float`] is an ordinary `Complex64`. Both sit
//! behind the [`Scalar`] trait so identity suites can be written once and run
//! in either mode. The two modes are distinct types, so mixing them is a
//! compile error rather than a runtime failure.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::{Complex, Complex64};
use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

/// Exact Gaussian rational.
pub type Exact = Complex<Rational64>;
/// IEEE double complex.
pub type Float = Complex64;

/// Arithmetic mode of a scalar type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Exact => f.write_str("exact"),
            Mode::Float => f.write_str("float"),
        }
    }
}

/// A non-negative deviation measure.
///
/// Exact deviations are sums of squared moduli kept as rationals (the root is
/// never taken); float deviations are plain norms.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Deviation {
    Exact(Rational64),
    Float(f64),
}

impl Deviation {
    pub fn zero(mode: Mode) -> Self {
        match mode {
            Mode::Exact => Deviation::Exact(Rational64::zero()),
            Mode::Float => Deviation::Float(0.0),
        }
    }

    pub fn mode(&self) -> Mode {
        match self {
            Deviation::Exact(_) => Mode::Exact,
            Deviation::Float(_) => Mode::Float,
        }
    }

    pub fn as_f64(&self) -> f64 {
        match self {
            Deviation::Exact(r) => *r.numer() as f64 / *r.denom() as f64,
            Deviation::Float(x) => *x,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Deviation::Exact(r) => r.is_zero(),
            Deviation::Float(x) => *x == 0.0,
        }
    }

    /// Exact deviations must vanish; float deviations must not exceed `tol`.
    pub fn within(&self, tol: f64) -> bool {
        match self {
            Deviation::Exact(r) => r.is_zero(),
            Deviation::Float(x) => x.is_finite() && *x <= tol,
        }
    }

    pub fn max(self, other: Deviation) -> Deviation {
        match (self, other) {
            (Deviation::Exact(a), Deviation::Exact(b)) => Deviation::Exact(a.max(b)),
            (Deviation::Float(a), Deviation::Float(b)) => {
                // NaN must not be swallowed by f64::max
                if a.is_nan() || b.is_nan() {
                    Deviation::Float(f64::NAN)
                } else {
                    Deviation::Float(a.max(b))
                }
            }
            (a, b) => panic!("deviation mode mismatch: {:?} vs {:?}", a.mode(), b.mode()),
        }
    }

    /// Square root for float deviations; exact deviations stay squared.
    pub fn finish(self) -> Deviation {
        match self {
            Deviation::Float(x) => Deviation::Float(x.sqrt()),
            d => d,
        }
    }
}

impl Add for Deviation {
    type Output = Deviation;
    fn add(self, rhs: Deviation) -> Deviation {
        match (self, rhs) {
            (Deviation::Exact(a), Deviation::Exact(b)) => Deviation::Exact(a + b),
            (Deviation::Float(a), Deviation::Float(b)) => Deviation::Float(a + b),
            (a, b) => panic!("deviation mode mismatch: {:?} vs {:?}", a.mode(), b.mode()),
        }
    }
}

impl fmt::Display for Deviation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Deviation::Exact(r) => write!(f, "{}", fmt_rational(r)),
            Deviation::Float(x) => write!(f, "{:e}", x),
        }
    }
}

/// Field of complex scalars used by every algebraic module.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const MODE: Mode;

    fn zero() -> Self;
    fn one() -> Self;
    /// The imaginary unit `i`.
    fn imag_unit() -> Self;
    /// Real rational `num/den`.
    fn from_ratio(num: i64, den: i64) -> Self;
    /// Gaussian integer `re + i im`.
    fn from_gauss(re: i64, im: i64) -> Self;
    fn conj(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Squared modulus as a deviation in this scalar's mode.
    fn modulus_sqr(&self) -> Deviation;
    fn to_c64(&self) -> Complex64;
    /// The exact value, if this scalar is exact.
    fn to_exact(&self) -> Option<Exact>;
    /// Serialized entry, `"p/q+r/s i"` for exact scalars.
    fn entry_string(&self) -> String;

    fn from_i64(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }

    fn scale_ratio(&self, num: i64, den: i64) -> Self {
        self.clone() * Self::from_ratio(num, den)
    }
}

fn fmt_rational(r: &Rational64) -> String {
    if *r.denom() == 1 {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Formats an exact scalar as `"p/q+r/s i"` (denominators of 1 omitted).
pub fn format_exact(z: &Exact) -> String {
    let sign = if z.im.is_negative() { '-' } else { '+' };
    format!(
        "{}{}{} i",
        fmt_rational(&z.re),
        sign,
        fmt_rational(&z.im.abs())
    )
}

/// Formats a real rational the way reports print them.
pub fn format_rational(r: &Rational64) -> String {
    fmt_rational(r)
}

impl Scalar for Exact {
    const MODE: Mode = Mode::Exact;

    fn zero() -> Self {
        Complex::new(Rational64::zero(), Rational64::zero())
    }
    fn one() -> Self {
        Complex::new(Rational64::from_integer(1), Rational64::zero())
    }
    fn imag_unit() -> Self {
        Complex::new(Rational64::zero(), Rational64::from_integer(1))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex::new(Rational64::new(num, den), Rational64::zero())
    }
    fn from_gauss(re: i64, im: i64) -> Self {
        Complex::new(Rational64::from_integer(re), Rational64::from_integer(im))
    }
    fn conj(&self) -> Self {
        Complex::conj(self)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn modulus_sqr(&self) -> Deviation {
        Deviation::Exact(self.re * self.re + self.im * self.im)
    }
    fn to_c64(&self) -> Complex64 {
        let f = |r: &Rational64| *r.numer() as f64 / *r.denom() as f64;
        Complex64::new(f(&self.re), f(&self.im))
    }
    fn to_exact(&self) -> Option<Exact> {
        Some(*self)
    }
    fn entry_string(&self) -> String {
        format_exact(self)
    }
}

impl Scalar for Float {
    const MODE: Mode = Mode::Float;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn imag_unit() -> Self {
        Complex64::new(0.0, 1.0)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex64::new(num as f64 / den as f64, 0.0)
    }
    fn from_gauss(re: i64, im: i64) -> Self {
        Complex64::new(re as f64, im as f64)
    }
    fn conj(&self) -> Self {
        Complex::conj(self)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn modulus_sqr(&self) -> Deviation {
        Deviation::Float(self.norm_sqr())
    }
    fn to_c64(&self) -> Complex64 {
        *self
    }
    fn to_exact(&self) -> Option<Exact> {
        None
    }
    fn entry_string(&self) -> String {
        let sign = if self.im < 0.0 { '-' } else { '+' };
        format!("{:e}{}{:e} i", self.re, sign, self.im.abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_imaginary_unit_squares_to_minus_one() {
        let i = Exact::imag_unit();
        assert_eq!(i * i, -Exact::one());
    }

    #[test]
    fn exact_arithmetic_does_not_round() {
        let a = Exact::from_ratio(1, 3);
        let b = Exact::from_ratio(2, 7);
        assert_eq!((a + b) - b, a);
        assert_eq!(a * Exact::from_i64(3), Exact::one());
    }

    #[test]
    fn entry_format() {
        let z = Complex::new(Rational64::new(-1, 2), Rational64::new(3, 4));
        assert_eq!(format_exact(&z), "-1/2+3/4 i");
        assert_eq!(format_exact(&Exact::imag_unit().neg()), "0-1 i");
        assert_eq!(format_exact(&Exact::one()), "1+0 i");
    }

    #[test]
    fn deviation_semantics() {
        let d = Exact::from_gauss(1, 1).modulus_sqr();
        assert_eq!(d, Deviation::Exact(Rational64::from_integer(2)));
        assert!(!d.within(1e9));
        assert!(Deviation::zero(Mode::Exact).within(0.0));
        assert!(Deviation::Float(1e-12).within(1e-10));
        assert!(!Deviation::Float(f64::NAN).within(1.0));
        assert_eq!(Deviation::Float(4.0).finish(), Deviation::Float(2.0));
    }
}
