//! Exact arithmetic in the quadratic field Q(sqrt 2).
//!
//! A [`Scalar`] is stored as a pair of rationals `a + b*sqrt(2)`.
//! The representation is unique, so structural equality is field equality.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::AlgebraError;
pub use crate::rational::Rational;

/// Element `a + b*sqrt(2)` of Q(sqrt 2).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    a: Rational,
    b: Rational,
}

impl Scalar {
    pub fn new(a: Rational, b: Rational) -> Self {
        Scalar { a, b }
    }

    pub fn rational(a: Rational) -> Self {
        Scalar { a, b: Rational::ZERO }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::rational(Rational::from_int(n))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Scalar::rational(Rational::new(num, den))
    }

    /// `sqrt(2)`.
    pub fn sqrt2() -> Self {
        Scalar { a: Rational::ZERO, b: Rational::ONE }
    }

    /// `1/sqrt(2) = sqrt(2)/2`.
    pub fn inv_sqrt2() -> Self {
        Scalar { a: Rational::ZERO, b: Rational::new(1, 2) }
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Rational part `a`.
    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    /// Coefficient `b` of `sqrt(2)`.
    pub fn sqrt2_part(&self) -> &Rational {
        &self.b
    }

    /// Field norm `a^2 - 2 b^2`; zero only for the zero element.
    pub fn norm(&self) -> Rational {
        &(&self.a * &self.a) - &(&Rational::from_int(2) * &(&self.b * &self.b))
    }

    pub fn conjugate(&self) -> Self {
        Scalar { a: self.a.clone(), b: -&self.b }
    }

    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.b.is_zero() {
            return Ok(Scalar::rational(self.a.recip()));
        }
        let n = self.norm();
        Ok(Scalar { a: &self.a / &n, b: -(&self.b / &n) })
    }

    pub fn div(&self, other: &Scalar) -> Result<Self, AlgebraError> {
        Ok(self * &other.inverse()?)
    }

    /// `self += x * y` without intermediate clones when everything is rational.
    pub fn add_mul(&mut self, x: &Scalar, y: &Scalar) {
        if x.b.is_zero() && y.b.is_zero() {
            self.a += &(&x.a * &y.a);
        } else {
            *self += x * y;
        }
    }

    pub fn is_negative_rational(&self) -> bool {
        self.b.is_zero() && self.a.is_negative()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::rational(r)
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(mut self, rhs: Scalar) -> Scalar {
        self += &rhs;
        self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.a += &rhs.a;
        if !rhs.b.is_zero() {
            self.b += &rhs.b;
        }
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self += &rhs;
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(mut self, rhs: Scalar) -> Scalar {
        self -= &rhs;
        self
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.a -= &rhs.a;
        if !rhs.b.is_zero() {
            self.b -= &rhs.b;
        }
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.b.is_zero() && rhs.b.is_zero() {
            return Scalar::rational(&self.a * &rhs.a);
        }
        if self.b.is_zero() {
            return Scalar { a: &self.a * &rhs.a, b: &self.a * &rhs.b };
        }
        if rhs.b.is_zero() {
            return Scalar { a: &self.a * &rhs.a, b: &self.b * &rhs.a };
        }
        let two = Rational::from_int(2);
        Scalar {
            a: &(&self.a * &rhs.a) + &(&two * &(&self.b * &rhs.b)),
            b: &(&self.a * &rhs.b) + &(&self.b * &rhs.a),
        }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { a: -self.a, b: -self.b }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { a: -&self.a, b: -&self.b }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}r2", self.b),
            (false, false) => {
                let sign = if self.b.is_negative() { "-" } else { "+" };
                write!(f, "({}{}{}r2)", self.a, sign, self.b.abs())
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(a: (i64, i64), b: (i64, i64)) -> Scalar {
        Scalar::new(Rational::new(a.0, a.1), Rational::new(b.0, b.1))
    }

    #[test]
    fn difference_of_squares() {
        let x = s((1, 1), (1, 1));
        let y = s((1, 1), (-1, 1));
        assert_eq!(&x * &y, Scalar::from_int(-1));
    }

    #[test]
    fn half_sqrt2_squared() {
        let h = Scalar::inv_sqrt2();
        assert_eq!(&h * &h, Scalar::from_frac(1, 2));
    }

    #[test]
    fn inverses() {
        assert_eq!(Scalar::sqrt2().inverse().unwrap(), Scalar::inv_sqrt2());
        assert_eq!(s((1, 1), (1, 1)).inverse().unwrap(), s((-1, 1), (1, 1)));
        assert_eq!(Scalar::from_int(2).inverse().unwrap(), Scalar::from_frac(1, 2));
        assert!(matches!(Scalar::zero().inverse(), Err(AlgebraError::DivisionByZero)));
    }

    #[test]
    fn display() {
        assert_eq!(Scalar::from_frac(-3, 4).to_string(), "-3/4");
        assert_eq!(Scalar::inv_sqrt2().to_string(), "1/2r2");
        assert_eq!(s((1, 1), (-1, 2)).to_string(), "(1-1/2r2)");
    }
}
