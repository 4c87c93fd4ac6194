//! Gaussian rational scalars: the exact base field for all computation.
//!
//! A [`Scalar`] is `re + im*i` with both parts arbitrary-precision reduced
//! fractions. Canonical form is maintained by `num-rational` (positive
//! denominator, coprime numerator/denominator, zero as `0/1`), so structural
//! equality is field equality.

use alloc::string::String;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

/// Reduced fraction with arbitrary-precision integer parts.
pub type Rational = Ratio<BigInt>;

/// An element of the Gaussian rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    pub re: Rational,
    pub im: Rational,
}

impl Scalar {
    pub fn new(re: Rational, im: Rational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::new(Rational::one(), Rational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar::new(Rational::zero(), Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::new(Rational::from_integer(BigInt::from(n)), Rational::zero())
    }

    /// Real rational `num/den`. Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "rational with zero denominator");
        Scalar::new(
            Ratio::new(BigInt::from(num), BigInt::from(den)),
            Rational::zero(),
        )
    }

    /// Gaussian rational from four integer parts: `rn/rd + (in_/id)*i`.
    pub fn from_parts(rn: i64, rd: i64, in_: i64, id: i64) -> Self {
        assert!(rd != 0 && id != 0, "rational with zero denominator");
        Scalar::new(
            Ratio::new(BigInt::from(rn), BigInt::from(rd)),
            Ratio::new(BigInt::from(in_), BigInt::from(id)),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// True for real scalars strictly greater than zero.
    pub fn is_positive_real(&self) -> bool {
        self.im.is_zero() && self.re.is_positive()
    }

    /// True for real scalars strictly less than zero.
    pub fn is_negative_real(&self) -> bool {
        self.im.is_zero() && self.re.is_negative()
    }

    /// Complex conjugate: negates the imaginary part.
    pub fn conj(&self) -> Self {
        Scalar::new(self.re.clone(), -self.im.clone())
    }

    /// `re^2 + im^2`, a non-negative rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn checked_inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Scalar::new(&self.re / &n, -(&self.im / &n)))
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        self.checked_inv().expect("inverse of zero scalar")
    }

    /// Exact division, `None` when `rhs` is zero.
    pub fn checked_div(&self, rhs: &Scalar) -> Option<Scalar> {
        rhs.checked_inv().map(|r| self * &r)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn rat(f: &mut fmt::Formatter<'_>, r: &Rational) -> fmt::Result {
            if r.denom().is_one() {
                write!(f, "{}", r.numer())
            } else {
                write!(f, "{}/{}", r.numer(), r.denom())
            }
        }
        if self.im.is_zero() {
            return rat(f, &self.re);
        }
        if self.re.is_zero() {
            rat(f, &self.im)?;
            return write!(f, "i");
        }
        rat(f, &self.re)?;
        if self.im.is_positive() {
            write!(f, "+")?;
        }
        rat(f, &self.im)?;
        write!(f, "i")
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Canonical text form of a rational: `"a/b"`, with `/b` omitted when the
/// denominator is 1. This is the scalar wire format used by all file
/// formats; [`parse_rational`] is its inverse.
pub fn rational_string(r: &Rational) -> String {
    use alloc::string::ToString;
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        alloc::format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse a real rational from `"a"` or `"a/b"` (optional leading sign).
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).ok()?;
    let den = BigInt::from_str(den).ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Ratio::new(num, den))
}

impl FromStr for Scalar {
    type Err = String;

    /// Parses the textual real-rational form `"a/b"` (or `"a"`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_rational(s)
            .map(|r| Scalar::new(r, Rational::zero()))
            .ok_or_else(|| alloc::format!("not a rational: {:?}", s))
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re.clone(), -self.im.clone())
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re, -self.im)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    /// Exact field division. Panics when `rhs` is zero.
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

macro_rules! forward_value_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

forward_value_binop!(Add, add);
forward_value_binop!(Sub, sub);
forward_value_binop!(Mul, mul);
forward_value_binop!(Div, div);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fraction_arithmetic_is_exact() {
        let a = Scalar::from_ratio(1, 2);
        let b = Scalar::from_ratio(1, 3);
        assert_eq!(&a + &b, Scalar::from_ratio(5, 6));
    }

    #[test]
    fn imaginary_unit_squares_to_minus_one() {
        let i = Scalar::i();
        assert_eq!(&i * &i, Scalar::from_int(-1));
    }

    #[test]
    fn conjugation_negates_imaginary_part() {
        let z = Scalar::from_parts(2, 3, 5, 1);
        let c = z.conj();
        assert_eq!(c, Scalar::from_parts(2, 3, -5, 1));
        assert_eq!(c.conj(), z);
    }

    #[test]
    fn division_by_zero_is_detected() {
        let z = Scalar::from_int(3);
        assert!(z.checked_div(&Scalar::zero()).is_none());
        assert_eq!(
            z.checked_div(&Scalar::from_int(2)),
            Some(Scalar::from_ratio(3, 2))
        );
    }

    #[test]
    fn zero_is_canonical() {
        let z = Scalar::from_ratio(0, 7);
        assert!(z.is_zero());
        assert_eq!(z, Scalar::zero());
    }

    #[test]
    fn parses_rational_strings() {
        assert_eq!("3/4".parse::<Scalar>().unwrap(), Scalar::from_ratio(3, 4));
        assert_eq!("-2".parse::<Scalar>().unwrap(), Scalar::from_int(-2));
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("x".parse::<Scalar>().is_err());
    }

    #[test]
    fn display_roundtrips_common_forms() {
        assert_eq!(alloc::format!("{}", Scalar::from_ratio(-3, 4)), "-3/4");
        assert_eq!(
            alloc::format!("{}", Scalar::from_parts(2, 3, -5, 1)),
            "2/3-5i"
        );
        assert_eq!(alloc::format!("{}", Scalar::i()), "1i");
    }
}
