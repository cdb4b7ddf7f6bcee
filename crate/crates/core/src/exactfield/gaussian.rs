use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{parse_unsigned, Rational};
use crate::error::{Error, Result};

/// Element `re + im·i` of ℚ(i).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Qi {
    pub re: Rational,
    pub im: Rational,
}

impl Qi {
    pub fn new(re: Rational, im: Rational) -> Self {
        Qi { re, im }
    }

    pub fn zero() -> Self {
        Qi::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        Qi::from_int(1)
    }

    pub fn i() -> Self {
        Qi::new(Rational::zero(), Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Qi::new(Rational::from_int(n), Rational::zero())
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Qi::new(Rational::new(n, d), Rational::zero())
    }

    pub fn real(r: Rational) -> Self {
        Qi::new(r, Rational::zero())
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

    pub fn conj(&self) -> Self {
        Qi::new(self.re.clone(), -&self.im)
    }

    /// `re² + im²`.
    pub fn norm(&self) -> Rational {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm().inv().ok_or(Error::DivisionByZero)?;
        Ok(Qi::new(&self.re * &n, -(&self.im * &n)))
    }

    pub fn checked_div(&self, rhs: &Qi) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Qi::new(&self.re * r, &self.im * r)
    }
}

impl<'a> Add<&'a Qi> for &'a Qi {
    type Output = Qi;
    fn add(self, rhs: &Qi) -> Qi {
        Qi::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a Qi> for &'a Qi {
    type Output = Qi;
    fn sub(self, rhs: &Qi) -> Qi {
        Qi::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a Qi> for &'a Qi {
    type Output = Qi;
    fn mul(self, rhs: &Qi) -> Qi {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Qi::real(&self.re * &rhs.re);
        }
        let re = &(&self.re * &rhs.re) - &(&self.im * &rhs.im);
        let im = &(&self.re * &rhs.im) + &(&self.im * &rhs.re);
        Qi::new(re, im)
    }
}

impl<'a> Div<&'a Qi> for &'a Qi {
    type Output = Qi;
    /// Panics on a zero divisor; see `checked_div`.
    fn div(self, rhs: &Qi) -> Qi {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &Qi {
    type Output = Qi;
    fn neg(self) -> Qi {
        Qi::new(-&self.re, -&self.im)
    }
}

impl Neg for Qi {
    type Output = Qi;
    fn neg(self) -> Qi {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Qi {
            type Output = Qi;
            fn $m(self, rhs: Qi) -> Qi {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&Qi> for Qi {
    fn add_assign(&mut self, rhs: &Qi) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Qi> for Qi {
    fn sub_assign(&mut self, rhs: &Qi) {
        *self = &*self - rhs;
    }
}

impl From<i64> for Qi {
    fn from(n: i64) -> Self {
        Qi::from_int(n)
    }
}

impl From<Rational> for Qi {
    fn from(r: Rational) -> Self {
        Qi::real(r)
    }
}

impl fmt::Display for Qi {
    /// Canonical scalar syntax: `a`, `ci`, `a+ci`, `a-ci` with `a`, `c` of the form `n` or `n/d`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if !self.re.is_zero() {
            write!(f, "{}", self.re)?;
            if self.im.signum() > 0 {
                write!(f, "+")?;
            }
        }
        write!(f, "{}i", self.im)
    }
}

impl fmt::Debug for Qi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_signed(s: &str) -> Option<Rational> {
    match s.strip_prefix('-') {
        Some(rest) => parse_unsigned(rest).map(|r| -r),
        None => parse_unsigned(s),
    }
}

impl FromStr for Qi {
    type Err = Error;

    /// Grammar: `[-]a[/b][(+|-)c[/d]i]`, plus the pure imaginary form `[-]c[/d]i`.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::ParseScalar(s.to_string());
        let Some(body) = s.strip_suffix('i') else {
            return parse_signed(s).map(Qi::real).ok_or_else(err);
        };
        // the imaginary part starts at the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|(_, c)| *c == '+' || *c == '-')
            .map(|(k, _)| k)
            .last();
        match split {
            None => parse_signed(body).map(|im| Qi::new(Rational::zero(), im)).ok_or_else(err),
            Some(k) => {
                let re = parse_signed(&body[..k]).ok_or_else(err)?;
                let (sign, mag) = body[k..].split_at(1);
                let mut im = parse_unsigned(mag).ok_or_else(err)?;
                if sign == "-" {
                    im = -im;
                }
                Ok(Qi::new(re, im))
            }
        }
    }
}

impl Serialize for Qi {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Qi {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Qi {
        s.parse().unwrap()
    }

    #[test]
    fn norm_of_conjugates() {
        assert_eq!(&q("1/2+1i") * &q("1/2-1i"), q("5/4"));
    }

    #[test]
    fn inverse_and_sum() {
        assert_eq!(q("2").inv().unwrap(), q("1/2"));
        assert_eq!(&q("3/7") + &q("4/7"), Qi::one());
        assert_eq!(Qi::zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(q("1+1i").inv().unwrap(), q("1/2-1/2i"));
    }

    #[test]
    fn parses_grammar() {
        assert_eq!(q("1/2+1/3i"), Qi::new(Rational::new(1, 2), Rational::new(1, 3)));
        assert_eq!(q("-2"), Qi::from_int(-2));
        assert_eq!(q("3i"), Qi::new(Rational::zero(), Rational::from_int(3)));
        assert_eq!(q("-3/4i"), Qi::new(Rational::zero(), Rational::new(-3, 4)));
        assert_eq!(q("-1-2/6i"), Qi::new(Rational::from_int(-1), Rational::new(-1, 3)));
        for bad in ["", " 1", "1 ", "1+i", "i", "1/0", "--1", "1+-2i", "1.5", "1+2", "+1", "2i3"] {
            assert!(bad.parse::<Qi>().is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn display_round_trips() {
        for s in ["0", "-2", "3i", "1/2+1/3i", "1-2i", "-1/2-1/3i", "-5i"] {
            assert_eq!(q(s).to_string(), s);
        }
        assert_eq!(q("2/4+0i").to_string(), "1/2");
    }
}
