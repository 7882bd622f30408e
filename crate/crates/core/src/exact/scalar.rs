use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ParseScalarError;

/// A complex number `re + im·i` with arbitrary-precision rational parts.
///
/// `BigRational` keeps both parts reduced with a positive denominator, so
/// derived equality and hashing are value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    /// `(re_num/re_den) + (im_num/im_den)·i`. Panics on a zero denominator.
    pub fn from_ratios(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        Self::new(BigRational::new(re_num.into(), re_den.into()), BigRational::new(im_num.into(), im_den.into()))
    }

    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `z·conj(z)`, a nonnegative rational.
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sq();
        Some(Self::new(&self.re / &n, -(&self.im / &n)))
    }

    /// `(-1)^e` as a scalar.
    pub fn sign(e: i64) -> Self {
        if e.rem_euclid(2) == 0 {
            Self::one()
        } else {
            -Self::one()
        }
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for GaussianRational {
    fn from(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl Add<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::new(&self.re * &rhs.re, BigRational::zero());
        }
        GaussianRational::new(&self.re * &rhs.re - &self.im * &rhs.im, &self.re * &rhs.im + &self.im * &rhs.re)
    }
}

impl Div<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        let inv = rhs.inv().expect("division by zero");
        self * &inv
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$m(rhs)
            }
        }
        impl $tr<GaussianRational> for &GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                self.$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for GaussianRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

fn fmt_rational(q: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => fmt_rational(&self.re, f),
            (true, false) => {
                fmt_rational(&self.im, f)?;
                f.write_str("*i")
            }
            (false, false) => {
                fmt_rational(&self.re, f)?;
                if !self.im.is_negative() {
                    f.write_str("+")?;
                }
                fmt_rational(&self.im, f)?;
                f.write_str("*i")
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rational(s: &str) -> Result<BigRational, ParseScalarError> {
    let bad = || ParseScalarError(s.to_string());
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num = num.strip_prefix('+').unwrap_or(num);
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if den.is_zero() || den.is_negative() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Parses the imaginary coefficient of a term ending in `i`: `3/4*i`, `-i`, `i`.
fn parse_imag(term: &str) -> Result<BigRational, ParseScalarError> {
    let body = term.strip_suffix('i').expect("caller checked suffix");
    let body = body.strip_suffix('*').unwrap_or(body);
    match body {
        "" | "+" => Ok(BigRational::one()),
        "-" => Ok(-BigRational::one()),
        _ => parse_rational(body),
    }
}

impl FromStr for GaussianRational {
    type Err = ParseScalarError;

    /// Accepts `a/b+c/d*i` with either part optional: `3`, `-1/2*i`, `1-i`, `0`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(ParseScalarError(s.to_string()));
        }
        if !t.ends_with('i') {
            return Ok(parse_rational(&t)?.into());
        }
        // The sign joining the two parts is the last '+'/'-' that is not the
        // first character.
        let split = t.char_indices().skip(1).filter(|&(_, c)| c == '+' || c == '-').map(|(idx, _)| idx).last();
        let (re, im) = match split {
            Some(idx) => (parse_rational(&t[..idx])?, parse_imag(&t[idx..])?),
            None => (BigRational::zero(), parse_imag(&t)?),
        };
        Ok(Self::new(re, im))
    }
}

impl serde::Serialize for GaussianRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for GaussianRational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = String::deserialize(d)?;
        raw.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["0", "3", "-1/2*i", "1/2+3/4*i", "-5-2/3*i", "1*i", "-1*i"] {
            assert_eq!(q(s).to_string(), s);
        }
        assert_eq!(q("i"), GaussianRational::i());
        assert_eq!(q("-i"), -GaussianRational::i());
        assert_eq!(q("2/4"), q("1/2"));
        assert_eq!(q("1 + i"), q("1+1*i"));
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "x", "1/0", "1/-2", "1+", "1/2/3", "1+2"] {
            assert!(s.parse::<GaussianRational>().is_err(), "{s}");
        }
    }

    #[test]
    fn field_arithmetic() {
        let a = q("1+2*i");
        let b = q("3-1*i");
        assert_eq!(&a * &b, q("5+5*i"));
        assert_eq!(&(&a / &b) * &b, a);
        assert_eq!(&GaussianRational::i() * &GaussianRational::i(), q("-1"));
        assert_eq!(a.norm_sq(), BigRational::from_integer(5.into()));
        assert!(GaussianRational::zero().inv().is_none());
        assert_eq!(GaussianRational::sign(3), q("-1"));
    }

    #[test]
    fn serde_uses_text_format() {
        let v = vec![q("1/2"), q("-1*i")];
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, r#"["1/2","-1*i"]"#);
        let back: Vec<GaussianRational> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
    }
}
