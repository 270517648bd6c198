use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::ParseCoordError;

/// An exact rational coordinate.
///
/// Backed by an arbitrary-precision fraction kept in canonical form (reduced,
/// positive denominator), so equality and hashing are structural.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Coord(BigRational);

impl Coord {
    pub fn zero() -> Self {
        Coord(BigRational::zero())
    }

    pub fn one() -> Self {
        Coord(BigRational::one())
    }

    pub fn from_int(v: i64) -> Self {
        Coord(BigRational::from_integer(BigInt::from(v)))
    }

    /// `numer / denom`. Panics if `denom == 0`.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Coord(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_big(numer: BigInt, denom: BigInt) -> Self {
        Coord(BigRational::new(numer, denom))
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        if !self.is_negative() {
            return self.clone();
        }
        Coord(-&self.0)
    }

    pub fn half(&self) -> Self {
        Coord(&self.0 / BigInt::from(2))
    }

    pub fn ceil(&self) -> Self {
        Coord(self.0.ceil())
    }

    pub fn min_of(a: &Coord, b: &Coord) -> Coord {
        if a <= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    pub fn max_of(a: &Coord, b: &Coord) -> Coord {
        if a >= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    /// Clamp into `[lo, hi]`; requires `lo <= hi`.
    pub fn clamp_to(&self, lo: &Coord, hi: &Coord) -> Coord {
        debug_assert!(lo <= hi);
        if self < lo {
            lo.clone()
        } else if self > hi {
            hi.clone()
        } else {
            self.clone()
        }
    }

    /// Lossy conversion for display and plotting only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Rendering at `digits` significant digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        let v = self.to_f64();
        if v == 0.0 {
            return "0".to_string();
        }
        let magnitude = v.abs().log10().floor() as i64;
        let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
        let s = format!("{v:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    }

    /// Exact decimal expansion if the denominator has only factors 2 and 5.
    pub fn to_terminating_decimal(&self) -> Option<String> {
        let mut denom = self.denom().clone();
        let two = BigInt::from(2);
        let five = BigInt::from(5);
        let ten = BigInt::from(10);
        let (mut twos, mut fives) = (0u32, 0u32);
        while (&denom % &two).is_zero() {
            denom /= &two;
            twos += 1;
        }
        while (&denom % &five).is_zero() {
            denom /= &five;
            fives += 1;
        }
        if !denom.is_one() {
            return None;
        }
        let places = twos.max(fives);
        let scaled = (self.0.clone() * BigRational::from_integer(num::pow(ten.clone(), places as usize))).to_integer();
        if places == 0 {
            return Some(scaled.to_string());
        }
        let negative = scaled.is_negative();
        let digits = scaled.abs().to_string();
        let digits = format!("{digits:0>width$}", width = places as usize + 1);
        let (int_part, frac_part) = digits.split_at(digits.len() - places as usize);
        Some(format!("{}{int_part}.{frac_part}", if negative { "-" } else { "" }))
    }
}

impl fmt::Debug for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Accepts integers (`-3`), decimals (`0.125`, `-.5`) and fractions (`7/13`).
impl FromStr for Coord {
    type Err = ParseCoordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ParseCoordError(s.to_string());
        if s.is_empty() {
            return Err(bad());
        }
        if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            return Ok(Coord(BigRational::new(n, d)));
        }
        let (negative, body) = match s.as_bytes()[0] {
            b'-' => (true, &s[1..]),
            b'+' => (false, &s[1..]),
            _ => (false, s),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = format!("{int_part}{frac_part}");
        let numer: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().map_err(|_| bad())? };
        let denom = num::pow(BigInt::from(10), frac_part.len());
        let v = BigRational::new(numer, denom);
        Ok(Coord(if negative { -v } else { v }))
    }
}

impl From<i64> for Coord {
    fn from(v: i64) -> Self {
        Coord::from_int(v)
    }
}

impl From<BigRational> for Coord {
    fn from(v: BigRational) -> Self {
        Coord(v)
    }
}

/// Integer operands skip the gcd normalisation a general fraction needs.
fn integer_fast_path(a: &BigRational, b: &BigRational, op: impl FnOnce(&BigInt, &BigInt) -> BigInt) -> Option<Coord> {
    (a.is_integer() && b.is_integer()).then(|| Coord(BigRational::from_integer(op(a.numer(), b.numer()))))
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $fast:expr) => {
        impl $trait<Coord> for Coord {
            type Output = Coord;
            fn $method(self, rhs: Coord) -> Coord {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a Coord> for Coord {
            type Output = Coord;
            fn $method(self, rhs: &'a Coord) -> Coord {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<Coord> for &'a Coord {
            type Output = Coord;
            fn $method(self, rhs: Coord) -> Coord {
                self.$method(&rhs)
            }
        }
        impl<'a, 'b> $trait<&'b Coord> for &'a Coord {
            type Output = Coord;
            fn $method(self, rhs: &'b Coord) -> Coord {
                let fast: Option<fn(&BigInt, &BigInt) -> BigInt> = $fast;
                fast.and_then(|f| integer_fast_path(&self.0, &rhs.0, f))
                    .unwrap_or_else(|| Coord((&self.0).$method(&rhs.0)))
            }
        }
    };
}

forward_binop!(Add, add, Some(|a, b| a + b));
forward_binop!(Sub, sub, Some(|a, b| a - b));
forward_binop!(Mul, mul, Some(|a, b| a * b));
forward_binop!(Div, div, None);

impl Neg for Coord {
    type Output = Coord;
    fn neg(self) -> Coord {
        Coord(-self.0)
    }
}

impl Neg for &Coord {
    type Output = Coord;
    fn neg(self) -> Coord {
        Coord(-&self.0)
    }
}

impl AddAssign<&Coord> for Coord {
    fn add_assign(&mut self, rhs: &Coord) {
        *self = &*self + rhs;
    }
}

impl AddAssign<Coord> for Coord {
    fn add_assign(&mut self, rhs: Coord) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&Coord> for Coord {
    fn sub_assign(&mut self, rhs: &Coord) {
        *self = &*self - rhs;
    }
}

impl Sum for Coord {
    fn sum<I: Iterator<Item = Coord>>(iter: I) -> Coord {
        iter.fold(Coord::zero(), |acc, x| &acc + &x)
    }
}

impl<'a> Sum<&'a Coord> for Coord {
    fn sum<I: Iterator<Item = &'a Coord>>(iter: I) -> Coord {
        iter.fold(Coord::zero(), |acc, x| acc + x)
    }
}
