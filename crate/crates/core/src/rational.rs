//! Exact rational numbers for scores and thresholds.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Signed;

/// A fraction in lowest terms with a positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(Ratio<i128>);

impl Rational {
    pub const ZERO: Rational = Rational(Ratio::new_raw(0, 1));
    pub const ONE: Rational = Rational(Ratio::new_raw(1, 1));

    /// Panics if `den == 0`.
    pub fn new(num: i128, den: i128) -> Self {
        Rational(Ratio::new(num, den))
    }

    pub fn from_int(n: i128) -> Self {
        Rational(Ratio::from_integer(n))
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn floor(&self) -> i128 {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> i128 {
        self.0.ceil().to_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// `1 + 1/2 + ... + 1/i`, zero for `i == 0`.
    pub fn harmonic(i: usize) -> Self {
        (1..=i).fold(Rational::ZERO, |acc, j| acc + Rational::new(1, j as i128))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n as i128)
    }
}

impl From<usize> for Rational {
    fn from(n: usize) -> Self {
        Rational::from_int(n as i128)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0 - rhs.0)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0 * rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = String;

    /// Accepts `p`, `-p` and `p/q`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse = |t: &str| t.trim().parse::<i128>().map_err(|e| format!("{t:?}: {e}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let (n, d) = (parse(n)?, parse(d)?);
                if d == 0 {
                    return Err("zero denominator".into());
                }
                Ok(Rational::new(n, d))
            }
            None => Ok(Rational::from_int(parse(s)?)),
        }
    }
}

/// Exact PAV arithmetic over a common denominator.
///
/// Every harmonic number `H(i)` with `i <= max` is an integer multiple of
/// `1 / lcm(1..=max)`, so scores can be summed as plain integers and turned
/// back into a [`Rational`] at the end.
#[derive(Clone, Debug)]
pub struct HarmonicScale {
    lcm: i128,
    scaled: Vec<i128>,
}

impl HarmonicScale {
    pub fn new(max: usize) -> Self {
        let lcm = (1..=max.max(1) as i128).fold(1i128, |acc, i| acc.lcm(&i));
        let mut scaled = Vec::with_capacity(max + 1);
        scaled.push(0);
        for i in 1..=max as i128 {
            let prev = *scaled.last().unwrap();
            scaled.push(prev + lcm / i);
        }
        HarmonicScale { lcm, scaled }
    }

    pub fn max(&self) -> usize {
        self.scaled.len() - 1
    }

    pub fn denominator(&self) -> i128 {
        self.lcm
    }

    /// `H(i) * lcm`. Panics if `i` exceeds the table.
    #[inline]
    pub fn h(&self, i: usize) -> i128 {
        self.scaled[i]
    }

    /// `(H(i) - H(i-1)) * lcm`, i.e. `lcm / i`.
    #[inline]
    pub fn marginal(&self, i: usize) -> i128 {
        debug_assert!(i >= 1);
        self.lcm / i as i128
    }

    pub fn to_rational(&self, scaled: i128) -> Rational {
        Rational::new(scaled, self.lcm)
    }

    /// Smallest scaled integer `s` with `s / lcm >= d`.
    pub fn ceil_threshold(&self, d: Rational) -> i128 {
        (d * Rational::from_int(self.lcm)).ceil()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        let r = Rational::new(14, -4);
        assert_eq!((r.numer(), r.denom()), (-7, 2));
        assert_eq!(r.floor(), -4);
        assert_eq!(r.ceil(), -3);
        assert_eq!(Rational::new(7, 2).floor(), 3);
        assert_eq!(Rational::new(7, 2).ceil(), 4);
        assert_eq!(Rational::from_int(3).ceil(), 3);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("7/2".parse::<Rational>().unwrap(), Rational::new(7, 2));
        assert_eq!("-3".parse::<Rational>().unwrap(), Rational::from_int(-3));
        assert!("1/0".parse::<Rational>().is_err());
        assert_eq!(Rational::new(6, 4).to_string(), "3/2");
        assert_eq!(Rational::from_int(5).to_string(), "5");
    }

    #[test]
    fn harmonic_values() {
        assert_eq!(Rational::harmonic(0), Rational::ZERO);
        assert_eq!(Rational::harmonic(3), Rational::new(11, 6));
        let scale = HarmonicScale::new(4);
        assert_eq!(scale.denominator(), 12);
        for i in 0..=4 {
            assert_eq!(scale.to_rational(scale.h(i)), Rational::harmonic(i));
        }
        assert_eq!(scale.ceil_threshold(Rational::new(7, 5)), 17);
    }
}
