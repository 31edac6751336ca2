//! Minimal exact rational numbers.
//!
//! The modified weights lambda(a,b) live in (1/3q)Z, so a tiny reduced
//! fraction over i128 is all the table machinery needs.

use std::cmp::Ordering;
use std::fmt;

/// A reduced fraction `num/den` with `den > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i128,
    den: i128,
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    /// Build `num/den`, reduced. Panics if `den == 0`.
    pub fn new(num: i128, den: i128) -> Self {
        assert!(den != 0, "rational with zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Rational {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn from_int(n: i128) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn numerator(&self) -> i128 {
        self.num
    }

    pub fn denominator(&self) -> i128 {
        self.den
    }

    pub fn add(&self, other: &Rational) -> Rational {
        Rational::new(
            self.num * other.den + other.num * self.den,
            self.den * other.den,
        )
    }

    pub fn sub(&self, other: &Rational) -> Rational {
        Rational::new(
            self.num * other.den - other.num * self.den,
            self.den * other.den,
        )
    }

    pub fn mul(&self, other: &Rational) -> Rational {
        Rational::new(self.num * other.num, self.den * other.den)
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// The value as an integer, if the fraction is integral.
    pub fn to_integer(&self) -> Option<i128> {
        self.is_integer().then_some(self.num)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // denominators are positive, so cross-multiplication preserves order
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_sign() {
        assert_eq!(Rational::new(6, -4), Rational::new(-3, 2));
        assert_eq!(Rational::new(0, 5), Rational::from_int(0));
        assert_eq!(Rational::new(63, 4).to_string(), "63/4");
        assert_eq!(Rational::new(-9, 3).to_string(), "-3");
    }

    #[test]
    fn arithmetic() {
        let a = Rational::new(63, 4);
        let b = Rational::new(31, 4);
        assert_eq!(a.sub(&b), Rational::from_int(8));
        assert_eq!(a.add(&b).to_string(), "47/2");
        assert_eq!(b.mul(&Rational::from_int(4)), Rational::from_int(31));
        assert!(b < a);
    }

    #[test]
    fn integrality() {
        assert_eq!(Rational::new(12, 4).to_integer(), Some(3));
        assert_eq!(Rational::new(13, 4).to_integer(), None);
    }
}
