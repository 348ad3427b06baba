//! Exact arithmetic in `Q(√D)` for a fixed non-negative integer `D`.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{Signed, Zero};

pub type Q = Ratio<i128>;

/// `a + b√D`. Values with different radicands must not be mixed.
#[derive(Debug, Clone, Copy)]
pub struct Surd {
    pub a: Q,
    pub b: Q,
    pub d: i128,
}

impl Surd {
    pub fn new(a: Q, b: Q, d: i128) -> Self {
        assert!(d >= 0, "negative radicand");
        Surd { a, b, d }
    }

    pub fn rational(a: Q, d: i128) -> Self {
        Self::new(a, Q::zero(), d)
    }

    /// `√D` itself.
    pub fn root(d: i128) -> Self {
        Self::new(Q::zero(), Q::from_integer(1), d)
    }

    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Q::zero());
        let sb = if self.d == 0 {
            Ordering::Equal
        } else {
            self.b.cmp(&Q::zero())
        };
        match (sa, sb) {
            (x, Ordering::Equal) => x,
            (Ordering::Equal, y) => y,
            (x, y) if x == y => x,
            // Opposite signs: compare a² with b²D.
            (x, _) => {
                let lhs = self.a * self.a;
                let rhs = self.b * self.b * Q::from_integer(self.d);
                match lhs.cmp(&rhs) {
                    Ordering::Greater => x,
                    Ordering::Less => x.reverse(),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    pub fn abs(&self) -> Surd {
        if self.signum() == Ordering::Less {
            -*self
        } else {
            *self
        }
    }

    pub fn scale(&self, k: Q) -> Surd {
        Surd::new(self.a * k, self.b * k, self.d)
    }

    pub fn to_f64(&self) -> f64 {
        let f = |x: &Q| *x.numer() as f64 / *x.denom() as f64;
        let (a, b) = (f(&self.a), f(&self.b));
        a + b * libm::sqrt(self.d as f64)
    }

    fn check(&self, rhs: &Surd) {
        assert_eq!(self.d, rhs.d, "mixed radicands");
    }
}

impl PartialEq for Surd {
    fn eq(&self, other: &Surd) -> bool {
        (*self - *other).signum() == Ordering::Equal
    }
}

impl Add for Surd {
    type Output = Surd;
    fn add(self, rhs: Surd) -> Surd {
        self.check(&rhs);
        Surd::new(self.a + rhs.a, self.b + rhs.b, self.d)
    }
}

impl Sub for Surd {
    type Output = Surd;
    fn sub(self, rhs: Surd) -> Surd {
        self + (-rhs)
    }
}

impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd::new(-self.a, -self.b, self.d)
    }
}

impl Mul for Surd {
    type Output = Surd;
    fn mul(self, rhs: Surd) -> Surd {
        self.check(&rhs);
        let d = Q::from_integer(self.d);
        Surd::new(
            self.a * rhs.a + self.b * rhs.b * d,
            self.a * rhs.b + self.b * rhs.a,
            self.d,
        )
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() || self.d == 0 {
            return write!(f, "{}", self.a);
        }
        let sign = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "{} {} {}·√{}", self.a, sign, self.b.abs(), self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i128, d: i128) -> Q {
        Q::new(n, d)
    }

    #[test]
    fn signs() {
        // 3 - √8 > 0, 2 - √8 < 0, 3 - √9 = 0
        assert_eq!(Surd::new(q(3, 1), q(-1, 1), 8).signum(), Ordering::Greater);
        assert_eq!(Surd::new(q(2, 1), q(-1, 1), 8).signum(), Ordering::Less);
        assert_eq!(Surd::new(q(3, 1), q(-1, 1), 9).signum(), Ordering::Equal);
        assert_eq!(Surd::new(q(-1, 2), q(1, 3), 3).signum(), Ordering::Greater);
        assert_eq!(Surd::root(0).signum(), Ordering::Equal);
    }

    #[test]
    fn arithmetic() {
        let r2 = Surd::root(2);
        assert_eq!(r2 * r2, Surd::rational(q(2, 1), 2));
        let x = Surd::new(q(1, 1), q(1, 1), 2);
        assert_eq!((x - r2).abs(), Surd::rational(q(1, 1), 2));
        assert_eq!((-x).abs(), x);
        assert!((x.to_f64() - (1.0 + 2f64.sqrt())).abs() < 1e-15);
        // A perfect-square radicand still compares by value.
        assert_eq!(Surd::root(16), Surd::rational(q(4, 1), 16));
    }
}
