//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Coefficients in ascending degree; no trailing zeros, so the zero
/// polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `x`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `x - r`.
    pub fn linear_root(r: i64) -> Self {
        Self::from_i64(&[-r, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `‖p‖₁`, as a float.
    pub fn l1_norm(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY))
            .sum()
    }

    /// Horner evaluation in floating point.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, exp: u32) -> IntPoly {
        let mut result = IntPoly::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `den^clear · p(num / den)`, which is an integer polynomial whenever
    /// `clear ≥ deg p`.
    pub fn compose_rational(&self, num: &IntPoly, den: &IntPoly, clear: usize) -> Result<IntPoly> {
        if den.is_zero() {
            return Err(Error::Domain("denominator polynomial is zero"));
        }
        let Some(degree) = self.degree() else {
            return Ok(IntPoly::zero());
        };
        if clear < degree {
            return Err(Error::ClearDegree { clear, degree });
        }
        // Σ c_k num^k den^(clear-k), with powers built incrementally.
        let mut num_pows = Vec::with_capacity(degree + 1);
        num_pows.push(IntPoly::one());
        for k in 1..=degree {
            num_pows.push(&num_pows[k - 1] * num);
        }
        let mut acc = IntPoly::zero();
        let mut den_pow = den.pow((clear - degree) as u32);
        for k in (0..=degree).rev() {
            let c = &self.coeffs[k];
            if !c.is_zero() {
                acc = &acc + &(&num_pows[k] * &den_pow).scale(c);
            }
            if k > 0 {
                den_pow = &den_pow * den;
            }
        }
        Ok(acc)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $f(self, rhs: IntPoly) -> IntPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn compose_identity() {
        let num = p(&[-2, -1, 1]);
        let den = IntPoly::x();
        let got = IntPoly::x().compose_rational(&num, &den, 1).unwrap();
        assert_eq!(got, num);
    }

    #[test]
    fn product_and_power() {
        assert_eq!(&p(&[-1, 1]) * &p(&[-2, -1, 1]), p(&[2, -1, -2, 1]));
        assert_eq!(p(&[-1, 1]).pow(0), IntPoly::one());
        assert_eq!(p(&[1, 1]).pow(3), p(&[1, 3, 3, 1]));
    }

    #[test]
    fn add_sub_trim() {
        let a = p(&[1, 2, 3]);
        assert!((&a - &a).is_zero());
        assert_eq!((&a + &p(&[0, 0, -3])).degree(), Some(1));
        assert_eq!(-&a, p(&[-1, -2, -3]));
    }

    #[test]
    fn compose_clear_degree() {
        // x^2 at (x+1)/x, cleared by x^3: x (x+1)^2.
        let got = p(&[0, 0, 1])
            .compose_rational(&p(&[1, 1]), &IntPoly::x(), 3)
            .unwrap();
        assert_eq!(got, p(&[0, 1, 2, 1]));
        assert_eq!(
            p(&[0, 0, 1]).compose_rational(&p(&[1, 1]), &IntPoly::x(), 1),
            Err(Error::ClearDegree { clear: 1, degree: 2 })
        );
        assert!(p(&[1])
            .compose_rational(&IntPoly::x(), &IntPoly::zero(), 0)
            .is_err());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[2, -1, -2, 1]).to_string(), "x^3 - 2x^2 - x + 2");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(p(&[-1]).to_string(), "-1");
    }

    #[test]
    fn evaluation() {
        let q = p(&[2, -1, -2, 1]);
        for r in [2.0, 1.0, -1.0] {
            assert_eq!(q.eval_f64(r), 0.0);
        }
        assert_eq!(q.eval_int(&BigInt::from(3)), BigInt::from(8));
        assert_eq!(q.l1_norm(), 6.0);
    }
}
