//! Exact characteristic polynomials of integer matrices.
//!
//! Faddeev–LeVerrier: with `M_0 = 0` and `c_n = 1`,
//!
//! ```text
//! M_k     = A M_{k-1} + c_{n-k+1} I
//! c_{n-k} = -tr(A M_k) / k
//! ```
//!
//! For an integer matrix every division is exact. The recurrence first runs
//! in checked `i128` and restarts over `BigInt` on overflow.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::poly::IntPoly;
use crate::construct::SymMatrix;

trait Scalar: Clone + Sized {
    fn from_i64(x: i64) -> Self;
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Option<Self>;
    fn mul_small(&self, k: i64) -> Option<Self>;
    /// `-self / k`, defined only when `k` divides `self`.
    fn neg_div_exact(&self, k: i64) -> Option<Self>;
    fn into_big(self) -> BigInt;
}

impl Scalar for i128 {
    fn from_i64(x: i64) -> Self {
        i128::from(x)
    }
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add(&self, rhs: &Self) -> Option<Self> {
        self.checked_add(*rhs)
    }
    fn mul_small(&self, k: i64) -> Option<Self> {
        self.checked_mul(i128::from(k))
    }
    fn neg_div_exact(&self, k: i64) -> Option<Self> {
        let k = i128::from(k);
        (self % k == 0).then(|| -(self / k))
    }
    fn into_big(self) -> BigInt {
        BigInt::from(self)
    }
}

impl Scalar for BigInt {
    fn from_i64(x: i64) -> Self {
        BigInt::from(x)
    }
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Option<Self> {
        Some(self + rhs)
    }
    fn mul_small(&self, k: i64) -> Option<Self> {
        Some(self * k)
    }
    fn neg_div_exact(&self, k: i64) -> Option<Self> {
        let (q, r) = self.div_rem(&BigInt::from(k));
        Zero::is_zero(&r).then(|| -q)
    }
    fn into_big(self) -> BigInt {
        self
    }
}

/// `det(xI − A)`, monic of degree `order`.
pub fn charpoly_exact(mat: &SymMatrix) -> IntPoly {
    let n = mat.order();
    // Sparse rows of A: (column, value) for non-zero entries.
    let rows: Vec<Vec<(usize, i64)>> = (0..n)
        .map(|i| {
            mat.row(i)
                .iter()
                .enumerate()
                .filter(|(_, &a)| a != 0)
                .map(|(j, &a)| (j, a))
                .collect()
        })
        .collect();
    if let Some(c) = faddeev_leverrier::<i128>(n, &rows) {
        return IntPoly::new(c.into_iter().map(Scalar::into_big).collect());
    }
    let c = faddeev_leverrier::<BigInt>(n, &rows)
        .expect("Faddeev-LeVerrier divisions are exact over the integers");
    IntPoly::new(c)
}

/// Ascending coefficients `c_0..=c_n`, or `None` on overflow.
fn faddeev_leverrier<T: Scalar>(n: usize, rows: &[Vec<(usize, i64)>]) -> Option<Vec<T>> {
    let mut c = vec![T::zero(); n + 1];
    c[n] = T::from_i64(1);
    let mut m = vec![T::zero(); n * n];
    let mut next = vec![T::zero(); n * n];
    for k in 1..=n {
        // next = A · M_{k-1} + c_{n-k+1} I
        for (i, row) in rows.iter().enumerate() {
            let out = &mut next[i * n..(i + 1) * n];
            out.iter_mut().for_each(|x| *x = T::zero());
            for &(j, a) in row {
                let src = &m[j * n..(j + 1) * n];
                for (o, s) in out.iter_mut().zip(src) {
                    if !s.is_zero() {
                        *o = o.add(&s.mul_small(a)?)?;
                    }
                }
            }
            out[i] = out[i].add(&c[n - k + 1])?;
        }
        core::mem::swap(&mut m, &mut next);
        // tr(A M_k) = Σ_i Σ_j A_ij M_k[j][i]
        let mut tr = T::zero();
        for (i, row) in rows.iter().enumerate() {
            for &(j, a) in row {
                let x = &m[j * n + i];
                if !x.is_zero() {
                    tr = tr.add(&x.mul_small(a)?)?;
                }
            }
        }
        c[n - k] = tr.neg_div_exact(k as i64)?;
    }
    Some(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> SymMatrix {
        SymMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(
            charpoly_exact(&m(&[&[0, 1], &[1, 0]])),
            IntPoly::from_i64(&[-1, 0, 1])
        );
        assert_eq!(
            charpoly_exact(&m(&[&[1, 1], &[1, 1]])),
            IntPoly::from_i64(&[0, -2, 1])
        );
        assert_eq!(
            charpoly_exact(&m(&[&[0, 1, 1], &[1, 1, 0], &[1, 0, 1]])),
            IntPoly::from_i64(&[2, -1, -2, 1])
        );
        assert_eq!(charpoly_exact(&SymMatrix::zeros(0)), IntPoly::one());
    }

    #[test]
    fn bigint_fallback_agrees() {
        // Large entries force the i128 path to overflow.
        let big = SymMatrix::from_fn(12, |i, j| if i == j { 1 << 40 } else { 3 + (i + j) as i64 });
        let rows: Vec<Vec<(usize, i64)>> = (0..12)
            .map(|i| big.row(i).iter().copied().enumerate().collect())
            .collect();
        assert!(faddeev_leverrier::<i128>(12, &rows).is_none());
        let p = charpoly_exact(&big);
        assert!(p.is_monic());
        assert_eq!(p.degree(), Some(12));
        // -c_{n-1} = trace
        assert_eq!(-p.coeff(11), BigInt::from(12i64 << 40));

        let small = SymMatrix::from_fn(5, |i, j| ((i + j + i * j) % 3) as i64 - 1);
        let rows: Vec<Vec<(usize, i64)>> = (0..5)
            .map(|i| small.row(i).iter().copied().enumerate().collect())
            .collect();
        let a: Vec<BigInt> = faddeev_leverrier::<i128>(5, &rows)
            .unwrap()
            .into_iter()
            .map(BigInt::from)
            .collect();
        let b = faddeev_leverrier::<BigInt>(5, &rows).unwrap();
        assert_eq!(a, b);
    }
}
