//! Dense symmetric eigensolver: Householder tridiagonalization followed by
//! the implicit QL iteration (EISPACK `tred2`/`tql2`, via JAMA).

use alloc::vec;
use alloc::vec::Vec;

use libm::{hypot, sqrt};

use crate::construct::SymMatrix;
use crate::{Error, Result, SPECTRAL_TOL};

/// Per-order sweep budget for the QL iteration.
const SWEEPS_PER_ORDER: usize = 50;

/// Real eigenvalues sorted in descending order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    /// Absolute tolerance the spectrum was verified against.
    pub tol: f64,
}

impl Spectrum {
    /// Sorts `values` descending.
    pub fn new(mut values: Vec<f64>, tol: f64) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum { values, tol }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `λ_i`, 1-based as in the usual ordering `λ_1 ≥ … ≥ λ_n`.
    pub fn lambda(&self, i: usize) -> f64 {
        self.values[i - 1]
    }

    /// Spectral radius `λ_1`.
    pub fn largest(&self) -> f64 {
        self.values[0]
    }

    pub fn smallest(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn sum_sq(&self) -> f64 {
        self.values.iter().map(|x| x * x).sum()
    }

    /// Largest pairwise gap after sorting both spectra; infinite when the
    /// lengths differ.
    pub fn multiset_distance(&self, other: &Spectrum) -> f64 {
        if self.len() != other.len() {
            return f64::INFINITY;
        }
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub spectrum: Spectrum,
    /// Orthonormal eigenvectors as columns (row-major `n × n`), in the order
    /// of `spectrum`.
    pub vectors: Vec<f64>,
    /// Largest `‖A v − λ v‖∞` seen on the verification pass.
    pub residual: f64,
}

/// Absolute tolerance for a matrix of this order and infinity norm.
pub fn tolerance(order: usize, norm_inf: f64) -> f64 {
    if order <= 64 {
        SPECTRAL_TOL
    } else {
        SPECTRAL_TOL * norm_inf.max(1.0)
    }
}

fn norm_inf(order: usize, a: &[f64]) -> f64 {
    a.chunks(order.max(1))
        .map(|row| row.iter().map(|x| x.abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Full eigendecomposition of an integer symmetric matrix, with every
/// eigenpair checked against `‖A v − λ v‖∞ ≤ 1e−9 · max(1, ‖A‖∞)`.
pub fn eig_sym(mat: &SymMatrix) -> Result<EigenDecomposition> {
    eig_sym_f64(mat.order(), &mat.to_f64())
}

pub fn eig_sym_f64(order: usize, a: &[f64]) -> Result<EigenDecomposition> {
    if order == 0 {
        return Err(Error::EmptyGraph);
    }
    assert_eq!(a.len(), order * order, "matrix data does not match its order");
    let n = order;
    let mut v = a.to_vec();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tred2(n, &mut v, &mut d, &mut e, true);
    tql2(n, &mut d, &mut e, Some(&mut v))?;

    // Reorder columns descending.
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| d[j].total_cmp(&d[i]));
    let values: Vec<f64> = idx.iter().map(|&i| d[i]).collect();
    let mut vectors = vec![0.0; n * n];
    for (col, &src) in idx.iter().enumerate() {
        for k in 0..n {
            vectors[k * n + col] = v[k * n + src];
        }
    }

    let norm = norm_inf(n, a);
    let bound = SPECTRAL_TOL * norm.max(1.0);
    let mut residual: f64 = 0.0;
    for (col, &lambda) in values.iter().enumerate() {
        for i in 0..n {
            let av: f64 = (0..n).map(|k| a[i * n + k] * vectors[k * n + col]).sum();
            residual = residual.max((av - lambda * vectors[i * n + col]).abs());
        }
    }
    if residual > bound {
        return Err(Error::Residual {
            residual,
            tolerance: bound,
        });
    }
    Ok(EigenDecomposition {
        spectrum: Spectrum {
            values,
            tol: tolerance(n, norm),
        },
        vectors,
        residual,
    })
}

/// Eigenvalues only. Cheaper than [`eig_sym`]; the result is checked
/// against the trace and Frobenius identities `Σλ = tr A`, `Σλ² = ‖A‖²_F`.
pub fn spectrum(mat: &SymMatrix) -> Result<Spectrum> {
    spectrum_f64(mat.order(), &mat.to_f64())
}

pub fn spectrum_f64(order: usize, a: &[f64]) -> Result<Spectrum> {
    if order == 0 {
        return Err(Error::EmptyGraph);
    }
    assert_eq!(a.len(), order * order, "matrix data does not match its order");
    let n = order;
    let mut v = a.to_vec();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tred2(n, &mut v, &mut d, &mut e, false);
    tql2(n, &mut d, &mut e, None)?;

    let norm = norm_inf(n, a);
    let tol = tolerance(n, norm);
    let spec = Spectrum::new(d, tol);
    let trace: f64 = (0..n).map(|i| a[i * n + i]).sum();
    let frob: f64 = a.iter().map(|x| x * x).sum();
    let sum = spec.sum();
    if (sum - trace).abs() > tol * n as f64 {
        return Err(Error::NumericIntegrity {
            check: "eigenvalue sum equals trace",
            got: sum,
            expected: trace,
        });
    }
    let sum_sq = spec.sum_sq();
    if (sum_sq - frob).abs() > tol * n as f64 * norm.max(1.0) {
        return Err(Error::NumericIntegrity {
            check: "eigenvalue square sum equals squared Frobenius norm",
            got: sum_sq,
            expected: frob,
        });
    }
    Ok(spec)
}

pub fn spectral_radius(mat: &SymMatrix) -> Result<f64> {
    Ok(spectrum(mat)?.largest())
}

pub fn min_eigenvalue(mat: &SymMatrix) -> Result<f64> {
    Ok(spectrum(mat)?.smallest())
}

/// Householder reduction to tridiagonal form. On return `d` holds the
/// diagonal and `e[1..]` the subdiagonal. With `vectors`, `v` holds the
/// accumulated orthogonal transform.
fn tred2(n: usize, v: &mut [f64], d: &mut [f64], e: &mut [f64], vectors: bool) {
    for j in 0..n {
        d[j] = v[(n - 1) * n + j];
    }

    for i in (1..n).rev() {
        let mut scale = 0.0;
        let mut h = 0.0;
        for x in &d[..i] {
            scale += x.abs();
        }
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[(i - 1) * n + j];
                v[i * n + j] = 0.0;
                v[j * n + i] = 0.0;
            }
        } else {
            for x in &mut d[..i] {
                *x /= scale;
                h += *x * *x;
            }
            let mut f = d[i - 1];
            let mut g = sqrt(h);
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for ej in e.iter_mut().take(i) {
                *ej = 0.0;
            }

            for j in 0..i {
                f = d[j];
                v[j * n + i] = f;
                g = e[j] + v[j * n + j] * f;
                for k in j + 1..i {
                    g += v[k * n + j] * d[k];
                    e[k] += v[k * n + j] * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                for k in j..i {
                    v[k * n + j] -= f * e[k] + g * d[k];
                }
                d[j] = v[(i - 1) * n + j];
                v[i * n + j] = 0.0;
            }
        }
        d[i] = h;
    }

    if !vectors {
        for j in 0..n {
            d[j] = v[j * n + j];
        }
        e[0] = 0.0;
        return;
    }

    for i in 0..n - 1 {
        v[(n - 1) * n + i] = v[i * n + i];
        v[i * n + i] = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = v[k * n + i + 1] / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += v[k * n + i + 1] * v[k * n + j];
                }
                for k in 0..=i {
                    v[k * n + j] -= g * d[k];
                }
            }
        }
        for k in 0..=i {
            v[k * n + i + 1] = 0.0;
        }
    }
    for j in 0..n {
        d[j] = v[(n - 1) * n + j];
        v[(n - 1) * n + j] = 0.0;
    }
    v[(n - 1) * n + n - 1] = 1.0;
    e[0] = 0.0;
}

/// Implicit QL on the tridiagonal `(d, e)`; eigenvalues land in `d`
/// (unsorted).
fn tql2(n: usize, d: &mut [f64], e: &mut [f64], mut v: Option<&mut [f64]>) -> Result<()> {
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let cap = SWEEPS_PER_ORDER * n;
    let mut iterations = 0;
    let mut f = 0.0;
    let mut tst1: f64 = 0.0;
    let eps = f64::EPSILON;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 && e[m].abs() > eps * tst1 {
            m += 1;
        }

        if m > l {
            loop {
                iterations += 1;
                if iterations > cap {
                    return Err(Error::NoConvergence {
                        order: n,
                        iterations: cap,
                    });
                }
                let mut g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = hypot(p, 1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for di in d.iter_mut().take(n).skip(l + 2) {
                    *di -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = hypot(p, e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    if let Some(v) = v.as_deref_mut() {
                        for k in 0..n {
                            let hk = v[k * n + i + 1];
                            v[k * n + i + 1] = s * v[k * n + i] + c * hk;
                            v[k * n + i] = c * v[k * n + i] - s * hk;
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;

                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(())
}
