//! Eigenvalues, exact characteristic polynomials and the line-graph
//! polynomial identity.

mod charpoly;
mod eigen;
mod poly;

use alloc::vec::Vec;

pub use charpoly::charpoly_exact;
pub use eigen::{
    eig_sym, eig_sym_f64, min_eigenvalue, spectral_radius, spectrum, spectrum_f64, tolerance,
    EigenDecomposition, Spectrum,
};
pub use poly::IntPoly;

use libm::sqrt;

use crate::construct::{adjacency, line_graph};
use crate::graph::{LoopedGraph, SimpleGraph};
use crate::{Error, Result, SPECTRAL_TOL};

/// Both sides of
/// `P_{L(Ĝ)}(λ) = (λ−1)^{n−m} λ^m P_{L(G)}((λ²−λ−2)/λ)`,
/// with any negative power of `(λ−1)` moved to the other side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineGraphIdentity {
    pub equal: bool,
    /// `(λ−1)^{max(m−n,0)} · P_{L(Ĝ)}(λ)`.
    pub lhs: IntPoly,
    /// `(λ−1)^{max(n−m,0)} · λ^m P_{L(G)}((λ²−λ−2)/λ)`.
    pub rhs: IntPoly,
}

pub fn verify_linegraph_identity(g: &SimpleGraph) -> Result<LineGraphIdentity> {
    let (n, m) = (g.order(), g.size());
    if m == 0 {
        return Err(Error::NoEdges);
    }
    let plain = line_graph(&LoopedGraph::loopless(g.clone()))?;
    let hat = line_graph(&LoopedGraph::full_loops(g.clone()))?;
    let p_plain = charpoly_exact(&adjacency(&plain.graph));
    let p_hat = charpoly_exact(&adjacency(&hat.graph));

    let num = IntPoly::from_i64(&[-2, -1, 1]);
    let composed = p_plain.compose_rational(&num, &IntPoly::x(), m)?;
    let shift = IntPoly::linear_root(1);
    let lhs = &p_hat * &shift.pow(m.saturating_sub(n) as u32);
    let rhs = &composed * &shift.pow(n.saturating_sub(m) as u32);
    Ok(LineGraphIdentity {
        equal: lhs == rhs,
        lhs,
        rhs,
    })
}

/// Closed-form spectrum of `K_n` with `σ` loops.
pub fn closed_form_kn_sigma_spectrum(n: usize, sigma: usize) -> Result<Spectrum> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if sigma > n {
        return Err(Error::Domain("sigma exceeds n"));
    }
    let nf = n as f64;
    let mut values = Vec::with_capacity(n);
    if sigma == 0 {
        values.push(nf - 1.0);
        values.extend(core::iter::repeat_n(-1.0, n - 1));
    } else if sigma == n {
        values.push(nf);
        values.extend(core::iter::repeat_n(0.0, n - 1));
    } else {
        let root = sqrt((nf - 1.0) * (nf - 1.0) + 4.0 * sigma as f64);
        values.push((nf - 1.0 + root) / 2.0);
        values.push((nf - 1.0 - root) / 2.0);
        values.extend(core::iter::repeat_n(0.0, sigma - 1));
        values.extend(core::iter::repeat_n(-1.0, n - sigma - 1));
    }
    Ok(Spectrum::new(values, SPECTRAL_TOL))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::SymMatrix;
    use crate::graph::Family;
    use alloc::vec;

    #[test]
    fn identity_k2() {
        let id = verify_linegraph_identity(&SimpleGraph::complete(2)).unwrap();
        assert!(id.equal);
        assert_eq!(id.lhs, IntPoly::from_i64(&[2, -1, -2, 1]));
    }

    #[test]
    fn identity_small_graphs() {
        for g in [
            SimpleGraph::complete(3),
            SimpleGraph::path(3),
            SimpleGraph::complete(5),
        ] {
            assert!(verify_linegraph_identity(&g).unwrap().equal);
        }
        assert_eq!(
            verify_linegraph_identity(&SimpleGraph::empty(3)),
            Err(Error::NoEdges)
        );
    }

    #[test]
    fn kn_sigma_closed_forms() {
        let s = closed_form_kn_sigma_spectrum(3, 1).unwrap();
        let r2 = 2f64.sqrt();
        let want = Spectrum::new(vec![1.0 + r2, -1.0, 1.0 - r2], 0.0);
        assert!(s.multiset_distance(&want) < 1e-12);
        assert_eq!(
            closed_form_kn_sigma_spectrum(3, 3).unwrap().values(),
            &[3.0, 0.0, 0.0]
        );
        assert_eq!(
            closed_form_kn_sigma_spectrum(4, 0).unwrap().values(),
            &[3.0, -1.0, -1.0, -1.0]
        );
        for n in 1..=8 {
            for sigma in 0..=n {
                let g = Family::KnSigma { n, sigma }.build().unwrap();
                let numeric = spectrum(&adjacency(&g)).unwrap();
                let closed = closed_form_kn_sigma_spectrum(n, sigma).unwrap();
                assert!(numeric.multiset_distance(&closed) <= 1e-9, "n={n} sigma={sigma}");
            }
        }
    }

    #[test]
    fn hat_kn_radius() {
        for n in 1..=7 {
            let a = adjacency(&Family::KnHat { n }.build().unwrap());
            assert!((spectral_radius(&a).unwrap() - n as f64).abs() < 1e-9);
        }
        assert_eq!(spectral_radius(&SymMatrix::zeros(2)).unwrap(), 0.0);
    }
}
