use num_bigint::BigInt;
use proptest::prelude::*;
use selfloop_core::bounds::{evaluate_all, BoundId, Verdict};
use selfloop_core::construct::{adjacency, complement, incidence, line_graph, signless_laplacian, SymMatrix};
use selfloop_core::graph::{LoopSet, LoopedGraph, SimpleGraph};
use selfloop_core::invariants::{
    check_interlacing, check_shift_interlacing, trace_identities, zagreb_identity_gap,
};
use selfloop_core::numerics::{
    charpoly_exact, closed_form_kn_sigma_spectrum, eig_sym, spectrum, verify_linegraph_identity,
};

fn looped_graph(max_n: usize) -> impl Strategy<Value = LoopedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), any::<u64>(), any::<u64>()).prop_map(move |(n, edges, loops)| {
            let mask = if pairs == 64 {
                edges
            } else {
                edges & ((1u64 << pairs) - 1)
            };
            let g = SimpleGraph::from_edge_mask(n, mask);
            LoopedGraph::new(g, LoopSet::from_mask(loops & ((1u64 << n) - 1))).unwrap()
        })
    })
}

fn int_matrix(max_n: usize) -> impl Strategy<Value = SymMatrix> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(-3i64..=3, n * n)
            .prop_map(move |v| SymMatrix::from_fn(n, |i, j| v[i.min(j) * n + i.max(j)]))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn charpoly_vanishes_on_spectrum(a in int_matrix(10)) {
        let p = charpoly_exact(&a);
        prop_assert!(p.is_monic());
        prop_assert_eq!(p.degree(), Some(a.order()));
        let n = a.order();
        // Newton identities: p₁ = tr A, p₂ = ‖A‖²_F.
        let c1 = -p.coeff(n - 1);
        prop_assert_eq!(c1.clone(), BigInt::from(a.trace()));
        if n >= 2 {
            let p2 = &c1 * &c1 - BigInt::from(2) * p.coeff(n - 2);
            prop_assert_eq!(p2, BigInt::from(a.frobenius_sq()));
        }
        let spec = eig_sym(&a).unwrap().spectrum;
        let scale = p.l1_norm();
        for &l in spec.values() {
            prop_assert!(p.eval_f64(l).abs() <= 1e-6 * scale, "P({l}) = {}", p.eval_f64(l));
        }
    }

    #[test]
    fn trace_and_zagreb_identities(gs in looped_graph(9)) {
        prop_assert!(trace_identities(&gs).is_ok());
        prop_assert_eq!(zagreb_identity_gap(&gs), 0);
    }

    #[test]
    fn incidence_identities(gs in looped_graph(8)) {
        let b = incidence(&gs);
        prop_assert_eq!(b.gram_rows(), signless_laplacian(&gs));
        let m = gs.size();
        if let Ok(line) = line_graph(&gs) {
            let a = adjacency(&line.graph);
            let expected = SymMatrix::from_fn(a.order(), |i, j| {
                a.get(i, j) + if i == j && i < m { 2 } else { 0 }
            });
            prop_assert_eq!(b.gram_cols(), expected);
        }
    }

    #[test]
    fn line_graph_min_eigenvalue(gs in looped_graph(9)) {
        if let Ok(line) = line_graph(&gs) {
            let s = spectrum(&adjacency(&line.graph)).unwrap();
            prop_assert!(s.smallest() >= -2.0 - 1e-9);
        }
    }

    #[test]
    fn interlacing_chains(gs in looped_graph(9), keep in any::<u64>()) {
        let n = gs.order();
        let vertices: Vec<usize> = (0..n).filter(|v| keep >> v & 1 == 1).collect();
        if !vertices.is_empty() {
            prop_assert!(check_interlacing(&gs, &vertices).unwrap().holds);
        }
        let shift = check_shift_interlacing(gs.base(), gs.loops()).unwrap();
        prop_assert!(shift.holds());
        if gs.sigma() == 0 {
            prop_assert!(shift.left_gap <= 1e-9);
        }
        if gs.sigma() == n {
            prop_assert!(shift.right_gap <= 1e-9);
        }
    }

    #[test]
    fn complement_is_an_involution(gs in looped_graph(9)) {
        prop_assert_eq!(complement(&complement(&gs)), gs);
    }

    #[test]
    fn catalog_never_violated(gs in looped_graph(10)) {
        for r in evaluate_all(&gs).unwrap() {
            prop_assert!(r.verdict != Verdict::Violated, "{} on {:?}: {:?}", r.id, gs, r.evaluation);
            prop_assert!(r.id != BoundId::B11 || r.verdict != Verdict::NearTie);
        }
    }

    #[test]
    fn linegraph_identity_random(gs in looped_graph(7)) {
        if gs.size() > 0 {
            prop_assert!(verify_linegraph_identity(gs.base()).unwrap().equal);
        }
    }
}

#[test]
fn kn_sigma_closed_forms_up_to_12() {
    for n in 1..=12 {
        for sigma in 0..=n {
            let gs = LoopedGraph::new(SimpleGraph::complete(n), LoopSet::first(sigma)).unwrap();
            let numeric = spectrum(&adjacency(&gs)).unwrap();
            let closed = closed_form_kn_sigma_spectrum(n, sigma).unwrap();
            assert!(numeric.multiset_distance(&closed) <= 1e-9, "n={n} sigma={sigma}");
        }
    }
}

#[test]
fn exhaustive_order_four_catalog() {
    for n in 1..=4usize {
        let pairs = n * (n - 1) / 2;
        for edges in 0..1u64 << pairs {
            for loops in 0..1u64 << n {
                let gs = LoopedGraph::new(SimpleGraph::from_edge_mask(n, edges), LoopSet::from_mask(loops))
                    .unwrap();
                for r in evaluate_all(&gs).unwrap() {
                    assert_ne!(
                        r.verdict,
                        Verdict::Violated,
                        "{} on {gs:?}: {:?}",
                        r.id,
                        r.evaluation
                    );
                    assert_ne!(r.verdict, Verdict::NearTie, "{} on {gs:?}", r.id);
                }
            }
        }
    }
}
