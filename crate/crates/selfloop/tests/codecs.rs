mod common;

use proptest::prelude::*;
use selfloop::graph6::{parse_graph6, print_graph6, MAX_ORDER};
use selfloop::loopline::{parse_loopline, print_loopline};
use selfloop_core::graph::{LoopSet, LoopedGraph, SimpleGraph};

#[test]
fn graph6_fixtures_round_trip() {
    let fixtures = common::fixtures();
    assert!(fixtures.len() >= 50);
    for n in [1, 2, MAX_ORDER] {
        assert!(fixtures.iter().any(|f| f.n == n), "no fixture of order {n}");
    }
    for f in &fixtures {
        let g = parse_graph6(&f.g6).unwrap();
        assert_eq!((g.order(), g.size()), (f.n, f.m), "{}", f.g6);
        let mut edges = f.edges.clone();
        edges.sort();
        assert_eq!(g.edges(), &edges[..], "{}", f.g6);
        assert_eq!(print_graph6(&g).unwrap(), f.g6);
    }
}

#[test]
fn graph6_rejects_malformed_input() {
    for bad in ["", "D?", "A`", "Bw?", "~??~", "A\u{7f}", "}"] {
        assert!(parse_graph6(bad).is_err(), "{bad:?}");
    }
    assert!(print_graph6(&SimpleGraph::empty(MAX_ORDER + 1)).is_err());
}

#[test]
fn loopline_canonical_forms() {
    let gs = parse_loopline("Bw |  2 , 0 ").unwrap();
    assert_eq!(print_loopline(&gs).unwrap(), "Bw | 0,2");
    assert_eq!(
        print_loopline(&parse_loopline("Bw | 0,1,2").unwrap()).unwrap(),
        "Bw | *"
    );
    assert_eq!(
        print_loopline(&parse_loopline("? | *").unwrap()).unwrap(),
        "? | -"
    );
    let piped = parse_loopline("C| | 3").unwrap();
    assert_eq!((piped.order(), piped.size(), piped.sigma()), (4, 5, 1));
    assert_eq!(print_loopline(&piped).unwrap(), "C| | 3");
    for bad in ["Bw", "Bw | 3", "Bw | 1,1", "Bw | x", "Bw | 0 | 1"] {
        assert!(parse_loopline(bad).is_err(), "{bad:?}");
    }
}

fn looped_graph() -> impl Strategy<Value = LoopedGraph> {
    (0..=MAX_ORDER).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (
            prop::collection::vec(any::<bool>(), pairs),
            prop::collection::vec(any::<bool>(), n),
        )
            .prop_map(move |(edges, loops)| {
                let pairs = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
                let g = SimpleGraph::new(n, pairs.zip(edges).filter(|p| p.1).map(|p| p.0)).unwrap();
                let s = LoopSet::from_indices((0..n).filter(|&v| loops[v])).unwrap();
                LoopedGraph::new(g, s).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn loopline_round_trip(gs in looped_graph()) {
        let line = print_loopline(&gs).unwrap();
        let back = parse_loopline(&line).unwrap();
        prop_assert_eq!(&back, &gs);
        prop_assert_eq!(print_loopline(&back).unwrap(), line);
    }
}
