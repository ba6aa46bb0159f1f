use pfs_core::graph::Graph;
use proptest::prelude::*;

/// Random simple graph on `1..=max_n` vertices.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
        let len = pairs.len();
        (proptest::collection::vec(any::<bool>(), len), Just(pairs), Just(n)).prop_map(|(mask, pairs, n)| {
            let edges = pairs.into_iter().zip(mask).filter(|(_, keep)| *keep).map(|(e, _)| e).collect();
            Graph::new(n, edges).unwrap()
        })
    })
}
