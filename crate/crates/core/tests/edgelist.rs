mod common;

use common::random_corpus;
use proptest::prelude::*;
use sts_core::io::{read_edgelist, write_edgelist, write_edgelist_with_comments};
use sts_core::{Error, Graph};

#[test]
fn round_trip_thousand() {
    for g in random_corpus(1000, 1..=20, &[0.1, 0.3, 0.6, 0.9], 99) {
        assert_eq!(read_edgelist(&write_edgelist(&g)).unwrap(), g);
    }
}

#[test]
fn comments_survive() {
    let g = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
    let text = write_edgelist_with_comments(&g, &["hello".into(), "world".into()]);
    assert!(text.starts_with("c hello\nc world\n"));
    assert_eq!(read_edgelist(&text).unwrap(), g);
}

#[test]
fn reference_examples() {
    let k3 = read_edgelist("p 3 3\ne 1 2\ne 2 3\ne 1 3").unwrap();
    assert_eq!((k3.n(), k3.m()), (3, 3));
    let two = read_edgelist("p 2 0").unwrap();
    assert_eq!((two.n(), two.m()), (2, 0));
    assert!(matches!(read_edgelist("p 2 1\ne 1 3"), Err(Error::Parse { line: 2, .. })));
}

proptest! {
    #[test]
    fn arbitrary_edges_round_trip(n in 1usize..15, raw in proptest::collection::vec((0usize..15, 0usize..15), 0..40)) {
        let edges: Vec<_> = raw.into_iter().map(|(u, v)| (u % n, v % n)).filter(|(u, v)| u != v).collect();
        let g = Graph::new(n, edges).unwrap();
        prop_assert_eq!(read_edgelist(&write_edgelist(&g)).unwrap(), g);
    }
}
