mod common;

use common::{all_graphs, book_opt, random_corpus};
use sts_core::generate::{complete, cycle, gen_maximal_outerplanar, gen_tight_family, path};
use sts_core::oracle::DEFAULT_BUDGET;
use sts_core::{exact_max_outerplanar, is_outerplanar, upper_bound, Graph};

fn opt(g: &Graph) -> usize {
    exact_max_outerplanar(g, DEFAULT_BUDGET).unwrap().opt
}

#[test]
fn matches_book_oracle() {
    for n in 1..=5 {
        for g in all_graphs(n) {
            assert_eq!(opt(&g), book_opt(&g), "{g:?}");
        }
    }
    for g in random_corpus(150, 6..=7, &[0.5, 0.7, 0.9], 8) {
        let res = exact_max_outerplanar(&g, DEFAULT_BUDGET).unwrap();
        assert_eq!(res.opt, book_opt(&g), "{g:?}");
        assert_eq!(res.witness.len(), res.opt);
        assert!(res.witness.iter().all(|&(u, v)| g.has_edge(u, v)));
        assert!(is_outerplanar(&g.spanning_subgraph(res.witness.iter().copied()).unwrap()));
        assert!(res.opt <= upper_bound(&g));
    }
}

#[test]
fn monotone_under_edge_addition() {
    for g in random_corpus(60, 5..=7, &[0.4, 0.6], 31) {
        let base = opt(&g);
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                if !g.has_edge(u, v) {
                    let h = g.with_edges([(u, v)]).unwrap();
                    let o = opt(&h);
                    assert!(o == base || o == base + 1, "{g:?} + ({u},{v})");
                    assert!(o <= upper_bound(&h));
                }
            }
        }
    }
}

#[test]
fn outerplanar_inputs_return_m() {
    for n in 2..=12 {
        let g = gen_maximal_outerplanar(n, n as u64).unwrap();
        assert_eq!(opt(&g), g.m());
    }
    for q in [3, 5, 7] {
        let g = gen_tight_family(q).unwrap();
        assert_eq!(opt(&g), g.m());
    }
}

#[test]
fn reference_examples() {
    assert_eq!(opt(&complete(4).unwrap()), 5);
    assert_eq!(opt(&cycle(4).unwrap()), 4);
    assert_eq!(opt(&complete(5).unwrap()), 7);
    assert_eq!(upper_bound(&complete(4).unwrap()), 5);
    assert_eq!(upper_bound(&path(7).unwrap()), 6);
    assert_eq!(upper_bound(&gen_tight_family(7).unwrap()), 32);
}
