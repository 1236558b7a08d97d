#![allow(dead_code)]

use std::collections::BTreeSet;

use indpoly::tree::{free_canonical, Tree};
use proptest::prelude::*;

/// Every free tree on `n` vertices, found by walking all `n^(n-2)` Pruefer
/// sequences and keeping one tree per free canonical code.
pub fn free_trees_via_prufer(n: usize) -> BTreeSet<Vec<u32>> {
    assert!(
        (1..=9).contains(&n),
        "the labeled walk is only practical for n <= 9"
    );
    let mut codes = BTreeSet::new();
    if n <= 2 {
        codes.insert(free_canonical(&Tree::path(n).unwrap()).code);
        return codes;
    }
    let mut seq = vec![0usize; n - 2];
    loop {
        let t = Tree::from_prufer(n, &seq).unwrap();
        codes.insert(free_canonical(&t).code);
        let mut i = 0;
        loop {
            if i == seq.len() {
                return codes;
            }
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
}

/// Random labeled trees on `lo..=hi` vertices.
pub fn arb_tree(lo: usize, hi: usize) -> impl Strategy<Value = Tree> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n.saturating_sub(2)).prop_map(move |seq| {
            if n == 1 {
                Tree::single_vertex()
            } else {
                Tree::from_prufer(n, &seq).unwrap()
            }
        })
    })
}

/// A random tree with a random root.
pub fn arb_rooted(lo: usize, hi: usize) -> impl Strategy<Value = (Tree, usize)> {
    arb_tree(lo, hi).prop_flat_map(|t| {
        let n = t.order();
        (Just(t), 0..n)
    })
}
