mod common;

use std::collections::BTreeSet;

use indpoly::enumerate::{count_free_trees, free_trees_stream, LevelSequences, Shard, TreeStream};
use indpoly::tree::{free_canonical, Tree};

const COUNTS: [u64; 16] = [
    1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320,
];

#[test]
fn counts_through_sixteen() {
    for (i, &expected) in COUNTS.iter().enumerate() {
        assert_eq!(count_free_trees(i + 1), expected, "n = {}", i + 1);
    }
}

#[test]
fn count_at_eighteen() {
    assert_eq!(count_free_trees(18), 123_867);
}

#[test]
fn no_duplicates_up_to_eight() {
    for n in 1..=8 {
        let codes: Vec<_> = free_trees_stream(n).map(|t| free_canonical(&t)).collect();
        for i in 0..codes.len() {
            for j in i + 1..codes.len() {
                assert_ne!(codes[i], codes[j], "n = {n}");
            }
        }
    }
}

#[test]
fn matches_labeled_oracle() {
    for n in 1..=9 {
        let fast: BTreeSet<Vec<u32>> = free_trees_stream(n)
            .map(|t| free_canonical(&t).code)
            .collect();
        assert_eq!(fast.len() as u64, COUNTS[n - 1]);
        assert_eq!(fast, common::free_trees_via_prufer(n), "n = {n}");
    }
}

#[test]
fn emitted_trees_are_canonical_and_valid() {
    for n in 1..=13 {
        let mut gen = LevelSequences::new(n);
        while let Some(levels) = gen.advance() {
            let t = Tree::from_level_sequence(levels).unwrap();
            assert_eq!(t.order(), n);
            assert_eq!(t.edges().len(), n - 1);
            assert_eq!(free_canonical(&t).code, levels);
        }
    }
}

fn sharded_codes(n: usize, k: usize) -> Vec<Vec<u32>> {
    let mut all = Vec::new();
    for i in 0..k {
        let mut s = TreeStream::sharded(n, Shard::new(i, k));
        while let Some((_, levels)) = s.next_levels() {
            all.push(levels.to_vec());
        }
    }
    all.sort();
    all
}

#[test]
fn shards_partition_the_stream() {
    for n in [12, 16] {
        let whole = sharded_codes(n, 1);
        for k in [2, 4, 8] {
            assert_eq!(sharded_codes(n, k), whole, "n = {n}, k = {k}");
        }
    }
}

#[test]
fn positions_are_stream_indices() {
    let mut s = TreeStream::sharded(16, Shard::new(1, 3));
    let (first, _) = s.next_levels().unwrap();
    assert_eq!(first, 1024);
}
