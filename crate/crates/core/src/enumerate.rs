//! Streams every unlabeled free tree on `n` vertices exactly once.
//!
//! Trees are produced as canonical level sequences in the style of Wright,
//! Richmond, Odlyzko and McKay: a rooted-tree successor (Beyer-Hedetniemi)
//! walks canonical level sequences in decreasing lexicographic order, and
//! sequences that do not describe a tree rooted at its center are skipped by
//! jumping straight to the next candidate. Each emitted sequence is the
//! tree's free canonical code.

use crate::tree::Tree;

/// Consecutive trees handed to one shard before moving to the next.
pub const SHARD_BLOCK: u64 = 1024;

/// Generator state over level sequences.
#[derive(Debug, Clone)]
pub struct LevelSequences {
    layout: Vec<u32>,
    state: GenState,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum GenState {
    Fresh,
    Running,
    Done,
}

impl LevelSequences {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "free trees need at least one vertex");
        let layout = if n == 1 {
            vec![0]
        } else {
            // The path rooted at its center.
            let mut l: Vec<u32> = (0..=(n / 2) as u32).collect();
            l.extend(1..n.div_ceil(2) as u32);
            l
        };
        Self {
            layout,
            state: GenState::Fresh,
        }
    }

    pub fn order(&self) -> usize {
        self.layout.len()
    }

    /// Advances to the next free tree and returns its level sequence.
    pub fn advance(&mut self) -> Option<&[u32]> {
        match self.state {
            GenState::Done => return None,
            GenState::Fresh => {
                self.state = GenState::Running;
                if self.layout.len() == 1 {
                    return Some(&self.layout);
                }
            }
            GenState::Running => {
                if self.layout.len() == 1 || !next_rooted(&mut self.layout, None) {
                    self.state = GenState::Done;
                    return None;
                }
            }
        }
        if !next_free(&mut self.layout) {
            self.state = GenState::Done;
            return None;
        }
        Some(&self.layout)
    }
}

/// Beyer-Hedetniemi successor. With `p` given, the copy starts at that
/// position instead of the last vertex not at depth 1. Returns false when the
/// sequence was the last one (the star).
fn next_rooted(layout: &mut [u32], p: Option<usize>) -> bool {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = layout.len() - 1;
            while layout[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return false;
    }
    let mut q = p - 1;
    while layout[q] != layout[p] - 1 {
        q -= 1;
    }
    // The subtree rooted at q is repeated periodically to the end.
    let period = p - q;
    for i in p..layout.len() {
        layout[i] = layout[i - period];
    }
    true
}

/// Index of the second vertex at depth 1, or the length when there is none.
fn second_child(layout: &[u32]) -> usize {
    layout[2..]
        .iter()
        .position(|&d| d == 1)
        .map_or(layout.len(), |i| i + 2)
}

/// Makes `layout` a valid free-tree sequence, jumping forward when needed.
/// Returns false when the enumeration is exhausted.
fn next_free(layout: &mut [u32]) -> bool {
    let m = second_child(layout);
    // left: the first subtree of the root, depths shifted down by one.
    // rest: the root with the remaining subtrees.
    let left = &layout[1..m];
    let rest_tail = &layout[m..];
    let left_height = left.iter().max().map_or(0, |&d| d - 1);
    let rest_height = rest_tail.iter().copied().max().unwrap_or(0);
    let mut valid = rest_height >= left_height;
    if valid && rest_height == left_height {
        let rest_len = rest_tail.len() + 1;
        if left.len() > rest_len {
            valid = false;
        } else if left.len() == rest_len {
            let left_iter = left.iter().map(|&d| d - 1);
            let rest_iter = std::iter::once(0).chain(rest_tail.iter().copied());
            if left_iter.gt(rest_iter) {
                valid = false;
            }
        }
    }
    if valid {
        return true;
    }
    let p = m - 1;
    let jump_suffix = layout[p] > 2;
    if !next_rooted(layout, Some(p)) {
        return false;
    }
    if jump_suffix {
        let m = second_child(layout);
        let new_left_height = layout[1..m].iter().max().map_or(0, |&d| d - 1) as usize;
        let len = layout.len();
        let k = new_left_height + 1;
        for (slot, depth) in layout[len - k..].iter_mut().zip(1u32..) {
            *slot = depth;
        }
    }
    true
}

/// Which slice of the stream a [`TreeStream`] yields: blocks of
/// [`SHARD_BLOCK`] consecutive trees are dealt round-robin to `count` shards.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shard {
    pub index: usize,
    pub count: usize,
}

impl Shard {
    pub fn whole() -> Self {
        Self { index: 0, count: 1 }
    }

    pub fn new(index: usize, count: usize) -> Self {
        assert!(count >= 1 && index < count, "shard {index} of {count}");
        Self { index, count }
    }

    pub fn owns(&self, position: u64) -> bool {
        (position / SHARD_BLOCK) % self.count as u64 == self.index as u64
    }
}

/// Single-consumer stream of free trees on `n` vertices.
#[derive(Debug, Clone)]
pub struct TreeStream {
    gen: LevelSequences,
    shard: Shard,
    position: u64,
}

impl TreeStream {
    pub fn new(n: usize) -> Self {
        Self::sharded(n, Shard::whole())
    }

    pub fn sharded(n: usize, shard: Shard) -> Self {
        Self {
            gen: LevelSequences::new(n),
            shard,
            position: 0,
        }
    }

    /// Next owned level sequence and its position in the unsharded stream.
    pub fn next_levels(&mut self) -> Option<(u64, &[u32])> {
        loop {
            let position = self.position;
            let shard = self.shard;
            self.gen.advance()?;
            self.position += 1;
            if shard.owns(position) {
                return Some((position, &self.gen.layout));
            }
        }
    }
}

impl Iterator for TreeStream {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        let (_, levels) = self.next_levels()?;
        Some(Tree::from_level_sequence(levels).expect("generator emits valid level sequences"))
    }
}

pub fn free_trees_stream(n: usize) -> TreeStream {
    TreeStream::new(n)
}

pub fn count_free_trees(n: usize) -> u64 {
    let mut gen = LevelSequences::new(n);
    let mut count = 0;
    while gen.advance().is_some() {
        count += 1;
    }
    count
}
