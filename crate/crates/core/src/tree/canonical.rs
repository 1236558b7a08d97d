//! Canonical codes for rooted and free trees, and vertex orbits.
//!
//! A rooted code is the preorder depth sequence of the tree with children
//! visited in decreasing lexicographic order of their own codes, which makes
//! it the lexicographically largest depth sequence of the tree. Free codes
//! root the tree at its center. A bicentral tree is rooted at the center
//! whose half (the component left after cutting the central edge) is larger,
//! comparing by vertex count and then by rooted code; this is the same root
//! the free-tree enumerator picks, so enumerated trees are their own codes.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::{Forest, RootedTree, Tree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CodeKind {
    Rooted,
    Free,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    pub kind: CodeKind,
    pub code: Vec<u32>,
}

impl fmt::Display for CanonicalCode {
    /// Space-separated depths.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for d in &self.code {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Canonical depth sequence of the component of `root`, never crossing into
/// `blocked`.
fn canonical_levels(g: &Forest, root: usize, blocked: Option<usize>) -> Vec<u32> {
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::new();
    let mut stack = vec![root];
    parent[root] = root;
    if let Some(b) = blocked {
        parent[b] = b;
    }
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in g.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                stack.push(w);
            }
        }
    }

    let mut children: Vec<Vec<Vec<u32>>> = vec![Vec::new(); n];
    for &v in order.iter().rev() {
        let mut kids = std::mem::take(&mut children[v]);
        kids.sort_unstable_by(|a, b| b.cmp(a));
        let mut code = Vec::with_capacity(1 + kids.iter().map(Vec::len).sum::<usize>());
        code.push(0);
        for kid in &kids {
            code.extend(kid.iter().map(|d| d + 1));
        }
        if v == root {
            return code;
        }
        children[parent[v]].push(code);
    }
    unreachable!("root is always reached")
}

pub fn rooted_canonical(rt: &RootedTree) -> CanonicalCode {
    CanonicalCode {
        kind: CodeKind::Rooted,
        code: canonical_levels(rt.tree().as_forest(), rt.root(), None),
    }
}

/// The one or two vertices of minimum eccentricity, ascending.
pub fn centers(t: &Tree) -> Vec<usize> {
    let n = t.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for &w in t.neighbors(leaf) {
                if degree[w] > 0 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn compare_halves(a: &[u32], b: &[u32]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

pub fn free_canonical(t: &Tree) -> CanonicalCode {
    let c = centers(t);
    let root = match c[..] {
        [only] => only,
        [a, b] => {
            let half_a = canonical_levels(t.as_forest(), a, Some(b));
            let half_b = canonical_levels(t.as_forest(), b, Some(a));
            if compare_halves(&half_b, &half_a) != Ordering::Greater {
                a
            } else {
                b
            }
        }
        _ => unreachable!("a tree has one or two centers"),
    };
    CanonicalCode {
        kind: CodeKind::Free,
        code: canonical_levels(t.as_forest(), root, None),
    }
}

/// Vertices that are equivalent under automorphisms of the tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    /// Smallest label in the orbit.
    pub rep: usize,
    /// All labels, ascending.
    pub members: Vec<usize>,
}

impl Orbit {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Groups vertices by the rooted code of the tree rooted there. Orbits are
/// ordered by representative.
pub fn vertex_orbits(t: &Tree) -> Vec<Orbit> {
    let mut groups: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
    for v in 0..t.order() {
        groups
            .entry(canonical_levels(t.as_forest(), v, None))
            .or_default()
            .push(v);
    }
    let mut orbits: Vec<Orbit> = groups
        .into_values()
        .map(|members| Orbit {
            rep: members[0],
            members,
        })
        .collect();
    orbits.sort_by_key(|o| o.rep);
    orbits
}
