//! Trees, forests and rooted trees with 0-based contiguous vertex labels,
//! plus the named constructions used throughout the crate.

mod builtin;
mod canonical;
mod independence;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use thiserror::Error;

pub use builtin::{builtin_tree, Builtin};
pub use canonical::{
    centers, free_canonical, rooted_canonical, vertex_orbits, CanonicalCode, CodeKind, Orbit,
};
pub use independence::{
    independence_polynomial, independence_polynomial_bruteforce, ParentArrayDp, BRUTEFORCE_MAX_N,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("a tree needs at least one vertex")]
    Empty,
    #[error("vertex label {label} out of range for {n} vertices")]
    LabelOutOfRange { label: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("edge {{{0}, {1}}} closes a cycle")]
    Cycle(usize, usize),
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("caterpillar needs at least one spine vertex")]
    EmptySpine,
    #[error("unknown builtin tree `{0}`")]
    UnknownBuiltin(String),
    #[error("{n} vertices exceeds the limit of {max} for this operation")]
    TooLarge { n: usize, max: usize },
    #[error("invalid level sequence: {0}")]
    LevelSequence(String),
    #[error("invalid Pruefer sequence: {0}")]
    Prufer(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// An acyclic simple graph on vertices `0..n`. May be empty or disconnected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Forest {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

impl Forest {
    pub fn empty() -> Self {
        Self {
            n: 0,
            edges: Vec::new(),
            adj: Vec::new(),
        }
    }

    /// Validates the edge list. Edges are stored with `u < v` in input order.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, TreeError> {
        let (forest, _) = Self::validated(n, edges)?;
        Ok(forest)
    }

    fn validated(n: usize, edges: &[(usize, usize)]) -> Result<(Self, usize), TreeError> {
        let mut seen = HashSet::with_capacity(edges.len());
        let mut sets = DisjointSets::new(n);
        let mut adj = vec![Vec::new(); n];
        let mut stored = Vec::with_capacity(edges.len());
        let mut components = n;
        for &(a, b) in edges {
            for label in [a, b] {
                if label >= n {
                    return Err(TreeError::LabelOutOfRange { label, n });
                }
            }
            if a == b {
                return Err(TreeError::SelfLoop(a));
            }
            let (u, v) = (a.min(b), a.max(b));
            if !seen.insert((u, v)) {
                return Err(TreeError::DuplicateEdge(u, v));
            }
            if !sets.union(u, v) {
                return Err(TreeError::Cycle(u, v));
            }
            components -= 1;
            adj[u].push(v);
            adj[v].push(u);
            stored.push((u, v));
        }
        Ok((
            Self {
                n,
                edges: stored,
                adj,
            },
            components,
        ))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }
}

impl AsRef<Forest> for Forest {
    fn as_ref(&self) -> &Forest {
        self
    }
}

/// A connected [`Forest`] with at least one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    forest: Forest,
}

impl AsRef<Forest> for Tree {
    fn as_ref(&self) -> &Forest {
        &self.forest
    }
}

impl std::ops::Deref for Tree {
    type Target = Forest;
    fn deref(&self) -> &Forest {
        &self.forest
    }
}

impl Tree {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, TreeError> {
        if n == 0 {
            return Err(TreeError::Empty);
        }
        let (forest, components) = Forest::validated(n, edges)?;
        if components != 1 {
            return Err(TreeError::Disconnected { components });
        }
        Ok(Self { forest })
    }

    pub fn single_vertex() -> Self {
        Self {
            forest: Forest {
                n: 1,
                edges: Vec::new(),
                adj: vec![Vec::new()],
            },
        }
    }

    pub fn path(n: usize) -> Result<Self, TreeError> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Self::from_edges(leaves + 1, &edges).expect("stars are trees")
    }

    pub fn as_forest(&self) -> &Forest {
        &self.forest
    }

    pub fn into_forest(self) -> Forest {
        self.forest
    }

    /// Builds the tree whose preorder depths are `levels`; vertex `i` is the
    /// `i`-th vertex in preorder and vertex 0 is the root.
    pub fn from_level_sequence(levels: &[u32]) -> Result<Self, TreeError> {
        let parents = parents_from_levels(levels)?;
        let edges: Vec<_> = (1..levels.len()).map(|v| (parents[v], v)).collect();
        Self::from_edges(levels.len(), &edges)
    }

    /// Decodes a Pruefer sequence of length `n - 2` over labels `0..n`.
    pub fn from_prufer(n: usize, seq: &[usize]) -> Result<Self, TreeError> {
        if n < 2 {
            return Err(TreeError::Prufer("need at least two vertices".into()));
        }
        if seq.len() != n - 2 {
            return Err(TreeError::Prufer(format!(
                "length {} but expected {}",
                seq.len(),
                n - 2
            )));
        }
        let mut degree = vec![1usize; n];
        for &s in seq {
            if s >= n {
                return Err(TreeError::Prufer(format!("label {s} out of range")));
            }
            degree[s] += 1;
        }
        let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
            .filter(|&v| degree[v] == 1)
            .map(std::cmp::Reverse)
            .collect();
        let mut edges = Vec::with_capacity(n - 1);
        for &s in seq {
            let std::cmp::Reverse(leaf) = leaves.pop().expect("a leaf always exists");
            edges.push((leaf, s));
            degree[s] -= 1;
            if degree[s] == 1 {
                leaves.push(std::cmp::Reverse(s));
            }
        }
        let std::cmp::Reverse(u) = leaves.pop().expect("two leaves remain");
        let std::cmp::Reverse(v) = leaves.pop().expect("two leaves remain");
        edges.push((u, v));
        Self::from_edges(n, &edges)
    }

    /// Uniformly random labeled tree on `n` vertices.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        match n {
            0 => panic!("a tree needs at least one vertex"),
            1 => Self::single_vertex(),
            _ => {
                let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
                Self::from_prufer(n, &seq).expect("valid Pruefer sequence")
            }
        }
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, TreeError> {
        if perm.len() != self.n {
            return Err(TreeError::LabelOutOfRange {
                label: perm.len(),
                n: self.n,
            });
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Self::from_edges(self.n, &edges)
    }

    /// Reads the text format: the vertex count on the first line, then
    /// `n - 1` lines `u v` with `0 <= u < v < n`.
    pub fn parse_text(text: &str) -> Result<Self, TreeError> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
        let (_, first) = lines.next().ok_or(TreeError::Parse {
            line: 1,
            msg: "missing vertex count".into(),
        })?;
        let n: usize = first.parse().map_err(|_| TreeError::Parse {
            line: 1,
            msg: format!("expected a vertex count, found `{first}`"),
        })?;
        let mut edges = Vec::with_capacity(n.saturating_sub(1));
        let mut trailing_blank = false;
        for (line, content) in lines {
            if content.is_empty() {
                trailing_blank = true;
                continue;
            }
            if trailing_blank {
                return Err(TreeError::Parse {
                    line,
                    msg: "blank line inside edge list".into(),
                });
            }
            let bad = || TreeError::Parse {
                line,
                msg: format!("expected `u v`, found `{content}`"),
            };
            let mut it = content.split_whitespace();
            let u: usize = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let v: usize = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if it.next().is_some() {
                return Err(bad());
            }
            if u >= v {
                return Err(TreeError::Parse {
                    line,
                    msg: format!("edge endpoints must satisfy u < v, found {u} {v}"),
                });
            }
            edges.push((u, v));
        }
        if edges.len() + 1 != n {
            return Err(TreeError::Parse {
                line: 1,
                msg: format!(
                    "{n} vertices need {} edges, found {}",
                    n.saturating_sub(1),
                    edges.len()
                ),
            });
        }
        Self::from_edges(n, &edges)
    }

    /// Writes the text format with edges sorted ascending.
    pub fn to_text(&self) -> String {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        let mut out = format!("{}\n", self.n);
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl FromStr for Tree {
    type Err = TreeError;
    fn from_str(s: &str) -> Result<Self, TreeError> {
        Self::parse_text(s)
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Parent of each vertex in a level sequence (`parents[0]` is 0).
pub fn parents_from_levels(levels: &[u32]) -> Result<Vec<usize>, TreeError> {
    if levels.is_empty() {
        return Err(TreeError::Empty);
    }
    if levels[0] != 0 {
        return Err(TreeError::LevelSequence("must start at depth 0".into()));
    }
    let mut parents = vec![0; levels.len()];
    let mut last_at_depth = vec![0usize; levels.len()];
    for i in 1..levels.len() {
        let d = levels[i] as usize;
        if d == 0 || d > levels[i - 1] as usize + 1 {
            return Err(TreeError::LevelSequence(format!(
                "depth {d} at position {i} after depth {}",
                levels[i - 1]
            )));
        }
        parents[i] = last_at_depth[d - 1];
        last_at_depth[d] = i;
    }
    Ok(parents)
}

pub fn tree_from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Tree, TreeError> {
    Tree::from_edges(n, edges)
}

/// A tree with a distinguished root vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    tree: Tree,
    root: usize,
}

impl RootedTree {
    pub fn new(tree: Tree, root: usize) -> Result<Self, TreeError> {
        if root >= tree.order() {
            return Err(TreeError::LabelOutOfRange {
                label: root,
                n: tree.order(),
            });
        }
        Ok(Self { tree, root })
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn into_tree(self) -> Tree {
        self.tree
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn order(&self) -> usize {
        self.tree.order()
    }

    /// `T - r`.
    pub fn without_root(&self) -> Forest {
        remove_vertices(&self.tree, &[self.root]).expect("root is a valid vertex")
    }

    /// `T - N[r]`.
    pub fn without_closed_neighborhood(&self) -> Forest {
        let mut closed = self.tree.neighbors(self.root).to_vec();
        closed.push(self.root);
        remove_vertices(&self.tree, &closed).expect("neighbors are valid vertices")
    }
}

/// `C(a_1, ..., a_m)`: a spine path `v_1 ... v_m` with `a_i` pendant leaves on
/// `v_i`. Spine vertices get labels `0..m`; leaves follow in spine order.
pub fn caterpillar(leaves: &[usize]) -> Result<Tree, TreeError> {
    let m = leaves.len();
    if m == 0 {
        return Err(TreeError::EmptySpine);
    }
    let n = m + leaves.iter().sum::<usize>();
    let mut edges: Vec<_> = (1..m).map(|v| (v - 1, v)).collect();
    let mut next = m;
    for (spine, &count) in leaves.iter().enumerate() {
        for _ in 0..count {
            edges.push((spine, next));
            next += 1;
        }
    }
    Tree::from_edges(n, &edges)
}

/// `G o 2K_1`: every vertex `v` gains pendant leaves `n + 2v` and `n + 2v + 1`.
pub fn corona_two_leaves(t: &Tree) -> Tree {
    let n = t.order();
    let mut edges = t.edges().to_vec();
    for v in 0..n {
        edges.push((v, n + 2 * v));
        edges.push((v, n + 2 * v + 1));
    }
    Tree::from_edges(3 * n, &edges).expect("corona of a tree is a tree")
}

/// `(T, r) v (U, s)`: disjoint union plus the edge `{r, s}`, rooted at `r`.
/// Left labels are kept; right labels are shifted by the left order.
pub fn bridge(left: &RootedTree, right: &RootedTree) -> RootedTree {
    let shift = left.order();
    let mut edges = left.tree.edges().to_vec();
    edges.extend(
        right
            .tree
            .edges()
            .iter()
            .map(|&(u, v)| (u + shift, v + shift)),
    );
    edges.push((left.root, right.root + shift));
    let tree =
        Tree::from_edges(shift + right.order(), &edges).expect("bridging trees yields a tree");
    RootedTree {
        tree,
        root: left.root,
    }
}

/// Induced forest on the vertices outside `removed`, relabeled in ascending
/// order of the surviving original labels.
pub fn remove_vertices<G: AsRef<Forest>>(g: &G, removed: &[usize]) -> Result<Forest, TreeError> {
    let g = g.as_ref();
    let n = g.order();
    let mut gone = vec![false; n];
    for &v in removed {
        if v >= n {
            return Err(TreeError::LabelOutOfRange { label: v, n });
        }
        gone[v] = true;
    }
    let mut map = vec![usize::MAX; n];
    let mut next = 0;
    for v in 0..n {
        if !gone[v] {
            map[v] = next;
            next += 1;
        }
    }
    let edges: Vec<_> = g
        .edges()
        .iter()
        .filter(|&&(u, v)| !gone[u] && !gone[v])
        .map(|&(u, v)| (map[u], map[v]))
        .collect();
    Forest::from_edges(next, &edges)
}
