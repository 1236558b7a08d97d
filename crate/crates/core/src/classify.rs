//! Per-tree and per-order classification: symmetry, unimodality, admissible
//! roots with their certificates, and aggregate counts over all trees of an
//! order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::mpsc;
use std::thread;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::enumerate::{Shard, TreeStream};
use crate::polynomial::{gamma_expand, is_symmetric, is_unimodal_symmetric, IntPolynomial};
use crate::tree::{
    free_canonical, independence_polynomial, vertex_orbits, ParentArrayDp, RootedTree, Tree,
};

/// `P_T = (1+x)^d A(y)` and `P_{T-r} = (1+x)^d B(y)` with `y = x/(1+x)^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityCertificate {
    pub d: usize,
    pub a: IntPolynomial,
    pub b: IntPolynomial,
}

impl AdmissibilityCertificate {
    /// `A - B`.
    pub fn difference(&self) -> IntPolynomial {
        &self.a - &self.b
    }

    pub fn is_bridge_ready(&self) -> bool {
        self.difference().is_nonnegative()
    }

    /// Certificate of `(T, r) v (U, s)` where `self` certifies `(T, r)` and
    /// `right` certifies `(U, s)`: degree `d + e`, `A = BC + (A - B)D`, `B = BC`.
    pub fn bridge(&self, right: &AdmissibilityCertificate) -> AdmissibilityCertificate {
        let bc = &self.b * &right.a;
        AdmissibilityCertificate {
            d: self.d + right.d,
            a: &bc + &(&self.difference() * &right.b),
            b: bc,
        }
    }
}

/// The first definitional condition a rooted tree fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Inadmissible {
    #[error("P_T is not symmetric")]
    TreeNotSymmetric,
    #[error("P_(T-r) is not symmetric")]
    DeletedNotSymmetric,
    #[error("deg P_T = {tree} but deg P_(T-r) = {deleted}")]
    DegreeMismatch { tree: usize, deleted: usize },
    #[error("A(y) has a negative coefficient")]
    NegativeA,
    #[error("B(y) has a negative coefficient")]
    NegativeB,
}

/// Certificate for `root`, given `P_T` and its gamma vector (`None` when
/// `P_T` is not symmetric).
fn certificate_with(
    t: &Tree,
    root: usize,
    tree_gamma: Option<(usize, &IntPolynomial)>,
) -> Result<AdmissibilityCertificate, Inadmissible> {
    let (d, a) = tree_gamma.ok_or(Inadmissible::TreeNotSymmetric)?;
    let rt = RootedTree::new(t.clone(), root).expect("root is a vertex of the tree");
    let deleted = independence_polynomial(&rt.without_root());
    if !is_symmetric(&deleted).expect("independence polynomials are nonzero") {
        return Err(Inadmissible::DeletedNotSymmetric);
    }
    let deleted_degree = deleted
        .degree()
        .expect("independence polynomials are nonzero");
    if deleted_degree != d {
        return Err(Inadmissible::DegreeMismatch {
            tree: d,
            deleted: deleted_degree,
        });
    }
    if !a.is_nonnegative() {
        return Err(Inadmissible::NegativeA);
    }
    let b = gamma_expand(&deleted)
        .expect("symmetric polynomials have a gamma expansion")
        .gamma_polynomial();
    if !b.is_nonnegative() {
        return Err(Inadmissible::NegativeB);
    }
    Ok(AdmissibilityCertificate { d, a: a.clone(), b })
}

fn tree_gamma(poly: &IntPolynomial) -> Option<(usize, IntPolynomial)> {
    gamma_expand(poly).ok().map(|g| (g.d, g.gamma_polynomial()))
}

pub fn admissibility_certificate(
    rt: &RootedTree,
) -> Result<AdmissibilityCertificate, Inadmissible> {
    let poly = independence_polynomial(rt.tree());
    let gamma = tree_gamma(&poly);
    certificate_with(rt.tree(), rt.root(), gamma.as_ref().map(|(d, a)| (*d, a)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BridgeReadiness {
    /// Admissible and `A - B` has nonnegative coefficients.
    Ready(IntPolynomial),
    /// Admissible, but `A - B` has a negative coefficient.
    NotReady(IntPolynomial),
    NotAdmissible(Inadmissible),
}

impl BridgeReadiness {
    pub fn is_ready(&self) -> bool {
        matches!(self, BridgeReadiness::Ready(_))
    }

    /// `A - B`, when the rooted tree is admissible.
    pub fn difference(&self) -> Option<&IntPolynomial> {
        match self {
            BridgeReadiness::Ready(p) | BridgeReadiness::NotReady(p) => Some(p),
            BridgeReadiness::NotAdmissible(_) => None,
        }
    }
}

pub fn bridge_ready(rt: &RootedTree) -> BridgeReadiness {
    match admissibility_certificate(rt) {
        Ok(cert) => {
            let diff = cert.difference();
            if diff.is_nonnegative() {
                BridgeReadiness::Ready(diff)
            } else {
                BridgeReadiness::NotReady(diff)
            }
        }
        Err(why) => BridgeReadiness::NotAdmissible(why),
    }
}

/// One orbit of admissible roots. Every vertex of the orbit has the same
/// certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibleOrbit {
    pub rep: usize,
    pub size: usize,
    pub d: usize,
    #[serde(rename = "A", with = "coeff_list")]
    pub a: IntPolynomial,
    #[serde(rename = "B", with = "coeff_list")]
    pub b: IntPolynomial,
    pub bridge_ready: bool,
}

impl AdmissibleOrbit {
    pub fn certificate(&self) -> AdmissibilityCertificate {
        AdmissibilityCertificate {
            d: self.d,
            a: self.a.clone(),
            b: self.b.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeRecord {
    /// Free canonical code.
    pub code: Vec<u32>,
    pub n: usize,
    #[serde(with = "coeff_list")]
    pub poly: IntPolynomial,
    pub symmetric: bool,
    /// Only defined for symmetric polynomials.
    pub unimodal: Option<bool>,
    pub admissible_orbits: Vec<AdmissibleOrbit>,
}

impl TreeRecord {
    pub fn is_gamma_admissible(&self) -> bool {
        !self.admissible_orbits.is_empty()
    }

    pub fn bridge_ready_orbits(&self) -> impl Iterator<Item = &AdmissibleOrbit> {
        self.admissible_orbits.iter().filter(|o| o.bridge_ready)
    }

    /// Number of individually admissible vertices.
    pub fn admissible_root_count(&self) -> usize {
        self.admissible_orbits.iter().map(|o| o.size).sum()
    }

    pub fn tree(&self) -> Tree {
        Tree::from_level_sequence(&self.code).expect("records hold valid codes")
    }
}

/// Record for a tree whose independence polynomial is already known. `code`
/// must be the free canonical code of `t`.
fn analyze_with(t: &Tree, code: Vec<u32>, poly: IntPolynomial) -> TreeRecord {
    let symmetric = is_symmetric(&poly).expect("independence polynomials are nonzero");
    let mut record = TreeRecord {
        code,
        n: t.order(),
        unimodal: symmetric.then(|| is_unimodal_symmetric(&poly).expect("checked symmetric")),
        poly,
        symmetric,
        admissible_orbits: Vec::new(),
    };
    if !symmetric {
        return record;
    }
    let (d, a) = tree_gamma(&record.poly).expect("checked symmetric");
    if !a.is_nonnegative() {
        return record;
    }
    for orbit in vertex_orbits(t) {
        if let Ok(cert) = certificate_with(t, orbit.rep, Some((d, &a))) {
            record.admissible_orbits.push(AdmissibleOrbit {
                rep: orbit.rep,
                size: orbit.size(),
                d: cert.d,
                bridge_ready: cert.is_bridge_ready(),
                a: cert.a,
                b: cert.b,
            });
        }
    }
    record
}

pub fn analyze_tree(t: &Tree) -> TreeRecord {
    analyze_with(t, free_canonical(t).code, independence_polynomial(t))
}

/// One row of the per-order classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub n: usize,
    pub total_trees: u64,
    pub symmetric_count: u64,
    pub distinct_symmetric_polys: u64,
    pub gamma_admissible_count: u64,
}

impl fmt::Display for ScanSummary {
    /// `n total symmetric distinct admissible`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {} {}",
            self.n,
            self.total_trees,
            self.symmetric_count,
            self.distinct_symmetric_polys,
            self.gamma_admissible_count
        )
    }
}

#[derive(Debug, Default)]
struct PartialScan {
    total: u64,
    symmetric: u64,
    admissible: u64,
    distinct: BTreeSet<IntPolynomial>,
}

impl PartialScan {
    fn absorb(&mut self, record: &TreeRecord) {
        if record.symmetric {
            self.symmetric += 1;
            self.distinct.insert(record.poly.clone());
        }
        if record.is_gamma_admissible() {
            self.admissible += 1;
        }
    }

    fn merge(&mut self, other: PartialScan) {
        self.total += other.total;
        self.symmetric += other.symmetric;
        self.admissible += other.admissible;
        self.distinct.extend(other.distinct);
    }

    fn finish(self, n: usize) -> ScanSummary {
        ScanSummary {
            n,
            total_trees: self.total,
            symmetric_count: self.symmetric,
            distinct_symmetric_polys: self.distinct.len() as u64,
            gamma_admissible_count: self.admissible,
        }
    }
}

fn fill_parents(levels: &[u32], parents: &mut Vec<usize>, last_at_depth: &mut Vec<usize>) {
    let n = levels.len();
    parents.clear();
    parents.resize(n, 0);
    last_at_depth.clear();
    last_at_depth.resize(n, 0);
    for i in 1..n {
        let d = levels[i] as usize;
        parents[i] = last_at_depth[d - 1];
        last_at_depth[d] = i;
    }
}

fn symmetric_u64(c: &[u64]) -> bool {
    c.iter().eq(c.iter().rev())
}

/// Classifies one shard. Symmetric trees are always fully analyzed; with
/// `all_records`, every tree produces a record for `emit`.
fn scan_shard(
    n: usize,
    shard: Shard,
    all_records: bool,
    mut emit: impl FnMut(TreeRecord),
) -> PartialScan {
    let mut stream = TreeStream::sharded(n, shard);
    let mut dp = ParentArrayDp::new();
    let mut parents = Vec::with_capacity(n);
    let mut scratch = Vec::with_capacity(n);
    let mut partial = PartialScan::default();
    while let Some((_, levels)) = stream.next_levels() {
        partial.total += 1;
        fill_parents(levels, &mut parents, &mut scratch);
        let coeffs = dp.run(&parents);
        if !all_records && !symmetric_u64(coeffs) {
            continue;
        }
        let poly = IntPolynomial::from_u64s(coeffs);
        let code = levels.to_vec();
        let t = Tree::from_level_sequence(&code).expect("generator emits valid level sequences");
        let record = analyze_with(&t, code, poly);
        partial.absorb(&record);
        emit(record);
    }
    partial
}

/// Worker count used when none is given: `INDPOLY_JOBS`, else the available
/// parallelism.
pub fn default_jobs() -> usize {
    std::env::var("INDPOLY_JOBS")
        .ok()
        .and_then(|s| s.parse().ok())
        .filter(|&j| j >= 1)
        .or_else(|| thread::available_parallelism().ok().map(|p| p.get()))
        .unwrap_or(1)
}

fn scan_parallel(
    n: usize,
    jobs: usize,
    all_records: bool,
    sink: Option<&mut dyn FnMut(TreeRecord)>,
) -> ScanSummary {
    assert!(n >= 1, "orders start at 1");
    let jobs = jobs.max(1);
    if jobs == 1 {
        let partial = match sink {
            Some(sink) => scan_shard(n, Shard::whole(), all_records, sink),
            None => scan_shard(n, Shard::whole(), false, |_| {}),
        };
        return partial.finish(n);
    }
    let (tx, rx) = mpsc::sync_channel::<Vec<TreeRecord>>(4 * jobs);
    let want_records = sink.is_some();
    let mut total = PartialScan::default();
    thread::scope(|scope| {
        let workers: Vec<_> = (0..jobs)
            .map(|i| {
                let tx = tx.clone();
                scope.spawn(move || {
                    let mut batch = Vec::new();
                    let partial = scan_shard(n, Shard::new(i, jobs), all_records, |r| {
                        if want_records {
                            batch.push(r);
                            if batch.len() >= 256 {
                                let _ = tx.send(std::mem::take(&mut batch));
                            }
                        }
                    });
                    if !batch.is_empty() {
                        let _ = tx.send(batch);
                    }
                    partial
                })
            })
            .collect();
        drop(tx);
        if let Some(sink) = sink {
            for batch in rx {
                batch.into_iter().for_each(&mut *sink);
            }
        }
        for w in workers {
            total.merge(w.join().expect("scan worker panicked"));
        }
    });
    total.finish(n)
}

/// Classifies every free tree on `n` vertices using `jobs` workers. The
/// result does not depend on `jobs`.
pub fn scan_order(n: usize, jobs: usize) -> ScanSummary {
    scan_parallel(n, jobs, false, None)
}

/// Like [`scan_order`], handing a record for every tree to `sink`. With one
/// worker, records arrive in enumeration order; otherwise in no fixed order.
pub fn scan_order_with_records(
    n: usize,
    jobs: usize,
    sink: &mut dyn FnMut(TreeRecord),
) -> ScanSummary {
    scan_parallel(n, jobs, true, Some(sink))
}

/// Like [`scan_order`], handing only the symmetric trees' records to `sink`.
pub fn scan_order_symmetric_records(
    n: usize,
    jobs: usize,
    sink: &mut dyn FnMut(TreeRecord),
) -> ScanSummary {
    scan_parallel(n, jobs, false, Some(sink))
}

/// Recomputes the symmetric, distinct and admissible columns from records;
/// the total is supplied separately since it may cover trees with no record.
pub fn summarize_records<'a>(
    n: usize,
    total_trees: u64,
    records: impl IntoIterator<Item = &'a TreeRecord>,
) -> ScanSummary {
    let mut partial = PartialScan {
        total: total_trees,
        ..PartialScan::default()
    };
    for r in records {
        partial.absorb(r);
    }
    partial.finish(n)
}

/// Serializes polynomials as plain JSON integer arrays of any size.
mod coeff_list {
    use super::*;

    pub fn serialize<S: Serializer>(p: &IntPolynomial, s: S) -> Result<S::Ok, S::Error> {
        let numbers: Vec<serde_json::Number> = p
            .coeffs()
            .iter()
            .map(|c| {
                serde_json::Number::from_str(&c.to_string()).expect("integers are JSON numbers")
            })
            .collect();
        numbers.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<IntPolynomial, D::Error> {
        let numbers = Vec::<serde_json::Number>::deserialize(d)?;
        numbers
            .iter()
            .map(|n| {
                BigInt::from_str(&n.to_string())
                    .map_err(|_| serde::de::Error::custom(format!("not an integer: {n}")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(IntPolynomial::new)
    }
}
