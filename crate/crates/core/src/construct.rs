//! Witness trees with symmetric unimodal independence polynomials, for every
//! order and every degree where one exists, and exhaustive checks for the
//! orders and degree where none does.

use std::fmt;

use thiserror::Error;

use crate::classify::{
    admissibility_certificate, analyze_tree, scan_order, AdmissibilityCertificate,
};
use crate::enumerate::free_trees_stream;
use crate::polynomial::is_symmetric;
use crate::tree::{bridge, free_canonical, independence_polynomial, Builtin, RootedTree, Tree};

/// Orders with no symmetric tree at all.
pub const UNREPRESENTABLE_ORDERS: [usize; 5] = [2, 4, 5, 7, 10];

/// Degree with no symmetric tree.
pub const UNREPRESENTABLE_DEGREE: usize = 3;

/// How a witness is built: `base`, then `bridges` copies of `R3` each bridged
/// on the left, `T_j = R3 v T_{j-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Recipe {
    pub base: Builtin,
    pub bridges: usize,
}

impl Recipe {
    pub fn build(&self) -> RootedTree {
        let r3 = Builtin::R3.rooted();
        let mut t = self.base.rooted();
        for _ in 0..self.bridges {
            t = bridge(&r3, &t);
        }
        t
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base)?;
        if let Some(spec) = self.base.caterpillar_spec() {
            let parts: Vec<String> = spec.iter().map(|a| a.to_string()).collect();
            write!(f, " = C({})", parts.join(","))?;
        }
        match self.bridges {
            0 => Ok(()),
            1 => write!(f, " with 1 R3 bridge"),
            k => write!(f, " with {k} R3 bridges"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ConstructionResult {
    pub tree: Tree,
    pub recipe: Recipe,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ImpossibilityKind {
    Order(usize),
    Degree(usize),
}

/// Outcome of an exhaustive search for a symmetric witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImpossibilityReport {
    pub kind: ImpossibilityKind,
    /// Orders searched.
    pub orders: Vec<usize>,
    pub trees_scanned: u64,
    /// Trees found with a symmetric polynomial (of the requested degree).
    pub witnesses: u64,
    /// For the degree case: the largest `n` for which `n^2 - 5n + 2 != 0`
    /// was checked.
    pub quadratic_checked_to: Option<u64>,
    pub quadratic_root: Option<u64>,
}

impl ImpossibilityReport {
    pub fn confirmed(&self) -> bool {
        self.witnesses == 0 && self.quadratic_root.is_none()
    }
}

impl fmt::Display for ImpossibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ImpossibilityKind::Order(n) => write!(
                f,
                "there is no tree with a symmetric independence polynomial on {n} vertices \
                 (scanned {} trees, {} symmetric)",
                self.trees_scanned, self.witnesses
            ),
            ImpossibilityKind::Degree(d) => {
                write!(
                    f,
                    "there is no tree with a symmetric independence polynomial of degree {d}: \
                     1 + nx + nx^2 + x^3 forces n^2 - 5n + 2 = 0, which has no integer solution"
                )?;
                if let Some(to) = self.quadratic_checked_to {
                    write!(f, " (checked 1 <= n <= {to})")?;
                }
                write!(
                    f,
                    "; scanned {} trees on {} to {} vertices, {} symmetric of degree {d}",
                    self.trees_scanned,
                    self.orders.first().copied().unwrap_or(0),
                    self.orders.last().copied().unwrap_or(0),
                    self.witnesses
                )
            }
        }
    }
}

#[derive(Debug, Clone, Error)]
pub enum ConstructError {
    #[error("{0}")]
    Unrepresentable(ImpossibilityReport),
    #[error("invalid request: {0}")]
    InvalidRequest(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Largest `n` for which the degree-three quadratic is checked.
pub const QUADRATIC_CHECK_MAX: u64 = 1_000_000;

/// A tree of degree 3 has `n` vertices with `ceil(n/2) <= 3`, since a tree is
/// bipartite; orders up to 7 cover that with room to spare.
const DEGREE_THREE_MAX_ORDER: usize = 7;

pub fn impossibility_report(
    kind: ImpossibilityKind,
) -> Result<ImpossibilityReport, ConstructError> {
    match kind {
        ImpossibilityKind::Order(n) => {
            if !UNREPRESENTABLE_ORDERS.contains(&n) {
                return Err(ConstructError::InvalidRequest(format!(
                    "order {n} is not one of {UNREPRESENTABLE_ORDERS:?}"
                )));
            }
            let summary = scan_order(n, 1);
            Ok(ImpossibilityReport {
                kind,
                orders: vec![n],
                trees_scanned: summary.total_trees,
                witnesses: summary.symmetric_count,
                quadratic_checked_to: None,
                quadratic_root: None,
            })
        }
        ImpossibilityKind::Degree(d) => {
            if d != UNREPRESENTABLE_DEGREE {
                return Err(ConstructError::InvalidRequest(format!(
                    "degree {d} is not {UNREPRESENTABLE_DEGREE}"
                )));
            }
            let orders: Vec<usize> = (1..=DEGREE_THREE_MAX_ORDER).collect();
            let mut scanned = 0;
            let mut witnesses = 0;
            for &n in &orders {
                for t in free_trees_stream(n) {
                    scanned += 1;
                    let p = independence_polynomial(&t);
                    if p.degree() == Ok(d) && is_symmetric(&p) == Ok(true) {
                        witnesses += 1;
                    }
                }
            }
            let quadratic_root = (1..=QUADRATIC_CHECK_MAX).find(|&n| n * n + 2 == 5 * n);
            Ok(ImpossibilityReport {
                kind,
                orders,
                trees_scanned: scanned,
                witnesses,
                quadratic_checked_to: Some(QUADRATIC_CHECK_MAX),
                quadratic_root,
            })
        }
    }
}

fn unrepresentable(kind: ImpossibilityKind) -> ConstructError {
    match impossibility_report(kind) {
        Ok(report) if report.confirmed() => ConstructError::Unrepresentable(report),
        Ok(report) => ConstructError::Internal(format!("impossibility check failed: {report:?}")),
        Err(e) => e,
    }
}

fn order_recipe(n: usize) -> Option<Recipe> {
    let caterpillar = match n {
        8 => Some(Builtin::G8),
        11 => Some(Builtin::G11),
        13 => Some(Builtin::G13),
        14 => Some(Builtin::G14),
        16 => Some(Builtin::G16),
        17 => Some(Builtin::G17),
        _ => None,
    };
    if let Some(base) = caterpillar {
        return Some(Recipe { base, bridges: 0 });
    }
    match (n, n % 3) {
        (1, _) => Some(Recipe {
            base: Builtin::K1,
            bridges: 0,
        }),
        (_, 0) => Some(Recipe {
            base: Builtin::R3,
            bridges: (n - 3) / 3,
        }),
        (19.., 1) => Some(Recipe {
            base: Builtin::R19,
            bridges: (n - 19) / 3,
        }),
        (20.., 2) => Some(Recipe {
            base: Builtin::R20,
            bridges: (n - 20) / 3,
        }),
        _ => None,
    }
}

fn degree_recipe(d: usize) -> Option<Recipe> {
    let base = match d {
        1 => Builtin::K1,
        5 => Builtin::G8,
        7 => Builtin::G11,
        9 => Builtin::G14,
        11 => Builtin::G17,
        _ if d.is_multiple_of(2) => {
            return Some(Recipe {
                base: Builtin::R3,
                bridges: d / 2 - 1,
            })
        }
        13.. => {
            return Some(Recipe {
                base: Builtin::R19,
                bridges: (d - 13) / 2,
            })
        }
        _ => return None,
    };
    Some(Recipe { base, bridges: 0 })
}

/// Builds the recipe. For bridge chains, also tracks the certificate of every
/// intermediate rooted tree through the bridge identity and compares it with
/// a fresh computation.
fn build_checked(recipe: Recipe) -> Result<ConstructionResult, ConstructError> {
    let rooted = if recipe.bridges == 0 {
        recipe.base.rooted()
    } else {
        let r3 = Builtin::R3.rooted();
        let r3_cert = certificate_or_internal(&r3)?;
        if !r3_cert.is_bridge_ready() {
            return Err(ConstructError::Internal("R3 is not bridge-ready".into()));
        }
        let mut t = recipe.base.rooted();
        let mut cert = certificate_or_internal(&t)?;
        for _ in 0..recipe.bridges {
            t = bridge(&r3, &t);
            cert = r3_cert.bridge(&cert);
            let fresh = certificate_or_internal(&t)?;
            if fresh != cert {
                return Err(ConstructError::Internal(format!(
                    "bridged certificate {cert:?} differs from direct {fresh:?}"
                )));
            }
        }
        t
    };
    Ok(ConstructionResult {
        tree: rooted.into_tree(),
        recipe,
    })
}

fn certificate_or_internal(rt: &RootedTree) -> Result<AdmissibilityCertificate, ConstructError> {
    admissibility_certificate(rt)
        .map_err(|why| ConstructError::Internal(format!("chain step is not admissible: {why}")))
}

fn validate(
    result: ConstructionResult,
    order: Option<usize>,
    degree: Option<usize>,
) -> Result<ConstructionResult, ConstructError> {
    let record = analyze_tree(&result.tree);
    let fail = |what: String| {
        Err(ConstructError::Internal(format!(
            "{} {what}",
            result.recipe
        )))
    };
    if !record.symmetric || record.unimodal != Some(true) {
        return fail(format!("is not symmetric and unimodal: {}", record.poly));
    }
    if let Some(n) = order {
        if result.tree.order() != n {
            return fail(format!("has {} vertices, not {n}", result.tree.order()));
        }
    }
    if let Some(d) = degree {
        let actual = record
            .poly
            .degree()
            .expect("independence polynomials are nonzero");
        if actual != d {
            return fail(format!("has degree {actual}, not {d}"));
        }
    }
    Ok(result)
}

pub fn tree_on_n_vertices(n: usize) -> Result<ConstructionResult, ConstructError> {
    if n == 0 {
        return Err(ConstructError::InvalidRequest(
            "a tree needs at least one vertex".into(),
        ));
    }
    match order_recipe(n) {
        Some(recipe) => validate(build_checked(recipe)?, Some(n), None),
        None => Err(unrepresentable(ImpossibilityKind::Order(n))),
    }
}

pub fn tree_of_degree(d: usize) -> Result<ConstructionResult, ConstructError> {
    if d == 0 {
        return Err(ConstructError::InvalidRequest(
            "degree must be at least 1".into(),
        ));
    }
    match degree_recipe(d) {
        Some(recipe) => validate(build_checked(recipe)?, None, Some(d)),
        None => Err(unrepresentable(ImpossibilityKind::Degree(d))),
    }
}

/// Rebuilds `result` from its recipe and checks the free canonical code.
pub fn recipe_reproduces(result: &ConstructionResult) -> bool {
    let rebuilt = result.recipe.build().into_tree();
    free_canonical(&rebuilt) == free_canonical(&result.tree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::IntPolynomial;

    #[test]
    fn small_orders() {
        let p3 = tree_on_n_vertices(3).unwrap();
        assert_eq!(
            independence_polynomial(&p3.tree),
            IntPolynomial::from_i64s(&[1, 3, 1])
        );
        assert_eq!(tree_on_n_vertices(1).unwrap().tree.order(), 1);
    }

    #[test]
    fn unrepresentable_order_cites_the_scan() {
        match tree_on_n_vertices(7) {
            Err(ConstructError::Unrepresentable(report)) => {
                assert_eq!(report.trees_scanned, 11);
                assert!(report
                    .to_string()
                    .contains("no tree with a symmetric independence polynomial"));
            }
            other => panic!("expected unrepresentable, got {other:?}"),
        }
    }

    #[test]
    fn order_twenty_two() {
        let r = tree_on_n_vertices(22).unwrap();
        assert_eq!(
            r.recipe,
            Recipe {
                base: Builtin::R19,
                bridges: 1
            }
        );
        let record = analyze_tree(&r.tree);
        assert_eq!(record.poly.degree(), Ok(15));
        assert!(recipe_reproduces(&r));
    }

    #[test]
    fn degrees() {
        let four = tree_of_degree(4).unwrap();
        assert_eq!(
            independence_polynomial(&four.tree),
            IntPolynomial::from_i64s(&[1, 6, 10, 6, 1])
        );
        let fifteen = tree_of_degree(15).unwrap();
        assert_eq!(
            fifteen.recipe,
            Recipe {
                base: Builtin::R19,
                bridges: 1
            }
        );
        match tree_of_degree(3) {
            Err(ConstructError::Unrepresentable(report)) => {
                assert!(report.to_string().contains("no integer solution"));
                assert_eq!(report.witnesses, 0);
            }
            other => panic!("expected unrepresentable, got {other:?}"),
        }
    }

    #[test]
    fn invalid_impossibility_requests() {
        assert!(matches!(
            impossibility_report(ImpossibilityKind::Order(6)),
            Err(ConstructError::InvalidRequest(_))
        ));
        assert!(matches!(
            impossibility_report(ImpossibilityKind::Degree(5)),
            Err(ConstructError::InvalidRequest(_))
        ));
    }

    #[test]
    fn recipe_names() {
        assert_eq!(
            Recipe {
                base: Builtin::G8,
                bridges: 0
            }
            .to_string(),
            "G8 = C(1,0,0,0,2)"
        );
        assert_eq!(
            Recipe {
                base: Builtin::R3,
                bridges: 2
            }
            .to_string(),
            "R3 with 2 R3 bridges"
        );
    }
}
