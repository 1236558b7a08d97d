//! Independence polynomials of forests.
//!
//! The fast path is the classic two-state tree DP: for each vertex `v`,
//! `E_v` counts independent sets of the subtree that avoid `v` and `I_v` those
//! that contain it, so `E_v = prod(E_c + I_c)` and `I_v = x * prod(E_c)`.
//! The brute-force oracle counts subsets directly and shares no code with it.

use std::ops::{AddAssign, Mul};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::{Forest, TreeError};
use crate::polynomial::IntPolynomial;

/// Largest forest the subset-enumeration oracle accepts.
pub const BRUTEFORCE_MAX_N: usize = 24;

/// Every coefficient of every intermediate product counts independent sets of
/// an induced subforest, so it is at most `2^n`. Up to this order the DP runs
/// in `u64` without overflow; beyond it, it runs on `BigUint`.
const U64_SAFE_MAX_N: usize = 63;

fn poly_add<T>(a: &[T], b: &[T]) -> Vec<T>
where
    T: Clone + for<'a> AddAssign<&'a T>,
{
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    out
}

fn poly_mul<T>(a: &[T], b: &[T]) -> Vec<T>
where
    T: Clone + Zero + for<'a> AddAssign<&'a T>,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    out
}

fn forest_dp<T>(f: &Forest) -> Vec<T>
where
    T: Clone + Zero + One + for<'a> AddAssign<&'a T>,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    let n = f.order();
    let mut excluded: Vec<Vec<T>> = vec![vec![T::one()]; n];
    let mut included: Vec<Vec<T>> = vec![vec![T::zero(), T::one()]; n];
    let mut parent = vec![usize::MAX; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = Vec::new();
    let mut total = vec![T::one()];

    for start in 0..n {
        if visited[start] {
            continue;
        }
        order.clear();
        visited[start] = true;
        stack.push(start);
        while let Some(v) = stack.pop() {
            order.push(v);
            for &w in f.neighbors(v) {
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = v;
                    stack.push(w);
                }
            }
        }
        // Children appear after their parent in `order`.
        for &v in order.iter().rev().take(order.len() - 1) {
            let p = parent[v];
            let child_excluded = std::mem::take(&mut excluded[v]);
            let child_included = std::mem::take(&mut included[v]);
            let through = poly_add(&child_excluded, &child_included);
            excluded[p] = poly_mul(&excluded[p], &through);
            included[p] = poly_mul(&included[p], &child_excluded);
        }
        let component = poly_add(&excluded[start], &included[start]);
        total = poly_mul(&total, &component);
    }
    total
}

/// Exact independence polynomial of a forest; the empty forest gives `1`.
pub fn independence_polynomial<G: AsRef<Forest>>(g: &G) -> IntPolynomial {
    let f = g.as_ref();
    if f.order() <= U64_SAFE_MAX_N {
        IntPolynomial::from_u64s(&forest_dp::<u64>(f))
    } else {
        IntPolynomial::new(
            forest_dp::<BigUint>(f)
                .into_iter()
                .map(BigInt::from)
                .collect(),
        )
    }
}

/// Counts independent sets by enumerating all `2^n` vertex subsets.
///
/// Subsets are visited in increasing order; a subset is independent iff the
/// subset without its lowest vertex is independent and that vertex has no
/// neighbor inside it.
pub fn independence_polynomial_bruteforce<G: AsRef<Forest>>(
    g: &G,
) -> Result<IntPolynomial, TreeError> {
    let f = g.as_ref();
    let n = f.order();
    if n > BRUTEFORCE_MAX_N {
        return Err(TreeError::TooLarge {
            n,
            max: BRUTEFORCE_MAX_N,
        });
    }
    let nbr: Vec<u32> = (0..n)
        .map(|v| f.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let mut independent = vec![false; 1 << n];
    let mut counts = vec![0u64; n + 1];
    independent[0] = true;
    counts[0] = 1;
    for mask in 1u32..(1u32 << n) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        if independent[rest as usize] && nbr[low] & mask == 0 {
            independent[mask as usize] = true;
            counts[mask.count_ones() as usize] += 1;
        }
    }
    Ok(IntPolynomial::from_u64s(&counts))
}

/// Reusable `u64` DP for trees given as parent arrays with `parents[v] < v`
/// for every `v > 0` (as produced by level sequences). Used by the scanner,
/// which evaluates millions of small trees.
#[derive(Debug, Default)]
pub struct ParentArrayDp {
    stride: usize,
    excluded: Vec<u64>,
    included: Vec<u64>,
    excluded_len: Vec<usize>,
    included_len: Vec<usize>,
    scratch: Vec<u64>,
    through: Vec<u64>,
    result: Vec<u64>,
}

impl ParentArrayDp {
    pub fn new() -> Self {
        Self::default()
    }

    fn reset(&mut self, n: usize) {
        let stride = n + 1;
        self.stride = stride;
        self.excluded.clear();
        self.excluded.resize(n * stride, 0);
        self.included.clear();
        self.included.resize(n * stride, 0);
        self.excluded_len.clear();
        self.excluded_len.resize(n, 1);
        self.included_len.clear();
        self.included_len.resize(n, 2);
        self.scratch.resize(2 * stride, 0);
        self.through.resize(stride, 0);
        for v in 0..n {
            self.excluded[v * stride] = 1;
            self.included[v * stride + 1] = 1;
        }
    }

    /// Multiplies the polynomial stored at `buf[at..at+len]` by `factor`.
    fn mul_in_place(
        buf: &mut [u64],
        at: usize,
        len: usize,
        factor: &[u64],
        scratch: &mut [u64],
    ) -> usize {
        let out_len = len + factor.len() - 1;
        scratch[..out_len].fill(0);
        for (i, &a) in buf[at..at + len].iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in factor.iter().enumerate() {
                scratch[i + j] += a * b;
            }
        }
        buf[at..at + out_len].copy_from_slice(&scratch[..out_len]);
        out_len
    }

    /// Coefficients of the independence polynomial, constant term first.
    ///
    /// # Panics
    /// If the tree has more than 63 vertices or `parents` is not topological.
    pub fn run(&mut self, parents: &[usize]) -> &[u64] {
        let n = parents.len();
        assert!(
            (1..=U64_SAFE_MAX_N).contains(&n),
            "ParentArrayDp handles 1..=63 vertices"
        );
        self.reset(n);
        let s = self.stride;
        for v in (1..n).rev() {
            let p = parents[v];
            assert!(p < v, "parent of {v} must precede it");
            let (el, il) = (self.excluded_len[v], self.included_len[v]);
            let tl = el.max(il);
            self.through[..tl].fill(0);
            for k in 0..el {
                self.through[k] += self.excluded[v * s + k];
            }
            for k in 0..il {
                self.through[k] += self.included[v * s + k];
            }
            let through = &self.through[..tl];
            self.excluded_len[p] = Self::mul_in_place(
                &mut self.excluded,
                p * s,
                self.excluded_len[p],
                through,
                &mut self.scratch,
            );
            let child_excluded = &self.excluded[v * s..v * s + el];
            self.included_len[p] = Self::mul_in_place(
                &mut self.included,
                p * s,
                self.included_len[p],
                child_excluded,
                &mut self.scratch,
            );
        }
        let (el, il) = (self.excluded_len[0], self.included_len[0]);
        self.result.clear();
        self.result.resize(el.max(il), 0);
        for k in 0..el {
            self.result[k] += self.excluded[k];
        }
        for k in 0..il {
            self.result[k] += self.included[k];
        }
        &self.result
    }
}
