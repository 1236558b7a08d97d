mod common;

use common::{arb_rooted, arb_tree};
use indpoly::classify::admissibility_certificate;
use indpoly::polynomial::{
    gamma_compose, gamma_expand, is_symmetric, is_unimodal_symmetric, GammaDecomposition,
    IntPolynomial, PolyError,
};
use indpoly::tree::{
    bridge, corona_two_leaves, free_canonical, independence_polynomial,
    independence_polynomial_bruteforce, rooted_canonical, RootedTree,
};
use proptest::prelude::*;

fn arb_poly() -> impl Strategy<Value = IntPolynomial> {
    proptest::collection::vec(-50i64..=50, 0..8).prop_map(|c| IntPolynomial::from_i64s(&c))
}

proptest! {
    #[test]
    fn dp_matches_bruteforce(t in arb_tree(1, 16)) {
        prop_assert_eq!(independence_polynomial(&t), independence_polynomial_bruteforce(&t).unwrap());
    }

    #[test]
    fn root_recursion((t, r) in arb_rooted(1, 30)) {
        let rt = RootedTree::new(t, r).unwrap();
        let lhs = independence_polynomial(rt.tree());
        let rhs = independence_polynomial(&rt.without_root())
            + independence_polynomial(&rt.without_closed_neighborhood()).shift(1);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bridge_identity((t, r) in arb_rooted(1, 15), (u, s) in arb_rooted(1, 15)) {
        let left = RootedTree::new(t, r).unwrap();
        let right = RootedTree::new(u, s).unwrap();
        let w = bridge(&left, &right);
        prop_assert_eq!(w.order(), left.order() + right.order());
        let p_t = independence_polynomial(left.tree());
        let p_tr = independence_polynomial(&left.without_root());
        let expected = &p_tr * &independence_polynomial(right.tree())
            + (&p_t - &p_tr) * independence_polynomial(&right.without_root());
        prop_assert_eq!(independence_polynomial(w.tree()), expected);
    }

    #[test]
    fn corona_is_gamma_positive(t in arb_tree(1, 12)) {
        let n = t.order();
        let mut g = independence_polynomial(&t).into_coeffs();
        g.resize(n + 1, Default::default());
        let expected = gamma_compose(&GammaDecomposition::new(2 * n, g));
        prop_assert_eq!(independence_polynomial(&corona_two_leaves(&t)), expected);
    }

    #[test]
    fn canonical_codes_ignore_labels((t, r) in arb_rooted(1, 20), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut perm: Vec<usize> = (0..t.order()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let relabeled = t.relabel(&perm).unwrap();
        prop_assert_eq!(free_canonical(&t), free_canonical(&relabeled));
        let a = RootedTree::new(t, r).unwrap();
        let b = RootedTree::new(relabeled, perm[r]).unwrap();
        prop_assert_eq!(rooted_canonical(&a), rooted_canonical(&b));
        prop_assert_eq!(admissibility_certificate(&a), admissibility_certificate(&b));
    }

    #[test]
    fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn gamma_round_trip(half in proptest::collection::vec(-100i64..=100, 1..16), odd in any::<bool>()) {
        let mut c = half.clone();
        if c[0] == 0 {
            c[0] = 1;
        }
        let mirror: Vec<i64> = c.iter().rev().skip(usize::from(odd)).copied().collect();
        c.extend(mirror);
        let p = IntPolynomial::from_i64s(&c);
        let g = gamma_expand(&p).unwrap();
        prop_assert_eq!(g.gammas.len(), g.d / 2 + 1);
        prop_assert_eq!(gamma_compose(&g), p);
    }

    #[test]
    fn gamma_positive_is_symmetric_unimodal(d in 0usize..24, seed in proptest::collection::vec(0i64..30, 13)) {
        let mut gammas: Vec<i64> = seed[..=d / 2].to_vec();
        gammas[0] += 1;
        let h = gamma_compose(&GammaDecomposition::from_i64s(d, &gammas));
        prop_assert_eq!(is_symmetric(&h), Ok(true));
        prop_assert_eq!(is_unimodal_symmetric(&h), Ok(true));
    }
}

#[test]
fn unimodality_needs_symmetry() {
    let p = IntPolynomial::from_i64s(&[1, 2]);
    assert_eq!(is_unimodal_symmetric(&p), Err(PolyError::NotSymmetric));
    assert_eq!(gamma_expand(&p), Err(PolyError::NotSymmetric));
    assert_eq!(
        is_symmetric(&IntPolynomial::zero()),
        Err(PolyError::ZeroPolynomial)
    );
}
