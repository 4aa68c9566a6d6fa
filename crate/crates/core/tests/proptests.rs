use std::collections::BTreeSet;

use proptest::prelude::*;
use skewposet::hecke::HeckeModule;
use skewposet::poset::LabeledPoset;
use skewposet::qsym::QSym;
use skewposet::shape::{basic_shapes, Composition};
use skewposet::structure::{descent_preserving_equiv, dual_knuth_closure_test, recording_tableau};
use skewposet::symgrp::{weak_interval, weak_leq, Permutation, Side};
use skewposet::tabx::{enumerate_syt, rectify, rectify_via_rsk, rsk};

fn perm_of(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|w| Permutation::from_slice(&w).unwrap())
}

fn perm() -> impl Strategy<Value = Permutation> {
    (1..=6usize).prop_flat_map(perm_of)
}

fn perm_pair() -> impl Strategy<Value = (Permutation, Permutation)> {
    (1..=6usize).prop_flat_map(|n| (perm_of(n), perm_of(n)))
}

/// A left interval: a bottom and a walk of left multiplications going up.
fn left_interval() -> impl Strategy<Value = (Permutation, Permutation)> {
    (2..=5usize).prop_flat_map(|n| (perm_of(n), prop::collection::vec(1..n, 0..8))).prop_map(|(b, steps)| {
        let mut t = b.clone();
        for i in steps {
            let up = t.left_mul_simple(i);
            if up.length() > t.length() {
                t = up;
            }
        }
        (b, t)
    })
}

fn position_inversions(g: &Permutation) -> BTreeSet<(usize, usize)> {
    let w = g.word();
    (0..w.len()).flat_map(|i| (i + 1..w.len()).map(move |j| (i, j))).filter(|&(i, j)| w[i] > w[j]).collect()
}

fn fundamental_sum() -> impl Strategy<Value = QSym> {
    (1..=6usize).prop_flat_map(|n| {
        prop::collection::vec((any::<prop::sample::Index>(), -3i64..4), 0..6).prop_map(move |terms| {
            let comps = Composition::all(n);
            let mut f = QSym::zero(n);
            for (k, c) in terms {
                f.add_term(k.get(&comps).clone(), &c.into());
            }
            f
        })
    })
}

proptest! {
    #[test]
    fn group_relations(g in perm(), k in 0usize..6) {
        let n = g.n();
        prop_assert!(g.compose(&g.inverse()).is_identity());
        prop_assert_eq!(g.length(), position_inversions(&g).len());
        prop_assert_eq!(g.descents(Side::Left), g.inverse().descents(Side::Right));
        if n > 1 {
            let i = 1 + k % (n - 1);
            prop_assert_eq!(g.left_mul_simple(i).left_mul_simple(i), g.clone());
            prop_assert_eq!(g.left_mul_simple(i), Permutation::simple(n, i).compose(&g));
            prop_assert_eq!(g.right_mul_simple(i), g.compose(&Permutation::simple(n, i)));
        }
    }

    #[test]
    fn left_weak_order_is_inversion_inclusion((a, b) in perm_pair()) {
        let incl = position_inversions(&a).is_subset(&position_inversions(&b));
        prop_assert_eq!(weak_leq(&a, &b, Side::Left).unwrap(), incl);
        prop_assert_eq!(weak_leq(&a, &b, Side::Right).unwrap(), weak_leq(&a.inverse(), &b.inverse(), Side::Left).unwrap());
    }

    #[test]
    fn involutions_square_to_identity(f in fundamental_sum()) {
        prop_assert_eq!(f.psi().psi(), f.clone());
        prop_assert_eq!(f.rho().rho(), f.clone());
        prop_assert_eq!(f.psi().rho(), f.rho().psi());
    }

    #[test]
    fn rsk_swaps_under_inverse(g in perm()) {
        let (p, q) = rsk(&g);
        prop_assert!(p.is_standard() && q.is_standard());
        prop_assert_eq!(p.shape(), q.shape());
        let (pi, qi) = rsk(&g.inverse());
        prop_assert_eq!(pi, q.clone());
        prop_assert_eq!(qi, p);
        prop_assert_eq!(recording_tableau(&g), q);
    }

    #[test]
    fn rectification_agrees_with_rsk(n in 1..=6usize, pick in any::<prop::sample::Index>(), pick_t in any::<prop::sample::Index>()) {
        let shapes = basic_shapes(n);
        let s = pick.get(&shapes);
        let ts = enumerate_syt(s);
        let t = pick_t.get(&ts);
        let r = rectify(t).unwrap();
        prop_assert!(r.shape().is_straight() && r.is_standard());
        prop_assert_eq!(r, rectify_via_rsk(t));
    }

    #[test]
    fn interval_modules_satisfy_relations((b, t) in left_interval()) {
        let m = HeckeModule::interval(&b, &t).unwrap();
        prop_assert!(m.check_relations().is_ok());
        let iv = weak_interval(&b, &t, Side::Left).unwrap();
        let mut ch = QSym::zero(b.n());
        for g in iv.elements() {
            ch = ch.add(&QSym::f(Composition::from_set(&g.descents(Side::Left).complement())));
        }
        prop_assert_eq!(m.characteristic().unwrap(), ch);
    }

    #[test]
    fn descent_equivalence_is_reflexive_and_symmetric((b, t) in left_interval(), (c, u) in left_interval()) {
        let i1 = weak_interval(&b, &t, Side::Left).unwrap();
        prop_assert!(descent_preserving_equiv(&i1, &i1).unwrap());
        if b.n() == c.n() {
            let i2 = weak_interval(&c, &u, Side::Left).unwrap();
            prop_assert_eq!(descent_preserving_equiv(&i1, &i2).unwrap(), descent_preserving_equiv(&i2, &i1).unwrap());
        }
    }

    #[test]
    fn chain_and_antichain_modules(n in 1..=5usize) {
        for p in [LabeledPoset::chain(n), LabeledPoset::antichain(n)] {
            prop_assert!(HeckeModule::poset(&p).unwrap().check_relations().is_ok());
        }
    }
}

#[test]
fn rsk_is_a_bijection() {
    for n in 1..=6 {
        let all = Permutation::all(n);
        let images: BTreeSet<_> = all.iter().map(rsk).collect();
        assert_eq!(images.len(), all.len());
        assert!(dual_knuth_closure_test(&all).unwrap().closed);
    }
}
