//! Property tests for the word calculus and character operators.

use std::sync::Arc;

use proptest::prelude::*;

use cominuscule_core::cohomology::{demazure_operator, CharacterPoly};
use cominuscule_core::rootsys::{RootSystem, TypeLabel, Weight};
use cominuscule_core::weyl::{bruhat_leq, min_coset_rep, ParabolicSubset, WeylElement};

const TYPES: [(TypeLabel, usize); 7] = [
    (TypeLabel::A, 2),
    (TypeLabel::A, 3),
    (TypeLabel::B, 2),
    (TypeLabel::B, 3),
    (TypeLabel::C, 3),
    (TypeLabel::D, 4),
    (TypeLabel::G, 2),
];

fn sys(k: usize) -> Arc<RootSystem> {
    let (label, rank) = TYPES[k % TYPES.len()];
    Arc::new(RootSystem::build(label, rank).unwrap())
}

fn elem(rs: &Arc<RootSystem>, raw: &[usize]) -> WeylElement {
    let word: Vec<usize> = raw.iter().map(|&x| x % rs.rank).collect();
    WeylElement::from_word(rs, &word)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn action_is_homomorphic(
        k in 0usize..7,
        u_raw in prop::collection::vec(0usize..8, 0..10),
        v_raw in prop::collection::vec(0usize..8, 0..10),
        coords in prop::collection::vec(-4i64..=4, 8),
    ) {
        let rs = sys(k);
        let u = elem(&rs, &u_raw);
        let v = elem(&rs, &v_raw);
        let mu = Weight(coords[..rs.rank].to_vec());
        prop_assert_eq!(u.mul(&v).act(&mu), u.act(&v.act(&mu)));
    }

    #[test]
    fn canonical_word_is_reduced_and_stable(
        k in 0usize..7,
        raw in prop::collection::vec(0usize..8, 0..14),
    ) {
        let rs = sys(k);
        let w = elem(&rs, &raw);
        // ℓ(w) = |inversions| and re-canonicalizing is a fixed point.
        prop_assert_eq!(w.len(), w.inversions().len());
        let again = WeylElement::from_word(&rs, w.word());
        prop_assert_eq!(again.word(), w.word());
        // Inverse twice is the identity operation.
        prop_assert_eq!(w.inverse().inverse(), w);
    }

    #[test]
    fn min_coset_rep_is_idempotent_and_minimal(
        k in 0usize..7,
        raw in prop::collection::vec(0usize..8, 0..12),
        mask in 0usize..16,
    ) {
        let rs = sys(k);
        let w = elem(&rs, &raw);
        let j = ParabolicSubset::new(
            (0..rs.rank).filter(|&i| mask & (1 << i) != 0).collect(),
        );
        let rep = min_coset_rep(&w, &j);
        prop_assert_eq!(&min_coset_rep(&rep, &j), &rep);
        for i in j.iter() {
            prop_assert!(!rep.has_right_descent(i));
        }
        // The representative stays below the element in Bruhat order.
        prop_assert!(bruhat_leq(&rep, &w));
    }

    #[test]
    fn demazure_operator_is_idempotent(
        k in 0usize..7,
        terms in prop::collection::vec((prop::collection::vec(-4i64..=4, 8), -3i64..=3), 1..5),
        i_raw in 0usize..8,
    ) {
        let rs = sys(k);
        let i = i_raw % rs.rank;
        let mut f = CharacterPoly::zero();
        for (coords, mult) in &terms {
            if *mult != 0 {
                f.add_term(Weight(coords[..rs.rank].to_vec()), *mult);
            }
        }
        let once = demazure_operator(&rs, i, &f);
        let twice = demazure_operator(&rs, i, &once);
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn inversion_sets_compose_with_length(
        k in 0usize..7,
        raw in prop::collection::vec(0usize..8, 0..12),
    ) {
        let rs = sys(k);
        let w = elem(&rs, &raw);
        let winv = w.inverse();
        prop_assert_eq!(w.len(), winv.len());
        // The action permutes the root list and preserves length class.
        for idx in 0..rs.num_roots() {
            let img = w.act_root(idx);
            prop_assert_eq!(rs.root(idx).length_class, rs.root(img).length_class);
            prop_assert_eq!(winv.act_root(img), idx);
        }
    }
}
