use hforge::ptrans::{
    congruence_obstruction, lemma_qcycle, window_action, AlmostTranslation, Dart, InfiniteMap,
};
use proptest::prelude::*;

fn almost() -> impl Strategy<Value = AlmostTranslation> {
    (
        -6i64..6,
        prop::collection::btree_set(-15i64..15, 0..20).prop_flat_map(|s| {
            let v: Vec<i64> = s.into_iter().collect();
            (Just(v.clone()), Just(v).prop_shuffle())
        }),
    )
        .prop_map(|(k, (dom, img))| AlmostTranslation::from_parts(k, dom.into_iter().zip(img)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn composition_is_associative(a in almost(), b in almost(), c in almost()) {
        prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
    }

    #[test]
    fn action_is_a_right_action(a in almost(), b in almost(), i in -40i64..40) {
        prop_assert_eq!(a.then(&b).apply(i), b.apply(a.apply(i)));
        prop_assert_eq!(a.inverse().apply(a.apply(i)), i);
        prop_assert!(a.then(&a.inverse()).is_identity());
    }

    #[test]
    fn parity_is_a_homomorphism(a in almost(), b in almost()) {
        prop_assert_eq!(a.then(&b).parity(), a.parity() ^ b.parity());
    }

    #[test]
    fn three_cycles_from_the_q_cycle(q in 2i64..9, k in 1i64..12) {
        let x = AlmostTranslation::shift(1);
        let points: Vec<i64> = (1..=q).collect();
        let y = AlmostTranslation::cycle(&points);
        let yx = y.conjugate_by(&x);
        let word = yx.then(&y.inverse()).conjugate_by(&yx.pow(2)).conjugate_by(&x.pow(k - 1));
        prop_assert_eq!(word, AlmostTranslation::cycle(&[k, k + 1, k + 2]));
        prop_assert!(lemma_qcycle(q, 3).passed());
    }
}

#[test]
fn window_examples() {
    let w = window_action(InfiniteMap::N3, 25).unwrap();
    assert_eq!(w.y_image(Dart::Label(0)), Some(Dart::Label(0)));
    assert_eq!(w.y_image(Dart::Label(12)), Some(Dart::Label(10)));
    let np = window_action(InfiniteMap::Np(4), 30).unwrap();
    for i in -25..25 {
        if let Some(e) = np.z_image(Dart::Label(i)) {
            assert_eq!(e, Dart::Label(i + 1));
        }
    }
}

#[test]
fn windows_nest() {
    for map in [InfiniteMap::N3, InfiniteMap::Np(5), InfiniteMap::Npq(4, 4)] {
        let r = map.min_radius();
        let small = window_action(map, r + 5).unwrap();
        let large = window_action(map, 3 * r).unwrap();
        assert!(small.violations().is_empty(), "{map}");
        assert!(small.agrees_with(&large), "{map}");
    }
}

#[test]
fn window_text_is_line_per_dart() {
    let w = window_action(InfiniteMap::N3, 9).unwrap();
    let text = w.to_text();
    assert!(text.starts_with("map N3\nradius 9\n"));
    assert_eq!(text.lines().count(), 2 + w.darts.len());
    assert!(text.contains("\n0 4 0\n"));
}

#[test]
fn obstructions_for_every_map() {
    for map in [InfiniteMap::N3, InfiniteMap::Np(4), InfiniteMap::Npq(3, 3), InfiniteMap::Npq(6, 4)] {
        for n in 2..=40 {
            let w = congruence_obstruction(&map, n).unwrap().unwrap();
            assert_eq!(map.y(Dart::Label(w.from)), Dart::Label(w.to));
        }
    }
}
