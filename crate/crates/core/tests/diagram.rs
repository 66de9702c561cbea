use hforge::diagram::{
    one_join, predicted_join_w_cycles, random_diagram_with_handle, Handle, SymmetricDiagram,
};
use hforge::Perm;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pick(seed: u64) -> (SymmetricDiagram, Handle, SymmetricDiagram, Handle) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d1 = random_diagram_with_handle(rng.gen_range(2..=12), &mut rng);
    let d2 = random_diagram_with_handle(rng.gen_range(2..=12), &mut rng);
    let hs1 = d1.find_handles();
    let hs2 = d2.find_handles();
    let h1 = hs1[rng.gen_range(0..hs1.len())];
    let h2 = hs2[rng.gen_range(0..hs2.len())];
    (d1, h1, d2, h2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn join_invariants(seed in any::<u64>()) {
        let (d1, h1, d2, h2) = pick(seed);
        let j = one_join(&d1, h1, &d2, h2).unwrap();
        prop_assert!(j.violated_relation().is_none());
        prop_assert!(j.y().pow(2).is_identity());
        prop_assert_eq!(j.darts(), d1.darts() + d2.darts());
        prop_assert_eq!(j.w_cycle_structure(), predicted_join_w_cycles(&d1, h1, &d2, h2));
        // x and t are untouched, so their orders are too.
        prop_assert_eq!(j.x().order(), d1.x().order().max(1) * d2.x().order() / hforge::perm_core::gcd(d1.x().order(), d2.x().order()));
        let xy = j.x().then(j.y()).order();
        prop_assert!(j.verify_type(j.x().order(), 2, xy, true));
        if d1.is_connected() && d2.is_connected() {
            prop_assert!(j.is_connected());
        }
    }

    #[test]
    fn join_is_symmetric(seed in any::<u64>()) {
        let (d1, h1, d2, h2) = pick(seed);
        let (n1, n2) = (d1.darts(), d2.darts());
        let swap = Perm::from_images((0..n1 + n2).map(|p| if p < n2 { p + n1 } else { p - n2 }).collect()).unwrap();
        prop_assert_eq!(
            one_join(&d2, h2, &d1, h1).unwrap().relabel(&swap),
            one_join(&d1, h1, &d2, h2).unwrap()
        );
    }

    #[test]
    fn handles_satisfy_definition(seed in any::<u64>()) {
        let (d1, _, _, _) = pick(seed);
        for h in d1.find_handles() {
            prop_assert_eq!(d1.y().apply(h.alpha), h.alpha);
            prop_assert_eq!(d1.y().apply(h.beta), h.beta);
            prop_assert_eq!(d1.x().apply(h.alpha), h.beta);
            prop_assert_eq!(d1.t().apply(h.alpha), h.beta);
        }
    }
}

#[test]
fn fixed_point_free_y_has_no_handles() {
    let x = Perm::parse("(1 2)(3 4)", 4).unwrap();
    let y = Perm::parse("(1 3)(2 4)", 4).unwrap();
    let t = Perm::parse("(1 2)(3 4)", 4).unwrap();
    let d = SymmetricDiagram::new(x, y, t).unwrap();
    assert!(d.find_handles().is_empty());
}

#[test]
fn join_consumes_handles() {
    let s = Perm::parse("(1 2)", 2).unwrap();
    let t0 = SymmetricDiagram::new(s.clone(), Perm::identity(2), s).unwrap();
    let h = Handle { alpha: 0, beta: 1 };
    let j = one_join(&t0, h, &t0, h).unwrap();
    assert!(!j.is_handle(h));
    assert!(!j.is_handle(Handle { alpha: 2, beta: 3 }));
    assert_eq!(j.w_cycle_structure(), vec![2, 2]);
}
