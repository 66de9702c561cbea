use hforge::hypermap::{are_isomorphic, Dessin};
use hforge::oracle::{all_permutations, brute_mirror_isomorphic, random_perm};
use hforge::Perm;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random_dessin(seed: u64, max_darts: usize) -> Dessin {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 1 + (seed as usize % max_darts);
    loop {
        if let Ok(d) = Dessin::new(random_perm(n, &mut rng), random_perm(n, &mut rng)) {
            return d;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn isomorphic_to_relabelled_copies(seed in any::<u64>(), s2 in any::<u64>()) {
        let d = random_dessin(seed, 10);
        let sigma = random_perm(d.darts(), &mut ChaCha8Rng::seed_from_u64(s2));
        let e = Dessin::new(d.x().conjugate_by(&sigma), d.y().conjugate_by(&sigma)).unwrap();
        let w = are_isomorphic(&d, &e).expect("relabelling is an isomorphism");
        prop_assert_eq!(d.x().conjugate_by(&w), e.x().clone());
        prop_assert_eq!(d.y().conjugate_by(&w), e.y().clone());
        prop_assert_eq!(are_isomorphic(&e, &d).is_some(), true);
    }

    #[test]
    fn mirror_preserves_invariants(seed in any::<u64>()) {
        let d = random_dessin(seed, 10);
        let (a, b) = (d.analyze(), d.mirror().analyze());
        prop_assert_eq!(a.darts, b.darts);
        prop_assert_eq!(a.type_, b.type_);
        prop_assert_eq!(a.cycle_counts, b.cycle_counts);
        prop_assert_eq!(a.genus, b.genus);
        prop_assert_eq!(a.aut_order, b.aut_order);
        prop_assert_eq!(a.chiral, b.chiral);
        prop_assert_eq!(d.mirror().mirror(), d);
    }

    #[test]
    fn euler_characteristic_is_even(seed in any::<u64>()) {
        let d = random_dessin(seed, 12);
        prop_assert_eq!(d.euler_characteristic() % 2, 0);
        prop_assert!(d.euler_characteristic() <= 2);
    }
}

#[test]
fn smallest_chiral_dessin() {
    // Found by exhaustive brute-force search over five darts.
    let d = Dessin::new(
        Perm::parse("(2 3)(4 5)", 5).unwrap(),
        Perm::parse("(1 2 3 4)", 5).unwrap(),
    )
    .unwrap();
    assert!(d.is_chiral());
    assert!(!brute_mirror_isomorphic(&d));
}

#[test]
fn chirality_matches_brute_force_on_five_darts() {
    let perms = all_permutations(5);
    let mut chiral = 0;
    for x in perms.iter().step_by(7) {
        for y in &perms {
            if let Ok(d) = Dessin::new(x.clone(), y.clone()) {
                assert_eq!(d.is_chiral(), !brute_mirror_isomorphic(&d), "{x} {y}");
                chiral += usize::from(d.is_chiral());
            }
        }
    }
    assert!(chiral > 0);
}

#[test]
fn file_round_trip() {
    let d = random_dessin(17, 9);
    assert_eq!(Dessin::parse_file(&d.to_file()).unwrap(), d);
    assert!(Dessin::parse_file("darts 3\nx (1 2)\ny (1 2)\n").is_err());
}
