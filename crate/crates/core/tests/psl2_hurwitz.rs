use hforge::perm_core::{centralizer_elements, is_primitive, PermGroup};
use hforge::psl2::*;
use hforge::Perm;

fn hurwitz() -> (GeneratingPair, hforge::hypermap::Dessin) {
    let (_, n) = modulus_for_type(3, 2, 7).unwrap();
    let pair = find_generating_pair(3, 2, 7, n, 0, DEFAULT_PAIR_BUDGET, 1).unwrap();
    let d = projective_dessin(&pair.x, &pair.y).unwrap();
    (pair, d)
}

#[test]
fn hurwitz_dessin_over_f83() {
    let (pair, d) = hurwitz();
    assert_eq!(pair.prime, 83);
    assert_eq!((pair.x.order(), pair.y.order(), pair.x.mul(&pair.y).order()), (3, 2, 7));
    assert_eq!(d.darts(), 84);
    assert_eq!(d.cycle_counts(), (28, 42, 12));
    assert_eq!(d.euler_characteristic(), -2);
    assert_eq!(d.genus(), 2);
    assert_eq!(riemann_hurwitz_genus(3, 2, 7, 83), Some(2));
    assert!(is_primitive(&d.monodromy()).unwrap());
    // Orbit-stabilizer: |PSL(2,83)| = 84 · 83·82/2.
    assert_eq!(psl2_order(83), 84 * 3403);
}

#[test]
fn swapped_roles_also_work() {
    let pair = find_generating_pair(2, 3, 7, 83, 0, DEFAULT_PAIR_BUDGET, 1).unwrap();
    let d = projective_dessin(&pair.x, &pair.y).unwrap();
    assert_eq!(d.type_triple(), (2, 3, 7));
    assert_eq!(d.genus(), 2);
}

#[test]
fn surface_stabilizer_is_free_abelian_of_rank_four() {
    let (_, d) = hurwitz();
    let sp = stabilizer_presentation(&d, 3, 2, 7, 83).unwrap();
    assert_eq!(sp.generator_count(), 85);
    assert_eq!(sp.relators.len(), 28 + 42 + 12);
    assert!(sp.torsion().is_empty());
    assert_eq!(sp.free_rank, 4);
}

#[test]
fn c2_lift_over_hurwitz_dessin() {
    let (_, d) = hurwitz();
    let c2 = PermGroup::new(2, vec![Perm::parse("(1 2)", 2).unwrap()]).unwrap();
    let va = solve_voltages_with_relators(&d, 3, 2, 7, &c2, DEFAULT_SOLVER_BUDGET)
        .unwrap()
        .expect("genus 2 admits a C2 quotient");
    assert!(check_relator_voltages(&va, 3, 2, 7).unwrap());
    let cover = va.covering_dessin().unwrap();
    assert_eq!(cover.darts(), 168);
    assert_eq!(cover.type_triple(), (3, 2, 7));
    assert_eq!(centralizer_elements(&cover.monodromy()).unwrap().len(), 2);
}
