//! Brute-force reference implementations used to cross-check the fast
//! algorithms on small inputs.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::hypermap::Dessin;
use crate::perm_core::{Perm, PermGroup};

/// Every permutation of `0..n` in lexicographic order of images.
pub fn all_permutations(n: usize) -> Vec<Perm> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    loop {
        out.push(Perm::from_images(cur.clone()).expect("bijection"));
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// Centralizer of `group` in the full symmetric group, by testing every
/// permutation; sorted.
pub fn brute_centralizer(group: &PermGroup) -> Vec<Perm> {
    let mut out: Vec<Perm> = all_permutations(group.degree())
        .into_iter()
        .filter(|c| group.generators().iter().all(|g| g.commutes_with(c)))
        .collect();
    out.sort();
    out
}

/// Whether some relabelling `σ` carries `(x, y)` to `(x⁻¹, y⁻¹)`.
pub fn brute_mirror_isomorphic(d: &Dessin) -> bool {
    let (xi, yi) = (d.x().inverse(), d.y().inverse());
    all_permutations(d.darts())
        .iter()
        .any(|s| d.x().conjugate_by(s) == xi && d.y().conjugate_by(s) == yi)
}

/// Every connected dessin on `1..=max_darts` darts, as labelled pairs.
pub fn all_dessins(max_darts: usize) -> Vec<Dessin> {
    let mut out = Vec::new();
    for n in 1..=max_darts {
        let perms = all_permutations(n);
        for x in &perms {
            for y in &perms {
                if let Ok(d) = Dessin::new(x.clone(), y.clone()) {
                    out.push(d);
                }
            }
        }
    }
    out
}

/// A uniformly random permutation of `0..n`.
pub fn random_perm<R: Rng>(n: usize, rng: &mut R) -> Perm {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Perm::from_images(images).expect("bijection")
}

/// A random transitive group of degree `1..=max_degree` on one to three
/// random generators, retried until transitive.
pub fn random_transitive_group<R: Rng>(max_degree: usize, rng: &mut R) -> PermGroup {
    let n = rng.gen_range(1..=max_degree);
    loop {
        let k = rng.gen_range(1..=3);
        let gens = (0..k).map(|_| random_perm(n, rng)).collect();
        let g = PermGroup::new(n, gens).expect("same degree");
        if g.is_transitive() {
            return g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_counts() {
        assert_eq!(all_permutations(0).len(), 1);
        assert_eq!(all_permutations(4).len(), 24);
        let p = all_permutations(3);
        assert!(p[0].is_identity());
        assert_eq!(p.iter().collect::<std::collections::BTreeSet<_>>().len(), 6);
    }

    #[test]
    fn dessin_counts() {
        // (n−1)! times the number of index-n subgroups of F₂ (1, 3, 13, 71).
        let all = all_dessins(4);
        let by = |n| all.iter().filter(|d| d.darts() == n).count();
        assert_eq!((by(1), by(2), by(3), by(4)), (1, 3, 26, 426));
    }

    #[test]
    fn centralizer_of_cyclic_group() {
        let c4 = PermGroup::new(4, vec![Perm::parse("(1 2 3 4)", 4).unwrap()]).unwrap();
        assert_eq!(brute_centralizer(&c4).len(), 4);
    }
}
