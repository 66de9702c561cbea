use super::group::PermGroup;
use super::perm::Perm;
use crate::error::{Error, Result};

/// Every element of the centralizer of a transitive group in the full
/// symmetric group, ordered by the image of point `0` (identity first).
///
/// A centralizing permutation is determined by where it sends the base: if
/// `c(0) = δ` then `c(0·w) = δ·w` for every word `w`. Each candidate `δ` is
/// extended along the Schreier tree and kept when it commutes with every
/// generator.
pub fn centralizer_elements(group: &PermGroup) -> Result<Vec<Perm>> {
    let n = group.degree();
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    if n == 0 {
        return Ok(vec![Perm::identity(0)]);
    }
    let orbit = group.orbit(0);
    let gens = group.generators();
    let mut out = Vec::new();
    'delta: for delta in 0..n {
        let mut img = vec![usize::MAX; n];
        img[0] = delta;
        for &q in orbit.points.iter().skip(1) {
            let (p, g) = orbit.tree[q].unwrap();
            img[q] = gens[g].apply(img[p]);
        }
        for g in gens {
            for p in 0..n {
                if img[g.apply(p)] != g.apply(img[p]) {
                    continue 'delta;
                }
            }
        }
        // Commuting with a transitive group forces injectivity.
        out.push(Perm::from_images(img).expect("centralizing map is a bijection"));
    }
    Ok(out)
}

/// The centralizer as a group whose generators are its non-identity elements.
pub fn centralizer_of_transitive(group: &PermGroup) -> Result<PermGroup> {
    let elems = centralizer_elements(group)?;
    PermGroup::new(
        group.degree(),
        elems.into_iter().filter(|g| !g.is_identity()).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(n, gens.iter().map(|s| Perm::parse(s, n).unwrap()).collect()).unwrap()
    }

    #[test]
    fn regular_cyclic_is_self_centralizing() {
        let c = centralizer_elements(&grp(4, &["(1 2 3 4)"])).unwrap();
        assert_eq!(c.len(), 4);
        assert!(c[0].is_identity());
    }

    #[test]
    fn natural_s3_trivial() {
        assert_eq!(centralizer_elements(&grp(3, &["(1 2 3)", "(1 2)"])).unwrap().len(), 1);
    }

    #[test]
    fn regular_klein_four() {
        let c = centralizer_elements(&grp(4, &["(1 2)(3 4)", "(1 3)(2 4)"])).unwrap();
        assert_eq!(c.len(), 4);
        for g in &c[1..] {
            assert!(g.fixed_points().is_empty());
        }
    }

    #[test]
    fn intransitive_rejected() {
        assert_eq!(
            centralizer_elements(&grp(3, &["(1 2)"])),
            Err(Error::NotTransitive)
        );
    }
}
