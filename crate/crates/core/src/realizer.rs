//! Realizing a finite group as the full automorphism group of a dessin.
//!
//! The base dessin `x = (1 2 … n)`, `y = (1 2)` has monodromy `S_n`, which
//! is primitive, so the stabilizer `N` of a dart is maximal in `F₂`. Mapping
//! `N ≅ F_{n+1}` onto `A` gives a subgroup `M` with `N/M ≅ A`; because the
//! core index `(n−1)!` exceeds `|A|`, `M` is not normal in `F₂`, hence its
//! normalizer is `N` and the covering dessin has automorphism group `A`.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::freewalk::{assign_epimorphism, schreier_basis, ElementTable, VoltageAssignment};
use crate::hypermap::Dessin;
use crate::perm_core::{stabilizer_core_index_bounded, Perm, PermGroup, StabChain};

pub fn base_action(n: usize) -> Result<Dessin> {
    if n < 3 {
        return Err(Error::BadDegree(n));
    }
    let x = Perm::from_cycles(n, &[(1..=n).collect()])?;
    let y = Perm::from_cycles(n, &[vec![1, 2]])?;
    Dessin::new(x, y)
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Least `n ≥ 3` with `(n−1)! > order` and `n + 1 ≥ gens`.
pub fn choose_degree(order: u128, gens: usize) -> usize {
    (3..)
        .find(|&n| factorial(n - 1) > order && n + 1 >= gens)
        .expect("factorials are unbounded")
}

#[derive(Clone, Debug)]
pub struct Realization {
    pub dessin: Dessin,
    pub degree: usize,
    pub group_order: u128,
    pub core_index: u128,
    pub voltages: VoltageAssignment,
    /// Deck transformation of each generator of `A`.
    pub deck_images: Vec<Perm>,
    pub aut_order: usize,
    pub isomorphic: bool,
}

impl Realization {
    pub fn certificate(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "group_order {}", self.group_order);
        let _ = writeln!(s, "generators {}", self.voltages.target.generators().len());
        let _ = writeln!(s, "base_degree {}", self.degree);
        let _ = writeln!(s, "core_index {}", self.core_index);
        let _ = writeln!(s, "non_normal {}", self.core_index > self.group_order);
        let _ = writeln!(s, "darts {}", self.dessin.darts());
        let _ = writeln!(s, "aut_order {}", self.aut_order);
        for (i, d) in self.deck_images.iter().enumerate() {
            let _ = writeln!(s, "deck g{} {}", i + 1, d);
        }
        let _ = writeln!(s, "isomorphism {}", if self.isomorphic { "ok" } else { "FAIL" });
        s
    }
}

/// Builds the realizing dessin for `a`, using the least admissible base
/// degree unless `degree` is given.
pub fn realize(a: &PermGroup, degree: Option<usize>) -> Result<Realization> {
    let order = StabChain::new(a).order();
    let d = a.generators().len();
    let n = match degree {
        None => choose_degree(order, d),
        Some(n) if n >= 3 && factorial(n - 1) > order && n + 1 >= d => n,
        Some(n) => return Err(Error::BadDegree(n)),
    };
    let base = base_action(n)?;
    let core = stabilizer_core_index_bounded(&base.monodromy(), n.max(16))?;
    let sd = schreier_basis(&base, 0)?;
    let mut images = vec![Perm::identity(a.degree()); sd.rank()];
    for (slot, g) in images.iter_mut().zip(a.generators()) {
        *slot = g.clone();
    }
    let voltages = assign_epimorphism(&base, &sd, a, &images)?;
    let table = ElementTable::new(a)?;
    let dessin = voltages.covering_with(&table)?;
    let deck_images: Vec<Perm> = a
        .generators()
        .iter()
        .map(|g| voltages.deck_transformation(&table, g))
        .collect();
    let aut = dessin.automorphisms();
    let isomorphic = aut.len() as u128 == order
        && deck_images
            .iter()
            .all(|h| aut.contains(h) && h.commutes_with(dessin.x()) && h.commutes_with(dessin.y()))
        && find_isomorphism(a, &aut)?.is_some();
    Ok(Realization {
        dessin,
        degree: n,
        group_order: order,
        core_index: core.index,
        voltages,
        deck_images,
        aut_order: aut.len(),
        isomorphic,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub ok: bool,
    pub aut_order: usize,
    pub group_order: u128,
    pub isomorphic: bool,
    /// Images of `A`'s generators under an isomorphism `A → Aut`, if any.
    pub witness: Option<Vec<Perm>>,
}

impl VerifyReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "group_order {}", self.group_order);
        let _ = writeln!(s, "aut_order {}", self.aut_order);
        if let Some(w) = &self.witness {
            for (i, h) in w.iter().enumerate() {
                let _ = writeln!(s, "iso g{} {}", i + 1, h);
            }
        }
        let _ = writeln!(s, "isomorphic {}", self.isomorphic);
        let _ = writeln!(s, "result {}", if self.ok { "PASS" } else { "FAIL" });
        s
    }
}

/// Recomputes `Aut(d)` and searches for an isomorphism `A ≅ Aut(d)`.
pub fn verify_realization(d: &Dessin, a: &PermGroup) -> Result<VerifyReport> {
    let aut = d.automorphisms();
    let order = StabChain::new(a).order();
    let witness = if aut.len() as u128 == order {
        find_isomorphism(a, &aut)?
    } else {
        None
    };
    let isomorphic = witness.is_some();
    Ok(VerifyReport {
        ok: isomorphic,
        aut_order: aut.len(),
        group_order: order,
        isomorphic,
        witness,
    })
}

/// Searches for an isomorphism from `a` onto the group whose full element
/// list is `b`, returning the images of `a`'s generators.
///
/// Generator images are tried in turn, pruned by element order; each tuple
/// is extended along the closure tree of `a` and accepted when it is a
/// well-defined homomorphism and injective. Since `|a| = |b|` is checked
/// first, injective means bijective.
pub fn find_isomorphism(a: &PermGroup, b: &[Perm]) -> Result<Option<Vec<Perm>>> {
    let table = ElementTable::new(a)?;
    if table.len() != b.len() {
        return Ok(None);
    }
    let gens = a.generators();
    if gens.is_empty() {
        return Ok(Some(Vec::new()));
    }
    // Closure tree of `a`: element i = parent[i] * gens[via[i]].
    let mut parent = vec![(0usize, 0usize); table.len()];
    for (i, e) in table.elements.iter().enumerate().skip(1) {
        parent[i] = (0..table.len())
            .flat_map(|p| (0..gens.len()).map(move |g| (p, g)))
            .find(|&(p, g)| p < i && &table.elements[p].then(&gens[g]) == e)
            .expect("breadth-first closure has a parent");
    }
    let b_index: HashMap<&Perm, usize> = b.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let b_orders: Vec<u64> = b.iter().map(Perm::order).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|g| (0..b.len()).filter(|&j| b_orders[j] == g.order()).collect())
        .collect();
    let mut choice = vec![0usize; gens.len()];
    Ok(search(&table, gens, &parent, b, &b_index, &candidates, &mut choice, 0))
}

#[allow(clippy::too_many_arguments)]
fn search(
    table: &ElementTable,
    gens: &[Perm],
    parent: &[(usize, usize)],
    b: &[Perm],
    b_index: &HashMap<&Perm, usize>,
    candidates: &[Vec<usize>],
    choice: &mut Vec<usize>,
    depth: usize,
) -> Option<Vec<Perm>> {
    if depth == gens.len() {
        return check_tuple(table, gens, parent, b, b_index, choice);
    }
    for &c in &candidates[depth] {
        choice[depth] = c;
        if let Some(found) = search(table, gens, parent, b, b_index, candidates, choice, depth + 1) {
            return Some(found);
        }
    }
    None
}

fn check_tuple(
    table: &ElementTable,
    gens: &[Perm],
    parent: &[(usize, usize)],
    b: &[Perm],
    b_index: &HashMap<&Perm, usize>,
    choice: &[usize],
) -> Option<Vec<Perm>> {
    let images: Vec<&Perm> = choice.iter().map(|&c| &b[c]).collect();
    let mut phi = vec![0usize; table.len()];
    phi[0] = *b_index.get(&Perm::identity(b[0].degree()))?;
    for i in 1..table.len() {
        let (p, g) = parent[i];
        phi[i] = *b_index.get(&b[phi[p]].then(images[g]))?;
    }
    let mut used = vec![false; b.len()];
    for &v in &phi {
        if used[v] {
            return None;
        }
        used[v] = true;
    }
    for (i, e) in table.elements.iter().enumerate() {
        for (g, gen) in gens.iter().enumerate() {
            let j = table.index_of(&e.then(gen))?;
            if b[phi[i]].then(images[g]) != b[phi[j]] {
                return None;
            }
        }
    }
    Some(images.into_iter().cloned().collect())
}

/// Names accepted by [`catalog`].
pub const CATALOG: [&str; 10] = ["C2", "C3", "C4", "C5", "C6", "V4", "S3", "D4", "Q8", "A4"];

/// Small groups as permutation groups.
pub fn catalog(name: &str) -> Option<PermGroup> {
    let g = |n: usize, gens: &[&str]| {
        PermGroup::new(n, gens.iter().map(|s| Perm::parse(s, n).unwrap()).collect()).unwrap()
    };
    Some(match name {
        "C1" | "1" => PermGroup::trivial(1),
        "C2" => g(2, &["(1 2)"]),
        "C3" => g(3, &["(1 2 3)"]),
        "C4" => g(4, &["(1 2 3 4)"]),
        "C5" => g(5, &["(1 2 3 4 5)"]),
        "C6" => g(6, &["(1 2 3 4 5 6)"]),
        "V4" => g(4, &["(1 2)(3 4)", "(1 3)(2 4)"]),
        "S3" => g(3, &["(1 2 3)", "(1 2)"]),
        "D4" => g(4, &["(1 2 3 4)", "(1 3)"]),
        "Q8" => quaternion_regular(),
        "A4" => g(4, &["(1 2 3)", "(1 2)(3 4)"]),
        _ => return None,
    })
}

/// `Q₈` acting on itself by right multiplication; point `2u + s + 1` is the
/// unit `u ∈ {1, i, j, k}` with sign `(−1)^s`.
fn quaternion_regular() -> PermGroup {
    // Unit products: (unit, negate) for u·v.
    const MUL: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let right = |v: usize| {
        let images = (0..8)
            .map(|p| {
                let (u, s) = (p / 2, p % 2 == 1);
                let (w, neg) = MUL[u][v];
                2 * w + usize::from(s ^ neg)
            })
            .collect();
        Perm::from_images(images).unwrap()
    };
    PermGroup::new(8, vec![right(1), right(2)]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm_core::{is_primitive, stabilizer_core_index};

    #[test]
    fn base_action_properties() {
        assert_eq!(base_action(2), Err(Error::BadDegree(2)));
        let d3 = base_action(3).unwrap();
        assert!(is_primitive(&d3.monodromy()).unwrap());
        assert_eq!(StabChain::new(&d3.monodromy()).order(), 6);
        assert_eq!(stabilizer_core_index(&base_action(4).unwrap().monodromy()).unwrap().index, 6);
        assert_eq!(schreier_basis(&base_action(5).unwrap(), 0).unwrap().rank(), 6);
    }

    #[test]
    fn degree_choice() {
        assert_eq!(choose_degree(1, 0), 3);
        assert_eq!(choose_degree(2, 1), 4);
        assert_eq!(choose_degree(5, 1), 4);
        assert_eq!(choose_degree(6, 2), 5);
        assert_eq!(choose_degree(12, 2), 5);
        assert_eq!(choose_degree(24, 2), 6);
        assert_eq!(choose_degree(2, 9), 8);
    }

    #[test]
    fn quaternion_group_is_regular_q8() {
        let q8 = catalog("Q8").unwrap();
        assert!(q8.is_transitive());
        let elems = q8.elements(100).unwrap();
        assert_eq!(elems.len(), 8);
        let involutions = elems.iter().filter(|g| g.order() == 2).count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn trivial_group_gives_base_action() {
        let r = realize(&PermGroup::trivial(1), None).unwrap();
        assert_eq!(r.degree, 3);
        assert_eq!(r.dessin, base_action(3).unwrap());
        assert_eq!(r.aut_order, 1);
        assert!(r.isomorphic);
    }

    #[test]
    fn small_realizations() {
        let r = realize(&catalog("C2").unwrap(), None).unwrap();
        assert_eq!((r.degree, r.dessin.darts(), r.aut_order), (4, 8, 2));
        let r = realize(&catalog("S3").unwrap(), None).unwrap();
        assert_eq!((r.degree, r.dessin.darts(), r.aut_order), (5, 30, 6));
        assert!(r.isomorphic);
        assert!(r.certificate().contains("isomorphism ok"));
    }

    #[test]
    fn verification_distinguishes_structure() {
        let r = realize(&catalog("C3").unwrap(), None).unwrap();
        assert!(verify_realization(&r.dessin, &catalog("C3").unwrap()).unwrap().ok);
        let v4 = realize(&catalog("V4").unwrap(), None).unwrap();
        let rep = verify_realization(&v4.dessin, &catalog("C4").unwrap()).unwrap();
        assert_eq!(rep.aut_order, 4);
        assert!(!rep.ok);
        assert!(verify_realization(&base_action(4).unwrap(), &PermGroup::trivial(1)).unwrap().ok);
    }

    #[test]
    fn explicit_degree_respected_and_checked() {
        let c2 = catalog("C2").unwrap();
        let r = realize(&c2, Some(5)).unwrap();
        assert_eq!(r.dessin.darts(), 10);
        assert_eq!(r.aut_order, 2);
        assert_eq!(realize(&c2, Some(3)).unwrap_err(), Error::BadDegree(3));
    }
}
