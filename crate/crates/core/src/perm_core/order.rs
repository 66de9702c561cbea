use super::group::PermGroup;
use super::perm::Perm;
use crate::error::{Error, Result};

/// Degree above which order computations refuse to run unless a larger
/// bound is passed explicitly.
pub const DEFAULT_DEGREE_BOUND: usize = 16;

struct Level {
    base: usize,
    /// `coset[β]` carries the base point to `β`; `coset_inv` is its inverse.
    coset: Vec<Option<Perm>>,
    coset_inv: Vec<Option<Perm>>,
    orbit: Vec<usize>,
}

/// Base and strong generating set built by deterministic Schreier–Sims.
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
    /// Strong generators, each tagged with the number of leading base
    /// points it fixes.
    strong: Vec<(Perm, usize)>,
}

impl StabChain {
    pub fn new(group: &PermGroup) -> Self {
        let degree = group.degree();
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
            strong: Vec::new(),
        };
        for g in group.generators() {
            if !g.is_identity() && !chain.strong.iter().any(|(s, _)| s == g) {
                chain.strong.push((g.clone(), 0));
            }
        }
        if chain.strong.is_empty() {
            return chain;
        }
        let first = first_moved(&chain.strong[0].0).unwrap();
        chain.push_level(first);
        chain.complete();
        chain
    }

    fn push_level(&mut self, base: usize) {
        self.levels.push(Level {
            base,
            coset: Vec::new(),
            coset_inv: Vec::new(),
            orbit: Vec::new(),
        });
    }

    fn level_gens(&self, i: usize) -> Vec<&Perm> {
        self.strong
            .iter()
            .filter(|(_, fixed)| *fixed >= i)
            .map(|(g, _)| g)
            .collect()
    }

    fn rebuild(&mut self, i: usize) {
        let gens: Vec<Perm> = self.level_gens(i).into_iter().cloned().collect();
        let n = self.degree;
        let base = self.levels[i].base;
        let mut coset: Vec<Option<Perm>> = vec![None; n];
        let mut orbit = vec![base];
        coset[base] = Some(Perm::identity(n));
        let mut head = 0;
        while head < orbit.len() {
            let b = orbit[head];
            head += 1;
            for g in &gens {
                let c = g.apply(b);
                if coset[c].is_none() {
                    coset[c] = Some(coset[b].as_ref().unwrap().then(g));
                    orbit.push(c);
                }
            }
        }
        let coset_inv = coset.iter().map(|u| u.as_ref().map(Perm::inverse)).collect();
        let lvl = &mut self.levels[i];
        lvl.coset = coset;
        lvl.coset_inv = coset_inv;
        lvl.orbit = orbit;
    }

    /// Sifts `g` from level `start`; returns the residue and the level at
    /// which sifting stopped (`levels.len()` if it passed every level).
    fn sift_from(&self, mut g: Perm, start: usize) -> (Perm, usize) {
        for (k, lvl) in self.levels.iter().enumerate().skip(start) {
            let b = g.apply(lvl.base);
            match &lvl.coset_inv[b] {
                Some(inv) => g = g.then(inv),
                None => return (g, k),
            }
        }
        (g, self.levels.len())
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let lvl = i as usize;
            self.rebuild(lvl);
            let gens: Vec<Perm> = self.level_gens(lvl).into_iter().cloned().collect();
            let mut jumped = None;
            'scan: for &b in &self.levels[lvl].orbit.clone() {
                for s in &gens {
                    let u = self.levels[lvl].coset[b].as_ref().unwrap();
                    let c = s.apply(b);
                    let h = u.then(s).then(self.levels[lvl].coset_inv[c].as_ref().unwrap());
                    if h.is_identity() {
                        continue;
                    }
                    let (res, j) = self.sift_from(h, lvl + 1);
                    if res.is_identity() {
                        continue;
                    }
                    if j == self.levels.len() {
                        let p = first_moved(&res).unwrap();
                        self.push_level(p);
                    }
                    self.strong.push((res, j));
                    for k in lvl + 1..j {
                        self.rebuild(k);
                    }
                    jumped = Some(j);
                    break 'scan;
                }
            }
            match jumped {
                Some(j) => i = j as isize,
                None => i -= 1,
            }
        }
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && self.sift_from(g.clone(), 0).0.is_identity()
    }
}

fn first_moved(g: &Perm) -> Option<usize> {
    (0..g.degree()).find(|&i| g.apply(i) != i)
}

pub fn group_order_bounded(group: &PermGroup, bound: usize) -> Result<u128> {
    if group.degree() > bound {
        return Err(Error::DegreeTooLarge {
            degree: group.degree(),
            bound,
        });
    }
    Ok(StabChain::new(group).order())
}

pub fn group_order(group: &PermGroup) -> Result<u128> {
    group_order_bounded(group, DEFAULT_DEGREE_BOUND)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoreIndex {
    pub group_order: u128,
    pub degree: usize,
    /// `|G| / N`: the order of a point stabilizer, equal to the index of the
    /// core in the stabilizer of the parent group.
    pub index: u128,
}

pub fn stabilizer_core_index(group: &PermGroup) -> Result<CoreIndex> {
    stabilizer_core_index_bounded(group, DEFAULT_DEGREE_BOUND)
}

pub fn stabilizer_core_index_bounded(group: &PermGroup, bound: usize) -> Result<CoreIndex> {
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let order = group_order_bounded(group, bound)?;
    Ok(CoreIndex {
        group_order: order,
        degree: group.degree(),
        index: order / group.degree() as u128,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(n, gens.iter().map(|s| Perm::parse(s, n).unwrap()).collect()).unwrap()
    }

    fn sym(n: usize) -> PermGroup {
        let cycle = Perm::from_cycles(n, &[(1..=n).collect()]).unwrap();
        let t = Perm::parse("(1 2)", n).unwrap();
        PermGroup::new(n, vec![cycle, t]).unwrap()
    }

    #[test]
    fn symmetric_orders() {
        let mut f = 1u128;
        for n in 2..=10 {
            f *= n as u128;
            assert_eq!(group_order(&sym(n)).unwrap(), f, "S_{n}");
        }
    }

    #[test]
    fn small_orders_match_closure() {
        for gens in [
            vec!["(1 2 3 4)", "(1 3)"],
            vec!["(1 2)(3 4)", "(1 3)(2 4)"],
            vec!["(1 2 3)", "(1 2)(3 4)"],
            vec!["(1 2 3 4 5)", "(2 5)(3 4)"],
            vec!["(1 2 3)(4 5 6)", "(1 4)(2 5)(3 6)"],
        ] {
            let n = 6;
            let g = grp(n, &gens);
            let closure = g.elements(1000).unwrap().len() as u128;
            assert_eq!(group_order(&g).unwrap(), closure, "{gens:?}");
        }
    }

    #[test]
    fn core_index_examples() {
        assert_eq!(stabilizer_core_index(&sym(4)).unwrap().index, 6);
        assert_eq!(stabilizer_core_index(&grp(2, &["(1 2)"])).unwrap().index, 1);
        assert_eq!(stabilizer_core_index(&sym(5)).unwrap().index, 24);
    }

    #[test]
    fn degree_bound_enforced() {
        let g = sym(17);
        assert!(matches!(group_order(&g), Err(Error::DegreeTooLarge { .. })));
        assert_eq!(group_order_bounded(&sym(12), 12).unwrap(), 479_001_600);
    }

    #[test]
    fn membership() {
        let a4 = grp(4, &["(1 2 3)", "(1 2)(3 4)"]);
        let chain = StabChain::new(&a4);
        assert!(chain.contains(&Perm::parse("(1 3)(2 4)", 4).unwrap()));
        assert!(!chain.contains(&Perm::parse("(1 2)", 4).unwrap()));
    }
}
