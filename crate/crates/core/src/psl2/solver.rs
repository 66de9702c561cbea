use super::presentation::{triangle_relators, z_word};
use crate::error::{Error, Result};
use crate::freewalk::{generates, schreier_basis, walk_voltage, ElementTable, FreeWord, Letter, VoltageAssignment};
use crate::hypermap::Dessin;
use crate::perm_core::{Perm, PermGroup};

/// Default node budget for the relator-voltage search.
pub const DEFAULT_SOLVER_BUDGET: u64 = 1_000_000;

struct Search {
    /// `mul[a][b]` is the index of `a·b`.
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
    /// Relators as `(unknown, inverted)` sequences.
    relators: Vec<Vec<(usize, bool)>>,
    assign: Vec<Option<usize>>,
    trail: Vec<usize>,
    nodes: u64,
    budget: u64,
}

enum Outcome {
    Found,
    Exhausted,
}

impl Search {
    fn value(&self, u: usize, inverted: bool) -> Option<usize> {
        self.assign[u].map(|v| if inverted { self.inv[v] } else { v })
    }

    fn set(&mut self, u: usize, v: usize) {
        self.assign[u] = Some(v);
        self.trail.push(u);
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let u = self.trail.pop().unwrap();
            self.assign[u] = None;
        }
    }

    /// Solves relators with a single unassigned unknown occurring once;
    /// returns `false` on a violated relator.
    fn propagate(&mut self) -> bool {
        loop {
            let mut changed = false;
            for ri in 0..self.relators.len() {
                let mut free: Option<(usize, usize)> = None;
                let mut free_count = 0;
                let mut repeated = false;
                for (k, &(u, _)) in self.relators[ri].iter().enumerate() {
                    if self.assign[u].is_none() {
                        match free {
                            None => {
                                free = Some((k, u));
                                free_count = 1;
                            }
                            Some((_, fu)) if fu == u => repeated = true,
                            Some(_) => free_count += 1,
                        }
                    }
                }
                match free {
                    None => {
                        let prod = self.relators[ri]
                            .iter()
                            .fold(0, |acc, &(u, i)| self.mul[acc][self.value(u, i).unwrap()]);
                        if prod != 0 {
                            return false;
                        }
                    }
                    Some((k, u)) if free_count == 1 && !repeated => {
                        let rel = &self.relators[ri];
                        let prefix = rel[..k]
                            .iter()
                            .fold(0, |acc, &(w, i)| self.mul[acc][self.value(w, i).unwrap()]);
                        let suffix = rel[k + 1..]
                            .iter()
                            .fold(0, |acc, &(w, i)| self.mul[acc][self.value(w, i).unwrap()]);
                        // prefix · v^ε · suffix = 1
                        let ve = self.mul[self.inv[prefix]][self.inv[suffix]];
                        let v = if rel[k].1 { self.inv[ve] } else { ve };
                        self.set(u, v);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                return true;
            }
        }
    }

    /// Unassigned unknown in the relator with the fewest unassigned entries.
    fn pick(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for rel in &self.relators {
            let open: Vec<usize> = rel
                .iter()
                .map(|&(u, _)| u)
                .filter(|&u| self.assign[u].is_none())
                .collect();
            if let Some(&u) = open.first() {
                if best.is_none_or(|(c, _)| open.len() < c) {
                    best = Some((open.len(), u));
                }
            }
        }
        best.map(|(_, u)| u)
            .or_else(|| self.assign.iter().position(Option::is_none))
    }

    fn surjective(&self) -> bool {
        let m = self.inv.len();
        let gens: Vec<usize> = self.assign.iter().map(|v| v.unwrap()).collect();
        let mut seen = vec![false; m];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(a) = stack.pop() {
            for &g in &gens {
                let b = self.mul[a][g];
                if !seen[b] {
                    seen[b] = true;
                    count += 1;
                    stack.push(b);
                }
            }
        }
        count == m
    }

    fn dfs(&mut self) -> std::result::Result<Outcome, Error> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExhausted(self.budget));
        }
        let mark = self.trail.len();
        if !self.propagate() {
            self.undo_to(mark);
            return Ok(Outcome::Exhausted);
        }
        let Some(u) = self.pick() else {
            if self.surjective() {
                return Ok(Outcome::Found);
            }
            self.undo_to(mark);
            return Ok(Outcome::Exhausted);
        };
        let m = self.inv.len();
        // Non-identity values first: surjective solutions need them.
        for v in (1..m).chain(std::iter::once(0)) {
            let inner = self.trail.len();
            self.set(u, v);
            if let Outcome::Found = self.dfs()? {
                return Ok(Outcome::Found);
            }
            self.undo_to(inner);
        }
        self.undo_to(mark);
        Ok(Outcome::Exhausted)
    }
}

/// Searches for voltages in `a` on the non-tree edges of `d` such that the
/// product around every `x`-, `y`- and `z`-relator is trivial and the
/// voltages generate `a`.
///
/// `Ok(None)` means the search space was exhausted; `BudgetExhausted` means
/// it was cut short and nothing is proven.
pub fn solve_voltages_with_relators(
    d: &Dessin,
    p: u64,
    q: u64,
    r: u64,
    a: &PermGroup,
    budget: u64,
) -> Result<Option<VoltageAssignment>> {
    let sd = schreier_basis(d, 0)?;
    let relators = triangle_relators(d, &sd, p, q, r)?;
    let table = ElementTable::new(a)?;
    let m = table.len();
    let mut mul = vec![vec![0; m]; m];
    for (i, g) in table.elements.iter().enumerate() {
        for (j, h) in table.elements.iter().enumerate() {
            mul[i][j] = table.index_of(&g.then(h)).expect("closed");
        }
    }
    let inv: Vec<usize> = table
        .elements
        .iter()
        .map(|g| table.index_of(&g.inverse()).expect("closed"))
        .collect();
    let mut search = Search {
        mul,
        inv,
        relators: relators
            .iter()
            .map(|rel| rel.steps.iter().map(|&(g, s)| (g, s < 0)).collect())
            .collect(),
        assign: vec![None; sd.rank()],
        trail: Vec::new(),
        nodes: 0,
        budget,
    };
    match search.dfs()? {
        Outcome::Exhausted => Ok(None),
        Outcome::Found => {
            let mut va = VoltageAssignment::trivial(d, a);
            for (k, &(pt, g)) in sd.edges.iter().enumerate() {
                va.voltages[pt][g] = table.elements[search.assign[k].unwrap()].clone();
            }
            Ok(Some(va))
        }
    }
}

/// Independent check: from every dart, the voltage of `X^p`, `Y^q` and
/// `Z^r` is trivial, and the voltages generate the target.
pub fn check_relator_voltages(va: &VoltageAssignment, p: u64, q: u64, r: u64) -> Result<bool> {
    let pow = |w: FreeWord, e: u64| (0..e).fold(FreeWord::identity(), |acc, _| acc.concat(&w));
    let words = [
        pow(FreeWord::letter(Letter::X), p),
        pow(FreeWord::letter(Letter::Y), q),
        pow(z_word(), r),
    ];
    for start in 0..va.base.darts() {
        for w in &words {
            if !walk_voltage(va, start, w).is_identity() {
                return Ok(false);
            }
        }
    }
    let all: Vec<Perm> = va.voltages.iter().flat_map(|v| v.iter().cloned()).collect();
    generates(&va.target, &all)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2() -> PermGroup {
        PermGroup::new(2, vec![Perm::parse("(1 2)", 2).unwrap()]).unwrap()
    }

    #[test]
    fn trivial_target_always_solvable() {
        let d = Dessin::new(Perm::parse("(1 2 3)", 3).unwrap(), Perm::identity(3)).unwrap();
        let va = solve_voltages_with_relators(&d, 3, 1, 3, &PermGroup::trivial(1), 100)
            .unwrap()
            .unwrap();
        assert!(check_relator_voltages(&va, 3, 1, 3).unwrap());
    }

    #[test]
    fn genus_zero_has_no_c2_lift() {
        assert!(solve_voltages_with_relators(&Dessin::trivial(), 1, 1, 1, &c2(), 1000)
            .unwrap()
            .is_none());
        let d = Dessin::new(Perm::parse("(1 2 3)", 3).unwrap(), Perm::identity(3)).unwrap();
        assert!(solve_voltages_with_relators(&d, 3, 1, 3, &c2(), 1000)
            .unwrap()
            .is_none());
    }

    #[test]
    fn torus_has_c2_lift() {
        // Genus-1 dessin of type (4, 2, 4), every cycle full length.
        let d = Dessin::new(
            Perm::parse("(1 2 3 4)(5 6 7 8)", 8).unwrap(),
            Perm::parse("(1 3)(2 5)(4 7)(6 8)", 8).unwrap(),
        )
        .unwrap();
        assert_eq!(d.genus(), 1);
        assert_eq!(d.z().cycle_type(), vec![4, 4]);
        let va = solve_voltages_with_relators(&d, 4, 2, 4, &c2(), 10_000)
            .unwrap()
            .unwrap();
        assert!(check_relator_voltages(&va, 4, 2, 4).unwrap());
        let cover = va.covering_dessin().unwrap();
        assert_eq!(cover.darts(), 16);
        assert_eq!(cover.type_triple(), (4, 2, 4));
    }

    #[test]
    fn budget_is_reported() {
        let d = Dessin::new(
            Perm::parse("(1 2 3 4)(5 6 7 8)", 8).unwrap(),
            Perm::parse("(1 3)(2 5)(4 7)(6 8)", 8).unwrap(),
        )
        .unwrap();
        assert_eq!(
            solve_voltages_with_relators(&d, 4, 2, 4, &c2(), 1).unwrap_err(),
            Error::BudgetExhausted(1)
        );
    }
}
