use std::collections::VecDeque;

use super::word::{FreeWord, Letter};
use crate::error::{Error, Result};
use crate::hypermap::Dessin;
use crate::perm_core::Perm;

/// Spanning tree of a free-group action and the Schreier generators of the
/// base-point stabilizer.
#[derive(Clone, Debug)]
pub struct SchreierData {
    pub base: usize,
    /// Coset representative carrying `base` to each point.
    pub tree: Vec<FreeWord>,
    pub schreier_gens: Vec<FreeWord>,
    /// The non-tree edge `(point, generator)` behind each Schreier generator.
    pub edges: Vec<(usize, usize)>,
    /// `edge_index[p][g]` is the Schreier generator for edge `(p, g)`, or
    /// `None` for tree edges.
    edge_index: Vec<Vec<Option<usize>>>,
    gens: Vec<Perm>,
    inverses: Vec<Perm>,
}

/// One step of a rewritten word: Schreier generator index and sign.
pub type RewriteStep = (usize, i32);

impl SchreierData {
    /// Builds the tree breadth-first, trying letters in the order
    /// `X, X⁻¹, Y, Y⁻¹, ...` at each point.
    pub fn from_action(gens: &[Perm], base: usize) -> Result<Self> {
        let n = gens.first().map(Perm::degree).unwrap_or(1);
        let inverses: Vec<Perm> = gens.iter().map(Perm::inverse).collect();
        let mut tree: Vec<Option<FreeWord>> = vec![None; n];
        let mut is_tree = vec![vec![false; gens.len()]; n];
        tree[base] = Some(FreeWord::identity());
        let mut queue = VecDeque::from([base]);
        let mut reached = 1;
        while let Some(p) = queue.pop_front() {
            for g in 0..gens.len() {
                for inv in [false, true] {
                    let l = Letter { gen: g, inv };
                    let q = l.act(gens, &inverses, p);
                    if tree[q].is_some() {
                        continue;
                    }
                    let mut w = tree[p].clone().unwrap();
                    w.push(l);
                    tree[q] = Some(w);
                    // The edge is stored as (tail, generator) in the positive
                    // direction.
                    if inv {
                        is_tree[q][g] = true;
                    } else {
                        is_tree[p][g] = true;
                    }
                    reached += 1;
                    queue.push_back(q);
                }
            }
        }
        if reached != n {
            return Err(Error::NotConnected);
        }
        let tree: Vec<FreeWord> = tree.into_iter().map(Option::unwrap).collect();
        let mut schreier_gens = Vec::new();
        let mut edges = Vec::new();
        let mut edge_index = vec![vec![None; gens.len()]; n];
        for p in 0..n {
            for g in 0..gens.len() {
                if is_tree[p][g] {
                    continue;
                }
                let q = gens[g].apply(p);
                let w = tree[p]
                    .concat(&FreeWord::letter(Letter { gen: g, inv: false }))
                    .concat(&tree[q].inverse());
                edge_index[p][g] = Some(schreier_gens.len());
                schreier_gens.push(w);
                edges.push((p, g));
            }
        }
        Ok(SchreierData {
            base,
            tree,
            schreier_gens,
            edges,
            edge_index,
            gens: gens.to_vec(),
            inverses,
        })
    }

    pub fn rank(&self) -> usize {
        self.schreier_gens.len()
    }

    pub fn degree(&self) -> usize {
        self.tree.len()
    }

    pub fn action(&self) -> &[Perm] {
        &self.gens
    }

    pub fn edge_generator(&self, point: usize, gen: usize) -> Option<usize> {
        self.edge_index[point][gen]
    }

    /// Reidemeister–Schreier rewrite of `word` read from `start`: the
    /// sequence of non-tree edges crossed, with direction. Returns the end
    /// point as well.
    pub fn rewrite(&self, start: usize, word: &FreeWord) -> (Vec<RewriteStep>, usize) {
        let mut out = Vec::new();
        let mut p = start;
        for l in word.letters() {
            if l.inv {
                let q = self.inverses[l.gen].apply(p);
                if let Some(i) = self.edge_index[q][l.gen] {
                    out.push((i, -1));
                }
                p = q;
            } else {
                if let Some(i) = self.edge_index[p][l.gen] {
                    out.push((i, 1));
                }
                p = self.gens[l.gen].apply(p);
            }
        }
        (out, p)
    }
}

pub fn schreier_basis(d: &Dessin, base: usize) -> Result<SchreierData> {
    SchreierData::from_action(&[d.x().clone(), d.y().clone()], base)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dessin(n: usize, x: &str, y: &str) -> Dessin {
        Dessin::new(Perm::parse(x, n).unwrap(), Perm::parse(y, n).unwrap()).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(schreier_basis(&dessin(3, "(1 2 3)", "(1 2)"), 0).unwrap().rank(), 4);
        let triv = schreier_basis(&Dessin::trivial(), 0).unwrap();
        assert_eq!(triv.rank(), 2);
        assert_eq!(triv.schreier_gens[0].to_string(), "X");
        assert_eq!(triv.schreier_gens[1].to_string(), "Y");
    }

    #[test]
    fn words_fix_base_and_tree_reaches_points() {
        let d = dessin(6, "(1 2 3)(4 5 6)", "(3 4)");
        let sd = schreier_basis(&d, 0).unwrap();
        let gens = sd.action().to_vec();
        for (p, w) in sd.tree.iter().enumerate() {
            assert_eq!(w.act(&gens, 0), p);
        }
        for w in &sd.schreier_gens {
            assert_eq!(w.act(&gens, 0), 0);
            assert!(!w.is_empty());
            assert!(w.is_reduced());
        }
        assert_eq!(sd.rank(), 7);
    }

    #[test]
    fn rewriting_a_schreier_generator_returns_itself() {
        let d = dessin(5, "(1 2 3 4 5)", "(1 2)");
        let sd = schreier_basis(&d, 0).unwrap();
        for (i, w) in sd.schreier_gens.iter().enumerate() {
            let (steps, end) = sd.rewrite(0, w);
            assert_eq!(end, 0);
            assert_eq!(steps, vec![(i, 1)]);
        }
    }

    #[test]
    fn disconnected_action_rejected() {
        let gens = vec![Perm::parse("(1 2)", 3).unwrap(), Perm::identity(3)];
        assert!(matches!(
            SchreierData::from_action(&gens, 0),
            Err(Error::NotConnected)
        ));
    }
}
