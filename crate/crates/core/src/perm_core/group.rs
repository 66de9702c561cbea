use std::collections::{HashMap, VecDeque};

use super::perm::Perm;
use crate::error::{parse_err, Error, Result};

/// A permutation group given by generators of a common degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
}

/// Orbit of a point together with a Schreier tree: `tree[p]` is the
/// `(parent, generator index)` edge reaching `p`, `None` for the root and
/// for points outside the orbit.
#[derive(Clone, Debug)]
pub struct Orbit {
    pub base: usize,
    pub points: Vec<usize>,
    pub tree: Vec<Option<(usize, usize)>>,
    member: Vec<bool>,
}

impl Orbit {
    pub fn contains(&self, p: usize) -> bool {
        self.member[p]
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Generator indices whose product carries the base to `p`.
    pub fn word_to(&self, p: usize) -> Option<Vec<usize>> {
        if !self.member[p] {
            return None;
        }
        let mut word = Vec::new();
        let mut cur = p;
        while let Some((parent, g)) = self.tree[cur] {
            word.push(g);
            cur = parent;
        }
        word.reverse();
        Some(word)
    }
}

impl PermGroup {
    /// An empty generator list is allowed and denotes the trivial group.
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        Ok(PermGroup { degree, generators })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn orbit(&self, point: usize) -> Orbit {
        let n = self.degree;
        let mut member = vec![false; n];
        let mut tree = vec![None; n];
        let mut points = vec![point];
        member[point] = true;
        let mut head = 0;
        while head < points.len() {
            let p = points[head];
            head += 1;
            for (gi, g) in self.generators.iter().enumerate() {
                let q = g.apply(p);
                if !member[q] {
                    member[q] = true;
                    tree[q] = Some((p, gi));
                    points.push(q);
                }
            }
        }
        Orbit {
            base: point,
            points,
            tree,
            member,
        }
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if !seen[p] {
                let mut o = self.orbit(p).points;
                for &q in &o {
                    seen[q] = true;
                }
                o.sort_unstable();
                out.push(o);
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    pub fn evaluate(&self, word: &[usize]) -> Perm {
        word.iter()
            .fold(Perm::identity(self.degree), |acc, &g| acc.then(&self.generators[g]))
    }

    /// All elements by breadth-first closure from the identity, multiplying
    /// on the right by generators in the given order. Fails once `limit`
    /// elements have been exceeded.
    pub fn elements(&self, limit: usize) -> Result<Vec<Perm>> {
        let id = Perm::identity(self.degree);
        let mut index: HashMap<Perm, usize> = HashMap::new();
        index.insert(id.clone(), 0);
        let mut elems = vec![id];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &self.generators {
                let h = elems[i].then(g);
                if !index.contains_key(&h) {
                    if elems.len() >= limit {
                        return Err(Error::GroupTooLarge(limit));
                    }
                    index.insert(h.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(h);
                }
            }
        }
        Ok(elems)
    }

    /// Parses the group file format: `degree m`, then `gen <cycles>` lines.
    pub fn parse_file(text: &str) -> Result<Self> {
        let mut degree = None;
        let mut gens = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            match key {
                "degree" => {
                    let m: usize = rest
                        .trim()
                        .parse()
                        .map_err(|_| parse_err(k + 1, "bad degree"))?;
                    degree = Some(m);
                }
                "gen" => {
                    let m = degree.ok_or_else(|| parse_err(k + 1, "gen before degree"))?;
                    let g = Perm::parse(rest, m).map_err(|e| relocate(e, k + 1))?;
                    gens.push(g);
                }
                other => return Err(parse_err(k + 1, format!("unknown key {other:?}"))),
            }
        }
        let degree = degree.ok_or_else(|| parse_err(0, "missing degree line"))?;
        PermGroup::new(degree, gens)
    }

    pub fn to_file(&self) -> String {
        let mut s = format!("degree {}\n", self.degree);
        for g in &self.generators {
            s.push_str(&format!("gen {g}\n"));
        }
        s
    }
}

pub(crate) fn relocate(e: Error, line: usize) -> Error {
    match e {
        Error::Parse { msg, .. } => Error::Parse { line, msg },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(n, gens.iter().map(|s| Perm::parse(s, n).unwrap()).collect()).unwrap()
    }

    #[test]
    fn orbit_examples() {
        let o = grp(4, &["(1 2 3 4)"]).orbit(0);
        assert_eq!(o.len(), 4);
        assert_eq!(grp(3, &["(1 2)"]).orbit(2).points, vec![2]);
        let mut pts = grp(4, &["(1 2)", "(3 4)"]).orbit(0).points;
        pts.sort();
        assert_eq!(pts, vec![0, 1]);
    }

    #[test]
    fn tree_words_reach_points() {
        let g = grp(6, &["(1 2 3)(4 5)", "(3 4 6)"]);
        let o = g.orbit(0);
        for &p in &o.points {
            let w = o.word_to(p).unwrap();
            assert_eq!(g.evaluate(&w).apply(0), p);
        }
    }

    #[test]
    fn transitivity() {
        assert!(grp(3, &["(1 2 3)"]).is_transitive());
        assert!(!grp(3, &["(1 2)"]).is_transitive());
        assert!(grp(5, &["(1 2 3 4 5)", "(1 2)"]).is_transitive());
    }

    #[test]
    fn closure_and_file_roundtrip() {
        let s3 = grp(3, &["(1 2 3)", "(1 2)"]);
        assert_eq!(s3.elements(100).unwrap().len(), 6);
        assert!(s3.elements(5).is_err());
        let back = PermGroup::parse_file(&s3.to_file()).unwrap();
        assert_eq!(back, s3);
        assert!(PermGroup::parse_file("gen (1 2)\n").is_err());
    }
}
