//! Dessins (oriented hypermaps) as transitive permutation pairs.

use std::fmt::Write as _;

use crate::error::{parse_err, Error, Result};
use crate::perm_core::{centralizer_elements, relocate, Perm, PermGroup};

/// A connected oriented hypermap: `x` rotates darts around black vertices,
/// `y` around white vertices, and `z = (xy)⁻¹` around faces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dessin {
    x: Perm,
    y: Perm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DessinStats {
    pub darts: usize,
    pub type_: (u64, u64, u64),
    pub cycle_counts: (usize, usize, usize),
    pub euler_characteristic: i64,
    pub genus: u64,
    pub aut_order: usize,
    pub regular: bool,
    pub chiral: bool,
}

impl Dessin {
    pub fn new(x: Perm, y: Perm) -> Result<Self> {
        if x.degree() != y.degree() {
            return Err(Error::DegreeMismatch {
                expected: x.degree(),
                found: y.degree(),
            });
        }
        if x.degree() == 0 {
            return Err(Error::BadDegree(0));
        }
        let d = Dessin { x, y };
        if !d.monodromy().is_transitive() {
            return Err(Error::NotConnected);
        }
        Ok(d)
    }

    pub fn trivial() -> Self {
        Dessin {
            x: Perm::identity(1),
            y: Perm::identity(1),
        }
    }

    pub fn darts(&self) -> usize {
        self.x.degree()
    }

    pub fn x(&self) -> &Perm {
        &self.x
    }

    pub fn y(&self) -> &Perm {
        &self.y
    }

    pub fn z(&self) -> Perm {
        self.x.then(&self.y).inverse()
    }

    pub fn monodromy(&self) -> PermGroup {
        PermGroup::new(self.darts(), vec![self.x.clone(), self.y.clone()])
            .expect("generators share a degree")
    }

    /// Lcm of cycle lengths of `x`, `y`, `z`, fixed points included.
    pub fn type_triple(&self) -> (u64, u64, u64) {
        (self.x.order(), self.y.order(), self.z().order())
    }

    pub fn cycle_counts(&self) -> (usize, usize, usize) {
        (
            self.x.cycle_count(),
            self.y.cycle_count(),
            self.z().cycle_count(),
        )
    }

    pub fn euler_characteristic(&self) -> i64 {
        let (a, b, c) = self.cycle_counts();
        (a + b + c) as i64 - self.darts() as i64
    }

    pub fn genus(&self) -> u64 {
        ((2 - self.euler_characteristic()) / 2) as u64
    }

    /// Automorphisms: the centralizer of the monodromy group.
    pub fn automorphisms(&self) -> Vec<Perm> {
        centralizer_elements(&self.monodromy()).expect("dessins are connected")
    }

    pub fn mirror(&self) -> Dessin {
        Dessin {
            x: self.x.inverse(),
            y: self.y.inverse(),
        }
    }

    pub fn is_chiral(&self) -> bool {
        are_isomorphic(self, &self.mirror()).is_none()
    }

    pub fn analyze(&self) -> DessinStats {
        let aut = self.automorphisms().len();
        let chi = self.euler_characteristic();
        DessinStats {
            darts: self.darts(),
            type_: self.type_triple(),
            cycle_counts: self.cycle_counts(),
            euler_characteristic: chi,
            genus: ((2 - chi) / 2) as u64,
            aut_order: aut,
            regular: aut == self.darts(),
            chiral: self.is_chiral(),
        }
    }

    /// Parses `darts N`, `x <cycles>`, `y <cycles>`; `#` lines are comments.
    pub fn parse_file(text: &str) -> Result<Self> {
        let mut n = None;
        let mut x = None;
        let mut y = None;
        for (k, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let need = || n.ok_or_else(|| parse_err(k + 1, "cycles before darts line"));
            match key {
                "darts" => {
                    n = Some(
                        rest.trim()
                            .parse::<usize>()
                            .map_err(|_| parse_err(k + 1, "bad dart count"))?,
                    )
                }
                "x" => x = Some(Perm::parse(rest, need()?).map_err(|e| relocate(e, k + 1))?),
                "y" => y = Some(Perm::parse(rest, need()?).map_err(|e| relocate(e, k + 1))?),
                other => return Err(parse_err(k + 1, format!("unknown key {other:?}"))),
            }
        }
        match (x, y) {
            (Some(x), Some(y)) => Dessin::new(x, y),
            _ => Err(parse_err(0, "missing x or y line")),
        }
    }

    pub fn to_file(&self) -> String {
        format!("darts {}\nx {}\ny {}\n", self.darts(), self.x, self.y)
    }

    /// Walsh bipartite map: black vertices are cycles of `x`, white vertices
    /// cycles of `y`, one edge per dart.
    pub fn to_dot(&self) -> String {
        let mut black = vec![0; self.darts()];
        let mut white = vec![0; self.darts()];
        let xc = self.x.cycles();
        let yc = self.y.cycles();
        for (i, c) in xc.iter().enumerate() {
            for &p in c {
                black[p] = i;
            }
        }
        for (i, c) in yc.iter().enumerate() {
            for &p in c {
                white[p] = i;
            }
        }
        let mut s = String::from("graph dessin {\n");
        for i in 0..xc.len() {
            let _ = writeln!(s, "  b{} [shape=circle, style=filled, fillcolor=black, label=\"\"];", i + 1);
        }
        for i in 0..yc.len() {
            let _ = writeln!(s, "  w{} [shape=circle, label=\"\"];", i + 1);
        }
        for d in 0..self.darts() {
            let _ = writeln!(
                s,
                "  b{} -- w{} [label=\"{}\"];",
                black[d] + 1,
                white[d] + 1,
                d + 1
            );
        }
        s.push_str("}\n");
        s
    }
}

/// A dart bijection `φ` with `φ∘x₁ = x₂∘φ` and `φ∘y₁ = y₂∘φ` (both read in
/// the right-action sense), or `None`.
///
/// Dart `0` of `d1` is anchored at each dart of `d2` in turn and the map is
/// forced along a spanning tree; the first consistent bijection is returned.
pub fn are_isomorphic(d1: &Dessin, d2: &Dessin) -> Option<Perm> {
    let n = d1.darts();
    if n != d2.darts()
        || d1.x.cycle_type() != d2.x.cycle_type()
        || d1.y.cycle_type() != d2.y.cycle_type()
    {
        return None;
    }
    let orbit = d1.monodromy().orbit(0);
    let g1 = [&d1.x, &d1.y];
    let g2 = [&d2.x, &d2.y];
    'anchor: for target in 0..n {
        let mut img = vec![usize::MAX; n];
        img[0] = target;
        for &q in orbit.points.iter().skip(1) {
            let (p, g) = orbit.tree[q].unwrap();
            img[q] = g2[g].apply(img[p]);
        }
        let mut hit = vec![false; n];
        for &v in &img {
            if hit[v] {
                continue 'anchor;
            }
            hit[v] = true;
        }
        for k in 0..2 {
            for p in 0..n {
                if img[g1[k].apply(p)] != g2[k].apply(img[p]) {
                    continue 'anchor;
                }
            }
        }
        return Some(Perm::from_images(img).expect("checked bijective"));
    }
    None
}
