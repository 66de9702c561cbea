use std::collections::HashMap;

use super::schreier::SchreierData;
use crate::error::{parse_err, Error, Result};
use crate::hypermap::Dessin;
use crate::perm_core::{relocate, Perm, PermGroup, StabChain};

/// Upper bound on `|A|` for explicit element enumeration.
pub const ELEMENT_LIMIT: usize = 100_000;

/// Group elements in breadth-first closure order from the identity, with a
/// lookup table. This order fixes how covering darts are numbered.
#[derive(Clone, Debug)]
pub struct ElementTable {
    pub elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
}

impl ElementTable {
    pub fn new(group: &PermGroup) -> Result<Self> {
        let elements = group.elements(ELEMENT_LIMIT)?;
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i))
            .collect();
        Ok(ElementTable { elements, index })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, g: &Perm) -> Option<usize> {
        self.index.get(g).copied()
    }
}

/// Voltages in a finite group `A` on the edges `(point, X|Y)` of a dessin.
#[derive(Clone, Debug)]
pub struct VoltageAssignment {
    pub base: Dessin,
    pub target: PermGroup,
    /// `voltages[p][0]` on edge `(p, X)`, `voltages[p][1]` on `(p, Y)`.
    pub voltages: Vec<[Perm; 2]>,
}

impl VoltageAssignment {
    /// All voltages trivial.
    pub fn trivial(base: &Dessin, target: &PermGroup) -> Self {
        let id = Perm::identity(target.degree());
        VoltageAssignment {
            base: base.clone(),
            target: target.clone(),
            voltages: vec![[id.clone(), id]; base.darts()],
        }
    }

    pub fn voltage(&self, point: usize, gen: usize) -> &Perm {
        &self.voltages[point][gen]
    }

    /// Regular cover on darts `{1..N} × A`: `(i, a)·s = (i·s, a·v(i, s))`,
    /// with `(i, a)` numbered `i·|A| + idx(a)` (0-based).
    pub fn covering_dessin(&self) -> Result<Dessin> {
        let table = ElementTable::new(&self.target)?;
        self.covering_with(&table)
    }

    pub fn covering_with(&self, table: &ElementTable) -> Result<Dessin> {
        let m = table.len();
        let n = self.base.darts();
        let gens = [self.base.x(), self.base.y()];
        let mut images = [vec![0; n * m], vec![0; n * m]];
        for i in 0..n {
            for (ai, a) in table.elements.iter().enumerate() {
                for s in 0..2 {
                    let j = gens[s].apply(i);
                    let b = a.then(&self.voltages[i][s]);
                    let bi = table.index_of(&b).ok_or(Error::NotSurjective)?;
                    images[s][i * m + ai] = j * m + bi;
                }
            }
        }
        let [xi, yi] = images;
        Dessin::new(Perm::from_images(xi)?, Perm::from_images(yi)?)
    }

    /// Deck transformation of `g ∈ A`: `(i, a) ↦ (i, g⁻¹a)`. The sign makes
    /// `g ↦ deck(g)` a homomorphism under the right-action convention.
    pub fn deck_transformation(&self, table: &ElementTable, g: &Perm) -> Perm {
        let m = table.len();
        let gi = g.inverse();
        let mut images = vec![0; self.base.darts() * m];
        for i in 0..self.base.darts() {
            for (ai, a) in table.elements.iter().enumerate() {
                let b = gi.then(a);
                images[i * m + ai] = i * m + table.index_of(&b).expect("closed under products");
            }
        }
        Perm::from_images(images).expect("deck map is a bijection")
    }

    /// Voltage file: `base <path>` then `v <point> <X|Y> <cycles>` per
    /// non-identity voltage.
    pub fn to_file(&self, base_path: &str) -> String {
        let mut s = format!("base {base_path}\n");
        for (p, vs) in self.voltages.iter().enumerate() {
            for (g, v) in vs.iter().enumerate() {
                if !v.is_identity() {
                    s.push_str(&format!("v {} {} {}\n", p + 1, ["X", "Y"][g], v));
                }
            }
        }
        s
    }
}

/// Parsed voltage file: base path plus `(point, generator, element)` rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VoltageFile {
    pub base_path: String,
    pub entries: Vec<(usize, usize, Perm)>,
}

impl VoltageFile {
    pub fn parse(text: &str, target_degree: usize) -> Result<Self> {
        let mut base_path = None;
        let mut entries = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.splitn(4, char::is_whitespace);
            match parts.next() {
                Some("base") => base_path = Some(line[4..].trim().to_string()),
                Some("v") => {
                    let p: usize = parts
                        .next()
                        .and_then(|t| t.parse().ok())
                        .filter(|&p| p >= 1)
                        .ok_or_else(|| parse_err(k + 1, "bad point"))?;
                    let g = match parts.next() {
                        Some("X") => 0,
                        Some("Y") => 1,
                        _ => return Err(parse_err(k + 1, "generator must be X or Y")),
                    };
                    let v = Perm::parse(parts.next().unwrap_or(""), target_degree)
                        .map_err(|e| relocate(e, k + 1))?;
                    entries.push((p - 1, g, v));
                }
                _ => return Err(parse_err(k + 1, "expected 'base' or 'v'")),
            }
        }
        let base_path = base_path.ok_or_else(|| parse_err(0, "missing base line"))?;
        Ok(VoltageFile { base_path, entries })
    }

    pub fn into_assignment(self, base: &Dessin, target: &PermGroup) -> Result<VoltageAssignment> {
        let mut va = VoltageAssignment::trivial(base, target);
        for (p, g, v) in self.entries {
            if p >= base.darts() {
                return Err(Error::PointOutOfRange {
                    point: p + 1,
                    degree: base.darts(),
                });
            }
            va.voltages[p][g] = v;
        }
        Ok(va)
    }
}

/// True when `images` lie in `target` and generate all of it.
pub fn generates(target: &PermGroup, images: &[Perm]) -> Result<bool> {
    let full = StabChain::new(target);
    if images.iter().any(|g| g.degree() != target.degree() || !full.contains(g)) {
        return Ok(false);
    }
    let sub = PermGroup::new(target.degree(), images.to_vec())?;
    Ok(StabChain::new(&sub).order() == full.order())
}

/// Voltages sending Schreier generator `i` to `images[i]` and every tree
/// edge to the identity.
pub fn assign_epimorphism(
    base: &Dessin,
    sd: &SchreierData,
    target: &PermGroup,
    images: &[Perm],
) -> Result<VoltageAssignment> {
    if images.len() != sd.rank() {
        return Err(Error::LengthMismatch {
            expected: sd.rank(),
            found: images.len(),
        });
    }
    if !generates(target, images)? {
        return Err(Error::NotSurjective);
    }
    let mut va = VoltageAssignment::trivial(base, target);
    for (&(p, g), img) in sd.edges.iter().zip(images) {
        va.voltages[p][g] = img.clone();
    }
    Ok(va)
}

/// Voltage of a free word read from `start`: product of edge voltages along
/// its walk.
pub fn walk_voltage(va: &VoltageAssignment, start: usize, word: &super::FreeWord) -> Perm {
    let gens = [va.base.x(), va.base.y()];
    let mut p = start;
    let mut acc = Perm::identity(va.target.degree());
    for l in word.letters() {
        if l.inv {
            let q = gens[l.gen].inverse().apply(p);
            acc = acc.then(&va.voltages[q][l.gen].inverse());
            p = q;
        } else {
            acc = acc.then(&va.voltages[p][l.gen]);
            p = gens[l.gen].apply(p);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freewalk::schreier_basis;

    fn dessin(n: usize, x: &str, y: &str) -> Dessin {
        Dessin::new(Perm::parse(x, n).unwrap(), Perm::parse(y, n).unwrap()).unwrap()
    }

    fn grp(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(n, gens.iter().map(|s| Perm::parse(s, n).unwrap()).collect()).unwrap()
    }

    #[test]
    fn c2_cover_of_base_action() {
        let d = dessin(4, "(1 2 3 4)", "(1 2)");
        let sd = schreier_basis(&d, 0).unwrap();
        let c2 = grp(2, &["(1 2)"]);
        let mut images = vec![Perm::identity(2); sd.rank()];
        images[0] = Perm::parse("(1 2)", 2).unwrap();
        let va = assign_epimorphism(&d, &sd, &c2, &images).unwrap();
        let cover = va.covering_dessin().unwrap();
        assert_eq!(cover.darts(), 8);
        assert_eq!(cover.analyze().aut_order, 2);
        for (w, img) in sd.schreier_gens.iter().zip(&images) {
            assert_eq!(&walk_voltage(&va, 0, w), img);
        }
    }

    #[test]
    fn s3_cover_on_five_points() {
        let d = dessin(5, "(1 2 3 4 5)", "(1 2)");
        let sd = schreier_basis(&d, 0).unwrap();
        let s3 = grp(3, &["(1 2 3)", "(1 2)"]);
        let mut images = vec![Perm::identity(3); sd.rank()];
        images[0] = Perm::parse("(1 2 3)", 3).unwrap();
        images[1] = Perm::parse("(1 2)", 3).unwrap();
        let va = assign_epimorphism(&d, &sd, &s3, &images).unwrap();
        let cover = va.covering_dessin().unwrap();
        assert_eq!(cover.darts(), 30);
        assert_eq!(cover.analyze().aut_order, 6);
        let table = ElementTable::new(&s3).unwrap();
        for a in &table.elements {
            let deck = va.deck_transformation(&table, a);
            assert!(deck.commutes_with(cover.x()) && deck.commutes_with(cover.y()));
            assert_eq!(deck.is_identity(), a.is_identity());
            if !a.is_identity() {
                assert!(deck.fixed_points().is_empty());
            }
        }
    }

    #[test]
    fn trivial_target_reproduces_base() {
        let d = dessin(4, "(1 2 3 4)", "(1 2)");
        let va = VoltageAssignment::trivial(&d, &PermGroup::trivial(1));
        assert_eq!(va.covering_dessin().unwrap(), d);
    }

    #[test]
    fn non_generating_images_rejected() {
        let d = dessin(3, "(1 2 3)", "(1 2)");
        let sd = schreier_basis(&d, 0).unwrap();
        let c2 = grp(2, &["(1 2)"]);
        let images = vec![Perm::identity(2); sd.rank()];
        assert!(matches!(
            assign_epimorphism(&d, &sd, &c2, &images),
            Err(Error::NotSurjective)
        ));
        assert!(matches!(
            assign_epimorphism(&d, &sd, &c2, &images[1..]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn voltage_file_roundtrip() {
        let d = dessin(3, "(1 2 3)", "(1 2)");
        let mut va = VoltageAssignment::trivial(&d, &grp(2, &["(1 2)"]));
        va.voltages[2][1] = Perm::parse("(1 2)", 2).unwrap();
        let text = va.to_file("base.dessin");
        let vf = VoltageFile::parse(&text, 2).unwrap();
        assert_eq!(vf.base_path, "base.dessin");
        let back = vf.into_assignment(&d, &va.target).unwrap();
        assert_eq!(back.voltages, va.voltages);
    }
}
