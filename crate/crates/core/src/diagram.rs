//! Symmetric coset diagrams and the (1)-join that sews two of them together.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{parse_err, Error, Result};
use crate::perm_core::{relocate, Perm, PermGroup};

/// Permutations `x, y, t` of the darts with `t² = 1`, `txt = x⁻¹` and
/// `tyt = y⁻¹`. Connectivity is not required.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricDiagram {
    x: Perm,
    y: Perm,
    t: Perm,
}

/// Darts `α, β` fixed by `y` with `β = αx = αt`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Handle {
    pub alpha: usize,
    pub beta: usize,
}

impl SymmetricDiagram {
    pub fn new(x: Perm, y: Perm, t: Perm) -> Result<Self> {
        let n = x.degree();
        for g in [&y, &t] {
            if g.degree() != n {
                return Err(Error::DegreeMismatch {
                    expected: n,
                    found: g.degree(),
                });
            }
        }
        if n == 0 {
            return Err(Error::BadDegree(0));
        }
        let d = SymmetricDiagram { x, y, t };
        if let Some(broken) = d.violated_relation() {
            return Err(Error::NotSymmetric(broken));
        }
        Ok(d)
    }

    /// `x = y = t = id` on one dart.
    pub fn trivial() -> Self {
        SymmetricDiagram {
            x: Perm::identity(1),
            y: Perm::identity(1),
            t: Perm::identity(1),
        }
    }

    /// First structural relation that fails, if any.
    pub fn violated_relation(&self) -> Option<&'static str> {
        let (x, y, t) = (&self.x, &self.y, &self.t);
        if !t.pow(2).is_identity() {
            Some("t^2 = 1")
        } else if x.conjugate_by(t) != x.inverse() {
            Some("txt = x^-1")
        } else if y.conjugate_by(t) != y.inverse() {
            Some("tyt = y^-1")
        } else {
            None
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

    pub fn t(&self) -> &Perm {
        &self.t
    }

    /// Transitivity of `⟨x, y⟩`.
    pub fn is_connected(&self) -> bool {
        PermGroup::new(self.darts(), vec![self.x.clone(), self.y.clone()])
            .expect("same degree")
            .is_transitive()
    }

    /// `w = y·x·t`, applying `y` first.
    pub fn w(&self) -> Perm {
        self.y.then(&self.x).then(&self.t)
    }

    /// Sorted cycle lengths of `w`, fixed points included.
    pub fn w_cycle_structure(&self) -> Vec<usize> {
        self.w().cycle_type()
    }

    pub fn is_handle(&self, h: Handle) -> bool {
        let n = self.darts();
        h.alpha < n
            && h.beta < n
            && h.alpha != h.beta
            && self.y.apply(h.alpha) == h.alpha
            && self.y.apply(h.beta) == h.beta
            && self.x.apply(h.alpha) == h.beta
            && self.t.apply(h.alpha) == h.beta
    }

    /// All handles, ordered by `α`. When `x` swaps `α` and `β` the pair is
    /// listed once, with `α < β`.
    pub fn find_handles(&self) -> Vec<Handle> {
        (0..self.darts())
            .map(|alpha| Handle {
                alpha,
                beta: self.x.apply(alpha),
            })
            .filter(|&h| self.is_handle(h))
            .filter(|h| {
                let flipped = Handle {
                    alpha: h.beta,
                    beta: h.alpha,
                };
                h.alpha < h.beta || !self.is_handle(flipped)
            })
            .collect()
    }

    /// Checks `xᵖ = y^q = (xy)ʳ = 1`; with `strict` the orders must equal
    /// `p, q, r` rather than divide them.
    pub fn verify_type(&self, p: u64, q: u64, r: u64, strict: bool) -> bool {
        let xy = self.x.then(&self.y);
        [(self.x.order(), p), (self.y.order(), q), (xy.order(), r)]
            .into_iter()
            .all(|(o, want)| if strict { o == want } else { want % o == 0 })
    }

    /// Renames dart `i` to `i·σ`.
    pub fn relabel(&self, sigma: &Perm) -> SymmetricDiagram {
        SymmetricDiagram {
            x: self.x.conjugate_by(sigma),
            y: self.y.conjugate_by(sigma),
            t: self.t.conjugate_by(sigma),
        }
    }

    /// Disjoint union; `other`'s darts are offset by `self.darts()`.
    pub fn disjoint_union(&self, other: &SymmetricDiagram) -> SymmetricDiagram {
        SymmetricDiagram {
            x: self.x.direct_sum(&other.x),
            y: self.y.direct_sum(&other.y),
            t: self.t.direct_sum(&other.t),
        }
    }

    pub fn parse_file(text: &str) -> Result<Self> {
        let mut n = None;
        let mut perms: [Option<Perm>; 3] = [None, None, None];
        for (k, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            if key == "darts" {
                n = Some(
                    rest.trim()
                        .parse::<usize>()
                        .map_err(|_| parse_err(k + 1, "bad dart count"))?,
                );
                continue;
            }
            let slot = match key {
                "x" => 0,
                "y" => 1,
                "t" => 2,
                other => return Err(parse_err(k + 1, format!("unknown key {other:?}"))),
            };
            let degree = n.ok_or_else(|| parse_err(k + 1, "cycles before darts line"))?;
            perms[slot] = Some(Perm::parse(rest, degree).map_err(|e| relocate(e, k + 1))?);
        }
        match perms {
            [Some(x), Some(y), Some(t)] => SymmetricDiagram::new(x, y, t),
            _ => Err(parse_err(0, "missing x, y or t line")),
        }
    }

    pub fn to_file(&self) -> String {
        format!(
            "darts {}\nx {}\ny {}\nt {}\n",
            self.darts(),
            self.x,
            self.y,
            self.t
        )
    }
}

/// Sews `d1` and `d2` along the handles: on the disjoint union (darts of
/// `d2` offset by `N₁`) the four `y`-fixed points become the transpositions
/// `(α₁ α₂)(β₁ β₂)`.
pub fn one_join(
    d1: &SymmetricDiagram,
    h1: Handle,
    d2: &SymmetricDiagram,
    h2: Handle,
) -> Result<SymmetricDiagram> {
    for (d, h) in [(d1, h1), (d2, h2)] {
        if !d.is_handle(h) {
            return Err(Error::InvalidHandle(h.alpha, h.beta));
        }
    }
    let off = d1.darts();
    let union = d1.disjoint_union(d2);
    let n = union.darts();
    let (a1, b1, a2, b2) = (h1.alpha, h1.beta, h2.alpha + off, h2.beta + off);
    let sew = Perm::from_cycles(n, &[vec![a1 + 1, a2 + 1], vec![b1 + 1, b2 + 1]])?;
    let joined = SymmetricDiagram {
        y: union.y.then(&sew),
        ..union
    };
    if let Some(broken) = joined.violated_relation() {
        return Err(Error::NotSymmetric(broken));
    }
    Ok(joined)
}

/// Cycle type of `w` after [`one_join`], predicted from the inputs alone:
/// the fixed points `α₁, α₂` of `w` merge into a 2-cycle, and the cycles
/// through `β₁, β₂` of lengths `ℓ₁, ℓ₂` merge into one of length `ℓ₁ + ℓ₂`.
pub fn predicted_join_w_cycles(
    d1: &SymmetricDiagram,
    h1: Handle,
    d2: &SymmetricDiagram,
    h2: Handle,
) -> Vec<usize> {
    let cycle_len = |d: &SymmetricDiagram, p: usize| {
        d.w().cycles().into_iter().find(|c| c.contains(&p)).map_or(0, |c| c.len())
    };
    let mut out = d1.w_cycle_structure();
    out.extend(d2.w_cycle_structure());
    let (l1, l2) = (cycle_len(d1, h1.beta), cycle_len(d2, h2.beta));
    for lost in [1, 1, l1, l2] {
        let i = out.iter().position(|&l| l == lost).expect("cycle present");
        out.swap_remove(i);
    }
    out.push(2);
    out.push(l1 + l2);
    out.sort_unstable();
    out
}

fn random_involution_commuting<R: Rng>(t: &Perm, rng: &mut R) -> Perm {
    // Orbits of ⟨t⟩ are paired off or kept; each pairing has two lifts.
    let n = t.degree();
    let mut orbits: Vec<Vec<usize>> = t.cycles();
    orbits.shuffle(rng);
    let mut images: Vec<usize> = (0..n).collect();
    let mut i = 0;
    while i < orbits.len() {
        let o = orbits[i].clone();
        let partner = (i + 1..orbits.len()).find(|&j| orbits[j].len() == o.len());
        match partner {
            Some(j) if rng.gen_bool(0.5) => {
                let other = orbits.remove(j);
                let flip = o.len() == 2 && rng.gen_bool(0.5);
                for (k, &a) in o.iter().enumerate() {
                    let b = other[if flip { 1 - k } else { k }];
                    images[a] = b;
                    images[b] = a;
                }
            }
            _ => {
                if o.len() == 2 && rng.gen_bool(0.3) {
                    images[o[0]] = o[1];
                    images[o[1]] = o[0];
                }
            }
        }
        i += 1;
    }
    Perm::from_images(images).expect("involution")
}

fn random_involution<R: Rng>(n: usize, fixed: &[usize], rng: &mut R) -> Perm {
    let mut free: Vec<usize> = (0..n).filter(|p| !fixed.contains(p)).collect();
    free.shuffle(rng);
    let mut images: Vec<usize> = (0..n).collect();
    for pair in free.chunks(2) {
        if pair.len() == 2 && rng.gen_bool(0.7) {
            images[pair[0]] = pair[1];
            images[pair[1]] = pair[0];
        }
    }
    Perm::from_images(images).expect("involution")
}

/// A random diagram on `n ≥ 2` darts with `y² = 1` and at least one handle
/// `(α, β) = (0, 1)` before shuffling labels. Built as `x = tu`, with `t, u`
/// involutions, and `y` an involution commuting with `t`.
pub fn random_diagram_with_handle<R: Rng>(n: usize, rng: &mut R) -> SymmetricDiagram {
    assert!(n >= 2);
    // t contains (0 1); y fixes 0 and 1; u fixes 1 so that 0·x = 1.
    let rest = random_involution(n, &[0, 1], rng);
    let mut t_images = rest.images().collect::<Vec<_>>();
    t_images[0] = 1;
    t_images[1] = 0;
    let t = Perm::from_images(t_images).expect("involution");
    let y = loop {
        let y = random_involution_commuting(&t, rng);
        if y.apply(0) == 0 {
            break y;
        }
    };
    let u = random_involution(n, &[1], rng);
    let x = t.then(&u);
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let sigma = Perm::from_images(labels).expect("bijection");
    let d = SymmetricDiagram { x, y, t }.relabel(&sigma);
    debug_assert!(d.violated_relation().is_none());
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn t0() -> SymmetricDiagram {
        let s = Perm::parse("(1 2)", 2).unwrap();
        SymmetricDiagram::new(s.clone(), Perm::identity(2), s).unwrap()
    }

    #[test]
    fn toy_diagram() {
        let d = t0();
        assert_eq!(d.find_handles(), vec![Handle { alpha: 0, beta: 1 }]);
        assert_eq!(d.w_cycle_structure(), vec![1, 1]);
        assert!(!d.verify_type(3, 2, 7, false));
        assert!(d.verify_type(2, 1, 2, false));
        assert_eq!(SymmetricDiagram::trivial().w_cycle_structure(), vec![1]);
        assert_eq!(t0().disjoint_union(&t0()).find_handles().len(), 2);
    }

    #[test]
    fn joining_toys() {
        let h = Handle { alpha: 0, beta: 1 };
        let j = one_join(&t0(), h, &t0(), h).unwrap();
        assert_eq!(j.darts(), 4);
        assert_eq!(j.y(), &Perm::parse("(1 3)(2 4)", 4).unwrap());
        assert!(j.is_connected());
        assert!(j.find_handles().is_empty());
        assert_eq!(j.w_cycle_structure(), vec![2, 2]);
        assert_eq!(predicted_join_w_cycles(&t0(), h, &t0(), h), vec![2, 2]);
        assert_eq!(
            one_join(&t0(), Handle { alpha: 0, beta: 0 }, &t0(), h),
            Err(Error::InvalidHandle(0, 0))
        );
    }

    #[test]
    fn structure_is_enforced() {
        let x = Perm::parse("(1 2 3)", 3).unwrap();
        assert_eq!(
            SymmetricDiagram::new(x, Perm::identity(3), Perm::identity(3)),
            Err(Error::NotSymmetric("txt = x^-1"))
        );
    }

    #[test]
    fn file_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let d = random_diagram_with_handle(7, &mut rng);
        assert_eq!(SymmetricDiagram::parse_file(&d.to_file()).unwrap(), d);
        assert!(SymmetricDiagram::parse_file("darts 2\nx (1 2)\ny ()\n").is_err());
    }

    #[test]
    fn random_diagrams_have_handles() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for n in 2..12 {
            let d = random_diagram_with_handle(n, &mut rng);
            assert!(d.violated_relation().is_none());
            assert!(d.y().pow(2).is_identity());
            assert!(!d.find_handles().is_empty());
        }
    }
}
