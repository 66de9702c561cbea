use std::fmt;
use std::ops::Mul;

use crate::error::{parse_err, Error, Result};

/// A permutation of `{0, .., n-1}` acting on the right.
///
/// Internally points are 0-based; the text format (`"(1 2 3)(5 6)"`) is
/// 1-based with fixed points omitted. Products follow the right-action
/// convention `i·(gh) = (i·g)·h`, so `&g * &h` applies `g` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            if im >= n {
                return Err(Error::PointOutOfRange {
                    point: im + 1,
                    degree: n,
                });
            }
            if seen[im] {
                return Err(parse_err(0, format!("image {} repeated", im + 1)));
            }
            seen[im] = true;
        }
        Ok(Perm {
            images: images.into_iter().map(|i| i as u32).collect(),
        })
    }

    /// Builds a permutation of the given degree from 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p == 0 || p > degree {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
                if touched[p - 1] {
                    return Err(parse_err(0, format!("point {p} appears twice")));
                }
                touched[p - 1] = true;
                let next = cycle[(k + 1) % cycle.len()];
                if next == 0 || next > degree {
                    return Err(Error::PointOutOfRange { point: next, degree });
                }
                images[p - 1] = next - 1;
            }
        }
        Perm::from_images(images)
    }

    /// Parses the cycle notation `"(1 2 3)(5 6)"`; `"()"` is the identity.
    /// Commas are accepted as separators too.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(parse_err(0, format!("expected '(' in {text:?}")));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| parse_err(0, format!("unclosed cycle in {text:?}")))?;
            let body = &rest[1..close];
            let mut cycle = Vec::new();
            for tok in body.split(|c: char| c.is_whitespace() || c == ',') {
                if tok.is_empty() {
                    continue;
                }
                let p: usize = tok
                    .parse()
                    .map_err(|_| parse_err(0, format!("bad point {tok:?}")))?;
                cycle.push(p);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = rest[close + 1..].trim_start();
        }
        Perm::from_cycles(degree, &cycles)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.degree()];
        for (i, &im) in self.images.iter().enumerate() {
            inv[im as usize] = i as u32;
        }
        Perm { images: inv }
    }

    pub fn pow(&self, e: i64) -> Perm {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Perm::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&sq);
            }
            sq = sq.then(&sq);
            e >>= 1;
        }
        acc
    }

    /// `h⁻¹ g h`, relabelling every point `i` of `g` to `i·h`.
    pub fn conjugate_by(&self, h: &Perm) -> Perm {
        h.inverse().then(self).then(h)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i as u32 == im)
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        (0..self.degree()).all(|i| other.apply(self.apply(i)) == self.apply(other.apply(i)))
    }

    /// All cycles, fixed points included, each starting at its least point,
    /// ordered by that point. Points are 0-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }

    /// Number of cycles, counting fixed points.
    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// Sorted multiset of cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.apply(i) == i).collect()
    }

    /// `true` for even permutations.
    pub fn is_even(&self) -> bool {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        transpositions.is_multiple_of(2)
    }

    /// Disjoint union: `self` on the first points, `other` shifted after it.
    pub fn direct_sum(&self, other: &Perm) -> Perm {
        let off = self.degree() as u32;
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&i| i + off));
        Perm { images }
    }
}

impl Mul for &Perm {
    type Output = Perm;

    fn mul(self, rhs: &Perm) -> Perm {
        self.then(rhs)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles() {
            if cycle.len() < 2 {
                continue;
            }
            any = true;
            write!(f, "(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}; {}]", self.degree(), self)
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse(s, n).unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("(1 2 3)(5 6)", 6).to_string(), "(1 2 3)(5 6)");
        assert_eq!(p("(3 1 2)", 3).to_string(), "(1 2 3)");
        assert_eq!(p("()", 4).to_string(), "()");
        assert_eq!(p("", 2), Perm::identity(2));
        assert_eq!(p("(1,2)(3,4)", 4).to_string(), "(1 2)(3 4)");
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(Perm::parse("(1 2 3", 3).is_err());
        assert!(Perm::parse("(1 4)", 3).is_err());
        assert!(Perm::parse("(1 2)(2 3)", 3).is_err());
        assert!(Perm::parse("1 2", 3).is_err());
    }

    #[test]
    fn right_action_convention() {
        // (1 2) then (2 3): 1 -> 2 -> 3.
        let g = p("(1 2)", 3);
        let h = p("(2 3)", 3);
        let gh = &g * &h;
        assert_eq!(gh.apply(0), 2);
        assert_eq!(gh.to_string(), "(1 3 2)");
    }

    #[test]
    fn conjugation_relabels_points() {
        let g = p("(1 2 3)", 4);
        let h = p("(3 4)", 4);
        assert_eq!(g.conjugate_by(&h).to_string(), "(1 2 4)");
    }

    #[test]
    fn order_parity_cycles() {
        let g = p("(1 2 3)(4 5)", 6);
        assert_eq!(g.order(), 6);
        assert!(!g.is_even());
        assert_eq!(g.cycle_type(), vec![1, 2, 3]);
        assert_eq!(g.cycle_count(), 3);
        assert_eq!(g.pow(6), Perm::identity(6));
        assert_eq!(g.pow(-1), g.inverse());
    }

    #[test]
    fn commuting() {
        let a = p("(1 2)(3 4)", 4);
        let b = p("(1 3)(2 4)", 4);
        let c = p("(1 2 3)", 4);
        assert!(a.commutes_with(&b));
        assert!(!a.commutes_with(&c));
    }
}
