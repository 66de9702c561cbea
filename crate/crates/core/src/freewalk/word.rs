use std::fmt;

use crate::perm_core::Perm;

/// A generator or its inverse: `Letter { gen: 0, inv: false }` is `X`,
/// `gen: 1` is `Y`, and so on for larger free groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inv: bool,
}

impl Letter {
    pub const X: Letter = Letter { gen: 0, inv: false };
    pub const X_INV: Letter = Letter { gen: 0, inv: true };
    pub const Y: Letter = Letter { gen: 1, inv: false };
    pub const Y_INV: Letter = Letter { gen: 1, inv: true };

    pub fn inverse(self) -> Letter {
        Letter {
            gen: self.gen,
            inv: !self.inv,
        }
    }

    /// Image of point `p` under this letter.
    pub fn act(self, gens: &[Perm], inverses: &[Perm], p: usize) -> usize {
        if self.inv {
            inverses[self.gen].apply(p)
        } else {
            gens[self.gen].apply(p)
        }
    }
}

/// A freely reduced word in the free group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = FreeWord::default();
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn letter(l: Letter) -> Self {
        FreeWord { letters: vec![l] }
    }

    /// `base^e` for a single generator.
    pub fn power(gen: usize, e: i64) -> Self {
        let l = Letter { gen, inv: e < 0 };
        FreeWord::new(std::iter::repeat_n(l, e.unsigned_abs() as usize))
    }

    /// Appends a letter, cancelling against the last one when inverse.
    pub fn push(&mut self, l: Letter) {
        if self.letters.last() == Some(&l.inverse()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != w[1].inverse())
    }

    /// Net exponent of generator `gen`.
    pub fn exponent_sum(&self, gen: usize) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.gen == gen)
            .map(|l| if l.inv { -1 } else { 1 })
            .sum()
    }

    /// Right action of the word on a point.
    pub fn act(&self, gens: &[Perm], p: usize) -> usize {
        let inverses: Vec<Perm> = gens.iter().map(Perm::inverse).collect();
        self.letters
            .iter()
            .fold(p, |q, l| l.act(gens, &inverses, q))
    }

    /// The permutation obtained by substituting generator images.
    pub fn evaluate(&self, gens: &[Perm]) -> Perm {
        let n = gens.first().map(Perm::degree).unwrap_or(0);
        let inverses: Vec<Perm> = gens.iter().map(Perm::inverse).collect();
        self.letters.iter().fold(Perm::identity(n), |acc, l| {
            acc.then(if l.inv {
                &inverses[l.gen]
            } else {
                &gens[l.gen]
            })
        })
    }
}

const NAMES: [char; 6] = ['X', 'Y', 'U', 'V', 'W', 'T'];

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match NAMES.get(l.gen) {
                Some(c) => write!(f, "{c}")?,
                None => write!(f, "g{}", l.gen + 1)?,
            }
            if l.inv {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_on_construction() {
        let w = FreeWord::new([Letter::X, Letter::Y, Letter::Y_INV, Letter::X_INV]);
        assert!(w.is_empty());
        let w = FreeWord::new([Letter::X, Letter::Y, Letter::X]);
        assert_eq!(w.concat(&w.inverse()), FreeWord::identity());
        assert_eq!(w.to_string(), "X Y X");
        assert_eq!(w.inverse().to_string(), "X^-1 Y^-1 X^-1");
    }

    #[test]
    fn action_matches_evaluation() {
        let gens = vec![
            Perm::parse("(1 2 3)", 4).unwrap(),
            Perm::parse("(3 4)", 4).unwrap(),
        ];
        let w = FreeWord::new([Letter::X, Letter::Y_INV, Letter::X, Letter::X]);
        let g = w.evaluate(&gens);
        for p in 0..4 {
            assert_eq!(w.act(&gens, p), g.apply(p));
        }
        assert_eq!(w.exponent_sum(0), 3);
        assert_eq!(FreeWord::power(1, -3).exponent_sum(1), -3);
    }
}
