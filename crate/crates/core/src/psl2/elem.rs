use std::fmt;

use rand::Rng;

use super::field as f;
use crate::perm_core::Perm;

/// An element of `PSL(2, n)`: a determinant-one matrix `[[a, b], [c, d]]`
/// taken up to sign, stored with its first nonzero entry in `1..=(n−1)/2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Psl2Elem {
    m: [u64; 4],
    n: u64,
}

impl Psl2Elem {
    /// Returns `None` unless the determinant is 1.
    pub fn new(a: u64, b: u64, c: u64, d: u64, n: u64) -> Option<Self> {
        let m = [a % n, b % n, c % n, d % n];
        let det = f::sub(f::mul(m[0], m[3], n), f::mul(m[1], m[2], n), n);
        (det == 1).then(|| Psl2Elem { m, n }.canonical())
    }

    pub fn identity(n: u64) -> Self {
        Psl2Elem { m: [1, 0, 0, 1], n }
    }

    /// Companion matrix `[[0, 1], [−1, τ]]` of trace `τ`.
    pub fn companion(trace: u64, n: u64) -> Self {
        Psl2Elem::new(0, 1, n - 1, trace, n).expect("companion has determinant 1")
    }

    fn canonical(mut self) -> Self {
        let n = self.n;
        let first = self.m.iter().copied().find(|&e| e != 0).unwrap_or(0);
        if first > (n - 1) / 2 {
            for e in &mut self.m {
                *e = f::neg(*e, n);
            }
        }
        self
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn entries(&self) -> [u64; 4] {
        self.m
    }

    /// Trace up to sign, normalized to `0..=(n−1)/2`.
    pub fn trace(&self) -> u64 {
        let t = f::add(self.m[0], self.m[3], self.n);
        t.min(f::neg(t, self.n))
    }

    pub fn mul(&self, o: &Psl2Elem) -> Psl2Elem {
        let n = self.n;
        let [a, b, c, d] = self.m;
        let [e, g, h, k] = o.m;
        Psl2Elem {
            m: [
                f::add(f::mul(a, e, n), f::mul(b, h, n), n),
                f::add(f::mul(a, g, n), f::mul(b, k, n), n),
                f::add(f::mul(c, e, n), f::mul(d, h, n), n),
                f::add(f::mul(c, g, n), f::mul(d, k, n), n),
            ],
            n,
        }
        .canonical()
    }

    pub fn inverse(&self) -> Psl2Elem {
        let n = self.n;
        let [a, b, c, d] = self.m;
        Psl2Elem {
            m: [d, f::neg(b, n), f::neg(c, n), a],
            n,
        }
        .canonical()
    }

    pub fn is_identity(&self) -> bool {
        *self == Psl2Elem::identity(self.n)
    }

    /// `h⁻¹ g h`.
    pub fn conjugate_by(&self, h: &Psl2Elem) -> Psl2Elem {
        h.inverse().mul(self).mul(h)
    }

    pub fn order(&self) -> u64 {
        let mut g = *self;
        let mut k = 1;
        while !g.is_identity() {
            g = g.mul(self);
            k += 1;
        }
        k
    }

    /// Right action on `P¹(F_n)`: row vector `[u, v]` times the matrix.
    /// Point `k ∈ F_n` is index `k`, and `∞` is index `n`.
    pub fn act(&self, point: usize) -> usize {
        let n = self.n;
        let (u, v) = if point as u64 == n {
            (1, 0)
        } else {
            (point as u64, 1)
        };
        let [a, b, c, d] = self.m;
        let u2 = f::add(f::mul(u, a, n), f::mul(v, c, n), n);
        let v2 = f::add(f::mul(u, b, n), f::mul(v, d, n), n);
        if v2 == 0 {
            n as usize
        } else {
            f::mul(u2, f::inv(v2, n), n) as usize
        }
    }

    pub fn to_perm(&self) -> Perm {
        let n = self.n as usize;
        Perm::from_images((0..=n).map(|p| self.act(p)).collect()).expect("Möbius maps are bijective")
    }

    pub fn random<R: Rng>(n: u64, rng: &mut R) -> Psl2Elem {
        loop {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            let c = rng.gen_range(0..n);
            if a == 0 {
                // With a = 0 the determinant is −bc.
                if f::mul(b, c, n) == n - 1 {
                    let d = rng.gen_range(0..n);
                    return Psl2Elem::new(a, b, c, d, n).unwrap();
                }
                continue;
            }
            let d = f::mul(f::add(1, f::mul(b, c, n), n), f::inv(a, n), n);
            return Psl2Elem::new(a, b, c, d, n).unwrap();
        }
    }
}

impl fmt::Display for Psl2Elem {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.m;
        write!(fm, "[[{a},{b}],[{c},{d}]]")
    }
}

impl fmt::Debug for Psl2Elem {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "{self} mod {}", self.n)
    }
}

/// `|PSL(2, n)| = n(n²−1)/2` for odd primes `n`.
pub fn psl2_order(n: u64) -> u128 {
    let n = n as u128;
    n * (n * n - 1) / 2
}

/// Whether `PSL(2, n)` has an element of order `o`: `o = 1`, `o = n`, or `o`
/// divides `(n ± 1)/2`.
pub fn has_element_order(o: u64, n: u64) -> bool {
    o == 1 || o == n || ((n - 1) / 2).is_multiple_of(o) || n.div_ceil(2).is_multiple_of(o)
}
