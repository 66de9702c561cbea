//! Triangle-group quotients over `PSL(2, n)` acting on the projective line.

mod elem;
mod field;
mod pair;
mod presentation;
mod solver;

use std::fmt::Write as _;

pub use elem::{has_element_order, psl2_order, Psl2Elem};
pub use field::is_prime;
pub use pair::{
    check_hyperbolic, check_orders, class_representatives, find_generating_pair,
    find_generating_pair_seeded, modulus_for_type, GeneratingPair, DEFAULT_PAIR_BUDGET, SEED_SPAN,
};
pub use presentation::{
    smith_invariants, stabilizer_presentation, triangle_relators, z_word, Relator, RelatorKind,
    StabilizerPresentation,
};
pub use solver::{check_relator_voltages, solve_voltages_with_relators, DEFAULT_SOLVER_BUDGET};

use crate::error::Result;
use crate::hypermap::Dessin;

/// The dessin of `⟨x, y⟩` on `P¹(F_n)`, darts `1..=n` for `0..n−1` and
/// dart `n+1` for `∞`.
pub fn projective_dessin(x: &Psl2Elem, y: &Psl2Elem) -> Result<Dessin> {
    Dessin::new(x.to_perm(), y.to_perm())
}

/// Genus from `2(g−1) = (n+1)(1 − 1/p − 1/q − 1/r)`, when integral.
pub fn riemann_hurwitz_genus(p: u64, q: u64, r: u64, n: u64) -> Option<u64> {
    let (p, q, r, m) = (p as i128, q as i128, r as i128, n as i128 + 1);
    let num = m * (p * q * r - q * r - p * r - p * q);
    let den = 2 * p * q * r;
    if num % den != 0 {
        return None;
    }
    u64::try_from(num / den + 1).ok()
}

/// Plain-text certificate for a projective dessin.
pub fn certificate(pair: &GeneratingPair, p: u64, q: u64, r: u64, d: &Dessin) -> String {
    let (cx, cy, cz) = d.cycle_counts();
    let mut s = String::new();
    let _ = writeln!(s, "type {p},{q},{r}");
    let _ = writeln!(s, "prime {}", pair.prime);
    let _ = writeln!(s, "seed {}", pair.seed);
    let _ = writeln!(s, "attempts {}", pair.attempts);
    let _ = writeln!(s, "x {}", pair.x);
    let _ = writeln!(s, "y {}", pair.y);
    let _ = writeln!(s, "orders {},{},{}", pair.x.order(), pair.y.order(), pair.x.mul(&pair.y).order());
    let _ = writeln!(s, "darts {}", d.darts());
    let _ = writeln!(s, "cycles {cx}/{cy}/{cz}");
    let _ = writeln!(s, "euler {}", d.euler_characteristic());
    let _ = writeln!(s, "genus {}", d.genus());
    match riemann_hurwitz_genus(p, q, r, pair.prime) {
        Some(g) => {
            let _ = writeln!(s, "genus_formula {g}");
        }
        None => {
            let _ = writeln!(s, "genus_formula non-integral");
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hurwitz_genus_formula() {
        assert_eq!(riemann_hurwitz_genus(3, 2, 7, 83), Some(2));
        assert_eq!(riemann_hurwitz_genus(4, 3, 5, 239), Some(27));
        // 13 is not -1 mod 84: fixed points make the formula non-integral.
        assert_eq!(riemann_hurwitz_genus(2, 3, 7, 13), None);
        assert_eq!(riemann_hurwitz_genus(3, 2, 7, 5), None);
    }
}
