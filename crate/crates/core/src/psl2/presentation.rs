use std::fmt;

use crate::error::{Error, Result};
use crate::freewalk::{FreeWord, Letter, RewriteStep, SchreierData};
use crate::hypermap::Dessin;
use crate::perm_core::Perm;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelatorKind {
    X,
    Y,
    Z,
}

impl fmt::Display for RelatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelatorKind::X => "X",
            RelatorKind::Y => "Y",
            RelatorKind::Z => "Z",
        })
    }
}

/// One Reidemeister–Schreier relator: the conjugate of `X^p`, `Y^q` or
/// `Z^r` read from a cycle's least point, rewritten over Schreier generators.
#[derive(Clone, Debug)]
pub struct Relator {
    pub kind: RelatorKind,
    pub start: usize,
    pub steps: Vec<RewriteStep>,
}

#[derive(Clone, Debug)]
pub struct StabilizerPresentation {
    pub schreier: SchreierData,
    pub relators: Vec<Relator>,
    /// Nonzero invariant factors of the relator matrix.
    pub invariant_factors: Vec<i128>,
    /// Free rank of the abelianization.
    pub free_rank: usize,
}

impl StabilizerPresentation {
    pub fn generator_count(&self) -> usize {
        self.schreier.rank()
    }

    /// Exponent-sum matrix: one row per relator, one column per generator.
    pub fn relation_matrix(&self) -> Vec<Vec<i128>> {
        relation_matrix(&self.relators, self.schreier.rank())
    }

    pub fn torsion(&self) -> Vec<i128> {
        self.invariant_factors.iter().copied().filter(|&d| d > 1).collect()
    }
}

fn relation_matrix(relators: &[Relator], cols: usize) -> Vec<Vec<i128>> {
    relators
        .iter()
        .map(|r| {
            let mut row = vec![0i128; cols];
            for &(g, s) in &r.steps {
                row[g] += s as i128;
            }
            row
        })
        .collect()
}

/// The word `Z = (XY)⁻¹ = Y⁻¹X⁻¹`.
pub fn z_word() -> FreeWord {
    FreeWord::new([Letter::Y_INV, Letter::X_INV])
}

/// Relators for the type-`(p, q, r)` triangle group acting through `d`,
/// one per cycle of `x`, `y` and `z`. Every cycle length must divide its
/// period.
pub fn triangle_relators(
    d: &Dessin,
    sd: &SchreierData,
    p: u64,
    q: u64,
    r: u64,
) -> Result<Vec<Relator>> {
    let specs: [(RelatorKind, Perm, FreeWord, u64); 3] = [
        (RelatorKind::X, d.x().clone(), FreeWord::letter(Letter::X), p),
        (RelatorKind::Y, d.y().clone(), FreeWord::letter(Letter::Y), q),
        (RelatorKind::Z, d.z(), z_word(), r),
    ];
    let mut out = Vec::new();
    for (kind, perm, letter, period) in specs {
        for cycle in perm.cycles() {
            let len = cycle.len() as u64;
            if period == 0 || period % len != 0 {
                return Err(Error::DegreeMismatch {
                    expected: period as usize,
                    found: cycle.len(),
                });
            }
            let mut word = FreeWord::identity();
            for _ in 0..period {
                word = word.concat(&letter);
            }
            let start = cycle[0];
            let (steps, end) = sd.rewrite(start, &word);
            debug_assert_eq!(end, start);
            out.push(Relator { kind, start, steps });
        }
    }
    Ok(out)
}

/// Reidemeister–Schreier presentation of the stabilizer of `base`, with its
/// abelianization. Torsion means some cycle is shorter than its period.
pub fn stabilizer_presentation(
    d: &Dessin,
    p: u64,
    q: u64,
    r: u64,
    base: usize,
) -> Result<StabilizerPresentation> {
    let schreier = SchreierData::from_action(&[d.x().clone(), d.y().clone()], base)?;
    let relators = triangle_relators(d, &schreier, p, q, r)?;
    let matrix = relation_matrix(&relators, schreier.rank());
    let invariant_factors = smith_invariants(matrix)?;
    let torsion: Vec<i128> = invariant_factors.iter().copied().filter(|&x| x > 1).collect();
    if !torsion.is_empty() {
        return Err(Error::TorsionDetected(torsion));
    }
    let free_rank = schreier.rank() - invariant_factors.len();
    Ok(StabilizerPresentation {
        schreier,
        relators,
        invariant_factors,
        free_rank,
    })
}

/// Nonzero diagonal entries of the Smith normal form, each dividing the next.
pub fn smith_invariants(mut a: Vec<Vec<i128>>) -> Result<Vec<i128>> {
    let rows = a.len();
    let cols = a.first().map(Vec::len).unwrap_or(0);
    let overflow = || Error::Overflow;
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Pivot: smallest nonzero absolute value in the remaining block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0
                    && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let piv = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let k = a[i][t] / piv;
                if k != 0 {
                    for j in t..cols {
                        a[i][j] = a[i][j]
                            .checked_sub(k.checked_mul(a[t][j]).ok_or_else(overflow)?)
                            .ok_or_else(overflow)?;
                    }
                }
                if a[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let k = a[t][j] / piv;
                if k != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[j] = row[j]
                            .checked_sub(k.checked_mul(row[t]).ok_or_else(overflow)?)
                            .ok_or_else(overflow)?;
                    }
                }
                if a[t][j] != 0 {
                    clean = false;
                }
            }
            if clean {
                // Enforce divisibility of the rest of the block by the pivot.
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| a[i][j] % piv != 0);
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in t..cols {
                            a[t][j] = a[t][j].checked_add(a[i][j]).ok_or_else(overflow)?;
                        }
                        continue;
                    }
                }
            }
            // Move the smallest nonzero entry of row/column t to the pivot.
            let mut best = (t, t);
            for i in t..rows {
                if a[i][t] != 0 && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if a[t][j] != 0 && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            a.swap(t, best.0);
            for row in a.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    Ok(diag)
}
