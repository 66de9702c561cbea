use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;

/// A permutation of `Z` of the form `i ↦ σ(i) + k`, where `σ` moves only
/// finitely many points.
///
/// Products act on the right: `i·(gh) = (i·g)·h`. For `g = (σ, k)` and
/// `h = (τ, l)` this gives `gh = (σ', k + l)` with `σ'(i) = τ(σ(i) + k) − k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AlmostTranslation {
    shift: i64,
    /// Moved points only.
    finitary: BTreeMap<i64, i64>,
}

impl AlmostTranslation {
    pub fn identity() -> Self {
        Self::default()
    }

    /// The translation `i ↦ i + k`.
    pub fn shift(k: i64) -> Self {
        AlmostTranslation {
            shift: k,
            finitary: BTreeMap::new(),
        }
    }

    /// The cycle `a₀ → a₁ → … → a₀`. Panics on repeated points.
    pub fn cycle(points: &[i64]) -> Self {
        let distinct: BTreeSet<i64> = points.iter().copied().collect();
        assert_eq!(distinct.len(), points.len(), "cycle has repeated points");
        let mut finitary = BTreeMap::new();
        if points.len() > 1 {
            for (i, &a) in points.iter().enumerate() {
                finitary.insert(a, points[(i + 1) % points.len()]);
            }
        }
        AlmostTranslation { shift: 0, finitary }
    }

    /// Product of disjoint or overlapping cycles, applied left to right.
    pub fn cycles(cycles: &[&[i64]]) -> Self {
        cycles
            .iter()
            .fold(Self::identity(), |acc, c| acc.then(&Self::cycle(c)))
    }

    /// Builds `(σ, k)` from the moved points of `σ`; `None` unless `σ` is a
    /// bijection of its support.
    pub fn from_parts(shift: i64, pairs: impl IntoIterator<Item = (i64, i64)>) -> Option<Self> {
        let finitary: BTreeMap<i64, i64> = pairs.into_iter().filter(|(a, b)| a != b).collect();
        let domain: BTreeSet<i64> = finitary.keys().copied().collect();
        let image: BTreeSet<i64> = finitary.values().copied().collect();
        (domain == image).then_some(AlmostTranslation { shift, finitary })
    }

    pub fn shift_amount(&self) -> i64 {
        self.shift
    }

    fn sigma(&self, i: i64) -> i64 {
        self.finitary.get(&i).copied().unwrap_or(i)
    }

    /// Sorted support of the finitary part.
    pub fn support(&self) -> Vec<i64> {
        self.finitary.keys().copied().collect()
    }

    pub fn apply(&self, i: i64) -> i64 {
        self.sigma(i) + self.shift
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &AlmostTranslation) -> AlmostTranslation {
        let k = self.shift;
        let candidates: BTreeSet<i64> = self
            .finitary
            .keys()
            .copied()
            .chain(other.finitary.keys().map(|&j| j - k))
            .collect();
        let finitary = candidates
            .into_iter()
            .map(|i| (i, other.sigma(self.sigma(i) + k) - k))
            .filter(|(i, j)| i != j)
            .collect();
        AlmostTranslation {
            shift: k + other.shift,
            finitary,
        }
    }

    pub fn inverse(&self) -> AlmostTranslation {
        let k = self.shift;
        let finitary = self.finitary.iter().map(|(&a, &b)| (b + k, a + k)).collect();
        AlmostTranslation {
            shift: -k,
            finitary,
        }
    }

    pub fn pow(&self, e: i64) -> AlmostTranslation {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        (0..e.unsigned_abs()).fold(Self::identity(), |acc, _| acc.then(&base))
    }

    /// `h⁻¹ g h`.
    pub fn conjugate_by(&self, h: &AlmostTranslation) -> AlmostTranslation {
        h.inverse().then(self).then(h)
    }

    pub fn is_identity(&self) -> bool {
        self.shift == 0 && self.finitary.is_empty()
    }

    /// Parity of the finitary part: `true` when odd.
    pub fn parity(&self) -> bool {
        let cycles = self.finitary_cycles();
        let moved: usize = cycles.iter().map(Vec::len).sum();
        (moved - cycles.len()) % 2 == 1
    }

    /// Membership in the even subgroup `P⁺`.
    pub fn is_even(&self) -> bool {
        !self.parity()
    }

    /// Cycles of the finitary part, each led by its least point.
    pub fn finitary_cycles(&self) -> Vec<Vec<i64>> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for &start in self.finitary.keys() {
            if !seen.insert(start) {
                continue;
            }
            let mut cycle = vec![start];
            let mut p = self.sigma(start);
            while p != start {
                seen.insert(p);
                cycle.push(p);
                p = self.sigma(p);
            }
            out.push(cycle);
        }
        out
    }

    /// Order of a shift-free element; `None` for a nontrivial shift.
    pub fn order(&self) -> Option<u64> {
        if self.shift != 0 {
            return None;
        }
        Some(
            self.finitary_cycles()
                .iter()
                .fold(1, |acc, c| crate::perm_core::lcm(acc, c.len() as u64)),
        )
    }
}

impl fmt::Display for AlmostTranslation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.finitary_cycles();
        if cycles.is_empty() && self.shift != 0 {
            return write!(f, "x^{}", self.shift);
        }
        if cycles.is_empty() {
            f.write_str("()")?;
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(i64::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        if self.shift != 0 {
            write!(f, "x^{}", self.shift)?;
        }
        Ok(())
    }
}

impl fmt::Debug for AlmostTranslation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Named identity checks, in the order they were run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub checks: Vec<(String, bool)>,
}

impl CheckReport {
    fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.checks.push((name.into(), ok));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    pub fn to_text(&self) -> String {
        self.checks
            .iter()
            .map(|(name, ok)| format!("{} {}\n", if *ok { "ok  " } else { "FAIL" }, name))
            .collect()
    }
}

/// The relations `y² = (y·yˣ)³ = (y·y^{xⁱ})² = 1` for `2 ≤ i ≤ imax`, with
/// `x` the unit shift and `y = (0 1)`.
pub fn relation_suite(imax: i64) -> CheckReport {
    let x = AlmostTranslation::shift(1);
    let y = AlmostTranslation::cycle(&[0, 1]);
    let mut report = CheckReport::default();
    report.check("y^2 = 1", y.pow(2).is_identity());
    report.check("x has infinite order", !x.pow(7).is_identity());
    let yx = y.conjugate_by(&x);
    report.check("y^x = (1 2)", yx == AlmostTranslation::cycle(&[1, 2]));
    let prod = y.then(&yx);
    report.check(
        "(y y^x)^3 = 1",
        prod.pow(3).is_identity() && !prod.is_identity(),
    );
    for i in 2..=imax {
        let yi = y.conjugate_by(&x.pow(i));
        let prod = y.then(&yi);
        report.check(
            format!("(y y^(x^{i}))^2 = 1"),
            prod.pow(2).is_identity() && !prod.is_identity(),
        );
    }
    report
}

/// The identities behind generating `P` or `P⁺` from `x` and the `q`-cycle
/// `y = (1 2 … q)`: `yˣy⁻¹ = (1 q q+1)`, conjugating by `(yˣ)²` gives
/// `(1 2 3)`, and conjugating that by `x^{k−1}` gives `(k k+1 k+2)` for
/// `1 ≤ k ≤ kmax`.
pub fn lemma_qcycle(q: i64, kmax: i64) -> CheckReport {
    assert!(q >= 2, "q must be at least 2");
    let x = AlmostTranslation::shift(1);
    let points: Vec<i64> = (1..=q).collect();
    let y = AlmostTranslation::cycle(&points);
    let mut report = CheckReport::default();
    report.check(
        format!("y has order {q}"),
        y.order() == Some(q as u64),
    );
    report.check(
        format!("y is {}", if q % 2 == 1 { "even" } else { "odd" }),
        y.is_even() == (q % 2 == 1),
    );
    let yx = y.conjugate_by(&x);
    let c = yx.then(&y.inverse());
    report.check(
        format!("y^x y^-1 = (1 {q} {})", q + 1),
        c == AlmostTranslation::cycle(&[1, q, q + 1]),
    );
    let base = c.conjugate_by(&yx.pow(2));
    report.check(
        "conjugate by (y^x)^2 = (1 2 3)",
        base == AlmostTranslation::cycle(&[1, 2, 3]),
    );
    for k in 1..=kmax {
        report.check(
            format!("conjugate by x^{} = ({k} {} {})", k - 1, k + 1, k + 2),
            base.conjugate_by(&x.pow(k - 1)) == AlmostTranslation::cycle(&[k, k + 1, k + 2]),
        );
    }
    report
}

/// Largest `n` for which [`embed_symmetric`] enumerates the closure.
pub const CLOSURE_LIMIT: usize = 6;

#[derive(Clone, Debug)]
pub struct EmbeddingReport {
    /// `y_k = (k k+1)` for `k = 1..n−1`.
    pub generators: Vec<AlmostTranslation>,
    pub relations: CheckReport,
    /// Order of the generated subgroup, when `n ≤ CLOSURE_LIMIT`.
    pub closure_order: Option<u64>,
}

impl EmbeddingReport {
    pub fn passed(&self, n: usize) -> bool {
        let factorial: u64 = (1..=n as u64).product();
        self.relations.passed() && self.closure_order.is_none_or(|o| o == factorial)
    }
}

/// The transpositions `y_k = y^{xᵏ} = (k k+1)` and their Coxeter relations
/// `(y_k y_l)^{m_kl} = 1`, with `m_kl` exactly the order of `y_k y_l`.
pub fn embed_symmetric(n: usize) -> EmbeddingReport {
    assert!(n >= 2, "n must be at least 2");
    let x = AlmostTranslation::shift(1);
    let y = AlmostTranslation::cycle(&[0, 1]);
    let generators: Vec<AlmostTranslation> = (1..n as i64)
        .map(|k| y.conjugate_by(&x.pow(k)))
        .collect();
    let mut relations = CheckReport::default();
    for (k, g) in generators.iter().enumerate() {
        let kk = k as i64 + 1;
        relations.check(
            format!("y_{kk} = ({kk} {})", kk + 1),
            *g == AlmostTranslation::cycle(&[kk, kk + 1]),
        );
    }
    for k in 0..generators.len() {
        for l in k..generators.len() {
            let m = match l - k {
                0 => 1,
                1 => 3,
                _ => 2,
            };
            let prod = generators[k].then(&generators[l]);
            relations.check(
                format!("(y_{} y_{})^{m} = 1", k + 1, l + 1),
                prod.order() == Some(m),
            );
        }
    }
    let closure_order = (n <= CLOSURE_LIMIT).then(|| closure_size(&generators));
    EmbeddingReport {
        generators,
        relations,
        closure_order,
    }
}

fn closure_size(gens: &[AlmostTranslation]) -> u64 {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(AlmostTranslation::identity());
    queue.push_back(AlmostTranslation::identity());
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = g.then(s);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    seen.len() as u64
}
