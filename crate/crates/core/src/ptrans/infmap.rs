use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// The planar maps whose face cycle `C` through `α = 0` is labelled by `Z`.
///
/// `N3` is trivalent with `y` an involution; `Np(p)` is `p`-valent with
/// `y` an involution; `Npq(p, q)` is the bipartite map with black vertices
/// of valency `p` or 1 and white vertices of valency `q` or 1. In each,
/// `z = y⁻¹x⁻¹` acts as `i ↦ i + 1` on labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InfiniteMap {
    N3,
    Np(i64),
    Npq(i64, i64),
}

/// A dart: a label on `C`, or the unlabelled inner edge of flower `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dart {
    Label(i64),
    Inner(i64),
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dart::Label(i) => write!(f, "{i}"),
            Dart::Inner(n) => write!(f, "I{n}"),
        }
    }
}

use Dart::{Inner, Label};

fn labels(it: impl IntoIterator<Item = i64>) -> Vec<Dart> {
    it.into_iter().map(Label).collect()
}

fn step(cycle: &[Dart], d: Dart, forward: bool) -> Dart {
    let i = cycle.iter().position(|&e| e == d).expect("dart lies on its rotation");
    let len = cycle.len();
    cycle[if forward { (i + 1) % len } else { (i + len - 1) % len }]
}

impl InfiniteMap {
    pub fn np(p: i64) -> Result<Self> {
        if p < 4 {
            return Err(Error::BadMap(format!("Np needs p >= 4, got {p}")));
        }
        Ok(InfiniteMap::Np(p))
    }

    pub fn npq(p: i64, q: i64) -> Result<Self> {
        if p < 3 || q < 3 {
            return Err(Error::BadMap(format!("Npq needs p, q >= 3, got ({p},{q})")));
        }
        Ok(InfiniteMap::Npq(p, q))
    }

    /// Parses `N3`, `Np(4)` or `Npq(4,3)`.
    pub fn parse(text: &str) -> Result<Self> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::BadMap(format!("unknown map '{text}'"));
        if t == "N3" {
            return Ok(InfiniteMap::N3);
        }
        let args = |prefix: &str| -> Option<Vec<i64>> {
            let inner = t.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
            inner.split(',').map(|s| s.parse().ok()).collect()
        };
        if let Some(a) = args("Npq") {
            return match a[..] {
                [p, q] => Self::npq(p, q),
                _ => Err(bad()),
            };
        }
        if let Some(a) = args("Np") {
            return match a[..] {
                [p] => Self::np(p),
                _ => Err(bad()),
            };
        }
        Err(bad())
    }

    /// Black and white valencies `(p, q)`.
    pub fn valencies(&self) -> (i64, i64) {
        match *self {
            InfiniteMap::N3 => (3, 2),
            InfiniteMap::Np(p) => (p, 2),
            InfiniteMap::Npq(p, q) => (p, q),
        }
    }

    /// Label shift from one flower to the next.
    pub fn period(&self) -> i64 {
        match *self {
            InfiniteMap::N3 => 4,
            InfiniteMap::Np(p) => p + 3,
            InfiniteMap::Npq(p, q) => p + 2 * q - 2,
        }
    }

    /// Least window radius covering the first two flowers.
    pub fn min_radius(&self) -> i64 {
        match self {
            InfiniteMap::N3 => 9,
            _ => 3 * self.period() - 1,
        }
    }

    pub fn contains(&self, d: Dart) -> bool {
        match (self, d) {
            (_, Label(_)) => true,
            (InfiniteMap::N3, Inner(n)) => n == 1 || n >= 3,
            (_, Inner(n)) => n >= 0,
        }
    }

    /// Rotation at the black vertex of `d`, in the cyclic order of `x`.
    pub fn black(&self, d: Dart) -> Vec<Dart> {
        assert!(self.contains(d), "{d} is not a dart of {self}");
        match *self {
            InfiniteMap::N3 => n3_black(d),
            InfiniteMap::Np(p) => np_black(p, d),
            InfiniteMap::Npq(p, q) => Npq::new(p, q).black(d),
        }
    }

    /// Rotation at the white vertex of `d`, in the cyclic order of `y`.
    pub fn white(&self, d: Dart) -> Vec<Dart> {
        assert!(self.contains(d), "{d} is not a dart of {self}");
        match *self {
            InfiniteMap::N3 => pair(d, n3_y(d)),
            InfiniteMap::Np(p) => pair(d, np_y(p, d)),
            InfiniteMap::Npq(p, q) => Npq::new(p, q).white(d),
        }
    }

    pub fn x(&self, d: Dart) -> Dart {
        step(&self.black(d), d, true)
    }

    pub fn x_inv(&self, d: Dart) -> Dart {
        step(&self.black(d), d, false)
    }

    pub fn y(&self, d: Dart) -> Dart {
        step(&self.white(d), d, true)
    }

    pub fn y_inv(&self, d: Dart) -> Dart {
        step(&self.white(d), d, false)
    }

    /// `z = (xy)⁻¹`.
    pub fn z(&self, d: Dart) -> Dart {
        self.x_inv(self.y_inv(d))
    }
}

impl fmt::Display for InfiniteMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InfiniteMap::N3 => f.write_str("N3"),
            InfiniteMap::Np(p) => write!(f, "Np({p})"),
            InfiniteMap::Npq(p, q) => write!(f, "Npq({p},{q})"),
        }
    }
}

fn pair(d: Dart, e: Dart) -> Vec<Dart> {
    if d == e {
        vec![d]
    } else {
        vec![d, e]
    }
}

// N3. Flower n ≥ 3 has base vertex [4n+1, 4n−2, 1−n] on the axis and top
// vertex [4n, In, 4n−1]; the stem joins 4n−2 and 4n. Flowers 1 and 2 are
// irregular.

fn n3_base(n: i64) -> Vec<Dart> {
    match n {
        1 => labels([4, 1, 0]),
        2 => labels([9, 5, -1]),
        _ => labels([4 * n + 1, 4 * n - 2, 1 - n]),
    }
}

fn n3_top(n: i64) -> Vec<Dart> {
    match n {
        1 => vec![Label(3), Inner(1), Label(2)],
        2 => labels([8, 7, 6]),
        _ => vec![Label(4 * n), Inner(n), Label(4 * n - 1)],
    }
}

fn n3_black(d: Dart) -> Vec<Dart> {
    match d {
        Inner(n) => n3_top(n),
        Label(i) if i < 0 => n3_base(1 - i),
        Label(0 | 1 | 4) => n3_base(1),
        Label(2 | 3) => n3_top(1),
        Label(5 | 9) => n3_base(2),
        Label(6..=8) => n3_top(2),
        Label(i) => {
            let n = (i + 2) / 4;
            match (i + 2) % 4 {
                0 | 3 => n3_base(n),
                _ => n3_top(n),
            }
        }
    }
}

fn n3_y(d: Dart) -> Dart {
    match d {
        Inner(1) => Label(2),
        Inner(n) => Label(4 * n - 1),
        Label(i @ (0 | 6 | 7)) => Label(i),
        Label(1) => Label(3),
        Label(3) => Label(1),
        Label(2) => Inner(1),
        Label(4) => Label(-1),
        Label(-1) => Label(4),
        Label(5) => Label(8),
        Label(8) => Label(5),
        Label(i) if i < 0 => Label(4 * -i + 1),
        Label(i) => {
            let n = (i + 2) / 4;
            match (i + 2) % 4 {
                3 => Label(-n),
                0 => Label(4 * n),
                2 => Label(4 * n - 2),
                _ => Inner(n),
            }
        }
    }
}

// Np, t = p + 3, k = p − 3. Flower n has base [(n+1)t−1, nt+2, nt, fan]
// whose fan runs down from −nk, top [nt+3, (n+1)t−2, nt+p … nt+4, In], and
// for n ≥ 1 a leaf nt+1 on a 1-valent vertex.

fn np_base(p: i64, n: i64) -> Vec<Dart> {
    let t = p + 3;
    let k = p - 3;
    if n == 0 {
        labels([p + 2, 2, 1, 0].into_iter().chain((1..=p - 4).map(|j| -j)))
    } else {
        labels(
            [(n + 1) * t - 1, n * t + 2, n * t]
                .into_iter()
                .chain((0..=p - 4).map(|j| -n * k - j)),
        )
    }
}

fn np_top(p: i64, n: i64) -> Vec<Dart> {
    let t = p + 3;
    let mut v = labels([n * t + 3, (n + 1) * t - 2]);
    v.extend(labels((4..=p).rev().map(|j| n * t + j)));
    v.push(Inner(n));
    v
}

fn np_black(p: i64, d: Dart) -> Vec<Dart> {
    let t = p + 3;
    let k = p - 3;
    match d {
        Inner(n) => np_top(p, n),
        Label(i) if i < 0 => {
            let m = -i;
            let n = (m - 1) / k;
            if (m - 1) % k + 1 == k {
                np_base(p, n + 1)
            } else {
                np_base(p, n)
            }
        }
        Label(i) => {
            let (n, r) = (i / t, i % t);
            match r {
                1 if n >= 1 => vec![d],
                0..=2 => np_base(p, n),
                _ if r == t - 1 => np_base(p, n),
                _ => np_top(p, n),
            }
        }
    }
}

fn np_y(p: i64, d: Dart) -> Dart {
    let t = p + 3;
    let k = p - 3;
    match d {
        Inner(n) => Label(n * t + 3),
        Label(i) if i < 0 => {
            let m = -i;
            if m % k == 0 {
                Label((m / k) * t - 1)
            } else {
                d
            }
        }
        Label(i) => {
            let (n, r) = (i / t, i % t);
            match r {
                0 | 1 if n == 0 => d,
                0 => Label(i + 1),
                1 => Label(i - 1),
                2 => Label((n + 1) * t - 2),
                3 => Inner(n),
                _ if r == t - 2 => Label(n * t + 2),
                _ if r == t - 1 => Label(-(n + 1) * k),
                _ => d,
            }
        }
    }
}

// Npq, t = p + 2q − 2. Positive labels of flower n by residue r = i − nt:
// 0 the edge up from the weed (α for n = 0), 1 stem foot, 2 arc, 3..=q
// free edges at the arc's white vertex, then p−3 top fan edges, the stem
// top, q−2 free edges at the stem's white vertex, and t−1 the axis edge
// to the right. Below the axis block n ≥ 1 holds the base fan, the axis
// edge to the left, and the weed's free edges.

struct Npq {
    p: i64,
    q: i64,
    t: i64,
    s: i64,
    k: i64,
}

enum Neg {
    BaseFan,
    AxisLeft,
    WeedFan,
}

impl Npq {
    fn new(p: i64, q: i64) -> Self {
        Npq {
            p,
            q,
            t: p + 2 * q - 2,
            s: p + q - 5,
            k: p - 3,
        }
    }

    fn up(&self, n: i64) -> i64 {
        n * self.t
    }
    fn stem_low(&self, n: i64) -> i64 {
        n * self.t + 1
    }
    fn arc(&self, n: i64) -> i64 {
        n * self.t + 2
    }
    fn arc_free(&self, n: i64, j: i64) -> i64 {
        n * self.t + 2 + j
    }
    fn top_fan(&self, n: i64, j: i64) -> i64 {
        n * self.t + self.q + j
    }
    fn stem_top(&self, n: i64) -> i64 {
        n * self.t + self.q + self.p - 2
    }
    fn stem_free(&self, n: i64, j: i64) -> i64 {
        self.stem_top(n) + j
    }
    fn axis_right(&self, n: i64) -> i64 {
        (n + 1) * self.t - 1
    }
    fn start(&self, n: i64) -> i64 {
        -self.k - n * self.s
    }
    fn base_fan(&self, n: i64, j: i64) -> i64 {
        self.start(n) + j - 1
    }
    fn axis_left(&self, n: i64) -> i64 {
        self.start(n) + self.k
    }
    fn weed_fan(&self, n: i64, j: i64) -> i64 {
        self.start(n) + self.k + j
    }

    /// Flower and role of a negative label.
    fn negative(&self, i: i64) -> (i64, Neg) {
        if i >= -self.k {
            return (0, Neg::BaseFan);
        }
        let n = (-self.k - i + self.s - 1) / self.s;
        let off = i - self.start(n);
        let role = if off < self.k {
            Neg::BaseFan
        } else if off == self.k {
            Neg::AxisLeft
        } else {
            Neg::WeedFan
        };
        (n, role)
    }

    fn base(&self, n: i64) -> Vec<Dart> {
        let left = if n == 0 { 0 } else { self.axis_left(n) };
        let mut v = labels([self.axis_right(n), self.stem_low(n), left]);
        v.extend(labels((1..=self.k).rev().map(|j| self.base_fan(n, j))));
        v
    }

    fn top(&self, n: i64) -> Vec<Dart> {
        let mut v = vec![Label(self.stem_top(n))];
        v.extend(labels((1..=self.k).rev().map(|j| self.top_fan(n, j))));
        v.push(Inner(n));
        v.push(Label(self.arc(n)));
        v
    }

    fn weed(&self, n: i64) -> Vec<Dart> {
        let mut v = labels([self.axis_left(n), self.up(n), self.axis_right(n - 1)]);
        v.extend(labels((1..=self.q - 3).rev().map(|j| self.weed_fan(n, j))));
        v
    }

    fn stem_white(&self, n: i64) -> Vec<Dart> {
        let mut v = vec![Label(self.stem_low(n))];
        v.extend(labels((1..=self.q - 2).rev().map(|j| self.stem_free(n, j))));
        v.push(Label(self.stem_top(n)));
        v
    }

    fn arc_white(&self, n: i64) -> Vec<Dart> {
        let mut v = vec![Inner(n)];
        v.extend(labels((1..=self.q - 2).rev().map(|j| self.arc_free(n, j))));
        v.push(Label(self.arc(n)));
        v
    }

    /// Residue class of a nonnegative label: (flower, residue).
    fn split(&self, i: i64) -> (i64, i64) {
        (i / self.t, i % self.t)
    }

    fn black(&self, d: Dart) -> Vec<Dart> {
        let (p, q, t) = (self.p, self.q, self.t);
        match d {
            Inner(n) => self.top(n),
            Label(i) if i < 0 => match self.negative(i) {
                (n, Neg::BaseFan | Neg::AxisLeft) => self.base(n),
                (_, Neg::WeedFan) => vec![d],
            },
            Label(i) => {
                let (n, r) = self.split(i);
                if r == 0 {
                    if n == 0 {
                        self.base(0)
                    } else {
                        vec![d]
                    }
                } else if r == 1 || r == t - 1 {
                    self.base(n)
                } else if r == 2 || (q + 1..=q + p - 2).contains(&r) {
                    self.top(n)
                } else {
                    vec![d]
                }
            }
        }
    }

    fn white(&self, d: Dart) -> Vec<Dart> {
        let (p, q, t) = (self.p, self.q, self.t);
        match d {
            Inner(n) => self.arc_white(n),
            Label(i) if i < 0 => match self.negative(i) {
                (_, Neg::BaseFan) => vec![d],
                (n, _) => self.weed(n),
            },
            Label(i) => {
                let (n, r) = self.split(i);
                if r == 0 {
                    if n == 0 {
                        vec![d]
                    } else {
                        self.weed(n)
                    }
                } else if r == t - 1 {
                    self.weed(n + 1)
                } else if r == 1 || r >= q + p - 2 {
                    self.stem_white(n)
                } else if r <= q {
                    self.arc_white(n)
                } else {
                    vec![d]
                }
            }
        }
    }
}

/// Witness that no `Γ`-invariant congruence mod `n` exists on `C`: `y`
/// moves the label `from ≡ 0` to `to ≢ 0 (mod n)`, while the class of `α`
/// must be `y`-invariant because `α` is fixed by `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Witness {
    pub modulus: i64,
    pub from: i64,
    pub to: i64,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.modulus;
        write!(
            f,
            "y({}) = {}, {} mod {n} = 0, {} mod {n} = {}",
            self.from,
            self.to,
            self.from,
            self.to,
            self.to.rem_euclid(n)
        )
    }
}

/// Candidate stem pair of flower `n`.
fn stem_pair(map: &InfiniteMap, n: i64) -> i64 {
    match map {
        InfiniteMap::N3 if n == 2 => 8,
        InfiniteMap::N3 => 4 * n,
        _ => n * map.period(),
    }
}

/// Refutes an invariant congruence mod `n` on `C`. Returns the witness, or
/// `None` if the stem of flower `n` does not separate residues.
pub fn congruence_obstruction(map: &InfiniteMap, n: i64) -> Result<Option<Witness>> {
    if n < 2 {
        return Err(Error::BadModulus(n));
    }
    if map.y(Label(0)) != Label(0) {
        return Ok(None);
    }
    let from = stem_pair(map, n);
    let Label(to) = map.y(Label(from)) else {
        return Ok(None);
    };
    let ok = from.rem_euclid(n) == 0 && to.rem_euclid(n) != 0;
    Ok(ok.then_some(Witness {
        modulus: n,
        from,
        to,
    }))
}

/// The action of `x` and `y` on the darts with labels in `[−B, B]` plus the
/// inner darts whose black vertex lies inside. An image outside the window
/// is recorded as undefined.
#[derive(Clone, Debug)]
pub struct WindowAction {
    pub map: InfiniteMap,
    pub radius: i64,
    pub darts: Vec<Dart>,
    index: HashMap<Dart, usize>,
    pub x: Vec<Option<usize>>,
    pub y: Vec<Option<usize>>,
}

pub fn window_action(map: InfiniteMap, radius: i64) -> Result<WindowAction> {
    let min = map.min_radius();
    if radius < min {
        return Err(Error::WindowTooSmall { min, got: radius });
    }
    let inside = |d: &Dart| matches!(d, Label(i) if i.abs() <= radius);
    let mut darts: Vec<Dart> = (-radius..=radius).map(Label).collect();
    darts.extend((0..=radius).map(Inner).filter(|&d| {
        map.contains(d)
            && map
                .black(d)
                .iter()
                .all(|e| matches!(e, Inner(_)) || inside(e))
    }));
    let index: HashMap<Dart, usize> = darts.iter().enumerate().map(|(i, &d)| (d, i)).collect();
    let x = darts.iter().map(|&d| index.get(&map.x(d)).copied()).collect();
    let y = darts.iter().map(|&d| index.get(&map.y(d)).copied()).collect();
    Ok(WindowAction {
        map,
        radius,
        darts,
        index,
        x,
        y,
    })
}

impl WindowAction {
    fn image(&self, table: &[Option<usize>], d: Dart) -> Option<Dart> {
        self.index
            .get(&d)
            .and_then(|&i| table[i])
            .map(|j| self.darts[j])
    }

    pub fn x_image(&self, d: Dart) -> Option<Dart> {
        self.image(&self.x, d)
    }

    pub fn y_image(&self, d: Dart) -> Option<Dart> {
        self.image(&self.y, d)
    }

    fn preimage(&self, table: &[Option<usize>], d: Dart) -> Option<Dart> {
        let i = *self.index.get(&d)?;
        table
            .iter()
            .position(|&e| e == Some(i))
            .map(|j| self.darts[j])
    }

    /// `z = x⁻¹ ∘ y⁻¹` where both steps stay inside the window.
    pub fn z_image(&self, d: Dart) -> Option<Dart> {
        let e = self.preimage(&self.y, d)?;
        self.preimage(&self.x, e)
    }

    /// Length of the cycle of `table` through `d`, if it closes in the window.
    fn cycle_len(&self, table: &[Option<usize>], d: Dart) -> Option<i64> {
        let start = self.index[&d];
        let mut cur = table[start]?;
        let mut len = 1;
        while cur != start {
            cur = table[cur]?;
            len += 1;
        }
        Some(len)
    }

    /// Descriptions of every invariant violated inside the window.
    pub fn violations(&self) -> Vec<String> {
        let (p, q) = self.map.valencies();
        let mut out = Vec::new();
        if self.y_image(Label(0)) != Some(Label(0)) {
            out.push("y does not fix 0".to_string());
        }
        for &d in &self.darts {
            if let Some(len) = self.cycle_len(&self.x, d) {
                if len != 1 && len != p {
                    out.push(format!("x-cycle of {d} has length {len}"));
                }
            }
            if let Some(len) = self.cycle_len(&self.y, d) {
                if len != 1 && len != q {
                    out.push(format!("y-cycle of {d} has length {len}"));
                }
            }
            if let Some(e) = self.z_image(d) {
                let expected = match d {
                    Label(i) => Label(i + 1),
                    inner => inner,
                };
                if e != expected {
                    out.push(format!("z({d}) = {e}, expected {expected}"));
                }
            }
        }
        out
    }

    /// Whether `self` and a window of larger radius agree wherever `self`
    /// is defined, and `self` is defined wherever the larger window's image
    /// lands inside `self`.
    pub fn agrees_with(&self, larger: &WindowAction) -> bool {
        self.darts.iter().all(|&d| {
            [(&self.x, &larger.x), (&self.y, &larger.y)]
                .into_iter()
                .all(|(small, big)| {
                    let ours = self.image(small, d);
                    let theirs = larger.image(big, d);
                    match (ours, theirs) {
                        (Some(a), Some(b)) => a == b,
                        (None, Some(b)) => !self.index.contains_key(&b),
                        (None, None) => true,
                        (Some(_), None) => false,
                    }
                })
        })
    }

    /// One line per dart: `dart x y`, with `?` for images outside the window.
    pub fn to_text(&self) -> String {
        let show = |v: Option<usize>| v.map_or("?".to_string(), |j| self.darts[j].to_string());
        let mut s = format!("map {}\nradius {}\n", self.map, self.radius);
        for (i, d) in self.darts.iter().enumerate() {
            s.push_str(&format!("{d} {} {}\n", show(self.x[i]), show(self.y[i])));
        }
        s
    }
}
