//! The twelve end-to-end verification suites. Each produces a plain-text
//! certificate that depends only on the seed, so two runs can be compared
//! byte for byte.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::{one_join, predicted_join_w_cycles, random_diagram_with_handle, Handle};
use crate::error::Result;
use crate::freewalk::schreier_basis;
use crate::hypermap::Dessin;
use crate::oracle::{all_dessins, brute_centralizer, brute_mirror_isomorphic, random_transitive_group};
use crate::perm_core::{
    centralizer_elements, centralizer_of_transitive, minimal_blocks, stabilizer_core_index_bounded,
    Perm, PermGroup,
};
use crate::psl2::{
    certificate as psl2_certificate, check_relator_voltages, find_generating_pair,
    modulus_for_type, projective_dessin, riemann_hurwitz_genus, solve_voltages_with_relators,
    stabilizer_presentation, DEFAULT_PAIR_BUDGET, DEFAULT_SOLVER_BUDGET,
};
use crate::ptrans::{
    congruence_obstruction, embed_symmetric, lemma_qcycle, relation_suite, window_action, Dart,
    InfiniteMap,
};
use crate::realizer::{catalog, realize, verify_realization, CATALOG};

pub const DEFAULT_SEED: u64 = 1;

/// `(id, name)` of every suite.
pub const CRITERIA: [(usize, &str); 12] = [
    (1, "centralizer-oracle"),
    (2, "realization-catalog"),
    (3, "schreier-rank"),
    (4, "core-index"),
    (5, "hurwitz-quotient"),
    (6, "surface-stabilizer"),
    (7, "cocompact-lift"),
    (8, "p-group"),
    (9, "infinite-maps"),
    (10, "join-bookkeeping"),
    (11, "chirality"),
    (12, "determinism"),
];

/// Looks a suite up by number or name.
pub fn criterion_id(name: &str) -> Option<usize> {
    CRITERIA
        .iter()
        .find(|(id, n)| *n == name || id.to_string() == name)
        .map(|&(id, _)| id)
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub certificate: String,
    pub elapsed: Duration,
}

impl Outcome {
    pub fn summary(&self) -> String {
        format!(
            "criterion {:>2} {:<20} {} ({:.2}s)",
            self.id,
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.elapsed.as_secs_f64()
        )
    }
}

/// Accumulates a certificate and a verdict.
struct Cert {
    text: String,
    ok: bool,
}

impl Cert {
    fn new() -> Self {
        Cert {
            text: String::new(),
            ok: true,
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn check(&mut self, label: impl AsRef<str>, ok: bool) {
        self.ok &= ok;
        self.line(format!("{} {}", label.as_ref(), if ok { "ok" } else { "FAIL" }));
    }

    fn fail(&mut self, label: impl AsRef<str>) {
        self.check(label, false);
    }
}

fn time_limit(id: usize) -> Option<Duration> {
    match id {
        1 => Some(Duration::from_secs(30)),
        5 => Some(Duration::from_secs(60)),
        _ => None,
    }
}

pub fn run_criterion(id: usize, seed: u64) -> Outcome {
    run_with(id, seed, None)
}

/// Runs every suite; the determinism suite reuses the first pass.
pub fn run_all(seed: u64) -> Vec<Outcome> {
    let mut out: Vec<Outcome> = (1..=11).map(|id| run_criterion(id, seed)).collect();
    let det = run_with(12, seed, Some(&out));
    out.push(det);
    out
}

fn run_with(id: usize, seed: u64, first: Option<&[Outcome]>) -> Outcome {
    let (_, name) = CRITERIA[id - 1];
    let start = Instant::now();
    let mut c = Cert::new();
    let result = match id {
        1 => centralizer_oracle(&mut c, seed),
        2 => realization_catalog(&mut c),
        3 => schreier_rank(&mut c),
        4 => core_index(&mut c),
        5 => hurwitz_quotient(&mut c, seed),
        6 => surface_stabilizer(&mut c, seed),
        7 => cocompact_lift(&mut c, seed),
        8 => p_group(&mut c),
        9 => infinite_maps(&mut c),
        10 => join_bookkeeping(&mut c, seed),
        11 => chirality(&mut c),
        12 => determinism(&mut c, seed, first),
        _ => unreachable!("criterion ids are 1..=12"),
    };
    if let Err(e) = result {
        c.fail(format!("error: {e}"));
    }
    let elapsed = start.elapsed();
    let in_time = time_limit(id).is_none_or(|limit| elapsed < limit);
    Outcome {
        id,
        name,
        passed: c.ok && in_time,
        certificate: c.text,
        elapsed,
    }
}

fn centralizer_oracle(c: &mut Cert, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut agree = 0;
    for i in 0..200 {
        let g = random_transitive_group(8, &mut rng);
        let mut fast = centralizer_elements(&g)?;
        fast.sort();
        let mut as_group: Vec<Perm> = centralizer_of_transitive(&g)?.generators().to_vec();
        as_group.push(Perm::identity(g.degree()));
        as_group.sort();
        let brute = brute_centralizer(&g);
        let ok = fast == brute && as_group == brute;
        agree += usize::from(ok);
        c.line(format!(
            "group {i} degree {} gens {} centralizer {}{}",
            g.degree(),
            g.generators().len(),
            brute.len(),
            if ok { "" } else { " MISMATCH" }
        ));
    }
    c.check(format!("agreement {agree}/200"), agree == 200);
    Ok(())
}

fn realization_catalog(c: &mut Cert) -> Result<()> {
    for name in CATALOG {
        let start = Instant::now();
        let a = catalog(name).expect("catalog name");
        let r = realize(&a, None)?;
        let report = verify_realization(&r.dessin, &a)?;
        c.line(format!("[{name}]"));
        c.text.push_str(&r.certificate());
        let in_time = start.elapsed() < Duration::from_secs(10);
        c.check(
            format!("{name} aut_order {} = |A| {}", r.aut_order, r.group_order),
            r.aut_order as u128 == r.group_order,
        );
        c.check(format!("{name} isomorphism"), r.isomorphic && report.ok);
        if !in_time {
            c.fail(format!("{name} time limit"));
        }
    }
    Ok(())
}

fn schreier_rank(c: &mut Cert) -> Result<()> {
    for n in 3..=12 {
        let rank = schreier_basis(&crate::realizer::base_action(n)?, 0)?.rank();
        c.check(format!("n {n} rank {rank}"), rank == n + 1);
    }
    Ok(())
}

fn core_index(c: &mut Cert) -> Result<()> {
    for n in 4..=7usize {
        let g = crate::realizer::base_action(n)?.monodromy();
        let ci = stabilizer_core_index_bounded(&g, 16)?;
        let expected: u128 = (1..n as u128).product();
        c.check(
            format!("n {n} order {} core_index {}", ci.group_order, ci.index),
            ci.index == expected,
        );
    }
    Ok(())
}

fn hurwitz_dessin(seed: u64) -> Result<(crate::psl2::GeneratingPair, Dessin)> {
    let (_, n) = modulus_for_type(3, 2, 7)?;
    let pair = find_generating_pair(3, 2, 7, n, seed, DEFAULT_PAIR_BUDGET, 1)?;
    let d = projective_dessin(&pair.x, &pair.y)?;
    Ok((pair, d))
}

fn hurwitz_quotient(c: &mut Cert, seed: u64) -> Result<()> {
    let (l, n) = modulus_for_type(3, 2, 7)?;
    c.check(format!("l {l} n {n}"), (l, n) == (84, 83));
    let (pair, d) = hurwitz_dessin(seed)?;
    c.text.push_str(&psl2_certificate(&pair, 3, 2, 7, &d));
    c.check("darts 84", d.darts() == 84);
    c.check("cycles 28/42/12", d.cycle_counts() == (28, 42, 12));
    c.check("primitive", minimal_blocks(&d.monodromy())?.is_empty());
    c.check("euler -2", d.euler_characteristic() == -2);
    c.check(
        "genus 2 by formula",
        d.genus() == 2 && riemann_hurwitz_genus(3, 2, 7, n) == Some(2),
    );
    Ok(())
}

fn surface_stabilizer(c: &mut Cert, seed: u64) -> Result<()> {
    let (_, d) = hurwitz_dessin(seed)?;
    let sp = stabilizer_presentation(&d, 3, 2, 7, 0)?;
    c.line(format!("generators {}", sp.generator_count()));
    c.line(format!("relators {}", sp.relators.len()));
    c.check("torsion-free", sp.torsion().is_empty());
    c.check(format!("free rank {}", sp.free_rank), sp.free_rank == 4);
    Ok(())
}

fn cocompact_lift(c: &mut Cert, seed: u64) -> Result<()> {
    let (_, d) = hurwitz_dessin(seed)?;
    let c2 = PermGroup::new(2, vec![Perm::parse("(1 2)", 2)?])?;
    let Some(va) = solve_voltages_with_relators(&d, 3, 2, 7, &c2, DEFAULT_SOLVER_BUDGET)? else {
        c.fail("voltage search exhausted");
        return Ok(());
    };
    let nontrivial = va
        .voltages
        .iter()
        .flatten()
        .filter(|v| !v.is_identity())
        .count();
    c.line(format!("nontrivial voltages {nontrivial}"));
    c.check("relators lift", check_relator_voltages(&va, 3, 2, 7)?);
    let cover = va.covering_dessin()?;
    c.check(format!("darts {}", cover.darts()), cover.darts() == 168);
    c.check(
        format!("type {:?}", cover.type_triple()),
        cover.type_triple() == (3, 2, 7),
    );
    let aut = centralizer_elements(&cover.monodromy())?;
    c.check(format!("aut_order {}", aut.len()), aut.len() == 2);
    Ok(())
}

fn p_group(c: &mut Cert) -> Result<()> {
    let rel = relation_suite(6);
    c.text.push_str(&rel.to_text());
    c.ok &= rel.passed();
    for q in 2..=5 {
        let rep = lemma_qcycle(q, 6);
        c.text.push_str(&rep.to_text());
        c.check(format!("lemma q={q}"), rep.passed());
    }
    for n in 2..=5usize {
        let e = embed_symmetric(n);
        let factorial: u64 = (1..=n as u64).product();
        c.check(
            format!("S_{n} closure order {:?}", e.closure_order),
            e.closure_order == Some(factorial) && e.relations.passed(),
        );
    }
    Ok(())
}

fn infinite_maps(c: &mut Cert) -> Result<()> {
    let map = InfiniteMap::N3;
    let table = window_action(map, 4 * 50 + 10)?;
    for n in 2..=50 {
        match congruence_obstruction(&map, n)? {
            Some(w) => {
                let looked_up = table.y_image(Dart::Label(w.from)) == Some(Dart::Label(w.to));
                let valid = w.from.rem_euclid(n) == 0 && w.to.rem_euclid(n) != 0;
                c.check(format!("n {n}: {w}"), looked_up && valid);
            }
            None => c.fail(format!("n {n}: no witness")),
        }
    }
    let small = window_action(map, 30)?;
    let large = window_action(map, 60)?;
    c.check("window 30 invariants", small.violations().is_empty());
    c.check("window 60 invariants", large.violations().is_empty());
    c.check("window 30 agrees with 60", small.agrees_with(&large));
    Ok(())
}

fn join_bookkeeping(c: &mut Cert, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut good = 0;
    for i in 0..50 {
        let d1 = random_diagram_with_handle(rng.gen_range(2..=10), &mut rng);
        let d2 = random_diagram_with_handle(rng.gen_range(2..=10), &mut rng);
        let hs1 = d1.find_handles();
        let hs2 = d2.find_handles();
        let h1 = hs1[rng.gen_range(0..hs1.len())];
        let h2 = hs2[rng.gen_range(0..hs2.len())];
        let j = one_join(&d1, h1, &d2, h2)?;
        let (n1, n2) = (d1.darts(), d2.darts());
        let predicted = predicted_join_w_cycles(&d1, h1, &d2, h2);
        let actual = j.w_cycle_structure();
        let shifted = Handle {
            alpha: h2.alpha + n1,
            beta: h2.beta + n1,
        };
        let swap = Perm::from_images((0..n1 + n2).map(|p| if p < n2 { p + n1 } else { p - n2 }).collect())?;
        let mirrored = one_join(&d2, h2, &d1, h1)?.relabel(&swap);
        let connected_ok = !(d1.is_connected() && d2.is_connected()) || j.is_connected();
        let ok = j.violated_relation().is_none()
            && j.y().pow(2).is_identity()
            && j.darts() == n1 + n2
            && predicted == actual
            && !j.is_handle(h1)
            && !j.is_handle(shifted)
            && mirrored == j
            && connected_ok;
        good += usize::from(ok);
        c.line(format!(
            "join {i}: {n1}+{n2} darts, handles ({},{})+({},{}), w {:?}{}",
            h1.alpha + 1,
            h1.beta + 1,
            h2.alpha + 1,
            h2.beta + 1,
            actual,
            if ok { "" } else { " FAIL" }
        ));
    }
    c.check(format!("joins {good}/50"), good == 50);
    Ok(())
}

fn chirality(c: &mut Cert) -> Result<()> {
    let all = all_dessins(4);
    let mut chiral = 0;
    let mut agree = 0;
    for d in &all {
        let fast = d.is_chiral();
        chiral += usize::from(fast);
        agree += usize::from(fast != brute_mirror_isomorphic(d));
    }
    c.line(format!("dessins {} chiral {chiral}", all.len()));
    c.check(format!("agreement {agree}/{}", all.len()), agree == all.len());
    Ok(())
}

fn determinism(c: &mut Cert, seed: u64, first: Option<&[Outcome]>) -> Result<()> {
    let owned: Vec<Outcome>;
    let first = match first {
        Some(f) => f,
        None => {
            owned = (1..=11).map(|id| run_criterion(id, seed)).collect();
            &owned
        }
    };
    for o in first {
        let again = run_criterion(o.id, seed);
        let mut h = std::collections::hash_map::DefaultHasher::new();
        std::hash::Hash::hash(&o.certificate, &mut h);
        let digest = std::hash::Hasher::finish(&h);
        c.check(
            format!("criterion {} bytes {} digest {digest:016x}", o.id, o.certificate.len()),
            again.certificate == o.certificate,
        );
    }
    Ok(())
}
