use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use hforge::diagram::{one_join, SymmetricDiagram};
use hforge::freewalk::VoltageFile;
use hforge::hypermap::Dessin;
use hforge::psl2::{
    certificate, check_hyperbolic, find_generating_pair, modulus_for_type, projective_dessin,
    DEFAULT_PAIR_BUDGET,
};
use hforge::ptrans::{
    congruence_obstruction, embed_symmetric, lemma_qcycle, relation_suite, window_action,
    InfiniteMap,
};
use hforge::realizer::{catalog, realize, verify_realization};
use hforge::suites::{criterion_id, run_all, run_criterion, DEFAULT_SEED};
use hforge::PermGroup;

#[derive(Parser)]
#[command(name = "hforge", version, about = "Realize finite groups as automorphism groups of dessins")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print type, genus, automorphism count, regularity and chirality.
    Analyze { dessin: PathBuf },
    /// Build a dessin whose automorphism group is the given group.
    Realize {
        /// Group file, or a catalog name such as S3.
        #[arg(long)]
        group: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        voltages_out: Option<PathBuf>,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Check Aut(dessin) against a group, or run verification suites.
    Verify(VerifyArgs),
    /// Build the covering dessin of a voltage file.
    Cover {
        #[arg(long)]
        voltages: PathBuf,
        #[arg(long)]
        group: String,
        /// Base dessin; defaults to the path named in the voltage file.
        #[arg(long)]
        base: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Triangle-group quotient over PSL(2, n) on the projective line.
    Psl2(Psl2Args),
    /// Sew two symmetric diagrams along (1)-handles.
    Join {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        /// 1-based positions in each diagram's handle list, e.g. `1,2`.
        #[arg(long)]
        handles: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Identities in the group of almost-translations.
    Ptrans {
        #[command(subcommand)]
        action: PtransCommand,
    },
    /// Windows of the infinite maps and their congruence obstructions.
    Infmap {
        #[command(subcommand)]
        action: InfmapCommand,
    },
    /// Graphviz rendering of a dessin's bipartite map.
    ExportDot {
        dessin: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, conflicts_with = "suite", requires = "group")]
    dessin: Option<PathBuf>,
    #[arg(long)]
    group: Option<String>,
    /// `all`, a criterion number, or a criterion name.
    #[arg(long)]
    suite: Option<String>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Write the certificates here.
    #[arg(long)]
    cert: Option<PathBuf>,
}

#[derive(Args)]
struct Psl2Args {
    /// Periods `p,q,r`.
    #[arg(long = "type")]
    type_: String,
    #[arg(long)]
    prime: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Accept a prime that is not −1 modulo lcm(2p, 2q, 2r).
    #[arg(long)]
    allow_any_prime: bool,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    cert: Option<PathBuf>,
}

#[derive(Subcommand)]
enum PtransCommand {
    Verify {
        #[arg(long, default_value_t = 6)]
        imax: i64,
        #[arg(long, default_value_t = 5)]
        qmax: i64,
        /// Largest n for the symmetric-group embeddings.
        #[arg(long, default_value_t = 5)]
        nmax: usize,
    },
}

#[derive(Subcommand)]
enum InfmapCommand {
    Window {
        /// `N3`, `Np(p)` or `Npq(p,q)`.
        #[arg(long)]
        map: String,
        #[arg(long)]
        radius: i64,
        #[arg(long)]
        out: PathBuf,
    },
    Obstruct {
        #[arg(long, default_value = "N3")]
        map: String,
        /// A modulus or an inclusive range `a..b`.
        #[arg(long)]
        n: String,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn load_dessin(path: &Path) -> Result<Dessin> {
    Dessin::parse_file(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn load_group(name: &str) -> Result<PermGroup> {
    let path = Path::new(name);
    if path.exists() {
        return PermGroup::parse_file(&read(path)?).with_context(|| format!("parsing {name}"));
    }
    catalog(name).with_context(|| format!("no group file or catalog group named {name}"))
}

fn load_diagram(path: &Path) -> Result<SymmetricDiagram> {
    SymmetricDiagram::parse_file(&read(path)?)
        .with_context(|| format!("parsing {}", path.display()))
}

/// `HFORGE_BUDGET` replaces the default budget; an explicit flag wins.
fn budget(flag: Option<u64>, default: u64) -> Result<u64> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("HFORGE_BUDGET") {
        Ok(v) => v.trim().parse().with_context(|| format!("bad HFORGE_BUDGET {v:?}")),
        Err(_) => Ok(default),
    }
}

fn parse_list(text: &str, expected: usize) -> Result<Vec<u64>> {
    let parts: Vec<u64> = text
        .split(',')
        .map(|s| s.trim().parse::<u64>())
        .collect::<std::result::Result<_, _>>()
        .with_context(|| format!("bad list {text:?}"))?;
    if parts.len() != expected {
        bail!("expected {expected} comma-separated values, got {text:?}");
    }
    Ok(parts)
}

fn parse_range(text: &str) -> Result<(i64, i64)> {
    let bad = || format!("bad modulus range {text:?}");
    match text.split_once("..") {
        Some((a, b)) => {
            let a = a.trim().parse().with_context(bad)?;
            let b = b.trim().parse().with_context(bad)?;
            Ok((a, b))
        }
        None => {
            let n = text.trim().parse().with_context(bad)?;
            Ok((n, n))
        }
    }
}

/// Ok(true) on success, Ok(false) when a verification failed.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Analyze { dessin } => {
            let s = load_dessin(&dessin)?.analyze();
            println!("darts {}", s.darts);
            println!("type {},{},{}", s.type_.0, s.type_.1, s.type_.2);
            println!(
                "cycles {}/{}/{}",
                s.cycle_counts.0, s.cycle_counts.1, s.cycle_counts.2
            );
            println!("euler {}", s.euler_characteristic);
            println!("genus {}", s.genus);
            println!("aut_order {}", s.aut_order);
            println!("regular {}", s.regular);
            println!("chiral {}", s.chiral);
            Ok(true)
        }
        Command::Realize {
            group,
            out,
            degree,
            voltages_out,
            cert,
        } => {
            let a = load_group(&group)?;
            let r = realize(&a, degree)?;
            write(&out, &r.dessin.to_file())?;
            if let Some(v) = voltages_out {
                let base = v.with_extension("base.dessin");
                write(&base, &hforge::realizer::base_action(r.degree)?.to_file())?;
                let name = base.file_name().unwrap().to_string_lossy().into_owned();
                write(&v, &r.voltages.to_file(&name))?;
            }
            let text = r.certificate();
            if let Some(c) = cert {
                write(&c, &text)?;
            }
            print!("{text}");
            Ok(r.isomorphic)
        }
        Command::Verify(args) => verify(args),
        Command::Cover {
            voltages,
            group,
            base,
            out,
        } => {
            let a = load_group(&group)?;
            let vf = VoltageFile::parse(&read(&voltages)?, a.degree())?;
            let base_path = base.unwrap_or_else(|| {
                voltages
                    .parent()
                    .unwrap_or(Path::new("."))
                    .join(&vf.base_path)
            });
            let base = load_dessin(&base_path)?;
            let va = vf.into_assignment(&base, &a)?;
            let cover = va.covering_dessin()?;
            write(&out, &cover.to_file())?;
            println!("darts {}", cover.darts());
            Ok(true)
        }
        Command::Psl2(args) => psl2(args),
        Command::Join {
            left,
            right,
            handles,
            out,
        } => {
            let (d1, d2) = (load_diagram(&left)?, load_diagram(&right)?);
            let idx = parse_list(&handles, 2)?;
            let pick = |d: &SymmetricDiagram, i: u64, side: &str| {
                let hs = d.find_handles();
                (i as usize)
                    .checked_sub(1)
                    .and_then(|k| hs.get(k).copied())
                    .with_context(|| format!("{side} diagram has {} handles, asked for {i}", hs.len()))
            };
            let h1 = pick(&d1, idx[0], "left")?;
            let h2 = pick(&d2, idx[1], "right")?;
            let j = one_join(&d1, h1, &d2, h2)?;
            write(&out, &j.to_file())?;
            println!("darts {}", j.darts());
            println!("handles ({},{}) ({},{})", h1.alpha + 1, h1.beta + 1, h2.alpha + 1, h2.beta + 1);
            println!("w {:?}", j.w_cycle_structure());
            println!("connected {}", j.is_connected());
            Ok(true)
        }
        Command::Ptrans {
            action: PtransCommand::Verify { imax, qmax, nmax },
        } => {
            if imax < 2 || qmax < 2 || nmax < 2 {
                bail!("--imax, --qmax and --nmax must be at least 2");
            }
            let mut ok = true;
            let rel = relation_suite(imax);
            print!("{}", rel.to_text());
            ok &= rel.passed();
            for q in 2..=qmax {
                let rep = lemma_qcycle(q, 6);
                print!("{}", rep.to_text());
                ok &= rep.passed();
            }
            for n in 2..=nmax {
                let e = embed_symmetric(n);
                let passed = e.passed(n);
                match e.closure_order {
                    Some(o) => println!("{} S_{n} order {o}", if passed { "ok  " } else { "FAIL" }),
                    None => println!("{} S_{n} relations", if passed { "ok  " } else { "FAIL" }),
                }
                ok &= passed;
            }
            Ok(ok)
        }
        Command::Infmap { action } => infmap(action),
        Command::ExportDot { dessin, out } => {
            let dot = load_dessin(&dessin)?.to_dot();
            match out {
                Some(p) => write(&p, &dot)?,
                None => print!("{dot}"),
            }
            Ok(true)
        }
    }
}

fn verify(args: VerifyArgs) -> Result<bool> {
    if let Some(suite) = args.suite {
        let outcomes = if suite == "all" {
            run_all(args.seed)
        } else {
            let id = criterion_id(&suite).with_context(|| format!("unknown suite {suite:?}"))?;
            vec![run_criterion(id, args.seed)]
        };
        let mut certs = String::new();
        for o in &outcomes {
            println!("{}", o.summary());
            certs.push_str(&format!("== criterion {} {}\n{}", o.id, o.name, o.certificate));
        }
        if let Some(c) = args.cert {
            write(&c, &certs)?;
        }
        return Ok(outcomes.iter().all(|o| o.passed));
    }
    let (Some(dessin), Some(group)) = (args.dessin, args.group) else {
        bail!("verify needs --suite, or --dessin with --group");
    };
    let d = load_dessin(&dessin)?;
    let a = load_group(&group)?;
    let report = verify_realization(&d, &a)?;
    let text = report.to_text();
    if let Some(c) = args.cert {
        write(&c, &text)?;
    }
    print!("{text}");
    Ok(report.ok)
}

fn psl2(args: Psl2Args) -> Result<bool> {
    let t = parse_list(&args.type_, 3)?;
    let (p, q, r) = (t[0], t[1], t[2]);
    check_hyperbolic(p, q, r)?;
    let (l, default_prime) = modulus_for_type(p, q, r)?;
    let n = match args.prime {
        None => default_prime,
        Some(n) if n % l == l - 1 || args.allow_any_prime => n,
        Some(n) => bail!("{n} is not -1 mod {l}; pass --allow-any-prime to use it anyway"),
    };
    let budget = budget(args.budget, DEFAULT_PAIR_BUDGET)?;
    let pair = find_generating_pair(p, q, r, n, args.seed, budget, args.jobs)?;
    let d = projective_dessin(&pair.x, &pair.y)?;
    write(&args.out, &d.to_file())?;
    let text = certificate(&pair, p, q, r, &d);
    if let Some(c) = args.cert {
        write(&c, &text)?;
    }
    print!("{text}");
    Ok(true)
}

fn infmap(action: InfmapCommand) -> Result<bool> {
    match action {
        InfmapCommand::Window { map, radius, out } => {
            let w = window_action(InfiniteMap::parse(&map)?, radius)?;
            write(&out, &w.to_text())?;
            let v = w.violations();
            for line in &v {
                eprintln!("violation: {line}");
            }
            println!("darts {}", w.darts.len());
            println!("violations {}", v.len());
            Ok(v.is_empty())
        }
        InfmapCommand::Obstruct { map, n } => {
            let map = InfiniteMap::parse(&map)?;
            let (a, b) = parse_range(&n)?;
            let mut ok = true;
            for n in a..=b {
                match congruence_obstruction(&map, n)? {
                    Some(w) => println!("n {n}: {w}"),
                    None => {
                        println!("n {n}: no witness");
                        ok = false;
                    }
                }
            }
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
