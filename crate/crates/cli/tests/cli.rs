use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn hforge(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hforge"))
        .args(args)
        .current_dir(dir)
        .env_remove("HFORGE_BUDGET")
        .output()
        .expect("spawn hforge")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const T0: &str = "darts 2\nx (1 2)\ny ()\nt (1 2)\n";

#[test]
fn realize_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    fs::write(p.join("s3.grp"), "degree 3\ngen (1 2 3)\ngen (1 2)\n").unwrap();
    let o = hforge(&["realize", "--group", "s3.grp", "--out", "d.dessin", "--voltages-out", "v.volt"], p);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));

    let o = hforge(&["verify", "--dessin", "d.dessin", "--group", "S3"], p);
    assert_eq!(code(&o), 0);
    let o = hforge(&["verify", "--dessin", "d.dessin", "--group", "C6"], p);
    assert_eq!(code(&o), 2);

    let o = hforge(&["cover", "--voltages", "v.volt", "--group", "s3.grp", "--out", "c.dessin"], p);
    assert_eq!(code(&o), 0);
    let o = hforge(&["verify", "--dessin", "c.dessin", "--group", "S3"], p);
    assert_eq!(code(&o), 0);

    let o = hforge(&["analyze", "d.dessin"], p);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("aut_order 6"));
}

#[test]
fn usage_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    assert_eq!(code(&hforge(&["frobnicate"], p)), 1);
    assert_eq!(code(&hforge(&["analyze", "missing.dessin"], p)), 1);
    assert_eq!(code(&hforge(&["infmap", "obstruct", "--n", "1"], p)), 1);
    assert_eq!(code(&hforge(&["psl2", "--type", "2,3,7", "--prime", "11", "--out", "x"], p)), 1);
    assert_eq!(code(&hforge(&["--help"], p)), 0);
}

#[test]
fn psl2_hurwitz_quotient() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    let o = hforge(&["psl2", "--type", "3,2,7", "--out", "h.dessin"], p);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let o = hforge(&["analyze", "h.dessin"], p);
    let s = stdout(&o);
    assert!(s.contains("darts 84"), "{s}");
    assert!(s.contains("type 3,2,7"), "{s}");
    assert!(s.contains("genus 2"), "{s}");
}

#[test]
fn join_two_trivial_diagrams() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    fs::write(p.join("t0.diag"), T0).unwrap();
    let o = hforge(&["join", "--left", "t0.diag", "--right", "t0.diag", "--handles", "1,1", "--out", "j.diag"], p);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("w [2, 2]"));
    let j = fs::read_to_string(p.join("j.diag")).unwrap();
    assert!(j.starts_with("darts 4\n"), "{j}");

    let o = hforge(&["join", "--left", "t0.diag", "--right", "t0.diag", "--handles", "2,1", "--out", "k.diag"], p);
    assert_eq!(code(&o), 1);
}

#[test]
fn infmap_window_and_obstruction() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    let o = hforge(&["infmap", "window", "--map", "N3", "--radius", "12", "--out", "w.txt"], p);
    assert_eq!(code(&o), 0);
    let w = fs::read_to_string(p.join("w.txt")).unwrap();
    assert!(w.starts_with("map N3\nradius 12\n"));
    assert_eq!(code(&hforge(&["infmap", "window", "--map", "N3", "--radius", "2", "--out", "w.txt"], p)), 1);

    let o = hforge(&["infmap", "obstruct", "--map", "N3", "--n", "2..6"], p);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("y(20) = 18"), "{}", stdout(&o));
    let o = hforge(&["infmap", "obstruct", "--map", "Npq(4,3)", "--n", "3"], p);
    assert_eq!(code(&o), 0);
}

#[test]
fn ptrans_and_suite() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    let o = hforge(&["ptrans", "verify", "--nmax", "4"], p);
    assert_eq!(code(&o), 0);
    assert!(!stdout(&o).contains("FAIL"));
    let o = hforge(&["verify", "--suite", "3"], p);
    assert_eq!(code(&o), 0);
}

#[test]
fn outputs_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    for tag in ["a", "b"] {
        let o = hforge(&["realize", "--group", "A4", "--out", &format!("{tag}.dessin")], p);
        assert_eq!(code(&o), 0);
        let o = hforge(&["psl2", "--type", "2,3,7", "--seed", "3", "--out", &format!("{tag}.psl")], p);
        assert_eq!(code(&o), 0);
    }
    let same = |x: &str, y: &str| fs::read(p.join(x)).unwrap() == fs::read(p.join(y)).unwrap();
    assert!(same("a.dessin", "b.dessin"));
    assert!(same("a.psl", "b.psl"));
}
