use std::path::{Path, PathBuf};
use std::process::Command;

use frobpair::instances::catalog;
use frobpair_cli::{run, Outcome, EXIT_INPUT};

fn bin(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_frobpair"))
        .args(args)
        .output()
        .unwrap()
}

fn frob(args: &[&str]) -> Outcome {
    run(std::iter::once("frobpair").chain(args.iter().copied()))
}

fn models() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("models")
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn every_catalog_example_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for e in catalog() {
        let (name, field) = e.name.rsplit_once('-').unwrap();
        let path = dir.path().join(format!("{}.fp", e.name));
        let path = path.to_str().unwrap();
        let out = frob(&["example", name, "--field", field, "-o", path]);
        assert_eq!(out.code, 0, "{}: {}", e.name, out.stderr);
        let out = frob(&["--format", "machine", "check", path, "--suite", "left"]);
        assert_eq!(out.code, 0, "{}:\n{}", e.name, out.stdout);
        assert_eq!(out.stdout.lines().count(), 12);
        let all = frob(&["check", path]);
        assert!(all.stdout.contains("dual-comparison"), "{}", e.name);
    }
}

#[test]
fn bundled_models_match_the_generator() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["trivial", "sphere2"] {
        let path = dir.path().join(name);
        let out = frob(&["example", name, "-o", path.to_str().unwrap()]);
        assert_eq!(out.code, 0);
        assert_eq!(
            std::fs::read_to_string(&path).unwrap(),
            std::fs::read_to_string(models().join(format!("{name}.fp"))).unwrap(),
            "{name}"
        );
    }
}

#[test]
fn failing_check_exits_one_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(models().join("sphere2.fp"))
        .unwrap()
        .replace(
            "gen eta : I -> X = { deg 0 : [[1]] }",
            "gen eta : I -> X = { deg 0 : [[2]] }",
        );
    let path = write(&dir, "bad.fp", &text);
    let out = frob(&["--format", "machine", "check", &path, "--suite", "left"]);
    assert_eq!(out.code, 1);
    assert!(
        out.stdout
            .contains("1a-unit-left FAIL deg=-2 row=0 col=0 lhs=2 rhs=1"),
        "{}",
        out.stdout
    );
}

#[test]
fn file_checks_are_reported() {
    let dir = tempfile::tempdir().unwrap();
    let mut text = std::fs::read_to_string(models().join("sphere2.fp")).unwrap();
    text.push_str("gen z : X -> X = { }\ncheck unit-twice : mu . (eta * eta) == eta\ncheck wrong : z == id X\n");
    let path = write(&dir, "extra.fp", &text);
    let out = frob(&["--format", "machine", "check", &path, "--suite", "left"]);
    assert!(out.stdout.contains("unit-twice PASS"));
    assert!(out.stdout.contains("wrong FAIL"), "{}", out.stdout);
    assert_eq!(out.code, 1);
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.fp");
    assert_eq!(frob(&["check", missing.to_str().unwrap()]).code, EXIT_INPUT);

    let bad = write(
        &dir,
        "bad.fp",
        "field Q\nobject X { 0:1 }\ngen mu : X * X -> X = { deg 0 : [[1, 2]] }\n",
    );
    let out = frob(&["check", &bad]);
    assert_eq!(out.code, EXIT_INPUT);
    assert!(out.stderr.contains("line 3"), "{}", out.stderr);

    let sphere = models().join("sphere2.fp");
    let sphere = sphere.to_str().unwrap();
    assert_eq!(frob(&["check", sphere, "--pair", "nope"]).code, EXIT_INPUT);
    assert_eq!(
        frob(&["eval", sphere, "--term", "mu . mu"]).code,
        EXIT_INPUT
    );
    assert_eq!(frob(&["eval", sphere, "--term", "mu . ("]).code, EXIT_INPUT);
    assert_eq!(
        frob(&["example", "rp2", "--field", "Q", "-o", "x"]).code,
        EXIT_INPUT
    );
    assert_eq!(
        frob(&["fuzz", "--seed", "x", "--count", "1"]).code,
        EXIT_INPUT
    );
    assert_eq!(bin(&["--version"]).status.code(), Some(0));
    assert_eq!(bin(&["nonsense"]).status.code(), Some(EXIT_INPUT));
}

#[test]
fn several_pairs_are_prefixed() {
    let dir = tempfile::tempdir().unwrap();
    let mut text = std::fs::read_to_string(models().join("sphere2.fp")).unwrap();
    text.push_str(
        "pair again { X=X, Y=Y, eta=eta, mu=mu, psi=psi, eps=eps, delta=delta, phi=phi }\n",
    );
    let path = write(&dir, "two.fp", &text);
    let out = frob(&["--format", "machine", "check", &path, "--suite", "left"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("sphere2/1a-assoc PASS"));
    assert!(out.stdout.contains("again/3b PASS"));
    let one = frob(&[
        "--format", "machine", "check", &path, "--suite", "left", "--pair", "again",
    ]);
    assert!(one.stdout.starts_with("1a-assoc PASS"));
}

#[test]
fn eval_and_transport() {
    let sphere = models().join("sphere2.fp");
    let sphere = sphere.to_str().unwrap();
    let out = frob(&["eval", sphere, "--term", "eps . psi . (eta * id Y)"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "{ 0:1, 2:1 } -> I = { deg 0 : [[1]] }\n");
    for (dir, gen, v) in [("lambda", "mu", "X"), ("rho", "psi", "Y")] {
        let out = frob(&[
            "--format",
            "machine",
            "transport",
            sphere,
            "--dir",
            dir,
            "--mor",
            gen,
            "--u",
            "X",
            "--v",
            v,
        ]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stdout.starts_with("transport-round-trip PASS\n"));
    }
    let out = frob(&[
        "transport",
        sphere,
        "--dir",
        "lambda-inv",
        "--mor",
        "phi",
        "--u",
        "X",
        "--v",
        "X",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.starts_with("lambda-inv(phi) : "));
}

#[test]
fn binary_output_is_byte_deterministic() {
    let args = [
        "--format",
        "machine",
        "fuzz",
        "--seed",
        "9",
        "--count",
        "6",
        "--mutations",
        "10",
    ];
    let a = bin(&args);
    let b = bin(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), b.status.code());
    assert_eq!(String::from_utf8(a.stdout).unwrap(), frob(&args).stdout);
}
