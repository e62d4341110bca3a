use std::path::PathBuf;
use std::process::{Command, Output};

use sheafdist::{convolve_barcode, parse_barcode, Tolerance};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sheafdist"))
        .args(args)
        .env_remove("SHEAFDIST_TOL")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn dist_on_fixtures() {
    let o = run(&["dist", &fixture("circle_f.gbc"), &fixture("circle_g.gbc")]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "1\n"));
    let o = run(&["dist", &fixture("circle_f.gbc"), &fixture("circle_f.gbc")]);
    assert_eq!(stdout(&o), "0\n");
    let o = run(&["dist", &fixture("open.gbc"), &fixture("empty.gbc")]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "inf\n"));
}

#[test]
fn match_on_fixtures() {
    let o = run(&["match", &fixture("circle_f.gbc"), &fixture("circle_g.gbc")]);
    assert_eq!(stdout(&o), "1\nC -1 [-1,1]@0 [0,0]@0 1\nC 0 (-1,1)@0 [0,0]@1 1\n");
}

#[test]
fn convolve_output_reparses() {
    for eps in ["0.5", "1", "-0.5", "3"] {
        let o = run(&["convolve", &fixture("circle_f.gbc"), "--eps", eps]);
        assert_eq!(o.status.code(), Some(0));
        let lib = convolve_barcode(
            &parse_barcode(&std::fs::read_to_string(fixture("circle_f.gbc")).unwrap()).unwrap(),
            eps.parse().unwrap(),
            Tolerance::DEFAULT,
        );
        assert_eq!(parse_barcode(&stdout(&o)).unwrap(), lib);
    }
    let o = run(&["convolve", &fixture("circle_f.gbc"), "--eps", "1"]);
    assert_eq!(stdout(&o), "0 [-2,2]\n1 [0,0]\n");
}

#[test]
fn interpolate_midpoint() {
    let o = run(&["interpolate", &fixture("circle_f.gbc"), &fixture("circle_g.gbc"), "--t", "0.5"]);
    assert_eq!(stdout(&o), "0 (-0.5,0.5)\n0 [-0.5,0.5]\n");
    let o = run(&["interpolate", &fixture("circle_f.gbc"), &fixture("circle_g.gbc"), "--t", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["interpolate", &fixture("open.gbc"), &fixture("empty.gbc"), "--t", "0"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn hom_gamma_component() {
    assert_eq!(stdout(&run(&["hom", "(0,2)@0", "[1,3]@0"])), "1\n");
    assert_eq!(stdout(&run(&["hom", "[1,2]@1", "(0,3)@0"])), "1\n");
    assert_eq!(stdout(&run(&["hom", "(0,3)@1", "[1,2]@0"])), "0\n");
    assert_eq!(stdout(&run(&["gamma", &fixture("circle_f.gbc")])), "0 1\n1 1\n");
    assert_eq!(stdout(&run(&["gamma", &fixture("circle_g.gbc"), "--compact"])), "0 1\n1 1\n");
    assert_eq!(stdout(&run(&["component", &fixture("circle_f.gbc"), &fixture("circle_g.gbc")])), "true\n");
    assert_eq!(stdout(&run(&["component", &fixture("open.gbc"), &fixture("empty.gbc")])), "false\n");
}

#[test]
fn validate_and_import() {
    let o = run(&["validate", &fixture("circle_f.gbc")]);
    assert_eq!(stdout(&o), "ok 2 intervals: 2 central, 0 right, 0 left\n");
    let o = run(&["import-diagram", &fixture("sample.pdg")]);
    assert_eq!(stdout(&o), "0 [0,3)\n0 [1,inf)\n1 [-2,0.5)\n");
    let o = run(&["import-diagram", &fixture("sample.pdg"), "--side", "l"]);
    assert_eq!(stdout(&o), "0 (-inf,-1]\n0 (-3,0]\n1 (-0.5,2]\n");
}

#[test]
fn error_exit_codes() {
    let dir = std::env::temp_dir().join(format!("sheafdist-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.gbc");
    std::fs::write(&bad, "0 [0,1]\n0 [2,1]\n").unwrap();
    let o = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(run(&["dist", "/no/such/file.gbc", &fixture("open.gbc")]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["dist", &fixture("open.gbc"), &fixture("open.gbc"), "--frob"]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn tolerance_from_flag_and_environment() {
    // (0,1) collapses at ε = 0.5; with a coarse tolerance ε = 0.4999 already does.
    let args = ["convolve", &fixture("open.gbc"), "--eps", "0.4999"];
    assert_eq!(stdout(&run(&args)), "0 (0.4999,0.5001)\n");
    let mut coarse = args.to_vec();
    coarse.extend(["--tol", "0.001"]);
    assert_eq!(stdout(&run(&coarse)), "1 [0.5,0.5]\n");
    let o = Command::new(env!("CARGO_BIN_EXE_sheafdist"))
        .args(args)
        .env("SHEAFDIST_TOL", "0.001")
        .output()
        .unwrap();
    assert_eq!(stdout(&o), "1 [0.5,0.5]\n");
}
