use std::fs;
use std::path::{Path, PathBuf};

use fab_calc::cli::{run, Outcome};
use tempfile::TempDir;

fn fabcalc(args: &[&str]) -> Outcome {
    run(std::iter::once("fabcalc").chain(args.iter().copied()))
}

fn write(dir: &Path, name: &str, contents: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn standard_frame_file_verifies() {
    let dir = TempDir::new().unwrap();
    let out = fabcalc(&["--json", "frame", "standard", "--k", "2", "--l", "3"]);
    assert_eq!(out.status, 0, "{}", out.stderr);
    let path = write(dir.path(), "standard_2_3.json", &out.stdout);

    let text = fabcalc(&["frame", "verify", "--in", p(&path)]);
    assert_eq!((text.status, text.stdout.trim()), (0, "valid"));
    let json = fabcalc(&["--json", "frame", "verify", "--in", p(&path)]);
    let value: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(value["valid"], true);
    assert!(value["defect"].is_null());
}

#[test]
fn broken_frame_fails_verification_with_status_one() {
    let dir = TempDir::new().unwrap();
    let out = fabcalc(&["--json", "frame", "standard", "--k", "2", "--l", "1"]);
    let mut value: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    // a_11 := 0 breaks the partition of unity.
    value["generators"][0]["entries"][0][0] = "0".into();
    let path = write(dir.path(), "broken.json", &value.to_string());
    let verdict = fabcalc(&["--json", "frame", "verify", "--in", p(&path)]);
    assert_eq!(verdict.status, 1);
    let report: serde_json::Value = serde_json::from_str(&verdict.stdout).unwrap();
    assert_eq!(report["valid"], false);
    assert!(report["defect"].is_string());
}

#[test]
fn json_output_is_deterministic_and_round_trips() {
    let dir = TempDir::new().unwrap();
    let first = fabcalc(&["--json", "frame", "standard", "--k", "3", "--l", "2"]);
    let second = fabcalc(&["--json", "frame", "standard", "--k", "3", "--l", "2"]);
    assert_eq!(first, second);
    let frame = write(dir.path(), "frame.json", &first.stdout);
    let g = write(
        dir.path(),
        "g.json",
        r#"{"rows":6,"cols":6,"entries":[
            ["1","1","0","0","0","0"],["0","1","0","0","0","0"],["0","0","2","0","0","0"],
            ["0","0","0","1","0","1/2"],["0","0","0","0","1","0"],["i","0","0","0","0","1"]]}"#,
    );
    let conj = fabcalc(&["--json", "frame", "conjugate", "--in", p(&frame), "--g", p(&g)]);
    assert_eq!(conj.status, 0, "{}", conj.stderr);
    let conj_path = write(dir.path(), "conj.json", &conj.stdout);
    assert_eq!(fabcalc(&["frame", "verify", "--in", p(&conj_path)]).status, 0);

    // Conjugating back by the recovered conjugator reproduces the file byte for byte.
    let h = fabcalc(&["--json", "frame", "conjugator", "--in", p(&conj_path)]);
    let h_path = write(dir.path(), "h.json", &h.stdout);
    let again = fabcalc(&["--json", "frame", "conjugate", "--in", p(&frame), "--g", p(&h_path)]);
    assert_eq!(again.stdout, conj.stdout);
}

#[test]
fn centralizer_and_fibers() {
    let dir = TempDir::new().unwrap();
    let frame = write(dir.path(), "f.json", &fabcalc(&["--json", "frame", "standard", "--k", "2", "--l", "3"]).stdout);
    let c = fabcalc(&["--json", "centralizer", "--in", p(&frame)]);
    assert_eq!(c.status, 0, "{}", c.stderr);
    let value: serde_json::Value = serde_json::from_str(&c.stdout).unwrap();
    assert_eq!((value["k"].as_u64(), value["n"].as_u64()), (Some(3), Some(6)));

    assert_eq!(fabcalc(&["fab", "make", "--in", p(&frame)]).status, 0);
    let small = write(dir.path(), "s.json", &fabcalc(&["--json", "frame", "standard", "--k", "2", "--l", "1"]).stdout);
    let fiber = fabcalc(&["--json", "fab", "make", "--in", p(&small)]);
    assert_eq!(fiber.status, 0, "{}", fiber.stderr);
    let fiber_path = write(dir.path(), "fiber.json", &fiber.stdout);
    let other = write(dir.path(), "o.json", &fabcalc(&["--json", "frame", "standard", "--k", "1", "--l", "3"]).stdout);
    let product = fabcalc(&["fab", "product", "--in", p(&fiber_path), "--in2", p(&other)]);
    assert_eq!(product.status, 0, "{}", product.stderr);
    assert!(product.stdout.starts_with("FAB fiber M_2 -> M_6 (k = 2, l = 3)"), "{}", product.stdout);

    let square =
        write(dir.path(), "sq.json", &fabcalc(&["--json", "frame", "standard", "--k", "2", "--l", "2"]).stdout);
    assert_eq!(fabcalc(&["fab", "make", "--in", p(&square)]).status, 1);
}

#[test]
fn homotopy_commands() {
    assert_eq!(fabcalc(&["pi", "gr", "--k", "3", "--l", "5", "--r", "4"]).stdout.trim(), "Z");
    assert_eq!(fabcalc(&["pi", "gr", "--k", "4", "--l", "6", "--r", "2"]).stdout.trim(), "Z/2");
    assert_eq!(
        fabcalc(&["--json", "pi", "fr", "--k", "3", "--l", "5", "--r", "3"]).stdout.trim(),
        r#"{"rank":0,"torsion":[3]}"#
    );
    assert_eq!(
        fabcalc(&["--json", "oracle", "--k", "3", "--l", "4", "--r", "2"]).stdout.trim(),
        r#"{"even":{"rank":1,"torsion":[]},"odd":{"rank":0,"torsion":[]}}"#
    );
    let induced = fabcalc(&["--json", "induced", "--k", "3", "--l", "6", "--m", "6", "--n", "12", "--r", "3"]);
    let value: serde_json::Value = serde_json::from_str(&induced.stdout).unwrap();
    assert_eq!(value["kind"], "cyclic-image");
    assert_eq!((value["image_generator"].as_u64(), value["image_order"].as_u64()), (Some(4), Some(3)));
    assert_eq!(fabcalc(&["induced", "--k", "2", "--l", "3", "--m", "4", "--n", "9", "--r", "5"]).status, 1);

    assert_eq!(fabcalc(&["pi", "gr", "--k", "3", "--l", "5", "--r", "11"]).status, 1);
    assert_eq!(fabcalc(&["pi", "gr", "--k", "1", "--l", "5", "--r", "1"]).status, 1);
    assert_eq!(fabcalc(&["pi", "gr", "--k", "3"]).status, 2);
    assert_eq!(fabcalc(&["induced", "--k", "2", "--l", "3", "--m", "5", "--n", "9", "--r", "4"]).status, 1);
}

#[test]
fn symbolic_product_formulas() {
    let out = fabcalc(&["class", "fab-product", "--symbolic", "--N", "5"]);
    assert_eq!(out.status, 0, "{}", out.stderr);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines[3], "c3(A x B) = c3(A) + c3(B)");
    assert_eq!(lines[4], "c4(A x B) = c4(A) - 5*c2(A)*c2(B) + c4(B)");
    assert!(lines[5].starts_with("c5(A x B) = "));
}

#[test]
fn class_files_round_trip() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.json", r#"{"kind":"newton","dim0":"1","values":["0","2","1/2","-3"]}"#);
    let inv = fabcalc(&["--json", "class", "fab-inverse", "--in", p(&a)]);
    assert_eq!(inv.status, 0, "{}", inv.stderr);
    let inv_path = write(dir.path(), "inv.json", &inv.stdout);
    let back = fabcalc(&["--json", "class", "fab-inverse", "--in", p(&inv_path)]);
    let original: serde_json::Value = serde_json::from_str(&fs::read_to_string(&a).unwrap()).unwrap();
    assert_eq!(serde_json::from_str::<serde_json::Value>(&back.stdout).unwrap(), original);

    let product = fabcalc(&["--json", "class", "fab-product", "--in", p(&a), "--in2", p(&inv_path)]);
    assert_eq!(product.stdout.trim(), r#"{"kind":"newton","dim0":"1","values":["0","0","0","0"]}"#);

    let chern = fabcalc(&["--json", "class", "newton2chern", "--in", p(&a)]);
    let chern_path = write(dir.path(), "c.json", &chern.stdout);
    let newton = fabcalc(&["--json", "class", "chern2newton", "--in", p(&chern_path)]);
    assert_eq!(serde_json::from_str::<serde_json::Value>(&newton.stdout).unwrap(), original);
}

#[test]
fn bezout_command() {
    let dir = TempDir::new().unwrap();
    // k·η and m·η for η = (1; 1, 2, 3), k = 2, m = 3.
    let xk = write(dir.path(), "xk.json", r#"{"kind":"newton","dim0":"2","values":["2","4","6"]}"#);
    let xm = write(dir.path(), "xm.json", r#"{"kind":"newton","dim0":"3","values":["3","6","9"]}"#);
    let eta = fabcalc(&["--json", "class", "bezout", "--in", p(&xk), "--in2", p(&xm)]);
    assert_eq!(eta.stdout.trim(), r#"{"kind":"newton","dim0":"1","values":["1","2","3"]}"#);
    let bad = write(dir.path(), "bad.json", r#"{"kind":"newton","dim0":"3","values":["3","6","10"]}"#);
    assert_eq!(fabcalc(&["class", "bezout", "--in", p(&xk), "--in2", p(&bad)]).status, 1);
}

#[test]
fn segre_and_file_errors() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.json", r#"{"coords":["1","i"]}"#);
    let b = write(dir.path(), "b.json", r#"{"coords":["2","0","-1"]}"#);
    assert_eq!(fabcalc(&["segre", "--p", p(&a), "--q", p(&b)]).stdout.trim(), "[2 : 0 : -1 : 2*i : 0 : -i]");
    let missing = dir.path().join("nope.json");
    assert_eq!(fabcalc(&["segre", "--p", p(&missing), "--q", p(&b)]).status, 2);
    let garbage = write(dir.path(), "g.json", "{ not json");
    assert_eq!(fabcalc(&["frame", "verify", "--in", p(&garbage)]).status, 2);
}
