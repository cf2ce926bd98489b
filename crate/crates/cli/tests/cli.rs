use std::path::PathBuf;
use std::process::{Command, Output};

fn dir(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join(name)
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(dir("golden").join(name)).unwrap()
}

fn fixture(name: &str) -> String {
    dir("fixtures").join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_morseflow"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn golden_path(name: &str) -> String {
    dir("golden").join(name).to_string_lossy().into_owned()
}

#[test]
fn gen_outputs_match_golden() {
    assert_eq!(stdout(&["gen", "rp2"]), golden("gen_rp2.toml"));
    assert_eq!(stdout(&["gen", "sphere"]), golden("gen_sphere.toml"));
    assert_eq!(
        stdout(&["gen", "full-simplex", "--dim", "2"]),
        golden("gen_full_simplex_2.toml")
    );
}

#[test]
fn rp2_homology_and_differentials() {
    let file = golden_path("gen_rp2.toml");
    let hom = stdout(&["homology", &file]);
    assert_eq!(hom, golden("homology_rp2.txt"));
    assert!(hom.contains("H_0 = Z\n") && hom.contains("H_1 = Z/2\n") && hom.contains("H_2 = 0\n"));
    assert_eq!(stdout(&["homology", &file, "--simplicial"]), hom);

    let d2 = stdout(&["differential", &file, "-p", "2"]);
    assert_eq!(d2, golden("differential_rp2_p2.txt"));
    let last: i64 = d2.lines().last().unwrap().parse().unwrap();
    assert_eq!(last.abs(), 2);
    assert_eq!(
        stdout(&["differential", &file, "-p", "1"]),
        golden("differential_rp2_p1.txt")
    );
}

#[test]
fn sphere_moduli_is_a_cycle() {
    let file = golden_path("gen_sphere.toml");
    let report = stdout(&["moduli", &file, "--alpha", "1-2-3", "--gamma", "4"]);
    assert_eq!(report, golden("moduli_sphere.txt"));
    assert!(report.contains("1 component\n"));
    assert!(report.contains("cycle"));
    assert!(report.contains("boundary flowlines: 0"));
    assert_eq!(stdout(&["homology", &file]), golden("homology_sphere.txt"));
}

#[test]
fn rp2_moduli_has_two_paths() {
    let file = golden_path("gen_rp2.toml");
    let report = stdout(&["moduli", &file, "--alpha", "4-5-6", "--gamma", "1"]);
    assert_eq!(report, golden("moduli_rp2.txt"));
    assert_eq!(report.matches(": path,").count(), 2);
}

#[test]
fn trace_from_red_flowline() {
    let file = golden_path("gen_rp2.toml");
    let out = stdout(&[
        "trace",
        &file,
        "--from",
        "4-5-6 4-6 3-4-6 3-4 1-3-4 1-3 1",
        "--start",
        "c",
    ]);
    assert_eq!(out, golden("trace_rp2_red.txt"));
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[0].starts_with("c\t"));
    let last: Vec<&str> = lines.last().unwrap().split('\t').collect();
    assert_eq!(last[0], "f");
    assert_eq!(last[2], "4-5-6 5-6 1-5-6 1-5 1-3-5 1-3 3 2-3 2 1-2 1");
}

#[test]
fn sphere_trace_returns_to_start() {
    let file = golden_path("gen_sphere.toml");
    let out = stdout(&["trace", &file, "--from", "1-2-3 1-2 1-2-4 1-4 4", "--start", "f"]);
    assert_eq!(out, golden("trace_sphere.txt"));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.first(), lines.last());
}

#[test]
fn dot_export() {
    let file = golden_path("gen_full_simplex_2.toml");
    let dot = stdout(&["export-dot", &file, "--alpha", "0-1-2", "--gamma", "0"]);
    assert_eq!(dot, golden("dot_triangle.dot"));
}

#[test]
fn deterministic_output() {
    let file = golden_path("gen_rp2.toml");
    let args = ["moduli", &file, "--alpha", "4-5-6", "--gamma", "1"];
    assert_eq!(stdout(&args), stdout(&args));
    let a = stdout(&[
        "gen",
        "graph-property",
        "--n",
        "4",
        "--property",
        "max-degree:1",
        "--random-field",
        "--seed",
        "3",
    ]);
    let b = stdout(&[
        "gen",
        "graph-property",
        "--n",
        "4",
        "--property",
        "max-degree:1",
        "--random-field",
        "--seed",
        "3",
    ]);
    assert_eq!(a, b);
}

#[test]
fn presets_validate() {
    for preset in ["sphere", "rp2", "two-triangles"] {
        let out = stdout(&["validate", "--preset", preset]);
        assert!(out.starts_with("ok\n"), "{out}");
        assert!(out.contains("gradient: yes"));
    }
}

fn failure(args: &[&str]) -> (i32, String) {
    let out = run(args);
    (out.status.code().unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn malformed_fixtures_fail_with_messages() {
    let cases = [
        ("syntax_error.toml", 2, "parse error at line 2"),
        (
            "unsorted_simplex.toml",
            2,
            "line 4, column 3: malformed simplex: vertices [3, 2] are not strictly increasing",
        ),
        (
            "not_a_facet.toml",
            2,
            "line 6, column 3: pair (1, 2-3) is not a facet relation",
        ),
        ("repeated_simplex.toml", 1, "simplex 1 is in more than one pair"),
        ("bad_morse_values.toml", 1, "invalid discrete Morse function at 1-2"),
    ];
    for (name, code, message) in cases {
        let (got, stderr) = failure(&["validate", &fixture(name)]);
        assert_eq!(got, code, "{name}: {stderr}");
        assert!(stderr.contains(message), "{name}: {stderr}");
    }
}

#[test]
fn closed_vpath_needs_max_len() {
    let file = fixture("closed_vpath.toml");
    assert!(stdout(&["validate", &file]).contains("gradient: no, closed V-path 1 1-2 2 2-3 3 1-3 1"));
    let (code, stderr) = failure(&["flowlines", &file, "--alpha", "3-4", "--gamma", "4"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("no length cap"));
    let out = stdout(&["flowlines", &file, "--alpha", "3-4", "--gamma", "4", "--max-len", "8"]);
    assert_eq!(out, "+1\t3-4 4\ncount 1 signed 1\n");
}

#[test]
fn usage_errors() {
    let (code, _) = failure(&["moduli", "--preset", "sphere", "--alpha", "1-2-3", "--gamma", "x"]);
    assert_eq!(code, 2);
    let (code, stderr) = failure(&["moduli", "--preset", "sphere", "--alpha", "1-2-3", "--gamma", "1-2"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("not critical"), "{stderr}");
    let (code, _) = failure(&["trace", "--preset", "sphere", "--from", "1-2-3 1-2"]);
    assert_eq!(code, 2);
    let (code, _) = failure(&["homology"]);
    assert_eq!(code, 2);
}

#[test]
fn d2_check_passes_on_presets() {
    for preset in ["sphere", "rp2", "two-triangles"] {
        assert!(stdout(&["d2-check", "--preset", preset]).starts_with("ok"));
        assert!(stdout(&["d2-check", "--preset", preset, "--simplicial"]).starts_with("ok"));
    }
}

#[test]
fn gen_writes_file() {
    let dir = std::env::temp_dir().join(format!("morseflow-gen-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k4.toml");
    let p = path.to_string_lossy().into_owned();
    stdout(&[
        "gen",
        "graph-property",
        "--n",
        "4",
        "--property",
        "colourable:2",
        "-o",
        &p,
    ]);
    // 2-edge-colourable subgraphs of K4: all 6 edges, all 15 pairs, the 12
    // three-edge paths and the 3 four-cycles
    let out = stdout(&["validate", &p]);
    assert!(out.contains("f-vector: (6, 15, 12, 3)"), "{out}");
    std::fs::remove_dir_all(&dir).unwrap();
}
