//! End-to-end tests of the binary: exit codes, file outputs, round-trips,
//! and byte-level determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dstar"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("dstar-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("no signal")
}

fn write_graph(path: &Path, family_args: &[&str]) {
    let o = run(&[&["generate"], family_args, &["--out", path.to_str().unwrap()]].concat());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn bipartite_decompose_verify_round_trip() {
    let g = tmp("k33.txt");
    let cert = tmp("k33.json");
    write_graph(&g, &["complete-bipartite", "3", "3"]);
    let o = run(&[
        "decompose",
        g.to_str().unwrap(),
        "--theorem",
        "bipartite",
        "--k1",
        "1",
        "--k2",
        "1",
        "--out",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let stdout = String::from_utf8_lossy(&o.stdout);
    assert!(stdout.contains("3 stars"), "summary line: {stdout}");
    let v = run(&["verify", g.to_str().unwrap(), cert.to_str().unwrap()]);
    assert_eq!(code(&v), 0, "{}", String::from_utf8_lossy(&v.stderr));
    let json = std::fs::read_to_string(&cert).unwrap();
    assert_eq!(json.matches("\"u1\"").count(), 3);
}

#[test]
fn petersen_two_matchings_exits_2() {
    let g = tmp("pet.txt");
    write_graph(&g, &["petersen"]);
    let o = run(&[
        "decompose",
        g.to_str().unwrap(),
        "--theorem",
        "two-matchings",
        "--k1",
        "1",
        "--k2",
        "1",
    ]);
    assert_eq!(code(&o), 2);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("no two disjoint perfect matchings found"), "{err}");
}

#[test]
fn malformed_input_exits_1() {
    let g = tmp("bad.txt");
    std::fs::write(&g, "not a graph\n").unwrap();
    let o = run(&["decompose", g.to_str().unwrap(), "--k1", "1", "--k2", "1"]);
    assert_eq!(code(&o), 1);
    let v = run(&["verify", g.to_str().unwrap(), g.to_str().unwrap()]);
    assert_eq!(code(&v), 1);
    let i = run(&["info", g.to_str().unwrap()]);
    assert_eq!(code(&i), 1);
}

#[test]
fn corrupted_certificate_exits_3() {
    let g = tmp("k44.txt");
    let cert = tmp("k44.json");
    write_graph(&g, &["complete-bipartite", "4", "4"]);
    let o = run(&[
        "decompose",
        g.to_str().unwrap(),
        "--theorem",
        "bipartite",
        "--k1",
        "2",
        "--k2",
        "1",
        "--out",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let json = std::fs::read_to_string(&cert).unwrap();
    let parsed = dstar_core::certificate::Certificate::from_json(&json).unwrap();
    let mutated = dstar_core::oracle::mutate_certificate(&parsed, 42);
    let badpath = tmp("k44-bad.json");
    std::fs::write(&badpath, mutated.to_json()).unwrap();
    let v = run(&["verify", g.to_str().unwrap(), badpath.to_str().unwrap()]);
    assert_eq!(code(&v), 3, "{}", String::from_utf8_lossy(&v.stderr));

    // Certificate against a different graph: stamp mismatch, also exit 3.
    let g2 = tmp("k33b.txt");
    write_graph(&g2, &["complete-bipartite", "3", "3"]);
    let v2 = run(&["verify", g2.to_str().unwrap(), cert.to_str().unwrap()]);
    assert_eq!(code(&v2), 3);
}

#[test]
fn unknown_edge_index_in_certificate_exits_3() {
    let g = tmp("k33c.txt");
    let cert = tmp("k33c.json");
    write_graph(&g, &["complete-bipartite", "3", "3"]);
    let o = run(&[
        "decompose",
        g.to_str().unwrap(),
        "--theorem",
        "bipartite",
        "--k1",
        "1",
        "--k2",
        "1",
        "--out",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let json = std::fs::read_to_string(&cert).unwrap();
    let bad = json.replacen("\"central\": ", "\"central\": 99", 1);
    let badpath = tmp("k33c-bad.json");
    std::fs::write(&badpath, bad).unwrap();
    let v = run(&["verify", g.to_str().unwrap(), badpath.to_str().unwrap()]);
    assert_eq!(code(&v), 3);
}

#[test]
fn auto_mode_reports_theorem() {
    let g = tmp("k7.txt");
    write_graph(&g, &["complete", "7"]);
    let o = run(&[
        "decompose",
        g.to_str().unwrap(),
        "--theorem",
        "auto",
        "--k1",
        "1",
        "--k2",
        "1",
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let stdout = String::from_utf8_lossy(&o.stdout);
    assert!(stdout.contains("auto: even applied"), "{stdout}");
}

#[test]
fn dot_output_marks_central_edges() {
    let g = tmp("k33d.txt");
    let cert = tmp("k33d.json");
    let dot = tmp("k33d.dot");
    write_graph(&g, &["complete-bipartite", "3", "3"]);
    let o = run(&[
        "decompose",
        g.to_str().unwrap(),
        "--theorem",
        "bipartite",
        "--k1",
        "1",
        "--k2",
        "1",
        "--out",
        cert.to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("graph"));
    assert_eq!(text.matches("style=bold").count(), 3);
    assert!(text.contains("color=\"red\""));
    assert!(text.contains("color=\"blue\""));
}

#[test]
fn matching_file_drives_two_matchings() {
    let g = tmp("k6.txt");
    let cert = tmp("k6.json");
    write_graph(&g, &["complete", "6"]);
    // K6 edges in generator order: (0,1)=0 (0,2)=1 (0,3)=2 (0,4)=3 (0,5)=4
    // (1,2)=5 (1,3)=6 (1,4)=7 (1,5)=8 (2,3)=9 (2,4)=10 (2,5)=11 (3,4)=12
    // (3,5)=13 (4,5)=14. Two disjoint perfect matchings:
    let mfile = tmp("k6-matchings.txt");
    std::fs::write(&mfile, "0 9 14\n1 6 14\n").unwrap();
    // Second line shares edge 14; expect hypothesis failure (exit 2).
    let o = run(&[
        "decompose",
        g.to_str().unwrap(),
        "--theorem",
        "two-matchings",
        "--k1",
        "1",
        "--k2",
        "1",
        "--matching-file",
        mfile.to_str().unwrap(),
        "--out",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 2, "{}", String::from_utf8_lossy(&o.stderr));
    std::fs::write(&mfile, "0 9 14\n5 2 11\n").unwrap();
    // {1,2}=5, {0,3}=2, {2,5}=11 is not a matching (vertex 2 repeats):
    // Matching construction itself fails -> exit 1.
    let o = run(&[
        "decompose",
        g.to_str().unwrap(),
        "--theorem",
        "two-matchings",
        "--k1",
        "1",
        "--k2",
        "1",
        "--matching-file",
        mfile.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 1);
    // A genuine disjoint pair: {0,1},{2,3},{4,5} and {0,2},{1,3},{4,5}? No,
    // {4,5} repeats. Use {0,2},{1,4},{3,5} = edges 1, 7, 13.
    std::fs::write(&mfile, "0 9 14\n1 7 13\n").unwrap();
    let o = run(&[
        "decompose",
        g.to_str().unwrap(),
        "--theorem",
        "two-matchings",
        "--k1",
        "1",
        "--k2",
        "1",
        "--matching-file",
        mfile.to_str().unwrap(),
        "--out",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v = run(&["verify", g.to_str().unwrap(), cert.to_str().unwrap()]);
    assert_eq!(code(&v), 0);
}

#[test]
fn generated_outputs_are_byte_identical_per_seed() {
    let a = tmp("r1.txt");
    let b = tmp("r2.txt");
    for p in [&a, &b] {
        let o = run(&[
            "generate",
            "random-regular",
            "12",
            "6",
            "--seed",
            "7",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert_eq!(code(&o), 0);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());

    // And the certificates built from them are byte-identical too.
    let c1 = tmp("r1.json");
    let c2 = tmp("r2.json");
    for (g, c) in [(&a, &c1), (&b, &c2)] {
        let o = run(&[
            "decompose",
            g.to_str().unwrap(),
            "--theorem",
            "even",
            "--k1",
            "1",
            "--k2",
            "1",
            "--out",
            c.to_str().unwrap(),
        ]);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    }
    assert_eq!(std::fs::read(&c1).unwrap(), std::fs::read(&c2).unwrap());
}

#[test]
fn info_reports_structure() {
    let g = tmp("pet-info.txt");
    write_graph(&g, &["petersen"]);
    let o = run(&["info", g.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let out = String::from_utf8_lossy(&o.stdout);
    assert!(out.contains("n=10 m=15"), "{out}");
    assert!(out.contains("3-regular"), "{out}");
    assert!(out.contains("triangle-free"), "{out}");
    assert!(out.contains("has perfect matching"), "{out}");

    let k6 = tmp("k6-info.txt");
    write_graph(&k6, &["complete", "6"]);
    let o = run(&["info", k6.to_str().unwrap()]);
    let out = String::from_utf8_lossy(&o.stdout);
    assert!(out.contains("5-regular"), "{out}");
    assert!(out.contains("not bipartite"), "{out}");
    assert!(out.contains("has perfect matching"), "{out}");
}

#[test]
fn unknown_family_exits_1() {
    let o = run(&["generate", "moebius", "7"]);
    assert_eq!(code(&o), 1);
}
