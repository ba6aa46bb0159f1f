use std::path::PathBuf;
use std::process::Command;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = pfs_cli::run(std::iter::once("pfs").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn ht_table_matches_fixture() {
    let (code, out, _) = run(&["ht-table"]);
    assert_eq!(code, 0);
    assert_eq!(out, include_str!("fixtures/ht_table.txt"));
    assert!(out.lines().any(|l| l == "0101 5 10 3 15 33 1"));
}

#[test]
fn solve_example_instance() {
    let path = fixture("example_heavy_tuple.toml");
    for method in ["exhaustive", "parallel", "bnb"] {
        let (code, out, err) = run(&["solve", &path, "--method", method]);
        assert_eq!(code, 0, "{err}");
        assert!(out.contains("best: 0101\n"), "{out}");
        assert!(out.contains("cost: 33\n"), "{out}");
    }
    let (_, out, _) = run(&["solve", &path, "--format", "csv"]);
    assert!(out.lines().nth(1).unwrap().starts_with("0101,33,8,16,8,"), "{out}");
}

#[test]
fn solve_falls_back_for_non_tetrad_cost() {
    let dir = std::env::temp_dir().join(format!("pfs-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let inst = dir.join("mis.toml").display().to_string();
    let (code, _, err) = run(&["encode-mis", &fixture("sample5.graph"), "-o", &inst]);
    assert_eq!(code, 0, "{err}");
    let (code, out, _) = run(&["solve", &inst, "--method", "bnb"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("note: "), "{out}");
    assert!(out.contains("method: exhaustive\n"));
    let (_, out, _) = run(&["verify", &inst, "01100"]);
    assert!(out.contains("feasible: true\n") && out.contains("independent: true\n"), "{out}");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn diverge_single_edge() {
    let (code, out, _) = run(&["diverge", "--kind", "mis", "--graph", &fixture("single_edge.graph")]);
    assert_eq!(code, 0);
    assert_eq!(out, "000\n111\n");
    let (_, out, _) = run(&["diverge", "--kind", "hamiltonian-degree", "--graph", &fixture("sample5.graph")]);
    assert_eq!(out, "");
}

#[test]
fn encoders_emit_instances() {
    let (code, out, _) = run(&["encode-hc", &fixture("sample5.graph")]);
    assert_eq!(code, 0);
    assert!(out.contains("kind = \"hamiltonian\""), "{out}");
    let (code, out, _) = run(&["encode-sat", &fixture("small.cnf")]);
    assert_eq!(code, 0);
    assert!(out.contains("kind = \"sat\""), "{out}");
    let (code, out, _) = run(&["ht-gen", "--k", "2", "--seed", "42"]);
    assert_eq!(code, 0);
    assert!(out.contains("seed = 42"), "{out}");
}

#[test]
fn bench_csv() {
    let (code, out, _) = run(&["bench", "--k", "1-2", "--seeds", "3"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,seed,feasible_count,pfs_evaluations,cost_evaluations,best_weight,elapsed_ms");
    assert!(lines[1].starts_with("4,3,8,16,8,"));
    assert!(lines[2].starts_with("8,3,128,256,128,"));
}

#[test]
fn usage_and_runtime_errors() {
    let (code, _, err) = run(&["solve", "--bogus"]);
    assert_eq!(code, 2);
    assert!(err.contains("Usage:"), "{err}");
    let (code, _, err) = run(&["bench", "--k", "3-1"]);
    assert_eq!(code, 2, "{err}");
    let (code, _, err) = run(&["encode-mis", "/nonexistent/graph"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error: "));
    let (code, _, err) = run(&["verify", &fixture("example_heavy_tuple.toml"), "010"]);
    assert_eq!(code, 1);
    assert!(err.contains("arity"), "{err}");
}

#[test]
fn binary_runs() {
    let out = Command::new(env!("CARGO_BIN_EXE_pfs")).arg("ht-table").output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), include_str!("fixtures/ht_table.txt"));
    let out = Command::new(env!("CARGO_BIN_EXE_pfs")).arg("nope").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
