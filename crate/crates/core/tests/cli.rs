//! The `cherednik` binary: exit codes, golden outputs, config files and JSON
//! stability. Set `UPDATE_GOLDEN=1` to rewrite the files under `tests/golden`.

use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cherednik"))
}

fn run(args: &str) -> (i32, String, String) {
    let out = bin().args(args.split_whitespace()).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

const CASES: &[(&str, &str, i32)] = &[
    ("jack_b2_x1.json", "jack --group 2,1,2 --mu 1,0 --format json", 0),
    ("jack_b2_one.txt", "jack --group 2,1,2 --mu 0,0", 0),
    ("jack_b2_check_both.txt", "jack --group 2,1,2 --mu 1,0 --check-both", 0),
    ("jack_g312_degree2.txt", "jack --group 3,1,2 --degree 2", 0),
    ("jack_b2_gordon_singular.txt", "jack --group 2,1,2 --mu 5,0 --point gordon", 0),
    ("jack_b2_collision.json", "jack --group 2,1,2 --degree 2 --c0 1 --format json", 2),
    ("verify_g312.txt", "verify --group 3,1,2 --max-deg 4", 0),
    ("verify_d2_pbw.json", "verify --group 2,2,2 --suite pbw --format json", 0),
    ("verify_pi_fault.txt", "verify --group 2,1,2 --max-deg 2 --suite intertwiners --inject-fault pi-sign", 1),
    ("verify_pbw_fault.txt", "verify --group 2,1,2 --suite pbw --inject-fault pbw-class", 1),
    ("verify_dunkl_fault.txt", "verify --group 2,1,2 --max-deg 2 --suite relations --inject-fault dunkl-sign", 1),
    ("gordon_b2.txt", "gordon --group 2,1,2", 0),
    ("gordon_b2.json", "gordon --group 2,1,2 --format json", 0),
    ("gordon_g333.txt", "gordon --group 3,3,3", 0),
    ("gordon_d2.txt", "gordon --group 2,2,2", 2),
    ("catalan_g332.txt", "catalan --group 3,3,2", 0),
    ("catalan_b2.json", "catalan --group 2,1,2 --format json", 0),
    ("exponents_g422.json", "exponents --group 4,2,2 --format json", 0),
    ("exponents_b2.txt", "exponents --group 2,1,2", 0),
    ("coxeter_g333.txt", "coxeter --group 3,3,3", 0),
];

#[test]
fn golden_outputs() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut mismatches = Vec::new();
    for &(file, args, code) in CASES {
        let (got_code, stdout, stderr) = run(args);
        assert_eq!(got_code, code, "{args}: exit code\n{stderr}");
        let path = golden_dir().join(file);
        if update {
            std::fs::write(&path, &stdout).unwrap();
            continue;
        }
        let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {file}"));
        if want != stdout {
            mismatches.push(format!("{args}\n--- expected\n{want}--- got\n{stdout}"));
        }
    }
    assert!(mismatches.is_empty(), "{}", mismatches.join("\n"));
}

#[test]
fn json_outputs_round_trip() {
    for &(_, args, _) in CASES.iter().filter(|c| c.1.contains("--format json")) {
        let (_, stdout, _) = run(args);
        let v: Value = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{args}: {e}"));
        assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", stdout, "{args}");
    }
}

#[test]
fn jack_matches_library() {
    use cherednik::group::GroupSpec;
    use cherednik::jack::{jack_by_solve, Composition};
    use cherednik::poly::PolyRep;
    use cherednik::scalar::Params;

    let (code, stdout, _) = run("jack --group 3,1,2 --mu 2,1 --format json");
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    let rep = PolyRep::new(Params::generic(GroupSpec::new(3, 1, 2).unwrap()));
    let f = jack_by_solve(&rep, &Composition::new(vec![2, 1])).unwrap();
    assert_eq!(v, f.to_json());
}

#[test]
fn constant_for_zero_composition() {
    let (_, stdout, _) = run("jack --group 2,1,2 --mu 0,0 --format json");
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["terms"], serde_json::json!([{"coeff": "1", "exp": [0, 0]}]));
}

#[test]
fn config_file_with_flag_override() {
    let dir = std::env::temp_dir().join(format!("cherednik_cfg_{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("job.conf");
    std::fs::write(&cfg, "# defaults\ngroup = 2,1,2\nmu = 1,0\nformat = json\ncheck_both = true\n").unwrap();
    let cfg = cfg.to_str().unwrap();

    let (code, stdout, _) = run(&format!("jack --config {cfg}"));
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["mu"], serde_json::json!([1, 0]));
    assert_eq!(v["constructions_agree"], true);

    let (code, stdout, _) = run(&format!("jack --config {cfg} --mu 0,1 --format text"));
    assert_eq!(code, 0);
    assert!(stdout.starts_with("mu = (0,1)\n"), "{stdout}");

    std::fs::write(dir.join("bad.conf"), "group 2,1,2\n").unwrap();
    let (code, _, stderr) = run(&format!("jack --config {}", dir.join("bad.conf").display()));
    assert_eq!(code, 2);
    assert!(stderr.contains("key = value"));
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn precondition_failures_exit_two() {
    for args in [
        "jack --group 3,2,2 --mu 1,0",
        "jack --group 2,1,2 --mu 1,0,0",
        "jack --group 2,1,2",
        "exponents --group 3,1,2 --m 6",
        "coxeter --group 1,1,3",
        "catalan --group 2,2,2",
        "jack --group 2,1,2 --mu 1,0 --point gordon --c0 1",
        "verify --group 2,1,2 --suite nonsense",
    ] {
        let (code, _, stderr) = run(args);
        assert_eq!(code, 2, "{args}: {stderr}");
        assert!(!stderr.is_empty(), "{args}");
    }
}

#[test]
fn thread_count_does_not_change_output() {
    let (_, one, _) = run("verify --group 3,1,2 --max-deg 3 --threads 1 --format json");
    let (_, many, _) = run("verify --group 3,1,2 --max-deg 3 --threads 4 --format json");
    assert_eq!(one, many);
}

#[test]
fn help_and_version() {
    let (code, stdout, _) = run("--help");
    assert_eq!(code, 0);
    assert!(stdout.contains("gordon"));
    assert!(!stdout.contains("inject"));
    let (code, stdout, _) = run("--version");
    assert_eq!(code, 0);
    assert!(stdout.starts_with("cherednik "));
}
