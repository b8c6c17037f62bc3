//! Golden-file tests for `nc`. Regenerate with `NC_BLESS=1 cargo test -p ncschur-cli`.

use std::path::{Path, PathBuf};
use std::process::Command;

const CASES: &[(&str, &[&str], i32)] = &[
    ("e_k2_n3", &["e", "--k", "2", "--N", "3"], 0),
    ("e_letters", &["e", "--k", "2", "--N", "5", "--letters", "1,3,5"], 0),
    ("e_bad_letter", &["e", "--k", "1", "--N", "2", "--letters", "3"], 2),
    ("h_l2_n3", &["h", "--l", "2", "--N", "3"], 0),
    ("jschur_21_n3", &["jschur", "--lambda", "2,1", "--N", "3"], 0),
    ("jschur_21_n3_via_h", &["jschur", "--lambda", "2,1", "--N", "3", "--via-h"], 0),
    ("jschur_json", &["--format", "json-lines", "jschur", "--lambda", "2,1", "--N", "3"], 0),
    ("flagged_12_23", &["flagged", "--alpha", "1,2", "--flags", "2,3"], 0),
    ("flagged_words", &["flagged", "--alpha", "1,2", "--flags", "2,3", "--words", "3"], 0),
    ("reduce_ic", &["reduce", "--ideal", "IC", "--N", "3", "tests/data/e1e2.vec"], 0),
    ("reduce_q", &["reduce", "--ideal", "JlamQ:2", "--N", "3", "tests/data/e1e2.vec"], 0),
    ("congruent_ic", &["congruent", "--ideal", "IC", "--N", "3", "tests/data/e1e2.vec", "tests/data/e2e1.vec"], 0),
    ("congruent_zero", &["congruent", "--ideal", "0", "--N", "3", "tests/data/e1e2.vec", "tests/data/e2e1.vec"], 1),
    ("congruent_bad_ideal", &["congruent", "--ideal", "IQ", "--N", "3", "tests/data/e1e2.vec", "tests/data/e2e1.vec"], 2),
    ("perp_is_fails", &["perp", "--ideal", "IS", "--N", "6", "tests/data/j222_signed.vec"], 1),
    ("perp_is_witness", &["perp", "--ideal", "IS", "--N", "6", "tests/data/nonpositive.vec"], 0),
    ("ideal_contains_yes", &["ideal-contains", "--N", "4", "IS", "IC"], 0),
    ("ideal_contains_no", &["ideal-contains", "--N", "4", "--dmax", "4", "IB", "IS"], 1),
    ("board_validate", &["board", "validate", "tests/data/len5_n3.board"], 0),
    ("board_validate_flavor", &["board", "validate", "tests/data/nonpositive.board", "--flavor", "ideal:IS"], 0),
    ("board_validate_d0", &["board", "validate", "tests/data/len5_n3.board", "--flavor", "d0"], 1),
    ("board_validate_rotation_free", &["board", "validate", "tests/data/split.board", "--flavor", "rotation-free"], 0),
    ("board_validate_assaf", &["board", "validate", "tests/data/nonpositive.board", "--flavor", "assaf:2"], 1),
    ("reduce_cap", &["reduce", "--ideal", "cap(Iassaf:1..2+Ist)", "--N", "3", "tests/data/e1e2.vec"], 0),
    ("board_validate_invalid", &["board", "validate", "tests/data/broken.board"], 1),
    ("board_validate_parse_error", &["board", "validate", "tests/data/unparsable.board"], 2),
    ("board_components", &["board", "components", "tests/data/split.board"], 0),
    ("board_symfunc", &["board", "symfunc", "tests/data/nonpositive.board"], 0),
    ("board_symfunc_fundamental", &["board", "symfunc", "tests/data/len5_n3.board", "--fundamental"], 0),
    ("board_axioms", &["board", "axioms", "tests/data/len5_n3.board"], 1),
    ("board_axioms_fail", &["board", "axioms", "tests/data/nonpositive.board"], 1),
    ("board_build", &["board", "build", "--ideal", "Iplac", "--N", "3", "tests/data/plactic3.words"], 0),
    ("llt_poly", &["llt", "poly", "--k", "3", "--shapes", "2/1;1;2"], 0),
    ("llt_poly_fundamental", &["llt", "poly", "--k", "3", "--shapes", "2/1;1;2", "--fundamental"], 0),
    ("llt_poly_json", &["--format", "json-lines", "llt", "poly", "--k", "3", "--shapes", "2/1;1;2"], 0),
    ("llt_poly_wrong_k", &["llt", "poly", "--k", "2", "--shapes", "2/1;1;2"], 2),
    ("llt_board", &["llt", "board", "--k", "3", "--shapes", "2/1;1;2", "--t", "2"], 0),
    ("llt_sqread", &["llt", "sqread-coeffs", "--k", "3", "--shapes", "3/2;33/11;2/1"], 0),
    ("llt_words", &["llt", "words", "--k", "3", "--shapes", "2/1;1;2"], 0),
    ("stanley", &["stanley", "32154"], 0),
    ("stanley_words", &["stanley", "32154", "--words"], 0),
    ("plactic", &["plactic", "--tableau", "12/3"], 0),
    ("positivity_check_not", &["positivity", "check", "--lambda", "2,2,2", "--N", "6", "--ideal", "IS+Ist"], 1),
    ("positivity_check_yes", &["positivity", "check", "--lambda", "2,2", "--N", "4", "--ideal", "IS+Ist"], 0),
    (
        "positivity_verify_witness",
        &["positivity", "verify", "--lambda", "2,2,2", "--N", "6", "--ideal", "IS+Ist", "--witness", "tests/data/nonpositive.vec"],
        1,
    ),
    (
        "positivity_verify_expansion",
        &["positivity", "verify", "--lambda", "2,2,2", "--N", "6", "--ideal", "IS+Ist", "--expansion", "tests/data/j222_signed.vec"],
        0,
    ),
    ("positivity_search", &["positivity", "search", "--lambda", "2,2", "--N", "4", "--ideal", "IS+Ist"], 0),
    ("selftest", &["selftest"], 0),
    ("conjecture_aba", &["conjecture", "aba", "--k", "2", "--N", "4", "--dmax", "4"], 0),
    ("conjecture_aba_jobs", &["--jobs", "3", "conjecture", "aba", "--k", "2", "--N", "4", "--dmax", "4"], 0),
    ("conjecture_assaf", &["conjecture", "assaf", "--k", "2", "--N", "4", "--dmax", "4"], 0),
    ("conjecture_sqread", &["conjecture", "sqread", "--N", "4", "--dmax", "4"], 0),
];

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_nc")).args(args).current_dir(crate_dir()).output().unwrap();
    let mut text = String::from_utf8(out.stdout).unwrap();
    for line in String::from_utf8(out.stderr).unwrap().lines() {
        text.push_str("stderr: ");
        text.push_str(line);
        text.push('\n');
    }
    (out.status.code().unwrap_or(-1), text)
}

#[test]
fn golden_outputs() {
    let bless = std::env::var_os("NC_BLESS").is_some();
    let mut failures = Vec::new();
    for (name, args, code) in CASES {
        let (got_code, text) = run(args);
        let path = crate_dir().join("tests/golden").join(format!("{name}.out"));
        if bless {
            std::fs::write(&path, &text).unwrap();
        }
        let want = std::fs::read_to_string(&path).unwrap_or_default();
        if got_code != *code {
            failures.push(format!("{name}: exit {got_code}, expected {code}"));
        } else if text != want {
            failures.push(format!("{name}: output differs from {}", path.display()));
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn byte_stable_across_runs() {
    for (_, args, _) in CASES.iter().filter(|c| !c.0.starts_with("selftest")) {
        assert_eq!(run(args), run(args), "{args:?}");
    }
}

#[test]
fn job_count_does_not_change_output() {
    let base = ["conjecture", "assaf", "--k", "3", "--N", "4", "--dmax", "5"];
    let one = run(&[&["--jobs", "1"], &base[..]].concat());
    let many = run(&[&["--jobs", "4"], &base[..]].concat());
    assert_eq!(one, many);
    assert_eq!(one.0, 0);
}

#[test]
fn check_writes_a_witness_that_verifies() {
    let dir = std::env::temp_dir().join(format!("nc-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("w.vec");
    let f = file.to_str().unwrap();
    let common = ["--lambda", "2,2,2", "--N", "6", "--ideal", "IS+Ist"];
    let (code, _) = run(&[&["positivity", "check"], &common[..], &["--out", f]].concat());
    assert_eq!(code, 1);
    let (code, text) = run(&[&["positivity", "verify"], &common[..], &["--witness", f]].concat());
    assert_eq!(code, 1);
    assert!(text.contains("witness: valid"), "{text}");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn every_data_file_is_used() {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data");
    for entry in std::fs::read_dir(data).unwrap() {
        let name = entry.unwrap().file_name().into_string().unwrap();
        let used = CASES.iter().any(|(_, args, _)| args.iter().any(|a| a.ends_with(&name)));
        assert!(used, "{name} has no golden case");
    }
}
