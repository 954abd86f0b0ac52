//! Byte-exact golden-file regression over the fixture command suite.
//!
//! Regenerate with:
//! `cargo test -p homnambu-cli --test golden -- --ignored bless_goldens`

mod common;

use common::{repo_root, run_cli, GOLDEN_SUITE};

#[test]
fn reports_match_golden_files() {
    let golden_dir = repo_root().join("golden");
    let mut mismatches = Vec::new();
    for case in GOLDEN_SUITE {
        let output = run_cli(case.args);
        let path = golden_dir.join(format!("{}.txt", case.name));
        let expected = std::fs::read(&path)
            .unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
        if output.stdout != expected {
            mismatches.push(case.name);
        }
        assert_eq!(
            output.status.code(),
            Some(case.expect_exit),
            "{}: exit status",
            case.name
        );
    }
    assert!(
        mismatches.is_empty(),
        "reports diverge from goldens: {mismatches:?}"
    );
}

#[test]
fn golden_flag_compares_and_blesses() {
    let dir = std::env::temp_dir().join(format!("homnambu-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let golden = dir.join("verify_leib2.txt");
    let golden_str = golden.to_str().unwrap();

    let blessed = run_cli(&[
        "verify",
        "fixtures/leib2.alg",
        "--golden",
        golden_str,
        "--bless",
    ]);
    assert_eq!(blessed.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&blessed.stdout).ends_with("golden: blessed\n"));

    let matched = run_cli(&["verify", "fixtures/leib2.alg", "--golden", golden_str]);
    assert_eq!(matched.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&matched.stdout).ends_with("golden: match\n"));

    std::fs::write(&golden, b"tampered\n").unwrap();
    let mismatched = run_cli(&["verify", "fixtures/leib2.alg", "--golden", golden_str]);
    assert_eq!(mismatched.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&mismatched.stdout).ends_with("golden: mismatch\n"));

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn usage_errors_exit_two() {
    let missing = run_cli(&["verify", "fixtures/does_not_exist.alg"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(missing.stdout.is_empty());

    let bad_flag = run_cli(&["verify"]);
    assert_eq!(bad_flag.status.code(), Some(2));

    let dir = std::env::temp_dir().join(format!("homnambu-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.alg");
    std::fs::write(
        &bad,
        "algebra bad\ndim 2\narity 2\ntwist 1 id\nconstants\n2 2 -> 1 : 1/0\nend\n",
    )
    .unwrap();
    let malformed = run_cli(&["verify", bad.to_str().unwrap()]);
    assert_eq!(malformed.status.code(), Some(2));
    assert!(malformed.stdout.is_empty());
    assert!(String::from_utf8_lossy(&malformed.stderr).contains("line 6"));
    std::fs::remove_dir_all(&dir).ok();
}

/// Writes the current reports into golden/. Run explicitly after a
/// reviewed change to the report format.
#[test]
#[ignore]
fn bless_goldens() {
    let golden_dir = repo_root().join("golden");
    std::fs::create_dir_all(&golden_dir).unwrap();
    for case in GOLDEN_SUITE {
        let output = run_cli(case.args);
        assert_eq!(
            output.status.code(),
            Some(case.expect_exit),
            "{}: exit status while blessing\nstderr: {}",
            case.name,
            String::from_utf8_lossy(&output.stderr)
        );
        std::fs::write(
            golden_dir.join(format!("{}.txt", case.name)),
            &output.stdout,
        )
        .unwrap();
    }
}
