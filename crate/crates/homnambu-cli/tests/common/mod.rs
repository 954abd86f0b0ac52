//! Shared harness for the CLI test suites: locating the repository root,
//! spawning the binary, and the fixture command table whose reports are
//! pinned as golden files.

use std::path::PathBuf;
use std::process::{Command, Output};

pub fn repo_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .parent()
        .and_then(|p| p.parent())
        .expect("workspace root")
        .to_path_buf()
}

/// Runs the CLI from the repository root so fixture paths in command
/// echoes stay stable.
pub fn run_cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homnambu"))
        .args(args)
        .current_dir(repo_root())
        .output()
        .expect("binary runs")
}

pub struct GoldenCase {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub expect_exit: i32,
}

/// The full fixture suite: one case per subcommand behavior worth
/// pinning. Golden files live under `golden/<name>.txt`.
pub const GOLDEN_SUITE: &[GoldenCase] = &[
    GoldenCase {
        name: "verify_leib2",
        args: &["verify", "fixtures/leib2.alg"],
        expect_exit: 0,
    },
    GoldenCase {
        name: "verify_nambu4",
        args: &["verify", "fixtures/nambu4.alg"],
        expect_exit: 0,
    },
    GoldenCase {
        name: "verify_leib2_twist",
        args: &["verify", "fixtures/leib2_twist.alg"],
        expect_exit: 0,
    },
    GoldenCase {
        name: "verify_abelian_2_2_hom_lie",
        args: &["verify", "--hom-lie", "fixtures/abelian_2_2.alg"],
        expect_exit: 0,
    },
    GoldenCase {
        name: "verify_leib2_corrupt",
        args: &["verify", "fixtures/leib2_corrupt.alg"],
        expect_exit: 1,
    },
    GoldenCase {
        name: "morphism_rho42",
        args: &[
            "morphism",
            "--map",
            "fixtures/rho42.mat",
            "fixtures/leib2.alg",
            "fixtures/leib2.alg",
        ],
        expect_exit: 0,
    },
    GoldenCase {
        name: "morphism_diag12",
        args: &[
            "morphism",
            "--map",
            "fixtures/diag12.mat",
            "fixtures/leib2.alg",
            "fixtures/leib2.alg",
        ],
        expect_exit: 1,
    },
    GoldenCase {
        name: "twist_leib2_by_rho42",
        args: &["twist", "--by", "fixtures/rho42.mat", "fixtures/leib2.alg"],
        expect_exit: 0,
    },
    GoldenCase {
        name: "twist_leib2_twist_by_rho42",
        args: &[
            "twist",
            "--by",
            "fixtures/rho42.mat",
            "fixtures/leib2_twist.alg",
        ],
        expect_exit: 0,
    },
    GoldenCase {
        name: "derive_leib2_k0",
        args: &["derive", "--k", "0", "fixtures/leib2.alg"],
        expect_exit: 0,
    },
    GoldenCase {
        name: "derive_leib2_twist_graded",
        args: &[
            "derive",
            "--k",
            "0",
            "--kmax",
            "3",
            "fixtures/leib2_twist.alg",
        ],
        expect_exit: 0,
    },
    GoldenCase {
        name: "derive_nambu4_graded",
        args: &["derive", "--k", "0", "--kmax", "2", "fixtures/nambu4.alg"],
        expect_exit: 0,
    },
    GoldenCase {
        name: "inner_leib2_k0",
        args: &["inner", "--k", "0", "fixtures/leib2.alg"],
        expect_exit: 0,
    },
    GoldenCase {
        name: "inner_leib2_twist_k0",
        args: &["inner", "--k", "0", "fixtures/leib2_twist.alg"],
        expect_exit: 0,
    },
    GoldenCase {
        name: "inner_nambu4_k0",
        args: &["inner", "--k", "0", "--kmax", "2", "fixtures/nambu4.alg"],
        expect_exit: 0,
    },
    GoldenCase {
        name: "omega_derive_leib2_bracket",
        args: &[
            "omega-derive",
            "--map",
            "fixtures/leib2_bracket.map",
            "--alpha",
            "id",
            "--k",
            "0",
        ],
        expect_exit: 0,
    },
    GoldenCase {
        name: "omega_derive_leib2_bracket_twisted",
        args: &[
            "omega-derive",
            "--map",
            "fixtures/leib2_bracket.map",
            "--alpha",
            "fixtures/rho42.mat",
            "--k",
            "1",
        ],
        expect_exit: 0,
    },
    GoldenCase {
        name: "tensor_plain_nambu4",
        args: &["tensor", "--variant", "plain", "fixtures/nambu4.alg"],
        expect_exit: 0,
    },
    GoldenCase {
        name: "tensor_hom_nambu4",
        args: &["tensor", "--variant", "hom", "fixtures/nambu4.alg"],
        expect_exit: 0,
    },
    GoldenCase {
        name: "tensor_power_nambu4",
        args: &[
            "tensor",
            "--variant",
            "power",
            "--k",
            "2",
            "fixtures/nambu4.alg",
        ],
        expect_exit: 0,
    },
    GoldenCase {
        name: "tensor_plain_leib2_twist",
        args: &["tensor", "--variant", "plain", "fixtures/leib2_twist.alg"],
        expect_exit: 0,
    },
    GoldenCase {
        name: "rep_verify_trivial_leib2",
        args: &[
            "rep-verify",
            "--rep",
            "fixtures/trivial1_leib2.rep",
            "fixtures/leib2.alg",
        ],
        expect_exit: 0,
    },
    GoldenCase {
        name: "rep_verify_functional_leib2",
        args: &[
            "rep-verify",
            "--rep",
            "fixtures/functional_leib2.rep",
            "fixtures/leib2.alg",
        ],
        expect_exit: 0,
    },
    GoldenCase {
        name: "rep_verify_trivial_nambu4",
        args: &[
            "rep-verify",
            "--rep",
            "fixtures/trivial1_nambu4.rep",
            "fixtures/nambu4.alg",
        ],
        expect_exit: 0,
    },
    GoldenCase {
        name: "cohomology_leib2_trivial",
        args: &[
            "cohomology",
            "--rep",
            "fixtures/trivial1_leib2.rep",
            "fixtures/leib2.alg",
        ],
        expect_exit: 0,
    },
    GoldenCase {
        name: "cohomology_nambu4_trivial",
        args: &[
            "cohomology",
            "--rep",
            "fixtures/trivial1_nambu4.rep",
            "fixtures/nambu4.alg",
        ],
        expect_exit: 0,
    },
    GoldenCase {
        name: "cohomology_abelian12_trivial",
        args: &[
            "cohomology",
            "--rep",
            "fixtures/trivial1_abelian12.rep",
            "fixtures/abelian_1_2.alg",
        ],
        expect_exit: 0,
    },
    GoldenCase {
        name: "split_coboundary_leib2",
        args: &[
            "split",
            "--rep",
            "fixtures/trivial1_leib2.rep",
            "--cochain",
            "fixtures/f_coboundary_leib2.coch",
            "fixtures/leib2.alg",
        ],
        expect_exit: 0,
    },
    GoldenCase {
        name: "split_outside_b_leib2",
        args: &[
            "split",
            "--rep",
            "fixtures/trivial1_leib2.rep",
            "--cochain",
            "fixtures/f_zb_leib2.coch",
            "fixtures/leib2.alg",
        ],
        expect_exit: 0,
    },
    GoldenCase {
        name: "extension_cocycle_leib2",
        args: &[
            "extension",
            "--rep",
            "fixtures/trivial1_leib2.rep",
            "--cochain",
            "fixtures/f_zb_leib2.coch",
            "fixtures/leib2.alg",
        ],
        expect_exit: 0,
    },
    GoldenCase {
        name: "extension_noncocycle_leib2",
        args: &[
            "extension",
            "--rep",
            "fixtures/trivial1_leib2.rep",
            "--cochain",
            "fixtures/f_noncocycle_leib2.coch",
            "fixtures/leib2.alg",
        ],
        expect_exit: 1,
    },
];
