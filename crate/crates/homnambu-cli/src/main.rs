//! Command-line front end: each subcommand loads text documents, runs
//! the corresponding kernel, and prints one deterministic report.
//!
//! Exit status: 0 when every verdict in the report holds, 1 when some
//! verdict fails (witnesses are included in the report), 2 on usage,
//! file, or parse errors (reported on stderr).

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use homnambu::algebra::{
    verify_hom_lie_capped, verify_hom_nambu_capped, verify_hom_nambu_mult_form,
    verify_leibniz_capped, verify_morphism_capped, verify_multiplicative_capped, HomNambuAlgebra,
};
use homnambu::construct::{
    compose_twist, tensor_hom_leibniz, tensor_leibniz, tensor_power_nary, twist_by_endomorphism,
};
use homnambu::derivation::{
    assemble_der_algebra, check_inn_ideal, derivation_space, inner_space, omega_derivation_space,
    GradedEntry,
};
use homnambu::error::Error;
use homnambu::format::{
    content_digest, parse_algebra, parse_cochain, parse_map, parse_matrix, parse_representation,
    serialize_algebra, AlgebraDocument,
};
use homnambu::linalg::Matrix;
use homnambu::rep::{
    cochain_spaces, cocycle_residual_capped, semidirect_algebra, split_check,
    verify_representation_capped,
};

use report::Report;

#[derive(Parser)]
#[command(
    name = "homnambu",
    version,
    about = "Exact workbench for n-ary Hom-Nambu algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Maximum witnesses recorded per failing verdict.
    #[arg(long, global = true, default_value_t = 10)]
    witness_cap: usize,

    /// Golden file to compare the report against (bytes, excluding the
    /// golden status line itself).
    #[arg(long, global = true)]
    golden: Option<PathBuf>,

    /// Rewrite the golden file with the current report instead of
    /// comparing.
    #[arg(long, global = true, requires = "golden")]
    bless: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check the defining identities of an algebra document.
    Verify {
        algebra: PathBuf,
        /// Also check antisymmetry and the twisted Jacobi identity
        /// (binary algebras only).
        #[arg(long)]
        hom_lie: bool,
    },
    /// Check that a matrix is a morphism between two algebras.
    Morphism {
        #[arg(long)]
        map: PathBuf,
        source: PathBuf,
        target: PathBuf,
    },
    /// Twist an algebra by an endomorphism (identity-twisted input) or
    /// compose a multiplicative algebra with a morphism.
    Twist {
        #[arg(long)]
        by: PathBuf,
        algebra: PathBuf,
        /// Write the constructed algebra document here as well.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the derivation space at one degree, optionally the whole
    /// graded algebra up to --kmax.
    Derive {
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long)]
        kmax: Option<usize>,
        algebra: PathBuf,
    },
    /// Compute inner derivations at one degree and check the ideal
    /// property up to --kmax.
    Inner {
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long, default_value_t = homnambu::derivation::DEFAULT_K_MAX)]
        kmax: usize,
        algebra: PathBuf,
    },
    /// Compute the ω-derivation space of a multilinear map on a bare
    /// space.
    OmegaDerive {
        #[arg(long)]
        map: PathBuf,
        /// Twist matrix document, or `id`.
        #[arg(long, default_value = "id")]
        alpha: String,
        #[arg(long, default_value_t = 0)]
        k: usize,
    },
    /// Build the tensor-power algebras.
    Tensor {
        #[arg(long, value_enum, default_value_t = TensorVariant::Plain)]
        variant: TensorVariant,
        /// Tensor power for --variant power (arity must be k·n+1).
        #[arg(long)]
        k: Option<usize>,
        algebra: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a representation document against an algebra.
    RepVerify {
        #[arg(long)]
        rep: PathBuf,
        algebra: PathBuf,
    },
    /// Compute cocycle and coboundary spaces and the extension count.
    Cohomology {
        #[arg(long)]
        rep: PathBuf,
        algebra: PathBuf,
    },
    /// Solve for a splitting map of a cocycle.
    Split {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        cochain: PathBuf,
        algebra: PathBuf,
    },
    /// Build the semidirect algebra of a representation and a cochain
    /// and compare its verdict with the cocycle condition.
    Extension {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        cochain: PathBuf,
        algebra: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TensorVariant {
    /// Untwisted tensor bracket with identity twist.
    Plain,
    /// α on spectators, twist α^{⊗n}.
    Hom,
    /// (n+1)-ary bracket on the k-th tensor power.
    Power,
}

/// Usage-class failures: bad files, bad shapes, bad flags. Exit 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    // The golden-comparison flags must not perturb the compared bytes,
    // so they are dropped from the command echo.
    let mut echo: Vec<String> = Vec::new();
    let mut args = std::env::args().skip(1);
    while let Some(arg) = args.next() {
        if arg == "--bless" {
            continue;
        }
        if arg == "--golden" {
            args.next();
            continue;
        }
        echo.push(arg);
    }
    let mut report = Report::new(&echo.join(" "));
    match run(&cli, &mut report) {
        Ok(()) => {}
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    }
    let body = report.render();
    let mut code = report.exit_code();
    let mut golden_line = String::new();
    if let Some(path) = &cli.golden {
        if cli.bless {
            if let Err(e) = std::fs::write(path, &body) {
                eprintln!("error: cannot write golden file: {e}");
                return ExitCode::from(2);
            }
            golden_line = "golden: blessed\n".to_string();
        } else {
            match std::fs::read(path) {
                Ok(expected) if expected == body.as_bytes() => {
                    golden_line = "golden: match\n".to_string();
                }
                Ok(_) => {
                    golden_line = "golden: mismatch\n".to_string();
                    code = code.max(1);
                }
                Err(e) => {
                    eprintln!("error: cannot read golden file: {e}");
                    return ExitCode::from(2);
                }
            }
        }
    }
    print!("{body}{golden_line}");
    ExitCode::from(code)
}

fn read_to_string(path: &Path) -> Result<String, UsageError> {
    std::fs::read_to_string(path)
        .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))
}

fn load_algebra(
    path: &Path,
    role: &str,
    report: &mut Report,
) -> Result<AlgebraDocument, UsageError> {
    let doc = parse_algebra(&read_to_string(path)?)
        .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    report.push(
        &format!("digest {role}"),
        content_digest(&serialize_algebra(&doc)),
    );
    Ok(doc)
}

/// Precondition failures are verdict-class outcomes: reported in-band,
/// exit 1. Everything else is usage-class.
fn domain(report: &mut Report, error: Error) -> Result<(), UsageError> {
    match error {
        Error::NotAMorphism
        | Error::NotLeibniz
        | Error::NotMultiplicative
        | Error::TwistCommutationFailure
        | Error::NotFixedPoint
        | Error::NotASubspace
        | Error::NotARepresentation
        | Error::NotACocycle => {
            report.error(error);
            Ok(())
        }
        other => Err(UsageError(other.to_string())),
    }
}

fn run(cli: &Cli, report: &mut Report) -> Result<(), UsageError> {
    let cap = cli.witness_cap.max(1);
    match &cli.command {
        Command::Verify { algebra, hom_lie } => {
            let doc = load_algebra(algebra, "algebra", report)?;
            let alg = &doc.algebra;
            report.push("name", &doc.name);
            report.push("dim", alg.dim());
            report.push("arity", alg.arity());
            report.push(
                "multiplicative",
                if alg.is_multiplicative() { "yes" } else { "no" },
            );
            report.verdict("hom_nambu", &verify_hom_nambu_capped(alg, cap));
            if alg.twists().all_identity() {
                report.verdict("leibniz", &verify_leibniz_capped(alg.bracket(), cap));
            }
            if alg.is_multiplicative() {
                let mult_form = verify_hom_nambu_mult_form(alg, cap)
                    .expect("multiplicative flag was just checked");
                report.verdict("mult_form", &mult_form);
            }
            if *hom_lie {
                match verify_hom_lie_capped(alg, cap) {
                    Ok(r) => report.verdict("hom_lie", &r),
                    Err(e) => return Err(UsageError(e.to_string())),
                }
            }
            Ok(())
        }

        Command::Morphism {
            map,
            source,
            target,
        } => {
            let matrix = parse_matrix(&read_to_string(map)?)
                .map_err(|e| UsageError(format!("{}: {e}", map.display())))?;
            report.push(
                "digest map",
                content_digest(&homnambu::format::serialize_matrix(&matrix)),
            );
            let src = load_algebra(source, "source", report)?;
            let tgt = load_algebra(target, "target", report)?;
            match verify_morphism_capped(&matrix.matrix, &src.algebra, &tgt.algebra, cap) {
                Ok(r) => report.verdict("morphism", &r),
                Err(e) => return Err(UsageError(e.to_string())),
            }
            Ok(())
        }

        Command::Twist { by, algebra, out } => {
            let matrix = parse_matrix(&read_to_string(by)?)
                .map_err(|e| UsageError(format!("{}: {e}", by.display())))?;
            report.push(
                "digest map",
                content_digest(&homnambu::format::serialize_matrix(&matrix)),
            );
            let doc = load_algebra(algebra, "algebra", report)?;
            let (route, result) = if doc.algebra.twists().all_identity() {
                (
                    "endomorphism",
                    twist_by_endomorphism(&doc.algebra, &matrix.matrix),
                )
            } else {
                ("compose", compose_twist(&doc.algebra, &matrix.matrix))
            };
            report.push("route", route);
            let twisted = match result {
                Ok(a) => a,
                Err(e) => return domain(report, e),
            };
            report.verdict("hom_nambu", &verify_hom_nambu_capped(&twisted, cap));
            report.verdict(
                "multiplicative",
                &verify_multiplicative_capped(&twisted, cap),
            );
            emit_algebra(
                report,
                &format!("{}_twisted", doc.name),
                twisted,
                out.as_deref(),
            )
        }

        Command::Derive { k, kmax, algebra } => {
            let doc = load_algebra(algebra, "algebra", report)?;
            let basis = match derivation_space(&doc.algebra, *k) {
                Ok(b) => b,
                Err(e) => return domain(report, e),
            };
            report.push("degree", k);
            report.push("dimension", basis.dim());
            for (i, matrix) in basis.basis.iter().enumerate() {
                report.matrix_block(&format!("basis {}", i + 1), matrix);
            }
            if let Some(kmax) = kmax {
                let graded = match assemble_der_algebra(&doc.algebra, *kmax) {
                    Ok(g) => g,
                    Err(e) => return domain(report, e),
                };
                report.push("graded kmax", kmax);
                for basis in &graded.degrees {
                    report.push(&format!("graded dim degree {}", basis.degree), basis.dim());
                }
                let mut in_range = 0usize;
                let mut out_of_truncation = 0usize;
                let mut outside = 0usize;
                for entry in graded
                    .bracket_table
                    .values()
                    .chain(graded.twist_table.iter())
                {
                    match entry {
                        GradedEntry::InRange(_) => in_range += 1,
                        GradedEntry::OutOfTruncation => out_of_truncation += 1,
                        GradedEntry::NotInSpan => outside += 1,
                    }
                }
                report.push("graded entries in range", in_range);
                report.push("graded entries out of truncation", out_of_truncation);
                report.verdict_bool("graded_closure", outside == 0);
                report.verdict("graded_hom_lie", &graded.hom_lie);
            }
            Ok(())
        }

        Command::Inner { k, kmax, algebra } => {
            let doc = load_algebra(algebra, "algebra", report)?;
            let inner = match inner_space(&doc.algebra, *k) {
                Ok(b) => b,
                Err(e) => return domain(report, e),
            };
            report.push("degree", k);
            report.push("generators", inner.generators.len());
            report.push("dimension", inner.dim());
            for (i, matrix) in inner.span.iter().enumerate() {
                report.matrix_block(&format!("basis {}", i + 1), matrix);
            }
            let der_above = match derivation_space(&doc.algebra, *k + 1) {
                Ok(b) => b,
                Err(e) => return domain(report, e),
            };
            let all_inside = inner.generators.iter().all(|(_, m)| der_above.contains(m));
            report.verdict_bool("generators_in_der", all_inside);
            let ideal = match check_inn_ideal(&doc.algebra, *kmax) {
                Ok(r) => r,
                Err(e) => return domain(report, e),
            };
            report.push("ideal kmax", kmax);
            report.push("ideal checked", ideal.checked);
            report.push("ideal out of truncation", ideal.out_of_truncation);
            for failure in &ideal.failures {
                report.push_raw(format!("ideal failure: {failure}"));
            }
            report.verdict_bool("inn_ideal", ideal.holds());
            Ok(())
        }

        Command::OmegaDerive { map, alpha, k } => {
            let map_doc = parse_map(&read_to_string(map)?)
                .map_err(|e| UsageError(format!("{}: {e}", map.display())))?;
            report.push(
                "digest map",
                content_digest(&homnambu::format::serialize_map(&map_doc)),
            );
            let dim = map_doc.map.target_dim();
            let alpha_matrix = if alpha == "id" {
                Matrix::identity(dim)
            } else {
                let doc = parse_matrix(&read_to_string(Path::new(alpha))?)
                    .map_err(|e| UsageError(format!("{alpha}: {e}")))?;
                report.push(
                    "digest alpha",
                    content_digest(&homnambu::format::serialize_matrix(&doc)),
                );
                doc.matrix
            };
            let basis = match omega_derivation_space(dim, &map_doc.map, &alpha_matrix, *k) {
                Ok(b) => b,
                Err(e) => return domain(report, e),
            };
            report.push("space dim", dim);
            report.push("degree", k);
            report.push("dimension", basis.dim());
            for (i, matrix) in basis.basis.iter().enumerate() {
                report.matrix_block(&format!("basis {}", i + 1), matrix);
            }
            Ok(())
        }

        Command::Tensor {
            variant,
            k,
            algebra,
            out,
        } => {
            let doc = load_algebra(algebra, "algebra", report)?;
            let alg = &doc.algebra;
            let (label, suffix, result) = match variant {
                TensorVariant::Plain => ("plain", "tensor", tensor_leibniz(alg)),
                TensorVariant::Hom => ("hom", "tensor_hom", tensor_hom_leibniz(alg)),
                TensorVariant::Power => {
                    let k = k.ok_or_else(|| UsageError("--variant power needs --k".into()))?;
                    if k == 0 || (alg.arity() - 1) % k != 0 {
                        return Err(UsageError(format!(
                            "arity {} is not k·n+1 for k = {k}",
                            alg.arity()
                        )));
                    }
                    let n = (alg.arity() - 1) / k;
                    ("power", "tensor_power", tensor_power_nary(alg, k, n))
                }
            };
            report.push("variant", label);
            let built = match result {
                Ok(a) => a,
                Err(e) => return domain(report, e),
            };
            report.push("output dim", built.dim());
            report.push("output arity", built.arity());
            report.verdict("hom_nambu", &verify_hom_nambu_capped(&built, cap));
            if matches!(variant, TensorVariant::Hom) {
                report.verdict("multiplicative", &verify_multiplicative_capped(&built, cap));
            }
            emit_algebra(
                report,
                &format!("{}_{suffix}", doc.name),
                built,
                out.as_deref(),
            )
        }

        Command::RepVerify { rep, algebra } => {
            let rep_doc = parse_representation(&read_to_string(rep)?)
                .map_err(|e| UsageError(format!("{}: {e}", rep.display())))?;
            report.push(
                "digest rep",
                content_digest(&homnambu::format::serialize_representation(&rep_doc)),
            );
            let doc = load_algebra(algebra, "algebra", report)?;
            report.push("module dim", rep_doc.representation.module_dim());
            match verify_representation_capped(&doc.algebra, &rep_doc.representation, cap) {
                Ok(r) => report.verdict("representation", &r),
                Err(e) => return Err(UsageError(e.to_string())),
            }
            Ok(())
        }

        Command::Cohomology { rep, algebra } => {
            let rep_doc = parse_representation(&read_to_string(rep)?)
                .map_err(|e| UsageError(format!("{}: {e}", rep.display())))?;
            report.push(
                "digest rep",
                content_digest(&homnambu::format::serialize_representation(&rep_doc)),
            );
            let doc = load_algebra(algebra, "algebra", report)?;
            let repn = &rep_doc.representation;
            match cochain_spaces(&doc.algebra, repn) {
                Ok(spaces) => {
                    report.push("dim cocycles", spaces.z_basis.len());
                    report.push("dim coboundaries", spaces.b_basis.len());
                    report.verdict_bool("coboundaries_in_cocycles", true);
                    report.push("ext dimension", spaces.ext_dim);
                }
                Err(Error::NotASubspace) => report.verdict_bool("coboundaries_in_cocycles", false),
                Err(e) => return domain(report, e),
            }
            Ok(())
        }

        Command::Split {
            rep,
            cochain,
            algebra,
        } => {
            let rep_doc = parse_representation(&read_to_string(rep)?)
                .map_err(|e| UsageError(format!("{}: {e}", rep.display())))?;
            report.push(
                "digest rep",
                content_digest(&homnambu::format::serialize_representation(&rep_doc)),
            );
            let cochain_doc = parse_cochain(&read_to_string(cochain)?)
                .map_err(|e| UsageError(format!("{}: {e}", cochain.display())))?;
            report.push(
                "digest cochain",
                content_digest(&homnambu::format::serialize_cochain(&cochain_doc)),
            );
            let doc = load_algebra(algebra, "algebra", report)?;
            let repn = &rep_doc.representation;
            let f = &cochain_doc.cochain;
            match cocycle_residual_capped(&doc.algebra, repn, f, cap) {
                Ok(r) => report.verdict("cocycle", &r),
                Err(e) => return domain(report, e),
            }
            match split_check(&doc.algebra, repn, f) {
                Ok(Some(h)) => {
                    report.push("split", "yes");
                    report.matrix_block("h", &h);
                    match homnambu::rep::coboundary(&doc.algebra, repn, &h) {
                        Ok(back) => report.verdict_bool("round_trip", &back == f),
                        Err(e) => return domain(report, e),
                    }
                }
                Ok(None) => report.push("split", "no"),
                Err(e) => return domain(report, e),
            }
            Ok(())
        }

        Command::Extension {
            rep,
            cochain,
            algebra,
            out,
        } => {
            let rep_doc = parse_representation(&read_to_string(rep)?)
                .map_err(|e| UsageError(format!("{}: {e}", rep.display())))?;
            report.push(
                "digest rep",
                content_digest(&homnambu::format::serialize_representation(&rep_doc)),
            );
            let cochain_doc = parse_cochain(&read_to_string(cochain)?)
                .map_err(|e| UsageError(format!("{}: {e}", cochain.display())))?;
            report.push(
                "digest cochain",
                content_digest(&homnambu::format::serialize_cochain(&cochain_doc)),
            );
            let doc = load_algebra(algebra, "algebra", report)?;
            let repn = &rep_doc.representation;
            let f = &cochain_doc.cochain;
            let cocycle = match cocycle_residual_capped(&doc.algebra, repn, f, cap) {
                Ok(r) => r,
                Err(e) => return domain(report, e),
            };
            let built = match semidirect_algebra(&doc.algebra, repn, f) {
                Ok(a) => a,
                Err(e) => return domain(report, e),
            };
            report.push("output dim", built.dim());
            let verdict = verify_hom_nambu_capped(&built, cap);
            report.verdict("cocycle", &cocycle);
            report.verdict("hom_nambu", &verdict);
            report.verdict_bool("equivalence", cocycle.holds() == verdict.holds());
            emit_algebra(
                report,
                &format!("{}_extension", doc.name),
                built,
                out.as_deref(),
            )
        }
    }
}

fn emit_algebra(
    report: &mut Report,
    name: &str,
    algebra: HomNambuAlgebra,
    out: Option<&Path>,
) -> Result<(), UsageError> {
    let doc = AlgebraDocument {
        name: name.to_string(),
        algebra,
    };
    let text = serialize_algebra(&doc);
    report.push("output digest", content_digest(&text));
    report.document_block("output", &text);
    if let Some(path) = out {
        std::fs::write(path, &text)
            .map_err(|e| UsageError(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}
