//! Line-oriented report builder. Reports are the tool's only stdout and
//! must be byte-identical across runs on identical inputs: no
//! timestamps, no machine information, deterministic ordering
//! throughout.

use homnambu::algebra::IdentityReport;
use homnambu::linalg::Matrix;
use homnambu::rat::{fmt_rat, Rat};

pub struct Report {
    lines: Vec<String>,
    failed_verdicts: usize,
    errored: bool,
}

impl Report {
    pub fn new(command_echo: &str) -> Report {
        Report {
            lines: vec![format!("command: {command_echo}")],
            failed_verdicts: 0,
            errored: false,
        }
    }

    pub fn push(&mut self, key: &str, value: impl std::fmt::Display) {
        self.lines.push(format!("{key}: {value}"));
    }

    pub fn push_raw(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    /// A named verdict with its witness block; failing verdicts drive
    /// the exit status.
    pub fn verdict(&mut self, name: &str, report: &IdentityReport) {
        if report.holds() {
            self.lines.push(format!(
                "verdict {name}: holds ({} instances)",
                report.instances
            ));
            return;
        }
        self.failed_verdicts += 1;
        self.lines.push(format!(
            "verdict {name}: fails ({} of {} instances)",
            report.failures, report.instances
        ));
        self.lines.push(format!(
            "witnesses {name}: {} of {}",
            report.witnesses.len(),
            report.failures
        ));
        for w in &report.witnesses {
            self.lines.push(format!(
                "witness {}: args {} lhs {} rhs {}",
                w.label,
                fmt_args(&w.args),
                fmt_vec(&w.left),
                fmt_vec(&w.right)
            ));
        }
    }

    pub fn verdict_bool(&mut self, name: &str, holds: bool) {
        if holds {
            self.lines.push(format!("verdict {name}: holds"));
        } else {
            self.failed_verdicts += 1;
            self.lines.push(format!("verdict {name}: fails"));
        }
    }

    /// A failed precondition; reported in-band and counted as a failure.
    pub fn error(&mut self, message: impl std::fmt::Display) {
        self.errored = true;
        self.lines.push(format!("error: {message}"));
    }

    pub fn matrix_block(&mut self, title: &str, matrix: &Matrix) {
        self.lines.push(format!("{title}:"));
        for r in 0..matrix.rows() {
            let row: Vec<String> = (0..matrix.cols())
                .map(|c| fmt_rat(matrix.at(r, c)))
                .collect();
            self.lines.push(row.join(" "));
        }
    }

    /// Embeds a serialized document verbatim under a `title:` line.
    pub fn document_block(&mut self, title: &str, text: &str) {
        self.lines.push(format!("{title}:"));
        for line in text.lines() {
            self.lines.push(line.to_string());
        }
    }

    pub fn exit_code(&self) -> u8 {
        if self.failed_verdicts > 0 || self.errored {
            1
        } else {
            0
        }
    }

    /// Full report text including the exit line.
    pub fn render(&self) -> String {
        let mut out = self.lines.join("\n");
        out.push_str(&format!("\nexit: {}\n", self.exit_code()));
        out
    }
}

pub fn fmt_vec(values: &[Rat]) -> String {
    let inner: Vec<String> = values.iter().map(fmt_rat).collect();
    format!("[{}]", inner.join(", "))
}

/// Witness arguments print 1-based, matching the file formats.
pub fn fmt_args(args: &[usize]) -> String {
    let inner: Vec<String> = args.iter().map(|a| (a + 1).to_string()).collect();
    format!("[{}]", inner.join(", "))
}
