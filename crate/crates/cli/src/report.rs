use frobpair::{CheckResult, EntryDiff};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Human,
    Machine,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportLine {
    pub id: String,
    /// Human-mode description.
    pub label: String,
    pub witness: Option<EntryDiff>,
    /// Whether a failure of this line makes the run fail.
    pub gating: bool,
}

impl ReportLine {
    pub fn new(
        id: impl Into<String>,
        label: impl Into<String>,
        witness: Option<EntryDiff>,
    ) -> Self {
        ReportLine {
            id: id.into(),
            label: label.into(),
            witness,
            gating: true,
        }
    }

    pub fn from_check(prefix: &str, r: &CheckResult) -> Self {
        Self::new(format!("{prefix}{}", r.id), r.id.label(), r.witness.clone())
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    /// `<id> PASS` or `<id> FAIL deg=.. row=.. col=.. lhs=.. rhs=..`.
    pub fn machine(&self) -> String {
        match &self.witness {
            None => format!("{} PASS", self.id),
            Some(w) => format!("{} FAIL {}", self.id, witness_text(w)),
        }
    }
}

pub fn witness_text(w: &EntryDiff) -> String {
    format!(
        "deg={} row={} col={} lhs={} rhs={}",
        w.degree, w.row, w.col, w.lhs, w.rhs
    )
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub lines: Vec<ReportLine>,
    /// Extra human-mode text printed after the check lines.
    pub notes: Vec<String>,
}

impl Report {
    pub fn push(&mut self, line: ReportLine) {
        self.lines.push(line);
    }

    pub fn passed(&self) -> usize {
        self.lines.iter().filter(|l| l.passed()).count()
    }

    pub fn failed(&self) -> usize {
        self.lines.len() - self.passed()
    }

    /// 0 when every gating line passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.lines.iter().any(|l| l.gating && !l.passed()))
    }

    pub fn render(&self, mode: Mode) -> String {
        let mut out = String::new();
        match mode {
            Mode::Machine => {
                for l in &self.lines {
                    out.push_str(&l.machine());
                    out.push('\n');
                }
            }
            Mode::Human => {
                for l in &self.lines {
                    let status = if l.passed() { "PASS" } else { "FAIL" };
                    out.push_str(&format!("{status}  {:<28} {}\n", l.id, l.label));
                    if let Some(w) = &l.witness {
                        out.push_str(&format!("      {}\n", witness_text(w)));
                    }
                }
                for n in &self.notes {
                    out.push_str(n);
                    out.push('\n');
                }
                out.push_str(&format!(
                    "{} checks: {} passed, {} failed\n",
                    self.lines.len(),
                    self.passed(),
                    self.failed()
                ));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use frobpair::FieldSpec;

    fn fail() -> ReportLine {
        let q = FieldSpec::Rationals;
        ReportLine::new(
            "1a-unit-left",
            "μ∘(η⊗X) = X",
            Some(EntryDiff {
                degree: -2,
                row: 0,
                col: 1,
                lhs: q.parse_scalar("-1/2").unwrap(),
                rhs: q.one(),
            }),
        )
    }

    #[test]
    fn machine_lines() {
        assert_eq!(ReportLine::new("3a", "", None).machine(), "3a PASS");
        assert_eq!(
            fail().machine(),
            "1a-unit-left FAIL deg=-2 row=0 col=1 lhs=-1/2 rhs=1"
        );
    }

    #[test]
    fn exit_codes_and_rendering() {
        let mut r = Report::default();
        r.push(ReportLine::new("3a", "φ is X-linear", None));
        assert_eq!(r.exit_code(), 0);
        let mut ungated = fail();
        ungated.gating = false;
        r.push(ungated);
        assert_eq!(r.exit_code(), 0);
        r.push(fail());
        assert_eq!(r.exit_code(), 1);
        let human = r.render(Mode::Human);
        assert!(human.contains("μ∘(η⊗X) = X"));
        assert!(human.ends_with("3 checks: 1 passed, 2 failed\n"));
        assert_eq!(r.render(Mode::Machine).lines().count(), 3);
    }
}
