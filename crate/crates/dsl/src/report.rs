use std::fmt::Write as _;

use modlog_core::Twist;
use serde::{Serialize, Serializer};

use crate::diagnostic::Diagnostic;

/// Process exit status of the command-line driver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExitStatus {
    /// Ran, and every check passed or the command only computes a value.
    Ok,
    /// Ran, and a queried verdict is false.
    False,
    /// Malformed model text, unknown command or bad argument.
    Input,
    UnknownName,
    DimensionMismatch,
    InvalidBlowup,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        match self {
            ExitStatus::Ok => 0,
            ExitStatus::False => 1,
            ExitStatus::Input => 2,
            ExitStatus::UnknownName => 3,
            ExitStatus::DimensionMismatch => 4,
            ExitStatus::InvalidBlowup => 5,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Verdict {
    Bool(bool),
    Label(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistValue(pub Twist<u64>);

impl Serialize for TwistValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match &self.0 {
            Twist::Finite(n) => s.serialize_u64(*n),
            Twist::Infeasible => s.serialize_str("infeasible"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Memberships {
    pub mcor: bool,
    pub colim_mcor: bool,
    pub lcor: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChartReport {
    /// The coordinate cutting out the exceptional divisor in this chart.
    pub exceptional: String,
    pub map: Vec<String>,
    pub divisor: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Echo {
    pub name: String,
    pub text: String,
}

/// The outcome of one command. Field order is the machine output order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub args: Vec<String>,
    pub inputs: Vec<Echo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimal_twist: Option<TwistValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub memberships: Option<Memberships>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub charts: Option<Vec<ChartReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub diagnostics: Vec<Diagnostic>,
    #[serde(skip)]
    pub answered_false: bool,
}

impl Report {
    pub fn new(command: &str, args: Vec<String>) -> Self {
        Report {
            command: command.to_string(),
            args,
            inputs: Vec::new(),
            verdict: None,
            minimal_twist: None,
            memberships: None,
            charts: None,
            result: None,
            notes: Vec::new(),
            diagnostics: Vec::new(),
            answered_false: false,
        }
    }

    pub fn status(&self) -> ExitStatus {
        if self.answered_false {
            ExitStatus::False
        } else {
            ExitStatus::Ok
        }
    }

    /// One JSON object on one line.
    pub fn to_machine(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.command, self.args.join(" "));
        for e in &self.inputs {
            let _ = writeln!(out, "  input {}:", e.name);
            for line in e.text.lines() {
                let _ = writeln!(out, "    {line}");
            }
        }
        match &self.verdict {
            Some(Verdict::Bool(b)) => {
                let _ = writeln!(out, "  verdict: {b}");
            }
            Some(Verdict::Label(l)) => {
                let _ = writeln!(out, "  verdict: {l}");
            }
            None => {}
        }
        if let Some(m) = &self.memberships {
            let _ = writeln!(
                out,
                "  memberships: mcor={} colim_mcor={} lcor={}",
                m.mcor, m.colim_mcor, m.lcor
            );
        }
        if let Some(t) = &self.minimal_twist {
            let _ = writeln!(out, "  minimal_twist: {}", t.0);
        }
        for c in self.charts.iter().flatten() {
            let _ = writeln!(
                out,
                "  chart {}: {{ {} }} total transform {}",
                c.exceptional,
                c.map.join("; "),
                c.divisor
            );
        }
        if let Some(r) = &self.result {
            let _ = writeln!(out, "  result: {r}");
        }
        for n in &self.notes {
            let _ = writeln!(out, "  note: {n}");
        }
        for d in &self.diagnostics {
            let _ = writeln!(out, "  {d}");
        }
        out
    }
}
