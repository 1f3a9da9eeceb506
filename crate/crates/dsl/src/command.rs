//! Commands over a parsed model.

use modlog_core::qdivisor::{cube, cube_projection, CUBE_COORD};
use modlog_core::{pair::twist, Error as CoreError, Pair};
use thiserror::Error;

use crate::diagnostic::{Code, Diagnostic};
use crate::model::{Decl, Kind, Model};
use crate::printer::{assignments, pair_body, print_decl};
use crate::report::{ChartReport, Echo, ExitStatus, Memberships, Report, TwistValue, Verdict};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    CheckAdmissible(String),
    MinimalTwist(String),
    HomLog(String),
    CheckMinimal(String),
    Blowup(String),
    Classify(String),
    CorrCheck(String),
    QdivNormalize(String),
    QdivEq(String, String),
    Cube(String, u64),
    Twist(String, u64),
}

impl Command {
    pub const NAMES: [&'static str; 11] = [
        "check-admissible",
        "minimal-twist",
        "hom-log",
        "check-minimal",
        "blowup",
        "classify",
        "corr-check",
        "qdiv-normalize",
        "qdiv-eq",
        "cube",
        "twist",
    ];

    pub fn parse(name: &str, args: &[String]) -> Result<Self, CommandError> {
        let arity = match name {
            "qdiv-eq" | "cube" | "twist" => 2,
            n if Self::NAMES.contains(&n) => 1,
            _ => return Err(CommandError::UnknownCommand(name.to_string())),
        };
        if args.len() != arity {
            return Err(CommandError::BadArgument(format!(
                "`{name}` takes {arity} argument{}, got {}",
                if arity == 1 { "" } else { "s" },
                args.len()
            )));
        }
        let a = args[0].clone();
        let count = |s: &str| {
            s.parse::<u64>().map_err(|_| {
                CommandError::BadArgument(format!("`{s}` is not a non-negative integer"))
            })
        };
        Ok(match name {
            "check-admissible" => Command::CheckAdmissible(a),
            "minimal-twist" => Command::MinimalTwist(a),
            "hom-log" => Command::HomLog(a),
            "check-minimal" => Command::CheckMinimal(a),
            "blowup" => Command::Blowup(a),
            "classify" => Command::Classify(a),
            "corr-check" => Command::CorrCheck(a),
            "qdiv-normalize" => Command::QdivNormalize(a),
            "qdiv-eq" => Command::QdivEq(a, args[1].clone()),
            "cube" => Command::Cube(a, count(&args[1])?),
            _ => Command::Twist(a, count(&args[1])?),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Command::CheckAdmissible(_) => "check-admissible",
            Command::MinimalTwist(_) => "minimal-twist",
            Command::HomLog(_) => "hom-log",
            Command::CheckMinimal(_) => "check-minimal",
            Command::Blowup(_) => "blowup",
            Command::Classify(_) => "classify",
            Command::CorrCheck(_) => "corr-check",
            Command::QdivNormalize(_) => "qdiv-normalize",
            Command::QdivEq(..) => "qdiv-eq",
            Command::Cube(..) => "cube",
            Command::Twist(..) => "twist",
        }
    }

    pub fn args(&self) -> Vec<String> {
        match self {
            Command::CheckAdmissible(a)
            | Command::MinimalTwist(a)
            | Command::HomLog(a)
            | Command::CheckMinimal(a)
            | Command::Blowup(a)
            | Command::Classify(a)
            | Command::CorrCheck(a)
            | Command::QdivNormalize(a) => vec![a.clone()],
            Command::QdivEq(a, b) => vec![a.clone(), b.clone()],
            Command::Cube(a, n) | Command::Twist(a, n) => vec![a.clone(), n.to_string()],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CommandError {
    #[error("unknown command `{0}`")]
    UnknownCommand(String),
    #[error("{0}")]
    BadArgument(String),
    #[error("unknown {} `{name}`", kind.as_str())]
    UnknownName { kind: Kind, name: String },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("blowup `{name}` is invalid: the center does not meet the boundary")]
    InvalidBlowup { name: String },
    #[error("arithmetic overflow")]
    Overflow,
}

impl CommandError {
    pub fn status(&self) -> ExitStatus {
        match self {
            CommandError::UnknownCommand(_)
            | CommandError::BadArgument(_)
            | CommandError::Overflow => ExitStatus::Input,
            CommandError::UnknownName { .. } => ExitStatus::UnknownName,
            CommandError::DimensionMismatch(_) => ExitStatus::DimensionMismatch,
            CommandError::InvalidBlowup { .. } => ExitStatus::InvalidBlowup,
        }
    }

    pub fn to_diagnostic(&self) -> Diagnostic {
        let code = match self {
            CommandError::UnknownCommand(_) => Code::UnknownCommand,
            CommandError::BadArgument(_) => Code::BadArgument,
            CommandError::UnknownName { .. } => Code::UnknownReference,
            CommandError::DimensionMismatch(_) => Code::ChartMismatch,
            CommandError::InvalidBlowup { .. } => Code::InvalidBlowup,
            CommandError::Overflow => Code::Arithmetic,
        };
        Diagnostic::unlocated(code, self.to_string())
    }

    fn from_core(e: CoreError, subject: &str) -> Self {
        match e {
            CoreError::DimensionMismatch { .. } | CoreError::ChartMismatch(_) => {
                CommandError::DimensionMismatch(e.to_string())
            }
            CoreError::InvalidBlowup(_) => CommandError::InvalidBlowup {
                name: subject.to_string(),
            },
            CoreError::Overflow => CommandError::Overflow,
            other => CommandError::BadArgument(other.to_string()),
        }
    }
}

fn unknown(kind: Kind, name: &str) -> CommandError {
    CommandError::UnknownName {
        kind,
        name: name.to_string(),
    }
}

/// Canonical text of a declaration and of the pairs it refers to.
fn echo(model: &Model, kind: Kind, name: &str) -> Vec<Echo> {
    let Some(decl) = model.decl(kind, name) else {
        return Vec::new();
    };
    let deps: Vec<&str> = match decl {
        Decl::Map { src, dst, .. } => vec![src, dst],
        Decl::Corr {
            endpoints: Some((s, d)),
            ..
        } => vec![s, d],
        Decl::QPair { pair, .. } | Decl::Blowup { pair, .. } => vec![pair],
        _ => Vec::new(),
    };
    let mut out = Vec::new();
    for dep in deps {
        if out.iter().any(|e: &Echo| e.name == dep) {
            continue;
        }
        if let Some(d) = model.decl(Kind::Pair, dep) {
            out.push(Echo {
                name: dep.to_string(),
                text: print_decl(d),
            });
        }
    }
    out.push(Echo {
        name: name.to_string(),
        text: print_decl(decl),
    });
    out
}

fn render_qpair(level: u64, pair: &Pair) -> String {
    format!("({level}, {})", pair_body(pair))
}

pub fn run_command(model: &Model, command: &Command) -> Result<Report, CommandError> {
    let mut report = Report::new(command.name(), command.args());
    match command {
        Command::CheckAdmissible(n)
        | Command::MinimalTwist(n)
        | Command::HomLog(n)
        | Command::CheckMinimal(n) => {
            let f = model.map(n).ok_or_else(|| unknown(Kind::Map, n))?;
            report.inputs = echo(model, Kind::Map, n);
            let core = |e| CommandError::from_core(e, n);
            let verdict = match command {
                Command::CheckAdmissible(_) => f.is_admissible().map_err(core)?,
                Command::HomLog(_) => f.hom_log_exists().map_err(core)?,
                Command::CheckMinimal(_) => f.is_minimal().map_err(core)?,
                _ => {
                    let t = f.minimal_twist().map_err(core)?;
                    let finite = t.is_finite();
                    report.minimal_twist = Some(TwistValue(t));
                    finite
                }
            };
            report.verdict = Some(Verdict::Bool(verdict));
            report.answered_false = !verdict;
        }
        Command::Classify(n) | Command::Blowup(n) => {
            let spec = model.blowup(n).ok_or_else(|| unknown(Kind::Blowup, n))?;
            report.inputs = echo(model, Kind::Blowup, n);
            let verdict = spec.classify();
            report.verdict = Some(Verdict::Label(verdict.as_str().to_string()));
            if matches!(command, Command::Classify(_)) {
                report.answered_false = verdict == modlog_core::Classification::Invalid;
            } else {
                let charts = spec.charts().map_err(|e| CommandError::from_core(e, n))?;
                let coords = spec.pair().chart().coords();
                report.charts = Some(
                    charts
                        .iter()
                        .map(|c| {
                            let pm = modlog_core::PairMap::new(
                                c.chart_map().clone(),
                                c.pair().clone(),
                                spec.pair().clone(),
                            )
                            .expect("chart map runs into the original chart");
                            ChartReport {
                                exceptional: coords[c.index()].clone(),
                                map: assignments(&pm),
                                divisor: c.pair().render_divisor(),
                            }
                        })
                        .collect(),
                );
                report
                    .notes
                    .push("charts are listed separately and not glued".into());
            }
        }
        Command::CorrCheck(n) => {
            let c = model.corr(n).ok_or_else(|| unknown(Kind::Corr, n))?;
            report.inputs = echo(model, Kind::Corr, n);
            let core = |e| CommandError::from_core(e, n);
            let m = Memberships {
                mcor: c.in_mcor().map_err(core)?,
                colim_mcor: c.in_colim_mcor(),
                lcor: c.in_lcor().map_err(core)?,
            };
            report.memberships = Some(m);
            report.minimal_twist = Some(TwistValue(c.minimal_twist().map_err(core)?));
            let all = m.mcor && m.colim_mcor && m.lcor;
            report.verdict = Some(Verdict::Bool(all));
            report.answered_false = !all;
        }
        Command::QdivNormalize(n) => {
            let q = model.qpair(n).ok_or_else(|| unknown(Kind::QPair, n))?;
            report.inputs = echo(model, Kind::QPair, n);
            let norm = q.normalize();
            report.result = Some(render_qpair(*norm.level(), norm.pair()));
            let coords = q.pair().chart().coords();
            let rational: Vec<String> = coords
                .iter()
                .zip(q.rational_mults())
                .filter(|(_, r)| *r.numer() != 0)
                .map(|(c, r)| format!("{c}: {r}"))
                .collect();
            report.notes.push(format!(
                "rational multiplicities {{{}}}",
                rational.join(", ")
            ));
        }
        Command::QdivEq(a, b) => {
            let qa = model.qpair(a).ok_or_else(|| unknown(Kind::QPair, a))?;
            let qb = model.qpair(b).ok_or_else(|| unknown(Kind::QPair, b))?;
            report.inputs = echo(model, Kind::QPair, a);
            for e in echo(model, Kind::QPair, b) {
                if !report.inputs.contains(&e) {
                    report.inputs.push(e);
                }
            }
            let eq = qa.q_eq(qb).map_err(|e| CommandError::from_core(e, a))?;
            report.verdict = Some(Verdict::Bool(eq));
            report.answered_false = !eq;
        }
        Command::Cube(n, w) => {
            let p = model.pair(n).ok_or_else(|| unknown(Kind::Pair, n))?;
            report.inputs = echo(model, Kind::Pair, n);
            let core = |e| CommandError::from_core(e, n);
            let c = cube(p, w).map_err(core)?;
            let proj = cube_projection(p, w).map_err(core)?;
            report.result = Some(pair_body(&c));
            report.notes.push(format!(
                "only the chart containing infinity is built; `{CUBE_COORD}` vanishes at infinity"
            ));
            report.notes.push(format!(
                "projection to `{n}` admissible: {}",
                proj.is_admissible().map_err(core)?
            ));
        }
        Command::Twist(n, k) => {
            let p = model.pair(n).ok_or_else(|| unknown(Kind::Pair, n))?;
            report.inputs = echo(model, Kind::Pair, n);
            let t = twist(p, k).map_err(|e| CommandError::from_core(e, n))?;
            report.result = Some(pair_body(&t));
        }
    }
    Ok(report)
}

/// Every check that needs no extra arguments, for every declaration, in order.
pub fn check_all(model: &Model) -> Vec<Result<Report, CommandError>> {
    let mut commands = Vec::new();
    for d in model.decls() {
        let n = d.name().to_string();
        match d {
            Decl::Pair { .. } => {}
            Decl::Map { .. } => commands.extend([
                Command::CheckAdmissible(n.clone()),
                Command::MinimalTwist(n.clone()),
                Command::HomLog(n.clone()),
                Command::CheckMinimal(n),
            ]),
            Decl::Blowup { spec, .. } => {
                commands.push(Command::Classify(n.clone()));
                if spec.classify() != modlog_core::Classification::Invalid {
                    commands.push(Command::Blowup(n));
                }
            }
            Decl::Corr { .. } => commands.push(Command::CorrCheck(n)),
            Decl::QPair { .. } => commands.push(Command::QdivNormalize(n)),
        }
    }
    commands.iter().map(|c| run_command(model, c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    const MODEL: &str = "\
pair X { dim 1; coords t; divisor { t: 1 } }
pair Y { dim 1; coords s; divisor { s: 3 } }
pair P { dim 2; coords a b; divisor { a: 1, b: 1 } }
map f : X -> Y { s <- t^2 }
corr C monomial(2, 3, 1, 1)
blowup M on P center { a, b }
qpair Q = (6, P)
qpair R = (1, P)
";

    fn run(cmd: &str, args: &[&str]) -> Result<Report, CommandError> {
        let model = parse(MODEL).unwrap();
        let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        run_command(&model, &Command::parse(cmd, &args)?)
    }

    #[test]
    fn corr_check_reports_all_memberships() {
        let r = run("corr-check", &["C"]).unwrap();
        assert_eq!(
            r.memberships,
            Some(Memberships {
                mcor: false,
                colim_mcor: true,
                lcor: false
            })
        );
        assert_eq!(
            r.minimal_twist,
            Some(TwistValue(modlog_core::Twist::Finite(2)))
        );
        assert_eq!(r.status(), ExitStatus::False);
    }

    #[test]
    fn minimal_twist_of_square_map() {
        let r = run("minimal-twist", &["f"]).unwrap();
        assert_eq!(
            r.minimal_twist,
            Some(TwistValue(modlog_core::Twist::Finite(6)))
        );
        assert_eq!(r.status(), ExitStatus::Ok);
        assert_eq!(
            run("check-admissible", &["f"]).unwrap().status(),
            ExitStatus::False
        );
    }

    #[test]
    fn classify_modification() {
        let r = run("classify", &["M"]).unwrap();
        assert_eq!(r.verdict, Some(Verdict::Label("modification".into())));
        let r = run("blowup", &["M"]).unwrap();
        let charts = r.charts.unwrap();
        assert_eq!(charts[0].divisor, "{a: 2, b: 1}");
        assert_eq!(charts[0].map, vec!["a <- a", "b <- a * b"]);
        assert_eq!(charts[1].divisor, "{a: 1, b: 2}");
    }

    #[test]
    fn qdivisor_commands() {
        let r = run("qdiv-normalize", &["Q"]).unwrap();
        assert_eq!(
            r.result.as_deref(),
            Some("(6, { dim 2; coords a b; divisor { a: 1, b: 1 } })")
        );
        assert_eq!(r.notes[0], "rational multiplicities {a: 1/6, b: 1/6}");
        assert_eq!(
            run("qdiv-eq", &["Q", "R"]).unwrap().status(),
            ExitStatus::False
        );
        assert_eq!(
            run("qdiv-eq", &["Q", "Q"]).unwrap().status(),
            ExitStatus::Ok
        );
    }

    #[test]
    fn cube_and_twist() {
        let r = run("cube", &["X", "2"]).unwrap();
        assert_eq!(
            r.result.as_deref(),
            Some("{ dim 2; coords t inf; divisor { t: 1, inf: 2 } }")
        );
        let r = run("twist", &["Y", "2"]).unwrap();
        assert_eq!(
            r.result.as_deref(),
            Some("{ dim 1; coords s; divisor { s: 6 } }")
        );
    }

    #[test]
    fn error_statuses_are_distinct() {
        let e = |cmd, args| run(cmd, args).unwrap_err().status();
        assert_eq!(e("frobnicate", &["f"]), ExitStatus::Input);
        assert_eq!(e("twist", &["X", "0"]), ExitStatus::Input);
        assert_eq!(e("twist", &["X", "two"]), ExitStatus::Input);
        assert_eq!(e("check-admissible", &["nope"]), ExitStatus::UnknownName);
        assert_eq!(e("qdiv-eq", &["Q", "nope"]), ExitStatus::UnknownName);

        let m = parse("pair X { coords t; divisor { t: 1 } }\npair P { coords a b }\nqpair A = (1, X)\nqpair B = (1, P)\npair E { coords a b; divisor { a: 1 } }\nblowup Z on E center { b }").unwrap();
        let err = run_command(&m, &Command::QdivEq("A".into(), "B".into())).unwrap_err();
        assert_eq!(err.status(), ExitStatus::DimensionMismatch);
        let err = run_command(&m, &Command::Blowup("Z".into())).unwrap_err();
        assert_eq!(err.status(), ExitStatus::InvalidBlowup);
        assert_eq!(err.to_diagnostic().code, Code::InvalidBlowup);
    }

    #[test]
    fn check_all_covers_every_declaration() {
        let model = parse(MODEL).unwrap();
        let reports: Vec<Report> = check_all(&model).into_iter().map(Result::unwrap).collect();
        let names: Vec<&str> = reports.iter().map(|r| r.command.as_str()).collect();
        assert_eq!(
            names,
            [
                "check-admissible",
                "minimal-twist",
                "hom-log",
                "check-minimal",
                "corr-check",
                "classify",
                "blowup",
                "qdiv-normalize",
                "qdiv-normalize"
            ]
        );
    }

    #[test]
    fn machine_output_is_deterministic() {
        let a = run("corr-check", &["C"]).unwrap().to_machine();
        let b = run("corr-check", &["C"]).unwrap().to_machine();
        assert_eq!(a, b);
        assert!(a.contains("\"memberships\":{\"mcor\":false,\"colim_mcor\":true,\"lcor\":false}"));
        assert!(a.contains("\"minimal_twist\":2"));
    }
}
