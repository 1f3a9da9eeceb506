//! Text front end for `modlog-core`: a small declaration language, its
//! canonical printer, and the command driver behind the `modlog` binary.

pub mod command;
pub mod diagnostic;
pub mod lexer;
pub mod model;
pub mod parser;
pub mod printer;
pub mod report;

pub use command::{check_all, run_command, Command, CommandError};
pub use diagnostic::{Code, Diagnostic, Severity, Span};
pub use model::{CorrForm, Decl, Kind, Model, ModelError};
pub use parser::{parse, parse_with_warnings, ParseOutput};
pub use printer::print;
pub use report::{ExitStatus, Report};
