use std::fmt;

use serde::Serialize;

/// A location in the input. `line` and `column` are 1-based; `offset` and
/// `len` are in bytes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Span {
    pub offset: usize,
    pub line: usize,
    pub column: usize,
    pub len: usize,
}

impl Span {
    /// Smallest span covering both.
    pub fn to(self, end: Span) -> Span {
        Span {
            len: (end.offset + end.len).saturating_sub(self.offset),
            ..self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
}

/// Stable diagnostic codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Code {
    UnexpectedChar,
    IntegerTooLarge,
    UnexpectedToken,
    UnexpectedEof,
    ExpectedDeclaration,
    DuplicateName,
    UnknownName,
    UnknownCoordinate,
    DuplicateCoordinate,
    DimMismatch,
    DuplicateEntry,
    MissingEntry,
    ZeroNotAllowed,
    DuplicateLabel,
    EmptyCenter,
    BadCoefficient,
    ReservedWord,
    NotACurve,
    // Command-level codes.
    UnknownCommand,
    BadArgument,
    UnknownReference,
    ChartMismatch,
    InvalidBlowup,
    Arithmetic,
}

impl Code {
    pub fn as_str(self) -> &'static str {
        match self {
            Code::UnexpectedChar => "E001",
            Code::IntegerTooLarge => "E002",
            Code::UnexpectedToken => "E003",
            Code::UnexpectedEof => "E004",
            Code::ExpectedDeclaration => "E005",
            Code::DuplicateName => "E010",
            Code::UnknownName => "E011",
            Code::UnknownCoordinate => "E012",
            Code::DuplicateCoordinate => "E013",
            Code::DimMismatch => "E014",
            Code::DuplicateEntry => "E015",
            Code::MissingEntry => "E016",
            Code::ZeroNotAllowed => "E017",
            Code::DuplicateLabel => "E018",
            Code::EmptyCenter => "E019",
            Code::BadCoefficient => "E020",
            Code::ReservedWord => "E021",
            Code::NotACurve => "W001",
            Code::UnknownCommand => "C001",
            Code::BadArgument => "C002",
            Code::UnknownReference => "C003",
            Code::ChartMismatch => "C004",
            Code::InvalidBlowup => "C005",
            Code::Arithmetic => "C006",
        }
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Code {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub severity: Severity,
    pub code: Code,
    /// Always present for parser diagnostics; command diagnostics have none.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub span: Option<Span>,
    pub message: String,
}

impl Diagnostic {
    pub fn error(code: Code, span: Span, message: impl Into<String>) -> Self {
        Diagnostic {
            severity: Severity::Error,
            code,
            span: Some(span),
            message: message.into(),
        }
    }

    pub fn warning(code: Code, span: Span, message: impl Into<String>) -> Self {
        Diagnostic {
            severity: Severity::Warning,
            code,
            span: Some(span),
            message: message.into(),
        }
    }

    pub fn unlocated(code: Code, message: impl Into<String>) -> Self {
        Diagnostic {
            severity: Severity::Error,
            code,
            span: None,
            message: message.into(),
        }
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sev = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        match self.span {
            Some(s) => write!(
                f,
                "{sev}[{}] {}:{}: {}",
                self.code, s.line, s.column, self.message
            ),
            None => write!(f, "{sev}[{}]: {}", self.code, self.message),
        }
    }
}
