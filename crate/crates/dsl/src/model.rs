//! Declared objects, in declaration order, with one namespace per kind.

use modlog_core::{BlowupSpec, CurveCorr, Pair, PairMap, QPair};
use thiserror::Error;

/// Words that start a declaration and cannot be used as names.
pub const KEYWORDS: [&str; 5] = ["pair", "map", "corr", "qpair", "blowup"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Pair,
    Map,
    Corr,
    QPair,
    Blowup,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Pair => "pair",
            Kind::Map => "map",
            Kind::Corr => "corr",
            Kind::QPair => "qpair",
            Kind::Blowup => "blowup",
        }
    }
}

/// How a correspondence was written; kept so printing reproduces it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CorrForm {
    Records,
    Monomial { a: u64, b: u64, n_x: u64, n_y: u64 },
    Constant,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decl {
    Pair {
        name: String,
        pair: Pair,
    },
    Map {
        name: String,
        src: String,
        dst: String,
        map: PairMap,
    },
    Corr {
        name: String,
        endpoints: Option<(String, String)>,
        form: CorrForm,
        corr: CurveCorr,
    },
    QPair {
        name: String,
        pair: String,
        qpair: QPair,
    },
    Blowup {
        name: String,
        pair: String,
        spec: BlowupSpec,
    },
}

impl Decl {
    pub fn name(&self) -> &str {
        match self {
            Decl::Pair { name, .. }
            | Decl::Map { name, .. }
            | Decl::Corr { name, .. }
            | Decl::QPair { name, .. }
            | Decl::Blowup { name, .. } => name,
        }
    }

    pub fn kind(&self) -> Kind {
        match self {
            Decl::Pair { .. } => Kind::Pair,
            Decl::Map { .. } => Kind::Map,
            Decl::Corr { .. } => Kind::Corr,
            Decl::QPair { .. } => Kind::QPair,
            Decl::Blowup { .. } => Kind::Blowup,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("{} `{name}` is already declared", kind.as_str())]
    Duplicate { kind: Kind, name: String },
    #[error("unknown {} `{name}`", kind.as_str())]
    Unknown { kind: Kind, name: String },
    #[error("`{0}` is not a valid identifier")]
    BadIdentifier(String),
    #[error("{0}")]
    Inconsistent(String),
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !KEYWORDS.contains(&s)
}

/// Point labels may also be plain decimal numbers.
pub fn is_label(s: &str) -> bool {
    is_identifier(s)
        || (!s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) && s.parse::<u64>().is_ok())
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Model {
    decls: Vec<Decl>,
}

impl Model {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn decls(&self) -> &[Decl] {
        &self.decls
    }

    pub fn is_empty(&self) -> bool {
        self.decls.is_empty()
    }

    fn find(&self, kind: Kind, name: &str) -> Option<&Decl> {
        self.decls
            .iter()
            .find(|d| d.kind() == kind && d.name() == name)
    }

    pub fn contains(&self, kind: Kind, name: &str) -> bool {
        self.find(kind, name).is_some()
    }

    pub fn pair(&self, name: &str) -> Option<&Pair> {
        match self.find(Kind::Pair, name)? {
            Decl::Pair { pair, .. } => Some(pair),
            _ => None,
        }
    }

    pub fn map(&self, name: &str) -> Option<&PairMap> {
        match self.find(Kind::Map, name)? {
            Decl::Map { map, .. } => Some(map),
            _ => None,
        }
    }

    pub fn corr(&self, name: &str) -> Option<&CurveCorr> {
        match self.find(Kind::Corr, name)? {
            Decl::Corr { corr, .. } => Some(corr),
            _ => None,
        }
    }

    pub fn qpair(&self, name: &str) -> Option<&QPair> {
        match self.find(Kind::QPair, name)? {
            Decl::QPair { qpair, .. } => Some(qpair),
            _ => None,
        }
    }

    pub fn blowup(&self, name: &str) -> Option<&BlowupSpec> {
        match self.find(Kind::Blowup, name)? {
            Decl::Blowup { spec, .. } => Some(spec),
            _ => None,
        }
    }

    pub fn decl(&self, kind: Kind, name: &str) -> Option<&Decl> {
        self.find(kind, name)
    }

    fn fresh(&self, kind: Kind, name: &str) -> Result<(), ModelError> {
        if !is_identifier(name) {
            return Err(ModelError::BadIdentifier(name.to_string()));
        }
        if self.contains(kind, name) {
            return Err(ModelError::Duplicate {
                kind,
                name: name.to_string(),
            });
        }
        Ok(())
    }

    fn require_pair(&self, name: &str) -> Result<&Pair, ModelError> {
        self.pair(name).ok_or_else(|| ModelError::Unknown {
            kind: Kind::Pair,
            name: name.to_string(),
        })
    }

    pub fn add_pair(&mut self, name: &str, pair: Pair) -> Result<(), ModelError> {
        self.fresh(Kind::Pair, name)?;
        if let Some(bad) = pair.chart().coords().iter().find(|c| !is_identifier(c)) {
            return Err(ModelError::BadIdentifier(bad.clone()));
        }
        self.decls.push(Decl::Pair {
            name: name.to_string(),
            pair,
        });
        Ok(())
    }

    /// `map` must run between the declared pairs `src` and `dst`.
    pub fn add_map(
        &mut self,
        name: &str,
        src: &str,
        dst: &str,
        map: PairMap,
    ) -> Result<(), ModelError> {
        self.fresh(Kind::Map, name)?;
        if self.require_pair(src)? != map.src() || self.require_pair(dst)? != map.dst() {
            return Err(ModelError::Inconsistent(format!(
                "map `{name}` does not run between `{src}` and `{dst}`"
            )));
        }
        self.decls.push(Decl::Map {
            name: name.to_string(),
            src: src.to_string(),
            dst: dst.to_string(),
            map,
        });
        Ok(())
    }

    pub fn add_corr(
        &mut self,
        name: &str,
        endpoints: Option<(&str, &str)>,
        form: CorrForm,
        corr: CurveCorr,
    ) -> Result<(), ModelError> {
        self.fresh(Kind::Corr, name)?;
        if let Some((s, d)) = endpoints {
            self.require_pair(s)?;
            self.require_pair(d)?;
        }
        let consistent = match (&form, &corr) {
            (CorrForm::Records, CurveCorr::NonConstant(rs)) => {
                rs.iter().all(|r| is_label(r.label()))
            }
            (CorrForm::Constant, CurveCorr::Constant { .. }) => true,
            (&CorrForm::Monomial { a, b, n_x, n_y }, c) => {
                CurveCorr::from_monomial_param(a, b, n_x, n_y).as_ref() == Ok(c)
            }
            _ => false,
        };
        if !consistent {
            return Err(ModelError::Inconsistent(format!(
                "correspondence `{name}` does not match its declared form"
            )));
        }
        self.decls.push(Decl::Corr {
            name: name.to_string(),
            endpoints: endpoints.map(|(s, d)| (s.to_string(), d.to_string())),
            form,
            corr,
        });
        Ok(())
    }

    pub fn add_qpair(&mut self, name: &str, pair: &str, qpair: QPair) -> Result<(), ModelError> {
        self.fresh(Kind::QPair, name)?;
        if self.require_pair(pair)? != qpair.pair() {
            return Err(ModelError::Inconsistent(format!(
                "qpair `{name}` does not use pair `{pair}`"
            )));
        }
        self.decls.push(Decl::QPair {
            name: name.to_string(),
            pair: pair.to_string(),
            qpair,
        });
        Ok(())
    }

    pub fn add_blowup(
        &mut self,
        name: &str,
        pair: &str,
        spec: BlowupSpec,
    ) -> Result<(), ModelError> {
        self.fresh(Kind::Blowup, name)?;
        if self.require_pair(pair)? != spec.pair() {
            return Err(ModelError::Inconsistent(format!(
                "blowup `{name}` is not on pair `{pair}`"
            )));
        }
        self.decls.push(Decl::Blowup {
            name: name.to_string(),
            pair: pair.to_string(),
            spec,
        });
        Ok(())
    }
}
