//! Parser for the model language.
//!
//! ```text
//! pair X { dim 1; coords t; divisor { t: 1 } }
//! map f : X -> Y { s <- t^2 }
//! corr C : X -> Y { point w { nx 1; ny 1; ex 2; ey 3 } }
//! corr D monomial(2, 3, 1, 1)
//! corr K constant(interior)
//! qpair Q = (6, X)
//! blowup B on X center { t }
//! ```
//!
//! The token stream is cut into statements at declaration keywords, and each
//! statement is parsed on its own. A syntax error ends its statement with a
//! single diagnostic; later statements are still checked.

use std::collections::HashSet;

use modlog_core::CorrLocalRecord;
use modlog_core::{BlowupSpec, Chart, CurveCorr, Divisor, MonomialMap, Pair, PairMap, QPair};

use crate::diagnostic::{Code, Diagnostic, Span};
use crate::lexer::{lex, Tok, Token};
use crate::model::{is_identifier, CorrForm, Kind, Model, KEYWORDS};

/// Everything the parser found. `model` is `None` iff an error was reported.
#[derive(Debug, Clone)]
pub struct ParseOutput {
    pub model: Option<Model>,
    pub diagnostics: Vec<Diagnostic>,
}

/// Parses `text`, returning the model or every diagnostic (errors and warnings).
pub fn parse(text: &str) -> Result<Model, Vec<Diagnostic>> {
    let out = parse_with_warnings(text);
    out.model.ok_or(out.diagnostics)
}

pub fn parse_with_warnings(text: &str) -> ParseOutput {
    let (tokens, mut diagnostics) = lex(text);
    let mut state = State {
        model: Model::new(),
        failed: HashSet::new(),
        diags: Vec::new(),
        ok: diagnostics.is_empty(),
    };

    let starts = statement_starts(&tokens);
    if let Some(&first) = starts.first().or(Some(&tokens.len())) {
        if first > 0 {
            let span = tokens[0].span.to(tokens[first - 1].span);
            state.error(Diagnostic::error(
                Code::ExpectedDeclaration,
                span,
                "expected a declaration (`pair`, `map`, `corr`, `qpair` or `blowup`)",
            ));
        }
    }
    for (k, &start) in starts.iter().enumerate() {
        let stop = starts.get(k + 1).copied().unwrap_or(tokens.len());
        let chunk = &tokens[start..stop];
        let last = chunk.last().expect("statements start with a keyword").span;
        let eof = Span {
            offset: last.offset + last.len,
            column: last.column + last.len,
            len: 0,
            ..last
        };
        state.statement(Cursor {
            toks: chunk,
            pos: 0,
            eof,
        });
    }

    diagnostics.append(&mut state.diags);
    diagnostics.sort_by_key(|d| d.span.map(|s| s.offset));
    ParseOutput {
        model: state.ok.then_some(state.model),
        diagnostics,
    }
}

fn keyword_at(tokens: &[Token], i: usize) -> bool {
    matches!(tokens.get(i), Some(Token { tok: Tok::Ident(w), .. }) if KEYWORDS.contains(&w.as_str()))
}

/// Indices of tokens that begin a statement.
///
/// A keyword starts a statement at brace depth zero, or at any depth when
/// followed by a plain name (recovering from a missing `}`). A keyword right
/// after a statement keyword is a misused name, not a new statement.
fn statement_starts(tokens: &[Token]) -> Vec<usize> {
    let mut starts = Vec::new();
    let mut depth = 0usize;
    for (i, t) in tokens.iter().enumerate() {
        if keyword_at(tokens, i) {
            let after_keyword = starts.last() == Some(&(i.wrapping_sub(1)));
            let named_next = matches!(tokens.get(i + 1), Some(Token { tok: Tok::Ident(w), .. }) if !KEYWORDS.contains(&w.as_str()));
            if !after_keyword && (depth == 0 || named_next) {
                starts.push(i);
                depth = 0;
                continue;
            }
        }
        match t.tok {
            Tok::LBrace => depth += 1,
            Tok::RBrace => depth = depth.saturating_sub(1),
            _ => {}
        }
    }
    starts
}

enum Fail {
    Diag(Diagnostic),
    /// The lexer already reported this token.
    Silent,
}

type PResult<T> = Result<T, Fail>;

struct Cursor<'a> {
    toks: &'a [Token],
    pos: usize,
    eof: Span,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<&'a Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn peek_is(&self, t: &Tok) -> bool {
        self.peek() == Some(t)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        let hit = self.peek_is(t);
        if hit {
            self.pos += 1;
        }
        hit
    }

    fn bump(&mut self, expected: &str) -> PResult<&'a Token> {
        match self.toks.get(self.pos) {
            None => Err(Fail::Diag(Diagnostic::error(
                Code::UnexpectedEof,
                self.eof,
                format!("expected {expected}, found end of declaration"),
            ))),
            Some(Token { tok: Tok::Bad, .. }) => Err(Fail::Silent),
            Some(t) => {
                self.pos += 1;
                Ok(t)
            }
        }
    }

    fn expect(&mut self, want: Tok) -> PResult<Span> {
        let what = want.describe();
        let t = self.bump(&what)?;
        if t.tok == want {
            Ok(t.span)
        } else {
            Err(unexpected(t, &what))
        }
    }

    /// A contextual keyword such as `dim` or `center`.
    fn expect_word(&mut self, word: &str) -> PResult<Span> {
        let what = format!("`{word}`");
        let t = self.bump(&what)?;
        match &t.tok {
            Tok::Ident(w) if w == word => Ok(t.span),
            _ => Err(unexpected(t, &what)),
        }
    }

    fn word(&mut self, expected: &str) -> PResult<(String, Span)> {
        let t = self.bump(expected)?;
        match &t.tok {
            Tok::Ident(w) => Ok((w.clone(), t.span)),
            _ => Err(unexpected(t, expected)),
        }
    }

    fn name(&mut self, expected: &str) -> PResult<(String, Span)> {
        let (w, span) = self.word(expected)?;
        if KEYWORDS.contains(&w.as_str()) {
            return Err(Fail::Diag(Diagnostic::error(
                Code::ReservedWord,
                span,
                format!("`{w}` is reserved and cannot be used as {expected}"),
            )));
        }
        Ok((w, span))
    }

    fn int(&mut self, expected: &str) -> PResult<(u64, Span)> {
        let t = self.bump(expected)?;
        match t.tok {
            Tok::Int(n) => Ok((n, t.span)),
            _ => Err(unexpected(t, expected)),
        }
    }
}

fn unexpected(t: &Token, expected: &str) -> Fail {
    Fail::Diag(Diagnostic::error(
        Code::UnexpectedToken,
        t.span,
        format!("expected {expected}, found {}", t.tok.describe()),
    ))
}

struct State {
    model: Model,
    failed: HashSet<(Kind, String)>,
    diags: Vec<Diagnostic>,
    ok: bool,
}

/// Semantic problems found in one statement.
#[derive(Default)]
struct Problems(Vec<Diagnostic>);

impl Problems {
    fn push(&mut self, code: Code, span: Span, msg: impl Into<String>) {
        self.0.push(Diagnostic::error(code, span, msg));
    }
}

impl State {
    fn error(&mut self, d: Diagnostic) {
        self.ok = false;
        self.diags.push(d);
    }

    fn statement(&mut self, mut cur: Cursor<'_>) {
        let Some(Tok::Ident(keyword)) = cur.peek() else {
            return;
        };
        cur.pos += 1;
        let kind = match keyword.as_str() {
            "pair" => Kind::Pair,
            "map" => Kind::Map,
            "corr" => Kind::Corr,
            "qpair" => Kind::QPair,
            _ => Kind::Blowup,
        };
        // Record the name early so references to a broken declaration do
        // not produce a second, misleading diagnostic.
        let name = match cur.toks.get(1) {
            Some(Token {
                tok: Tok::Ident(n), ..
            }) if is_identifier(n) => Some(n.clone()),
            _ => None,
        };
        let mut problems = Problems::default();
        let result = match kind {
            Kind::Pair => self.pair(&mut cur, &mut problems),
            Kind::Map => self.map(&mut cur, &mut problems),
            Kind::Corr => self.corr(&mut cur, &mut problems),
            Kind::QPair => self.qpair(&mut cur, &mut problems),
            Kind::Blowup => self.blowup(&mut cur, &mut problems),
        };
        let result = result.and_then(|()| {
            cur.eat(&Tok::Semi);
            match cur.toks.get(cur.pos) {
                None => Ok(()),
                Some(Token { tok: Tok::Bad, .. }) => Err(Fail::Silent),
                Some(t) => Err(unexpected(t, "end of declaration")),
            }
        });
        let failed = match result {
            Err(Fail::Diag(d)) => {
                self.error(d);
                true
            }
            Err(Fail::Silent) => {
                self.ok = false;
                true
            }
            Ok(()) => false,
        };
        let mut broken = failed;
        for d in problems.0 {
            broken |= d.is_error();
            if d.is_error() {
                self.error(d);
            } else {
                self.diags.push(d);
            }
        }
        if broken {
            if let Some(n) = name {
                self.failed.insert((kind, n));
            }
        }
    }

    /// Declares the name, reporting duplicates.
    fn claim(&self, kind: Kind, name: &str, span: Span, problems: &mut Problems) {
        if self.model.contains(kind, name) {
            problems.push(
                Code::DuplicateName,
                span,
                format!("{} `{name}` is already declared", kind.as_str()),
            );
        }
    }

    fn resolve_pair(&self, name: &str, span: Span, problems: &mut Problems) -> Option<Pair> {
        if let Some(p) = self.model.pair(name) {
            return Some(p.clone());
        }
        if self.failed.contains(&(Kind::Pair, name.to_string())) {
            // Reported where it was declared; still poisons this statement.
            problems.0.push(Diagnostic::error(
                Code::UnknownName,
                span,
                format!("pair `{name}` has errors"),
            ));
        } else {
            problems.push(Code::UnknownName, span, format!("unknown pair `{name}`"));
        }
        None
    }

    fn pair(&mut self, cur: &mut Cursor<'_>, problems: &mut Problems) -> PResult<()> {
        let (name, name_span) = cur.name("a pair name")?;
        self.claim(Kind::Pair, &name, name_span, problems);
        cur.expect(Tok::LBrace)?;
        let mut dim: Option<(u64, Span)> = None;
        let mut coords: Option<Vec<(String, Span)>> = None;
        let mut divisor: Option<Vec<(String, Span, u64)>> = None;
        while !cur.eat(&Tok::RBrace) {
            let (item, span) = cur.word("`dim`, `coords`, `divisor` or `}`")?;
            let seen = match item.as_str() {
                "dim" => dim.replace(cur.int("a dimension")?).is_some(),
                "coords" => {
                    let mut list = Vec::new();
                    while let Some(Tok::Ident(_)) = cur.peek() {
                        list.push(cur.name("a coordinate name")?);
                    }
                    coords.replace(list).is_some()
                }
                "divisor" => {
                    cur.expect(Tok::LBrace)?;
                    let mut entries = Vec::new();
                    while !cur.eat(&Tok::RBrace) {
                        let (c, cs) = cur.name("a coordinate name")?;
                        cur.expect(Tok::Colon)?;
                        let (m, _) = cur.int("a multiplicity")?;
                        entries.push((c, cs, m));
                        if !cur.eat(&Tok::Comma) {
                            cur.expect(Tok::RBrace)?;
                            break;
                        }
                    }
                    divisor.replace(entries).is_some()
                }
                _ => {
                    return Err(Fail::Diag(Diagnostic::error(
                        Code::UnexpectedToken,
                        span,
                        format!("expected `dim`, `coords` or `divisor`, found `{item}`"),
                    )))
                }
            };
            if seen {
                problems.push(Code::DuplicateEntry, span, format!("`{item}` given twice"));
            }
            if !cur.eat(&Tok::Semi) {
                cur.expect(Tok::RBrace)?;
                break;
            }
        }

        let Some(coords) = coords else {
            problems.push(
                Code::MissingEntry,
                name_span,
                format!("pair `{name}` has no `coords`"),
            );
            return Ok(());
        };
        for (i, (c, span)) in coords.iter().enumerate() {
            if coords[..i].iter().any(|(d, _)| d == c) {
                problems.push(
                    Code::DuplicateCoordinate,
                    *span,
                    format!("coordinate `{c}` repeated"),
                );
            }
        }
        if let Some((d, span)) = dim {
            if d != coords.len() as u64 {
                problems.push(
                    Code::DimMismatch,
                    span,
                    format!("dim {d} but {} coordinates listed", coords.len()),
                );
            }
        }
        let names: Vec<&str> = coords.iter().map(|(c, _)| c.as_str()).collect();
        let mut mults = vec![0u64; names.len()];
        let mut set = vec![false; names.len()];
        for (c, span, m) in divisor.unwrap_or_default() {
            match names.iter().position(|n| *n == c) {
                None => problems.push(
                    Code::UnknownCoordinate,
                    span,
                    format!("`{c}` is not a coordinate of `{name}`"),
                ),
                Some(i) if set[i] => problems.push(
                    Code::DuplicateEntry,
                    span,
                    format!("multiplicity of `{c}` given twice"),
                ),
                Some(i) => {
                    set[i] = true;
                    mults[i] = m;
                }
            }
        }
        if !problems.0.is_empty() {
            return Ok(());
        }
        let chart = Chart::new(names).expect("coordinates checked");
        let pair = Pair::new(chart, Divisor::new(mults)).expect("lengths agree");
        if let Err(e) = self.model.add_pair(&name, pair) {
            problems.push(Code::DuplicateName, name_span, e.to_string());
        }
        Ok(())
    }

    fn arrow_endpoints(&self, cur: &mut Cursor<'_>) -> PResult<((String, Span), (String, Span))> {
        let src = cur.name("a source pair")?;
        cur.expect(Tok::Arrow)?;
        let dst = cur.name("a target pair")?;
        Ok((src, dst))
    }

    fn map(&mut self, cur: &mut Cursor<'_>, problems: &mut Problems) -> PResult<()> {
        let (name, name_span) = cur.name("a map name")?;
        self.claim(Kind::Map, &name, name_span, problems);
        cur.expect(Tok::Colon)?;
        let ((src, src_span), (dst, dst_span)) = self.arrow_endpoints(cur)?;
        let open = cur.expect(Tok::LBrace)?;
        // (source coordinate, span, exponent)
        type Factor = (String, Span, u64);
        let mut assigns: Vec<(String, Span, Vec<Factor>)> = Vec::new();
        while !cur.eat(&Tok::RBrace) {
            let (lhs, lhs_span) = cur.name("a target coordinate")?;
            cur.expect(Tok::LArrow)?;
            let mut factors = Vec::new();
            loop {
                let t = cur.bump("a coordinate or `1`")?;
                match &t.tok {
                    Tok::Ident(x) => {
                        let e = if cur.eat(&Tok::Caret) {
                            cur.int("an exponent")?.0
                        } else {
                            1
                        };
                        factors.push((x.clone(), t.span, e));
                    }
                    Tok::Int(1) => {}
                    Tok::Int(n) => problems.push(
                        Code::BadCoefficient,
                        t.span,
                        format!("monomials have unit coefficients; found `{n}`"),
                    ),
                    _ => return Err(unexpected(t, "a coordinate or `1`")),
                }
                if !cur.eat(&Tok::Star) {
                    break;
                }
            }
            assigns.push((lhs, lhs_span, factors));
            if !cur.eat(&Tok::Semi) {
                cur.expect(Tok::RBrace)?;
                break;
            }
        }

        let src_pair = self.resolve_pair(&src, src_span, problems);
        let dst_pair = self.resolve_pair(&dst, dst_span, problems);
        let (Some(sp), Some(dp)) = (src_pair, dst_pair) else {
            return Ok(());
        };
        let mut rows: Vec<Option<Vec<u64>>> = vec![None; dp.dim()];
        for (lhs, lhs_span, factors) in assigns {
            let Some(j) = dp.chart().index_of(&lhs) else {
                problems.push(
                    Code::UnknownCoordinate,
                    lhs_span,
                    format!("`{lhs}` is not a coordinate of `{dst}`"),
                );
                continue;
            };
            if rows[j].is_some() {
                problems.push(
                    Code::DuplicateEntry,
                    lhs_span,
                    format!("`{lhs}` assigned twice"),
                );
                continue;
            }
            let mut row = vec![0u64; sp.dim()];
            for (x, span, e) in factors {
                match sp.chart().index_of(&x) {
                    Some(i) => match row[i].checked_add(e) {
                        Some(v) => row[i] = v,
                        None => problems.push(Code::IntegerTooLarge, span, "exponent overflows"),
                    },
                    None => problems.push(
                        Code::UnknownCoordinate,
                        span,
                        format!("`{x}` is not a coordinate of `{src}`"),
                    ),
                }
            }
            rows[j] = Some(row);
        }
        let missing: Vec<&str> = dp
            .chart()
            .coords()
            .iter()
            .zip(&rows)
            .filter(|(_, r)| r.is_none())
            .map(|(c, _)| c.as_str())
            .collect();
        if !missing.is_empty() && problems.0.is_empty() {
            problems.push(
                Code::MissingEntry,
                open,
                format!("no image given for {}", missing.join(", ")),
            );
        }
        if !problems.0.is_empty() {
            return Ok(());
        }
        let expo: Vec<Vec<u64>> = rows.into_iter().map(|r| r.expect("all assigned")).collect();
        let mm =
            MonomialMap::new(sp.chart().clone(), dp.chart().clone(), expo).expect("shape checked");
        let pm = PairMap::new(mm, sp, dp).expect("charts match");
        if let Err(e) = self.model.add_map(&name, &src, &dst, pm) {
            problems.push(Code::DuplicateName, name_span, e.to_string());
        }
        Ok(())
    }

    fn corr(&mut self, cur: &mut Cursor<'_>, problems: &mut Problems) -> PResult<()> {
        let (name, name_span) = cur.name("a correspondence name")?;
        self.claim(Kind::Corr, &name, name_span, problems);
        let endpoints = if cur.eat(&Tok::Colon) {
            Some(self.arrow_endpoints(cur)?)
        } else {
            None
        };

        let t = cur.bump("`{`, `monomial` or `constant`")?;
        let (form, corr) = match &t.tok {
            Tok::LBrace => {
                let records = self.points(cur, problems)?;
                (CorrForm::Records, CurveCorr::non_constant(records).ok())
            }
            Tok::Ident(w) if w == "monomial" => {
                cur.expect(Tok::LParen)?;
                let mut args = [(0u64, t.span); 4];
                for (k, what) in ["a", "b", "nx", "ny"].iter().enumerate() {
                    if k > 0 {
                        cur.expect(Tok::Comma)?;
                    }
                    args[k] = cur.int(&format!("the integer `{what}`"))?;
                }
                cur.expect(Tok::RParen)?;
                for (v, span) in &args[..2] {
                    if *v == 0 {
                        problems.push(
                            Code::ZeroNotAllowed,
                            *span,
                            "monomial exponents must be positive",
                        );
                    }
                }
                let [a, b, n_x, n_y] = args.map(|(v, _)| v);
                (
                    CorrForm::Monomial { a, b, n_x, n_y },
                    CurveCorr::from_monomial_param(a, b, n_x, n_y).ok(),
                )
            }
            Tok::Ident(w) if w == "constant" => {
                cur.expect(Tok::LParen)?;
                let (which, span) = cur.word("`interior` or `boundary`")?;
                cur.expect(Tok::RParen)?;
                let flag = match which.as_str() {
                    "interior" => true,
                    "boundary" => false,
                    _ => {
                        return Err(Fail::Diag(Diagnostic::error(
                            Code::UnexpectedToken,
                            span,
                            format!("expected `interior` or `boundary`, found `{which}`"),
                        )))
                    }
                };
                (CorrForm::Constant, Some(CurveCorr::constant(flag)))
            }
            _ => return Err(unexpected(t, "`{`, `monomial` or `constant`")),
        };

        let mut names = None;
        if let Some(((src, ss), (dst, ds))) = endpoints {
            let sp = self.resolve_pair(&src, ss, problems);
            let dp = self.resolve_pair(&dst, ds, problems);
            for (p, span) in [(sp, ss), (dp, ds)] {
                if let Some(p) = p.filter(|p| p.dim() != 1) {
                    problems.0.push(Diagnostic::warning(
                        Code::NotACurve,
                        span,
                        format!(
                            "correspondences relate curves; this pair has dimension {}",
                            p.dim()
                        ),
                    ));
                }
            }
            names = Some((src, dst));
        }
        if problems.0.iter().any(Diagnostic::is_error) {
            return Ok(());
        }
        let corr = corr.expect("records validated");
        let endpoints = names.as_ref().map(|(s, d)| (s.as_str(), d.as_str()));
        if let Err(e) = self.model.add_corr(&name, endpoints, form, corr) {
            problems.push(Code::DuplicateName, name_span, e.to_string());
        }
        Ok(())
    }

    /// `point LABEL { nx INT; ny INT; ex INT; ey INT }` up to the closing `}`.
    fn points(
        &self,
        cur: &mut Cursor<'_>,
        problems: &mut Problems,
    ) -> PResult<Vec<CorrLocalRecord>> {
        let mut records: Vec<CorrLocalRecord> = Vec::new();
        while !cur.eat(&Tok::RBrace) {
            cur.expect_word("point")?;
            let t = cur.bump("a point label")?;
            let (label, label_span) = match &t.tok {
                Tok::Ident(w) if !KEYWORDS.contains(&w.as_str()) => (w.clone(), t.span),
                Tok::Int(n) => (n.to_string(), t.span),
                _ => return Err(unexpected(t, "a point label")),
            };
            cur.expect(Tok::LBrace)?;
            let mut fields: [Option<u64>; 4] = [None; 4];
            const FIELDS: [&str; 4] = ["nx", "ny", "ex", "ey"];
            while !cur.eat(&Tok::RBrace) {
                let (f, fs) = cur.word("`nx`, `ny`, `ex` or `ey`")?;
                let Some(k) = FIELDS.iter().position(|n| *n == f) else {
                    return Err(Fail::Diag(Diagnostic::error(
                        Code::UnexpectedToken,
                        fs,
                        format!("expected `nx`, `ny`, `ex` or `ey`, found `{f}`"),
                    )));
                };
                let (v, vs) = cur.int("a non-negative integer")?;
                if fields[k].replace(v).is_some() {
                    problems.push(Code::DuplicateEntry, fs, format!("`{f}` given twice"));
                }
                if k >= 2 && v == 0 {
                    problems.push(
                        Code::ZeroNotAllowed,
                        vs,
                        "ramification degrees must be positive",
                    );
                }
                if !cur.eat(&Tok::Semi) {
                    cur.expect(Tok::RBrace)?;
                    break;
                }
            }
            cur.eat(&Tok::Semi);
            let missing: Vec<&str> = FIELDS
                .iter()
                .zip(&fields)
                .filter(|(_, v)| v.is_none())
                .map(|(n, _)| *n)
                .collect();
            if !missing.is_empty() {
                problems.push(
                    Code::MissingEntry,
                    label_span,
                    format!("point `{label}` is missing {}", missing.join(", ")),
                );
                continue;
            }
            if records.iter().any(|r| r.label() == label) {
                problems.push(
                    Code::DuplicateLabel,
                    label_span,
                    format!("point `{label}` listed twice"),
                );
                continue;
            }
            let [n_x, n_y, e_x, e_y] = fields.map(Option::unwrap);
            if let Ok(r) = CorrLocalRecord::new(label, n_x, n_y, e_x, e_y) {
                records.push(r);
            }
        }
        Ok(records)
    }

    fn qpair(&mut self, cur: &mut Cursor<'_>, problems: &mut Problems) -> PResult<()> {
        let (name, name_span) = cur.name("a qpair name")?;
        self.claim(Kind::QPair, &name, name_span, problems);
        cur.expect(Tok::Eq)?;
        cur.expect(Tok::LParen)?;
        let (level, level_span) = cur.int("a level")?;
        cur.expect(Tok::Comma)?;
        let (pair, pair_span) = cur.name("a pair name")?;
        cur.expect(Tok::RParen)?;
        if level == 0 {
            problems.push(Code::ZeroNotAllowed, level_span, "level must be positive");
        }
        let p = self.resolve_pair(&pair, pair_span, problems);
        if !problems.0.is_empty() {
            return Ok(());
        }
        let q = QPair::new(level, p.expect("resolved")).expect("level checked");
        if let Err(e) = self.model.add_qpair(&name, &pair, q) {
            problems.push(Code::DuplicateName, name_span, e.to_string());
        }
        Ok(())
    }

    fn blowup(&mut self, cur: &mut Cursor<'_>, problems: &mut Problems) -> PResult<()> {
        let (name, name_span) = cur.name("a blowup name")?;
        self.claim(Kind::Blowup, &name, name_span, problems);
        cur.expect_word("on")?;
        let (pair, pair_span) = cur.name("a pair name")?;
        cur.expect_word("center")?;
        let open = cur.expect(Tok::LBrace)?;
        let mut center = Vec::new();
        while !cur.eat(&Tok::RBrace) {
            center.push(cur.name("a coordinate name")?);
            if !cur.eat(&Tok::Comma) {
                cur.expect(Tok::RBrace)?;
                break;
            }
        }
        if center.is_empty() {
            problems.push(Code::EmptyCenter, open, "blowup center is empty");
        }
        let Some(p) = self.resolve_pair(&pair, pair_span, problems) else {
            return Ok(());
        };
        let mut indices: Vec<usize> = Vec::new();
        for (c, span) in center {
            match p.chart().index_of(&c) {
                None => problems.push(
                    Code::UnknownCoordinate,
                    span,
                    format!("`{c}` is not a coordinate of `{pair}`"),
                ),
                Some(i) if indices.contains(&i) => problems.push(
                    Code::DuplicateEntry,
                    span,
                    format!("`{c}` repeated in center"),
                ),
                Some(i) => indices.push(i),
            }
        }
        if !problems.0.is_empty() {
            return Ok(());
        }
        let spec = BlowupSpec::new(p, indices).expect("center checked");
        if let Err(e) = self.model.add_blowup(&name, &pair, spec) {
            problems.push(Code::DuplicateName, name_span, e.to_string());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn codes(text: &str) -> Vec<&'static str> {
        parse(text)
            .unwrap_err()
            .iter()
            .map(|d| d.code.as_str())
            .collect()
    }

    #[test]
    fn single_pair() {
        let m = parse("pair X { dim 1; coords t; divisor { t: 1 } }").unwrap();
        let p = m.pair("X").unwrap();
        assert_eq!(p.chart().coords(), ["t"]);
        assert_eq!(p.divisor().mults(), &[1]);
    }

    #[test]
    fn map_matrix() {
        let m = parse(
            "pair X { dim 1; coords t; divisor { t: 1 } }\n\
             pair Y { dim 1; coords s; divisor { s: 3 } }\n\
             map f : X -> Y { s <- t^2 }",
        )
        .unwrap();
        assert_eq!(m.map("f").unwrap().map().expo(), &[vec![2]]);
    }

    #[test]
    fn repeated_factors_add_and_one_is_the_empty_monomial() {
        let m = parse(
            "pair X { coords a b }\npair Y { coords u v w }\n\
             map f : X -> Y { u <- a * a^2 * b; v <- 1; w <- b^4 }",
        )
        .unwrap();
        assert_eq!(
            m.map("f").unwrap().map().expo(),
            &[vec![3, 1], vec![0, 0], vec![0, 4]]
        );
    }

    #[test]
    fn monomial_corr() {
        let m = parse("corr C monomial(2, 3, 1, 1)").unwrap();
        let r = &m.corr("C").unwrap().records()[0];
        assert_eq!((*r.n_x(), *r.n_y(), *r.e_x(), *r.e_y()), (1, 1, 2, 3));
    }

    #[test]
    fn record_corr_and_warnings() {
        let text = "pair X { coords t; divisor { t: 1 } }\npair P { coords a b }\n\
                    corr C : X -> P { point w { nx 1; ny 1; ex 2; ey 3 } point 7 { ey 1; ex 1; ny 0; nx 0 } }";
        let out = parse_with_warnings(text);
        assert!(out.model.is_some());
        assert_eq!(out.diagnostics.len(), 1);
        assert_eq!(out.diagnostics[0].code, Code::NotACurve);
        let m = out.model.unwrap();
        assert_eq!(m.corr("C").unwrap().records()[1].label(), "7");
    }

    #[test]
    fn recovers_at_statement_boundaries() {
        let text = "pair X { coords t; divisor { t: } }\n\
                    pair Y { coords s }\n\
                    qpair Q = (0, Y)\n\
                    blowup B on Z center { s }";
        assert_eq!(codes(text), vec!["E003", "E017", "E011"]);
    }

    #[test]
    fn references_to_broken_declarations_still_fail() {
        let text = "pair X { coords t t }\nqpair Q = (2, X)";
        let d = parse(text).unwrap_err();
        assert_eq!(d.len(), 2);
        assert_eq!(d[0].code, Code::DuplicateCoordinate);
        assert_eq!(d[1].message, "pair `X` has errors");
    }

    #[test]
    fn missing_brace_does_not_swallow_the_next_statement() {
        let text = "pair X { coords t\npair Y { coords s }\nqpair Q = (2, Y)";
        let out = parse_with_warnings(text);
        assert_eq!(out.diagnostics.len(), 1);
        assert_eq!(out.diagnostics[0].code, Code::UnexpectedEof);
        assert_eq!(out.diagnostics[0].span.unwrap().line, 1);
    }

    #[test]
    fn reserved_names() {
        assert_eq!(codes("pair map { coords t }"), vec!["E021"]);
        assert_eq!(codes("pair X { coords a corr }"), vec!["E021"]);
    }

    #[test]
    fn stray_tokens_before_first_declaration() {
        assert_eq!(codes("hello world\npair X { coords t }"), vec!["E005"]);
    }

    #[test]
    fn empty_input_is_an_empty_model() {
        assert!(parse("").unwrap().is_empty());
        assert!(parse("  # only a comment\n").unwrap().is_empty());
    }
}
