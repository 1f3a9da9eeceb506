//! Tokenizer. Invalid characters and oversized integers become
//! [`Tok::Bad`] tokens with a diagnostic, so the parser can keep going.

use crate::diagnostic::{Code, Diagnostic, Span};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(u64),
    LBrace,
    RBrace,
    LParen,
    RParen,
    Semi,
    Colon,
    Comma,
    Arrow,
    LArrow,
    Caret,
    Star,
    Eq,
    Bad,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::LArrow => "`<-`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Star => "`*`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Bad => "invalid token".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub span: Span,
}

pub fn lex(text: &str) -> (Vec<Token>, Vec<Diagnostic>) {
    let mut tokens = Vec::new();
    let mut diags = Vec::new();
    let mut chars = text.char_indices().peekable();
    let mut line = 1;
    let mut line_start = 0;

    while let Some(&(start, c)) = chars.peek() {
        let column = text[line_start..start].chars().count() + 1;
        let span_to = |end: usize| Span {
            offset: start,
            line,
            column,
            len: end - start,
        };
        if c == '\n' {
            chars.next();
            line += 1;
            line_start = start + 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c == '#' {
            while let Some(&(_, c)) = chars.peek() {
                if c == '\n' {
                    break;
                }
                chars.next();
            }
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut end = start;
            while let Some(&(i, c)) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    end = i + c.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            tokens.push(Token {
                tok: Tok::Ident(text[start..end].to_string()),
                span: span_to(end),
            });
            continue;
        }
        if c.is_ascii_digit() {
            let mut end = start;
            while let Some(&(i, c)) = chars.peek() {
                if c.is_ascii_digit() {
                    end = i + 1;
                    chars.next();
                } else {
                    break;
                }
            }
            let span = span_to(end);
            let tok = match text[start..end].parse::<u64>() {
                Ok(n) => Tok::Int(n),
                Err(_) => {
                    diags.push(Diagnostic::error(
                        Code::IntegerTooLarge,
                        span,
                        format!("integer `{}` does not fit in 64 bits", &text[start..end]),
                    ));
                    Tok::Bad
                }
            };
            tokens.push(Token { tok, span });
            continue;
        }
        chars.next();
        let next = chars.peek().map(|&(_, c)| c);
        let (tok, width) = match (c, next) {
            ('-', Some('>')) => (Tok::Arrow, 2),
            ('<', Some('-')) => (Tok::LArrow, 2),
            ('{', _) => (Tok::LBrace, 1),
            ('}', _) => (Tok::RBrace, 1),
            ('(', _) => (Tok::LParen, 1),
            (')', _) => (Tok::RParen, 1),
            (';', _) => (Tok::Semi, 1),
            (':', _) => (Tok::Colon, 1),
            (',', _) => (Tok::Comma, 1),
            ('^', _) => (Tok::Caret, 1),
            ('*', _) => (Tok::Star, 1),
            ('=', _) => (Tok::Eq, 1),
            _ => (Tok::Bad, c.len_utf8()),
        };
        if width == 2 {
            chars.next();
        }
        let span = span_to(start + width);
        if tok == Tok::Bad {
            diags.push(Diagnostic::error(
                Code::UnexpectedChar,
                span,
                format!("unexpected character `{c}`"),
            ));
        }
        tokens.push(Token { tok, span });
    }
    (tokens, diags)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<Tok> {
        lex(s).0.into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn punctuation_and_words() {
        assert_eq!(
            toks("map f : X -> Y { s <- t^2 * u }"),
            vec![
                Tok::Ident("map".into()),
                Tok::Ident("f".into()),
                Tok::Colon,
                Tok::Ident("X".into()),
                Tok::Arrow,
                Tok::Ident("Y".into()),
                Tok::LBrace,
                Tok::Ident("s".into()),
                Tok::LArrow,
                Tok::Ident("t".into()),
                Tok::Caret,
                Tok::Int(2),
                Tok::Star,
                Tok::Ident("u".into()),
                Tok::RBrace,
            ]
        );
    }

    #[test]
    fn comments_and_positions() {
        let (t, d) = lex("# header\n  pair # trailing\nX");
        assert!(d.is_empty());
        assert_eq!(
            t[0].span,
            Span {
                offset: 11,
                line: 2,
                column: 3,
                len: 4
            }
        );
        assert_eq!(
            t[1].span,
            Span {
                offset: 27,
                line: 3,
                column: 1,
                len: 1
            }
        );
    }

    #[test]
    fn bad_input_is_reported_and_skipped() {
        let (t, d) = lex("a $ 99999999999999999999999 b");
        assert_eq!(t.len(), 4);
        assert_eq!(t[1].tok, Tok::Bad);
        assert_eq!(t[2].tok, Tok::Bad);
        assert_eq!(d.len(), 2);
        assert_eq!(d[0].code, Code::UnexpectedChar);
        assert_eq!(d[1].code, Code::IntegerTooLarge);
        // A lone `-` or `<` is not an arrow.
        assert_eq!(toks("- <"), vec![Tok::Bad, Tok::Bad]);
    }
}
