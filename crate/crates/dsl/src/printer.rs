//! Canonical rendering of models. `parse(print(m)) == m` for every valid model.

use std::fmt::Write as _;

use modlog_core::CorrLocalRecord;
use modlog_core::{Chart, CurveCorr, Pair, PairMap};

use crate::model::{CorrForm, Decl, Model};

pub fn print(model: &Model) -> String {
    let mut out = String::new();
    for d in model.decls() {
        out.push_str(&print_decl(d));
        out.push('\n');
    }
    out
}

pub fn print_decl(decl: &Decl) -> String {
    match decl {
        Decl::Pair { name, pair } => format!("pair {name} {}", pair_body(pair)),
        Decl::Map {
            name,
            src,
            dst,
            map,
        } => format!("map {name} : {src} -> {dst} {}", map_body(map)),
        Decl::Corr {
            name,
            endpoints,
            form,
            corr,
        } => {
            let mut s = format!("corr {name}");
            if let Some((src, dst)) = endpoints {
                let _ = write!(s, " : {src} -> {dst}");
            }
            match (form, corr) {
                (CorrForm::Monomial { a, b, n_x, n_y }, _) => {
                    let _ = write!(s, " monomial({a}, {b}, {n_x}, {n_y})");
                }
                (_, CurveCorr::Constant { image_in_interior }) => {
                    let which = if *image_in_interior {
                        "interior"
                    } else {
                        "boundary"
                    };
                    let _ = write!(s, " constant({which})");
                }
                (_, CurveCorr::NonConstant(records)) => {
                    s.push_str(" {");
                    for r in records {
                        s.push_str("\n  ");
                        s.push_str(&point(r));
                    }
                    s.push_str(if records.is_empty() { "}" } else { "\n}" });
                }
            }
            s
        }
        Decl::QPair { name, pair, qpair } => format!("qpair {name} = ({}, {pair})", qpair.level()),
        Decl::Blowup { name, pair, spec } => {
            let coords = spec.pair().chart().coords();
            let center: Vec<&str> = spec.center().iter().map(|&i| coords[i].as_str()).collect();
            format!("blowup {name} on {pair} center {{ {} }}", center.join(", "))
        }
    }
}

fn point(r: &CorrLocalRecord) -> String {
    format!(
        "point {} {{ nx {}; ny {}; ex {}; ey {} }}",
        r.label(),
        r.n_x(),
        r.n_y(),
        r.e_x(),
        r.e_y()
    )
}

/// `{ dim d; coords ...; divisor { ... } }`
pub fn pair_body(pair: &Pair) -> String {
    let coords = pair.chart().coords().join(" ");
    let sep = if coords.is_empty() { "" } else { " " };
    format!(
        "{{ dim {}; coords{sep}{coords}; divisor {} }}",
        pair.dim(),
        divisor_block(pair)
    )
}

/// The divisor as written inside a pair: `{ t: 1 }`, or `{ }` when zero.
fn divisor_block(pair: &Pair) -> String {
    let text = pair.render_divisor();
    let inner = &text[1..text.len() - 1];
    if inner.is_empty() {
        "{ }".to_string()
    } else {
        format!("{{ {inner} }}")
    }
}

pub fn monomial(source: &Chart, row: &[u64]) -> String {
    let factors: Vec<String> = source
        .coords()
        .iter()
        .zip(row)
        .filter(|(_, &e)| e > 0)
        .map(|(c, &e)| {
            if e == 1 {
                c.clone()
            } else {
                format!("{c}^{e}")
            }
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join(" * ")
    }
}

/// One `y <- monomial` line per target coordinate.
pub fn assignments(map: &PairMap) -> Vec<String> {
    let m = map.map();
    m.target()
        .coords()
        .iter()
        .zip(m.expo())
        .map(|(y, row)| format!("{y} <- {}", monomial(m.source(), row)))
        .collect()
}

fn map_body(map: &PairMap) -> String {
    let lines = assignments(map);
    if lines.is_empty() {
        "{ }".to_string()
    } else {
        format!("{{ {} }}", lines.join("; "))
    }
}
