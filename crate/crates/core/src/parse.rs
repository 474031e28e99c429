//! The line-oriented `.alg` table format and its change-of-basis sibling.
//!
//! ```text
//! algebra sl2
//! dim 3
//! basis e h f
//! [e,h] = 2*e
//! [e,f] = h
//! ...
//! ```
//!
//! An optional `params NAME+` line may precede `basis`. Product lines are
//! `[NAME,NAME] = EXPR` where `EXPR` is `0` or a sum of terms
//! `[coefficient*][monomial*]symbol`, e.g. `-1/2*a*b*x2`. Whitespace inside
//! a product line is ignored and `#` starts a comment. Unlisted products
//! are zero.
//!
//! Change-of-basis files use `change NAME` as the first line and
//! `new NAME = EXPR` lines expressing a new basis vector in the old basis.
//! Unlisted basis vectors are kept.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::algebra::{AlgebraTable, Element};
use crate::analysis::BasisChange;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalars::{is_identifier, parse_scalar_factors, split_signed_terms, Polynomial};

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(idx, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((idx + 1, line))
    })
}

struct Header {
    kind_name: String,
    params: Vec<String>,
    basis: Vec<String>,
}

/// Parses `KEYWORD NAME / dim N / [params ...] / basis ...` and returns the
/// header with the remaining body lines.
fn parse_header<'a>(
    text: &'a str,
    keyword: &str,
) -> Result<(Header, Vec<(usize, &'a str)>)> {
    let mut lines = content_lines(text).peekable();
    let mut last_line = 0;
    let mut next_header = |expect: &str| -> Result<(usize, Vec<&'a str>)> {
        let (n, line) = lines
            .next()
            .ok_or_else(|| err(last_line + 1, format!("missing `{expect}` line")))?;
        last_line = n;
        Ok((n, line.split_whitespace().collect()))
    };

    let (n, words) = next_header(keyword)?;
    if words.first() != Some(&keyword) || words.len() != 2 {
        return Err(err(n, format!("expected `{keyword} NAME`")));
    }
    let kind_name = words[1].to_string();

    let (n, words) = next_header("dim")?;
    let dim: usize = match words.as_slice() {
        ["dim", d] => d.parse().map_err(|_| err(n, format!("bad dimension `{d}`")))?,
        _ => return Err(err(n, "expected `dim INT`")),
    };
    if dim == 0 {
        return Err(err(n, "dimension must be positive"));
    }

    let (mut n, mut words) = next_header("basis")?;
    let mut params = Vec::new();
    if words.first() == Some(&"params") {
        params = words[1..].iter().map(|s| s.to_string()).collect();
        if params.is_empty() {
            return Err(err(n, "`params` needs at least one name"));
        }
        (n, words) = next_header("basis")?;
    }
    if words.first() != Some(&"basis") {
        return Err(err(n, "expected `basis NAME+`"));
    }
    let basis: Vec<String> = words[1..].iter().map(|s| s.to_string()).collect();
    if basis.len() != dim {
        return Err(err(
            n,
            format!("dim {dim} but {} basis symbols", basis.len()),
        ));
    }
    let mut seen = BTreeSet::new();
    for s in basis.iter().chain(&params) {
        if !is_identifier(s) {
            return Err(err(n, format!("bad symbol name `{s}`")));
        }
        if !seen.insert(s.as_str()) {
            return Err(err(n, format!("symbol `{s}` declared twice")));
        }
    }
    let body = lines.collect();
    Ok((
        Header {
            kind_name,
            params,
            basis,
        },
        body,
    ))
}

/// Parses `EXPR` over `basis` with coefficients in `params`.
fn parse_expr(expr: &str, basis: &[String], params: &[String]) -> std::result::Result<Element, String> {
    let mut out = Element::zero(basis.len());
    if expr == "0" {
        return Ok(out);
    }
    for (negative, body) in split_signed_terms(expr)? {
        let factors: Vec<&str> = body.split('*').collect();
        let (symbol, scalar) = factors.split_last().expect("split yields one piece");
        let idx = basis
            .iter()
            .position(|b| b == symbol)
            .ok_or_else(|| format!("term `{body}` must end with a basis symbol"))?;
        let (c, mono) = parse_scalar_factors(scalar)?;
        if let Some((p, _)) = mono.factors().iter().find(|(p, _)| !params.contains(p)) {
            return Err(format!("unknown symbol `{p}`"));
        }
        let c = if negative { -c } else { c };
        let mut coord = out.coord(idx).clone();
        coord += &Polynomial::term(c, mono);
        out.set_coord(idx, coord);
    }
    Ok(out)
}

/// Parses an element expression such as `2*e - l*x0` over the basis of `t`.
pub fn parse_element(t: &AlgebraTable, text: &str) -> Result<Element> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    parse_expr(&compact, t.basis(), t.params()).map_err(|m| err(0, m))
}

/// Parses an `.alg` document.
pub fn parse_algebra(text: &str) -> Result<AlgebraTable> {
    let (header, body) = parse_header(text, "algebra")?;
    let mut table = AlgebraTable::new(header.kind_name, header.basis, header.params)?;
    let mut seen = BTreeSet::new();
    for (n, line) in body {
        let compact: String = line.chars().filter(|c| !c.is_whitespace()).collect();
        let (lhs, rhs) = compact
            .split_once('=')
            .ok_or_else(|| err(n, "expected `[NAME,NAME] = EXPR`"))?;
        let pair = lhs
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .and_then(|s| s.split_once(','))
            .ok_or_else(|| err(n, format!("bad product `{lhs}`")))?;
        let i = table
            .index_of(pair.0)
            .ok_or_else(|| err(n, format!("unknown symbol `{}`", pair.0)))?;
        let j = table
            .index_of(pair.1)
            .ok_or_else(|| err(n, format!("unknown symbol `{}`", pair.1)))?;
        if !seen.insert((i, j)) {
            return Err(err(n, format!("duplicate product [{},{}]", pair.0, pair.1)));
        }
        let value = parse_expr(rhs, table.basis(), table.params()).map_err(|m| err(n, m))?;
        table.set_product(i, j, value).map_err(|e| err(n, e.to_string()))?;
    }
    Ok(table)
}

fn write_header(out: &mut String, keyword: &str, name: &str, params: &[String], basis: &[String]) {
    let _ = writeln!(out, "{keyword} {name}");
    let _ = writeln!(out, "dim {}", basis.len());
    if !params.is_empty() {
        let _ = writeln!(out, "params {}", params.join(" "));
    }
    let _ = writeln!(out, "basis {}", basis.join(" "));
}

/// Canonical text: header, then nonzero products in basis-index order.
pub fn serialize_algebra(t: &AlgebraTable) -> String {
    let mut out = String::new();
    write_header(&mut out, "algebra", t.name(), t.params(), t.basis());
    for i in 0..t.dim() {
        for j in 0..t.dim() {
            let v = t.product(i, j);
            if !v.is_zero() {
                let _ = writeln!(
                    out,
                    "[{},{}] = {}",
                    t.basis()[i],
                    t.basis()[j],
                    v.display(t.basis())
                );
            }
        }
    }
    out
}

/// Parses a change-of-basis document.
pub fn parse_change(text: &str) -> Result<BasisChange> {
    let (header, body) = parse_header(text, "change")?;
    let dim = header.basis.len();
    let mut matrix = Matrix::identity(dim);
    let mut seen = BTreeSet::new();
    for (n, line) in body {
        let rest = line
            .strip_prefix("new")
            .filter(|r| r.starts_with(char::is_whitespace))
            .ok_or_else(|| err(n, "expected `new NAME = EXPR`"))?;
        let compact: String = rest.chars().filter(|c| !c.is_whitespace()).collect();
        let (name, rhs) = compact
            .split_once('=')
            .ok_or_else(|| err(n, "expected `new NAME = EXPR`"))?;
        let i = header
            .basis
            .iter()
            .position(|b| b == name)
            .ok_or_else(|| err(n, format!("unknown symbol `{name}`")))?;
        if !seen.insert(i) {
            return Err(err(n, format!("duplicate row for `{name}`")));
        }
        let row = parse_expr(rhs, &header.basis, &header.params).map_err(|m| err(n, m))?;
        for (c, x) in row.coords().iter().enumerate() {
            matrix.set(i, c, x.clone());
        }
    }
    BasisChange::new(header.kind_name, header.basis, header.params, matrix)
}

/// Canonical text for a change of basis; identity rows are omitted.
pub fn serialize_change(c: &BasisChange) -> String {
    let mut out = String::new();
    write_header(&mut out, "change", c.name(), c.params(), c.basis());
    let dim = c.basis().len();
    for i in 0..dim {
        let row = Element::from_coords(c.matrix().row(i).to_vec());
        if row != Element::basis(dim, i) {
            let _ = writeln!(out, "new {} = {}", c.basis()[i], row.display(c.basis()));
        }
    }
    out
}
