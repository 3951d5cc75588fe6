//! Text grammar for monomials and polynomials, and the three file formats:
//! monoid presentations, coefficient series, and subalgebra presentations.
//!
//! The grammar is documented in `docs/formats.md`. Two variable styles are
//! accepted: named single letters drawn from x, y, z (slots fixed as
//! x -> 1, y -> 2, z -> 3) and indexed names x1, x2, ... Mixing styles in
//! one file is an error. Printing is canonical, so parsing a printed value
//! reproduces it exactly.
//!
//! Parse errors carry 1-based line and column numbers.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::monoid::MonoidPresentation;
use crate::monomial::{Coeff, ExponentVector, MonomialOrder, Polynomial, WeightVector};
use crate::sagbi::SubalgebraPresentation;
use crate::series::GradedSeries;

/// Variable names in slot order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarTable {
    names: Vec<String>,
}

impl VarTable {
    /// x, y, z for up to three variables; x1..xn beyond that.
    pub fn default_names(n: usize) -> Self {
        let names = if n <= 3 {
            ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
        } else {
            (1..=n).map(|i| format!("x{i}")).collect()
        };
        Self { names }
    }

    pub fn from_names(names: Vec<String>) -> Result<Self> {
        for (i, name) in names.iter().enumerate() {
            let ok = !name.is_empty()
                && name.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && name.chars().all(|c| c.is_ascii_alphanumeric());
            if !ok {
                return Err(Error::Parse {
                    line: 0,
                    column: 0,
                    message: format!("invalid variable name `{name}`"),
                });
            }
            if names[..i].contains(name) {
                return Err(Error::Parse {
                    line: 0,
                    column: 0,
                    message: format!("duplicate variable name `{name}`"),
                });
            }
        }
        Ok(Self { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

struct Lexer<'a> {
    bytes: &'a [u8],
    pos: usize,
    line: usize,
}

impl<'a> Lexer<'a> {
    fn new(s: &'a str, line: usize) -> Self {
        Self {
            bytes: s.as_bytes(),
            pos: 0,
            line,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.pos + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn eat(&mut self, expected: u8) -> bool {
        if self.peek() == Some(expected) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn take_ident(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        if !self
            .bytes
            .get(self.pos)
            .is_some_and(u8::is_ascii_alphabetic)
        {
            return Err(self.error("expected a variable name"));
        }
        while self
            .bytes
            .get(self.pos)
            .is_some_and(u8::is_ascii_alphanumeric)
        {
            self.pos += 1;
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii"))
    }

    fn take_nat(&mut self) -> Result<BigUint> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii");
        text.parse::<BigUint>()
            .map_err(|e| self.error(format!("bad number: {e}")))
    }

    fn take_small_nat(&mut self) -> Result<u32> {
        let n = self.take_nat()?;
        u32::try_from(&n).map_err(|_| self.error("exponent too large"))
    }
}

/// Parse one monomial, e.g. `x*y^2` or `x1^2*x3` or `1`.
pub fn parse_monomial(s: &str, vars: &VarTable, line: usize) -> Result<ExponentVector> {
    let mut lex = Lexer::new(s, line);
    let m = monomial_body(&mut lex, vars)?;
    if !lex.at_end() {
        return Err(lex.error("unexpected trailing input after monomial"));
    }
    Ok(m)
}

fn monomial_body(lex: &mut Lexer<'_>, vars: &VarTable) -> Result<ExponentVector> {
    let mut exps = vec![0u32; vars.len()];
    if lex.peek() == Some(b'1') {
        lex.bump();
        return Ok(ExponentVector::new(exps));
    }
    loop {
        let start_col = {
            lex.skip_ws();
            lex.pos + 1
        };
        let name = lex.take_ident()?;
        let Some(slot) = vars.index_of(name) else {
            return Err(Error::Parse {
                line: lex.line,
                column: start_col,
                message: format!("unknown variable `{name}`"),
            });
        };
        let e = if lex.eat(b'^') { lex.take_small_nat()? } else { 1 };
        exps[slot] = exps[slot]
            .checked_add(e)
            .ok_or_else(|| lex.error("exponent overflow"))?;
        if !lex.eat(b'*') {
            break;
        }
    }
    Ok(ExponentVector::new(exps))
}

/// Parse a polynomial, e.g. `x^2*y - 3/2*x*y^2 + y^3`.
pub fn parse_polynomial(s: &str, vars: &VarTable, line: usize) -> Result<Polynomial> {
    let mut lex = Lexer::new(s, line);
    let mut poly = Polynomial::zero(vars.len());
    let mut first = true;
    loop {
        let sign = if lex.eat(b'-') {
            -1
        } else if lex.eat(b'+') || first {
            1
        } else if lex.at_end() {
            break;
        } else {
            return Err(lex.error("expected `+` or `-` between terms"));
        };
        if first && lex.at_end() {
            return Err(lex.error("empty polynomial"));
        }
        first = false;

        let (coeff, monomial) = term_body(&mut lex, vars)?;
        let signed = if sign < 0 { -coeff } else { coeff };
        poly = poly.add(&Polynomial::term(vars.len(), monomial, signed))?;
        if lex.at_end() {
            break;
        }
    }
    Ok(poly)
}

fn term_body(lex: &mut Lexer<'_>, vars: &VarTable) -> Result<(Coeff, ExponentVector)> {
    match lex.peek() {
        Some(c) if c.is_ascii_digit() => {
            let numer = lex.take_nat()?;
            let denom = if lex.eat(b'/') { lex.take_nat()? } else { BigUint::one() };
            let coeff = BigRational::new(BigInt::from(numer), BigInt::from(denom));
            if lex.eat(b'*') {
                Ok((coeff, monomial_body(lex, vars)?))
            } else {
                Ok((coeff, ExponentVector::one(vars.len())))
            }
        }
        Some(_) => Ok((Coeff::one(), monomial_body(lex, vars)?)),
        None => Err(lex.error("expected a term")),
    }
}

/// Canonical monomial printing: factors in slot order, `1` for the empty
/// monomial, exponents above 1 written with `^`.
pub fn format_monomial(m: &ExponentVector, vars: &VarTable) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars.name(i).to_string()),
            _ => parts.push(format!("{}^{e}", vars.name(i))),
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Canonical polynomial printing: terms descending in the given order,
/// coefficients of magnitude 1 omitted on non-constant monomials.
pub fn format_polynomial(p: &Polynomial, vars: &VarTable, ord: &MonomialOrder) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<(&ExponentVector, &Coeff)> = p.terms().collect();
    terms.sort_by(|a, b| ord.cmp_vectors(b.0, a.0));
    let mut out = String::new();
    for (i, (m, c)) in terms.iter().enumerate() {
        let negative = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if m.is_one() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&format_monomial(m, vars));
        } else {
            out.push_str(&format!("{mag}*{}", format_monomial(m, vars)));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// line-structured files

struct FileLines<'a> {
    lines: Vec<(usize, &'a str)>,
    cursor: usize,
}

impl<'a> FileLines<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| {
                let body = match l.find('#') {
                    Some(p) => &l[..p],
                    None => l,
                };
                (i + 1, body.trim())
            })
            .filter(|(_, l)| !l.is_empty())
            .collect();
        Self { lines, cursor: 0 }
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.lines.get(self.cursor).copied()
    }

    fn next(&mut self) -> Option<(usize, &'a str)> {
        let item = self.peek()?;
        self.cursor += 1;
        Some(item)
    }

    fn rest(&self) -> &[(usize, &'a str)] {
        &self.lines[self.cursor..]
    }

    /// Consume `key: value` if the next line starts with the key.
    fn header(&mut self, key: &str) -> Option<(usize, &'a str)> {
        let (line, body) = self.peek()?;
        let rest = body.strip_prefix(key)?.strip_prefix(':')?;
        self.cursor += 1;
        Some((line, rest.trim()))
    }
}

/// Infer the variable table from the identifiers used in a set of lines.
///
/// All identifiers must be drawn from {x, y, z} (named style) or all of the
/// form x<k> with k >= 1 (indexed style).
fn infer_variables(lines: &[(usize, &str)]) -> Result<VarTable> {
    let mut idents: Vec<(usize, usize, String)> = Vec::new();
    for &(line, body) in lines {
        let bytes = body.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            if bytes[i].is_ascii_alphabetic() {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                idents.push((line, start + 1, body[start..i].to_string()));
            } else {
                i += 1;
            }
        }
    }
    if idents.is_empty() {
        return Ok(VarTable::default_names(0));
    }
    let named = idents.iter().all(|(_, _, s)| matches!(s.as_str(), "x" | "y" | "z"));
    if named {
        let n = idents
            .iter()
            .map(|(_, _, s)| match s.as_str() {
                "x" => 1,
                "y" => 2,
                _ => 3,
            })
            .max()
            .unwrap_or(0);
        return Ok(VarTable::default_names(n));
    }
    let mut max_index = 0usize;
    for (line, column, s) in &idents {
        let index = s
            .strip_prefix('x')
            .and_then(|t| t.parse::<usize>().ok())
            .filter(|&k| k >= 1);
        match index {
            Some(k) => max_index = max_index.max(k),
            None => {
                return Err(Error::Parse {
                    line: *line,
                    column: *column,
                    message: format!(
                        "variable `{s}` needs a `vars:` header (inference accepts x/y/z or x1, x2, ...)"
                    ),
                })
            }
        }
    }
    VarTable::from_names((1..=max_index).map(|i| format!("x{i}")).collect())
}

fn parse_name_list(s: &str, line: usize) -> Result<VarTable> {
    let names: Vec<String> = s.split_whitespace().map(str::to_string).collect();
    VarTable::from_names(names).map_err(|e| match e {
        Error::Parse { message, .. } => Error::Parse {
            line,
            column: 1,
            message,
        },
        other => other,
    })
}

fn parse_u32_list(s: &str, line: usize) -> Result<Vec<u32>> {
    s.split_whitespace()
        .map(|tok| {
            tok.parse::<u32>().map_err(|_| Error::Parse {
                line,
                column: 1,
                message: format!("bad integer `{tok}`"),
            })
        })
        .collect()
}

/// Parse a plain-text rational matrix: one row per line, entries separated
/// by whitespace, written as integers or `p/q` fractions; `#` comments.
pub fn parse_matrix_file(text: &str) -> Result<crate::linalg::RationalMatrix> {
    let lines = FileLines::new(text);
    let mut rows = Vec::new();
    for &(line, body) in lines.rest() {
        let row: Vec<BigRational> = body
            .split_whitespace()
            .map(|tok| {
                tok.parse::<BigRational>().map_err(|_| Error::Parse {
                    line,
                    column: 1,
                    message: format!("bad matrix entry `{tok}`"),
                })
            })
            .collect::<Result<_>>()?;
        rows.push(row);
    }
    crate::linalg::RationalMatrix::from_rows(rows)
}

/// Canonical matrix text: integers stay bare, other entries print as `p/q`.
pub fn format_matrix_file(m: &crate::linalg::RationalMatrix) -> String {
    let mut out = String::new();
    for r in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|c| m.get(r, c).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parse a monoid presentation: optional `vars:`/`weights:` headers, then
/// one generator monomial per line.
pub fn parse_monoid_file(text: &str) -> Result<(MonoidPresentation, VarTable)> {
    let mut lines = FileLines::new(text);
    let vars = match lines.header("vars") {
        Some((line, body)) => Some(parse_name_list(body, line)?),
        None => None,
    };
    let weights_raw = match lines.header("weights") {
        Some((line, body)) => Some((line, parse_u32_list(body, line)?)),
        None => None,
    };
    let vars = match vars {
        Some(v) => v,
        None => infer_variables(lines.rest())?,
    };
    let weights = match weights_raw {
        Some((line, w)) => {
            if w.len() != vars.len() {
                return Err(Error::Parse {
                    line,
                    column: 1,
                    message: format!(
                        "weights list has {} entries for {} variables",
                        w.len(),
                        vars.len()
                    ),
                });
            }
            WeightVector::new(w)?
        }
        None => WeightVector::ones(vars.len()),
    };
    let mut generators = Vec::new();
    while let Some((line, body)) = lines.next() {
        generators.push(parse_monomial(body, &vars, line)?);
    }
    let m = MonoidPresentation::new(vars.len(), weights, generators)?;
    Ok((m, vars))
}

/// Canonical monoid file with explicit headers.
pub fn format_monoid_file(m: &MonoidPresentation, vars: &VarTable) -> String {
    let mut out = String::new();
    out.push_str("vars:");
    for i in 0..vars.len() {
        out.push(' ');
        out.push_str(vars.name(i));
    }
    out.push('\n');
    out.push_str("weights:");
    for w in m.weights().weights() {
        out.push_str(&format!(" {w}"));
    }
    out.push('\n');
    for g in m.generators() {
        out.push_str(&format_monomial(g, vars));
        out.push('\n');
    }
    out
}

/// Parse a series file: one non-negative integer coefficient per line,
/// `#` starts a comment.
pub fn parse_series_file(text: &str) -> Result<GradedSeries> {
    let lines = FileLines::new(text);
    let mut coeffs = Vec::new();
    for &(line, body) in lines.rest() {
        let value = body.parse::<BigInt>().map_err(|_| Error::Parse {
            line,
            column: 1,
            message: format!("bad coefficient `{body}`"),
        })?;
        coeffs.push(value);
    }
    GradedSeries::from_coeffs(coeffs)
}

pub fn format_series_file(h: &GradedSeries) -> String {
    let mut out = String::new();
    for c in h.coeffs() {
        out.push_str(&c.to_string());
        out.push('\n');
    }
    out
}

fn parse_order(spec: &str, vars: usize, line: usize) -> Result<MonomialOrder> {
    let spec = spec.trim();
    if spec == "lex" {
        return Ok(MonomialOrder::lex(vars));
    }
    if spec == "grlex" {
        return Ok(MonomialOrder::grlex(vars));
    }
    if let Some(rows_text) = spec.strip_prefix("matrix") {
        let mut rows = Vec::new();
        for row_text in rows_text.split(';') {
            let row: Vec<i64> = row_text
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<i64>().map_err(|_| Error::Parse {
                        line,
                        column: 1,
                        message: format!("bad matrix entry `{tok}`"),
                    })
                })
                .collect::<Result<_>>()?;
            if !row.is_empty() {
                rows.push(row);
            }
        }
        return MonomialOrder::from_rows(vars, rows);
    }
    Err(Error::Parse {
        line,
        column: 1,
        message: format!("unknown order `{spec}` (expected lex, grlex, or matrix ...)"),
    })
}

fn format_order(ord: &MonomialOrder) -> String {
    let user = ord.user_rows();
    if user.is_empty() {
        return "lex".into();
    }
    if user.len() == 1 && user[0].iter().all(|&v| v == 1) {
        return "grlex".into();
    }
    let rows: Vec<String> = user
        .iter()
        .map(|r| {
            r.iter()
                .map(i64::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    format!("matrix {}", rows.join("; "))
}

/// Parse a subalgebra presentation:
///
/// ```text
/// vars: x y z
/// weights: 1 1 1        # optional, defaults to all ones
/// order: matrix 1 1 0   # or lex / grlex; defaults to grlex
/// generators:
/// x + y + z
/// x*y
/// x*y^2
/// ```
pub fn parse_subalgebra_file(text: &str) -> Result<(SubalgebraPresentation, VarTable)> {
    let mut lines = FileLines::new(text);
    let Some((vline, vbody)) = lines.header("vars") else {
        let (line, _) = lines.peek().unwrap_or((1, ""));
        return Err(Error::Parse {
            line,
            column: 1,
            message: "subalgebra files start with a `vars:` header".into(),
        });
    };
    let vars = parse_name_list(vbody, vline)?;
    let weights = match lines.header("weights") {
        Some((line, body)) => {
            let w = parse_u32_list(body, line)?;
            if w.len() != vars.len() {
                return Err(Error::Parse {
                    line,
                    column: 1,
                    message: format!(
                        "weights list has {} entries for {} variables",
                        w.len(),
                        vars.len()
                    ),
                });
            }
            WeightVector::new(w)?
        }
        None => WeightVector::ones(vars.len()),
    };
    let order = match lines.header("order") {
        Some((line, body)) => parse_order(body, vars.len(), line)?,
        None => MonomialOrder::grlex(vars.len()),
    };
    match lines.next() {
        Some((_, "generators:")) => {}
        Some((line, other)) => {
            return Err(Error::Parse {
                line,
                column: 1,
                message: format!("expected `generators:`, found `{other}`"),
            })
        }
        None => {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: "missing `generators:` section".into(),
            })
        }
    }
    let mut generators = Vec::new();
    while let Some((line, body)) = lines.next() {
        generators.push(parse_polynomial(body, &vars, line)?);
    }
    let s = SubalgebraPresentation::new(vars.len(), weights, generators, order)?;
    Ok((s, vars))
}

/// Canonical subalgebra file.
pub fn format_subalgebra_file(s: &SubalgebraPresentation, vars: &VarTable) -> String {
    let mut out = String::new();
    out.push_str("vars:");
    for i in 0..vars.len() {
        out.push(' ');
        out.push_str(vars.name(i));
    }
    out.push('\n');
    out.push_str("weights:");
    for w in s.weights().weights() {
        out.push_str(&format!(" {w}"));
    }
    out.push('\n');
    out.push_str(&format!("order: {}\n", format_order(s.order())));
    out.push_str("generators:\n");
    for g in s.generators() {
        out.push_str(&format_polynomial(g, vars, s.order()));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(exps: &[u32]) -> ExponentVector {
        ExponentVector::new(exps.to_vec())
    }

    #[test]
    fn monomial_grammar_round_trips() {
        let vars = VarTable::default_names(3);
        for text in ["1", "x", "x*y^2", "x^2*z", "y^7"] {
            let m = parse_monomial(text, &vars, 1).unwrap();
            assert_eq!(format_monomial(&m, &vars), text);
        }
    }

    #[test]
    fn indexed_monomials_parse() {
        let vars = VarTable::default_names(4);
        let m = parse_monomial("x1^2*x3", &vars, 1).unwrap();
        assert_eq!(m, ev(&[2, 0, 1, 0]));
        assert_eq!(format_monomial(&m, &vars), "x1^2*x3");
    }

    #[test]
    fn monomial_errors_carry_position() {
        let vars = VarTable::default_names(2);
        let err = parse_monomial("x*w", &vars, 7).unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 7,
                column: 3,
                message: "unknown variable `w`".into()
            }
        );
    }

    #[test]
    fn polynomial_grammar_round_trips() {
        let vars = VarTable::default_names(2);
        let ord = MonomialOrder::grlex(2);
        for text in [
            "x + y",
            "x^2*y - 3/2*x*y^2 + y^3",
            "-x + 2*y",
            "5",
            "x^2 - 1",
        ] {
            let p = parse_polynomial(text, &vars, 1).unwrap();
            let printed = format_polynomial(&p, &vars, &ord);
            assert_eq!(printed, text);
            assert_eq!(parse_polynomial(&printed, &vars, 1).unwrap(), p);
        }
    }

    #[test]
    fn polynomial_collects_like_terms() {
        let vars = VarTable::default_names(2);
        let p = parse_polynomial("x + x - y + y", &vars, 1).unwrap();
        assert_eq!(p.num_terms(), 1);
        assert_eq!(p.coeff_of(&ev(&[1, 0])), Coeff::from(BigInt::from(2)));
    }

    #[test]
    fn monoid_file_round_trips() {
        let text = "vars: x y\nweights: 1 1\nx\nx*y\nx*y^2\n";
        let (m, vars) = parse_monoid_file(text).unwrap();
        assert_eq!(m.generators().len(), 3);
        assert_eq!(format_monoid_file(&m, &vars), text);
    }

    #[test]
    fn monoid_file_infers_named_variables() {
        let (m, vars) = parse_monoid_file("# staircase\nx\nx*y\n").unwrap();
        assert_eq!(vars.len(), 2);
        assert_eq!(m.generators(), &[ev(&[1, 0]), ev(&[1, 1])]);
    }

    #[test]
    fn monoid_file_infers_indexed_variables() {
        let (m, _) = parse_monoid_file("x1\nx5^2\n").unwrap();
        assert_eq!(m.vars(), 5);
        assert_eq!(m.generators()[1].exp(4), 2);
    }

    #[test]
    fn series_file_round_trips() {
        let text = "1\n1\n2\n3\n";
        let h = parse_series_file("# head\n1\n1\n2\n3\n").unwrap();
        assert_eq!(format_series_file(&h), text);
    }

    #[test]
    fn series_file_rejects_garbage_with_position() {
        let err = parse_series_file("1\nbanana\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn subalgebra_file_round_trips() {
        let text = "vars: x y z\nweights: 1 1 1\norder: matrix 1 1 0\ngenerators:\nx + y + z\nx*y\nx*y^2\n";
        let (s, vars) = parse_subalgebra_file(text).unwrap();
        assert_eq!(s.generators().len(), 3);
        assert_eq!(s.generator_degrees(), &[1, 2, 3]);
        assert_eq!(format_subalgebra_file(&s, &vars), text);
    }

    #[test]
    fn subalgebra_file_named_orders_round_trip() {
        for order in ["lex", "grlex"] {
            let text = format!("vars: x y\norder: {order}\ngenerators:\nx + y\nx*y\n");
            let (s, vars) = parse_subalgebra_file(&text).unwrap();
            let printed = format_subalgebra_file(&s, &vars);
            assert_eq!(printed, format!("vars: x y\nweights: 1 1\norder: {order}\ngenerators:\nx + y\nx*y\n"));
        }
    }

    #[test]
    fn subalgebra_file_requires_vars_header() {
        let err = parse_subalgebra_file("generators:\nx\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn matrix_file_round_trips() {
        let text = "1 1/2 -3\n0 2 5/7\n";
        let m = parse_matrix_file("# fixture\n1 1/2 -3\n0 2 5/7\n").unwrap();
        assert_eq!(m.rows(), 2);
        assert_eq!(m.cols(), 3);
        assert_eq!(format_matrix_file(&m), text);
        assert!(parse_matrix_file("1 2\n3\n").is_err());
    }
}
