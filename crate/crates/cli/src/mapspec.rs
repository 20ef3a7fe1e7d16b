//! Map specifications: built-in names (`koebe`, `identity`, `profile:...`,
//! `poly:...`) and the versioned text format.
//!
//! ```text
//! radialmaps map v1
//! p = 2
//! n = 3
//! kind = profile
//! functional = 1 0 0
//! numerator = 1
//! denominator = 1 -2 1
//! ```
//!
//! Poly maps use `kind = poly` and one `term = c @ e_1 ... e_n` line per
//! monomial. Complex numbers are `re` or `re:im`; floats are decimal or C99
//! hex (`0x1.8p-3`). Serialization prints the shortest decimal that reads
//! back to the same double, so parse and serialize are exact inverses.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use radial_core::radial::koebe_map;
use radial_core::{
    MultiPoly, NormModel, Polynomial, RadialMap, Rational, ScalarField, SupportFunctional, Vector,
    C64,
};

pub const HEADER: &str = "radialmaps map v1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

pub fn parse_float(tok: &str) -> Result<f64, String> {
    let (neg, body) = match tok.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, tok.strip_prefix('+').unwrap_or(tok)),
    };
    let value = if body.starts_with("0x") || body.starts_with("0X") {
        hexf_parse::parse_hexf64(body, false).map_err(|e| format!("bad hex float `{tok}`: {e}"))?
    } else {
        body.parse::<f64>()
            .map_err(|_| format!("bad number `{tok}`"))?
    };
    if !value.is_finite() && !body.eq_ignore_ascii_case("inf") {
        return Err(format!("number `{tok}` is not finite"));
    }
    Ok(if neg { -value } else { value })
}

pub fn parse_complex(tok: &str) -> Result<C64, String> {
    match tok.split_once(':') {
        Some((re, im)) => Ok(C64::new(parse_float(re)?, parse_float(im)?)),
        None => Ok(C64::new(parse_float(tok)?, 0.0)),
    }
}

pub fn format_float(x: f64) -> String {
    if x.is_infinite() {
        if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        }
    } else {
        format!("{x:?}")
    }
}

pub fn format_complex(z: C64) -> String {
    if z.im == 0.0 {
        format_float(z.re)
    } else {
        format!("{}:{}", format_float(z.re), format_float(z.im))
    }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(text: &str, offset: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((offset + s + 1, &text[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((offset + s + 1, &text[s..]));
    }
    out
}

/// Pieces of `text` split on `sep`, with 1-based columns.
fn pieces(text: &str, sep: char, offset: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in text.char_indices() {
        if c == sep {
            out.push((offset + start + 1, &text[start..i]));
            start = i + c.len_utf8();
        }
    }
    out.push((offset + start + 1, &text[start..]));
    out
}

fn complex_list(items: &[(usize, &str)], line: usize) -> Result<Vec<C64>, ParseError> {
    items
        .iter()
        .map(|&(col, tok)| parse_complex(tok.trim()).map_err(|m| ParseError::new(line, col, m)))
        .collect()
}

fn core_error(line: usize, column: usize, e: radial_core::Error) -> ParseError {
    ParseError::new(line, column, e.to_string())
}

/// `e1` as the profile direction of built-in specs.
fn e1_functional(model: &NormModel) -> SupportFunctional {
    let mut w = vec![C64::new(0.0, 0.0); model.n()];
    w[0] = C64::new(1.0, 0.0);
    SupportFunctional::new(w)
}

/// Built-in specs; `None` when `spec` names none of them (it is then a path).
pub fn parse_builtin(spec: &str, model: &NormModel) -> Result<Option<RadialMap>, ParseError> {
    let map = match spec {
        "koebe" => {
            koebe_map(model, &Vector::basis(model.n(), 0)).map_err(|e| core_error(1, 1, e))?
        }
        "identity" => RadialMap::identity(model),
        _ => {
            if let Some(body) = spec.strip_prefix("profile:") {
                parse_profile_spec(body, model)?
            } else if let Some(body) = spec.strip_prefix("poly:") {
                parse_poly_spec(body, model)?
            } else {
                return Ok(None);
            }
        }
    };
    Ok(Some(map))
}

/// `profile:NUM[/DEN]`, each a comma-separated coefficient list in
/// increasing order, composed with the functional of `e1`.
fn parse_profile_spec(body: &str, model: &NormModel) -> Result<RadialMap, ParseError> {
    let offset = "profile:".len();
    let (num_text, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some((offset + n.len() + 1, d))),
        None => (body, None),
    };
    let num = complex_list(&pieces(num_text, ',', offset), 1)?;
    let den = match den {
        Some((off, d)) => complex_list(&pieces(d, ',', off), 1)?,
        None => vec![C64::new(1.0, 0.0)],
    };
    let phi = Rational::new(Polynomial::new(num), Polynomial::new(den))
        .map_err(|e| core_error(1, 1, e))?;
    RadialMap::new(
        ScalarField::Profile {
            phi,
            l: e1_functional(model),
        },
        *model,
    )
    .map_err(|e| core_error(1, 1, e))
}

/// `poly:c@e1,...,en;c@...`.
fn parse_poly_spec(body: &str, model: &NormModel) -> Result<RadialMap, ParseError> {
    let offset = "poly:".len();
    let mut terms = Vec::new();
    for (col, term) in pieces(body, ';', offset) {
        let (coef, exps) = term
            .split_once('@')
            .ok_or_else(|| ParseError::new(1, col, "a term reads `coefficient@exponents`"))?;
        let c = parse_complex(coef.trim()).map_err(|m| ParseError::new(1, col, m))?;
        let exps_col = col + coef.len() + 1;
        let e = exponent_list(&pieces(exps, ',', exps_col - 1), model.n(), 1, exps_col)?;
        terms.push((e, c));
    }
    let f = MultiPoly::from_terms(model.n(), terms).map_err(|e| core_error(1, 1, e))?;
    RadialMap::from_poly(model, f).map_err(|e| core_error(1, 1, e))
}

fn exponent_list(
    items: &[(usize, &str)],
    n: usize,
    line: usize,
    col: usize,
) -> Result<Vec<u32>, ParseError> {
    if items.len() != n {
        return Err(ParseError::new(
            line,
            col,
            format!("expected {n} exponents, found {}", items.len()),
        ));
    }
    items
        .iter()
        .map(|&(c, tok)| {
            tok.trim()
                .parse::<u32>()
                .map_err(|_| ParseError::new(line, c, format!("bad exponent `{}`", tok.trim())))
        })
        .collect()
}

/// A map from a built-in spec or a file in the text format. File maps
/// carry their own model.
pub fn load_map(spec: &str, model: &NormModel) -> Result<RadialMap, LoadError> {
    if let Some(map) = parse_builtin(spec, model).map_err(LoadError::Parse)? {
        return Ok(map);
    }
    let path = Path::new(spec);
    let text = std::fs::read_to_string(path)
        .map_err(|e| LoadError::Io(format!("{}: {e}", path.display())))?;
    parse_document(&text).map_err(|e| LoadError::File(path.display().to_string(), e))
}

#[derive(Debug)]
pub enum LoadError {
    Parse(ParseError),
    File(String, ParseError),
    Io(String),
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadError::Parse(e) => write!(f, "map spec, {e}"),
            LoadError::File(path, e) => write!(f, "{path}, {e}"),
            LoadError::Io(msg) => write!(f, "cannot read map file {msg}"),
        }
    }
}

impl std::error::Error for LoadError {}

struct Entry<'a> {
    line: usize,
    column: usize,
    value: &'a str,
    value_col: usize,
}

pub fn parse_document(text: &str) -> Result<RadialMap, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
        .filter(|(_, l)| !l.trim().is_empty());
    let (first, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, 1, "empty map file"))?;
    if header.trim() != HEADER {
        let col = header.len() - header.trim_start().len() + 1;
        return Err(ParseError::new(
            first,
            col,
            format!("expected header `{HEADER}`"),
        ));
    }
    let mut entries: BTreeMap<&str, Entry> = BTreeMap::new();
    let mut terms = Vec::new();
    let mut last = first;
    for (line, raw) in lines {
        last = line;
        let key_col = raw.len() - raw.trim_start().len() + 1;
        let (key, value) = raw
            .split_once('=')
            .ok_or_else(|| ParseError::new(line, key_col, "expected `key = value`"))?;
        let key = key.trim();
        let value_col =
            key.len() + 1 + raw[key_col - 1 + key.len()..].find('=').unwrap_or(0) + key_col;
        let entry = Entry {
            line,
            column: key_col,
            value,
            value_col,
        };
        match key {
            "term" => terms.push(entry),
            "p" | "n" | "kind" | "functional" | "numerator" | "denominator" => {
                if let Some(prev) = entries.insert(key, entry) {
                    let _ = prev;
                    return Err(ParseError::new(
                        line,
                        key_col,
                        format!("duplicate key `{key}`"),
                    ));
                }
            }
            _ => {
                return Err(ParseError::new(
                    line,
                    key_col,
                    format!("unknown key `{key}`"),
                ))
            }
        }
    }
    let eof = last + 1;
    let get = |key: &str| {
        entries
            .get(key)
            .ok_or_else(|| ParseError::new(eof, 1, format!("missing key `{key}`")))
    };
    let single = |e: &Entry| -> Result<(usize, String), ParseError> {
        let toks = tokens(e.value, e.value_col - 1);
        match toks.as_slice() {
            [(c, t)] => Ok((*c, t.to_string())),
            _ => Err(ParseError::new(
                e.line,
                e.value_col,
                "expected a single value",
            )),
        }
    };

    let p_entry = get("p")?;
    let (pc, p_tok) = single(p_entry)?;
    let p = parse_float(&p_tok).map_err(|m| ParseError::new(p_entry.line, pc, m))?;
    let n_entry = get("n")?;
    let (nc, n_tok) = single(n_entry)?;
    let n: usize = n_tok
        .parse()
        .map_err(|_| ParseError::new(n_entry.line, nc, format!("bad dimension `{n_tok}`")))?;
    let model = NormModel::new(p, n).map_err(|e| core_error(p_entry.line, pc, e))?;

    let kind_entry = get("kind")?;
    let (kc, kind) = single(kind_entry)?;
    match kind.as_str() {
        "profile" => {
            if let Some(t) = terms.first() {
                return Err(ParseError::new(
                    t.line,
                    t.column,
                    "`term` belongs to poly maps",
                ));
            }
            let f = get("functional")?;
            let w = complex_list(&tokens(f.value, f.value_col - 1), f.line)?;
            if w.len() != n {
                return Err(ParseError::new(
                    f.line,
                    f.value_col,
                    format!("expected {n} coefficients, found {}", w.len()),
                ));
            }
            let num_e = get("numerator")?;
            let num = complex_list(&tokens(num_e.value, num_e.value_col - 1), num_e.line)?;
            let den = match entries.get("denominator") {
                Some(d) => complex_list(&tokens(d.value, d.value_col - 1), d.line)?,
                None => vec![C64::new(1.0, 0.0)],
            };
            let phi = Rational::new(Polynomial::new(num), Polynomial::new(den))
                .map_err(|e| core_error(num_e.line, num_e.value_col, e))?;
            RadialMap::new(
                ScalarField::Profile {
                    phi,
                    l: SupportFunctional::new(w),
                },
                model,
            )
            .map_err(|e| core_error(kind_entry.line, kc, e))
        }
        "poly" => {
            for key in ["functional", "numerator", "denominator"] {
                if let Some(e) = entries.get(key) {
                    return Err(ParseError::new(
                        e.line,
                        e.column,
                        format!("`{key}` belongs to profile maps"),
                    ));
                }
            }
            let mut parsed = Vec::with_capacity(terms.len());
            for t in &terms {
                let toks = tokens(t.value, t.value_col - 1);
                let (cc, coef) = *toks
                    .first()
                    .ok_or_else(|| ParseError::new(t.line, t.value_col, "empty term"))?;
                let c = parse_complex(coef).map_err(|m| ParseError::new(t.line, cc, m))?;
                match toks.get(1) {
                    Some(&(_, "@")) => {}
                    Some(&(ac, _)) => return Err(ParseError::new(t.line, ac, "expected `@`")),
                    None => {
                        return Err(ParseError::new(
                            t.line,
                            t.value_col,
                            "expected `@` and exponents",
                        ))
                    }
                }
                let col = toks.get(2).map_or(t.value_col, |x| x.0);
                let e = exponent_list(&toks[2..], n, t.line, col)?;
                parsed.push((e, c));
            }
            let f =
                MultiPoly::from_terms(n, parsed).map_err(|e| core_error(kind_entry.line, kc, e))?;
            RadialMap::from_poly(&model, f).map_err(|e| core_error(kind_entry.line, kc, e))
        }
        other => Err(ParseError::new(
            kind_entry.line,
            kc,
            format!("unknown kind `{other}`"),
        )),
    }
}

fn join(values: impl IntoIterator<Item = C64>) -> String {
    let parts: Vec<String> = values.into_iter().map(format_complex).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ")
    }
}

pub fn serialize(map: &RadialMap) -> String {
    let model = map.model();
    let mut out = format!(
        "{HEADER}\np = {}\nn = {}\n",
        format_float(model.p()),
        model.n()
    );
    match map.field() {
        ScalarField::Profile { phi, l } => {
            out.push_str("kind = profile\n");
            out.push_str(&format!(
                "functional = {}\n",
                join(l.coeffs().iter().copied())
            ));
            out.push_str(&format!(
                "numerator = {}\n",
                join(phi.num().coeffs().iter().copied())
            ));
            out.push_str(&format!(
                "denominator = {}\n",
                join(phi.den().coeffs().iter().copied())
            ));
        }
        ScalarField::Poly(p) => {
            out.push_str("kind = poly\n");
            for (e, c) in p.terms() {
                let exps: Vec<String> = e.iter().map(u32::to_string).collect();
                out.push_str(&format!(
                    "term = {} @ {}\n",
                    format_complex(c),
                    exps.join(" ")
                ));
            }
        }
    }
    out
}
