//! The `.alg` and `.rep` text formats.
//!
//! `.alg` (line oriented, `#` starts a comment, vertices numbered from 1):
//!
//! ```text
//! field Q                # or: field F 5, field F5
//! quiver
//!   vertices 3
//!   arrow alpha : 1 -> 2
//!   arrow beta : 2 -> 1
//! relations
//!   J 2                  # every path of length 2
//!   alpha*beta - 2*gamma*delta
//! ```
//!
//! `.rep`:
//!
//! ```text
//! module X over paper_A.alg
//! dim 1 2 0
//! map alpha = [[1],[0]]
//! ```
//!
//! A map matrix has one row per basis vector of the target vertex and one
//! column per basis vector of the source vertex. Omitted maps are zero.

use std::sync::Arc;

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Matrix, Scalar};
use crate::quiver::{Arrow, Path, Quiver, Relation, RelationSet};
use crate::rep::Representation;

/// The contents of an `.alg` file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgFile {
    pub quiver: Quiver,
    pub relations: RelationSet,
    pub field: FieldSpec,
}

impl AlgFile {
    pub fn build(&self, len_cap: usize) -> Result<BoundQuiverAlgebra> {
        BoundQuiverAlgebra::build(
            self.quiver.clone(),
            self.relations.clone(),
            self.field,
            len_cap,
        )
    }
}

#[derive(PartialEq)]
enum Block {
    Top,
    Quiver,
    Relations,
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn column_of(line: &str, token: &str) -> usize {
    line.find(token).map_or(1, |i| i + 1)
}

/// Parses an `.alg` file; `field_override` replaces the file's `field` line.
pub fn parse_alg(text: &str, field_override: Option<FieldSpec>) -> Result<AlgFile> {
    let mut field = FieldSpec::Rationals;
    let mut vertices: Option<usize> = None;
    let mut arrows: Vec<(Arrow, usize)> = Vec::new();
    let mut relation_lines: Vec<(usize, String)> = Vec::new();
    let mut rad_power: Option<usize> = None;
    let mut block = Block::Top;

    for (ln, raw) in text.lines().enumerate() {
        let ln = ln + 1;
        let line = strip_comment(raw);
        let words: Vec<&str> = line.split_whitespace().collect();
        let Some(&head) = words.first() else {
            continue;
        };
        match head {
            "field" => {
                field = match words.as_slice() {
                    ["field", "Q"] => FieldSpec::Rationals,
                    ["field", "F", p] => {
                        let p: u64 = p.parse().map_err(|_| {
                            Error::parse(ln, column_of(line, p), "expected a prime after `F`")
                        })?;
                        FieldSpec::prime(p)
                            .map_err(|e| Error::parse(ln, column_of(line, "F"), e.to_string()))?
                    }
                    ["field", fp] if fp.starts_with('F') && fp.len() > 1 => fp
                        .parse::<FieldSpec>()
                        .map_err(|e| Error::parse(ln, column_of(line, fp), e.to_string()))?,
                    _ => return Err(Error::parse(ln, 1, "expected `field Q` or `field F <p>`")),
                };
                block = Block::Top;
            }
            "quiver" if words.len() == 1 => block = Block::Quiver,
            "relations" if words.len() == 1 => block = Block::Relations,
            "vertices" if block == Block::Quiver => {
                let n = words
                    .get(1)
                    .and_then(|w| w.parse::<usize>().ok())
                    .filter(|_| words.len() == 2)
                    .ok_or_else(|| {
                        Error::parse(ln, column_of(line, "vertices"), "expected `vertices <n>`")
                    })?;
                vertices = Some(n);
            }
            "arrow" if block == Block::Quiver => {
                // arrow <name> : <i> -> <j>
                let rest = line.trim_start().trim_start_matches("arrow").trim();
                let (name, ends) = rest.split_once(':').ok_or_else(|| {
                    Error::parse(
                        ln,
                        column_of(line, "arrow"),
                        "expected `arrow <name> : <i> -> <j>`",
                    )
                })?;
                let name = name.trim();
                if name.is_empty()
                    || !name
                        .chars()
                        .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
                {
                    return Err(Error::parse(ln, column_of(line, ":"), "invalid arrow name"));
                }
                let (i, j) = ends.split_once("->").ok_or_else(|| {
                    Error::parse(ln, column_of(line, ":"), "expected `<i> -> <j>`")
                })?;
                let parse_v = |s: &str| -> Result<usize> {
                    let s = s.trim();
                    s.parse::<usize>()
                        .ok()
                        .filter(|&v| v >= 1)
                        .map(|v| v - 1)
                        .ok_or_else(|| {
                            Error::parse(ln, column_of(line, s), format!("bad vertex `{s}`"))
                        })
                };
                let (s, t) = (parse_v(i)?, parse_v(j)?);
                if arrows.iter().any(|(a, _)| a.name == name) {
                    return Err(Error::parse(
                        ln,
                        column_of(line, name),
                        format!("duplicate arrow `{name}`"),
                    ));
                }
                arrows.push((
                    Arrow {
                        name: name.to_string(),
                        source: s,
                        target: t,
                    },
                    ln,
                ));
            }
            "J" if block == Block::Relations => {
                let m = words
                    .get(1)
                    .and_then(|w| w.parse::<usize>().ok())
                    .filter(|_| words.len() == 2)
                    .ok_or_else(|| Error::parse(ln, column_of(line, "J"), "expected `J <m>`"))?;
                if m < 2 {
                    return Err(Error::parse(
                        ln,
                        column_of(line, "J"),
                        "`J <m>` needs m >= 2",
                    ));
                }
                rad_power = Some(rad_power.map_or(m, |r| r.min(m)));
            }
            _ if block == Block::Relations => relation_lines.push((ln, line.to_string())),
            _ => {
                return Err(Error::parse(
                    ln,
                    column_of(line, head),
                    format!("unexpected `{head}`"),
                ))
            }
        }
    }

    let field = field_override.unwrap_or(field);
    let n = vertices.ok_or_else(|| Error::parse(1, 1, "missing `vertices <n>` in quiver block"))?;
    for (a, ln) in &arrows {
        if a.source >= n || a.target >= n {
            return Err(Error::parse(
                *ln,
                1,
                format!("arrow `{}` uses an undeclared vertex", a.name),
            ));
        }
    }
    let quiver = Quiver::new(n, arrows.into_iter().map(|(a, _)| a).collect())
        .map_err(|e| Error::parse(1, 1, e.to_string()))?;
    let mut relations = Vec::new();
    for (ln, line) in relation_lines {
        relations.push(parse_relation(&quiver, field, &line, ln)?);
    }
    Ok(AlgFile {
        quiver,
        relations: RelationSet {
            relations,
            rad_power,
        },
        field,
    })
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Number(String),
    Star,
    Plus,
    Minus,
}

fn tokenize(line: &str, ln: usize) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            ' ' | '\t' | '\r' => i += 1,
            '*' => {
                out.push((Tok::Star, col));
                i += 1;
            }
            '+' => {
                out.push((Tok::Plus, col));
                i += 1;
            }
            '-' => {
                out.push((Tok::Minus, col));
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                    i += 1;
                }
                out.push((Tok::Number(chars[start..i].iter().collect()), col));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
                {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            }
            other => {
                return Err(Error::parse(
                    ln,
                    col,
                    format!("unexpected character `{other}`"),
                ))
            }
        }
    }
    Ok(out)
}

fn parse_relation(q: &Quiver, field: FieldSpec, line: &str, ln: usize) -> Result<Relation> {
    let toks = tokenize(line, ln)?;
    let mut pos = 0;
    let mut terms: Vec<(Scalar, Path)> = Vec::new();
    let mut first_col = 1;
    while pos < toks.len() {
        let mut sign = field.one();
        match &toks[pos].0 {
            Tok::Plus => pos += 1,
            Tok::Minus => {
                sign = -&sign;
                pos += 1;
            }
            _ if terms.is_empty() => {}
            _ => {
                return Err(Error::parse(
                    ln,
                    toks[pos].1,
                    "expected `+` or `-` between terms",
                ))
            }
        }
        let mut coef = sign;
        if let Some((Tok::Number(n), col)) = toks.get(pos) {
            let c = field
                .parse_scalar(n)
                .map_err(|e| Error::parse(ln, *col, e.to_string()))?;
            coef = &coef * &c;
            pos += 1;
            if let Some((Tok::Star, _)) = toks.get(pos) {
                pos += 1;
            }
        }
        let mut ids = Vec::new();
        let term_col = toks.get(pos).map_or(line.len() + 1, |t| t.1);
        loop {
            match toks.get(pos) {
                Some((Tok::Ident(name), col)) => {
                    let id = q
                        .arrow_id(name)
                        .ok_or_else(|| Error::parse(ln, *col, format!("unknown arrow `{name}`")))?;
                    ids.push(id);
                    pos += 1;
                }
                Some((_, col)) => return Err(Error::parse(ln, *col, "expected an arrow name")),
                None => return Err(Error::parse(ln, line.len() + 1, "expected an arrow name")),
            }
            if let Some((Tok::Star, _)) = toks.get(pos) {
                pos += 1;
            } else {
                break;
            }
        }
        let path =
            Path::from_arrows(q, ids).map_err(|e| Error::parse(ln, term_col, e.to_string()))?;
        if path.len() < 2 {
            return Err(Error::parse(
                ln,
                term_col,
                "relation paths must have length at least 2",
            ));
        }
        if let Some((_, p0)) = terms.first() {
            if p0.source() != path.source() || p0.target() != path.target() {
                return Err(Error::parse(
                    ln,
                    term_col,
                    "relation paths must share source and target",
                ));
            }
        } else {
            first_col = term_col;
        }
        // merge repeated paths
        if let Some(t) = terms.iter_mut().find(|(_, p)| *p == path) {
            t.0 = &t.0 + &coef;
        } else {
            terms.push((coef, path));
        }
    }
    terms.retain(|(c, _)| !c.is_zero());
    if terms.is_empty() {
        return Err(Error::parse(ln, first_col, "relation is empty"));
    }
    Ok(Relation::new(terms))
}

/// Renders an `.alg` file that [`parse_alg`] reads back to an equal value.
pub fn write_alg(quiver: &Quiver, relations: &RelationSet, field: FieldSpec) -> String {
    let mut s = String::new();
    match field {
        FieldSpec::Rationals => s.push_str("field Q\n"),
        FieldSpec::PrimeField(p) => s.push_str(&format!("field F {p}\n")),
    }
    s.push_str("quiver\n");
    s.push_str(&format!("  vertices {}\n", quiver.vertex_count()));
    for a in quiver.arrows() {
        s.push_str(&format!(
            "  arrow {} : {} -> {}\n",
            a.name,
            a.source + 1,
            a.target + 1
        ));
    }
    s.push_str("relations\n");
    if let Some(m) = relations.rad_power {
        s.push_str(&format!("  J {m}\n"));
    }
    for r in &relations.relations {
        s.push_str(&format!("  {}\n", r.display(quiver)));
    }
    s
}

/// One module read from a `.rep` file.
#[derive(Clone, Debug)]
pub struct RepFile {
    pub name: String,
    pub over: String,
    pub module: Representation,
}

fn parse_matrix_literal(
    text: &str,
    field: FieldSpec,
    ln: usize,
    col: usize,
) -> Result<Vec<Vec<Scalar>>> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = |m: &str| Error::parse(ln, col, format!("malformed matrix: {m}"));
    let inner = t
        .strip_prefix('[')
        .and_then(|x| x.strip_suffix(']'))
        .ok_or_else(|| bad("expected `[[...],...]`"))?;
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    let mut rows = Vec::new();
    let mut rest = inner;
    loop {
        let r = rest
            .strip_prefix('[')
            .ok_or_else(|| bad("expected `[` starting a row"))?;
        let end = r.find(']').ok_or_else(|| bad("unterminated row"))?;
        let body = &r[..end];
        let row = if body.is_empty() {
            Vec::new()
        } else {
            body.split(',')
                .map(|e| {
                    field
                        .parse_scalar(e)
                        .map_err(|e| Error::parse(ln, col, e.to_string()))
                })
                .collect::<Result<Vec<_>>>()?
        };
        rows.push(row);
        rest = &r[end + 1..];
        if rest.is_empty() {
            break;
        }
        rest = rest
            .strip_prefix(',')
            .ok_or_else(|| bad("expected `,` between rows"))?;
    }
    Ok(rows)
}

/// Parses every `module` block of a `.rep` file against `algebra`.
pub fn parse_rep(text: &str, algebra: &Arc<BoundQuiverAlgebra>) -> Result<Vec<RepFile>> {
    struct Pending {
        name: String,
        over: String,
        line: usize,
        dims: Option<Vec<usize>>,
        maps: Vec<Option<Matrix>>,
    }
    let q = algebra.quiver();
    let field = algebra.field();
    let mut out = Vec::new();
    let mut cur: Option<Pending> = None;
    let finish = |p: Pending, out: &mut Vec<RepFile>| -> Result<()> {
        let dims = p.dims.ok_or_else(|| {
            Error::parse(p.line, 1, format!("module `{}` has no `dim` line", p.name))
        })?;
        let maps = q
            .arrows()
            .iter()
            .zip(p.maps)
            .map(|(a, m)| m.unwrap_or_else(|| Matrix::zeros(field, dims[a.target], dims[a.source])))
            .collect();
        let module = Representation::new(algebra.clone(), dims, maps)
            .map_err(|e| Error::parse(p.line, 1, e.to_string()))?;
        out.push(RepFile {
            name: p.name,
            over: p.over,
            module,
        });
        Ok(())
    };
    for (ln, raw) in text.lines().enumerate() {
        let ln = ln + 1;
        let line = strip_comment(raw);
        let words: Vec<&str> = line.split_whitespace().collect();
        let Some(&head) = words.first() else {
            continue;
        };
        match head {
            "module" => {
                if let Some(p) = cur.take() {
                    finish(p, &mut out)?;
                }
                let (name, over) = match words.as_slice() {
                    ["module", name, "over", over] => (name.to_string(), over.to_string()),
                    ["module", name] => (name.to_string(), String::new()),
                    _ => {
                        return Err(Error::parse(
                            ln,
                            1,
                            "expected `module <name> over <algfile>`",
                        ))
                    }
                };
                cur = Some(Pending {
                    name,
                    over,
                    line: ln,
                    dims: None,
                    maps: vec![None; q.arrows().len()],
                });
            }
            "dim" => {
                let p = cur
                    .as_mut()
                    .ok_or_else(|| Error::parse(ln, 1, "`dim` outside a module"))?;
                let dims = words[1..]
                    .iter()
                    .map(|w| {
                        w.parse::<usize>().map_err(|_| {
                            Error::parse(ln, column_of(line, w), format!("bad dimension `{w}`"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                if dims.len() != q.vertex_count() {
                    return Err(Error::parse(
                        ln,
                        1,
                        format!(
                            "expected {} dimensions, found {}",
                            q.vertex_count(),
                            dims.len()
                        ),
                    ));
                }
                p.dims = Some(dims);
            }
            "map" => {
                let p = cur
                    .as_mut()
                    .ok_or_else(|| Error::parse(ln, 1, "`map` outside a module"))?;
                let dims = p
                    .dims
                    .clone()
                    .ok_or_else(|| Error::parse(ln, 1, "`map` before `dim`"))?;
                let rest = line.trim_start().trim_start_matches("map");
                let (name, lit) = rest
                    .split_once('=')
                    .ok_or_else(|| Error::parse(ln, 1, "expected `map <arrow> = [[...]]`"))?;
                let name = name.trim();
                let id = q.arrow_id(name).ok_or_else(|| {
                    Error::parse(ln, column_of(line, name), format!("unknown arrow `{name}`"))
                })?;
                let col = column_of(line, "=") + 1;
                let rows = parse_matrix_literal(lit, field, ln, col)?;
                let a = q.arrow(id);
                let (r, c) = (dims[a.target], dims[a.source]);
                let ok_shape = if r == 0 {
                    rows.is_empty()
                } else {
                    rows.len() == r && rows.iter().all(|row| row.len() == c)
                };
                if !ok_shape {
                    return Err(Error::parse(
                        ln,
                        col,
                        format!("map `{name}` must be {r}x{c}"),
                    ));
                }
                p.maps[id] = Some(Matrix::from_rows(field, c, &rows));
            }
            _ => {
                return Err(Error::parse(
                    ln,
                    column_of(line, head),
                    format!("unexpected `{head}`"),
                ))
            }
        }
    }
    if let Some(p) = cur.take() {
        finish(p, &mut out)?;
    }
    Ok(out)
}

pub fn matrix_literal(m: &Matrix) -> String {
    if m.rows() == 0 {
        return "[]".to_string();
    }
    m.to_string()
}

/// Renders one module in `.rep` syntax.
pub fn write_rep(name: &str, over: &str, m: &Representation) -> String {
    let q = m.algebra().quiver();
    let mut s = if over.is_empty() {
        format!("module {name}\n")
    } else {
        format!("module {name} over {over}\n")
    };
    s.push_str("dim");
    for d in m.dims() {
        s.push_str(&format!(" {d}"));
    }
    s.push('\n');
    for (a, mat) in q.arrows().iter().zip(m.maps()) {
        if !mat.is_zero() {
            s.push_str(&format!("map {} = {}\n", a.name, matrix_literal(mat)));
        }
    }
    s
}
