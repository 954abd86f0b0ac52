//! Deterministic text formats for algebras, matrices, multilinear maps,
//! representations, and cochains, plus the canonical serializations the
//! golden files and content digests are built on.
//!
//! All documents are line-oriented. `#` starts a comment, blank lines
//! are ignored, indices are 1-based in files and 0-based in memory.
//! Serialization is canonical: twists print as `id` when they are the
//! identity, constants are sorted by (tuple, target), and zero entries
//! are omitted. `parse(serialize(x)) == x` for every document, and
//! `serialize(parse(text))` is the canonical form of `text`.
//!
//! An example algebra document:
//!
//! ```text
//! algebra leib2
//! dim 2
//! arity 2
//! twist 1 id
//! constants
//! 2 2 -> 1 : 1
//! end
//! ```

use sha2::{Digest, Sha256};

use crate::algebra::{BracketTensor, HomNambuAlgebra, TwistFamily};
use crate::error::Error;
use crate::linalg::Matrix;
use crate::rat::{fmt_rat, parse_rat, Rat};
use crate::rep::{Cochain, Representation};
use crate::tensor::MultiLinearMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub name: String,
    pub algebra: HomNambuAlgebra,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationDocument {
    pub name: String,
    pub representation: Representation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainDocument {
    pub name: String,
    pub cochain: Cochain,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixDocument {
    pub name: String,
    pub matrix: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapDocument {
    pub name: String,
    pub map: MultiLinearMap,
}

/// Lowercase hex SHA-256 of a document's canonical serialization.
pub fn content_digest(canonical: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(canonical.as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

// ---------------------------------------------------------------------------
// Lexing
// ---------------------------------------------------------------------------

/// Tokenized non-empty lines with their 1-based line numbers.
struct Lines {
    rows: Vec<(usize, Vec<String>)>,
    cursor: usize,
}

impl Lines {
    fn lex(text: &str) -> Lines {
        let rows = text
            .lines()
            .enumerate()
            .filter_map(|(i, raw)| {
                let stripped = raw.split('#').next().unwrap_or("");
                let tokens: Vec<String> = stripped.split_whitespace().map(str::to_string).collect();
                if tokens.is_empty() {
                    None
                } else {
                    Some((i + 1, tokens))
                }
            })
            .collect();
        Lines { rows, cursor: 0 }
    }

    fn peek(&self) -> Option<&(usize, Vec<String>)> {
        self.rows.get(self.cursor)
    }

    fn next(&mut self) -> Result<(usize, Vec<String>), Error> {
        let row = self.rows.get(self.cursor).cloned().ok_or(Error::Parse {
            line: self.rows.last().map_or(0, |(l, _)| *l),
            msg: "unexpected end of document".into(),
        })?;
        self.cursor += 1;
        Ok(row)
    }

    fn expect_end(mut self) -> Result<(), Error> {
        let (line, tokens) = self.next()?;
        if tokens != ["end"] {
            return Err(Error::Parse {
                line,
                msg: "expected `end`".into(),
            });
        }
        if let Some((line, _)) = self.peek() {
            return Err(Error::Parse {
                line: *line,
                msg: "content after `end`".into(),
            });
        }
        Ok(())
    }
}

fn expect_keyword_value(lines: &mut Lines, keyword: &str) -> Result<(usize, String), Error> {
    let (line, tokens) = lines.next()?;
    if tokens.len() != 2 || tokens[0] != keyword {
        return Err(Error::Parse {
            line,
            msg: format!("expected `{keyword} <value>`"),
        });
    }
    Ok((line, tokens[1].clone()))
}

fn parse_count(text: &str, line: usize, what: &str) -> Result<usize, Error> {
    text.parse::<usize>().map_err(|_| Error::Parse {
        line,
        msg: format!("bad {what} `{text}`"),
    })
}

fn parse_positive(text: &str, line: usize, what: &str) -> Result<usize, Error> {
    let v = parse_count(text, line, what)?;
    if v == 0 {
        return Err(Error::Parse {
            line,
            msg: format!("{what} must be positive"),
        });
    }
    Ok(v)
}

fn parse_name(lines: &mut Lines, keyword: &str) -> Result<String, Error> {
    let (line, name) = expect_keyword_value(lines, keyword)?;
    if !name
        .bytes()
        .all(|b| b.is_ascii_alphanumeric() || b == b'_' || b == b'-' || b == b'.')
    {
        return Err(Error::Parse {
            line,
            msg: format!("bad name `{name}`"),
        });
    }
    Ok(name)
}

fn parse_index(token: &str, line: usize, bound: usize, what: &str) -> Result<usize, Error> {
    let v: usize = token.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("bad {what} index `{token}`"),
    })?;
    if v == 0 || v > bound {
        return Err(Error::Range {
            line,
            msg: format!("{what} index {v} outside 1..={bound}"),
        });
    }
    Ok(v - 1)
}

fn parse_value(token: &str, line: usize) -> Result<Rat, Error> {
    parse_rat(token).map_err(|msg| Error::Parse { line, msg })
}

/// Reads `count` matrix rows of `width` rationals each.
fn parse_matrix_rows(lines: &mut Lines, count: usize, width: usize) -> Result<Matrix, Error> {
    let mut out = Matrix::zeros(count, width);
    for r in 0..count {
        let (line, tokens) = lines.next()?;
        if tokens.len() != width {
            return Err(Error::Parse {
                line,
                msg: format!(
                    "expected {width} entries in matrix row, found {}",
                    tokens.len()
                ),
            });
        }
        for (c, token) in tokens.iter().enumerate() {
            out.set(r, c, parse_value(token, line)?);
        }
    }
    Ok(out)
}

/// One `i1 … ik -> j : value` constant line against per-slot bounds.
fn parse_constant_line(
    line: usize,
    tokens: &[String],
    slot_bounds: &[usize],
    target_bound: usize,
    target_what: &str,
) -> Result<(Vec<usize>, usize, Rat), Error> {
    let k = slot_bounds.len();
    if tokens.len() != k + 4 || tokens[k] != "->" || tokens[k + 2] != ":" {
        return Err(Error::Parse {
            line,
            msg: format!(
                "expected `{} -> <{target_what}> : <value>` with {k} indices",
                "i1 …"
            ),
        });
    }
    let mut tuple = Vec::with_capacity(k);
    for (slot, token) in tokens[..k].iter().enumerate() {
        tuple.push(parse_index(token, line, slot_bounds[slot], "argument")?);
    }
    let target = parse_index(&tokens[k + 1], line, target_bound, target_what)?;
    let value = parse_value(&tokens[k + 3], line)?;
    Ok((tuple, target, value))
}

fn fmt_constant_line(tuple: &[usize], target: usize, value: &Rat) -> String {
    let indices: Vec<String> = tuple.iter().map(|i| (i + 1).to_string()).collect();
    format!(
        "{} -> {} : {}",
        indices.join(" "),
        target + 1,
        fmt_rat(value)
    )
}

fn fmt_matrix_rows(out: &mut String, matrix: &Matrix) {
    for r in 0..matrix.rows() {
        let row: Vec<String> = (0..matrix.cols())
            .map(|c| fmt_rat(matrix.at(r, c)))
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
}

// ---------------------------------------------------------------------------
// Algebra documents
// ---------------------------------------------------------------------------

pub fn parse_algebra(text: &str) -> Result<AlgebraDocument, Error> {
    let mut lines = Lines::lex(text);
    let name = parse_name(&mut lines, "algebra")?;
    let (line, dim_text) = expect_keyword_value(&mut lines, "dim")?;
    let dim = parse_positive(&dim_text, line, "dimension")?;
    let (line, arity_text) = expect_keyword_value(&mut lines, "arity")?;
    let arity = parse_positive(&arity_text, line, "arity")?;

    let mut twists = Vec::with_capacity(arity - 1);
    for expected in 1..arity {
        let (line, tokens) = lines.next()?;
        if tokens.len() < 2 || tokens[0] != "twist" {
            return Err(Error::Parse {
                line,
                msg: format!("expected `twist {expected} …`"),
            });
        }
        let index = parse_count(&tokens[1], line, "twist index")?;
        if index != expected {
            return Err(Error::Parse {
                line,
                msg: format!("twists must appear in order; expected index {expected}"),
            });
        }
        match tokens.len() {
            2 => twists.push(parse_matrix_rows(&mut lines, dim, dim)?),
            3 if tokens[2] == "id" => twists.push(Matrix::identity(dim)),
            _ => {
                return Err(Error::Parse {
                    line,
                    msg: "expected `twist <i> id` or `twist <i>` followed by matrix rows".into(),
                })
            }
        }
    }

    let (line, tokens) = lines.next()?;
    if tokens != ["constants"] {
        return Err(Error::Parse {
            line,
            msg: "expected `constants`".into(),
        });
    }
    let mut bracket = BracketTensor::new(dim, arity);
    let mut seen = std::collections::BTreeSet::new();
    loop {
        let (line, tokens) = lines.next()?;
        if tokens == ["end"] {
            break;
        }
        let (tuple, target, value) =
            parse_constant_line(line, &tokens, &vec![dim; arity], dim, "target")?;
        if !seen.insert((tuple.clone(), target)) {
            return Err(Error::DuplicateKey {
                line,
                msg: format!(
                    "constant {} repeated",
                    fmt_constant_line(&tuple, target, &value)
                ),
            });
        }
        bracket.add_constant(&tuple, target, value);
    }
    if let Some((line, _)) = lines.peek() {
        return Err(Error::Parse {
            line: *line,
            msg: "content after `end`".into(),
        });
    }
    let algebra = HomNambuAlgebra::new(bracket, TwistFamily::new(twists))?;
    Ok(AlgebraDocument { name, algebra })
}

pub fn serialize_algebra(doc: &AlgebraDocument) -> String {
    let alg = &doc.algebra;
    let mut out = String::new();
    out.push_str(&format!("algebra {}\n", doc.name));
    out.push_str(&format!("dim {}\n", alg.dim()));
    out.push_str(&format!("arity {}\n", alg.arity()));
    for (slot, twist) in alg.twists().maps().iter().enumerate() {
        if twist.is_identity() {
            out.push_str(&format!("twist {} id\n", slot + 1));
        } else {
            out.push_str(&format!("twist {}\n", slot + 1));
            fmt_matrix_rows(&mut out, twist);
        }
    }
    out.push_str("constants\n");
    for (tuple, target, value) in alg.bracket().entries() {
        out.push_str(&fmt_constant_line(&tuple, target, &value));
        out.push('\n');
    }
    out.push_str("end\n");
    out
}

// ---------------------------------------------------------------------------
// Matrix documents
// ---------------------------------------------------------------------------

pub fn parse_matrix(text: &str) -> Result<MatrixDocument, Error> {
    let mut lines = Lines::lex(text);
    let name = parse_name(&mut lines, "matrix")?;
    let (line, rows_text) = expect_keyword_value(&mut lines, "rows")?;
    let rows = parse_positive(&rows_text, line, "row count")?;
    let (line, cols_text) = expect_keyword_value(&mut lines, "cols")?;
    let cols = parse_positive(&cols_text, line, "column count")?;
    let matrix = parse_matrix_rows(&mut lines, rows, cols)?;
    lines.expect_end()?;
    Ok(MatrixDocument { name, matrix })
}

pub fn serialize_matrix(doc: &MatrixDocument) -> String {
    let mut out = String::new();
    out.push_str(&format!("matrix {}\n", doc.name));
    out.push_str(&format!("rows {}\n", doc.matrix.rows()));
    out.push_str(&format!("cols {}\n", doc.matrix.cols()));
    fmt_matrix_rows(&mut out, &doc.matrix);
    out.push_str("end\n");
    out
}

// ---------------------------------------------------------------------------
// Multilinear map documents
// ---------------------------------------------------------------------------

pub fn parse_map(text: &str) -> Result<MapDocument, Error> {
    let mut lines = Lines::lex(text);
    let name = parse_name(&mut lines, "map")?;
    let (line, tokens) = lines.next()?;
    if tokens.len() < 2 || tokens[0] != "source_dims" {
        return Err(Error::Parse {
            line,
            msg: "expected `source_dims <d1> …`".into(),
        });
    }
    let source_dims: Vec<usize> = tokens[1..]
        .iter()
        .map(|t| parse_positive(t, line, "source dimension"))
        .collect::<Result<_, _>>()?;
    let (line, target_text) = expect_keyword_value(&mut lines, "target_dim")?;
    let target_dim = parse_positive(&target_text, line, "target dimension")?;
    let (line, tokens) = lines.next()?;
    if tokens != ["constants"] {
        return Err(Error::Parse {
            line,
            msg: "expected `constants`".into(),
        });
    }
    let mut map = MultiLinearMap::new(source_dims.clone(), target_dim);
    let mut seen = std::collections::BTreeSet::new();
    loop {
        let (line, tokens) = lines.next()?;
        if tokens == ["end"] {
            break;
        }
        let (tuple, target, value) =
            parse_constant_line(line, &tokens, &source_dims, target_dim, "target")?;
        if !seen.insert((tuple.clone(), target)) {
            return Err(Error::DuplicateKey {
                line,
                msg: "constant repeated".into(),
            });
        }
        map.add_constant(&tuple, target, value);
    }
    if let Some((line, _)) = lines.peek() {
        return Err(Error::Parse {
            line: *line,
            msg: "content after `end`".into(),
        });
    }
    Ok(MapDocument { name, map })
}

pub fn serialize_map(doc: &MapDocument) -> String {
    let mut out = String::new();
    out.push_str(&format!("map {}\n", doc.name));
    let dims: Vec<String> = doc.map.source_dims().iter().map(usize::to_string).collect();
    out.push_str(&format!("source_dims {}\n", dims.join(" ")));
    out.push_str(&format!("target_dim {}\n", doc.map.target_dim()));
    out.push_str("constants\n");
    for (tuple, target, value) in doc.map.entries() {
        out.push_str(&fmt_constant_line(&tuple, target, &value));
        out.push('\n');
    }
    out.push_str("end\n");
    out
}

// ---------------------------------------------------------------------------
// Representation documents
// ---------------------------------------------------------------------------

pub fn parse_representation(text: &str) -> Result<RepresentationDocument, Error> {
    let mut lines = Lines::lex(text);
    let name = parse_name(&mut lines, "representation")?;
    let (line, m_text) = expect_keyword_value(&mut lines, "module_dim")?;
    let module_dim = parse_positive(&m_text, line, "module dimension")?;
    let (line, d_text) = expect_keyword_value(&mut lines, "algebra_dim")?;
    let algebra_dim = parse_positive(&d_text, line, "algebra dimension")?;
    let (line, n_text) = expect_keyword_value(&mut lines, "arity")?;
    let arity = parse_positive(&n_text, line, "arity")?;

    let mut actions = Vec::with_capacity(arity);
    let mut pending: Option<(usize, MultiLinearMap)> = None;
    let mut seen = std::collections::BTreeSet::new();
    loop {
        let (line, tokens) = lines.next()?;
        if tokens == ["end"] {
            if let Some((_, map)) = pending.take() {
                actions.push(map);
            }
            break;
        }
        if tokens.len() == 2 && tokens[0] == "action" {
            if let Some((_, map)) = pending.take() {
                actions.push(map);
            }
            let position = parse_count(&tokens[1], line, "action position")?;
            if position != actions.len() || position >= arity {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected `action {}`", actions.len()),
                });
            }
            let mut dims = vec![algebra_dim; arity];
            dims[position] = module_dim;
            pending = Some((position, MultiLinearMap::new(dims, module_dim)));
            continue;
        }
        let Some((position, map)) = pending.as_mut() else {
            return Err(Error::Parse {
                line,
                msg: "expected `action <i>` before constants".into(),
            });
        };
        let mut bounds = vec![algebra_dim; arity];
        bounds[*position] = module_dim;
        let (tuple, target, value) =
            parse_constant_line(line, &tokens, &bounds, module_dim, "module target")?;
        if !seen.insert((*position, tuple.clone(), target)) {
            return Err(Error::DuplicateKey {
                line,
                msg: "action constant repeated".into(),
            });
        }
        map.add_constant(&tuple, target, value);
    }
    if actions.len() != arity {
        return Err(Error::Parse {
            line: 0,
            msg: format!("expected {arity} action blocks, found {}", actions.len()),
        });
    }
    if let Some((line, _)) = lines.peek() {
        return Err(Error::Parse {
            line: *line,
            msg: "content after `end`".into(),
        });
    }
    let representation = Representation::new(module_dim, algebra_dim, arity, actions)?;
    Ok(RepresentationDocument {
        name,
        representation,
    })
}

pub fn serialize_representation(doc: &RepresentationDocument) -> String {
    let rep = &doc.representation;
    let mut out = String::new();
    out.push_str(&format!("representation {}\n", doc.name));
    out.push_str(&format!("module_dim {}\n", rep.module_dim()));
    out.push_str(&format!("algebra_dim {}\n", rep.algebra_dim()));
    out.push_str(&format!("arity {}\n", rep.arity()));
    for (position, action) in rep.actions().iter().enumerate() {
        out.push_str(&format!("action {position}\n"));
        for (tuple, target, value) in action.entries() {
            out.push_str(&fmt_constant_line(&tuple, target, &value));
            out.push('\n');
        }
    }
    out.push_str("end\n");
    out
}

// ---------------------------------------------------------------------------
// Cochain documents
// ---------------------------------------------------------------------------

pub fn parse_cochain(text: &str) -> Result<CochainDocument, Error> {
    let mut lines = Lines::lex(text);
    let name = parse_name(&mut lines, "cochain")?;
    let (line, m_text) = expect_keyword_value(&mut lines, "module_dim")?;
    let module_dim = parse_positive(&m_text, line, "module dimension")?;
    let (line, d_text) = expect_keyword_value(&mut lines, "algebra_dim")?;
    let algebra_dim = parse_positive(&d_text, line, "algebra dimension")?;
    let (line, n_text) = expect_keyword_value(&mut lines, "arity")?;
    let arity = parse_positive(&n_text, line, "arity")?;
    let (line, tokens) = lines.next()?;
    if tokens != ["constants"] {
        return Err(Error::Parse {
            line,
            msg: "expected `constants`".into(),
        });
    }
    let mut cochain = Cochain::zero(module_dim, algebra_dim, arity);
    let mut seen = std::collections::BTreeSet::new();
    loop {
        let (line, tokens) = lines.next()?;
        if tokens == ["end"] {
            break;
        }
        let (tuple, target, value) = parse_constant_line(
            line,
            &tokens,
            &vec![algebra_dim; arity],
            module_dim,
            "module target",
        )?;
        if !seen.insert((tuple.clone(), target)) {
            return Err(Error::DuplicateKey {
                line,
                msg: "cochain constant repeated".into(),
            });
        }
        cochain.add_constant(&tuple, target, value);
    }
    if let Some((line, _)) = lines.peek() {
        return Err(Error::Parse {
            line: *line,
            msg: "content after `end`".into(),
        });
    }
    Ok(CochainDocument { name, cochain })
}

pub fn serialize_cochain(doc: &CochainDocument) -> String {
    let c = &doc.cochain;
    let mut out = String::new();
    out.push_str(&format!("cochain {}\n", doc.name));
    out.push_str(&format!("module_dim {}\n", c.module_dim()));
    out.push_str(&format!("algebra_dim {}\n", c.algebra_dim()));
    out.push_str(&format!("arity {}\n", c.arity()));
    out.push_str("constants\n");
    for (tuple, target, value) in c.map().entries() {
        out.push_str(&fmt_constant_line(&tuple, target, &value));
        out.push('\n');
    }
    out.push_str("end\n");
    out
}
