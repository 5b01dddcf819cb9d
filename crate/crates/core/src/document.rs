//! Plain-text document format shared by the CLI and the Python bindings.
//!
//! A document is a block of non-blank lines: a `kind:` header, an `n:`
//! header, then the payload rows.  Rows are listed from index 1 upward (the
//! implicit zero boundary of a corner grid is never serialized), and each
//! row of a square table lists the first coordinate from 1 to n, so the
//! line for `j` holds `s(1, j) .. s(n, j)`.  Matrix rows are the exception:
//! they are listed matrix-style, row `r` holding `X(r, 1) .. X(r, n)`.
//! Pyramid documents carry one `level: k` sub-block per level with rows `j
//! = k, k+2, ...` each listing `i = k, k+2, ...`; tableau pairs carry two
//! `rows: m` sub-blocks of letter rows.  Numbers are integers or `p/q` in
//! lowest terms with a positive denominator.  Blank lines separate
//! consecutive documents in one stream; serialization is canonical, so
//! parse-then-serialize is byte-stable.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::algebraic::RationalMatrix;
use crate::error::Error as DomainError;
use crate::grid::{CornerGrid, SquareArray};
use crate::pyramid::{PyramidPoint, PyramidTable};
use crate::rsk::{PlanePartition, Tableau};
use crate::Rat;

/// Failures while reading a document stream.
///
/// `Domain` wraps invariant violations of an otherwise well-formed
/// document (for example a plane partition that fails to decrease); the
/// other variants are malformed input.
#[derive(Debug, Error)]
pub enum ParseError {
    #[error("document is empty")]
    Empty,

    #[error("line {line}: expected `{expected}` header")]
    ExpectedHeader { line: usize, expected: &'static str },

    #[error("line {line}: unknown document kind `{kind}`")]
    UnknownKind { line: usize, kind: String },

    #[error("line {line}: `{token}` is not a number")]
    BadNumber { line: usize, token: String },

    #[error("line {line}: `{token}` is not a valid count")]
    BadInteger { line: usize, token: String },

    #[error("line {line}: expected {expected} values, found {found}")]
    RowLength {
        line: usize,
        expected: usize,
        found: usize,
    },

    #[error("line {line}: missing row data")]
    MissingRow { line: usize },

    #[error("line {line}: unexpected extra content")]
    Trailing { line: usize },

    #[error("expected exactly one document, found {0}")]
    NotExactlyOne(usize),

    #[error("invalid document contents: {0}")]
    Domain(#[from] DomainError),
}

/// One parsed document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Matrix(RationalMatrix),
    Array(SquareArray),
    CornerGrid(CornerGrid),
    Pyramid(PyramidTable),
    PlanePartition(PlanePartition),
    TableauPair(Tableau, Tableau),
}

impl Document {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Document::Matrix(_) => "matrix",
            Document::Array(_) => "array",
            Document::CornerGrid(_) => "corner-grid",
            Document::Pyramid(_) => "pyramid",
            Document::PlanePartition(_) => "plane-partition",
            Document::TableauPair(_, _) => "tableau-pair",
        }
    }
}

/// Render an exact rational: plain integer, or `p/q` in lowest terms.
pub fn format_rational(v: &Rat) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

fn parse_rational(token: &str, line: usize) -> Result<Rat, ParseError> {
    let bad = || ParseError::BadNumber {
        line,
        token: token.to_string(),
    };
    let parse_int = |s: &str| s.parse::<BigInt>().map_err(|_| bad());
    match token.split_once('/') {
        Some((num, den)) => {
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(num, den))
        }
        None => Ok(Rat::from_integer(parse_int(token)?)),
    }
}

// Numbered non-blank line cursor over one document block.
struct Cursor<'a> {
    lines: &'a [(usize, &'a str)],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn next_line(&mut self) -> Option<(usize, &'a str)> {
        let item = self.lines.get(self.pos).copied();
        self.pos += 1;
        item
    }

    // line number just past the end, for end-of-block diagnostics
    fn eof_line(&self) -> usize {
        self.lines.last().map_or(1, |&(no, _)| no + 1)
    }

    fn expect_header(&mut self, key: &'static str) -> Result<(usize, String), ParseError> {
        let eof = self.eof_line();
        let (no, line) = self
            .next_line()
            .ok_or(ParseError::ExpectedHeader { line: eof, expected: key })?;
        match line.split_once(':') {
            Some((k, v)) if k.trim() == key => Ok((no, v.trim().to_string())),
            _ => Err(ParseError::ExpectedHeader { line: no, expected: key }),
        }
    }

    fn expect_count(&mut self, key: &'static str) -> Result<usize, ParseError> {
        let (no, value) = self.expect_header(key)?;
        value
            .parse::<usize>()
            .map_err(|_| ParseError::BadInteger { line: no, token: value })
    }

    fn expect_rational_row(&mut self, width: usize) -> Result<Vec<Rat>, ParseError> {
        let eof = self.eof_line();
        let (no, line) = self.next_line().ok_or(ParseError::MissingRow { line: eof })?;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != width {
            return Err(ParseError::RowLength {
                line: no,
                expected: width,
                found: tokens.len(),
            });
        }
        tokens.iter().map(|t| parse_rational(t, no)).collect()
    }

    fn expect_letter_row(&mut self) -> Result<Vec<usize>, ParseError> {
        let eof = self.eof_line();
        let (no, line) = self.next_line().ok_or(ParseError::MissingRow { line: eof })?;
        line.split_whitespace()
            .map(|t| {
                t.parse::<usize>().map_err(|_| ParseError::BadInteger {
                    line: no,
                    token: t.to_string(),
                })
            })
            .collect()
    }

    fn expect_end(&mut self) -> Result<(), ParseError> {
        match self.next_line() {
            None => Ok(()),
            Some((no, _)) => Err(ParseError::Trailing { line: no }),
        }
    }
}

fn parse_block(lines: &[(usize, &str)]) -> Result<Document, ParseError> {
    let mut cur = Cursor { lines, pos: 0 };
    let (kind_line, kind) = cur.expect_header("kind")?;
    let n = cur.expect_count("n")?;
    if n == 0 {
        return Err(ParseError::Domain(DomainError::InvalidSize));
    }
    let doc = match kind.as_str() {
        "matrix" => {
            let rows = (0..n)
                .map(|_| cur.expect_rational_row(n))
                .collect::<Result<Vec<_>, _>>()?;
            Document::Matrix(RationalMatrix::from_rows(rows)?)
        }
        "array" => {
            let rows = (0..n)
                .map(|_| cur.expect_rational_row(n))
                .collect::<Result<Vec<_>, _>>()?;
            Document::Array(SquareArray::from_rows(rows)?)
        }
        "corner-grid" => {
            let rows = (0..n)
                .map(|_| cur.expect_rational_row(n))
                .collect::<Result<Vec<_>, _>>()?;
            Document::CornerGrid(CornerGrid::from_inner(rows)?)
        }
        "plane-partition" => {
            let rows = (0..n)
                .map(|_| cur.expect_rational_row(n))
                .collect::<Result<Vec<_>, _>>()?;
            Document::PlanePartition(PlanePartition::from_rows(rows)?)
        }
        "pyramid" => {
            let mut table = PyramidTable::zeros(n);
            for k in 0..=n {
                let (no, value) = cur.expect_header("level")?;
                if value.parse::<usize>().ok() != Some(k) {
                    return Err(ParseError::BadInteger { line: no, token: value });
                }
                let side = n - k + 1;
                for jj in 0..side {
                    let row = cur.expect_rational_row(side)?;
                    for (ii, v) in row.into_iter().enumerate() {
                        let p = PyramidPoint::new(
                            (k + 2 * ii) as i64,
                            (k + 2 * jj) as i64,
                            k as i64,
                        );
                        table.set(p, v);
                    }
                }
            }
            Document::Pyramid(table)
        }
        "tableau-pair" => {
            let mut pair = Vec::with_capacity(2);
            for _ in 0..2 {
                let count = cur.expect_count("rows")?;
                let rows = (0..count)
                    .map(|_| cur.expect_letter_row())
                    .collect::<Result<Vec<_>, _>>()?;
                pair.push(Tableau::from_rows(n, rows)?);
            }
            let second = pair.pop().expect("two tableaux were parsed");
            let first = pair.pop().expect("two tableaux were parsed");
            Document::TableauPair(first, second)
        }
        other => {
            return Err(ParseError::UnknownKind {
                line: kind_line,
                kind: other.to_string(),
            })
        }
    };
    cur.expect_end()?;
    Ok(doc)
}

/// Parse every document in a stream; blank lines separate documents.
pub fn parse_all(text: &str) -> Result<Vec<Document>, ParseError> {
    let mut blocks: Vec<Vec<(usize, &str)>> = Vec::new();
    let mut current: Vec<(usize, &str)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim_end();
        if line.trim().is_empty() {
            if !current.is_empty() {
                blocks.push(std::mem::take(&mut current));
            }
        } else {
            current.push((idx + 1, line));
        }
    }
    if !current.is_empty() {
        blocks.push(current);
    }
    blocks.iter().map(|block| parse_block(block)).collect()
}

/// Parse a stream that must contain exactly one document.
pub fn parse(text: &str) -> Result<Document, ParseError> {
    let mut docs = parse_all(text)?;
    match docs.len() {
        0 => Err(ParseError::Empty),
        1 => Ok(docs.pop().expect("length checked")),
        k => Err(ParseError::NotExactlyOne(k)),
    }
}

fn push_rational_rows(out: &mut String, rows: &[Vec<Rat>]) {
    for row in rows {
        let line: Vec<String> = row.iter().map(format_rational).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
}

/// Canonical serialization, ending with a newline.
pub fn to_text(doc: &Document) -> String {
    let mut out = String::new();
    let n = match doc {
        Document::Matrix(m) => m.n(),
        Document::Array(s) => s.n(),
        Document::CornerGrid(g) => g.n(),
        Document::Pyramid(t) => t.n(),
        Document::PlanePartition(p) => p.n(),
        Document::TableauPair(a, _) => a.n(),
    };
    out.push_str(&format!("kind: {}\nn: {}\n", doc.kind_name(), n));
    match doc {
        Document::Matrix(m) => push_rational_rows(&mut out, &m.rows()),
        Document::Array(s) => push_rational_rows(&mut out, &s.rows()),
        Document::CornerGrid(g) => push_rational_rows(&mut out, &g.inner_rows()),
        Document::PlanePartition(p) => push_rational_rows(&mut out, &p.rows()),
        Document::Pyramid(table) => {
            for k in 0..=n {
                out.push_str(&format!("level: {k}\n"));
                let rows: Vec<Vec<Rat>> = (0..=n - k)
                    .map(|jj| {
                        (0..=n - k)
                            .map(|ii| {
                                let p = PyramidPoint::new(
                                    (k + 2 * ii) as i64,
                                    (k + 2 * jj) as i64,
                                    k as i64,
                                );
                                table.get(p).clone()
                            })
                            .collect()
                    })
                    .collect();
                push_rational_rows(&mut out, &rows);
            }
        }
        Document::TableauPair(a, b) => {
            for t in [a, b] {
                let rows = t.rows();
                out.push_str(&format!("rows: {}\n", rows.len()));
                for row in rows {
                    let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                    out.push_str(&line.join(" "));
                    out.push('\n');
                }
            }
        }
    }
    out
}

/// Serialize several documents, blank-line separated.
pub fn to_text_all(docs: &[Document]) -> String {
    docs.iter().map(to_text).collect::<Vec<_>>().join("\n")
}
