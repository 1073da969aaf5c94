//! Reading and writing graphs: graph6, sparse6 and a plain edge list.
//!
//! graph6 and sparse6 follow the byte-level definitions shipped with nauty
//! (`formats.txt`); the sparse6 encoder reproduces `ntos6` bit for bit,
//! padding rule included. The edge list format is a header line `n m`
//! followed by `m` lines `u v` with 0-based vertices.

mod edgelist;
mod graph6;
mod sparse6;

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use thiserror::Error;

use crate::error::Result;
use crate::multigraph::MultiGraph;

pub use edgelist::{parse_edgelist, parse_edgelists, to_edgelist};
pub use graph6::{parse_graph6, to_graph6};
pub use sparse6::{parse_sparse6, to_sparse6};

/// Largest vertex count accepted from any input.
pub const MAX_PARSE_N: usize = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Format {
    Graph6,
    Sparse6,
    Edgelist,
}

impl Format {
    /// Guesses the format from a file name: `.g6`, `.s6` and `.el`/`.edges`/`.txt`,
    /// looking through a trailing `.xz`.
    pub fn from_path(path: &Path) -> Option<Format> {
        let name = path.file_name()?.to_str()?;
        let name = name.strip_suffix(".xz").unwrap_or(name);
        match name.rsplit_once('.')?.1 {
            "g6" => Some(Format::Graph6),
            "s6" => Some(Format::Sparse6),
            "el" | "edges" | "txt" => Some(Format::Edgelist),
            _ => None,
        }
    }

    /// Guesses the format from the first non-blank line.
    pub fn detect(input: &[u8]) -> Option<Format> {
        let line = input.split(|&b| b == b'\n').find(|l| !l.trim_ascii().is_empty())?;
        let line = line.trim_ascii();
        if line.starts_with(b":") || line.starts_with(b">>sparse6<<") {
            Some(Format::Sparse6)
        } else if line.starts_with(b">>graph6<<") || line.iter().all(|b| (63..=126).contains(b)) {
            Some(Format::Graph6)
        } else if line.iter().all(|b| b.is_ascii_digit() || b.is_ascii_whitespace()) {
            Some(Format::Edgelist)
        } else {
            None
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Graph6 => "graph6",
            Format::Sparse6 => "sparse6",
            Format::Edgelist => "edgelist",
        })
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "graph6" | "g6" => Ok(Format::Graph6),
            "sparse6" | "s6" => Ok(Format::Sparse6),
            "edgelist" | "el" => Ok(Format::Edgelist),
            other => Err(format!("unknown format `{other}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("empty input")]
    Empty,
    #[error("malformed header")]
    BadHeader,
    #[error("invalid byte {0:#04x}")]
    BadByte(u8),
    #[error("expected {expected} data bytes, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("nonzero padding bits")]
    BadPadding,
    #[error("graph has no vertices")]
    NoVertices,
    #[error("{0} vertices exceed the supported maximum")]
    TooManyVertices(u64),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("malformed edge line")]
    BadEdgeLine,
    #[error("expected {expected} edges, found {found}")]
    MissingEdges { expected: usize, found: usize },
}

/// A parse failure with its location: 1-based line (when known) and 0-based
/// byte offset within that line.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: Option<usize>,
    pub position: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub(crate) fn at(position: usize, kind: ParseErrorKind) -> Self {
        ParseError { line: None, position, kind }
    }

    pub fn on_line(mut self, line: usize) -> Self {
        self.line = Some(line);
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}, byte {}: {}", self.position, self.kind),
            None => write!(f, "byte {}: {}", self.position, self.kind),
        }
    }
}

/// Parses a single graph. For graph6 and sparse6 the input is one line
/// (a trailing newline is allowed).
pub fn parse_graph(input: &[u8], format: Format) -> Result<MultiGraph> {
    let line = input.strip_suffix(b"\n").unwrap_or(input);
    let line = line.strip_suffix(b"\r").unwrap_or(line);
    Ok(match format {
        Format::Graph6 => parse_graph6(line)?,
        Format::Sparse6 => parse_sparse6(line)?,
        Format::Edgelist => parse_edgelist(input)?,
    })
}

/// Parses every graph in a buffer: one per line for graph6 and sparse6,
/// consecutive blocks for edge lists. Blank lines are skipped.
pub fn parse_graphs(input: &[u8], format: Format) -> Result<Vec<MultiGraph>> {
    if format == Format::Edgelist {
        return Ok(parse_edgelists(input)?);
    }
    let mut out = Vec::new();
    for (i, line) in input.split(|&b| b == b'\n').enumerate() {
        let line = line.strip_suffix(b"\r").unwrap_or(line);
        if line.is_empty() {
            continue;
        }
        let g = match format {
            Format::Graph6 => parse_graph6(line),
            _ => parse_sparse6(line),
        };
        out.push(g.map_err(|e| e.on_line(i + 1))?);
    }
    Ok(out)
}

/// Encodes one graph, without a trailing newline for graph6 and sparse6.
pub fn emit_graph(g: &MultiGraph, format: Format) -> Result<String> {
    match format {
        Format::Graph6 => to_graph6(g),
        Format::Sparse6 => Ok(to_sparse6(g)),
        Format::Edgelist => Ok(to_edgelist(g)),
    }
}

/// `N(n)` from the graph6/sparse6 definitions; returns `n` and the bytes consumed.
pub(crate) fn read_size(data: &[u8], offset: usize) -> std::result::Result<(usize, usize), ParseError> {
    let byte = |i: usize| -> std::result::Result<u64, ParseError> {
        match data.get(i) {
            None => Err(ParseError::at(offset + i, ParseErrorKind::BadHeader)),
            Some(&b) if (63..=126).contains(&b) => Ok(u64::from(b - 63)),
            Some(&b) => Err(ParseError::at(offset + i, ParseErrorKind::BadByte(b))),
        }
    };
    let (n, used) = match data.first() {
        None => return Err(ParseError::at(offset, ParseErrorKind::Empty)),
        Some(126) if data.get(1) == Some(&126) => ((2..8).try_fold(0, |acc, i| Ok(acc << 6 | byte(i)?))?, 8),
        Some(126) => ((1..4).try_fold(0, |acc, i| Ok(acc << 6 | byte(i)?))?, 4),
        Some(_) => (byte(0)?, 1),
    };
    if n == 0 {
        return Err(ParseError::at(offset, ParseErrorKind::NoVertices));
    }
    if n > MAX_PARSE_N as u64 {
        return Err(ParseError::at(offset, ParseErrorKind::TooManyVertices(n)));
    }
    Ok((n as usize, used))
}

pub(crate) fn write_size(out: &mut String, n: usize) {
    let push = |out: &mut String, n: usize, groups: u32| {
        for g in (0..groups).rev() {
            out.push(char::from(63 + (n >> (6 * g) & 63) as u8));
        }
    };
    if n <= 62 {
        push(out, n, 1);
    } else if n <= 258_047 {
        out.push('~');
        push(out, n, 3);
    } else {
        out.push_str("~~");
        push(out, n, 6);
    }
}

/// Packs bits six to a byte, most significant first, as printable characters.
pub(crate) struct BitWriter {
    out: String,
    acc: u8,
    used: u32,
}

impl BitWriter {
    pub(crate) fn new(prefix: String) -> Self {
        BitWriter { out: prefix, acc: 0, used: 0 }
    }

    pub(crate) fn push(&mut self, bit: bool) {
        self.acc = self.acc << 1 | u8::from(bit);
        self.used += 1;
        if self.used == 6 {
            self.out.push(char::from(63 + self.acc));
            self.acc = 0;
            self.used = 0;
        }
    }

    pub(crate) fn push_bits(&mut self, value: usize, width: u32) {
        for i in (0..width).rev() {
            self.push(value >> i & 1 == 1);
        }
    }

    /// Free bits left in the current partial byte (6 when it is empty).
    pub(crate) fn free(&self) -> u32 {
        6 - self.used
    }

    pub(crate) fn finish(self) -> String {
        debug_assert_eq!(self.used, 0);
        self.out
    }
}

/// Reads the data section of a graph6/sparse6 line six bits per byte.
pub(crate) struct BitReader<'a> {
    data: &'a [u8],
    offset: usize,
    pos: usize,
}

impl<'a> BitReader<'a> {
    /// Validates that every byte is printable in the 63..=126 range.
    pub(crate) fn new(data: &'a [u8], offset: usize) -> std::result::Result<Self, ParseError> {
        if let Some(i) = data.iter().position(|b| !(63..=126).contains(b)) {
            return Err(ParseError::at(offset + i, ParseErrorKind::BadByte(data[i])));
        }
        Ok(BitReader { data, offset, pos: 0 })
    }

    pub(crate) fn remaining(&self) -> usize {
        self.data.len() * 6 - self.pos
    }

    /// Byte offset (within the line) of the byte holding the last bit read.
    pub(crate) fn last_byte(&self) -> usize {
        self.offset + self.pos.saturating_sub(1) / 6
    }

    pub(crate) fn bit(&mut self) -> bool {
        let b = self.data[self.pos / 6] - 63;
        let bit = b >> (5 - self.pos % 6) & 1 == 1;
        self.pos += 1;
        bit
    }

    pub(crate) fn bits(&mut self, width: u32) -> usize {
        (0..width).fold(0, |acc, _| acc << 1 | usize::from(self.bit()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_field_round_trips() {
        for n in [1, 2, 62, 63, 64, 258_047, 258_048, MAX_PARSE_N] {
            let mut s = String::new();
            write_size(&mut s, n);
            assert_eq!(read_size(s.as_bytes(), 0).unwrap(), (n, s.len()));
        }
        for (n, text) in [(30, "]"), (12345, "~B?x"), (460_175_067, "~~?ZZZZZ")] {
            let mut s = String::new();
            write_size(&mut s, n);
            assert_eq!(s, text);
        }
    }

    #[test]
    fn detects_formats() {
        assert_eq!(Format::detect(b"C~\n"), Some(Format::Graph6));
        assert_eq!(Format::detect(b":Es@Gs\n"), Some(Format::Sparse6));
        assert_eq!(Format::detect(b"2 1\n0 1\n"), Some(Format::Edgelist));
        assert_eq!(Format::detect(b"\n>>graph6<<C~"), Some(Format::Graph6));
        assert_eq!(Format::detect(b"hello world"), None);
        assert_eq!(Format::detect(b""), None);
        assert_eq!(Format::from_path(Path::new("a/b.g6.xz")), Some(Format::Graph6));
        assert_eq!(Format::from_path(Path::new("x.s6")), Some(Format::Sparse6));
        assert_eq!(Format::from_path(Path::new("x.el")), Some(Format::Edgelist));
        assert_eq!(Format::from_path(Path::new("x")), None);
    }

    #[test]
    fn multi_line_errors_carry_line_numbers() {
        let err = parse_graphs(b"C~\nC!\n", Format::Graph6).unwrap_err();
        match err {
            crate::Error::Parse(p) => {
                assert_eq!(p.line, Some(2));
                assert_eq!(p.position, 1);
                assert_eq!(p.kind, ParseErrorKind::BadByte(b'!'));
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
