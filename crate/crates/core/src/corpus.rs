//! Streaming graph files: graph6 or sparse6 one graph per line, optionally
//! xz-compressed, or a file of edge lists.

use std::collections::VecDeque;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Read};
use std::path::Path;

use crate::error::{Error, Result};
use crate::format::{self, Format, ParseError, ParseErrorKind};
use crate::multigraph::MultiGraph;

/// Iterator over the graphs of one input, tracking line numbers for errors.
pub struct CorpusReader {
    source: Source,
    format: Format,
    line: usize,
    buf: Vec<u8>,
}

enum Source {
    Lines(Box<dyn BufRead>),
    Parsed(VecDeque<MultiGraph>),
}

impl CorpusReader {
    /// Opens a file; `-` is standard input. A `.xz` suffix means xz
    /// compression. The format comes from the file name when it has a known
    /// extension and is otherwise detected from the first line.
    pub fn open(path: &Path) -> Result<Self> {
        Self::open_as(path, None)
    }

    /// [`CorpusReader::open`] with the format forced when `format` is given.
    pub fn open_as(path: &Path, format: Option<Format>) -> Result<Self> {
        let raw: Box<dyn Read> = if path == Path::new("-") {
            Box::new(io::stdin())
        } else {
            Box::new(File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?)
        };
        let compressed = path.extension().is_some_and(|e| e == "xz");
        let reader: Box<dyn BufRead> = if compressed {
            Box::new(BufReader::with_capacity(1 << 16, xz2::read::XzDecoder::new(raw)))
        } else {
            Box::new(BufReader::with_capacity(1 << 16, raw))
        };
        Self::from_reader(reader, format.or_else(|| Format::from_path(path)))
    }

    /// Wraps a reader; with no format given it is detected from the first line.
    pub fn from_reader(mut reader: Box<dyn BufRead>, format: Option<Format>) -> Result<Self> {
        let format = match format {
            Some(f) => f,
            None => {
                let head = reader.fill_buf()?;
                if head.iter().all(u8::is_ascii_whitespace) {
                    // nothing to read; any line format yields no graphs
                    Format::Graph6
                } else {
                    Format::detect(head).ok_or(ParseError::at(0, ParseErrorKind::BadHeader).on_line(1))?
                }
            }
        };
        let source = if format == Format::Edgelist {
            let mut all = Vec::new();
            reader.read_to_end(&mut all)?;
            Source::Parsed(format::parse_edgelists(&all)?.into())
        } else {
            Source::Lines(reader)
        };
        Ok(CorpusReader { source, format, line: 0, buf: Vec::new() })
    }

    pub fn format(&self) -> Format {
        self.format
    }

    /// Line number of the most recent graph (graph6 and sparse6 only).
    pub fn line(&self) -> usize {
        self.line
    }
}

impl Iterator for CorpusReader {
    type Item = Result<MultiGraph>;

    fn next(&mut self) -> Option<Self::Item> {
        let reader = match &mut self.source {
            Source::Parsed(queue) => return queue.pop_front().map(Ok),
            Source::Lines(reader) => reader,
        };
        loop {
            self.buf.clear();
            match reader.read_until(b'\n', &mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => return Some(Err(e.into())),
            }
            self.line += 1;
            let mut line = self.buf.as_slice();
            if let Some(rest) = line.strip_suffix(b"\n") {
                line = rest;
            }
            if let Some(rest) = line.strip_suffix(b"\r") {
                line = rest;
            }
            if line.is_empty() {
                continue;
            }
            let parsed = match self.format {
                Format::Graph6 => format::parse_graph6(line),
                _ => format::parse_sparse6(line),
            };
            return Some(parsed.map_err(|e| e.on_line(self.line).into()));
        }
    }
}

/// Reads every graph of a file into memory.
pub fn read_all(path: &Path) -> Result<Vec<MultiGraph>> {
    CorpusReader::open(path)?.collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reader(text: &'static [u8], format: Option<Format>) -> Result<CorpusReader> {
        CorpusReader::from_reader(Box::new(text), format)
    }

    #[test]
    fn reads_lines_and_skips_blanks() {
        let graphs: Vec<_> = reader(b"C~\n\nBw\r\n", None).unwrap().collect::<Result<_>>().unwrap();
        assert_eq!(graphs.len(), 2);
        assert_eq!(graphs[1].edge_count(), 3);
    }

    #[test]
    fn errors_report_line_numbers() {
        let mut r = reader(b":@\n:Fa@x^\n:C!\n", None).unwrap();
        assert_eq!(r.format(), Format::Sparse6);
        assert!(r.next().unwrap().is_ok());
        assert!(r.next().unwrap().is_ok());
        match r.next().unwrap() {
            Err(Error::Parse(e)) => assert_eq!((e.line, e.position), (Some(3), 2)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn edge_lists_and_empty_input() {
        let graphs: Vec<_> = reader(b"2 1\n0 1\n2 2\n0 1\n0 1\n", None).unwrap().collect::<Result<_>>().unwrap();
        assert_eq!(graphs.len(), 2);
        assert_eq!(reader(b"", None).unwrap().count(), 0);
        assert!(reader(b"%%%", None).is_err());
    }
}
