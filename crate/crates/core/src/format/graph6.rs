use crate::error::{Error, Result};
use crate::format::{read_size, write_size, BitReader, BitWriter, ParseError, ParseErrorKind};
use crate::multigraph::MultiGraph;

const HEADER: &[u8] = b">>graph6<<";

/// Decodes one graph6 line (no newline). Edges come out sorted by `(u, v)`, `u < v`.
pub fn parse_graph6(line: &[u8]) -> std::result::Result<MultiGraph, ParseError> {
    let start = if line.starts_with(HEADER) { HEADER.len() } else { 0 };
    let (n, used) = read_size(&line[start..], start)?;
    let offset = start + used;
    let data = &line[offset..];
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if data.len() != expected {
        return Err(ParseError::at(offset + data.len().min(expected), ParseErrorKind::WrongLength {
            expected,
            found: data.len(),
        }));
    }
    let mut reader = BitReader::new(data, offset)?;
    // bits run down the columns of the upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if reader.bit() {
                edges.push((i, j));
            }
        }
    }
    if reader.remaining() > 0 && reader.bits(reader.remaining() as u32) != 0 {
        return Err(ParseError::at(offset + expected - 1, ParseErrorKind::BadPadding));
    }
    edges.sort_unstable();
    let mut g = MultiGraph::new(n).expect("n is positive");
    for (u, v) in edges {
        g.add_edge(u, v).expect("decoded edges are in range and loopless");
    }
    Ok(g)
}

/// Encodes a simple graph as graph6; parallel edges are rejected.
pub fn to_graph6(g: &MultiGraph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let n = g.vertex_count();
    let mut adjacent = vec![false; n * n];
    for (_, (u, v)) in g.edges() {
        adjacent[u * n + v] = true;
    }
    let mut prefix = String::new();
    write_size(&mut prefix, n);
    let mut w = BitWriter::new(prefix);
    for j in 1..n {
        for i in 0..j {
            w.push(adjacent[i * n + j]);
        }
    }
    while w.free() != 6 {
        w.push(false);
    }
    Ok(w.finish())
}
