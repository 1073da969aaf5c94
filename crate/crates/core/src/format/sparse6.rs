use crate::format::{read_size, write_size, BitReader, BitWriter, ParseError, ParseErrorKind};
use crate::multigraph::MultiGraph;

const HEADER: &[u8] = b">>sparse6<<";

/// Bits needed to write `n − 1`.
fn width(n: usize) -> u32 {
    usize::BITS - (n - 1).leading_zeros()
}

/// Decodes one sparse6 line (no newline). Edges keep their order in the
/// encoding, so parallel edges survive a round trip.
pub fn parse_sparse6(line: &[u8]) -> std::result::Result<MultiGraph, ParseError> {
    let start = if line.starts_with(HEADER) { HEADER.len() } else { 0 };
    match line.get(start) {
        Some(b':') => {}
        None => return Err(ParseError::at(start, ParseErrorKind::Empty)),
        Some(_) => return Err(ParseError::at(start, ParseErrorKind::BadHeader)),
    }
    let (n, used) = read_size(&line[start + 1..], start + 1)?;
    let offset = start + 1 + used;
    let mut reader = BitReader::new(&line[offset..], offset)?;
    let k = width(n);
    let mut g = MultiGraph::new(n).expect("n is positive");
    let mut v = 0usize;
    // an incomplete final (b, x) record is padding
    while reader.remaining() > k as usize {
        if reader.bit() {
            v += 1;
        }
        let x = reader.bits(k);
        if x > v {
            v = x;
        } else if v < n {
            if x == v {
                return Err(ParseError::at(reader.last_byte(), ParseErrorKind::Loop(v)));
            }
            g.add_edge(x, v).expect("x < v < n");
        }
    }
    Ok(g)
}

/// Encodes any loopless multigraph as sparse6, byte-identical to nauty's encoder.
pub fn to_sparse6(g: &MultiGraph) -> String {
    let n = g.vertex_count();
    let k = width(n);
    let mut prefix = String::from(":");
    write_size(&mut prefix, n);
    let mut w = BitWriter::new(prefix);
    let mut edges: Vec<(usize, usize)> = g.edges().map(|(_, (i, j))| (j, i)).collect();
    edges.sort_unstable();
    let mut last = 0;
    for (j, i) in edges {
        if j == last {
            w.push(false);
        } else {
            w.push(true);
            if j > last + 1 {
                w.push_bits(j, k);
                w.push(false);
            }
            last = j;
        }
        w.push_bits(i, k);
    }
    let free = w.free();
    if free != 6 {
        if free > k && n >= 2 && last == n - 2 && n == 1 << k {
            // all-ones padding would decode as a spurious edge here
            w.push(false);
        }
        while w.free() != 6 {
            w.push(true);
        }
    }
    w.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges(g: &MultiGraph) -> Vec<(usize, usize)> {
        g.edges().map(|(_, e)| e).collect()
    }

    #[test]
    fn format_definition_example() {
        // n = 7, edges 01 02 12 56
        let g = parse_sparse6(b":Fa@x^").unwrap();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(edges(&g), vec![(0, 1), (0, 2), (1, 2), (5, 6)]);
        assert_eq!(to_sparse6(&g), ":Fa@x^");
    }

    #[test]
    fn parallel_edges_round_trip() {
        let g = MultiGraph::from_edges(2, [(0, 1), (0, 1), (0, 1)]).unwrap();
        let s = to_sparse6(&g);
        assert_eq!(edges(&parse_sparse6(s.as_bytes()).unwrap()), vec![(0, 1); 3]);
    }

    #[test]
    fn padding_special_case() {
        // n = 4 is a power of two and the last edge ends at n − 2
        let g = MultiGraph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        let s = to_sparse6(&g);
        assert_eq!(edges(&parse_sparse6(s.as_bytes()).unwrap()), edges(&g));
        let g = MultiGraph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(edges(&parse_sparse6(to_sparse6(&g).as_bytes()).unwrap()), edges(&g));
    }

    #[test]
    fn single_vertex() {
        let g = MultiGraph::new(1).unwrap();
        assert_eq!(to_sparse6(&g), ":@");
        assert_eq!(parse_sparse6(b":@").unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(parse_sparse6(b"").unwrap_err().kind, ParseErrorKind::Empty);
        assert_eq!(parse_sparse6(b"C~").unwrap_err().kind, ParseErrorKind::BadHeader);
        assert_eq!(parse_sparse6(b":?").unwrap_err().kind, ParseErrorKind::NoVertices);
        let err = parse_sparse6(b":C!").unwrap_err();
        assert_eq!((err.position, err.kind), (2, ParseErrorKind::BadByte(b'!')));
        // n = 4, k = 2: the first record (b=1, x=1) moves to v = 1 and names it again
        // bits 101001 = 41 -> 'h'
        let err = parse_sparse6(b":Ch").unwrap_err();
        assert_eq!((err.position, err.kind), (2, ParseErrorKind::Loop(1)));
        assert!(parse_sparse6(b">>sparse6<<:@").is_ok());
    }
}
