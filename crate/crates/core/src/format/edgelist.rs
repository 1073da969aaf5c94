use crate::format::{ParseError, ParseErrorKind, MAX_PARSE_N};
use crate::multigraph::MultiGraph;

type ParseResult<T> = std::result::Result<T, ParseError>;

type NumberedLines<'a> = std::iter::Enumerate<std::slice::Split<'a, u8, fn(&u8) -> bool>>;

struct Lines<'a> {
    inner: NumberedLines<'a>,
}

impl<'a> Lines<'a> {
    fn new(input: &'a [u8]) -> Self {
        let newline: fn(&u8) -> bool = |&b| b == b'\n';
        Lines { inner: input.split(newline).enumerate() }
    }

    /// Next non-blank line with its 1-based number.
    fn next_nonblank(&mut self) -> Option<(usize, &'a [u8])> {
        self.inner.by_ref().map(|(i, l)| (i + 1, l)).find(|(_, l)| !l.trim_ascii().is_empty())
    }
}

/// Two whitespace-separated unsigned integers with their byte offsets; errors
/// point at the offending byte.
fn pair(line: &[u8], number: usize, kind: ParseErrorKind) -> ParseResult<[(usize, usize); 2]> {
    let fail = |pos: usize| ParseError::at(pos, kind.clone()).on_line(number);
    let mut fields = Vec::with_capacity(2);
    let mut i = 0;
    while i < line.len() {
        if line[i].is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        while i < line.len() && !line[i].is_ascii_whitespace() {
            i += 1;
        }
        let token = &line[start..i];
        if !token.iter().all(u8::is_ascii_digit) {
            return Err(fail(start));
        }
        let value = std::str::from_utf8(token).ok().and_then(|t| t.parse::<usize>().ok()).ok_or_else(|| fail(start))?;
        fields.push((start, value));
    }
    match fields[..] {
        [a, b] => Ok([a, b]),
        [_, _, (pos, _), ..] => Err(fail(pos)),
        _ => Err(fail(line.len())),
    }
}

fn read_one(lines: &mut Lines<'_>, header: (usize, &[u8])) -> ParseResult<MultiGraph> {
    let (number, text) = header;
    let [(_, n), (_, m)] = pair(text, number, ParseErrorKind::BadHeader)?;
    if n == 0 {
        return Err(ParseError::at(0, ParseErrorKind::NoVertices).on_line(number));
    }
    if n > MAX_PARSE_N {
        return Err(ParseError::at(0, ParseErrorKind::TooManyVertices(n as u64)).on_line(number));
    }
    let mut g = MultiGraph::new(n).expect("n is positive");
    let mut last = number;
    for found in 0..m {
        let Some((number, text)) = lines.next_nonblank() else {
            return Err(ParseError::at(0, ParseErrorKind::MissingEdges { expected: m, found }).on_line(last + 1));
        };
        last = number;
        let [(pu, u), (pv, v)] = pair(text, number, ParseErrorKind::BadEdgeLine)?;
        for (pos, w) in [(pu, u), (pv, v)] {
            if w >= n {
                return Err(ParseError::at(pos, ParseErrorKind::VertexOutOfRange { vertex: w, n }).on_line(number));
            }
        }
        if u == v {
            return Err(ParseError::at(pv, ParseErrorKind::Loop(u)).on_line(number));
        }
        g.add_edge(u, v).expect("validated above");
    }
    Ok(g)
}

/// Parses exactly one edge list graph; anything after its last edge line
/// other than whitespace is an error.
pub fn parse_edgelist(input: &[u8]) -> ParseResult<MultiGraph> {
    let mut lines = Lines::new(input);
    let header = lines.next_nonblank().ok_or(ParseError::at(0, ParseErrorKind::Empty))?;
    let g = read_one(&mut lines, header)?;
    if let Some((number, _)) = lines.next_nonblank() {
        return Err(ParseError::at(0, ParseErrorKind::BadEdgeLine).on_line(number));
    }
    Ok(g)
}

/// Parses a sequence of edge list graphs written back to back.
pub fn parse_edgelists(input: &[u8]) -> ParseResult<Vec<MultiGraph>> {
    let mut lines = Lines::new(input);
    let mut out = Vec::new();
    while let Some(header) = lines.next_nonblank() {
        out.push(read_one(&mut lines, header)?);
    }
    Ok(out)
}

/// `n m` followed by one `u v` line per edge in edge id order, newline terminated.
pub fn to_edgelist(g: &MultiGraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (_, (u, v)) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
