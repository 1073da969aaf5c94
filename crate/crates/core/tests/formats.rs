use std::fs;
use std::path::PathBuf;

use brickyard::corpus::{read_all, CorpusReader};
use brickyard::format::{emit_graph, parse_graph, to_graph6, to_sparse6, Format};
use brickyard::MultiGraph;

/// Order and sorted edge list; graph equality also compares edge order.
fn shape(g: &MultiGraph) -> (usize, Vec<(usize, usize)>) {
    let mut edges: Vec<_> = g.edges().map(|(_, e)| e).collect();
    edges.sort_unstable();
    (g.vertex_count(), edges)
}

fn testdata(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../testdata").join(name)
}

fn lines(name: &str) -> Vec<String> {
    fs::read_to_string(testdata(name)).unwrap().lines().map(str::to_string).collect()
}

#[test]
fn graph6_reemits_byte_for_byte() {
    for n in 4..=8 {
        let name = format!("corpus/connected{n:02}.g6");
        let original = lines(&name);
        let graphs = read_all(&testdata(&name)).unwrap();
        assert_eq!(graphs.len(), original.len());
        for (g, line) in graphs.iter().zip(&original) {
            assert_eq!(&to_graph6(g).unwrap(), line);
        }
    }
}

#[test]
fn sparse6_matches_reference_encoder() {
    for n in [6, 8] {
        let golden = lines(&format!("golden/connected{n:02}.s6"));
        let graphs = read_all(&testdata(&format!("corpus/connected{n:02}.g6"))).unwrap();
        assert_eq!(graphs.len(), golden.len());
        for (g, expected) in graphs.iter().zip(&golden) {
            assert_eq!(&to_sparse6(g), expected);
        }
        let reparsed = read_all(&testdata(&format!("golden/connected{n:02}.s6"))).unwrap();
        assert!(reparsed.iter().zip(&graphs).all(|(a, b)| shape(a) == shape(b)));
    }
}

#[test]
fn every_format_round_trips_the_corpus() {
    for g in read_all(&testdata("corpus/connected07.g6")).unwrap() {
        for format in [Format::Graph6, Format::Sparse6, Format::Edgelist] {
            let text = emit_graph(&g, format).unwrap();
            assert_eq!(shape(&parse_graph(text.as_bytes(), format).unwrap()), shape(&g), "{format}");
        }
    }
}

#[test]
fn compressed_corpus_streams() {
    let mut reader = CorpusReader::open(&testdata("corpus/connected09.g6.xz")).unwrap();
    assert_eq!(reader.format(), Format::Graph6);
    let first = reader.next().unwrap().unwrap();
    assert_eq!(first.vertex_count(), 9);
    assert_eq!(reader.by_ref().take(999).filter(|g| g.is_ok()).count(), 999);
    assert_eq!(reader.line(), 1000);
}
