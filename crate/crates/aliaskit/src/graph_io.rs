//! GraphML and edge-list serialization of character graphs.

use std::fmt::Write as _;
use std::path::Path;

use aliaskit_core::CharacterGraph;
use quick_xml::escape::escape;
use quick_xml::events::{BytesStart, Event};
use quick_xml::{Reader, XmlVersion};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum GraphFormat {
    Graphml,
    Edgelist,
}

/// GraphML with sorted nodes and edges; the weight is the edge attribute `w`.
pub fn graphml(g: &CharacterGraph) -> String {
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str("<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n");
    out.push_str("  <key id=\"w\" for=\"edge\" attr.name=\"w\" attr.type=\"int\"/>\n");
    out.push_str("  <graph id=\"G\" edgedefault=\"undirected\">\n");
    for n in g.nodes() {
        let _ = writeln!(out, "    <node id=\"{}\"/>", escape(n));
    }
    for (a, b, w) in g.edges() {
        let _ = writeln!(
            out,
            "    <edge source=\"{}\" target=\"{}\"><data key=\"w\">{w}</data></edge>",
            escape(a),
            escape(b)
        );
    }
    out.push_str("  </graph>\n</graphml>\n");
    out
}

/// `A<TAB>B<TAB>weight` per edge, sorted.
pub fn edge_list(g: &CharacterGraph) -> String {
    g.edges().map(|(a, b, w)| format!("{a}\t{b}\t{w}\n")).collect()
}

pub fn render(g: &CharacterGraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Graphml => graphml(g),
        GraphFormat::Edgelist => edge_list(g),
    }
}

fn attr(e: &BytesStart<'_>, name: &str) -> std::result::Result<Option<String>, String> {
    for a in e.attributes() {
        let a = a.map_err(|err| err.to_string())?;
        if a.key.as_ref() == name {
            return a
                .normalized_value(XmlVersion::Implicit1_0).map(|v| Some(v.into_owned())).map_err(|err| err.to_string());
        }
    }
    Ok(None)
}

/// Read back a graph written by [`graphml`]. Only nodes, edges and the `w`
/// data attribute are interpreted.
pub fn parse_graphml(text: &str, path: &Path) -> Result<CharacterGraph> {
    let fail = |message: String| Error::Format {
        path: path.to_path_buf(),
        message,
    };
    let mut reader = Reader::from_str(text);
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    let mut edge: Option<(String, String)> = None;
    let mut in_weight = false;
    let mut weight: Option<u64> = None;
    let mut depth = 0usize;
    loop {
        let event = reader.read_event().map_err(|e| fail(e.to_string()))?;
        match event {
            Event::Start(ref e) | Event::Empty(ref e) => {
                let empty = matches!(event, Event::Empty(_));
                if !empty {
                    depth += 1;
                }
                match e.name().as_ref() {
                    "node" => {
                        let id = attr(e, "id").map_err(&fail)?.ok_or_else(|| fail("node without id".into()))?;
                        nodes.push(id);
                    }
                    "edge" => {
                        let s = attr(e, "source").map_err(&fail)?;
                        let t = attr(e, "target").map_err(&fail)?;
                        let (Some(s), Some(t)) = (s, t) else {
                            return Err(fail("edge without source or target".into()));
                        };
                        if empty {
                            return Err(fail(format!("edge {s:?}-{t:?} has no weight")));
                        }
                        edge = Some((s, t));
                        weight = None;
                    }
                    "data" if edge.is_some() && attr(e, "key").map_err(&fail)?.as_deref() == Some("w") => {
                        in_weight = !empty;
                    }
                    _ => {}
                }
            }
            Event::Text(t) if in_weight => {
                let raw = t.xml10_content();
                let w = raw
                    .trim()
                    .parse::<u64>()
                    .map_err(|_| fail(format!("edge weight {:?} is not an integer", raw.trim())))?;
                weight = Some(w);
            }
            Event::End(e) => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| fail("unbalanced closing tag".into()))?;
                match e.name().as_ref() {
                    "data" => in_weight = false,
                    "edge" => {
                        let (s, t) = edge.take().ok_or_else(|| fail("unbalanced edge".into()))?;
                        let w = weight.take().ok_or_else(|| fail(format!("edge {s:?}-{t:?} has no weight")))?;
                        edges.push((s, t, w));
                    }
                    _ => {}
                }
            }
            Event::Eof if depth > 0 => return Err(fail("document ends inside an element".into())),
            Event::Eof => break,
            _ => {}
        }
    }
    CharacterGraph::from_parts(nodes, edges).map_err(|e| fail(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::path::PathBuf;

    fn g() -> CharacterGraph {
        CharacterGraph::from_parts(
            ["B".to_string(), "A".to_string(), "Tom & \"Jerry\" <x>".to_string()],
            [("B".to_string(), "A".to_string(), 1), ("A".to_string(), "Tom & \"Jerry\" <x>".to_string(), 3)],
        )
        .unwrap()
    }

    #[test]
    fn edge_list_lines() {
        let two = CharacterGraph::from_parts(
            ["A".to_string(), "B".to_string()],
            [("A".to_string(), "B".to_string(), 1)],
        )
        .unwrap();
        assert_eq!(edge_list(&two), "A\tB\t1\n");
        assert_eq!(edge_list(&CharacterGraph::default()), "");
    }

    #[test]
    fn graphml_round_trip() {
        let text = graphml(&g());
        let back = parse_graphml(&text, &PathBuf::from("g.graphml")).unwrap();
        assert_eq!(back, g());
        assert_eq!(graphml(&back), text);
        let empty = graphml(&CharacterGraph::default());
        assert!(!empty.contains("<node"));
        assert_eq!(parse_graphml(&empty, &PathBuf::from("e")).unwrap(), CharacterGraph::default());
    }

    #[test]
    fn graphml_errors() {
        let p = PathBuf::from("bad");
        assert!(parse_graphml("<graphml><graph><node/></graph></graphml>", &p).is_err());
        let bad_w = "<graphml><graph><node id=\"a\"/><node id=\"b\"/><edge source=\"a\" target=\"b\"><data key=\"w\">x</data></edge></graph></graphml>";
        assert!(parse_graphml(bad_w, &p).is_err());
        let dangling = "<graphml><graph><node id=\"a\"/><edge source=\"a\" target=\"b\"><data key=\"w\">1</data></edge></graph></graphml>";
        assert!(parse_graphml(dangling, &p).is_err());
    }
}
