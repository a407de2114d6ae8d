//! The `.1pg` interchange format and DOT export.
//!
//! ```text
//! 1pg 1
//! vertices 5
//! v 0 true a1
//! v 4 fake
//! edges 6
//! e 0 0 2 x 4
//! rotation
//! r 0 : 0u 3 5
//! r 4 : 0u 1u 0v 1v
//! ```
//!
//! Records appear in id order. A `v` line gives the kind and an optional
//! label (the rest of the line). An `e` line gives the endpoints and, after
//! `x`, the fake vertex where the edge is crossed. An `r` line lists the
//! segment ends around a vertex in rotation order: an edge id alone for an
//! uncrossed edge, suffixed `u` or `v` for the half on that endpoint's side.
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use crate::drawing::{validate, Half, OnePlaneGraph, RawDrawing, RawEdge, RawVertex, VertexKind};
use crate::error::{Error, Result};
use crate::ids::{EdgeId, VertexId};

pub const FORMAT_VERSION: u32 = 1;

pub fn serialize(g: &OnePlaneGraph) -> String {
    serialize_raw(&g.to_raw())
}

pub fn serialize_raw(raw: &RawDrawing) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "1pg {FORMAT_VERSION}");
    let _ = writeln!(out, "vertices {}", raw.vertices.len());
    for (i, v) in raw.vertices.iter().enumerate() {
        let kind = match v.kind {
            VertexKind::True => "true",
            VertexKind::Fake => "fake",
        };
        match &v.label {
            Some(l) => {
                let _ = writeln!(out, "v {i} {kind} {l}");
            }
            None => {
                let _ = writeln!(out, "v {i} {kind}");
            }
        }
    }
    let _ = writeln!(out, "edges {}", raw.edges.len());
    for (i, e) in raw.edges.iter().enumerate() {
        let _ = write!(out, "e {i} {} {}", e.u.0, e.v.0);
        for c in &e.crossings {
            let _ = write!(out, " x {}", c.0);
        }
        out.push('\n');
    }
    out.push_str("rotation\n");
    for (i, rot) in raw.rotation.iter().enumerate() {
        let _ = write!(out, "r {i} :");
        for (e, h) in rot {
            let _ = write!(out, " {}{h}", e.0);
        }
        out.push('\n');
    }
    out
}

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| perr(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| perr(line, format!("bad {what} `{tok}`")))
}

/// Parses a document into its raw drawing without validating it.
pub fn parse_raw(text: &str) -> Result<RawDrawing> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let mut next = |what: &str| {
        lines
            .next()
            .ok_or_else(|| perr(0, format!("unexpected end of input, expected {what}")))
    };

    let (ln, header) = next("header")?;
    let mut t = header.split_whitespace();
    if t.next() != Some("1pg") {
        return Err(perr(ln, "missing `1pg` header"));
    }
    let version = num(t.next(), ln, "version")?;
    if version != FORMAT_VERSION as usize {
        return Err(perr(ln, format!("unsupported version {version}")));
    }

    let mut raw = RawDrawing::default();
    let (ln, l) = next("vertex count")?;
    let mut t = l.split_whitespace();
    if t.next() != Some("vertices") {
        return Err(perr(ln, "expected `vertices <count>`"));
    }
    let nv = num(t.next(), ln, "vertex count")?;
    for i in 0..nv {
        let (ln, l) = next("vertex record")?;
        let mut parts = l.splitn(4, char::is_whitespace);
        if parts.next() != Some("v") {
            return Err(perr(ln, "expected vertex record `v <id> <kind> [label]`"));
        }
        if num(parts.next(), ln, "vertex id")? != i {
            return Err(perr(
                ln,
                format!("vertex records out of order, expected id {i}"),
            ));
        }
        let kind = match parts.next() {
            Some("true") => VertexKind::True,
            Some("fake") => VertexKind::Fake,
            other => return Err(perr(ln, format!("bad vertex kind {other:?}"))),
        };
        let label = parts
            .next()
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(String::from);
        raw.vertices.push(RawVertex { kind, label });
    }

    let (ln, l) = next("edge count")?;
    let mut t = l.split_whitespace();
    if t.next() != Some("edges") {
        return Err(perr(ln, "expected `edges <count>`"));
    }
    let ne = num(t.next(), ln, "edge count")?;
    for i in 0..ne {
        let (ln, l) = next("edge record")?;
        let mut t = l.split_whitespace();
        if t.next() != Some("e") {
            return Err(perr(ln, "expected edge record `e <id> <u> <v> [x <fake>]`"));
        }
        if num(t.next(), ln, "edge id")? != i {
            return Err(perr(
                ln,
                format!("edge records out of order, expected id {i}"),
            ));
        }
        let u = VertexId(num(t.next(), ln, "endpoint")?);
        let v = VertexId(num(t.next(), ln, "endpoint")?);
        let mut crossings = Vec::new();
        while let Some(tok) = t.next() {
            if tok != "x" {
                return Err(perr(ln, format!("unexpected `{tok}`")));
            }
            crossings.push(VertexId(num(t.next(), ln, "crossing vertex")?));
        }
        raw.edges.push(RawEdge { u, v, crossings });
    }

    let (ln, l) = next("rotation section")?;
    if l != "rotation" {
        return Err(perr(ln, "expected `rotation`"));
    }
    for i in 0..nv {
        let (ln, l) = next("rotation record")?;
        let mut t = l.split_whitespace();
        if t.next() != Some("r") {
            return Err(perr(ln, "expected rotation record `r <id> : ...`"));
        }
        if num(t.next(), ln, "vertex id")? != i {
            return Err(perr(
                ln,
                format!("rotation records out of order, expected id {i}"),
            ));
        }
        if t.next() != Some(":") {
            return Err(perr(ln, "expected `:`"));
        }
        let mut rot = Vec::new();
        for tok in t {
            let (digits, half) = match tok.as_bytes().last() {
                Some(b'u') => (&tok[..tok.len() - 1], Half::USide),
                Some(b'v') => (&tok[..tok.len() - 1], Half::VSide),
                _ => (tok, Half::Whole),
            };
            let e = digits
                .parse()
                .map_err(|_| perr(ln, format!("bad segment end `{tok}`")))?;
            rot.push((EdgeId(e), half));
        }
        raw.rotation.push(rot);
    }
    if let Some((ln, l)) = lines.next() {
        return Err(perr(ln, format!("trailing content `{l}`")));
    }
    Ok(raw)
}

pub fn parse(text: &str) -> Result<OnePlaneGraph> {
    Ok(validate(&parse_raw(text)?)?)
}

/// Graphviz rendering of the planarization. Fake vertices are small red
/// points annotated with the crossing pair; each segment is one DOT edge.
pub fn to_dot(g: &OnePlaneGraph) -> String {
    let mut out = String::from("graph planarization {\n  node [shape=circle];\n");
    for v in g.true_vertices() {
        let label = g
            .label(v)
            .map(String::from)
            .unwrap_or_else(|| v.0.to_string());
        let _ = writeln!(
            out,
            "  v{} [label=\"{}\"];",
            v.0,
            label.replace('"', "\\\"")
        );
    }
    for c in g.fake_vertices() {
        let (e, f) = g.crossing_pair(c);
        let _ = writeln!(
            out,
            "  v{} [shape=point, width=0.08, color=red, xlabel=\"{}x{}\"];",
            c.0, e.0, f.0
        );
    }
    for s in g.segments() {
        let style = if g.edge(s.edge).crossing.is_some() {
            ", style=dashed, color=gray40"
        } else {
            ""
        };
        let _ = writeln!(
            out,
            "  v{} -- v{} [label=\"{}\"{style}];",
            s.from.0, s.to.0, s.edge.0
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::plane_from_faces;

    #[test]
    fn round_trip_keeps_labels_and_rotation() {
        let g = plane_from_faces(
            vec![Some("a".into()), None, Some("c d".into()), None],
            &[vec![0, 1, 2, 3], vec![3, 2, 1, 0]],
        )
        .unwrap();
        let text = serialize(&g);
        let h = parse(&text).unwrap();
        assert_eq!(g, h);
        assert_eq!(serialize(&h), text);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse("1pg 1\nvertices 1\nv 0 purple\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        assert!(matches!(parse(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse("1pg 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn structurally_invalid_documents_fail_validation() {
        let text =
            "1pg 1\nvertices 2\nv 0 true\nv 1 true\nedges 1\ne 0 0 1\nrotation\nr 0 : 0\nr 1 :\n";
        assert!(matches!(parse(text), Err(Error::Validation(_))));
    }

    #[test]
    fn dot_of_a_cycle() {
        let g = plane_from_faces(vec![None; 4], &[vec![0, 1, 2, 3], vec![3, 2, 1, 0]]).unwrap();
        let dot = to_dot(&g);
        assert_eq!(dot.matches(" -- ").count(), 4);
        assert_eq!(dot.matches("[label=\"").count() - 4, 4);
    }
}
