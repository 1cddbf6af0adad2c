//! The polygon text format: one vertex per line as `x y`, each coordinate
//! `num/den` or `num`; `#` starts a comment line; blank lines are ignored.

use std::path::Path;

use super::{MomentPolygon, Point};
use crate::error::{Error, Result};
use crate::rational;

/// A parsed vertex list with the source line of each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexList {
    pub vertices: Vec<Point>,
    pub lines: Vec<usize>,
}

pub fn parse_vertices(text: &str) -> Result<VertexList> {
    let mut vertices = Vec::new();
    let mut lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line,
                message: format!("expected two coordinates, found {}", fields.len()),
            });
        }
        let coord = |s: &str| {
            rational::parse(s).ok_or_else(|| Error::Parse {
                line,
                message: format!("malformed fraction `{s}`"),
            })
        };
        vertices.push(Point::new(coord(fields[0])?, coord(fields[1])?));
        lines.push(line);
    }
    Ok(VertexList { vertices, lines })
}

pub fn parse_polygon(text: &str) -> Result<MomentPolygon> {
    let list = parse_vertices(text)?;
    MomentPolygon::validated(list.vertices).map_err(|(e, idx)| match e {
        Error::NotConvex { .. } => Error::NotConvex {
            line: idx.map(|i| list.lines[i]),
        },
        other => other,
    })
}

pub fn read_vertices(path: impl AsRef<Path>) -> Result<VertexList> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("{}: {e}", path.display()),
    })?;
    parse_vertices(&text)
}

pub fn read_polygon(path: impl AsRef<Path>) -> Result<MomentPolygon> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("{}: {e}", path.display()),
    })?;
    parse_polygon(&text)
}

/// Renders vertices in the text format, one per line, exact fractions.
pub fn format_vertices(vertices: &[Point]) -> String {
    let mut out = String::new();
    for v in vertices {
        out.push_str(&rational::format_exact(&v.x));
        out.push(' ');
        out.push_str(&rational::format_exact(&v.y));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn parses_unit_triangle() {
        let p = parse_polygon("0 0\n1 0\n0 1").unwrap();
        assert_eq!(p, MomentPolygon::from_i64(&[(0, 0), (1, 0), (0, 1)]).unwrap());
    }

    #[test]
    fn accepts_rational_vertices_and_comments() {
        let p = parse_polygon("# a triangle\n0/1 0\n\n3/2 0\n0 3/2\n").unwrap();
        assert_eq!(p.vertex(1), &Point::new(rat(3, 2), int(0)));
    }

    #[test]
    fn reports_line_numbers() {
        assert_eq!(
            parse_polygon("0 0\n1 x\n0 1"),
            Err(Error::Parse {
                line: 2,
                message: "malformed fraction `x`".into()
            })
        );
        assert!(matches!(parse_polygon("0 0\n1/0 1\n0 1"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_polygon("0 0 0\n"), Err(Error::Parse { line: 1, .. })));
        assert_eq!(
            parse_polygon("# c\n0 0\n1 0\n2 0\n0 1"),
            Err(Error::NotConvex { line: Some(4) })
        );
        assert_eq!(parse_polygon("0 0\n1 1\n2 2"), Err(Error::ZeroArea));
    }

    #[test]
    fn format_round_trips() {
        let p = parse_polygon("0 0\n3/2 0\n1 1\n0 2").unwrap();
        assert_eq!(parse_polygon(&format_vertices(p.vertices())).unwrap(), p);
    }
}
