//! PALP-style polytope files and NEF partition files.
//!
//! A polytope record is a header line `r c` followed by `r` rows of `c`
//! integers. When `r < c` the columns are the vertices, otherwise the rows
//! are. Anything after `#` on a line is ignored, as are blank lines and
//! extra tokens on the header line.

use cy_topology::polytope::LatticeVector;
use cy_topology::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeRecord {
    /// 1-based line of the header.
    pub line: usize,
    pub vertices: Vec<LatticeVector>,
}

fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, l)| {
            let l = l.split('#').next().unwrap_or("").trim();
            (!l.is_empty()).then_some((i + 1, l))
        })
        .collect()
}

fn parse_error(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_row(line: usize, text: &str) -> Result<Vec<i64>, Error> {
    text.split_whitespace()
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| parse_error(line, format!("expected an integer, found {t:?}")))
        })
        .collect()
}

fn parse_header(line: usize, text: &str) -> Result<(usize, usize), Error> {
    let mut tokens = text.split_whitespace();
    let mut next = || -> Result<usize, Error> {
        let t = tokens
            .next()
            .ok_or_else(|| parse_error(line, "header needs two integers `rows columns`"))?;
        match t.parse::<usize>() {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(parse_error(line, format!("bad header entry {t:?}"))),
        }
    };
    Ok((next()?, next()?))
}

/// Parses every record in `text`. A malformed record becomes an error and
/// parsing resumes after the rows its header declared.
pub fn parse_records(text: &str) -> Vec<Result<PolytopeRecord, Error>> {
    let lines = content_lines(text);
    let mut out = Vec::new();
    let mut i = 0;
    while i < lines.len() {
        let (line, header) = lines[i];
        let (r, c) = match parse_header(line, header) {
            Ok(rc) => rc,
            Err(e) => {
                out.push(Err(e));
                i += 1;
                continue;
            }
        };
        let body = &lines[(i + 1).min(lines.len())..(i + 1 + r).min(lines.len())];
        i += 1 + r;
        out.push(parse_body(line, r, c, body));
    }
    out
}

fn parse_body(line: usize, r: usize, c: usize, body: &[(usize, &str)]) -> Result<PolytopeRecord, Error> {
    if body.len() < r {
        return Err(parse_error(
            line,
            format!("header declares {r} rows but only {} follow", body.len()),
        ));
    }
    let mut rows = Vec::with_capacity(r);
    for &(l, text) in body {
        let row = parse_row(l, text)?;
        if row.len() != c {
            return Err(parse_error(l, format!("expected {c} entries, found {}", row.len())));
        }
        rows.push(row);
    }
    let vertices: Vec<LatticeVector> = if r < c {
        (0..c).map(|j| rows.iter().map(|row| row[j]).collect()).collect()
    } else {
        rows
    };
    let n = vertices[0].len();
    if vertices.len() < n + 1 {
        return Err(parse_error(
            line,
            format!("{} points cannot span a {n}-dimensional polytope", vertices.len()),
        ));
    }
    Ok(PolytopeRecord { line, vertices })
}

/// Parses a file holding exactly one polytope.
pub fn parse_polytope(text: &str) -> Result<PolytopeRecord, Error> {
    let mut records = parse_records(text);
    match records.len() {
        0 => Err(parse_error(1, "no polytope found")),
        1 => records.pop().expect("one record"),
        n => Err(parse_error(1, format!("expected one polytope, found {n} records"))),
    }
}

/// One part per non-blank line, as 0-based vertex indices.
pub fn parse_partition(text: &str) -> Result<Vec<Vec<usize>>, Error> {
    let parts: Vec<Vec<usize>> = content_lines(text)
        .into_iter()
        .map(|(line, l)| {
            l.split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| parse_error(line, format!("expected a vertex index, found {t:?}")))
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;
    if parts.is_empty() {
        return Err(parse_error(1, "partition file has no parts"));
    }
    Ok(parts)
}

/// Writes vertices as columns under an `n m` header.
pub fn format_polytope(vertices: &[LatticeVector]) -> String {
    let n = vertices.first().map_or(0, Vec::len);
    let mut out = format!("{n} {}\n", vertices.len());
    for i in 0..n {
        let row: Vec<String> = vertices.iter().map(|v| v[i].to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn columns_and_rows() {
        let cols = "2 3\n1 0 -1\n0 1 -1\n";
        let rows = "3 2\n1 0\n0 1\n-1 -1\n";
        let a = parse_polytope(cols).unwrap();
        let b = parse_polytope(rows).unwrap();
        assert_eq!(a.vertices, b.vertices);
        assert_eq!(a.vertices, vec![vec![1, 0], vec![0, 1], vec![-1, -1]]);
    }

    #[test]
    fn comments_blank_lines_and_palp_headers() {
        let text = "# P^2\n\n2 3  M:10 3 N:4 3\n 1  0 -1 # x\n\n0 1 -1\n";
        let r = parse_polytope(text).unwrap();
        assert_eq!(r.line, 3);
        assert_eq!(r.vertices.len(), 3);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_polytope("2 3\n1 0 x\n0 1 -1\n").unwrap_err();
        assert_eq!(err, Error::Parse { line: 2, msg: "expected an integer, found \"x\"".into() });
        assert!(matches!(parse_polytope("2 3\n1 0\n0 1 -1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_polytope("2 3\n1 0 -1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_polytope("2 2\n1 0\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_polytope(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_polytope("two 3\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn malformed_records_are_isolated() {
        let text = "2 3\n1 0 -1\n0 1 -1\n2 3\n1 0 q\n0 1 -1\n3 2\n1 0\n0 1\n-1 -1\n";
        let recs = parse_records(text);
        assert_eq!(recs.len(), 3);
        assert!(recs[0].is_ok());
        assert!(recs[1].is_err());
        assert_eq!(recs[2].as_ref().unwrap().line, 7);
        assert!(parse_records("# nothing\n\n").is_empty());
    }

    #[test]
    fn round_trip() {
        let v = vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1], vec![-1, -1, -1, -1]];
        assert_eq!(parse_polytope(&format_polytope(&v)).unwrap().vertices, v);
    }

    #[test]
    fn partitions() {
        assert_eq!(parse_partition("0 1\n# c\n2 3 4\n").unwrap(), vec![vec![0, 1], vec![2, 3, 4]]);
        assert!(parse_partition("0 -1\n").is_err());
        assert!(parse_partition("\n").is_err());
    }
}
