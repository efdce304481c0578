//! Plain-text Cayley tables: a line holding `n`, then `n` rows of `n`
//! whitespace-separated indices. `#` starts a comment anywhere on a line.

use std::fmt::Write as _;
use std::path::Path;

use super::{FiniteGroup, GroupError};

pub fn parse_cayley_table(text: &str, label: &str) -> Result<FiniteGroup, GroupError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line, header) = lines.next().ok_or(GroupError::Parse { line: 0, message: "missing order line".into() })?;
    let n: usize = header
        .parse()
        .map_err(|_| GroupError::Parse { line, message: format!("expected group order, got '{header}'") })?;
    if n == 0 {
        return Err(GroupError::Parse { line, message: "group order must be positive".into() });
    }

    let mut rows = Vec::with_capacity(n);
    for (line, content) in lines {
        if rows.len() == n {
            return Err(GroupError::Parse { line, message: format!("more than {n} rows") });
        }
        let row = content
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| GroupError::Parse { line, message: format!("bad entry '{tok}'") })
            })
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != n {
            return Err(GroupError::Parse { line, message: format!("row has {} entries, expected {n}", row.len()) });
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(GroupError::Parse { line: 0, message: format!("expected {n} rows, found {}", rows.len()) });
    }
    FiniteGroup::from_cayley_table(&rows, label)
}

pub fn read_cayley_table(path: &Path) -> Result<FiniteGroup, GroupError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| GroupError::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse_cayley_table(&text, &format!("file:{}", path.display())).map_err(|e| match e {
        GroupError::Parse { line, message } => GroupError::Io {
            path: path.display().to_string(),
            message: format!("line {line}: {message}"),
        },
        other => other,
    })
}

pub fn write_cayley_table(group: &FiniteGroup) -> String {
    let mut out = format!("# {}\n{}\n", group.label(), group.order());
    for row in group.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_family, FamilySpec};

    #[test]
    fn parses_with_comments() {
        let text = "# Z3\n3  # order\n0 1 2\n1 2 0\n\n2 0 1 # last row\n";
        let g = parse_cayley_table(text, "z3").unwrap();
        assert_eq!(g.element_orders(), &[1, 3, 3]);
    }

    #[test]
    fn rejects_ragged_rows() {
        let err = parse_cayley_table("3\n0 1 2\n1 2\n2 0 1\n", "r").unwrap_err();
        assert!(matches!(err, GroupError::Parse { line: 3, .. }), "{err:?}");
        assert!(parse_cayley_table("2\n0 1\n1 0\n0 1\n", "extra").is_err());
        assert!(parse_cayley_table("2\n0 1\n", "short").is_err());
        assert!(parse_cayley_table("x\n", "hdr").is_err());
        assert!(parse_cayley_table("2\n0 1\n1 z\n", "tok").is_err());
    }

    #[test]
    fn write_then_read_preserves_table() {
        let q8 = build_family(&FamilySpec::Dicyclic(2), 200).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("q8.txt");
        std::fs::write(&path, write_cayley_table(&q8)).unwrap();
        let back = read_cayley_table(&path).unwrap();
        assert!(back.rows().eq(q8.rows()));
    }

    #[test]
    fn missing_file_names_path() {
        let err = read_cayley_table(Path::new("/nonexistent/table.txt")).unwrap_err();
        assert!(err.to_string().contains("/nonexistent/table.txt"));
    }
}
