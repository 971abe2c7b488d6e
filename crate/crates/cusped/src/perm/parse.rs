//! Text format for permutation-group fixtures.
//!
//! Grammar (one group per file):
//!
//! ```text
//! file       = degree-line generator-line*
//! degree-line = INTEGER
//! generator-line = "()" | cycle+
//! cycle      = "(" INTEGER (SP INTEGER)* ")"
//! ```
//!
//! Points are 0-indexed. Blank lines and lines starting with `#` are ignored.
//! `()` denotes the identity. Example:
//!
//! ```text
//! 5
//! (0 1 2)(3 4)
//! (0 1)
//! ```

use super::{PermError, Permutation};

/// Parses one permutation in cycle notation for the given degree.
pub fn parse_permutation(degree: usize, line: &str) -> Result<Permutation, PermError> {
    let s = line.trim();
    if s.is_empty() {
        return Err(PermError::Parse("empty permutation".into()));
    }
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(PermError::Parse(format!(
                "expected '(' at {rest:?} in cycle notation"
            )));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| PermError::Parse(format!("unclosed cycle in {s:?}")))?;
        let body = &rest[1..close];
        rest = rest[close + 1..].trim_start();
        if body.trim().is_empty() {
            continue; // "()" is the identity
        }
        let cycle: Vec<usize> = body
            .split([' ', ','])
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| PermError::Parse(format!("bad point {t:?} in {s:?}")))
            })
            .collect::<Result<_, _>>()?;
        cycles.push(cycle);
    }
    Permutation::from_cycles(degree, &cycles)
}

/// Parses a group file: degree on the first line, one generator per line.
pub fn parse_group_file(input: &str) -> Result<(usize, Vec<Permutation>), PermError> {
    let mut lines = input
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let degree: usize = lines
        .next()
        .ok_or_else(|| PermError::Parse("missing degree line".into()))?
        .parse()
        .map_err(|_| PermError::Parse("first line must be the degree".into()))?;
    if degree == 0 {
        return Err(PermError::Parse("degree must be at least 1".into()));
    }
    let gens: Vec<Permutation> = lines
        .map(|l| parse_permutation(degree, l))
        .collect::<Result<_, _>>()?;
    Ok((degree, gens))
}

/// Renders a group file in the same format.
pub fn format_group_file(degree: usize, gens: &[Permutation]) -> String {
    let mut out = format!("{degree}\n");
    for g in gens {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::PermGroup;
    use super::*;

    #[test]
    fn parses_cycle_notation() {
        let p = parse_permutation(5, "(0 1 2)(3 4)").unwrap();
        assert_eq!(p.to_string(), "(0 1 2)(3 4)");
        let id = parse_permutation(3, "()").unwrap();
        assert!(id.is_identity());
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse_permutation(3, "(0 1").is_err());
        assert!(parse_permutation(3, "0 1").is_err());
        assert!(parse_permutation(3, "(0 3)").is_err());
        assert!(parse_permutation(3, "(0 1)(1 2)").is_err());
    }

    #[test]
    fn group_file_round_trip() {
        let text = "# S4\n4\n(0 1)\n(0 1 2 3)\n";
        let (degree, gens) = parse_group_file(text).unwrap();
        assert_eq!(degree, 4);
        let g = PermGroup::close_generators(&gens).unwrap();
        assert_eq!(g.order(), 24);
        let rendered = format_group_file(degree, &gens);
        let (d2, g2) = parse_group_file(&rendered).unwrap();
        assert_eq!(d2, 4);
        assert_eq!(gens, g2);
    }
}
