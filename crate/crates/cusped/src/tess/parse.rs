//! Text formats for tessellations.
//!
//! Native gluing format (one file per tessellation):
//!
//! ```text
//! # comment
//! cells: octahedron octahedron          (or: cells: 2 x octahedron)
//! 0.0 -> 1.0 : rotation 1, reflect 0
//! ...
//! ```
//!
//! Each line `c.f -> c'.f' : rotation r, reflect b` glues face f of cell c to
//! face f' of cell c'; the vertex at position j of f's canonical cycle goes
//! to position r−j (mod k) of f' — or r+j when b = 1. `, reflect b` may be
//! omitted (default 0). Each face pair may be listed once or from both
//! sides; reverse rules are derived and checked.
//!
//! Census gluing tables for tetrahedral triangulations:
//!
//! ```text
//! tetrahedra: 2
//! 0: 1 1 1 1 ; 0132 3201 3012 2103
//! 1: 0 0 0 0 ; 0132 3201 3012 2103
//! ```
//!
//! Face j of a tetrahedron is the face opposite vertex j; each 4-digit word
//! is the vertex permutation of the gluing of that face (images of vertices
//! 0123 in order).

use super::shapes::Shape;
use super::{GluingRule, TessError, Tessellation};

fn err(line: usize, message: impl Into<String>) -> TessError {
    TessError::Parse {
        line: line + 1,
        message: message.into(),
    }
}

pub(super) fn parse_tessellation(text: &str) -> Result<Tessellation, TessError> {
    let mut cells: Option<Vec<Shape>> = None;
    let mut rules: Vec<GluingRule> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("cells:") {
            if cells.is_some() {
                return Err(err(ln, "duplicate cells: line"));
            }
            cells = Some(parse_cells(ln, rest)?);
            continue;
        }
        if cells.is_none() {
            return Err(err(ln, "gluing line before cells: header"));
        }
        rules.push(parse_gluing_line(ln, line)?);
    }
    let cells = cells.ok_or_else(|| err(0, "missing cells: header"))?;
    Tessellation::new(cells, rules)
}

fn parse_cells(ln: usize, rest: &str) -> Result<Vec<Shape>, TessError> {
    let tokens: Vec<&str> = rest.split_whitespace().collect();
    // Either "N x shape" or a plain list of shape names.
    if tokens.len() == 3 && tokens[1] == "x" {
        let n: usize = tokens[0]
            .parse()
            .map_err(|_| err(ln, format!("bad cell count {:?}", tokens[0])))?;
        let shape = Shape::from_name(tokens[2])
            .ok_or_else(|| err(ln, format!("unknown shape {:?}", tokens[2])))?;
        if n == 0 {
            return Err(err(ln, "cell count must be positive"));
        }
        return Ok(vec![shape; n]);
    }
    let mut cells = Vec::new();
    for t in &tokens {
        let shape =
            Shape::from_name(t).ok_or_else(|| err(ln, format!("unknown shape {t:?}")))?;
        cells.push(shape);
    }
    if cells.is_empty() {
        return Err(err(ln, "no cells listed"));
    }
    Ok(cells)
}

fn parse_gluing_line(ln: usize, line: &str) -> Result<GluingRule, TessError> {
    let (lhs, rhs) = line
        .split_once("->")
        .ok_or_else(|| err(ln, "expected `c.f -> c'.f' : rotation r[, reflect b]`"))?;
    let (target, attrs) = rhs
        .split_once(':')
        .ok_or_else(|| err(ln, "missing `:` before rotation"))?;
    let parse_face = |s: &str| -> Result<(usize, usize), TessError> {
        let (c, f) = s
            .trim()
            .split_once('.')
            .ok_or_else(|| err(ln, format!("expected cell.face, got {s:?}")))?;
        Ok((
            c.parse()
                .map_err(|_| err(ln, format!("bad cell index {c:?}")))?,
            f.parse()
                .map_err(|_| err(ln, format!("bad face index {f:?}")))?,
        ))
    };
    let (cell, face) = parse_face(lhs)?;
    let (to_cell, to_face) = parse_face(target)?;
    let mut rotation: Option<usize> = None;
    let mut reflect = false;
    for part in attrs.split(',') {
        let words: Vec<&str> = part.split_whitespace().collect();
        match words.as_slice() {
            ["rotation", r] => {
                rotation = Some(
                    r.parse()
                        .map_err(|_| err(ln, format!("bad rotation {r:?}")))?,
                );
            }
            ["reflect", b] => {
                reflect = match *b {
                    "0" => false,
                    "1" => true,
                    _ => return Err(err(ln, format!("bad reflect flag {b:?}"))),
                };
            }
            [] => {}
            _ => return Err(err(ln, format!("unrecognized gluing attribute {part:?}"))),
        }
    }
    let rotation = rotation.ok_or_else(|| err(ln, "missing rotation"))?;
    Ok(GluingRule {
        cell,
        face,
        to_cell,
        to_face,
        rotation,
        reflect,
    })
}

/// Imports a tetrahedral census gluing table (neighbors plus vertex
/// permutations) and converts it to a tessellation.
pub fn parse_census_gluing_table(text: &str) -> Result<Tessellation, TessError> {
    let mut count: Option<usize> = None;
    let mut neighbors: Vec<[usize; 4]> = Vec::new();
    let mut perms: Vec<[[usize; 4]; 4]> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("tetrahedra:") {
            count = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| err(ln, "bad tetrahedron count"))?,
            );
            continue;
        }
        let (idx, rest) = line
            .split_once(':')
            .ok_or_else(|| err(ln, "expected `i: n0 n1 n2 n3 ; p0 p1 p2 p3`"))?;
        let idx: usize = idx
            .trim()
            .parse()
            .map_err(|_| err(ln, "bad tetrahedron index"))?;
        if idx != neighbors.len() {
            return Err(err(ln, "tetrahedron lines out of order"));
        }
        let (ns, ps) = rest
            .split_once(';')
            .ok_or_else(|| err(ln, "missing `;` between neighbors and gluings"))?;
        let ns: Vec<usize> = ns
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| err(ln, format!("bad neighbor {t:?}"))))
            .collect::<Result<_, _>>()?;
        if ns.len() != 4 {
            return Err(err(ln, "expected four neighbors"));
        }
        let mut pe = [[0usize; 4]; 4];
        let ptoks: Vec<&str> = ps.split_whitespace().collect();
        if ptoks.len() != 4 {
            return Err(err(ln, "expected four gluing permutations"));
        }
        for (f, tok) in ptoks.iter().enumerate() {
            if tok.len() != 4 || !tok.chars().all(|c| ('0'..='3').contains(&c)) {
                return Err(err(ln, format!("bad permutation word {tok:?}")));
            }
            let mut seen = [false; 4];
            for (v, ch) in tok.chars().enumerate() {
                let image = ch as usize - '0' as usize;
                if seen[image] {
                    return Err(err(ln, format!("non-bijective permutation {tok:?}")));
                }
                seen[image] = true;
                pe[f][v] = image;
            }
        }
        neighbors.push([ns[0], ns[1], ns[2], ns[3]]);
        perms.push(pe);
    }
    let count = count.ok_or_else(|| err(0, "missing tetrahedra: header"))?;
    if neighbors.len() != count {
        return Err(err(0, format!(
            "tetrahedra: header says {count} but {} lines given",
            neighbors.len()
        )));
    }
    // The canonical tetrahedron face f is opposite vertex f, so a census
    // vertex permutation restricts to a map between face vertex cycles.
    let tables = Shape::Tetrahedron.tables();
    let mut rules = Vec::new();
    for t in 0..count {
        for f in 0..4 {
            let to_cell = neighbors[t][f];
            let sigma = &perms[t][f];
            let to_face = sigma[f];
            let cycle = &tables.face_cycles[f];
            let target_cycle = &tables.face_cycles[to_face];
            let pos_in_target = |v: usize| -> Result<usize, TessError> {
                target_cycle
                    .iter()
                    .position(|&w| w == v)
                    .ok_or_else(|| {
                        TessError::Validation(format!(
                            "gluing of tetrahedron {t} face {f} does not map the face onto face {to_face}"
                        ))
                    })
            };
            // Fit the map j ↦ position(sigma(cycle[j])) to r−j or r+j.
            let m0 = pos_in_target(sigma[cycle[0]])?;
            let m1 = pos_in_target(sigma[cycle[1]])?;
            let m2 = pos_in_target(sigma[cycle[2]])?;
            let k = 3;
            let (rotation, reflect) = if (m0 + k - 1) % k == m1 {
                (m0, false)
            } else if (m0 + 1) % k == m1 {
                ((m0 + k) % k, true)
            } else {
                return Err(TessError::Validation(format!(
                    "tetrahedron {t} face {f}: vertex map is not a cycle map"
                )));
            };
            let expect_m2 = if reflect {
                (rotation + 2) % k
            } else {
                (rotation + k - 2) % k
            };
            if m2 != expect_m2 {
                return Err(TessError::Validation(format!(
                    "tetrahedron {t} face {f}: inconsistent vertex map"
                )));
            }
            rules.push(GluingRule {
                cell: t,
                face: f,
                to_cell,
                to_face,
                rotation,
                reflect,
            });
        }
    }
    Tessellation::new(vec![Shape::Tetrahedron; count], rules)
}

/// Renders a tetrahedral tessellation as a census gluing table.
///
/// Only valid for tessellations whose cells are all tetrahedra.
pub fn to_census_gluing_table(t: &Tessellation) -> Result<String, TessError> {
    if t.cells().iter().any(|s| *s != Shape::Tetrahedron) {
        return Err(TessError::Validation(
            "census gluing tables describe tetrahedra only".into(),
        ));
    }
    let tables = Shape::Tetrahedron.tables();
    let mut out = format!("tetrahedra: {}\n", t.cells().len());
    for c in 0..t.cells().len() {
        let mut ns = [0usize; 4];
        let mut ps = [[0usize; 4]; 4];
        for rule in t.rules().iter().filter(|r| r.cell == c) {
            let f = rule.face;
            ns[f] = rule.to_cell;
            let k = 3;
            let cycle = &tables.face_cycles[f];
            let target_cycle = &tables.face_cycles[rule.to_face];
            let mut sigma = [usize::MAX; 4];
            for j in 0..k {
                let jp = if rule.reflect {
                    (rule.rotation + j) % k
                } else {
                    (rule.rotation + k - j) % k
                };
                sigma[cycle[j]] = target_cycle[jp];
            }
            sigma[f] = rule.to_face;
            ps[f] = sigma.map(|x| x);
        }
        let words: Vec<String> = ps
            .iter()
            .map(|p| p.iter().map(|v| v.to_string()).collect::<String>())
            .collect();
        out.push_str(&format!(
            "{c}: {} {} {} {} ; {}\n",
            ns[0],
            ns[1],
            ns[2],
            ns[3],
            words.join(" ")
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::{Shape, TessError, Tessellation};
    use super::{parse_census_gluing_table, to_census_gluing_table};

    #[test]
    fn parses_native_format() {
        let text = "\
# two tetrahedra glued face to face
cells: 2 x tetrahedron
0.0 -> 1.0 : rotation 0
0.1 -> 1.1 : rotation 0, reflect 0
0.2 -> 1.2 : rotation 0
0.3 -> 1.3 : rotation 0
";
        let t = Tessellation::parse(text).unwrap();
        assert_eq!(t.cells(), &[Shape::Tetrahedron, Shape::Tetrahedron]);
        assert_eq!(t.flag_count(), 24);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let text = "cells: 2 x tetrahedron\n0.0 -> 1.0 rotation 0\n";
        match Tessellation::parse(text) {
            Err(TessError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {:?}", other.err()),
        }
        assert!(Tessellation::parse("0.0 -> 1.0 : rotation 0\n").is_err());
        assert!(Tessellation::parse("cells: 2 x cube\n").is_err());
    }

    #[test]
    fn census_round_trip() {
        let text = "\
cells: 2 x tetrahedron
0.0 -> 1.0 : rotation 0
0.1 -> 1.1 : rotation 1
0.2 -> 1.2 : rotation 2
0.3 -> 1.3 : rotation 0
";
        let t = Tessellation::parse(text).unwrap();
        let table = to_census_gluing_table(&t).unwrap();
        let t2 = parse_census_gluing_table(&table).unwrap();
        assert_eq!(t.to_text(), t2.to_text());
    }
}
