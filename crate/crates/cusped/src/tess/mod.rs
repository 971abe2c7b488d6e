//! Combinatorial Platonic tessellations of cusped 3-manifolds.
//!
//! A tessellation is a list of ideal regular cells (tetrahedra, octahedra,
//! dodecahedra) with every face glued to exactly one partner face. The whole
//! structure is compiled into a set of darts — quadruples (cell, face, edge,
//! edge endpoint) — carrying four fixed involutions: flip the endpoint (s0),
//! the edge (s1), the face (s2), or cross a gluing (s3). Everything else is
//! orbit combinatorics on the darts:
//!
//! - cells are the ⟨s0,s1,s2⟩-orbits, flags (cell, face, edge) the s0-orbits;
//! - ideal-vertex classes (cusps) are the ⟨s1,s2,s3⟩-orbits, and the link
//!   surface of a cusp is the induced 2-dimensional dart structure, whose
//!   Euler characteristic and orientability certify a torus or Klein bottle;
//! - automorphisms are the dart permutations commuting with all four moves,
//!   found by propagating a single dart assignment across the structure.

mod parse;
mod shapes;

pub use parse::{parse_census_gluing_table, to_census_gluing_table};
pub use shapes::{CellDart, Shape, ShapeTables};

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::perm::{InducedAction, PermError, PermGroup, Permutation};

#[derive(Debug, Error)]
pub enum TessError {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid gluing data: {0}")]
    Validation(String),
    #[error("cusp {cusp} has a link of Euler characteristic {euler}, not 0")]
    LinkNotFlat { cusp: usize, euler: i64 },
    #[error("cells cannot be coherently oriented")]
    NotOrientable,
    #[error("fixture missing: {0}")]
    FixtureMissing(String),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// A face pairing: face `face` of cell `cell` is glued to face `to_face` of
/// cell `to_cell`. The boundary correspondence sends the vertex at position
/// `j` of the canonical cycle to position `rotation − j` (mod face size) of
/// the partner's cycle, or to `rotation + j` when `reflect` is set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GluingRule {
    pub cell: usize,
    pub face: usize,
    pub to_cell: usize,
    pub to_face: usize,
    pub rotation: usize,
    pub reflect: bool,
}

impl GluingRule {
    /// The rule seen from the partner side; gluings must be involutive.
    pub fn reversed(&self) -> GluingRule {
        GluingRule {
            cell: self.to_cell,
            face: self.to_face,
            to_cell: self.cell,
            to_face: self.face,
            rotation: self.rotation,
            reflect: self.reflect,
        }
    }

    fn normalize_rotation(&self, face_size: usize) -> GluingRule {
        GluingRule {
            rotation: self.rotation % face_size,
            ..*self
        }
    }
}

impl fmt::Display for GluingRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}.{} -> {}.{} : rotation {}, reflect {}",
            self.cell,
            self.face,
            self.to_cell,
            self.to_face,
            self.rotation,
            u8::from(self.reflect)
        )
    }
}

/// A flag (cell, face, edge); `edge` indexes the face's canonical edge cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Flag {
    pub cell: usize,
    pub face: usize,
    pub edge: usize,
}

/// An ideal-vertex class together with its link surface invariants.
#[derive(Clone, Debug, Serialize)]
pub struct Cusp {
    pub id: usize,
    /// The (cell, vertex) pairs identified into this cusp.
    pub members: Vec<(usize, usize)>,
    pub orientable: bool,
    pub euler_characteristic: i64,
}

/// Image and kernel of the automorphism action on cusps.
pub struct CuspAction {
    /// Permutation group induced on the cusps.
    pub image: PermGroup,
    /// Automorphisms acting trivially on every cusp, as a subgroup of the
    /// dart action.
    pub kernel: PermGroup,
}

/// The automorphism group in both of its incarnations: on flags and on darts.
pub struct Automorphisms {
    /// (dart permutation, flag permutation) pairs, one per automorphism.
    pub pairs: Vec<(Permutation, Permutation)>,
    pub dart_group: PermGroup,
    pub flag_group: PermGroup,
}

/// Orientation data: the ±1 character of each automorphism.
pub struct OrientationCharacter {
    /// Signs aligned with `Automorphisms::pairs`.
    pub signs: Vec<i8>,
    /// The orientation-preserving subgroup, in the flag action.
    pub preserving_flag_group: PermGroup,
    pub all_preserving: bool,
}

/// A validated Platonic tessellation.
#[derive(Debug)]
pub struct Tessellation {
    cells: Vec<Shape>,
    rules: Vec<GluingRule>,
    dart_base: Vec<usize>,
    dart_count: usize,
    /// moves[0..4] = s0 (endpoint), s1 (edge), s2 (face), s3 (gluing).
    moves: [Vec<usize>; 4],
    flags: Vec<Flag>,
    flag_of_dart: Vec<usize>,
}

impl Tessellation {
    /// Validates gluing data and compiles the dart structure.
    ///
    /// `gluings` may list each face pairing once or from both sides; reverse
    /// rules are derived and checked for involutivity.
    pub fn new(cells: Vec<Shape>, gluings: Vec<GluingRule>) -> Result<Tessellation, TessError> {
        if cells.is_empty() {
            return Err(TessError::Validation("no cells".into()));
        }
        // Collect one rule per (cell, face), deriving the reverses.
        let mut by_face: HashMap<(usize, usize), GluingRule> = HashMap::new();
        let mut add = |rule: GluingRule| -> Result<(), TessError> {
            let key = (rule.cell, rule.face);
            if rule.cell >= cells.len() || rule.to_cell >= cells.len() {
                return Err(TessError::Validation(format!(
                    "gluing {rule} references a cell out of range"
                )));
            }
            if rule.face >= cells[rule.cell].face_count()
                || rule.to_face >= cells[rule.to_cell].face_count()
            {
                return Err(TessError::Validation(format!(
                    "gluing {rule} references a face out of range"
                )));
            }
            if (rule.cell, rule.face) == (rule.to_cell, rule.to_face) {
                return Err(TessError::Validation(format!(
                    "face {}.{} is glued to itself",
                    rule.cell, rule.face
                )));
            }
            if cells[rule.cell].face_size() != cells[rule.to_cell].face_size() {
                return Err(TessError::Validation(format!(
                    "gluing {rule} joins faces of different sizes"
                )));
            }
            let rule = rule.normalize_rotation(cells[rule.cell].face_size());
            match by_face.get(&key) {
                None => {
                    by_face.insert(key, rule);
                    Ok(())
                }
                Some(existing) if *existing == rule => Ok(()),
                Some(existing) => Err(TessError::Validation(format!(
                    "conflicting gluings for face {}.{}: {existing} vs {rule}",
                    rule.cell, rule.face
                ))),
            }
        };
        for rule in &gluings {
            add(*rule)?;
            // Reverse: same rotation for orientation-compatible gluings,
            // negated rotation for reflective ones.
            let k = cells[rule.cell].face_size();
            let reverse = GluingRule {
                rotation: if rule.reflect {
                    (k - rule.rotation % k) % k
                } else {
                    rule.rotation % k
                },
                ..rule.reversed()
            };
            add(reverse)?;
        }
        for (c, shape) in cells.iter().enumerate() {
            for f in 0..shape.face_count() {
                if !by_face.contains_key(&(c, f)) {
                    return Err(TessError::Validation(format!(
                        "face {c}.{f} is unglued"
                    )));
                }
            }
        }

        // Dart layout.
        let mut dart_base = Vec::with_capacity(cells.len());
        let mut dart_count = 0;
        for shape in &cells {
            dart_base.push(dart_count);
            dart_count += shape.dart_count();
        }
        let dart_at = |c: usize, d: CellDart| dart_base[c] + cells[c].tables().dart_index(d);

        let mut s0 = vec![0usize; dart_count];
        let mut s1 = vec![0usize; dart_count];
        let mut s2 = vec![0usize; dart_count];
        let mut s3 = vec![0usize; dart_count];
        for (c, shape) in cells.iter().enumerate() {
            let t = shape.tables();
            let k = t.face_size();
            for i in 0..shape.dart_count() {
                let d = t.dart_from_index(i);
                let global = dart_base[c] + i;
                s0[global] = dart_at(c, t.flip_vertex(d));
                s1[global] = dart_at(c, t.flip_edge(d));
                s2[global] = dart_at(c, t.flip_face(d));
                let rule = by_face[&(c, d.face)];
                // Vertex position map across the gluing.
                let vmap = |j: usize| -> usize {
                    if rule.reflect {
                        (rule.rotation + j) % k
                    } else {
                        (rule.rotation + k - j % k) % k
                    }
                };
                // Edge p joins positions p and p+1; its image joins
                // vmap(p) and vmap(p+1), adjacent by construction.
                let (jp, jq) = (vmap(d.pos), vmap((d.pos + 1) % k));
                let new_pos = if (jp + 1) % k == jq { jp } else { jq };
                let vertex_position = if d.side == 0 { jp } else { jq };
                let new_side = if vertex_position == new_pos { 0 } else { 1 };
                s3[global] = dart_at(
                    rule.to_cell,
                    CellDart {
                        face: rule.to_face,
                        pos: new_pos,
                        side: new_side,
                    },
                );
            }
        }
        for (name, m) in [("s0", &s0), ("s1", &s1), ("s2", &s2), ("s3", &s3)] {
            for d in 0..dart_count {
                if m[m[d]] != d {
                    return Err(TessError::Validation(format!(
                        "{name} is not involutive at dart {d}"
                    )));
                }
            }
        }

        // Flags: one per (cell, face, edge position).
        let mut flags = Vec::new();
        let mut flag_of_dart = vec![0usize; dart_count];
        for (c, shape) in cells.iter().enumerate() {
            let t = shape.tables();
            let k = t.face_size();
            for f in 0..shape.face_count() {
                for p in 0..k {
                    let id = flags.len();
                    flags.push(Flag {
                        cell: c,
                        face: f,
                        edge: p,
                    });
                    for side in 0..2 {
                        flag_of_dart[dart_at(c, CellDart { face: f, pos: p, side })] = id;
                    }
                }
            }
        }

        let tess = Tessellation {
            rules: {
                let mut rs: Vec<GluingRule> = by_face.into_values().collect();
                rs.sort_unstable_by_key(|r| (r.cell, r.face));
                rs
            },
            cells,
            dart_base,
            dart_count,
            moves: [s0, s1, s2, s3],
            flags,
            flag_of_dart,
        };
        if tess.orbit_count(&[0, 1, 2, 3]) != 1 {
            return Err(TessError::Validation(
                "the glued complex is not connected".into(),
            ));
        }
        Ok(tess)
    }

    /// Parses the gluing text format; see the crate documentation.
    pub fn parse(text: &str) -> Result<Tessellation, TessError> {
        parse::parse_tessellation(text)
    }

    pub fn cells(&self) -> &[Shape] {
        &self.cells
    }

    /// One gluing rule per (cell, face), both directions, sorted.
    pub fn rules(&self) -> &[GluingRule] {
        &self.rules
    }

    pub fn dart_count(&self) -> usize {
        self.dart_count
    }

    /// All flags, ordered by (cell, face, edge).
    pub fn flags(&self) -> &[Flag] {
        &self.flags
    }

    pub fn flag_count(&self) -> usize {
        self.flags.len()
    }

    /// The endpoint vertex (cell, vertex id) of a dart.
    fn dart_vertex(&self, d: usize) -> (usize, usize) {
        let c = self.cell_of_dart(d);
        let t = self.cells[c].tables();
        let cd = t.dart_from_index(d - self.dart_base[c]);
        (c, t.dart_vertex(cd))
    }

    fn cell_of_dart(&self, d: usize) -> usize {
        match self.dart_base.binary_search(&d) {
            Ok(c) => c,
            Err(c) => c - 1,
        }
    }

    fn orbit_ids(&self, which_moves: &[usize]) -> (Vec<usize>, usize) {
        let mut id = vec![usize::MAX; self.dart_count];
        let mut count = 0;
        for start in 0..self.dart_count {
            if id[start] != usize::MAX {
                continue;
            }
            let this = count;
            count += 1;
            id[start] = this;
            let mut stack = vec![start];
            while let Some(d) = stack.pop() {
                for &m in which_moves {
                    let e = self.moves[m][d];
                    if id[e] == usize::MAX {
                        id[e] = this;
                        stack.push(e);
                    }
                }
            }
        }
        (id, count)
    }

    fn orbit_count(&self, which_moves: &[usize]) -> usize {
        self.orbit_ids(which_moves).1
    }

    /// Ideal-vertex classes with their link surfaces.
    ///
    /// The link of a cusp is the 2-dimensional dart structure induced by
    /// (s1, s2, s3) on the darts of the class: link faces are the cell
    /// corners (⟨s1,s2⟩-orbits), link edges the ⟨s1,s3⟩-orbits, and link
    /// vertices the ⟨s2,s3⟩-orbits. Flat links are certified by Euler
    /// characteristic 0; orientability is bipartiteness of the class under
    /// the three moves.
    pub fn cusps(&self) -> Result<Vec<Cusp>, TessError> {
        let (class, count) = self.orbit_ids(&[1, 2, 3]);
        let mut cusps = Vec::with_capacity(count);
        for id in 0..count {
            let darts: Vec<usize> = (0..self.dart_count)
                .filter(|&d| class[d] == id)
                .collect();
            let mut members: Vec<(usize, usize)> = darts
                .iter()
                .map(|&d| self.dart_vertex(d))
                .collect();
            members.sort_unstable();
            members.dedup();
            let faces = count_suborbits(&darts, &[&self.moves[1], &self.moves[2]]);
            let edges = count_suborbits(&darts, &[&self.moves[1], &self.moves[3]]);
            let vertices = count_suborbits(&darts, &[&self.moves[2], &self.moves[3]]);
            let euler = vertices as i64 - edges as i64 + faces as i64;
            let orientable = is_bipartite(
                &darts,
                &[&self.moves[1], &self.moves[2], &self.moves[3]],
            );
            if euler != 0 {
                return Err(TessError::LinkNotFlat { cusp: id, euler });
            }
            cusps.push(Cusp {
                id,
                members,
                orientable,
                euler_characteristic: euler,
            });
        }
        Ok(cusps)
    }

    /// All combinatorial automorphisms: dart permutations commuting with the
    /// four moves. Propagation from a single dart image determines each one,
    /// so the search tries every candidate image of dart 0 in order.
    pub fn automorphisms(&self) -> Automorphisms {
        let n = self.dart_count;
        let mut pairs = Vec::new();
        'candidates: for target in 0..n {
            let mut phi = vec![usize::MAX; n];
            phi[0] = target;
            let mut stack = vec![0usize];
            while let Some(d) = stack.pop() {
                for m in &self.moves {
                    let (x, y) = (m[d], m[phi[d]]);
                    if phi[x] == usize::MAX {
                        phi[x] = y;
                        stack.push(x);
                    } else if phi[x] != y {
                        continue 'candidates;
                    }
                }
            }
            let mut seen = vec![false; n];
            for &v in &phi {
                if v == usize::MAX || seen[v] {
                    continue 'candidates;
                }
                seen[v] = true;
            }
            let dart_perm = Permutation::from_images(phi.clone()).expect("verified bijection");
            let mut flag_images = vec![usize::MAX; self.flags.len()];
            for d in 0..n {
                flag_images[self.flag_of_dart[d]] = self.flag_of_dart[phi[d]];
            }
            let flag_perm =
                Permutation::from_images(flag_images).expect("flag action is well defined");
            pairs.push((dart_perm, flag_perm));
        }
        let dart_group = PermGroup::from_closed_elements_unchecked(
            n,
            pairs.iter().map(|(d, _)| d.clone()).collect(),
        );
        let flag_group = PermGroup::from_closed_elements_unchecked(
            self.flags.len(),
            pairs.iter().map(|(_, f)| f.clone()).collect(),
        );
        assert_eq!(dart_group.order(), pairs.len());
        assert_eq!(flag_group.order(), pairs.len());
        Automorphisms {
            pairs,
            dart_group,
            flag_group,
        }
    }

    /// Convenience: the automorphism group as a permutation group on flags.
    pub fn automorphism_group(&self) -> PermGroup {
        self.automorphisms().flag_group
    }

    /// The induced action of the automorphism group on the cusps, with its
    /// kernel.
    pub fn cusp_action(&self) -> Result<CuspAction, TessError> {
        let cusps = self.cusps()?;
        let autos = self.automorphisms();
        let (class, count) = self.orbit_ids(&[1, 2, 3]);
        debug_assert_eq!(count, cusps.len());
        let InducedAction { image, kernel } = autos.dart_group.induced_action(&class)?;
        Ok(CuspAction { image, kernel })
    }

    /// The orientation character of the automorphism group.
    ///
    /// Cells are coherently orientable exactly when the dart graph under all
    /// four moves is bipartite; each automorphism then preserves or swaps
    /// the two color classes.
    pub fn orientation_character(&self) -> Result<OrientationCharacter, TessError> {
        let autos = self.automorphisms();
        self.orientation_character_of(&autos)
    }

    /// Orientation character for a precomputed automorphism set.
    pub fn orientation_character_of(
        &self,
        autos: &Automorphisms,
    ) -> Result<OrientationCharacter, TessError> {
        let all: Vec<usize> = (0..self.dart_count).collect();
        if !is_bipartite(
            &all,
            &[&self.moves[0], &self.moves[1], &self.moves[2], &self.moves[3]],
        ) {
            return Err(TessError::NotOrientable);
        }
        let mut color = vec![u8::MAX; self.dart_count];
        color[0] = 0;
        let mut stack = vec![0usize];
        while let Some(d) = stack.pop() {
            for m in &self.moves {
                let e = m[d];
                if color[e] == u8::MAX {
                    color[e] = 1 - color[d];
                    stack.push(e);
                }
            }
        }
        let signs: Vec<i8> = autos
            .pairs
            .iter()
            .map(|(dart, _)| {
                if color[dart.image(0)] == color[0] {
                    1
                } else {
                    -1
                }
            })
            .collect();
        let preserving: Vec<Permutation> = autos
            .pairs
            .iter()
            .zip(&signs)
            .filter(|(_, &s)| s == 1)
            .map(|((_, flag), _)| flag.clone())
            .collect();
        let all_preserving = signs.iter().all(|&s| s == 1);
        let preserving_flag_group =
            PermGroup::from_closed_elements_unchecked(self.flags.len(), preserving);
        Ok(OrientationCharacter {
            signs,
            preserving_flag_group,
            all_preserving,
        })
    }

    /// Projection from darts to cusp ids (for custom induced actions).
    pub fn cusp_projection(&self) -> Vec<usize> {
        self.orbit_ids(&[1, 2, 3]).0
    }

    /// The four dart involutions: endpoint, edge, face, gluing.
    pub fn dart_moves(&self) -> &[Vec<usize>; 4] {
        &self.moves
    }

    /// Renders the tessellation in the gluing text format, one rule per
    /// face pair, deterministically ordered.
    pub fn to_text(&self) -> String {
        let mut out = String::from("cells:");
        for shape in &self.cells {
            out.push(' ');
            out.push_str(shape.name());
        }
        out.push('\n');
        for r in &self.rules {
            if (r.cell, r.face) <= (r.to_cell, r.to_face) {
                out.push_str(&format!("{r}\n"));
            }
        }
        out
    }
}

fn count_suborbits(darts: &[usize], moves: &[&Vec<usize>]) -> usize {
    let mut index: HashMap<usize, usize> = HashMap::new();
    for (i, &d) in darts.iter().enumerate() {
        index.insert(d, i);
    }
    let mut seen = vec![false; darts.len()];
    let mut count = 0;
    for start in 0..darts.len() {
        if seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        let mut stack = vec![darts[start]];
        while let Some(d) = stack.pop() {
            for m in moves {
                let e = m[d];
                if let Some(&j) = index.get(&e) {
                    if !seen[j] {
                        seen[j] = true;
                        stack.push(e);
                    }
                }
            }
        }
    }
    count
}

fn is_bipartite(darts: &[usize], moves: &[&Vec<usize>]) -> bool {
    let mut index: HashMap<usize, usize> = HashMap::new();
    for (i, &d) in darts.iter().enumerate() {
        index.insert(d, i);
    }
    let mut color = vec![u8::MAX; darts.len()];
    for start in 0..darts.len() {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for m in moves {
                let e = m[darts[i]];
                if let Some(&j) = index.get(&e) {
                    if color[j] == u8::MAX {
                        color[j] = 1 - color[i];
                        stack.push(j);
                    } else if color[j] == color[i] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Two tetrahedra, each face glued to the same-numbered face of the
    /// other cell, orientation-compatibly with rotation 0. The result is a
    /// one-cusped orientable manifold tessellation.
    fn two_tetrahedra() -> Tessellation {
        let rules: Vec<GluingRule> = (0..4)
            .map(|f| GluingRule {
                cell: 0,
                face: f,
                to_cell: 1,
                to_face: f,
                rotation: 0,
                reflect: false,
            })
            .collect();
        Tessellation::new(vec![Shape::Tetrahedron; 2], rules).unwrap()
    }

    /// The label-matching double of the ideal tetrahedron: a reflective
    /// gluing, so the vertex links are spheres, not flat surfaces.
    fn tetrahedron_double() -> Tessellation {
        let rules: Vec<GluingRule> = (0..4)
            .map(|f| GluingRule {
                cell: 0,
                face: f,
                to_cell: 1,
                to_face: f,
                rotation: 0,
                reflect: true,
            })
            .collect();
        Tessellation::new(vec![Shape::Tetrahedron; 2], rules).unwrap()
    }

    #[test]
    fn flag_counts() {
        let t = two_tetrahedra();
        assert_eq!(t.flag_count(), 24);
        assert_eq!(t.dart_count(), 48);
    }

    #[test]
    fn unglued_face_is_rejected() {
        let rules: Vec<GluingRule> = (0..3)
            .map(|f| GluingRule {
                cell: 0,
                face: f,
                to_cell: 1,
                to_face: f,
                rotation: 0,
                reflect: false,
            })
            .collect();
        let err = Tessellation::new(vec![Shape::Tetrahedron; 2], rules).unwrap_err();
        assert!(matches!(err, TessError::Validation(_)));
    }

    #[test]
    fn self_gluing_is_rejected() {
        let rules = vec![GluingRule {
            cell: 0,
            face: 0,
            to_cell: 0,
            to_face: 0,
            rotation: 0,
            reflect: false,
        }];
        let err = Tessellation::new(vec![Shape::Tetrahedron], rules).unwrap_err();
        assert!(matches!(err, TessError::Validation(_)));
    }

    #[test]
    fn conflicting_reverse_is_rejected() {
        let mut rules: Vec<GluingRule> = (0..4)
            .map(|f| GluingRule {
                cell: 0,
                face: f,
                to_cell: 1,
                to_face: f,
                rotation: 0,
                reflect: false,
            })
            .collect();
        rules.push(GluingRule {
            cell: 1,
            face: 0,
            to_cell: 0,
            to_face: 0,
            rotation: 1,
            reflect: false,
        });
        let err = Tessellation::new(vec![Shape::Tetrahedron; 2], rules).unwrap_err();
        assert!(matches!(err, TessError::Validation(_)));
    }

    #[test]
    fn double_tetrahedron_cusps_are_spheres_hence_rejected() {
        // Doubling an ideal tetrahedron gives vertex links that are doubled
        // triangles, i.e. spheres with Euler characteristic 2.
        let t = tetrahedron_double();
        match t.cusps() {
            Err(TessError::LinkNotFlat { euler, .. }) => assert_eq!(euler, 2),
            other => panic!("expected LinkNotFlat, got {other:?}", other = other.err()),
        }
        // The double still has the full tetrahedral symmetry group times the
        // sheet swap.
        assert_eq!(t.automorphisms().dart_group.order(), 48);
    }

    #[test]
    fn one_tetrahedron_with_klein_bottle_cusp() {
        // A single ideal tetrahedron with two reflective self-gluings: the
        // quotient has one cusp whose link is a Klein bottle, and the cells
        // admit no coherent orientation.
        let rules = vec![
            GluingRule {
                cell: 0,
                face: 0,
                to_cell: 0,
                to_face: 2,
                rotation: 1,
                reflect: true,
            },
            GluingRule {
                cell: 0,
                face: 1,
                to_cell: 0,
                to_face: 3,
                rotation: 1,
                reflect: true,
            },
        ];
        let t = Tessellation::new(vec![Shape::Tetrahedron], rules).unwrap();
        assert_eq!(t.flag_count(), 12);
        let cusps = t.cusps().unwrap();
        assert_eq!(cusps.len(), 1);
        assert!(!cusps[0].orientable, "link must be a Klein bottle");
        assert_eq!(cusps[0].euler_characteristic, 0);
        assert!(matches!(
            t.orientation_character(),
            Err(TessError::NotOrientable)
        ));
    }

    #[test]
    fn two_tetrahedra_form_a_one_cusped_manifold() {
        let t = two_tetrahedra();
        let cusps = t.cusps().unwrap();
        assert_eq!(cusps.len(), 1);
        assert!(cusps[0].orientable);
        assert_eq!(cusps[0].euler_characteristic, 0);
        let autos = t.automorphisms();
        assert_eq!(autos.dart_group.order(), 8);
        assert_eq!(autos.flag_group.order(), 8);
        // Orientable, with orientation-reversing symmetries present.
        let oc = t.orientation_character().unwrap();
        assert!(!oc.all_preserving);
        assert_eq!(oc.preserving_flag_group.order(), 4);
        // Cusp action on a single cusp is trivial with full kernel.
        let action = t.cusp_action().unwrap();
        assert_eq!(action.image.order(), 1);
        assert_eq!(action.kernel.order(), 8);
    }
}
