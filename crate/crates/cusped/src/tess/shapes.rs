//! Combinatorial tables for the three ideal regular cell shapes.
//!
//! Each shape is specified by the vertex sets of its faces; everything else
//! (edges, oriented face cycles, the within-cell dart moves) is derived. Face
//! cycles are oriented coherently by propagation, so the canonical cycles of
//! any one cell describe an outward orientation of its boundary sphere.

use std::sync::OnceLock;

use serde::Serialize;

/// The Platonic cell shapes occurring in the tessellations in scope.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Shape {
    Tetrahedron,
    Octahedron,
    Dodecahedron,
}

impl Shape {
    pub fn name(&self) -> &'static str {
        match self {
            Shape::Tetrahedron => "tetrahedron",
            Shape::Octahedron => "octahedron",
            Shape::Dodecahedron => "dodecahedron",
        }
    }

    pub fn from_name(name: &str) -> Option<Shape> {
        match name {
            "tetrahedron" => Some(Shape::Tetrahedron),
            "octahedron" => Some(Shape::Octahedron),
            "dodecahedron" => Some(Shape::Dodecahedron),
            _ => None,
        }
    }

    pub fn tables(&self) -> &'static ShapeTables {
        match self {
            Shape::Tetrahedron => {
                static T: OnceLock<ShapeTables> = OnceLock::new();
                T.get_or_init(|| ShapeTables::build(*self, 4, tetrahedron_faces()))
            }
            Shape::Octahedron => {
                static T: OnceLock<ShapeTables> = OnceLock::new();
                T.get_or_init(|| ShapeTables::build(*self, 6, octahedron_faces()))
            }
            Shape::Dodecahedron => {
                static T: OnceLock<ShapeTables> = OnceLock::new();
                T.get_or_init(|| ShapeTables::build(*self, 20, dodecahedron_faces()))
            }
        }
    }

    pub fn face_count(&self) -> usize {
        self.tables().face_cycles.len()
    }

    pub fn face_size(&self) -> usize {
        self.tables().face_cycles[0].len()
    }

    pub fn vertex_count(&self) -> usize {
        self.tables().vertex_count
    }

    /// Darts of one cell: (face, position, side) triples.
    pub fn dart_count(&self) -> usize {
        self.face_count() * self.face_size() * 2
    }
}

fn tetrahedron_faces() -> Vec<Vec<usize>> {
    vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]]
}

fn octahedron_faces() -> Vec<Vec<usize>> {
    // Vertices 0/1, 2/3, 4/5 are the three antipodal pairs; faces take one
    // vertex from each pair.
    let mut faces = Vec::new();
    for a in [0, 1] {
        for b in [2, 3] {
            for c in [4, 5] {
                faces.push(vec![a, b, c]);
            }
        }
    }
    faces
}

fn dodecahedron_faces() -> Vec<Vec<usize>> {
    // Belt model: top face 0..5, second ring 5..10, third ring 10..15,
    // bottom face 15..20.
    let mut faces = vec![vec![0, 1, 2, 3, 4]];
    for i in 0..5 {
        let j = (i + 1) % 5;
        faces.push(vec![i, j, 5 + j, 10 + i, 5 + i]);
    }
    for i in 0..5 {
        let j = (i + 1) % 5;
        faces.push(vec![15 + i, 10 + i, 5 + j, 10 + j, 15 + j]);
    }
    faces.push(vec![15, 16, 17, 18, 19]);
    faces
}

/// A dart inside one cell: a face, an edge position in the face's canonical
/// cycle, and one of the edge's two endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellDart {
    pub face: usize,
    pub pos: usize,
    pub side: usize,
}

/// Derived incidence tables of one shape.
pub struct ShapeTables {
    pub shape: Shape,
    pub vertex_count: usize,
    /// Oriented vertex cycle of each face; edge `p` of a face joins cycle
    /// positions `p` and `p+1`.
    pub face_cycles: Vec<Vec<usize>>,
    /// For (face, pos): the other face containing the same edge, and the
    /// edge's position there.
    pub other_face: Vec<Vec<(usize, usize)>>,
    /// Number of faces meeting each vertex (the link polygon size).
    pub vertex_valence: Vec<usize>,
}

impl ShapeTables {
    fn build(shape: Shape, vertex_count: usize, face_sets: Vec<Vec<usize>>) -> ShapeTables {
        // Edges: vertex pairs shared by exactly two faces.
        let shares = |u: usize, v: usize| -> Vec<usize> {
            face_sets
                .iter()
                .enumerate()
                .filter(|(_, f)| f.contains(&u) && f.contains(&v))
                .map(|(i, _)| i)
                .collect()
        };
        let mut adjacency = vec![Vec::new(); vertex_count];
        for u in 0..vertex_count {
            for v in u + 1..vertex_count {
                let fs = shares(u, v);
                assert!(
                    fs.len() <= 2,
                    "{}: pair ({u},{v}) lies in {} faces",
                    shape.name(),
                    fs.len()
                );
                if fs.len() == 2 {
                    adjacency[u].push(v);
                    adjacency[v].push(u);
                }
            }
        }
        // Walk each face's cycle, starting at its smallest vertex.
        let mut cycles: Vec<Vec<usize>> = face_sets
            .iter()
            .map(|f| {
                let start = *f.iter().min().unwrap();
                let mut cycle = vec![start];
                let mut prev = usize::MAX;
                let mut cur = start;
                for _ in 1..f.len() {
                    let next = *adjacency[cur]
                        .iter()
                        .filter(|&&w| w != prev && f.contains(&w) && w != start)
                        .min()
                        .unwrap_or_else(|| {
                            panic!("{}: face {f:?} is not a cycle", shape.name())
                        });
                    prev = cur;
                    cur = next;
                    cycle.push(cur);
                }
                assert!(adjacency[cur].contains(&start));
                assert_eq!(cycle.len(), f.len());
                cycle
            })
            .collect();
        // Orient coherently: each edge must be traversed once per direction.
        let face_count = cycles.len();
        let directed = |cycle: &[usize], u: usize, v: usize| -> Option<bool> {
            // Some(true) if u→v appears, Some(false) if v→u, None otherwise.
            let k = cycle.len();
            for p in 0..k {
                let (x, y) = (cycle[p], cycle[(p + 1) % k]);
                if (x, y) == (u, v) {
                    return Some(true);
                }
                if (x, y) == (v, u) {
                    return Some(false);
                }
            }
            None
        };
        let mut oriented = vec![false; face_count];
        oriented[0] = true;
        let mut queue = vec![0usize];
        while let Some(f) = queue.pop() {
            let k = cycles[f].len();
            for p in 0..k {
                let (u, v) = (cycles[f][p], cycles[f][(p + 1) % k]);
                let g = face_sets
                    .iter()
                    .enumerate()
                    .position(|(i, s)| i != f && s.contains(&u) && s.contains(&v))
                    .unwrap();
                let same = directed(&cycles[g], u, v)
                    .expect("adjacent face contains the shared edge");
                if !oriented[g] {
                    if same {
                        cycles[g].reverse();
                    }
                    oriented[g] = true;
                    queue.push(g);
                } else {
                    assert!(!same, "{}: face orientations conflict", shape.name());
                }
            }
        }
        // Edge ↔ other-face table.
        let other_face: Vec<Vec<(usize, usize)>> = (0..face_count)
            .map(|f| {
                let k = cycles[f].len();
                (0..k)
                    .map(|p| {
                        let (u, v) = (cycles[f][p], cycles[f][(p + 1) % k]);
                        for (g, cyc) in cycles.iter().enumerate() {
                            if g == f {
                                continue;
                            }
                            let kk = cyc.len();
                            for pp in 0..kk {
                                let (x, y) = (cyc[pp], cyc[(pp + 1) % kk]);
                                if (x, y) == (v, u) {
                                    return (g, pp);
                                }
                            }
                        }
                        panic!("{}: edge ({u},{v}) has no partner face", shape.name())
                    })
                    .collect()
            })
            .collect();
        let mut vertex_valence = vec![0usize; vertex_count];
        for f in &face_sets {
            for &v in f {
                vertex_valence[v] += 1;
            }
        }
        let edge_count: usize = adjacency.iter().map(|a| a.len()).sum::<usize>() / 2;
        assert_eq!(
            vertex_count + face_count,
            edge_count + 2,
            "{}: Euler characteristic must be 2",
            shape.name()
        );
        ShapeTables {
            shape,
            vertex_count,
            face_cycles: cycles,
            other_face,
            vertex_valence,
        }
    }

    pub fn face_size(&self) -> usize {
        self.face_cycles[0].len()
    }

    /// The endpoint vertex of a dart.
    pub fn dart_vertex(&self, d: CellDart) -> usize {
        let cycle = &self.face_cycles[d.face];
        let k = cycle.len();
        if d.side == 0 {
            cycle[d.pos]
        } else {
            cycle[(d.pos + 1) % k]
        }
    }

    /// s0: the other endpoint of the same edge.
    pub fn flip_vertex(&self, d: CellDart) -> CellDart {
        CellDart {
            side: 1 - d.side,
            ..d
        }
    }

    /// s1: the other edge of the same face at the same vertex.
    pub fn flip_edge(&self, d: CellDart) -> CellDart {
        let k = self.face_cycles[d.face].len();
        if d.side == 0 {
            CellDart {
                face: d.face,
                pos: (d.pos + k - 1) % k,
                side: 1,
            }
        } else {
            CellDart {
                face: d.face,
                pos: (d.pos + 1) % k,
                side: 0,
            }
        }
    }

    /// s2: the other face of the cell at the same edge and vertex.
    pub fn flip_face(&self, d: CellDart) -> CellDart {
        let v = self.dart_vertex(d);
        let (g, pp) = self.other_face[d.face][d.pos];
        let side = if self.face_cycles[g][pp] == v { 0 } else { 1 };
        debug_assert_eq!(
            self.dart_vertex(CellDart {
                face: g,
                pos: pp,
                side
            }),
            v
        );
        CellDart {
            face: g,
            pos: pp,
            side,
        }
    }

    /// Dense index of a dart within the cell.
    pub fn dart_index(&self, d: CellDart) -> usize {
        (d.face * self.face_size() + d.pos) * 2 + d.side
    }

    pub fn dart_from_index(&self, i: usize) -> CellDart {
        let k = self.face_size();
        CellDart {
            face: i / 2 / k,
            pos: (i / 2) % k,
            side: i % 2,
        }
    }

    /// The unique face at maximal distance from `f` in the graph whose
    /// edges join faces sharing a vertex: the antipodal face (octahedron and
    /// dodecahedron only).
    pub fn antipodal_face(&self, f: usize) -> usize {
        let n = self.face_cycles.len();
        let share_vertex = |a: usize, b: usize| {
            self.face_cycles[a]
                .iter()
                .any(|v| self.face_cycles[b].contains(v))
        };
        let mut dist = vec![usize::MAX; n];
        dist[f] = 0;
        let mut queue = std::collections::VecDeque::from([f]);
        while let Some(g) = queue.pop_front() {
            for h in 0..n {
                if h != g && dist[h] == usize::MAX && share_vertex(g, h) {
                    dist[h] = dist[g] + 1;
                    queue.push_back(h);
                }
            }
        }
        let max = *dist.iter().max().unwrap();
        let candidates: Vec<usize> = (0..n).filter(|&g| dist[g] == max).collect();
        assert!(
            max != usize::MAX && candidates.len() == 1,
            "{}: face {f} has no unique antipode",
            self.shape.name()
        );
        candidates[0]
    }
}
