//! Combinatorial maps on closed orientable surfaces.
//!
//! A map is stored as a set of darts (oriented edge sides) together with
//! the reversal involution and the vertex rotation. Faces are the orbits
//! of the face-successor `succ(d) = rotation(reversal(d))`; this fixes the
//! global orientation used for all face boundary words. The genus comes
//! out of the Euler formula and doubles as a consistency check on the
//! input permutations.
//!
//! The catalog holds the named maps used throughout: the sphere
//! subdivisions behind Desargues-type theorems, the torus subdivisions and
//! tilings behind Pappus- and Möbius-type theorems, and the genus-g
//! generalization of the Pappus triangulation. Dart labels follow the
//! figure labels so reports stay readable.

use std::collections::VecDeque;

use serde_json::{json, Value as Json};
use thiserror::Error;

pub type Dart = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("malformed map: {0}")]
    Malformed(String),
    #[error("reversal must be a fixed-point-free involution")]
    BadReversal,
    #[error("rotation must be a permutation of the darts")]
    BadRotation,
    #[error("map is not connected")]
    Disconnected,
    #[error("Euler characteristic {0} is not of the form 2-2g")]
    BadEuler(i64),
    #[error("unknown catalog map {0:?}")]
    UnknownCatalog(String),
    #[error("catalog map {0:?} needs a genus parameter >= 1")]
    GenusRequired(String),
    #[error("not a polygonal subdivision: {0}")]
    NotSubdivision(String),
    #[error("not a quadrilateral tiling: {0}")]
    NotTiling(String),
    #[error("tiling is not simple")]
    NotSimple,
}

/// Vertex color of a tiling: black vertices carry points, white vertices
/// carry hyperplanes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Color {
    Black,
    White,
}

/// A combinatorial map; immutable after construction, with all derived
/// data (vertices, edges, faces, genus) cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombMap {
    reversal: Vec<Dart>,
    rotation: Vec<Dart>,
    tail: Vec<usize>,
    vertices: Vec<Vec<Dart>>,
    edges: Vec<(Dart, Dart)>,
    edge_of: Vec<usize>,
    faces: Vec<Vec<Dart>>,
    face_of: Vec<usize>,
    genus: usize,
    vertex_labels: Vec<String>,
    edge_labels: Vec<String>,
}

/// Builds a map from its two defining permutations. Vertices are numbered
/// by the least dart of their rotation orbit, edges by their lesser dart,
/// and faces by their least boundary dart.
pub fn build_map(reversal: Vec<Dart>, rotation: Vec<Dart>) -> Result<CombMap, MapError> {
    CombMap::from_permutations(reversal, rotation, None)
}

impl CombMap {
    fn from_permutations(
        reversal: Vec<Dart>,
        rotation: Vec<Dart>,
        tails: Option<Vec<usize>>,
    ) -> Result<CombMap, MapError> {
        let n = reversal.len();
        if rotation.len() != n {
            return Err(MapError::Malformed(
                "reversal and rotation must have equal length".into(),
            ));
        }
        if n == 0 || n % 2 != 0 {
            return Err(MapError::Malformed(
                "dart count must be positive and even".into(),
            ));
        }
        for d in 0..n {
            if reversal[d] >= n || reversal[reversal[d]] != d || reversal[d] == d {
                return Err(MapError::BadReversal);
            }
            if rotation[d] >= n {
                return Err(MapError::BadRotation);
            }
        }
        let mut seen = vec![false; n];
        for d in 0..n {
            seen[rotation[d]] = true;
        }
        if seen.iter().any(|s| !s) {
            return Err(MapError::BadRotation);
        }

        let vertices = orbits(&rotation);
        let tail = match tails {
            Some(t) => {
                // orbits must refine the given tail assignment
                let n_vertices = t.iter().max().map_or(0, |m| m + 1);
                let mut count = vec![0usize; n_vertices];
                for orbit in &vertices {
                    let v = t[orbit[0]];
                    if orbit.iter().any(|&d| t[d] != v) {
                        return Err(MapError::Malformed(
                            "rotation orbit spans several declared vertices".into(),
                        ));
                    }
                    count[v] += 1;
                }
                if count.iter().any(|&c| c != 1) {
                    return Err(MapError::Malformed(
                        "declared vertices do not match rotation orbits".into(),
                    ));
                }
                t
            }
            None => {
                let mut t = vec![0usize; n];
                for (v, orbit) in vertices.iter().enumerate() {
                    for &d in orbit {
                        t[d] = v;
                    }
                }
                t
            }
        };
        // re-order the vertex orbit list by vertex id
        let n_vertices = tail.iter().max().unwrap() + 1;
        let mut vertex_list: Vec<Vec<Dart>> = vec![Vec::new(); n_vertices];
        for orbit in vertices {
            let v = tail[orbit[0]];
            vertex_list[v] = orbit;
        }

        let mut edges = Vec::new();
        let mut edge_of = vec![usize::MAX; n];
        for d in 0..n {
            if d < reversal[d] {
                edge_of[d] = edges.len();
                edge_of[reversal[d]] = edges.len();
                edges.push((d, reversal[d]));
            }
        }

        let succ: Vec<Dart> = (0..n).map(|d| rotation[reversal[d]]).collect();
        let faces = orbits(&succ);
        let mut face_of = vec![usize::MAX; n];
        for (f, orbit) in faces.iter().enumerate() {
            for &d in orbit {
                face_of[d] = f;
            }
        }

        // connectivity: reversal and rotation act transitively on darts
        let mut reach = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        reach[0] = true;
        while let Some(d) = queue.pop_front() {
            for next in [reversal[d], rotation[d]] {
                if !reach[next] {
                    reach[next] = true;
                    queue.push_back(next);
                }
            }
        }
        if reach.iter().any(|r| !r) {
            return Err(MapError::Disconnected);
        }

        let chi = vertex_list.len() as i64 - edges.len() as i64 + faces.len() as i64;
        if chi > 2 || (2 - chi) % 2 != 0 {
            return Err(MapError::BadEuler(chi));
        }
        let genus = ((2 - chi) / 2) as usize;

        Ok(CombMap {
            reversal,
            rotation,
            tail,
            vertices: vertex_list,
            edges,
            edge_of,
            faces,
            face_of,
            genus,
            vertex_labels: Vec::new(),
            edge_labels: Vec::new(),
        })
    }

    /// Builds a map from a vertex count, an edge list and one boundary walk
    /// per face, given as signed edge references (`(edge, true)` traverses
    /// tail→head). Every edge must be traversed exactly once in each
    /// direction across all walks.
    pub fn from_face_walks(
        n_vertices: usize,
        edges: &[(usize, usize)],
        walks: &[Vec<(usize, bool)>],
    ) -> Result<CombMap, MapError> {
        let n = 2 * edges.len();
        let dart_of = |(e, forward): (usize, bool)| if forward { 2 * e } else { 2 * e + 1 };
        let tail_of = |d: Dart| {
            let (u, v) = edges[d / 2];
            if d % 2 == 0 {
                u
            } else {
                v
            }
        };
        let head_of = |d: Dart| tail_of(d ^ 1);

        let mut succ = vec![usize::MAX; n];
        for walk in walks {
            if walk.is_empty() {
                return Err(MapError::Malformed("empty face walk".into()));
            }
            for (i, &step) in walk.iter().enumerate() {
                let d = dart_of(step);
                let next = dart_of(walk[(i + 1) % walk.len()]);
                if head_of(d) != tail_of(next) {
                    return Err(MapError::Malformed(format!(
                        "face walk breaks between darts {d} and {next}"
                    )));
                }
                if succ[d] != usize::MAX {
                    return Err(MapError::Malformed(format!("dart {d} used twice")));
                }
                succ[d] = next;
            }
        }
        if succ.iter().any(|&s| s == usize::MAX) {
            return Err(MapError::Malformed(
                "some darts unused by face walks".into(),
            ));
        }
        let reversal: Vec<Dart> = (0..n).map(|d| d ^ 1).collect();
        // succ(d) = rotation(reversal(d)), hence rotation(d) = succ(reversal(d))
        let rotation: Vec<Dart> = (0..n).map(|d| succ[reversal[d]]).collect();
        let tails: Vec<usize> = (0..n).map(tail_of).collect();
        if tails.iter().max().map_or(true, |&m| m + 1 != n_vertices) {
            return Err(MapError::Malformed(
                "vertex count does not match edges".into(),
            ));
        }
        CombMap::from_permutations(reversal, rotation, Some(tails))
    }

    pub fn with_labels(mut self, vertex_labels: &[&str], edge_labels: &[&str]) -> CombMap {
        assert_eq!(vertex_labels.len(), self.n_vertices());
        assert_eq!(edge_labels.len(), self.n_edges());
        self.vertex_labels = vertex_labels.iter().map(|s| s.to_string()).collect();
        self.edge_labels = edge_labels.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn n_darts(&self) -> usize {
        self.reversal.len()
    }
    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }
    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }
    pub fn n_faces(&self) -> usize {
        self.faces.len()
    }
    pub fn genus(&self) -> usize {
        self.genus
    }
    pub fn reversal(&self, d: Dart) -> Dart {
        self.reversal[d]
    }
    pub fn rotation(&self, d: Dart) -> Dart {
        self.rotation[d]
    }
    /// Next dart along the boundary of the face containing `d`.
    pub fn face_successor(&self, d: Dart) -> Dart {
        self.rotation[self.reversal[d]]
    }
    pub fn tail(&self, d: Dart) -> usize {
        self.tail[d]
    }
    pub fn head(&self, d: Dart) -> usize {
        self.tail[self.reversal[d]]
    }
    pub fn edge_of(&self, d: Dart) -> usize {
        self.edge_of[d]
    }
    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d]
    }
    /// The two darts of an edge, lesser first.
    pub fn edge_darts(&self, e: usize) -> (Dart, Dart) {
        self.edges[e]
    }
    pub fn edge_endpoints(&self, e: usize) -> (usize, usize) {
        let (d, r) = self.edges[e];
        (self.tail[d], self.tail[r])
    }
    /// Boundary darts of a face, starting from its least dart.
    pub fn face(&self, f: usize) -> &[Dart] {
        &self.faces[f]
    }
    pub fn vertex_darts(&self, v: usize) -> &[Dart] {
        &self.vertices[v]
    }
    pub fn vertex_degree(&self, v: usize) -> usize {
        self.vertices[v].len()
    }
    pub fn vertex_label(&self, v: usize) -> String {
        self.vertex_labels
            .get(v)
            .cloned()
            .unwrap_or_else(|| format!("v{v}"))
    }
    pub fn edge_label(&self, e: usize) -> String {
        self.edge_labels
            .get(e)
            .cloned()
            .unwrap_or_else(|| format!("e{e}"))
    }

    pub fn has_parallel_edges(&self) -> bool {
        let mut pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(d, r)| {
                let (a, b) = (self.tail[d], self.tail[r]);
                (a.min(b), a.max(b))
            })
            .collect();
        pairs.sort_unstable();
        pairs.windows(2).any(|w| w[0] == w[1])
    }

    pub fn to_json(&self) -> Json {
        json!({
            "schema": 1,
            "darts": self.n_darts(),
            "reversal": self.reversal,
            "rotation": self.rotation,
        })
    }

    pub fn from_json(v: &Json) -> Result<CombMap, MapError> {
        let arr = |key: &str| -> Result<Vec<usize>, MapError> {
            v.get(key)
                .and_then(Json::as_array)
                .ok_or_else(|| MapError::Malformed(format!("missing array {key:?}")))?
                .iter()
                .map(|x| {
                    x.as_u64()
                        .map(|u| u as usize)
                        .ok_or_else(|| MapError::Malformed(format!("bad entry in {key:?}")))
                })
                .collect()
        };
        build_map(arr("reversal")?, arr("rotation")?)
    }

    /// Orientation-preserving isomorphism test, optionally matching a
    /// vertex coloring. Used by round-trip tests.
    pub fn is_isomorphic_to(&self, other: &CombMap, colors: Option<(&[Color], &[Color])>) -> bool {
        if self.n_darts() != other.n_darts()
            || self.n_vertices() != other.n_vertices()
            || self.n_edges() != other.n_edges()
            || self.n_faces() != other.n_faces()
        {
            return false;
        }
        let n = self.n_darts();
        'candidate: for start in 0..n {
            let mut image = vec![usize::MAX; n];
            image[0] = start;
            let mut queue = VecDeque::from([0usize]);
            while let Some(d) = queue.pop_front() {
                let img = image[d];
                for (next, next_img) in [
                    (self.reversal[d], other.reversal[img]),
                    (self.rotation[d], other.rotation[img]),
                ] {
                    if image[next] == usize::MAX {
                        image[next] = next_img;
                        queue.push_back(next);
                    } else if image[next] != next_img {
                        continue 'candidate;
                    }
                }
            }
            let mut hit = vec![false; n];
            for &i in &image {
                if i == usize::MAX || hit[i] {
                    continue 'candidate;
                }
                hit[i] = true;
            }
            if let Some((ca, cb)) = colors {
                if (0..n).any(|d| ca[self.tail[d]] != cb[other.tail[image[d]]]) {
                    continue 'candidate;
                }
            }
            return true;
        }
        false
    }
}

fn orbits(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut d = perm[start];
        while d != start {
            seen[d] = true;
            orbit.push(d);
            d = perm[d];
        }
        out.push(orbit);
    }
    out
}

/// A polygonal subdivision: every face boundary has at least two darts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonalSubdivision {
    map: CombMap,
}

impl PolygonalSubdivision {
    pub fn new(map: CombMap) -> Result<Self, MapError> {
        for f in 0..map.n_faces() {
            if map.face(f).len() < 2 {
                return Err(MapError::NotSubdivision(format!(
                    "face {f} has fewer than two darts"
                )));
            }
        }
        Ok(PolygonalSubdivision { map })
    }

    pub fn map(&self) -> &CombMap {
        &self.map
    }

    pub fn max_face_size(&self) -> usize {
        (0..self.map.n_faces())
            .map(|f| self.map.face(f).len())
            .max()
            .unwrap_or(0)
    }
}

/// A quadrilateral tiling: all faces are quadrilaterals and the vertex
/// coloring is proper.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadTiling {
    map: CombMap,
    colors: Vec<Color>,
}

impl QuadTiling {
    pub fn new(map: CombMap, colors: Vec<Color>) -> Result<Self, MapError> {
        if colors.len() != map.n_vertices() {
            return Err(MapError::NotTiling("color table size mismatch".into()));
        }
        for f in 0..map.n_faces() {
            if map.face(f).len() != 4 {
                return Err(MapError::NotTiling(format!(
                    "face {f} is not a quadrilateral"
                )));
            }
        }
        for e in 0..map.n_edges() {
            let (u, v) = map.edge_endpoints(e);
            if colors[u] == colors[v] {
                return Err(MapError::NotTiling(format!(
                    "edge {e} joins two {:?} vertices",
                    colors[u]
                )));
            }
        }
        Ok(QuadTiling { map, colors })
    }

    pub fn map(&self) -> &CombMap {
        &self.map
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn black_vertices(&self) -> Vec<usize> {
        (0..self.map.n_vertices())
            .filter(|&v| self.colors[v] == Color::Black)
            .collect()
    }

    pub fn white_vertices(&self) -> Vec<usize> {
        (0..self.map.n_vertices())
            .filter(|&v| self.colors[v] == Color::White)
            .collect()
    }

    /// No two edges incident to the same pair of vertices.
    pub fn is_simple(&self) -> bool {
        !self.map.has_parallel_edges()
    }

    pub fn max_white_degree(&self) -> usize {
        self.white_vertices()
            .iter()
            .map(|&w| self.map.vertex_degree(w))
            .max()
            .unwrap_or(0)
    }
}

/// Cell correspondence produced by [`tiling_of`]: white vertices come from
/// faces of the subdivision and tiles come from its edges.
#[derive(Debug, Clone)]
pub struct TilingCorrespondence {
    /// white vertex id of each subdivision face
    pub white_of_face: Vec<usize>,
    /// tile (face of the tiling) of each subdivision edge
    pub tile_of_edge: Vec<usize>,
    /// tiling edge of each subdivision dart (the corner at its tail)
    pub tiling_edge_of_dart: Vec<usize>,
}

/// The tiling associated with a subdivision: black vertices are the
/// vertices, white vertices the faces, with one edge per corner; tiles
/// correspond to edges of the subdivision.
pub fn tiling_of(sub: &PolygonalSubdivision) -> (QuadTiling, TilingCorrespondence) {
    let m = sub.map();
    let nv = m.n_vertices();
    let n_vertices = nv + m.n_faces();
    // tiling edge i = corner of dart i: joins tail(i) and the face of i
    let edges: Vec<(usize, usize)> = (0..m.n_darts())
        .map(|d| (m.tail(d), nv + m.face_of(d)))
        .collect();
    let mut walks = Vec::with_capacity(m.n_edges());
    for e in 0..m.n_edges() {
        let (d, r) = m.edge_darts(e);
        walks.push(vec![
            (d, true),
            (m.face_successor(d), false),
            (r, true),
            (m.face_successor(r), false),
        ]);
    }
    let map = CombMap::from_face_walks(n_vertices, &edges, &walks)
        .expect("tiling of a valid subdivision is a valid map");
    let mut colors = vec![Color::Black; nv];
    colors.extend(std::iter::repeat(Color::White).take(m.n_faces()));

    let mut vertex_labels: Vec<String> = (0..nv).map(|v| m.vertex_label(v)).collect();
    vertex_labels.extend((0..m.n_faces()).map(|f| format!("F{f}")));
    let edge_labels: Vec<String> = (0..m.n_darts())
        .map(|d| {
            format!(
                "{}@{}",
                m.edge_label(m.edge_of(d)),
                m.vertex_label(m.tail(d))
            )
        })
        .collect();
    let map = map.with_labels(
        &vertex_labels.iter().map(String::as_str).collect::<Vec<_>>(),
        &edge_labels.iter().map(String::as_str).collect::<Vec<_>>(),
    );

    let tile_of_edge = (0..m.n_edges())
        .map(|e| map.face_of(2 * m.edge_darts(e).0))
        .collect();
    let corr = TilingCorrespondence {
        white_of_face: (0..m.n_faces()).map(|f| nv + f).collect(),
        tile_of_edge,
        tiling_edge_of_dart: (0..m.n_darts()).collect(),
    };
    let tiling = QuadTiling::new(map, colors).expect("associated tiling is quadrilateral");
    (tiling, corr)
}

/// Cell correspondence produced by [`subdivision_of`]: tiles become edges
/// and white vertices become faces.
#[derive(Debug, Clone)]
pub struct SubdivisionCorrespondence {
    /// subdivision vertex id of each black tiling vertex
    pub vertex_of_black: Vec<Option<usize>>,
    /// subdivision edge of each tile
    pub edge_of_tile: Vec<usize>,
    /// subdivision face of each white tiling vertex
    pub face_of_white: Vec<Option<usize>>,
}

/// The subdivision associated with a simple tiling; inverse of
/// [`tiling_of`] up to isomorphism.
pub fn subdivision_of(
    tiling: &QuadTiling,
) -> Result<(PolygonalSubdivision, SubdivisionCorrespondence), MapError> {
    if !tiling.is_simple() {
        return Err(MapError::NotSimple);
    }
    let t = tiling.map();
    let mut vertex_of_black = vec![None; t.n_vertices()];
    for (i, v) in tiling.black_vertices().into_iter().enumerate() {
        vertex_of_black[v] = Some(i);
    }
    let n_black = tiling.black_vertices().len();

    // subdivision darts are the black-tailed tiling darts; within a tile the
    // opposite black-tailed dart is the reverse, and the subdivision face
    // successor is the tiling reversal of the tile successor
    let mut edges = Vec::with_capacity(t.n_faces());
    let mut fwd_dart = Vec::with_capacity(t.n_faces());
    for tile in 0..t.n_faces() {
        let boundary = t.face(tile);
        debug_assert_eq!(boundary.len(), 4);
        let blacks: Vec<Dart> = boundary
            .iter()
            .copied()
            .filter(|&d| tiling.color(t.tail(d)) == Color::Black)
            .collect();
        debug_assert_eq!(blacks.len(), 2);
        let (x, y) = (blacks[0].min(blacks[1]), blacks[0].max(blacks[1]));
        edges.push((
            vertex_of_black[t.tail(x)].unwrap(),
            vertex_of_black[t.tail(y)].unwrap(),
        ));
        fwd_dart.push((x, y));
    }
    let mut sub_dart_of = vec![usize::MAX; t.n_darts()];
    for (e, &(x, y)) in fwd_dart.iter().enumerate() {
        sub_dart_of[x] = 2 * e;
        sub_dart_of[y] = 2 * e + 1;
    }
    let n = 2 * edges.len();
    let mut succ = vec![usize::MAX; n];
    for (e, &(x, y)) in fwd_dart.iter().enumerate() {
        for (sd, td) in [(2 * e, x), (2 * e + 1, y)] {
            let next_tiling = t.reversal(t.face_successor(td));
            debug_assert_eq!(tiling.color(t.tail(next_tiling)), Color::Black);
            succ[sd] = sub_dart_of[next_tiling];
        }
    }
    let reversal: Vec<Dart> = (0..n).map(|d| d ^ 1).collect();
    let rotation: Vec<Dart> = (0..n).map(|d| succ[reversal[d]]).collect();
    let tails: Vec<usize> = (0..n)
        .map(|d| {
            let (u, v) = edges[d / 2];
            if d % 2 == 0 {
                u
            } else {
                v
            }
        })
        .collect();
    let map = CombMap::from_permutations(reversal, rotation, Some(tails))?;
    debug_assert_eq!(map.n_vertices(), n_black);

    // a white vertex sits inside the subdivision face traced around it
    let mut face_of_white = vec![None; t.n_vertices()];
    for (e, &(x, _)) in fwd_dart.iter().enumerate() {
        let white = t.head(x);
        let f = map.face_of(2 * e);
        debug_assert!(face_of_white[white].map_or(true, |old| old == f));
        face_of_white[white] = Some(f);
    }
    let corr = SubdivisionCorrespondence {
        vertex_of_black,
        edge_of_tile: (0..t.n_faces()).collect(),
        face_of_white,
    };
    Ok((PolygonalSubdivision::new(map)?, corr))
}

/// Tree–cotree decomposition: a spanning tree of the vertex graph, a
/// spanning tree of the dual graph rooted at a chosen face and disjoint
/// from the first, and 2g leftover edges.
#[derive(Debug, Clone)]
pub struct TreeCotree {
    pub tree_edges: Vec<usize>,
    pub cotree_edges: Vec<usize>,
    pub leftover_edges: Vec<usize>,
    pub root_face: usize,
    /// for every non-root face, the boundary dart of the cotree edge
    /// leading toward the root (the dart lies in the child face)
    pub parent_dart: Vec<Option<Dart>>,
    /// all faces, children before parents, root last
    pub face_order: Vec<usize>,
}

/// Deterministic tree–cotree decomposition (breadth-first by dart
/// identifier order), with the cotree rooted at `root_face`.
pub fn tree_cotree(map: &CombMap, root_face: usize) -> Result<TreeCotree, MapError> {
    assert!(root_face < map.n_faces(), "no such face");
    let mut in_tree = vec![false; map.n_edges()];
    let mut seen_v = vec![false; map.n_vertices()];
    let mut queue = VecDeque::from([0usize]);
    seen_v[0] = true;
    let mut tree_edges = Vec::new();
    while let Some(v) = queue.pop_front() {
        let mut darts = map.vertex_darts(v).to_vec();
        darts.sort_unstable();
        for d in darts {
            let u = map.head(d);
            if !seen_v[u] {
                seen_v[u] = true;
                in_tree[map.edge_of(d)] = true;
                tree_edges.push(map.edge_of(d));
                queue.push_back(u);
            }
        }
    }
    if seen_v.iter().any(|s| !s) {
        return Err(MapError::Disconnected);
    }

    let mut in_cotree = vec![false; map.n_edges()];
    let mut parent_dart = vec![None; map.n_faces()];
    let mut depth = vec![usize::MAX; map.n_faces()];
    depth[root_face] = 0;
    let mut fqueue = VecDeque::from([root_face]);
    let mut cotree_edges = Vec::new();
    while let Some(f) = fqueue.pop_front() {
        let mut darts = map.face(f).to_vec();
        darts.sort_unstable();
        for d in darts {
            let e = map.edge_of(d);
            if in_tree[e] || in_cotree[e] {
                continue;
            }
            let g = map.face_of(map.reversal(d));
            if depth[g] == usize::MAX {
                depth[g] = depth[f] + 1;
                in_cotree[e] = true;
                cotree_edges.push(e);
                parent_dart[g] = Some(map.reversal(d));
                fqueue.push_back(g);
            }
        }
    }
    if depth.iter().any(|&d| d == usize::MAX) {
        return Err(MapError::Disconnected);
    }

    let leftover_edges: Vec<usize> = (0..map.n_edges())
        .filter(|&e| !in_tree[e] && !in_cotree[e])
        .collect();
    debug_assert_eq!(leftover_edges.len(), 2 * map.genus());

    let mut face_order: Vec<usize> = (0..map.n_faces()).collect();
    face_order.sort_by_key(|&f| (usize::MAX - depth[f], f));
    debug_assert_eq!(*face_order.last().unwrap(), root_face);

    Ok(TreeCotree {
        tree_edges,
        cotree_edges,
        leftover_edges,
        root_face,
        parent_dart,
        face_order,
    })
}

/// A catalog entry: either a polygonal subdivision or a quadrilateral
/// tiling, under its documented name.
#[derive(Debug, Clone)]
pub enum CatalogMap {
    Subdivision(PolygonalSubdivision),
    Tiling(QuadTiling),
}

impl CatalogMap {
    pub fn map(&self) -> &CombMap {
        match self {
            CatalogMap::Subdivision(s) => s.map(),
            CatalogMap::Tiling(t) => t.map(),
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            CatalogMap::Subdivision(_) => "subdivision",
            CatalogMap::Tiling(_) => "tiling",
        }
    }
}

/// The documented catalog names, in listing order.
pub const CATALOG_NAMES: [&str; 12] = [
    "tetrahedron",
    "square_pyramid",
    "octahedron",
    "pappus_torus_triangulation",
    "moebius_torus_quad",
    "genus_g_pappus",
    "cube_tiling",
    "pappus_tiling",
    "pappus2_tiling",
    "k44_mobius_tiling",
    "k44_perm_tiling",
    "nonsimple_torus_tiling",
];

/// Looks up a catalog map. `genus` is only consulted by the
/// `genus_g_pappus` family and must then be at least 1.
pub fn catalog(name: &str, genus: Option<usize>) -> Result<CatalogMap, MapError> {
    let sub = |m: CombMap| -> Result<CatalogMap, MapError> {
        Ok(CatalogMap::Subdivision(PolygonalSubdivision::new(m)?))
    };
    match name {
        "tetrahedron" => sub(tetrahedron()),
        "square_pyramid" => sub(square_pyramid()),
        "octahedron" => sub(octahedron()),
        "pappus_torus_triangulation" => sub(pappus_torus_triangulation()),
        "moebius_torus_quad" => sub(moebius_torus_quad()),
        "genus_g_pappus" => {
            let g = genus.ok_or_else(|| MapError::GenusRequired(name.into()))?;
            if g == 0 {
                return Err(MapError::GenusRequired(name.into()));
            }
            sub(genus_g_pappus(g))
        }
        "cube_tiling" => Ok(CatalogMap::Tiling(cube_tiling())),
        "pappus_tiling" => {
            let (t, _) = tiling_of(&PolygonalSubdivision::new(pappus_torus_triangulation())?);
            Ok(CatalogMap::Tiling(t))
        }
        "pappus2_tiling" => Ok(CatalogMap::Tiling(pappus2_tiling())),
        "k44_mobius_tiling" => Ok(CatalogMap::Tiling(k44_mobius_tiling())),
        "k44_perm_tiling" => Ok(CatalogMap::Tiling(k44_perm_tiling())),
        "nonsimple_torus_tiling" => Ok(CatalogMap::Tiling(nonsimple_torus_tiling())),
        other => Err(MapError::UnknownCatalog(other.into())),
    }
}

/// Sphere triangulation behind Desargues' theorem: apex O over triangle
/// A1 B1 C1, edge points labelled as in the classical configuration.
fn tetrahedron() -> CombMap {
    let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (1, 3)];
    let walks = vec![
        vec![(0, true), (3, true), (1, false)],
        vec![(1, true), (4, true), (2, false)],
        vec![(2, true), (5, false), (0, false)],
        vec![(3, false), (5, true), (4, false)],
    ];
    CombMap::from_face_walks(4, &edges, &walks)
        .unwrap()
        .with_labels(&["O", "A1", "B1", "C1"], &["A2", "B2", "C2", "P", "Q", "R"])
}

/// Sphere subdivision behind the generalized Desargues theorem for
/// spatial quadrilaterals: a pyramid over a square base.
fn square_pyramid() -> CombMap {
    let edges = [
        (0, 1),
        (0, 2),
        (0, 3),
        (0, 4),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 1),
    ];
    let walks = vec![
        vec![(0, true), (4, true), (1, false)],
        vec![(1, true), (5, true), (2, false)],
        vec![(2, true), (6, true), (3, false)],
        vec![(3, true), (7, true), (0, false)],
        vec![(7, false), (6, false), (5, false), (4, false)],
    ];
    CombMap::from_face_walks(5, &edges, &walks)
        .unwrap()
        .with_labels(
            &["O", "A1", "B1", "C1", "D1"],
            &["A2", "B2", "C2", "D2", "P", "Q", "R", "S"],
        )
}

/// Sphere triangulation behind the permutation theorem: two square
/// pyramids glued along their base.
fn octahedron() -> CombMap {
    let edges = [
        (0, 2),
        (0, 3),
        (0, 4),
        (0, 5),
        (1, 2),
        (1, 3),
        (1, 4),
        (1, 5),
        (2, 3),
        (3, 4),
        (4, 5),
        (5, 2),
    ];
    let walks = vec![
        vec![(0, true), (8, true), (1, false)],
        vec![(1, true), (9, true), (2, false)],
        vec![(2, true), (10, true), (3, false)],
        vec![(3, true), (11, true), (0, false)],
        vec![(5, true), (8, false), (4, false)],
        vec![(6, true), (9, false), (5, false)],
        vec![(7, true), (10, false), (6, false)],
        vec![(4, true), (11, false), (7, false)],
    ];
    CombMap::from_face_walks(6, &edges, &walks)
        .unwrap()
        .with_labels(
            &["O1", "O2", "B", "Bp", "C", "Cp"],
            &[
                "A", "Ap", "D", "Dp", "C", "Cp", "B", "Bp", "P", "Q", "P", "Q",
            ],
        )
}

/// Torus triangulation behind Pappus' theorem: a hexagon fan around a
/// central vertex with opposite sides glued. Vertices O1, O2, O3 and edge
/// points A1..C3 follow the classical labels.
fn pappus_torus_triangulation() -> CombMap {
    // spokes e0..e5 alternate O3-O2 / O3-O1 around the hexagon;
    // sides e6..e8 are the three glued hexagon sides
    let edges = [
        (2, 1),
        (2, 0),
        (2, 1),
        (2, 0),
        (2, 1),
        (2, 0),
        (1, 0),
        (0, 1),
        (1, 0),
    ];
    let walks = vec![
        vec![(0, true), (6, true), (5, false)],
        vec![(5, true), (7, true), (4, false)],
        vec![(4, true), (8, true), (3, false)],
        vec![(3, true), (6, false), (2, false)],
        vec![(2, true), (7, false), (1, false)],
        vec![(1, true), (8, false), (0, false)],
    ];
    CombMap::from_face_walks(3, &edges, &walks)
        .unwrap()
        .with_labels(
            &["O1", "O2", "O3"],
            &["A1", "B2", "C1", "A2", "B1", "C2", "B3", "A3", "C3"],
        )
}

/// Torus quadrangulation behind the Möbius (sixteen points) theorem: a
/// 2×2 grid with opposite sides glued; edge labels follow the eight
/// configuration points.
fn moebius_torus_quad() -> CombMap {
    // vertices: 0 = corner, 1 = bottom-mid, 2 = left-mid, 3 = center
    let edges = [
        (0, 1),
        (1, 0),
        (2, 3),
        (3, 2),
        (0, 2),
        (2, 0),
        (1, 3),
        (3, 1),
    ];
    let walks = vec![
        vec![(0, true), (6, true), (2, false), (4, false)],
        vec![(1, true), (4, true), (3, false), (6, false)],
        vec![(2, true), (7, true), (0, false), (5, false)],
        vec![(3, true), (5, true), (1, false), (7, false)],
    ];
    CombMap::from_face_walks(4, &edges, &walks)
        .unwrap()
        .with_labels(
            &["P00", "P10", "P01", "P11"],
            &["A2", "A4", "B4", "B2", "B3", "A1", "B1", "A3"],
        )
}

/// Genus-g generalization of the Pappus triangulation: a polygon with
/// 4g+2 sides split into 4g+2 triangles around a center, opposite sides
/// glued. Even corners collapse to one vertex and odd corners to another.
fn genus_g_pappus(g: usize) -> CombMap {
    let m = 4 * g + 2;
    let corner = |c: usize| if c % 2 == 0 { 1 } else { 0 };
    let mut edges = Vec::with_capacity(m + 2 * g + 1);
    for c in 0..m {
        edges.push((2, corner(c))); // spoke c
    }
    for t in 0..(2 * g + 1) {
        edges.push((corner(t), corner(t + 1))); // side t
    }
    let mut walks = Vec::with_capacity(m);
    for c in 0..m {
        let side = if c <= 2 * g {
            (m + c, true)
        } else {
            (m + c - (2 * g + 1), false)
        };
        walks.push(vec![(c, true), side, ((c + 1) % m, false)]);
    }
    let mut edge_labels: Vec<String> = (0..m).map(|c| format!("spoke{c}")).collect();
    edge_labels.extend((0..(2 * g + 1)).map(|t| format!("side{t}")));
    CombMap::from_face_walks(3, &edges, &walks)
        .unwrap()
        .with_labels(
            &["O1", "O2", "O3"],
            &edge_labels.iter().map(String::as_str).collect::<Vec<_>>(),
        )
}

/// Sphere tiling behind Desargues' theorem: the cube, with black point
/// vertices A1, B1, C1, O and white line vertices.
fn cube_tiling() -> QuadTiling {
    let edges = [
        (0, 4),
        (4, 1),
        (1, 5),
        (5, 0),
        (6, 2),
        (2, 7),
        (7, 3),
        (3, 6),
        (0, 6),
        (4, 2),
        (1, 7),
        (5, 3),
    ];
    let walks = vec![
        vec![(0, true), (1, true), (2, true), (3, true)],
        vec![(7, false), (6, false), (5, false), (4, false)],
        vec![(8, true), (4, true), (9, false), (0, false)],
        vec![(9, true), (5, true), (10, false), (1, false)],
        vec![(10, true), (6, true), (11, false), (2, false)],
        vec![(11, true), (7, true), (8, false), (3, false)],
    ];
    let map = CombMap::from_face_walks(8, &edges, &walks)
        .unwrap()
        .with_labels(
            &["A1", "B1", "C1", "O", "l", "A2B2", "A2C2", "B2C2"],
            &[
                "A1-l", "l-B1", "B1-A2B2", "A2B2-A1", "A2C2-C1", "C1-B2C2", "B2C2-O", "O-A2C2",
                "A1-A2C2", "l-C1", "B1-B2C2", "A2B2-O",
            ],
        );
    let colors = vec![
        Color::Black,
        Color::Black,
        Color::Black,
        Color::Black,
        Color::White,
        Color::White,
        Color::White,
        Color::White,
    ];
    QuadTiling::new(map, colors).unwrap()
}

/// Torus tiling behind Pappus' theorem in the plane: four point vertices
/// A1..A4 and five line vertices l1..l5, with symbolic connection labels
/// on the edges (noncommuting units a, b make the shaded tile fail).
fn pappus2_tiling() -> QuadTiling {
    // vertices: A1..A4 = 0..3, l1..l5 = 4..8
    let edges = [
        (0, 5),
        (0, 4),
        (1, 6),
        (1, 5),
        (1, 4),
        (2, 6),
        (2, 7),
        (3, 8),
        (3, 6),
        (0, 6),
        (1, 7),
        (1, 8),
        (0, 7),
        (0, 8),
        (2, 5),
        (3, 4),
        (2, 4),
        (3, 5),
    ];
    let walks = vec![
        vec![(12, true), (6, false), (14, true), (0, false)],
        vec![(1, true), (15, false), (7, true), (13, false)],
        vec![(14, false), (5, true), (2, false), (3, true)],
        vec![(4, false), (2, true), (8, false), (15, true)],
        vec![(5, false), (16, true), (1, false), (9, true)],
        vec![(9, false), (0, true), (17, false), (8, true)],
        vec![(16, false), (6, true), (10, false), (4, true)],
        vec![(3, false), (11, true), (7, false), (17, true)],
        vec![(12, false), (13, true), (11, false), (10, true)],
    ];
    let map = CombMap::from_face_walks(9, &edges, &walks)
        .unwrap()
        .with_labels(
            &["A1", "A2", "A3", "A4", "l1", "l2", "l3", "l4", "l5"],
            &[
                "b", "a^-1", "1", "1", "1", "1", "1", "1", "1", "1", "a", "b^-1", "b", "a^-1",
                "1", "1", "a^-1", "b",
            ],
        );
    let mut colors = vec![Color::Black; 4];
    colors.extend(std::iter::repeat(Color::White).take(5));
    QuadTiling::new(map, colors).unwrap()
}

/// Torus embedding of K4,4 behind the Möbius theorem as a tiling, with
/// its symbolic connection labels. The underlying graph is the diagonal
/// grid on a 4×4 torus glued by straight translations.
fn k44_mobius_tiling() -> QuadTiling {
    k44_tiling(
        [
            (0, 6),
            (6, 2),
            (2, 4),
            (4, 0),
            (0, 5),
            (5, 2),
            (2, 7),
            (7, 0),
            (1, 7),
            (7, 3),
            (3, 5),
            (5, 1),
            (1, 4),
            (4, 3),
            (3, 6),
            (6, 1),
        ],
        [
            vec![(8, true), (7, true), (4, true), (11, true)],
            vec![(0, true), (15, true), (12, true), (3, true)],
        ],
        [
            "1", "1", "a", "1", "1", "a", "b", "b", "1", "a^-1", "b^-1", "b^-1", "1", "1",
            "a^-1", "1",
        ],
    )
}

/// The other torus embedding of K4,4, behind the permutation theorem:
/// the same diagonal grid, but the top and bottom boundaries are glued
/// with a half-period shift, which rearranges the two faces meeting them.
fn k44_perm_tiling() -> QuadTiling {
    k44_tiling(
        [
            (1, 6),
            (6, 2),
            (2, 4),
            (4, 0),
            (0, 5),
            (5, 2),
            (2, 7),
            (7, 1),
            (0, 7),
            (7, 3),
            (3, 5),
            (5, 1),
            (1, 4),
            (4, 3),
            (3, 6),
            (6, 0),
        ],
        [
            vec![(8, true), (7, true), (12, true), (3, true)],
            vec![(0, true), (15, true), (4, true), (11, true)],
        ],
        [
            "b^-1", "1", "1", "1", "a", "a", "b", "1", "1", "a^-1", "b^-1", "b^-1", "1", "1",
            "1", "a",
        ],
    )
}

/// Face structure shared by the two K4,4 torus embeddings; the two faces
/// meeting the glued boundary depend on the gluing and come in as
/// `boundary_walks`.
fn k44_tiling(
    edges: [(usize, usize); 16],
    boundary_walks: [Vec<(usize, bool)>; 2],
    labels: [&str; 16],
) -> QuadTiling {
    let mut walks = vec![
        vec![(7, false), (6, false), (1, false), (0, false)],
        vec![(5, false), (4, false), (3, false), (2, false)],
        vec![(15, false), (14, false), (9, false), (8, false)],
        vec![(13, false), (12, false), (11, false), (10, false)],
        vec![(9, true), (10, true), (5, true), (6, true)],
        vec![(2, true), (13, true), (14, true), (1, true)],
    ];
    walks.extend(boundary_walks);
    let map = CombMap::from_face_walks(8, &edges, &walks)
        .unwrap()
        .with_labels(&["A1", "A2", "A3", "A4", "l1", "l2", "l3", "l4"], &labels);
    let mut colors = vec![Color::Black; 4];
    colors.extend(std::iter::repeat(Color::White).take(4));
    QuadTiling::new(map, colors).unwrap()
}

/// The non-simple torus tiling whose tiles are all equivalent: a 2×2
/// grid quadrangulation with doubled edges after gluing.
fn nonsimple_torus_tiling() -> QuadTiling {
    let edges = [
        (0, 1),
        (1, 0),
        (2, 3),
        (3, 2),
        (0, 2),
        (2, 0),
        (1, 3),
        (3, 1),
    ];
    let walks = vec![
        vec![(0, true), (6, true), (2, false), (4, false)],
        vec![(1, true), (4, true), (3, false), (6, false)],
        vec![(2, true), (7, true), (0, false), (5, false)],
        vec![(3, true), (5, true), (1, false), (7, false)],
    ];
    let map = CombMap::from_face_walks(4, &edges, &walks)
        .unwrap()
        .with_labels(
            &["P00", "P10", "P01", "P11"],
            &["h00", "h10", "h01", "h11", "e'", "e", "v10", "v11"],
        );
    let colors = vec![Color::Black, Color::White, Color::White, Color::Black];
    QuadTiling::new(map, colors).unwrap()
}

/// The one-vertex square torus: one vertex, edges a and b, a single face
/// with boundary word a b a⁻¹ b⁻¹. Not a polygonal subdivision, but the
/// smallest positive-genus test map.
pub fn square_torus() -> CombMap {
    let reversal = vec![1, 0, 3, 2];
    let rotation = vec![2, 3, 1, 0];
    build_map(reversal, rotation).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(m: &CombMap) -> (usize, usize, usize, usize) {
        (m.n_vertices(), m.n_edges(), m.n_faces(), m.genus())
    }

    fn catalog_tiling(name: &str) -> QuadTiling {
        match catalog(name, None).unwrap() {
            CatalogMap::Tiling(t) => t,
            _ => panic!("{name} is not a tiling"),
        }
    }

    fn catalog_subdivision(name: &str) -> PolygonalSubdivision {
        match catalog(name, None).unwrap() {
            CatalogMap::Subdivision(s) => s,
            _ => panic!("{name} is not a subdivision"),
        }
    }

    #[test]
    fn catalog_counts_and_genus() {
        let expect = [
            ("tetrahedron", (4, 6, 4, 0)),
            ("square_pyramid", (5, 8, 5, 0)),
            ("octahedron", (6, 12, 8, 0)),
            ("pappus_torus_triangulation", (3, 9, 6, 1)),
            ("moebius_torus_quad", (4, 8, 4, 1)),
            ("cube_tiling", (8, 12, 6, 0)),
            ("pappus_tiling", (9, 18, 9, 1)),
            ("pappus2_tiling", (9, 18, 9, 1)),
            ("k44_mobius_tiling", (8, 16, 8, 1)),
            ("k44_perm_tiling", (8, 16, 8, 1)),
            ("nonsimple_torus_tiling", (4, 8, 4, 1)),
        ];
        for (name, want) in expect {
            let entry = catalog(name, None).unwrap();
            assert_eq!(counts(entry.map()), want, "{name}");
        }
        let g2 = catalog("genus_g_pappus", Some(2)).unwrap();
        assert_eq!(counts(g2.map()), (3, 15, 10, 2));
        let g1 = catalog("genus_g_pappus", Some(1)).unwrap();
        assert_eq!(
            counts(g1.map()),
            counts(catalog("pappus_torus_triangulation", None).unwrap().map())
        );
    }

    #[test]
    fn catalog_rejects_unknown_names_and_missing_genus() {
        assert!(matches!(
            catalog("icosahedron", None),
            Err(MapError::UnknownCatalog(_))
        ));
        assert!(matches!(
            catalog("genus_g_pappus", None),
            Err(MapError::GenusRequired(_))
        ));
        assert!(matches!(
            catalog("genus_g_pappus", Some(0)),
            Err(MapError::GenusRequired(_))
        ));
    }

    #[test]
    fn face_orbits_cover_darts_once() {
        for name in CATALOG_NAMES {
            let genus = (name == "genus_g_pappus").then_some(2);
            let m = catalog(name, genus).unwrap().map().clone();
            let mut seen = vec![false; m.n_darts()];
            for f in 0..m.n_faces() {
                for &d in m.face(f) {
                    assert!(!seen[d]);
                    seen[d] = true;
                }
            }
            assert!(seen.iter().all(|&s| s));
            for d in 0..m.n_darts() {
                assert_eq!(m.reversal(m.reversal(d)), d);
                assert_ne!(m.reversal(d), d);
                assert_eq!(m.head(d), m.tail(m.reversal(d)));
            }
        }
    }

    #[test]
    fn square_torus_is_a_one_vertex_torus() {
        let m = square_torus();
        assert_eq!(counts(&m), (1, 2, 1, 1));
        assert_eq!(m.face(0).len(), 4);
    }

    #[test]
    fn build_map_rejects_bad_input() {
        assert!(matches!(
            build_map(vec![0, 1], vec![1, 0]),
            Err(MapError::BadReversal)
        ));
        assert!(matches!(
            build_map(vec![1, 0], vec![0, 0]),
            Err(MapError::BadRotation)
        ));
        // two disjoint loops: disconnected
        assert!(matches!(
            build_map(vec![1, 0, 3, 2], vec![0, 1, 2, 3]),
            Err(MapError::Disconnected)
        ));
    }

    #[test]
    fn simplicity_flags() {
        assert!(catalog_tiling("k44_mobius_tiling").is_simple());
        assert!(!catalog_tiling("nonsimple_torus_tiling").is_simple());
        assert!(catalog_tiling("cube_tiling").is_simple());
        assert!(catalog_tiling("pappus2_tiling").is_simple());
    }

    #[test]
    fn tetrahedron_tiling_is_the_cube() {
        let sub = catalog_subdivision("tetrahedron");
        let (tiling, corr) = tiling_of(&sub);
        assert_eq!(counts(tiling.map()), (8, 12, 6, 0));
        assert!(tiling.is_simple());
        for v in 0..8 {
            assert_eq!(tiling.map().vertex_degree(v), 3);
        }
        let cube = catalog_tiling("cube_tiling");
        assert!(tiling
            .map()
            .is_isomorphic_to(cube.map(), Some((tiling.colors(), cube.colors()))));
        assert_eq!(corr.tile_of_edge.len(), 6);
    }

    #[test]
    fn pappus_tiling_matches_its_triangulation() {
        let t = catalog_tiling("pappus_tiling");
        assert!(t.is_simple());
        assert_eq!(t.max_white_degree(), 3);
        assert_eq!(t.black_vertices(), vec![0, 1, 2]);
        for &b in &t.black_vertices() {
            assert_eq!(t.map().vertex_degree(b), 6);
        }
    }

    #[test]
    fn tiling_subdivision_round_trips() {
        for name in ["tetrahedron", "square_pyramid", "moebius_torus_quad"] {
            let sub = catalog_subdivision(name);
            let (tiling, _) = tiling_of(&sub);
            let (back, _) = subdivision_of(&tiling).unwrap();
            assert!(back.map().is_isomorphic_to(sub.map(), None), "{name}");
        }
        // the other direction, on a tiling not produced by tiling_of
        let t = catalog_tiling("k44_mobius_tiling");
        let (sub, _) = subdivision_of(&t).unwrap();
        assert!(sub
            .map()
            .is_isomorphic_to(catalog_subdivision("moebius_torus_quad").map(), None));
        let (round, _) = tiling_of(&sub);
        assert!(round
            .map()
            .is_isomorphic_to(t.map(), Some((round.colors(), t.colors()))));
    }

    #[test]
    fn subdivision_of_rejects_nonsimple() {
        let t = catalog_tiling("nonsimple_torus_tiling");
        assert!(matches!(subdivision_of(&t), Err(MapError::NotSimple)));
    }

    #[test]
    fn tree_cotree_partitions() {
        let cases: Vec<(CombMap, usize)> = vec![
            (catalog("tetrahedron", None).unwrap().map().clone(), 0),
            (square_torus(), 2),
            (catalog("k44_mobius_tiling", None).unwrap().map().clone(), 2),
            (catalog("genus_g_pappus", Some(2)).unwrap().map().clone(), 4),
        ];
        for (m, leftover) in cases {
            for f0 in 0..m.n_faces() {
                let tc = tree_cotree(&m, f0).unwrap();
                assert_eq!(tc.tree_edges.len(), m.n_vertices() - 1);
                assert_eq!(tc.cotree_edges.len(), m.n_faces() - 1);
                assert_eq!(tc.leftover_edges.len(), leftover);
                let mut all: Vec<usize> = tc
                    .tree_edges
                    .iter()
                    .chain(&tc.cotree_edges)
                    .chain(&tc.leftover_edges)
                    .copied()
                    .collect();
                all.sort_unstable();
                all.dedup();
                assert_eq!(all.len(), m.n_edges());
                assert_eq!(*tc.face_order.last().unwrap(), f0);
            }
        }
    }

    #[test]
    fn map_json_round_trip() {
        let m = catalog("pappus_torus_triangulation", None)
            .unwrap()
            .map()
            .clone();
        let j = m.to_json();
        let back = CombMap::from_json(&j).unwrap();
        assert_eq!(counts(&back), counts(&m));
        assert!(back.is_isomorphic_to(&m, None));
    }
}
