//! Maximal triangulations of lattice polygons, their dual cell complexes and
//! shellings, and the Betti numbers of the exceptional surface over a
//! two-face.

use std::collections::{BTreeMap, HashSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::polytope::{FaceId, LatticePolytope, Polytope};

pub type Point2 = [i64; 2];

fn orient(a: Point2, b: Point2, c: Point2) -> i64 {
    (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
}

fn edge_key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// A triangulation of a lattice polygon using every lattice point as a
/// vertex. Triangles are stored counterclockwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation2D {
    points: Vec<Point2>,
    triangles: Vec<[usize; 3]>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub ends: (usize, usize),
    pub interior: bool,
}

impl Triangulation2D {
    /// Triangulates the lattice polygon spanned by `points`.
    ///
    /// Points are inserted in lexicographic order; each new point is joined
    /// to the hull edges it sees. Hull points are kept on the hull cycle,
    /// so every triangle is empty and hence unimodular.
    pub fn from_lattice_points(points: &[Point2]) -> Result<Self> {
        let mut pts = points.to_vec();
        pts.sort_unstable();
        pts.dedup();
        if pts.len() < 3 {
            return Err(Error::WrongDimension {
                expected: "a lattice polygon".into(),
                found: pts.len().saturating_sub(1),
            });
        }
        let mut chain = 2;
        while chain < pts.len() && orient(pts[0], pts[1], pts[chain]) == 0 {
            chain += 1;
        }
        if chain == pts.len() {
            return Err(Error::WrongDimension {
                expected: "a lattice polygon".into(),
                found: 1,
            });
        }
        let apex = chain;
        let mut hull: Vec<usize> = (0..chain).collect();
        if orient(pts[0], pts[chain - 1], pts[apex]) < 0 {
            hull.reverse();
        }
        let mut triangles: Vec<[usize; 3]> = hull.windows(2).map(|w| [w[0], w[1], apex]).collect();
        hull.push(apex);

        for q in apex + 1..pts.len() {
            let m = hull.len();
            let visible: Vec<bool> = (0..m)
                .map(|i| orient(pts[hull[i]], pts[hull[(i + 1) % m]], pts[q]) < 0)
                .collect();
            // Visible edges form one cyclic run; find where it starts.
            let start = (0..m)
                .find(|&i| visible[i] && !visible[(i + m - 1) % m])
                .expect("new point lies outside the hull");
            let mut len = 0;
            while visible[(start + len) % m] {
                let (a, b) = (hull[(start + len) % m], hull[(start + len + 1) % m]);
                triangles.push([b, a, q]);
                len += 1;
            }
            // Drop the hull points strictly inside the visible run.
            let mut next = Vec::with_capacity(m - len + 2);
            for j in 0..=m - len {
                next.push(hull[(start + len + j) % m]);
            }
            next.push(q);
            hull = next;
        }
        Ok(Triangulation2D {
            points: pts,
            triangles,
        })
    }

    pub fn points(&self) -> &[Point2] {
        &self.points
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    /// Every edge with its interior flag, sorted by endpoints.
    pub fn edges(&self) -> Vec<Edge> {
        self.edge_triangles()
            .into_iter()
            .map(|(ends, ts)| Edge {
                ends,
                interior: ts.len() == 2,
            })
            .collect()
    }

    fn edge_triangles(&self) -> BTreeMap<(usize, usize), Vec<usize>> {
        let mut map: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (t, tri) in self.triangles.iter().enumerate() {
            for i in 0..3 {
                map.entry(edge_key(tri[i], tri[(i + 1) % 3])).or_default().push(t);
            }
        }
        map
    }

    /// Points on the boundary of the polygon.
    pub fn boundary_points(&self) -> Vec<bool> {
        let mut on = vec![false; self.points.len()];
        for e in self.edges().iter().filter(|e| !e.interior) {
            on[e.ends.0] = true;
            on[e.ends.1] = true;
        }
        on
    }

    /// `ℓ*`, the number of interior lattice points.
    pub fn interior_point_count(&self) -> usize {
        self.boundary_points().iter().filter(|&&b| !b).count()
    }

    /// Boundary points that are corners of the polygon, and those in the
    /// relative interior of its edges.
    pub fn boundary_census(&self) -> (usize, usize) {
        let mut next = vec![usize::MAX; self.points.len()];
        let mut prev = vec![usize::MAX; self.points.len()];
        let et = self.edge_triangles();
        for tri in &self.triangles {
            for i in 0..3 {
                let (a, b) = (tri[i], tri[(i + 1) % 3]);
                if et[&edge_key(a, b)].len() == 1 {
                    next[a] = b;
                    prev[b] = a;
                }
            }
        }
        let mut corners = 0;
        let mut edge_points = 0;
        for v in 0..self.points.len() {
            if next[v] == usize::MAX {
                continue;
            }
            if orient(self.points[prev[v]], self.points[v], self.points[next[v]]) == 0 {
                edge_points += 1;
            } else {
                corners += 1;
            }
        }
        (corners, edge_points)
    }

    /// Twice the area of a triangle.
    pub fn doubled_area(&self, t: usize) -> i64 {
        let [a, b, c] = self.triangles[t];
        orient(self.points[a], self.points[b], self.points[c])
    }

    /// Interior edges `(a, b)` whose two triangles form a strictly convex
    /// quadrilateral, in sorted order.
    pub fn flippable_edges(&self) -> Vec<(usize, usize)> {
        self.edge_triangles()
            .into_iter()
            .filter(|(_, ts)| ts.len() == 2)
            .filter(|&((a, b), ref ts)| {
                let c = self.opposite(ts[0], a, b);
                let d = self.opposite(ts[1], a, b);
                let (pa, pb, pc, pd) = (self.points[a], self.points[b], self.points[c], self.points[d]);
                orient(pc, pd, pa).signum() * orient(pc, pd, pb).signum() < 0
            })
            .map(|(e, _)| e)
            .collect()
    }

    fn opposite(&self, t: usize, a: usize, b: usize) -> usize {
        *self.triangles[t]
            .iter()
            .find(|&&v| v != a && v != b)
            .expect("triangle has three vertices")
    }

    /// Replaces the diagonal `(a, b)` of a convex quadrilateral by the other
    /// diagonal.
    pub fn flip(&mut self, a: usize, b: usize) -> bool {
        if !self.flippable_edges().contains(&edge_key(a, b)) {
            return false;
        }
        let ts = &self.edge_triangles()[&edge_key(a, b)];
        let (t0, t1) = (ts[0], ts[1]);
        let c = self.opposite(t0, a, b);
        let d = self.opposite(t1, a, b);
        for (t, [x, y, z]) in [(t0, [a, d, c]), (t1, [b, c, d])] {
            let tri = if orient(self.points[x], self.points[y], self.points[z]) > 0 {
                [x, y, z]
            } else {
                [x, z, y]
            };
            self.triangles[t] = tri;
        }
        true
    }
}

/// Maximal triangulation of a two-face, in the coordinates of the face's own
/// affine lattice.
pub fn maximal_triangulation(p: &Polytope, f: FaceId) -> Result<Triangulation2D> {
    if f.dim != 2 || f.index >= p.face_lattice().count(2) {
        return Err(Error::BadFaceIndex {
            index: f.index,
            count: p.face_lattice().count(2),
        });
    }
    let face: LatticePolytope = p.face_polytope(f);
    let pts: Vec<Point2> = face
        .lattice_points()
        .iter()
        .map(|x| {
            let y = face.local_coordinates(x).expect("point of the face");
            [y[0], y[1]]
        })
        .collect();
    Triangulation2D::from_lattice_points(&pts)
}

/// One diagonal flip at an edge chosen by `seed`; unchanged when nothing is
/// flippable.
pub fn random_flip(t: &Triangulation2D, seed: u64) -> Triangulation2D {
    random_flips(t, 1, seed)
}

/// `count` successive random flips driven by a single seeded generator.
pub fn random_flips(t: &Triangulation2D, count: usize, seed: u64) -> Triangulation2D {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = t.clone();
    for _ in 0..count {
        let candidates = out.flippable_edges();
        match candidates.choose(&mut rng) {
            Some(&(a, b)) => {
                out.flip(a, b);
            }
            None => break,
        }
    }
    out
}

/// A connected component of `Σ_2`, the closure of the two-cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellComponent {
    pub two_cells: usize,
    pub one_cells: usize,
    pub zero_cells: usize,
}

impl CellComponent {
    pub fn euler_characteristic(&self) -> i64 {
        self.two_cells as i64 - self.one_cells as i64 + self.zero_cells as i64
    }
}

/// A connected component of `Σ_1` as a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphComponent {
    pub vertices: usize,
    pub edges: usize,
}

impl GraphComponent {
    pub fn is_tree(&self) -> bool {
        self.edges + 1 == self.vertices
    }
}

/// The cell complex dual to a triangulation, restricted to the open face:
/// a two-cell per interior point, a one-cell per interior edge and a
/// zero-cell per triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualComplex {
    pub zero_cells: usize,
    pub one_cells: usize,
    pub two_cells: usize,
    pub sigma2: Vec<CellComponent>,
    pub sigma1: Vec<GraphComponent>,
    pub max_valence: usize,
}

impl DualComplex {
    pub fn sigma2_contractible(&self) -> bool {
        self.sigma2.iter().all(|c| c.euler_characteristic() == 1)
    }

    pub fn sigma1_forest(&self) -> bool {
        self.sigma1.iter().all(GraphComponent::is_tree)
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let up = parent[y];
        parent[y] = r;
        y = up;
    }
    r
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

/// Zero-, one- and two-cells of one component of `Σ_2`.
type CellSets = (HashSet<usize>, HashSet<(usize, usize)>, HashSet<usize>);

pub fn dual_complex(t: &Triangulation2D) -> DualComplex {
    let boundary = t.boundary_points();
    let et = t.edge_triangles();
    let interior_edges: Vec<((usize, usize), &Vec<usize>)> =
        et.iter().filter(|(_, ts)| ts.len() == 2).map(|(e, ts)| (*e, ts)).collect();

    // Σ_2: interior points are glued when their dual cells share a cell,
    // i.e. when they lie on a common triangle.
    let np = t.points.len();
    let mut parent: Vec<usize> = (0..np).collect();
    for tri in &t.triangles {
        let inner: Vec<usize> = tri.iter().copied().filter(|&v| !boundary[v]).collect();
        for w in inner.windows(2) {
            union(&mut parent, w[0], w[1]);
        }
    }
    let mut sigma2: BTreeMap<usize, CellSets> = BTreeMap::new();
    for v in (0..np).filter(|&v| !boundary[v]) {
        let r = find(&mut parent, v);
        sigma2.entry(r).or_default().0.insert(v);
    }
    for &(e, ts) in &interior_edges {
        for v in [e.0, e.1] {
            if !boundary[v] {
                let r = find(&mut parent, v);
                let entry = sigma2.get_mut(&r).expect("component exists");
                entry.1.insert(e);
                entry.2.extend(ts.iter().copied());
            }
        }
    }
    let sigma2 = sigma2
        .into_values()
        .map(|(two, one, zero)| CellComponent {
            two_cells: two.len(),
            one_cells: one.len(),
            zero_cells: zero.len(),
        })
        .collect();

    // Σ_1: dual edges of interior edges with both ends on the boundary.
    let nt = t.triangles.len();
    let mut parent: Vec<usize> = (0..nt).collect();
    let mut used = vec![false; nt];
    let sigma1_edges: Vec<&Vec<usize>> = interior_edges
        .iter()
        .filter(|(e, _)| boundary[e.0] && boundary[e.1])
        .map(|&(_, ts)| ts)
        .collect();
    for ts in &sigma1_edges {
        union(&mut parent, ts[0], ts[1]);
        used[ts[0]] = true;
        used[ts[1]] = true;
    }
    let mut sigma1: BTreeMap<usize, GraphComponent> = BTreeMap::new();
    for tri in (0..nt).filter(|&i| used[i]) {
        let r = find(&mut parent, tri);
        sigma1
            .entry(r)
            .or_insert(GraphComponent { vertices: 0, edges: 0 })
            .vertices += 1;
    }
    for ts in &sigma1_edges {
        let r = find(&mut parent, ts[0]);
        sigma1.get_mut(&r).expect("component exists").edges += 1;
    }

    let mut valence = vec![0; nt];
    for (_, ts) in &interior_edges {
        valence[ts[0]] += 1;
        valence[ts[1]] += 1;
    }

    DualComplex {
        zero_cells: nt,
        one_cells: interior_edges.len(),
        two_cells: np - boundary.iter().filter(|&&b| b).count(),
        sigma2,
        sigma1: sigma1.into_values().collect(),
        max_valence: valence.into_iter().max().unwrap_or(0),
    }
}

/// Shelling moves: remove a triangle meeting the boundary in exactly one
/// edge (A), in two free edges (B), or the last triangle (C).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveType {
    A,
    B,
    C,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShellingMove {
    pub kind: MoveType,
    pub triangle: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingTrace {
    pub moves: Vec<ShellingMove>,
}

impl ShellingTrace {
    pub fn count(&self, kind: MoveType) -> usize {
        self.moves.iter().filter(|m| m.kind == kind).count()
    }

    /// `(#A, #B, #C)`.
    pub fn counts(&self) -> (usize, usize, usize) {
        (self.count(MoveType::A), self.count(MoveType::B), self.count(MoveType::C))
    }
}

/// Reduces the triangulation to nothing by moves of types A, B and C.
///
/// Type A moves are taken whenever possible, lowest triangle first.
/// Otherwise the counterclockwise boundary is walked from its smallest
/// point until an edge is found whose opposite vertex is adjacent to it
/// along the boundary.
pub fn shelling(t: &Triangulation2D) -> Result<ShellingTrace> {
    let nt = t.triangles.len();
    let mut alive = vec![true; nt];
    let mut remaining = nt;
    let mut moves = Vec::with_capacity(nt);
    let mut et = t.edge_triangles();

    let directed = |tri: &[usize; 3]| [(tri[0], tri[1]), (tri[1], tri[2]), (tri[2], tri[0])];

    while remaining > 0 {
        let is_free = |et: &BTreeMap<(usize, usize), Vec<usize>>, a: usize, b: usize| {
            et[&edge_key(a, b)].len() == 1
        };
        let mut on_boundary = vec![false; t.points.len()];
        for (e, ts) in &et {
            if ts.len() == 1 {
                on_boundary[e.0] = true;
                on_boundary[e.1] = true;
            }
        }
        let free_count = |et: &BTreeMap<(usize, usize), Vec<usize>>, i: usize| {
            directed(&t.triangles[i]).iter().filter(|&&(a, b)| is_free(et, a, b)).count()
        };

        let chosen = if remaining == 1 {
            let i = alive.iter().position(|&a| a).expect("one triangle left");
            if free_count(&et, i) != 3 {
                return Err(Error::NotShellable("last triangle is not free".into()));
            }
            ShellingMove {
                kind: MoveType::C,
                triangle: i,
            }
        } else if let Some(i) = (0..nt).filter(|&i| alive[i]).find(|&i| {
            let tri = t.triangles[i];
            let free: Vec<(usize, usize)> =
                directed(&tri).into_iter().filter(|&(a, b)| is_free(&et, a, b)).collect();
            free.len() == 1 && {
                let (a, b) = free[0];
                let c = tri.iter().copied().find(|&v| v != a && v != b).expect("apex");
                !on_boundary[c]
            }
        }) {
            ShellingMove {
                kind: MoveType::A,
                triangle: i,
            }
        } else {
            // Counterclockwise boundary successor map.
            let mut next = vec![usize::MAX; t.points.len()];
            for i in (0..nt).filter(|&i| alive[i]) {
                for (a, b) in directed(&t.triangles[i]) {
                    if is_free(&et, a, b) {
                        next[a] = b;
                    }
                }
            }
            let start = (0..t.points.len())
                .find(|&v| next[v] != usize::MAX)
                .expect("nonempty boundary");
            let mut a = start;
            let mut found = None;
            loop {
                let b = next[a];
                let i = et[&edge_key(a, b)][0];
                let c = t.triangles[i].iter().copied().find(|&v| v != a && v != b).expect("apex");
                // Opposite vertex at boundary distance one from the edge.
                if next[b] == c || next[c] == a {
                    found = Some(i);
                    break;
                }
                a = b;
                if a == start {
                    break;
                }
            }
            let Some(i) = found else {
                return Err(Error::NotShellable(
                    "no boundary edge at distance one from its opposite vertex".into(),
                ));
            };
            match free_count(&et, i) {
                2 => ShellingMove {
                    kind: MoveType::B,
                    triangle: i,
                },
                n => {
                    return Err(Error::NotShellable(format!(
                        "support is disconnected: triangle {i} has {n} free edges"
                    )))
                }
            }
        };

        let i = chosen.triangle;
        alive[i] = false;
        remaining -= 1;
        for (a, b) in directed(&t.triangles[i]) {
            let key = edge_key(a, b);
            let ts = et.get_mut(&key).expect("edge exists");
            ts.retain(|&x| x != i);
            if ts.is_empty() {
                et.remove(&key);
            }
        }
        moves.push(chosen);
    }
    Ok(ShellingTrace { moves })
}

/// Betti numbers of the model surface over a two-face, together with the
/// shelling that realizes them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelHomology {
    /// `b_0, ..., b_4`.
    pub betti: [usize; 5],
    pub interior_points: usize,
    /// `Σ ℓ*(e)` over the edges of the face.
    pub edge_interior_points: usize,
    /// Number of vertices of the face.
    pub corners: usize,
    pub trace: ShellingTrace,
}

impl ModelHomology {
    /// Whether the move counts `(#A, #B, #C)` equal `(b_4, b_2, b_0)`.
    pub fn trace_matches(&self) -> bool {
        self.trace.counts() == (self.betti[4], self.betti[2], self.betti[0])
    }
}

/// `b_0 = 1`, odd Betti numbers vanish, `b_4 = ℓ*(f)` and
/// `b_2 = ℓ*(f) + Σ ℓ*(e) + v_f - 3`.
pub fn model_homology(t: &Triangulation2D) -> Result<ModelHomology> {
    let interior = t.interior_point_count();
    let (corners, edge_points) = t.boundary_census();
    let b2 = interior + edge_points + corners - 3;
    Ok(ModelHomology {
        betti: [1, 0, b2, 0, interior],
        interior_points: interior,
        edge_interior_points: edge_points,
        corners,
        trace: shelling(t)?,
    })
}
