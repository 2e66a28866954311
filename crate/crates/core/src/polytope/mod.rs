//! Lattice polytopes: facet descriptions, lattice points, polar duality and
//! face lattices.
//!
//! [`LatticePolytope`] is any lattice polytope of any dimension, measured
//! inside its own affine lattice. [`Polytope`] is the full-dimensional,
//! origin-interior kind that reflexive polytopes belong to; it caches its
//! lattice points, face lattice and polar.

mod faces;
mod hull;

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub use faces::{Face, FaceId, FaceLattice};
pub use hull::Halfspace;
pub(crate) use hull::{add, dot, sub, AffineFrame};

pub type LatticeVector = Vec<i64>;

/// A lattice polytope of arbitrary dimension in `Z^n`.
///
/// Facets are stored in the local coordinates of the affine lattice spanned
/// by the polytope, so relative interiors are computed directly.
#[derive(Clone, Debug)]
pub struct LatticePolytope {
    vertices: Vec<LatticeVector>,
    frame: AffineFrame,
    local_vertices: Vec<Vec<i64>>,
    local_facets: Vec<Halfspace>,
}

impl PartialEq for LatticePolytope {
    fn eq(&self, other: &Self) -> bool {
        let mut a = self.vertices.clone();
        let mut b = other.vertices.clone();
        a.sort();
        b.sort();
        a == b
    }
}

impl LatticePolytope {
    /// Convex hull of a nonempty set of points in `Z^n`.
    pub fn from_points(points: &[LatticeVector]) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::InvalidVertices("empty point set".into()));
        };
        let n = first.len();
        if points.iter().any(|p| p.len() != n) {
            return Err(Error::InvalidVertices("points of different lengths".into()));
        }
        let frame = AffineFrame::of_points(n, points);
        let local: Vec<Vec<i64>> = points
            .iter()
            .map(|p| frame.to_local(p).expect("point lies in its own span"))
            .collect();
        let d = frame.dim();
        let (local_facets, keep) = if d == 0 {
            (Vec::new(), vec![0])
        } else {
            let f = hull::facets_full_dim(d, &local);
            let keep = hull::vertex_indices(d, &local, &f);
            (f, keep)
        };
        Ok(LatticePolytope {
            vertices: keep.iter().map(|&i| points[i].clone()).collect(),
            local_vertices: keep.iter().map(|&i| local[i].clone()).collect(),
            frame,
            local_facets,
        })
    }

    pub fn single_point(p: LatticeVector) -> Self {
        LatticePolytope::from_points(&[p]).expect("nonempty")
    }

    pub fn dim(&self) -> usize {
        self.frame.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.frame.ambient_dim()
    }

    pub fn vertices(&self) -> &[LatticeVector] {
        &self.vertices
    }

    /// Facets in the coordinates of the polytope's own affine lattice.
    pub fn local_facets(&self) -> &[Halfspace] {
        &self.local_facets
    }

    /// Coordinates of `x` in the polytope's own affine lattice, or `None`
    /// when `x` is off its affine span.
    pub fn local_coordinates(&self, x: &[i64]) -> Option<Vec<i64>> {
        self.frame.to_local(x)
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        match self.frame.to_local(x) {
            Some(y) => self.local_facets.iter().all(|h| h.slack(&y) >= 0),
            None => false,
        }
    }

    pub fn lattice_points(&self) -> Vec<LatticeVector> {
        let mut out = Vec::new();
        hull::enumerate_box(&self.local_vertices, &self.local_facets, |y| {
            out.push(self.frame.to_ambient(y))
        });
        out.sort();
        out
    }

    /// `ℓ`: number of lattice points.
    pub fn lattice_point_count(&self) -> usize {
        let mut count = 0;
        hull::enumerate_box(&self.local_vertices, &self.local_facets, |_| count += 1);
        count
    }

    /// `ℓ*`: lattice points in the relative interior. A point is its own
    /// relative interior.
    pub fn interior_point_count(&self) -> usize {
        let mut count = 0;
        hull::enumerate_box(&self.local_vertices, &self.local_facets, |y| {
            if self.local_facets.iter().all(|h| h.slack(y) > 0) {
                count += 1;
            }
        });
        count
    }
}

/// Minkowski sum: hull of all pairwise vertex sums.
pub fn minkowski_sum(a: &LatticePolytope, b: &LatticePolytope) -> Result<LatticePolytope> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(Error::LatticeMismatch {
            left: a.ambient_dim(),
            right: b.ambient_dim(),
        });
    }
    let sums: Vec<LatticeVector> = a
        .vertices()
        .iter()
        .flat_map(|v| b.vertices().iter().map(move |w| add(v, w)))
        .collect();
    LatticePolytope::from_points(&sums)
}

/// Full-dimensional lattice polytope with the origin in its interior.
#[derive(Clone, Debug)]
pub struct Polytope {
    vertices: Vec<LatticeVector>,
    facets: Vec<Halfspace>,
    points: OnceLock<Vec<LatticeVector>>,
    faces: OnceLock<FaceLattice>,
    polar: OnceLock<Result<Box<Polytope>>>,
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        let mut a = self.vertices.clone();
        let mut b = other.vertices.clone();
        a.sort();
        b.sort();
        a == b
    }
}

/// V-description to H-description.
///
/// Redundant input points are dropped; the surviving vertices keep their
/// input order.
pub fn facet_enumeration(vertices: &[LatticeVector]) -> Result<Polytope> {
    Polytope::new(vertices)
}

impl Polytope {
    pub fn new(points: &[LatticeVector]) -> Result<Self> {
        let hull = LatticePolytope::from_points(points)?;
        let n = hull.ambient_dim();
        if n == 0 || hull.dim() < n {
            return Err(Error::NotFullDimensional {
                rank: hull.dim(),
                dim: n,
            });
        }
        if let Some((i, h)) = hull
            .local_facets
            .iter()
            .enumerate()
            .find(|(_, h)| h.offset <= 0)
        {
            return Err(Error::OriginNotInterior {
                facet: i,
                offset: h.offset,
            });
        }
        let mut facets = hull.local_facets;
        facets.sort();
        Ok(Polytope {
            vertices: hull.vertices,
            facets,
            points: OnceLock::new(),
            faces: OnceLock::new(),
            polar: OnceLock::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.vertices[0].len()
    }

    pub fn vertices(&self) -> &[LatticeVector] {
        &self.vertices
    }

    /// Facet inequalities `<u, x> >= -c` with primitive inward normals `u`.
    pub fn facets(&self) -> &[Halfspace] {
        &self.facets
    }

    pub fn is_reflexive(&self) -> bool {
        self.facets.iter().all(|h| h.offset == 1)
    }

    pub(crate) fn require_reflexive(&self) -> Result<()> {
        match self.facets.iter().enumerate().find(|(_, h)| h.offset != 1) {
            Some((i, h)) => Err(Error::NotReflexive {
                facet: i,
                offset: h.offset,
            }),
            None => Ok(()),
        }
    }

    pub fn as_lattice_polytope(&self) -> LatticePolytope {
        LatticePolytope::from_points(&self.vertices).expect("valid polytope")
    }

    /// All lattice points, sorted.
    pub fn lattice_points(&self) -> &[LatticeVector] {
        self.points.get_or_init(|| {
            let mut out = Vec::new();
            hull::enumerate_box(&self.vertices, &self.facets, |x| out.push(x.to_vec()));
            out
        })
    }

    pub fn face_lattice(&self) -> &FaceLattice {
        self.faces.get_or_init(|| FaceLattice::build(self))
    }

    /// The polar polytope, whose vertex `i` is the normal of facet `i`.
    pub fn polar(&self) -> Result<&Polytope> {
        self.polar
            .get_or_init(|| {
                self.require_reflexive()?;
                let normals: Vec<LatticeVector> =
                    self.facets.iter().map(|h| h.normal.clone()).collect();
                Polytope::new(&normals).map(Box::new)
            })
            .as_ref()
            .map(|b| b.as_ref())
            .map_err(Clone::clone)
    }

    pub fn face(&self, id: FaceId) -> &Face {
        self.face_lattice().face(id)
    }

    /// The face of the polar on which `face` evaluates to `-1`.
    pub fn dual_face(&self, id: FaceId) -> Result<FaceId> {
        let polar = self.polar()?;
        let face = self.face(id);
        Ok(polar
            .face_lattice()
            .by_vertices(&face.facets)
            .expect("facets of a face span a face of the polar"))
    }

    pub fn face_polytope(&self, id: FaceId) -> LatticePolytope {
        let pts: Vec<LatticeVector> = self
            .face(id)
            .vertices
            .iter()
            .map(|&i| self.vertices[i].clone())
            .collect();
        LatticePolytope::from_points(&pts).expect("nonempty face")
    }

    /// Applies `x -> g x` to every vertex. `g` must be unimodular.
    pub fn transform(&self, g: &[Vec<i64>]) -> Result<Polytope> {
        let image: Vec<LatticeVector> = self
            .vertices
            .iter()
            .map(|v| g.iter().map(|row| dot(row, v)).collect())
            .collect();
        Polytope::new(&image)
    }
}

/// Polar polytope of a reflexive polytope.
pub fn polar(p: &Polytope) -> Result<Polytope> {
    p.polar().cloned()
}

#[cfg(test)]
mod tests;
