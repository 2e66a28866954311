use std::collections::{HashMap, HashSet};

use super::{sub, LatticeVector, Polytope};
use crate::linalg::rank_of_vectors;

/// Position of a face inside its [`FaceLattice`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceId {
    pub dim: usize,
    pub index: usize,
}

/// A proper face of a [`Polytope`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub dim: usize,
    /// Sorted indices into the polytope's vertex list.
    pub vertices: Vec<usize>,
    /// Sorted indices of the facets containing the face.
    pub facets: Vec<usize>,
    pub lattice_points: Vec<LatticeVector>,
    /// `ℓ*`, the number of lattice points in the relative interior.
    pub interior_count: usize,
}

/// Proper faces of a polytope grouped by dimension, with incidences.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    faces_by_dim: Vec<Vec<Face>>,
    /// For each face, the faces one dimension up that contain it.
    cofaces: Vec<Vec<Vec<FaceId>>>,
    by_vertices: HashMap<Vec<usize>, FaceId>,
    by_facets: HashMap<Vec<usize>, FaceId>,
    /// Lattice points in the interior of the polytope itself.
    interior_count: usize,
}

impl FaceLattice {
    pub(super) fn build(p: &Polytope) -> FaceLattice {
        let n = p.dim();
        let verts = p.vertices();
        let facets = p.facets();

        let facet_vertices: Vec<Vec<usize>> = facets
            .iter()
            .map(|h| (0..verts.len()).filter(|&v| h.slack(&verts[v]) == 0).collect())
            .collect();

        // Every face is an intersection of facets.
        let mut all: HashSet<Vec<usize>> = facet_vertices.iter().cloned().collect();
        let mut frontier: Vec<Vec<usize>> = all.iter().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for f in &frontier {
                for g in &facet_vertices {
                    let meet: Vec<usize> = f.iter().copied().filter(|v| g.contains(v)).collect();
                    if !meet.is_empty() && meet.len() < f.len() && all.insert(meet.clone()) {
                        next.push(meet);
                    }
                }
            }
            frontier = next;
        }

        let mut faces_by_dim: Vec<Vec<Face>> = vec![Vec::new(); n];
        let mut sorted: Vec<Vec<usize>> = all.into_iter().collect();
        sorted.sort();
        for vs in sorted {
            let base = &verts[vs[0]];
            let diffs: Vec<Vec<i64>> = vs[1..].iter().map(|&v| sub(&verts[v], base)).collect();
            let dim = rank_of_vectors(&diffs);
            let face_facets: Vec<usize> = (0..facets.len())
                .filter(|&f| vs.iter().all(|&v| facet_vertices[f].contains(&v)))
                .collect();
            faces_by_dim[dim].push(Face {
                dim,
                vertices: vs,
                facets: face_facets,
                lattice_points: Vec::new(),
                interior_count: 0,
            });
        }

        let mut by_vertices = HashMap::new();
        let mut by_facets = HashMap::new();
        for (dim, list) in faces_by_dim.iter().enumerate() {
            for (index, f) in list.iter().enumerate() {
                let id = FaceId { dim, index };
                by_vertices.insert(f.vertices.clone(), id);
                by_facets.insert(f.facets.clone(), id);
            }
        }

        // Distribute lattice points: each point lies in the relative interior
        // of the face cut out by the facets tight at it.
        let mut interior_count = 0;
        for x in p.lattice_points() {
            let tight: Vec<usize> = (0..facets.len())
                .filter(|&f| facets[f].slack(x) == 0)
                .collect();
            if tight.is_empty() {
                interior_count += 1;
                continue;
            }
            let carrier = by_facets[&tight];
            faces_by_dim[carrier.dim][carrier.index].interior_count += 1;
            for list in faces_by_dim.iter_mut() {
                for f in list.iter_mut() {
                    if f.facets.iter().all(|g| tight.contains(g)) {
                        f.lattice_points.push(x.clone());
                    }
                }
            }
        }

        let mut cofaces: Vec<Vec<Vec<FaceId>>> = faces_by_dim
            .iter()
            .map(|list| vec![Vec::new(); list.len()])
            .collect();
        for dim in 0..n.saturating_sub(1) {
            for (i, f) in faces_by_dim[dim].iter().enumerate() {
                for (j, g) in faces_by_dim[dim + 1].iter().enumerate() {
                    if f.vertices.iter().all(|v| g.vertices.binary_search(v).is_ok()) {
                        cofaces[dim][i].push(FaceId {
                            dim: dim + 1,
                            index: j,
                        });
                    }
                }
            }
        }

        FaceLattice {
            faces_by_dim,
            cofaces,
            by_vertices,
            by_facets,
            interior_count,
        }
    }

    /// Faces of dimension `dim` (0 for vertices up to `n - 1` for facets).
    pub fn faces(&self, dim: usize) -> &[Face] {
        self.faces_by_dim.get(dim).map_or(&[], Vec::as_slice)
    }

    pub fn ids(&self, dim: usize) -> impl Iterator<Item = FaceId> + '_ {
        (0..self.faces(dim).len()).map(move |index| FaceId { dim, index })
    }

    pub fn face(&self, id: FaceId) -> &Face {
        &self.faces_by_dim[id.dim][id.index]
    }

    pub fn count(&self, dim: usize) -> usize {
        self.faces(dim).len()
    }

    /// Face counts `f_0, ..., f_{n-1}`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_dim.iter().map(Vec::len).collect()
    }

    /// Faces of dimension `id.dim + 1` containing `id`.
    pub fn cofaces(&self, id: FaceId) -> &[FaceId] {
        &self.cofaces[id.dim][id.index]
    }

    /// Is `a` a face of `b`?
    pub fn is_face_of(&self, a: FaceId, b: FaceId) -> bool {
        let fb = &self.face(b).vertices;
        self.face(a).vertices.iter().all(|v| fb.binary_search(v).is_ok())
    }

    pub fn by_vertices(&self, vertices: &[usize]) -> Option<FaceId> {
        self.by_vertices.get(vertices).copied()
    }

    pub fn by_facets(&self, facets: &[usize]) -> Option<FaceId> {
        self.by_facets.get(facets).copied()
    }

    /// Number of lattice points in the interior of the polytope.
    pub fn interior_count(&self) -> usize {
        self.interior_count
    }

    pub fn dim(&self) -> usize {
        self.faces_by_dim.len()
    }
}
