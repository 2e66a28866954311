//! NEF partitions of the vertex set of a reflexive polytope.
//!
//! A partition `V = V_1 ⊔ ... ⊔ V_k` is NEF when each piecewise-linear
//! function `φ_i` (linear on the cone over every facet, `-1` on `V_i` and `0`
//! on the other vertices) is integral and concave. The linear pieces
//! `m_{i,f}` span the polytopes `∇_i°`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{determinant, rank_of_vectors, IntMatrix};
use crate::polytope::{dot, FaceId, LatticePolytope, LatticeVector, Polytope};

#[derive(Clone, Debug)]
pub struct NefPartition {
    parts: Vec<Vec<usize>>,
    vertex_part: Vec<usize>,
    /// `m_table[i][f]` is the linear form of `φ_i` on the cone over facet `f`.
    m_table: Vec<Vec<LatticeVector>>,
    nablas: Vec<LatticePolytope>,
    ample: Vec<bool>,
}

impl NefPartition {
    /// Number of parts `k`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    /// Part containing vertex `v`.
    pub fn part_of_vertex(&self, v: usize) -> usize {
        self.vertex_part[v]
    }

    pub fn m(&self, part: usize, facet: usize) -> &LatticeVector {
        &self.m_table[part][facet]
    }

    pub fn m_table(&self, part: usize) -> &[LatticeVector] {
        &self.m_table[part]
    }

    /// `∇_i°`, the hull of the linear pieces of `φ_i`.
    pub fn nabla(&self, part: usize) -> &LatticePolytope {
        &self.nablas[part]
    }

    pub fn all_ample(&self) -> bool {
        self.ample.iter().all(|&a| a)
    }

    /// `φ_i(x) = min_f <m_{i,f}, x>`.
    pub fn support_value(&self, part: usize, x: &[i64]) -> i64 {
        self.m_table[part]
            .iter()
            .map(|m| dot(m, x))
            .min()
            .expect("polytope has facets")
    }

    fn check_part(&self, part: usize) -> Result<()> {
        if part < self.parts.len() {
            Ok(())
        } else {
            Err(Error::InvalidPart {
                part,
                parts: self.parts.len(),
            })
        }
    }
}

/// The single-part partition, reproducing the anticanonical hypersurface.
pub fn trivial_partition(p: &Polytope) -> Result<NefPartition> {
    validate_nef_partition(p, &[(0..p.vertices().len()).collect()])
}

/// Checks the NEF conditions and builds the support data.
///
/// Errors name the violated condition: (1) linearity on facet cones,
/// (2) the partition itself, (3) concavity, (4) integrality.
pub fn validate_nef_partition(p: &Polytope, parts: &[Vec<usize>]) -> Result<NefPartition> {
    p.require_reflexive()?;
    let nv = p.vertices().len();
    if parts.is_empty() {
        return Err(Error::NotAPartition("no parts given".into()));
    }
    let mut vertex_part = vec![usize::MAX; nv];
    for (i, part) in parts.iter().enumerate() {
        if part.is_empty() {
            return Err(Error::NotAPartition(format!("part {i} is empty")));
        }
        for &v in part {
            if v >= nv {
                return Err(Error::NotAPartition(format!(
                    "vertex index {v} out of range (polytope has {nv} vertices)"
                )));
            }
            if vertex_part[v] != usize::MAX {
                return Err(Error::NotAPartition(format!("vertex {v} appears twice")));
            }
            vertex_part[v] = i;
        }
    }
    if let Some(v) = vertex_part.iter().position(|&i| i == usize::MAX) {
        return Err(Error::NotAPartition(format!("vertex {v} is in no part")));
    }

    let verts = p.vertices();
    let facet_vertices: Vec<Vec<usize>> = p
        .facets()
        .iter()
        .map(|h| (0..nv).filter(|&v| h.slack(&verts[v]) == 0).collect())
        .collect();

    let k = parts.len();
    let mut m_table = vec![Vec::with_capacity(facet_vertices.len()); k];
    for (f, fv) in facet_vertices.iter().enumerate() {
        let basis = independent_subset(fv, verts);
        for (i, row) in m_table.iter_mut().enumerate() {
            let value = |v: usize| if vertex_part[v] == i { -1 } else { 0 };
            row.push(solve_facet_form(verts, fv, &basis, value, i, f)?);
        }
    }

    // Concavity: every linear piece bounds φ_i from above at every vertex.
    for (i, row) in m_table.iter().enumerate() {
        for (v, x) in verts.iter().enumerate() {
            let target = if vertex_part[v] == i { -1 } else { 0 };
            if let Some(other) = row.iter().position(|m| dot(m, x) < target) {
                let facet = facet_vertices
                    .iter()
                    .position(|fv| fv.contains(&v))
                    .expect("every vertex lies on a facet");
                return Err(Error::NotConcave {
                    part: i,
                    facet,
                    other,
                });
            }
        }
    }

    let nablas: Vec<LatticePolytope> = m_table
        .iter()
        .map(|row| LatticePolytope::from_points(row).expect("nonempty"))
        .collect();
    let ample = (0..k)
        .map(|i| combinatorially_dual(p, &facet_vertices, &m_table[i], &nablas[i]))
        .collect();

    Ok(NefPartition {
        parts: parts.iter().map(|q| {
            let mut q = q.clone();
            q.sort_unstable();
            q
        }).collect(),
        vertex_part,
        m_table,
        nablas,
        ample,
    })
}

/// Greedily picks linearly independent vertices of a facet; a facet of a
/// polytope with the origin inside always yields `n` of them.
fn independent_subset(facet: &[usize], verts: &[LatticeVector]) -> Vec<usize> {
    let n = verts[0].len();
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    let mut rows: Vec<LatticeVector> = Vec::with_capacity(n);
    for &v in facet {
        rows.push(verts[v].clone());
        if rank_of_vectors(&rows) == rows.len() {
            chosen.push(v);
            if chosen.len() == n {
                break;
            }
        } else {
            rows.pop();
        }
    }
    chosen
}

/// Solves `<m, v> = value(v)` on the chosen basis by Cramer's rule, then
/// checks the remaining facet vertices and integrality.
fn solve_facet_form(
    verts: &[LatticeVector],
    facet: &[usize],
    basis: &[usize],
    value: impl Fn(usize) -> i64,
    part: usize,
    f: usize,
) -> Result<LatticeVector> {
    let n = verts[0].len();
    let rows: Vec<LatticeVector> = basis.iter().map(|&v| verts[v].clone()).collect();
    let a = IntMatrix::from_rows(n, &rows);
    let det = determinant(&a);
    let rhs: Vec<i64> = basis.iter().map(|&v| value(v)).collect();
    let numerators: Vec<BigInt> = (0..n)
        .map(|j| {
            let mut aj = a.clone();
            for (i, r) in rhs.iter().enumerate() {
                aj[(i, j)] = BigInt::from(*r);
            }
            determinant(&aj)
        })
        .collect();

    for &v in facet {
        let lhs: BigInt = numerators
            .iter()
            .zip(&verts[v])
            .map(|(c, x)| c * BigInt::from(*x))
            .sum();
        if lhs != &det * BigInt::from(value(v)) {
            return Err(Error::NotLinearOnCone { part, facet: f });
        }
    }
    numerators
        .iter()
        .map(|c| {
            let (q, r) = c.div_rem(&det);
            if r.is_zero() {
                Ok(i64::try_from(&q).expect("support form fits i64"))
            } else {
                Err(Error::NonIntegralSupport { part, facet: f })
            }
        })
        .collect()
}

/// `∇` is combinatorially dual to the polytope via `f -> m_f`: the forms are
/// distinct vertices of a full-dimensional `∇`, and the forms of the facets
/// through each vertex of the polytope are exactly the vertices of one facet
/// of `∇`.
fn combinatorially_dual(
    p: &Polytope,
    facet_vertices: &[Vec<usize>],
    forms: &[LatticeVector],
    nabla: &LatticePolytope,
) -> bool {
    let n = p.dim();
    if nabla.dim() != n || nabla.vertices().len() != forms.len() {
        return false;
    }
    // The identity frame is used for full-dimensional hulls, so local facets
    // are ambient.
    let nabla_facets = nabla.local_facets();
    if nabla_facets.len() != p.vertices().len() {
        return false;
    }
    let mut facet_sets: Vec<Vec<usize>> = nabla_facets
        .iter()
        .map(|h| (0..forms.len()).filter(|&f| h.slack(&forms[f]) == 0).collect())
        .collect();
    facet_sets.sort();
    let mut vertex_stars: Vec<Vec<usize>> = (0..p.vertices().len())
        .map(|v| (0..facet_vertices.len()).filter(|&f| facet_vertices[f].contains(&v)).collect())
        .collect();
    vertex_stars.sort();
    facet_sets == vertex_stars
}

/// Whether `D_i` is ample, i.e. `φ_i` is strictly convex on the boundary.
pub fn is_ample(np: &NefPartition, part: usize) -> Result<bool> {
    np.check_part(part)?;
    Ok(np.ample[part])
}

/// The part `i(γ)` containing every vertex of a face with interior lattice
/// points.
pub fn part_index(np: &NefPartition, p: &Polytope, face: FaceId) -> Result<usize> {
    let f = p.face(face);
    if f.interior_count == 0 {
        return Err(Error::NoInteriorPoint);
    }
    let i = np.vertex_part[f.vertices[0]];
    if f.vertices.iter().all(|&v| np.vertex_part[v] == i) {
        Ok(i)
    } else {
        Err(Error::MixedVertices)
    }
}

/// `γ_i^∨`: the face of `∇_i°` evaluating to `-1` on `γ` when `i = i(γ)`
/// and to `0` otherwise.
pub fn nef_dual_face(
    np: &NefPartition,
    p: &Polytope,
    face: FaceId,
    part: usize,
) -> Result<LatticePolytope> {
    np.check_part(part)?;
    part_index(np, p, face)?;
    Ok(support_face(np, p, face, part))
}

/// Face of `∇_i°` on which `<., x>` is minimal for `x` in the relative
/// interior of `face`. Agrees with [`nef_dual_face`] whenever that is
/// defined, and makes sense for every face.
pub(crate) fn support_face(np: &NefPartition, p: &Polytope, face: FaceId, part: usize) -> LatticePolytope {
    let verts = p.vertices();
    let n = p.dim();
    let mut x = vec![0i64; n];
    for &v in &p.face(face).vertices {
        for (xi, vi) in x.iter_mut().zip(&verts[v]) {
            *xi += vi;
        }
    }
    let min = np.support_value(part, &x);
    let mut pts: Vec<LatticeVector> = np.m_table[part]
        .iter()
        .filter(|m| dot(m, &x) == min)
        .cloned()
        .collect();
    pts.sort();
    pts.dedup();
    LatticePolytope::from_points(&pts).expect("nonempty")
}
