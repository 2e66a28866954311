//! Counting invariants of `Y` along torus orbits: curves over edges and
//! finite point sets over two-faces.

use crate::error::{Error, Result};
use crate::nef::{support_face, NefPartition};
use crate::polytope::{minkowski_sum, FaceId, LatticePolytope, Polytope};

/// Whether `Y` is an anticanonical hypersurface in a toric 4-fold or a
/// complete intersection cut out by an ample NEF partition.
#[derive(Clone, Debug)]
pub enum GeometryConfig {
    Hypersurface,
    CompleteIntersection(NefPartition),
}

impl GeometryConfig {
    /// Builds a complete-intersection configuration, checking `n = k + 3`
    /// and ampleness of every part.
    pub fn complete_intersection(p: &Polytope, np: NefPartition) -> Result<Self> {
        let cfg = GeometryConfig::CompleteIntersection(np);
        cfg.check(p)?;
        Ok(cfg)
    }

    pub fn partition(&self) -> Option<&NefPartition> {
        match self {
            GeometryConfig::Hypersurface => None,
            GeometryConfig::CompleteIntersection(np) => Some(np),
        }
    }

    pub fn is_hypersurface(&self) -> bool {
        matches!(self, GeometryConfig::Hypersurface)
    }

    pub fn check(&self, p: &Polytope) -> Result<()> {
        p.require_reflexive()?;
        match self {
            GeometryConfig::Hypersurface => {
                if p.dim() != 4 {
                    return Err(Error::ConfigMismatch(format!(
                        "hypersurface mode needs a 4-dimensional polytope, got dimension {}",
                        p.dim()
                    )));
                }
            }
            GeometryConfig::CompleteIntersection(np) => {
                if p.dim() != np.len() + 3 {
                    return Err(Error::ConfigMismatch(format!(
                        "a complete intersection of {} divisors needs dimension {}, got {}",
                        np.len(),
                        np.len() + 3,
                        p.dim()
                    )));
                }
                if np.parts().iter().flatten().any(|&v| v >= p.vertices().len()) {
                    return Err(Error::ConfigMismatch(
                        "partition does not belong to this polytope".into(),
                    ));
                }
                if let Some(part) = (0..np.len()).find(|&i| !crate::nef::is_ample(np, i).unwrap_or(false)) {
                    return Err(Error::NotAmple { part });
                }
            }
        }
        Ok(())
    }
}

/// `B(Δ') = (-1)^dim Δ' · #(Δ' ∩ M)`.
pub fn b_functional(q: &LatticePolytope) -> i64 {
    let sign = if q.dim().is_multiple_of(2) { 1 } else { -1 };
    sign * q.lattice_point_count() as i64
}

/// `1 + Σ_{∅≠J} (-1)^|J| B(Σ_{j∈J} Δ'_j)`.
pub fn chi_affine(newton: &[LatticePolytope]) -> Result<i64> {
    let Some(first) = newton.first() else {
        return Err(Error::InvalidVertices("no Newton polytopes given".into()));
    };
    if let Some(q) = newton.iter().find(|q| q.ambient_dim() != first.ambient_dim()) {
        return Err(Error::LatticeMismatch {
            left: first.ambient_dim(),
            right: q.ambient_dim(),
        });
    }
    let mut chi = 1;
    for mask in 1u64..(1 << newton.len()) {
        let sum = subset_sum(newton, mask)?;
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        chi += sign * b_functional(&sum);
    }
    Ok(chi)
}

fn subset_sum(polys: &[LatticePolytope], mask: u64) -> Result<LatticePolytope> {
    let mut acc: Option<LatticePolytope> = None;
    for (j, q) in polys.iter().enumerate() {
        if mask >> j & 1 == 1 {
            acc = Some(match acc {
                None => q.clone(),
                Some(a) => minkowski_sum(&a, q)?,
            });
        }
    }
    Ok(acc.expect("nonempty subset"))
}

/// `Σ_{∅≠J⊆I} (-1)^{k-|J|} ℓ*(Σ_{j∈J} γ_j^∨)`, the arithmetic-genus sum
/// over a face. For `k = 1` this is `ℓ*(γ^∨)`.
fn alternating_interior(np: &NefPartition, p: &Polytope, face: FaceId) -> Result<i64> {
    let k = np.len();
    let duals: Vec<LatticePolytope> = (0..k).map(|j| support_face(np, p, face, j)).collect();
    let mut total = 0i64;
    for mask in 1u64..(1 << k) {
        let sum = subset_sum(&duals, mask)?;
        let sign = if (k as u32 - mask.count_ones()).is_multiple_of(2) { 1 } else { -1 };
        total += sign * sum.interior_point_count() as i64;
    }
    Ok(total)
}

fn nonnegative(value: i64) -> Result<usize> {
    usize::try_from(value).map_err(|_| Error::NegativeCount { value })
}

fn require_dim(p: &Polytope, face: FaceId, dim: usize, what: &str) -> Result<()> {
    if face.dim != dim || face.index >= p.face_lattice().count(dim) {
        return Err(Error::WrongDimension {
            expected: what.into(),
            found: face.dim,
        });
    }
    Ok(())
}

/// Genus of the curve `Ẑ(e)` over an edge `e`.
pub fn edge_genus(p: &Polytope, cfg: &GeometryConfig, e: FaceId) -> Result<usize> {
    cfg.check(p)?;
    require_dim(p, e, 1, "an edge")?;
    match cfg {
        GeometryConfig::Hypersurface => {
            let polar = p.polar()?;
            Ok(polar.face(p.dual_face(e)?).interior_count)
        }
        GeometryConfig::CompleteIntersection(np) => nonnegative(alternating_interior(np, p, e)?),
    }
}

/// Rank of `H_1(Ẑ(e))`, twice the genus.
pub fn edge_curve_h1_rank(p: &Polytope, cfg: &GeometryConfig, e: FaceId) -> Result<usize> {
    Ok(2 * edge_genus(p, cfg, e)?)
}

/// `#(Y ∩ O_f)` for a two-face `f`.
pub fn two_face_point_count(p: &Polytope, cfg: &GeometryConfig, f: FaceId) -> Result<usize> {
    cfg.check(p)?;
    require_dim(p, f, 2, "a two-face")?;
    match cfg {
        GeometryConfig::Hypersurface => {
            let polar = p.polar()?;
            Ok(1 + polar.face(p.dual_face(f)?).interior_count)
        }
        GeometryConfig::CompleteIntersection(np) => nonnegative(1 + alternating_interior(np, p, f)?),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeStratum {
    pub face: FaceId,
    /// `ℓ*(e)`
    pub interior_points: usize,
    pub genus: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoFaceStratum {
    pub face: FaceId,
    /// `ℓ*(f)`
    pub interior_points: usize,
    pub points: usize,
}

/// Per-edge genera and per-two-face point counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumCounts {
    pub edges: Vec<EdgeStratum>,
    pub two_faces: Vec<TwoFaceStratum>,
}

pub fn stratum_counts(p: &Polytope, cfg: &GeometryConfig) -> Result<StratumCounts> {
    cfg.check(p)?;
    let fl = p.face_lattice();
    let edges = fl
        .ids(1)
        .map(|e| {
            Ok(EdgeStratum {
                face: e,
                interior_points: fl.face(e).interior_count,
                genus: edge_genus(p, cfg, e)?,
            })
        })
        .collect::<Result<_>>()?;
    let two_faces = fl
        .ids(2)
        .map(|f| {
            Ok(TwoFaceStratum {
                face: f,
                interior_points: fl.face(f).interior_count,
                points: two_face_point_count(p, cfg, f)?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(StratumCounts { edges, two_faces })
}
