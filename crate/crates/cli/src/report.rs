//! Structured reports. Every number is produced by the corresponding
//! library call; serialization order follows field order.

use cy_topology::face_models::{
    dual_complex, maximal_triangulation, model_homology, random_flips, Point2, Triangulation2D,
};
use cy_topology::invariants::{hodge_numbers, homology_summary, ker_rho_h3_rank, HodgeSummary};
use cy_topology::ktheory::k_groups;
use cy_topology::linalg::AbelianGroup;
use cy_topology::nef::{is_ample, validate_nef_partition};
use cy_topology::polytope::{FaceId, LatticeVector, Polytope};
use cy_topology::strata::{stratum_counts, GeometryConfig};
use cy_topology::Error;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::CliError;

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub input: InputEcho,
    pub reflexive: bool,
    pub faces: FaceCensus,
    pub polar_vertices: Vec<LatticeVector>,
    pub hodge: Option<HodgeBlock>,
    pub homology: Vec<GroupBlock>,
    pub kernel_h3_rank: u64,
    pub strata: StrataBlock,
    pub ktheory: Option<KBlock>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<PartitionBlock>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InputEcho {
    pub dimension: usize,
    pub vertices: Vec<LatticeVector>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FaceCensus {
    pub vertices: usize,
    pub edges: usize,
    pub two_faces: usize,
    pub facets: usize,
    pub f_vector: Vec<usize>,
    pub lattice_points: usize,
    /// `ℓ*` of every edge, two-face and facet, in face-lattice order.
    pub interior_points: FaceInterior,
}

#[derive(Clone, Debug, Serialize)]
pub struct FaceInterior {
    pub edges: Vec<usize>,
    pub two_faces: Vec<usize>,
    pub facets: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HodgeBlock {
    pub h11: u64,
    pub h21: u64,
    pub h11_toric: u64,
    pub h21_poly: u64,
    pub corr_11: u64,
    pub corr_21: u64,
    pub euler: i64,
}

impl From<HodgeSummary> for HodgeBlock {
    fn from(h: HodgeSummary) -> Self {
        HodgeBlock {
            h11: h.h11,
            h21: h.h21,
            h11_toric: h.h11_toric,
            h21_poly: h.h21_poly,
            corr_11: h.corr_11,
            corr_21: h.corr_21,
            euler: h.euler,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupBlock {
    /// `None` when the rank is not determined.
    pub rank: Option<u64>,
    pub torsion: Vec<u64>,
}

impl GroupBlock {
    fn new(g: &AbelianGroup, rank_known: bool) -> Result<Self, CliError> {
        let torsion = g
            .invariant_factors()
            .iter()
            .map(|d| d.to_u64().ok_or_else(|| Error::Overflow(d.to_string())))
            .collect::<Result<_, _>>()?;
        Ok(GroupBlock {
            rank: rank_known.then_some(g.rank() as u64),
            torsion,
        })
    }

    fn display(&self) -> String {
        let mut parts = Vec::new();
        match self.rank {
            None => parts.push("Z^?".to_string()),
            Some(0) => {}
            Some(1) => parts.push("Z".to_string()),
            Some(r) => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StrataBlock {
    pub edges: Vec<EdgeBlock>,
    pub two_faces: Vec<TwoFaceBlock>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EdgeBlock {
    pub vertices: Vec<usize>,
    pub interior_points: usize,
    pub genus: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TwoFaceBlock {
    pub vertices: Vec<usize>,
    pub interior_points: usize,
    pub points: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct KBlock {
    pub k0: GroupBlock,
    pub k1: GroupBlock,
}

#[derive(Clone, Debug, Serialize)]
pub struct PartitionBlock {
    pub parts: Vec<Vec<usize>>,
    pub ample: Vec<bool>,
}

/// Builds the polytope, checking reflexivity before anything else.
pub fn reflexive_polytope(vertices: &[LatticeVector]) -> Result<Polytope, CliError> {
    let p = Polytope::new(vertices)?;
    if let Some((facet, h)) = p.facets().iter().enumerate().find(|(_, h)| h.offset != 1) {
        return Err(Error::NotReflexive {
            facet,
            offset: h.offset,
        }
        .into());
    }
    Ok(p)
}

/// Full analysis of one polytope, as a hypersurface or, given a partition,
/// as a complete intersection.
pub fn analyze(vertices: &[LatticeVector], partition: Option<&[Vec<usize>]>) -> Result<Report, CliError> {
    let p = reflexive_polytope(vertices)?;
    let (cfg, partition_block) = match partition {
        None => {
            let cfg = GeometryConfig::Hypersurface;
            cfg.check(&p)?;
            (cfg, None)
        }
        Some(parts) => {
            let np = validate_nef_partition(&p, parts).map_err(CliError::Partition)?;
            let block = PartitionBlock {
                parts: np.parts().to_vec(),
                ample: (0..np.len())
                    .map(|i| is_ample(&np, i))
                    .collect::<Result<_, _>>()
                    .map_err(CliError::Partition)?,
            };
            let cfg = GeometryConfig::complete_intersection(&p, np).map_err(CliError::Partition)?;
            (cfg, Some(block))
        }
    };

    let fl = p.face_lattice();
    let n = p.dim();
    let interior = |d: usize| fl.faces(d).iter().map(|f| f.interior_count).collect::<Vec<_>>();
    let faces = FaceCensus {
        vertices: fl.count(0),
        edges: fl.count(1),
        two_faces: fl.count(2),
        facets: fl.count(n - 1),
        f_vector: fl.f_vector(),
        lattice_points: p.lattice_points().len(),
        interior_points: FaceInterior {
            edges: interior(1),
            two_faces: interior(2),
            facets: interior(n - 1),
        },
    };

    let hodge = match cfg {
        GeometryConfig::Hypersurface => Some(HodgeBlock::from(hodge_numbers(&p)?)),
        GeometryConfig::CompleteIntersection(_) => None,
    };
    let h = homology_summary(&p, &cfg)?;
    let homology = (0..7)
        .map(|d| GroupBlock::new(h.group(d), d != 3 || h.h3_rank_known()))
        .collect::<Result<_, _>>()?;
    let ktheory = match k_groups(&h) {
        Ok(k) => Some(KBlock {
            k0: GroupBlock::new(&k.k0, true)?,
            k1: GroupBlock::new(&k.k1, true)?,
        }),
        Err(Error::IncompleteHomology) => None,
        Err(e) => return Err(e.into()),
    };
    let counts = stratum_counts(&p, &cfg)?;
    let face_vertices = |id: FaceId| fl.face(id).vertices.clone();
    let strata = StrataBlock {
        edges: counts
            .edges
            .iter()
            .map(|e| EdgeBlock {
                vertices: face_vertices(e.face),
                interior_points: e.interior_points,
                genus: e.genus,
            })
            .collect(),
        two_faces: counts
            .two_faces
            .iter()
            .map(|f| TwoFaceBlock {
                vertices: face_vertices(f.face),
                interior_points: f.interior_points,
                points: f.points,
            })
            .collect(),
    };

    Ok(Report {
        input: InputEcho {
            dimension: n,
            vertices: p.vertices().to_vec(),
        },
        reflexive: true,
        faces,
        polar_vertices: p.polar()?.vertices().to_vec(),
        hodge,
        homology,
        kernel_h3_rank: ker_rho_h3_rank(&p, &cfg)?,
        strata,
        ktheory,
        partition: partition_block,
    })
}

/// One line per polytope for corpus scans.
pub fn summary_line(r: &Report) -> String {
    let hodge = match &r.hodge {
        Some(h) => format!("h11={} h21={} euler={}", h.h11, h.h21, h.euler),
        None => "h11=? h21=?".to_string(),
    };
    let k = match &r.ktheory {
        Some(k) => format!("K0={} K1={}", k.k0.display(), k.k1.display()),
        None => "K0=? K1=?".to_string(),
    };
    format!(
        "dim={} V={} f={:?} {} H1={} H2={} ker={} {}",
        r.input.dimension,
        r.faces.vertices,
        r.faces.f_vector,
        hodge,
        r.homology[1].display(),
        r.homology[2].display(),
        r.kernel_h3_rank,
        k
    )
}

#[derive(Clone, Debug, Serialize)]
pub struct FaceLabReport {
    pub face: usize,
    pub vertices: Vec<LatticeVector>,
    pub lattice_points: usize,
    pub interior_points: usize,
    pub edge_interior_points: usize,
    pub corners: usize,
    pub triangulation: TriangulationBlock,
    pub flipped: Option<FlipBlock>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TriangulationBlock {
    /// Lattice points in the face's own 2-dimensional coordinates.
    pub points: Vec<Point2>,
    pub triangles: Vec<[usize; 3]>,
    pub dual_complex: DualBlock,
    /// `(#A, #B, #C)`.
    pub shelling: [usize; 3],
    pub betti: [usize; 5],
    pub b2_formula: usize,
    pub b2_trace: usize,
    pub b2_agrees: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DualBlock {
    pub zero_cells: usize,
    pub one_cells: usize,
    pub two_cells: usize,
    pub sigma2_components: usize,
    pub sigma2_contractible: bool,
    pub sigma1_components: usize,
    pub sigma1_trees: bool,
    pub max_valence: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct FlipBlock {
    pub flips: usize,
    pub seed: u64,
    pub triangulation: TriangulationBlock,
    pub b2_unchanged: bool,
}

fn triangulation_block(t: &Triangulation2D) -> Result<TriangulationBlock, CliError> {
    let dc = dual_complex(t);
    let h = model_homology(t)?;
    let (a, b, c) = h.trace.counts();
    Ok(TriangulationBlock {
        points: t.points().to_vec(),
        triangles: t.triangles().to_vec(),
        dual_complex: DualBlock {
            zero_cells: dc.zero_cells,
            one_cells: dc.one_cells,
            two_cells: dc.two_cells,
            sigma2_components: dc.sigma2.len(),
            sigma2_contractible: dc.sigma2_contractible(),
            sigma1_components: dc.sigma1.len(),
            sigma1_trees: dc.sigma1_forest(),
            max_valence: dc.max_valence,
        },
        shelling: [a, b, c],
        betti: h.betti,
        b2_formula: h.betti[2],
        b2_trace: b,
        b2_agrees: h.trace_matches(),
    })
}

/// Triangulation, dual complex and shelling of one two-face, optionally
/// after random flips.
pub fn face_lab(vertices: &[LatticeVector], index: usize, flips: Option<(usize, u64)>) -> Result<FaceLabReport, CliError> {
    let p = Polytope::new(vertices)?;
    let fl = p.face_lattice();
    if index >= fl.count(2) {
        return Err(Error::BadFaceIndex {
            index,
            count: fl.count(2),
        }
        .into());
    }
    let id = FaceId { dim: 2, index };
    let face = fl.face(id);
    let t = maximal_triangulation(&p, id)?;
    let base = triangulation_block(&t)?;
    let h = model_homology(&t)?;
    let flipped = match flips {
        None => None,
        Some((count, seed)) => {
            let tf = random_flips(&t, count, seed);
            let block = triangulation_block(&tf)?;
            Some(FlipBlock {
                flips: count,
                seed,
                b2_unchanged: block.b2_formula == base.b2_formula && block.b2_trace == base.b2_trace,
                triangulation: block,
            })
        }
    };
    Ok(FaceLabReport {
        face: index,
        vertices: face.vertices.iter().map(|&v| p.vertices()[v].clone()).collect(),
        lattice_points: face.lattice_points.len(),
        interior_points: face.interior_count,
        edge_interior_points: h.edge_interior_points,
        corners: h.corners,
        triangulation: base,
        flipped,
    })
}
