//! Hodge numbers and integral homology of the resolved Calabi-Yau
//! threefold attached to a reflexive polytope.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::{cokernel, determinant, AbelianGroup, IntMatrix};
use crate::polytope::{AffineFrame, LatticeVector, Polytope};
use crate::strata::{edge_curve_h1_rank, two_face_point_count, GeometryConfig};

/// Hodge numbers split into their toric/polynomial parts and correction
/// terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HodgeSummary {
    pub h11: u64,
    pub h21: u64,
    pub h11_toric: u64,
    pub h21_poly: u64,
    /// `Σ_f ℓ*(f) ℓ*(f^∨)` over two-faces.
    pub corr_11: u64,
    /// `Σ_e ℓ*(e) ℓ*(e^∨)` over edges.
    pub corr_21: u64,
    pub euler: i64,
}

fn require_dim4(p: &Polytope) -> Result<()> {
    if p.dim() != 4 {
        return Err(Error::WrongDimension {
            expected: "4".into(),
            found: p.dim(),
        });
    }
    Ok(())
}

fn nonnegative(value: i64) -> Result<u64> {
    u64::try_from(value).map_err(|_| Error::NegativeCount { value })
}

/// `ℓ(Δ) - 5 - Σ_{facets g} ℓ*(g)`.
fn toric_part(p: &Polytope) -> Result<u64> {
    let fl = p.face_lattice();
    let facets: usize = fl.faces(3).iter().map(|g| g.interior_count).sum();
    nonnegative(p.lattice_points().len() as i64 - 5 - facets as i64)
}

/// `Σ ℓ*(γ) ℓ*(γ^∨)` over faces of dimension `dim`.
fn correction(p: &Polytope, dim: usize) -> Result<u64> {
    let polar = p.polar()?;
    let fl = p.face_lattice();
    let mut total = 0u64;
    for id in fl.ids(dim) {
        let own = fl.face(id).interior_count as u64;
        if own > 0 {
            total += own * polar.face(p.dual_face(id)?).interior_count as u64;
        }
    }
    Ok(total)
}

/// `h^{1,1}` and `h^{2,1}` of a Calabi-Yau hypersurface.
pub fn hodge_numbers(p: &Polytope) -> Result<HodgeSummary> {
    require_dim4(p)?;
    p.require_reflexive()?;
    let polar = p.polar()?;
    let h11_toric = toric_part(p)?;
    let h21_poly = toric_part(polar)?;
    let corr_11 = correction(p, 2)?;
    let corr_21 = correction(p, 1)?;
    let h11 = h11_toric + corr_11;
    let h21 = h21_poly + corr_21;
    Ok(HodgeSummary {
        h11,
        h21,
        h11_toric,
        h21_poly,
        corr_11,
        corr_21,
        euler: 2 * (h11 as i64 - h21 as i64),
    })
}

/// Rank of `H_2`: `#V + Σ_e ℓ*(e) + Σ_f ℓ*(f) #(Y ∩ O_f) - n`.
pub fn rank_h2(p: &Polytope, cfg: &GeometryConfig) -> Result<u64> {
    cfg.check(p)?;
    let fl = p.face_lattice();
    let mut total = p.vertices().len() as i64;
    total += fl.faces(1).iter().map(|e| e.interior_count as i64).sum::<i64>();
    for f in fl.ids(2) {
        let interior = fl.face(f).interior_count as i64;
        if interior > 0 {
            total += interior * two_face_point_count(p, cfg, f)? as i64;
        }
    }
    nonnegative(total - p.dim() as i64)
}

/// Lattice points on faces of dimension at most `max_dim`.
fn skeleton_points(p: &Polytope, max_dim: usize) -> Vec<LatticeVector> {
    let fl = p.face_lattice();
    let mut out: BTreeSet<LatticeVector> = BTreeSet::new();
    for d in 0..=max_dim.min(fl.dim().saturating_sub(1)) {
        for f in fl.faces(d) {
            out.extend(f.lattice_points.iter().cloned());
        }
    }
    out.into_iter().collect()
}

/// `H_1 = N / Span(N ∩ ∂Δ^{(2)})`.
pub fn h1_group(p: &Polytope) -> Result<AbelianGroup> {
    p.require_reflexive()?;
    let pts = skeleton_points(p, 2);
    Ok(cokernel(&IntMatrix::from_columns(p.dim(), &pts)))
}

fn wedge(n: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push(a[i] * b[j] - a[j] * b[i]);
        }
    }
    out
}

/// Generators of the image in `∧²N` whose cokernel has `Tor H_2` as its
/// torsion: `b ∧ ℓ` for `ℓ` on the one-skeleton and `b` in a basis of `N`,
/// and `w ∧ ℓ` for `ℓ` inside a two-face `f` and `w` in a basis of
/// `N ∩ span(f)`.
fn tor_h2_generators(p: &Polytope) -> Vec<Vec<i64>> {
    let n = p.dim();
    let unit = |i: usize| (0..n).map(|j| i64::from(i == j)).collect::<Vec<_>>();
    let mut cols = Vec::new();
    for l in skeleton_points(p, 1) {
        for i in 0..n {
            cols.push(wedge(n, &unit(i), &l));
        }
    }
    let fl = p.face_lattice();
    for f in fl.faces(2).iter().filter(|f| f.interior_count > 0) {
        let span: Vec<LatticeVector> = f.vertices.iter().map(|&v| p.vertices()[v].clone()).collect();
        let frame = AffineFrame::of_linear_span(n, &span, vec![0; n]);
        let boundary: BTreeSet<&LatticeVector> = fl
            .faces(1)
            .iter()
            .filter(|e| e.vertices.iter().all(|v| f.vertices.contains(v)))
            .flat_map(|e| e.lattice_points.iter())
            .collect();
        for l in f.lattice_points.iter().filter(|l| !boundary.contains(l)) {
            for w in frame.basis() {
                cols.push(wedge(n, w, l));
            }
        }
    }
    cols
}

/// The full cokernel `∧²N / Image`, free part included.
pub fn tor_h2_cokernel(p: &Polytope) -> Result<AbelianGroup> {
    p.require_reflexive()?;
    if p.dim() < 4 {
        return Err(Error::WrongDimension {
            expected: "at least 4".into(),
            found: p.dim(),
        });
    }
    let n = p.dim();
    Ok(cokernel(&IntMatrix::from_columns(n * (n - 1) / 2, &tor_h2_generators(p))))
}

/// `Tor H_2`.
pub fn tor_h2(p: &Polytope) -> Result<AbelianGroup> {
    Ok(tor_h2_cokernel(p)?.torsion())
}

/// Rank of the kernel of `H_3(Ỹ) -> H_3(Y)`: `Σ_e ℓ*(e) rank H_1(Ẑ(e))`.
pub fn ker_rho_h3_rank(p: &Polytope, cfg: &GeometryConfig) -> Result<u64> {
    cfg.check(p)?;
    let fl = p.face_lattice();
    let mut total = 0u64;
    for e in fl.ids(1) {
        let interior = fl.face(e).interior_count as u64;
        if interior > 0 {
            total += interior * edge_curve_h1_rank(p, cfg, e)? as u64;
        }
    }
    Ok(total)
}

/// `H_0, ..., H_6` of the resolved threefold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralHomology {
    groups: [AbelianGroup; 7],
    h3_rank_known: bool,
}

impl IntegralHomology {
    pub fn new(groups: [AbelianGroup; 7], h3_rank_known: bool) -> Self {
        IntegralHomology {
            groups,
            h3_rank_known,
        }
    }

    pub fn group(&self, degree: usize) -> &AbelianGroup {
        &self.groups[degree]
    }

    pub fn groups(&self) -> &[AbelianGroup; 7] {
        &self.groups
    }

    /// `false` in complete-intersection mode, where `H_3` carries only its
    /// torsion.
    pub fn h3_rank_known(&self) -> bool {
        self.h3_rank_known
    }

    pub fn betti(&self, degree: usize) -> usize {
        self.groups[degree].rank()
    }
}

/// Assembles the homology from `H_1`, `H_2`, `b_3` and duality:
/// `Tor H_3 = Tor H_2`, `H_4 = Z^{b_2} ⊕ Tor H_1`, `H_5 = Z^{b_1}`.
pub fn homology_summary(p: &Polytope, cfg: &GeometryConfig) -> Result<IntegralHomology> {
    cfg.check(p)?;
    let h1 = h1_group(p)?;
    let tor1 = h1.torsion();
    let tor2 = tor_h2(p)?;
    let b2 = rank_h2(p, cfg)? as usize;
    let (b3, known) = match cfg {
        GeometryConfig::Hypersurface => (2 + 2 * hodge_numbers(p)?.h21 as usize, true),
        GeometryConfig::CompleteIntersection(_) => (0, false),
    };
    let groups = [
        AbelianGroup::free(1),
        h1.clone(),
        AbelianGroup::free(b2).direct_sum(&tor2),
        AbelianGroup::free(b3).direct_sum(&tor2),
        AbelianGroup::free(b2).direct_sum(&tor1),
        AbelianGroup::free(h1.rank()),
        AbelianGroup::free(1),
    ];
    Ok(IntegralHomology::new(groups, known))
}

/// The `A_n` root lattice with its Cartan form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ARootLattice {
    n: usize,
    gram: IntMatrix,
}

impl ARootLattice {
    pub fn new(n: usize) -> Self {
        let mut gram = IntMatrix::zeros(n, n);
        for i in 0..n {
            gram[(i, i)] = BigInt::from(2);
            if i + 1 < n {
                gram[(i, i + 1)] = BigInt::from(-1);
                gram[(i + 1, i)] = BigInt::from(-1);
            }
        }
        ARootLattice { n, gram }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    /// `n + 1`, the order of the discriminant group.
    pub fn determinant(&self) -> BigInt {
        determinant(&self.gram)
    }

    /// The discriminant group `A_n^* / A_n`, cyclic of order `n + 1`.
    pub fn discriminant_group(&self) -> AbelianGroup {
        cokernel(&self.gram)
    }
}
