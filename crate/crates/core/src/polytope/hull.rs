//! Exact convex hulls of small integer point sets by exhaustive hyperplane
//! search, plus the affine lattice frames used to work inside
//! lower-dimensional polytopes.

use std::collections::HashSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;

use crate::linalg::{rank_of_vectors, saturated_basis, IntMatrix};

/// Inequality `<normal, x> + offset >= 0`, i.e. `<normal, x> >= -offset`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Halfspace {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl Halfspace {
    /// Slack of `x`: zero on the supporting hyperplane, positive inside.
    pub fn slack(&self, x: &[i64]) -> i64 {
        dot(&self.normal, x) + self.offset
    }
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn to_i64(x: &BigInt) -> i64 {
    i64::try_from(x).expect("lattice coordinate exceeds i64")
}

/// Affine lattice `origin + Z<basis>` equal to `Z^n ∩ aff(points)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct AffineFrame {
    origin: Vec<i64>,
    /// `d` vectors of length `n`.
    basis: Vec<Vec<i64>>,
    /// `d` rows of length `n`.
    coords: Vec<Vec<i64>>,
    /// `n - d` rows of length `n`, annihilating the linear span.
    complement: Vec<Vec<i64>>,
}

impl AffineFrame {
    pub fn identity(n: usize) -> Self {
        let unit = |i: usize| (0..n).map(|j| i64::from(i == j)).collect::<Vec<_>>();
        AffineFrame {
            origin: vec![0; n],
            basis: (0..n).map(unit).collect(),
            coords: (0..n).map(unit).collect(),
            complement: Vec::new(),
        }
    }

    /// Frame of the affine span of `points` (nonempty). Full-dimensional
    /// spans get the identity frame so local and ambient coordinates agree.
    pub fn of_points(n: usize, points: &[Vec<i64>]) -> Self {
        let origin = points[0].clone();
        let diffs: Vec<Vec<i64>> = points.iter().map(|p| sub(p, &origin)).collect();
        Self::of_linear_span(n, &diffs, origin)
    }

    /// Frame of `origin + (Z^n ∩ span(vectors))`.
    pub fn of_linear_span(n: usize, vectors: &[Vec<i64>], origin: Vec<i64>) -> Self {
        if vectors.is_empty() {
            return AffineFrame {
                origin,
                basis: Vec::new(),
                coords: Vec::new(),
                complement: AffineFrame::identity(n).coords,
            };
        }
        let a = IntMatrix::from_columns(n, vectors);
        let s = saturated_basis(&a);
        let d = s.basis.cols();
        if d == n {
            return AffineFrame::identity(n);
        }
        let rows = |m: &IntMatrix| -> Vec<Vec<i64>> {
            (0..m.rows())
                .map(|i| m.row(i).iter().map(to_i64).collect())
                .collect()
        };
        let basis = (0..d)
            .map(|j| s.basis.column(j).iter().map(to_i64).collect())
            .collect();
        AffineFrame {
            origin,
            basis,
            coords: rows(&s.coords),
            complement: rows(&s.complement),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.origin.len()
    }

    /// Local coordinates, or `None` when `x` is off the affine span.
    pub fn to_local(&self, x: &[i64]) -> Option<Vec<i64>> {
        let y = sub(x, &self.origin);
        if self.complement.iter().any(|row| dot(row, &y) != 0) {
            return None;
        }
        Some(self.coords.iter().map(|row| dot(row, &y)).collect())
    }

    pub fn to_ambient(&self, local: &[i64]) -> Vec<i64> {
        let mut x = self.origin.clone();
        for (c, b) in local.iter().zip(&self.basis) {
            for (xi, bi) in x.iter_mut().zip(b) {
                *xi += c * bi;
            }
        }
        x
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }
}

/// Facets of a full-dimensional point set in `Z^d`, `d >= 1`, with
/// primitive normals.
pub(crate) fn facets_full_dim(d: usize, points: &[Vec<i64>]) -> Vec<Halfspace> {
    let mut seen = HashSet::new();
    let mut facets = Vec::new();
    for subset in (0..points.len()).combinations(d) {
        let base = &points[subset[0]];
        let diffs: Vec<Vec<i64>> = subset[1..].iter().map(|&i| sub(&points[i], base)).collect();
        let Some(normal) = hyperplane_normal(d, &diffs) else {
            continue;
        };
        let level = dot(&normal, base);
        let (mut above, mut below) = (false, false);
        for p in points {
            let v = dot(&normal, p) - level;
            above |= v > 0;
            below |= v < 0;
            if above && below {
                break;
            }
        }
        let h = match (above, below) {
            (true, true) => continue,
            (false, true) => Halfspace {
                normal: normal.iter().map(|x| -x).collect(),
                offset: level,
            },
            _ => Halfspace {
                normal,
                offset: -level,
            },
        };
        if seen.insert(h.clone()) {
            facets.push(h);
        }
    }
    facets
}

/// Primitive normal to the `d - 1` vectors `diffs` in `Z^d`, or `None` if
/// they are linearly dependent.
fn hyperplane_normal(d: usize, diffs: &[Vec<i64>]) -> Option<Vec<i64>> {
    debug_assert_eq!(diffs.len() + 1, d);
    let mut normal = Vec::with_capacity(d);
    for skip in 0..d {
        let minor: Vec<Vec<i128>> = diffs
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip)
                    .map(|(_, &x)| i128::from(x))
                    .collect()
            })
            .collect();
        let det = det_i128(minor);
        normal.push(if skip % 2 == 0 { det } else { -det });
    }
    let g = normal.iter().fold(0i128, |g, x| g.gcd(x));
    if g == 0 {
        return None;
    }
    Some(
        normal
            .into_iter()
            .map(|x| i64::try_from(x / g).expect("facet normal exceeds i64"))
            .collect(),
    )
}

/// Bareiss determinant over i128.
fn det_i128(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Indices of the points that are vertices of their convex hull, given the
/// facets. Duplicates keep their first occurrence only.
pub(crate) fn vertex_indices(d: usize, points: &[Vec<i64>], facets: &[Halfspace]) -> Vec<usize> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (i, p) in points.iter().enumerate() {
        if !seen.insert(p.clone()) {
            continue;
        }
        let tight: Vec<Vec<i64>> = facets
            .iter()
            .filter(|h| h.slack(p) == 0)
            .map(|h| h.normal.clone())
            .collect();
        if tight.len() >= d && rank_of_vectors(&tight) == d {
            out.push(i);
        }
    }
    out
}

/// All integer points of `Z^d` satisfying every inequality, scanning the
/// bounding box of `vertices`.
pub(crate) fn enumerate_box(
    vertices: &[Vec<i64>],
    facets: &[Halfspace],
    mut visit: impl FnMut(&[i64]),
) {
    let d = vertices[0].len();
    if d == 0 {
        visit(&[]);
        return;
    }
    let lo: Vec<i64> = (0..d).map(|k| vertices.iter().map(|v| v[k]).min().unwrap()).collect();
    let hi: Vec<i64> = (0..d).map(|k| vertices.iter().map(|v| v[k]).max().unwrap()).collect();
    let mut x = lo.clone();
    loop {
        if facets.iter().all(|h| h.slack(&x) >= 0) {
            visit(&x);
        }
        let mut k = 0;
        loop {
            if k == d {
                return;
            }
            if x[k] < hi[k] {
                x[k] += 1;
                break;
            }
            x[k] = lo[k];
            k += 1;
        }
    }
}
