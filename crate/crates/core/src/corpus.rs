//! Standard reflexive polytopes used throughout the tests and examples.

use crate::polytope::{LatticeVector, Polytope};

fn unit(n: usize, i: usize) -> LatticeVector {
    (0..n).map(|j| i64::from(i == j)).collect()
}

/// `conv{e_1, ..., e_n, -(e_1 + ... + e_n)}`, the fan polytope of `P^n`.
pub fn simplex(n: usize) -> Polytope {
    let mut v: Vec<LatticeVector> = (0..n).map(|i| unit(n, i)).collect();
    v.push(vec![-1; n]);
    Polytope::new(&v).expect("simplex")
}

/// Fan polytope of the weighted projective space `P(1, w_1, ..., w_n)`:
/// `conv{e_1, ..., e_n, -(w_1 e_1 + ... + w_n e_n)}`.
pub fn weighted_simplex(weights: &[i64]) -> Polytope {
    let n = weights.len();
    let mut v: Vec<LatticeVector> = (0..n).map(|i| unit(n, i)).collect();
    v.push(weights.iter().map(|w| -w).collect());
    Polytope::new(&v).expect("weighted simplex")
}

/// The cube `[-1, 1]^n`.
pub fn hypercube(n: usize) -> Polytope {
    let v: Vec<LatticeVector> = (0..1u32 << n)
        .map(|mask| (0..n).map(|i| if mask >> i & 1 == 1 { 1 } else { -1 }).collect())
        .collect();
    Polytope::new(&v).expect("cube")
}

/// `conv{±e_i}`.
pub fn cross_polytope(n: usize) -> Polytope {
    let v: Vec<LatticeVector> = (0..n)
        .flat_map(|i| {
            let e = unit(n, i);
            let m: LatticeVector = e.iter().map(|x| -x).collect();
            [e, m]
        })
        .collect();
    Polytope::new(&v).expect("cross-polytope")
}

/// `conv(A x {0} ∪ {0} x B)`, the fan polytope of a product of toric
/// varieties. Vertices of `a` come first.
pub fn free_sum(a: &Polytope, b: &Polytope) -> Polytope {
    let (na, nb) = (a.dim(), b.dim());
    let mut v: Vec<LatticeVector> = a
        .vertices()
        .iter()
        .map(|x| x.iter().copied().chain(std::iter::repeat_n(0, nb)).collect())
        .collect();
    v.extend(
        b.vertices()
            .iter()
            .map(|y| std::iter::repeat_n(0, na).chain(y.iter().copied()).collect()),
    );
    Polytope::new(&v).expect("free sum")
}

/// `A x B`.
pub fn cartesian_product(a: &Polytope, b: &Polytope) -> Polytope {
    let v: Vec<LatticeVector> = a
        .vertices()
        .iter()
        .flat_map(|x| {
            b.vertices()
                .iter()
                .map(move |y| x.iter().chain(y).copied().collect())
        })
        .collect();
    Polytope::new(&v).expect("cartesian product")
}

/// The sixteen reflexive polygons, up to lattice isomorphism: ten with at
/// most six boundary points, and the polars of the six with fewer than six.
pub fn reflexive_polygons() -> Vec<Polytope> {
    let small: [&[[i64; 2]]; 6] = [
        &[[1, 0], [0, 1], [-1, -1]],
        &[[1, 0], [0, 1], [-1, 0], [0, -1]],
        &[[1, 0], [0, 1], [-1, 0], [-1, -1]],
        &[[1, 0], [0, 1], [-1, -2]],
        &[[1, 0], [0, 1], [-1, 1], [-1, -1]],
        &[[1, 0], [0, 1], [-1, 1], [-1, 0], [0, -1]],
    ];
    let middle: [&[[i64; 2]]; 4] = [
        &[[1, 0], [1, 1], [0, 1], [-1, 0], [-1, -1], [0, -1]],
        &[[1, 0], [-1, 2], [-1, -1]],
        &[[1, 0], [0, 1], [-1, 1], [-1, -1], [0, -1]],
        &[[1, 0], [0, 1], [-2, 1], [0, -1]],
    ];
    let build = |pts: &[[i64; 2]]| {
        let v: Vec<LatticeVector> = pts.iter().map(|p| p.to_vec()).collect();
        Polytope::new(&v).expect("reflexive polygon")
    };
    let mut out: Vec<Polytope> = small.iter().map(|p| build(p)).collect();
    out.extend(middle.iter().map(|p| build(p)));
    let polars: Vec<Polytope> = out[..6]
        .iter()
        .map(|p| p.polar().expect("reflexive").clone())
        .collect();
    out.extend(polars);
    out
}

/// A corpus of reflexive 4-polytopes mixing simplices, cubes,
/// cross-polytopes, products and their polars.
pub fn reflexive_4d() -> Vec<(String, Polytope)> {
    let mut out: Vec<(String, Polytope)> = Vec::new();
    let tri = simplex(2);
    let square = cross_polytope(2);
    let hexagon = Polytope::new(&[
        vec![1, 0],
        vec![1, 1],
        vec![0, 1],
        vec![-1, 0],
        vec![-1, -1],
        vec![0, -1],
    ])
    .expect("hexagon");
    let seg = cross_polytope(1);

    out.push(("simplex".into(), simplex(4)));
    out.push(("weighted_11112".into(), weighted_simplex(&[1, 1, 1, 2])));
    out.push(("weighted_11114".into(), weighted_simplex(&[1, 1, 1, 4])));
    out.push(("weighted_11125".into(), weighted_simplex(&[1, 1, 2, 5])));
    out.push(("cube".into(), hypercube(4)));
    out.push(("cross_polytope".into(), cross_polytope(4)));
    out.push(("triangle+triangle".into(), free_sum(&tri, &tri)));
    out.push(("square+hexagon".into(), free_sum(&square, &hexagon)));
    out.push(("segment+simplex3".into(), free_sum(&seg, &simplex(3))));
    out.push(("triangle x hexagon".into(), cartesian_product(&tri, &hexagon)));
    out.push((
        "polar(weighted_11112)".into(),
        weighted_simplex(&[1, 1, 1, 2]).polar().expect("reflexive").clone(),
    ));
    out.push(("polar(simplex)".into(), simplex(4).polar().expect("reflexive").clone()));
    out.push((
        "polar(triangle x hexagon)".into(),
        cartesian_product(&tri, &hexagon).polar().expect("reflexive").clone(),
    ));
    out.push(("quintic/Z5".into(), quintic_quotient()));
    out.push((
        "polar(quintic/Z5)".into(),
        quintic_quotient().polar().expect("reflexive").clone(),
    ));
    out
}

/// The simplex of `P^4` in the lattice refined by `(1/5)(1, 2, 3, 4)`: the
/// fan polytope of the quotient of the quintic by its free `Z/5` action.
pub fn quintic_quotient() -> Polytope {
    Polytope::new(&[
        vec![5, -2, -3, -4],
        vec![0, 1, 0, 0],
        vec![0, 0, 1, 0],
        vec![0, 0, 0, 1],
        vec![-5, 1, 2, 3],
    ])
    .expect("quintic quotient")
}
