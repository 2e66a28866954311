use super::*;
use crate::corpus;

fn v(x: &[i64]) -> LatticeVector {
    x.to_vec()
}

/// Barycentric membership test for a simplex with `n + 1` vertices, by
/// Cramer's rule over rationals. Independent of the facet machinery.
fn in_simplex(vertices: &[LatticeVector], x: &[i64]) -> bool {
    use num_bigint::BigInt;
    use num_traits::{Signed, Zero};
    let n = x.len();
    // Solve sum_i t_i v_i = x, sum_i t_i = 1.
    let mut a = crate::linalg::IntMatrix::zeros(n + 1, n + 1);
    for (j, vert) in vertices.iter().enumerate() {
        for i in 0..n {
            a[(i, j)] = BigInt::from(vert[i]);
        }
        a[(n, j)] = BigInt::from(1);
    }
    let det = crate::linalg::determinant(&a);
    let rhs: Vec<BigInt> = x.iter().map(|&t| BigInt::from(t)).chain([BigInt::from(1)]).collect();
    (0..=n).all(|j| {
        let mut aj = a.clone();
        for i in 0..=n {
            aj[(i, j)] = rhs[i].clone();
        }
        let num = crate::linalg::determinant(&aj);
        // t_j = num / det >= 0
        num.is_zero() || num.is_negative() == det.is_negative()
    })
}

fn box_count(vertices: &[LatticeVector], member: impl Fn(&[i64]) -> bool) -> usize {
    let n = vertices[0].len();
    let lo: Vec<i64> = (0..n).map(|k| vertices.iter().map(|p| p[k]).min().unwrap()).collect();
    let hi: Vec<i64> = (0..n).map(|k| vertices.iter().map(|p| p[k]).max().unwrap()).collect();
    let mut x = lo.clone();
    let mut count = 0;
    'outer: loop {
        if member(&x) {
            count += 1;
        }
        for k in 0..n {
            if x[k] < hi[k] {
                x[k] += 1;
                continue 'outer;
            }
            x[k] = lo[k];
        }
        return count;
    }
}

#[test]
fn simplex_facets() {
    let p = corpus::simplex(4);
    assert_eq!(p.facets().len(), 5);
    assert!(p.facets().iter().all(|h| h.offset == 1));
    // Each facet contains exactly four vertices and leaves the fifth strictly
    // inside.
    for h in p.facets() {
        let tight = p.vertices().iter().filter(|x| h.slack(x) == 0).count();
        assert_eq!(tight, 4);
        assert!(p.vertices().iter().all(|x| h.slack(x) >= 0));
    }
}

#[test]
fn cube_facets() {
    let p = corpus::hypercube(4);
    let mut normals: Vec<LatticeVector> = p.facets().iter().map(|h| h.normal.clone()).collect();
    normals.sort();
    let mut expected = Vec::new();
    for i in 0..4 {
        for s in [-1, 1] {
            let mut e = vec![0; 4];
            e[i] = s;
            expected.push(e);
        }
    }
    expected.sort();
    assert_eq!(normals, expected);
    assert!(p.facets().iter().all(|h| h.offset == 1));
}

#[test]
fn square_has_four_facets() {
    let p = corpus::hypercube(2);
    assert_eq!(p.facets().len(), 4);
    assert_eq!(p.lattice_points().len(), 9);
    let fl = p.face_lattice();
    assert_eq!(fl.f_vector(), vec![4, 4]);
}

#[test]
fn construction_errors() {
    let flat = [v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[-1, -1, 0])];
    assert!(matches!(
        Polytope::new(&flat),
        Err(Error::NotFullDimensional { rank: 2, dim: 3 })
    ));
    let off = [v(&[1, 1]), v(&[2, 1]), v(&[1, 2])];
    assert!(matches!(Polytope::new(&off), Err(Error::OriginNotInterior { .. })));
    let boundary = [v(&[0, 0]), v(&[1, 0]), v(&[0, 1])];
    assert!(matches!(
        Polytope::new(&boundary),
        Err(Error::OriginNotInterior { offset: 0, .. })
    ));
}

#[test]
fn redundant_points_are_dropped() {
    let pts = [v(&[1, 0]), v(&[0, 0]), v(&[0, 1]), v(&[1, 0]), v(&[-1, -1]), v(&[0, -1])];
    let p = Polytope::new(&pts).unwrap();
    assert_eq!(p.vertices(), &[v(&[1, 0]), v(&[0, 1]), v(&[-1, -1]), v(&[0, -1])]);
}

#[test]
fn polar_of_simplex() {
    let p = corpus::simplex(4);
    let q = p.polar().unwrap();
    let mut got = q.vertices().to_vec();
    got.sort();
    let mut expected = vec![
        v(&[-1, -1, -1, -1]),
        v(&[4, -1, -1, -1]),
        v(&[-1, 4, -1, -1]),
        v(&[-1, -1, 4, -1]),
        v(&[-1, -1, -1, 4]),
    ];
    expected.sort();
    assert_eq!(got, expected);
}

#[test]
fn polar_of_cube_is_cross_polytope() {
    let q = polar(&corpus::hypercube(4)).unwrap();
    assert_eq!(q, corpus::cross_polytope(4));
}

#[test]
fn polar_is_an_involution() {
    for (name, p) in corpus::reflexive_4d() {
        let back = p.polar().unwrap().polar().unwrap();
        assert_eq!(back, &p, "{name}");
    }
    for p in corpus::reflexive_polygons() {
        assert_eq!(p.polar().unwrap().polar().unwrap(), &p);
    }
}

#[test]
fn reflexivity() {
    assert!(corpus::simplex(4).is_reflexive());
    assert!(corpus::hypercube(4).is_reflexive());
    let big = Polytope::new(&[v(&[2, 0]), v(&[0, 2]), v(&[-2, -2])]).unwrap();
    assert!(!big.is_reflexive());
    assert!(matches!(big.polar(), Err(Error::NotReflexive { .. })));
}

#[test]
fn sixteen_reflexive_polygons() {
    let polys = corpus::reflexive_polygons();
    assert_eq!(polys.len(), 16);
    let mut boundary: Vec<usize> = polys
        .iter()
        .map(|p| {
            assert!(p.is_reflexive());
            p.lattice_points().len() - 1
        })
        .collect();
    boundary.sort();
    assert_eq!(boundary, vec![3, 4, 4, 4, 5, 5, 6, 6, 6, 6, 7, 7, 8, 8, 8, 9]);
    // Dual pairs have 12 boundary points between them.
    for p in &polys {
        let q = p.polar().unwrap();
        assert_eq!(p.lattice_points().len() + q.lattice_points().len() - 2, 12);
    }
}

#[test]
fn face_counts() {
    assert_eq!(corpus::simplex(4).face_lattice().f_vector(), vec![5, 10, 10, 5]);
    assert_eq!(corpus::hypercube(4).face_lattice().f_vector(), vec![16, 32, 24, 8]);
    assert_eq!(corpus::cross_polytope(4).face_lattice().f_vector(), vec![8, 24, 32, 16]);
}

#[test]
fn euler_relation_and_ridge_incidence() {
    for (name, p) in corpus::reflexive_4d() {
        let fl = p.face_lattice();
        let n = p.dim();
        let euler: i64 = fl
            .f_vector()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum();
        assert_eq!(euler, 1 - (-1i64).pow(n as u32), "{name}");
        for id in fl.ids(n - 2) {
            assert_eq!(fl.cofaces(id).len(), 2, "{name}");
        }
        for d in 1..n - 1 {
            for id in fl.ids(d - 1) {
                assert!(fl.cofaces(id).len() >= 2, "{name}");
            }
        }
    }
}

#[test]
fn lattice_points_match_barycentric_oracle() {
    let p = corpus::simplex(4);
    assert_eq!(p.lattice_points().len(), 6);
    assert_eq!(box_count(p.vertices(), |x| in_simplex(p.vertices(), x)), 6);
    let q = p.polar().unwrap();
    assert_eq!(q.lattice_points().len(), 126);
    assert_eq!(box_count(q.vertices(), |x| in_simplex(q.vertices(), x)), 126);
    for w in [[1, 1, 1, 2], [1, 1, 1, 4], [1, 1, 2, 5]] {
        let p = corpus::weighted_simplex(&w);
        assert_eq!(
            p.lattice_points().len(),
            box_count(p.vertices(), |x| in_simplex(p.vertices(), x))
        );
        if let Ok(q) = p.polar() {
            if q.vertices().len() == 5 {
                assert_eq!(
                    q.lattice_points().len(),
                    box_count(q.vertices(), |x| in_simplex(q.vertices(), x))
                );
            }
        }
    }
    let c = corpus::hypercube(4);
    assert_eq!(c.lattice_points().len(), 81);
    assert_eq!(box_count(c.vertices(), |x| x.iter().all(|t| t.abs() <= 1)), 81);
    let x = corpus::cross_polytope(4);
    let l1 = box_count(x.vertices(), |y| y.iter().map(|t| t.abs()).sum::<i64>() <= 1);
    assert_eq!(x.lattice_points().len(), l1);
}

#[test]
fn interior_points_of_faces() {
    let p = corpus::simplex(4);
    let fl = p.face_lattice();
    for f in fl.faces(0) {
        assert_eq!(f.interior_count, 1);
    }
    let e = fl
        .faces(1)
        .iter()
        .find(|f| {
            let mut pts = f.lattice_points.clone();
            pts.sort();
            pts == vec![v(&[0, 1, 0, 0]), v(&[1, 0, 0, 0])]
        })
        .unwrap();
    assert_eq!(e.interior_count, 0);

    let q = p.polar().unwrap();
    let qfl = q.face_lattice();
    let a = q.vertices().iter().position(|x| x == &v(&[4, -1, -1, -1])).unwrap();
    let b = q.vertices().iter().position(|x| x == &v(&[-1, 4, -1, -1])).unwrap();
    let mut key = vec![a, b];
    key.sort();
    let id = qfl.by_vertices(&key).unwrap();
    assert_eq!(id.dim, 1);
    assert_eq!(qfl.face(id).interior_count, 4);
    assert_eq!(qfl.face(id).lattice_points.len(), 6);
}

#[test]
fn point_decomposition_identity() {
    for (name, p) in corpus::reflexive_4d() {
        let fl = p.face_lattice();
        let sum = |d: usize| fl.faces(d).iter().map(|f| f.interior_count).sum::<usize>();
        assert_eq!(
            p.lattice_points().len(),
            1 + fl.count(0) + sum(1) + sum(2) + sum(3),
            "{name}"
        );
        assert_eq!(fl.interior_count(), 1, "{name}");
    }
}

#[test]
fn dual_faces() {
    let p = corpus::simplex(4);
    let q = p.polar().unwrap();
    let fl = p.face_lattice();
    // Facet -> vertex given by its normal.
    for id in fl.ids(3) {
        let d = p.dual_face(id).unwrap();
        assert_eq!(d.dim, 0);
        let f = fl.face(id);
        let vtx = &q.vertices()[q.face(d).vertices[0]];
        assert_eq!(vtx, &p.facets()[f.facets[0]].normal);
    }
    // Vertex e_1 -> the facet of the polar with first coordinate -1.
    let e1 = p.vertices().iter().position(|x| x == &v(&[1, 0, 0, 0])).unwrap();
    let id = fl.by_vertices(&[e1]).unwrap();
    let d = p.dual_face(id).unwrap();
    let face = q.face(d);
    assert_eq!(d.dim, 3);
    assert!(face.vertices.iter().all(|&i| q.vertices()[i][0] == -1));
    assert_eq!(face.vertices.len(), 4);
    assert_eq!(face.interior_count, 4);
}

#[test]
fn dual_face_involution_and_dimension() {
    for (name, p) in corpus::reflexive_4d() {
        let q = p.polar().unwrap();
        let fl = p.face_lattice();
        for d in 0..p.dim() {
            for id in fl.ids(d) {
                let dual = p.dual_face(id).unwrap();
                assert_eq!(id.dim + dual.dim, p.dim() - 1, "{name}");
                let back = q.dual_face(dual).unwrap();
                let qq = q.polar().unwrap();
                let mut coords: Vec<&LatticeVector> =
                    qq.face(back).vertices.iter().map(|&i| &qq.vertices()[i]).collect();
                let mut orig: Vec<&LatticeVector> =
                    fl.face(id).vertices.iter().map(|&i| &p.vertices()[i]).collect();
                coords.sort();
                orig.sort();
                assert_eq!(coords, orig, "{name}");
            }
        }
    }
}

#[test]
fn dual_face_reverses_inclusion() {
    let p = corpus::hypercube(4);
    let q = p.polar().unwrap();
    let fl = p.face_lattice();
    for id in fl.ids(1) {
        for &up in fl.cofaces(id) {
            let (a, b) = (p.dual_face(id).unwrap(), p.dual_face(up).unwrap());
            assert!(q.face_lattice().is_face_of(b, a));
        }
    }
}

#[test]
fn minkowski_sums() {
    let p = LatticePolytope::from_points(&[v(&[0, 0]), v(&[1, 1]), v(&[2, -1])]).unwrap();
    let zero = LatticePolytope::single_point(v(&[0, 0]));
    assert_eq!(minkowski_sum(&p, &zero).unwrap(), p);

    let a = LatticePolytope::from_points(&[v(&[0, 0]), v(&[1, 0])]).unwrap();
    let b = LatticePolytope::from_points(&[v(&[0, 0]), v(&[0, 1])]).unwrap();
    let s = minkowski_sum(&a, &b).unwrap();
    assert_eq!(s.dim(), 2);
    assert_eq!(s.lattice_point_count(), 4);
    assert_eq!(s.interior_point_count(), 0);

    let c = LatticePolytope::single_point(v(&[0, 0, 0]));
    assert!(matches!(
        minkowski_sum(&a, &c),
        Err(Error::LatticeMismatch { left: 2, right: 3 })
    ));
}

#[test]
fn minkowski_sum_of_dual_edges_matches_pairwise_sums() {
    // Two edges of the polar simplex; compare lattice points of the hull of
    // pairwise sums with the brute-force set {x + y}.
    let q = corpus::simplex(4).polar().unwrap().clone();
    let fl = q.face_lattice();
    let e0 = fl.ids(1).next().unwrap();
    for e1 in fl.ids(1) {
        let a = q.face_polytope(e0);
        let b = q.face_polytope(e1);
        let s = minkowski_sum(&a, &b).unwrap();
        let mut brute: Vec<LatticeVector> = a
            .lattice_points()
            .iter()
            .flat_map(|x| b.lattice_points().into_iter().map(move |y| add(x, &y)))
            .collect();
        brute.sort();
        brute.dedup();
        // Sums of lattice segments have no lattice points beyond the pairwise
        // sums of their lattice points.
        assert_eq!(s.lattice_points(), brute);
    }
}

#[test]
fn relative_interior_of_lower_dimensional_polytopes() {
    // A segment with 6 lattice points in Z^4.
    let s = LatticePolytope::from_points(&[v(&[4, -1, -1, -1]), v(&[-1, 4, -1, -1])]).unwrap();
    assert_eq!(s.dim(), 1);
    assert_eq!(s.lattice_point_count(), 6);
    assert_eq!(s.interior_point_count(), 4);
    // A triangle in a plane of Z^3 with one interior point.
    let t = LatticePolytope::from_points(&[v(&[-1, -1, 5]), v(&[2, -1, 5]), v(&[-1, 2, 5])]).unwrap();
    assert_eq!(t.dim(), 2);
    assert_eq!(t.lattice_point_count(), 10);
    assert_eq!(t.interior_point_count(), 1);
    let pt = LatticePolytope::single_point(v(&[3, 3]));
    assert_eq!((pt.dim(), pt.lattice_point_count(), pt.interior_point_count()), (0, 1, 1));
}

#[test]
fn unimodular_transform_preserves_counts() {
    let g = vec![v(&[1, 2, 0, 0]), v(&[0, 1, 0, 0]), v(&[0, 0, 1, -1]), v(&[0, 0, 0, 1])];
    let p = corpus::simplex(4);
    let q = p.transform(&g).unwrap();
    assert!(q.is_reflexive());
    assert_eq!(q.lattice_points().len(), 6);
    assert_eq!(
        q.polar().unwrap().lattice_points().len(),
        p.polar().unwrap().lattice_points().len()
    );
}
