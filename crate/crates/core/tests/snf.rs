use std::collections::BTreeSet;

use cy_topology::linalg::{cokernel, determinant, smith_normal_form, IntMatrix};
use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-9i64..=9, r * c)))
}

fn build(r: usize, c: usize, entries: &[i64]) -> IntMatrix {
    let rows: Vec<Vec<i64>> = entries.chunks(c).map(|row| row.to_vec()).collect();
    assert_eq!(rows.len(), r);
    IntMatrix::from_rows(c, &rows)
}

fn leibniz(m: &IntMatrix) -> BigInt {
    let n = m.rows();
    (0..n)
        .permutations(n)
        .map(|perm| {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
            let product: BigInt = (0..n).map(|i| m[(i, perm[i])].clone()).product();
            if inversions % 2 == 0 {
                product
            } else {
                -product
            }
        })
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn smith_form_properties((r, c, entries) in matrix()) {
        let a = build(r, c, &entries);
        let (u, d, v) = smith_normal_form(&a);
        prop_assert_eq!(u.mul(&a).mul(&v), d.clone());
        prop_assert!(d.is_diagonal());
        prop_assert!(leibniz(&u).abs().is_one());
        prop_assert!(leibniz(&v).abs().is_one());
        let diag: Vec<BigInt> = (0..r.min(c)).map(|i| d[(i, i)].clone()).collect();
        prop_assert!(diag.iter().all(|x| !x.is_negative()));
        for w in diag.windows(2) {
            // d_i | d_{i+1}, with zeros only at the end.
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }
        if r == c {
            let det = leibniz(&a);
            prop_assert_eq!(determinant(&a), det.clone());
            if !det.is_zero() {
                prop_assert_eq!(det.abs(), diag.iter().product::<BigInt>());
            }
        }
    }

    /// For a full-rank square matrix with small determinant, enumerate
    /// `Z^n / A Z^n` directly by reducing the box `[0, |det|)^n`.
    #[test]
    fn cokernel_order_by_enumeration(entries in prop::collection::vec(-3i64..=3, 4)) {
        let a = build(2, 2, &entries);
        let det = leibniz(&a);
        prop_assume!(!det.is_zero());
        let g = cokernel(&a);
        prop_assert_eq!(g.rank(), 0);
        let (p, q, s, t) = (entries[0], entries[1], entries[2], entries[3]);
        let det = p * t - q * s;
        // x ~ y iff adj(A)(x - y) is divisible by det.
        let class = |x: i64, y: i64| {
            let (u, v) = (t * x - q * y, -s * x + p * y);
            (u.rem_euclid(det.abs()), v.rem_euclid(det.abs()))
        };
        let m = det.abs();
        let classes: BTreeSet<(i64, i64)> = (0..m).flat_map(|x| (0..m).map(move |y| (x, y))).map(|(x, y)| class(x, y)).collect();
        prop_assert_eq!(BigInt::from(classes.len()), g.torsion_order());
        // The exponent of the group is the largest invariant factor.
        let exponent = (1..=m)
            .find(|&k| (0..m).all(|x| (0..m).all(|y| {
                let (u, v) = class(k * x, k * y);
                u == 0 && v == 0
            })))
            .unwrap();
        let largest = g.invariant_factors().last().cloned().unwrap_or_else(BigInt::one);
        prop_assert_eq!(BigInt::from(exponent), largest);
    }
}
