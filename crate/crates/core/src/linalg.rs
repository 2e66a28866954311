//! Exact integer linear algebra: Smith normal form, cokernels and finitely
//! generated abelian groups.
//!
//! Everything here works over arbitrary-precision integers. Entries of the
//! transformation matrices grow quickly during elimination, even when the
//! input is a small lattice matrix.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix stored in row-major order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from row vectors. All rows must have length `cols`.
    pub fn from_rows<T: Into<BigInt> + Clone>(cols: usize, rows: &[Vec<T>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r.iter().cloned().map(Into::into));
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Builds a matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns<T: Into<BigInt> + Clone>(rows: usize, columns: &[Vec<T>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged column");
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone().into();
            }
        }
        m
    }

    pub fn diagonal<T: Into<BigInt> + Clone>(entries: &[T]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in entries.iter().enumerate() {
            m[(i, i)] = x.clone().into();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(BigInt::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    /// Appends the columns of `other` to the right of `self`.
    pub fn hconcat(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    pub fn select_columns(&self, idx: &[usize]) -> IntMatrix {
        let mut out = Self::zeros(self.rows, idx.len());
        for i in 0..self.rows {
            for (jj, &j) in idx.iter().enumerate() {
                out[(i, jj)] = self[(i, j)].clone();
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let t = &self.data[src * self.cols + j] * q;
            self.data[dst * self.cols + j] += t;
        }
    }

    /// col[dst] += q * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let t = &self.data[i * self.cols + src] * q;
            self.data[i * self.cols + dst] += t;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let x = &mut self.data[r * self.cols + j];
            *x = -std::mem::take(x);
        }
    }

    fn negate_col(&mut self, c: usize) {
        for i in 0..self.rows {
            let x = &mut self.data[i * self.cols + c];
            *x = -std::mem::take(x);
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, "]")
    }
}

/// Full Smith decomposition `u * a * v = d`, also carrying `u^{-1}`.
#[derive(Clone, Debug)]
pub(crate) struct SmithDecomposition {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub rank: usize,
}

/// Returns `(u, d, v)` with `u * a * v = d`, `u` and `v` unimodular, and `d`
/// diagonal with nonnegative entries forming a divisibility chain.
pub fn smith_normal_form(a: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let s = smith_decomposition(a);
    (s.u, s.d, s.v)
}

pub(crate) fn smith_decomposition(a: &IntMatrix) -> SmithDecomposition {
    let (r, c) = (a.rows, a.cols);
    let mut m = a.clone();
    let mut u = IntMatrix::identity(r);
    let mut u_inv = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);
    let mut rank = 0;

    for t in 0..r.min(c) {
        // Minimal-modulus pivot in the trailing block.
        let Some((pi, pj)) = min_abs_entry(&m, t) else {
            break;
        };
        row_swap(&mut m, &mut u, &mut u_inv, t, pi);
        m.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..r {
                if m[(i, t)].is_zero() {
                    continue;
                }
                let q = round_div(&m[(i, t)], &m[(t, t)]);
                row_add(&mut m, &mut u, &mut u_inv, i, t, &(-q));
                if !m[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..c {
                if m[(t, j)].is_zero() {
                    continue;
                }
                let q = round_div(&m[(t, j)], &m[(t, t)]);
                let nq = -q;
                m.add_col_multiple(j, t, &nq);
                v.add_col_multiple(j, t, &nq);
                if !m[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // A remainder smaller than the pivot survived; move it to (t, t).
                let (pi, pj) = min_abs_in_cross(&m, t);
                row_swap(&mut m, &mut u, &mut u_inv, t, pi);
                m.swap_cols(t, pj);
                v.swap_cols(t, pj);
                continue;
            }
            // Row and column t are clear. Enforce divisibility of the block.
            let bad = (t + 1..r).find(|&i| {
                (t + 1..c).any(|j| !m[(i, j)].is_multiple_of(&m[(t, t)]))
            });
            match bad {
                Some(i) => {
                    row_add(&mut m, &mut u, &mut u_inv, t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if m[(t, t)].is_negative() {
            m.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
        rank += 1;
    }

    SmithDecomposition {
        u,
        u_inv,
        d: m,
        v,
        rank,
    }
}

fn min_abs_entry(m: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..m.rows {
        for j in t..m.cols {
            let x = &m[(i, j)];
            if x.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if m[(bi, bj)].abs() <= x.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Smallest nonzero entry among row t and column t.
fn min_abs_in_cross(m: &IntMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let mut best_abs = m[(t, t)].abs();
    for i in t + 1..m.rows {
        let x = m[(i, t)].abs();
        if !x.is_zero() && x < best_abs {
            best = (i, t);
            best_abs = x;
        }
    }
    for j in t + 1..m.cols {
        let x = m[(t, j)].abs();
        if !x.is_zero() && x < best_abs {
            best = (t, j);
            best_abs = x;
        }
    }
    best
}

fn row_swap(m: &mut IntMatrix, u: &mut IntMatrix, u_inv: &mut IntMatrix, a: usize, b: usize) {
    m.swap_rows(a, b);
    u.swap_rows(a, b);
    u_inv.swap_cols(a, b);
}

/// row[dst] += q * row[src], keeping `u_inv` in sync.
fn row_add(
    m: &mut IntMatrix,
    u: &mut IntMatrix,
    u_inv: &mut IntMatrix,
    dst: usize,
    src: usize,
    q: &BigInt,
) {
    m.add_row_multiple(dst, src, q);
    u.add_row_multiple(dst, src, q);
    // (I + q E_{dst,src})^{-1} = I - q E_{dst,src}, applied on the right.
    u_inv.add_col_multiple(src, dst, &(-q));
}

/// Nearest-integer quotient, so remainders have modulus at most |b|/2.
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    // Floor remainders share the sign of b, so stepping q up always moves the
    // remainder toward zero.
    let (q, r) = a.div_mod_floor(b);
    let twice: BigInt = &r * 2;
    if twice.abs() > b.abs() {
        q + 1
    } else {
        q
    }
}

/// Diagonal entries of a Smith form, `min(rows, cols)` of them.
pub fn smith_diagonal(a: &IntMatrix) -> Vec<BigInt> {
    let d = smith_decomposition(a).d;
    (0..d.rows.min(d.cols)).map(|i| d[(i, i)].clone()).collect()
}

pub fn rank(a: &IntMatrix) -> usize {
    smith_decomposition(a).rank
}

/// Rank of a family of small integer vectors.
pub fn rank_of_vectors(vectors: &[Vec<i64>]) -> usize {
    match vectors.first() {
        None => 0,
        Some(v) => rank(&IntMatrix::from_rows(v.len(), vectors)),
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(a: &IntMatrix) -> BigInt {
    assert_eq!(a.rows, a.cols, "determinant of non-square matrix");
    let n = a.rows;
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                Some(i) => {
                    m.swap_rows(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let val = &m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)];
                m[(i, j)] = val / &prev;
            }
        }
        prev = m[(k, k)].clone();
    }
    sign * &m[(n - 1, n - 1)]
}

/// Finitely generated abelian group `Z^rank + Z/d_1 + ... + Z/d_k` with
/// `d_i >= 2` and `d_i | d_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AbelianGroup {
    rank: usize,
    invariant_factors: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            rank,
            invariant_factors: Vec::new(),
        }
    }

    /// Normalizes an arbitrary list of cyclic orders into invariant-factor
    /// form. Orders 0 contribute free summands, orders 1 vanish.
    pub fn from_cyclic_orders<T: Into<BigInt> + Clone>(rank: usize, orders: &[T]) -> Self {
        let diag = IntMatrix::diagonal(orders);
        let g = cokernel(&diag);
        AbelianGroup {
            rank: rank + g.rank,
            invariant_factors: g.invariant_factors,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn torsion(&self) -> AbelianGroup {
        AbelianGroup {
            rank: 0,
            invariant_factors: self.invariant_factors.clone(),
        }
    }

    pub fn free_part(&self) -> AbelianGroup {
        AbelianGroup::free(self.rank)
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let orders: Vec<BigInt> = self
            .invariant_factors
            .iter()
            .chain(&other.invariant_factors)
            .cloned()
            .collect();
        AbelianGroup::from_cyclic_orders(self.rank + other.rank, &orders)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.invariant_factors.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" + "))
    }
}

/// Cokernel of `a` viewed as a map `Z^cols -> Z^rows`.
pub fn cokernel(a: &IntMatrix) -> AbelianGroup {
    let s = smith_decomposition(a);
    let invariant_factors = (0..s.rank)
        .map(|i| s.d[(i, i)].clone())
        .filter(|d| !d.is_one())
        .collect();
    AbelianGroup {
        rank: a.rows - s.rank,
        invariant_factors,
    }
}

/// Basis of the saturation `Z^n ∩ span_Q(columns)` of the column lattice of
/// `a`, together with the matrix projecting saturated-lattice vectors onto
/// their coordinates in that basis.
#[derive(Clone, Debug)]
pub(crate) struct SaturatedBasis {
    /// `n x d`, columns form a lattice basis.
    pub basis: IntMatrix,
    /// `d x n`; `coords * x` gives basis coordinates of any `x` in the span.
    pub coords: IntMatrix,
    /// `(n - d) x n`; annihilates exactly the span.
    pub complement: IntMatrix,
}

pub(crate) fn saturated_basis(a: &IntMatrix) -> SaturatedBasis {
    let n = a.rows;
    let s = smith_decomposition(a);
    let d = s.rank;
    let basis = s.u_inv.select_columns(&(0..d).collect::<Vec<_>>());
    let mut coords = IntMatrix::zeros(d, n);
    let mut complement = IntMatrix::zeros(n - d, n);
    for j in 0..n {
        for i in 0..d {
            coords[(i, j)] = s.u[(i, j)].clone();
        }
        for i in d..n {
            complement[(i - d, j)] = s.u[(i, j)].clone();
        }
    }
    SaturatedBasis {
        basis,
        coords,
        complement,
    }
}
