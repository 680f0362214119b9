//! Exact integer linear algebra.
//!
//! Everything here works over [`BigInt`]: dense integer matrices, Smith and
//! Hermite normal forms, saturated affine spans of integer point sets and the
//! quotient projections `Z^n -> Z^n / (aff F ∩ Z^n)` used throughout the
//! polytope code.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polytope::PointSet;

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from row vectors; `cols` fixes the width when `rows` is empty.
    ///
    /// Panics if a row has the wrong length.
    pub fn from_rows(cols: usize, rows: &[Vec<BigInt>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix row");
            data.extend(r.iter().cloned());
        }
        IntMatrix { rows: rows.len(), cols, data }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let rows: Vec<Vec<BigInt>> =
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        Self::from_rows(cols, &rows)
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column has wrong length");
            for (i, x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Rows `range` as a new matrix.
    pub fn select_rows(&self, range: std::ops::Range<usize>) -> IntMatrix {
        let rows: Vec<Vec<BigInt>> = range.map(|i| self.row(i).to_vec()).collect();
        IntMatrix::from_rows(self.cols, &rows)
    }

    /// Columns `range` as a new matrix.
    pub fn select_columns(&self, range: std::ops::Range<usize>) -> IntMatrix {
        let cols: Vec<Vec<BigInt>> = range.map(|j| self.column(j)).collect();
        IntMatrix::from_columns(self.rows, &cols)
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    /// Row-vector-matrix product `v^T M`.
    pub fn apply_left(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.rows, "vector length mismatch");
        let mut out = vec![BigInt::zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o += vi * self.get(i, j);
            }
        }
        out
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Determinant by fraction-free Bareiss elimination. Panics on non-square input.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1)
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        row_hermite(self).pivots.len()
    }

    /// Exact inverse of a unimodular matrix; `None` if the matrix is singular or
    /// its inverse is not integral.
    pub fn inverse(&self) -> Option<IntMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let ech = row_hermite(self);
        // u * self = h; self is invertible over Z iff h is the identity.
        if ech.h == IntMatrix::identity(self.rows) {
            Some(ech.u)
        } else {
            None
        }
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

    /// row[target] += k * row[src]
    fn add_row(&mut self, target: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(src, j) * k;
            self.data[target * self.cols + j] += v;
        }
    }

    /// col[target] += k * col[src]
    fn add_col(&mut self, target: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self.get(i, src) * k;
            self.data[i * self.cols + target] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|i| {
                self.row(i).iter().map(ToString::to_string).collect::<Vec<_>>()
            }))
            .finish()
    }
}

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// gcd of all entries (0 for the zero vector).
pub(crate) fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Divides a vector by the gcd of its entries.
pub(crate) fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = content(&v);
    if g.is_zero() || g.is_one() {
        v
    } else {
        v.into_iter().map(|x| x / &g).collect()
    }
}

/// `U * M * V = D` with `U`, `V` unimodular and `D` diagonal, `d_1 | d_2 | ...`.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Nonzero diagonal entries of `D`.
    pub fn invariants(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d.get(i, i).clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariants().len()
    }
}

pub fn smith_decompose(m: &IntMatrix) -> SmithDecomposition {
    let (r, c) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);

    for t in 0..r.min(c) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    let x = a.get(i, j);
                    if x.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| x.abs() < a.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return SmithDecomposition { u, d: a, v };
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..r {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = -(a.get(i, t) / a.get(t, t));
                a.add_row(i, t, &q);
                u.add_row(i, t, &q);
                if !a.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..c {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = -(a.get(t, j) / a.get(t, t));
                a.add_col(j, t, &q);
                v.add_col(j, t, &q);
                if !a.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let pivot = a.get(t, t).clone();
            let offender = (t + 1..r)
                .find(|&i| (t + 1..c).any(|j| !a.get(i, j).is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row(t, i, &one);
                    u.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithDecomposition { u, d: a, v }
}

/// Nonzero Smith invariants of `m`.
pub fn smith_invariants(m: &IntMatrix) -> Vec<BigInt> {
    smith_decompose(m).invariants()
}

/// Row-style Hermite normal form `u * m = h` together with `u^{-1}`.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    pub h: IntMatrix,
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    /// Pivot column of each nonzero row of `h`.
    pub pivots: Vec<usize>,
}

/// Hermite normal form by unimodular row operations: `h` is in row echelon form
/// with positive pivots and entries above each pivot reduced into `[0, pivot)`.
pub fn row_hermite(m: &IntMatrix) -> RowEchelon {
    let (rows, cols) = (m.rows, m.cols);
    let mut h = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut u_inv = IntMatrix::identity(rows);
    let mut pivots = Vec::new();
    let mut r = 0;

    // Every row op on `u` is mirrored on `u_inv` as the inverse column op.
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let best = (r..rows)
                .filter(|&i| !h.get(i, c).is_zero())
                .min_by(|&x, &y| h.get(x, c).abs().cmp(&h.get(y, c).abs()));
            let Some(p) = best else { break };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            u_inv.swap_cols(r, p);
            let mut done = true;
            for i in r + 1..rows {
                if h.get(i, c).is_zero() {
                    continue;
                }
                let q = -(h.get(i, c) / h.get(r, c));
                h.add_row(i, r, &q);
                u.add_row(i, r, &q);
                u_inv.add_col(r, i, &-&q);
                if !h.get(i, c).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.get(r, c).is_zero() {
            continue;
        }
        if h.get(r, c).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
            u_inv.negate_col(r);
        }
        for i in 0..r {
            let q = -(h.get(i, c).div_floor(h.get(r, c)));
            h.add_row(i, r, &q);
            u.add_row(i, r, &q);
            u_inv.add_col(r, i, &-&q);
        }
        pivots.push(c);
        r += 1;
    }
    RowEchelon { h, u, u_inv, pivots }
}

/// Incremental fraction-free row reduction for rank / independence tests.
#[derive(Clone, Debug, Default)]
pub(crate) struct RowReducer {
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl RowReducer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` if it is independent of the rows seen so far; returns whether it was added.
    pub fn insert(&mut self, v: &[BigInt]) -> bool {
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            if w[*p].is_zero() {
                continue;
            }
            let a = &row[*p];
            let b = w[*p].clone();
            for (x, y) in w.iter_mut().zip(row) {
                *x = &*x * a - &b * y;
            }
            w = primitive(w);
        }
        match w.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                self.rows.push((p, w));
                true
            }
            None => false,
        }
    }
}

/// Rank of the affine span of a set of points (`None` for the empty set).
pub(crate) fn affine_rank(points: &[Vec<BigInt>]) -> Option<usize> {
    let (first, rest) = points.split_first()?;
    let mut red = RowReducer::new();
    for p in rest {
        red.insert(&sub(p, first));
    }
    Some(red.rank())
}

/// Saturated affine span `aff(F) ∩ Z^n` of a finite integer point set, with an
/// integral coordinate chart onto `Z^d` and the canonical quotient equations.
#[derive(Clone, Debug)]
pub struct AffineSpan {
    ambient: usize,
    base: Vec<BigInt>,
    /// d x n; rows extend to a unimodular matrix.
    coords: IntMatrix,
    /// n x d; columns are a basis of the saturated direction lattice.
    basis: IntMatrix,
    /// (n - d) x n, Hermite-reduced; kernel is the direction lattice.
    equations: IntMatrix,
}

impl AffineSpan {
    pub fn of_points(points: &[Vec<BigInt>], ambient: usize) -> Option<Self> {
        let base = points.first()?.clone();
        let diffs: Vec<Vec<BigInt>> = points[1..].iter().map(|p| sub(p, &base)).collect();
        let m = IntMatrix::from_columns(ambient, &diffs);
        let ech = row_hermite(&m);
        let d = ech.pivots.len();
        let coords = ech.u.select_rows(0..d);
        let basis = ech.u_inv.select_columns(0..d);
        let eq = ech.u.select_rows(d..ambient);
        let equations = row_hermite(&eq).h;
        Some(AffineSpan { ambient, base, coords, basis, equations })
    }

    pub fn dim(&self) -> usize {
        self.coords.rows
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn base(&self) -> &[BigInt] {
        &self.base
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn coordinate_map(&self) -> &IntMatrix {
        &self.coords
    }

    pub fn equations(&self) -> &IntMatrix {
        &self.equations
    }

    /// Coordinates in `Z^d` of a point of the span.
    pub fn local(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.coords.apply(&sub(x, &self.base))
    }

    pub fn global(&self, y: &[BigInt]) -> Vec<BigInt> {
        add(&self.base, &self.basis.apply(y))
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.quotient(x).iter().all(Zero::is_zero)
    }

    /// Image of `x` under the quotient by the span, with the span sent to 0.
    pub fn quotient(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.equations.apply(&sub(x, &self.base))
    }

    /// Pulls a covector on `Z^d` back to an ambient covector.
    pub fn lift_covector(&self, eta: &[BigInt]) -> Vec<BigInt> {
        self.coords.apply_left(eta)
    }
}

/// Affine projection `pi_F` killing `aff(F)`, surjective on lattices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMap {
    pub source_dim: usize,
    pub target_dim: usize,
    /// target_dim x source_dim, in Hermite normal form.
    pub map: IntMatrix,
    /// source_dim x (source_dim - target_dim).
    pub kernel_basis: IntMatrix,
    /// A point of `F`; it is sent to the origin.
    pub origin: Vec<BigInt>,
}

impl QuotientMap {
    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.map.apply(&sub(x, &self.origin))
    }

    pub fn apply_set(&self, set: &PointSet) -> PointSet {
        PointSet::new_dedup(self.target_dim, set.iter().map(|p| self.apply(p)).collect())
    }
}

pub fn quotient_projection(f: &PointSet, ambient_dim: usize) -> Result<QuotientMap> {
    if f.dim() != ambient_dim {
        return Err(Error::DimensionMismatch { expected: ambient_dim, found: f.dim() });
    }
    let span = AffineSpan::of_points(f.points(), ambient_dim).ok_or(Error::EmptySet)?;
    Ok(QuotientMap {
        source_dim: ambient_dim,
        target_dim: ambient_dim - span.dim(),
        map: span.equations.clone(),
        kernel_basis: span.basis.clone(),
        origin: span.base.clone(),
    })
}

/// Index `|L / <P - P>|` of the difference lattice inside the saturated lattice
/// `L = aff(P) ∩ Z^n`.
pub fn lattice_index(p: &PointSet) -> Result<BigInt> {
    let (first, rest) = p.points().split_first().ok_or(Error::EmptySet)?;
    let diffs: Vec<Vec<BigInt>> = rest.iter().map(|x| sub(x, first)).collect();
    let m = IntMatrix::from_columns(p.dim(), &diffs);
    Ok(smith_invariants(&m).iter().product())
}

/// Coordinates of `P` in the affine lattice it generates: the first point goes
/// to the origin and `<P - P>` becomes `Z^r`.
pub fn generated_lattice_chart(p: &PointSet) -> Result<PointSet> {
    let (first, rest) = p.points().split_first().ok_or(Error::EmptySet)?;
    let diffs: Vec<Vec<BigInt>> = rest.iter().map(|x| sub(x, first)).collect();
    // Rows of the transposed difference matrix; u^{-1} expresses each row in
    // the Hermite basis of the lattice they generate.
    let m = IntMatrix::from_rows(p.dim(), &diffs);
    let ech = row_hermite(&m);
    let r = ech.pivots.len();
    let mut pts = vec![vec![BigInt::zero(); r]];
    for j in 0..diffs.len() {
        pts.push(ech.u_inv.row(j)[..r].to_vec());
    }
    Ok(PointSet::new_dedup(r, pts))
}
