//! Finite lattice point sets and their convex hulls.
//!
//! A [`Polytope`] keeps the source [`PointSet`] it was built from; faces are
//! identified by the sorted indices of *all* source points lying on them, so a
//! face of a finite set is the set itself intersected with a face of its hull.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::hull;
use crate::lattice::{add, affine_rank, dot, AffineSpan};

pub type Point = Vec<BigInt>;

/// Distinct integer points of a fixed ambient dimension, kept in input order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    dim: usize,
    points: Vec<Point>,
}

impl PointSet {
    /// Rejects wrong-length points; duplicates are dropped (first occurrence wins).
    pub fn new(dim: usize, points: Vec<Point>) -> Result<Self> {
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: p.len() });
        }
        Ok(Self::new_dedup(dim, points))
    }

    pub(crate) fn new_dedup(dim: usize, points: Vec<Point>) -> Self {
        let mut seen = HashMap::with_capacity(points.len());
        let mut out = Vec::with_capacity(points.len());
        for p in points {
            debug_assert_eq!(p.len(), dim);
            if seen.insert(p.clone(), ()).is_none() {
                out.push(p);
            }
        }
        PointSet { dim, points: out }
    }

    pub fn empty(dim: usize) -> Self {
        PointSet { dim, points: Vec::new() }
    }

    /// Convenience constructor; the dimension is taken from the first row.
    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let dim = rows.first().map_or(0, Vec::len);
        let pts = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        Self::new(dim, pts).expect("rows of equal length")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }

    pub fn index_of(&self, p: &[BigInt]) -> Option<usize> {
        self.points.iter().position(|q| q.as_slice() == p)
    }

    pub fn contains_point(&self, p: &[BigInt]) -> bool {
        self.index_of(p).is_some()
    }

    /// The points at `indices`, in the given order.
    pub fn subset(&self, indices: &[usize]) -> PointSet {
        PointSet::new_dedup(self.dim, indices.iter().map(|&i| self.points[i].clone()).collect())
    }

    /// Dimension of the affine span; `None` for the empty set.
    pub fn affine_dim(&self) -> Option<usize> {
        affine_rank(&self.points)
    }

    pub fn translate(&self, v: &[BigInt]) -> PointSet {
        PointSet { dim: self.dim, points: self.points.iter().map(|p| add(p, v)).collect() }
    }

    /// Same points as a set, ignoring order.
    pub fn same_set(&self, other: &PointSet) -> bool {
        self.dim == other.dim
            && self.len() == other.len()
            && self.points.iter().all(|p| other.contains_point(p))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.points.iter().map(|p| p.iter().map(ToString::to_string).collect::<Vec<_>>()))
            .finish()
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a Point;
    type IntoIter = std::slice::Iter<'a, Point>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// A facet inequality `normal · x <= offset` (ambient coordinates) with the
/// source points it contains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
    pub points: Vec<usize>,
}

/// A face of a finite point set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Face {
    /// Sorted indices of every source point on the face.
    pub points: Vec<usize>,
    /// A covector whose support face is exactly this face.
    pub witness: Vec<BigInt>,
    pub dim: usize,
}

/// Convex hull of a point set in exact V- and H-representation.
#[derive(Clone, Debug)]
pub struct Polytope {
    source: PointSet,
    span: AffineSpan,
    vertices: Vec<usize>,
    facets: Vec<Facet>,
    /// Facets in the span's local coordinates (same order as `facets`).
    local_facets: Vec<hull::HullFacet>,
    local_points: Vec<Point>,
}

pub fn convex_hull(p: &PointSet) -> Result<Polytope> {
    Polytope::new(p.clone())
}

impl Polytope {
    pub fn new(source: PointSet) -> Result<Self> {
        let span = AffineSpan::of_points(source.points(), source.dim()).ok_or(Error::EmptySet)?;
        let local_points: Vec<Point> = source.iter().map(|p| span.local(p)).collect();
        let d = span.dim();
        let local_facets = if d == 0 { Vec::new() } else { hull::facets(&local_points) };
        let facets = local_facets
            .iter()
            .map(|f| {
                let normal = span.lift_covector(&f.normal);
                let offset = &f.offset + dot(&normal, span.base());
                Facet { normal, offset, points: f.points.clone() }
            })
            .collect::<Vec<_>>();

        let vertices = if d == 0 {
            vec![0]
        } else {
            let mut incident: Vec<Vec<usize>> = vec![Vec::new(); source.len()];
            for (fi, f) in local_facets.iter().enumerate() {
                for &p in &f.points {
                    incident[p].push(fi);
                }
            }
            (0..source.len())
                .filter(|&i| {
                    let fs = &incident[i];
                    if fs.is_empty() {
                        return false;
                    }
                    let mut common: Vec<usize> = local_facets[fs[0]].points.clone();
                    for &fi in &fs[1..] {
                        let other = &local_facets[fi].points;
                        common.retain(|x| other.binary_search(x).is_ok());
                    }
                    common == [i]
                })
                .collect()
        };

        Ok(Polytope { source, span, vertices, facets, local_facets, local_points })
    }

    pub fn source(&self) -> &PointSet {
        &self.source
    }

    pub fn ambient_dim(&self) -> usize {
        self.source.dim()
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn span(&self) -> &AffineSpan {
        &self.span
    }

    /// Indices (into the source) of the vertices, ascending.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn vertex_set(&self) -> PointSet {
        self.source.subset(&self.vertices)
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Equations `E (x - base) = 0` of the affine span.
    pub fn equations(&self) -> Vec<(Vec<BigInt>, BigInt)> {
        let e = self.span.equations();
        (0..e.rows())
            .map(|i| {
                let row = e.row(i).to_vec();
                let rhs = dot(&row, self.span.base());
                (row, rhs)
            })
            .collect()
    }

    /// Exact membership of an arbitrary integer point in the hull.
    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.span.contains(x) && self.facets.iter().all(|f| dot(&f.normal, x) <= f.offset)
    }

    pub fn support_face(&self, xi: &[BigInt]) -> (Face, BigInt) {
        let vals: Vec<BigInt> = self.source.iter().map(|p| dot(xi, p)).collect();
        let max = vals.iter().max().cloned().unwrap_or_default();
        let points: Vec<usize> = (0..vals.len()).filter(|&i| vals[i] == max).collect();
        let dim = self.face_dim(&points);
        (Face { points, witness: xi.to_vec(), dim }, max)
    }

    fn face_dim(&self, points: &[usize]) -> usize {
        let pts: Vec<Point> = points.iter().map(|&i| self.local_points[i].clone()).collect();
        affine_rank(&pts).unwrap_or(0)
    }

    /// All nonempty faces including the polytope itself, ordered by dimension
    /// and then by point-index list.
    pub fn faces(&self) -> Vec<Face> {
        let all: Vec<usize> = (0..self.source.len()).collect();
        let mut keys: BTreeSet<Vec<usize>> = BTreeSet::new();
        keys.insert(all.clone());
        let mut queue: Vec<Vec<usize>> = Vec::new();
        for f in &self.local_facets {
            if keys.insert(f.points.clone()) {
                queue.push(f.points.clone());
            }
        }
        while let Some(face) = queue.pop() {
            for f in &self.local_facets {
                let meet: Vec<usize> =
                    face.iter().copied().filter(|x| f.points.binary_search(x).is_ok()).collect();
                if !meet.is_empty() && keys.insert(meet.clone()) {
                    queue.push(meet);
                }
            }
        }
        let mut faces: Vec<Face> = keys
            .into_iter()
            .map(|points| {
                let mut witness = vec![BigInt::zero(); self.ambient_dim()];
                if points.len() != all.len() {
                    for f in &self.facets {
                        if points.iter().all(|x| f.points.binary_search(x).is_ok()) {
                            witness = add(&witness, &f.normal);
                        }
                    }
                }
                let dim = self.face_dim(&points);
                Face { points, witness, dim }
            })
            .collect();
        faces.sort_by(|a, b| (a.dim, &a.points).cmp(&(b.dim, &b.points)));
        faces
    }

    /// Normalized volume in the saturated lattice of the affine span
    /// (`dim()`-dimensional; a single point has volume 1).
    pub fn volume(&self) -> BigInt {
        let d = self.dim();
        if d <= 1 {
            return full_dim_volume(&self.local_points, d);
        }
        let v0 = lex_min(&self.local_points);
        let mut total = BigInt::zero();
        for f in &self.local_facets {
            let h = &f.offset - dot(&f.normal, &self.local_points[v0]);
            if h.is_zero() {
                continue;
            }
            let facet_pts: Vec<Point> = f.points.iter().map(|&i| self.local_points[i].clone()).collect();
            total += h * intrinsic_volume(&facet_pts, d);
        }
        total
    }
}

fn lex_min(points: &[Point]) -> usize {
    (0..points.len()).min_by(|&a, &b| points[a].cmp(&points[b])).unwrap()
}

/// Volume of points spanning their own affine hull, re-charted into `Z^k`.
fn intrinsic_volume(points: &[Point], ambient: usize) -> BigInt {
    let span = AffineSpan::of_points(points, ambient).expect("nonempty");
    let local: Vec<Point> = points.iter().map(|p| span.local(p)).collect();
    full_dim_volume(&local, span.dim())
}

/// Normalized volume of a full-dimensional set in `Z^d`: fan from the
/// lexicographically smallest vertex over the facets not containing it.
fn full_dim_volume(points: &[Point], d: usize) -> BigInt {
    match d {
        0 => BigInt::one(),
        1 => {
            let min = points.iter().map(|p| &p[0]).min().unwrap();
            let max = points.iter().map(|p| &p[0]).max().unwrap();
            max - min
        }
        _ => {
            let v0 = lex_min(points);
            let mut total = BigInt::zero();
            for f in hull::facets(points) {
                let h = &f.offset - dot(&f.normal, &points[v0]);
                debug_assert!(!h.is_negative());
                if h.is_zero() {
                    continue;
                }
                let facet_pts: Vec<Point> = f.points.iter().map(|&i| points[i].clone()).collect();
                total += h * intrinsic_volume(&facet_pts, d);
            }
            total
        }
    }
}

/// Normalized volume of `conv(P)` inside the saturated lattice of its affine
/// span, in dimension `dim(P)`; a single point has volume 1.
pub fn lattice_volume(p: &PointSet) -> Result<BigInt> {
    if p.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(convex_hull(p)?.volume())
}

/// Normalized `d`-dimensional volume: sets of dimension below `d` report 0.
pub fn normalized_volume(p: &PointSet, d: usize) -> Result<BigInt> {
    match p.affine_dim() {
        None => Err(Error::EmptySet),
        Some(k) if k < d => Ok(BigInt::zero()),
        Some(k) if k > d => Err(Error::invalid(format!("set of dimension {k} measured in dimension {d}"))),
        Some(_) => lattice_volume(p),
    }
}

pub fn support_face(p: &Polytope, xi: &[BigInt]) -> (Face, BigInt) {
    p.support_face(xi)
}

pub fn enumerate_faces(p: &Polytope) -> Vec<Face> {
    p.faces()
}

/// All pairwise sums, deduplicated.
pub fn minkowski_sum(a: &PointSet, b: &PointSet) -> Result<PointSet> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: b.dim() });
    }
    let mut pts = Vec::with_capacity(a.len() * b.len());
    for p in a {
        for q in b {
            pts.push(add(p, q));
        }
    }
    Ok(PointSet::new_dedup(a.dim(), pts))
}

/// Vertices of `conv(A + B)`, computed from the vertices of each summand.
pub(crate) fn minkowski_vertices(a: &PointSet, b: &PointSet) -> Result<PointSet> {
    let va = convex_hull(a)?.vertex_set();
    let vb = convex_hull(b)?.vertex_set();
    Ok(convex_hull(&minkowski_sum(&va, &vb)?)?.vertex_set())
}

/// Whether `conv(A)` and `conv(B)` share a point: `0 ∈ conv(A - B)`.
pub fn hulls_intersect(a: &PointSet, b: &PointSet) -> Result<bool> {
    if a.is_empty() || b.is_empty() {
        return Ok(false);
    }
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: b.dim() });
    }
    let mut diffs = Vec::with_capacity(a.len() * b.len());
    for p in a {
        for q in b {
            diffs.push(crate::lattice::sub(p, q));
        }
    }
    let hull = convex_hull(&PointSet::new_dedup(a.dim(), diffs))?;
    Ok(hull.contains(&vec![BigInt::zero(); a.dim()]))
}

/// All lattice points of `conv(P)`, found by filtering its bounding box.
pub fn lattice_points(p: &Polytope) -> PointSet {
    let n = p.ambient_dim();
    let src = p.source();
    let lo: Vec<BigInt> = (0..n).map(|j| src.iter().map(|q| &q[j]).min().unwrap().clone()).collect();
    let hi: Vec<BigInt> = (0..n).map(|j| src.iter().map(|q| &q[j]).max().unwrap().clone()).collect();
    let mut out = Vec::new();
    let mut cur = lo.clone();
    loop {
        if p.contains(&cur) {
            out.push(cur.clone());
        }
        let mut j = 0;
        loop {
            if j == n {
                return PointSet::new_dedup(n, out);
            }
            if cur[j] < hi[j] {
                cur[j] += 1;
                break;
            }
            cur[j] = lo[j].clone();
            j += 1;
        }
    }
}
