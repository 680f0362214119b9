//! Mixed volumes: the inclusion-exclusion oracle, the vanishing criterion,
//! the product splitting, and Khovanskii's formula through regular subdivisions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{sub, AffineSpan, RowReducer};
use crate::polytope::{convex_hull, minkowski_vertices, Point, PointSet};

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn check_tuple(ps: &[PointSet]) -> Result<usize> {
    let n = ps.len();
    for p in ps {
        if p.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: p.dim() });
        }
        if p.is_empty() {
            return Err(Error::EmptySet);
        }
    }
    Ok(n)
}

/// Normalized mixed volume of `n` point sets in `Z^n`, computed as
/// `(1/n!) * sum over nonempty S of (-1)^(n-|S|) Vol(sum of P_i, i in S)`.
///
/// The empty tuple has mixed volume 1.
pub fn mixed_volume(ps: &[PointSet]) -> Result<BigInt> {
    let n = check_tuple(ps)?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    // sums[mask] holds the vertices of the Minkowski sum over `mask`.
    let full = 1usize << n;
    let mut sums: Vec<Option<PointSet>> = vec![None; full];
    let mut total = BigInt::zero();
    for mask in 1..full {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let hull = if rest == 0 {
            convex_hull(&ps[low])?
        } else {
            let prev = sums[rest].as_ref().expect("smaller masks come first");
            convex_hull(&minkowski_vertices(prev, &ps[low])?)?
        };
        if hull.dim() == n {
            let vol = hull.volume();
            if (n - mask.count_ones() as usize).is_multiple_of(2) {
                total += vol;
            } else {
                total -= vol;
            }
        }
        sums[mask] = Some(hull.vertex_set());
    }
    let (q, r) = total.div_rem(&factorial(n));
    if !r.is_zero() {
        return Err(Error::check(format!("polarization sum {total} not divisible by {n}!")));
    }
    Ok(q)
}

/// Dimension of the Minkowski sum of the given sets: the rank of all their
/// difference vectors.
pub fn sum_dim(ps: &[&PointSet]) -> usize {
    let mut red = RowReducer::new();
    for p in ps {
        if let Some(first) = p.points().first() {
            for q in &p.points()[1..] {
                red.insert(&sub(q, first));
            }
        }
    }
    red.rank()
}

/// A subset `S` (0-based indices, ascending) with `dim(sum of P_i, i in S) < |S|`,
/// searched by increasing size and then lexicographically.
pub fn mv_zero_witness(ps: &[PointSet]) -> Result<Option<Vec<usize>>> {
    let n = check_tuple(ps)?;
    for size in 1..=n {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let sets: Vec<&PointSet> = combo.iter().map(|&i| &ps[i]).collect();
            if sum_dim(&sets) < size {
                return Ok(Some(combo));
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    Ok(None)
}

pub(crate) fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Mixed volume of `k` sets whose Minkowski sum lies in a `k`-dimensional
/// affine subspace, measured in the saturated lattice of that subspace.
///
/// Returns 0 when the sum has dimension below `k` and an input error when it
/// exceeds `k`. For `k = 0` the value is 1.
pub fn mixed_volume_in_span(ps: &[PointSet], k: usize) -> Result<BigInt> {
    if ps.len() != k {
        return Err(Error::invalid(format!("{} sets for a {k}-dimensional mixed volume", ps.len())));
    }
    if k == 0 {
        return Ok(BigInt::one());
    }
    let ambient = ps[0].dim();
    let (span, d) = direction_span(ps, ambient)?;
    if d > k {
        return Err(Error::invalid(format!("sets span dimension {d}, expected at most {k}")));
    }
    if d < k {
        return Ok(BigInt::zero());
    }
    let local: Vec<PointSet> = ps
        .iter()
        .map(|p| {
            let first = &p.points()[0];
            PointSet::new_dedup(k, p.iter().map(|q| span.local(&sub(q, first))).collect())
        })
        .collect();
    mixed_volume(&local)
}

/// Saturated linear span of the difference vectors of all sets.
fn direction_span(ps: &[PointSet], ambient: usize) -> Result<(AffineSpan, usize)> {
    let mut dirs: Vec<Point> = vec![vec![BigInt::zero(); ambient]];
    for p in ps {
        if p.dim() != ambient {
            return Err(Error::DimensionMismatch { expected: ambient, found: p.dim() });
        }
        let first = p.points().first().ok_or(Error::EmptySet)?;
        dirs.extend(p.points()[1..].iter().map(|q| sub(q, first)));
    }
    let span = AffineSpan::of_points(&dirs, ambient).expect("origin included");
    let d = span.dim();
    Ok((span, d))
}

/// `MV(P_1..P_k) * MV(pi(P_{k+1})..pi(P_n))`, where the first `k` sets lie in
/// translates of a common `k`-dimensional subspace `Q` and `pi` is the
/// quotient by `Q`.
pub fn mv_split(ps: &[PointSet], k: usize) -> Result<BigInt> {
    let n = check_tuple(ps)?;
    if k > n {
        return Err(Error::invalid(format!("split index {k} exceeds {n}")));
    }
    if k == 0 {
        return mixed_volume(ps);
    }
    let (span, d) = direction_span(&ps[..k], n)?;
    if d > k {
        return Err(Error::invalid(format!(
            "the first {k} sets span a {d}-dimensional space"
        )));
    }
    if d < k {
        return Ok(BigInt::zero());
    }
    let head = mixed_volume_in_span(&ps[..k], k)?;
    if head.is_zero() {
        return Ok(head);
    }
    let tail: Vec<PointSet> = ps[k..]
        .iter()
        .map(|p| PointSet::new_dedup(n - k, p.iter().map(|q| span.quotient(q)).collect()))
        .collect();
    Ok(head * mixed_volume(&tail)?)
}

/// A point set with a rational height on every point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift {
    pub base: PointSet,
    pub heights: Vec<BigRational>,
}

impl Lift {
    pub fn new(base: PointSet, heights: Vec<BigRational>) -> Result<Self> {
        if heights.len() != base.len() {
            return Err(Error::invalid(format!(
                "{} heights for {} points",
                heights.len(),
                base.len()
            )));
        }
        Ok(Lift { base, heights })
    }

    pub fn from_i64(base: PointSet, heights: &[i64]) -> Result<Self> {
        Self::new(base, heights.iter().map(|&h| BigRational::from_integer(h.into())).collect())
    }

    pub fn flat(base: PointSet) -> Self {
        let heights = vec![BigRational::zero(); base.len()];
        Lift { base, heights }
    }
}

/// Points of the base on the face of the lift supported by `(xi, 1)`.
pub fn regular_cell(lift: &Lift, xi: &[BigRational]) -> PointSet {
    let vals: Vec<BigRational> = lift
        .base
        .iter()
        .zip(&lift.heights)
        .map(|(p, h)| {
            p.iter()
                .zip(xi)
                .fold(h.clone(), |acc, (x, c)| acc + c * BigRational::from_integer(x.clone()))
        })
        .collect();
    let max = vals.iter().max().expect("nonempty base").clone();
    let pts = lift
        .base
        .iter()
        .zip(&vals)
        .filter(|(_, v)| **v == max)
        .map(|(p, _)| p.clone())
        .collect();
    PointSet::new_dedup(lift.base.dim(), pts)
}

/// One nonzero-candidate term of Khovanskii's sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiTerm {
    pub xi: Vec<BigRational>,
    pub cells: Vec<PointSet>,
    pub term: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MVReport {
    pub value: BigInt,
    pub per_xi: Option<Vec<XiTerm>>,
}

/// Mixed volume as the sum over upper facets `(xi, 1)` of the summed lift of
/// the mixed volumes of the corresponding cells.
pub fn khovanskii_mv(lifts: &[Lift]) -> Result<MVReport> {
    let bases: Vec<PointSet> = lifts.iter().map(|l| l.base.clone()).collect();
    let n = check_tuple(&bases)?;
    if n == 0 {
        let term = XiTerm { xi: Vec::new(), cells: Vec::new(), term: BigInt::one() };
        return Ok(MVReport { value: BigInt::one(), per_xi: Some(vec![term]) });
    }
    let scale = lifts
        .iter()
        .flat_map(|l| l.heights.iter())
        .fold(BigInt::one(), |acc, h| acc.lcm(h.denom()));
    let lifted: Vec<PointSet> = lifts
        .iter()
        .map(|l| {
            let pts = l
                .base
                .iter()
                .zip(&l.heights)
                .map(|(p, h)| {
                    let mut q = p.clone();
                    q.push((h * BigRational::from_integer(scale.clone())).to_integer());
                    q
                })
                .collect();
            PointSet::new_dedup(n + 1, pts)
        })
        .collect();
    let mut sum = convex_hull(&lifted[0])?.vertex_set();
    for l in &lifted[1..] {
        sum = minkowski_vertices(&sum, l)?;
    }
    let mut pts: Vec<Point> = sum.points().to_vec();
    for p in sum.iter() {
        let mut q = p.clone();
        q[n] -= 1;
        pts.push(q);
    }
    let hull = convex_hull(&PointSet::new_dedup(n + 1, pts))?;
    if hull.dim() < n + 1 {
        return Ok(MVReport { value: BigInt::zero(), per_xi: Some(Vec::new()) });
    }
    let mut terms = Vec::new();
    let mut value = BigInt::zero();
    for f in hull.facets() {
        let c = &f.normal[n];
        if c <= &BigInt::zero() {
            continue;
        }
        let denom = c * &scale;
        let xi: Vec<BigRational> =
            f.normal[..n].iter().map(|a| BigRational::new(a.clone(), denom.clone())).collect();
        let cells: Vec<PointSet> = lifts.iter().map(|l| regular_cell(l, &xi)).collect();
        let term = mixed_volume(&cells)?;
        value += &term;
        terms.push(XiTerm { xi, cells, term });
    }
    Ok(MVReport { value, per_xi: Some(terms) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(rows: &[Vec<i64>]) -> PointSet {
        PointSet::from_i64(rows)
    }

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    #[test]
    fn polarization_examples() {
        let e1 = ps(&[vec![0, 0], vec![1, 0]]);
        let e2 = ps(&[vec![0, 0], vec![0, 1]]);
        assert_eq!(mixed_volume(&[e1.clone(), e2]).unwrap(), BigInt::from(1));
        let tri = ps(&[vec![0, 0], vec![1, 0], vec![0, 1]]);
        assert_eq!(mixed_volume(&[tri.clone(), tri]).unwrap(), BigInt::from(1));
        let diag = ps(&[vec![0, 0], vec![1, 1]]);
        let anti = ps(&[vec![1, 0], vec![0, 1]]);
        assert_eq!(mixed_volume(&[diag, anti]).unwrap(), BigInt::from(2));
        assert_eq!(mixed_volume(&[e1.clone(), e1.clone()]).unwrap(), BigInt::zero());
        assert!(matches!(mixed_volume(&[e1]), Err(Error::DimensionMismatch { .. })));
        assert_eq!(mixed_volume(&[]).unwrap(), BigInt::one());
    }

    #[test]
    fn zero_witness_examples() {
        let e1 = ps(&[vec![0, 0], vec![1, 0]]);
        let e2 = ps(&[vec![0, 0], vec![0, 1]]);
        assert_eq!(mv_zero_witness(&[e1.clone(), e1.clone()]).unwrap(), Some(vec![0, 1]));
        assert_eq!(mv_zero_witness(&[e1.clone(), e2]).unwrap(), None);
        let pt = ps(&[vec![3, 3]]);
        assert_eq!(mv_zero_witness(&[e1, pt]).unwrap(), Some(vec![1]));
    }

    #[test]
    fn split_examples() {
        let a = ps(&[vec![1, 0], vec![2, 0]]);
        let b = ps(&[vec![0, 1], vec![0, 2]]);
        assert_eq!(mv_split(&[a.clone(), b.clone()], 1).unwrap(), BigInt::from(1));
        assert_eq!(mv_split(&[a.clone(), b.clone()], 2).unwrap(), BigInt::from(1));
        let flat = ps(&[vec![0, 5], vec![3, 5]]);
        assert_eq!(mv_split(&[a.clone(), flat], 1).unwrap(), BigInt::zero());
        let sq = ps(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert!(mv_split(&[sq, a], 1).is_err());
    }

    #[test]
    fn regular_cell_examples() {
        let base = ps(&[vec![0], vec![1], vec![2]]);
        let dip = Lift::from_i64(base.clone(), &[0, -1, 0]).unwrap();
        assert!(regular_cell(&dip, &[q(0)]).same_set(&ps(&[vec![0], vec![2]])));
        let flat = Lift::flat(base.clone());
        assert!(regular_cell(&flat, &[q(0)]).same_set(&base));
        let tent = Lift::from_i64(base, &[0, 1, 0]).unwrap();
        assert!(regular_cell(&tent, &[q(-1)]).same_set(&ps(&[vec![0], vec![1]])));
    }

    #[test]
    fn khovanskii_examples() {
        let base = ps(&[vec![0], vec![1], vec![2]]);
        let tent = Lift::from_i64(base.clone(), &[0, 1, 0]).unwrap();
        let r = khovanskii_mv(&[tent]).unwrap();
        assert_eq!(r.value, BigInt::from(2));
        let terms = r.per_xi.unwrap();
        assert_eq!(terms.len(), 2);
        assert!(terms.iter().all(|t| t.term == BigInt::one()));

        let sq = ps(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]);
        let tri = ps(&[vec![0, 0], vec![2, 0], vec![0, 1]]);
        let flat = khovanskii_mv(&[Lift::flat(sq.clone()), Lift::flat(tri.clone())]).unwrap();
        assert_eq!(flat.per_xi.as_ref().unwrap().len(), 1);
        assert_eq!(flat.value, mixed_volume(&[sq, tri]).unwrap());
    }

    #[test]
    fn khovanskii_with_fractional_heights() {
        let a = ps(&[vec![0, 0], vec![2, 0], vec![0, 2], vec![1, 1]]);
        let b = ps(&[vec![0, 0], vec![1, 0], vec![1, 1]]);
        let la = Lift::new(a.clone(), vec![q(0), BigRational::new(1.into(), 3.into()), q(2), q(-1)]).unwrap();
        let lb = Lift::new(b.clone(), vec![BigRational::new(5.into(), 2.into()), q(0), q(1)]).unwrap();
        let r = khovanskii_mv(&[la, lb]).unwrap();
        assert_eq!(r.value, mixed_volume(&[a, b]).unwrap());
    }

    #[test]
    fn span_restricted_mixed_volume() {
        // Two segments inside the plane z = 1 of Z^3.
        let a = ps(&[vec![0, 0, 1], vec![1, 0, 1]]);
        let b = ps(&[vec![0, 0, 1], vec![0, 2, 1]]);
        assert_eq!(mixed_volume_in_span(&[a.clone(), b], 2).unwrap(), BigInt::from(2));
        assert_eq!(mixed_volume_in_span(&[a], 1).unwrap(), BigInt::from(1));
        assert_eq!(mixed_volume_in_span(&[], 0).unwrap(), BigInt::from(1));
    }
}
