//! Facet enumeration for full-dimensional integer point sets.
//!
//! Double description on the homogenized cone `{(a, b) : a·p <= b for all p}`:
//! its extreme rays are exactly the facet inequalities of `conv(points)`.
//! Adjacency uses the combinatorial test, so degenerate (non-simplicial)
//! inputs and redundant points need no special handling.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::lattice::{content, dot, RowReducer};

/// A facet inequality `normal · x <= offset` with a primitive normal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct HullFacet {
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
    /// Indices of the input points lying on the facet, ascending.
    pub points: Vec<usize>,
}

#[derive(Clone)]
struct Ray {
    v: Vec<BigInt>,
    zeros: Bits,
}

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    fn subset_of(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

/// Evaluates the constraint of point `p` on ray `(a, b)`: `b - a·p`.
fn slack(p: &[BigInt], ray: &[BigInt]) -> BigInt {
    let d = p.len();
    &ray[d] - dot(&ray[..d], p)
}

fn make_primitive(v: &mut [BigInt]) {
    let g = content(v);
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Facets of `conv(points)`; the points must affinely span `Z^d`, `d >= 1`.
pub(crate) fn facets(points: &[Vec<BigInt>]) -> Vec<HullFacet> {
    let d = points[0].len();
    assert!(d >= 1, "hull of a zero-dimensional set");
    if d == 1 {
        let min = points.iter().map(|p| &p[0]).min().unwrap().clone();
        let max = points.iter().map(|p| &p[0]).max().unwrap().clone();
        let on = |v: &BigInt| -> Vec<usize> {
            points.iter().enumerate().filter(|(_, p)| &p[0] == v).map(|(i, _)| i).collect()
        };
        return vec![
            HullFacet { normal: vec![-BigInt::one()], offset: -&min, points: on(&min) },
            HullFacet { normal: vec![BigInt::one()], offset: max.clone(), points: on(&max) },
        ];
    }

    let n = points.len();
    // Initial simplex: greedily pick d + 1 affinely independent points.
    let mut red = RowReducer::new();
    let mut simplex = Vec::with_capacity(d + 1);
    for (i, p) in points.iter().enumerate() {
        let mut h = Vec::with_capacity(d + 1);
        h.push(BigInt::one());
        h.extend(p.iter().cloned());
        if red.insert(&h) {
            simplex.push(i);
            if simplex.len() == d + 1 {
                break;
            }
        }
    }
    assert_eq!(simplex.len(), d + 1, "points do not span the ambient space");

    let mut rays = initial_rays(points, &simplex, n);
    let mut in_simplex = vec![false; n];
    for &i in &simplex {
        in_simplex[i] = true;
    }

    for (idx, p) in points.iter().enumerate() {
        if in_simplex[idx] {
            continue;
        }
        let vals: Vec<BigInt> = rays.iter().map(|r| slack(p, &r.v)).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        if neg.is_empty() {
            for (r, v) in rays.iter_mut().zip(&vals) {
                if v.is_zero() {
                    r.zeros.set(idx);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let mut created = Vec::new();
        for &ip in &pos {
            for &im in &neg {
                let common = rays[ip].zeros.and(&rays[im].zeros);
                if (common.count() as usize) + 1 < d {
                    continue;
                }
                let adjacent = rays.iter().enumerate().all(|(t, r)| {
                    t == ip || t == im || !common.subset_of(&r.zeros)
                });
                if !adjacent {
                    continue;
                }
                let sp = &vals[ip];
                let sm = -&vals[im];
                let mut v: Vec<BigInt> = rays[ip]
                    .v
                    .iter()
                    .zip(&rays[im].v)
                    .map(|(a, b)| a * &sm + b * sp)
                    .collect();
                make_primitive(&mut v);
                let mut zeros = common;
                zeros.set(idx);
                created.push(Ray { v, zeros });
            }
        }
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + created.len());
        for (r, v) in rays.into_iter().zip(&vals) {
            if v.is_negative() {
                continue;
            }
            let mut r = r;
            if v.is_zero() {
                r.zeros.set(idx);
            }
            next.push(r);
        }
        next.extend(created);
        rays = next;
    }

    let mut out: Vec<HullFacet> = rays
        .into_iter()
        .filter(|r| r.v[..d].iter().any(|x| !x.is_zero()))
        .map(|r| {
            let mut normal = r.v[..d].to_vec();
            let mut offset = r.v[d].clone();
            let g = content(&normal);
            if !g.is_one() {
                normal = normal.into_iter().map(|x| x / &g).collect();
                offset /= &g;
            }
            let on: Vec<usize> = points
                .iter()
                .enumerate()
                .filter(|(_, p)| dot(&normal, p) == offset)
                .map(|(i, _)| i)
                .collect();
            HullFacet { normal, offset, points: on }
        })
        .collect();
    out.sort_by(|a, b| a.points.cmp(&b.points));
    out
}

/// Extreme rays of the simplicial cone cut out by the simplex constraints.
fn initial_rays(points: &[Vec<BigInt>], simplex: &[usize], n: usize) -> Vec<Ray> {
    let k = simplex.len();
    let d = k - 1;
    // Constraint rows c_i = (-p_i, 1); rays are the columns of the inverse.
    let mut a: Vec<Vec<BigRational>> = simplex
        .iter()
        .map(|&i| {
            let mut row: Vec<BigRational> =
                points[i].iter().map(|x| BigRational::from_integer(-x)).collect();
            row.push(BigRational::one());
            row
        })
        .collect();
    let mut inv: Vec<Vec<BigRational>> = (0..k)
        .map(|i| (0..k).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    for col in 0..k {
        let piv = (col..k).find(|&r| !a[r][col].is_zero()).expect("singular simplex");
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].clone();
        for j in 0..k {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..k {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..k {
                let x = &a[col][j] * &f;
                a[r][j] -= x;
                let y = &inv[col][j] * &f;
                inv[r][j] -= y;
            }
        }
    }
    (0..k)
        .map(|j| {
            let col: Vec<BigRational> = (0..k).map(|r| inv[r][j].clone()).collect();
            let lcm = col.iter().fold(BigInt::one(), |l, x| num_integer::lcm(l, x.denom().clone()));
            let mut v: Vec<BigInt> = col.iter().map(|x| (x * &lcm).to_integer()).collect();
            make_primitive(&mut v);
            // Constraint j is positive on ray j by construction.
            debug_assert!(slack(&points[simplex[j]], &v).is_positive());
            let mut zeros = Bits::new(n);
            for (t, &i) in simplex.iter().enumerate() {
                if t != j {
                    zeros.set(i);
                }
            }
            debug_assert_eq!(v.len(), d + 1);
            Ray { v, zeros }
        })
        .collect()
}
