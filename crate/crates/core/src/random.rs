//! Seeded random instance generators for property tests and campaigns.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::apps::off::{off_coordinate_daughters, ConeSpec};
use crate::mixed::Lift;
use crate::polytope::{convex_hull, lattice_points, Point, PointSet};
use crate::semi::{classify_faces, daughter_check, DaughterFamily};

fn point<R: Rng>(rng: &mut R, n: usize, max: i64) -> Point {
    (0..n).map(|_| BigInt::from(rng.gen_range(0..=max))).collect()
}

fn unit(n: usize, i: usize) -> Point {
    (0..n).map(|j| BigInt::from((i == j) as i64)).collect()
}

/// `count` distinct random points of `{0..max}^n` (fewer if the box is small).
pub fn random_points<R: Rng>(rng: &mut R, n: usize, count: usize, max: i64) -> PointSet {
    let cap = ((max + 1) as usize).saturating_pow(n as u32);
    let target = count.min(cap);
    let mut pts: Vec<Point> = Vec::with_capacity(target);
    while pts.len() < target {
        let p = point(rng, n, max);
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    PointSet::new_dedup(n, pts)
}

/// A full-dimensional set in `{0..max}^n` meeting every coordinate hyperplane.
pub fn random_mother<R: Rng>(rng: &mut R, n: usize, count: usize, max: i64) -> PointSet {
    loop {
        let p = random_points(rng, n, count, max);
        let touches = (0..n).all(|i| p.iter().any(|x| x[i] == BigInt::from(0)));
        if touches && p.affine_dim() == Some(n) {
            return p;
        }
    }
}

/// Off-coordinate family (orthant) of a random mother set.
pub fn random_off_family<R: Rng>(rng: &mut R, n: usize, count: usize, max: i64) -> DaughterFamily {
    let mother = random_mother(rng, n, count, max);
    let (daughters, _) = off_coordinate_daughters(&mother, &ConeSpec::orthant(n)).expect("mother in the orthant");
    DaughterFamily::new(mother, daughters).expect("off-coordinate daughters are daughters")
}

/// A semi-interlaced family built by removing random pairwise disjoint faces
/// from a random mother set; retries until the family qualifies.
pub fn random_disjoint_face_family<R: Rng>(rng: &mut R, n: usize, count: usize, max: i64) -> DaughterFamily {
    loop {
        let mother = random_mother(rng, n, count, max);
        let hull = convex_hull(&mother).expect("nonempty");
        let proper: Vec<_> = hull.faces().into_iter().filter(|f| f.points.len() < mother.len()).collect();
        let mut daughters = Vec::with_capacity(n);
        for _ in 0..n {
            let mut removed: Vec<usize> = Vec::new();
            let picks = rng.gen_range(0..=2);
            for _ in 0..picks {
                let f = proper.choose(rng).expect("a polytope has proper faces");
                if f.points.iter().all(|i| !removed.contains(i)) {
                    removed.extend(&f.points);
                }
            }
            let d: Vec<usize> = (0..mother.len()).filter(|i| !removed.contains(i)).collect();
            daughters.push(d);
        }
        let ok = daughters
            .iter()
            .all(|d| !d.is_empty() && daughter_check(d, &mother).map(|c| c.accepted).unwrap_or(false));
        if !ok {
            continue;
        }
        let fam = DaughterFamily::new(mother, daughters).expect("checked daughters");
        if classify_faces(&fam).semi {
            return fam;
        }
    }
}

/// Random subsets of a random full-dimensional set; the union of the subsets
/// is returned as the mother so the family lives in the hull of its union.
pub fn random_subset_family<R: Rng>(rng: &mut R, n: usize, count: usize, max: i64) -> (PointSet, Vec<Vec<usize>>) {
    loop {
        let pts = random_points(rng, n, count, max);
        let keep = rng.gen_range(0.5..1.0);
        let daughters: Vec<Vec<usize>> = (0..n)
            .map(|_| (0..pts.len()).filter(|_| rng.gen_bool(keep)).collect())
            .collect();
        if daughters.iter().any(Vec::is_empty) {
            continue;
        }
        let mut union: Vec<usize> = daughters.iter().flatten().copied().collect();
        union.sort_unstable();
        union.dedup();
        let mother = pts.subset(&union);
        if mother.affine_dim() != Some(n) {
            continue;
        }
        let local = daughters
            .iter()
            .map(|d| d.iter().map(|i| union.binary_search(i).unwrap()).collect())
            .collect();
        return (mother, local);
    }
}

/// All lattice points of `conv({0, e_1..e_n} ∪ extra)` for `extra` random
/// points of `{0..max}^n`: a convenient set containing the standard simplex.
pub fn random_convenient<R: Rng>(rng: &mut R, n: usize, extra: usize, max: i64) -> PointSet {
    let mut pts = vec![vec![BigInt::from(0); n]];
    pts.extend((0..n).map(|i| unit(n, i)));
    for _ in 0..extra {
        pts.push(point(rng, n, max));
    }
    lattice_points(&convex_hull(&PointSet::new_dedup(n, pts)).expect("nonempty"))
}

/// Lattice points of a random convenient B_k-polytope `P_0 * P_1 * ... * P_k`
/// in `Z^n`, with the coordinates randomly permuted. Returns the set and `k`.
pub fn random_bk<R: Rng>(rng: &mut R, n: usize, max: i64) -> (PointSet, usize) {
    let k = rng.gen_range(1..=n);
    let m = n - k;
    let p0 = if m == 0 { PointSet::new_dedup(0, vec![vec![]]) } else { random_convenient(rng, m, 2, max) };
    // P_1..P_k contain the origin and lie in a space of dimension < k.
    let dirs: Vec<Point> = (0..k.saturating_sub(1).min(m)).map(|_| point(rng, m, 2)).collect();
    let mut blocks = vec![p0];
    for _ in 0..k {
        let mut pts = vec![vec![BigInt::from(0); m]];
        for v in &dirs {
            if rng.gen_bool(0.5) {
                let a = BigInt::from(rng.gen_range(1..=2));
                pts.push(v.iter().map(|x| x * &a).collect());
            }
        }
        blocks.push(PointSet::new_dedup(m, pts));
    }
    let mut cayley: Vec<Point> = Vec::new();
    for (level, b) in blocks.iter().enumerate() {
        for p in b {
            let mut q: Point = (0..k).map(|t| BigInt::from((level == t + 1) as i64)).collect();
            q.extend(p.iter().cloned());
            cayley.push(q);
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let permuted: Vec<Point> = cayley.iter().map(|q| perm.iter().map(|&j| q[j].clone()).collect()).collect();
    let hull = convex_hull(&PointSet::new_dedup(n, permuted)).expect("nonempty");
    (lattice_points(&hull), k)
}

/// Random rational heights with numerators in `-range..=range` and
/// denominators in `1..=3`.
pub fn random_lift<R: Rng>(rng: &mut R, base: PointSet, range: i64) -> Lift {
    let heights = (0..base.len())
        .map(|_| BigRational::new(rng.gen_range(-range..=range).into(), rng.gen_range(1..=3).into()))
        .collect();
    Lift::new(base, heights).expect("one height per point")
}
