//! Daughter polytopes, semi-interlaced families, sutures and the suture
//! coefficient system relating volumes to mixed volumes.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{quotient_projection, IntMatrix};
use crate::mixed::mixed_volume_in_span;
use crate::polytope::{convex_hull, normalized_volume, Face, PointSet, Polytope};

/// Outcome of testing one index subset against the daughter definition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DaughterCheck {
    pub accepted: bool,
    /// Maximal faces of the mother hull avoided by the candidate.
    pub removed: Vec<Face>,
    pub violation: Option<String>,
}

fn validate_indices(d: &[usize], len: usize) -> Result<Vec<usize>> {
    if d.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(&bad) = d.iter().find(|&&i| i >= len) {
        return Err(Error::invalid(format!("point index {bad} out of range (set has {len} points)")));
    }
    let set: BTreeSet<usize> = d.iter().copied().collect();
    Ok(set.into_iter().collect())
}

fn meets(face: &Face, d: &[usize]) -> bool {
    d.iter().any(|i| face.points.binary_search(i).is_ok())
}

fn disjoint(a: &[usize], b: &[usize]) -> bool {
    !a.iter().any(|x| b.binary_search(x).is_ok())
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

/// Checks whether `conv(mother[d])` is a daughter polytope of `mother`.
pub fn daughter_check(d: &[usize], mother: &PointSet) -> Result<DaughterCheck> {
    let hull = convex_hull(mother)?;
    daughter_check_with(d, &hull, &hull.faces())
}

fn daughter_check_with(d: &[usize], hull: &Polytope, faces: &[Face]) -> Result<DaughterCheck> {
    let mother = hull.source();
    let d = validate_indices(d, mother.len())?;
    // A face of P meets conv(D) exactly when it contains a point of D.
    let avoiding: Vec<&Face> = faces.iter().filter(|f| !meets(f, &d)).collect();
    let removed: Vec<Face> = avoiding
        .iter()
        .filter(|f| !avoiding.iter().any(|g| g.points.len() > f.points.len() && is_subset(&f.points, &g.points)))
        .map(|f| (*f).clone())
        .collect();

    for (i, a) in removed.iter().enumerate() {
        for b in &removed[i + 1..] {
            if !disjoint(&a.points, &b.points) {
                let msg = format!("removed faces {:?} and {:?} intersect", a.points, b.points);
                return Ok(DaughterCheck { accepted: false, removed, violation: Some(msg) });
            }
        }
    }

    let kept: Vec<usize> =
        (0..mother.len()).filter(|i| !removed.iter().any(|f| f.points.binary_search(i).is_ok())).collect();
    let rest = convex_hull(&mother.subset(&kept))?.vertex_set();
    let own = convex_hull(&mother.subset(&d))?.vertex_set();
    if !rest.same_set(&own) {
        let msg = "hull differs from the hull of the points off the removed faces".to_string();
        return Ok(DaughterCheck { accepted: false, removed, violation: Some(msg) });
    }
    Ok(DaughterCheck { accepted: true, removed, violation: None })
}

/// Whether every proper face of `conv(mother)` meets at least `dim F + 1` of
/// the sets. Pass the union of the sets as `mother` to test against the hull
/// of the union.
pub fn is_interlaced(ds: &[Vec<usize>], mother: &PointSet) -> Result<bool> {
    let checked = ds.iter().map(|d| validate_indices(d, mother.len())).collect::<Result<Vec<_>>>()?;
    let hull = convex_hull(mother)?;
    let full = mother.len();
    Ok(hull
        .faces()
        .iter()
        .filter(|f| f.points.len() < full)
        .all(|f| checked.iter().filter(|d| meets(f, d)).count() > f.dim))
}

/// Daughters `D_1..D_n` of a full-dimensional mother set in `Z^n`, each
/// verified against the daughter definition.
#[derive(Clone, Debug)]
pub struct DaughterFamily {
    mother: PointSet,
    hull: Polytope,
    faces: Vec<Face>,
    daughters: Vec<Vec<usize>>,
    removed: Vec<Vec<Face>>,
}

impl DaughterFamily {
    pub fn new(mother: PointSet, daughters: Vec<Vec<usize>>) -> Result<Self> {
        let n = mother.dim();
        if daughters.len() != n {
            return Err(Error::invalid(format!("{} daughters in dimension {n}", daughters.len())));
        }
        let hull = convex_hull(&mother)?;
        if hull.dim() < n {
            return Err(Error::invalid(format!(
                "mother set spans dimension {} < {n}; the family must be full-dimensional",
                hull.dim()
            )));
        }
        let faces = hull.faces();
        let mut normalized = Vec::with_capacity(n);
        let mut removed = Vec::with_capacity(n);
        for (i, d) in daughters.iter().enumerate() {
            let check = daughter_check_with(d, &hull, &faces)?;
            if !check.accepted {
                return Err(Error::check(format!(
                    "daughter {} is not a daughter polytope: {}",
                    i + 1,
                    check.violation.unwrap_or_default()
                )));
            }
            normalized.push(validate_indices(d, mother.len())?);
            removed.push(check.removed);
        }
        Ok(DaughterFamily { mother, hull, faces, daughters: normalized, removed })
    }

    pub fn mother(&self) -> &PointSet {
        &self.mother
    }

    pub fn hull(&self) -> &Polytope {
        &self.hull
    }

    pub fn dim(&self) -> usize {
        self.mother.dim()
    }

    /// Sorted mother indices of each daughter.
    pub fn daughters(&self) -> &[Vec<usize>] {
        &self.daughters
    }

    pub fn daughter_set(&self, i: usize) -> PointSet {
        self.mother.subset(&self.daughters[i])
    }

    pub fn removed_faces(&self) -> &[Vec<Face>] {
        &self.removed
    }

    /// All nonempty faces of the mother hull in canonical order.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// Indices of the daughters meeting `face`.
    pub fn meeting(&self, face: &Face) -> Vec<usize> {
        (0..self.daughters.len()).filter(|&i| meets(face, &self.daughters[i])).collect()
    }

    /// `D_i ∩ F` for every daughter meeting `F`, as point sets.
    pub fn restricted(&self, face: &Face) -> Vec<PointSet> {
        self.daughters
            .iter()
            .filter(|d| meets(face, d))
            .map(|d| {
                let on: Vec<usize> = d.iter().copied().filter(|i| face.points.binary_search(i).is_ok()).collect();
                self.mother.subset(&on)
            })
            .collect()
    }

    pub fn face_set(&self, face: &Face) -> PointSet {
        self.mother.subset(&face.points)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub semi: bool,
    /// Faces met by exactly `dim F` daughters, in canonical face order.
    pub sutures: Vec<Face>,
    /// First face (canonical order) met by fewer than `dim F` daughters.
    pub violation: Option<Face>,
}

pub fn classify_faces(fam: &DaughterFamily) -> Classification {
    let mut sutures = Vec::new();
    let mut violation = None;
    for f in fam.faces() {
        let met = fam.meeting(f).len();
        if met < f.dim {
            if violation.is_none() {
                violation = Some(f.clone());
            }
        } else if met == f.dim {
            sutures.push(f.clone());
        }
    }
    Classification { semi: violation.is_none(), sutures, violation }
}

/// Combinatorial coefficient `c_F^{F'}` of two finite sets in the same lattice.
pub fn c_coefficient(f: &PointSet, fp: &PointSet) -> Result<BigInt> {
    if f.dim() != fp.dim() {
        return Err(Error::DimensionMismatch { expected: f.dim(), found: fp.dim() });
    }
    if f.is_empty() || fp.is_empty() {
        return Err(Error::EmptySet);
    }
    if fp.same_set(f) {
        return Ok(BigInt::one());
    }
    let Some(idx) = fp.iter().map(|p| f.index_of(p)).collect::<Option<Vec<usize>>>() else {
        return Ok(BigInt::zero());
    };
    let mut idx = idx;
    idx.sort_unstable();
    let hull = convex_hull(f)?;
    if !hull.faces().iter().any(|face| face.points == idx) {
        return Ok(BigInt::zero());
    }
    c_coefficient_of_face(f, &idx, hull.dim())
}

/// `Vol(pi(F)) - Vol(pi(F \ F'))` for `F'` (given by indices) a proper face of `F`.
fn c_coefficient_of_face(f: &PointSet, face: &[usize], dim_f: usize) -> Result<BigInt> {
    let sub = f.subset(face);
    let dim_sub = sub.affine_dim().expect("nonempty face");
    let k = dim_f - dim_sub;
    let pi = quotient_projection(&sub, f.dim())?;
    let image = pi.apply_set(f);
    let rest: Vec<usize> = (0..f.len()).filter(|i| face.binary_search(i).is_err()).collect();
    let rest_image = pi.apply_set(&f.subset(&rest));
    Ok(normalized_volume(&image, k)? - normalized_volume(&rest_image, k)?)
}

/// Mixed volume of `{D_i ∩ F : D_i ∩ F nonempty}` inside `aff(F)`; requires
/// exactly `dim F` daughters to meet `F`.
pub fn restricted_mixed_volume(fam: &DaughterFamily, face: &Face) -> Result<BigInt> {
    let sets = fam.restricted(face);
    if sets.len() != face.dim {
        return Err(Error::invalid(format!(
            "face {:?} of dimension {} meets {} daughters",
            face.points,
            face.dim,
            sets.len()
        )));
    }
    mixed_volume_in_span(&sets, face.dim)
}

/// Suture-indexed coefficient matrix, its inverse, volumes and mixed volumes.
///
/// Rows and columns follow the suture order (ascending dimension, then point
/// key); `c[S][S'] = c_S^{S'}`, so `c` is lower unitriangular and
/// `v = c * vdag`, `vdag = dmat * v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SutureTable {
    pub sutures: Vec<Face>,
    pub c: IntMatrix,
    pub dmat: IntMatrix,
    pub v: Vec<BigInt>,
    pub vdag: Vec<BigInt>,
}

impl SutureTable {
    /// `MV(D_1, ..., D_n)`: the entry for the full polytope (always last).
    pub fn mixed_volume(&self) -> &BigInt {
        self.vdag.last().expect("the full polytope is a suture")
    }

    pub fn index_of(&self, points: &[usize]) -> Option<usize> {
        self.sutures.iter().position(|s| s.points == points)
    }

    /// The entry of the inverse matrix pairing a suture `s` with a larger suture `f`.
    pub fn d_entry(&self, s: usize, f: usize) -> &BigInt {
        self.dmat.get(f, s)
    }
}

/// Solves for `vdag` from the suture volumes and coefficients, and
/// cross-checks the recursion against exact inversion of the matrix.
pub fn suture_system(fam: &DaughterFamily) -> Result<SutureTable> {
    let class = classify_faces(fam);
    if let Some(f) = class.violation {
        let met = fam.meeting(&f).len();
        return Err(Error::NotSemiInterlaced { face: f.points, dim: f.dim, met });
    }
    let sutures = class.sutures;
    let m = sutures.len();
    let mut c = IntMatrix::zeros(m, m);
    for (i, s) in sutures.iter().enumerate() {
        c.set(i, i, BigInt::one());
        let s_set = fam.face_set(s);
        for (j, sp) in sutures.iter().enumerate().take(i) {
            if sp.points.len() < s.points.len() && is_subset(&sp.points, &s.points) {
                let local: Vec<usize> =
                    sp.points.iter().map(|x| s.points.binary_search(x).unwrap()).collect();
                c.set(i, j, c_coefficient_of_face(&s_set, &local, s.dim)?);
            }
        }
    }
    let v: Vec<BigInt> = sutures
        .iter()
        .map(|s| convex_hull(&fam.face_set(s)).map(|h| h.volume()))
        .collect::<Result<_>>()?;

    let mut vdag: Vec<BigInt> = Vec::with_capacity(m);
    for (i, vi) in v.iter().enumerate() {
        let mut x = vi.clone();
        for (j, y) in vdag.iter().enumerate() {
            x -= c.get(i, j) * y;
        }
        vdag.push(x);
    }

    let dmat = c
        .inverse()
        .ok_or_else(|| Error::check("suture coefficient matrix is not unimodular"))?;
    if dmat.apply(&v) != vdag {
        return Err(Error::check("recursion and matrix inversion disagree"));
    }
    Ok(SutureTable { sutures, c, dmat, v, vdag })
}

/// [`suture_system`] plus a direct mixed-volume computation of every
/// component of `vdag`; a mismatch is reported as a failed check.
pub fn suture_system_checked(fam: &DaughterFamily) -> Result<SutureTable> {
    let table = suture_system(fam)?;
    for (s, claimed) in table.sutures.iter().zip(&table.vdag) {
        let direct = restricted_mixed_volume(fam, s)?;
        if &direct != claimed {
            return Err(Error::check(format!(
                "suture {:?}: formula gives {claimed}, direct mixed volume {direct}",
                s.points
            )));
        }
    }
    Ok(table)
}
