//! Verification pass for the local identity behind the suture recursion.
//!
//! For a suture `S` with quotient `pi = pi_S`, every covector `xi` on the
//! quotient with `pi(P)^xi = O_S` should satisfy
//! `MV(pi(D~_j)(xi) : j in J) = Vol(P~_S(xi))`, where `J` indexes the daughters
//! missing `S`. The covectors are sampled once per cone of the common
//! refinement of all lifts involved.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{dot, quotient_projection};
use crate::mixed::{mixed_volume, regular_cell, Lift};
use crate::polytope::{convex_hull, hulls_intersect, minkowski_vertices, normalized_volume, Face, Point, PointSet};
use crate::semi::{c_coefficient, classify_faces, DaughterFamily};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaCheck {
    pub xi: Vec<BigRational>,
    /// Mixed volume of the projected daughter cells.
    pub lhs: BigInt,
    /// Volume of the cell of the local lift.
    pub rhs: BigInt,
    /// Daughters `pi(D_j)`, `j` in `J`, meeting `conv(Y)`.
    pub daughters_met: usize,
    /// `dim Y + 1`.
    pub daughters_needed: usize,
}

impl LemmaCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs && self.daughters_met >= self.daughters_needed
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    pub suture: Face,
    /// The local set `P_S` in quotient coordinates, with `O_S` first.
    pub local_set: PointSet,
    pub checks: Vec<LemmaCheck>,
    /// Sum of the right-hand sides over all sampled covectors.
    pub coefficient_sum: BigInt,
    /// `c_P^S`, which the sum above must reproduce.
    pub coefficient: BigInt,
}

impl LemmaReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(LemmaCheck::holds) && self.coefficient_sum == self.coefficient
    }
}

fn lift_of(base: &PointSet, heights: Vec<i64>) -> Lift {
    Lift::from_i64(base.clone(), &heights).expect("one height per point")
}

/// `closure(conv(A) \ conv(B))` restricted to the points of `A`, with `conv(A)`
/// full-dimensional in `Z^k`.
fn closure_of_difference(a: &PointSet, b: &PointSet, k: usize) -> Result<Vec<usize>> {
    if b.is_empty() {
        return Ok((0..a.len()).collect());
    }
    let hb = convex_hull(b)?;
    if hb.dim() < k {
        return Ok((0..a.len()).collect());
    }
    let active: Vec<_> = hb
        .facets()
        .iter()
        .filter(|f| a.iter().any(|p| dot(&f.normal, p) > f.offset))
        .collect();
    Ok((0..a.len())
        .filter(|&i| active.iter().any(|f| dot(&f.normal, a.point(i)) >= f.offset))
        .collect())
}

/// Runs the verification for suture `suture` of a semi-interlaced family.
pub fn verify_main_lemma(fam: &DaughterFamily, suture: &Face) -> Result<LemmaReport> {
    let class = classify_faces(fam);
    if !class.sutures.iter().any(|s| s.points == suture.points) {
        return Err(Error::invalid(format!("face {:?} is not a suture", suture.points)));
    }
    let n = fam.dim();
    let mother = fam.mother();
    let s_set = fam.face_set(suture);
    let k = n - suture.dim;
    let coefficient = c_coefficient(mother, &s_set)?;

    let pi = quotient_projection(&s_set, n)?;
    let origin = vec![BigInt::zero(); k];
    let image = pi.apply_set(mother);
    let off: Vec<usize> = (0..mother.len()).filter(|i| suture.points.binary_search(i).is_err()).collect();
    let off_image = pi.apply_set(&mother.subset(&off));

    if k == 0 {
        // Both sides are the empty mixed volume and the volume of a point.
        let check = LemmaCheck {
            xi: Vec::new(),
            lhs: BigInt::one(),
            rhs: BigInt::one(),
            daughters_met: 0,
            daughters_needed: 0,
        };
        return Ok(LemmaReport {
            suture: suture.clone(),
            local_set: image,
            checks: vec![check],
            coefficient_sum: BigInt::one(),
            coefficient,
        });
    }

    // Local set P_S with O_S first.
    let kept = closure_of_difference(&image, &off_image, k)?;
    let mut local_pts: Vec<Point> = vec![origin.clone()];
    local_pts.extend(kept.iter().map(|&i| image.point(i).clone()).filter(|p| *p != origin));
    let local = PointSet::new_dedup(k, local_pts);
    let p_lift = lift_of(&local, (0..local.len()).map(|i| if i == 0 { -1 } else { 0 }).collect());

    let meeting = fam.meeting(suture);
    let missing: Vec<usize> = (0..n).filter(|i| meeting.binary_search(i).is_err()).collect();
    debug_assert_eq!(missing.len(), k);

    // pi(D~_j): height 0 over images of D_j, -1 over the rest of pi(P).
    let mut d_lifts = Vec::with_capacity(k);
    let mut d_images = Vec::with_capacity(k);
    for &j in &missing {
        let dj = pi.apply_set(&fam.daughter_set(j));
        let heights = image.iter().map(|p| if dj.contains_point(p) { 0 } else { -1 }).collect();
        d_lifts.push(lift_of(&image, heights));
        d_images.push(dj);
    }
    let flat = Lift::flat(image.clone());

    // Covector representatives: one relative-interior normal per upper face of
    // the summed lift.
    let lifted = |l: &Lift| -> PointSet {
        PointSet::new_dedup(
            k + 1,
            l.base
                .iter()
                .zip(&l.heights)
                .map(|(p, h)| {
                    let mut q = p.clone();
                    q.push(h.to_integer());
                    q
                })
                .collect(),
        )
    };
    let mut sum = lifted(&p_lift);
    for l in d_lifts.iter().chain(std::iter::once(&flat)) {
        sum = minkowski_vertices(&sum, &lifted(l))?;
    }
    let top = sum.len();
    let mut pts: Vec<Point> = sum.points().to_vec();
    for p in sum.iter() {
        let mut q = p.clone();
        q[k] -= 1;
        pts.push(q);
    }
    let hull = convex_hull(&PointSet::new_dedup(k + 1, pts))?;

    let mut checks = Vec::new();
    let mut coefficient_sum = BigInt::zero();
    for face in hull.faces() {
        if face.points.iter().any(|&i| i >= top) {
            continue;
        }
        let c = &face.witness[k];
        debug_assert!(c > &BigInt::zero());
        let xi: Vec<BigRational> =
            face.witness[..k].iter().map(|a| BigRational::new(a.clone(), c.clone())).collect();
        let top_face = regular_cell(&flat, &xi);
        if !(top_face.len() == 1 && top_face.point(0) == &origin) {
            continue;
        }
        let cells: Vec<PointSet> = d_lifts.iter().map(|l| regular_cell(l, &xi)).collect();
        let lhs = mixed_volume(&cells)?;
        let rhs = normalized_volume(&regular_cell(&p_lift, &xi), k)?;
        coefficient_sum += &rhs;

        let rest = local.subset(&(1..local.len()).collect::<Vec<_>>());
        let y = regular_cell(&Lift::flat(rest), &xi);
        let needed = y.affine_dim().map_or(0, |d| d + 1);
        let mut met = 0;
        for dj in &d_images {
            if hulls_intersect(dj, &y)? {
                met += 1;
            }
        }
        checks.push(LemmaCheck { xi, lhs, rhs, daughters_met: met, daughters_needed: needed });
    }

    Ok(LemmaReport { suture: suture.clone(), local_set: local, checks, coefficient_sum, coefficient })
}

/// Runs [`verify_main_lemma`] on every suture.
pub fn verify_all_sutures(fam: &DaughterFamily) -> Result<Vec<LemmaReport>> {
    let class = classify_faces(fam);
    if let Some(f) = class.violation {
        let met = fam.meeting(&f).len();
        return Err(Error::NotSemiInterlaced { face: f.points, dim: f.dim, met });
    }
    class.sutures.iter().map(|s| verify_main_lemma(fam, s)).collect()
}
