use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{content, dot, IntMatrix};
use crate::mixed::{mixed_volume, mv_zero_witness};
use crate::polytope::{Face, PointSet};
use crate::semi::{classify_faces, suture_system, DaughterFamily, SutureTable};

/// A cone `C_Δ ⊕ R^(n-m)` given by the facet functionals of its simplicial
/// factor; the cone is `{x : l_i(x) >= 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeSpec {
    ambient_dim: usize,
    functionals: Vec<Vec<BigInt>>,
}

impl ConeSpec {
    pub fn new(ambient_dim: usize, functionals: Vec<Vec<BigInt>>) -> Result<Self> {
        if functionals.len() > ambient_dim {
            return Err(Error::invalid(format!(
                "{} functionals in dimension {ambient_dim}",
                functionals.len()
            )));
        }
        for (i, l) in functionals.iter().enumerate() {
            if l.len() != ambient_dim {
                return Err(Error::DimensionMismatch { expected: ambient_dim, found: l.len() });
            }
            let g = content(l);
            if g != BigInt::from(1) {
                return Err(Error::invalid(format!("functional {} is not primitive", i + 1)));
            }
        }
        if IntMatrix::from_rows(ambient_dim, &functionals).rank() < functionals.len() {
            return Err(Error::invalid("cone functionals are linearly dependent"));
        }
        Ok(ConeSpec { ambient_dim, functionals })
    }

    /// The first `m` coordinates nonnegative, the rest free.
    pub fn coordinate(ambient_dim: usize, m: usize) -> Self {
        let functionals = (0..m)
            .map(|i| (0..ambient_dim).map(|j| BigInt::from((i == j) as i64)).collect())
            .collect();
        ConeSpec { ambient_dim, functionals }
    }

    pub fn orthant(ambient_dim: usize) -> Self {
        Self::coordinate(ambient_dim, ambient_dim)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn functionals(&self) -> &[Vec<BigInt>] {
        &self.functionals
    }
}

/// The off-coordinate daughters of a set in a cone.
#[derive(Clone, Debug)]
pub struct OffFamily {
    pub family: DaughterFamily,
    /// Facets `E_i` (0-based, `i < m`) containing no point of the set, where
    /// `D_i` is the whole set.
    pub untouched: Vec<usize>,
}

/// Index sets `D_i = {p : l_i(p) > 0}` for `i < m` and the whole set otherwise.
pub fn off_coordinate_daughters(p: &PointSet, cone: &ConeSpec) -> Result<(Vec<Vec<usize>>, Vec<usize>)> {
    let n = p.dim();
    if cone.ambient_dim != n {
        return Err(Error::DimensionMismatch { expected: n, found: cone.ambient_dim });
    }
    if p.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut daughters = Vec::with_capacity(n);
    let mut untouched = Vec::new();
    for (i, l) in cone.functionals.iter().enumerate() {
        let vals: Vec<BigInt> = p.iter().map(|x| dot(l, x)).collect();
        if let Some(j) = vals.iter().position(Signed::is_negative) {
            return Err(Error::invalid(format!("point {} lies outside the cone (functional {})", j, i + 1)));
        }
        let d: Vec<usize> = (0..p.len()).filter(|&j| vals[j].is_positive()).collect();
        if d.is_empty() {
            return Err(Error::invalid(format!("the set lies on facet {} of the cone", i + 1)));
        }
        if d.len() == p.len() {
            untouched.push(i);
        }
        daughters.push(d);
    }
    while daughters.len() < n {
        daughters.push((0..p.len()).collect());
    }
    Ok((daughters, untouched))
}

pub fn off_coordinate_family(p: &PointSet, cone: &ConeSpec) -> Result<OffFamily> {
    let (daughters, untouched) = off_coordinate_daughters(p, cone)?;
    let family = DaughterFamily::new(p.clone(), daughters)?;
    let class = classify_faces(&family);
    if let Some(f) = class.violation {
        let met = family.meeting(&f).len();
        return Err(Error::NotSemiInterlaced { face: f.points, dim: f.dim, met });
    }
    Ok(OffFamily { family, untouched })
}

/// Faces `F` of `conv(P)` with `dim F` equal to the dimension of the smallest
/// cone face containing `F`.
pub fn v_faces(p: &PointSet, cone: &ConeSpec) -> Result<Vec<Face>> {
    let hull = crate::polytope::convex_hull(p)?;
    let n = cone.ambient_dim;
    Ok(hull
        .faces()
        .into_iter()
        .filter(|f| {
            let vanishing = cone
                .functionals
                .iter()
                .filter(|l| f.points.iter().all(|&i| dot(l, p.point(i)).is_zero()))
                .count();
            f.dim == n - vanishing
        })
        .collect())
}

/// How a mixed volume of off-coordinate daughters is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Route {
    /// Suture system only.
    #[default]
    Formula,
    /// Inclusion-exclusion oracle only.
    Oracle,
    /// Both, failing on disagreement.
    Check,
}

#[derive(Clone, Debug)]
pub struct VoffReport {
    pub value: BigInt,
    pub daughters: Vec<Vec<usize>>,
    pub untouched: Vec<usize>,
    /// 0-based indices of daughters whose sum is too small, if any.
    pub zero_witness: Option<Vec<usize>>,
    pub table: Option<SutureTable>,
    pub oracle: Option<BigInt>,
}

/// Mixed volume of the given daughters of `mother` by the chosen route.
///
/// A family whose mother set is not full-dimensional has mixed volume 0; it
/// is reported through the zero witness without a suture table.
pub fn voff_family(mother: &PointSet, daughters: Vec<Vec<usize>>, route: Route) -> Result<VoffReport> {
    let sets: Vec<PointSet> = daughters.iter().map(|d| mother.subset(d)).collect();
    let zero_witness = mv_zero_witness(&sets)?;
    let oracle = match route {
        Route::Formula => None,
        Route::Oracle | Route::Check => Some(mixed_volume(&sets)?),
    };
    let full = mother.affine_dim() == Some(mother.dim());
    let table = match route {
        Route::Oracle => None,
        _ if !full => None,
        _ => Some(suture_system(&DaughterFamily::new(mother.clone(), daughters.clone())?)?),
    };
    let value = match (&table, &oracle) {
        (Some(t), Some(o)) => {
            if t.mixed_volume() != o {
                return Err(Error::check(format!(
                    "suture formula gives {}, oracle gives {o}",
                    t.mixed_volume()
                )));
            }
            o.clone()
        }
        (Some(t), None) => t.mixed_volume().clone(),
        (None, Some(o)) => o.clone(),
        (None, None) => BigInt::zero(),
    };
    if zero_witness.is_some() != value.is_zero() {
        return Err(Error::check(format!(
            "zero witness {:?} inconsistent with mixed volume {value}",
            zero_witness
        )));
    }
    Ok(VoffReport { value, daughters, untouched: Vec::new(), zero_witness, table, oracle })
}

/// `Voff_C(P)`: the mixed volume of the off-coordinate daughters.
pub fn voff(p: &PointSet, cone: &ConeSpec, route: Route) -> Result<VoffReport> {
    let (daughters, untouched) = off_coordinate_daughters(p, cone)?;
    let mut report = voff_family(p, daughters, route)?;
    report.untouched = untouched;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn worked() -> PointSet {
        PointSet::from_i64(&[vec![0, 0], vec![1, 0], vec![2, 0], vec![0, 1], vec![0, 2]])
    }

    #[test]
    fn worked_example_family() {
        let off = off_coordinate_family(&worked(), &ConeSpec::orthant(2)).unwrap();
        assert_eq!(off.family.daughters(), &[vec![1, 2], vec![3, 4]]);
        assert!(off.untouched.is_empty());
        let r = voff(&worked(), &ConeSpec::orthant(2), Route::Check).unwrap();
        assert_eq!(r.value, BigInt::from(1));
    }

    #[test]
    fn sutures_are_v_faces() {
        let p = worked();
        let off = off_coordinate_family(&p, &ConeSpec::orthant(2)).unwrap();
        let sutures: Vec<Vec<usize>> =
            classify_faces(&off.family).sutures.into_iter().map(|f| f.points).collect();
        let v: Vec<Vec<usize>> = v_faces(&p, &ConeSpec::orthant(2)).unwrap().into_iter().map(|f| f.points).collect();
        assert_eq!(sutures, v);
    }

    #[test]
    fn free_directions_keep_the_whole_set() {
        let p = PointSet::from_i64(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]);
        let (d, _) = off_coordinate_daughters(&p, &ConeSpec::coordinate(2, 1)).unwrap();
        assert_eq!(d, vec![vec![1, 3], vec![0, 1, 2, 3]]);
    }

    #[test]
    fn cone_validation() {
        let one = BigInt::from(1);
        let two = BigInt::from(2);
        let zero = BigInt::zero();
        assert!(ConeSpec::new(2, vec![vec![two.clone(), zero.clone()]]).is_err());
        assert!(ConeSpec::new(2, vec![vec![one.clone(), zero.clone()], vec![one.clone(), zero.clone()]]).is_err());
        assert!(ConeSpec::new(2, vec![vec![one.clone(), one.clone()], vec![one, zero]]).is_ok());
        let outside = PointSet::from_i64(&[vec![-1, 0], vec![1, 1], vec![0, 1]]);
        assert!(voff(&outside, &ConeSpec::orthant(2), Route::Formula).unwrap_err().is_input_error());
    }

    #[test]
    fn ten_point_fixture_vanishes() {
        let mut rows = Vec::new();
        for base in [[0, 0, 0], [2, 0, 0], [0, 2, 0], [1, 1, 0], [0, 0, 1]] {
            for t in [0, 1] {
                rows.push(vec![base[0], base[1], base[2], t]);
            }
        }
        let p = PointSet::from_i64(&rows);
        let r = voff(&p, &ConeSpec::orthant(4), Route::Check).unwrap();
        assert_eq!(r.value, BigInt::zero());
        assert_eq!(r.zero_witness, Some(vec![0, 1, 2]));
    }
}
