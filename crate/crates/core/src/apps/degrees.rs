use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::polytope::{Point, PointSet};

use super::off::{voff, voff_family, ConeSpec, Route, VoffReport};

/// Supports `P_1..P_m` of a complete intersection in the `block_dim`-torus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyInput {
    pub block_dim: usize,
    pub supports: Vec<PointSet>,
}

impl CayleyInput {
    pub fn new(block_dim: usize, supports: Vec<PointSet>) -> Result<Self> {
        if supports.is_empty() {
            return Err(Error::invalid("no supports given"));
        }
        for s in &supports {
            if s.dim() != block_dim {
                return Err(Error::DimensionMismatch { expected: block_dim, found: s.dim() });
            }
            if s.is_empty() {
                return Err(Error::EmptySet);
            }
        }
        Ok(CayleyInput { block_dim, supports })
    }

    /// `P_0 * P_1 * ... * P_m` with the `m` Cayley coordinates first.
    pub fn cayley_with(&self, block0: &PointSet) -> PointSet {
        let m = self.supports.len();
        let mut pts: Vec<Point> = Vec::new();
        for (level, block) in std::iter::once(block0).chain(&self.supports).enumerate() {
            for p in block {
                let mut q: Point = (0..m).map(|i| BigInt::from((level == i + 1) as i64)).collect();
                q.extend(p.iter().cloned());
                pts.push(q);
            }
        }
        PointSet::new_dedup(m + self.block_dim, pts)
    }

    fn cone(&self) -> ConeSpec {
        let m = self.supports.len();
        ConeSpec::coordinate(m + self.block_dim, m)
    }
}

/// Maximum likelihood degree: `Voff` of `{u} * P_1 * ... * P_m`.
pub fn ml_degree(input: &CayleyInput, u: &[BigInt], route: Route) -> Result<VoffReport> {
    if u.len() != input.block_dim {
        return Err(Error::DimensionMismatch { expected: input.block_dim, found: u.len() });
    }
    let block0 = PointSet::new(input.block_dim, vec![u.to_vec()])?;
    voff(&input.cayley_with(&block0), &input.cone(), route)
}

/// The distance-function support `{0} ∪ {e_j} ∪ {2 e_j}`.
pub fn distance_support(dim: usize) -> PointSet {
    let mut pts = vec![vec![BigInt::zero(); dim]];
    for scale in [1, 2] {
        for j in 0..dim {
            let mut v = vec![BigInt::zero(); dim];
            v[j] = BigInt::from(scale);
            pts.push(v);
        }
    }
    PointSet::new_dedup(dim, pts)
}

/// Euclidean distance degree: `Voff` of `Δ^ρ * P_1 * ... * P_m`.
///
/// Critical points of the distance are counted in affine space rather than
/// in the torus, so the block coordinates are cone facets as well and the
/// cone is the full orthant. With the block coordinates left free the count
/// also includes spurious torus solutions (3 instead of 1 for a line).
pub fn ed_degree(input: &CayleyInput, route: Route) -> Result<VoffReport> {
    let origin = vec![BigInt::zero(); input.block_dim];
    if let Some(i) = input.supports.iter().position(|s| !s.contains_point(&origin)) {
        return Err(Error::invalid(format!("support {} does not contain the origin", i + 1)));
    }
    let n = input.supports.len() + input.block_dim;
    voff(&input.cayley_with(&distance_support(input.block_dim)), &ConeSpec::orthant(n), route)
}

/// Polar degree of a degree-`d` form with support in `d Δ°` (in `Z^(n+1)`).
///
/// The configuration `P * Δ°` lies in the hyperplane
/// `sum x_i + (d - 1) t = d`; dropping `x_0` is a lattice isomorphism of that
/// hyperplane onto `Z^(n+1)`, and the cone facets are `x_i = 0`.
pub fn polar_degree(support: &PointSet, d: usize, route: Route) -> Result<VoffReport> {
    if d == 0 {
        return Err(Error::invalid("degree must be positive"));
    }
    let big_n = support.dim();
    if big_n == 0 || support.is_empty() {
        return Err(Error::EmptySet);
    }
    let target = BigInt::from(d);
    for (i, x) in support.iter().enumerate() {
        if x.iter().any(Signed::is_negative) || x.iter().sum::<BigInt>() != target {
            return Err(Error::invalid(format!("point {i} is not in the {d}-th dilate of the simplex")));
        }
    }
    // Ambient (x, t) coordinates of every configuration point.
    let mut ambient: Vec<Point> = support
        .iter()
        .map(|x| {
            let mut q = x.clone();
            q.push(BigInt::zero());
            q
        })
        .collect();
    for i in 0..big_n {
        let mut q = vec![BigInt::zero(); big_n + 1];
        q[i] = BigInt::from(1);
        q[big_n] = BigInt::from(1);
        ambient.push(q);
    }
    let local = PointSet::new_dedup(big_n, ambient.iter().map(|q| q[1..].to_vec()).collect());
    debug_assert_eq!(local.len(), ambient.len());
    let daughters: Vec<Vec<usize>> = (0..big_n)
        .map(|i| (0..ambient.len()).filter(|&j| ambient[j][i].is_positive()).collect())
        .collect();
    voff_family(&local, daughters, route)
}
