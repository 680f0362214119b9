use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::mixed::{next_combination, sum_dim};
use crate::polytope::{convex_hull, lattice_volume, PointSet};

use super::off::{voff, ConeSpec, Route};

fn unit(n: usize, i: usize) -> Vec<BigInt> {
    (0..n).map(|j| BigInt::from((i == j) as i64)).collect()
}

fn check_convenient(p: &PointSet) -> Result<()> {
    let n = p.dim();
    if p.iter().any(|x| x.iter().any(Signed::is_negative)) {
        return Err(Error::invalid("set leaves the nonnegative orthant"));
    }
    let hull = convex_hull(p)?;
    if !hull.contains(&vec![BigInt::zero(); n]) {
        return Err(Error::invalid("hull does not contain the origin"));
    }
    if let Some(i) = (0..n).find(|&i| !hull.contains(&unit(n, i))) {
        return Err(Error::invalid(format!("hull does not contain e{}", i + 1)));
    }
    Ok(())
}

/// Newton number `sum over coordinate subspaces E of (-1)^(n - dim E) Vol(P ∩ E)`
/// of a convenient set.
///
/// When the set contains the origin and every basis vector, the value is
/// also computed as the off-coordinate mixed volume and the two must agree.
pub fn newton_number(p: &PointSet) -> Result<BigInt> {
    check_convenient(p)?;
    let n = p.dim();
    let mut total = BigInt::zero();
    for mask in 0u32..(1 << n) {
        let k = mask.count_ones() as usize;
        let sign = if (n - k).is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
        let on: Vec<usize> = (0..p.len())
            .filter(|&i| (0..n).all(|j| mask & (1 << j) != 0 || p.point(i)[j].is_zero()))
            .collect();
        // Convenience puts the origin and the basis vectors of E in P ∩ E.
        let vol = if k == 0 { BigInt::one() } else { lattice_volume(&p.subset(&on))? };
        total += sign * vol;
    }
    let has_simplex = p.contains_point(&vec![BigInt::zero(); n]) && (0..n).all(|i| p.contains_point(&unit(n, i)));
    if has_simplex {
        let off = voff(p, &ConeSpec::orthant(n), Route::Formula)?.value;
        if off != total {
            return Err(Error::check(format!("Newton number {total} differs from Voff {off}")));
        }
    }
    Ok(total)
}

/// A decomposition of a set as a stretched Cayley sum
/// `P_0 *_{a_1} P_1 * ... *_{a_k} P_k` along coordinates `coords`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StretchedBk {
    pub k: usize,
    /// The Cayley coordinates (0-based, ascending).
    pub coords: Vec<usize>,
    /// `P_0, ..., P_k` in the remaining `n - k` coordinates.
    pub blocks: Vec<PointSet>,
    /// `a_1, ..., a_k`.
    pub stretch: Vec<BigInt>,
}

/// Searches `k = 1..n` and coordinate subsets in lexicographic order for a
/// stretched B_k decomposition and returns the first one found.
pub fn detect_stretched_bk(p: &PointSet) -> Option<StretchedBk> {
    let n = p.dim();
    if p.is_empty() || p.iter().any(|x| x.iter().any(Signed::is_negative)) {
        return None;
    }
    for k in 1..=n {
        let mut coords: Vec<usize> = (0..k).collect();
        loop {
            if let Some(found) = try_split(p, &coords) {
                return Some(found);
            }
            if !next_combination(&mut coords, n) {
                break;
            }
        }
    }
    None
}

fn try_split(p: &PointSet, coords: &[usize]) -> Option<StretchedBk> {
    let n = p.dim();
    let k = coords.len();
    let rest: Vec<usize> = (0..n).filter(|j| !coords.contains(j)).collect();
    let mut stretch: Vec<Option<BigInt>> = vec![None; k];
    let mut blocks: Vec<Vec<Vec<BigInt>>> = vec![Vec::new(); k + 1];
    for x in p {
        let nonzero: Vec<usize> = (0..k).filter(|&t| !x[coords[t]].is_zero()).collect();
        let block = match nonzero.as_slice() {
            [] => 0,
            [t] => {
                let a = &x[coords[*t]];
                match &stretch[*t] {
                    Some(b) if b != a => return None,
                    Some(_) => {}
                    None => stretch[*t] = Some(a.clone()),
                }
                t + 1
            }
            _ => return None,
        };
        blocks[block].push(rest.iter().map(|&j| x[j].clone()).collect());
    }
    if blocks.iter().any(Vec::is_empty) {
        return None;
    }
    let blocks: Vec<PointSet> = blocks.into_iter().map(|b| PointSet::new_dedup(n - k, b)).collect();
    let dim0 = blocks[0].affine_dim().unwrap_or(0);
    if dim0 != n - k {
        return None;
    }
    let tail: Vec<&PointSet> = blocks[1..].iter().collect();
    if sum_dim(&tail) >= k {
        return None;
    }
    Some(StretchedBk {
        k,
        coords: coords.to_vec(),
        blocks,
        stretch: stretch.into_iter().map(|a| a.expect("block nonempty")).collect(),
    })
}
