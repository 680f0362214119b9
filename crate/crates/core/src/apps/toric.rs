use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{generated_lattice_chart, lattice_index};
use crate::polytope::{convex_hull, Face, PointSet};
use crate::semi::c_coefficient;

/// Multiplicity of the projective toric variety of `P` along the orbit of its
/// face `P'` (given by indices into `P`), in the saturated lattice of `aff(P)`.
pub fn orbit_multiplicity(p: &PointSet, face: &[usize]) -> Result<BigInt> {
    if face.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(&bad) = face.iter().find(|&&i| i >= p.len()) {
        return Err(Error::invalid(format!("point index {bad} out of range")));
    }
    let mut key = face.to_vec();
    key.sort_unstable();
    key.dedup();
    let hull = convex_hull(p)?;
    if !hull.faces().iter().any(|f| f.points == key) {
        return Err(Error::invalid(format!("{key:?} is not a face")));
    }
    multiplicity_of_face(p, &key)
}

fn multiplicity_of_face(p: &PointSet, key: &[usize]) -> Result<BigInt> {
    let sub = p.subset(key);
    let num = lattice_index(&sub)? * c_coefficient(p, &sub)?;
    let den = lattice_index(p)?;
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() || q < BigInt::one() {
        return Err(Error::check(format!("multiplicity {num}/{den} is not a positive integer")));
    }
    Ok(q)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricReport {
    /// Every face with its orbit multiplicity, in canonical face order.
    pub multiplicities: Vec<(Face, BigInt)>,
    /// All multiplicities equal 1.
    pub smooth: bool,
    /// In the lattice generated by `P`, every coefficient `c_P^{P'}` and
    /// every index of a face equals 1.
    pub unit_coefficients: bool,
}

pub fn toric_report(p: &PointSet) -> Result<ToricReport> {
    let hull = convex_hull(p)?;
    let faces = hull.faces();
    let multiplicities = faces
        .iter()
        .map(|f| multiplicity_of_face(p, &f.points).map(|m| (f.clone(), m)))
        .collect::<Result<Vec<_>>>()?;
    let smooth = multiplicities.iter().all(|(_, m)| m.is_one());

    // Same indices, recharted into the lattice the points generate.
    let chart = generated_lattice_chart(p)?;
    let mut unit_coefficients = true;
    for f in &faces {
        let sub = chart.subset(&f.points);
        if !lattice_index(&sub)?.is_one() || !c_coefficient(&chart, &sub)?.is_one() {
            unit_coefficients = false;
            break;
        }
    }
    Ok(ToricReport { multiplicities, smooth, unit_coefficients })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(xs: &[i64]) -> PointSet {
        PointSet::from_i64(&xs.iter().map(|&x| vec![x]).collect::<Vec<_>>())
    }

    #[test]
    fn curve_examples() {
        assert_eq!(orbit_multiplicity(&line(&[0, 1]), &[0]).unwrap(), BigInt::one());
        assert_eq!(orbit_multiplicity(&line(&[0, 2, 3]), &[0]).unwrap(), BigInt::from(2));
        assert_eq!(orbit_multiplicity(&line(&[0, 2]), &[0]).unwrap(), BigInt::one());
        assert!(orbit_multiplicity(&line(&[0, 2, 3]), &[1]).unwrap_err().is_input_error());
    }

    #[test]
    fn smoothness_of_curves() {
        let cusp = toric_report(&line(&[0, 2, 3])).unwrap();
        assert!(!cusp.smooth);
        assert!(!cusp.unit_coefficients);
        let conic = toric_report(&line(&[0, 2])).unwrap();
        assert!(conic.smooth);
        assert!(conic.unit_coefficients);
    }

    #[test]
    fn square_is_smooth_and_big_triangle_is_not() {
        let sq = PointSet::from_i64(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert!(toric_report(&sq).unwrap().smooth);
        // Weighted projective plane P(1,1,2) has a singular vertex.
        let w = PointSet::from_i64(&[vec![0, 0], vec![2, 0], vec![0, 1], vec![1, 0]]);
        let r = toric_report(&w).unwrap();
        assert_eq!(r.smooth, r.unit_coefficients);
    }
}
