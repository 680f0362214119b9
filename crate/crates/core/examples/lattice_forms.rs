//! Smith normal form, lattice index and quotient projections.

use mixvol::lattice::{lattice_index, quotient_projection, smith_decompose, IntMatrix};
use mixvol::polytope::PointSet;

fn main() {
    let m = IntMatrix::from_i64(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let snf = smith_decompose(&m);
    println!("invariant factors of M: {:?}", snf.invariants());
    assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.d);

    // {0, 2e1, 2e2} spans a sublattice of index 4.
    let coarse = PointSet::from_i64(&[vec![0, 0], vec![2, 0], vec![0, 2]]);
    println!("index of <2e1, 2e2>: {}", lattice_index(&coarse).unwrap());

    // Collapse the edge x + y = 1 of the unit triangle to a point.
    let edge = PointSet::from_i64(&[vec![1, 0], vec![0, 1]]);
    let pi = quotient_projection(&edge, 2).unwrap();
    let tri = PointSet::from_i64(&[vec![0, 0], vec![1, 0], vec![0, 1]]);
    for p in tri.iter() {
        println!("pi{:?} = {:?}", p, pi.apply(p));
    }
}
