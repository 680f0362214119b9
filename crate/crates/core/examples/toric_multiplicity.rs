//! Orbit multiplicities of projective toric varieties.

use mixvol::apps::toric::{orbit_multiplicity, toric_report};
use mixvol::polytope::PointSet;

fn main() {
    let cusp = PointSet::from_i64(&[vec![0], vec![2], vec![3]]);
    println!("cuspidal cubic at t = 0: {}", orbit_multiplicity(&cusp, &[0]).unwrap());
    println!("cuspidal cubic at t = inf: {}", orbit_multiplicity(&cusp, &[2]).unwrap());

    let wp = PointSet::from_i64(&[vec![0, 0], vec![1, 0], vec![2, 0], vec![0, 1]]);
    let r = toric_report(&wp).unwrap();
    for (f, m) in &r.multiplicities {
        println!("face {:?} (dim {}): {m}", f.points, f.dim);
    }
    println!("smooth: {}", r.smooth);
}
