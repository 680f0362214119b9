//! Maximum likelihood, Euclidean distance and polar degrees as
//! off-coordinate mixed volumes.

use mixvol::apps::degrees::{ed_degree, ml_degree, polar_degree, CayleyInput};
use mixvol::apps::off::Route;
use mixvol::polytope::PointSet;
use num_bigint::BigInt;

fn main() {
    let line = PointSet::from_i64(&[vec![0, 0], vec![1, 0], vec![0, 1]]);
    let conic = PointSet::from_i64(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![2, 0], vec![1, 1], vec![0, 2]]);
    let u = [BigInt::from(3), BigInt::from(5)];
    for (name, s) in [("line", line), ("conic", conic)] {
        let input = CayleyInput::new(2, vec![s]).unwrap();
        let ml = ml_degree(&input, &u, Route::Check).unwrap().value;
        let ed = ed_degree(&input, Route::Check).unwrap().value;
        println!("generic {name}: ML degree {ml}, ED degree {ed}");
    }

    for d in 1..=3i64 {
        let mut pts = Vec::new();
        for a in 0..=d {
            for b in 0..=d - a {
                pts.push(vec![d - a - b, a, b]);
            }
        }
        let support = PointSet::from_i64(&pts);
        let deg = polar_degree(&support, d as usize, Route::Check).unwrap().value;
        println!("plane curve of degree {d}: polar degree {deg}");
    }
}
