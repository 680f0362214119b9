//! Off-coordinate mixed volumes, Newton numbers and B_k detection.

use mixvol::apps::newton::{detect_stretched_bk, newton_number};
use mixvol::apps::off::{voff, ConeSpec, Route};
use mixvol::polytope::PointSet;

fn main() {
    let mut rows = Vec::new();
    for base in [[0, 0, 0], [2, 0, 0], [0, 2, 0], [1, 1, 0], [0, 0, 1]] {
        for t in [0, 1] {
            rows.push(vec![base[0], base[1], base[2], t]);
        }
    }
    let p = PointSet::from_i64(&rows);
    let r = voff(&p, &ConeSpec::orthant(4), Route::Check).unwrap();
    println!("Voff = {} (zero witness {:?}, 0-based)", r.value, r.zero_witness);
    println!("stretched B_k: {:?}", detect_stretched_bk(&p).map(|b| b.k));

    let cubic = PointSet::from_i64(&[
        vec![0, 0],
        vec![1, 0],
        vec![2, 0],
        vec![3, 0],
        vec![0, 1],
        vec![1, 1],
        vec![2, 1],
        vec![0, 2],
        vec![1, 2],
        vec![0, 3],
    ]);
    println!("Newton number of 3 simplex: {}", newton_number(&cubic).unwrap());

    let b1 = PointSet::from_i64(&[vec![0, 0], vec![1, 0], vec![2, 0], vec![3, 0], vec![0, 1]]);
    let found = detect_stretched_bk(&b1).unwrap();
    println!("B_{} along {:?}; Newton number {}", found.k, found.coords, newton_number(&b1).unwrap());
}
