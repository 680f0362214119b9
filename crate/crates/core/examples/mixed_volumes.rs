//! Mixed volumes by inclusion-exclusion and by a regular subdivision.

use mixvol::mixed::{khovanskii_mv, mixed_volume, mv_zero_witness, Lift};
use mixvol::polytope::PointSet;

fn main() {
    // Two generic conics meet in 4 points.
    let conic = PointSet::from_i64(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![2, 0], vec![1, 1], vec![0, 2]]);
    let mv = mixed_volume(&[conic.clone(), conic.clone()]).unwrap();
    println!("MV(2 simplex, 2 simplex) = {mv}");

    let seg = PointSet::from_i64(&[vec![0, 0], vec![1, 0]]);
    let sets = [seg.clone(), seg];
    println!(
        "parallel segments: MV = {}, zero witness {:?}",
        mixed_volume(&sets).unwrap(),
        mv_zero_witness(&sets).unwrap()
    );

    let lifts = [
        Lift::from_i64(conic.clone(), &[0, 1, 1, 3, 1, 4]).unwrap(),
        Lift::from_i64(conic, &[2, 0, 1, 0, 2, 1]).unwrap(),
    ];
    let report = khovanskii_mv(&lifts).unwrap();
    println!("via a regular subdivision: {}", report.value);
    for term in report.per_xi.iter().flatten() {
        println!("  xi = {:?} contributes {}", term.xi.iter().map(ToString::to_string).collect::<Vec<_>>(), term.term);
    }
}
