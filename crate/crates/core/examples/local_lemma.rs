//! Checks the local mixed-volume identity behind the suture formula on a
//! three-dimensional off-coordinate family.

use mixvol::apps::off::{off_coordinate_family, ConeSpec};
use mixvol::lemma::verify_all_sutures;
use mixvol::polytope::PointSet;

fn main() {
    let p = PointSet::from_i64(&[
        vec![0, 0, 0],
        vec![2, 0, 0],
        vec![0, 1, 0],
        vec![0, 0, 1],
        vec![1, 1, 1],
    ]);
    let fam = off_coordinate_family(&p, &ConeSpec::orthant(3)).unwrap().family;
    for r in verify_all_sutures(&fam).unwrap() {
        println!(
            "suture {:?}: {} covectors, sum of cells {} = c {} -> {}",
            r.suture.points,
            r.checks.len(),
            r.coefficient_sum,
            r.coefficient,
            if r.holds() { "ok" } else { "FAILED" }
        );
    }
}
