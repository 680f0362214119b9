//! Daughter families, sutures and the suture coefficient system.

use mixvol::semi::{classify_faces, daughter_check, suture_system_checked, DaughterFamily};
use mixvol::polytope::PointSet;

fn main() {
    let mother = PointSet::from_i64(&[vec![0, 0], vec![1, 0], vec![2, 0], vec![0, 1], vec![0, 2]]);
    let daughters = vec![vec![1, 2], vec![3, 4]];
    for d in &daughters {
        let c = daughter_check(d, &mother).unwrap();
        println!("{d:?}: daughter = {}, removes {:?}", c.accepted, c.removed.iter().map(|f| &f.points).collect::<Vec<_>>());
    }

    let fam = DaughterFamily::new(mother, daughters).unwrap();
    let class = classify_faces(&fam);
    println!("semi-interlaced: {}", class.semi);

    let table = suture_system_checked(&fam).unwrap();
    for (i, s) in table.sutures.iter().enumerate() {
        println!("suture {:?} (dim {}): v = {}, vdag = {}", s.points, s.dim, table.v[i], table.vdag[i]);
    }
    println!("C = {:?}", table.c.to_rows());
    println!("D = {:?}", table.dmat.to_rows());
    println!("MV(D1, D2) = {}", table.mixed_volume());
}
