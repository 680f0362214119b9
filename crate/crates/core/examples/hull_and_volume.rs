//! Exact convex hulls, face lattices and normalized lattice volumes.

use mixvol::polytope::{convex_hull, minkowski_sum, PointSet};

fn main() {
    let octahedron = PointSet::from_i64(&[
        vec![1, 0, 0],
        vec![-1, 0, 0],
        vec![0, 1, 0],
        vec![0, -1, 0],
        vec![0, 0, 1],
        vec![0, 0, -1],
    ]);
    let hull = convex_hull(&octahedron).unwrap();
    println!("octahedron: dim {}, {} facets, volume {}", hull.dim(), hull.facets().len(), hull.volume());
    let mut counts = vec![0; hull.dim() + 1];
    for f in hull.faces() {
        counts[f.dim] += 1;
    }
    println!("faces by dimension: {counts:?}");

    // A triangle sitting in a plane of Z^3 is measured in its own lattice.
    let tilted = PointSet::from_i64(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
    println!("tilted triangle volume: {}", convex_hull(&tilted).unwrap().volume());

    let square = PointSet::from_i64(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]);
    let tri = PointSet::from_i64(&[vec![0, 0], vec![1, 0], vec![0, 1]]);
    let sum = minkowski_sum(&square, &tri).unwrap();
    println!("square + triangle: {} points, volume {}", sum.len(), convex_hull(&sum).unwrap().volume());
}
