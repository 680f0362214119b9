//! Applications of the suture formula: off-coordinate families, Newton
//! numbers, toric multiplicities and algebraic degrees.

pub mod degrees;
pub mod newton;
pub mod off;
pub mod toric;

pub use degrees::{ed_degree, ml_degree, polar_degree, CayleyInput};
pub use newton::{detect_stretched_bk, newton_number, StretchedBk};
pub use off::{off_coordinate_family, v_faces, voff, voff_family, ConeSpec, OffFamily, Route, VoffReport};
pub use toric::{orbit_multiplicity, toric_report, ToricReport};
