//! Hyperbolic geometry of Γ_{−q} in the Poincaré disk.

mod disk;
mod model;
mod svg;
mod tiling;

pub use disk::{
    barycenter, from_origin, hyp_distance, reflect, side_of, to_origin, vertex_angle, DiskPoint, Isometry,
    IsometryClass, RotationData, C64, TOL,
};
pub use model::{discreteness_predicate, transport, u11_generators, DiskModel, HypTriangle, U11Generators};
pub use svg::{orbit, tessellation_svg, OrbitElement};
pub use tiling::{moebius, Reduction, Step, Tiling, DIAGONAL, LETTERS};
