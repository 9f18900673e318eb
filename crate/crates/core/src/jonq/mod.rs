//! Jonquieres maps `(x, y) -> ((A x + B)/(C x + D), (a y + b)/(c y + d))`.
//!
//! The first coordinate is the fiber coordinate, the second the base of the
//! invariant pencil `y = const`.

mod degree;
mod fiber;
mod map;
mod moebius;

pub use degree::{base_point_count, base_points_of_degree, plane_degree};
pub use fiber::FiberMatrix;
pub use map::{JonquieresMap, SubgroupTag};
pub use moebius::Moebius;
