//! Independent ground truth: orientation counting, extendability by
//! matching, list coloring and exhaustive choosability.

mod brute;
mod coefficient;
mod color;
mod extend;

pub use brute::{bad_assignments, brute_force_choosable, for_each_assignment, BruteLimits};
pub use coefficient::{
    count_f_orientations, direct_coefficient, EdgeState, OrientationCount, OrientationSign,
    PartialOrientation,
};
pub use color::{color_from_lists, color_from_pattern, is_proper_list_coloring};
pub use extend::extendable_to_f_orientation;
