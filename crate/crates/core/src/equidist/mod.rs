//! Discrepancy of point sets in `[0, 1)`, Koksma and Erdős–Turán checks, and
//! Weyl exponential sums.

mod koksma;
mod points;
mod weyl;

pub use koksma::{koksma_check, BoundedVariation, Constant, DistanceToNearest, Indicator, KoksmaCheck, Sawtooth};
pub use points::{
    bounded_type_discrepancy_bound, discrepancy, discrepancy_exact, discrepancy_star, discrepancy_star_exact, PointSet,
};
pub use weyl::{
    erdos_turan_bracket, erdos_turan_row, weyl_bound, weyl_quadratic, weyl_sum, weyl_sum_direct, ErdosTuranRow,
    QuadraticWeyl,
};
