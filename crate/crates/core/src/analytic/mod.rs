//! Disk functions, Schwarz functions and the series functionals
//! `B_N(f, r)`, `||f_0||_r^2` and `A(f_0, r)`.

mod disk;
mod random;
mod schwarz;
mod series;

pub use disk::{BlaschkeProduct, DiskFunction};
pub use random::{random_lacunary_member, random_member, random_schwarz, MAX_RANDOM_ZERO};
pub use schwarz::SchwarzFunction;
pub use series::{CoefficientSeries, DEFAULT_TRUNCATION};

pub(crate) use disk::check_in_disk;
