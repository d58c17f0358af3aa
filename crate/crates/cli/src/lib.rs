//! Descriptor parsing, catalogue loading and report generation on top of
//! `ulrich-core`.

pub mod catalogue;
pub mod descriptor;
pub mod error;
pub mod render;
pub mod report;

use rayon::prelude::*;

pub use catalogue::Catalogue;
pub use descriptor::{parse_descriptor, Descriptor};
pub use error::Error;
pub use report::{run_report, Options, Report};

/// Reports for a batch, computed in parallel and returned in input order.
pub fn run_batch(
    items: Vec<Result<Descriptor, Error>>,
    opts: &Options,
    catalogue: Option<&Catalogue>,
) -> Vec<Result<Report, Error>> {
    items
        .into_par_iter()
        .map(|item| item.and_then(|d| run_report(&d, opts, catalogue)))
        .collect()
}
