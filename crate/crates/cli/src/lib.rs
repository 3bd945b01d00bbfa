//! Library half of the `ttlink` command line tool: the classifier-versus-
//! oracle scan harness and an SVG emitter for braid diagrams.

pub mod scan;
pub mod svg;

pub use scan::{
    enumerate_box, run_scan, Discrepancy, ScanConfig, ScanError, ScanReport, TupleRecord,
};
pub use svg::braid_svg;
