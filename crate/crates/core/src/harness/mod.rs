//! Perfect-power scans over EDS terms and the command-line front end.

pub mod cli;
mod scan;

pub use scan::{format_rows, scan, OutputFormat, ScanConfig, ScanRow, TSV_HEADER};
