//! Text formats: the `.sgl` edge list and report serialization.

pub mod report;
pub mod sgl;

pub use report::{
    reports_to_csv, serialize_report, to_json, Format, Report, ReportError, TabularReport,
};
pub use sgl::{parse_sgl, parse_sgl_with_limit, write_sgl, ParseError, DEFAULT_MAX_VERTICES};
