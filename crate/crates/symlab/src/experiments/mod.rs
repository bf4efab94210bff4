//! Reproducible experiment drivers: configuration parsing, the identity
//! census, scan execution, report re-rendering, and the CLI surface.

pub mod cli;
pub mod config;
pub mod render;
pub mod scan;
pub mod survey;

pub use config::{GridPoint, ScanConfig, ScanKind};
pub use render::{load_reports, parse_reports, render_report, render_reports, ReportFormat};
pub use scan::run_scan;
pub use survey::{run_identity_survey, IdentityCensus};
