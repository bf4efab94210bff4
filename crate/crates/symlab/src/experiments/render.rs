//! Re-renders report files between the JSON and CSV encodings.
//!
//! A report file is either a single JSON object (one report per line
//! for batches) or a CSV table with the fixed column set. Rendering is
//! lossless for flat reports because both encodings share one canonical
//! value syntax: exact rationals as `num/den`, doubles with 15
//! significant digits, integers bare.

use std::path::Path;

use crate::error::{Error, Result};
use crate::report::{reports_from_csv, reports_to_csv, IntegralReport};

/// Output encodings `render_report` can produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(Error::Config(format!(
                "unknown report format {other:?}; expected json or csv"
            ))),
        }
    }
}

/// Loads the reports in a file, accepting either encoding. JSON files
/// hold one or more concatenated objects; CSV files one row per report.
pub fn load_reports(path: &Path) -> Result<Vec<IntegralReport>> {
    let text = std::fs::read_to_string(path)?;
    parse_reports(&text)
}

/// Parses report text, sniffing the encoding from the first non-blank
/// character (`{` means a JSON object stream, anything else CSV).
pub fn parse_reports(text: &str) -> Result<Vec<IntegralReport>> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let mut reports = Vec::new();
        for value in serde_json::Deserializer::from_str(text).into_iter::<serde_json::Value>() {
            let value = value.map_err(|e| Error::Format(format!("invalid report JSON: {e}")))?;
            reports.push(IntegralReport::from_json_str(&value.to_string())?);
        }
        Ok(reports)
    } else {
        reports_from_csv(text)
    }
}

/// Renders the report file at `path` in the requested format.
pub fn render_report(path: &Path, format: ReportFormat) -> Result<String> {
    let reports = load_reports(path)?;
    render_reports(&reports, format)
}

pub fn render_reports(reports: &[IntegralReport], format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Json => {
            let mut out = String::new();
            for report in reports {
                out.push_str(&report.to_json_string());
            }
            Ok(out)
        }
        ReportFormat::Csv => reports_to_csv(reports),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::ReportValue;
    use crate::rational::rat;

    fn sample() -> IntegralReport {
        IntegralReport::new("symmetry", 32, 3, "d_2", ReportValue::exact(rat(3, 4)))
            .with_mode("discrete")
            .with_term("tail", ReportValue::int(9))
    }

    #[test]
    fn json_round_trips_through_csv() {
        let reports = vec![sample(), sample().with_term("ratio", ReportValue::real(0.5))];
        let csv = render_reports(&reports, ReportFormat::Csv).unwrap();
        let back = parse_reports(&csv).unwrap();
        assert_eq!(back.len(), 2);
        let json = render_reports(&back, ReportFormat::Json).unwrap();
        let again = parse_reports(&json).unwrap();
        assert_eq!(again[0].value, reports[0].value);
        assert_eq!(again[1].term("ratio"), reports[1].term("ratio"));
        assert_eq!(again[0].term("tail"), Some(&ReportValue::int(9)));
    }

    #[test]
    fn exact_value_serializes_as_fraction() {
        let json = render_reports(&[sample()], ReportFormat::Json).unwrap();
        assert!(json.contains("\"3/4\""), "{json}");
    }

    #[test]
    fn unknown_format_rejected() {
        let err = "yaml".parse::<ReportFormat>().unwrap_err();
        assert!(matches!(err, Error::Config(_)));
    }

    #[test]
    fn file_render_works() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("r.json");
        sample().write_json(&path).unwrap();
        let csv = render_report(&path, ReportFormat::Csv).unwrap();
        assert!(csv.starts_with("kind,mode,N,h,f,f1,value"));
        let json = render_report(&path, ReportFormat::Json).unwrap();
        assert!(json.contains("\"symmetry\""));
    }
}
