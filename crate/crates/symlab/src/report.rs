//! Structured result reports with deterministic JSON and CSV forms.
//!
//! Every computed quantity is rendered as an unambiguous string so that
//! reruns are byte-identical and exact values survive round trips:
//!
//! * exact rationals always render as `num/den` (including `5/1`),
//! * floating-point values always render in scientific notation with a
//!   fixed mantissa width (so they always contain `e`),
//! * integers render as bare digit strings,
//! * anything else is free text.
//!
//! The same classifier recovers the variant when reading either format,
//! so labels must not themselves look like `num/den` or bare numbers.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A single reported value, kept exact whenever the computation was.
#[derive(Debug, Clone, PartialEq)]
pub enum ReportValue {
    Exact(Rational),
    Real(f64),
    Int(i128),
    Text(String),
}

impl ReportValue {
    pub fn exact(value: Rational) -> Self {
        ReportValue::Exact(value)
    }

    pub fn real(value: f64) -> Self {
        ReportValue::Real(value)
    }

    pub fn int(value: i128) -> Self {
        ReportValue::Int(value)
    }

    pub fn text(value: impl Into<String>) -> Self {
        ReportValue::Text(value.into())
    }

    /// Renders the value as its canonical string.
    pub fn render(&self) -> String {
        match self {
            ReportValue::Exact(r) => format!("{}/{}", r.numer(), r.denom()),
            ReportValue::Real(x) => format!("{x:.14e}"),
            ReportValue::Int(n) => n.to_string(),
            ReportValue::Text(s) => s.clone(),
        }
    }

    /// Recovers a value from its canonical string.
    pub fn parse(s: &str) -> ReportValue {
        let t = s.trim();
        if let Some((num, den)) = t.split_once('/') {
            if let (Ok(num), Ok(den)) = (num.parse::<BigInt>(), den.parse::<BigInt>()) {
                if den > BigInt::from(0) {
                    return ReportValue::Exact(Rational::new(num, den));
                }
            }
        }
        if t.parse::<i128>().is_ok() && !t.contains('e') && !t.contains('.') {
            return ReportValue::Int(t.parse().unwrap());
        }
        if (t.contains('e') || t.contains('.')) && t.parse::<f64>().is_ok() {
            return ReportValue::Real(t.parse().unwrap());
        }
        ReportValue::Text(t.to_string())
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            ReportValue::Exact(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_real(&self) -> Option<f64> {
        match self {
            ReportValue::Real(x) => Some(*x),
            _ => None,
        }
    }
}

/// One computed integral (or audit) with its inputs and named sub-terms.
#[derive(Debug, Clone, PartialEq)]
pub struct IntegralReport {
    /// What was computed: `symmetry`, `mixed`, `selberg`, `lemma`, ...
    pub kind: String,
    /// Evaluation mode where one applies (`discrete` / `continuous`).
    pub mode: Option<String>,
    pub n: u64,
    pub h: u64,
    /// Label of the arithmetic function under the integral.
    pub f_label: String,
    /// Label of the second function for mixed quantities.
    pub f1_label: Option<String>,
    /// Headline value.
    pub value: ReportValue,
    /// Named sub-terms (diagonal, envelope, tails, ratios, ...).
    pub terms: BTreeMap<String, ReportValue>,
}

impl IntegralReport {
    pub fn new(
        kind: impl Into<String>,
        n: u64,
        h: u64,
        f_label: impl Into<String>,
        value: ReportValue,
    ) -> Self {
        IntegralReport {
            kind: kind.into(),
            mode: None,
            n,
            h,
            f_label: f_label.into(),
            f1_label: None,
            value,
            terms: BTreeMap::new(),
        }
    }

    pub fn with_mode(mut self, mode: impl Into<String>) -> Self {
        self.mode = Some(mode.into());
        self
    }

    pub fn with_f1(mut self, label: impl Into<String>) -> Self {
        self.f1_label = Some(label.into());
        self
    }

    pub fn with_term(mut self, name: impl Into<String>, value: ReportValue) -> Self {
        self.terms.insert(name.into(), value);
        self
    }

    pub fn term(&self, name: &str) -> Option<&ReportValue> {
        self.terms.get(name)
    }

    /// Serialises to pretty JSON with sorted keys (deterministic bytes).
    pub fn to_json_string(&self) -> String {
        let mut root = serde_json::Map::new();
        root.insert("kind".into(), self.kind.clone().into());
        if let Some(mode) = &self.mode {
            root.insert("mode".into(), mode.clone().into());
        }
        root.insert("N".into(), self.n.into());
        root.insert("h".into(), self.h.into());
        root.insert("f".into(), self.f_label.clone().into());
        if let Some(f1) = &self.f1_label {
            root.insert("f1".into(), f1.clone().into());
        }
        root.insert("value".into(), self.value.render().into());
        let mut terms = serde_json::Map::new();
        for (name, value) in &self.terms {
            terms.insert(name.clone(), value.render().into());
        }
        root.insert("terms".into(), serde_json::Value::Object(terms));
        let mut out = serde_json::to_string_pretty(&serde_json::Value::Object(root))
            .expect("JSON serialisation of plain maps cannot fail");
        out.push('\n');
        out
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text)
            .map_err(|e| Error::Format(format!("invalid report JSON: {e}")))?;
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Format("report JSON must be an object".into()))?;
        let get_str = |key: &str| -> Result<String> {
            obj.get(key)
                .and_then(|v| v.as_str())
                .map(str::to_string)
                .ok_or_else(|| Error::Format(format!("report JSON missing string field `{key}`")))
        };
        let get_u64 = |key: &str| -> Result<u64> {
            obj.get(key)
                .and_then(|v| v.as_u64())
                .ok_or_else(|| Error::Format(format!("report JSON missing integer field `{key}`")))
        };
        let opt_str = |key: &str| -> Option<String> {
            obj.get(key).and_then(|v| v.as_str()).map(str::to_string)
        };
        let mut terms = BTreeMap::new();
        if let Some(serde_json::Value::Object(map)) = obj.get("terms") {
            for (name, v) in map {
                let s = v
                    .as_str()
                    .ok_or_else(|| Error::Format(format!("term `{name}` must be a string")))?;
                terms.insert(name.clone(), ReportValue::parse(s));
            }
        }
        Ok(IntegralReport {
            kind: get_str("kind")?,
            mode: opt_str("mode"),
            n: get_u64("N")?,
            h: get_u64("h")?,
            f_label: get_str("f")?,
            f1_label: opt_str("f1"),
            value: ReportValue::parse(&get_str("value")?),
            terms,
        })
    }

    pub fn write_json(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_json_string())?;
        Ok(())
    }

    pub fn read_json(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        Self::from_json_str(&text)
    }
}

/// Renders a batch of reports as one CSV table. Term columns are the
/// sorted union of all term names, prefixed `term:`; absent cells stay
/// empty. Column order is fixed, so equal inputs give equal bytes.
pub fn reports_to_csv(reports: &[IntegralReport]) -> Result<String> {
    let mut term_names: Vec<String> = Vec::new();
    for report in reports {
        for name in report.terms.keys() {
            if !term_names.contains(name) {
                term_names.push(name.clone());
            }
        }
    }
    term_names.sort();

    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header = vec![
        "kind".to_string(),
        "mode".to_string(),
        "N".to_string(),
        "h".to_string(),
        "f".to_string(),
        "f1".to_string(),
        "value".to_string(),
    ];
    header.extend(term_names.iter().map(|n| format!("term:{n}")));
    writer
        .write_record(&header)
        .map_err(|e| Error::Format(format!("CSV write failed: {e}")))?;
    for report in reports {
        let mut record = vec![
            report.kind.clone(),
            report.mode.clone().unwrap_or_default(),
            report.n.to_string(),
            report.h.to_string(),
            report.f_label.clone(),
            report.f1_label.clone().unwrap_or_default(),
            report.value.render(),
        ];
        for name in &term_names {
            record.push(report.terms.get(name).map(|v| v.render()).unwrap_or_default());
        }
        writer
            .write_record(&record)
            .map_err(|e| Error::Format(format!("CSV write failed: {e}")))?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| Error::Format(format!("CSV write failed: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::Format(format!("CSV not UTF-8: {e}")))
}

/// Parses a CSV table produced by [`reports_to_csv`] back into reports.
pub fn reports_from_csv(text: &str) -> Result<Vec<IntegralReport>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header = reader
        .headers()
        .map_err(|e| Error::Format(format!("CSV read failed: {e}")))?
        .clone();
    let fixed = ["kind", "mode", "N", "h", "f", "f1", "value"];
    for (i, name) in fixed.iter().enumerate() {
        if header.get(i) != Some(*name) {
            return Err(Error::Format(format!(
                "report CSV column {i} must be `{name}`, found `{}`",
                header.get(i).unwrap_or("<missing>")
            )));
        }
    }
    let term_names: Vec<String> = header
        .iter()
        .skip(fixed.len())
        .map(|name| {
            name.strip_prefix("term:")
                .map(str::to_string)
                .ok_or_else(|| Error::Format(format!("unexpected report CSV column `{name}`")))
        })
        .collect::<Result<_>>()?;

    let mut out = Vec::new();
    for row in reader.records() {
        let row = row.map_err(|e| Error::Format(format!("CSV read failed: {e}")))?;
        let cell = |i: usize| row.get(i).unwrap_or("").to_string();
        let parse_u64 = |i: usize, name: &str| -> Result<u64> {
            row.get(i)
                .unwrap_or("")
                .parse()
                .map_err(|_| Error::Format(format!("report CSV field `{name}` must be an integer")))
        };
        let mut terms = BTreeMap::new();
        for (k, name) in term_names.iter().enumerate() {
            let raw = cell(fixed.len() + k);
            if !raw.is_empty() {
                terms.insert(name.clone(), ReportValue::parse(&raw));
            }
        }
        let mode = cell(1);
        let f1 = cell(5);
        out.push(IntegralReport {
            kind: cell(0),
            mode: if mode.is_empty() { None } else { Some(mode) },
            n: parse_u64(2, "n")?,
            h: parse_u64(3, "h")?,
            f_label: cell(4),
            f1_label: if f1.is_empty() { None } else { Some(f1) },
            value: ReportValue::parse(&cell(6)),
            terms,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn value_rendering_is_canonical() {
        assert_eq!(ReportValue::exact(rat(3, 4)).render(), "3/4");
        assert_eq!(ReportValue::exact(rat(5, 1)).render(), "5/1");
        assert_eq!(ReportValue::exact(rat(-2, 6)).render(), "-1/3");
        assert_eq!(ReportValue::int(42).render(), "42");
        assert_eq!(ReportValue::real(13.0).render(), "1.30000000000000e1");
        assert_eq!(ReportValue::text("window_exact").render(), "window_exact");
    }

    #[test]
    fn value_round_trips() {
        let values = [
            ReportValue::exact(rat(63163, 13440)),
            ReportValue::exact(rat(-7, 2)),
            ReportValue::exact(rat(5, 1)),
            ReportValue::int(-12),
            ReportValue::int(0),
            ReportValue::real(0.0012345),
            ReportValue::real(-9.75e80),
            ReportValue::text("dk:k=3"),
        ];
        for v in values {
            assert_eq!(ReportValue::parse(&v.render()), v, "{}", v.render());
        }
    }

    fn sample() -> IntegralReport {
        IntegralReport::new("symmetry", 4, 1, "d_2", ReportValue::exact(rat(13, 1)))
            .with_mode("continuous")
            .with_term("diagonal", ReportValue::exact(rat(3, 4)))
            .with_term("ratio", ReportValue::real(0.25))
    }

    #[test]
    fn json_round_trip_and_stability() {
        let report = sample();
        let text = report.to_json_string();
        assert_eq!(text, report.to_json_string());
        let back = IntegralReport::from_json_str(&text).unwrap();
        assert_eq!(back, report);
        assert!(text.ends_with('\n'));
        // keys are sorted by serde_json's BTreeMap backend
        let kind_pos = text.find("\"kind\"").unwrap();
        let value_pos = text.find("\"value\"").unwrap();
        assert!(kind_pos < value_pos);
    }

    #[test]
    fn json_errors_are_format_errors() {
        let err = IntegralReport::from_json_str("{not json").unwrap_err();
        assert_eq!(err.exit_code(), 1);
        let err = IntegralReport::from_json_str("{\"kind\": \"x\"}").unwrap_err();
        assert!(matches!(err, Error::Format(_)));
    }

    #[test]
    fn csv_round_trip() {
        let mut second = sample();
        second.kind = "mixed".into();
        second.f1_label = Some("mu".into());
        second.terms.insert("tail".into(), ReportValue::int(7));
        second.terms.remove("ratio");
        let reports = vec![sample(), second];
        let text = reports_to_csv(&reports).unwrap();
        assert_eq!(text, reports_to_csv(&reports).unwrap());
        let back = reports_from_csv(&text).unwrap();
        assert_eq!(back, reports);
    }

    #[test]
    fn csv_rejects_foreign_columns() {
        let err = reports_from_csv("kind,mode,N,h,f,f1,value,bogus\n").unwrap_err();
        assert!(matches!(err, Error::Format(_)));
        let err = reports_from_csv("a,b\n").unwrap_err();
        assert!(matches!(err, Error::Format(_)));
    }

    #[test]
    fn file_round_trip() {
        let dir = std::env::temp_dir().join("symlab-report-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("report.json");
        let report = sample();
        report.write_json(&path).unwrap();
        assert_eq!(IntegralReport::read_json(&path).unwrap(), report);
        std::fs::remove_dir_all(&dir).ok();
    }
}
