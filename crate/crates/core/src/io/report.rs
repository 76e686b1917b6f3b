//! JSON and CSV renderings of index reports.
//!
//! Field names are the struct field names (`m1_pos`, `s_net`, `g_mixed`, …)
//! and are a compatibility contract. All values are base-10 integers.

use serde::Serialize;
use thiserror::Error;

use crate::degree_indices::{FirstZagrebReport, IrregularityReport, SecondZagrebReport};
use crate::distance::{GutmanReport, SchultzReport};
use crate::oracle::VerificationReport;
use crate::IndexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReportError {
    #[error("CSV output is not supported for nested verification reports")]
    CsvUnsupported,
}

/// A flat report with a fixed column layout.
pub trait TabularReport {
    const FIELDS: &'static [&'static str];
    fn values(&self) -> Vec<String>;
}

macro_rules! tabular {
    ($ty:ty { $($field:ident),+ $(,)? }) => {
        impl TabularReport for $ty {
            const FIELDS: &'static [&'static str] = &[$(stringify!($field)),+];
            fn values(&self) -> Vec<String> {
                vec![$(self.$field.to_string()),+]
            }
        }
    };
}

tabular!(FirstZagrebReport {
    m1_pos,
    m1_neg,
    m1_mixed,
    m1_net,
    m1_underlying
});
tabular!(SecondZagrebReport {
    m2_pos,
    m2_neg,
    m2_mixed,
    m2_net,
    m2_underlying
});
tabular!(IrregularityReport {
    irr_pos,
    irr_neg,
    irr_net,
    irr_underlying,
    irrt_pos,
    irrt_neg,
    irrt_net,
    irrt_underlying
});
tabular!(SchultzReport {
    s_pos,
    s_neg,
    s_net,
    s_underlying
});
tabular!(GutmanReport {
    g_pos,
    g_neg,
    g_mixed,
    g_net,
    g_underlying
});

/// Header row plus one row per report. An empty slice yields the header only.
pub fn reports_to_csv<R: TabularReport>(reports: &[R]) -> String {
    let mut out = R::FIELDS.join(",");
    out.push('\n');
    for r in reports {
        out.push_str(&r.values().join(","));
        out.push('\n');
    }
    out
}

pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize infallibly");
    text.push('\n');
    text
}

/// Any single report, for format-dispatched output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Report {
    FirstZagreb(FirstZagrebReport),
    SecondZagreb(SecondZagrebReport),
    Irregularity(IrregularityReport),
    Schultz(SchultzReport),
    Gutman(GutmanReport),
    Verification(VerificationReport),
}

pub fn serialize_report(report: &Report, format: Format) -> Result<String, ReportError> {
    fn render<R: TabularReport + Serialize>(r: &R, format: Format) -> String {
        match format {
            Format::Json => to_json(r),
            Format::Csv => reports_to_csv(std::slice::from_ref(r)),
        }
    }
    Ok(match report {
        Report::FirstZagreb(r) => render(r, format),
        Report::SecondZagreb(r) => render(r, format),
        Report::Irregularity(r) => render(r, format),
        Report::Schultz(r) => render(r, format),
        Report::Gutman(r) => render(r, format),
        Report::Verification(r) => match format {
            Format::Json => to_json(r),
            Format::Csv => return Err(ReportError::CsvUnsupported),
        },
    })
}

impl IndexSet {
    /// One header row with the columns of every present family, in the
    /// order zagreb1, zagreb2, irregularity, schultz, gutman, and one row.
    pub fn to_csv(&self) -> String {
        let mut header: Vec<&str> = Vec::new();
        let mut row: Vec<String> = Vec::new();
        fn push<R: TabularReport>(r: &Option<R>, h: &mut Vec<&str>, row: &mut Vec<String>) {
            if let Some(r) = r {
                h.extend_from_slice(R::FIELDS);
                row.extend(r.values());
            }
        }
        push(&self.first_zagreb, &mut header, &mut row);
        push(&self.second_zagreb, &mut header, &mut row);
        push(&self.irregularity, &mut header, &mut row);
        push(&self.schultz, &mut header, &mut row);
        push(&self.gutman, &mut header, &mut row);
        format!("{}\n{}\n", header.join(","), row.join(","))
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Sign, SignedGraph};
    use crate::oracle::check_identities;

    fn p3() -> SignedGraph {
        SignedGraph::build(3, [(0, 1, Sign::Plus), (1, 2, Sign::Minus)]).unwrap()
    }

    #[test]
    fn first_zagreb_json() {
        let r = crate::degree_indices::first_zagreb(&p3());
        let text = serialize_report(&Report::FirstZagreb(r), Format::Json).unwrap();
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(
            value,
            serde_json::json!({
                "m1_pos": 2, "m1_neg": 2, "m1_mixed": 1, "m1_net": 2, "m1_underlying": 6
            })
        );
    }

    #[test]
    fn csv_header_only_for_empty_list() {
        assert_eq!(
            reports_to_csv::<SchultzReport>(&[]),
            "s_pos,s_neg,s_net,s_underlying\n"
        );
    }

    #[test]
    fn csv_rows() {
        let g = crate::distance::gutman(&p3()).unwrap();
        assert_eq!(
            serialize_report(&Report::Gutman(g), Format::Csv).unwrap(),
            "g_pos,g_neg,g_mixed,g_net,g_underlying\n1,1,4,-2,6\n"
        );
    }

    #[test]
    fn verification_csv_unsupported() {
        let report = Report::Verification(check_identities(&p3()));
        assert_eq!(
            serialize_report(&report, Format::Csv),
            Err(ReportError::CsvUnsupported)
        );
        assert!(serialize_report(&report, Format::Json)
            .unwrap()
            .contains("\"all_pass\": true"));
    }

    #[test]
    fn index_set_csv_is_wide() {
        let set = IndexSet {
            schultz: None,
            gutman: None,
            ..IndexSet::compute(&p3())
        };
        let csv = set.to_csv();
        let mut lines = csv.lines();
        assert!(lines.next().unwrap().starts_with("m1_pos,"));
        assert_eq!(lines.next().unwrap(), "2,2,1,2,6,1,1,2,0,4,1,1,2,2,2,2,4,2");
    }
}
