use std::fs::File;
use std::io::Write;
use std::path::{Path, PathBuf};

use thiserror::Error;

use super::sweep::{SweepRecord, SweepStatus};

pub const CSV_HEADER: [&str; 9] = [
    "alpha", "a_nm", "work_J", "efficiency", "q_ab_J", "q_bc_J", "q_cd_J", "q_da_J", "status",
];

#[derive(Debug, Error)]
pub enum OutputError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
    #[error("{path}, record {record}: {message}")]
    Malformed {
        path: PathBuf,
        record: usize,
        message: String,
    },
}

/// 17 significant digits: enough to round-trip every f64.
fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_float).unwrap_or_default()
}

fn row(record: &SweepRecord) -> [String; 9] {
    let c = record.cycle.as_ref();
    [
        fmt_float(record.alpha),
        fmt_float(record.a_nm),
        fmt_opt(c.map(|c| c.work)),
        fmt_opt(record.efficiency()),
        fmt_opt(c.map(|c| c.q_ab)),
        fmt_opt(c.map(|c| c.q_bc)),
        fmt_opt(c.map(|c| c.q_cd)),
        fmt_opt(c.map(|c| c.q_da)),
        record.status.as_str().to_owned(),
    ]
}

pub fn write_csv_to<W: Write>(records: &[SweepRecord], sink: W) -> csv::Result<()> {
    let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_writer(sink);
    writer.write_record(CSV_HEADER)?;
    for record in records {
        writer.write_record(row(record))?;
    }
    writer.flush()?;
    Ok(())
}

pub fn write_csv(records: &[SweepRecord], path: &Path) -> Result<(), OutputError> {
    let file = File::create(path).map_err(|source| OutputError::Io {
        path: path.to_owned(),
        source,
    })?;
    write_csv_to(records, std::io::BufWriter::new(file)).map_err(|source| OutputError::Csv {
        path: path.to_owned(),
        source,
    })
}

/// A CSV line read back.
#[derive(Debug, Clone, PartialEq)]
pub struct CsvRow {
    pub alpha: f64,
    pub a_nm: f64,
    pub work_j: Option<f64>,
    pub efficiency: Option<f64>,
    pub q_ab_j: Option<f64>,
    pub q_bc_j: Option<f64>,
    pub q_cd_j: Option<f64>,
    pub q_da_j: Option<f64>,
    pub status: SweepStatus,
}

impl From<&SweepRecord> for CsvRow {
    fn from(r: &SweepRecord) -> Self {
        let c = r.cycle.as_ref();
        Self {
            alpha: r.alpha,
            a_nm: r.a_nm,
            work_j: c.map(|c| c.work),
            efficiency: r.efficiency(),
            q_ab_j: c.map(|c| c.q_ab),
            q_bc_j: c.map(|c| c.q_bc),
            q_cd_j: c.map(|c| c.q_cd),
            q_da_j: c.map(|c| c.q_da),
            status: r.status,
        }
    }
}

pub fn read_csv(path: &Path) -> Result<Vec<CsvRow>, OutputError> {
    let csv_err = |source| OutputError::Csv {
        path: path.to_owned(),
        source,
    };
    let mut reader = csv::Reader::from_path(path).map_err(csv_err)?;
    let header = reader.headers().map_err(csv_err)?.clone();
    if header.iter().ne(CSV_HEADER) {
        return Err(OutputError::Malformed {
            path: path.to_owned(),
            record: 0,
            message: format!("unexpected header {header:?}"),
        });
    }
    let mut rows = Vec::new();
    for (i, line) in reader.records().enumerate() {
        let line = line.map_err(csv_err)?;
        let malformed = |message: String| OutputError::Malformed {
            path: path.to_owned(),
            record: i + 1,
            message,
        };
        let opt = |k: usize| -> Result<Option<f64>, OutputError> {
            match &line[k] {
                "" => Ok(None),
                s => s
                    .parse()
                    .map(Some)
                    .map_err(|e| malformed(format!("{}: {e}", CSV_HEADER[k]))),
            }
        };
        let req = |k: usize| opt(k)?.ok_or_else(|| malformed(format!("{} is empty", CSV_HEADER[k])));
        rows.push(CsvRow {
            alpha: req(0)?,
            a_nm: req(1)?,
            work_j: opt(2)?,
            efficiency: opt(3)?,
            q_ab_j: opt(4)?,
            q_bc_j: opt(5)?,
            q_cd_j: opt(6)?,
            q_da_j: opt(7)?,
            status: SweepStatus::parse(&line[8]).ok_or_else(|| malformed(format!("status {:?}", &line[8])))?,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::app::{parse_config, run_sweep};

    #[test]
    fn empty_sweep_writes_header_only() {
        let mut buf = Vec::new();
        write_csv_to(&[], &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "alpha,a_nm,work_J,efficiency,q_ab_J,q_bc_J,q_cd_J,q_da_J,status\r\n"
        );
    }

    #[test]
    fn floats_use_seventeen_digits_and_blank_for_undefined() {
        let cfg = parse_config(r#"{"a_list_nm": [20, 100], "alpha_list": [2.0]}"#).unwrap();
        let mut buf = Vec::new();
        write_csv_to(&run_sweep(&cfg), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert!(lines[1].starts_with("2.0000000000000000e0,2.0000000000000000e1,9.11519625938"), "{}", lines[1]);
        assert!(lines[1].ends_with(",ok"));
        let fields: Vec<_> = lines[2].split(',').collect();
        assert_eq!(fields[3], "");
        assert_eq!(fields[8], "eta-undefined");
    }

    #[test]
    fn missing_file_reports_path() {
        let err = write_csv(&[], Path::new("/nonexistent-dir/x.csv")).unwrap_err();
        assert!(err.to_string().contains("/nonexistent-dir/x.csv"));
    }
}
