//! Readers and writers for the documented file formats.
//!
//! - Records: JSON lines or CSV with header
//!   `N,two_j,var_Jx,mean_Jx,mean_Jy,mean_Jz,second_moment_perp,var_Jy,var_Jz`
//!   (the bracketed trailing columns are optional).
//! - Shots: CSV with header `shot_id,N,Jx,Jy,Jz`.
//! - Binned ensembles: JSON `{"two_j":…,"bins":[{"N":…,"Q":…,…}]}`.
//! - Criterion results: JSON lines, one result per (criterion, k).
//!
//! CSV numbers are written with 17 significant digits and JSON uses the
//! shortest lossless representation, so every emitted value round-trips
//! exactly.

use crate::criteria::{CriterionResult, MeasurementRecord, RawRecord};
use crate::fluctuating::{NBin, Shot, ShotEnsemble};
use crate::spin::SpinLength;
use serde::Deserialize;
use std::io::{BufRead, Write};

/// 17 significant digits: enough to reproduce any f64 exactly.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("line {line}: {source}")]
    Json {
        line: usize,
        source: serde_json::Error,
    },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Format(String),
}

/// Read measurement records from JSON lines.
pub fn read_records_jsonl(reader: impl BufRead) -> Result<Vec<MeasurementRecord>, IoError> {
    let mut records = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: MeasurementRecord =
            serde_json::from_str(&line).map_err(|source| IoError::Json { line: i + 1, source })?;
        records.push(rec);
    }
    Ok(records)
}

/// Read measurement records from CSV with the documented header.
pub fn read_records_csv(reader: impl std::io::Read) -> Result<Vec<MeasurementRecord>, IoError> {
    let mut rdr = csv::ReaderBuilder::new()
        .flexible(true)
        .from_reader(reader);
    let mut records = Vec::new();
    for row in rdr.deserialize::<RawRecord>() {
        let raw = row?;
        let rec = MeasurementRecord::try_from(raw)
            .map_err(|e| IoError::Format(format!("unphysical record: {e}")))?;
        records.push(rec);
    }
    Ok(records)
}

/// Dispatch on file extension: `.csv` is CSV, anything else JSON lines.
pub fn read_records_path(path: &std::path::Path) -> Result<Vec<MeasurementRecord>, IoError> {
    let file = std::fs::File::open(path)?;
    let buf = std::io::BufReader::new(file);
    if path.extension().and_then(|e| e.to_str()) == Some("csv") {
        read_records_csv(buf)
    } else {
        read_records_jsonl(buf)
    }
}

pub fn write_records_jsonl(
    mut writer: impl Write,
    records: &[MeasurementRecord],
) -> Result<(), IoError> {
    for rec in records {
        serde_json::to_writer(&mut writer, rec)
            .map_err(|source| IoError::Json { line: 0, source })?;
        writeln!(writer)?;
    }
    Ok(())
}

pub fn write_results_jsonl(
    mut writer: impl Write,
    results: &[CriterionResult],
) -> Result<(), IoError> {
    for res in results {
        serde_json::to_writer(&mut writer, res)
            .map_err(|source| IoError::Json { line: 0, source })?;
        writeln!(writer)?;
    }
    Ok(())
}

pub fn write_results_csv(
    mut writer: impl Write,
    results: &[CriterionResult],
) -> Result<(), IoError> {
    writeln!(writer, "criterion,k,applicable,lhs,rhs,margin,violated")?;
    for r in results {
        writeln!(
            writer,
            "{},{},{},{},{},{},{}",
            r.criterion,
            r.k,
            r.applicable,
            fmt_f64(r.lhs),
            fmt_f64(r.rhs),
            fmt_f64(r.margin),
            r.violated
        )?;
    }
    Ok(())
}

#[derive(Debug, Deserialize)]
struct ShotRow {
    #[allow(dead_code)]
    shot_id: u64,
    #[serde(rename = "N")]
    n: u64,
    #[serde(rename = "Jx")]
    jx: f64,
    #[serde(rename = "Jy")]
    jy: f64,
    #[serde(rename = "Jz")]
    jz: f64,
}

/// Read per-shot collective outcomes from CSV (`shot_id,N,Jx,Jy,Jz`).
pub fn read_shots_csv(reader: impl std::io::Read) -> Result<Vec<Shot>, IoError> {
    let mut rdr = csv::Reader::from_reader(reader);
    let mut shots = Vec::new();
    for row in rdr.deserialize::<ShotRow>() {
        let row = row?;
        shots.push(Shot {
            n: row.n,
            jx: row.jx,
            jy: row.jy,
            jz: row.jz,
        });
    }
    Ok(shots)
}

#[derive(Debug, Deserialize)]
struct BinsFile {
    two_j: u32,
    bins: Vec<NBin>,
}

/// Read a pre-binned ensemble from JSON.
pub fn read_bins_json(reader: impl std::io::Read) -> Result<ShotEnsemble, IoError> {
    let file: BinsFile =
        serde_json::from_reader(reader).map_err(|source| IoError::Json { line: 0, source })?;
    let j = SpinLength::from_two_j(file.two_j)
        .map_err(|e| IoError::Format(format!("invalid two_j: {e}")))?;
    ShotEnsemble::from_bins(j, file.bins).map_err(|e| IoError::Format(e.to_string()))
}

/// Load an ensemble from a path: `.csv` means per-shot data, `.json`
/// pre-binned moments.
pub fn read_ensemble_path(
    path: &std::path::Path,
    j: SpinLength,
) -> Result<ShotEnsemble, IoError> {
    let file = std::fs::File::open(path)?;
    if path.extension().and_then(|e| e.to_str()) == Some("csv") {
        let shots = read_shots_csv(file)?;
        ShotEnsemble::from_shots(j, &shots).map_err(|e| IoError::Format(e.to_string()))
    } else {
        read_bins_json(file)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::dicke_moments;

    #[test]
    fn record_round_trip_jsonl_and_csv() {
        let recs = vec![
            dicke_moments(10, SpinLength::HALF),
            dicke_moments(4, SpinLength::ONE),
        ];
        let mut buf = Vec::new();
        write_records_jsonl(&mut buf, &recs).unwrap();
        let back = read_records_jsonl(std::io::Cursor::new(buf)).unwrap();
        assert_eq!(back, recs);

        let csv = "\
N,two_j,var_Jx,mean_Jx,mean_Jy,mean_Jz,second_moment_perp
10,1,0.25,0.0,0.0,4.0,26.0
";
        let recs = read_records_csv(std::io::Cursor::new(csv)).unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].n, 10);
        assert_eq!(recs[0].var_jy, None);
    }

    #[test]
    fn unphysical_csv_record_is_rejected() {
        let csv = "\
N,two_j,var_Jx,mean_Jx,mean_Jy,mean_Jz,second_moment_perp
10,1,0.25,0.0,0.0,4.0,300.0
";
        assert!(read_records_csv(std::io::Cursor::new(csv)).is_err());
    }

    #[test]
    fn shots_and_bins_parse() {
        let csv = "\
shot_id,N,Jx,Jy,Jz
0,100,0.31,2.0,-1.0
1,100,-0.11,1.0,0.5
2,102,0.05,0.0,3.0
";
        let shots = read_shots_csv(std::io::Cursor::new(csv)).unwrap();
        assert_eq!(shots.len(), 3);
        let ens = ShotEnsemble::from_shots(SpinLength::HALF, &shots).unwrap();
        assert_eq!(ens.bins.len(), 2);

        let json = r#"{"two_j":1,"bins":[
            {"N":100,"Q":0.5,"var_jx":0.1,"mean_jz":0.0,"second_moment_perp":2000.0},
            {"N":120,"Q":0.5,"var_jx":0.2,"mean_jz":0.0,"second_moment_perp":2500.0}
        ]}"#;
        let ens = read_bins_json(std::io::Cursor::new(json)).unwrap();
        assert_eq!(ens.bins.len(), 2);
        assert_eq!(ens.min_n(), 100);
    }

    #[test]
    fn seventeen_digit_format_round_trips() {
        for x in [0.1, 1.0 / 3.0, 1e-300, 12345.6789, f64::MIN_POSITIVE] {
            let s = fmt_f64(x);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back.to_bits(), x.to_bits(), "{s}");
        }
    }
}
