//! CSV/JSON artifacts. Every file is written to a temporary file in the
//! output directory and renamed into place.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use tempfile::NamedTempFile;
use umoo_core::benchmark::{LabeledPoint, Metrics};

/// `x` with six significant digits, trailing zeros dropped; exponent form
/// outside `[1e-5, 1e6)`.
pub fn sig6(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..6).contains(&exp) {
        return format!("{}e{exp}", trim_zeros(mantissa));
    }
    let decimals = (5 - exp) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn flag(b: bool) -> &'static str {
    if b {
        "1"
    } else {
        "0"
    }
}

/// Three decimals for terminal summaries, exponent form for tiny values.
pub fn round3(x: f64) -> String {
    if x != 0.0 && x.abs() < 1e-3 {
        format!("{x:.3e}")
    } else {
        format!("{x:.3}")
    }
}

fn write_atomic(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    let mut tmp = NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn csv_bytes(header: &[&str], rows: impl Iterator<Item = Vec<String>>) -> io::Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    w.into_inner().map_err(|e| e.into_error())
}

/// Writes `control.csv`, `operational.csv`, `front.csv` and `metrics.json`.
pub fn write_artifacts(dir: &Path, points: &[LabeledPoint], metrics: &Metrics) -> io::Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let control = csv_bytes(
        &["x", "y", "safe", "pareto"],
        points.iter().map(|p| {
            vec![
                sig6(p.control.0[0]),
                sig6(p.control.0[1]),
                flag(p.safe).into(),
                flag(p.pareto).into(),
            ]
        }),
    )?;
    let operational = csv_bytes(
        &["f1", "f2", "safe", "pareto"],
        points.iter().map(|p| {
            vec![
                sig6(p.objectives.0[0]),
                sig6(p.objectives.0[1]),
                flag(p.safe).into(),
                flag(p.pareto).into(),
            ]
        }),
    )?;
    let mut front: Vec<[f64; 2]> = points.iter().filter(|p| p.pareto).map(|p| p.objectives.0).collect();
    front.sort_by(|a, b| a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1])));
    let front = csv_bytes(&["f1", "f2"], front.iter().map(|[a, b]| vec![sig6(*a), sig6(*b)]))?;
    let mut json = serde_json::to_string_pretty(metrics).map_err(io::Error::other)?;
    json.push('\n');

    let files = [
        ("control.csv", control),
        ("operational.csv", operational),
        ("front.csv", front),
        ("metrics.json", json.into_bytes()),
    ];
    let mut written = Vec::new();
    for (name, bytes) in files {
        let path = dir.join(name);
        write_atomic(&path, &bytes)?;
        written.push(path);
    }
    Ok(written)
}
