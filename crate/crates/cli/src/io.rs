//! Signal file formats.
//!
//! JSON: `{"grid": {"start": f, "step": f, "count": n}, "values": [[re, im], ...]}`.
//! Serialization uses shortest-round-trip floats, so a JSON round trip is
//! bit-exact. CSV: header `t,re,im`, one row per sample, floats printed in
//! shortest-round-trip form (17 significant digits suffice to recover every
//! bit); the grid is reconstructed from the `t` column.

use std::fs;
use std::path::Path;

use lctconv_core::{Complex64, SampleGrid, SampledSignal};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignalFormat {
    Json,
    Csv,
}

impl SignalFormat {
    /// Infer from the file extension; JSON when unknown.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("csv") => SignalFormat::Csv,
            _ => SignalFormat::Json,
        }
    }
}

impl std::str::FromStr for SignalFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(SignalFormat::Json),
            "csv" => Ok(SignalFormat::Csv),
            other => Err(format!("unknown format '{other}', expected json or csv")),
        }
    }
}

#[derive(Serialize, Deserialize)]
pub struct GridJson {
    pub start: f64,
    pub step: f64,
    pub count: usize,
}

impl From<&SampleGrid> for GridJson {
    fn from(g: &SampleGrid) -> Self {
        Self {
            start: g.start(),
            step: g.step(),
            count: g.count(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct SignalJson {
    grid: GridJson,
    values: Vec<[f64; 2]>,
}

fn parse_error(path: &Path, line: Option<usize>, message: impl Into<String>) -> CliError {
    CliError::Parse {
        path: path.display().to_string(),
        line,
        message: message.into(),
    }
}

fn build_signal(
    path: &Path,
    grid: GridJson,
    values: Vec<Complex64>,
) -> Result<SampledSignal, CliError> {
    if values.len() != grid.count {
        return Err(CliError::GridMismatch {
            expected: grid.count,
            got: values.len(),
        });
    }
    let grid = SampleGrid::new(grid.start, grid.step, grid.count).map_err(CliError::Domain)?;
    SampledSignal::new(grid, values).map_err(|e| match e {
        lctconv_core::LctError::NonFiniteSample { index } => {
            parse_error(path, None, format!("non-finite value at sample {index}"))
        }
        other => CliError::Domain(other),
    })
}

/// Read a signal file, inferring the format from the extension.
pub fn read_signal(path: impl AsRef<Path>) -> Result<SampledSignal, CliError> {
    let path = path.as_ref();
    match SignalFormat::from_path(path) {
        SignalFormat::Json => read_json(path),
        SignalFormat::Csv => read_csv(path),
    }
}

fn read_json(path: &Path) -> Result<SampledSignal, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let parsed: SignalJson = serde_json::from_str(&text)
        .map_err(|e| parse_error(path, Some(e.line()), e.to_string()))?;
    let values = parsed
        .values
        .iter()
        .map(|[re, im]| Complex64::new(*re, *im))
        .collect();
    build_signal(path, parsed.grid, values)
}

fn read_csv(path: &Path) -> Result<SampledSignal, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| parse_error(path, Some(1), "empty file"))?;
    if header.trim() != "t,re,im" {
        return Err(parse_error(path, Some(1), "expected header 't,re,im'"));
    }

    let mut ts = Vec::new();
    let mut values = Vec::new();
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let mut fields = line.split(',');
        let mut field = |name: &str| {
            fields
                .next()
                .ok_or_else(|| parse_error(path, Some(line_no), format!("missing field {name}")))
                .and_then(|s| {
                    s.trim()
                        .parse::<f64>()
                        .map_err(|e| parse_error(path, Some(line_no), format!("field {name}: {e}")))
                })
        };
        let t = field("t")?;
        let re = field("re")?;
        let im = field("im")?;
        if !(t.is_finite() && re.is_finite() && im.is_finite()) {
            return Err(parse_error(path, Some(line_no), "non-finite value"));
        }
        ts.push(t);
        values.push(Complex64::new(re, im));
    }
    if ts.len() < 2 {
        return Err(parse_error(path, None, "need at least 2 samples"));
    }
    let start = ts[0];
    let step = (ts[ts.len() - 1] - ts[0]) / (ts.len() - 1) as f64;
    let count = ts.len();
    build_signal(path, GridJson { start, step, count }, values)
}

/// Write a signal in the requested format. Empty paths are rejected.
pub fn write_signal(
    signal: &SampledSignal,
    path: impl AsRef<Path>,
    format: SignalFormat,
) -> Result<(), CliError> {
    let path = path.as_ref();
    if path.as_os_str().is_empty() {
        return Err(CliError::Io {
            path: String::from("(empty path)"),
            source: std::io::Error::new(std::io::ErrorKind::InvalidInput, "empty output path"),
        });
    }
    let text = match format {
        SignalFormat::Json => {
            let json = SignalJson {
                grid: GridJson::from(signal.grid()),
                values: signal.values().iter().map(|v| [v.re, v.im]).collect(),
            };
            let mut s = serde_json::to_string_pretty(&json).expect("serializable");
            s.push('\n');
            s
        }
        SignalFormat::Csv => {
            let mut s = String::from("t,re,im\n");
            for (t, v) in signal.grid().points().zip(signal.values()) {
                s.push_str(&format!("{t},{},{}\n", v.re, v.im));
            }
            s
        }
    };
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Plot-ready data dump: CSV of axis coordinate, magnitude, and phase.
pub fn write_plot_data(signal: &SampledSignal, path: impl AsRef<Path>) -> Result<(), CliError> {
    let path = path.as_ref();
    let mut s = String::from("axis,magnitude,phase\n");
    for (t, v) in signal.grid().points().zip(signal.values()) {
        s.push_str(&format!("{t},{},{}\n", v.norm(), v.im.atan2(v.re)));
    }
    fs::write(path, s).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}
