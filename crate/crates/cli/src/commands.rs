//! Batch commands behind `sog render`, `sog trace` and `sog dj`.
//!
//! Exit codes: 0 success, 2 user error (bad circuit, bad flags), 3 environment
//! error (unreadable input, unwritable output).

use std::fs;
use std::path::{Path, PathBuf};

use stateogram::{
    dj_circuit, parse_circuit, render_strip, render_svg, serialize_circuit, Circuit, FormatError,
    Oracle, OracleError, RenderStyle, SvgError, TraceDocument,
};
use thiserror::Error;

pub const EXIT_USER: i32 = 2;
pub const EXIT_ENVIRONMENT: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Circuit {
        path: PathBuf,
        #[source]
        source: FormatError,
    },
    #[error(transparent)]
    Style(#[from] SvgError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Circuit { .. } | CliError::Style(_) | CliError::Oracle(_) => EXIT_USER,
            CliError::Read { .. } | CliError::Write { .. } => EXIT_ENVIRONMENT,
        }
    }
}

pub fn load_circuit(path: &Path) -> Result<Circuit, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    parse_circuit(&text).map_err(|source| CliError::Circuit {
        path: path.to_path_buf(),
        source,
    })
}

/// File name of the SVG for trace step `k`.
pub fn step_file_name(k: usize) -> String {
    format!("step-{k:03}.svg")
}

/// Writes `step-NNN.svg` for every trace step plus `strip.svg`. Everything is
/// rendered before the first file is written, so input errors leave no output.
pub fn cmd_render(circuit_path: &Path, out_dir: &Path, style: &RenderStyle) -> Result<Vec<PathBuf>, CliError> {
    let circuit = load_circuit(circuit_path)?;
    style.validate()?;
    let layouts: Vec<_> = stateogram::run_circuit(&circuit)
        .into_iter()
        .map(|step| step.layout)
        .collect();

    let mut files = Vec::with_capacity(layouts.len() + 1);
    for (k, layout) in layouts.iter().enumerate() {
        files.push((step_file_name(k), render_svg(layout, style)?));
    }
    files.push(("strip.svg".to_string(), render_strip(&layouts, style)?));

    fs::create_dir_all(out_dir).map_err(|source| CliError::Write {
        path: out_dir.to_path_buf(),
        source,
    })?;
    let mut written = Vec::with_capacity(files.len());
    for (name, svg) in files {
        let path = out_dir.join(name);
        fs::write(&path, svg).map_err(|source| CliError::Write {
            path: path.clone(),
            source,
        })?;
        written.push(path);
    }
    Ok(written)
}

/// Canonical trace JSON for the circuit at `circuit_path`.
pub fn cmd_trace(circuit_path: &Path) -> Result<String, CliError> {
    let circuit = load_circuit(circuit_path)?;
    Ok(TraceDocument::for_circuit(&circuit).to_json())
}

/// Canonical circuit document of the Deutsch-Jozsa circuit for `oracle`.
pub fn cmd_dj(oracle: Oracle, n_qubits: usize) -> Result<String, CliError> {
    Ok(serialize_circuit(&dj_circuit(oracle, n_qubits)?))
}
