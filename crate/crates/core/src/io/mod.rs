//! External surfaces: edge-list files, TOML configs, CSV results and run
//! manifests.

mod config;
mod csv_out;
mod edgelist;
mod manifest;

pub use config::ConfigFile;
pub use csv_out::{write_aggregate_csv, write_curves_csv, AGGREGATE_HEADER, CURVE_HEADER};
pub use edgelist::{ingest_edge_list, parse_edge_list, write_edge_list, write_label_map, IngestReport, IngestedGraph};
pub use manifest::{CellSeed, Manifest};

use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot open {path}: {source}")]
    Open {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("read error at line {line}: {source}")]
    Read {
        line: usize,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("edge list contains no edges")]
    EmptyEdgeList,
    #[error("config: {0}")]
    ConfigSyntax(#[from] toml::de::Error),
    #[error("config: {0}")]
    ConfigWrite(#[from] toml::ser::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Write(#[from] std::io::Error),
}
