//! File formats, configuration and the command-line driver around
//! [`textkg_core`].

pub mod config;
pub mod conllu;
pub mod dot;
pub mod error;
pub mod jsonl;
pub mod run;

pub use config::{DebugOutputs, FileConfig, InputFormat, PipelineConfig, CONFIG_ENV};
pub use error::{Error, Result};
pub use run::{extract_file, run_pipeline, RunSummary};
pub use textkg_core as core;
