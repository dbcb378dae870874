//! Configuration, pipeline and report rendering behind the `sodlab` binary.

pub mod config;
pub mod pipeline;
pub mod report;

pub use config::{ConfigError, JobConfig, ResolvedJob};
pub use pipeline::{run, Outcome, Status, Subcommand};
pub use report::{render, render_json, render_text, Format};
