//! File formats, parallel search and the `revgraph` command-line tool on top
//! of [`revgraph_core`].

pub mod bfs;
pub mod cli;
pub mod dump;
pub mod enumerate;
mod error;
pub mod report;
pub mod tfc;
pub mod tv;

pub use error::{Error, Result};
