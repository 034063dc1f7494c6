pub mod error;
pub mod exactmath;
pub mod planar;
pub mod roofs;
pub mod transfer;
pub mod weighted;
pub mod neargon;
pub mod oracle;
pub mod fixtures;
pub mod selftest;
pub mod cli;

pub use error::{Error, Result};
