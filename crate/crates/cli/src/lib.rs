//! Library surface of the ultrasumm command-line tool, shared between
//! the binary and the integration tests.

pub mod commands;
pub mod config;
pub mod timing;

pub use ultrasumm_core as core;
