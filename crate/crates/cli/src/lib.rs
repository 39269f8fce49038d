//! Command implementations behind the `dialect-forge` binary.

pub mod commands;
pub mod server;
