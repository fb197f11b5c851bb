//! Command-line front end: spec-document parsing, report assembly and the
//! verify battery. The binary in `main.rs` is a thin wrapper over this.

pub mod commands;
pub mod doc;
pub mod markdown;
