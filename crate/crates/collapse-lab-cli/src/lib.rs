//! Implementation of the `collapse-lab` command-line tool: spec documents,
//! report envelopes, output rendering, and the subcommand bodies. The
//! binary in `main.rs` is a thin clap layer over [`commands`].

pub mod commands;
pub mod document;
pub mod render;
