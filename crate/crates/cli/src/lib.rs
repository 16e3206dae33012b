//! Library side of the `circdepth` binary: generators, reports and renderings
//! as functions from input bytes to output text.

pub mod commands;
pub mod report;
pub mod svg;

pub use commands::{analyze, generate, render, verify, CheckName, Failure, Generator, RenderWhat};
