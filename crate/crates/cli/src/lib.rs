//! Command-line front end: instance files, reports and plots.

pub mod app;
pub mod commands;
pub mod error;
pub mod files;
pub mod plot;
pub mod render;
