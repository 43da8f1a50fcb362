//! Command line front end and local JSON service for the skewtilt engine.

pub mod api;
pub mod commands;
pub mod service;
