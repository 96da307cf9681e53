pub mod betti;
pub mod column;
pub mod commands;
pub mod error;
pub mod generators;
pub mod matrix;
pub mod reduce;
pub mod trace;
pub mod verify;
