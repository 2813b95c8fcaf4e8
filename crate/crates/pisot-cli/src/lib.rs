//! Library half of the Pisot CLI: file formats, embedded reference tables,
//! report structures, and the enumeration/relation pipeline. The binary in
//! `main.rs` is a thin argument parser over these modules, and the
//! integration tests drive them directly.

pub mod format;
pub mod pipeline;
pub mod report;
pub mod tables;
