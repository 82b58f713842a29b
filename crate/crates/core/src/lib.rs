pub mod branch;
pub mod chase;
pub mod curve;
pub mod mhs;
pub mod scenario;
pub mod wps;
pub mod cli;
