pub mod arith;
pub mod characters;
pub mod cli;
pub mod error;
pub mod partitions;

pub use error::{Error, Result};
pub use partitions::Partition;
pub mod engine;
pub mod pieri;
pub mod verify;
