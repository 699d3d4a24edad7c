pub mod characters;
pub mod error;
pub mod hurwitz;
pub mod lagrange;
pub mod partition;
pub mod polynomiality;
pub mod rational;
pub mod report;
pub mod series;
pub mod symbol;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{padded_partitions, partitions_of, PaddedPartition, Partition};
pub use rational::Rational;
