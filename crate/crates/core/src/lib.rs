pub mod cp;
pub mod error;
pub mod gf;
pub mod lr;
pub mod modules;
pub mod partition;
pub mod registry;
pub mod variety;

pub use error::{Error, Result};
pub use partition::Partition;
