pub mod balanced;
pub mod bijection;
pub mod error;
pub mod hook;
pub mod kraskiewicz;
pub mod padding;
pub mod partition;
pub mod standard;
pub mod tableau;
pub mod trapezoid;
pub mod typeb;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{Cell, StrictPartition};
pub use tableau::ShiftedTableau;
