//! Exact combinatorics and character theory for the spin blocks of the
//! double covers of the symmetric and alternating groups.
//!
//! The crate is organised bottom-up:
//!
//! * [`barcomb`]: bar partitions, the bar abacus (p̄-core and p̄-quotient),
//!   relative signs, ordinary p-cores and the doubling map.
//! * [`algnum`]: exact numbers `a + b·i` with `a`, `b` rational combinations
//!   of square roots.
//! * [`spinchar`]: spin labels, split classes and exact spin character values.
//! * [`blocks`]: spin p-blocks, basic-set labels and Brauer character counts.
//! * [`zverify`]: integer lattices, Hermite normal form and the basic-set
//!   verification engine.
//! * [`isometry`]: signed label bijections, their kernels and the Broué
//!   conditions.

pub mod algnum;
pub mod barcomb;
pub mod blocks;
mod error;
pub mod isometry;
pub mod spinchar;
pub mod zverify;

pub use algnum::AlgNum;
pub use barcomb::{BarPartition, BarQuotient, OddPrime, Partition, Sign};
pub use blocks::{BlockId, LocalLabel, Side};
pub use error::{Error, Result};
pub use isometry::{IsometrySpec, Kernel};
pub use spinchar::{Assoc, CharacterTable, ClassType, Cover, SpinLabel, SplitClass};
pub use zverify::{ValueMatrix, VerificationReport};
