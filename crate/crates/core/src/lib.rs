//! Exact weight combinatorics for semi-orthogonal decompositions of linear
//! quotient stacks `W/G`, with `G` a connected reductive group from a small
//! classical catalog.
//!
//! Everything is computed over ℚ. The layers, bottom to top:
//!
//! * [`kernel`]: rationals, a bounded exact simplex, lattice enumeration.
//! * [`roots`]: root data, Weyl groups, Levi subdata.
//! * [`rep`]: weight multisets, sign partitions, destabilizers, twists.
//! * [`zonotope`]: weight zonotopes, face signatures, ε-regions.
//! * [`partition`]: the partition of dominant weights into faces.
//! * [`sod`]: ordered components, NCCR certificates, presets.
//! * [`characters`]: characters and graded Hom-block dimensions.

pub mod characters;
pub mod error;
pub mod kernel;
pub mod partition;
pub mod rep;
pub mod roots;
pub mod sod;
pub mod zonotope;

pub use error::{Result, SodError};
pub use kernel::{rat, frac, CoweightVector, Matrix, Rational, RationalVector};
