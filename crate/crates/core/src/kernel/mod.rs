//! Exact arithmetic substrate: rationals and vectors, a bounded-variable
//! simplex with strictness analysis, and lattice-point enumeration.

pub mod lattice;
pub mod lp;
pub mod rational;

pub use lattice::{enumerate_lattice, twist_member, Interval, TwistData};
pub use lp::{
    forced_tight, lp_optimize, strict_feasible, strict_point, Bound, BoxedLinearProgram,
    LpOutcome, LpStatus, Sense, TightnessReport,
};
pub use rational::{
    fmt_rational, frac, in_span, kernel_basis, parse_rational, rat, span_basis, CoweightVector,
    Matrix, Rational, RationalVector,
};
