//! Exact computations for the exceptional Lie superalgebra E(3,6) inside
//! E(5,10): brackets and gradings, the degree-zero part and its irreducible
//! modules, induced (generalized Verma) modules, singular vector search and
//! the differential operators between degenerate modules.

pub mod dops;
pub mod e36;
pub mod linalg;
pub mod parse;
pub mod e510;
pub mod g0rep;
pub mod induced;
pub mod scalar;
pub mod verify;
