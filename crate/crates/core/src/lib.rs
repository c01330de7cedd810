//! Exact verification of the flag-algebra certificate showing that the
//! maximum density of the three-edge path `P3` among `K_{r+1}`-free graphs
//! tends to `12((r-1)/r)^3`, together with exhaustive small-order checks
//! that the Turán graph is the unique maximiser.
//!
//! * [`graphs`]: small-graph kernel (canonical forms, graph6, counting)
//! * [`exactmath`]: rationals, polynomials, rational functions in `r`,
//!   ray positivity
//! * [`flags`]: typed flags, densities, products, unlabelling
//! * [`certificate`]: the assembled certificate and its verdicts
//! * [`turan`]: exact path counts in complete multipartite graphs
//! * [`search`]: exhaustive generalized Turán numbers

pub mod certificate;
pub mod error;
pub mod exactmath;
pub mod flags;
pub mod graphs;
pub mod search;
pub mod turan;

pub use error::{Error, Result};
