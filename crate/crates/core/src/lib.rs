//! Exact combinatorics of special fibers of Mustafin varieties for lattice
//! configurations in a single apartment of the Bruhat–Tits building.
//!
//! Lattice classes are integer points of the tropical torus `Z^d / Z·1`.
//! The irreducible components of the special fiber are read off from the
//! lattice points of the min-plus convex hull: every hull point carries a
//! tuple of diagonal 0/1 reduction maps, whose kernels determine the
//! dimension, multidegrees and Hilbert function of the image variety.
//!
//! Modules, bottom-up:
//!
//! - [`tropical`]: torus points, configurations, min-plus combinations,
//!   segments, tropical determinants and general position.
//! - [`hull`]: hull membership, lattice-point enumeration and skeleton
//!   signatures.
//! - [`apartment`]: diagonal lattice classes, building adjacency, convexity
//!   and the local-model chain.
//! - [`multidegree`]: kernel-intersection tables, admissible multidegree
//!   tuples and multigraded Hilbert functions.
//! - [`special_fiber`]: reduction profiles, component classification and
//!   realization.
//! - [`linked_graph`]: the graph of adjacent hull points with its diagonal
//!   edge maps, path composition and exactness checks.
//! - [`oracle`]: brute-force reference computations used for verification.

pub mod apartment;
pub mod error;
pub mod hull;
pub mod linked_graph;
pub mod multidegree;
pub mod oracle;
pub mod special_fiber;
pub mod tropical;

pub use error::{Error, Result};
pub use tropical::{Configuration, TorusPoint};
