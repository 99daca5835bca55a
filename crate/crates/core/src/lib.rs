//! Lower bounds on the number of irreducible components of Severi
//! varieties on toric surfaces, computed from sublattice censuses of the
//! defining polygon, together with the tropical and complex-numerical
//! invariants that tell those components apart.
//!
//! * [`lattice`]: exact polygon and sublattice arithmetic.
//! * [`census`]: intermediate lattices, lower bounds and kite counts.
//! * [`triangulation`]: convex triangulations, regularity certificates and
//!   dual tropical curves.
//! * [`numerics`]: Laurent polynomials, critical data, passports, nodal
//!   partitions and amoeba samples.

pub mod arith;
pub mod census;
pub mod exact;
pub mod lattice;
pub mod numerics;
pub mod triangulation;

pub use census::{Census, CensusEntry, CensusError};
pub use lattice::{IntPoint, KiteSpec, LatticeError, LatticePolygon, Region, Sublattice};
