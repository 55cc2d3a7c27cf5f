//! Numerical tolerances shared across modules.
//!
//! Every threshold that affects a reported result lives here so the CLI can
//! echo the values in force.

/// Default certified root radius for polynomials of degree <= 64.
pub const DEFAULT_ROOT_EPS: f64 = 1e-12;

/// Certified root radius used above degree 64.
pub const RELAXED_ROOT_EPS: f64 = 1e-9;

/// Degree above which [`RELAXED_ROOT_EPS`] applies.
pub const RELAXED_EPS_DEGREE: usize = 64;

/// Largest degree for which real-root classification is cross-checked
/// against an exact Sturm count.
pub const STURM_RECONCILE_MAX_DEGREE: usize = 96;

/// Atoms with |Im z| below this are treated as real.
pub const REAL_ATOM_TOL: f64 = 1e-9;

/// Minimum distance between an atom modulus and an energy cutoff radius.
pub const EXCEPTIONAL_RADIUS_TOL: f64 = 1e-9;

/// Tolerance for the capacity-one requirement.
pub const CAPACITY_ONE_TOL: f64 = 1e-12;

/// Total-mass slack allowed on measures.
pub const MASS_TOL: f64 = 1e-9;

/// Pairing tolerance for conjugate-symmetric atom sets.
pub const SYMMETRY_TOL: f64 = 1e-9;

/// Trapezoid nodes for integrals against equilibrium measures.
pub const QUADRATURE_NODES: usize = 4096;

/// Default discretizer circle radius is this scale times (1 + |z|).
pub const DISCRETIZE_RADIUS_SCALE: f64 = 1.0 / 1_048_576.0;

/// Aberth iteration budget.
pub const ABERTH_MAX_ITER: usize = 600;

/// Pick the default certified radius for a polynomial of the given degree.
pub fn default_root_eps(degree: usize) -> f64 {
    if degree <= RELAXED_EPS_DEGREE {
        DEFAULT_ROOT_EPS
    } else {
        RELAXED_ROOT_EPS
    }
}
