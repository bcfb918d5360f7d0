//! Centralized caps and budgets.
//!
//! Every computation in this crate is exact. A cap never trades precision
//! for speed: when a budget is exceeded the operation either refuses (and
//! says so in its error) or falls back to fixed-seed sampling and reports
//! that it did. Tolerances do not exist here.

/// Largest order accepted for explicit multiplication tables and for the
/// cyclic and dihedral builders (the associativity check is cubic).
/// Symmetric groups are exempt; their degree is capped separately.
pub const DEFAULT_ORDER_CAP: usize = 64;

/// Orders up to this bound get the full cubic associativity re-check even
/// when the table was produced from a known-correct family construction.
pub const FULL_VALIDATION_ORDER: usize = 256;

/// Symmetric groups are built up to this degree (order 6! = 720).
pub const SYMMETRIC_DEGREE_CAP: usize = 6;

/// Largest group order for exhaustive d-partition enumeration. The sweep
/// is guarded by Bell-number growth; 12 keeps the worst case feasible.
pub const ENUMERATION_ORDER_CAP: usize = 12;

/// Largest prime for the exhaustive Schur-partition census of Z_p. The
/// census walks every set partition of Z_p with {0} as a part.
pub const GORDON_PRIME_CAP: u32 = 11;

/// Largest prime for 2^((p-1)/2)-style subset sweeps (about 2^30
/// candidates at the cap).
pub const SWEEP_PRIME_CAP: u32 = 61;

/// Largest carrier size |D| for which dioid axiom checks sweep every
/// element. Beyond it all phases fall back to fixed-seed sampling.
pub const DIOID_EXHAUSTIVE_CAP: usize = 1 << 16;

/// Budgets for the pair and triple phases of the dioid axiom check.
/// Within budget the phase is exhaustive, otherwise sampled.
pub const DIOID_PAIR_BUDGET: u64 = 1 << 22;
pub const DIOID_TRIPLE_BUDGET: u64 = 1 << 22;

/// Sample count and seed used whenever a dioid check phase is sampled.
/// The seed is fixed so reruns are byte-identical.
pub const DIOID_SAMPLES: u32 = 20_000;
pub const DIOID_SEED: u64 = 0xD101D;

/// d-field search is a table enumeration; it is only run at toy orders.
pub const DFIELD_ORDER_CAP: usize = 3;

/// Largest group order for the subset-algebra coincidence sweep (walks
/// every set partition of the group).
pub const COINCIDENCE_ORDER_CAP: usize = 8;

/// Largest group order for the exhaustive subset-pair convolution sweep
/// (4^n pairs, each convolved in n^2 steps).
pub const CONVOLUTION_ORDER_CAP: usize = 10;
