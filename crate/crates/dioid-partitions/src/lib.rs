//! Dioid partitions of finite groups.
//!
//! A partition Π of a finite group G is a d-partition when the setwise
//! product of any two parts is a union of parts, some part e satisfies
//! eπ = πe = π for every part π, and the elementwise inverse of every
//! part is again a part. The unions of parts then form a dioid: an
//! idempotent semiring whose canonical preorder a ≤ b ⟺ ∃c a ⊕ c = b is
//! an order, here plain set inclusion, with ∅ as zero and e as unit.
//!
//! The crate verifies these axioms on explicit partitions, computes the
//! 0/1 structure constants d^k_{i,j} = [π_k ⊆ π_i π_j] and the integer
//! pair counts when they exist, decides structure-constant isomorphism,
//! enumerates all d-partitions of small groups, and carries the
//! constructions that transport d-partitions along subgroups, quotients
//! and group actions. For Z_p it classifies the three-part d-partitions
//! into their five shapes and runs the related censuses exactly.
//!
//! Everything is exact: sweeps are exhaustive within stated budgets and
//! deterministic beyond them, and every derived object is re-verified
//! from its definition rather than trusted.

pub mod comb;
pub mod construct;
pub mod dioid;
pub mod group;
pub mod limits;
pub mod partition;
pub mod set;
pub mod zp;

pub use construct::{
    coarsen_identity, complement_coarsen, double_coset_coarsen, lift_from_quotient,
    orbit_coarsen, refine_identity, split_at_subgroup, supplement_partition, ConstructError,
    DoubleCosetCoarsening, GroupAction, SubgroupSplit, SupplementResult,
};
pub use dioid::{
    are_isomorphic, boolean_dioid, boolean_group_semiring_check, dfield_search,
    schur_ring_constants, sd_correspondence, structure_constants, tensor_isomorphism,
    verify_dioid_axioms, DioidCheckOptions, DioidError, DioidReport, DioidTable,
    SchurRingConstants, StructureConstants,
};
pub use group::{
    conjugacy_partition, double_coset_partition, embed_subgroup, quotient_group, same_group,
    units_automorphisms, Automorphism, EmbeddedSubgroup, Family, FiniteGroup, GroupError,
    GroupSpec, QuotientMap,
};
pub use partition::{
    as_d_partition, check_intersection_property, enumerate_d_partitions, is_s_partition,
    small_part_forcing, AxiomReport, DPartition, ForcedCase, Partition, PartitionError,
    SPartitionOutcome,
};
pub use set::ElementSet;
pub use zp::{
    avoiding_characterization_check, classification_census, classify_three_part, count_avoiding,
    detect_arithmetic_progression, enumerate_three_part, extremal_symmetric_complete_sumfree,
    gordon_census, is_avoiding, multiplicative_subgroups, pi_multiplicative, solve_eq1, solve_eq2,
    solve_eq3, AdditiveSet, ApDescriptor, AvoidingCheck, CensusReport, GordonCensus,
    ThreePartClass, ThreePartTag, ZpError,
};
