//! Constructions that derive new d-partitions from given ones: coarsening
//! and refining at the identity part, double coset and complement
//! coarsenings at a subgroup, orbit coarsening under automorphisms, lifts
//! along quotient maps, and transfer to a normal subgroup along a
//! supplement.
//!
//! Every constructor re-verifies its output against the axioms instead of
//! trusting the argument that justifies it, so a result is a [`DPartition`]
//! or an error, never an unchecked family of parts.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::dioid::structure_constants;
use crate::group::{
    double_coset_partition, embed_subgroup, same_group, Automorphism, EmbeddedSubgroup,
    FiniteGroup, GroupError, QuotientMap,
};
use crate::partition::{as_d_partition, AxiomReport, DPartition, Partition, PartitionError};
use crate::set::ElementSet;

#[derive(Debug, Error)]
pub enum ConstructError {
    /// Coarsening at A needs every part either inside A or invariant
    /// under A on both sides; these parts are neither.
    #[error("parts {indices:?} lie neither below nor above the subgroup")]
    ResidualNonEmpty { indices: Vec<usize> },
    #[error("parts below the subgroup do not cover it; missing {uncovered:?}")]
    BelowDoesNotPartition { uncovered: Vec<usize> },
    #[error("construction requires a proper subgroup")]
    ProperSubgroupRequired,
    #[error("operands are defined over different groups")]
    MismatchedGroup,
    #[error("automorphism set lacks the identity map")]
    ActionMissingIdentity,
    #[error("automorphism set is not closed: map {left} after map {right} is missing")]
    ActionNotClosed { left: usize, right: usize },
    #[error("map {map} does not send part {part} to a part")]
    ActionDoesNotStabilize { map: usize, part: usize },
    #[error("the subgroups do not multiply out to the whole group")]
    NotASupplement,
    #[error("derived parts fail the d-partition axioms")]
    Verification(Box<AxiomReport>),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// Runs the full axiom check on a derived family of parts.
fn verified(
    group: &Arc<FiniteGroup>,
    parts: Vec<ElementSet>,
) -> Result<DPartition, ConstructError> {
    let partition = Partition::new(Arc::clone(group), parts)?;
    as_d_partition(&partition).map_err(ConstructError::Verification)
}

/// Placement of each part of a d-partition relative to a subgroup A.
/// A part π is below when πA = Aπ = A (equivalently π ⊆ A), above when
/// πA = Aπ = π and π ≠ A, and residual otherwise. A itself, when it is
/// a part, lands below.
#[derive(Debug, Clone, Serialize)]
pub struct SubgroupSplit {
    pub below: Vec<usize>,
    pub above: Vec<usize>,
    pub residual: Vec<usize>,
}

pub fn split_at_subgroup(
    dp: &DPartition,
    a: &ElementSet,
) -> Result<SubgroupSplit, ConstructError> {
    let group = dp.group();
    if a.universe() != group.order() {
        return Err(ConstructError::MismatchedGroup);
    }
    group.verify_subgroup(a)?;
    let mut split = SubgroupSplit {
        below: Vec::new(),
        above: Vec::new(),
        residual: Vec::new(),
    };
    for (i, part) in dp.parts().iter().enumerate() {
        let right = group.setwise_product(part, a);
        let left = group.setwise_product(a, part);
        if right == *a && left == *a {
            split.below.push(i);
        } else if right == *part && left == *part {
            split.above.push(i);
        } else {
            split.residual.push(i);
        }
    }
    Ok(split)
}

/// Union of the below parts must be exactly A.
fn check_below_covers(
    dp: &DPartition,
    split: &SubgroupSplit,
    a: &ElementSet,
) -> Result<(), ConstructError> {
    let mut union = ElementSet::empty(a.universe());
    for &i in &split.below {
        union.union_with(&dp.parts()[i]);
    }
    if union != *a {
        return Err(ConstructError::BelowDoesNotPartition {
            uncovered: a.difference(&union).to_vec(),
        });
    }
    Ok(())
}

/// Merges everything inside the subgroup A into a single identity part
/// and keeps the parts above it. This succeeds exactly when no part
/// straddles A; the offending indices are reported otherwise.
pub fn coarsen_identity(dp: &DPartition, a: &ElementSet) -> Result<DPartition, ConstructError> {
    let split = split_at_subgroup(dp, a)?;
    if !split.residual.is_empty() {
        return Err(ConstructError::ResidualNonEmpty {
            indices: split.residual,
        });
    }
    let mut parts = vec![a.clone()];
    parts.extend(split.above.iter().map(|&i| dp.parts()[i].clone()));
    verified(dp.group(), parts)
}

/// Replaces the identity part A of `coarse` with the parts of `fine`, a
/// d-partition given over the standalone copy of A produced by
/// [`embed_subgroup`]. Any d-partition of A works here.
pub fn refine_identity(
    coarse: &DPartition,
    fine: &DPartition,
) -> Result<DPartition, ConstructError> {
    let embedding = embed_subgroup(coarse.group(), coarse.identity_set())?;
    if !same_group(fine.group(), embedding.group()) {
        return Err(ConstructError::MismatchedGroup);
    }
    let mut parts: Vec<ElementSet> = fine
        .parts()
        .iter()
        .map(|p| embedding.to_parent_set(p))
        .collect();
    for (i, part) in coarse.parts().iter().enumerate() {
        if i != coarse.identity_part() {
            parts.push(part.clone());
        }
    }
    verified(coarse.group(), parts)
}

/// The two partitions obtained from a subgroup A covered by parts: the
/// covering parts re-read over the standalone copy of A, and the
/// coarsening of the whole partition into sandwiches AπA.
#[derive(Debug, Clone)]
pub struct DoubleCosetCoarsening {
    pub embedding: EmbeddedSubgroup,
    pub restriction: DPartition,
    pub coarsened: DPartition,
}

pub fn double_coset_coarsen(
    dp: &DPartition,
    a: &ElementSet,
) -> Result<DoubleCosetCoarsening, ConstructError> {
    let split = split_at_subgroup(dp, a)?;
    check_below_covers(dp, &split, a)?;
    let group = dp.group();
    let embedding = embed_subgroup(group, a)?;
    let mut local = Vec::with_capacity(split.below.len());
    for &i in &split.below {
        local.push(embedding.to_local_set(&dp.parts()[i])?);
    }
    let restriction = verified(embedding.group(), local)?;
    // AπA = A for parts below, so the identity part of the coarsening
    // shows up on its own.
    let mut sandwiches: Vec<ElementSet> = dp
        .parts()
        .iter()
        .map(|part| group.setwise_product(&group.setwise_product(a, part), a))
        .collect();
    sandwiches.sort();
    sandwiches.dedup();
    let coarsened = verified(group, sandwiches)?;
    Ok(DoubleCosetCoarsening {
        embedding,
        restriction,
        coarsened,
    })
}

/// Keeps the parts inside the proper subgroup A and merges everything
/// outside it into one part. The complement part squares to A when A has
/// index two and to the whole group otherwise.
pub fn complement_coarsen(dp: &DPartition, a: &ElementSet) -> Result<DPartition, ConstructError> {
    let group = dp.group();
    if *a == group.full_set() {
        return Err(ConstructError::ProperSubgroupRequired);
    }
    let split = split_at_subgroup(dp, a)?;
    check_below_covers(dp, &split, a)?;
    let mut parts: Vec<ElementSet> = split
        .below
        .iter()
        .map(|&i| dp.parts()[i].clone())
        .collect();
    parts.push(a.complement());
    verified(group, parts)
}

/// A set of automorphisms of one group, closed under composition and
/// containing the identity map. Each map is re-checked against the
/// product table on construction.
#[derive(Debug, Clone)]
pub struct GroupAction {
    maps: Vec<Automorphism>,
}

impl GroupAction {
    pub fn new(group: &FiniteGroup, maps: Vec<Automorphism>) -> Result<Self, ConstructError> {
        let n = group.order();
        for m in &maps {
            if m.degree() != n {
                return Err(ConstructError::MismatchedGroup);
            }
            Automorphism::verify(group, (0..n).map(|x| m.apply(x)).collect())?;
        }
        if !maps.contains(&Automorphism::identity(n)) {
            return Err(ConstructError::ActionMissingIdentity);
        }
        for (i, m) in maps.iter().enumerate() {
            for (j, k) in maps.iter().enumerate() {
                if !maps.contains(&m.compose(k)) {
                    return Err(ConstructError::ActionNotClosed { left: i, right: j });
                }
            }
        }
        Ok(GroupAction { maps })
    }

    pub fn maps(&self) -> &[Automorphism] {
        &self.maps
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }
}

/// Merges the parts along orbits of an action whose every map sends
/// parts to parts. Automorphisms fix the group identity, hence the
/// identity part, so the result keeps the same identity part.
pub fn orbit_coarsen(dp: &DPartition, action: &GroupAction) -> Result<DPartition, ConstructError> {
    let group = dp.group();
    if action.maps().iter().any(|m| m.degree() != group.order()) {
        return Err(ConstructError::MismatchedGroup);
    }
    let h = dp.len();
    let mut class: Vec<usize> = (0..h).collect();
    fn find(class: &mut [usize], mut x: usize) -> usize {
        while class[x] != x {
            class[x] = class[class[x]];
            x = class[x];
        }
        x
    }
    for (mi, m) in action.maps().iter().enumerate() {
        for (i, part) in dp.parts().iter().enumerate() {
            let image = m.apply_set(part);
            let Some(j) = dp.partition().position_of(&image) else {
                return Err(ConstructError::ActionDoesNotStabilize { map: mi, part: i });
            };
            let (ri, rj) = (find(&mut class, i), find(&mut class, j));
            class[ri] = rj;
        }
    }
    let mut merged: BTreeMap<usize, ElementSet> = BTreeMap::new();
    for (i, part) in dp.parts().iter().enumerate() {
        merged
            .entry(find(&mut class, i))
            .or_insert_with(|| ElementSet::empty(group.order()))
            .union_with(part);
    }
    verified(group, merged.into_values().collect())
}

/// Pulls a d-partition of the quotient group back through the projection.
pub fn lift_from_quotient(
    qm: &QuotientMap,
    dbar: &DPartition,
) -> Result<DPartition, ConstructError> {
    if !same_group(dbar.group(), qm.target()) {
        return Err(ConstructError::MismatchedGroup);
    }
    let parts = dbar.parts().iter().map(|p| qm.preimage(p)).collect();
    verified(qm.source(), parts)
}

/// Transfer of the double coset partition of A to a normal subgroup N
/// with AN = G. Part i of `of_group` (the double coset AyA) corresponds
/// to part `iso[i]` of `of_normal`, which reads (A∩N)·O(n) in parent
/// coordinates for any n ∈ Ay ∩ N, with O(n) the orbit of n under
/// conjugation by A. The correspondence preserves every structure
/// constant even though part sizes differ in general.
#[derive(Debug, Clone)]
pub struct SupplementResult {
    pub embedding: EmbeddedSubgroup,
    pub of_group: DPartition,
    pub of_normal: DPartition,
    pub iso: Vec<usize>,
}

pub fn supplement_partition(
    group: &Arc<FiniteGroup>,
    n: &ElementSet,
    a: &ElementSet,
) -> Result<SupplementResult, ConstructError> {
    if n.universe() != group.order() || a.universe() != group.order() {
        return Err(ConstructError::MismatchedGroup);
    }
    group.verify_subgroup(n)?;
    group.verify_subgroup(a)?;
    for g in 0..group.order() {
        for x in n.iter() {
            if !n.contains(group.conjugate(g, x)) {
                return Err(ConstructError::Group(GroupError::NotNormal { g, n: x }));
            }
        }
    }
    if group.setwise_product(a, n) != group.full_set() {
        return Err(ConstructError::NotASupplement);
    }

    let of_group = {
        let partition = double_coset_partition(group, a)?;
        as_d_partition(&partition).map_err(ConstructError::Verification)?
    };

    let embedding = embed_subgroup(group, n)?;
    let a_cap_n = a.intersection(n);
    let mut local_parts = Vec::with_capacity(of_group.len());
    for part in of_group.parts() {
        let y = part.min_element().expect("parts are nonempty");
        let rep = a
            .iter()
            .map(|x| group.mul(x, y))
            .find(|&c| n.contains(c))
            .expect("AN = G meets every double coset in N");
        let mut orbit = ElementSet::empty(group.order());
        for x in a.iter() {
            orbit.insert(group.conjugate(x, rep));
        }
        let parent_part = group.setwise_product(&a_cap_n, &orbit);
        // The same set three ways: (AyA)∩N, (A∩N)·O(n), O(n)·(A∩N).
        debug_assert_eq!(parent_part, part.intersection(n));
        debug_assert_eq!(parent_part, group.setwise_product(&orbit, &a_cap_n));
        local_parts.push(embedding.to_local_set(&parent_part)?);
    }
    let of_normal = verified(embedding.group(), local_parts.clone())?;

    let iso: Vec<usize> = local_parts
        .iter()
        .map(|p| {
            of_normal
                .partition()
                .position_of(p)
                .expect("derived parts survive sorting")
        })
        .collect();
    let mut seen = vec![false; iso.len()];
    for &j in &iso {
        assert!(!seen[j], "supplement transfer must be one-to-one on parts");
        seen[j] = true;
    }
    let cg = structure_constants(&of_group);
    let cn = structure_constants(&of_normal);
    let h = of_group.len();
    for i in 0..h {
        for j in 0..h {
            for k in 0..h {
                assert_eq!(
                    cg.get(i, j, k),
                    cn.get(iso[i], iso[j], iso[k]),
                    "supplement transfer must preserve structure constants"
                );
            }
        }
    }

    Ok(SupplementResult {
        embedding,
        of_group,
        of_normal,
        iso,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::units_automorphisms;
    use crate::partition::enumerate_d_partitions;

    fn cyclic(n: usize) -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::cyclic(n).unwrap())
    }

    fn d_partition(group: &Arc<FiniteGroup>, lists: &[&[usize]]) -> DPartition {
        let lists: Vec<Vec<usize>> = lists.iter().map(|l| l.to_vec()).collect();
        as_d_partition(&Partition::from_index_lists(group, &lists).unwrap()).unwrap()
    }

    fn set(universe: usize, elems: &[usize]) -> ElementSet {
        ElementSet::from_indices(universe, elems).unwrap()
    }

    #[test]
    fn split_classifies_parts() {
        let g6 = cyclic(6);
        let dp = d_partition(&g6, &[&[0], &[3], &[1, 4], &[2, 5]]);
        let a = set(6, &[0, 3]);
        // Parts are sorted by least element: [{0}, {1,4}, {2,5}, {3}].
        let split = split_at_subgroup(&dp, &a).unwrap();
        assert_eq!(split.below, [0, 3]);
        assert_eq!(split.above, [1, 2]);
        assert!(split.residual.is_empty());

        // Singleton parts of Z6 straddle {0,3}: {1}+A = {1,4} is neither
        // A nor {1}.
        let singles = as_d_partition(&Partition::singletons(&g6)).unwrap();
        let split = split_at_subgroup(&singles, &a).unwrap();
        assert_eq!(split.below, [0, 3]);
        assert!(split.above.is_empty());
        assert_eq!(split.residual, [1, 2, 4, 5]);

        assert!(matches!(
            split_at_subgroup(&dp, &set(6, &[0, 2])).unwrap_err(),
            ConstructError::Group(GroupError::NotASubgroup { .. })
        ));
    }

    #[test]
    fn coarsening_the_identity() {
        let g6 = cyclic(6);
        let dp = d_partition(&g6, &[&[0], &[3], &[1, 4], &[2, 5]]);
        let a = set(6, &[0, 3]);
        let coarse = coarsen_identity(&dp, &a).unwrap();
        assert_eq!(coarse, d_partition(&g6, &[&[0, 3], &[1, 4], &[2, 5]]));
        assert_eq!(coarse.identity_set(), &a);

        let singles = as_d_partition(&Partition::singletons(&g6)).unwrap();
        assert!(matches!(
            coarsen_identity(&singles, &a).unwrap_err(),
            ConstructError::ResidualNonEmpty { indices } if indices == [1, 2, 4, 5]
        ));

        // Boundary subgroups: the whole group collapses everything, the
        // trivial subgroup changes nothing on a partition with trivial
        // identity part.
        let full = coarsen_identity(&dp, &g6.full_set()).unwrap();
        assert_eq!(full.len(), 1);
        let trivial = coarsen_identity(&dp, &set(6, &[0])).unwrap();
        assert_eq!(&trivial, &dp);
    }

    #[test]
    fn coarsening_rejects_overlap_above() {
        // The improper partition sits above any proper subgroup: G+A = G,
        // so the split is clean but {A, G} overlaps and verification
        // rejects it.
        let g4 = cyclic(4);
        let improper = as_d_partition(&Partition::one_part(&g4)).unwrap();
        let err = coarsen_identity(&improper, &set(4, &[0, 2])).unwrap_err();
        assert!(matches!(err, ConstructError::Partition(_)), "{err}");
        // With A = G the same call degenerates to the improper partition.
        let same = coarsen_identity(&improper, &g4.full_set()).unwrap();
        assert_eq!(same, improper);
    }

    #[test]
    fn refining_the_identity() {
        let g6 = cyclic(6);
        let coarse = d_partition(&g6, &[&[0, 3], &[1, 4], &[2, 5]]);
        let embedding = embed_subgroup(&g6, coarse.identity_set()).unwrap();
        let fine = as_d_partition(&Partition::singletons(embedding.group())).unwrap();
        let refined = refine_identity(&coarse, &fine).unwrap();
        assert_eq!(refined, d_partition(&g6, &[&[0], &[3], &[1, 4], &[2, 5]]));

        // The fine partition must live on the embedded copy of the
        // identity part, not on some other group.
        let wrong = as_d_partition(&Partition::singletons(&cyclic(3))).unwrap();
        assert!(matches!(
            refine_identity(&coarse, &wrong).unwrap_err(),
            ConstructError::MismatchedGroup
        ));
    }

    #[test]
    fn refinement_inverts_coarsening() {
        // Every d-partition of Z4 with identity part {0,2} arises by
        // refining; round-trip through the embedded copy.
        let g4 = cyclic(4);
        let coarse = d_partition(&g4, &[&[0, 2], &[1, 3]]);
        let embedding = embed_subgroup(&g4, coarse.identity_set()).unwrap();
        for fine in enumerate_d_partitions(embedding.group(), 4).unwrap() {
            let refined = refine_identity(&coarse, &fine).unwrap();
            let back = coarsen_identity(&refined, coarse.identity_set()).unwrap();
            assert_eq!(back, coarse);
        }
    }

    #[test]
    fn double_coset_coarsening_of_symmetric_group() {
        let s3 = Arc::new(FiniteGroup::symmetric(3).unwrap());
        let singles = as_d_partition(&Partition::singletons(&s3)).unwrap();
        let a = set(6, &[0, 1]);
        let out = double_coset_coarsen(&singles, &a).unwrap();
        // Restriction: singletons of the standalone copy of A.
        assert_eq!(out.restriction.len(), 2);
        assert_eq!(out.restriction.group().order(), 2);
        // Coarsening: the A-double-cosets, sizes 2 and 4.
        let direct = as_d_partition(&double_coset_partition(&s3, &a).unwrap()).unwrap();
        assert_eq!(out.coarsened, direct);

        // Here only {0} lies below {0,3}, so 3 goes uncovered.
        let g6 = cyclic(6);
        let dp = d_partition(&g6, &[&[0], &[1, 2, 3, 4, 5]]);
        let err = double_coset_coarsen(&dp, &set(6, &[0, 3])).unwrap_err();
        assert!(matches!(
            err,
            ConstructError::BelowDoesNotPartition { uncovered } if uncovered == [3]
        ));
    }

    #[test]
    fn complement_coarsening() {
        let g4 = cyclic(4);
        let singles = as_d_partition(&Partition::singletons(&g4)).unwrap();
        let a = set(4, &[0, 2]);
        let out = complement_coarsen(&singles, &a).unwrap();
        assert_eq!(out, d_partition(&g4, &[&[0], &[2], &[1, 3]]));

        // Index two: the complement part squares back into A.
        let c = set(4, &[1, 3]);
        let sq = g4.setwise_product(&c, &c);
        assert_eq!(sq, a);

        // Larger index: the complement part squares to the whole group.
        let g9 = cyclic(9);
        let singles9 = as_d_partition(&Partition::singletons(&g9)).unwrap();
        let a9 = set(9, &[0, 3, 6]);
        let out9 = complement_coarsen(&singles9, &a9).unwrap();
        assert_eq!(out9.len(), 4);
        let c9 = a9.complement();
        assert_eq!(g9.setwise_product(&c9, &c9), g9.full_set());

        assert!(matches!(
            complement_coarsen(&singles, &g4.full_set()).unwrap_err(),
            ConstructError::ProperSubgroupRequired
        ));
    }

    #[test]
    fn actions_are_checked() {
        let g5 = cyclic(5);
        let all_units = units_automorphisms(5);
        assert_eq!(all_units.len(), 4);
        assert!(GroupAction::new(&g5, all_units.clone()).is_ok());

        // {1, 4} is the subgroup of order two inside the units.
        let sub = vec![all_units[0].clone(), all_units[3].clone()];
        assert!(GroupAction::new(&g5, sub).is_ok());

        let no_identity = vec![all_units[3].clone()];
        assert!(matches!(
            GroupAction::new(&g5, no_identity).unwrap_err(),
            ConstructError::ActionMissingIdentity
        ));

        // {1, 2} is not closed: 2 after 2 is 4.
        let not_closed = vec![all_units[0].clone(), all_units[1].clone()];
        assert!(matches!(
            GroupAction::new(&g5, not_closed).unwrap_err(),
            ConstructError::ActionNotClosed { left: 1, right: 1 }
        ));
    }

    #[test]
    fn orbit_coarsening_collects_unit_orbits() {
        let g5 = cyclic(5);
        let singles = as_d_partition(&Partition::singletons(&g5)).unwrap();
        let units = units_automorphisms(5);
        let pair = GroupAction::new(&g5, vec![units[0].clone(), units[3].clone()]).unwrap();
        let out = orbit_coarsen(&singles, &pair).unwrap();
        assert_eq!(out, d_partition(&g5, &[&[0], &[1, 4], &[2, 3]]));

        let full = GroupAction::new(&g5, units).unwrap();
        let out = orbit_coarsen(&singles, &full).unwrap();
        assert_eq!(out, d_partition(&g5, &[&[0], &[1, 2, 3, 4]]));
    }

    #[test]
    fn orbit_coarsening_requires_stable_parts() {
        // Conjugation by the rotation subgroup of S3 permutes singletons
        // but moves the lone transposition part of this partition to a
        // different transposition, which is not a part.
        let s3 = Arc::new(FiniteGroup::symmetric(3).unwrap());
        let order = s3.order();
        let conj = |g: usize| {
            Automorphism::verify(&s3, (0..order).map(|x| s3.conjugate(g, x)).collect()).unwrap()
        };
        let rotations: Vec<Automorphism> = [0, 3, 4].iter().map(|&g| conj(g)).collect();
        let action = GroupAction::new(&s3, rotations).unwrap();

        let singles = as_d_partition(&Partition::singletons(&s3)).unwrap();
        let merged = orbit_coarsen(&singles, &action).unwrap();
        assert_eq!(merged, d_partition(&s3, &[&[0], &[1, 2, 5], &[3], &[4]]));

        let lone = d_partition(&s3, &[&[0], &[1], &[2, 3, 4, 5]]);
        let err = orbit_coarsen(&lone, &action).unwrap_err();
        assert!(matches!(
            err,
            ConstructError::ActionDoesNotStabilize { map: _, part: 1 }
        ));
    }

    #[test]
    fn lifting_from_a_quotient() {
        let g6 = cyclic(6);
        let qm = crate::group::quotient_group(&g6, &set(6, &[0, 3])).unwrap();
        assert_eq!(qm.target().order(), 3);

        let dbar = d_partition(qm.target(), &[&[0], &[1, 2]]);
        let lifted = lift_from_quotient(&qm, &dbar).unwrap();
        assert_eq!(lifted, d_partition(&g6, &[&[0, 3], &[1, 2, 4, 5]]));

        let singles = as_d_partition(&Partition::singletons(qm.target())).unwrap();
        let cosets = lift_from_quotient(&qm, &singles).unwrap();
        assert_eq!(cosets, d_partition(&g6, &[&[0, 3], &[1, 4], &[2, 5]]));

        let wrong = as_d_partition(&Partition::singletons(&cyclic(4))).unwrap();
        assert!(matches!(
            lift_from_quotient(&qm, &wrong).unwrap_err(),
            ConstructError::MismatchedGroup
        ));
    }

    #[test]
    fn supplement_transfer_in_symmetric_group() {
        let s3 = Arc::new(FiniteGroup::symmetric(3).unwrap());
        let rotations = set(6, &[0, 3, 4]);
        let flip = set(6, &[0, 1]);
        let out = supplement_partition(&s3, &rotations, &flip).unwrap();

        // Double cosets of the flip subgroup: sizes 2 and 4.
        let mut sizes = out.of_group.partition().part_sizes();
        sizes.sort();
        assert_eq!(sizes, [2, 4]);
        // Matched parts of the rotation subgroup: sizes 1 and 2, so the
        // correspondence preserves constants across unequal sizes.
        let mut sizes = out.of_normal.partition().part_sizes();
        sizes.sort();
        assert_eq!(sizes, [1, 2]);
        assert_eq!(out.iso.len(), 2);
        assert_eq!(out.of_normal.group().order(), 3);

        // The identity part maps to the identity part.
        assert_eq!(out.iso[out.of_group.identity_part()], out.of_normal.identity_part());
    }

    #[test]
    fn supplement_preconditions() {
        let s3 = Arc::new(FiniteGroup::symmetric(3).unwrap());
        let rotations = set(6, &[0, 3, 4]);
        let flip = set(6, &[0, 1]);
        // A3 supplements itself only multiplicatively: A3 * A3 = A3 != G.
        assert!(matches!(
            supplement_partition(&s3, &rotations, &rotations).unwrap_err(),
            ConstructError::NotASupplement
        ));
        // The flip subgroup is not normal.
        assert!(matches!(
            supplement_partition(&s3, &flip, &rotations).unwrap_err(),
            ConstructError::Group(GroupError::NotNormal { .. })
        ));
    }

    #[test]
    fn chained_constructions_agree() {
        // Lifting singletons along the quotient map gives the coset
        // partition; complement-coarsening that at the kernel merges all
        // nontrivial cosets into one part.
        let g12 = cyclic(12);
        let kernel = set(12, &[0, 4, 8]);
        let qm = crate::group::quotient_group(&g12, &kernel).unwrap();
        let singles_bar = as_d_partition(&Partition::singletons(qm.target())).unwrap();
        let lifted = lift_from_quotient(&qm, &singles_bar).unwrap();
        assert_eq!(
            lifted,
            d_partition(&g12, &[&[0, 4, 8], &[1, 5, 9], &[2, 6, 10], &[3, 7, 11]])
        );

        let merged = complement_coarsen(&lifted, &kernel).unwrap();
        assert_eq!(merged, d_partition(&g12, &[&[0, 4, 8], &[1, 2, 3, 5, 6, 7, 9, 10, 11]]));

        // Lifting the improper partition of the quotient gives the
        // improper partition upstairs.
        let improper_bar = as_d_partition(&Partition::one_part(qm.target())).unwrap();
        assert_eq!(lift_from_quotient(&qm, &improper_bar).unwrap().len(), 1);
    }
}
