// Chains the structure-preserving constructions on Z_12: lift a
// d-partition from a quotient, merge the parts inside a subgroup into a
// new identity part, then split that identity part along a d-partition
// of its own.

use std::sync::Arc;

use dioid_partitions::{
    as_d_partition, coarsen_identity, embed_subgroup, lift_from_quotient, quotient_group,
    refine_identity, ElementSet, FiniteGroup, Partition,
};

fn main() {
    let g12 = Arc::new(FiniteGroup::cyclic(12).unwrap());
    let n = ElementSet::from_indices(12, &[0, 4, 8]).unwrap();

    // Z_12 / {0,4,8} is Z_4; lift its halving back up.
    let qm = quotient_group(&g12, &n).unwrap();
    let quotient_parts =
        Partition::from_index_lists(qm.target(), &[vec![0], vec![2], vec![1, 3]]).unwrap();
    let lifted = lift_from_quotient(&qm, &as_d_partition(&quotient_parts).unwrap()).unwrap();
    println!("lifted:   {:?}", lifted.parts());
    assert_eq!(lifted.len(), 3);

    // Both even parts sit inside the even subgroup; merge them.
    let evens = ElementSet::from_indices(12, &[0, 2, 4, 6, 8, 10]).unwrap();
    let coarse = coarsen_identity(&lifted, &evens).unwrap();
    println!("coarse:   {:?}", coarse.parts());
    assert_eq!(coarse.len(), 2);

    // Refine the identity part along a d-partition of the evens, given
    // over the standalone copy of that subgroup.
    let emb = embed_subgroup(&g12, coarse.identity_set()).unwrap();
    let local = Partition::from_index_lists(
        emb.group(),
        &[vec![0], vec![3], vec![1, 5], vec![2, 4]],
    )
    .unwrap();
    let refined = refine_identity(&coarse, &as_d_partition(&local).unwrap()).unwrap();
    println!("refined:  {:?}", refined.parts());
    assert_eq!(refined.len(), 5);
    assert!(refined.partition().axiom_report().is_d_partition);
}
