// Two ways to coarsen a d-partition at a subgroup A covered by parts:
// sandwich every part into AπA, or keep the parts inside A and merge
// everything outside into a single part.

use std::sync::Arc;

use dioid_partitions::{
    as_d_partition, complement_coarsen, double_coset_coarsen, ElementSet, FiniteGroup, Partition,
};

fn main() {
    let g6 = Arc::new(FiniteGroup::cyclic(6).unwrap());
    let singles = as_d_partition(&Partition::singletons(&g6)).unwrap();
    let a = ElementSet::from_indices(6, &[0, 3]).unwrap();

    let dcc = double_coset_coarsen(&singles, &a).unwrap();
    println!("A = {a:?}");
    println!("sandwiches AxA:     {:?}", dcc.coarsened.parts());
    println!("restriction to A:   {:?}", dcc.restriction.parts());
    assert_eq!(dcc.coarsened.len(), 3);
    assert_eq!(dcc.restriction.group().order(), 2);

    let complement = complement_coarsen(&singles, &a).unwrap();
    println!("complement merged:  {:?}", complement.parts());
    assert_eq!(complement.len(), 3);

    // The merged part squares to the whole group: A has index three.
    let merged = complement.parts().iter().max_by_key(|s| s.len()).unwrap();
    assert_eq!(g6.setwise_product(merged, merged), g6.full_set());
}
