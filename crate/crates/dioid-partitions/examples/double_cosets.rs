// Double cosets AxA of a subgroup and conjugacy classes both partition
// a group into parts that satisfy the d-partition axioms. Shown here on
// the dihedral group of the square.

use std::sync::Arc;

use dioid_partitions::{as_d_partition, conjugacy_partition, double_coset_partition, FiniteGroup};

fn main() {
    let d4 = Arc::new(FiniteGroup::dihedral(4).unwrap());

    for a in d4.subgroups() {
        let partition = double_coset_partition(&d4, &a).unwrap();
        let dp = as_d_partition(&partition).expect("double cosets satisfy the axioms");
        println!("A = {a:?}: {} double cosets {:?}", dp.len(), dp.parts());
    }

    let classes = conjugacy_partition(&d4);
    let dp = as_d_partition(&classes).expect("conjugacy classes satisfy the axioms");
    println!("conjugacy classes: {:?}", dp.parts());
    assert_eq!(dp.len(), 5);
}
