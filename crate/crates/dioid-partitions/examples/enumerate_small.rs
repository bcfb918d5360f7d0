// Counts every d-partition of each group of order up to eight from one
// family per order. The sweep factors through the possible identity
// subgroups, so it stays fast despite the Bell-number search space.

use std::sync::Arc;

use dioid_partitions::{enumerate_d_partitions, FiniteGroup};

fn main() {
    let groups: Vec<(String, Arc<FiniteGroup>)> = vec![
        ("Z_4".into(), Arc::new(FiniteGroup::cyclic(4).unwrap())),
        ("Z_6".into(), Arc::new(FiniteGroup::cyclic(6).unwrap())),
        ("Z_8".into(), Arc::new(FiniteGroup::cyclic(8).unwrap())),
        ("S_3".into(), Arc::new(FiniteGroup::symmetric(3).unwrap())),
        ("D_4".into(), Arc::new(FiniteGroup::dihedral(4).unwrap())),
    ];
    for (name, group) in &groups {
        let all = enumerate_d_partitions(group, 12).unwrap();
        println!("{name}: {} d-partitions", all.len());
        for dp in all.iter().take(4) {
            println!("  {:?}", dp.parts());
        }
        if all.len() > 4 {
            println!("  ...");
        }
        assert!(all
            .iter()
            .all(|dp| dp.partition().axiom_report().is_d_partition));
    }
}
