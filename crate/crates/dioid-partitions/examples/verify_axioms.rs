// Checks two partitions of Z_5 against the closure, identity, and
// inverse axioms and prints the full report for each.

use std::sync::Arc;

use dioid_partitions::{FiniteGroup, Partition};

fn main() {
    let g = Arc::new(FiniteGroup::cyclic(5).unwrap());

    let good = Partition::from_index_lists(&g, &[vec![0], vec![1, 4], vec![2, 3]]).unwrap();
    let report = good.axiom_report();
    println!("partition {:?}", good.parts());
    println!("  closure ok: {}", report.closure);
    println!("  identity part: {:?}", report.identity_part);
    println!("  inverse pairing: {:?}", report.inverse_pairing);
    println!("  d-partition: {}", report.is_d_partition);
    assert!(report.is_d_partition);

    // {1} alone breaks closure: {1} + {1} = {2} splits part {2, 3}.
    let bad = Partition::from_index_lists(&g, &[vec![0], vec![1], vec![2, 3], vec![4]]).unwrap();
    let report = bad.axiom_report();
    println!("partition {:?}", bad.parts());
    println!("  closure ok: {}", report.closure);
    if let Some(w) = &report.closure_witness {
        println!(
            "  witness: parts {} * {} cover element {} of part {} but miss {}",
            w.left, w.right, w.hit, w.part, w.miss
        );
    }
    assert!(!report.is_d_partition);
}
