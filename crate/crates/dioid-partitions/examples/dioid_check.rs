// Extracts the 0/1 structure constants d^k_{i,j} (is part k inside the
// product of parts i and j?) of a d-partition and verifies the dioid
// laws of the algebra they span: unions of parts under set union and
// setwise product.

use std::sync::Arc;

use dioid_partitions::{
    as_d_partition, structure_constants, verify_dioid_axioms, DioidCheckOptions, FiniteGroup,
    Partition,
};

fn main() {
    let g = Arc::new(FiniteGroup::cyclic(7).unwrap());
    let partition = Partition::from_index_lists(&g, &[vec![0], vec![1, 2, 4], vec![3, 5, 6]]).unwrap();
    let dp = as_d_partition(&partition).unwrap();

    let sc = structure_constants(&dp);
    println!("parts: {:?}", dp.parts());
    for i in 0..sc.parts() {
        for j in 0..sc.parts() {
            let row: Vec<u8> = (0..sc.parts()).map(|k| sc.get(i, j, k) as u8).collect();
            println!("d^._{{{i},{j}}} = {row:?}");
        }
    }

    let report = verify_dioid_axioms(&sc, &DioidCheckOptions::default()).unwrap();
    println!(
        "laws verified on {} part triples, ok: {}",
        report.part_triples_checked, report.ok
    );
    assert!(report.ok);
    assert!(report.epsilon_distinct_from_identity);
}
