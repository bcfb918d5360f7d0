// A partition with a singleton identity, closed under inversion, whose
// pair counts s^k_{i,j} = #{(x,y) : x in part i, y in part j, xy = z}
// are constant over z in part k induces integer structure constants.
// Their support recovers the 0/1 constants: d^k_{i,j} = [s^k_{i,j} > 0].

use std::sync::Arc;

use dioid_partitions::{
    is_s_partition, pi_multiplicative, sd_correspondence, solve_eq1, AdditiveSet, ElementSet,
    FiniteGroup, Partition,
};

fn main() {
    // Cosets of a unit subgroup always have constant pair counts.
    let a = AdditiveSet::from_elems(13, &[1, 3, 9]);
    let dp = pi_multiplicative(13, &a).unwrap();
    assert!(is_s_partition(dp.partition()).unwrap().is_yes());

    let corr = sd_correspondence(&dp).unwrap();
    println!("parts: {:?}", dp.parts());
    let h = corr.constants.parts();
    for i in 0..h {
        for j in 0..h {
            let counts: Vec<u32> = (0..h).map(|k| corr.schur.get(i, j, k)).collect();
            println!("s^._{{{i},{j}}} = {counts:?}");
        }
    }
    println!("supports match the 0/1 constants: {}", corr.agrees);
    assert!(corr.agrees);

    // Pair counts are strictly stronger than the d-partition axioms: a
    // symmetric complete sum-free part gives a d-partition that is not
    // an S-partition.
    let s = solve_eq1(11).unwrap()[0];
    let g = Arc::new(FiniteGroup::cyclic(11).unwrap());
    let parts = vec![
        ElementSet::singleton(11, 0),
        s.to_element_set(),
        s.nonzero_complement().to_element_set(),
    ];
    let partition = Partition::new(Arc::clone(&g), parts).unwrap();
    let outcome = is_s_partition(&partition).unwrap();
    println!("sum-free member {s:?} constant pair counts: {}", outcome.is_yes());
    assert!(!outcome.is_yes());
}
