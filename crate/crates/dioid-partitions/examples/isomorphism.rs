// Two d-partitions are isomorphic when some part bijection carries the
// structure constants across; part sizes play no role. The residue
// partitions of Z_7 and Z_11 share one tensor even though their parts
// have different sizes, while Z_13 differs from both.

use dioid_partitions::{are_isomorphic, pi_multiplicative, AdditiveSet};

fn main() {
    let squares7 = pi_multiplicative(7, &AdditiveSet::from_elems(7, &[1, 2, 4])).unwrap();
    let squares11 =
        pi_multiplicative(11, &AdditiveSet::from_elems(11, &[1, 3, 4, 5, 9])).unwrap();
    let squares13 =
        pi_multiplicative(13, &AdditiveSet::from_elems(13, &[1, 3, 4, 9, 10, 12])).unwrap();

    let mapping = are_isomorphic(&squares7, &squares11).expect("same tensor");
    println!(
        "Z_7 {:?} and Z_11 {:?} are isomorphic via {mapping:?}",
        squares7.parts(),
        squares11.parts()
    );

    // -1 is a square mod 13, so each nonzero part is symmetric and
    // part + part reaches zero; mod 7 and mod 11 zero only arises from
    // the product of the two different parts. No bijection bridges that.
    assert!(are_isomorphic(&squares7, &squares13).is_none());
    println!("Z_7 and Z_13 residue partitions are not isomorphic");

    // Sizes 3 and 5 differ, only the constants matter.
    assert_ne!(squares7.parts()[1].len(), squares11.parts()[1].len());
}
