// When G = NA for a normal subgroup N and a subgroup A, the sandwiches
// AnA for n in N partition G, the intersections N ∩ AnA partition N,
// and the two d-partitions share their structure constants. Shown on
// the symmetric group of degree 4 with N the alternating subgroup.

use std::sync::Arc;

use dioid_partitions::{structure_constants, supplement_partition, ElementSet, FiniteGroup};

fn main() {
    let s4 = Arc::new(FiniteGroup::symmetric(4).unwrap());
    let n = s4.order();

    // The alternating subgroup is generated by the squares; any
    // involution outside it generates a complementing order-2 subgroup.
    let mut squares = ElementSet::empty(n);
    for g in 0..n {
        squares.insert(s4.mul(g, g));
    }
    let alt = s4.generated_subgroup(&squares);
    assert_eq!(alt.len(), 12);
    let odd = (0..n)
        .find(|&x| x != s4.identity() && s4.mul(x, x) == s4.identity() && !alt.contains(x))
        .unwrap();
    let two = s4.generated_subgroup(&ElementSet::singleton(n, odd));

    let result = supplement_partition(&s4, &alt, &two).unwrap();
    println!("partition of the group:  {:?}", result.of_group.parts());
    println!("partition of the normal: {:?}", result.of_normal.parts());
    println!("part correspondence:     {:?}", result.iso);

    let cg = structure_constants(&result.of_group);
    let cn = structure_constants(&result.of_normal);
    for i in 0..cg.parts() {
        for j in 0..cg.parts() {
            for k in 0..cg.parts() {
                assert_eq!(
                    cg.get(i, j, k),
                    cn.get(result.iso[i], result.iso[j], result.iso[k])
                );
            }
        }
    }
    println!("structure constants agree across all part triples");
}
