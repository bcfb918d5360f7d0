// Merging the parts of a d-partition along the orbits of a group of
// automorphisms yields another d-partition. Unit multipliers on Z_7
// turn the singletons into the quadratic-residue partition; conjugation
// maps on a nonabelian group recover its conjugacy classes.

use std::sync::Arc;

use dioid_partitions::{
    as_d_partition, conjugacy_partition, orbit_coarsen, Automorphism, FiniteGroup, GroupAction,
    Partition,
};

fn main() {
    let g7 = Arc::new(FiniteGroup::cyclic(7).unwrap());
    let singles = as_d_partition(&Partition::singletons(&g7)).unwrap();
    let maps = [1usize, 2, 4]
        .iter()
        .map(|&u| Automorphism::verify(&g7, (0..7).map(|x| u * x % 7).collect()).unwrap())
        .collect();
    let action = GroupAction::new(&g7, maps).unwrap();
    let squares = orbit_coarsen(&singles, &action).unwrap();
    println!("Z_7 under multipliers {{1,2,4}}: {:?}", squares.parts());
    assert_eq!(format!("{:?}", squares.parts()), "[{0}, {1, 2, 4}, {3, 5, 6}]");

    let s3 = Arc::new(FiniteGroup::symmetric(3).unwrap());
    let inner = (0..6)
        .map(|g| {
            Automorphism::verify(&s3, (0..6).map(|y| s3.conjugate(g, y)).collect()).unwrap()
        })
        .collect();
    let action = GroupAction::new(&s3, inner).unwrap();
    let classes = orbit_coarsen(&as_d_partition(&Partition::singletons(&s3)).unwrap(), &action)
        .unwrap();
    println!("S_3 under conjugation: {:?}", classes.parts());
    assert_eq!(classes.partition().parts(), conjugacy_partition(&s3).parts());
}
