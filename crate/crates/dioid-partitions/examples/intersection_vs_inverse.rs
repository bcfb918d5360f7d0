// Closure and an identity part do not force the inverse axiom. This
// builds the smallest witness, a partition of the symmetric group on
// three letters, and shows that the intersection property fails with it:
// given closure and identity, the two properties stand or fall together.

use std::sync::Arc;

use dioid_partitions::{check_intersection_property, ElementSet, FiniteGroup, Partition};

fn main() {
    let s3 = Arc::new(FiniteGroup::symmetric(3).unwrap());
    let id = s3.identity();
    let rotation = (0..6)
        .find(|&x| x != id && s3.mul(x, x) != id)
        .expect("an element of order 3 exists");
    let flip = (0..6)
        .find(|&x| x != id && s3.mul(x, x) == id)
        .expect("an involution exists");
    let mut rest = ElementSet::full(6);
    for x in [id, rotation, flip] {
        rest.remove(x);
    }
    let partition = Partition::new(
        Arc::clone(&s3),
        vec![
            ElementSet::singleton(6, id),
            ElementSet::from_indices(6, &[rotation, flip]).unwrap(),
            rest,
        ],
    )
    .unwrap();
    println!("partition {:?}", partition.parts());

    assert!(partition.check_closure().is_none());
    assert_eq!(partition.find_identity_part(), Some(0));
    println!("closure and identity hold");

    let unpaired = partition
        .check_inverse_property()
        .expect_err("mixing an order-3 element with an involution breaks inversion");
    println!("inverse axiom fails: part {unpaired} has no partner under g -> g^-1");

    let witness = check_intersection_property(&partition)
        .unwrap()
        .expect("the intersection property must fail in step");
    println!(
        "intersection fails too: in the product of parts {} and {}, element {} ({:?} factor) never reaches part {}",
        witness.left, witness.right, witness.fixed, witness.side, witness.part
    );
}
