// Searches every dioid of a given order for one in which each element
// other than the additive neutral is multiplicatively invertible. Order
// two yields exactly the Boolean dioid; order three yields nothing even
// before restricting to idempotent addition.

use dioid_partitions::{boolean_dioid, dfield_search};

fn main() {
    let order2 = dfield_search(2, false).unwrap();
    assert_eq!(order2, vec![boolean_dioid()]);
    let b = &order2[0];
    println!("order 2: found the Boolean dioid");
    println!("  add: {:?}", b.add);
    println!("  mul: {:?}", b.mul);

    for idempotent_only in [true, false] {
        let order3 = dfield_search(3, idempotent_only).unwrap();
        println!(
            "order 3 (idempotent addition only: {idempotent_only}): {} dioids",
            order3.len()
        );
        assert!(order3.is_empty());
    }
}
