// Exhaustively lists the partitions of Z_p with a singleton zero part,
// closed under negation, whose pair counts are constant on every part.
// They are exactly the coset partitions of unit subgroups, so their
// number is the number of divisors of p - 1.

use dioid_partitions::gordon_census;

fn main() {
    for p in [3, 5, 7, 11] {
        let census = gordon_census(p).unwrap();
        println!(
            "p = {p}: {} partitions, unit subgroup orders {:?}",
            census.count, census.subgroup_orders
        );
        for dp in &census.partitions {
            println!("  {:?}", dp.parts());
        }
        assert!(census.matches_subgroup_construction);
    }
}
