// Enumerates every three-part d-partition of Z_p and sorts each member
// into one of five shapes; the zero part is always {0} and the two
// nonzero parts are either both symmetric or negatives of each other.
// The shape tallies are cross-checked against direct equation sweeps.

use dioid_partitions::{classification_census, classify_three_part, enumerate_three_part};

fn main() {
    for p in [7, 11, 13, 17] {
        let report = classification_census(p).unwrap();
        println!(
            "p = {p}: {} members | sum-free {} | full-sumset {} | paired {} | S-partitions {}",
            report.total, report.t3, report.t4, report.t5, report.s_partition_members
        );
        assert!(report.agrees);
    }

    // The members themselves, for the smallest interesting prime.
    for dp in enumerate_three_part(11).unwrap() {
        let class = classify_three_part(&dp).unwrap();
        println!("p = 11 {:?} -> {:?}", dp.parts(), class.tag);
    }
}
