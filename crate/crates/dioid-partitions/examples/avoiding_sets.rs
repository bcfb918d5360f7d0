// A symmetric set of nonzero residues is avoiding when its positive
// representatives leave gaps of at least two, including around the
// wrap. Some multiple uS is avoiding exactly when S + S misses part of
// Z_p, and the number of avoiding sets of size s has a closed form.

use dioid_partitions::{
    avoiding_characterization_check, count_avoiding, extremal_symmetric_complete_sumfree,
    is_avoiding, solve_eq1, AdditiveSet,
};

fn main() {
    let p = 11;
    for s in [2u32, 4] {
        println!("p = {p}, size {s}: {} avoiding sets", count_avoiding(p, s).unwrap());
    }

    // Representatives 2 and 4: gap of two inside and across the wrap.
    let example = AdditiveSet::from_elems(p, &[2, 4, 7, 9]);
    println!("{example:?} avoiding: {}", is_avoiding(&example));
    assert!(is_avoiding(&example));

    // 4, 5, 6, 7 packs the middle of Z_11: no multiple avoids, sums cover
    // everything except itself.
    let extremal = extremal_symmetric_complete_sumfree(p).unwrap();
    println!(
        "extremal symmetric complete sum-free set of Z_{p}: {extremal:?}, sums to {:?}",
        extremal.sumset(&extremal)
    );
    assert_eq!(extremal.sumset(&extremal), extremal.complement());
    assert!(solve_eq1(p).unwrap().contains(&extremal));

    let check = avoiding_characterization_check(p).unwrap();
    println!(
        "multiple-avoids iff sums fall short, over {} symmetric sets: {}",
        check.sets_checked, check.holds
    );
    assert!(check.holds);
}
