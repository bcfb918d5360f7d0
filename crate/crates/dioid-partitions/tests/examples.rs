//! Runs every example as a test; the examples carry their own asserts.

macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!("../examples/", stringify!($name), ".rs"));

            #[test]
            fn runs() {
                main();
            }
        }
    };
}

example!(verify_axioms);
example!(intersection_vs_inverse);
example!(double_cosets);
example!(dioid_check);
example!(s_partitions);
example!(constructions);
example!(subgroup_coarsenings);
example!(orbit_coarsen);
example!(supplement);
example!(enumerate_small);
example!(gordon_census);
example!(three_part_census);
example!(avoiding_sets);
example!(dfield_search);
example!(isomorphism);
