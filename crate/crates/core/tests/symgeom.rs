mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::*;
use proptest::prelude::*;
use ratgeom::geometry::{flags_of_type, validate_geometry, Validation};
use ratgeom::group::named_group;
use ratgeom::symgeom::{
    brute_force_fix_vector, cycle_type_check, fix_vector, fixed_k_subsets_count, partitions, standard_representative,
    subset_geometry, symmetric_rationality_demo,
};
use ratgeom::{parse_cycles, Error, Limits, Permutation};

fn p(s: &str, n: usize) -> Permutation {
    parse_cycles(s, n).unwrap()
}

#[test]
fn quoted_fix_vectors_in_degree_four() {
    let quoted = [
        ("(1 2)(3 4)", vec![1, 0, 2, 0, 1]),
        ("(1 3)(2 4)", vec![1, 0, 2, 0, 1]),
        ("(1 2 3)", vec![1, 1, 0, 1, 1]),
    ];
    for (s, want) in quoted {
        let g = p(s, 4);
        assert_eq!(fix_vector(&g).unwrap(), want, "{s}");
        let brute: Vec<u64> = (0..=4).map(|k| brute_fixed_subsets(&g.images(), k)).collect();
        assert_eq!(brute, want, "{s}");
    }
    let four = fix_vector(&p("(1 2 3 4)", 4)).unwrap();
    assert_eq!(four[2], 0);
    assert_eq!(fixed_k_subsets_count(&p("(1 2)(3 4)", 4), 2).unwrap(), 2);
    assert!(fixed_k_subsets_count(&p("(1 2)", 2), 3).is_err());
}

#[test]
fn degree_is_part_of_the_permutation() {
    assert_eq!(fix_vector(&p("(1 2 3)", 3)).unwrap(), vec![1, 0, 0, 1]);
    assert_eq!(fix_vector(&p("(1 2 3)", 4)).unwrap(), vec![1, 1, 0, 1, 1]);
}

#[test]
fn generating_function_matches_enumeration_for_all_of_sym7() {
    for n in 1..=7 {
        let g = named_group(&format!("sym:{n}"), 20_000).unwrap();
        for e in g.elements() {
            let fv = fix_vector(e).unwrap();
            let im = e.images();
            for (k, &count) in fv.iter().enumerate() {
                assert_eq!(count, brute_fixed_subsets(&im, k), "{e} k={k}");
            }
        }
    }
}

#[test]
fn identity_fixes_binomially_many() {
    for n in 1..=12 {
        let fv = fix_vector(&Permutation::identity(n)).unwrap();
        let want: Vec<u64> = (0..=n).map(|k| binomial(n as u64, k as u64)).collect();
        assert_eq!(fv, want);
    }
}

#[test]
fn fix_vector_depends_only_on_cycle_type() {
    for n in 1..=6 {
        let g = named_group(&format!("sym:{n}"), 1000).unwrap();
        let mut seen: BTreeMap<Vec<usize>, Vec<u64>> = BTreeMap::new();
        for e in g.elements() {
            let fv = fix_vector(e).unwrap();
            if let Some(prev) = seen.insert(e.cycle_type(), fv.clone()) {
                assert_eq!(prev, fv);
            }
        }
        assert_eq!(seen.len(), partitions(n).len());
        let distinct: BTreeSet<&Vec<u64>> = seen.values().collect();
        assert_eq!(distinct.len(), seen.len(), "n = {n}");
    }
}

#[test]
fn standard_representatives_are_class_minima() {
    for n in 1..=6 {
        let g = named_group(&format!("sym:{n}"), 1000).unwrap();
        let reps: BTreeSet<Permutation> = g
            .classes()
            .iter()
            .map(|c| g.element(c.representative).clone())
            .collect();
        let standard: BTreeSet<Permutation> = partitions(n).iter().map(|q| standard_representative(q)).collect();
        assert_eq!(reps, standard);
    }
}

#[test]
fn totals_do_not_decide_conjugacy() {
    let (a, b) = (p("(1 2)(3 4)", 4), p("(1 2 3)", 4));
    let total = |g: &Permutation| fix_vector(g).unwrap().iter().sum::<u64>();
    assert_eq!((total(&a), total(&b)), (4, 4));
    let s4 = named_group("sym:4", 100).unwrap();
    assert!(!s4.are_conjugate(s4.index_of(&a).unwrap(), s4.index_of(&b).unwrap()));
    assert_ne!(fix_vector(&a).unwrap(), fix_vector(&b).unwrap());
}

#[test]
fn lemma_check_examples() {
    let limits = Limits::default();
    let v = cycle_type_check(1, &limits).unwrap();
    assert!(v.holds && v.rows.len() == 1);
    assert!(cycle_type_check(4, &limits).unwrap().holds);
    let v7 = cycle_type_check(7, &limits).unwrap();
    assert!(v7.holds);
    assert_eq!(v7.rows.len(), 15);
    assert_eq!(
        cycle_type_check(13, &limits).unwrap_err(),
        Error::SubsetCap { n: 13, cap: 12 }
    );
}

#[test]
fn subset_geometry_shapes() {
    let limits = Limits::default();
    let one = subset_geometry(1, &limits).unwrap();
    assert_eq!(one.geometry().len(), 2);
    assert!(one.geometry().incident(one.object(0), one.object(1)));

    let three = subset_geometry(3, &limits).unwrap();
    let sizes: Vec<usize> = (0..4).map(|t| three.geometry().objects_of_type(t).len()).collect();
    assert_eq!(sizes, vec![1, 3, 3, 1]);

    let four = subset_geometry(4, &limits).unwrap();
    assert_eq!(four.geometry().len(), 16);
    assert_eq!(validate_geometry(four.geometry()), Validation::Ok);
    for a in 0..16usize {
        for b in 0..16usize {
            let want = a & b == a || a & b == b;
            assert_eq!(four.geometry().incident(four.object(a), four.object(b)), want);
        }
    }
    // maximal chains: 4! orderings of the points
    assert_eq!(
        flags_of_type(four.geometry(), &[0, 1, 2, 3, 4], 1 << 20).unwrap().len(),
        24
    );
    // point images under the induced action
    let g = four.group();
    let t = g.index_of(&p("(1 2)", 4)).unwrap();
    assert_eq!(four.action().image(t, four.object(0b0001)), four.object(0b0010));
    assert_eq!(four.action().image(t, four.object(0b0101)), four.object(0b0110));
    assert!(matches!(subset_geometry(13, &limits), Err(Error::SubsetCap { .. })));
}

#[test]
fn demo_tables_are_fix_vectors() {
    for n in 1..=6 {
        let demo = symmetric_rationality_demo(n, &Limits::default()).unwrap();
        assert!(demo.separation.separates && demo.power_map.rational && demo.lemma.holds);
        let g = demo.geometry.group();
        for (c, row) in demo.separation.table.rows.iter().enumerate() {
            let brute = brute_force_fix_vector(g.representative(c)).unwrap();
            assert_eq!(*row, brute);
        }
    }
    let two = symmetric_rationality_demo(2, &Limits::default()).unwrap();
    assert_eq!(two.separation.table.rows, vec![vec![1, 2, 1], vec![1, 0, 1]]);
}

fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(&v).unwrap())
}

proptest! {
    #[test]
    fn fix_vector_shape(g in (1usize..=12).prop_flat_map(arb_perm)) {
        let n = g.degree();
        let fv = fix_vector(&g).unwrap();
        prop_assert_eq!(fv.len(), n + 1);
        prop_assert_eq!((fv[0], fv[n]), (1, 1));
        for k in 0..=n {
            prop_assert_eq!(fv[k], fv[n - k]);
        }
        prop_assert_eq!(fv.iter().sum::<u64>(), 1u64 << g.cycle_count());
    }

    #[test]
    fn conjugates_share_fix_vectors(g in arb_perm(8), x in arb_perm(8)) {
        prop_assert_eq!(fix_vector(&g).unwrap(), fix_vector(&g.conjugate_by(&x)).unwrap());
    }

    #[test]
    fn brute_force_agrees_up_to_nine(g in (1usize..=9).prop_flat_map(arb_perm)) {
        prop_assert_eq!(fix_vector(&g).unwrap(), brute_force_fix_vector(&g).unwrap());
    }
}
