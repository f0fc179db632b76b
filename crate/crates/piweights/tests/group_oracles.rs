//! The group engine against pure brute force: element enumeration by
//! multiplication closure, class partitions by conjugating with every
//! element, centralizers and normalizers by filtering, subgroup enumeration
//! by adjoining single elements.

mod common;

use piweights::classes::conjugacy_classes;
use piweights::corpus::{builtin, BUILTINS};
use piweights::group::{centralizer_of_element, normalizer};
use piweights::pi::{PiConfig, PiSide};
use piweights::workbench::Workbench;
use std::collections::HashSet;

#[test]
fn elements_match_multiplication_closure() {
    for b in BUILTINS {
        let g = builtin(b.name).unwrap();
        let brute = common::group_elements(&g);
        let fast = g.elements().unwrap();
        assert_eq!(*fast, brute, "element lists differ for {}", b.name);
    }
}

#[test]
fn classes_match_brute_force_partition() {
    for b in BUILTINS.iter().filter(|b| b.order < 200) {
        let g = builtin(b.name).unwrap();
        let elements = common::group_elements(&g);
        let brute = common::brute_classes(&elements);
        let cc = conjugacy_classes(&g, 0).unwrap();
        assert_eq!(cc.len(), brute.len(), "class count for {}", b.name);
        for (info, class) in cc.classes().iter().zip(brute.iter()) {
            assert_eq!(info.representative, class[0], "class rep for {}", b.name);
            assert_eq!(info.size as usize, class.len(), "class size for {}", b.name);
        }
    }
}

#[test]
fn centralizers_match_brute_force() {
    for b in BUILTINS.iter().filter(|b| b.order < 200) {
        let g = builtin(b.name).unwrap();
        let elements = common::group_elements(&g);
        let cc = conjugacy_classes(&g, 0).unwrap();
        for info in cc.classes() {
            let brute = common::brute_centralizer(&elements, &info.representative);
            let cent = centralizer_of_element(&g, &info.representative).unwrap();
            assert_eq!(cent.order() as usize, brute.len());
            assert_eq!(info.centralizer_order as usize, brute.len());
            assert!(brute.iter().all(|x| cent.contains(x)));
        }
    }
}

#[test]
fn normalizers_match_brute_force() {
    let mut wb = Workbench::new();
    for b in BUILTINS.iter().filter(|b| b.order <= 48) {
        let g = builtin(b.name).unwrap();
        let elements = common::group_elements(&g);
        let list = wb.subgroup_classes(&g).unwrap();
        for class in &list.classes {
            let h = &class.representative;
            let sub_elems = common::group_elements(h);
            let brute = common::brute_normalizer(&elements, &sub_elems);
            let norm = normalizer(&g, h).unwrap();
            assert_eq!(
                norm.order() as usize,
                brute.len(),
                "normalizer in {}",
                b.name
            );
            assert_eq!(class.normalizer_order as usize, brute.len());
        }
    }
}

#[test]
fn subgroup_classes_match_brute_force() {
    let mut wb = Workbench::new();
    for b in BUILTINS.iter().filter(|b| b.order <= 48) {
        let g = builtin(b.name).unwrap();
        let elements = common::group_elements(&g);
        let all = common::brute_all_subgroups(g.degree(), &elements);
        let brute_classes = common::brute_subgroup_classes(&elements, &all);
        let list = wb.subgroup_classes(&g).unwrap();
        assert_eq!(
            list.classes.len(),
            brute_classes.len(),
            "subgroup class count for {}",
            b.name
        );
        assert_eq!(
            list.total_subgroups() as usize,
            all.len(),
            "total subgroup count for {}",
            b.name
        );
        // the index of each normalizer accounts for the class sizes
        let index_sum: u128 = list
            .classes
            .iter()
            .map(|c| g.order() / c.normalizer_order)
            .sum();
        assert_eq!(index_sum as usize, all.len());
    }
}

#[test]
fn a5_subgroups_against_oracle() {
    // non-solvable path: 59 subgroups in 9 classes
    let g = builtin("A5").unwrap();
    let elements = common::group_elements(&g);
    let all = common::brute_all_subgroups(g.degree(), &elements);
    assert_eq!(all.len(), 59);
    let mut wb = Workbench::new();
    let list = wb.subgroup_classes(&g).unwrap();
    assert_eq!(list.classes.len(), 9);
    assert_eq!(list.total_subgroups(), 59);
}

#[test]
fn hall_subgroups_form_one_class() {
    // every pi'-subgroup class of full Hall order is a single class
    // containing the constructed Hall subgroup
    let mut wb = Workbench::new();
    for b in BUILTINS.iter().filter(|b| b.order <= 48) {
        let g = builtin(b.name).unwrap();
        for pi in piweights::corpus::enumerate_pi_choices(&g) {
            if !wb.is_pi_separable(&g, &pi).unwrap() {
                continue;
            }
            let hall = wb.hall_subgroup(&g, &pi, PiSide::PiPrime).unwrap();
            let target = pi.pi_prime_part(g.order());
            assert_eq!(hall.order(), target);
            let list = wb.subgroup_classes(&g).unwrap();
            let hall_classes: Vec<_> = list
                .classes
                .iter()
                .filter(|c| {
                    c.representative.order() == target
                        && pi.is_pi_prime_number(c.representative.order())
                })
                .collect();
            assert_eq!(
                hall_classes.len(),
                1,
                "{} with pi = {} has multiple Hall classes",
                b.name,
                pi
            );
            assert!(piweights::group::are_conjugate_subgroups(
                &g,
                &hall_classes[0].representative,
                &hall
            )
            .unwrap());
        }
    }
}

#[test]
fn quotient_orders_multiply() {
    let mut wb = Workbench::new();
    for b in BUILTINS.iter().filter(|b| b.order <= 48) {
        let g = builtin(b.name).unwrap();
        for n in wb.normal_subgroups(&g).unwrap().as_ref().clone() {
            let q = wb.quotient(&g, &n).unwrap();
            assert_eq!(q.group().order() * n.order(), g.order());
        }
    }
}

#[test]
fn pi_prime_filter_is_definitional() {
    let mut wb = Workbench::new();
    let pi = PiConfig::from_primes([2]).unwrap();
    for name in ["S4", "SL(2,3)", "D12"] {
        let g = builtin(name).unwrap();
        let list = wb.subgroup_classes(&g).unwrap();
        let filtered = list.pi_prime_filter(&pi);
        let expect: HashSet<u128> = list
            .classes
            .iter()
            .map(|c| c.representative.order())
            .filter(|&o| pi.is_pi_prime_number(o))
            .collect();
        let got: HashSet<u128> = filtered
            .classes
            .iter()
            .map(|c| c.representative.order())
            .collect();
        assert_eq!(expect, got);
        assert!(filtered.classes[0].representative.is_trivial());
    }
}

#[test]
fn class_size_relations() {
    for b in BUILTINS {
        let g = builtin(b.name).unwrap();
        let cc = conjugacy_classes(&g, 0).unwrap();
        let total: u128 = cc.classes().iter().map(|c| c.size).sum();
        assert_eq!(total, g.order());
        for info in cc.classes() {
            assert_eq!(info.size * info.centralizer_order, g.order());
            assert_eq!(g.order() % info.size, 0);
        }
    }
}
