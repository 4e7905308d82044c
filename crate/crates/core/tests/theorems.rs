use grp_core::action::{self, conjugation_action, left_translation_action};
use grp_core::conjnormal::{self, QuotientGroup};
use grp_core::cyclic::{self, phi};
use grp_core::group::check_identities;
use grp_core::subgroup::lagrange_check;
use grp_core::sylow::{self, cauchy, sylow1, sylow2, syset};
use grp_core::verdict::all_passed;
use grp_core::{arith, oracle, ElemSet, Group, GroupSpec};

fn small_catalog() -> Vec<(GroupSpec, Group)> {
    GroupSpec::catalog()
        .into_iter()
        .map(|spec| {
            let g = spec.build().unwrap();
            (spec, g)
        })
        .filter(|(_, g)| g.size() <= 24)
        .collect()
}

#[test]
fn identities_and_lagrange() {
    for (spec, g) in small_catalog() {
        assert!(all_passed(&check_identities(&g)), "{spec}");
        let full = g.full_set();
        for h in oracle::generated_subgroups(&g, &full) {
            let v = lagrange_check(&g, &h, &full).unwrap();
            assert!(all_passed(&v), "{spec} H={h}: {v:?}");
            assert_eq!(h.card() * g.lindex(&h, &full).unwrap(), g.size());
        }
    }
}

#[test]
fn orbit_counting_on_cosets() {
    for (spec, g) in small_catalog().into_iter().filter(|(_, g)| g.size() <= 12) {
        let full = g.full_set();
        let sample = oracle::generated_subgroups(&g, &full);
        for h in &sample {
            let conj = conjugation_action(&g, h).unwrap();
            assert!(all_passed(&action::orbit_partition_check(&conj)), "{spec}");
            for l in &sample {
                let ta = left_translation_action(&g, h, l, &full).unwrap();
                for z in 0..ta.action.points() {
                    let v = action::orbit_stabilizer_check(&ta.action, z).unwrap();
                    assert!(all_passed(&v), "{spec} H={h} L={l}: {v:?}");
                }
                if let [p] = arith::prime_divisors(h.card())[..] {
                    assert!(all_passed(&action::mpl_check(&ta.action, p).unwrap()));
                }
            }
        }
    }
}

#[test]
fn cauchy_agrees_with_order_scan() {
    for (spec, g) in small_catalog() {
        let full = g.full_set();
        for p in arith::prime_divisors(g.size()) {
            let w = cauchy(&g, &full, p).unwrap();
            assert_eq!(oracle::element_order(&g, w.element), p, "{spec} p={p}");
            assert_eq!(
                oracle::first_element_of_order(&g, &full, p),
                Some(w.element)
            );
        }
    }
}

#[test]
fn sylow_subgroups_match_enumeration() {
    for (spec, g) in small_catalog() {
        let full = g.full_set();
        for p in arith::prime_divisors(g.size()) {
            let cert = sylow1(&g, &full, p).unwrap();
            assert!(all_passed(
                &sylow::sylow_chain_check(&g, &full, &cert).unwrap()
            ));
            let family = syset(&g, &full, p).unwrap();
            assert_eq!(
                family,
                oracle::sylow_subgroups(&g, &full, p),
                "{spec} p={p}"
            );
            assert_eq!(family.len() % p, 1);
            assert_eq!(g.size() % family.len(), 0);
            if g.is_abelian() {
                assert_eq!(family.len(), 1);
            }
            for a in &family {
                for b in &family {
                    let x = sylow2(&g, &full, p, b, a).unwrap();
                    assert_eq!(&g.conjsg(a, x), b, "{spec} p={p}");
                }
            }
        }
    }
}

#[test]
fn pinned_sylow_counts() {
    let count = |spec: GroupSpec, p| {
        let g = spec.build().unwrap();
        oracle::sylow_subgroups(&g, &g.full_set(), p).len()
    };
    assert_eq!(count(GroupSpec::Symmetric(4), 2), 3);
    assert_eq!(count(GroupSpec::Symmetric(4), 3), 4);
    assert_eq!(count(GroupSpec::Symmetric(3), 2), 3);
    assert_eq!(count(GroupSpec::Symmetric(5), 5), 6);
    assert_eq!(count(GroupSpec::Dihedral(5), 2), 5);
}

#[test]
fn quotients_of_normal_subgroups() {
    for (spec, g) in small_catalog() {
        let full = g.full_set();
        for h in oracle::generated_subgroups(&g, &full) {
            if !g.is_normal(&h, &full) {
                assert!(QuotientGroup::new(&g, &h, &full).is_err());
                continue;
            }
            let q = QuotientGroup::new(&g, &h, &full).unwrap();
            assert_eq!(q.size(), g.lindex(&h, &full).unwrap(), "{spec}");
            assert!(all_passed(
                &conjnormal::quotient_morphism_check(&g, &q).unwrap()
            ));
            for l1 in oracle::generated_subgroups(q.group(), &q.group().full_set()) {
                let v = conjnormal::quotient_preimage_check(&g, &q, &l1).unwrap();
                assert!(all_passed(&v), "{spec} H={h} L1={l1}");
            }
        }
    }
}

#[test]
fn z12_quotient_is_cyclic_of_order_four() {
    let g = GroupSpec::Cyclic(12).build().unwrap();
    let h = g.closure(&[4]);
    let q = conjnormal::quotient_group(&g, &h, &g.full_set()).unwrap();
    let qg = q.group();
    assert_eq!(qg.size(), 4);
    assert!(qg.elements().any(|x| oracle::element_order(qg, x) == 4));
}

#[test]
fn phi_against_gcd_count() {
    use num_integer::Integer;
    for n in 0..=1000usize {
        let expected = (0..n).filter(|x| n.gcd(x) == 1).count();
        assert_eq!(phi(n), expected, "n = {n}");
    }
    assert!(all_passed(&cyclic::phi_theorem_checks(1000)));
}

#[test]
fn element_orders_divide_group_order() {
    for (spec, g) in small_catalog() {
        assert!(all_passed(&cyclic::cyclic_checks(&g)), "{spec}");
        for x in g.elements() {
            assert_eq!(g.order(x), oracle::element_order(&g, x));
        }
    }
}

#[test]
fn subset_scan_agrees_on_s4() {
    let g = GroupSpec::Symmetric(4).build().unwrap();
    let full = g.full_set();
    let scanned: Vec<ElemSet> = oracle::closed_subsets_of_size(&g, &full, 8);
    assert_eq!(scanned, syset(&g, &full, 2).unwrap());
}
