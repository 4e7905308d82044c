//! Powers of an element, cyclic subgroups, element orders and Euler's phi.

use num_integer::Integer;

use crate::arith;
use crate::carrier::ElemSet;
use crate::group::Group;
use crate::verdict::{LawScan, Verdict};
use crate::witness;

impl Group {
    /// `aⁿ` by `n` successive left multiplications, `a⁰` being the unit.
    pub fn gexpn(&self, a: usize, n: usize) -> usize {
        (0..n).fold(self.unit(), |x, _| self.mul(a, x))
    }

    /// `{ aⁿ : n ≥ 0 }`, collected by iterating `x ↦ a·x` from the unit for
    /// at most `card G` steps.
    pub fn cyclic(&self, a: usize) -> ElemSet {
        let mut out = ElemSet::empty(self.size());
        let mut x = self.unit();
        for _ in 0..self.size() {
            if !out.insert(x) {
                break;
            }
            x = self.mul(a, x);
        }
        out
    }

    /// Order of `a`, taken as the size of the cyclic subgroup it generates.
    pub fn order(&self, a: usize) -> usize {
        self.cyclic(a).card()
    }
}

/// Euler's totient: the number of `x ∈ 0..n` coprime to `n`, with
/// `phi(0) = 0`.
pub fn phi(n: usize) -> usize {
    if n == 0 {
        return 0;
    }
    arith::prime_divisors(n)
        .into_iter()
        .fold(n, |acc, p| acc / p * (p - 1))
}

/// Multiplicativity on coprime pairs with `m·n ≤ bound`, and
/// `phi(p^(k+1)) = p^(k+1) - p^k` for prime powers up to `bound`.
pub fn phi_theorem_checks(bound: usize) -> Vec<Verdict> {
    let mut mult = LawScan::new();
    for m in 1..=bound {
        for n in 1..=bound / m {
            if m.gcd(&n) == 1 {
                let (lhs, rhs) = (phi(m * n), phi(m) * phi(n));
                mult.case(lhs == rhs, || witness!("m" => m, "n" => n, "phi_mn" => lhs));
            }
        }
    }
    let mut powers = LawScan::new();
    for p in (2..=bound).filter(|&p| arith::is_prime(p)) {
        let (mut low, mut high) = (1usize, p);
        let mut k = 0usize;
        while high <= bound {
            let value = phi(high);
            powers.case(
                value == high - low,
                || witness!("p" => p, "k" => k, "phi" => value),
            );
            match high.checked_mul(p) {
                Some(next) => (low, high) = (high, next),
                None => break,
            }
            k += 1;
        }
    }
    vec![mult.finish("phi_mult"), powers.finish("phi_prime_k")]
}

/// Power laws, membership of powers in `cyclic a`, and the divisibility
/// properties of the order, for every element of `g`.
pub fn cyclic_checks(g: &Group) -> Vec<Verdict> {
    let n = g.size();
    let mut expn = LawScan::new();
    let mut members = LawScan::new();
    let mut div_card = LawScan::new();
    let mut div_g = LawScan::new();
    let mut subgroup = LawScan::new();
    for a in g.elements() {
        let c = g.cyclic(a);
        let order = c.card();
        let powers: Vec<usize> = (0..=2 * n).map(|k| g.gexpn(a, k)).collect();
        for i in 0..=n {
            for j in 0..=n {
                let holds = g.mul(powers[i], powers[j]) == powers[i + j]
                    && g.gexpn(powers[i], j) == g.gexpn(a, i * j);
                expn.case(holds, || witness!("a" => a, "n" => i, "m" => j));
            }
        }
        let listed: ElemSet = ElemSet::from_points(n, powers[..order].iter().copied())
            .expect("powers lie in the carrier");
        members.case(
            listed == c && powers.iter().all(|&x| c.contains(x)),
            || witness!("a" => a),
        );
        for (k, &x) in powers.iter().enumerate() {
            div_card.case(
                (k % order == 0) == (x == g.unit()),
                || witness!("a" => a, "n" => k),
            );
        }
        div_g.case(
            n.is_multiple_of(order),
            || witness!("a" => a, "order" => order),
        );
        subgroup.case(g.is_subgroup(&c), || witness!("a" => a));
    }
    vec![
        expn.finish("gexpn_add_mul"),
        members.finish("cyclic_min_in"),
        div_card.finish("cyclic_div_card"),
        div_g.finish("cyclic_div_g"),
        subgroup.finish("subgr_cyclic"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;
    use crate::perm::lex_rank;
    use crate::verdict::all_passed;
    use proptest::prelude::*;

    fn phi_by_gcd(n: usize) -> usize {
        (0..n).filter(|x| n.gcd(x) == 1).count()
    }

    #[test]
    fn powers_in_z6() {
        let z6 = GroupSpec::Cyclic(6).build().unwrap();
        assert_eq!(z6.gexpn(5, 0), 0);
        assert_eq!(z6.gexpn(5, 1), 5);
        assert_eq!(z6.gexpn(2, 3), 0);
        assert_eq!(z6.gexpn(0, 17), 0);
        assert_eq!(z6.cyclic(0), z6.trivial_set());
        assert_eq!(z6.cyclic(2), ElemSet::from_points(6, [0, 2, 4]).unwrap());
        assert_eq!(z6.cyclic(1), z6.full_set());
        assert_eq!(z6.order(0), 1);
        assert_eq!(z6.order(2), 3);
    }

    #[test]
    fn four_cycle_in_s4() {
        let s4 = GroupSpec::Symmetric(4).build().unwrap();
        let c = lex_rank(&[1, 2, 3, 0]);
        assert_eq!(s4.order(c), 4);
        assert_eq!(24 % s4.order(c), 0);
        assert_eq!(s4.gexpn(c, 4), s4.unit());
    }

    #[test]
    fn phi_values() {
        assert_eq!(phi(0), 0);
        assert_eq!(phi(1), 1);
        assert_eq!(phi(9), 6);
        assert_eq!(phi(12), 4);
        assert_eq!(phi(8), 4);
        assert_eq!(phi(6), phi(2) * phi(3));
        assert_eq!(phi(6), 2);
        for n in 0..300 {
            assert_eq!(phi(n), phi_by_gcd(n), "n = {n}");
        }
        for p in (2..200).filter(|&p| arith::is_prime(p)) {
            assert_eq!(phi(p), p - 1);
        }
    }

    #[test]
    fn phi_theorems_hold() {
        let v = phi_theorem_checks(500);
        assert!(all_passed(&v), "{v:?}");
        assert!(all_passed(&phi_theorem_checks(0)));
    }

    #[test]
    fn catalog_cyclic_laws() {
        for spec in [
            GroupSpec::Cyclic(1),
            GroupSpec::Cyclic(12),
            GroupSpec::Dihedral(5),
            GroupSpec::Symmetric(4),
            GroupSpec::Quaternion8,
        ] {
            let g = spec.build().unwrap();
            let v = cyclic_checks(&g);
            assert!(all_passed(&v), "{spec}: {v:?}");
        }
    }

    proptest! {
        #[test]
        fn cyclic_is_smallest_containing_subgroup(n in 1usize..=12, a in any::<usize>(), b in any::<usize>()) {
            let g = GroupSpec::Dihedral(n).build().unwrap();
            let (a, b) = (a % g.size(), b % g.size());
            let h = g.closure(&[a, b]);
            let c = g.cyclic(a);
            prop_assert!(c.subset(&h).unwrap());
            prop_assert_eq!(c.clone(), g.closure(&[a]));
            for k in 0..=g.size() {
                prop_assert!(h.contains(g.gexpn(a, k)));
            }
        }
    }
}
