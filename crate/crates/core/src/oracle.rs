//! Brute-force reference computations used to cross-check the constructive
//! procedures. Nothing here is clever, on purpose.

use std::collections::BTreeSet;

use crate::arith;
use crate::carrier::ElemSet;
use crate::group::Group;

/// Order of `x` by multiplying until the unit reappears.
pub fn element_order(g: &Group, x: usize) -> usize {
    let mut y = x;
    let mut n = 1;
    while y != g.unit() {
        y = g.mul(y, x);
        n += 1;
    }
    n
}

/// Smallest non-unit member of `H` of order exactly `p`.
pub fn first_element_of_order(g: &Group, h: &ElemSet, p: usize) -> Option<usize> {
    h.iter()
        .find(|&x| x != g.unit() && element_order(g, x) == p)
}

/// Distinct subgroups generated by a single element or a pair of elements
/// of `K`, sorted.
pub fn generated_subgroups(g: &Group, k: &ElemSet) -> Vec<ElemSet> {
    let members = k.to_vec();
    let mut out = BTreeSet::new();
    for (i, &x) in members.iter().enumerate() {
        out.insert(g.closure(&[x]));
        for &y in &members[i + 1..] {
            out.insert(g.closure(&[x, y]));
        }
    }
    out.into_iter().collect()
}

/// Every subgroup of `K` whose order is a power of `p`, the trivial one
/// included, sorted. Each non-trivial `p`-subgroup is generated by a
/// maximal subgroup and one more element, so growing found subgroups one
/// element at a time reaches all of them.
pub fn p_subgroups(g: &Group, k: &ElemSet, p: usize) -> Vec<ElemSet> {
    let candidates: Vec<usize> = k
        .iter()
        .filter(|&x| arith::prime_power_exponent(p, element_order(g, x)).is_some())
        .collect();
    let mut found = BTreeSet::new();
    let mut queue = vec![g.trivial_set()];
    found.insert(g.trivial_set());
    while let Some(s) = queue.pop() {
        for &x in &candidates {
            if s.contains(x) {
                continue;
            }
            let t = g.closure_with(&s, &[x]);
            if arith::prime_power_exponent(p, t.card()).is_some() && found.insert(t.clone()) {
                queue.push(t);
            }
        }
    }
    found.into_iter().collect()
}

/// Subgroups of `K` of order `p^dlogn(p, card K)`, from [`p_subgroups`].
pub fn sylow_subgroups(g: &Group, k: &ElemSet, p: usize) -> Vec<ElemSet> {
    let n = arith::dlogn(p, k.card()).unwrap_or(0);
    let target = p.pow(n);
    p_subgroups(g, k, p)
        .into_iter()
        .filter(|s| s.card() == target)
        .collect()
}

/// Number of `size`-subsets of an `n`-set, saturating.
pub fn binomial(n: usize, size: usize) -> u128 {
    if size > n {
        return 0;
    }
    let size = size.min(n - size);
    (0..size).fold(1u128, |acc, i| {
        acc.saturating_mul((n - i) as u128) / (i as u128 + 1)
    })
}

/// Every subset of `K` with `size` members that is closed under
/// multiplication (hence a subgroup), found by visiting all
/// `C(card K, size)` subsets in Gosper order. `K` may have at most 64
/// members.
pub fn closed_subsets_of_size(g: &Group, k: &ElemSet, size: usize) -> Vec<ElemSet> {
    let members = k.to_vec();
    let m = members.len();
    assert!(m <= 64, "subset scan supports at most 64 members");
    if size == 0 || size > m {
        return Vec::new();
    }
    let mut position = vec![None; g.size()];
    for (i, &x) in members.iter().enumerate() {
        position[x] = Some(i);
    }
    let top: u128 = 1 << m;
    let mut mask: u128 = (1 << size) - 1;
    let mut out = Vec::new();
    while mask < top {
        let bits = mask as u64;
        let closed = (0..m).filter(|i| bits >> i & 1 == 1).all(|i| {
            (0..m).filter(|j| bits >> j & 1 == 1).all(|j| {
                position[g.mul(members[i], members[j])].is_some_and(|t| bits >> t & 1 == 1)
            })
        });
        if closed {
            out.push(ElemSet::from_predicate(g.size(), |x| {
                position[x].is_some_and(|t| bits >> t & 1 == 1)
            }));
        }
        // Gosper's hack: next mask with the same popcount.
        let low = mask & mask.wrapping_neg();
        let ripple = mask + low;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
    out.sort();
    out
}
