//! Subgroups as indicator sets: the subgroup test, generated closures,
//! cosets, indices and Lagrange's theorem.

use crate::carrier::{self, ElemSet};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::verdict::{LawScan, Verdict};
use crate::witness;

impl Group {
    /// `H` contains the unit and `y * x⁻¹ ∈ H` for all `x, y ∈ H`, i.e. `H`
    /// is included in each of its right cosets `Hx`, `x ∈ H`.
    pub fn is_subgroup(&self, h: &ElemSet) -> bool {
        h.carrier_size() == self.size()
            && h.contains(self.unit())
            && h.iter().all(|x| {
                let xi = self.inv(x);
                h.iter().all(|y| h.contains(self.mul(y, xi)))
            })
    }

    /// Smallest set containing the unit and `gens` that is closed under
    /// multiplication, grown breadth-first by left multiplication with the
    /// generators. In a finite group this is the generated subgroup.
    ///
    /// Panics if a generator is outside the carrier.
    pub fn closure(&self, gens: &[usize]) -> ElemSet {
        let mut set = self.trivial_set();
        let mut queue = vec![self.unit()];
        for &g in gens {
            if set.insert(g) {
                queue.push(g);
            }
        }
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in gens {
                let y = self.mul(g, x);
                if set.insert(y) {
                    queue.push(y);
                }
            }
        }
        set
    }

    /// Closure of the members of `set` together with `gens`.
    pub fn closure_with(&self, set: &ElemSet, gens: &[usize]) -> ElemSet {
        let mut all = set.to_vec();
        all.extend_from_slice(gens);
        self.closure(&all)
    }

    /// `aH = { x : a⁻¹x ∈ H }`.
    pub fn lcoset(&self, h: &ElemSet, a: usize) -> ElemSet {
        let ai = self.inv(a);
        ElemSet::from_predicate(self.size(), |x| h.contains(self.mul(ai, x)))
    }

    /// `Ha = { x : xa⁻¹ ∈ H }`.
    pub fn rcoset(&self, h: &ElemSet, a: usize) -> ElemSet {
        let ai = self.inv(a);
        ElemSet::from_predicate(self.size(), |x| h.contains(self.mul(x, ai)))
    }

    /// Canonical representative of `xH`: its smallest index, found as the
    /// minimum of `{ xh : h ∈ H }`. `H` must contain the unit.
    pub fn lcoset_root(&self, h: &ElemSet, x: usize) -> usize {
        h.iter().map(|y| self.mul(x, y)).min().unwrap_or(x)
    }

    /// Canonical representative of `Hx`.
    pub fn rcoset_root(&self, h: &ElemSet, x: usize) -> usize {
        h.iter().map(|y| self.mul(y, x)).min().unwrap_or(x)
    }

    /// Roots of the left cosets of `H` lying in `K`, ascending.
    pub fn lcoset_roots(&self, h: &ElemSet, k: &ElemSet) -> ElemSet {
        let mut out = ElemSet::empty(self.size());
        for x in k {
            if self.lcoset_root(h, x) == x {
                out.insert(x);
            }
        }
        out
    }

    /// Number of left cosets of `H` inside `K`, counted as canonical roots.
    pub fn lindex(&self, h: &ElemSet, k: &ElemSet) -> Result<usize> {
        self.require_nested(h, k)?;
        Ok(carrier::n_comp(
            &|x: usize, y: usize| h.contains(self.mul(self.inv(x), y)),
            k,
        ))
    }

    /// Number of right cosets of `H` inside `K`.
    pub fn rindex(&self, h: &ElemSet, k: &ElemSet) -> Result<usize> {
        self.require_nested(h, k)?;
        Ok(carrier::n_comp(
            &|x: usize, y: usize| h.contains(self.mul(y, self.inv(x))),
            k,
        ))
    }

    /// `HK = { hk : h ∈ H, k ∈ K }`.
    pub fn set_product(&self, h: &ElemSet, k: &ElemSet) -> ElemSet {
        let mut out = ElemSet::empty(self.size());
        for x in h {
            for y in k {
                out.insert(self.mul(x, y));
            }
        }
        out
    }

    pub(crate) fn require_subgroup(&self, h: &ElemSet, name: &'static str) -> Result<()> {
        if self.is_subgroup(h) {
            Ok(())
        } else {
            Err(Error::InvalidSubgroup(name))
        }
    }

    pub(crate) fn require_nested(&self, h: &ElemSet, k: &ElemSet) -> Result<()> {
        self.require_subgroup(h, "H")?;
        self.require_subgroup(k, "K")?;
        if !h.subset(k)? {
            return Err(Error::Precondition("H is not contained in K".into()));
        }
        Ok(())
    }
}

/// `card H * lindex H K = card K`, its corollary `card H | card K`, and the
/// right-coset version, which is also checked against the left one through
/// the inversion map (it sends `xH` onto `Hx⁻¹`).
pub fn lagrange_check(g: &Group, h: &ElemSet, k: &ElemSet) -> Result<Vec<Verdict>> {
    let lindex = g.lindex(h, k)?;
    let rindex = g.rindex(h, k)?;
    let witness = || witness!("H" => h.to_vec(), "K" => k.to_vec());

    let mut out = vec![
        Verdict::equal("lLaGrange", h.card() * lindex, k.card()).witness_on_failure(witness),
        Verdict::equal("sugrp_divn", k.card() % h.card(), 0usize).witness_on_failure(witness),
        Verdict::equal("rLaGrange", h.card() * rindex, k.card()).witness_on_failure(witness),
    ];

    let mut mirror = LawScan::new();
    for r in g.lcoset_roots(h, k).iter() {
        let left = g.lcoset(h, r);
        let inverted = carrier::image(|x| g.inv(x), &left, g.size())?;
        mirror.case(inverted == g.rcoset(h, g.inv(r)), || witness!("root" => r));
    }
    out.push(mirror.finish("lcoset_rcoset_mirror"));
    Ok(out)
}

/// For subgroups `H`, `K`: `HK` is a subgroup iff `HK = KH`, and `HK` is a
/// subgroup iff `KH` is.
pub fn product_subgroup_check(g: &Group, h: &ElemSet, k: &ElemSet) -> Result<Vec<Verdict>> {
    g.require_subgroup(h, "H")?;
    g.require_subgroup(k, "K")?;
    let hk = g.set_product(h, k);
    let kh = g.set_product(k, h);
    let hk_sub = g.is_subgroup(&hk);
    let kh_sub = g.is_subgroup(&kh);
    let witness = || witness!("H" => h.to_vec(), "K" => k.to_vec());
    Ok(vec![
        Verdict::equal("subprod_sbgrp", hk_sub, hk == kh).witness_on_failure(witness),
        Verdict::equal("sbgrphk_sbgrpkh", hk_sub, kh_sub).witness_on_failure(witness),
    ])
}
