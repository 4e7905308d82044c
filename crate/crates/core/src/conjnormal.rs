//! Conjugation, normal subgroups, normalisers, and quotient groups built on
//! canonical coset roots.

use crate::carrier::{self, ElemSet};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::verdict::{LawScan, Verdict};
use crate::witness;

impl Group {
    /// `y^x = x⁻¹ y x`.
    pub fn conjg(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), y), x)
    }

    /// `xHx⁻¹ = { y : y^x ∈ H }`.
    pub fn conjsg(&self, h: &ElemSet, x: usize) -> ElemSet {
        ElemSet::from_predicate(self.size(), |y| h.contains(self.conjg(x, y)))
    }

    /// Every `x ∈ K` satisfies `H ⊆ xHx⁻¹`. Equal cardinalities make this
    /// inclusion an equality.
    pub fn is_normal(&self, h: &ElemSet, k: &ElemSet) -> bool {
        k.iter().all(|x| {
            let xi = self.inv(x);
            // y ∈ xHx⁻¹ iff x⁻¹yx ∈ H
            h.iter().all(|y| h.contains(self.mul(self.mul(xi, y), x)))
        })
    }

    /// `{ x ∈ K : xHx⁻¹ and H agree on every z ∈ K }`.
    pub fn normaliser(&self, h: &ElemSet, k: &ElemSet) -> Result<ElemSet> {
        self.require_nested(h, k)?;
        let mut out = ElemSet::empty(self.size());
        for x in k {
            if k.iter()
                .all(|z| h.contains(self.conjg(x, z)) == h.contains(z))
            {
                out.insert(x);
            }
        }
        Ok(out)
    }
}

/// Structural facts about the normaliser of `H` in `K`: it is a subgroup
/// sandwiched between `H` and `K`, and `H` is normal in it.
pub fn normaliser_check(g: &Group, h: &ElemSet, k: &ElemSet) -> Result<Vec<Verdict>> {
    let n = g.normaliser(h, k)?;
    let witness = || witness!("H" => h.to_vec(), "K" => k.to_vec(), "N" => n.to_vec());
    Ok(vec![
        Verdict::claim("normaliser_grp", g.is_subgroup(&n)).witness_on_failure(witness),
        Verdict::claim("subset_normaliser", h.subset(&n)?).witness_on_failure(witness),
        Verdict::claim("normaliser_subset", n.subset(k)?).witness_on_failure(witness),
        Verdict::claim("normaliser_normal", g.is_normal(h, &n)).witness_on_failure(witness),
    ])
}

/// The group of left cosets of a normal subgroup `H` of `K`, carried by the
/// canonical roots of the cosets.
///
/// Quotient element `i` is the coset whose smallest member is `roots()[i]`.
#[derive(Debug, Clone)]
pub struct QuotientGroup {
    normal: ElemSet,
    ambient: ElemSet,
    roots: Vec<usize>,
    proj: Vec<Option<usize>>,
    group: Group,
}

impl QuotientGroup {
    /// Builds `K/H` and runs the full group validator on the resulting table.
    pub fn new(g: &Group, h: &ElemSet, k: &ElemSet) -> Result<Self> {
        g.require_nested(h, k)?;
        if !g.is_normal(h, k) {
            return Err(Error::NotNormal("H", "K"));
        }
        let roots = g.lcoset_roots(h, k).to_vec();
        let mut index_of = vec![None; g.size()];
        for (i, &r) in roots.iter().enumerate() {
            index_of[r] = Some(i);
        }
        let mut proj = vec![None; g.size()];
        for x in k {
            proj[x] = index_of[g.lcoset_root(h, x)];
        }
        let group = Group::from_fn(roots.len(), |a, b| {
            proj[g.mul(roots[a], roots[b])].expect("K is closed under multiplication")
        })
        .map_err(Error::QuotientTable)?;

        let unit_root = proj[g.unit()].expect("K contains the unit");
        if group.unit() != unit_root {
            return Err(Error::InternalInvariant(format!(
                "quotient unit {} differs from the root of the unit coset {unit_root}",
                group.unit()
            )));
        }
        for (a, &r) in roots.iter().enumerate() {
            if proj[g.inv(r)] != Some(group.inv(a)) {
                return Err(Error::InternalInvariant(format!(
                    "inverse of coset root {r} is not the root of its inverse"
                )));
            }
        }
        Ok(Self {
            normal: h.clone(),
            ambient: k.clone(),
            roots,
            proj,
            group,
        })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn normal(&self) -> &ElemSet {
        &self.normal
    }

    pub fn ambient(&self) -> &ElemSet {
        &self.ambient
    }

    /// Coset roots in quotient-index order.
    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn size(&self) -> usize {
        self.group.size()
    }

    /// The quotient map; `None` outside `K`.
    pub fn project(&self, x: usize) -> Option<usize> {
        self.proj.get(x).copied().flatten()
    }

    /// Image of a subset of `K` in the quotient.
    pub fn image(&self, l: &ElemSet) -> Result<ElemSet> {
        if !l.subset(&self.ambient)? {
            return Err(Error::Precondition("set is not contained in K".into()));
        }
        Ok(carrier::image(
            |x| self.proj[x].expect("inside K"),
            l,
            self.size(),
        )?)
    }

    /// `{ x ∈ K : proj(x) ∈ L1 }`.
    pub fn preimage(&self, l1: &ElemSet) -> Result<ElemSet> {
        if l1.carrier_size() != self.size() {
            return Err(Error::Set(carrier::SetError::CarrierMismatch {
                left: l1.carrier_size(),
                right: self.size(),
            }));
        }
        Ok(ElemSet::from_predicate(self.proj.len(), |x| {
            self.proj[x].is_some_and(|q| l1.contains(q))
        }))
    }
}

pub fn quotient_group(g: &Group, h: &ElemSet, k: &ElemSet) -> Result<QuotientGroup> {
    QuotientGroup::new(g, h, k)
}

/// The quotient map is a homomorphism on `K`, kills `H`, sends `x` to a
/// member of `xH`, and the quotient has `lindex H K` elements.
pub fn quotient_morphism_check(g: &Group, q: &QuotientGroup) -> Result<Vec<Verdict>> {
    let k = q.ambient();
    let h = q.normal();
    let qg = q.group();
    let mut morph = LawScan::new();
    for x in k {
        for y in k {
            let lhs = q.project(g.mul(x, y));
            let rhs = qg.mul(q.project(x).unwrap(), q.project(y).unwrap());
            morph.case(lhs == Some(rhs), || witness!("x" => x, "y" => y));
        }
    }
    let mut kills = LawScan::new();
    for x in h {
        kills.case(q.project(x) == Some(qg.unit()), || witness!("x" => x));
    }
    let mut lcoset = LawScan::new();
    for x in k {
        let root = q.roots()[q.project(x).unwrap()];
        lcoset.case(g.lcoset(h, x).contains(root), || witness!("x" => x));
    }
    Ok(vec![
        Verdict::equal("card_root_group", q.size(), g.lindex(h, k)?),
        morph.finish("quotient_morph"),
        kills.finish("quotient1"),
        lcoset.finish("quotient_lcoset"),
    ])
}

/// For a subgroup `H ⊆ L ⊆ K`: its image is a subgroup of order
/// `lindex H L`.
pub fn image_subgroup(g: &Group, q: &QuotientGroup, l: &ElemSet) -> Result<ElemSet> {
    g.require_subgroup(l, "L")?;
    if !q.normal().subset(l)? {
        return Err(Error::Precondition("H is not contained in L".into()));
    }
    q.image(l)
}

/// For a subgroup `L1` of the quotient: `{ x ∈ K : proj(x) ∈ L1 }`.
pub fn preimage_subgroup(q: &QuotientGroup, l1: &ElemSet) -> Result<ElemSet> {
    if !q.group().is_subgroup(l1) {
        return Err(Error::InvalidSubgroup("L1"));
    }
    q.preimage(l1)
}

pub fn quotient_image_check(g: &Group, q: &QuotientGroup, l: &ElemSet) -> Result<Vec<Verdict>> {
    let image = image_subgroup(g, q, l)?;
    let witness = || witness!("L" => l.to_vec(), "image" => image.to_vec());
    Ok(vec![
        Verdict::claim("quotient_image_subgrp", q.group().is_subgroup(&image))
            .witness_on_failure(witness),
        Verdict::equal("quotient_index", image.card(), g.lindex(q.normal(), l)?)
            .witness_on_failure(witness),
    ])
}

pub fn quotient_preimage_check(g: &Group, q: &QuotientGroup, l1: &ElemSet) -> Result<Vec<Verdict>> {
    let pre = preimage_subgroup(q, l1)?;
    let back = q.image(&pre)?;
    let witness = || witness!("L1" => l1.to_vec(), "preimage" => pre.to_vec());
    Ok(vec![
        Verdict::claim("quotient_preimage_subgrp", g.is_subgroup(&pre)).witness_on_failure(witness),
        Verdict::claim("quotient_preimage_subset_h", q.normal().subset(&pre)?)
            .witness_on_failure(witness),
        Verdict::claim("quotient_preimage_subset_k", pre.subset(q.ambient())?)
            .witness_on_failure(witness),
        Verdict::claim("quotient_image_preimage", &back == l1).witness_on_failure(witness),
    ])
}
