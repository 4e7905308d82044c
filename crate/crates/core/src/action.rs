//! Group actions on finite point sets, orbits, stabilisers and the mod-p
//! fixed-point count.
//!
//! An action is tabulated over all of `G × S`, but the bijection and
//! homomorphism laws are only required of the acting subgroup `H`.

use std::collections::HashMap;

use crate::arith;
use crate::carrier::{self, ElemSet};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::verdict::{LawScan, Verdict};
use crate::witness;

#[derive(Debug, Clone)]
pub struct Action<'g> {
    group: &'g Group,
    acting: ElemSet,
    points: usize,
    table: Vec<usize>,
}

impl<'g> Action<'g> {
    /// Tabulates `to` and validates it: every `to(x, ·)` with `x ∈ H` is a
    /// bijection, the unit acts trivially, and
    /// `to(xy, z) = to(x, to(y, z))` for `x, y ∈ H`. The first violating
    /// triple in lexicographic order is reported.
    pub fn new(
        group: &'g Group,
        acting: &ElemSet,
        points: usize,
        to: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        group.require_subgroup(acting, "H")?;
        let mut table = Vec::with_capacity(group.size() * points);
        for x in group.elements() {
            for z in 0..points {
                let image = to(x, z);
                if image >= points {
                    return Err(Error::PointOutOfRange {
                        element: x,
                        point: z,
                        image,
                        size: points,
                    });
                }
                table.push(image);
            }
        }
        let action = Self {
            group,
            acting: acting.clone(),
            points,
            table,
        };
        action.validate()?;
        Ok(action)
    }

    fn validate(&self) -> Result<()> {
        for x in &self.acting {
            let mut seen = ElemSet::empty(self.points);
            if !(0..self.points).all(|z| seen.insert(self.apply(x, z))) {
                return Err(Error::NotBijective(x));
            }
        }
        let one = self.group.unit();
        if let Some(z) = (0..self.points).find(|&z| self.apply(one, z) != z) {
            return Err(Error::UnitNotIdentity(z));
        }
        for x in &self.acting {
            for y in &self.acting {
                let xy = self.group.mul(x, y);
                for z in 0..self.points {
                    if self.apply(xy, z) != self.apply(x, self.apply(y, z)) {
                        return Err(Error::NotMorphism(x, y, z));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &'g Group {
        self.group
    }

    /// The acting subgroup `H`.
    pub fn acting(&self) -> &ElemSet {
        &self.acting
    }

    /// Number of points of `S`.
    pub fn points(&self) -> usize {
        self.points
    }

    #[inline]
    pub fn apply(&self, x: usize, z: usize) -> usize {
        self.table[x * self.points + z]
    }

    /// `{ to(x, a) : x ∈ H }`
    pub fn orbit(&self, a: usize) -> ElemSet {
        let mut out = ElemSet::empty(self.points);
        for x in &self.acting {
            out.insert(self.apply(x, a));
        }
        out
    }

    /// `{ x ∈ H : to(x, a) = a }`
    pub fn stabiliser(&self, a: usize) -> ElemSet {
        let mut out = ElemSet::empty(self.group.size());
        for x in &self.acting {
            if self.apply(x, a) == a {
                out.insert(x);
            }
        }
        out
    }

    /// Points fixed by every element of `H`.
    pub fn fixed_points(&self) -> ElemSet {
        ElemSet::from_predicate(self.points, |a| {
            self.acting.iter().all(|x| self.apply(x, a) == a)
        })
    }

    /// The orbit partition, ordered by smallest member.
    pub fn orbits(&self) -> Vec<ElemSet> {
        let mut covered = ElemSet::empty(self.points);
        let mut out = Vec::new();
        for a in 0..self.points {
            if covered.contains(a) {
                continue;
            }
            let orbit = self.orbit(a);
            for b in &orbit {
                covered.insert(b);
            }
            out.push(orbit);
        }
        out
    }
}

pub fn make_action<'g>(
    g: &'g Group,
    h: &ElemSet,
    points: usize,
    to: impl Fn(usize, usize) -> usize,
) -> Result<Action<'g>> {
    Action::new(g, h, points, to)
}

/// `card (orbit a) = lindex (stabiliser a) H`, and the orbit size divides
/// `card H`. The stabiliser is also checked to be a subgroup of `H`
/// containing the unit.
pub fn orbit_stabilizer_check(action: &Action<'_>, a: usize) -> Result<Vec<Verdict>> {
    let g = action.group();
    let h = action.acting();
    let orbit = action.orbit(a);
    let stab = action.stabiliser(a);
    let witness = || witness!("point" => a, "stabiliser" => stab.to_vec());
    let stab_ok = g.is_subgroup(&stab) && stab.subset(h)?;
    let mut out = vec![
        Verdict::claim("stab_1", stab.contains(g.unit())).witness_on_failure(witness),
        Verdict::claim("subgr_stab", stab_ok).witness_on_failure(witness),
    ];
    if stab_ok {
        let index = carrier::n_comp(&|x: usize, y: usize| stab.contains(g.mul(g.inv(x), y)), h);
        out.push(Verdict::equal("card_orbit", orbit.card(), index).witness_on_failure(witness));
    }
    out.push(
        Verdict::equal("card_orbit_div", h.card() % orbit.card(), 0usize)
            .witness_on_failure(witness),
    );
    Ok(out)
}

/// Orbits are disjoint and cover `S`, membership is symmetric, and a point
/// is fixed exactly when its orbit is a singleton.
pub fn orbit_partition_check(action: &Action<'_>) -> Vec<Verdict> {
    let orbits = action.orbits();
    let total: usize = orbits.iter().map(ElemSet::card).sum();
    let mut covered = ElemSet::empty(action.points());
    let mut disjoint = LawScan::new();
    for (i, orbit) in orbits.iter().enumerate() {
        let overlap = covered.intersection(orbit).expect("same carrier");
        disjoint.case(overlap.is_empty(), || witness!("orbit" => i));
        covered = covered.union(orbit).expect("same carrier");
    }

    let mut symmetric = LawScan::new();
    let mut fixed = LawScan::new();
    let s0 = action.fixed_points();
    for a in 0..action.points() {
        let orbit = action.orbit(a);
        for b in &orbit {
            symmetric.case(action.orbit(b).contains(a), || witness!("a" => a, "b" => b));
        }
        fixed.case(s0.contains(a) == (orbit.card() == 1), || witness!("a" => a));
    }
    vec![
        Verdict::equal("orbit_cover", total, action.points()),
        disjoint.finish("orbit_disjoint"),
        symmetric.finish("orbit_sym"),
        fixed.finish("S0P"),
    ]
}

/// With `card H = p^α`: `card S ≡ card S0 (mod p)`, and every orbit has
/// prime-power size.
pub fn mpl_check(action: &Action<'_>, p: usize) -> Result<Vec<Verdict>> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let card_h = action.acting().card();
    if arith::prime_power_exponent(p, card_h).is_none() {
        return Err(Error::NotPPower { card: card_h, p });
    }
    let s0 = action.fixed_points().card();
    let s = action.points();
    let mut powers = LawScan::new();
    for (i, orbit) in action.orbits().iter().enumerate() {
        let size = orbit.card();
        powers.case(
            arith::prime_power_exponent(p, size).is_some(),
            || witness!("orbit" => i, "size" => size),
        );
    }
    Ok(vec![
        Verdict::equal("mpl", s % p, s0 % p)
            .witness_on_failure(|| witness!("card_S" => s, "card_S0" => s0, "p" => p)),
        powers.finish("orbit_p_power"),
    ])
}

/// Left translation of `H` on the left cosets of `L` in `K`.
#[derive(Debug, Clone)]
pub struct TranslationAction<'g> {
    pub action: Action<'g>,
    /// Coset roots; point `i` is the coset `roots[i] L`.
    pub roots: Vec<usize>,
}

impl TranslationAction<'_> {
    /// The point carrying the coset of `x`, for `x ∈ K`.
    pub fn point_of(&self, l: &ElemSet, x: usize) -> Option<usize> {
        let root = self.action.group().lcoset_root(l, x);
        self.roots.binary_search(&root).ok()
    }
}

/// `x ↦ (yL ↦ xyL)` for `x ∈ H`, on the canonical roots of the left cosets
/// of `L` in `K`. Elements outside `K` act as the identity.
pub fn left_translation_action<'g>(
    g: &'g Group,
    h: &ElemSet,
    l: &ElemSet,
    k: &ElemSet,
) -> Result<TranslationAction<'g>> {
    g.require_nested(h, k).map_err(rename_subgroups("H", "K"))?;
    g.require_nested(l, k).map_err(rename_subgroups("L", "K"))?;
    let roots = g.lcoset_roots(l, k).to_vec();
    let mut index_of = vec![usize::MAX; g.size()];
    for (i, &r) in roots.iter().enumerate() {
        index_of[r] = i;
    }
    let action = Action::new(g, h, roots.len(), |x, i| {
        let y = g.mul(x, roots[i]);
        if k.contains(y) {
            index_of[g.lcoset_root(l, y)]
        } else {
            i
        }
    })?;
    Ok(TranslationAction { action, roots })
}

fn rename_subgroups(inner: &'static str, outer: &'static str) -> impl Fn(Error) -> Error {
    move |e| match e {
        Error::InvalidSubgroup("H") => Error::InvalidSubgroup(inner),
        Error::InvalidSubgroup("K") => Error::InvalidSubgroup(outer),
        Error::Precondition(_) => {
            Error::Precondition(format!("{inner} is not contained in {outer}"))
        }
        other => other,
    }
}

/// `x ↦ (L ↦ xLx⁻¹)` on an indexed family of subsets closed under
/// conjugation by `H`.
pub fn conjugation_action_on_subsets<'g>(
    g: &'g Group,
    h: &ElemSet,
    family: &[ElemSet],
) -> Result<Action<'g>> {
    let mut index: HashMap<&ElemSet, usize> = HashMap::with_capacity(family.len());
    for (i, member) in family.iter().enumerate() {
        if member.carrier_size() != g.size() {
            return Err(Error::Set(carrier::SetError::CarrierMismatch {
                left: member.carrier_size(),
                right: g.size(),
            }));
        }
        if index.insert(member, i).is_some() {
            return Err(Error::Precondition(format!(
                "family member {i} is repeated"
            )));
        }
    }
    g.require_subgroup(h, "H")?;
    for x in h {
        for (i, member) in family.iter().enumerate() {
            if !index.contains_key(&g.conjsg(member, x)) {
                return Err(Error::FamilyNotClosed(x, i));
            }
        }
    }
    Action::new(g, h, family.len(), |x, i| {
        index.get(&g.conjsg(&family[i], x)).copied().unwrap_or(i)
    })
}

/// `x ↦ (z ↦ x z x⁻¹)` on the elements of `G`.
pub fn conjugation_action<'g>(g: &'g Group, h: &ElemSet) -> Result<Action<'g>> {
    Action::new(g, h, g.size(), |x, z| g.conjg(g.inv(x), z))
}

/// `x ↦ (z ↦ xz)` on the elements of `G`.
pub fn translation_action<'g>(g: &'g Group, h: &ElemSet) -> Result<Action<'g>> {
    Action::new(g, h, g.size(), |x, z| g.mul(x, z))
}
