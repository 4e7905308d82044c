//! Cauchy's theorem through the rotation action on `H*`, and the three Sylow
//! theorems built on top of it.
//!
//! Every step re-checks the facts the construction relies on (fixed-point
//! counts, orders, normality) and reports a violation as
//! [`Error::InternalInvariant`] instead of continuing.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::action::{self, Action};
use crate::arith;
use crate::carrier::ElemSet;
use crate::conjnormal::{preimage_subgroup, QuotientGroup};
use crate::error::{Error, Result};
use crate::group::{Group, GroupSpec};
use crate::verdict::{all_passed, LawScan, Verdict};
use crate::witness;

pub use crate::arith::dlogn;

/// Default bound on `card(H)^(p-1)`, the number of tuples materialised by
/// [`cauchy`].
pub const DEFAULT_MAX_TUPLE_CARRIER: usize = 1_000_000;

/// Environment variable overriding [`DEFAULT_MAX_TUPLE_CARRIER`].
pub const MAX_TUPLE_CARRIER_VAR: &str = "GRP_MAX_TUPLE_CARRIER";

/// The tuple bound in effect: the value of `GRP_MAX_TUPLE_CARRIER` when it
/// parses, the default otherwise.
pub fn max_tuple_carrier() -> usize {
    std::env::var(MAX_TUPLE_CARRIER_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_TUPLE_CARRIER)
}

/// Length-`len` tuples over the members of `H`, ranked in mixed radix with
/// the first component most significant.
#[derive(Debug, Clone)]
pub struct TupleCarrier {
    members: Vec<usize>,
    position: Vec<usize>,
    len: usize,
    size: usize,
}

impl TupleCarrier {
    /// `None` when `card(H)^len` overflows.
    pub fn new(h: &ElemSet, len: usize) -> Option<Self> {
        let members = h.to_vec();
        let size = members.len().checked_pow(u32::try_from(len).ok()?)?;
        let mut position = vec![usize::MAX; h.carrier_size()];
        for (i, &x) in members.iter().enumerate() {
            position[x] = i;
        }
        Some(Self {
            members,
            position,
            len,
            size,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn decode(&self, mut rank: usize) -> Vec<usize> {
        let m = self.members.len();
        let mut out = vec![0; self.len];
        for slot in out.iter_mut().rev() {
            *slot = self.members[rank % m];
            rank /= m;
        }
        out
    }

    /// Panics if a component lies outside `H`.
    pub fn encode(&self, tuple: &[usize]) -> usize {
        tuple
            .iter()
            .fold(0, |acc, &x| acc * self.members.len() + self.position[x])
    }
}

/// `(h1, …, h_{p-1}) ↦ ((h1⋯h_{p-1})⁻¹, h1, …, h_{p-1})`, a bijection onto
/// the `p`-tuples over `H` whose product is the unit.
fn complete(g: &Group, tail: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(tail.len() + 1);
    out.push(g.inv(g.product(tail.iter().copied())));
    out.extend_from_slice(tail);
    out
}

/// Result of [`cauchy`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CauchyWitness {
    pub element: usize,
    pub order: usize,
    pub p: usize,
    /// Number of tuples in `H*`; zero when the direct scan was used.
    pub tuple_carrier: usize,
    /// Fixed tuples of the rotation action; zero when the direct scan was
    /// used.
    pub fixed_points: usize,
    pub fallback: bool,
    pub trace: Vec<String>,
}

/// An element of order `p` in `H`, using the default tuple bound.
pub fn cauchy(g: &Group, h: &ElemSet, p: usize) -> Result<CauchyWitness> {
    cauchy_with_limit(g, h, p, max_tuple_carrier())
}

/// `Z_p` rotates the tuples of `H*`; the fixed tuples are the constant ones
/// `(a, …, a)` with `aᵖ = 1`, and their number is divisible by `p`, so some
/// `a ≠ 1` has order `p`. The smallest such `a` is returned.
///
/// When `card(H)^(p-1)` exceeds `limit` the same element is found by a
/// direct order scan and `fallback` is set.
pub fn cauchy_with_limit(g: &Group, h: &ElemSet, p: usize, limit: usize) -> Result<CauchyWitness> {
    g.require_subgroup(h, "H")?;
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let card = h.card();
    if !card.is_multiple_of(p) {
        return Err(Error::DoesNotDivide { p, card });
    }
    let mut trace = Vec::new();
    let tuples = TupleCarrier::new(h, p - 1).filter(|t| t.size() <= limit);
    let (element, tuple_carrier, fixed_points, fallback) = match tuples {
        Some(tuples) => {
            let (a, fixed) = rotate_tuples(g, p, &tuples, &mut trace)?;
            (a, tuples.size(), fixed, false)
        }
        None => {
            trace.push(format!(
                "H* would hold {card}^{} tuples, above the limit {limit}; scanning element orders",
                p - 1
            ));
            let a = h
                .iter()
                .find(|&x| x != g.unit() && g.order(x) == p)
                .ok_or_else(|| {
                    invariant(format!(
                        "no element of order {p} in a subgroup of order {card}"
                    ))
                })?;
            (a, 0, 0, true)
        }
    };
    let order = g.order(element);
    if order != p {
        return Err(invariant(format!(
            "element {element} has order {order}, expected {p}"
        )));
    }
    trace.push(format!("element {element} has order {p}"));
    Ok(CauchyWitness {
        element,
        order,
        p,
        tuple_carrier,
        fixed_points,
        fallback,
        trace,
    })
}

fn rotate_tuples(
    g: &Group,
    p: usize,
    tuples: &TupleCarrier,
    trace: &mut Vec<String>,
) -> Result<(usize, usize)> {
    let zp = GroupSpec::Cyclic(p)
        .build()
        .map_err(|e| invariant(format!("cannot build Z_{p}: {e}")))?;
    let full: Vec<Vec<usize>> = (0..tuples.size())
        .map(|rank| complete(g, &tuples.decode(rank)))
        .collect();
    let rotation = Action::new(&zp, &zp.full_set(), tuples.size(), |n, rank| {
        let t = &full[rank];
        let rotated: Vec<usize> = (1..p).map(|j| t[(j + n) % p]).collect();
        tuples.encode(&rotated)
    })?;
    trace.push(format!(
        "H* has {} tuples of length {p} with unit product",
        tuples.size()
    ));

    let s0 = rotation.fixed_points();
    let mpl = action::mpl_check(&rotation, p)?;
    if !all_passed(&mpl) || s0.card() % p != 0 {
        return Err(invariant(format!(
            "rotation on H* fixes {} tuples, not a multiple of {p}",
            s0.card()
        )));
    }
    trace.push(format!(
        "Z_{p} rotation fixes {} tuples; {} ≡ {} ≡ 0 (mod {p})",
        s0.card(),
        tuples.size(),
        s0.card()
    ));

    let mut diagonal = Vec::with_capacity(s0.card());
    for rank in &s0 {
        let t = &full[rank];
        if t.iter().any(|&x| x != t[0]) {
            return Err(invariant(format!("fixed tuple {t:?} is not constant")));
        }
        diagonal.push(t[0]);
    }
    let a = diagonal
        .into_iter()
        .filter(|&x| x != g.unit())
        .min()
        .ok_or_else(|| invariant("only the unit tuple is fixed".into()))?;
    Ok((a, s0.card()))
}

fn invariant(message: String) -> Error {
    Error::InternalInvariant(message)
}

fn require_prime(p: usize) -> Result<()> {
    if arith::is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// `H` is a subgroup of `K` of order `p^dlogn(p, card K)`.
pub fn is_sylow(g: &Group, k: &ElemSet, p: usize, h: &ElemSet) -> Result<bool> {
    g.require_subgroup(k, "K")?;
    require_prime(p)?;
    Ok(h.carrier_size() == g.size()
        && g.is_subgroup(h)
        && h.subset(k)?
        && h.card() == sylow_order(p, k.card())?)
}

fn sylow_order(p: usize, card: usize) -> Result<usize> {
    Ok(p.pow(dlogn(p, card)?))
}

/// One step of the Sylow 1 chain: from `Hi` of order `pⁱ` inside `K`
/// (`0 < i < dlogn(p, card K)`), a subgroup of order `p^(i+1)` containing
/// `Hi` as a normal subgroup.
pub fn sylow1_rec(g: &Group, k: &ElemSet, p: usize, hi: &ElemSet, i: u32) -> Result<ElemSet> {
    sylow1_step(g, k, p, hi, i, &mut Vec::new())
}

fn sylow1_step(
    g: &Group,
    k: &ElemSet,
    p: usize,
    hi: &ElemSet,
    i: u32,
    trace: &mut Vec<String>,
) -> Result<ElemSet> {
    g.require_nested(hi, k).map_err(|e| match e {
        Error::InvalidSubgroup("H") => Error::InvalidSubgroup("Hi"),
        Error::Precondition(_) => Error::Precondition("Hi is not contained in K".into()),
        other => other,
    })?;
    require_prime(p)?;
    let n = dlogn(p, k.card())?;
    if i == 0 || i >= n {
        return Err(Error::Precondition(format!(
            "step {i} is outside 0 < i < {n}"
        )));
    }
    if hi.card() != p.pow(i) {
        return Err(Error::Precondition(format!(
            "Hi has order {}, expected {p}^{i}",
            hi.card()
        )));
    }

    // Hi acts on its own left cosets; the fixed ones are the cosets inside
    // the normaliser.
    let translation = action::left_translation_action(g, hi, hi, k)?;
    let s0 = translation.action.fixed_points();
    let norm = g.normaliser(hi, k)?;
    let in_norm = g.lindex(hi, &norm)?;
    if s0.card() != in_norm || !s0.iter().all(|j| norm.contains(translation.roots[j])) {
        return Err(invariant(format!(
            "Hi fixes {} cosets but the normaliser holds {in_norm}",
            s0.card()
        )));
    }
    let cosets = translation.roots.len();
    if (cosets - s0.card()) % p != 0 || s0.card() % p != 0 {
        return Err(invariant(format!(
            "{} fixed cosets out of {cosets} contradicts the mod-{p} count",
            s0.card()
        )));
    }

    let quotient = QuotientGroup::new(g, hi, &norm)?;
    let q = quotient.group();
    let lift = cauchy(q, &q.full_set(), p)?;
    let h = preimage_subgroup(&quotient, &q.cyclic(lift.element))?;
    trace.push(format!(
        "H{i} (order {}): normaliser order {}, {} fixed cosets, quotient order {}, element {} (root {}) of order {p}, lifted to order {}",
        hi.card(),
        norm.card(),
        s0.card(),
        q.size(),
        lift.element,
        quotient.roots()[lift.element],
        h.card()
    ));

    if h.card() != p * hi.card() || !hi.subset(&h)? || !h.subset(k)? || !g.is_normal(hi, &h) {
        return Err(invariant(format!(
            "lifted subgroup of order {} does not extend Hi of order {}",
            h.card(),
            hi.card()
        )));
    }
    Ok(h)
}

/// A Sylow `p`-subgroup of `K` together with the chain that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SylowCertificate {
    pub subgroup: ElemSet,
    pub p: usize,
    pub n: u32,
    /// `H1 ⊂ H2 ⊂ … ⊂ Hn`, `card Hi = pⁱ`.
    pub chain: Vec<ElemSet>,
    pub trace: Vec<String>,
}

/// Starts from a cyclic subgroup of order `p` given by Cauchy and extends it
/// with [`sylow1_rec`] until its order is `p^dlogn(p, card K)`.
pub fn sylow1(g: &Group, k: &ElemSet, p: usize) -> Result<SylowCertificate> {
    g.require_subgroup(k, "K")?;
    require_prime(p)?;
    let n = dlogn(p, k.card())?;
    if n == 0 {
        return Err(Error::DoesNotDivide { p, card: k.card() });
    }
    let base = cauchy(g, k, p)?;
    let mut trace = base.trace.clone();
    let mut chain = vec![g.cyclic(base.element)];
    trace.push(format!("H1 = <{}>", base.element));
    for i in 1..n {
        let next = sylow1_step(
            g,
            k,
            p,
            chain.last().expect("chain is non-empty"),
            i,
            &mut trace,
        )?;
        chain.push(next);
    }
    let subgroup = chain.last().expect("chain is non-empty").clone();
    if !is_sylow(g, k, p, &subgroup)? {
        return Err(invariant(format!(
            "final subgroup of order {} is not Sylow",
            subgroup.card()
        )));
    }
    Ok(SylowCertificate {
        subgroup,
        p,
        n,
        chain,
        trace,
    })
}

/// Each link of the chain has index `p` in the next and is normal in it,
/// and the last link is Sylow.
pub fn sylow_chain_check(g: &Group, k: &ElemSet, cert: &SylowCertificate) -> Result<Vec<Verdict>> {
    let p = cert.p;
    let mut steps = LawScan::new();
    for (i, pair) in cert.chain.windows(2).enumerate() {
        let holds = pair[1].card() == p * pair[0].card()
            && pair[0].subset(&pair[1])?
            && g.is_normal(&pair[0], &pair[1]);
        steps.case(
            holds,
            || witness!("step" => i + 1, "order" => pair[0].card()),
        );
    }
    let first_ok = cert.chain.first().is_some_and(|h| h.card() == p);
    Ok(vec![
        Verdict::claim("sylow1_base", first_ok),
        steps.finish("sylow1_rec"),
        Verdict::equal("sylow1", cert.subgroup.card(), p.pow(cert.n)),
        Verdict::claim("is_sylow", is_sylow(g, k, p, &cert.subgroup)?),
    ])
}

/// For a `p`-subgroup `H` of `K` and a Sylow subgroup `L`: an `x ∈ K` with
/// `H ⊆ xLx⁻¹`, the root of the smallest coset of `L` fixed by `H`.
pub fn sylow2(g: &Group, k: &ElemSet, p: usize, h: &ElemSet, l: &ElemSet) -> Result<usize> {
    if !is_sylow(g, k, p, l)? {
        return Err(Error::Precondition("L is not a Sylow subgroup of K".into()));
    }
    g.require_nested(h, k)?;
    if arith::prime_power_exponent(p, h.card()).is_none() {
        return Err(Error::NotPPower { card: h.card(), p });
    }
    let translation = action::left_translation_action(g, h, l, k)?;
    let s = translation.action.points();
    let s0 = translation.action.fixed_points();
    if s % p == 0 || s0.card() % p != s % p {
        return Err(invariant(format!(
            "{s} cosets of L with {} fixed contradicts the mod-{p} count",
            s0.card()
        )));
    }
    let x = translation.roots[s0.first().expect("fixed-point count is non-zero mod p")];
    if !h.subset(&g.conjsg(l, x))? {
        return Err(invariant(format!(
            "H is not contained in the conjugate of L by {x}"
        )));
    }
    Ok(x)
}

/// `{ xHx⁻¹ : x ∈ K }`, sorted.
pub fn conjugates(g: &Group, k: &ElemSet, h: &ElemSet) -> Vec<ElemSet> {
    let set: BTreeSet<ElemSet> = k.iter().map(|x| g.conjsg(h, x)).collect();
    set.into_iter().collect()
}

/// All Sylow `p`-subgroups of `K`, as the conjugates of the one built by
/// [`sylow1`].
pub fn syset(g: &Group, k: &ElemSet, p: usize) -> Result<Vec<ElemSet>> {
    let cert = sylow1(g, k, p)?;
    Ok(conjugates(g, k, &cert.subgroup))
}

/// `card (syset K p)` divides `card K`: `K` acts transitively on the Sylow
/// subgroups by conjugation, so their number is an index in `K`.
pub fn sylow3_div_check(g: &Group, k: &ElemSet, p: usize) -> Result<Vec<Verdict>> {
    let cert = sylow1(g, k, p)?;
    let family = conjugates(g, k, &cert.subgroup);
    sylow3_div_verdicts(g, k, p, &family)
}

/// `card (syset K p) ≡ 1 (mod p)`: a Sylow subgroup `H` acting on the
/// family by conjugation fixes only itself.
pub fn sylow3_mod_check(g: &Group, k: &ElemSet, p: usize) -> Result<Vec<Verdict>> {
    let cert = sylow1(g, k, p)?;
    let family = conjugates(g, k, &cert.subgroup);
    sylow3_mod_verdicts(g, k, p, &cert.subgroup, &family)
}

/// Both Sylow 3 checks plus the chain check for one certificate.
pub fn sylow3_checks(
    g: &Group,
    k: &ElemSet,
    p: usize,
) -> Result<(SylowCertificate, Vec<ElemSet>, Vec<Verdict>)> {
    let cert = sylow1(g, k, p)?;
    let family = conjugates(g, k, &cert.subgroup);
    let mut out = sylow_chain_check(g, k, &cert)?;
    out.extend(sylow3_div_verdicts(g, k, p, &family)?);
    out.extend(sylow3_mod_verdicts(g, k, p, &cert.subgroup, &family)?);
    Ok((cert, family, out))
}

fn sylow3_div_verdicts(
    g: &Group,
    k: &ElemSet,
    p: usize,
    family: &[ElemSet],
) -> Result<Vec<Verdict>> {
    let count = family.len();
    let conj = action::conjugation_action_on_subsets(g, k, family)?;
    let mut members = LawScan::new();
    for (i, member) in family.iter().enumerate() {
        members.case(is_sylow(g, k, p, member)?, || witness!("member" => i));
    }
    let mut out = vec![
        members.finish("sylow_conjsg"),
        Verdict::equal("sylow_single_orbit", conj.orbit(0).card(), count),
    ];
    out.extend(action::orbit_stabilizer_check(&conj, 0)?);
    out.push(
        Verdict::equal("sylow3_div", k.card() % count, 0usize)
            .witness_on_failure(|| witness!("count" => count, "card_K" => k.card())),
    );
    Ok(out)
}

fn sylow3_mod_verdicts(
    g: &Group,
    k: &ElemSet,
    p: usize,
    h: &ElemSet,
    family: &[ElemSet],
) -> Result<Vec<Verdict>> {
    let count = family.len();
    let own = family
        .iter()
        .position(|l| l == h)
        .ok_or_else(|| invariant("Sylow subgroup missing from its own conjugacy class".into()))?;
    let conj = action::conjugation_action_on_subsets(g, h, family)?;
    let s0 = conj.fixed_points();

    // A fixed L is normalised by H, so H and L are both Sylow in N(L) and
    // hence conjugate there; L being normal in N(L) forces H = L.
    let mut subset = LawScan::new();
    for j in &s0 {
        let l = &family[j];
        let norm = g.normaliser(l, k)?;
        let holds = h.subset(&norm)?
            && dlogn(p, norm.card())? == dlogn(p, k.card())?
            && is_sylow(g, &norm, p, h)?
            && is_sylow(g, &norm, p, l)?;
        subset.case(holds, || witness!("fixed" => j));
    }
    let mut out = vec![
        subset.finish("sylow_subset"),
        Verdict::equal("sylow_S0", s0.to_vec(), vec![own])
            .witness_on_failure(|| witness!("H" => h.to_vec())),
    ];
    out.extend(action::mpl_check(&conj, p)?);
    out.push(
        Verdict::equal("sylow3_mod", count % p, 1usize)
            .witness_on_failure(|| witness!("count" => count, "p" => p)),
    );
    Ok(out)
}
