//! The theorem suite behind `grp verify`, and the per-command report
//! builders.

use anyhow::{bail, Context, Result};
use grp_core::action::{self, Action};
use grp_core::conjnormal::{self, QuotientGroup};
use grp_core::cyclic;
use grp_core::group::check_identities;
use grp_core::subgroup::{lagrange_check, product_subgroup_check};
use grp_core::sylow::{self, CauchyWitness, SylowCertificate};
use grp_core::{arith, oracle, witness, ElemSet, Group, Verdict, Witness};

use crate::report::{Certificate, Report};

/// Bound used for the Euler phi theorem checks.
pub const PHI_BOUND: usize = 1000;

#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    /// Also cross-check against the brute-force oracles.
    pub oracle: bool,
}

fn members(set: &ElemSet) -> Witness {
    witness!("H" => set.to_vec())
}

fn pair(h: &ElemSet, l: &ElemSet) -> Witness {
    witness!("H" => h.to_vec(), "L" => l.to_vec())
}

/// Every theorem check over the subgroups generated by one or two elements
/// and every prime divisor of the order.
pub fn verify(name: &str, g: &Group, opts: Options) -> Result<Report> {
    let mut report = Report::new(name, g.size());
    let full = g.full_set();

    report.run(Witness::new, || Ok::<_, anyhow::Error>(check_identities(g)))?;
    let sample = oracle::generated_subgroups(g, &full);
    report.note(format!(
        "{} subgroups generated by at most two elements",
        sample.len()
    ));

    for h in &sample {
        report.run(|| members(h), || lagrange_check(g, h, &full))?;
        report.run(|| members(h), || conjnormal::normaliser_check(g, h, &full))?;
    }
    for (i, h) in sample.iter().enumerate() {
        for l in &sample[i..] {
            report.run(|| pair(h, l), || product_subgroup_check(g, h, l))?;
        }
    }

    for h in &sample {
        let conj = action::conjugation_action(g, h)?;
        report.run(|| members(h), || action_checks(&conj, h))?;
        for l in &sample {
            let ta = action::left_translation_action(g, h, l, &full)?;
            report.run(|| pair(h, l), || action_checks(&ta.action, h))?;
        }
    }

    for h in sample.iter().filter(|h| g.is_normal(h, &full)) {
        let q = QuotientGroup::new(g, h, &full)?;
        report.run(|| members(h), || quotient_checks(g, &q, &sample))?;
    }

    report.run(Witness::new, || {
        Ok::<_, anyhow::Error>(cyclic::cyclic_checks(g))
    })?;
    report.run(Witness::new, || {
        Ok::<_, anyhow::Error>(cyclic::phi_theorem_checks(PHI_BOUND))
    })?;

    for p in arith::prime_divisors(g.size()) {
        let w = sylow::cauchy(g, &full, p)?;
        report.add(
            cauchy_verdicts(g, &full, &w, opts),
            0.0,
            || witness!("p" => p),
        );
        report.certificates.push(cauchy_certificate(&w));
        let cert = sylow_section(&mut report, g, &full, p, opts)?;
        report.certificates.push(sylow_certificate(&cert));
    }
    Ok(report)
}

fn action_checks(act: &Action<'_>, h: &ElemSet) -> grp_core::Result<Vec<Verdict>> {
    let mut out = action::orbit_partition_check(act);
    for z in 0..act.points() {
        out.extend(action::orbit_stabilizer_check(act, z)?);
    }
    if let [p] = arith::prime_divisors(h.card())[..] {
        out.extend(action::mpl_check(act, p)?);
    }
    Ok(out)
}

fn quotient_checks(
    g: &Group,
    q: &QuotientGroup,
    sample: &[ElemSet],
) -> grp_core::Result<Vec<Verdict>> {
    let mut out = vec![Verdict::claim(
        "quotient_group_axioms",
        grp_core::verdict::all_passed(&check_identities(q.group())),
    )];
    out.extend(conjnormal::quotient_morphism_check(g, q)?);
    for l in sample
        .iter()
        .filter(|l| q.normal().subset(l).unwrap_or(false))
    {
        out.extend(conjnormal::quotient_image_check(g, q, l)?);
    }
    for l1 in oracle::generated_subgroups(q.group(), &q.group().full_set()) {
        out.extend(conjnormal::quotient_preimage_check(g, q, &l1)?);
    }
    Ok(out)
}

fn cauchy_verdicts(g: &Group, h: &ElemSet, w: &CauchyWitness, opts: Options) -> Vec<Verdict> {
    let p = w.p;
    let mut out = vec![
        Verdict::equal(format!("cauchy[p={p}]"), g.order(w.element), p)
            .witness_on_failure(|| witness!("element" => w.element)),
    ];
    if opts.oracle {
        let scanned = oracle::first_element_of_order(g, h, p);
        out.push(
            Verdict::equal(
                format!("oracle_cauchy[p={p}]"),
                scanned.map_or(-1, |x| x as i64).to_string(),
                w.element.to_string(),
            )
            .witness_on_failure(|| witness!("p" => p)),
        );
    }
    out
}

fn sylow_section(
    report: &mut Report,
    g: &Group,
    k: &ElemSet,
    p: usize,
    opts: Options,
) -> Result<SylowCertificate> {
    let mut found = None;
    report.run(
        || witness!("p" => p),
        || -> Result<Vec<Verdict>> {
            let (cert, family, checks) = sylow::sylow3_checks(g, k, p)?;
            let mut out: Vec<Verdict> = checks.into_iter().map(|v| tag(v, p)).collect();
            let mut conjugators = Verdict::claim(format!("sylow2[p={p}]"), true);
            'outer: for a in &family {
                for b in &family {
                    let x = sylow::sylow2(g, k, p, b, a)?;
                    if &g.conjsg(a, x) != b {
                        conjugators = Verdict::claim(format!("sylow2[p={p}]"), false).with_witness(
                            witness!("L1" => a.to_vec(), "L2" => b.to_vec(), "x" => x),
                        );
                        break 'outer;
                    }
                }
            }
            out.push(conjugators);
            if opts.oracle {
                let expected = oracle::sylow_subgroups(g, k, p);
                out.push(
                    Verdict::equal(format!("oracle_syset[p={p}]"), family.len(), expected.len())
                        .witness_on_failure(|| witness!("p" => p)),
                );
                out.push(Verdict::claim(
                    format!("oracle_syset_members[p={p}]"),
                    family == expected,
                ));
            }
            found = Some(cert);
            Ok(out)
        },
    )?;
    found.context("Sylow construction produced no certificate")
}

fn tag(mut v: Verdict, p: usize) -> Verdict {
    v.name = format!("{}[p={p}]", v.name);
    v
}

pub fn cauchy_certificate(w: &CauchyWitness) -> Certificate {
    Certificate {
        kind: "cauchy",
        p: w.p,
        n: 1,
        elements: vec![w.element],
        trace: w.trace.clone(),
    }
}

pub fn sylow_certificate(cert: &SylowCertificate) -> Certificate {
    Certificate {
        kind: "sylow",
        p: cert.p,
        n: cert.n,
        elements: cert.subgroup.to_vec(),
        trace: cert.trace.clone(),
    }
}

/// Report for `grp sylow`.
pub fn sylow_report(name: &str, g: &Group, p: usize, opts: Options) -> Result<Report> {
    if !arith::is_prime(p) {
        bail!("{p} is not prime");
    }
    let mut report = Report::new(name, g.size());
    let full = g.full_set();
    let cert = sylow_section(&mut report, g, &full, p, opts)?;
    let count = sylow::conjugates(g, &full, &cert.subgroup).len();
    report.note(format!(
        "Sylow {p}-subgroup of size {}: {}",
        cert.subgroup.card(),
        cert.subgroup
    ));
    for (i, h) in cert.chain.iter().enumerate() {
        report.note(format!("  H{} (order {}): {h}", i + 1, h.card()));
    }
    report.note(format!("count {count}"));
    report.note(format!("{count} ≡ {} (mod {p})", count % p));
    report.note(format!("{count} | {}", g.size()));
    report.certificates.push(sylow_certificate(&cert));
    Ok(report)
}

/// Report for `grp cauchy`.
pub fn cauchy_report(name: &str, g: &Group, p: usize, opts: Options) -> Result<Report> {
    let mut report = Report::new(name, g.size());
    let full = g.full_set();
    let w = sylow::cauchy(g, &full, p)?;
    report.note(format!("element {}", w.element));
    report.note(format!("order {}", w.order));
    if w.fallback {
        report.note("H* exceeded the tuple limit; element found by order scan");
    }
    report.add(
        cauchy_verdicts(g, &full, &w, opts),
        0.0,
        || witness!("p" => p),
    );
    report.certificates.push(cauchy_certificate(&w));
    Ok(report)
}

/// Report for `grp quotient`.
pub fn quotient_report(name: &str, g: &Group, gens: &[usize]) -> Result<Report> {
    let h = g.closure(gens);
    let full = g.full_set();
    let q = QuotientGroup::new(g, &h, &full)
        .with_context(|| format!("cannot form the quotient by {h}"))?;
    let mut report = Report::new(name, g.size());
    report.note(format!("normal subgroup {h} (order {})", h.card()));
    report.note(format!("quotient of order {}", q.size()));
    report.note(format!("coset roots {:?}", q.roots()));
    report.note("table:".to_owned());
    for row in q.group().cayley_table() {
        let line: Vec<String> = row.iter().map(usize::to_string).collect();
        report.note(format!("  {}", line.join(" ")));
    }
    let sample = oracle::generated_subgroups(g, &full);
    report.run(|| members(&h), || quotient_checks(g, &q, &sample))?;
    Ok(report)
}

/// The actions understood by `grp orbits`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ActionSpec {
    /// `x ↦ (z ↦ x z x⁻¹)` on elements.
    Conjugation,
    /// `x ↦ (z ↦ x z)` on elements.
    Translation,
    /// Left translation on the left cosets of the subgroup generated by the
    /// listed elements.
    Cosets(Vec<usize>),
}

impl std::str::FromStr for ActionSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.split_once(':') {
            None if s == "conj" || s == "conjugation" => Ok(Self::Conjugation),
            None if s == "left" || s == "translation" => Ok(Self::Translation),
            None if s == "cosets" => Ok(Self::Cosets(Vec::new())),
            Some(("cosets", gens)) => crate::refs::parse_gens(gens).map(Self::Cosets),
            _ => Err(format!(
                "unknown action {s:?}; expected conj, left, or cosets:GENS"
            )),
        }
    }
}

/// Report for `grp orbits`: the orbit partition of `H = <gens>` and the
/// orbit-counting checks.
pub fn orbits_report(name: &str, g: &Group, spec: &ActionSpec, gens: &[usize]) -> Result<Report> {
    let h = g.closure(gens);
    let full = g.full_set();
    let mut report = Report::new(name, g.size());
    report.note(format!("acting subgroup {h} (order {})", h.card()));
    let translation;
    let act = match spec {
        ActionSpec::Conjugation => action::conjugation_action(g, &h)?,
        ActionSpec::Translation => action::translation_action(g, &h)?,
        ActionSpec::Cosets(l_gens) => {
            let l = g.closure(l_gens);
            translation = action::left_translation_action(g, &h, &l, &full)?;
            report.note(format!(
                "points are the cosets of {l} with roots {:?}",
                translation.roots
            ));
            translation.action.clone()
        }
    };
    for (i, orbit) in act.orbits().iter().enumerate() {
        report.note(format!("orbit {i}: {orbit}"));
    }
    report.note(format!("fixed points {}", act.fixed_points()));
    report.run(|| members(&h), || action_checks(&act, &h))?;
    Ok(report)
}
