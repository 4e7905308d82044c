//! Acceptance run over the builtin catalog. Prints one PASS/FAIL line per
//! criterion and exits non-zero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use grp_core::action::{self, Action};
use grp_core::cayley::{parse_cayley_str, to_cayley_string};
use grp_core::conjnormal::{self, QuotientGroup};
use grp_core::cyclic::{phi, phi_theorem_checks};
use grp_core::group::check_identities;
use grp_core::sylow::{self, cauchy, sylow1, sylow2, syset};
use grp_core::verdict::all_passed;
use grp_core::{arith, oracle, ElemSet, Group, GroupSpec};
use num_integer::Integer;

/// Largest `C(card K, p^n)` for which Sylow subgroups are counted by the
/// plain subset scan; beyond it the p-subgroup closure enumeration is used.
const SUBSET_SCAN_LIMIT: u128 = 2_000_000;

type Outcome = Result<String, String>;

struct Entry {
    spec: GroupSpec,
    group: Group,
    sample: Vec<ElemSet>,
}

fn catalog() -> Vec<Entry> {
    GroupSpec::catalog()
        .into_iter()
        .map(|spec| {
            let group = spec.build().expect("catalog groups build");
            let sample = oracle::generated_subgroups(&group, &group.full_set());
            Entry {
                spec,
                group,
                sample,
            }
        })
        .collect()
}

fn within(limit: Duration, elapsed: Duration, detail: String) -> Outcome {
    if elapsed <= limit {
        Ok(detail)
    } else {
        Err(format!("{detail}; took {elapsed:.2?}, limit {limit:?}"))
    }
}

fn axiom_round_trip(entries: &[Entry]) -> Outcome {
    let start = Instant::now();
    for e in entries {
        let again = parse_cayley_str(&to_cayley_string(&e.group))
            .map_err(|err| format!("{}: re-validation failed: {err}", e.spec))?;
        if again != e.group {
            return Err(format!("{}: table changed on round trip", e.spec));
        }
        let v = check_identities(&again);
        if let Some(bad) = v.iter().find(|c| !c.passed) {
            return Err(format!("{}: {bad}", e.spec));
        }
    }
    within(
        Duration::from_secs(10),
        start.elapsed(),
        format!("{} groups", entries.len()),
    )
}

fn lagrange(entries: &[Entry]) -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for e in entries {
        let g = &e.group;
        let full = g.full_set();
        for h in &e.sample {
            let index = g
                .lindex(h, &full)
                .map_err(|err| format!("{}: {err}", e.spec))?;
            if h.card() * index != g.size() {
                return Err(format!(
                    "{}: H = {h}: {} * {index} != {}",
                    e.spec,
                    h.card(),
                    g.size()
                ));
            }
            cases += 1;
        }
    }
    within(
        Duration::from_secs(60),
        start.elapsed(),
        format!("{cases} subgroups"),
    )
}

fn counting_laws(act: &Action<'_>, h: &ElemSet) -> Result<(), String> {
    let g = act.group();
    for a in 0..act.points() {
        let orbit = act.orbit(a);
        let stab = act.stabiliser(a);
        let index = g.lindex(&stab, h).map_err(|e| e.to_string())?;
        if orbit.card() != index {
            return Err(format!(
                "point {a}: orbit {} vs index {index}",
                orbit.card()
            ));
        }
        if !h.card().is_multiple_of(orbit.card()) {
            return Err(format!(
                "point {a}: orbit {} does not divide {}",
                orbit.card(),
                h.card()
            ));
        }
    }
    if let [p] = arith::prime_divisors(h.card())[..] {
        let (s, s0) = (act.points(), act.fixed_points().card());
        if s % p != s0 % p {
            return Err(format!("{s} points, {s0} fixed, p = {p}"));
        }
    }
    Ok(())
}

fn orbit_stabiliser(entries: &[Entry]) -> Outcome {
    let mut actions = 0;
    for e in entries {
        let g = &e.group;
        let full = g.full_set();
        for h in &e.sample {
            let conj =
                action::conjugation_action(g, h).map_err(|err| format!("{}: {err}", e.spec))?;
            counting_laws(&conj, h).map_err(|m| format!("{} conjugation by {h}: {m}", e.spec))?;
            actions += 1;
            for l in &e.sample {
                let ta = action::left_translation_action(g, h, l, &full)
                    .map_err(|err| format!("{}: {err}", e.spec))?;
                counting_laws(&ta.action, h)
                    .map_err(|m| format!("{} {h} on cosets of {l}: {m}", e.spec))?;
                actions += 1;
            }
        }
    }
    Ok(format!("{actions} actions"))
}

fn cauchy_criterion(entries: &[Entry]) -> Outcome {
    let z6 = GroupSpec::Cyclic(6).build().unwrap();
    let pinned = cauchy(&z6, &z6.full_set(), 3).map_err(|e| e.to_string())?;
    if pinned.element != 2 {
        return Err(format!("Z6, p = 3 returned {}", pinned.element));
    }
    let mut runs = 0;
    for e in entries {
        let g = &e.group;
        let full = g.full_set();
        for p in arith::prime_divisors(g.size()) {
            let w = cauchy(g, &full, p).map_err(|err| format!("{} p = {p}: {err}", e.spec))?;
            let order = oracle::element_order(g, w.element);
            if order != p || oracle::first_element_of_order(g, &full, p).is_none() {
                return Err(format!(
                    "{} p = {p}: element {} has order {order}",
                    e.spec, w.element
                ));
            }
            runs += 1;
        }
    }
    Ok(format!("{runs} runs, Z6/p=3 gives 2"))
}

fn sylow_pairs(entries: &[Entry]) -> Vec<(&Entry, usize)> {
    entries
        .iter()
        .flat_map(|e| {
            arith::prime_divisors(e.group.size())
                .into_iter()
                .map(move |p| (e, p))
        })
        .collect()
}

fn sylow_one(entries: &[Entry]) -> Outcome {
    let mut runs = 0;
    for (e, p) in sylow_pairs(entries) {
        let g = &e.group;
        let full = g.full_set();
        let cert = sylow1(g, &full, p).map_err(|err| format!("{} p = {p}: {err}", e.spec))?;
        let n = arith::dlogn(p, g.size()).unwrap();
        if cert.subgroup.card() != p.pow(n) || cert.chain.len() != n as usize {
            return Err(format!(
                "{} p = {p}: order {}",
                e.spec,
                cert.subgroup.card()
            ));
        }
        for w in cert.chain.windows(2) {
            if w[1].card() != p * w[0].card()
                || !w[0].subset(&w[1]).unwrap()
                || !g.is_normal(&w[0], &w[1])
            {
                return Err(format!("{} p = {p}: bad step {} -> {}", e.spec, w[0], w[1]));
            }
        }
        runs += 1;
    }
    Ok(format!("{runs} (group, prime) pairs"))
}

/// Sylow subgroups by brute force: a subset scan when it is small enough,
/// otherwise closure enumeration of all p-subgroups.
fn oracle_sylow(g: &Group, p: usize) -> (Vec<ElemSet>, &'static str) {
    let full = g.full_set();
    let target = p.pow(arith::dlogn(p, g.size()).unwrap());
    if g.size() <= 64 && oracle::binomial(g.size(), target) <= SUBSET_SCAN_LIMIT {
        (
            oracle::closed_subsets_of_size(g, &full, target),
            "subset scan",
        )
    } else {
        (oracle::sylow_subgroups(g, &full, p), "p-subgroup closure")
    }
}

fn sylow_two(entries: &[Entry]) -> Outcome {
    let mut pairs = 0;
    for (e, p) in sylow_pairs(entries) {
        let g = &e.group;
        let full = g.full_set();
        let family = oracle::sylow_subgroups(g, &full, p);
        for l1 in &family {
            for l2 in &family {
                let x = sylow2(g, &full, p, l2, l1)
                    .map_err(|err| format!("{} p = {p}: {err}", e.spec))?;
                if !full.contains(x) || &g.conjsg(l1, x) != l2 {
                    return Err(format!(
                        "{} p = {p}: {x} does not conjugate {l1} to {l2}",
                        e.spec
                    ));
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} ordered pairs"))
}

fn sylow_three(entries: &[Entry]) -> Outcome {
    let start = Instant::now();
    let mut scans = 0;
    for (e, p) in sylow_pairs(entries) {
        let g = &e.group;
        let full = g.full_set();
        let family = syset(g, &full, p).map_err(|err| format!("{} p = {p}: {err}", e.spec))?;
        let (expected, method) = oracle_sylow(g, p);
        if method == "subset scan" {
            scans += 1;
        }
        if family != expected {
            return Err(format!(
                "{} p = {p}: {} by conjugation, {} by {method}",
                e.spec,
                family.len(),
                expected.len()
            ));
        }
        let count = family.len();
        if g.size() % count != 0 || count % p != 1 {
            return Err(format!("{} p = {p}: count {count}", e.spec));
        }
        if g.is_abelian() && count != 1 {
            return Err(format!(
                "{} p = {p}: abelian with {count} Sylow subgroups",
                e.spec
            ));
        }
        let checks = [
            sylow::sylow3_div_check(g, &full, p),
            sylow::sylow3_mod_check(g, &full, p),
        ];
        for c in checks {
            let v = c.map_err(|err| format!("{} p = {p}: {err}", e.spec))?;
            if let Some(bad) = v.iter().find(|c| !c.passed) {
                return Err(format!("{} p = {p}: {bad}", e.spec));
            }
        }
    }
    for (spec, p, want) in [
        (GroupSpec::Symmetric(4), 2, 3),
        (GroupSpec::Symmetric(4), 3, 4),
        (GroupSpec::Symmetric(3), 2, 3),
    ] {
        let g = spec.build().unwrap();
        let (found, method) = oracle_sylow(&g, p);
        if found.len() != want {
            return Err(format!("{spec} p = {p}: {method} found {}", found.len()));
        }
    }
    within(
        Duration::from_secs(300),
        start.elapsed(),
        format!(
            "{} pairs, {scans} by subset scan, S4/2 = 3, S4/3 = 4, S3/2 = 3",
            sylow_pairs(entries).len()
        ),
    )
}

fn quotients(entries: &[Entry]) -> Outcome {
    let mut built = 0;
    for e in entries {
        let g = &e.group;
        let full = g.full_set();
        for h in e.sample.iter().filter(|h| g.is_normal(h, &full)) {
            let fail = |m: String| format!("{} H = {h}: {m}", e.spec);
            let q = QuotientGroup::new(g, h, &full).map_err(|err| fail(err.to_string()))?;
            if !all_passed(&check_identities(q.group())) {
                return Err(fail("quotient table fails the group laws".into()));
            }
            if q.size() != g.lindex(h, &full).unwrap() {
                return Err(fail(format!("order {}", q.size())));
            }
            let mut v =
                conjnormal::quotient_morphism_check(g, &q).map_err(|err| fail(err.to_string()))?;
            for l1 in oracle::generated_subgroups(q.group(), &q.group().full_set()) {
                v.extend(
                    conjnormal::quotient_preimage_check(g, &q, &l1)
                        .map_err(|err| fail(err.to_string()))?,
                );
            }
            if let Some(bad) = v.iter().find(|c| !c.passed) {
                return Err(fail(bad.to_string()));
            }
            built += 1;
        }
    }
    Ok(format!("{built} quotients"))
}

fn euler_phi() -> Outcome {
    let start = Instant::now();
    for n in 0..=1000usize {
        let expected = (0..n).filter(|x| n.gcd(x) == 1).count();
        if phi(n) != expected {
            return Err(format!("phi({n}) = {}, gcd count {expected}", phi(n)));
        }
    }
    let v = phi_theorem_checks(1000);
    if let Some(bad) = v.iter().find(|c| !c.passed) {
        return Err(bad.to_string());
    }
    within(Duration::from_secs(5), start.elapsed(), "n <= 1000".into())
}

fn strip_timing(report: &str) -> Result<serde_json::Value, String> {
    let mut value: serde_json::Value = serde_json::from_str(report).map_err(|e| e.to_string())?;
    for check in value["checks"].as_array_mut().ok_or("no checks array")? {
        check
            .as_object_mut()
            .ok_or("check is not an object")?
            .remove("elapsed_ms");
    }
    Ok(value)
}

fn determinism() -> Outcome {
    let run = || -> Result<String, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_grp"))
            .args(["verify", "s4", "--json"])
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!("exit status {}", out.status));
        }
        String::from_utf8(out.stdout).map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    if strip_timing(&a)? == strip_timing(&b)? {
        Ok(format!("{} bytes", a.len()))
    } else {
        Err("reports differ".into())
    }
}

fn main() -> ExitCode {
    let entries = catalog();
    let criteria: [(&str, &dyn Fn() -> Outcome); 10] = [
        ("axiom round trip", &|| axiom_round_trip(&entries)),
        ("Lagrange", &|| lagrange(&entries)),
        ("orbit-stabiliser and mpl", &|| orbit_stabiliser(&entries)),
        ("Cauchy", &|| cauchy_criterion(&entries)),
        ("Sylow 1", &|| sylow_one(&entries)),
        ("Sylow 2", &|| sylow_two(&entries)),
        ("Sylow 3", &|| sylow_three(&entries)),
        ("quotient soundness", &|| quotients(&entries)),
        ("Euler phi", &euler_phi),
        ("determinism", &determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail}; {elapsed:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
