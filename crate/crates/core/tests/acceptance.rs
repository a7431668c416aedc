//! One line per acceptance criterion; exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use shortcat::catalogue::{self, MONOIDAL};
use shortcat::classify::{
    certify, check_left_universal_binary, check_left_universal_nullary, check_sharp_laws, derived_classifiers,
    find_binary_classifier, find_closed_structure_scoped, find_nullary_classifier, verify_units_left_universal,
    ClosedScope,
};
use shortcat::format::parse;
use shortcat::induce::{induce_short, induce_short_skew};
use shortcat::multi::Multi;
use shortcat::mutants::{expectation_met, mutants, parse_expectation};
use shortcat::skewmon::{check_symmetry, SkewMonCategory};
use shortcat::structure::{builtin, builtin_names, validate, Structure};
use shortcat::transport::{
    biclosed_subst_check, check_representable_iff_monoidal, is_short_symmetry, k_morphism, k_morphism_inverse,
    kcl_object, roundtrip_check, roundtrip_check_closed, s_from_short_braiding, short_braiding_from_s,
    transport_closed, transport_closed_skew, validate_braided_transport_functor, validate_multi_morphism, Ends,
};

type Outcome = Result<String, String>;

fn fail(msg: impl Into<String>) -> Outcome {
    Err(msg.into())
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn plain(c: &SkewMonCategory) -> Result<Multi, String> {
    Ok(induce_short(c).map_err(err)?.into_inner())
}

fn skew(c: &SkewMonCategory) -> Result<Multi, String> {
    Ok(induce_short_skew(c).map_err(err)?.multi.into_inner())
}

fn named(name: &str) -> Result<SkewMonCategory, String> {
    catalogue::skew_monoidal(name).map_err(err)
}

const POSITIVE: [&str; 7] = ["terminal", "z2", "z3", "klein", "poset-skew-second", "poset-skew-first", "heyting-2"];

fn positive_suite() -> Outcome {
    let start = Instant::now();
    let mut instances = 0;
    for name in POSITIVE {
        let mut structures = vec![format!("catalogue:{name}"), format!("category:{name}"), format!("induced:{name}")];
        if !name.starts_with("poset-skew") {
            structures.push(format!("induced-plain:{name}"));
        }
        for r in structures {
            let rep = validate(&builtin(&r).map_err(err)?, 1).map_err(err)?;
            if !rep.passed() || rep.checked() == 0 {
                return fail(format!("{r}: {} checked, verdict {}", rep.checked(), rep.passed()));
            }
            instances += rep.checked();
        }
    }
    let took = start.elapsed();
    if took >= Duration::from_secs(5) {
        return fail(format!("took {took:.2?}"));
    }
    Ok(format!("{instances} instances over {} structures in {took:.2?}", POSITIVE.len()))
}

fn load(text: &str) -> Result<Structure, String> {
    let p = parse(text, &|r| builtin(r)).map_err(err)?;
    if !p.warnings.is_empty() {
        return Err(p.warnings.join("; "));
    }
    Ok(p.structure)
}

fn mutation_kill() -> Outcome {
    let start = Instant::now();
    let all = mutants();
    if all.len() < 50 {
        return fail(format!("only {} mutants", all.len()));
    }
    for m in &all {
        let s = load(&m.text().map_err(err)?).map_err(|e| format!("{}: {e}", m.id))?;
        let rep = validate(&s, 1).map_err(err)?;
        let (fam, ids) = s.annotation("expect").and_then(parse_expectation).ok_or("missing @expect")?;
        if rep.passed() || !expectation_met(&rep, &fam, &ids) {
            return fail(format!("{} survived or failed elsewhere", m.id));
        }
    }
    let names = builtin_names();
    for r in &names {
        if !validate(&builtin(r).map_err(err)?, 1).map_err(err)?.passed() {
            return fail(format!("positive {r} failed"));
        }
    }
    let took = start.elapsed();
    if took >= Duration::from_secs(30) {
        return fail(format!("took {took:.2?}"));
    }
    Ok(format!("{} mutants killed at their annotation, {} positives pass, {took:.2?}", all.len(), names.len()))
}

fn classifier_search() -> Outcome {
    let mut derived = 0;
    for name in ["z2", "heyting-2"] {
        let c = named(name)?;
        for m in [plain(&c)?, skew(&c)?] {
            let n = m.cat().object_count();
            for a in 0..n {
                for b in 0..n {
                    let cl = find_binary_classifier(&m, a, b).ok_or(format!("{name}: no classifier for ({a},{b})"))?;
                    if !check_left_universal_binary(&m, &cl).holds() {
                        return fail(format!("{name}: ({a},{b}) not left universal"));
                    }
                }
            }
            let u = find_nullary_classifier(&m).ok_or(format!("{name}: no nullary classifier"))?;
            if !check_left_universal_nullary(&m, &u).holds() {
                return fail(format!("{name}: unit not left universal"));
            }
            let cert = certify(&m, name).map_err(err)?;
            let recs = derived_classifiers(&m, &cert).map_err(err)?;
            for kind in ["ternary", "quaternary"] {
                if !recs.iter().any(|r| r.kind == kind) {
                    return fail(format!("{name}: no {kind} composites"));
                }
            }
            if let Some(r) = recs.iter().find(|r| !r.bijective || !r.stepwise) {
                return fail(format!("{name}: {} {:?} discrepant", r.kind, r.inputs));
            }
            derived += recs.len();
        }
    }
    Ok(format!("{derived} derived classifiers re-certified, 0 discrepancies"))
}

/// Invertibility of every structure map, read off the category directly.
fn is_monoidal(c: &SkewMonCategory) -> bool {
    let n = c.n();
    (0..n).all(|a| c.cat.is_iso(c.lambda(a)) && c.cat.is_iso(c.rho(a)))
        && c.triples().all(|(a, b, d)| c.cat.is_iso(c.alpha(a, b, d)))
}

fn representable_iff_monoidal() -> Outcome {
    let mut seen = Vec::new();
    for name in MONOIDAL {
        let c = named(name)?;
        let Ok(m) = plain(&c) else { continue };
        let cert = certify(&m, name).map_err(err)?;
        let r = check_representable_iff_monoidal(&m, &cert).map_err(err)?;
        let want = is_monoidal(&c);
        if r.representable != want || r.monoidal != want || !r.report.passed() {
            return fail(format!("{name}: representable {} monoidal {} expected {want}", r.representable, r.monoidal));
        }
        if want && (r.report.checked_in("alpha-inverse") == 0 || r.report.checked_in("rho-inverse") == 0) {
            return fail(format!("{name}: inverse laws not enumerated"));
        }
        seen.push(format!("{name} {}", if want { "yes" } else { "no" }));
    }
    for (name, want) in [("z2", "yes"), ("klein", "yes"), ("poset-skew-second", "no")] {
        if !seen.contains(&format!("{name} {want}")) {
            return fail(format!("{name} missing or not {want}"));
        }
    }
    Ok(seen.join(", "))
}

fn closedness_transfer() -> Outcome {
    let mut evals = 0;
    let mut entries = 0;
    for name in MONOIDAL {
        let c = named(name)?;
        let mut builds = vec![skew(&c)?];
        if let Ok(p) = plain(&c) {
            builds.push(p);
        }
        for m in builds {
            let cert = certify(&m, name).map_err(err)?;
            let t = if m.is_skew() { transport_closed_skew(&m, &cert) } else { transport_closed(&m, &cert) }.map_err(err)?;
            let searched = find_closed_structure_scoped(&m, ClosedScope::Full).is_some();
            if t.category_closed != searched || t.multi_closed != searched {
                return fail(format!("{name}: search {searched}, transported {}", t.category_closed));
            }
            if let Some(d) = t.derived.iter().find(|d| !d.certifies || !d.matches) {
                return fail(format!("{name}: derived evaluation for ({}, {}) differs", d.b, d.c));
            }
            evals += t.derived.len();
            entries += 1;
        }
    }
    Ok(format!("{entries} structures agree, {evals} derived evaluations match"))
}

fn equivalence_roundtrips() -> Outcome {
    for name in MONOIDAL {
        let r = roundtrip_check(&named(name)?).map_err(err)?;
        if !r.passed() {
            return fail(format!("{name} does not roundtrip"));
        }
    }
    let h = catalogue::heyting2();
    let m = skew(&h)?;
    let cert = certify(&m, "heyting-2").map_err(err)?;
    let k = kcl_object(&m, &cert).map_err(err)?;
    if !roundtrip_check_closed(&k, &h).map_err(err)?.passed() || k != catalogue::heyting2_closed() {
        return fail("heyting-2 closed roundtrip");
    }
    let mut identities = 0;
    for cm in catalogue::morphisms() {
        let (src, tgt) = (named(&cm.source)?, named(&cm.target)?);
        let (m, d) = (skew(&src)?, skew(&tgt)?);
        let (mc, dc) = (certify(&m, &cm.source).map_err(err)?, certify(&d, &cm.target).map_err(err)?);
        let e = Ends { src: &m, src_cert: &mc, tgt: &d, tgt_cert: &dc };
        let f = k_morphism_inverse(&e, &cm.functor).map_err(err)?;
        if !validate_multi_morphism(&m, &d, &f).map_err(err)?.passed() {
            return fail(format!("{}: transported morphism invalid", cm.name));
        }
        let back = k_morphism(&e, &f).map_err(err)?;
        if back != cm.functor || k_morphism_inverse(&e, &back).map_err(err)? != f {
            return fail(format!("{}: roundtrip is not the identity", cm.name));
        }
        identities += 1;
    }
    if identities < 10 {
        return fail(format!("only {identities} morphisms"));
    }
    Ok(format!("{} structures, heyting-2 closed, {identities} morphisms", MONOIDAL.len()))
}

fn braided_name(monoidal: &str) -> Option<&'static str> {
    Some(match monoidal {
        "terminal" => "terminal-sym",
        "z2" => "z2-sym",
        "klein" => "klein-four-sym",
        "deloop-z2" => "deloop-z2-sym",
        "deloop-z3" => "deloop-z3-sym",
        _ => return None,
    })
}

fn braiding_bijection() -> Outcome {
    for name in ["z2-sym", "klein-four-sym"] {
        let (c, s) = catalogue::braided(name).map_err(err)?;
        let m = skew(&c)?;
        let cert = certify(&m, name).map_err(err)?;
        let beta = short_braiding_from_s(&m, &cert, &s).map_err(err)?;
        let back = s_from_short_braiding(&m, &cert, &beta).map_err(err)?;
        if back != s || short_braiding_from_s(&m, &cert, &back).map_err(err)? != beta {
            return fail(format!("{name}: not mutually inverse"));
        }
        if is_short_symmetry(&m, &beta) != check_symmetry(&c, &s) {
            return fail(format!("{name}: symmetry flag changed"));
        }
    }
    let mut morphisms = 0;
    for cm in catalogue::morphisms() {
        let (Some(bs), Some(bt)) = (braided_name(&cm.source), braided_name(&cm.target)) else { continue };
        let ((c, s), (dc, ds)) = (catalogue::braided(bs).map_err(err)?, catalogue::braided(bt).map_err(err)?);
        let (m, d) = (skew(&c)?, skew(&dc)?);
        let (mc, dcert) = (certify(&m, bs).map_err(err)?, certify(&d, bt).map_err(err)?);
        let (beta_s, beta_t) = (
            short_braiding_from_s(&m, &mc, &s).map_err(err)?,
            short_braiding_from_s(&d, &dcert, &ds).map_err(err)?,
        );
        let e = Ends { src: &m, src_cert: &mc, tgt: &d, tgt_cert: &dcert };
        let f = k_morphism_inverse(&e, &cm.functor).map_err(err)?;
        let r = validate_braided_transport_functor(&e, &f, &beta_s, &beta_t).map_err(|x| format!("{}: {x}", cm.name))?;
        let b32 = r.failures_in("preserve-b32").next().is_none();
        let b4 = r.failures_in("preserve-b42").next().is_none() && r.failures_in("preserve-b43").next().is_none();
        if b32 && !b4 {
            return fail(format!("{}: 3-ary preserved, 4-ary not", cm.name));
        }
        if b32 && r.checked_in("braided-functor") == 0 {
            return fail(format!("{}: braided-functor equation not checked", cm.name));
        }
        morphisms += 1;
    }
    Ok(format!("z2-sym, klein-four-sym inverse; {morphisms} braided morphisms consistent"))
}

fn sharp_laws() -> Outcome {
    let mut total = 0;
    for name in ["heyting-2", "z2"] {
        let c = named(name)?;
        for m in [plain(&c)?, skew(&c)?] {
            let r = check_sharp_laws(&m).map_err(err)?;
            for fam in ["sharp-nullary", "sharp-subst", "sharp-hom"] {
                if r.checked_in(fam) == 0 {
                    return fail(format!("{name}: {fam} empty"));
                }
            }
            if !r.passed() {
                return fail(format!("{name}: {}", r.render()));
            }
            let u = verify_units_left_universal(&m).map_err(err)?;
            if !(u.direct && u.chained) || u.instances == 0 {
                return fail(format!("{name}: unit not left universal"));
            }
            total += r.checked();
        }
    }
    Ok(format!("{total} instances of the three laws, units left universal"))
}

fn biclosed_oracle() -> Outcome {
    let mut pairs = 0;
    for name in ["z2", "heyting-2"] {
        let r = biclosed_subst_check(&plain(&named(name)?)?).map_err(err)?;
        let (first, second) = (r.checked_in("biclosed-first"), r.checked_in("biclosed-second"));
        if first == 0 || second == 0 || !r.passed() {
            return fail(format!("{name}: {first}/{second} checked, verdict {}", r.passed()));
        }
        pairs += first + second;
    }
    Ok(format!("{pairs} of {pairs} binary pairs agree"))
}

fn determinism() -> Outcome {
    let mut suite: Vec<Structure> = builtin_names().iter().map(|r| builtin(r)).collect::<Result<_, _>>().map_err(err)?;
    for m in mutants() {
        suite.push(load(&m.text().map_err(err)?)?);
    }
    let render = |jobs: usize| -> Result<String, String> {
        suite.iter().map(|s| validate(s, jobs).map(|r| r.render())).collect::<Result<String, _>>().map_err(err)
    };
    let one = render(1)?;
    for jobs in [2, 4, 8] {
        if render(jobs)? != one {
            return fail(format!("--jobs {jobs} differs from --jobs 1"));
        }
    }
    Ok(format!("{} reports, {} bytes, identical for 1, 2, 4, 8 workers", suite.len(), one.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("positive suite", positive_suite),
        ("mutation kill", mutation_kill),
        ("classifier search", classifier_search),
        ("representable iff monoidal", representable_iff_monoidal),
        ("closedness transfer", closedness_transfer),
        ("equivalence roundtrips", equivalence_roundtrips),
        ("braiding bijection", braiding_bijection),
        ("sharp laws", sharp_laws),
        ("biclosed oracle", biclosed_oracle),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} pass  {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", k + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
