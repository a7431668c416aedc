//! Functions behind `www/index.html`. Each takes either file text or a
//! reference and returns the text the page shows; errors come back as
//! strings so the same functions run natively in tests.

use shortcat::classify::certify as run_certify;
use shortcat::format::{parse, serialize};
use shortcat::induce::induce_short_skew;
use shortcat::multi::Multi;
use shortcat::mutants::{self, expectation_met, parse_expectation};
use shortcat::structure::{builtin, builtin_names, monoidal, validate as run_validate, Body, Structure};
use shortcat::transport::{k_object, ks_object, roundtrip_check, roundtrip_check_closed};
use shortcat::{Error, Result};
use wasm_bindgen::prelude::*;

/// Keeps the page responsive.
const MAX_OBJECTS: usize = 8;
const MAX_MULTIMAPS: usize = 64;

fn resolve(reference: &str) -> Result<Structure> {
    match reference.strip_prefix("mutant:") {
        Some(id) => Ok(parse(&mutants::find(id)?.text()?, &resolve)?.structure),
        None => builtin(reference),
    }
}

struct Loaded {
    structure: Structure,
    name: String,
    warnings: Vec<String>,
}

fn load(input: &str) -> Result<Loaded> {
    let trimmed = input.trim();
    let (structure, warnings) = if trimmed.starts_with("shortcat-format") {
        let p = parse(input, &resolve)?;
        (p.structure, p.warnings)
    } else {
        (resolve(trimmed)?, Vec::new())
    };
    let (objects, multimaps) = structure.size();
    if objects > MAX_OBJECTS || multimaps > MAX_MULTIMAPS {
        return Err(Error::Precondition(format!(
            "{objects} objects and multimap sets of up to {multimaps} are too large for the page"
        )));
    }
    let name = if trimmed.starts_with("shortcat-format") {
        "input".to_string()
    } else {
        trimmed.replace(':', "-")
    };
    Ok(Loaded { structure, name, warnings })
}

fn with_warnings(warnings: &[String], body: String) -> String {
    let mut out: String = warnings.iter().map(|w| format!("warning: {w}\n")).collect();
    out.push_str(&body);
    out
}

fn short_of(s: &Structure) -> Result<Multi> {
    match &s.body {
        Body::Short { multi, .. } => Ok(multi.clone()),
        Body::SkewMonoidal(c) | Body::Braided(c, _) => Ok(induce_short_skew(c)?.multi.into_inner()),
        _ => Err(Error::Precondition(format!("expected a short or skew monoidal structure, found {}", s.kind()))),
    }
}

/// Newline-separated references the page offers, mutants last.
#[wasm_bindgen]
pub fn references() -> String {
    let mut v = builtin_names();
    v.extend(mutants::mutants().into_iter().map(|m| format!("mutant:{}", m.id)));
    v.join("\n")
}

/// Canonical file text for a reference.
#[wasm_bindgen]
pub fn source(reference: &str) -> std::result::Result<String, String> {
    let r = reference.trim();
    match r.strip_prefix("mutant:") {
        Some(id) => mutants::find(id).and_then(|m| m.text()),
        None => builtin(r).map(|s| serialize(&s)),
    }
    .map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn validate(input: &str) -> std::result::Result<String, String> {
    let l = load(input).map_err(|e| e.to_string())?;
    let mut rep = run_validate(&l.structure, 1).map_err(|e| e.to_string())?;
    rep.subject = format!("{} {}", l.structure.kind(), l.name);
    if let Some((fam, ids)) = l.structure.annotation("expect").and_then(parse_expectation) {
        let met = expectation_met(&rep, &fam, &ids);
        rep.notes.push(format!("expect {fam} {} {}", ids.join(" "), if met { "met" } else { "unmet" }));
    }
    Ok(with_warnings(&l.warnings, rep.render()))
}

/// Classifiers, unit, hom objects and flags; runs the validator first.
#[wasm_bindgen]
pub fn certify(input: &str, witnesses: bool) -> std::result::Result<String, String> {
    let run = || -> Result<String> {
        let l = load(input)?;
        let rep = run_validate(&l.structure, 1)?;
        if !rep.passed() {
            return Ok(with_warnings(&l.warnings, rep.render()));
        }
        let m = short_of(&l.structure)?;
        let cert = run_certify(&m, &l.name)?;
        Ok(with_warnings(&l.warnings, cert.render(&m, witnesses)))
    };
    run().map_err(|e| e.to_string())
}

/// Induce, certify, rebuild and compare up to canonical renaming.
#[wasm_bindgen]
pub fn roundtrip(input: &str) -> std::result::Result<String, String> {
    let run = || -> Result<String> {
        let l = load(input)?;
        let mut rep = match &l.structure.body {
            Body::SkewMonoidal(c) | Body::Braided(c, _) => roundtrip_check(c)?,
            Body::SkewClosed(c) => {
                let partner = l
                    .structure
                    .annotation("partner")
                    .ok_or_else(|| Error::Precondition("a skew closed roundtrip needs an @partner annotation".into()))?;
                roundtrip_check_closed(c, monoidal(&resolve(partner)?)?)?
            }
            Body::Short { multi, .. } => {
                let cert = run_certify(multi, &l.name)?;
                roundtrip_check(&if multi.is_skew() { ks_object(multi, &cert)? } else { k_object(multi, &cert)? })?
            }
            _ => return Err(Error::Precondition(format!("no roundtrip for {}", l.structure.kind()))),
        };
        rep.subject = format!("roundtrip {}", l.name);
        Ok(with_warnings(&l.warnings, rep.render()))
    };
    run().map_err(|e| e.to_string())
}
