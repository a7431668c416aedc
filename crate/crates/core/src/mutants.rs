//! Single-entry mutants of catalogue files, each with the axiom instance it
//! must fail.
//!
//! A mutant is the canonical file of a catalogue structure with one table
//! value replaced. It carries two annotations:
//!
//! ```text
//! @provenance mutant of <reference>: [<section>] <key> = <old> -> <new>
//! @expect <family> <id>*
//! ```
//!
//! The expectation holds when the report has a failure in `<family>` whose
//! identifiers contain the listed ones.

use crate::error::{Error, Result};
use crate::fincat::FinCategory;
use crate::format::{serialize, Document};
use crate::multi::{Flavour, MapId, Multi};
use crate::report::Report;
use crate::structure::{builtin, short, Body};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mutant {
    pub id: String,
    pub base: String,
    pub section: String,
    pub key: Vec<String>,
    pub value: Vec<String>,
    pub family: String,
    pub ids: Vec<String>,
}

fn strs(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

impl Mutant {
    pub fn document(&self) -> Result<Document> {
        let base = builtin(&self.base)?;
        let mut doc = Document::parse(&serialize(&base))?;
        let old = doc
            .section(&self.section)
            .and_then(|s| s.entries.iter().find(|e| e.key == self.key))
            .and_then(|e| e.value.clone())
            .ok_or_else(|| Error::Precondition(format!("{}: no entry to mutate", self.id)))?;
        if old == self.value {
            return Err(Error::Precondition(format!("{}: mutation is the identity", self.id)));
        }
        doc.set(&self.section, &self.key, self.value.clone())?;
        doc.annotations.push((
            "provenance".into(),
            format!(
                "mutant of {}: [{}] {} = {} -> {}",
                self.base,
                self.section,
                self.key.join(" "),
                old.join(" "),
                self.value.join(" ")
            ),
        ));
        let mut expect = vec![self.family.clone()];
        expect.extend(self.ids.iter().cloned());
        doc.annotations.push(("expect".into(), expect.join(" ")));
        Ok(doc)
    }

    pub fn text(&self) -> Result<String> {
        Ok(self.document()?.render())
    }
}

/// `(family, ids)` from an `@expect` annotation value.
pub fn parse_expectation(value: &str) -> Option<(String, Vec<String>)> {
    let mut it = value.split_whitespace();
    let fam = it.next()?.to_string();
    Some((fam, it.map(|s| s.to_string()).collect()))
}

/// True when some failure of `family` mentions every id.
pub fn expectation_met(report: &Report, family: &str, ids: &[String]) -> bool {
    report.failures_in(family).any(|f| f.mentions(ids))
}

struct Out {
    list: Vec<Mutant>,
}

impl Out {
    fn add(&mut self, base: &str, section: &str, key: Vec<String>, value: Vec<String>, family: &str, ids: Vec<String>) {
        let n = self.list.iter().filter(|m| m.base == base && m.section == section).count();
        let short = base.split_once(':').map_or(base, |(s, n)| if s == "catalogue" { n } else { base }).replace(':', "-");
        self.list.push(Mutant {
            id: format!("{short}.{section}.{n}"),
            base: base.into(),
            section: section.into(),
            key,
            value,
            family: family.into(),
            ids,
        });
    }
}

/// The powers of a one-object group other than `skip`, in name order.
fn others(c: &FinCategory, skip: &str) -> Vec<String> {
    c.morphisms().map(|m| c.mor_name(m).to_string()).filter(|n| n != skip).collect()
}

/// Another map with the same shape, domain and codomain.
fn sibling(m: &Multi, f: MapId) -> Option<MapId> {
    let set = m.set(m.flavour(f), m.dom(f), m.cod(f));
    let k = set.iter().position(|&g| g == f)?;
    (set.len() > 1).then(|| set[(k + 1) % set.len()])
}

fn category_mutants(out: &mut Out) {
    for k in ["deloop-z2", "deloop-z3"] {
        let base = format!("category:{k}");
        let s = builtin(&base).expect("catalogue");
        let Body::Category(c) = &s.body else { unreachable!() };
        for g in others(c, "e") {
            let wrong = others(c, &g)[0].clone();
            out.add(&base, "compose", strs(&[&g, "e"]), vec![wrong.clone()], "cat-identity", strs(&[&g, "e"]));
            out.add(&base, "compose", strs(&["e", &g]), vec![wrong], "cat-identity", strs(&["e", &g]));
        }
    }
    let base = "category:heyting-2";
    out.add(base, "compose", strs(&["le", "id0"]), strs(&["id0"]), "cat-typing", strs(&["le", "id0"]));
    out.add(base, "compose", strs(&["id1", "le"]), strs(&["id1"]), "cat-typing", strs(&["id1", "le"]));
}

fn monoidal_mutants(out: &mut Out) {
    for (k, x) in [("deloop-z2", "x"), ("deloop-z3", "y")] {
        let base = format!("catalogue:{k}");
        out.add(&base, "alpha", strs(&["*", "*", "*"]), strs(&[x]), "pentagon", strs(&["*", "*", "*", "*"]));
        out.add(&base, "lambda", strs(&["*"]), strs(&[x]), "unit-ii", strs(&["*"]));
        out.add(&base, "rho", strs(&["*"]), strs(&[x]), "unit-ii", strs(&["*"]));
        out.add(&base, "tensor-morphisms", strs(&["e", "e"]), strs(&[x]), "tensor-functor", strs(&["*", "*"]));
    }
    let typing = [
        ("catalogue:heyting-2", "alpha", &["0", "1", "1"][..], "le", "alpha"),
        ("catalogue:poset-skew-second", "lambda", &["0"][..], "le", "lambda"),
        ("catalogue:poset-skew-first", "rho", &["1"][..], "le", "rho"),
        ("catalogue:klein", "rho", &["a"][..], "idb", "rho"),
    ];
    for (base, sec, key, val, tag) in typing {
        let mut ids = vec![tag.to_string()];
        ids.extend(strs(key));
        out.add(base, sec, strs(key), strs(&[val]), "struct-typing", ids);
    }
    out.add("catalogue:z3", "tensor", strs(&["1", "2"]), strs(&["1"]), "tensor-typing", strs(&["id1", "id2"]));
}

fn braiding_mutants(out: &mut Out) {
    out.add("catalogue:klein-four-sym", "braiding", strs(&["a", "b", "c"]), strs(&["ida"]), "braid-typing", strs(&["a", "b", "c"]));
    out.add("catalogue:z2-sym", "braiding-inverse", strs(&["0", "1", "1"]), strs(&["id1"]), "braid-typing", strs(&["0", "1", "1"]));
    out.add("catalogue:deloop-z2-sym", "braiding", strs(&["*", "*", "*"]), strs(&["x"]), "braid-inverse", strs(&["*", "*", "*"]));
    out.add("catalogue:deloop-z3-sym", "braiding", strs(&["*", "*", "*"]), strs(&["x"]), "braid-inverse", strs(&["*", "*", "*"]));
    out.add("catalogue:deloop-z3-sym", "braiding-inverse", strs(&["*", "*", "*"]), strs(&["y"]), "braid-inverse", strs(&["*", "*", "*"]));
}

fn closed_mutants(out: &mut Out) {
    for (k, x) in [("deloop-z2-closed", "x"), ("deloop-z3-closed", "y")] {
        let base = format!("catalogue:{k}");
        out.add(&base, "I", strs(&["*"]), strs(&[x]), "ij-unit", strs(&["*"]));
        out.add(&base, "J", strs(&["*"]), strs(&[x]), "ij-unit", strs(&["*"]));
        out.add(&base, "L", strs(&["*", "*", "*"]), strs(&[x]), "lj-triangle", strs(&["*", "*"]));
        out.add(&base, "hom-morphisms", strs(&["e", "e"]), strs(&[x]), "hom-functor", strs(&["*", "*"]));
    }
    let base = "catalogue:heyting-2-closed";
    out.add(base, "I", strs(&["0"]), strs(&["le"]), "struct-typing", strs(&["I", "0"]));
    out.add(base, "L", strs(&["0", "0", "0"]), strs(&["id0"]), "struct-typing", strs(&["L", "0", "0", "0"]));
}

fn lax_mutants(out: &mut Out) {
    for (k, x) in [("deloop-z2", "x"), ("deloop-z3", "y")] {
        let base = format!("morphism:id-{k}");
        out.add(&base, "f0", strs(&["f0"]), strs(&[x]), "lax-left-unit", strs(&["*"]));
        out.add(&base, "f2", strs(&["*", "*"]), strs(&[x]), "lax-left-unit", strs(&["*"]));
    }
    out.add("morphism:z2-to-klein-a", "f2", strs(&["0", "1"]), strs(&["ide"]), "lax-typing", strs(&["f2", "0", "1"]));
}

/// Table mutants of an induced short structure on a one-object group.
fn short_mutants(out: &mut Out, base: &str, per_table: usize) {
    let s = builtin(base).expect("catalogue");
    let m = short(&s).expect("short structure");
    let c = m.cat();
    let e = c.id(0);
    let x = c.morphisms().find(|&p| p != e).expect("non-trivial group");
    let n = |f: MapId| m.name(f).to_string();
    let binaries: Vec<MapId> = m.maps_of((Flavour::Tight, 2)).to_vec();
    for &g in binaries.iter().take(per_table) {
        for i in 1..=2 {
            let w = sibling(m, g).expect("group-sized sets");
            out.add(base, "pre", vec![n(g), i.to_string(), c.mor_name(e).into()], vec![n(w)], "identity", vec![n(g), format!("@{i}")]);
        }
        let w = sibling(m, g).expect("group-sized sets");
        out.add(base, "post", vec![c.mor_name(e).into(), n(g)], vec![n(w)], "identity", vec![n(g), "@0".into()]);
    }
    for (&(g, _, f), &r) in m.subst_entries().iter().filter(|((g, i, f), _)| {
        *i == 1 && binaries.contains(g) && binaries.contains(f)
    }).take(per_table) {
        let w = sibling(m, r).expect("group-sized sets");
        out.add(base, "subst", vec![n(g), "1".into(), n(f)], vec![n(w)], "nat-in-c", vec![c.mor_name(x).into(), n(g), "@1".into(), n(f)]);
    }
    if m.is_skew() {
        for &g in binaries.iter().take(per_table) {
            let jg = m.jmap(g).expect("j is total");
            let w = sibling(m, jg).expect("group-sized sets");
            out.add(base, "j", vec![n(g)], vec![n(w)], "j-derived-g", vec![n(g)]);
        }
        let jx = m.jmap(x).expect("j is total");
        let w = sibling(m, jx).expect("group-sized sets");
        out.add(base, "j", vec![c.mor_name(x).into()], vec![n(w)], "j-derived-q", vec![c.mor_name(x).into()]);
    }
    if let Body::Short { braiding: Some(b), .. } = &s.body {
        for (&f, &r) in b.b32.iter().take(per_table) {
            let w = sibling(m, r).expect("group-sized sets");
            out.add(base, "beta32", vec![n(f)], vec![n(w)], "braid-nat", vec!["b32".into(), n(f), "@1".into(), c.mor_name(x).into()]);
        }
    }
}

fn morphism_mutants(out: &mut Out, base: &str, count: usize) {
    let s = builtin(base).expect("catalogue");
    let Body::Morphism(e) = &s.body else { unreachable!() };
    let m = short(&e.source.structure).expect("short source");
    let t = short(&e.target.structure).expect("short target");
    let c = m.cat();
    let x = c.morphisms().find(|&p| !c.is_id(p)).expect("non-trivial group");
    for &g in m.maps_of((Flavour::Tight, 2)).iter().take(count) {
        let w = sibling(t, e.map.apply(g)).expect("group-sized sets");
        out.add(
            base,
            "maps-map",
            vec![m.name(g).into()],
            vec![t.name(w).into()],
            "mm-pre",
            vec![m.name(g).into(), "@1".into(), c.mor_name(x).into()],
        );
    }
}

/// The full mutant catalogue, in a fixed order.
pub fn mutants() -> Vec<Mutant> {
    let mut out = Out { list: Vec::new() };
    category_mutants(&mut out);
    monoidal_mutants(&mut out);
    braiding_mutants(&mut out);
    closed_mutants(&mut out);
    lax_mutants(&mut out);
    short_mutants(&mut out, "induced-plain:deloop-z2", 2);
    short_mutants(&mut out, "induced-plain:deloop-z3", 2);
    short_mutants(&mut out, "induced:deloop-z2", 2);
    short_mutants(&mut out, "induced:deloop-z3-sym", 2);
    morphism_mutants(&mut out, "multi-morphism:id-deloop-z2", 2);
    morphism_mutants(&mut out, "multi-morphism:id-deloop-z3", 1);
    out.list
}

pub fn find(id: &str) -> Result<Mutant> {
    mutants()
        .into_iter()
        .find(|m| m.id == id)
        .ok_or_else(|| Error::UnknownGenerator(format!("mutant:{id}")))
}
