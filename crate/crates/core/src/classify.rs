//! Search and certification of universal multimaps: binary and nullary
//! classifiers, left universality, representability, hom objects.
//!
//! Every bijection is verified by enumeration and recorded as a table, so
//! the witnesses double as inverse tables downstream.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::fincat::{Mor, Obj};
use crate::multi::{Flavour, Loose, MapId, Multi, Tight};

/// A verified bijection `source -> target`, as pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub label: String,
    pub pairs: Vec<(MapId, MapId)>,
}

/// `f` restricted to `domain` if it is a bijection onto `target`.
pub fn bijection(domain: &[MapId], target: &[MapId], f: impl Fn(MapId) -> Option<MapId>) -> Option<Vec<(MapId, MapId)>> {
    if domain.len() != target.len() {
        return None;
    }
    let mut hit = vec![false; target.len()];
    let mut pairs = Vec::with_capacity(domain.len());
    for &x in domain {
        let y = f(x)?;
        let k = target.iter().position(|&t| t == y)?;
        if hit[k] {
            return None;
        }
        hit[k] = true;
        pairs.push((x, y));
    }
    Some(pairs)
}

/// Flavour of the maps a nullary classifier or loose closedness talks about:
/// loose in the skew case, anything in the plain one.
pub fn loose_side(m: &Multi) -> Flavour {
    if m.is_skew() {
        Loose
    } else {
        Tight
    }
}

pub(crate) fn tuples(n: usize, len: usize) -> Vec<Vec<Obj>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |o| {
                    let mut t = t.clone();
                    t.push(o);
                    t
                })
            })
            .collect();
    }
    out
}

fn cat_list(a: &[Obj], b: &[Obj]) -> Vec<Obj> {
    let mut v = a.to_vec();
    v.extend_from_slice(b);
    v
}

fn onames(m: &Multi, objs: &[Obj]) -> String {
    let v: Vec<&str> = objs.iter().map(|&o| m.cat().obj_name(o)).collect();
    v.join(",")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryClassifier {
    pub a: Obj,
    pub b: Obj,
    pub obj: Obj,
    pub theta: MapId,
    pub witnesses: Vec<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullaryClassifier {
    pub obj: Obj,
    pub u: MapId,
    pub witnesses: Vec<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomObject {
    pub b: Obj,
    pub c: Obj,
    pub obj: Obj,
    pub e: MapId,
    pub witnesses: Vec<Witness>,
}

fn binary_witness(m: &Multi, a: Obj, b: Obj, x: Obj, theta: MapId) -> Option<Vec<Witness>> {
    let cat = m.cat();
    cat.objects()
        .map(|c| {
            let pairs = bijection(cat.hom(x, c), m.set(Tight, &[a, b], c), |q| m.sub(q, 1, theta))?;
            Some(Witness {
                label: format!("-o{} ({};{})", m.name(theta), cat.obj_name(x), cat.obj_name(c)),
                pairs,
            })
        })
        .collect()
}

/// Every binary classifier for `(a, b)`, in canonical order.
pub fn find_binary_classifiers(m: &Multi, a: Obj, b: Obj) -> Vec<BinaryClassifier> {
    let mut out = Vec::new();
    for x in m.cat().objects() {
        for &theta in m.set(Tight, &[a, b], x) {
            if let Some(witnesses) = binary_witness(m, a, b, x, theta) {
                out.push(BinaryClassifier { a, b, obj: x, theta, witnesses });
            }
        }
    }
    out
}

pub fn find_binary_classifier(m: &Multi, a: Obj, b: Obj) -> Option<BinaryClassifier> {
    find_binary_classifiers(m, a, b).into_iter().next()
}

fn nullary_witness(m: &Multi, x: Obj, u: MapId) -> Option<Vec<Witness>> {
    let cat = m.cat();
    cat.objects()
        .map(|c| {
            let pairs = bijection(cat.hom(x, c), m.set(Loose, &[], c), |q| m.sub(q, 1, u))?;
            Some(Witness {
                label: format!("-o{} (;{})", m.name(u), cat.obj_name(c)),
                pairs,
            })
        })
        .collect()
}

pub fn find_nullary_classifiers(m: &Multi) -> Vec<NullaryClassifier> {
    let mut out = Vec::new();
    for x in m.cat().objects() {
        for &u in m.set(Loose, &[], x) {
            if let Some(witnesses) = nullary_witness(m, x, u) {
                out.push(NullaryClassifier { obj: x, u, witnesses });
            }
        }
    }
    out
}

pub fn find_nullary_classifier(m: &Multi) -> Option<NullaryClassifier> {
    find_nullary_classifiers(m).into_iter().next()
}

/// Outcome of a universality check: extra witnesses, or the failing sets.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Universality {
    pub witnesses: Vec<Witness>,
    pub failures: Vec<String>,
}

impl Universality {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }

    fn add(&mut self, label: String, r: Option<Vec<(MapId, MapId)>>) {
        match r {
            Some(pairs) => self.witnesses.push(Witness { label, pairs }),
            None => self.failures.push(label),
        }
    }
}

/// `- o1 theta` on `(ab, xs; d) -> (a, b, xs; d)` for tails of length 1 and 2.
pub fn check_left_universal_binary(m: &Multi, cl: &BinaryClassifier) -> Universality {
    let mut u = Universality::default();
    let n = m.cat().object_count();
    for len in 1..=2 {
        for xs in tuples(n, len) {
            for d in 0..n {
                let src = m.set(Tight, &cat_list(&[cl.obj], &xs), d);
                let tgt = m.set(Tight, &cat_list(&[cl.a, cl.b], &xs), d);
                let label = format!("-o1 {} ({};{})", m.name(cl.theta), onames(m, &xs), m.cat().obj_name(d));
                u.add(label, bijection(src, tgt, |g| m.sub(g, 1, cl.theta)));
            }
        }
    }
    u
}

/// `- o1 u` on `(i, xs; d) -> (xs; d)` for tails of length 1 and 2.
pub fn check_left_universal_nullary(m: &Multi, cl: &NullaryClassifier) -> Universality {
    let mut u = Universality::default();
    let n = m.cat().object_count();
    for len in 1..=2 {
        for xs in tuples(n, len) {
            for d in 0..n {
                let src = m.set(Tight, &cat_list(&[cl.obj], &xs), d);
                let tgt = m.set(loose_side(m), &xs, d);
                let label = format!("-o1 {} ({};{})", m.name(cl.u), onames(m, &xs), m.cat().obj_name(d));
                u.add(label, bijection(src, tgt, |g| m.sub(g, 1, cl.u)));
            }
        }
    }
    u
}

/// Which arities the closedness bijections are required at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedScope {
    /// As defined: plain `n = 0..3`; skew tight `n = 1..3` and loose `n = 0, 1`.
    Full,
    /// Same without the clauses about nullary maps.
    Positive,
}

fn hom_witness(m: &Multi, b: Obj, c: Obj, x: Obj, e: MapId, scope: ClosedScope) -> Option<Vec<Witness>> {
    let n = m.cat().object_count();
    let lo = if scope == ClosedScope::Full { 0 } else { 1 };
    let mut ranges: Vec<(Flavour, usize, usize)> = Vec::new();
    if m.is_skew() {
        ranges.push((Tight, 1, 3));
        ranges.push((Loose, lo, 1));
    } else {
        ranges.push((Tight, lo, 3));
    }
    let mut out = Vec::new();
    for (fl, from, to) in ranges {
        for len in from..=to {
            for xs in tuples(n, len) {
                let src = m.set(fl, &xs, x);
                let tgt = m.set(fl, &cat_list(&xs, &[b]), c);
                let pairs = bijection(src, tgt, |h| m.sub(e, 1, h))?;
                out.push(Witness {
                    label: format!("{}o1- {}({};{})", m.name(e), fl.letter(), onames(m, &xs), m.cat().obj_name(x)),
                    pairs,
                });
            }
        }
    }
    Some(out)
}

/// Does `e: x, b -> c` exhibit `x` as a hom object `[b, c]`?
pub fn certify_hom(m: &Multi, b: Obj, c: Obj, x: Obj, e: MapId, scope: ClosedScope) -> bool {
    hom_witness(m, b, c, x, e, scope).is_some()
}

pub fn find_hom_object_scoped(m: &Multi, b: Obj, c: Obj, scope: ClosedScope) -> Option<HomObject> {
    for x in m.cat().objects() {
        for &e in m.set(Tight, &[x, b], c) {
            if let Some(witnesses) = hom_witness(m, b, c, x, e, scope) {
                return Some(HomObject { b, c, obj: x, e, witnesses });
            }
        }
    }
    None
}

pub fn find_hom_object(m: &Multi, b: Obj, c: Obj) -> Option<HomObject> {
    find_hom_object_scoped(m, b, c, ClosedScope::Full)
}

/// Hom objects for every pair, or `None` at the first pair without one.
pub fn find_closed_structure_scoped(m: &Multi, scope: ClosedScope) -> Option<Vec<HomObject>> {
    let n = m.cat().object_count();
    (0..n * n).map(|k| find_hom_object_scoped(m, k / n, k % n, scope)).collect()
}

pub fn find_closed_structure(m: &Multi) -> Option<Vec<HomObject>> {
    find_closed_structure_scoped(m, ClosedScope::Full)
}

/// Right hom object: `e: b, r -> c` with `e o2 -` bijective for `n = 0..3`.
pub fn find_right_hom_object(m: &Multi, b: Obj, c: Obj) -> Option<HomObject> {
    let n = m.cat().object_count();
    for x in m.cat().objects() {
        'cand: for &e in m.set(Tight, &[b, x], c) {
            let mut witnesses = Vec::new();
            for len in 0..=3 {
                for xs in tuples(n, len) {
                    let src = m.set(Tight, &xs, x);
                    let tgt = m.set(Tight, &cat_list(&[b], &xs), c);
                    match bijection(src, tgt, |h| m.sub(e, 2, h)) {
                        Some(pairs) => witnesses.push(Witness {
                            label: format!("{}o2- ({};{})", m.name(e), onames(m, &xs), m.cat().obj_name(x)),
                            pairs,
                        }),
                        None => continue 'cand,
                    }
                }
            }
            return Some(HomObject { b, c, obj: x, e, witnesses });
        }
    }
    None
}

pub fn find_right_closed_structure(m: &Multi) -> Option<Vec<HomObject>> {
    if m.is_skew() {
        return None;
    }
    let n = m.cat().object_count();
    (0..n * n).map(|k| find_right_hom_object(m, k / n, k % n)).collect()
}

/// A composite classifier re-certified by enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedRecord {
    pub kind: String,
    pub inputs: Vec<Obj>,
    pub obj: Obj,
    pub map: MapId,
    /// `- o map` is a bijection onto every target set.
    pub bijective: bool,
    /// `q o map` agrees with the stepwise composite of recorded bijections.
    pub stepwise: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub subject: String,
    pub skew: bool,
    pub objects: usize,
    /// Indexed by `a * n + b`.
    pub binary: Vec<Option<BinaryClassifier>>,
    /// Extra candidates found per pair beyond the first.
    pub extra_candidates: usize,
    pub nullary: Option<NullaryClassifier>,
    pub binary_left_universal: bool,
    pub nullary_left_universal: bool,
    pub weakly_representable: bool,
    pub left_representable: bool,
    /// Only defined for plain structures.
    pub representable: Option<bool>,
    pub homs: Option<Vec<HomObject>>,
    pub derived: Vec<DerivedRecord>,
    pub universality: Vec<Witness>,
    pub failures: Vec<String>,
}

impl Certificate {
    pub fn closed(&self) -> bool {
        self.homs.is_some()
    }

    pub fn closed_with_units(&self) -> bool {
        self.closed() && self.nullary.is_some()
    }

    pub fn classifier(&self, a: Obj, b: Obj) -> Option<&BinaryClassifier> {
        self.binary[a * self.objects + b].as_ref()
    }

    pub fn tensor(&self, a: Obj, b: Obj) -> Obj {
        self.classifier(a, b).expect("binary classifier").obj
    }

    pub fn theta(&self, a: Obj, b: Obj) -> MapId {
        self.classifier(a, b).expect("binary classifier").theta
    }

    pub fn unit(&self) -> Obj {
        self.nullary.as_ref().expect("nullary classifier").obj
    }

    pub fn u(&self) -> MapId {
        self.nullary.as_ref().expect("nullary classifier").u
    }

    pub fn hom(&self, b: Obj, c: Obj) -> &HomObject {
        &self.homs.as_ref().expect("closed structure")[b * self.objects + c]
    }

    fn flags(&self) -> Vec<(&'static str, bool)> {
        let mut v = vec![
            ("weakly-representable", self.weakly_representable),
            ("left-representable", self.left_representable),
        ];
        if let Some(r) = self.representable {
            v.push(("representable", r));
        }
        v.push(("closed", self.closed()));
        v.push(("closed-with-units", self.closed_with_units()));
        v
    }

    pub fn render(&self, m: &Multi, witnesses: bool) -> String {
        let cat = m.cat();
        let o = |x: Obj| cat.obj_name(x);
        let mut out = String::new();
        let _ = writeln!(out, "certificate {}", self.subject);
        for (k, v) in self.flags() {
            let _ = writeln!(out, "flag {k} {}", if v { "yes" } else { "no" });
        }
        let wit = |out: &mut String, ws: &[Witness]| {
            if witnesses {
                for w in ws {
                    let pairs: Vec<String> = w.pairs.iter().map(|&(x, y)| format!("{}={}", m.name(x), m.name(y))).collect();
                    let _ = writeln!(out, "  witness {} : {}", w.label, pairs.join(" "));
                }
            }
        };
        for cl in self.binary.iter().flatten() {
            let _ = writeln!(out, "binary {} {} obj {} map {}", o(cl.a), o(cl.b), o(cl.obj), m.name(cl.theta));
            wit(&mut out, &cl.witnesses);
        }
        for (k, cl) in self.binary.iter().enumerate() {
            if cl.is_none() {
                let _ = writeln!(out, "binary {} {} none", o(k / self.objects), o(k % self.objects));
            }
        }
        match &self.nullary {
            Some(cl) => {
                let _ = writeln!(out, "nullary obj {} map {}", o(cl.obj), m.name(cl.u));
                wit(&mut out, &cl.witnesses);
            }
            None => {
                let _ = writeln!(out, "nullary none");
            }
        }
        if let Some(homs) = &self.homs {
            for h in homs {
                let _ = writeln!(out, "hom {} {} obj {} map {}", o(h.b), o(h.c), o(h.obj), m.name(h.e));
                wit(&mut out, &h.witnesses);
            }
        }
        if !self.universality.is_empty() {
            let _ = writeln!(out, "left-universality witnesses {}", self.universality.len());
            wit(&mut out, &self.universality);
        }
        for d in &self.derived {
            let _ = writeln!(
                out,
                "derived {} ({}) obj {} map {} bijective {} stepwise {}",
                d.kind,
                onames(m, &d.inputs),
                o(d.obj),
                m.name(d.map),
                if d.bijective { "yes" } else { "no" },
                if d.stepwise { "yes" } else { "no" }
            );
        }
        let _ = writeln!(out, "candidates extra {}", self.extra_candidates);
        for f in &self.failures {
            let _ = writeln!(out, "failure {f}");
        }
        out
    }
}

/// Two classifiers of the same pair are related by exactly one unary map,
/// and it is invertible.
fn connected(m: &Multi, x1: Obj, t1: MapId, x2: Obj, t2: MapId) -> bool {
    let cat = m.cat();
    let ks: Vec<Mor> = cat.hom(x1, x2).iter().copied().filter(|&k| m.sub(k, 1, t1) == Some(t2)).collect();
    ks.len() == 1 && cat.is_iso(ks[0])
}

/// Run every search and assemble the certificate.
pub fn certify(m: &Multi, subject: &str) -> Result<Certificate> {
    let n = m.cat().object_count();
    let mut failures = Vec::new();
    let mut binary = Vec::with_capacity(n * n);
    let mut extra = 0;
    for a in 0..n {
        for b in 0..n {
            let all = find_binary_classifiers(m, a, b);
            for other in all.iter().skip(1) {
                if !connected(m, all[0].obj, all[0].theta, other.obj, other.theta) {
                    return Err(Error::UniversalityBroken(format!(
                        "classifiers {} and {} are not uniquely isomorphic",
                        m.name(all[0].theta),
                        m.name(other.theta)
                    )));
                }
            }
            extra += all.len().saturating_sub(1);
            binary.push(all.into_iter().next());
        }
    }
    let nullaries = find_nullary_classifiers(m);
    for other in nullaries.iter().skip(1) {
        if !connected(m, nullaries[0].obj, nullaries[0].u, other.obj, other.u) {
            return Err(Error::UniversalityBroken("nullary classifiers are not uniquely isomorphic".into()));
        }
    }
    extra += nullaries.len().saturating_sub(1);
    let nullary = nullaries.into_iter().next();
    let mut universality = Vec::new();
    let mut binary_lu = binary.iter().all(|c| c.is_some());
    for cl in binary.iter().flatten() {
        let u = check_left_universal_binary(m, cl);
        binary_lu &= u.holds();
        failures.extend(u.failures.iter().map(|f| format!("left-universal {f}")));
        universality.extend(u.witnesses);
    }
    let nullary_lu = match &nullary {
        Some(cl) => {
            let u = check_left_universal_nullary(m, cl);
            failures.extend(u.failures.iter().map(|f| format!("left-universal {f}")));
            let ok = u.holds();
            universality.extend(u.witnesses);
            ok
        }
        None => false,
    };
    let weakly = binary.iter().all(|c| c.is_some()) && nullary.is_some();
    let mut cert = Certificate {
        subject: subject.to_string(),
        skew: m.is_skew(),
        objects: n,
        binary,
        extra_candidates: extra,
        nullary,
        binary_left_universal: binary_lu,
        nullary_left_universal: nullary_lu,
        weakly_representable: weakly,
        left_representable: weakly && binary_lu && nullary_lu,
        representable: None,
        homs: find_closed_structure(m),
        derived: Vec::new(),
        universality,
        failures,
    };
    if cert.left_representable {
        cert.derived = derived_classifiers(m, &cert)?;
    }
    if !m.is_skew() {
        let r = check_representable(m, &cert)?;
        cert.failures.extend(r.failures.iter().map(|f| format!("representable {f}")));
        cert.representable = Some(r.holds());
    }
    Ok(cert)
}

/// Composite classifiers `theta_{ab,c} o1 theta_{a,b}`, the 4-ary one, and
/// `theta_{i,a} o1 u`, each re-certified.
pub fn derived_classifiers(m: &Multi, cert: &Certificate) -> Result<Vec<DerivedRecord>> {
    if !cert.left_representable {
        return Err(Error::Precondition("derived classifiers need left representability".into()));
    }
    let cat = m.cat();
    let n = cert.objects;
    let th = |a, b| cert.theta(a, b);
    let t = |a, b| cert.tensor(a, b);
    let broken = |what: String| Error::UniversalityBroken(what);
    let mut out = Vec::new();
    let check = |map: MapId, obj: Obj, fl: Flavour, inputs: &[Obj], step: &dyn Fn(MapId) -> Option<MapId>| {
        let mut bij = true;
        let mut stepwise = true;
        for d in 0..n {
            let hom = cat.hom(obj, d);
            bij &= bijection(hom, m.set(fl, inputs, d), |q| m.sub(q, 1, map)).is_some();
            stepwise &= hom.iter().all(|&q| m.sub(q, 1, map).is_some() && m.sub(q, 1, map) == step(q));
        }
        (bij, stepwise)
    };
    for (a, b, c) in tuples(n, 3).into_iter().map(|v| (v[0], v[1], v[2])) {
        let map = m.sub(th(t(a, b), c), 1, th(a, b)).ok_or_else(|| broken("ternary composite undefined".into()))?;
        let obj = t(t(a, b), c);
        let step = |q: MapId| m.sub(m.sub(q, 1, th(t(a, b), c))?, 1, th(a, b));
        let (bijective, stepwise) = check(map, obj, Tight, &[a, b, c], &step);
        out.push(DerivedRecord { kind: "ternary".into(), inputs: vec![a, b, c], obj, map, bijective, stepwise });
    }
    for v in tuples(n, 4) {
        let (a, b, c, d) = (v[0], v[1], v[2], v[3]);
        let (ab, abc) = (t(a, b), t(t(a, b), c));
        let map = m
            .sub(th(abc, d), 1, th(ab, c))
            .and_then(|x| m.sub(x, 1, th(a, b)))
            .ok_or_else(|| broken("quaternary composite undefined".into()))?;
        let obj = t(abc, d);
        let step = |q: MapId| m.sub(m.sub(m.sub(q, 1, th(abc, d))?, 1, th(ab, c))?, 1, th(a, b));
        let (bijective, stepwise) = check(map, obj, Tight, &v, &step);
        out.push(DerivedRecord { kind: "quaternary".into(), inputs: v, obj, map, bijective, stepwise });
    }
    let i = cert.unit();
    for a in 0..n {
        let map = m.sub(th(i, a), 1, cert.u()).ok_or_else(|| broken("unit composite undefined".into()))?;
        let obj = t(i, a);
        let step = |q: MapId| m.sub(m.sub(q, 1, th(i, a))?, 1, cert.u());
        let (bijective, stepwise) = check(map, obj, loose_side(m), &[a], &step);
        out.push(DerivedRecord { kind: "unit".into(), inputs: vec![a], obj, map, bijective, stepwise });
    }
    if let Some(d) = out.iter().find(|d| !d.bijective || !d.stepwise) {
        return Err(broken(format!("{} composite at ({}) is not a classifier", d.kind, onames(m, &d.inputs))));
    }
    Ok(out)
}

/// Positional bijections `- o_j u` and `- o_j theta` for `1 <= n <= 3`.
pub fn check_representable(m: &Multi, cert: &Certificate) -> Result<Universality> {
    if m.is_skew() {
        return Err(Error::Precondition("representability is defined for plain structures".into()));
    }
    let mut u = Universality::default();
    let n = cert.objects;
    let Some(null) = &cert.nullary else {
        u.failures.push("no nullary classifier".into());
        return Ok(u);
    };
    if cert.binary.iter().any(|c| c.is_none()) {
        u.failures.push("missing binary classifiers".into());
        return Ok(u);
    }
    for arity in 1..=3usize {
        for xl in 0..arity {
            let yl = arity - 1 - xl;
            for xs in tuples(n, xl) {
                for ys in tuples(n, yl) {
                    let j = xl + 1;
                    for z in 0..n {
                        let src = m.set(Tight, &[xs.clone(), vec![null.obj], ys.clone()].concat(), z);
                        let tgt = m.set(Tight, &cat_list(&xs, &ys), z);
                        let label = format!("-o{j} {} ({}|{};{})", m.name(null.u), onames(m, &xs), onames(m, &ys), m.cat().obj_name(z));
                        u.add(label, bijection(src, tgt, |g| m.sub(g, j, null.u)));
                        for cl in cert.binary.iter().flatten() {
                            let src = m.set(Tight, &[xs.clone(), vec![cl.obj], ys.clone()].concat(), z);
                            let tgt = m.set(Tight, &[xs.clone(), vec![cl.a, cl.b], ys.clone()].concat(), z);
                            let label = format!("-o{j} {} ({}|{};{})", m.name(cl.theta), onames(m, &xs), onames(m, &ys), m.cat().obj_name(z));
                            u.add(label, bijection(src, tgt, |g| m.sub(g, j, cl.theta)));
                        }
                    }
                }
            }
        }
    }
    Ok(u)
}

/// Inverse tables of the universal bijections.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Inverses {
    /// `f' o1 theta = f` for tight `f` of arity 2..4.
    pub prime: BTreeMap<MapId, MapId>,
    /// `q* o1 u = q` for nullary-side `q` of arity 0..2.
    pub star: BTreeMap<MapId, MapId>,
    /// `e o1 f# = f` in a closed structure.
    pub sharp: BTreeMap<MapId, MapId>,
}

fn unique_in(m: &Multi, set: &[MapId], pred: impl Fn(MapId) -> bool, what: impl Fn() -> String) -> Result<MapId> {
    let hits: Vec<MapId> = set.iter().copied().filter(|&x| pred(x)).collect();
    match hits.as_slice() {
        [x] => Ok(*x),
        [] => Err(Error::UniversalityBroken(format!("no inverse image for {}", what()))),
        _ => Err(Error::UniversalityBroken(format!(
            "{} inverse images for {} ({})",
            hits.len(),
            what(),
            hits.iter().map(|&h| m.name(h)).collect::<Vec<_>>().join(" ")
        ))),
    }
}

/// `f'` for a tight map of arity at least 2.
pub fn prime(m: &Multi, cert: &Certificate, f: MapId) -> Result<MapId> {
    let dom = m.dom(f);
    let cl = cert.classifier(dom[0], dom[1]).ok_or_else(|| Error::Precondition("no binary classifier".into()))?;
    let src = m.set(Tight, &cat_list(&[cl.obj], &dom[2..]), m.cod(f));
    unique_in(m, src, |g| m.sub(g, 1, cl.theta) == Some(f), || format!("{}'", m.name(f)))
}

/// `q*` for a nullary-side map of arity at most 2.
pub fn star(m: &Multi, cert: &Certificate, q: MapId) -> Result<MapId> {
    let cl = cert.nullary.as_ref().ok_or_else(|| Error::Precondition("no nullary classifier".into()))?;
    let src = m.set(Tight, &cat_list(&[cl.obj], m.dom(q)), m.cod(q));
    unique_in(m, src, |g| m.sub(g, 1, cl.u) == Some(q), || format!("{}*", m.name(q)))
}

/// `f#` for a map with at least one input, in a closed structure.
pub fn sharp(m: &Multi, cert: &Certificate, f: MapId) -> Result<MapId> {
    let dom = m.dom(f);
    let (init, b) = dom.split_at(dom.len() - 1);
    let h = cert.homs.as_ref().ok_or_else(|| Error::Precondition("structure is not closed".into()))?;
    let h = &h[b[0] * cert.objects + m.cod(f)];
    let fl = if m.is_skew() { m.flavour(f) } else { Tight };
    let src = m.set(fl, init, h.obj);
    unique_in(m, src, |g| m.sub(h.e, 1, g) == Some(f), || format!("{}#", m.name(f)))
}

/// Maps on which `(-)#` is defined.
pub fn sharp_domain(m: &Multi) -> Vec<MapId> {
    (0..m.map_count())
        .filter(|&f| match (m.is_skew(), m.flavour(f), m.arity(f)) {
            (false, _, a) => a >= 1,
            (true, Tight, a) => a >= 2,
            (true, Loose, a) => a >= 1,
        })
        .collect()
}

/// Tabulate `'`, `*` and `#` where the certificate allows, checking that
/// the forward map undoes each inverse.
pub fn inverses(m: &Multi, cert: &Certificate) -> Result<Inverses> {
    let mut inv = Inverses::default();
    if cert.left_representable {
        for f in 0..m.map_count() {
            if m.flavour(f) == Tight && m.arity(f) >= 2 {
                let p = prime(m, cert, f)?;
                let th = cert.theta(m.dom(f)[0], m.dom(f)[1]);
                if m.sub(p, 1, th) != Some(f) {
                    return Err(Error::UniversalityBroken(format!("{}' does not recompose", m.name(f))));
                }
                inv.prime.insert(f, p);
            }
        }
    }
    if cert.nullary.is_some() && (cert.left_representable || cert.closed()) {
        let side = loose_side(m);
        for q in 0..m.map_count() {
            let ok = if m.is_skew() { m.flavour(q) == side } else { true };
            if ok && m.arity(q) <= 2 {
                let s = star(m, cert, q)?;
                if m.sub(s, 1, cert.u()) != Some(q) {
                    return Err(Error::UniversalityBroken(format!("{}* does not recompose", m.name(q))));
                }
                inv.star.insert(q, s);
            }
        }
    }
    if cert.closed() {
        for f in sharp_domain(m) {
            let s = sharp(m, cert, f)?;
            let dom = m.dom(f);
            let e = cert.hom(dom[dom.len() - 1], m.cod(f)).e;
            if m.sub(e, 1, s) != Some(f) {
                return Err(Error::UniversalityBroken(format!("{}# does not recompose", m.name(f))));
            }
            inv.sharp.insert(f, s);
        }
    }
    Ok(inv)
}

/// `[b, h]` for `h: c -> c'`: the unique `k` with `e o1 k = h o e`.
pub fn hom_on_morphism(m: &Multi, cert: &Certificate, b: Obj, h: Mor) -> Result<Mor> {
    let cat = m.cat();
    let (c, c2) = (cat.dom(h), cat.cod(h));
    let (h1, h2) = (cert.hom(b, c), cert.hom(b, c2));
    let target = m.sub(h, 1, h1.e);
    unique_in(m, cat.hom(h1.obj, h2.obj), |k| m.sub(h2.e, 1, k) == target && target.is_some(), || {
        format!("[{}, {}]", cat.obj_name(b), cat.mor_name(h))
    })
}

/// `[f, c]` for `f: b' -> b`: the unique `k` with `e o1 k = e o2 f`.
pub fn hom_on_morphism_left(m: &Multi, cert: &Certificate, f: Mor, c: Obj) -> Result<Mor> {
    let cat = m.cat();
    let (b2, b) = (cat.dom(f), cat.cod(f));
    let (h1, h2) = (cert.hom(b, c), cert.hom(b2, c));
    let target = m.sub(h1.e, 2, f);
    unique_in(m, cat.hom(h1.obj, h2.obj), |k| m.sub(h2.e, 1, k) == target && target.is_some(), || {
        format!("[{}, {}]", cat.mor_name(f), cat.obj_name(c))
    })
}

/// Verdicts of the two sides of "left representable iff units and left
/// adjoints to every `[b,-]`".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjointVerdicts {
    pub left_representable: bool,
    pub units_and_adjoints: bool,
    /// `(a, b, x)`: `x` represents `C(a, [b,-])`.
    pub adjoints: Vec<(Obj, Obj, Obj)>,
}

/// Both sides are decided independently and must agree.
///
/// Closedness is only required away from nullary maps, so structures with
/// their nullary maps removed are accepted.
pub fn verify_left_iff_adjoint(m: &Multi) -> Result<AdjointVerdicts> {
    let homs = find_closed_structure_scoped(m, ClosedScope::Positive)
        .ok_or_else(|| Error::Precondition("structure is not closed".into()))?;
    let cert = certify(m, "left-iff-adjoint")?;
    let n = cert.objects;
    let cat = m.cat();
    let hcert = Certificate { homs: Some(homs), ..cert.clone() };
    let mut adjoints = Vec::new();
    let mut all = cert.nullary.is_some();
    'pairs: for a in 0..n {
        for b in 0..n {
            let mut found = None;
            'search: for x in 0..n {
                let bx = hcert.hom(b, x).obj;
                for &eta in cat.hom(a, bx) {
                    let ok = (0..n).all(|c| {
                        let image: Vec<Option<Mor>> = cat
                            .hom(x, c)
                            .iter()
                            .map(|&h| hom_on_morphism(m, &hcert, b, h).ok().and_then(|k| cat.comp(k, eta)))
                            .collect();
                        crate::skewmon::bijective(&image, cat.hom(a, hcert.hom(b, c).obj))
                    });
                    if ok {
                        found = Some(x);
                        break 'search;
                    }
                }
            }
            match found {
                Some(x) => adjoints.push((a, b, x)),
                None => {
                    all = false;
                    break 'pairs;
                }
            }
        }
    }
    let v = AdjointVerdicts {
        left_representable: cert.left_representable,
        units_and_adjoints: all,
        adjoints,
    };
    if v.left_representable != v.units_and_adjoints {
        return Err(Error::InconsistentVerdicts(format!(
            "left representable: {}, units and adjoints: {}",
            v.left_representable, v.units_and_adjoints
        )));
    }
    Ok(v)
}

/// Left universality of the unit re-derived through closedness: the chain
/// `f |-> e o1 (f# o1 u)` must be `- o1 u`, and bijective.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitUniversality {
    pub instances: usize,
    pub direct: bool,
    pub chained: bool,
}

pub fn verify_units_left_universal(m: &Multi) -> Result<UnitUniversality> {
    let cert = certify(m, "units")?;
    if !cert.closed() {
        return Err(Error::Precondition("structure is not closed".into()));
    }
    let null = cert.nullary.clone().ok_or_else(|| Error::Precondition("no nullary classifier".into()))?;
    let direct = check_left_universal_nullary(m, &null).holds();
    let n = cert.objects;
    let mut chained = true;
    let mut instances = 0;
    for len in 1..=2 {
        for xs in tuples(n, len) {
            let (init, x) = xs.split_at(len - 1);
            for y in 0..n {
                let h = cert.hom(x[0], y);
                for &f in m.set(Tight, &cat_list(&[null.obj], &xs), y) {
                    instances += 1;
                    let via = sharp(m, &cert, f)
                        .ok()
                        .and_then(|s| m.sub(s, 1, null.u))
                        .and_then(|v| m.sub(h.e, 1, v));
                    chained &= via.is_some() && via == m.sub(f, 1, null.u);
                }
                let _ = init;
            }
        }
    }
    let r = UnitUniversality { instances, direct, chained };
    if r.direct != r.chained {
        return Err(Error::InconsistentVerdicts(format!("direct {} chained {}", r.direct, r.chained)));
    }
    Ok(r)
}

/// The three laws by which `(-)#` respects substitution.
pub fn check_sharp_laws(m: &Multi) -> Result<crate::report::Report> {
    let cert = certify(m, "sharp")?;
    if !cert.closed() {
        return Err(Error::Precondition("structure is not closed".into()));
    }
    let inv = inverses(m, &cert)?;
    let cat = m.cat();
    let n = cert.objects;
    let sh = |f: MapId| inv.sharp.get(&f).copied();
    let nm = |x: MapId| m.name(x).to_string();
    let mut s = crate::report::Sink::default();
    let binaries: Vec<MapId> = (0..m.map_count()).filter(|&f| m.arity(f) == 2 && (m.flavour(f) == Tight)).collect();
    for &f in &binaries {
        let (a, b) = (m.dom(f)[0], m.dom(f)[1]);
        for &v in m.set(Loose, &[], a) {
            let l = sh(f).and_then(|fs| m.sub(fs, 1, v));
            let r = m.sub(f, 1, v).and_then(sh);
            s.eq("sharp-nullary", l, r, || vec![nm(f), nm(v)], nm);
        }
        let x = m.cod(f);
        for len in 1..=2 {
            for cs in tuples(n, len) {
                for y in 0..n {
                    for &g in m.set(Tight, &cat_list(&[x], &cs), y) {
                        let l = m.sub(g, 1, f).and_then(sh);
                        let r = sh(g).and_then(|gs| m.sub(gs, 1, f));
                        s.eq("sharp-subst", l, r, || vec![nm(g), nm(f)], nm);
                    }
                }
            }
        }
        let fs = sh(f);
        let _ = b;
        for q in cat.arrows_to(a) {
            let a2 = cat.dom(q);
            // the unary composite is read as a loose map in the skew case
            let lift = |p: Option<MapId>| if m.is_skew() { p.and_then(|p| m.jmap(p)) } else { p };
            let l = lift(fs.and_then(|fs| cat.comp(fs, q))).and_then(sh);
            let r = fs
                .map(|fs| hom_on_morphism(m, &cert, a2, fs))
                .transpose()?
                .and_then(|k| lift(Some(q)).and_then(sh).and_then(|qs| m.sub(k, 1, qs)));
            s.eq("sharp-hom", l, r, || vec![nm(f), nm(q)], nm);
        }
    }
    Ok(s.into_report("sharp-laws"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue;
    use crate::induce::{induce_short, induce_short_skew};
    use crate::multi::Multi;

    fn plain(name: &str) -> Multi {
        induce_short(&catalogue::skew_monoidal(name).unwrap()).unwrap().into_inner()
    }

    fn skew(name: &str) -> Multi {
        induce_short_skew(&catalogue::skew_monoidal(name).unwrap()).unwrap().multi.into_inner()
    }

    #[test]
    fn tensor_and_unit_are_recovered() {
        for name in catalogue::MONOIDAL {
            let c = catalogue::skew_monoidal(name).unwrap();
            let cert = certify(&skew(name), name).unwrap();
            assert!(cert.left_representable, "{name}");
            assert_eq!(cert.unit(), c.unit, "{name}");
            for a in c.cat.objects() {
                for b in c.cat.objects() {
                    assert_eq!(cert.tensor(a, b), c.t(a, b), "{name} {a} {b}");
                }
            }
            assert!(cert.derived.iter().all(|d| d.bijective && d.stepwise));
            assert_eq!(cert.derived.len(), c.n().pow(3) + c.n().pow(4) + c.n());
        }
    }

    #[test]
    fn representability_separates_the_skew_poset() {
        assert_eq!(certify(&plain("heyting-2"), "h").unwrap().representable, Some(true));
        assert_eq!(certify(&plain("klein"), "k").unwrap().representable, Some(true));
        let cert = certify(&plain("poset-skew-second"), "p").unwrap();
        assert!(cert.left_representable);
        assert_eq!(cert.representable, Some(false));
    }

    #[test]
    fn hom_objects_match_the_closed_tables() {
        let cert = certify(&plain("heyting-2"), "h").unwrap();
        for b in 0..2 {
            for c in 0..2 {
                assert_eq!(cert.hom(b, c).obj, usize::from(b <= c));
            }
        }
        let cert = certify(&plain("klein"), "k").unwrap();
        let bits = |o: usize| [1, 2, 3, 0][o];
        for b in 0..4 {
            for c in 0..4 {
                assert_eq!(bits(cert.hom(b, c).obj), bits(b) ^ bits(c));
            }
        }
        assert!(!certify(&skew("poset-skew-second"), "p").unwrap().closed());
        let cert = certify(&skew("poset-skew-first"), "p").unwrap();
        assert!(cert.closed());
        for b in 0..2 {
            for c in 0..2 {
                assert_eq!(cert.hom(b, c).obj, c);
            }
        }
    }

    #[test]
    fn right_closed_search_is_plain_only() {
        assert!(find_right_closed_structure(&plain("z3")).is_some());
        assert!(find_right_closed_structure(&skew("z3")).is_none());
    }

    #[test]
    fn inverse_tables_cover_their_domains() {
        for name in ["z2", "heyting-2"] {
            for m in [plain(name), skew(name)] {
                let cert = certify(&m, name).unwrap();
                let inv = inverses(&m, &cert).unwrap();
                let tight_multi = (0..m.map_count()).filter(|&f| m.flavour(f) == Tight && m.arity(f) >= 2).count();
                assert_eq!(inv.prime.len(), tight_multi);
                assert_eq!(inv.sharp.len(), sharp_domain(&m).len());
                assert!(!inv.star.is_empty());
            }
        }
    }

    #[test]
    fn left_representable_iff_units_and_adjoints() {
        for name in ["terminal", "z2", "klein", "heyting-2"] {
            let v = verify_left_iff_adjoint(&plain(name)).unwrap();
            assert!(v.left_representable && v.units_and_adjoints, "{name}");
            let v = verify_left_iff_adjoint(&skew(name)).unwrap();
            assert!(v.left_representable && v.units_and_adjoints, "{name}");
        }
        let m = plain("heyting-2");
        let stripped = m.restrict(|f| m.arity(f) != 0).unwrap();
        let v = verify_left_iff_adjoint(&stripped).unwrap();
        assert!(!v.left_representable && !v.units_and_adjoints);
        assert!(matches!(verify_left_iff_adjoint(&plain("poset-skew-second")), Err(Error::Precondition(_))));
    }

    #[test]
    fn units_and_sharp_laws_in_closed_structures() {
        for name in ["z2", "klein", "heyting-2", "poset-skew-first"] {
            let ms: Vec<Multi> = if name == "poset-skew-first" { vec![skew(name)] } else { vec![plain(name), skew(name)] };
            for m in ms {
                let u = verify_units_left_universal(&m).unwrap();
                assert!(u.direct && u.chained && u.instances > 0, "{name}");
                let r = check_sharp_laws(&m).unwrap();
                assert!(r.passed(), "{name}\n{}", r.render());
                for fam in ["sharp-nullary", "sharp-subst", "sharp-hom"] {
                    assert!(r.checked_in(fam) > 0, "{name} {fam}");
                }
            }
        }
    }

    #[test]
    fn bijection_rejects_collisions() {
        assert!(bijection(&[0, 1], &[5, 6], |x| Some(x + 5)).is_some());
        assert!(bijection(&[0, 1], &[5, 6], |_| Some(5)).is_none());
        assert!(bijection(&[0], &[5, 6], |_| Some(5)).is_none());
        assert!(bijection(&[0], &[5], |_| None).is_none());
    }
}
