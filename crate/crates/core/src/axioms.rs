//! Axiom validator for short (skew) multicategories.
//!
//! Families:
//! - `typing`: every required table entry exists and lands in the right set;
//! - `identity`, `profunctoriality`: the unary actions form a functor;
//! - `nat-in-a`, `nat-in-b`, `nat-in-c`, `dinat-in-b`: (di)naturality of each
//!   stored substitution case;
//! - `assoc-line-{a,b}`: `f o_i (g o_j h) = (f o_i g) o_{j+i-1} h`;
//! - `assoc-notline-{a,b,c,d}`: `(f o_1 g) o_{n+1} h = (f o_2 h) o_1 g`;
//! - skew only: `j-nat-1` .. `j-nat-5`, `j-action`, `j-derived-g`, `j-derived-q`.

use crate::error::Result;
use crate::fincat::FinCategory;
use crate::multi::{Loose, MapId, Multi, ShortMulticategory, ShortSkewMulticategory, Tight};
use crate::report::{self, Report, Sink, Task};

pub fn validate_short_multicategory(m: &ShortMulticategory) -> Report {
    validate_multi(m, 1)
}

pub fn validate_short_skew(m: &ShortSkewMulticategory) -> Report {
    validate_multi(m, 1)
}

fn at(i: usize) -> String {
    format!("@{i}")
}

/// Validate any engine value on `jobs` workers.
pub fn validate_multi(m: &Multi, jobs: usize) -> Report {
    let subject = if m.is_skew() { "short-skew" } else { "short-multi" };
    let mut tasks: Vec<Task> = Vec::new();
    let n = |x: MapId| m.name(x).to_string();
    let cat: &FinCategory = m.cat();

    tasks.push(Box::new(move |s| typing(m, s)));

    tasks.push(Box::new(move |s| {
        for f in m.actionable() {
            let c = m.cod(f);
            s.eq("identity", m.sub(m.id_map(c), 1, f), Some(f), || vec![n(f), at(0)], n);
            for i in 1..=m.arity(f) {
                let d = m.dom(f)[i - 1];
                s.eq("identity", m.sub(f, i, m.id_map(d)), Some(f), || vec![n(f), at(i)], n);
            }
        }
    }));

    tasks.push(Box::new(move |s| {
        let fam = "profunctoriality";
        for f in m.actionable() {
            let ar = m.arity(f);
            for i in 1..=ar {
                for p in cat.arrows_to(m.dom(f)[i - 1]) {
                    for p2 in cat.arrows_to(cat.dom(p)) {
                        let l = m.sub(f, i, p).and_then(|x| m.sub(x, i, p2));
                        let r = cat.comp(p, p2).and_then(|pp| m.sub(f, i, pp));
                        s.eq(fam, l, r, || vec![n(f), at(i), n(p), n(p2)], n);
                    }
                }
                for j in i + 1..=ar {
                    for p in cat.arrows_to(m.dom(f)[i - 1]) {
                        for p2 in cat.arrows_to(m.dom(f)[j - 1]) {
                            let l = m.sub(f, i, p).and_then(|x| m.sub(x, j, p2));
                            let r = m.sub(f, j, p2).and_then(|x| m.sub(x, i, p));
                            s.eq(fam, l, r, || vec![n(f), at(i), n(p), at(j), n(p2)], n);
                        }
                    }
                }
            }
            for q in cat.arrows_from(m.cod(f)) {
                for q2 in cat.arrows_from(cat.cod(q)) {
                    let l = m.sub(q, 1, f).and_then(|x| m.sub(q2, 1, x));
                    let r = cat.comp(q2, q).and_then(|qq| m.sub(qq, 1, f));
                    s.eq(fam, l, r, || vec![n(q2), n(q), n(f)], n);
                }
                for i in 1..=ar {
                    for p in cat.arrows_to(m.dom(f)[i - 1]) {
                        let l = m.sub(f, i, p).and_then(|x| m.sub(q, 1, x));
                        let r = m.sub(q, 1, f).and_then(|x| m.sub(x, i, p));
                        s.eq(fam, l, r, || vec![n(q), n(f), at(i), n(p)], n);
                    }
                }
            }
        }
    }));

    for case in m.cases() {
        let case = *case;
        tasks.push(Box::new(move |s| {
            for &g in m.maps_of(case.outer) {
                let ga = m.arity(g);
                for &i in case.positions {
                    for &f in m.with_cod(case.inner, m.dom(g)[i - 1]) {
                        let fa = m.arity(f);
                        let gf = m.sub(g, i, f);
                        for q in cat.arrows_from(m.cod(g)) {
                            let l = gf.and_then(|x| m.sub(q, 1, x));
                            let r = m.sub(q, 1, g).and_then(|x| m.sub(x, i, f));
                            s.eq("nat-in-c", l, r, || vec![n(q), n(g), at(i), n(f)], n);
                        }
                        for j in 1..=fa {
                            for p in cat.arrows_to(m.dom(f)[j - 1]) {
                                let l = gf.and_then(|x| m.sub(x, i + j - 1, p));
                                let r = m.sub(f, j, p).and_then(|x| m.sub(g, i, x));
                                s.eq("nat-in-a", l, r, || vec![n(g), at(i), n(f), at(j), n(p)], n);
                            }
                        }
                        for j in (1..=ga).filter(|&j| j != i) {
                            let k = if j < i { j } else { j + fa - 1 };
                            for p in cat.arrows_to(m.dom(g)[j - 1]) {
                                let l = gf.and_then(|x| m.sub(x, k, p));
                                let r = m.sub(g, j, p).and_then(|x| m.sub(x, i, f));
                                s.eq("nat-in-b", l, r, || vec![n(g), at(i), n(f), at(j), n(p)], n);
                            }
                        }
                    }
                    for p in cat.arrows_to(m.dom(g)[i - 1]) {
                        for &f in m.with_cod(case.inner, cat.dom(p)) {
                            let l = m.sub(g, i, p).and_then(|x| m.sub(x, i, f));
                            let r = m.sub(p, 1, f).and_then(|x| m.sub(g, i, x));
                            s.eq("dinat-in-b", l, r, || vec![n(g), at(i), n(p), n(f)], n);
                        }
                    }
                }
            }
        }));
    }

    for (tag, hshape) in [("assoc-line-a", (Tight, 2)), ("assoc-line-b", (Loose, 0))] {
        tasks.push(Box::new(move |s| {
            s.touch(tag);
            for &f in m.maps_of((Tight, 2)) {
                for i in 1..=2 {
                    for &g in m.with_cod((Tight, 2), m.dom(f)[i - 1]) {
                        for j in 1..=2 {
                            for &h in m.with_cod(hshape, m.dom(g)[j - 1]) {
                                let l = m.sub(g, j, h).and_then(|x| m.sub(f, i, x));
                                let r = m.sub(f, i, g).and_then(|x| m.sub(x, j + i - 1, h));
                                s.eq(tag, l, r, || vec![n(f), at(i), n(g), at(j), n(h)], n);
                            }
                        }
                    }
                }
            }
        }));
    }

    let nl = [
        ("assoc-notline-a", (Tight, 2), (Tight, 2)),
        ("assoc-notline-b", (Tight, 2), (Loose, 0)),
        ("assoc-notline-c", (Loose, 0), (Tight, 2)),
        ("assoc-notline-d", (Loose, 0), (Loose, 0)),
    ];
    for (tag, gs, hs) in nl {
        tasks.push(Box::new(move |s| {
            s.touch(tag);
            for &f in m.maps_of((Tight, 2)) {
                for &g in m.with_cod(gs, m.dom(f)[0]) {
                    for &h in m.with_cod(hs, m.dom(f)[1]) {
                        let ga = m.arity(g);
                        let l = m.sub(f, 1, g).and_then(|x| m.sub(x, ga + 1, h));
                        let r = m.sub(f, 2, h).and_then(|x| m.sub(x, 1, g));
                        s.eq(tag, l, r, || vec![n(f), n(g), n(h)], n);
                    }
                }
            }
        }));
    }

    if m.is_skew() {
        tasks.push(Box::new(move |s| j_families(m, s)));
    }

    report::run(subject, tasks, jobs)
}

fn typing(m: &Multi, s: &mut Sink) {
    let cat = m.cat();
    let n = |x: MapId| m.name(x).to_string();
    let show_set = |fl: crate::multi::Flavour, dom: &[usize], cod: usize| {
        let d: Vec<&str> = dom.iter().map(|&o| cat.obj_name(o)).collect();
        format!("{}({};{})", fl.letter(), d.join(","), cat.obj_name(cod))
    };
    let check = |s: &mut Sink, ids: Vec<String>, got: Option<MapId>, want: (crate::multi::Flavour, Vec<usize>, usize)| {
        let ok = got.is_some_and(|r| {
            m.flavour(r) == m.norm(want.0, want.1.len()) && m.dom(r) == want.1.as_slice() && m.cod(r) == want.2
        });
        s.record("typing", ok, || {
            (
                ids,
                got.map_or_else(|| report::UNDEFINED.into(), n),
                show_set(want.0, &want.1, want.2),
            )
        });
    };
    for (g, i, f) in m.required_substs() {
        let want = m.expected(g, i, f);
        check(s, vec![n(g), at(i), n(f)], m.sub(g, i, f), want);
    }
    for f in m.actionable() {
        for i in 1..=m.arity(f) {
            for p in cat.arrows_to(m.dom(f)[i - 1]) {
                let want = m.expected(f, i, p);
                check(s, vec![n(f), at(i), n(p)], m.sub(f, i, p), want);
            }
        }
        for q in cat.arrows_from(m.cod(f)) {
            let want = (m.flavour(f), m.dom(f).to_vec(), cat.cod(q));
            check(s, vec![n(q), n(f)], m.sub(q, 1, f), want);
        }
    }
    if m.is_skew() {
        for ar in [1, 2] {
            for &f in m.maps_of((Tight, ar)) {
                let want = (Loose, m.dom(f).to_vec(), m.cod(f));
                check(s, vec!["j".into(), n(f)], m.jmap(f), want);
            }
        }
    }
}

fn j_families(m: &Multi, s: &mut Sink) {
    let cat = m.cat();
    let n = |x: MapId| m.name(x).to_string();
    let j = |x: Option<MapId>| x.and_then(|y| m.jmap(y));
    for &g in m.maps_of((Tight, 2)) {
        for p in cat.arrows_to(m.dom(g)[1]) {
            let l = m.jmap(p).and_then(|jp| m.sub(g, 2, jp));
            let r = m.sub(g, 2, p);
            s.eq("j-nat-1", l, r, || vec![n(g), n(p)], n);
        }
        for p in cat.arrows_to(m.dom(g)[0]) {
            let l = m.jmap(p).and_then(|jp| m.sub(g, 1, jp));
            let r = j(m.sub(g, 1, p));
            s.eq("j-nat-2", l, r, || vec![n(g), n(p)], n);
        }
        for p in cat.arrows_from(m.cod(g)) {
            let l = m.jmap(p).and_then(|jp| m.sub(jp, 1, g));
            let r = j(m.sub(p, 1, g));
            s.eq("j-nat-4", l, r, || vec![n(p), n(g)], n);
        }
        let d = m.dom(g)[0];
        let l = m.jmap(g);
        let r = m.jmap(m.id_map(d)).and_then(|j1| m.sub(g, 1, j1));
        s.eq("j-derived-g", l, r, || vec![n(g)], n);
    }
    for p in cat.morphisms() {
        for q in cat.arrows_from(cat.cod(p)) {
            let l = m.jmap(p).and_then(|jp| m.sub(q, 1, jp));
            let r = j(cat.comp(q, p));
            s.eq("j-nat-3", l, r, || vec![n(q), n(p)], n);
        }
        let l = m.jmap(p);
        let r = m.jmap(m.id_map(cat.dom(p))).and_then(|j1| m.sub(p, 1, j1));
        s.eq("j-derived-q", l, r, || vec![n(p)], n);
    }
    for &v in m.maps_of((Loose, 0)) {
        for p in cat.arrows_from(m.cod(v)) {
            let l = m.jmap(p).and_then(|jp| m.sub(jp, 1, v));
            let r = m.sub(p, 1, v);
            s.eq("j-nat-5", l, r, || vec![n(p), n(v)], n);
        }
    }
    for ar in [1, 2] {
        for &f in m.maps_of((Tight, ar)) {
            for i in 1..=ar {
                for p in cat.arrows_to(m.dom(f)[i - 1]) {
                    let l = j(m.sub(f, i, p));
                    let r = m.jmap(f).and_then(|jf| m.sub(jf, i, p));
                    s.eq("j-action", l, r, || vec![n(f), at(i), n(p)], n);
                }
            }
            if ar == 2 {
                for q in cat.arrows_from(m.cod(f)) {
                    let l = j(m.sub(q, 1, f));
                    let r = m.jmap(f).and_then(|jf| m.sub(q, 1, jf));
                    s.eq("j-action", l, r, || vec![n(q), n(f)], n);
                }
            }
        }
    }
}

/// View a plain structure as a skew one with `j` the identity.
///
/// Loose copies of unary and binary maps get the prefix `l.`; nullary maps
/// are shared.
pub fn embed_plain(m: &ShortMulticategory) -> Result<ShortSkewMulticategory> {
    let cat = m.cat().clone();
    let mut b = Multi::builder(cat.clone(), true);
    let mut tight_of = std::collections::HashMap::new();
    let mut loose_of = std::collections::HashMap::new();
    let mut plain_of = std::collections::HashMap::new();
    for f in 0..m.map_count() {
        let i = m.info(f).clone();
        let ar = i.dom.len();
        let t = if m.is_morphism(f) {
            Some(f)
        } else if ar >= 2 {
            Some(b.add_map(&i.name, Tight, i.dom.clone(), i.cod)?)
        } else {
            None
        };
        if let Some(t) = t {
            tight_of.insert(f, t);
            plain_of.insert((Tight, t), f);
        }
        let l = match ar {
            0 => Some(b.add_map(&i.name, Loose, vec![], i.cod)?),
            1 | 2 => Some(b.add_map(&format!("l.{}", i.name), Loose, i.dom.clone(), i.cod)?),
            _ => None,
        };
        if let Some(l) = l {
            loose_of.insert(f, l);
            plain_of.insert((Loose, l), f);
        }
    }
    let skel = b.finish()?;
    let back = |x: MapId| plain_of[&(skel.flavour(x), x)];
    let lift = |r: MapId, fl: crate::multi::Flavour| -> MapId {
        if fl == Tight {
            tight_of[&r]
        } else {
            loose_of[&r]
        }
    };
    let mut b = skel.to_builder();
    for (g, i, f) in skel.required_substs() {
        let r = m.subst(back(g), i, back(f))?;
        let (fl, _, _) = skel.expected(g, i, f);
        b.subst(g, i, f, lift(r, fl))?;
    }
    for f in skel.actionable() {
        for i in 1..=skel.arity(f) {
            for p in cat.arrows_to(skel.dom(f)[i - 1]) {
                let r = m.subst(back(f), i, p)?;
                b.pre(f, i, p, lift(r, skel.flavour(f)))?;
            }
        }
        for q in cat.arrows_from(skel.cod(f)) {
            let r = m.subst(q, 1, back(f))?;
            b.post(q, f, lift(r, skel.flavour(f)))?;
        }
    }
    for ar in [1, 2] {
        for &f in skel.maps_of((Tight, ar)) {
            b.j(f, loose_of[&back(f)])?;
        }
    }
    ShortSkewMulticategory::new(b.finish()?)
}
