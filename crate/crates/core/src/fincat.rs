//! Finite categories and functors as explicit tables.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::report::{self, Report, Task};

pub type Obj = usize;
pub type Mor = usize;

pub const DEFAULT_ISO_BOUND: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub name: String,
    pub dom: Obj,
    pub cod: Obj,
}

/// A finite category. Objects and morphisms are kept in lexicographic order
/// of their names, so index order is canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    ids: Vec<Mor>,
    /// `comp[g * n + f]` is `g . f`; `None` off composable pairs or where
    /// the input left a hole.
    comp: Vec<Option<Mor>>,
    homs: Vec<Vec<Mor>>,
    obj_index: HashMap<String, Obj>,
    mor_index: HashMap<String, Mor>,
}

impl FinCategory {
    /// Build from named tables. `comp` lists `(g, f, g.f)`.
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<(String, String, String)>,
        ids: Vec<(String, String)>,
        comp: Vec<(String, String, String)>,
    ) -> Result<Self> {
        let mut objects = objects;
        objects.sort();
        if let Some(w) = objects.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::MalformedTable(format!("duplicate object `{}`", w[0])));
        }
        let obj_index: HashMap<String, Obj> =
            objects.iter().enumerate().map(|(k, o)| (o.clone(), k)).collect();
        let mut morphisms = morphisms;
        morphisms.sort();
        if let Some(w) = morphisms.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::MalformedTable(format!("duplicate morphism `{}`", w[0].0)));
        }
        let obj = |s: &str| {
            obj_index
                .get(s)
                .copied()
                .ok_or_else(|| Error::DanglingId(format!("object `{s}`")))
        };
        let mut mors = Vec::with_capacity(morphisms.len());
        for (name, d, c) in &morphisms {
            if obj_index.contains_key(name) {
                return Err(Error::MalformedTable(format!(
                    "`{name}` names both an object and a morphism"
                )));
            }
            mors.push(Morphism {
                name: name.clone(),
                dom: obj(d)?,
                cod: obj(c)?,
            });
        }
        let mor_index: HashMap<String, Mor> =
            mors.iter().enumerate().map(|(k, m)| (m.name.clone(), k)).collect();
        let mor = |s: &str| {
            mor_index
                .get(s)
                .copied()
                .ok_or_else(|| Error::MalformedTable(format!("unknown morphism `{s}`")))
        };
        let mut idv = vec![None; objects.len()];
        for (o, m) in &ids {
            let (o, m) = (obj(o)?, mor(m)?);
            if idv[o].is_some() {
                return Err(Error::MalformedTable(format!(
                    "two identities for `{}`",
                    objects[o]
                )));
            }
            idv[o] = Some(m);
        }
        let ids: Vec<Mor> = idv
            .into_iter()
            .enumerate()
            .map(|(o, m)| {
                m.ok_or_else(|| Error::MalformedTable(format!("no identity for `{}`", objects[o])))
            })
            .collect::<Result<_>>()?;
        let n = mors.len();
        let mut table = vec![None; n * n];
        for (g, f, h) in &comp {
            let (g, f, h) = (mor(g)?, mor(f)?, mor(h)?);
            if mors[f].cod != mors[g].dom {
                return Err(Error::MalformedTable(format!(
                    "composite key ({}, {}) is not composable",
                    mors[g].name, mors[f].name
                )));
            }
            if table[g * n + f].is_some() {
                return Err(Error::MalformedTable(format!(
                    "two composites for ({}, {})",
                    mors[g].name, mors[f].name
                )));
            }
            table[g * n + f] = Some(h);
        }
        let no = objects.len();
        let mut homs = vec![Vec::new(); no * no];
        for (k, m) in mors.iter().enumerate() {
            homs[m.dom * no + m.cod].push(k);
        }
        Ok(FinCategory {
            objects,
            morphisms: mors,
            ids,
            comp: table,
            homs,
            obj_index,
            mor_index,
        })
    }

    /// Discrete category; the identity on `x` is called `id<x>`.
    pub fn discrete(objects: &[&str]) -> Self {
        Self::poset(objects, |a, b| a == b, |a, _| format!("id{a}"))
    }

    /// Thin category from a preorder; `name(a, b)` names the arrow a -> b.
    pub fn poset(
        objects: &[&str],
        leq: impl Fn(&str, &str) -> bool,
        name: impl Fn(&str, &str) -> String,
    ) -> Self {
        let objs: Vec<String> = objects.iter().map(|s| s.to_string()).collect();
        let mut mors = Vec::new();
        let mut ids = Vec::new();
        for a in objects {
            for b in objects {
                if leq(a, b) {
                    mors.push((name(a, b), a.to_string(), b.to_string()));
                    if a == b {
                        ids.push((a.to_string(), name(a, b)));
                    }
                }
            }
        }
        let mut comp = Vec::new();
        for a in objects {
            for b in objects {
                for c in objects {
                    if leq(a, b) && leq(b, c) {
                        comp.push((name(b, c), name(a, b), name(a, c)));
                    }
                }
            }
        }
        Self::new(objs, mors, ids, comp).expect("preorder yields a category")
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> std::ops::Range<Obj> {
        0..self.objects.len()
    }

    pub fn morphisms(&self) -> std::ops::Range<Mor> {
        0..self.morphisms.len()
    }

    pub fn obj_name(&self, o: Obj) -> &str {
        &self.objects[o]
    }

    pub fn mor_name(&self, m: Mor) -> &str {
        &self.morphisms[m].name
    }

    pub fn object(&self, name: &str) -> Option<Obj> {
        self.obj_index.get(name).copied()
    }

    pub fn morphism(&self, name: &str) -> Option<Mor> {
        self.mor_index.get(name).copied()
    }

    pub fn dom(&self, m: Mor) -> Obj {
        self.morphisms[m].dom
    }

    pub fn cod(&self, m: Mor) -> Obj {
        self.morphisms[m].cod
    }

    pub fn id(&self, o: Obj) -> Mor {
        self.ids[o]
    }

    pub fn is_id(&self, m: Mor) -> bool {
        self.ids[self.dom(m)] == m
    }

    pub fn hom(&self, a: Obj, b: Obj) -> &[Mor] {
        &self.homs[a * self.objects.len() + b]
    }

    /// Morphisms with the given domain, in canonical order.
    pub fn arrows_from(&self, a: Obj) -> impl Iterator<Item = Mor> + '_ {
        self.morphisms().filter(move |&m| self.dom(m) == a)
    }

    /// Morphisms with the given codomain, in canonical order.
    pub fn arrows_to(&self, b: Obj) -> impl Iterator<Item = Mor> + '_ {
        self.morphisms().filter(move |&m| self.cod(m) == b)
    }

    /// `g . f` when the pair is composable and the table has an entry.
    pub fn comp(&self, g: Mor, f: Mor) -> Option<Mor> {
        if self.cod(f) != self.dom(g) {
            return None;
        }
        self.comp[g * self.morphisms.len() + f]
    }

    /// Composite of a chain written right to left: `chain(&[h, g, f]) = h.g.f`.
    pub fn chain(&self, ms: &[Mor]) -> Option<Mor> {
        let (&last, rest) = ms.split_last()?;
        rest.iter().rev().try_fold(last, |acc, &m| self.comp(m, acc))
    }

    pub fn is_iso(&self, m: Mor) -> bool {
        self.inverse(m).is_some()
    }

    pub fn inverse(&self, m: Mor) -> Option<Mor> {
        let (a, b) = (self.dom(m), self.cod(m));
        self.hom(b, a).iter().copied().find(|&k| {
            self.comp(k, m) == Some(self.id(a)) && self.comp(m, k) == Some(self.id(b))
        })
    }

    /// Table listing: `(g, f, g.f)` for every stored composite.
    pub fn comp_entries(&self) -> Vec<(Mor, Mor, Mor)> {
        let n = self.morphisms.len();
        let mut v = Vec::new();
        for g in 0..n {
            for f in 0..n {
                if let Some(h) = self.comp[g * n + f] {
                    v.push((g, f, h));
                }
            }
        }
        v
    }

    /// Copy with one composite replaced; used by mutation fixtures.
    pub fn with_comp(&self, g: Mor, f: Mor, h: Mor) -> Self {
        let mut c = self.clone();
        let n = c.morphisms.len();
        c.comp[g * n + f] = Some(h);
        c
    }
}

/// Functor between finite categories, as two index maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinFunctor {
    pub obj_map: Vec<Obj>,
    pub mor_map: Vec<Mor>,
}

impl FinFunctor {
    pub fn identity(c: &FinCategory) -> Self {
        FinFunctor {
            obj_map: c.objects().collect(),
            mor_map: c.morphisms().collect(),
        }
    }

    pub fn compose(&self, then: &FinFunctor) -> FinFunctor {
        FinFunctor {
            obj_map: self.obj_map.iter().map(|&o| then.obj_map[o]).collect(),
            mor_map: self.mor_map.iter().map(|&m| then.mor_map[m]).collect(),
        }
    }
}

pub fn validate_category(c: &FinCategory) -> Report {
    validate_category_jobs(c, 1)
}

pub fn validate_category_jobs(c: &FinCategory, jobs: usize) -> Report {
    let name = |m: Mor| c.mor_name(m).to_string();
    let tasks: Vec<Task> = vec![
        Box::new(move |s| {
            for g in c.morphisms() {
                for f in c.morphisms() {
                    if c.cod(f) != c.dom(g) {
                        continue;
                    }
                    let h = c.comp(g, f);
                    let typed = h.filter(|&h| c.dom(h) == c.dom(f) && c.cod(h) == c.cod(g));
                    s.record("cat-typing", typed.is_some(), || {
                        (
                            vec![name(g), name(f)],
                            h.map_or_else(|| report::UNDEFINED.into(), name),
                            format!("{}->{}", c.obj_name(c.dom(f)), c.obj_name(c.cod(g))),
                        )
                    });
                }
            }
        }),
        Box::new(move |s| {
            for f in c.morphisms() {
                let (a, b) = (c.dom(f), c.cod(f));
                s.eq("cat-identity", c.comp(c.id(b), f), Some(f), || vec![name(c.id(b)), name(f)], name);
                s.eq("cat-identity", c.comp(f, c.id(a)), Some(f), || vec![name(f), name(c.id(a))], name);
            }
        }),
        Box::new(move |s| {
            for h in c.morphisms() {
                for g in c.arrows_to(c.dom(h)) {
                    for f in c.arrows_to(c.dom(g)) {
                        let l = c.comp(g, f).and_then(|gf| c.comp(h, gf));
                        let r = c.comp(h, g).and_then(|hg| c.comp(hg, f));
                        s.eq("cat-assoc", l, r, || vec![name(h), name(g), name(f)], name);
                    }
                }
            }
        }),
    ];
    report::run("category", tasks, jobs)
}

/// Check that `f` is a functor `src -> tgt`. Dangling indices are errors.
pub fn validate_functor(src: &FinCategory, tgt: &FinCategory, f: &FinFunctor) -> Result<Report> {
    if f.obj_map.len() != src.object_count() || f.mor_map.len() != src.morphism_count() {
        return Err(Error::MalformedTable("functor tables do not cover the source".into()));
    }
    if f.obj_map.iter().any(|&o| o >= tgt.object_count())
        || f.mor_map.iter().any(|&m| m >= tgt.morphism_count())
    {
        return Err(Error::DanglingId("functor image outside the target".into()));
    }
    let name = |m: Mor| tgt.mor_name(m).to_string();
    let sname = |m: Mor| src.mor_name(m).to_string();
    let tasks: Vec<Task> = vec![Box::new(move |s| {
        for m in src.morphisms() {
            let fm = f.mor_map[m];
            let ok = tgt.dom(fm) == f.obj_map[src.dom(m)] && tgt.cod(fm) == f.obj_map[src.cod(m)];
            s.record("functor-typing", ok, || {
                (
                    vec![sname(m)],
                    name(fm),
                    format!(
                        "{}->{}",
                        tgt.obj_name(f.obj_map[src.dom(m)]),
                        tgt.obj_name(f.obj_map[src.cod(m)])
                    ),
                )
            });
        }
        for o in src.objects() {
            s.eq(
                "functor-identity",
                Some(f.mor_map[src.id(o)]),
                Some(tgt.id(f.obj_map[o])),
                || vec![src.obj_name(o).to_string()],
                name,
            );
        }
        for (g, h, gh) in src.comp_entries() {
            let l = Some(f.mor_map[gh]);
            let r = tgt.comp(f.mor_map[g], f.mor_map[h]);
            s.eq("functor-comp", l, r, || vec![sname(g), sname(h)], name);
        }
    })];
    Ok(report::run("functor", tasks, 1))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for k in 0..used.len() {
            if !used[k] {
                used[k] = true;
                prefix.push(k);
                go(prefix, used, out);
                prefix.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Every isomorphism `c -> d`, in canonical order (object bijections in
/// lexicographic order, then morphism assignments by backtracking).
pub fn isomorphisms(c: &FinCategory, d: &FinCategory, bound: usize) -> Result<Vec<FinFunctor>> {
    for (what, k) in [("source", c.object_count()), ("target", d.object_count())] {
        if k > bound {
            return Err(Error::SearchBoundExceeded {
                what: format!("{what} object count"),
                size: k,
                bound,
            });
        }
    }
    let mut out = Vec::new();
    if c.object_count() != d.object_count() || c.morphism_count() != d.morphism_count() {
        return Ok(out);
    }
    for perm in permutations(c.object_count()) {
        let sizes_match = c.objects().all(|a| {
            c.objects()
                .all(|b| c.hom(a, b).len() == d.hom(perm[a], perm[b]).len())
        });
        if !sizes_match {
            continue;
        }
        let mut assign: Vec<Option<Mor>> = vec![None; c.morphism_count()];
        let mut used = vec![false; d.morphism_count()];
        for a in c.objects() {
            assign[c.id(a)] = Some(d.id(perm[a]));
            used[d.id(perm[a])] = true;
        }
        search_mor(c, d, &perm, 0, &mut assign, &mut used, &mut out);
    }
    Ok(out)
}

fn search_mor(
    c: &FinCategory,
    d: &FinCategory,
    perm: &[Obj],
    k: Mor,
    assign: &mut Vec<Option<Mor>>,
    used: &mut Vec<bool>,
    out: &mut Vec<FinFunctor>,
) {
    if k == c.morphism_count() {
        out.push(FinFunctor {
            obj_map: perm.to_vec(),
            mor_map: assign.iter().map(|m| m.unwrap()).collect(),
        });
        return;
    }
    if assign[k].is_some() {
        if consistent(c, d, assign, k) {
            search_mor(c, d, perm, k + 1, assign, used, out);
        }
        return;
    }
    for &t in d.hom(perm[c.dom(k)], perm[c.cod(k)]) {
        if used[t] {
            continue;
        }
        assign[k] = Some(t);
        used[t] = true;
        if consistent(c, d, assign, k) {
            search_mor(c, d, perm, k + 1, assign, used, out);
        }
        used[t] = false;
        assign[k] = None;
    }
}

/// Composition constraints among the morphisms assigned so far that involve `k`.
fn consistent(c: &FinCategory, d: &FinCategory, assign: &[Option<Mor>], k: Mor) -> bool {
    let known = |m: Mor| assign[m];
    for other in c.morphisms() {
        let Some(o) = known(other) else { continue };
        let kk = known(k).unwrap();
        for (g, f, fg, ff) in [(k, other, kk, o), (other, k, o, kk)] {
            if let Some(h) = c.comp(g, f) {
                if let Some(hh) = known(h) {
                    if d.comp(fg, ff) != Some(hh) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// First isomorphism together with its inverse.
pub fn find_isomorphism(
    c: &FinCategory,
    d: &FinCategory,
    bound: usize,
) -> Result<Option<(FinFunctor, FinFunctor)>> {
    let isos = isomorphisms(c, d, bound)?;
    Ok(isos.into_iter().next().map(|f| {
        let mut inv = FinFunctor {
            obj_map: vec![0; d.object_count()],
            mor_map: vec![0; d.morphism_count()],
        };
        for (a, &b) in f.obj_map.iter().enumerate() {
            inv.obj_map[b] = a;
        }
        for (m, &n) in f.mor_map.iter().enumerate() {
            inv.mor_map[n] = m;
        }
        (f, inv)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn poset2() -> FinCategory {
        FinCategory::poset(
            &["0", "1"],
            |a, b| a <= b,
            |a, b| if a == b { format!("id{a}") } else { "le".into() },
        )
    }

    #[test]
    fn terminal_and_poset_pass() {
        let t = FinCategory::discrete(&["*"]);
        assert!(validate_category(&t).passed());
        let p = poset2();
        assert_eq!(p.morphism_count(), 3);
        let r = validate_category(&p);
        assert!(r.passed());
        assert!(r.checked() > 0);
    }

    #[test]
    fn redirected_identity_composite_is_caught() {
        let p = poset2();
        let (id1, le, id0) = (p.morphism("id1").unwrap(), p.morphism("le").unwrap(), p.morphism("id0").unwrap());
        let bad = p.with_comp(id1, le, id0);
        let r = validate_category(&bad);
        assert!(r
            .failures_in("cat-identity")
            .any(|f| f.ids == vec!["id1".to_string(), "le".to_string()]));
    }

    #[test]
    fn swap_on_poset_is_not_a_functor() {
        let p = poset2();
        let f = FinFunctor {
            obj_map: vec![1, 0],
            mor_map: vec![p.morphism("id1").unwrap(), p.morphism("id0").unwrap(), p.morphism("le").unwrap()],
        };
        let r = validate_functor(&p, &p, &f).unwrap();
        assert!(r.failures_in("functor-typing").any(|x| x.ids == vec!["le".to_string()]));
        assert!(validate_functor(&p, &p, &FinFunctor::identity(&p)).unwrap().passed());
    }

    #[test]
    fn isomorphism_search() {
        let p = poset2();
        let (f, g) = find_isomorphism(&p, &p, DEFAULT_ISO_BOUND).unwrap().unwrap();
        assert_eq!(f, FinFunctor::identity(&p));
        assert_eq!(g, FinFunctor::identity(&p));
        let d = FinCategory::discrete(&["0", "1"]);
        assert!(find_isomorphism(&p, &d, DEFAULT_ISO_BOUND).unwrap().is_none());
        let big = FinCategory::discrete(&["a", "b", "c", "d", "e", "f", "g"]);
        assert!(matches!(
            find_isomorphism(&big, &big, DEFAULT_ISO_BOUND),
            Err(Error::SearchBoundExceeded { .. })
        ));
    }

    fn group_z2(g: &str, names: (&str, &str)) -> FinCategory {
        FinCategory::new(
            vec![g.into()],
            vec![(names.0.into(), g.into(), g.into()), (names.1.into(), g.into(), g.into())],
            vec![(g.into(), names.0.into())],
            vec![
                (names.0.into(), names.0.into(), names.0.into()),
                (names.0.into(), names.1.into(), names.1.into()),
                (names.1.into(), names.0.into(), names.1.into()),
                (names.1.into(), names.1.into(), names.0.into()),
            ],
        )
        .unwrap()
    }

    #[test]
    fn z2_relabelled() {
        let a = group_z2("*", ("e", "s"));
        let b = group_z2("pt", ("one", "flip"));
        assert!(validate_category(&a).passed());
        let (f, _) = find_isomorphism(&a, &b, DEFAULT_ISO_BOUND).unwrap().unwrap();
        assert_eq!(b.mor_name(f.mor_map[a.morphism("s").unwrap()]), "flip");
        assert_eq!(isomorphisms(&a, &b, 6).unwrap().len(), 1);
    }
}
