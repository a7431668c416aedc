//! Short (skew) multicategories induced by a skew monoidal category.
//!
//! A tight map `a1 .. an -> b` is a morphism `(..(a1 a2)..) an -> b`; a loose
//! one is a morphism out of `(..(i a1)..) an`. Substitution is computed from
//! the tensor, `alpha`, `lambda` and `rho`, then tabulated.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fincat::{Mor, Obj};
use crate::multi::{Flavour, Loose, MapId, Multi, ShortMulticategory, ShortSkewMulticategory, Tight};
use crate::skewmon::SkewMonCategory;

/// Left-bracketed tensor of a nonempty list.
pub fn tensor_list(c: &SkewMonCategory, objs: &[Obj]) -> Obj {
    let mut it = objs.iter();
    let mut acc = *it.next().expect("nonempty list");
    for &o in it {
        acc = c.t(acc, o);
    }
    acc
}

/// Source object of a multimap of the given flavour over `dom`.
pub fn source(c: &SkewMonCategory, fl: Flavour, dom: &[Obj]) -> Obj {
    match fl {
        Tight => tensor_list(c, dom),
        Loose => with_unit(c, dom),
    }
}

fn with_unit(c: &SkewMonCategory, dom: &[Obj]) -> Obj {
    dom.iter().fold(c.unit, |acc, &o| c.t(acc, o))
}

/// `h . r1 . r2 ...`.
pub fn whisker(c: &SkewMonCategory, h: Mor, rest: &[Obj]) -> Mor {
    rest.iter().fold(h, |acc, &o| c.tr(acc, o))
}

/// Reassociation `T(p, a1..an) -> p . T(a1..an)` built from `alpha`.
fn kappa(c: &SkewMonCategory, p: Obj, a: &[Obj]) -> Option<Mor> {
    let cat = &c.cat;
    let mut k = cat.id(c.t(p, a[0]));
    let mut head = a[0];
    for &x in &a[1..] {
        k = cat.comp(c.alpha(p, head, x), c.tr(k, x))?;
        head = c.t(head, x);
    }
    Some(k)
}

/// A multimap seen through its underlying morphism.
#[derive(Debug, Clone, Copy)]
pub struct View<'a> {
    pub flavour: Flavour,
    pub dom: &'a [Obj],
    pub mor: Mor,
}

/// Morphism underlying `g o_i f`.
pub fn subst_mor(c: &SkewMonCategory, g: View, i: usize, f: View) -> Option<Mor> {
    let cat = &c.cat;
    let (dom, i) = match g.flavour {
        Tight => (g.dom.to_vec(), i),
        Loose => {
            let mut d = vec![c.unit];
            d.extend_from_slice(g.dom);
            (d, i + 1)
        }
    };
    let inner = if i == 1 {
        whisker(c, f.mor, &dom[1..])
    } else {
        let p = tensor_list(c, &dom[..i - 1]);
        let k = match f.flavour {
            Tight => kappa(c, p, f.dom)?,
            Loose => {
                let mut a = vec![c.unit];
                a.extend_from_slice(f.dom);
                cat.comp(kappa(c, p, &a)?, whisker(c, c.rho(p), f.dom))?
            }
        };
        whisker(c, cat.comp(c.tl(p, f.mor), k)?, &dom[i..])
    };
    cat.comp(g.mor, inner)
}

/// Morphism underlying `j f` for a tight `f`.
pub fn j_mor(c: &SkewMonCategory, dom: &[Obj], f: Mor) -> Option<Mor> {
    c.cat.comp(f, whisker(c, c.lambda(dom[0]), &dom[1..]))
}

fn tuples(n: usize, len: usize) -> Vec<Vec<Obj>> {
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

/// Multimap name `t(a,b;c)f` / `l(;c)f`.
pub fn induced_name(c: &SkewMonCategory, fl: Flavour, dom: &[Obj], cod: Obj, f: Mor) -> String {
    let cat = &c.cat;
    let d: Vec<&str> = dom.iter().map(|&o| cat.obj_name(o)).collect();
    format!("{}({};{}){}", fl.letter(), d.join(","), cat.obj_name(cod), cat.mor_name(f))
}

/// One multimap set of an induced family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSet {
    pub flavour: Flavour,
    pub dom: Vec<Obj>,
    pub cod: Obj,
    pub maps: Vec<Mor>,
}

/// Every multimap set up to `cap` inputs: tight from arity 1, loose from 0.
pub fn induced_multimap_sets(c: &SkewMonCategory, cap: usize) -> Vec<InducedSet> {
    let n = c.n();
    let mut out = Vec::new();
    for fl in [Loose, Tight] {
        let lo = if fl == Tight { 1 } else { 0 };
        for ar in lo..=cap {
            for dom in tuples(n, ar) {
                let src = source(c, fl, &dom);
                for cod in 0..n {
                    out.push(InducedSet {
                        flavour: fl,
                        dom: dom.clone(),
                        cod,
                        maps: c.cat.hom(src, cod).to_vec(),
                    });
                }
            }
        }
    }
    out
}

/// An induced skew structure together with the morphism under each multimap.
#[derive(Debug, Clone)]
pub struct Induced {
    pub multi: ShortSkewMulticategory,
    pub underlying: Vec<Mor>,
    index: HashMap<(Flavour, Vec<Obj>, Mor), MapId>,
}

impl Induced {
    pub fn find(&self, fl: Flavour, dom: &[Obj], f: Mor) -> Option<MapId> {
        self.index.get(&(fl, dom.to_vec(), f)).copied()
    }

    pub fn view(&self, x: MapId) -> View<'_> {
        View {
            flavour: self.multi.flavour(x),
            dom: self.multi.dom(x),
            mor: self.underlying[x],
        }
    }
}

pub fn induce_short_skew(c: &SkewMonCategory) -> Result<Induced> {
    let cat = &c.cat;
    let n = c.n();
    let mut b = Multi::builder(cat.clone(), true);
    let mut underlying: Vec<Mor> = cat.morphisms().collect();
    let mut index = HashMap::new();
    for f in cat.morphisms() {
        index.insert((Tight, vec![cat.dom(f)], f), f);
    }
    let shapes = [(Loose, 0), (Loose, 1), (Loose, 2), (Tight, 2), (Tight, 3), (Tight, 4)];
    for (fl, ar) in shapes {
        for dom in tuples(n, ar) {
            let src = source(c, fl, &dom);
            for cod in 0..n {
                for &f in cat.hom(src, cod) {
                    let id = b.add_map(&induced_name(c, fl, &dom, cod, f), fl, dom.clone(), cod)?;
                    underlying.push(f);
                    index.insert((fl, dom.clone(), f), id);
                }
            }
        }
    }
    let skel = b.finish()?;
    let mut b = skel.to_builder();
    let view = |x: MapId| View {
        flavour: skel.flavour(x),
        dom: skel.dom(x),
        mor: underlying[x],
    };
    let land = |fl: Flavour, dom: Vec<Obj>, h: Option<Mor>, what: &dyn Fn() -> String| -> Result<MapId> {
        let h = h.ok_or_else(|| Error::Precondition(format!("{} does not compose", what())))?;
        index
            .get(&(fl, dom, h))
            .copied()
            .ok_or_else(|| Error::Precondition(format!("{} has no multimap", what())))
    };
    for (g, i, f) in skel.required_substs() {
        let (fl, dom, _) = skel.expected(g, i, f);
        let h = subst_mor(c, view(g), i, view(f));
        let r = land(fl, dom, h, &|| format!("{} o{} {}", skel.name(g), i, skel.name(f)))?;
        b.subst(g, i, f, r)?;
    }
    for f in skel.actionable() {
        for i in 1..=skel.arity(f) {
            for p in cat.arrows_to(skel.dom(f)[i - 1]) {
                let (fl, dom, _) = skel.expected(f, i, p);
                let h = subst_mor(c, view(f), i, view(p));
                let r = land(fl, dom, h, &|| format!("{} o{} {}", skel.name(f), i, skel.name(p)))?;
                b.pre(f, i, p, r)?;
            }
        }
        for q in cat.arrows_from(skel.cod(f)) {
            let h = cat.comp(q, underlying[f]);
            let r = land(skel.flavour(f), skel.dom(f).to_vec(), h, &|| format!("{} o {}", skel.name(q), skel.name(f)))?;
            b.post(q, f, r)?;
        }
    }
    for ar in [1, 2] {
        for &f in skel.maps_of((Tight, ar)) {
            let dom = skel.dom(f).to_vec();
            let h = j_mor(c, &dom, underlying[f]);
            let r = land(Loose, dom, h, &|| format!("j {}", skel.name(f)))?;
            b.j(f, r)?;
        }
    }
    Ok(Induced {
        multi: ShortSkewMulticategory::new(b.finish()?)?,
        underlying,
        index,
    })
}

/// Collapse a skew structure whose `j` is bijective on unary and binary maps.
///
/// Tight maps of arity at least 2 and loose nullary maps survive; loose
/// unary and binary maps are read back through `j`. `rename` is applied to
/// tight names.
pub fn collapse(m: &ShortSkewMulticategory, rename: impl Fn(&str) -> String) -> Result<ShortMulticategory> {
    let cat = m.cat();
    let mut jinv: HashMap<MapId, MapId> = HashMap::new();
    for ar in [1, 2] {
        for &f in m.maps_of((Tight, ar)) {
            let l = m.jmap(f).ok_or_else(|| Error::DanglingId(format!("j {}", m.name(f))))?;
            if jinv.insert(l, f).is_some() {
                return Err(Error::Precondition(format!("j is not injective at `{}`", m.name(l))));
            }
        }
        for &l in m.maps_of((Loose, ar)) {
            if !jinv.contains_key(&l) {
                return Err(Error::Precondition(format!("j is not surjective at `{}`", m.name(l))));
            }
        }
    }
    let mut b = Multi::builder(cat.clone(), false);
    let mut to_plain: HashMap<MapId, MapId> = cat.morphisms().map(|f| (f, f)).collect();
    let mut from_plain: HashMap<MapId, MapId> = to_plain.clone();
    for f in m.actionable() {
        let i = m.info(f);
        let name = match (i.flavour, i.dom.len()) {
            (Loose, 0) => i.name.clone(),
            (Tight, _) => rename(&i.name),
            _ => continue,
        };
        let p = b.add_map(&name, i.flavour, i.dom.clone(), i.cod)?;
        to_plain.insert(f, p);
        from_plain.insert(p, f);
    }
    for (&l, &t) in &jinv {
        to_plain.insert(l, to_plain[&t]);
    }
    let skel = b.finish()?;
    let mut b = skel.to_builder();
    let down = |x: MapId| to_plain[&x];
    let up = |x: MapId| from_plain[&x];
    for (g, i, f) in skel.required_substs() {
        b.subst(g, i, f, down(m.subst(up(g), i, up(f))?))?;
    }
    for f in skel.actionable() {
        for i in 1..=skel.arity(f) {
            for p in cat.arrows_to(skel.dom(f)[i - 1]) {
                b.pre(f, i, p, down(m.subst(up(f), i, p)?))?;
            }
        }
        for q in cat.arrows_from(skel.cod(f)) {
            b.post(q, f, down(m.subst(q, 1, up(f))?))?;
        }
    }
    ShortMulticategory::new(b.finish()?)
}

/// Plain structure induced by a left normal skew monoidal category; tight
/// names `t(..)` become `m(..)`.
pub fn induce_short(c: &SkewMonCategory) -> Result<ShortMulticategory> {
    let s = induce_short_skew(c)?;
    collapse(&s.multi, |n| match n.strip_prefix('t') {
        Some(rest) => format!("m{rest}"),
        None => n.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{validate_short_multicategory, validate_short_skew};
    use crate::catalogue;

    #[test]
    fn tuples_enumerate_lexicographically() {
        assert_eq!(tuples(2, 2), vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(tuples(3, 0), vec![Vec::<Obj>::new()]);
    }

    #[test]
    fn induced_structures_validate() {
        for g in catalogue::MONOIDAL {
            let c = catalogue::skew_monoidal(g).unwrap();
            let s = induce_short_skew(&c).unwrap();
            let r = validate_short_skew(&s.multi);
            assert!(r.passed(), "{g}\n{}", r.render());
        }
    }

    #[test]
    fn left_normal_structures_collapse() {
        for g in ["terminal", "z2", "z3", "klein", "poset-skew-second", "heyting-2"] {
            let c = catalogue::skew_monoidal(g).unwrap();
            let m = induce_short(&c).unwrap();
            let r = validate_short_multicategory(&m);
            assert!(r.passed(), "{g}\n{}", r.render());
        }
        assert!(matches!(induce_short(&catalogue::poset_skew_first()), Err(Error::Precondition(_))));
    }

    #[test]
    fn z2_sets_are_singletons_on_the_sum() {
        let z = catalogue::z2();
        for set in induced_multimap_sets(&z, 4) {
            let sum = set.dom.iter().sum::<usize>() % 2;
            assert_eq!(set.maps.len(), usize::from(sum == set.cod));
        }
    }

    #[test]
    fn poset_second_tight_sets_follow_the_last_input() {
        let c = catalogue::poset_skew_second();
        for set in induced_multimap_sets(&c, 4).into_iter().filter(|s| s.flavour == Tight) {
            let last = *set.dom.last().unwrap();
            assert_eq!(set.maps.len(), usize::from(last <= set.cod));
        }
    }

    #[test]
    fn poset_first_tight_sets_follow_the_first_input() {
        let c = catalogue::poset_skew_first();
        for set in induced_multimap_sets(&c, 4) {
            let want = match set.flavour {
                Tight => set.dom[0] <= set.cod,
                Loose => true,
            };
            assert_eq!(set.maps.len(), usize::from(want));
        }
    }
}
