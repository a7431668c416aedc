//! From left representable short (skew) multicategories to skew monoidal,
//! braided and skew closed categories, and back.
//!
//! Every "the unique map such that" is solved by filtering a finite hom-set
//! with [`solve_unique`]; all outputs are fully tabulated.

use std::collections::BTreeMap;

use crate::classify::{self, certify, inverses, Certificate, ClosedScope, Inverses};
use crate::error::{Error, Result};
use crate::fincat::{isomorphisms, validate_functor, FinCategory, FinFunctor, Mor, Obj};
use crate::induce::{induce_short, induce_short_skew};
use crate::multi::{Flavour, Loose, MapId, Multi, Tight};
use crate::report::{Report, Sink};
use crate::skewmon::{
    classify_flavour, validate_braided_functor, Braiding, ClosedFunctor, LaxMonFunctor, SkewClosedCategory,
    SkewMonCategory,
};

/// The single candidate satisfying `pred`.
pub fn solve_unique<T: Copy>(what: &str, candidates: &[T], pred: impl Fn(T) -> bool) -> Result<T> {
    let mut hits = candidates.iter().copied().filter(|&x| pred(x));
    match (hits.next(), hits.next()) {
        (Some(x), None) => Ok(x),
        (None, _) => Err(Error::NoSolution(what.to_string())),
        (Some(_), Some(_)) => Err(Error::MultipleSolutions(what.to_string())),
    }
}

fn need_left(cert: &Certificate) -> Result<()> {
    if cert.left_representable {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{} is not left representable", cert.subject)))
    }
}

/// `j`, or the identity on plain structures.
fn j_or_id(m: &Multi, f: MapId) -> Option<MapId> {
    if m.is_skew() {
        m.jmap(f)
    } else {
        Some(f)
    }
}

/// `theta_{a,b,c} = theta_{ab,c} o1 theta_{a,b}`.
pub fn theta3(m: &Multi, cert: &Certificate, a: Obj, b: Obj, c: Obj) -> Option<MapId> {
    m.sub(cert.theta(cert.tensor(a, b), c), 1, cert.theta(a, b))
}

fn o(m: &Multi, x: Obj) -> String {
    m.cat().obj_name(x).to_string()
}

/// Skew monoidal structure on the underlying category: tensor from the
/// classifiers, every structure map solved against its defining equation.
pub fn ks_object(m: &Multi, cert: &Certificate) -> Result<SkewMonCategory> {
    need_left(cert)?;
    let cat = m.cat();
    let n = cat.object_count();
    let t = |a, b| cert.tensor(a, b);
    let th = |a, b| cert.theta(a, b);
    let tensor_obj: Vec<Obj> = (0..n * n).map(|k| t(k / n, k % n)).collect();
    let mut tensor_mor = Vec::with_capacity(cat.morphism_count().pow(2));
    for f in cat.morphisms() {
        for g in cat.morphisms() {
            let (a, a2, b, b2) = (cat.dom(f), cat.cod(f), cat.dom(g), cat.cod(g));
            let want = m.sub(th(a2, b2), 1, f).and_then(|x| m.sub(x, 2, g));
            let what = format!("{}.{} from theta_({},{})", cat.mor_name(f), cat.mor_name(g), o(m, a), o(m, b));
            tensor_mor.push(solve_unique(&what, cat.hom(t(a, b), t(a2, b2)), |k| {
                want.is_some() && m.sub(k, 1, th(a, b)) == want
            })?);
        }
    }
    let mut alpha = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let want = m.sub(th(a, t(b, c)), 2, th(b, c));
                let what = format!("alpha_({},{},{})", o(m, a), o(m, b), o(m, c));
                alpha.push(solve_unique(&what, cat.hom(t(t(a, b), c), t(a, t(b, c))), |k| {
                    want.is_some() && m.sub(k, 1, th(t(a, b), c)).and_then(|x| m.sub(x, 1, th(a, b))) == want
                })?);
            }
        }
    }
    let i = cert.unit();
    let u = cert.u();
    let mut lambda = Vec::with_capacity(n);
    let mut rho = Vec::with_capacity(n);
    for a in 0..n {
        let want = j_or_id(m, m.id_map(a));
        let what = format!("lambda_{}", o(m, a));
        lambda.push(solve_unique(&what, cat.hom(t(i, a), a), |k| {
            want.is_some() && m.sub(k, 1, th(i, a)).and_then(|x| m.sub(x, 1, u)) == want
        })?);
        let r = m
            .sub(th(a, i), 2, u)
            .filter(|&r| m.is_morphism(r))
            .ok_or_else(|| Error::NoSolution(format!("rho_{}", o(m, a))))?;
        rho.push(r);
    }
    Ok(SkewMonCategory {
        cat: cat.clone(),
        tensor_obj,
        tensor_mor,
        unit: i,
        alpha,
        lambda,
        rho,
    })
}

/// [`ks_object`] on a plain structure; the result is left normal.
pub fn k_object(m: &Multi, cert: &Certificate) -> Result<SkewMonCategory> {
    if m.is_skew() {
        return Err(Error::Precondition("expected a plain structure".into()));
    }
    let c = ks_object(m, cert)?;
    if !classify_flavour(&c).left_normal {
        return Err(Error::AxiomTransferFailure("lambda is not invertible".into()));
    }
    Ok(c)
}

/// Morphism of short (skew) multicategories: a functor on the underlying
/// categories and an image for every multimap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiMorphism {
    pub functor: FinFunctor,
    /// Indexed by source map; morphisms map as in `functor`.
    pub maps: Vec<MapId>,
}

impl MultiMorphism {
    pub fn identity(m: &Multi) -> Self {
        MultiMorphism {
            functor: FinFunctor::identity(m.cat()),
            maps: (0..m.map_count()).collect(),
        }
    }

    pub fn apply(&self, f: MapId) -> MapId {
        self.maps[f]
    }
}

pub fn validate_multi_morphism(src: &Multi, tgt: &Multi, f: &MultiMorphism) -> Result<Report> {
    if f.maps.len() != src.map_count() || src.is_skew() != tgt.is_skew() {
        return Err(Error::MalformedTable("morphism does not cover the source maps".into()));
    }
    let mut rep = validate_functor(src.cat(), tgt.cat(), &f.functor)?;
    let fo = |a: Obj| f.functor.obj_map[a];
    let fm = |x: MapId| f.maps[x];
    let sn = |x: MapId| src.name(x).to_string();
    let tn = |x: MapId| tgt.name(x).to_string();
    let mut s = Sink::default();
    for x in 0..src.map_count() {
        let y = fm(x);
        let ok = y < tgt.map_count()
            && tgt.flavour(y) == src.flavour(x)
            && tgt.cod(y) == fo(src.cod(x))
            && tgt.dom(y).iter().copied().eq(src.dom(x).iter().map(|&a| fo(a)))
            && (!src.is_morphism(x) || y == f.functor.mor_map[x]);
        s.record("mm-typing", ok, || (vec![sn(x)], tn(y.min(tgt.map_count() - 1)), "shape".into()));
    }
    for ((g, i, h), r) in src.subst_entries() {
        let l = tgt.sub(fm(g), i, fm(h));
        s.eq("mm-subst", l, Some(fm(r)), || vec![sn(g), format!("@{i}"), sn(h)], tn);
    }
    for ((g, i, p), r) in src.pre_entries() {
        let l = tgt.sub(fm(g), i, fm(p));
        s.eq("mm-pre", l, Some(fm(r)), || vec![sn(g), format!("@{i}"), sn(p)], tn);
    }
    for ((q, h), r) in src.post_entries() {
        let l = tgt.sub(fm(q), 1, fm(h));
        s.eq("mm-post", l, Some(fm(r)), || vec![sn(q), sn(h)], tn);
    }
    for (g, r) in src.j_entries() {
        let l = tgt.jmap(fm(g));
        s.eq("mm-j", l, Some(fm(r)), || vec![sn(g)], tn);
    }
    rep.absorb(s.into_report("multi-morphism"));
    rep.subject = "multi-morphism".into();
    Ok(rep)
}

/// Both ends of a morphism with their certificates.
pub struct Ends<'a> {
    pub src: &'a Multi,
    pub src_cert: &'a Certificate,
    pub tgt: &'a Multi,
    pub tgt_cert: &'a Certificate,
}

/// `f2` with `f2 o1 theta = F(theta)` and `f0` with `f0 o u = F(u)`.
pub fn k_morphism(e: &Ends, f: &MultiMorphism) -> Result<LaxMonFunctor> {
    need_left(e.src_cert)?;
    need_left(e.tgt_cert)?;
    let (m, d) = (e.src, e.tgt);
    let fo = |a: Obj| f.functor.obj_map[a];
    let n = m.cat().object_count();
    let mut f2 = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let th = e.tgt_cert.theta(fo(a), fo(b));
            let want = f.apply(e.src_cert.theta(a, b));
            let hom = d.cat().hom(e.tgt_cert.tensor(fo(a), fo(b)), fo(e.src_cert.tensor(a, b)));
            f2.push(solve_unique(&format!("f2_({},{})", o(m, a), o(m, b)), hom, |k| d.sub(k, 1, th) == Some(want))?);
        }
    }
    let want = f.apply(e.src_cert.u());
    let hom = d.cat().hom(e.tgt_cert.unit(), fo(e.src_cert.unit()));
    let f0 = solve_unique("f0", hom, |k| d.sub(k, 1, e.tgt_cert.u()) == Some(want))?;
    Ok(LaxMonFunctor {
        functor: f.functor.clone(),
        f0,
        f2,
    })
}

/// Rebuild the multimap components from `(F, f0, f2)`.
pub fn k_morphism_inverse(e: &Ends, t: &LaxMonFunctor) -> Result<MultiMorphism> {
    need_left(e.src_cert)?;
    need_left(e.tgt_cert)?;
    let (m, d) = (e.src, e.tgt);
    let inv: Inverses = inverses(m, e.src_cert)?;
    let n = m.cat().object_count();
    let fo = |a: Obj| t.functor.obj_map[a];
    let fm = |x: Mor| t.functor.mor_map[x];
    let f2 = |a: Obj, b: Obj| t.f2[a * n + b];
    let mut maps: Vec<Option<MapId>> = vec![None; m.map_count()];
    let order: [(Flavour, usize); 7] = [(Tight, 1), (Loose, 0), (Tight, 2), (Tight, 3), (Tight, 4), (Loose, 1), (Loose, 2)];
    let missing = |what: &str, x: MapId| Error::AxiomTransferFailure(format!("{what} undefined for {}", m.name(x)));
    for shape in order {
        let shape = (m.norm(shape.0, shape.1), shape.1);
        for &x in m.maps_of(shape) {
            if maps[x].is_some() {
                continue;
            }
            let dom = m.dom(x);
            let img = match shape {
                _ if m.is_morphism(x) => Some(fm(x)),
                (_, 0) => {
                    let v = inv.star.get(&x).ok_or_else(|| missing("star", x))?;
                    d.cat().comp(fm(*v), t.f0).and_then(|k| d.sub(k, 1, e.tgt_cert.u()))
                }
                (Tight, 2) => {
                    let g = inv.prime.get(&x).ok_or_else(|| missing("prime", x))?;
                    let th = e.tgt_cert.theta(fo(dom[0]), fo(dom[1]));
                    d.cat().comp(fm(*g), f2(dom[0], dom[1])).and_then(|k| d.sub(k, 1, th))
                }
                (Tight, _) => {
                    let h = inv.prime.get(&x).ok_or_else(|| missing("prime", x))?;
                    let th = e.src_cert.theta(dom[0], dom[1]);
                    match (maps[*h], maps[th]) {
                        (Some(a), Some(b)) => d.sub(a, 1, b),
                        _ => None,
                    }
                }
                (Loose, _) => {
                    let q = inv.star.get(&x).ok_or_else(|| missing("star", x))?;
                    match (maps[*q], maps[e.src_cert.u()]) {
                        (Some(a), Some(b)) => d.sub(a, 1, b),
                        _ => None,
                    }
                }
            };
            maps[x] = Some(img.ok_or_else(|| missing("image", x))?);
        }
    }
    let f = MultiMorphism {
        functor: t.functor.clone(),
        maps: maps.into_iter().map(|x| x.expect("every shape visited")).collect(),
    };
    let rep = validate_multi_morphism(m, d, &f)?;
    if !rep.passed() {
        let fams: Vec<&str> = rep.counts.iter().filter(|(_, c)| c.failed > 0).map(|(k, _)| k.as_str()).collect();
        return Err(Error::AxiomTransferFailure(format!("reconstructed morphism fails {}", fams.join(", "))));
    }
    Ok(f)
}

/// Outcome of comparing representability with monoidality of `K`.
#[derive(Debug, Clone)]
pub struct RepresentableMonoidal {
    pub representable: bool,
    pub monoidal: bool,
    pub report: Report,
}

/// Both directions: inverses of `alpha` and `rho` built from the positional
/// bijections, and positional inverses rebuilt from `alpha^-1`, `rho^-1`.
pub fn check_representable_iff_monoidal(m: &Multi, cert: &Certificate) -> Result<RepresentableMonoidal> {
    need_left(cert)?;
    let representable = cert
        .representable
        .ok_or_else(|| Error::Precondition("expected a plain structure".into()))?;
    let k = k_object(m, cert)?;
    let monoidal = classify_flavour(&k).monoidal;
    let cat = m.cat();
    let n = cat.object_count();
    let (t, th) = (|a, b| cert.tensor(a, b), |a, b| cert.theta(a, b));
    let (i, u) = (cert.unit(), cert.u());
    let nm = |x: Mor| cat.mor_name(x).to_string();
    let mut s = Sink::default();
    let mut notes = vec![format!("representable {representable} monoidal {monoidal}")];
    if representable {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let ids = || vec![o(m, a), o(m, b), o(m, c)];
                    let th3 = theta3(m, cert, a, b, c);
                    let x2 = solve_unique("alpha inverse, second slot", m.set(Tight, &[a, t(b, c)], t(t(a, b), c)), |g| {
                        th3.is_some() && m.sub(g, 2, th(b, c)) == th3
                    })?;
                    let inv = solve_unique("alpha inverse, first slot", cat.hom(t(a, t(b, c)), t(t(a, b), c)), |q| {
                        m.sub(q, 1, th(a, t(b, c))) == Some(x2)
                    })?;
                    let al = k.alpha(a, b, c);
                    s.eq("alpha-inverse", cat.comp(inv, al), Some(cat.id(t(t(a, b), c))), ids, nm);
                    s.eq("alpha-inverse", cat.comp(al, inv), Some(cat.id(t(a, t(b, c)))), ids, nm);
                }
            }
            let inv = solve_unique("rho inverse", cat.hom(t(a, i), a), |q| {
                m.sub(q, 1, th(a, i)).and_then(|x| m.sub(x, 2, u)) == Some(m.id_map(a))
            })?;
            let r = k.rho(a);
            s.eq("rho-inverse", cat.comp(inv, r), Some(cat.id(a)), || vec![o(m, a)], nm);
            s.eq("rho-inverse", cat.comp(r, inv), Some(cat.id(t(a, i))), || vec![o(m, a)], nm);
        }
    }
    let mut rebuilt = true;
    if monoidal {
        let inv_of = |x: Mor| cat.inverse(x);
        let inv = inverses(m, cert)?;
        let mn = |x: MapId| m.name(x).to_string();
        for x in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let ainv = inv_of(k.alpha(x, b, c));
                    for z in 0..n {
                        let back = |h: MapId| {
                            let h2 = inv.prime.get(&h).and_then(|p| inv.prime.get(p)).copied()?;
                            m.sub(cat.comp(h2, ainv?)?, 1, th(x, t(b, c)))
                        };
                        for &g in m.set(Tight, &[x, t(b, c)], z) {
                            let l = m.sub(g, 2, th(b, c)).and_then(back);
                            rebuilt &= l == Some(g);
                            s.eq("rebuilt-theta-2", l, Some(g), || vec![mn(g)], mn);
                        }
                        for &h in m.set(Tight, &[x, b, c], z) {
                            let l = back(h).and_then(|g| m.sub(g, 2, th(b, c)));
                            rebuilt &= l == Some(h);
                            s.eq("rebuilt-theta-2", l, Some(h), || vec![mn(h)], mn);
                        }
                    }
                }
            }
            let rinv = inv_of(k.rho(x));
            for z in 0..n {
                let back = |q: Mor| m.sub(cat.comp(q, rinv?)?, 1, th(x, i));
                for &g in m.set(Tight, &[x, i], z) {
                    let l = m.sub(g, 2, u).and_then(back);
                    rebuilt &= l == Some(g);
                    s.eq("rebuilt-unit-2", l, Some(g), || vec![mn(g)], mn);
                }
                for &q in cat.hom(x, z) {
                    let l = back(q).and_then(|g| m.sub(g, 2, u));
                    rebuilt &= l == Some(q);
                    s.eq("rebuilt-unit-2", l, Some(q), || vec![mn(q)], mn);
                }
            }
        }
        notes.push(format!("positional bijections rebuilt {rebuilt}"));
    }
    let mut report = s.into_report("representable-monoidal");
    report.notes = notes;
    if representable != monoidal || (monoidal && !rebuilt) || !report.passed() {
        return Err(Error::InconsistentVerdicts(format!(
            "representable {representable}, monoidal {monoidal}, rebuilt {rebuilt}"
        )));
    }
    Ok(RepresentableMonoidal {
        representable,
        monoidal,
        report,
    })
}

/// Evaluation derived from the counit of `K`, compared with the searched one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedEval {
    pub b: Obj,
    pub c: Obj,
    pub obj: Obj,
    pub e: MapId,
    pub certifies: bool,
    /// Equal to the searched evaluation up to the unique comparison iso.
    pub matches: bool,
}

#[derive(Debug, Clone)]
pub struct ClosedTransfer {
    pub multi_closed: bool,
    pub category_closed: bool,
    pub derived: Vec<DerivedEval>,
    pub report: Report,
}

/// Closedness of the multicategory against closedness of its `K`.
pub fn transport_closed(m: &Multi, cert: &Certificate) -> Result<ClosedTransfer> {
    let k = ks_object(m, cert)?;
    let fl = classify_flavour(&k);
    let mut s = Sink::default();
    let mut derived = Vec::new();
    if fl.closed {
        for h in &fl.homs {
            let e = m
                .sub(h.counit, 1, cert.theta(h.hom, h.b))
                .ok_or_else(|| Error::NoSolution("derived evaluation".into()))?;
            let certifies = classify::certify_hom(m, h.b, h.c, h.hom, e, ClosedScope::Full);
            let matches = cert.homs.as_ref().is_some_and(|_| {
                let searched = cert.hom(h.b, h.c);
                m.cat()
                    .hom(searched.obj, h.hom)
                    .iter()
                    .filter(|&&q| m.cat().is_iso(q) && m.sub(e, 1, q) == Some(searched.e))
                    .count()
                    == 1
            });
            s.record("derived-eval", certifies, || (vec![o(m, h.b), o(m, h.c)], m.name(e).into(), "evaluation".into()));
            s.record("derived-eval-match", matches, || {
                (vec![o(m, h.b), o(m, h.c)], m.name(e).into(), "searched evaluation".into())
            });
            derived.push(DerivedEval { b: h.b, c: h.c, obj: h.hom, e, certifies, matches });
        }
    }
    let out = ClosedTransfer {
        multi_closed: cert.closed(),
        category_closed: fl.closed,
        derived,
        report: s.into_report("closed-transfer"),
    };
    if out.multi_closed != out.category_closed || !out.report.passed() {
        return Err(Error::InconsistentVerdicts(format!(
            "multicategory closed {}, category closed {}",
            out.multi_closed, out.category_closed
        )));
    }
    Ok(out)
}

/// Skew variant; the evaluation bijections cover the loose families too.
pub fn transport_closed_skew(m: &Multi, cert: &Certificate) -> Result<ClosedTransfer> {
    if !m.is_skew() {
        return Err(Error::Precondition("expected a skew structure".into()));
    }
    transport_closed(m, cert)
}

/// `beta^3_2`, `beta^4_2`, `beta^4_3` on tight maps.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ShortBraiding {
    pub b32: BTreeMap<MapId, MapId>,
    pub b42: BTreeMap<MapId, MapId>,
    pub b43: BTreeMap<MapId, MapId>,
}

impl ShortBraiding {
    pub fn b32(&self, f: MapId) -> Option<MapId> {
        self.b32.get(&f).copied()
    }

    pub fn b42(&self, f: MapId) -> Option<MapId> {
        self.b42.get(&f).copied()
    }

    pub fn b43(&self, f: MapId) -> Option<MapId> {
        self.b43.get(&f).copied()
    }
}

fn permuted(dom: &[Obj], k: usize) -> Vec<Obj> {
    let mut d = dom.to_vec();
    d.swap(k - 1, k);
    d
}

/// Typing, invertibility, naturality and the six braiding equations; the
/// symmetry equation is recorded as a separate family.
pub fn validate_short_braiding(m: &Multi, beta: &ShortBraiding) -> Report {
    let mut s = Sink::default();
    let nm = |x: MapId| m.name(x).to_string();
    let tables: [(&str, &BTreeMap<MapId, MapId>, usize, usize); 3] =
        [("b32", &beta.b32, 3, 2), ("b42", &beta.b42, 4, 2), ("b43", &beta.b43, 4, 3)];
    for (tag, table, ar, k) in tables {
        let maps = m.maps_of((Tight, ar));
        let mut seen = std::collections::BTreeSet::new();
        for &f in maps {
            let y = table.get(&f).copied();
            let ok = y.is_some_and(|y| {
                y < m.map_count()
                    && m.flavour(y) == Tight
                    && m.cod(y) == m.cod(f)
                    && m.dom(y) == permuted(m.dom(f), k).as_slice()
            });
            s.record("braid-typing", ok, || (vec![tag.into(), nm(f)], y.map_or("!undefined".into(), nm), "permuted".into()));
            if let Some(y) = y {
                s.record("braid-invertible", seen.insert(y), || (vec![tag.into(), nm(f)], nm(y), "fresh".into()));
            }
            for q in m.cat().arrows_from(m.cod(f)) {
                let l = m.sub(q, 1, f).and_then(|x| table.get(&x).copied());
                let r = y.and_then(|y| m.sub(q, 1, y));
                s.eq("braid-nat", l, r, || vec![tag.into(), nm(q), nm(f)], nm);
            }
            for i in 1..=ar {
                let j = if i == k { k + 1 } else if i == k + 1 { k } else { i };
                for p in m.cat().arrows_to(m.dom(f)[i - 1]) {
                    let l = m.sub(f, i, p).and_then(|x| table.get(&x).copied());
                    let r = y.and_then(|y| m.sub(y, j, p));
                    s.eq("braid-nat", l, r, || vec![tag.into(), nm(f), format!("@{i}"), nm(p)], nm);
                }
            }
        }
        if table.len() != maps.len() {
            s.record("braid-typing", false, || (vec![tag.into()], table.len().to_string(), maps.len().to_string()));
        }
    }
    let b32 = |x: MapId| beta.b32(x);
    let b42 = |x: MapId| beta.b42(x);
    let b43 = |x: MapId| beta.b43(x);
    for &h in m.maps_of((Tight, 4)) {
        let l = b42(h).and_then(b43).and_then(b42);
        let r = b43(h).and_then(b42).and_then(b43);
        s.eq("braid-hexagon", l, r, || vec![nm(h)], nm);
    }
    for &g in m.maps_of((Tight, 2)) {
        for i in 1..=2 {
            for &f in m.with_cod((Tight, 3), m.dom(g)[i - 1]) {
                let l = b32(f).and_then(|bf| m.sub(g, i, bf));
                let r = m.sub(g, i, f).and_then(|x| if i == 1 { b42(x) } else { b43(x) });
                let fam = if i == 1 { "braid-3in2-first" } else { "braid-3in2-second" };
                s.eq(fam, l, r, || vec![nm(g), format!("@{i}"), nm(f)], nm);
            }
        }
    }
    for &g in m.maps_of((Tight, 3)) {
        for i in 1..=3 {
            for &f in m.with_cod((Tight, 2), m.dom(g)[i - 1]) {
                let gf = m.sub(g, i, f);
                let (l, r, fam) = match i {
                    1 => (gf.and_then(b43), b32(g).and_then(|x| m.sub(x, 1, f)), "braid-2in3-first"),
                    2 => (gf.and_then(b43).and_then(b42), b32(g).and_then(|x| m.sub(x, 3, f)), "braid-2in3-second"),
                    _ => (gf.and_then(b42).and_then(b43), b32(g).and_then(|x| m.sub(x, 2, f)), "braid-2in3-third"),
                };
                s.eq(fam, l, r, || vec![nm(g), format!("@{i}"), nm(f)], nm);
            }
        }
    }
    s.into_report("short-braiding")
}

/// The symmetry equation `beta^3_2 beta^3_2 = 1`.
pub fn is_short_symmetry(m: &Multi, beta: &ShortBraiding) -> bool {
    m.maps_of((Tight, 3)).iter().all(|&f| beta.b32(f).and_then(|x| beta.b32(x)) == Some(f))
}

/// `s` with `s o theta_{x,a,b} = beta^3_2(theta_{x,b,a})`.
pub fn s_from_short_braiding(m: &Multi, cert: &Certificate, beta: &ShortBraiding) -> Result<Braiding> {
    need_left(cert)?;
    let cat = m.cat();
    let n = cat.object_count();
    let t = |a, b| cert.tensor(a, b);
    let mut s = Vec::with_capacity(n * n * n);
    let mut s_inv = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for a in 0..n {
            for b in 0..n {
                let want = theta3(m, cert, x, b, a).and_then(|y| beta.b32(y));
                let th = theta3(m, cert, x, a, b);
                let what = format!("s_({},{},{})", o(m, x), o(m, a), o(m, b));
                let k = solve_unique(&what, cat.hom(t(t(x, a), b), t(t(x, b), a)), |k| {
                    want.is_some() && th.and_then(|th| m.sub(k, 1, th)) == want
                })?;
                s.push(k);
                s_inv.push(cat.inverse(k).ok_or_else(|| Error::AxiomTransferFailure(format!("{what} is not invertible")))?);
            }
        }
    }
    Ok(Braiding { s, s_inv })
}

/// Short braiding rebuilt from `s` through the classifier inverses.
pub fn short_braiding_from_s(m: &Multi, cert: &Certificate, s: &Braiding) -> Result<ShortBraiding> {
    need_left(cert)?;
    let cat = m.cat();
    let n = cat.object_count();
    let inv = inverses(m, cert)?;
    let t = |a, b| cert.tensor(a, b);
    let s_at = |x: Obj, a: Obj, b: Obj| s.s[(x * n + a) * n + b];
    let pr = |f: MapId| inv.prime.get(&f).copied();
    let undefined = |what: &str, f: MapId| Error::AxiomTransferFailure(format!("{what} undefined at {}", m.name(f)));
    let b32_of = |f: MapId| -> Option<MapId> {
        let d = m.dom(f);
        let (a, b, c) = (d[0], d[1], d[2]);
        let f2 = pr(pr(f)?)?;
        let k = cat.comp(f2, s_at(a, c, b))?;
        let _ = t;
        m.sub(k, 1, theta3(m, cert, a, c, b)?)
    };
    let mut out = ShortBraiding::default();
    for &f in m.maps_of((Tight, 3)) {
        out.b32.insert(f, b32_of(f).ok_or_else(|| undefined("beta^3_2", f))?);
    }
    for &g in m.maps_of((Tight, 4)) {
        let d = m.dom(g);
        let (a, b, c) = (d[0], d[1], d[2]);
        let b42 = pr(g)
            .and_then(pr)
            .zip(theta3(m, cert, a, b, c).and_then(|th| out.b32(th)))
            .and_then(|(g2, bt)| m.sub(g2, 1, bt));
        out.b42.insert(g, b42.ok_or_else(|| undefined("beta^4_2", g))?);
        let b43 = pr(g).and_then(|g1| out.b32(g1)).and_then(|x| m.sub(x, 1, cert.theta(a, b)));
        out.b43.insert(g, b43.ok_or_else(|| undefined("beta^4_3", g))?);
    }
    Ok(out)
}

/// Preservation of the three braiding families by a morphism, plus the
/// braided-functor equation for the transported lax functor.
pub fn validate_braided_transport_functor(
    e: &Ends,
    f: &MultiMorphism,
    beta_src: &ShortBraiding,
    beta_tgt: &ShortBraiding,
) -> Result<Report> {
    let (m, d) = (e.src, e.tgt);
    let mut s = Sink::default();
    let nm = |x: MapId| d.name(x).to_string();
    let fams: [(&str, usize, &BTreeMap<MapId, MapId>, &BTreeMap<MapId, MapId>); 3] = [
        ("preserve-b32", 3, &beta_src.b32, &beta_tgt.b32),
        ("preserve-b42", 4, &beta_src.b42, &beta_tgt.b42),
        ("preserve-b43", 4, &beta_src.b43, &beta_tgt.b43),
    ];
    for (fam, ar, bs, bt) in fams {
        for &x in m.maps_of((Tight, ar)) {
            let l = bs.get(&x).map(|&y| f.apply(y));
            let r = bt.get(&f.apply(x)).copied();
            s.eq(fam, l, r, || vec![m.name(x).to_string()], nm);
        }
    }
    let mut rep = s.into_report("braided-transport");
    let ok = |fam: &str| rep.failures_in(fam).next().is_none();
    if ok("preserve-b32") && !(ok("preserve-b42") && ok("preserve-b43")) {
        return Err(Error::InconsistentVerdicts("beta^3_2 is preserved but a 4-ary braiding is not".into()));
    }
    if ok("preserve-b32") {
        let t = k_morphism(e, f)?;
        let ks = ks_object(m, e.src_cert)?;
        let kd = ks_object(d, e.tgt_cert)?;
        let ss = s_from_short_braiding(m, e.src_cert, beta_src)?;
        let st = s_from_short_braiding(d, e.tgt_cert, beta_tgt)?;
        rep.absorb(validate_braided_functor(&ks, &kd, &t, &ss, &st));
    }
    rep.subject = "braided-transport".into();
    Ok(rep)
}

fn need_closed(cert: &Certificate) -> Result<()> {
    if cert.closed_with_units() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{} is not closed with units", cert.subject)))
    }
}

/// Skew closed structure: `[-,-]` from hom objects, `I`, `J`, `L` solved
/// against their defining equations. All schemas are enabled.
pub fn kcl_object(m: &Multi, cert: &Certificate) -> Result<SkewClosedCategory> {
    need_closed(cert)?;
    let cat = m.cat();
    let n = cat.object_count();
    let h = |a, b| cert.hom(a, b).obj;
    let ev = |a, b| cert.hom(a, b).e;
    let hom_obj: Vec<Obj> = (0..n * n).map(|k| h(k / n, k % n)).collect();
    let mut hom_mor = Vec::with_capacity(cat.morphism_count().pow(2));
    for f in cat.morphisms() {
        for g in cat.morphisms() {
            let (b2, b, c, c2) = (cat.dom(f), cat.cod(f), cat.dom(g), cat.cod(g));
            let want = m.sub(ev(b, c), 2, f).and_then(|x| m.sub(g, 1, x));
            let what = format!("[{},{}]", cat.mor_name(f), cat.mor_name(g));
            hom_mor.push(solve_unique(&what, cat.hom(h(b, c), h(b2, c2)), |k| {
                want.is_some() && m.sub(ev(b2, c2), 1, k) == want
            })?);
        }
    }
    let (i, u) = (cert.unit(), cert.u());
    let mut i_map = Vec::with_capacity(n);
    let mut j_map = Vec::with_capacity(n);
    for a in 0..n {
        let big_i = m
            .sub(ev(i, a), 2, u)
            .filter(|&x| m.is_morphism(x))
            .ok_or_else(|| Error::NoSolution(format!("I_{}", o(m, a))))?;
        i_map.push(big_i);
        let want = j_or_id(m, m.id_map(a));
        j_map.push(solve_unique(&format!("J_{}", o(m, a)), cat.hom(i, h(a, a)), |k| {
            want.is_some() && m.sub(ev(a, a), 1, k).and_then(|x| m.sub(x, 1, u)) == want
        })?);
    }
    let mut l_map = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let want = m.sub(ev(b, c), 2, ev(a, b));
                let what = format!("L^{}_({},{})", o(m, a), o(m, b), o(m, c));
                l_map.push(solve_unique(&what, cat.hom(h(b, c), h(h(a, b), h(a, c))), |k| {
                    want.is_some()
                        && m.sub(ev(h(a, b), h(a, c)), 1, k).and_then(|x| m.sub(ev(a, c), 1, x)) == want
                })?);
            }
        }
    }
    Ok(SkewClosedCategory {
        cat: cat.clone(),
        hom_obj,
        hom_mor,
        unit: i,
        i_map,
        j_map,
        l_map,
        schemas: SkewClosedCategory::all_schemas(),
    })
}

/// `f_{a,b}` with `e o1 f = F(e)` and `f0` with `f0 o u = F(u)`.
pub fn kcl_morphism(e: &Ends, f: &MultiMorphism) -> Result<ClosedFunctor> {
    need_closed(e.src_cert)?;
    need_closed(e.tgt_cert)?;
    let (m, d) = (e.src, e.tgt);
    let fo = |a: Obj| f.functor.obj_map[a];
    let n = m.cat().object_count();
    let mut fh = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let src_h = e.src_cert.hom(a, b);
            let tgt_h = e.tgt_cert.hom(fo(a), fo(b));
            let want = f.apply(src_h.e);
            let hom = d.cat().hom(fo(src_h.obj), tgt_h.obj);
            fh.push(solve_unique(&format!("f_({},{})", o(m, a), o(m, b)), hom, |k| {
                d.sub(tgt_h.e, 1, k) == Some(want)
            })?);
        }
    }
    let want = f.apply(e.src_cert.u());
    let hom = d.cat().hom(e.tgt_cert.unit(), fo(e.src_cert.unit()));
    let f0 = solve_unique("f0", hom, |k| d.sub(k, 1, e.tgt_cert.u()) == Some(want))?;
    Ok(ClosedFunctor {
        functor: f.functor.clone(),
        f0,
        fh,
    })
}

/// Binary substitution rebuilt from left and right evaluation: `g o1 f`
/// from `L2 g o f` and `g o2 f` from `R2 g o f`.
pub fn biclosed_subst_check(m: &Multi) -> Result<Report> {
    if m.is_skew() {
        return Err(Error::Precondition("biclosedness is checked on plain structures".into()));
    }
    let n = m.cat().object_count();
    let left = classify::find_closed_structure(m).ok_or_else(|| Error::Precondition("not left closed".into()))?;
    let right = classify::find_right_closed_structure(m).ok_or_else(|| Error::Precondition("not right closed".into()))?;
    let cat = m.cat();
    let nm = |x: MapId| m.name(x).to_string();
    let mut s = Sink::default();
    for &g in m.maps_of((Tight, 2)) {
        let (x, y, z) = (m.dom(g)[0], m.dom(g)[1], m.cod(g));
        let (el, er) = (&left[y * n + z], &right[x * n + z]);
        let l2 = solve_unique("left transpose", cat.hom(x, el.obj), |k| m.sub(el.e, 1, k) == Some(g))?;
        let r2 = solve_unique("right transpose", cat.hom(y, er.obj), |k| m.sub(er.e, 2, k) == Some(g))?;
        for &f in m.with_cod((Tight, 2), x) {
            let derived = m.sub(l2, 1, f).and_then(|k| m.sub(el.e, 1, k));
            s.eq("biclosed-first", m.sub(g, 1, f), derived, || vec![nm(g), nm(f)], nm);
        }
        for &f in m.with_cod((Tight, 2), y) {
            let derived = m.sub(r2, 1, f).and_then(|k| m.sub(er.e, 2, k));
            s.eq("biclosed-second", m.sub(g, 2, f), derived, || vec![nm(g), nm(f)], nm);
        }
    }
    Ok(s.into_report("biclosed"))
}

const ROUNDTRIP_ISO_BOUND: usize = 8;

fn transported(phi: &FinFunctor, x: usize) -> usize {
    phi.mor_map[x]
}

/// A category isomorphism carrying every table of `a` onto `b`.
pub fn compare_skew_monoidal(a: &SkewMonCategory, b: &SkewMonCategory) -> Result<Option<FinFunctor>> {
    let n = a.n();
    let ok = |p: &FinFunctor| {
        let (po, pm) = (|x: Obj| p.obj_map[x], |x: Mor| transported(p, x));
        po(a.unit) == b.unit
            && (0..n).all(|x| {
                pm(a.lambda(x)) == b.lambda(po(x))
                    && pm(a.rho(x)) == b.rho(po(x))
                    && (0..n).all(|y| {
                        po(a.t(x, y)) == b.t(po(x), po(y))
                            && (0..n).all(|z| pm(a.alpha(x, y, z)) == b.alpha(po(x), po(y), po(z)))
                    })
            })
            && a.cat.morphisms().all(|f| a.cat.morphisms().all(|g| pm(a.tm(f, g)) == b.tm(pm(f), pm(g))))
    };
    Ok(isomorphisms(&a.cat, &b.cat, ROUNDTRIP_ISO_BOUND)?.into_iter().find(ok))
}

pub fn compare_skew_closed(a: &SkewClosedCategory, b: &SkewClosedCategory) -> Result<Option<FinFunctor>> {
    let n = a.n();
    let ok = |p: &FinFunctor| {
        let (po, pm) = (|x: Obj| p.obj_map[x], |x: Mor| transported(p, x));
        po(a.unit) == b.unit
            && (0..n).all(|x| {
                pm(a.big_i(x)) == b.big_i(po(x))
                    && pm(a.big_j(x)) == b.big_j(po(x))
                    && (0..n).all(|y| {
                        po(a.h(x, y)) == b.h(po(x), po(y))
                            && (0..n).all(|z| pm(a.big_l(x, y, z)) == b.big_l(po(x), po(y), po(z)))
                    })
            })
            && a.cat.morphisms().all(|f| a.cat.morphisms().all(|g| pm(a.hm(f, g)) == b.hm(pm(f), pm(g))))
    };
    Ok(isomorphisms(&a.cat, &b.cat, ROUNDTRIP_ISO_BOUND)?.into_iter().find(ok))
}

fn iso_note(cat: &FinCategory, p: &FinFunctor) -> String {
    if p.obj_map.iter().enumerate().all(|(k, &v)| k == v) && p.mor_map.iter().enumerate().all(|(k, &v)| k == v) {
        "on the nose".into()
    } else {
        let pairs: Vec<String> = cat.objects().map(|x| format!("{}>{}", cat.obj_name(x), p.obj_map[x])).collect();
        format!("via {}", pairs.join(" "))
    }
}

/// Induce, certify, rebuild with `K^s` (and `K` when left normal), compare.
pub fn roundtrip_check(x: &SkewMonCategory) -> Result<Report> {
    let mut s = Sink::default();
    let mut notes = Vec::new();
    let sk = induce_short_skew(x)?;
    let cert = certify(&sk.multi, "roundtrip")?;
    let back = ks_object(&sk.multi, &cert)?;
    let iso = compare_skew_monoidal(&back, x)?;
    if let Some(p) = &iso {
        notes.push(format!("skew {}", iso_note(&x.cat, p)));
    }
    s.record("roundtrip-skew", iso.is_some(), || (vec![], "rebuilt".into(), "original".into()));
    if classify_flavour(x).left_normal {
        let pm = induce_short(x)?;
        let cert = certify(&pm, "roundtrip")?;
        let back = k_object(&pm, &cert)?;
        let iso = compare_skew_monoidal(&back, x)?;
        if let Some(p) = &iso {
            notes.push(format!("plain {}", iso_note(&x.cat, p)));
        }
        s.record("roundtrip-plain", iso.is_some(), || (vec![], "rebuilt".into(), "original".into()));
    }
    let mut r = s.into_report("roundtrip");
    r.notes = notes;
    if !r.passed() {
        return Err(Error::NoIsomorphismFound("rebuilt structure differs from the original".into()));
    }
    Ok(r)
}

/// Closed roundtrip through a skew monoidal partner whose induced
/// structure is closed.
pub fn roundtrip_check_closed(x: &SkewClosedCategory, partner: &SkewMonCategory) -> Result<Report> {
    let sk = induce_short_skew(partner)?;
    let cert = certify(&sk.multi, "roundtrip")?;
    let back = kcl_object(&sk.multi, &cert)?;
    let iso = compare_skew_closed(&back, x)?;
    let mut s = Sink::default();
    s.record("roundtrip-closed", iso.is_some(), || (vec![], "rebuilt".into(), "original".into()));
    let mut r = s.into_report("roundtrip-closed");
    if let Some(p) = &iso {
        r.notes.push(iso_note(&x.cat, p));
    } else {
        return Err(Error::NoIsomorphismFound("rebuilt closed structure differs from the original".into()));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue;
    use crate::skewmon::{check_symmetry, validate_braiding, validate_lax_functor, validate_skew_closed, validate_skew_monoidal};

    fn skew(c: &SkewMonCategory) -> (Multi, Certificate) {
        let m = induce_short_skew(c).unwrap().multi.into_inner();
        let cert = certify(&m, "t").unwrap();
        (m, cert)
    }

    fn plain(c: &SkewMonCategory) -> (Multi, Certificate) {
        let m = induce_short(c).unwrap().into_inner();
        let cert = certify(&m, "t").unwrap();
        (m, cert)
    }

    #[test]
    fn solve_unique_outcomes() {
        assert_eq!(solve_unique("x", &[1, 2, 3], |x| x == 2), Ok(2));
        assert!(matches!(solve_unique("x", &[1, 2, 3], |x| x > 5), Err(Error::NoSolution(_))));
        assert!(matches!(solve_unique("x", &[1, 2, 3], |x| x > 1), Err(Error::MultipleSolutions(_))));
    }

    #[test]
    fn every_generator_roundtrips_on_the_nose() {
        for name in catalogue::MONOIDAL {
            let c = catalogue::skew_monoidal(name).unwrap();
            let r = roundtrip_check(&c).unwrap();
            assert!(r.passed(), "{name}");
            assert!(r.notes.iter().all(|n| n.ends_with("on the nose")), "{name} {:?}", r.notes);
            let (m, cert) = skew(&c);
            let k = ks_object(&m, &cert).unwrap();
            assert!(validate_skew_monoidal(&k).passed());
            assert_eq!(k, c, "{name}");
        }
    }

    #[test]
    fn z2_is_strict() {
        let (m, cert) = plain(&catalogue::z2());
        let k = k_object(&m, &cert).unwrap();
        for a in 0..2 {
            assert!(k.cat.is_id(k.lambda(a)) && k.cat.is_id(k.rho(a)));
            for b in 0..2 {
                for c in 0..2 {
                    assert!(k.cat.is_id(k.alpha(a, b, c)));
                }
            }
        }
    }

    #[test]
    fn rho_is_the_unit_substitution() {
        for name in catalogue::MONOIDAL {
            let (m, cert) = skew(&catalogue::skew_monoidal(name).unwrap());
            let k = ks_object(&m, &cert).unwrap();
            for a in 0..cert.objects {
                assert_eq!(m.sub(cert.theta(a, cert.unit()), 2, cert.u()), Some(k.rho(a)));
            }
        }
    }

    #[test]
    fn representable_iff_monoidal() {
        for (name, want) in [("terminal", true), ("z2", true), ("klein", true), ("heyting-2", true), ("poset-skew-second", false)] {
            let (m, cert) = plain(&catalogue::skew_monoidal(name).unwrap());
            let r = check_representable_iff_monoidal(&m, &cert).unwrap();
            assert_eq!((r.representable, r.monoidal), (want, want), "{name}");
            if want {
                assert!(r.report.checked_in("alpha-inverse") > 0 && r.report.checked_in("rebuilt-theta-2") > 0);
            }
        }
    }

    #[test]
    fn closedness_transfers() {
        for name in catalogue::MONOIDAL {
            let c = catalogue::skew_monoidal(name).unwrap();
            let (m, cert) = skew(&c);
            let t = transport_closed_skew(&m, &cert).unwrap();
            assert_eq!(t.multi_closed, t.category_closed);
            assert!(t.derived.iter().all(|d| d.certifies && d.matches));
            if let Ok(p) = induce_short(&c) {
                let cert = certify(&p, name).unwrap();
                let t = transport_closed(&p, &cert).unwrap();
                assert_eq!(t.multi_closed, t.category_closed);
            }
        }
        let (m, cert) = plain(&catalogue::poset_skew_second());
        assert!(!transport_closed(&m, &cert).unwrap().multi_closed);
    }

    #[test]
    fn morphism_transport_roundtrips() {
        let mut count = 0;
        for cm in catalogue::morphisms() {
            let src = catalogue::skew_monoidal(&cm.source).unwrap();
            let tgt = catalogue::skew_monoidal(&cm.target).unwrap();
            let mut builds: Vec<((Multi, Certificate), (Multi, Certificate))> = vec![(skew(&src), skew(&tgt))];
            if induce_short(&src).is_ok() && induce_short(&tgt).is_ok() {
                builds.push((plain(&src), plain(&tgt)));
            }
            for ((m, mc), (d, dc)) in &builds {
                let e = Ends { src: m, src_cert: mc, tgt: d, tgt_cert: dc };
                let f = k_morphism_inverse(&e, &cm.functor).unwrap();
                assert!(validate_multi_morphism(m, d, &f).unwrap().passed());
                let t = k_morphism(&e, &f).unwrap();
                assert_eq!(t, cm.functor, "{}", cm.name);
                assert_eq!(k_morphism_inverse(&e, &t).unwrap(), f, "{}", cm.name);
                assert!(validate_lax_functor(&src, &tgt, &t).unwrap().passed());
                count += 1;
            }
        }
        assert!(count >= 10);
    }

    #[test]
    fn identity_morphism_gives_identity_lax_functor() {
        let c = catalogue::heyting2();
        let (m, cert) = skew(&c);
        let e = Ends { src: &m, src_cert: &cert, tgt: &m, tgt_cert: &cert };
        let t = k_morphism(&e, &MultiMorphism::identity(&m)).unwrap();
        assert_eq!(t, LaxMonFunctor::identity(&c));
    }

    #[test]
    fn braiding_bijection_on_symmetric_generators() {
        for (c, s) in [catalogue::z2_sym(), catalogue::klein_sym(), catalogue::terminal_sym(), catalogue::deloop_sym(3)] {
            let ind = induce_short_skew(&c).unwrap();
            let m: &Multi = &ind.multi;
            let cert = certify(m, "b").unwrap();
            let beta = short_braiding_from_s(m, &cert, &s).unwrap();
            let r = validate_short_braiding(m, &beta);
            assert!(r.passed(), "{}", r.render());
            assert!(r.checked_in("braid-hexagon") > 0 && r.checked_in("braid-2in3-third") > 0);
            assert_eq!(is_short_symmetry(m, &beta), check_symmetry(&c, &s));
            let back = s_from_short_braiding(m, &cert, &beta).unwrap();
            assert_eq!(back, s);
            assert!(validate_braiding(&c, &back).passed());
            assert_eq!(short_braiding_from_s(m, &cert, &back).unwrap(), beta);
            let n = c.n();
            for (&f, &g) in &beta.b32 {
                let d = m.dom(f);
                let under = c.cat.comp(ind.underlying[f], s.s[(d[0] * n + d[2]) * n + d[1]]).unwrap();
                assert_eq!(ind.find(Tight, &[d[0], d[2], d[1]], under), Some(g));
            }
        }
    }

    #[test]
    fn broken_braiding_is_rejected() {
        let (c, s) = catalogue::klein_sym();
        let (m, cert) = skew(&c);
        let mut beta = short_braiding_from_s(&m, &cert, &s).unwrap();
        let (&k, &v) = beta.b42.iter().next().unwrap();
        let other = m.set(Tight, m.dom(v), m.cod(v)).iter().copied().find(|&x| x != v);
        if let Some(o) = other {
            beta.b42.insert(k, o);
            assert!(!validate_short_braiding(&m, &beta).passed());
        }
        let mut beta = short_braiding_from_s(&m, &cert, &s).unwrap();
        beta.b42.remove(&k);
        assert!(!validate_short_braiding(&m, &beta).passed());
    }

    #[test]
    fn klein_swap_is_braided() {
        let (c, s) = catalogue::klein_sym();
        let (m, cert) = skew(&c);
        let beta = short_braiding_from_s(&m, &cert, &s).unwrap();
        let swap = catalogue::morphisms().into_iter().find(|x| x.name == "klein-swap-ab").unwrap();
        let e = Ends { src: &m, src_cert: &cert, tgt: &m, tgt_cert: &cert };
        let f = k_morphism_inverse(&e, &swap.functor).unwrap();
        let r = validate_braided_transport_functor(&e, &f, &beta, &beta).unwrap();
        assert!(r.passed(), "{}", r.render());
        assert!(r.checked_in("braided-functor") > 0);
    }

    #[test]
    fn closed_structures_from_multicategories() {
        for (cl, partner) in [
            (catalogue::heyting2_closed(), catalogue::heyting2()),
            (catalogue::z2_closed(), catalogue::z2()),
            (catalogue::terminal_closed(), catalogue::terminal()),
            (catalogue::deloop_closed(3), catalogue::deloop(3)),
        ] {
            let (m, cert) = skew(&partner);
            let k = kcl_object(&m, &cert).unwrap();
            let r = validate_skew_closed(&k);
            assert!(r.passed(), "{}", r.render());
            assert_eq!(k, cl);
            assert!(roundtrip_check_closed(&cl, &partner).unwrap().passed());
            let e = Ends { src: &m, src_cert: &cert, tgt: &m, tgt_cert: &cert };
            let f = kcl_morphism(&e, &MultiMorphism::identity(&m)).unwrap();
            assert!(crate::skewmon::validate_closed_functor(&k, &k, &f).unwrap().passed());
        }
    }

    #[test]
    fn biclosed_substitution() {
        for name in ["terminal", "z2", "klein", "heyting-2", "deloop-z3"] {
            let (m, _) = plain(&catalogue::skew_monoidal(name).unwrap());
            let r = biclosed_subst_check(&m).unwrap();
            assert!(r.passed() && r.checked_in("biclosed-first") > 0 && r.checked_in("biclosed-second") > 0, "{name}");
        }
    }
}
