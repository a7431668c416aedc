//! Skew monoidal, braided and skew closed categories as tables, with
//! validators for their axioms and for the functors between them.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::fincat::{validate_functor, FinCategory, FinFunctor, Mor, Obj};
use crate::report::{self, Report, Sink, Task};

/// `(C, tensor, i, alpha, lambda, rho)` with every component stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewMonCategory {
    pub cat: FinCategory,
    /// Indexed by `a * n + b`.
    pub tensor_obj: Vec<Obj>,
    /// Indexed by `f * m + g`.
    pub tensor_mor: Vec<Mor>,
    pub unit: Obj,
    /// `(ab)c -> a(bc)`, indexed by `(a * n + b) * n + c`.
    pub alpha: Vec<Mor>,
    /// `ia -> a`.
    pub lambda: Vec<Mor>,
    /// `a -> ai`.
    pub rho: Vec<Mor>,
}

impl SkewMonCategory {
    pub fn n(&self) -> usize {
        self.cat.object_count()
    }

    pub fn t(&self, a: Obj, b: Obj) -> Obj {
        self.tensor_obj[a * self.n() + b]
    }

    pub fn tm(&self, f: Mor, g: Mor) -> Mor {
        self.tensor_mor[f * self.cat.morphism_count() + g]
    }

    pub fn alpha(&self, a: Obj, b: Obj, c: Obj) -> Mor {
        self.alpha[(a * self.n() + b) * self.n() + c]
    }

    pub fn lambda(&self, a: Obj) -> Mor {
        self.lambda[a]
    }

    pub fn rho(&self, a: Obj) -> Mor {
        self.rho[a]
    }

    /// `f . b`: a morphism tensored on the right with an identity.
    pub fn tr(&self, f: Mor, b: Obj) -> Mor {
        self.tm(f, self.cat.id(b))
    }

    /// `a . f`.
    pub fn tl(&self, a: Obj, f: Mor) -> Mor {
        self.tm(self.cat.id(a), f)
    }

    pub fn triples(&self) -> impl Iterator<Item = (Obj, Obj, Obj)> {
        let n = self.n();
        (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
    }

    fn on(&self, ms: &[Mor]) -> Option<Mor> {
        self.cat.chain(ms)
    }
}

fn mname(c: &FinCategory) -> impl Fn(Mor) -> String + Copy + '_ {
    move |m| c.mor_name(m).to_string()
}

fn oname(c: &FinCategory, o: Obj) -> String {
    c.obj_name(o).to_string()
}

fn typed(c: &FinCategory, s: &mut Sink, fam: &str, ids: Vec<String>, m: Mor, dom: Obj, cod: Obj) {
    let ok = c.dom(m) == dom && c.cod(m) == cod;
    s.record(fam, ok, || {
        (ids, c.mor_name(m).to_string(), format!("{}->{}", c.obj_name(dom), c.obj_name(cod)))
    });
}

pub fn validate_skew_monoidal(c: &SkewMonCategory) -> Report {
    validate_skew_monoidal_jobs(c, 1)
}

pub fn validate_skew_monoidal_jobs(c: &SkewMonCategory, jobs: usize) -> Report {
    let cat = &c.cat;
    let nm = mname(cat);
    let o = |x: Obj| oname(cat, x);
    let i = c.unit;
    let mut tasks: Vec<Task> = Vec::new();
    tasks.push(Box::new(move |s| {
        for f in cat.morphisms() {
            for g in cat.morphisms() {
                let t = c.tm(f, g);
                typed(cat, s, "tensor-typing", vec![nm(f), nm(g)], t, c.t(cat.dom(f), cat.dom(g)), c.t(cat.cod(f), cat.cod(g)));
            }
        }
        for a in cat.objects() {
            for b in cat.objects() {
                let l = Some(c.tm(cat.id(a), cat.id(b)));
                s.eq("tensor-functor", l, Some(cat.id(c.t(a, b))), || vec![o(a), o(b)], &nm);
            }
        }
        for f in cat.morphisms() {
            for f2 in cat.arrows_from(cat.cod(f)) {
                for g in cat.morphisms() {
                    for g2 in cat.arrows_from(cat.cod(g)) {
                        let l = cat.comp(f2, f).zip(cat.comp(g2, g)).map(|(a, b)| c.tm(a, b));
                        let r = cat.comp(c.tm(f2, g2), c.tm(f, g));
                        s.eq("tensor-functor", l, r, || vec![nm(f2), nm(f), nm(g2), nm(g)], &nm);
                    }
                }
            }
        }
    }));
    tasks.push(Box::new(move |s| {
        for (a, b, cc) in c.triples() {
            typed(cat, s, "struct-typing", vec!["alpha".into(), o(a), o(b), o(cc)], c.alpha(a, b, cc), c.t(c.t(a, b), cc), c.t(a, c.t(b, cc)));
        }
        for a in cat.objects() {
            typed(cat, s, "struct-typing", vec!["lambda".into(), o(a)], c.lambda(a), c.t(i, a), a);
            typed(cat, s, "struct-typing", vec!["rho".into(), o(a)], c.rho(a), a, c.t(a, i));
        }
    }));
    tasks.push(Box::new(move |s| {
        for f in cat.morphisms() {
            for g in cat.morphisms() {
                for h in cat.morphisms() {
                    let (a, b, cc) = (cat.dom(f), cat.dom(g), cat.dom(h));
                    let (a2, b2, c2) = (cat.cod(f), cat.cod(g), cat.cod(h));
                    let l = c.on(&[c.alpha(a2, b2, c2), c.tm(c.tm(f, g), h)]);
                    let r = c.on(&[c.tm(f, c.tm(g, h)), c.alpha(a, b, cc)]);
                    s.eq("nat-alpha", l, r, || vec![nm(f), nm(g), nm(h)], &nm);
                }
            }
            let (a, b) = (cat.dom(f), cat.cod(f));
            let l = c.on(&[c.lambda(b), c.tl(i, f)]);
            let r = c.on(&[f, c.lambda(a)]);
            s.eq("nat-lambda", l, r, || vec![nm(f)], &nm);
            let l = c.on(&[c.tr(f, i), c.rho(a)]);
            let r = c.on(&[c.rho(b), f]);
            s.eq("nat-rho", l, r, || vec![nm(f)], &nm);
        }
    }));
    tasks.push(Box::new(move |s| {
        let n = c.n();
        for a in 0..n {
            for b in 0..n {
                for cc in 0..n {
                    for d in 0..n {
                        let l = c.on(&[
                            c.tl(a, c.alpha(b, cc, d)),
                            c.alpha(a, c.t(b, cc), d),
                            c.tr(c.alpha(a, b, cc), d),
                        ]);
                        let r = c.on(&[c.alpha(a, b, c.t(cc, d)), c.alpha(c.t(a, b), cc, d)]);
                        s.eq("pentagon", l, r, || vec![o(a), o(b), o(cc), o(d)], &nm);
                    }
                }
            }
        }
    }));
    tasks.push(Box::new(move |s| {
        let n = c.n();
        for a in 0..n {
            for b in 0..n {
                let l = c.on(&[c.lambda(c.t(a, b)), c.alpha(i, a, b)]);
                s.eq("unit-iab", l, Some(c.tr(c.lambda(a), b)), || vec![o(a), o(b)], &nm);
                let l = c.on(&[c.alpha(a, b, i), c.rho(c.t(a, b))]);
                s.eq("unit-abi", l, Some(c.tl(a, c.rho(b))), || vec![o(a), o(b)], &nm);
                let l = c.on(&[c.tl(a, c.lambda(b)), c.alpha(a, i, b), c.tr(c.rho(a), b)]);
                s.eq("unit-aib", l, Some(cat.id(c.t(a, b))), || vec![o(a), o(b)], &nm);
            }
        }
        let l = c.on(&[c.lambda(i), c.rho(i)]);
        s.eq("unit-ii", l, Some(cat.id(i)), || vec![o(i)], &nm);
    }));
    report::run("skew-monoidal", tasks, jobs)
}

/// Right adjoint to `- . b` at `c`: an object `[b,c]` with counit `[b,c].b -> c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjointHom {
    pub b: Obj,
    pub c: Obj,
    pub hom: Obj,
    pub counit: Mor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flavours {
    pub left_normal: bool,
    pub right_normal: bool,
    pub monoidal: bool,
    pub closed: bool,
    /// One entry per `(b, c)` when closed.
    pub homs: Vec<AdjointHom>,
}

/// Is `h |-> counit . (h . b)` a bijection `C(a, x) -> C(ab, c)` for every `a`?
pub fn is_counit(c: &SkewMonCategory, b: Obj, x: Obj, counit: Mor) -> bool {
    let cat = &c.cat;
    cat.objects().all(|a| {
        let target = cat.hom(c.t(a, b), cat.cod(counit));
        let image: Vec<Option<Mor>> = cat
            .hom(a, x)
            .iter()
            .map(|&h| cat.comp(counit, c.tr(h, b)))
            .collect();
        bijective(&image, target)
    })
}

/// `image` lists the values of a function on an ordered finite set; is it a
/// bijection onto `target`?
pub fn bijective<T: PartialEq + Copy>(image: &[Option<T>], target: &[T]) -> bool {
    if image.len() != target.len() {
        return false;
    }
    let mut hit = vec![false; target.len()];
    for v in image {
        let Some(v) = v else { return false };
        match target.iter().position(|t| t == v) {
            Some(k) if !hit[k] => hit[k] = true,
            _ => return false,
        }
    }
    true
}

pub fn classify_flavour(c: &SkewMonCategory) -> Flavours {
    let cat = &c.cat;
    let left_normal = cat.objects().all(|a| cat.is_iso(c.lambda(a)));
    let right_normal = cat.objects().all(|a| cat.is_iso(c.rho(a)));
    let monoidal = left_normal && right_normal && c.triples().all(|(a, b, d)| cat.is_iso(c.alpha(a, b, d)));
    let mut homs = Vec::new();
    let mut closed = true;
    'outer: for b in cat.objects() {
        for cc in cat.objects() {
            let mut found = None;
            'search: for x in cat.objects() {
                for &e in cat.hom(c.t(x, b), cc) {
                    if is_counit(c, b, x, e) {
                        found = Some(AdjointHom { b, c: cc, hom: x, counit: e });
                        break 'search;
                    }
                }
            }
            match found {
                Some(h) => homs.push(h),
                None => {
                    closed = false;
                    homs.clear();
                    break 'outer;
                }
            }
        }
    }
    Flavours {
        left_normal,
        right_normal,
        monoidal,
        closed,
        homs,
    }
}

/// Lax monoidal functor `(F, f0, f2)`; `f2` is indexed by source pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaxMonFunctor {
    pub functor: FinFunctor,
    pub f0: Mor,
    pub f2: Vec<Mor>,
}

impl LaxMonFunctor {
    pub fn identity(c: &SkewMonCategory) -> Self {
        LaxMonFunctor {
            functor: FinFunctor::identity(&c.cat),
            f0: c.cat.id(c.unit),
            f2: (0..c.n() * c.n()).map(|k| c.cat.id(c.tensor_obj[k])).collect(),
        }
    }

    pub fn f2(&self, src: &SkewMonCategory, a: Obj, b: Obj) -> Mor {
        self.f2[a * src.n() + b]
    }
}

pub fn validate_lax_functor(src: &SkewMonCategory, tgt: &SkewMonCategory, t: &LaxMonFunctor) -> Result<Report> {
    if t.f2.len() != src.n() * src.n() {
        return Err(Error::MalformedTable("f2 does not cover all pairs".into()));
    }
    let mut rep = validate_functor(&src.cat, &tgt.cat, &t.functor)?;
    let (sc, tc) = (&src.cat, &tgt.cat);
    let fo = |a: Obj| t.functor.obj_map[a];
    let fm = |m: Mor| t.functor.mor_map[m];
    let nm = mname(tc);
    let o = |x: Obj| oname(sc, x);
    let f2 = |a: Obj, b: Obj| t.f2(src, a, b);
    let tasks: Vec<Task> = vec![Box::new(move |s| {
        typed(tc, s, "lax-typing", vec!["f0".into()], t.f0, tgt.unit, fo(src.unit));
        for a in sc.objects() {
            for b in sc.objects() {
                typed(tc, s, "lax-typing", vec!["f2".into(), o(a), o(b)], f2(a, b), tgt.t(fo(a), fo(b)), fo(src.t(a, b)));
            }
        }
        for f in sc.morphisms() {
            for g in sc.morphisms() {
                let l = tc.comp(fm(src.tm(f, g)), f2(sc.dom(f), sc.dom(g)));
                let r = tc.comp(f2(sc.cod(f), sc.cod(g)), tgt.tm(fm(f), fm(g)));
                s.eq("lax-nat", l, r, || vec![sc.mor_name(f).into(), sc.mor_name(g).into()], &nm);
            }
        }
        for (a, b, c) in src.triples() {
            let l = tc.chain(&[fm(src.alpha(a, b, c)), f2(src.t(a, b), c), tgt.tr(f2(a, b), fo(c))]);
            let r = tc.chain(&[f2(a, src.t(b, c)), tgt.tl(fo(a), f2(b, c)), tgt.alpha(fo(a), fo(b), fo(c))]);
            s.eq("lax-assoc", l, r, || vec![o(a), o(b), o(c)], &nm);
        }
        for a in sc.objects() {
            let l = tc.chain(&[fm(src.lambda(a)), f2(src.unit, a), tgt.tr(t.f0, fo(a))]);
            s.eq("lax-left-unit", l, Some(tgt.lambda(fo(a))), || vec![o(a)], &nm);
            let l = tc.chain(&[f2(a, src.unit), tgt.tl(fo(a), t.f0), tgt.rho(fo(a))]);
            s.eq("lax-right-unit", l, Some(fm(src.rho(a))), || vec![o(a)], &nm);
        }
    })];
    rep.absorb(report::run("lax-functor", tasks, 1));
    rep.subject = "lax-functor".into();
    Ok(rep)
}

/// `s_{x,a,b}: (xa)b -> (xb)a` with its recorded inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Braiding {
    pub s: Vec<Mor>,
    pub s_inv: Vec<Mor>,
}

impl Braiding {
    pub fn at(&self, c: &SkewMonCategory, x: Obj, a: Obj, b: Obj) -> Mor {
        self.s[(x * c.n() + a) * c.n() + b]
    }

    pub fn inv_at(&self, c: &SkewMonCategory, x: Obj, a: Obj, b: Obj) -> Mor {
        self.s_inv[(x * c.n() + a) * c.n() + b]
    }
}

pub fn validate_braiding(c: &SkewMonCategory, br: &Braiding) -> Report {
    let cat = &c.cat;
    let nm = mname(cat);
    let o = |x: Obj| oname(cat, x);
    let s_ = |x, a, b| br.at(c, x, a, b);
    let t = |a, b| c.t(a, b);
    let tasks: Vec<Task> = vec![
        Box::new(move |s| {
            for (x, a, b) in c.triples() {
                let ids = || vec![o(x), o(a), o(b)];
                typed(cat, s, "braid-typing", ids(), s_(x, a, b), t(t(x, a), b), t(t(x, b), a));
                typed(cat, s, "braid-typing", ids(), br.inv_at(c, x, a, b), t(t(x, b), a), t(t(x, a), b));
                let l = cat.comp(s_(x, a, b), br.inv_at(c, x, a, b));
                s.eq("braid-inverse", l, Some(cat.id(t(t(x, b), a))), ids, &nm);
                let l = cat.comp(br.inv_at(c, x, a, b), s_(x, a, b));
                s.eq("braid-inverse", l, Some(cat.id(t(t(x, a), b))), ids, &nm);
            }
            for f in cat.morphisms() {
                for g in cat.morphisms() {
                    for h in cat.morphisms() {
                        let (x, a, b) = (cat.dom(f), cat.dom(g), cat.dom(h));
                        let (x2, a2, b2) = (cat.cod(f), cat.cod(g), cat.cod(h));
                        let l = cat.comp(s_(x2, a2, b2), c.tm(c.tm(f, g), h));
                        let r = cat.comp(c.tm(c.tm(f, h), g), s_(x, a, b));
                        s.eq("braid-nat", l, r, || vec![nm(f), nm(g), nm(h)], &nm);
                    }
                }
            }
        }),
        Box::new(move |s| {
            let n = c.n();
            for x in 0..n {
                for a in 0..n {
                    for b in 0..n {
                        for cc in 0..n {
                            let ids = || vec![o(x), o(a), o(b), o(cc)];
                            let l = cat.chain(&[s_(t(x, cc), a, b), c.tr(s_(x, a, cc), b), s_(t(x, a), b, cc)]);
                            let r = cat.chain(&[c.tr(s_(x, b, cc), a), s_(t(x, b), a, cc), c.tr(s_(x, a, b), cc)]);
                            s.eq("braid-11", l, r, ids, &nm);
                            let l = cat.chain(&[c.tr(c.alpha(x, b, cc), a), s_(t(x, b), a, cc), c.tr(s_(x, a, b), cc)]);
                            let r = cat.chain(&[s_(x, a, t(b, cc)), c.alpha(t(x, a), b, cc)]);
                            s.eq("braid-12", l, r, ids, &nm);
                            let l = cat.chain(&[c.alpha(t(x, cc), a, b), c.tr(s_(x, a, cc), b), s_(t(x, a), b, cc)]);
                            let r = cat.chain(&[s_(x, t(a, b), cc), c.tr(c.alpha(x, a, b), cc)]);
                            s.eq("braid-13", l, r, ids, &nm);
                            let l = cat.chain(&[c.tl(x, s_(a, b, cc)), c.alpha(x, t(a, b), cc), c.tr(c.alpha(x, a, b), cc)]);
                            let r = cat.chain(&[c.alpha(x, t(a, cc), b), c.tr(c.alpha(x, a, cc), b), s_(t(x, a), b, cc)]);
                            s.eq("braid-14", l, r, ids, &nm);
                        }
                    }
                }
            }
        }),
    ];
    report::run("braiding", tasks, 1)
}

/// `s_{x,b,a}` is the inverse of `s_{x,a,b}` everywhere.
pub fn check_symmetry(c: &SkewMonCategory, br: &Braiding) -> bool {
    c.triples().all(|(x, a, b)| br.at(c, x, b, a) == br.inv_at(c, x, a, b))
}

pub fn validate_braided_functor(
    src: &SkewMonCategory,
    tgt: &SkewMonCategory,
    t: &LaxMonFunctor,
    s_src: &Braiding,
    s_tgt: &Braiding,
) -> Report {
    let tc = &tgt.cat;
    let nm = mname(tc);
    let fo = |a: Obj| t.functor.obj_map[a];
    let fm = |m: Mor| t.functor.mor_map[m];
    let f2 = |a: Obj, b: Obj| t.f2(src, a, b);
    let tasks: Vec<Task> = vec![Box::new(move |s| {
        for (x, a, b) in src.triples() {
            let l = tc.chain(&[f2(src.t(x, b), a), tgt.tr(f2(x, b), fo(a)), s_tgt.at(tgt, fo(x), fo(a), fo(b))]);
            let r = tc.chain(&[fm(s_src.at(src, x, a, b)), f2(src.t(x, a), b), tgt.tr(f2(x, a), fo(b))]);
            let o = |k: Obj| oname(&src.cat, k);
            s.eq("braided-functor", l, r, || vec![o(x), o(a), o(b)], &nm);
        }
    })];
    report::run("braided-functor", tasks, 1)
}

pub const SCHEMA_LJ_TRIANGLE: &str = "lj-triangle";
pub const SCHEMA_IJL_IDENTITY: &str = "ijl-identity";
pub const SCHEMA_L_PENTAGON: &str = "l-pentagon";
pub const SCHEMA_IL_COMPAT: &str = "il-compat";
pub const SCHEMA_IJ_UNIT: &str = "ij-unit";

pub const ALL_SCHEMAS: [&str; 5] = [
    SCHEMA_LJ_TRIANGLE,
    SCHEMA_IJL_IDENTITY,
    SCHEMA_L_PENTAGON,
    SCHEMA_IL_COMPAT,
    SCHEMA_IJ_UNIT,
];

/// `(C, [-,-], i, I, J, L)` with every component stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewClosedCategory {
    pub cat: FinCategory,
    /// `[a,b]`, indexed by `a * n + b`.
    pub hom_obj: Vec<Obj>,
    /// `[f,g]: [cod f, dom g] -> [dom f, cod g]`, indexed by `f * m + g`.
    pub hom_mor: Vec<Mor>,
    pub unit: Obj,
    /// `I_a: [i,a] -> a`.
    pub i_map: Vec<Mor>,
    /// `J_a: i -> [a,a]`.
    pub j_map: Vec<Mor>,
    /// `L^a_{b,c}: [b,c] -> [[a,b],[a,c]]`, indexed by `(a * n + b) * n + c`.
    pub l_map: Vec<Mor>,
    /// Enabled axiom schemas; the `lj-triangle` schema is always checked.
    pub schemas: BTreeSet<String>,
}

impl SkewClosedCategory {
    pub fn n(&self) -> usize {
        self.cat.object_count()
    }

    pub fn h(&self, a: Obj, b: Obj) -> Obj {
        self.hom_obj[a * self.n() + b]
    }

    pub fn hm(&self, f: Mor, g: Mor) -> Mor {
        self.hom_mor[f * self.cat.morphism_count() + g]
    }

    /// `[1,g]` on `[a, dom g]`.
    pub fn hr(&self, a: Obj, g: Mor) -> Mor {
        self.hm(self.cat.id(a), g)
    }

    /// `[f,1]` on `[cod f, c]`.
    pub fn hl(&self, f: Mor, c: Obj) -> Mor {
        self.hm(f, self.cat.id(c))
    }

    pub fn big_i(&self, a: Obj) -> Mor {
        self.i_map[a]
    }

    pub fn big_j(&self, a: Obj) -> Mor {
        self.j_map[a]
    }

    pub fn big_l(&self, a: Obj, b: Obj, c: Obj) -> Mor {
        self.l_map[(a * self.n() + b) * self.n() + c]
    }

    pub fn all_schemas() -> BTreeSet<String> {
        ALL_SCHEMAS.iter().map(|s| s.to_string()).collect()
    }

    fn enabled(&self, schema: &str) -> bool {
        schema == SCHEMA_LJ_TRIANGLE || self.schemas.contains(schema)
    }
}

pub fn validate_skew_closed(c: &SkewClosedCategory) -> Report {
    let cat = &c.cat;
    let nm = mname(cat);
    let o = |x: Obj| oname(cat, x);
    let h = |a, b| c.h(a, b);
    let i = c.unit;
    let n = c.n();
    let tasks: Vec<Task> = vec![
        Box::new(move |s| {
            for f in cat.morphisms() {
                for g in cat.morphisms() {
                    let dom = h(cat.cod(f), cat.dom(g));
                    let cod = h(cat.dom(f), cat.cod(g));
                    typed(cat, s, "hom-typing", vec![nm(f), nm(g)], c.hm(f, g), dom, cod);
                }
            }
            for a in 0..n {
                for b in 0..n {
                    let l = Some(c.hm(cat.id(a), cat.id(b)));
                    s.eq("hom-functor", l, Some(cat.id(h(a, b))), || vec![o(a), o(b)], &nm);
                }
            }
            for f in cat.morphisms() {
                for f2 in cat.arrows_to(cat.dom(f)) {
                    for g in cat.morphisms() {
                        for g2 in cat.arrows_from(cat.cod(g)) {
                            let l = cat.comp(f, f2).zip(cat.comp(g2, g)).map(|(x, y)| c.hm(x, y));
                            let r = cat.comp(c.hm(f2, g2), c.hm(f, g));
                            s.eq("hom-functor", l, r, || vec![nm(f), nm(f2), nm(g), nm(g2)], &nm);
                        }
                    }
                }
            }
        }),
        Box::new(move |s| {
            for a in 0..n {
                typed(cat, s, "struct-typing", vec!["I".into(), o(a)], c.big_i(a), h(i, a), a);
                typed(cat, s, "struct-typing", vec!["J".into(), o(a)], c.big_j(a), i, h(a, a));
                for b in 0..n {
                    for cc in 0..n {
                        let l = c.big_l(a, b, cc);
                        typed(cat, s, "struct-typing", vec!["L".into(), o(a), o(b), o(cc)], l, h(b, cc), h(h(a, b), h(a, cc)));
                    }
                }
            }
            for g in cat.morphisms() {
                let (a, b) = (cat.dom(g), cat.cod(g));
                let l = cat.comp(g, c.big_i(a));
                let r = cat.comp(c.big_i(b), c.hr(i, g));
                s.eq("nat-I", l, r, || vec![nm(g)], &nm);
                let l = cat.comp(c.hr(a, g), c.big_j(a));
                let r = cat.comp(c.hl(g, b), c.big_j(b));
                s.eq("nat-J", l, r, || vec![nm(g)], &nm);
            }
            for a in 0..n {
                for b in 0..n {
                    for cc in 0..n {
                        for g in cat.arrows_from(cc) {
                            let l = cat.comp(c.hr(h(a, b), c.hr(a, g)), c.big_l(a, b, cc));
                            let r = cat.comp(c.big_l(a, b, cat.cod(g)), c.hr(b, g));
                            s.eq("nat-L", l, r, || vec![o(a), o(b), nm(g)], &nm);
                        }
                        for f in cat.arrows_to(b) {
                            let b2 = cat.dom(f);
                            let l = cat.comp(c.hl(c.hr(a, f), h(a, cc)), c.big_l(a, b, cc));
                            let r = cat.comp(c.big_l(a, b2, cc), c.hl(f, cc));
                            s.eq("nat-L", l, r, || vec![o(a), nm(f), o(cc)], &nm);
                        }
                        for f in cat.arrows_from(a) {
                            let a2 = cat.cod(f);
                            let l = cat.comp(c.hr(h(a2, b), c.hl(f, cc)), c.big_l(a2, b, cc));
                            let r = cat.comp(c.hl(c.hl(f, b), h(a, cc)), c.big_l(a, b, cc));
                            s.eq("nat-L", l, r, || vec![nm(f), o(b), o(cc)], &nm);
                        }
                    }
                }
            }
        }),
        Box::new(move |s| {
            for a in 0..n {
                for b in 0..n {
                    let l = cat.comp(c.big_l(a, b, b), c.big_j(b));
                    s.eq(SCHEMA_LJ_TRIANGLE, l, Some(c.big_j(h(a, b))), || vec![o(a), o(b)], &nm);
                }
            }
            if c.enabled(SCHEMA_IJL_IDENTITY) {
                for a in 0..n {
                    for cc in 0..n {
                        let l = cat.chain(&[c.big_i(h(a, cc)), c.hl(c.big_j(a), h(a, cc)), c.big_l(a, a, cc)]);
                        s.eq(SCHEMA_IJL_IDENTITY, l, Some(cat.id(h(a, cc))), || vec![o(a), o(cc)], &nm);
                    }
                }
            }
            if c.enabled(SCHEMA_L_PENTAGON) {
                for a in 0..n {
                    for b in 0..n {
                        for cc in 0..n {
                            for d in 0..n {
                                let l = cat.chain(&[
                                    c.hl(c.big_l(a, b, cc), h(h(a, b), h(a, d))),
                                    c.big_l(h(a, b), h(a, cc), h(a, d)),
                                    c.big_l(a, cc, d),
                                ]);
                                let r = cat.comp(c.hr(h(b, cc), c.big_l(a, b, d)), c.big_l(b, cc, d));
                                s.eq(SCHEMA_L_PENTAGON, l, r, || vec![o(a), o(b), o(cc), o(d)], &nm);
                            }
                        }
                    }
                }
            }
            if c.enabled(SCHEMA_IL_COMPAT) {
                for a in 0..n {
                    for b in 0..n {
                        let l = cat.comp(c.hr(h(i, a), c.big_i(b)), c.big_l(i, a, b));
                        s.eq(SCHEMA_IL_COMPAT, l, Some(c.hl(c.big_i(a), b)), || vec![o(a), o(b)], &nm);
                    }
                }
            }
            if c.enabled(SCHEMA_IJ_UNIT) {
                let l = cat.comp(c.big_i(i), c.big_j(i));
                s.eq(SCHEMA_IJ_UNIT, l, Some(cat.id(i)), || vec![o(i)], &nm);
            }
        }),
    ];
    report::run("skew-closed", tasks, 1)
}

/// Closed functor `(F, f0, f)` with `f_{a,b}: F[a,b] -> [Fa,Fb]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFunctor {
    pub functor: FinFunctor,
    pub f0: Mor,
    pub fh: Vec<Mor>,
}

impl ClosedFunctor {
    pub fn fh(&self, src: &SkewClosedCategory, a: Obj, b: Obj) -> Mor {
        self.fh[a * src.n() + b]
    }
}

pub fn validate_closed_functor(src: &SkewClosedCategory, tgt: &SkewClosedCategory, t: &ClosedFunctor) -> Result<Report> {
    if t.fh.len() != src.n() * src.n() {
        return Err(Error::MalformedTable("closed functor table does not cover all pairs".into()));
    }
    let mut rep = validate_functor(&src.cat, &tgt.cat, &t.functor)?;
    let (sc, tc) = (&src.cat, &tgt.cat);
    let fo = |a: Obj| t.functor.obj_map[a];
    let fm = |m: Mor| t.functor.mor_map[m];
    let f = |a: Obj, b: Obj| t.fh(src, a, b);
    let nm = mname(tc);
    let o = |x: Obj| oname(sc, x);
    let tasks: Vec<Task> = vec![Box::new(move |s| {
        typed(tc, s, "cfun-typing", vec!["f0".into()], t.f0, tgt.unit, fo(src.unit));
        for a in sc.objects() {
            for b in sc.objects() {
                typed(tc, s, "cfun-typing", vec!["f".into(), o(a), o(b)], f(a, b), fo(src.h(a, b)), tgt.h(fo(a), fo(b)));
            }
        }
        for a in sc.objects() {
            for g in sc.morphisms() {
                let (b, b2) = (sc.dom(g), sc.cod(g));
                let l = tc.comp(tgt.hr(fo(a), fm(g)), f(a, b));
                let r = tc.comp(f(a, b2), fm(src.hr(a, g)));
                s.eq("cfun-nat", l, r, || vec![o(a), sc.mor_name(g).into()], &nm);
                let (x, x2) = (sc.dom(g), sc.cod(g));
                let l = tc.comp(tgt.hl(fm(g), fo(a)), f(x2, a));
                let r = tc.comp(f(x, a), fm(src.hl(g, a)));
                s.eq("cfun-nat", l, r, || vec![sc.mor_name(g).into(), o(a)], &nm);
            }
        }
        let i = src.unit;
        for a in sc.objects() {
            let l = tc.chain(&[tgt.big_i(fo(a)), tgt.hl(t.f0, fo(a)), f(i, a)]);
            s.eq("cfun-I", l, Some(fm(src.big_i(a))), || vec![o(a)], &nm);
            let l = tc.chain(&[f(a, a), fm(src.big_j(a)), t.f0]);
            s.eq("cfun-J", l, Some(tgt.big_j(fo(a))), || vec![o(a)], &nm);
        }
        for a in sc.objects() {
            for b in sc.objects() {
                for c in sc.objects() {
                    let l = tc.chain(&[
                        tgt.hl(f(a, b), tgt.h(fo(a), fo(c))),
                        tgt.big_l(fo(a), fo(b), fo(c)),
                        f(b, c),
                    ]);
                    let r = tc.chain(&[
                        tgt.hr(fo(src.h(a, b)), f(a, c)),
                        f(src.h(a, b), src.h(a, c)),
                        fm(src.big_l(a, b, c)),
                    ]);
                    s.eq("cfun-L", l, r, || vec![o(a), o(b), o(c)], &nm);
                }
            }
        }
    })];
    rep.absorb(report::run("closed-functor", tasks, 1));
    rep.subject = "closed-functor".into();
    Ok(rep)
}
