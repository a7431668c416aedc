//! Desk-scale fixtures: the structures every validator and construction is
//! exercised on, plus single-entry mutants with the instance they must fail.

use crate::error::{Error, Result};
use crate::fincat::{FinCategory, FinFunctor, Mor, Obj};
use crate::skewmon::{Braiding, LaxMonFunctor, SkewClosedCategory, SkewMonCategory};

/// The unique arrow `a -> b` of a thin category.
fn arrow(c: &FinCategory, a: Obj, b: Obj, what: impl Fn() -> String) -> Result<Mor> {
    match c.hom(a, b) {
        [m] => Ok(*m),
        [] => Err(Error::Precondition(format!("no arrow for {}", what()))),
        _ => Err(Error::Precondition(format!("category is not thin at {}", what()))),
    }
}

/// Skew monoidal structure on a thin category, every component forced.
pub fn thin_skew_monoidal(cat: FinCategory, tensor: impl Fn(Obj, Obj) -> Obj, unit: Obj) -> Result<SkewMonCategory> {
    let n = cat.object_count();
    let tensor_obj: Vec<Obj> = (0..n * n).map(|k| tensor(k / n, k % n)).collect();
    let t = |a: Obj, b: Obj| tensor_obj[a * n + b];
    let name = |o: Obj| cat.obj_name(o).to_string();
    let mut tensor_mor = Vec::new();
    for f in cat.morphisms() {
        for g in cat.morphisms() {
            let (a, b) = (t(cat.dom(f), cat.dom(g)), t(cat.cod(f), cat.cod(g)));
            tensor_mor.push(arrow(&cat, a, b, || format!("tensor of {} and {}", cat.mor_name(f), cat.mor_name(g)))?);
        }
    }
    let mut alpha = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                alpha.push(arrow(&cat, t(t(a, b), c), t(a, t(b, c)), || format!("alpha {} {} {}", name(a), name(b), name(c)))?);
            }
        }
    }
    let mut lambda = Vec::new();
    let mut rho = Vec::new();
    for a in 0..n {
        lambda.push(arrow(&cat, t(unit, a), a, || format!("lambda {}", name(a)))?);
        rho.push(arrow(&cat, a, t(a, unit), || format!("rho {}", name(a)))?);
    }
    Ok(SkewMonCategory {
        cat: cat.clone(),
        tensor_obj,
        tensor_mor,
        unit,
        alpha,
        lambda,
        rho,
    })
}

/// Braiding on a thin skew monoidal category, every component forced.
pub fn thin_braiding(c: &SkewMonCategory) -> Result<Braiding> {
    let cat = &c.cat;
    let (mut s, mut s_inv) = (Vec::new(), Vec::new());
    for (x, a, b) in c.triples() {
        let (p, q) = (c.t(c.t(x, a), b), c.t(c.t(x, b), a));
        s.push(arrow(cat, p, q, || "braiding".into())?);
        s_inv.push(arrow(cat, q, p, || "braiding inverse".into())?);
    }
    Ok(Braiding { s, s_inv })
}

/// Skew closed structure on a thin category, every component forced.
pub fn thin_skew_closed(cat: FinCategory, hom: impl Fn(Obj, Obj) -> Obj, unit: Obj) -> Result<SkewClosedCategory> {
    let n = cat.object_count();
    let hom_obj: Vec<Obj> = (0..n * n).map(|k| hom(k / n, k % n)).collect();
    let h = |a: Obj, b: Obj| hom_obj[a * n + b];
    let mut hom_mor = Vec::new();
    for f in cat.morphisms() {
        for g in cat.morphisms() {
            hom_mor.push(arrow(&cat, h(cat.cod(f), cat.dom(g)), h(cat.dom(f), cat.cod(g)), || "internal hom".into())?);
        }
    }
    let mut i_map = Vec::new();
    let mut j_map = Vec::new();
    let mut l_map = Vec::new();
    for a in 0..n {
        i_map.push(arrow(&cat, h(unit, a), a, || "I".into())?);
        j_map.push(arrow(&cat, unit, h(a, a), || "J".into())?);
        for b in 0..n {
            for c in 0..n {
                l_map.push(arrow(&cat, h(b, c), h(h(a, b), h(a, c)), || "L".into())?);
            }
        }
    }
    Ok(SkewClosedCategory {
        cat: cat.clone(),
        hom_obj,
        hom_mor,
        unit,
        i_map,
        j_map,
        l_map,
        schemas: SkewClosedCategory::all_schemas(),
    })
}

fn poset2(leq: impl Fn(&str, &str) -> bool) -> FinCategory {
    FinCategory::poset(&["0", "1"], leq, |a, b| if a == b { format!("id{a}") } else { "le".into() })
}

pub fn terminal() -> SkewMonCategory {
    thin_skew_monoidal(FinCategory::discrete(&["*"]), |_, _| 0, 0).expect("terminal")
}

/// Commutative monoid on a discrete category, from its operation table.
pub fn comm_monoid(elements: &[&str], op: impl Fn(usize, usize) -> usize, unit: usize) -> Result<SkewMonCategory> {
    thin_skew_monoidal(FinCategory::discrete(elements), op, unit)
}

pub fn z2() -> SkewMonCategory {
    comm_monoid(&["0", "1"], |a, b| (a + b) % 2, 0).expect("Z/2")
}

pub fn z3() -> SkewMonCategory {
    comm_monoid(&["0", "1", "2"], |a, b| (a + b) % 3, 0).expect("Z/3")
}

/// Klein four-group; objects `e`, `a`, `b`, `c` are indexed 0..4 and
/// multiply by bitwise xor.
pub fn klein() -> SkewMonCategory {
    comm_monoid(&["a", "b", "c", "e"], |x, y| KLEIN_OBJ[KLEIN_BITS[x] ^ KLEIN_BITS[y]], 3).expect("Klein")
}

/// Object index (names sorted: a, b, c, e) to group element bits.
const KLEIN_BITS: [usize; 4] = [1, 2, 3, 0];
/// Group element bits back to object index.
const KLEIN_OBJ: [usize; 4] = [3, 0, 1, 2];

/// Poset `0 <= 1` with `a . b = b` and unit `1`.
pub fn poset_skew_second() -> SkewMonCategory {
    thin_skew_monoidal(poset2(|a, b| a <= b), |_, b| b, 1).expect("poset, second projection")
}

/// Poset `0 <= 1` with `a . b = a` and unit `0`.
pub fn poset_skew_first() -> SkewMonCategory {
    thin_skew_monoidal(poset2(|a, b| a <= b), |a, _| a, 0).expect("poset, first projection")
}

/// Two-element Heyting algebra: meet with unit `1`.
pub fn heyting2() -> SkewMonCategory {
    thin_skew_monoidal(poset2(|a, b| a <= b), |a, b| a.min(b), 1).expect("Heyting meet")
}

/// Two-element Heyting algebra as a skew closed category, `[b,c] = b => c`.
pub fn heyting2_closed() -> SkewClosedCategory {
    thin_skew_closed(poset2(|a, b| a <= b), |b, c| if b <= c { 1 } else { 0 }, 1).expect("Heyting implication")
}

pub fn terminal_closed() -> SkewClosedCategory {
    thin_skew_closed(FinCategory::discrete(&["*"]), |_, _| 0, 0).expect("terminal")
}

/// A commutative group as a skew closed category: `[b,c] = c - b`.
pub fn z2_closed() -> SkewClosedCategory {
    thin_skew_closed(FinCategory::discrete(&["0", "1"]), |b, c| (b + c) % 2, 0).expect("Z/2")
}

/// Symmetric structure on the Klein four-group.
pub fn klein_sym() -> (SkewMonCategory, Braiding) {
    let k = klein();
    let s = thin_braiding(&k).expect("Klein symmetry");
    (k, s)
}

pub fn z2_sym() -> (SkewMonCategory, Braiding) {
    let z = z2();
    let s = thin_braiding(&z).expect("Z/2 symmetry");
    (z, s)
}

pub fn terminal_sym() -> (SkewMonCategory, Braiding) {
    let t = terminal();
    let s = thin_braiding(&t).expect("terminal symmetry");
    (t, s)
}

/// Morphism names of the one-object group `Z/k`, indexed by exponent.
const POWERS: [&str; 3] = ["e", "x", "y"];

/// The cyclic group `Z/k` (k = 2 or 3) as a one-object category on `*`.
pub fn deloop_cat(k: usize) -> FinCategory {
    assert!((1..=POWERS.len()).contains(&k), "deloop order out of range");
    let s = |p: usize| POWERS[p % k].to_string();
    FinCategory::new(
        vec!["*".into()],
        (0..k).map(|p| (s(p), "*".into(), "*".into())).collect(),
        vec![("*".into(), s(0))],
        (0..k).flat_map(|g| (0..k).map(move |f| (g, f))).map(|(g, f)| (s(g), s(f), s(g + f))).collect(),
    )
    .expect("cyclic group")
}

/// Strict monoidal structure on a one-object group: the tensor is the
/// group law, every structure map is the identity.
pub fn deloop(k: usize) -> SkewMonCategory {
    let cat = deloop_cat(k);
    let e = cat.id(0);
    SkewMonCategory {
        tensor_obj: vec![0],
        tensor_mor: (0..k * k).map(|p| (p / k + p % k) % k).collect(),
        unit: 0,
        alpha: vec![e],
        lambda: vec![e],
        rho: vec![e],
        cat,
    }
}

/// The same group closed by `[f,g] = f + g`; currying is the identity on
/// arrows, so precomposition with `f` in the first slot adds `f`.
pub fn deloop_closed(k: usize) -> SkewClosedCategory {
    let cat = deloop_cat(k);
    let e = cat.id(0);
    SkewClosedCategory {
        hom_obj: vec![0],
        hom_mor: (0..k * k).map(|p| (p / k + p % k) % k).collect(),
        unit: 0,
        i_map: vec![e],
        j_map: vec![e],
        l_map: vec![e],
        schemas: SkewClosedCategory::all_schemas(),
        cat,
    }
}

/// Trivial symmetry on a one-object group.
pub fn deloop_sym(k: usize) -> (SkewMonCategory, Braiding) {
    let c = deloop(k);
    let e = c.cat.id(0);
    (c, Braiding { s: vec![e], s_inv: vec![e] })
}

/// Names of the skew monoidal generators.
pub const MONOIDAL_GENERATORS: [&str; 7] = [
    "terminal",
    "z2",
    "z3",
    "klein",
    "poset-skew-second",
    "poset-skew-first",
    "heyting-2",
];

/// Every named skew monoidal structure: the generators plus the
/// one-object groups, whose hom-sets are not singletons.
pub const MONOIDAL: [&str; 9] = [
    "terminal",
    "z2",
    "z3",
    "klein",
    "poset-skew-second",
    "poset-skew-first",
    "heyting-2",
    "deloop-z2",
    "deloop-z3",
];

pub const BRAIDED: [&str; 5] = ["terminal-sym", "z2-sym", "klein-four-sym", "deloop-z2-sym", "deloop-z3-sym"];

pub const CLOSED: [&str; 5] = [
    "terminal-closed",
    "z2-closed",
    "heyting-2-closed",
    "deloop-z2-closed",
    "deloop-z3-closed",
];

pub fn braided(name: &str) -> Result<(SkewMonCategory, Braiding)> {
    Ok(match name {
        "terminal-sym" => terminal_sym(),
        "z2-sym" => z2_sym(),
        "klein-four-sym" => klein_sym(),
        "deloop-z2-sym" => deloop_sym(2),
        "deloop-z3-sym" => deloop_sym(3),
        _ => return Err(Error::UnknownGenerator(name.to_string())),
    })
}

pub fn skew_closed(name: &str) -> Result<SkewClosedCategory> {
    Ok(match name {
        "terminal-closed" => terminal_closed(),
        "z2-closed" => z2_closed(),
        "heyting-2-closed" => heyting2_closed(),
        "deloop-z2-closed" => deloop_closed(2),
        "deloop-z3-closed" => deloop_closed(3),
        _ => return Err(Error::UnknownGenerator(name.to_string())),
    })
}

pub fn skew_monoidal(name: &str) -> Result<SkewMonCategory> {
    Ok(match name {
        "terminal" => terminal(),
        "z2" => z2(),
        "z3" => z3(),
        "klein" | "klein-four-sym" => klein(),
        "poset-skew-second" => poset_skew_second(),
        "poset-skew-first" => poset_skew_first(),
        "heyting-2" => heyting2(),
        "deloop-z2" => deloop(2),
        "deloop-z3" => deloop(3),
        _ => return Err(Error::UnknownGenerator(name.to_string())),
    })
}

/// Strict monoidal functor given on objects between discrete structures.
pub fn strict_discrete(src: &SkewMonCategory, tgt: &SkewMonCategory, on_obj: &[Obj]) -> LaxMonFunctor {
    let (sc, tc) = (&src.cat, &tgt.cat);
    let functor = FinFunctor {
        obj_map: on_obj.to_vec(),
        mor_map: sc.morphisms().map(|m| tc.id(on_obj[sc.dom(m)])).collect(),
    };
    let f0 = tc.id(tgt.unit);
    let f2 = (0..src.n() * src.n())
        .map(|k| tc.id(on_obj[src.tensor_obj[k]]))
        .collect();
    LaxMonFunctor { functor, f0, f2 }
}

/// A catalogue monoidal functor between two named generators.
#[derive(Debug, Clone)]
pub struct CatalogueMorphism {
    pub name: String,
    pub source: String,
    pub target: String,
    pub functor: LaxMonFunctor,
}

/// Strict monoidal functors between the catalogue structures.
pub fn morphisms() -> Vec<CatalogueMorphism> {
    let mut out = Vec::new();
    let mut push = |name: &str, s: &str, t: &str, f: LaxMonFunctor| {
        out.push(CatalogueMorphism {
            name: name.into(),
            source: s.into(),
            target: t.into(),
            functor: f,
        })
    };
    for g in MONOIDAL {
        let c = skew_monoidal(g).expect("generator");
        push(&format!("id-{g}"), g, g, LaxMonFunctor::identity(&c));
    }
    let (t, z, k, z3) = (terminal(), z2(), klein(), z3());
    // Klein objects: a=0, b=1, c=2, e=3.
    push("z2-to-klein-a", "z2", "klein", strict_discrete(&z, &k, &[3, 0]));
    push("z2-to-klein-b", "z2", "klein", strict_discrete(&z, &k, &[3, 1]));
    push("z2-to-klein-c", "z2", "klein", strict_discrete(&z, &k, &[3, 2]));
    push("klein-to-z2-a", "klein", "z2", strict_discrete(&k, &z, &[0, 1, 1, 0]));
    push("klein-to-z2-b", "klein", "z2", strict_discrete(&k, &z, &[1, 0, 1, 0]));
    push("klein-to-z2-c", "klein", "z2", strict_discrete(&k, &z, &[1, 1, 0, 0]));
    push("klein-swap-ab", "klein", "klein", strict_discrete(&k, &k, &[1, 0, 2, 3]));
    push("z2-to-terminal", "z2", "terminal", strict_discrete(&z, &t, &[0, 0]));
    push("z3-to-terminal", "z3", "terminal", strict_discrete(&z3, &t, &[0, 0, 0]));
    push("terminal-to-z2", "terminal", "z2", strict_discrete(&t, &z, &[0]));
    push("terminal-to-klein", "terminal", "klein", strict_discrete(&t, &k, &[3]));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skewmon::{validate_lax_functor, validate_skew_closed, validate_skew_monoidal};

    #[test]
    fn generators_are_skew_monoidal() {
        for g in MONOIDAL_GENERATORS {
            let c = skew_monoidal(g).unwrap();
            let r = validate_skew_monoidal(&c);
            assert!(r.passed(), "{g}\n{}", r.render());
            assert!(r.checked_in("pentagon") > 0);
        }
    }

    #[test]
    fn klein_is_the_xor_group() {
        let k = klein();
        for x in 0..4 {
            assert_eq!(k.t(x, x), 3);
            assert_eq!(k.t(3, x), x);
        }
        assert_eq!(k.t(0, 1), 2);
    }

    #[test]
    fn closed_generators_pass() {
        for name in CLOSED {
            let r = validate_skew_closed(&skew_closed(name).unwrap());
            assert!(r.passed(), "{name}\n{}", r.render());
        }
    }

    #[test]
    fn every_named_structure_passes() {
        for name in MONOIDAL {
            let r = validate_skew_monoidal(&skew_monoidal(name).unwrap());
            assert!(r.passed(), "{name}\n{}", r.render());
        }
        for name in BRAIDED {
            let (c, s) = braided(name).unwrap();
            let r = crate::skewmon::validate_braiding(&c, &s);
            assert!(r.passed(), "{name}\n{}", r.render());
        }
    }

    #[test]
    fn deloop_has_nontrivial_homs() {
        let c = deloop(3);
        assert_eq!(c.cat.hom(0, 0).len(), 3);
        // x . y = e in Z/3.
        let (x, y) = (c.cat.morphism("x").unwrap(), c.cat.morphism("y").unwrap());
        assert_eq!(c.cat.comp(x, y), Some(c.cat.id(0)));
        assert_eq!(c.tm(x, x), y);
        let h = deloop_closed(3);
        assert_eq!(h.hm(x, y), h.cat.id(0));
        assert_eq!(h.hm(x, h.cat.id(0)), x);
    }

    #[test]
    fn catalogue_morphisms_are_lax_functors() {
        let ms = morphisms();
        assert!(ms.len() >= 10);
        for m in ms {
            let s = skew_monoidal(&m.source).unwrap();
            let t = skew_monoidal(&m.target).unwrap();
            let r = validate_lax_functor(&s, &t, &m.functor).unwrap();
            assert!(r.passed(), "{}\n{}", m.name, r.render());
        }
    }
}
