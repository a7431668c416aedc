use shortcat::axioms::{embed_plain, validate_multi};
use shortcat::catalogue;
use shortcat::induce::{induce_short, induce_short_skew};
use shortcat::multi::{Flavour, Multi};
use shortcat::report::Report;
use shortcat::skewmon::{
    check_symmetry, classify_flavour, validate_braided_functor, validate_braiding, validate_lax_functor,
    validate_skew_closed, validate_skew_monoidal, LaxMonFunctor,
};

fn failed_in(r: &Report, family: &str) -> bool {
    r.failures_in(family).next().is_some()
}

fn isos(c: &shortcat::skewmon::SkewMonCategory, maps: &[usize]) -> Vec<bool> {
    maps.iter().map(|&m| c.cat.is_iso(m)).collect()
}

#[test]
fn poset_second_is_left_normal_only() {
    let c = catalogue::poset_skew_second();
    let r = validate_skew_monoidal(&c);
    assert!(r.passed() && r.checked_in("pentagon") == 16);
    assert_eq!(isos(&c, &c.lambda), [true, true]);
    assert_eq!(isos(&c, &c.rho), [false, true]);
    let fl = classify_flavour(&c);
    assert!(fl.left_normal && !fl.monoidal);
}

#[test]
fn poset_first_has_invertible_rho_only() {
    let c = catalogue::poset_skew_first();
    assert!(validate_skew_monoidal(&c).passed());
    assert!(c.rho.iter().all(|&m| c.cat.is_id(m)));
    assert_eq!(isos(&c, &c.lambda), [true, false]);
    let fl = classify_flavour(&c);
    assert!(!fl.left_normal && !fl.monoidal);
}

#[test]
fn z2_is_strict_and_fully_flavoured() {
    let c = catalogue::z2();
    assert!(validate_skew_monoidal(&c).passed());
    assert!(c.alpha.iter().chain(&c.lambda).chain(&c.rho).all(|&m| c.cat.is_id(m)));
    let fl = classify_flavour(&c);
    assert!(fl.left_normal && fl.right_normal && fl.monoidal && fl.closed);
}

#[test]
fn heyting_homs_are_implication() {
    let fl = classify_flavour(&catalogue::heyting2());
    assert!(fl.left_normal && fl.monoidal && fl.closed);
    for h in &fl.homs {
        let implies = usize::from(h.b == 0 || h.c == 1);
        assert_eq!(h.hom, implies, "[{}, {}]", h.b, h.c);
    }
    assert_eq!(fl.homs.len(), 4);
}

#[test]
fn invertible_structure_maps_mean_monoidal() {
    for name in catalogue::MONOIDAL {
        let c = catalogue::skew_monoidal(name).unwrap();
        let n = c.n();
        let all = (0..n).all(|a| c.cat.is_iso(c.lambda(a)) && c.cat.is_iso(c.rho(a)))
            && c.triples().all(|(a, b, d)| c.cat.is_iso(c.alpha(a, b, d)));
        assert_eq!(classify_flavour(&c).monoidal, all, "{name}");
    }
}

#[test]
fn lax_functors() {
    for cm in catalogue::morphisms() {
        let src = catalogue::skew_monoidal(&cm.source).unwrap();
        let tgt = catalogue::skew_monoidal(&cm.target).unwrap();
        let r = validate_lax_functor(&src, &tgt, &cm.functor).unwrap();
        assert!(r.passed() && r.checked_in("lax-assoc") > 0, "{}", cm.name);
    }
    let c = catalogue::deloop(3);
    let mut t = LaxMonFunctor::identity(&c);
    t.f2[0] = 1;
    let r = validate_lax_functor(&c, &c, &t).unwrap();
    assert!(failed_in(&r, "lax-left-unit") && failed_in(&r, "lax-right-unit"), "{}", r.render());
    let mut t = LaxMonFunctor::identity(&c);
    t.f0 = 2;
    assert!(!validate_lax_functor(&c, &c, &t).unwrap().passed());
}

#[test]
fn braidings() {
    for name in ["terminal-sym", "z2-sym", "klein-four-sym", "deloop-z2-sym", "deloop-z3-sym"] {
        let (c, s) = catalogue::braided(name).unwrap();
        let r = validate_braiding(&c, &s);
        assert!(r.passed() && r.checked_in("braid-11") > 0, "{name}");
        assert!(check_symmetry(&c, &s), "{name}");
        for (x, a, b) in c.triples() {
            let (f, g) = (s.at(&c, x, a, b), s.inv_at(&c, x, a, b));
            assert!(c.cat.comp(f, g).is_some_and(|h| c.cat.is_id(h)));
            assert!(c.cat.comp(g, f).is_some_and(|h| c.cat.is_id(h)));
        }
        let t = LaxMonFunctor::identity(&c);
        assert!(validate_braided_functor(&c, &c, &t, &s, &s).passed(), "{name}");
    }
    let (c, mut s) = catalogue::deloop_sym(3);
    s.s[0] = 1;
    let r = validate_braiding(&c, &s);
    assert!(failed_in(&r, "braid-inverse"), "{}", r.render());
    assert!(["braid-11", "braid-12", "braid-13", "braid-14"].iter().any(|f| failed_in(&r, f)), "{}", r.render());
    s.s_inv[0] = 2;
    assert!(!check_symmetry(&c, &s));
}

#[test]
fn klein_swap_preserves_the_symmetry() {
    let (c, s) = catalogue::klein_sym();
    let swap = catalogue::morphisms().into_iter().find(|m| m.name == "klein-swap-ab").unwrap();
    assert!(validate_braided_functor(&c, &c, &swap.functor, &s, &s).passed());
}

#[test]
fn skew_closed() {
    for name in catalogue::CLOSED {
        let r = validate_skew_closed(&catalogue::skew_closed(name).unwrap());
        assert!(r.passed() && r.checked_in("lj-triangle") > 0, "{name}");
    }
    let mut c = catalogue::deloop_closed(3);
    c.l_map[0] = 1;
    let r = validate_skew_closed(&c);
    assert!(failed_in(&r, "lj-triangle"), "{}", r.render());
    c.schemas.clear();
    assert!(failed_in(&validate_skew_closed(&c), "lj-triangle"));
}

fn plain_z2() -> Multi {
    induce_short(&catalogue::z2()).unwrap().into_inner()
}

#[test]
fn z2_substitution_adds_codomains() {
    let m = plain_z2();
    let mut n = 0;
    for g in 0..m.map_count() {
        for f in 0..m.map_count() {
            if m.arity(g) < 2 || m.arity(f) < 2 {
                continue;
            }
            for i in 1..=m.arity(g) {
                if m.dom(g)[i - 1] != m.cod(f) || !m.case_supported(m.shape(g), i, m.shape(f)) {
                    continue;
                }
                let r = m.sub(g, i, f).expect("required case");
                let mut dom = m.dom(g).to_vec();
                dom.splice(i - 1..i, m.dom(f).iter().copied());
                assert_eq!(m.dom(r), &dom[..]);
                assert_eq!(m.cod(r), dom.iter().sum::<usize>() % 2);
                n += 1;
            }
        }
    }
    // binary into binary, binary into ternary, ternary into binary
    assert_eq!(n, 4 * 2 * 2 + 8 * 3 * 2 + 4 * 2 * 4);
}

#[test]
fn poset_first_loose_maps_are_everywhere_and_j_misses_some() {
    let m = induce_short_skew(&catalogue::poset_skew_first()).unwrap().multi.into_inner();
    assert!(validate_multi(&m, 1).passed());
    for len in 0..=2 {
        for code in 0..(1usize << len) {
            let dom: Vec<usize> = (0..len).map(|k| (code >> k) & 1).collect();
            for b in 0..2 {
                assert_eq!(m.set(Flavour::Loose, &dom, b).len(), 1, "{dom:?} -> {b}");
            }
        }
    }
    let image: std::collections::BTreeSet<_> = m.j_entries().into_values().collect();
    let loose_positive = (0..m.map_count()).filter(|&f| m.flavour(f) == Flavour::Loose && m.arity(f) > 0).count();
    assert!(image.len() < loose_positive);
}

#[test]
fn embedding_keeps_the_plain_tables() {
    for name in ["terminal", "z2", "klein", "heyting-2", "deloop-z2"] {
        let p = induce_short(&catalogue::skew_monoidal(name).unwrap()).unwrap();
        let plain = p.clone().into_inner();
        let e = embed_plain(&p).unwrap().into_inner();
        let plain_rep = validate_multi(&plain, 1);
        let rep = validate_multi(&e, 1);
        assert!(rep.passed(), "{name}\n{}", rep.render());

        for (f, r) in e.j_entries() {
            assert_eq!(e.name(r).strip_prefix("l.").unwrap_or(e.name(r)), e.name(f), "{name}");
        }
        let strip = |s: &str| s.strip_prefix("l.").unwrap_or(s).to_string();
        for fl in [Flavour::Tight, Flavour::Loose] {
            for f in 0..e.map_count() {
                if e.flavour(f) != fl || plain.is_morphism(f) {
                    continue;
                }
                let x = plain.lookup(&strip(e.name(f))).expect("embedded map comes from a plain one");
                assert_eq!((plain.dom(x), plain.cod(x)), (e.dom(f), e.cod(f)));
            }
        }
        for (g, i, f) in plain.required_substs() {
            let want = plain.sub(g, i, f).map(|r| plain.name(r).to_string());
            let (eg, ef) = (e.lookup(plain.name(g)).unwrap(), e.lookup(plain.name(f)).unwrap());
            let got = e.sub(eg, i, ef).map(|r| strip(e.name(r)));
            assert_eq!(want, got, "{name}");
        }

        for fam in ["assoc-line-a", "assoc-line-b", "assoc-notline-a", "assoc-notline-b", "assoc-notline-c", "assoc-notline-d"] {
            assert_eq!(rep.checked_in(fam), plain_rep.checked_in(fam), "{name} {fam}");
        }
        for fam in ["identity", "nat-in-a", "nat-in-b", "nat-in-c", "dinat-in-b", "profunctoriality", "typing"] {
            assert!(rep.checked_in(fam) >= plain_rep.checked_in(fam), "{name} {fam}");
        }
        let j: usize = ["j-nat-1", "j-nat-2", "j-nat-3", "j-nat-4", "j-nat-5"].iter().map(|f| rep.checked_in(f)).sum();
        assert!(j > 0);
        assert!(rep.checked() >= plain_rep.checked() + j, "{name}");
    }
}
