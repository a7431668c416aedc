use proptest::prelude::*;

use shortcat::catalogue::{comm_monoid, thin_skew_monoidal};
use shortcat::classify::certify;
use shortcat::fincat::FinCategory;
use shortcat::format::{parse, serialize};
use shortcat::induce::{induce_short, induce_short_skew};
use shortcat::skewmon::{classify_flavour, validate_skew_monoidal, SkewMonCategory};
use shortcat::structure::{builtin, validate, Body, Structure};
use shortcat::transport::roundtrip_check;

const NAMES: [&str; 4] = ["0", "1", "2", "3"];

fn chain(n: usize) -> FinCategory {
    FinCategory::poset(&NAMES[..n], |a, b| a <= b, |a, b| if a == b { format!("id{a}") } else { format!("{a}<{b}") })
}

/// Order-theoretic conditions under which a table on a chain carries a
/// (necessarily unique) skew monoidal structure.
fn chain_admits(n: usize, t: &[usize], unit: usize) -> bool {
    let m = |a: usize, b: usize| t[a * n + b];
    let all = |f: &dyn Fn(usize, usize, usize, usize) -> bool| {
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| (0..n).all(|d| f(a, b, c, d)))))
    };
    all(&|a, b, c, d| !(a <= b && c <= d) || m(a, c) <= m(b, d))
        && all(&|a, b, c, _| m(m(a, b), c) <= m(a, m(b, c)))
        && (0..n).all(|a| m(unit, a) <= a && a <= m(a, unit))
}

fn chain_table() -> impl Strategy<Value = (usize, Vec<usize>, usize)> {
    (1usize..=3).prop_flat_map(|n| (Just(n), prop::collection::vec(0..n, n * n), 0..n))
}

/// Commutative table on `0..n` with unit `0`: only the upper triangle is free.
fn comm_table() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (1usize..=4).prop_flat_map(|n| {
        let free = n * (n - 1) / 2;
        (Just(n), prop::collection::vec(0..n, free)).prop_map(|(n, vals)| {
            let mut t = vec![0; n * n];
            let mut it = vals.into_iter();
            for a in 0..n {
                for b in a..n {
                    let v = if a == 0 { b } else { it.next().unwrap() };
                    t[a * n + b] = v;
                    t[b * n + a] = v;
                }
            }
            (n, t)
        })
    })
}

fn canonical_roundtrip(c: &SkewMonCategory) {
    let text = serialize(&Structure::new(Body::SkewMonoidal(c.clone())));
    let p = parse(&text, &builtin).unwrap();
    assert!(p.warnings.is_empty());
    assert_eq!(serialize(&p.structure), text);

    let mut lines: Vec<&str> = text.lines().collect();
    let at = lines.iter().position(|l| *l == "[alpha]").unwrap() + 1;
    let end = lines[at..].iter().position(|l| l.is_empty()).map_or(lines.len(), |k| at + k);
    lines[at..end].reverse();
    let p = parse(&(lines.join("\n") + "\n"), &builtin).unwrap();
    assert_eq!(serialize(&p.structure), text);
    assert_eq!(p.warnings.is_empty(), end - at < 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn chain_tables((n, t, unit) in chain_table()) {
        let built = thin_skew_monoidal(chain(n), |a, b| t[a * n + b], unit);
        prop_assert_eq!(built.is_ok(), chain_admits(n, &t, unit));
        let Ok(c) = built else { return Ok(()) };

        let r = validate_skew_monoidal(&c);
        prop_assert!(r.passed());
        prop_assert_eq!(r.checked_in("pentagon"), n.pow(4));

        let left_normal = (0..n).all(|a| t[unit * n + a] == a);
        prop_assert_eq!(classify_flavour(&c).left_normal, left_normal);
        prop_assert_eq!(induce_short(&c).is_ok(), left_normal);

        let m = induce_short_skew(&c).unwrap().multi.into_inner();
        let short = Structure::new(Body::Short { multi: m.clone(), braiding: None });
        prop_assert!(validate(&short, 1).unwrap().passed());
        prop_assert!(certify(&m, "chain").unwrap().left_representable);
        prop_assert!(roundtrip_check(&c).unwrap().passed());
        canonical_roundtrip(&c);
    }

    #[test]
    fn commutative_monoids((n, t) in comm_table()) {
        let assoc = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]])));
        let built = comm_monoid(&NAMES[..n], |a, b| t[a * n + b], 0);
        prop_assert_eq!(built.is_ok(), assoc);
        let Ok(c) = built else { return Ok(()) };

        let group = (0..n).all(|a| (0..n).any(|b| t[a * n + b] == 0));
        let fl = classify_flavour(&c);
        prop_assert!(fl.monoidal);
        prop_assert_eq!(fl.closed, group);

        let m = induce_short(&c).unwrap().into_inner();
        let cert = certify(&m, "monoid").unwrap();
        prop_assert_eq!(cert.representable, Some(true));
        prop_assert_eq!(cert.closed(), group);
        prop_assert!(roundtrip_check(&c).unwrap().passed());
        canonical_roundtrip(&c);
    }
}
