use shortcat_web::{certify, references, roundtrip, source, validate};

#[test]
fn every_reference_has_source_text() {
    let refs = references();
    assert!(refs.lines().count() > 100);
    for r in refs.lines() {
        let text = source(r).unwrap_or_else(|e| panic!("{r}: {e}"));
        assert!(text.starts_with("shortcat-format 1\n"), "{r}");
    }
}

#[test]
fn text_and_reference_give_the_same_verdict() {
    for r in ["catalogue:z2", "induced-plain:klein", "mutant:deloop-z3.alpha.0"] {
        let by_ref = validate(r).unwrap();
        let by_text = validate(&source(r).unwrap()).unwrap();
        let tail = |s: &str| s.lines().skip(1).map(str::to_string).collect::<Vec<_>>();
        assert_eq!(tail(&by_ref), tail(&by_text), "{r}");
    }
    assert!(validate("mutant:deloop-z3.alpha.0").unwrap().contains("verdict fail"));
    assert!(validate("mutant:deloop-z3.alpha.0").unwrap().contains(" met\n"));
}

#[test]
fn certify_and_roundtrip() {
    let c = certify("catalogue:heyting-2", false).unwrap();
    assert!(c.contains("flag left-representable yes"), "{c}");
    assert!(roundtrip("catalogue:poset-skew-first").unwrap().contains("verdict pass"));
    assert!(roundtrip("induced-plain:z3").unwrap().contains("verdict pass"));
    let failed = certify("mutant:deloop-z3.alpha.0", false).unwrap();
    assert!(failed.contains("verdict fail"));
}

#[test]
fn bad_input_is_an_error_string() {
    let e = validate("shortcat-format 1\nkind: category\n\n[objects]\na\n\n[morphisms]\nf = a -> b\n").unwrap_err();
    assert!(e.contains("8:"), "{e}");
    assert!(validate("catalogue:nope").is_err());
    assert!(roundtrip("category:z2").is_err());
}

#[test]
fn reordered_text_warns() {
    let text = source("catalogue:z2").unwrap();
    let mut lines: Vec<&str> = text.lines().collect();
    let at = lines.iter().position(|l| *l == "[objects]").unwrap();
    lines.swap(at + 1, at + 2);
    let out = validate(&(lines.join("\n") + "\n")).unwrap();
    assert!(out.starts_with("warning: "), "{out}");
    assert!(out.contains("verdict pass"));
}
