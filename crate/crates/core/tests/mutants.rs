use shortcat::format::parse;
use shortcat::mutants::{expectation_met, mutants, parse_expectation};
use shortcat::structure::{builtin, builtin_names, validate};

#[test]
fn every_mutant_fails_at_its_annotation() {
    let all = mutants();
    assert!(all.len() >= 50, "{}", all.len());
    let mut bad = Vec::new();
    for m in &all {
        let text = m.text().unwrap_or_else(|e| panic!("{}: {e}", m.id));
        let p = parse(&text, &builtin).unwrap_or_else(|e| panic!("{}: {e}", m.id));
        assert!(p.warnings.is_empty(), "{}", m.id);
        let rep = validate(&p.structure, 1).unwrap();
        let (fam, ids) = parse_expectation(p.structure.annotation("expect").unwrap()).unwrap();
        if rep.passed() || !expectation_met(&rep, &fam, &ids) {
            bad.push(format!("{} expect {fam} {ids:?}\n{}", m.id, rep.render()));
        }
    }
    assert!(bad.is_empty(), "{}", bad.join("\n"));
}

#[test]
fn every_kind_has_mutants() {
    let kinds: std::collections::BTreeSet<&str> = mutants()
        .iter()
        .map(|m| builtin(&m.base).unwrap().kind())
        .collect();
    assert_eq!(kinds.len(), 8, "{kinds:?}");
}

#[test]
fn mutant_ids_are_unique() {
    let all = mutants();
    let ids: std::collections::BTreeSet<&str> = all.iter().map(|m| m.id.as_str()).collect();
    assert_eq!(ids.len(), all.len());
}

#[test]
fn only_mutants_fail() {
    for r in builtin_names() {
        let rep = validate(&builtin(&r).unwrap(), 1).unwrap();
        assert!(rep.passed(), "{r}");
    }
}


mod completeness {
    use proptest::prelude::*;
    use shortcat::format::{parse, serialize, Document};
    use shortcat::structure::{builtin, validate};

    const BASES: [&str; 10] = [
        "catalogue:z3",
        "catalogue:heyting-2",
        "catalogue:deloop-z3",
        "catalogue:klein-four-sym",
        "catalogue:deloop-z3-closed",
        "catalogue:heyting-2-closed",
        "category:deloop-z3",
        "induced-plain:deloop-z2",
        "induced:z2",
        "morphism:z2-to-klein-b",
    ];

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(256))]

        /// Any single-entry change to a passing file is rejected by the
        /// parser or flips at least one instance.
        #[test]
        fn single_entry_edits_are_caught(base in 0..BASES.len(), entry in any::<prop::sample::Index>(), pick in any::<prop::sample::Index>()) {
            let text = serialize(&builtin(BASES[base]).unwrap());
            let mut doc = Document::parse(&text).unwrap();
            let slots: Vec<(String, Vec<String>, Vec<String>)> = doc
                .sections
                .iter()
                .filter(|s| s.name != "ends")
                .flat_map(|s| s.entries.iter().filter_map(move |e| e.value.clone().map(|v| (s.name.clone(), e.key.clone(), v))))
                .collect();
            let (sec, key, old) = slots[entry.index(slots.len())].clone();
            let pool: Vec<Vec<String>> = {
                let mut p: Vec<Vec<String>> = doc.section(&sec).unwrap().entries.iter().filter_map(|e| e.value.clone()).filter(|v| *v != old).collect();
                p.sort();
                p.dedup();
                p
            };
            prop_assume!(!pool.is_empty());
            doc.set(&sec, &key, pool[pick.index(pool.len())].clone()).unwrap();
            match parse(&doc.render(), &builtin) {
                Err(_) => {}
                Ok(p) => {
                    let rep = validate(&p.structure, 1);
                    prop_assert!(rep.map_or(true, |r| !r.passed()), "[{sec}] {key:?} survived");
                }
            }
        }
    }
}
