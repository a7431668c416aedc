use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use assert_cmd::prelude::*;

fn shortcat() -> Command {
    let mut cmd = Command::cargo_bin("shortcat").expect("binary should be built");
    cmd.env_remove("SHORTCAT_REPORT_DIR");
    cmd
}

fn run(args: &[&str]) -> Output {
    shortcat().args(args).output().expect("shortcat should run")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli").join(name);
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

/// Compares against `tests/golden/<name>`; `SHORTCAT_BLESS=1` rewrites it.
fn golden(name: &str, actual: &str) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("SHORTCAT_BLESS").is_some() {
        fs::create_dir_all(path.parent().unwrap()).unwrap();
        fs::write(&path, actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(actual, expected, "output differs from {}", path.display());
}

#[test]
fn golden_reports() {
    for (file, args, code) in [
        ("terminal.report.txt", &["validate", "catalogue:terminal"][..], 0),
        ("heyting-2.report.txt", &["validate", "catalogue:heyting-2"], 0),
        ("induced-plain-z2.report.txt", &["validate", "induced-plain:z2"], 0),
        ("deloop-z3.alpha.0.report.txt", &["validate", "mutant:deloop-z3.alpha.0"], 1),
        ("z3.roundtrip.txt", &["roundtrip", "catalogue:z3"], 0),
        ("induced-plain-z2.certificate.txt", &["certify", "induced-plain:z2", "--no-witnesses"], 0),
        ("terminal.sc", &["catalogue", "catalogue:terminal"], 0),
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(code), "{args:?}\n{}", stderr(&o));
        golden(file, &stdout(&o));
    }
}

#[test]
fn catalogue_output_is_canonical() {
    let dir = scratch("canonical");
    let o = run(&["catalogue", "positives", "--out", dir.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let mut n = 0;
    for e in fs::read_dir(&dir).unwrap() {
        let p = e.unwrap().path();
        let o = run(&["validate", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}\n{}", p.display(), stdout(&o));
        assert!(stderr(&o).is_empty(), "{}: {}", p.display(), stderr(&o));
        n += 1;
    }
    assert!(n >= 20);
}

#[test]
fn every_mutant_file_fails_as_annotated() {
    let dir = scratch("mutants");
    let o = run(&["catalogue", "mutants", "--out", dir.to_str().unwrap()]);
    assert!(o.status.success());
    let files: Vec<_> = fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    assert!(files.len() >= 50);
    for p in files {
        let o = run(&["validate", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(1), "{}", p.display());
        let out = stdout(&o);
        assert!(out.contains(" met\n"), "{}\n{out}", p.display());
        assert!(!out.contains(" unmet\n"), "{}\n{out}", p.display());
    }
}

#[test]
fn reports_do_not_depend_on_jobs() {
    let pos = scratch("jobs-positives");
    let neg = scratch("jobs-mutants");
    assert!(run(&["catalogue", "positives", "--out", pos.to_str().unwrap()]).status.success());
    assert!(run(&["catalogue", "mutants", "--out", neg.to_str().unwrap()]).status.success());
    let mut files: Vec<String> = [&pos, &neg]
        .iter()
        .flat_map(|d| fs::read_dir(d).unwrap())
        .map(|e| e.unwrap().path().to_string_lossy().into_owned())
        .collect();
    files.sort();
    let report = |jobs: &str| {
        let o = shortcat().arg("validate").args(&files).args(["--jobs", jobs]).output().unwrap();
        assert_eq!(o.status.code(), Some(1));
        o.stdout
    };
    let one = report("1");
    assert!(!one.is_empty());
    assert_eq!(one, report("4"));
    assert_eq!(one, report("7"));
}

#[test]
fn exit_codes() {
    let dir = scratch("exit");
    let write = |name: &str, text: &str| {
        let p = dir.join(name);
        fs::write(&p, text).unwrap();
        p.to_string_lossy().into_owned()
    };

    let empty = write("empty.sc", "shortcat-format 1\nkind: category\n\n[objects]\n\n[morphisms]\n\n[compose]\n");
    let o = run(&["validate", &empty]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("summary checked 0 failed 0 verdict pass"));

    let garbled = write("garbled.sc", "shortcat-format 1\nkind: category\n\n[objects]\na\n\n[morphisms]\nida = a -> b\n");
    let o = run(&["validate", &garbled]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("8:"), "{}", stderr(&o));

    let version = write("version.sc", "shortcat-format 9\nkind: category\n");
    assert_eq!(run(&["validate", &version]).status.code(), Some(2));
    let kind = write("kind.sc", "shortcat-format 1\nkind: operad\n");
    assert_eq!(run(&["validate", &kind]).status.code(), Some(2));

    assert_eq!(run(&["validate", "catalogue:nope"]).status.code(), Some(2));
    assert_eq!(run(&["validate", "no/such/file.sc"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["validate", "mutant:z3.tensor.0"]).status.code(), Some(1));

    let o = run(&["validate", "catalogue:klein", "--max-objects", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["validate", "catalogue:klein", "--max-objects", "2", "--allow-large"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn reordered_input_is_normalized_with_a_warning() {
    let dir = scratch("reorder");
    let text = stdout(&run(&["catalogue", "catalogue:z2"]));
    let mut lines: Vec<&str> = text.lines().collect();
    let at = lines.iter().position(|l| *l == "[objects]").unwrap();
    lines.swap(at + 1, at + 2);
    let p = dir.join("z2.sc");
    fs::write(&p, lines.join("\n") + "\n").unwrap();
    let o = run(&["validate", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("not in canonical form"), "{}", stderr(&o));
    let canonical = stdout(&run(&["validate", "catalogue:z2"]));
    assert_eq!(stdout(&o).lines().skip(1).collect::<Vec<_>>(), canonical.lines().skip(1).collect::<Vec<_>>());
}

#[test]
fn report_files() {
    let dir = scratch("reports");
    let explicit = dir.join("explicit.txt");
    let o = run(&["validate", "catalogue:z2", "--report", explicit.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(fs::read_to_string(&explicit).unwrap(), stdout(&o));

    let o = shortcat()
        .env("SHORTCAT_REPORT_DIR", &dir)
        .args(["validate", "catalogue:heyting-2"])
        .output()
        .unwrap();
    assert!(o.status.success());
    let written = fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .find(|p| p.to_string_lossy().contains("heyting-2"))
        .expect("report written into the directory");
    assert_eq!(fs::read_to_string(written).unwrap(), stdout(&o));
}

fn without_provenance(text: &str) -> String {
    text.lines().filter(|l| !l.starts_with("@provenance")).collect::<Vec<_>>().join("\n")
}

#[test]
fn construct_recovers_the_catalogue() {
    for (input, which, expected) in [
        ("induced-plain:klein", "k", "catalogue:klein"),
        ("induced:z3", "ks", "catalogue:z3"),
        ("induced:poset-skew-second", "ks", "catalogue:poset-skew-second"),
    ] {
        let o = run(&["construct", input, "--which", which]);
        assert!(o.status.success(), "{input}: {}", stderr(&o));
        let built = stdout(&o);
        let direct = stdout(&run(&["catalogue", expected]));
        assert_eq!(without_provenance(&built), without_provenance(&direct), "{input}");
    }
}

#[test]
fn construct_closed_and_braiding_files_validate() {
    let dir = scratch("construct");
    let kcl = dir.join("kcl.sc");
    let o = run(&["construct", "induced:heyting-2", "--which", "kcl", "--out", kcl.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(run(&["validate", kcl.to_str().unwrap()]).status.success());
    let o = run(&["roundtrip", kcl.to_str().unwrap(), "--partner", "catalogue:heyting-2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let fwd = dir.join("fwd.sc");
    let o = run(&["construct", "induced:klein-four-sym", "--which", "braiding-forward", "--out", fwd.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(run(&["validate", fwd.to_str().unwrap()]).status.success());
    let o = run(&["roundtrip", fwd.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn roundtrips_pass_on_the_catalogue() {
    for name in ["terminal", "z2", "z3", "klein", "poset-skew-second", "poset-skew-first", "heyting-2"] {
        let o = run(&["roundtrip", &format!("catalogue:{name}")]);
        assert_eq!(o.status.code(), Some(0), "{name}\n{}", stdout(&o));
    }
}

#[test]
fn commutative_monoid_tables() {
    let o = run(&["catalogue", "comm-monoid", "--table", "0 1 2;1 2 0;2 0 1"]);
    assert!(o.status.success());
    let dir = scratch("monoid");
    let p = dir.join("z3.sc");
    fs::write(&p, stdout(&o)).unwrap();
    assert!(run(&["validate", p.to_str().unwrap()]).status.success());

    let o = run(&["catalogue", "comm-monoid", "--table", "0 1;0 1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn file_references_resolve_relative_to_the_file() {
    let dir = scratch("refs");
    let o = run(&["catalogue", "morphism:id-z2"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let z2 = stdout(&run(&["catalogue", "catalogue:z2"]));
    fs::write(dir.join("z2.sc"), z2).unwrap();
    let text = stdout(&o).replace("catalogue:z2", "file:z2.sc");
    assert!(text.contains("file:z2.sc"), "{text}");
    fs::write(dir.join("id.sc"), text).unwrap();
    let o = run(&["validate", dir.join("id.sc").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), stderr(&o));
}
