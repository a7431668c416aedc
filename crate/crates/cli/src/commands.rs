use std::path::{Path, PathBuf};

use shortcat::axioms::embed_plain;
use shortcat::catalogue;
use shortcat::classify::certify as run_certify;
use shortcat::format::serialize;
use shortcat::induce::induce_short_skew;
use shortcat::multi::{Multi, ShortMulticategory};
use shortcat::mutants::{self, expectation_met, parse_expectation};
use shortcat::report::{Report, Sink};
use shortcat::structure::{builtin_names, monoidal, validate as run_validate, Body, Structure};
use shortcat::transport::{
    k_object, kcl_object, ks_object, roundtrip_check, roundtrip_check_closed, s_from_short_braiding,
    short_braiding_from_s,
};

use crate::input::{load, stem, write_out, CliError, CliResult, Limits, EXIT_FAIL, EXIT_PASS};

pub const REPORT_DIR_VAR: &str = "SHORTCAT_REPORT_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Which {
    K,
    Ks,
    Kcl,
    BraidingForward,
    BraidingBackward,
}

impl Which {
    fn name(self) -> &'static str {
        match self {
            Which::K => "k",
            Which::Ks => "ks",
            Which::Kcl => "kcl",
            Which::BraidingForward => "braiding-forward",
            Which::BraidingBackward => "braiding-backward",
        }
    }
}

fn report_target(explicit: Option<&Path>, name: &str) -> Option<PathBuf> {
    explicit.map(Path::to_path_buf).or_else(|| {
        std::env::var_os(REPORT_DIR_VAR)
            .filter(|d| !d.is_empty())
            .map(|d| PathBuf::from(d).join(format!("{name}.report.txt")))
    })
}

fn emit_report(text: &str, explicit: Option<&Path>, name: &str) -> CliResult<()> {
    print!("{text}");
    if let Some(p) = report_target(explicit, name) {
        std::fs::write(&p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn checked(path: &str, limits: &Limits) -> CliResult<(Structure, Report)> {
    let s = load(path)?;
    limits.guard(&s)?;
    let mut rep = run_validate(&s, limits.jobs)?;
    rep.subject = format!("{} {}", s.kind(), stem(path));
    if let Some((fam, ids)) = s.annotation("expect").and_then(parse_expectation) {
        let met = expectation_met(&rep, &fam, &ids);
        rep.notes.push(format!("expect {fam} {} {}", ids.join(" "), if met { "met" } else { "unmet" }));
    }
    Ok((s, rep))
}

pub fn validate(paths: &[String], report: Option<&Path>, limits: &Limits) -> CliResult<u8> {
    let mut text = String::new();
    let mut code = EXIT_PASS;
    for p in paths {
        let (_, rep) = checked(p, limits)?;
        if !rep.passed() {
            code = EXIT_FAIL;
        }
        text.push_str(&rep.render());
    }
    let name = if paths.len() == 1 { stem(&paths[0]) } else { "validate".into() };
    emit_report(&text, report, &name)?;
    Ok(code)
}

/// The short structure a command works on: the file itself, or the skew
/// structure induced by a skew monoidal file.
fn short_of(s: &Structure) -> CliResult<Multi> {
    match &s.body {
        Body::Short { multi, .. } => Ok(multi.clone()),
        Body::SkewMonoidal(c) | Body::Braided(c, _) => Ok(induce_short_skew(c)?.multi.into_inner()),
        _ => Err(CliError::Usage(format!("expected a short or skew monoidal structure, found {}", s.kind()))),
    }
}

/// Validates first; an invalid input stops the command with its report.
fn valid_input(path: &str, limits: &Limits) -> CliResult<Result<Structure, u8>> {
    let (s, rep) = checked(path, limits)?;
    if rep.passed() {
        Ok(Ok(s))
    } else {
        print!("{}", rep.render());
        Ok(Err(EXIT_FAIL))
    }
}

pub fn certify(path: &str, out: Option<&Path>, witnesses: bool, limits: &Limits) -> CliResult<u8> {
    let s = match valid_input(path, limits)? {
        Ok(s) => s,
        Err(code) => return Ok(code),
    };
    let m = short_of(&s)?;
    let cert = run_certify(&m, &stem(path))?;
    write_out(out, &cert.render(&m, witnesses))?;
    Ok(EXIT_PASS)
}

pub fn construct(path: &str, which: Which, out: Option<&Path>, limits: &Limits) -> CliResult<u8> {
    let s = match valid_input(path, limits)? {
        Ok(s) => s,
        Err(code) => return Ok(code),
    };
    let body = match which {
        Which::K | Which::Ks | Which::Kcl | Which::BraidingForward => {
            let m = match &s.body {
                Body::Short { multi, .. } => multi.clone(),
                _ => return Err(CliError::Usage(format!("`{}` needs a short structure, found {}", which.name(), s.kind()))),
            };
            let cert = run_certify(&m, &stem(path))?;
            match which {
                Which::K => {
                    if m.is_skew() {
                        return Err(CliError::Usage("`k` needs a plain structure; use `ks`".into()));
                    }
                    Body::SkewMonoidal(k_object(&m, &cert)?)
                }
                Which::Ks => {
                    let (m, cert) = if m.is_skew() {
                        (m, cert)
                    } else {
                        let sk = embed_plain(&ShortMulticategory::new(m)?)?.into_inner();
                        let c = run_certify(&sk, &stem(path))?;
                        (sk, c)
                    };
                    Body::SkewMonoidal(ks_object(&m, &cert)?)
                }
                Which::Kcl => Body::SkewClosed(kcl_object(&m, &cert)?),
                _ => {
                    let Body::Short { braiding: Some(beta), .. } = &s.body else {
                        return Err(CliError::Usage("`braiding-forward` needs beta32/beta42/beta43 sections".into()));
                    };
                    let c = if m.is_skew() { ks_object(&m, &cert)? } else { k_object(&m, &cert)? };
                    let br = s_from_short_braiding(&m, &cert, beta)?;
                    Body::Braided(c, br)
                }
            }
        }
        Which::BraidingBackward => {
            let Body::Braided(c, br) = &s.body else {
                return Err(CliError::Usage(format!("`braiding-backward` needs a braiding file, found {}", s.kind())));
            };
            let multi = induce_short_skew(c)?.multi.into_inner();
            let cert = run_certify(&multi, &stem(path))?;
            let beta = short_braiding_from_s(&multi, &cert, br)?;
            Body::Short {
                multi,
                braiding: Some(beta),
            }
        }
    };
    let built = Structure::new(body).annotated("provenance", format!("construct {} from {}", which.name(), stem(path)));
    write_out(out, &serialize(&built))?;
    Ok(EXIT_PASS)
}

pub fn roundtrip(path: &str, partner: Option<&str>, report: Option<&Path>, limits: &Limits) -> CliResult<u8> {
    let s = match valid_input(path, limits)? {
        Ok(s) => s,
        Err(code) => return Ok(code),
    };
    let mut rep = match &s.body {
        Body::SkewMonoidal(c) => roundtrip_check(c)?,
        Body::Braided(c, br) => {
            let mut r = roundtrip_check(c)?;
            let multi = induce_short_skew(c)?.multi.into_inner();
            let cert = run_certify(&multi, &stem(path))?;
            let beta = short_braiding_from_s(&multi, &cert, br)?;
            let back = s_from_short_braiding(&multi, &cert, &beta)?;
            let mut sink = Sink::default();
            sink.record("roundtrip-braiding", back == *br, || (vec![], "rebuilt".into(), "original".into()));
            r.absorb(sink.into_report("roundtrip"));
            r
        }
        Body::SkewClosed(c) => {
            let reference = partner
                .map(str::to_string)
                .or_else(|| s.annotation("partner").map(str::to_string))
                .ok_or_else(|| CliError::Usage("skew closed roundtrip needs --partner or an @partner annotation".into()))?;
            let p = load(&reference)?;
            limits.guard(&p)?;
            roundtrip_check_closed(c, monoidal(&p)?)?
        }
        Body::Short { multi, .. } => {
            let cert = run_certify(multi, &stem(path))?;
            let rebuilt = if multi.is_skew() { ks_object(multi, &cert)? } else { k_object(multi, &cert)? };
            roundtrip_check(&rebuilt)?
        }
        _ => return Err(CliError::Usage(format!("no roundtrip for {}", s.kind()))),
    };
    rep.subject = format!("roundtrip {}", stem(path));
    emit_report(&rep.render(), report, &format!("{}.roundtrip", stem(path)))?;
    Ok(if rep.passed() { EXIT_PASS } else { EXIT_FAIL })
}

/// Rows separated by `;`, entries by whitespace, elements named `0..n`.
fn parse_table(table: &str) -> CliResult<Vec<Vec<usize>>> {
    let rows: Vec<Vec<usize>> = table
        .split(';')
        .map(|r| r.split_whitespace().map(|t| t.parse::<usize>()).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Usage(format!("--table: {e}")))?;
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
        return Err(CliError::Usage("--table must be a square table over 0..n".into()));
    }
    // Single-digit names keep name order equal to numeric order.
    if n > 10 {
        return Err(CliError::Usage("--table supports at most 10 elements".into()));
    }
    Ok(rows)
}

fn comm_monoid(table: &str) -> CliResult<Structure> {
    let rows = parse_table(table)?;
    let n = rows.len();
    let unit = (0..n)
        .find(|&u| (0..n).all(|x| rows[u][x] == x && rows[x][u] == x))
        .ok_or_else(|| CliError::Usage("--table has no unit element".into()))?;
    let names: Vec<String> = (0..n).map(|k| k.to_string()).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let c = catalogue::comm_monoid(&refs, |a, b| rows[a][b], unit)?;
    Ok(Structure::new(Body::SkewMonoidal(c)).annotated("provenance", format!("catalogue comm-monoid {}", table.trim())))
}

fn file_name(reference: &str) -> String {
    format!("{}.sc", reference.replace(':', "-"))
}

fn write_dir(dir: &Path, files: &[(String, String)]) -> CliResult<()> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
    for (name, text) in files {
        let p = dir.join(name);
        std::fs::write(&p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
        println!("{}", p.display());
    }
    Ok(())
}

pub fn catalogue_cmd(name: &str, table: Option<&str>, out: Option<&Path>) -> CliResult<u8> {
    match name {
        "list" => {
            let mut text = String::new();
            for r in builtin_names() {
                text.push_str(&r);
                text.push('\n');
            }
            for m in mutants::mutants() {
                text.push_str(&format!("mutant:{}\n", m.id));
            }
            write_out(out, &text)?;
        }
        "comm-monoid" => {
            let t = table.ok_or_else(|| CliError::Usage("comm-monoid needs --table".into()))?;
            write_out(out, &serialize(&comm_monoid(t)?))?;
        }
        "mutants" | "positives" => {
            let dir = out.ok_or_else(|| CliError::Usage(format!("`{name}` writes many files; give --out DIR")))?;
            let files: Vec<(String, String)> = if name == "mutants" {
                mutants::mutants()
                    .iter()
                    .map(|m| Ok((format!("{}.sc", m.id), m.text()?)))
                    .collect::<shortcat::Result<_>>()?
            } else {
                builtin_names()
                    .iter()
                    .map(|r| Ok((file_name(r), serialize(&shortcat::structure::builtin(r)?.annotated("provenance", format!("catalogue {r}"))))))
                    .collect::<shortcat::Result<_>>()?
            };
            write_dir(dir, &files)?;
        }
        _ => {
            if table.is_some() {
                return Err(CliError::Usage("--table only applies to comm-monoid".into()));
            }
            let text = match name.strip_prefix("mutant:") {
                Some(id) => mutants::find(id)?.text()?,
                None => serialize(&shortcat::structure::builtin(name)?.annotated("provenance", format!("catalogue {name}"))),
            };
            write_out(out, &text)?;
        }
    }
    Ok(EXIT_PASS)
}
