//! Loading structure files and references, size guards and exit codes.

use std::fmt;
use std::path::{Path, PathBuf};

use shortcat::format::parse;
use shortcat::mutants;
use shortcat::structure::{builtin, Structure};
use shortcat::Error;

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INTERNAL: u8 = 3;

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(String),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(m) | CliError::Usage(m) => f.write_str(m),
        }
    }
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Io(_) | CliError::Usage(_) => EXIT_USAGE,
            CliError::Core(e) if e.is_internal() => EXIT_INTERNAL,
            CliError::Core(
                Error::Parse { .. }
                | Error::UnknownKind(_)
                | Error::VersionMismatch(_)
                | Error::UnknownGenerator(_)
                | Error::MalformedTable(_)
                | Error::DanglingId(_)
                | Error::SearchBoundExceeded { .. },
            ) => EXIT_USAGE,
            CliError::Core(_) => EXIT_FAIL,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub jobs: usize,
    pub max_objects: usize,
    pub max_multimaps: usize,
    pub allow_large: bool,
}

impl Limits {
    pub fn guard(&self, s: &Structure) -> CliResult<()> {
        if self.allow_large {
            return Ok(());
        }
        let (objects, set) = s.size();
        if objects > self.max_objects {
            return Err(Error::SearchBoundExceeded {
                what: "object count".into(),
                size: objects,
                bound: self.max_objects,
            }
            .into());
        }
        if set > self.max_multimaps {
            return Err(Error::SearchBoundExceeded {
                what: "largest multimap set".into(),
                size: set,
                bound: self.max_multimaps,
            }
            .into());
        }
        Ok(())
    }
}

const MAX_DEPTH: usize = 8;

fn resolve(reference: &str, dir: &Path, depth: usize) -> shortcat::Result<Structure> {
    if let Some(rel) = reference.strip_prefix("file:") {
        if depth >= MAX_DEPTH {
            return Err(Error::Precondition(format!("references nest deeper than {MAX_DEPTH}")));
        }
        let path = dir.join(rel);
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Error::Precondition(format!("{}: {e}", path.display())))?;
        let here = path.parent().map(Path::to_path_buf).unwrap_or_default();
        return Ok(parse(&text, &|r| resolve(r, &here, depth + 1))?.structure);
    }
    if let Some(id) = reference.strip_prefix("mutant:") {
        let text = mutants::find(id)?.text()?;
        return Ok(parse(&text, &|r| resolve(r, dir, depth + 1))?.structure);
    }
    builtin(reference)
}

/// A file path, or a catalogue reference when no such file exists.
pub fn load(path: &str) -> CliResult<Structure> {
    let p = PathBuf::from(path);
    if p.exists() {
        let text = std::fs::read_to_string(&p).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
        let dir = p.parent().map(Path::to_path_buf).unwrap_or_default();
        let parsed = parse(&text, &|r| resolve(r, &dir, 0))?;
        for w in &parsed.warnings {
            eprintln!("warning: {path}: {w}");
        }
        return Ok(parsed.structure);
    }
    if path.contains(':') {
        return Ok(resolve(path, Path::new("."), 0)?);
    }
    Err(CliError::Io(format!("{path}: no such file")))
}

/// Short name for report subjects and file names.
pub fn stem(path: &str) -> String {
    let base = Path::new(path)
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.to_string());
    let base = base.strip_suffix(".sc").unwrap_or(&base);
    base.chars().map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '.' { c } else { '-' }).collect()
}

pub fn write_out(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
