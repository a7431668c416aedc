//! Line-oriented text format shared by every structure kind.
//!
//! ```text
//! file       := magic NL kind-line NL annotation* (blank* section)* blank*
//! magic      := "shortcat-format 1"
//! kind-line  := "kind: " KIND
//! annotation := "@" WORD SP TEXT NL
//! section    := "[" WORD "]" NL (entry NL | blank | comment)*
//! entry      := tokens ( SP "=" SP tokens )?
//! tokens     := TOKEN (SP TOKEN)*
//! comment    := "#" TEXT
//! ```
//!
//! Tokens are maximal runs of non-whitespace characters other than a lone
//! `=`. The canonical form has exactly one space between tokens, every
//! section of the kind present in its fixed order, entries sorted by key
//! tokens, one blank line before each section and no comments. Canonical
//! files survive `parse` followed by `serialize` byte for byte.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::fincat::{FinCategory, FinFunctor, Mor, Obj};
use crate::multi::{Flavour, MapId, Multi};
use crate::skewmon::{Braiding, LaxMonFunctor, SkewClosedCategory, SkewMonCategory};
use crate::structure::{Body, End, Ended, Structure};
use crate::transport::{MultiMorphism, ShortBraiding};

pub const MAGIC: &str = "shortcat-format 1";

pub const KINDS: [&str; 8] = [
    "category",
    "short-multi",
    "short-skew",
    "skew-monoidal",
    "skew-closed",
    "braiding",
    "morphism",
    "lax-functor",
];

const CATEGORY: [&str; 4] = ["objects", "morphisms", "identities", "compose"];
const SHORT: [&str; 5] = ["maps", "pre", "post", "subst", "j"];
const SHORT_BRAIDING: [&str; 3] = ["beta32", "beta42", "beta43"];
const MONOIDAL: [&str; 6] = ["tensor", "tensor-morphisms", "unit", "alpha", "lambda", "rho"];
const BRAIDING: [&str; 2] = ["braiding", "braiding-inverse"];
const CLOSED: [&str; 7] = ["hom", "hom-morphisms", "unit", "I", "J", "L", "schemas"];
const FUNCTOR: [&str; 3] = ["ends", "objects-map", "morphisms-map"];

/// Sections of a kind, in canonical order.
pub fn sections_of(kind: &str) -> Vec<&'static str> {
    let mut v: Vec<&str> = Vec::new();
    match kind {
        "category" => v.extend(CATEGORY),
        "short-multi" | "short-skew" => {
            v.extend(CATEGORY);
            v.extend(SHORT);
            v.extend(SHORT_BRAIDING);
        }
        "skew-monoidal" => {
            v.extend(CATEGORY);
            v.extend(MONOIDAL);
        }
        "braiding" => {
            v.extend(CATEGORY);
            v.extend(MONOIDAL);
            v.extend(BRAIDING);
        }
        "skew-closed" => {
            v.extend(CATEGORY);
            v.extend(CLOSED);
        }
        "lax-functor" => {
            v.extend(FUNCTOR);
            v.extend(["f0", "f2"]);
        }
        "morphism" => {
            v.extend(FUNCTOR);
            v.push("maps-map");
        }
        _ => {}
    }
    v
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub key: Vec<String>,
    pub value: Option<Vec<String>>,
    pub line: usize,
    /// Column of every key token followed by every value token.
    pub cols: Vec<usize>,
}

impl Entry {
    fn col(&self, k: usize) -> usize {
        self.cols.get(k).copied().unwrap_or(1)
    }

    /// Column of value token `k`.
    fn vcol(&self, k: usize) -> usize {
        self.col(self.key.len() + k)
    }

    fn render(&self) -> String {
        match &self.value {
            Some(v) => format!("{} = {}", self.key.join(" "), v.join(" ")),
            None => self.key.join(" "),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    pub name: String,
    pub line: usize,
    pub entries: Vec<Entry>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub kind: String,
    pub annotations: Vec<(String, String)>,
    pub sections: Vec<Section>,
}

fn perr(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (k, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s + 1, &line[s..k]));
                start = None;
            }
            (false, None) => start = Some(k),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

impl Document {
    pub fn new(kind: &str) -> Self {
        Document {
            kind: kind.to_string(),
            annotations: Vec::new(),
            sections: Vec::new(),
        }
    }

    pub fn parse(text: &str) -> Result<Document> {
        let mut lines = text.lines().enumerate().map(|(k, l)| (k + 1, l));
        match lines.next() {
            Some((_, l)) if l.trim_end() == MAGIC => {}
            Some((_, l)) if l.starts_with("shortcat-format ") => {
                return Err(Error::VersionMismatch(format!("`{}`, this reader handles `{MAGIC}`", l.trim_end())))
            }
            _ => return Err(perr(1, 1, format!("expected `{MAGIC}`"))),
        }
        let kind = match lines.next() {
            Some((n, l)) => match l.trim_end().strip_prefix("kind: ") {
                Some(k) if KINDS.contains(&k.trim()) => k.trim().to_string(),
                Some(k) => return Err(Error::UnknownKind(k.trim().to_string())),
                None => return Err(perr(n, 1, "expected `kind: <kind>`")),
            },
            None => return Err(perr(2, 1, "expected `kind: <kind>`")),
        };
        let allowed = sections_of(&kind);
        let mut doc = Document::new(&kind);
        for (n, raw) in lines {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('@') {
                if !doc.sections.is_empty() {
                    return Err(perr(n, 1, "annotations must precede the first section"));
                }
                let (key, val) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                if key.is_empty() {
                    return Err(perr(n, 2, "empty annotation key"));
                }
                doc.annotations.push((key.to_string(), val.trim().to_string()));
                continue;
            }
            if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                let col = raw.find('[').map_or(1, |c| c + 2);
                if !allowed.contains(&name) {
                    return Err(perr(n, col, format!("section `{name}` does not belong to kind `{kind}`")));
                }
                if doc.sections.iter().any(|s| s.name == name) {
                    return Err(perr(n, col, format!("section `{name}` appears twice")));
                }
                doc.sections.push(Section {
                    name: name.to_string(),
                    line: n,
                    entries: Vec::new(),
                });
                continue;
            }
            let Some(sec) = doc.sections.last_mut() else {
                return Err(perr(n, 1, "entry outside any section"));
            };
            let toks = tokens(raw);
            let eqs: Vec<usize> = toks.iter().enumerate().filter(|(_, t)| t.1 == "=").map(|(k, _)| k).collect();
            let entry = match eqs.as_slice() {
                [] => Entry {
                    key: toks.iter().map(|t| t.1.to_string()).collect(),
                    value: None,
                    line: n,
                    cols: toks.iter().map(|t| t.0).collect(),
                },
                [k] if *k > 0 && *k + 1 < toks.len() => Entry {
                    key: toks[..*k].iter().map(|t| t.1.to_string()).collect(),
                    value: Some(toks[k + 1..].iter().map(|t| t.1.to_string()).collect()),
                    line: n,
                    cols: toks.iter().enumerate().filter(|(j, _)| j != k).map(|(_, t)| t.0).collect(),
                },
                [k, ..] if eqs.len() > 1 => return Err(perr(n, toks[eqs[1]].0, format!("second `=` (first at column {})", toks[*k].0))),
                [k] => return Err(perr(n, toks[*k].0, "`=` needs tokens on both sides")),
                _ => unreachable!(),
            };
            if let Some(prev) = sec.entries.iter().find(|e| e.key == entry.key) {
                return Err(perr(n, 1, format!("duplicate key `{}` (first on line {})", entry.key.join(" "), prev.line)));
            }
            sec.entries.push(entry);
        }
        Ok(doc)
    }

    pub fn section(&self, name: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.name == name)
    }

    pub fn entries(&self, name: &str) -> &[Entry] {
        self.section(name).map_or(&[], |s| s.entries.as_slice())
    }

    fn section_line(&self, name: &str) -> usize {
        self.section(name).map_or(2, |s| s.line)
    }

    pub fn annotation(&self, key: &str) -> Option<&str> {
        self.annotations.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    fn push(&mut self, section: &str, key: Vec<String>, value: Option<Vec<String>>) {
        if self.section(section).is_none() {
            self.sections.push(Section {
                name: section.to_string(),
                line: 0,
                entries: Vec::new(),
            });
        }
        let sec = self.sections.iter_mut().find(|s| s.name == section).expect("just added");
        sec.entries.push(Entry {
            key,
            value,
            line: 0,
            cols: Vec::new(),
        });
    }

    fn put(&mut self, section: &str, key: &[&str], value: &[&str]) {
        let s = |v: &[&str]| v.iter().map(|t| t.to_string()).collect::<Vec<_>>();
        self.push(section, s(key), Some(s(value)));
    }

    fn touch(&mut self, section: &str) {
        if self.section(section).is_none() {
            self.sections.push(Section {
                name: section.to_string(),
                line: 0,
                entries: Vec::new(),
            });
        }
    }

    /// Replace the value of one existing entry.
    pub fn set(&mut self, section: &str, key: &[String], value: Vec<String>) -> Result<()> {
        let e = self
            .sections
            .iter_mut()
            .find(|s| s.name == section)
            .and_then(|s| s.entries.iter_mut().find(|e| e.key == key))
            .ok_or_else(|| Error::Precondition(format!("no entry `{}` in [{section}]", key.join(" "))))?;
        e.value = Some(value);
        Ok(())
    }

    /// Canonical text.
    pub fn render(&self) -> String {
        let mut out = format!("{MAGIC}\nkind: {}\n", self.kind);
        for (k, v) in &self.annotations {
            if v.is_empty() {
                out.push_str(&format!("@{k}\n"));
            } else {
                out.push_str(&format!("@{k} {v}\n"));
            }
        }
        for name in sections_of(&self.kind) {
            let Some(sec) = self.section(name) else { continue };
            out.push_str(&format!("\n[{name}]\n"));
            let mut es: Vec<&Entry> = sec.entries.iter().collect();
            es.sort_by(|a, b| a.key.cmp(&b.key));
            for e in es {
                out.push_str(&e.render());
                out.push('\n');
            }
        }
        out
    }
}

/// Resolves `source`/`target` references of functor files.
pub type Resolver<'a> = &'a dyn Fn(&str) -> Result<Structure>;

/// Outcome of reading a structure file.
#[derive(Debug, Clone)]
pub struct Parsed {
    pub structure: Structure,
    pub warnings: Vec<String>,
}

/// Parse a structure file; non-canonical input is accepted and reported.
pub fn parse(text: &str, resolve: Resolver) -> Result<Parsed> {
    let doc = Document::parse(text)?;
    let structure = from_document(&doc, resolve)?;
    let canon = serialize(&structure);
    let mut warnings = Vec::new();
    if canon != text {
        let line = canon
            .lines()
            .zip(text.lines())
            .position(|(a, b)| a != b)
            .map_or_else(|| canon.lines().count().min(text.lines().count()) + 1, |k| k + 1);
        warnings.push(format!("input is not in canonical form (first difference at line {line}); it was normalized"));
    }
    Ok(Parsed { structure, warnings })
}

pub fn serialize(s: &Structure) -> String {
    to_document(s).render()
}

// ---------------------------------------------------------------------------
// Reading.

struct Names<'c> {
    cat: &'c FinCategory,
}

impl Names<'_> {
    fn obj(&self, e: &Entry, tok: &str, col: usize) -> Result<Obj> {
        self.cat
            .object(tok)
            .ok_or_else(|| perr(e.line, col, format!("undeclared object `{tok}`")))
    }

    fn mor(&self, e: &Entry, tok: &str, col: usize) -> Result<Mor> {
        self.cat
            .morphism(tok)
            .ok_or_else(|| perr(e.line, col, format!("undeclared morphism `{tok}`")))
    }
}

fn shape(e: &Entry, keys: usize, values: usize, what: &str) -> Result<Vec<String>> {
    let ok = e.key.len() == keys && e.value.as_ref().map_or(values == 0, |v| v.len() == values);
    if !ok {
        return Err(perr(e.line, 1, format!("expected `{what}`")));
    }
    Ok(e.value.clone().unwrap_or_default())
}

fn read_category(doc: &Document) -> Result<FinCategory> {
    let mut objects: Vec<String> = Vec::new();
    for e in doc.entries("objects") {
        shape(e, 1, 0, "<object>")?;
        objects.push(e.key[0].clone());
    }
    let declared: HashSet<&str> = objects.iter().map(|s| s.as_str()).collect();
    let mut mors: Vec<(String, String, String)> = Vec::new();
    let mut ends: HashMap<String, (String, String)> = HashMap::new();
    for e in doc.entries("morphisms") {
        let v = e.value.as_ref();
        match v.map(|v| v.as_slice()) {
            Some([a, arrow, b]) if e.key.len() == 1 && arrow == "->" => {
                for (tok, col) in [(a, e.vcol(0)), (b, e.vcol(2))] {
                    if !declared.contains(tok.as_str()) {
                        return Err(perr(e.line, col, format!("undeclared object `{tok}`")));
                    }
                }
                mors.push((e.key[0].clone(), a.clone(), b.clone()));
                ends.insert(e.key[0].clone(), (a.clone(), b.clone()));
            }
            _ => return Err(perr(e.line, 1, "expected `<morphism> = <object> -> <object>`")),
        }
    }
    let mut ids: Vec<(String, String)> = Vec::new();
    for e in doc.entries("identities") {
        let v = shape(e, 1, 1, "<object> = <morphism>")?;
        if !declared.contains(e.key[0].as_str()) {
            return Err(perr(e.line, e.col(0), format!("undeclared object `{}`", e.key[0])));
        }
        match ends.get(&v[0]) {
            None => return Err(perr(e.line, e.vcol(0), format!("undeclared morphism `{}`", v[0]))),
            Some((a, b)) if a != &e.key[0] || b != &e.key[0] => {
                return Err(perr(e.line, e.vcol(0), format!("`{}` is not an endomorphism of `{}`", v[0], e.key[0])))
            }
            _ => {}
        }
        ids.push((e.key[0].clone(), v[0].clone()));
    }
    let mut comp: Vec<(String, String, String)> = Vec::new();
    let mut have: HashSet<(String, String)> = HashSet::new();
    for e in doc.entries("compose") {
        let v = shape(e, 2, 1, "<g> <f> = <g.f>")?;
        for (tok, col) in [(&e.key[0], e.col(0)), (&e.key[1], e.col(1)), (&v[0], e.vcol(0))] {
            if !ends.contains_key(tok) {
                return Err(perr(e.line, col, format!("undeclared morphism `{tok}`")));
            }
        }
        if ends[&e.key[1]].1 != ends[&e.key[0]].0 {
            return Err(perr(e.line, e.col(0), format!("`{}` and `{}` are not composable", e.key[0], e.key[1])));
        }
        have.insert((e.key[0].clone(), e.key[1].clone()));
        comp.push((e.key[0].clone(), e.key[1].clone(), v[0].clone()));
    }
    // Missing identities and their composites are filled in.
    for o in &objects {
        if !ids.iter().any(|(a, _)| a == o) {
            let name = format!("id{o}");
            if ends.contains_key(&name) || declared.contains(name.as_str()) {
                return Err(perr(doc.section_line("identities"), 1, format!("no identity for `{o}` and `{name}` is taken")));
            }
            mors.push((name.clone(), o.clone(), o.clone()));
            ends.insert(name.clone(), (o.clone(), o.clone()));
            ids.push((o.clone(), name));
        }
    }
    for (o, i) in &ids {
        for (f, (a, b)) in &ends {
            if b == o && have.insert((i.clone(), f.clone())) {
                comp.push((i.clone(), f.clone(), f.clone()));
            }
            if a == o && have.insert((f.clone(), i.clone())) {
                comp.push((f.clone(), i.clone(), f.clone()));
            }
        }
    }
    FinCategory::new(objects, mors, ids, comp).map_err(|e| perr(doc.section_line("objects"), 1, e.to_string()))
}

fn at(line: usize, col: usize) -> impl Fn(Error) -> Error {
    move |err| perr(line, col, err.to_string())
}

fn parse_flavour(e: &Entry, tok: &str) -> Result<Flavour> {
    match tok {
        "t" => Ok(Flavour::Tight),
        "l" => Ok(Flavour::Loose),
        _ => Err(perr(e.line, e.vcol(0), format!("flavour must be `t` or `l`, found `{tok}`"))),
    }
}

fn parse_pos(e: &Entry, k: usize) -> Result<usize> {
    e.key[k]
        .parse::<usize>()
        .ok()
        .filter(|&i| (1..=4).contains(&i))
        .ok_or_else(|| perr(e.line, e.col(k), format!("position must be 1..4, found `{}`", e.key[k])))
}

fn read_multi(doc: &Document, skew: bool) -> Result<(Multi, Option<ShortBraiding>)> {
    let cat = read_category(doc)?;
    let nm = Names { cat: &cat };
    let mut b = Multi::builder(cat.clone(), skew);
    let mut added: Vec<(MapId, Vec<Obj>, Obj)> = Vec::new();
    let mut entries: Vec<&Entry> = doc.entries("maps").iter().collect();
    entries.sort_by(|a, b| a.key.cmp(&b.key));
    for e in entries {
        let v = e.value.as_deref().unwrap_or(&[]);
        if e.key.len() != 1 || v.len() < 3 || v[v.len() - 2] != "->" {
            return Err(perr(e.line, 1, "expected `<map> = <t|l> <object>* -> <object>`"));
        }
        let fl = parse_flavour(e, &v[0])?;
        let mut dom = Vec::new();
        for (k, tok) in v[1..v.len() - 2].iter().enumerate() {
            dom.push(nm.obj(e, tok, e.vcol(k + 1))?);
        }
        let cod = nm.obj(e, &v[v.len() - 1], e.vcol(v.len() - 1))?;
        let g = b.add_map(&e.key[0], fl, dom.clone(), cod).map_err(at(e.line, e.col(0)))?;
        added.push((g, dom, cod));
    }
    let map = |b: &crate::multi::MultiBuilder, e: &Entry, tok: &str, col: usize| {
        b.lookup(tok)
            .ok_or_else(|| perr(e.line, col, format!("undeclared map `{tok}`")))
    };
    let mut pre_seen = HashSet::new();
    for e in doc.entries("pre") {
        let v = shape(e, 3, 1, "<map> <position> <morphism> = <map>")?;
        let g = map(&b, e, &e.key[0], e.col(0))?;
        let i = parse_pos(e, 1)?;
        let p = nm.mor(e, &e.key[2], e.col(2))?;
        let r = map(&b, e, &v[0], e.vcol(0))?;
        b.pre(g, i, p, r).map_err(at(e.line, e.col(0)))?;
        pre_seen.insert((g, i, p));
    }
    let mut post_seen = HashSet::new();
    for e in doc.entries("post") {
        let v = shape(e, 2, 1, "<morphism> <map> = <map>")?;
        let q = nm.mor(e, &e.key[0], e.col(0))?;
        let f = map(&b, e, &e.key[1], e.col(1))?;
        let r = map(&b, e, &v[0], e.vcol(0))?;
        b.post(q, f, r).map_err(at(e.line, e.col(0)))?;
        post_seen.insert((q, f));
    }
    for e in doc.entries("subst") {
        let v = shape(e, 3, 1, "<map> <position> <map> = <map>")?;
        let g = map(&b, e, &e.key[0], e.col(0))?;
        let i = parse_pos(e, 1)?;
        let f = map(&b, e, &e.key[2], e.col(2))?;
        let r = map(&b, e, &v[0], e.vcol(0))?;
        b.subst(g, i, f, r).map_err(at(e.line, e.col(0)))?;
    }
    for e in doc.entries("j") {
        let v = shape(e, 1, 1, "<map> = <map>")?;
        let f = map(&b, e, &e.key[0], e.col(0))?;
        let r = map(&b, e, &v[0], e.vcol(0))?;
        b.j(f, r).map_err(at(e.line, e.col(0)))?;
    }
    // Identity actions left out of the file are the trivial ones.
    let mut holes = Vec::new();
    let mut post_holes = Vec::new();
    for (g, dom, cod) in &added {
        for (k, &o) in dom.iter().enumerate() {
            if !pre_seen.contains(&(*g, k + 1, cat.id(o))) {
                holes.push((*g, k + 1, cat.id(o)));
            }
        }
        if !post_seen.contains(&(cat.id(*cod), *g)) {
            post_holes.push((cat.id(*cod), *g));
        }
    }
    for (g, i, p) in holes {
        b.pre(g, i, p, g)?;
    }
    for (q, f) in post_holes {
        b.post(q, f, f)?;
    }
    let mut beta = ShortBraiding::default();
    let mut any = false;
    for (name, table) in [("beta32", &mut beta.b32), ("beta42", &mut beta.b42), ("beta43", &mut beta.b43)] {
        any |= doc.section(name).is_some();
        for e in doc.entries(name) {
            let v = shape(e, 1, 1, "<map> = <map>")?;
            let f = map(&b, e, &e.key[0], e.col(0))?;
            let r = map(&b, e, &v[0], e.vcol(0))?;
            table.insert(f, r);
        }
    }
    let m = b.finish().map_err(|e| perr(doc.section_line("maps"), 1, e.to_string()))?;
    Ok((m, any.then_some(beta)))
}

/// Fills a table indexed by `k` tuples of objects or morphisms.
struct Table<'d> {
    doc: &'d Document,
    section: &'static str,
    slots: Vec<Option<usize>>,
}

impl<'d> Table<'d> {
    fn new(doc: &'d Document, section: &'static str, size: usize) -> Self {
        Table {
            doc,
            section,
            slots: vec![None; size],
        }
    }

    fn fill(
        mut self,
        arity: usize,
        radix: usize,
        key: impl Fn(&Entry, &str, usize) -> Result<usize>,
        value: impl Fn(&Entry, &str, usize) -> Result<usize>,
    ) -> Result<Vec<usize>> {
        for e in self.doc.entries(self.section) {
            let v = shape(e, arity, 1, &format!("{arity} key tokens = <value>"))?;
            let mut idx = 0;
            for k in 0..arity {
                idx = idx * radix + key(e, &e.key[k], e.col(k))?;
            }
            self.slots[idx] = Some(value(e, &v[0], e.vcol(0))?);
        }
        match self.slots.iter().position(|s| s.is_none()) {
            Some(k) => Err(perr(
                self.doc.section_line(self.section),
                1,
                format!("[{}] has no entry for index {k}", self.section),
            )),
            None => Ok(self.slots.into_iter().map(|s| s.unwrap_or_default()).collect()),
        }
    }
}

fn read_unit(doc: &Document, nm: &Names) -> Result<Obj> {
    match doc.entries("unit") {
        [e] if e.key == ["unit"] => {
            let v = shape(e, 1, 1, "unit = <object>")?;
            nm.obj(e, &v[0], e.vcol(0))
        }
        _ => Err(perr(doc.section_line("unit"), 1, "expected a single `unit = <object>` entry")),
    }
}

fn read_monoidal(doc: &Document) -> Result<SkewMonCategory> {
    let cat = read_category(doc)?;
    let nm = Names { cat: &cat };
    let (n, m) = (cat.object_count(), cat.morphism_count());
    let o = |e: &Entry, t: &str, c: usize| nm.obj(e, t, c);
    let f = |e: &Entry, t: &str, c: usize| nm.mor(e, t, c);
    Ok(SkewMonCategory {
        tensor_obj: Table::new(doc, "tensor", n * n).fill(2, n, o, o)?,
        tensor_mor: Table::new(doc, "tensor-morphisms", m * m).fill(2, m, f, f)?,
        unit: read_unit(doc, &nm)?,
        alpha: Table::new(doc, "alpha", n * n * n).fill(3, n, o, f)?,
        lambda: Table::new(doc, "lambda", n).fill(1, n, o, f)?,
        rho: Table::new(doc, "rho", n).fill(1, n, o, f)?,
        cat: cat.clone(),
    })
}

fn read_braiding(doc: &Document, c: &SkewMonCategory) -> Result<Braiding> {
    let nm = Names { cat: &c.cat };
    let n = c.n();
    let o = |e: &Entry, t: &str, col: usize| nm.obj(e, t, col);
    let f = |e: &Entry, t: &str, col: usize| nm.mor(e, t, col);
    Ok(Braiding {
        s: Table::new(doc, "braiding", n * n * n).fill(3, n, o, f)?,
        s_inv: Table::new(doc, "braiding-inverse", n * n * n).fill(3, n, o, f)?,
    })
}

fn read_closed(doc: &Document) -> Result<SkewClosedCategory> {
    let cat = read_category(doc)?;
    let nm = Names { cat: &cat };
    let (n, m) = (cat.object_count(), cat.morphism_count());
    let o = |e: &Entry, t: &str, c: usize| nm.obj(e, t, c);
    let f = |e: &Entry, t: &str, c: usize| nm.mor(e, t, c);
    let all = SkewClosedCategory::all_schemas();
    let mut schemas = BTreeSet::new();
    for e in doc.entries("schemas") {
        shape(e, 1, 0, "<schema>")?;
        if !all.contains(&e.key[0]) {
            return Err(perr(e.line, e.col(0), format!("unknown schema `{}`", e.key[0])));
        }
        schemas.insert(e.key[0].clone());
    }
    Ok(SkewClosedCategory {
        hom_obj: Table::new(doc, "hom", n * n).fill(2, n, o, o)?,
        hom_mor: Table::new(doc, "hom-morphisms", m * m).fill(2, m, f, f)?,
        unit: read_unit(doc, &nm)?,
        i_map: Table::new(doc, "I", n).fill(1, n, o, f)?,
        j_map: Table::new(doc, "J", n).fill(1, n, o, f)?,
        l_map: Table::new(doc, "L", n * n * n).fill(3, n, o, f)?,
        schemas,
        cat: cat.clone(),
    })
}

fn read_ends(doc: &Document, resolve: Resolver) -> Result<(End, End)> {
    let mut found: BTreeMap<&str, End> = BTreeMap::new();
    for e in doc.entries("ends") {
        let v = shape(e, 1, 1, "source|target = <reference>")?;
        let role = e.key[0].as_str();
        if role != "source" && role != "target" {
            return Err(perr(e.line, e.col(0), format!("unknown end `{role}`")));
        }
        let structure = resolve(&v[0]).map_err(|err| perr(e.line, e.vcol(0), format!("cannot resolve `{}`: {err}", v[0])))?;
        found.insert(
            if role == "source" { "source" } else { "target" },
            End {
                reference: v[0].clone(),
                structure,
            },
        );
    }
    let line = doc.section_line("ends");
    let src = found.remove("source").ok_or_else(|| perr(line, 1, "missing `source`"))?;
    let tgt = found.remove("target").ok_or_else(|| perr(line, 1, "missing `target`"))?;
    Ok((src, tgt))
}

fn read_functor(doc: &Document, src: &FinCategory, tgt: &FinCategory) -> Result<FinFunctor> {
    let (s, t) = (Names { cat: src }, Names { cat: tgt });
    Ok(FinFunctor {
        obj_map: Table::new(doc, "objects-map", src.object_count())
            .fill(1, src.object_count(), |e, k, c| s.obj(e, k, c), |e, k, c| t.obj(e, k, c))?,
        mor_map: Table::new(doc, "morphisms-map", src.morphism_count())
            .fill(1, src.morphism_count(), |e, k, c| s.mor(e, k, c), |e, k, c| t.mor(e, k, c))?,
    })
}

fn monoidal_end(end: &End, line: usize) -> Result<&SkewMonCategory> {
    match &end.structure.body {
        Body::SkewMonoidal(c) | Body::Braided(c, _) => Ok(c),
        _ => Err(perr(line, 1, format!("`{}` is not a skew monoidal structure", end.reference))),
    }
}

fn multi_end(end: &End, line: usize) -> Result<&Multi> {
    match &end.structure.body {
        Body::Short { multi, .. } => Ok(multi),
        _ => Err(perr(line, 1, format!("`{}` is not a short structure", end.reference))),
    }
}

fn read_lax(doc: &Document, resolve: Resolver) -> Result<Ended<LaxMonFunctor>> {
    let (source, target) = read_ends(doc, resolve)?;
    let line = doc.section_line("ends");
    let (s, t) = (monoidal_end(&source, line)?, monoidal_end(&target, line)?);
    let functor = read_functor(doc, &s.cat, &t.cat)?;
    let (sn, tn) = (Names { cat: &s.cat }, Names { cat: &t.cat });
    let f0 = match doc.entries("f0") {
        [e] if e.key == ["f0"] => {
            let v = shape(e, 1, 1, "f0 = <morphism>")?;
            tn.mor(e, &v[0], e.vcol(0))?
        }
        _ => return Err(perr(doc.section_line("f0"), 1, "expected a single `f0 = <morphism>` entry")),
    };
    let n = s.n();
    let f2 = Table::new(doc, "f2", n * n).fill(2, n, |e, k, c| sn.obj(e, k, c), |e, k, c| tn.mor(e, k, c))?;
    Ok(Ended {
        map: LaxMonFunctor { functor, f0, f2 },
        source,
        target,
    })
}

fn read_morphism(doc: &Document, resolve: Resolver) -> Result<Ended<MultiMorphism>> {
    let (source, target) = read_ends(doc, resolve)?;
    let line = doc.section_line("ends");
    let (s, t) = (multi_end(&source, line)?, multi_end(&target, line)?);
    let functor = read_functor(doc, s.cat(), t.cat())?;
    let mut maps: Vec<Option<MapId>> = (0..s.map_count())
        .map(|f| s.is_morphism(f).then(|| functor.mor_map[f]))
        .collect();
    for e in doc.entries("maps-map") {
        let v = shape(e, 1, 1, "<map> = <map>")?;
        let f = s
            .lookup(&e.key[0])
            .filter(|&f| !s.is_morphism(f))
            .ok_or_else(|| perr(e.line, e.col(0), format!("`{}` is not a multimap of the source", e.key[0])))?;
        let g = t
            .lookup(&v[0])
            .ok_or_else(|| perr(e.line, e.vcol(0), format!("undeclared map `{}`", v[0])))?;
        maps[f] = Some(g);
    }
    let maps = maps
        .into_iter()
        .enumerate()
        .map(|(f, g)| g.ok_or_else(|| perr(doc.section_line("maps-map"), 1, format!("no image for `{}`", s.name(f)))))
        .collect::<Result<_>>()?;
    Ok(Ended {
        map: MultiMorphism { functor, maps },
        source,
        target,
    })
}

pub fn from_document(doc: &Document, resolve: Resolver) -> Result<Structure> {
    let body = match doc.kind.as_str() {
        "category" => Body::Category(read_category(doc)?),
        "short-multi" | "short-skew" => {
            let (multi, braiding) = read_multi(doc, doc.kind == "short-skew")?;
            Body::Short { multi, braiding }
        }
        "skew-monoidal" => Body::SkewMonoidal(read_monoidal(doc)?),
        "braiding" => {
            let c = read_monoidal(doc)?;
            let s = read_braiding(doc, &c)?;
            Body::Braided(c, s)
        }
        "skew-closed" => Body::SkewClosed(read_closed(doc)?),
        "lax-functor" => Body::LaxFunctor(Box::new(read_lax(doc, resolve)?)),
        "morphism" => Body::Morphism(Box::new(read_morphism(doc, resolve)?)),
        k => return Err(Error::UnknownKind(k.to_string())),
    };
    Ok(Structure {
        annotations: doc.annotations.clone(),
        body,
    })
}

// ---------------------------------------------------------------------------
// Writing.

fn write_category(d: &mut Document, c: &FinCategory) {
    for s in CATEGORY {
        d.touch(s);
    }
    for o in c.objects() {
        d.push("objects", vec![c.obj_name(o).to_string()], None);
    }
    for m in c.morphisms() {
        d.put("morphisms", &[c.mor_name(m)], &[c.obj_name(c.dom(m)), "->", c.obj_name(c.cod(m))]);
    }
    for o in c.objects() {
        d.put("identities", &[c.obj_name(o)], &[c.mor_name(c.id(o))]);
    }
    for (g, f, h) in c.comp_entries() {
        d.put("compose", &[c.mor_name(g), c.mor_name(f)], &[c.mor_name(h)]);
    }
}

fn write_multi(d: &mut Document, m: &Multi, beta: Option<&ShortBraiding>) {
    write_category(d, m.cat());
    for s in SHORT {
        d.touch(s);
    }
    let c = m.cat();
    for f in m.actionable() {
        let mut v = vec![m.flavour(f).letter().to_string()];
        v.extend(m.dom(f).iter().map(|&o| c.obj_name(o).to_string()));
        v.push("->".into());
        v.push(c.obj_name(m.cod(f)).to_string());
        d.push("maps", vec![m.name(f).to_string()], Some(v));
    }
    for ((g, i, p), r) in m.pre_entries() {
        d.put("pre", &[m.name(g), &i.to_string(), c.mor_name(p)], &[m.name(r)]);
    }
    for ((q, f), r) in m.post_entries() {
        d.put("post", &[c.mor_name(q), m.name(f)], &[m.name(r)]);
    }
    for ((g, i, f), r) in m.subst_entries() {
        d.put("subst", &[m.name(g), &i.to_string(), m.name(f)], &[m.name(r)]);
    }
    for (f, r) in m.j_entries() {
        d.put("j", &[m.name(f)], &[m.name(r)]);
    }
    if let Some(b) = beta {
        for (name, table) in [("beta32", &b.b32), ("beta42", &b.b42), ("beta43", &b.b43)] {
            d.touch(name);
            for (&f, &r) in table {
                d.put(name, &[m.name(f)], &[m.name(r)]);
            }
        }
    }
}

fn write_monoidal(d: &mut Document, s: &SkewMonCategory) {
    let c = &s.cat;
    write_category(d, c);
    for sec in MONOIDAL {
        d.touch(sec);
    }
    let (o, f) = (|x: Obj| c.obj_name(x), |x: Mor| c.mor_name(x));
    for a in c.objects() {
        for b in c.objects() {
            d.put("tensor", &[o(a), o(b)], &[o(s.t(a, b))]);
        }
    }
    for g in c.morphisms() {
        for h in c.morphisms() {
            d.put("tensor-morphisms", &[f(g), f(h)], &[f(s.tm(g, h))]);
        }
    }
    d.put("unit", &["unit"], &[o(s.unit)]);
    for (a, b, x) in s.triples() {
        d.put("alpha", &[o(a), o(b), o(x)], &[f(s.alpha(a, b, x))]);
    }
    for a in c.objects() {
        d.put("lambda", &[o(a)], &[f(s.lambda(a))]);
        d.put("rho", &[o(a)], &[f(s.rho(a))]);
    }
}

fn write_braiding(d: &mut Document, s: &SkewMonCategory, br: &Braiding) {
    let c = &s.cat;
    for sec in BRAIDING {
        d.touch(sec);
    }
    for (x, a, b) in s.triples() {
        let key = [c.obj_name(x), c.obj_name(a), c.obj_name(b)];
        d.put("braiding", &key, &[c.mor_name(br.at(s, x, a, b))]);
        d.put("braiding-inverse", &key, &[c.mor_name(br.inv_at(s, x, a, b))]);
    }
}

fn write_closed(d: &mut Document, s: &SkewClosedCategory) {
    let c = &s.cat;
    write_category(d, c);
    for sec in CLOSED {
        d.touch(sec);
    }
    let (o, f) = (|x: Obj| c.obj_name(x), |x: Mor| c.mor_name(x));
    for a in c.objects() {
        for b in c.objects() {
            d.put("hom", &[o(a), o(b)], &[o(s.h(a, b))]);
        }
    }
    for g in c.morphisms() {
        for h in c.morphisms() {
            d.put("hom-morphisms", &[f(g), f(h)], &[f(s.hm(g, h))]);
        }
    }
    d.put("unit", &["unit"], &[o(s.unit)]);
    for a in c.objects() {
        d.put("I", &[o(a)], &[f(s.big_i(a))]);
        d.put("J", &[o(a)], &[f(s.big_j(a))]);
        for b in c.objects() {
            for x in c.objects() {
                d.put("L", &[o(a), o(b), o(x)], &[f(s.big_l(a, b, x))]);
            }
        }
    }
    for sch in &s.schemas {
        d.push("schemas", vec![sch.clone()], None);
    }
}

fn write_ends<T>(d: &mut Document, e: &Ended<T>, src: &FinCategory, tgt: &FinCategory, f: &FinFunctor) {
    for sec in FUNCTOR {
        d.touch(sec);
    }
    d.put("ends", &["source"], &[&e.source.reference]);
    d.put("ends", &["target"], &[&e.target.reference]);
    for o in src.objects() {
        d.put("objects-map", &[src.obj_name(o)], &[tgt.obj_name(f.obj_map[o])]);
    }
    for m in src.morphisms() {
        d.put("morphisms-map", &[src.mor_name(m)], &[tgt.mor_name(f.mor_map[m])]);
    }
}

pub fn to_document(s: &Structure) -> Document {
    let mut d = Document::new(s.kind());
    d.annotations = s.annotations.clone();
    match &s.body {
        Body::Category(c) => write_category(&mut d, c),
        Body::Short { multi, braiding } => write_multi(&mut d, multi, braiding.as_ref()),
        Body::SkewMonoidal(c) => write_monoidal(&mut d, c),
        Body::Braided(c, br) => {
            write_monoidal(&mut d, c);
            write_braiding(&mut d, c, br);
        }
        Body::SkewClosed(c) => write_closed(&mut d, c),
        Body::LaxFunctor(e) => {
            let (src, tgt) = (
                monoidal_end(&e.source, 0).expect("checked on construction"),
                monoidal_end(&e.target, 0).expect("checked on construction"),
            );
            write_ends(&mut d, e, &src.cat, &tgt.cat, &e.map.functor);
            d.put("f0", &["f0"], &[tgt.cat.mor_name(e.map.f0)]);
            d.touch("f2");
            for a in src.cat.objects() {
                for b in src.cat.objects() {
                    d.put("f2", &[src.cat.obj_name(a), src.cat.obj_name(b)], &[tgt.cat.mor_name(e.map.f2(src, a, b))]);
                }
            }
        }
        Body::Morphism(e) => {
            let (src, tgt) = (
                multi_end(&e.source, 0).expect("checked on construction"),
                multi_end(&e.target, 0).expect("checked on construction"),
            );
            write_ends(&mut d, e, src.cat(), tgt.cat(), &e.map.functor);
            d.touch("maps-map");
            for f in src.actionable() {
                d.put("maps-map", &[src.name(f)], &[tgt.name(e.map.apply(f))]);
            }
        }
    }
    d
}
