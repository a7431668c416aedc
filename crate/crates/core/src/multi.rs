//! Table engine shared by short multicategories and short skew
//! multicategories.
//!
//! Maps are indexed by [`MapId`]; the first `morphism_count` ids are the
//! morphisms of the base category, read as tight unary maps. In the plain
//! case every map of positive arity is tight, nullary maps are loose, and the
//! comparison `j` is the identity.

use std::collections::{BTreeMap, HashMap};
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::fincat::{FinCategory, Mor, Obj};

pub type MapId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavour {
    Tight,
    Loose,
}

impl Flavour {
    pub fn letter(self) -> char {
        match self {
            Flavour::Tight => 't',
            Flavour::Loose => 'l',
        }
    }
}

pub use Flavour::{Loose, Tight};

/// Flavour and arity.
pub type Shape = (Flavour, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapInfo {
    pub name: String,
    pub flavour: Flavour,
    pub dom: Vec<Obj>,
    pub cod: Obj,
}

/// One substitution case `outer o_i inner` of the short structure.
#[derive(Debug, Clone, Copy)]
pub struct Case {
    pub outer: Shape,
    pub inner: Shape,
    pub positions: &'static [usize],
}

const PLAIN_CASES: &[Case] = &[
    Case { outer: (Tight, 2), inner: (Tight, 2), positions: &[1, 2] },
    Case { outer: (Tight, 3), inner: (Tight, 2), positions: &[1, 2, 3] },
    Case { outer: (Tight, 2), inner: (Tight, 3), positions: &[1, 2] },
    Case { outer: (Tight, 2), inner: (Loose, 0), positions: &[1, 2] },
    Case { outer: (Tight, 3), inner: (Loose, 0), positions: &[1, 2, 3] },
];

const SKEW_CASES: &[Case] = &[
    Case { outer: (Tight, 2), inner: (Tight, 2), positions: &[1, 2] },
    Case { outer: (Tight, 3), inner: (Tight, 2), positions: &[1, 2, 3] },
    Case { outer: (Tight, 2), inner: (Tight, 3), positions: &[1, 2] },
    Case { outer: (Tight, 2), inner: (Loose, 0), positions: &[1, 2] },
    Case { outer: (Tight, 3), inner: (Loose, 0), positions: &[1, 2, 3] },
    Case { outer: (Loose, 1), inner: (Loose, 0), positions: &[1] },
    Case { outer: (Tight, 2), inner: (Loose, 1), positions: &[1, 2] },
    Case { outer: (Loose, 1), inner: (Tight, 2), positions: &[1] },
];

#[derive(Debug, Clone)]
pub struct Multi {
    skew: bool,
    cat: FinCategory,
    maps: Vec<MapInfo>,
    index: HashMap<String, MapId>,
    sets: HashMap<(Flavour, Vec<Obj>, Obj), Vec<MapId>>,
    by_shape: HashMap<Shape, Vec<MapId>>,
    by_cod: HashMap<(Flavour, usize, Obj), Vec<MapId>>,
    pre: HashMap<(MapId, usize, Mor), MapId>,
    post: HashMap<(Mor, MapId), MapId>,
    subst: HashMap<(MapId, usize, MapId), MapId>,
    j: HashMap<MapId, MapId>,
}

impl Multi {
    pub fn is_skew(&self) -> bool {
        self.skew
    }

    pub fn cat(&self) -> &FinCategory {
        &self.cat
    }

    pub fn map_count(&self) -> usize {
        self.maps.len()
    }

    pub fn info(&self, f: MapId) -> &MapInfo {
        &self.maps[f]
    }

    pub fn name(&self, f: MapId) -> &str {
        &self.maps[f].name
    }

    pub fn lookup(&self, name: &str) -> Option<MapId> {
        self.index.get(name).copied()
    }

    pub fn arity(&self, f: MapId) -> usize {
        self.maps[f].dom.len()
    }

    pub fn dom(&self, f: MapId) -> &[Obj] {
        &self.maps[f].dom
    }

    pub fn cod(&self, f: MapId) -> Obj {
        self.maps[f].cod
    }

    pub fn flavour(&self, f: MapId) -> Flavour {
        self.maps[f].flavour
    }

    pub fn shape(&self, f: MapId) -> Shape {
        (self.flavour(f), self.arity(f))
    }

    /// Tight unary maps are exactly the morphisms.
    pub fn is_morphism(&self, f: MapId) -> bool {
        f < self.cat.morphism_count()
    }

    /// Maps that carry explicit action tables.
    pub fn actionable(&self) -> impl Iterator<Item = MapId> + '_ {
        self.cat.morphism_count()..self.maps.len()
    }

    /// Normalise a requested flavour: in the plain case only arity decides.
    pub fn norm(&self, fl: Flavour, arity: usize) -> Flavour {
        if self.skew {
            fl
        } else if arity == 0 {
            Loose
        } else {
            Tight
        }
    }

    pub fn shapes(&self) -> Vec<Shape> {
        if self.skew {
            vec![(Loose, 0), (Tight, 1), (Loose, 1), (Tight, 2), (Loose, 2), (Tight, 3), (Tight, 4)]
        } else {
            vec![(Loose, 0), (Tight, 1), (Tight, 2), (Tight, 3), (Tight, 4)]
        }
    }

    pub fn set(&self, fl: Flavour, dom: &[Obj], cod: Obj) -> &[MapId] {
        let fl = self.norm(fl, dom.len());
        self.sets
            .get(&(fl, dom.to_vec(), cod))
            .map_or(&[], |v| v.as_slice())
    }

    pub fn maps_of(&self, shape: Shape) -> &[MapId] {
        let fl = self.norm(shape.0, shape.1);
        self.by_shape.get(&(fl, shape.1)).map_or(&[], |v| v.as_slice())
    }

    pub fn with_cod(&self, shape: Shape, cod: Obj) -> &[MapId] {
        let fl = self.norm(shape.0, shape.1);
        self.by_cod
            .get(&(fl, shape.1, cod))
            .map_or(&[], |v| v.as_slice())
    }

    pub fn cases(&self) -> &'static [Case] {
        if self.skew {
            SKEW_CASES
        } else {
            PLAIN_CASES
        }
    }

    pub fn case_supported(&self, outer: Shape, pos: usize, inner: Shape) -> bool {
        self.cases().iter().any(|c| {
            c.outer == (self.norm(outer.0, outer.1), outer.1)
                && c.inner == (self.norm(inner.0, inner.1), inner.1)
                && c.positions.contains(&pos)
        })
    }

    /// Typing rule: `g o_i f` is tight iff `g` is tight and (`i != 1` or `f` is tight).
    pub fn result_flavour(&self, g: Shape, i: usize, f: Shape) -> Flavour {
        let fl = if g.0 == Tight && (i != 1 || f.0 == Tight) {
            Tight
        } else {
            Loose
        };
        self.norm(fl, g.1 + f.1 - 1)
    }

    /// Domain, codomain and flavour that `g o_i f` must have.
    pub fn expected(&self, g: MapId, i: usize, f: MapId) -> (Flavour, Vec<Obj>, Obj) {
        let mut dom = self.dom(g)[..i - 1].to_vec();
        dom.extend_from_slice(self.dom(f));
        dom.extend_from_slice(&self.dom(g)[i..]);
        (self.result_flavour(self.shape(g), i, self.shape(f)), dom, self.cod(g))
    }

    /// `g o_i f`, dispatching unary cases to composition and the actions.
    /// `None` if the pair does not compose or the table has no entry.
    pub fn sub(&self, g: MapId, i: usize, f: MapId) -> Option<MapId> {
        if i == 0 || i > self.arity(g) || self.dom(g)[i - 1] != self.cod(f) {
            return None;
        }
        if self.is_morphism(f) {
            if self.is_morphism(g) {
                self.cat.comp(g, f)
            } else {
                self.pre.get(&(g, i, f)).copied()
            }
        } else if self.is_morphism(g) {
            self.post.get(&(g, f)).copied()
        } else {
            self.subst.get(&(g, i, f)).copied()
        }
    }

    /// Like [`Multi::sub`] but reports why a value is missing.
    pub fn subst(&self, g: MapId, i: usize, f: MapId) -> Result<MapId> {
        let supported = self.is_morphism(f)
            || (self.is_morphism(g) && i == 1)
            || self.case_supported(self.shape(g), i, self.shape(f));
        if !supported {
            return Err(Error::UnsupportedSubstitution {
                outer: self.name(g).into(),
                pos: i,
                inner: self.name(f).into(),
            });
        }
        self.sub(g, i, f).ok_or_else(|| {
            Error::DanglingId(format!(
                "no entry for {} o{} {}",
                self.name(g),
                i,
                self.name(f)
            ))
        })
    }

    /// The comparison `j`; the identity in the plain case.
    pub fn jmap(&self, f: MapId) -> Option<MapId> {
        if self.skew {
            self.j.get(&f).copied()
        } else {
            Some(f)
        }
    }

    pub fn id_map(&self, o: Obj) -> MapId {
        self.cat.id(o)
    }

    pub fn pre_entries(&self) -> BTreeMap<(MapId, usize, Mor), MapId> {
        self.pre.iter().map(|(k, v)| (*k, *v)).collect()
    }

    pub fn post_entries(&self) -> BTreeMap<(Mor, MapId), MapId> {
        self.post.iter().map(|(k, v)| (*k, *v)).collect()
    }

    pub fn subst_entries(&self) -> BTreeMap<(MapId, usize, MapId), MapId> {
        self.subst.iter().map(|(k, v)| (*k, *v)).collect()
    }

    pub fn j_entries(&self) -> BTreeMap<MapId, MapId> {
        self.j.iter().map(|(k, v)| (*k, *v)).collect()
    }

    /// Every `(g, i, f)` for which a stored substitution must exist.
    pub fn required_substs(&self) -> Vec<(MapId, usize, MapId)> {
        let mut v = Vec::new();
        for c in self.cases() {
            for &g in self.maps_of(c.outer) {
                for &i in c.positions {
                    for &f in self.with_cod(c.inner, self.dom(g)[i - 1]) {
                        v.push((g, i, f));
                    }
                }
            }
        }
        v
    }

    /// Largest hom-set or multimap set; used by size guards.
    pub fn largest_set(&self) -> usize {
        self.sets.values().map(|v| v.len()).max().unwrap_or(0)
    }

    pub fn builder(cat: FinCategory, skew: bool) -> MultiBuilder {
        MultiBuilder::new(cat, skew)
    }

    /// Tables in a form that can be fed back into a builder.
    pub fn to_builder(&self) -> MultiBuilder {
        let mut b = MultiBuilder::new(self.cat.clone(), self.skew);
        for f in self.actionable() {
            let i = self.info(f);
            b.add_map(&i.name, i.flavour, i.dom.clone(), i.cod).expect("copy of valid map");
        }
        b.m.pre = self.pre.clone();
        b.m.post = self.post.clone();
        b.m.subst = self.subst.clone();
        b.m.j = self.j.clone();
        b
    }
}

impl Multi {
    /// The sub-structure on the maps satisfying `keep`, with every table
    /// entry whose operands and result survive. Morphisms are always kept.
    pub fn restrict(&self, keep: impl Fn(MapId) -> bool) -> Result<Multi> {
        let mut b = MultiBuilder::new(self.cat.clone(), self.skew);
        let mut new = vec![None; self.maps.len()];
        for f in 0..self.maps.len() {
            if self.is_morphism(f) {
                new[f] = Some(f);
            } else if keep(f) {
                let i = self.info(f);
                new[f] = Some(b.add_map(&i.name, i.flavour, i.dom.clone(), i.cod)?);
            }
        }
        for (&(g, i, p), &r) in &self.pre {
            if let (Some(g), Some(r)) = (new[g], new[r]) {
                b.m.pre.insert((g, i, p), r);
            }
        }
        for (&(q, f), &r) in &self.post {
            if let (Some(f), Some(r)) = (new[f], new[r]) {
                b.m.post.insert((q, f), r);
            }
        }
        for (&(g, i, f), &r) in &self.subst {
            if let (Some(g), Some(f), Some(r)) = (new[g], new[f], new[r]) {
                b.m.subst.insert((g, i, f), r);
            }
        }
        for (&f, &r) in &self.j {
            if let (Some(f), Some(r)) = (new[f], new[r]) {
                b.m.j.insert(f, r);
            }
        }
        b.finish()
    }
}

/// Incremental construction with structural checks.
pub struct MultiBuilder {
    m: Multi,
}

impl MultiBuilder {
    pub fn new(cat: FinCategory, skew: bool) -> Self {
        let maps: Vec<MapInfo> = cat
            .morphisms()
            .map(|k| MapInfo {
                name: cat.mor_name(k).to_string(),
                flavour: Tight,
                dom: vec![cat.dom(k)],
                cod: cat.cod(k),
            })
            .collect();
        let index = maps.iter().enumerate().map(|(k, i)| (i.name.clone(), k)).collect();
        MultiBuilder {
            m: Multi {
                skew,
                cat,
                maps,
                index,
                sets: HashMap::new(),
                by_shape: HashMap::new(),
                by_cod: HashMap::new(),
                pre: HashMap::new(),
                post: HashMap::new(),
                subst: HashMap::new(),
                j: HashMap::new(),
            },
        }
    }

    pub fn cat(&self) -> &FinCategory {
        &self.m.cat
    }

    pub fn lookup(&self, name: &str) -> Option<MapId> {
        self.m.lookup(name)
    }

    pub fn add_map(&mut self, name: &str, flavour: Flavour, dom: Vec<Obj>, cod: Obj) -> Result<MapId> {
        let n = dom.len();
        let allowed = if self.m.skew {
            match flavour {
                Tight => (2..=4).contains(&n),
                Loose => n <= 2,
            }
        } else {
            n != 1 && n <= 4
        };
        if !allowed {
            return Err(Error::MalformedTable(format!(
                "`{name}`: no {}{n} maps in this structure",
                flavour.letter()
            )));
        }
        if self.m.index.contains_key(name) {
            return Err(Error::MalformedTable(format!("duplicate map `{name}`")));
        }
        let fl = self.m.norm(flavour, n);
        let id = self.m.maps.len();
        self.m.maps.push(MapInfo {
            name: name.to_string(),
            flavour: fl,
            dom,
            cod,
        });
        self.m.index.insert(name.to_string(), id);
        Ok(id)
    }

    fn check_pos(&self, g: MapId, i: usize, inner_cod: Obj) -> Result<()> {
        if i == 0 || i > self.m.arity(g) {
            return Err(Error::MalformedTable(format!(
                "position {i} out of range for `{}`",
                self.m.name(g)
            )));
        }
        if self.m.dom(g)[i - 1] != inner_cod {
            return Err(Error::MalformedTable(format!(
                "input {i} of `{}` does not match",
                self.m.name(g)
            )));
        }
        Ok(())
    }

    fn put<K: std::hash::Hash + Eq>(map: &mut HashMap<K, MapId>, k: K, v: MapId, what: &str) -> Result<()> {
        if map.insert(k, v).is_some() {
            return Err(Error::MalformedTable(format!("duplicate {what} entry")));
        }
        Ok(())
    }

    /// `g o_i p = r` for a morphism `p`.
    pub fn pre(&mut self, g: MapId, i: usize, p: Mor, r: MapId) -> Result<()> {
        if self.m.is_morphism(g) {
            return Err(Error::MalformedTable("unary actions on morphisms are composition".into()));
        }
        self.check_pos(g, i, self.m.cat.cod(p))?;
        Self::put(&mut self.m.pre, (g, i, p), r, "action")
    }

    /// `q o f = r` for a morphism `q`.
    pub fn post(&mut self, q: Mor, f: MapId, r: MapId) -> Result<()> {
        if self.m.is_morphism(f) {
            return Err(Error::MalformedTable("unary actions on morphisms are composition".into()));
        }
        if self.m.cat.dom(q) != self.m.cod(f) {
            return Err(Error::MalformedTable(format!(
                "`{}` does not compose after `{}`",
                self.m.name(q),
                self.m.name(f)
            )));
        }
        Self::put(&mut self.m.post, (q, f), r, "action")
    }

    pub fn subst(&mut self, g: MapId, i: usize, f: MapId, r: MapId) -> Result<()> {
        if !self.m.case_supported(self.m.shape(g), i, self.m.shape(f)) {
            return Err(Error::UnsupportedSubstitution {
                outer: self.m.name(g).into(),
                pos: i,
                inner: self.m.name(f).into(),
            });
        }
        self.check_pos(g, i, self.m.cod(f))?;
        Self::put(&mut self.m.subst, (g, i, f), r, "substitution")
    }

    pub fn j(&mut self, f: MapId, r: MapId) -> Result<()> {
        if !self.m.skew {
            return Err(Error::MalformedTable("j only exists in skew structures".into()));
        }
        let s = self.m.shape(f);
        if s != (Tight, 1) && s != (Tight, 2) {
            return Err(Error::MalformedTable(format!("j is not defined on `{}`", self.m.name(f))));
        }
        Self::put(&mut self.m.j, f, r, "j")
    }

    pub fn finish(self) -> Result<Multi> {
        let mut m = self.m;
        let mut order: Vec<MapId> = (0..m.maps.len()).collect();
        order.sort_by(|&a, &b| m.maps[a].name.cmp(&m.maps[b].name));
        for &k in &order {
            let i = &m.maps[k];
            m.sets.entry((i.flavour, i.dom.clone(), i.cod)).or_default().push(k);
            m.by_shape.entry((i.flavour, i.dom.len())).or_default().push(k);
            m.by_cod.entry((i.flavour, i.dom.len(), i.cod)).or_default().push(k);
        }
        let typed = |want: Shape, got: MapId, what: String| -> Result<()> {
            let have = (m.maps[got].flavour, m.maps[got].dom.len());
            if have != want {
                Err(Error::TypingViolation(format!(
                    "{what} = `{}` has shape {}{}, expected {}{}",
                    m.maps[got].name,
                    have.0.letter(),
                    have.1,
                    want.0.letter(),
                    want.1
                )))
            } else {
                Ok(())
            }
        };
        for (&(g, i, f), &r) in &m.subst {
            let want = (m.result_flavour(m.shape(g), i, m.shape(f)), m.arity(g) + m.arity(f) - 1);
            typed(want, r, format!("{} o{} {}", m.name(g), i, m.name(f)))?;
        }
        for (&(g, i, p), &r) in &m.pre {
            typed(m.shape(g), r, format!("{} o{} {}", m.name(g), i, m.name(p)))?;
        }
        for (&(q, f), &r) in &m.post {
            typed(m.shape(f), r, format!("{} o {}", m.name(q), m.name(f)))?;
        }
        for (&f, &r) in &m.j {
            typed((Loose, m.arity(f)), r, format!("j {}", m.name(f)))?;
        }
        Ok(m)
    }
}

/// A short multicategory: arities 0 to 4, all substitution cases stored.
#[derive(Debug, Clone)]
pub struct ShortMulticategory(pub(crate) Multi);

/// A short skew multicategory: tight arities 1 to 4, loose arities 0 to 2.
#[derive(Debug, Clone)]
pub struct ShortSkewMulticategory(pub(crate) Multi);

impl ShortMulticategory {
    pub fn new(m: Multi) -> Result<Self> {
        if m.is_skew() {
            return Err(Error::Precondition("expected a plain structure".into()));
        }
        Ok(ShortMulticategory(m))
    }

    pub fn into_inner(self) -> Multi {
        self.0
    }
}

impl ShortSkewMulticategory {
    pub fn new(m: Multi) -> Result<Self> {
        if !m.is_skew() {
            return Err(Error::Precondition("expected a skew structure".into()));
        }
        Ok(ShortSkewMulticategory(m))
    }

    pub fn into_inner(self) -> Multi {
        self.0
    }
}

impl Deref for ShortMulticategory {
    type Target = Multi;
    fn deref(&self) -> &Multi {
        &self.0
    }
}

impl Deref for ShortSkewMulticategory {
    type Target = Multi;
    fn deref(&self) -> &Multi {
        &self.0
    }
}

/// Splice helper: `dom(g)` with position `i` replaced by `ins`.
pub fn splice(dom: &[Obj], i: usize, ins: &[Obj]) -> Vec<Obj> {
    let mut v = dom[..i - 1].to_vec();
    v.extend_from_slice(ins);
    v.extend_from_slice(&dom[i..]);
    v
}
