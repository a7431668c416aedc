//! Every structure kind behind one type, the named catalogue references and
//! the kind-appropriate validator.

use crate::catalogue;
use crate::classify::certify;
use crate::error::{Error, Result};
use crate::fincat::{validate_category_jobs, FinCategory};
use crate::induce::{induce_short, induce_short_skew};
use crate::multi::Multi;
use crate::report::Report;
use crate::skewmon::{
    validate_braiding, validate_lax_functor, validate_skew_closed, validate_skew_monoidal_jobs, Braiding,
    LaxMonFunctor, SkewClosedCategory, SkewMonCategory,
};
use crate::transport::{
    k_morphism_inverse, short_braiding_from_s, validate_multi_morphism, validate_short_braiding, Ends,
    MultiMorphism, ShortBraiding,
};

#[derive(Debug, Clone)]
pub enum Body {
    Category(FinCategory),
    /// Plain or skew according to the multicategory.
    Short {
        multi: Multi,
        braiding: Option<ShortBraiding>,
    },
    SkewMonoidal(SkewMonCategory),
    Braided(SkewMonCategory, Braiding),
    SkewClosed(SkewClosedCategory),
    LaxFunctor(Box<Ended<LaxMonFunctor>>),
    Morphism(Box<Ended<MultiMorphism>>),
}

/// One end of a functor file: the reference as written and what it names.
#[derive(Debug, Clone)]
pub struct End {
    pub reference: String,
    pub structure: Structure,
}

#[derive(Debug, Clone)]
pub struct Ended<T> {
    pub source: End,
    pub target: End,
    pub map: T,
}

#[derive(Debug, Clone)]
pub struct Structure {
    /// `@key value` lines, in file order.
    pub annotations: Vec<(String, String)>,
    pub body: Body,
}

impl Structure {
    pub fn new(body: Body) -> Self {
        Structure {
            annotations: Vec::new(),
            body,
        }
    }

    pub fn annotated(mut self, key: &str, value: impl Into<String>) -> Self {
        self.annotations.push((key.to_string(), value.into()));
        self
    }

    pub fn annotation(&self, key: &str) -> Option<&str> {
        self.annotations.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn kind(&self) -> &'static str {
        match &self.body {
            Body::Category(_) => "category",
            Body::Short { multi, .. } if multi.is_skew() => "short-skew",
            Body::Short { .. } => "short-multi",
            Body::SkewMonoidal(_) => "skew-monoidal",
            Body::Braided(..) => "braiding",
            Body::SkewClosed(_) => "skew-closed",
            Body::LaxFunctor(_) => "lax-functor",
            Body::Morphism(_) => "morphism",
        }
    }

    /// Object count and largest multimap set, over both ends for functors.
    pub fn size(&self) -> (usize, usize) {
        match &self.body {
            Body::Category(c) => (c.object_count(), 0),
            Body::Short { multi, .. } => (multi.cat().object_count(), multi.largest_set()),
            Body::SkewMonoidal(c) | Body::Braided(c, _) => (c.n(), 0),
            Body::SkewClosed(c) => (c.n(), 0),
            Body::LaxFunctor(e) => max2(e.source.structure.size(), e.target.structure.size()),
            Body::Morphism(e) => max2(e.source.structure.size(), e.target.structure.size()),
        }
    }
}

fn max2(a: (usize, usize), b: (usize, usize)) -> (usize, usize) {
    (a.0.max(b.0), a.1.max(b.1))
}

/// Runs the validator matching the kind.
pub fn validate(s: &Structure, jobs: usize) -> Result<Report> {
    Ok(match &s.body {
        Body::Category(c) => validate_category_jobs(c, jobs),
        Body::Short { multi, braiding } => {
            let mut r = crate::axioms::validate_multi(multi, jobs);
            if let Some(b) = braiding {
                r.absorb(validate_short_braiding(multi, b));
            }
            r
        }
        Body::SkewMonoidal(c) => validate_skew_monoidal_jobs(c, jobs),
        Body::Braided(c, b) => {
            let mut r = validate_skew_monoidal_jobs(c, jobs);
            r.absorb(validate_braiding(c, b));
            r
        }
        Body::SkewClosed(c) => validate_skew_closed(c),
        Body::LaxFunctor(e) => {
            let (src, tgt) = (monoidal(&e.source.structure)?, monoidal(&e.target.structure)?);
            validate_lax_functor(src, tgt, &e.map)?
        }
        Body::Morphism(e) => {
            let (src, tgt) = (short(&e.source.structure)?, short(&e.target.structure)?);
            validate_multi_morphism(src, tgt, &e.map)?
        }
    })
}

pub fn monoidal(s: &Structure) -> Result<&SkewMonCategory> {
    match &s.body {
        Body::SkewMonoidal(c) | Body::Braided(c, _) => Ok(c),
        _ => Err(Error::Precondition(format!("expected a skew monoidal structure, found {}", s.kind()))),
    }
}

pub fn short(s: &Structure) -> Result<&Multi> {
    match &s.body {
        Body::Short { multi, .. } => Ok(multi),
        _ => Err(Error::Precondition(format!("expected a short structure, found {}", s.kind()))),
    }
}

/// Skew monoidal (and possibly braided) structure named in the catalogue.
fn monoidal_named(name: &str) -> Result<(SkewMonCategory, Option<Braiding>)> {
    match catalogue::braided(name) {
        Ok((c, s)) => Ok((c, Some(s))),
        Err(_) => Ok((catalogue::skew_monoidal(name)?, None)),
    }
}

/// Short structure induced by a named skew monoidal structure; braidings
/// travel along as short braidings.
fn induced(name: &str, plain: bool) -> Result<Body> {
    let (c, s) = monoidal_named(name)?;
    let multi = if plain {
        induce_short(&c)?.into_inner()
    } else {
        induce_short_skew(&c)?.multi.into_inner()
    };
    let braiding = match s {
        Some(s) => {
            let cert = certify(&multi, name)?;
            Some(short_braiding_from_s(&multi, &cert, &s)?)
        }
        None => None,
    };
    Ok(Body::Short { multi, braiding })
}

/// Every reference `builtin` understands.
pub fn builtin_names() -> Vec<String> {
    let mut v = Vec::new();
    for n in catalogue::MONOIDAL.iter().chain(&catalogue::BRAIDED).chain(&catalogue::CLOSED) {
        v.push(format!("catalogue:{n}"));
    }
    for n in catalogue::MONOIDAL {
        v.push(format!("category:{n}"));
    }
    for n in catalogue::MONOIDAL.iter().chain(&catalogue::BRAIDED) {
        v.push(format!("induced:{n}"));
        if !n.starts_with("poset-skew") {
            v.push(format!("induced-plain:{n}"));
        }
    }
    for m in catalogue::morphisms() {
        v.push(format!("morphism:{}", m.name));
        v.push(format!("multi-morphism:{}", m.name));
    }
    v
}

/// Resolves `catalogue:`, `category:`, `induced:`, `induced-plain:`, `morphism:` and
/// `multi-morphism:` references.
pub fn builtin(reference: &str) -> Result<Structure> {
    let unknown = || Error::UnknownGenerator(reference.to_string());
    let (scheme, name) = reference.split_once(':').ok_or_else(unknown)?;
    let body = match scheme {
        "catalogue" => {
            if let Ok((c, s)) = catalogue::braided(name) {
                Body::Braided(c, s)
            } else if let Ok(c) = catalogue::skew_closed(name) {
                Body::SkewClosed(c)
            } else {
                Body::SkewMonoidal(catalogue::skew_monoidal(name).map_err(|_| unknown())?)
            }
        }
        "category" => Body::Category(monoidal_named(name).map_err(|_| unknown())?.0.cat),
        "induced" => induced(name, false)?,
        "induced-plain" => induced(name, true)?,
        "morphism" | "multi-morphism" => {
            let m = catalogue::morphisms().into_iter().find(|m| m.name == name).ok_or_else(unknown)?;
            if scheme == "morphism" {
                Body::LaxFunctor(Box::new(Ended {
                    source: end(&format!("catalogue:{}", m.source))?,
                    target: end(&format!("catalogue:{}", m.target))?,
                    map: m.functor,
                }))
            } else {
                let (source, target) = (end(&format!("induced:{}", m.source))?, end(&format!("induced:{}", m.target))?);
                let (s, t) = (short(&source.structure)?, short(&target.structure)?);
                let (sc, tc) = (certify(s, &m.source)?, certify(t, &m.target)?);
                let e = Ends {
                    src: s,
                    src_cert: &sc,
                    tgt: t,
                    tgt_cert: &tc,
                };
                let map = k_morphism_inverse(&e, &m.functor)?;
                Body::Morphism(Box::new(Ended { source, target, map }))
            }
        }
        _ => return Err(unknown()),
    };
    Ok(Structure::new(body))
}

fn end(reference: &str) -> Result<End> {
    Ok(End {
        reference: reference.to_string(),
        structure: builtin(reference)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_builtin_validates() {
        for r in builtin_names() {
            let s = builtin(&r).unwrap_or_else(|e| panic!("{r}: {e}"));
            let rep = validate(&s, 1).unwrap();
            assert!(rep.passed(), "{r}\n{}", rep.render());
            assert!(rep.checked() > 0, "{r}");
        }
    }

    #[test]
    fn unknown_references_are_rejected() {
        assert!(matches!(builtin("catalogue:nope"), Err(Error::UnknownGenerator(_))));
        assert!(matches!(builtin("nothing"), Err(Error::UnknownGenerator(_))));
    }
}
