//! Finite dagger categories stored as explicit tables.
//!
//! A [`FinDaggerCategory`] is only ever produced by [`validate_category`], so
//! every value of the type satisfies the category and dagger axioms. Objects
//! and morphisms are kept sorted by id, which makes table equality the same
//! thing as structural equality and makes every "first failure" report follow
//! lexicographic id order.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Index of an object inside one particular category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Obj(pub(crate) usize);

/// Index of a morphism inside one particular category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mor(pub(crate) usize);

impl Obj {
    pub fn index(self) -> usize {
        self.0
    }
}

impl Mor {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismDecl {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

/// Raw tables as read from input, before any axiom has been checked.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryDescription {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDecl>,
    pub identities: BTreeMap<String, String>,
    /// Entries `[g, f, g∘f]`.
    pub composition: Vec<[String; 3]>,
    pub dagger: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CategoryError {
    #[error("duplicate {kind} id `{id}`")]
    DuplicateId { kind: &'static str, id: String },
    #[error("reference to undeclared {kind} `{id}`")]
    DanglingReference { kind: &'static str, id: String },
    #[error("object `{object}` has no identity morphism")]
    MissingIdentity { object: String },
    #[error("composition table has no entry for (`{g}`, `{f}`)")]
    MissingComposite { g: String, f: String },
    #[error("composition table lists non-composable pair (`{g}`, `{f}`)")]
    NonComposablePair { g: String, f: String },
    #[error("composition table has conflicting entries for (`{g}`, `{f}`)")]
    ConflictingComposite { g: String, f: String },
    #[error("composite `{gf}` of (`{g}`, `{f}`) has the wrong source or target")]
    CompositeWrongEndpoints { g: String, f: String, gf: String },
    #[error("composition is not associative at (`{h}`, `{g}`, `{f}`)")]
    NonAssociative { h: String, g: String, f: String },
    #[error("identity `{identity}` violates the unit law against `{morphism}`")]
    BadIdentity { identity: String, morphism: String },
    #[error("morphism `{morphism}` has no dagger")]
    MissingDagger { morphism: String },
    #[error("dagger of `{morphism}` does not reverse its endpoints")]
    DaggerWrongEndpoints { morphism: String },
    #[error("dagger is not involutive at `{morphism}`")]
    DaggerNotInvolutive { morphism: String },
    #[error("dagger does not reverse composition at (`{g}`, `{f}`)")]
    DaggerNotFunctorial { g: String, f: String },
    #[error("unknown morphism `{id}`")]
    UnknownMorphism { id: String },
    #[error("unknown object `{id}`")]
    UnknownObject { id: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinDaggerCategory {
    objects: Vec<String>,
    morphisms: Vec<String>,
    src: Vec<Obj>,
    tgt: Vec<Obj>,
    identity: Vec<Mor>,
    /// `compose[g * n + f]` is `g∘f` when `src(g) = tgt(f)`.
    compose: Vec<Option<Mor>>,
    dagger: Vec<Mor>,
    homs: Vec<Vec<Mor>>,
    obj_index: HashMap<String, Obj>,
    mor_index: HashMap<String, Mor>,
}

fn index_ids(kind: &'static str, ids: &[String]) -> Result<Vec<String>, CategoryError> {
    let mut sorted = ids.to_vec();
    sorted.sort();
    for pair in sorted.windows(2) {
        if pair[0] == pair[1] {
            return Err(CategoryError::DuplicateId { kind, id: pair[0].clone() });
        }
    }
    Ok(sorted)
}

/// Checks every axiom instance of a dagger category and returns the
/// validated tables.
pub fn validate_category(desc: &CategoryDescription) -> Result<FinDaggerCategory, CategoryError> {
    let objects = index_ids("object", &desc.objects)?;
    let obj_index: HashMap<String, Obj> = objects.iter().enumerate().map(|(i, id)| (id.clone(), Obj(i))).collect();
    let mor_ids: Vec<String> = desc.morphisms.iter().map(|m| m.id.clone()).collect();
    let morphisms = index_ids("morphism", &mor_ids)?;
    let mor_index: HashMap<String, Mor> = morphisms.iter().enumerate().map(|(i, id)| (id.clone(), Mor(i))).collect();

    let obj = |id: &str| {
        obj_index
            .get(id)
            .copied()
            .ok_or_else(|| CategoryError::DanglingReference { kind: "object", id: id.to_string() })
    };
    let mor = |id: &str| {
        mor_index
            .get(id)
            .copied()
            .ok_or_else(|| CategoryError::DanglingReference { kind: "morphism", id: id.to_string() })
    };

    let n_mor = morphisms.len();
    let mut src = vec![Obj(0); n_mor];
    let mut tgt = vec![Obj(0); n_mor];
    let mut decls: Vec<&MorphismDecl> = desc.morphisms.iter().collect();
    decls.sort_by(|a, b| a.id.cmp(&b.id));
    for (i, decl) in decls.iter().enumerate() {
        src[i] = obj(&decl.src)?;
        tgt[i] = obj(&decl.tgt)?;
    }

    for (o, m) in &desc.identities {
        obj(o)?;
        mor(m)?;
    }
    let mut identity = Vec::with_capacity(objects.len());
    for o in &objects {
        let m = desc.identities.get(o).ok_or_else(|| CategoryError::MissingIdentity { object: o.clone() })?;
        let m = mor(m)?;
        if src[m.0] != obj_index[o] || tgt[m.0] != obj_index[o] {
            return Err(CategoryError::BadIdentity {
                identity: morphisms[m.0].clone(),
                morphism: morphisms[m.0].clone(),
            });
        }
        identity.push(m);
    }

    let mut compose: Vec<Option<Mor>> = vec![None; n_mor * n_mor];
    let mut entries: Vec<(Mor, Mor, Mor)> = Vec::with_capacity(desc.composition.len());
    for [g, f, gf] in &desc.composition {
        entries.push((mor(g)?, mor(f)?, mor(gf)?));
    }
    entries.sort();
    for &(g, f, gf) in &entries {
        let (gi, fi) = (morphisms[g.0].clone(), morphisms[f.0].clone());
        if src[g.0] != tgt[f.0] {
            return Err(CategoryError::NonComposablePair { g: gi, f: fi });
        }
        let slot = &mut compose[g.0 * n_mor + f.0];
        match slot {
            Some(prev) if *prev != gf => return Err(CategoryError::ConflictingComposite { g: gi, f: fi }),
            _ => *slot = Some(gf),
        }
        if src[gf.0] != src[f.0] || tgt[gf.0] != tgt[g.0] {
            return Err(CategoryError::CompositeWrongEndpoints { g: gi, f: fi, gf: morphisms[gf.0].clone() });
        }
    }
    for g in 0..n_mor {
        for f in 0..n_mor {
            if src[g] == tgt[f] && compose[g * n_mor + f].is_none() {
                return Err(CategoryError::MissingComposite { g: morphisms[g].clone(), f: morphisms[f].clone() });
            }
        }
    }

    for (m, d) in &desc.dagger {
        mor(m)?;
        mor(d)?;
    }
    let mut dagger = Vec::with_capacity(n_mor);
    for m in &morphisms {
        let d = desc.dagger.get(m).ok_or_else(|| CategoryError::MissingDagger { morphism: m.clone() })?;
        dagger.push(mor(d)?);
    }

    let n_obj = objects.len();
    let mut homs = vec![Vec::new(); n_obj * n_obj];
    for m in 0..n_mor {
        homs[src[m].0 * n_obj + tgt[m].0].push(Mor(m));
    }

    let cat = FinDaggerCategory { objects, morphisms, src, tgt, identity, compose, dagger, homs, obj_index, mor_index };
    cat.check_axioms()?;
    Ok(cat)
}

impl FinDaggerCategory {
    fn check_axioms(&self) -> Result<(), CategoryError> {
        let ids = |m: Mor| self.morphisms[m.0].clone();
        for f in self.morphisms() {
            let left = self.identity(self.tgt(f));
            let right = self.identity(self.src(f));
            if self.compose(f, right) != f {
                return Err(CategoryError::BadIdentity { identity: ids(right), morphism: ids(f) });
            }
            if self.compose(left, f) != f {
                return Err(CategoryError::BadIdentity { identity: ids(left), morphism: ids(f) });
            }
        }
        for h in self.morphisms() {
            for g in self.morphisms() {
                let Some(hg) = self.try_compose(h, g) else { continue };
                for f in self.morphisms() {
                    let Some(gf) = self.try_compose(g, f) else { continue };
                    if self.compose(h, gf) != self.compose(hg, f) {
                        return Err(CategoryError::NonAssociative { h: ids(h), g: ids(g), f: ids(f) });
                    }
                }
            }
        }
        for f in self.morphisms() {
            let d = self.dagger(f);
            if self.src(d) != self.tgt(f) || self.tgt(d) != self.src(f) {
                return Err(CategoryError::DaggerWrongEndpoints { morphism: ids(f) });
            }
        }
        for f in self.morphisms() {
            if self.dagger(self.dagger(f)) != f {
                return Err(CategoryError::DaggerNotInvolutive { morphism: ids(f) });
            }
        }
        for a in self.objects() {
            let id = self.identity(a);
            if self.dagger(id) != id {
                return Err(CategoryError::DaggerNotFunctorial { g: ids(id), f: ids(id) });
            }
        }
        for g in self.morphisms() {
            for f in self.morphisms() {
                let Some(gf) = self.try_compose(g, f) else { continue };
                if self.dagger(gf) != self.compose(self.dagger(f), self.dagger(g)) {
                    return Err(CategoryError::DaggerNotFunctorial { g: ids(g), f: ids(f) });
                }
            }
        }
        Ok(())
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = Obj> + Clone + '_ {
        (0..self.objects.len()).map(Obj)
    }

    pub fn morphisms(&self) -> impl Iterator<Item = Mor> + Clone + '_ {
        (0..self.morphisms.len()).map(Mor)
    }

    pub fn obj_id(&self, a: Obj) -> &str {
        &self.objects[a.0]
    }

    pub fn mor_id(&self, f: Mor) -> &str {
        &self.morphisms[f.0]
    }

    pub fn find_object(&self, id: &str) -> Option<Obj> {
        self.obj_index.get(id).copied()
    }

    pub fn find_morphism(&self, id: &str) -> Option<Mor> {
        self.mor_index.get(id).copied()
    }

    pub fn object(&self, id: &str) -> Result<Obj, CategoryError> {
        self.find_object(id).ok_or_else(|| CategoryError::UnknownObject { id: id.to_string() })
    }

    pub fn morphism(&self, id: &str) -> Result<Mor, CategoryError> {
        self.find_morphism(id).ok_or_else(|| CategoryError::UnknownMorphism { id: id.to_string() })
    }

    pub fn src(&self, f: Mor) -> Obj {
        self.src[f.0]
    }

    pub fn tgt(&self, f: Mor) -> Obj {
        self.tgt[f.0]
    }

    pub fn identity(&self, a: Obj) -> Mor {
        self.identity[a.0]
    }

    pub fn is_identity(&self, f: Mor) -> bool {
        self.identity[self.src(f).0] == f
    }

    pub fn dagger(&self, f: Mor) -> Mor {
        self.dagger[f.0]
    }

    pub fn try_compose(&self, g: Mor, f: Mor) -> Option<Mor> {
        self.compose[g.0 * self.morphisms.len() + f.0]
    }

    /// `g∘f`. Panics when the pair is not composable; callers only build
    /// well-typed composites.
    pub fn compose(&self, g: Mor, f: Mor) -> Mor {
        self.try_compose(g, f)
            .unwrap_or_else(|| panic!("`{}` and `{}` are not composable", self.mor_id(g), self.mor_id(f)))
    }

    /// Composite of a path written in application order reversed, so
    /// `chain(&[h, g, f])` is `h∘g∘f`.
    pub fn chain(&self, path: &[Mor]) -> Mor {
        let (&last, rest) = path.split_last().expect("empty composite");
        rest.iter().rev().fold(last, |acc, &m| self.compose(m, acc))
    }

    pub fn hom(&self, a: Obj, b: Obj) -> &[Mor] {
        &self.homs[a.0 * self.objects.len() + b.0]
    }

    pub fn is_unitary(&self, f: Mor) -> bool {
        let d = self.dagger(f);
        self.compose(d, f) == self.identity(self.src(f)) && self.compose(f, d) == self.identity(self.tgt(f))
    }

    pub fn to_description(&self) -> CategoryDescription {
        let mut composition = Vec::new();
        for g in self.morphisms() {
            for f in self.morphisms() {
                if let Some(gf) = self.try_compose(g, f) {
                    composition.push([
                        self.mor_id(g).to_string(),
                        self.mor_id(f).to_string(),
                        self.mor_id(gf).to_string(),
                    ]);
                }
            }
        }
        CategoryDescription {
            objects: self.objects.clone(),
            morphisms: self
                .morphisms()
                .map(|f| MorphismDecl {
                    id: self.mor_id(f).to_string(),
                    src: self.obj_id(self.src(f)).to_string(),
                    tgt: self.obj_id(self.tgt(f)).to_string(),
                })
                .collect(),
            identities: self
                .objects()
                .map(|a| (self.obj_id(a).to_string(), self.mor_id(self.identity(a)).to_string()))
                .collect(),
            composition,
            dagger: self
                .morphisms()
                .map(|f| (self.mor_id(f).to_string(), self.mor_id(self.dagger(f)).to_string()))
                .collect(),
        }
    }

    /// Same objects and morphism ids, endpoints swapped, composition reversed.
    pub fn opposite(&self) -> FinDaggerCategory {
        let mut desc = self.to_description();
        for m in &mut desc.morphisms {
            std::mem::swap(&mut m.src, &mut m.tgt);
        }
        for entry in &mut desc.composition {
            entry.swap(0, 1);
        }
        validate_category(&desc).expect("opposite of a dagger category is a dagger category")
    }
}

impl fmt::Display for FinDaggerCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dagger category with {} objects and {} morphisms", self.num_objects(), self.num_morphisms())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fixtures_validate() {
        for (name, c) in fixtures::all_categories() {
            assert!(c.num_objects() > 0, "{name}");
        }
        assert_eq!(fixtures::rel2().num_morphisms(), 16);
    }

    #[test]
    fn z2_with_trivial_dagger_is_not_involutive() {
        let mut desc = fixtures::z2().to_description();
        desc.dagger.insert("s".into(), "1".into());
        assert_eq!(validate_category(&desc), Err(CategoryError::DaggerNotInvolutive { morphism: "s".into() }));
    }

    #[test]
    fn missing_and_dangling_entries() {
        let mut desc = fixtures::z2().to_description();
        desc.composition.retain(|e| !(e[0] == "s" && e[1] == "s"));
        assert_eq!(validate_category(&desc), Err(CategoryError::MissingComposite { g: "s".into(), f: "s".into() }));
        let mut desc = fixtures::z2().to_description();
        desc.dagger.insert("s".into(), "q".into());
        assert!(matches!(validate_category(&desc), Err(CategoryError::DanglingReference { kind: "morphism", .. })));
    }

    #[test]
    fn non_associative_table_is_rejected() {
        // Three endomorphisms 1, a, b with a∘a = b, a∘b = a, b∘a = b, b∘b = b:
        // (a∘a)∘b = b∘b = b but a∘(a∘b) = a∘a = b; then (a∘b)∘a = a∘a = b and
        // a∘(b∘a) = a∘b = a.
        let mut desc = CategoryDescription { objects: vec!["*".into()], ..Default::default() };
        for m in ["1", "a", "b"] {
            desc.morphisms.push(MorphismDecl { id: m.into(), src: "*".into(), tgt: "*".into() });
            desc.dagger.insert(m.into(), m.into());
        }
        desc.identities.insert("*".into(), "1".into());
        for (g, f, gf) in [
            ("1", "1", "1"),
            ("1", "a", "a"),
            ("1", "b", "b"),
            ("a", "1", "a"),
            ("b", "1", "b"),
            ("a", "a", "b"),
            ("a", "b", "a"),
            ("b", "a", "b"),
            ("b", "b", "b"),
        ] {
            desc.composition.push([g.into(), f.into(), gf.into()]);
        }
        assert!(matches!(validate_category(&desc), Err(CategoryError::NonAssociative { .. })));
    }

    #[test]
    fn empty_category_is_legal() {
        let c = validate_category(&CategoryDescription::default()).unwrap();
        assert_eq!(c.num_objects(), 0);
        assert_eq!(c.opposite(), c);
    }

    #[test]
    fn opposite_examples() {
        let one = fixtures::one();
        assert_eq!(one.opposite(), one);
        let z2 = fixtures::z2();
        assert_eq!(z2.opposite().opposite(), z2);
        let iso = fixtures::unit_iso();
        let op = iso.opposite();
        let u = op.morphism("u").unwrap();
        assert_eq!(op.obj_id(op.src(u)), "b");
    }

    #[test]
    fn unitarity_examples() {
        let z2 = fixtures::z2();
        assert!(z2.is_unitary(z2.morphism("s").unwrap()));
        let p2 = fixtures::p2();
        assert!(!p2.is_unitary(p2.morphism("p").unwrap()));
        for (_, c) in fixtures::all_categories() {
            for a in c.objects() {
                assert!(c.is_unitary(c.identity(a)));
            }
        }
        assert_eq!(z2.morphism("nope"), Err(CategoryError::UnknownMorphism { id: "nope".into() }));
    }

    #[test]
    fn unitaries_are_closed() {
        for (name, c) in fixtures::all_categories() {
            for g in c.morphisms().filter(|&g| c.is_unitary(g)) {
                assert!(c.is_unitary(c.dagger(g)), "{name}");
                for f in c.morphisms().filter(|&f| c.is_unitary(f)) {
                    if let Some(gf) = c.try_compose(g, f) {
                        assert!(c.is_unitary(gf), "{name}");
                    }
                }
            }
        }
    }
}
