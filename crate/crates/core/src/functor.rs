//! Dagger functors, natural transformations between them, and the finite
//! functor categories `DagCat(A, D)`.

use std::collections::{BTreeMap, HashMap};
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use thiserror::Error;

use crate::fincat::{validate_category, CategoryDescription, FinDaggerCategory, Mor, MorphismDecl, Obj};
use crate::search::{Budget, SearchSpaceTooLarge};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FunctorError {
    #[error("reference to undeclared {kind} `{id}`")]
    DanglingReference { kind: &'static str, id: String },
    #[error("no image given for {kind} `{id}`")]
    MissingAssignment { kind: &'static str, id: String },
    #[error("not functorial ({reason}) at {cells:?}")]
    NotFunctorial { reason: &'static str, cells: Vec<String> },
    #[error("image of `{morphism}` does not commute with the daggers")]
    NotDaggerPreserving { morphism: String },
    #[error("component at `{object}` has the wrong endpoints")]
    WrongEndpoints { object: String },
    #[error("naturality fails at `{morphism}`")]
    NotNatural { morphism: String },
    #[error("not composable: {0}")]
    NotComposable(&'static str),
}

pub(crate) fn same_category(a: &Arc<FinDaggerCategory>, b: &Arc<FinDaggerCategory>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A validated dagger functor. Equality is equality of the object and
/// morphism maps between equal categories.
#[derive(Clone, Debug)]
pub struct DaggerFunctor {
    source: Arc<FinDaggerCategory>,
    target: Arc<FinDaggerCategory>,
    obj_map: Vec<Obj>,
    mor_map: Vec<Mor>,
}

impl PartialEq for DaggerFunctor {
    fn eq(&self, other: &Self) -> bool {
        self.obj_map == other.obj_map
            && self.mor_map == other.mor_map
            && same_category(&self.source, &other.source)
            && same_category(&self.target, &other.target)
    }
}

impl Eq for DaggerFunctor {}

impl Hash for DaggerFunctor {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.obj_map.hash(state);
        self.mor_map.hash(state);
    }
}

/// Maps given by id, as read from input.
pub fn validate_functor(
    source: Arc<FinDaggerCategory>,
    target: Arc<FinDaggerCategory>,
    objects: &BTreeMap<String, String>,
    morphisms: &BTreeMap<String, String>,
) -> Result<DaggerFunctor, FunctorError> {
    let dangling = |kind, id: &str| FunctorError::DanglingReference { kind, id: id.to_string() };
    for (a, x) in objects {
        source.find_object(a).ok_or_else(|| dangling("object", a))?;
        target.find_object(x).ok_or_else(|| dangling("object", x))?;
    }
    for (f, g) in morphisms {
        source.find_morphism(f).ok_or_else(|| dangling("morphism", f))?;
        target.find_morphism(g).ok_or_else(|| dangling("morphism", g))?;
    }
    let obj_map = source
        .objects()
        .map(|a| {
            let id = source.obj_id(a);
            objects
                .get(id)
                .map(|x| target.find_object(x).unwrap())
                .ok_or_else(|| FunctorError::MissingAssignment { kind: "object", id: id.to_string() })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mor_map = source
        .morphisms()
        .map(|f| {
            let id = source.mor_id(f);
            morphisms
                .get(id)
                .map(|g| target.find_morphism(g).unwrap())
                .ok_or_else(|| FunctorError::MissingAssignment { kind: "morphism", id: id.to_string() })
        })
        .collect::<Result<Vec<_>, _>>()?;
    DaggerFunctor::new(source, target, obj_map, mor_map)
}

impl DaggerFunctor {
    /// Checks endpoints, then daggers, then identities, then composites.
    pub fn new(
        source: Arc<FinDaggerCategory>,
        target: Arc<FinDaggerCategory>,
        obj_map: Vec<Obj>,
        mor_map: Vec<Mor>,
    ) -> Result<Self, FunctorError> {
        assert_eq!(obj_map.len(), source.num_objects());
        assert_eq!(mor_map.len(), source.num_morphisms());
        let (a, b) = (&source, &target);
        for f in a.morphisms() {
            let g = mor_map[f.0];
            if b.src(g) != obj_map[a.src(f).0] || b.tgt(g) != obj_map[a.tgt(f).0] {
                return Err(FunctorError::NotFunctorial { reason: "endpoints", cells: vec![a.mor_id(f).to_string()] });
            }
        }
        for f in a.morphisms() {
            if mor_map[a.dagger(f).0] != b.dagger(mor_map[f.0]) {
                return Err(FunctorError::NotDaggerPreserving { morphism: a.mor_id(f).to_string() });
            }
        }
        for x in a.objects() {
            if mor_map[a.identity(x).0] != b.identity(obj_map[x.0]) {
                return Err(FunctorError::NotFunctorial { reason: "identity", cells: vec![a.obj_id(x).to_string()] });
            }
        }
        for g in a.morphisms() {
            for f in a.morphisms() {
                let Some(gf) = a.try_compose(g, f) else { continue };
                if mor_map[gf.0] != b.compose(mor_map[g.0], mor_map[f.0]) {
                    return Err(FunctorError::NotFunctorial {
                        reason: "composition",
                        cells: vec![a.mor_id(g).to_string(), a.mor_id(f).to_string()],
                    });
                }
            }
        }
        Ok(DaggerFunctor { source, target, obj_map, mor_map })
    }

    pub(crate) fn new_unchecked(
        source: Arc<FinDaggerCategory>,
        target: Arc<FinDaggerCategory>,
        obj_map: Vec<Obj>,
        mor_map: Vec<Mor>,
    ) -> Self {
        DaggerFunctor { source, target, obj_map, mor_map }
    }

    pub fn identity(c: &Arc<FinDaggerCategory>) -> Self {
        DaggerFunctor {
            source: c.clone(),
            target: c.clone(),
            obj_map: c.objects().collect(),
            mor_map: c.morphisms().collect(),
        }
    }

    /// The functor sending everything to the identity of `x`.
    pub fn constant(source: &Arc<FinDaggerCategory>, target: &Arc<FinDaggerCategory>, x: Obj) -> Self {
        DaggerFunctor {
            source: source.clone(),
            target: target.clone(),
            obj_map: vec![x; source.num_objects()],
            mor_map: vec![target.identity(x); source.num_morphisms()],
        }
    }

    pub fn source(&self) -> &Arc<FinDaggerCategory> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinDaggerCategory> {
        &self.target
    }

    pub fn obj(&self, a: Obj) -> Obj {
        self.obj_map[a.0]
    }

    pub fn mor(&self, f: Mor) -> Mor {
        self.mor_map[f.0]
    }

    pub fn obj_map(&self) -> &[Obj] {
        &self.obj_map
    }

    pub fn mor_map(&self) -> &[Mor] {
        &self.mor_map
    }

    pub fn is_endo(&self) -> bool {
        same_category(&self.source, &self.target)
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &DaggerFunctor) -> Result<DaggerFunctor, FunctorError> {
        if !same_category(&f.target, &self.source) {
            return Err(FunctorError::NotComposable("functor target differs from source"));
        }
        Ok(DaggerFunctor {
            source: f.source.clone(),
            target: self.target.clone(),
            obj_map: f.obj_map.iter().map(|&x| self.obj(x)).collect(),
            mor_map: f.mor_map.iter().map(|&g| self.mor(g)).collect(),
        })
    }

    /// A readable id such as `[*:*;1:1,s:s]`.
    pub fn label(&self) -> String {
        let (a, b) = (&self.source, &self.target);
        let objs: Vec<String> = a.objects().map(|x| format!("{}:{}", a.obj_id(x), b.obj_id(self.obj(x)))).collect();
        let mors: Vec<String> = a.morphisms().map(|f| format!("{}:{}", a.mor_id(f), b.mor_id(self.mor(f)))).collect();
        format!("[{};{}]", objs.join(","), mors.join(","))
    }
}

pub fn compose_functors(g: &DaggerFunctor, f: &DaggerFunctor) -> Result<DaggerFunctor, FunctorError> {
    g.after(f)
}

/// A natural transformation `F → G` with one component per source object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatTrans {
    source: DaggerFunctor,
    target: DaggerFunctor,
    components: Vec<Mor>,
}

pub fn validate_nat(
    f: &DaggerFunctor,
    g: &DaggerFunctor,
    components: &BTreeMap<String, String>,
) -> Result<NatTrans, FunctorError> {
    let (a, d) = (f.source(), f.target());
    for (x, c) in components {
        a.find_object(x).ok_or_else(|| FunctorError::DanglingReference { kind: "object", id: x.clone() })?;
        d.find_morphism(c).ok_or_else(|| FunctorError::DanglingReference { kind: "morphism", id: c.clone() })?;
    }
    let comps = a
        .objects()
        .map(|x| {
            let id = a.obj_id(x);
            components
                .get(id)
                .map(|c| d.find_morphism(c).unwrap())
                .ok_or_else(|| FunctorError::MissingAssignment { kind: "object", id: id.to_string() })
        })
        .collect::<Result<Vec<_>, _>>()?;
    NatTrans::new(f.clone(), g.clone(), comps)
}

impl NatTrans {
    pub fn new(source: DaggerFunctor, target: DaggerFunctor, components: Vec<Mor>) -> Result<Self, FunctorError> {
        if !same_category(source.source(), target.source()) || !same_category(source.target(), target.target()) {
            return Err(FunctorError::NotComposable("functors are not parallel"));
        }
        let (a, d) = (source.source().clone(), source.target().clone());
        assert_eq!(components.len(), a.num_objects());
        for x in a.objects() {
            let c = components[x.0];
            if d.src(c) != source.obj(x) || d.tgt(c) != target.obj(x) {
                return Err(FunctorError::WrongEndpoints { object: a.obj_id(x).to_string() });
            }
        }
        for f in a.morphisms() {
            let lhs = d.compose(components[a.tgt(f).0], source.mor(f));
            let rhs = d.compose(target.mor(f), components[a.src(f).0]);
            if lhs != rhs {
                return Err(FunctorError::NotNatural { morphism: a.mor_id(f).to_string() });
            }
        }
        Ok(NatTrans { source, target, components })
    }

    pub(crate) fn new_unchecked(source: DaggerFunctor, target: DaggerFunctor, components: Vec<Mor>) -> Self {
        NatTrans { source, target, components }
    }

    pub fn identity(f: &DaggerFunctor) -> Self {
        let d = f.target();
        let components = f.source().objects().map(|x| d.identity(f.obj(x))).collect();
        NatTrans { source: f.clone(), target: f.clone(), components }
    }

    pub fn source(&self) -> &DaggerFunctor {
        &self.source
    }

    pub fn target(&self) -> &DaggerFunctor {
        &self.target
    }

    pub fn component(&self, x: Obj) -> Mor {
        self.components[x.0]
    }

    pub fn components(&self) -> &[Mor] {
        &self.components
    }

    /// `self · alpha`.
    pub fn vcomp(&self, alpha: &NatTrans) -> Result<NatTrans, FunctorError> {
        if alpha.target != self.source {
            return Err(FunctorError::NotComposable("vertical composite of non-matching transformations"));
        }
        let d = self.source.target();
        let components = self.components.iter().zip(&alpha.components).map(|(&b, &a)| d.compose(b, a)).collect();
        Ok(NatTrans { source: alpha.source.clone(), target: self.target.clone(), components })
    }

    /// `(self ∗ theta)_X = self_{G X} ∘ F'(theta_X)` for `theta: F → G` and
    /// `self: F' → G'`.
    pub fn hcomp(&self, theta: &NatTrans) -> Result<NatTrans, FunctorError> {
        let source = self.source.after(&theta.source)?;
        let target = self.target.after(&theta.target)?;
        let c = self.source.target();
        let components = theta
            .source
            .source()
            .objects()
            .map(|x| c.compose(self.components[theta.target.obj(x).0], self.source.mor(theta.components[x.0])))
            .collect();
        Ok(NatTrans { source, target, components })
    }

    pub fn dagger(&self) -> NatTrans {
        let d = self.source.target();
        NatTrans {
            source: self.target.clone(),
            target: self.source.clone(),
            components: self.components.iter().map(|&c| d.dagger(c)).collect(),
        }
    }

    /// `g self`, components `g(self_X)`.
    pub fn whisker_left(&self, g: &DaggerFunctor) -> Result<NatTrans, FunctorError> {
        Ok(NatTrans {
            source: g.after(&self.source)?,
            target: g.after(&self.target)?,
            components: self.components.iter().map(|&c| g.mor(c)).collect(),
        })
    }

    /// `self f`, components `self_{f X}`.
    pub fn whisker_right(&self, f: &DaggerFunctor) -> Result<NatTrans, FunctorError> {
        Ok(NatTrans {
            source: self.source.after(f)?,
            target: self.target.after(f)?,
            components: f.obj_map().iter().map(|&x| self.components[x.0]).collect(),
        })
    }

    pub fn is_unitary(&self) -> bool {
        let d = self.source.target();
        self.components.iter().all(|&c| d.is_unitary(c))
    }
}

struct FunctorSearch<'a> {
    a: &'a FinDaggerCategory,
    b: &'a FinDaggerCategory,
    /// Composition triples `(g, f, gf)` grouped by their largest index.
    triples_at: Vec<Vec<(usize, usize, usize)>>,
}

impl<'a> FunctorSearch<'a> {
    fn new(a: &'a FinDaggerCategory, b: &'a FinDaggerCategory) -> Self {
        let mut triples_at = vec![Vec::new(); a.num_morphisms()];
        for g in a.morphisms() {
            for f in a.morphisms() {
                if let Some(gf) = a.try_compose(g, f) {
                    let top = g.0.max(f.0).max(gf.0);
                    triples_at[top].push((g.0, f.0, gf.0));
                }
            }
        }
        FunctorSearch { a, b, triples_at }
    }

    fn candidates(&self, obj_map: &[Obj], mor_map: &[Mor], i: usize) -> Vec<Mor> {
        let (a, b) = (self.a, self.b);
        let f = Mor(i);
        let (x, y) = (obj_map[a.src(f).0], obj_map[a.tgt(f).0]);
        if a.is_identity(f) {
            return vec![b.identity(x)];
        }
        b.hom(x, y)
            .iter()
            .copied()
            .filter(|&g| {
                let d = a.dagger(f).0;
                if d < i && mor_map[d] != b.dagger(g) {
                    return false;
                }
                if d == i && b.dagger(g) != g {
                    return false;
                }
                true
            })
            .collect()
    }

    fn consistent(&self, mor_map: &[Mor], i: usize) -> bool {
        self.triples_at[i].iter().all(|&(g, f, gf)| mor_map[gf] == self.b.compose(mor_map[g], mor_map[f]))
    }

    fn morphisms(
        &self,
        obj_map: &[Obj],
        mor_map: &mut Vec<Mor>,
        budget: &mut Budget,
        out: &mut Vec<Vec<Mor>>,
    ) -> Result<(), SearchSpaceTooLarge> {
        let i = mor_map.len();
        if i == self.a.num_morphisms() {
            out.push(mor_map.clone());
            return Ok(());
        }
        for g in self.candidates(obj_map, mor_map, i) {
            budget.tick()?;
            mor_map.push(g);
            if self.consistent(mor_map, i) {
                self.morphisms(obj_map, mor_map, budget, out)?;
            }
            mor_map.pop();
        }
        Ok(())
    }
}

/// Every dagger functor `A → B`, in lexicographic order of the choice
/// sequence (object images first, then morphism images).
pub fn enumerate_dagger_functors(
    a: &Arc<FinDaggerCategory>,
    b: &Arc<FinDaggerCategory>,
    budget: &mut Budget,
) -> Result<Vec<DaggerFunctor>, SearchSpaceTooLarge> {
    let search = FunctorSearch::new(a, b);
    let mut result = Vec::new();
    let n = a.num_objects();
    if n > 0 && b.num_objects() == 0 {
        return Ok(result);
    }
    let mut obj_map = vec![Obj(0); n];
    loop {
        budget.tick()?;
        let mut maps = Vec::new();
        search.morphisms(&obj_map, &mut Vec::new(), budget, &mut maps)?;
        result.extend(
            maps.into_iter()
                .map(|mor_map| DaggerFunctor::new_unchecked(a.clone(), b.clone(), obj_map.clone(), mor_map)),
        );
        // odometer step, last object fastest
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(result);
            }
            k -= 1;
            if obj_map[k].0 + 1 < b.num_objects() {
                obj_map[k].0 += 1;
                break;
            }
            obj_map[k] = Obj(0);
        }
    }
}

/// Every natural transformation `F → G`, lexicographic in the components.
pub fn enumerate_nats(
    f: &DaggerFunctor,
    g: &DaggerFunctor,
    budget: &mut Budget,
) -> Result<Vec<NatTrans>, SearchSpaceTooLarge> {
    let (a, d) = (f.source().clone(), f.target().clone());
    // morphisms whose naturality square is fully determined once object i is assigned
    let mut squares_at = vec![Vec::new(); a.num_objects()];
    for m in a.morphisms() {
        squares_at[a.src(m).0.max(a.tgt(m).0)].push(m);
    }
    #[allow(clippy::too_many_arguments)]
    fn go(
        a: &FinDaggerCategory,
        d: &FinDaggerCategory,
        f: &DaggerFunctor,
        g: &DaggerFunctor,
        squares_at: &[Vec<Mor>],
        comps: &mut Vec<Mor>,
        budget: &mut Budget,
        out: &mut Vec<Vec<Mor>>,
    ) -> Result<(), SearchSpaceTooLarge> {
        let i = comps.len();
        if i == a.num_objects() {
            out.push(comps.clone());
            return Ok(());
        }
        let x = Obj(i);
        for &c in d.hom(f.obj(x), g.obj(x)) {
            budget.tick()?;
            comps.push(c);
            let ok = squares_at[i]
                .iter()
                .all(|&m| d.compose(comps[a.tgt(m).0], f.mor(m)) == d.compose(g.mor(m), comps[a.src(m).0]));
            if ok {
                go(a, d, f, g, squares_at, comps, budget, out)?;
            }
            comps.pop();
        }
        Ok(())
    }
    let mut out = Vec::new();
    go(&a, &d, f, g, &squares_at, &mut Vec::new(), budget, &mut out)?;
    Ok(out.into_iter().map(|c| NatTrans::new_unchecked(f.clone(), g.clone(), c)).collect())
}

/// `DagCat(A, D)` together with the functors and transformations that its
/// objects and morphisms stand for.
#[derive(Clone, Debug)]
pub struct FunctorCategory {
    pub category: Arc<FinDaggerCategory>,
    functors: Vec<DaggerFunctor>,
    nats: Vec<NatTrans>,
    functor_index: HashMap<DaggerFunctor, Obj>,
    nat_index: HashMap<(Obj, Obj, Vec<Mor>), Mor>,
}

pub fn nat_label(n: &NatTrans) -> String {
    let d = n.source().target();
    let a = n.source().source();
    let comps: Vec<String> = a.objects().map(|x| format!("{}:{}", a.obj_id(x), d.mor_id(n.component(x)))).collect();
    format!("{}=>{}@[{}]", n.source().label(), n.target().label(), comps.join(","))
}

pub fn hom_category(a: &Arc<FinDaggerCategory>, d: &Arc<FinDaggerCategory>) -> FunctorCategory {
    let mut budget = Budget::unlimited();
    let functors = enumerate_dagger_functors(a, d, &mut budget).expect("unlimited budget");
    let labels: Vec<String> = functors.iter().map(DaggerFunctor::label).collect();
    let mut nats = Vec::new();
    for f in &functors {
        for g in &functors {
            nats.extend(enumerate_nats(f, g, &mut budget).expect("unlimited budget"));
        }
    }
    let nat_labels: Vec<String> = nats.iter().map(nat_label).collect();
    let functor_pos: HashMap<&DaggerFunctor, usize> = functors.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let nat_pos: HashMap<(usize, usize, &[Mor]), usize> = nats
        .iter()
        .enumerate()
        .map(|(i, n)| ((functor_pos[n.source()], functor_pos[n.target()], n.components()), i))
        .collect();

    let mut desc = CategoryDescription { objects: labels.clone(), ..Default::default() };
    for (i, n) in nats.iter().enumerate() {
        let (s, t) = (functor_pos[n.source()], functor_pos[n.target()]);
        desc.morphisms.push(MorphismDecl { id: nat_labels[i].clone(), src: labels[s].clone(), tgt: labels[t].clone() });
        let dag = n.dagger();
        desc.dagger.insert(nat_labels[i].clone(), nat_labels[nat_pos[&(t, s, dag.components())]].clone());
        if n.source() == n.target() && n == &NatTrans::identity(n.source()) {
            desc.identities.insert(labels[s].clone(), nat_labels[i].clone());
        }
    }
    for (i, beta) in nats.iter().enumerate() {
        for (j, alpha) in nats.iter().enumerate() {
            if alpha.target() != beta.source() {
                continue;
            }
            let ba = beta.vcomp(alpha).expect("composable");
            let (s, t) = (functor_pos[ba.source()], functor_pos[ba.target()]);
            let k = nat_pos[&(s, t, ba.components())];
            desc.composition.push([nat_labels[i].clone(), nat_labels[j].clone(), nat_labels[k].clone()]);
        }
    }
    let category = Arc::new(validate_category(&desc).expect("functor categories are dagger categories"));
    let mut ordered_functors = vec![None; functors.len()];
    for (i, f) in functors.into_iter().enumerate() {
        ordered_functors[category.find_object(&labels[i]).unwrap().0] = Some(f);
    }
    let functors: Vec<DaggerFunctor> = ordered_functors.into_iter().map(Option::unwrap).collect();
    let mut ordered_nats = vec![None; nats.len()];
    for (i, n) in nats.into_iter().enumerate() {
        ordered_nats[category.find_morphism(&nat_labels[i]).unwrap().0] = Some(n);
    }
    let nats: Vec<NatTrans> = ordered_nats.into_iter().map(Option::unwrap).collect();
    let functor_index = functors.iter().enumerate().map(|(i, f)| (f.clone(), Obj(i))).collect();
    let nat_index = nats
        .iter()
        .enumerate()
        .map(|(i, n)| {
            let s = category.src(Mor(i));
            let t = category.tgt(Mor(i));
            ((s, t, n.components().to_vec()), Mor(i))
        })
        .collect();
    FunctorCategory { category, functors, nats, functor_index, nat_index }
}

impl FunctorCategory {
    pub fn functor(&self, x: Obj) -> &DaggerFunctor {
        &self.functors[x.0]
    }

    pub fn nat(&self, m: Mor) -> &NatTrans {
        &self.nats[m.0]
    }

    pub fn functors(&self) -> &[DaggerFunctor] {
        &self.functors
    }

    pub fn object_of(&self, f: &DaggerFunctor) -> Option<Obj> {
        self.functor_index.get(f).copied()
    }

    pub fn morphism_of(&self, n: &NatTrans) -> Option<Mor> {
        let s = self.object_of(n.source())?;
        let t = self.object_of(n.target())?;
        self.nat_index.get(&(s, t, n.components().to_vec())).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn arc(c: FinDaggerCategory) -> Arc<FinDaggerCategory> {
        Arc::new(c)
    }

    fn map(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
        pairs.iter().map(|&(a, b)| (a.to_string(), b.to_string())).collect()
    }

    #[test]
    fn functor_examples() {
        let z2 = arc(fixtures::z2());
        let objs = map(&[("*", "*")]);
        assert!(validate_functor(z2.clone(), z2.clone(), &objs, &map(&[("1", "1"), ("s", "s")])).is_ok());
        assert!(validate_functor(z2.clone(), z2.clone(), &objs, &map(&[("1", "1"), ("s", "1")])).is_ok());
        let iso = arc(fixtures::unit_iso());
        let err = validate_functor(
            iso,
            z2.clone(),
            &map(&[("a", "*"), ("b", "*")]),
            &map(&[("1a", "1"), ("1b", "1"), ("u", "s"), ("ud", "1")]),
        );
        assert_eq!(err, Err(FunctorError::NotDaggerPreserving { morphism: "u".into() }));
        let err = validate_functor(z2.clone(), z2, &objs, &map(&[("1", "1"), ("s", "t")]));
        assert!(matches!(err, Err(FunctorError::DanglingReference { .. })));
    }

    #[test]
    fn nat_examples() {
        let z2 = arc(fixtures::z2());
        let id = DaggerFunctor::identity(&z2);
        let collapse =
            validate_functor(z2.clone(), z2.clone(), &map(&[("*", "*")]), &map(&[("1", "1"), ("s", "1")])).unwrap();
        assert_eq!(
            validate_nat(&id, &collapse, &map(&[("*", "1")])),
            Err(FunctorError::NotNatural { morphism: "s".into() })
        );
        let sigma = validate_nat(&id, &id, &map(&[("*", "s")])).unwrap();
        assert_eq!(sigma.dagger().dagger(), sigma);
        let ident = NatTrans::identity(&id);
        assert_eq!(ident.dagger(), ident);
        assert!(validate_nat(&id, &id, &map(&[("*", "1")])).is_ok());
    }

    #[test]
    fn hom_category_examples() {
        let z2 = arc(fixtures::z2());
        let h = hom_category(&z2, &z2);
        assert_eq!(h.category.num_objects(), 2);
        assert_eq!(h.category.num_morphisms(), 4);
        let id = h.object_of(&DaggerFunctor::identity(&z2)).unwrap();
        for x in h.category.objects() {
            if x != id {
                assert!(h.category.hom(id, x).is_empty());
            }
        }
        let one = arc(fixtures::one());
        let h = hom_category(&arc(fixtures::unit_iso()), &one);
        assert_eq!(h.category.num_objects(), 1);
        assert_eq!(h.category.num_morphisms(), 1);
        for (_, c) in fixtures::all_categories().into_iter().take(4) {
            let c = arc(c);
            let h = hom_category(&one, &c);
            assert_eq!(h.category.num_objects(), c.num_objects());
            assert_eq!(h.category.num_morphisms(), c.num_morphisms());
        }
    }

    #[test]
    fn hcomp_commutes_with_dagger_on_z2() {
        let z2 = arc(fixtures::z2());
        let h = hom_category(&z2, &z2);
        for beta in h.category.morphisms() {
            for alpha in h.category.morphisms() {
                let (b, a) = (h.nat(beta), h.nat(alpha));
                let lhs = b.hcomp(a).unwrap().dagger();
                let rhs = b.dagger().hcomp(&a.dagger()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn functor_counts() {
        let z2 = arc(fixtures::z2());
        let mut budget = Budget::default();
        assert_eq!(enumerate_dagger_functors(&z2, &z2, &mut budget).unwrap().len(), 2);
        let p2 = arc(fixtures::p2());
        // 1 and p are both self-adjoint idempotents; s is neither
        assert_eq!(enumerate_dagger_functors(&p2, &z2, &mut budget).unwrap().len(), 1);
        let mut tiny = Budget::new(3);
        let rel = arc(fixtures::rel2());
        assert!(enumerate_dagger_functors(&rel, &rel, &mut tiny).is_err());
    }
}
