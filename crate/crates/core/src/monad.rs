//! Monads on finite dagger categories, their (Frobenius–)Eilenberg–Moore
//! algebras, the FEM category with its free/forgetful adjunction, and the
//! comparison functor from any adjunction generating the same monad.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use thiserror::Error;

use crate::fincat::{validate_category, CategoryDescription, FinDaggerCategory, Mor, MorphismDecl, Obj};
use crate::functor::{
    enumerate_dagger_functors, enumerate_nats, hom_category, same_category, DaggerFunctor, FunctorCategory,
    FunctorError, NatTrans,
};
use crate::search::{Budget, SearchSpaceTooLarge};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonadError {
    #[error("endofunctor is not a dagger endofunctor of the base category")]
    NotDaggerEndofunctor,
    #[error("{which} is not natural: {source}")]
    NotNatural { which: &'static str, source: FunctorError },
    #[error("associativity fails at object `{object}`")]
    AssocFail { object: String },
    #[error("unit law fails at object `{object}`")]
    UnitFail { object: String },
    #[error("monad is not Frobenius")]
    NotFrobenius,
    #[error("structure map `{morphism}` is not a morphism T{object} → {object}")]
    WrongEndpoints { object: String, morphism: String },
    #[error("dagger of algebra homomorphism `{morphism}` is not a homomorphism")]
    InternalClosureFailure { morphism: String },
    #[error("triangle identity fails at `{object}`")]
    TriangleFail { object: String },
    #[error("adjunction data is ill-typed: {0}")]
    Functor(#[from] FunctorError),
    #[error("monad generated by the adjunction is not Frobenius")]
    GeneratedNotFrobenius,
    #[error("the adjunction generates a different monad")]
    MonadMismatch,
    #[error("no comparison functor exists: {reason}")]
    NoComparison { reason: String },
    #[error("comparison functor is not unique: {count} candidates")]
    NonUnique { count: usize },
    #[error(transparent)]
    Search(#[from] SearchSpaceTooLarge),
}

/// A monad whose endofunctor is a dagger functor; `frobenius` records the
/// outcome of [`check_frobenius`].
#[derive(Clone, Debug)]
pub struct FrobeniusMonad {
    base: Arc<FinDaggerCategory>,
    endofunctor: DaggerFunctor,
    mu: NatTrans,
    eta: NatTrans,
    pub frobenius: bool,
}

impl PartialEq for FrobeniusMonad {
    fn eq(&self, other: &Self) -> bool {
        self.endofunctor == other.endofunctor && self.mu == other.mu && self.eta == other.eta
    }
}

impl Eq for FrobeniusMonad {}

pub fn validate_monad(
    base: Arc<FinDaggerCategory>,
    t: DaggerFunctor,
    mu: Vec<Mor>,
    eta: Vec<Mor>,
) -> Result<FrobeniusMonad, MonadError> {
    if !same_category(t.source(), &base) || !same_category(t.target(), &base) {
        return Err(MonadError::NotDaggerEndofunctor);
    }
    let tt = t.after(&t)?;
    let mu = NatTrans::new(tt, t.clone(), mu).map_err(|source| MonadError::NotNatural { which: "mu", source })?;
    let eta = NatTrans::new(DaggerFunctor::identity(&base), t.clone(), eta)
        .map_err(|source| MonadError::NotNatural { which: "eta", source })?;
    let mut m = FrobeniusMonad { base, endofunctor: t, mu, eta, frobenius: false };
    m.check_laws()?;
    m.frobenius = check_frobenius(&m);
    Ok(m)
}

/// Same as [`validate_monad`] with components given by id.
pub fn validate_monad_ids(
    base: Arc<FinDaggerCategory>,
    t: DaggerFunctor,
    mu: &BTreeMap<String, String>,
    eta: &BTreeMap<String, String>,
) -> Result<FrobeniusMonad, MonadError> {
    let comps = |table: &BTreeMap<String, String>| -> Result<Vec<Mor>, MonadError> {
        for key in table.keys() {
            if base.find_object(key).is_none() {
                return Err(FunctorError::DanglingReference { kind: "object", id: key.clone() }.into());
            }
        }
        base.objects()
            .map(|x| {
                let id = base.obj_id(x);
                let m = table
                    .get(id)
                    .ok_or_else(|| FunctorError::MissingAssignment { kind: "object", id: id.to_string() })?;
                base.find_morphism(m)
                    .ok_or_else(|| FunctorError::DanglingReference { kind: "morphism", id: m.clone() }.into())
            })
            .collect()
    };
    let (mu, eta) = (comps(mu)?, comps(eta)?);
    validate_monad(base, t, mu, eta)
}

impl FrobeniusMonad {
    fn check_laws(&self) -> Result<(), MonadError> {
        let c = &self.base;
        for d in c.objects() {
            let mu = self.mu(d);
            if c.compose(mu, self.tmor(mu)) != c.compose(mu, self.mu(self.tobj(d))) {
                return Err(MonadError::AssocFail { object: c.obj_id(d).to_string() });
            }
            let id = c.identity(self.tobj(d));
            if c.compose(mu, self.tmor(self.eta(d))) != id || c.compose(mu, self.eta(self.tobj(d))) != id {
                return Err(MonadError::UnitFail { object: c.obj_id(d).to_string() });
            }
        }
        Ok(())
    }

    /// The identity monad.
    pub fn identity(base: &Arc<FinDaggerCategory>) -> Self {
        let t = DaggerFunctor::identity(base);
        let ids: Vec<Mor> = base.objects().map(|x| base.identity(x)).collect();
        validate_monad(base.clone(), t, ids.clone(), ids).expect("identity monad")
    }

    pub fn base(&self) -> &Arc<FinDaggerCategory> {
        &self.base
    }

    pub fn endofunctor(&self) -> &DaggerFunctor {
        &self.endofunctor
    }

    pub fn mu_nat(&self) -> &NatTrans {
        &self.mu
    }

    pub fn eta_nat(&self) -> &NatTrans {
        &self.eta
    }

    pub fn tobj(&self, d: Obj) -> Obj {
        self.endofunctor.obj(d)
    }

    pub fn tmor(&self, f: Mor) -> Mor {
        self.endofunctor.mor(f)
    }

    pub fn mu(&self, d: Obj) -> Mor {
        self.mu.component(d)
    }

    pub fn eta(&self, d: Obj) -> Mor {
        self.eta.component(d)
    }

    /// e.g. `T=[*:*;1:1,s:s] mu={*:s} eta={*:s}`.
    pub fn label(&self) -> String {
        let c = &self.base;
        let comps = |n: &NatTrans| {
            c.objects().map(|x| format!("{}:{}", c.obj_id(x), c.mor_id(n.component(x)))).collect::<Vec<_>>().join(",")
        };
        format!("T={} mu={{{}}} eta={{{}}}", self.endofunctor.label(), comps(&self.mu), comps(&self.eta))
    }
}

/// `T(μ_D) ∘ μ†_{TD} = μ_{TD} ∘ T(μ†_D)` at every object.
pub fn check_frobenius(m: &FrobeniusMonad) -> bool {
    let c = &m.base;
    c.objects().all(|d| {
        let td = m.tobj(d);
        let lhs = c.compose(m.tmor(m.mu(d)), c.dagger(m.mu(td)));
        let rhs = c.compose(m.mu(td), m.tmor(c.dagger(m.mu(d))));
        lhs == rhs
    })
}

fn check_structure_map(m: &FrobeniusMonad, d: Obj, delta: Mor) -> Result<(), MonadError> {
    let c = &m.base;
    if c.src(delta) != m.tobj(d) || c.tgt(delta) != d {
        return Err(MonadError::WrongEndpoints {
            object: c.obj_id(d).to_string(),
            morphism: c.mor_id(delta).to_string(),
        });
    }
    Ok(())
}

fn em_laws(m: &FrobeniusMonad, d: Obj, delta: Mor) -> bool {
    let c = &m.base;
    c.compose(delta, m.eta(d)) == c.identity(d) && c.compose(delta, m.tmor(delta)) == c.compose(delta, m.mu(d))
}

fn frobenius_law(m: &FrobeniusMonad, d: Obj, delta: Mor) -> bool {
    let c = &m.base;
    c.compose(m.mu(d), m.tmor(c.dagger(delta))) == c.compose(m.tmor(delta), c.dagger(m.mu(d)))
}

pub fn is_em_algebra(m: &FrobeniusMonad, d: Obj, delta: Mor) -> Result<bool, MonadError> {
    check_structure_map(m, d, delta)?;
    Ok(em_laws(m, d, delta))
}

pub fn is_fem_algebra(m: &FrobeniusMonad, d: Obj, delta: Mor) -> Result<bool, MonadError> {
    check_structure_map(m, d, delta)?;
    Ok(em_laws(m, d, delta) && frobenius_law(m, d, delta))
}

/// `h: (D, δ) → (D', δ')` with `h ∘ δ = δ' ∘ T(h)`.
pub fn is_algebra_hom(m: &FrobeniusMonad, delta: Mor, delta2: Mor, h: Mor) -> bool {
    let c = &m.base;
    c.compose(h, delta) == c.compose(delta2, m.tmor(h))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EMAlgebra {
    pub carrier: Obj,
    pub structure: Mor,
    pub em: bool,
    pub fem: bool,
}

/// All EM algebras, each flagged for the Frobenius law.
pub fn enumerate_algebras(m: &FrobeniusMonad) -> Vec<EMAlgebra> {
    let c = &m.base;
    c.objects()
        .flat_map(|d| c.hom(m.tobj(d), d).iter().map(move |&delta| (d, delta)))
        .filter(|&(d, delta)| em_laws(m, d, delta))
        .map(|(d, delta)| EMAlgebra { carrier: d, structure: delta, em: true, fem: frobenius_law(m, d, delta) })
        .collect()
}

/// All monads on `base`, flagged for the Frobenius law, ordered by
/// endofunctor, then multiplication, then unit.
pub fn enumerate_monads(base: &Arc<FinDaggerCategory>, budget: &mut Budget) -> Result<Vec<FrobeniusMonad>, MonadError> {
    let id = DaggerFunctor::identity(base);
    let mut out = Vec::new();
    for t in enumerate_dagger_functors(base, base, budget)? {
        let tt = t.after(&t)?;
        let mus = enumerate_nats(&tt, &t, budget)?;
        let etas = enumerate_nats(&id, &t, budget)?;
        for mu in &mus {
            for eta in &etas {
                budget.tick()?;
                let mut m = FrobeniusMonad {
                    base: base.clone(),
                    endofunctor: t.clone(),
                    mu: mu.clone(),
                    eta: eta.clone(),
                    frobenius: false,
                };
                if m.check_laws().is_ok() {
                    m.frobenius = check_frobenius(&m);
                    out.push(m);
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct Adjunction {
    pub left: DaggerFunctor,
    pub right: DaggerFunctor,
    pub unit: NatTrans,
    pub counit: NatTrans,
}

impl Adjunction {
    /// `left: A → D`, `right: D → A`, `unit: Id_A → right∘left`,
    /// `counit: left∘right → Id_D`; both triangle identities are checked.
    pub fn new(
        left: DaggerFunctor,
        right: DaggerFunctor,
        unit: Vec<Mor>,
        counit: Vec<Mor>,
    ) -> Result<Self, MonadError> {
        let (a, d) = (left.source().clone(), left.target().clone());
        let uf = right.after(&left)?;
        let fu = left.after(&right)?;
        let unit = NatTrans::new(DaggerFunctor::identity(&a), uf, unit)
            .map_err(|source| MonadError::NotNatural { which: "unit", source })?;
        let counit = NatTrans::new(fu, DaggerFunctor::identity(&d), counit)
            .map_err(|source| MonadError::NotNatural { which: "counit", source })?;
        for x in a.objects() {
            let fx = left.obj(x);
            if d.compose(counit.component(fx), left.mor(unit.component(x))) != d.identity(fx) {
                return Err(MonadError::TriangleFail { object: a.obj_id(x).to_string() });
            }
        }
        for y in d.objects() {
            let uy = right.obj(y);
            if a.compose(right.mor(counit.component(y)), unit.component(uy)) != a.identity(uy) {
                return Err(MonadError::TriangleFail { object: d.obj_id(y).to_string() });
            }
        }
        Ok(Adjunction { left, right, unit, counit })
    }

    pub fn identity(c: &Arc<FinDaggerCategory>) -> Self {
        let id = DaggerFunctor::identity(c);
        let ids: Vec<Mor> = c.objects().map(|x| c.identity(x)).collect();
        Adjunction::new(id.clone(), id, ids.clone(), ids).expect("identity adjunction")
    }
}

/// `(U F, U ε F, η)`.
pub fn monad_from_adjunction(adj: &Adjunction) -> Result<FrobeniusMonad, MonadError> {
    let a = adj.left.source().clone();
    let t = adj.right.after(&adj.left)?;
    let mu = a.objects().map(|x| adj.right.mor(adj.counit.component(adj.left.obj(x)))).collect();
    let eta = adj.unit.components().to_vec();
    let m = validate_monad(a, t, mu, eta)?;
    if !m.frobenius {
        return Err(MonadError::GeneratedNotFrobenius);
    }
    Ok(m)
}

#[derive(Clone, Debug)]
pub struct FEMCategoryResult {
    pub monad: FrobeniusMonad,
    pub fem_cat: Arc<FinDaggerCategory>,
    /// `(carrier, structure map)` of each object of `fem_cat`.
    pub algebras: Vec<(Obj, Mor)>,
    /// Underlying base morphism of each morphism of `fem_cat`.
    pub underlying: Vec<Mor>,
    pub forgetful: DaggerFunctor,
    pub free: DaggerFunctor,
    pub adj: Adjunction,
    /// `ξ: T U → U`, with components the structure maps.
    pub xi: NatTrans,
    algebra_index: HashMap<(Obj, Mor), Obj>,
    hom_index: HashMap<(Obj, Obj, Mor), Mor>,
}

pub fn algebra_id(c: &FinDaggerCategory, d: Obj, delta: Mor) -> String {
    format!("{}@{}", c.obj_id(d), c.mor_id(delta))
}

pub fn build_fem_category(m: &FrobeniusMonad) -> Result<FEMCategoryResult, MonadError> {
    if !m.frobenius {
        return Err(MonadError::NotFrobenius);
    }
    let c = m.base.clone();
    let algs: Vec<(Obj, Mor)> =
        enumerate_algebras(m).into_iter().filter(|a| a.fem).map(|a| (a.carrier, a.structure)).collect();
    let alg_ids: Vec<String> = algs.iter().map(|&(d, delta)| algebra_id(&c, d, delta)).collect();
    let mut desc = CategoryDescription { objects: alg_ids.clone(), ..Default::default() };
    // (source alg, target alg, underlying) for every homomorphism
    let mut homs: Vec<(usize, usize, Mor)> = Vec::new();
    for (i, &(d, delta)) in algs.iter().enumerate() {
        for (j, &(d2, delta2)) in algs.iter().enumerate() {
            for &h in c.hom(d, d2) {
                if is_algebra_hom(m, delta, delta2, h) {
                    homs.push((i, j, h));
                }
            }
        }
    }
    let hom_id = |&(i, j, h): &(usize, usize, Mor)| format!("{}:{}->{}", c.mor_id(h), alg_ids[i], alg_ids[j]);
    let lookup: HashMap<(usize, usize, Mor), usize> = homs.iter().enumerate().map(|(k, &e)| (e, k)).collect();
    for e in &homs {
        let (i, j, h) = *e;
        desc.morphisms.push(MorphismDecl { id: hom_id(e), src: alg_ids[i].clone(), tgt: alg_ids[j].clone() });
        let dag = (j, i, c.dagger(h));
        let Some(&k) = lookup.get(&dag) else {
            return Err(MonadError::InternalClosureFailure { morphism: hom_id(e) });
        };
        desc.dagger.insert(hom_id(e), hom_id(&homs[k]));
        if i == j && h == c.identity(algs[i].0) {
            desc.identities.insert(alg_ids[i].clone(), hom_id(e));
        }
    }
    for g in &homs {
        for f in &homs {
            if f.1 != g.0 {
                continue;
            }
            let gf = (f.0, g.1, c.compose(g.2, f.2));
            let k = lookup[&gf];
            desc.composition.push([hom_id(g), hom_id(f), hom_id(&homs[k])]);
        }
    }
    let fem_cat = Arc::new(validate_category(&desc).expect("FEM algebras and homomorphisms form a dagger category"));
    let mut algebras = vec![(Obj(0), Mor(0)); algs.len()];
    let mut algebra_index = HashMap::new();
    for (i, &a) in algs.iter().enumerate() {
        let x = fem_cat.find_object(&alg_ids[i]).unwrap();
        algebras[x.0] = a;
        algebra_index.insert(a, x);
    }
    let mut underlying = vec![Mor(0); homs.len()];
    let mut hom_index = HashMap::new();
    for e in &homs {
        let f = fem_cat.find_morphism(&hom_id(e)).unwrap();
        underlying[f.0] = e.2;
        hom_index.insert((algebra_index[&algs[e.0]], algebra_index[&algs[e.1]], e.2), f);
    }

    let forgetful =
        DaggerFunctor::new(fem_cat.clone(), c.clone(), algebras.iter().map(|a| a.0).collect(), underlying.clone())?;
    let free_obj: Vec<Obj> = c
        .objects()
        .map(|d| {
            algebra_index
                .get(&(m.tobj(d), m.mu(d)))
                .copied()
                .ok_or_else(|| MonadError::InternalClosureFailure { morphism: algebra_id(&c, m.tobj(d), m.mu(d)) })
        })
        .collect::<Result<_, _>>()?;
    let free_mor: Vec<Mor> =
        c.morphisms().map(|h| hom_index[&(free_obj[c.src(h).0], free_obj[c.tgt(h).0], m.tmor(h))]).collect();
    let free = DaggerFunctor::new(c.clone(), fem_cat.clone(), free_obj.clone(), free_mor)?;
    let unit = c.objects().map(|d| m.eta(d)).collect();
    let counit = fem_cat
        .objects()
        .map(|x| {
            let (d, delta) = algebras[x.0];
            hom_index[&(free_obj[d.0], x, delta)]
        })
        .collect();
    let adj = Adjunction::new(free.clone(), forgetful.clone(), unit, counit)?;
    let xi =
        NatTrans::new(m.endofunctor.after(&forgetful)?, forgetful.clone(), algebras.iter().map(|a| a.1).collect())?;
    Ok(FEMCategoryResult {
        monad: m.clone(),
        fem_cat,
        algebras,
        underlying,
        forgetful,
        free,
        adj,
        xi,
        algebra_index,
        hom_index,
    })
}

impl FEMCategoryResult {
    pub fn object_of(&self, d: Obj, delta: Mor) -> Option<Obj> {
        self.algebra_index.get(&(d, delta)).copied()
    }

    pub fn morphism_of(&self, x: Obj, y: Obj, h: Mor) -> Option<Mor> {
        self.hom_index.get(&(x, y, h)).copied()
    }
}

/// Functors `N` into the FEM category with `U^T N = U` and `ξ N = U ε`.
fn is_comparison(adj: &Adjunction, fem: &FEMCategoryResult, n: &DaggerFunctor) -> Result<bool, MonadError> {
    if fem.forgetful.after(n)? != adj.right {
        return Ok(false);
    }
    let lhs = fem.xi.whisker_right(n)?;
    let rhs = adj.counit.whisker_left(&adj.right)?;
    Ok(lhs.components() == rhs.components())
}

/// The unique `N: D → FEM(A, T)` with `U^T N = U` and `ξ N = U ε`;
/// uniqueness is certified by enumerating every dagger functor.
pub fn comparison_functor(
    adj: &Adjunction,
    fem: &FEMCategoryResult,
    budget: &mut Budget,
) -> Result<DaggerFunctor, MonadError> {
    if monad_from_adjunction(adj)? != fem.monad {
        return Err(MonadError::MonadMismatch);
    }
    let d = adj.right.source().clone();
    let no = |reason: String| MonadError::NoComparison { reason };
    let obj_map: Vec<Obj> = d
        .objects()
        .map(|x| {
            let (ux, uex) = (adj.right.obj(x), adj.right.mor(adj.counit.component(x)));
            fem.object_of(ux, uex).ok_or_else(|| no(format!("({}, U ε) is not an FEM algebra", d.obj_id(x))))
        })
        .collect::<Result<_, _>>()?;
    let mor_map: Vec<Mor> = d
        .morphisms()
        .map(|g| {
            fem.morphism_of(obj_map[d.src(g).0], obj_map[d.tgt(g).0], adj.right.mor(g))
                .ok_or_else(|| no(format!("U({}) is not an algebra homomorphism", d.mor_id(g))))
        })
        .collect::<Result<_, _>>()?;
    let n = DaggerFunctor::new(d.clone(), fem.fem_cat.clone(), obj_map, mor_map)?;
    if !is_comparison(adj, fem, &n)? {
        return Err(no("constructed functor fails U^T N = U or ξ N = U ε".into()));
    }
    if n.after(&adj.left)? != fem.free {
        return Err(no("N F differs from the free functor".into()));
    }
    let mut found = Vec::new();
    for cand in enumerate_dagger_functors(&d, &fem.fem_cat, budget)? {
        if is_comparison(adj, fem, &cand)? {
            found.push(cand);
        }
    }
    match found.as_slice() {
        [only] if *only == n => Ok(n),
        [] | [_] => Err(no("enumeration disagrees with the constructed functor".into())),
        _ => Err(MonadError::NonUnique { count: found.len() }),
    }
}

fn has_unitary_iso(f: &DaggerFunctor, g: &DaggerFunctor, budget: &mut Budget) -> Result<bool, MonadError> {
    Ok(enumerate_nats(f, g, budget)?.iter().any(NatTrans::is_unitary))
}

/// Whether the comparison functor is part of a dagger equivalence with
/// unitary natural isomorphisms.
pub fn is_monadic(adj: &Adjunction, fem: &FEMCategoryResult, budget: &mut Budget) -> Result<bool, MonadError> {
    let n = comparison_functor(adj, fem, budget)?;
    let d = n.source().clone();
    for m in enumerate_dagger_functors(&fem.fem_cat, &d, budget)? {
        if has_unitary_iso(&n.after(&m)?, &DaggerFunctor::identity(&fem.fem_cat), budget)?
            && has_unitary_iso(&DaggerFunctor::identity(&d), &m.after(&n)?, budget)?
        {
            return Ok(true);
        }
    }
    Ok(false)
}

fn functor_on_homs(
    hc: &FunctorCategory,
    obj: impl Fn(&DaggerFunctor) -> DaggerFunctor,
    mor: impl Fn(&NatTrans) -> NatTrans,
) -> DaggerFunctor {
    let c = &hc.category;
    let obj_map = c.objects().map(|x| hc.object_of(&obj(hc.functor(x))).expect("image is a dagger functor")).collect();
    let mor_map = c.morphisms().map(|f| hc.morphism_of(&mor(hc.nat(f))).expect("image is natural")).collect();
    DaggerFunctor::new(c.clone(), c.clone(), obj_map, mor_map).expect("induced endofunctor")
}

/// The monad `S ↦ T S` on `DagCat(A, base)`.
pub fn postcompose_monad(a: &Arc<FinDaggerCategory>, m: &FrobeniusMonad) -> (FunctorCategory, FrobeniusMonad) {
    let hc = hom_category(a, &m.base);
    let t = &m.endofunctor;
    let tf = functor_on_homs(&hc, |s| t.after(s).unwrap(), |al| al.whisker_left(t).unwrap());
    let c = &hc.category;
    let mu = c.objects().map(|x| hc.morphism_of(&m.mu.whisker_right(hc.functor(x)).unwrap()).unwrap()).collect();
    let eta = c.objects().map(|x| hc.morphism_of(&m.eta.whisker_right(hc.functor(x)).unwrap()).unwrap()).collect();
    let induced = validate_monad(c.clone(), tf, mu, eta).expect("postcomposition monad");
    (hc, induced)
}

/// The monad `S ↦ S T` on `DagCat(base, X)`.
pub fn precompose_monad(m: &FrobeniusMonad, x: &Arc<FinDaggerCategory>) -> (FunctorCategory, FrobeniusMonad) {
    let hc = hom_category(&m.base, x);
    let t = &m.endofunctor;
    let tf = functor_on_homs(&hc, |s| s.after(t).unwrap(), |al| al.whisker_right(t).unwrap());
    let c = &hc.category;
    let mu = c.objects().map(|y| hc.morphism_of(&m.mu.whisker_left(hc.functor(y)).unwrap()).unwrap()).collect();
    let eta = c.objects().map(|y| hc.morphism_of(&m.eta.whisker_left(hc.functor(y)).unwrap()).unwrap()).collect();
    let induced = validate_monad(c.clone(), tf, mu, eta).expect("precomposition monad");
    (hc, induced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    pub(crate) fn ts() -> FrobeniusMonad {
        let z2 = Arc::new(fixtures::z2());
        let s = z2.morphism("s").unwrap();
        validate_monad(z2.clone(), DaggerFunctor::identity(&z2), vec![s], vec![s]).unwrap()
    }

    #[test]
    fn monad_examples() {
        let z2 = Arc::new(fixtures::z2());
        let id = FrobeniusMonad::identity(&z2);
        assert!(id.frobenius);
        assert!(ts().frobenius);
        let (one, s) = (z2.morphism("1").unwrap(), z2.morphism("s").unwrap());
        let err = validate_monad(z2.clone(), DaggerFunctor::identity(&z2), vec![one], vec![s]);
        assert_eq!(err.unwrap_err(), MonadError::UnitFail { object: "*".into() });
    }

    #[test]
    fn algebra_examples() {
        let m = ts();
        let z2 = m.base().clone();
        let star = z2.object("*").unwrap();
        let (one, s) = (z2.morphism("1").unwrap(), z2.morphism("s").unwrap());
        assert!(is_fem_algebra(&m, star, s).unwrap());
        assert!(!is_em_algebra(&m, star, one).unwrap());
        let iso = Arc::new(fixtures::unit_iso());
        let idm = FrobeniusMonad::identity(&iso);
        let u = iso.morphism("u").unwrap();
        assert!(matches!(is_em_algebra(&idm, iso.object("a").unwrap(), u), Err(MonadError::WrongEndpoints { .. })));
    }

    #[test]
    fn z2_has_two_monads() {
        let z2 = Arc::new(fixtures::z2());
        let ms = enumerate_monads(&z2, &mut Budget::default()).unwrap();
        assert_eq!(ms.len(), 2);
        assert!(ms.iter().all(|m| m.frobenius));
        assert!(ms.contains(&ts()));
    }

    #[test]
    fn fem_of_ts_is_z2_sized() {
        let fem = build_fem_category(&ts()).unwrap();
        assert_eq!(fem.fem_cat.num_objects(), 1);
        assert_eq!(fem.fem_cat.num_morphisms(), 2);
        assert_eq!(fem.fem_cat.obj_id(Obj(0)), "*@s");
        assert_eq!(monad_from_adjunction(&fem.adj).unwrap(), ts());
        let n = comparison_functor(&fem.adj, &fem, &mut Budget::default()).unwrap();
        assert_eq!(n, DaggerFunctor::identity(&fem.fem_cat));
        assert!(is_monadic(&fem.adj, &fem, &mut Budget::default()).unwrap());
    }

    #[test]
    fn fem_of_identity_monads() {
        for (name, c) in fixtures::all_categories() {
            let c = Arc::new(c);
            let fem = build_fem_category(&FrobeniusMonad::identity(&c)).unwrap();
            assert_eq!(fem.fem_cat.num_objects(), c.num_objects(), "{name}");
            assert_eq!(fem.fem_cat.num_morphisms(), c.num_morphisms(), "{name}");
        }
    }

    #[test]
    fn identity_adjunction_comparison() {
        let z2 = Arc::new(fixtures::z2());
        let adj = Adjunction::identity(&z2);
        let m = monad_from_adjunction(&adj).unwrap();
        assert_eq!(m, FrobeniusMonad::identity(&z2));
        let fem = build_fem_category(&m).unwrap();
        let n = comparison_functor(&adj, &fem, &mut Budget::default()).unwrap();
        assert_eq!(fem.forgetful.after(&n).unwrap(), DaggerFunctor::identity(&z2));
        assert!(is_monadic(&adj, &fem, &mut Budget::default()).unwrap());
    }

    #[test]
    fn isometry_adjunction_is_not_monadic() {
        let one = Arc::new(fixtures::one());
        let zx = Arc::new(fixtures::zero_x());
        let zero = zx.object("0").unwrap();
        let left = DaggerFunctor::constant(&one, &zx, zero);
        let right = DaggerFunctor::constant(&zx, &one, Obj(0));
        let counit = vec![zx.morphism("1_0").unwrap(), zx.morphism("z").unwrap()];
        let adj = Adjunction::new(left, right, vec![Mor(0)], counit).unwrap();
        let m = monad_from_adjunction(&adj).unwrap();
        let fem = build_fem_category(&m).unwrap();
        let n = comparison_functor(&adj, &fem, &mut Budget::default()).unwrap();
        assert_eq!(n.target().num_objects(), 1);
        assert!(!is_monadic(&adj, &fem, &mut Budget::default()).unwrap());
    }

    #[test]
    fn mismatched_monad_is_rejected() {
        let fem = build_fem_category(&ts()).unwrap();
        let adj = Adjunction::identity(fem.monad.base());
        assert_eq!(comparison_functor(&adj, &fem, &mut Budget::default()).unwrap_err(), MonadError::MonadMismatch);
    }

    #[test]
    fn induced_monads_are_frobenius() {
        let one = Arc::new(fixtures::one());
        let z2 = Arc::new(fixtures::z2());
        let (hc, post) = postcompose_monad(&z2, &ts());
        assert_eq!(hc.category.num_objects(), 2);
        assert!(post.frobenius);
        let (_, pre) = precompose_monad(&ts(), &one);
        assert!(pre.frobenius);
    }
}
