//! The Kleisli category of a dagger Frobenius monad with its canonical
//! dagger, and finite checks of the two representability isomorphisms:
//! Kleisli functors out of `KL(T)` versus algebras for precomposition, and
//! functors into `FEM(T)` versus algebras for postcomposition.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::fincat::{validate_category, CategoryDescription, CategoryError, FinDaggerCategory, Mor, MorphismDecl, Obj};
use crate::functor::{hom_category, DaggerFunctor, FunctorError, NatTrans};
use crate::monad::{build_fem_category, postcompose_monad, precompose_monad, Adjunction, FrobeniusMonad, MonadError};
use crate::verdict::{Verdict, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KleisliError {
    #[error("monad is not Frobenius")]
    NotFrobenius,
    #[error("Kleisli tables fail the dagger category axioms: {0}")]
    NotDaggerCategory(CategoryError),
    #[error(transparent)]
    Monad(#[from] MonadError),
    #[error(transparent)]
    Functor(#[from] FunctorError),
}

#[derive(Clone, Debug)]
pub struct KleisliResult {
    pub monad: FrobeniusMonad,
    pub kl_cat: Arc<FinDaggerCategory>,
    pub free: DaggerFunctor,
    pub forgetful: DaggerFunctor,
    pub adj: Adjunction,
    /// `(f, D)` for each Kleisli morphism, `f: C → T D` in the base.
    pub underlying: Vec<(Mor, Obj)>,
    index: HashMap<(Mor, Obj), Mor>,
}

impl KleisliResult {
    pub fn morphism_of(&self, f: Mor, tag: Obj) -> Option<Mor> {
        self.index.get(&(f, tag)).copied()
    }
}

pub fn build_kleisli(m: &FrobeniusMonad) -> Result<KleisliResult, KleisliError> {
    if !m.frobenius {
        return Err(KleisliError::NotFrobenius);
    }
    let c = m.base().clone();
    let id = |f: Mor, d: Obj| format!("{}>{}", c.mor_id(f), c.obj_id(d));
    let mut arrows: Vec<(Mor, Obj)> = Vec::new();
    let mut desc =
        CategoryDescription { objects: c.objects().map(|x| c.obj_id(x).to_string()).collect(), ..Default::default() };
    for src in c.objects() {
        for d in c.objects() {
            for &f in c.hom(src, m.tobj(d)) {
                arrows.push((f, d));
                desc.morphisms.push(MorphismDecl {
                    id: id(f, d),
                    src: c.obj_id(src).to_string(),
                    tgt: c.obj_id(d).to_string(),
                });
            }
        }
    }
    for d in c.objects() {
        desc.identities.insert(c.obj_id(d).to_string(), id(m.eta(d), d));
    }
    for &(f, tag) in &arrows {
        let dag = c.chain(&[m.tmor(c.dagger(f)), c.dagger(m.mu(tag)), m.eta(tag)]);
        desc.dagger.insert(id(f, tag), id(dag, c.src(f)));
        for &(g, tag2) in &arrows {
            if c.src(g) == tag {
                let gf = c.chain(&[m.mu(tag2), m.tmor(g), f]);
                desc.composition.push([id(g, tag2), id(f, tag), id(gf, tag2)]);
            }
        }
    }
    let kl_cat = Arc::new(validate_category(&desc).map_err(KleisliError::NotDaggerCategory)?);
    let mut underlying = vec![(Mor(0), Obj(0)); arrows.len()];
    let mut index = HashMap::new();
    for &(f, tag) in &arrows {
        let k = kl_cat.find_morphism(&id(f, tag)).unwrap();
        underlying[k.0] = (f, tag);
        index.insert((f, tag), k);
    }
    let objs: Vec<Obj> = c.objects().collect();
    let free = DaggerFunctor::new(
        c.clone(),
        kl_cat.clone(),
        objs.clone(),
        c.morphisms().map(|h| index[&(c.compose(m.eta(c.tgt(h)), h), c.tgt(h))]).collect(),
    )?;
    let forgetful = DaggerFunctor::new(
        kl_cat.clone(),
        c.clone(),
        objs.iter().map(|&d| m.tobj(d)).collect(),
        underlying.iter().map(|&(f, tag)| c.compose(m.mu(tag), m.tmor(f))).collect(),
    )?;
    let unit = c.objects().map(|d| m.eta(d)).collect();
    let counit = c.objects().map(|d| index[&(c.identity(m.tobj(d)), d)]).collect();
    let adj = Adjunction::new(free.clone(), forgetful.clone(), unit, counit)?;
    debug_assert_eq!(&forgetful.after(&free)?, m.endofunctor());
    Ok(KleisliResult { monad: m.clone(), kl_cat, free, forgetful, adj, underlying, index })
}

/// Assembles a functor from partial object/morphism assignments; the first
/// missing image or failed law becomes the witness.
fn assemble(
    name: &str,
    source: &Arc<FinDaggerCategory>,
    target: &Arc<FinDaggerCategory>,
    obj: impl Fn(Obj) -> Option<Obj>,
    mor: impl Fn(Mor) -> Option<Mor>,
) -> Result<DaggerFunctor, Witness> {
    let obj_map = source
        .objects()
        .map(|x| obj(x).ok_or_else(|| Witness::new(format!("{name}: object has no image"), [source.obj_id(x)])))
        .collect::<Result<Vec<_>, _>>()?;
    let mor_map = source
        .morphisms()
        .map(|f| mor(f).ok_or_else(|| Witness::new(format!("{name}: morphism has no image"), [source.mor_id(f)])))
        .collect::<Result<Vec<_>, _>>()?;
    DaggerFunctor::new(source.clone(), target.clone(), obj_map, mor_map)
        .map_err(|e| Witness::new(format!("{name}: {e}"), Vec::<String>::new()))
}

/// Both composites of `phi` and `psi` must be identities.
fn mutually_inverse(phi: &DaggerFunctor, psi: &DaggerFunctor) -> Result<(), Witness> {
    for (name, comp, cat) in
        [("psi after phi", psi.after(phi), phi.source()), ("phi after psi", phi.after(psi), psi.source())]
    {
        let comp = comp.map_err(|e| Witness::new(e.to_string(), Vec::<String>::new()))?;
        if let Some(x) = cat.objects().find(|&x| comp.obj(x) != x) {
            return Err(Witness::new(format!("{name} is not the identity"), [cat.obj_id(x)]));
        }
        if let Some(f) = cat.morphisms().find(|&f| comp.mor(f) != f) {
            return Err(Witness::new(format!("{name} is not the identity"), [cat.mor_id(f)]));
        }
    }
    Ok(())
}

/// Dagger functors `KL(T) → X` against FEM algebras for `S ↦ S T` on
/// `DagCat(base, X)`, through the two explicit functors of the proof.
pub fn check_fk_universal(m: &FrobeniusMonad, x: &Arc<FinDaggerCategory>) -> Result<Verdict, KleisliError> {
    let kl = build_kleisli(m)?;
    let h1 = hom_category(&kl.kl_cat, x);
    let (h0, pm) = precompose_monad(m, x);
    let fem = build_fem_category(&pm)?;
    let c = m.base();

    let phi_obj = |s: Obj| -> Option<Obj> {
        let sp = h1.functor(s);
        let carrier = sp.after(&kl.free).ok()?;
        let structure = NatTrans::new(
            carrier.after(m.endofunctor()).ok()?,
            carrier.clone(),
            c.objects().map(|d| sp.mor(kl.adj.counit.component(d))).collect(),
        )
        .ok()?;
        fem.object_of(h0.object_of(&carrier)?, h0.morphism_of(&structure)?)
    };
    let phi = assemble("phi", &h1.category, &fem.fem_cat, phi_obj, |t| {
        let theta = h1.nat(t).whisker_right(&kl.free).ok()?;
        let (s, tg) = (phi_obj(h1.category.src(t))?, phi_obj(h1.category.tgt(t))?);
        fem.morphism_of(s, tg, h0.morphism_of(&theta)?)
    });
    let phi = match phi {
        Ok(f) => f,
        Err(w) => return Ok(Verdict::Fail(w)),
    };

    let psi_functor = |a: Obj| -> Option<DaggerFunctor> {
        let (carrier, structure) = fem.algebras[a.0];
        let s = h0.functor(carrier);
        let sigma = h0.nat(structure);
        let obj_map = (0..kl.kl_cat.num_objects()).map(|d| s.obj(Obj(d))).collect();
        let mor_map = kl.underlying.iter().map(|&(f, tag)| x.compose(sigma.component(tag), s.mor(f))).collect();
        DaggerFunctor::new(kl.kl_cat.clone(), x.clone(), obj_map, mor_map).ok()
    };
    let psi_obj = |a: Obj| h1.object_of(&psi_functor(a)?);
    let psi = assemble("psi", &fem.fem_cat, &h1.category, psi_obj, |t| {
        let theta = h0.nat(fem.underlying[t.0]);
        let (s, tg) = (psi_functor(fem.fem_cat.src(t))?, psi_functor(fem.fem_cat.tgt(t))?);
        let lifted = NatTrans::new(s, tg, theta.components().to_vec()).ok()?;
        h1.morphism_of(&lifted)
    });
    let psi = match psi {
        Ok(f) => f,
        Err(w) => return Ok(Verdict::Fail(w)),
    };
    Ok(mutually_inverse(&phi, &psi).into())
}

/// Dagger functors `A → FEM(T)` against FEM algebras for `S ↦ T S` on
/// `DagCat(A, base)`.
pub fn check_fem_representability(a: &Arc<FinDaggerCategory>, m: &FrobeniusMonad) -> Result<Verdict, KleisliError> {
    if !m.frobenius {
        return Err(KleisliError::NotFrobenius);
    }
    let fem = build_fem_category(m)?;
    let h = hom_category(a, &fem.fem_cat);
    let (h0, pm) = postcompose_monad(a, m);
    let fem2 = build_fem_category(&pm)?;

    let phi_obj = |f: Obj| -> Option<Obj> {
        let fbar = h.functor(f);
        let carrier = fem.forgetful.after(fbar).ok()?;
        let sigma = fem.xi.whisker_right(fbar).ok()?;
        fem2.object_of(h0.object_of(&carrier)?, h0.morphism_of(&sigma)?)
    };
    let phi = assemble("phi", &h.category, &fem2.fem_cat, phi_obj, |t| {
        let theta = h.nat(t).whisker_left(&fem.forgetful).ok()?;
        let (s, tg) = (phi_obj(h.category.src(t))?, phi_obj(h.category.tgt(t))?);
        fem2.morphism_of(s, tg, h0.morphism_of(&theta)?)
    });
    let phi = match phi {
        Ok(f) => f,
        Err(w) => return Ok(Verdict::Fail(w)),
    };

    let psi_functor = |b: Obj| -> Option<DaggerFunctor> {
        let (carrier, structure) = fem2.algebras[b.0];
        let s = h0.functor(carrier);
        let sigma = h0.nat(structure);
        let obj_map = a.objects().map(|x| fem.object_of(s.obj(x), sigma.component(x))).collect::<Option<Vec<_>>>()?;
        let mor_map = a
            .morphisms()
            .map(|f| fem.morphism_of(obj_map[a.src(f).0], obj_map[a.tgt(f).0], s.mor(f)))
            .collect::<Option<Vec<_>>>()?;
        DaggerFunctor::new(a.clone(), fem.fem_cat.clone(), obj_map, mor_map).ok()
    };
    let psi_obj = |b: Obj| h.object_of(&psi_functor(b)?);
    let psi = assemble("psi", &fem2.fem_cat, &h.category, psi_obj, |t| {
        let theta = h0.nat(fem2.underlying[t.0]);
        let (s, tg) = (psi_functor(fem2.fem_cat.src(t))?, psi_functor(fem2.fem_cat.tgt(t))?);
        let comps = a
            .objects()
            .map(|x| fem.morphism_of(s.obj(x), tg.obj(x), theta.component(x)))
            .collect::<Option<Vec<_>>>()?;
        h.morphism_of(&NatTrans::new(s, tg, comps).ok()?)
    });
    let psi = match psi {
        Ok(f) => f,
        Err(w) => return Ok(Verdict::Fail(w)),
    };
    Ok(mutually_inverse(&phi, &psi).into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::monad::{monad_from_adjunction, validate_monad};

    fn ts() -> FrobeniusMonad {
        let z2 = Arc::new(fixtures::z2());
        let s = z2.morphism("s").unwrap();
        validate_monad(z2.clone(), DaggerFunctor::identity(&z2), vec![s], vec![s]).unwrap()
    }

    #[test]
    fn kleisli_of_ts() {
        let kl = build_kleisli(&ts()).unwrap();
        assert_eq!(kl.kl_cat.num_morphisms(), 2);
        for f in kl.kl_cat.morphisms() {
            assert_eq!(kl.kl_cat.dagger(f), f);
        }
        assert_eq!(monad_from_adjunction(&kl.adj).unwrap(), ts());
    }

    #[test]
    fn kleisli_of_identity_collapses_dagger() {
        for (name, c) in fixtures::all_categories() {
            let c = Arc::new(c);
            let kl = build_kleisli(&FrobeniusMonad::identity(&c)).unwrap();
            for k in kl.kl_cat.morphisms() {
                let (f, _) = kl.underlying[k.0];
                assert_eq!(kl.underlying[kl.kl_cat.dagger(k).0].0, c.dagger(f), "{name}");
            }
        }
    }

    #[test]
    fn representability_instances() {
        let one = Arc::new(fixtures::one());
        let z2 = Arc::new(fixtures::z2());
        assert!(check_fem_representability(&one, &ts()).unwrap().passed());
        assert!(check_fem_representability(&z2, &FrobeniusMonad::identity(&z2)).unwrap().passed());
        assert!(check_fk_universal(&FrobeniusMonad::identity(&one), &one).unwrap().passed());
        assert!(check_fk_universal(&ts(), &z2).unwrap().passed());
    }
}
