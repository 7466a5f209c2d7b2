//! Small named 2-categories: suspensions, locally discrete 2-categories and
//! finite fragments of the 2-category of dagger categories.

use std::sync::Arc;

use super::{
    validate_2category, Adjunction2, Cell0, Cell1, Cell2, FEMObjectWitness, FinDagger2Category, HomDescription, Monad2,
    TwoCategoryDescription,
};
use crate::fincat::{CategoryDescription, FinDaggerCategory, MorphismDecl};
use crate::functor::{compose_functors, hom_category, same_category, DaggerFunctor, FunctorCategory, NatTrans};
use crate::monad::{Adjunction, FEMCategoryResult, FrobeniusMonad};

fn discrete(objects: &[String]) -> CategoryDescription {
    let mut desc = CategoryDescription { objects: objects.to_vec(), ..Default::default() };
    for x in objects {
        let id = format!("1_{x}");
        desc.morphisms.push(MorphismDecl { id: id.clone(), src: x.clone(), tgt: x.clone() });
        desc.identities.insert(x.clone(), id.clone());
        desc.composition.push([id.clone(), id.clone(), id.clone()]);
        desc.dagger.insert(id.clone(), id);
    }
    desc
}

/// A category viewed as a 2-category with only identity 2-cells, named `1_f`.
pub fn locally_discrete(c: &FinDaggerCategory) -> FinDagger2Category {
    let ids = |xs: Vec<&str>| xs.into_iter().map(String::from).collect::<Vec<_>>();
    let mut desc =
        TwoCategoryDescription { cells0: c.objects().map(|a| c.obj_id(a).to_string()).collect(), ..Default::default() };
    for a in c.objects() {
        desc.id1.insert(c.obj_id(a).into(), c.mor_id(c.identity(a)).into());
        for b in c.objects() {
            let objs = ids(c.hom(a, b).iter().map(|&f| c.mor_id(f)).collect());
            desc.homs.push(HomDescription {
                src: c.obj_id(a).into(),
                tgt: c.obj_id(b).into(),
                category: discrete(&objs),
            });
            for cc in c.objects() {
                let row = |x: String, y: String, z: String| {
                    [c.obj_id(a).to_string(), c.obj_id(b).to_string(), c.obj_id(cc).to_string(), x, y, z]
                };
                for &g in c.hom(b, cc) {
                    for &f in c.hom(a, b) {
                        let gf = c.mor_id(c.compose(g, f)).to_string();
                        let (g, f) = (c.mor_id(g).to_string(), c.mor_id(f).to_string());
                        desc.comp1.push(row(g.clone(), f.clone(), gf.clone()));
                        desc.whisker_left.push(row(g.clone(), format!("1_{f}"), format!("1_{gf}")));
                        desc.whisker_right.push(row(format!("1_{g}"), f, format!("1_{gf}")));
                    }
                }
            }
        }
    }
    validate_2category(&desc).expect("locally discrete 2-categories are valid")
}

/// The terminal 2-category.
pub fn terminal() -> FinDagger2Category {
    locally_discrete(&crate::fixtures::one())
}

/// One 0-cell `*`, one 1-cell `t0`, 2-cells `1` and `s` forming the group of
/// order two, with all whiskerings trivial.
pub fn sigma_z2_description() -> TwoCategoryDescription {
    let s = |x: &str| x.to_string();
    let hom = CategoryDescription {
        objects: vec![s("t0")],
        morphisms: vec![
            MorphismDecl { id: s("1"), src: s("t0"), tgt: s("t0") },
            MorphismDecl { id: s("s"), src: s("t0"), tgt: s("t0") },
        ],
        identities: [(s("t0"), s("1"))].into(),
        composition: vec![
            [s("1"), s("1"), s("1")],
            [s("1"), s("s"), s("s")],
            [s("s"), s("1"), s("s")],
            [s("s"), s("s"), s("1")],
        ],
        dagger: [(s("1"), s("1")), (s("s"), s("s"))].into(),
    };
    let row = |x: &str, y: &str, z: &str| ["*", "*", "*", x, y, z].map(String::from);
    TwoCategoryDescription {
        cells0: vec![s("*")],
        homs: vec![HomDescription { src: s("*"), tgt: s("*"), category: hom }],
        id1: [(s("*"), s("t0"))].into(),
        comp1: vec![row("t0", "t0", "t0")],
        whisker_left: vec![row("t0", "1", "1"), row("t0", "s", "s")],
        whisker_right: vec![row("1", "t0", "1"), row("s", "t0", "s")],
        hcomp: vec![],
    }
}

pub fn sigma_z2() -> FinDagger2Category {
    validate_2category(&sigma_z2_description()).expect("ΣZ2 is a dagger 2-category")
}

/// A full sub-2-category of dagger categories on finitely many named
/// categories, with hom categories of dagger functors and natural
/// transformations.
pub struct DagCatFragment {
    pub two: FinDagger2Category,
    categories: Vec<Arc<FinDaggerCategory>>,
    homs: Vec<FunctorCategory>,
}

impl DagCatFragment {
    pub fn new(mut named: Vec<(String, Arc<FinDaggerCategory>)>) -> Self {
        named.sort_by(|a, b| a.0.cmp(&b.0));
        let n = named.len();
        let categories: Vec<_> = named.iter().map(|(_, c)| c.clone()).collect();
        let homs: Vec<FunctorCategory> =
            (0..n * n).map(|i| hom_category(&categories[i / n], &categories[i % n])).collect();
        let hom = |a: Cell0, b: Cell0| &homs[a.0 * n + b.0];
        let id1 = (0..n)
            .map(|a| hom(Cell0(a), Cell0(a)).object_of(&DaggerFunctor::identity(&categories[a])).unwrap())
            .collect();
        let two = FinDagger2Category::from_parts(
            named.into_iter().map(|(s, _)| s).collect(),
            homs.iter().map(|h| h.category.clone()).collect(),
            id1,
            |g, f| {
                let gf = compose_functors(hom(g.src, g.tgt).functor(g.obj), hom(f.src, f.tgt).functor(f.obj)).ok()?;
                hom(f.src, g.tgt).object_of(&gf)
            },
            |g, al| {
                let x = hom(al.src, al.tgt).nat(al.mor).whisker_left(hom(g.src, g.tgt).functor(g.obj)).ok()?;
                hom(al.src, g.tgt).morphism_of(&x)
            },
            |be, f| {
                let x = hom(be.src, be.tgt).nat(be.mor).whisker_right(hom(f.src, f.tgt).functor(f.obj)).ok()?;
                hom(f.src, be.tgt).morphism_of(&x)
            },
            &[],
        )
        .expect("dagger categories form a dagger 2-category");
        DagCatFragment { two, categories, homs }
    }

    fn hom(&self, a: Cell0, b: Cell0) -> &FunctorCategory {
        &self.homs[a.0 * self.categories.len() + b.0]
    }

    pub fn category(&self, a: Cell0) -> &Arc<FinDaggerCategory> {
        &self.categories[a.0]
    }

    pub fn cell0_of(&self, c: &Arc<FinDaggerCategory>) -> Option<Cell0> {
        self.categories.iter().position(|x| same_category(x, c)).map(Cell0)
    }

    pub fn functor(&self, f: Cell1) -> &DaggerFunctor {
        self.hom(f.src, f.tgt).functor(f.obj)
    }

    pub fn nat(&self, a: Cell2) -> &NatTrans {
        self.hom(a.src, a.tgt).nat(a.mor)
    }

    pub fn cell1_of(&self, f: &DaggerFunctor) -> Option<Cell1> {
        let (a, b) = (self.cell0_of(f.source())?, self.cell0_of(f.target())?);
        Some(Cell1 { src: a, tgt: b, obj: self.hom(a, b).object_of(f)? })
    }

    pub fn cell2_of(&self, n: &NatTrans) -> Option<Cell2> {
        let (a, b) = (self.cell0_of(n.source().source())?, self.cell0_of(n.source().target())?);
        Some(Cell2 { src: a, tgt: b, mor: self.hom(a, b).morphism_of(n)? })
    }

    pub fn monad_of(&self, m: &FrobeniusMonad) -> Option<Monad2> {
        let t = self.cell1_of(m.endofunctor())?;
        let mu = self.cell2_of(m.mu_nat())?;
        let eta = self.cell2_of(m.eta_nat())?;
        Monad2::new(&self.two, t, mu, eta).ok()
    }

    /// The witness carried by an FEM category that is itself a 0-cell.
    pub fn witness_of(&self, fem: &FEMCategoryResult) -> Option<FEMObjectWitness> {
        Some(FEMObjectWitness {
            e: self.cell0_of(&fem.fem_cat)?,
            u: self.cell1_of(&fem.forgetful)?,
            xi: self.cell2_of(&fem.xi)?,
            f_t: self.cell1_of(&fem.free)?,
            eps_t: self.cell2_of(&fem.adj.counit)?,
        })
    }

    pub fn adjunction_of(&self, adj: &Adjunction) -> Option<Adjunction2> {
        Some(Adjunction2 {
            f: self.cell1_of(&adj.left)?,
            u: self.cell1_of(&adj.right)?,
            eta: self.cell2_of(&adj.unit)?,
            eps: self.cell2_of(&adj.counit)?,
        })
    }
}

/// The fragment on `ONE`, `Z2` and `FEM(TS)` (and `KL(TS)` when asked),
/// where `TS` is the swap monad on `Z2`, together with the monad and its FEM
/// witness.
pub struct StandardFragment {
    pub fragment: DagCatFragment,
    pub ts: FrobeniusMonad,
    pub fem: FEMCategoryResult,
}

/// The identity functor on `Z2` with `μ = η = s`.
pub fn ts_monad() -> FrobeniusMonad {
    let z2 = Arc::new(crate::fixtures::z2());
    let s = z2.morphism("s").expect("Z2 has s");
    crate::monad::validate_monad(z2.clone(), DaggerFunctor::identity(&z2), vec![s], vec![s]).expect("TS is a monad")
}

pub fn standard_fragment(with_kleisli: bool) -> StandardFragment {
    let ts = ts_monad();
    let fem = crate::monad::build_fem_category(&ts).expect("TS is Frobenius");
    let mut named = vec![
        ("ONE".to_string(), Arc::new(crate::fixtures::one())),
        ("Z2".to_string(), ts.base().clone()),
        ("FEM(TS)".to_string(), fem.fem_cat.clone()),
    ];
    if with_kleisli {
        let kl = crate::kleisli::build_kleisli(&ts).expect("TS is Frobenius");
        named.push(("KL(TS)".to_string(), kl.kl_cat.clone()));
    }
    StandardFragment { fragment: DagCatFragment::new(named), ts, fem }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::two_cat::enumerate_monads2;

    #[test]
    fn standard_fragment_contains_ts() {
        let sf = standard_fragment(false);
        let k = &sf.fragment.two;
        assert_eq!(k.num_cells0(), 3);
        let m = sf.fragment.monad_of(&sf.ts).unwrap();
        assert!(m.frobenius && !m.is_identity(k));
        assert!(sf.fragment.witness_of(&sf.fem).is_some());
        assert!(enumerate_monads2(k).contains(&m));
    }
}
