//! Property tests over the fixture corpus and random perturbations of it.

use std::sync::Arc;

use proptest::prelude::*;

use dagger_fem::fincat::{validate_category, CategoryDescription, FinDaggerCategory, Mor};
use dagger_fem::fixtures;
use dagger_fem::functor::{hom_category, FunctorCategory};
use dagger_fem::kleisli::build_kleisli;
use dagger_fem::lax::{lax_hom, modification_dagger, monad_to_lax, validate_lax_functor, LaxFunctorDescription};
use dagger_fem::monad::{build_fem_category, enumerate_monads, monad_from_adjunction, FrobeniusMonad};
use dagger_fem::oracle::{self, naive_lax_check, naive_validate, OracleConfig};
use dagger_fem::search::Budget;
use dagger_fem::two_cat::fixture::{locally_discrete, sigma_z2};
use dagger_fem::two_cat::{build_fem_completion, build_fk_completion, enumerate_monads2, FinDagger2Category};

fn corpus() -> Vec<Arc<FinDaggerCategory>> {
    fixtures::all_categories().into_iter().map(|(_, c)| Arc::new(c)).collect()
}

fn small() -> Vec<Arc<FinDaggerCategory>> {
    ["ONE", "Z2", "P2", "UNIT_ISO"].iter().map(|n| Arc::new(fixtures::by_name(n).unwrap())).collect()
}

fn frobenius_monads() -> Vec<FrobeniusMonad> {
    corpus().iter().flat_map(|c| enumerate_monads(c, &mut Budget::default()).unwrap()).filter(|m| m.frobenius).collect()
}

#[derive(Clone, Debug)]
enum Edit {
    Composite(usize, usize),
    Dagger(usize, usize),
    DropComposite(usize),
}

fn edit() -> impl Strategy<Value = Edit> {
    prop_oneof![
        (any::<usize>(), any::<usize>()).prop_map(|(i, j)| Edit::Composite(i, j)),
        (any::<usize>(), any::<usize>()).prop_map(|(i, j)| Edit::Dagger(i, j)),
        any::<usize>().prop_map(Edit::DropComposite),
    ]
}

fn perturb(mut d: CategoryDescription, edits: &[Edit]) -> CategoryDescription {
    let ids: Vec<String> = d.morphisms.iter().map(|m| m.id.clone()).collect();
    for e in edits {
        match *e {
            Edit::Composite(i, j) if !d.composition.is_empty() => {
                let n = d.composition.len();
                d.composition[i % n][2] = ids[j % ids.len()].clone();
            }
            Edit::Dagger(i, j) => {
                d.dagger.insert(ids[i % ids.len()].clone(), ids[j % ids.len()].clone());
            }
            Edit::DropComposite(i) if !d.composition.is_empty() => {
                let n = d.composition.len();
                d.composition.remove(i % n);
            }
            _ => {}
        }
    }
    d
}

fn perturb_lax(mut d: LaxFunctorDescription, picks: &[(usize, usize)]) -> LaxFunctorDescription {
    let pool: Vec<String> = d
        .gamma
        .iter()
        .map(|g| g[5].clone())
        .chain(d.delta.values().cloned())
        .chain(d.cells2.iter().map(|c| c[3].clone()))
        .collect();
    for &(i, j) in picks {
        let n = d.gamma.len() + d.delta.len();
        let k = i % n;
        let v = pool[j % pool.len()].clone();
        if k < d.gamma.len() {
            d.gamma[k][5] = v;
        } else {
            let key = d.delta.keys().nth(k - d.gamma.len()).unwrap().clone();
            d.delta.insert(key, v);
        }
    }
    d
}

fn lax_seeds() -> Vec<LaxFunctorDescription> {
    let mut out = Vec::new();
    for k in [sigma_z2(), locally_discrete(&fixtures::z2())] {
        let k = Arc::new(k);
        for m in enumerate_monads2(&k) {
            out.push(monad_to_lax(&k, &m).unwrap().to_description());
        }
    }
    out
}

fn nth(c: &FinDaggerCategory, i: usize) -> Mor {
    c.morphisms().nth(i % c.num_morphisms()).unwrap()
}

/// A 2-cell `α` of a hom category and a `β` composable after it.
fn composable(fc: &FunctorCategory, i: usize, j: usize) -> (Mor, Mor) {
    let c = &fc.category;
    let alpha = nth(c, i);
    let next: Vec<Mor> = c.morphisms().filter(|&m| c.src(m) == c.tgt(alpha)).collect();
    (alpha, next[j % next.len()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn validation_agrees_with_naive_oracle(which in 0usize..5, edits in prop::collection::vec(edit(), 0..4)) {
        let d = perturb(corpus()[which].to_description(), &edits);
        prop_assert_eq!(validate_category(&d).is_ok(), naive_validate(&d));
    }

    #[test]
    fn opposite_is_an_involution(which in 0usize..5, edits in prop::collection::vec(edit(), 0..2)) {
        let d = perturb(corpus()[which].to_description(), &edits);
        if let Ok(c) = validate_category(&d) {
            let op = c.opposite();
            prop_assert!(validate_category(&op.to_description()).is_ok());
            prop_assert_eq!(op.opposite().to_description(), c.to_description());
        }
    }

    #[test]
    fn unitaries_form_a_subgroupoid(which in 0usize..5, i: usize, j: usize) {
        let c = &corpus()[which];
        let (f, g) = (nth(c, i), nth(c, j));
        for x in c.objects() {
            prop_assert!(c.is_unitary(c.identity(x)));
        }
        if c.is_unitary(f) {
            prop_assert!(c.is_unitary(c.dagger(f)));
            if c.is_unitary(g) {
                if let Some(gf) = c.try_compose(g, f) {
                    prop_assert!(c.is_unitary(gf));
                }
            }
        }
    }

    #[test]
    fn interchange_in_hom_categories(a in 0usize..4, b in 0usize..4, c in 0usize..4, i: [usize; 4]) {
        let cats = small();
        let (inner, outer) = (hom_category(&cats[a], &cats[b]), hom_category(&cats[b], &cats[c]));
        let (gamma, delta) = composable(&inner, i[0], i[1]);
        let (alpha, beta) = composable(&outer, i[2], i[3]);
        let (gamma, delta) = (inner.nat(gamma), inner.nat(delta));
        let (alpha, beta) = (outer.nat(alpha), outer.nat(beta));
        let lhs = beta.vcomp(alpha).unwrap().hcomp(&delta.vcomp(gamma).unwrap()).unwrap();
        let rhs = beta.hcomp(delta).unwrap().vcomp(&alpha.hcomp(gamma).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn nat_dagger_is_involutive_and_contravariant(a in 0usize..4, b in 0usize..4, i: usize, j: usize) {
        let cats = small();
        let fc = hom_category(&cats[a], &cats[b]);
        let (alpha, beta) = composable(&fc, i, j);
        let (alpha, beta) = (fc.nat(alpha), fc.nat(beta));
        prop_assert_eq!(&alpha.dagger().dagger(), alpha);
        prop_assert_eq!(beta.vcomp(alpha).unwrap().dagger(), alpha.dagger().vcomp(&beta.dagger()).unwrap());
    }

    #[test]
    fn kleisli_dagger_is_involutive_and_contravariant(m: prop::sample::Index, i: usize, j: usize) {
        let ms = frobenius_monads();
        let kl = build_kleisli(m.get(&ms)).unwrap();
        let c = &kl.kl_cat;
        let (f, g) = (nth(c, i), nth(c, j));
        prop_assert_eq!(c.dagger(c.dagger(f)), f);
        if let Some(gf) = c.try_compose(g, f) {
            prop_assert_eq!(c.dagger(gf), c.compose(c.dagger(f), c.dagger(g)));
        }
    }

    #[test]
    fn adjunctions_recover_their_monad(m: prop::sample::Index) {
        let ms = frobenius_monads();
        let m = m.get(&ms);
        let fem = build_fem_category(m).unwrap();
        prop_assert!(validate_category(&fem.fem_cat.to_description()).is_ok());
        prop_assert_eq!(&monad_from_adjunction(&fem.adj).unwrap(), m);
        prop_assert_eq!(&monad_from_adjunction(&build_kleisli(m).unwrap().adj).unwrap(), m);
    }

    #[test]
    fn lax_validation_agrees_with_naive_check(seed: prop::sample::Index, picks in prop::collection::vec(any::<(usize, usize)>(), 0..3)) {
        let seeds = lax_seeds();
        let d = perturb_lax(seed.get(&seeds).clone(), &picks);
        prop_assert_eq!(validate_lax_functor(&d).is_ok(), naive_lax_check(&d).is_ok());
    }
}

fn two_cells_involutive(k: &FinDagger2Category) -> bool {
    k.cells0().all(|a| k.cells0().all(|b| k.cells2(a, b).all(|x| k.dagger2(k.dagger2(x)) == x)))
}

#[test]
fn fem_completion_is_dual_fk_completion() {
    for k in [sigma_z2(), locally_discrete(&fixtures::z2()), locally_discrete(&fixtures::p2())] {
        let fem = build_fem_completion(&k).unwrap();
        let dual = build_fk_completion(&k.opposite()).unwrap().two.opposite();
        assert_eq!(dual.to_description(), fem.two.to_description());
        assert!(two_cells_involutive(&fem.two));
        assert!(oracle::fem_completion_agrees(&k).unwrap());
    }
}

#[test]
fn modification_dagger_is_involutive() {
    let k = Arc::new(sigma_z2());
    let mut seen = 0;
    for m in enumerate_monads2(&k) {
        let l = monad_to_lax(&k, &m).unwrap();
        let hom = lax_hom(&l, &l, &mut Budget::default()).unwrap();
        let c = &hom.category;
        for x in c.morphisms() {
            let (a, b) = (hom.nat(c.src(x)), hom.nat(c.tgt(x)));
            let d = modification_dagger(&l, &l, a, b, hom.modification(x)).unwrap();
            assert_eq!(hom.find_modification(c.tgt(x), c.src(x), &d), Some(c.dagger(x)));
            let back = modification_dagger(&l, &l, b, a, &d).unwrap();
            assert_eq!(&back, hom.modification(x));
            seen += 1;
        }
    }
    assert!(seen > 0);
}

#[test]
fn oracle_reports_ignore_parallelism() {
    for c in corpus() {
        let serial = OracleConfig { parallel: false, ..OracleConfig::default() };
        let a = oracle::enumerate_monads(&c, &serial).unwrap().to_json();
        let b = oracle::enumerate_monads(&c, &OracleConfig::default()).unwrap().to_json();
        assert_eq!(a, b);
    }
}
