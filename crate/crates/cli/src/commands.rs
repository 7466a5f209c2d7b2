use std::collections::HashMap;
use std::path::Path;
use std::sync::Arc;

use serde_json::{json, Value};
use thiserror::Error;

use dagger_fem::fincat::FinDaggerCategory;
use dagger_fem::fixtures;
use dagger_fem::functor::enumerate_dagger_functors;
use dagger_fem::kleisli::{build_kleisli, check_fem_representability, check_fk_universal};
use dagger_fem::lax::{
    check_dagger_lax_limit, lax_cone, monad_to_lax, validate_lax_functor, validate_lax_nat,
    DaggerLaxFunctor, LaxError,
};
use dagger_fem::monad::{
    build_fem_category, comparison_functor, enumerate_algebras, enumerate_monads, is_em_algebra,
    is_fem_algebra, is_monadic, monad_from_adjunction, Adjunction, FEMCategoryResult,
    FrobeniusMonad, MonadError,
};
use dagger_fem::oracle::{self, naive_lax_check, write_golden, OracleConfig};
use dagger_fem::search::Budget;
use dagger_fem::two_cat::{
    build_dfmnd, build_fem_completion, build_fk_completion, eta_commutation_check,
    fem_object_check, fem_pairs_correspondence, universal2_check, Cell1, Cell2, Completion,
    FinDagger2Category, TwoCatError,
};
use dagger_fem::verdict::Witness;

use crate::input::{InputError, Loader, Problem};
use crate::report::Outcome;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("{0}")]
    Library(String),
}

fn lib(e: impl std::fmt::Display) -> CliError {
    CliError::Library(e.to_string())
}

pub type Res = Result<Outcome, CliError>;

pub struct Ctx {
    pub loader: Loader,
    pub max_search: u64,
}

impl Ctx {
    fn budget(&self) -> Budget {
        Budget::new(self.max_search)
    }

    fn oracle(&self) -> OracleConfig {
        OracleConfig {
            max_search: self.max_search,
            ..OracleConfig::default()
        }
    }
}

fn cat_summary(c: &FinDaggerCategory) -> Value {
    json!({ "objects": c.num_objects(), "morphisms": c.num_morphisms() })
}

pub fn validate_category(cx: &mut Ctx, arg: &str) -> Res {
    let c = cx.loader.category(arg)?;
    Ok(Outcome::pass(cat_summary(&c)))
}

pub fn validate_functor(cx: &mut Ctx, arg: &str) -> Res {
    let f = cx.loader.functor(arg)?;
    Ok(Outcome::pass(json!({ "functor": f.label() })))
}

pub fn validate_monad(cx: &mut Ctx, arg: &str) -> Res {
    let m = cx.loader.monad(arg)?;
    Ok(Outcome::pass(
        json!({ "monad": m.label(), "frobenius": m.frobenius }),
    ))
}

fn two_summary(k: &FinDagger2Category) -> Value {
    let (mut ones, mut twos) = (0, 0);
    for a in k.cells0() {
        for b in k.cells0() {
            ones += k.cells1(a, b).count();
            twos += k.cells2(a, b).count();
        }
    }
    json!({ "cells0": k.num_cells0(), "cells1": ones, "cells2": twos })
}

pub fn validate_two(cx: &mut Ctx, arg: &str) -> Res {
    let k = cx.loader.two_category(arg)?;
    Ok(Outcome::pass(two_summary(&k)))
}

pub fn validate_lax(cx: &mut Ctx, arg: &str) -> Res {
    let desc = cx.loader.lax_functor(arg)?;
    let main = validate_lax_functor(&desc);
    let naive = naive_lax_check(&desc);
    if main.is_ok() != naive.is_ok() {
        let w = Witness::new(
            "oracle agreement",
            [format!("{main:?}"), format!("{naive:?}")],
        );
        return Ok(Outcome {
            witnesses: vec![w],
            result: Value::Null,
        });
    }
    let l = main.map_err(|e| InputError::Invalid {
        what: "lax functor",
        reason: e.to_string(),
    })?;
    Ok(Outcome::pass(two_summary(l.source())))
}

fn agreement(main: Vec<String>, report: &oracle::EnumerationReport) -> Option<Witness> {
    let mut a = main;
    let mut b: Vec<String> = report.items.iter().map(|i| i.id.clone()).collect();
    a.sort();
    b.sort();
    let missing = a
        .iter()
        .find(|x| !b.contains(x))
        .or_else(|| b.iter().find(|x| !a.contains(x)));
    missing.map(|x| Witness::new("oracle agreement", [x.clone()]))
}

fn report_outcome(report: oracle::EnumerationReport, witness: Option<Witness>) -> Outcome {
    Outcome {
        witnesses: witness.into_iter().collect(),
        result: serde_json::to_value(report).expect("report"),
    }
}

pub fn enumerate_monads_cmd(cx: &mut Ctx, arg: &str) -> Res {
    let c = cx.loader.category(arg)?;
    let report = oracle::enumerate_monads(&c, &cx.oracle()).map_err(lib)?;
    let main = enumerate_monads(&c, &mut cx.budget()).map_err(lib)?;
    let flags = report.flags_by_id("frobenius");
    let mismatch = main
        .iter()
        .find(|m| flags.get(&m.label()) != Some(&Some(m.frobenius)))
        .map(|m| Witness::new("frobenius flag", [m.label()]));
    let w = agreement(main.iter().map(FrobeniusMonad::label).collect(), &report).or(mismatch);
    Ok(report_outcome(report, w))
}

pub fn enumerate_functors_cmd(cx: &mut Ctx, a: &str, b: Option<&str>) -> Res {
    let ca = cx.loader.category(a)?;
    let cb = match b {
        Some(b) => cx.loader.category(b)?,
        None => ca.clone(),
    };
    let report = oracle::enumerate_dagger_functors(&ca, &cb, &cx.oracle()).map_err(lib)?;
    let main = enumerate_dagger_functors(&ca, &cb, &mut cx.budget()).map_err(lib)?;
    let w = agreement(main.iter().map(|f| f.label()).collect(), &report);
    Ok(report_outcome(report, w))
}

pub fn enumerate_algebras_cmd(cx: &mut Ctx, arg: &str) -> Res {
    let m = cx.loader.monad(arg)?;
    let report = oracle::enumerate_algebras(&m);
    let c = m.base();
    let main: Vec<String> = enumerate_algebras(&m)
        .iter()
        .map(|a| format!("{}:{}", c.obj_id(a.carrier), c.mor_id(a.structure)))
        .collect();
    let w = agreement(main, &report);
    Ok(report_outcome(report, w))
}

fn fem_value(fem: &FEMCategoryResult) -> Value {
    let c = fem.monad.base();
    let algebras: Vec<String> = fem
        .algebras
        .iter()
        .map(|&(d, s)| format!("{}:{}", c.obj_id(d), c.mor_id(s)))
        .collect();
    json!({ "monad": fem.monad.label(), "algebras": algebras, "category": fem.fem_cat.to_description() })
}

pub fn build_fem(cx: &mut Ctx, arg: &str) -> Res {
    let m = cx.loader.monad(arg)?;
    let fem = build_fem_category(&m).map_err(lib)?;
    Ok(Outcome::pass(fem_value(&fem)))
}

pub fn build_kleisli_cmd(cx: &mut Ctx, arg: &str) -> Res {
    let m = cx.loader.monad(arg)?;
    let kl = build_kleisli(&m).map_err(lib)?;
    Ok(Outcome::pass(
        json!({ "monad": m.label(), "category": kl.kl_cat.to_description() }),
    ))
}

pub fn build_completion_cmd(
    cx: &mut Ctx,
    arg: &str,
    build: fn(&FinDagger2Category) -> Result<Completion, TwoCatError>,
) -> Res {
    let k = cx.loader.two_category(arg)?;
    let c = build(&k).map_err(lib)?;
    let monads: Vec<String> = c.monads().iter().map(|m| m.label(&k)).collect();
    Ok(Outcome::pass(
        json!({ "monads": monads, "two_category": c.two.to_description() }),
    ))
}

pub fn completion_builder(
    kind: &str,
) -> fn(&FinDagger2Category) -> Result<Completion, TwoCatError> {
    match kind {
        "dfmnd" => build_dfmnd,
        "fk" => build_fk_completion,
        _ => build_fem_completion,
    }
}

pub fn check_frobenius_cmd(cx: &mut Ctx, arg: &str) -> Res {
    let m = cx.loader.monad(arg)?;
    let c = m.base();
    let failing = c.objects().find(|&d| {
        let td = m.tobj(d);
        c.compose(m.tmor(m.mu(d)), c.dagger(m.mu(td)))
            != c.compose(m.mu(td), m.tmor(c.dagger(m.mu(d))))
    });
    let witness = || {
        let d = failing.expect("a failing object");
        Witness::new(
            "Frobenius law",
            [c.obj_id(d).to_string(), c.mor_id(m.mu(d)).to_string()],
        )
    };
    Ok(Outcome::check(
        m.frobenius,
        witness,
        json!({ "monad": m.label(), "frobenius": m.frobenius }),
    ))
}

pub fn check_fem_algebra(cx: &mut Ctx, arg: &str, object: &str, structure: &str) -> Res {
    let m = cx.loader.monad(arg)?;
    let c = m.base();
    let d = c.find_object(object).ok_or_else(|| InputError::Dangling {
        kind: "object",
        id: object.into(),
    })?;
    let delta = c
        .find_morphism(structure)
        .ok_or_else(|| InputError::Dangling {
            kind: "morphism",
            id: structure.into(),
        })?;
    let invalid = |e: MonadError| InputError::Invalid {
        what: "structure map",
        reason: e.to_string(),
    };
    let em = is_em_algebra(&m, d, delta).map_err(invalid)?;
    let fem = is_fem_algebra(&m, d, delta).map_err(invalid)?;
    let law = if em {
        "Frobenius law for algebras"
    } else {
        "Eilenberg-Moore laws"
    };
    Ok(Outcome::check(
        fem,
        || Witness::new(law, [object, structure]),
        json!({ "em": em, "fem": fem }),
    ))
}

pub fn check_th1(cx: &mut Ctx, category: &str, monad: &str) -> Res {
    let a = cx.loader.category(category)?;
    let m = cx.loader.monad(monad)?;
    let v = check_fem_representability(&a, &m).map_err(lib)?;
    Ok(Outcome::from_verdict(v, json!({ "monad": m.label() })))
}

pub fn check_fk_universal_cmd(cx: &mut Ctx, category: &str, monad: &str) -> Res {
    let x = cx.loader.category(category)?;
    let m = cx.loader.monad(monad)?;
    let v = check_fk_universal(&m, &x).map_err(lib)?;
    Ok(Outcome::from_verdict(v, json!({ "monad": m.label() })))
}

fn fem_of(adj: &Adjunction) -> Result<FEMCategoryResult, CliError> {
    let m = monad_from_adjunction(adj).map_err(lib)?;
    build_fem_category(&m).map_err(lib)
}

pub fn check_comparison(cx: &mut Ctx, arg: &str) -> Res {
    let adj = cx.loader.adjunction(arg)?;
    let fem = fem_of(&adj)?;
    match comparison_functor(&adj, &fem, &mut cx.budget()) {
        Ok(n) => Ok(Outcome::pass(json!({ "comparison": n.label() }))),
        Err(e @ (MonadError::NoComparison { .. } | MonadError::NonUnique { .. })) => Ok(Outcome {
            witnesses: vec![Witness::new("unique comparison functor", [e.to_string()])],
            result: Value::Null,
        }),
        Err(e) => Err(lib(e)),
    }
}

pub fn check_monadic(cx: &mut Ctx, arg: &str) -> Res {
    let adj = cx.loader.adjunction(arg)?;
    let fem = fem_of(&adj)?;
    let ok = is_monadic(&adj, &fem, &mut cx.budget()).map_err(lib)?;
    let label = adj.right.label();
    Ok(Outcome::check(
        ok,
        || Witness::new("monadicity", [label]),
        json!({ "monadic": ok }),
    ))
}

pub fn check_fem_object(cx: &mut Ctx, arg: &str) -> Res {
    let p = cx.loader.problem(arg)?;
    let m = p.monad()?;
    let w = p.witness(&m)?;
    Ok(Outcome::from_verdict(
        fem_object_check(&p.k, &m, &w),
        json!({ "monad": m.label(&p.k) }),
    ))
}

fn two_cat_failure(check: &str, e: TwoCatError) -> Res {
    match e {
        TwoCatError::NoComparison
        | TwoCatError::NonUnique { .. }
        | TwoCatError::EtaCommutationRequired { .. }
        | TwoCatError::MissingWitness { .. } => Ok(Outcome {
            witnesses: vec![Witness::new(check, [e.to_string()])],
            result: Value::Null,
        }),
        e => Err(lib(e)),
    }
}

pub fn check_universal2(cx: &mut Ctx, arg: &str) -> Res {
    let p = cx.loader.problem(arg)?;
    let m = p.monad()?;
    let w = p.witness(&m)?;
    let adj = p.adjunction(&m)?;
    match universal2_check(&p.k, &adj, &m, &w) {
        Ok(out) => {
            let n = p.k.cell1_id(out.comparison).to_string();
            Ok(Outcome::from_verdict(
                out.verdict,
                json!({ "comparison": n }),
            ))
        }
        Err(e) => two_cat_failure("unique comparison 1-cell", e),
    }
}

pub fn check_eta_commutation(cx: &mut Ctx, arg: &str) -> Res {
    let p = cx.loader.problem(arg)?;
    let m = p.monad()?;
    let ok = eta_commutation_check(&p.k, &m);
    let label = m.label(&p.k);
    Ok(Outcome::check(
        ok,
        || Witness::new("η commutation", [label]),
        json!({ "commutes": ok }),
    ))
}

pub fn check_pairs(cx: &mut Ctx, arg: &str) -> Res {
    let p = cx.loader.problem(arg)?;
    let mt = p.monad()?;
    let wt = p.witness(&mt)?;
    let second = p.doc.second.as_ref().ok_or(InputError::Missing("second"))?;
    let ms = p.monad_from(&second.monad)?;
    let ws = p.witness_from(&ms, &second.witness)?;
    match fem_pairs_correspondence(&p.k, &mt, &wt, &ms, &ws) {
        Ok(v) => Ok(Outcome::from_verdict(v, Value::Null)),
        Err(e) => two_cat_failure("FEM pairs correspondence", e),
    }
}

fn lax_input(e: LaxError) -> CliError {
    InputError::Invalid {
        what: "lax data",
        reason: e.to_string(),
    }
    .into()
}

fn explicit_cone(
    p: &Problem,
    l: &DaggerLaxFunctor,
) -> Result<(dagger_fem::two_cat::Cell0, dagger_fem::lax::DaggerLaxNat), CliError> {
    let limit = p.cell0(p.doc.limit.as_deref().ok_or(InputError::Missing("limit"))?)?;
    let cone = p.doc.cone.as_ref().ok_or(InputError::Missing("cone"))?;
    let (s, k) = (l.source(), l.target());
    let mut comps = Vec::new();
    for a in s.cells0() {
        let id = cone
            .components
            .get(s.cell0_id(a))
            .ok_or(InputError::Missing("cone component"))?;
        comps.push(p.cell1(limit, l.cell0(a), id)?);
    }
    let mut tau: HashMap<Cell1, Cell2> = HashMap::new();
    for [a, b, f, x] in &cone.tau {
        let dangling = |id: &str| InputError::Dangling {
            kind: "source cell",
            id: id.into(),
        };
        let (a, b) = (
            s.find_cell0(a).ok_or_else(|| dangling(a))?,
            s.find_cell0(b).ok_or_else(|| dangling(b))?,
        );
        let f = s.find_cell1(a, b, f).ok_or_else(|| dangling(f))?;
        tau.insert(f, p.cell2(limit, l.cell0(b), x)?);
    }
    for a in s.cells0() {
        for b in s.cells0() {
            if s.cells1(a, b).any(|f| !tau.contains_key(&f)) {
                return Err(InputError::Missing("τ component").into());
            }
        }
    }
    let delta = DaggerLaxFunctor::constant(s.clone(), k.clone(), limit);
    let nat = validate_lax_nat(&delta, l, comps, |f| tau[&f]).map_err(lax_input)?;
    Ok((limit, nat))
}

pub fn check_lax_limit(cx: &mut Ctx, arg: &str) -> Res {
    let p = cx.loader.problem(arg)?;
    let (l, limit, cone) = match &p.doc.lax_functor {
        Some(desc) => {
            let l = validate_lax_functor(desc).map_err(lax_input)?;
            let (limit, cone) = explicit_cone(&p, &l)?;
            (l, limit, cone)
        }
        None => {
            let m = p.monad()?;
            let w = p.witness(&m)?;
            let l = monad_to_lax(&p.k, &m).map_err(lax_input)?;
            let cone = lax_cone(&l, w.u, w.xi).map_err(lax_input)?;
            (l, w.e, cone)
        }
    };
    let v = check_dagger_lax_limit(&l, limit, &cone, &mut cx.budget()).map_err(lib)?;
    Ok(Outcome::from_verdict(
        v,
        json!({ "limit": l.target().cell0_id(limit) }),
    ))
}

pub fn regen_golden(cx: &mut Ctx, dir: &Path) -> Res {
    let mut written = Vec::new();
    for (name, c) in fixtures::all_categories() {
        let report = oracle::enumerate_monads(&Arc::new(c), &cx.oracle()).map_err(lib)?;
        let path = write_golden(dir, name, &report).map_err(lib)?;
        written.push(
            json!({ "fixture": name, "path": path.display().to_string(), "count": report.count }),
        );
    }
    Ok(Outcome::pass(json!({ "written": written })))
}
