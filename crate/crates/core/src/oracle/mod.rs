//! Independent brute-force enumerators used as ground truth. Everything
//! here works on [`NaiveCat`] tables and re-evaluates each law by direct
//! loops, sharing no law-evaluation code with the main modules.

mod golden;
mod naive;
mod two;

pub use golden::{golden_path, read_golden, write_golden, GoldenError};
pub use naive::{naive_validate, NaiveCat, NaiveFunctor};
pub use two::{fem_completion_agrees, naive_lax_check, FemDirect, NaiveTwo};

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::fincat::{FinDaggerCategory, Mor, Obj};
use crate::functor::DaggerFunctor;
use crate::monad::FrobeniusMonad;
use crate::search::{SearchSpaceTooLarge, DEFAULT_MAX_SEARCH};
use naive::components_label;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_search: u64,
    pub parallel: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_search: DEFAULT_MAX_SEARCH, parallel: true }
    }
}

/// Shared candidate counter; safe to tick from worker threads.
struct Meter {
    cap: u64,
    used: AtomicU64,
}

impl Meter {
    fn new(cfg: &OracleConfig) -> Self {
        Meter { cap: cfg.max_search, used: AtomicU64::new(0) }
    }

    fn tick(&self) -> Result<(), SearchSpaceTooLarge> {
        if self.used.fetch_add(1, Ordering::Relaxed) >= self.cap {
            Err(SearchSpaceTooLarge { cap: self.cap })
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportItem {
    pub id: String,
    pub flags: BTreeMap<String, bool>,
}

impl ReportItem {
    fn new(id: String, flags: &[(&str, bool)]) -> Self {
        ReportItem { id, flags: flags.iter().map(|&(k, v)| (k.to_string(), v)).collect() }
    }

    pub fn flag(&self, name: &str) -> Option<bool> {
        self.flags.get(name).copied()
    }
}

/// A complete, law-filtered listing in the order of its choice sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub search_space: String,
    pub count: usize,
    pub items: Vec<ReportItem>,
}

impl EnumerationReport {
    fn new(search_space: String, items: Vec<ReportItem>) -> Self {
        EnumerationReport { search_space, count: items.len(), items }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn flags_by_id(&self, name: &str) -> BTreeMap<String, Option<bool>> {
        self.items.iter().map(|i| (i.id.clone(), i.flag(name))).collect()
    }
}

fn map_in_order<T: Send + Sync, R: Send>(
    cfg: &OracleConfig,
    xs: &[T],
    f: impl Fn(&T) -> Result<Vec<R>, SearchSpaceTooLarge> + Sync + Send,
) -> Result<Vec<R>, SearchSpaceTooLarge> {
    let parts: Result<Vec<Vec<R>>, _> =
        if cfg.parallel { xs.par_iter().map(&f).collect() } else { xs.iter().map(&f).collect() };
    Ok(parts?.into_iter().flatten().collect())
}

/// Backtracking over functor assignments; with `bijective` only
/// isomorphisms are produced.
fn functor_search(
    a: &NaiveCat,
    b: &NaiveCat,
    bijective: bool,
    meter: &Meter,
) -> Result<Vec<NaiveFunctor>, SearchSpaceTooLarge> {
    if bijective && (a.n_obj() != b.n_obj() || a.n_mor() != b.n_mor()) {
        return Ok(Vec::new());
    }
    // Composition triples, keyed by their largest morphism index.
    let mut triples: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); a.n_mor()];
    for g in 0..a.n_mor() {
        for f in 0..a.n_mor() {
            if a.src[g] == a.tgt[f] {
                let gf = a.c(g, f);
                triples[g.max(f).max(gf)].push((g, f, gf));
            }
        }
    }
    let mut out = Vec::new();
    let mut objs = vec![0usize; a.n_obj()];
    object_maps(a, b, bijective, 0, &mut objs, meter, &mut |objs| {
        let mut mors = vec![usize::MAX; a.n_mor()];
        morphism_maps(a, b, bijective, &triples, objs, 0, &mut mors, meter, &mut out)
    })?;
    Ok(out)
}

fn object_maps(
    a: &NaiveCat,
    b: &NaiveCat,
    bijective: bool,
    i: usize,
    objs: &mut Vec<usize>,
    meter: &Meter,
    k: &mut dyn FnMut(&[usize]) -> Result<(), SearchSpaceTooLarge>,
) -> Result<(), SearchSpaceTooLarge> {
    if i == a.n_obj() {
        return k(objs);
    }
    for y in 0..b.n_obj() {
        meter.tick()?;
        if bijective && objs[..i].contains(&y) {
            continue;
        }
        objs[i] = y;
        object_maps(a, b, bijective, i + 1, objs, meter, k)?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn morphism_maps(
    a: &NaiveCat,
    b: &NaiveCat,
    bijective: bool,
    triples: &[Vec<(usize, usize, usize)>],
    objs: &[usize],
    f: usize,
    mors: &mut Vec<usize>,
    meter: &Meter,
    out: &mut Vec<NaiveFunctor>,
) -> Result<(), SearchSpaceTooLarge> {
    if f == a.n_mor() {
        out.push(NaiveFunctor { objects: objs.to_vec(), morphisms: mors.clone() });
        return Ok(());
    }
    for y in b.hom(objs[a.src[f]], objs[a.tgt[f]]) {
        meter.tick()?;
        if bijective && mors[..f].contains(&y) {
            continue;
        }
        mors[f] = y;
        let d = a.dagger[f];
        let ok = (a.ident[a.src[f]] != f || y == b.ident[objs[a.src[f]]])
            && (d > f || mors[d] == b.dagger[y])
            && triples[f].iter().all(|&(g, h, gh)| b.c(mors[g], mors[h]) == mors[gh]);
        if ok {
            morphism_maps(a, b, bijective, triples, objs, f + 1, mors, meter, out)?;
        }
    }
    mors[f] = usize::MAX;
    Ok(())
}

/// All natural transformations `F ⇒ G` between functors `c → d`, as
/// component lists in object order.
fn nat_search(
    c: &NaiveCat,
    d: &NaiveCat,
    f: &NaiveFunctor,
    g: &NaiveFunctor,
    meter: &Meter,
) -> Result<Vec<Vec<usize>>, SearchSpaceTooLarge> {
    let mut out = Vec::new();
    let mut comps = vec![0usize; c.n_obj()];
    #[allow(clippy::too_many_arguments)]
    fn go(
        c: &NaiveCat,
        d: &NaiveCat,
        f: &NaiveFunctor,
        g: &NaiveFunctor,
        x: usize,
        comps: &mut Vec<usize>,
        meter: &Meter,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<(), SearchSpaceTooLarge> {
        if x == c.n_obj() {
            out.push(comps.clone());
            return Ok(());
        }
        for m in d.hom(f.objects[x], g.objects[x]) {
            meter.tick()?;
            comps[x] = m;
            let natural = (0..c.n_mor())
                .filter(|&h| c.src[h].max(c.tgt[h]) == x)
                .all(|h| d.c(g.morphisms[h], comps[c.src[h]]) == d.c(comps[c.tgt[h]], f.morphisms[h]));
            if natural {
                go(c, d, f, g, x + 1, comps, meter, out)?;
            }
        }
        Ok(())
    }
    go(c, d, f, g, 0, &mut comps, meter, &mut out)?;
    Ok(out)
}

fn identity_functor(c: &NaiveCat) -> NaiveFunctor {
    NaiveFunctor { objects: (0..c.n_obj()).collect(), morphisms: (0..c.n_mor()).collect() }
}

pub fn enumerate_dagger_functors(
    a: &FinDaggerCategory,
    b: &FinDaggerCategory,
    cfg: &OracleConfig,
) -> Result<EnumerationReport, SearchSpaceTooLarge> {
    let (na, nb) = (NaiveCat::of(a), NaiveCat::of(b));
    let fs = functor_search(&na, &nb, false, &Meter::new(cfg))?;
    let items = fs.iter().map(|f| ReportItem::new(f.label(&na, &nb), &[])).collect();
    Ok(EnumerationReport::new(
        format!(
            "dagger functors {} objects/{} morphisms into {} objects/{} morphisms",
            na.n_obj(),
            na.n_mor(),
            nb.n_obj(),
            nb.n_mor()
        ),
        items,
    ))
}

pub fn enumerate_nats(
    f: &DaggerFunctor,
    g: &DaggerFunctor,
    cfg: &OracleConfig,
) -> Result<EnumerationReport, SearchSpaceTooLarge> {
    let (c, d) = (NaiveCat::of(f.source()), NaiveCat::of(f.target()));
    let (nf, ng) = (naive_functor(f, &c, &d), naive_functor(g, &c, &d));
    let nats = nat_search(&c, &d, &nf, &ng, &Meter::new(cfg))?;
    let items = nats.iter().map(|n| ReportItem::new(components_label(&c, n), &[])).collect();
    Ok(EnumerationReport::new(format!("natural transformations {} => {}", nf.label(&c, &d), ng.label(&c, &d)), items))
}

fn naive_functor(f: &DaggerFunctor, c: &NaiveCat, d: &NaiveCat) -> NaiveFunctor {
    let (a, b) = (f.source(), f.target());
    NaiveFunctor {
        objects: (0..c.n_obj())
            .map(|x| d.obj(b.obj_id(f.obj(a.find_object(&c.objects[x]).unwrap()))).unwrap())
            .collect(),
        morphisms: (0..c.n_mor())
            .map(|m| d.mor(b.mor_id(f.mor(a.find_morphism(&c.morphisms[m]).unwrap()))).unwrap())
            .collect(),
    }
}

/// A monad as plain index tables.
#[derive(Clone, Debug)]
pub struct NaiveMonad {
    pub t: NaiveFunctor,
    pub mu: Vec<usize>,
    pub eta: Vec<usize>,
}

impl NaiveMonad {
    pub fn of(m: &FrobeniusMonad, c: &NaiveCat) -> Self {
        let base = m.base();
        let comp = |get: &dyn Fn(Obj) -> Mor| {
            (0..c.n_obj()).map(|x| c.mor(base.mor_id(get(base.find_object(&c.objects[x]).unwrap()))).unwrap()).collect()
        };
        NaiveMonad { t: naive_functor(m.endofunctor(), c, c), mu: comp(&|x| m.mu(x)), eta: comp(&|x| m.eta(x)) }
    }

    pub fn label(&self, c: &NaiveCat) -> String {
        format!("T={} mu={} eta={}", self.t.label(c, c), components_label(c, &self.mu), components_label(c, &self.eta))
    }

    fn laws(&self, c: &NaiveCat) -> bool {
        (0..c.n_obj()).all(|x| {
            let tx = self.t.objects[x];
            let mu = self.mu[x];
            let one = c.ident[tx];
            c.c(mu, self.t.morphisms[mu]) == c.c(mu, self.mu[tx])
                && c.c(mu, self.t.morphisms[self.eta[x]]) == one
                && c.c(mu, self.eta[tx]) == one
        })
    }

    /// `T(μ_x)∘μ_{Tx}† = μ_{Tx}∘T(μ_x†)`, evaluated pointwise.
    pub fn frobenius(&self, c: &NaiveCat) -> bool {
        (0..c.n_obj()).all(|x| {
            let tx = self.t.objects[x];
            let lhs = c.c(self.t.morphisms[self.mu[x]], c.dagger[self.mu[tx]]);
            let rhs = c.c(self.mu[tx], self.t.morphisms[c.dagger[self.mu[x]]]);
            lhs == rhs
        })
    }
}

fn naive_monads(c: &NaiveCat, cfg: &OracleConfig) -> Result<Vec<NaiveMonad>, SearchSpaceTooLarge> {
    let meter = Meter::new(cfg);
    let ts = functor_search(c, c, false, &meter)?;
    let id = identity_functor(c);
    map_in_order(cfg, &ts, |t| {
        let tt = t.then(t);
        let mus = nat_search(c, c, &tt, t, &meter)?;
        let etas = nat_search(c, c, &id, t, &meter)?;
        let mut out = Vec::new();
        for mu in &mus {
            for eta in &etas {
                meter.tick()?;
                let m = NaiveMonad { t: t.clone(), mu: mu.clone(), eta: eta.clone() };
                if m.laws(c) {
                    out.push(m);
                }
            }
        }
        Ok(out)
    })
}

/// Every monad on `c`, each flagged `frobenius` by pointwise evaluation.
pub fn enumerate_monads(c: &FinDaggerCategory, cfg: &OracleConfig) -> Result<EnumerationReport, SearchSpaceTooLarge> {
    let nc = NaiveCat::of(c);
    let items = naive_monads(&nc, cfg)?
        .iter()
        .map(|m| ReportItem::new(m.label(&nc), &[("frobenius", m.frobenius(&nc))]))
        .collect();
    Ok(EnumerationReport::new(
        format!("monads on a category with {} objects and {} morphisms", nc.n_obj(), nc.n_mor()),
        items,
    ))
}

/// EM algebras `(x, δ)`, flagged `fem` and `dagger_hom` (whether `δ†` is an
/// algebra homomorphism `(x, δ) → (Tx, μ_x)`).
pub fn enumerate_algebras(m: &FrobeniusMonad) -> EnumerationReport {
    let c = NaiveCat::of(m.base());
    let nm = NaiveMonad::of(m, &c);
    let t = &nm.t;
    let mut items = Vec::new();
    for x in 0..c.n_obj() {
        for delta in c.hom(t.objects[x], x) {
            let em = c.c(delta, nm.eta[x]) == c.ident[x] && c.c(delta, t.morphisms[delta]) == c.c(delta, nm.mu[x]);
            if !em {
                continue;
            }
            let dd = c.dagger[delta];
            let fem = c.c(nm.mu[x], t.morphisms[dd]) == c.c(t.morphisms[delta], c.dagger[nm.mu[x]]);
            let dagger_hom = c.c(dd, delta) == c.c(nm.mu[x], t.morphisms[dd]);
            items.push(ReportItem::new(
                format!("{}:{}", c.objects[x], c.morphisms[delta]),
                &[("em", true), ("fem", fem), ("dagger_hom", dagger_hom)],
            ));
        }
    }
    EnumerationReport::new(format!("algebras of {}", nm.label(&c)), items)
}

/// Monad morphisms `(F, σ): (C, S) → (D, T)` with `σ: T F ⇒ F S`, filtered by
/// the multiplication and unit laws and flagged `dagger` for the dagger
/// square `σ†∘F(μ^S)∘σ_S = μ^T_F∘T(σ†)`.
pub fn enumerate_monad_morphisms(
    s: &FrobeniusMonad,
    t: &FrobeniusMonad,
    cfg: &OracleConfig,
) -> Result<EnumerationReport, SearchSpaceTooLarge> {
    let (c, d) = (NaiveCat::of(s.base()), NaiveCat::of(t.base()));
    let (ns, nt) = (NaiveMonad::of(s, &c), NaiveMonad::of(t, &d));
    let meter = Meter::new(cfg);
    let mut items = Vec::new();
    for f in functor_search(&c, &d, false, &meter)? {
        let tf = f.then(&nt.t);
        let fs = ns.t.then(&f);
        for sigma in nat_search(&c, &d, &tf, &fs, &meter)? {
            let law = |x: usize| {
                let (fx, sx) = (f.objects[x], ns.t.objects[x]);
                let mult =
                    d.c(sigma[x], nt.mu[fx]) == d.c(f.morphisms[ns.mu[x]], d.c(sigma[sx], nt.t.morphisms[sigma[x]]));
                let unit = d.c(sigma[x], nt.eta[fx]) == f.morphisms[ns.eta[x]];
                let sd = d.dagger[sigma[x]];
                let dag = d.c(sd, d.c(f.morphisms[ns.mu[x]], sigma[sx])) == d.c(nt.mu[fx], nt.t.morphisms[sd]);
                (mult && unit, dag)
            };
            let laws: Vec<(bool, bool)> = (0..c.n_obj()).map(law).collect();
            if laws.iter().all(|l| l.0) {
                items.push(ReportItem::new(
                    format!("F={} sigma={}", f.label(&c, &d), components_label(&c, &sigma)),
                    &[("dagger", laws.iter().all(|l| l.1))],
                ));
            }
        }
    }
    Ok(EnumerationReport::new(format!("monad morphisms {} -> {}", ns.label(&c), nt.label(&d)), items))
}

/// A strict isomorphism of dagger categories `c ≅ d` and its inverse, or
/// `None` after exhausting every bijection.
pub fn iso_search_dagger(
    c: &Arc<FinDaggerCategory>,
    d: &Arc<FinDaggerCategory>,
    cfg: &OracleConfig,
) -> Result<Option<(DaggerFunctor, DaggerFunctor)>, SearchSpaceTooLarge> {
    let (nc, nd) = (NaiveCat::of(c), NaiveCat::of(d));
    let Some(f) = functor_search(&nc, &nd, true, &Meter::new(cfg))?.into_iter().next() else {
        return Ok(None);
    };
    let mut inv_o = vec![0; nd.n_obj()];
    let mut inv_m = vec![0; nd.n_mor()];
    f.objects.iter().enumerate().for_each(|(x, &y)| inv_o[y] = x);
    f.morphisms.iter().enumerate().for_each(|(x, &y)| inv_m[y] = x);
    let build = |a: &Arc<FinDaggerCategory>,
                 b: &Arc<FinDaggerCategory>,
                 na: &NaiveCat,
                 nb: &NaiveCat,
                 om: &[usize],
                 mm: &[usize]| {
        let objs = a.objects().map(|x| b.find_object(&nb.objects[om[na.obj(a.obj_id(x)).unwrap()]]).unwrap()).collect();
        let mors =
            a.morphisms().map(|x| b.find_morphism(&nb.morphisms[mm[na.mor(a.mor_id(x)).unwrap()]]).unwrap()).collect();
        DaggerFunctor::new(a.clone(), b.clone(), objs, mors).expect("a bijective dagger functor")
    };
    Ok(Some((build(c, d, &nc, &nd, &f.objects, &f.morphisms), build(d, c, &nd, &nc, &inv_o, &inv_m))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::two_cat::fixture::ts_monad;

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    #[test]
    fn monad_counts() {
        assert_eq!(enumerate_monads(&fixtures::one(), &cfg()).unwrap().count, 1);
        let z2 = enumerate_monads(&fixtures::z2(), &cfg()).unwrap();
        assert_eq!(z2.count, 2);
        assert!(z2.items.iter().all(|i| i.flag("frobenius") == Some(true)));
    }

    #[test]
    fn functor_and_algebra_counts() {
        let z2 = fixtures::z2();
        assert_eq!(enumerate_dagger_functors(&z2, &z2, &cfg()).unwrap().count, 2);
        let algs = enumerate_algebras(&ts_monad());
        assert_eq!(algs.count, 1);
        assert_eq!(algs.items[0].id, "*:s");
        assert_eq!(algs.items[0].flag("fem"), Some(true));
    }

    #[test]
    fn identity_monad_morphisms_are_endofunctors() {
        let z2 = Arc::new(fixtures::z2());
        let id = FrobeniusMonad::identity(&z2);
        let r = enumerate_monad_morphisms(&id, &id, &cfg()).unwrap();
        assert_eq!(r.count, 2);
        assert!(r.items.iter().all(|i| i.id.ends_with("sigma={*:1}") && i.flag("dagger") == Some(true)));
    }

    #[test]
    fn iso_search() {
        let z2 = Arc::new(fixtures::z2());
        let p2 = Arc::new(fixtures::p2());
        let (f, g) = iso_search_dagger(&z2, &z2, &cfg()).unwrap().unwrap();
        assert_eq!(f, DaggerFunctor::identity(&z2));
        assert_eq!(g, f);
        assert!(iso_search_dagger(&z2, &p2, &cfg()).unwrap().is_none());
        let fem = crate::monad::build_fem_category(&ts_monad()).unwrap();
        assert!(iso_search_dagger(&fem.fem_cat, &z2, &cfg()).unwrap().is_some());
        let ui = Arc::new(fixtures::unit_iso());
        assert!(iso_search_dagger(&Arc::new(ui.opposite()), &ui, &cfg()).unwrap().is_some());
    }

    #[test]
    fn cap_is_honoured() {
        let small = OracleConfig { max_search: 10, parallel: false };
        assert!(enumerate_monads(&fixtures::rel2(), &small).is_err());
    }

    #[test]
    fn parallel_and_serial_agree() {
        let c = fixtures::p2();
        let serial = OracleConfig { parallel: false, ..cfg() };
        assert_eq!(enumerate_monads(&c, &cfg()).unwrap().to_json(), enumerate_monads(&c, &serial).unwrap().to_json());
    }
}
