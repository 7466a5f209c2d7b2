//! The ten acceptance criteria, each run at its stated time limit and
//! reported on its own line.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use dagger_fem::fincat::{validate_category, CategoryDescription, MorphismDecl};
use dagger_fem::fixtures;
use dagger_fem::kleisli::{build_kleisli, check_fem_representability, check_fk_universal};
use dagger_fem::lax::{check_dagger_lax_limit, lax_cone, monad_to_lax};
use dagger_fem::monad::{
    build_fem_category, check_frobenius, comparison_functor, enumerate_algebras, enumerate_monads, is_algebra_hom,
    monad_from_adjunction, FrobeniusMonad,
};
use dagger_fem::oracle::{self, naive_validate, read_golden, OracleConfig};
use dagger_fem::search::Budget;
use dagger_fem::two_cat::fixture::{locally_discrete, sigma_z2, standard_fragment, ts_monad};
use dagger_fem::two_cat::{
    build_dfmnd, build_fem_completion, build_fk_completion, fem_object_check, inclusion_fully_faithful,
    universal2_check, validate_2category, Completion, FinDagger2Category,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run(n: usize, name: &str, limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
    let elapsed = start.elapsed();
    let outcome = match (outcome, limit) {
        (Ok(_), Some(l)) if elapsed > l => Err(format!("took {elapsed:.2?}, limit {l:?}")),
        (o, _) => o,
    };
    let (tag, detail) = match &outcome {
        Ok(d) => ("PASS", d),
        Err(d) => ("FAIL", d),
    };
    println!("[{tag}] {n:>2}. {name} ({elapsed:.2?}): {detail}");
    outcome.is_ok()
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

fn corpus() -> Vec<(&'static str, Arc<dagger_fem::fincat::FinDaggerCategory>)> {
    fixtures::all_categories().into_iter().map(|(n, c)| (n, Arc::new(c))).collect()
}

fn random_table(rng: &mut StdRng) -> CategoryDescription {
    let n_obj = rng.gen_range(1..=3);
    let n_mor = rng.gen_range(n_obj..=8);
    let objects: Vec<String> = (0..n_obj).map(|i| format!("o{i}")).collect();
    let mut ends: Vec<(usize, usize)> = (0..n_obj).map(|i| (i, i)).collect();
    while ends.len() < n_mor {
        ends.push((rng.gen_range(0..n_obj), rng.gen_range(0..n_obj)));
    }
    let id = |i: usize| format!("m{i}");
    let mut desc = CategoryDescription { objects: objects.clone(), ..Default::default() };
    for (i, &(s, t)) in ends.iter().enumerate() {
        desc.morphisms.push(MorphismDecl { id: id(i), src: objects[s].clone(), tgt: objects[t].clone() });
    }
    let hom = |a: usize, b: usize| -> Vec<usize> { (0..n_mor).filter(|&i| ends[i] == (a, b)).collect() };
    for (o, name) in objects.iter().enumerate() {
        desc.identities.insert(name.clone(), id(o));
    }
    let sloppy = rng.gen_bool(0.1);
    for g in 0..n_mor {
        for f in 0..n_mor {
            if ends[g].0 != ends[f].1 {
                continue;
            }
            let options = hom(ends[f].0, ends[g].1);
            let gf = if g < n_obj && !sloppy {
                f
            } else if f < n_obj && !sloppy {
                g
            } else if options.is_empty() {
                continue;
            } else {
                options[rng.gen_range(0..options.len())]
            };
            if !(sloppy && rng.gen_bool(0.05)) {
                desc.composition.push([id(g), id(f), id(gf)]);
            }
        }
    }
    for (m, &(s, t)) in ends.iter().enumerate() {
        let options = hom(t, s);
        let d = match options.len() {
            _ if m < n_obj => m,
            0 => rng.gen_range(0..n_mor),
            k => options[rng.gen_range(0..k)],
        };
        desc.dagger.insert(id(m), id(d));
    }
    desc
}

/// Perturbs one entry of a valid table.
fn perturb(desc: &CategoryDescription, rng: &mut StdRng) -> CategoryDescription {
    let mut d = desc.clone();
    let ids: Vec<String> = d.morphisms.iter().map(|m| m.id.clone()).collect();
    let pick = ids[rng.gen_range(0..ids.len())].clone();
    match rng.gen_range(0..3) {
        0 if !d.composition.is_empty() => {
            let i = rng.gen_range(0..d.composition.len());
            d.composition[i][2] = pick;
        }
        1 => {
            let k = ids[rng.gen_range(0..ids.len())].clone();
            d.dagger.insert(k, pick);
        }
        _ => {
            if !d.composition.is_empty() {
                let i = rng.gen_range(0..d.composition.len());
                d.composition.remove(i);
            }
        }
    }
    d
}

fn validator_soundness() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let small: Vec<CategoryDescription> = fixtures::all_categories()
        .into_iter()
        .filter(|(_, c)| c.num_morphisms() <= 8)
        .map(|(_, c)| c.to_description())
        .collect();
    let mut valid = 0;
    for i in 0..1000 {
        let table = match i % 4 {
            0 => perturb(&small[rng.gen_range(0..small.len())], &mut rng),
            1 => small[rng.gen_range(0..small.len())].clone(),
            _ => random_table(&mut rng),
        };
        let main = validate_category(&table).is_ok();
        ensure(main == naive_validate(&table), || format!("disagreement on table {i}: {table:?}"))?;
        valid += main as usize;
    }
    Ok(format!("1000 tables agree ({valid} valid)"))
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../golden")
}

fn frobenius_agreement() -> Outcome {
    let cfg = OracleConfig::default();
    let (mut counts, mut goldens) = (Vec::new(), 0);
    for (name, c) in corpus() {
        let main = enumerate_monads(&c, &mut Budget::default()).map_err(|e| format!("{name}: {e}"))?;
        ensure(main.iter().all(|m| m.frobenius == check_frobenius(m)), || format!("{name}: stale flag"))?;
        let main_flags: BTreeMap<String, Option<bool>> = main.iter().map(|m| (m.label(), Some(m.frobenius))).collect();
        let report = oracle::enumerate_monads(&c, &cfg).map_err(|e| format!("{name}: {e}"))?;
        ensure(report.flags_by_id("frobenius") == main_flags, || format!("{name}: oracle disagrees"))?;
        if let Ok(golden) = read_golden(&golden_dir(), name) {
            ensure(golden == report, || format!("{name}: golden report drifted"))?;
            goldens += 1;
        }
        let frob = main.iter().filter(|m| m.frobenius).count();
        counts.push(format!("{name} {}/{frob}", main.len()));
    }
    Ok(format!("monads/Frobenius: {}; {goldens} golden file(s) match", counts.join(", ")))
}

fn frobenius_monads() -> Vec<FrobeniusMonad> {
    corpus()
        .iter()
        .flat_map(|(_, c)| enumerate_monads(c, &mut Budget::default()).unwrap())
        .filter(|m| m.frobenius)
        .collect()
}

fn fem_iff_dagger_hom() -> Outcome {
    let mut checked = 0;
    for m in frobenius_monads() {
        let c = m.base().clone();
        let report = oracle::enumerate_algebras(&m);
        let algebras = enumerate_algebras(&m);
        ensure(report.count == algebras.len(), || format!("algebra count differs for {}", m.label()))?;
        for (alg, item) in algebras.iter().zip(&report.items) {
            let (d, delta) = (alg.carrier, alg.structure);
            let dagger_hom = is_algebra_hom(&m, delta, m.mu(d), c.dagger(delta));
            let id = format!("{} / {}:{}", m.label(), c.obj_id(d), c.mor_id(delta));
            ensure(alg.fem == dagger_hom, || format!("exception at {id}"))?;
            ensure(item.flag("fem") == Some(alg.fem) && item.flag("dagger_hom") == Some(dagger_hom), || {
                format!("oracle disagrees at {id}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} algebras, zero exceptions"))
}

fn fem_representability() -> Outcome {
    let z2 = Arc::new(fixtures::z2());
    let one = Arc::new(fixtures::one());
    for m in [FrobeniusMonad::identity(&z2), ts_monad()] {
        for a in [&one, &z2] {
            let v = check_fem_representability(a, &m).map_err(|e| e.to_string())?;
            ensure(v.passed(), || format!("{} over {} objects: {v:?}", m.label(), a.num_objects()))?;
        }
    }
    Ok("4 instances".into())
}

fn kleisli_instances() -> Outcome {
    let monads = frobenius_monads();
    for m in &monads {
        let kl = build_kleisli(m).map_err(|e| format!("{}: {e}", m.label()))?;
        validate_category(&kl.kl_cat.to_description()).map_err(|e| format!("{}: {e}", m.label()))?;
        let c = &kl.kl_cat;
        ensure(c.morphisms().all(|f| c.dagger(c.dagger(f)) == f), || "dagger not involutive".into())?;
        for g in c.morphisms() {
            for f in c.morphisms() {
                if let Some(gf) = c.try_compose(g, f) {
                    ensure(c.dagger(gf) == c.compose(c.dagger(f), c.dagger(g)), || "dagger not contravariant".into())?;
                }
            }
        }
    }
    let z2 = Arc::new(fixtures::z2());
    let one = Arc::new(fixtures::one());
    let cases = [(ts_monad(), &z2), (FrobeniusMonad::identity(&z2), &z2), (FrobeniusMonad::identity(&one), &one)];
    for (m, x) in &cases {
        let v = check_fk_universal(m, x).map_err(|e| e.to_string())?;
        ensure(v.passed(), || format!("FK universality for {}: {v:?}", m.label()))?;
    }
    Ok(format!("{} Kleisli categories valid, 3 universality instances", monads.len()))
}

fn adjunction_closure() -> Outcome {
    let z2 = Arc::new(fixtures::z2());
    let id_adj = dagger_fem::monad::Adjunction::identity(&z2);
    let from_id = monad_from_adjunction(&id_adj).map_err(|e| e.to_string())?;
    ensure(check_frobenius(&from_id) && from_id == FrobeniusMonad::identity(&z2), || "identity adjunction".into())?;
    let monads: Vec<FrobeniusMonad> =
        enumerate_monads(&z2, &mut Budget::default()).unwrap().into_iter().filter(|m| m.frobenius).collect();
    for m in &monads {
        let fem = build_fem_category(m).map_err(|e| e.to_string())?;
        let kl = build_kleisli(m).map_err(|e| e.to_string())?;
        for (name, adj) in [("FEM", &fem.adj), ("Kleisli", &kl.adj)] {
            let back = monad_from_adjunction(adj).map_err(|e| format!("{name}: {e}"))?;
            ensure(check_frobenius(&back), || format!("{name} monad of {} not Frobenius", m.label()))?;
            ensure(back == *m, || format!("{name} round trip of {} differs", m.label()))?;
        }
    }
    Ok(format!("{} monads, 3 adjunctions each", monads.len()))
}

fn comparison_uniqueness() -> Outcome {
    let sf = standard_fragment(true);
    let fr = &sf.fragment;
    let k = &fr.two;
    let m = fr.monad_of(&sf.ts).ok_or("TS is not a 0-cell monad")?;
    let w = fr.witness_of(&sf.fem).ok_or("no FEM witness")?;
    let kl = build_kleisli(&sf.ts).map_err(|e| e.to_string())?;
    for (name, adj) in [("FEM", &sf.fem.adj), ("Kleisli", &kl.adj)] {
        let a2 = fr.adjunction_of(adj).ok_or_else(|| format!("{name} adjunction not in the fragment"))?;
        let out = universal2_check(k, &a2, &m, &w).map_err(|e| format!("{name}: {e}"))?;
        ensure(out.verdict.passed(), || format!("{name}: {:?}", out.verdict))?;
        let n = comparison_functor(adj, &sf.fem, &mut Budget::default()).map_err(|e| format!("{name}: {e}"))?;
        let n_cell = fr.cell1_of(&n).ok_or_else(|| format!("{name}: comparison functor not a 1-cell"))?;
        ensure(n_cell == out.comparison, || format!("{name}: comparison functor differs from the unique n"))?;
    }
    Ok("FEM and Kleisli adjunctions of TS: unique n, equal to the comparison functor".into())
}

fn check_completion(name: &str, k: &FinDagger2Category, c: &Completion) -> Result<(), String> {
    validate_2category(&c.two.to_description()).map_err(|e| format!("{name}: {e}"))?;
    let v = inclusion_fully_faithful(k, c);
    ensure(v.passed(), || format!("{name}: inclusion {v:?}"))
}

fn completions_validity() -> Outcome {
    let cases = [("locally discrete ONE", locally_discrete(&fixtures::one())), ("ΣZ2", sigma_z2())];
    for (name, k) in &cases {
        let dfmnd = build_dfmnd(k).map_err(|e| format!("DFMnd({name}): {e}"))?;
        let fk = build_fk_completion(k).map_err(|e| format!("FK({name}): {e}"))?;
        let fem = build_fem_completion(k).map_err(|e| format!("FEM({name}): {e}"))?;
        check_completion(&format!("DFMnd({name})"), k, &dfmnd)?;
        check_completion(&format!("FK({name})"), k, &fk)?;
        check_completion(&format!("FEM({name})"), k, &fem)?;
        let two = &fk.two;
        for a in two.cells0() {
            for b in two.cells0() {
                ensure(two.cells2(a, b).all(|x| two.dagger2(two.dagger2(x)) == x), || format!("FK({name}) dagger"))?;
            }
        }
        let composite = build_fk_completion(&k.opposite()).map_err(|e| e.to_string())?.two.opposite();
        ensure(composite.to_description() == fem.two.to_description(), || format!("FEM({name}) ≠ op FK op"))?;
        ensure(oracle::fem_completion_agrees(k).map_err(|e| e.to_string())?, || {
            format!("FEM({name}) differs from the direct construction")
        })?;
    }
    Ok("DFMnd, FK, FEM on 2 inputs".into())
}

fn lax_limit() -> Outcome {
    let sf = standard_fragment(false);
    let fr = &sf.fragment;
    let k = Arc::new(fr.two.clone());
    let m = fr.monad_of(&sf.ts).ok_or("TS is not a 0-cell monad")?;
    let w = fr.witness_of(&sf.fem).ok_or("no FEM witness")?;
    let l = monad_to_lax(&k, &m).map_err(|e| e.to_string())?;
    let pi = lax_cone(&l, w.u, w.xi).map_err(|e| e.to_string())?;
    let v = check_dagger_lax_limit(&l, w.e, &pi, &mut Budget::default()).map_err(|e| e.to_string())?;
    ensure(v.passed(), || format!("FEM(TS) is not a lax limit: {v:?}"))?;
    ensure(fem_object_check(&k, &m, &w).passed(), || "fem_object_check disagrees".into())?;

    let one = k.find_cell0("ONE").ok_or("no ONE")?;
    let mut negatives = 0;
    for u in k.cells1(one, m.d) {
        for xi in k.cells2_between(k.comp1(m.t, u), u) {
            if let Ok(cone) = lax_cone(&l, u, xi) {
                let v = check_dagger_lax_limit(&l, one, &cone, &mut Budget::default()).map_err(|e| e.to_string())?;
                ensure(v.witness().is_some(), || "ONE accepted as a lax limit".into())?;
                negatives += 1;
            }
        }
    }
    ensure(negatives > 0, || "no cone from ONE to test".into())?;
    Ok(format!("FEM(TS) is a lax limit; {negatives} cone(s) from ONE rejected with a witness"))
}

fn determinism() -> Outcome {
    let serial = OracleConfig { parallel: false, ..OracleConfig::default() };
    let parallel = OracleConfig { parallel: true, ..OracleConfig::default() };
    for (name, c) in corpus() {
        let a = oracle::enumerate_monads(&c, &serial).map_err(|e| e.to_string())?.to_json();
        let b = oracle::enumerate_monads(&c, &parallel).map_err(|e| e.to_string())?.to_json();
        let b2 = oracle::enumerate_monads(&c, &parallel).map_err(|e| e.to_string())?.to_json();
        ensure(a == b && b == b2, || format!("{name}: oracle report differs"))?;
        let labels = || -> Vec<String> {
            enumerate_monads(&c, &mut Budget::default()).unwrap().iter().map(|m| m.label()).collect()
        };
        ensure(labels() == labels(), || format!("{name}: monad enumeration differs"))?;
        let f = oracle::enumerate_dagger_functors(&c, &c, &serial).map_err(|e| e.to_string())?;
        let g = oracle::enumerate_dagger_functors(&c, &c, &parallel).map_err(|e| e.to_string())?;
        ensure(f == g, || format!("{name}: functor report differs"))?;
    }
    let ts = ts_monad();
    let fem = || serde_json::to_string(&build_fem_category(&ts).unwrap().fem_cat.to_description()).unwrap();
    ensure(fem() == fem(), || "FEM category differs".into())?;
    let algs = || oracle::enumerate_algebras(&ts).to_json();
    ensure(algs() == algs(), || "algebra report differs".into())?;
    let dfmnd = || serde_json::to_string(&build_dfmnd(&sigma_z2()).unwrap().two.to_description()).unwrap();
    ensure(dfmnd() == dfmnd(), || "DFMnd(ΣZ2) differs".into())?;
    Ok("reports byte-identical across runs and serial/parallel".into())
}

fn main() -> ExitCode {
    let results = [
        run(1, "validator soundness", secs(10), validator_soundness),
        run(2, "Frobenius agreement", secs(120), frobenius_agreement),
        run(3, "FEM ⇔ dagger-homomorphism", None, fem_iff_dagger_hom),
        run(4, "FEM representability instances", secs(60), fem_representability),
        run(5, "Kleisli instances", secs(60), kleisli_instances),
        run(6, "adjunction instance closure", None, adjunction_closure),
        run(7, "comparison uniqueness", None, comparison_uniqueness),
        run(8, "completions validity", None, completions_validity),
        run(9, "lax-limit coherence", None, lax_limit),
        run(10, "determinism", None, determinism),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("{passed}/10 acceptance criteria pass");
    if passed == 10 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
