//! FEM objects inside a dagger 2-category: witnesses, their representing
//! property, the universal property against adjunctions, and the
//! correspondence between monad morphisms and pairs of 1-cells.

use super::completions::{completion_hom, Ctx, Dfmnd, Fk};
use super::{Cell0, Cell1, Cell2, CompletionKind, FinDagger2Category, Monad2, TwoCatError};
use crate::verdict::{Verdict, Witness};

/// `u: E → D` with action `ξ: t u ⇒ u`, left adjoint `f_t: D → E` and
/// counit `ε_t: f_t u ⇒ 1_E`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FEMObjectWitness {
    pub e: Cell0,
    pub u: Cell1,
    pub xi: Cell2,
    pub f_t: Cell1,
    pub eps_t: Cell2,
}

impl FEMObjectWitness {
    /// `E = D` with every component an identity; the witness for an
    /// identity monad.
    pub fn trivial(k: &FinDagger2Category, d: Cell0) -> Self {
        let one = k.id1(d);
        FEMObjectWitness { e: d, u: one, xi: k.id2(one), f_t: one, eps_t: k.id2(one) }
    }
}

/// `f: D → A ⊣ u: A → D` with `η: 1_D ⇒ u f` and `ε: f u ⇒ 1_A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Adjunction2 {
    pub f: Cell1,
    pub u: Cell1,
    pub eta: Cell2,
    pub eps: Cell2,
}

/// `t η = η t`.
pub fn eta_commutation_check(k: &FinDagger2Category, m: &Monad2) -> bool {
    k.lw(m.t, m.eta) == k.rw(m.eta, m.t)
}

fn fail(check: &str, cells: Vec<String>) -> Result<(), Witness> {
    Err(Witness::new(check, cells))
}

/// The structural invariants a witness must satisfy before its universal
/// property is meaningful.
pub(crate) fn check_witness(k: &FinDagger2Category, m: &Monad2, w: &FEMObjectWitness) -> Result<(), Witness> {
    let d = m.d;
    let typed = (w.u.src, w.u.tgt) == (w.e, d)
        && (w.f_t.src, w.f_t.tgt) == (d, w.e)
        && (w.xi.src, w.xi.tgt) == (w.e, d)
        && (w.eps_t.src, w.eps_t.tgt) == (w.e, w.e)
        && k.src2(w.xi) == k.comp1(m.t, w.u)
        && k.tgt2(w.xi) == w.u
        && k.src2(w.eps_t) == k.comp1(w.f_t, w.u)
        && k.tgt2(w.eps_t) == k.id1(w.e);
    if !typed {
        return fail("witness typing", vec![k.cell0_id(w.e).to_string()]);
    }
    if k.comp1(w.u, w.f_t) != m.t {
        return fail("t = u f_t", vec![k.cell1_id(w.u).to_string(), k.cell1_id(w.f_t).to_string()]);
    }
    if k.rw(w.xi, w.f_t) != m.mu {
        return fail("μ = ξ f_t", vec![k.cell2_id(w.xi).to_string()]);
    }
    if k.lw(w.u, w.eps_t) != w.xi {
        return fail("u ε_t = ξ", vec![k.cell2_id(w.eps_t).to_string()]);
    }
    let one = Monad2::identity(k, w.e);
    if !Dfmnd.one_cell_ok(Ctx { k, s: &one, t: m }, w.u, w.xi) {
        return fail("(u, ξ) is a monad morphism", vec![k.cell1_id(w.u).to_string(), k.cell2_id(w.xi).to_string()]);
    }
    if k.vcomp(k.rw(w.eps_t, w.f_t), k.lw(w.f_t, m.eta)) != k.id2(w.f_t)
        || k.vcomp(k.lw(w.u, w.eps_t), k.rw(m.eta, w.u)) != k.id2(w.u)
    {
        return fail("triangle identities for f_t ⊣ u", vec![k.cell1_id(w.f_t).to_string()]);
    }
    Ok(())
}

/// For every 0-cell `A`, composing with `(u, ξ)` must be an isomorphism from
/// `hom(A, E)` onto the monad morphisms `(A, 1) → (D, t)`.
pub fn fem_object_check(k: &FinDagger2Category, m: &Monad2, w: &FEMObjectWitness) -> Verdict {
    if let Err(wit) = check_witness(k, m, w) {
        return Verdict::Fail(wit);
    }
    for a in k.cells0() {
        let one = Monad2::identity(k, a);
        let hom = match completion_hom(k, &Dfmnd, &one, m) {
            Ok(h) => h,
            Err(e) => return Verdict::Fail(Witness::new("fem-object", [k.cell0_id(a).to_string(), e.to_string()])),
        };
        let miss = |cells: Vec<String>| Verdict::Fail(Witness::new("fem-object", cells));
        let mut image = Vec::new();
        for f in k.cells1(a, w.e) {
            match hom.find_one_cell(k.comp1(w.u, f), k.rw(w.xi, f)) {
                Some(x) => image.push(x),
                None => return miss(vec![k.cell0_id(a).to_string(), k.cell1_id(f).to_string()]),
            }
        }
        let mut sorted = image.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != image.len() || image.len() != hom.category.num_objects() {
            return miss(vec![k.cell0_id(a).to_string(), "1-cells".into()]);
        }
        let mut count = 0;
        for al in k.cells2(a, w.e) {
            let (f, g) = (k.src2(al), k.tgt2(al));
            let (p, q) = (image[f.obj.index()], image[g.obj.index()]);
            if hom.find_two_cell(p, q, k.lw(w.u, al)).is_none() {
                return miss(vec![k.cell0_id(a).to_string(), k.cell2_id(al).to_string()]);
            }
            count += 1;
        }
        if count != hom.category.num_morphisms() {
            return miss(vec![k.cell0_id(a).to_string(), "2-cells".into()]);
        }
        // Whiskering by u is faithful on each hom exactly when the counts agree
        // and distinct 2-cells land on distinct images.
        let mut images: Vec<_> = k.cells2(a, w.e).map(|al| k.lw(w.u, al)).collect();
        images.sort();
        images.dedup();
        if images.len() != count {
            return miss(vec![k.cell0_id(a).to_string(), "faithfulness".into()]);
        }
    }
    Verdict::Pass
}

/// Brute-force search for every witness that passes [`fem_object_check`].
pub fn find_fem_witnesses(k: &FinDagger2Category, m: &Monad2) -> Vec<FEMObjectWitness> {
    let mut out = Vec::new();
    for e in k.cells0() {
        for u in k.cells1(e, m.d) {
            for f_t in k.cells1(m.d, e) {
                if k.comp1(u, f_t) != m.t {
                    continue;
                }
                for xi in k.cells2_between(k.comp1(m.t, u), u) {
                    for eps_t in k.cells2_between(k.comp1(f_t, u), k.id1(e)) {
                        let w = FEMObjectWitness { e, u, xi, f_t, eps_t };
                        if fem_object_check(k, m, &w).passed() {
                            out.push(w);
                        }
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Universal2Outcome {
    pub comparison: Cell1,
    pub verdict: Verdict,
}

/// Finds the unique `n: A → E` with `u^t n = u` and `ξ n = u ε`, then
/// checks `n f = f^t` and `n ε = ε^t n`.
pub fn universal2_check(
    k: &FinDagger2Category,
    adj: &Adjunction2,
    m: &Monad2,
    w: &FEMObjectWitness,
) -> Result<Universal2Outcome, TwoCatError> {
    let (f, u) = (adj.f, adj.u);
    if f.tgt != u.src || f.src != u.tgt || f.src != m.d {
        return Err(TwoCatError::IllTypedData("adjunction endpoints".into()));
    }
    if k.src2(adj.eta) != k.id1(f.src)
        || k.tgt2(adj.eta) != k.comp1(u, f)
        || k.src2(adj.eps) != k.comp1(f, u)
        || k.tgt2(adj.eps) != k.id1(u.src)
    {
        return Err(TwoCatError::IllTypedData("unit or counit".into()));
    }
    if k.vcomp(k.rw(adj.eps, f), k.lw(f, adj.eta)) != k.id2(f)
        || k.vcomp(k.lw(u, adj.eps), k.rw(adj.eta, u)) != k.id2(u)
    {
        return Err(TwoCatError::IllTypedData("triangle identities".into()));
    }
    let ueps = k.lw(u, adj.eps);
    if k.comp1(u, f) != m.t || k.rw(ueps, f) != m.mu || adj.eta != m.eta {
        return Err(TwoCatError::MonadMismatch);
    }
    let candidates: Vec<Cell1> =
        k.cells1(u.src, w.e).filter(|&n| k.comp1(w.u, n) == u && k.rw(w.xi, n) == ueps).collect();
    let n = match candidates.as_slice() {
        [] => return Err(TwoCatError::NoComparison),
        [n] => *n,
        _ => return Err(TwoCatError::NonUnique { count: candidates.len() }),
    };
    let verdict = if k.comp1(n, f) != w.f_t {
        Verdict::Fail(Witness::new("n f = f^t", [k.cell1_id(n)]))
    } else if k.lw(n, adj.eps) != k.rw(w.eps_t, n) {
        Verdict::Fail(Witness::new("n ε = ε^t n", [k.cell1_id(n)]))
    } else {
        Verdict::Pass
    };
    Ok(Universal2Outcome { comparison: n, verdict })
}

/// `(f ξ^t)·(σ u^t)`: the action a monad morphism induces on `f u^t`.
fn induced_action(k: &FinDagger2Category, wt: &FEMObjectWitness, f: Cell1, sigma: Cell2) -> Cell2 {
    k.vcomp(k.lw(f, wt.xi), k.rw(sigma, wt.u))
}

/// The unique `f̄: E_t → E_s` with `u^s f̄ = f u^t` and `ξ^s f̄ = ξ'`.
fn lift_one_cell(
    k: &FinDagger2Category,
    wt: &FEMObjectWitness,
    ws: &FEMObjectWitness,
    f: Cell1,
    action: Cell2,
) -> Result<Cell1, usize> {
    let fu = k.comp1(f, wt.u);
    let found: Vec<Cell1> =
        k.cells1(wt.e, ws.e).filter(|&fb| k.comp1(ws.u, fb) == fu && k.rw(ws.xi, fb) == action).collect();
    match found.as_slice() {
        [fb] => Ok(*fb),
        _ => Err(found.len()),
    }
}

/// Monad morphisms `(D, t) → (C, s)` correspond to pairs `(f, f̄)` with
/// `f u^t = u^s f̄`; when `t η = η t` the 2-cells of the FEM completion
/// correspond to 2-cells `f̄ ⇒ ḡ`, compatibly with the dagger and vertical
/// composition.
pub fn fem_pairs_correspondence(
    k: &FinDagger2Category,
    mt: &Monad2,
    wt: &FEMObjectWitness,
    ms: &Monad2,
    ws: &FEMObjectWitness,
) -> Result<Verdict, TwoCatError> {
    for (m, w) in [(mt, wt), (ms, ws)] {
        if let Err(wit) = check_witness(k, m, w) {
            return Ok(Verdict::Fail(wit));
        }
    }
    let fail = |check: &str, cells: Vec<String>| Ok(Verdict::Fail(Witness::new(check, cells)));
    let hom = completion_hom(k, &Dfmnd, mt, ms)?;
    let mut lifts = Vec::new();
    for &(f, sigma) in hom.one_cells() {
        match lift_one_cell(k, wt, ws, f, induced_action(k, wt, f, sigma)) {
            Ok(fb) => lifts.push(fb),
            Err(n) => {
                return fail(
                    "unique lift of a monad morphism",
                    vec![k.cell1_id(f).into(), k.cell2_id(sigma).into(), format!("{n} lifts")],
                )
            }
        }
    }
    // Backward: every pair determines σ = (ξ^s f̄ f^t)·(s f η^t).
    let mut pairs = 0;
    for f in k.cells1(mt.d, ms.d) {
        for fb in k.cells1(wt.e, ws.e) {
            if k.comp1(f, wt.u) != k.comp1(ws.u, fb) {
                continue;
            }
            pairs += 1;
            let sigma = k.vcomp(k.rw(ws.xi, k.comp1(fb, wt.f_t)), k.lw(k.comp1(ms.t, f), mt.eta));
            let Some(x) = hom.find_one_cell(f, sigma) else {
                return fail("pair induces a monad morphism", vec![k.cell1_id(f).into(), k.cell1_id(fb).into()]);
            };
            if lifts[x.index()] != fb {
                return fail("pair round trip", vec![k.cell1_id(f).into(), k.cell1_id(fb).into()]);
            }
        }
    }
    if pairs != lifts.len() {
        return fail("1-cell bijection", vec![format!("{pairs} pairs"), format!("{} monad morphisms", lifts.len())]);
    }
    for (x, &(f, sigma)) in hom.one_cells().iter().enumerate() {
        let fb = lifts[x];
        let back = k.vcomp(k.rw(ws.xi, k.comp1(fb, wt.f_t)), k.lw(k.comp1(ms.t, f), mt.eta));
        if back != sigma {
            return fail("monad morphism round trip", vec![k.cell1_id(f).into(), k.cell2_id(sigma).into()]);
        }
    }
    if !eta_commutation_check(k, mt) {
        return Ok(Verdict::Pass);
    }

    // 2-cells, read off the FEM hom computed in the reversed 2-category.
    let op = k.opposite();
    let fem = completion_hom(&op, &Fk, &ms.flip(), &mt.flip())?;
    let cat = &fem.category;
    let image = |f: Cell1, ab: Cell2| k.vcomp(k.lw(ws.u, k.rw(ab, wt.f_t)), k.lw(f, mt.eta));
    for (p, &(f, sigma)) in hom.one_cells().iter().enumerate() {
        let Some(pf) = fem.find_one_cell(f.flip(), sigma.flip()) else {
            return fail("FEM 1-cell", vec![k.cell1_id(f).into()]);
        };
        for (q, &(g, gamma)) in hom.one_cells().iter().enumerate() {
            let Some(qf) = fem.find_one_cell(g.flip(), gamma.flip()) else {
                return fail("FEM 1-cell", vec![k.cell1_id(g).into()]);
            };
            let bars: Vec<Cell2> = k.cells2_between(lifts[p], lifts[q]).collect();
            let mut hit = Vec::new();
            for &ab in &bars {
                match fem.find_two_cell(pf, qf, image(f, ab).flip()) {
                    Some(a) => hit.push(a),
                    None => return fail("2-cell lands in FEM", vec![k.cell2_id(ab).into()]),
                }
                let dag = fem.find_two_cell(qf, pf, image(g, k.dagger2(ab)).flip());
                let a = *hit.last().unwrap();
                if dag != Some(cat.dagger(a)) {
                    return fail("2-cell correspondence preserves the dagger", vec![k.cell2_id(ab).into()]);
                }
            }
            let mut distinct = hit.clone();
            distinct.sort();
            distinct.dedup();
            if distinct.len() != hit.len() || hit.len() != cat.hom(pf, qf).len() {
                return fail("2-cell bijection", vec![k.cell1_id(f).into(), k.cell1_id(g).into()]);
            }
        }
    }
    for (p, &(f, sigma)) in hom.one_cells().iter().enumerate() {
        let pf = fem.find_one_cell(f.flip(), sigma.flip()).unwrap();
        for (q, &(g, gamma)) in hom.one_cells().iter().enumerate() {
            let qf = fem.find_one_cell(g.flip(), gamma.flip()).unwrap();
            for (r, &(h, eta)) in hom.one_cells().iter().enumerate() {
                let rf = fem.find_one_cell(h.flip(), eta.flip()).unwrap();
                for ab in k.cells2_between(lifts[p], lifts[q]) {
                    for bb in k.cells2_between(lifts[q], lifts[r]) {
                        let a = fem.find_two_cell(pf, qf, image(f, ab).flip()).unwrap();
                        let b = fem.find_two_cell(qf, rf, image(g, bb).flip()).unwrap();
                        let ba = fem.find_two_cell(pf, rf, image(f, k.vcomp(bb, ab)).flip());
                        if ba != Some(cat.compose(b, a)) {
                            return fail(
                                "2-cell correspondence is functorial",
                                vec![k.cell2_id(bb).into(), k.cell2_id(ab).into()],
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(Verdict::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::two_cat::fixture::{sigma_z2, standard_fragment};

    #[test]
    fn fem_witness_of_ts() {
        let sf = standard_fragment(false);
        let (fr, k) = (&sf.fragment, &sf.fragment.two);
        let m = fr.monad_of(&sf.ts).unwrap();
        let w = fr.witness_of(&sf.fem).unwrap();
        assert_eq!(fem_object_check(k, &m, &w), Verdict::Pass);
        let one = k.find_cell0("ONE").unwrap();
        let bad = FEMObjectWitness { e: one, ..w };
        assert!(!fem_object_check(k, &m, &bad).passed());
        assert!(find_fem_witnesses(k, &m).contains(&w));
    }

    #[test]
    fn ts_pairs_correspond() {
        let sf = standard_fragment(false);
        let (fr, k) = (&sf.fragment, &sf.fragment.two);
        let m = fr.monad_of(&sf.ts).unwrap();
        let w = fr.witness_of(&sf.fem).unwrap();
        assert!(eta_commutation_check(k, &m));
        assert_eq!(fem_pairs_correspondence(k, &m, &w, &m, &w).unwrap(), Verdict::Pass);
        let z2 = k.find_cell0("Z2").unwrap();
        let id = Monad2::identity(k, z2);
        let wid = FEMObjectWitness::trivial(k, z2);
        assert_eq!(fem_pairs_correspondence(k, &m, &w, &id, &wid).unwrap(), Verdict::Pass);
        assert_eq!(fem_pairs_correspondence(k, &id, &wid, &m, &w).unwrap(), Verdict::Pass);
    }

    #[test]
    fn free_forgetful_adjunction_is_universal() {
        let sf = standard_fragment(false);
        let (fr, k) = (&sf.fragment, &sf.fragment.two);
        let m = fr.monad_of(&sf.ts).unwrap();
        let w = fr.witness_of(&sf.fem).unwrap();
        let adj = fr.adjunction_of(&sf.fem.adj).unwrap();
        let out = universal2_check(k, &adj, &m, &w).unwrap();
        assert_eq!(out.verdict, Verdict::Pass);
        assert_eq!(out.comparison, k.id1(w.e));
    }

    #[test]
    fn identity_monads_satisfy_eta_commutation() {
        let k = sigma_z2();
        for m in crate::two_cat::enumerate_monads2(&k) {
            assert!(eta_commutation_check(&k, &m));
        }
    }
}
