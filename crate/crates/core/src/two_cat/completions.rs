//! Monad completions of a dagger 2-category. Each completion has dagger
//! Frobenius monads as 0-cells; the completions differ only in what their 1-
//! and 2-cells are and how those compose, which is captured by
//! [`CompletionKind`].

use std::collections::HashMap;
use std::sync::Arc;

use super::{enumerate_frobenius_monads, Cell0, Cell1, Cell2, FinDagger2Category, Monad2, TwoCatError};
use crate::fincat::{validate_category, CategoryDescription, FinDaggerCategory, Mor, MorphismDecl, Obj};
use crate::functor::DaggerFunctor;
use crate::verdict::{Verdict, Witness};

/// The ambient 2-category together with the source and target monads of the
/// hom being built.
#[derive(Clone, Copy)]
pub struct Ctx<'a> {
    pub k: &'a FinDagger2Category,
    pub s: &'a Monad2,
    pub t: &'a Monad2,
}

/// 1-cells are pairs `(f, σ)` of a 1-cell and a 2-cell of the ambient
/// 2-category; 2-cells are single ambient 2-cells.
pub trait CompletionKind {
    /// Source and target of `σ` for the underlying 1-cell `f`.
    fn sigma_type(&self, c: Ctx, f: Cell1) -> (Cell1, Cell1);
    fn one_cell_ok(&self, c: Ctx, f: Cell1, sigma: Cell2) -> bool;
    /// Source and target of an ambient 2-cell representing `f ⇒ g`.
    fn alpha_type(&self, c: Ctx, f: Cell1, g: Cell1) -> (Cell1, Cell1);
    fn two_cell_ok(&self, c: Ctx, f: (Cell1, Cell2), g: (Cell1, Cell2), alpha: Cell2) -> bool;
    /// `β · α` where `β` ends at `h`.
    fn vcomp(&self, c: Ctx, beta: Cell2, alpha: Cell2, h: Cell1) -> Cell2;
    fn id2(&self, c: Ctx, f: Cell1) -> Cell2;
    fn dagger2(&self, c: Ctx, alpha: Cell2, f: Cell1, g: Cell1) -> Cell2;
    /// The 2-cell part of `(g, γ) ∘ (f, σ)` for monads `r → s → t`.
    fn comp1(&self, k: &FinDagger2Category, monads: [&Monad2; 3], g: (Cell1, Cell2), f: (Cell1, Cell2)) -> Cell2;
    /// `(g, γ) α` where `α` ends at `f2`.
    fn lw(&self, k: &FinDagger2Category, monads: [&Monad2; 3], g: (Cell1, Cell2), alpha: Cell2, f2: Cell1) -> Cell2;
    /// `β (f, σ)` where `β` ends at `g2`.
    fn rw(&self, k: &FinDagger2Category, monads: [&Monad2; 3], beta: Cell2, g2: Cell1, f: (Cell1, Cell2)) -> Cell2;
}

/// Monad morphisms `(f, σ): (A, s) → (D, t)` with `σ: t f ⇒ f s` and
/// 2-cells `α: f ⇒ g` compatible with both `σ` and `σ†`.
pub struct Dfmnd;

impl CompletionKind for Dfmnd {
    fn sigma_type(&self, c: Ctx, f: Cell1) -> (Cell1, Cell1) {
        (c.k.comp1(c.t.t, f), c.k.comp1(f, c.s.t))
    }

    fn one_cell_ok(&self, c: Ctx, f: Cell1, sigma: Cell2) -> bool {
        let (k, s, t) = (c.k, c.s, c.t);
        let sd = k.dagger2(sigma);
        k.vcomp(sigma, k.rw(t.mu, f)) == k.chain2(&[k.lw(f, s.mu), k.rw(sigma, s.t), k.lw(t.t, sigma)])
            && k.chain2(&[sd, k.lw(f, s.mu), k.rw(sigma, s.t)]) == k.vcomp(k.rw(t.mu, f), k.lw(t.t, sd))
            && k.vcomp(sigma, k.rw(t.eta, f)) == k.lw(f, s.eta)
    }

    fn alpha_type(&self, _: Ctx, f: Cell1, g: Cell1) -> (Cell1, Cell1) {
        (f, g)
    }

    fn two_cell_ok(&self, c: Ctx, (_, sigma): (Cell1, Cell2), (_, gamma): (Cell1, Cell2), alpha: Cell2) -> bool {
        let (k, s, t) = (c.k, c.s, c.t);
        let ad = k.dagger2(alpha);
        k.vcomp(gamma, k.lw(t.t, alpha)) == k.vcomp(k.rw(alpha, s.t), sigma)
            && k.vcomp(sigma, k.lw(t.t, ad)) == k.vcomp(k.rw(ad, s.t), gamma)
    }

    fn vcomp(&self, c: Ctx, beta: Cell2, alpha: Cell2, _: Cell1) -> Cell2 {
        c.k.vcomp(beta, alpha)
    }

    fn id2(&self, c: Ctx, f: Cell1) -> Cell2 {
        c.k.id2(f)
    }

    fn dagger2(&self, c: Ctx, alpha: Cell2, _: Cell1, _: Cell1) -> Cell2 {
        c.k.dagger2(alpha)
    }

    fn comp1(
        &self,
        k: &FinDagger2Category,
        _: [&Monad2; 3],
        (g, gamma): (Cell1, Cell2),
        (f, sigma): (Cell1, Cell2),
    ) -> Cell2 {
        k.vcomp(k.lw(g, sigma), k.rw(gamma, f))
    }

    fn lw(&self, k: &FinDagger2Category, _: [&Monad2; 3], (g, _): (Cell1, Cell2), alpha: Cell2, _: Cell1) -> Cell2 {
        k.lw(g, alpha)
    }

    fn rw(&self, k: &FinDagger2Category, _: [&Monad2; 3], beta: Cell2, _: Cell1, (f, _): (Cell1, Cell2)) -> Cell2 {
        k.rw(beta, f)
    }
}

/// Kleisli-style 1-cells `(f, σ): (A, s) → (D, t)` with `σ: f s ⇒ t f`; a
/// 2-cell `f ⇒ g` is an ambient `α: f ⇒ t g` and composes through `μ`.
pub struct Fk;

impl CompletionKind for Fk {
    fn sigma_type(&self, c: Ctx, f: Cell1) -> (Cell1, Cell1) {
        (c.k.comp1(f, c.s.t), c.k.comp1(c.t.t, f))
    }

    fn one_cell_ok(&self, c: Ctx, f: Cell1, sigma: Cell2) -> bool {
        let (k, s, t) = (c.k, c.s, c.t);
        let sd = k.dagger2(sigma);
        k.vcomp(sigma, k.lw(f, s.mu)) == k.chain2(&[k.rw(t.mu, f), k.lw(t.t, sigma), k.rw(sigma, s.t)])
            && k.chain2(&[sd, k.rw(t.mu, f), k.lw(t.t, sigma)]) == k.vcomp(k.lw(f, s.mu), k.rw(sd, s.t))
            && k.vcomp(sigma, k.lw(f, s.eta)) == k.rw(t.eta, f)
    }

    fn alpha_type(&self, c: Ctx, f: Cell1, g: Cell1) -> (Cell1, Cell1) {
        (f, c.k.comp1(c.t.t, g))
    }

    fn two_cell_ok(&self, c: Ctx, (_, sigma): (Cell1, Cell2), (g, gamma): (Cell1, Cell2), alpha: Cell2) -> bool {
        let (k, s, t) = (c.k, c.s, c.t);
        let mg = k.rw(t.mu, g);
        k.chain2(&[mg, k.lw(t.t, alpha), sigma]) == k.chain2(&[mg, k.lw(t.t, gamma), k.rw(alpha, s.t)])
    }

    fn vcomp(&self, c: Ctx, beta: Cell2, alpha: Cell2, h: Cell1) -> Cell2 {
        let k = c.k;
        k.chain2(&[k.rw(c.t.mu, h), k.lw(c.t.t, beta), alpha])
    }

    fn id2(&self, c: Ctx, f: Cell1) -> Cell2 {
        c.k.rw(c.t.eta, f)
    }

    fn dagger2(&self, c: Ctx, alpha: Cell2, _: Cell1, g: Cell1) -> Cell2 {
        let (k, t) = (c.k, c.t);
        k.chain2(&[k.lw(t.t, k.dagger2(alpha)), k.rw(k.dagger2(t.mu), g), k.rw(t.eta, g)])
    }

    fn comp1(
        &self,
        k: &FinDagger2Category,
        _: [&Monad2; 3],
        (g, gamma): (Cell1, Cell2),
        (f, sigma): (Cell1, Cell2),
    ) -> Cell2 {
        k.vcomp(k.rw(gamma, f), k.lw(g, sigma))
    }

    fn lw(
        &self,
        k: &FinDagger2Category,
        _: [&Monad2; 3],
        (g, gamma): (Cell1, Cell2),
        alpha: Cell2,
        f2: Cell1,
    ) -> Cell2 {
        k.vcomp(k.rw(gamma, f2), k.lw(g, alpha))
    }

    fn rw(&self, k: &FinDagger2Category, _: [&Monad2; 3], beta: Cell2, _: Cell1, (f, _): (Cell1, Cell2)) -> Cell2 {
        k.rw(beta, f)
    }
}

/// One hom category of a completion.
pub struct CompletionHom {
    pub category: Arc<FinDaggerCategory>,
    one_cells: Vec<(Cell1, Cell2)>,
    two_cells: Vec<Cell2>,
    one_index: HashMap<(Cell1, Cell2), Obj>,
    two_index: HashMap<(Obj, Obj, Cell2), Mor>,
}

impl CompletionHom {
    pub fn one_cell(&self, x: Obj) -> (Cell1, Cell2) {
        self.one_cells[x.index()]
    }

    pub fn two_cell(&self, a: Mor) -> Cell2 {
        self.two_cells[a.index()]
    }

    pub fn one_cells(&self) -> &[(Cell1, Cell2)] {
        &self.one_cells
    }

    pub fn find_one_cell(&self, f: Cell1, sigma: Cell2) -> Option<Obj> {
        self.one_index.get(&(f, sigma)).copied()
    }

    pub fn find_two_cell(&self, src: Obj, tgt: Obj, alpha: Cell2) -> Option<Mor> {
        self.two_index.get(&(src, tgt, alpha)).copied()
    }
}

/// Enumerates and validates the hom category from `s` to `t`.
pub fn completion_hom(
    k: &FinDagger2Category,
    kind: &dyn CompletionKind,
    s: &Monad2,
    t: &Monad2,
) -> Result<CompletionHom, TwoCatError> {
    let c = Ctx { k, s, t };
    let mut ones = Vec::new();
    for f in k.cells1(s.d, t.d) {
        let (x, y) = kind.sigma_type(c, f);
        for sigma in k.cells2_between(x, y) {
            if kind.one_cell_ok(c, f, sigma) {
                ones.push((f, sigma));
            }
        }
    }
    let one_ids: Vec<String> =
        ones.iter().map(|&(f, sigma)| format!("({},{})", k.cell1_id(f), k.cell2_id(sigma))).collect();
    let mut twos = Vec::new();
    for (p, &fp) in ones.iter().enumerate() {
        for (q, &fq) in ones.iter().enumerate() {
            let (x, y) = kind.alpha_type(c, fp.0, fq.0);
            for alpha in k.cells2_between(x, y) {
                if kind.two_cell_ok(c, fp, fq, alpha) {
                    twos.push((p, q, alpha));
                }
            }
        }
    }
    let pos: HashMap<(usize, usize, Cell2), usize> = twos.iter().enumerate().map(|(i, &key)| (key, i)).collect();
    let two_ids: Vec<String> =
        twos.iter().map(|&(p, q, a)| format!("{}:{}->{}", k.cell2_id(a), one_ids[p], one_ids[q])).collect();
    let closure = |cell: Cell2| TwoCatError::InternalClosureFailure { cell: k.cell2_id(cell).to_string() };

    let mut desc = CategoryDescription { objects: one_ids.clone(), ..Default::default() };
    for (i, &(p, q, _)) in twos.iter().enumerate() {
        desc.morphisms.push(MorphismDecl { id: two_ids[i].clone(), src: one_ids[p].clone(), tgt: one_ids[q].clone() });
    }
    for (p, &(f, _)) in ones.iter().enumerate() {
        let id = kind.id2(c, f);
        let i = *pos.get(&(p, p, id)).ok_or_else(|| closure(id))?;
        desc.identities.insert(one_ids[p].clone(), two_ids[i].clone());
    }
    for (i, &(p, q, alpha)) in twos.iter().enumerate() {
        let d = kind.dagger2(c, alpha, ones[p].0, ones[q].0);
        let j = *pos.get(&(q, p, d)).ok_or_else(|| closure(d))?;
        desc.dagger.insert(two_ids[i].clone(), two_ids[j].clone());
    }
    for (j, &(p, q, alpha)) in twos.iter().enumerate() {
        for (i, &(q2, r, beta)) in twos.iter().enumerate() {
            if q2 != q {
                continue;
            }
            let ba = kind.vcomp(c, beta, alpha, ones[r].0);
            let l = *pos.get(&(p, r, ba)).ok_or_else(|| closure(ba))?;
            desc.composition.push([two_ids[i].clone(), two_ids[j].clone(), two_ids[l].clone()]);
        }
    }
    let category = Arc::new(validate_category(&desc).map_err(|source| TwoCatError::Hom {
        src: s.label(k),
        tgt: t.label(k),
        source: Box::new(source),
    })?);
    let mut one_cells = ones.clone();
    for (p, &cell) in ones.iter().enumerate() {
        one_cells[category.find_object(&one_ids[p]).unwrap().index()] = cell;
    }
    let mut two_cells: Vec<Cell2> = twos.iter().map(|&(_, _, a)| a).collect();
    for (i, &(_, _, alpha)) in twos.iter().enumerate() {
        two_cells[category.find_morphism(&two_ids[i]).unwrap().index()] = alpha;
    }
    let one_index = one_cells.iter().enumerate().map(|(i, &cell)| (cell, Obj(i))).collect();
    let two_index =
        two_cells.iter().enumerate().map(|(i, &a)| ((category.src(Mor(i)), category.tgt(Mor(i)), a), Mor(i))).collect();
    Ok(CompletionHom { category, one_cells, two_cells, one_index, two_index })
}

/// A completion together with the ambient data behind each of its cells.
pub struct Completion {
    pub two: FinDagger2Category,
    monads: Vec<Monad2>,
    one_cells: Vec<Vec<(Cell1, Cell2)>>,
    two_cells: Vec<Vec<Cell2>>,
}

impl Completion {
    pub fn monads(&self) -> &[Monad2] {
        &self.monads
    }

    pub fn monad(&self, a: Cell0) -> &Monad2 {
        &self.monads[a.0]
    }

    pub fn cell0_of(&self, m: &Monad2) -> Option<Cell0> {
        self.monads.iter().position(|x| x == m).map(Cell0)
    }

    /// The ambient `(f, σ)` behind a 1-cell.
    pub fn one_cell(&self, f: Cell1) -> (Cell1, Cell2) {
        self.one_cells[f.src.0 * self.monads.len() + f.tgt.0][f.obj.index()]
    }

    /// The ambient 2-cell behind a 2-cell.
    pub fn two_cell(&self, a: Cell2) -> Cell2 {
        self.two_cells[a.src.0 * self.monads.len() + a.tgt.0][a.mor.index()]
    }

    pub fn find_one_cell(&self, a: Cell0, b: Cell0, cell: (Cell1, Cell2)) -> Option<Cell1> {
        let cells = &self.one_cells[a.0 * self.monads.len() + b.0];
        cells.iter().position(|&x| x == cell).map(|i| Cell1 { src: a, tgt: b, obj: Obj(i) })
    }

    pub fn find_two_cell(&self, p: Cell1, q: Cell1, alpha: Cell2) -> Option<Cell2> {
        self.two.cells2_between(p, q).find(|&x| self.two_cell(x) == alpha)
    }
}

/// Builds the completion on the given monads (sorted by label).
pub fn build_completion(
    k: &FinDagger2Category,
    kind: &dyn CompletionKind,
    mut monads: Vec<Monad2>,
) -> Result<Completion, TwoCatError> {
    monads.sort_by_key(|m| m.label(k));
    monads.dedup();
    let n = monads.len();
    let mut homs = Vec::with_capacity(n * n);
    for s in &monads {
        for t in &monads {
            homs.push(completion_hom(k, kind, s, t)?);
        }
    }
    let hom = |a: Cell0, b: Cell0| &homs[a.0 * n + b.0];
    let mut id1 = Vec::with_capacity(n);
    for (i, m) in monads.iter().enumerate() {
        let x = hom(Cell0(i), Cell0(i))
            .find_one_cell(k.id1(m.d), k.id2(m.t))
            .ok_or_else(|| TwoCatError::MissingEntry { table: "id1", cells: vec![m.label(k)] })?;
        id1.push(x);
    }
    let ms = |a: Cell0, b: Cell0, c: Cell0| [&monads[a.0], &monads[b.0], &monads[c.0]];
    let comp1 = |g: Cell1, f: Cell1| {
        let (fc, gc) = (hom(f.src, f.tgt).one_cell(f.obj), hom(g.src, g.tgt).one_cell(g.obj));
        let sigma = kind.comp1(k, ms(f.src, f.tgt, g.tgt), gc, fc);
        hom(f.src, g.tgt).find_one_cell(k.comp1(gc.0, fc.0), sigma)
    };
    let cells0 = monads.iter().map(|m| m.label(k)).collect();
    let two = FinDagger2Category::from_parts(
        cells0,
        homs.iter().map(|h| h.category.clone()).collect(),
        id1,
        comp1,
        |g, al| {
            let h = hom(al.src, al.tgt);
            let (p, q) = (h.category.src(al.mor), h.category.tgt(al.mor));
            let gc = hom(g.src, g.tgt).one_cell(g.obj);
            let x = kind.lw(k, ms(al.src, al.tgt, g.tgt), gc, h.two_cell(al.mor), h.one_cell(q).0);
            let src = comp1(g, Cell1 { src: al.src, tgt: al.tgt, obj: p })?;
            let tgt = comp1(g, Cell1 { src: al.src, tgt: al.tgt, obj: q })?;
            hom(al.src, g.tgt).find_two_cell(src, tgt, x)
        },
        |be, f| {
            let h = hom(be.src, be.tgt);
            let (p, q) = (h.category.src(be.mor), h.category.tgt(be.mor));
            let fc = hom(f.src, f.tgt).one_cell(f.obj);
            let x = kind.rw(k, ms(f.src, f.tgt, be.tgt), h.two_cell(be.mor), h.one_cell(q).0, fc);
            let src = comp1(Cell1 { src: be.src, tgt: be.tgt, obj: p }, f)?;
            let tgt = comp1(Cell1 { src: be.src, tgt: be.tgt, obj: q }, f)?;
            hom(f.src, be.tgt).find_two_cell(src, tgt, x)
        },
        &[],
    )?;
    Ok(Completion {
        two,
        monads,
        one_cells: homs.iter().map(|h| h.one_cells.clone()).collect(),
        two_cells: homs.iter().map(|h| h.two_cells.clone()).collect(),
    })
}

pub fn build_dfmnd(k: &FinDagger2Category) -> Result<Completion, TwoCatError> {
    build_completion(k, &Dfmnd, enumerate_frobenius_monads(k))
}

pub fn build_fk_completion(k: &FinDagger2Category) -> Result<Completion, TwoCatError> {
    build_completion(k, &Fk, enumerate_frobenius_monads(k))
}

/// The FEM completion, obtained by running the Kleisli-style completion on
/// the 2-category with 1-cells reversed and reversing the result.
pub fn build_fem_completion(k: &FinDagger2Category) -> Result<Completion, TwoCatError> {
    let op = k.opposite();
    let fk = build_fk_completion(&op)?;
    let n = fk.monads.len();
    let mut one_cells = Vec::with_capacity(n * n);
    let mut two_cells = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let j = b * n + a;
            one_cells.push(fk.one_cells[j].iter().map(|&(f, s)| (f.flip(), s.flip())).collect());
            two_cells.push(fk.two_cells[j].iter().map(|&x| x.flip()).collect());
        }
    }
    Ok(Completion {
        two: fk.two.opposite(),
        monads: fk.monads.into_iter().map(Monad2::flip).collect(),
        one_cells,
        two_cells,
    })
}

/// Checks that `f ↦ (f, 1)`, `α ↦ α` is an isomorphism from each hom of the
/// ambient 2-category onto the hom between the corresponding identity monads,
/// and that it preserves 1-cell composition.
pub fn inclusion_fully_faithful(k: &FinDagger2Category, c: &Completion) -> Verdict {
    let fail = |cells: Vec<String>| Verdict::Fail(Witness::new("inclusion", cells));
    let mut image0 = Vec::new();
    for a in k.cells0() {
        match c.cell0_of(&Monad2::identity(k, a)) {
            Some(x) => image0.push(x),
            None => return fail(vec![k.cell0_id(a).to_string()]),
        }
    }
    for a in k.cells0() {
        for b in k.cells0() {
            let (ia, ib) = (image0[a.0], image0[b.0]);
            let mut objs = Vec::new();
            for f in k.cells1(a, b) {
                match c.find_one_cell(ia, ib, (f, k.id2(f))) {
                    Some(x) => objs.push(x.obj),
                    None => return fail(vec![k.cell1_id(f).to_string()]),
                }
            }
            let mut mors = Vec::new();
            for al in k.cells2(a, b) {
                let (f, g) = (k.src2(al), k.tgt2(al));
                let (p, q) = (
                    Cell1 { src: ia, tgt: ib, obj: objs[f.obj.index()] },
                    Cell1 { src: ia, tgt: ib, obj: objs[g.obj.index()] },
                );
                match c.find_two_cell(p, q, al) {
                    Some(x) => mors.push(x.mor),
                    None => return fail(vec![k.cell2_id(al).to_string()]),
                }
            }
            let source = k.hom(a, b).clone();
            let target = c.two.hom(ia, ib).clone();
            if target.num_objects() != objs.len() || target.num_morphisms() != mors.len() {
                return fail(vec![k.cell0_id(a).to_string(), k.cell0_id(b).to_string()]);
            }
            if DaggerFunctor::new(source, target, objs.clone(), mors.clone()).is_err() {
                return fail(vec![k.cell0_id(a).to_string(), k.cell0_id(b).to_string()]);
            }
            for cc in k.cells0() {
                for g in k.cells1(b, cc) {
                    for f in k.cells1(a, b) {
                        let gi = c.find_one_cell(ib, image0[cc.0], (g, k.id2(g)));
                        let fi = Cell1 { src: ia, tgt: ib, obj: objs[f.obj.index()] };
                        let gf = k.comp1(g, f);
                        let ok = gi.is_some_and(|gi| c.one_cell(c.two.comp1(gi, fi)) == (gf, k.id2(gf)));
                        if !ok {
                            return fail(vec![k.cell1_id(g).to_string(), k.cell1_id(f).to_string()]);
                        }
                    }
                }
            }
        }
    }
    Verdict::Pass
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::two_cat::fixture::{locally_discrete, sigma_z2, standard_fragment, terminal};

    #[test]
    fn completions_of_small_2categories() {
        for k in [terminal(), sigma_z2(), locally_discrete(&crate::fixtures::z2())] {
            for c in [build_dfmnd(&k).unwrap(), build_fk_completion(&k).unwrap(), build_fem_completion(&k).unwrap()] {
                assert!(inclusion_fully_faithful(&k, &c).passed());
            }
        }
    }

    #[test]
    fn terminal_completion_is_terminal() {
        let k = terminal();
        let c = build_fem_completion(&k).unwrap();
        assert_eq!(c.two.num_cells0(), 1);
        assert_eq!(c.two.hom(Cell0(0), Cell0(0)).num_morphisms(), 1);
    }

    #[test]
    fn fragment_completions_contain_ts() {
        let sf = standard_fragment(false);
        let k = &sf.fragment.two;
        let ts = sf.fragment.monad_of(&sf.ts).unwrap();
        for c in [build_dfmnd(k).unwrap(), build_fk_completion(k).unwrap(), build_fem_completion(k).unwrap()] {
            assert!(c.cell0_of(&ts).is_some());
            assert!(inclusion_fully_faithful(k, &c).passed());
        }
    }
}
