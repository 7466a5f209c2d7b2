//! String-keyed re-evaluation of 2-categorical data, and a direct
//! construction of the FEM completion.

use std::collections::HashMap;

use super::NaiveCat;
use crate::lax::LaxFunctorDescription;
use crate::two_cat::{
    build_completion, build_fem_completion, enumerate_frobenius_monads, Cell1, Cell2, CompletionKind, Ctx,
    FinDagger2Category, Monad2, TwoCatError, TwoCategoryDescription,
};

fn req<T>(x: Option<T>, what: impl FnOnce() -> String) -> Result<T, String> {
    x.ok_or_else(what)
}

/// A 2-category read straight from its description; every operation is a
/// table lookup and horizontal composition is `(βf')·(gα)` unless listed.
pub struct NaiveTwo {
    pub cells0: Vec<String>,
    homs: HashMap<(String, String), NaiveCat>,
    comp1: HashMap<[String; 5], String>,
    lw: HashMap<[String; 5], String>,
    rw: HashMap<[String; 5], String>,
    hc: HashMap<[String; 5], String>,
}

type R<T> = Result<T, String>;

impl NaiveTwo {
    pub fn new(desc: &TwoCategoryDescription) -> R<Self> {
        let mut homs = HashMap::new();
        for h in &desc.homs {
            homs.insert((h.src.clone(), h.tgt.clone()), NaiveCat::new(&h.category)?);
        }
        for a in &desc.cells0 {
            for b in &desc.cells0 {
                homs.entry((a.clone(), b.clone())).or_insert_with(|| NaiveCat::new(&Default::default()).unwrap());
            }
        }
        let table = |rows: &[[String; 6]]| {
            rows.iter()
                .map(|[a, b, c, x, y, z]| ([a.clone(), b.clone(), c.clone(), x.clone(), y.clone()], z.clone()))
                .collect()
        };
        Ok(NaiveTwo {
            cells0: desc.cells0.clone(),
            homs,
            comp1: table(&desc.comp1),
            lw: table(&desc.whisker_left),
            rw: table(&desc.whisker_right),
            hc: table(&desc.hcomp),
        })
    }

    pub fn hom(&self, a: &str, b: &str) -> &NaiveCat {
        &self.homs[&(a.to_string(), b.to_string())]
    }

    fn cell(&self, a: &str, b: &str, al: &str) -> R<(&NaiveCat, usize)> {
        let h = self.hom(a, b);
        Ok((h, req(h.mor(al), || format!("no 2-cell {al} in ({a},{b})"))?))
    }

    pub fn src2(&self, a: &str, b: &str, al: &str) -> R<String> {
        let (h, i) = self.cell(a, b, al)?;
        Ok(h.objects[h.src[i]].clone())
    }

    pub fn tgt2(&self, a: &str, b: &str, al: &str) -> R<String> {
        let (h, i) = self.cell(a, b, al)?;
        Ok(h.objects[h.tgt[i]].clone())
    }

    pub fn id2(&self, a: &str, b: &str, f: &str) -> R<String> {
        let h = self.hom(a, b);
        let x = req(h.obj(f), || format!("no 1-cell {f} in ({a},{b})"))?;
        Ok(h.morphisms[h.ident[x]].clone())
    }

    pub fn vcomp(&self, a: &str, b: &str, be: &str, al: &str) -> R<String> {
        let (h, j) = self.cell(a, b, be)?;
        let (_, i) = self.cell(a, b, al)?;
        if h.src[j] != h.tgt[i] {
            return Err(format!("{be} and {al} are not composable"));
        }
        Ok(h.morphisms[h.c(j, i)].clone())
    }

    pub fn chain(&self, a: &str, b: &str, cells: &[String]) -> R<String> {
        let mut acc = cells.last().expect("non-empty chain").clone();
        for x in cells.iter().rev().skip(1) {
            acc = self.vcomp(a, b, x, &acc)?;
        }
        Ok(acc)
    }

    pub fn dagger(&self, a: &str, b: &str, al: &str) -> R<String> {
        let (h, i) = self.cell(a, b, al)?;
        Ok(h.morphisms[h.dagger[i]].clone())
    }

    fn look(t: &HashMap<[String; 5], String>, key: [&str; 5], what: &str) -> R<String> {
        req(t.get(&key.map(String::from)).cloned(), || format!("no {what} entry for {key:?}"))
    }

    pub fn comp1(&self, a: &str, b: &str, c: &str, g: &str, f: &str) -> R<String> {
        Self::look(&self.comp1, [a, b, c, g, f], "comp1")
    }

    pub fn lw(&self, a: &str, b: &str, c: &str, g: &str, al: &str) -> R<String> {
        Self::look(&self.lw, [a, b, c, g, al], "whisker_left")
    }

    pub fn rw(&self, a: &str, b: &str, c: &str, be: &str, f: &str) -> R<String> {
        Self::look(&self.rw, [a, b, c, be, f], "whisker_right")
    }

    /// `β ∗ α` for `α` in `(a, b)` and `β` in `(b, c)`.
    pub fn hcomp(&self, a: &str, b: &str, c: &str, be: &str, al: &str) -> R<String> {
        if let Some(x) = self.hc.get(&[a, b, c, be, al].map(String::from)) {
            return Ok(x.clone());
        }
        let right = self.rw(a, b, c, be, &self.tgt2(a, b, al)?)?;
        let left = self.lw(a, b, c, &self.src2(b, c, be)?, al)?;
        self.vcomp(a, c, &right, &left)
    }
}

/// Re-evaluates every lax-functor law on the raw description: dagger hom
/// functors, naturality of `γ`, unit, associativity and the Frobenius axiom.
pub fn naive_lax_check(desc: &LaxFunctorDescription) -> R<()> {
    let s = NaiveTwo::new(&desc.source)?;
    let t = NaiveTwo::new(&desc.target)?;
    let f0 = |a: &str| req(desc.cells0.get(a).cloned(), || format!("no image of {a}"));
    let map4 = |rows: &[[String; 4]]| -> HashMap<(String, String, String), String> {
        rows.iter().map(|[a, b, x, y]| ((a.clone(), b.clone(), x.clone()), y.clone())).collect()
    };
    let (m1, m2) = (map4(&desc.cells1), map4(&desc.cells2));
    let gm: HashMap<[String; 5], String> = desc
        .gamma
        .iter()
        .map(|[a, b, c, f, g, x]| ([a.clone(), b.clone(), c.clone(), f.clone(), g.clone()], x.clone()))
        .collect();
    let f1 = |a: &str, b: &str, f: &str| {
        req(m1.get(&(a.into(), b.into(), f.into())).cloned(), || format!("no image of 1-cell {f}"))
    };
    let f2 = |a: &str, b: &str, x: &str| {
        req(m2.get(&(a.into(), b.into(), x.into())).cloned(), || format!("no image of 2-cell {x}"))
    };
    let gamma = |a: &str, b: &str, c: &str, f: &str, g: &str| {
        req(gm.get(&[a, b, c, f, g].map(String::from)).cloned(), || format!("no γ for ({f},{g})"))
    };
    let delta = |a: &str| req(desc.delta.get(a).cloned(), || format!("no δ for {a}"));
    let ones = |a: &str, b: &str| s.hom(a, b).objects.clone();
    let twos = |a: &str, b: &str| s.hom(a, b).morphisms.clone();
    let id1 = |a: &str| req(desc.source.id1.get(a).cloned(), || format!("no identity at {a}"));
    let fail = |law: &str, at: String| Err(format!("{law} fails at {at}"));

    for a in &s.cells0 {
        for b in &s.cells0 {
            let (fa, fb) = (f0(a)?, f0(b)?);
            for f in ones(a, b) {
                if f2(a, b, &s.id2(a, b, &f)?)? != t.id2(&fa, &fb, &f1(a, b, &f)?)? {
                    return fail("identity preservation", f);
                }
            }
            for al in twos(a, b) {
                let x = f2(a, b, &al)?;
                if t.src2(&fa, &fb, &x)? != f1(a, b, &s.src2(a, b, &al)?)?
                    || t.tgt2(&fa, &fb, &x)? != f1(a, b, &s.tgt2(a, b, &al)?)?
                {
                    return fail("2-cell typing", al);
                }
                if f2(a, b, &s.dagger(a, b, &al)?)? != t.dagger(&fa, &fb, &x)? {
                    return fail("dagger preservation", al);
                }
                for be in twos(a, b) {
                    if s.src2(a, b, &be)? == s.tgt2(a, b, &al)? {
                        let lhs = f2(a, b, &s.vcomp(a, b, &be, &al)?)?;
                        if lhs != t.vcomp(&fa, &fb, &f2(a, b, &be)?, &x)? {
                            return fail("composition preservation", format!("{be}, {al}"));
                        }
                    }
                }
            }
        }
    }
    for a in &s.cells0 {
        for b in &s.cells0 {
            for c in &s.cells0 {
                let (fa, fb, fc) = (f0(a)?, f0(b)?, f0(c)?);
                for g in ones(b, c) {
                    for f in ones(a, b) {
                        let x = gamma(a, b, c, &f, &g)?;
                        let from = t.comp1(&fa, &fb, &fc, &f1(b, c, &g)?, &f1(a, b, &f)?)?;
                        let to = f1(a, c, &s.comp1(a, b, c, &g, &f)?)?;
                        if t.src2(&fa, &fc, &x)? != from || t.tgt2(&fa, &fc, &x)? != to {
                            return fail("γ typing", format!("{f}, {g}"));
                        }
                    }
                }
                for psi in twos(b, c) {
                    for phi in twos(a, b) {
                        let (f, f_) = (s.src2(a, b, &phi)?, s.tgt2(a, b, &phi)?);
                        let (g, g_) = (s.src2(b, c, &psi)?, s.tgt2(b, c, &psi)?);
                        let h = t.hcomp(&fa, &fb, &fc, &f2(b, c, &psi)?, &f2(a, b, &phi)?)?;
                        let lhs = t.vcomp(&fa, &fc, &gamma(a, b, c, &f_, &g_)?, &h)?;
                        let image = f2(a, c, &s.hcomp(a, b, c, &psi, &phi)?)?;
                        let rhs = t.vcomp(&fa, &fc, &image, &gamma(a, b, c, &f, &g)?)?;
                        if lhs != rhs {
                            return fail("naturality of γ", format!("{psi}, {phi}"));
                        }
                    }
                }
            }
        }
    }
    for a in &s.cells0 {
        for b in &s.cells0 {
            let (fa, fb) = (f0(a)?, f0(b)?);
            for f in ones(a, b) {
                let ff = f1(a, b, &f)?;
                let one = t.id2(&fa, &fb, &ff)?;
                let l = t.rw(&fa, &fb, &fb, &delta(b)?, &ff)?;
                let left = t.vcomp(&fa, &fb, &gamma(a, b, b, &f, &id1(b)?)?, &l)?;
                let r = t.lw(&fa, &fa, &fb, &ff, &delta(a)?)?;
                let right = t.vcomp(&fa, &fb, &gamma(a, a, b, &id1(a)?, &f)?, &r)?;
                if left != one || right != one {
                    return fail("unit coherence", f);
                }
            }
        }
    }
    for a in &s.cells0 {
        for b in &s.cells0 {
            for c in &s.cells0 {
                for d in &s.cells0 {
                    let (fa, fb, fc, fd) = (f0(a)?, f0(b)?, f0(c)?, f0(d)?);
                    for h in ones(c, d) {
                        for g in ones(b, c) {
                            for f in ones(a, b) {
                                let (fh, ff) = (f1(c, d, &h)?, f1(a, b, &f)?);
                                let gf = s.comp1(a, b, c, &g, &f)?;
                                let hg = s.comp1(b, c, d, &h, &g)?;
                                let g_gh = gamma(b, c, d, &g, &h)?;
                                let g_fg = gamma(a, b, c, &f, &g)?;
                                let g_f_hg = gamma(a, b, d, &f, &hg)?;
                                let g_gf_h = gamma(a, c, d, &gf, &h)?;
                                let gh_f = t.rw(&fa, &fb, &fd, &g_gh, &ff)?;
                                let h_fg = t.lw(&fa, &fc, &fd, &fh, &g_fg)?;
                                let lhs = t.vcomp(&fa, &fd, &g_f_hg, &gh_f)?;
                                let rhs = t.vcomp(&fa, &fd, &g_gf_h, &h_fg)?;
                                if lhs != rhs {
                                    return fail("associativity", format!("{f}, {g}, {h}"));
                                }
                                let h_fg_dag = t.lw(&fa, &fc, &fd, &fh, &t.dagger(&fa, &fc, &g_fg)?)?;
                                let top = t.vcomp(&fa, &fd, &gh_f, &h_fg_dag)?;
                                let bottom = t.vcomp(&fa, &fd, &t.dagger(&fa, &fd, &g_f_hg)?, &g_gf_h)?;
                                if top != bottom {
                                    return fail("Frobenius axiom", format!("{f}, {g}, {h}"));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// The FEM completion built directly: 1-cells `(f, σ)` with `σ: t f ⇒ f s`,
/// and 2-cells `(f, σ) ⇒ (g, γ)` given by ambient `α: f ⇒ g s` composed
/// through the multiplication of the source monad `s`.
pub struct FemDirect;

impl CompletionKind for FemDirect {
    fn sigma_type(&self, c: Ctx, f: Cell1) -> (Cell1, Cell1) {
        (c.k.comp1(c.t.t, f), c.k.comp1(f, c.s.t))
    }

    fn one_cell_ok(&self, c: Ctx, f: Cell1, sigma: Cell2) -> bool {
        let (k, s, t) = (c.k, c.s, c.t);
        let mult = k.vcomp(sigma, k.rw(t.mu, f)) == k.chain2(&[k.lw(f, s.mu), k.rw(sigma, s.t), k.lw(t.t, sigma)]);
        let sd = k.dagger2(sigma);
        let dag = k.chain2(&[sd, k.lw(f, s.mu), k.rw(sigma, s.t)]) == k.vcomp(k.rw(t.mu, f), k.lw(t.t, sd));
        let unit = k.vcomp(sigma, k.rw(t.eta, f)) == k.lw(f, s.eta);
        mult && dag && unit
    }

    fn alpha_type(&self, c: Ctx, f: Cell1, g: Cell1) -> (Cell1, Cell1) {
        (f, c.k.comp1(g, c.s.t))
    }

    fn two_cell_ok(&self, c: Ctx, (_, sigma): (Cell1, Cell2), (g, gamma): (Cell1, Cell2), alpha: Cell2) -> bool {
        let (k, s, t) = (c.k, c.s, c.t);
        let gm = k.lw(g, s.mu);
        k.chain2(&[gm, k.rw(alpha, s.t), sigma]) == k.chain2(&[gm, k.rw(gamma, s.t), k.lw(t.t, alpha)])
    }

    fn vcomp(&self, c: Ctx, beta: Cell2, alpha: Cell2, h: Cell1) -> Cell2 {
        let k = c.k;
        k.chain2(&[k.lw(h, c.s.mu), k.rw(beta, c.s.t), alpha])
    }

    fn id2(&self, c: Ctx, f: Cell1) -> Cell2 {
        c.k.lw(f, c.s.eta)
    }

    fn dagger2(&self, c: Ctx, alpha: Cell2, _: Cell1, g: Cell1) -> Cell2 {
        let (k, s) = (c.k, c.s);
        k.chain2(&[k.rw(k.dagger2(alpha), s.t), k.lw(g, k.dagger2(s.mu)), k.lw(g, s.eta)])
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

    fn rw(&self, k: &FinDagger2Category, _: [&Monad2; 3], beta: Cell2, g2: Cell1, (f, sigma): (Cell1, Cell2)) -> Cell2 {
        k.vcomp(k.lw(g2, sigma), k.rw(beta, f))
    }
}

/// Whether the direct FEM completion coincides table-for-table with the
/// one obtained by passing through opposites and the FK completion.
pub fn fem_completion_agrees(k: &FinDagger2Category) -> Result<bool, TwoCatError> {
    let direct = build_completion(k, &FemDirect, enumerate_frobenius_monads(k))?;
    let via_op = build_fem_completion(k)?;
    Ok(direct.monads() == via_op.monads() && direct.two.to_description() == via_op.two.to_description())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lax::{monad_to_lax, validate_lax_functor, DaggerLaxFunctor};
    use crate::two_cat::enumerate_monads2;
    use crate::two_cat::fixture::{locally_discrete, sigma_z2, standard_fragment, terminal};
    use std::sync::Arc;

    #[test]
    fn direct_fem_completion_matches() {
        assert!(fem_completion_agrees(&terminal()).unwrap());
        assert!(fem_completion_agrees(&sigma_z2()).unwrap());
        assert!(fem_completion_agrees(&locally_discrete(&crate::fixtures::z2())).unwrap());
    }

    #[test]
    fn lax_verdicts_agree_on_sigma_z2_candidates() {
        let k = Arc::new(sigma_z2());
        let one = Arc::new(terminal());
        let t = k.cells1(crate::two_cat::Cell0(0), crate::two_cat::Cell0(0)).next().unwrap();
        let cells: Vec<Cell2> = k.cells2_between(t, t).collect();
        for &mu in &cells {
            for &eta in &cells {
                let lax =
                    DaggerLaxFunctor::new(one.clone(), k.clone(), vec![t.src], |_| t, |_| k.id2(t), |_, _| mu, |_| eta);
                let mut desc = monad_to_lax(&k, &Monad2::identity(&k, t.src)).unwrap().to_description();
                for row in &mut desc.gamma {
                    row[5] = k.cell2_id(mu).into();
                }
                for v in desc.delta.values_mut() {
                    *v = k.cell2_id(eta).into();
                }
                assert_eq!(lax.is_ok(), naive_lax_check(&desc).is_ok());
                assert_eq!(lax.is_ok(), validate_lax_functor(&desc).is_ok());
            }
        }
    }

    #[test]
    fn monad_lax_functors_pass_the_naive_check() {
        let sf = standard_fragment(false);
        let k = Arc::new(sf.fragment.two.clone());
        for m in enumerate_monads2(&k) {
            let l = monad_to_lax(&k, &m).unwrap();
            naive_lax_check(&l.to_description()).unwrap();
        }
    }
}
