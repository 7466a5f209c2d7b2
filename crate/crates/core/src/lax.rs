//! Dagger lax functors between finite dagger 2-categories, dagger
//! lax-natural transformations, dagger modifications and dagger lax-limits.
//!
//! Conventions: `γ_{f,g}: F(g)·F(f) ⇒ F(g·f)`, `δ_A: 1 ⇒ F(1_A)` and, for a
//! lax-natural `α: F → G`, `τ_f: G(f)·α_A ⇒ α_B·F(f)`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fincat::{validate_category, CategoryDescription, FinDaggerCategory, Mor, MorphismDecl, Obj};
use crate::search::{Budget, SearchSpaceTooLarge};
use crate::two_cat::fixture::terminal;
use crate::two_cat::{
    validate_2category, Cell0, Cell1, Cell2, Dagger2Functor, FinDagger2Category, Monad2, TwoCatError,
    TwoCategoryDescription,
};
use crate::verdict::{Verdict, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaxError {
    #[error("lax coherence `{law}` fails at {cells:?}")]
    LaxCoherenceFail { law: &'static str, cells: Vec<String> },
    #[error("Frobenius axiom fails at f = {f}, g = {g}, h = {h}")]
    FrobeniusAxiomFail { f: String, g: String, h: String },
    #[error("hom map is not a dagger functor: {law} fails at {cells:?}")]
    HomMapNotDagger { law: &'static str, cells: Vec<String> },
    #[error("coherence `{law}` fails at {cells:?}")]
    CoherenceFail { law: &'static str, cells: Vec<String> },
    #[error("ill-typed data: {0}")]
    IllTyped(String),
    #[error("source is not the terminal 2-category")]
    SourceNotTerminal,
    #[error("lax functors are not composable")]
    NotComposable,
    #[error(transparent)]
    TwoCat(Box<TwoCatError>),
    #[error(transparent)]
    Search(#[from] SearchSpaceTooLarge),
}

impl From<TwoCatError> for LaxError {
    fn from(e: TwoCatError) -> Self {
        LaxError::TwoCat(Box::new(e))
    }
}

fn ids(cells: &[&str]) -> Vec<String> {
    cells.iter().map(|s| s.to_string()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DaggerLaxFunctor {
    source: Arc<FinDagger2Category>,
    target: Arc<FinDagger2Category>,
    cells0: Vec<Cell0>,
    cells1: Vec<Vec<Cell1>>,
    cells2: Vec<Vec<Cell2>>,
    gamma: HashMap<(Cell1, Cell1), Cell2>,
    delta: Vec<Cell2>,
}

impl DaggerLaxFunctor {
    /// Tabulates the data and verifies every law: dagger hom functors,
    /// naturality of `γ`, associativity and unit coherence, and the Frobenius
    /// axiom over every composable triple.
    pub fn new(
        source: Arc<FinDagger2Category>,
        target: Arc<FinDagger2Category>,
        cells0: Vec<Cell0>,
        cell1: impl Fn(Cell1) -> Cell1,
        cell2: impl Fn(Cell2) -> Cell2,
        gamma: impl Fn(Cell1, Cell1) -> Cell2,
        delta: impl Fn(Cell0) -> Cell2,
    ) -> Result<Self, LaxError> {
        let s = &source;
        let n = s.num_cells0();
        if cells0.len() != n || cells0.iter().any(|x| x.0 >= target.num_cells0()) {
            return Err(LaxError::IllTyped("0-cell map".into()));
        }
        let mut cells1 = Vec::with_capacity(n * n);
        let mut cells2 = Vec::with_capacity(n * n);
        for a in s.cells0() {
            for b in s.cells0() {
                cells1.push(s.cells1(a, b).map(&cell1).collect());
                cells2.push(s.cells2(a, b).map(&cell2).collect());
            }
        }
        let mut gamma_table = HashMap::new();
        for a in s.cells0() {
            for b in s.cells0() {
                for c in s.cells0() {
                    for g in s.cells1(b, c) {
                        for f in s.cells1(a, b) {
                            gamma_table.insert((f, g), gamma(f, g));
                        }
                    }
                }
            }
        }
        let lax = DaggerLaxFunctor {
            delta: s.cells0().map(delta).collect(),
            source,
            target,
            cells0,
            cells1,
            cells2,
            gamma: gamma_table,
        };
        lax.check()?;
        Ok(lax)
    }

    /// A strict dagger 2-functor, with identity comparisons.
    pub fn from_2functor(
        source: Arc<FinDagger2Category>,
        target: Arc<FinDagger2Category>,
        f: &Dagger2Functor,
    ) -> Result<Self, LaxError> {
        let t = target.clone();
        let s = source.clone();
        DaggerLaxFunctor::new(
            source,
            target,
            s.cells0().map(|a| f.cell0(a)).collect(),
            |x| f.cell1(x),
            |x| f.cell2(x),
            |x, y| t.id2(t.comp1(f.cell1(y), f.cell1(x))),
            |a| t.id2(t.id1(f.cell0(a))),
        )
    }

    /// `Δ_C`: everything sent to `C` and its identities.
    pub fn constant(source: Arc<FinDagger2Category>, target: Arc<FinDagger2Category>, c: Cell0) -> Self {
        let t = target.clone();
        let one = t.id1(c);
        let s = source.clone();
        DaggerLaxFunctor::new(
            source,
            target,
            s.cells0().map(|_| c).collect(),
            |_| one,
            |_| t.id2(one),
            |_, _| t.id2(one),
            |_| t.id2(one),
        )
        .expect("constant 2-functors are lax functors")
    }

    pub fn source(&self) -> &Arc<FinDagger2Category> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinDagger2Category> {
        &self.target
    }

    pub fn cell0(&self, a: Cell0) -> Cell0 {
        self.cells0[a.0]
    }

    pub fn cell1(&self, f: Cell1) -> Cell1 {
        self.cells1[f.src.0 * self.source.num_cells0() + f.tgt.0][f.obj.index()]
    }

    pub fn cell2(&self, a: Cell2) -> Cell2 {
        self.cells2[a.src.0 * self.source.num_cells0() + a.tgt.0][a.mor.index()]
    }

    /// `γ_{f,g}: F(g)·F(f) ⇒ F(g·f)`.
    pub fn gamma(&self, f: Cell1, g: Cell1) -> Cell2 {
        self.gamma[&(f, g)]
    }

    pub fn delta(&self, a: Cell0) -> Cell2 {
        self.delta[a.0]
    }

    fn check(&self) -> Result<(), LaxError> {
        let (s, t) = (&*self.source, &*self.target);
        let hom_fail = |law, cells| Err(LaxError::HomMapNotDagger { law, cells });
        for a in s.cells0() {
            for b in s.cells0() {
                let (fa, fb) = (self.cell0(a), self.cell0(b));
                for f in s.cells1(a, b) {
                    let x = self.cell1(f);
                    if (x.src, x.tgt) != (fa, fb) || x.obj.index() >= t.hom(fa, fb).num_objects() {
                        return Err(LaxError::IllTyped(format!("image of 1-cell {}", s.cell1_id(f))));
                    }
                    if self.cell2(s.id2(f)) != t.id2(x) {
                        return hom_fail("identities", ids(&[s.cell1_id(f)]));
                    }
                }
                for al in s.cells2(a, b) {
                    let x = self.cell2(al);
                    if (x.src, x.tgt) != (fa, fb)
                        || x.mor.index() >= t.hom(fa, fb).num_morphisms()
                        || t.src2(x) != self.cell1(s.src2(al))
                        || t.tgt2(x) != self.cell1(s.tgt2(al))
                    {
                        return Err(LaxError::IllTyped(format!("image of 2-cell {}", s.cell2_id(al))));
                    }
                    if self.cell2(s.dagger2(al)) != t.dagger2(x) {
                        return hom_fail("dagger", ids(&[s.cell2_id(al)]));
                    }
                    for be in s.cells2(a, b) {
                        if let Some(v) = s.try_vcomp(be, al) {
                            if self.cell2(v) != t.vcomp(self.cell2(be), x) {
                                return hom_fail("composition", ids(&[s.cell2_id(be), s.cell2_id(al)]));
                            }
                        }
                    }
                }
            }
        }
        let coh = |law, cells| Err(LaxError::LaxCoherenceFail { law, cells });
        for a in s.cells0() {
            let d = self.delta(a);
            let fa = self.cell0(a);
            if (d.src, d.tgt) != (fa, fa) || t.src2(d) != t.id1(fa) || t.tgt2(d) != self.cell1(s.id1(a)) {
                return Err(LaxError::IllTyped(format!("δ at {}", s.cell0_id(a))));
            }
        }
        let triples: Vec<(Cell0, Cell0, Cell0)> =
            s.cells0().flat_map(|a| s.cells0().flat_map(move |b| s.cells0().map(move |c| (a, b, c)))).collect();
        for &(a, b, c) in &triples {
            for g in s.cells1(b, c) {
                for f in s.cells1(a, b) {
                    let x = self.gamma(f, g);
                    let (fa, fc) = (self.cell0(a), self.cell0(c));
                    if (x.src, x.tgt) != (fa, fc)
                        || t.src2(x) != t.comp1(self.cell1(g), self.cell1(f))
                        || t.tgt2(x) != self.cell1(s.comp1(g, f))
                    {
                        return Err(LaxError::IllTyped(format!("γ at ({}, {})", s.cell1_id(f), s.cell1_id(g))));
                    }
                }
            }
        }
        // Naturality of γ.
        for &(a, b, c) in &triples {
            for psi in s.cells2(b, c) {
                for phi in s.cells2(a, b) {
                    let (f, f2, g, g2) = (s.src2(phi), s.tgt2(phi), s.src2(psi), s.tgt2(psi));
                    let lhs = t.vcomp(self.gamma(f2, g2), t.hcomp(self.cell2(psi), self.cell2(phi)));
                    let rhs = t.vcomp(self.cell2(s.hcomp(psi, phi)), self.gamma(f, g));
                    if lhs != rhs {
                        return coh("naturality of γ", ids(&[s.cell2_id(psi), s.cell2_id(phi)]));
                    }
                }
            }
        }
        // Unit coherence.
        for a in s.cells0() {
            for b in s.cells0() {
                for f in s.cells1(a, b) {
                    let ff = self.cell1(f);
                    let left = t.vcomp(self.gamma(f, s.id1(b)), t.rw(self.delta(b), ff));
                    let right = t.vcomp(self.gamma(s.id1(a), f), t.lw(ff, self.delta(a)));
                    if left != t.id2(ff) || right != t.id2(ff) {
                        return coh("unit", ids(&[s.cell1_id(f)]));
                    }
                }
            }
        }
        // Associativity and the Frobenius axiom.
        for &(a, b, c) in &triples {
            for d in s.cells0() {
                for h in s.cells1(c, d) {
                    for g in s.cells1(b, c) {
                        for f in s.cells1(a, b) {
                            let (fh, ff) = (self.cell1(h), self.cell1(f));
                            let (gf, hg) = (s.comp1(g, f), s.comp1(h, g));
                            let lhs = t.vcomp(self.gamma(f, hg), t.rw(self.gamma(g, h), ff));
                            let rhs = t.vcomp(self.gamma(gf, h), t.lw(fh, self.gamma(f, g)));
                            if lhs != rhs {
                                return coh("associativity", ids(&[s.cell1_id(f), s.cell1_id(g), s.cell1_id(h)]));
                            }
                            let top = t.vcomp(t.rw(self.gamma(g, h), ff), t.lw(fh, t.dagger2(self.gamma(f, g))));
                            let bottom = t.vcomp(t.dagger2(self.gamma(f, hg)), self.gamma(gf, h));
                            if top != bottom {
                                return Err(LaxError::FrobeniusAxiomFail {
                                    f: s.cell1_id(f).into(),
                                    g: s.cell1_id(g).into(),
                                    h: s.cell1_id(h).into(),
                                });
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_description(&self) -> LaxFunctorDescription {
        let (s, t) = (&*self.source, &*self.target);
        let mut desc =
            LaxFunctorDescription { source: s.to_description(), target: t.to_description(), ..Default::default() };
        for a in s.cells0() {
            desc.cells0.insert(s.cell0_id(a).into(), t.cell0_id(self.cell0(a)).into());
            desc.delta.insert(s.cell0_id(a).into(), t.cell2_id(self.delta(a)).into());
            for b in s.cells0() {
                let (sa, sb) = (s.cell0_id(a).to_string(), s.cell0_id(b).to_string());
                for f in s.cells1(a, b) {
                    desc.cells1.push([sa.clone(), sb.clone(), s.cell1_id(f).into(), t.cell1_id(self.cell1(f)).into()]);
                }
                for al in s.cells2(a, b) {
                    desc.cells2.push([
                        sa.clone(),
                        sb.clone(),
                        s.cell2_id(al).into(),
                        t.cell2_id(self.cell2(al)).into(),
                    ]);
                }
                for c in s.cells0() {
                    for g in s.cells1(b, c) {
                        for f in s.cells1(a, b) {
                            desc.gamma.push([
                                sa.clone(),
                                sb.clone(),
                                s.cell0_id(c).into(),
                                s.cell1_id(f).into(),
                                s.cell1_id(g).into(),
                                t.cell2_id(self.gamma(f, g)).into(),
                            ]);
                        }
                    }
                }
            }
        }
        desc
    }
}

/// Rows: `cells1` `[A, B, f, F f]`, `cells2` `[A, B, α, F α]`, `gamma`
/// `[A, B, C, f, g, γ_{f,g}]`; `cells0` and `delta` are keyed by source 0-cell.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaxFunctorDescription {
    pub source: TwoCategoryDescription,
    pub target: TwoCategoryDescription,
    pub cells0: BTreeMap<String, String>,
    pub cells1: Vec<[String; 4]>,
    pub cells2: Vec<[String; 4]>,
    pub gamma: Vec<[String; 6]>,
    pub delta: BTreeMap<String, String>,
}

pub fn validate_lax_functor(desc: &LaxFunctorDescription) -> Result<DaggerLaxFunctor, LaxError> {
    let s = Arc::new(validate_2category(&desc.source)?);
    let t = Arc::new(validate_2category(&desc.target)?);
    let dangling = |kind: &'static str, id: &str| TwoCatError::DanglingReference { kind, id: id.to_string() };
    let cell0 = |k: &FinDagger2Category, id: &str| k.find_cell0(id).ok_or_else(|| dangling("0-cell", id));
    let mut cells0 = Vec::new();
    for a in s.cells0() {
        let x = desc
            .cells0
            .get(s.cell0_id(a))
            .ok_or_else(|| LaxError::IllTyped(format!("no image for {}", s.cell0_id(a))))?;
        cells0.push(cell0(&t, x)?);
    }
    let image0 = |a: Cell0| cells0[a.0];
    let mut c1 = HashMap::new();
    for [a, b, f, x] in &desc.cells1 {
        let (a, b) = (cell0(&s, a)?, cell0(&s, b)?);
        let f = s.find_cell1(a, b, f).ok_or_else(|| dangling("1-cell", f))?;
        let x = t.find_cell1(image0(a), image0(b), x).ok_or_else(|| dangling("1-cell", x))?;
        c1.insert(f, x);
    }
    let mut c2 = HashMap::new();
    for [a, b, al, x] in &desc.cells2 {
        let (a, b) = (cell0(&s, a)?, cell0(&s, b)?);
        let al = s.find_cell2(a, b, al).ok_or_else(|| dangling("2-cell", al))?;
        let x = t.find_cell2(image0(a), image0(b), x).ok_or_else(|| dangling("2-cell", x))?;
        c2.insert(al, x);
    }
    let mut gm = HashMap::new();
    for [a, b, c, f, g, x] in &desc.gamma {
        let (a, b, c) = (cell0(&s, a)?, cell0(&s, b)?, cell0(&s, c)?);
        let f = s.find_cell1(a, b, f).ok_or_else(|| dangling("1-cell", f))?;
        let g = s.find_cell1(b, c, g).ok_or_else(|| dangling("1-cell", g))?;
        let x = t.find_cell2(image0(a), image0(c), x).ok_or_else(|| dangling("2-cell", x))?;
        gm.insert((f, g), x);
    }
    let mut dl = Vec::new();
    for a in s.cells0() {
        let x =
            desc.delta.get(s.cell0_id(a)).ok_or_else(|| LaxError::IllTyped(format!("no δ for {}", s.cell0_id(a))))?;
        dl.push(t.find_cell2(image0(a), image0(a), x).ok_or_else(|| dangling("2-cell", x))?);
    }
    for a in s.cells0() {
        for b in s.cells0() {
            for f in s.cells1(a, b) {
                if !c1.contains_key(&f) {
                    return Err(LaxError::IllTyped(format!("no image for 1-cell {}", s.cell1_id(f))));
                }
                for c in s.cells0() {
                    for g in s.cells1(b, c) {
                        if !gm.contains_key(&(f, g)) {
                            return Err(LaxError::IllTyped(format!("no γ for ({}, {})", s.cell1_id(f), s.cell1_id(g))));
                        }
                    }
                }
            }
            for al in s.cells2(a, b) {
                if !c2.contains_key(&al) {
                    return Err(LaxError::IllTyped(format!("no image for 2-cell {}", s.cell2_id(al))));
                }
            }
        }
    }
    DaggerLaxFunctor::new(s, t, cells0, |f| c1[&f], |a| c2[&a], |f, g| gm[&(f, g)], |a| dl[a.0])
}

/// The lax functor `𝟙 → K` with `F(*) = D`, `F(1) = t`, `γ = μ`, `δ = η`.
pub fn monad_to_lax(k: &Arc<FinDagger2Category>, m: &Monad2) -> Result<DaggerLaxFunctor, LaxError> {
    let one = Arc::new(terminal());
    DaggerLaxFunctor::new(one, k.clone(), vec![m.d], |_| m.t, |_| k.id2(m.t), |_, _| m.mu, |_| m.eta)
}

fn is_terminal(k: &FinDagger2Category) -> bool {
    k.num_cells0() == 1 && {
        let h = k.hom(Cell0(0), Cell0(0));
        h.num_objects() == 1 && h.num_morphisms() == 1
    }
}

pub fn lax_to_monad(l: &DaggerLaxFunctor) -> Result<Monad2, LaxError> {
    let s = l.source();
    if !is_terminal(s) {
        return Err(LaxError::SourceNotTerminal);
    }
    let star = Cell0(0);
    let one = s.id1(star);
    Ok(Monad2::new(l.target(), l.cell1(one), l.gamma(one, one), l.delta(star))?)
}

/// `G·F`, with `γ^{GF}_{f,g} = G(γ^F_{f,g})·γ^G_{Ff,Fg}` and
/// `δ^{GF}_A = G(δ^F_A)·δ^G_{FA}`; all laws are re-verified.
pub fn compose_lax(g: &DaggerLaxFunctor, f: &DaggerLaxFunctor) -> Result<DaggerLaxFunctor, LaxError> {
    if **f.target() != **g.source() {
        return Err(LaxError::NotComposable);
    }
    let t = g.target().clone();
    DaggerLaxFunctor::new(
        f.source().clone(),
        t.clone(),
        f.source().cells0().map(|a| g.cell0(f.cell0(a))).collect(),
        |x| g.cell1(f.cell1(x)),
        |x| g.cell2(f.cell2(x)),
        |x, y| t.vcomp(g.cell2(f.gamma(x, y)), g.gamma(f.cell1(x), f.cell1(y))),
        |a| t.vcomp(g.cell2(f.delta(a)), g.delta(f.cell0(a))),
    )
}

/// A lax-natural transformation `F → G` between lax functors with the same
/// source and target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DaggerLaxNat {
    components: Vec<Cell1>,
    tau: HashMap<Cell1, Cell2>,
}

impl DaggerLaxNat {
    pub fn component(&self, a: Cell0) -> Cell1 {
        self.components[a.0]
    }

    /// `τ_f: G(f)·α_A ⇒ α_B·F(f)`.
    pub fn tau(&self, f: Cell1) -> Cell2 {
        self.tau[&f]
    }

    fn label(&self, s: &FinDagger2Category, t: &FinDagger2Category) -> String {
        let comps: Vec<String> = s.cells0().map(|a| t.cell1_id(self.component(a)).to_string()).collect();
        let mut taus = Vec::new();
        for a in s.cells0() {
            for b in s.cells0() {
                taus.extend(s.cells1(a, b).map(|f| t.cell2_id(self.tau(f)).to_string()));
            }
        }
        format!("<{}|{}>", comps.join(","), taus.join(","))
    }
}

fn all_cells1(s: &FinDagger2Category) -> Vec<Cell1> {
    s.cells0().flat_map(|a| s.cells0().flat_map(move |b| s.cells1(a, b))).collect()
}

/// Checks typing, the classical naturality, composition and unit axioms,
/// and the dagger coherence square.
pub fn validate_lax_nat(
    f: &DaggerLaxFunctor,
    g: &DaggerLaxFunctor,
    components: Vec<Cell1>,
    tau: impl Fn(Cell1) -> Cell2,
) -> Result<DaggerLaxNat, LaxError> {
    let (s, t) = (&**f.source(), &**f.target());
    if **g.source() != *s || **g.target() != *t || components.len() != s.num_cells0() {
        return Err(LaxError::IllTyped("lax functors are not parallel".into()));
    }
    let tau: HashMap<Cell1, Cell2> = all_cells1(s).into_iter().map(|x| (x, tau(x))).collect();
    let nat = DaggerLaxNat { components, tau };
    check_lax_nat(f, g, &nat)?;
    Ok(nat)
}

fn check_lax_nat(f: &DaggerLaxFunctor, g: &DaggerLaxFunctor, n: &DaggerLaxNat) -> Result<(), LaxError> {
    let (s, t) = (&**f.source(), &**f.target());
    let fail = |law, cells: Vec<&str>| Err(LaxError::CoherenceFail { law, cells: ids(&cells) });
    for a in s.cells0() {
        let x = n.component(a);
        if (x.src, x.tgt) != (f.cell0(a), g.cell0(a)) || x.obj.index() >= t.hom(x.src, x.tgt).num_objects() {
            return Err(LaxError::IllTyped(format!("component at {}", s.cell0_id(a))));
        }
    }
    for h in all_cells1(s) {
        let x = n.tau(h);
        let (a, b) = (h.src, h.tgt);
        if (x.src, x.tgt) != (f.cell0(a), g.cell0(b))
            || t.src2(x) != t.comp1(g.cell1(h), n.component(a))
            || t.tgt2(x) != t.comp1(n.component(b), f.cell1(h))
        {
            return Err(LaxError::IllTyped(format!("τ at {}", s.cell1_id(h))));
        }
    }
    for a in s.cells0() {
        for b in s.cells0() {
            let (aa, ab) = (n.component(a), n.component(b));
            for phi in s.cells2(a, b) {
                let (h, h2) = (s.src2(phi), s.tgt2(phi));
                if t.vcomp(n.tau(h2), t.rw(g.cell2(phi), aa)) != t.vcomp(t.lw(ab, f.cell2(phi)), n.tau(h)) {
                    return fail("naturality of τ", vec![s.cell2_id(phi)]);
                }
            }
        }
        let aa = n.component(a);
        let id = s.id1(a);
        if t.vcomp(n.tau(id), t.rw(g.delta(a), aa)) != t.lw(aa, f.delta(a)) {
            return fail("unit", vec![s.cell0_id(a)]);
        }
    }
    for a in s.cells0() {
        for b in s.cells0() {
            for c in s.cells0() {
                for y in s.cells1(b, c) {
                    for x in s.cells1(a, b) {
                        let (aa, ac) = (n.component(a), n.component(c));
                        let (gy, fx) = (g.cell1(y), f.cell1(x));
                        let yx = s.comp1(y, x);
                        let lhs = t.vcomp(n.tau(yx), t.rw(g.gamma(x, y), aa));
                        let rhs = t.chain2(&[t.lw(ac, f.gamma(x, y)), t.rw(n.tau(y), fx), t.lw(gy, n.tau(x))]);
                        if lhs != rhs {
                            return fail("composition", vec![s.cell1_id(x), s.cell1_id(y)]);
                        }
                        let down = t.chain2(&[t.dagger2(n.tau(yx)), t.lw(ac, f.gamma(x, y)), t.rw(n.tau(y), fx)]);
                        let across = t.vcomp(t.rw(g.gamma(x, y), aa), t.lw(gy, t.dagger2(n.tau(x))));
                        if down != across {
                            return fail("dagger coherence", vec![s.cell1_id(x), s.cell1_id(y)]);
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// `(β·α)_A = β_A·α_A`, `τ_f = (1_{β_B} ∗ τ^α_f)·(τ^β_f ∗ 1_{α_A})`.
pub fn vcomp_lax_nat(
    f: &DaggerLaxFunctor,
    h: &DaggerLaxFunctor,
    beta: &DaggerLaxNat,
    alpha: &DaggerLaxNat,
) -> Result<DaggerLaxNat, LaxError> {
    let (s, t) = (&**f.source(), &**f.target());
    let comps = s.cells0().map(|a| t.comp1(beta.component(a), alpha.component(a))).collect();
    validate_lax_nat(f, h, comps, |x| {
        let (a, b) = (x.src, x.tgt);
        t.vcomp(t.lw(beta.component(b), alpha.tau(x)), t.rw(beta.tau(x), alpha.component(a)))
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DaggerModification {
    components: Vec<Cell2>,
}

impl DaggerModification {
    pub fn component(&self, a: Cell0) -> Cell2 {
        self.components[a.0]
    }
}

/// Checks the classical modification axiom and the dagger square for every
/// 2-cell of the source.
pub fn validate_modification(
    f: &DaggerLaxFunctor,
    g: &DaggerLaxFunctor,
    alpha: &DaggerLaxNat,
    beta: &DaggerLaxNat,
    components: Vec<Cell2>,
) -> Result<DaggerModification, LaxError> {
    let (s, t) = (&**f.source(), &**f.target());
    let fail = |law, cells: Vec<&str>| Err(LaxError::CoherenceFail { law, cells: ids(&cells) });
    if components.len() != s.num_cells0() {
        return Err(LaxError::IllTyped("modification components".into()));
    }
    for a in s.cells0() {
        let x = components[a.0];
        let (aa, ba) = (alpha.component(a), beta.component(a));
        if (x.src, x.tgt) != (aa.src, aa.tgt) || t.src2(x) != aa || t.tgt2(x) != ba {
            return Err(LaxError::IllTyped(format!("modification component at {}", s.cell0_id(a))));
        }
    }
    for h in all_cells1(s) {
        let (a, b) = (h.src, h.tgt);
        let lhs = t.vcomp(beta.tau(h), t.lw(g.cell1(h), components[a.0]));
        let rhs = t.vcomp(t.rw(components[b.0], f.cell1(h)), alpha.tau(h));
        if lhs != rhs {
            return fail("modification", vec![s.cell1_id(h)]);
        }
    }
    for a in s.cells0() {
        for b in s.cells0() {
            for phi in s.cells2(a, b) {
                let (h, h2) = (s.src2(phi), s.tgt2(phi));
                let top = t.vcomp(alpha.tau(h), t.hcomp(t.dagger2(g.cell2(phi)), t.dagger2(components[a.0])));
                let bottom = t.vcomp(t.hcomp(t.dagger2(components[b.0]), t.dagger2(f.cell2(phi))), beta.tau(h2));
                if top != bottom {
                    return fail("dagger modification", vec![s.cell2_id(phi)]);
                }
            }
        }
    }
    Ok(DaggerModification { components })
}

/// Componentwise dagger, re-validated as a modification `β ⇝ α`.
pub fn modification_dagger(
    f: &DaggerLaxFunctor,
    g: &DaggerLaxFunctor,
    alpha: &DaggerLaxNat,
    beta: &DaggerLaxNat,
    xi: &DaggerModification,
) -> Result<DaggerModification, LaxError> {
    let t = f.target();
    let comps = xi.components.iter().map(|&x| t.dagger2(x)).collect();
    validate_modification(f, g, beta, alpha, comps)
}

fn product<T: Clone>(choices: &[Vec<T>], budget: &mut Budget) -> Result<Vec<Vec<T>>, SearchSpaceTooLarge> {
    let mut out = vec![Vec::new()];
    for options in choices {
        let mut next = Vec::new();
        for prefix in &out {
            for o in options {
                budget.tick()?;
                let mut v = prefix.clone();
                v.push(o.clone());
                next.push(v);
            }
        }
        out = next;
    }
    Ok(out)
}

/// Every dagger lax-natural transformation `F → G`, in the order of the
/// choice sequence (components by 0-cell, then `τ` by 1-cell).
pub fn enumerate_lax_nats(
    f: &DaggerLaxFunctor,
    g: &DaggerLaxFunctor,
    budget: &mut Budget,
) -> Result<Vec<DaggerLaxNat>, LaxError> {
    let (s, t) = (f.source().clone(), f.target().clone());
    let comp_choices: Vec<Vec<Cell1>> = s.cells0().map(|a| t.cells1(f.cell0(a), g.cell0(a)).collect()).collect();
    let cells = all_cells1(&s);
    let mut out = Vec::new();
    for comps in product(&comp_choices, budget)? {
        let tau_choices: Vec<Vec<Cell2>> = cells
            .iter()
            .map(|&h| {
                let src = t.comp1(g.cell1(h), comps[h.src.0]);
                let tgt = t.comp1(comps[h.tgt.0], f.cell1(h));
                t.cells2_between(src, tgt).collect()
            })
            .collect();
        for taus in product(&tau_choices, budget)? {
            let tau: HashMap<Cell1, Cell2> = cells.iter().copied().zip(taus).collect();
            let n = DaggerLaxNat { components: comps.clone(), tau };
            if check_lax_nat(f, g, &n).is_ok() {
                out.push(n);
            }
        }
    }
    Ok(out)
}

/// `DagLax[F, G]` as a dagger category.
pub struct LaxHom {
    pub category: Arc<FinDaggerCategory>,
    nats: Vec<DaggerLaxNat>,
    mods: Vec<DaggerModification>,
}

impl LaxHom {
    pub fn nat(&self, x: Obj) -> &DaggerLaxNat {
        &self.nats[x.index()]
    }

    pub fn modification(&self, m: Mor) -> &DaggerModification {
        &self.mods[m.index()]
    }

    pub fn find_nat(&self, n: &DaggerLaxNat) -> Option<Obj> {
        self.nats.iter().position(|x| x == n).map(Obj)
    }

    pub fn find_modification(&self, src: Obj, tgt: Obj, m: &DaggerModification) -> Option<Mor> {
        self.category.hom(src, tgt).iter().copied().find(|&x| self.mods[x.index()] == *m)
    }
}

pub fn lax_hom(f: &DaggerLaxFunctor, g: &DaggerLaxFunctor, budget: &mut Budget) -> Result<LaxHom, LaxError> {
    let (s, t) = (f.source().clone(), f.target().clone());
    let nats = enumerate_lax_nats(f, g, budget)?;
    let labels: Vec<String> = nats.iter().map(|n| n.label(&s, &t)).collect();
    let mut mods = Vec::new();
    for (i, a) in nats.iter().enumerate() {
        for (j, b) in nats.iter().enumerate() {
            let choices: Vec<Vec<Cell2>> =
                s.cells0().map(|x| t.cells2_between(a.component(x), b.component(x)).collect()).collect();
            for comps in product(&choices, budget)? {
                if let Ok(m) = validate_modification(f, g, a, b, comps) {
                    mods.push((i, j, m));
                }
            }
        }
    }
    let mod_label = |(i, j, m): &(usize, usize, DaggerModification)| {
        let comps: Vec<&str> = m.components.iter().map(|&x| t.cell2_id(x)).collect();
        format!("[{}]:{}->{}", comps.join(","), labels[*i], labels[*j])
    };
    let mod_labels: Vec<String> = mods.iter().map(mod_label).collect();
    let pos: HashMap<(usize, usize, Vec<Cell2>), usize> =
        mods.iter().enumerate().map(|(k, (i, j, m))| ((*i, *j, m.components.clone()), k)).collect();
    let mut desc = CategoryDescription { objects: labels.clone(), ..Default::default() };
    for (k, (i, j, m)) in mods.iter().enumerate() {
        desc.morphisms.push(MorphismDecl {
            id: mod_labels[k].clone(),
            src: labels[*i].clone(),
            tgt: labels[*j].clone(),
        });
        let dag: Vec<Cell2> = m.components.iter().map(|&x| t.dagger2(x)).collect();
        let d = pos.get(&(*j, *i, dag)).ok_or_else(|| LaxError::CoherenceFail {
            law: "dagger of a modification",
            cells: vec![mod_labels[k].clone()],
        })?;
        desc.dagger.insert(mod_labels[k].clone(), mod_labels[*d].clone());
        if i == j && m.components.iter().all(|&x| t.src2(x) == t.tgt2(x) && t.id2(t.src2(x)) == x) {
            desc.identities.insert(labels[*i].clone(), mod_labels[k].clone());
        }
    }
    for (k1, (i, j, m)) in mods.iter().enumerate() {
        for (k2, (j2, l, m2)) in mods.iter().enumerate() {
            if j != j2 {
                continue;
            }
            let comps: Vec<Cell2> = m.components.iter().zip(&m2.components).map(|(&x, &y)| t.vcomp(y, x)).collect();
            let c = pos.get(&(*i, *l, comps)).ok_or_else(|| LaxError::CoherenceFail {
                law: "composite of modifications",
                cells: vec![mod_labels[k2].clone(), mod_labels[k1].clone()],
            })?;
            desc.composition.push([mod_labels[k2].clone(), mod_labels[k1].clone(), mod_labels[*c].clone()]);
        }
    }
    let category = Arc::new(
        validate_category(&desc)
            .map_err(|e| LaxError::CoherenceFail { law: "DagLax hom", cells: vec![e.to_string()] })?,
    );
    let mut ordered_nats = nats.clone();
    for (i, n) in nats.into_iter().enumerate() {
        ordered_nats[category.find_object(&labels[i]).unwrap().index()] = n;
    }
    let mut ordered_mods: Vec<DaggerModification> = mods.iter().map(|(_, _, m)| m.clone()).collect();
    for (k, (_, _, m)) in mods.into_iter().enumerate() {
        ordered_mods[category.find_morphism(&mod_labels[k]).unwrap().index()] = m;
    }
    Ok(LaxHom { category, nats: ordered_nats, mods: ordered_mods })
}

/// `DagLax[Δ_C, F]`.
pub fn daglax_hom(c: Cell0, f: &DaggerLaxFunctor, budget: &mut Budget) -> Result<LaxHom, LaxError> {
    let delta = DaggerLaxFunctor::constant(f.source().clone(), f.target().clone(), c);
    lax_hom(&delta, f, budget)
}

/// For every 0-cell `C`, composition with `π` must be a strict isomorphism
/// of dagger categories `K(C, L) → DagLax[Δ_C, F]`.
pub fn check_dagger_lax_limit(
    f: &DaggerLaxFunctor,
    l: Cell0,
    pi: &DaggerLaxNat,
    budget: &mut Budget,
) -> Result<Verdict, LaxError> {
    let (s, t) = (f.source().clone(), f.target().clone());
    let delta_l = DaggerLaxFunctor::constant(s.clone(), t.clone(), l);
    check_lax_nat(&delta_l, f, pi)?;
    let fail = |cells: Vec<String>| Ok(Verdict::Fail(Witness::new("lax-limit", cells)));
    for c in t.cells0() {
        let hom = daglax_hom(c, f, budget)?;
        let mut image = Vec::new();
        for n in t.cells1(c, l) {
            let nat = DaggerLaxNat {
                components: s.cells0().map(|a| t.comp1(pi.component(a), n)).collect(),
                tau: all_cells1(&s).into_iter().map(|h| (h, t.rw(pi.tau(h), n))).collect(),
            };
            match hom.find_nat(&nat) {
                Some(x) => image.push(x),
                None => return fail(vec![t.cell0_id(c).into(), t.cell1_id(n).into()]),
            }
        }
        let mut distinct = image.clone();
        distinct.sort();
        distinct.dedup();
        if distinct.len() != image.len() || image.len() != hom.category.num_objects() {
            return fail(vec![
                t.cell0_id(c).into(),
                format!("{} 1-cells into {}", image.len(), t.cell0_id(l)),
                format!("{} lax-naturals", hom.category.num_objects()),
            ]);
        }
        let mut mors = Vec::new();
        for sigma in t.cells2(c, l) {
            let m = DaggerModification { components: s.cells0().map(|a| t.lw(pi.component(a), sigma)).collect() };
            let (p, q) = (image[t.src2(sigma).obj.index()], image[t.tgt2(sigma).obj.index()]);
            match hom.find_modification(p, q, &m) {
                Some(x) => mors.push(x),
                None => return fail(vec![t.cell0_id(c).into(), t.cell2_id(sigma).into()]),
            }
        }
        let mut distinct = mors.clone();
        distinct.sort();
        distinct.dedup();
        if distinct.len() != mors.len() || mors.len() != hom.category.num_morphisms() {
            return fail(vec![t.cell0_id(c).into(), "2-cells".into()]);
        }
        let source = t.hom(c, l).clone();
        if crate::functor::DaggerFunctor::new(source, hom.category.clone(), image, mors).is_err() {
            return fail(vec![t.cell0_id(c).into(), "not a dagger functor".into()]);
        }
    }
    Ok(Verdict::Pass)
}

/// `(u, ξ)` as a lax-natural `Δ_E → F` for `F` the lax functor of a monad.
pub fn lax_cone(f: &DaggerLaxFunctor, u: Cell1, xi: Cell2) -> Result<DaggerLaxNat, LaxError> {
    let delta = DaggerLaxFunctor::constant(f.source().clone(), f.target().clone(), u.src);
    validate_lax_nat(&delta, f, vec![u], |_| xi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::two_cat::fixture::{sigma_z2, standard_fragment};
    use crate::two_cat::{build_dfmnd, completion_hom, enumerate_monads2, fem_object_check, Dfmnd};

    #[test]
    fn monads_are_lax_functors_from_the_terminal_2category() {
        let k = Arc::new(sigma_z2());
        for m in enumerate_monads2(&k) {
            let l = monad_to_lax(&k, &m).unwrap();
            assert_eq!(lax_to_monad(&l).unwrap(), m);
        }
        let ts = enumerate_monads2(&k).into_iter().find(|m| !m.is_identity(&k)).unwrap();
        let one = Arc::new(terminal());
        let bad =
            DaggerLaxFunctor::new(one, k.clone(), vec![ts.d], |_| ts.t, |_| k.id2(ts.t), |_, _| ts.mu, |_| k.id2(ts.t));
        assert!(matches!(bad, Err(LaxError::LaxCoherenceFail { law: "unit", .. })));
    }

    #[test]
    fn frobenius_axiom_matches_the_frobenius_law() {
        let fragment = standard_fragment(false).fragment.two;
        for k in [sigma_z2(), fragment, crate::two_cat::fixture::locally_discrete(&crate::fixtures::rel2())] {
            let k = Arc::new(k);
            for m in enumerate_monads2(&k) {
                match monad_to_lax(&k, &m) {
                    Ok(_) => assert!(m.frobenius, "{}", m.label(&k)),
                    Err(e) => assert!(!m.frobenius && matches!(e, LaxError::FrobeniusAxiomFail { .. }), "{e}"),
                }
            }
        }
    }

    #[test]
    fn composing_with_identity_2functor() {
        let k = Arc::new(sigma_z2());
        let id = DaggerLaxFunctor::from_2functor(k.clone(), k.clone(), &Dagger2Functor::identity(&k)).unwrap();
        for m in enumerate_monads2(&k) {
            let l = monad_to_lax(&k, &m).unwrap();
            assert_eq!(compose_lax(&id, &l).unwrap(), l);
        }
    }

    #[test]
    fn lax_naturals_between_monads_are_monad_morphisms() {
        let k = Arc::new(sigma_z2());
        let dfmnd = build_dfmnd(&k).unwrap();
        for s in dfmnd.monads() {
            for t in dfmnd.monads() {
                let (ls, lt) = (monad_to_lax(&k, s).unwrap(), monad_to_lax(&k, t).unwrap());
                let nats = enumerate_lax_nats(&ls, &lt, &mut Budget::default()).unwrap();
                let hom = completion_hom(&k, &Dfmnd, s, t).unwrap();
                assert_eq!(nats.len(), hom.one_cells().len());
                let star = Cell0(0);
                let one = terminal().id1(star);
                for n in &nats {
                    assert!(hom.find_one_cell(n.component(star), n.tau(one)).is_some());
                }
            }
        }
    }

    #[test]
    fn fem_object_is_a_lax_limit() {
        let sf = standard_fragment(false);
        let fr = &sf.fragment;
        let k = Arc::new(fr.two.clone());
        let m = fr.monad_of(&sf.ts).unwrap();
        let w = fr.witness_of(&sf.fem).unwrap();
        let l = monad_to_lax(&k, &m).unwrap();
        let pi = lax_cone(&l, w.u, w.xi).unwrap();
        let mut budget = Budget::default();
        assert_eq!(check_dagger_lax_limit(&l, w.e, &pi, &mut budget).unwrap(), Verdict::Pass);
        assert!(fem_object_check(&k, &m, &w).passed());

        let one = k.find_cell0("ONE").unwrap();
        let candidates: Vec<_> = k.cells1(one, m.d).collect();
        let any_false = candidates.iter().all(|&u| {
            k.cells2_between(k.comp1(m.t, u), u).all(|xi| match lax_cone(&l, u, xi) {
                Ok(pi) => !check_dagger_lax_limit(&l, one, &pi, &mut Budget::default()).unwrap().passed(),
                Err(_) => true,
            })
        });
        assert!(any_false);
    }
}
