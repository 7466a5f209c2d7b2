//! Finite strict dagger 2-categories stored as hom dagger categories plus
//! 1-cell composition and the two one-sided whiskering tables. Horizontal
//! composition of 2-cells is derived from the whiskerings, and interchange is
//! a checked law rather than an assumption.

mod completions;
mod fem_object;
pub mod fixture;
mod functor2;

pub use completions::{
    build_completion, build_dfmnd, build_fem_completion, build_fk_completion, completion_hom, inclusion_fully_faithful,
    Completion, CompletionHom, CompletionKind, Ctx, Dfmnd, Fk,
};
pub use fem_object::{
    eta_commutation_check, fem_object_check, fem_pairs_correspondence, find_fem_witnesses, universal2_check,
    Adjunction2, FEMObjectWitness, Universal2Outcome,
};
pub use functor2::{extend_2functor, Dagger2Functor, Extension};

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fincat::{validate_category, CategoryDescription, CategoryError, FinDaggerCategory, Mor, Obj};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell0(pub usize);

/// A 1-cell: an object of the hom category `hom(src, tgt)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell1 {
    pub src: Cell0,
    pub tgt: Cell0,
    pub obj: Obj,
}

/// A 2-cell: a morphism of the hom category `hom(src, tgt)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell2 {
    pub src: Cell0,
    pub tgt: Cell0,
    pub mor: Mor,
}

impl Cell1 {
    /// The same cell seen in the 2-category with 1-cells reversed.
    pub fn flip(self) -> Cell1 {
        Cell1 { src: self.tgt, tgt: self.src, obj: self.obj }
    }
}

impl Cell2 {
    pub fn flip(self) -> Cell2 {
        Cell2 { src: self.tgt, tgt: self.src, mor: self.mor }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwoCatError {
    #[error("duplicate 0-cell `{0}`")]
    DuplicateCell0(String),
    #[error("reference to undeclared {kind} `{id}`")]
    DanglingReference { kind: &'static str, id: String },
    #[error("hom({src}, {tgt}) is not a dagger category: {source}")]
    Hom { src: String, tgt: String, source: Box<CategoryError> },
    #[error("{table} has no entry for {cells:?}")]
    MissingEntry { table: &'static str, cells: Vec<String> },
    #[error("{table} entry for {cells:?} is ill-typed or conflicting")]
    IllTyped { table: &'static str, cells: Vec<String> },
    #[error("1-cell unit law fails at {cells:?}")]
    Unit1Fail { cells: Vec<String> },
    #[error("1-cell composition is not associative at {cells:?}")]
    Assoc1Fail { cells: Vec<String> },
    #[error("whiskering law `{law}` fails at {cells:?}")]
    WhiskerFail { law: &'static str, cells: Vec<String> },
    #[error("interchange fails at {cells:?}")]
    InterchangeFail { cells: Vec<String> },
    #[error("horizontal composition does not commute with the dagger at {cells:?}")]
    DaggerHorizontalFail { cells: Vec<String> },
    #[error("not a monad: {law} fails")]
    MonadLaw { law: &'static str },
    #[error("dagger of a completion 2-cell is not a 2-cell: {cell}")]
    InternalClosureFailure { cell: String },
    #[error("the adjunction generates a different monad")]
    MonadMismatch,
    #[error("no comparison 1-cell exists")]
    NoComparison,
    #[error("comparison 1-cell is not unique: {count} candidates")]
    NonUnique { count: usize },
    #[error("monad `{monad}` violates t η = η t")]
    EtaCommutationRequired { monad: String },
    #[error("no FEM witness for monad `{monad}`")]
    MissingWitness { monad: String },
    #[error("not a dagger 2-functor: {law} fails at {cells:?}")]
    Not2Functor { law: &'static str, cells: Vec<String> },
    #[error("ill-typed data: {0}")]
    IllTypedData(String),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomDescription {
    pub src: String,
    pub tgt: String,
    pub category: CategoryDescription,
}

/// Raw tables. Table rows carry the three 0-cells first:
/// `comp1` rows are `[A, B, C, g, f, g∘f]`, `whisker_left` rows
/// `[A, B, C, g, α, gα]`, `whisker_right` rows `[A, B, C, β, f, βf]` and the
/// optional `hcomp` rows `[A, B, C, β, α, β∗α]`. A missing hom is empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoCategoryDescription {
    pub cells0: Vec<String>,
    pub homs: Vec<HomDescription>,
    pub id1: BTreeMap<String, String>,
    pub comp1: Vec<[String; 6]>,
    pub whisker_left: Vec<[String; 6]>,
    pub whisker_right: Vec<[String; 6]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub hcomp: Vec<[String; 6]>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinDagger2Category {
    cells0: Vec<String>,
    homs: Vec<Arc<FinDaggerCategory>>,
    id1: Vec<Obj>,
    /// Per 0-cell triple `(a, b, c)`: `g∘f` at `g * |hom(a,b)| + f`.
    comp1: Vec<Vec<Obj>>,
    /// Per triple: `gα` at `g * |2-cells(a,b)| + α`.
    lw: Vec<Vec<Mor>>,
    /// Per triple: `βf` at `β * |hom(a,b)| + f`.
    rw: Vec<Vec<Mor>>,
    /// Per triple: `β∗α` at `β * |2-cells(a,b)| + α`.
    hcomp: Vec<Vec<Mor>>,
    cell0_index: HashMap<String, Cell0>,
}

fn empty_category() -> Arc<FinDaggerCategory> {
    Arc::new(validate_category(&CategoryDescription::default()).unwrap())
}

impl FinDagger2Category {
    /// Fills the tables from closures over sorted 0-cells and runs every
    /// check. `explicit_hcomp` overrides derived horizontal composites.
    pub(crate) fn from_parts(
        cells0: Vec<String>,
        homs: Vec<Arc<FinDaggerCategory>>,
        id1: Vec<Obj>,
        comp1: impl Fn(Cell1, Cell1) -> Option<Obj>,
        lw: impl Fn(Cell1, Cell2) -> Option<Mor>,
        rw: impl Fn(Cell2, Cell1) -> Option<Mor>,
        explicit_hcomp: &[(Cell2, Cell2, Mor)],
    ) -> Result<Self, TwoCatError> {
        debug_assert!(cells0.windows(2).all(|w| w[0] < w[1]));
        let n = cells0.len();
        let cell0_index = cells0.iter().enumerate().map(|(i, s)| (s.clone(), Cell0(i))).collect();
        let mut two = FinDagger2Category {
            cells0,
            homs,
            id1,
            comp1: vec![Vec::new(); n * n * n],
            lw: vec![Vec::new(); n * n * n],
            rw: vec![Vec::new(); n * n * n],
            hcomp: vec![Vec::new(); n * n * n],
            cell0_index,
        };
        for (a, b, c) in two.triples() {
            let (ab, bc, ac) = (two.hom(a, b).clone(), two.hom(b, c).clone(), two.hom(a, c).clone());
            let t = two.triple(a, b, c);
            let names = |x: &str, y: &str| vec![x.to_string(), y.to_string()];
            for g in bc.objects() {
                for f in ab.objects() {
                    let gf =
                        comp1(Cell1 { src: b, tgt: c, obj: g }, Cell1 { src: a, tgt: b, obj: f }).ok_or_else(|| {
                            TwoCatError::MissingEntry { table: "comp1", cells: names(bc.obj_id(g), ab.obj_id(f)) }
                        })?;
                    if gf.index() >= ac.num_objects() {
                        return Err(TwoCatError::IllTyped { table: "comp1", cells: names(bc.obj_id(g), ab.obj_id(f)) });
                    }
                    two.comp1[t].push(gf);
                }
            }
            for g in bc.objects() {
                for al in ab.morphisms() {
                    let x =
                        lw(Cell1 { src: b, tgt: c, obj: g }, Cell2 { src: a, tgt: b, mor: al }).ok_or_else(|| {
                            TwoCatError::MissingEntry {
                                table: "whisker_left",
                                cells: names(bc.obj_id(g), ab.mor_id(al)),
                            }
                        })?;
                    two.lw[t].push(x);
                }
            }
            for be in bc.morphisms() {
                for f in ab.objects() {
                    let x =
                        rw(Cell2 { src: b, tgt: c, mor: be }, Cell1 { src: a, tgt: b, obj: f }).ok_or_else(|| {
                            TwoCatError::MissingEntry {
                                table: "whisker_right",
                                cells: names(bc.mor_id(be), ab.obj_id(f)),
                            }
                        })?;
                    two.rw[t].push(x);
                }
            }
            for x in two.lw[t].iter().chain(&two.rw[t]) {
                if x.index() >= ac.num_morphisms() {
                    return Err(TwoCatError::IllTyped { table: "whiskering", cells: vec![] });
                }
            }
        }
        two.check_whiskers()?;
        for (a, b, c) in two.triples() {
            let t = two.triple(a, b, c);
            let (ab, bc) = (two.hom(a, b).clone(), two.hom(b, c).clone());
            for be in bc.morphisms() {
                for al in ab.morphisms() {
                    let (beta, alpha) = (Cell2 { src: b, tgt: c, mor: be }, Cell2 { src: a, tgt: b, mor: al });
                    let g = two.src2(beta);
                    let derived = two.vcomp(two.rw(beta, two.tgt2(alpha)), two.lw(g, alpha));
                    two.hcomp[t].push(derived.mor);
                }
            }
        }
        for &(beta, alpha, x) in explicit_hcomp {
            let (a, b, c) = (alpha.src, alpha.tgt, beta.tgt);
            let t = two.triple(a, b, c);
            let idx = beta.mor.index() * two.hom(a, b).num_morphisms() + alpha.mor.index();
            two.hcomp[t][idx] = x;
        }
        two.check_horizontal()?;
        Ok(two)
    }

    fn triples(&self) -> Vec<(Cell0, Cell0, Cell0)> {
        let n = self.cells0.len();
        let mut v = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    v.push((Cell0(a), Cell0(b), Cell0(c)));
                }
            }
        }
        v
    }

    fn triple(&self, a: Cell0, b: Cell0, c: Cell0) -> usize {
        let n = self.cells0.len();
        (a.0 * n + b.0) * n + c.0
    }

    pub fn num_cells0(&self) -> usize {
        self.cells0.len()
    }

    pub fn cells0(&self) -> impl Iterator<Item = Cell0> + Clone {
        (0..self.cells0.len()).map(Cell0)
    }

    pub fn cell0_id(&self, a: Cell0) -> &str {
        &self.cells0[a.0]
    }

    pub fn find_cell0(&self, id: &str) -> Option<Cell0> {
        self.cell0_index.get(id).copied()
    }

    pub fn hom(&self, a: Cell0, b: Cell0) -> &Arc<FinDaggerCategory> {
        &self.homs[a.0 * self.cells0.len() + b.0]
    }

    pub fn cells1(&self, a: Cell0, b: Cell0) -> impl Iterator<Item = Cell1> + '_ {
        self.hom(a, b).objects().map(move |obj| Cell1 { src: a, tgt: b, obj })
    }

    pub fn cells2(&self, a: Cell0, b: Cell0) -> impl Iterator<Item = Cell2> + '_ {
        self.hom(a, b).morphisms().map(move |mor| Cell2 { src: a, tgt: b, mor })
    }

    /// 2-cells `f → g`.
    pub fn cells2_between(&self, f: Cell1, g: Cell1) -> impl Iterator<Item = Cell2> + '_ {
        debug_assert_eq!((f.src, f.tgt), (g.src, g.tgt));
        self.hom(f.src, f.tgt).hom(f.obj, g.obj).iter().map(move |&mor| Cell2 { src: f.src, tgt: f.tgt, mor })
    }

    pub fn cell1_id(&self, f: Cell1) -> &str {
        self.hom(f.src, f.tgt).obj_id(f.obj)
    }

    pub fn cell2_id(&self, a: Cell2) -> &str {
        self.hom(a.src, a.tgt).mor_id(a.mor)
    }

    pub fn find_cell1(&self, a: Cell0, b: Cell0, id: &str) -> Option<Cell1> {
        self.hom(a, b).find_object(id).map(|obj| Cell1 { src: a, tgt: b, obj })
    }

    pub fn find_cell2(&self, a: Cell0, b: Cell0, id: &str) -> Option<Cell2> {
        self.hom(a, b).find_morphism(id).map(|mor| Cell2 { src: a, tgt: b, mor })
    }

    pub fn id1(&self, a: Cell0) -> Cell1 {
        Cell1 { src: a, tgt: a, obj: self.id1[a.0] }
    }

    pub fn id2(&self, f: Cell1) -> Cell2 {
        Cell2 { src: f.src, tgt: f.tgt, mor: self.hom(f.src, f.tgt).identity(f.obj) }
    }

    pub fn src2(&self, a: Cell2) -> Cell1 {
        Cell1 { src: a.src, tgt: a.tgt, obj: self.hom(a.src, a.tgt).src(a.mor) }
    }

    pub fn tgt2(&self, a: Cell2) -> Cell1 {
        Cell1 { src: a.src, tgt: a.tgt, obj: self.hom(a.src, a.tgt).tgt(a.mor) }
    }

    /// `g ∘ f`.
    pub fn comp1(&self, g: Cell1, f: Cell1) -> Cell1 {
        assert_eq!(f.tgt, g.src, "1-cells are not composable");
        let t = self.triple(f.src, f.tgt, g.tgt);
        let obj = self.comp1[t][g.obj.index() * self.hom(f.src, f.tgt).num_objects() + f.obj.index()];
        Cell1 { src: f.src, tgt: g.tgt, obj }
    }

    /// Composite of a path of 1-cells in application order reversed.
    pub fn chain1(&self, path: &[Cell1]) -> Cell1 {
        let (&last, rest) = path.split_last().expect("empty path");
        rest.iter().rev().fold(last, |acc, &g| self.comp1(g, acc))
    }

    /// `g α`.
    pub fn lw(&self, g: Cell1, alpha: Cell2) -> Cell2 {
        assert_eq!(alpha.tgt, g.src, "whiskering is ill-typed");
        let t = self.triple(alpha.src, alpha.tgt, g.tgt);
        let mor = self.lw[t][g.obj.index() * self.hom(alpha.src, alpha.tgt).num_morphisms() + alpha.mor.index()];
        Cell2 { src: alpha.src, tgt: g.tgt, mor }
    }

    /// `β f`.
    pub fn rw(&self, beta: Cell2, f: Cell1) -> Cell2 {
        assert_eq!(f.tgt, beta.src, "whiskering is ill-typed");
        let t = self.triple(f.src, f.tgt, beta.tgt);
        let mor = self.rw[t][beta.mor.index() * self.hom(f.src, f.tgt).num_objects() + f.obj.index()];
        Cell2 { src: f.src, tgt: beta.tgt, mor }
    }

    /// `β ∗ α`.
    pub fn hcomp(&self, beta: Cell2, alpha: Cell2) -> Cell2 {
        assert_eq!(alpha.tgt, beta.src, "horizontal composite is ill-typed");
        let t = self.triple(alpha.src, alpha.tgt, beta.tgt);
        let mor = self.hcomp[t][beta.mor.index() * self.hom(alpha.src, alpha.tgt).num_morphisms() + alpha.mor.index()];
        Cell2 { src: alpha.src, tgt: beta.tgt, mor }
    }

    /// `β · α`.
    pub fn vcomp(&self, beta: Cell2, alpha: Cell2) -> Cell2 {
        assert_eq!((alpha.src, alpha.tgt), (beta.src, beta.tgt));
        Cell2 { src: alpha.src, tgt: alpha.tgt, mor: self.hom(alpha.src, alpha.tgt).compose(beta.mor, alpha.mor) }
    }

    pub fn try_vcomp(&self, beta: Cell2, alpha: Cell2) -> Option<Cell2> {
        if (alpha.src, alpha.tgt) != (beta.src, beta.tgt) {
            return None;
        }
        let mor = self.hom(alpha.src, alpha.tgt).try_compose(beta.mor, alpha.mor)?;
        Some(Cell2 { src: alpha.src, tgt: alpha.tgt, mor })
    }

    /// Vertical composite of a path in application order reversed.
    pub fn chain2(&self, path: &[Cell2]) -> Cell2 {
        let (&last, rest) = path.split_last().expect("empty path");
        rest.iter().rev().fold(last, |acc, &b| self.vcomp(b, acc))
    }

    pub fn dagger2(&self, a: Cell2) -> Cell2 {
        Cell2 { src: a.src, tgt: a.tgt, mor: self.hom(a.src, a.tgt).dagger(a.mor) }
    }

    fn check_whiskers(&self) -> Result<(), TwoCatError> {
        let ids1 = |cells: &[Cell1]| cells.iter().map(|&c| self.cell1_id(c).to_string()).collect::<Vec<_>>();
        for a in self.cells0() {
            for b in self.cells0() {
                for f in self.cells1(a, b) {
                    if self.comp1(self.id1(b), f) != f || self.comp1(f, self.id1(a)) != f {
                        return Err(TwoCatError::Unit1Fail { cells: ids1(&[f]) });
                    }
                }
            }
        }
        for (a, b, c) in self.triples() {
            for d in self.cells0() {
                for h in self.cells1(c, d) {
                    for g in self.cells1(b, c) {
                        let hg = self.comp1(h, g);
                        for f in self.cells1(a, b) {
                            if self.comp1(h, self.comp1(g, f)) != self.comp1(hg, f) {
                                return Err(TwoCatError::Assoc1Fail { cells: ids1(&[h, g, f]) });
                            }
                        }
                    }
                }
            }
        }
        let fail = |law, cells: Vec<String>| Err(TwoCatError::WhiskerFail { law, cells });
        for (a, b, c) in self.triples() {
            for g in self.cells1(b, c) {
                for al in self.cells2(a, b) {
                    let x = self.lw(g, al);
                    let cells = || vec![self.cell1_id(g).to_string(), self.cell2_id(al).to_string()];
                    if self.src2(x) != self.comp1(g, self.src2(al)) || self.tgt2(x) != self.comp1(g, self.tgt2(al)) {
                        return fail("typing of g α", cells());
                    }
                }
            }
            for be in self.cells2(b, c) {
                for f in self.cells1(a, b) {
                    let x = self.rw(be, f);
                    let cells = || vec![self.cell2_id(be).to_string(), self.cell1_id(f).to_string()];
                    if self.src2(x) != self.comp1(self.src2(be), f) || self.tgt2(x) != self.comp1(self.tgt2(be), f) {
                        return fail("typing of β f", cells());
                    }
                }
            }
        }
        for (a, b, c) in self.triples() {
            for g in self.cells1(b, c) {
                for f in self.cells1(a, b) {
                    let cells = || vec![self.cell1_id(g).to_string(), self.cell1_id(f).to_string()];
                    if self.lw(g, self.id2(f)) != self.id2(self.comp1(g, f)) {
                        return fail("g 1_f = 1_gf", cells());
                    }
                    if self.rw(self.id2(g), f) != self.id2(self.comp1(g, f)) {
                        return fail("1_g f = 1_gf", cells());
                    }
                }
                for al in self.cells2(a, b) {
                    let cells = || vec![self.cell1_id(g).to_string(), self.cell2_id(al).to_string()];
                    if self.lw(g, self.dagger2(al)) != self.dagger2(self.lw(g, al)) {
                        return fail("g α† = (g α)†", cells());
                    }
                    for al2 in self.cells2(a, b) {
                        if let Some(v) = self.try_vcomp(al2, al) {
                            if self.lw(g, v) != self.vcomp(self.lw(g, al2), self.lw(g, al)) {
                                return fail("g (α'·α) = gα'·gα", cells());
                            }
                        }
                    }
                }
            }
            for f in self.cells1(a, b) {
                for be in self.cells2(b, c) {
                    let cells = || vec![self.cell2_id(be).to_string(), self.cell1_id(f).to_string()];
                    if self.rw(self.dagger2(be), f) != self.dagger2(self.rw(be, f)) {
                        return fail("β† f = (β f)†", cells());
                    }
                    for be2 in self.cells2(b, c) {
                        if let Some(v) = self.try_vcomp(be2, be) {
                            if self.rw(v, f) != self.vcomp(self.rw(be2, f), self.rw(be, f)) {
                                return fail("(β'·β) f = β'f·βf", cells());
                            }
                        }
                    }
                }
            }
        }
        for a in self.cells0() {
            for b in self.cells0() {
                for al in self.cells2(a, b) {
                    if self.lw(self.id1(b), al) != al || self.rw(al, self.id1(a)) != al {
                        return fail("whiskering by an identity 1-cell", vec![self.cell2_id(al).to_string()]);
                    }
                }
            }
        }
        for (a, b, c) in self.triples() {
            for d in self.cells0() {
                for h in self.cells1(c, d) {
                    for g in self.cells1(b, c) {
                        for al in self.cells2(a, b) {
                            if self.lw(h, self.lw(g, al)) != self.lw(self.comp1(h, g), al) {
                                return fail("h (g α) = (h g) α", vec![self.cell2_id(al).to_string()]);
                            }
                        }
                    }
                }
                for be in self.cells2(c, d) {
                    for g in self.cells1(b, c) {
                        for f in self.cells1(a, b) {
                            if self.rw(self.rw(be, g), f) != self.rw(be, self.comp1(g, f)) {
                                return fail("(β g) f = β (g f)", vec![self.cell2_id(be).to_string()]);
                            }
                        }
                    }
                }
                for h in self.cells1(c, d) {
                    for be in self.cells2(b, c) {
                        for f in self.cells1(a, b) {
                            if self.rw(self.lw(h, be), f) != self.lw(h, self.rw(be, f)) {
                                return fail("(h β) f = h (β f)", vec![self.cell2_id(be).to_string()]);
                            }
                        }
                    }
                }
            }
        }
        for (a, b, c) in self.triples() {
            for be in self.cells2(b, c) {
                for al in self.cells2(a, b) {
                    let (g, g2) = (self.src2(be), self.tgt2(be));
                    let (f, f2) = (self.src2(al), self.tgt2(al));
                    if self.vcomp(self.rw(be, f2), self.lw(g, al)) != self.vcomp(self.lw(g2, al), self.rw(be, f)) {
                        return Err(TwoCatError::InterchangeFail {
                            cells: vec![self.cell2_id(be).to_string(), self.cell2_id(al).to_string()],
                        });
                    }
                }
            }
        }
        Ok(())
    }

    fn check_horizontal(&self) -> Result<(), TwoCatError> {
        let ids = |cells: &[Cell2]| cells.iter().map(|&c| self.cell2_id(c).to_string()).collect::<Vec<_>>();
        for (a, b, c) in self.triples() {
            for be in self.cells2(b, c) {
                for al in self.cells2(a, b) {
                    let x = self.hcomp(be, al);
                    let (g, g2, f, f2) = (self.src2(be), self.tgt2(be), self.src2(al), self.tgt2(al));
                    if self.src2(x) != self.comp1(g, f) || self.tgt2(x) != self.comp1(g2, f2) {
                        return Err(TwoCatError::IllTyped { table: "hcomp", cells: ids(&[be, al]) });
                    }
                }
            }
            for g in self.cells1(b, c) {
                for al in self.cells2(a, b) {
                    if self.hcomp(self.id2(g), al) != self.lw(g, al) {
                        return Err(TwoCatError::WhiskerFail {
                            law: "1_g ∗ α = g α",
                            cells: vec![self.cell1_id(g).to_string(), self.cell2_id(al).to_string()],
                        });
                    }
                }
            }
            for be in self.cells2(b, c) {
                for f in self.cells1(a, b) {
                    if self.hcomp(be, self.id2(f)) != self.rw(be, f) {
                        return Err(TwoCatError::WhiskerFail {
                            law: "β ∗ 1_f = β f",
                            cells: vec![self.cell2_id(be).to_string(), self.cell1_id(f).to_string()],
                        });
                    }
                }
            }
        }
        for (a, b, c) in self.triples() {
            let (ab, bc) = (self.hom(a, b), self.hom(b, c));
            for be in self.cells2(b, c) {
                for be2 in bc.morphisms().filter(|&m| bc.src(m) == bc.tgt(be.mor)) {
                    let be2 = Cell2 { src: b, tgt: c, mor: be2 };
                    for al in self.cells2(a, b) {
                        for al2 in ab.morphisms().filter(|&m| ab.src(m) == ab.tgt(al.mor)) {
                            let al2 = Cell2 { src: a, tgt: b, mor: al2 };
                            let lhs = self.hcomp(self.vcomp(be2, be), self.vcomp(al2, al));
                            let rhs = self.vcomp(self.hcomp(be2, al2), self.hcomp(be, al));
                            if lhs != rhs {
                                return Err(TwoCatError::InterchangeFail { cells: ids(&[be2, be, al2, al]) });
                            }
                        }
                    }
                }
            }
        }
        for (a, b, c) in self.triples() {
            for be in self.cells2(b, c) {
                for al in self.cells2(a, b) {
                    if self.dagger2(self.hcomp(be, al)) != self.hcomp(self.dagger2(be), self.dagger2(al)) {
                        return Err(TwoCatError::DaggerHorizontalFail { cells: ids(&[be, al]) });
                    }
                }
            }
        }
        Ok(())
    }

    /// The 2-category with 1-cells reversed and 2-cells kept.
    pub fn opposite(&self) -> FinDagger2Category {
        let n = self.cells0.len();
        let mut homs = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                homs.push(self.hom(Cell0(b), Cell0(a)).clone());
            }
        }
        FinDagger2Category::from_parts(
            self.cells0.clone(),
            homs,
            self.id1.clone(),
            |g, f| Some(self.comp1(f.flip(), g.flip()).obj),
            |g, al| Some(self.rw(al.flip(), g.flip()).mor),
            |be, f| Some(self.lw(f.flip(), be.flip()).mor),
            &self.explicit_hcomp_entries().iter().map(|&(b, a, x)| (a.flip(), b.flip(), x.mor)).collect::<Vec<_>>(),
        )
        .expect("the opposite of a dagger 2-category is a dagger 2-category")
    }

    /// Horizontal composites that differ from the whiskering-derived value.
    fn explicit_hcomp_entries(&self) -> Vec<(Cell2, Cell2, Cell2)> {
        let mut out = Vec::new();
        for (a, b, c) in self.triples() {
            for be in self.cells2(b, c) {
                for al in self.cells2(a, b) {
                    let derived = self.vcomp(self.rw(be, self.tgt2(al)), self.lw(self.src2(be), al));
                    let x = self.hcomp(be, al);
                    if x != derived {
                        out.push((be, al, x));
                    }
                }
            }
        }
        out
    }

    pub fn to_description(&self) -> TwoCategoryDescription {
        let mut desc = TwoCategoryDescription { cells0: self.cells0.clone(), ..Default::default() };
        for a in self.cells0() {
            desc.id1.insert(self.cell0_id(a).to_string(), self.cell1_id(self.id1(a)).to_string());
            for b in self.cells0() {
                if self.hom(a, b).num_objects() > 0 {
                    desc.homs.push(HomDescription {
                        src: self.cell0_id(a).to_string(),
                        tgt: self.cell0_id(b).to_string(),
                        category: self.hom(a, b).to_description(),
                    });
                }
            }
        }
        for (a, b, c) in self.triples() {
            let ids0 = [self.cell0_id(a), self.cell0_id(b), self.cell0_id(c)].map(String::from);
            let row = |x: &str, y: &str, z: &str| {
                [ids0[0].clone(), ids0[1].clone(), ids0[2].clone(), x.to_string(), y.to_string(), z.to_string()]
            };
            for g in self.cells1(b, c) {
                for f in self.cells1(a, b) {
                    desc.comp1.push(row(self.cell1_id(g), self.cell1_id(f), self.cell1_id(self.comp1(g, f))));
                }
                for al in self.cells2(a, b) {
                    desc.whisker_left.push(row(self.cell1_id(g), self.cell2_id(al), self.cell2_id(self.lw(g, al))));
                }
            }
            for be in self.cells2(b, c) {
                for f in self.cells1(a, b) {
                    desc.whisker_right.push(row(self.cell2_id(be), self.cell1_id(f), self.cell2_id(self.rw(be, f))));
                }
            }
        }
        for (be, al, x) in self.explicit_hcomp_entries() {
            desc.hcomp.push([
                self.cell0_id(al.src).to_string(),
                self.cell0_id(al.tgt).to_string(),
                self.cell0_id(be.tgt).to_string(),
                self.cell2_id(be).to_string(),
                self.cell2_id(al).to_string(),
                self.cell2_id(x).to_string(),
            ]);
        }
        desc
    }
}

pub fn validate_2category(desc: &TwoCategoryDescription) -> Result<FinDagger2Category, TwoCatError> {
    let mut cells0 = desc.cells0.clone();
    cells0.sort();
    if let Some(w) = cells0.windows(2).find(|w| w[0] == w[1]) {
        return Err(TwoCatError::DuplicateCell0(w[0].clone()));
    }
    let n = cells0.len();
    let index: HashMap<&str, usize> = cells0.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
    let cell0 = |id: &str| {
        index
            .get(id)
            .copied()
            .map(Cell0)
            .ok_or_else(|| TwoCatError::DanglingReference { kind: "0-cell", id: id.to_string() })
    };
    let mut homs: Vec<Option<Arc<FinDaggerCategory>>> = vec![None; n * n];
    for h in &desc.homs {
        let (a, b) = (cell0(&h.src)?, cell0(&h.tgt)?);
        let c = validate_category(&h.category).map_err(|source| TwoCatError::Hom {
            src: h.src.clone(),
            tgt: h.tgt.clone(),
            source: Box::new(source),
        })?;
        if homs[a.0 * n + b.0].replace(Arc::new(c)).is_some() {
            return Err(TwoCatError::IllTyped { table: "homs", cells: vec![h.src.clone(), h.tgt.clone()] });
        }
    }
    let empty = empty_category();
    let homs: Vec<Arc<FinDaggerCategory>> = homs.into_iter().map(|h| h.unwrap_or_else(|| empty.clone())).collect();
    let hom = |a: Cell0, b: Cell0| &homs[a.0 * n + b.0];
    let obj = |a: Cell0, b: Cell0, id: &str| {
        hom(a, b).find_object(id).ok_or_else(|| TwoCatError::DanglingReference { kind: "1-cell", id: id.to_string() })
    };
    let mor = |a: Cell0, b: Cell0, id: &str| {
        hom(a, b).find_morphism(id).ok_or_else(|| TwoCatError::DanglingReference { kind: "2-cell", id: id.to_string() })
    };
    for key in desc.id1.keys() {
        cell0(key)?;
    }
    let mut id1 = Vec::with_capacity(n);
    for (i, a) in cells0.iter().enumerate() {
        let f = desc.id1.get(a).ok_or_else(|| TwoCatError::MissingEntry { table: "id1", cells: vec![a.clone()] })?;
        id1.push(obj(Cell0(i), Cell0(i), f)?);
    }

    fn insert<K: std::hash::Hash + Eq, V: PartialEq>(
        map: &mut HashMap<K, V>,
        k: K,
        v: V,
        table: &'static str,
        row: &[String; 6],
    ) -> Result<(), TwoCatError> {
        match map.get(&k) {
            Some(prev) if *prev != v => Err(TwoCatError::IllTyped { table, cells: row.to_vec() }),
            _ => {
                map.insert(k, v);
                Ok(())
            }
        }
    }
    let mut comp1 = HashMap::new();
    for row in &desc.comp1 {
        let (a, b, c) = (cell0(&row[0])?, cell0(&row[1])?, cell0(&row[2])?);
        let (g, f, gf) = (obj(b, c, &row[3])?, obj(a, b, &row[4])?, obj(a, c, &row[5])?);
        insert(&mut comp1, (a, b, c, g, f), gf, "comp1", row)?;
    }
    let mut lw = HashMap::new();
    for row in &desc.whisker_left {
        let (a, b, c) = (cell0(&row[0])?, cell0(&row[1])?, cell0(&row[2])?);
        let (g, al, x) = (obj(b, c, &row[3])?, mor(a, b, &row[4])?, mor(a, c, &row[5])?);
        insert(&mut lw, (a, b, c, g, al), x, "whisker_left", row)?;
    }
    let mut rw = HashMap::new();
    for row in &desc.whisker_right {
        let (a, b, c) = (cell0(&row[0])?, cell0(&row[1])?, cell0(&row[2])?);
        let (be, f, x) = (mor(b, c, &row[3])?, obj(a, b, &row[4])?, mor(a, c, &row[5])?);
        insert(&mut rw, (a, b, c, be, f), x, "whisker_right", row)?;
    }
    let mut explicit = Vec::new();
    for row in &desc.hcomp {
        let (a, b, c) = (cell0(&row[0])?, cell0(&row[1])?, cell0(&row[2])?);
        let (be, al, x) = (mor(b, c, &row[3])?, mor(a, b, &row[4])?, mor(a, c, &row[5])?);
        explicit.push((Cell2 { src: b, tgt: c, mor: be }, Cell2 { src: a, tgt: b, mor: al }, x));
    }
    FinDagger2Category::from_parts(
        cells0,
        homs.clone(),
        id1,
        |g, f| comp1.get(&(f.src, f.tgt, g.tgt, g.obj, f.obj)).copied(),
        |g, al| lw.get(&(al.src, al.tgt, g.tgt, g.obj, al.mor)).copied(),
        |be, f| rw.get(&(f.src, f.tgt, be.tgt, be.mor, f.obj)).copied(),
        &explicit,
    )
}

/// A monad `(D, t, μ, η)` inside a 2-category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monad2 {
    pub d: Cell0,
    pub t: Cell1,
    pub mu: Cell2,
    pub eta: Cell2,
    pub frobenius: bool,
}

impl Monad2 {
    /// Checks typing, associativity and both unit laws, then sets the
    /// Frobenius flag.
    pub fn new(k: &FinDagger2Category, t: Cell1, mu: Cell2, eta: Cell2) -> Result<Self, TwoCatError> {
        let d = t.src;
        if t.tgt != d || (mu.src, mu.tgt) != (d, d) || (eta.src, eta.tgt) != (d, d) {
            return Err(TwoCatError::MonadLaw { law: "typing" });
        }
        let tt = k.comp1(t, t);
        if k.src2(mu) != tt || k.tgt2(mu) != t || k.src2(eta) != k.id1(d) || k.tgt2(eta) != t {
            return Err(TwoCatError::MonadLaw { law: "typing" });
        }
        if k.vcomp(mu, k.lw(t, mu)) != k.vcomp(mu, k.rw(mu, t)) {
            return Err(TwoCatError::MonadLaw { law: "associativity" });
        }
        let one = k.id2(t);
        if k.vcomp(mu, k.lw(t, eta)) != one || k.vcomp(mu, k.rw(eta, t)) != one {
            return Err(TwoCatError::MonadLaw { law: "unit" });
        }
        let mut m = Monad2 { d, t, mu, eta, frobenius: false };
        m.frobenius = monad2_frobenius(k, &m);
        Ok(m)
    }

    pub fn identity(k: &FinDagger2Category, d: Cell0) -> Self {
        let one = k.id2(k.id1(d));
        Monad2::new(k, k.id1(d), one, one).expect("identity monad")
    }

    pub fn is_identity(&self, k: &FinDagger2Category) -> bool {
        *self == Monad2::identity(k, self.d)
    }

    /// `D:t:mu:eta`, built from cell ids.
    pub fn label(&self, k: &FinDagger2Category) -> String {
        format!("{}:{}:{}:{}", k.cell0_id(self.d), k.cell1_id(self.t), k.cell2_id(self.mu), k.cell2_id(self.eta))
    }

    /// The same monad in the 2-category with 1-cells reversed.
    pub fn flip(self) -> Monad2 {
        Monad2 { t: self.t.flip(), mu: self.mu.flip(), eta: self.eta.flip(), ..self }
    }
}

/// `(μ t)·(t μ†) = (t μ)·(μ† t)`.
pub fn monad2_frobenius(k: &FinDagger2Category, m: &Monad2) -> bool {
    let md = k.dagger2(m.mu);
    k.vcomp(k.rw(m.mu, m.t), k.lw(m.t, md)) == k.vcomp(k.lw(m.t, m.mu), k.rw(md, m.t))
}

/// Every monad of every 0-cell, flagged for the Frobenius law, in the order
/// 0-cell, endomorphism, multiplication, unit.
pub fn enumerate_monads2(k: &FinDagger2Category) -> Vec<Monad2> {
    let mut out = Vec::new();
    for d in k.cells0() {
        for t in k.cells1(d, d).collect::<Vec<_>>() {
            let tt = k.comp1(t, t);
            for mu in k.cells2_between(tt, t) {
                for eta in k.cells2_between(k.id1(d), t) {
                    if let Ok(m) = Monad2::new(k, t, mu, eta) {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

pub fn enumerate_frobenius_monads(k: &FinDagger2Category) -> Vec<Monad2> {
    enumerate_monads2(k).into_iter().filter(|m| m.frobenius).collect()
}

#[cfg(test)]
mod tests {
    use super::fixture::{locally_discrete, sigma_z2, sigma_z2_description};
    use super::*;
    use crate::fixtures;

    #[test]
    fn sigma_z2_examples() {
        let k = sigma_z2();
        let monads = enumerate_monads2(&k);
        assert_eq!(monads.len(), 2);
        assert!(monads.iter().all(|m| m.frobenius));
        let mut desc = sigma_z2_description();
        desc.hcomp.push(["*", "*", "*", "s", "s", "s"].map(String::from));
        assert!(matches!(validate_2category(&desc), Err(TwoCatError::InterchangeFail { .. })));
    }

    #[test]
    fn description_round_trip() {
        let k = sigma_z2();
        assert_eq!(validate_2category(&k.to_description()).unwrap(), k);
        let ld = locally_discrete(&fixtures::z2());
        assert_eq!(validate_2category(&ld.to_description()).unwrap(), ld);
        assert_eq!(ld.opposite().opposite(), ld);
    }

    #[test]
    fn locally_discrete_one_has_only_the_identity_monad() {
        let k = locally_discrete(&fixtures::one());
        let monads = enumerate_monads2(&k);
        assert_eq!(monads, vec![Monad2::identity(&k, Cell0(0))]);
    }

    #[test]
    fn missing_whisker_entry_is_reported() {
        let mut desc = sigma_z2_description();
        desc.whisker_left.pop();
        assert!(matches!(validate_2category(&desc), Err(TwoCatError::MissingEntry { .. })));
    }
}
