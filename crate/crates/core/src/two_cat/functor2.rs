//! Strict dagger 2-functors and their extension along the inclusion into the
//! FEM completion.

use super::completions::{build_fem_completion, Completion};
use super::fem_object::{check_witness, eta_commutation_check, fem_object_check, FEMObjectWitness};
use super::{enumerate_frobenius_monads, Cell0, Cell1, Cell2, FinDagger2Category, Monad2, TwoCatError};
use crate::verdict::{Verdict, Witness};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dagger2Functor {
    n: usize,
    cells0: Vec<Cell0>,
    /// Per source hom `(a, b)`, indexed by 1-cell object.
    cells1: Vec<Vec<Cell1>>,
    cells2: Vec<Vec<Cell2>>,
}

impl Dagger2Functor {
    /// Tabulates the maps and checks every strict 2-functor law together with
    /// preservation of the dagger.
    pub fn new(
        source: &FinDagger2Category,
        target: &FinDagger2Category,
        cells0: Vec<Cell0>,
        cell1: impl Fn(Cell1) -> Cell1,
        cell2: impl Fn(Cell2) -> Cell2,
    ) -> Result<Self, TwoCatError> {
        let n = source.num_cells0();
        let mut f = Dagger2Functor { n, cells0, cells1: Vec::with_capacity(n * n), cells2: Vec::with_capacity(n * n) };
        for a in source.cells0() {
            for b in source.cells0() {
                f.cells1.push(source.cells1(a, b).map(&cell1).collect());
                f.cells2.push(source.cells2(a, b).map(&cell2).collect());
            }
        }
        f.check(source, target)?;
        Ok(f)
    }

    pub fn identity(k: &FinDagger2Category) -> Self {
        Dagger2Functor::new(k, k, k.cells0().collect(), |x| x, |x| x).expect("identity 2-functor")
    }

    pub fn cell0(&self, a: Cell0) -> Cell0 {
        self.cells0[a.0]
    }

    pub fn cell1(&self, f: Cell1) -> Cell1 {
        self.cells1[f.src.0 * self.n + f.tgt.0][f.obj.index()]
    }

    pub fn cell2(&self, a: Cell2) -> Cell2 {
        self.cells2[a.src.0 * self.n + a.tgt.0][a.mor.index()]
    }

    fn check(&self, s: &FinDagger2Category, t: &FinDagger2Category) -> Result<(), TwoCatError> {
        let fail = |law, cells: Vec<&str>| {
            Err(TwoCatError::Not2Functor { law, cells: cells.into_iter().map(String::from).collect() })
        };
        if self.cells0.len() != s.num_cells0() || self.cells0.iter().any(|a| a.0 >= t.num_cells0()) {
            return fail("0-cell map", vec![]);
        }
        for a in s.cells0() {
            let (fa, fa_id) = (self.cell0(a), self.cell1(s.id1(a)));
            if fa_id != t.id1(fa) {
                return fail("identity 1-cells", vec![s.cell0_id(a)]);
            }
            for b in s.cells0() {
                let fb = self.cell0(b);
                let h = t.hom(fa, fb);
                for f in s.cells1(a, b) {
                    let x = self.cell1(f);
                    if (x.src, x.tgt) != (fa, fb) || x.obj.index() >= h.num_objects() {
                        return fail("1-cell typing", vec![s.cell1_id(f)]);
                    }
                    if self.cell2(s.id2(f)) != t.id2(x) {
                        return fail("identity 2-cells", vec![s.cell1_id(f)]);
                    }
                }
                for al in s.cells2(a, b) {
                    let x = self.cell2(al);
                    if (x.src, x.tgt) != (fa, fb)
                        || x.mor.index() >= h.num_morphisms()
                        || t.src2(x) != self.cell1(s.src2(al))
                        || t.tgt2(x) != self.cell1(s.tgt2(al))
                    {
                        return fail("2-cell typing", vec![s.cell2_id(al)]);
                    }
                    if self.cell2(s.dagger2(al)) != t.dagger2(x) {
                        return fail("dagger", vec![s.cell2_id(al)]);
                    }
                    for be in s.cells2(a, b) {
                        if let Some(v) = s.try_vcomp(be, al) {
                            if self.cell2(v) != t.vcomp(self.cell2(be), x) {
                                return fail("vertical composition", vec![s.cell2_id(be), s.cell2_id(al)]);
                            }
                        }
                    }
                }
                for c in s.cells0() {
                    for g in s.cells1(b, c) {
                        for f in s.cells1(a, b) {
                            if self.cell1(s.comp1(g, f)) != t.comp1(self.cell1(g), self.cell1(f)) {
                                return fail("1-cell composition", vec![s.cell1_id(g), s.cell1_id(f)]);
                            }
                        }
                        for al in s.cells2(a, b) {
                            if self.cell2(s.lw(g, al)) != t.lw(self.cell1(g), self.cell2(al)) {
                                return fail("left whiskering", vec![s.cell1_id(g), s.cell2_id(al)]);
                            }
                        }
                    }
                    for be in s.cells2(b, c) {
                        for f in s.cells1(a, b) {
                            if self.cell2(s.rw(be, f)) != t.rw(self.cell2(be), self.cell1(f)) {
                                return fail("right whiskering", vec![s.cell2_id(be), s.cell1_id(f)]);
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// The FEM completion of the source, the extension `F̄` (when it could be
/// built) and the verdict on its defining properties.
pub struct Extension {
    pub fem: Completion,
    pub fbar: Option<Dagger2Functor>,
    pub verdict: Verdict,
}

/// Extends `F: 𝒟 → 𝒞` to `F̄: FEM(𝒟) → 𝒞` using an FEM witness in `𝒞` for
/// the image of each monad (identity monads get the trivial witness), then
/// checks `F̄ I = F`, `F̄(1, η) = u` and the witnesses themselves.
pub fn extend_2functor(
    d: &FinDagger2Category,
    c: &FinDagger2Category,
    f: &Dagger2Functor,
    witness: impl Fn(&Monad2) -> Option<FEMObjectWitness>,
) -> Result<Extension, TwoCatError> {
    for m in enumerate_frobenius_monads(c) {
        if !eta_commutation_check(c, &m) {
            return Err(TwoCatError::EtaCommutationRequired { monad: m.label(c) });
        }
    }
    let fem = build_fem_completion(d)?;
    let mut images = Vec::new();
    let mut witnesses = Vec::new();
    for m in fem.monads() {
        let fm = Monad2::new(c, f.cell1(m.t), f.cell2(m.mu), f.cell2(m.eta))?;
        let w = if fm.is_identity(c) {
            FEMObjectWitness::trivial(c, fm.d)
        } else {
            witness(&fm).ok_or_else(|| TwoCatError::MissingWitness { monad: fm.label(c) })?
        };
        if let Err(wit) = check_witness(c, &fm, &w) {
            return Ok(Extension { fem, fbar: None, verdict: Verdict::Fail(wit) });
        }
        images.push(fm);
        witnesses.push(w);
    }
    let (fbar, verdict) = lift(d, c, f, &fem, &images, &witnesses);
    Ok(Extension { fem, fbar, verdict })
}

fn lift(
    d: &FinDagger2Category,
    c: &FinDagger2Category,
    f: &Dagger2Functor,
    fem: &Completion,
    images: &[Monad2],
    witnesses: &[FEMObjectWitness],
) -> (Option<Dagger2Functor>, Verdict) {
    let two = &fem.two;
    let fail = |check: &str, cells: Vec<String>| Verdict::Fail(Witness::new(check, cells));

    let mut lifts1 = std::collections::HashMap::new();
    for x in two.cells0() {
        for y in two.cells0() {
            let (wx, wy) = (&witnesses[x.0], &witnesses[y.0]);
            for p in two.cells1(x, y) {
                let (g, sigma) = fem.one_cell(p);
                let (fg, fs) = (f.cell1(g), f.cell2(sigma));
                let target_u = c.comp1(fg, wx.u);
                let action = c.vcomp(c.lw(fg, wx.xi), c.rw(fs, wx.u));
                let found: Vec<Cell1> = c
                    .cells1(wx.e, wy.e)
                    .filter(|&b| c.comp1(wy.u, b) == target_u && c.rw(wy.xi, b) == action)
                    .collect();
                if found.len() != 1 {
                    let cells = vec![two.cell1_id(p).to_string(), format!("{} lifts", found.len())];
                    return (None, fail("lift of a 1-cell", cells));
                }
                lifts1.insert(p, found[0]);
            }
        }
    }
    let mut lifts2 = std::collections::HashMap::new();
    for x in two.cells0() {
        for y in two.cells0() {
            let (wx, wy) = (&witnesses[x.0], &witnesses[y.0]);
            for al in two.cells2(x, y) {
                let (p, q) = (two.src2(al), two.tgt2(al));
                let fp = f.cell1(fem.one_cell(p).0);
                let target = f.cell2(fem.two_cell(al));
                let unit = c.lw(fp, images[x.0].eta);
                let found: Vec<Cell2> = c
                    .cells2_between(lifts1[&p], lifts1[&q])
                    .filter(|&b| c.try_vcomp(c.lw(wy.u, c.rw(b, wx.f_t)), unit) == Some(target))
                    .collect();
                if found.len() != 1 {
                    let cells = vec![two.cell2_id(al).to_string(), format!("{} lifts", found.len())];
                    return (None, fail("lift of a 2-cell", cells));
                }
                lifts2.insert(al, found[0]);
            }
        }
    }
    let cells0 = witnesses.iter().map(|w| w.e).collect();
    let fbar = match Dagger2Functor::new(two, c, cells0, |p| lifts1[&p], |a| lifts2[&a]) {
        Ok(fbar) => fbar,
        Err(e) => return (None, fail("extension is a dagger 2-functor", vec![e.to_string()])),
    };

    let mut verdict = Verdict::Pass;
    'outer: for a in d.cells0() {
        let ia = fem.cell0_of(&Monad2::identity(d, a)).expect("identity monads are 0-cells");
        if fbar.cell0(ia) != f.cell0(a) {
            verdict = fail("F̄ I = F on 0-cells", vec![d.cell0_id(a).to_string()]);
            break;
        }
        for b in d.cells0() {
            let ib = fem.cell0_of(&Monad2::identity(d, b)).unwrap();
            for g in d.cells1(a, b) {
                let p = fem.find_one_cell(ia, ib, (g, d.id2(g))).expect("inclusion on 1-cells");
                if fbar.cell1(p) != f.cell1(g) {
                    verdict = fail("F̄ I = F on 1-cells", vec![d.cell1_id(g).to_string()]);
                    break 'outer;
                }
            }
            for al in d.cells2(a, b) {
                let (p, q) = (
                    fem.find_one_cell(ia, ib, (d.src2(al), d.id2(d.src2(al)))).unwrap(),
                    fem.find_one_cell(ia, ib, (d.tgt2(al), d.id2(d.tgt2(al)))).unwrap(),
                );
                let x = fem.find_two_cell(p, q, al).expect("inclusion on 2-cells");
                if fbar.cell2(x) != f.cell2(al) {
                    verdict = fail("F̄ I = F on 2-cells", vec![d.cell2_id(al).to_string()]);
                    break 'outer;
                }
            }
        }
    }
    if verdict.passed() {
        for x in two.cells0() {
            let m = fem.monad(x);
            let i = fem.cell0_of(&Monad2::identity(d, m.d)).unwrap();
            let Some(p) = fem.find_one_cell(x, i, (d.id1(m.d), m.eta)) else {
                verdict = fail("(1, η) is a 1-cell", vec![two.cell0_id(x).to_string()]);
                break;
            };
            if fbar.cell1(p) != witnesses[x.0].u {
                verdict = fail("F̄(1, η) = u", vec![two.cell0_id(x).to_string()]);
                break;
            }
            let v = fem_object_check(c, &images[x.0], &witnesses[x.0]);
            if !v.passed() {
                verdict = v;
                break;
            }
        }
    }
    (Some(fbar), verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::two_cat::find_fem_witnesses;
    use crate::two_cat::fixture::{sigma_z2, standard_fragment, terminal};

    #[test]
    fn identity_extension_on_sigma_z2() {
        let k = sigma_z2();
        let ext =
            extend_2functor(&k, &k, &Dagger2Functor::identity(&k), |m| find_fem_witnesses(&k, m).first().copied())
                .unwrap();
        assert_eq!(ext.verdict, Verdict::Pass);
    }

    #[test]
    fn extension_into_fragment_uses_fem_witness() {
        let sf = standard_fragment(false);
        let (fr, k) = (&sf.fragment, &sf.fragment.two);
        let ts = fr.monad_of(&sf.ts).unwrap();
        let w = fr.witness_of(&sf.fem).unwrap();
        let ext = extend_2functor(k, k, &Dagger2Functor::identity(k), |m| {
            if *m == ts {
                Some(w)
            } else {
                find_fem_witnesses(k, m).first().copied()
            }
        })
        .unwrap();
        assert_eq!(ext.verdict, Verdict::Pass, "{:?}", ext.verdict);
        let x = ext.fem.cell0_of(&ts).unwrap();
        assert_eq!(ext.fbar.unwrap().cell0(x), w.e);
    }

    #[test]
    fn missing_witness_is_an_error() {
        let sf = standard_fragment(false);
        let k = &sf.fragment.two;
        let res = extend_2functor(k, k, &Dagger2Functor::identity(k), |_| None);
        assert!(matches!(res, Err(TwoCatError::MissingWitness { .. })));
        let t = terminal();
        assert!(extend_2functor(&t, &t, &Dagger2Functor::identity(&t), |_| None).unwrap().verdict.passed());
    }
}
