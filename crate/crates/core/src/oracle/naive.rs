//! A deliberately plain re-implementation of finite dagger categories: ids
//! are resolved once into index tables and every axiom is a direct loop.

use std::collections::{BTreeMap, HashMap};

use crate::fincat::{CategoryDescription, FinDaggerCategory};

#[derive(Clone, Debug)]
pub struct NaiveCat {
    pub objects: Vec<String>,
    pub morphisms: Vec<String>,
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    pub ident: Vec<usize>,
    pub dagger: Vec<usize>,
    comp: HashMap<(usize, usize), usize>,
}

impl NaiveCat {
    /// Resolves the tables; `Err` describes the first structural problem.
    // Plain index loops keep the oracle easy to audit.
    #[allow(clippy::needless_range_loop)]
    pub fn new(desc: &CategoryDescription) -> Result<Self, String> {
        let mut objects = desc.objects.clone();
        objects.sort();
        if objects.windows(2).any(|w| w[0] == w[1]) {
            return Err("duplicate object".into());
        }
        let mut decls = desc.morphisms.clone();
        decls.sort_by(|a, b| a.id.cmp(&b.id));
        if decls.windows(2).any(|w| w[0].id == w[1].id) {
            return Err("duplicate morphism".into());
        }
        let oix: HashMap<&str, usize> = objects.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let mix: HashMap<&str, usize> = decls.iter().enumerate().map(|(i, d)| (d.id.as_str(), i)).collect();
        let o = |s: &str| oix.get(s).copied().ok_or_else(|| format!("unknown object {s}"));
        let m = |s: &str| mix.get(s).copied().ok_or_else(|| format!("unknown morphism {s}"));
        let mut src = Vec::new();
        let mut tgt = Vec::new();
        for d in &decls {
            src.push(o(&d.src)?);
            tgt.push(o(&d.tgt)?);
        }
        for (k, v) in &desc.identities {
            o(k)?;
            m(v)?;
        }
        let mut ident = Vec::new();
        for x in &objects {
            let i = m(desc.identities.get(x).ok_or("missing identity")?)?;
            if src[i] != oix[x.as_str()] || tgt[i] != oix[x.as_str()] {
                return Err("identity is not an endomorphism of its object".into());
            }
            ident.push(i);
        }
        let mut comp = HashMap::new();
        for [g, f, gf] in &desc.composition {
            let (g, f, gf) = (m(g)?, m(f)?, m(gf)?);
            if src[g] != tgt[f] {
                return Err("non-composable pair listed".into());
            }
            if src[gf] != src[f] || tgt[gf] != tgt[g] {
                return Err("composite has wrong endpoints".into());
            }
            if let Some(prev) = comp.insert((g, f), gf) {
                if prev != gf {
                    return Err("conflicting composites".into());
                }
            }
        }
        for g in 0..decls.len() {
            for f in 0..decls.len() {
                if src[g] == tgt[f] && !comp.contains_key(&(g, f)) {
                    return Err("missing composite".into());
                }
            }
        }
        for (k, v) in &desc.dagger {
            m(k)?;
            m(v)?;
        }
        let mut dagger = Vec::new();
        for d in &decls {
            dagger.push(m(desc.dagger.get(&d.id).ok_or("missing dagger")?)?);
        }
        Ok(NaiveCat { objects, morphisms: decls.into_iter().map(|d| d.id).collect(), src, tgt, ident, dagger, comp })
    }

    pub fn of(c: &FinDaggerCategory) -> Self {
        NaiveCat::new(&c.to_description()).expect("validated categories resolve")
    }

    pub fn n_obj(&self) -> usize {
        self.objects.len()
    }

    pub fn n_mor(&self) -> usize {
        self.morphisms.len()
    }

    /// `g∘f`; panics on a non-composable pair.
    pub fn c(&self, g: usize, f: usize) -> usize {
        self.comp[&(g, f)]
    }

    pub fn hom(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.n_mor()).filter(|&f| self.src[f] == a && self.tgt[f] == b).collect()
    }

    pub fn obj(&self, id: &str) -> Option<usize> {
        self.objects.iter().position(|x| x == id)
    }

    pub fn mor(&self, id: &str) -> Option<usize> {
        self.morphisms.iter().position(|x| x == id)
    }

    pub fn axioms_hold(&self) -> bool {
        let n = self.n_mor();
        for f in 0..n {
            if self.c(self.ident[self.tgt[f]], f) != f || self.c(f, self.ident[self.src[f]]) != f {
                return false;
            }
            let d = self.dagger[f];
            if self.src[d] != self.tgt[f] || self.tgt[d] != self.src[f] || self.dagger[d] != f {
                return false;
            }
        }
        for h in 0..n {
            for g in 0..n {
                if self.src[h] != self.tgt[g] {
                    continue;
                }
                let hg = self.c(h, g);
                if self.dagger[hg] != self.c(self.dagger[g], self.dagger[h]) {
                    return false;
                }
                for f in 0..n {
                    if self.src[g] == self.tgt[f] && self.c(hg, f) != self.c(h, self.c(g, f)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// The independent verdict on a raw table.
pub fn naive_validate(desc: &CategoryDescription) -> bool {
    NaiveCat::new(desc).map(|c| c.axioms_hold()).unwrap_or(false)
}

/// A functor as two index maps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NaiveFunctor {
    pub objects: Vec<usize>,
    pub morphisms: Vec<usize>,
}

impl NaiveFunctor {
    pub fn label(&self, a: &NaiveCat, b: &NaiveCat) -> String {
        let objs: Vec<String> =
            (0..a.n_obj()).map(|x| format!("{}:{}", a.objects[x], b.objects[self.objects[x]])).collect();
        let mors: Vec<String> =
            (0..a.n_mor()).map(|f| format!("{}:{}", a.morphisms[f], b.morphisms[self.morphisms[f]])).collect();
        format!("[{};{}]", objs.join(","), mors.join(","))
    }

    pub fn then(&self, g: &NaiveFunctor) -> NaiveFunctor {
        NaiveFunctor {
            objects: self.objects.iter().map(|&x| g.objects[x]).collect(),
            morphisms: self.morphisms.iter().map(|&x| g.morphisms[x]).collect(),
        }
    }
}

pub fn components_label(c: &NaiveCat, comps: &[usize]) -> String {
    let parts: BTreeMap<&str, &str> =
        comps.iter().enumerate().map(|(x, &m)| (c.objects[x].as_str(), c.morphisms[m].as_str())).collect();
    let body: Vec<String> = parts.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    format!("{{{}}}", body.join(","))
}
