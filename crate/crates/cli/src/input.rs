//! Input documents and their resolution into library values. Every argument
//! is either a JSON file or `builtin:NAME`; references nested inside a file
//! are resolved relative to that file.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use dagger_fem::fincat::{validate_category, CategoryDescription, FinDaggerCategory};
use dagger_fem::fixtures;
use dagger_fem::functor::{validate_functor, DaggerFunctor};
use dagger_fem::lax::LaxFunctorDescription;
use dagger_fem::monad::{build_fem_category, validate_monad_ids, Adjunction, FrobeniusMonad};
use dagger_fem::two_cat::fixture::{
    locally_discrete, sigma_z2, standard_fragment, terminal, ts_monad,
};
use dagger_fem::two_cat::{
    validate_2category, Adjunction2, Cell0, Cell1, Cell2, FEMObjectWitness, FinDagger2Category,
    Monad2,
};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("malformed JSON in {path}: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),
    #[error("invalid {what}: {reason}")]
    Invalid { what: &'static str, reason: String },
    #[error("no {kind} `{id}`")]
    Dangling { kind: &'static str, id: String },
    #[error("missing argument: {0}")]
    Missing(&'static str),
}

fn invalid(what: &'static str) -> impl FnOnce(String) -> InputError {
    move |reason| InputError::Invalid { what, reason }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InputRef {
    pub path: String,
    pub sha256: String,
}

/// A category inline or by reference.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum CategoryRef {
    Named(String),
    Inline(CategoryDescription),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum TwoCategoryRef {
    Named(String),
    Inline(Box<dagger_fem::two_cat::TwoCategoryDescription>),
}

#[derive(Clone, Debug, Deserialize)]
pub struct FunctorDoc {
    pub source: CategoryRef,
    pub target: CategoryRef,
    pub objects: BTreeMap<String, String>,
    pub morphisms: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct MapsDoc {
    pub objects: BTreeMap<String, String>,
    pub morphisms: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct MonadDoc {
    pub category: CategoryRef,
    pub endofunctor: MapsDoc,
    pub mu: BTreeMap<String, String>,
    pub eta: BTreeMap<String, String>,
}

/// `left: A → D`, `right: D → A`; unit components keyed by objects of `A`,
/// counit components by objects of `D`.
#[derive(Clone, Debug, Deserialize)]
pub struct AdjunctionDoc {
    pub left: FunctorDoc,
    pub right: FunctorDoc,
    pub unit: BTreeMap<String, String>,
    pub counit: BTreeMap<String, String>,
}

/// A monad in a 2-category, by cell id.
#[derive(Clone, Debug, Deserialize)]
pub struct MonadCells {
    pub zero_cell: String,
    pub t: String,
    pub mu: String,
    pub eta: String,
}

#[derive(Clone, Debug, Deserialize)]
pub struct WitnessCells {
    pub e: String,
    pub u: String,
    pub xi: String,
    pub f_t: String,
    pub eps_t: String,
}

/// `f: D → A`, `u: A → D` for the monad's 0-cell `D`.
#[derive(Clone, Debug, Deserialize)]
pub struct AdjunctionCells {
    pub a: String,
    pub f: String,
    pub u: String,
    pub eta: String,
    pub eps: String,
}

#[derive(Clone, Debug, Deserialize)]
pub struct PairCells {
    pub monad: MonadCells,
    pub witness: WitnessCells,
}

/// A lax-natural cone `Δ_L → F`: components keyed by source 0-cell and `τ`
/// rows `[A, B, f, τ_f]`.
#[derive(Clone, Debug, Deserialize)]
pub struct ConeCells {
    pub components: BTreeMap<String, String>,
    pub tau: Vec<[String; 4]>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct ProblemDoc {
    pub two_category: TwoCategoryRef,
    pub monad: Option<MonadCells>,
    pub witness: Option<WitnessCells>,
    pub adjunction: Option<AdjunctionCells>,
    pub second: Option<PairCells>,
    pub lax_functor: Option<LaxFunctorDescription>,
    pub limit: Option<String>,
    pub cone: Option<ConeCells>,
}

/// Resolved problem data.
pub struct Problem {
    pub k: Arc<FinDagger2Category>,
    pub doc: ProblemDoc,
}

impl Problem {
    pub fn cell0(&self, id: &str) -> Result<Cell0, InputError> {
        self.k.find_cell0(id).ok_or_else(|| InputError::Dangling {
            kind: "0-cell",
            id: id.into(),
        })
    }

    pub fn cell1(&self, a: Cell0, b: Cell0, id: &str) -> Result<Cell1, InputError> {
        self.k
            .find_cell1(a, b, id)
            .ok_or_else(|| InputError::Dangling {
                kind: "1-cell",
                id: id.into(),
            })
    }

    pub fn cell2(&self, a: Cell0, b: Cell0, id: &str) -> Result<Cell2, InputError> {
        self.k
            .find_cell2(a, b, id)
            .ok_or_else(|| InputError::Dangling {
                kind: "2-cell",
                id: id.into(),
            })
    }

    pub fn monad_from(&self, m: &MonadCells) -> Result<Monad2, InputError> {
        let d = self.cell0(&m.zero_cell)?;
        let t = self.cell1(d, d, &m.t)?;
        Monad2::new(
            &self.k,
            t,
            self.cell2(d, d, &m.mu)?,
            self.cell2(d, d, &m.eta)?,
        )
        .map_err(|e| invalid("monad")(e.to_string()))
    }

    pub fn witness_from(
        &self,
        m: &Monad2,
        w: &WitnessCells,
    ) -> Result<FEMObjectWitness, InputError> {
        let (d, e) = (m.d, self.cell0(&w.e)?);
        Ok(FEMObjectWitness {
            e,
            u: self.cell1(e, d, &w.u)?,
            xi: self.cell2(e, d, &w.xi)?,
            f_t: self.cell1(d, e, &w.f_t)?,
            eps_t: self.cell2(e, e, &w.eps_t)?,
        })
    }

    pub fn monad(&self) -> Result<Monad2, InputError> {
        self.monad_from(
            self.doc
                .monad
                .as_ref()
                .ok_or(InputError::Missing("monad"))?,
        )
    }

    pub fn witness(&self, m: &Monad2) -> Result<FEMObjectWitness, InputError> {
        self.witness_from(
            m,
            self.doc
                .witness
                .as_ref()
                .ok_or(InputError::Missing("witness"))?,
        )
    }

    pub fn adjunction(&self, m: &Monad2) -> Result<Adjunction2, InputError> {
        let adj = self
            .doc
            .adjunction
            .as_ref()
            .ok_or(InputError::Missing("adjunction"))?;
        let (d, a) = (m.d, self.cell0(&adj.a)?);
        Ok(Adjunction2 {
            f: self.cell1(d, a, &adj.f)?,
            u: self.cell1(a, d, &adj.u)?,
            eta: self.cell2(d, d, &adj.eta)?,
            eps: self.cell2(a, a, &adj.eps)?,
        })
    }
}

/// Reads inputs and remembers each file's content hash for the report.
#[derive(Default)]
pub struct Loader {
    pub inputs: Vec<InputRef>,
}

fn builtin(arg: &str) -> Option<&str> {
    arg.strip_prefix("builtin:")
}

impl Loader {
    fn record(&mut self, path: &str, bytes: &[u8]) {
        let sha256 = format!("{:x}", Sha256::digest(bytes));
        let entry = InputRef {
            path: path.to_string(),
            sha256,
        };
        if !self.inputs.contains(&entry) {
            self.inputs.push(entry);
        }
    }

    fn read<T: DeserializeOwned>(&mut self, path: &Path) -> Result<T, InputError> {
        let bytes = std::fs::read(path).map_err(|source| InputError::Io {
            path: path.into(),
            source,
        })?;
        self.record(&path.display().to_string(), &bytes);
        serde_json::from_slice(&bytes).map_err(|source| InputError::Json {
            path: path.into(),
            source,
        })
    }

    fn builtin_ref(&mut self, arg: &str) {
        self.inputs.push(InputRef {
            path: arg.to_string(),
            sha256: String::new(),
        });
    }

    fn resolve(base: &Path, arg: &str) -> PathBuf {
        base.join(arg)
    }

    pub fn category_description(&mut self, arg: &str) -> Result<CategoryDescription, InputError> {
        self.category_description_in(Path::new("."), arg)
    }

    fn category_description_in(
        &mut self,
        base: &Path,
        arg: &str,
    ) -> Result<CategoryDescription, InputError> {
        match builtin(arg) {
            Some(name) => {
                self.builtin_ref(arg);
                fixtures::by_name(name)
                    .map(|c| c.to_description())
                    .ok_or_else(|| InputError::UnknownBuiltin(arg.into()))
            }
            None => self.read(&Self::resolve(base, arg)),
        }
    }

    pub fn category(&mut self, arg: &str) -> Result<Arc<FinDaggerCategory>, InputError> {
        let desc = self.category_description(arg)?;
        Ok(Arc::new(
            validate_category(&desc).map_err(|e| invalid("category")(e.to_string()))?,
        ))
    }

    fn category_ref(
        &mut self,
        base: &Path,
        r: &CategoryRef,
    ) -> Result<Arc<FinDaggerCategory>, InputError> {
        let desc = match r {
            CategoryRef::Named(arg) => self.category_description_in(base, arg)?,
            CategoryRef::Inline(d) => d.clone(),
        };
        Ok(Arc::new(
            validate_category(&desc).map_err(|e| invalid("category")(e.to_string()))?,
        ))
    }

    fn functor_doc(&mut self, base: &Path, doc: &FunctorDoc) -> Result<DaggerFunctor, InputError> {
        let (s, t) = (
            self.category_ref(base, &doc.source)?,
            self.category_ref(base, &doc.target)?,
        );
        validate_functor(s, t, &doc.objects, &doc.morphisms)
            .map_err(|e| invalid("functor")(e.to_string()))
    }

    pub fn functor(&mut self, arg: &str) -> Result<DaggerFunctor, InputError> {
        let path = PathBuf::from(arg);
        let doc: FunctorDoc = self.read(&path)?;
        self.functor_doc(parent(&path), &doc)
    }

    pub fn monad(&mut self, arg: &str) -> Result<FrobeniusMonad, InputError> {
        match builtin(arg) {
            Some("TS") => {
                self.builtin_ref(arg);
                Ok(ts_monad())
            }
            Some(name) => match name.strip_prefix("ID:").and_then(fixtures::by_name) {
                Some(c) => {
                    self.builtin_ref(arg);
                    Ok(FrobeniusMonad::identity(&Arc::new(c)))
                }
                None => Err(InputError::UnknownBuiltin(arg.into())),
            },
            None => {
                let path = PathBuf::from(arg);
                let doc: MonadDoc = self.read(&path)?;
                let c = self.category_ref(parent(&path), &doc.category)?;
                let t = validate_functor(
                    c.clone(),
                    c.clone(),
                    &doc.endofunctor.objects,
                    &doc.endofunctor.morphisms,
                )
                .map_err(|e| invalid("endofunctor")(e.to_string()))?;
                validate_monad_ids(c, t, &doc.mu, &doc.eta)
                    .map_err(|e| invalid("monad")(e.to_string()))
            }
        }
    }

    pub fn adjunction(&mut self, arg: &str) -> Result<Adjunction, InputError> {
        match builtin(arg) {
            Some("FEM:TS") => {
                self.builtin_ref(arg);
                Ok(build_fem_category(&ts_monad())
                    .expect("TS is Frobenius")
                    .adj)
            }
            Some("KL:TS") => {
                self.builtin_ref(arg);
                Ok(dagger_fem::kleisli::build_kleisli(&ts_monad())
                    .expect("TS is Frobenius")
                    .adj)
            }
            Some(_) => Err(InputError::UnknownBuiltin(arg.into())),
            None => {
                let path = PathBuf::from(arg);
                let doc: AdjunctionDoc = self.read(&path)?;
                let base = parent(&path);
                let (left, right) = (
                    self.functor_doc(base, &doc.left)?,
                    self.functor_doc(base, &doc.right)?,
                );
                let comps = |c: &FinDaggerCategory, table: &BTreeMap<String, String>| {
                    c.objects()
                        .map(|x| {
                            let id =
                                table.get(c.obj_id(x)).ok_or_else(|| InputError::Dangling {
                                    kind: "component at",
                                    id: c.obj_id(x).into(),
                                })?;
                            c.find_morphism(id).ok_or_else(|| InputError::Dangling {
                                kind: "morphism",
                                id: id.clone(),
                            })
                        })
                        .collect::<Result<Vec<_>, InputError>>()
                };
                let unit = comps(left.source(), &doc.unit)?;
                let counit = comps(left.target(), &doc.counit)?;
                Adjunction::new(left, right, unit, counit)
                    .map_err(|e| invalid("adjunction")(e.to_string()))
            }
        }
    }

    pub fn two_category(&mut self, arg: &str) -> Result<Arc<FinDagger2Category>, InputError> {
        self.two_category_in(Path::new("."), &TwoCategoryRef::Named(arg.into()))
    }

    fn two_category_in(
        &mut self,
        base: &Path,
        r: &TwoCategoryRef,
    ) -> Result<Arc<FinDagger2Category>, InputError> {
        let desc = match r {
            TwoCategoryRef::Inline(d) => (**d).clone(),
            TwoCategoryRef::Named(arg) => match builtin(arg) {
                Some(name) => {
                    self.builtin_ref(arg);
                    return builtin_two(name)
                        .map(Arc::new)
                        .ok_or_else(|| InputError::UnknownBuiltin(arg.clone()));
                }
                None => self.read(&Self::resolve(base, arg))?,
            },
        };
        Ok(Arc::new(
            validate_2category(&desc).map_err(|e| invalid("2-category")(e.to_string()))?,
        ))
    }

    pub fn lax_functor(&mut self, arg: &str) -> Result<LaxFunctorDescription, InputError> {
        self.read(Path::new(arg))
    }

    pub fn problem(&mut self, arg: &str) -> Result<Problem, InputError> {
        let path = PathBuf::from(arg);
        let doc: ProblemDoc = self.read(&path)?;
        let k = self.two_category_in(parent(&path), &doc.two_category)?;
        Ok(Problem { k, doc })
    }
}

fn parent(path: &Path) -> &Path {
    path.parent().unwrap_or(Path::new("."))
}

/// `SIGMA_Z2`, `TERMINAL`, `FRAGMENT` (ONE, Z2, FEM(TS)), `FRAGMENT_KL`
/// (adds KL(TS)) and `LD:<category>` for locally discrete 2-categories.
pub fn builtin_two(name: &str) -> Option<FinDagger2Category> {
    match name {
        "SIGMA_Z2" => Some(sigma_z2()),
        "TERMINAL" => Some(terminal()),
        "FRAGMENT" => Some(standard_fragment(false).fragment.two),
        "FRAGMENT_KL" => Some(standard_fragment(true).fragment.two),
        _ => name
            .strip_prefix("LD:")
            .and_then(fixtures::by_name)
            .map(|c| locally_discrete(&c)),
    }
}
