//! Explicit finite categories and functors.
//!
//! A [`FiniteCategory`] stores every morphism and a total composition table,
//! so all of its structure (isomorphisms, connected components, fibers) can be
//! decided by exhaustive search. Raw input is described by [`CategoryData`]
//! and only becomes a `FiniteCategory` once [`validate`] reports no
//! violations.

mod build;
mod fibration;
mod functor;
pub mod group;
mod two_groupoid;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::enriched::{EnrichedCategory, EnrichedError};
use crate::measure::{Enrichment, HomObject};

pub use build::*;
pub use fibration::{groupoid_chi, verify_product_formula, BaseComponent, FibrationReport};
pub use functor::{
    is_equivalence, is_isofibration, strict_fiber, EquivalenceVerdict, Functor, FunctorData, IsofibrationVerdict,
};
pub use two_groupoid::two_groupoid_chi;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub id: String,
    pub src: usize,
    pub tgt: usize,
}

/// Unvalidated description of a finite category, as read from input.
///
/// `compose[(g, f)] = h` records `g ∘ f = h` (apply `f` first).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CategoryData {
    pub objects: Vec<String>,
    pub morphisms: Vec<Morphism>,
    pub identity: Vec<Option<usize>>,
    pub compose: BTreeMap<(usize, usize), usize>,
}

/// One broken invariant of a [`CategoryData`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DuplicateObject(String),
    DuplicateMorphism(String),
    DanglingMorphism(String),
    MissingIdentity(String),
    IdentityNotEndomorphism { object: String, morphism: String },
    MissingComposite { g: String, f: String },
    NotComposable { g: String, f: String },
    CompositeWrongType { g: String, f: String, h: String },
    UnitLaw { morphism: String },
    Associativity { h: String, g: String, f: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateObject(o) => write!(out, "duplicate object {o}"),
            Violation::DuplicateMorphism(m) => write!(out, "duplicate morphism {m}"),
            Violation::DanglingMorphism(m) => {
                write!(out, "morphism {m} refers to an unknown object")
            }
            Violation::MissingIdentity(o) => write!(out, "missing identity for object {o}"),
            Violation::IdentityNotEndomorphism { object, morphism } => {
                write!(out, "identity {morphism} of {object} is not an endomorphism of it")
            }
            Violation::MissingComposite { g, f } => write!(out, "missing composite {g}∘{f}"),
            Violation::NotComposable { g, f } => {
                write!(out, "composite {g}∘{f} given for a non-composable pair")
            }
            Violation::CompositeWrongType { g, f, h } => {
                write!(out, "composite {g}∘{f} = {h} has the wrong source or target")
            }
            Violation::UnitLaw { morphism } => write!(out, "unit law fails for {morphism}"),
            Violation::Associativity { h, g, f } => {
                write!(out, "associativity fails for ({h}, {g}, {f})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FinCatError {
    #[error("invalid category: {}", join(.0))]
    InvalidCategory(Vec<Violation>),
    #[error("invalid functor: {}", .0.join("; "))]
    InvalidFunctor(Vec<String>),
    #[error("unknown object {0}")]
    UnknownObject(String),
    #[error("{role} is not a groupoid: morphism {morphism} is not invertible")]
    NotAGroupoid { role: String, morphism: String },
    #[error("not an isofibration: isomorphism {morphism} out of p({object}) has no lift")]
    NotAnIsofibration { object: String, morphism: String },
    #[error("not a 2-groupoid: {0}")]
    NotA2Groupoid(String),
    #[error("Euler characteristic undefined for {0}")]
    ChiUndefined(String),
    #[error(transparent)]
    Enriched(#[from] EnrichedError),
}

fn join(vs: &[Violation]) -> String {
    vs.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

/// Checks every category axiom on raw data and lists all violations found.
pub fn validate(data: &CategoryData) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = data.objects.len();

    let mut seen = HashSet::new();
    for o in &data.objects {
        if !seen.insert(o) {
            out.push(Violation::DuplicateObject(o.clone()));
        }
    }
    let mut seen = HashSet::new();
    for m in &data.morphisms {
        if !seen.insert(&m.id) {
            out.push(Violation::DuplicateMorphism(m.id.clone()));
        }
        if m.src >= n || m.tgt >= n {
            out.push(Violation::DanglingMorphism(m.id.clone()));
        }
    }
    if !out.is_empty() {
        return out;
    }

    let ms = &data.morphisms;
    let mut ids = Vec::with_capacity(n);
    for (o, name) in data.objects.iter().enumerate() {
        match data.identity.get(o).copied().flatten() {
            None => out.push(Violation::MissingIdentity(name.clone())),
            Some(i) if i >= ms.len() || ms[i].src != o || ms[i].tgt != o => {
                out.push(Violation::IdentityNotEndomorphism {
                    object: name.clone(),
                    morphism: ms.get(i).map_or_else(|| i.to_string(), |m| m.id.clone()),
                })
            }
            Some(i) => ids.push(i),
        }
    }

    for (&(g, f), &h) in &data.compose {
        if g >= ms.len() || f >= ms.len() || h >= ms.len() {
            out.push(Violation::NotComposable {
                g: g.to_string(),
                f: f.to_string(),
            });
            continue;
        }
        if ms[g].src != ms[f].tgt {
            out.push(Violation::NotComposable {
                g: ms[g].id.clone(),
                f: ms[f].id.clone(),
            });
        } else if ms[h].src != ms[f].src || ms[h].tgt != ms[g].tgt {
            out.push(Violation::CompositeWrongType {
                g: ms[g].id.clone(),
                f: ms[f].id.clone(),
                h: ms[h].id.clone(),
            });
        }
    }
    for (g, mg) in ms.iter().enumerate() {
        for (f, mf) in ms.iter().enumerate() {
            if mg.src == mf.tgt && !data.compose.contains_key(&(g, f)) {
                out.push(Violation::MissingComposite {
                    g: mg.id.clone(),
                    f: mf.id.clone(),
                });
            }
        }
    }
    if !out.is_empty() {
        return out;
    }

    let comp = |g: usize, f: usize| data.compose[&(g, f)];
    for (f, mf) in ms.iter().enumerate() {
        let left = data.identity[mf.tgt].unwrap();
        let right = data.identity[mf.src].unwrap();
        if comp(left, f) != f || comp(f, right) != f {
            out.push(Violation::UnitLaw {
                morphism: mf.id.clone(),
            });
        }
    }
    for (f, mf) in ms.iter().enumerate() {
        for (g, mg) in ms.iter().enumerate() {
            if mg.src != mf.tgt {
                continue;
            }
            for (h, mh) in ms.iter().enumerate() {
                if mh.src != mg.tgt {
                    continue;
                }
                if comp(h, comp(g, f)) != comp(comp(h, g), f) {
                    out.push(Violation::Associativity {
                        h: mh.id.clone(),
                        g: mg.id.clone(),
                        f: mf.id.clone(),
                    });
                }
            }
        }
    }
    out
}

/// A validated finite category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identity: Vec<usize>,
    /// `compose[g * m + f]`, `Some` exactly for composable pairs.
    compose: Vec<Option<usize>>,
    /// `homs[a * n + b]` lists the morphisms `a → b` in index order.
    homs: Vec<Vec<usize>>,
}

impl TryFrom<CategoryData> for FiniteCategory {
    type Error = FinCatError;

    fn try_from(data: CategoryData) -> Result<Self, Self::Error> {
        let violations = validate(&data);
        if !violations.is_empty() {
            return Err(FinCatError::InvalidCategory(violations));
        }
        let m = data.morphisms.len();
        let mut compose = vec![None; m * m];
        for ((g, f), h) in data.compose {
            compose[g * m + f] = Some(h);
        }
        Ok(Self::assemble(
            data.objects,
            data.morphisms,
            data.identity.into_iter().map(Option::unwrap).collect(),
            compose,
        ))
    }
}

impl FiniteCategory {
    fn assemble(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identity: Vec<usize>,
        compose: Vec<Option<usize>>,
    ) -> Self {
        let n = objects.len();
        let mut homs = vec![Vec::new(); n * n];
        for (i, m) in morphisms.iter().enumerate() {
            homs[m.src * n + m.tgt].push(i);
        }
        Self {
            objects,
            morphisms,
            identity,
            compose,
            homs,
        }
    }

    /// Builds a category from a composition rule, then validates it.
    pub(crate) fn from_fn(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identity: Vec<usize>,
        compose: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, FinCatError> {
        let mut table = BTreeMap::new();
        for (g, mg) in morphisms.iter().enumerate() {
            for (f, mf) in morphisms.iter().enumerate() {
                if mg.src == mf.tgt {
                    table.insert((g, f), compose(g, f));
                }
            }
        }
        Self::try_from(CategoryData {
            objects,
            morphisms,
            identity: identity.into_iter().map(Some).collect(),
            compose: table,
        })
    }

    pub fn to_data(&self) -> CategoryData {
        let m = self.morphisms.len();
        let compose = self
            .compose
            .iter()
            .enumerate()
            .filter_map(|(k, h)| h.map(|h| ((k / m, k % m), h)))
            .collect();
        CategoryData {
            objects: self.objects.clone(),
            morphisms: self.morphisms.clone(),
            identity: self.identity.iter().copied().map(Some).collect(),
            compose,
        }
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn object_index(&self, id: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == id)
    }

    pub fn morphism_index(&self, id: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.id == id)
    }

    pub fn src(&self, f: usize) -> usize {
        self.morphisms[f].src
    }

    pub fn tgt(&self, f: usize) -> usize {
        self.morphisms[f].tgt
    }

    pub fn identity(&self, object: usize) -> usize {
        self.identity[object]
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identity[self.src(f)] == f
    }

    /// `g ∘ f`, or `None` when `src(g) != tgt(f)`.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.compose[g * self.morphisms.len() + f]
    }

    /// Morphisms `a → b`, in index order.
    pub fn hom(&self, a: usize, b: usize) -> &[usize] {
        &self.homs[a * self.objects.len() + b]
    }

    /// The inverse of `f`, if `f` is an isomorphism.
    pub fn inverse(&self, f: usize) -> Option<usize> {
        let (a, b) = (self.src(f), self.tgt(f));
        self.hom(b, a)
            .iter()
            .copied()
            .find(|&g| self.compose(g, f) == Some(self.identity(a)) && self.compose(f, g) == Some(self.identity(b)))
    }

    pub fn is_isomorphism(&self, f: usize) -> bool {
        self.inverse(f).is_some()
    }

    /// Some isomorphism `a → b`, the first in index order.
    pub fn find_isomorphism(&self, a: usize, b: usize) -> Option<usize> {
        self.hom(a, b).iter().copied().find(|&f| self.is_isomorphism(f))
    }

    /// First morphism (in index order) that is not invertible.
    pub fn first_non_invertible(&self) -> Option<usize> {
        (0..self.morphisms.len()).find(|&f| !self.is_isomorphism(f))
    }

    pub fn is_groupoid(&self) -> bool {
        self.first_non_invertible().is_none()
    }

    /// Connected components under zigzags of morphisms. Classes are listed in
    /// order of their smallest object, objects ascending within a class.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.objects.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut x = x;
            while parent[x] != r {
                let next = parent[x];
                parent[x] = r;
                x = next;
            }
            r
        }
        for m in &self.morphisms {
            let (a, b) = (find(&mut parent, m.src), find(&mut parent, m.tgt));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        group_by_root(n, |x| find(&mut parent, x))
    }

    /// Partition of the objects into isomorphism classes, ordered as in
    /// [`components`](Self::components).
    pub fn isomorphism_classes(&self) -> Vec<Vec<usize>> {
        let n = self.objects.len();
        let mut rep: Vec<usize> = (0..n).collect();
        for b in 0..n {
            if let Some(a) = (0..b).find(|&a| rep[a] == a && self.find_isomorphism(a, b).is_some()) {
                rep[b] = a;
            }
        }
        group_by_root(n, |x| rep[x])
    }

    /// Full subcategory on the given objects (kept in the given order).
    pub fn full_subcategory(&self, objects: &[usize]) -> FiniteCategory {
        self.subcategory(objects, |_| true)
    }

    /// Subcategory on `objects` containing the morphisms between them that
    /// satisfy `keep`. The caller guarantees closure under identities and
    /// composition.
    pub(crate) fn subcategory(&self, objects: &[usize], keep: impl Fn(usize) -> bool) -> FiniteCategory {
        let new_obj: HashMap<usize, usize> = objects.iter().enumerate().map(|(i, &o)| (o, i)).collect();
        let kept: Vec<usize> = (0..self.morphisms.len())
            .filter(|&f| new_obj.contains_key(&self.src(f)) && new_obj.contains_key(&self.tgt(f)) && keep(f))
            .collect();
        let new_mor: HashMap<usize, usize> = kept.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let morphisms = kept
            .iter()
            .map(|&f| Morphism {
                id: self.morphisms[f].id.clone(),
                src: new_obj[&self.src(f)],
                tgt: new_obj[&self.tgt(f)],
            })
            .collect();
        let identity = objects.iter().map(|&o| new_mor[&self.identity(o)]).collect();
        let m = kept.len();
        let mut compose = vec![None; m * m];
        for (gi, &g) in kept.iter().enumerate() {
            for (fi, &f) in kept.iter().enumerate() {
                if let Some(h) = self.compose(g, f) {
                    compose[gi * m + fi] = Some(new_mor[&h]);
                }
            }
        }
        FiniteCategory::assemble(
            objects.iter().map(|&o| self.objects[o].clone()).collect(),
            morphisms,
            identity,
            compose,
        )
    }

    /// Number of zigzag-connected components.
    pub fn pi0_count(&self) -> usize {
        self.components().len()
    }
}

fn group_by_root(n: usize, mut root: impl FnMut(usize) -> usize) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut slot: HashMap<usize, usize> = HashMap::new();
    for x in 0..n {
        let r = root(x);
        let k = *slot.entry(r).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[k].push(x);
    }
    classes
}

/// Partition of the objects into zigzag-connected classes.
pub fn pi0_category(c: &FiniteCategory) -> Vec<Vec<usize>> {
    c.components()
}

/// The Set-enriched category with `hom(a, b) = #{f : a → b}`.
pub fn to_enriched(c: &FiniteCategory) -> EnrichedCategory {
    let n = c.object_count();
    EnrichedCategory::from_fn(Enrichment::Set, c.objects().to_vec(), |a, b| {
        HomObject::finset(BigUint::from(c.hom(a, b).len()))
    })
    .unwrap_or_else(|e| unreachable!("a valid category is always measurable: {e} ({n} objects)"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enriched::euler_characteristic;
    use crate::linalg::{frac, int};

    #[test]
    fn terminal_is_valid() {
        assert!(validate(&terminal().to_data()).is_empty());
    }

    #[test]
    fn idempotent_monoid_is_valid() {
        // {1, e} with e∘e = e, checked exhaustively by validate
        let c = monoid("M", &[vec![0, 1], vec![1, 1]]).unwrap();
        assert!(validate(&c.to_data()).is_empty());
        assert_eq!(c.morphism_count(), 2);
    }

    #[test]
    fn missing_composite_is_reported() {
        let mut data = monoid("M", &[vec![0, 1], vec![1, 1]]).unwrap().to_data();
        data.compose.remove(&(1, 1));
        let violations = validate(&data);
        assert_eq!(
            violations,
            vec![Violation::MissingComposite {
                g: "e1".into(),
                f: "e1".into()
            }]
        );
        assert!(violations[0].to_string().contains("missing composite"));
        assert!(FiniteCategory::try_from(data).is_err());
    }

    #[test]
    fn broken_unit_and_associativity_are_reported() {
        // one object, morphisms {1, a, b} with a table that is not associative
        let objects = vec!["x".to_string()];
        let morphisms: Vec<Morphism> = ["1", "a", "b"]
            .iter()
            .map(|id| Morphism {
                id: id.to_string(),
                src: 0,
                tgt: 0,
            })
            .collect();
        let check = |table: [[usize; 3]; 3]| {
            let mut compose = BTreeMap::new();
            for (g, row) in table.iter().enumerate() {
                for (f, &h) in row.iter().enumerate() {
                    compose.insert((g, f), h);
                }
            }
            validate(&CategoryData {
                objects: objects.clone(),
                morphisms: morphisms.clone(),
                identity: vec![Some(0)],
                compose,
            })
        };
        // a∘(a∘b) = a but (a∘a)∘b = b
        let violations = check([[0, 1, 2], [1, 2, 0], [2, 2, 2]]);
        assert!(violations.iter().any(|v| matches!(v, Violation::Associativity { .. })));
        // b∘1 = a
        let violations = check([[0, 1, 2], [1, 2, 0], [1, 2, 2]]);
        assert!(violations
            .iter()
            .any(|v| matches!(v, Violation::UnitLaw { morphism } if morphism == "b")));
    }

    #[test]
    fn bad_identity_and_duplicates() {
        let mut data = poset(2, |i, j| i < j).unwrap().to_data();
        data.identity[0] = None;
        data.objects[1] = data.objects[0].clone();
        let v = validate(&data);
        assert!(v.contains(&Violation::DuplicateObject("0".into())));

        let mut data = poset(2, |i, j| i < j).unwrap().to_data();
        let arrow = data.morphisms.iter().position(|m| m.src != m.tgt).unwrap();
        data.identity[0] = Some(arrow);
        let v = validate(&data);
        assert!(v.iter().any(|v| matches!(v, Violation::IdentityNotEndomorphism { .. })));
    }

    #[test]
    fn to_enriched_examples() {
        assert_eq!(euler_characteristic(&to_enriched(&terminal())).unwrap(), Some(int(1)));
        let z4 = from_group(&group::FiniteGroup::cyclic(4));
        assert_eq!(euler_characteristic(&to_enriched(&z4)).unwrap(), Some(frac(1, 4)));
        let chain = poset(3, |i, j| i < j).unwrap();
        assert_eq!(euler_characteristic(&to_enriched(&chain)).unwrap(), Some(int(1)));
    }

    #[test]
    fn pi0_examples() {
        assert_eq!(pi0_category(&discrete(3)).len(), 3);
        assert_eq!(pi0_category(&poset(2, |i, j| i < j).unwrap()).len(), 1);
        let c = disjoint_union(&poset(2, |i, j| i < j).unwrap(), &terminal());
        assert_eq!(pi0_category(&c), vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn zigzag_connects_cospans() {
        // 0 → 2 ← 1 is connected even though 0 and 1 share no morphism
        let c = poset(3, |i, j| j == 2 && i < 2).unwrap();
        assert_eq!(c.pi0_count(), 1);
    }

    #[test]
    fn isomorphism_classes_of_indiscrete() {
        let c = disjoint_union(&indiscrete(2), &poset(2, |i, j| i < j).unwrap());
        assert_eq!(c.isomorphism_classes(), vec![vec![0, 1], vec![2], vec![3]]);
        assert!(indiscrete(3).is_groupoid());
        assert!(!poset(2, |i, j| i < j).unwrap().is_groupoid());
    }

    #[test]
    fn data_round_trip() {
        let c = product(&from_group(&group::FiniteGroup::cyclic(2)), &indiscrete(2));
        assert_eq!(FiniteCategory::try_from(c.to_data()).unwrap(), c);
    }
}
