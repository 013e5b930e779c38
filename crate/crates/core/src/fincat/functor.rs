//! Functors between finite categories and the exhaustive checks on them.

use super::build::{indiscrete, product};
use super::group::{FiniteGroup, GroupAction};
use super::{action_groupoid, from_group, group_set_category, poset, FinCatError, FiniteCategory};

/// Unvalidated functor description, indices into the source and target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctorData {
    pub object_map: Vec<usize>,
    pub morphism_map: Vec<usize>,
}

/// A functor that has been checked to preserve sources, targets, identities
/// and composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functor {
    source: FiniteCategory,
    target: FiniteCategory,
    object_map: Vec<usize>,
    morphism_map: Vec<usize>,
}

impl Functor {
    pub fn new(source: FiniteCategory, target: FiniteCategory, data: FunctorData) -> Result<Self, FinCatError> {
        let problems = check(&source, &target, &data);
        if !problems.is_empty() {
            return Err(FinCatError::InvalidFunctor(problems));
        }
        Ok(Self {
            source,
            target,
            object_map: data.object_map,
            morphism_map: data.morphism_map,
        })
    }

    pub fn source(&self) -> &FiniteCategory {
        &self.source
    }

    pub fn target(&self) -> &FiniteCategory {
        &self.target
    }

    pub fn object_map(&self) -> &[usize] {
        &self.object_map
    }

    pub fn morphism_map(&self) -> &[usize] {
        &self.morphism_map
    }

    pub fn on_object(&self, a: usize) -> usize {
        self.object_map[a]
    }

    pub fn on_morphism(&self, f: usize) -> usize {
        self.morphism_map[f]
    }

    pub fn to_data(&self) -> FunctorData {
        FunctorData {
            object_map: self.object_map.clone(),
            morphism_map: self.morphism_map.clone(),
        }
    }

    pub fn identity(c: &FiniteCategory) -> Self {
        Self {
            source: c.clone(),
            target: c.clone(),
            object_map: (0..c.object_count()).collect(),
            morphism_map: (0..c.morphism_count()).collect(),
        }
    }

    /// First projection `A × B → A`.
    pub fn projection(a: &FiniteCategory, b: &FiniteCategory) -> Self {
        let (nb, mb) = (b.object_count(), b.morphism_count());
        let source = product(a, b);
        Self {
            object_map: (0..source.object_count()).map(|k| k / nb).collect(),
            morphism_map: (0..source.morphism_count()).map(|k| k / mb).collect(),
            source,
            target: a.clone(),
        }
    }

    /// The equivalence `C × indiscrete(k) → C` that forgets which of the `k`
    /// isomorphic copies an object is.
    pub fn collapse_copies(c: &FiniteCategory, k: usize) -> Self {
        Self::projection(c, &indiscrete(k))
    }

    /// Every morphism to the identity of `object` in `target`.
    pub fn constant(source: &FiniteCategory, target: &FiniteCategory, object: usize) -> Result<Self, FinCatError> {
        let id = target.identity(object);
        Self::new(
            source.clone(),
            target.clone(),
            FunctorData {
                object_map: vec![object; source.object_count()],
                morphism_map: vec![id; source.morphism_count()],
            },
        )
    }

    /// Inclusion of the full subcategory on `objects`.
    pub fn inclusion(c: &FiniteCategory, objects: &[usize]) -> Self {
        let sub = c.full_subcategory(objects);
        let morphism_map = sub
            .morphisms()
            .iter()
            .map(|m| c.morphism_index(&m.id).expect("subcategory keeps ids"))
            .collect();
        Self {
            source: sub,
            target: c.clone(),
            object_map: objects.to_vec(),
            morphism_map,
        }
    }

    /// `X // G → G`, sending the arrow labelled `g` to `g`.
    pub fn action_quotient(action: &GroupAction) -> Self {
        let source = action_groupoid(action);
        let order = action.group().order();
        Self {
            object_map: vec![0; source.object_count()],
            morphism_map: (0..source.morphism_count()).map(|k| k % order).collect(),
            source,
            target: from_group(action.group()),
        }
    }

    /// The functor between one-object groupoids induced by a homomorphism
    /// `map: G → H`.
    pub fn group_homomorphism(g: &FiniteGroup, h: &FiniteGroup, map: Vec<usize>) -> Result<Self, FinCatError> {
        Self::new(
            from_group(g),
            from_group(h),
            FunctorData {
                object_map: vec![0],
                morphism_map: map,
            },
        )
    }

    /// The functor from the group-set category to `0 → 1`, sending each
    /// object to itself.
    pub fn group_set_projection(action: &GroupAction) -> Self {
        let source = group_set_category(action);
        let target = poset(2, |i, j| i < j).expect("two-element chain");
        let arrow = target.morphism_index("0<1").expect("0<1");
        let morphism_map = (0..source.morphism_count())
            .map(|f| match (source.src(f), source.tgt(f)) {
                (0, 0) => target.identity(0),
                (1, 1) => target.identity(1),
                _ => arrow,
            })
            .collect();
        Self {
            source,
            target,
            object_map: vec![0, 1],
            morphism_map,
        }
    }

    /// `p ⊔ q : E ⊔ E' → B ⊔ B'`.
    pub fn disjoint_union(p: &Self, q: &Self) -> Self {
        let source = super::disjoint_union(&p.source, &q.source);
        let target = super::disjoint_union(&p.target, &q.target);
        let (no, nm) = (p.target.object_count(), p.target.morphism_count());
        Self {
            object_map: p
                .object_map
                .iter()
                .copied()
                .chain(q.object_map.iter().map(|&o| o + no))
                .collect(),
            morphism_map: p
                .morphism_map
                .iter()
                .copied()
                .chain(q.morphism_map.iter().map(|&m| m + nm))
                .collect(),
            source,
            target,
        }
    }

    /// `p × q : E × E' → B × B'`.
    pub fn product(p: &Self, q: &Self) -> Self {
        let source = product(&p.source, &q.source);
        let target = product(&p.target, &q.target);
        let (sn, sm) = (q.source.object_count(), q.source.morphism_count());
        let (tn, tm) = (q.target.object_count(), q.target.morphism_count());
        Self {
            object_map: (0..source.object_count())
                .map(|k| p.object_map[k / sn] * tn + q.object_map[k % sn])
                .collect(),
            morphism_map: (0..source.morphism_count())
                .map(|k| p.morphism_map[k / sm] * tm + q.morphism_map[k % sm])
                .collect(),
            source,
            target,
        }
    }

    /// `q ∘ p`.
    pub fn then(&self, q: &Self) -> Result<Self, FinCatError> {
        if self.target != q.source {
            return Err(FinCatError::InvalidFunctor(vec![
                "target of the first functor is not the source of the second".into(),
            ]));
        }
        Ok(Self {
            source: self.source.clone(),
            target: q.target.clone(),
            object_map: self.object_map.iter().map(|&o| q.object_map[o]).collect(),
            morphism_map: self.morphism_map.iter().map(|&m| q.morphism_map[m]).collect(),
        })
    }
}

fn check(source: &FiniteCategory, target: &FiniteCategory, data: &FunctorData) -> Vec<String> {
    let mut out = Vec::new();
    if data.object_map.len() != source.object_count() {
        out.push(format!(
            "object map has {} entries for {} objects",
            data.object_map.len(),
            source.object_count()
        ));
    }
    if data.morphism_map.len() != source.morphism_count() {
        out.push(format!(
            "morphism map has {} entries for {} morphisms",
            data.morphism_map.len(),
            source.morphism_count()
        ));
    }
    if data.object_map.iter().any(|&o| o >= target.object_count())
        || data.morphism_map.iter().any(|&m| m >= target.morphism_count())
    {
        out.push("map refers to an element outside the target".into());
    }
    if !out.is_empty() {
        return out;
    }
    let (om, mm) = (&data.object_map, &data.morphism_map);
    for (f, m) in source.morphisms().iter().enumerate() {
        let image = mm[f];
        if target.src(image) != om[m.src] || target.tgt(image) != om[m.tgt] {
            out.push(format!("{} is not sent between the images of its endpoints", m.id));
        }
    }
    for o in 0..source.object_count() {
        if mm[source.identity(o)] != target.identity(om[o]) {
            out.push(format!("identity of {} is not preserved", source.objects()[o]));
        }
    }
    if !out.is_empty() {
        return out;
    }
    for g in 0..source.morphism_count() {
        for f in 0..source.morphism_count() {
            if let Some(h) = source.compose(g, f) {
                if target.compose(mm[g], mm[f]) != Some(mm[h]) {
                    out.push(format!(
                        "composite {}∘{} is not preserved",
                        source.morphisms()[g].id,
                        source.morphisms()[f].id
                    ));
                }
            }
        }
    }
    out
}

/// Result of [`is_equivalence`], with the lexicographically first failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquivalenceVerdict {
    Equivalence,
    NotFaithful { a: String, b: String },
    NotFull { a: String, b: String },
    NotEssentiallySurjective { object: String },
}

impl EquivalenceVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, EquivalenceVerdict::Equivalence)
    }
}

/// Fully faithful and essentially surjective, decided exhaustively.
pub fn is_equivalence(f: &Functor) -> EquivalenceVerdict {
    let (s, t) = (&f.source, &f.target);
    for a in 0..s.object_count() {
        for b in 0..s.object_count() {
            let src_hom = s.hom(a, b);
            let mut images: Vec<usize> = src_hom.iter().map(|&m| f.on_morphism(m)).collect();
            images.sort_unstable();
            images.dedup();
            let names = || (s.objects()[a].clone(), s.objects()[b].clone());
            if images.len() != src_hom.len() {
                let (a, b) = names();
                return EquivalenceVerdict::NotFaithful { a, b };
            }
            if images.len() != t.hom(f.on_object(a), f.on_object(b)).len() {
                let (a, b) = names();
                return EquivalenceVerdict::NotFull { a, b };
            }
        }
    }
    for b in 0..t.object_count() {
        let hit = (0..s.object_count()).any(|a| t.find_isomorphism(f.on_object(a), b).is_some());
        if !hit {
            return EquivalenceVerdict::NotEssentiallySurjective {
                object: t.objects()[b].clone(),
            };
        }
    }
    EquivalenceVerdict::Equivalence
}

/// Result of [`is_isofibration`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsofibrationVerdict {
    Isofibration,
    /// The isomorphism `morphism : p(object) → b` has no lift starting at
    /// `object`.
    NoLift {
        object: String,
        morphism: String,
    },
}

impl IsofibrationVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, IsofibrationVerdict::Isofibration)
    }
}

/// Every isomorphism `f : p(e) → b` must lift to an isomorphism `g : e → e'`
/// with `p(g) = f`.
pub fn is_isofibration(p: &Functor) -> IsofibrationVerdict {
    let (s, t) = (&p.source, &p.target);
    for e in 0..s.object_count() {
        let pe = p.on_object(e);
        for b in 0..t.object_count() {
            for &f in t.hom(pe, b) {
                if !t.is_isomorphism(f) {
                    continue;
                }
                let lifted = (0..s.object_count()).any(|e2| {
                    s.hom(e, e2)
                        .iter()
                        .any(|&g| p.on_morphism(g) == f && s.is_isomorphism(g))
                });
                if !lifted {
                    return IsofibrationVerdict::NoLift {
                        object: s.objects()[e].clone(),
                        morphism: t.morphisms()[f].id.clone(),
                    };
                }
            }
        }
    }
    IsofibrationVerdict::Isofibration
}

/// The subcategory of the source over `b`: objects sent to `b` and morphisms
/// sent to its identity.
pub fn strict_fiber(p: &Functor, b: &str) -> Result<FiniteCategory, FinCatError> {
    let b = p
        .target
        .object_index(b)
        .ok_or_else(|| FinCatError::UnknownObject(b.to_string()))?;
    Ok(strict_fiber_at(p, b))
}

pub(crate) fn strict_fiber_at(p: &Functor, b: usize) -> FiniteCategory {
    let objects: Vec<usize> = (0..p.source.object_count()).filter(|&e| p.on_object(e) == b).collect();
    let id = p.target.identity(b);
    p.source.subcategory(&objects, |f| p.on_morphism(f) == id)
}
