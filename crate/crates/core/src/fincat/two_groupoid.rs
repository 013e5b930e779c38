//! Closed formula for the Euler characteristic of a finite 2-groupoid.
//!
//! For a Cat-enriched category whose hom-categories are groupoids and whose
//! 1-morphisms are invertible, `χ = Σ_[x] #π₂(x) / #π₁(x)` over connected
//! components, where `π₁(x)` is the set of components of the hom-groupoid
//! `G(x, x)` and `π₂(x)` the automorphisms of the identity 1-morphism.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{FinCatError, FiniteCategory};
use crate::enriched::EnrichedCategory;
use crate::linalg::Rational;
use crate::measure::Enrichment;

fn bad(msg: String) -> FinCatError {
    FinCatError::NotA2Groupoid(msg)
}

/// Evaluates the closed formula after checking what can be checked from hom
/// data alone: every hom is a finite groupoid, nonemptiness of homs is an
/// equivalence relation, and within a component every hom-groupoid has the
/// same number of components and the same automorphism group size at every
/// object.
///
/// Composition of 1-morphisms is not part of the input, so which object of
/// `G(x, x)` is the identity cannot be read off; the uniform automorphism
/// size check makes the choice irrelevant.
pub fn two_groupoid_chi(g: &EnrichedCategory) -> Result<Rational, FinCatError> {
    if g.enrichment() != Enrichment::Cat {
        return Err(bad(format!("expected cat enrichment, got {}", g.enrichment())));
    }
    let n = g.object_count();
    let name = |i: usize| g.objects()[i].as_str();
    let mut homs: Vec<Option<FiniteCategory>> = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let h = g.hom(a, b);
            if h.is_empty() {
                homs.push(None);
                continue;
            }
            let c = h
                .as_category()
                .map_err(|e| bad(format!("hom({}, {}): {e}", name(a), name(b))))?;
            if let Some(f) = c.first_non_invertible() {
                return Err(bad(format!(
                    "2-morphism {} in hom({}, {}) is not invertible",
                    c.morphisms()[f].id,
                    name(a),
                    name(b)
                )));
            }
            homs.push(Some(c));
        }
    }
    let hom = |a: usize, b: usize| homs[a * n + b].as_ref();

    for a in 0..n {
        for b in 0..n {
            if hom(a, b).is_some() && hom(b, a).is_none() {
                return Err(bad(format!(
                    "1-morphisms {} → {} exist but none go back",
                    name(a),
                    name(b)
                )));
            }
            for c in 0..n {
                if hom(a, b).is_some() && hom(b, c).is_some() && hom(a, c).is_none() {
                    return Err(bad(format!(
                        "hom({}, {}) is empty although {} → {} → {} compose",
                        name(a),
                        name(c),
                        name(a),
                        name(b),
                        name(c)
                    )));
                }
            }
        }
    }

    let mut assigned = vec![false; n];
    let mut total = Rational::zero();
    for x in 0..n {
        if assigned[x] {
            continue;
        }
        let class: Vec<usize> = (0..n).filter(|&y| hom(x, y).is_some()).collect();
        for &y in &class {
            assigned[y] = true;
        }
        let endo = hom(x, x).expect("identity 1-morphism");
        let pi1 = endo.pi0_count();
        let pi2 = endo.hom(0, 0).len();
        for &a in &class {
            for &b in &class {
                let h = hom(a, b).expect("component is connected");
                if h.pi0_count() != pi1 {
                    return Err(bad(format!(
                        "hom({}, {}) has {} components but hom({}, {}) has {pi1}",
                        name(a),
                        name(b),
                        h.pi0_count(),
                        name(x),
                        name(x)
                    )));
                }
                if let Some(o) = (0..h.object_count()).find(|&o| h.hom(o, o).len() != pi2) {
                    return Err(bad(format!(
                        "1-morphism {} in hom({}, {}) has {} automorphisms, expected {pi2}",
                        h.objects()[o],
                        name(a),
                        name(b),
                        h.hom(o, o).len()
                    )));
                }
            }
        }
        total += Rational::new(BigInt::from(pi2), BigInt::from(pi1));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enriched::euler_characteristic;
    use crate::fincat::group::FiniteGroup;
    use crate::fincat::{discrete, from_group, groupoid, poset};
    use crate::linalg::{frac, int};
    use crate::measure::HomObject;

    fn one_object(hom: FiniteCategory) -> EnrichedCategory {
        EnrichedCategory::from_fn(Enrichment::Cat, vec!["x".into()], |_, _| HomObject::fincat(hom.clone())).unwrap()
    }

    #[test]
    fn discrete_hom_groupoid() {
        let g = one_object(discrete(3));
        assert_eq!(two_groupoid_chi(&g).unwrap(), frac(1, 3));
        assert_eq!(euler_characteristic(&g).unwrap(), Some(frac(1, 3)));
    }

    #[test]
    fn automorphisms_of_the_identity() {
        // π₁ trivial, π₂ = Z/2: |hom| = 1/2 so ξ = [[1/2]] and χ = 2
        let g = one_object(from_group(&FiniteGroup::cyclic(2)));
        assert_eq!(two_groupoid_chi(&g).unwrap(), int(2));
        assert_eq!(euler_characteristic(&g).unwrap(), Some(int(2)));
    }

    #[test]
    fn discrete_two_groupoid() {
        let g = EnrichedCategory::discrete(Enrichment::Cat, 4);
        assert_eq!(two_groupoid_chi(&g).unwrap(), int(4));
    }

    #[test]
    fn connected_component_with_several_objects() {
        let h = groupoid(&[(1, FiniteGroup::cyclic(3)), (2, FiniteGroup::cyclic(3))]);
        let g = EnrichedCategory::from_fn(Enrichment::Cat, vec!["x".into(), "y".into()], |_, _| {
            HomObject::fincat(h.clone())
        })
        .unwrap();
        // π₁ has 2 elements, π₂ = Z/3
        assert_eq!(two_groupoid_chi(&g).unwrap(), frac(3, 2));
        assert_eq!(euler_characteristic(&g).unwrap(), Some(frac(3, 2)));
    }

    #[test]
    fn rejects_non_groupoids() {
        let g = one_object(poset(2, |i, j| i < j).unwrap());
        assert!(matches!(two_groupoid_chi(&g), Err(FinCatError::NotA2Groupoid(_))));

        let one_way = EnrichedCategory::from_fn(Enrichment::Cat, vec!["x".into(), "y".into()], |a, b| {
            if a <= b {
                HomObject::point()
            } else {
                HomObject::Empty
            }
        })
        .unwrap();
        assert!(two_groupoid_chi(&one_way).is_err());

        let uneven = one_object(groupoid(&[(1, FiniteGroup::cyclic(2)), (1, FiniteGroup::cyclic(3))]));
        assert!(two_groupoid_chi(&uneven).is_err());

        let set = EnrichedCategory::discrete(Enrichment::Set, 1);
        assert!(two_groupoid_chi(&set).is_err());
    }
}
