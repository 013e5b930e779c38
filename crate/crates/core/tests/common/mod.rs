//! Seeded random instances shared by the integration tests.

#![allow(dead_code)]

use eulercat::fincat::{
    self,
    group::{FiniteGroup, GroupAction},
    Functor,
};
use eulercat::measure::CellVector;
use eulercat::topcat::AcyclicTopCategory;
use eulercat::{EnrichedCategory, Enrichment, FiniteCategory, HomObject};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn pick<'a, T>(rng: &mut ChaCha8Rng, xs: &'a [T]) -> &'a T {
    &xs[rng.random_range(0..xs.len())]
}

/// A nonempty CW complex with at most `max_cells` cells, each of dimension
/// at most `max_dim`, split into one or two components.
pub fn random_cw(rng: &mut ChaCha8Rng, max_cells: usize, max_dim: usize) -> HomObject {
    let total = rng.random_range(1..=max_cells);
    let components = rng.random_range(1..=total.min(2));
    let mut counts = vec![vec![0u64; max_dim + 1]; components];
    for c in counts.iter_mut() {
        c[0] = 1;
    }
    for _ in components..total {
        let c = rng.random_range(0..components);
        counts[c][rng.random_range(0..=max_dim)] += 1;
    }
    HomObject::cw(counts.iter().map(|c| CellVector::from_counts(c)).collect()).unwrap()
}

/// A random strict order on `n` objects: a shuffled linear order, a random
/// subset of its pairs, then the transitive closure.
pub fn random_order(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Vec<Vec<bool>> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut less = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            less[perm[i]][perm[j]] = rng.random_bool(density);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if less[i][k] && less[k][j] {
                    less[i][j] = true;
                }
            }
        }
    }
    less
}

/// At most five objects; every hom has at most four cells up to dimension 3.
pub fn random_acyclic(rng: &mut ChaCha8Rng) -> AcyclicTopCategory {
    let n = rng.random_range(1..=5);
    let less = random_order(rng, n, 0.6);
    let names = (0..n).map(|i| format!("x{i}")).collect();
    let mut homs = vec![HomObject::Empty; n * n];
    for a in 0..n {
        for b in 0..n {
            if less[a][b] {
                homs[a * n + b] = random_cw(rng, 4, 3);
            }
        }
    }
    AcyclicTopCategory::from_fn(names, |a, b| homs[a * n + b].clone()).unwrap()
}

/// Components `(copies, automorphism group)`: at most four, groups of order
/// at most six.
pub fn random_groupoid_spec(rng: &mut ChaCha8Rng) -> Vec<(usize, FiniteGroup)> {
    let groups = FiniteGroup::all_up_to_order_six();
    (0..rng.random_range(1..=4))
        .map(|_| (rng.random_range(1..=3), pick(rng, &groups).clone()))
        .collect()
}

pub fn random_action(rng: &mut ChaCha8Rng) -> GroupAction {
    let groups = FiniteGroup::all_up_to_order_six();
    match rng.random_range(0..3) {
        0 => GroupAction::rotations(rng.random_range(1..=4), rng.random_range(1..=2)),
        1 => GroupAction::regular(pick(rng, &groups).clone()),
        _ => GroupAction::trivial(pick(rng, &groups).clone(), rng.random_range(1..=3)),
    }
}

/// A random finite category with at most `max_morphisms` morphisms, drawn
/// from posets, free categories on DAGs, groupoids, group-set categories,
/// monoids, and products and sums of those.
pub fn random_category(rng: &mut ChaCha8Rng, max_morphisms: usize) -> FiniteCategory {
    loop {
        let c = random_category_unbounded(rng, 2);
        if c.morphism_count() <= max_morphisms {
            return c;
        }
    }
}

fn random_category_unbounded(rng: &mut ChaCha8Rng, depth: usize) -> FiniteCategory {
    let kinds = if depth == 0 { 7 } else { 9 };
    match rng.random_range(0..kinds) {
        0 => {
            let n = rng.random_range(1..=5);
            let less = random_order(rng, n, 0.5);
            fincat::poset(n, |i, j| less[i][j]).unwrap()
        }
        1 => {
            let n = rng.random_range(1..=4);
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    for _ in 0..rng.random_range(0..=2) {
                        edges.push((i, j));
                    }
                }
            }
            fincat::path_category(n, &edges).unwrap()
        }
        2 => {
            let spec = random_groupoid_spec(rng);
            fincat::groupoid(&spec[..spec.len().min(2)])
        }
        3 => fincat::group_set_category(&random_action(rng)),
        4 => fincat::indiscrete(rng.random_range(1..=3)),
        5 => {
            // the idempotent monoid {1, e} or Z/2 as a monoid
            let table = pick(rng, &[vec![vec![0, 1], vec![1, 1]], vec![vec![0, 1], vec![1, 0]]]).clone();
            fincat::monoid("M", &table).unwrap()
        }
        6 => fincat::discrete(rng.random_range(0..=3)),
        7 => fincat::product(
            &random_category_unbounded(rng, depth - 1),
            &random_category_unbounded(rng, depth - 1),
        ),
        _ => fincat::disjoint_union(
            &random_category_unbounded(rng, depth - 1),
            &random_category_unbounded(rng, depth - 1),
        ),
    }
}

/// Isofibrations between finite groupoids: projections, action quotients,
/// duplications, surjective group homomorphisms, and their sums and
/// products.
pub fn random_isofibration(rng: &mut ChaCha8Rng, depth: usize) -> Functor {
    let kinds = if depth == 0 { 4 } else { 6 };
    match rng.random_range(0..kinds) {
        0 => {
            let spec = random_groupoid_spec(rng);
            let (b, f) = (fincat::groupoid(&spec[..1]), fincat::groupoid(&spec[spec.len() - 1..]));
            Functor::projection(&b, &f)
        }
        1 => Functor::action_quotient(&random_action(rng)),
        2 => Functor::collapse_copies(
            &fincat::groupoid(&random_groupoid_spec(rng)[..1]),
            rng.random_range(1..=3),
        ),
        3 => {
            let (g, h, map) = pick(rng, &surjections()).clone();
            Functor::group_homomorphism(&g, &h, map).unwrap()
        }
        4 => Functor::disjoint_union(&random_isofibration(rng, depth - 1), &random_isofibration(rng, 0)),
        _ => Functor::product(&random_isofibration(rng, 0), &random_isofibration(rng, 0)),
    }
}

/// Surjective homomorphisms between small groups, as element maps.
pub fn surjections() -> Vec<(FiniteGroup, FiniteGroup, Vec<usize>)> {
    let z = FiniteGroup::cyclic;
    vec![
        (z(6), z(3), (0..6).map(|x| x % 3).collect()),
        (z(6), z(2), (0..6).map(|x| x % 2).collect()),
        (z(4), z(2), (0..4).map(|x| x % 2).collect()),
        (z(5), z(1), vec![0; 5]),
        // the sign of the permutations 012, 021, 102, 120, 201, 210
        (FiniteGroup::symmetric3(), z(2), vec![0, 1, 1, 0, 0, 1]),
    ]
}

/// Categories from which Cat-enriched homs are drawn; all admit χ.
pub fn small_hom_categories() -> Vec<FiniteCategory> {
    vec![
        fincat::terminal(),
        fincat::discrete(2),
        fincat::indiscrete(2),
        fincat::from_group(&FiniteGroup::cyclic(2)),
        fincat::from_group(&FiniteGroup::cyclic(3)),
        fincat::poset(2, |i, j| i < j).unwrap(),
    ]
}

/// Up to three objects with random homs of the given enrichment; diagonal
/// homs are nonempty.
pub fn random_enriched(rng: &mut ChaCha8Rng, e: Enrichment) -> EnrichedCategory {
    let n = rng.random_range(1..=3);
    let cats = small_hom_categories();
    let names = (0..n).map(|i| format!("o{i}")).collect();
    let mut homs = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let empty_ok = a != b && rng.random_bool(0.4);
            homs.push(if empty_ok {
                HomObject::Empty
            } else {
                match e {
                    Enrichment::Set => HomObject::finset(rng.random_range(1..=3u32)),
                    Enrichment::Top => random_cw(rng, 4, 3),
                    Enrichment::Cat => HomObject::fincat(pick(rng, &cats).clone()),
                }
            });
        }
    }
    EnrichedCategory::from_fn(e, names, |a, b| homs[a * n + b].clone()).unwrap()
}

/// A finite 2-groupoid given by its hom-groupoids, with the closed-formula
/// value `Σ #π₂ / #π₁` computed from the construction parameters.
pub fn random_two_groupoid(rng: &mut ChaCha8Rng) -> (EnrichedCategory, eulercat::Rational) {
    // π₂ is abelian
    let abelian: Vec<FiniteGroup> = FiniteGroup::all_up_to_order_six()
        .into_iter()
        .filter(|g| (0..g.order()).all(|a| (0..g.order()).all(|b| g.mul(a, b) == g.mul(b, a))))
        .collect();
    let components = rng.random_range(1..=3);
    let mut block = Vec::new();
    let mut homs = Vec::new();
    let mut expected = eulercat::Rational::from_integer(0.into());
    for c in 0..components {
        let size = rng.random_range(1..=2);
        let pi1 = rng.random_range(1..=3);
        let pi2 = pick(rng, &abelian).clone();
        let copies = rng.random_range(1..=2);
        expected += eulercat::Rational::new((pi2.order() as i64).into(), (pi1 as i64).into());
        homs.push(HomObject::fincat(fincat::groupoid(&vec![(copies, pi2); pi1])));
        block.extend(std::iter::repeat_n(c, size));
    }
    let names = (0..block.len()).map(|i| format!("x{i}")).collect();
    let g = EnrichedCategory::from_fn(Enrichment::Cat, names, |a, b| {
        if block[a] == block[b] {
            homs[block[a]].clone()
        } else {
            HomObject::Empty
        }
    })
    .unwrap();
    (g, expected)
}
