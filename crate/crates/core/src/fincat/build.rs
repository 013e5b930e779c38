//! Constructors for common finite categories.

use std::collections::{BTreeMap, HashMap, HashSet};

use super::group::{FiniteGroup, GroupAction};
use super::{FinCatError, FiniteCategory, Morphism, Violation};

fn mor(id: impl Into<String>, src: usize, tgt: usize) -> Morphism {
    Morphism {
        id: id.into(),
        src,
        tgt,
    }
}

fn numbered(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// The category with no objects.
pub fn empty() -> FiniteCategory {
    FiniteCategory::assemble(Vec::new(), Vec::new(), Vec::new(), Vec::new())
}

/// One object, one (identity) morphism.
pub fn terminal() -> FiniteCategory {
    discrete(1)
}

/// `n` objects and only identities.
pub fn discrete(n: usize) -> FiniteCategory {
    let morphisms = (0..n).map(|i| mor(format!("1_{i}"), i, i)).collect();
    let mut compose = vec![None; n * n];
    for i in 0..n {
        compose[i * n + i] = Some(i);
    }
    FiniteCategory::assemble(numbered(n), morphisms, (0..n).collect(), compose)
}

/// `n` objects with exactly one morphism between any two; every object is
/// isomorphic to every other.
pub fn indiscrete(n: usize) -> FiniteCategory {
    let morphisms = (0..n * n)
        .map(|k| {
            let (i, j) = (k / n, k % n);
            if i == j {
                mor(format!("1_{i}"), i, i)
            } else {
                mor(format!("{i}->{j}"), i, j)
            }
        })
        .collect();
    FiniteCategory::from_fn(numbered(n), morphisms, (0..n).map(|i| i * n + i).collect(), |g, f| {
        (f / n) * n + g % n
    })
    .expect("indiscrete category")
}

/// One-object category on a monoid. `table[a][b]` is `a·b` (apply `b`
/// first) and element `0` must be the unit.
pub fn monoid(name: &str, table: &[Vec<usize>]) -> Result<FiniteCategory, FinCatError> {
    let morphisms = (0..table.len()).map(|i| mor(format!("e{i}"), 0, 0)).collect();
    FiniteCategory::from_fn(vec![name.to_string()], morphisms, vec![0], |g, f| table[g][f])
}

/// The one-object groupoid of a group.
pub fn from_group(group: &FiniteGroup) -> FiniteCategory {
    connected_groupoid(1, group)
}

/// Connected groupoid on `k` objects with vertex group `group`: morphisms
/// `i → j` are labelled by group elements and compose by multiplication.
/// Its Euler characteristic is `1/|group|` for every `k ≥ 1`.
pub fn connected_groupoid(k: usize, group: &FiniteGroup) -> FiniteCategory {
    let order = group.order();
    let index = |i: usize, j: usize, g: usize| (i * k + j) * order + g;
    let mut morphisms = Vec::with_capacity(k * k * order);
    for i in 0..k {
        for j in 0..k {
            for g in 0..order {
                morphisms.push(mor(format!("g{g}:{i}->{j}"), i, j));
            }
        }
    }
    let objects = if k == 1 {
        vec![group.name().to_string()]
    } else {
        numbered(k)
    };
    FiniteCategory::from_fn(
        objects,
        morphisms,
        (0..k).map(|i| index(i, i, group.identity())).collect(),
        |g, f| {
            let (fi, _, fg) = (f / order / k, (f / order) % k, f % order);
            let (_, gl, gg) = (g / order / k, (g / order) % k, g % order);
            index(fi, gl, group.mul(gg, fg))
        },
    )
    .expect("connected groupoid")
}

/// Disjoint union of connected groupoids, one per `(objects, vertex group)`.
pub fn groupoid(components: &[(usize, FiniteGroup)]) -> FiniteCategory {
    components
        .iter()
        .map(|(k, g)| connected_groupoid(*k, g))
        .reduce(|a, b| disjoint_union(&a, &b))
        .unwrap_or_else(empty)
}

/// The thin category of a strict order on `0..n`. `less` must be
/// irreflexive and transitive; otherwise composition fails validation.
pub fn poset(n: usize, less: impl Fn(usize, usize) -> bool) -> Result<FiniteCategory, FinCatError> {
    let mut morphisms = Vec::new();
    let mut at = HashMap::new();
    for i in 0..n {
        for j in 0..n {
            if i == j || less(i, j) {
                at.insert((i, j), morphisms.len());
                let id = if i == j { format!("1_{i}") } else { format!("{i}<{j}") };
                morphisms.push(mor(id, i, j));
            }
        }
    }
    let endpoints: Vec<(usize, usize)> = morphisms.iter().map(|m| (m.src, m.tgt)).collect();
    let data = super::CategoryData {
        objects: numbered(n),
        identity: (0..n).map(|i| Some(at[&(i, i)])).collect(),
        compose: {
            let mut table = BTreeMap::new();
            for (g, &(gs, gt)) in endpoints.iter().enumerate() {
                for (f, &(fs, ft)) in endpoints.iter().enumerate() {
                    if gs == ft {
                        if let Some(&h) = at.get(&(fs, gt)) {
                            table.insert((g, f), h);
                        }
                    }
                }
            }
            table
        },
        morphisms,
    };
    FiniteCategory::try_from(data)
}

/// Free category on a finite DAG: morphisms are the directed paths.
/// Edges must satisfy `src < tgt`.
pub fn path_category(n: usize, edges: &[(usize, usize)]) -> Result<FiniteCategory, FinCatError> {
    if let Some(&(a, b)) = edges.iter().find(|(a, b)| a >= b || *b >= n) {
        return Err(FinCatError::InvalidCategory(vec![Violation::DanglingMorphism(
            format!("{a}->{b}"),
        )]));
    }
    // paths as edge-index sequences, grown from each object in order
    let mut paths: Vec<(usize, usize, Vec<usize>)> = (0..n).map(|i| (i, i, Vec::new())).collect();
    let mut frontier: Vec<usize> = (0..n).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in frontier {
            let (s, t, word) = paths[p].clone();
            for (e, &(a, b)) in edges.iter().enumerate() {
                if a == t {
                    let mut w = word.clone();
                    w.push(e);
                    paths.push((s, b, w));
                    next.push(paths.len() - 1);
                }
            }
        }
        frontier = next;
    }
    let lookup: HashMap<(usize, Vec<usize>), usize> = paths
        .iter()
        .enumerate()
        .map(|(i, (s, _, w))| ((*s, w.clone()), i))
        .collect();
    let morphisms = paths
        .iter()
        .map(|(s, t, w)| {
            let id = if w.is_empty() {
                format!("1_{s}")
            } else {
                format!("p{s}:{}", w.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("."))
            };
            mor(id, *s, *t)
        })
        .collect();
    FiniteCategory::from_fn(numbered(n), morphisms, (0..n).collect(), |g, f| {
        let mut w = paths[f].2.clone();
        w.extend_from_slice(&paths[g].2);
        lookup[&(paths[f].0, w)]
    })
}

/// Cartesian product. Objects are pairs `(a, b)` indexed `a * |B| + b`;
/// morphisms likewise.
pub fn product(a: &FiniteCategory, b: &FiniteCategory) -> FiniteCategory {
    let (na, nb) = (a.object_count(), b.object_count());
    let mb = b.morphism_count();
    let objects = (0..na * nb)
        .map(|k| format!("({},{})", a.objects()[k / nb], b.objects()[k % nb]))
        .collect();
    let morphisms = (0..a.morphism_count() * mb)
        .map(|k| {
            let (f, g) = (k / mb, k % mb);
            mor(
                format!("({},{})", a.morphisms()[f].id, b.morphisms()[g].id),
                a.src(f) * nb + b.src(g),
                a.tgt(f) * nb + b.tgt(g),
            )
        })
        .collect();
    let identity = (0..na * nb)
        .map(|k| a.identity(k / nb) * mb + b.identity(k % nb))
        .collect();
    let m = a.morphism_count() * mb;
    let mut compose = vec![None; m * m];
    for g in 0..m {
        for f in 0..m {
            if let (Some(x), Some(y)) = (a.compose(g / mb, f / mb), b.compose(g % mb, f % mb)) {
                compose[g * m + f] = Some(x * mb + y);
            }
        }
    }
    FiniteCategory::assemble(objects, morphisms, identity, compose)
}

/// Disjoint union; the left summand's objects come first. Names are kept when
/// they do not collide and prefixed with `l.`/`r.` otherwise.
pub fn disjoint_union(a: &FiniteCategory, b: &FiniteCategory) -> FiniteCategory {
    let clash = {
        let left: HashSet<&String> = a.objects().iter().collect();
        let left_m: HashSet<&String> = a.morphisms().iter().map(|m| &m.id).collect();
        b.objects().iter().any(|o| left.contains(o)) || b.morphisms().iter().any(|m| left_m.contains(&m.id))
    };
    let name = |side: &str, s: &str| {
        if clash {
            format!("{side}.{s}")
        } else {
            s.to_string()
        }
    };
    let (na, ma) = (a.object_count(), a.morphism_count());
    let objects = a
        .objects()
        .iter()
        .map(|o| name("l", o))
        .chain(b.objects().iter().map(|o| name("r", o)))
        .collect();
    let morphisms = a
        .morphisms()
        .iter()
        .map(|m| mor(name("l", &m.id), m.src, m.tgt))
        .chain(
            b.morphisms()
                .iter()
                .map(|m| mor(name("r", &m.id), m.src + na, m.tgt + na)),
        )
        .collect();
    let identity = (0..na)
        .map(|o| a.identity(o))
        .chain((0..b.object_count()).map(|o| b.identity(o) + ma))
        .collect();
    let m = ma + b.morphism_count();
    let mut compose = vec![None; m * m];
    for g in 0..ma {
        for f in 0..ma {
            compose[g * m + f] = a.compose(g, f);
        }
    }
    for g in 0..b.morphism_count() {
        for f in 0..b.morphism_count() {
            compose[(g + ma) * m + f + ma] = b.compose(g, f).map(|h| h + ma);
        }
    }
    FiniteCategory::assemble(objects, morphisms, identity, compose)
}

/// Replaces every object by `k` mutually isomorphic copies, i.e. the product
/// with the indiscrete category on `k` objects. The projection back to the
/// original category is an equivalence.
pub fn with_isomorphic_copies(c: &FiniteCategory, k: usize) -> FiniteCategory {
    product(c, &indiscrete(k))
}

/// Action groupoid `X // G`: objects are points `x`, morphisms `x → g·x` are
/// labelled by `g`.
pub fn action_groupoid(action: &GroupAction) -> FiniteCategory {
    let g = action.group();
    let order = g.order();
    let size = action.set_size();
    let morphisms = (0..size * order)
        .map(|k| {
            let (x, e) = (k / order, k % order);
            mor(format!("g{e}@{x}"), x, action.apply(e, x))
        })
        .collect();
    FiniteCategory::from_fn(
        numbered(size),
        morphisms,
        (0..size).map(|x| x * order).collect(),
        |h, f| (f / order) * order + g.mul(h % order, f % order),
    )
    .expect("action groupoid")
}

/// Two-object category with the group at object `0`, the set as the
/// morphisms `0 → 1`, and only the identity at `1`. Precomposition with a
/// group element acts on the set through the inverse.
pub fn group_set_category(action: &GroupAction) -> FiniteCategory {
    let g = action.group();
    let order = g.order();
    let size = action.set_size();
    let mut morphisms: Vec<Morphism> = (0..order).map(|e| mor(format!("g{e}"), 0, 0)).collect();
    morphisms.extend((0..size).map(|x| mor(format!("a{x}"), 0, 1)));
    morphisms.push(mor("1_1", 1, 1));
    let unit1 = order + size;
    FiniteCategory::from_fn(
        vec!["0".into(), "1".into()],
        morphisms,
        vec![g.identity(), unit1],
        |h, f| {
            if h < order {
                g.mul(h, f)
            } else if h == unit1 {
                f
            } else if f < order {
                order + action.apply(g.inverse(f), h - order)
            } else {
                unreachable!("no morphism composes after a 0 → 1 arrow except 1_1")
            }
        },
    )
    .expect("group-set category")
}
