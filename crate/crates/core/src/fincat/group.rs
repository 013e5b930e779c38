//! Small finite groups given by Cayley tables, used to build groupoids,
//! action groupoids and test fixtures.

/// A finite group on `0..order` with identity element `0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    table: Vec<Vec<usize>>,
}

impl FiniteGroup {
    /// Builds a group from a multiplication table, checking the group axioms.
    /// `table[a][b]` is the product `a·b`; element `0` must be the identity.
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self, String> {
        let n = table.len();
        if n == 0 {
            return Err("a group has at least one element".into());
        }
        if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err("multiplication table is not closed".into());
        }
        for (a, row) in table.iter().enumerate() {
            if table[0][a] != a || row[0] != a {
                return Err(format!("element 0 is not an identity for {a}"));
            }
            if !(0..n).any(|b| row[b] == 0 && table[b][a] == 0) {
                return Err(format!("element {a} has no inverse"));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(format!("not associative at ({a},{b},{c})"));
                    }
                }
            }
        }
        Ok(Self {
            name: name.into(),
            table,
        })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order zero");
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self {
            name: format!("Z{n}"),
            table,
        }
    }

    /// The symmetric group on three letters, elements listed as permutations
    /// of `[0, 1, 2]` in lexicographic order.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = perms
            .iter()
            .map(|a| perms.iter().map(|b| index([a[b[0]], a[b[1]], a[b[2]]])).collect())
            .collect();
        Self {
            name: "S3".into(),
            table,
        }
    }

    pub fn direct_product(&self, other: &Self) -> Self {
        let m = other.order();
        let n = self.order() * m;
        let table = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| self.mul(a / m, b / m) * m + other.mul(a % m, b % m))
                    .collect()
            })
            .collect();
        Self {
            name: format!("{}x{}", self.name, other.name),
            table,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order())
            .find(|&b| self.table[a][b] == 0)
            .expect("validated group")
    }

    /// Every group of order at most six, up to isomorphism.
    pub fn all_up_to_order_six() -> Vec<Self> {
        vec![
            Self::cyclic(1),
            Self::cyclic(2),
            Self::cyclic(3),
            Self::cyclic(4),
            Self::cyclic(2).direct_product(&Self::cyclic(2)),
            Self::cyclic(5),
            Self::cyclic(6),
            Self::symmetric3(),
        ]
    }
}

/// A left action of a finite group on `0..size`, stored as
/// `act[g][x] = g·x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAction {
    group: FiniteGroup,
    act: Vec<Vec<usize>>,
}

impl GroupAction {
    pub fn new(group: FiniteGroup, act: Vec<Vec<usize>>) -> Result<Self, String> {
        if act.len() != group.order() {
            return Err("one permutation per group element is required".into());
        }
        let size = act.first().map_or(0, Vec::len);
        if act.iter().any(|p| p.len() != size || p.iter().any(|&x| x >= size)) {
            return Err("action rows must be maps on the same finite set".into());
        }
        if (0..size).any(|x| act[0][x] != x) {
            return Err("identity must act trivially".into());
        }
        for g in 0..group.order() {
            for h in 0..group.order() {
                for x in 0..size {
                    if act[g][act[h][x]] != act[group.mul(g, h)][x] {
                        return Err(format!("(g·h)·x != g·(h·x) for g={g}, h={h}, x={x}"));
                    }
                }
            }
        }
        Ok(Self { group, act })
    }

    /// The trivial action on `size` points.
    pub fn trivial(group: FiniteGroup, size: usize) -> Self {
        let act = vec![(0..size).collect(); group.order()];
        Self { group, act }
    }

    /// The action of a group on itself by left multiplication.
    pub fn regular(group: FiniteGroup) -> Self {
        let n = group.order();
        let act = (0..n).map(|g| (0..n).map(|x| group.mul(g, x)).collect()).collect();
        Self { group, act }
    }

    /// `Z/n` acting on `Z/n × {0..copies}` by rotating the first coordinate.
    pub fn rotations(n: usize, copies: usize) -> Self {
        let group = FiniteGroup::cyclic(n);
        let act = (0..n)
            .map(|g| {
                (0..n * copies)
                    .map(|x| ((x / copies + g) % n) * copies + x % copies)
                    .collect()
            })
            .collect();
        Self { group, act }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn set_size(&self) -> usize {
        self.act.first().map_or(0, Vec::len)
    }

    pub fn apply(&self, g: usize, x: usize) -> usize {
        self.act[g][x]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_groups_satisfy_axioms() {
        for g in FiniteGroup::all_up_to_order_six() {
            let rebuilt = FiniteGroup::from_table(g.name(), g.table.clone());
            assert!(rebuilt.is_ok(), "{}: {:?}", g.name(), rebuilt);
        }
    }

    #[test]
    fn s3_is_nonabelian() {
        let g = FiniteGroup::symmetric3();
        assert_eq!(g.order(), 6);
        assert!((0..6).any(|a| (0..6).any(|b| g.mul(a, b) != g.mul(b, a))));
    }

    #[test]
    fn rejects_non_group() {
        // {0, 1} with 1·1 = 1 is a monoid, not a group
        assert!(FiniteGroup::from_table("bad", vec![vec![0, 1], vec![1, 1]]).is_err());
    }

    #[test]
    fn actions_are_checked() {
        assert!(GroupAction::new(FiniteGroup::cyclic(2), vec![vec![0, 1], vec![1, 0]]).is_ok());
        assert!(GroupAction::new(FiniteGroup::cyclic(2), vec![vec![0, 1], vec![1, 1]]).is_err());
        let r = GroupAction::rotations(3, 2);
        assert_eq!(r.set_size(), 6);
        assert!(GroupAction::new(r.group.clone(), r.act.clone()).is_ok());
    }
}
