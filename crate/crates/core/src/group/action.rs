use serde::Serialize;

use super::PermGroup;

/// Where a group sits in the intransitive / imprimitive / primitive / 2-transitive split.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "kebab-case")]
pub enum ActionClass {
    Intransitive { orbits: Vec<Vec<usize>> },
    TransitiveImprimitive { blocks: Vec<Vec<usize>> },
    PrimitiveNot2Transitive { pair_orbits: usize },
    TwoTransitive { pair_orbits: usize },
}

impl ActionClass {
    pub fn label(&self) -> &'static str {
        match self {
            ActionClass::Intransitive { .. } => "intransitive",
            ActionClass::TransitiveImprimitive { .. } => "transitive-imprimitive",
            ActionClass::PrimitiveNot2Transitive { .. } => "primitive-not-2-transitive",
            ActionClass::TwoTransitive { .. } => "2-transitive",
        }
    }

    pub fn is_two_transitive(&self) -> bool {
        matches!(self, ActionClass::TwoTransitive { .. })
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
        for x in 0..n {
            let r = self.find(x);
            by_root[r].push(x);
        }
        let mut out: Vec<Vec<usize>> = by_root.into_iter().filter(|c| !c.is_empty()).collect();
        out.sort();
        out
    }
}

/// Finest block system in which `x` and `y` share a block (Atkinson's closure).
pub fn minimal_block(g: &PermGroup, x: usize, y: usize) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(g.degree());
    let mut queue = vec![(x, y)];
    let (rx, ry) = (uf.find(x), uf.find(y));
    if rx != ry {
        uf.0[ry] = rx;
    }
    while let Some((a, b)) = queue.pop() {
        for s in g.generators() {
            let c = uf.find(s.image(a));
            let d = uf.find(s.image(b));
            if c != d {
                uf.0[d] = c;
                queue.push((c, d));
            }
        }
    }
    uf.classes()
}

impl PermGroup {
    pub fn classify_action(&self) -> ActionClass {
        let orbits = self.point_orbits();
        if orbits.len() > 1 {
            return ActionClass::Intransitive { orbits };
        }
        let n = self.degree();
        for y in 1..n {
            let system = minimal_block(self, 0, y);
            if system.len() > 1 {
                return ActionClass::TransitiveImprimitive { blocks: system };
            }
        }
        let pair_orbits = self.pair_orbit_count();
        if pair_orbits <= 1 {
            ActionClass::TwoTransitive { pair_orbits }
        } else {
            ActionClass::PrimitiveNot2Transitive { pair_orbits }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    #[test]
    fn young_subgroup_is_intransitive() {
        let g = PermGroup::new(
            7,
            vec![p(7, "(0 1)"), p(7, "(0 1 2)"), p(7, "(3 4)"), p(7, "(3 4 5 6)")],
        )
        .unwrap();
        assert_eq!(
            g.classify_action(),
            ActionClass::Intransitive {
                orbits: vec![vec![0, 1, 2], vec![3, 4, 5, 6]]
            }
        );
    }

    #[test]
    fn cyclic_prime_degree_is_primitive() {
        let g = PermGroup::new(7, vec![p(7, "(0 1 2 3 4 5 6)")]).unwrap();
        assert_eq!(
            g.classify_action(),
            ActionClass::PrimitiveNot2Transitive { pair_orbits: 6 }
        );
    }

    #[test]
    fn cyclic_composite_degree_has_blocks() {
        let g = PermGroup::new(6, vec![p(6, "(0 1 2 3 4 5)")]).unwrap();
        match g.classify_action() {
            ActionClass::TransitiveImprimitive { blocks } => {
                assert!(blocks.len() == 2 || blocks.len() == 3);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn small_degrees() {
        let s2 = PermGroup::new(2, vec![p(2, "(0 1)")]).unwrap();
        assert!(s2.classify_action().is_two_transitive());
        let s1 = PermGroup::trivial(1).unwrap();
        assert!(s1.classify_action().is_two_transitive());
    }
}
