//! Deterministic Schreier–Sims.

use num_bigint::BigUint;

use crate::perm::Permutation;

#[derive(Debug, Clone)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    // transversal[x] maps the base point to x
    transversal: Vec<Option<Permutation>>,
    inverse: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            transversal: vec![None; degree],
            inverse: vec![None; degree],
        }
    }

    fn rebuild(&mut self) {
        let n = self.transversal.len();
        self.transversal = vec![None; n];
        self.inverse = vec![None; n];
        self.orbit.clear();
        let id = Permutation::identity(n);
        self.inverse[self.base] = Some(id.clone());
        self.transversal[self.base] = Some(id);
        self.orbit.push(self.base);
        let mut head = 0;
        while head < self.orbit.len() {
            let x = self.orbit[head];
            head += 1;
            for s in &self.gens {
                let y = s.image(x);
                if self.transversal[y].is_none() {
                    let u = self.transversal[x].as_ref().unwrap().then(s);
                    self.inverse[y] = Some(u.inverse());
                    self.transversal[y] = Some(u);
                    self.orbit.push(y);
                }
            }
        }
    }
}

/// Base and strong generating set, built with base points chosen as the
/// smallest point moved by each new sifting residue.
#[derive(Debug, Clone)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn build(degree: usize, generators: &[Permutation]) -> Self {
        let gens: Vec<Permutation> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        let mut levels: Vec<Level> = Vec::new();
        for g in &gens {
            if levels.iter().all(|l| g.image(l.base) == l.base) {
                let b = g.first_moved().expect("non-identity");
                levels.push(Level::new(b, degree));
            }
        }
        for i in 0..levels.len() {
            let fixed: Vec<usize> = levels[..i].iter().map(|l| l.base).collect();
            levels[i].gens = gens
                .iter()
                .filter(|g| fixed.iter().all(|&b| g.image(b) == b))
                .cloned()
                .collect();
            levels[i].rebuild();
        }
        let mut chain = StabilizerChain { degree, levels };
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let lvl = i as usize;
            match self.find_residue(lvl) {
                Some((res, j)) => {
                    if j == self.levels.len() {
                        let b = res.first_moved().expect("non-identity residue");
                        self.levels.push(Level::new(b, self.degree));
                    }
                    for l in lvl + 1..=j {
                        self.levels[l].gens.push(res.clone());
                        self.levels[l].rebuild();
                    }
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
    }

    /// First Schreier generator at `lvl` that does not sift through the levels below it.
    fn find_residue(&self, lvl: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[lvl];
        for &x in &level.orbit {
            let ux = level.transversal[x].as_ref().unwrap();
            for s in &level.gens {
                let y = s.image(x);
                let h = ux.then(s).then(level.inverse[y].as_ref().unwrap());
                if h.is_identity() {
                    continue;
                }
                let (res, j) = self.strip(h, lvl + 1);
                if j < self.levels.len() || !res.is_identity() {
                    return Some((res, j));
                }
            }
        }
        None
    }

    fn strip(&self, mut h: Permutation, start: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let x = h.image(level.base);
            match &level.inverse[x] {
                Some(inv) => h = h.then(inv),
                None => return (h, l),
            }
        }
        (h, self.levels.len())
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (res, j) = self.strip(g.clone(), 0);
        j == self.levels.len() && res.is_identity()
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Lengths of the basic orbits, top level first.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Generators of the stabiliser of the first `depth` base points.
    pub fn stabilizer_generators(&self, depth: usize) -> Vec<Permutation> {
        self.levels
            .get(depth)
            .map(|l| l.gens.clone())
            .unwrap_or_default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 2..=8usize {
            let c = StabilizerChain::build(n, &[p(n, "(0 1)"), Permutation::new((1..n).chain([0]).collect()).unwrap()]);
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(c.order(), BigUint::from(fact));
        }
    }

    #[test]
    fn trivial_group() {
        let c = StabilizerChain::build(5, &[Permutation::identity(5)]);
        assert_eq!(c.order(), BigUint::from(1u32));
        assert!(c.contains(&Permutation::identity(5)));
        assert!(!c.contains(&p(5, "(0 1)")));
    }

    #[test]
    fn membership_in_alternating_group() {
        let a5 = StabilizerChain::build(5, &[p(5, "(0 1 2)"), p(5, "(0 1 2 3 4)")]);
        assert_eq!(a5.order(), BigUint::from(60u32));
        assert!(a5.contains(&p(5, "(0 1)(2 3)")));
        assert!(!a5.contains(&p(5, "(0 1)")));
    }
}
