//! Deterministic Schreier–Sims with explicit transversals.

use num_bigint::BigUint;

use crate::perm::Permutation;

#[derive(Debug, Clone)]
pub struct Level {
    base_point: usize,
    /// Strong generators fixing every earlier base point.
    generators: Vec<Permutation>,
    /// Fundamental orbit in discovery order.
    orbit: Vec<usize>,
    /// `transversal[β]` maps the base point to β.
    transversal: Vec<Option<Permutation>>,
    inverse_transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(degree: usize, base_point: usize, generators: Vec<Permutation>) -> Self {
        let mut level = Level {
            base_point,
            generators,
            orbit: Vec::new(),
            transversal: vec![None; degree],
            inverse_transversal: vec![None; degree],
        };
        level.recompute_orbit(degree);
        level
    }

    fn recompute_orbit(&mut self, degree: usize) {
        self.transversal = vec![None; degree];
        self.inverse_transversal = vec![None; degree];
        let id = Permutation::identity(degree);
        self.transversal[self.base_point] = Some(id.clone());
        self.inverse_transversal[self.base_point] = Some(id);
        self.orbit = vec![self.base_point];
        let mut head = 0;
        while head < self.orbit.len() {
            let beta = self.orbit[head];
            head += 1;
            for s in &self.generators {
                let gamma = s.image(beta);
                if self.transversal[gamma].is_none() {
                    let u = self.transversal[beta].as_ref().unwrap().then(s);
                    self.inverse_transversal[gamma] = Some(u.inverse());
                    self.transversal[gamma] = Some(u);
                    self.orbit.push(gamma);
                }
            }
        }
    }

    pub fn base_point(&self) -> usize {
        self.base_point
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn orbit(&self) -> &[usize] {
        &self.orbit
    }

    /// Coset representative mapping the base point to `point`, if it lies in the orbit.
    pub fn representative(&self, point: usize) -> Option<&Permutation> {
        self.transversal[point].as_ref()
    }
}

/// Base and strong generating set for a permutation group.
#[derive(Debug, Clone)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    /// Runs Schreier–Sims on `generators`, starting the base with `base_prefix`.
    /// Prefix points are kept as levels even when their orbits are trivial, so
    /// level `i` always describes the pointwise stabilizer of the first `i`
    /// prefix points.
    pub fn build(degree: usize, generators: &[Permutation], base_prefix: &[usize]) -> Self {
        let gens: Vec<Permutation> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        let mut base: Vec<usize> = base_prefix.to_vec();
        for s in &gens {
            if base.iter().all(|&b| s.image(b) == b) {
                base.push(first_moved_point(s));
            }
        }
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::with_capacity(base.len()),
        };
        for (i, &b) in base.iter().enumerate() {
            let level_gens = gens
                .iter()
                .filter(|s| base[..i].iter().all(|&p| s.image(p) == p))
                .cloned()
                .collect();
            chain.levels.push(Level::new(degree, b, level_gens));
        }
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let level = i as usize;
            match self.find_missing_generator(level) {
                Some((h, j)) => {
                    if j == self.levels.len() {
                        let b = first_moved_point(&h);
                        self.levels.push(Level::new(self.degree, b, Vec::new()));
                    }
                    for l in level + 1..=j {
                        self.levels[l].generators.push(h.clone());
                        self.levels[l].recompute_orbit(self.degree);
                    }
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
    }

    /// Checks all Schreier generators at `level`; returns the first one that does not
    /// sift through the levels below, together with the level where sifting stopped.
    fn find_missing_generator(&self, level: usize) -> Option<(Permutation, usize)> {
        let lv = &self.levels[level];
        for &beta in &lv.orbit {
            let u_beta = lv.transversal[beta].as_ref().unwrap();
            for s in &lv.generators {
                let gamma = s.image(beta);
                let schreier = u_beta
                    .then(s)
                    .then(lv.inverse_transversal[gamma].as_ref().unwrap());
                if schreier.is_identity() {
                    continue;
                }
                let (h, j) = self.sift_from(schreier, level + 1);
                if !h.is_identity() {
                    return Some((h, j));
                }
            }
        }
        None
    }

    /// Sifts `g` through levels `start..`; returns the residue and the level at which
    /// sifting stopped (`levels.len()` if it passed every level).
    fn sift_from(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (idx, lv) in self.levels.iter().enumerate().skip(start) {
            let beta = g.image(lv.base_point);
            match &lv.inverse_transversal[beta] {
                Some(inv) => g = g.then(inv),
                None => return (g, idx),
            }
        }
        (g, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Membership by sifting.
    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, j) = self.sift_from(g.clone(), 0);
        j == self.levels.len() && h.is_identity()
    }

    /// Strong generators of the pointwise stabilizer of the first `depth` base points.
    pub fn stabilizer_generators(&self, depth: usize) -> Vec<Permutation> {
        self.levels
            .get(depth)
            .map(|l| l.generators.clone())
            .unwrap_or_default()
    }

    /// The chain of the pointwise stabilizer of the first `depth` base points.
    pub fn tail(&self, depth: usize) -> StabilizerChain {
        StabilizerChain {
            degree: self.degree,
            levels: self.levels.iter().skip(depth).cloned().collect(),
        }
    }

    /// All strong generators, deduplicated in level order.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for l in &self.levels {
            for g in &l.generators {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Every group element exactly once, as products of transversal elements.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut elems = vec![Permutation::identity(self.degree)];
        for lv in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elems.len() * lv.orbit.len());
            for e in &elems {
                for &beta in &lv.orbit {
                    next.push(e.then(lv.transversal[beta].as_ref().unwrap()));
                }
            }
            elems = next;
        }
        elems
    }
}

fn first_moved_point(g: &Permutation) -> usize {
    (0..g.degree())
        .find(|&i| g.image(i) != i)
        .expect("identity has no moved point")
}
