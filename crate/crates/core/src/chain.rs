//! Deterministic Schreier–Sims.

use crate::perm::Permutation;

#[derive(Debug, Clone)]
struct Level {
    base_point: usize,
    generators: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `transversal[x] = u` with `base_point^u = x`.
    transversal: Vec<Option<Permutation>>,
    inverse_transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base_point: usize, degree: usize) -> Self {
        let mut level = Level {
            base_point,
            generators: Vec::new(),
            orbit: Vec::new(),
            transversal: Vec::new(),
            inverse_transversal: Vec::new(),
        };
        level.rebuild_orbit(degree);
        level
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        let mut transversal: Vec<Option<Permutation>> = vec![None; degree];
        transversal[self.base_point] = Some(Permutation::identity(degree));
        let mut orbit = vec![self.base_point];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for s in &self.generators {
                let y = s.image(x);
                if transversal[y].is_none() {
                    let u = transversal[x].as_ref().unwrap().then(s);
                    transversal[y] = Some(u);
                    orbit.push(y);
                }
            }
        }
        self.inverse_transversal = transversal
            .iter()
            .map(|u| u.as_ref().map(Permutation::inverse))
            .collect();
        self.transversal = transversal;
        self.orbit = orbit;
    }
}

/// A base with strong generating set: nested point stabilizers, each with
/// an orbit transversal of its base point.
///
/// Base points are chosen as the smallest point moved by the element that
/// forces a new level, so construction is reproducible.
#[derive(Debug, Clone)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn new(degree: usize, generators: &[Permutation]) -> Self {
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
        };
        let gens: Vec<Permutation> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        if gens.is_empty() {
            return chain;
        }
        for g in &gens {
            if chain
                .levels
                .iter()
                .all(|l| g.image(l.base_point) == l.base_point)
            {
                let b = g.smallest_moved_point().unwrap();
                chain.levels.push(Level::new(b, degree));
            }
        }
        // Level i receives every generator fixing the earlier base points.
        for g in &gens {
            for i in 0..chain.levels.len() {
                chain.levels[i].generators.push(g.clone());
                if g.image(chain.levels[i].base_point) != chain.levels[i].base_point {
                    break;
                }
            }
        }
        for level in &mut chain.levels {
            level.rebuild_orbit(degree);
        }
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let lvl = i as usize;
            match self.find_missing_schreier_generator(lvl) {
                None => i -= 1,
                Some((residue, drop)) => {
                    if drop == self.levels.len() {
                        let b = residue.smallest_moved_point().unwrap();
                        self.levels.push(Level::new(b, self.degree));
                    }
                    for l in lvl + 1..=drop {
                        self.levels[l].generators.push(residue.clone());
                        self.levels[l].rebuild_orbit(self.degree);
                    }
                    i = drop as isize;
                }
            }
        }
    }

    /// Looks for a Schreier generator of level `lvl` that does not sift
    /// through the levels below it.
    fn find_missing_schreier_generator(&self, lvl: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[lvl];
        for &x in &level.orbit {
            let ux = level.transversal[x].as_ref().unwrap();
            for s in &level.generators {
                let y = s.image(x);
                let uy_inv = level.inverse_transversal[y].as_ref().unwrap();
                let schreier = ux.then(s).then(uy_inv);
                if schreier.is_identity() {
                    continue;
                }
                let (residue, drop) = self.sift_from(schreier, lvl + 1);
                if drop < self.levels.len() || !residue.is_identity() {
                    return Some((residue, drop));
                }
            }
        }
        None
    }

    /// Sifts `g` starting at level `start`; returns the residue and the
    /// level at which sifting stopped (`levels.len()` if it went through).
    fn sift_from(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let y = g.image(level.base_point);
            match &level.inverse_transversal[y] {
                Some(u_inv) => g = g.then(u_inv),
                None => return (g, i),
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

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Product of transversal sizes, or `None` on `u64` overflow.
    pub fn order(&self) -> Option<u64> {
        self.levels
            .iter()
            .try_fold(1u64, |acc, l| acc.checked_mul(l.orbit.len() as u64))
    }

    pub fn strong_generators(&self, level: usize) -> &[Permutation] {
        &self.levels[level].generators
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && {
            let (residue, drop) = self.sift_from(g.clone(), 0);
            drop == self.levels.len() && residue.is_identity()
        }
    }

    /// All elements, identity first. Each element is written `h · u` with
    /// `u` from the top transversal and `h` from the stabilizer, recursively.
    pub(crate) fn elements(&self) -> Vec<Permutation> {
        let mut acc = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(acc.len() * level.orbit.len());
            for &x in &level.orbit {
                let u = level.transversal[x].as_ref().unwrap();
                for h in &acc {
                    next.push(h.then(u));
                }
            }
            acc = next;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, c: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, c).unwrap()
    }

    #[test]
    fn alternating_five_chain() {
        let chain = StabilizerChain::new(5, &[cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[2, 3, 4]])]);
        assert_eq!(chain.order(), Some(60));
        assert!(chain.contains(&cyc(5, &[&[0, 1, 2]])));
        assert!(!chain.contains(&cyc(5, &[&[0, 1]])));
    }

    #[test]
    fn strong_generators_fix_earlier_base_points() {
        let chain = StabilizerChain::new(6, &[cyc(6, &[&[0, 1, 2, 3, 4, 5]]), cyc(6, &[&[0, 1]])]);
        assert_eq!(chain.order(), Some(720));
        let base = chain.base();
        for lvl in 0..chain.depth() {
            for g in chain.strong_generators(lvl) {
                for &b in &base[..lvl] {
                    assert_eq!(g.image(b), b);
                }
                assert!(chain.contains(g));
            }
        }
    }

    #[test]
    fn elements_are_distinct_with_identity_first() {
        let chain = StabilizerChain::new(4, &[cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 1]])]);
        let els = chain.elements();
        assert_eq!(els.len(), 24);
        assert!(els[0].is_identity());
        let set: std::collections::HashSet<_> = els.iter().collect();
        assert_eq!(set.len(), 24);
    }
}
