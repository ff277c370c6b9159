//! Brute-force reference computations shared by the integration suites.
//! Nothing here touches the engine's lattice or Cayley table code: the
//! multiplication table is rebuilt from raw permutation products.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use supersolv::{PermGroup, Permutation};

/// Multiplication table over the elements of a small group, with subsets
/// held as bitmasks.
pub struct Oracle {
    pub elements: Vec<Permutation>,
    mul: Vec<Vec<u8>>,
    identity: usize,
}

impl Oracle {
    pub fn new(g: &PermGroup) -> Self {
        let elements: Vec<Permutation> = g.elements().unwrap().iter().cloned().collect();
        assert!(
            elements.len() <= 128,
            "oracle only handles groups of order <= 128"
        );
        let index: HashMap<&Permutation, usize> =
            elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mul = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&(a * b)] as u8).collect())
            .collect();
        let identity = elements.iter().position(|p| p.is_identity()).unwrap();
        Oracle {
            elements,
            mul,
            identity,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Smallest subset containing `seed` and the identity that is closed
    /// under multiplication. In a finite group that is a subgroup.
    pub fn closure(&self, seed: u128) -> u128 {
        let mut set = seed | (1u128 << self.identity);
        loop {
            let mut next = set;
            for a in bits(set) {
                for b in bits(set) {
                    next |= 1u128 << self.mul[a][b];
                }
            }
            if next == set {
                return set;
            }
            set = next;
        }
    }

    /// Closures of every element subset of size at most `ceil(log2 |G|)`.
    pub fn subgroups(&self) -> BTreeSet<u128> {
        let n = self.len();
        let k = usize::BITS as usize - (n.max(1) - 1).leading_zeros() as usize;
        let mut found = BTreeSet::new();
        self.extend(0, 0, k, &mut found);
        found
    }

    fn extend(&self, start: usize, chosen: u128, budget: usize, out: &mut BTreeSet<u128>) {
        out.insert(self.closure(chosen));
        if budget == 0 {
            return;
        }
        for i in start..self.len() {
            self.extend(i + 1, chosen | (1u128 << i), budget - 1, out);
        }
    }

    pub fn to_set(&self, mask: u128) -> BTreeSet<Permutation> {
        bits(mask).map(|i| self.elements[i].clone()).collect()
    }

    pub fn subgroup_sets(&self) -> BTreeSet<BTreeSet<Permutation>> {
        self.subgroups()
            .into_iter()
            .map(|m| self.to_set(m))
            .collect()
    }
}

pub fn bits(mask: u128) -> impl Iterator<Item = usize> {
    (0..128).filter(move |i| mask >> i & 1 == 1)
}

pub fn element_set(g: &PermGroup) -> BTreeSet<Permutation> {
    g.elements().unwrap().iter().cloned().collect()
}

/// Every conjugate `P^x` for `x` in `G`, found by conjugating elementwise.
pub fn conjugates(g: &PermGroup, p: &PermGroup) -> BTreeSet<BTreeSet<Permutation>> {
    let members = element_set(p);
    g.elements()
        .unwrap()
        .iter()
        .map(|x| members.iter().map(|m| m.conjugate_by(x)).collect())
        .collect()
}

/// Prime factors of `n` by trial division.
pub fn primes_of(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut m = n;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            out.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Corpus groups with order at most `bound`, paired with their spec text.
pub fn corpus_up_to(bound: u64) -> Vec<(String, PermGroup)> {
    supersolv::corpus::corpus()
        .into_iter()
        .map(|s| (s.to_string(), s.build().unwrap()))
        .filter(|(_, g)| g.order() <= bound)
        .collect()
}
