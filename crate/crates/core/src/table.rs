//! Multiplication table over an enumerated group, and element subsets as
//! bitsets. Used by the lattice, where every subgroup is handled as a set
//! of element indices.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::Result;
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Elements of a group indexed `0..n` (identity at 0) with products,
/// inverses and element orders precomputed.
#[derive(Debug)]
pub struct CayleyTable {
    elements: Arc<Vec<Permutation>>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    orders: Vec<u64>,
}

impl CayleyTable {
    pub fn new(g: &PermGroup) -> Result<Self> {
        let elements = g.elements()?;
        let n = elements.len();
        let lookup: HashMap<&Permutation, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p, i as u32))
            .collect();
        let mul: Vec<u32> = elements
            .par_iter()
            .flat_map_iter(|a| elements.iter().map(|b| lookup[&a.then(b)]))
            .collect();
        let inv = elements.iter().map(|a| lookup[&a.inverse()]).collect();
        let orders = elements.iter().map(Permutation::order).collect();
        debug_assert_eq!(mul.len(), n * n);
        Ok(CayleyTable {
            elements,
            mul,
            inv,
            orders,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.elements.len() + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    pub fn order_of(&self, a: u32) -> u64 {
        self.orders[a as usize]
    }

    /// `g⁻¹ a g`.
    #[inline]
    pub fn conj(&self, a: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv(g), a), g)
    }

    /// Subgroup generated by `gens`.
    pub fn closure(&self, gens: &[u32]) -> ElemSet {
        let mut set = ElemSet::new(self.len());
        set.insert(0);
        let mut list = vec![0u32];
        let mut head = 0;
        while head < list.len() {
            let x = list[head];
            head += 1;
            for &s in gens {
                let y = self.mul(x, s);
                if set.insert(y) {
                    list.push(y);
                }
            }
        }
        set
    }

    pub fn conjugate_set(&self, set: &ElemSet, g: u32) -> ElemSet {
        let mut out = ElemSet::new(self.len());
        for a in set.iter() {
            out.insert(self.conj(a, g));
        }
        out
    }

    /// Generators picked greedily in index order; each one enlarges the
    /// subgroup generated so far.
    pub fn small_generating_set(&self, set: &ElemSet) -> Vec<u32> {
        let mut gens = Vec::new();
        let mut current = self.closure(&gens);
        for x in set.iter() {
            if current.len() == set.len() {
                break;
            }
            if !current.contains(x) {
                gens.push(x);
                current = self.closure(&gens);
            }
        }
        gens
    }
}

/// A subset of group elements, by index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    words: Vec<u64>,
    len: usize,
}

impl ElemSet {
    pub fn new(universe: usize) -> Self {
        ElemSet {
            words: vec![0; universe.div_ceil(64)],
            len: 0,
        }
    }

    /// Returns `true` if `i` was not present.
    pub fn insert(&mut self, i: u32) -> bool {
        let (w, b) = (i as usize / 64, i % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        if fresh {
            self.words[w] |= 1 << b;
            self.len += 1;
        }
        fresh
    }

    pub fn contains(&self, i: u32) -> bool {
        self.words[i as usize / 64] & (1 << (i % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros();
                bits &= bits - 1;
                Some(w as u32 * 64 + b)
            })
        })
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        let words: Vec<u64> = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        let len = words.iter().map(|w| w.count_ones() as usize).sum();
        ElemSet { words, len }
    }

    /// Lexicographic comparison of the ascending index sequences.
    pub fn lex_cmp(&self, other: &ElemSet) -> Ordering {
        self.iter().cmp(other.iter())
    }
}
