use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_integer::Integer;

use crate::action::CosetAction;
use crate::chain::StabilizerChain;
use crate::error::{GroupError, Result};
use crate::limits::Limits;
use crate::perm::Permutation;

/// A permutation group given by generators, backed by a stabilizer chain.
///
/// Immutable after construction. The element list is computed on first
/// request and cached.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: Arc<StabilizerChain>,
    order: u64,
    limits: Limits,
    elements: Arc<OnceLock<Arc<Vec<Permutation>>>>,
}

impl PermGroup {
    /// The group generated by `generators` acting on `degree` points.
    /// Identity generators and repeats are dropped.
    pub fn new(generators: Vec<Permutation>, degree: usize) -> Result<Self> {
        Self::with_limits(generators, degree, Limits::default())
    }

    pub fn with_limits(
        generators: Vec<Permutation>,
        degree: usize,
        limits: Limits,
    ) -> Result<Self> {
        if degree == 0 {
            return Err(GroupError::InvalidParameter(
                "degree must be positive".into(),
            ));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let mut seen = HashSet::new();
        let generators: Vec<Permutation> = generators
            .into_iter()
            .filter(|g| !g.is_identity() && seen.insert(g.clone()))
            .collect();
        let chain = StabilizerChain::new(degree, &generators);
        let order = chain.order().ok_or(GroupError::Overflow("group order"))?;
        Ok(PermGroup {
            degree,
            generators,
            chain: Arc::new(chain),
            order,
            limits,
            elements: Arc::default(),
        })
    }

    pub fn trivial(degree: usize) -> Result<Self> {
        Self::new(Vec::new(), degree)
    }

    /// Same group with different size guards.
    pub fn limited(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    /// Builds a subgroup sharing this group's limits.
    pub(crate) fn sub(&self, generators: Vec<Permutation>) -> PermGroup {
        PermGroup::with_limits(generators, self.degree, self.limits)
            .expect("subgroup generators share the ambient degree")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabilizerChain {
        &self.chain
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        self.check_degree(p)?;
        Ok(self.chain.contains(p))
    }

    pub(crate) fn has(&self, p: &Permutation) -> bool {
        self.chain.contains(p)
    }

    fn check_degree(&self, p: &Permutation) -> Result<()> {
        if p.degree() != self.degree {
            Err(GroupError::DegreeMismatch {
                expected: self.degree,
                found: p.degree(),
            })
        } else {
            Ok(())
        }
    }

    /// Every element exactly once, identity first, in stabilizer-chain
    /// order. Fails if the order exceeds the element bound.
    pub fn elements(&self) -> Result<Arc<Vec<Permutation>>> {
        Limits::check("element enumeration", self.limits.max_elements, self.order)?;
        Ok(self
            .elements
            .get_or_init(|| Arc::new(self.chain.elements()))
            .clone())
    }

    /// `true` when every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.has(g))
    }

    fn require_subgroup(&self, h: &PermGroup) -> Result<()> {
        if h.is_subgroup_of(self) {
            Ok(())
        } else {
            Err(GroupError::NotASubgroup)
        }
    }

    /// `|G : H|`.
    pub fn index(&self, h: &PermGroup) -> Result<u64> {
        self.require_subgroup(h)?;
        debug_assert_eq!(self.order % h.order, 0);
        Ok(self.order / h.order)
    }

    /// `H^g = H` for all generators checks normality of `H` in `G`.
    pub fn is_normal(&self, h: &PermGroup) -> Result<bool> {
        self.require_subgroup(h)?;
        Ok(self.normalizes(h))
    }

    /// Whether every generator of `self` normalizes `h` (no containment
    /// check).
    fn normalizes(&self, h: &PermGroup) -> bool {
        self.generators
            .iter()
            .all(|g| h.generators.iter().all(|x| h.has(&x.conjugate_by(g))))
    }

    /// Grows `start` by scanning the elements of `self` in order and
    /// adjoining each one that passes `keep` and is not yet contained.
    fn grow_by_scan(
        &self,
        start: Vec<Permutation>,
        keep: impl Fn(&Permutation) -> bool,
    ) -> Result<PermGroup> {
        let mut current = self.sub(start);
        for g in self.elements()?.iter() {
            if current.order == self.order {
                break;
            }
            if !current.has(g) && keep(g) {
                let mut gens = current.generators.clone();
                gens.push(g.clone());
                current = self.sub(gens);
            }
        }
        Ok(current)
    }

    /// `N_G(H)`, by scanning the elements of `G`.
    pub fn normalizer(&self, h: &PermGroup) -> Result<PermGroup> {
        self.require_subgroup(h)?;
        self.grow_by_scan(h.generators.clone(), |g| {
            h.generators.iter().all(|x| h.has(&x.conjugate_by(g)))
        })
    }

    /// `C_G(H)`: elements of `G` commuting with every element of `H`.
    pub fn centralizer(&self, h: &PermGroup) -> Result<PermGroup> {
        self.require_subgroup(h)?;
        self.grow_by_scan(Vec::new(), |g| {
            h.generators.iter().all(|x| x * g == g * x)
        })
    }

    pub fn center(&self) -> Result<PermGroup> {
        self.centralizer(self)
    }

    /// `H^g`, generated by the conjugated generators of `H`.
    pub fn conjugate_subgroup(h: &PermGroup, g: &Permutation) -> Result<PermGroup> {
        h.check_degree(g)?;
        Ok(h.sub(h.generators.iter().map(|x| x.conjugate_by(g)).collect()))
    }

    /// Smallest normal subgroup of `self` containing `elements`.
    pub fn normal_closure(&self, elements: &[Permutation]) -> Result<PermGroup> {
        for s in elements {
            if !self.contains(s)? {
                return Err(GroupError::NotInGroup(s.to_string()));
            }
        }
        Ok(self.normal_closure_unchecked(elements.to_vec()))
    }

    fn normal_closure_unchecked(&self, start: Vec<Permutation>) -> PermGroup {
        let mut closure = self.sub(start);
        'grow: loop {
            for x in closure.generators.clone() {
                for g in &self.generators {
                    let y = x.conjugate_by(g);
                    if !closure.has(&y) {
                        let mut gens = closure.generators.clone();
                        gens.push(y);
                        closure = self.sub(gens);
                        continue 'grow;
                    }
                }
            }
            return closure;
        }
    }

    /// `[G, G]`: normal closure of the commutators of generator pairs.
    pub fn derived_subgroup(&self) -> PermGroup {
        let mut commutators = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                let c = &(&(&a.inverse() * &b.inverse()) * a) * b;
                if !c.is_identity() {
                    commutators.push(c);
                }
            }
        }
        self.normal_closure_unchecked(commutators)
    }

    /// The action of `self` on the right cosets of `h`, with the maps
    /// needed to push elements through it.
    pub fn coset_action_map(&self, h: &PermGroup) -> Result<CosetAction> {
        self.require_subgroup(h)?;
        CosetAction::new(self, h)
    }

    /// Permutation image of `G` acting on the right cosets `Hx`. When `H` is
    /// normal the image is isomorphic to `G/H`.
    pub fn coset_action(&self, h: &PermGroup) -> Result<PermGroup> {
        Ok(self.coset_action_map(h)?.image().clone())
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> Result<u64> {
        Ok(self
            .elements()?
            .iter()
            .fold(1u64, |acc, g| acc.lcm(&g.order())))
    }

    /// `G × H` acting on `degree(G) + degree(H)` points.
    pub fn direct_product(&self, other: &PermGroup) -> Result<PermGroup> {
        let left_id = self.identity();
        let right_id = other.identity();
        let gens = self
            .generators
            .iter()
            .map(|g| g.juxtapose(&right_id))
            .chain(other.generators.iter().map(|h| left_id.juxtapose(h)))
            .collect();
        PermGroup::with_limits(gens, self.degree + other.degree, self.limits)
    }

    /// Subgroup generated by the given elements, keeping only generators
    /// that enlarge the group.
    pub fn subgroup_from_elements<'a>(
        &self,
        elements: impl IntoIterator<Item = &'a Permutation>,
    ) -> Result<PermGroup> {
        let mut current = self.sub(Vec::new());
        for g in elements {
            if !self.contains(g)? {
                return Err(GroupError::NotInGroup(g.to_string()));
            }
            if !current.has(g) {
                let mut gens = current.generators.clone();
                gens.push(g.clone());
                current = self.sub(gens);
            }
        }
        Ok(current)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i + 1..].iter().all(|b| (a * b) == (b * a)))
    }
}

/// Set equality: same degree, same order, and one group's generators lie
/// in the other.
impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.order == other.order && self.is_subgroup_of(other)
    }
}

impl Eq for PermGroup {}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}
