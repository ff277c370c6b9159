//! Derived and upper central series, Sylow subgroups, and the predicate
//! ladder cyclic ⇒ abelian ⇒ nilpotent ⇒ supersolvable ⇒ solvable.

use serde::{Deserialize, Serialize};

use crate::arith::{is_power_of, p_part, prime_divisors, require_prime};
use crate::error::Result;
use crate::group::PermGroup;
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    Derived,
    UpperCentral,
}

/// Orders of the successive terms of a series.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    /// Descending for the derived series, ascending for the upper central
    /// series. A repeated final term marks a series that stalled.
    pub terms: Vec<u64>,
    /// `true` when the series reached its natural end: the trivial group
    /// (derived) or the whole group (upper central).
    pub terminated: bool,
}

pub fn derived_series(g: &PermGroup) -> SeriesReport {
    let mut current = g.clone();
    let mut terms = vec![current.order()];
    loop {
        if current.is_trivial() {
            return SeriesReport {
                kind: SeriesKind::Derived,
                terms,
                terminated: true,
            };
        }
        let next = current.derived_subgroup();
        terms.push(next.order());
        if next.order() == current.order() {
            return SeriesReport {
                kind: SeriesKind::Derived,
                terms,
                terminated: false,
            };
        }
        current = next;
    }
}

/// `Z_{i+1}` is the preimage of the center of `G/Z_i`, computed through the
/// coset action on `Z_i`.
pub fn upper_central_series(g: &PermGroup) -> Result<SeriesReport> {
    let mut current = g.sub(Vec::new());
    let mut terms = vec![1];
    loop {
        if current.order() == g.order() {
            return Ok(SeriesReport {
                kind: SeriesKind::UpperCentral,
                terms,
                terminated: true,
            });
        }
        let quotient = g.coset_action_map(&current)?;
        let center = quotient.image().center()?;
        let mut gens = current.generators().to_vec();
        gens.extend(center.generators().iter().map(|z| quotient.lift(z)));
        let next = g.sub(gens);
        terms.push(next.order());
        if next.order() == current.order() {
            return Ok(SeriesReport {
                kind: SeriesKind::UpperCentral,
                terms,
                terminated: false,
            });
        }
        current = next;
    }
}

/// A Sylow `p`-subgroup: grown from the trivial group by adjoining the
/// first `p`-element of `N_G(P) ∖ P` until the full `p`-part is reached.
pub fn sylow(g: &PermGroup, p: u64) -> Result<PermGroup> {
    require_prime(p)?;
    let target = p_part(g.order(), p);
    let mut current = g.sub(Vec::new());
    while current.order() < target {
        let normalizer = g.normalizer(&current)?;
        let x = normalizer
            .elements()?
            .iter()
            .find(|x| is_power_of(x.order(), p) && !current.has(x))
            .cloned()
            .expect("a non-Sylow p-subgroup has a p-element of its normalizer outside it");
        let mut gens = current.generators().to_vec();
        gens.push(x);
        current = g.sub(gens);
    }
    Ok(current)
}

/// Number of Sylow `p`-subgroups, `|G : N_G(P)|`.
pub fn sylow_count(g: &PermGroup, p: u64) -> Result<u64> {
    let s = sylow(g, p)?;
    g.index(&g.normalizer(&s)?)
}

pub fn is_abelian(g: &PermGroup) -> bool {
    g.is_abelian()
}

/// Cyclic iff some element has order `|G|`.
pub fn is_cyclic(g: &PermGroup) -> Result<bool> {
    if !g.is_abelian() {
        return Ok(false);
    }
    let n = g.order();
    Ok(g.elements()?.iter().any(|x| x.order() == n))
}

/// Nilpotent iff every Sylow subgroup is normal.
pub fn is_nilpotent(g: &PermGroup) -> Result<bool> {
    if g.is_abelian() {
        return Ok(true);
    }
    for p in prime_divisors(g.order()) {
        if !g.is_normal(&sylow(g, p)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Nilpotent iff the upper central series reaches `G`.
pub fn is_nilpotent_by_center_series(g: &PermGroup) -> Result<bool> {
    Ok(upper_central_series(g)?.terminated)
}

pub fn is_solvable(g: &PermGroup) -> bool {
    derived_series(g).terminated
}

/// First subgroup of prime order normal in `g`, scanning elements in order.
fn normal_subgroup_of_prime_order(g: &PermGroup) -> Result<Option<PermGroup>> {
    let elements = g.elements()?;
    let mut tried: Vec<PermGroup> = Vec::new();
    for x in elements.iter().skip(1) {
        let k = x.order();
        if !crate::arith::is_prime(k) || tried.iter().any(|t| t.has(x)) {
            continue;
        }
        let powers: Vec<Permutation> = (1..k).map(|e| x.pow(e)).collect();
        let normal = g
            .generators()
            .iter()
            .all(|s| powers.contains(&x.conjugate_by(s)));
        let cyclic = g.sub(vec![x.clone()]);
        if normal {
            return Ok(Some(cyclic));
        }
        tried.push(cyclic);
    }
    Ok(None)
}

/// Supersolvable iff trivial, or some normal subgroup `N` of prime order
/// has `G/N` supersolvable. Quotients of supersolvable groups are
/// supersolvable, so the first such `N` found decides.
pub fn is_supersolvable(g: &PermGroup) -> Result<bool> {
    let mut current = g.clone();
    loop {
        if current.is_trivial() || current.is_abelian() {
            return Ok(true);
        }
        match normal_subgroup_of_prime_order(&current)? {
            None => return Ok(false),
            Some(n) => current = current.coset_action(&n)?,
        }
    }
}

/// All five predicates for one group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Profile {
    pub cyclic: bool,
    pub abelian: bool,
    pub nilpotent: bool,
    pub supersolvable: bool,
    pub solvable: bool,
}

impl Profile {
    pub fn of(g: &PermGroup) -> Result<Self> {
        Ok(Profile {
            cyclic: is_cyclic(g)?,
            abelian: is_abelian(g),
            nilpotent: is_nilpotent(g)?,
            supersolvable: is_supersolvable(g)?,
            solvable: is_solvable(g),
        })
    }

    /// Whether each predicate implies the next one up the ladder.
    pub fn respects_ladder(&self) -> bool {
        (!self.cyclic || self.abelian)
            && (!self.abelian || self.nilpotent)
            && (!self.nilpotent || self.supersolvable)
            && (!self.supersolvable || self.solvable)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;
    use crate::error::GroupError;

    #[test]
    fn derived_series_examples() {
        assert_eq!(
            derived_series(&symmetric(4).unwrap()).terms,
            vec![24, 12, 4, 1]
        );
        assert_eq!(derived_series(&cyclic(6).unwrap()).terms, vec![6, 1]);
        let a5 = derived_series(&alternating(5).unwrap());
        assert_eq!(a5.terms, vec![60, 60]);
        assert!(!a5.terminated);
        assert_eq!(derived_series(&cyclic(1).unwrap()).terms, vec![1]);
    }

    #[test]
    fn upper_central_series_examples() {
        let d4 = upper_central_series(&dihedral(4).unwrap()).unwrap();
        assert_eq!(d4.terms, vec![1, 2, 8]);
        assert!(d4.terminated);
        let a5 = upper_central_series(&alternating(5).unwrap()).unwrap();
        assert_eq!(a5.terms, vec![1, 1]);
        assert!(!a5.terminated);
        assert_eq!(upper_central_series(&klein4()).unwrap().terms, vec![1, 4]);
    }

    #[test]
    fn sylow_examples() {
        let a5 = alternating(5).unwrap();
        assert_eq!(sylow(&a5, 5).unwrap().order(), 5);
        assert_eq!(sylow(&a5, 7).unwrap().order(), 1);
        assert_eq!(sylow(&symmetric(4).unwrap(), 2).unwrap().order(), 8);
        assert_eq!(sylow_count(&a5, 5).unwrap(), 6);
        assert_eq!(sylow_count(&cyclic(12).unwrap(), 2).unwrap(), 1);
        assert_eq!(sylow_count(&symmetric(3).unwrap(), 3).unwrap(), 1);
        assert_eq!(sylow(&a5, 4), Err(GroupError::NotPrime(4)));
    }

    #[test]
    fn abelian_and_cyclic() {
        let k4 = klein4();
        assert!(is_abelian(&k4) && !is_cyclic(&k4).unwrap());
        assert!(is_cyclic(&cyclic(6).unwrap()).unwrap());
        assert!(!is_abelian(&symmetric(3).unwrap()));
        // exponent 6 = order, yet not cyclic
        assert!(!is_cyclic(&symmetric(3).unwrap()).unwrap());
    }

    #[test]
    fn nilpotency() {
        assert!(is_nilpotent(&dihedral(4).unwrap()).unwrap());
        assert!(!is_nilpotent(&symmetric(3).unwrap()).unwrap());
        assert!(!is_nilpotent(&alternating(5).unwrap()).unwrap());
        for g in [
            dihedral(4).unwrap(),
            symmetric(3).unwrap(),
            alternating(5).unwrap(),
        ] {
            assert_eq!(
                is_nilpotent(&g).unwrap(),
                is_nilpotent_by_center_series(&g).unwrap()
            );
        }
    }

    #[test]
    fn solvability() {
        assert!(is_solvable(&symmetric(4).unwrap()));
        assert!(!is_solvable(&alternating(5).unwrap()));
        assert!(is_solvable(&cyclic(1).unwrap()));
    }

    #[test]
    fn supersolvability() {
        assert!(is_supersolvable(&symmetric(3).unwrap()).unwrap());
        assert!(!is_supersolvable(&alternating(4).unwrap()).unwrap());
        assert!(!is_supersolvable(&symmetric(4).unwrap()).unwrap());
        assert!(is_supersolvable(&nm_group(4, 5, 2).unwrap()).unwrap());
        assert!(!is_supersolvable(&sl2(3).unwrap()).unwrap());
        for n in 3..=12 {
            assert!(is_supersolvable(&dihedral(n).unwrap()).unwrap(), "D({n})");
        }
    }
}
