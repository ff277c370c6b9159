use std::collections::HashMap;
use std::sync::Arc;

use crate::error::Result;
use crate::group::PermGroup;
use crate::limits::Limits;
use crate::perm::Permutation;

/// `G` acting on the right cosets of a subgroup `H` by right
/// multiplication, `Hx ↦ Hxg`. Point 0 is the coset `H` itself.
#[derive(Debug, Clone)]
pub struct CosetAction {
    image: PermGroup,
    representatives: Vec<Permutation>,
    subgroup_elements: Arc<Vec<Permutation>>,
    lookup: HashMap<Permutation, usize>,
}

impl CosetAction {
    pub(crate) fn new(g: &PermGroup, h: &PermGroup) -> Result<Self> {
        let index = g.order() / h.order();
        Limits::check("coset action index", g.limits().max_coset_index, index)?;
        let subgroup_elements = h.elements()?;
        let key = |x: &Permutation| -> Permutation {
            subgroup_elements
                .iter()
                .map(|s| s.then(x))
                .min()
                .expect("subgroup contains the identity")
        };

        let identity = g.identity();
        let mut representatives = vec![identity.clone()];
        let mut lookup = HashMap::new();
        lookup.insert(key(&identity), 0);
        let mut head = 0;
        while head < representatives.len() {
            let rep = representatives[head].clone();
            head += 1;
            for s in g.generators() {
                let y = rep.then(s);
                let k = key(&y);
                if let std::collections::hash_map::Entry::Vacant(e) = lookup.entry(k) {
                    e.insert(representatives.len());
                    representatives.push(y);
                }
            }
        }
        debug_assert_eq!(representatives.len() as u64, index);

        let mut action = CosetAction {
            image: PermGroup::trivial(1)?,
            representatives,
            subgroup_elements,
            lookup,
        };
        let image_gens = g.generators().iter().map(|s| action.image_of(s)).collect();
        action.image =
            PermGroup::with_limits(image_gens, action.representatives.len(), g.limits())?;
        Ok(action)
    }

    fn coset_of(&self, x: &Permutation) -> usize {
        let key = self
            .subgroup_elements
            .iter()
            .map(|s| s.then(x))
            .min()
            .unwrap();
        self.lookup[&key]
    }

    /// The permutation of cosets induced by `g`.
    pub fn image_of(&self, g: &Permutation) -> Permutation {
        let images = self
            .representatives
            .iter()
            .map(|r| self.coset_of(&r.then(g)) as u32)
            .collect();
        Permutation::from_images_unchecked(images)
    }

    /// An element of `G` sending the base coset where `q` sends it. For a
    /// normal subgroup this is a preimage of `q` under the quotient map.
    pub fn lift(&self, q: &Permutation) -> Permutation {
        self.representatives[q.image(0)].clone()
    }

    pub fn image(&self) -> &PermGroup {
        &self.image
    }

    pub fn representatives(&self) -> &[Permutation] {
        &self.representatives
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, c: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, c).unwrap()
    }

    #[test]
    fn quotient_of_dihedral_by_central_rotation() {
        let d8 = PermGroup::new(vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[1, 3]])], 4).unwrap();
        let r2 = PermGroup::new(vec![cyc(4, &[&[0, 2], &[1, 3]])], 4).unwrap();
        let q = d8.coset_action(&r2).unwrap();
        assert_eq!((q.order(), q.degree()), (4, 4));
    }

    #[test]
    fn action_on_single_coset_is_trivial() {
        let d8 = PermGroup::new(vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[1, 3]])], 4).unwrap();
        let q = d8.coset_action(&d8).unwrap();
        assert_eq!((q.order(), q.degree()), (1, 1));
    }

    #[test]
    fn index_two_quotient_of_s4() {
        let s4 = PermGroup::new(vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 1]])], 4).unwrap();
        let a4 = PermGroup::new(vec![cyc(4, &[&[0, 1, 2]]), cyc(4, &[&[1, 2, 3]])], 4).unwrap();
        let q = s4.coset_action(&a4).unwrap();
        assert_eq!((q.order(), q.degree()), (2, 2));
    }

    #[test]
    fn non_normal_subgroup_gives_transitive_action() {
        let s4 = PermGroup::new(vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 1]])], 4).unwrap();
        let s3 = PermGroup::new(vec![cyc(4, &[&[0, 1, 2]]), cyc(4, &[&[0, 1]])], 4).unwrap();
        let q = s4.coset_action(&s3).unwrap();
        assert_eq!((q.order(), q.degree()), (24, 4));
    }

    #[test]
    fn lift_is_a_preimage_for_normal_subgroups() {
        let d8 = PermGroup::new(vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[1, 3]])], 4).unwrap();
        let r2 = PermGroup::new(vec![cyc(4, &[&[0, 2], &[1, 3]])], 4).unwrap();
        let act = d8.coset_action_map(&r2).unwrap();
        for g in d8.elements().unwrap().iter() {
            let q = act.image_of(g);
            assert_eq!(act.image_of(&act.lift(&q)), q);
        }
    }

    #[test]
    fn index_bound_enforced() {
        let s4 = PermGroup::new(vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 1]])], 4)
            .unwrap()
            .limited(Limits {
                max_coset_index: 3,
                ..Limits::default()
            });
        let t = PermGroup::trivial(4).unwrap();
        assert!(s4.coset_action(&t).is_err());
    }
}
