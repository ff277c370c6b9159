//! Subgroups up to conjugacy.
//!
//! Every subgroup is a join of cyclic subgroups of prime-power order, so the
//! lattice is grown from the trivial class by joining each class
//! representative with every such cyclic subgroup. Each new subgroup is
//! expanded to its full conjugacy class before the next extension, which
//! makes the representatives of each class suffice.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::Arc;

use rayon::prelude::*;

use crate::arith::prime_power;
use crate::error::Result;
use crate::group::PermGroup;
use crate::limits::Limits;
use crate::perm::Permutation;
use crate::table::{CayleyTable, ElemSet};

/// A conjugacy class of subgroups.
#[derive(Debug, Clone)]
pub struct SubgroupClass {
    /// The member whose sorted element-index sequence is lexicographically
    /// least.
    pub representative: PermGroup,
    pub normalizer_order: u64,
    /// Number of conjugates, `|G : N_G(H)|`.
    pub class_size: u64,
    pub member_order: u64,
    members: Vec<ElemSet>,
}

impl SubgroupClass {
    pub fn is_normal(&self) -> bool {
        self.class_size == 1
    }
}

#[derive(Debug, Clone)]
pub struct LatticeReport {
    /// Ascending member order, then by canonical representative.
    pub classes: Vec<SubgroupClass>,
    pub class_count: usize,
    pub total_subgroups: u64,
    group: PermGroup,
    table: Arc<CayleyTable>,
}

/// Enumerates the conjugacy classes of subgroups of `g`.
pub fn subgroup_classes(g: &PermGroup) -> Result<LatticeReport> {
    Limits::check(
        "subgroup lattice order",
        g.limits().max_lattice_order,
        g.order(),
    )?;
    let table = Arc::new(CayleyTable::new(g)?);
    let n = table.len() as u32;

    // Cyclic subgroups of prime-power order, one generator each.
    let mut seen = HashSet::new();
    let mut cyclics: Vec<(u32, ElemSet)> = Vec::new();
    for x in 1..n {
        if prime_power(table.order_of(x)).is_some() {
            let c = table.closure(&[x]);
            if seen.insert(c.clone()) {
                cyclics.push((x, c));
            }
        }
    }

    let mut known: HashSet<ElemSet> = HashSet::new();
    let mut raw: Vec<(Vec<u32>, Vec<ElemSet>)> = Vec::new();
    let mut queue = VecDeque::new();

    let trivial = table.closure(&[]);
    queue.extend(admit(&table, &mut known, &mut raw, Vec::new(), trivial));

    while let Some(ci) = queue.pop_front() {
        let (rep_gens, members) = &raw[ci];
        let (rep_gens, rep) = (rep_gens.clone(), members[0].clone());
        let candidates: Vec<(Vec<u32>, ElemSet)> = cyclics
            .par_iter()
            .filter(|(x, _)| !rep.contains(*x))
            .map(|(x, _)| {
                let mut gens = rep_gens.clone();
                gens.push(*x);
                let set = table.closure(&gens);
                (gens, set)
            })
            .collect();
        for (gens, set) in candidates {
            queue.extend(admit(&table, &mut known, &mut raw, gens, set));
        }
    }

    let order = g.order();
    let mut classes: Vec<(ElemSet, SubgroupClass)> = raw
        .into_iter()
        .map(|(_, mut members)| {
            members.sort_by(|a, b| a.lex_cmp(b));
            let canonical = members[0].clone();
            let gens = table.small_generating_set(&canonical);
            let representative = g.sub(
                gens.iter()
                    .map(|&i| table.elements()[i as usize].clone())
                    .collect(),
            );
            let class_size = members.len() as u64;
            let class = SubgroupClass {
                member_order: canonical.len() as u64,
                normalizer_order: order / class_size,
                class_size,
                representative,
                members,
            };
            (canonical, class)
        })
        .collect();
    classes.sort_by(|(a, ca), (b, cb)| ca.member_order.cmp(&cb.member_order).then(a.lex_cmp(b)));
    let classes: Vec<SubgroupClass> = classes.into_iter().map(|(_, c)| c).collect();
    let total_subgroups = classes.iter().map(|c| c.class_size).sum();
    Ok(LatticeReport {
        class_count: classes.len(),
        total_subgroups,
        classes,
        group: g.clone(),
        table,
    })
}

/// Records the class of `set` unless some conjugate is already known.
fn admit(
    table: &CayleyTable,
    known: &mut HashSet<ElemSet>,
    raw: &mut Vec<(Vec<u32>, Vec<ElemSet>)>,
    gens: Vec<u32>,
    set: ElemSet,
) -> Option<usize> {
    if known.contains(&set) {
        return None;
    }
    let members = conjugacy_class(table, &set);
    known.extend(members.iter().cloned());
    raw.push((gens, members));
    Some(raw.len() - 1)
}

fn conjugacy_class(table: &CayleyTable, set: &ElemSet) -> Vec<ElemSet> {
    let mut members = vec![set.clone()];
    let mut seen: HashSet<ElemSet> = HashSet::from([set.clone()]);
    for g in 1..table.len() as u32 {
        let c = table.conjugate_set(set, g);
        if seen.insert(c.clone()) {
            members.push(c);
        }
    }
    members
}

/// Total number of subgroups.
pub fn all_subgroup_count(g: &PermGroup) -> Result<u64> {
    Ok(subgroup_classes(g)?.total_subgroups)
}

/// Classes of maximal subgroups of `g`.
pub fn maximal_subgroups(g: &PermGroup) -> Result<Vec<SubgroupClass>> {
    Ok(subgroup_classes(g)?.maximal_classes())
}

/// `Φ(G)`, the intersection of all maximal subgroups.
pub fn frattini(g: &PermGroup) -> Result<PermGroup> {
    Ok(subgroup_classes(g)?.frattini())
}

impl LatticeReport {
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    fn to_group(&self, set: &ElemSet) -> PermGroup {
        let gens = self.table.small_generating_set(set);
        self.group.sub(
            gens.iter()
                .map(|&i| self.table.elements()[i as usize].clone())
                .collect(),
        )
    }

    fn is_proper(&self, class: &SubgroupClass) -> bool {
        class.member_order < self.group.order()
    }

    /// Indices of classes whose members are maximal subgroups.
    pub fn maximal_class_indices(&self) -> Vec<usize> {
        self.classes
            .iter()
            .enumerate()
            .filter(|(_, c)| self.is_proper(c))
            .filter(|(_, c)| {
                let rep = &c.members[0];
                !self.classes.iter().any(|big| {
                    self.is_proper(big)
                        && big.member_order > c.member_order
                        && big.members.iter().any(|m| rep.is_subset(m))
                })
            })
            .map(|(i, _)| i)
            .collect()
    }

    pub fn maximal_classes(&self) -> Vec<SubgroupClass> {
        self.maximal_class_indices()
            .into_iter()
            .map(|i| self.classes[i].clone())
            .collect()
    }

    pub fn frattini(&self) -> PermGroup {
        let mut acc: Option<ElemSet> = None;
        for i in self.maximal_class_indices() {
            for m in &self.classes[i].members {
                acc = Some(match acc {
                    None => m.clone(),
                    Some(a) => a.intersection(m),
                });
            }
        }
        match acc {
            Some(set) => self.to_group(&set),
            None => self.group.clone(),
        }
    }

    /// Every member of the class as a group.
    pub fn member_groups(&self, class: usize) -> Vec<PermGroup> {
        self.classes[class]
            .members
            .iter()
            .map(|m| self.to_group(m))
            .collect()
    }

    /// Every subgroup as a set of elements.
    pub fn all_subgroups(&self) -> Vec<BTreeSet<Permutation>> {
        self.classes
            .iter()
            .flat_map(|c| c.members.iter())
            .map(|m| {
                m.iter()
                    .map(|i| self.table.elements()[i as usize].clone())
                    .collect()
            })
            .collect()
    }

    /// Number of classes of each member order.
    pub fn order_profile(&self) -> Vec<(u64, u64, u64)> {
        let mut by_order: HashMap<(u64, u64), u64> = HashMap::new();
        for c in &self.classes {
            *by_order.entry((c.member_order, c.class_size)).or_default() += 1;
        }
        let mut out: Vec<_> = by_order.into_iter().map(|((o, s), k)| (o, s, k)).collect();
        out.sort_unstable();
        out
    }
}
