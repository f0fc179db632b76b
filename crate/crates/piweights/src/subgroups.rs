//! Subgroup enumeration up to conjugacy.
//!
//! Solvable groups use the cyclic extension algorithm: every subgroup of a
//! solvable group has a subnormal series with prime-order factors, so
//! repeatedly extending known subgroups `U` by elements `g` of `N_G(U)` with
//! `g^p` in `U` reaches everything.  Non-solvable groups fall back to the
//! join closure of all cyclic subgroups, which is complete because every
//! subgroup is the join of the cyclic subgroups of its elements.
//!
//! Normal subgroups are enumerated separately as the join closure of normal
//! closures of single classes; this is much cheaper and is what the chief
//! series and core computations build on.

use crate::classes::ConjugacyClassSet;
use crate::error::{Error, Result};
use crate::group::{
    group_from_gens, is_solvable, normal_closure, normalizer, orbit_stabilizer, PermGroup,
};
use crate::perm::Permutation;
use crate::pi::PiConfig;
use std::collections::{HashMap, HashSet};

#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub representative: PermGroup,
    pub normalizer_order: u128,
    pub class_size: u128,
}

#[derive(Debug)]
pub struct SubgroupClassList {
    pub classes: Vec<SubgroupClass>,
}

type Key = Vec<Permutation>;

fn key_of(group: &PermGroup) -> Result<Key> {
    Ok(group.elements()?.as_ref().clone())
}

/// Group a set of subgroups (given by canonical element keys) into
/// G-conjugacy classes; pick the subgroup with the least key as
/// representative of each class.
fn classify_up_to_conjugacy(
    group: &PermGroup,
    subs: HashMap<Key, PermGroup>,
) -> Result<Vec<SubgroupClass>> {
    let mut remaining: HashMap<Key, PermGroup> = subs;
    let mut classes = Vec::new();
    while let Some(seed_key) = remaining.keys().min().cloned() {
        let seed = remaining[&seed_key].clone();
        let os = orbit_stabilizer(group, seed_key.clone(), |t, s| {
            let mut out: Vec<Permutation> = t.iter().map(|e| e.conjugate_by(s)).collect();
            out.sort_unstable();
            out
        });
        let class_size = os.orbit.len() as u128;
        let min_key = os.orbit.iter().min().expect("nonempty orbit").clone();
        for k in &os.orbit {
            remaining.remove(k);
        }
        let representative = group_from_gens(group.degree(), min_key.iter().cloned());
        debug_assert_eq!(representative.order(), seed.order());
        let normalizer_order = os.stabilizer.order();
        debug_assert_eq!(class_size * normalizer_order, group.order());
        classes.push(SubgroupClass {
            representative,
            normalizer_order,
            class_size,
        });
    }
    classes.sort_by(|a, b| {
        a.representative
            .order()
            .cmp(&b.representative.order())
            .then_with(|| {
                let ka = a.representative.elements().expect("small group");
                let kb = b.representative.elements().expect("small group");
                ka.cmp(&kb)
            })
    });
    Ok(classes)
}

fn cyclic_extension(group: &PermGroup) -> Result<HashMap<Key, PermGroup>> {
    let order = group.order();
    let primes: Vec<u64> = crate::arith::factorize(order).keys().copied().collect();
    let mut all: HashMap<Key, PermGroup> = HashMap::new();
    let trivial = PermGroup::trivial(group.degree());
    all.insert(key_of(&trivial)?, trivial.clone());

    // representatives of the classes found in the previous layer
    let mut layer: Vec<PermGroup> = vec![trivial];
    // conjugacy-dedup ledger: for each layer we keep one representative per
    // G-class; extensions of conjugate subgroups are conjugate, so extending
    // representatives only is complete.
    while !layer.is_empty() {
        let mut next_by_key: HashMap<Key, PermGroup> = HashMap::new();
        for u in &layer {
            let n = normalizer(group, u)?;
            let n_elems = n.elements()?;
            for &p in &primes {
                if !(order / u.order()).is_multiple_of(p as u128) {
                    continue;
                }
                for g in n_elems.iter() {
                    if u.contains(g) {
                        continue;
                    }
                    if !u.contains(&g.pow(p as i64)) {
                        continue;
                    }
                    let mut gens: Vec<Permutation> = u.generators().to_vec();
                    gens.push(g.clone());
                    let v = PermGroup::new(group.degree(), gens)?;
                    if v.order() != u.order() * p as u128 {
                        return Err(Error::theory(
                            "cyclic extension produced wrong order".to_string(),
                        ));
                    }
                    let k = key_of(&v)?;
                    if !all.contains_key(&k) && !next_by_key.contains_key(&k) {
                        next_by_key.insert(k, v);
                    }
                }
            }
        }
        // reduce the freshly found subgroups to conjugacy representatives
        let mut reps: Vec<PermGroup> = Vec::new();
        let mut seen: HashSet<Key> = HashSet::new();
        let mut keys: Vec<Key> = next_by_key.keys().cloned().collect();
        keys.sort();
        for k in keys {
            if seen.contains(&k) {
                continue;
            }
            let v = next_by_key[&k].clone();
            let os = orbit_stabilizer(group, k.clone(), |t, s| {
                let mut out: Vec<Permutation> = t.iter().map(|e| e.conjugate_by(s)).collect();
                out.sort_unstable();
                out
            });
            for ck in &os.orbit {
                seen.insert(ck.clone());
                if let Some(w) = next_by_key.get(ck) {
                    // record every conjugate we happened to construct
                    all.insert(ck.clone(), w.clone());
                }
            }
            all.insert(k, v.clone());
            reps.push(v);
        }
        layer = reps;
    }
    // `all` holds at least one member of every class; that is all the
    // classifier needs, conjugates get regenerated there.
    Ok(all)
}

fn join_closure(group: &PermGroup) -> Result<HashMap<Key, PermGroup>> {
    let elements = group.elements()?;
    let mut all: HashMap<Key, PermGroup> = HashMap::new();
    let trivial = PermGroup::trivial(group.degree());
    all.insert(key_of(&trivial)?, trivial);
    for e in elements.iter() {
        let c = PermGroup::new(group.degree(), vec![e.clone()])?;
        all.entry(key_of(&c)?).or_insert(c);
    }
    let mut worklist: Vec<PermGroup> = all.values().cloned().collect();
    worklist.sort_by_key(|g| g.elements().expect("small").as_ref().clone());
    let mut processed = 0usize;
    while processed < worklist.len() {
        let a = worklist[processed].clone();
        for j in 0..processed {
            let b = worklist[j].clone();
            let mut gens = a.generators().to_vec();
            gens.extend(b.generators().iter().cloned());
            let join = PermGroup::new(group.degree(), gens)?;
            let k = key_of(&join)?;
            if let std::collections::hash_map::Entry::Vacant(e) = all.entry(k) {
                e.insert(join.clone());
                worklist.push(join);
            }
        }
        processed += 1;
    }
    Ok(all)
}

/// All subgroups of `group` up to conjugacy.  `limit` bounds `|G|`.
pub fn subgroups_up_to_conjugacy(group: &PermGroup, limit: u128) -> Result<SubgroupClassList> {
    if group.order() > limit {
        return Err(Error::resource(format!(
            "subgroup enumeration limited to order {} (group has order {})",
            limit,
            group.order()
        )));
    }
    let subs = if is_solvable(group) {
        cyclic_extension(group)?
    } else {
        join_closure(group)?
    };
    let classes = classify_up_to_conjugacy(group, subs)?;
    Ok(SubgroupClassList { classes })
}

impl SubgroupClassList {
    /// Total number of subgroups, summing class sizes.
    pub fn total_subgroups(&self) -> u128 {
        self.classes.iter().map(|c| c.class_size).sum()
    }

    /// Classes whose order is a pi'-number; always includes the trivial class.
    pub fn pi_prime_filter(&self, pi: &PiConfig) -> SubgroupClassList {
        SubgroupClassList {
            classes: self
                .classes
                .iter()
                .filter(|c| pi.is_pi_prime_number(c.representative.order()))
                .cloned()
                .collect(),
        }
    }
}

/// All normal subgroups: join closure of normal closures of single classes.
pub fn normal_subgroups(group: &PermGroup, classes: &ConjugacyClassSet) -> Result<Vec<PermGroup>> {
    let mut found: HashMap<Key, PermGroup> = HashMap::new();
    let trivial = PermGroup::trivial(group.degree());
    found.insert(key_of(&trivial)?, trivial);
    let mut worklist: Vec<PermGroup> = Vec::new();
    for info in classes.classes() {
        let n = normal_closure(group, std::slice::from_ref(&info.representative));
        let k = key_of(&n)?;
        if let std::collections::hash_map::Entry::Vacant(e) = found.entry(k) {
            e.insert(n.clone());
            worklist.push(n);
        }
    }
    let mut processed = 0usize;
    while processed < worklist.len() {
        let a = worklist[processed].clone();
        for j in 0..processed {
            let b = worklist[j].clone();
            let mut gens = a.generators().to_vec();
            gens.extend(b.generators().iter().cloned());
            // product of normal subgroups needs no further closure
            let join = PermGroup::new(group.degree(), gens)?;
            let k = key_of(&join)?;
            if let std::collections::hash_map::Entry::Vacant(e) = found.entry(k) {
                e.insert(join.clone());
                worklist.push(join);
            }
        }
        processed += 1;
    }
    let mut out: Vec<(Key, PermGroup)> = found.into_iter().collect();
    out.sort_by(|a, b| a.1.order().cmp(&b.1.order()).then_with(|| a.0.cmp(&b.0)));
    Ok(out.into_iter().map(|(_, g)| g).collect())
}

/// Minimal normal subgroups: the minimal-order nontrivial normal closures.
pub fn minimal_normal_subgroups(
    group: &PermGroup,
    classes: &ConjugacyClassSet,
) -> Result<Vec<PermGroup>> {
    let mut closures: Vec<PermGroup> = Vec::new();
    let mut seen: HashSet<Key> = HashSet::new();
    for info in classes.classes() {
        if info.representative.is_identity() {
            continue;
        }
        let n = normal_closure(group, std::slice::from_ref(&info.representative));
        let k = key_of(&n)?;
        if seen.insert(k) {
            closures.push(n);
        }
    }
    // minimal elements of the closure poset; any nontrivial normal subgroup
    // contains a full class closure, so minimal closures are minimal normal.
    let mut minimal = Vec::new();
    'outer: for (i, n) in closures.iter().enumerate() {
        for (j, m) in closures.iter().enumerate() {
            if i != j && m.order() < n.order() && m.is_subgroup_of(n) {
                continue 'outer;
            }
        }
        minimal.push(n.clone());
    }
    minimal.sort_by(|a, b| {
        a.order().cmp(&b.order()).then_with(|| {
            a.elements()
                .expect("small")
                .cmp(&b.elements().expect("small"))
        })
    });
    Ok(minimal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::conjugacy_classes;

    fn perm(deg: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(deg, s).unwrap()
    }

    fn s3() -> PermGroup {
        PermGroup::new(3, vec![perm(3, "(1,2)"), perm(3, "(1,2,3)")]).unwrap()
    }

    fn s4() -> PermGroup {
        PermGroup::new(4, vec![perm(4, "(1,2,3,4)"), perm(4, "(1,2)")]).unwrap()
    }

    #[test]
    fn s3_subgroup_classes() {
        let g = s3();
        let list = subgroups_up_to_conjugacy(&g, 2000).unwrap();
        assert_eq!(list.classes.len(), 4);
        let orders: Vec<u128> = list
            .classes
            .iter()
            .map(|c| c.representative.order())
            .collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
        assert_eq!(list.total_subgroups(), 6); // 1 + 3 + 1 + 1
    }

    #[test]
    fn s4_subgroup_classes() {
        let g = s4();
        let list = subgroups_up_to_conjugacy(&g, 2000).unwrap();
        assert_eq!(list.classes.len(), 11);
        assert_eq!(list.total_subgroups(), 30);
    }

    #[test]
    fn c6_subgroups_follow_divisors() {
        let c6 = PermGroup::new(5, vec![perm(5, "(1,2)(3,4,5)")]).unwrap();
        let list = subgroups_up_to_conjugacy(&c6, 2000).unwrap();
        assert_eq!(list.classes.len(), 4);
    }

    #[test]
    fn a5_by_join_closure() {
        let a5 = PermGroup::new(5, vec![perm(5, "(1,2,3,4,5)"), perm(5, "(3,4,5)")]).unwrap();
        let list = subgroups_up_to_conjugacy(&a5, 2000).unwrap();
        // 1, C2, C3, V4, C5, S3, D10, A4, A5
        assert_eq!(list.classes.len(), 9);
        assert_eq!(list.total_subgroups(), 59);
    }

    #[test]
    fn pi_prime_filter_keeps_trivial() {
        let g = s4();
        let list = subgroups_up_to_conjugacy(&g, 2000).unwrap();
        let pi2 = PiConfig::from_primes([2]).unwrap();
        let filtered = list.pi_prime_filter(&pi2);
        let orders: Vec<u128> = filtered
            .classes
            .iter()
            .map(|c| c.representative.order())
            .collect();
        assert_eq!(orders, vec![1, 3]);
    }

    #[test]
    fn normal_subgroups_of_s4() {
        let g = s4();
        let cc = conjugacy_classes(&g, 0).unwrap();
        let normals = normal_subgroups(&g, &cc).unwrap();
        let orders: Vec<u128> = normals.iter().map(|n| n.order()).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
        for n in &normals {
            assert!(n.is_normal_in(&g));
        }
    }

    #[test]
    fn minimal_normal_of_s4_is_v4() {
        let g = s4();
        let cc = conjugacy_classes(&g, 0).unwrap();
        let mins = minimal_normal_subgroups(&g, &cc).unwrap();
        assert_eq!(mins.len(), 1);
        assert_eq!(mins[0].order(), 4);
    }

    #[test]
    fn resource_limit_reported() {
        let g = s4();
        let err = subgroups_up_to_conjugacy(&g, 10).unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
        assert!(err.to_string().contains("10"));
    }
}
