//! Permutation groups with a certified base and strong generating set.
//!
//! The chain is built by deterministic Schreier-Sims with a verification
//! fixpoint: construction only finishes once every Schreier generator sifts
//! to the identity, so the group order (the product of fundamental orbit
//! lengths) is certified rather than assumed.  All structural computations
//! (membership, element enumeration, orbit-stabilizer, normal closures,
//! derived and lower central series) route through this structure.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::rng::SplitMix64;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

/// Safety cap on element materialization, independent of any configured
/// workbench limit.
const ELEMENT_CAP: u128 = 1_000_000;

#[derive(Clone)]
pub struct PermGroup {
    inner: Arc<GroupInner>,
}

struct GroupInner {
    degree: usize,
    generators: Vec<Permutation>,
    chain: Vec<ChainLevel>,
    order: u128,
    elements: OnceLock<Arc<Vec<Permutation>>>,
}

struct ChainLevel {
    base_point: usize,
    /// Strong generators fixing the base prefix above this level.
    gens: Vec<Permutation>,
    /// Orbit of `base_point` in discovery order, with transversal
    /// representatives mapping `base_point` to each orbit point.
    orbit: Vec<usize>,
    reps: HashMap<usize, Permutation>,
}

impl ChainLevel {
    fn new(base_point: usize, degree: usize) -> Self {
        let mut reps = HashMap::new();
        reps.insert(base_point, Permutation::identity(degree));
        ChainLevel {
            base_point,
            gens: Vec::new(),
            orbit: vec![base_point],
            reps,
        }
    }

    fn recompute_orbit(&mut self, degree: usize) {
        self.orbit.clear();
        self.reps.clear();
        self.orbit.push(self.base_point);
        self.reps
            .insert(self.base_point, Permutation::identity(degree));
        let mut i = 0;
        while i < self.orbit.len() {
            let x = self.orbit[i];
            let rep = self.reps[&x].clone();
            for g in &self.gens {
                let y = g.apply(x);
                if let std::collections::hash_map::Entry::Vacant(e) = self.reps.entry(y) {
                    e.insert(rep.compose(g));
                    self.orbit.push(y);
                }
            }
            i += 1;
        }
    }
}

/// Sift `g` through the chain starting at `level`.  Returns the residue and
/// the level at which sifting stopped (`chain.len()` when fully stripped).
fn sift_from(chain: &[ChainLevel], level: usize, g: &Permutation) -> (Permutation, usize) {
    let mut h = g.clone();
    for (i, lvl) in chain.iter().enumerate().skip(level) {
        if h.is_identity() {
            return (h, i);
        }
        let x = h.apply(lvl.base_point);
        match lvl.reps.get(&x) {
            None => return (h, i),
            Some(u) => h = h.compose(&u.inverse()),
        }
    }
    (h, chain.len())
}

fn add_strong_generator(chain: &mut Vec<ChainLevel>, level: usize, g: Permutation, degree: usize) {
    if level == chain.len() {
        let bp = (0..degree)
            .find(|&p| g.apply(p) != p)
            .expect("non-identity permutation moves a point");
        chain.push(ChainLevel::new(bp, degree));
    }
    // A strong generator fixing the prefix above `level` belongs to every
    // stabilizer group down to that level.
    for lvl in chain.iter_mut().take(level + 1) {
        lvl.gens.push(g.clone());
        lvl.recompute_orbit(degree);
    }
}

fn schreier_sims(degree: usize, input_gens: &[Permutation]) -> Vec<ChainLevel> {
    let mut chain: Vec<ChainLevel> = Vec::new();
    for g in input_gens {
        let (res, lvl) = sift_from(&chain, 0, g);
        if !res.is_identity() {
            add_strong_generator(&mut chain, lvl, res, degree);
        }
    }
    // Verification fixpoint: every Schreier generator must strip.  Each
    // repair strictly grows the product of orbit lengths, so this terminates.
    'outer: loop {
        for i in 0..chain.len() {
            for oi in 0..chain[i].orbit.len() {
                let x = chain[i].orbit[oi];
                let u = chain[i].reps[&x].clone();
                for gi in 0..chain[i].gens.len() {
                    let s = chain[i].gens[gi].clone();
                    let y = s.apply(x);
                    let uy = chain[i].reps[&y].clone();
                    let schreier = u.compose(&s).compose(&uy.inverse());
                    if schreier.is_identity() {
                        continue;
                    }
                    let (res, lvl) = sift_from(&chain, i + 1, &schreier);
                    if !res.is_identity() {
                        add_strong_generator(&mut chain, lvl, res, degree);
                        continue 'outer;
                    }
                }
            }
        }
        break;
    }
    chain
}

impl PermGroup {
    /// Construct the group generated by `generators` on `degree` points.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<PermGroup> {
        if degree == 0 {
            return Err(Error::input("degree must be positive"));
        }
        let mut gens = Vec::new();
        for g in generators {
            if g.degree() != degree {
                return Err(Error::input(format!(
                    "generator degree {} does not match group degree {}",
                    g.degree(),
                    degree
                )));
            }
            if !g.is_identity() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        let chain = schreier_sims(degree, &gens);
        let mut order: u128 = 1;
        for lvl in &chain {
            order = order
                .checked_mul(lvl.orbit.len() as u128)
                .ok_or_else(|| Error::resource("group order exceeds u128"))?;
        }
        let group = PermGroup {
            inner: Arc::new(GroupInner {
                degree,
                generators: gens,
                chain,
                order,
                elements: OnceLock::new(),
            }),
        };
        debug_assert!(group.inner.generators.iter().all(|g| group.contains(g)));
        Ok(group)
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::new(degree, vec![]).expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn order(&self) -> u128 {
        self.inner.order
    }

    pub fn is_trivial(&self) -> bool {
        self.inner.order == 1
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.inner.generators
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.inner.degree)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.inner.degree {
            return false;
        }
        let (res, _) = sift_from(&self.inner.chain, 0, g);
        res.is_identity()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.inner.degree == other.inner.degree
            && self.inner.generators.iter().all(|g| other.contains(g))
    }

    /// Equality as subgroups of the symmetric group on the same points.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.inner.order == other.inner.order && self.is_subgroup_of(other)
    }

    pub fn is_normal_in(&self, parent: &PermGroup) -> bool {
        if !self.is_subgroup_of(parent) {
            return false;
        }
        parent.generators().iter().all(|g| {
            self.inner
                .generators
                .iter()
                .all(|h| self.contains(&h.conjugate_by(g)))
        })
    }

    /// All elements, lexicographically sorted.  Fails above the internal cap.
    pub fn elements(&self) -> Result<Arc<Vec<Permutation>>> {
        if self.inner.order > ELEMENT_CAP {
            return Err(Error::resource(format!(
                "refusing to list {} elements (cap {})",
                self.inner.order, ELEMENT_CAP
            )));
        }
        Ok(self
            .inner
            .elements
            .get_or_init(|| {
                let mut current = vec![Permutation::identity(self.inner.degree)];
                for lvl in self.inner.chain.iter().rev() {
                    let mut next = Vec::with_capacity(current.len() * lvl.orbit.len());
                    for h in &current {
                        for x in &lvl.orbit {
                            next.push(h.compose(&lvl.reps[x]));
                        }
                    }
                    current = next;
                }
                current.sort_unstable();
                Arc::new(current)
            })
            .clone())
    }

    /// Uniformly random element via the transversal factorization.
    pub fn random_element(&self, rng: &mut SplitMix64) -> Permutation {
        let mut g = Permutation::identity(self.inner.degree);
        for lvl in self.inner.chain.iter().rev() {
            let pick = lvl.orbit[rng.below(lvl.orbit.len() as u64) as usize];
            g = g.compose(&lvl.reps[&pick]);
        }
        g
    }

    pub fn conjugate(&self, by: &Permutation) -> PermGroup {
        let gens = self
            .inner
            .generators
            .iter()
            .map(|g| g.conjugate_by(by))
            .collect();
        PermGroup::new(self.inner.degree, gens).expect("conjugate of valid group")
    }

    /// Sorted element list used as a canonical key for subgroup identity.
    pub fn element_key(&self) -> Result<Arc<Vec<Permutation>>> {
        self.elements()
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.same_group(other)
    }
}
impl Eq for PermGroup {}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PermGroup(degree {}, order {}, gens ",
            self.inner.degree, self.inner.order
        )?;
        let mut first = true;
        for g in &self.inner.generators {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{}", g)?;
            first = false;
        }
        if self.inner.generators.is_empty() {
            write!(f, "-")?;
        }
        write!(f, ")")
    }
}

/// Build a group from candidate generators, skipping redundant ones so the
/// stored generating set stays short.
pub fn group_from_gens(
    degree: usize,
    candidates: impl IntoIterator<Item = Permutation>,
) -> PermGroup {
    let mut current = PermGroup::trivial(degree);
    let mut kept: Vec<Permutation> = Vec::new();
    for g in candidates {
        if !current.contains(&g) {
            kept.push(g);
            current = PermGroup::new(degree, kept.clone()).expect("valid generators");
        }
    }
    current
}

/// Orbit of `start` under a group action, with a transversal and Schreier
/// generators for the stabilizer.
pub struct OrbitStabilizer<T> {
    pub orbit: Vec<T>,
    pub transversal: Vec<Permutation>,
    pub index: HashMap<T, usize>,
    pub stabilizer: PermGroup,
}

pub fn orbit_stabilizer<T, F>(group: &PermGroup, start: T, act: F) -> OrbitStabilizer<T>
where
    T: Clone + Eq + std::hash::Hash,
    F: Fn(&T, &Permutation) -> T,
{
    let degree = group.degree();
    let mut orbit = vec![start.clone()];
    let mut transversal = vec![Permutation::identity(degree)];
    let mut index = HashMap::new();
    index.insert(start, 0usize);
    let mut stab = PermGroup::trivial(degree);
    let mut stab_gens: Vec<Permutation> = Vec::new();
    let mut i = 0;
    while i < orbit.len() {
        let t = orbit[i].clone();
        let u = transversal[i].clone();
        for s in group.generators() {
            let t2 = act(&t, s);
            match index.get(&t2) {
                None => {
                    index.insert(t2.clone(), orbit.len());
                    orbit.push(t2);
                    transversal.push(u.compose(s));
                }
                Some(&j) => {
                    let schreier = u.compose(s).compose(&transversal[j].inverse());
                    if !schreier.is_identity() && !stab.contains(&schreier) {
                        stab_gens.push(schreier);
                        stab = PermGroup::new(degree, stab_gens.clone()).expect("schreier gens");
                    }
                }
            }
        }
        i += 1;
    }
    OrbitStabilizer {
        orbit,
        transversal,
        index,
        stabilizer: stab,
    }
}

/// Centralizer of an element via orbit-stabilizer on the conjugation action.
pub fn centralizer_of_element(group: &PermGroup, x: &Permutation) -> Result<PermGroup> {
    if !group.contains(x) {
        return Err(Error::domain("element is not in the group"));
    }
    let os = orbit_stabilizer(group, x.clone(), |t, s| t.conjugate_by(s));
    let cent = os.stabilizer;
    debug_assert_eq!(os.orbit.len() as u128 * cent.order(), group.order());
    Ok(cent)
}

/// Centralizer of a subgroup: iterated element centralizers over generators.
pub fn centralizer_of_subgroup(group: &PermGroup, sub: &PermGroup) -> Result<PermGroup> {
    if !sub.is_subgroup_of(group) {
        return Err(Error::domain("not a subgroup"));
    }
    centralizer_of_set(group, sub.generators())
}

/// Centralizer in `group` of an arbitrary set of permutations on the same
/// points; the set need not lie in the group.
pub fn centralizer_of_set(group: &PermGroup, elems: &[Permutation]) -> Result<PermGroup> {
    let mut current = group.clone();
    for h in elems {
        if h.degree() != group.degree() {
            return Err(Error::domain("degree mismatch in centralizer computation"));
        }
        let os = orbit_stabilizer(&current, h.clone(), |t, s| t.conjugate_by(s));
        current = os.stabilizer;
    }
    Ok(current)
}

fn sorted_conjugate(elems: &[Permutation], by: &Permutation) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = elems.iter().map(|e| e.conjugate_by(by)).collect();
    out.sort_unstable();
    out
}

/// Normalizer of `sub` in `group` via orbit-stabilizer on the conjugation
/// action over canonical element lists.
pub fn normalizer(group: &PermGroup, sub: &PermGroup) -> Result<PermGroup> {
    if !sub.is_subgroup_of(group) {
        return Err(Error::domain("not a subgroup"));
    }
    let key: Vec<Permutation> = sub.elements()?.as_ref().clone();
    let os = orbit_stabilizer(group, key, |t, s| sorted_conjugate(t, s));
    let norm = os.stabilizer;
    debug_assert!(sub.is_subgroup_of(&norm));
    debug_assert_eq!(os.orbit.len() as u128 * norm.order(), group.order());
    Ok(norm)
}

/// All conjugates of `sub` under `group`, as groups.
pub fn conjugates_of_subgroup(group: &PermGroup, sub: &PermGroup) -> Result<Vec<PermGroup>> {
    if !sub.is_subgroup_of(group) {
        return Err(Error::domain("not a subgroup"));
    }
    let key: Vec<Permutation> = sub.elements()?.as_ref().clone();
    let os = orbit_stabilizer(group, key, |t, s| sorted_conjugate(t, s));
    Ok(os.transversal.iter().map(|u| sub.conjugate(u)).collect())
}

/// Test whether two subgroups of `group` are conjugate in it.
pub fn are_conjugate_subgroups(group: &PermGroup, a: &PermGroup, b: &PermGroup) -> Result<bool> {
    if a.order() != b.order() {
        return Ok(false);
    }
    if a.same_group(b) {
        return Ok(true);
    }
    let target: Vec<Permutation> = b.elements()?.as_ref().clone();
    let start: Vec<Permutation> = a.elements()?.as_ref().clone();
    // breadth-first over the conjugation orbit with early exit
    let mut seen: HashMap<Vec<Permutation>, ()> = HashMap::new();
    let mut queue = vec![start.clone()];
    seen.insert(start, ());
    let mut i = 0;
    while i < queue.len() {
        let cur = queue[i].clone();
        for s in group.generators() {
            let nxt = sorted_conjugate(&cur, s);
            if nxt == target {
                return Ok(true);
            }
            if !seen.contains_key(&nxt) {
                seen.insert(nxt.clone(), ());
                queue.push(nxt);
            }
        }
        i += 1;
    }
    Ok(false)
}

/// Intersection of two subgroups of a common symmetric group, by filtering
/// the smaller one's elements.
pub fn intersection(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let (small, big) = if a.order() <= b.order() {
        (a, b)
    } else {
        (b, a)
    };
    let elems = small.elements()?;
    Ok(group_from_gens(
        a.degree(),
        elems.iter().filter(|e| big.contains(e)).cloned(),
    ))
}

/// Smallest normal subgroup of `parent` containing `seeds`.
pub fn normal_closure(parent: &PermGroup, seeds: &[Permutation]) -> PermGroup {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut current = PermGroup::trivial(parent.degree());
    for s in seeds {
        if !current.contains(s) {
            gens.push(s.clone());
            current = PermGroup::new(parent.degree(), gens.clone()).expect("closure gens");
        }
    }
    loop {
        let mut new_gen = None;
        'scan: for h in current.generators() {
            for g in parent.generators() {
                let c = h.conjugate_by(g);
                if !current.contains(&c) {
                    new_gen = Some(c);
                    break 'scan;
                }
            }
        }
        match new_gen {
            None => break,
            Some(c) => {
                gens.push(c);
                current = PermGroup::new(parent.degree(), gens.clone()).expect("closure gens");
            }
        }
    }
    current
}

/// Derived subgroup `[G, G]`.
pub fn derived_subgroup(group: &PermGroup) -> PermGroup {
    let mut comms = Vec::new();
    for a in group.generators() {
        for b in group.generators() {
            comms.push(a.commutator(b));
        }
    }
    normal_closure(group, &comms)
}

/// `[A, B]` for `A, B` normal in `group` (normal closure of generator
/// commutators).
pub fn commutator_subgroup(group: &PermGroup, a: &PermGroup, b: &PermGroup) -> PermGroup {
    let mut comms = Vec::new();
    for x in a.generators() {
        for y in b.generators() {
            comms.push(x.commutator(y));
        }
    }
    normal_closure(group, &comms)
}

pub fn is_abelian_group(group: &PermGroup) -> bool {
    let gens = group.generators();
    gens.iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.compose(b) == b.compose(a)))
}

pub fn is_solvable(group: &PermGroup) -> bool {
    let mut current = group.clone();
    loop {
        let next = derived_subgroup(&current);
        if next.order() == current.order() {
            return current.is_trivial();
        }
        current = next;
    }
}

pub fn is_nilpotent(group: &PermGroup) -> bool {
    let mut current = group.clone();
    loop {
        let next = commutator_subgroup(group, &current, group);
        if next.order() == current.order() {
            return current.is_trivial();
        }
        current = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(deg: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(deg, s).unwrap()
    }

    fn sym(n: usize) -> PermGroup {
        let mut cycle = String::from("(");
        for i in 1..=n {
            if i > 1 {
                cycle.push(',');
            }
            cycle.push_str(&i.to_string());
        }
        cycle.push(')');
        PermGroup::new(n, vec![perm(n, &cycle), perm(n, "(1,2)")]).unwrap()
    }

    #[test]
    fn orders_of_standard_groups() {
        assert_eq!(sym(3).order(), 6);
        assert_eq!(sym(4).order(), 24);
        assert_eq!(sym(6).order(), 720);
        let a4 = PermGroup::new(4, vec![perm(4, "(1,2)(3,4)"), perm(4, "(1,2,3)")]).unwrap();
        assert_eq!(a4.order(), 12);
        assert_eq!(PermGroup::trivial(1).order(), 1);
    }

    #[test]
    fn membership_and_elements() {
        let s3 = sym(3);
        let elems = s3.elements().unwrap();
        assert_eq!(elems.len(), 6);
        assert!(elems.windows(2).all(|w| w[0] < w[1]));
        assert!(s3.contains(&perm(3, "(1,3)")));
        let c3 = PermGroup::new(3, vec![perm(3, "(1,2,3)")]).unwrap();
        assert!(c3.is_subgroup_of(&s3));
        assert!(!s3.is_subgroup_of(&c3));
        assert!(c3.is_normal_in(&s3));
    }

    #[test]
    fn centralizer_and_normalizer_match_brute_force() {
        let s4 = sym(4);
        let elems = s4.elements().unwrap();
        for x in [
            perm(4, "(1,2,3)"),
            perm(4, "(1,2)(3,4)"),
            perm(4, "(1,2,3,4)"),
        ] {
            let cent = centralizer_of_element(&s4, &x).unwrap();
            let brute: Vec<_> = elems
                .iter()
                .filter(|g| x.conjugate_by(g) == x)
                .cloned()
                .collect();
            assert_eq!(cent.order() as usize, brute.len());
            assert!(brute.iter().all(|g| cent.contains(g)));
        }
        let h = PermGroup::new(4, vec![perm(4, "(1,2,3)")]).unwrap();
        let norm = normalizer(&s4, &h).unwrap();
        let brute: Vec<_> = elems
            .iter()
            .filter(|g| {
                h.generators()
                    .iter()
                    .all(|x| h.contains(&x.conjugate_by(g)))
            })
            .cloned()
            .collect();
        assert_eq!(norm.order() as usize, brute.len());
        assert_eq!(norm.order(), 6);
    }

    #[test]
    fn normal_closure_and_derived_series() {
        let s4 = sym(4);
        let d = derived_subgroup(&s4);
        assert_eq!(d.order(), 12); // A4
        let dd = derived_subgroup(&d);
        assert_eq!(dd.order(), 4); // V4
        assert!(is_solvable(&s4));
        let a5 = PermGroup::new(5, vec![perm(5, "(1,2,3,4,5)"), perm(5, "(3,4,5)")]).unwrap();
        assert_eq!(a5.order(), 60);
        assert!(!is_solvable(&a5));
        assert!(!is_nilpotent(&sym(3)));
        let c6 = PermGroup::new(5, vec![perm(5, "(1,2)(3,4,5)")]).unwrap();
        assert!(is_nilpotent(&c6));
    }

    #[test]
    fn conjugate_subgroup_tests() {
        let s4 = sym(4);
        let h1 = PermGroup::new(4, vec![perm(4, "(1,2)")]).unwrap();
        let h2 = PermGroup::new(4, vec![perm(4, "(3,4)")]).unwrap();
        let h3 = PermGroup::new(4, vec![perm(4, "(1,2)(3,4)")]).unwrap();
        assert!(are_conjugate_subgroups(&s4, &h1, &h2).unwrap());
        assert!(!are_conjugate_subgroups(&s4, &h1, &h3).unwrap());
        assert_eq!(conjugates_of_subgroup(&s4, &h1).unwrap().len(), 6);
    }

    #[test]
    fn intersection_of_subgroups() {
        let s4 = sym(4);
        let a4 = derived_subgroup(&s4);
        let d8 = PermGroup::new(4, vec![perm(4, "(1,2,3,4)"), perm(4, "(1,3)")]).unwrap();
        assert_eq!(d8.order(), 8);
        let meet = intersection(&a4, &d8).unwrap();
        assert_eq!(meet.order(), 4); // V4
    }

    #[test]
    fn random_elements_are_members() {
        let s4 = sym(4);
        let mut rng = SplitMix64::new(1);
        for _ in 0..50 {
            assert!(s4.contains(&s4.random_element(&mut rng)));
        }
    }
}
