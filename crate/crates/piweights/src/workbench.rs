//! The workbench: a memoization context for derived group data.
//!
//! Conjugacy classes, character tables, subgroup lattices, quotients and
//! everything built on them are cached per group, keyed by the canonical
//! (sorted) element list, so a subgroup reached along two different routes
//! shares one cache entry.  A single workbench is not thread-safe; corpus
//! drivers run one workbench per group task.

use crate::chartab::{CharacterTable, ClassFunction};
use crate::classes::{conjugacy_classes, ConjugacyClassSet};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::hall;
use crate::perm::Permutation;
use crate::pi::{PiConfig, PiSide};
use crate::quotient::QuotientData;
use crate::subgroups::{self, SubgroupClassList};
use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

pub const DEFAULT_ORDER_LIMIT: u128 = 2000;

#[derive(Clone)]
pub struct GroupKey {
    hash: u64,
    elems: Arc<Vec<Permutation>>,
}

impl PartialEq for GroupKey {
    fn eq(&self, other: &Self) -> bool {
        self.hash == other.hash
            && (Arc::ptr_eq(&self.elems, &other.elems) || self.elems == other.elems)
    }
}
impl Eq for GroupKey {}
impl Hash for GroupKey {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u64(self.hash);
    }
}

#[derive(Default)]
struct GroupEntry {
    classes: Option<Arc<ConjugacyClassSet>>,
    table: Option<Arc<CharacterTable>>,
    subgroups: Option<Arc<SubgroupClassList>>,
    normals: Option<Arc<Vec<PermGroup>>>,
    subnormals: Option<Arc<Vec<PermGroup>>>,
    chief_series: Option<Arc<Vec<PermGroup>>>,
    conjugate_cache: HashMap<GroupKey, Arc<Vec<PermGroup>>>,
}

#[derive(Default)]
struct PiEntry {
    separable: Option<bool>,
    core: [Option<PermGroup>; 2],
    hall: [Option<PermGroup>; 2],
    special_flags: Option<Arc<Vec<bool>>>,
}

pub struct Workbench {
    limit: u128,
    seed: u64,
    groups: HashMap<GroupKey, GroupEntry>,
    pi_entries: HashMap<(GroupKey, PiConfig), PiEntry>,
    quotients: HashMap<(GroupKey, GroupKey), Arc<QuotientData>>,
    pub(crate) partial_cache: HashMap<(GroupKey, PiConfig), Arc<crate::pi_partial::PiPartialData>>,
    pub(crate) vertex_cache: HashMap<(GroupKey, PiConfig), Arc<crate::vertex_weights::VertexData>>,
}

impl Default for Workbench {
    fn default() -> Self {
        Self::new()
    }
}

impl Workbench {
    pub fn new() -> Workbench {
        Workbench::with_limit(DEFAULT_ORDER_LIMIT)
    }

    pub fn with_limit(limit: u128) -> Workbench {
        Workbench {
            limit,
            seed: 0,
            groups: HashMap::new(),
            pi_entries: HashMap::new(),
            quotients: HashMap::new(),
            partial_cache: HashMap::new(),
            vertex_cache: HashMap::new(),
        }
    }

    pub fn with_limit_and_seed(limit: u128, seed: u64) -> Workbench {
        Workbench {
            seed,
            ..Workbench::with_limit(limit)
        }
    }

    pub fn limit(&self) -> u128 {
        self.limit
    }

    pub fn key_of(&mut self, group: &PermGroup) -> Result<GroupKey> {
        if group.order() > self.limit {
            return Err(Error::resource(format!(
                "group of order {} exceeds the configured limit {}",
                group.order(),
                self.limit
            )));
        }
        let elems = group.element_key()?;
        let mut h = DefaultHasher::new();
        for e in elems.iter() {
            e.images().hash(&mut h);
        }
        Ok(GroupKey {
            hash: h.finish(),
            elems,
        })
    }

    fn entry_mut(&mut self, key: &GroupKey) -> &mut GroupEntry {
        self.groups.entry(key.clone()).or_default()
    }

    fn pi_entry_mut(&mut self, key: &GroupKey, pi: &PiConfig) -> &mut PiEntry {
        self.pi_entries
            .entry((key.clone(), pi.clone()))
            .or_default()
    }

    pub fn classes(&mut self, group: &PermGroup) -> Result<Arc<ConjugacyClassSet>> {
        let key = self.key_of(group)?;
        if let Some(cc) = self.groups.get(&key).and_then(|e| e.classes.clone()) {
            return Ok(cc);
        }
        let cc = Arc::new(conjugacy_classes(group, self.seed)?);
        self.entry_mut(&key).classes = Some(cc.clone());
        Ok(cc)
    }

    pub fn table(&mut self, group: &PermGroup) -> Result<Arc<CharacterTable>> {
        let key = self.key_of(group)?;
        if let Some(t) = self.groups.get(&key).and_then(|e| e.table.clone()) {
            return Ok(t);
        }
        let cc = self.classes(group)?;
        let t = Arc::new(CharacterTable::build(group, cc)?);
        self.entry_mut(&key).table = Some(t.clone());
        Ok(t)
    }

    pub fn subgroup_classes(&mut self, group: &PermGroup) -> Result<Arc<SubgroupClassList>> {
        let key = self.key_of(group)?;
        if let Some(s) = self.groups.get(&key).and_then(|e| e.subgroups.clone()) {
            return Ok(s);
        }
        let s = Arc::new(subgroups::subgroups_up_to_conjugacy(group, self.limit)?);
        self.entry_mut(&key).subgroups = Some(s.clone());
        Ok(s)
    }

    pub fn normal_subgroups(&mut self, group: &PermGroup) -> Result<Arc<Vec<PermGroup>>> {
        let key = self.key_of(group)?;
        if let Some(n) = self.groups.get(&key).and_then(|e| e.normals.clone()) {
            return Ok(n);
        }
        let cc = self.classes(group)?;
        let n = Arc::new(subgroups::normal_subgroups(group, &cc)?);
        self.entry_mut(&key).normals = Some(n.clone());
        Ok(n)
    }

    pub fn subnormal_subgroups(&mut self, group: &PermGroup) -> Result<Arc<Vec<PermGroup>>> {
        let key = self.key_of(group)?;
        if let Some(s) = self.groups.get(&key).and_then(|e| e.subnormals.clone()) {
            return Ok(s);
        }
        let mut found: HashMap<GroupKey, PermGroup> = HashMap::new();
        found.insert(key.clone(), group.clone());
        let mut queue = vec![group.clone()];
        let mut i = 0;
        while i < queue.len() {
            let s = queue[i].clone();
            for n in self.normal_subgroups(&s)?.iter() {
                let k = self.key_of(n)?;
                if let std::collections::hash_map::Entry::Vacant(e) = found.entry(k) {
                    e.insert(n.clone());
                    queue.push(n.clone());
                }
            }
            i += 1;
        }
        let mut list: Vec<PermGroup> = found.into_values().collect();
        list.sort_by(|a, b| {
            a.order().cmp(&b.order()).then_with(|| {
                a.element_key()
                    .expect("cached")
                    .cmp(&b.element_key().expect("cached"))
            })
        });
        let arc = Arc::new(list);
        self.entry_mut(&key).subnormals = Some(arc.clone());
        Ok(arc)
    }

    pub fn minimal_normal_subgroups(&mut self, group: &PermGroup) -> Result<Vec<PermGroup>> {
        let cc = self.classes(group)?;
        subgroups::minimal_normal_subgroups(group, &cc)
    }

    /// Chief series `1 = N_0 < N_1 < .. < N_m = G`, all terms normal in `G`.
    pub fn chief_series(&mut self, group: &PermGroup) -> Result<Arc<Vec<PermGroup>>> {
        let key = self.key_of(group)?;
        if let Some(s) = self.groups.get(&key).and_then(|e| e.chief_series.clone()) {
            return Ok(s);
        }
        let mut series = vec![PermGroup::trivial(group.degree())];
        while series.last().expect("nonempty").order() < group.order() {
            let current = series.last().expect("nonempty").clone();
            let q = self.quotient(group, &current)?;
            let mins = self.minimal_normal_subgroups(q.group())?;
            let min = mins.first().ok_or_else(|| {
                Error::theory("proper quotient without minimal normal subgroup".to_string())
            })?;
            let next = q.preimage_of_subgroup(min)?;
            series.push(next);
        }
        let arc = Arc::new(series);
        self.entry_mut(&key).chief_series = Some(arc.clone());
        Ok(arc)
    }

    pub fn quotient(&mut self, group: &PermGroup, normal: &PermGroup) -> Result<Arc<QuotientData>> {
        let gk = self.key_of(group)?;
        let nk = self.key_of(normal)?;
        if let Some(q) = self.quotients.get(&(gk.clone(), nk.clone())) {
            return Ok(q.clone());
        }
        let q = Arc::new(QuotientData::new(group, normal)?);
        self.quotients.insert((gk, nk), q.clone());
        Ok(q)
    }

    /// All conjugates of `sub` in `group`, cached.
    pub fn conjugates(
        &mut self,
        group: &PermGroup,
        sub: &PermGroup,
    ) -> Result<Arc<Vec<PermGroup>>> {
        let gk = self.key_of(group)?;
        let sk = self.key_of(sub)?;
        if let Some(c) = self
            .groups
            .get(&gk)
            .and_then(|e| e.conjugate_cache.get(&sk).cloned())
        {
            return Ok(c);
        }
        let c = Arc::new(crate::group::conjugates_of_subgroup(group, sub)?);
        self.entry_mut(&gk).conjugate_cache.insert(sk, c.clone());
        Ok(c)
    }

    pub fn is_pi_separable(&mut self, group: &PermGroup, pi: &PiConfig) -> Result<bool> {
        let key = self.key_of(group)?;
        if let Some(v) = self
            .pi_entries
            .get(&(key.clone(), pi.clone()))
            .and_then(|e| e.separable)
        {
            return Ok(v);
        }
        let v = hall::is_pi_separable(group, pi)?;
        self.pi_entry_mut(&key, pi).separable = Some(v);
        Ok(v)
    }

    pub fn o_core(&mut self, group: &PermGroup, pi: &PiConfig, side: PiSide) -> Result<PermGroup> {
        let key = self.key_of(group)?;
        let slot = side as usize;
        if let Some(g) = self
            .pi_entries
            .get(&(key.clone(), pi.clone()))
            .and_then(|e| e.core[slot].clone())
        {
            return Ok(g);
        }
        let g = hall::o_core(group, pi, side)?;
        self.pi_entry_mut(&key, pi).core[slot] = Some(g.clone());
        Ok(g)
    }

    pub fn hall_subgroup(
        &mut self,
        group: &PermGroup,
        pi: &PiConfig,
        side: PiSide,
    ) -> Result<PermGroup> {
        let key = self.key_of(group)?;
        let slot = side as usize;
        if let Some(g) = self
            .pi_entries
            .get(&(key.clone(), pi.clone()))
            .and_then(|e| e.hall[slot].clone())
        {
            return Ok(g);
        }
        let g = hall::hall_subgroup(group, pi, side, self.limit)?;
        self.pi_entry_mut(&key, pi).hall[slot] = Some(g.clone());
        Ok(g)
    }

    /// Per-irreducible pi-speciality flags for the table of `group`.
    pub fn pi_special_flags(&mut self, group: &PermGroup, pi: &PiConfig) -> Result<Arc<Vec<bool>>> {
        let key = self.key_of(group)?;
        if let Some(f) = self
            .pi_entries
            .get(&(key.clone(), pi.clone()))
            .and_then(|e| e.special_flags.clone())
        {
            return Ok(f);
        }
        let table = self.table(group)?;
        let mut flags = Vec::with_capacity(table.len());
        for chi in table.irreducibles() {
            flags.push(self.is_pi_special(chi, pi)?);
        }
        let arc = Arc::new(flags);
        self.pi_entry_mut(&key, pi).special_flags = Some(arc.clone());
        Ok(arc)
    }

    /// Definitional pi-speciality: the degree and the determinantal order of
    /// every constituent on every subnormal subgroup are pi-numbers.
    pub fn is_pi_special(&mut self, chi: &ClassFunction, pi: &PiConfig) -> Result<bool> {
        if !pi.is_pi_number(chi.degree()? as u128) {
            return Ok(false);
        }
        if chi.degree()? == 1 {
            // every subnormal constituent of a linear character is one of
            // its restrictions, whose order divides the character's order
            return Ok(pi.is_pi_number(chi.determinant_order()? as u128));
        }
        let group = chi.group().clone();
        let subnormals = self.subnormal_subgroups(&group)?;
        for s in subnormals.iter() {
            let s_table = self.table(s)?;
            let restricted = chi.restrict(s, s_table.classes().clone())?;
            let mults = s_table.decompose(&restricted)?;
            for (theta, &m) in s_table.irreducibles().iter().zip(mults.iter()) {
                if m == 0 {
                    continue;
                }
                if !pi.is_pi_number(theta.determinant_order()? as u128) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The pi-special census `|X_pi(G)|`.
    pub fn pi_special_count(&mut self, group: &PermGroup, pi: &PiConfig) -> Result<usize> {
        Ok(self
            .pi_special_flags(group, pi)?
            .iter()
            .filter(|&&b| b)
            .count())
    }
}
