//! Instance checks for the supporting lemmas: the Clifford bijection for
//! partial characters, the unique-orbit lemma, the counting-over-a-normal-
//! subgroup corollary, quotient transfer by pi'-kernels, invariant-character
//! transfer, vertex placement around a normal pi-subgroup, and the
//! pi-special lift bijection.  Every instance that fails raises a theory
//! violation; the returned summary only counts what was exercised.

use crate::chartab::ClassFunction;
use crate::error::{Error, Result};
use crate::group::{are_conjugate_subgroups, group_from_gens, normalizer, PermGroup};
use crate::perm::Permutation;
use crate::pi::{PiConfig, PiSide};
use crate::pi_partial::{restrict_to_pi, PartialCharacter};
use crate::workbench::Workbench;
use serde::Serialize;
use std::collections::{BTreeSet, HashMap};

#[derive(Clone, Debug, Default, Serialize)]
pub struct LemmaSummary {
    pub clifford_instances: usize,
    pub unique_orbit_instances: usize,
    pub counting_sum_instances: usize,
    pub transfer_instances: usize,
    pub invariant_transfer_instances: usize,
    pub vertex_placement_instances: usize,
    pub special_lift_instances: usize,
}

/// Orbits of `N`-conjugation on a set of `I_pi(K)` member indices.
fn orbits_under(
    wb: &mut Workbench,
    n: &PermGroup,
    k: &PermGroup,
    pi: &PiConfig,
    indices: &[usize],
) -> Result<Vec<Vec<usize>>> {
    let data = wb.pi_partial_data(k, pi)?;
    let lookup: HashMap<Vec<crate::cyclotomic::CyclotomicValue>, usize> = data
        .irreducibles
        .iter()
        .enumerate()
        .map(|(i, m)| (m.values().to_vec(), i))
        .collect();
    let act = |i: usize, g: &Permutation| -> Result<usize> {
        let moved = data.irreducibles[i].conjugate_by(g)?;
        lookup
            .get(moved.values())
            .copied()
            .ok_or_else(|| Error::theory("conjugate left I_pi(K)".to_string()))
    };
    let mut remaining: BTreeSet<usize> = indices.iter().copied().collect();
    let mut orbits = Vec::new();
    while let Some(&seed) = remaining.iter().next() {
        let mut orbit = vec![seed];
        remaining.remove(&seed);
        let mut i = 0;
        while i < orbit.len() {
            for g in n.generators() {
                let j = act(orbit[i], g)?;
                if remaining.remove(&j) {
                    orbit.push(j);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    Ok(orbits)
}

fn is_q_invariant_partial(theta: &PartialCharacter, q: &PermGroup) -> Result<bool> {
    for g in q.generators() {
        if theta.conjugate_by(g)?.values() != theta.values() {
            return Ok(false);
        }
    }
    Ok(true)
}

impl Workbench {
    /// Clifford correspondence as a bijection `I(G_theta|theta) -> I(G|theta)`
    /// for every constituent situation over every normal subgroup.
    pub fn check_clifford_bijection(&mut self, group: &PermGroup, pi: &PiConfig) -> Result<usize> {
        let mut instances = 0;
        let normals = self.normal_subgroups(group)?;
        let data = self.pi_partial_data(group, pi)?;
        for k in normals.iter() {
            if k.order() == group.order() {
                continue;
            }
            let k_data = self.pi_partial_data(k, pi)?;
            for theta_idx in 0..k_data.irreducibles.len() {
                let theta = k_data.irreducibles[theta_idx].clone();
                let stab = self.partial_stabilizer(group, &theta)?;
                let stab_data = self.pi_partial_data(&stab, pi)?;
                // I(G_theta | theta)
                let mut over: Vec<PartialCharacter> = Vec::new();
                for alpha in stab_data.irreducibles.clone() {
                    let consts = self.constituents_over_normal(&alpha, k)?;
                    if consts.iter().any(|&(i, _)| i == theta_idx) {
                        over.push(alpha);
                    }
                }
                // induced images: distinct, irreducible, exhaust I(G|theta)
                let mut images = BTreeSet::new();
                for alpha in &over {
                    let ind = self.induce_partial(alpha, group)?;
                    let idx = data.index_of(ind.values()).ok_or_else(|| {
                        Error::theory("Clifford induction is not irreducible".to_string())
                    })?;
                    if !images.insert(idx) {
                        return Err(Error::theory(
                            "Clifford induction is not injective".to_string(),
                        ));
                    }
                }
                let mut expect = BTreeSet::new();
                for (phi_idx, phi) in data.irreducibles.iter().enumerate() {
                    let consts = self.constituents_over_normal(&phi.clone(), k)?;
                    if consts.iter().any(|&(i, _)| i == theta_idx) {
                        expect.insert(phi_idx);
                    }
                }
                if images != expect {
                    return Err(Error::theory(
                        "Clifford induction does not exhaust I(G|theta)".to_string(),
                    ));
                }
                instances += 1;
            }
        }
        Ok(instances)
    }

    /// Unique-orbit lemma: for `phi in I(G|Q)` and `K` normal, exactly one
    /// `N_G(Q)`-orbit of constituents `theta` has `phi_theta in I(G_theta|Q)`.
    pub fn check_unique_orbit(&mut self, group: &PermGroup, pi: &PiConfig) -> Result<usize> {
        let mut instances = 0;
        let vd = self.vertex_data(group, pi)?;
        let data = self.pi_partial_data(group, pi)?;
        let chief = self.chief_series(group)?;
        let pi_prime_classes = vd.pi_prime_classes.clone();
        for (c, class) in pi_prime_classes.classes.iter().enumerate() {
            let q = class.representative.clone();
            let n_g_q = normalizer(group, &q)?;
            for &phi_idx in &vd.members_by_class[c] {
                let phi = data.irreducibles[phi_idx].clone();
                for k in chief.iter().filter(|k| k.order() < group.order()) {
                    let consts = self.constituents_over_normal(&phi, k)?;
                    let indices: Vec<usize> = consts.iter().map(|&(i, _)| i).collect();
                    let orbits = orbits_under(self, &n_g_q, k, pi, &indices)?;
                    let k_data = self.pi_partial_data(k, pi)?;
                    let mut hits = 0;
                    for orbit in &orbits {
                        let theta = k_data.irreducibles[orbit[0]].clone();
                        let stab = self.partial_stabilizer(group, &theta)?;
                        if !q.is_subgroup_of(&stab) {
                            continue;
                        }
                        let alpha = self.clifford_correspondent(&phi, &theta, k)?;
                        let stab_vd = self.vertex_data(&stab, pi)?;
                        let alpha_data = self.pi_partial_data(&stab, pi)?;
                        let alpha_idx = alpha_data
                            .index_of(alpha.values())
                            .ok_or_else(|| Error::theory("correspondent missing".to_string()))?;
                        let vclass = stab_vd.assignments[alpha_idx].vertex_class;
                        if let Some(qc) = stab_vd.class_of_subgroup(&stab, &q)? {
                            if vclass == qc {
                                hits += 1;
                            }
                        }
                    }
                    if hits != 1 {
                        return Err(Error::theory(format!(
                            "{} orbits carry the Clifford correspondent with vertex Q",
                            hits
                        )));
                    }
                    instances += 1;
                }
            }
        }
        Ok(instances)
    }

    /// Counting over a normal subgroup:
    /// `|I(G|Q)| = sum over orbit reps tau of |I(G_tau|Q,tau)|`.
    pub fn check_counting_sum(&mut self, group: &PermGroup, pi: &PiConfig) -> Result<usize> {
        let mut instances = 0;
        let vd = self.vertex_data(group, pi)?;
        let chief = self.chief_series(group)?;
        let pi_prime_classes = vd.pi_prime_classes.clone();
        for (c, class) in pi_prime_classes.classes.iter().enumerate() {
            let q = class.representative.clone();
            let n_g_q = normalizer(group, &q)?;
            for k in chief.iter().filter(|k| k.order() < group.order()) {
                let k_data = self.pi_partial_data(k, pi)?;
                let mut invariant = Vec::new();
                for (i, theta) in k_data.irreducibles.iter().enumerate() {
                    if is_q_invariant_partial(theta, &q)? {
                        invariant.push(i);
                    }
                }
                let orbits = orbits_under(self, &n_g_q, k, pi, &invariant)?;
                let mut total = 0usize;
                for orbit in &orbits {
                    let tau = k_data.irreducibles[orbit[0]].clone();
                    let stab = self.partial_stabilizer(group, &tau)?;
                    total += self
                        .members_with_vertex_over(&stab, pi, &q, k, orbit[0])?
                        .len();
                }
                let expect = vd.members_by_class[c].len();
                if total != expect {
                    return Err(Error::theory(format!(
                        "counting sum {} differs from |I(G|Q)| = {}",
                        total, expect
                    )));
                }
                instances += 1;
            }
        }
        Ok(instances)
    }

    /// Quotient transfer by the pi'-core: a bijection `I(G) -> I(G/N)`
    /// respecting vertices.
    pub fn check_quotient_transfer(&mut self, group: &PermGroup, pi: &PiConfig) -> Result<usize> {
        let n = self.o_core(group, pi, PiSide::PiPrime)?;
        let data = self.pi_partial_data(group, pi)?;
        let vd = self.vertex_data(group, pi)?;
        let quot = self.quotient(group, &n)?;
        let qg = quot.group().clone();
        let q_data = self.pi_partial_data(&qg, pi)?;
        let q_vd = self.vertex_data(&qg, pi)?;
        let mut seen = BTreeSet::new();
        let mut instances = 0;
        for (phi_idx, phi) in data.irreducibles.clone().into_iter().enumerate() {
            let image = self.quotient_transfer(&phi, &n)?;
            let img_idx = q_data
                .index_of(image.values())
                .ok_or_else(|| Error::theory("transfer image is not irreducible".to_string()))?;
            if !seen.insert(img_idx) {
                return Err(Error::theory(
                    "quotient transfer is not injective".to_string(),
                ));
            }
            if image.degree() != phi.degree() {
                return Err(Error::theory(
                    "quotient transfer changed a degree".to_string(),
                ));
            }
            // vertex transport: N <= Q and the image vertex is Q/N
            let vertex = vd.assignments[phi_idx].vertex.clone();
            if !n.is_subgroup_of(&vertex) {
                return Err(Error::theory("pi'-core escapes a vertex".to_string()));
            }
            let vertex_bar = quot.image_of_subgroup(&vertex)?;
            let img_class = q_vd.assignments[img_idx].vertex_class;
            match q_vd.class_of_subgroup(&qg, &vertex_bar)? {
                Some(c) if c == img_class => {}
                _ => {
                    return Err(Error::theory(
                        "transfer does not map I(G|Q) onto I(G/N|Q/N)".to_string(),
                    ))
                }
            }
            instances += 1;
        }
        if seen.len() != q_data.irreducibles.len() {
            return Err(Error::theory("quotient transfer is not onto".to_string()));
        }
        Ok(instances)
    }

    /// Invariant-character transfer modulo a normal pi'-subgroup inside `Q`:
    /// `|I(G|Q,theta)| = |I(G/L|Q/L,theta-bar)|`.
    pub fn check_invariant_transfer(&mut self, group: &PermGroup, pi: &PiConfig) -> Result<usize> {
        let mut instances = 0;
        let normals = self.normal_subgroups(group)?.as_ref().clone();
        let vd = self.vertex_data(group, pi)?;
        let pi_prime_classes = vd.pi_prime_classes.clone();
        for k in normals.iter().filter(|k| pi.is_pi_number(k.order())) {
            let k_data = self.pi_partial_data(k, pi)?;
            let k_table = self.table(k)?;
            for theta in k_table.irreducibles().iter() {
                if !crate::glauberman::is_invariant_under(theta, group)? {
                    continue;
                }
                let theta_partial_idx = {
                    let k_pi = self.pi_classes(k, pi)?;
                    let tp = restrict_to_pi(theta, pi, k_pi)?;
                    k_data.index_of(tp.values()).ok_or_else(|| {
                        Error::theory(
                            "character of a pi-group is not partial-irreducible".to_string(),
                        )
                    })?
                };
                for l in normals
                    .iter()
                    .filter(|l| pi.is_pi_prime_number(l.order()) && l.order() > 1)
                {
                    for class in pi_prime_classes.classes.iter() {
                        let q = class.representative.clone();
                        if !l.is_subgroup_of(&q) {
                            continue;
                        }
                        let lhs = self
                            .members_with_vertex_over(group, pi, &q, k, theta_partial_idx)?
                            .len();
                        // transport everything modulo L
                        let quot = self.quotient(group, l)?;
                        let qg = quot.group().clone();
                        let k_bar = quot.image_of_subgroup(k)?;
                        let q_bar = quot.image_of_subgroup(&q)?;
                        let k_bar_classes = self.classes(&k_bar)?;
                        // transport theta along the isomorphism K -> KL/L
                        let mut proj_to_k: HashMap<Permutation, Permutation> = HashMap::new();
                        for x in k.elements()?.iter() {
                            proj_to_k.insert(quot.project(x)?, x.clone());
                        }
                        let values: Vec<crate::cyclotomic::CyclotomicValue> = k_bar_classes
                            .classes()
                            .iter()
                            .map(|info| {
                                let pre = proj_to_k.get(&info.representative).ok_or_else(|| {
                                    Error::theory("missing preimage in K".to_string())
                                })?;
                                Ok(theta.value_at(pre)?.clone())
                            })
                            .collect::<Result<_>>()?;
                        let theta_bar =
                            ClassFunction::new(k_bar.clone(), k_bar_classes.clone(), values)?;
                        let kb_data = self.pi_partial_data(&k_bar, pi)?;
                        let kb_pi = self.pi_classes(&k_bar, pi)?;
                        let tb_partial = restrict_to_pi(&theta_bar, pi, kb_pi)?;
                        let tb_idx = kb_data.index_of(tb_partial.values()).ok_or_else(|| {
                            Error::theory("transported character is not irreducible".to_string())
                        })?;
                        let rhs = self
                            .members_with_vertex_over(&qg, pi, &q_bar, &k_bar, tb_idx)?
                            .len();
                        if lhs != rhs {
                            return Err(Error::theory(format!(
                                "invariant transfer mismatch: {} vs {}",
                                lhs, rhs
                            )));
                        }
                        instances += 1;
                    }
                }
            }
        }
        Ok(instances)
    }

    /// Vertex placement: for a normal pi-subgroup `K` with `KQ` normal and a
    /// Q-invariant constituent, some vertex `P` of `phi` has
    /// `Q <= P <= N_G(Q)`, and `Q` is itself a vertex exactly when
    /// `phi(1)_{pi'} = |G:Q|_{pi'}`.
    pub fn check_vertex_placement(&mut self, group: &PermGroup, pi: &PiConfig) -> Result<usize> {
        let mut instances = 0;
        let actions = self.coprime_actions(group, pi)?;
        let data = self.pi_partial_data(group, pi)?;
        let vd = self.vertex_data(group, pi)?;
        for (k, q) in actions {
            let n_g_q = normalizer(group, &q)?;
            let k_data = self.pi_partial_data(&k, pi)?;
            for theta_idx in 0..k_data.irreducibles.len() {
                let theta = k_data.irreducibles[theta_idx].clone();
                if !is_q_invariant_partial(&theta, &q)? {
                    continue;
                }
                for (phi_idx, phi) in data.irreducibles.clone().into_iter().enumerate() {
                    let consts = self.constituents_over_normal(&phi, &k)?;
                    if !consts.iter().any(|&(i, _)| i == theta_idx) {
                        continue;
                    }
                    let vertex = vd.assignments[phi_idx].vertex.clone();
                    let mut placed = false;
                    for p in self.conjugates(group, &vertex)?.iter() {
                        if q.is_subgroup_of(p) && p.is_subgroup_of(&n_g_q) {
                            placed = true;
                            break;
                        }
                    }
                    if !placed {
                        return Err(Error::theory(
                            "no vertex between Q and its normalizer".to_string(),
                        ));
                    }
                    let q_is_vertex = are_conjugate_subgroups(group, &vertex, &q)?;
                    let index_pp = pi.pi_prime_part(group.order() / q.order());
                    let crit = pi.pi_prime_part(phi.degree() as u128) == index_pp;
                    if q_is_vertex != crit {
                        return Err(Error::theory(
                            "vertex criterion phi(1)_pi' = |G:Q|_pi' fails".to_string(),
                        ));
                    }
                    instances += 1;
                }
            }
        }
        Ok(instances)
    }

    /// The lift bijection: pi-special characters correspond exactly to the
    /// members of `I_pi(G)` of pi-number degree under restriction.
    pub fn check_special_lifts(&mut self, group: &PermGroup, pi: &PiConfig) -> Result<usize> {
        let data = self.pi_partial_data(group, pi)?;
        let table = self.table(group)?;
        let flags = self.pi_special_flags(group, pi)?;
        let mut image = BTreeSet::new();
        for (i, chi) in table.irreducibles().iter().enumerate() {
            if !flags[i] {
                continue;
            }
            let pi_classes = self.pi_classes(group, pi)?;
            let restriction = restrict_to_pi(chi, pi, pi_classes)?;
            let idx = data.index_of(restriction.values()).ok_or_else(|| {
                Error::theory("restriction of a pi-special character is reducible".to_string())
            })?;
            if !image.insert(idx) {
                return Err(Error::theory(
                    "two pi-special characters share a restriction".to_string(),
                ));
            }
        }
        let expect: BTreeSet<usize> = data
            .irreducibles
            .iter()
            .enumerate()
            .filter(|(_, m)| pi.is_pi_number(m.degree() as u128))
            .map(|(i, _)| i)
            .collect();
        if image != expect {
            return Err(Error::theory(
                "pi-special lifts do not hit the pi-degree members exactly".to_string(),
            ));
        }
        Ok(image.len())
    }

    /// The full lemma suite for one `(G, pi)` pair.
    pub fn lemma_suite(&mut self, group: &PermGroup, pi: &PiConfig) -> Result<LemmaSummary> {
        Ok(LemmaSummary {
            clifford_instances: self.check_clifford_bijection(group, pi)?,
            unique_orbit_instances: self.check_unique_orbit(group, pi)?,
            counting_sum_instances: self.check_counting_sum(group, pi)?,
            transfer_instances: self.check_quotient_transfer(group, pi)?,
            invariant_transfer_instances: self.check_invariant_transfer(group, pi)?,
            vertex_placement_instances: self.check_vertex_placement(group, pi)?,
            special_lift_instances: self.check_special_lifts(group, pi)?,
        })
    }
}

/// Build `QZ` for the relative checks.
pub fn product_subgroup(degree: usize, a: &PermGroup, b: &PermGroup) -> PermGroup {
    let mut gens = a.generators().to_vec();
    gens.extend(b.generators().iter().cloned());
    group_from_gens(degree, gens)
}
