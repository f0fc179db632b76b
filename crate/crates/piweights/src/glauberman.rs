//! The Glauberman correspondence for coprime actions with solvable acting
//! group, and the count identity it feeds.
//!
//! For a q-group `Q` acting coprimely on `K`, a Q-invariant `theta in Irr(K)`
//! restricts to the fixed-point subgroup with a unique constituent of
//! multiplicity prime to `q`; that constituent is the correspondent.  For
//! solvable `Q` the map is composed along a chief series, descending through
//! successive fixed-point subgroups.  The composite is independent of the
//! chosen series; when a second chief series exists this independence is
//! recomputed rather than assumed.

use crate::chartab::ClassFunction;
use crate::error::{Error, Result};
use crate::group::{centralizer_of_set, is_solvable, PermGroup};
use crate::pi::PiConfig;
use crate::pi_partial::restrict_to_pi;
use crate::workbench::Workbench;
use serde::Serialize;

/// A coprime action: `Q` normalizes `K` inside a common symmetric group.
pub struct CoprimeAction {
    k: PermGroup,
    q: PermGroup,
}

impl CoprimeAction {
    pub fn new(k: PermGroup, q: PermGroup) -> Result<CoprimeAction> {
        if k.degree() != q.degree() {
            return Err(Error::domain("action groups live on different point sets"));
        }
        if crate::arith::gcd_u128(k.order(), q.order()) != 1 {
            return Err(Error::domain("orders are not coprime"));
        }
        let normalizes = q.generators().iter().all(|g| {
            k.generators()
                .iter()
                .all(|h| k.contains(&h.conjugate_by(g)))
        });
        if !normalizes {
            return Err(Error::domain("Q does not normalize K"));
        }
        Ok(CoprimeAction { k, q })
    }

    pub fn k(&self) -> &PermGroup {
        &self.k
    }
    pub fn q(&self) -> &PermGroup {
        &self.q
    }
}

/// Is `chi in Irr(K)` fixed by every generator of `q`?
pub fn is_invariant_under(chi: &ClassFunction, q: &PermGroup) -> Result<bool> {
    for g in q.generators() {
        if chi.conjugate_by(g)? != *chi {
            return Ok(false);
        }
    }
    Ok(true)
}

impl Workbench {
    /// A chief series of `group` differing from the cached one at the first
    /// step where a choice of minimal normal subgroup exists.
    fn alternate_chief_series(&mut self, group: &PermGroup) -> Result<Option<Vec<PermGroup>>> {
        let mut series = vec![PermGroup::trivial(group.degree())];
        let mut branched = false;
        while series.last().expect("nonempty").order() < group.order() {
            let current = series.last().expect("nonempty").clone();
            let q = self.quotient(group, &current)?;
            let mins = self.minimal_normal_subgroups(q.group())?;
            let pick = if !branched && mins.len() > 1 {
                branched = true;
                &mins[1]
            } else {
                &mins[0]
            };
            series.push(q.preimage_of_subgroup(pick)?);
        }
        Ok(if branched { Some(series) } else { None })
    }

    fn correspondent_along(
        &mut self,
        action: &CoprimeAction,
        theta: &ClassFunction,
        series: &[PermGroup],
    ) -> Result<ClassFunction> {
        let q = action.q().clone();
        let mut fixed = action.k().clone();
        let mut current = theta.clone();
        for step in series.windows(2) {
            let (lower, upper) = (&step[0], &step[1]);
            let prime_power = upper.order() / lower.order();
            let p = *crate::arith::factorize(prime_power)
                .keys()
                .next()
                .ok_or_else(|| Error::theory("chief factor of order one".to_string()))?;
            let next_fixed = centralizer_of_set(&fixed, upper.generators())?;
            let next_table = self.table(&next_fixed)?;
            let restricted = current.restrict(&next_fixed, next_table.classes().clone())?;
            let mults = next_table.decompose(&restricted)?;
            let mut pick = None;
            for (i, &m) in mults.iter().enumerate() {
                if m % p != 0 {
                    if pick.is_some() {
                        return Err(Error::theory(
                            "two constituents of multiplicity prime to p".to_string(),
                        ));
                    }
                    pick = Some(i);
                }
            }
            let pick = pick.ok_or_else(|| {
                Error::theory("no constituent of multiplicity prime to p".to_string())
            })?;
            current = next_table.irreducibles()[pick].clone();
            if !is_invariant_under(&current, &q)? {
                return Err(Error::theory(
                    "intermediate correspondent is not Q-invariant".to_string(),
                ));
            }
            fixed = next_fixed;
        }
        Ok(current)
    }

    /// The Glauberman-Isaacs correspondent of a Q-invariant `theta in Irr(K)`
    /// for solvable `Q`, as a character of `C_K(Q)`.
    pub fn glauberman_correspondent(
        &mut self,
        action: &CoprimeAction,
        theta: &ClassFunction,
    ) -> Result<ClassFunction> {
        if !is_solvable(action.q()) {
            return Err(Error::unsupported(
                "Glauberman correspondent for nonsolvable Q is out of scope",
            ));
        }
        if !theta.group().same_group(action.k()) {
            return Err(Error::domain("theta is not a character of K"));
        }
        if !is_invariant_under(theta, action.q())? {
            return Err(Error::domain("theta is not Q-invariant"));
        }
        let series = self.chief_series(action.q())?;
        let result = self.correspondent_along(action, theta, &series)?;
        // series independence, recomputed when a second series exists
        if let Some(alt) = self.alternate_chief_series(action.q())? {
            let other = self.correspondent_along(action, theta, &alt)?;
            if other != result {
                return Err(Error::theory(
                    "correspondent depends on the chosen chief series".to_string(),
                ));
            }
        }
        Ok(result)
    }

    /// The full correspondence `Irr_Q(K) -> Irr(C_K(Q))`, with bijectivity
    /// asserted.  Returns `(invariant character, correspondent)` pairs.
    pub fn glauberman_map(
        &mut self,
        action: &CoprimeAction,
    ) -> Result<Vec<(ClassFunction, ClassFunction)>> {
        let k_table = self.table(action.k())?;
        let centralizer = centralizer_of_set(action.k(), action.q().generators())?;
        let c_table = self.table(&centralizer)?;
        let mut pairs = Vec::new();
        for theta in k_table.irreducibles().iter() {
            if is_invariant_under(theta, action.q())? {
                let image = self.glauberman_correspondent(action, theta)?;
                pairs.push((theta.clone(), image));
            }
        }
        if pairs.len() != c_table.len() {
            return Err(Error::theory(format!(
                "{} invariant characters but |Irr(C_K(Q))| = {}",
                pairs.len(),
                c_table.len()
            )));
        }
        for (i, (_, a)) in pairs.iter().enumerate() {
            for (_, b) in pairs.iter().skip(i + 1) {
                if a == b {
                    return Err(Error::theory("correspondence is not injective".to_string()));
                }
            }
        }
        Ok(pairs)
    }

    /// The count identity `|I(G|Q,tau)| = |I(N_G(Q)|Q,tau*)|` for a normal
    /// pi-subgroup `K` with `KQ` normal in `G` and a Q-invariant `tau`.
    pub fn basic_theorem_check(
        &mut self,
        group: &PermGroup,
        pi: &PiConfig,
        k: &PermGroup,
        q: &PermGroup,
        tau: &ClassFunction,
    ) -> Result<BasicRow> {
        if !k.is_normal_in(group) || !pi.is_pi_number(k.order()) {
            return Err(Error::domain("K must be a normal pi-subgroup of G"));
        }
        if !pi.is_pi_prime_number(q.order()) || !q.is_subgroup_of(group) {
            return Err(Error::domain("Q must be a pi'-subgroup of G"));
        }
        let mut gens = k.generators().to_vec();
        gens.extend(q.generators().iter().cloned());
        let kq = crate::group::group_from_gens(group.degree(), gens);
        if kq.order() != k.order() * q.order() || !kq.is_normal_in(group) {
            return Err(Error::domain(
                "KQ must be normal in G with trivial intersection",
            ));
        }
        if !is_invariant_under(tau, q)? {
            return Err(Error::domain("tau is not Q-invariant"));
        }
        let action = CoprimeAction::new(k.clone(), q.clone())?;
        let tau_star = self.glauberman_correspondent(&action, tau)?;

        // left side: members of I(G|Q) over tau
        let k_data = self.pi_partial_data(k, pi)?;
        let k_pi = self.pi_classes(k, pi)?;
        let tau_partial = restrict_to_pi(tau, pi, k_pi)?;
        let tau_index = k_data.index_of(tau_partial.values()).ok_or_else(|| {
            Error::theory("tau is not irreducible as a partial character".to_string())
        })?;
        let lhs = self
            .members_with_vertex_over(group, pi, q, k, tau_index)?
            .len();

        // right side: members of I(N_G(Q)|Q) over tau*
        let n = crate::group::normalizer(group, q)?;
        let c = tau_star.group().clone();
        if !c.is_normal_in(&n) {
            return Err(Error::theory("C_K(Q) is not normal in N_G(Q)".to_string()));
        }
        let c_data = self.pi_partial_data(&c, pi)?;
        let c_pi = self.pi_classes(&c, pi)?;
        let tau_star_partial = restrict_to_pi(&tau_star, pi, c_pi)?;
        let star_index = c_data.index_of(tau_star_partial.values()).ok_or_else(|| {
            Error::theory("tau* is not irreducible as a partial character".to_string())
        })?;
        let rhs = self
            .members_with_vertex_over(&n, pi, q, &c, star_index)?
            .len();

        Ok(BasicRow {
            k_order: k.order() as u64,
            q_order: q.order() as u64,
            tau_degree: tau.degree()?,
            tau_star_degree: tau_star.degree()?,
            lhs,
            rhs,
            ok: lhs == rhs,
        })
    }

    /// All coprime actions `(K, Q)` in `G` with `K` a normal pi-subgroup,
    /// `Q` a pi'-class representative, and `KQ` normal in `G`.
    pub fn coprime_actions(
        &mut self,
        group: &PermGroup,
        pi: &PiConfig,
    ) -> Result<Vec<(PermGroup, PermGroup)>> {
        let normals = self.normal_subgroups(group)?;
        let vd = self.vertex_data(group, pi)?;
        let pi_prime = vd.pi_prime_classes.clone();
        let mut out = Vec::new();
        for k in normals.iter() {
            if !pi.is_pi_number(k.order()) {
                continue;
            }
            for class in pi_prime.classes.iter() {
                let q = class.representative.clone();
                if !is_solvable(&q) {
                    continue;
                }
                let mut gens = k.generators().to_vec();
                gens.extend(q.generators().iter().cloned());
                let kq = crate::group::group_from_gens(group.degree(), gens);
                if kq.order() == k.order() * q.order() && kq.is_normal_in(group) {
                    out.push((k.clone(), q.clone()));
                }
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BasicRow {
    pub k_order: u64,
    pub q_order: u64,
    pub tau_degree: u64,
    pub tau_star_degree: u64,
    pub lhs: usize,
    pub rhs: usize,
    pub ok: bool,
}

/// Degree congruence `theta(1) = +-theta*(1) mod q` for prime-power `|Q|`.
pub fn degree_congruence_holds(
    action: &CoprimeAction,
    theta: &ClassFunction,
    image: &ClassFunction,
) -> Result<bool> {
    let factors = crate::arith::factorize(action.q().order());
    if factors.len() != 1 {
        return Ok(true); // only stated for prime-power Q
    }
    let q = *factors.keys().next().expect("one prime");
    let a = theta.degree()? % q;
    let b = image.degree()? % q;
    Ok(a == b || (a + b).is_multiple_of(q))
}

pub type GlaubermanPairs = Vec<(ClassFunction, ClassFunction)>;

/// Naturality `(theta^n)* = (theta*)^n` for `n` normalizing both `K` and `Q`,
/// checked on the full computed map.
pub fn naturality_holds(pairs: &GlaubermanPairs, n: &crate::perm::Permutation) -> Result<bool> {
    let find = |target: &ClassFunction, pairs: &GlaubermanPairs| -> Option<usize> {
        pairs.iter().position(|(t, _)| t == target)
    };
    for (theta, image) in pairs {
        let moved = theta.conjugate_by(n)?;
        let Some(idx) = find(&moved, pairs) else {
            return Err(Error::theory(
                "conjugate of an invariant character is not invariant".to_string(),
            ));
        };
        let expect = image.conjugate_by(n)?;
        if pairs[idx].1 != expect {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The fixed-point subgroup `C_K(Q)` of an action.
pub fn fixed_points(action: &CoprimeAction) -> Result<PermGroup> {
    centralizer_of_set(action.k(), action.q().generators())
}
