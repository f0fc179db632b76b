//! Vertices of irreducible pi-partial characters, the sets `I(G|Q)`,
//! pi'-weights, and the counting comparisons.
//!
//! Vertex search scans subgroup classes in decreasing order: every
//! `theta in I_pi(U)` of pi-number degree whose induction to `G` is
//! irreducible witnesses a vertex, namely a Hall pi'-subgroup of `U`.  The
//! first witness fixes the vertex class; every further witness is checked to
//! give a conjugate vertex, the vertex order formula
//! `|Q| * phi(1)_{pi'} = |G|_{pi'}` is asserted for each witness, and the
//! pi'-core is asserted to lie inside every vertex.  A counting theorem
//! failing here is a bug, never a counterexample.

use crate::chartab::ClassFunction;
use crate::error::{Error, Result};
use crate::group::{are_conjugate_subgroups, group_from_gens, intersection, normalizer, PermGroup};
use crate::pi::{PiConfig, PiSide};
use crate::pi_partial::{restrict_to_pi, PartialCharacter};
use crate::subgroups::SubgroupClassList;
use crate::workbench::Workbench;
use serde::Serialize;
use std::collections::BTreeSet;
use std::sync::Arc;

pub struct VertexAssignment {
    pub phi_index: usize,
    pub vertex: PermGroup,
    /// Index into the pi'-subgroup class list.
    pub vertex_class: usize,
    pub witness_subgroup: PermGroup,
    pub witness_theta: PartialCharacter,
    pub witness_count: usize,
}

pub struct VertexData {
    pub pi_prime_classes: Arc<SubgroupClassList>,
    pub assignments: Vec<VertexAssignment>,
    /// `members_by_class[c]`: indices of `I_pi(G)` members with vertex in
    /// class `c`, i.e. the sets `I(G|Q)`.
    pub members_by_class: Vec<Vec<usize>>,
}

impl VertexData {
    /// The class index of a pi'-subgroup `q` within this data, if conjugate
    /// to an enumerated representative.
    pub fn class_of_subgroup(&self, group: &PermGroup, q: &PermGroup) -> Result<Option<usize>> {
        for (i, c) in self.pi_prime_classes.classes.iter().enumerate() {
            if c.representative.order() == q.order()
                && are_conjugate_subgroups(group, &c.representative, q)?
            {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }
}

impl Workbench {
    /// Vertex assignments for every member of `I_pi(G)`.
    pub fn vertex_data(&mut self, group: &PermGroup, pi: &PiConfig) -> Result<Arc<VertexData>> {
        let key = (self.key_of(group)?, pi.clone());
        if let Some(hit) = self.vertex_cache.get(&key) {
            return Ok(hit.clone());
        }
        let data = self.pi_partial_data(group, pi)?;
        let all_subs = self.subgroup_classes(group)?;
        let pi_prime_classes = Arc::new(all_subs.pi_prime_filter(pi));
        let core = self.o_core(group, pi, PiSide::PiPrime)?;
        let g_pp = pi.pi_prime_part(group.order());

        struct Witness {
            subgroup: PermGroup,
            theta: PartialCharacter,
            vertex: PermGroup,
        }
        let mut witnesses: Vec<Vec<Witness>> =
            (0..data.irreducibles.len()).map(|_| Vec::new()).collect();
        // subgroup classes in decreasing order
        for class in all_subs.classes.iter().rev() {
            let u = class.representative.clone();
            let u_data = self.pi_partial_data(&u, pi)?;
            let mut hall_u: Option<PermGroup> = None;
            for theta in u_data.irreducibles.clone() {
                if !pi.is_pi_number(theta.degree() as u128) {
                    continue;
                }
                let induced = self.induce_partial(&theta, group)?;
                let Some(phi_index) = data.index_of(induced.values()) else {
                    continue;
                };
                let q = match &hall_u {
                    Some(q) => q.clone(),
                    None => {
                        let q = self.hall_subgroup(&u, pi, PiSide::PiPrime)?;
                        hall_u = Some(q.clone());
                        q
                    }
                };
                let phi = &data.irreducibles[phi_index];
                // vertex order formula
                if q.order() * pi.pi_prime_part(phi.degree() as u128) != g_pp {
                    return Err(Error::theory(format!(
                        "vertex order {} violates |Q| phi(1)_pi' = |G|_pi' for degree {}",
                        q.order(),
                        phi.degree()
                    )));
                }
                // the pi'-core lies in every vertex
                if !core.is_subgroup_of(&q) {
                    return Err(Error::theory(
                        "pi'-core is not contained in a vertex".to_string(),
                    ));
                }
                witnesses[phi_index].push(Witness {
                    subgroup: u.clone(),
                    theta,
                    vertex: q,
                });
            }
        }

        let mut assignments = Vec::with_capacity(witnesses.len());
        for (phi_index, list) in witnesses.into_iter().enumerate() {
            let Some(first) = list.first() else {
                return Err(Error::theory(format!(
                    "no vertex witness for member {} of I_pi",
                    phi_index
                )));
            };
            // all witnesses produce one conjugacy class of vertices
            for other in &list[1..] {
                if !are_conjugate_subgroups(group, &first.vertex, &other.vertex)? {
                    return Err(Error::theory(
                        "witness search produced non-conjugate vertices".to_string(),
                    ));
                }
            }
            let mut vertex_class = None;
            for (i, c) in pi_prime_classes.classes.iter().enumerate() {
                if c.representative.order() == first.vertex.order()
                    && are_conjugate_subgroups(group, &c.representative, &first.vertex)?
                {
                    vertex_class = Some(i);
                    break;
                }
            }
            let vertex_class = vertex_class.ok_or_else(|| {
                Error::theory("vertex not found among pi'-subgroup classes".to_string())
            })?;
            assignments.push(VertexAssignment {
                phi_index,
                vertex: first.vertex.clone(),
                vertex_class,
                witness_subgroup: first.subgroup.clone(),
                witness_theta: first.theta.clone(),
                witness_count: list.len(),
            });
        }
        let mut members_by_class = vec![Vec::new(); pi_prime_classes.classes.len()];
        for a in &assignments {
            members_by_class[a.vertex_class].push(a.phi_index);
        }
        let vd = Arc::new(VertexData {
            pi_prime_classes,
            assignments,
            members_by_class,
        });
        self.vertex_cache.insert(key, vd.clone());
        Ok(vd)
    }

    /// `I(G|Q)` as indices into `I_pi(G)`; empty when `Q` is not conjugate
    /// into the enumerated classes or carries no vertex.
    pub fn partial_chars_with_vertex(
        &mut self,
        group: &PermGroup,
        pi: &PiConfig,
        q: &PermGroup,
    ) -> Result<Vec<usize>> {
        if !pi.is_pi_prime_number(q.order()) {
            return Err(Error::domain("vertex candidate is not a pi'-subgroup"));
        }
        let vd = self.vertex_data(group, pi)?;
        match vd.class_of_subgroup(group, q)? {
            Some(c) => Ok(vd.members_by_class[c].clone()),
            None => Ok(Vec::new()),
        }
    }

    /// The pi'-weights with first component `Q`: pairs `(Q, tau)` with
    /// `tau in dz(N_G(Q)/Q)`.  Returns the defect-zero characters of the
    /// quotient together with their partial restrictions to `N_G(Q)`,
    /// and checks the canonical bijection onto `I(N_G(Q)|Q)`.
    pub fn weights_with_first_component(
        &mut self,
        group: &PermGroup,
        pi: &PiConfig,
        q: &PermGroup,
    ) -> Result<Vec<WeightRecord>> {
        if !pi.is_pi_prime_number(q.order()) {
            return Err(Error::domain("weight component is not a pi'-subgroup"));
        }
        let n = normalizer(group, q)?;
        let quot = self.quotient(&n, q)?;
        let quot_group = quot.group().clone();
        let quot_table = self.table(&quot_group)?;
        let n_classes = self.classes(&n)?;
        let n_pi = self.pi_classes(&n, pi)?;
        let n_vd = self.vertex_data(&n, pi)?;
        let n_data = self.pi_partial_data(&n, pi)?;
        let q_class_in_n = n_vd.class_of_subgroup(&n, q)?.ok_or_else(|| {
            Error::theory("Q missing from its own normalizer's class list".to_string())
        })?;

        let mut records = Vec::new();
        let mut image_indices = BTreeSet::new();
        for (t_idx, tau) in quot_table.irreducibles().iter().enumerate() {
            if !tau.has_pi_prime_defect_zero(pi)? {
                continue;
            }
            // inflate along N -> N/Q and restrict to pi-elements of N
            let inflated_values: Vec<crate::cyclotomic::CyclotomicValue> = n_classes
                .classes()
                .iter()
                .map(|info| {
                    let image = quot.project(&info.representative)?;
                    Ok(tau.value(quot_table.classes().class_of(&image)?).clone())
                })
                .collect::<Result<_>>()?;
            let inflated = ClassFunction::new(n.clone(), n_classes.clone(), inflated_values)?;
            let tau_partial = restrict_to_pi(&inflated, pi, n_pi.clone())?;
            let member = n_data.index_of(tau_partial.values()).ok_or_else(|| {
                Error::theory("defect-zero restriction is not irreducible".to_string())
            })?;
            let assignment = &n_vd.assignments[member];
            if assignment.vertex_class != q_class_in_n {
                return Err(Error::theory(
                    "defect-zero restriction has the wrong vertex".to_string(),
                ));
            }
            if !image_indices.insert(member) {
                return Err(Error::theory("weight map is not injective".to_string()));
            }
            records.push(WeightRecord {
                quotient_character_index: t_idx,
                tau: tau.clone(),
                tau_partial,
                member_of_i_n: member,
            });
        }
        // surjectivity onto I(N|Q)
        let expect: BTreeSet<usize> = n_vd.members_by_class[q_class_in_n]
            .iter()
            .copied()
            .collect();
        if image_indices != expect {
            return Err(Error::theory(
                "weight map is not onto I(N_G(Q)|Q)".to_string(),
            ));
        }
        Ok(records)
    }

    /// Theorem-B hypothesis at `Q`: every pi'-subgroup properly containing
    /// `Q` normalizes it into something strictly larger.
    pub fn theorem_b_hypothesis(
        &mut self,
        group: &PermGroup,
        pi: &PiConfig,
        q: &PermGroup,
    ) -> Result<bool> {
        let vd = self.vertex_data(group, pi)?;
        let pi_prime_classes = vd.pi_prime_classes.clone();
        let n_g_q = normalizer(group, q)?;
        for class in pi_prime_classes.classes.iter() {
            if class.representative.order() <= q.order() {
                continue;
            }
            for x in self.conjugates(group, &class.representative)?.iter() {
                if !q.is_subgroup_of(x) {
                    continue;
                }
                let n_x_q = intersection(x, &n_g_q)?;
                if n_x_q.order() == q.order() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Count `|I(N|Q)|` inside an overgroup `N` containing `Q`.
    pub fn vertex_count_in(
        &mut self,
        ambient: &PermGroup,
        pi: &PiConfig,
        q: &PermGroup,
    ) -> Result<usize> {
        let vd = self.vertex_data(ambient, pi)?;
        match vd.class_of_subgroup(ambient, q)? {
            Some(c) => Ok(vd.members_by_class[c].len()),
            None => Ok(0),
        }
    }

    /// Per-Q comparison rows: Theorem A inequality, Theorem B hypothesis and
    /// equality, and the weight count with its bijection check.
    pub fn per_q_rows(&mut self, group: &PermGroup, pi: &PiConfig) -> Result<Vec<PerQRow>> {
        let vd = self.vertex_data(group, pi)?;
        let pi_prime_classes = vd.pi_prime_classes.clone();
        let mut rows = Vec::new();
        for (c, class) in pi_prime_classes.classes.iter().enumerate() {
            let q = class.representative.clone();
            let n = normalizer(group, &q)?;
            let i_g_q = vd.members_by_class[c].len();
            let i_n_q = self.vertex_count_in(&n, pi, &q)?;
            let weights = self.weights_with_first_component(group, pi, &q)?;
            let thm_b_hyp = self.theorem_b_hypothesis(group, pi, &q)?;
            rows.push(PerQRow {
                q_order: class.representative.order() as u64,
                n_order: n.order() as u64,
                i_g_q,
                i_n_q,
                thm_a_ok: i_g_q <= i_n_q,
                thm_b_hyp,
                thm_b_ok: if thm_b_hyp {
                    Some(i_g_q == i_n_q)
                } else {
                    None
                },
                weight_count: weights.len(),
                weight_bijection_ok: weights.len() == i_n_q,
            });
        }
        // partition check: the I(G|Q) cover I_pi(G)
        let data = self.pi_partial_data(group, pi)?;
        let total: usize = rows.iter().map(|r| r.i_g_q).sum();
        if total != data.irreducibles.len() {
            return Err(Error::theory(format!(
                "vertex classes partition {} of {} members",
                total,
                data.irreducibles.len()
            )));
        }
        Ok(rows)
    }

    /// Corollary-C data at the Hall pi-complement.
    pub fn corollary_c_row(&mut self, group: &PermGroup, pi: &PiConfig) -> Result<CorollaryCRow> {
        let q = self.hall_subgroup(group, pi, PiSide::PiPrime)?;
        let i_g_q = self.partial_chars_with_vertex(group, pi, &q)?.len();
        let n = normalizer(group, &q)?;
        let i_n_q = self.vertex_count_in(&n, pi, &q)?;
        let x_pi = self.pi_special_count(group, pi)?;
        let quot = self.quotient(&n, &q)?;
        let quot_group = quot.group().clone();
        let irr_n_mod_q = self.table(&quot_group)?.len();
        Ok(CorollaryCRow {
            hall_order: q.order() as u64,
            i_g_q,
            i_n_q,
            x_pi,
            irr_n_mod_q,
            count_ok: i_g_q == i_n_q,
            census_ok: x_pi == irr_n_mod_q,
        })
    }

    /// Weight-count comparison: number of weight classes against the number
    /// of pi-classes; an identity when Hall pi-complements are nilpotent.
    pub fn awc_row(&mut self, group: &PermGroup, pi: &PiConfig) -> Result<AwcRow> {
        let hall = self.hall_subgroup(group, pi, PiSide::PiPrime)?;
        let nilpotent = crate::group::is_nilpotent(&hall);
        let vd = self.vertex_data(group, pi)?;
        let pi_prime_classes = vd.pi_prime_classes.clone();
        let mut weight_classes = 0usize;
        for class in pi_prime_classes.classes.iter() {
            let q = class.representative.clone();
            weight_classes += self.weights_with_first_component(group, pi, &q)?.len();
        }
        let pi_class_count = self.pi_classes(group, pi)?.len();
        Ok(AwcRow {
            hall_nilpotent: nilpotent,
            weight_classes,
            pi_class_count,
            ok: if nilpotent {
                Some(weight_classes == pi_class_count)
            } else {
                None
            },
        })
    }

    /// Members of `I(G|Q)` lying over a fixed member of `I_pi(K)`.
    pub fn members_with_vertex_over(
        &mut self,
        group: &PermGroup,
        pi: &PiConfig,
        q: &PermGroup,
        k: &PermGroup,
        theta_index: usize,
    ) -> Result<Vec<usize>> {
        let members = self.partial_chars_with_vertex(group, pi, q)?;
        let data = self.pi_partial_data(group, pi)?;
        let mut out = Vec::new();
        for m in members {
            let phi = data.irreducibles[m].clone();
            let consts = self.constituents_over_normal(&phi, k)?;
            if consts.iter().any(|&(i, _)| i == theta_index) {
                out.push(m);
            }
        }
        Ok(out)
    }

    /// The relative comparison: per pi'-subgroup class `Q`, compare
    /// `|I(G|Q,lambda)|` with `|I(N_G(QZ)|Q,lambda)|` for a G-invariant
    /// `lambda` on a normal pi-subgroup `Z`.
    pub fn relative_rows(
        &mut self,
        group: &PermGroup,
        pi: &PiConfig,
        z: &PermGroup,
        lambda: &ClassFunction,
    ) -> Result<Vec<RelativeRow>> {
        if !z.is_normal_in(group) || !pi.is_pi_number(z.order()) {
            return Err(Error::domain("Z must be a normal pi-subgroup"));
        }
        // lambda must be G-invariant
        let z_classes = self.classes(z)?;
        for g in group.generators() {
            let ginv = g.inverse();
            for info in z_classes.classes() {
                let moved = info.representative.conjugate_by(&ginv);
                if lambda.value(z_classes.class_of(&moved)?)
                    != lambda.value(z_classes.class_of(&info.representative)?)
                {
                    return Err(Error::domain("lambda is not invariant in G"));
                }
            }
        }
        let z_pi = self.pi_classes(z, pi)?;
        let lambda_partial = restrict_to_pi(lambda, pi, z_pi)?;
        let z_data = self.pi_partial_data(z, pi)?;
        let lambda_index = z_data
            .index_of(lambda_partial.values())
            .ok_or_else(|| Error::domain("lambda is not irreducible on Z"))?;

        let vd = self.vertex_data(group, pi)?;
        let pi_prime_classes = vd.pi_prime_classes.clone();
        let mut rows = Vec::new();
        for class in pi_prime_classes.classes.iter() {
            let q = class.representative.clone();
            let lhs = self
                .members_with_vertex_over(group, pi, &q, z, lambda_index)?
                .len();
            // N* = N_G(QZ)
            let mut gens = q.generators().to_vec();
            gens.extend(z.generators().iter().cloned());
            let qz = group_from_gens(group.degree(), gens);
            let n_star = normalizer(group, &qz)?;
            // Z and lambda transport into N* unchanged
            let rhs = self
                .members_with_vertex_over(&n_star, pi, &q, z, lambda_index)?
                .len();
            let hyp = self.theorem_b_hypothesis(group, pi, &q)?;
            rows.push(RelativeRow {
                z_order: z.order() as u64,
                q_order: q.order() as u64,
                lhs,
                rhs,
                a_ok: lhs <= rhs,
                b_hyp: hyp,
                b_ok: if hyp { Some(lhs == rhs) } else { None },
            });
        }
        Ok(rows)
    }
}

/// A pi'-weight record: a defect-zero character of `N_G(Q)/Q` together with
/// its partial restriction and the member of `I(N_G(Q)|Q)` it lands on.
pub struct WeightRecord {
    pub quotient_character_index: usize,
    pub tau: ClassFunction,
    pub tau_partial: PartialCharacter,
    pub member_of_i_n: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct PerQRow {
    #[serde(rename = "Q_order")]
    pub q_order: u64,
    #[serde(rename = "N_order")]
    pub n_order: u64,
    #[serde(rename = "I_G_Q")]
    pub i_g_q: usize,
    #[serde(rename = "I_N_Q")]
    pub i_n_q: usize,
    #[serde(rename = "thmA_ok")]
    pub thm_a_ok: bool,
    #[serde(rename = "thmB_hyp")]
    pub thm_b_hyp: bool,
    #[serde(rename = "thmB_ok")]
    pub thm_b_ok: Option<bool>,
    pub weight_count: usize,
    pub weight_bijection_ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorollaryCRow {
    pub hall_order: u64,
    #[serde(rename = "I_G_Q")]
    pub i_g_q: usize,
    #[serde(rename = "I_N_Q")]
    pub i_n_q: usize,
    pub x_pi: usize,
    pub irr_n_mod_q: usize,
    pub count_ok: bool,
    pub census_ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AwcRow {
    pub hall_nilpotent: bool,
    pub weight_classes: usize,
    pub pi_class_count: usize,
    pub ok: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelativeRow {
    pub z_order: u64,
    pub q_order: u64,
    pub lhs: usize,
    pub rhs: usize,
    pub a_ok: bool,
    pub b_hyp: bool,
    pub b_ok: Option<bool>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn perm(deg: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(deg, s).unwrap()
    }

    fn s3() -> PermGroup {
        PermGroup::new(3, vec![perm(3, "(1,2)"), perm(3, "(1,2,3)")]).unwrap()
    }

    fn s4() -> PermGroup {
        PermGroup::new(4, vec![perm(4, "(1,2,3,4)"), perm(4, "(1,2)")]).unwrap()
    }

    fn pi(ps: &[u64]) -> PiConfig {
        PiConfig::from_primes(ps.iter().copied()).unwrap()
    }

    #[test]
    fn s3_vertices_for_pi_3() {
        let mut wb = Workbench::new();
        let g = s3();
        let p3 = pi(&[3]);
        let vd = wb.vertex_data(&g, &p3).unwrap();
        // two pi'-classes: 1 and C2
        assert_eq!(vd.pi_prime_classes.classes.len(), 2);
        // [1,1] has vertex C2 (Hall pi'), [2,-1] has trivial vertex
        let data = wb.pi_partial_data(&g, &p3).unwrap();
        for a in &vd.assignments {
            let deg = data.irreducibles[a.phi_index].degree();
            if deg == 1 {
                assert_eq!(a.vertex.order(), 2);
            } else {
                assert_eq!(a.vertex.order(), 1);
                assert_eq!(a.witness_subgroup.order(), 3);
            }
        }
    }

    #[test]
    fn s3_per_q_rows_match_hand_computation() {
        let mut wb = Workbench::new();
        let rows = wb.per_q_rows(&s3(), &pi(&[3])).unwrap();
        assert_eq!(rows.len(), 2);
        for row in &rows {
            assert_eq!((row.i_g_q, row.i_n_q), (1, 1));
            assert!(row.thm_a_ok);
            assert!(row.thm_b_hyp);
            assert_eq!(row.thm_b_ok, Some(true));
            assert!(row.weight_bijection_ok);
        }
    }

    #[test]
    fn s3_weights_for_pi_3() {
        let mut wb = Workbench::new();
        let g = s3();
        let p3 = pi(&[3]);
        // Q = <(12)>: N/Q trivial, one weight
        let c2 = PermGroup::new(3, vec![perm(3, "(1,2)")]).unwrap();
        let w = wb.weights_with_first_component(&g, &p3, &c2).unwrap();
        assert_eq!(w.len(), 1);
        // Q = 1: dz(S3) = {degree 2}, one weight
        let triv = PermGroup::trivial(3);
        let w0 = wb.weights_with_first_component(&g, &p3, &triv).unwrap();
        assert_eq!(w0.len(), 1);
        assert_eq!(w0[0].tau.degree().unwrap(), 2);
    }

    #[test]
    fn s4_rows_for_pi_2() {
        let mut wb = Workbench::new();
        let rows = wb.per_q_rows(&s4(), &pi(&[2])).unwrap();
        // pi'-classes: 1 and C3
        assert_eq!(rows.len(), 2);
        for row in &rows {
            assert!(row.thm_a_ok);
            if let Some(ok) = row.thm_b_ok {
                assert!(ok);
            }
            assert!(row.weight_bijection_ok);
        }
        let total: usize = rows.iter().map(|r| r.i_g_q).sum();
        let data = wb.pi_partial_data(&s4(), &pi(&[2])).unwrap();
        assert_eq!(total, data.irreducibles.len());
    }

    #[test]
    fn corollary_c_s4_pi2() {
        let mut wb = Workbench::new();
        let row = wb.corollary_c_row(&s4(), &pi(&[2])).unwrap();
        assert_eq!(row.hall_order, 3);
        assert_eq!(row.x_pi, 2);
        assert_eq!(row.irr_n_mod_q, 2);
        assert!(row.count_ok && row.census_ok);
    }

    #[test]
    fn corollary_c_s3_pi3() {
        let mut wb = Workbench::new();
        let row = wb.corollary_c_row(&s3(), &pi(&[3])).unwrap();
        // only the trivial character is 3-special; N_{S3}(C2)/C2 is trivial
        assert_eq!(row.x_pi, 1);
        assert_eq!(row.irr_n_mod_q, 1);
        assert!(row.count_ok && row.census_ok);
    }

    #[test]
    fn awc_counts() {
        let mut wb = Workbench::new();
        let row = wb.awc_row(&s3(), &pi(&[3])).unwrap();
        assert!(row.hall_nilpotent);
        assert_eq!(row.weight_classes, 2);
        assert_eq!(row.pi_class_count, 2);
        assert_eq!(row.ok, Some(true));
        let row4 = wb.awc_row(&s4(), &pi(&[2])).unwrap();
        assert!(row4.hall_nilpotent);
        assert_eq!(row4.weight_classes, 4);
        assert_eq!(row4.pi_class_count, 4);
        assert_eq!(row4.ok, Some(true));
    }

    #[test]
    fn theorem_b_hypothesis_failure_case() {
        // G = S3 with pi empty: every subgroup is a pi'-subgroup; for
        // Q = <(12)> and X = S3 we have N_X(Q) = Q, so the hypothesis fails
        let mut wb = Workbench::new();
        let g = s3();
        let q = PermGroup::new(3, vec![perm(3, "(1,2)")]).unwrap();
        assert!(!wb.theorem_b_hypothesis(&g, &PiConfig::empty(), &q).unwrap());
        // trivial Q always satisfies it
        let triv = PermGroup::trivial(3);
        assert!(wb
            .theorem_b_hypothesis(&g, &PiConfig::empty(), &triv)
            .unwrap());
        // a Hall pi'-subgroup satisfies it vacuously
        let c3 = PermGroup::new(3, vec![perm(3, "(1,2,3)")]).unwrap();
        assert!(wb.theorem_b_hypothesis(&g, &pi(&[2]), &c3).unwrap());
    }

    #[test]
    fn empty_i_g_q_for_bad_q() {
        // pi = {2}: O_{pi'}(C6) = C3 must lie in every vertex, so Q = 1
        // carries nothing
        let mut wb = Workbench::new();
        let c6 = PermGroup::new(5, vec![perm(5, "(1,2)(3,4,5)")]).unwrap();
        let p2 = pi(&[2]);
        let triv = PermGroup::trivial(5);
        let members = wb.partial_chars_with_vertex(&c6, &p2, &triv).unwrap();
        assert!(members.is_empty());
    }

    #[test]
    fn relative_rows_reduce_to_thm_a_for_trivial_z() {
        let mut wb = Workbench::new();
        let g = s3();
        let p3 = pi(&[3]);
        let z = PermGroup::trivial(3);
        let z_table = wb.table(&z).unwrap();
        let lambda = z_table.irreducibles()[0].clone();
        let rel = wb.relative_rows(&g, &p3, &z, &lambda).unwrap();
        let rows = wb.per_q_rows(&g, &p3).unwrap();
        assert_eq!(rel.len(), rows.len());
        for (r, row) in rel.iter().zip(rows.iter()) {
            assert_eq!(r.lhs, row.i_g_q);
            assert_eq!(r.rhs, row.i_n_q);
            assert!(r.a_ok);
        }
    }
}
