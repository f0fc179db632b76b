//! pi-partial characters: restrictions of ordinary characters to the
//! pi-elements, the irreducible set I_pi(G), induction, constituents over
//! normal subgroups, the Clifford correspondence and quotient transfer.
//!
//! I_pi(G) is computed by a degree-ascending greedy peel over the distinct
//! restrictions: a candidate joins the basis exactly when it is not a
//! nonnegative-integer combination of the members accepted so far (an exact
//! rational solve).  Completeness rests on lift existence in pi-separable
//! groups: every irreducible partial character is itself a restriction, of
//! the same degree, so it is seen before anything it could divide.  The
//! basis-count identity `|I_pi(G)| = #pi-classes` is enforced afterwards and
//! certifies the peel.

use crate::chartab::ClassFunction;
use crate::classes::ConjugacyClassSet;
use crate::cyclotomic::CyclotomicValue;
use crate::error::{Error, Result};
use crate::group::{orbit_stabilizer, PermGroup};
use crate::perm::Permutation;
use crate::pi::PiConfig;
use crate::ratlin::{solve_exact, SolveOutcome};
use crate::workbench::Workbench;
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

/// The pi-classes of a group: indices into its conjugacy class list.
pub struct PiClassData {
    pub pi: PiConfig,
    pub indices: Vec<usize>,
    pub position: HashMap<usize, usize>,
}

impl PiClassData {
    pub fn new(classes: &ConjugacyClassSet, pi: &PiConfig) -> Result<PiClassData> {
        let indices = classes.pi_class_indices(pi);
        if indices.is_empty() || indices[0] != classes.identity_class() {
            return Err(Error::theory(
                "identity class missing from pi-classes".to_string(),
            ));
        }
        // closure under power maps by primes in pi
        for &idx in &indices {
            for &p in pi.primes() {
                let target = classes.power_class(idx, p as i64);
                if !indices.contains(&target) {
                    return Err(Error::theory(
                        "pi-classes are not closed under pi-power maps".to_string(),
                    ));
                }
            }
        }
        let position = indices.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        Ok(PiClassData {
            pi: pi.clone(),
            indices,
            position,
        })
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

#[derive(Clone)]
pub struct PartialCharacter {
    group: PermGroup,
    pi: PiConfig,
    classes: Arc<ConjugacyClassSet>,
    pi_classes: Arc<PiClassData>,
    values: Vec<CyclotomicValue>,
    degree: u64,
    /// Indices into `Irr(G)` of ordinary characters restricting to this.
    lifts: BTreeSet<usize>,
    irreducible: bool,
}

impl PartialCharacter {
    pub fn group(&self) -> &PermGroup {
        &self.group
    }
    pub fn pi(&self) -> &PiConfig {
        &self.pi
    }
    pub fn classes(&self) -> &Arc<ConjugacyClassSet> {
        &self.classes
    }
    pub fn pi_classes(&self) -> &Arc<PiClassData> {
        &self.pi_classes
    }
    pub fn values(&self) -> &[CyclotomicValue] {
        &self.values
    }
    pub fn degree(&self) -> u64 {
        self.degree
    }
    pub fn lifts(&self) -> &BTreeSet<usize> {
        &self.lifts
    }
    pub fn is_irreducible(&self) -> bool {
        self.irreducible
    }

    /// Value at a pi-element of the group.
    pub fn value_at(&self, x: &Permutation) -> Result<&CyclotomicValue> {
        let cls = self.classes.class_of(x)?;
        let pos = self
            .pi_classes
            .position
            .get(&cls)
            .ok_or_else(|| Error::domain("element is not a pi-element"))?;
        Ok(&self.values[*pos])
    }

    /// The conjugate partial character `phi^g` with `phi^g(x) = phi(g x g^-1)`.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<PartialCharacter> {
        let ginv = g.inverse();
        let values: Vec<CyclotomicValue> = self
            .pi_classes
            .indices
            .iter()
            .map(|&cls| {
                let rep = &self.classes.class(cls).representative;
                let moved = rep.conjugate_by(&ginv);
                let c = self.classes.class_of(&moved)?;
                let pos = self.pi_classes.position[&c];
                Ok(self.values[pos].clone())
            })
            .collect::<Result<_>>()?;
        Ok(PartialCharacter {
            values,
            lifts: BTreeSet::new(),
            ..self.clone()
        })
    }

    pub fn same_context(&self, other: &PartialCharacter) -> bool {
        self.group.same_group(&other.group) && self.pi == other.pi
    }
}

impl PartialEq for PartialCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.same_context(other) && self.values == other.values
    }
}
impl Eq for PartialCharacter {}

impl std::fmt::Debug for PartialCharacter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", v)?;
        }
        write!(f, "]^0")
    }
}

/// Restriction of an ordinary character to the pi-elements.
pub fn restrict_to_pi(
    chi: &ClassFunction,
    pi: &PiConfig,
    pi_classes: Arc<PiClassData>,
) -> Result<PartialCharacter> {
    let values: Vec<CyclotomicValue> = pi_classes
        .indices
        .iter()
        .map(|&c| chi.value(c).clone())
        .collect();
    Ok(PartialCharacter {
        group: chi.group().clone(),
        pi: pi.clone(),
        classes: chi.classes().clone(),
        pi_classes,
        degree: chi.degree()?,
        values,
        lifts: BTreeSet::new(),
        irreducible: false,
    })
}

/// `I_pi(G)` with the decomposition matrix of the ordinary restrictions.
pub struct PiPartialData {
    pub group: PermGroup,
    pub pi: PiConfig,
    pub classes: Arc<ConjugacyClassSet>,
    pub pi_classes: Arc<PiClassData>,
    pub irreducibles: Vec<PartialCharacter>,
    /// `decomposition[chi][phi]`: multiplicity of `phi` in `chi^0`.
    pub decomposition: Vec<Vec<u64>>,
}

impl PiPartialData {
    /// Index of a member equal to the given value vector, if any.
    pub fn index_of(&self, values: &[CyclotomicValue]) -> Option<usize> {
        self.irreducibles.iter().position(|m| m.values() == values)
    }

    /// Express a pi-class-function vector over the basis; `None` when it is
    /// not a nonnegative integer combination.
    pub fn decompose(&self, values: &[CyclotomicValue]) -> Result<Option<Vec<u64>>> {
        decompose_over(
            &self
                .irreducibles
                .iter()
                .map(|m| m.values().to_vec())
                .collect::<Vec<_>>(),
            values,
        )
    }
}

fn flatten(
    vectors: &[Vec<CyclotomicValue>],
    rhs: &[CyclotomicValue],
) -> Result<(Vec<Vec<BigRational>>, Vec<BigRational>)> {
    let mut e = 1u64;
    for v in vectors.iter().flatten().chain(rhs.iter()) {
        e = crate::arith::lcm_u64(e, v.conductor());
    }
    let flat = |vals: &[CyclotomicValue]| -> Result<Vec<BigRational>> {
        let mut out = Vec::new();
        for v in vals {
            out.extend(v.coefficients_at(e)?);
        }
        Ok(out)
    };
    let cols = vectors
        .iter()
        .map(|v| flat(v))
        .collect::<Result<Vec<_>>>()?;
    let b = flat(rhs)?;
    Ok((cols, b))
}

/// Solve for nonnegative integer coordinates of `rhs` over `basis`.
pub fn decompose_over(
    basis: &[Vec<CyclotomicValue>],
    rhs: &[CyclotomicValue],
) -> Result<Option<Vec<u64>>> {
    if basis.is_empty() {
        return Ok(if rhs.iter().all(|v| v.is_zero()) {
            Some(vec![])
        } else {
            None
        });
    }
    let (cols, b) = flatten(basis, rhs)?;
    match solve_exact(&cols, &b) {
        SolveOutcome::Inconsistent => Ok(None),
        SolveOutcome::Underdetermined => Err(Error::theory(
            "pi-partial basis is linearly dependent".to_string(),
        )),
        SolveOutcome::Unique(x) => {
            let mut out = Vec::with_capacity(x.len());
            for v in x {
                if !v.is_integer() || v < BigRational::zero() {
                    return Ok(None);
                }
                out.push(u64::try_from(v.to_integer()).expect("small multiplicity"));
            }
            Ok(Some(out))
        }
    }
}

impl Workbench {
    pub fn pi_classes(&mut self, group: &PermGroup, pi: &PiConfig) -> Result<Arc<PiClassData>> {
        let classes = self.classes(group)?;
        Ok(Arc::new(PiClassData::new(&classes, pi)?))
    }

    /// `I_pi(G)` by the degree-ascending greedy peel; refuses non-separable
    /// groups, for which completeness is unproven.
    pub fn pi_partial_data(
        &mut self,
        group: &PermGroup,
        pi: &PiConfig,
    ) -> Result<Arc<PiPartialData>> {
        let key = (self.key_of(group)?, pi.clone());
        if let Some(hit) = self.partial_cache.get(&key) {
            return Ok(hit.clone());
        }
        if !self.is_pi_separable(group, pi)? {
            return Err(Error::domain(format!(
                "group is not pi-separable for pi = {}; I_pi is not computed",
                pi
            )));
        }
        let classes = self.classes(group)?;
        let pi_classes = Arc::new(PiClassData::new(&classes, pi)?);
        let table = self.table(group)?;

        // distinct restrictions with their lift sets
        let mut seen: BTreeMap<Vec<CyclotomicValue>, BTreeSet<usize>> = BTreeMap::new();
        for (i, chi) in table.irreducibles().iter().enumerate() {
            let vals: Vec<CyclotomicValue> = pi_classes
                .indices
                .iter()
                .map(|&c| chi.value(c).clone())
                .collect();
            seen.entry(vals).or_default().insert(i);
        }
        let mut candidates: Vec<(u64, Vec<CyclotomicValue>, BTreeSet<usize>)> = seen
            .into_iter()
            .map(|(vals, lifts)| {
                let deg = vals[0]
                    .as_rational_integer()
                    .and_then(|d| u64::try_from(d).ok())
                    .ok_or_else(|| {
                        Error::theory("restriction degree is not a positive integer".to_string())
                    })?;
                Ok((deg, vals, lifts))
            })
            .collect::<Result<_>>()?;
        candidates.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));

        let mut accepted: Vec<PartialCharacter> = Vec::new();
        let mut accepted_vals: Vec<Vec<CyclotomicValue>> = Vec::new();
        for (deg, vals, lifts) in candidates {
            let reducible = decompose_over(&accepted_vals, &vals)?.is_some();
            if reducible {
                continue;
            }
            accepted.push(PartialCharacter {
                group: group.clone(),
                pi: pi.clone(),
                classes: classes.clone(),
                pi_classes: pi_classes.clone(),
                values: vals.clone(),
                degree: deg,
                lifts,
                irreducible: true,
            });
            accepted_vals.push(vals);
        }

        if accepted.len() != pi_classes.len() {
            return Err(Error::theory(format!(
                "|I_pi(G)| = {} but there are {} pi-classes",
                accepted.len(),
                pi_classes.len()
            )));
        }
        // every restriction decomposes with nonnegative integers
        let mut decomposition = Vec::with_capacity(table.len());
        for chi in table.irreducibles() {
            let vals: Vec<CyclotomicValue> = pi_classes
                .indices
                .iter()
                .map(|&c| chi.value(c).clone())
                .collect();
            let coords = decompose_over(&accepted_vals, &vals)?.ok_or_else(|| {
                Error::theory("a restriction does not decompose over I_pi".to_string())
            })?;
            decomposition.push(coords);
        }

        let data = Arc::new(PiPartialData {
            group: group.clone(),
            pi: pi.clone(),
            classes,
            pi_classes,
            irreducibles: accepted,
            decomposition,
        });
        self.partial_cache.insert(key, data.clone());
        Ok(data)
    }

    /// Induction of a partial character along `U <= G`, by the usual formula
    /// applied to pi-elements.
    pub fn induce_partial(
        &mut self,
        theta: &PartialCharacter,
        group: &PermGroup,
    ) -> Result<PartialCharacter> {
        let sub = theta.group().clone();
        if !sub.is_subgroup_of(group) {
            return Err(Error::domain("induction source is not a subgroup"));
        }
        let classes = self.classes(group)?;
        let pi_classes = self.pi_classes(group, &theta.pi)?;
        let elements = group.elements()?;
        let inv_u = BigRational::from_integer(num_bigint::BigInt::from(sub.order() as i64)).recip();
        let values: Vec<CyclotomicValue> = pi_classes
            .indices
            .iter()
            .map(|&c| {
                let g = &classes.class(c).representative;
                let mut acc = CyclotomicValue::zero();
                for x in elements.iter() {
                    let moved = g.conjugate_by(x);
                    if sub.contains(&moved) {
                        acc = acc.add(theta.value_at(&moved)?);
                    }
                }
                Ok(acc.scale(&inv_u))
            })
            .collect::<Result<_>>()?;
        let degree = (group.order() / sub.order()) as u64 * theta.degree();
        let induced = PartialCharacter {
            group: group.clone(),
            pi: theta.pi.clone(),
            classes,
            pi_classes,
            values,
            degree,
            lifts: BTreeSet::new(),
            irreducible: false,
        };
        debug_assert_eq!(
            induced.values[0].as_rational_integer(),
            Some(num_bigint::BigInt::from(degree))
        );
        Ok(induced)
    }

    /// Constituents of `phi` restricted to a normal subgroup `K`, as indices
    /// into `I_pi(K)` with multiplicities.
    pub fn constituents_over_normal(
        &mut self,
        phi: &PartialCharacter,
        k: &PermGroup,
    ) -> Result<Vec<(usize, u64)>> {
        if !k.is_normal_in(phi.group()) {
            return Err(Error::domain("constituent subgroup is not normal"));
        }
        let k_data = self.pi_partial_data(k, &phi.pi)?;
        // restriction of values along class fusion
        let restricted: Vec<CyclotomicValue> = k_data
            .pi_classes
            .indices
            .iter()
            .map(|&c| {
                let rep = &k_data.classes.class(c).representative;
                Ok(phi.value_at(rep)?.clone())
            })
            .collect::<Result<_>>()?;
        let coords = k_data.decompose(&restricted)?.ok_or_else(|| {
            Error::theory("restriction to a normal subgroup fails to decompose".to_string())
        })?;
        let out: Vec<(usize, u64)> = coords
            .into_iter()
            .enumerate()
            .filter(|(_, m)| *m > 0)
            .collect();
        if out.is_empty() {
            return Err(Error::theory("empty constituent decomposition".to_string()));
        }
        Ok(out)
    }

    /// The stabilizer `G_theta` of `theta in I_pi(K)` under conjugation.
    pub fn partial_stabilizer(
        &mut self,
        group: &PermGroup,
        theta: &PartialCharacter,
    ) -> Result<PermGroup> {
        let theta_classes = theta.classes.clone();
        let theta_pi = theta.pi_classes.clone();
        let start: Vec<CyclotomicValue> = theta.values.clone();
        let act = |vals: &Vec<CyclotomicValue>, s: &Permutation| -> Vec<CyclotomicValue> {
            let sinv = s.inverse();
            theta_pi
                .indices
                .iter()
                .map(|&cls| {
                    let rep = &theta_classes.class(cls).representative;
                    let moved = rep.conjugate_by(&sinv);
                    let c = theta_classes
                        .class_of(&moved)
                        .expect("closed under conjugation");
                    vals[theta_pi.position[&c]].clone()
                })
                .collect()
        };
        let os = orbit_stabilizer(group, start, act);
        debug_assert_eq!(
            os.orbit.len() as u128 * os.stabilizer.order(),
            group.order()
        );
        Ok(os.stabilizer)
    }

    /// The Clifford correspondent: the unique member of `I_pi(G_theta)` over
    /// `theta` inducing `phi`.
    pub fn clifford_correspondent(
        &mut self,
        phi: &PartialCharacter,
        theta: &PartialCharacter,
        k: &PermGroup,
    ) -> Result<PartialCharacter> {
        let group = phi.group().clone();
        let k_data = self.pi_partial_data(k, &phi.pi)?;
        let theta_idx = k_data
            .index_of(theta.values())
            .ok_or_else(|| Error::domain("theta is not an irreducible partial character of K"))?;
        let under = self.constituents_over_normal(phi, k)?;
        if !under.iter().any(|&(i, _)| i == theta_idx) {
            return Err(Error::domain("theta does not lie under phi"));
        }
        let stab = self.partial_stabilizer(&group, theta)?;
        if !k.is_subgroup_of(&stab) {
            return Err(Error::theory(
                "K does not stabilize its own character".to_string(),
            ));
        }
        let stab_data = self.pi_partial_data(&stab, &phi.pi)?;
        let mut found: Option<PartialCharacter> = None;
        for alpha in stab_data.irreducibles.clone() {
            // over theta?
            let consts = self.constituents_over_normal(&alpha, k)?;
            if !consts.iter().any(|&(i, _)| i == theta_idx) {
                continue;
            }
            let induced = self.induce_partial(&alpha, &group)?;
            if induced.values() == phi.values() {
                if found.is_some() {
                    return Err(Error::theory(
                        "two Clifford correspondents induce the same character".to_string(),
                    ));
                }
                found = Some(alpha);
            }
        }
        found.ok_or_else(|| Error::theory("no Clifford correspondent found".to_string()))
    }

    /// Transfer along `G -> G/N` for a normal pi'-subgroup `N`: the value
    /// bijection between pi-elements upstairs and downstairs.
    pub fn quotient_transfer(
        &mut self,
        phi: &PartialCharacter,
        n: &PermGroup,
    ) -> Result<PartialCharacter> {
        let pi = phi.pi.clone();
        if !pi.is_pi_prime_number(n.order()) {
            return Err(Error::domain("transfer kernel is not a pi'-group"));
        }
        let group = phi.group().clone();
        let q = self.quotient(&group, n)?;
        let qg = q.group().clone();
        let q_classes = self.classes(&qg)?;
        let q_pi = self.pi_classes(&qg, &pi)?;
        let values: Vec<CyclotomicValue> = q_pi
            .indices
            .iter()
            .map(|&c| {
                let ybar = &q_classes.class(c).representative;
                let g = q.section(ybar)?;
                // pi-part of the section is a pi-element mapping onto ybar
                let m = g.order();
                let mp = pi.pi_part(m as u128) as u64;
                let mpp = pi.pi_prime_part(m as u128) as u64;
                let x = if mp == 1 {
                    group.identity()
                } else {
                    let inv = crate::arith::mod_inverse(mpp % mp, mp)
                        .ok_or_else(|| Error::theory("coprime parts of an order".to_string()))?;
                    g.pow((mpp as i64) * (inv as i64))
                };
                if q.project(&x)? != *ybar {
                    return Err(Error::theory(
                        "pi-part of a section does not project back".to_string(),
                    ));
                }
                Ok(phi.value_at(&x)?.clone())
            })
            .collect::<Result<_>>()?;
        Ok(PartialCharacter {
            group: qg,
            pi,
            classes: q_classes,
            pi_classes: q_pi,
            values,
            degree: phi.degree,
            lifts: BTreeSet::new(),
            irreducible: phi.irreducible,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(deg: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(deg, s).unwrap()
    }

    fn s3() -> PermGroup {
        PermGroup::new(3, vec![perm(3, "(1,2)"), perm(3, "(1,2,3)")]).unwrap()
    }

    fn c3() -> PermGroup {
        PermGroup::new(3, vec![perm(3, "(1,2,3)")]).unwrap()
    }

    fn pi(ps: &[u64]) -> PiConfig {
        PiConfig::from_primes(ps.iter().copied()).unwrap()
    }

    #[test]
    fn s3_ipi_for_pi_3() {
        let mut wb = Workbench::new();
        let data = wb.pi_partial_data(&s3(), &pi(&[3])).unwrap();
        assert_eq!(data.irreducibles.len(), 2);
        let degrees: Vec<u64> = data.irreducibles.iter().map(|m| m.degree()).collect();
        assert_eq!(degrees, vec![1, 2]);
        // [1,1] has two lifts (trivial and sign), [2,-1] has one
        assert_eq!(data.irreducibles[0].lifts().len(), 2);
        assert_eq!(data.irreducibles[1].lifts().len(), 1);
        // chi_2 values on classes 1, (123): [2, -1]
        let v = data.irreducibles[1].values();
        assert_eq!(v[0], CyclotomicValue::from_integer(2));
        assert_eq!(v[1], CyclotomicValue::from_integer(-1));
    }

    #[test]
    fn s3_ipi_for_pi_2() {
        let mut wb = Workbench::new();
        let data = wb.pi_partial_data(&s3(), &pi(&[2])).unwrap();
        assert_eq!(data.irreducibles.len(), 2);
        // restrictions: trivial [1,1], sign [1,-1], chi2 [2,0] = sum of both
        let degrees: Vec<u64> = data.irreducibles.iter().map(|m| m.degree()).collect();
        assert_eq!(degrees, vec![1, 1]);
        // the degree-2 restriction decomposes as the sum
        let chi2_row = data
            .decomposition
            .iter()
            .find(|row| row.iter().sum::<u64>() == 2)
            .unwrap();
        assert_eq!(chi2_row, &vec![1, 1]);
    }

    #[test]
    fn full_pi_recovers_irr() {
        let mut wb = Workbench::new();
        let data = wb.pi_partial_data(&s3(), &pi(&[2, 3])).unwrap();
        assert_eq!(data.irreducibles.len(), 3);
        // decomposition matrix is the identity
        for (i, row) in data.decomposition.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                assert_eq!(
                    m,
                    if data.irreducibles[j].lifts().contains(&i) {
                        1
                    } else {
                        0
                    }
                );
            }
        }
    }

    #[test]
    fn refuses_non_separable() {
        let mut wb = Workbench::new();
        let a5 = PermGroup::new(5, vec![perm(5, "(1,2,3,4,5)"), perm(5, "(3,4,5)")]).unwrap();
        assert!(matches!(
            wb.pi_partial_data(&a5, &pi(&[2])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn induction_from_c3_to_s3() {
        let mut wb = Workbench::new();
        let g = s3();
        let k = c3();
        let p3 = pi(&[3]);
        let k_data = wb.pi_partial_data(&k, &p3).unwrap();
        // a nontrivial linear of C3 induces to [2, -1]
        let theta = k_data.irreducibles[1].clone();
        assert_eq!(theta.degree(), 1);
        let induced = wb.induce_partial(&theta, &g).unwrap();
        assert_eq!(induced.degree(), 2);
        assert_eq!(induced.values()[1], CyclotomicValue::from_integer(-1));
        // induced degree formula
        let trivial = k_data.irreducibles[0].clone();
        let ind_t = wb.induce_partial(&trivial, &g).unwrap();
        assert_eq!(ind_t.degree(), 2 * trivial.degree());
    }

    #[test]
    fn trivial_subgroup_induces_regular_partial() {
        let mut wb = Workbench::new();
        let g = s3();
        let p3 = pi(&[3]);
        let triv = PermGroup::trivial(3);
        let theta = wb.pi_partial_data(&triv, &p3).unwrap().irreducibles[0].clone();
        let induced = wb.induce_partial(&theta, &g).unwrap();
        // |G| at the identity, zero on the other pi-classes
        assert_eq!(induced.values()[0], CyclotomicValue::from_integer(6));
        assert!(induced.values()[1].is_zero());
        // multiplicity of phi is the weighted column sum of the
        // decomposition matrix: sum over chi of chi(1) d_{chi,phi}
        let data = wb.pi_partial_data(&g, &p3).unwrap();
        let table = wb.table(&g).unwrap();
        let coords = data.decompose(induced.values()).unwrap().unwrap();
        for (j, &m) in coords.iter().enumerate() {
            let expect: u64 = table
                .irreducibles()
                .iter()
                .zip(data.decomposition.iter())
                .map(|(chi, row)| chi.degree().unwrap() * row[j])
                .sum();
            assert_eq!(m, expect);
        }
    }

    #[test]
    fn constituents_and_clifford_s3() {
        let mut wb = Workbench::new();
        let g = s3();
        let k = c3();
        let p3 = pi(&[3]);
        let g_data = wb.pi_partial_data(&g, &p3).unwrap();
        let phi = g_data.irreducibles[1].clone(); // [2, -1]
        let consts = wb.constituents_over_normal(&phi, &k).unwrap();
        // both nontrivial members of Irr(C3), multiplicity one each
        assert_eq!(consts.len(), 2);
        assert!(consts.iter().all(|&(_, m)| m == 1));
        assert!(consts.iter().all(|&(i, _)| i != 0));
        // Clifford correspondent over one of them: the stabilizer is C3 and
        // the correspondent is theta itself
        let k_data = wb.pi_partial_data(&k, &p3).unwrap();
        let theta = k_data.irreducibles[consts[0].0].clone();
        let stab = wb.partial_stabilizer(&g, &theta).unwrap();
        assert_eq!(stab.order(), 3);
        let alpha = wb.clifford_correspondent(&phi, &theta, &k).unwrap();
        assert_eq!(alpha.values(), theta.values());
        // invariant theta: G_theta = G and the correspondent is phi itself
        let trivial_k = k_data.irreducibles[0].clone();
        let stab_t = wb.partial_stabilizer(&g, &trivial_k).unwrap();
        assert_eq!(stab_t.order(), 6);
        let phi1 = g_data.irreducibles[0].clone();
        let alpha1 = wb.clifford_correspondent(&phi1, &trivial_k, &k).unwrap();
        assert_eq!(alpha1.values(), phi1.values());
    }

    #[test]
    fn quotient_transfer_c6() {
        let mut wb = Workbench::new();
        let c6 = PermGroup::new(5, vec![perm(5, "(1,2)(3,4,5)")]).unwrap();
        let c2 = PermGroup::new(5, vec![perm(5, "(1,2)")]).unwrap();
        let p3 = pi(&[3]);
        let data = wb.pi_partial_data(&c6, &p3).unwrap();
        assert_eq!(data.irreducibles.len(), 3);
        let mut images = Vec::new();
        for phi in data.irreducibles.clone() {
            let bar = wb.quotient_transfer(&phi, &c2).unwrap();
            assert_eq!(bar.degree(), phi.degree());
            images.push(bar);
        }
        // bijection onto I_pi(C3): pairwise distinct, all members
        let qg = wb.quotient(&c6, &c2).unwrap().group().clone();
        let q_data = wb.pi_partial_data(&qg, &p3).unwrap();
        for img in &images {
            assert!(q_data.index_of(img.values()).is_some());
        }
        let idxs: BTreeSet<usize> = images
            .iter()
            .map(|i| q_data.index_of(i.values()).unwrap())
            .collect();
        assert_eq!(idxs.len(), 3);
    }

    #[test]
    fn conjugation_action_properties() {
        let mut wb = Workbench::new();
        let k = c3();
        let p3 = pi(&[3]);
        let k_data = wb.pi_partial_data(&k, &p3).unwrap();
        let theta = k_data.irreducibles[1].clone();
        let g = perm(3, "(1,2)");
        let h = perm(3, "(1,3)");
        let a = theta.conjugate_by(&g).unwrap().conjugate_by(&h).unwrap();
        let b = theta.conjugate_by(&g.compose(&h)).unwrap();
        assert_eq!(a.values(), b.values());
        // inversion swaps the two nontrivial linears
        let swapped = theta.conjugate_by(&g).unwrap();
        assert_eq!(swapped.values(), k_data.irreducibles[2].values());
    }
}
