//! pi-cores, pi-separability, and Hall subgroups.
//!
//! `O_pi(G)` is assembled from the normal closures of single classes: an
//! element lies in the pi-core exactly when the normal closure of its class
//! is a pi-group.  pi-separability is decided by the ascending series of
//! alternating pi'- and pi-cores reaching `G`.
//!
//! Hall subgroups are built by recursion over a minimal normal subgroup `M`
//! (necessarily a pi- or pi'-group when `G` is pi-separable).  The terminal
//! case is a normal abelian Hall subgroup needing a complement, which the
//! classical coprime averaging argument constructs explicitly; a nonabelian
//! terminal case falls back to subgroup enumeration.

use crate::classes::conjugacy_classes;
use crate::error::{Error, Result};
use crate::group::{group_from_gens, intersection, normal_closure, PermGroup};
use crate::perm::Permutation;
use crate::pi::{PiConfig, PiSide};
use crate::quotient::QuotientData;
use crate::subgroups::{minimal_normal_subgroups, subgroups_up_to_conjugacy};

fn other(side: PiSide) -> PiSide {
    match side {
        PiSide::Pi => PiSide::PiPrime,
        PiSide::PiPrime => PiSide::Pi,
    }
}

/// Largest normal subgroup of `group` whose order is a number of `side`.
pub fn o_core(group: &PermGroup, pi: &PiConfig, side: PiSide) -> Result<PermGroup> {
    let classes = conjugacy_classes(group, 0)?;
    let mut gens: Vec<Permutation> = Vec::new();
    for info in classes.classes() {
        if !pi.is_number_of(info.element_order as u128, side) {
            continue;
        }
        let closure = normal_closure(group, std::slice::from_ref(&info.representative));
        if pi.is_number_of(closure.order(), side) {
            gens.extend(closure.generators().iter().cloned());
        }
    }
    let core = group_from_gens(group.degree(), gens);
    if !core.is_normal_in(group) || !pi.is_number_of(core.order(), side) {
        return Err(Error::theory(
            "core is not a normal group of the right kind",
        ));
    }
    Ok(core)
}

/// The ascending series `1 <= O_{pi'} <= O_{pi',pi} <= ...` terminates at `G`
/// exactly when `G` is pi-separable.
pub fn is_pi_separable(group: &PermGroup, pi: &PiConfig) -> Result<bool> {
    let mut current = PermGroup::trivial(group.degree());
    let mut side = PiSide::PiPrime;
    let mut stalled = 0;
    while current.order() < group.order() {
        let q = QuotientData::new(group, &current)?;
        let core = o_core(q.group(), pi, side)?;
        if core.is_trivial() {
            stalled += 1;
            if stalled == 2 {
                return Ok(false);
            }
        } else {
            stalled = 0;
            current = q.preimage_of_subgroup(&core)?;
        }
        side = other(side);
    }
    Ok(true)
}

/// Exponent of a group: lcm of element orders.
fn exponent_of(group: &PermGroup) -> Result<u64> {
    let mut e = 1u64;
    for x in group.elements()?.iter() {
        e = crate::arith::lcm_u64(e, x.order());
    }
    Ok(e)
}

/// Complement to an abelian normal Hall subgroup `m` of `group`, by the
/// coprime averaging construction.
fn abelian_complement(group: &PermGroup, m: &PermGroup) -> Result<PermGroup> {
    let q = QuotientData::new(group, m)?;
    let quotient = q.group().clone();
    let qelems = quotient.elements()?;
    let index = qelems.len() as u64;
    let mexp = exponent_of(m)?;
    debug_assert_eq!(crate::arith::gcd_u64(index, mexp), 1);
    let minv = crate::arith::mod_inverse(index % mexp, mexp)
        .ok_or_else(|| Error::theory("index not invertible modulo exponent"))?;
    // t(y) = (prod_x c(x, y))^e with e = -|G/M|^{-1} mod exp(M) turns the
    // section into a homomorphism
    let e = (mexp - minv) % mexp;
    let section = |x: &Permutation| q.section(x).expect("quotient element");
    let mut comp_gens = Vec::new();
    for ybar in quotient.generators() {
        let ry = section(ybar);
        let mut t = group.identity();
        for xbar in qelems.iter() {
            let rx = section(xbar);
            let rxy = section(&xbar.compose(ybar));
            let c = rxy.inverse().compose(&rx).compose(&ry);
            debug_assert!(m.contains(&c));
            t = t.compose(&c);
        }
        let t = t.pow(e as i64);
        comp_gens.push(ry.compose(&t));
    }
    let complement = group_from_gens(group.degree(), comp_gens);
    if complement.order() != quotient.order() || !intersection(&complement, m)?.is_trivial() {
        return Err(Error::theory("coprime complement construction failed"));
    }
    Ok(complement)
}

/// Hall subgroup of order the `side`-part of `|G|`; requires pi-separability.
pub fn hall_subgroup(
    group: &PermGroup,
    pi: &PiConfig,
    side: PiSide,
    limit: u128,
) -> Result<PermGroup> {
    let target = pi.part(group.order(), side);
    if target == 1 {
        return Ok(PermGroup::trivial(group.degree()));
    }
    if target == group.order() {
        return Ok(group.clone());
    }
    let classes = conjugacy_classes(group, 0)?;
    let minimals = minimal_normal_subgroups(group, &classes)?;
    let m = minimals
        .first()
        .ok_or_else(|| Error::theory("nontrivial group has a minimal normal subgroup"))?;
    let m_on_side = pi.is_number_of(m.order(), side);
    let m_off_side = pi.is_number_of(m.order(), other(side));
    if !m_on_side && !m_off_side {
        return Err(Error::domain(format!(
            "no Hall subgroup: group is not pi-separable for pi = {}",
            pi
        )));
    }
    let q = QuotientData::new(group, m)?;
    let hbar = hall_subgroup(q.group(), pi, side, limit)?;
    let preimage = q.preimage_of_subgroup(&hbar)?;
    if m_on_side {
        // |preimage| = |M| * |G/M|_side = |G|_side
        debug_assert_eq!(preimage.order(), target);
        return Ok(preimage);
    }
    if preimage.order() < group.order() {
        return hall_subgroup(&preimage, pi, side, limit);
    }
    // Terminal shape: M is a normal Hall subgroup of the other side and the
    // quotient is entirely on our side; a complement to M is the answer.
    if crate::group::is_abelian_group(m) {
        return abelian_complement(group, m);
    }
    // Rare shape (nonabelian minimal normal): search the subgroup lattice.
    let list = subgroups_up_to_conjugacy(group, limit)?;
    for class in &list.classes {
        if class.representative.order() == target {
            return Ok(class.representative.clone());
        }
    }
    Err(Error::domain(
        "no Hall subgroup found; group is not pi-separable".to_string(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(deg: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(deg, s).unwrap()
    }

    fn s4() -> PermGroup {
        PermGroup::new(4, vec![perm(4, "(1,2,3,4)"), perm(4, "(1,2)")]).unwrap()
    }

    fn a5() -> PermGroup {
        PermGroup::new(5, vec![perm(5, "(1,2,3,4,5)"), perm(5, "(3,4,5)")]).unwrap()
    }

    #[test]
    fn cores_of_s4() {
        let g = s4();
        let pi2 = PiConfig::from_primes([2]).unwrap();
        let opi = o_core(&g, &pi2, PiSide::Pi).unwrap();
        assert_eq!(opi.order(), 4); // V4
        let opip = o_core(&g, &pi2, PiSide::PiPrime).unwrap();
        assert!(opip.is_trivial());
        // pi covering all primes: the core is everything
        let pi23 = PiConfig::from_primes([2, 3]).unwrap();
        assert_eq!(o_core(&g, &pi23, PiSide::Pi).unwrap().order(), 24);
    }

    #[test]
    fn separability() {
        let pi2 = PiConfig::from_primes([2]).unwrap();
        assert!(is_pi_separable(&s4(), &pi2).unwrap());
        assert!(!is_pi_separable(&a5(), &pi2).unwrap());
        let all = PiConfig::from_primes([2, 3, 5]).unwrap();
        assert!(is_pi_separable(&a5(), &all).unwrap());
        assert!(is_pi_separable(&a5(), &PiConfig::empty()).unwrap());
        let pi3 = PiConfig::from_primes([3]).unwrap();
        assert!(!is_pi_separable(&a5(), &pi3).unwrap());
    }

    #[test]
    fn hall_subgroups_of_s4() {
        let g = s4();
        let pi2 = PiConfig::from_primes([2]).unwrap();
        let h = hall_subgroup(&g, &pi2, PiSide::PiPrime, 2000).unwrap();
        assert_eq!(h.order(), 3);
        let h2 = hall_subgroup(&g, &pi2, PiSide::Pi, 2000).unwrap();
        assert_eq!(h2.order(), 8);
        assert!(h.is_subgroup_of(&g) && h2.is_subgroup_of(&g));
    }

    #[test]
    fn hall_of_s3_and_edges() {
        let s3 = PermGroup::new(3, vec![perm(3, "(1,2)"), perm(3, "(1,2,3)")]).unwrap();
        let pi3 = PiConfig::from_primes([3]).unwrap();
        let h = hall_subgroup(&s3, &pi3, PiSide::PiPrime, 2000).unwrap();
        assert_eq!(h.order(), 2);
        // pi containing all primes: Hall pi' is trivial
        let all = PiConfig::from_primes([2, 3]).unwrap();
        assert!(hall_subgroup(&s3, &all, PiSide::PiPrime, 2000)
            .unwrap()
            .is_trivial());
        assert_eq!(
            hall_subgroup(&s3, &all, PiSide::Pi, 2000).unwrap().order(),
            6
        );
    }

    #[test]
    fn hall_fails_on_non_separable() {
        let pi2 = PiConfig::from_primes([2]).unwrap();
        let res = hall_subgroup(&a5(), &pi2, PiSide::PiPrime, 2000);
        assert!(matches!(res, Err(Error::Domain(_))));
    }

    #[test]
    fn hall_of_order_48_group() {
        // 2 x S4 has order 48; Hall 3'-subgroup has order 16
        let g = PermGroup::new(
            6,
            vec![perm(6, "(1,2,3,4)"), perm(6, "(1,2)"), perm(6, "(5,6)")],
        )
        .unwrap();
        assert_eq!(g.order(), 48);
        let pi3 = PiConfig::from_primes([3]).unwrap();
        let h = hall_subgroup(&g, &pi3, PiSide::PiPrime, 2000).unwrap();
        assert_eq!(h.order(), 16);
    }
}
