//! Character table of an abelian group by a chain of prime-index subgroups.
//!
//! Each linear character of a subgroup extends in exactly `p` ways across a
//! prime-index step, so walking a composition chain enumerates all `|G|`
//! characters.  Values are tracked as exponents of a fixed primitive root
//! `E(N)` with `N` the group exponent, keeping every step in integer
//! arithmetic modulo `N`.

use crate::classes::ConjugacyClassSet;
use crate::cyclotomic::CyclotomicValue;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use std::collections::HashMap;

pub fn abelian_table(
    group: &PermGroup,
    classes: &ConjugacyClassSet,
) -> Result<Vec<Vec<CyclotomicValue>>> {
    let n_exp = classes.exponent();
    let elements = group.elements()?;

    // composition chain with prime steps
    let mut chain: Vec<(Permutation, u64)> = Vec::new();
    let mut current = PermGroup::trivial(group.degree());
    // exponent vectors of the elements of `current` in terms of chain gens
    let mut exps: HashMap<Permutation, Vec<u64>> = HashMap::new();
    exps.insert(group.identity(), vec![]);
    while current.order() < group.order() {
        let y = elements
            .iter()
            .find(|x| !current.contains(x))
            .expect("proper subgroup misses an element")
            .clone();
        let t = (1..=y.order())
            .find(|&t| current.contains(&y.pow(t as i64)))
            .expect("order bounds the image order");
        let p = *crate::arith::factorize(t as u128)
            .keys()
            .next()
            .ok_or_else(|| Error::theory("image of a new element has order > 1".to_string()))?;
        let x = y.pow((t / p) as i64);
        debug_assert!(!current.contains(&x) && current.contains(&x.pow(p as i64)));
        // extend the exponent table along the new generator
        let mut next_exps = HashMap::with_capacity(exps.len() * p as usize);
        for (elem, vec) in &exps {
            let mut acc = elem.clone();
            for j in 0..p {
                let mut v = vec.clone();
                v.push(j);
                next_exps.insert(acc.clone(), v);
                acc = acc.compose(&x);
            }
        }
        exps = next_exps;
        let mut gens: Vec<Permutation> = current.generators().to_vec();
        gens.push(x.clone());
        current = PermGroup::new(group.degree(), gens)?;
        chain.push((x, p));
    }

    // characters as exponent tuples at the chain generators
    let mut chars: Vec<Vec<u64>> = vec![vec![]];
    for (i, (x, p)) in chain.iter().enumerate() {
        let xp = x.pow(*p as i64);
        let xp_vec = exps
            .get(&xp)
            .ok_or_else(|| Error::theory("power of chain generator not in table".to_string()))?
            .clone();
        let mut next = Vec::with_capacity(chars.len() * *p as usize);
        for lambda in &chars {
            // value of lambda at x^p, as an exponent of E(N)
            let mut t: u64 = 0;
            for (j, &a) in xp_vec.iter().enumerate().take(i) {
                t = (t + a * lambda[j]) % n_exp;
            }
            if !t.is_multiple_of(*p) {
                return Err(Error::theory(
                    "character of a subgroup fails to extend across a prime step".to_string(),
                ));
            }
            for j in 0..*p {
                let mut ext = lambda.clone();
                ext.push((t / p + j * (n_exp / p)) % n_exp);
                next.push(ext);
            }
        }
        chars = next;
    }

    // classes of an abelian group are singletons; evaluate each character
    let mut table = Vec::with_capacity(chars.len());
    for lambda in &chars {
        let mut row = Vec::with_capacity(classes.len());
        for info in classes.classes() {
            let vec = exps
                .get(&info.representative)
                .ok_or_else(|| Error::theory("class representative missing".to_string()))?;
            let mut t: u64 = 0;
            for (j, &a) in vec.iter().enumerate() {
                t = (t + a * lambda[j]) % n_exp;
            }
            row.push(CyclotomicValue::root_of_unity(n_exp, t as i64)?);
        }
        table.push(row);
    }
    Ok(table)
}
