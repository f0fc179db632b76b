//! Quotient groups as permutation groups on cosets.
//!
//! For `N` normal in `G`, `G/N` acts faithfully on the right cosets of `N`
//! by right multiplication.  Cosets are identified by their lexicographically
//! least element, sorted so that the coset `N` itself is point 0, which
//! makes the construction reproducible and gives a cheap section: the image
//! of point 0 under a quotient permutation names the coset it represents.

use crate::error::{Error, Result};
use crate::group::{group_from_gens, PermGroup};
use crate::perm::Permutation;
use std::collections::HashMap;

pub struct QuotientData {
    parent: PermGroup,
    normal: PermGroup,
    quotient: PermGroup,
    /// Least element of each coset, sorted; index = quotient point.
    coset_reps: Vec<Permutation>,
    coset_index: HashMap<Permutation, usize>,
}

impl QuotientData {
    pub fn new(parent: &PermGroup, normal: &PermGroup) -> Result<QuotientData> {
        if !normal.is_normal_in(parent) {
            return Err(Error::domain("subgroup is not normal in the parent"));
        }
        let n_elems = normal.elements()?;
        let g_elems = parent.elements()?;
        // canonical key of the coset of g: min over N of n*g
        let coset_key = |g: &Permutation| -> Permutation {
            n_elems
                .iter()
                .map(|n| n.compose(g))
                .min()
                .expect("nonempty coset")
        };
        let mut keys: Vec<Permutation> = Vec::new();
        let mut seen: HashMap<Permutation, ()> = HashMap::new();
        for g in g_elems.iter() {
            let k = coset_key(g);
            if !seen.contains_key(&k) {
                seen.insert(k.clone(), ());
                keys.push(k);
            }
        }
        keys.sort_unstable();
        let coset_index: HashMap<Permutation, usize> = keys
            .iter()
            .enumerate()
            .map(|(i, k)| (k.clone(), i))
            .collect();
        let index = keys.len();
        debug_assert_eq!(index as u128 * normal.order(), parent.order());

        let project = |g: &Permutation| -> Permutation {
            let images: Vec<usize> = keys
                .iter()
                .map(|rep| coset_index[&coset_key(&rep.compose(g))])
                .collect();
            Permutation::from_images(images).expect("coset action is a permutation")
        };
        let quotient = PermGroup::new(index, parent.generators().iter().map(project).collect())?;
        if quotient.order() * normal.order() != parent.order() {
            return Err(Error::theory(format!(
                "quotient order {} times |N| = {} does not give |G| = {}",
                quotient.order(),
                normal.order(),
                parent.order()
            )));
        }
        Ok(QuotientData {
            parent: parent.clone(),
            normal: normal.clone(),
            quotient,
            coset_reps: keys,
            coset_index,
        })
    }

    pub fn parent(&self) -> &PermGroup {
        &self.parent
    }

    pub fn normal(&self) -> &PermGroup {
        &self.normal
    }

    pub fn group(&self) -> &PermGroup {
        &self.quotient
    }

    /// Image of `g` in the quotient.
    pub fn project(&self, g: &Permutation) -> Result<Permutation> {
        if !self.parent.contains(g) {
            return Err(Error::domain("element is not in the parent group"));
        }
        let n_elems = self.normal.elements()?;
        let coset_key = |x: &Permutation| -> Permutation {
            n_elems
                .iter()
                .map(|n| n.compose(x))
                .min()
                .expect("nonempty coset")
        };
        let images: Vec<usize> = self
            .coset_reps
            .iter()
            .map(|rep| self.coset_index[&coset_key(&rep.compose(g))])
            .collect();
        Ok(Permutation::from_images(images).expect("coset action"))
    }

    /// A preimage in `G` of a quotient element: the canonical representative
    /// of the coset that `q` sends the coset `N` to.
    pub fn section(&self, q: &Permutation) -> Result<Permutation> {
        if !self.quotient.contains(q) {
            return Err(Error::domain("element is not in the quotient group"));
        }
        Ok(self.coset_reps[q.apply(0)].clone())
    }

    /// Full preimage of a subgroup of the quotient.
    pub fn preimage_of_subgroup(&self, sub: &PermGroup) -> Result<PermGroup> {
        if !sub.is_subgroup_of(&self.quotient) {
            return Err(Error::domain("not a subgroup of the quotient"));
        }
        let mut gens: Vec<Permutation> = self.normal.generators().to_vec();
        for q in sub.generators() {
            gens.push(self.section(q)?);
        }
        let pre = group_from_gens(self.parent.degree(), gens);
        debug_assert_eq!(pre.order(), sub.order() * self.normal.order());
        Ok(pre)
    }

    /// Image of a subgroup of the parent.
    pub fn image_of_subgroup(&self, sub: &PermGroup) -> Result<PermGroup> {
        if !sub.is_subgroup_of(&self.parent) {
            return Err(Error::domain("not a subgroup of the parent"));
        }
        let mut gens = Vec::new();
        for g in sub.generators() {
            gens.push(self.project(g)?);
        }
        Ok(group_from_gens(self.quotient.degree(), gens))
    }
}
