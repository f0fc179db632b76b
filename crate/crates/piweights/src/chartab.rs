//! Ordinary character tables and the classical operations on class
//! functions: inner products, restriction, induction, determinantal order,
//! pi'-defect.  Tables are certified after construction: row orthogonality,
//! the degree formula, and column orthogonality must hold exactly or the
//! builder reports a bug.

use crate::abelian::abelian_table;
use crate::classes::ConjugacyClassSet;
use crate::cyclotomic::CyclotomicValue;
use crate::dixon::dixon_table;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::pi::PiConfig;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::sync::Arc;

/// Full orthogonality certification is cubic in the class count; above this
/// many classes a cheaper sound certificate is used instead.
const FULL_CERTIFY_CLASS_CAP: usize = 64;

#[derive(Clone)]
pub struct ClassFunction {
    group: PermGroup,
    classes: Arc<ConjugacyClassSet>,
    values: Vec<CyclotomicValue>,
}

impl ClassFunction {
    pub fn new(
        group: PermGroup,
        classes: Arc<ConjugacyClassSet>,
        values: Vec<CyclotomicValue>,
    ) -> Result<Self> {
        if values.len() != classes.len() {
            return Err(Error::domain(
                "value vector length differs from class count",
            ));
        }
        Ok(ClassFunction {
            group,
            classes,
            values,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn classes(&self) -> &Arc<ConjugacyClassSet> {
        &self.classes
    }

    pub fn values(&self) -> &[CyclotomicValue] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &CyclotomicValue {
        &self.values[class]
    }

    pub fn value_at(&self, x: &crate::perm::Permutation) -> Result<&CyclotomicValue> {
        Ok(&self.values[self.classes.class_of(x)?])
    }

    /// Degree as an exact nonnegative integer.
    pub fn degree(&self) -> Result<u64> {
        let v = self.values[self.classes.identity_class()]
            .as_rational_integer()
            .ok_or_else(|| Error::domain("degree is not a rational integer"))?;
        u64::try_from(v).map_err(|_| Error::domain("degree is negative or too large"))
    }

    pub fn same_group_as(&self, other: &ClassFunction) -> bool {
        self.group.same_group(&other.group)
    }

    /// `(1/|G|) sum |C| f(g) conj(h(g))`, demanded rational.
    pub fn inner_product(&self, other: &ClassFunction) -> Result<BigRational> {
        if !self.same_group_as(other) {
            return Err(Error::domain(
                "inner product of class functions on different groups",
            ));
        }
        let mut acc = CyclotomicValue::zero();
        for (k, info) in self.classes.classes().iter().enumerate() {
            let term = self.values[k]
                .mul(&other.values[k].conj())
                .scale(&BigRational::from_integer(BigInt::from(info.size as i64)));
            acc = acc.add(&term);
        }
        let order = BigRational::from_integer(BigInt::from(self.group.order() as i64));
        let acc = acc.scale(&order.recip());
        acc.as_rational()
            .ok_or_else(|| Error::theory("inner product of characters is not rational"))
    }

    pub fn conj(&self) -> ClassFunction {
        ClassFunction {
            group: self.group.clone(),
            classes: self.classes.clone(),
            values: self.values.iter().map(|v| v.conj()).collect(),
        }
    }

    /// The conjugate class function `chi^g` with `chi^g(x) = chi(g x g^-1)`;
    /// `g` must normalize the group.
    pub fn conjugate_by(&self, g: &crate::perm::Permutation) -> Result<ClassFunction> {
        let ginv = g.inverse();
        let values: Vec<CyclotomicValue> = self
            .classes
            .classes()
            .iter()
            .map(|info| {
                let moved = info.representative.conjugate_by(&ginv);
                Ok(self.values[self.classes.class_of(&moved)?].clone())
            })
            .collect::<Result<_>>()?;
        ClassFunction::new(self.group.clone(), self.classes.clone(), values)
    }

    pub fn pointwise_mul(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if !self.same_group_as(other) {
            return Err(Error::domain(
                "product of class functions on different groups",
            ));
        }
        Ok(ClassFunction {
            group: self.group.clone(),
            classes: self.classes.clone(),
            values: self
                .values
                .iter()
                .zip(other.values.iter())
                .map(|(a, b)| a.mul(b))
                .collect(),
        })
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if !self.same_group_as(other) {
            return Err(Error::domain("sum of class functions on different groups"));
        }
        Ok(ClassFunction {
            group: self.group.clone(),
            classes: self.classes.clone(),
            values: self
                .values
                .iter()
                .zip(other.values.iter())
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    /// Restriction along `H <= G`; `sub_classes` must belong to a subgroup.
    pub fn restrict(
        &self,
        sub: &PermGroup,
        sub_classes: Arc<ConjugacyClassSet>,
    ) -> Result<ClassFunction> {
        if !sub.is_subgroup_of(&self.group) {
            return Err(Error::domain("restriction target is not a subgroup"));
        }
        let values: Vec<CyclotomicValue> = sub_classes
            .classes()
            .iter()
            .map(|info| {
                let k = self.classes.class_of(&info.representative)?;
                Ok(self.values[k].clone())
            })
            .collect::<Result<_>>()?;
        ClassFunction::new(sub.clone(), sub_classes, values)
    }

    /// Induction to a supergroup: the standard sum over conjugators.
    pub fn induce(
        &self,
        sup: &PermGroup,
        sup_classes: Arc<ConjugacyClassSet>,
    ) -> Result<ClassFunction> {
        if !self.group.is_subgroup_of(sup) {
            return Err(Error::domain("induction target does not contain the group"));
        }
        let inv_h = BigRational::from_integer(BigInt::from(self.group.order() as i64)).recip();
        let sup_elems = sup.elements()?;
        let values: Vec<CyclotomicValue> = sup_classes
            .classes()
            .iter()
            .map(|info| {
                let g = &info.representative;
                let mut acc = CyclotomicValue::zero();
                for x in sup_elems.iter() {
                    let conj = g.conjugate_by(x);
                    if self.group.contains(&conj) {
                        acc = acc.add(&self.values[self.classes.class_of(&conj)?]);
                    }
                }
                Ok(acc.scale(&inv_h))
            })
            .collect::<Result<_>>()?;
        ClassFunction::new(sup.clone(), sup_classes, values)
    }

    /// Order of the determinant of a representation with this character:
    /// eigenvalue multisets come from the cyclic DFT on power classes.  A
    /// linear character is its own determinant, so its order is the lcm of
    /// its value orders.
    pub fn determinant_order(&self) -> Result<u64> {
        if self.degree()? == 1 {
            let mut ord = 1u64;
            for v in &self.values {
                let o = crate::cyclotomic::root_of_unity_order(v).ok_or_else(|| {
                    Error::theory("linear character value is not a root of unity".to_string())
                })?;
                ord = crate::arith::lcm_u64(ord, o);
            }
            return Ok(ord);
        }
        let mut ord = 1u64;
        for k in 0..self.classes.len() {
            let (m, s) = self.det_exponent_at(k)?;
            let g = crate::arith::gcd_u64(m, s);
            ord = crate::arith::lcm_u64(ord, m / g.max(1));
        }
        Ok(ord)
    }

    /// The determinant value at class `k` as `E(m)^s` with `m` the element
    /// order; returns `(m, s)`.
    pub fn det_exponent_at(&self, k: usize) -> Result<(u64, u64)> {
        let m = self.classes.class(k).element_order;
        let mus = self.eigenvalue_multiplicities(k)?;
        let mut s: u64 = 0;
        for (j, mu) in mus.iter().enumerate() {
            s = (s + (j as u64 % m) * (mu % m)) % m;
        }
        Ok((m, s))
    }

    /// Multiplicity of each eigenvalue `E(m)^j` of a representing matrix at
    /// the representative of class `k`.
    pub fn eigenvalue_multiplicities(&self, k: usize) -> Result<Vec<u64>> {
        let m = self.classes.class(k).element_order;
        let degree = self.degree()?;
        let minv = BigRational::new(BigInt::one(), BigInt::from(m));
        let mut mus = Vec::with_capacity(m as usize);
        let mut total = 0u64;
        for j in 0..m {
            let mut acc = CyclotomicValue::zero();
            for t in 0..m {
                let cls = self.classes.power_class(k, t as i64);
                let w = CyclotomicValue::root_of_unity(m, -((j * t % m) as i64))?;
                acc = acc.add(&self.values[cls].mul(&w));
            }
            let mu = acc
                .scale(&minv)
                .as_rational_integer()
                .ok_or_else(|| Error::theory("eigenvalue multiplicity is not an integer"))?;
            let mu =
                u64::try_from(mu).map_err(|_| Error::theory("negative eigenvalue multiplicity"))?;
            total += mu;
            mus.push(mu);
        }
        if total != degree {
            return Err(Error::theory(format!(
                "eigenvalue multiplicities sum to {} for degree {}",
                total, degree
            )));
        }
        Ok(mus)
    }

    /// `chi(1)_{pi'} = |G|_{pi'}`, i.e. p-defect zero for every p in pi'.
    pub fn has_pi_prime_defect_zero(&self, pi: &PiConfig) -> Result<bool> {
        let deg = self.degree()? as u128;
        Ok(pi.pi_prime_part(deg) == pi.pi_prime_part(self.group.order()))
    }
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.same_group_as(other) && self.values == other.values
    }
}
impl Eq for ClassFunction {}

impl std::fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", v)?;
        }
        write!(f, "]")
    }
}

pub struct CharacterTable {
    group: PermGroup,
    classes: Arc<ConjugacyClassSet>,
    irreducibles: Vec<ClassFunction>,
    exponent: u64,
}

impl CharacterTable {
    pub fn build(group: &PermGroup, classes: Arc<ConjugacyClassSet>) -> Result<CharacterTable> {
        let raw = if crate::group::is_abelian_group(group) {
            abelian_table(group, &classes)?
        } else {
            dixon_table(group, &classes)?
        };
        let mut irreducibles: Vec<ClassFunction> = raw
            .into_iter()
            .map(|values| ClassFunction::new(group.clone(), classes.clone(), values))
            .collect::<Result<_>>()?;
        irreducibles.sort_by(|a, b| {
            let da = a.degree().unwrap_or(u64::MAX);
            let db = b.degree().unwrap_or(u64::MAX);
            da.cmp(&db).then_with(|| a.values.cmp(&b.values))
        });
        let table = CharacterTable {
            group: group.clone(),
            classes: classes.clone(),
            irreducibles,
            exponent: classes.exponent(),
        };
        table.certify()?;
        Ok(table)
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn classes(&self) -> &Arc<ConjugacyClassSet> {
        &self.classes
    }

    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    /// Exact multiplicities of a character in terms of the irreducibles.
    pub fn decompose(&self, f: &ClassFunction) -> Result<Vec<u64>> {
        let mut out = Vec::with_capacity(self.irreducibles.len());
        for chi in &self.irreducibles {
            let m = f.inner_product(chi)?;
            if !m.is_integer() {
                return Err(Error::theory(format!(
                    "non-integral multiplicity {} in character decomposition",
                    m
                )));
            }
            let m = u64::try_from(m.to_integer())
                .map_err(|_| Error::theory("negative multiplicity in character decomposition"))?;
            out.push(m);
        }
        Ok(out)
    }

    /// JSON export with class data and `E(e)`-notation values, in the
    /// stable row order (degrees ascending, then lexicographic values).
    pub fn export_json(&self) -> serde_json::Value {
        let classes: Vec<serde_json::Value> = self
            .classes
            .classes()
            .iter()
            .map(|info| {
                serde_json::json!({
                    "representative": info.representative.to_string(),
                    "size": info.size as u64,
                    "element_order": info.element_order,
                    "centralizer_order": info.centralizer_order as u64,
                })
            })
            .collect();
        let irreducibles: Vec<serde_json::Value> = self
            .irreducibles
            .iter()
            .map(|chi| {
                serde_json::json!({
                    "degree": chi.degree().expect("certified table"),
                    "values": chi.values().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({
            "order": self.group.order() as u64,
            "exponent": self.exponent,
            "classes": classes,
            "irreducibles": irreducibles,
        })
    }

    /// Row/column orthogonality and the degree sum; exact, or an error.
    pub fn certify(&self) -> Result<()> {
        let r = self.classes.len();
        if self.irreducibles.len() != r {
            return Err(Error::theory(format!(
                "{} irreducibles for {} classes",
                self.irreducibles.len(),
                r
            )));
        }
        let mut degree_sq_sum: u128 = 0;
        for chi in &self.irreducibles {
            let d = chi.degree()? as u128;
            degree_sq_sum += d * d;
        }
        if degree_sq_sum != self.group.order() {
            return Err(Error::theory(format!(
                "degree squares sum to {} but |G| = {}",
                degree_sq_sum,
                self.group.order()
            )));
        }
        let full = r <= FULL_CERTIFY_CLASS_CAP;
        if full {
            for (i, chi) in self.irreducibles.iter().enumerate() {
                for j in i..r {
                    let ip = chi.inner_product(&self.irreducibles[j])?;
                    let expect = if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    };
                    if ip != expect {
                        return Err(Error::theory(format!(
                            "row orthogonality fails at ({}, {}): {}",
                            i, j, ip
                        )));
                    }
                }
            }
        } else {
            // large tables: rows must be pairwise distinct, linear rows must
            // be unimodular homomorphisms (spot-checked on products of class
            // representatives), and nonlinear rows must have norm one.
            // Distinct homomorphisms into the unit circle are orthogonal, so
            // this certifies the same relations without the cubic sum.
            let mut seen = std::collections::HashSet::new();
            for chi in &self.irreducibles {
                if !seen.insert(chi.values.clone()) {
                    return Err(Error::theory("duplicate table row".to_string()));
                }
                if chi.degree()? == 1 {
                    for v in &chi.values {
                        if crate::cyclotomic::root_of_unity_order(v).is_none() {
                            return Err(Error::theory(
                                "linear character value is not a root of unity".to_string(),
                            ));
                        }
                    }
                    for k in 0..r.min(8) {
                        let a = &self.classes.class(k).representative;
                        let b = &self.classes.class((k + 1) % r).representative;
                        let kc = self.classes.class_of(&a.compose(b))?;
                        if chi.values[kc] != chi.values[k].mul(&chi.values[(k + 1) % r]) {
                            return Err(Error::theory(
                                "linear character is not multiplicative".to_string(),
                            ));
                        }
                    }
                } else {
                    let ip = chi.inner_product(chi)?;
                    if ip != BigRational::one() {
                        return Err(Error::theory(format!("row norm {} is not one", ip)));
                    }
                }
            }
        }
        if full {
            // second orthogonality: sum_i |chi_i(g)|^2 = |C_G(g)|
            for (k, info) in self.classes.classes().iter().enumerate() {
                let mut acc = CyclotomicValue::zero();
                for chi in &self.irreducibles {
                    acc = acc.add(&chi.values[k].mul(&chi.values[k].conj()));
                }
                let want = CyclotomicValue::from_rational(BigRational::from_integer(BigInt::from(
                    info.centralizer_order as i64,
                )));
                if acc != want {
                    return Err(Error::theory(format!(
                        "column orthogonality fails at class {}",
                        k
                    )));
                }
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for CharacterTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "CharacterTable of order-{} group, {} classes:",
            self.group.order(),
            self.classes.len()
        )?;
        for chi in &self.irreducibles {
            writeln!(f, "  {:?}", chi)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::conjugacy_classes;
    use crate::perm::Permutation;

    fn perm(deg: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(deg, s).unwrap()
    }

    fn table_of(g: &PermGroup) -> CharacterTable {
        let cc = Arc::new(conjugacy_classes(g, 0).unwrap());
        CharacterTable::build(g, cc).unwrap()
    }

    fn s3() -> PermGroup {
        PermGroup::new(3, vec![perm(3, "(1,2)"), perm(3, "(1,2,3)")]).unwrap()
    }

    fn s4() -> PermGroup {
        PermGroup::new(4, vec![perm(4, "(1,2,3,4)"), perm(4, "(1,2)")]).unwrap()
    }

    fn c3() -> PermGroup {
        PermGroup::new(3, vec![perm(3, "(1,2,3)")]).unwrap()
    }

    #[test]
    fn tables_certify() {
        for g in [s3(), s4(), c3()] {
            let t = table_of(&g);
            t.certify().unwrap();
        }
    }

    #[test]
    fn cyclic_table_agrees_with_dixon() {
        // the abelian path and Dixon-Schneider must give identical tables
        let c6 = PermGroup::new(5, vec![perm(5, "(1,2)(3,4,5)")]).unwrap();
        let cc = Arc::new(conjugacy_classes(&c6, 0).unwrap());
        let mut dx = dixon_table(&c6, &cc).unwrap();
        let mut ab = abelian_table(&c6, &cc).unwrap();
        dx.sort();
        ab.sort();
        assert_eq!(dx, ab);
    }

    #[test]
    fn frobenius_reciprocity() {
        let g = s3();
        let h = c3();
        let gt = table_of(&g);
        let ht = table_of(&h);
        for theta in ht.irreducibles() {
            let ind = theta.induce(&g, gt.classes().clone()).unwrap();
            for chi in gt.irreducibles() {
                let lhs = ind.inner_product(chi).unwrap();
                let rhs = theta
                    .inner_product(&chi.restrict(&h, ht.classes().clone()).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn induced_trivial_from_c3_to_s3() {
        let g = s3();
        let h = c3();
        let gt = table_of(&g);
        let ht = table_of(&h);
        let trivial = ht.irreducibles()[0].clone();
        assert_eq!(trivial.degree().unwrap(), 1);
        let ind = trivial.induce(&g, gt.classes().clone()).unwrap();
        assert_eq!(ind.degree().unwrap(), 2);
        // contains the trivial character once
        let t_g = gt
            .irreducibles()
            .iter()
            .find(|c| c.values().iter().all(|v| *v == CyclotomicValue::one()))
            .unwrap();
        assert_eq!(ind.inner_product(t_g).unwrap(), BigRational::one());
    }

    #[test]
    fn determinant_orders() {
        let g = s4();
        let t = table_of(&g);
        let mut det_orders: Vec<u64> = t
            .irreducibles()
            .iter()
            .map(|chi| chi.determinant_order().unwrap())
            .collect();
        det_orders.sort();
        // trivial 1; sign 2; degree-2 has det = sign: 2; the two degree-3
        // characters have det sign and trivial
        assert_eq!(det_orders, vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn s3_degree2_det_order_two() {
        let t = table_of(&s3());
        let chi2 = t
            .irreducibles()
            .iter()
            .find(|c| c.degree().unwrap() == 2)
            .unwrap();
        // eigenvalues at (1,2) are 1 and -1, so det((1,2)) = -1
        assert_eq!(chi2.determinant_order().unwrap(), 2);
    }

    #[test]
    fn defect_zero_s3() {
        let t = table_of(&s3());
        let pi3 = PiConfig::from_primes([3]).unwrap();
        let flags: Vec<bool> = t
            .irreducibles()
            .iter()
            .map(|c| c.has_pi_prime_defect_zero(&pi3).unwrap())
            .collect();
        // |S3|_{pi'} = 2: only the degree-2 character qualifies
        let count = flags.iter().filter(|&&b| b).count();
        assert_eq!(count, 1);
        let idx = flags.iter().position(|&b| b).unwrap();
        assert_eq!(t.irreducibles()[idx].degree().unwrap(), 2);
    }

    #[test]
    fn product_inner_product_s4() {
        // <chi_std * chi_std, trivial> = 1
        let t = table_of(&s4());
        let std3 = t
            .irreducibles()
            .iter()
            .filter(|c| c.degree().unwrap() == 3)
            .last()
            .unwrap();
        let square = std3.pointwise_mul(std3).unwrap();
        let trivial = t
            .irreducibles()
            .iter()
            .find(|c| c.values().iter().all(|v| *v == CyclotomicValue::one()))
            .unwrap();
        assert_eq!(square.inner_product(trivial).unwrap(), BigRational::one());
    }

    #[test]
    fn degree2_of_s3_restricts_to_nontrivial_linears() {
        let g = s3();
        let h = c3();
        let gt = table_of(&g);
        let ht = table_of(&h);
        let chi2 = gt
            .irreducibles()
            .iter()
            .find(|c| c.degree().unwrap() == 2)
            .unwrap();
        let restricted = chi2.restrict(&h, ht.classes().clone()).unwrap();
        let mults = ht.decompose(&restricted).unwrap();
        for (theta, &m) in ht.irreducibles().iter().zip(mults.iter()) {
            let trivial = theta.values().iter().all(|v| *v == CyclotomicValue::one());
            assert_eq!(m, if trivial { 0 } else { 1 });
        }
    }

    #[test]
    fn json_export_shape() {
        let t = table_of(&s3());
        let json = t.export_json();
        assert_eq!(json["order"], 6);
        assert_eq!(json["irreducibles"].as_array().unwrap().len(), 3);
        assert_eq!(json["irreducibles"][2]["degree"], 2);
        assert_eq!(json["classes"][0]["representative"], "()");
    }

    #[test]
    fn regular_character_decomposition() {
        let g = s3();
        let t = table_of(&g);
        // regular character: |G| at 1, zero elsewhere
        let mut values = vec![CyclotomicValue::zero(); t.classes().len()];
        values[0] = CyclotomicValue::from_integer(6);
        let reg = ClassFunction::new(g.clone(), t.classes().clone(), values).unwrap();
        let decomp = t.decompose(&reg).unwrap();
        for (chi, m) in t.irreducibles().iter().zip(decomp.iter()) {
            assert_eq!(*m, chi.degree().unwrap());
        }
    }
}
