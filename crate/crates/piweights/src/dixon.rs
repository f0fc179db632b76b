//! Dixon-Schneider computation of the ordinary character table.
//!
//! Central characters are the common eigenvectors of the class
//! multiplication matrices.  Working modulo the least prime `p = 1 (mod e)`
//! with `p > 2*sqrt(|G|)` (with `e` the group exponent) makes the class
//! algebra split over F_p, so iterated eigenspace splitting reaches `r`
//! one-dimensional spaces.  Degrees and values are recovered modulo `p` and
//! lifted exactly: the multiplicity of each eigenvalue `zeta_m^j` of a class
//! representative is a discrete Fourier coefficient over the power classes,
//! a nonnegative integer below `p`, hence determined by its residue.

use crate::arith::{is_prime, mod_inverse};
use crate::classes::ConjugacyClassSet;
use crate::cyclotomic::CyclotomicValue;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::modlin::{
    charpoly, coordinates, kernel_basis, mat_vec, poly_roots, primitive_root, rref, Fp, Matrix,
};
use crate::perm::Permutation;
use num_bigint::BigInt;

/// The working prime pinned by the construction.
pub fn working_prime(order: u64, exponent: u64) -> u64 {
    let bound = 2.0 * (order as f64).sqrt();
    let mut p = exponent + 1;
    loop {
        if p as f64 > bound && is_prime(p) {
            return p;
        }
        p += exponent;
    }
}

pub fn dixon_table(
    group: &PermGroup,
    classes: &ConjugacyClassSet,
) -> Result<Vec<Vec<CyclotomicValue>>> {
    let order: u64 = group
        .order()
        .try_into()
        .map_err(|_| Error::resource("group too large for table computation"))?;
    let r = classes.len();
    let e = classes.exponent();
    let p = working_prime(order, e);
    let f = Fp::new(p);
    let z = f.pow(primitive_root(p), (p - 1) / e);

    // class element lists and membership
    let elements = group.elements()?;
    let mut class_elems: Vec<Vec<Permutation>> = vec![Vec::new(); r];
    for x in elements.iter() {
        class_elems[classes.class_of(x)?].push(x.clone());
    }
    let sizes: Vec<u64> = classes.classes().iter().map(|c| c.size as u64).collect();
    let inv_class: Vec<usize> = (0..r).map(|k| classes.inverse_class(k)).collect();

    // class multiplication matrix for class i: M[j][k] = #{x in C_i : x^-1 g_k in C_j}
    let class_matrix = |i: usize| -> Result<Matrix> {
        let mut m = vec![vec![0u64; r]; r];
        for (k, info) in classes.classes().iter().enumerate() {
            let gk = &info.representative;
            for x in &class_elems[i] {
                let y = x.inverse().compose(gk);
                let j = classes.class_of(&y)?;
                m[j][k] += 1;
            }
        }
        for row in m.iter_mut() {
            for v in row.iter_mut() {
                *v %= p;
            }
        }
        Ok(m)
    };

    // iterated eigenspace splitting; a subspace is a row basis in rref form
    let mut spaces: Vec<(Matrix, Vec<usize>)> = {
        let mut full: Matrix = (0..r)
            .map(|i| {
                let mut row = vec![0u64; r];
                row[i] = 1;
                row
            })
            .collect();
        let piv = rref(f, &mut full);
        vec![(full, piv)]
    };
    for i in 1..r {
        if spaces.iter().all(|(b, _)| b.len() == 1) {
            break;
        }
        let m = class_matrix(i)?;
        let mut next = Vec::new();
        for (basis, pivots) in spaces {
            if basis.len() == 1 {
                next.push((basis, pivots));
                continue;
            }
            // restriction of M to the subspace, in basis coordinates
            let d = basis.len();
            let mut restricted: Matrix = vec![vec![0u64; d]; d];
            for (j, b) in basis.iter().enumerate() {
                let image = mat_vec(f, &m, b);
                let coords = coordinates(f, &basis, &pivots, &image).ok_or_else(|| {
                    Error::theory("class matrix does not preserve an eigenspace intersection")
                })?;
                for (row, c) in coords.into_iter().enumerate() {
                    restricted[row][j] = c;
                }
            }
            let poly = charpoly(f, &restricted);
            for lam in poly_roots(f, &poly) {
                // kernel of (restricted - lam I)
                let mut shifted = restricted.clone();
                for (idx, row) in shifted.iter_mut().enumerate() {
                    row[idx] = f.sub(row[idx], lam);
                }
                let ker = kernel_basis(f, &shifted, d);
                if ker.is_empty() {
                    continue;
                }
                // lift back to ambient coordinates
                let mut lifted: Matrix = ker
                    .iter()
                    .map(|coeffs| {
                        let mut v = vec![0u64; r];
                        for (ci, &c) in coeffs.iter().enumerate() {
                            for (vj, &bv) in basis[ci].iter().enumerate() {
                                v[vj] = f.add(v[vj], f.mul(c, bv));
                            }
                        }
                        v
                    })
                    .collect();
                let piv = rref(f, &mut lifted);
                next.push((lifted, piv));
            }
        }
        spaces = next;
    }
    if spaces.len() != r || spaces.iter().any(|(b, _)| b.len() != 1) {
        return Err(Error::theory(format!(
            "class algebra splitting produced {} spaces for {} classes",
            spaces.len(),
            r
        )));
    }

    // each line is a central character omega; recover chi from it
    let mut table = Vec::with_capacity(r);
    for (basis, _) in &spaces {
        let v = &basis[0];
        if v[0] == 0 {
            return Err(Error::theory(
                "central character vanishes on the identity class",
            ));
        }
        let scale = f.inv(v[0]);
        let omega: Vec<u64> = v.iter().map(|&x| f.mul(x, scale)).collect();
        // degree: chi(1)^2 = |G| / sum_k omega_k omega_{k'} / |C_k|
        let mut s = 0u64;
        for k in 0..r {
            let term = f.mul(omega[k], f.mul(omega[inv_class[k]], f.inv(sizes[k] % p)));
            s = f.add(s, term);
        }
        let d_sq = f.mul(order % p, f.inv(s));
        let degree = (1..p)
            .find(|&x| x < p.div_ceil(2) && f.mul(x, x) == d_sq)
            .ok_or_else(|| Error::theory("no degree square root below p/2"))?;
        // values mod p per class
        let vals_mod: Vec<u64> = (0..r)
            .map(|k| f.mul(degree, f.mul(omega[k], f.inv(sizes[k] % p))))
            .collect();
        // exact lift via eigenvalue multiplicities on each cyclic subgroup
        let mut row = Vec::with_capacity(r);
        for k in 0..r {
            let m_ord = classes.class(k).element_order;
            let zm = f.pow(z, e / m_ord);
            let zm_inv = f.inv(zm);
            let minv = mod_inverse(m_ord % p, p).expect("order invertible");
            let mut value = CyclotomicValue::zero();
            let mut mu_sum = 0u64;
            for j in 0..m_ord {
                let mut acc = 0u64;
                for t in 0..m_ord {
                    let cls = classes.power_class(k, t as i64);
                    let w = f.pow(zm_inv, (j * t) % m_ord);
                    acc = f.add(acc, f.mul(vals_mod[cls], w));
                }
                let mu = f.mul(acc, minv);
                if mu > degree {
                    return Err(Error::theory(format!(
                        "eigenvalue multiplicity {} exceeds the degree {}",
                        mu, degree
                    )));
                }
                if mu > 0 {
                    mu_sum += mu;
                    let root = CyclotomicValue::root_of_unity(m_ord, j as i64)?;
                    value = value.add(
                        &root.scale(&num_rational::BigRational::from_integer(BigInt::from(mu))),
                    );
                }
            }
            if mu_sum != degree {
                return Err(Error::theory(format!(
                    "multiplicities sum to {} but the degree is {}",
                    mu_sum, degree
                )));
            }
            row.push(value);
        }
        table.push(row);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::conjugacy_classes;

    fn perm(deg: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(deg, s).unwrap()
    }

    #[test]
    fn prime_selection() {
        // S4: order 24, exponent 12: need p = 1 mod 12, p > 2*sqrt(24) ~ 9.8
        assert_eq!(working_prime(24, 12), 13);
        // S3: order 6, exponent 6, p > 4.9, p = 1 mod 6
        assert_eq!(working_prime(6, 6), 7);
    }

    #[test]
    fn s3_degrees() {
        let g = PermGroup::new(3, vec![perm(3, "(1,2)"), perm(3, "(1,2,3)")]).unwrap();
        let cc = conjugacy_classes(&g, 0).unwrap();
        let table = dixon_table(&g, &cc).unwrap();
        let mut degrees: Vec<String> = table.iter().map(|row| row[0].to_string()).collect();
        degrees.sort();
        assert_eq!(degrees, vec!["1", "1", "2"]);
    }

    #[test]
    fn s4_degrees() {
        let g = PermGroup::new(4, vec![perm(4, "(1,2,3,4)"), perm(4, "(1,2)")]).unwrap();
        let cc = conjugacy_classes(&g, 0).unwrap();
        let table = dixon_table(&g, &cc).unwrap();
        let mut degrees: Vec<String> = table.iter().map(|row| row[0].to_string()).collect();
        degrees.sort();
        assert_eq!(degrees, vec!["1", "1", "2", "3", "3"]);
    }

    #[test]
    fn q8_degrees() {
        // Q8 in its regular representation
        let a = perm(8, "(1,2,3,4)(5,6,7,8)");
        let b = perm(8, "(1,5,3,7)(2,8,4,6)");
        let g = PermGroup::new(8, vec![a, b]).unwrap();
        assert_eq!(g.order(), 8);
        let cc = conjugacy_classes(&g, 0).unwrap();
        assert_eq!(cc.len(), 5);
        let table = dixon_table(&g, &cc).unwrap();
        let mut degrees: Vec<String> = table.iter().map(|row| row[0].to_string()).collect();
        degrees.sort();
        assert_eq!(degrees, vec!["1", "1", "1", "1", "2"]);
    }
}
