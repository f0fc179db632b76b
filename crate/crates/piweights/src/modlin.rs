//! Linear algebra over a prime field F_p, sized for the Dixon-Schneider
//! computation: subspace bases in reduced echelon form, characteristic
//! polynomials via Hessenberg reduction, eigenspaces by kernel computation.

// dense matrix kernels read better with explicit indices
#![allow(clippy::needless_range_loop)]

use crate::arith::{factorize, mod_inverse, mod_pow};

#[derive(Clone, Copy, Debug)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Fp {
        Fp { p }
    }
    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }
    pub fn inv(&self, a: u64) -> u64 {
        mod_inverse(a % self.p, self.p).expect("inverse in prime field")
    }
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }
    pub fn pow(&self, a: u64, e: u64) -> u64 {
        mod_pow(a, e, self.p)
    }
}

/// A generator of the multiplicative group of F_p.
pub fn primitive_root(p: u64) -> u64 {
    let f = Fp::new(p);
    let factors: Vec<u64> = factorize((p - 1) as u128).keys().copied().collect();
    'cand: for g in 2..p {
        for &q in &factors {
            if f.pow(g, (p - 1) / q) == 1 {
                continue 'cand;
            }
        }
        return g;
    }
    unreachable!("prime fields have primitive roots")
}

pub type Matrix = Vec<Vec<u64>>;

pub fn mat_vec(f: Fp, m: &Matrix, v: &[u64]) -> Vec<u64> {
    m.iter()
        .map(|row| {
            let mut acc: u128 = 0;
            for (a, b) in row.iter().zip(v.iter()) {
                acc += *a as u128 * *b as u128;
            }
            (acc % f.p as u128) as u64
        })
        .collect()
}

/// Reduced row echelon form in place; returns pivot column indices.
pub fn rref(f: Fp, m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        let Some(src) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, src);
        let inv = f.inv(m[r][c]);
        for v in m[r].iter_mut() {
            *v = f.mul(*v, inv);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let factor = m[i][c];
                for j in 0..cols {
                    let d = f.mul(factor, m[r][j]);
                    m[i][j] = f.sub(m[i][j], d);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    m.truncate(r);
    pivots
}

/// Basis of the kernel of `m` (rows = equations).
pub fn kernel_basis(f: Fp, m: &Matrix, cols: usize) -> Vec<Vec<u64>> {
    let mut work = m.clone();
    let pivots = rref(f, &mut work);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(work[i][free]);
        }
        basis.push(v);
    }
    basis
}

/// Coordinates of `v` in the row space of the echelonized `basis`
/// (`basis` must be in reduced echelon form with the given pivots).
pub fn coordinates(f: Fp, basis: &Matrix, pivots: &[usize], v: &[u64]) -> Option<Vec<u64>> {
    let mut rem = v.to_vec();
    let mut coords = Vec::with_capacity(basis.len());
    for (row, &pc) in basis.iter().zip(pivots.iter()) {
        let c = rem[pc];
        coords.push(c);
        if c != 0 {
            for j in 0..rem.len() {
                let d = f.mul(c, row[j]);
                rem[j] = f.sub(rem[j], d);
            }
        }
    }
    if rem.iter().all(|&x| x == 0) {
        Some(coords)
    } else {
        None
    }
}

/// Characteristic polynomial det(xI - A), monic, constant term first.
pub fn charpoly(f: Fp, a: &Matrix) -> Vec<u64> {
    let n = a.len();
    if n == 0 {
        return vec![1];
    }
    // similarity reduction to upper Hessenberg form
    let mut h = a.clone();
    for col in 0..n.saturating_sub(2) {
        let Some(piv) = ((col + 1)..n).find(|&r| h[r][col] != 0) else {
            continue;
        };
        if piv != col + 1 {
            h.swap(piv, col + 1);
            for row in h.iter_mut() {
                row.swap(piv, col + 1);
            }
        }
        let inv = f.inv(h[col + 1][col]);
        for r in (col + 2)..n {
            if h[r][col] == 0 {
                continue;
            }
            let factor = f.mul(h[r][col], inv);
            // row_r -= factor * row_{col+1}; col_{col+1} += factor * col_r
            for j in 0..n {
                let d = f.mul(factor, h[col + 1][j]);
                h[r][j] = f.sub(h[r][j], d);
            }
            for i in 0..n {
                let d = f.mul(factor, h[i][r]);
                h[i][col + 1] = f.add(h[i][col + 1], d);
            }
        }
    }
    // recurrence on leading principal minors of the Hessenberg matrix
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=n {
        // p_k = (x - h[k-1][k-1]) p_{k-1} - sum_m h[k-1-m][k-1] (prod subdiag) p_{k-1-m}
        let prev = &polys[k - 1];
        let mut pk = vec![0u64; k + 1];
        for (i, &c) in prev.iter().enumerate() {
            pk[i + 1] = f.add(pk[i + 1], c);
            let d = f.mul(h[k - 1][k - 1], c);
            pk[i] = f.sub(pk[i], d);
        }
        let mut subdiag: u64 = 1;
        for m in 1..k {
            subdiag = f.mul(subdiag, h[k - m][k - m - 1]);
            if subdiag == 0 {
                break;
            }
            let coef = f.mul(h[k - 1 - m][k - 1], subdiag);
            if coef == 0 {
                continue;
            }
            for (i, &c) in polys[k - 1 - m].iter().enumerate() {
                let d = f.mul(coef, c);
                pk[i] = f.sub(pk[i], d);
            }
        }
        polys.push(pk);
    }
    polys.pop().unwrap()
}

pub fn poly_eval(f: Fp, poly: &[u64], x: u64) -> u64 {
    let mut acc = 0u64;
    for &c in poly.iter().rev() {
        acc = f.add(f.mul(acc, x), c);
    }
    acc
}

/// All roots in F_p by scanning the field.
pub fn poly_roots(f: Fp, poly: &[u64]) -> Vec<u64> {
    (0..f.p).filter(|&x| poly_eval(f, poly, x) == 0).collect()
}
