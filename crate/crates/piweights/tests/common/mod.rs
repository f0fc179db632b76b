//! Brute-force and numeric oracles, independent of the library's algorithmic
//! paths: element enumeration by multiplication closure (no stabilizer
//! chains), subgroup enumeration by adjoining single elements, and character
//! extraction from a numeric eigendecomposition of the regular
//! representation.

// shared by several test binaries, none of which uses all of it
#![allow(dead_code)]

use piweights::{PermGroup, Permutation};
use std::collections::{HashMap, HashSet};

/// All elements by breadth-first multiplication closure over the generators.
pub fn closure_elements(degree: usize, gens: &[Permutation]) -> Vec<Permutation> {
    let mut seen: HashSet<Permutation> = HashSet::new();
    let id = Permutation::identity(degree);
    seen.insert(id.clone());
    let mut queue = vec![id];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i].clone();
        for g in gens {
            let y = x.compose(g);
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
        i += 1;
    }
    let mut out: Vec<Permutation> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

pub fn group_elements(group: &PermGroup) -> Vec<Permutation> {
    closure_elements(group.degree(), group.generators())
}

/// Conjugacy classes by conjugating with every element.
pub fn brute_classes(elements: &[Permutation]) -> Vec<Vec<Permutation>> {
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut classes = Vec::new();
    for x in elements {
        if seen.contains(x) {
            continue;
        }
        let mut class: Vec<Permutation> = elements
            .iter()
            .map(|g| x.conjugate_by(g))
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        class.sort_unstable();
        for y in &class {
            seen.insert(y.clone());
        }
        classes.push(class);
    }
    classes.sort_by(|a, b| a[0].cmp(&b[0]));
    classes
}

pub fn brute_centralizer(elements: &[Permutation], x: &Permutation) -> Vec<Permutation> {
    elements
        .iter()
        .filter(|g| x.conjugate_by(g) == *x)
        .cloned()
        .collect()
}

pub fn brute_normalizer(elements: &[Permutation], sub: &[Permutation]) -> Vec<Permutation> {
    let members: HashSet<&Permutation> = sub.iter().collect();
    elements
        .iter()
        .filter(|g| sub.iter().all(|h| members.contains(&h.conjugate_by(g))))
        .cloned()
        .collect()
}

/// Closed set of elements generated by a seed set, by plain multiplication.
fn closure_of_set(degree: usize, seed: &[Permutation]) -> Vec<Permutation> {
    closure_elements(degree, seed)
}

/// Every subgroup, as a sorted element list, by adjoining single elements.
pub fn brute_all_subgroups(degree: usize, elements: &[Permutation]) -> Vec<Vec<Permutation>> {
    let mut found: HashSet<Vec<Permutation>> = HashSet::new();
    let trivial = vec![Permutation::identity(degree)];
    found.insert(trivial.clone());
    let mut queue = vec![trivial];
    let mut i = 0;
    while i < queue.len() {
        let current = queue[i].clone();
        for x in elements {
            if current.contains(x) {
                continue;
            }
            let mut seed = current.clone();
            seed.push(x.clone());
            let bigger = closure_of_set(degree, &seed);
            if found.insert(bigger.clone()) {
                queue.push(bigger);
            }
        }
        i += 1;
    }
    let mut out: Vec<Vec<Permutation>> = found.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Partition subgroups (as element lists) into conjugacy classes.
pub fn brute_subgroup_classes(
    elements: &[Permutation],
    subgroups: &[Vec<Permutation>],
) -> Vec<Vec<Vec<Permutation>>> {
    let mut seen: HashSet<Vec<Permutation>> = HashSet::new();
    let mut classes = Vec::new();
    for sub in subgroups {
        if seen.contains(sub) {
            continue;
        }
        let mut orbit: HashSet<Vec<Permutation>> = HashSet::new();
        for g in elements {
            let mut conj: Vec<Permutation> = sub.iter().map(|h| h.conjugate_by(g)).collect();
            conj.sort_unstable();
            orbit.insert(conj);
        }
        let mut orbit: Vec<Vec<Permutation>> = orbit.into_iter().collect();
        orbit.sort();
        for s in &orbit {
            seen.insert(s.clone());
        }
        classes.push(orbit);
    }
    classes
}

// ----------------------------------------------------------------------
// Numeric regular-representation oracle
// ----------------------------------------------------------------------

/// Jacobi eigendecomposition of a real symmetric matrix; returns
/// (eigenvalues, eigenvectors as rows).
pub fn jacobi_eigen(mut a: Vec<Vec<f64>>) -> (Vec<f64>, Vec<Vec<f64>>) {
    let n = a.len();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    for _sweep in 0..100 {
        let mut off = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                off += a[i][j] * a[i][j];
            }
        }
        if off < 1e-24 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if a[p][q].abs() < 1e-15 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k][p];
                    let vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let eigenvalues: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    // columns of v are eigenvectors; return as rows
    let eigenvectors: Vec<Vec<f64>> = (0..n).map(|j| (0..n).map(|i| v[i][j]).collect()).collect();
    (eigenvalues, eigenvectors)
}

/// Numeric irreducible characters from the regular representation: returns
/// one `(degree, values per class)` row per irreducible, in no particular
/// order, accurate to roughly 1e-8.  Returns `None` when the random central
/// element failed to separate the isotypic components (retry with another
/// seed).
pub fn regular_representation_characters(
    elements: &[Permutation],
    classes: &[Vec<Permutation>],
    seed: u64,
) -> Option<Vec<(usize, Vec<(f64, f64)>)>> {
    let n = elements.len();
    let index: HashMap<&Permutation, usize> = elements.iter().zip(0..).collect();
    // regular representation: rho(g)[i][j] = 1 iff e_i g = e_j
    let rho = |g: &Permutation| -> Vec<Vec<f64>> {
        let mut m = vec![vec![0.0; n]; n];
        for (i, x) in elements.iter().enumerate() {
            let j = index[&x.compose(g)];
            m[i][j] = 1.0;
        }
        m
    };
    // Hermitian central element sum_k c_k K_k with conjugate-symmetric
    // coefficients across inverse classes
    let mut rng = piweights::rng::SplitMix64::new(seed);
    let mut coeff: HashMap<usize, (f64, f64)> = HashMap::new();
    let class_of = |x: &Permutation| -> usize {
        classes
            .iter()
            .position(|c| c.binary_search(x).is_ok())
            .unwrap()
    };
    for (k, class) in classes.iter().enumerate() {
        if coeff.contains_key(&k) {
            continue;
        }
        let kinv = class_of(&class[0].inverse());
        let re = (rng.below(1000) as f64) / 500.0 - 1.0;
        let im = (rng.below(1000) as f64) / 500.0 - 1.0;
        if kinv == k {
            coeff.insert(k, (re, 0.0));
        } else {
            coeff.insert(k, (re, im));
            coeff.insert(kinv, (re, -im));
        }
    }
    let mut re_part = vec![vec![0.0; n]; n];
    let mut im_part = vec![vec![0.0; n]; n];
    for (k, class) in classes.iter().enumerate() {
        let (cr, ci) = coeff[&k];
        for x in class {
            let m = rho(x);
            for i in 0..n {
                for j in 0..n {
                    re_part[i][j] += cr * m[i][j];
                    im_part[i][j] += ci * m[i][j];
                }
            }
        }
    }
    // real symmetric embedding [[A, -B], [B, A]] of the Hermitian A + iB
    let mut big = vec![vec![0.0; 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            big[i][j] = re_part[i][j];
            big[i][j + n] = -im_part[i][j];
            big[i + n][j] = im_part[i][j];
            big[i + n][j + n] = re_part[i][j];
        }
    }
    let (eigenvalues, eigenvectors) = jacobi_eigen(big);
    // cluster eigenvalues
    let mut order: Vec<usize> = (0..2 * n).collect();
    order.sort_by(|&a, &b| eigenvalues[a].partial_cmp(&eigenvalues[b]).unwrap());
    let mut clusters: Vec<Vec<usize>> = Vec::new();
    for &i in &order {
        match clusters.last_mut() {
            Some(cluster)
                if (eigenvalues[i] - eigenvalues[*cluster.last().unwrap()]).abs() < 1e-6 =>
            {
                cluster.push(i)
            }
            _ => clusters.push(vec![i]),
        }
    }
    if clusters.len() != classes.len() {
        return None;
    }
    let mut rows = Vec::new();
    for cluster in &clusters {
        // complex projector X + iY from the real projector onto the cluster
        let dim2 = cluster.len();
        if dim2 % 2 != 0 {
            return None;
        }
        let cdim = dim2 / 2;
        let degree = (cdim as f64).sqrt().round() as usize;
        if degree * degree != cdim {
            return None;
        }
        let mut x_block = vec![vec![0.0; n]; n];
        let mut y_block = vec![vec![0.0; n]; n];
        for &e in cluster {
            let w = &eigenvectors[e];
            for i in 0..n {
                for j in 0..n {
                    // P_real = sum w w^T; X = top-left block, Y = bottom-left
                    x_block[i][j] += w[i] * w[j];
                    y_block[i][j] += w[i + n] * w[j];
                }
            }
        }
        // chi(g) = tr((X + iY) rho(g)) / chi(1)
        let mut values = Vec::new();
        for class in classes {
            let m = rho(&class[0]);
            let mut tr_re = 0.0;
            let mut tr_im = 0.0;
            for i in 0..n {
                for j in 0..n {
                    tr_re += x_block[i][j] * m[j][i];
                    tr_im += y_block[i][j] * m[j][i];
                }
            }
            values.push((tr_re / degree as f64, tr_im / degree as f64));
        }
        rows.push((degree, values));
    }
    Some(rows)
}
