//! Permutations of `{0, .., n-1}` stored as image vectors.
//!
//! Products act on the right, GAP style: `(g * h)(i) = h(g(i))`, so that
//! `i^(gh) = (i^g)^h`.  External cycle notation is 1-based; everything
//! internal is 0-based.

use crate::arith::lcm_u64;
use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Build from an image vector, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n || seen[img] {
                return Err(Error::input(format!(
                    "image vector {:?} is not a bijection of 0..{}",
                    images, n
                )));
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self * other`: apply `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// `self^by = by^-1 * self * by`.
    pub fn conjugate_by(&self, by: &Permutation) -> Permutation {
        let inv = by.inverse();
        inv.compose(self).compose(by)
    }

    /// Commutator `[self, other] = self^-1 other^-1 self other`.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        self.inverse()
            .compose(&other.inverse())
            .compose(self)
            .compose(other)
    }

    pub fn pow(&self, n: i64) -> Permutation {
        let mut base = if n < 0 { self.inverse() } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    pub fn order(&self) -> u64 {
        let mut order = 1u64;
        for cycle in self.cycles() {
            order = lcm_u64(order, cycle.len() as u64);
        }
        order
    }

    /// Nontrivial cycles, each starting at its least point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.images[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.images[cur];
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        cycles
    }

    /// Parse 1-based cycle notation such as `(1,2)(3,4)`; `()` is the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let s = text.trim();
        if s.is_empty() || s == "()" {
            return Ok(Permutation { images });
        }
        let mut moved = vec![false; degree];
        let mut rest = s;
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(Error::input(format!(
                    "expected '(' in cycle string {:?}",
                    text
                )));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| Error::input(format!("unbalanced parentheses in {:?}", text)))?;
            let body = &rest[1..close];
            rest = rest[close + 1..].trim_start();
            if body.trim().is_empty() {
                continue;
            }
            let mut cycle = Vec::new();
            for part in body.split(',') {
                let v: usize = part
                    .trim()
                    .parse()
                    .map_err(|_| Error::input(format!("bad point {:?} in {:?}", part, text)))?;
                if v == 0 || v > degree {
                    return Err(Error::input(format!(
                        "point {} out of range 1..{} in {:?}",
                        v, degree, text
                    )));
                }
                let p = v - 1;
                if moved[p] {
                    return Err(Error::input(format!("point {} repeated in {:?}", v, text)));
                }
                moved[p] = true;
                cycle.push(p);
            }
            for i in 0..cycle.len() {
                images[cycle[i]] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation::from_images(images)
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_roundtrip() {
        let g = Permutation::parse_cycles(4, "(1,2)(3,4)").unwrap();
        assert_eq!(g.to_string(), "(1,2)(3,4)");
        let h = Permutation::parse_cycles(4, "(1,2,3,4)").unwrap();
        assert_eq!(h.apply(0), 1);
        assert_eq!(h.apply(3), 0);
        assert_eq!(h.order(), 4);
        let id = Permutation::parse_cycles(3, "()").unwrap();
        assert!(id.is_identity());
    }

    #[test]
    fn right_action_composition() {
        // (1,2) then (2,3): 1 -> 2 -> 3
        let a = Permutation::parse_cycles(3, "(1,2)").unwrap();
        let b = Permutation::parse_cycles(3, "(2,3)").unwrap();
        let ab = a.compose(&b);
        assert_eq!(ab.apply(0), 2);
        assert_eq!(ab.to_string(), "(1,3,2)");
    }

    #[test]
    fn inverse_and_conjugate() {
        let g = Permutation::parse_cycles(5, "(1,2,3,4,5)").unwrap();
        assert!(g.compose(&g.inverse()).is_identity());
        let t = Permutation::parse_cycles(5, "(1,2)").unwrap();
        // (1,2,3,4,5)^(1,2) relabels 1<->2 in the cycle
        let c = g.conjugate_by(&t);
        assert_eq!(c.to_string(), "(1,3,4,5,2)");
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0, 2]).is_err());
        assert!(Permutation::parse_cycles(3, "(1,4)").is_err());
        assert!(Permutation::parse_cycles(3, "(1,2)(2,3)").is_err());
    }

    #[test]
    fn pow_matches_repeated_composition() {
        let g = Permutation::parse_cycles(6, "(1,2,3)(4,5)").unwrap();
        assert_eq!(g.order(), 6);
        let mut acc = Permutation::identity(6);
        for k in 0..=6 {
            assert_eq!(g.pow(k), acc);
            acc = acc.compose(&g);
        }
        assert_eq!(g.pow(-1), g.inverse());
    }
}
