//! The built-in group corpus and the group-file parser.
//!
//! Every builtin carries explicit cycle-notation generators.  The matrix
//! groups act on the eight nonzero vectors of F_3^2, labeled
//! (0,1),(0,2),(1,0),(1,1),(1,2),(2,0),(2,1),(2,2) = 1..8, with a row vector
//! `v` sent to `v*M`; the Heisenberg group acts on F_3^2 = 9 points labeled
//! `3x+y+1` by the translation `x -> x+1` and the shear `y -> y+x`; Q8 is in
//! its regular representation with 1,i,-1,-i,j,k,-j,-k = 1..8.

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::pi::PiConfig;

pub struct BuiltinGroup {
    pub name: &'static str,
    pub degree: usize,
    pub generators: &'static [&'static str],
    pub order: u128,
}

pub const BUILTINS: &[BuiltinGroup] = &[
    BuiltinGroup {
        name: "C2",
        degree: 2,
        generators: &["(1,2)"],
        order: 2,
    },
    BuiltinGroup {
        name: "C3",
        degree: 3,
        generators: &["(1,2,3)"],
        order: 3,
    },
    BuiltinGroup {
        name: "C6",
        degree: 5,
        generators: &["(1,2)(3,4,5)"],
        order: 6,
    },
    BuiltinGroup {
        name: "S3",
        degree: 3,
        generators: &["(1,2)", "(1,2,3)"],
        order: 6,
    },
    BuiltinGroup {
        name: "D8",
        degree: 4,
        generators: &["(1,2,3,4)", "(1,3)"],
        order: 8,
    },
    BuiltinGroup {
        name: "Q8",
        degree: 8,
        generators: &["(1,2,3,4)(5,8,7,6)", "(1,5,3,7)(2,6,4,8)"],
        order: 8,
    },
    BuiltinGroup {
        name: "A4",
        degree: 4,
        generators: &["(1,2)(3,4)", "(1,2,3)"],
        order: 12,
    },
    BuiltinGroup {
        name: "S4",
        degree: 4,
        generators: &["(1,2,3,4)", "(1,2)"],
        order: 24,
    },
    BuiltinGroup {
        name: "SL(2,3)",
        degree: 8,
        generators: &["(3,4,5)(6,8,7)", "(1,3,2,6)(4,5,8,7)"],
        order: 24,
    },
    BuiltinGroup {
        name: "F20",
        degree: 5,
        generators: &["(1,2,3,4,5)", "(2,3,5,4)"],
        order: 20,
    },
    BuiltinGroup {
        name: "C3:C4",
        degree: 7,
        generators: &["(1,2,3)", "(2,3)(4,5,6,7)"],
        order: 12,
    },
    BuiltinGroup {
        name: "S3xC3",
        degree: 6,
        generators: &["(1,2)", "(1,2,3)", "(4,5,6)"],
        order: 18,
    },
    BuiltinGroup {
        name: "D12",
        degree: 6,
        generators: &["(1,2,3,4,5,6)", "(2,6)(3,5)"],
        order: 12,
    },
    BuiltinGroup {
        name: "E27",
        degree: 9,
        generators: &["(1,4,7)(2,5,8)(3,6,9)", "(4,5,6)(7,9,8)"],
        order: 27,
    },
    BuiltinGroup {
        name: "GL(2,3)",
        degree: 8,
        generators: &["(3,4,5)(6,8,7)", "(1,3,2,6)(4,5,8,7)", "(3,6)(4,7)(5,8)"],
        order: 48,
    },
    BuiltinGroup {
        name: "A5",
        degree: 5,
        generators: &["(1,2,3,4,5)", "(3,4,5)"],
        order: 60,
    },
];

fn normalize(name: &str) -> String {
    name.chars()
        .filter(|c| c.is_alphanumeric())
        .collect::<String>()
        .to_ascii_uppercase()
}

/// A builtin group by (normalized) name, e.g. `SL(2,3)` or `sl23`.
pub fn builtin(name: &str) -> Result<PermGroup> {
    let want = normalize(name);
    for b in BUILTINS {
        if normalize(b.name) == want {
            let gens = b
                .generators
                .iter()
                .map(|s| Permutation::parse_cycles(b.degree, s))
                .collect::<Result<Vec<_>>>()?;
            let g = PermGroup::new(b.degree, gens)?;
            if g.order() != b.order {
                return Err(Error::theory(format!(
                    "builtin {} has order {} instead of {}",
                    b.name,
                    g.order(),
                    b.order
                )));
            }
            return Ok(g);
        }
    }
    Err(Error::input(format!(
        "unknown builtin group {:?}; available: {}",
        name,
        BUILTINS
            .iter()
            .map(|b| b.name)
            .collect::<Vec<_>>()
            .join(", ")
    )))
}

/// The whole builtin corpus in its documented order.
pub fn full_corpus() -> Result<Vec<(String, PermGroup)>> {
    BUILTINS
        .iter()
        .map(|b| Ok((b.name.to_string(), builtin(b.name)?)))
        .collect()
}

/// Parse a corpus file: records separated by blank lines, each of
///
/// ```text
/// name: S3
/// degree: 3
/// gens:
/// (1,2)
/// (1,2,3)
/// ```
///
/// with `name:` optional.
pub fn parse_group_file(text: &str) -> Result<Vec<(String, PermGroup)>> {
    enum State {
        Outside,
        WantGens,
        InGens,
    }
    let mut out = Vec::new();
    let mut state = State::Outside;
    let mut name: Option<String> = None;
    let mut degree: Option<usize> = None;
    let mut gens: Vec<Permutation> = Vec::new();
    let flush = |name: &mut Option<String>,
                 degree: &mut Option<usize>,
                 gens: &mut Vec<Permutation>,
                 out: &mut Vec<(String, PermGroup)>,
                 line_no: usize|
     -> Result<()> {
        if degree.is_none() && gens.is_empty() && name.is_none() {
            return Ok(());
        }
        let d = degree.take().ok_or_else(|| {
            Error::input(format!("record ending at line {} has no degree", line_no))
        })?;
        let group = PermGroup::new(d, std::mem::take(gens))?;
        let label = name
            .take()
            .unwrap_or_else(|| format!("group_of_order_{}", group.order()));
        out.push((label, group));
        Ok(())
    };
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            flush(&mut name, &mut degree, &mut gens, &mut out, line_no)?;
            state = State::Outside;
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("name:") {
            name = Some(rest.trim().to_string());
            state = State::Outside;
        } else if let Some(rest) = line.strip_prefix("degree:") {
            let d: usize = rest.trim().parse().map_err(|_| {
                Error::input(format!("line {}: bad degree {:?}", line_no, rest.trim()))
            })?;
            if d == 0 || d > 10_000 {
                return Err(Error::input(format!(
                    "line {}: degree out of range",
                    line_no
                )));
            }
            degree = Some(d);
            state = State::Outside;
        } else if line == "gens:" {
            if degree.is_none() {
                return Err(Error::input(format!(
                    "line {}: gens before degree",
                    line_no
                )));
            }
            state = State::WantGens;
        } else {
            match state {
                State::WantGens | State::InGens => {
                    let d = degree.expect("degree checked at gens:");
                    let p = Permutation::parse_cycles(d, line)
                        .map_err(|e| Error::input(format!("line {}: {}", line_no, e)))?;
                    gens.push(p);
                    state = State::InGens;
                }
                State::Outside => {
                    return Err(Error::input(format!(
                        "line {}: unexpected content {:?}",
                        line_no, line
                    )));
                }
            }
        }
    }
    flush(
        &mut name,
        &mut degree,
        &mut gens,
        &mut out,
        text.lines().count(),
    )?;
    if out.is_empty() {
        return Err(Error::input("no group records found"));
    }
    Ok(out)
}

/// All pi-configurations over the prime divisors of `|G|`, in binary-counter
/// order over the sorted primes (so the empty set comes first and the full
/// set last).
pub fn enumerate_pi_choices(group: &PermGroup) -> Vec<PiConfig> {
    let primes: Vec<u64> = crate::arith::factorize(group.order())
        .keys()
        .copied()
        .collect();
    let mut out = Vec::with_capacity(1 << primes.len());
    for mask in 0u32..(1 << primes.len()) {
        let subset = primes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &p)| p);
        out.push(PiConfig::from_primes(subset).expect("primes of the order"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_builtins_have_documented_orders() {
        for b in BUILTINS {
            let g = builtin(b.name).unwrap();
            assert_eq!(g.order(), b.order, "order of {}", b.name);
            assert_eq!(g.degree(), b.degree, "degree of {}", b.name);
        }
    }

    #[test]
    fn structural_spot_checks() {
        // Q8: one involution, exponent 4, non-abelian
        let q8 = builtin("Q8").unwrap();
        let invols = q8
            .elements()
            .unwrap()
            .iter()
            .filter(|x| x.order() == 2)
            .count();
        assert_eq!(invols, 1);
        assert!(!crate::group::is_nilpotent(&builtin("S3").unwrap()));
        assert!(crate::group::is_nilpotent(&q8));

        // E27: extraspecial of exponent 3
        let e27 = builtin("E27").unwrap();
        assert!(e27.elements().unwrap().iter().all(|x| x.order() <= 3));
        assert!(!crate::group::is_abelian_group(&e27));
        assert!(crate::group::is_nilpotent(&e27));

        // C3:C4 is the dicyclic group: a unique involution
        let dic3 = builtin("C3:C4").unwrap();
        let invols = dic3
            .elements()
            .unwrap()
            .iter()
            .filter(|x| x.order() == 2)
            .count();
        assert_eq!(invols, 1);

        // F20 is a Frobenius group: trivial center
        let f20 = builtin("F20").unwrap();
        let center = crate::group::centralizer_of_subgroup(&f20, &f20).unwrap();
        assert!(center.is_trivial());

        // GL(2,3) contains SL(2,3) with index 2
        let gl = builtin("GL(2,3)").unwrap();
        let sl = builtin("SL23").unwrap();
        assert!(sl.is_subgroup_of(&gl));
        assert_eq!(gl.order() / sl.order(), 2);
    }

    #[test]
    fn name_normalization() {
        assert!(builtin("sl23").is_ok());
        assert!(builtin("SL(2,3)").is_ok());
        assert!(builtin("gl(2,3)").is_ok());
        assert!(builtin("nonexistent").is_err());
    }

    #[test]
    fn parse_round_trip() {
        let text =
            "name: S3\ndegree: 3\ngens:\n(1,2)\n(1,2,3)\n\nname: trivial\ndegree: 1\ngens:\n";
        let parsed = parse_group_file(text).unwrap();
        assert_eq!(parsed.len(), 2);
        assert_eq!(parsed[0].0, "S3");
        assert_eq!(parsed[0].1.order(), 6);
        assert_eq!(parsed[1].1.order(), 1);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_group_file("degree: 3\ngens:\n(1,4)\n").unwrap_err();
        assert!(err.to_string().contains("line 3"));
        let err2 = parse_group_file("gens:\n(1,2)\n").unwrap_err();
        assert!(err2.to_string().contains("line 1"));
    }

    #[test]
    fn pi_choice_enumeration() {
        let s3 = builtin("S3").unwrap();
        let choices = enumerate_pi_choices(&s3);
        assert_eq!(choices.len(), 4);
        assert!(choices[0].primes().is_empty());
        assert_eq!(choices[3].primes().len(), 2);
        let c2 = builtin("C2").unwrap();
        assert_eq!(enumerate_pi_choices(&c2).len(), 2);
        let s4 = builtin("S4").unwrap();
        assert_eq!(enumerate_pi_choices(&s4).len(), 4);
    }
}
