//! Exhaustive triple checks for the identities a pair map can satisfy.
//!
//! Maps on `M³` are written as the leg operators `s12 = s × id`,
//! `s23 = id × s` and `s13 = (id × τ) s12 (id × τ)`. Compositions read
//! right to left, so `s23 s13 s12` applies `s12` first.

use std::fmt;

use serde::Serialize;

use crate::algebra::Element;

use super::PairMap;

pub type Triple = [Element; 3];

/// Outcome of an exhaustive check: either the identity holds on every
/// triple or the lexicographically least failing triple is reported.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    FailsAt(Triple),
}

impl Verdict {
    pub fn holds(self) -> bool {
        self == Verdict::Holds
    }

    pub fn witness(self) -> Option<Triple> {
        match self {
            Verdict::Holds => None,
            Verdict::FailsAt(t) => Some(t),
        }
    }
}

/// The three componentwise conditions equivalent to the pentagon identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    /// `(x·y)·z = x·(y·z)`
    Associativity,
    /// `(x∗y)·((x·y)∗z) = x∗(y·z)`
    Mixed,
    /// `(x∗y)∗((x·y)∗z) = y∗z`
    StarCocycle,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::Associativity => "(x.y).z = x.(y.z)",
            Condition::Mixed => "(x*y).((x.y)*z) = x*(y.z)",
            Condition::StarCocycle => "(x*y)*((x.y)*z) = y*z",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConditionVerdict {
    Holds,
    Fails { condition: Condition, at: Triple },
}

impl ConditionVerdict {
    pub fn holds(self) -> bool {
        self == ConditionVerdict::Holds
    }
}

impl PairMap {
    #[inline]
    fn s12(&self, [x, y, z]: Triple) -> Triple {
        let (a, b) = self.apply(x, y);
        [a, b, z]
    }

    #[inline]
    fn s23(&self, [x, y, z]: Triple) -> Triple {
        let (b, c) = self.apply(y, z);
        [x, b, c]
    }

    #[inline]
    fn s13(&self, t: Triple) -> Triple {
        swap23(self.s12(swap23(t)))
    }

    fn first_failure(&self, mut differs: impl FnMut(Triple) -> bool) -> Verdict {
        let n = self.size();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if differs([x, y, z]) {
                        return Verdict::FailsAt([x, y, z]);
                    }
                }
            }
        }
        Verdict::Holds
    }
}

/// `id × τ` on `M³`.
#[inline]
fn swap23([x, y, z]: Triple) -> Triple {
    [x, z, y]
}

/// `s23 s13 s12 = s12 s23`, evaluated on every triple.
pub fn is_solution_direct(s: &PairMap) -> Verdict {
    s.first_failure(|t| s.s23(s.s13(s.s12(t))) != s.s12(s.s23(t)))
}

/// `s12 s13 s23 = s23 s12`, evaluated on every triple.
pub fn is_reversed_solution(s: &PairMap) -> Verdict {
    s.first_failure(|t| s.s12(s.s13(s.s23(t))) != s.s23(s.s12(t)))
}

/// `s12 s13 = s13 s12`.
pub fn is_commutative(s: &PairMap) -> Verdict {
    s.first_failure(|t| s.s12(s.s13(t)) != s.s13(s.s12(t)))
}

/// `s13 s23 = s23 s13`.
pub fn is_cocommutative(s: &PairMap) -> Verdict {
    s.first_failure(|t| s.s13(s.s23(t)) != s.s23(s.s13(t)))
}

/// Checks associativity of the dot table and the two mixed conditions,
/// triple by triple, reporting the first condition to fail at the least
/// failing triple.
pub fn is_solution_conditions(s: &PairMap) -> ConditionVerdict {
    let n = s.size();
    for x in 0..n {
        for y in 0..n {
            let xy = s.dot(x, y);
            let x_y = s.star(x, y);
            for z in 0..n {
                let yz = s.dot(y, z);
                if s.dot(xy, z) != s.dot(x, yz) {
                    return ConditionVerdict::Fails {
                        condition: Condition::Associativity,
                        at: [x, y, z],
                    };
                }
                let xy_z = s.star(xy, z);
                if s.dot(x_y, xy_z) != s.star(x, yz) {
                    return ConditionVerdict::Fails {
                        condition: Condition::Mixed,
                        at: [x, y, z],
                    };
                }
                if s.star(x_y, xy_z) != s.star(y, z) {
                    return ConditionVerdict::Fails {
                        condition: Condition::StarCocycle,
                        at: [x, y, z],
                    };
                }
            }
        }
    }
    ConditionVerdict::Holds
}

/// The decidable attributes of a pair map.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct SolutionProfile {
    pub is_solution: bool,
    pub is_reversed: bool,
    pub is_invertible: bool,
    pub is_commutative: bool,
    pub is_cocommutative: bool,
}

impl SolutionProfile {
    pub fn as_array(&self) -> [bool; 5] {
        [
            self.is_solution,
            self.is_reversed,
            self.is_invertible,
            self.is_commutative,
            self.is_cocommutative,
        ]
    }
}

impl fmt::Display for SolutionProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = [
            "solution",
            "reversed",
            "invertible",
            "commutative",
            "cocommutative",
        ];
        let parts: Vec<String> = names
            .iter()
            .zip(self.as_array())
            .map(|(name, v)| format!("{name}={v}"))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

pub fn profile(s: &PairMap) -> SolutionProfile {
    SolutionProfile {
        is_solution: is_solution_direct(s).holds(),
        is_reversed: is_reversed_solution(s).holds(),
        is_invertible: s.is_invertible(),
        is_commutative: is_commutative(s).holds(),
        is_cocommutative: is_cocommutative(s).holds(),
    }
}
