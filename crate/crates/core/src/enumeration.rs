//! Exhaustive and theorem-driven enumeration of solutions, classification
//! up to equivalence, and the searches over maps whose second component is
//! a group.
//!
//! All scans run in parallel over candidate codes; results are collected
//! into ordered sets so reports never depend on the thread schedule.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{
    decode_base, normal_subgroups, representative_systems, Element, Group, Magma,
};
use crate::error::{Error, Result};
use crate::pentagon::{are_equivalent, is_solution_direct, profile, PairMap, SolutionProfile};
use crate::theta::{coset_solution, decompose};

/// Default budget for scanning every map on `M × M`: `(n²)^(n²)` at `n = 2`.
pub const RAW_BUDGET: u128 = 256;
/// Default budget for scanning every second component with a fixed first
/// component: `n^(n²)` at `n = 3`.
pub const FIXED_DOT_BUDGET: u128 = 19_683;
/// Default budget for the `θ_1` scan: `n^n` at `n = 8`.
pub const THETA_BUDGET: u128 = 16_777_216;
/// Default budget for scanning first components against a group.
pub const DOT_SCAN_BUDGET: u128 = 19_683;
/// Largest carrier `classify` accepts.
pub const CLASSIFY_MAX: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Raw,
    ThetaScan,
    Theorem,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Raw => "raw",
            Method::ThetaScan => "theta-scan",
            Method::Theorem => "theorem",
        })
    }
}

/// A canonically sorted list of solutions with their profiles and,
/// optionally, their partition into equivalence classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationReport {
    pub carrier: String,
    pub n: usize,
    pub method: Method,
    pub solutions: Vec<PairMap>,
    pub profiles: Vec<SolutionProfile>,
    /// Indices into `solutions`; each class sorted, classes ordered by
    /// their least member, which is the representative.
    pub classes: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub solutions: usize,
    pub reversed: usize,
    pub invertible: usize,
    pub commutative: usize,
    pub cocommutative: usize,
}

impl EnumerationReport {
    fn new(carrier: String, n: usize, method: Method, set: BTreeSet<PairMap>) -> Self {
        let solutions: Vec<PairMap> = set.into_iter().collect();
        let profiles = solutions.par_iter().map(profile).collect();
        EnumerationReport {
            carrier,
            n,
            method,
            solutions,
            profiles,
            classes: None,
        }
    }

    pub fn with_carrier(mut self, carrier: impl Into<String>) -> Self {
        self.carrier = carrier.into();
        self
    }

    pub fn count(&self) -> usize {
        self.solutions.len()
    }

    pub fn counts(&self) -> Counts {
        let tally = |f: fn(&SolutionProfile) -> bool| self.profiles.iter().filter(|p| f(p)).count();
        Counts {
            solutions: self.count(),
            reversed: tally(|p| p.is_reversed),
            invertible: tally(|p| p.is_invertible),
            commutative: tally(|p| p.is_commutative),
            cocommutative: tally(|p| p.is_cocommutative),
        }
    }

    /// Whether two reports list exactly the same maps.
    pub fn same_solutions(&self, other: &EnumerationReport) -> bool {
        self.solutions == other.solutions
    }

    pub fn contains(&self, s: &PairMap) -> bool {
        self.solutions.binary_search(s).is_ok()
    }
}

fn group_carrier(g: &Group) -> String {
    format!("group of order {}", g.order())
}

fn check_budget(what: &'static str, required: u128, budget: u128) -> Result<()> {
    if required > budget {
        return Err(Error::BudgetExceeded {
            what,
            required,
            budget,
        });
    }
    Ok(())
}

fn power(base: usize, exp: usize) -> u128 {
    u32::try_from(exp)
        .ok()
        .and_then(|e| (base as u128).checked_pow(e))
        .unwrap_or(u128::MAX)
}

/// Every map on `{0..n}²` satisfying the pentagon identity, optionally with
/// a prescribed first component, under the default budgets.
pub fn enumerate_raw(n: usize, fixed_dot: Option<&Magma>) -> Result<EnumerationReport> {
    let budget = if fixed_dot.is_some() {
        FIXED_DOT_BUDGET
    } else {
        RAW_BUDGET
    };
    enumerate_raw_within(n, fixed_dot, budget)
}

pub fn enumerate_raw_within(
    n: usize,
    fixed_dot: Option<&Magma>,
    budget: u128,
) -> Result<EnumerationReport> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    let cells = n * n;
    let (total, carrier) = match fixed_dot {
        Some(dot) => {
            if dot.size() != n {
                return Err(Error::SizeMismatch {
                    left: n,
                    right: dot.size(),
                });
            }
            (power(n, cells), format!("set of size {n} with fixed dot"))
        }
        None => (power(n, 2 * cells), format!("set of size {n}")),
    };
    check_budget("raw pentagon scan", total, budget)?;
    let found: BTreeSet<PairMap> = (0..total as u64)
        .into_par_iter()
        .filter_map(|code| {
            let s = match fixed_dot {
                Some(dot) => {
                    PairMap::from_flat(n, dot.table().to_vec(), decode_base(code, n, cells))
                }
                None => {
                    let mut digits = decode_base(code, n, 2 * cells);
                    let star = digits.split_off(cells);
                    PairMap::from_flat(n, digits, star)
                }
            };
            is_solution_direct(&s).holds().then_some(s)
        })
        .collect();
    Ok(EnumerationReport::new(carrier, n, Method::Raw, found))
}

/// Scans every candidate `θ_1`, rebuilds `θ_x(y) = θ_1(x)⁻¹ θ_1(xy)` and
/// keeps the candidates whose `θ` satisfies both `θ` conditions.
///
/// A candidate whose rebuilt identity row differs from itself (that is,
/// `θ_1(1) ≠ 1`) is skipped: the rebuild is unchanged by multiplying `θ_1`
/// on the left by a constant, so it duplicates the candidate
/// `θ_1(1)⁻¹ θ_1`, which is also scanned.
pub fn enumerate_on_group(g: &Group) -> Result<EnumerationReport> {
    enumerate_on_group_within(g, THETA_BUDGET)
}

pub fn enumerate_on_group_within(g: &Group, budget: u128) -> Result<EnumerationReport> {
    let n = g.order();
    let total = power(n, n);
    check_budget("theta scan", total, budget)?;
    let e = g.identity();
    let found: BTreeSet<PairMap> = (0..total as u64)
        .into_par_iter()
        .map_init(
            || (vec![0; n], vec![0; n * n]),
            |(t1, theta), code| {
                let mut c = code;
                for slot in t1.iter_mut().rev() {
                    *slot = (c % n as u64) as usize;
                    c /= n as u64;
                }
                if t1[e] != e {
                    return None;
                }
                for x in 0..n {
                    let left = g.inv(t1[x]);
                    for y in 0..n {
                        theta[x * n + y] = g.mul(left, t1[g.mul(x, y)]);
                    }
                }
                theta_conditions_hold(g, theta)
                    .then(|| PairMap::from_flat(n, g.magma().table().to_vec(), theta.clone()))
            },
        )
        .flatten()
        .collect();
    Ok(EnumerationReport::new(
        group_carrier(g),
        n,
        Method::ThetaScan,
        found,
    ))
}

fn theta_conditions_hold(g: &Group, theta: &[Element]) -> bool {
    let n = g.order();
    let th = |x: Element, y: Element| theta[x * n + y];
    for x in 0..n {
        for y in 0..n {
            let xy = g.mul(x, y);
            let t = th(x, y);
            for z in 0..n {
                let txy_z = th(xy, z);
                if th(t, txy_z) != th(y, z) || g.mul(t, txy_z) != th(x, g.mul(y, z)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Every coset solution over all normal subgroups `K` and all systems of
/// representatives `R ∋ 1`. Each solution is decomposed again to certify
/// that it came from exactly one `(K, R)`.
pub fn enumerate_by_theorem(g: &Group) -> Result<EnumerationReport> {
    let mut data = Vec::new();
    for k in normal_subgroups(g) {
        for reps in representative_systems(g, &k)? {
            data.push((k.clone(), reps));
        }
    }
    let solutions: Vec<PairMap> = data
        .par_iter()
        .map(|(k, reps)| {
            let gs = coset_solution(g, k, reps)?;
            let datum = decompose(&gs);
            assert!(
                datum.kernel().elements() == k.elements() && datum.representatives() == &reps[..],
                "coset solution does not decompose back to its (K, R)"
            );
            Ok(gs.pair_map())
        })
        .collect::<Result<_>>()?;
    let total = solutions.len();
    let set: BTreeSet<PairMap> = solutions.into_iter().collect();
    assert_eq!(set.len(), total, "distinct (K, R) produced equal solutions");
    Ok(EnumerationReport::new(
        group_carrier(g),
        g.order(),
        Method::Theorem,
        set,
    ))
}

/// `Σ_K |K|^([G:K] - 1)` over normal subgroups `K`; the number of solutions
/// with first component the group operation.
pub fn count_by_formula(g: &Group) -> u128 {
    normal_subgroups(g)
        .iter()
        .map(|k| power(k.order(), k.index_in(g) - 1))
        .fold(0u128, u128::saturating_add)
}

/// Partitions the solutions into equivalence classes by exhaustive
/// bijection search.
pub fn classify(report: &EnumerationReport) -> Result<EnumerationReport> {
    if report.n > CLASSIFY_MAX {
        return Err(Error::SizeOutOfRange {
            what: "classification",
            n: report.n,
            min: 1,
            max: CLASSIFY_MAX,
        });
    }
    let sols = &report.solutions;
    // leader[i] = least j with sols[j] equivalent to sols[i]
    let leaders: Vec<usize> = (0..sols.len())
        .into_par_iter()
        .map(|i| {
            for j in 0..i {
                if are_equivalent(&sols[j], &sols[i])?.is_some() {
                    return Ok(j);
                }
            }
            Ok(i)
        })
        .collect::<Result<_>>()?;
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, &leader) in leaders.iter().enumerate() {
        if leader == i {
            classes.push(vec![i]);
        } else {
            let class = classes
                .iter_mut()
                .find(|c| c[0] == leader)
                .expect("a leader precedes its class members");
            class.push(i);
        }
    }
    let mut out = report.clone();
    out.classes = Some(classes);
    Ok(out)
}

/// Keeps the solutions whose profile satisfies `keep`. Classes are dropped.
pub fn filter_profiles(
    report: &EnumerationReport,
    keep: impl Fn(&SolutionProfile) -> bool,
) -> EnumerationReport {
    let (solutions, profiles) = report
        .solutions
        .iter()
        .zip(&report.profiles)
        .filter(|(_, p)| keep(p))
        .map(|(s, p)| (s.clone(), *p))
        .unzip();
    EnumerationReport {
        carrier: report.carrier.clone(),
        n: report.n,
        method: report.method,
        solutions,
        profiles,
        classes: None,
    }
}

/// First components `·` for which `(x · y, x ∗ y)` is a solution when `∗`
/// is the operation of a given group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarSearch {
    pub dots: Vec<Magma>,
    /// `false` when the table scan was over budget and only the left
    /// projection was verified.
    pub exhaustive: bool,
}

pub fn star_group_search(g_star: &Group) -> Result<StarSearch> {
    star_group_search_within(g_star, DOT_SCAN_BUDGET)
}

pub fn star_group_search_within(g_star: &Group, budget: u128) -> Result<StarSearch> {
    let n = g_star.order();
    let cells = n * n;
    let total = power(n, cells);
    let star = g_star.magma().table();
    if total <= budget {
        let dots: BTreeSet<Magma> = (0..total as u64)
            .into_par_iter()
            .filter_map(|code| {
                let dot = decode_base(code, n, cells);
                let s = PairMap::from_flat(n, dot.clone(), star.to_vec());
                is_solution_direct(&s)
                    .holds()
                    .then(|| Magma::from_flat(n, dot))
            })
            .collect();
        return Ok(StarSearch {
            dots: dots.into_iter().collect(),
            exhaustive: true,
        });
    }
    if !g_star.is_elementary_abelian_2() {
        return Err(Error::BudgetExceeded {
            what: "dot table scan",
            required: total,
            budget,
        });
    }
    let projection = Magma::left_projection(n);
    let s = PairMap::from_flat(n, projection.table().to_vec(), star.to_vec());
    let dots = if is_solution_direct(&s).holds() {
        vec![projection]
    } else {
        Vec::new()
    };
    Ok(StarSearch {
        dots,
        exhaustive: false,
    })
}
