use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};

use super::{Element, Group};

/// Groups up to this order have their subgroups found by scanning every
/// subset containing the identity; larger ones use generator closures.
pub const SUBSET_SCAN_MAX: usize = 12;

/// A subgroup given by its sorted element list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Subgroup {
    elements: Vec<Element>,
    is_normal: bool,
    #[serde(skip)]
    members: Vec<bool>,
}

impl Subgroup {
    /// Validates closure and records normality.
    pub fn new(g: &Group, elements: &[Element]) -> Result<Self> {
        let mut members = vec![false; g.order()];
        for &x in elements {
            if x >= g.order() {
                return Err(Error::NotSubgroup(elements.to_vec()));
            }
            members[x] = true;
        }
        if !members[g.identity()] || !is_closed(g, &members) {
            return Err(Error::NotSubgroup(elements.to_vec()));
        }
        Ok(Self::from_members(g, members))
    }

    fn from_members(g: &Group, members: Vec<bool>) -> Self {
        let elements: Vec<Element> = (0..members.len()).filter(|&x| members[x]).collect();
        let is_normal = g.elements().all(|x| {
            elements
                .iter()
                .all(|&k| members[g.mul(g.mul(g.inv(x), k), x)])
        });
        Subgroup {
            elements,
            is_normal,
            members,
        }
    }

    pub fn trivial(g: &Group) -> Self {
        Self::new(g, &[g.identity()]).expect("{1} is a subgroup")
    }

    pub fn whole(g: &Group) -> Self {
        Self::new(g, &g.elements().collect::<Vec<_>>()).expect("G is a subgroup")
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_normal(&self) -> bool {
        self.is_normal
    }

    #[inline]
    pub fn contains(&self, x: Element) -> bool {
        self.members.get(x).copied().unwrap_or(false)
    }

    pub fn index_in(&self, g: &Group) -> usize {
        g.order() / self.order()
    }

    /// The right coset `Kx`, sorted.
    pub fn right_coset(&self, g: &Group, x: Element) -> Vec<Element> {
        let mut coset: Vec<Element> = self.elements.iter().map(|&k| g.mul(k, x)).collect();
        coset.sort_unstable();
        coset
    }

    /// All right cosets, each sorted, ordered by least element. The first
    /// coset is the subgroup itself.
    pub fn right_cosets(&self, g: &Group) -> Vec<Vec<Element>> {
        let mut seen = vec![false; g.order()];
        let mut cosets = Vec::with_capacity(self.index_in(g));
        for x in g.elements() {
            if !seen[x] {
                let coset = self.right_coset(g, x);
                for &y in &coset {
                    seen[y] = true;
                }
                cosets.push(coset);
            }
        }
        cosets.sort();
        cosets
    }

    /// `x⁻¹kx ∈ K` for every `x ∈ G` and `k ∈ K`, recomputed from scratch.
    pub fn audit_normal(&self, g: &Group) -> bool {
        g.elements().all(|x| {
            self.elements
                .iter()
                .all(|&k| self.contains(g.mul(g.mul(g.inv(x), k), x)))
        })
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Ordered by size, then element list.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.order(), &self.elements).cmp(&(other.order(), &other.elements))
    }
}

fn is_closed(g: &Group, members: &[bool]) -> bool {
    let elems: Vec<Element> = (0..members.len()).filter(|&x| members[x]).collect();
    elems
        .iter()
        .all(|&a| elems.iter().all(|&b| members[g.mul(a, b)]))
}

/// Smallest subgroup containing `seed`.
pub fn closure(g: &Group, seed: &[Element]) -> Vec<bool> {
    let mut members = vec![false; g.order()];
    members[g.identity()] = true;
    let mut elems = vec![g.identity()];
    for &s in seed {
        if !members[s] {
            members[s] = true;
            elems.push(s);
        }
    }
    let mut i = 0;
    while i < elems.len() {
        let a = elems[i];
        let mut j = 0;
        while j < elems.len() {
            let b = elems[j];
            for p in [g.mul(a, b), g.mul(b, a)] {
                if !members[p] {
                    members[p] = true;
                    elems.push(p);
                }
            }
            j += 1;
        }
        i += 1;
    }
    members
}

/// Every subgroup, found by testing each subset that contains the identity
/// for closure. Finite non-empty closed subsets are subgroups.
pub fn subgroups_by_subset_scan(g: &Group) -> Vec<Subgroup> {
    let n = g.order();
    assert!(n <= 24, "subset scan is exponential in the group order");
    let others: Vec<Element> = g.elements().filter(|&x| x != g.identity()).collect();
    let mut found = Vec::new();
    for mask in 0u64..(1u64 << others.len()) {
        let mut members = vec![false; n];
        members[g.identity()] = true;
        for (bit, &x) in others.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                members[x] = true;
            }
        }
        if is_closed(g, &members) {
            found.push(Subgroup::from_members(g, members));
        }
    }
    found.sort();
    found
}

/// Every subgroup, found by closing known subgroups under one extra element
/// at a time, starting from the trivial subgroup.
pub fn subgroups_by_generation(g: &Group) -> Vec<Subgroup> {
    let mut seen: BTreeSet<Vec<bool>> = BTreeSet::new();
    let trivial = closure(g, &[]);
    seen.insert(trivial.clone());
    let mut frontier = vec![trivial];
    while let Some(h) = frontier.pop() {
        let gens: Vec<Element> = (0..h.len()).filter(|&x| h[x]).collect();
        for x in g.elements().filter(|&x| !h[x]) {
            let mut seed = gens.clone();
            seed.push(x);
            let bigger = closure(g, &seed);
            if seen.insert(bigger.clone()) {
                frontier.push(bigger);
            }
        }
    }
    let mut found: Vec<Subgroup> = seen
        .into_iter()
        .map(|m| Subgroup::from_members(g, m))
        .collect();
    found.sort();
    found
}

/// Every subgroup, sorted by `(order, elements)`.
pub fn subgroups(g: &Group) -> Vec<Subgroup> {
    if g.order() <= SUBSET_SCAN_MAX {
        subgroups_by_subset_scan(g)
    } else {
        subgroups_by_generation(g)
    }
}

/// Every normal subgroup, sorted by `(order, elements)`.
pub fn normal_subgroups(g: &Group) -> Vec<Subgroup> {
    subgroups(g)
        .into_iter()
        .filter(Subgroup::is_normal)
        .collect()
}

/// Lazily enumerates every system of representatives `R` of the right
/// cosets of `k` with the identity in `R`.
///
/// The identity coset contributes the identity; every other coset (ordered
/// by least element) contributes one of its elements, with the first such
/// coset varying slowest. Each yielded list is sorted ascending.
pub fn representative_systems(g: &Group, k: &Subgroup) -> Result<RepresentativeSystems> {
    let recheck = Subgroup::new(g, k.elements())?;
    let cosets: Vec<Vec<Element>> = recheck
        .right_cosets(g)
        .into_iter()
        .filter(|c| !c.contains(&g.identity()))
        .collect();
    Ok(RepresentativeSystems {
        identity: g.identity(),
        choice: vec![0; cosets.len()],
        cosets,
        done: false,
    })
}

#[derive(Debug, Clone)]
pub struct RepresentativeSystems {
    identity: Element,
    cosets: Vec<Vec<Element>>,
    choice: Vec<usize>,
    done: bool,
}

impl RepresentativeSystems {
    /// `|K|^([G:K]-1)`.
    pub fn total(&self) -> u128 {
        self.cosets.iter().map(|c| c.len() as u128).product()
    }
}

impl Iterator for RepresentativeSystems {
    type Item = Vec<Element>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let mut reps: Vec<Element> = std::iter::once(self.identity)
            .chain(self.cosets.iter().zip(&self.choice).map(|(c, &i)| c[i]))
            .collect();
        reps.sort_unstable();
        // advance the odometer, last coset fastest
        self.done = true;
        for pos in (0..self.choice.len()).rev() {
            self.choice[pos] += 1;
            if self.choice[pos] < self.cosets[pos].len() {
                self.done = false;
                break;
            }
            self.choice[pos] = 0;
        }
        Some(reps)
    }
}
