//! Solutions on a group written as `s(x, y) = (xy, θ_x(y))`.
//!
//! Every such solution is determined by the identity row `θ_1` through
//! `θ_x(y) = θ_1(x)⁻¹ θ_1(xy)`. Its kernel `K = θ_1⁻¹(1)` is a normal
//! subgroup and the image of `θ_1` is a system of representatives of the
//! right cosets of `K` containing the identity. Conversely any such pair
//! `(K, R)` yields a solution through the coset map `μ(x) ∈ R ∩ Kx`.

use crate::algebra::{Element, Group, SelfMap, Subgroup};
use crate::error::{Error, Result};
use crate::pentagon::{Condition, PairMap};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSolution {
    group: Group,
    theta: Vec<Element>,
}

impl GroupSolution {
    pub fn group(&self) -> &Group {
        &self.group
    }

    /// `θ_x(y)`.
    #[inline]
    pub fn theta(&self, x: Element, y: Element) -> Element {
        self.theta[x * self.group.order() + y]
    }

    pub fn theta_row(&self, x: Element) -> SelfMap {
        let n = self.group.order();
        SelfMap::from_vec(self.theta[x * n..(x + 1) * n].to_vec())
    }

    pub fn pair_map(&self) -> PairMap {
        PairMap::from_flat(
            self.group.order(),
            self.group.magma().table().to_vec(),
            self.theta.clone(),
        )
    }
}

/// Wraps the star table of `s` as `θ` after checking that the dot table is
/// the group operation and that the two `θ` conditions hold everywhere:
/// `θ_x(y) θ_{xy}(z) = θ_x(yz)` and `θ_{θ_x(y)} θ_{xy} = θ_y`.
pub fn theta_from_pairmap(s: &PairMap, g: &Group) -> Result<GroupSolution> {
    let n = g.order();
    if s.size() != n {
        return Err(Error::SizeMismatch {
            left: s.size(),
            right: n,
        });
    }
    for x in 0..n {
        for y in 0..n {
            if s.dot(x, y) != g.mul(x, y) {
                return Err(Error::DotMismatch(x, y));
            }
        }
    }
    let gs = GroupSolution {
        group: g.clone(),
        theta: s.star_table().to_vec(),
    };
    if let Some((condition, at)) = theta_condition_failure(&gs) {
        return Err(Error::NotSolution { condition, at });
    }
    Ok(gs)
}

fn theta_condition_failure(gs: &GroupSolution) -> Option<(Condition, [Element; 3])> {
    let g = &gs.group;
    for x in g.elements() {
        for y in g.elements() {
            let xy = g.mul(x, y);
            let t = gs.theta(x, y);
            for z in g.elements() {
                if g.mul(t, gs.theta(xy, z)) != gs.theta(x, g.mul(y, z)) {
                    return Some((Condition::Mixed, [x, y, z]));
                }
                if gs.theta(t, gs.theta(xy, z)) != gs.theta(y, z) {
                    return Some((Condition::StarCocycle, [x, y, z]));
                }
            }
        }
    }
    None
}

/// `θ_1`, after checking that `θ_x(y) = θ_1(x)⁻¹ θ_1(xy)` rebuilds every row.
///
/// A valid `GroupSolution` always passes; a failure means internal state was
/// corrupted and panics.
pub fn theta_one(gs: &GroupSolution) -> SelfMap {
    let g = &gs.group;
    let one = g.identity();
    for x in g.elements() {
        for y in g.elements() {
            let rebuilt = g.mul(g.inv(gs.theta(one, x)), gs.theta(one, g.mul(x, y)));
            assert_eq!(
                rebuilt,
                gs.theta(x, y),
                "θ_{x}({y}) is not determined by θ_1; GroupSolution is corrupt"
            );
        }
    }
    gs.theta_row(one)
}

/// `K = θ_1⁻¹(1)`, certified to be a normal subgroup.
pub fn kernel(gs: &GroupSolution) -> Subgroup {
    let g = &gs.group;
    let t1 = theta_one(gs);
    let elements: Vec<Element> = g
        .elements()
        .filter(|&x| t1.apply(x) == g.identity())
        .collect();
    let k = Subgroup::new(g, &elements).expect("the kernel of a solution is a subgroup");
    assert!(k.is_normal(), "the kernel of a solution is normal");
    k
}

/// A normal subgroup, a system of representatives of its right cosets
/// containing the identity, and the induced map `μ(x) ∈ R ∩ Kx`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetDatum {
    kernel: Subgroup,
    reps: Vec<Element>,
    mu: Vec<Element>,
}

impl CosetDatum {
    pub fn new(g: &Group, kernel: &Subgroup, reps: &[Element]) -> Result<Self> {
        let kernel = Subgroup::new(g, kernel.elements())?;
        if !kernel.is_normal() {
            return Err(Error::NotNormal(kernel.elements().to_vec()));
        }
        let mut sorted = reps.to_vec();
        sorted.sort_unstable();
        if !sorted.contains(&g.identity()) {
            return Err(Error::MissingIdentity(sorted));
        }
        let mut mu = vec![usize::MAX; g.order()];
        for coset in kernel.right_cosets(g) {
            let mut hits = coset.iter().filter(|x| sorted.binary_search(x).is_ok());
            let (Some(&rep), None) = (hits.next(), hits.next()) else {
                return Err(Error::NotRepresentativeSystem(sorted));
            };
            for &x in &coset {
                mu[x] = rep;
            }
        }
        if sorted.len() != kernel.index_in(g) || sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NotRepresentativeSystem(sorted));
        }
        Ok(CosetDatum {
            kernel,
            reps: sorted,
            mu,
        })
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    /// Sorted ascending.
    pub fn representatives(&self) -> &[Element] {
        &self.reps
    }

    #[inline]
    pub fn mu(&self, x: Element) -> Element {
        self.mu[x]
    }

    /// Checks `μ(x) ∈ R`, `μ(x) ∈ Kx` and `μ|_R = id` from scratch.
    pub fn audit(&self, g: &Group) -> bool {
        g.elements().all(|x| {
            let m = self.mu[x];
            self.reps.binary_search(&m).is_ok() && self.kernel.contains(g.mul(m, g.inv(x)))
        }) && self.reps.iter().all(|&r| self.mu[r] == r)
    }
}

/// `s(x, y) = (xy, μ(x)⁻¹ μ(xy))` for the coset map of `(K, R)`.
pub fn coset_solution(g: &Group, kernel: &Subgroup, reps: &[Element]) -> Result<GroupSolution> {
    let datum = CosetDatum::new(g, kernel, reps)?;
    Ok(coset_solution_from_datum(g, &datum))
}

pub fn coset_solution_from_datum(g: &Group, datum: &CosetDatum) -> GroupSolution {
    let n = g.order();
    let mut theta = Vec::with_capacity(n * n);
    for x in 0..n {
        let mu_x_inv = g.inv(datum.mu(x));
        for y in 0..n {
            theta.push(g.mul(mu_x_inv, datum.mu(g.mul(x, y))));
        }
    }
    GroupSolution {
        group: g.clone(),
        theta,
    }
}

/// Recovers `(K, R = θ_1(M), μ = θ_1)` and certifies the decomposition,
/// including that rebuilding from `(K, R)` reproduces the solution.
///
/// Certification failures are internal bugs and panic.
pub fn decompose(gs: &GroupSolution) -> CosetDatum {
    let g = &gs.group;
    let t1 = theta_one(gs);
    let k = kernel(gs);
    let reps = t1.image();
    let datum = CosetDatum::new(g, &k, &reps)
        .expect("the image of θ_1 is a system of representatives containing 1");
    for x in g.elements() {
        assert_eq!(datum.mu(x), t1.apply(x), "θ_1({x}) is not in R ∩ Kx");
    }
    assert!(datum.audit(g));
    assert_eq!(
        &coset_solution_from_datum(g, &datum),
        gs,
        "rebuilding from (K, R) does not reproduce the solution"
    );
    datum
}
