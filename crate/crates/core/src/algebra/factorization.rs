use crate::error::{Error, Result};

use super::subgroup::{subgroups, Subgroup};
use super::{Element, Group};

/// An exact factorization `G = AB` with `A ∩ B = {1}`, together with the
/// projections `x = p1(x) · p2(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    a: Subgroup,
    b: Subgroup,
    p1: Vec<Element>,
    p2: Vec<Element>,
}

impl Factorization {
    pub fn new(g: &Group, a: Subgroup, b: Subgroup) -> Result<Self> {
        if a.order() * b.order() != g.order() {
            return Err(Error::NotExactFactorization(format!(
                "|A|·|B| = {} but |G| = {}",
                a.order() * b.order(),
                g.order()
            )));
        }
        let mut p1 = vec![usize::MAX; g.order()];
        let mut p2 = vec![usize::MAX; g.order()];
        for &x in a.elements() {
            for &y in b.elements() {
                let xy = g.mul(x, y);
                if p1[xy] != usize::MAX {
                    return Err(Error::NotExactFactorization(format!(
                        "{xy} factors as both {}·{} and {x}·{y}",
                        p1[xy], p2[xy]
                    )));
                }
                p1[xy] = x;
                p2[xy] = y;
            }
        }
        Ok(Factorization { a, b, p1, p2 })
    }

    pub fn from_elements(g: &Group, a: &[Element], b: &[Element]) -> Result<Self> {
        Self::new(g, Subgroup::new(g, a)?, Subgroup::new(g, b)?)
    }

    pub fn a(&self) -> &Subgroup {
        &self.a
    }

    pub fn b(&self) -> &Subgroup {
        &self.b
    }

    #[inline]
    pub fn p1(&self, x: Element) -> Element {
        self.p1[x]
    }

    #[inline]
    pub fn p2(&self, x: Element) -> Element {
        self.p2[x]
    }

    /// Checks that the stored data is an exact factorization of `g`.
    pub fn validate(&self, g: &Group) -> Result<()> {
        let fail = |why: String| Err(Error::NotExactFactorization(why));
        if self.p1.len() != g.order() || self.p2.len() != g.order() {
            return fail("projection tables do not match the group order".into());
        }
        for part in [&self.a, &self.b] {
            if Subgroup::new(g, part.elements()).is_err() {
                return fail(format!("{:?} is not a subgroup", part.elements()));
            }
        }
        if self
            .a
            .elements()
            .iter()
            .any(|&x| x != g.identity() && self.b.contains(x))
        {
            return fail("A ∩ B is not trivial".into());
        }
        for x in g.elements() {
            let (p, q) = (self.p1[x], self.p2[x]);
            if p >= g.order() || q >= g.order() {
                return fail(format!("projection of {x} out of range"));
            }
            if !self.a.contains(p) || !self.b.contains(q) || g.mul(p, q) != x {
                return fail(format!("{x} != p1({x})·p2({x})"));
            }
        }
        Ok(())
    }
}

/// All ordered pairs `(A, B)` of subgroups with `A ∩ B = {1}` and `AB = G`,
/// ordered by `(A, B)` in subgroup order.
pub fn exact_factorizations(g: &Group) -> Vec<Factorization> {
    let all = subgroups(g);
    let mut out = Vec::new();
    for a in &all {
        for b in &all {
            if a.order() * b.order() == g.order() {
                if let Ok(f) = Factorization::new(g, a.clone(), b.clone()) {
                    out.push(f);
                }
            }
        }
    }
    out
}
