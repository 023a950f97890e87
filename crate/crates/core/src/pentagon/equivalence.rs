use crate::algebra::{Element, SelfMap};
use crate::error::{Error, Result};

use super::PairMap;

/// Largest carrier for the bijection search.
pub const EQUIVALENCE_MAX: usize = 8;

/// Searches for a bijection `η` with `(η × η) s = r (η × η)`.
///
/// `η` is built one element at a time in increasing order. A partial
/// assignment is abandoned as soon as some pair `(x, y)` with `x`, `y` and
/// a component of `s(x, y)` already assigned disagrees with `r`. On the
/// first component this is exactly the requirement that `η` be a
/// homomorphism from the dot table of `s` to that of `r`.
pub fn are_equivalent(s: &PairMap, r: &PairMap) -> Result<Option<SelfMap>> {
    let n = s.size();
    if n != r.size() {
        return Err(Error::SizeMismatch {
            left: n,
            right: r.size(),
        });
    }
    if n > EQUIVALENCE_MAX {
        return Err(Error::SizeOutOfRange {
            what: "equivalence search",
            n,
            min: 1,
            max: EQUIVALENCE_MAX,
        });
    }
    let mut search = Search {
        s,
        r,
        eta: vec![UNSET; n],
        used: vec![false; n],
    };
    Ok(search.extend(0).then(|| SelfMap::from_vec(search.eta)))
}

const UNSET: Element = usize::MAX;

struct Search<'a> {
    s: &'a PairMap,
    r: &'a PairMap,
    eta: Vec<Element>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, next: Element) -> bool {
        let n = self.s.size();
        if next == n {
            return true;
        }
        for image in 0..n {
            if self.used[image] {
                continue;
            }
            self.eta[next] = image;
            self.used[image] = true;
            if self.consistent(next) && self.extend(next + 1) {
                return true;
            }
            self.used[image] = false;
        }
        self.eta[next] = UNSET;
        false
    }

    /// Checks every pair involving the newest element `last` and any element
    /// assigned before it, plus pairs whose images only just became known.
    fn consistent(&self, last: Element) -> bool {
        let eta = &self.eta;
        let agrees = |x: Element, y: Element| {
            let (a, b) = self.s.apply(x, y);
            let (c, d) = self.r.apply(eta[x], eta[y]);
            (eta[a] == UNSET || eta[a] == c) && (eta[b] == UNSET || eta[b] == d)
        };
        // Since elements are assigned in order, everything <= last is set.
        (0..=last).all(|x| (0..=last).all(|y| agrees(x, y)))
    }
}
