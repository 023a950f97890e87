use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

use super::{Element, Magma};

/// Largest carrier for which all `n^n` self-maps are scanned.
pub const SELF_MAP_SCAN_MAX: usize = 8;
/// Largest carrier for the `(n^n)^2` commuting-pair scan.
pub const PAIR_SCAN_MAX: usize = 5;

/// A map `{0..n} -> {0..n}` stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct SelfMap(Vec<Element>);

impl SelfMap {
    pub fn new(n: usize, images: Vec<Element>) -> Result<Self> {
        if images.len() != n {
            return Err(Error::MapLength {
                expected: n,
                found: images.len(),
            });
        }
        if let Some((col, &value)) = images.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(Error::EntryOutOfRange {
                row: 0,
                col,
                value,
                n,
            });
        }
        Ok(SelfMap(images))
    }

    pub(crate) fn from_vec(images: Vec<Element>) -> Self {
        SelfMap(images)
    }

    pub fn identity(n: usize) -> Self {
        SelfMap((0..n).collect())
    }

    pub fn constant(n: usize, value: Element) -> Self {
        assert!(value < n);
        SelfMap(vec![value; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, x: Element) -> Element {
        self.0[x]
    }

    pub fn images(&self) -> &[Element] {
        &self.0
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &SelfMap) -> SelfMap {
        SelfMap(other.0.iter().map(|&y| self.0[y]).collect())
    }

    pub fn is_idempotent(&self) -> bool {
        self.idempotence_failure().is_none()
    }

    fn idempotence_failure(&self) -> Option<Element> {
        (0..self.len()).find(|&x| self.0[self.0[x]] != self.0[x])
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.len()];
        self.0
            .iter()
            .all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn inverse(&self) -> Option<SelfMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.len()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y] = x;
        }
        Some(SelfMap(inv))
    }

    pub fn image(&self) -> Vec<Element> {
        let mut image = self.0.clone();
        image.sort_unstable();
        image.dedup();
        image
    }

    /// Least `(x, y)` with `γ(x·y) != γ(x)·γ(y)`.
    pub fn endomorphism_failure(&self, m: &Magma) -> Option<(Element, Element)> {
        let n = m.size();
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| self.0[m.op(x, y)] != m.op(self.0[x], self.0[y]))
    }

    /// Checks that this is an idempotent endomorphism of `m`.
    pub fn check_idempotent_endomorphism(&self, m: &Magma) -> Result<()> {
        if self.len() != m.size() {
            return Err(Error::MapLength {
                expected: m.size(),
                found: self.len(),
            });
        }
        if let Some(x) = self.idempotence_failure() {
            return Err(Error::NotIdempotent(x));
        }
        if let Some((x, y)) = self.endomorphism_failure(m) {
            return Err(Error::NotEndomorphism(x, y));
        }
        Ok(())
    }

    /// Every self-map of `{0..n}`, in lexicographic order of image lists.
    pub fn all(n: usize) -> impl Iterator<Item = SelfMap> {
        let total = (n as u64).pow(n as u32);
        (0..total).map(move |code| SelfMap(decode_base(code, n, n)))
    }
}

impl fmt::Debug for SelfMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SelfMap{:?}", self.0)
    }
}

/// Base-`base` digits of `code`, most significant first, padded to `len`.
pub(crate) fn decode_base(mut code: u64, base: usize, len: usize) -> Vec<Element> {
    let mut digits = vec![0; len];
    for slot in digits.iter_mut().rev() {
        *slot = (code % base as u64) as usize;
        code /= base as u64;
    }
    digits
}

/// All idempotent endomorphisms `γ` of `m` (`γ∘γ = γ`, `γ(xy) = γ(x)γ(y)`).
pub fn idempotent_endomorphisms(m: &Magma) -> Result<Vec<SelfMap>> {
    let n = m.size();
    if n > SELF_MAP_SCAN_MAX {
        return Err(Error::SizeOutOfRange {
            what: "idempotent endomorphism scan",
            n,
            min: 1,
            max: SELF_MAP_SCAN_MAX,
        });
    }
    Ok(SelfMap::all(n)
        .filter(|g| g.is_idempotent() && g.endomorphism_failure(m).is_none())
        .collect())
}

/// All ordered pairs `(α, β)` of idempotent self-maps with `αβ = βα`.
pub fn commuting_idempotent_pairs(n: usize) -> Result<Vec<(SelfMap, SelfMap)>> {
    if n == 0 || n > PAIR_SCAN_MAX {
        return Err(Error::SizeOutOfRange {
            what: "commuting idempotent pair scan",
            n,
            min: 1,
            max: PAIR_SCAN_MAX,
        });
    }
    let idempotents: Vec<SelfMap> = SelfMap::all(n).filter(SelfMap::is_idempotent).collect();
    let mut pairs = Vec::new();
    for a in &idempotents {
        for b in &idempotents {
            if a.compose(b) == b.compose(a) {
                pairs.push((a.clone(), b.clone()));
            }
        }
    }
    Ok(pairs)
}
