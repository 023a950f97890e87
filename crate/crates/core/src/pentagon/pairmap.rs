use std::fmt;

use crate::algebra::{flatten_grid, Element, Magma};
use crate::error::{Error, Result};

/// A map `s(x, y) = (x · y, x ∗ y)` on `M × M`, stored as its two
/// component tables.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairMap {
    n: usize,
    dot: Vec<Element>,
    star: Vec<Element>,
}

impl PairMap {
    pub fn new(n: usize, dot: &[Vec<usize>], star: &[Vec<usize>]) -> Result<Self> {
        Ok(PairMap {
            n,
            dot: flatten_grid(n, dot)?,
            star: flatten_grid(n, star)?,
        })
    }

    pub fn from_tables(dot: &Magma, star: &Magma) -> Result<Self> {
        if dot.size() != star.size() {
            return Err(Error::SizeMismatch {
                left: dot.size(),
                right: star.size(),
            });
        }
        Ok(PairMap {
            n: dot.size(),
            dot: dot.table().to_vec(),
            star: star.table().to_vec(),
        })
    }

    pub(crate) fn from_flat(n: usize, dot: Vec<Element>, star: Vec<Element>) -> Self {
        debug_assert!(dot.len() == n * n && star.len() == n * n);
        PairMap { n, dot, star }
    }

    /// Builds from a closure; panics if it leaves the carrier.
    pub fn from_fn(n: usize, mut s: impl FnMut(Element, Element) -> (Element, Element)) -> Self {
        let mut dot = Vec::with_capacity(n * n);
        let mut star = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let (a, b) = s(x, y);
                assert!(a < n && b < n, "s({x},{y}) = ({a},{b}) leaves 0..{n}");
                dot.push(a);
                star.push(b);
            }
        }
        PairMap { n, dot, star }
    }

    /// `(x, y) ↦ (x, y)`.
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |x, y| (x, y))
    }

    /// `τ(x, y) = (y, x)`.
    pub fn flip(n: usize) -> Self {
        Self::from_fn(n, |x, y| (y, x))
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn dot(&self, x: Element, y: Element) -> Element {
        self.dot[x * self.n + y]
    }

    #[inline]
    pub fn star(&self, x: Element, y: Element) -> Element {
        self.star[x * self.n + y]
    }

    #[inline]
    pub fn apply(&self, x: Element, y: Element) -> (Element, Element) {
        let i = x * self.n + y;
        (self.dot[i], self.star[i])
    }

    pub fn dot_magma(&self) -> Magma {
        Magma::from_flat(self.n, self.dot.clone())
    }

    pub fn star_magma(&self) -> Magma {
        Magma::from_flat(self.n, self.star.clone())
    }

    pub fn dot_table(&self) -> &[Element] {
        &self.dot
    }

    pub fn star_table(&self) -> &[Element] {
        &self.star
    }

    pub fn dot_rows(&self) -> Vec<Vec<Element>> {
        self.dot.chunks(self.n).map(<[_]>::to_vec).collect()
    }

    pub fn star_rows(&self) -> Vec<Vec<Element>> {
        self.star.chunks(self.n).map(<[_]>::to_vec).collect()
    }

    /// `τ s τ`: `(x, y) ↦ (star(y, x), dot(y, x))`.
    pub fn tau_conjugate(&self) -> PairMap {
        Self::from_fn(self.n, |x, y| {
            let (a, b) = self.apply(y, x);
            (b, a)
        })
    }

    pub fn is_invertible(&self) -> bool {
        let mut seen = vec![false; self.n * self.n];
        (0..self.n * self.n).all(|i| {
            let code = self.dot[i] * self.n + self.star[i];
            !std::mem::replace(&mut seen[code], true)
        })
    }

    pub fn inverse(&self) -> Option<PairMap> {
        if !self.is_invertible() {
            return None;
        }
        let n = self.n;
        let mut dot = vec![0; n * n];
        let mut star = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let (u, v) = self.apply(x, y);
                dot[u * n + v] = x;
                star[u * n + v] = y;
            }
        }
        Some(PairMap { n, dot, star })
    }

    /// `s^op = τ s⁻¹ τ`.
    pub fn opposite(&self) -> Result<PairMap> {
        self.inverse()
            .map(|inv| inv.tau_conjugate())
            .ok_or(Error::NotInvertible)
    }

    /// `(η × η) s (η⁻¹ × η⁻¹)`, the map on the relabelled carrier.
    pub fn transport(&self, eta: &[Element]) -> PairMap {
        let n = self.n;
        let mut inv = vec![0; n];
        for (x, &y) in eta.iter().enumerate() {
            inv[y] = x;
        }
        Self::from_fn(n, |x, y| {
            let (a, b) = self.apply(inv[x], inv[y]);
            (eta[a], eta[b])
        })
    }

    /// Compact single-line encoding: rows joined by `;`, entries by `,`.
    pub fn encoding(&self) -> String {
        let enc = |t: &[Element]| {
            t.chunks(self.n)
                .map(|r| {
                    r.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .collect::<Vec<_>>()
                .join(";")
        };
        format!("dot={} star={}", enc(&self.dot), enc(&self.star))
    }
}

impl fmt::Debug for PairMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PairMap(n={} {})", self.n, self.encoding())
    }
}
