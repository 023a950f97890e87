use std::fmt;

use crate::error::{Error, Result};

use super::Element;

/// A finite set `{0..n}` with a total binary operation stored as a
/// row-major Cayley table (row = left operand).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Magma {
    n: usize,
    table: Vec<Element>,
}

impl Magma {
    /// Validates a square grid of entries. No algebraic property is checked.
    pub fn new(n: usize, rows: &[Vec<usize>]) -> Result<Self> {
        Ok(Magma {
            n,
            table: flatten_grid(n, rows)?,
        })
    }

    pub(crate) fn from_flat(n: usize, table: Vec<Element>) -> Self {
        debug_assert_eq!(table.len(), n * n);
        debug_assert!(table.iter().all(|&v| v < n));
        Magma { n, table }
    }

    /// Builds a magma from a closure. Panics if the closure leaves the carrier.
    pub fn from_fn(n: usize, mut op: impl FnMut(Element, Element) -> Element) -> Self {
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let v = op(x, y);
                assert!(v < n, "op({x},{y}) = {v} is outside 0..{n}");
                table.push(v);
            }
        }
        Magma { n, table }
    }

    /// `x · y = x`.
    pub fn left_projection(n: usize) -> Self {
        Self::from_fn(n, |x, _| x)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn op(&self, x: Element, y: Element) -> Element {
        self.table[x * self.n + y]
    }

    pub fn table(&self) -> &[Element] {
        &self.table
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Element]> {
        self.table.chunks(self.n)
    }

    /// Lexicographically least `(x, y, z)` with `(xy)z != x(yz)`.
    pub fn associativity_witness(&self) -> Option<[Element; 3]> {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let xy = self.op(x, y);
                for z in 0..n {
                    if self.op(xy, z) != self.op(x, self.op(y, z)) {
                        return Some([x, y, z]);
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.op(x, y) == self.op(y, x)))
    }

    pub fn idempotents(&self) -> Vec<Element> {
        (0..self.n).filter(|&e| self.op(e, e) == e).collect()
    }
}

impl fmt::Debug for Magma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<_> = self.rows().collect();
        f.debug_struct("Magma")
            .field("n", &self.n)
            .field("table", &rows)
            .finish()
    }
}

pub(crate) fn flatten_grid(n: usize, rows: &[Vec<usize>]) -> Result<Vec<Element>> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    if rows.len() != n {
        return Err(Error::RowCount {
            expected: n,
            found: rows.len(),
        });
    }
    let mut table = Vec::with_capacity(n * n);
    for (row, entries) in rows.iter().enumerate() {
        if entries.len() != n {
            return Err(Error::RaggedRow {
                row,
                expected: n,
                found: entries.len(),
            });
        }
        for (col, &value) in entries.iter().enumerate() {
            if value >= n {
                return Err(Error::EntryOutOfRange { row, col, value, n });
            }
            table.push(value);
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_small_tables() {
        assert_eq!(Magma::new(1, &[vec![0]]).unwrap().size(), 1);
        let z2 = Magma::new(2, &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(z2.op(1, 1), 0);
        assert_eq!(
            Magma::new(2, &[vec![0, 2], vec![1, 0]]),
            Err(Error::EntryOutOfRange {
                row: 0,
                col: 1,
                value: 2,
                n: 2
            })
        );
    }

    #[test]
    fn rejects_ragged_grids() {
        assert!(matches!(
            Magma::new(2, &[vec![0, 1], vec![1]]),
            Err(Error::RaggedRow { row: 1, .. })
        ));
        assert!(matches!(
            Magma::new(2, &[vec![0, 1]]),
            Err(Error::RowCount { .. })
        ));
        assert_eq!(Magma::new(0, &[]), Err(Error::EmptyCarrier));
    }

    #[test]
    fn associativity_scan() {
        let xor = Magma::from_fn(2, |x, y| x ^ y);
        assert!(xor.is_associative());
        assert!(Magma::left_projection(3).is_associative());

        // [[0,0],[0,1]] is multiplication mod 2, hence associative; a
        // brute-force count over the 8 triples confirms it.
        let and = Magma::new(2, &[vec![0, 0], vec![0, 1]]).unwrap();
        let failures = (0..8)
            .filter(|t| {
                let (x, y, z) = (t >> 2 & 1, t >> 1 & 1, t & 1);
                (x * y) * z != x * (y * z)
            })
            .count();
        assert_eq!(failures, 0);
        assert_eq!(and.associativity_witness(), None);

        // x - y mod 3 fails first at (0,0,1): (0-0)-1 = 2, 0-(0-1) = 1.
        let sub = Magma::from_fn(3, |x, y| (x + 3 - y) % 3);
        assert_eq!(sub.associativity_witness(), Some([0, 0, 1]));
    }
}
