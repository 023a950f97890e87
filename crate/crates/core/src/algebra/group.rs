use std::collections::BTreeSet;

use crate::error::{Error, Result};

use super::{Element, Magma};

/// A magma certified to be a group, with its identity and inverse table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Group {
    magma: Magma,
    identity: Element,
    inverse: Vec<Element>,
}

impl Group {
    /// Certifies associativity, then locates the identity and inverses.
    pub fn from_magma(magma: Magma) -> Result<Self> {
        if let Some(w) = magma.associativity_witness() {
            return Err(Error::NotAssociative(w));
        }
        let n = magma.size();
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| magma.op(e, x) == x && magma.op(x, e) == x))
            .ok_or(Error::NoIdentity)?;
        let inverse = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| magma.op(x, y) == identity && magma.op(y, x) == identity)
                    .ok_or(Error::NoInverse(x))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Group {
            magma,
            identity,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.magma.size()
    }

    pub fn magma(&self) -> &Magma {
        &self.magma
    }

    pub fn identity(&self) -> Element {
        self.identity
    }

    #[inline]
    pub fn mul(&self, x: Element, y: Element) -> Element {
        self.magma.op(x, y)
    }

    #[inline]
    pub fn inv(&self, x: Element) -> Element {
        self.inverse[x]
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order()
    }

    pub fn is_abelian(&self) -> bool {
        self.magma.is_commutative()
    }

    /// Abelian with every element its own inverse.
    pub fn is_elementary_abelian_2(&self) -> bool {
        self.is_abelian() && self.elements().all(|x| self.mul(x, x) == self.identity)
    }

    /// Re-runs every group axiom on the stored tables.
    pub fn audit(&self) -> bool {
        let e = self.identity;
        self.magma.is_associative()
            && self
                .elements()
                .all(|x| self.mul(e, x) == x && self.mul(x, e) == x)
            && self
                .elements()
                .all(|x| self.mul(x, self.inv(x)) == e && self.mul(self.inv(x), x) == e)
    }

    /// Relabels so that the identity has index 0 by swapping it with 0.
    pub fn normalized(&self) -> Group {
        if self.identity == 0 {
            return self.clone();
        }
        let e = self.identity;
        let swap = |x: Element| {
            if x == 0 {
                e
            } else if x == e {
                0
            } else {
                x
            }
        };
        let magma = Magma::from_fn(self.order(), |x, y| swap(self.mul(swap(x), swap(y))));
        Group::from_magma(magma).expect("relabelling preserves the group axioms")
    }

    /// Cyclic group `Z_n` under addition.
    pub fn cyclic(n: usize) -> Group {
        assert!(n > 0);
        Group::from_magma(Magma::from_fn(n, |x, y| (x + y) % n)).expect("Z_n is a group")
    }

    /// Direct product; `(a, b)` has index `a * |right| + b`.
    pub fn direct_product(left: &Group, right: &Group) -> Group {
        let m = right.order();
        let magma = Magma::from_fn(left.order() * m, |x, y| {
            left.mul(x / m, y / m) * m + right.mul(x % m, y % m)
        });
        Group::from_magma(magma).expect("a product of groups is a group")
    }

    /// `(Z_2)^k` with elements as bit vectors under xor.
    pub fn elementary_abelian_2(k: u32) -> Group {
        let n = 1usize << k;
        Group::from_magma(Magma::from_fn(n, |x, y| x ^ y)).expect("xor is a group")
    }

    /// The symmetric group on `{0..degree}`. Elements are indexed by the
    /// lexicographic rank of the permutation word, and `(a·b)(i) = a(b(i))`.
    pub fn symmetric(degree: usize) -> Group {
        let words = permutations(degree);
        Group::from_permutations(&words).expect("S_n is closed")
    }

    /// The group generated by some permutations of a common degree.
    pub fn generated_by_permutations(generators: &[Vec<usize>]) -> Group {
        let degree = generators.first().map_or(0, Vec::len);
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements: BTreeSet<Vec<usize>> = BTreeSet::from([identity.clone()]);
        let mut frontier = vec![identity];
        while let Some(p) = frontier.pop() {
            for g in generators {
                let q = compose_words(g, &p);
                if elements.insert(q.clone()) {
                    frontier.push(q);
                }
            }
        }
        let elements: Vec<_> = elements.into_iter().collect();
        Group::from_permutations(&elements).expect("closure under generators is a group")
    }

    /// Cayley table of a set of permutation words, indexed in the given
    /// order; fails if the set is not closed under composition.
    pub fn from_permutations(words: &[Vec<usize>]) -> Result<Group> {
        let n = words.len();
        let mut table = Vec::with_capacity(n * n);
        for a in words {
            for b in words {
                let ab = compose_words(a, b);
                let idx = words
                    .iter()
                    .position(|w| *w == ab)
                    .ok_or_else(|| Error::NotSubgroup((0..n).collect()))?;
                table.push(idx);
            }
        }
        Group::from_magma(Magma::from_flat(n, table))
    }

    /// Quaternion group with elements ordered `1, -1, i, -i, j, -j, k, -k`.
    pub fn quaternion() -> Group {
        // unit index u in {0:1, 1:i, 2:j, 3:k}, sign s; element = 2u + s
        fn unit_product(a: usize, b: usize) -> (usize, bool) {
            match (a, b) {
                (0, u) | (u, 0) => (u, false),
                (a, b) if a == b => (0, true),
                (1, 2) => (3, false),
                (2, 3) => (1, false),
                (3, 1) => (2, false),
                (2, 1) => (3, true),
                (3, 2) => (1, true),
                (1, 3) => (2, true),
                _ => unreachable!(),
            }
        }
        let magma = Magma::from_fn(8, |x, y| {
            let (u, neg) = unit_product(x / 2, y / 2);
            let sign = (x % 2) ^ (y % 2) ^ usize::from(neg);
            2 * u + sign
        });
        Group::from_magma(magma).expect("Q8 is a group")
    }

    /// Dihedral group of the square, as permutations of its vertices.
    pub fn dihedral_square() -> Group {
        Group::generated_by_permutations(&[vec![1, 2, 3, 0], vec![0, 3, 2, 1]])
    }
}

/// `a ∘ b` on permutation words.
pub(crate) fn compose_words(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

/// All permutation words of `{0..degree}` in lexicographic order.
pub fn permutations(degree: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                extend(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), &mut vec![false; degree], &mut out);
    out
}

/// Sign of a permutation word via its inversion count.
pub fn permutation_sign(word: &[usize]) -> i8 {
    let inversions = (0..word.len())
        .flat_map(|i| (i + 1..word.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| word[i] > word[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_identity_and_inverses() {
        let z6 = Group::cyclic(6);
        assert_eq!(z6.identity(), 0);
        for k in 0..6 {
            assert_eq!(z6.inv(k), (6 - k) % 6);
        }
        assert!(z6.audit());
    }

    #[test]
    fn distinct_failure_modes() {
        assert_eq!(
            Group::from_magma(Magma::left_projection(2)),
            Err(Error::NoIdentity)
        );
        // Multiplication mod 2: identity 1, but 0 has no inverse.
        let mul2 = Magma::from_fn(2, |x, y| x * y);
        assert_eq!(Group::from_magma(mul2), Err(Error::NoInverse(0)));
        let sub = Magma::from_fn(3, |x, y| (x + 3 - y) % 3);
        assert!(matches!(
            Group::from_magma(sub),
            Err(Error::NotAssociative(_))
        ));
    }

    #[test]
    fn symmetric_group_s3() {
        let s3 = Group::symmetric(3);
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.identity(), 0);
        assert!(!s3.is_abelian());
        assert!(s3.audit());
        // index 2 is the word [1,0,2], the transposition of the two smallest points
        assert_eq!(s3.mul(2, 2), 0);
    }

    #[test]
    fn small_groups_certify() {
        let q8 = Group::quaternion();
        assert!(q8.audit() && !q8.is_abelian());
        assert_eq!(q8.elements().filter(|&x| q8.mul(x, x) == 0).count(), 2);
        let d4 = Group::dihedral_square();
        assert_eq!(d4.order(), 8);
        assert!(!d4.is_abelian());
        assert_eq!(d4.elements().filter(|&x| d4.mul(x, x) == 0).count(), 6);
        let v4 = Group::elementary_abelian_2(2);
        assert!(v4.is_elementary_abelian_2());
        assert!(!Group::cyclic(4).is_elementary_abelian_2());
        let z2z4 = Group::direct_product(&Group::cyclic(2), &Group::cyclic(4));
        assert!(z2z4.audit() && z2z4.is_abelian());
    }

    #[test]
    fn normalization_moves_identity_to_zero() {
        // Z3 written with identity at index 2.
        let shifted = Magma::from_fn(3, |x, y| (x + y + 1) % 3);
        let g = Group::from_magma(shifted).unwrap();
        assert_eq!(g.identity(), 2);
        let h = g.normalized();
        assert_eq!(h.identity(), 0);
        assert!(h.audit());
    }

    #[test]
    fn signs() {
        assert_eq!(permutation_sign(&[0, 1, 2]), 1);
        assert_eq!(permutation_sign(&[1, 0, 2]), -1);
        assert_eq!(permutation_sign(&[1, 2, 0]), 1);
    }
}
