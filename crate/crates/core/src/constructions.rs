//! Factories for the named families of solutions.

use crate::algebra::{
    permutation_sign, permutations, Element, Factorization, Group, Magma, SelfMap, Subgroup,
};
use crate::error::{Error, Result};
use crate::pentagon::PairMap;
use crate::theta::coset_solution;

/// `s(x, y) = (xy, y)`.
pub fn kac_takesaki_s(g: &Group) -> PairMap {
    PairMap::from_fn(g.order(), |x, y| (g.mul(x, y), y))
}

/// `t(x, y) = (x, x⁻¹y)`.
pub fn kac_takesaki_t(g: &Group) -> PairMap {
    PairMap::from_fn(g.order(), |x, y| (x, g.mul(g.inv(x), y)))
}

/// `s(x, y) = (x·y, γ(y))` for an idempotent endomorphism `γ` of a semigroup.
pub fn endo_solution(m: &Magma, gamma: &SelfMap) -> Result<PairMap> {
    if let Some(w) = m.associativity_witness() {
        return Err(Error::NotAssociative(w));
    }
    gamma.check_idempotent_endomorphism(m)?;
    Ok(PairMap::from_fn(m.size(), |x, y| {
        (m.op(x, y), gamma.apply(y))
    }))
}

/// `s(x, y) = (x·y, e)` for an idempotent `e`.
pub fn constant_solution(m: &Magma, e: Element) -> Result<PairMap> {
    if e >= m.size() {
        return Err(Error::EntryOutOfRange {
            row: 0,
            col: 0,
            value: e,
            n: m.size(),
        });
    }
    if m.op(e, e) != e {
        return Err(Error::NotIdempotentElement(e));
    }
    endo_solution(m, &SelfMap::constant(m.size(), e))
}

/// `s(x, y) = (α(x), β(y))` for commuting idempotent maps.
pub fn militaru(n: usize, alpha: &SelfMap, beta: &SelfMap) -> Result<PairMap> {
    for f in [alpha, beta] {
        if f.len() != n {
            return Err(Error::MapLength {
                expected: n,
                found: f.len(),
            });
        }
        if let Some(x) = (0..n).find(|&x| f.apply(f.apply(x)) != f.apply(x)) {
            return Err(Error::NotIdempotent(x));
        }
    }
    if let Some(x) = (0..n).find(|&x| alpha.apply(beta.apply(x)) != beta.apply(alpha.apply(x))) {
        return Err(Error::NotCommuting(x));
    }
    Ok(PairMap::from_fn(n, |x, y| (alpha.apply(x), beta.apply(y))))
}

/// `s(x, y) = (p2(y p1(x)⁻¹) x, y p1(x)⁻¹)`.
pub fn zakrzewski(g: &Group, f: &Factorization) -> Result<PairMap> {
    f.validate(g)?;
    Ok(PairMap::from_fn(g.order(), |x, y| {
        let w = g.mul(y, g.inv(f.p1(x)));
        (g.mul(f.p2(w), x), w)
    }))
}

/// `s(x, y) = (x p1(p2(x)⁻¹ y), p2(x)⁻¹ y)`.
pub fn baaj_skandalis(g: &Group, f: &Factorization) -> Result<PairMap> {
    f.validate(g)?;
    Ok(PairMap::from_fn(g.order(), |x, y| {
        let w = g.mul(g.inv(f.p2(x)), y);
        (g.mul(x, f.p1(w)), w)
    }))
}

pub const SIGN_DEGREES: std::ops::RangeInclusive<usize> = 3..=4;

/// The coset solution of `(S_n, A_n, {1, π})` with `π` the transposition of
/// the two smallest points. Returns `S_n` alongside the map.
pub fn sign_solution(degree: usize) -> Result<(Group, PairMap)> {
    if !SIGN_DEGREES.contains(&degree) {
        return Err(Error::SizeOutOfRange {
            what: "sign solution",
            n: degree,
            min: *SIGN_DEGREES.start(),
            max: *SIGN_DEGREES.end(),
        });
    }
    let words = permutations(degree);
    let g = Group::from_permutations(&words)?;
    let even: Vec<Element> = (0..words.len())
        .filter(|&i| permutation_sign(&words[i]) == 1)
        .collect();
    let alternating = Subgroup::new(&g, &even)?;
    let mut transposition: Vec<usize> = (0..degree).collect();
    transposition.swap(0, 1);
    let pi = words
        .iter()
        .position(|w| *w == transposition)
        .expect("S_n contains every transposition");
    let gs = coset_solution(&g, &alternating, &[g.identity(), pi])?;
    Ok((g, gs.pair_map()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pentagon::{is_reversed_solution, is_solution_direct};
    use crate::theta::{kernel, theta_from_pairmap, theta_one};

    #[test]
    fn kac_takesaki_on_z3() {
        let z3 = Group::cyclic(3);
        assert_eq!(kac_takesaki_s(&z3).apply(1, 2), (0, 2));
        assert_eq!(kac_takesaki_t(&z3).apply(1, 2), (1, 1));
        assert_eq!(kac_takesaki_s(&Group::cyclic(1)), PairMap::identity(1));
    }

    #[test]
    fn endo_solutions() {
        let z6 = Group::cyclic(6);
        let m = z6.magma();
        let triple = SelfMap::new(6, (0..6).map(|x| 3 * x % 6).collect()).unwrap();
        assert_eq!(endo_solution(m, &triple).unwrap().apply(1, 2), (3, 0));
        assert_eq!(
            endo_solution(m, &SelfMap::identity(6)).unwrap(),
            kac_takesaki_s(&z6)
        );
        assert_eq!(
            constant_solution(m, 0).unwrap(),
            endo_solution(m, &SelfMap::constant(6, 0)).unwrap()
        );
        let doubling = SelfMap::new(6, (0..6).map(|x| 2 * x % 6).collect()).unwrap();
        assert!(matches!(
            endo_solution(m, &doubling),
            Err(Error::NotIdempotent(_))
        ));
        let not_endo = SelfMap::new(6, vec![0, 1, 1, 1, 1, 1]).unwrap();
        assert!(matches!(
            endo_solution(m, &not_endo),
            Err(Error::NotEndomorphism(..))
        ));
        assert!(matches!(
            constant_solution(m, 3),
            Err(Error::NotIdempotentElement(3))
        ));
        let sub = Magma::from_fn(3, |x, y| (x + 3 - y) % 3);
        assert!(matches!(
            endo_solution(&sub, &SelfMap::identity(3)),
            Err(Error::NotAssociative(_))
        ));
    }

    #[test]
    fn militaru_maps() {
        let id2 = SelfMap::identity(2);
        assert_eq!(militaru(2, &id2, &id2).unwrap(), PairMap::identity(2));
        let s = militaru(3, &SelfMap::constant(3, 0), &SelfMap::identity(3)).unwrap();
        assert_eq!(s.apply(1, 2), (0, 2));
        assert!(is_solution_direct(&s).holds() && is_reversed_solution(&s).holds());
        assert_eq!(
            militaru(2, &SelfMap::constant(2, 0), &SelfMap::constant(2, 1)),
            Err(Error::NotCommuting(0))
        );
        let swap = SelfMap::new(2, vec![1, 0]).unwrap();
        assert_eq!(militaru(2, &swap, &id2), Err(Error::NotIdempotent(0)));
    }

    #[test]
    fn factorization_maps_on_klein_four() {
        // (a, b) has index 2a + b; A = {(0,0),(1,0)}, B = {(0,0),(0,1)}.
        let v4 = Group::elementary_abelian_2(2);
        let f = Factorization::from_elements(&v4, &[0, 2], &[0, 1]).unwrap();
        let z = zakrzewski(&v4, &f).unwrap();
        let bs = baaj_skandalis(&v4, &f).unwrap();
        // x = (1,0) = 2, y = (1,1) = 3
        assert_eq!(z.apply(2, 3), (3, 1));
        // Formula: p2(x) = 0, w = 0 + y = (1,1), p1(w) = (1,0), x + (1,0) = (0,0).
        assert_eq!(bs.apply(2, 3), (0, 3));
        assert_eq!(z.opposite().unwrap().apply(2, 3), (0, 3));
        assert!(is_solution_direct(&z).holds() && is_solution_direct(&bs).holds());
    }

    #[test]
    fn trivial_factorizations_reduce_to_kac_takesaki() {
        let g = Group::symmetric(3);
        let whole = Subgroup::whole(&g);
        let trivial = Subgroup::trivial(&g);
        let f = Factorization::new(&g, whole.clone(), trivial.clone()).unwrap();
        assert_eq!(
            zakrzewski(&g, &f).unwrap(),
            kac_takesaki_s(&g).opposite().unwrap()
        );
        let f = Factorization::new(&g, trivial, whole).unwrap();
        assert_eq!(baaj_skandalis(&g, &f).unwrap(), kac_takesaki_t(&g));
    }

    #[test]
    fn sign_solution_on_s3() {
        let (g, s) = sign_solution(3).unwrap();
        assert!(is_solution_direct(&s).holds());
        let gs = theta_from_pairmap(&s, &g).unwrap();
        assert_eq!(kernel(&gs).elements(), &[0, 3, 4]);
        let pi = 2;
        let t1 = theta_one(&gs);
        for a in g.elements() {
            let even = [0, 3, 4].contains(&a);
            assert_eq!(t1.apply(a), if even { 0 } else { pi });
        }
        assert_eq!(s.apply(pi, pi), (0, pi));
        assert!(sign_solution(2).is_err() && sign_solution(5).is_err());
    }

    #[test]
    fn sign_solution_on_s4() {
        let (g, s) = sign_solution(4).unwrap();
        assert_eq!(g.order(), 24);
        assert!(is_solution_direct(&s).holds());
    }
}
