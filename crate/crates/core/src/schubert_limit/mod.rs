//! Equivariant Schubert classes restricted to fixed points, directly from
//! reduced subwords and as the ℏ → ∞ limit of the minus-chamber stable basis.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly_ring::{LinearForm, Poly, Scalar};
use crate::root_system::{CosetSpace, WeylElement, WeylGroup};
use crate::stable_basis::closed::SubwordDp;
use crate::stable_basis::{Chamber, RestrictionTable};

/// `[B⁻wB/B]|_y = Σ β_{i₁}⋯β_{i_k}` over reduced subwords of `y_word`
/// multiplying to `w`, where `β_i` is the `i`-th inversion root of the word.
pub fn billey_restriction<C: Scalar>(group: &WeylGroup, w: WeylElement, y_word: &[usize]) -> Result<Poly<C>> {
    let betas: Vec<Poly<C>> = group.inversion_set(y_word)?.iter().map(|b| LinearForm::from_root(b).to_poly()).collect();
    let rank = group.rank();
    let one = Poly::one(rank);
    let mut dp = SubwordDp { group, word: y_word, target: w, memo: vec![HashMap::new(); y_word.len() + 1], ascents_only: true };
    Ok(dp.eval(0, WeylElement::IDENTITY, &mut |_, _| one.clone(), &mut |i, _| betas[i].clone()))
}

/// `(−1)^n` times the `ℏ^{n−l(w)}` coefficient of `stab₋(w)|_y`, `n = |R⁺|`.
pub fn billey_from_limit<C: Scalar>(group: &WeylGroup, w: WeylElement, y: WeylElement, minus: &RestrictionTable<C>) -> Result<Poly<C>> {
    if minus.chamber() != Chamber::Minus {
        return Err(Error::ConfigInvalid("the limit is taken in the minus chamber".into()));
    }
    let n = group.root_system().positive_roots().len();
    let k = (n - group.length(w)) as u32;
    let c = minus.restriction(w, y).hbar_coefficient(k);
    Ok(if n % 2 == 0 { c } else { -c })
}

/// `[B⁻w̄P/P]|_ȳ`, computed as the Borel restriction at the minimal
/// representative of `w̄` and every representative of `ȳ`, which must all
/// agree.
pub fn schubert_p_restriction<C: Scalar>(group: &WeylGroup, cs: &CosetSpace, wbar: usize, ybar: usize) -> Result<Poly<C>> {
    let w = cs.minimal_rep(wbar);
    let mut members = cs.members(ybar).iter();
    let first = *members.next().expect("cosets are nonempty");
    let value = billey_restriction(group, w, group.word(first))?;
    for &y in members {
        let other = billey_restriction(group, w, group.word(y))?;
        if other != value {
            return Err(Error::RepresentativeInconsistency(format!(
                "w={}: {value} at {}, {other} at {}",
                group.format_element(w),
                group.format_element(first),
                group.format_element(y)
            )));
        }
    }
    Ok(value)
}

/// Dense `(w, y)` table of Schubert restrictions, row-major.
#[derive(Clone, PartialEq)]
pub struct SchubertRestrictionTable<C> {
    rank: usize,
    size: usize,
    entries: Vec<Poly<C>>,
}

impl<C: Scalar> SchubertRestrictionTable<C> {
    pub fn build(group: &WeylGroup) -> Result<Self> {
        let n = group.order();
        let entries = (0..n * n)
            .into_par_iter()
            .map(|k| {
                let (w, y) = (group.element(k / n), group.element(k % n));
                if group.bruhat_leq(w, y) {
                    billey_restriction(group, w, group.word(y))
                } else {
                    Ok(Poly::zero(group.rank()))
                }
            })
            .collect::<Result<_>>()?;
        Ok(SchubertRestrictionTable { rank: group.rank(), size: n, entries })
    }

    /// Limit of every entry of a full minus table.
    pub fn from_limit(group: &WeylGroup, minus: &RestrictionTable<C>) -> Result<Self> {
        let n = group.order();
        let entries = (0..n * n)
            .map(|k| billey_from_limit(group, group.element(k / n), group.element(k % n), minus))
            .collect::<Result<_>>()?;
        Ok(SchubertRestrictionTable { rank: group.rank(), size: n, entries })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entries(&self) -> &[Poly<C>] {
        &self.entries
    }

    pub fn get(&self, w: WeylElement, y: WeylElement) -> &Poly<C> {
        &self.entries[w.index() * self.size + y.index()]
    }
}

impl<C: Scalar> fmt::Debug for SchubertRestrictionTable<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SchubertRestrictionTable").field("rank", &self.rank).field("size", &self.size).finish_non_exhaustive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{CartanType, RootSystem, DEFAULT_MAX_GROUP_ORDER};
    use crate::stable_basis::{stab_table, Method};
    use num_rational::BigRational;

    type Q = BigRational;

    fn group(t: CartanType, n: usize) -> WeylGroup {
        WeylGroup::new(RootSystem::new(t, n).unwrap(), DEFAULT_MAX_GROUP_ORDER).unwrap()
    }

    fn p(rank: usize, s: &str) -> Poly<Q> {
        Poly::parse(rank, s).unwrap()
    }

    #[test]
    fn billey_examples() {
        let a2 = group(CartanType::A, 2);
        let s1 = a2.reduced_product(&[0]).unwrap();
        assert_eq!(billey_restriction::<Q>(&a2, s1, &[0, 1, 0]).unwrap(), p(2, "a1 + a2"));
        assert_eq!(billey_restriction::<Q>(&a2, a2.identity(), &[0, 1, 0]).unwrap(), Poly::one(2));
        assert!(billey_restriction::<Q>(&a2, s1, &[0, 0]).is_err());
        let a1 = group(CartanType::A, 1);
        assert_eq!(billey_restriction::<Q>(&a1, a1.longest(), &[0]).unwrap(), p(1, "a1"));
    }

    #[test]
    fn limit_examples() {
        let a1 = group(CartanType::A, 1);
        let m1 = stab_table::<Q>(&a1, Chamber::Minus, Method::Recursion).unwrap();
        assert_eq!(billey_from_limit(&a1, a1.identity(), a1.longest(), &m1).unwrap(), Poly::one(1));
        assert_eq!(billey_from_limit(&a1, a1.longest(), a1.longest(), &m1).unwrap(), p(1, "a1"));
        let a2 = group(CartanType::A, 2);
        let m2 = stab_table::<Q>(&a2, Chamber::Minus, Method::Recursion).unwrap();
        let s1 = a2.reduced_product(&[0]).unwrap();
        let s1s2 = a2.reduced_product(&[0, 1]).unwrap();
        assert_eq!(billey_from_limit(&a2, s1, s1s2, &m2).unwrap(), p(2, "a1"));
    }

    #[test]
    fn coset_examples() {
        let g = group(CartanType::A, 2);
        let cs = g.coset_space(&[1]).unwrap();
        let s1 = cs.project(g.reduced_product(&[0]).unwrap());
        assert_eq!(schubert_p_restriction::<Q>(&g, &cs, s1, s1).unwrap(), p(2, "a1"));
        for y in 0..cs.len() {
            assert_eq!(schubert_p_restriction::<Q>(&g, &cs, 0, y).unwrap(), Poly::one(2));
        }
        let top = cs.project(g.reduced_product(&[1, 0]).unwrap());
        assert!(schubert_p_restriction::<Q>(&g, &cs, top, s1).unwrap().is_zero());
    }

    #[test]
    fn table_diagonal_is_inversion_product() {
        let g = group(CartanType::B, 2);
        let t = SchubertRestrictionTable::<Q>::build(&g).unwrap();
        for w in g.elements() {
            let expect = g
                .inversion_set(g.word(w))
                .unwrap()
                .iter()
                .fold(Poly::one(2), |acc, b| &acc * &LinearForm::from_root(b).to_poly());
            assert_eq!(t.get(w, w), &expect);
        }
    }
}
