//! Subword-sum formulas for single restrictions.

use std::collections::HashMap;
use std::ops::{Add, Mul};

use super::{positive_product, sign, Chamber};
use crate::error::Result;
use crate::poly_ring::{LinearForm, Poly, RatFunc, Scalar};
use crate::root_system::{WeylElement, WeylGroup};

/// `stab₋(w)|_y` from a reduced word of `y`:
/// `(−1)^l ∏_{R⁺∖R(y)}(α−ℏ) · Σ ℏ^{l−k} ∏ β_{i_j}` over index subsets whose
/// product (reduced or not) is `w`.
pub fn stab_minus_restriction<C: Scalar>(group: &WeylGroup, w: WeylElement, y_word: &[usize]) -> Result<Poly<C>> {
    let betas = group.inversion_set(y_word)?;
    let rank = group.rank();
    let l = y_word.len();
    let beta_polys: Vec<Poly<C>> = betas.iter().map(|b| LinearForm::from_root(b).to_poly()).collect();
    let mut dp = SubwordDp { group, word: y_word, target: w, memo: vec![HashMap::new(); l + 1], ascents_only: false };
    let hbar = Poly::hbar(rank);
    let sum = dp.eval(0, WeylElement::IDENTITY, &mut |_, _| hbar.clone(), &mut |i, _| beta_polys[i].clone());
    if sum.is_zero() {
        return Ok(sum);
    }
    let outside = complement_product(group, &betas);
    Ok((&sum * &outside).scale(&sign(l)))
}

/// `stab₊(y)|_w` from a reduced word of `y`, summing
/// `(−1)^l ∏_j (v_jα_{i_j} − ℏ)/(v_jα_{i_j}) · ℏ^{l−k} / ∏_{i_j<r<i_{j+1}} v_jα_r`
/// times `∏_{R⁺}α`, where `v_j = σ_{i_1}⋯σ_{i_j}` and the gaps include the
/// stretches before the first and after the last chosen index.
pub fn stab_plus_restriction<C: Scalar>(group: &WeylGroup, y_word: &[usize], w: WeylElement) -> Result<Poly<C>> {
    let y = group.reduced_product(y_word)?;
    let rank = group.rank();
    if !group.bruhat_leq(w, y) {
        return Ok(Poly::zero(rank));
    }
    let rs = group.root_system();
    let alphas: Vec<Vec<i32>> = (0..rank).map(|i| rs.simple_root(i)).collect();
    let hbar = RatFunc::from_poly(Poly::hbar(rank));
    let mut skip = |r: usize, v: WeylElement| {
        let va = LinearForm::from_root(&group.act_root(v, &alphas[y_word[r]]));
        hbar.div_linear(&va).expect("roots are nonzero")
    };
    let mut take = |j: usize, v: WeylElement| {
        let vs = group.mul_simple(v, y_word[j]);
        let root = group.act_root(vs, &alphas[y_word[j]]);
        RatFunc::from_poly(LinearForm::root_shifted(&root, -1).to_poly())
            .div_linear(&LinearForm::from_root(&root))
            .expect("roots are nonzero")
    };
    let mut dp = SubwordDp { group, word: y_word, target: w, memo: vec![HashMap::new(); y_word.len() + 1], ascents_only: false };
    let sum = dp.eval(0, WeylElement::IDENTITY, &mut skip, &mut take);
    let total = sum.mul_poly(&positive_product(group, |b| LinearForm::from_root(b)));
    Ok(total.into_poly()?.scale(&sign(y_word.len())))
}

/// Every restriction along one reduced word of `y` at once: entry `w` of
/// the result is `stab₋(w)|_y` or `stab₊(y)|_w`. Same sums as the
/// single-entry forms, run forward over prefixes instead of per target.
pub fn closed_form_column<C: Scalar>(group: &WeylGroup, chamber: Chamber, y_word: &[usize]) -> Result<Vec<Poly<C>>> {
    let betas = group.inversion_set(y_word)?;
    let rank = group.rank();
    let l = y_word.len();
    let mut column = match chamber {
        Chamber::Minus => {
            let hbar = Poly::hbar(rank);
            let mut acc: HashMap<WeylElement, Poly<C>> = HashMap::from([(WeylElement::IDENTITY, Poly::one(rank))]);
            for (i, beta) in betas.iter().enumerate() {
                let b = LinearForm::from_root(beta).to_poly();
                let mut next: HashMap<WeylElement, Poly<C>> = HashMap::with_capacity(acc.len() * 2);
                for (v, val) in &acc {
                    *next.entry(*v).or_insert_with(|| Poly::zero(rank)) += &(&hbar * val);
                    *next.entry(group.mul_simple(*v, y_word[i])).or_insert_with(|| Poly::zero(rank)) += &(&b * val);
                }
                acc = next;
            }
            let outside = complement_product(group, &betas).scale(&sign(l));
            let mut out = vec![Poly::zero(rank); group.order()];
            for (w, val) in acc {
                out[w.index()] = &val * &outside;
            }
            out
        }
        Chamber::Plus => {
            let rs = group.root_system();
            let hbar = RatFunc::from_poly(Poly::hbar(rank));
            let mut acc: HashMap<WeylElement, RatFunc<C>> = HashMap::from([(WeylElement::IDENTITY, RatFunc::one(rank))]);
            for &letter in y_word {
                let alpha = rs.simple_root(letter);
                let mut next: HashMap<WeylElement, RatFunc<C>> = HashMap::with_capacity(acc.len() * 2);
                for (v, val) in &acc {
                    let skip = hbar.div_linear(&LinearForm::from_root(&group.act_root(*v, &alpha)))?;
                    let vs = group.mul_simple(*v, letter);
                    let root = group.act_root(vs, &alpha);
                    let take = RatFunc::from_poly(LinearForm::root_shifted(&root, -1).to_poly()).div_linear(&LinearForm::from_root(&root))?;
                    add_into(&mut next, *v, &skip * val, rank);
                    add_into(&mut next, vs, &take * val, rank);
                }
                acc = next;
            }
            let top = positive_product(group, |b| LinearForm::from_root(b));
            let mut out = vec![Poly::zero(rank); group.order()];
            for (w, val) in acc {
                out[w.index()] = val.mul_poly(&top).into_poly()?.scale(&sign(l));
            }
            out
        }
    };
    column.shrink_to_fit();
    Ok(column)
}

fn add_into<C: Scalar>(map: &mut HashMap<WeylElement, RatFunc<C>>, k: WeylElement, v: RatFunc<C>, rank: usize) {
    let slot = map.entry(k).or_insert_with(|| RatFunc::zero(rank));
    *slot = &*slot + &v;
}

/// `∏_{α∈R⁺∖R(y)} (α − ℏ)`, with `R(y)` given as the inversion roots.
pub(crate) fn complement_product<C: Scalar>(group: &WeylGroup, inversions: &[Vec<i32>]) -> Poly<C> {
    let rank = group.rank();
    group
        .root_system()
        .positive_roots()
        .iter()
        .filter(|a| !inversions.contains(a))
        .fold(Poly::one(rank), |acc, a| &acc * &LinearForm::root_shifted(a, -1).to_poly())
}

/// Memoized sum over index subsets of `word` whose product is `target`.
/// `skip(i, v)` / `take(i, v)` weigh position `i` given the product `v` of
/// the letters taken before it. With `ascents_only` a letter may only be
/// taken if it lengthens the product, which restricts the sum to reduced
/// subwords.
pub(crate) struct SubwordDp<'a, T> {
    pub(crate) group: &'a WeylGroup,
    pub(crate) word: &'a [usize],
    pub(crate) target: WeylElement,
    pub(crate) memo: Vec<HashMap<WeylElement, T>>,
    pub(crate) ascents_only: bool,
}

pub(crate) trait DpValue: Clone {
    fn zero_like(rank: usize) -> Self;
    fn one_like(rank: usize) -> Self;
    fn is_zero_value(&self) -> bool;
}

impl<C: Scalar> DpValue for Poly<C> {
    fn zero_like(rank: usize) -> Self {
        Poly::zero(rank)
    }
    fn one_like(rank: usize) -> Self {
        Poly::one(rank)
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

impl<C: Scalar> DpValue for RatFunc<C> {
    fn zero_like(rank: usize) -> Self {
        RatFunc::zero(rank)
    }
    fn one_like(rank: usize) -> Self {
        RatFunc::one(rank)
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

impl<T> SubwordDp<'_, T>
where
    T: DpValue,
    for<'x> &'x T: Mul<&'x T, Output = T> + Add<&'x T, Output = T>,
{
    pub(crate) fn eval<S, K>(&mut self, i: usize, v: WeylElement, skip: &mut S, take: &mut K) -> T
    where
        S: FnMut(usize, WeylElement) -> T,
        K: FnMut(usize, WeylElement) -> T,
    {
        let rank = self.group.rank();
        let remaining = self.word.len() - i;
        if remaining == 0 {
            return if v == self.target { T::one_like(rank) } else { T::zero_like(rank) };
        }
        // Each taken letter moves the length by one.
        let gap = self.group.length(self.group.mul(self.group.inverse(v), self.target));
        if gap > remaining {
            return T::zero_like(rank);
        }
        if let Some(val) = self.memo[i].get(&v) {
            return val.clone();
        }
        let vs = self.group.mul_simple(v, self.word[i]);
        let keep = self.eval(i + 1, v, skip, take);
        let took = if self.ascents_only && self.group.length(vs) < self.group.length(v) {
            T::zero_like(rank)
        } else {
            self.eval(i + 1, vs, skip, take)
        };
        let val = match (keep.is_zero_value(), took.is_zero_value()) {
            (true, true) => keep,
            (false, true) => &skip(i, v) * &keep,
            (true, false) => &take(i, v) * &took,
            (false, false) => &(&skip(i, v) * &keep) + &(&take(i, v) * &took),
        };
        self.memo[i].insert(v, val.clone());
        val
    }
}
