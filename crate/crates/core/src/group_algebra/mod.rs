//! The twisted group algebra `Q ⋊ W` and the two R-matrix products.
//!
//! An element is a finite sum `Σ c_w u_w` with rational-function
//! coefficients. The twisted product moves scalars across group elements by
//! the Weyl action, `u_w f = (w·f) u_w`. The minus-chamber R-matrix is
//! multiplied without the twist: its factors already carry the prefix
//! action through the inversion roots `β_i`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly_ring::{weyl_act_ratfunc, LinearForm, Poly, RatFunc, Scalar};
use crate::root_system::{WeylElement, WeylGroup};

#[derive(Clone)]
pub struct GroupAlgebraElement<C> {
    rank: usize,
    coeffs: BTreeMap<WeylElement, RatFunc<C>>,
}

impl<C: Scalar> GroupAlgebraElement<C> {
    pub fn zero(rank: usize) -> Self {
        GroupAlgebraElement { rank, coeffs: BTreeMap::new() }
    }

    /// `1·u_e`.
    pub fn unit(rank: usize) -> Self {
        GroupAlgebraElement::basis(rank, WeylElement::IDENTITY)
    }

    /// `u_w`.
    pub fn basis(rank: usize, w: WeylElement) -> Self {
        GroupAlgebraElement::term(w, RatFunc::one(rank))
    }

    /// `f·u_w`.
    pub fn term(w: WeylElement, f: RatFunc<C>) -> Self {
        let mut x = GroupAlgebraElement::zero(f.rank());
        x.add_term(w, f);
        x
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of group elements with a nonzero coefficient.
    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (WeylElement, &RatFunc<C>)> {
        self.coeffs.iter().map(|(w, c)| (*w, c))
    }

    pub fn coefficient(&self, w: WeylElement) -> RatFunc<C> {
        self.coeffs.get(&w).cloned().unwrap_or_else(|| RatFunc::zero(self.rank))
    }

    pub fn add_term(&mut self, w: WeylElement, f: RatFunc<C>) {
        assert_eq!(f.rank(), self.rank, "rank mismatch");
        if f.is_zero() {
            return;
        }
        let sum = match self.coeffs.remove(&w) {
            Some(old) => &old + &f,
            None => f,
        };
        if !sum.is_zero() {
            self.coeffs.insert(w, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_term(*w, c.clone());
        }
        out
    }

    /// Twisted product: `(f u_a)(g u_b) = f·(a·g) u_{ab}`.
    pub fn mul(&self, other: &Self, group: &WeylGroup) -> Self {
        self.product(other, group, true)
    }

    /// Product with central scalars: `(f u_a)(g u_b) = f g u_{ab}`.
    pub fn mul_untwisted(&self, other: &Self, group: &WeylGroup) -> Self {
        self.product(other, group, false)
    }

    fn product(&self, other: &Self, group: &WeylGroup, twisted: bool) -> Self {
        assert_eq!(self.rank, other.rank, "rank mismatch");
        let mut out = GroupAlgebraElement::zero(self.rank);
        for (&a, f) in &self.coeffs {
            for (&b, g) in &other.coeffs {
                let g = if twisted { weyl_act_ratfunc(group, a, g).expect("ranks checked") } else { g.clone() };
                out.add_term(group.mul(a, b), f * &g);
            }
        }
        out
    }

    /// Applies `w` to every coefficient, leaving the group part alone.
    pub fn act(&self, group: &WeylGroup, w: WeylElement) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(v, c)| (*v, weyl_act_ratfunc(group, w, c).expect("ranks checked")))
            .collect();
        GroupAlgebraElement { rank: self.rank, coeffs }
    }

    /// `self · (A + B u_σᵢ)` where `A`, `B` are given as functions of the
    /// group element they get twisted by.
    fn right_mul_factor<F>(&self, group: &WeylGroup, i: usize, factor: F) -> Self
    where
        F: Fn(WeylElement) -> (RatFunc<C>, RatFunc<C>),
    {
        let mut out = GroupAlgebraElement::zero(self.rank);
        for (&v, c) in &self.coeffs {
            let (a, b) = factor(v);
            out.add_term(v, c * &a);
            out.add_term(group.mul_simple(v, i), c * &b);
        }
        out
    }
}

impl<C: Scalar> PartialEq for GroupAlgebraElement<C> {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.coeffs == other.coeffs
    }
}

impl<C: Scalar> fmt::Debug for GroupAlgebraElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.coeffs.iter().map(|(w, c)| (w.index(), c))).finish()
    }
}

/// Checked twisted product.
pub fn algebra_mul<C: Scalar>(
    group: &WeylGroup,
    x: &GroupAlgebraElement<C>,
    y: &GroupAlgebraElement<C>,
) -> Result<GroupAlgebraElement<C>> {
    check_rank(group, x)?;
    check_rank(group, y)?;
    Ok(x.mul(y, group))
}

pub fn coefficient<C: Scalar>(x: &GroupAlgebraElement<C>, w: WeylElement) -> RatFunc<C> {
    x.coefficient(w)
}

fn check_rank<C: Scalar>(group: &WeylGroup, x: &GroupAlgebraElement<C>) -> Result<()> {
    if x.rank() != group.rank() {
        return Err(Error::RankMismatch(x.rank(), group.rank()));
    }
    Ok(())
}

/// `∏ᵢ (1 + (βᵢ/ℏ) u_σᵢ)` over a reduced word, scalars central.
pub fn rmatrix_minus<C: Scalar>(group: &WeylGroup, word: &[usize]) -> Result<GroupAlgebraElement<C>> {
    let betas = group.inversion_set(word)?;
    let rank = group.rank();
    let mut x = GroupAlgebraElement::unit(rank);
    for (&i, beta) in word.iter().zip(&betas) {
        x = extend_minus(&x, group, i, beta);
    }
    Ok(x)
}

/// One more factor `(1 + (β/ℏ) u_σᵢ)` on the right.
pub(crate) fn extend_minus<C: Scalar>(
    x: &GroupAlgebraElement<C>,
    group: &WeylGroup,
    i: usize,
    beta: &[i32],
) -> GroupAlgebraElement<C> {
    let rank = group.rank();
    let b = RatFunc::from_poly(LinearForm::from_root(beta).to_poly::<C>())
        .div_linear(&LinearForm::hbar(rank))
        .expect("ℏ is nonzero");
    let one = RatFunc::one(rank);
    x.right_mul_factor(group, i, |_| (one.clone(), b.clone()))
}

/// `∏ᵢ (ℏ/αᵢ + ((ℏ+αᵢ)/αᵢ) u_σᵢ)` over a reduced word, twisted product.
pub fn rmatrix_plus<C: Scalar>(group: &WeylGroup, word: &[usize]) -> Result<GroupAlgebraElement<C>> {
    group.reduced_product(word)?;
    let mut x = GroupAlgebraElement::unit(group.rank());
    for &i in word {
        x = extend_plus(&x, group, i);
    }
    Ok(x)
}

/// One more factor `(ℏ/αᵢ + ((ℏ+αᵢ)/αᵢ) u_σᵢ)` on the right; moving it past
/// `u_v` replaces `αᵢ` by `vαᵢ`.
pub(crate) fn extend_plus<C: Scalar>(x: &GroupAlgebraElement<C>, group: &WeylGroup, i: usize) -> GroupAlgebraElement<C> {
    let rank = group.rank();
    let alpha = group.root_system().simple_root(i);
    x.right_mul_factor(group, i, |v| {
        let va = group.act_root(v, &alpha);
        let den = LinearForm::from_root(&va);
        let a = RatFunc::from_poly(Poly::hbar(rank)).div_linear(&den).expect("roots are nonzero");
        let b = RatFunc::from_poly(LinearForm::root_shifted(&va, 1).to_poly()).div_linear(&den).expect("roots are nonzero");
        (a, b)
    })
}
