//! Exact polynomials in `α₁…αₙ, ℏ`, linear forms, and rational functions
//! whose denominators are products of linear forms.
//!
//! Everything is generic over a [`Scalar`] coefficient field. Exactness
//! (divisibility checks, equality) only holds for exact fields such as
//! `BigRational`; floating-point instantiations are for evaluation.

mod linear;
mod poly;
mod ratfunc;

pub use linear::LinearForm;
pub(crate) use poly::parse_ratio;
pub use poly::{Monomial, Poly, MAX_VARS};
pub use ratfunc::{FixedPointFunction, RatFunc};

use std::fmt;

use num_traits::{FromPrimitive, Num, Signed};

use crate::error::{Error, Result};
use crate::root_system::{WeylElement, WeylGroup};

/// A coefficient field.
pub trait Scalar:
    Num + Signed + FromPrimitive + Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer fits the scalar type")
    }
}

impl<T> Scalar for T where
    T: Num + Signed + FromPrimitive + Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static
{
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Checked binary arithmetic; the operator impls panic on rank mismatch
/// instead.
pub fn poly_arith<C: Scalar>(p: &Poly<C>, q: &Poly<C>, op: PolyOp) -> Result<Poly<C>> {
    if p.rank() != q.rank() {
        return Err(Error::RankMismatch(p.rank(), q.rank()));
    }
    Ok(match op {
        PolyOp::Add => p + q,
        PolyOp::Sub => p - q,
        PolyOp::Mul => p * q,
    })
}

/// `w·p`: substitutes `α_i ↦ w(α_i)` and fixes `ℏ`.
pub fn weyl_act<C: Scalar>(group: &WeylGroup, w: WeylElement, p: &Poly<C>) -> Result<Poly<C>> {
    if p.rank() != group.rank() {
        return Err(Error::RankMismatch(p.rank(), group.rank()));
    }
    if w == WeylElement::IDENTITY {
        return Ok(p.clone());
    }
    Ok(p.substitute(&group.simple_root_images(w)))
}

/// `w·f` on a rational function.
pub fn weyl_act_ratfunc<C: Scalar>(group: &WeylGroup, w: WeylElement, f: &RatFunc<C>) -> Result<RatFunc<C>> {
    if f.rank() != group.rank() {
        return Err(Error::RankMismatch(f.rank(), group.rank()));
    }
    if w == WeylElement::IDENTITY {
        return Ok(f.clone());
    }
    Ok(f.substitute(&group.simple_root_images(w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{CartanType, RootSystem, DEFAULT_MAX_GROUP_ORDER};
    use num_rational::BigRational;

    type Q = BigRational;

    fn p(rank: usize, s: &str) -> Poly<Q> {
        Poly::parse(rank, s).unwrap()
    }

    fn group(t: CartanType, n: usize) -> WeylGroup {
        WeylGroup::new(RootSystem::new(t, n).unwrap(), DEFAULT_MAX_GROUP_ORDER).unwrap()
    }

    #[test]
    fn arith_examples() {
        let a = p(1, "a1 - h");
        let b = p(1, "-a1");
        assert_eq!(poly_arith(&a, &b, PolyOp::Mul).unwrap(), p(1, "-a1^2 + h*a1"));
        assert_eq!(poly_arith(&a, &Poly::zero(1), PolyOp::Add).unwrap(), a);
        let lhs = &(&p(2, "a2 - h") * &p(2, "h")) * &p(2, "a1");
        assert_eq!(lhs, p(2, "h*a1*a2 - h^2*a1"));
        assert_eq!(poly_arith(&a, &p(2, "a1"), PolyOp::Sub), Err(Error::RankMismatch(1, 2)));
    }

    #[test]
    fn weyl_act_examples() {
        let a1 = group(CartanType::A, 1);
        let q = p(1, "a1 - h");
        assert_eq!(weyl_act(&a1, a1.identity(), &q).unwrap(), q);
        assert_eq!(weyl_act(&a1, a1.longest(), &q).unwrap(), p(1, "-a1 - h"));
        let a2 = group(CartanType::A, 2);
        let s1s2 = a2.reduced_product(&[0, 1]).unwrap();
        assert_eq!(weyl_act(&a2, s1s2, &p(2, "a2")).unwrap(), p(2, "-a1 - a2"));
        assert_eq!(weyl_act(&a2, s1s2, &q), Err(Error::RankMismatch(1, 2)));
    }

    #[test]
    fn weyl_act_is_a_left_action() {
        for (t, n) in [(CartanType::A, 2), (CartanType::B, 2)] {
            let g = group(t, n);
            let f = p(n, "a1^2*a2 - 3*h*a2 + 1/2*a1*h^2 + 7");
            for w1 in g.elements() {
                for w2 in g.elements() {
                    let lhs = weyl_act(&g, w1, &weyl_act(&g, w2, &f).unwrap()).unwrap();
                    let rhs = weyl_act(&g, g.mul(w1, w2), &f).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
