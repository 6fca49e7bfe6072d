use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{LinearForm, Poly, Scalar};
use crate::error::{Error, Result};

/// `num / ∏ fᵢ^{mᵢ}` with each `fᵢ` a normalized (primitive, leading entry
/// positive) linear form.
///
/// Factors that divide the numerator are cancelled eagerly, so a rational
/// function equal to a polynomial has an empty denominator.
#[derive(Clone)]
pub struct RatFunc<C> {
    num: Poly<C>,
    den: BTreeMap<LinearForm, u32>,
}

impl<C: Scalar> RatFunc<C> {
    pub fn zero(rank: usize) -> Self {
        RatFunc::from_poly(Poly::zero(rank))
    }

    pub fn one(rank: usize) -> Self {
        RatFunc::from_poly(Poly::one(rank))
    }

    pub fn from_poly(num: Poly<C>) -> Self {
        RatFunc { num, den: BTreeMap::new() }
    }

    /// `num / ∏ fᵢ^{mᵢ}`; factors need not be normalized.
    pub fn new<I>(num: Poly<C>, factors: I) -> Result<Self>
    where
        I: IntoIterator<Item = (LinearForm, u32)>,
    {
        let mut out = RatFunc::from_poly(num);
        for (f, m) in factors {
            for _ in 0..m {
                out.push_factor(&f)?;
            }
        }
        out.cancel();
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        self.num.rank()
    }

    pub fn numerator(&self) -> &Poly<C> {
        &self.num
    }

    pub fn denominator(&self) -> &BTreeMap<LinearForm, u32> {
        &self.den
    }

    pub fn denominator_poly(&self) -> Poly<C> {
        let rank = self.rank();
        self.den.iter().fold(Poly::one(rank), |acc, (f, &m)| &acc * &f.to_poly::<C>().pow(m))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn to_poly(&self) -> Result<Poly<C>> {
        if self.den.is_empty() {
            Ok(self.num.clone())
        } else {
            Err(Error::NonPolynomialResult(self.to_string()))
        }
    }

    pub fn into_poly(self) -> Result<Poly<C>> {
        if self.den.is_empty() {
            Ok(self.num)
        } else {
            Err(Error::NonPolynomialResult(self.to_string()))
        }
    }

    /// The value as a scalar, if it is constant.
    pub fn as_constant(&self) -> Option<C> {
        if self.den.is_empty() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// `self / f`.
    pub fn div_linear(&self, f: &LinearForm) -> Result<Self> {
        let mut out = self.clone();
        out.push_factor(f)?;
        out.cancel_factor(&f.normalize().1);
        Ok(out)
    }

    pub fn mul_poly(&self, p: &Poly<C>) -> Self {
        let mut out = RatFunc { num: &self.num * p, den: self.den.clone() };
        out.cancel();
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        RatFunc { num: self.num.scale(c), den: if c.is_zero() { BTreeMap::new() } else { self.den.clone() } }
    }

    /// Applies `α_j ↦ images[j]` to numerator and denominator.
    pub fn substitute(&self, images: &[Vec<i32>]) -> Self {
        let mut out = RatFunc::from_poly(self.num.substitute(images));
        for (f, &m) in &self.den {
            let g = f.substitute(images);
            for _ in 0..m {
                out.push_factor(&g).expect("a Weyl image of a nonzero form is nonzero");
            }
        }
        out
    }

    pub fn eval(&self, point: &[C]) -> Result<C> {
        let mut d = C::one();
        for (f, &m) in &self.den {
            let v = f.eval(point);
            if v.is_zero() {
                return Err(Error::PoleAtPoint);
            }
            for _ in 0..m {
                d = d * v.clone();
            }
        }
        Ok(self.num.eval(point) / d)
    }

    /// Divides the numerator by the content of `f` and records the
    /// primitive factor.
    fn push_factor(&mut self, f: &LinearForm) -> Result<()> {
        if f.rank() != self.rank() {
            return Err(Error::RankMismatch(self.rank(), f.rank()));
        }
        let (k, prim) = f.normalize();
        if k == 0 {
            return Err(Error::DivideByZeroForm);
        }
        if k != 1 {
            self.num = self.num.scale(&(C::one() / C::from_int(k)));
        }
        if self.num.is_zero() {
            self.den.clear();
        } else {
            *self.den.entry(prim).or_insert(0) += 1;
        }
        Ok(())
    }

    fn cancel_factor(&mut self, f: &LinearForm) {
        let Some(&m) = self.den.get(f) else { return };
        let mut left = m;
        while left > 0 {
            match self.num.checked_divide(f) {
                Some(q) => {
                    self.num = q;
                    left -= 1;
                }
                None => break,
            }
        }
        if left == 0 {
            self.den.remove(f);
        } else {
            self.den.insert(f.clone(), left);
        }
    }

    fn cancel(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let factors: Vec<LinearForm> = self.den.keys().cloned().collect();
        for f in &factors {
            self.cancel_factor(f);
        }
    }

    /// Numerators of `self` and `other` over their least common denominator.
    fn common_numerators(&self, other: &Self) -> (Poly<C>, Poly<C>, BTreeMap<LinearForm, u32>) {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        let mut lcm = self.den.clone();
        for (f, &m) in &other.den {
            let e = lcm.entry(f.clone()).or_insert(0);
            *e = (*e).max(m);
        }
        let lift = |r: &Self| {
            lcm.iter().fold(r.num.clone(), |acc, (f, &m)| {
                let have = r.den.get(f).copied().unwrap_or(0);
                if m > have {
                    &acc * &f.to_poly::<C>().pow(m - have)
                } else {
                    acc
                }
            })
        };
        (lift(self), lift(other), lcm)
    }
}

impl<C: Scalar> PartialEq for RatFunc<C> {
    fn eq(&self, other: &Self) -> bool {
        if self.rank() != other.rank() {
            return false;
        }
        if self.den == other.den {
            return self.num == other.num;
        }
        let (a, b, _) = self.common_numerators(other);
        a == b
    }
}

impl<C: Scalar> Add for &RatFunc<C> {
    type Output = RatFunc<C>;
    fn add(self, rhs: &RatFunc<C>) -> RatFunc<C> {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let (a, b, den) = self.common_numerators(rhs);
        let mut out = RatFunc { num: &a + &b, den };
        out.cancel();
        out
    }
}

impl<C: Scalar> Sub for &RatFunc<C> {
    type Output = RatFunc<C>;
    fn sub(self, rhs: &RatFunc<C>) -> RatFunc<C> {
        self + &(-rhs)
    }
}

impl<C: Scalar> Mul for &RatFunc<C> {
    type Output = RatFunc<C>;
    fn mul(self, rhs: &RatFunc<C>) -> RatFunc<C> {
        let mut out = RatFunc { num: &self.num * &rhs.num, den: self.den.clone() };
        if out.num.is_zero() {
            out.den.clear();
            return out;
        }
        for (f, &m) in &rhs.den {
            *out.den.entry(f.clone()).or_insert(0) += m;
        }
        out.cancel();
        out
    }
}

impl<C: Scalar> Neg for &RatFunc<C> {
    type Output = RatFunc<C>;
    fn neg(self) -> RatFunc<C> {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl<C: Scalar> $tr for RatFunc<C> {
            type Output = RatFunc<C>;
            fn $method(self, rhs: RatFunc<C>) -> RatFunc<C> {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl<C: Scalar> Neg for RatFunc<C> {
    type Output = RatFunc<C>;
    fn neg(self) -> RatFunc<C> {
        -&self
    }
}

impl<C: Scalar> From<Poly<C>> for RatFunc<C> {
    fn from(p: Poly<C>) -> Self {
        RatFunc::from_poly(p)
    }
}

impl<C: Scalar> fmt::Display for RatFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        let factors: Vec<String> = self
            .den
            .iter()
            .map(|(lf, &m)| if m == 1 { format!("({lf})") } else { format!("({lf})^{m}") })
            .collect();
        if factors.len() == 1 {
            write!(f, "({})/{}", self.num, factors[0])
        } else {
            write!(f, "({})/({})", self.num, factors.join("*"))
        }
    }
}

impl<C: Scalar> fmt::Debug for RatFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

/// A function on the `T`-fixed points, indexed by element (or coset) index.
#[derive(Clone)]
pub struct FixedPointFunction<C> {
    values: Vec<RatFunc<C>>,
}

impl<C: Scalar> PartialEq for FixedPointFunction<C> {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values
    }
}

impl<C: Scalar> fmt::Debug for FixedPointFunction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.values).finish()
    }
}

impl<C: Scalar> FixedPointFunction<C> {
    pub fn new(values: Vec<RatFunc<C>>) -> Self {
        FixedPointFunction { values }
    }

    pub fn from_polys(values: Vec<Poly<C>>) -> Self {
        FixedPointFunction { values: values.into_iter().map(RatFunc::from_poly).collect() }
    }

    pub fn zeros(len: usize, rank: usize) -> Self {
        FixedPointFunction { values: vec![RatFunc::zero(rank); len] }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, point: usize) -> &RatFunc<C> {
        &self.values[point]
    }

    pub fn set(&mut self, point: usize, value: RatFunc<C>) {
        self.values[point] = value;
    }

    pub fn values(&self) -> &[RatFunc<C>] {
        &self.values
    }

    pub fn into_values(self) -> Vec<RatFunc<C>> {
        self.values
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type Q = BigRational;

    fn p(rank: usize, s: &str) -> Poly<Q> {
        Poly::parse(rank, s).unwrap()
    }

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    #[test]
    fn cancellation() {
        let f = LinearForm::new(vec![1], -1);
        let r = RatFunc::new(p(1, "a1^2 - h^2"), [(f.clone(), 1)]).unwrap();
        assert!(r.is_polynomial());
        assert_eq!(r.to_poly().unwrap(), p(1, "a1 + h"));
        let s = RatFunc::new(p(1, "a1"), [(f, 2)]).unwrap();
        assert!(!s.is_polynomial());
        assert!(matches!(s.to_poly(), Err(Error::NonPolynomialResult(_))));
    }

    #[test]
    fn sign_and_content_move_to_numerator() {
        let r = RatFunc::new(p(1, "a1"), [(LinearForm::new(vec![-2], 2), 1)]).unwrap();
        assert_eq!(r.denominator().keys().next().unwrap(), &LinearForm::new(vec![1], -1));
        assert_eq!(r.numerator(), &p(1, "-1/2*a1"));
        assert_eq!(r.to_string(), "(-1/2*a1)/(a1 - h)");
    }

    #[test]
    fn sum_of_fractions() {
        // 1/a1 + 1/(-a1) = 0 ; h/a1 - (h - a1)/a1 = 1
        let a = LinearForm::new(vec![1], 0);
        let x = RatFunc::new(p(1, "1"), [(a.clone(), 1)]).unwrap();
        let y = RatFunc::new(p(1, "1"), [(-&a, 1)]).unwrap();
        assert!((&x + &y).is_zero());
        let u = RatFunc::new(p(1, "h"), [(a.clone(), 1)]).unwrap();
        let v = RatFunc::new(p(1, "h - a1"), [(a, 1)]).unwrap();
        assert_eq!((&u - &v).as_constant(), Some(q(1)));
    }

    #[test]
    fn errors() {
        let r = RatFunc::from_poly(p(1, "a1"));
        assert_eq!(r.div_linear(&LinearForm::new(vec![0], 0)), Err(Error::DivideByZeroForm));
        let s = r.div_linear(&LinearForm::new(vec![1], -1)).unwrap();
        assert_eq!(s.eval(&[q(1), q(1)]), Err(Error::PoleAtPoint));
        assert_eq!(s.eval(&[q(3), q(1)]), Ok(Q::new(3.into(), 2.into())));
    }

    fn arb_poly(rank: usize) -> impl Strategy<Value = Poly<Q>> {
        prop::collection::vec((prop::collection::vec(0u8..3, rank + 1), -4i64..=4), 0..5).prop_map(move |ts| {
            Poly::from_terms(rank, ts.into_iter().map(|(e, c)| (super::super::Monomial::from_exponents(&e), q(c))))
        })
    }

    fn arb_form(rank: usize) -> impl Strategy<Value = LinearForm> {
        (prop::collection::vec(-2i64..=2, rank), -1i64..=1)
            .prop_filter("nonzero", |(c, h)| *h != 0 || c.iter().any(|&x| x != 0))
            .prop_map(|(c, h)| LinearForm::new(c, h))
    }

    fn arb_rat(rank: usize) -> impl Strategy<Value = RatFunc<Q>> {
        (arb_poly(rank), prop::collection::vec(arb_form(rank), 0..3))
            .prop_map(|(n, fs)| RatFunc::new(n, fs.into_iter().map(|f| (f, 1))).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn field_laws(a in arb_rat(2), b in arb_rat(2), c in arb_rat(2)) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn multiply_back(a in arb_rat(2), f in arb_form(2)) {
            let back = a.div_linear(&f).unwrap().mul_poly(&f.to_poly());
            prop_assert_eq!(back.denominator(), a.denominator());
            prop_assert_eq!(back, a);
        }

        #[test]
        fn eval_is_a_homomorphism(a in arb_rat(1), b in arb_rat(1), x in -20i64..20, h in 21i64..40) {
            let pt = [q(x), q(h)];
            if let (Ok(va), Ok(vb)) = (a.eval(&pt), b.eval(&pt)) {
                prop_assert_eq!((&a * &b).eval(&pt).unwrap(), va.clone() * vb.clone());
                prop_assert_eq!((&a + &b).eval(&pt).unwrap(), va + vb);
            }
        }
    }
}
