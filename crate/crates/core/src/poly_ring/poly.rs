use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use super::{LinearForm, Scalar};
use crate::error::{Error, Result};

/// Maximum number of variables (rank 8 plus `ℏ`).
pub const MAX_VARS: usize = 9;

/// Exponent vector. Slot `rank` holds the `ℏ` exponent; unused slots are 0.
///
/// Ordered graded-lexicographically with `α₁` most significant and `ℏ`
/// last.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial {
    // Cached total degree; leads the derived order.
    degree: u16,
    exps: [u8; MAX_VARS],
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(slot: usize) -> Self {
        Monomial::one().with_exponent(slot, 1)
    }

    pub fn from_exponents(exps: &[u8]) -> Self {
        assert!(exps.len() <= MAX_VARS);
        let mut m = Monomial::one();
        m.exps[..exps.len()].copy_from_slice(exps);
        m.degree = exps.iter().map(|&e| u16::from(e)).sum();
        m
    }

    pub fn exponent(&self, slot: usize) -> u8 {
        self.exps[slot]
    }

    pub fn exponents(&self) -> &[u8; MAX_VARS] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        u32::from(self.degree)
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    fn with_exponent(mut self, slot: usize, e: u8) -> Self {
        self.degree = self.degree - u16::from(self.exps[slot]) + u16::from(e);
        self.exps[slot] = e;
        self
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = [0u8; MAX_VARS];
        for k in 0..MAX_VARS {
            out[k] = self.exps[k].checked_add(other.exps[k]).expect("monomial exponent overflow");
        }
        Monomial { degree: self.degree + other.degree, exps: out }
    }
}

/// A polynomial in `α₁…α_rank` and `ℏ`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    rank: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Scalar> Poly<C> {
    pub fn zero(rank: usize) -> Self {
        assert!(rank < MAX_VARS, "rank {rank} exceeds the supported maximum");
        Poly { rank, terms: BTreeMap::new() }
    }

    pub fn constant(rank: usize, c: C) -> Self {
        let mut p = Poly::zero(rank);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn one(rank: usize) -> Self {
        Poly::constant(rank, C::one())
    }

    /// `α_{i+1}` (0-based `i`).
    pub fn alpha(rank: usize, i: usize) -> Self {
        assert!(i < rank);
        Poly::monomial(rank, Monomial::var(i), C::one())
    }

    pub fn hbar(rank: usize) -> Self {
        Poly::monomial(rank, Monomial::var(rank), C::one())
    }

    pub fn monomial(rank: usize, m: Monomial, c: C) -> Self {
        let mut p = Poly::zero(rank);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(rank: usize, terms: I) -> Self {
        let mut p = Poly::zero(rank);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// The constant term, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Poly::zero(self.rank);
        }
        Poly { rank: self.rank, terms: self.terms.iter().map(|(m, v)| (*m, v.clone() * c.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Poly::one(self.rank);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// `Some(d)` if every term has total degree `d`; `None` for zero or
    /// inhomogeneous polynomials.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    pub fn hbar_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| u32::from(m.exponent(self.rank))).max()
    }

    /// Coefficient of `ℏᵏ`, as a polynomial in the `α`s.
    pub fn hbar_coefficient(&self, k: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| u32::from(m.exponent(self.rank)) == k)
            .map(|(m, c)| (m.with_exponent(self.rank, 0), c.clone()));
        Poly { rank: self.rank, terms: terms.collect() }
    }

    /// Reduction modulo `ℏᵏ`.
    pub fn truncate_hbar(&self, k: u32) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| u32::from(m.exponent(self.rank)) < k);
        Poly { rank: self.rank, terms: terms.map(|(m, c)| (*m, c.clone())).collect() }
    }

    /// True if every term carries at least one factor of `ℏ`.
    pub fn divisible_by_hbar(&self) -> bool {
        self.terms.keys().all(|m| m.exponent(self.rank) > 0)
    }

    /// True if all coefficients are nonnegative integers (in a rational
    /// scalar this means denominator 1).
    pub fn has_nonnegative_integer_coefficients(&self) -> bool
    where
        C: num_traits::ToPrimitive,
    {
        self.terms.values().all(|c| !c.is_negative() && c.to_i64().is_some_and(|i| C::from_int(i) == *c))
    }

    /// Substitutes `α_j ↦ images[j]` (integer linear combinations of the
    /// `α`s); `ℏ` is fixed.
    pub fn substitute(&self, images: &[Vec<i32>]) -> Self {
        assert_eq!(images.len(), self.rank);
        let rank = self.rank;
        let image_polys: Vec<Poly<C>> = images
            .iter()
            .map(|v| LinearForm::from_root(v).to_poly())
            .collect();
        let mut powers: Vec<Vec<Poly<C>>> = image_polys.iter().map(|p| vec![Poly::one(rank), p.clone()]).collect();
        let mut out = Poly::zero(rank);
        for (m, c) in &self.terms {
            let mut term = Poly::monomial(rank, Monomial::one().with_exponent(rank, m.exponent(rank)), c.clone());
            for j in 0..rank {
                let e = m.exponent(j) as usize;
                if e == 0 {
                    continue;
                }
                while powers[j].len() <= e {
                    let next = powers[j].last().unwrap() * &image_polys[j];
                    powers[j].push(next);
                }
                term = &term * &powers[j][e];
            }
            out += &term;
        }
        out
    }

    pub fn eval(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.rank + 1, "point needs one value per α plus ℏ");
        let mut total = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (slot, x) in point.iter().enumerate() {
                for _ in 0..m.exponent(slot) {
                    t = t * x.clone();
                }
            }
            total = total + t;
        }
        total
    }

    /// Exact division by a linear form `f = lead·x + rest`, where `x` is the
    /// pivot variable. Writing `self = Σ xᵏ Aₖ`, the quotient slices satisfy
    /// `lead·Qₖ₋₁ = Aₖ − rest·Qₖ`, solved from the top degree down; what is
    /// left in degree 0 must vanish.
    pub fn exact_divide(&self, f: &LinearForm) -> Result<Self> {
        if f.rank() != self.rank {
            return Err(Error::RankMismatch(self.rank, f.rank()));
        }
        if f.is_zero() {
            return Err(Error::DivideByZeroForm);
        }
        self.checked_divide(f).ok_or_else(|| Error::NotDivisible { poly: self.to_string(), divisor: f.to_string() })
    }

    /// [`exact_divide`](Self::exact_divide) without the error report; `None`
    /// also covers a zero or rank-mismatched divisor.
    pub(crate) fn checked_divide(&self, f: &LinearForm) -> Option<Self> {
        if f.rank() != self.rank {
            return None;
        }
        let slot = f.pivot_slot()?;
        let lead = f.slot_coefficient(slot);
        let rest: Vec<(usize, C)> = (0..=self.rank)
            .filter(|&s| s != slot && f.slot_coefficient(s) != 0)
            .map(|s| (s, C::from_int(f.slot_coefficient(s))))
            .collect();
        let top = self.terms.keys().map(|m| m.exponent(slot)).max().unwrap_or(0);
        let mut slices = vec![BTreeMap::new(); usize::from(top) + 1];
        for (m, c) in &self.terms {
            slices[usize::from(m.exponent(slot))].insert(m.with_exponent(slot, 0), c.clone());
        }
        let subtract_rest_times = |target: &mut Poly<C>, q: &Poly<C>| {
            for (m, c) in &q.terms {
                for (s, r) in &rest {
                    target.add_term(m.with_exponent(*s, m.exponent(*s) + 1), -(c.clone() * r.clone()));
                }
            }
        };
        let inv = C::one() / C::from_int(lead);
        let mut quot = Poly::zero(self.rank);
        let mut q = Poly::zero(self.rank);
        for k in (1..=top).rev() {
            let mut next = Poly { rank: self.rank, terms: std::mem::take(&mut slices[usize::from(k)]) };
            subtract_rest_times(&mut next, &q);
            if lead != 1 {
                next = next.scale(&inv);
            }
            quot.terms.extend(next.terms.iter().map(|(m, c)| (m.with_exponent(slot, k - 1), c.clone())));
            q = next;
        }
        let mut left = Poly { rank: self.rank, terms: std::mem::take(&mut slices[0]) };
        subtract_rest_times(&mut left, &q);
        left.is_zero().then_some(quot)
    }

    /// Parses the canonical text form, e.g. `-a1^2 + h*a1 + 3/2*a2*h^2`.
    pub fn parse(rank: usize, text: &str) -> Result<Self> {
        let err = |msg: &str| Error::Parse(format!("{msg} in `{text}`"));
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty polynomial"));
        }
        let mut out = Poly::zero(rank);
        let mut chunks = Vec::new();
        let mut start = 0;
        for (k, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && k > 0 && !compact[..k].ends_with('^') {
                chunks.push(&compact[start..k]);
                start = k;
            }
        }
        chunks.push(&compact[start..]);
        for chunk in chunks {
            let (neg, body) = match chunk.as_bytes().first() {
                Some(b'-') => (true, &chunk[1..]),
                Some(b'+') => (false, &chunk[1..]),
                _ => (false, chunk),
            };
            if body.is_empty() {
                return Err(err("dangling sign"));
            }
            let mut coeff = C::one();
            let mut mono = Monomial::one();
            for factor in body.split('*') {
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => (b, e.parse::<u8>().map_err(|_| err("bad exponent"))?),
                    None => (factor, 1),
                };
                if base == "h" {
                    mono = mono.with_exponent(rank, mono.exponent(rank).checked_add(exp).ok_or_else(|| err("exponent overflow"))?);
                } else if let Some(idx) = base.strip_prefix('a') {
                    let i: usize = idx.parse().map_err(|_| err("bad variable"))?;
                    if i == 0 || i > rank {
                        return Err(err("variable out of range"));
                    }
                    mono = mono.with_exponent(i - 1, mono.exponent(i - 1).checked_add(exp).ok_or_else(|| err("exponent overflow"))?);
                } else {
                    let (n, d) = base.split_once('/').unwrap_or((base, "1"));
                    let n = parse_scalar::<C>(n).ok_or_else(|| err("bad coefficient"))?;
                    let d = parse_scalar::<C>(d).ok_or_else(|| err("bad coefficient"))?;
                    if d.is_zero() {
                        return Err(err("zero denominator"));
                    }
                    for _ in 0..exp {
                        coeff = coeff * n.clone() / d.clone();
                    }
                }
            }
            out.add_term(mono, if neg { -coeff } else { coeff });
        }
        Ok(out)
    }
}

/// Signed `n` or `n/d`.
pub(crate) fn parse_ratio<C: Scalar>(text: &str) -> Option<C> {
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (n, d) = body.split_once('/').unwrap_or((body, "1"));
    let (n, d) = (parse_scalar::<C>(n)?, parse_scalar::<C>(d)?);
    if d.is_zero() {
        return None;
    }
    let v = n / d;
    Some(if neg { -v } else { v })
}

/// Rational scalars only accept `n/d`; floats only accept plain numbers.
fn parse_scalar<C: Scalar>(digits: &str) -> Option<C> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit() || b == b'.') {
        return None;
    }
    C::from_str_radix(digits, 10).or_else(|_| C::from_str_radix(&format!("{digits}/1"), 10)).ok()
}

impl<C: Scalar> fmt::Display for Poly<C> {
    /// Terms in descending monomial order, `ℏ` written first in each term:
    /// `-a1^2 + h*a1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut factors = Vec::new();
            let he = m.exponent(self.rank);
            if he == 1 {
                factors.push("h".to_string());
            } else if he > 1 {
                factors.push(format!("h^{he}"));
            }
            for j in 0..self.rank {
                match m.exponent(j) {
                    0 => {}
                    1 => factors.push(format!("a{}", j + 1)),
                    e => factors.push(format!("a{}^{e}", j + 1)),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<C: Scalar> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl<C: Scalar> AddAssign<&Poly<C>> for Poly<C> {
    fn add_assign(&mut self, rhs: &Poly<C>) {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl<C: Scalar> SubAssign<&Poly<C>> for Poly<C> {
    fn sub_assign(&mut self, rhs: &Poly<C>) {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl<C: Scalar> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Scalar> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Scalar> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        let mut out = Poly::zero(self.rank);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Scalar> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly { rank: self.rank, terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl<C: Scalar> $tr for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$method(&rhs)
            }
        }
        impl<C: Scalar> $tr<&Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: &Poly<C>) -> Poly<C> {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl<C: Scalar> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -&self
    }
}
