//! Restrictions of the stable basis of `T*(G/B)` to torus-fixed points.
//!
//! Tables are indexed `(w, y)` with support `w ≤ y` in both chambers:
//! the minus entry is `stab₋(w)|_y`, the plus entry is `stab₊(y)|_w`.
//! [`RestrictionTable::restriction`] takes `(label, point)` and hides the
//! difference.

pub(crate) mod closed;
mod ops;

pub use closed::{closed_form_column, stab_minus_restriction, stab_plus_restriction};
pub use ops::{apply_a0, diagonal_value, duality_pairing, euler_class, mod_hbar2, mod_hbar2_formula};

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group_algebra::{extend_minus, extend_plus, GroupAlgebraElement};
use crate::poly_ring::{FixedPointFunction, LinearForm, Poly, Scalar};
use crate::root_system::{WeylElement, WeylGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Chamber {
    Plus,
    Minus,
}

impl Chamber {
    pub fn opposite(self) -> Chamber {
        match self {
            Chamber::Plus => Chamber::Minus,
            Chamber::Minus => Chamber::Plus,
        }
    }
}

impl fmt::Display for Chamber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Chamber::Plus => "plus",
            Chamber::Minus => "minus",
        })
    }
}

impl FromStr for Chamber {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "plus" | "+" => Ok(Chamber::Plus),
            "minus" | "-" => Ok(Chamber::Minus),
            _ => Err(Error::ConfigInvalid(format!("unknown chamber `{s}`"))),
        }
    }
}

/// How a table was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    ClosedForm,
    Recursion,
    RMatrix,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::ClosedForm, Method::Recursion, Method::RMatrix];
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::ClosedForm => "closed_form",
            Method::Recursion => "recursion",
            Method::RMatrix => "rmatrix",
        })
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "closed_form" | "closed" => Ok(Method::ClosedForm),
            "recursion" => Ok(Method::Recursion),
            "rmatrix" | "r_matrix" => Ok(Method::RMatrix),
            _ => Err(Error::ConfigInvalid(format!("unknown method `{s}`"))),
        }
    }
}

/// Dense `|W| × |W|` table of restrictions, indexed by element index.
#[derive(Clone)]
pub struct RestrictionTable<C> {
    chamber: Chamber,
    method: Method,
    rank: usize,
    size: usize,
    entries: Vec<Poly<C>>,
}

impl<C: Scalar> RestrictionTable<C> {
    /// Row-major entries, `entries[w * size + y]`.
    pub fn from_entries(chamber: Chamber, method: Method, rank: usize, size: usize, entries: Vec<Poly<C>>) -> Result<Self> {
        if entries.len() != size * size {
            return Err(Error::Parse(format!("expected {} entries, got {}", size * size, entries.len())));
        }
        if let Some(p) = entries.iter().find(|p| p.rank() != rank) {
            return Err(Error::RankMismatch(p.rank(), rank));
        }
        Ok(RestrictionTable { chamber, method, rank, size, entries })
    }

    pub fn chamber(&self) -> Chamber {
        self.chamber
    }

    pub fn method(&self) -> Method {
        self.method
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

    /// Entry at `(w, y)`.
    pub fn get(&self, w: WeylElement, y: WeylElement) -> &Poly<C> {
        &self.entries[w.index() * self.size + y.index()]
    }

    /// `stab(label)|_point` in this table's chamber.
    pub fn restriction(&self, label: WeylElement, point: WeylElement) -> &Poly<C> {
        match self.chamber {
            Chamber::Minus => self.get(label, point),
            Chamber::Plus => self.get(point, label),
        }
    }

    /// `z ↦ stab(label)|_z`.
    pub fn label_function(&self, label: WeylElement) -> FixedPointFunction<C> {
        let values = (0..self.size).map(|z| self.restriction(label, WeylElement(z as u32)).clone()).collect();
        FixedPointFunction::from_polys(values)
    }

    /// First `(w, y)` where the two tables differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.size != other.size {
            return Some((0, 0));
        }
        let k = self.entries.iter().zip(&other.entries).position(|(a, b)| a != b)?;
        Some((k / self.size, k % self.size))
    }
}

impl<C: Scalar> PartialEq for RestrictionTable<C> {
    /// Compares chamber and contents; the method tag is ignored.
    fn eq(&self, other: &Self) -> bool {
        self.chamber == other.chamber && self.rank == other.rank && self.size == other.size && self.entries == other.entries
    }
}

impl<C: Scalar> fmt::Debug for RestrictionTable<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RestrictionTable")
            .field("chamber", &self.chamber)
            .field("method", &self.method)
            .field("size", &self.size)
            .finish_non_exhaustive()
    }
}

pub(crate) fn sign<C: Scalar>(k: usize) -> C {
    if k % 2 == 0 {
        C::one()
    } else {
        -C::one()
    }
}

/// `∏_{β∈R⁺} f(β)`.
pub(crate) fn positive_product<C: Scalar, F>(group: &WeylGroup, f: F) -> Poly<C>
where
    F: Fn(&[i32]) -> LinearForm,
{
    let rank = group.rank();
    group.root_system().positive_roots().iter().fold(Poly::one(rank), |acc, b| &acc * &f(b).to_poly())
}

/// Full table for one chamber by the chosen method.
pub fn stab_table<C: Scalar>(group: &WeylGroup, chamber: Chamber, method: Method) -> Result<RestrictionTable<C>> {
    let entries = match method {
        Method::ClosedForm => closed_form_entries(group, chamber)?,
        Method::Recursion => recursion_entries(group, chamber),
        Method::RMatrix => rmatrix_entries(group, chamber)?,
    };
    RestrictionTable::from_entries(chamber, method, group.rank(), group.order(), entries)
}

fn closed_form_entries<C: Scalar>(group: &WeylGroup, chamber: Chamber) -> Result<Vec<Poly<C>>> {
    let n = group.order();
    (0..n * n)
        .into_par_iter()
        .map(|k| {
            let (w, y) = (group.element(k / n), group.element(k % n));
            if !group.bruhat_leq(w, y) {
                return Ok(Poly::zero(group.rank()));
            }
            match chamber {
                Chamber::Minus => stab_minus_restriction(group, w, group.word(y)),
                Chamber::Plus => stab_plus_restriction(group, group.word(y), w),
            }
        })
        .collect()
}

/// Elements grouped by length. The canonical word of `y` minus its last
/// letter is the canonical word of the parent, so each layer builds on the
/// previous one.
fn layers(group: &WeylGroup) -> Vec<Vec<WeylElement>> {
    let mut out: Vec<Vec<WeylElement>> = Vec::new();
    for y in group.elements() {
        let l = group.length(y);
        if out.len() <= l {
            out.resize(l + 1, Vec::new());
        }
        out[l].push(y);
    }
    out
}

/// `(parent, last letter)` with `y = parent·σ_s`.
fn parent(group: &WeylGroup, y: WeylElement) -> (WeylElement, usize) {
    let s = *group.word(y).last().expect("non-identity element");
    (group.mul_simple(y, s), s)
}

fn seed_column<C: Scalar>(group: &WeylGroup, chamber: Chamber) -> Vec<Poly<C>> {
    let mut seed = vec![Poly::zero(group.rank()); group.order()];
    seed[0] = match chamber {
        Chamber::Minus => positive_product(group, |b| LinearForm::root_shifted(b, -1)),
        Chamber::Plus => positive_product(group, LinearForm::from_root),
    };
    seed
}

/// Column of `pσ_s` from the column of `p`, assuming `pσ_s > p`.
fn recursion_step<C: Scalar>(group: &WeylGroup, chamber: Chamber, p: WeylElement, s: usize, prev: &[Poly<C>]) -> Vec<Poly<C>> {
    let rank = group.rank();
    let hbar = Poly::<C>::hbar(rank);
    let alpha = group.root_system().simple_root(s);
    let pa = group.act_root(p, &alpha);
    group
        .elements()
        .map(|w| {
            let ws = group.mul_simple(w, s);
            let (a, b) = (&prev[w.index()], &prev[ws.index()]);
            if a.is_zero() && b.is_zero() {
                return Poly::zero(rank);
            }
            match chamber {
                Chamber::Minus => {
                    // −(ℏ·f(w) + pα·f(wσ)) / (pα − ℏ)
                    let num = &(&hbar * a) + &(&LinearForm::from_root(&pa).to_poly() * b);
                    -num.exact_divide(&LinearForm::root_shifted(&pa, -1)).expect("recursion divides")
                }
                Chamber::Plus => {
                    // −(ℏ·f(w) + (wα − ℏ)·f(wσ)) / wα
                    let wa = group.act_root(w, &alpha);
                    let num = &(&hbar * a) + &(&LinearForm::root_shifted(&wa, -1).to_poly() * b);
                    -num.exact_divide(&LinearForm::from_root(&wa)).expect("recursion divides")
                }
            }
        })
        .collect()
}

/// The column of `y` (indexed by `w`) obtained by running the recursion
/// along the given reduced word of `y` instead of the canonical one.
pub fn stab_column<C: Scalar>(group: &WeylGroup, chamber: Chamber, y_word: &[usize]) -> Result<Vec<Poly<C>>> {
    group.reduced_product(y_word)?;
    let mut col = seed_column(group, chamber);
    let mut p = WeylElement::IDENTITY;
    for &s in y_word {
        col = recursion_step(group, chamber, p, s, &col);
        p = group.mul_simple(p, s);
    }
    Ok(col)
}

/// Ascends in `l(y)` from the seed column at `y = e`, one column per element.
fn recursion_entries<C: Scalar>(group: &WeylGroup, chamber: Chamber) -> Vec<Poly<C>> {
    let n = group.order();
    let mut cols: Vec<Option<Vec<Poly<C>>>> = vec![None; n];
    cols[0] = Some(seed_column(group, chamber));
    for layer in layers(group).into_iter().skip(1) {
        let computed: Vec<(WeylElement, Vec<Poly<C>>)> = layer
            .par_iter()
            .map(|&y| {
                let (p, s) = parent(group, y);
                let prev = cols[p.index()].as_ref().expect("parent layer done");
                (y, recursion_step(group, chamber, p, s, prev))
            })
            .collect();
        for (y, col) in computed {
            cols[y.index()] = Some(col);
        }
    }
    transpose_columns(cols, n)
}

fn transpose_columns<C: Scalar>(cols: Vec<Option<Vec<Poly<C>>>>, n: usize) -> Vec<Poly<C>> {
    let mut cols: Vec<Vec<Poly<C>>> = cols.into_iter().map(|c| c.expect("every column computed")).collect();
    let mut entries = Vec::with_capacity(n * n);
    for w in 0..n {
        for col in cols.iter_mut() {
            entries.push(std::mem::replace(&mut col[w], Poly::zero(0)));
        }
    }
    entries
}

/// Expands the R-matrix of every element, extending the parent's product by
/// one factor, and reads the columns off its coefficients.
fn rmatrix_entries<C: Scalar>(group: &WeylGroup, chamber: Chamber) -> Result<Vec<Poly<C>>> {
    let n = group.order();
    let rank = group.rank();
    let rs = group.root_system();
    let all_positive: Poly<C> = positive_product(group, LinearForm::from_root);
    let mut r: Vec<Option<GroupAlgebraElement<C>>> = vec![None; n];
    r[0] = Some(GroupAlgebraElement::unit(rank));
    let mut cols: Vec<Option<Vec<Poly<C>>>> = vec![None; n];
    let read = |y: WeylElement, x: &GroupAlgebraElement<C>| -> Result<Vec<Poly<C>>> {
        let l = group.length(y);
        let scale: Poly<C> = match chamber {
            Chamber::Minus => {
                let inv = group.inversion_set(group.word(y))?;
                &closed::complement_product(group, &inv) * &Poly::hbar(rank).pow(l as u32)
            }
            Chamber::Plus => all_positive.clone(),
        };
        group
            .elements()
            .map(|w| Ok(x.coefficient(w).mul_poly(&scale).into_poly()?.scale(&sign(l))))
            .collect()
    };
    cols[0] = Some(read(WeylElement::IDENTITY, r[0].as_ref().unwrap())?);
    let mut prev_layer: Vec<WeylElement> = vec![WeylElement::IDENTITY];
    for layer in layers(group).into_iter().skip(1) {
        let computed: Vec<Result<(WeylElement, GroupAlgebraElement<C>, Vec<Poly<C>>)>> = layer
            .par_iter()
            .map(|&y| {
                let (p, s) = parent(group, y);
                let base = r[p.index()].as_ref().expect("parent layer done");
                let x = match chamber {
                    Chamber::Minus => extend_minus(base, group, s, &group.act_root(p, &rs.simple_root(s))),
                    Chamber::Plus => extend_plus(base, group, s),
                };
                let col = read(y, &x)?;
                Ok((y, x, col))
            })
            .collect();
        for &p in &prev_layer {
            r[p.index()] = None;
        }
        for item in computed {
            let (y, x, col) = item?;
            r[y.index()] = Some(x);
            cols[y.index()] = Some(col);
        }
        prev_layer = layer;
    }
    Ok(transpose_columns(cols, n))
}
