//! Stable-basis restrictions on `T*(G/P)`, obtained from the Borel tables
//! by summing over cosets.
//!
//! Cosets are numbered as in [`CosetSpace`]. Tables follow the Borel
//! orientation: entry `(w̄, ȳ)` is `stab₋(w̄)|_ȳ` in the minus chamber and
//! `stab₊(ȳ)|_w̄` in the plus chamber, so both are supported on `w̄ ≤ ȳ`.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly_ring::{FixedPointFunction, LinearForm, Poly, RatFunc, Scalar};
use crate::root_system::{CosetSpace, WeylElement, WeylGroup};
use crate::stable_basis::{Chamber, RestrictionTable};

/// Which element stands in for each coset in the two coset formulas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepresentativePolicy {
    Minimal,
    /// One representative per coset, in coset order.
    Explicit(Vec<WeylElement>),
}

impl RepresentativePolicy {
    fn rep(&self, cs: &CosetSpace, coset: usize) -> WeylElement {
        match self {
            RepresentativePolicy::Minimal => cs.minimal_rep(coset),
            RepresentativePolicy::Explicit(reps) => reps[coset],
        }
    }

    fn validate(&self, cs: &CosetSpace, group: &WeylGroup) -> Result<()> {
        if let RepresentativePolicy::Explicit(reps) = self {
            if reps.len() != cs.len() {
                return Err(Error::ConfigInvalid(format!("{} representatives for {} cosets", reps.len(), cs.len())));
            }
            for (k, &r) in reps.iter().enumerate() {
                if r.index() >= group.order() || cs.project(r) != k {
                    return Err(Error::ConfigInvalid(format!(
                        "{} does not lie in coset {k}",
                        group.format_element(r)
                    )));
                }
            }
        }
        Ok(())
    }
}

/// The two coset formulas relating `G/B` and `G/P` restrictions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    /// Sum over the points of a coset, label fixed.
    A1,
    /// Sum over the labels in a coset, point fixed.
    A2,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::A1 => "A1",
            Route::A2 => "A2",
        })
    }
}

fn product_over<C: Scalar>(group: &WeylGroup, roots: &[usize], z: WeylElement, hbar: i64) -> Vec<(LinearForm, u32)> {
    let pos = group.root_system().positive_roots();
    roots.iter().map(|&k| (LinearForm::root_shifted(&group.act_root(z, &pos[k]), hbar), 1)).collect()
}

/// `stab(ȳ)|_w̄ = Σ_{z ∈ w̄} stab(y)|_z / ∏_{α∈R⁺_P} zα`, `y` the chosen
/// representative of `ȳ`.
pub fn stab_p_via_a1<C: Scalar>(
    group: &WeylGroup,
    cs: &CosetSpace,
    table: &RestrictionTable<C>,
    ybar: usize,
    wbar: usize,
    policy: &RepresentativePolicy,
) -> Result<Poly<C>> {
    policy.validate(cs, group)?;
    let y = policy.rep(cs, ybar);
    let mut sum = RatFunc::zero(group.rank());
    for &z in cs.members(wbar) {
        let v = table.restriction(y, z);
        if v.is_zero() {
            continue;
        }
        sum = &sum + &RatFunc::new(v.clone(), product_over::<C>(group, cs.parabolic_roots(), z, 0))?;
    }
    sum.into_poly()
}

/// `stab(ȳ)|_z̄ = Σ_{w ∈ ȳ} stab(w)|_z / ∏_{α∈R⁺_P}(zα − ℏ)`, `z` the chosen
/// representative of `z̄`.
pub fn stab_p_via_a2<C: Scalar>(
    group: &WeylGroup,
    cs: &CosetSpace,
    table: &RestrictionTable<C>,
    ybar: usize,
    zbar: usize,
    policy: &RepresentativePolicy,
) -> Result<Poly<C>> {
    policy.validate(cs, group)?;
    let z = policy.rep(cs, zbar);
    let rank = group.rank();
    let mut sum = Poly::zero(rank);
    for &w in cs.members(ybar) {
        sum += table.restriction(w, z);
    }
    RatFunc::new(sum, product_over::<C>(group, cs.parabolic_roots(), z, -1))?.into_poly()
}

/// Pullback along `G/B → G/P`: `(A₃ψ)(z) = ψ(z̄)`.
pub fn apply_a3<C: Scalar>(group: &WeylGroup, cs: &CosetSpace, psi_bar: &FixedPointFunction<C>) -> Result<FixedPointFunction<C>> {
    if psi_bar.len() != cs.len() {
        return Err(Error::ConfigInvalid(format!("function has {} values, there are {} cosets", psi_bar.len(), cs.len())));
    }
    Ok(FixedPointFunction::new(group.elements().map(|z| psi_bar.get(cs.project(z)).clone()).collect()))
}

/// `e(T_ȳ G/P) = ∏_{β∈R⁺∖R⁺_P}(−yβ)`, `y` minimal.
pub fn tangent_euler_class<C: Scalar>(group: &WeylGroup, cs: &CosetSpace, ybar: usize) -> Poly<C> {
    let y = cs.minimal_rep(ybar);
    let pos = group.root_system().positive_roots();
    cs.complement_roots()
        .iter()
        .fold(Poly::one(group.rank()), |acc, &k| &acc * &(-&LinearForm::from_root(&group.act_root(y, &pos[k]))).to_poly())
}

/// `e(T_z̄ T*𝒫) = ∏_{β∈R⁺∖R⁺_P}(zβ−ℏ)(−zβ)`, `z` minimal.
pub fn euler_class_p<C: Scalar>(group: &WeylGroup, cs: &CosetSpace, zbar: usize) -> Poly<C> {
    euler_factors_p(group, cs, zbar).iter().fold(Poly::one(group.rank()), |acc, (f, _)| &acc * &f.to_poly())
}

fn euler_factors_p(group: &WeylGroup, cs: &CosetSpace, zbar: usize) -> Vec<(LinearForm, u32)> {
    let z = cs.minimal_rep(zbar);
    let pos = group.root_system().positive_roots();
    let mut out = Vec::new();
    for &k in cs.complement_roots() {
        let zb = group.act_root(z, &pos[k]);
        out.push((LinearForm::root_shifted(&zb, -1), 1));
        out.push((-&LinearForm::from_root(&zb), 1));
    }
    out
}

/// Dense table over `W/W_P × W/W_P`.
#[derive(Clone)]
pub struct ParabolicRestrictionTable<C> {
    chamber: Chamber,
    subset: Vec<usize>,
    rank: usize,
    size: usize,
    policy: RepresentativePolicy,
    entries: Vec<Poly<C>>,
}

impl<C: Scalar> ParabolicRestrictionTable<C> {
    pub fn from_entries(
        chamber: Chamber,
        subset: Vec<usize>,
        rank: usize,
        size: usize,
        policy: RepresentativePolicy,
        entries: Vec<Poly<C>>,
    ) -> Result<Self> {
        if entries.len() != size * size {
            return Err(Error::Parse(format!("expected {} entries, got {}", size * size, entries.len())));
        }
        Ok(ParabolicRestrictionTable { chamber, subset, rank, size, policy, entries })
    }

    pub fn chamber(&self) -> Chamber {
        self.chamber
    }

    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn policy(&self) -> &RepresentativePolicy {
        &self.policy
    }

    pub fn entries(&self) -> &[Poly<C>] {
        &self.entries
    }

    /// Entry at `(w̄, ȳ)`.
    pub fn get(&self, wbar: usize, ybar: usize) -> &Poly<C> {
        &self.entries[wbar * self.size + ybar]
    }

    pub fn restriction(&self, label: usize, point: usize) -> &Poly<C> {
        match self.chamber {
            Chamber::Minus => self.get(label, point),
            Chamber::Plus => self.get(point, label),
        }
    }

    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.size != other.size {
            return Some((0, 0));
        }
        let k = self.entries.iter().zip(&other.entries).position(|(a, b)| a != b)?;
        Some((k / self.size, k % self.size))
    }
}

impl<C: Scalar> PartialEq for ParabolicRestrictionTable<C> {
    fn eq(&self, other: &Self) -> bool {
        self.chamber == other.chamber && self.subset == other.subset && self.entries == other.entries
    }
}

impl<C: Scalar> fmt::Debug for ParabolicRestrictionTable<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ParabolicRestrictionTable")
            .field("chamber", &self.chamber)
            .field("subset", &self.subset)
            .field("size", &self.size)
            .finish_non_exhaustive()
    }
}

/// Builds the full `G/P` table from a Borel table of the same chamber.
pub fn parabolic_table<C: Scalar>(
    group: &WeylGroup,
    cs: &CosetSpace,
    borel: &RestrictionTable<C>,
    route: Route,
    policy: &RepresentativePolicy,
) -> Result<ParabolicRestrictionTable<C>> {
    policy.validate(cs, group)?;
    let n = cs.len();
    let chamber = borel.chamber();
    let entries: Vec<Poly<C>> = (0..n * n)
        .into_par_iter()
        .map(|k| {
            let (row, col) = (k / n, k % n);
            let (label, point) = match chamber {
                Chamber::Minus => (row, col),
                Chamber::Plus => (col, row),
            };
            match route {
                Route::A1 => stab_p_via_a1(group, cs, borel, label, point, policy),
                Route::A2 => stab_p_via_a2(group, cs, borel, label, point, policy),
            }
        })
        .collect::<Result<_>>()?;
    ParabolicRestrictionTable::from_entries(chamber, cs.subset().to_vec(), group.rank(), n, policy.clone(), entries)
}

/// `(−1)^{|R⁺∖R⁺_P|} Σ_z̄ stab₊(ȳ)|_z̄ · stab₋(w̄)|_z̄ / e(T_z̄ T*𝒫)`.
pub fn parabolic_duality<C: Scalar>(
    group: &WeylGroup,
    cs: &CosetSpace,
    plus: &ParabolicRestrictionTable<C>,
    minus: &ParabolicRestrictionTable<C>,
    ybar: usize,
    wbar: usize,
) -> Result<C> {
    if plus.chamber() != Chamber::Plus || minus.chamber() != Chamber::Minus {
        return Err(Error::ConfigInvalid("duality needs a plus table and a minus table".into()));
    }
    let mut sum = RatFunc::zero(group.rank());
    for zbar in 0..cs.len() {
        let prod = plus.restriction(ybar, zbar) * minus.restriction(wbar, zbar);
        if !prod.is_zero() {
            sum = &sum + &RatFunc::new(prod, euler_factors_p(group, cs, zbar))?;
        }
    }
    let k = cs.complement_roots().len();
    let sign = if k % 2 == 0 { C::one() } else { -C::one() };
    sum.as_constant()
        .map(|c| c * sign)
        .ok_or_else(|| Error::NonConstantPairing(format!("ȳ={ybar}, w̄={wbar}: {sum}")))
}

/// Predicted `(w̄, ȳ)` entry mod ℏ², with `y` the minimal representative of
/// `ȳ`: if `w̄` is the coset of `yσ_β` for some `β ∈ R⁺` with `yσ_β < y`,
/// `(−1)^{l(y)+1} ℏ ∏_{R⁺}α / (yβ · ∏_{α∈R⁺_P} vα)` with `v = yσ_β` in the
/// plus chamber and `v = y` in the minus chamber; `diagonal` reduced mod ℏ²
/// when `w̄ = ȳ`; 0 otherwise.
pub fn mod_hbar2_p_formula<C: Scalar>(
    group: &WeylGroup,
    cs: &CosetSpace,
    chamber: Chamber,
    wbar: usize,
    ybar: usize,
    diagonal: &Poly<C>,
) -> Result<Poly<C>> {
    let rank = group.rank();
    if wbar == ybar {
        return Ok(diagonal.truncate_hbar(2));
    }
    let y = cs.minimal_rep(ybar);
    let pos = group.root_system().positive_roots();
    let mut found: Option<usize> = None;
    for k in 0..pos.len() {
        let ys = group.mul(y, group.reflection(k));
        if group.length(ys) < group.length(y) && cs.project(ys) == wbar {
            if found.is_some() {
                return Err(Error::AmbiguousBeta);
            }
            found = Some(k);
        }
    }
    let Some(k) = found else {
        return Ok(Poly::zero(rank));
    };
    let yb = group.act_root(y, &pos[k]);
    let v = match chamber {
        Chamber::Plus => group.mul(y, group.reflection(k)),
        Chamber::Minus => y,
    };
    let mut den = product_over::<C>(group, cs.parabolic_roots(), v, 0);
    den.push((LinearForm::from_root(&yb), 1));
    let top: Poly<C> = group
        .root_system()
        .positive_roots()
        .iter()
        .fold(Poly::hbar(rank), |acc, a| &acc * &LinearForm::from_root(a).to_poly());
    let sign = if (group.length(y) + 1) % 2 == 0 { C::one() } else { -C::one() };
    Ok(RatFunc::new(top, den)?.into_poly()?.scale(&sign))
}

/// [`mod_hbar2_p_formula`] for a minimal `y`, checked against `table`.
pub fn mod_hbar2_p<C: Scalar>(
    group: &WeylGroup,
    cs: &CosetSpace,
    table: &ParabolicRestrictionTable<C>,
    wbar: usize,
    y: WeylElement,
) -> Result<Poly<C>> {
    if !cs.is_minimal(y) {
        return Err(Error::NonMinimalRepresentative(group.format_element(y)));
    }
    let ybar = cs.project(y);
    let predicted = mod_hbar2_p_formula(group, cs, table.chamber(), wbar, ybar, table.get(ybar, ybar))?;
    let reduced = table.get(wbar, ybar).truncate_hbar(2);
    if reduced != predicted {
        return Err(Error::MethodMismatch(format!("mod ℏ² at ({wbar}, {ybar}): table {reduced}, formula {predicted}")));
    }
    Ok(predicted)
}

/// One cell of the explicit-representative comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentativeCheck {
    pub route: Route,
    pub label: usize,
    pub point: usize,
    /// `None` when the explicit route did not even produce a polynomial.
    pub agrees: Option<bool>,
}

/// Recomputes both routes with explicit representatives and compares each
/// cell with the minimal-representative table. Neither side is assumed
/// right; the result is just the per-cell comparison.
pub fn compare_representatives<C: Scalar>(
    group: &WeylGroup,
    cs: &CosetSpace,
    borel: &RestrictionTable<C>,
    reps: &[WeylElement],
) -> Result<Vec<RepresentativeCheck>> {
    let explicit = RepresentativePolicy::Explicit(reps.to_vec());
    explicit.validate(cs, group)?;
    let reference = parabolic_table(group, cs, borel, Route::A1, &RepresentativePolicy::Minimal)?;
    let mut out = Vec::new();
    for route in [Route::A1, Route::A2] {
        for label in 0..cs.len() {
            for point in 0..cs.len() {
                let value = match route {
                    Route::A1 => stab_p_via_a1(group, cs, borel, label, point, &explicit),
                    Route::A2 => stab_p_via_a2(group, cs, borel, label, point, &explicit),
                };
                let agrees = value.ok().map(|v| &v == reference.restriction(label, point));
                out.push(RepresentativeCheck { route, label, point, agrees });
            }
        }
    }
    Ok(out)
}
