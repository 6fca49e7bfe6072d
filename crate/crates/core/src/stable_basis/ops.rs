use super::{positive_product, sign, stab_minus_restriction, stab_plus_restriction, Chamber, RestrictionTable};
use crate::error::{Error, Result};
use crate::poly_ring::{FixedPointFunction, LinearForm, Poly, RatFunc, Scalar};
use crate::root_system::{RootSystem, WeylElement, WeylGroup};

/// Diagonal entry `stab(w)|_w`: minus `∏_{wα>0}(wα−ℏ)·∏_{wα<0}wα`, plus
/// `∏_{wα<0}(wα−ℏ)·∏_{wα>0}wα`.
pub fn diagonal_value<C: Scalar>(group: &WeylGroup, chamber: Chamber, w: WeylElement) -> Poly<C> {
    positive_product(group, |a| {
        let wa = group.act_root(w, a);
        let shifted = match chamber {
            Chamber::Minus => RootSystem::is_positive(&wa),
            Chamber::Plus => !RootSystem::is_positive(&wa),
        };
        LinearForm::root_shifted(&wa, if shifted { -1 } else { 0 })
    })
}

/// `e(T_y T*𝓑) = ∏_{β∈R⁺}(yβ−ℏ)(−yβ)`.
pub fn euler_class<C: Scalar>(group: &WeylGroup, y: WeylElement) -> Poly<C> {
    let rank = group.rank();
    group.root_system().positive_roots().iter().fold(Poly::one(rank), |acc, b| {
        let yb = group.act_root(y, b);
        let f = &LinearForm::root_shifted(&yb, -1).to_poly() * &(-&LinearForm::from_root(&yb)).to_poly();
        &acc * &f
    })
}

/// The linear forms whose product is [`euler_class`].
pub(crate) fn euler_factors(group: &WeylGroup, y: WeylElement) -> Vec<(LinearForm, u32)> {
    let mut out = Vec::new();
    for b in group.root_system().positive_roots() {
        let yb = group.act_root(y, b);
        out.push((LinearForm::root_shifted(&yb, -1), 1));
        out.push((-&LinearForm::from_root(&yb), 1));
    }
    out
}

/// `(A₀ψ)(w) = (ψ(wσ_α) − ψ(w)) / (wα) · (wα − ℏ)`.
pub fn apply_a0<C: Scalar>(group: &WeylGroup, alpha: usize, psi: &FixedPointFunction<C>) -> Result<FixedPointFunction<C>> {
    let rank = group.rank();
    if alpha >= rank {
        return Err(Error::IndexOutOfRange { index: alpha, rank });
    }
    if psi.len() != group.order() {
        return Err(Error::ConfigInvalid(format!("function has {} values, group has {} elements", psi.len(), group.order())));
    }
    let simple = group.root_system().simple_root(alpha);
    let values = group
        .elements()
        .map(|w| {
            let ws = group.mul_simple(w, alpha);
            let wa = group.act_root(w, &simple);
            let diff = psi.get(ws.index()) - psi.get(w.index());
            diff.div_linear(&LinearForm::from_root(&wa))
                .map(|q| q.mul_poly(&LinearForm::root_shifted(&wa, -1).to_poly()))
        })
        .collect::<Result<Vec<RatFunc<C>>>>()?;
    Ok(FixedPointFunction::new(values))
}

/// `(−1)^{|R⁺|} Σ_z stab₊(y)|_z · stab₋(w)|_z / e(T_z)`, which must be a
/// constant.
pub fn duality_pairing<C: Scalar>(
    group: &WeylGroup,
    plus: &RestrictionTable<C>,
    minus: &RestrictionTable<C>,
    y: WeylElement,
    w: WeylElement,
) -> Result<C> {
    if plus.chamber() != Chamber::Plus || minus.chamber() != Chamber::Minus {
        return Err(Error::ConfigInvalid("duality needs a plus table and a minus table".into()));
    }
    let rank = group.rank();
    let mut sum = RatFunc::zero(rank);
    for z in group.elements() {
        let prod = plus.restriction(y, z) * minus.restriction(w, z);
        if prod.is_zero() {
            continue;
        }
        sum = &sum + &RatFunc::new(prod, euler_factors(group, z))?;
    }
    let n = group.root_system().positive_roots().len();
    sum.as_constant()
        .map(|c| c * sign::<C>(n))
        .ok_or_else(|| Error::NonConstantPairing(format!("y={}, w={}: {sum}", group.format_element(y), group.format_element(w))))
}

/// Predicted `(w, y)` entry mod ℏ²: `(−1)^{l(y)+1} ℏ ∏_{R⁺}α / (yβ)` when
/// `w = yσ_β < y`, the diagonal mod ℏ² when `w = y`, and 0 otherwise.
/// The same in both chambers apart from the diagonal.
pub fn mod_hbar2_formula<C: Scalar>(group: &WeylGroup, chamber: Chamber, w: WeylElement, y: WeylElement) -> Result<Poly<C>> {
    let rank = group.rank();
    if w == y {
        return Ok(diagonal_value::<C>(group, chamber, w).truncate_hbar(2));
    }
    if group.length(w) >= group.length(y) {
        return Ok(Poly::zero(rank));
    }
    let Some(k) = group.reflection_root(group.mul(group.inverse(y), w)) else {
        return Ok(Poly::zero(rank));
    };
    let beta = &group.root_system().positive_roots()[k];
    let yb = group.act_root(y, beta);
    let top: Poly<C> = &Poly::hbar(rank) * &positive_product(group, LinearForm::from_root);
    let q = top.exact_divide(&LinearForm::from_root(&yb))?;
    Ok(q.scale(&sign(group.length(y) + 1)))
}

/// [`mod_hbar2_formula`], checked against the closed-form entry reduced
/// mod ℏ².
pub fn mod_hbar2<C: Scalar>(group: &WeylGroup, chamber: Chamber, w: WeylElement, y: WeylElement) -> Result<Poly<C>> {
    let predicted = mod_hbar2_formula(group, chamber, w, y)?;
    let entry: Poly<C> = match chamber {
        Chamber::Minus => stab_minus_restriction(group, w, group.word(y))?,
        Chamber::Plus => stab_plus_restriction(group, group.word(y), w)?,
    };
    let reduced = entry.truncate_hbar(2);
    if reduced != predicted {
        return Err(Error::MethodMismatch(format!(
            "mod ℏ² at w={}, y={}: table {reduced}, formula {predicted}",
            group.format_element(w),
            group.format_element(y)
        )));
    }
    Ok(predicted)
}

#[cfg(test)]
mod tests {
    use super::super::{stab_table, Method};
    use super::*;
    use crate::root_system::{CartanType, DEFAULT_MAX_GROUP_ORDER};
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    type Q = BigRational;

    fn group(t: CartanType, n: usize) -> WeylGroup {
        WeylGroup::new(RootSystem::new(t, n).unwrap(), DEFAULT_MAX_GROUP_ORDER).unwrap()
    }

    fn p(rank: usize, s: &str) -> Poly<Q> {
        Poly::parse(rank, s).unwrap()
    }

    #[test]
    fn diagonal_examples() {
        let g = group(CartanType::A, 1);
        assert_eq!(diagonal_value::<Q>(&g, Chamber::Minus, g.identity()), p(1, "a1 - h"));
        assert_eq!(diagonal_value::<Q>(&g, Chamber::Minus, g.longest()), p(1, "-a1"));
        assert_eq!(diagonal_value::<Q>(&g, Chamber::Plus, g.longest()), p(1, "-a1 - h"));
        assert_eq!(diagonal_value::<Q>(&g, Chamber::Plus, g.identity()), p(1, "a1"));
    }

    #[test]
    fn euler_examples() {
        let g = group(CartanType::A, 1);
        assert_eq!(euler_class::<Q>(&g, g.identity()), p(1, "-a1^2 + h*a1"));
        assert_eq!(euler_class::<Q>(&g, g.longest()), p(1, "-a1^2 - h*a1"));
    }

    #[test]
    fn euler_class_reflection_ratio() {
        // e(T_{yσ}) (yα − ℏ) = (yα + ℏ) e(T_y)
        let g = group(CartanType::A, 2);
        for y in g.elements() {
            for i in 0..2 {
                let ya = g.act_root(y, &g.root_system().simple_root(i));
                let lhs = &euler_class::<Q>(&g, g.mul_simple(y, i)) * &LinearForm::root_shifted(&ya, -1).to_poly();
                let rhs = &euler_class::<Q>(&g, y) * &LinearForm::root_shifted(&ya, 1).to_poly();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn a0_on_fixed_point_classes() {
        // ψ_y is e(T_y) at y and zero elsewhere:
        // (A₀ψ_y)(y) = −((yα−ℏ)/yα)ψ_y(y), (A₀ψ_y)(yσ) = ((yα+ℏ)/yα)ψ_y(y).
        let g = group(CartanType::A, 2);
        for y in g.elements() {
            let mut vals = vec![Poly::zero(2); g.order()];
            vals[y.index()] = euler_class::<Q>(&g, y);
            let psi = FixedPointFunction::from_polys(vals);
            let at_y = psi.get(y.index()).clone();
            for i in 0..2 {
                let out = apply_a0(&g, i, &psi).unwrap();
                let ya = g.act_root(y, &g.root_system().simple_root(i));
                let ratio = |h: i64| {
                    at_y.mul_poly(&LinearForm::root_shifted(&ya, h).to_poly()).div_linear(&LinearForm::from_root(&ya)).unwrap()
                };
                assert_eq!(out.get(y.index()), &-ratio(-1));
                assert_eq!(out.get(g.mul_simple(y, i).index()), &ratio(1));
            }
        }
    }

    #[test]
    fn a0_a1_row() {
        let g = group(CartanType::A, 1);
        let minus = stab_table::<Q>(&g, Chamber::Minus, Method::Recursion).unwrap();
        let out = apply_a0(&g, 0, &minus.label_function(g.identity())).unwrap();
        assert_eq!(out, FixedPointFunction::from_polys(vec![p(1, "-a1 + h"), p(1, "a1 + h")]));
        assert!(apply_a0(&g, 1, &out).is_err());
    }

    #[test]
    fn a1_duality() {
        let g = group(CartanType::A, 1);
        let plus = stab_table::<Q>(&g, Chamber::Plus, Method::Recursion).unwrap();
        let minus = stab_table::<Q>(&g, Chamber::Minus, Method::Recursion).unwrap();
        let (e, s) = (g.identity(), g.longest());
        assert!(duality_pairing(&g, &plus, &minus, s, s).unwrap().is_one());
        assert!(duality_pairing(&g, &plus, &minus, s, e).unwrap().is_zero());
        assert!(duality_pairing(&g, &plus, &minus, e, e).unwrap().is_one());
        assert!(duality_pairing(&g, &minus, &plus, e, e).is_err());
    }

    #[test]
    fn mod_hbar2_examples() {
        let g = group(CartanType::A, 2);
        let s1 = g.reduced_product(&[0]).unwrap();
        let s1s2 = g.reduced_product(&[0, 1]).unwrap();
        assert_eq!(mod_hbar2::<Q>(&g, Chamber::Minus, s1, s1s2).unwrap(), p(2, "h*a1*a2"));
        assert!(mod_hbar2::<Q>(&g, Chamber::Minus, s1s2, s1).unwrap().is_zero());
        assert_eq!(mod_hbar2::<Q>(&g, Chamber::Minus, s1, s1).unwrap(), diagonal_value::<Q>(&g, Chamber::Minus, s1).truncate_hbar(2));
    }

    #[test]
    fn a0_maps_rows_to_neighbour_sum() {
        for (t, n) in [(CartanType::A, 2), (CartanType::B, 2)] {
            let g = group(t, n);
            for chamber in [Chamber::Minus, Chamber::Plus] {
                let table = stab_table::<Q>(&g, chamber, Method::Recursion).unwrap();
                for y in g.elements() {
                    for i in 0..n {
                        let lhs = apply_a0(&g, i, &table.label_function(y)).unwrap();
                        let ys = g.mul_simple(y, i);
                        let rhs: Vec<RatFunc<Q>> = g
                            .elements()
                            .map(|z| RatFunc::from_poly(-(table.restriction(y, z) + table.restriction(ys, z))))
                            .collect();
                        assert_eq!(lhs, FixedPointFunction::new(rhs), "{t}{n} {chamber} y={} i={i}", g.format_element(y));
                    }
                }
            }
        }
    }
}
