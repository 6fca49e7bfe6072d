use std::fmt;

use num_integer::Integer;

use super::{Monomial, Poly, Scalar};

/// `Σ cᵢ αᵢ + c_ℏ ℏ` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LinearForm {
    coeffs: Vec<i64>,
    hbar: i64,
}

impl LinearForm {
    pub fn new(coeffs: Vec<i64>, hbar: i64) -> Self {
        LinearForm { coeffs, hbar }
    }

    pub fn hbar(rank: usize) -> Self {
        LinearForm { coeffs: vec![0; rank], hbar: 1 }
    }

    /// A root (or any weight in the root lattice) written in simple roots.
    pub fn from_root(v: &[i32]) -> Self {
        LinearForm::root_shifted(v, 0)
    }

    /// `v + h·ℏ`; `root_shifted(β, -1)` is `β − ℏ`.
    pub fn root_shifted(v: &[i32], h: i64) -> Self {
        LinearForm { coeffs: v.iter().map(|&c| i64::from(c)).collect(), hbar: h }
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn hbar_coeff(&self) -> i64 {
        self.hbar
    }

    pub fn is_zero(&self) -> bool {
        self.hbar == 0 && self.coeffs.iter().all(|&c| c == 0)
    }

    /// Coefficient in a monomial slot (slot `rank` is `ℏ`).
    pub fn slot_coefficient(&self, slot: usize) -> i64 {
        if slot == self.rank() {
            self.hbar
        } else {
            self.coeffs[slot]
        }
    }

    /// Variable used for synthetic division: `ℏ` if present, else the first
    /// `α` that occurs.
    pub(crate) fn pivot_slot(&self) -> Option<usize> {
        if self.hbar != 0 {
            return Some(self.rank());
        }
        self.coeffs.iter().position(|&c| c != 0)
    }

    /// Splits off the signed content: `self = k · primitive`, where the
    /// primitive form has coprime entries and its first nonzero entry
    /// (in `α₁, …, αₙ, ℏ` order) is positive.
    pub fn normalize(&self) -> (i64, LinearForm) {
        let g = self.coeffs.iter().fold(self.hbar.abs(), |acc, &c| acc.gcd(&c));
        if g == 0 {
            return (0, self.clone());
        }
        let first = self.coeffs.iter().copied().chain([self.hbar]).find(|&c| c != 0).unwrap();
        let k = if first < 0 { -g } else { g };
        (k, LinearForm { coeffs: self.coeffs.iter().map(|c| c / k).collect(), hbar: self.hbar / k })
    }

    /// Image under `α_j ↦ images[j]`, `ℏ` fixed.
    pub fn substitute(&self, images: &[Vec<i32>]) -> LinearForm {
        let mut coeffs = vec![0i64; self.rank()];
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                for (k, &x) in images[j].iter().enumerate() {
                    coeffs[k] += c * i64::from(x);
                }
            }
        }
        LinearForm { coeffs, hbar: self.hbar }
    }

    pub fn to_poly<C: Scalar>(&self) -> Poly<C> {
        let rank = self.rank();
        let terms = (0..=rank).filter_map(|slot| {
            let c = self.slot_coefficient(slot);
            (c != 0).then(|| (Monomial::var(slot), C::from_int(c)))
        });
        Poly::from_terms(rank, terms)
    }

    pub fn eval<C: Scalar>(&self, point: &[C]) -> C {
        let rank = self.rank();
        (0..=rank).fold(C::zero(), |acc, slot| acc + C::from_int(self.slot_coefficient(slot)) * point[slot].clone())
    }
}

impl std::ops::Neg for &LinearForm {
    type Output = LinearForm;
    fn neg(self) -> LinearForm {
        LinearForm { coeffs: self.coeffs.iter().map(|c| -c).collect(), hbar: -self.hbar }
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly::<i64>())
    }
}
