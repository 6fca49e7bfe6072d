use super::{RootSystem, WeylElement, WeylGroup};
use crate::error::{Error, Result};

/// The coset space `W/W_P` for the parabolic subgroup generated by a subset
/// `I` of the simple roots.
///
/// Cosets are numbered by their minimal representative, in element order, so
/// coset 0 is always `W_P` itself.
#[derive(Debug, Clone)]
pub struct CosetSpace {
    subset: Vec<usize>,
    parabolic_roots: Vec<usize>,
    complement_roots: Vec<usize>,
    minimal_reps: Vec<WeylElement>,
    projection: Vec<u32>,
    members: Vec<Vec<WeylElement>>,
    parabolic_order: usize,
}

impl CosetSpace {
    pub(super) fn new(group: &WeylGroup, subset: &[usize]) -> Result<Self> {
        let rank = group.rank();
        if let Some(&i) = subset.iter().find(|&&i| i >= rank) {
            return Err(Error::IndexOutOfRange { index: i, rank });
        }
        let mut subset = subset.to_vec();
        subset.sort_unstable();
        subset.dedup();

        let rs = group.root_system();
        let (parabolic_roots, complement_roots): (Vec<usize>, Vec<usize>) = (0..rs.positive_roots().len())
            .partition(|&k| rs.positive_roots()[k].iter().enumerate().all(|(j, &c)| c == 0 || subset.contains(&j)));

        // Minimal representatives map every α ∈ I into R⁺.
        let is_minimal = |w: WeylElement| {
            subset.iter().all(|&i| RootSystem::is_positive(&group.act_root(w, &rs.simple_root(i))))
        };
        let minimal_reps: Vec<WeylElement> = group.elements().filter(|&w| is_minimal(w)).collect();
        let mut coset_of_rep = vec![u32::MAX; group.order()];
        for (k, &m) in minimal_reps.iter().enumerate() {
            coset_of_rep[m.index()] = k as u32;
        }
        let mut projection = vec![0u32; group.order()];
        let mut members = vec![Vec::new(); minimal_reps.len()];
        for w in group.elements() {
            let mut m = w;
            // Strip right descents in I until minimal.
            while let Some(&i) = subset.iter().find(|&&i| !group.is_right_ascent(m, i)) {
                m = group.mul_simple(m, i);
            }
            let k = coset_of_rep[m.index()];
            debug_assert!(k != u32::MAX);
            projection[w.index()] = k;
            members[k as usize].push(w);
        }
        let parabolic_order = members[0].len();
        Ok(CosetSpace { subset, parabolic_roots, complement_roots, minimal_reps, projection, members, parabolic_order })
    }

    /// The index set `I` (0-based, sorted).
    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    /// Indices (into the positive roots) of `R⁺_P`.
    pub fn parabolic_roots(&self) -> &[usize] {
        &self.parabolic_roots
    }

    /// Indices of `R⁺ ∖ R⁺_P`.
    pub fn complement_roots(&self) -> &[usize] {
        &self.complement_roots
    }

    pub fn minimal_reps(&self) -> &[WeylElement] {
        &self.minimal_reps
    }

    pub fn len(&self) -> usize {
        self.minimal_reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.minimal_reps.is_empty()
    }

    pub fn parabolic_order(&self) -> usize {
        self.parabolic_order
    }

    /// Coset index of `w`.
    pub fn project(&self, w: WeylElement) -> usize {
        self.projection[w.index()] as usize
    }

    pub fn minimal_rep(&self, coset: usize) -> WeylElement {
        self.minimal_reps[coset]
    }

    /// All elements of a coset, in element order (minimal one first).
    pub fn members(&self, coset: usize) -> &[WeylElement] {
        &self.members[coset]
    }

    pub fn is_minimal(&self, w: WeylElement) -> bool {
        self.minimal_reps[self.project(w)] == w
    }

    /// Quotient Bruhat order via minimal representatives.
    pub fn bruhat_leq(&self, group: &WeylGroup, a: usize, b: usize) -> bool {
        group.bruhat_leq(self.minimal_reps[a], self.minimal_reps[b])
    }
}
