//! Finite crystallographic root systems in simple-root coordinates.
//!
//! Roots are integer vectors over the simple roots; the Cartan matrix is
//! stored as `cartan[i][j] = ⟨α_j, α_i∨⟩`, so the simple reflection is
//! `σ_i(v) = v − (Σ_j v_j·cartan[i][j]) α_i`. With this orientation, in B₂
//! with α_i short one gets `σ_i(α_j) = 2α_i + α_j`, and in G₂ (α₁ short)
//! the highest root is `3α₁ + 2α₂`.

mod coset;
mod weyl;

pub use coset::CosetSpace;
pub use weyl::{format_word, WeylElement, WeylGroup};

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Default upper bound on the order of enumerated Weyl groups.
pub const DEFAULT_MAX_GROUP_ORDER: u64 = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(CartanType::A),
            "B" | "b" => Ok(CartanType::B),
            "C" | "c" => Ok(CartanType::C),
            "D" | "d" => Ok(CartanType::D),
            "E" | "e" => Ok(CartanType::E),
            "F" | "f" => Ok(CartanType::F),
            "G" | "g" => Ok(CartanType::G),
            other => Err(Error::UnknownType(other.to_string())),
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            CartanType::A => "A",
            CartanType::B => "B",
            CartanType::C => "C",
            CartanType::D => "D",
            CartanType::E => "E",
            CartanType::F => "F",
            CartanType::G => "G",
        };
        f.write_str(c)
    }
}

impl CartanType {
    fn valid_rank(self, rank: usize) -> bool {
        match self {
            CartanType::A => rank >= 1,
            CartanType::B | CartanType::C => rank >= 2,
            CartanType::D => rank >= 4,
            CartanType::E => (6..=8).contains(&rank),
            CartanType::F => rank == 4,
            CartanType::G => rank == 2,
        }
    }

    /// Number of positive roots.
    pub fn positive_root_count(self, rank: usize) -> usize {
        let n = rank;
        match self {
            CartanType::A => n * (n + 1) / 2,
            CartanType::B | CartanType::C => n * n,
            CartanType::D => n * (n - 1),
            CartanType::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            CartanType::F => 24,
            CartanType::G => 6,
        }
    }

    /// Order of the Weyl group (saturating).
    pub fn weyl_order(self, rank: usize) -> u64 {
        let fact = |k: usize| (1..=k as u64).fold(1u64, |a, b| a.saturating_mul(b));
        let n = rank;
        match self {
            CartanType::A => fact(n + 1),
            CartanType::B | CartanType::C => (1u64 << n.min(63)).saturating_mul(fact(n)),
            CartanType::D => (1u64 << (n - 1).min(63)).saturating_mul(fact(n)),
            CartanType::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            CartanType::F => 1152,
            CartanType::G => 12,
        }
    }
}

/// Limits applied when building a root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildOptions {
    pub max_rank: usize,
    /// Type E is refused unless this is set (E₆ has |W| = 51840).
    pub allow_type_e: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { max_rank: 6, allow_type_e: false }
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    rank: usize,
    cartan: Vec<Vec<i32>>,
    positive_roots: Vec<Vec<i32>>,
    root_lookup: HashMap<Vec<i32>, usize>,
}

impl RootSystem {
    /// Builds the root system of the given type with default limits.
    pub fn new(cartan_type: CartanType, rank: usize) -> Result<Self> {
        Self::with_options(cartan_type, rank, BuildOptions::default())
    }

    pub fn with_options(cartan_type: CartanType, rank: usize, opts: BuildOptions) -> Result<Self> {
        let out_of_range = || Error::RankOutOfRange { cartan_type: cartan_type.to_string(), rank };
        if !cartan_type.valid_rank(rank) || rank > opts.max_rank {
            return Err(out_of_range());
        }
        if cartan_type == CartanType::E && !opts.allow_type_e {
            return Err(out_of_range());
        }
        let cartan = cartan_matrix(cartan_type, rank);
        let positive_roots = orbit_closure(&cartan);
        debug_assert_eq!(positive_roots.len(), cartan_type.positive_root_count(rank));
        let root_lookup = positive_roots.iter().enumerate().map(|(k, r)| (r.clone(), k)).collect();
        Ok(RootSystem { cartan_type, rank, cartan, positive_roots, root_lookup })
    }

    /// Parses a type label and builds the system.
    pub fn from_label(label: &str, rank: usize) -> Result<Self> {
        Self::new(label.parse()?, rank)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// Positive roots ordered by height, simple roots first.
    pub fn positive_roots(&self) -> &[Vec<i32>] {
        &self.positive_roots
    }

    /// Index of `v` among the positive roots, if it is one.
    pub fn positive_root_index(&self, v: &[i32]) -> Option<usize> {
        self.root_lookup.get(v).copied()
    }

    pub fn simple_root(&self, i: usize) -> Vec<i32> {
        let mut v = vec![0; self.rank];
        v[i] = 1;
        v
    }

    /// `σ_i(v) = v − ⟨v, α_i∨⟩ α_i`.
    pub fn reflect(&self, i: usize, v: &[i32]) -> Result<Vec<i32>> {
        if i >= self.rank {
            return Err(Error::IndexOutOfRange { index: i, rank: self.rank });
        }
        if v.len() != self.rank {
            return Err(Error::RankMismatch(v.len(), self.rank));
        }
        Ok(reflect_raw(&self.cartan, i, v))
    }

    /// Roots are sign-coherent, so a nonzero vector with no negative
    /// coordinate is positive.
    pub fn is_positive(v: &[i32]) -> bool {
        v.iter().all(|&c| c >= 0) && v.iter().any(|&c| c > 0)
    }
}

fn reflect_raw(cartan: &[Vec<i32>], i: usize, v: &[i32]) -> Vec<i32> {
    let pairing: i32 = v.iter().zip(&cartan[i]).map(|(a, c)| a * c).sum();
    let mut out = v.to_vec();
    out[i] -= pairing;
    out
}

fn cartan_matrix(t: CartanType, n: usize) -> Vec<Vec<i32>> {
    let mut c = vec![vec![0i32; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match t {
        CartanType::A | CartanType::B | CartanType::C => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
        }
        CartanType::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        CartanType::E => {
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
        CartanType::F => {
            for i in 0..3 {
                link(i, i + 1);
            }
        }
        CartanType::G => link(0, 1),
    }
    match t {
        // α_n short
        CartanType::B => c[n - 1][n - 2] = -2,
        // α_n long
        CartanType::C => c[n - 2][n - 1] = -2,
        // α₁, α₂ long; α₃, α₄ short
        CartanType::F => c[2][1] = -2,
        // α₁ short
        CartanType::G => c[0][1] = -3,
        _ => {}
    }
    c
}

/// Positive roots as the closure of the simple roots under simple
/// reflections, keeping only positive images.
fn orbit_closure(cartan: &[Vec<i32>]) -> Vec<Vec<i32>> {
    let n = cartan.len();
    let mut seen: HashMap<Vec<i32>, ()> = HashMap::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut v = vec![0; n];
        v[i] = 1;
        seen.insert(v.clone(), ());
        queue.push_back(v);
    }
    while let Some(v) = queue.pop_front() {
        for i in 0..n {
            let r = reflect_raw(cartan, i, &v);
            if RootSystem::is_positive(&r) && !seen.contains_key(&r) {
                seen.insert(r.clone(), ());
                queue.push_back(r);
            }
        }
    }
    let mut roots: Vec<Vec<i32>> = seen.into_keys().collect();
    roots.sort_by(|a, b| {
        let ha: i32 = a.iter().sum();
        let hb: i32 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(t: CartanType, n: usize) -> RootSystem {
        RootSystem::new(t, n).unwrap()
    }

    #[test]
    fn a1_and_a2_roots() {
        assert_eq!(rs(CartanType::A, 1).positive_roots(), &[vec![1]]);
        assert_eq!(rs(CartanType::A, 2).positive_roots(), &[vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn g2_highest_root_has_alpha1_short() {
        let g2 = rs(CartanType::G, 2);
        assert_eq!(g2.positive_roots().len(), 6);
        assert!(g2.positive_root_index(&[3, 2]).is_some());
        assert!(g2.positive_root_index(&[3, 1]).is_some());
        assert!(g2.positive_root_index(&[1, 3]).is_none());
    }

    #[test]
    fn root_counts_match_known_values() {
        let cases = [
            (CartanType::A, 1),
            (CartanType::A, 4),
            (CartanType::B, 2),
            (CartanType::B, 4),
            (CartanType::C, 3),
            (CartanType::D, 4),
            (CartanType::D, 5),
            (CartanType::F, 4),
            (CartanType::G, 2),
        ];
        for (t, n) in cases {
            let r = rs(t, n);
            assert_eq!(r.positive_roots().len(), t.positive_root_count(n), "{t}{n}");
            for v in r.positive_roots() {
                assert!(v.iter().all(|&c| c >= 0));
            }
            for i in 0..n {
                assert_eq!(r.positive_roots()[i], r.simple_root(i));
            }
        }
        let e6 = RootSystem::with_options(CartanType::E, 6, BuildOptions { max_rank: 6, allow_type_e: true })
            .unwrap();
        assert_eq!(e6.positive_roots().len(), 36);
    }

    #[test]
    fn cartan_matrix_shape() {
        for (t, n) in [(CartanType::B, 3), (CartanType::C, 3), (CartanType::F, 4), (CartanType::G, 2)] {
            let r = rs(t, n);
            for i in 0..n {
                for j in 0..n {
                    let c = r.cartan_matrix()[i][j];
                    if i == j {
                        assert_eq!(c, 2);
                    } else {
                        assert!(c <= 0);
                        assert_eq!(c == 0, r.cartan_matrix()[j][i] == 0);
                    }
                }
            }
        }
    }

    #[test]
    fn reflection_orientation() {
        let a2 = rs(CartanType::A, 2);
        assert_eq!(a2.reflect(0, &[0, 1]).unwrap(), vec![1, 1]);
        assert_eq!(a2.reflect(1, &[1, 0]).unwrap(), vec![1, 1]);
        // B₂ in Bourbaki labelling: α₂ short.
        let b2 = rs(CartanType::B, 2);
        assert_eq!(b2.reflect(1, &[1, 0]).unwrap(), vec![1, 2]);
        assert_eq!(b2.reflect(0, &[0, 1]).unwrap(), vec![1, 1]);
        // G₂: α₁ short.
        let g2 = rs(CartanType::G, 2);
        assert_eq!(g2.reflect(0, &[0, 1]).unwrap(), vec![3, 1]);
        assert_eq!(g2.reflect(1, &[1, 0]).unwrap(), vec![1, 1]);
        for r in [&a2, &b2, &g2] {
            for i in 0..2 {
                let mut neg = vec![0; 2];
                neg[i] = -1;
                assert_eq!(r.reflect(i, &r.simple_root(i)).unwrap(), neg);
            }
        }
    }

    #[test]
    fn errors() {
        assert_eq!("H".parse::<CartanType>(), Err(Error::UnknownType("H".into())));
        assert!(matches!(RootSystem::new(CartanType::G, 3), Err(Error::RankOutOfRange { .. })));
        assert!(matches!(RootSystem::new(CartanType::A, 7), Err(Error::RankOutOfRange { .. })));
        assert!(matches!(RootSystem::new(CartanType::E, 6), Err(Error::RankOutOfRange { .. })));
        assert!(matches!(RootSystem::new(CartanType::D, 3), Err(Error::RankOutOfRange { .. })));
        let a2 = rs(CartanType::A, 2);
        assert!(matches!(a2.reflect(2, &[1, 0]), Err(Error::IndexOutOfRange { .. })));
    }
}
