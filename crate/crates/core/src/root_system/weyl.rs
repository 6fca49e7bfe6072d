use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use super::{CosetSpace, RootSystem};
use crate::error::{Error, Result};

/// Handle to an element of a [`WeylGroup`].
///
/// Elements are numbered by `(length, canonical word)`, so the identity is
/// always `WeylElement(0)` and numbering is deterministic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement(pub(crate) u32);

impl WeylElement {
    pub const IDENTITY: WeylElement = WeylElement(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// The Weyl group of a [`RootSystem`], fully enumerated.
///
/// Every element carries its lexicographically least reduced word and its
/// action matrix on the simple roots (column `j` is `w(α_j)`).
pub struct WeylGroup {
    rs: RootSystem,
    actions: Vec<Vec<i32>>,
    words: Vec<Vec<usize>>,
    lengths: Vec<u32>,
    right: Vec<u32>,
    left: Vec<u32>,
    inverses: Vec<u32>,
    lookup: HashMap<Vec<i32>, u32>,
    root_reflections: Vec<WeylElement>,
    reflection_roots: HashMap<WeylElement, usize>,
    lower_ideals: Vec<OnceLock<FixedBitSet>>,
}

impl fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeylGroup")
            .field("type", &self.rs.cartan_type())
            .field("rank", &self.rs.rank())
            .field("order", &self.order())
            .finish()
    }
}

impl WeylGroup {
    /// Enumerates the group, refusing if `|W| > max_order`.
    pub fn new(rs: RootSystem, max_order: u64) -> Result<Self> {
        let expected = rs.cartan_type().weyl_order(rs.rank());
        if expected > max_order {
            return Err(Error::GroupTooLarge { order: expected, limit: max_order });
        }
        let n = rs.rank();
        let cartan = rs.cartan_matrix().to_vec();

        // Breadth-first search over right multiplication; BFS depth is length.
        let identity: Vec<i32> = (0..n * n).map(|k| i32::from(k / n == k % n)).collect();
        let mut mats = vec![identity.clone()];
        let mut lens = vec![0u32];
        let mut index: HashMap<Vec<i32>, u32> = HashMap::new();
        index.insert(identity, 0);
        let mut right_bfs = Vec::new();
        let mut head = 0;
        while head < mats.len() {
            for i in 0..n {
                let m = right_reflect(&mats[head], &cartan, i, n);
                let next = match index.get(&m) {
                    Some(&k) => k,
                    None => {
                        let k = mats.len() as u32;
                        index.insert(m.clone(), k);
                        mats.push(m);
                        lens.push(lens[head] + 1);
                        k
                    }
                };
                right_bfs.push(next);
            }
            head += 1;
        }
        let order = mats.len();
        debug_assert_eq!(order as u64, expected);

        let mut left_bfs = vec![0u32; order * n];
        for (w, m) in mats.iter().enumerate() {
            for i in 0..n {
                left_bfs[w * n + i] = index[&left_reflect(m, &cartan, i, n)];
            }
        }
        // Canonical word: smallest left descent, recursively. BFS order is
        // nondecreasing in length so σ_i·w is already done.
        let mut words_bfs: Vec<Vec<usize>> = vec![Vec::new(); order];
        for w in 1..order {
            let (i, sw) = (0..n)
                .map(|i| (i, left_bfs[w * n + i] as usize))
                .find(|&(_, sw)| lens[sw] < lens[w])
                .expect("non-identity element has a left descent");
            let mut word = Vec::with_capacity(lens[w] as usize);
            word.push(i);
            word.extend_from_slice(&words_bfs[sw]);
            words_bfs[w] = word;
        }

        let mut perm: Vec<usize> = (0..order).collect();
        perm.sort_by(|&a, &b| lens[a].cmp(&lens[b]).then_with(|| words_bfs[a].cmp(&words_bfs[b])));
        let mut new_of_old = vec![0u32; order];
        for (new, &old) in perm.iter().enumerate() {
            new_of_old[old] = new as u32;
        }
        let remap = |table: &[u32]| -> Vec<u32> {
            let mut out = vec![0u32; order * n];
            for (new, &old) in perm.iter().enumerate() {
                for i in 0..n {
                    out[new * n + i] = new_of_old[table[old * n + i] as usize];
                }
            }
            out
        };
        let right = remap(&right_bfs);
        let left = remap(&left_bfs);
        let actions: Vec<Vec<i32>> = perm.iter().map(|&o| mats[o].clone()).collect();
        let words: Vec<Vec<usize>> = perm.iter().map(|&o| words_bfs[o].clone()).collect();
        let lengths: Vec<u32> = perm.iter().map(|&o| lens[o]).collect();
        let lookup = actions.iter().enumerate().map(|(k, m)| (m.clone(), k as u32)).collect();

        let mut group = WeylGroup {
            rs,
            actions,
            words,
            lengths,
            right,
            left,
            inverses: Vec::new(),
            lookup,
            root_reflections: Vec::new(),
            reflection_roots: HashMap::new(),
            lower_ideals: (0..order).map(|_| OnceLock::new()).collect(),
        };
        group.inverses = (0..order)
            .map(|w| {
                let word: Vec<usize> = group.words[w].iter().rev().copied().collect();
                group.walk(WeylElement::IDENTITY, &word).0 .0
            })
            .collect();
        group.index_reflections();
        Ok(group)
    }

    /// σ_β = u σ_i u⁻¹ for the first `u` (in element order) with `u(α_i) = β`.
    fn index_reflections(&mut self) {
        let npos = self.rs.positive_roots().len();
        let mut refl: Vec<Option<WeylElement>> = vec![None; npos];
        let mut missing = npos;
        'outer: for u in self.elements() {
            for i in 0..self.rank() {
                let img = self.act_root(u, &self.rs.simple_root(i));
                if let Some(k) = self.rs.positive_root_index(&img) {
                    if refl[k].is_none() {
                        let s = self.mul(self.mul_simple(u, i), self.inverse(u));
                        refl[k] = Some(s);
                        missing -= 1;
                        if missing == 0 {
                            break 'outer;
                        }
                    }
                }
            }
        }
        self.root_reflections = refl.into_iter().map(|r| r.expect("every root is W-conjugate to a simple root")).collect();
        self.reflection_roots = self.root_reflections.iter().enumerate().map(|(k, &s)| (s, k)).collect();
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn order(&self) -> usize {
        self.words.len()
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::IDENTITY
    }

    pub fn element(&self, index: usize) -> WeylElement {
        assert!(index < self.order());
        WeylElement(index as u32)
    }

    /// All elements, identity first, ordered by length then canonical word.
    pub fn elements(&self) -> impl ExactSizeIterator<Item = WeylElement> + Clone {
        (0..self.order() as u32).map(WeylElement)
    }

    /// Lexicographically least reduced word (0-based simple-root indices).
    pub fn word(&self, w: WeylElement) -> &[usize] {
        &self.words[w.index()]
    }

    pub fn length(&self, w: WeylElement) -> usize {
        self.lengths[w.index()] as usize
    }

    /// Column-major `rank × rank` action matrix: column `j` is `w(α_j)`.
    pub fn action(&self, w: WeylElement) -> &[i32] {
        &self.actions[w.index()]
    }

    /// `w(α_j)` for every simple root, as integer vectors.
    pub fn simple_root_images(&self, w: WeylElement) -> Vec<Vec<i32>> {
        let n = self.rank();
        self.action(w).chunks(n).map(<[i32]>::to_vec).collect()
    }

    pub fn act_root(&self, w: WeylElement, v: &[i32]) -> Vec<i32> {
        let n = self.rank();
        let m = self.action(w);
        let mut out = vec![0; n];
        for (j, &c) in v.iter().enumerate() {
            if c != 0 {
                for i in 0..n {
                    out[i] += c * m[j * n + i];
                }
            }
        }
        out
    }

    /// `w σ_i`.
    pub fn mul_simple(&self, w: WeylElement, i: usize) -> WeylElement {
        WeylElement(self.right[w.index() * self.rank() + i])
    }

    /// `σ_i w`.
    pub fn simple_mul(&self, i: usize, w: WeylElement) -> WeylElement {
        WeylElement(self.left[w.index() * self.rank() + i])
    }

    pub fn mul(&self, a: WeylElement, b: WeylElement) -> WeylElement {
        self.walk(a, self.word(b)).0
    }

    pub fn inverse(&self, w: WeylElement) -> WeylElement {
        WeylElement(self.inverses[w.index()])
    }

    /// `l(w σ_i) > l(w)`, equivalently `w(α_i) ∈ R⁺`.
    pub fn is_right_ascent(&self, w: WeylElement, i: usize) -> bool {
        self.length(self.mul_simple(w, i)) > self.length(w)
    }

    /// Looks an element up by its action matrix.
    pub fn find(&self, action: &[i32]) -> Option<WeylElement> {
        self.lookup.get(action).map(|&k| WeylElement(k))
    }

    /// Multiplies `start` on the right by the letters of `word`; the flag
    /// reports whether every step increased the length.
    fn walk(&self, start: WeylElement, word: &[usize]) -> (WeylElement, bool) {
        let mut w = start;
        let mut reduced = true;
        for &i in word {
            let next = self.mul_simple(w, i);
            reduced &= self.length(next) > self.length(w);
            w = next;
        }
        (w, reduced)
    }

    fn check_letters(&self, word: &[usize]) -> Result<()> {
        match word.iter().find(|&&i| i >= self.rank()) {
            Some(&i) => Err(Error::IndexOutOfRange { index: i, rank: self.rank() }),
            None => Ok(()),
        }
    }

    /// Product of an arbitrary (not necessarily reduced) word.
    pub fn word_product(&self, word: &[usize]) -> Result<WeylElement> {
        self.check_letters(word)?;
        Ok(self.walk(WeylElement::IDENTITY, word).0)
    }

    /// Product of a word that must be reduced.
    pub fn reduced_product(&self, word: &[usize]) -> Result<WeylElement> {
        self.check_letters(word)?;
        match self.walk(WeylElement::IDENTITY, word) {
            (w, true) => Ok(w),
            _ => Err(Error::NotReduced(word.to_vec())),
        }
    }

    pub fn is_reduced(&self, word: &[usize]) -> bool {
        self.reduced_product(word).is_ok()
    }

    /// All reduced words of `w` in lexicographic order, by recursion on
    /// right descents.
    pub fn reduced_words(&self, w: WeylElement) -> Vec<Vec<usize>> {
        let mut memo: HashMap<WeylElement, Vec<Vec<usize>>> = HashMap::new();
        let mut out = self.reduced_words_rec(w, &mut memo);
        out.sort();
        out
    }

    fn reduced_words_rec(
        &self,
        w: WeylElement,
        memo: &mut HashMap<WeylElement, Vec<Vec<usize>>>,
    ) -> Vec<Vec<usize>> {
        if w == WeylElement::IDENTITY {
            return vec![Vec::new()];
        }
        if let Some(v) = memo.get(&w) {
            return v.clone();
        }
        let mut out = Vec::new();
        for i in 0..self.rank() {
            let ws = self.mul_simple(w, i);
            if self.length(ws) < self.length(w) {
                for mut u in self.reduced_words_rec(ws, memo) {
                    u.push(i);
                    out.push(u);
                }
            }
        }
        memo.insert(w, out.clone());
        out
    }

    /// Inversion roots `β_k = σ_{i_1}⋯σ_{i_{k−1}} α_{i_k}` read off a reduced
    /// word, in order.
    pub fn inversion_set(&self, word: &[usize]) -> Result<Vec<Vec<i32>>> {
        self.check_letters(word)?;
        let mut prefix = WeylElement::IDENTITY;
        let mut out = Vec::with_capacity(word.len());
        for &i in word {
            let beta = self.act_root(prefix, &self.rs.simple_root(i));
            if !RootSystem::is_positive(&beta) {
                return Err(Error::NotReduced(word.to_vec()));
            }
            out.push(beta);
            prefix = self.mul_simple(prefix, i);
        }
        Ok(out)
    }

    /// The reflection σ_β for the positive root with index `k`.
    pub fn reflection(&self, k: usize) -> WeylElement {
        self.root_reflections[k]
    }

    /// If `w` is a reflection σ_β, the index of β.
    pub fn reflection_root(&self, w: WeylElement) -> Option<usize> {
        self.reflection_roots.get(&w).copied()
    }

    /// Bruhat order `w ≤ y`.
    pub fn bruhat_leq(&self, w: WeylElement, y: WeylElement) -> bool {
        if self.length(w) > self.length(y) {
            return false;
        }
        self.lower_ideal(y).contains(w.index())
    }

    /// `{x : x ≤ y}`, memoized. Uses `[e, y] = [e, ys] ∪ [e, ys]·s` for a
    /// right descent `s` of `y`.
    pub fn lower_ideal(&self, y: WeylElement) -> &FixedBitSet {
        self.lower_ideals[y.index()].get_or_init(|| {
            let mut set = FixedBitSet::with_capacity(self.order());
            if y == WeylElement::IDENTITY {
                set.insert(0);
                return set;
            }
            let s = *self.word(y).last().unwrap();
            let below = self.lower_ideal(self.mul_simple(y, s));
            set.union_with(below);
            for x in below.ones() {
                set.insert(self.mul_simple(WeylElement(x as u32), s).index());
            }
            set
        })
    }

    /// Quotient data for the parabolic subgroup generated by `subset`.
    pub fn coset_space(&self, subset: &[usize]) -> Result<CosetSpace> {
        CosetSpace::new(self, subset)
    }

    /// Longest element.
    pub fn longest(&self) -> WeylElement {
        WeylElement(self.order() as u32 - 1)
    }

    /// `e`, or the word with 1-based letters, e.g. `s1s2s1`.
    pub fn format_element(&self, w: WeylElement) -> String {
        format_word(self.word(w))
    }
}

pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter().map(|i| format!("s{}", i + 1)).collect()
    }
}

fn right_reflect(m: &[i32], cartan: &[Vec<i32>], i: usize, n: usize) -> Vec<i32> {
    // (M S_i)[:, j] = M[:, j] − C[i][j]·M[:, i]
    let mut out = m.to_vec();
    for j in 0..n {
        let c = cartan[i][j];
        if c != 0 {
            for r in 0..n {
                out[j * n + r] -= c * m[i * n + r];
            }
        }
    }
    out
}

fn left_reflect(m: &[i32], cartan: &[Vec<i32>], i: usize, n: usize) -> Vec<i32> {
    // σ_i applied to every column.
    let mut out = m.to_vec();
    for j in 0..n {
        let col = &m[j * n..(j + 1) * n];
        let pairing: i32 = col.iter().zip(&cartan[i]).map(|(a, c)| a * c).sum();
        out[j * n + i] -= pairing;
    }
    out
}
