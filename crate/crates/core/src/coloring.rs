//! Finite pair-colorings and the exact kernels that act on them.
//!
//! Pairs `{i, j}` with `i < j` are addressed colexicographically:
//! `pair_index(i, j) = j(j-1)/2 + i`. Triples `{i, j, k}` with `i < j < k`
//! use `C(k,3) + C(j,2) + i`. Both orders are part of the serialization
//! contract (graph6 uses the same column order for pairs).

use std::cmp::Ordering;
use std::fmt;

use crate::error::{domain, Error, Result};

/// A color, either 0 or 1.
pub type Color = u8;

/// Number of pairs on `n` vertices.
#[inline]
pub const fn num_pairs(n: usize) -> usize {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

/// Number of triples on `n` vertices.
#[inline]
pub const fn num_triples(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// Colex index of the pair `{i, j}`; argument order does not matter.
#[inline]
pub fn pair_index(i: usize, j: usize) -> usize {
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    hi * (hi - 1) / 2 + lo
}

/// Inverse of [`pair_index`].
pub fn pair_from_index(p: usize) -> (usize, usize) {
    // largest j with j(j-1)/2 <= p
    let mut j = (((8 * p + 1) as f64).sqrt() as usize).div_ceil(2);
    while j * (j - 1) / 2 > p {
        j -= 1;
    }
    while (j + 1) * j / 2 <= p {
        j += 1;
    }
    (p - j * (j - 1) / 2, j)
}

/// Colex index of the triple `{i, j, k}`, in any argument order.
#[inline]
pub fn triple_index(a: usize, b: usize, c: usize) -> usize {
    let mut t = [a, b, c];
    t.sort_unstable();
    let [i, j, k] = t;
    num_triples(k) + num_pairs(j) + i
}

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

#[inline]
fn tail_mask(bits: usize) -> u64 {
    match bits % 64 {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    }
}

/// Lexicographic comparison of two equal-length bit vectors, bit 0 first, 0 < 1.
fn lex_cmp_words(a: &[u64], b: &[u64]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        let d = x ^ y;
        if d != 0 {
            let t = d.trailing_zeros();
            return if (x >> t) & 1 == 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            };
        }
    }
    Ordering::Equal
}

/// A subset of the ground set `{0, ..., n-1}`.
///
/// Sets are ordered by the integer whose bit `i` is the membership of vertex `i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; words_for(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for (w, word) in s.words.iter_mut().enumerate() {
            *word = if w + 1 == words_for(n) {
                tail_mask(n)
            } else {
                u64::MAX
            };
        }
        s
    }

    /// Builds a set from members; fails on a vertex `>= n`.
    pub fn from_members<I: IntoIterator<Item = usize>>(n: usize, members: I) -> Result<Self> {
        let mut s = Self::empty(n);
        for v in members {
            if v >= n {
                return domain(format!("vertex {v} outside ground set of size {n}"));
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Set with the membership bits of `mask` (ground set of at most 64 vertices).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 64, "from_mask needs n <= 64");
        let mut s = Self::empty(n);
        if n > 0 {
            s.words[0] = mask & tail_mask(n);
        }
        s
    }

    /// Membership bits as an integer; `None` when the ground set exceeds 64 vertices.
    pub fn mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && (self.words[v / 64] >> (v % 64)) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n);
        self.words[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            self.words[v / 64] &= !(1 << (v % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let t = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * 64 + t)
                }
            })
        })
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn symmetric_difference(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a ^ b)
    }

    /// Complement within the ground set.
    pub fn complement(&self) -> VertexSet {
        VertexSet::full(self.n).difference(self)
    }

    fn zip_with(&self, other: &VertexSet, f: impl Fn(u64, u64) -> u64) -> VertexSet {
        debug_assert_eq!(self.n, other.n);
        VertexSet {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            for (a, b) in self.words.iter().zip(&other.words).rev() {
                match a.cmp(b) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A 2-coloring of all pairs of `{0, ..., n-1}`.
///
/// Colorings compare first by `n`, then lexicographically on the edge
/// bit-vector with pair index 0 most significant and 0 before 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    n: usize,
    words: Vec<u64>,
}

impl Coloring {
    pub fn zeros(n: usize) -> Self {
        Coloring {
            n,
            words: vec![0; words_for(num_pairs(n))],
        }
    }

    pub fn ones(n: usize) -> Self {
        Self::zeros(n).complement()
    }

    /// Coloring whose pair `{i, j}` (`i < j`) gets `f(i, j)`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut c = Self::zeros(n);
        for j in 1..n {
            for i in 0..j {
                if f(i, j) {
                    c.set_bit(pair_index(i, j), true);
                }
            }
        }
        c
    }

    /// Coloring with exactly the listed pairs colored 1.
    pub fn from_ones<I: IntoIterator<Item = (usize, usize)>>(n: usize, ones: I) -> Result<Self> {
        let mut c = Self::zeros(n);
        for (i, j) in ones {
            check_pair(n, i, j)?;
            c.set(i, j, 1);
        }
        Ok(c)
    }

    /// Coloring from a bit iterator in pair-index order. Missing bits are 0.
    pub fn from_bits<I: IntoIterator<Item = bool>>(n: usize, bits: I) -> Result<Self> {
        let mut c = Self::zeros(n);
        let m = num_pairs(n);
        for (p, b) in bits.into_iter().enumerate() {
            if p >= m {
                return Err(Error::Validation(format!(
                    "more than {m} pair bits for n = {n}"
                )));
            }
            c.set_bit(p, b);
        }
        Ok(c)
    }

    /// Coloring from packed words in pair-index order (bit `p` of the
    /// vector is bit `p % 64` of word `p / 64`).
    pub fn from_words(n: usize, words: Vec<u64>) -> Result<Self> {
        let m = num_pairs(n);
        if words.len() != words_for(m) {
            return Err(Error::Validation(format!(
                "expected {} words for n = {n}, got {}",
                words_for(m),
                words.len()
            )));
        }
        if let Some(last) = words.last() {
            if last & !tail_mask(m) != 0 {
                return Err(Error::Validation("bits set beyond the last pair".into()));
            }
        }
        Ok(Coloring { n, words })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_pairs(&self) -> usize {
        num_pairs(self.n)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn bit(&self, p: usize) -> bool {
        (self.words[p / 64] >> (p % 64)) & 1 == 1
    }

    #[inline]
    pub fn set_bit(&mut self, p: usize, value: bool) {
        if value {
            self.words[p / 64] |= 1 << (p % 64);
        } else {
            self.words[p / 64] &= !(1 << (p % 64));
        }
    }

    /// Color of `{i, j}`; panics on invalid vertices. See [`Coloring::pair_color`]
    /// for the checked form.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Color {
        debug_assert!(i != j && i < self.n && j < self.n);
        self.bit(pair_index(i, j)) as Color
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, color: Color) {
        debug_assert!(i != j && i < self.n && j < self.n);
        self.set_bit(pair_index(i, j), color != 0);
    }

    /// Checked color lookup, symmetric in its arguments.
    pub fn pair_color(&self, i: usize, j: usize) -> Result<Color> {
        check_pair(self.n, i, j)?;
        Ok(self.get(i, j))
    }

    /// Pairs colored 1, sorted by `(i, j)` with `i < j`.
    pub fn ones_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.get(i, j) == 1 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// The coloring `1 - φ`.
    pub fn complement(&self) -> Coloring {
        let m = num_pairs(self.n);
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        if let Some(last) = words.last_mut() {
            *last &= tail_mask(m);
        }
        Coloring { n: self.n, words }
    }

    /// Restriction to `s`; vertex `k` of the result is the `k`-th smallest member.
    pub fn restrict(&self, s: &VertexSet) -> Coloring {
        let members = s.to_vec();
        self.restrict_to(&members)
    }

    /// Restriction to the listed vertices, relabelled in the given order.
    pub fn restrict_to(&self, members: &[usize]) -> Coloring {
        Coloring::from_fn(members.len(), |a, b| self.get(members[a], members[b]) == 1)
    }

    /// Restriction to the initial segment `{0, ..., m-1}`.
    pub fn prefix(&self, m: usize) -> Coloring {
        assert!(m <= self.n);
        let bits = num_pairs(m);
        let mut words: Vec<u64> = self.words[..words_for(bits)].to_vec();
        if let Some(last) = words.last_mut() {
            *last &= tail_mask(bits);
        }
        Coloring { n: m, words }
    }

    /// Flips the color of every listed pair (duplicates flip twice).
    pub fn finite_change(&self, pairs: &[(usize, usize)]) -> Result<Coloring> {
        let mut out = self.clone();
        for &(i, j) in pairs {
            check_pair(self.n, i, j)?;
            let p = pair_index(i, j);
            let b = out.bit(p);
            out.set_bit(p, !b);
        }
        Ok(out)
    }

    /// Relabels vertices: vertex `v` of `self` becomes vertex `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Coloring {
        assert_eq!(perm.len(), self.n);
        let mut out = Coloring::zeros(self.n);
        for j in 1..self.n {
            for i in 0..j {
                if self.get(i, j) == 1 {
                    out.set(perm[i], perm[j], 1);
                }
            }
        }
        out
    }

    /// Number of pairs on which the two colorings differ.
    pub fn distance(&self, other: &Coloring) -> usize {
        assert_eq!(self.n, other.n);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    /// Pairs on which the two colorings differ, in pair-index order.
    pub fn diff_pairs(&self, other: &Coloring) -> Vec<(usize, usize)> {
        assert_eq!(self.n, other.n);
        (0..self.num_pairs())
            .filter(|&p| self.bit(p) != other.bit(p))
            .map(pair_from_index)
            .collect()
    }

    /// Neighborhoods in the 1-color graph, one bitset row per vertex.
    pub fn rows(&self) -> Vec<VertexSet> {
        let mut rows = vec![VertexSet::empty(self.n); self.n];
        for j in 1..self.n {
            for i in 0..j {
                if self.get(i, j) == 1 {
                    rows[i].insert(j);
                    rows[j].insert(i);
                }
            }
        }
        rows
    }

    /// Constant color of `h` when `|h| > 2` and every pair inside agrees.
    pub fn is_homogeneous(&self, h: &VertexSet) -> Option<Color> {
        self.is_homogeneous_with(h, false)
    }

    /// As [`Coloring::is_homogeneous`]; `relaxed` also accepts 2-element sets.
    pub fn is_homogeneous_with(&self, h: &VertexSet, relaxed: bool) -> Option<Color> {
        let members = h.to_vec();
        let min = if relaxed { 2 } else { 3 };
        if members.len() < min || members.iter().any(|&v| v >= self.n) {
            return None;
        }
        let first = self.get(members[0], members[1]);
        for (a, &x) in members.iter().enumerate() {
            for &y in &members[a + 1..] {
                if self.get(x, y) != first {
                    return None;
                }
            }
        }
        Some(first)
    }

    /// Homogeneous 3-subsets.
    pub fn hom_triples(&self) -> Result<TripleFamily> {
        if self.n < 3 {
            return domain(format!("hom_triples needs n >= 3, got {}", self.n));
        }
        let mut t = TripleFamily::empty(self.n);
        for k in 2..self.n {
            for j in 1..k {
                let cjk = self.get(j, k);
                for i in 0..j {
                    if self.get(i, j) == cjk && self.get(i, k) == cjk {
                        t.insert(i, j, k);
                    }
                }
            }
        }
        Ok(t)
    }

    /// Every homogeneous subset of size `>= min_size`, in set order. Exponential;
    /// guarded at `n <= 14`.
    pub fn homogeneous_family(&self, min_size: usize) -> Result<Vec<VertexSet>> {
        const GUARD: usize = 14;
        if self.n > GUARD {
            return Err(Error::Resource(format!(
                "homogeneous_family is exponential; n = {} exceeds {GUARD}",
                self.n
            )));
        }
        let relaxed = min_size <= 2;
        let min_size = min_size.max(2);
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << self.n) {
            if (mask.count_ones() as usize) < min_size {
                continue;
            }
            let s = VertexSet::from_mask(self.n, mask);
            if self.is_homogeneous_with(&s, relaxed).is_some() {
                out.push(s);
            }
        }
        Ok(out)
    }

    /// Compact text form `n:bits` with one `0`/`1` per pair in pair-index order.
    pub fn to_bit_string(&self) -> String {
        let mut s = format!("{}:", self.n);
        for p in 0..self.num_pairs() {
            s.push(if self.bit(p) { '1' } else { '0' });
        }
        s
    }

    /// Parses the form produced by [`Coloring::to_bit_string`].
    pub fn from_bit_string(text: &str) -> Result<Coloring> {
        let (n, bits) = text
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::Validation(format!("expected `n:bits`, got `{text}`")))?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| Error::Validation(format!("bad vertex count `{n}`")))?;
        let bits = bits.trim();
        if bits.len() != num_pairs(n) {
            return Err(Error::Validation(format!(
                "expected {} pair bits for n = {n}, got {}",
                num_pairs(n),
                bits.len()
            )));
        }
        let parsed: Result<Vec<bool>> = bits
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Validation(format!("bad bit `{other}`"))),
            })
            .collect();
        Coloring::from_bits(n, parsed?)
    }
}

impl Ord for Coloring {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| lex_cmp_words(&self.words, &other.words))
    }
}

impl PartialOrd for Coloring {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coloring({})", self.to_bit_string())
    }
}

fn check_pair(n: usize, i: usize, j: usize) -> Result<()> {
    if i >= n || j >= n {
        return domain(format!("pair {{{i}, {j}}} outside ground set of size {n}"));
    }
    if i == j {
        return domain(format!("pair {{{i}, {j}}} is not a pair"));
    }
    Ok(())
}

/// The homogeneous 3-subsets of a coloring, one bit per triple.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TripleFamily {
    n: usize,
    words: Vec<u64>,
}

impl TripleFamily {
    pub fn empty(n: usize) -> Self {
        TripleFamily {
            n,
            words: vec![0; words_for(num_triples(n))],
        }
    }

    pub fn all(n: usize) -> Self {
        let mut t = Self::empty(n);
        let m = num_triples(n);
        for (w, word) in t.words.iter_mut().enumerate() {
            *word = if w + 1 == words_for(m) {
                tail_mask(m)
            } else {
                u64::MAX
            };
        }
        t
    }

    /// Family from explicit triples; each triple needs three distinct in-range vertices.
    pub fn from_triples<I: IntoIterator<Item = (usize, usize, usize)>>(
        n: usize,
        triples: I,
    ) -> Result<Self> {
        let mut t = Self::empty(n);
        for (a, b, c) in triples {
            if a >= n || b >= n || c >= n || a == b || b == c || a == c {
                return domain(format!("invalid triple {{{a}, {b}, {c}}} for n = {n}"));
            }
            t.insert(a, b, c);
        }
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn contains(&self, a: usize, b: usize, c: usize) -> bool {
        let t = triple_index(a, b, c);
        (self.words[t / 64] >> (t % 64)) & 1 == 1
    }

    pub fn insert(&mut self, a: usize, b: usize, c: usize) {
        let t = triple_index(a, b, c);
        self.words[t / 64] |= 1 << (t % 64);
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members as sorted `(i, j, k)` with `i < j < k`, in triple-index order.
    pub fn triples(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for k in 2..self.n {
            for j in 1..k {
                for i in 0..j {
                    if self.contains(i, j, k) {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for TripleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TripleFamily")
            .field("n", &self.n)
            .field("triples", &self.triples())
            .finish()
    }
}
