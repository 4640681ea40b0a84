//! Permutations of `[n] = {1, ..., n}`, involutions in canonical form and the
//! conjugacy classes `X_j` of involutions with `j` disjoint transpositions.
//!
//! Every public surface speaks 1-based points. Storage is 0-based `u8`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{check_degree, ModelError, Result};
use crate::partition::IntPartition;

/// Largest degree accepted by the constructors.
pub const MAX_DEGREE: usize = 64;

fn check_supported(n: usize) -> Result<()> {
    if (1..=MAX_DEGREE).contains(&n) {
        Ok(())
    } else {
        Err(ModelError::UnsupportedDegree(n))
    }
}

/// A bijection of `{1..n}` stored as its image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation from 1-based images: `images[i - 1] = σ(i)`.
    pub fn new(images: &[usize]) -> Result<Self> {
        let n = images.len();
        check_supported(n)?;
        let mut seen = vec![false; n];
        let mut raw = Vec::with_capacity(n);
        for &image in images {
            if image == 0 || image > n {
                return Err(ModelError::InvalidPermutation {
                    n,
                    detail: format!("image {image} out of range"),
                });
            }
            if std::mem::replace(&mut seen[image - 1], true) {
                return Err(ModelError::InvalidPermutation {
                    n,
                    detail: format!("image {image} repeated"),
                });
            }
            raw.push((image - 1) as u8);
        }
        Ok(Self { images: raw })
    }

    /// The identity of `Σ_n`.
    ///
    /// Panics if `n` is zero or exceeds [`MAX_DEGREE`].
    pub fn identity(n: usize) -> Self {
        assert!((1..=MAX_DEGREE).contains(&n), "unsupported degree {n}");
        Self {
            images: (0..n as u8).collect(),
        }
    }

    /// Builds a permutation of degree `n` from disjoint cycles of 1-based points.
    pub fn from_cycles<C: AsRef<[usize]>>(n: usize, cycles: &[C]) -> Result<Self> {
        check_supported(n)?;
        let mut images: Vec<usize> = (1..=n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for (pos, &point) in cycle.iter().enumerate() {
                if point == 0 || point > n {
                    return Err(ModelError::InvalidPermutation {
                        n,
                        detail: format!("point {point} out of range"),
                    });
                }
                if std::mem::replace(&mut touched[point - 1], true) {
                    return Err(ModelError::InvalidPermutation {
                        n,
                        detail: format!("point {point} appears in more than one place"),
                    });
                }
                images[point - 1] = cycle[(pos + 1) % cycle.len()];
            }
        }
        Self::new(&images)
    }

    /// The transposition `(a b)` in `Σ_n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(ModelError::InvalidPermutation {
                n,
                detail: format!("transposition ({a} {b}) has a repeated point"),
            });
        }
        Self::from_cycles(n, &[[a, b]])
    }

    /// Parses cycle notation such as `"(1 3 2)(4 5)"` or `"()"`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        Self::from_cycles(n, &parse_cycle_notation(text)?)
    }

    /// A uniformly random element of `Σ_n`.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut perm = Self::identity(n);
        perm.images.shuffle(rng);
        perm
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `σ(i)` for a 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    #[inline]
    pub(crate) fn apply0(&self, i: u8) -> u8 {
        self.images[i as usize]
    }

    /// The 1-based image table.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    pub fn is_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| self.images[x as usize] as usize == i)
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        check_degree(self.degree(), other.degree())?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        Self {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u8; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u8;
        }
        Self { images }
    }

    /// `self · other · self⁻¹` as a permutation.
    pub fn conjugate_permutation(&self, other: &Self) -> Result<Self> {
        check_degree(self.degree(), other.degree())?;
        let mut images = vec![0u8; self.images.len()];
        for (i, &x) in other.images.iter().enumerate() {
            images[self.images[i] as usize] = self.images[x as usize];
        }
        Ok(Self { images })
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.degree() == other.degree()
            && self.compose_unchecked(other) == other.compose_unchecked(self)
    }

    /// Non-trivial cycles, each starting at its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut at = start;
            while !seen[at] {
                seen[at] = true;
                cycle.push(at + 1);
                at = self.images[at] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths including fixed points, as a partition of the degree.
    pub fn cycle_type(&self) -> IntPartition {
        let mut seen = vec![false; self.images.len()];
        let mut parts = Vec::new();
        for start in 0..self.images.len() {
            let mut len = 0;
            let mut at = start;
            while !seen[at] {
                seen[at] = true;
                len += 1;
                at = self.images[at] as usize;
            }
            if len > 0 {
                parts.push(len);
            }
        }
        IntPartition::new(parts)
    }

    /// All of `Σ_n` in lexicographic order of image tables.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: Some(Self::identity(n)),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_cycles(f, self.cycles().iter().map(|c| c.as_slice()))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

/// Iterator over `Σ_n` in lexicographic order.
pub struct AllPermutations {
    next: Option<Permutation>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let a = &current.images;
        if let Some(i) = (0..a.len().saturating_sub(1))
            .rev()
            .find(|&i| a[i] < a[i + 1])
        {
            let mut succ = a.clone();
            let k = (i + 1..a.len()).rev().find(|&k| a[k] > a[i]).unwrap();
            succ.swap(i, k);
            succ[i + 1..].reverse();
            self.next = Some(Permutation { images: succ });
        }
        Some(current)
    }
}

/// An involution of `[n]` held as its canonical list of disjoint
/// transpositions `(a_1 b_1)(a_2 b_2)⋯` with `a_k < b_k` and `a_1 < a_2 < ⋯`.
///
/// The derived ordering compares degree and then the canonical pair list
/// lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Involution {
    n: u8,
    pairs: Vec<(u8, u8)>,
}

impl Involution {
    /// Builds an involution from 1-based transpositions in any order or orientation.
    pub fn new(n: usize, transpositions: &[(usize, usize)]) -> Result<Self> {
        check_supported(n)?;
        let mut used = vec![false; n];
        let mut pairs = Vec::with_capacity(transpositions.len());
        for &(a, b) in transpositions {
            for p in [a, b] {
                if p == 0 || p > n {
                    return Err(ModelError::InvalidPermutation {
                        n,
                        detail: format!("point {p} out of range"),
                    });
                }
                if std::mem::replace(&mut used[p - 1], true) {
                    return Err(ModelError::InvalidPermutation {
                        n,
                        detail: format!("point {p} appears in more than one transposition"),
                    });
                }
            }
            pairs.push(((a.min(b) - 1) as u8, (a.max(b) - 1) as u8));
        }
        pairs.sort_unstable();
        Ok(Self { n: n as u8, pairs })
    }

    pub(crate) fn from_raw_sorted(n: usize, pairs: Vec<(u8, u8)>) -> Self {
        debug_assert!(pairs.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(pairs.iter().all(|&(a, b)| a < b));
        Self { n: n as u8, pairs }
    }

    /// The identity `1_G`, the unique involution of length zero.
    pub fn identity(n: usize) -> Self {
        assert!((1..=MAX_DEGREE).contains(&n), "unsupported degree {n}");
        Self {
            n: n as u8,
            pairs: Vec::new(),
        }
    }

    pub fn from_permutation(perm: &Permutation) -> Result<Self> {
        if !perm.is_involution() {
            return Err(ModelError::NotAnInvolution);
        }
        let pairs = perm
            .images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i < x as usize)
            .map(|(i, &x)| (i as u8, x))
            .collect();
        Ok(Self {
            n: perm.degree() as u8,
            pairs,
        })
    }

    /// Parses cycle notation whose cycles all have length two (or `"()"`).
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let cycles = parse_cycle_notation(text)?;
        let mut pairs = Vec::with_capacity(cycles.len());
        for cycle in cycles {
            match cycle.as_slice() {
                [a, b] => pairs.push((*a, *b)),
                [_] => {}
                _ => return Err(ModelError::NotAnInvolution),
            }
        }
        Self::new(n, &pairs)
    }

    pub fn degree(&self) -> usize {
        self.n as usize
    }

    /// `ℓ(τ)`: the number of disjoint transpositions.
    pub fn length(&self) -> usize {
        self.pairs.len()
    }

    /// Canonical 1-based transpositions.
    pub fn transpositions(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.pairs
            .iter()
            .map(|&(a, b)| (a as usize + 1, b as usize + 1))
    }

    #[inline]
    pub(crate) fn raw_pairs(&self) -> &[(u8, u8)] {
        &self.pairs
    }

    /// The image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        let p = (i - 1) as u8;
        for &(a, b) in &self.pairs {
            if a == p {
                return b as usize + 1;
            }
            if b == p {
                return a as usize + 1;
            }
        }
        i
    }

    pub fn to_permutation(&self) -> Permutation {
        let mut images: Vec<u8> = (0..self.n).collect();
        for &(a, b) in &self.pairs {
            images[a as usize] = b;
            images[b as usize] = a;
        }
        Permutation { images }
    }

    /// `στσ⁻¹` in canonical form.
    pub fn conjugate_by(&self, sigma: &Permutation) -> Result<Self> {
        check_degree(sigma.degree(), self.degree())?;
        Ok(self.conjugate_unchecked(sigma))
    }

    pub(crate) fn conjugate_unchecked(&self, sigma: &Permutation) -> Self {
        let mut pairs: Vec<(u8, u8)> = self
            .pairs
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (sigma.apply0(a), sigma.apply0(b));
                if x < y {
                    (x, y)
                } else {
                    (y, x)
                }
            })
            .collect();
        pairs.sort_unstable();
        Self { n: self.n, pairs }
    }

    /// Whether two involutions share no moved point.
    pub fn is_disjoint_from(&self, other: &Self) -> bool {
        let mut moved = 0u64;
        for &(a, b) in &self.pairs {
            moved |= (1 << a) | (1 << b);
        }
        other
            .pairs
            .iter()
            .all(|&(a, b)| moved & ((1 << a) | (1 << b)) == 0)
    }

    /// The involution whose transpositions are those of both factors, if the
    /// factors are disjoint.
    pub fn disjoint_union(&self, other: &Self) -> Option<Self> {
        if self.n != other.n || !self.is_disjoint_from(other) {
            return None;
        }
        let mut pairs = self.pairs.clone();
        pairs.extend_from_slice(&other.pairs);
        pairs.sort_unstable();
        Some(Self { n: self.n, pairs })
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<[usize; 2]> = self.transpositions().map(|(a, b)| [a, b]).collect();
        write_cycles(f, cycles.iter().map(|c| c.as_slice()))
    }
}

impl fmt::Debug for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Involution[{}]{}", self.n, self)
    }
}

impl From<&Involution> for Permutation {
    fn from(tau: &Involution) -> Self {
        tau.to_permutation()
    }
}

/// `στσ⁻¹` in canonical form.
pub fn conjugate(sigma: &Permutation, tau: &Involution) -> Result<Involution> {
    tau.conjugate_by(sigma)
}

/// `|X_j| = n! / (2^j · j! · (n − 2j)!)`.
pub fn involution_count(n: usize, j: usize) -> u64 {
    if 2 * j > n {
        return 0;
    }
    // Choose the 2j points, then count perfect matchings on them.
    let mut choose = 1u64;
    for i in 0..2 * j as u64 {
        choose = choose * (n as u64 - i) / (i + 1);
    }
    let matchings: u64 = (1..=j as u64).map(|k| 2 * k - 1).product();
    choose * matchings
}

/// All involutions of length exactly `j`, in lexicographic order of the
/// canonical transposition list.
pub fn enumerate_involutions(n: usize, j: usize) -> Result<Vec<Involution>> {
    check_supported(n)?;
    if 2 * j > n {
        return Err(ModelError::LengthOutOfRange { n, j });
    }
    let mut out = Vec::with_capacity(involution_count(n, j) as usize);
    let mut used = vec![false; n];
    let mut pairs = Vec::with_capacity(j);
    extend_matchings(n, j, 0, &mut used, &mut pairs, &mut out);
    Ok(out)
}

fn extend_matchings(
    n: usize,
    j: usize,
    min_first: usize,
    used: &mut [bool],
    pairs: &mut Vec<(u8, u8)>,
    out: &mut Vec<Involution>,
) {
    if pairs.len() == j {
        out.push(Involution::from_raw_sorted(n, pairs.clone()));
        return;
    }
    let remaining = j - pairs.len();
    for a in min_first..n {
        if used[a] {
            continue;
        }
        // Not enough free points left after `a` to finish.
        if used[a..].iter().filter(|u| !**u).count() < 2 * remaining {
            break;
        }
        used[a] = true;
        for b in a + 1..n {
            if used[b] {
                continue;
            }
            used[b] = true;
            pairs.push((a as u8, b as u8));
            extend_matchings(n, j, a + 1, used, pairs, out);
            pairs.pop();
            used[b] = false;
        }
        used[a] = false;
    }
}

/// The basis `X_j` of `V_j` with a reverse index.
#[derive(Clone, Debug)]
pub struct InvolutionBasis {
    n: usize,
    j: usize,
    elements: Vec<Involution>,
    index: HashMap<Involution, usize>,
}

impl InvolutionBasis {
    pub fn new(n: usize, j: usize) -> Result<Arc<Self>> {
        let elements = enumerate_involutions(n, j)?;
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, tau)| (tau.clone(), i))
            .collect();
        Ok(Arc::new(Self {
            n,
            j,
            elements,
            index,
        }))
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn length(&self) -> usize {
        self.j
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, i: usize) -> &Involution {
        &self.elements[i]
    }

    pub fn index_of(&self, tau: &Involution) -> Option<usize> {
        self.index.get(tau).copied()
    }

    pub fn elements(&self) -> &[Involution] {
        &self.elements
    }
}

/// Every `σ ∈ Σ_n` commuting with both `τ` and `κ`, by exhaustive scan.
///
/// Intended as an oracle for `n ≤ 8`.
pub fn centralizer_pair(tau: &Involution, kappa: &Involution) -> Result<Vec<Permutation>> {
    check_degree(tau.degree(), kappa.degree())?;
    Ok(Permutation::all(tau.degree())
        .filter(|s| tau.conjugate_unchecked(s) == *tau && kappa.conjugate_unchecked(s) == *kappa)
        .collect())
}

fn write_cycles<'a>(
    f: &mut fmt::Formatter<'_>,
    cycles: impl Iterator<Item = &'a [usize]>,
) -> fmt::Result {
    let mut any = false;
    for cycle in cycles {
        any = true;
        f.write_str("(")?;
        for (i, p) in cycle.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")?;
    }
    if !any {
        f.write_str("()")?;
    }
    Ok(())
}

/// Splits cycle notation into its cycles. Whitespace (and commas) inside and
/// between cycles is ignored; `"()"` and the empty string denote the identity.
pub fn parse_cycle_notation(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(ModelError::Parse(format!("expected '(' at {rest:?}")));
        };
        let Some(close) = body.find(')') else {
            return Err(ModelError::Parse(format!("unclosed cycle in {text:?}")));
        };
        let points = body[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| ModelError::Parse(format!("bad point {s:?} in {text:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if !points.is_empty() {
            cycles.push(points);
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}
