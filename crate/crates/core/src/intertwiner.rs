//! `Hom_G(V_j, V_k)` from the matrix-entry equations
//! `S(σ,κ)·T[τ,κ] = S(σ,τ)·T[στσ⁻¹, σκσ⁻¹]`.
//!
//! The equations tie each entry to the entries on its simultaneous
//! conjugation orbit with a definite relative sign. An orbit carries a free
//! parameter exactly when the signs propagated along generator steps never
//! disagree; otherwise every entry on it vanishes.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{check_degree, ModelError, Result};
use crate::linalg::SparseKernel;
use crate::pairs::characteristic_partition;
use crate::perm::{Involution, InvolutionBasis, Permutation};
use crate::scalar::{ExactScalar, Scalar};
use crate::sign::{ModelVector, Sign, SignedBasisMap};

/// Adjacent transpositions `s_i = (i, i+1)`, `1 ≤ i < n`.
pub fn adjacent_transpositions(n: usize) -> Vec<Permutation> {
    (1..n)
        .map(|i| Permutation::transposition(n, i, i + 1).expect("valid transposition"))
        .collect()
}

/// One simultaneous-conjugation orbit in `X_j × X_k` with signs relative to
/// its representative. Members are `(source index, target index)` pairs into
/// the atlas bases.
#[derive(Clone, Debug)]
pub struct SignedOrbit {
    pub representative: (Involution, Involution),
    pub members: Vec<((usize, usize), Sign)>,
    pub consistent: bool,
}

impl SignedOrbit {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Orbit data without the member list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSummary {
    pub representative: (Involution, Involution),
    pub size: usize,
    pub consistent: bool,
}

impl OrbitSummary {
    pub fn to_json(&self) -> OrbitJson {
        let (tau, kappa) = &self.representative;
        let numerical = characteristic_partition(tau, kappa)
            .expect("representatives share a degree")
            .numerical();
        OrbitJson {
            representative: [tau.to_string(), kappa.to_string()],
            size: self.size,
            consistent: self.consistent,
            numerical_partition: numerical.parts().to_vec(),
        }
    }
}

/// One entry of the orbit atlas JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitJson {
    pub representative: [String; 2],
    pub size: usize,
    pub consistent: bool,
    pub numerical_partition: Vec<usize>,
}

/// The orbits of `X_j × X_k` together with the two bases.
#[derive(Clone, Debug)]
pub struct OrbitAtlas {
    pub source: Arc<InvolutionBasis>,
    pub target: Arc<InvolutionBasis>,
    pub orbits: Vec<SignedOrbit>,
}

impl OrbitAtlas {
    pub fn summaries(&self) -> Vec<OrbitSummary> {
        self.orbits
            .iter()
            .map(|o| OrbitSummary {
                representative: o.representative.clone(),
                size: o.len(),
                consistent: o.consistent,
            })
            .collect()
    }
}

fn bases(n: usize, j: usize, k: usize) -> Result<(Arc<InvolutionBasis>, Arc<InvolutionBasis>)> {
    let source = InvolutionBasis::new(n, j)?;
    let target = if j == k {
        Arc::clone(&source)
    } else {
        InvolutionBasis::new(n, k)?
    };
    Ok((source, target))
}

/// Breadth-first closure of every pair under the adjacent transpositions,
/// scanning pairs in lexicographic order so each orbit's first pair is its
/// least element. Calls `on_orbit` with the representative, the member
/// list (if `keep_members`), the orbit size and consistency.
fn scan_orbits(
    source: &Arc<InvolutionBasis>,
    target: &Arc<InvolutionBasis>,
    keep_members: bool,
    mut on_orbit: impl FnMut((usize, usize), Vec<((usize, usize), Sign)>, usize, bool),
) {
    let n = source.degree();
    let gens: Vec<(SignedBasisMap, SignedBasisMap)> = adjacent_transpositions(n)
        .iter()
        .map(|s| {
            (
                SignedBasisMap::new(s, source).expect("same degree"),
                SignedBasisMap::new(s, target).expect("same degree"),
            )
        })
        .collect();
    let width = target.len();
    // 0: unvisited, otherwise the relative sign as ±1.
    let mut mark = vec![0i8; source.len() * width];
    let mut queue: Vec<usize> = Vec::new();
    for start in 0..mark.len() {
        if mark[start] != 0 {
            continue;
        }
        mark[start] = 1;
        queue.clear();
        queue.push(start);
        let mut head = 0;
        let mut consistent = true;
        while head < queue.len() {
            let at = queue[head];
            head += 1;
            let (a, b) = (at / width, at % width);
            let here = mark[at];
            for (gs, gt) in &gens {
                let (a2, sa) = gs.image_of_index(a);
                let (b2, sb) = gt.image_of_index(b);
                // T[gτ, gκ] = S(g,τ)·S(g,κ)·T[τ, κ].
                let rel = if (sa * sb).is_minus() { -here } else { here };
                let to = a2 * width + b2;
                match mark[to] {
                    0 => {
                        mark[to] = rel;
                        queue.push(to);
                    }
                    seen if seen != rel => consistent = false,
                    _ => {}
                }
            }
        }
        let members = if keep_members {
            queue
                .iter()
                .map(|&p| {
                    let sign = if mark[p] > 0 { Sign::Plus } else { Sign::Minus };
                    ((p / width, p % width), sign)
                })
                .collect()
        } else {
            Vec::new()
        };
        on_orbit(
            (start / width, start % width),
            members,
            queue.len(),
            consistent,
        );
    }
}

/// All signed orbits of `X_j × X_k`, with members.
pub fn enumerate_signed_orbits(n: usize, j: usize, k: usize) -> Result<OrbitAtlas> {
    let (source, target) = bases(n, j, k)?;
    let mut orbits = Vec::new();
    scan_orbits(&source, &target, true, |(a, b), members, _, consistent| {
        orbits.push(SignedOrbit {
            representative: (source.get(a).clone(), target.get(b).clone()),
            members,
            consistent,
        });
    });
    Ok(OrbitAtlas {
        source,
        target,
        orbits,
    })
}

/// Orbits of `X_j × X_k` without member lists; suitable for larger `n`.
pub fn orbit_summaries(n: usize, j: usize, k: usize) -> Result<Vec<OrbitSummary>> {
    let (source, target) = bases(n, j, k)?;
    let mut out = Vec::new();
    scan_orbits(&source, &target, false, |(a, b), _, size, consistent| {
        out.push(OrbitSummary {
            representative: (source.get(a).clone(), target.get(b).clone()),
            size,
            consistent,
        });
    });
    Ok(out)
}

/// `dim End_G(V_j)`: the number of consistent orbits in `X_j × X_j`.
pub fn end_dimension(n: usize, j: usize) -> Result<usize> {
    hom_dimension(n, j, j)
}

/// `dim Hom_G(V_j, V_k)`: the number of consistent orbits in `X_j × X_k`.
pub fn hom_dimension(n: usize, j: usize, k: usize) -> Result<usize> {
    Ok(orbit_summaries(n, j, k)?
        .iter()
        .filter(|o| o.consistent)
        .count())
}

/// A linear map `V_j → V_k` stored by its entries `T[τ, κ]`, the coefficient
/// of `κ` in `T(τ)`.
#[derive(Clone, Debug)]
pub struct IntertwinerMatrix<T> {
    source: Arc<InvolutionBasis>,
    target: Arc<InvolutionBasis>,
    entries: BTreeMap<(usize, usize), T>,
}

impl<T: Scalar> IntertwinerMatrix<T> {
    pub fn zero(source: &Arc<InvolutionBasis>, target: &Arc<InvolutionBasis>) -> Result<Self> {
        check_degree(source.degree(), target.degree())?;
        Ok(Self {
            source: Arc::clone(source),
            target: Arc::clone(target),
            entries: BTreeMap::new(),
        })
    }

    pub fn identity(basis: &Arc<InvolutionBasis>) -> Self {
        Self {
            source: Arc::clone(basis),
            target: Arc::clone(basis),
            entries: (0..basis.len()).map(|i| ((i, i), T::one())).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.source.degree()
    }

    /// `(j, k)` for a map `V_j → V_k`.
    pub fn lengths(&self) -> (usize, usize) {
        (self.source.length(), self.target.length())
    }

    pub fn source(&self) -> &Arc<InvolutionBasis> {
        &self.source
    }

    pub fn target(&self) -> &Arc<InvolutionBasis> {
        &self.target
    }

    pub fn entry(&self, tau: &Involution, kappa: &Involution) -> T {
        match (self.source.index_of(tau), self.target.index_of(kappa)) {
            (Some(a), Some(b)) => self.entry_at(a, b),
            _ => T::zero(),
        }
    }

    pub fn entry_at(&self, a: usize, b: usize) -> T {
        self.entries.get(&(a, b)).cloned().unwrap_or_else(T::zero)
    }

    pub fn set(&mut self, tau: &Involution, kappa: &Involution, value: T) -> Result<()> {
        let a = self
            .source
            .index_of(tau)
            .ok_or_else(|| out_of_basis(&self.source, tau))?;
        let b = self
            .target
            .index_of(kappa)
            .ok_or_else(|| out_of_basis(&self.target, kappa))?;
        self.set_at(a, b, value);
        Ok(())
    }

    fn set_at(&mut self, a: usize, b: usize, value: T) {
        if value.is_zero() {
            self.entries.remove(&(a, b));
        } else {
            self.entries.insert((a, b), value);
        }
    }

    /// Non-zero entries as `((source index, target index), value)`.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = ((usize, usize), &T)> {
        self.entries.iter().map(|(&k, v)| (k, v))
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.len()
    }

    /// For an endomorphism, whether `T[τ, τ′] = T[τ′, τ]` for all pairs.
    pub fn is_symmetric(&self) -> bool {
        self.source.length() == self.target.length()
            && self
                .entries
                .iter()
                .all(|(&(a, b), v)| self.entries.get(&(b, a)) == Some(v))
    }

    /// The composite `self ∘ first`, where `first: V_i → V_j` and `self: V_j → V_k`.
    pub fn after(&self, first: &Self) -> Result<Self> {
        check_degree(self.degree(), first.degree())?;
        if self.source.length() != first.target.length() {
            return Err(ModelError::LengthOutOfRange {
                n: self.degree(),
                j: first.target.length(),
            });
        }
        let mut out = Self::zero(&first.source, &self.target)?;
        let mut acc: BTreeMap<(usize, usize), T> = BTreeMap::new();
        for (&(a, mid), x) in &first.entries {
            for (&(_, c), y) in self.entries.range((mid, 0)..=(mid, usize::MAX)) {
                let slot = acc.entry((a, c)).or_insert_with(T::zero);
                *slot = slot.clone() + x.clone() * y.clone();
            }
        }
        for ((a, c), v) in acc {
            out.set_at(a, c, v);
        }
        Ok(out)
    }

    /// `T(v)` for `v` in `V_j`. Components of `v` outside `V_j` are rejected.
    pub fn apply(&self, v: &ModelVector<T>) -> Result<ModelVector<T>> {
        check_degree(self.degree(), v.degree())?;
        let mut terms = Vec::new();
        for (tau, c) in v.terms() {
            let a = self
                .source
                .index_of(tau)
                .ok_or_else(|| out_of_basis(&self.source, tau))?;
            for (&(_, b), t) in self.entries.range((a, 0)..=(a, usize::MAX)) {
                terms.push((self.target.get(b).clone(), t.clone() * c.clone()));
            }
        }
        ModelVector::from_terms(self.degree(), terms)
    }

    /// Whether the defining equation holds for `σ`. Checking the support
    /// suffices: it must map into itself, and simultaneous conjugation is
    /// injective on pairs.
    pub fn satisfies_equation(&self, sigma: &Permutation) -> bool {
        let (Ok(src), Ok(tgt)) = (
            SignedBasisMap::new(sigma, &self.source),
            SignedBasisMap::new(sigma, &self.target),
        ) else {
            return false;
        };
        self.entries.iter().all(|(&(a, b), v)| {
            let (a2, sa) = src.image_of_index(a);
            let (b2, sb) = tgt.image_of_index(b);
            self.entry_at(a2, b2) == (sa * sb).apply(v.clone())
        })
    }
}

impl<T: Scalar> PartialEq for IntertwinerMatrix<T> {
    fn eq(&self, other: &Self) -> bool {
        self.lengths() == other.lengths()
            && self.degree() == other.degree()
            && self.entries == other.entries
    }
}

fn out_of_basis(basis: &InvolutionBasis, tau: &Involution) -> ModelError {
    ModelError::Parse(format!(
        "{tau} is not an involution of length {} in degree {}",
        basis.length(),
        basis.degree()
    ))
}

/// A basis of `Hom_G(V_j, V_k)`: one matrix per consistent orbit, carrying
/// the propagated signs with `+1` at the representative.
pub fn hom_basis<T: Scalar>(n: usize, j: usize, k: usize) -> Result<Vec<IntertwinerMatrix<T>>> {
    let atlas = enumerate_signed_orbits(n, j, k)?;
    let mut out = Vec::new();
    for orbit in atlas.orbits.iter().filter(|o| o.consistent) {
        let mut m = IntertwinerMatrix::zero(&atlas.source, &atlas.target)?;
        for &((a, b), s) in &orbit.members {
            m.set_at(a, b, s.apply(T::one()));
        }
        out.push(m);
    }
    Ok(out)
}

/// Checks the defining equation for every adjacent transposition and for
/// 100 random group elements.
pub fn verify_equivariance<T: Scalar, R: Rng + ?Sized>(
    m: &IntertwinerMatrix<T>,
    rng: &mut R,
) -> bool {
    let n = m.degree();
    adjacent_transpositions(n)
        .iter()
        .all(|s| m.satisfies_equation(s))
        && (0..100).all(|_| m.satisfies_equation(&Permutation::random(n, rng)))
}

/// `dim Hom_G(V_j, V_k)` as the nullity of the full equation system over
/// every `σ ∈ Σ_n`, one unknown per matrix entry. Exhaustive in `n!`; meant
/// as an independent check for small `n`.
pub fn hom_dimension_by_linear_system<T: ExactScalar>(
    n: usize,
    j: usize,
    k: usize,
) -> Result<usize> {
    let (source, target) = bases(n, j, k)?;
    let width = target.len();
    let mut system = SparseKernel::<T>::new(source.len() * width);
    for sigma in Permutation::all(n) {
        let src = SignedBasisMap::new(&sigma, &source)?;
        let tgt = SignedBasisMap::new(&sigma, &target)?;
        for a in 0..source.len() {
            let (a2, sa) = src.image_of_index(a);
            for b in 0..width {
                let (b2, sb) = tgt.image_of_index(b);
                // S(σ,κ)·x[τ,κ] − S(σ,τ)·x[στσ⁻¹, σκσ⁻¹] = 0
                system.add_equation([
                    (a * width + b, sb.apply(T::one())),
                    (a2 * width + b2, -sa.apply(T::one())),
                ]);
            }
        }
    }
    Ok(system.nullity())
}
