//! The sign cocycle `S(σ, τ)`, the signed conjugation representations
//! `π_j` on `V_j = span(X_j)`, and the algebra structure on `A = ⊕_j V_j`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{check_degree, ModelError, Result};
use crate::perm::{Involution, InvolutionBasis, Permutation};
use crate::scalar::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Self {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    /// `c` or `-c`.
    pub fn apply<T: Scalar>(self, c: T) -> T {
        match self {
            Sign::Plus => c,
            Sign::Minus => -c,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self != rhs)
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// `S(σ, τ) = (−1)^c` where `c` counts canonical transpositions `(a b)`,
/// `a < b`, of `τ` with `σ(a) > σ(b)`.
pub fn sign(sigma: &Permutation, tau: &Involution) -> Result<Sign> {
    check_degree(sigma.degree(), tau.degree())?;
    Ok(sign_unchecked(sigma, tau))
}

#[inline]
pub(crate) fn sign_unchecked(sigma: &Permutation, tau: &Involution) -> Sign {
    let inverted = tau
        .raw_pairs()
        .iter()
        .filter(|&&(a, b)| sigma.apply0(a) > sigma.apply0(b))
        .count();
    Sign::from_parity(inverted % 2 == 1)
}

/// Whether `S(σ′σ, τ) = S(σ′, στσ⁻¹) · S(σ, τ)` holds for `σ′ = outer`, `σ = inner`.
pub fn cocycle_check(outer: &Permutation, inner: &Permutation, tau: &Involution) -> Result<bool> {
    check_degree(outer.degree(), inner.degree())?;
    check_degree(inner.degree(), tau.degree())?;
    let product = outer.compose_unchecked(inner);
    let moved = tau.conjugate_unchecked(inner);
    Ok(sign_unchecked(&product, tau) == sign_unchecked(outer, &moved) * sign_unchecked(inner, tau))
}

/// The matrix of `π_j(σ)`: one signed entry per basis element, `τ ↦ S(σ,τ)·στσ⁻¹`.
#[derive(Clone, Debug)]
pub struct SignedBasisMap {
    sigma: Permutation,
    basis: Arc<InvolutionBasis>,
    images: Vec<(u32, Sign)>,
}

impl SignedBasisMap {
    pub fn new(sigma: &Permutation, basis: &Arc<InvolutionBasis>) -> Result<Self> {
        check_degree(sigma.degree(), basis.degree())?;
        let images = basis
            .elements()
            .iter()
            .map(|tau| {
                let image = tau.conjugate_unchecked(sigma);
                let idx = basis
                    .index_of(&image)
                    .expect("conjugation preserves the class of an involution");
                (idx as u32, sign_unchecked(sigma, tau))
            })
            .collect();
        Ok(Self {
            sigma: sigma.clone(),
            basis: Arc::clone(basis),
            images,
        })
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn basis(&self) -> &Arc<InvolutionBasis> {
        &self.basis
    }

    /// Target index and sign for the basis element at `index`.
    #[inline]
    pub fn image_of_index(&self, index: usize) -> (usize, Sign) {
        let (target, s) = self.images[index];
        (target as usize, s)
    }

    /// `(στσ⁻¹, S(σ, τ))`, or `None` if `τ` is not in the basis.
    pub fn apply(&self, tau: &Involution) -> Option<(&Involution, Sign)> {
        let (target, s) = self.image_of_index(self.basis.index_of(tau)?);
        Some((self.basis.get(target), s))
    }

    /// The matrix product `self · first`, i.e. the map of `σ_self ∘ σ_first`.
    pub fn after(&self, first: &Self) -> Result<Self> {
        check_degree(self.basis.degree(), first.basis.degree())?;
        if self.basis.length() != first.basis.length() {
            return Err(ModelError::LengthOutOfRange {
                n: self.basis.degree(),
                j: first.basis.length(),
            });
        }
        let images = first
            .images
            .iter()
            .map(|&(mid, s1)| {
                let (target, s2) = self.images[mid as usize];
                (target, s2 * s1)
            })
            .collect();
        Ok(Self {
            sigma: self.sigma.compose_unchecked(&first.sigma),
            basis: Arc::clone(&self.basis),
            images,
        })
    }

    /// Whether the target component is a bijection of `X_j`.
    pub fn is_signed_permutation(&self) -> bool {
        let mut hit = vec![false; self.images.len()];
        for &(t, _) in &self.images {
            if std::mem::replace(&mut hit[t as usize], true) {
                return false;
            }
        }
        true
    }

    /// Trace of the matrix: signs at the fixed points of conjugation.
    pub fn trace(&self) -> i64 {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, (t, _))| *i == *t as usize)
            .map(|(_, (_, s))| s.value())
            .sum()
    }
}

/// Two maps are equal when they have the same matrix, whatever their defining elements.
impl PartialEq for SignedBasisMap {
    fn eq(&self, other: &Self) -> bool {
        self.basis.degree() == other.basis.degree()
            && self.basis.length() == other.basis.length()
            && self.images == other.images
    }
}

impl Eq for SignedBasisMap {}

/// `Σ_{τ ∈ X_j, στσ⁻¹ = τ} S(σ, τ)`: the value of the character of `V_j` at `σ`.
pub fn character_of_vj(n: usize, j: usize, class_rep: &Permutation) -> Result<i64> {
    check_degree(n, class_rep.degree())?;
    let basis = InvolutionBasis::new(n, j)?;
    Ok(character_on_basis(&basis, class_rep))
}

pub(crate) fn character_on_basis(basis: &InvolutionBasis, sigma: &Permutation) -> i64 {
    basis
        .elements()
        .iter()
        .filter(|tau| tau.conjugate_unchecked(sigma) == **tau)
        .map(|tau| sign_unchecked(sigma, tau).value())
        .sum()
}

/// A finitely supported combination of involutions of a fixed degree: an
/// element of `A = ⊕_j V_j`.
#[derive(Clone, PartialEq, Eq)]
pub struct ModelVector<T> {
    n: usize,
    coefficients: BTreeMap<Involution, T>,
}

impl<T: Scalar> ModelVector<T> {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            coefficients: BTreeMap::new(),
        }
    }

    /// The algebra unit `1_G`.
    pub fn one(n: usize) -> Self {
        Self::basis(Involution::identity(n))
    }

    pub fn basis(tau: Involution) -> Self {
        let n = tau.degree();
        let mut coefficients = BTreeMap::new();
        coefficients.insert(tau, T::one());
        Self { n, coefficients }
    }

    /// Sums the given terms, dropping zeros.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Involution, T)>) -> Result<Self> {
        let mut v = Self::zero(n);
        for (tau, c) in terms {
            check_degree(n, tau.degree())?;
            v.add_term(tau, c);
        }
        Ok(v)
    }

    fn add_term(&mut self, tau: Involution, c: T) {
        if c.is_zero() {
            return;
        }
        match self.coefficients.entry(tau) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get().clone() + c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn coefficient(&self, tau: &Involution) -> T {
        self.coefficients.get(tau).cloned().unwrap_or_else(T::zero)
    }

    /// Non-zero terms in increasing involution order.
    pub fn terms(&self) -> impl Iterator<Item = (&Involution, &T)> {
        self.coefficients.iter()
    }

    pub fn support_len(&self) -> usize {
        self.coefficients.len()
    }

    /// The component in `V_j`.
    pub fn component(&self, j: usize) -> Self {
        Self {
            n: self.n,
            coefficients: self
                .coefficients
                .iter()
                .filter(|(tau, _)| tau.length() == j)
                .map(|(tau, c)| (tau.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_degree(self.n, other.n)?;
        let mut out = self.clone();
        for (tau, c) in other.terms() {
            out.add_term(tau.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero(self.n);
        for (tau, x) in self.terms() {
            out.add_term(tau.clone(), x.clone() * c.clone());
        }
        out
    }
}

/// `π(σ) v`, the linear extension of `τ ↦ S(σ,τ)·στσ⁻¹`.
pub fn act<T: Scalar>(sigma: &Permutation, v: &ModelVector<T>) -> Result<ModelVector<T>> {
    check_degree(sigma.degree(), v.n)?;
    let mut out = ModelVector::zero(v.n);
    for (tau, c) in v.terms() {
        let s = sign_unchecked(sigma, tau);
        out.add_term(tau.conjugate_unchecked(sigma), s.apply(c.clone()));
    }
    Ok(out)
}

/// Product in `A`: `τ·κ` is the involution with the transpositions of both
/// when their supports are disjoint, and zero otherwise.
pub fn model_product<T: Scalar>(a: &ModelVector<T>, b: &ModelVector<T>) -> Result<ModelVector<T>> {
    check_degree(a.n, b.n)?;
    let mut out = ModelVector::zero(a.n);
    for (tau, x) in a.terms() {
        for (kappa, y) in b.terms() {
            if let Some(prod) = tau.disjoint_union(kappa) {
                out.add_term(prod, x.clone() * y.clone());
            }
        }
    }
    Ok(out)
}

/// Text form: `"+1·(1 2)(3 4) −2·(1 3)"`, or `"0"` for the zero vector.
impl<T: Scalar + fmt::Display> fmt::Display for ModelVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (tau, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let mark = if c.is_negative() { '\u{2212}' } else { '+' };
            write!(f, "{mark}{}\u{b7}{tau}", c.abs())?;
        }
        Ok(())
    }
}

impl<T: Scalar + fmt::Display> fmt::Debug for ModelVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModelVector[{}]({self})", self.n)
    }
}

impl<T: Scalar + FromStr> ModelVector<T> {
    /// Parses the text form. Accepts `-` or `−` for minus, `·` or `*` as the
    /// coefficient separator, and omitted unit coefficients.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let text = text.trim();
        let mut v = Self::zero(n);
        if text == "0" {
            return Ok(v);
        }
        let mut rest = text;
        while !rest.is_empty() {
            let (negative, after_sign) = match rest.chars().next() {
                Some('+') => (false, &rest[1..]),
                Some('-') => (true, &rest[1..]),
                Some('\u{2212}') => (true, &rest['\u{2212}'.len_utf8()..]),
                _ if rest.starts_with('(') || rest.starts_with(|c: char| c.is_ascii_digit()) => {
                    (false, rest)
                }
                _ => return Err(ModelError::Parse(format!("unexpected input at {rest:?}"))),
            };
            let after_sign = after_sign.trim_start();
            let open = after_sign
                .find('(')
                .ok_or_else(|| ModelError::Parse(format!("missing involution in {rest:?}")))?;
            let coeff_text = after_sign[..open]
                .trim()
                .trim_end_matches(['\u{b7}', '*'])
                .trim();
            let coeff = if coeff_text.is_empty() {
                T::one()
            } else {
                coeff_text
                    .parse::<T>()
                    .map_err(|_| ModelError::Parse(format!("bad coefficient {coeff_text:?}")))?
            };
            let cycles = &after_sign[open..];
            // The involution runs until the first character that is not part of cycle notation.
            let end = cycles
                .char_indices()
                .find(|&(_, c)| matches!(c, '+' | '-' | '\u{2212}'))
                .map_or(cycles.len(), |(i, _)| i);
            let tau = Involution::parse(&cycles[..end], n)?;
            v.add_term(tau, if negative { -coeff } else { coeff });
            rest = cycles[end..].trim_start();
        }
        Ok(v)
    }
}

/// One entry of the JSON form of a [`ModelVector`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelTerm<T> {
    pub involution: String,
    pub coefficient: T,
}

impl<T: Scalar> ModelVector<T> {
    pub fn to_json_terms(&self) -> Vec<ModelTerm<T>> {
        self.terms()
            .map(|(tau, c)| ModelTerm {
                involution: tau.to_string(),
                coefficient: c.clone(),
            })
            .collect()
    }

    pub fn from_json_terms(n: usize, terms: &[ModelTerm<T>]) -> Result<Self> {
        let parsed = terms
            .iter()
            .map(|t| Ok((Involution::parse(&t.involution, n)?, t.coefficient.clone())))
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(n, parsed)
    }
}
