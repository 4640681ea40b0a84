//! The representation of `Σ_n` on the span of its involutions.
//!
//! `Σ_n` acts on each conjugacy class `X_j` of involutions by conjugation,
//! twisted by the sign `S(σ, τ)` that records how many transpositions of `τ`
//! are flipped by `σ`. The resulting modules `V_j` are pairwise disjoint,
//! multiplicity free, and together contain every irreducible representation
//! of `Σ_n` exactly once. This crate builds them with exact arithmetic and
//! checks those facts by enumeration and character theory.
//!
//! Modules:
//! * [`perm`]: permutations, involutions and the classes `X_j`;
//! * [`sign`]: the sign cocycle, `π_j`, and the algebra `A = ⊕_j V_j`;
//! * [`pairs`]: structure of pairs of involutions;
//! * [`intertwiner`]: `Hom_G(V_j, V_k)` by signed orbit enumeration;
//! * [`characters`]: partitions, Murnaghan–Nakayama and multiplicities;
//! * [`linalg`]: exact sparse elimination used as an independent oracle.
//!
//! Model vectors, intertwiners and the elimination oracle are generic over
//! the coefficient type; the aliases below fix the common choices.
//!
//! ```
//! use involution_model::{dichotomy, end_dimension, model_multiplicities, Involution, PairStatus};
//!
//! let tau = Involution::parse("(1 2)(3 4)", 4)?;
//! let kappa = Involution::parse("(2 3)", 4)?;
//! let profile = dichotomy(&tau, &kappa)?;
//! assert!(matches!(profile.status, PairStatus::Witness(_)));
//!
//! assert_eq!(end_dimension(4, 1)?, 2);
//! let table = model_multiplicities(6)?;
//! assert!(table.rows.iter().all(|r| r.sum() == 1));
//! # Ok::<(), involution_model::ModelError>(())
//! ```

pub mod characters;
pub mod error;
pub mod intertwiner;
pub mod linalg;
pub mod pairs;
pub mod partition;
pub mod perm;
pub mod scalar;
pub mod sign;

pub use characters::{
    class_representative, irreducible_character, model_multiplicities, verify_main_theorem,
    vj_character, CharacterTable, CheckOutcome, ClassFunction, MainTheoremReport,
    MultiplicityTable,
};
pub use error::{ModelError, Result};
pub use intertwiner::{
    end_dimension, enumerate_signed_orbits, hom_basis, hom_dimension,
    hom_dimension_by_linear_system, orbit_summaries, verify_equivariance, IntertwinerMatrix,
    OrbitAtlas, OrbitSummary, SignedOrbit,
};
pub use pairs::{
    characteristic_partition, classify_block, dichotomy, simultaneous_conjugator, BlockCase,
    CaseKind, PairProfile, PairStatus, SetPartition, Side,
};
pub use partition::{class_size, count_partitions_with_odd_parts, partitions_of, IntPartition};
pub use perm::{
    centralizer_pair, conjugate, enumerate_involutions, involution_count, Involution,
    InvolutionBasis, Permutation,
};
pub use scalar::{ExactScalar, Scalar};
pub use sign::{
    act, character_of_vj, cocycle_check, model_product, sign, ModelVector, Sign, SignedBasisMap,
};

pub use num_bigint::BigInt;
pub use num_rational::{BigRational, Rational64};

/// Integer-coefficient element of the model algebra.
pub type IntModelVector = ModelVector<i64>;
/// Rational-coefficient element of the model algebra.
pub type RationalModelVector = ModelVector<Rational64>;
/// Integer-entry intertwiner.
pub type IntIntertwiner = IntertwinerMatrix<i64>;
/// Rational-entry intertwiner.
pub type RationalIntertwiner = IntertwinerMatrix<Rational64>;
/// Elimination over machine integers with content normalization.
pub type IntKernel = linalg::SparseKernel<i64>;
/// Elimination over arbitrary-precision rationals.
pub type RationalKernel = linalg::SparseKernel<BigRational>;
