//! Coefficient types.
//!
//! Model vectors and intertwiners are generic over any signed numeric type;
//! the linear-system oracle additionally needs exact arithmetic.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed, Zero};

/// A coefficient ring for model vectors and intertwiner matrices.
pub trait Scalar: Num + Signed + Clone + Debug {}

impl<T: Num + Signed + Clone + Debug> Scalar for T {}

/// A scalar with exact arithmetic, usable for elimination.
pub trait ExactScalar: Scalar {
    /// Rescales a row (leading entry first, all entries non-zero) to a
    /// canonical representative of its span.
    fn normalize(row: &mut [Self]);
}

macro_rules! exact_integer {
    ($($t:ty),*) => {$(
        impl ExactScalar for $t {
            fn normalize(row: &mut [Self]) {
                let Some(first) = row.first() else { return };
                let mut g = first.abs();
                for x in &row[1..] {
                    g = g.gcd(x);
                }
                if first.is_negative() {
                    g = -g;
                }
                if !g.is_zero() {
                    for x in row.iter_mut() {
                        *x = x.clone() / g.clone();
                    }
                }
            }
        }
    )*};
}

exact_integer!(i32, i64, i128, BigInt);

impl<T> ExactScalar for Ratio<T>
where
    T: Clone + Integer + Signed + Debug,
{
    fn normalize(row: &mut [Self]) {
        let Some(lead) = row.first().cloned() else {
            return;
        };
        if lead.is_zero() {
            return;
        }
        for x in row.iter_mut() {
            *x = x.clone() / lead.clone();
        }
    }
}
