//! Conjugacy classes and irreducible characters of `Σ_n`, the characters of
//! the `V_j`, and the multiplicity table of `A = ⊕_j V_j`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{check_degree, ModelError, Result};
use crate::intertwiner::end_dimension;
use crate::partition::{class_size, factorial, partitions_of, IntPartition};
use crate::perm::{involution_count, InvolutionBasis, Permutation};
use crate::sign::character_on_basis;

/// The permutation with cycles on consecutive points, largest cycle first:
/// `(1 2 3)(4 5)(6)` for cycle type `(3,2,1)`.
pub fn class_representative(cycle_type: &IntPartition) -> Permutation {
    let n = cycle_type.total();
    let mut cycles = Vec::new();
    let mut next = 1;
    for &len in cycle_type.parts() {
        cycles.push((next..next + len).collect::<Vec<_>>());
        next += len;
    }
    Permutation::from_cycles(n, &cycles).expect("cycle type partitions the degree")
}

/// Murnaghan–Nakayama evaluation with a memo table owned by the evaluator.
///
/// Shapes are handled as beta-sets: removing a border strip of length `r`
/// moves one bead from `b` to `b − r`, with sign `(−1)^{beads strictly between}`.
#[derive(Default)]
pub struct MurnaghanNakayama {
    memo: HashMap<(Vec<usize>, Vec<usize>), i64>,
}

impl MurnaghanNakayama {
    pub fn new() -> Self {
        Self::default()
    }

    /// `χ_λ(μ)`.
    pub fn evaluate(&mut self, lambda: &IntPartition, mu: &IntPartition) -> Result<i64> {
        check_degree(lambda.total(), mu.total())?;
        Ok(self.eval(lambda.parts(), mu.parts()))
    }

    fn eval(&mut self, shape: &[usize], cycles: &[usize]) -> i64 {
        let Some((&r, rest)) = cycles.split_first() else {
            return 1;
        };
        let key = (shape.to_vec(), cycles.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let len = shape.len();
        let beads: Vec<usize> = shape
            .iter()
            .enumerate()
            .map(|(i, &p)| p + len - 1 - i)
            .collect();
        let mut total = 0i64;
        for (i, &b) in beads.iter().enumerate() {
            let Some(landing) = b.checked_sub(r) else {
                continue;
            };
            if beads.contains(&landing) {
                continue;
            }
            let between = beads.iter().filter(|&&x| landing < x && x < b).count();
            let mut moved = beads.clone();
            moved[i] = landing;
            moved.sort_unstable_by(|a, b| b.cmp(a));
            let m = moved.len();
            let smaller: Vec<usize> = moved
                .iter()
                .enumerate()
                .map(|(k, &x)| x - (m - 1 - k))
                .filter(|&p| p > 0)
                .collect();
            let value = self.eval(&smaller, rest);
            if between % 2 == 0 {
                total += value;
            } else {
                total -= value;
            }
        }
        self.memo.insert(key, total);
        total
    }
}

/// `χ_λ(μ)` with a fresh memo table.
pub fn irreducible_character(lambda: &IntPartition, mu: &IntPartition) -> Result<i64> {
    MurnaghanNakayama::new().evaluate(lambda, mu)
}

/// An integer-valued class function on `Σ_n`, indexed by cycle type in the
/// order of [`partitions_of`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFunction {
    n: usize,
    classes: Vec<IntPartition>,
    values: Vec<i64>,
}

impl ClassFunction {
    pub fn from_fn(n: usize, mut f: impl FnMut(&IntPartition) -> i64) -> Self {
        let classes = partitions_of(n);
        let values = classes.iter().map(&mut f).collect();
        Self { n, classes, values }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn get(&self, cycle_type: &IntPartition) -> Option<i64> {
        self.classes
            .iter()
            .position(|c| c == cycle_type)
            .map(|i| self.values[i])
    }

    /// The value at the identity.
    pub fn dimension(&self) -> i64 {
        *self.values.last().expect("every degree has the class 1^n")
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IntPartition, i64)> {
        self.classes.iter().zip(self.values.iter().copied())
    }

    /// `n!·⟨self, other⟩ = Σ_μ |C_μ|·self(μ)·other(μ)`.
    pub fn weighted_sum(&self, other: &Self) -> Result<i128> {
        check_degree(self.n, other.n)?;
        let mut acc = 0i128;
        for ((c, &a), &b) in self.classes.iter().zip(&self.values).zip(&other.values) {
            let term = (class_size(c) as i128)
                .checked_mul(a as i128 * b as i128)
                .expect("inner product term overflows i128");
            acc = acc.checked_add(term).expect("inner product overflows i128");
        }
        Ok(acc)
    }

    /// `⟨self, other⟩` when it is an integer, `None` otherwise.
    pub fn inner_product(&self, other: &Self) -> Result<Option<i64>> {
        let sum = self.weighted_sum(other)?;
        let order = factorial(self.n as u64) as i128;
        Ok((sum % order == 0).then(|| (sum / order) as i64))
    }
}

/// The character of `V_j`.
pub fn vj_character(n: usize, j: usize) -> Result<ClassFunction> {
    let basis = InvolutionBasis::new(n, j)?;
    Ok(ClassFunction::from_fn(n, |mu| {
        character_on_basis(&basis, &class_representative(mu))
    }))
}

/// Full table of irreducible characters: rows `λ`, columns `μ`, both in
/// [`partitions_of`] order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub n: usize,
    pub partitions: Vec<IntPartition>,
    pub values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let partitions = partitions_of(n);
        let mut mn = MurnaghanNakayama::new();
        let values = partitions
            .iter()
            .map(|lambda| {
                partitions
                    .iter()
                    .map(|mu| mn.eval(lambda.parts(), mu.parts()))
                    .collect()
            })
            .collect();
        Self {
            n,
            partitions,
            values,
        }
    }

    pub fn row(&self, lambda_index: usize) -> ClassFunction {
        ClassFunction {
            n: self.n,
            classes: self.partitions.clone(),
            values: self.values[lambda_index].clone(),
        }
    }

    /// `f^λ = χ_λ(1^n)` for every `λ`.
    pub fn degrees(&self) -> Vec<i64> {
        self.values.iter().map(|row| *row.last().unwrap()).collect()
    }
}

/// `m[λ][j] = ⟨χ_{V_j}, χ_λ⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityTable {
    pub n: usize,
    pub rows: Vec<MultiplicityRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityRow {
    pub lambda: IntPartition,
    /// Indexed by `j = 0..=n/2`.
    pub multiplicities: Vec<i64>,
}

impl MultiplicityRow {
    pub fn sum(&self) -> i64 {
        self.multiplicities.iter().sum()
    }
}

impl MultiplicityTable {
    pub fn columns(&self) -> usize {
        self.n / 2 + 1
    }

    /// Aligned text rendering with a row-sum column.
    pub fn to_text(&self) -> String {
        let labels: Vec<String> = self.rows.iter().map(|r| r.lambda.label()).collect();
        let width = labels.iter().map(String::len).max().unwrap_or(0).max(6);
        let mut out = format!("{:<width$}", "lambda");
        for j in 0..self.columns() {
            out.push_str(&format!(" {:>4}", format!("V{j}")));
        }
        out.push_str("  sum\n");
        for (label, row) in labels.iter().zip(&self.rows) {
            out.push_str(&format!("{label:<width$}"));
            for m in &row.multiplicities {
                out.push_str(&format!(" {m:>4}"));
            }
            out.push_str(&format!("  {:>3}\n", row.sum()));
        }
        out
    }
}

/// Multiplicity of every irreducible `χ_λ` in every `V_j`, by exact inner products.
pub fn model_multiplicities(n: usize) -> Result<MultiplicityTable> {
    let table = CharacterTable::new(n);
    let vj: Vec<ClassFunction> = (0..=n / 2)
        .map(|j| vj_character(n, j))
        .collect::<Result<_>>()?;
    let order = factorial(n as u64) as i128;
    let mut rows = Vec::with_capacity(table.partitions.len());
    for (i, lambda) in table.partitions.iter().enumerate() {
        let chi = table.row(i);
        let mut multiplicities = Vec::with_capacity(vj.len());
        for (j, psi) in vj.iter().enumerate() {
            let sum = psi.weighted_sum(&chi)?;
            if sum % order != 0 {
                return Err(ModelError::NonIntegralMultiplicity {
                    lambda: lambda.label(),
                    j,
                    numerator: sum,
                    denominator: order,
                });
            }
            multiplicities.push((sum / order) as i64);
        }
        rows.push(MultiplicityRow {
            lambda: lambda.clone(),
            multiplicities,
        });
    }
    Ok(MultiplicityTable { n, rows })
}

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub observed: String,
    pub expected: String,
}

impl CheckOutcome {
    pub fn new(
        name: impl Into<String>,
        passed: bool,
        observed: impl ToString,
        expected: impl ToString,
    ) -> Self {
        Self {
            name: name.into(),
            passed,
            observed: observed.to_string(),
            expected: expected.to_string(),
        }
    }

    pub fn equal<T: PartialEq + ToString>(
        name: impl Into<String>,
        observed: T,
        expected: T,
    ) -> Self {
        Self::new(
            name,
            observed == expected,
            observed.to_string(),
            expected.to_string(),
        )
    }
}

/// The four checks making up the multiplicity-one statement for `Σ_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MainTheoremReport {
    pub n: usize,
    pub checks: Vec<CheckOutcome>,
    pub table: Option<MultiplicityTable>,
}

impl MainTheoremReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Runs (a) multiplicities are 0 or 1, (b) every row sums to one,
/// (c) `Σ_j dim End_G(V_j) = p(n)` and (d) `Σ_j |X_j| = Σ_λ f^λ`.
/// Failures are recorded in the report, never raised.
pub fn verify_main_theorem(n: usize) -> MainTheoremReport {
    let mut checks = Vec::new();
    let table = match model_multiplicities(n) {
        Ok(table) => {
            let bad = table
                .rows
                .iter()
                .flat_map(|r| r.multiplicities.iter())
                .filter(|&&m| m != 0 && m != 1)
                .count();
            checks.push(CheckOutcome::new(
                "multiplicities_zero_or_one",
                bad == 0,
                format!("{bad} entries outside {{0,1}}"),
                "0 entries outside {0,1}",
            ));
            let off = table.rows.iter().filter(|r| r.sum() != 1).count();
            checks.push(CheckOutcome::new(
                "row_sums_one",
                off == 0,
                format!("{off} rows with sum != 1"),
                "0 rows with sum != 1",
            ));
            Some(table)
        }
        Err(err) => {
            for name in ["multiplicities_zero_or_one", "row_sums_one"] {
                checks.push(CheckOutcome::new(
                    name,
                    false,
                    &err,
                    "integral multiplicities",
                ));
            }
            None
        }
    };

    let p = partitions_of(n).len();
    match (0..=n / 2)
        .map(|j| end_dimension(n, j))
        .sum::<Result<usize>>()
    {
        Ok(total) => checks.push(CheckOutcome::equal("end_dimension_total_is_p(n)", total, p)),
        Err(err) => checks.push(CheckOutcome::new(
            "end_dimension_total_is_p(n)",
            false,
            err,
            p,
        )),
    }

    let involutions: u64 = (0..=n / 2).map(|j| involution_count(n, j)).sum();
    let degrees: i64 = CharacterTable::new(n).degrees().iter().sum();
    checks.push(CheckOutcome::equal(
        "involutions_equal_degree_sum",
        involutions as i64,
        degrees,
    ));

    MainTheoremReport { n, checks, table }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[usize]) -> IntPartition {
        IntPartition::new(p.to_vec())
    }

    /// `n! / Π hook lengths`.
    fn hook_length_degree(lambda: &IntPartition) -> i64 {
        let parts = lambda.parts();
        let mut hooks = 1u64;
        for (i, &row) in parts.iter().enumerate() {
            for col in 0..row {
                let arm = row - col - 1;
                let leg = parts[i + 1..].iter().filter(|&&r| r > col).count();
                hooks *= (arm + leg + 1) as u64;
            }
        }
        (factorial(lambda.total() as u64) / hooks) as i64
    }

    #[test]
    fn class_representatives() {
        let rep = class_representative(&part(&[3, 2, 1]));
        assert_eq!(rep.to_string(), "(1 2 3)(4 5)");
        assert_eq!(rep.cycle_type(), part(&[3, 2, 1]));
        assert!(class_representative(&IntPartition::ones(4)).is_identity());
    }

    #[test]
    fn degrees_match_hook_length_formula() {
        assert_eq!(
            irreducible_character(&part(&[2, 2]), &IntPartition::ones(4)).unwrap(),
            2
        );
        for n in 1..=10 {
            let table = CharacterTable::new(n);
            for (lambda, f) in table.partitions.iter().zip(table.degrees()) {
                assert!(f > 0);
                assert_eq!(f, hook_length_degree(lambda), "lambda={lambda}");
            }
        }
    }

    #[test]
    fn known_values_for_s3_and_s4() {
        // Sign character is (−1)^{n − #cycles}.
        for n in 1..=6 {
            let sign_shape = IntPartition::ones(n);
            for mu in partitions_of(n) {
                let expected = if (n - mu.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(irreducible_character(&sign_shape, &mu).unwrap(), expected);
                assert_eq!(irreducible_character(&part(&[n]), &mu).unwrap(), 1);
            }
        }
        // Standard representation: fixed points minus one.
        assert_eq!(
            irreducible_character(&part(&[3, 1]), &part(&[2, 1, 1])).unwrap(),
            1
        );
        assert_eq!(
            irreducible_character(&part(&[3, 1]), &part(&[3, 1])).unwrap(),
            0
        );
        assert_eq!(
            irreducible_character(&part(&[2, 2]), &part(&[4])).unwrap(),
            0
        );
        assert_eq!(
            irreducible_character(&part(&[2, 2]), &part(&[2, 2])).unwrap(),
            2
        );
        assert_eq!(
            irreducible_character(&part(&[2, 2]), &part(&[3, 1])).unwrap(),
            -1
        );
        assert!(irreducible_character(&part(&[2, 2]), &part(&[3])).is_err());
    }

    #[test]
    fn orthogonality() {
        for n in 1..=8 {
            let table = CharacterTable::new(n);
            let order = factorial(n as u64) as i128;
            let rows: Vec<ClassFunction> =
                (0..table.partitions.len()).map(|i| table.row(i)).collect();
            for (a, ra) in rows.iter().enumerate() {
                for (b, rb) in rows.iter().enumerate() {
                    let expected = if a == b { order } else { 0 };
                    assert_eq!(ra.weighted_sum(rb).unwrap(), expected);
                }
            }
            // Column orthogonality: Σ_λ χ_λ(μ)χ_λ(ν) = δ·n!/|C_μ|.
            for (m, mu) in table.partitions.iter().enumerate() {
                for v in 0..table.partitions.len() {
                    let sum: i64 = table.values.iter().map(|row| row[m] * row[v]).sum();
                    let expected = if m == v {
                        (order as u64 / class_size(mu)) as i64
                    } else {
                        0
                    };
                    assert_eq!(sum, expected);
                }
            }
        }
    }

    #[test]
    fn vj_character_at_identity_is_dimension() {
        for n in 1..=8 {
            for j in 0..=n / 2 {
                assert_eq!(
                    vj_character(n, j).unwrap().dimension() as u64,
                    involution_count(n, j)
                );
            }
        }
    }

    #[test]
    fn multiplicity_examples() {
        let t = model_multiplicities(1).unwrap();
        assert_eq!(t.rows.len(), 1);
        assert_eq!(t.rows[0].multiplicities, vec![1]);
        let t = model_multiplicities(4).unwrap();
        assert_eq!(t.rows.len(), 5);
        assert!(t.rows.iter().all(|r| r.sum() == 1));
        let degrees: i64 = CharacterTable::new(4).degrees().iter().sum();
        assert_eq!(degrees, 10);
    }

    #[test]
    fn main_theorem_small() {
        for n in 1..=6 {
            let report = verify_main_theorem(n);
            assert!(report.passed(), "{report:?}");
            assert_eq!(report.checks.len(), 4);
        }
        let report = verify_main_theorem(4);
        assert_eq!(report.checks[2].observed, "5");
        assert_eq!(report.checks[3].observed, "10");
    }

    #[test]
    fn multiplicity_text_rendering() {
        let text = model_multiplicities(2).unwrap().to_text();
        assert_eq!(
            text,
            "lambda   V0   V1  sum\n2=2       1    0    1\n2=1+1     0    1    1\n"
        );
    }
}
