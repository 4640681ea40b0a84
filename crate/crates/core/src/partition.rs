//! Integer partitions: the index set for conjugacy classes and irreducible
//! characters of `Σ_n`.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct IntPartition {
    parts: Vec<usize>,
}

impl IntPartition {
    /// Sorts `parts` into non-increasing order and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    /// `1^n`, the cycle type of the identity.
    pub fn ones(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn odd_parts(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// Multiplicity of each part size, `m[c]` for `c` in `0..=largest`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.parts.first().map_or(1, |&p| p + 1)];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// Text label of the form `"4=2+1+1"`.
    pub fn label(&self) -> String {
        let sum = self
            .parts
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("+");
        format!(
            "{}={}",
            self.total(),
            if sum.is_empty() { "0".into() } else { sum }
        )
    }
}

impl From<Vec<usize>> for IntPartition {
    fn from(parts: Vec<usize>) -> Self {
        Self::new(parts)
    }
}

impl From<IntPartition> for Vec<usize> {
    fn from(p: IntPartition) -> Self {
        p.parts
    }
}

impl fmt::Display for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of `n` in reverse lexicographic order, `(n)` first and `1^n` last.
pub fn partitions_of(n: usize) -> Vec<IntPartition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n, n, &mut current, &mut out);
    out
}

fn descend(remaining: usize, cap: usize, current: &mut Vec<usize>, out: &mut Vec<IntPartition>) {
    if remaining == 0 {
        out.push(IntPartition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=cap.min(remaining)).rev() {
        current.push(part);
        descend(remaining - part, part, current, out);
        current.pop();
    }
}

/// Number of partitions of `n` with exactly `m` odd parts. Zero when the
/// parity of `m` differs from that of `n`.
pub fn count_partitions_with_odd_parts(n: usize, m: usize) -> u64 {
    if m > n || !(n - m).is_multiple_of(2) {
        return 0;
    }
    // table[k][s]: partitions of s with exactly k odd parts, using the part
    // sizes seen so far. Ascending s lets a part be reused.
    let mut table = vec![vec![0u64; n + 1]; m + 1];
    table[0][0] = 1;
    for part in 1..=n {
        let shift = part % 2;
        for s in part..=n {
            for k in shift..=m {
                table[k][s] += table[k - shift][s - part];
            }
        }
    }
    table[m][n]
}

/// `n! / Π_c (c^{m_c} · m_c!)`, the size of the conjugacy class of the given cycle type.
pub fn class_size(cycle_type: &IntPartition) -> u64 {
    let n = cycle_type.total() as u64;
    let mut denom = 1u64;
    for (c, &m) in cycle_type.multiplicities().iter().enumerate().skip(1) {
        denom *= (c as u64).pow(m as u32) * factorial(m as u64);
    }
    factorial(n) / denom
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_of_small_n() {
        assert_eq!(partitions_of(0), vec![IntPartition::new(vec![])]);
        let four: Vec<Vec<usize>> = partitions_of(4).into_iter().map(Into::into).collect();
        assert_eq!(
            four,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
        assert_eq!(partitions_of(10).len(), 42);
    }

    #[test]
    fn partition_counts_match_pentagonal_recurrence() {
        let mut p = vec![1i64];
        for i in 1..=14i64 {
            let mut sum = 0;
            for k in 1i64.. {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > i {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                sum += sign * p[(i - g1) as usize];
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= i {
                    sum += sign * p[(i - g2) as usize];
                }
            }
            p.push(sum);
        }
        for n in 0..=14 {
            assert_eq!(partitions_of(n).len() as i64, p[n], "n={n}");
        }
    }

    #[test]
    fn odd_part_counts() {
        assert_eq!(count_partitions_with_odd_parts(4, 2), 2);
        assert_eq!(count_partitions_with_odd_parts(4, 1), 0);
        assert_eq!(count_partitions_with_odd_parts(3, 5), 0);
        for n in 0..=12 {
            assert_eq!(count_partitions_with_odd_parts(n, n), 1);
            let all = partitions_of(n);
            let mut total = 0;
            for m in 0..=n {
                let filtered = all.iter().filter(|p| p.odd_parts() == m).count() as u64;
                assert_eq!(
                    count_partitions_with_odd_parts(n, m),
                    filtered,
                    "n={n} m={m}"
                );
                total += filtered;
            }
            assert_eq!(total, all.len() as u64);
        }
    }

    #[test]
    fn class_sizes() {
        assert_eq!(class_size(&IntPartition::ones(6)), 1);
        assert_eq!(class_size(&IntPartition::new(vec![2, 1, 1])), 6);
        assert_eq!(class_size(&IntPartition::new(vec![2, 2])), 3);
        for n in 1..=10 {
            let sum: u64 = partitions_of(n).iter().map(class_size).sum();
            assert_eq!(sum, factorial(n as u64));
        }
    }

    #[test]
    fn labels_and_serde() {
        let p = IntPartition::new(vec![1, 2, 1]);
        assert_eq!(p.label(), "4=2+1+1");
        assert_eq!(p.to_string(), "(2,1,1)");
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, "[2,1,1]");
        assert_eq!(serde_json::from_str::<IntPartition>("[1,2,1]").unwrap(), p);
    }
}
