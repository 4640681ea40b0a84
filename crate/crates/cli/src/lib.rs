//! Command implementations behind the `involution-model` binary.
//!
//! Every command returns a [`Report`]: a list of named checks plus a
//! command-specific body. Reports render as aligned text or as JSON with a
//! top-level `schema_version`.

use std::fmt::Write as _;
use std::time::Instant;

use clap::ValueEnum;
use involution_model::{
    centralizer_pair, cocycle_check, count_partitions_with_odd_parts, dichotomy, end_dimension,
    enumerate_involutions, hom_basis, hom_dimension, involution_count, orbit_summaries,
    partitions_of, sign, verify_main_theorem, vj_character, CharacterTable, CheckOutcome,
    IntIntertwiner, Involution, InvolutionBasis, ModelError, MultiplicityTable, Permutation, Sign,
    SignedBasisMap,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA_VERSION: u32 = 1;
/// Largest accepted degree: `n!` must fit in 64 bits.
pub const MAX_N: usize = 20;
/// Degrees above this print a runtime warning.
pub const SOFT_CAP: usize = 10;

const SAMPLES: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Verify,
    Dims,
    Orbits,
    Decompose,
    Character,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Verify => "verify",
            Command::Dims => "dims",
            Command::Orbits => "orbits",
            Command::Decompose => "decompose",
            Command::Character => "character",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub command: Command,
    pub n: usize,
    pub j: Option<usize>,
    pub k: Option<usize>,
    pub seed: u64,
    #[serde(skip)]
    pub format: OutputFormat,
    #[serde(skip)]
    pub timings: bool,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("n must be between 1 and {MAX_N}, got {0}")]
    DegreeOutOfRange(usize),
    #[error("{name} must be between 0 and {max} for n = {n}, got {value}")]
    LengthOutOfRange {
        name: &'static str,
        value: usize,
        max: usize,
        n: usize,
    },
    #[error("the {0} command requires --j")]
    MissingLength(&'static str),
}

impl RunConfig {
    pub fn new(command: Command, n: usize) -> Self {
        Self {
            command,
            n,
            j: None,
            k: None,
            seed: 0,
            format: OutputFormat::Text,
            timings: false,
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.n == 0 || self.n > MAX_N {
            return Err(ConfigError::DegreeOutOfRange(self.n));
        }
        let max = self.n / 2;
        for (name, value) in [("j", self.j), ("k", self.k)] {
            if let Some(value) = value.filter(|&v| v > max) {
                return Err(ConfigError::LengthOutOfRange {
                    name,
                    value,
                    max,
                    n: self.n,
                });
            }
        }
        if self.command == Command::Orbits && self.j.is_none() {
            return Err(ConfigError::MissingLength("orbits"));
        }
        Ok(())
    }

    fn lengths(&self) -> Vec<usize> {
        match self.j {
            Some(j) => vec![j],
            None => (0..=self.n / 2).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub observed: String,
    pub expected: String,
    pub elapsed_ms: u128,
}

impl Check {
    fn from_outcome(outcome: CheckOutcome, elapsed_ms: u128) -> Self {
        Self {
            name: outcome.name,
            passed: outcome.passed,
            observed: outcome.observed,
            expected: outcome.expected,
            elapsed_ms,
        }
    }
}

/// Checks plus a rendered body.
#[derive(Clone, Debug)]
pub struct Report {
    pub config: RunConfig,
    pub checks: Vec<Check>,
    /// Checks not run at this degree, with the reason.
    pub skipped: Vec<(String, String)>,
    pub body: Value,
    pub text: String,
}

impl Report {
    fn new(config: &RunConfig) -> Self {
        Self {
            config: config.clone(),
            checks: Vec::new(),
            skipped: Vec::new(),
            body: Value::Null,
            text: String::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Times `f` and records its outcomes, all sharing the elapsed time.
    fn record(
        &mut self,
        f: impl FnOnce() -> Result<Vec<CheckOutcome>, ModelError>,
    ) -> Result<(), ModelError> {
        let started = Instant::now();
        let outcomes = f()?;
        let ms = started.elapsed().as_millis();
        self.checks
            .extend(outcomes.into_iter().map(|o| Check::from_outcome(o, ms)));
        Ok(())
    }

    fn skip(&mut self, name: &str, reason: impl Into<String>) {
        self.skipped.push((name.to_string(), reason.into()));
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                let mut v = json!({
                    "name": c.name,
                    "status": if c.passed { "pass" } else { "fail" },
                    "observed": c.observed,
                    "expected": c.expected,
                });
                if self.config.timings {
                    v["elapsed_ms"] = json!(c.elapsed_ms);
                }
                v
            })
            .collect();
        let skipped: Vec<Value> = self
            .skipped
            .iter()
            .map(|(name, reason)| json!({ "name": name, "reason": reason }))
            .collect();
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.config,
            "passed": self.passed(),
            "checks": checks,
            "skipped": skipped,
            "result": self.body,
        })
    }

    pub fn to_text(&self) -> String {
        let c = &self.config;
        let mut out = format!("{} n={}", c.command.name(), c.n);
        for (name, v) in [("j", c.j), ("k", c.k)] {
            if let Some(v) = v {
                let _ = write!(out, " {name}={v}");
            }
        }
        let _ = writeln!(out, " seed={}", c.seed);
        if !self.text.is_empty() {
            out.push('\n');
            out.push_str(&self.text);
        }
        if !self.checks.is_empty() {
            out.push('\n');
            let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
            for check in &self.checks {
                let _ = writeln!(
                    out,
                    "{}  {:<width$}  observed: {}  expected: {}  ({} ms)",
                    if check.passed { "PASS" } else { "FAIL" },
                    check.name,
                    check.observed,
                    check.expected,
                    check.elapsed_ms,
                );
            }
        }
        for (name, reason) in &self.skipped {
            let _ = writeln!(out, "SKIP  {name}: {reason}");
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        let _ = writeln!(
            out,
            "\n{} checks, {} failed: {}",
            self.checks.len(),
            failed,
            if failed == 0 { "ok" } else { "FAILED" }
        );
        out
    }

    pub fn render(&self) -> String {
        match self.config.format {
            OutputFormat::Text => self.to_text(),
            OutputFormat::Json => {
                let mut s =
                    serde_json::to_string_pretty(&self.to_json()).expect("report serializes");
                s.push('\n');
                s
            }
        }
    }
}

pub fn run(config: &RunConfig) -> Result<Report, ModelError> {
    match config.command {
        Command::Verify => cmd_verify(config),
        Command::Dims => cmd_dims(config),
        Command::Orbits => cmd_orbits(config),
        Command::Decompose => cmd_decompose(config),
        Command::Character => cmd_character(config),
    }
}

fn random_involution<R: Rng>(n: usize, rng: &mut R) -> Involution {
    let j = rng.random_range(0..=n / 2);
    let pairs: Vec<(usize, usize)> = (0..j).map(|i| (2 * i + 1, 2 * i + 2)).collect();
    Involution::new(n, &pairs)
        .and_then(|t| t.conjugate_by(&Permutation::random(n, rng)))
        .expect("valid involution")
}

fn all_involutions(n: usize) -> Vec<Involution> {
    (0..=n / 2)
        .flat_map(|j| enumerate_involutions(n, j).expect("j in range"))
        .collect()
}

fn multiplicity_json(table: &MultiplicityTable) -> Value {
    let rows: Vec<Value> = table
        .rows
        .iter()
        .map(|r| {
            json!({
                "lambda": r.lambda.label(),
                "multiplicities": r.multiplicities,
                "sum": r.sum(),
            })
        })
        .collect();
    json!({ "columns": (0..table.columns()).map(|j| format!("V{j}")).collect::<Vec<_>>(), "rows": rows })
}

fn cocycle_outcome(n: usize, rng: &mut ChaCha8Rng) -> CheckOutcome {
    let (mut total, mut failures) = (0usize, 0usize);
    if n <= 4 {
        let invs = all_involutions(n);
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        for a in &perms {
            for b in &perms {
                for tau in &invs {
                    total += 1;
                    failures += usize::from(!cocycle_check(a, b, tau).expect("same degree"));
                }
            }
        }
    } else {
        for _ in 0..10 * SAMPLES {
            let (a, b) = (Permutation::random(n, rng), Permutation::random(n, rng));
            let tau = random_involution(n, rng);
            total += 1;
            failures += usize::from(!cocycle_check(&a, &b, &tau).expect("same degree"));
        }
    }
    CheckOutcome::new(
        "cocycle",
        failures == 0,
        format!("{failures} failures in {total} triples"),
        "0 failures",
    )
}

fn homomorphism_outcome(n: usize, rng: &mut ChaCha8Rng) -> Result<CheckOutcome, ModelError> {
    let (mut total, mut failures) = (0usize, 0usize);
    for j in 0..=n / 2 {
        let basis = InvolutionBasis::new(n, j)?;
        for _ in 0..SAMPLES / 4 {
            let (a, b) = (Permutation::random(n, rng), Permutation::random(n, rng));
            let lhs = SignedBasisMap::new(&a.compose(&b)?, &basis)?;
            let rhs = SignedBasisMap::new(&a, &basis)?.after(&SignedBasisMap::new(&b, &basis)?)?;
            total += 1;
            failures += usize::from(lhs != rhs);
        }
    }
    Ok(CheckOutcome::new(
        "homomorphism",
        failures == 0,
        format!("{failures} failures in {total} (pair, j) samples"),
        "0 failures",
    ))
}

fn has_odd_centralizer(tau: &Involution, kappa: &Involution) -> bool {
    centralizer_pair(tau, kappa)
        .expect("same degree")
        .iter()
        .any(|s| {
            sign(s, tau).expect("same degree") * sign(s, kappa).expect("same degree") == Sign::Minus
        })
}

fn dichotomy_outcome(n: usize, rng: &mut ChaCha8Rng) -> Result<CheckOutcome, ModelError> {
    let pairs: Vec<(Involution, Involution)> = if n <= 6 {
        let invs = all_involutions(n);
        invs.iter()
            .flat_map(|t| invs.iter().map(move |k| (t.clone(), k.clone())))
            .collect()
    } else {
        (0..SAMPLES)
            .map(|_| (random_involution(n, rng), random_involution(n, rng)))
            .collect()
    };
    let search = n <= 8;
    let mut failures = 0;
    for (tau, kappa) in &pairs {
        let profile = dichotomy(tau, kappa)?;
        let mut ok = profile.validate(tau, kappa);
        if search {
            ok &= has_odd_centralizer(tau, kappa) == profile.status.is_witness();
        }
        failures += usize::from(!ok);
    }
    let mode = if search {
        "validated and searched"
    } else {
        "validated"
    };
    Ok(CheckOutcome::new(
        "dichotomy",
        failures == 0,
        format!("{failures} failures in {} pairs ({mode})", pairs.len()),
        "0 failures",
    ))
}

fn commutativity_outcomes(n: usize) -> Result<Vec<CheckOutcome>, ModelError> {
    let (mut asymmetric, mut noncommuting, mut matrices) = (0, 0, 0);
    for j in 0..=n / 2 {
        let basis: Vec<IntIntertwiner> = hom_basis(n, j, j)?;
        asymmetric += basis.iter().filter(|m| !m.is_symmetric()).count();
        for (a, x) in basis.iter().enumerate() {
            for y in &basis[a + 1..] {
                noncommuting += usize::from(x.after(y)? != y.after(x)?);
            }
        }
        matrices += basis.len();
    }
    Ok(vec![
        CheckOutcome::new(
            "symmetry",
            asymmetric == 0,
            format!("{asymmetric} of {matrices} basis intertwiners asymmetric"),
            "0 asymmetric",
        ),
        CheckOutcome::new(
            "commutativity",
            noncommuting == 0,
            format!("{noncommuting} non-commuting basis pairs"),
            "0 non-commuting",
        ),
    ])
}

fn dimension_outcomes(n: usize) -> Result<Vec<CheckOutcome>, ModelError> {
    let mut out = Vec::new();
    for j in 0..=n / 2 {
        let expected = count_partitions_with_odd_parts(n, n - 2 * j) as usize;
        out.push(CheckOutcome::equal(
            format!("dim_end_v{j}"),
            end_dimension(n, j)?,
            expected,
        ));
    }
    Ok(out)
}

fn disjointness_outcomes(n: usize) -> Result<Vec<CheckOutcome>, ModelError> {
    let chars = (0..=n / 2)
        .map(|j| vj_character(n, j))
        .collect::<Result<Vec<_>, _>>()?;
    let mut nonzero = 0;
    for (j, a) in chars.iter().enumerate() {
        for b in &chars[j + 1..] {
            nonzero += usize::from(a.inner_product(b)? != Some(0));
        }
    }
    let mut out = vec![CheckOutcome::new(
        "disjointness_characters",
        nonzero == 0,
        format!("{nonzero} nonzero <chi_Vj, chi_Vk>"),
        "0 nonzero",
    )];
    if n <= 8 {
        let mut dims = 0;
        for j in 0..=n / 2 {
            for k in (0..=n / 2).filter(|&k| k != j) {
                dims += hom_dimension(n, j, k)?;
            }
        }
        out.push(CheckOutcome::equal("disjointness_orbits", dims, 0));
    }
    Ok(out)
}

/// Runs every invariant suite at degree `n`. Exhaustive where feasible,
/// seeded samples otherwise.
pub fn cmd_verify(config: &RunConfig) -> Result<Report, ModelError> {
    let n = config.n;
    let mut report = Report::new(config);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);

    report.record(|| Ok(vec![cocycle_outcome(n, &mut rng)]))?;
    report.record(|| Ok(vec![homomorphism_outcome(n, &mut rng)?]))?;
    report.record(|| Ok(vec![dichotomy_outcome(n, &mut rng)?]))?;
    if n > 8 {
        report.skip("dichotomy_search", "centralizer search limited to n <= 8");
    }
    if n <= 7 {
        report.record(|| commutativity_outcomes(n))?;
    } else {
        report.skip("symmetry", "basis intertwiners built for n <= 7");
        report.skip("commutativity", "basis intertwiners built for n <= 7");
    }
    report.record(|| dimension_outcomes(n))?;
    report.record(|| disjointness_outcomes(n))?;
    if n > 8 {
        report.skip(
            "disjointness_orbits",
            "orbit enumeration for j != k limited to n <= 8",
        );
    }
    let mut theorem = None;
    report.record(|| {
        let result = verify_main_theorem(n);
        let checks = result.checks.clone();
        theorem = Some(result);
        Ok(checks)
    })?;
    let theorem = theorem.expect("recorded above");

    let p = partitions_of(n).len();
    let degree_sum: i64 = CharacterTable::new(n).degrees().iter().sum();
    let mut text = format!("p({n}) = {p}\nsum of degrees = {degree_sum}\n");
    let mut body = json!({ "partition_count": p, "degree_sum": degree_sum });
    if let Some(table) = &theorem.table {
        text.push('\n');
        text.push_str(&table.to_text());
        body["multiplicities"] = multiplicity_json(table);
    }
    report.text = text;
    report.body = body;
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimsRow {
    pub j: usize,
    pub dim_v: u64,
    pub dim_end: usize,
    pub odd_part_partitions: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimsTotals {
    pub dim_v: u64,
    pub degree_sum: i64,
    pub dim_end: usize,
    pub partition_count: usize,
    /// `Σ dim End_G(V_j)` over `j ≥ 1`.
    pub dim_end_without_v0: usize,
}

pub fn dims_table(n: usize) -> Result<(Vec<DimsRow>, DimsTotals), ModelError> {
    let rows = (0..=n / 2)
        .map(|j| {
            Ok(DimsRow {
                j,
                dim_v: involution_count(n, j),
                dim_end: end_dimension(n, j)?,
                odd_part_partitions: count_partitions_with_odd_parts(n, n - 2 * j),
            })
        })
        .collect::<Result<Vec<_>, ModelError>>()?;
    let dim_end: usize = rows.iter().map(|r| r.dim_end).sum();
    let totals = DimsTotals {
        dim_v: rows.iter().map(|r| r.dim_v).sum(),
        degree_sum: CharacterTable::new(n).degrees().iter().sum(),
        dim_end,
        partition_count: partitions_of(n).len(),
        dim_end_without_v0: dim_end - rows[0].dim_end,
    };
    Ok((rows, totals))
}

/// Dimensions of `V_j` and `End_G(V_j)` for every `j`.
pub fn cmd_dims(config: &RunConfig) -> Result<Report, ModelError> {
    let mut report = Report::new(config);
    let started = Instant::now();
    let (rows, totals) = dims_table(config.n)?;
    let ms = started.elapsed().as_millis();
    for r in &rows {
        report.checks.push(Check::from_outcome(
            CheckOutcome::equal(
                format!("dim_end_v{}", r.j),
                r.dim_end as u64,
                r.odd_part_partitions,
            ),
            ms,
        ));
    }
    report.checks.push(Check::from_outcome(
        CheckOutcome::equal("dim_v_total", totals.dim_v as i64, totals.degree_sum),
        ms,
    ));
    report.checks.push(Check::from_outcome(
        CheckOutcome::equal("dim_end_total", totals.dim_end, totals.partition_count),
        ms,
    ));

    let mut text = format!(
        "{:>3} {:>10} {:>8} {:>10}\n",
        "j", "dim V_j", "dim End", "partitions"
    );
    for r in &rows {
        let _ = writeln!(
            text,
            "{:>3} {:>10} {:>8} {:>10}",
            r.j, r.dim_v, r.dim_end, r.odd_part_partitions
        );
    }
    let _ = writeln!(
        text,
        "sum {:>10} {:>8}\nsum of degrees = {}, p({}) = {}, sum of dim End for j >= 1 = {}",
        totals.dim_v,
        totals.dim_end,
        totals.degree_sum,
        config.n,
        totals.partition_count,
        totals.dim_end_without_v0
    );
    report.text = text;
    report.body = json!({ "rows": rows, "totals": totals });
    Ok(report)
}

/// Orbit atlas of `X_j × X_k`; `k` defaults to `j`.
pub fn cmd_orbits(config: &RunConfig) -> Result<Report, ModelError> {
    let n = config.n;
    let j = config
        .j
        .ok_or(ModelError::LengthOutOfRange { n, j: usize::MAX })?;
    let k = config.k.unwrap_or(j);
    let mut report = Report::new(config);
    let started = Instant::now();
    let orbits: Vec<_> = orbit_summaries(n, j, k)?
        .iter()
        .map(|o| o.to_json())
        .collect();
    let ms = started.elapsed().as_millis();
    let consistent = orbits.iter().filter(|o| o.consistent).count();
    let expected = if j == k {
        count_partitions_with_odd_parts(n, n - 2 * j) as usize
    } else {
        0
    };
    report.checks.push(Check::from_outcome(
        CheckOutcome::equal("consistent_orbits", consistent, expected),
        ms,
    ));
    let covered: u64 = orbits.iter().map(|o| o.size as u64).sum();
    report.checks.push(Check::from_outcome(
        CheckOutcome::equal(
            "orbits_cover_pairs",
            covered,
            involution_count(n, j) * involution_count(n, k),
        ),
        ms,
    ));

    let mut text = format!("{} orbits, {consistent} consistent\n", orbits.len());
    for o in &orbits {
        let _ = writeln!(
            text,
            "  {} , {}  size {}  {}  {:?}",
            o.representative[0],
            o.representative[1],
            o.size,
            if o.consistent {
                "consistent"
            } else {
                "inconsistent"
            },
            o.numerical_partition
        );
    }
    report.text = text;
    report.body = json!({
        "orbit_count": orbits.len(),
        "consistent_count": consistent,
        "orbits": orbits,
    });
    Ok(report)
}

/// Multiplicity of every irreducible in every `V_j`.
pub fn cmd_decompose(config: &RunConfig) -> Result<Report, ModelError> {
    let mut report = Report::new(config);
    let started = Instant::now();
    let table = involution_model::model_multiplicities(config.n)?;
    let ms = started.elapsed().as_millis();
    let bad = table
        .rows
        .iter()
        .flat_map(|r| &r.multiplicities)
        .filter(|&&m| m != 0 && m != 1)
        .count();
    let off = table.rows.iter().filter(|r| r.sum() != 1).count();
    report.checks.push(Check::from_outcome(
        CheckOutcome::equal("multiplicities_zero_or_one", bad, 0),
        ms,
    ));
    report.checks.push(Check::from_outcome(
        CheckOutcome::equal("row_sums_one", off, 0),
        ms,
    ));
    report.text = table.to_text();
    report.body = multiplicity_json(&table);
    Ok(report)
}

/// `χ_{V_j}` for the selected `j` (all when absent) and the irreducible
/// character table.
pub fn cmd_character(config: &RunConfig) -> Result<Report, ModelError> {
    let n = config.n;
    let mut report = Report::new(config);
    let classes = partitions_of(n);
    let labels: Vec<String> = classes.iter().map(|c| c.label()).collect();
    let started = Instant::now();
    let table = CharacterTable::new(n);
    let model: Vec<(usize, Vec<i64>)> = config
        .lengths()
        .into_iter()
        .map(|j| Ok((j, vj_character(n, j)?.iter().map(|(_, v)| v).collect())))
        .collect::<Result<_, ModelError>>()?;
    let ms = started.elapsed().as_millis();
    for (j, values) in &model {
        let dim = *values.last().expect("identity class present");
        report.checks.push(Check::from_outcome(
            CheckOutcome::equal(
                format!("chi_v{j}_at_identity"),
                dim as u64,
                involution_count(n, *j),
            ),
            ms,
        ));
    }

    let width = labels.iter().map(String::len).max().unwrap_or(0).max(8);
    let cell = table
        .values
        .iter()
        .flatten()
        .chain(model.iter().flat_map(|(_, v)| v))
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1)
        .max(labels.iter().map(String::len).max().unwrap_or(1));
    let header = {
        let mut h = format!("{:<width$}", "");
        for l in &labels {
            let _ = write!(h, " {l:>cell$}");
        }
        h
    };
    let mut text = format!("model characters\n{header}\n");
    for (j, values) in &model {
        let _ = write!(text, "{:<width$}", format!("V{j}"));
        for v in values {
            let _ = write!(text, " {v:>cell$}");
        }
        text.push('\n');
    }
    let _ = writeln!(text, "\nirreducible characters\n{header}");
    for (lambda, row) in table.partitions.iter().zip(&table.values) {
        let _ = write!(text, "{:<width$}", lambda.label());
        for v in row {
            let _ = write!(text, " {v:>cell$}");
        }
        text.push('\n');
    }
    report.text = text;
    report.body = json!({
        "classes": labels,
        "model": model.iter().map(|(j, v)| json!({ "j": j, "values": v })).collect::<Vec<_>>(),
        "irreducible": table
            .partitions
            .iter()
            .zip(&table.values)
            .map(|(l, v)| json!({ "lambda": l.label(), "values": v }))
            .collect::<Vec<_>>(),
    });
    Ok(report)
}
