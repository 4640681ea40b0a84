//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any failed.

use std::collections::HashMap;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use involution_model::{
    cocycle_check, count_partitions_with_odd_parts, dichotomy, end_dimension,
    enumerate_involutions, enumerate_signed_orbits, hom_basis, hom_dimension_by_linear_system,
    model_multiplicities, partitions_of, simultaneous_conjugator, vj_character, CharacterTable,
    IntIntertwiner, Involution, InvolutionBasis, PairStatus, Permutation, Rational64, Sign,
    SignedBasisMap,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(started: Instant, budget: Duration) -> Result<(), String> {
    let took = started.elapsed();
    ensure(took <= budget, || {
        format!("took {took:?}, budget {budget:?}")
    })
}

fn all_involutions(n: usize) -> Vec<Involution> {
    (0..=n / 2)
        .flat_map(|j| enumerate_involutions(n, j).unwrap())
        .collect()
}

/// Uniform element of `X_j` for a uniformly chosen `j`.
fn random_involution(n: usize, rng: &mut ChaCha8Rng) -> Involution {
    let j = rng.random_range(0..=n / 2);
    let pairs: Vec<(usize, usize)> = (0..j).map(|k| (2 * k + 1, 2 * k + 2)).collect();
    let base = Involution::new(n, &pairs).unwrap();
    base.conjugate_by(&Permutation::random(n, rng)).unwrap()
}

fn main_theorem() -> Outcome {
    let started = Instant::now();
    for n in 1..=10 {
        let table = model_multiplicities(n).map_err(|e| format!("n={n}: {e}"))?;
        ensure(table.rows.len() == partitions_of(n).len(), || {
            format!("n={n}: row count")
        })?;
        for row in &table.rows {
            ensure(row.multiplicities.iter().all(|&m| m == 0 || m == 1), || {
                format!("n={n} {}: {:?}", row.lambda, row.multiplicities)
            })?;
            ensure(row.sum() == 1, || {
                format!("n={n} {}: row sum {}", row.lambda, row.sum())
            })?;
        }
    }
    within(started, Duration::from_secs(60))?;
    Ok("n=1..10: every entry in {0,1}, every row sums to 1".into())
}

fn endomorphism_dimensions() -> Outcome {
    let started = Instant::now();
    for n in 1..=8 {
        let mut total = 0;
        for j in 0..=n / 2 {
            let dim = end_dimension(n, j).unwrap();
            let expected = count_partitions_with_odd_parts(n, n - 2 * j) as usize;
            ensure(dim == expected, || {
                format!("n={n} j={j}: {dim} vs {expected}")
            })?;
            total += dim;
        }
        let p = partitions_of(n).len();
        ensure(total == p, || format!("n={n}: sum {total} vs p(n) {p}"))?;
    }
    within(started, Duration::from_secs(60))?;
    Ok("n=1..8: dim End_G(V_j) = #partitions with n-2j odd parts; sums equal p(n)".into())
}

fn involution_degree_sum() -> Outcome {
    let started = Instant::now();
    let mut totals = Vec::new();
    for n in 1..=10 {
        let involutions: usize = (0..=n / 2)
            .map(|j| enumerate_involutions(n, j).unwrap().len())
            .sum();
        let degrees: i64 = CharacterTable::new(n).degrees().iter().sum();
        ensure(involutions as i64 == degrees, || {
            format!("n={n}: {involutions} involutions vs degree sum {degrees}")
        })?;
        totals.push(involutions);
    }
    within(started, Duration::from_secs(30))?;
    Ok(format!("n=1..10 totals {totals:?}"))
}

fn cocycle() -> Outcome {
    let mut checked = 0usize;
    for n in 1..=4 {
        let invs = all_involutions(n);
        for outer in Permutation::all(n) {
            for inner in Permutation::all(n) {
                for tau in &invs {
                    ensure(cocycle_check(&outer, &inner, tau).unwrap(), || {
                        format!("n={n}: fails at ({outer}, {inner}, {tau})")
                    })?;
                    checked += 1;
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for n in 5..=10 {
        for _ in 0..10_000 {
            let outer = Permutation::random(n, &mut rng);
            let inner = Permutation::random(n, &mut rng);
            let tau = random_involution(n, &mut rng);
            ensure(cocycle_check(&outer, &inner, &tau).unwrap(), || {
                format!("n={n}: fails at ({outer}, {inner}, {tau})")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} triples, 0 failures"))
}

fn representation_axiom() -> Outcome {
    let mut checked = 0usize;
    for n in 1..=5 {
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        for j in 0..=n / 2 {
            let basis = InvolutionBasis::new(n, j).unwrap();
            let maps: Vec<SignedBasisMap> = perms
                .iter()
                .map(|s| SignedBasisMap::new(s, &basis).unwrap())
                .collect();
            let index: HashMap<&Permutation, usize> =
                perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
            for (a, outer) in perms.iter().enumerate() {
                for (b, inner) in perms.iter().enumerate() {
                    let product = outer.compose(inner).unwrap();
                    let lhs = &maps[index[&product]];
                    let rhs = maps[a].after(&maps[b]).unwrap();
                    ensure(*lhs == rhs, || {
                        format!("n={n} j={j}: fails at ({outer}, {inner})")
                    })?;
                    checked += 1;
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for n in 6..=8 {
        let bases: Vec<Arc<InvolutionBasis>> = (0..=n / 2)
            .map(|j| InvolutionBasis::new(n, j).unwrap())
            .collect();
        for _ in 0..1000 {
            let outer = Permutation::random(n, &mut rng);
            let inner = Permutation::random(n, &mut rng);
            let product = outer.compose(&inner).unwrap();
            for basis in &bases {
                let lhs = SignedBasisMap::new(&product, basis).unwrap();
                let rhs = SignedBasisMap::new(&outer, basis)
                    .unwrap()
                    .after(&SignedBasisMap::new(&inner, basis).unwrap())
                    .unwrap();
                ensure(lhs == rhs, || {
                    format!("n={n} j={}: fails at ({outer}, {inner})", basis.length())
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (pair, j) checks, 0 failures"))
}

fn disjointness() -> Outcome {
    for n in 1..=7 {
        for j in 0..=n / 2 {
            for k in (0..=n / 2).filter(|&k| k != j) {
                let basis = hom_basis::<i64>(n, j, k).unwrap();
                ensure(basis.is_empty(), || {
                    format!("n={n}: Hom(V_{j}, V_{k}) has dim {}", basis.len())
                })?;
            }
        }
    }
    for n in 1..=8 {
        let chars: Vec<_> = (0..=n / 2).map(|j| vj_character(n, j).unwrap()).collect();
        for (j, a) in chars.iter().enumerate() {
            for (k, b) in chars.iter().enumerate().filter(|&(k, _)| k != j) {
                let ip = a.inner_product(b).unwrap();
                ensure(ip == Some(0), || {
                    format!("n={n}: <chi_V{j}, chi_V{k}> = {ip:?}")
                })?;
            }
        }
    }
    Ok("hom_basis empty for j != k (n <= 7); character inner products 0 (n <= 8)".into())
}

fn commutativity() -> Outcome {
    let mut matrices = 0;
    for n in 1..=7 {
        for j in 0..=n / 2 {
            let basis: Vec<IntIntertwiner> = hom_basis(n, j, j).unwrap();
            for m in &basis {
                ensure(m.is_symmetric(), || {
                    format!("n={n} j={j}: non-symmetric basis element")
                })?;
            }
            for (a, x) in basis.iter().enumerate() {
                for y in &basis[a + 1..] {
                    ensure(x.after(y).unwrap() == y.after(x).unwrap(), || {
                        format!("n={n} j={j}: basis elements do not commute")
                    })?;
                }
            }
            matrices += basis.len();
        }
    }
    Ok(format!(
        "{matrices} basis matrices symmetric and pairwise commuting (n <= 7)"
    ))
}

fn dichotomy_matches_search() -> Outcome {
    let mut pairs = 0;
    for n in 1..=6 {
        let invs = all_involutions(n);
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        for tau in &invs {
            let tau_centralizer: Vec<&Permutation> = perms
                .iter()
                .filter(|s| tau.conjugate_by(s).unwrap() == *tau)
                .collect();
            for kappa in &invs {
                let profile = dichotomy(tau, kappa).unwrap();
                let found = tau_centralizer.iter().any(|s| {
                    kappa.conjugate_by(s).unwrap() == *kappa
                        && involution_model::sign(s, tau).unwrap()
                            * involution_model::sign(s, kappa).unwrap()
                            == Sign::Minus
                });
                ensure(found == profile.status.is_witness(), || {
                    format!(
                        "n={n}: ({tau}, {kappa}) search={found} classifier={:?}",
                        profile.status
                    )
                })?;
                ensure(profile.validate(tau, kappa), || {
                    format!("n={n}: ({tau}, {kappa}) returned element does not validate")
                })?;
                if let PairStatus::Conjugator(lambda) = &profile.status {
                    ensure(lambda.to_permutation().is_involution(), || {
                        "conjugator not an involution".into()
                    })?;
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs, 0 mismatches"))
}

fn oracle_equivalence() -> Outcome {
    for n in 1..=6 {
        for j in 0..=n / 2 {
            let orbit = end_dimension(n, j).unwrap();
            let linear = hom_dimension_by_linear_system::<Rational64>(n, j, j).unwrap();
            ensure(orbit == linear, || {
                format!("n={n} j={j}: orbits {orbit} vs kernel {linear}")
            })?;
        }
    }
    for n in 1..=8 {
        let table = model_multiplicities(n).unwrap();
        for j in 0..=n / 2 {
            let squares: i64 = table.rows.iter().map(|r| r.multiplicities[j].pow(2)).sum();
            let dim = end_dimension(n, j).unwrap() as i64;
            ensure(squares == dim, || {
                format!("n={n} j={j}: sum m^2 = {squares} vs dim {dim}")
            })?;
        }
    }
    Ok(
        "orbit count = kernel dimension (n <= 6); sum of squared multiplicities = dim End (n <= 8)"
            .into(),
    )
}

fn connected_pairs_form_one_orbit() -> Outcome {
    let mut verified = 0;
    for n in 1..=6 {
        let j = n / 2;
        let atlas = enumerate_signed_orbits(n, j, j).unwrap();
        let mut orbit_of = HashMap::new();
        for (id, orbit) in atlas.orbits.iter().enumerate() {
            for &((a, b), _) in &orbit.members {
                orbit_of.insert((a, b), id);
            }
        }
        let connected: Vec<(usize, usize)> = (0..atlas.source.len())
            .flat_map(|a| (0..atlas.target.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| {
                dichotomy(atlas.source.get(a), atlas.target.get(b))
                    .unwrap()
                    .partition
                    .is_single_block()
            })
            .collect();
        ensure(!connected.is_empty(), || {
            format!("n={n}: no connected pairs")
        })?;
        let first_orbit = orbit_of[&connected[0]];
        ensure(connected.iter().all(|p| orbit_of[p] == first_orbit), || {
            format!("n={n}: connected equal-length pairs span several orbits")
        })?;
        for &(a1, b1) in &connected {
            for &(a2, b2) in &connected {
                let (t1, k1) = (atlas.source.get(a1), atlas.target.get(b1));
                let (t2, k2) = (atlas.source.get(a2), atlas.target.get(b2));
                let sigma = simultaneous_conjugator((t1, k1), (t2, k2))
                    .unwrap()
                    .ok_or_else(|| format!("n={n}: no conjugator ({t1},{k1}) -> ({t2},{k2})"))?;
                ensure(
                    t1.conjugate_by(&sigma).unwrap() == *t2
                        && k1.conjugate_by(&sigma).unwrap() == *k2,
                    || format!("n={n}: conjugator {sigma} does not verify"),
                )?;
                verified += 1;
            }
        }
    }
    Ok(format!("{verified} conjugators verified; one orbit per n"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "1 multiplicity one: table entries 0/1 with unit row sums",
            main_theorem,
        ),
        ("2 endomorphism dimensions", endomorphism_dimensions),
        (
            "3 involution count equals degree sum",
            involution_degree_sum,
        ),
        ("4 sign cocycle identity", cocycle),
        ("5 representation axiom", representation_axiom),
        ("6 disjointness", disjointness),
        ("7 symmetry and commutativity of End_G(V_j)", commutativity),
        ("8 dichotomy vs exhaustive search", dichotomy_matches_search),
        ("9 oracle equivalence", oracle_equivalence),
        (
            "10 connected equal-length pairs are simultaneously conjugate",
            connected_pairs_form_one_orbit,
        ),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let started = Instant::now();
        let outcome = run();
        let ms = started.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS  criterion {name} ({ms} ms): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {name} ({ms} ms): {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
