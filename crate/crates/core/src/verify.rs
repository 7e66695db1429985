//! Self-check suites run by `cayley verify`. Each suite cross-checks a closed
//! form or decision procedure against an independent computation.

use crate::cayley::{
    build_graph, build_prism, cubic_connection_sets, hamiltonian_witness, is_connected_bfs,
    is_connected_gcd, is_hamiltonian_cycle, ConnectionSet, CubicType,
};
use crate::classify::{
    classify_all, enumerate_classes, enumerate_cubic_sets, find_cayley_isomorphism, isomorphic,
    matches_known_table,
};
use crate::error::Result;
use crate::iso::brute_force_isomorphism;
use crate::number_theory::{
    count_classes, is_odd_prime, legendre, reciprocity_identities, roots_s2_minus_s_plus_1,
};
use crate::spectra::{cubic_closed_form, eigenvalues, evaluate_sorted, fingerprint};

/// Per-eigenvalue agreement required between closed forms and the eigensolver.
pub const SPECTRUM_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest prime (or `n`) exercised.
    pub p_max: u64,
    /// Primes above this skip the pairwise isomorphism suites.
    pub iso_ceiling: u64,
    /// `p_max` may not exceed this.
    pub formula_ceiling: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            p_max: 13,
            iso_ceiling: 13,
            formula_ceiling: 31,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Suite {
    name: &'static str,
    checked: usize,
    failures: Vec<String>,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(self) -> SuiteOutcome {
        SuiteOutcome {
            name: self.name,
            checked: self.checked,
            failures: self.failures,
        }
    }
}

pub fn odd_primes_up_to(limit: u64) -> Vec<u64> {
    (3..=limit).filter(|&p| is_odd_prime(p)).collect()
}

pub fn run_all(config: &VerifyConfig) -> Result<Vec<SuiteOutcome>> {
    Ok(vec![
        known_tables(config.p_max)?,
        count_formula(config.p_max)?,
        number_theory(config.p_max)?,
        connectivity(config.p_max)?,
        closed_form_spectra(config.p_max)?,
        prism_structure(config.p_max)?,
        hamiltonicity(config.p_max)?,
        grand_equivalence(config.p_max.min(config.iso_ceiling))?,
    ])
}

pub fn known_tables(p_max: u64) -> Result<SuiteOutcome> {
    let mut suite = Suite::new("class tables match known data");
    for p in odd_primes_up_to(p_max.min(23)) {
        let table = enumerate_classes(p)?;
        suite.check(matches_known_table(&table) == Some(true), || {
            format!("p={p}: classes differ from reference")
        });
    }
    Ok(suite.finish())
}

pub fn count_formula(p_max: u64) -> Result<SuiteOutcome> {
    let mut suite = Suite::new("count formula = enumeration");
    for p in odd_primes_up_to(p_max) {
        let report = count_classes(p)?;
        let table = enumerate_classes(p)?;
        suite.check(report.n_tilde == table.n_tilde(), || {
            format!(
                "p={p}: formula {} vs enumerated {}",
                report.n_tilde,
                table.n_tilde()
            )
        });
        suite.check(report.big_n_tilde == report.n_tilde + 1, || {
            format!("p={p}: N_tilde != n_tilde + 1")
        });
        let classes = classify_all(p)?.len() as u64;
        suite.check(classes == report.big_n_tilde, || {
            format!(
                "p={p}: classify_all found {classes}, formula {}",
                report.big_n_tilde
            )
        });
    }
    Ok(suite.finish())
}

pub fn number_theory(p_max: u64) -> Result<SuiteOutcome> {
    let mut suite = Suite::new("Legendre symbols and reciprocity");
    let primes = odd_primes_up_to(p_max);
    for &p in &primes {
        let squares: Vec<bool> = {
            let mut sq = vec![false; p as usize];
            for x in 1..p {
                sq[(x * x % p) as usize] = true;
            }
            sq
        };
        for a in 0..p {
            let expected = if a == 0 {
                0
            } else if squares[a as usize] {
                1
            } else {
                -1
            };
            suite.check(legendre(a as i64, p)?.as_i8() == expected, || {
                format!("({a}/{p}) disagrees with squares")
            });
        }
        for &q in &primes {
            if q != p {
                suite.check(reciprocity_identities(p, q)?.all(), || {
                    format!("identities fail for p={p}, q={q}")
                });
            }
        }
        if p >= 5 {
            let roots = roots_s2_minus_s_plus_1(p)?;
            suite.check(roots.is_some() == (p % 6 == 1), || {
                format!("p={p}: root existence does not follow p mod 6")
            });
            let table = enumerate_classes(p)?;
            let pairs: Vec<_> = table.classes.iter().filter(|c| c.size == 2).collect();
            let matches = match (roots, pairs.as_slice()) {
                (Some((r0, r1)), [only]) => only.members == vec![r0.value(), r1.value()],
                (None, []) => true,
                _ => false,
            };
            suite.check(matches, || {
                format!("p={p}: size-2 class is not the root pair")
            });
        }
    }
    Ok(suite.finish())
}

pub fn connectivity(n_max: u64) -> Result<SuiteOutcome> {
    let mut suite = Suite::new("gcd connectivity = BFS");
    for n in 3..=n_max {
        for set in cubic_connection_sets(n)? {
            let by_gcd = is_connected_gcd(&set)?;
            let by_bfs = is_connected_bfs(build_graph(&set).graph());
            suite.check(by_gcd == by_bfs, || {
                format!("n={n} {set}: gcd {by_gcd}, BFS {by_bfs}")
            });
        }
    }
    Ok(suite.finish())
}

pub fn closed_form_spectra(n_max: u64) -> Result<SuiteOutcome> {
    let mut suite = Suite::new("closed-form spectra = Jacobi eigensolve");
    for n in 3..=n_max {
        for set in cubic_connection_sets(n)? {
            let formula = evaluate_sorted(&cubic_closed_form(&set)?);
            let numeric = eigenvalues(build_graph(&set).graph());
            let worst = formula
                .iter()
                .zip(&numeric)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            suite.check(
                formula.len() == numeric.len() && worst <= SPECTRUM_TOLERANCE,
                || format!("n={n} {set}: max deviation {worst:e}"),
            );
        }
    }
    Ok(suite.finish())
}

pub fn prism_structure(n_max: u64) -> Result<SuiteOutcome> {
    let mut suite = Suite::new("connected type-I graphs are prisms");
    for n in 3..=n_max {
        let prism = build_prism(n)?;
        for set in cubic_connection_sets(n)? {
            if matches!(set.cubic_type(), Some(CubicType::TypeI { .. })) && is_connected_gcd(&set)?
            {
                let iso = brute_force_isomorphism(build_graph(&set).graph(), &prism).is_some();
                suite.check(iso, || format!("n={n} {set} is not C_n x K_2"));
            }
        }
    }
    Ok(suite.finish())
}

pub fn hamiltonicity(p_max: u64) -> Result<SuiteOutcome> {
    let mut suite = Suite::new("hamiltonian witnesses");
    for p in odd_primes_up_to(p_max) {
        for set in enumerate_cubic_sets(p)? {
            let graph = build_graph(&set);
            let ok = hamiltonian_witness(&set).is_ok_and(|cycle| {
                let idx: Vec<usize> = cycle.iter().map(|x| x.index(p)).collect();
                is_hamiltonian_cycle(graph.graph(), &idx)
            });
            suite.check(ok, || format!("p={p} {set}: no valid witness"));
        }
    }
    Ok(suite.finish())
}

/// Partition of `sets` into isomorphism classes by the brute-force oracle,
/// comparing each set against one representative per class found so far.
pub fn oracle_partition(sets: &[ConnectionSet]) -> Vec<usize> {
    let graphs: Vec<_> = sets.iter().map(build_graph).collect();
    let mut representatives: Vec<usize> = Vec::new();
    let mut class = Vec::with_capacity(sets.len());
    for (i, g) in graphs.iter().enumerate() {
        let found = representatives
            .iter()
            .position(|&r| brute_force_isomorphism(graphs[r].graph(), g.graph()).is_some());
        class.push(found.unwrap_or_else(|| {
            representatives.push(i);
            representatives.len() - 1
        }));
    }
    class
}

/// Cospectrality, automorphism witnesses, the oracle and the closed-form
/// decision agree on every pair of cubic sets.
pub fn grand_equivalence(p_max: u64) -> Result<SuiteOutcome> {
    let mut suite = Suite::new("cospectral = Cayley-isomorphic = isomorphic");
    for p in odd_primes_up_to(p_max) {
        let sets = enumerate_cubic_sets(p)?;
        let prints: Vec<_> = sets.iter().map(fingerprint).collect();
        let oracle = oracle_partition(&sets);
        for i in 0..sets.len() {
            for j in i..sets.len() {
                let spectral = prints[i] == prints[j];
                let witness = find_cayley_isomorphism(&sets[i], &sets[j])?.is_some();
                let by_oracle = oracle[i] == oracle[j];
                let decided = isomorphic(&sets[i], &sets[j], p)?;
                suite.check(
                    spectral == witness && witness == by_oracle && by_oracle == decided,
                    || {
                        format!(
                            "p={p} {} vs {}: cospectral {spectral}, witness {witness}, \
                             oracle {by_oracle}, isomorphic {decided}",
                            sets[i], sets[j]
                        )
                    },
                );
            }
        }
    }
    Ok(suite.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let config = VerifyConfig {
            p_max: 7,
            ..VerifyConfig::default()
        };
        for outcome in run_all(&config).unwrap() {
            assert!(outcome.passed(), "{}: {:?}", outcome.name, outcome.failures);
            assert!(outcome.checked > 0, "{} checked nothing", outcome.name);
        }
    }
}
