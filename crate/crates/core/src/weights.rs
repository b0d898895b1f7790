//! Edge weightings of a graph: random Hermitian weight matrices with
//! the adjacency support pattern, the weighted inertia bound, a
//! restart-based hill-climbing search for weightings that make the
//! bound meet α, and the zero-pattern property of polynomials applied
//! to weighted adjacency matrices.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use nalgebra::{Complex, DMatrix};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{BoundName, BoundReport, EigenvalueCounts};
use crate::error::Error;
use crate::graph::Graph;
use crate::oracle::{alpha_exact_budgeted, OracleBudget};
use crate::spectra::{self, eigenvalues_hermitian, Inertia, ZeroPolicy};
use crate::Result;

type CMat = DMatrix<Complex<f64>>;

/// Scalar field the weights are drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum WeightField {
    #[serde(rename = "real-symmetric")]
    RealSymmetric,
    #[serde(rename = "hermitian")]
    Hermitian,
}

impl fmt::Display for WeightField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightField::RealSymmetric => f.write_str("real-symmetric"),
            WeightField::Hermitian => f.write_str("hermitian"),
        }
    }
}

impl FromStr for WeightField {
    type Err = Error;
    fn from_str(s: &str) -> Result<WeightField> {
        match s {
            "real" | "real-symmetric" => Ok(WeightField::RealSymmetric),
            "hermitian" | "complex" => Ok(WeightField::Hermitian),
            other => Err(Error::PatternViolation(format!(
                "unknown weight field '{other}'"
            ))),
        }
    }
}

/// A Hermitian matrix supported on the edges of a graph, with zero
/// diagonal: the entrywise product of some Hermitian H with the
/// adjacency matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "WeightJson", into = "WeightJson")]
pub struct WeightMatrix {
    field: WeightField,
    matrix: CMat,
    support: BTreeSet<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct WeightJson {
    field: WeightField,
    n: usize,
    matrix: Vec<Vec<[f64; 2]>>,
}

impl TryFrom<WeightJson> for WeightMatrix {
    type Error = Error;
    fn try_from(json: WeightJson) -> Result<WeightMatrix> {
        let n = json.n;
        if json.matrix.len() != n || json.matrix.iter().any(|row| row.len() != n) {
            return Err(Error::PatternViolation(format!(
                "weight matrix must be {n}x{n}"
            )));
        }
        let matrix = DMatrix::from_fn(n, n, |i, j| {
            Complex::new(json.matrix[i][j][0], json.matrix[i][j][1])
        });
        let support = nonzero_offdiagonal(&matrix);
        WeightMatrix::with_support(json.field, matrix, support)
    }
}

impl From<WeightMatrix> for WeightJson {
    fn from(w: WeightMatrix) -> WeightJson {
        let n = w.matrix.nrows();
        WeightJson {
            field: w.field,
            n,
            matrix: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| [w.matrix[(i, j)].re, w.matrix[(i, j)].im])
                        .collect()
                })
                .collect(),
        }
    }
}

fn nonzero_offdiagonal(m: &CMat) -> BTreeSet<(usize, usize)> {
    let mut support = BTreeSet::new();
    for i in 0..m.nrows() {
        for j in i + 1..m.ncols() {
            if m[(i, j)] != Complex::new(0.0, 0.0) {
                support.insert((i, j));
            }
        }
    }
    support
}

impl WeightMatrix {
    /// Validates all invariants against the graph's edge set.
    pub fn new(g: &Graph, field: WeightField, matrix: CMat) -> Result<WeightMatrix> {
        if matrix.nrows() != g.n() || matrix.ncols() != g.n() {
            return Err(Error::PatternViolation(format!(
                "weight matrix is {}x{} but the graph has {} vertices",
                matrix.nrows(),
                matrix.ncols(),
                g.n()
            )));
        }
        WeightMatrix::with_support(field, matrix, g.edges().collect())
    }

    fn with_support(
        field: WeightField,
        matrix: CMat,
        support: BTreeSet<(usize, usize)>,
    ) -> Result<WeightMatrix> {
        spectra::check_hermitian(&matrix)?;
        let w = WeightMatrix {
            field,
            matrix,
            support,
        };
        w.check_pattern()?;
        Ok(w)
    }

    fn check_pattern(&self) -> Result<()> {
        let n = self.matrix.nrows();
        for i in 0..n {
            if self.matrix[(i, i)] != Complex::new(0.0, 0.0) {
                return Err(Error::PatternViolation(format!(
                    "diagonal entry {i} must be zero"
                )));
            }
            for j in i + 1..n {
                let z = self.matrix[(i, j)];
                if z != Complex::new(0.0, 0.0) && !self.support.contains(&(i, j)) {
                    return Err(Error::PatternViolation(format!(
                        "entry ({i},{j}) is nonzero but ({i},{j}) is not an edge"
                    )));
                }
                if self.field == WeightField::RealSymmetric && z.im != 0.0 {
                    return Err(Error::PatternViolation(format!(
                        "entry ({i},{j}) has imaginary part in the real-symmetric field"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> WeightField {
        self.field
    }

    pub fn matrix(&self) -> &CMat {
        &self.matrix
    }

    pub fn n(&self) -> usize {
        self.matrix.nrows()
    }
}

/// The adjacency matrix itself as a weighting (all weights 1).
pub fn adjacency_weighting(g: &Graph) -> WeightMatrix {
    let a = g.adjacency().map(|x| Complex::new(x, 0.0));
    WeightMatrix::new(g, WeightField::RealSymmetric, a).expect("adjacency fits its own pattern")
}

fn sample_weights(g: &Graph, rng: &mut ChaCha8Rng, field: WeightField) -> CMat {
    let n = g.n();
    let mut m: CMat = DMatrix::zeros(n, n);
    for (u, v) in g.edges() {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = match field {
            WeightField::RealSymmetric => 0.0,
            WeightField::Hermitian => rng.sample(StandardNormal),
        };
        m[(u, v)] = Complex::new(re, im);
        m[(v, u)] = Complex::new(re, -im);
    }
    m
}

/// Independent standard normal weights on every edge, symmetrized;
/// deterministic per seed.
pub fn random_weighting(g: &Graph, seed: u64, field: WeightField) -> WeightMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = sample_weights(g, &mut rng, field);
    WeightMatrix::new(g, field, m).expect("sampled weights fit the edge pattern")
}

fn inertia_to_report(inertia: &Inertia) -> BoundReport {
    let bound = inertia.n_zero + inertia.n_plus.min(inertia.n_minus);
    BoundReport {
        graph: String::new(),
        k: 1,
        bound: BoundName::WeightedInertia,
        value: bound as f64,
        floor: bound as i64,
        counts: Some(EigenvalueCounts {
            ge_w: inertia.n_plus + inertia.n_zero,
            le_big_w: inertia.n_minus + inertia.n_zero,
        }),
        tight: None,
    }
}

/// n⁰ + min(n⁺, n⁻) of the weight matrix.
pub fn weighted_inertia_bound(w: &WeightMatrix, policy: &ZeroPolicy) -> Result<BoundReport> {
    w.check_pattern()?;
    let inertia = spectra::inertia(&w.matrix, policy)?;
    Ok(inertia_to_report(&inertia))
}

/// Rounds every entry to the nearest multiple of 1/10000 and computes
/// the inertia bound of the rounded matrix in exact rational arithmetic.
/// This is the same re-verification the search applies before claiming
/// a weighting is tight. None when an entry is not finite or too large
/// for the grid.
pub fn exact_grid_inertia_bound(w: &WeightMatrix) -> Option<usize> {
    exact_grid_bound(&w.matrix).map(|(bound, _)| bound)
}

fn default_restarts() -> usize {
    20
}
fn default_iterations() -> usize {
    200
}
fn default_steps() -> Vec<f64> {
    vec![1.0, 0.25, 0.05]
}
fn default_field() -> WeightField {
    WeightField::RealSymmetric
}

/// Knobs for the tight-weighting search.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    #[serde(default = "default_restarts")]
    pub restarts: usize,
    /// Hill-climbing steps per restart.
    #[serde(default = "default_iterations")]
    pub iterations: usize,
    /// Perturbation scale phases, applied in equal thirds of the run.
    #[serde(default = "default_steps")]
    pub step_schedule: Vec<f64>,
    #[serde(default = "default_field")]
    pub field: WeightField,
    #[serde(default)]
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> SearchConfig {
        SearchConfig {
            restarts: default_restarts(),
            iterations: default_iterations(),
            step_schedule: default_steps(),
            field: default_field(),
            seed: 0,
        }
    }
}

/// Outcome of search_tight_weights.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub weights: WeightMatrix,
    /// Best weighted inertia bound found; never below target.
    pub bound: usize,
    /// Exact α from the oracle.
    pub target: usize,
    /// True only when a candidate re-verified under exact arithmetic.
    pub tight: bool,
    /// Hill-climbing steps evaluated, summed over restarts.
    pub iterations: usize,
    pub seed: u64,
}

/// Search tolerance for classifying eigenvalues as zero.
const SEARCH_EPSILON: f64 = 1e-9;

/// Weight grid used before exact re-verification.
const GRID_DENOMINATOR: i64 = 10_000;

/// Bound plus a tiebreak: among equal bounds, smaller total magnitude
/// of the zero-classified eigenvalues is better, pulling borderline
/// eigenvalues toward genuine zeros.
fn objective(m: &CMat) -> Result<(usize, f64)> {
    let spectrum = eigenvalues_hermitian(m)?;
    let cutoff = SEARCH_EPSILON * 1.0f64.max(spectrum.spectral_radius());
    let mut plus = 0usize;
    let mut zero = 0usize;
    let mut minus = 0usize;
    let mut surrogate = 0.0f64;
    for &lambda in spectrum.values() {
        if lambda.abs() <= cutoff {
            zero += 1;
            surrogate += lambda.abs();
        } else if lambda > 0.0 {
            plus += 1;
        } else {
            minus += 1;
        }
    }
    Ok((zero + plus.min(minus), surrogate))
}

/// Rounds the candidate to the rational grid and recomputes its
/// inertia bound in exact rational arithmetic. The exact value is the
/// one a tight claim may rest on; a floating zero decision is not.
fn exact_grid_bound(m: &CMat) -> Option<(usize, CMat)> {
    use crate::spectra::exact::{inertia_of_cells, C};
    let n = m.nrows();
    let denom = BigInt::from(GRID_DENOMINATOR);
    let mut rounded: CMat = DMatrix::zeros(n, n);
    let mut cells = vec![vec![C::zero(); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let re = (m[(i, j)].re * GRID_DENOMINATOR as f64).round();
            let im = (m[(i, j)].im * GRID_DENOMINATOR as f64).round();
            if !re.is_finite() || !im.is_finite() || re.abs() > 1e15 || im.abs() > 1e15 {
                return None;
            }
            rounded[(i, j)] = Complex::new(
                re / GRID_DENOMINATOR as f64,
                im / GRID_DENOMINATOR as f64,
            );
            rounded[(j, i)] = rounded[(i, j)].conj();
            let re_q = BigRational::new(BigInt::from(re as i64), denom.clone());
            let im_q = BigRational::new(BigInt::from(im as i64), denom.clone());
            cells[i][j] = Complex::new(re_q.clone(), im_q.clone());
            cells[j][i] = Complex::new(re_q, -im_q);
        }
    }
    let inertia = inertia_of_cells(cells);
    Some((inertia.n_zero + inertia.n_plus.min(inertia.n_minus), rounded))
}

struct RestartOutcome {
    bound: usize,
    weights: CMat,
    tight: bool,
    iterations: usize,
}

fn run_restart(
    g: &Graph,
    config: &SearchConfig,
    restart: usize,
    target: usize,
    edges: &[(usize, usize)],
) -> Result<RestartOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(restart as u64);
    let mut current = if restart == 0 {
        g.adjacency().map(|x| Complex::new(x, 0.0))
    } else {
        sample_weights(g, &mut rng, config.field)
    };

    let mut best_bound = usize::MAX;
    let mut best_weights = current.clone();
    let mut outcome_tight = None;
    let mut iterations = 0usize;

    let mut consider = |m: &CMat, bound: usize| -> Result<Option<CMat>> {
        if bound < target {
            return Err(Error::Invariant(format!(
                "weighted bound {bound} fell below exact independence number {target}"
            )));
        }
        if bound == target {
            // The float classification claims tightness; the claim
            // stands or falls with the exact bound of the rounded
            // candidate.
            if let Some((exact, rounded)) = exact_grid_bound(m) {
                if exact < target {
                    return Err(Error::Invariant(format!(
                        "exact weighted bound {exact} fell below exact independence number {target}"
                    )));
                }
                if exact == target {
                    return Ok(Some(rounded));
                }
                if exact < best_bound {
                    best_bound = exact;
                    best_weights = rounded;
                }
            }
        } else if bound < best_bound {
            best_bound = bound;
            best_weights = m.clone();
        }
        Ok(None)
    };

    let (mut cur_bound, mut cur_surrogate) = objective(&current)?;
    if let Some(rounded) = consider(&current, cur_bound)? {
        outcome_tight = Some(rounded);
    }

    let phases = &config.step_schedule;
    if outcome_tight.is_none() && !edges.is_empty() {
        for iter in 0..config.iterations {
            let step = if phases.is_empty() {
                1.0
            } else {
                phases[(iter * phases.len()) / config.iterations.max(1)]
            };
            let (u, v) = edges[rng.random_range(0..edges.len())];
            let saved = current[(u, v)];
            let dre: f64 = rng.sample(StandardNormal);
            let dim: f64 = match config.field {
                WeightField::RealSymmetric => 0.0,
                WeightField::Hermitian => rng.sample(StandardNormal),
            };
            let next = saved + Complex::new(step * dre, step * dim);
            current[(u, v)] = next;
            current[(v, u)] = next.conj();
            iterations += 1;

            let (bound, surrogate) = objective(&current)?;
            if let Some(rounded) = consider(&current, bound)? {
                outcome_tight = Some(rounded);
                break;
            }
            if (bound, surrogate) < (cur_bound, cur_surrogate) {
                cur_bound = bound;
                cur_surrogate = surrogate;
            } else {
                current[(u, v)] = saved;
                current[(v, u)] = saved.conj();
            }
        }
    }

    Ok(match outcome_tight {
        Some(rounded) => RestartOutcome {
            bound: target,
            weights: rounded,
            tight: true,
            iterations,
        },
        None => RestartOutcome {
            bound: best_bound,
            weights: best_weights,
            tight: false,
            iterations,
        },
    })
}

/// Random restarts plus coordinate-wise Gaussian hill climbing on the
/// weighted inertia bound. Restart 0 starts from the adjacency matrix,
/// later restarts from fresh random weightings. A claim of tightness
/// requires the exact rational bound of the grid-rounded candidate to
/// equal α; floating candidates that fail that re-verification are
/// discarded. Restarts run in parallel on independent RNG streams, so
/// the result does not depend on scheduling.
pub fn search_tight_weights(g: &Graph, config: &SearchConfig) -> Result<SearchResult> {
    let (target, _) = alpha_exact_budgeted(g, &OracleBudget::default())?;
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let restarts = config.restarts.max(1);

    let outcomes: Vec<Result<RestartOutcome>> = (0..restarts)
        .into_par_iter()
        .map(|restart| run_restart(g, config, restart, target, &edges))
        .collect();

    let mut best: Option<RestartOutcome> = None;
    let mut iterations = 0usize;
    for outcome in outcomes {
        let outcome = outcome?;
        iterations += outcome.iterations;
        let better = match &best {
            None => true,
            Some(b) => (outcome.bound, !outcome.tight) < (b.bound, !b.tight),
        };
        if better {
            best = Some(outcome);
        }
    }
    let best = best.expect("at least one restart");
    let weights = WeightMatrix::new(g, config.field, best.weights)?;
    Ok(SearchResult {
        weights,
        bound: best.bound,
        target,
        tight: best.tight,
        iterations,
        seed: config.seed,
    })
}

fn apply_complex(p: &crate::bounds::Polynomial, m: &CMat) -> CMat {
    let n = m.nrows();
    let coeffs = p.coefficients();
    let mut result: CMat = DMatrix::from_diagonal_element(
        n,
        n,
        Complex::new(*coeffs.last().expect("nonempty"), 0.0),
    );
    for &c in coeffs.iter().rev().skip(1) {
        result *= m;
        for i in 0..n {
            result[(i, i)] += Complex::new(c, 0.0);
        }
    }
    result
}

/// Whether every exact off-diagonal zero of p(A) stays (numerically)
/// zero in p(H∘A). The unweighted side runs in exact arithmetic:
/// integer walk counts combined with the exact rational values of the
/// coefficients, so a zero is a true zero, not a floating one.
pub fn hadamard_zero_pattern_check(
    g: &Graph,
    h: &WeightMatrix,
    p: &crate::bounds::Polynomial,
) -> bool {
    let n = g.n();
    let deg = p.degree() as usize;
    let adjacency = g.adjacency_int();

    // Walk-count matrices A^1 .. A^deg in exact integers.
    let mut powers: Vec<Vec<Vec<i128>>> = Vec::with_capacity(deg);
    let mut last: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect();
    for _ in 0..deg {
        let mut next = vec![vec![0i128; n]; n];
        for i in 0..n {
            for l in 0..n {
                let x = last[i][l];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    next[i][j] += x * adjacency[l][j] as i128;
                }
            }
        }
        powers.push(next.clone());
        last = next;
    }

    let coeffs: Vec<BigRational> = p
        .coefficients()
        .iter()
        .map(|&c| BigRational::from_float(c).expect("coefficients are finite"))
        .collect();

    let weighted = apply_complex(p, h.matrix());
    let tol = 1e-8 * frobenius(h.matrix()) * (n * n) as f64;

    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            // Off-diagonal entries ignore the constant term.
            let mut exact = BigRational::zero();
            for (m, power) in powers.iter().enumerate() {
                if let Some(c) = coeffs.get(m + 1) {
                    exact += c * BigRational::from_integer(BigInt::from(power[u][v]));
                }
            }
            if exact.is_zero() && weighted[(u, v)].norm() > tol {
                return false;
            }
        }
    }
    true
}

fn frobenius(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}
