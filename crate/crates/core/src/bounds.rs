//! Spectral upper bounds on (distance-k) independence numbers: the
//! eigenvalue-count bound for a polynomial of the adjacency matrix, the
//! inertia bound, the Hoffman ratio bound for regular graphs, and the
//! Laplacian-based van Dam–Haemers bound.

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::Graph;
use crate::oracle::{alpha_k_exact_budgeted, OracleBudget};
use crate::spectra::{eigenvalues_sym, inertia_sym, laplacian, Spectrum, ZeroPolicy};
use crate::Result;

/// Real polynomial c_0 + c_1 x + … + c_k x^k. Never the zero polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coefficients: Vec<f64>,
}

impl Polynomial {
    pub fn new(coefficients: Vec<f64>) -> Result<Polynomial> {
        if coefficients.is_empty() {
            return Err(Error::InvalidPolynomial("no coefficients".into()));
        }
        if coefficients.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidPolynomial(
                "coefficients must be finite".into(),
            ));
        }
        if coefficients.iter().all(|&c| c == 0.0) {
            return Err(Error::InvalidPolynomial(
                "the zero polynomial has no spectral bound".into(),
            ));
        }
        Ok(Polynomial { coefficients })
    }

    /// x^k.
    pub fn monomial(k: u32) -> Polynomial {
        let mut coefficients = vec![0.0; k as usize + 1];
        coefficients[k as usize] = 1.0;
        Polynomial { coefficients }
    }

    /// Coefficients c_0..c_k, constant term first.
    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    /// Index of the last nonzero coefficient.
    pub fn degree(&self) -> u32 {
        self.coefficients
            .iter()
            .rposition(|&c| c != 0.0)
            .expect("polynomial is nonzero") as u32
    }

    pub fn evaluate(&self, x: f64) -> f64 {
        self.coefficients.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    fn integer_coefficients(&self) -> Option<Vec<i128>> {
        self.coefficients
            .iter()
            .map(|&c| {
                (c.fract() == 0.0 && c.abs() <= 2f64.powi(40)).then_some(c as i128)
            })
            .collect()
    }

    /// p(A) by Horner's rule on dense float matrices.
    pub fn apply(&self, a: &DMatrix<f64>) -> DMatrix<f64> {
        let n = a.nrows();
        let mut result = DMatrix::from_diagonal_element(
            n,
            n,
            *self.coefficients.last().expect("nonempty"),
        );
        for &c in self.coefficients.iter().rev().skip(1) {
            result *= a;
            for i in 0..n {
                result[(i, i)] += c;
            }
        }
        result
    }

    /// Diagonal of p(A) for an integer matrix, exactly, unless an
    /// intermediate overflows i128.
    fn integer_diagonal(&self, a: &[Vec<i64>]) -> Option<Vec<i128>> {
        let coeffs = self.integer_coefficients()?;
        let n = a.len();
        let mut result = vec![vec![0i128; n]; n];
        for (i, row) in result.iter_mut().enumerate() {
            row[i] = *coeffs.last().unwrap();
        }
        for &c in coeffs.iter().rev().skip(1) {
            let mut next = vec![vec![0i128; n]; n];
            for i in 0..n {
                for l in 0..n {
                    let r = result[i][l];
                    if r == 0 {
                        continue;
                    }
                    for j in 0..n {
                        let term = r.checked_mul(a[l][j] as i128)?;
                        next[i][j] = next[i][j].checked_add(term)?;
                    }
                }
                next[i][i] = next[i][i].checked_add(c)?;
            }
            result = next;
        }
        Some((0..n).map(|i| result[i][i]).collect())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Comma-separated coefficients, constant term first: "c0,c1,...,ck".
    fn from_str(s: &str) -> Result<Polynomial> {
        let coefficients: Vec<f64> = s
            .split(',')
            .map(|t| t.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| {
                Error::InvalidPolynomial(format!("cannot parse coefficients from '{s}'"))
            })?;
        Polynomial::new(coefficients)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coefficients.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Extreme diagonal entries of p(A): the fewest and most closed walks
/// weighted by p at any vertex.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WalkExtrema {
    /// min_u (p(A))_uu, written w(p).
    pub w: f64,
    /// max_u (p(A))_uu, written W(p).
    pub big_w: f64,
}

/// Which bound a report carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundName {
    Inertia,
    Polynomial,
    Hoffman,
    Vdh,
    WeightedInertia,
    Exact,
}

impl fmt::Display for BoundName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            BoundName::Inertia => "inertia",
            BoundName::Polynomial => "polynomial",
            BoundName::Hoffman => "hoffman",
            BoundName::Vdh => "vdh",
            BoundName::WeightedInertia => "weighted_inertia",
            BoundName::Exact => "exact",
        };
        f.write_str(name)
    }
}

/// Sizes of the two eigenvalue classes whose minimum is the polynomial
/// bound: {i : p(λ_i) ≥ w} and {i : p(λ_i) ≤ W}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenvalueCounts {
    pub ge_w: usize,
    #[serde(rename = "le_W")]
    pub le_big_w: usize,
}

/// One computed bound, ready for JSON output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    /// Graph identity as given by the caller; empty when unknown.
    pub graph: String,
    pub k: u32,
    pub bound: BoundName,
    pub value: f64,
    pub floor: i64,
    pub counts: Option<EigenvalueCounts>,
    /// Whether the bound meets the exact α_k; None when no oracle ran.
    pub tight: Option<bool>,
}

/// Floor with a snap: values within 1e-9 (relative) of an integer floor
/// to that integer, so eigensolver noise cannot push e.g. 4.0 down to 3.
fn snapped_floor(value: f64) -> i64 {
    let nearest = value.round();
    if (value - nearest).abs() <= 1e-9 * 1.0f64.max(value.abs()) {
        nearest as i64
    } else {
        value.floor() as i64
    }
}

fn report(bound: BoundName, k: u32, value: f64, counts: Option<EigenvalueCounts>) -> BoundReport {
    BoundReport {
        graph: String::new(),
        k,
        bound,
        value,
        floor: snapped_floor(value),
        counts,
        tight: None,
    }
}

/// Extreme diagonal entries of p(A). Integer polynomials on integer
/// adjacency go through exact integer arithmetic.
pub fn walk_extrema(g: &Graph, p: &Polynomial) -> WalkExtrema {
    if let Some(diag) = p.integer_diagonal(&g.adjacency_int()) {
        let w = *diag.iter().min().expect("n >= 1") as f64;
        let big_w = *diag.iter().max().expect("n >= 1") as f64;
        return WalkExtrema { w, big_w };
    }
    let m = p.apply(&g.adjacency());
    let mut w = f64::INFINITY;
    let mut big_w = f64::NEG_INFINITY;
    for i in 0..m.nrows() {
        w = w.min(m[(i, i)]);
        big_w = big_w.max(m[(i, i)]);
    }
    WalkExtrema { w, big_w }
}

fn count_sides(
    values: &[f64],
    extrema: &WalkExtrema,
    epsilon: f64,
) -> EigenvalueCounts {
    // Comparisons are inclusive: an eigenvalue mapping exactly onto w or
    // W must count, and floats need slack to honor that.
    let magnitude = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let tau = epsilon * 1.0f64.max(magnitude);
    let ge_w = values.iter().filter(|&&v| v >= extrema.w - tau).count();
    let le_big_w = values.iter().filter(|&&v| v <= extrema.big_w + tau).count();
    EigenvalueCounts { ge_w, le_big_w }
}

/// Eigenvalue-count bound: min(#{i : p(λ_i) ≥ w(p)}, #{i : p(λ_i) ≤ W(p)})
/// over the adjacency spectrum. Upper-bounds α_k for deg(p) ≤ k.
pub fn poly_spectral_bound(g: &Graph, p: &Polynomial, policy: &ZeroPolicy) -> Result<BoundReport> {
    let spectrum = eigenvalues_sym(&g.adjacency())?;
    let extrema = walk_extrema(g, p);
    let mapped: Vec<f64> = spectrum.values().iter().map(|&l| p.evaluate(l)).collect();
    let counts = count_sides(&mapped, &extrema, policy.epsilon);
    let value = counts.ge_w.min(counts.le_big_w);
    Ok(report(
        BoundName::Polynomial,
        p.degree(),
        value as f64,
        Some(counts),
    ))
}

/// Inertia bound n⁰ + min(n⁺, n⁻) for any Hermitian matrix; with the
/// adjacency matrix this is the p(x) = x polynomial bound.
pub fn inertia_bound(m: &DMatrix<f64>, policy: &ZeroPolicy) -> Result<BoundReport> {
    let inertia = inertia_sym(m, policy)?;
    let value = inertia.n_zero + inertia.n_plus.min(inertia.n_minus);
    let counts = EigenvalueCounts {
        ge_w: inertia.n_plus + inertia.n_zero,
        le_big_w: inertia.n_minus + inertia.n_zero,
    };
    Ok(report(BoundName::Inertia, 1, value as f64, Some(counts)))
}

fn adjacency_spectrum(g: &Graph) -> Result<Spectrum> {
    eigenvalues_sym(&g.adjacency())
}

/// Hoffman ratio bound n|λ_n|/(Δ + |λ_n|) for Δ-regular graphs, Δ ≥ 1.
pub fn hoffman_bound(g: &Graph) -> Result<BoundReport> {
    let delta = g
        .regularity()
        .ok_or_else(|| Error::NotRegular("ratio bound needs a regular graph".into()))?;
    if delta == 0 {
        return Err(Error::Degenerate(
            "ratio bound is undefined on edgeless graphs".into(),
        ));
    }
    let spectrum = adjacency_spectrum(g)?;
    let least = spectrum.smallest().abs();
    let value = g.n() as f64 * least / (delta as f64 + least);
    Ok(report(BoundName::Hoffman, 1, value, None))
}

/// Laplacian bound n(μ1 − δ)/μ1 with μ1 the largest Laplacian eigenvalue
/// and δ the minimum degree. Works for irregular graphs; coincides with
/// the ratio bound on regular ones.
pub fn vdh_bound(g: &Graph) -> Result<BoundReport> {
    if g.edge_count() == 0 {
        return Err(Error::Degenerate(
            "Laplacian bound is undefined on edgeless graphs".into(),
        ));
    }
    let mu1 = eigenvalues_sym(&laplacian(g))?.largest();
    let delta = g.min_degree() as f64;
    let value = g.n() as f64 * (mu1 - delta) / mu1;
    Ok(report(BoundName::Vdh, 1, value, None))
}

/// Every applicable bound for (g, k): inertia, the polynomial bound for
/// the supplied p (default x^k) when it differs from plain inertia,
/// Hoffman and van Dam–Haemers at k = 1, and the exact α_k when the
/// oracle budget allows. Tightness is flagged against the oracle.
pub fn bound_chain(
    g: &Graph,
    k: u32,
    p: Option<&Polynomial>,
    policy: &ZeroPolicy,
    budget: &OracleBudget,
) -> Result<Vec<BoundReport>> {
    if k == 0 {
        return Err(Error::InvalidGraph("distance parameter k must be >= 1".into()));
    }
    let default_poly;
    let poly = match p {
        Some(p) => p,
        None => {
            default_poly = Polynomial::monomial(k);
            &default_poly
        }
    };
    if poly.degree() > k {
        return Err(Error::InvalidPolynomial(format!(
            "degree {} polynomial cannot bound distance-{k} independence",
            poly.degree()
        )));
    }

    let mut reports = Vec::new();
    let mut inertia = inertia_bound(&g.adjacency(), policy)?;
    inertia.k = k;
    reports.push(inertia);

    let plain_x = poly.coefficients() == [0.0, 1.0];
    if !plain_x {
        let mut pr = poly_spectral_bound(g, poly, policy)?;
        pr.k = k;
        reports.push(pr);
    }
    if k == 1 {
        if g.regularity().unwrap_or(0) >= 1 {
            reports.push(hoffman_bound(g)?);
        }
        if g.edge_count() > 0 {
            reports.push(vdh_bound(g)?);
        }
    }

    match alpha_k_exact_budgeted(g, k, budget) {
        Ok((alpha, _)) => {
            for r in &mut reports {
                r.tight = Some(r.floor == alpha as i64);
            }
            let mut exact = report(BoundName::Exact, k, alpha as f64, None);
            exact.tight = Some(true);
            reports.push(exact);
        }
        Err(Error::BudgetExceeded { .. }) => {}
        Err(e) => return Err(e),
    }
    Ok(reports)
}

/// Small convenience search: p(x) = x^k + c·x for integer c in [-3, 3],
/// returning the polynomial with the smallest bound (ties to smaller |c|,
/// then negative c first).
pub fn grid_poly_bound(
    g: &Graph,
    k: u32,
    policy: &ZeroPolicy,
) -> Result<(Polynomial, BoundReport)> {
    if k == 0 {
        return Err(Error::InvalidGraph("distance parameter k must be >= 1".into()));
    }
    let mut best: Option<(Polynomial, BoundReport)> = None;
    for c in [0i32, -1, 1, -2, 2, -3, 3] {
        let mut coeffs = vec![0.0; k as usize + 1];
        coeffs[k as usize] = 1.0;
        if k >= 1 {
            coeffs[1] += c as f64;
        }
        let p = Polynomial::new(coeffs)?;
        let r = poly_spectral_bound(g, &p, policy)?;
        if best.as_ref().is_none_or(|(_, b)| r.value < b.value) {
            best = Some((p, r));
        }
    }
    Ok(best.expect("grid is nonempty"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, CatalogId};

    fn petersen() -> Graph {
        catalog(&CatalogId::Petersen).unwrap()
    }

    fn poly(coeffs: &[f64]) -> Polynomial {
        Polynomial::new(coeffs.to_vec()).unwrap()
    }

    #[test]
    fn polynomial_basics() {
        assert!(Polynomial::new(vec![]).is_err());
        assert!(Polynomial::new(vec![0.0, 0.0]).is_err());
        assert!(Polynomial::new(vec![1.0, f64::NAN]).is_err());
        let p: Polynomial = "0,1,2".parse().unwrap();
        assert_eq!(p.coefficients(), &[0.0, 1.0, 2.0]);
        assert_eq!(p.degree(), 2);
        assert_eq!(p.evaluate(3.0), 21.0);
        assert_eq!(Polynomial::monomial(2).evaluate(5.0), 25.0);
        assert_eq!(poly(&[0.0, 1.0, 0.0]).degree(), 1);
        assert!("1,,2".parse::<Polynomial>().is_err());
    }

    #[test]
    fn walk_extrema_petersen_square() {
        let e = walk_extrema(&petersen(), &Polynomial::monomial(2));
        assert_eq!((e.w, e.big_w), (3.0, 3.0));
    }

    #[test]
    fn walk_extrema_identity_polynomial() {
        for id in [CatalogId::Petersen, CatalogId::Path(4)] {
            let g = catalog(&id).unwrap();
            let e = walk_extrema(&g, &Polynomial::monomial(1));
            assert_eq!((e.w, e.big_w), (0.0, 0.0));
        }
    }

    #[test]
    fn walk_extrema_star() {
        let g = catalog(&CatalogId::CompleteBipartite(1, 3)).unwrap();
        let e = walk_extrema(&g, &Polynomial::monomial(2));
        assert_eq!((e.w, e.big_w), (1.0, 3.0));
    }

    #[test]
    fn petersen_square_bound_is_five() {
        let r = poly_spectral_bound(&petersen(), &Polynomial::monomial(2), &ZeroPolicy::default())
            .unwrap();
        assert_eq!(r.value, 5.0);
        assert_eq!(
            r.counts,
            Some(EigenvalueCounts {
                ge_w: 5,
                le_big_w: 5
            })
        );
    }

    #[test]
    fn petersen_square_plus_x_bound_is_one() {
        let r = poly_spectral_bound(&petersen(), &poly(&[0.0, 1.0, 1.0]), &ZeroPolicy::default())
            .unwrap();
        assert_eq!(r.value, 1.0);
        assert_eq!(
            r.counts,
            Some(EigenvalueCounts {
                ge_w: 1,
                le_big_w: 9
            })
        );
    }

    #[test]
    fn five_cycle_linear_bound_is_inertia() {
        let g = catalog(&CatalogId::Cycle(5)).unwrap();
        let r = poly_spectral_bound(&g, &Polynomial::monomial(1), &ZeroPolicy::default()).unwrap();
        assert_eq!(r.value, 2.0);
        let i = inertia_bound(&g.adjacency(), &ZeroPolicy::default()).unwrap();
        assert_eq!(i.value, 2.0);
        assert_eq!(r.counts, i.counts);
    }

    #[test]
    fn non_integer_coefficients_take_float_path() {
        let r = poly_spectral_bound(&petersen(), &poly(&[0.0, 0.5, 1.0]), &ZeroPolicy::default())
            .unwrap();
        // p(λ) = {10.5, 1.5×5, 3×4}, w = W = 3; λ = −2 sits exactly on W.
        assert_eq!(
            r.counts,
            Some(EigenvalueCounts {
                ge_w: 5,
                le_big_w: 9
            })
        );
        assert_eq!(r.value, 5.0);
    }

    #[test]
    fn inertia_bound_examples() {
        let cases = [
            (CatalogId::Petersen, 4.0),
            (CatalogId::Cycle(5), 2.0),
            (CatalogId::Empty(6), 6.0),
        ];
        for (id, want) in cases {
            let g = catalog(&id).unwrap();
            for policy in [ZeroPolicy::exact(), ZeroPolicy::tolerance(1e-9)] {
                let r = inertia_bound(&g.adjacency(), &policy).unwrap();
                assert_eq!(r.value, want, "{id}");
                assert_eq!(r.floor, want as i64);
            }
        }
    }

    #[test]
    fn hoffman_examples() {
        let r = hoffman_bound(&petersen()).unwrap();
        assert!((r.value - 4.0).abs() < 1e-9);
        assert_eq!(r.floor, 4);

        let k6 = catalog(&CatalogId::Complete(6)).unwrap();
        let r = hoffman_bound(&k6).unwrap();
        assert!((r.value - 1.0).abs() < 1e-9);

        let c5 = catalog(&CatalogId::Cycle(5)).unwrap();
        let r = hoffman_bound(&c5).unwrap();
        let phi = (1.0 + 5.0f64.sqrt()) / 2.0;
        assert!((r.value - 5.0 * phi / (2.0 + phi)).abs() < 1e-9);
        assert_eq!(r.floor, 2);
    }

    #[test]
    fn hoffman_rejects_irregular_and_edgeless() {
        let star = catalog(&CatalogId::CompleteBipartite(1, 3)).unwrap();
        assert!(matches!(hoffman_bound(&star), Err(Error::NotRegular(_))));
        let empty = catalog(&CatalogId::Empty(4)).unwrap();
        assert!(matches!(hoffman_bound(&empty), Err(Error::Degenerate(_))));
    }

    #[test]
    fn vdh_examples() {
        let r = vdh_bound(&petersen()).unwrap();
        assert!((r.value - 4.0).abs() < 1e-9);
        let k2 = catalog(&CatalogId::Complete(2)).unwrap();
        assert!((vdh_bound(&k2).unwrap().value - 1.0).abs() < 1e-12);
        let empty = catalog(&CatalogId::Empty(4)).unwrap();
        assert!(matches!(vdh_bound(&empty), Err(Error::Degenerate(_))));
    }

    #[test]
    fn vdh_matches_hoffman_on_regular_graphs() {
        for id in CatalogId::standard_corpus() {
            let g = catalog(&id).unwrap();
            if g.regularity().unwrap_or(0) < 1 {
                continue;
            }
            let h = hoffman_bound(&g).unwrap().value;
            let v = vdh_bound(&g).unwrap().value;
            assert!((h - v).abs() <= 1e-9, "{id}: hoffman {h} vs vdh {v}");
        }
    }

    #[test]
    fn chain_on_petersen_k1() {
        let chain = bound_chain(
            &petersen(),
            1,
            None,
            &ZeroPolicy::default(),
            &OracleBudget::default(),
        )
        .unwrap();
        let names: Vec<BoundName> = chain.iter().map(|r| r.bound).collect();
        assert_eq!(
            names,
            vec![
                BoundName::Inertia,
                BoundName::Hoffman,
                BoundName::Vdh,
                BoundName::Exact
            ]
        );
        for r in &chain {
            assert_eq!(r.floor, 4, "{}", r.bound);
            assert_eq!(r.tight, Some(true));
        }
    }

    #[test]
    fn chain_on_petersen_k2() {
        let chain = bound_chain(
            &petersen(),
            2,
            None,
            &ZeroPolicy::default(),
            &OracleBudget::default(),
        )
        .unwrap();
        let poly = chain
            .iter()
            .find(|r| r.bound == BoundName::Polynomial)
            .unwrap();
        assert_eq!(poly.value, 5.0);
        assert_eq!(poly.tight, Some(false));
        let exact = chain.iter().find(|r| r.bound == BoundName::Exact).unwrap();
        assert_eq!(exact.value, 1.0);
    }

    #[test]
    fn chain_on_empty_graph() {
        let g = catalog(&CatalogId::Empty(4)).unwrap();
        let chain = bound_chain(&g, 1, None, &ZeroPolicy::default(), &OracleBudget::default())
            .unwrap();
        let names: Vec<BoundName> = chain.iter().map(|r| r.bound).collect();
        assert_eq!(names, vec![BoundName::Inertia, BoundName::Exact]);
        assert!(chain.iter().all(|r| r.value == 4.0));
    }

    #[test]
    fn chain_without_oracle_budget_leaves_tightness_open() {
        let tiny = OracleBudget { max_vertices: 4 };
        let chain = bound_chain(&petersen(), 1, None, &ZeroPolicy::default(), &tiny).unwrap();
        assert!(chain.iter().all(|r| r.bound != BoundName::Exact));
        assert!(chain.iter().all(|r| r.tight.is_none()));
    }

    #[test]
    fn chain_rejects_overdegree_polynomial() {
        let p = Polynomial::monomial(3);
        let result = bound_chain(
            &petersen(),
            2,
            Some(&p),
            &ZeroPolicy::default(),
            &OracleBudget::default(),
        );
        assert!(matches!(result, Err(Error::InvalidPolynomial(_))));
    }

    #[test]
    fn grid_search_beats_or_matches_monomial() {
        let policy = ZeroPolicy::default();
        let (p, best) = grid_poly_bound(&petersen(), 2, &policy).unwrap();
        let plain = poly_spectral_bound(&petersen(), &Polynomial::monomial(2), &policy).unwrap();
        assert!(best.value <= plain.value);
        // x² + x achieves the optimum 1 here.
        assert_eq!(best.value, 1.0);
        assert_eq!(p.coefficients(), &[0.0, 1.0, 1.0]);
    }

    #[test]
    fn report_json_shape() {
        let mut r = poly_spectral_bound(
            &petersen(),
            &Polynomial::monomial(2),
            &ZeroPolicy::default(),
        )
        .unwrap();
        r.graph = "petersen".into();
        r.k = 2;
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"graph":"petersen","k":2,"bound":"polynomial","value":5.0,"floor":5,"counts":{"ge_w":5,"le_W":5},"tight":null}"#
        );
    }

    #[test]
    fn consistency_inertia_equals_linear_poly() {
        for id in CatalogId::standard_corpus() {
            let g = catalog(&id).unwrap();
            let a = inertia_bound(&g.adjacency(), &ZeroPolicy::default()).unwrap();
            let p =
                poly_spectral_bound(&g, &Polynomial::monomial(1), &ZeroPolicy::default()).unwrap();
            assert_eq!(a.value, p.value, "{id}");
        }
    }
}
