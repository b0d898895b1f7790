//! Projective-packing and quantum-independence certificates: JSON
//! (de)serialization, projector validation, trace-orthogonality
//! condition checks, the rank-one lift of classical independent sets,
//! and the trace-versus-eigenvector orthogonality equivalence.

use std::collections::BTreeMap;

use nalgebra::{Complex, DMatrix};
use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{distance_matrix, Graph};
use crate::oracle::{verify_independent_set, IndependentSetCert};
use crate::Result;

/// Default certificate tolerance; residuals are relative to max(1, ‖·‖_F).
pub const DEFAULT_CERT_TOL: f64 = 1e-8;

pub const COND_PROJECTOR: &str = "projector";
pub const COND_PACKING_ORTHOGONALITY: &str = "packing_orthogonality";
pub const COND_SUM_IDENTITY: &str = "sum_identity";
pub const COND_VERTEX_ORTHOGONALITY: &str = "vertex_orthogonality";
pub const COND_PAIR_ORTHOGONALITY: &str = "pair_orthogonality";

type CMat = DMatrix<Complex<f64>>;

/// One failed condition: which, where, and by how much.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub condition: String,
    pub indices: Vec<usize>,
    pub residual: f64,
}

/// Reduced fraction for JSON output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalValue {
    pub numerator: i64,
    pub denominator: i64,
}

impl From<Rational64> for RationalValue {
    fn from(r: Rational64) -> RationalValue {
        RationalValue {
            numerator: *r.numer(),
            denominator: *r.denom(),
        }
    }
}

impl RationalValue {
    pub fn to_f64(self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }
}

/// Outcome of a certificate verification.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
    /// Packing value Σ rank / d, or the claimed size t for quantum
    /// certificates; absent when ranks could not be established.
    pub value: Option<RationalValue>,
}

impl VerificationReport {
    fn from_violations(violations: Vec<Violation>, value: Option<RationalValue>) -> Self {
        VerificationReport {
            valid: violations.is_empty(),
            violations,
            value,
        }
    }
}

fn matrix_to_json(m: &CMat) -> Vec<Vec<[f64; 2]>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
        .collect()
}

fn matrix_from_json(rows: &[Vec<[f64; 2]>], d: usize, what: &str) -> Result<CMat> {
    if rows.len() != d || rows.iter().any(|r| r.len() != d) {
        return Err(Error::MalformedCertificate(format!(
            "{what}: expected a {d}x{d} matrix"
        )));
    }
    Ok(DMatrix::from_fn(d, d, |i, j| {
        Complex::new(rows[i][j][0], rows[i][j][1])
    }))
}

fn vertex_key(key: &str) -> Result<usize> {
    key.parse::<usize>().map_err(|_| {
        Error::MalformedCertificate(format!("projector key '{key}' is not a vertex index"))
    })
}

/// A family of projectors, one per vertex, claiming trace-orthogonality
/// across all pairs at distance 1..=k.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PackingJson", into = "PackingJson")]
pub struct PackingCertificate {
    pub d: usize,
    pub k: u32,
    projectors: BTreeMap<usize, CMat>,
}

#[derive(Serialize, Deserialize)]
struct PackingJson {
    d: usize,
    k: u32,
    projectors: BTreeMap<String, Vec<Vec<[f64; 2]>>>,
}

impl TryFrom<PackingJson> for PackingCertificate {
    type Error = Error;
    fn try_from(json: PackingJson) -> Result<PackingCertificate> {
        let mut projectors = BTreeMap::new();
        for (key, rows) in &json.projectors {
            let u = vertex_key(key)?;
            let m = matrix_from_json(rows, json.d, &format!("projector {u}"))?;
            projectors.insert(u, m);
        }
        PackingCertificate::new(json.d, json.k, projectors)
    }
}

impl From<PackingCertificate> for PackingJson {
    fn from(cert: PackingCertificate) -> PackingJson {
        PackingJson {
            d: cert.d,
            k: cert.k,
            projectors: cert
                .projectors
                .iter()
                .map(|(u, m)| (u.to_string(), matrix_to_json(m)))
                .collect(),
        }
    }
}

impl PackingCertificate {
    pub fn new(d: usize, k: u32, projectors: BTreeMap<usize, CMat>) -> Result<Self> {
        if d == 0 {
            return Err(Error::MalformedCertificate("dimension d must be >= 1".into()));
        }
        for (u, m) in &projectors {
            if m.nrows() != d || m.ncols() != d {
                return Err(Error::MalformedCertificate(format!(
                    "projector {u} is {}x{}, expected {d}x{d}",
                    m.nrows(),
                    m.ncols()
                )));
            }
        }
        Ok(PackingCertificate { d, k, projectors })
    }

    pub fn projectors(&self) -> &BTreeMap<usize, CMat> {
        &self.projectors
    }
}

/// Projectors indexed by (vertex, slot i in [t]) claiming the three
/// quantum k-independence conditions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "QuantumJson", into = "QuantumJson")]
pub struct QuantumCertificate {
    pub d: usize,
    pub k: u32,
    pub t: usize,
    projectors: BTreeMap<usize, Vec<CMat>>,
}

#[derive(Serialize, Deserialize)]
struct QuantumJson {
    d: usize,
    k: u32,
    projectors: BTreeMap<String, Vec<Vec<Vec<[f64; 2]>>>>,
}

impl TryFrom<QuantumJson> for QuantumCertificate {
    type Error = Error;
    fn try_from(json: QuantumJson) -> Result<QuantumCertificate> {
        let mut projectors = BTreeMap::new();
        for (key, stack) in &json.projectors {
            let u = vertex_key(key)?;
            let mats = stack
                .iter()
                .enumerate()
                .map(|(i, rows)| matrix_from_json(rows, json.d, &format!("projector ({u},{i})")))
                .collect::<Result<Vec<_>>>()?;
            projectors.insert(u, mats);
        }
        QuantumCertificate::new(json.d, json.k, projectors)
    }
}

impl From<QuantumCertificate> for QuantumJson {
    fn from(cert: QuantumCertificate) -> QuantumJson {
        QuantumJson {
            d: cert.d,
            k: cert.k,
            projectors: cert
                .projectors
                .iter()
                .map(|(u, mats)| (u.to_string(), mats.iter().map(matrix_to_json).collect()))
                .collect(),
        }
    }
}

impl QuantumCertificate {
    pub fn new(d: usize, k: u32, projectors: BTreeMap<usize, Vec<CMat>>) -> Result<Self> {
        if d == 0 {
            return Err(Error::MalformedCertificate("dimension d must be >= 1".into()));
        }
        let t = projectors
            .values()
            .next()
            .map(Vec::len)
            .ok_or_else(|| Error::MalformedCertificate("no projectors".into()))?;
        if t == 0 {
            return Err(Error::MalformedCertificate(
                "claimed size t must be >= 1".into(),
            ));
        }
        for (u, mats) in &projectors {
            if mats.len() != t {
                return Err(Error::MalformedCertificate(format!(
                    "vertex {u} has {} projectors, expected t = {t}",
                    mats.len()
                )));
            }
            for (i, m) in mats.iter().enumerate() {
                if m.nrows() != d || m.ncols() != d {
                    return Err(Error::MalformedCertificate(format!(
                        "projector ({u},{i}) is {}x{}, expected {d}x{d}",
                        m.nrows(),
                        m.ncols()
                    )));
                }
            }
        }
        Ok(QuantumCertificate { d, k, t, projectors })
    }

    pub fn projectors(&self) -> &BTreeMap<usize, Vec<CMat>> {
        &self.projectors
    }
}

/// Either certificate kind, distinguished by JSON shape.
#[derive(Debug, Clone, PartialEq)]
pub enum Certificate {
    Packing(PackingCertificate),
    Quantum(QuantumCertificate),
}

/// Parses certificate JSON, detecting the form by nesting depth: a
/// packing maps each vertex to one matrix, a quantum certificate maps
/// each vertex to a list of matrices.
pub fn parse_certificate_json(text: &str) -> Result<Certificate> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let projectors = value
        .get("projectors")
        .and_then(|p| p.as_object())
        .ok_or_else(|| {
            Error::MalformedCertificate("missing 'projectors' object".into())
        })?;
    let sample = projectors
        .values()
        .next()
        .ok_or_else(|| Error::MalformedCertificate("no projectors".into()))?;
    let depth_probe = sample
        .as_array()
        .and_then(|rows| rows.first())
        .and_then(|row| row.as_array())
        .and_then(|entries| entries.first())
        .and_then(|entry| entry.as_array())
        .and_then(|pair| pair.first());
    match depth_probe {
        Some(v) if v.is_number() => Ok(Certificate::Packing(serde_json::from_value(value)?)),
        Some(v) if v.is_array() => Ok(Certificate::Quantum(serde_json::from_value(value)?)),
        _ => Err(Error::MalformedCertificate(
            "projector entries must be [re, im] pairs nested as matrices".into(),
        )),
    }
}

fn frobenius(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn trace_inner(p: &CMat, q: &CMat) -> Complex<f64> {
    // tr(P† Q) without forming the product matrix.
    let mut sum = Complex::new(0.0, 0.0);
    for j in 0..p.ncols() {
        for i in 0..p.nrows() {
            sum += p[(i, j)].conj() * q[(i, j)];
        }
    }
    sum
}

/// Validates that m is an orthogonal projector within tol and returns
/// its rank, read off the trace.
pub fn projector_check(m: &CMat, tol: f64) -> Result<usize> {
    if !m.is_square() {
        return Err(Error::MalformedCertificate(format!(
            "projector must be square, got {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    let scale = frobenius(m);
    let hermitian_residual = frobenius(&(m - m.adjoint()));
    if hermitian_residual > tol * scale {
        return Err(Error::Projector {
            kind: "hermitian",
            residual: hermitian_residual,
            tol: tol * scale,
        });
    }
    let idempotent_residual = frobenius(&(m * m - m));
    let idempotent_limit = tol * 1.0f64.max(scale);
    if idempotent_residual > idempotent_limit {
        return Err(Error::Projector {
            kind: "idempotent",
            residual: idempotent_residual,
            tol: idempotent_limit,
        });
    }
    let trace = m.trace();
    let rank = trace.re.round();
    let guard = 10.0 * tol;
    if (trace.re - rank).abs() > guard
        || trace.im.abs() > guard
        || rank < 0.0
        || rank > m.nrows() as f64
    {
        return Err(Error::FractionalRank {
            trace: trace.re,
            guard,
        });
    }
    Ok(rank as usize)
}

fn check_vertex_cover<T>(projectors: &BTreeMap<usize, T>, n: usize) -> Result<()> {
    for u in 0..n {
        if !projectors.contains_key(&u) {
            return Err(Error::MalformedCertificate(format!(
                "missing projector for vertex {u}"
            )));
        }
    }
    if let Some((&u, _)) = projectors.range(n..).next() {
        return Err(Error::MalformedCertificate(format!(
            "projector for vertex {u} exceeds graph order {n}"
        )));
    }
    Ok(())
}

/// Checks the packing conditions: every projector genuine, and
/// trace-orthogonality across all vertex pairs at distance 1..=k.
/// Projector defects are reported as violations, not errors; only
/// structural mismatch with the graph is an error.
pub fn verify_packing(
    g: &Graph,
    k: u32,
    cert: &PackingCertificate,
    tol: f64,
) -> Result<VerificationReport> {
    check_vertex_cover(&cert.projectors, g.n())?;
    let mut violations = Vec::new();
    let mut ranks: BTreeMap<usize, usize> = BTreeMap::new();
    for (&u, m) in &cert.projectors {
        match projector_check(m, tol) {
            Ok(rank) => {
                ranks.insert(u, rank);
            }
            Err(Error::Projector { residual, .. }) => violations.push(Violation {
                condition: COND_PROJECTOR.into(),
                indices: vec![u],
                residual,
            }),
            Err(Error::FractionalRank { trace, .. }) => violations.push(Violation {
                condition: COND_PROJECTOR.into(),
                indices: vec![u],
                residual: (trace - trace.round()).abs(),
            }),
            Err(e) => return Err(e),
        }
    }
    let dist = distance_matrix(g);
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !dist.within(u, v, k) {
                continue;
            }
            let residual = trace_inner(&cert.projectors[&u], &cert.projectors[&v]).norm();
            if residual > tol {
                violations.push(Violation {
                    condition: COND_PACKING_ORTHOGONALITY.into(),
                    indices: vec![u, v],
                    residual,
                });
            }
        }
    }
    let value = (ranks.len() == g.n()).then(|| {
        RationalValue::from(Rational64::new(
            ranks.values().map(|&r| r as i64).sum(),
            cert.d as i64,
        ))
    });
    Ok(VerificationReport::from_violations(violations, value))
}

/// Checks the three quantum k-independence conditions: per-slot sums
/// equal the identity, same-vertex slots are trace-orthogonal, and
/// cross-vertex slots at distance ≤ k are trace-orthogonal.
pub fn verify_quantum_cert(
    g: &Graph,
    k: u32,
    cert: &QuantumCertificate,
    tol: f64,
) -> Result<VerificationReport> {
    check_vertex_cover(&cert.projectors, g.n())?;
    let mut violations = Vec::new();
    for (&u, mats) in &cert.projectors {
        for (i, m) in mats.iter().enumerate() {
            match projector_check(m, tol) {
                Ok(_) => {}
                Err(Error::Projector { residual, .. }) => violations.push(Violation {
                    condition: COND_PROJECTOR.into(),
                    indices: vec![u, i],
                    residual,
                }),
                Err(Error::FractionalRank { trace, .. }) => violations.push(Violation {
                    condition: COND_PROJECTOR.into(),
                    indices: vec![u, i],
                    residual: (trace - trace.round()).abs(),
                }),
                Err(e) => return Err(e),
            }
        }
    }

    for i in 0..cert.t {
        let mut sum: CMat = DMatrix::zeros(cert.d, cert.d);
        for mats in cert.projectors.values() {
            sum += &mats[i];
        }
        for j in 0..cert.d {
            sum[(j, j)] -= Complex::new(1.0, 0.0);
        }
        let residual = frobenius(&sum);
        if residual > tol {
            violations.push(Violation {
                condition: COND_SUM_IDENTITY.into(),
                indices: vec![i],
                residual,
            });
        }
    }

    for (&u, mats) in &cert.projectors {
        for i in 0..cert.t {
            for j in i + 1..cert.t {
                let residual = trace_inner(&mats[i], &mats[j]).norm();
                if residual > tol {
                    violations.push(Violation {
                        condition: COND_VERTEX_ORTHOGONALITY.into(),
                        indices: vec![u, i, j],
                        residual,
                    });
                }
            }
        }
    }

    let dist = distance_matrix(g);
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !dist.within(u, v, k) {
                continue;
            }
            for i in 0..cert.t {
                for j in 0..cert.t {
                    if i == j {
                        continue;
                    }
                    let residual =
                        trace_inner(&cert.projectors[&u][i], &cert.projectors[&v][j]).norm();
                    if residual > tol {
                        violations.push(Violation {
                            condition: COND_PAIR_ORTHOGONALITY.into(),
                            indices: vec![u, v, i, j],
                            residual,
                        });
                    }
                }
            }
        }
    }

    let value = Some(RationalValue::from(Rational64::from_integer(
        cert.t as i64,
    )));
    Ok(VerificationReport::from_violations(violations, value))
}

/// Rank-one lift: a verified k-independent set becomes a d = 1 packing
/// with value |S|, witnessing α_k ≤ α_kp.
pub fn lift_independent_set(g: &Graph, cert: &IndependentSetCert) -> Result<PackingCertificate> {
    if !verify_independent_set(g, cert)? {
        return Err(Error::MalformedCertificate(
            "cannot lift: vertices are not pairwise beyond distance k".into(),
        ));
    }
    let mut projectors = BTreeMap::new();
    for u in 0..g.n() {
        let value = if cert.vertices.contains(&u) { 1.0 } else { 0.0 };
        projectors.insert(
            u,
            DMatrix::from_element(1, 1, Complex::new(value, 0.0)),
        );
    }
    PackingCertificate::new(1, cert.k, projectors)
}

/// Columns of the eigenbasis whose eigenvalue rounds to 1: the range
/// basis of a numerical projector.
fn range_basis(m: &CMat) -> Vec<nalgebra::DVector<Complex<f64>>> {
    let eigen = m.clone().symmetric_eigen();
    let mut basis = Vec::new();
    for (idx, &lambda) in eigen.eigenvalues.iter().enumerate() {
        if lambda > 0.5 {
            basis.push(eigen.eigenvectors.column(idx).into_owned());
        }
    }
    basis
}

/// Trace-orthogonality of two projectors, cross-checked against the
/// pairwise inner products of their range bases. The two views must
/// agree (trace zero within tol·max(1, rs) iff every cross product is
/// zero within the square root of that); disagreement is an error.
pub fn lemma2_check(p: &CMat, q: &CMat, tol: f64) -> Result<bool> {
    if p.nrows() != q.nrows() || p.ncols() != q.ncols() {
        return Err(Error::MalformedCertificate(format!(
            "dimension mismatch: {}x{} vs {}x{}",
            p.nrows(),
            p.ncols(),
            q.nrows(),
            q.ncols()
        )));
    }
    let r = projector_check(p, tol)?;
    let s = projector_check(q, tol)?;
    let trace_abs = trace_inner(p, q).norm();
    let trace_tol = tol * 1.0f64.max((r * s) as f64);
    let trace_orthogonal = trace_abs <= trace_tol;

    let p_basis = range_basis(p);
    let q_basis = range_basis(q);
    let mut cross_max = 0.0f64;
    for psi in &p_basis {
        for phi in &q_basis {
            cross_max = cross_max.max(psi.dotc(phi).norm());
        }
    }
    let cross_tol = trace_tol.sqrt();
    let vectors_orthogonal = cross_max <= cross_tol;
    if trace_orthogonal != vectors_orthogonal {
        return Err(Error::OrthogonalityMismatch {
            trace_abs,
            trace_tol,
            cross_max,
            cross_tol,
        });
    }
    Ok(trace_orthogonal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, CatalogId};
    use crate::oracle::alpha_exact;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn real_diag(values: &[f64]) -> CMat {
        let d = values.len();
        DMatrix::from_fn(d, d, |i, j| {
            if i == j {
                c(values[i], 0.0)
            } else {
                c(0.0, 0.0)
            }
        })
    }

    #[test]
    fn projector_check_examples() {
        let id3 = real_diag(&[1.0, 1.0, 1.0]);
        assert_eq!(projector_check(&id3, 1e-8).unwrap(), 3);

        // |ψ⟩⟨ψ| for a unit vector in C³.
        let psi = nalgebra::DVector::from_vec(vec![
            c(0.5, 0.5),
            c(0.5, 0.0),
            c(0.0, 0.5),
        ]);
        let outer = &psi * psi.adjoint();
        assert_eq!(projector_check(&outer, 1e-8).unwrap(), 1);

        let half = real_diag(&[0.5, 0.5, 0.5]);
        assert!(matches!(
            projector_check(&half, 1e-8),
            Err(Error::Projector {
                kind: "idempotent",
                ..
            })
        ));

        let mut skew = real_diag(&[1.0, 0.0]);
        skew[(0, 1)] = c(0.3, 0.0);
        assert!(matches!(
            projector_check(&skew, 1e-8),
            Err(Error::Projector {
                kind: "hermitian",
                ..
            })
        ));

        assert_eq!(projector_check(&DMatrix::zeros(2, 2), 1e-8).unwrap(), 0);
    }

    fn petersen_lift() -> (Graph, PackingCertificate) {
        let g = catalog(&CatalogId::Petersen).unwrap();
        let (_, cert) = alpha_exact(&g).unwrap();
        let packing = lift_independent_set(&g, &cert).unwrap();
        (g, packing)
    }

    #[test]
    fn lifted_maximum_set_verifies() {
        let (g, packing) = petersen_lift();
        let report = verify_packing(&g, 1, &packing, DEFAULT_CERT_TOL).unwrap();
        assert!(report.valid);
        assert_eq!(
            report.value,
            Some(RationalValue {
                numerator: 4,
                denominator: 1
            })
        );
    }

    #[test]
    fn zero_packing_is_valid_with_value_zero() {
        let g = catalog(&CatalogId::Cycle(5)).unwrap();
        let projectors = (0..5)
            .map(|u| (u, DMatrix::zeros(2, 2)))
            .collect();
        let cert = PackingCertificate::new(2, 1, projectors).unwrap();
        let report = verify_packing(&g, 1, &cert, DEFAULT_CERT_TOL).unwrap();
        assert!(report.valid);
        assert_eq!(report.value.unwrap().numerator, 0);
    }

    #[test]
    fn adjacent_support_violates_packing() {
        let g = catalog(&CatalogId::Complete(2)).unwrap();
        let projectors = (0..2)
            .map(|u| (u, DMatrix::from_element(1, 1, c(1.0, 0.0))))
            .collect();
        let cert = PackingCertificate::new(1, 1, projectors).unwrap();
        let report = verify_packing(&g, 1, &cert, DEFAULT_CERT_TOL).unwrap();
        assert!(!report.valid);
        assert_eq!(report.violations.len(), 1);
        let v = &report.violations[0];
        assert_eq!(v.condition, COND_PACKING_ORTHOGONALITY);
        assert_eq!(v.indices, vec![0, 1]);
        assert!((v.residual - 1.0).abs() < 1e-12);
    }

    #[test]
    fn packing_requires_every_vertex() {
        let g = catalog(&CatalogId::Cycle(4)).unwrap();
        let projectors = (0..3)
            .map(|u| (u, DMatrix::zeros(1, 1)))
            .collect();
        let cert = PackingCertificate::new(1, 1, projectors).unwrap();
        assert!(matches!(
            verify_packing(&g, 1, &cert, DEFAULT_CERT_TOL),
            Err(Error::MalformedCertificate(_))
        ));
    }

    fn selector_quantum(g: &Graph, k: u32, picks: &[usize]) -> QuantumCertificate {
        // d = 1, t = picks.len(): slot i puts weight 1 on picks[i].
        let t = picks.len();
        let projectors = (0..g.n())
            .map(|u| {
                let mats = (0..t)
                    .map(|i| {
                        let value = if picks[i] == u { 1.0 } else { 0.0 };
                        DMatrix::from_element(1, 1, c(value, 0.0))
                    })
                    .collect();
                (u, mats)
            })
            .collect();
        QuantumCertificate::new(1, k, projectors).unwrap()
    }

    #[test]
    fn quantum_selector_of_independent_set_is_valid() {
        let g = catalog(&CatalogId::Petersen).unwrap();
        let (_, cert) = alpha_exact(&g).unwrap();
        let quantum = selector_quantum(&g, 1, &cert.vertices);
        let report = verify_quantum_cert(&g, 1, &quantum, DEFAULT_CERT_TOL).unwrap();
        assert!(report.valid, "{:?}", report.violations);
        assert_eq!(report.value.unwrap().numerator, 4);
    }

    #[test]
    fn quantum_sum_identity_violation() {
        let g = catalog(&CatalogId::Complete(3)).unwrap();
        let projectors = (0..3)
            .map(|u| (u, vec![DMatrix::zeros(1, 1)]))
            .collect();
        let cert = QuantumCertificate::new(1, 1, projectors).unwrap();
        let report = verify_quantum_cert(&g, 1, &cert, DEFAULT_CERT_TOL).unwrap();
        assert!(!report.valid);
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].condition, COND_SUM_IDENTITY);
        assert_eq!(report.violations[0].indices, vec![0]);
    }

    #[test]
    fn quantum_vertex_orthogonality_violation() {
        let g = catalog(&CatalogId::Petersen).unwrap();
        let quantum = selector_quantum(&g, 1, &[2, 2]);
        let report = verify_quantum_cert(&g, 1, &quantum, DEFAULT_CERT_TOL).unwrap();
        assert!(!report.valid);
        let conditions: Vec<&str> = report
            .violations
            .iter()
            .map(|v| v.condition.as_str())
            .collect();
        assert_eq!(conditions, vec![COND_VERTEX_ORTHOGONALITY]);
        assert_eq!(report.violations[0].indices, vec![2, 0, 1]);
    }

    #[test]
    fn quantum_pair_orthogonality_violation() {
        let g = catalog(&CatalogId::Petersen).unwrap();
        let (u, v) = g.edges().next().unwrap();
        let quantum = selector_quantum(&g, 1, &[u, v]);
        let report = verify_quantum_cert(&g, 1, &quantum, DEFAULT_CERT_TOL).unwrap();
        assert!(!report.valid);
        let conditions: Vec<&str> = report
            .violations
            .iter()
            .map(|v| v.condition.as_str())
            .collect();
        assert_eq!(conditions, vec![COND_PAIR_ORTHOGONALITY]);
        assert_eq!(report.violations[0].indices, vec![u, v, 0, 1]);
    }

    #[test]
    fn partition_of_unity_t1_is_valid() {
        let g = catalog(&CatalogId::Cycle(4)).unwrap();
        let mut projectors: BTreeMap<usize, Vec<CMat>> = BTreeMap::new();
        projectors.insert(0, vec![real_diag(&[1.0, 0.0])]);
        projectors.insert(1, vec![real_diag(&[0.0, 1.0])]);
        projectors.insert(2, vec![DMatrix::zeros(2, 2)]);
        projectors.insert(3, vec![DMatrix::zeros(2, 2)]);
        let cert = QuantumCertificate::new(2, 1, projectors).unwrap();
        let report = verify_quantum_cert(&g, 1, &cert, DEFAULT_CERT_TOL).unwrap();
        assert!(report.valid, "{:?}", report.violations);
    }

    #[test]
    fn lift_rejects_invalid_input() {
        let g = catalog(&CatalogId::Complete(3)).unwrap();
        let bad = IndependentSetCert {
            k: 1,
            vertices: vec![0, 1],
        };
        assert!(lift_independent_set(&g, &bad).is_err());
    }

    #[test]
    fn lift_of_empty_and_singleton() {
        let g = catalog(&CatalogId::Cycle(5)).unwrap();
        for (vertices, want) in [(vec![], 0), (vec![3], 1)] {
            let cert = IndependentSetCert { k: 1, vertices };
            let packing = lift_independent_set(&g, &cert).unwrap();
            let report = verify_packing(&g, 1, &packing, DEFAULT_CERT_TOL).unwrap();
            assert!(report.valid);
            assert_eq!(report.value.unwrap().numerator, want);
        }
    }

    #[test]
    fn lemma2_examples() {
        let p = real_diag(&[1.0, 0.0]);
        let q = real_diag(&[0.0, 1.0]);
        assert!(lemma2_check(&p, &q, DEFAULT_CERT_TOL).unwrap());
        assert!(!lemma2_check(&p, &p, DEFAULT_CERT_TOL).unwrap());
        let q3 = real_diag(&[1.0, 0.0, 0.0]);
        assert!(matches!(
            lemma2_check(&p, &q3, DEFAULT_CERT_TOL),
            Err(Error::MalformedCertificate(_))
        ));
    }

    #[test]
    fn packing_json_roundtrip_and_detection() {
        let (_, packing) = petersen_lift();
        let text = serde_json::to_string(&packing).unwrap();
        match parse_certificate_json(&text).unwrap() {
            Certificate::Packing(back) => assert_eq!(back, packing),
            Certificate::Quantum(_) => panic!("detected wrong form"),
        }
    }

    #[test]
    fn quantum_json_roundtrip_and_detection() {
        let g = catalog(&CatalogId::Cycle(5)).unwrap();
        let quantum = selector_quantum(&g, 1, &[0, 2]);
        let text = serde_json::to_string(&quantum).unwrap();
        match parse_certificate_json(&text).unwrap() {
            Certificate::Quantum(back) => assert_eq!(back, quantum),
            Certificate::Packing(_) => panic!("detected wrong form"),
        }
    }

    #[test]
    fn malformed_json_certificates() {
        // Wrong row length.
        let bad = r#"{"d":2,"k":1,"projectors":{"0":[[[1,0]],[[0,0],[0,0]]]}}"#;
        assert!(parse_certificate_json(bad).is_err());
        // Non-numeric vertex key.
        let bad = r#"{"d":1,"k":1,"projectors":{"x":[[[1,0]]]}}"#;
        assert!(parse_certificate_json(bad).is_err());
        // Entries are bare numbers, not [re, im] pairs.
        let bad = r#"{"d":1,"k":1,"projectors":{"0":[[1]]}}"#;
        assert!(parse_certificate_json(bad).is_err());
        // No projectors at all.
        let bad = r#"{"d":1,"k":1,"projectors":{}}"#;
        assert!(parse_certificate_json(bad).is_err());
    }

    #[test]
    fn verification_report_json_shape() {
        let report = VerificationReport {
            valid: false,
            violations: vec![Violation {
                condition: COND_SUM_IDENTITY.into(),
                indices: vec![0],
                residual: 1.0,
            }],
            value: Some(RationalValue {
                numerator: 7,
                denominator: 2,
            }),
        };
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(
            json,
            r#"{"valid":false,"violations":[{"condition":"sum_identity","indices":[0],"residual":1.0}],"value":{"numerator":7,"denominator":2}}"#
        );
    }
}
