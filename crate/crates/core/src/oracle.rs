//! Exact independence numbers by branch and bound, with a naive
//! exhaustive enumerator kept as an independent cross-check. Ground
//! truth for every spectral bound in the crate.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{distance_matrix, power_graph, Graph};
use crate::Result;

/// A claimed set of vertices at pairwise distance greater than `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependentSetCert {
    pub k: u32,
    pub vertices: Vec<usize>,
}

/// Search budget. Branch and bound refuses graphs larger than this
/// rather than risk an unfinished (hence possibly wrong) answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices: usize,
}

impl OracleBudget {
    /// Bitset adjacency rows are single machine words.
    pub const HARD_CAP: usize = 64;
}

impl Default for OracleBudget {
    fn default() -> OracleBudget {
        OracleBudget { max_vertices: 40 }
    }
}

/// Clique search on a bitset graph (used on the complement, where
/// independent sets of the original appear as cliques).
struct CliqueSolver {
    n: usize,
    adj: Vec<u64>,
    best: usize,
    /// Stop as soon as a clique of this size is seen.
    target: Option<usize>,
}

impl CliqueSolver {
    fn new(adj: Vec<u64>) -> CliqueSolver {
        CliqueSolver {
            n: adj.len(),
            adj,
            best: 0,
            target: None,
        }
    }

    fn satisfied(&self) -> bool {
        self.target.is_some_and(|t| self.best >= t)
    }

    /// Greedy coloring of the candidate set; returns vertices grouped by
    /// color class with colors ascending, which upper-bounds any clique
    /// inside a suffix of the ordering by the color number.
    fn color_order(&self, p: u64) -> Vec<(usize, usize)> {
        let mut order = Vec::with_capacity(p.count_ones() as usize);
        let mut uncolored = p;
        let mut color = 0;
        while uncolored != 0 {
            color += 1;
            let mut available = uncolored;
            while available != 0 {
                let v = available.trailing_zeros() as usize;
                let bit = 1u64 << v;
                available &= !bit & !self.adj[v];
                uncolored &= !bit;
                order.push((v, color));
            }
        }
        order
    }

    fn expand(&mut self, size: usize, p: u64) {
        if self.satisfied() {
            return;
        }
        if p == 0 {
            self.best = self.best.max(size);
            return;
        }
        let order = self.color_order(p);
        let mut left = p;
        for &(v, color) in order.iter().rev() {
            if size + color <= self.best || self.satisfied() {
                return;
            }
            left &= !(1u64 << v);
            self.expand(size + 1, left & self.adj[v]);
        }
    }

    /// Size of a maximum clique within the vertex mask.
    fn max_clique(&mut self, mask: u64) -> usize {
        self.best = 0;
        self.target = None;
        self.expand(0, mask);
        self.best
    }

    /// Whether a clique of at least `want` vertices exists in the mask.
    fn reaches(&mut self, mask: u64, want: usize) -> bool {
        if want == 0 {
            return true;
        }
        self.best = want - 1;
        self.target = Some(want);
        self.expand(0, mask);
        self.best >= want
    }

    fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }
}

fn complement_bitset(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let mut adj = vec![0u64; n];
    for u in 0..n {
        for v in 0..n {
            if u != v && !g.has_edge(u, v) {
                adj[u] |= 1 << v;
            }
        }
    }
    adj
}

fn check_budget(n: usize, budget: &OracleBudget) -> Result<()> {
    let max = budget.max_vertices.min(OracleBudget::HARD_CAP);
    if n > max {
        return Err(Error::BudgetExceeded { n, max });
    }
    Ok(())
}

/// Maximum independent set, exact, with the default budget. Ties among
/// maximum sets resolve to the lexicographically smallest vertex list.
pub fn alpha_exact(g: &Graph) -> Result<(usize, IndependentSetCert)> {
    alpha_exact_budgeted(g, &OracleBudget::default())
}

pub fn alpha_exact_budgeted(
    g: &Graph,
    budget: &OracleBudget,
) -> Result<(usize, IndependentSetCert)> {
    check_budget(g.n(), budget)?;
    let mut solver = CliqueSolver::new(complement_bitset(g));
    let full = solver.full_mask();
    let size = solver.max_clique(full);

    // Lexicographic completion: scan vertices in order, keeping one
    // exactly when the prefix still extends to a maximum set. Each kept
    // vertex shrinks the pool to its complement-neighbors; each rejected
    // vertex can never reappear (a maximum set through a longer prefix
    // would contain the shorter rejected prefix too).
    let mut chosen = Vec::with_capacity(size);
    let mut pool = full;
    for v in 0..g.n() {
        if chosen.len() == size {
            break;
        }
        let bit = 1u64 << v;
        if pool & bit == 0 {
            continue;
        }
        let shrunk = pool & solver.adj[v];
        if solver.reaches(shrunk, size - chosen.len() - 1) {
            chosen.push(v);
            pool = shrunk;
        } else {
            pool &= !bit;
        }
    }
    debug_assert_eq!(chosen.len(), size);
    Ok((
        size,
        IndependentSetCert {
            k: 1,
            vertices: chosen,
        },
    ))
}

/// α_k(G): maximum set of vertices at pairwise distance > k, computed
/// as the independence number of the k-th distance power.
pub fn alpha_k_exact(g: &Graph, k: u32) -> Result<(usize, IndependentSetCert)> {
    alpha_k_exact_budgeted(g, k, &OracleBudget::default())
}

pub fn alpha_k_exact_budgeted(
    g: &Graph,
    k: u32,
    budget: &OracleBudget,
) -> Result<(usize, IndependentSetCert)> {
    let power = power_graph(g, k)?;
    let (size, cert) = alpha_exact_budgeted(&power, budget)?;
    let cert = IndependentSetCert {
        k,
        vertices: cert.vertices,
    };
    if !verify_independent_set(g, &cert)? {
        return Err(Error::Invariant(
            "power-graph oracle produced a set violating the distance condition".into(),
        ));
    }
    Ok((size, cert))
}

/// Exhaustive-subset independence number, n ≤ 20 only. Deliberately
/// shares no code with the branch-and-bound path.
pub fn alpha_naive(g: &Graph) -> Result<(usize, IndependentSetCert)> {
    const NAIVE_CAP: usize = 20;
    let n = g.n();
    if n > NAIVE_CAP {
        return Err(Error::BudgetExceeded { n, max: NAIVE_CAP });
    }
    let mut neighbor_mask = vec![0u32; n];
    for (u, v) in g.edges() {
        neighbor_mask[u] |= 1 << v;
        neighbor_mask[v] |= 1 << u;
    }
    let mut best_mask = 0u32;
    let mut best_size = 0;
    for mask in 0u32..1 << n {
        let size = mask.count_ones() as usize;
        if size < best_size {
            continue;
        }
        let mut independent = true;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if neighbor_mask[v] & mask != 0 {
                independent = false;
                break;
            }
        }
        if !independent {
            continue;
        }
        if size > best_size {
            best_size = size;
            best_mask = mask;
        } else if size > 0 {
            // Equal size: keep the lexicographically smaller sorted
            // vertex list, the one owning the lowest differing vertex.
            let diff = mask ^ best_mask;
            if diff != 0 && diff & diff.wrapping_neg() & mask != 0 {
                best_mask = mask;
            }
        }
    }
    let vertices: Vec<usize> = (0..n).filter(|&v| best_mask & 1 << v != 0).collect();
    Ok((
        best_size,
        IndependentSetCert { k: 1, vertices },
    ))
}

/// True iff the certificate's vertices are pairwise at distance > k.
/// Out-of-range or repeated vertices are malformed, not merely invalid.
pub fn verify_independent_set(g: &Graph, cert: &IndependentSetCert) -> Result<bool> {
    let n = g.n();
    let mut seen = vec![false; n];
    for &v in &cert.vertices {
        if v >= n {
            return Err(Error::MalformedCertificate(format!(
                "vertex {v} out of range for a {n}-vertex graph"
            )));
        }
        if seen[v] {
            return Err(Error::MalformedCertificate(format!(
                "vertex {v} listed twice"
            )));
        }
        seen[v] = true;
    }
    let dist = distance_matrix(g);
    let k = cert.k;
    for (a, &u) in cert.vertices.iter().enumerate() {
        for &v in &cert.vertices[a + 1..] {
            if dist.within(u, v, k) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, CatalogId};

    #[test]
    fn petersen_alpha_four() {
        let g = catalog(&CatalogId::Petersen).unwrap();
        let (size, cert) = alpha_exact(&g).unwrap();
        assert_eq!(size, 4);
        assert_eq!(cert.vertices.len(), 4);
        assert!(verify_independent_set(&g, &cert).unwrap());
    }

    #[test]
    fn complete_and_empty() {
        let kn = catalog(&CatalogId::Complete(6)).unwrap();
        assert_eq!(alpha_exact(&kn).unwrap().0, 1);
        let e7 = catalog(&CatalogId::Empty(7)).unwrap();
        let (size, cert) = alpha_exact(&e7).unwrap();
        assert_eq!(size, 7);
        assert_eq!(cert.vertices, (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn petersen_distance_two() {
        let g = catalog(&CatalogId::Petersen).unwrap();
        assert_eq!(alpha_k_exact(&g, 2).unwrap().0, 1);
    }

    #[test]
    fn nine_cycle_distance_two() {
        let g = catalog(&CatalogId::Cycle(9)).unwrap();
        let (size, cert) = alpha_k_exact(&g, 2).unwrap();
        assert_eq!(size, 3);
        assert_eq!(cert.vertices, vec![0, 3, 6]);
    }

    #[test]
    fn distance_one_matches_alpha() {
        let g = catalog(&CatalogId::Kneser(5, 2)).unwrap();
        assert_eq!(alpha_k_exact(&g, 1).unwrap(), alpha_exact(&g).unwrap());
    }

    #[test]
    fn lexicographic_tie_break() {
        // C5 has five maximum independent sets; {0, 2} is lex-smallest.
        let g = catalog(&CatalogId::Cycle(5)).unwrap();
        let (size, cert) = alpha_exact(&g).unwrap();
        assert_eq!(size, 2);
        assert_eq!(cert.vertices, vec![0, 2]);
    }

    #[test]
    fn naive_agrees_on_catalog() {
        for id in CatalogId::standard_corpus() {
            let g = catalog(&id).unwrap();
            if g.n() > 20 {
                continue;
            }
            let fast = alpha_exact(&g).unwrap();
            let slow = alpha_naive(&g).unwrap();
            assert_eq!(fast, slow, "disagreement on {id}");
        }
    }

    #[test]
    fn budget_is_a_hard_error() {
        let g = catalog(&CatalogId::Empty(5)).unwrap();
        let tight = OracleBudget { max_vertices: 4 };
        assert!(matches!(
            alpha_exact_budgeted(&g, &tight),
            Err(Error::BudgetExceeded { n: 5, max: 4 })
        ));
    }

    #[test]
    fn verify_rejects_malformed() {
        let g = catalog(&CatalogId::Petersen).unwrap();
        let out_of_range = IndependentSetCert {
            k: 1,
            vertices: vec![0, 10],
        };
        assert!(verify_independent_set(&g, &out_of_range).is_err());
        let repeated = IndependentSetCert {
            k: 1,
            vertices: vec![3, 3],
        };
        assert!(verify_independent_set(&g, &repeated).is_err());
    }

    #[test]
    fn verify_detects_adjacency() {
        let g = catalog(&CatalogId::Petersen).unwrap();
        let (u, v) = g.edges().next().unwrap();
        let adjacent = IndependentSetCert {
            k: 1,
            vertices: vec![u, v],
        };
        assert!(!verify_independent_set(&g, &adjacent).unwrap());
        let singleton = IndependentSetCert {
            k: 3,
            vertices: vec![u],
        };
        assert!(verify_independent_set(&g, &singleton).unwrap());
    }

    #[test]
    fn disconnected_pairs_are_independent_at_any_k() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let cert = IndependentSetCert {
            k: 5,
            vertices: vec![0, 2],
        };
        assert!(verify_independent_set(&g, &cert).unwrap());
    }

    #[test]
    fn cert_json_shape() {
        let cert = IndependentSetCert {
            k: 2,
            vertices: vec![0, 3, 6],
        };
        let json = serde_json::to_string(&cert).unwrap();
        assert_eq!(json, r#"{"k":2,"vertices":[0,3,6]}"#);
    }
}
