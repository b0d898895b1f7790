//! Named-graph catalog: parameterized generators addressed by a compact
//! `family:params` syntax, e.g. `cycle:5`, `kneser:5,2`, `paley:17`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::Graph;
use crate::Result;

/// Identifier of a catalog family plus its integer parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum CatalogId {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
    Petersen,
    Kneser(usize, usize),
    Hypercube(u32),
    FoldedCube(u32),
    Paley(u64),
    Empty(usize),
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogId::Cycle(n) => write!(f, "cycle:{n}"),
            CatalogId::Path(n) => write!(f, "path:{n}"),
            CatalogId::Complete(n) => write!(f, "complete:{n}"),
            CatalogId::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a},{b}"),
            CatalogId::CompleteMultipartite(parts) => {
                let list: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "complete_multipartite:{}", list.join(","))
            }
            CatalogId::Petersen => write!(f, "petersen"),
            CatalogId::Kneser(n, k) => write!(f, "kneser:{n},{k}"),
            CatalogId::Hypercube(d) => write!(f, "hypercube:{d}"),
            CatalogId::FoldedCube(d) => write!(f, "folded_cube:{d}"),
            CatalogId::Paley(q) => write!(f, "paley:{q}"),
            CatalogId::Empty(n) => write!(f, "empty:{n}"),
        }
    }
}

impl From<CatalogId> for String {
    fn from(id: CatalogId) -> String {
        id.to_string()
    }
}

impl TryFrom<String> for CatalogId {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl FromStr for CatalogId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Catalog(format!("{s}: {msg}"));
        let (family, params) = match s.split_once(':') {
            Some((f, p)) => (f, p),
            None => (s, ""),
        };
        let ints: Vec<usize> = if params.is_empty() {
            Vec::new()
        } else {
            params
                .split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| bad("parameters must be nonnegative integers"))?
        };
        let one = || -> Result<usize> {
            match ints.as_slice() {
                [a] => Ok(*a),
                _ => Err(bad("expected exactly one parameter")),
            }
        };
        let two = || -> Result<(usize, usize)> {
            match ints.as_slice() {
                [a, b] => Ok((*a, *b)),
                _ => Err(bad("expected exactly two parameters")),
            }
        };
        let id = match family {
            "cycle" => CatalogId::Cycle(one()?),
            "path" => CatalogId::Path(one()?),
            "complete" => CatalogId::Complete(one()?),
            "complete_bipartite" => {
                let (a, b) = two()?;
                CatalogId::CompleteBipartite(a, b)
            }
            "complete_multipartite" => {
                if ints.is_empty() {
                    return Err(bad("expected at least one part size"));
                }
                CatalogId::CompleteMultipartite(ints)
            }
            "petersen" => {
                if !ints.is_empty() {
                    return Err(bad("petersen takes no parameters"));
                }
                CatalogId::Petersen
            }
            "kneser" => {
                let (n, k) = two()?;
                CatalogId::Kneser(n, k)
            }
            "hypercube" => CatalogId::Hypercube(one()? as u32),
            "folded_cube" => CatalogId::FoldedCube(one()? as u32),
            "paley" => CatalogId::Paley(one()? as u64),
            "empty" => CatalogId::Empty(one()?),
            other => return Err(Error::Catalog(format!("unknown family '{other}'"))),
        };
        id.validate()?;
        Ok(id)
    }
}

impl CatalogId {
    /// Validates the parameters for the family.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Catalog(format!("{self}: {msg}")));
        match self {
            CatalogId::Cycle(n) if *n < 3 => bad("cycle needs n >= 3".into()),
            CatalogId::Path(n) | CatalogId::Complete(n) | CatalogId::Empty(n) if *n == 0 => {
                bad("needs n >= 1".into())
            }
            CatalogId::CompleteBipartite(a, b) if *a == 0 || *b == 0 => {
                bad("part sizes must be >= 1".into())
            }
            CatalogId::CompleteMultipartite(parts) if parts.contains(&0) => {
                bad("part sizes must be >= 1".into())
            }
            CatalogId::CompleteMultipartite(parts) if parts.is_empty() => {
                bad("needs at least one part".into())
            }
            CatalogId::Kneser(n, k) => {
                if *k == 0 || *n < 2 * k {
                    bad("kneser needs 1 <= k and n >= 2k".into())
                } else if binomial(*n, *k) > 4096 {
                    bad(format!("too many vertices ({})", binomial(*n, *k)))
                } else {
                    Ok(())
                }
            }
            CatalogId::Hypercube(d) if *d == 0 || *d > 12 => {
                bad("hypercube supports 1 <= d <= 12".into())
            }
            CatalogId::FoldedCube(d) if *d < 2 || *d > 12 => {
                bad("folded cube supports 2 <= d <= 12".into())
            }
            CatalogId::Paley(q) => match paley_field(*q) {
                Ok(_) => Ok(()),
                Err(e) => Err(e),
            },
            _ => Ok(()),
        }
    }

    /// A fixed small corpus covering every family, used by catalog-wide
    /// scans and invariant tests. All members have at most 32 vertices.
    pub fn standard_corpus() -> Vec<CatalogId> {
        let mut ids = Vec::new();
        ids.extend((3..=13).map(CatalogId::Cycle));
        ids.extend((1..=8).map(CatalogId::Path));
        ids.extend((1..=7).map(CatalogId::Complete));
        for (a, b) in [(1, 1), (1, 4), (2, 2), (2, 3), (3, 3)] {
            ids.push(CatalogId::CompleteBipartite(a, b));
        }
        ids.push(CatalogId::CompleteMultipartite(vec![3, 1, 1]));
        ids.push(CatalogId::CompleteMultipartite(vec![2, 2, 2]));
        ids.push(CatalogId::Petersen);
        ids.push(CatalogId::Kneser(5, 2));
        ids.push(CatalogId::Kneser(6, 2));
        ids.extend((1..=4).map(CatalogId::Hypercube));
        ids.extend((2..=5).map(CatalogId::FoldedCube));
        ids.extend([5, 9, 13, 17].map(CatalogId::Paley));
        ids.extend((1..=5).map(CatalogId::Empty));
        ids
    }
}

/// Builds the graph for a catalog id.
pub fn catalog(id: &CatalogId) -> Result<Graph> {
    id.validate()?;
    match id {
        CatalogId::Cycle(n) => Graph::new(*n, (0..*n).map(|i| (i, (i + 1) % n))),
        CatalogId::Path(n) => Graph::new(*n, (1..*n).map(|i| (i - 1, i))),
        CatalogId::Complete(n) => complete_multipartite(&vec![1; *n]),
        CatalogId::CompleteBipartite(a, b) => complete_multipartite(&[*a, *b]),
        CatalogId::CompleteMultipartite(parts) => complete_multipartite(parts),
        CatalogId::Petersen => catalog(&CatalogId::Kneser(5, 2)),
        CatalogId::Kneser(n, k) => kneser(*n, *k),
        CatalogId::Hypercube(d) => hypercube(*d),
        CatalogId::FoldedCube(d) => folded_cube(*d),
        CatalogId::Paley(q) => paley(*q),
        CatalogId::Empty(n) => Graph::new(*n, []),
    }
}

fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, size));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r = 1usize;
    for i in 0..k.min(n - k) {
        r = r * (n - i) / (i + 1);
    }
    r
}

fn kneser(n: usize, k: usize) -> Result<Graph> {
    // Vertices are the k-subsets of {0..n-1} as bitmasks in lexicographic
    // order of their sorted element lists; edges join disjoint subsets.
    let mut subsets: Vec<u64> = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        subsets.push(current.iter().fold(0u64, |m, &e| m | 1 << e));
        // next combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            if current[i] != i + n - k {
                current[i] += 1;
                for j in i + 1..k {
                    current[j] = current[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return finish_kneser(subsets);
            }
        }
        if subsets.len() == binomial(n, k) {
            return finish_kneser(subsets);
        }
    }
}

fn finish_kneser(subsets: Vec<u64>) -> Result<Graph> {
    let mut edges = Vec::new();
    for i in 0..subsets.len() {
        for j in i + 1..subsets.len() {
            if subsets[i] & subsets[j] == 0 {
                edges.push((i, j));
            }
        }
    }
    Graph::new(subsets.len(), edges)
}

fn hypercube(d: u32) -> Result<Graph> {
    let n = 1usize << d;
    let mut edges = Vec::new();
    for u in 0..n {
        for bit in 0..d {
            let v = u ^ (1 << bit);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// The folded d-cube: the (d-1)-cube with an extra perfect matching
/// between antipodal vertices. d-regular on 2^(d-1) vertices.
fn folded_cube(d: u32) -> Result<Graph> {
    let n = 1usize << (d - 1);
    let mask = n - 1;
    let mut edges = Vec::new();
    for u in 0..n {
        for bit in 0..d - 1 {
            let v = u ^ (1 << bit);
            if u < v {
                edges.push((u, v));
            }
        }
        let v = !u & mask;
        if u < v {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges)
}

/// Paley graph on GF(q): u ~ v iff u - v is a nonzero square. Requires
/// q ≡ 1 (mod 4) so that the relation is symmetric.
fn paley(q: u64) -> Result<Graph> {
    let field = paley_field(q)?;
    let squares = field.nonzero_squares();
    let n = q as usize;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if squares.contains(&field.sub(v as u64, u as u64)) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

fn paley_field(q: u64) -> Result<gf::Field> {
    let bad = |msg: String| Error::Catalog(format!("paley:{q}: {msg}"));
    if q % 4 != 1 {
        return Err(bad("q must be ≡ 1 (mod 4)".into()));
    }
    if q > 1024 {
        return Err(bad("supported range is q <= 1024".into()));
    }
    let (p, e) = gf::prime_power(q).ok_or_else(|| bad("q must be a prime power".into()))?;
    if e > 3 {
        return Err(bad("prime powers p^e supported for e <= 3".into()));
    }
    Ok(gf::Field::new(p, e))
}

/// Minimal finite-field arithmetic for prime powers p^e with e <= 3,
/// just enough to build Paley graphs. Elements are base-p digit strings
/// packed into integers; multiplication reduces modulo the first monic
/// irreducible polynomial in lexicographic order.
mod gf {
    use std::collections::BTreeSet;

    pub fn prime_power(q: u64) -> Option<(u64, u32)> {
        for p in 2..=q {
            if q.is_multiple_of(p) {
                // p is the smallest divisor, hence prime
                let mut m = q;
                let mut e = 0;
                while m.is_multiple_of(p) {
                    m /= p;
                    e += 1;
                }
                return (m == 1).then_some((p, e));
            }
        }
        None
    }

    pub struct Field {
        p: u64,
        e: u32,
        /// Coefficients c_0..c_{e-1} with x^e = -(c_{e-1} x^{e-1} + ... + c_0).
        reduction: Vec<u64>,
    }

    impl Field {
        pub fn new(p: u64, e: u32) -> Field {
            let reduction = if e == 1 {
                Vec::new()
            } else {
                find_irreducible_tail(p, e)
            };
            Field { p, e, reduction }
        }

        fn digits(&self, x: u64) -> Vec<u64> {
            let mut d = vec![0; self.e as usize];
            let mut x = x;
            for slot in d.iter_mut() {
                *slot = x % self.p;
                x /= self.p;
            }
            d
        }

        fn pack(&self, d: &[u64]) -> u64 {
            d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
        }

        pub fn sub(&self, a: u64, b: u64) -> u64 {
            let da = self.digits(a);
            let db = self.digits(b);
            let diff: Vec<u64> = da
                .iter()
                .zip(&db)
                .map(|(&x, &y)| (x + self.p - y) % self.p)
                .collect();
            self.pack(&diff)
        }

        pub fn mul(&self, a: u64, b: u64) -> u64 {
            if self.e == 1 {
                return a * b % self.p;
            }
            let e = self.e as usize;
            let da = self.digits(a);
            let db = self.digits(b);
            let mut prod = vec![0u64; 2 * e - 1];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % self.p;
                }
            }
            // Reduce degrees e..2e-2 using x^e = -tail.
            for deg in (e..2 * e - 1).rev() {
                let c = prod[deg];
                if c == 0 {
                    continue;
                }
                prod[deg] = 0;
                for (k, &t) in self.reduction.iter().enumerate() {
                    let idx = deg - e + k;
                    prod[idx] = (prod[idx] + c * (self.p - t)) % self.p;
                }
            }
            prod.truncate(e);
            self.pack(&prod)
        }

        pub fn order(&self) -> u64 {
            self.p.pow(self.e)
        }

        pub fn nonzero_squares(&self) -> BTreeSet<u64> {
            (1..self.order()).map(|x| self.mul(x, x)).collect()
        }
    }

    /// Finds the tail c_0..c_{e-1} of the lexicographically first monic
    /// irreducible polynomial x^e + c_{e-1} x^{e-1} + ... + c_0 over GF(p).
    /// For e in {2, 3} irreducibility is equivalent to having no roots.
    fn find_irreducible_tail(p: u64, e: u32) -> Vec<u64> {
        let e = e as usize;
        let count = p.pow(e as u32);
        'candidates: for packed in 0..count {
            let mut tail = Vec::with_capacity(e);
            let mut x = packed;
            for _ in 0..e {
                tail.push(x % p);
                x /= p;
            }
            for root in 0..p {
                // Evaluate x^e + sum tail_i x^i at `root`.
                let mut value = 1u64; // leading monic term, built by Horner below
                for &c in tail.iter().rev() {
                    value = (value * root + c) % p;
                }
                if value == 0 {
                    continue 'candidates;
                }
            }
            return tail;
        }
        unreachable!("irreducible polynomials of degree {e} exist over GF({p})")
    }
}
