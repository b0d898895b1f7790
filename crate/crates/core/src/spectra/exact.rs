//! Exact inertia by congruence elimination over Gaussian rationals.
//!
//! Sylvester's law of inertia: congruence M ↦ C* M C with invertible C
//! preserves the signature, so eliminating rows/columns with symmetric
//! 1×1 and 2×2 pivots reads the inertia straight off the pivots without
//! ever computing an eigenvalue. Every finite double is a dyadic
//! rational, so the whole run is rounding-free.

use nalgebra::{Complex, DMatrix};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::spectra::Inertia;
use crate::Result;

pub(crate) type C = Complex<BigRational>;

fn rational(x: f64, what: &str) -> Result<BigRational> {
    BigRational::from_float(x)
        .ok_or_else(|| Error::ExactMode(format!("{what} is not finite: {x}")))
}

fn convert(m: &DMatrix<Complex<f64>>) -> Result<Vec<Vec<C>>> {
    let n = m.nrows();
    let mut out = vec![vec![C::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let z = m[(i, j)];
            out[i][j] = Complex::new(
                rational(z.re, "matrix entry")?,
                rational(z.im, "matrix entry")?,
            );
        }
    }
    for i in 0..n {
        if !out[i][i].im.is_zero() {
            return Err(Error::ExactMode(format!(
                "diagonal entry {i} has nonzero imaginary part"
            )));
        }
        for j in i + 1..n {
            if out[i][j] != out[j][i].conj() {
                return Err(Error::ExactMode(format!(
                    "entries ({i},{j}) and ({j},{i}) are not exact conjugates"
                )));
            }
        }
    }
    Ok(out)
}

fn swap_symmetric(m: &mut [Vec<C>], a: usize, b: usize) {
    if a == b {
        return;
    }
    m.swap(a, b);
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// Inertia of a Hermitian matrix with exactly-representable entries.
pub fn rational_inertia(input: &DMatrix<Complex<f64>>) -> Result<Inertia> {
    Ok(inertia_of_cells(convert(input)?))
}

/// Elimination core for callers that already hold exact rational cells
/// (assumed Hermitian).
pub(crate) fn inertia_of_cells(mut m: Vec<Vec<C>>) -> Inertia {
    let n = m.len();
    let mut result = Inertia {
        n_plus: 0,
        n_zero: 0,
        n_minus: 0,
    };

    let mut i = 0;
    while i < n {
        // Prefer a 1×1 pivot: any nonzero diagonal entry in the active block.
        if let Some(j) = (i..n).find(|&j| !m[j][j].re.is_zero()) {
            swap_symmetric(&mut m, i, j);
            let d = m[i][i].re.clone();
            if d.is_positive() {
                result.n_plus += 1;
            } else {
                result.n_minus += 1;
            }
            for u in i + 1..n {
                if m[u][i].is_zero() {
                    continue;
                }
                let factor = m[u][i].clone() / C::from(d.clone());
                for v in u..n {
                    let delta = factor.clone() * m[i][v].clone();
                    m[u][v] = m[u][v].clone() - delta;
                    if v != u {
                        m[v][u] = m[u][v].conj();
                    }
                }
                m[u][i] = C::zero();
                m[i][u] = C::zero();
            }
            i += 1;
            continue;
        }

        // All active diagonals are zero. Find any nonzero off-diagonal
        // entry; if there is none the rest of the spectrum is zero.
        let mut pivot = None;
        'search: for r in i..n {
            for c in r + 1..n {
                if !m[r][c].is_zero() {
                    pivot = Some((r, c));
                    break 'search;
                }
            }
        }
        let Some((r, c)) = pivot else {
            result.n_zero += n - i;
            break;
        };
        // r < c and r >= i force c >= i+1, so both swaps land the entry
        // at (i, i+1) without colliding.
        swap_symmetric(&mut m, i, r);
        swap_symmetric(&mut m, i + 1, c);

        // 2×2 pivot [[0, b], [conj(b), 0]] has eigenvalues ±|b|.
        let b = m[i][i + 1].clone();
        result.n_plus += 1;
        result.n_minus += 1;
        let inv_b = C::one() / b.clone();
        let inv_bbar = C::one() / b.conj();
        for u in i + 2..n {
            let x = m[u][i].clone();
            let y = m[u][i + 1].clone();
            if x.is_zero() && y.is_zero() {
                continue;
            }
            for v in u..n {
                let delta = y.clone() * inv_b.clone() * m[i][v].clone()
                    + x.clone() * inv_bbar.clone() * m[i + 1][v].clone();
                m[u][v] = m[u][v].clone() - delta;
                if v != u {
                    m[v][u] = m[u][v].conj();
                }
            }
            m[u][i] = C::zero();
            m[i][u] = C::zero();
            m[u][i + 1] = C::zero();
            m[i + 1][u] = C::zero();
        }
        i += 2;
    }
    result
}
