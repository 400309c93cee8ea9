//! Exact linear algebra over the rationals, sized for class algebras
//! (dimension = number of conjugacy classes, a few dozen at most).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// A subspace of `Q^n` held as a basis in reduced row echelon form.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace {
    pub basis: Vec<Vec<Q>>,
    pub pivots: Vec<usize>,
}

impl Subspace {
    pub fn full(n: usize) -> Self {
        let basis = (0..n)
            .map(|i| {
                let mut v = vec![Q::zero(); n];
                v[i] = Q::one();
                v
            })
            .collect();
        Subspace {
            basis,
            pivots: (0..n).collect(),
        }
    }

    /// Span of `vectors`, reduced to echelon form.
    pub fn span(vectors: Vec<Vec<Q>>) -> Self {
        let (basis, pivots) = rref(vectors);
        Subspace { basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Matrix of `op` restricted to this subspace, assuming the subspace is
    /// invariant. Column `j` holds the coordinates of `op(basis[j])`.
    pub fn restrict(&self, op: impl Fn(&[Q]) -> Vec<Q>) -> Vec<Vec<Q>> {
        let m = self.dim();
        let mut a = vec![vec![Q::zero(); m]; m];
        for (j, b) in self.basis.iter().enumerate() {
            let image = op(b);
            for (l, &p) in self.pivots.iter().enumerate() {
                a[l][j] = image[p].clone();
            }
        }
        a
    }

    /// Ambient vector with coordinates `coords` in this basis.
    pub fn lift(&self, coords: &[Q]) -> Vec<Q> {
        let n = self.basis.first().map_or(0, Vec::len);
        let mut v = vec![Q::zero(); n];
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (vi, bi) in v.iter_mut().zip(b) {
                *vi += c * bi;
            }
        }
        v
    }
}

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
pub fn rref(mut rows: Vec<Vec<Q>>) -> (Vec<Vec<Q>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Basis of `{x : a x = 0}` for a square or rectangular matrix `a`.
pub fn nullspace(a: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let ncols = a.first().map_or(0, Vec::len);
    let (rows, pivots) = rref(a.to_vec());
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Characteristic polynomial `det(x I - a)`, coefficients from the constant
/// term upwards, via Hessenberg reduction.
pub fn char_poly(a: &[Vec<Q>]) -> Vec<Q> {
    let n = a.len();
    let mut h = a.to_vec();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| !h[i][m - 1].is_zero()) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let pivot = h[m][m - 1].clone();
        for j in m + 1..n {
            if h[j][m - 1].is_zero() {
                continue;
            }
            let u = &h[j][m - 1] / &pivot;
            for k in 0..n {
                let t = &u * &h[m][k];
                h[j][k] -= t;
            }
            for row in h.iter_mut() {
                let t = &u * &row[j];
                row[m] += t;
            }
        }
    }

    // p[k] is the characteristic polynomial of the leading k x k block
    let mut p: Vec<Vec<Q>> = vec![vec![Q::one()]];
    for m in 1..=n {
        let hm = m - 1;
        // (x - h_mm) p_{m-1}
        let prev = &p[m - 1];
        let mut next = vec![Q::zero(); m + 1];
        for (k, c) in prev.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= &h[hm][hm] * c;
        }
        let mut t = Q::one();
        for i in 1..m {
            t *= &h[hm - i + 1][hm - i];
            let coeff = &h[hm - i][hm] * &t;
            if coeff.is_zero() {
                continue;
            }
            for (k, c) in p[m - i - 1].iter().enumerate() {
                next[k] -= &coeff * c;
            }
        }
        p.push(next);
    }
    p.pop().unwrap()
}

/// Distinct integer roots of an integer polynomial within `[-bound, bound]`,
/// ascending. Returns `None` if some coefficient is not an integer.
pub fn integer_roots(poly: &[Q], bound: u64) -> Option<Vec<i64>> {
    if poly.iter().any(|c| !c.is_integer()) {
        return None;
    }
    let coeffs: Vec<BigInt> = poly.iter().map(|c| c.to_integer()).collect();
    // strip the factor x^k so that zero is handled separately
    let lowest = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
    let reduced = &coeffs[lowest..];
    let mut roots = Vec::new();
    if lowest > 0 {
        roots.push(0);
    }
    if reduced.len() <= 1 {
        return Some(roots);
    }

    const PRIMES: [u64; 2] = [2_147_483_647, 2_305_843_009_213_693_951];
    let residues: Vec<Vec<u64>> = PRIMES
        .iter()
        .map(|&m| {
            let mb = BigInt::from(m);
            reduced
                .iter()
                .map(|c| {
                    let r = ((c % &mb) + &mb) % &mb;
                    r.to_u64().unwrap()
                })
                .collect()
        })
        .collect();
    let eval_mod = |x: i64, res: &[u64], m: u64| -> u64 {
        let xm = x.rem_euclid(m as i64) as u128;
        let m = m as u128;
        let mut acc: u128 = 0;
        for &c in res.iter().rev() {
            acc = (acc * xm + c as u128) % m;
        }
        acc as u64
    };
    let bound = bound as i64;
    for x in -bound..=bound {
        if x == 0 {
            continue;
        }
        if PRIMES
            .iter()
            .zip(&residues)
            .any(|(&m, res)| eval_mod(x, res, m) != 0)
        {
            continue;
        }
        let xb = BigInt::from(x);
        let mut acc = BigInt::zero();
        for c in reduced.iter().rev() {
            acc = acc * &xb + c;
        }
        if acc.is_zero() {
            roots.push(x);
        }
    }
    roots.sort_unstable();
    Some(roots)
}

/// Exact integer square root, if `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}
