//! Reference computations that share no code with the library: matrix
//! groups built from the Cartan matrix, symmetric-group characters from the
//! Frobenius formula, and induction by summing over every element.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use weyl_core::rootsys::WeylGroup;

pub type Mat = Vec<Vec<i64>>;

/// `s_i` acting on simple-root coordinates: `v -> v - <v, alpha_i^vee> alpha_i`.
pub fn reflection_matrices(cartan: &[Vec<i64>]) -> Vec<Mat> {
    let n = cartan.len();
    (0..n)
        .map(|i| {
            let mut m = identity(n);
            // column j is the image of alpha_j
            for j in 0..n {
                m[i][j] -= cartan[i][j];
            }
            m
        })
        .collect()
}

pub fn identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let m = b[0].len();
    (0..n)
        .map(|i| (0..m).map(|j| (0..b.len()).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

/// Order of the matrix group generated by `gens`, by breadth-first closure.
pub fn closure_order(gens: &[Mat], cap: usize) -> usize {
    let start = identity(gens[0].len());
    let mut seen: HashSet<Mat> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(m) = queue.pop_front() {
        for g in gens {
            let next = mat_mul(g, &m);
            if seen.insert(next.clone()) {
                assert!(seen.len() <= cap, "closure exceeded {cap} elements");
                queue.push_back(next);
            }
        }
    }
    seen.len()
}

pub fn word_matrix(gens: &[Mat], word: &[usize]) -> Mat {
    word.iter().fold(identity(gens[0].len()), |acc, &i| mat_mul(&acc, &gens[i]))
}

/// Determinant by cofactor expansion; matrices here are at most 8x8.
pub fn det(m: &Mat) -> i64 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .filter(|&j| m[0][j] != 0)
        .map(|j| {
            let minor: Mat = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
                .collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] * det(&minor)
        })
        .sum()
}

/// `sgn(w) = det` of `w` on the reflection representation.
pub fn sign_of_word(cartan: &[Vec<i64>], word: &[usize]) -> i64 {
    det(&word_matrix(&reflection_matrices(cartan), word))
}

/// The permutation of `0..points` given by the word with `s_i = (i, i+1)`.
pub fn word_permutation(points: usize, word: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..points).collect();
    // p.swap composes on the right, so a forward pass builds s_{i1} s_{i2} ...
    for &i in word {
        p.swap(i, i + 1);
    }
    p
}

pub fn cycle_type(perm: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for s in 0..perm.len() {
        let mut len = 0;
        let mut p = s;
        while !seen[p] {
            seen[p] = true;
            p = perm[p];
            len += 1;
        }
        if len > 0 {
            out.push(len);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            prefix.push(k);
            go(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn transpose(lambda: &[usize]) -> Vec<usize> {
    let width = lambda.first().copied().unwrap_or(0);
    (1..=width).map(|c| lambda.iter().filter(|&&p| p >= c).count()).collect()
}

pub fn show(lambda: &[usize]) -> String {
    let parts: Vec<String> = lambda.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            // inserting the largest value passes over len - pos entries
            let sign = if (p.len() - pos) % 2 == 0 { s } else { -s };
            out.push((q, sign));
        }
    }
    out
}

/// `chi^lambda(mu)` as the coefficient of `x^(lambda + delta)` in
/// `a_delta * p_mu`, with as many variables as `lambda` has parts.
pub fn frobenius_character(lambda: &[usize], mu: &[usize]) -> i64 {
    let l = lambda.len();
    let mut power_sum: HashMap<Vec<usize>, i64> = HashMap::from([(vec![0; l], 1)]);
    for &m in mu {
        let mut next = HashMap::new();
        for (exp, c) in &power_sum {
            for v in 0..l {
                let mut e = exp.clone();
                e[v] += m;
                *next.entry(e).or_insert(0) += c;
            }
        }
        power_sum = next;
    }
    let target: Vec<i64> = (0..l).map(|i| (lambda[i] + l - 1 - i) as i64).collect();
    permutations(l)
        .into_iter()
        .filter_map(|(sigma, s)| {
            let exp: Option<Vec<usize>> = (0..l)
                .map(|i| usize::try_from(target[i] - (l - 1 - sigma[i]) as i64).ok())
                .collect();
            exp.map(|e| s * power_sum.get(&e).copied().unwrap_or(0))
        })
        .sum()
}

/// `ind_H^G f` at `g`, summing over all of `G`:
/// `(1/|H|) sum_{y in G, y g y^-1 in H} f(y g y^-1)`.
pub fn induce_at(w: &WeylGroup, g: usize, ambient: &[usize], sub: &HashSet<usize>, f: impl Fn(usize) -> i64) -> i64 {
    let total: i64 = ambient
        .iter()
        .map(|&y| w.mul(w.mul(y, g), w.inverse(y)))
        .filter(|c| sub.contains(c))
        .map(&f)
        .sum();
    assert_eq!(total % sub.len() as i64, 0, "induced value is not an integer");
    total / sub.len() as i64
}

/// All elements of the subgroup generated by `gens`.
pub fn generated(w: &WeylGroup, gens: &[usize]) -> HashSet<usize> {
    let mut seen = HashSet::from([w.identity()]);
    let mut queue = VecDeque::from([w.identity()]);
    while let Some(x) = queue.pop_front() {
        for &g in gens {
            let y = w.mul(x, g);
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Double cosets `B \ G / A` as element sets, found by brute force.
pub fn double_cosets(w: &WeylGroup, b: &HashSet<usize>, a: &HashSet<usize>) -> Vec<HashSet<usize>> {
    let mut covered = HashSet::new();
    let mut out = Vec::new();
    for x in 0..w.order() {
        if covered.contains(&x) {
            continue;
        }
        let coset: HashSet<usize> = b
            .iter()
            .flat_map(|&u| a.iter().map(move |&v| (u, v)))
            .map(|(u, v)| w.mul(w.mul(u, x), v))
            .collect();
        covered.extend(coset.iter().copied());
        out.push(coset);
    }
    out
}

#[test]
fn frobenius_formula_small_cases() {
    assert_eq!(frobenius_character(&[2, 1], &[1, 1, 1]), 2);
    assert_eq!(frobenius_character(&[2, 1], &[2, 1]), 0);
    assert_eq!(frobenius_character(&[2, 1], &[3]), -1);
    assert_eq!(frobenius_character(&[1, 1, 1], &[2, 1]), -1);
    assert_eq!(frobenius_character(&[3, 1], &[1, 1, 1, 1]), 3);
    assert_eq!(frobenius_character(&[2, 2], &[2, 2]), 2);
}
