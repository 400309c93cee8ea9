//! Root systems from Cartan data and the Weyl group as a permutation group on
//! the roots.
//!
//! Roots are integer vectors in the basis of simple roots. The root list is
//! laid out as `[positive roots..., negative roots...]` where index `p + N`
//! holds `-root[p]`, `N` being the number of positive roots, and the first
//! `rank` positive roots are the simple roots in label order.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Default cap on the number of elements enumerated for a Weyl group.
pub const DEFAULT_MAX_ORDER: usize = 2_000_000;

/// Default cap on the size of a reflection closure.
pub const DEFAULT_ROOT_BOUND: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanType {
    pub fn letter(self) -> char {
        match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
            CartanType::E => 'E',
            CartanType::F => 'F',
            CartanType::G => 'G',
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(CartanType::A),
            "B" => Ok(CartanType::B),
            "C" => Ok(CartanType::C),
            "D" => Ok(CartanType::D),
            "E" => Ok(CartanType::E),
            "F" => Ok(CartanType::F),
            "G" => Ok(CartanType::G),
            _ => Err(Error::InvalidType {
                label: s.to_string(),
                rank: 0,
            }),
        }
    }
}

/// An irreducible Cartan datum together with the dimension of the center of
/// the ambient reductive group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanDatum {
    pub type_label: CartanType,
    pub rank: usize,
    /// `cartan_matrix[i][j] = <alpha_j, alpha_i^vee>`.
    pub cartan_matrix: Vec<Vec<i64>>,
    pub central_rank: usize,
}

impl CartanDatum {
    /// Builds a datum from explicit parts, checking every structural invariant
    /// including agreement with the standard matrix of the declared type.
    pub fn from_parts(
        type_label: CartanType,
        rank: usize,
        cartan_matrix: Vec<Vec<i64>>,
        central_rank: usize,
    ) -> Result<Self> {
        validate_matrix(&cartan_matrix)?;
        let standard = standard_matrix(type_label, rank).ok_or_else(|| Error::InvalidType {
            label: type_label.to_string(),
            rank,
        })?;
        if standard != cartan_matrix {
            return Err(Error::InvalidCartan(format!(
                "matrix does not match the standard Cartan matrix of {type_label}{rank}"
            )));
        }
        Ok(CartanDatum {
            type_label,
            rank,
            cartan_matrix,
            central_rank,
        })
    }

    /// Short name such as `"B3"`.
    pub fn name(&self) -> String {
        format!("{}{}", self.type_label, self.rank)
    }

    /// Fundamental degrees of the Weyl group.
    pub fn fundamental_degrees(&self) -> Vec<u64> {
        fundamental_degrees(self.type_label, self.rank)
    }

    /// Product of the fundamental degrees, i.e. the order of the Weyl group.
    pub fn expected_order(&self) -> u128 {
        self.fundamental_degrees()
            .iter()
            .map(|&d| d as u128)
            .product()
    }
}

/// Returns the standard Cartan matrix of an irreducible type, or `InvalidType`
/// for pairs outside `A(n>=1)`, `B(n>=2)`, `C(n>=3)`, `D(n>=4)`, `F4`, `G2`.
pub fn build_cartan(type_label: CartanType, rank: usize, central_rank: usize) -> Result<CartanDatum> {
    let cartan_matrix = standard_matrix(type_label, rank).ok_or_else(|| Error::InvalidType {
        label: type_label.to_string(),
        rank,
    })?;
    Ok(CartanDatum {
        type_label,
        rank,
        cartan_matrix,
        central_rank,
    })
}

fn is_supported(type_label: CartanType, rank: usize) -> bool {
    match type_label {
        CartanType::A => rank >= 1,
        CartanType::B => rank >= 2,
        CartanType::C => rank >= 3,
        CartanType::D => rank >= 4,
        CartanType::E => false,
        CartanType::F => rank == 4,
        CartanType::G => rank == 2,
    }
}

fn standard_matrix(type_label: CartanType, rank: usize) -> Option<Vec<Vec<i64>>> {
    if !is_supported(type_label, rank) {
        return None;
    }
    let n = rank;
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, ij: i64, ji: i64| {
        m[i][j] = ij;
        m[j][i] = ji;
    };
    match type_label {
        CartanType::A => {
            for i in 0..n.saturating_sub(1) {
                link(i, i + 1, -1, -1);
            }
        }
        CartanType::B => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            // alpha_n short
            link(n - 2, n - 1, -1, -2);
        }
        CartanType::C => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 2, n - 1, -2, -1);
        }
        CartanType::D => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 3, n - 1, -1, -1);
        }
        CartanType::F => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        CartanType::G => {
            link(0, 1, -1, -3);
        }
        CartanType::E => unreachable!(),
    }
    Some(m)
}

fn fundamental_degrees(type_label: CartanType, rank: usize) -> Vec<u64> {
    let n = rank as u64;
    match type_label {
        CartanType::A => (2..=n + 1).collect(),
        CartanType::B | CartanType::C => (1..=n).map(|i| 2 * i).collect(),
        CartanType::D => {
            let mut d: Vec<u64> = (1..n).map(|i| 2 * i).collect();
            d.push(n);
            d
        }
        CartanType::E => match rank {
            6 => vec![2, 5, 6, 8, 9, 12],
            7 => vec![2, 6, 8, 10, 12, 14, 18],
            8 => vec![2, 8, 12, 14, 18, 20, 24, 30],
            _ => Vec::new(),
        },
        CartanType::F => vec![2, 6, 8, 12],
        CartanType::G => vec![2, 6],
    }
}

/// Checks the local invariants of a generalized Cartan matrix of finite type.
pub fn validate_matrix(m: &[Vec<i64>]) -> Result<()> {
    let n = m.len();
    if n == 0 {
        return Err(Error::InvalidCartan("empty matrix".into()));
    }
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(Error::InvalidCartan(format!("row {} has length {}", i + 1, row.len())));
        }
        if row[i] != 2 {
            return Err(Error::InvalidCartan(format!("diagonal entry {} is not 2", i + 1)));
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            let (a, b) = (m[i][j], m[j][i]);
            if a > 0 {
                return Err(Error::InvalidCartan(format!("entry ({},{}) is positive", i + 1, j + 1)));
            }
            if (a == 0) != (b == 0) {
                return Err(Error::InvalidCartan(format!(
                    "entries ({},{}) and ({},{}) are not simultaneously zero",
                    i + 1,
                    j + 1,
                    j + 1,
                    i + 1
                )));
            }
            if !(0..=3).contains(&(a * b)) {
                return Err(Error::InvalidCartan(format!(
                    "product of entries ({},{}) and ({},{}) is {}",
                    i + 1,
                    j + 1,
                    j + 1,
                    i + 1,
                    a * b
                )));
            }
        }
    }
    Ok(())
}

/// A finite crystallographic root system in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    rank: usize,
    cartan_matrix: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    simple_reflections: Vec<Vec<u16>>,
}

/// Closes the simple roots under the simple reflections of `cartan`.
pub fn build_root_system(cartan: &CartanDatum) -> Result<RootSystem> {
    RootSystem::from_matrix(&cartan.cartan_matrix, DEFAULT_ROOT_BOUND)
}

impl RootSystem {
    /// Reflection closure for an arbitrary matrix; `bound` caps the number of
    /// roots so that a matrix of infinite type fails with `NonFinite`.
    pub fn from_matrix(cartan_matrix: &[Vec<i64>], bound: usize) -> Result<Self> {
        validate_matrix(cartan_matrix)?;
        let rank = cartan_matrix.len();
        let reflect = |i: usize, v: &[i64]| -> Vec<i64> {
            let pairing: i64 = v.iter().zip(&cartan_matrix[i]).map(|(a, b)| a * b).sum();
            let mut out = v.to_vec();
            out[i] -= pairing;
            out
        };

        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut queue = VecDeque::new();
        for i in 0..rank {
            let mut e = vec![0; rank];
            e[i] = 1;
            seen.insert(e.clone(), ());
            queue.push_back(e);
        }
        while let Some(v) = queue.pop_front() {
            for i in 0..rank {
                let w = reflect(i, &v);
                if !seen.contains_key(&w) {
                    if seen.len() >= bound {
                        return Err(Error::NonFinite { bound });
                    }
                    seen.insert(w.clone(), ());
                    queue.push_back(w);
                }
            }
        }

        let mut positive = Vec::new();
        for v in seen.keys() {
            let nonneg = v.iter().all(|&c| c >= 0);
            let nonpos = v.iter().all(|&c| c <= 0);
            if !nonneg && !nonpos {
                return Err(Error::InvalidCartan(format!("root {v:?} has mixed signs")));
            }
            if nonneg {
                positive.push(v.clone());
            }
        }
        // height first; within a height, larger leading coordinates first so
        // that the simple roots come out in label order
        positive.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        if positive.len() * 2 != seen.len() {
            return Err(Error::InvalidCartan("root set is not symmetric under negation".into()));
        }
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|v| v.iter().map(|c| -c).collect::<Vec<_>>()));

        let index: HashMap<&[i64], usize> =
            roots.iter().enumerate().map(|(k, v)| (v.as_slice(), k)).collect();
        let simple_reflections = (0..rank)
            .map(|i| {
                roots
                    .iter()
                    .map(|v| index[reflect(i, v).as_slice()] as u16)
                    .collect()
            })
            .collect();

        Ok(RootSystem {
            rank,
            cartan_matrix: cartan_matrix.to_vec(),
            roots,
            simple_reflections,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan_matrix
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.roots[..self.num_positive()]
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    /// Permutation of the root list induced by the simple reflection `s_i`.
    pub fn simple_reflection(&self, i: usize) -> &[u16] {
        &self.simple_reflections[i]
    }
}

/// A finite Weyl group enumerated as permutations of the root list.
///
/// Elements are indexed in canonical order: ascending length, then
/// lexicographic order of the image of the root list. Index 0 is the identity
/// and the last index is the longest element.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    roots: RootSystem,
    perms: Vec<Box<[u16]>>,
    lookup: HashMap<Box<[u16]>, u32>,
    lengths: Vec<u32>,
    generators: Vec<usize>,
    inverses: Vec<u32>,
}

/// Breadth-first enumeration of the group generated by the simple reflections.
pub fn enumerate_group(rs: &RootSystem, max_order: usize) -> Result<WeylGroup> {
    let n = rs.roots().len();
    let identity: Box<[u16]> = (0..n as u16).collect();
    let mut depth: HashMap<Box<[u16]>, u32> = HashMap::new();
    depth.insert(identity.clone(), 0);
    let mut frontier = vec![identity];
    let mut level = 0;
    while !frontier.is_empty() {
        level += 1;
        let mut next = Vec::new();
        for w in &frontier {
            for i in 0..rs.rank() {
                let s = rs.simple_reflection(i);
                let sw: Box<[u16]> = w.iter().map(|&r| s[r as usize]).collect();
                if !depth.contains_key(&sw) {
                    if depth.len() >= max_order {
                        return Err(Error::SizeLimit { limit: max_order });
                    }
                    depth.insert(sw.clone(), level);
                    next.push(sw);
                }
            }
        }
        frontier = next;
    }

    let mut elements: Vec<(u32, Box<[u16]>)> = depth.into_iter().map(|(p, d)| (d, p)).collect();
    elements.sort_unstable();
    let lengths: Vec<u32> = elements.iter().map(|(d, _)| *d).collect();
    let perms: Vec<Box<[u16]>> = elements.into_iter().map(|(_, p)| p).collect();
    let lookup: HashMap<Box<[u16]>, u32> = perms
        .iter()
        .enumerate()
        .map(|(k, p)| (p.clone(), k as u32))
        .collect();
    let generators = (0..rs.rank())
        .map(|i| lookup[rs.simple_reflection(i)] as usize)
        .collect();
    let inverses = perms
        .iter()
        .map(|p| {
            let mut inv = vec![0u16; n];
            for (r, &img) in p.iter().enumerate() {
                inv[img as usize] = r as u16;
            }
            lookup[inv.as_slice()]
        })
        .collect();

    Ok(WeylGroup {
        roots: rs.clone(),
        perms,
        lookup,
        lengths,
        generators,
        inverses,
    })
}

impl WeylGroup {
    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn rank(&self) -> usize {
        self.roots.rank()
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.roots
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn longest(&self) -> usize {
        self.perms.len() - 1
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> usize {
        self.generators[i]
    }

    pub fn permutation(&self, w: usize) -> &[u16] {
        &self.perms[w]
    }

    /// Word length, recorded as the breadth-first depth during enumeration.
    pub fn length(&self, w: usize) -> usize {
        self.lengths[w] as usize
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversion_count(&self, w: usize) -> usize {
        let np = self.roots.num_positive();
        self.perms[w][..np].iter().filter(|&&r| r as usize >= np).count()
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.inverses[w] as usize
    }

    /// Product `a * b`, acting on roots as `a(b(r))`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let pa = &self.perms[a];
        let prod: Vec<u16> = self.perms[b].iter().map(|&r| pa[r as usize]).collect();
        self.lookup[prod.as_slice()] as usize
    }

    /// `x * w * x^-1`.
    pub fn conjugate(&self, x: usize, w: usize) -> usize {
        let px = &self.perms[x];
        let pw = &self.perms[w];
        let pxi = &self.perms[self.inverse(x)];
        let prod: Vec<u16> = pxi
            .iter()
            .map(|&r| px[pw[r as usize] as usize])
            .collect();
        self.lookup[prod.as_slice()] as usize
    }

    pub fn index_of(&self, perm: &[u16]) -> Option<usize> {
        self.lookup.get(perm).map(|&k| k as usize)
    }

    /// Sign character value `(-1)^length(w)`.
    pub fn sign(&self, w: usize) -> i64 {
        if self.lengths[w] % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Trace of `w` on the reflection representation, read off from the
    /// images of the simple roots.
    pub fn reflection_trace(&self, w: usize) -> i64 {
        let roots = self.roots.roots();
        (0..self.rank())
            .map(|j| roots[self.perms[w][j] as usize][j])
            .sum()
    }

    /// A reduced word `w = s_{i1} s_{i2} ...` (0-based generator labels),
    /// always stripping the smallest left descent first.
    pub fn reduced_word(&self, w: usize) -> Vec<usize> {
        let np = self.roots.num_positive();
        let mut word = Vec::with_capacity(self.length(w));
        let mut cur = w;
        while cur != self.identity() {
            let inv = self.inverse(cur);
            let i = (0..self.rank())
                .find(|&i| self.perms[inv][i] as usize >= np)
                .expect("non-identity element has a left descent");
            word.push(i);
            cur = self.mul(self.generators[i], cur);
        }
        word
    }

    /// Reduced word rendered with 1-based labels, e.g. `"s1*s2"`; `"e"` for
    /// the identity.
    pub fn word_string(&self, w: usize) -> String {
        let word = self.reduced_word(w);
        if word.is_empty() {
            return "e".to_string();
        }
        word.iter()
            .map(|i| format!("s{}", i + 1))
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Whether `w` is a reflection: an involution whose `-1` eigenspace on
    /// the reflection representation is a line.
    pub fn is_reflection(&self, w: usize) -> bool {
        w != self.identity()
            && self.mul(w, w) == self.identity()
            && self.reflection_trace(w) == self.rank() as i64 - 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(t: CartanType, n: usize) -> WeylGroup {
        let c = build_cartan(t, n, 0).unwrap();
        let rs = build_root_system(&c).unwrap();
        enumerate_group(&rs, DEFAULT_MAX_ORDER).unwrap()
    }

    #[test]
    fn cartan_examples() {
        assert_eq!(build_cartan(CartanType::A, 1, 0).unwrap().cartan_matrix, vec![vec![2]]);
        assert_eq!(
            build_cartan(CartanType::G, 2, 0).unwrap().cartan_matrix,
            vec![vec![2, -1], vec![-3, 2]]
        );
        for (t, n) in [
            (CartanType::D, 3),
            (CartanType::D, 2),
            (CartanType::C, 2),
            (CartanType::E, 8),
            (CartanType::E, 6),
            (CartanType::A, 0),
            (CartanType::G, 3),
            (CartanType::F, 3),
        ] {
            let err = build_cartan(t, n, 0).unwrap_err();
            assert!(matches!(err, Error::InvalidType { .. }), "{t}{n}");
            assert!(err.to_string().contains("accepted types"));
        }
    }

    #[test]
    fn standard_matrices_satisfy_invariants() {
        for (t, n) in [
            (CartanType::A, 5),
            (CartanType::B, 4),
            (CartanType::C, 3),
            (CartanType::D, 5),
            (CartanType::F, 4),
            (CartanType::G, 2),
        ] {
            let c = build_cartan(t, n, 1).unwrap();
            validate_matrix(&c.cartan_matrix).unwrap();
            CartanDatum::from_parts(t, n, c.cartan_matrix.clone(), 1).unwrap();
        }
    }

    #[test]
    fn from_parts_rejects_wrong_matrix() {
        let m = vec![vec![2, -1], vec![-1, 2]];
        assert!(matches!(
            CartanDatum::from_parts(CartanType::B, 2, m, 0),
            Err(Error::InvalidCartan(_))
        ));
        assert!(validate_matrix(&[vec![2, 1], vec![1, 2]]).is_err());
        assert!(validate_matrix(&[vec![2, -1], vec![0, 2]]).is_err());
        assert!(validate_matrix(&[vec![2, -4], vec![-1, 2]]).is_err());
    }

    #[test]
    fn root_counts() {
        for (t, n, total) in [(CartanType::A, 2, 6), (CartanType::B, 2, 8), (CartanType::A, 1, 2)] {
            let rs = build_root_system(&build_cartan(t, n, 0).unwrap()).unwrap();
            assert_eq!(rs.roots().len(), total);
            assert_eq!(rs.positive_roots().len(), total / 2);
        }
    }

    #[test]
    fn affine_matrix_is_not_finite() {
        // affine A2: every local invariant holds but the closure is infinite
        let affine = vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]];
        assert_eq!(
            RootSystem::from_matrix(&affine, 500),
            Err(Error::NonFinite { bound: 500 })
        );
    }

    #[test]
    fn simple_reflection_negates_its_root() {
        let rs = build_root_system(&build_cartan(CartanType::F, 4, 0).unwrap()).unwrap();
        let np = rs.num_positive();
        for i in 0..4 {
            let s = rs.simple_reflection(i);
            assert_eq!(s[i] as usize, i + np);
            for p in 0..np {
                if p != i {
                    assert!((s[p] as usize) < np);
                }
            }
        }
    }

    #[test]
    fn group_orders() {
        assert_eq!(group(CartanType::A, 2).order(), 6);
        assert_eq!(group(CartanType::B, 3).order(), 48);
        assert_eq!(group(CartanType::F, 4).order(), 1152);
    }

    #[test]
    fn size_limit() {
        let rs = build_root_system(&build_cartan(CartanType::A, 4, 0).unwrap()).unwrap();
        assert_eq!(enumerate_group(&rs, 100).unwrap_err(), Error::SizeLimit { limit: 100 });
        assert_eq!(enumerate_group(&rs, 120).unwrap().order(), 120);
    }

    #[test]
    fn longest_element() {
        for (t, n) in [(CartanType::A, 3), (CartanType::B, 3), (CartanType::G, 2), (CartanType::D, 4)] {
            let w = group(t, n);
            let w0 = w.longest();
            assert_eq!(w.length(w0), w.root_system().num_positive());
            assert_eq!(w.mul(w0, w0), w.identity());
            assert_eq!(
                (0..w.order()).filter(|&x| w.length(x) == w.length(w0)).count(),
                1
            );
        }
    }

    #[test]
    fn reduced_words_multiply_back() {
        let w = group(CartanType::B, 3);
        for x in 0..w.order() {
            let word = w.reduced_word(x);
            assert_eq!(word.len(), w.length(x));
            let prod = word
                .iter()
                .fold(w.identity(), |acc, &i| w.mul(acc, w.generator(i)));
            assert_eq!(prod, x);
        }
        assert_eq!(w.word_string(w.identity()), "e");
    }

    #[test]
    fn reflection_character_of_a2() {
        let w = group(CartanType::A, 2);
        // identity, s1, s1*s2
        assert_eq!(w.reflection_trace(0), 2);
        assert_eq!(w.reflection_trace(w.generator(0)), 0);
        assert_eq!(w.reflection_trace(w.mul(w.generator(0), w.generator(1))), -1);
    }
}
