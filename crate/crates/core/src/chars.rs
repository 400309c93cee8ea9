//! Exact class functions, virtual characters and character tables.
//!
//! Tables are computed from the class algebra. Writing
//! `a[i][j][k] = #{(x, y) in C_i x C_j : x y = g_k}` for a fixed representative
//! `g_k` of each class, the central character `omega(K_k) = |C_k| chi(g_k) / chi(1)`
//! of every irreducible `chi` is a common eigenvector of the operators
//! `(M_i v)_j = sum_k a[i][j][k] v_k`, with eigenvalue `omega(K_i)`. Weyl
//! groups are rational, so all eigenvalues are integers and the simultaneous
//! eigenspaces can be split exactly over `Q`. Each operator applied is a random
//! non-negative combination of the `M_i`, drawn from a seeded generator.
//!
//! Irreducibles are ordered by ascending degree and then by descending value
//! list, so the trivial character comes first.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::grp::{GroupId, Subgroup};
use crate::linalg::{char_poly, exact_sqrt, integer_roots, nullspace, q, Subspace, Q};
use crate::partition::{mn_character, partitions, Partition};
use crate::rootsys::{CartanType, WeylGroup};

const MAX_SPLIT_ROUNDS: usize = 64;

/// A rational-valued function on the conjugacy classes of one group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    group: GroupId,
    values: Vec<Q>,
}

impl ClassFunction {
    pub fn new(group: GroupId, values: Vec<Q>) -> Self {
        ClassFunction { group, values }
    }

    pub fn from_integers(group: GroupId, values: &[i64]) -> Self {
        ClassFunction {
            group,
            values: values.iter().map(|&v| q(v)).collect(),
        }
    }

    pub fn zero(group: GroupId, num_classes: usize) -> Self {
        ClassFunction {
            group,
            values: vec![Q::zero(); num_classes],
        }
    }

    pub fn group(&self) -> GroupId {
        self.group
    }

    pub fn values(&self) -> &[Q] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Q {
        &self.values[class]
    }

    fn same_group(&self, other: &ClassFunction) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch {
                expected: self.group,
                found: other.group,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.same_group(other)?;
        Ok(ClassFunction {
            group: self.group,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.same_group(other)?;
        Ok(ClassFunction {
            group: self.group,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, c: &Q) -> ClassFunction {
        ClassFunction {
            group: self.group,
            values: self.values.iter().map(|a| a * c).collect(),
        }
    }

    /// Pointwise product.
    pub fn pointwise(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.same_group(other)?;
        Ok(ClassFunction {
            group: self.group,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect(),
        })
    }

    /// Integer values, if every value is an integer.
    pub fn to_integers(&self) -> Option<Vec<i64>> {
        self.values
            .iter()
            .map(|v| if v.is_integer() { v.to_integer().to_i64() } else { None })
            .collect()
    }
}

/// `<f, g> = (1/|G|) sum_C |C| f(C) g(C^-1)`.
pub fn inner_product(group: &Subgroup, f: &ClassFunction, g: &ClassFunction) -> Result<Q> {
    for h in [f, g] {
        if h.group != group.id() {
            return Err(Error::GroupMismatch {
                expected: group.id(),
                found: h.group,
            });
        }
    }
    let classes = group.classes();
    let mut total = Q::zero();
    for c in 0..classes.len() {
        let term = &f.values[c] * &g.values[classes.inverse_class(c)];
        total += term * q(classes.size(c) as i64);
    }
    Ok(total / q(group.order() as i64))
}

pub fn trivial(group: &Subgroup) -> ClassFunction {
    ClassFunction::from_integers(group.id(), &vec![1; group.num_classes()])
}

/// `w -> (-1)^length(w)`, length taken in the ambient Weyl group.
pub fn sign(w: &WeylGroup, group: &Subgroup) -> ClassFunction {
    let vals: Vec<i64> = group
        .classes()
        .classes()
        .iter()
        .map(|cl| w.sign(cl.representative))
        .collect();
    ClassFunction::from_integers(group.id(), &vals)
}

/// Trace on the reflection representation.
pub fn reflection(w: &WeylGroup, group: &Subgroup) -> ClassFunction {
    let vals: Vec<i64> = group
        .classes()
        .classes()
        .iter()
        .map(|cl| w.reflection_trace(cl.representative))
        .collect();
    ClassFunction::from_integers(group.id(), &vals)
}

/// Character of the regular representation.
pub fn regular(group: &Subgroup) -> ClassFunction {
    let mut vals = vec![0; group.num_classes()];
    vals[0] = group.order() as i64;
    ClassFunction::from_integers(group.id(), &vals)
}

/// An element of the Grothendieck group: integer coordinates in the canonical
/// irreducible basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VirtualCharacter {
    group: GroupId,
    coeffs: Vec<i64>,
}

impl VirtualCharacter {
    pub fn new(group: GroupId, coeffs: Vec<i64>) -> Self {
        VirtualCharacter { group, coeffs }
    }

    /// The `i`-th irreducible as a unit vector.
    pub fn unit(group: GroupId, len: usize, i: usize) -> Self {
        let mut coeffs = vec![0; len];
        coeffs[i] = 1;
        VirtualCharacter { group, coeffs }
    }

    pub fn group(&self) -> GroupId {
        self.group
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn add(&self, other: &VirtualCharacter) -> Result<VirtualCharacter> {
        if self.group != other.group {
            return Err(Error::GroupMismatch {
                expected: self.group,
                found: other.group,
            });
        }
        Ok(VirtualCharacter {
            group: self.group,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn neg(&self) -> VirtualCharacter {
        VirtualCharacter {
            group: self.group,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    /// Index of the irreducible, if this is a single irreducible with
    /// coefficient one.
    pub fn as_irreducible(&self) -> Option<usize> {
        let mut hit = None;
        for (i, &c) in self.coeffs.iter().enumerate() {
            match c {
                0 => {}
                1 if hit.is_none() => hit = Some(i),
                _ => return None,
            }
        }
        hit
    }
}

/// The irreducible characters of a group, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    group: GroupId,
    order: usize,
    class_sizes: Vec<usize>,
    inverse_class: Vec<usize>,
    rows: Vec<Vec<i64>>,
    labels: Option<Vec<Partition>>,
}

impl CharacterTable {
    /// Wraps externally supplied rows (e.g. from a cache), sorting them
    /// canonically and rejecting anything that is not the full table.
    pub fn from_rows(group: &Subgroup, mut rows: Vec<Vec<i64>>) -> Result<Self> {
        sort_canonical(&mut rows);
        let table = CharacterTable {
            group: group.id(),
            order: group.order(),
            class_sizes: group.classes().classes().iter().map(|c| c.size).collect(),
            inverse_class: (0..group.num_classes())
                .map(|c| group.classes().inverse_class(c))
                .collect(),
            rows,
            labels: None,
        };
        let problems = table.integrity_violations();
        if let Some(p) = problems.first() {
            return Err(Error::Irrationality(format!("table invariant violated: {p}")));
        }
        Ok(table)
    }

    pub fn group(&self) -> GroupId {
        self.group
    }

    pub fn group_order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.rows.iter().map(|r| r[0]).collect()
    }

    pub fn irreducible(&self, i: usize) -> ClassFunction {
        ClassFunction::from_integers(self.group, &self.rows[i])
    }

    pub fn irreducibles(&self) -> impl Iterator<Item = ClassFunction> + '_ {
        (0..self.rows.len()).map(|i| self.irreducible(i))
    }

    /// Index of the row equal to `values`.
    pub fn find(&self, values: &[i64]) -> Option<usize> {
        self.rows.iter().position(|r| r == values)
    }

    pub fn trivial_index(&self) -> usize {
        self.find(&vec![1; self.class_sizes.len()]).expect("trivial character present")
    }

    pub fn partition_labels(&self) -> Option<&[Partition]> {
        self.labels.as_deref()
    }

    /// Display label: the partition in type A, otherwise `"<degree>_<k>"`
    /// with `k` counting irreducibles of that degree from 1.
    pub fn label(&self, i: usize) -> String {
        if let Some(labels) = &self.labels {
            return labels[i].to_string();
        }
        let d = self.rows[i][0];
        let ordinal = self.rows[..=i].iter().filter(|r| r[0] == d).count();
        format!("{d}_{ordinal}")
    }

    fn pairing(&self, a: &[i64], b: &[i64]) -> i128 {
        (0..self.class_sizes.len())
            .map(|c| self.class_sizes[c] as i128 * a[c] as i128 * b[self.inverse_class[c]] as i128)
            .sum()
    }

    /// Every violated table invariant, as human-readable lines.
    pub fn integrity_violations(&self) -> Vec<String> {
        let k = self.class_sizes.len();
        let n = self.order as i128;
        let mut out = Vec::new();
        if self.rows.len() != k {
            out.push(format!("{} irreducibles for {} classes", self.rows.len(), k));
            return out;
        }
        if let Some(r) = self.rows.iter().position(|r| r.len() != k) {
            out.push(format!("row {r} has {} values", self.rows[r].len()));
            return out;
        }
        for i in 0..k {
            if self.rows[i][0] <= 0 {
                out.push(format!("row {i} has non-positive degree {}", self.rows[i][0]));
            } else if self.order as i64 % self.rows[i][0] != 0 {
                out.push(format!("degree {} does not divide {}", self.rows[i][0], self.order));
            }
            for j in 0..k {
                let expected = if i == j { n } else { 0 };
                let got = self.pairing(&self.rows[i], &self.rows[j]);
                if got != expected {
                    out.push(format!("rows {i},{j}: |G|<chi_i,chi_j> = {got}, expected {expected}"));
                }
            }
        }
        for c in 0..k {
            for d in 0..k {
                let dinv = self.inverse_class[d];
                let got: i128 = self.rows.iter().map(|r| r[c] as i128 * r[dinv] as i128).sum();
                let expected = if c == d { n / self.class_sizes[c] as i128 } else { 0 };
                if got != expected {
                    out.push(format!("columns {c},{d}: sum = {got}, expected {expected}"));
                }
            }
        }
        let deg_sq: i128 = self.rows.iter().map(|r| (r[0] as i128).pow(2)).sum();
        if deg_sq != n {
            out.push(format!("sum of squared degrees {deg_sq} != {n}"));
        }
        out
    }
}

fn sort_canonical(rows: &mut [Vec<i64>]) {
    rows.sort_by(|a, b| a[0].cmp(&b[0]).then_with(|| b.cmp(a)));
}

/// Class multiplication coefficients `a[i][j][k]`.
fn class_algebra(w: &WeylGroup, group: &Subgroup) -> Vec<Vec<Vec<i64>>> {
    let classes = group.classes();
    let k = classes.len();
    let mut a = vec![vec![vec![0i64; k]; k]; k];
    for (kk, cl) in classes.classes().iter().enumerate() {
        for &x in group.elements() {
            let i = classes.class_of(x).unwrap();
            let y = w.mul(w.inverse(x), cl.representative);
            let j = classes.class_of(y).expect("subgroup closed under multiplication");
            a[i][j][kk] += 1;
        }
    }
    a
}

/// Full character table of `group` by class-algebra eigenspace splitting.
pub fn character_table(w: &WeylGroup, group: &Subgroup, seed: u64) -> Result<CharacterTable> {
    let classes = group.classes();
    let k = classes.len();
    let a = class_algebra(w, group);
    let sizes: Vec<i64> = classes.classes().iter().map(|c| c.size as i64).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lines: Vec<Vec<Q>> = Vec::new();
    let mut pending = vec![Subspace::full(k)];
    if k == 1 {
        lines.push(vec![Q::one()]);
        pending.clear();
    }
    let mut rounds = 0;
    while !pending.is_empty() {
        if rounds == MAX_SPLIT_ROUNDS {
            return Err(Error::SplitExhausted { rounds });
        }
        rounds += 1;
        // class 0 is the identity, whose operator is the identity matrix
        let weights: Vec<i64> = (0..k).map(|i| if i == 0 { 0 } else { rng.gen_range(0..=3) }).collect();
        let mut op = vec![vec![0i64; k]; k];
        for (i, &r) in weights.iter().enumerate() {
            if r == 0 {
                continue;
            }
            for j in 0..k {
                for kk in 0..k {
                    op[j][kk] += r * a[i][j][kk];
                }
            }
        }
        let bound: u64 = weights.iter().zip(&sizes).map(|(r, s)| (r * s) as u64).sum();
        let apply = |v: &[Q]| -> Vec<Q> {
            op.iter()
                .map(|row| {
                    row.iter()
                        .zip(v)
                        .filter(|(c, _)| **c != 0)
                        .map(|(c, x)| q(*c) * x)
                        .sum()
                })
                .collect()
        };

        let mut next = Vec::new();
        for space in pending {
            let restricted = space.restrict(apply);
            let poly = char_poly(&restricted);
            let roots = integer_roots(&poly, bound).ok_or_else(|| {
                Error::Irrationality("characteristic polynomial has non-integer coefficients".into())
            })?;
            let m = space.dim();
            let mut found = 0;
            let mut pieces = Vec::new();
            for lambda in roots {
                let shifted: Vec<Vec<Q>> = restricted
                    .iter()
                    .enumerate()
                    .map(|(r, row)| {
                        row.iter()
                            .enumerate()
                            .map(|(c, x)| if r == c { x - q(lambda) } else { x.clone() })
                            .collect()
                    })
                    .collect();
                let eigen: Vec<Vec<Q>> = nullspace(&shifted).iter().map(|v| space.lift(v)).collect();
                found += eigen.len();
                pieces.push(Subspace::span(eigen));
            }
            if found != m {
                return Err(Error::Irrationality(format!(
                    "class-algebra operator has only {found} rational eigenvectors on a {m}-dimensional space"
                )));
            }
            for piece in pieces {
                if piece.dim() == 1 {
                    lines.push(piece.basis.into_iter().next().unwrap());
                } else {
                    next.push(piece);
                }
            }
        }
        pending = next;
    }

    let order = BigInt::from(group.order());
    let mut rows = Vec::with_capacity(k);
    for v in lines {
        if v[0].is_zero() {
            return Err(Error::Irrationality("central character vanishes at the identity".into()));
        }
        let omega: Vec<Q> = v.iter().map(|x| x / &v[0]).collect();
        if omega.iter().any(|x| !x.is_integer()) {
            return Err(Error::Irrationality(format!("non-integral central character {omega:?}")));
        }
        let norm: Q = (0..k)
            .map(|c| &omega[c] * &omega[classes.inverse_class(c)] / q(sizes[c]))
            .sum();
        let deg_sq = BigRational::from_integer(order.clone()) / norm;
        let degree = if deg_sq.is_integer() {
            exact_sqrt(&deg_sq.to_integer())
        } else {
            None
        }
        .ok_or_else(|| Error::Irrationality(format!("squared degree {deg_sq} is not a square integer")))?;
        let degree = BigRational::from_integer(degree);
        let row: Option<Vec<i64>> = (0..k)
            .map(|c| {
                let val = &degree * &omega[c] / q(sizes[c]);
                if val.is_integer() {
                    val.to_integer().to_i64()
                } else {
                    None
                }
            })
            .collect();
        rows.push(row.ok_or_else(|| Error::Irrationality("non-integral character value".into()))?);
    }
    CharacterTable::from_rows(group, rows)
}

/// Coordinates of `f` in the irreducible basis.
pub fn decompose(f: &ClassFunction, table: &CharacterTable) -> Result<VirtualCharacter> {
    if f.group != table.group {
        return Err(Error::GroupMismatch {
            expected: table.group,
            found: f.group,
        });
    }
    let k = table.class_sizes.len();
    let order = q(table.order as i64);
    let mut coeffs = Vec::with_capacity(k);
    for (i, row) in table.rows.iter().enumerate() {
        let mut total = Q::zero();
        for c in 0..k {
            let chi = row[table.inverse_class[c]];
            if chi == 0 || f.values[c].is_zero() {
                continue;
            }
            total += &f.values[c] * q(chi * table.class_sizes[c] as i64);
        }
        let coeff = total / &order;
        let value = coeff
            .is_integer()
            .then(|| coeff.to_integer().to_i64())
            .flatten()
            .ok_or_else(|| Error::NotVirtual(format!("pairing with irreducible {i} is {coeff}")))?;
        coeffs.push(value);
    }
    let v = VirtualCharacter {
        group: table.group,
        coeffs,
    };
    if &to_class_function(&v, table) != f {
        return Err(Error::NotVirtual("not in the span of the irreducibles".into()));
    }
    Ok(v)
}

/// `sum_i coeffs_i chi_i`.
pub fn to_class_function(v: &VirtualCharacter, table: &CharacterTable) -> ClassFunction {
    let k = table.class_sizes.len();
    let mut vals = vec![0i64; k];
    for (c, row) in v.coeffs.iter().zip(&table.rows) {
        if *c == 0 {
            continue;
        }
        for (x, r) in vals.iter_mut().zip(row) {
            *x += c * r;
        }
    }
    ClassFunction::from_integers(table.group, &vals)
}

/// Tensor product in the Grothendieck group.
pub fn tensor(v: &VirtualCharacter, u: &VirtualCharacter, table: &CharacterTable) -> Result<VirtualCharacter> {
    for x in [v, u] {
        if x.group != table.group {
            return Err(Error::GroupMismatch {
                expected: table.group,
                found: x.group,
            });
        }
    }
    let product = to_class_function(v, table).pointwise(&to_class_function(u, table))?;
    let out = decompose(&product, table);
    debug_assert!(out.is_ok(), "product of virtual characters is virtual");
    out
}

/// Points `0..=n` permuted by an element of `W(A_n) = S_{n+1}`.
pub fn point_permutation(w: &WeylGroup, x: usize) -> Vec<usize> {
    let rs = w.root_system();
    let n = rs.rank();
    // root e_a - e_b as the ordered pair (a, b)
    let pair_of = |coords: &[i64]| -> (usize, usize) {
        let lo = coords.iter().position(|&c| c != 0).unwrap();
        let hi = coords.iter().rposition(|&c| c != 0).unwrap() + 1;
        if coords[lo] > 0 {
            (lo, hi)
        } else {
            (hi, lo)
        }
    };
    let index_of_pair = |a: usize, b: usize| -> usize {
        let (lo, hi, s) = if a < b { (a, b, 1) } else { (b, a, -1) };
        let mut coords = vec![0i64; n];
        for c in coords.iter_mut().take(hi).skip(lo) {
            *c = s;
        }
        rs.roots().iter().position(|r| *r == coords).unwrap()
    };
    let perm = w.permutation(x);
    (0..=n)
        .map(|p| {
            let other = if p == 0 { 1 } else { 0 };
            let img = perm[index_of_pair(p, other)] as usize;
            pair_of(&rs.roots()[img]).0
        })
        .collect()
}

pub fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut parts = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            p = perm[p];
            len += 1;
        }
        parts.push(len);
    }
    Partition::new(parts)
}

/// Attaches partition labels to a type-A table by matching every row against
/// the Murnaghan–Nakayama character of each partition of `rank + 1`.
pub fn attach_partition_labels(
    table: &mut CharacterTable,
    w: &WeylGroup,
    group: &Subgroup,
    type_label: CartanType,
) -> Result<()> {
    if type_label != CartanType::A {
        return Err(Error::Labeling(format!("partition labels need type A, got {type_label}")));
    }
    if group.id() != table.group || group.order() != w.order() {
        return Err(Error::Labeling("labels attach to the table of the whole group".into()));
    }
    let n = w.rank() + 1;
    let class_types: Vec<Partition> = group
        .classes()
        .classes()
        .iter()
        .map(|cl| cycle_type(&point_permutation(w, cl.representative)))
        .collect();
    let mut labels: Vec<Option<Partition>> = vec![None; table.len()];
    for lambda in partitions(n) {
        let values: Vec<i64> = class_types.iter().map(|mu| mn_character(&lambda, mu)).collect();
        let i = table
            .find(&values)
            .ok_or_else(|| Error::Labeling(format!("no row matches the character of {lambda}")))?;
        if labels[i].is_some() {
            return Err(Error::Labeling(format!("row {i} matched twice")));
        }
        labels[i] = Some(lambda);
    }
    table.labels = Some(labels.into_iter().map(|l| l.expect("bijective matching")).collect());
    Ok(())
}
