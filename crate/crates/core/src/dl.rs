//! The Deligne–Lusztig operator on the Grothendieck group of `W`:
//!
//! ```text
//! DL(V) = sum_{I ⊆ Σ} (-1)^|I| ind^W_{W_I} res^W_{W_I} V
//! ```
//!
//! together with its inverse assembled from the shift ledger, the sign-twist
//! and involution checks, and the Springer pairing `alpha <-> sgn ⊗ alpha`.

use crate::chars::{decompose, sign, tensor, to_class_function, ClassFunction, VirtualCharacter};
use crate::error::Result;
use crate::indres::{induce, restrict};
use crate::weyl::Weyl;

/// The integers `d_i = central_rank + |Σ| - i` attached to subsets of size `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftLedger {
    pub central_rank: i64,
    pub sigma_size: i64,
    d: Vec<i64>,
}

impl ShiftLedger {
    pub fn new(central_rank: usize, sigma_size: usize) -> Self {
        let (c, s) = (central_rank as i64, sigma_size as i64);
        ShiftLedger {
            central_rank: c,
            sigma_size: s,
            d: (0..=s).map(|i| c + s - i).collect(),
        }
    }

    pub fn d(&self, i: usize) -> i64 {
        self.d[i]
    }

    pub fn values(&self) -> &[i64] {
        &self.d
    }

    /// `(-1)^(d_∅ + d_I)` for `|I| = size`.
    pub fn sign(&self, size: usize) -> i64 {
        if (self.d[0] + self.d[size]).rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }

    /// Whether `(-1)^(d_∅ + d_I) = (-1)^|I|` for every subset size and `d` is
    /// strictly decreasing.
    pub fn parity_holds(&self) -> bool {
        let decreasing = self.d.windows(2).all(|p| p[0] > p[1]);
        decreasing && (0..self.d.len()).all(|i| self.sign(i) == if i % 2 == 0 { 1 } else { -1 })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpringerLabel {
    pub irr_index: usize,
    pub display: String,
}

fn alternating_sum(weyl: &Weyl, v: &VirtualCharacter, sign_of: impl Fn(usize) -> i64) -> Result<VirtualCharacter> {
    let table = weyl.table();
    let f = to_class_function(v, table);
    let whole = weyl.whole();
    let mut total = ClassFunction::zero(whole.id(), whole.num_classes());
    // largest subsets first, matching the order N_|Σ|, ..., N_0
    let mut masks: Vec<u32> = weyl.subset_masks().collect();
    masks.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
    for mask in masks {
        let p = weyl.parabolic(mask);
        let term = induce(weyl.group(), whole, &restrict(&f, p)?, p)?;
        total = if sign_of(p.subset().len()) > 0 {
            total.add(&term)?
        } else {
            total.sub(&term)?
        };
    }
    decompose(&total, table)
}

/// `DL_W(v)` with signs `(-1)^|I|`.
pub fn dl_operator(weyl: &Weyl, v: &VirtualCharacter) -> Result<VirtualCharacter> {
    alternating_sum(weyl, v, |size| if size % 2 == 0 { 1 } else { -1 })
}

/// The same alternating sum with signs read from the shift ledger,
/// `(-1)^(d_∅ + d_I)`.
pub fn dl_inverse_operator(weyl: &Weyl, v: &VirtualCharacter) -> Result<VirtualCharacter> {
    let ledger = ShiftLedger::new(weyl.cartan().central_rank, weyl.rank());
    alternating_sum(weyl, v, |size| ledger.sign(size))
}

/// Column `i` holds the coordinates of `op(chi_i)`.
fn operator_matrix(
    weyl: &Weyl,
    op: impl Fn(&Weyl, &VirtualCharacter) -> Result<VirtualCharacter>,
) -> Result<Vec<Vec<i64>>> {
    let k = weyl.table().len();
    let mut m = vec![vec![0; k]; k];
    for i in 0..k {
        let image = op(weyl, &VirtualCharacter::unit(weyl.table().group(), k, i))?;
        for (r, &c) in image.coeffs().iter().enumerate() {
            m[r][i] = c;
        }
    }
    Ok(m)
}

pub fn dl_matrix(weyl: &Weyl) -> Result<Vec<Vec<i64>>> {
    operator_matrix(weyl, dl_operator)
}

pub fn dl_inverse_matrix(weyl: &Weyl) -> Result<Vec<Vec<i64>>> {
    operator_matrix(weyl, dl_inverse_operator)
}

pub fn sign_character(weyl: &Weyl) -> Result<VirtualCharacter> {
    decompose(&sign(weyl.group(), weyl.whole()), weyl.table())
}

/// Matrix of `sgn ⊗ -` in the irreducible basis.
pub fn sign_twist_matrix(weyl: &Weyl) -> Result<Vec<Vec<i64>>> {
    let sgn = sign_character(weyl)?;
    operator_matrix(weyl, |w, v| tensor(&sgn, v, w.table()))
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

pub fn is_identity(m: &[Vec<i64>]) -> bool {
    m.iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == i64::from(i == j)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignTwistReport {
    /// `permutation[i] = j` when `DL(chi_i) = chi_j`; `None` if `DL(chi_i)` is
    /// not a single irreducible.
    pub permutation: Vec<Option<usize>>,
    /// Irreducibles with `DL(chi) != sgn ⊗ chi`.
    pub mismatches: Vec<usize>,
}

impl SignTwistReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty() && self.permutation.iter().all(Option::is_some)
    }
}

/// Compares `DL(chi)` with `sgn ⊗ chi` for every irreducible `chi`.
pub fn verify_sign_twist(weyl: &Weyl) -> Result<SignTwistReport> {
    let table = weyl.table();
    let sgn = sign_character(weyl)?;
    let mut permutation = Vec::with_capacity(table.len());
    let mut mismatches = Vec::new();
    for i in 0..table.len() {
        let chi = VirtualCharacter::unit(table.group(), table.len(), i);
        let image = dl_operator(weyl, &chi)?;
        if image != tensor(&sgn, &chi, table)? {
            mismatches.push(i);
        }
        permutation.push(image.as_irreducible());
    }
    Ok(SignTwistReport {
        permutation,
        mismatches,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionReport {
    pub checked: usize,
    /// Irreducibles with `DL(DL(chi)) != chi`.
    pub failures: Vec<usize>,
}

impl InvolutionReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Applies the operator twice to every irreducible.
pub fn verify_involution(weyl: &Weyl) -> Result<InvolutionReport> {
    let table = weyl.table();
    let mut failures = Vec::new();
    for i in 0..table.len() {
        let chi = VirtualCharacter::unit(table.group(), table.len(), i);
        if dl_operator(weyl, &dl_operator(weyl, &chi)?)? != chi {
            failures.push(i);
        }
    }
    Ok(InvolutionReport {
        checked: table.len(),
        failures,
    })
}

/// The pairing `alpha -> sgn ⊗ alpha` on `Irr(W)`, one entry per irreducible
/// in canonical order. In type A the labels are partitions, with the trivial
/// character labelled `(n+1)`.
pub fn springer_table(weyl: &Weyl) -> Result<Vec<(SpringerLabel, SpringerLabel)>> {
    let table = weyl.table();
    let sgn = sign_character(weyl)?;
    let label = |i: usize| SpringerLabel {
        irr_index: i,
        display: table.label(i),
    };
    (0..table.len())
        .map(|i| {
            let chi = VirtualCharacter::unit(table.group(), table.len(), i);
            let j = tensor(&sgn, &chi, table)?
                .as_irreducible()
                .expect("sgn ⊗ irreducible is irreducible");
            Ok((label(i), label(j)))
        })
        .collect()
}

/// Renders the pairing as `"a ↔ b; c fixed"`, each unordered pair once.
pub fn render_pairing(pairs: &[(SpringerLabel, SpringerLabel)]) -> String {
    let mut parts = Vec::new();
    for (a, b) in pairs {
        if a.irr_index == b.irr_index {
            parts.push(format!("{} fixed", a.display));
        } else if a.irr_index < b.irr_index {
            parts.push(format!("{} ↔ {}", a.display, b.display));
        }
    }
    parts.join("; ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::{reflection, trivial};
    use crate::rootsys::{build_cartan, CartanType};
    use crate::weyl::Options;

    #[test]
    fn ledger_values() {
        let l = ShiftLedger::new(1, 3);
        assert_eq!(l.values(), &[4, 3, 2, 1]);
        assert!(l.parity_holds());
        assert_eq!(l.sign(1), -1);
        assert_eq!(l.sign(2), 1);
    }

    #[test]
    fn a2_dl_examples() {
        let weyl = Weyl::new(CartanType::A, 2).unwrap();
        let t = weyl.table();
        let triv = decompose(&trivial(weyl.whole()), t).unwrap();
        let sgn = sign_character(&weyl).unwrap();
        assert_eq!(dl_operator(&weyl, &triv).unwrap(), sgn);
        let refl = decompose(&reflection(weyl.group(), weyl.whole()), t).unwrap();
        assert_eq!(dl_operator(&weyl, &refl).unwrap(), refl);
        assert_eq!(dl_matrix(&weyl).unwrap(), dl_inverse_matrix(&weyl).unwrap());
    }

    #[test]
    fn a1_swap() {
        let weyl = Weyl::new(CartanType::A, 1).unwrap();
        let report = verify_sign_twist(&weyl).unwrap();
        assert_eq!(report.permutation, vec![Some(1), Some(0)]);
        assert!(report.holds());
        let m = dl_matrix(&weyl).unwrap();
        assert_eq!(m, vec![vec![0, 1], vec![1, 0]]);
        assert!(is_identity(&mat_mul(&m, &dl_inverse_matrix(&weyl).unwrap())));
    }

    #[test]
    fn b2_two_dimensional_is_fixed() {
        let weyl = Weyl::new(CartanType::B, 2).unwrap();
        let report = verify_sign_twist(&weyl).unwrap();
        assert!(report.holds());
        let two_dim = weyl.table().degrees().iter().position(|&d| d == 2).unwrap();
        assert_eq!(report.permutation[two_dim], Some(two_dim));
        let m = dl_matrix(&weyl).unwrap();
        assert!(is_identity(&mat_mul(&m, &dl_inverse_matrix(&weyl).unwrap())));
    }

    #[test]
    fn springer_pairing_a2_a3() {
        let weyl = Weyl::new(CartanType::A, 2).unwrap();
        assert_eq!(
            render_pairing(&springer_table(&weyl).unwrap()),
            "(3) ↔ (1,1,1); (2,1) fixed"
        );
        let weyl = Weyl::new(CartanType::A, 3).unwrap();
        let rendered = render_pairing(&springer_table(&weyl).unwrap());
        for piece in ["(4) ↔ (1,1,1,1)", "(3,1) ↔ (2,1,1)", "(2,2) fixed"] {
            assert!(rendered.contains(piece), "{rendered}");
        }
    }

    #[test]
    fn central_rank_does_not_change_the_operator() {
        let c = build_cartan(CartanType::B, 2, 3).unwrap();
        let weyl = Weyl::build(c, Options::default()).unwrap();
        assert_eq!(dl_matrix(&weyl).unwrap(), dl_inverse_matrix(&weyl).unwrap());
    }
}
