//! The invariant suite run by `weyl-dl verify`.

use crate::dl::{
    dl_inverse_matrix, dl_matrix, is_identity, mat_mul, sign_twist_matrix, springer_table,
    verify_involution, verify_sign_twist, ShiftLedger,
};
use crate::error::Result;
use crate::indres::{frobenius_check, mackey_check, transitivity_check};
use crate::rootsys::CartanType;
use crate::weyl::Weyl;

/// Largest rank for which Frobenius reciprocity is checked over all subsets.
pub const FROBENIUS_MAX_RANK: usize = 4;
/// Largest rank for which Mackey and transitivity are checked.
pub const MACKEY_MAX_RANK: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub group: String,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(weyl: &Weyl, name: &'static str, passed: bool, detail: String) -> Check {
    Check {
        group: weyl.name(),
        name,
        passed,
        detail,
    }
}

fn subset_string(s: &[usize]) -> String {
    let labels: Vec<String> = s.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", labels.join(","))
}

pub fn group_checks(weyl: &Weyl) -> Vec<Check> {
    let w = weyl.group();
    let np = w.root_system().num_positive();
    let expected = weyl.cartan().expected_order();
    let mut out = vec![check(
        weyl,
        "group_order",
        w.order() as u128 == expected,
        format!("|W| = {}, product of degrees {:?} = {}", w.order(), weyl.cartan().fundamental_degrees(), expected),
    )];

    let disagreements = (0..w.order()).filter(|&x| w.length(x) != w.inversion_count(x)).count();
    out.push(check(
        weyl,
        "length_agreement",
        disagreements == 0,
        format!("{disagreements} elements where breadth-first depth differs from inversion count"),
    ));

    let w0 = w.longest();
    out.push(check(
        weyl,
        "longest_element",
        w.length(w0) == np && w.mul(w0, w0) == w.identity(),
        format!("length(w0) = {}, |positive roots| = {np}", w.length(w0)),
    ));

    let reflections = (0..w.order()).filter(|&x| w.is_reflection(x)).count();
    out.push(check(
        weyl,
        "reflection_count",
        reflections == np,
        format!("{reflections} reflections, {np} positive roots"),
    ));
    out
}

pub fn table_checks(weyl: &Weyl) -> Vec<Check> {
    let problems = weyl.table().integrity_violations();
    let mut out = vec![check(
        weyl,
        "table_integrity",
        problems.is_empty(),
        if problems.is_empty() {
            format!(
                "{} irreducibles; orthonormal rows, orthogonal columns, sum of squared degrees = {}",
                weyl.table().len(),
                weyl.group().order()
            )
        } else {
            problems.join("; ")
        },
    )];
    if weyl.cartan().type_label == CartanType::A {
        // labels were attached by exact matching; confirm coverage
        let labelled = weyl.table().partition_labels().map_or(0, |l| l.len());
        out.push(check(
            weyl,
            "murnaghan_nakayama_labels",
            labelled == weyl.table().len(),
            format!("{labelled} rows matched to partitions of {}", weyl.rank() + 1),
        ));
    }
    out
}

pub fn frobenius_checks(weyl: &Weyl) -> Result<Vec<Check>> {
    let mut pairs = 0;
    let mut failures = Vec::new();
    for mask in weyl.subset_masks() {
        let p = weyl.parabolic(mask);
        let report = frobenius_check(weyl.group(), weyl.whole(), p, weyl.table(), weyl.parabolic_table(mask)?)?;
        pairs += report.pairs_checked;
        for v in &report.violations {
            failures.push(format!(
                "I={} chi={} psi={}: {} != {}",
                subset_string(&report.subset),
                v.sub_irreducible,
                v.irreducible,
                v.induced_side,
                v.restricted_side
            ));
        }
    }
    Ok(vec![check(
        weyl,
        "frobenius_reciprocity",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{pairs} pairs over {} subsets", 1u32 << weyl.rank())
        } else {
            failures.join("; ")
        },
    )])
}

pub fn mackey_checks(weyl: &Weyl) -> Result<Vec<Check>> {
    let mut cases = 0;
    let mut failures = Vec::new();
    for mi in weyl.subset_masks() {
        let pi = weyl.parabolic(mi);
        let ti = weyl.parabolic_table(mi)?;
        for mj in weyl.subset_masks() {
            let pj = weyl.parabolic(mj);
            for (c, f) in ti.irreducibles().enumerate() {
                let report = mackey_check(weyl.group(), weyl.whole(), pi, pj, &f)?;
                cases += 1;
                if !report.holds() {
                    failures.push(format!(
                        "I={} J={} chi={c}",
                        subset_string(pi.subset()),
                        subset_string(pj.subset())
                    ));
                }
            }
        }
    }
    Ok(vec![check(
        weyl,
        "mackey_decomposition",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{cases} (I, J, chi) cases")
        } else {
            failures.join("; ")
        },
    )])
}

pub fn transitivity_checks(weyl: &Weyl) -> Result<Vec<Check>> {
    let mut cases = 0;
    let mut failures = Vec::new();
    for mi in weyl.subset_masks() {
        for mj in weyl.subset_masks().filter(|mj| mj & !mi == 0) {
            let (pi, pj) = (weyl.parabolic(mi), weyl.parabolic(mj));
            for (c, f) in weyl.parabolic_table(mj)?.irreducibles().enumerate() {
                cases += 1;
                if !transitivity_check(weyl.group(), weyl.whole(), pj, pi, &f)? {
                    failures.push(format!(
                        "J={} I={} chi={c}",
                        subset_string(pj.subset()),
                        subset_string(pi.subset())
                    ));
                }
            }
        }
    }
    Ok(vec![check(
        weyl,
        "induction_transitivity",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{cases} (J ⊆ I, chi) cases")
        } else {
            failures.join("; ")
        },
    )])
}

pub fn dl_checks(weyl: &Weyl) -> Result<Vec<Check>> {
    let table = weyl.table();
    let mut out = Vec::new();

    let twist = verify_sign_twist(weyl)?;
    let image: Vec<String> = twist
        .permutation
        .iter()
        .enumerate()
        .map(|(i, j)| match j {
            Some(j) => format!("{}->{}", table.label(i), table.label(*j)),
            None => format!("{}->mixed", table.label(i)),
        })
        .collect();
    out.push(check(
        weyl,
        "sign_twist",
        twist.holds(),
        if twist.holds() {
            image.join(" ")
        } else {
            format!("mismatch at {:?}; {}", twist.mismatches, image.join(" "))
        },
    ));

    let inv = verify_involution(weyl)?;
    out.push(check(
        weyl,
        "involution",
        inv.holds(),
        format!("{} irreducibles, {} failures", inv.checked, inv.failures.len()),
    ));

    let m = dl_matrix(weyl)?;
    let squares_to_one = is_identity(&mat_mul(&m, &m));
    let matches_twist = m == sign_twist_matrix(weyl)?;
    out.push(check(
        weyl,
        "dl_matrix",
        squares_to_one && matches_twist,
        format!("M^2 = Id: {squares_to_one}; M = matrix of sgn⊗-: {matches_twist}"),
    ));

    let minv = dl_inverse_matrix(weyl)?;
    out.push(check(
        weyl,
        "dl_inverse",
        minv == m && is_identity(&mat_mul(&m, &minv)),
        "inverse assembled from shift-ledger signs".to_string(),
    ));

    let ledger = ShiftLedger::new(weyl.cartan().central_rank, weyl.rank());
    out.push(check(
        weyl,
        "shift_parity",
        ledger.parity_holds(),
        format!("d = {:?}", ledger.values()),
    ));

    if weyl.cartan().type_label == CartanType::A {
        let labels = table.partition_labels().expect("type A tables carry partition labels");
        let pairs = springer_table(weyl)?;
        let bad: Vec<String> = pairs
            .iter()
            .filter(|(a, b)| labels[b.irr_index] != labels[a.irr_index].transpose())
            .map(|(a, b)| format!("{} -> {}", a.display, b.display))
            .collect();
        out.push(check(
            weyl,
            "springer_transpose",
            bad.is_empty(),
            if bad.is_empty() {
                format!("{} partitions paired with their transposes", pairs.len())
            } else {
                bad.join("; ")
            },
        ));
    }
    Ok(out)
}

/// Every check applicable to `weyl`, in a fixed order.
pub fn run_suite(weyl: &Weyl) -> Result<Vec<Check>> {
    let mut out = group_checks(weyl);
    out.extend(table_checks(weyl));
    if weyl.rank() <= FROBENIUS_MAX_RANK {
        out.extend(frobenius_checks(weyl)?);
    }
    if weyl.rank() <= MACKEY_MAX_RANK {
        out.extend(mackey_checks(weyl)?);
        out.extend(transitivity_checks(weyl)?);
    }
    out.extend(dl_checks(weyl)?);
    Ok(out)
}

/// Types covered by `verify all`.
pub const ROSTER: &[(CartanType, usize)] = &[
    (CartanType::A, 1),
    (CartanType::A, 2),
    (CartanType::A, 3),
    (CartanType::A, 4),
    (CartanType::A, 5),
    (CartanType::B, 2),
    (CartanType::B, 3),
    (CartanType::B, 4),
    (CartanType::C, 3),
    (CartanType::D, 4),
    (CartanType::G, 2),
    (CartanType::F, 4),
];
