//! Induction and restriction of class functions between a Weyl group and its
//! subgroups, with the Frobenius, Mackey and transitivity checks.
//!
//! Induction uses the conjugation-count formula
//! `(ind f)(g) = (1/|H|) sum_{x in G, x g x^-1 in H} f(x g x^-1)`, evaluated once
//! per class representative `g` of the ambient group.

use num_traits::Zero;

use crate::chars::{inner_product, ClassFunction, CharacterTable};
use crate::error::{Error, Result};
use crate::grp::{conjugation_counts, double_cosets, ParabolicSubgroup, Subgroup};
use crate::linalg::{q, Q};
use crate::rootsys::WeylGroup;

fn expect_group(f: &ClassFunction, group: &Subgroup) -> Result<()> {
    if f.group() != group.id() {
        return Err(Error::GroupMismatch {
            expected: group.id(),
            found: f.group(),
        });
    }
    Ok(())
}

/// Restriction from any ambient group to a subgroup of it.
pub fn restrict_to(f: &ClassFunction, sub: &Subgroup, ambient: &Subgroup) -> Result<ClassFunction> {
    expect_group(f, ambient)?;
    let values = sub
        .classes()
        .classes()
        .iter()
        .map(|cl| {
            let c = ambient
                .classes()
                .class_of(cl.representative)
                .expect("subgroup element outside the ambient group");
            f.value(c).clone()
        })
        .collect();
    Ok(ClassFunction::new(sub.id(), values))
}

fn induce_with_counts(f: &ClassFunction, sub: &Subgroup, ambient: &Subgroup, counts: &[Vec<u64>]) -> ClassFunction {
    let scale = q(sub.order() as i64);
    let values = counts
        .iter()
        .map(|row| {
            let mut total = Q::zero();
            for (c, &n) in row.iter().enumerate() {
                if n != 0 && !f.value(c).is_zero() {
                    total += f.value(c) * q(n as i64);
                }
            }
            total / &scale
        })
        .collect();
    ClassFunction::new(ambient.id(), values)
}

/// Induction from a subgroup to any ambient group containing it.
pub fn induce_to(w: &WeylGroup, f: &ClassFunction, sub: &Subgroup, ambient: &Subgroup) -> Result<ClassFunction> {
    expect_group(f, sub)?;
    let counts = conjugation_counts(w, sub, ambient);
    Ok(induce_with_counts(f, sub, ambient, &counts))
}

/// `res^W_{W_I} f`.
pub fn restrict(f: &ClassFunction, p: &ParabolicSubgroup) -> Result<ClassFunction> {
    if f.group() != p.ambient() {
        return Err(Error::GroupMismatch {
            expected: p.ambient(),
            found: f.group(),
        });
    }
    let values = p.fusion().iter().map(|&c| f.value(c).clone()).collect();
    Ok(ClassFunction::new(p.group().id(), values))
}

/// `ind^W_{W_I} f`.
pub fn induce(w: &WeylGroup, whole: &Subgroup, f: &ClassFunction, p: &ParabolicSubgroup) -> Result<ClassFunction> {
    expect_group(f, p.group())?;
    let counts = p.induction_counts(w, whole);
    Ok(induce_with_counts(f, p.group(), whole, counts))
}

/// A failed instance of `<ind chi, psi>_W = <chi, res psi>_{W_I}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusViolation {
    pub sub_irreducible: usize,
    pub irreducible: usize,
    pub induced_side: Q,
    pub restricted_side: Q,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusReport {
    pub subset: Vec<usize>,
    pub pairs_checked: usize,
    pub violations: Vec<FrobeniusViolation>,
}

impl FrobeniusReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks Frobenius reciprocity for every pair of irreducibles of `W_I` and `W`.
pub fn frobenius_check(
    w: &WeylGroup,
    whole: &Subgroup,
    p: &ParabolicSubgroup,
    table: &CharacterTable,
    sub_table: &CharacterTable,
) -> Result<FrobeniusReport> {
    let mut violations = Vec::new();
    let mut pairs_checked = 0;
    let restricted: Vec<ClassFunction> = table
        .irreducibles()
        .map(|psi| restrict(&psi, p))
        .collect::<Result<_>>()?;
    for (i, chi) in sub_table.irreducibles().enumerate() {
        let induced = induce(w, whole, &chi, p)?;
        for (j, psi) in table.irreducibles().enumerate() {
            let lhs = inner_product(whole, &induced, &psi)?;
            let rhs = inner_product(p.group(), &chi, &restricted[j])?;
            pairs_checked += 1;
            if lhs != rhs {
                violations.push(FrobeniusViolation {
                    sub_irreducible: i,
                    irreducible: j,
                    induced_side: lhs,
                    restricted_side: rhs,
                });
            }
        }
    }
    Ok(FrobeniusReport {
        subset: p.subset().to_vec(),
        pairs_checked,
        violations,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MackeyReport {
    pub subset_i: Vec<usize>,
    pub subset_j: Vec<usize>,
    pub double_cosets: usize,
    /// `res_J ind_I f` on the classes of `W_J`.
    pub lhs: ClassFunction,
    /// Sum over double cosets of induced conjugation transports.
    pub rhs: ClassFunction,
}

impl MackeyReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Evaluates both sides of
/// `res_J ind_I f = sum_{x in W_J\W/W_I} ind^{W_J}_{W_J ∩ x W_I x^-1} (x . res f)`,
/// where `(x . g)(h) = g(x^-1 h x)`.
pub fn mackey_check(
    w: &WeylGroup,
    whole: &Subgroup,
    pi: &ParabolicSubgroup,
    pj: &ParabolicSubgroup,
    f: &ClassFunction,
) -> Result<MackeyReport> {
    let lhs = restrict(&induce(w, whole, f, pi)?, pj)?;

    let wj = pj.group();
    let mut rhs = ClassFunction::zero(wj.id(), wj.num_classes());
    let cosets = double_cosets(w, pi.group(), wj);
    for dc in &cosets {
        let h = &dc.intersection;
        let xi = w.inverse(dc.representative);
        let transported: Vec<Q> = h
            .classes()
            .classes()
            .iter()
            .map(|cl| {
                let y = w.conjugate(xi, cl.representative);
                let c = pi.group().classes().class_of(y).expect("x^-1 h x lies in W_I");
                f.value(c).clone()
            })
            .collect();
        let transported = ClassFunction::new(h.id(), transported);
        rhs = rhs.add(&induce_to(w, &transported, h, wj)?)?;
    }
    Ok(MackeyReport {
        subset_i: pi.subset().to_vec(),
        subset_j: pj.subset().to_vec(),
        double_cosets: cosets.len(),
        lhs,
        rhs,
    })
}

/// Compares `ind^W_{W_I} ind^{W_I}_{W_J} f` with `ind^W_{W_J} f` for `J ⊆ I`.
pub fn transitivity_check(
    w: &WeylGroup,
    whole: &Subgroup,
    pj: &ParabolicSubgroup,
    pi: &ParabolicSubgroup,
    f: &ClassFunction,
) -> Result<bool> {
    assert!(
        pj.subset().iter().all(|j| pi.subset().contains(j)),
        "transitivity needs J ⊆ I"
    );
    let staged = induce(w, whole, &induce_to(w, f, pj.group(), pi.group())?, pi)?;
    let direct = induce(w, whole, f, pj)?;
    Ok(staged == direct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::{character_table, decompose, reflection, regular, sign, trivial};
    use crate::grp::parabolic;
    use crate::rootsys::{build_cartan, build_root_system, enumerate_group, CartanType};

    fn a2() -> (WeylGroup, Subgroup) {
        let c = build_cartan(CartanType::A, 2, 0).unwrap();
        let w = enumerate_group(&build_root_system(&c).unwrap(), 1000).unwrap();
        let g = Subgroup::whole(&w);
        (w, g)
    }

    fn ints(f: &ClassFunction) -> Vec<i64> {
        f.to_integers().unwrap()
    }

    #[test]
    fn restriction_examples() {
        let (w, g) = a2();
        let p1 = parabolic(&w, &g, &[0]);
        let full = parabolic(&w, &g, &[0, 1]);
        assert_eq!(ints(&restrict(&trivial(&g), &p1).unwrap()), vec![1, 1]);
        assert_eq!(ints(&restrict(&reflection(&w, &g), &p1).unwrap()), vec![2, 0]);
        assert_eq!(ints(&restrict(&reflection(&w, &g), &full).unwrap()), vec![2, 0, -1]);
    }

    #[test]
    fn induction_examples() {
        let (w, g) = a2();
        let pe = parabolic(&w, &g, &[]);
        let p1 = parabolic(&w, &g, &[0]);
        assert_eq!(ints(&induce(&w, &g, &trivial(pe.group()), &pe).unwrap()), vec![6, 0, 0]);
        assert_eq!(ints(&induce(&w, &g, &trivial(p1.group()), &p1).unwrap()), vec![3, 1, 0]);
        assert_eq!(
            ints(&induce(&w, &g, &sign(&w, p1.group()), &p1).unwrap()),
            vec![3, -1, 0]
        );
    }

    #[test]
    fn mismatched_groups_are_rejected() {
        let (w, g) = a2();
        let p1 = parabolic(&w, &g, &[0]);
        assert!(matches!(restrict(&trivial(p1.group()), &p1), Err(Error::GroupMismatch { .. })));
        assert!(matches!(induce(&w, &g, &trivial(&g), &p1), Err(Error::GroupMismatch { .. })));
    }

    #[test]
    fn frobenius_examples() {
        let (w, g) = a2();
        let t = character_table(&w, &g, 0).unwrap();
        let p1 = parabolic(&w, &g, &[0]);
        let t1 = character_table(&w, p1.group(), 0).unwrap();
        let report = frobenius_check(&w, &g, &p1, &t, &t1).unwrap();
        assert!(report.holds());
        assert_eq!(report.pairs_checked, 6);

        let ind = induce(&w, &g, &trivial(p1.group()), &p1).unwrap();
        let refl = reflection(&w, &g);
        assert_eq!(inner_product(&g, &ind, &refl).unwrap(), q(1));
        let res = restrict(&refl, &p1).unwrap();
        assert_eq!(inner_product(p1.group(), &trivial(p1.group()), &res).unwrap(), q(1));

        let pe = parabolic(&w, &g, &[]);
        let te = character_table(&w, pe.group(), 0).unwrap();
        assert!(frobenius_check(&w, &g, &pe, &t, &te).unwrap().holds());
        assert_eq!(decompose(&regular(&g), &t).unwrap().coeffs(), &[1, 1, 2]);
    }

    #[test]
    fn mackey_example() {
        let (w, g) = a2();
        let p1 = parabolic(&w, &g, &[0]);
        let report = mackey_check(&w, &g, &p1, &p1, &trivial(p1.group())).unwrap();
        assert_eq!(report.double_cosets, 2);
        assert_eq!(ints(&report.lhs), vec![3, 1]);
        assert!(report.holds());
    }

    #[test]
    fn transitivity_example() {
        let (w, g) = a2();
        let pe = parabolic(&w, &g, &[]);
        let p1 = parabolic(&w, &g, &[0]);
        assert!(transitivity_check(&w, &g, &pe, &p1, &trivial(pe.group())).unwrap());
    }
}
