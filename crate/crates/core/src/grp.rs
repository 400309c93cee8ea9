//! Conjugacy structure of a Weyl group and of its subgroups: standard
//! parabolic subgroups with their class fusion, and double cosets.
//!
//! Every subgroup is held as a sorted list of element indices of the ambient
//! [`WeylGroup`], so the canonical element order of `W` induces a canonical
//! order on each subgroup. Class representatives are the minimal elements of
//! their classes and classes are listed by ascending representative.

use std::collections::VecDeque;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

use crate::rootsys::WeylGroup;

/// Identifies the class structure a class function is defined on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupId(u64);

impl GroupId {
    fn fresh() -> Self {
        static NEXT: AtomicU64 = AtomicU64::new(1);
        GroupId(NEXT.fetch_add(1, Ordering::Relaxed))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub size: usize,
}

#[derive(Clone, Debug)]
pub struct ConjugacyClasses {
    classes: Vec<ConjugacyClass>,
    // sorted ambient indices and the class of each, positionally
    elements: Vec<usize>,
    local: Vec<u32>,
    // elements == 0..len, so positions are ambient indices
    dense: bool,
    inverse_class: Vec<usize>,
}

impl ConjugacyClasses {
    /// Orbits of `elements` (ascending) under conjugation by `generators`.
    fn compute(w: &WeylGroup, elements: &[usize], generators: &[usize]) -> Self {
        let dense = elements.iter().enumerate().all(|(i, &x)| i == x);
        let position = |x: usize| -> Option<usize> {
            if dense {
                (x < elements.len()).then_some(x)
            } else {
                elements.binary_search(&x).ok()
            }
        };
        const UNSET: u32 = u32::MAX;
        let mut local = vec![UNSET; elements.len()];
        let mut classes = Vec::new();
        // elements are ascending, so the first unassigned one is its class minimum
        for (start, &x) in elements.iter().enumerate() {
            if local[start] != UNSET {
                continue;
            }
            let c = classes.len() as u32;
            local[start] = c;
            let mut size = 1;
            let mut queue = VecDeque::from([x]);
            while let Some(y) = queue.pop_front() {
                for &g in generators {
                    let z = w.conjugate(g, y);
                    let pz = position(z).expect("subgroup not closed under conjugation");
                    if local[pz] == UNSET {
                        local[pz] = c;
                        size += 1;
                        queue.push_back(z);
                    }
                }
            }
            classes.push(ConjugacyClass {
                representative: x,
                size,
            });
        }
        let mut out = ConjugacyClasses {
            classes,
            elements: elements.to_vec(),
            local,
            dense,
            inverse_class: Vec::new(),
        };
        out.inverse_class = out
            .classes
            .iter()
            .map(|cl| out.class_of(w.inverse(cl.representative)).unwrap())
            .collect();
        out
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn representative(&self, c: usize) -> usize {
        self.classes[c].representative
    }

    pub fn size(&self, c: usize) -> usize {
        self.classes[c].size
    }

    /// Class index of the ambient element `x`, if it lies in the group.
    pub fn class_of(&self, x: usize) -> Option<usize> {
        let pos = if self.dense {
            (x < self.elements.len()).then_some(x)
        } else {
            self.elements.binary_search(&x).ok()
        };
        pos.map(|p| self.local[p] as usize)
    }

    /// Class containing the inverses of the elements of class `c`.
    pub fn inverse_class(&self, c: usize) -> usize {
        self.inverse_class[c]
    }
}

/// Conjugacy classes of the whole group.
pub fn conjugacy_classes(w: &WeylGroup) -> ConjugacyClasses {
    let all: Vec<usize> = (0..w.order()).collect();
    ConjugacyClasses::compute(w, &all, w.generators())
}

/// A subgroup of a Weyl group with its own conjugacy classes.
#[derive(Debug)]
pub struct Subgroup {
    id: GroupId,
    elements: Vec<usize>,
    generators: Vec<usize>,
    classes: ConjugacyClasses,
    conjugation: OnceLock<Vec<Vec<u32>>>,
}

impl Subgroup {
    pub fn whole(w: &WeylGroup) -> Self {
        Subgroup {
            id: GroupId::fresh(),
            elements: (0..w.order()).collect(),
            generators: w.generators().to_vec(),
            classes: conjugacy_classes(w),
            conjugation: OnceLock::new(),
        }
    }

    /// Subgroup generated by the given elements.
    pub fn generated_by(w: &WeylGroup, generators: &[usize]) -> Self {
        let elements = closure(w, generators);
        Self::with_generators(w, elements, generators.to_vec())
    }

    /// Subgroup with a known element set; `elements` must be closed under
    /// multiplication. A generating set is chosen greedily in canonical order.
    pub fn from_elements(w: &WeylGroup, mut elements: Vec<usize>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let mut generators = Vec::new();
        let mut span = vec![w.identity()];
        let mut in_span = vec![false; w.order()];
        in_span[w.identity()] = true;
        for &x in &elements {
            if in_span[x] {
                continue;
            }
            generators.push(x);
            span = closure(w, &generators);
            for &y in &span {
                in_span[y] = true;
            }
        }
        debug_assert_eq!(span.len(), elements.len(), "element set is not a subgroup");
        Self::with_generators(w, elements, generators)
    }

    fn with_generators(w: &WeylGroup, elements: Vec<usize>, generators: Vec<usize>) -> Self {
        let classes = ConjugacyClasses::compute(w, &elements, &generators);
        Subgroup {
            id: GroupId::fresh(),
            elements,
            generators,
            classes,
            conjugation: OnceLock::new(),
        }
    }

    pub fn id(&self) -> GroupId {
        self.id
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Ambient element indices, ascending.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn classes(&self) -> &ConjugacyClasses {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.classes.class_of(x).is_some()
    }

    /// `table[k][i]` is the ambient index of `x_i g_k x_i^-1`, where `x_i` runs
    /// over the elements of this group and `g_k` over its class
    /// representatives. Built on first use.
    pub fn conjugation_table(&self, w: &WeylGroup) -> &[Vec<u32>] {
        self.conjugation.get_or_init(|| {
            self.classes
                .classes()
                .iter()
                .map(|cl| {
                    self.elements
                        .iter()
                        .map(|&x| w.conjugate(x, cl.representative) as u32)
                        .collect()
                })
                .collect()
        })
    }
}

fn closure(w: &WeylGroup, generators: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; w.order()];
    seen[w.identity()] = true;
    let mut out = vec![w.identity()];
    let mut queue = VecDeque::from([w.identity()]);
    while let Some(x) = queue.pop_front() {
        for &g in generators {
            let y = w.mul(x, g);
            if !seen[y] {
                seen[y] = true;
                out.push(y);
                queue.push_back(y);
            }
        }
    }
    out.sort_unstable();
    out
}

/// A standard parabolic subgroup `W_I` with its class fusion into `W`.
#[derive(Debug)]
pub struct ParabolicSubgroup {
    subset: Vec<usize>,
    ambient: GroupId,
    group: Subgroup,
    fusion: Vec<usize>,
    induction: OnceLock<Vec<Vec<u64>>>,
}

/// The subgroup generated by `{s_i : i in subset}` (0-based labels).
pub fn parabolic(w: &WeylGroup, whole: &Subgroup, subset: &[usize]) -> ParabolicSubgroup {
    let mut subset = subset.to_vec();
    subset.sort_unstable();
    subset.dedup();
    assert!(subset.iter().all(|&i| i < w.rank()), "subset out of range");
    let gens: Vec<usize> = subset.iter().map(|&i| w.generator(i)).collect();
    let group = Subgroup::generated_by(w, &gens);
    let fusion = group
        .classes()
        .classes()
        .iter()
        .map(|cl| {
            whole
                .classes()
                .class_of(cl.representative)
                .expect("parabolic element outside the ambient group")
        })
        .collect();
    ParabolicSubgroup {
        subset,
        ambient: whole.id(),
        group,
        fusion,
        induction: OnceLock::new(),
    }
}

impl ParabolicSubgroup {
    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    pub fn group(&self) -> &Subgroup {
        &self.group
    }

    pub fn ambient(&self) -> GroupId {
        self.ambient
    }

    /// `fusion()[c]` is the class of `W` containing class `c` of `W_I`.
    pub fn fusion(&self) -> &[usize] {
        &self.fusion
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// `counts[k][c] = #{x in W : x g_k x^-1 lies in class c of W_I}` for the
    /// class representatives `g_k` of `whole`. Built on first use.
    pub fn induction_counts(&self, w: &WeylGroup, whole: &Subgroup) -> &[Vec<u64>] {
        assert_eq!(whole.id(), self.ambient, "ambient group mismatch");
        self.induction
            .get_or_init(|| conjugation_counts(w, &self.group, whole))
    }
}

/// `counts[k][c] = #{x in ambient : x g_k x^-1 lies in class c of sub}`, with
/// `g_k` running over the class representatives of `ambient`.
pub fn conjugation_counts(w: &WeylGroup, sub: &Subgroup, ambient: &Subgroup) -> Vec<Vec<u64>> {
    ambient
        .conjugation_table(w)
        .iter()
        .map(|conjugates| {
            let mut counts = vec![0u64; sub.num_classes()];
            for &y in conjugates {
                if let Some(c) = sub.classes().class_of(y as usize) {
                    counts[c] += 1;
                }
            }
            counts
        })
        .collect()
}

/// One double coset `W_J x W_I`.
#[derive(Debug)]
pub struct DoubleCoset {
    pub representative: usize,
    pub size: usize,
    /// `W_J ∩ x W_I x^-1`.
    pub intersection: Subgroup,
}

/// Transversal of `W_J \ W / W_I`, representatives minimal in canonical order.
pub fn double_cosets(w: &WeylGroup, wi: &Subgroup, wj: &Subgroup) -> Vec<DoubleCoset> {
    let mut assigned = vec![false; w.order()];
    let mut out = Vec::new();
    for x in 0..w.order() {
        if assigned[x] {
            continue;
        }
        let mut size = 0;
        for &a in wj.elements() {
            let ax = w.mul(a, x);
            for &b in wi.elements() {
                let y = w.mul(ax, b);
                if !assigned[y] {
                    assigned[y] = true;
                    size += 1;
                }
            }
        }
        let xi = w.inverse(x);
        let inter: Vec<usize> = wj
            .elements()
            .iter()
            .copied()
            .filter(|&h| wi.contains(w.conjugate(xi, h)))
            .collect();
        out.push(DoubleCoset {
            representative: x,
            size,
            intersection: Subgroup::from_elements(w, inter),
        });
    }
    out
}
