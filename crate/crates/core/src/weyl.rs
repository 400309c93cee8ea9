//! Everything computed for one Cartan datum, built once and shared.

use std::sync::OnceLock;

use crate::chars::{attach_partition_labels, character_table, CharacterTable};
use crate::error::Result;
use crate::grp::{parabolic, ParabolicSubgroup, Subgroup};
use crate::rootsys::{
    build_cartan, build_root_system, enumerate_group, CartanDatum, CartanType, WeylGroup,
    DEFAULT_MAX_ORDER,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub max_order: usize,
    /// Seeds the eigenspace-splitting combinations.
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            max_order: DEFAULT_MAX_ORDER,
            seed: 0,
        }
    }
}

/// A Weyl group with its classes, character table and (lazily) its standard
/// parabolic subgroups.
#[derive(Debug)]
pub struct Weyl {
    cartan: CartanDatum,
    group: WeylGroup,
    whole: Subgroup,
    table: CharacterTable,
    seed: u64,
    parabolics: Vec<OnceLock<ParabolicSubgroup>>,
    parabolic_tables: Vec<OnceLock<CharacterTable>>,
}

impl Weyl {
    /// Default options, `central_rank = 0`.
    pub fn new(type_label: CartanType, rank: usize) -> Result<Self> {
        Self::build(build_cartan(type_label, rank, 0)?, Options::default())
    }

    pub fn build(cartan: CartanDatum, options: Options) -> Result<Self> {
        Self::build_with(cartan, options, |w, whole| character_table(w, whole, options.seed))
    }

    /// Like [`Weyl::build`], with the character table supplied by `table`
    /// (for example loaded from a cache and validated).
    pub fn build_with(
        cartan: CartanDatum,
        options: Options,
        table: impl FnOnce(&WeylGroup, &Subgroup) -> Result<CharacterTable>,
    ) -> Result<Self> {
        let roots = build_root_system(&cartan)?;
        let group = enumerate_group(&roots, options.max_order)?;
        let whole = Subgroup::whole(&group);
        let mut table = table(&group, &whole)?;
        if cartan.type_label == CartanType::A {
            attach_partition_labels(&mut table, &group, &whole, CartanType::A)?;
        }
        let subsets = 1usize << cartan.rank;
        Ok(Weyl {
            cartan,
            group,
            whole,
            table,
            seed: options.seed,
            parabolics: (0..subsets).map(|_| OnceLock::new()).collect(),
            parabolic_tables: (0..subsets).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn cartan(&self) -> &CartanDatum {
        &self.cartan
    }

    pub fn name(&self) -> String {
        self.cartan.name()
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    /// `W` viewed as a subgroup of itself; class functions on `W` live here.
    pub fn whole(&self) -> &Subgroup {
        &self.whole
    }

    pub fn table(&self) -> &CharacterTable {
        &self.table
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank
    }

    /// Subsets of the simple roots as bitmasks, in ascending mask order.
    pub fn subset_masks(&self) -> impl Iterator<Item = u32> {
        0..(1u32 << self.cartan.rank)
    }

    pub fn subset_of(mask: u32) -> Vec<usize> {
        (0..32).filter(|i| mask >> i & 1 == 1).collect()
    }

    /// `W_I` for the subset encoded by `mask`.
    pub fn parabolic(&self, mask: u32) -> &ParabolicSubgroup {
        self.parabolics[mask as usize]
            .get_or_init(|| parabolic(&self.group, &self.whole, &Self::subset_of(mask)))
    }

    /// Character table of `W_I`.
    pub fn parabolic_table(&self, mask: u32) -> Result<&CharacterTable> {
        let cell = &self.parabolic_tables[mask as usize];
        if let Some(t) = cell.get() {
            return Ok(t);
        }
        let t = character_table(&self.group, self.parabolic(mask).group(), self.seed)?;
        Ok(cell.get_or_init(|| t))
    }
}
