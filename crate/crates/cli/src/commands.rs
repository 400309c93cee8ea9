use log::warn;
use weyl_core::chars::character_table;
use weyl_core::dl::{render_pairing, springer_table, verify_involution, verify_sign_twist};
use weyl_core::rootsys::build_cartan;
use weyl_core::verify::{run_suite, ROSTER};
use weyl_core::{CartanDatum, CartanType, Options, Weyl};

use crate::cache::{self, TableCacheEntry};
use crate::config::Config;
use crate::error::CliError;
use crate::report::{CheckEntry, Report, ReportKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    One(CartanType, usize),
    All,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Table(CartanType, usize),
    Dl(CartanType, usize),
    Verify(Target),
}

impl Command {
    pub fn kind(&self) -> ReportKind {
        match self {
            Command::Table(..) => ReportKind::Table,
            Command::Dl(..) => ReportKind::Dl,
            Command::Verify(_) => ReportKind::Verify,
        }
    }
}

pub struct Outcome {
    pub report: Report,
    /// False when any check inside the command failed.
    pub success: bool,
}

/// Builds the group, taking the character table from the cache when a valid
/// entry exists and writing one otherwise.
pub fn load_weyl(cartan: CartanDatum, config: &Config) -> Result<Weyl, CliError> {
    let options = Options {
        max_order: config.max_group_order,
        seed: config.rng_seed,
    };
    let cached = cache::load(&config.cache_dir, &cartan);
    let mut hit = false;
    let weyl = Weyl::build_with(cartan.clone(), options, |w, whole| {
        if let Some(entry) = &cached {
            match entry.to_table(w, whole) {
                Ok(t) => {
                    hit = true;
                    return Ok(t);
                }
                Err(e) => warn!("discarding cached table for {}: {e}", cartan.name()),
            }
        }
        character_table(w, whole, options.seed)
    })?;
    if !hit {
        let entry = TableCacheEntry::new(weyl.cartan(), weyl.group(), weyl.whole(), weyl.table());
        if let Err(e) = cache::save(&config.cache_dir, weyl.cartan(), &entry) {
            warn!("could not write cache entry for {}: {e}", weyl.name());
        }
    }
    Ok(weyl)
}

fn cartan(t: CartanType, rank: usize) -> Result<CartanDatum, CliError> {
    Ok(build_cartan(t, rank, 0)?)
}

pub fn run(command: &Command, config: &Config) -> Result<Outcome, CliError> {
    config.validate()?;
    let mut report = Report::default();
    match command {
        Command::Table(t, rank) => {
            let weyl = load_weyl(cartan(*t, *rank)?, config)?;
            report.push_cartan(&weyl);
            report.push_classes(&weyl);
            report.push_irreducibles(&weyl, None);
        }
        Command::Dl(t, rank) => {
            let weyl = load_weyl(cartan(*t, *rank)?, config)?;
            let twist = verify_sign_twist(&weyl)?;
            let involution = verify_involution(&weyl)?;
            let table = weyl.table();
            let images: Vec<String> = twist
                .permutation
                .iter()
                .map(|j| j.map_or_else(|| "mixed".to_string(), |j| table.label(j)))
                .collect();
            report.push_cartan(&weyl);
            report.push_classes(&weyl);
            report.push_irreducibles(&weyl, Some(&images));
            report.notes.push(convention_note(&weyl));
            report.notes.push(format!("pairing: {}", render_pairing(&springer_table(&weyl)?)));
            report.checks.push(CheckEntry {
                group: weyl.name(),
                name: "sign_twist".into(),
                passed: twist.holds(),
                detail: format!("{} mismatches", twist.mismatches.len()),
            });
            report.checks.push(CheckEntry {
                group: weyl.name(),
                name: "involution".into(),
                passed: involution.holds(),
                detail: format!("{} failures", involution.failures.len()),
            });
        }
        Command::Verify(target) => {
            let roster: Vec<(CartanType, usize)> = match target {
                Target::One(t, r) => vec![(*t, *r)],
                Target::All => ROSTER.to_vec(),
            };
            for (t, rank) in roster {
                let weyl = load_weyl(cartan(t, rank)?, config)?;
                report.push_cartan(&weyl);
                report.checks.extend(run_suite(&weyl)?.into_iter().map(CheckEntry::from));
            }
        }
    }
    let success = report.all_passed();
    Ok(Outcome { report, success })
}

fn convention_note(weyl: &Weyl) -> String {
    if weyl.cartan().type_label == CartanType::A {
        format!(
            "convention: trivial character labelled ({}); labels are partitions via Murnaghan-Nakayama",
            weyl.rank() + 1
        )
    } else {
        "convention: label d_k is the k-th irreducible of degree d in canonical order".to_string()
    }
}

/// Parses a `verify` target: `all`, or a type letter followed by a rank.
pub fn parse_target(type_or_all: &str, rank: Option<usize>) -> Result<Target, CliError> {
    if type_or_all.eq_ignore_ascii_case("all") {
        if rank.is_some() {
            return Err(CliError::Usage("`verify all` takes no rank".into()));
        }
        return Ok(Target::All);
    }
    let t: CartanType = type_or_all.parse()?;
    let rank = rank.ok_or_else(|| CliError::Usage(format!("missing rank after type {t}")))?;
    Ok(Target::One(t, rank))
}
