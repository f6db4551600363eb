//! Bundled molecular structures and properties for 65 hydrocarbons, plus the
//! text formats for user-supplied graphs and property tables.
//!
//! Three families ship with the crate: the 31 straight-chain alkanes C2..C32,
//! 20 polyaromatic hydrocarbons, and 14 octane isomers. Each molecule carries
//! its hand-encoded hydrogen-suppressed carbon skeleton, its melting point,
//! and its published descriptor values ([`ReferenceValues`]), so
//! [`verify_bundle`] can cross-check every structure encoding against the
//! published numbers.
//!
//! Melting points are stored exactly as published: kelvins for the alkane and
//! octane-isomer tables, and the PAH table's printed numbers as-is (that
//! table's negative entries suggest degrees Celsius despite its stated unit;
//! the regressions are unit-consistent within a family either way, so the
//! values are not altered).

mod bundle;
pub mod format;

use std::str::FromStr;
use std::sync::OnceLock;

use crate::descriptors::{descriptor_record, rational_to_string, DescriptorRecord, Rational};
use crate::graph::MolecularGraph;

pub use format::{
    load_graph_file, parse_graph_str, parse_properties_csv, write_graph_string,
    write_properties_csv, FormatError, PropertyRow,
};

/// Molecule family, matching the three bundled data sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Alkane,
    Pah,
    OctaneIsomer,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Alkane, Family::Pah, Family::OctaneIsomer];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Alkane => "alkane",
            Family::Pah => "pah",
            Family::OctaneIsomer => "octane_isomer",
        }
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "alkane" => Ok(Family::Alkane),
            "pah" => Ok(Family::Pah),
            "octane_isomer" => Ok(Family::OctaneIsomer),
            other => Err(format!("unknown family {other:?}")),
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Train/test membership of a molecule in its family's fixed split; `All`
/// marks families without a held-out set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Split {
    Train,
    Test,
    All,
}

impl Split {
    pub fn as_str(self) -> &'static str {
        match self {
            Split::Train => "train",
            Split::Test => "test",
            Split::All => "all",
        }
    }
}

impl FromStr for Split {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "train" => Ok(Split::Train),
            "test" => Ok(Split::Test),
            "all" => Ok(Split::All),
            other => Err(format!("unknown split {other:?}")),
        }
    }
}

/// One bundled molecule: structure, melting point, family, split.
#[derive(Debug, Clone, PartialEq)]
pub struct MoleculeEntry {
    pub name: String,
    pub graph: MolecularGraph,
    pub melting_point: f64,
    pub family: Family,
    pub split: Split,
}

/// Published descriptor values for one molecule, transcribed verbatim from
/// the source tables (decimal commas normalized to points).
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceValues {
    pub name: String,
    pub family: Family,
    pub gp: Rational,
    pub wiener: Option<u64>,
    pub aut_order: Option<usize>,
    pub source_table: String,
}

struct Bundle {
    entries: Vec<MoleculeEntry>,
    references: Vec<ReferenceValues>,
}

fn bundle() -> &'static Bundle {
    static BUNDLE: OnceLock<Bundle> = OnceLock::new();
    BUNDLE.get_or_init(|| {
        let props =
            parse_properties_csv(bundle::PROPERTIES_CSV).expect("bundled properties.csv is valid");
        let entries = props
            .into_iter()
            .map(|row| {
                let text = bundle::BUNDLED_GRAPHS
                    .iter()
                    .find(|(name, _)| *name == row.name)
                    .unwrap_or_else(|| panic!("no bundled graph for {}", row.name))
                    .1;
                let graph = parse_graph_str(text, Some(row.name.clone()))
                    .unwrap_or_else(|e| panic!("bundled graph {} is valid: {e}", row.name));
                MoleculeEntry {
                    name: row.name,
                    graph,
                    melting_point: row.melting_point,
                    family: row.family,
                    split: row.split,
                }
            })
            .collect();
        Bundle {
            entries,
            references: parse_reference_csv(bundle::REFERENCE_CSV),
        }
    })
}

fn parse_reference_csv(text: &str) -> Vec<ReferenceValues> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate().skip(1) {
        if raw.trim().is_empty() {
            continue;
        }
        let fields =
            format::split_csv_fields(raw, idx + 1).expect("bundled reference.csv is valid");
        assert_eq!(fields.len(), 6, "reference.csv line {}", idx + 1);
        let opt = |s: &str| -> Option<u64> {
            if s.is_empty() {
                None
            } else {
                Some(s.parse().expect("reference.csv integer"))
            }
        };
        out.push(ReferenceValues {
            name: fields[0].clone(),
            family: fields[1].parse().expect("reference.csv family"),
            gp: Rational::from_integer(fields[2].parse().expect("reference.csv gp")),
            wiener: opt(&fields[3]),
            aut_order: opt(&fields[4]).map(|v| v as usize),
            source_table: fields[5].clone(),
        });
    }
    out
}

/// All bundled molecules of a family, in published row order.
///
/// Alkanes: 31 entries (26 train + 5 test). PAHs: 20 (16 train + 4 test).
/// Octane isomers: 14, unsplit.
pub fn bundled_family(family: Family) -> Vec<MoleculeEntry> {
    bundle()
        .entries
        .iter()
        .filter(|e| e.family == family)
        .cloned()
        .collect()
}

/// Published descriptor values for a family, in published row order.
pub fn reference_values(family: Family) -> Vec<ReferenceValues> {
    bundle()
        .references
        .iter()
        .filter(|r| r.family == family)
        .cloned()
        .collect()
}

/// One quantity's computed-vs-published discrepancy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub quantity: &'static str,
    pub computed: String,
    pub published: String,
}

/// Verification outcome for one molecule.
#[derive(Debug, Clone, PartialEq)]
pub struct MoleculeCheck {
    pub name: String,
    pub family: Family,
    pub computed: DescriptorRecord,
    pub mismatches: Vec<Mismatch>,
}

impl MoleculeCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Per-molecule comparison of computed descriptors against published values.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub results: Vec<MoleculeCheck>,
}

impl VerificationReport {
    pub fn total(&self) -> usize {
        self.results.len()
    }

    pub fn passed(&self) -> usize {
        self.results.iter().filter(|r| r.passed()).count()
    }

    pub fn all_passed(&self) -> bool {
        self.passed() == self.total()
    }

    pub fn failures(&self) -> impl Iterator<Item = &MoleculeCheck> {
        self.results.iter().filter(|r| !r.passed())
    }

    /// `(passed, total)` for one family.
    pub fn family_counts(&self, family: Family) -> (usize, usize) {
        let of_family = self.results.iter().filter(|r| r.family == family);
        let total = of_family.clone().count();
        let passed = of_family.filter(|r| r.passed()).count();
        (passed, total)
    }
}

/// Computes descriptors for every molecule of `family` and compares them to
/// the published values: GP for every table, plus the Wiener index and
/// automorphism count where the source table prints them.
pub fn verify_family(family: Family) -> VerificationReport {
    let entries = bundled_family(family);
    let refs = reference_values(family);
    let results = entries
        .iter()
        .map(|entry| {
            let reference = refs
                .iter()
                .find(|r| r.name == entry.name)
                .unwrap_or_else(|| panic!("no reference values for {}", entry.name));
            let computed = descriptor_record(&entry.graph)
                .unwrap_or_else(|e| panic!("descriptor failure for {}: {e}", entry.name));
            let mut mismatches = Vec::new();
            if computed.gp != reference.gp {
                mismatches.push(Mismatch {
                    quantity: "gp",
                    computed: rational_to_string(&computed.gp),
                    published: rational_to_string(&reference.gp),
                });
            }
            if let Some(w) = reference.wiener {
                if computed.wiener != w {
                    mismatches.push(Mismatch {
                        quantity: "wiener",
                        computed: computed.wiener.to_string(),
                        published: w.to_string(),
                    });
                }
            }
            if let Some(aut) = reference.aut_order {
                if computed.aut_order != aut {
                    mismatches.push(Mismatch {
                        quantity: "aut_order",
                        computed: computed.aut_order.to_string(),
                        published: aut.to_string(),
                    });
                }
            }
            MoleculeCheck {
                name: entry.name.clone(),
                family,
                computed,
                mismatches,
            }
        })
        .collect();
    VerificationReport { results }
}

/// Verifies all three families; see [`verify_family`].
pub fn verify_bundle() -> VerificationReport {
    let mut results = Vec::new();
    for family in Family::ALL {
        results.extend(verify_family(family).results);
    }
    VerificationReport { results }
}
