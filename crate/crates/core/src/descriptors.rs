//! The Wiener index and the Graovac-Pisanski index.
//!
//! GP is computed by two algebraically equivalent routes: straight from the
//! definition (a double sum over vertices and automorphisms), and from the
//! orbit partition. [`descriptor_record`] always evaluates both,
//! returning an internal-consistency error if they ever disagree. GP is
//! carried as an exact rational: the `n / (2|Aut|)` prefactor does not
//! guarantee integrality a priori, even though every bundled molecule has an
//! integer GP.

use num_rational::Ratio;
use thiserror::Error;

use crate::distance::DistanceMatrix;
use crate::graph::MolecularGraph;
use crate::symmetry::{automorphisms, AutomorphismSet, OrbitPartition};

/// Exact rational value of the Graovac-Pisanski index.
pub type Rational = Ratio<i64>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DescriptorError {
    #[error("vertex {vertex} out of range 1..={vertex_count}")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("internal consistency failure: GP by definition = {definition}, by orbits = {orbit}")]
    GpFormMismatch {
        definition: Rational,
        orbit: Rational,
    },
}

/// Renders a rational as a plain integer when its denominator is 1.
pub fn rational_to_string(r: &Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Wiener index: half the sum of all distance-matrix entries.
pub fn wiener(d: &DistanceMatrix) -> u64 {
    let n = d.vertex_count();
    let total: u64 = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .map(|(u, v)| d.get0(u, v) as u64)
        .sum();
    total / 2
}

/// Wiener index restricted to a vertex subset: half the sum of `d(u, v)` over
/// ordered pairs from `subset` (1-indexed; duplicates are ignored).
pub fn wiener_subset(d: &DistanceMatrix, subset: &[usize]) -> Result<u64, DescriptorError> {
    let n = d.vertex_count();
    let mut s: Vec<usize> = subset.to_vec();
    s.sort_unstable();
    s.dedup();
    if let Some(&v) = s.iter().find(|&&v| v == 0 || v > n) {
        return Err(DescriptorError::VertexOutOfRange {
            vertex: v,
            vertex_count: n,
        });
    }
    let mut total: u64 = 0;
    for &u in &s {
        for &v in &s {
            total += d.get(u, v) as u64;
        }
    }
    Ok(total / 2)
}

/// GP by the definition: `n / (2|Aut|) * sum_u sum_a d(u, a(u))`.
///
/// The identity's zero contributions are included harmlessly. Exact rational
/// arithmetic throughout.
pub fn gp_by_definition(aut: &AutomorphismSet, d: &DistanceMatrix) -> Rational {
    let n = d.vertex_count();
    let mut x: i64 = 0;
    for p in aut.members() {
        for u in 0..n {
            x += d.get0(u, p.image0(u)) as i64;
        }
    }
    Ratio::new(n as i64, 2 * aut.order() as i64) * Ratio::from_integer(x)
}

/// GP by orbits: `n * sum_i W(V_i) / |V_i|`.
pub fn gp_by_orbits(orbits: &OrbitPartition, d: &DistanceMatrix) -> Rational {
    let n = d.vertex_count();
    let mut sum = Rational::from_integer(0);
    for orbit in orbits.orbits() {
        let mut total: i64 = 0;
        for &u in orbit {
            for &v in orbit {
                total += d.get(u, v) as i64;
            }
        }
        // total is the ordered-pair sum, so W(V_i) = total / 2; keep the
        // division exact by folding it into the rational.
        sum += Ratio::new(total, 2 * orbit.len() as i64);
    }
    Ratio::from_integer(n as i64) * sum
}

/// The symmetry-aware descriptor set of one molecule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescriptorRecord {
    pub name: Option<String>,
    pub gp: Rational,
    pub wiener: u64,
    pub aut_order: usize,
    pub vertex_count: usize,
    pub orbit_count: usize,
}

impl DescriptorRecord {
    pub fn gp_f64(&self) -> f64 {
        rational_to_f64(&self.gp)
    }

    pub fn gp_string(&self) -> String {
        rational_to_string(&self.gp)
    }
}

/// Runs the whole pipeline on one graph: distances, automorphisms (pruned
/// search), orbits, Wiener, and GP by both routes as a built-in self-check.
pub fn descriptor_record(g: &MolecularGraph) -> Result<DescriptorRecord, DescriptorError> {
    let d = g.distance_matrix();
    let aut = automorphisms(g);
    let orbits = aut.orbit_partition();
    let by_definition = gp_by_definition(&aut, &d);
    let by_orbits = gp_by_orbits(&orbits, &d);
    if by_definition != by_orbits {
        return Err(DescriptorError::GpFormMismatch {
            definition: by_definition,
            orbit: by_orbits,
        });
    }
    Ok(DescriptorRecord {
        name: g.name().map(str::to_owned),
        gp: by_definition,
        wiener: wiener(&d),
        aut_order: aut.order(),
        vertex_count: g.vertex_count(),
        orbit_count: orbits.orbit_count(),
    })
}
