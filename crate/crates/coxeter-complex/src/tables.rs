//! Frozen reference tables and their regeneration checks.
//!
//! A golden file stores, for one realization, complete bigon tables (every
//! stabilizer class of a target orbit as seen from a base vertex, with exact
//! distance, face germ, class size, and the classified geodesic segment to
//! the class representative) and the orbit decompositions into
//! display-symmetry classes. Verification regenerates everything from
//! scratch and diffs it field by field.

use crate::bigon::enumerate_bigon_constrained;
use crate::diagram::{Family, TypeSet};
use crate::error::{Error, Result};
use crate::geometry::vertex_orbit;
use crate::realization::Realization;
use crate::segment::trace_segment;
use crate::vector::Ray;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// The classified geodesic from the base vertex to a class representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenSegment {
    /// Stop sequence of vertex types along the segment, e.g. `"232"`.
    pub type_string: String,
    /// Whether the segment runs inside the 1-skeleton of a singular sphere.
    pub singular: bool,
    /// Largest cell dimension met by the open segment.
    pub hull_dim: usize,
}

/// One row of a frozen bigon table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenRow {
    /// Class representative inside the base vertex's closed star region.
    pub representative: Vec<i64>,
    /// Canonical angle string of the distance from the base vertex.
    pub angle: String,
    /// Face germ labels, `"-"` for the base vertex and its antipode.
    pub sigma: String,
    /// Class size (orbit of the representative under the base stabilizer).
    pub size: u128,
    /// Segment classification; absent for distance 0 and π.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub segment: Option<GoldenSegment>,
}

/// One frozen bigon table: the decomposition of a target vertex orbit into
/// base-stabilizer classes, optionally restricted to the walls `excluded`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenBigonTable {
    pub base: usize,
    pub target: usize,
    /// Wall labels the listed classes vanish against (sub-bigon scope);
    /// empty for the full table.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub excluded: Vec<usize>,
    /// Size of the whole target orbit.
    pub total: u128,
    pub rows: Vec<GoldenRow>,
}

impl GoldenBigonTable {
    pub fn label(&self) -> String {
        if self.excluded.is_empty() {
            format!("bigon base={} target={}", self.base, self.target)
        } else {
            let walls: Vec<String> = self.excluded.iter().map(|l| l.to_string()).collect();
            format!(
                "bigon base={} target={} on walls {}",
                self.base,
                self.target,
                walls.join(",")
            )
        }
    }
}

/// A family's complete set of frozen bigon tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenTables {
    pub family: String,
    pub rank: usize,
    pub tables: Vec<GoldenBigonTable>,
}

/// One display-symmetry class of a vertex orbit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenOrbitClass {
    /// Lexicographically least member of the class.
    pub representative: Vec<i64>,
    pub size: u128,
}

/// The display-class decomposition of one vertex orbit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenOrbitType {
    pub vertex_type: usize,
    pub size: u128,
    pub classes: Vec<GoldenOrbitClass>,
}

/// A family's frozen orbit decompositions for every vertex type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenOrbits {
    pub family: String,
    pub rank: usize,
    pub types: Vec<GoldenOrbitType>,
}

/// Outcome of regenerating one frozen table.
#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub label: String,
    pub rows: usize,
    pub pass: bool,
    /// Human-readable field-level differences (empty on pass).
    pub diffs: Vec<String>,
}

/// Computes one bigon table in golden form, traces included.
pub fn compute_golden_table(
    real: &Realization,
    base: usize,
    target: usize,
    excluded: &TypeSet,
) -> Result<GoldenBigonTable> {
    let table = enumerate_bigon_constrained(real, base, target, excluded)?;
    let base_vertex = real.vertex(base)?.clone();
    let mut rows = Vec::with_capacity(table.rows.len());
    for row in &table.rows {
        let segment = if row.representative == base_vertex
            || row.representative == base_vertex.antipode()
        {
            None
        } else {
            let trace = trace_segment(real, &base_vertex, &row.representative)?;
            Some(GoldenSegment {
                type_string: trace.type_string,
                singular: trace.singular,
                hull_dim: trace.hull_dim,
            })
        };
        rows.push(GoldenRow {
            representative: row.representative.coords().to_vec(),
            angle: row.cos.angle_str(),
            sigma: row.sigma.to_string(),
            size: row.orbit_size,
            segment,
        });
    }
    Ok(GoldenBigonTable {
        base,
        target,
        excluded: excluded.iter().collect(),
        total: table.total,
        rows,
    })
}

/// Regenerates every table of a golden set and reports field-level diffs.
pub fn verify_tables(real: &Realization, golden: &GoldenTables) -> Result<Vec<TableReport>> {
    let mut reports = Vec::with_capacity(golden.tables.len());
    for table in &golden.tables {
        let excluded = TypeSet::from_iter(table.excluded.iter().copied());
        let fresh = compute_golden_table(real, table.base, table.target, &excluded)?;
        reports.push(diff_tables(table, &fresh));
    }
    Ok(reports)
}

fn diff_tables(golden: &GoldenBigonTable, fresh: &GoldenBigonTable) -> TableReport {
    let mut diffs = Vec::new();
    if golden.total != fresh.total {
        diffs.push(format!(
            "orbit total: stored {} regenerated {}",
            golden.total, fresh.total
        ));
    }
    if golden.rows.len() != fresh.rows.len() {
        diffs.push(format!(
            "row count: stored {} regenerated {}",
            golden.rows.len(),
            fresh.rows.len()
        ));
    }
    for (i, (g, f)) in golden.rows.iter().zip(&fresh.rows).enumerate() {
        if g != f {
            diffs.push(format!(
                "row {i}: stored {} regenerated {}",
                row_summary(g),
                row_summary(f)
            ));
        }
    }
    TableReport {
        label: golden.label(),
        rows: golden.rows.len(),
        pass: diffs.is_empty(),
        diffs,
    }
}

fn row_summary(r: &GoldenRow) -> String {
    let coords: Vec<String> = r.representative.iter().map(|c| c.to_string()).collect();
    let seg = r
        .segment
        .as_ref()
        .map(|s| {
            format!(
                " type {} singular {} hull {}",
                s.type_string, s.singular, s.hull_dim
            )
        })
        .unwrap_or_default();
    format!(
        "[({}) at {} germ {} size {}{}]",
        coords.join(","),
        r.angle,
        r.sigma,
        r.size,
        seg
    )
}

/// Display symmetry used to present orbits compactly: the largest signed
/// permutation symmetry of the coordinate model. Two vectors are in the same
/// display class exactly when their keys agree.
///
/// - Rank-n A model: coordinate permutations only.
/// - D and rank-8 E models: permutations of all coordinates and evenly many
///   sign changes.
/// - Rank-6 E model: permutations and evenly many sign changes of the first
///   five coordinates; the last three are carried verbatim.
/// - Rank-7 E model: permutations and evenly many sign changes of the first
///   six coordinates, plus a free simultaneous flip of the last two (so the
///   pair contributes only its magnitude).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DisplayKey {
    /// Sorted magnitudes of the permutable slots.
    pub magnitudes: Vec<i64>,
    /// Parity of the number of negative slots: 0, 1, or -1 when a zero slot
    /// makes both parities reachable. Always 0 for the A model (no sign
    /// changes; the full sorted signed vector is the key instead).
    pub parity: i8,
    /// Coordinates not moved by the display symmetry, verbatim.
    pub fixed_tail: Vec<i64>,
}

/// The display class key of an orbit vector.
pub fn display_key(real: &Realization, x: &Ray) -> Result<DisplayKey> {
    let c = x.coords();
    match real.family() {
        Family::A => Ok(DisplayKey {
            magnitudes: {
                let mut v = c.to_vec();
                v.sort_unstable();
                v
            },
            parity: 0,
            fixed_tail: Vec::new(),
        }),
        Family::D | Family::E8 => Ok(signed_perm_key(c, &[])),
        Family::E6 => Ok(signed_perm_key(&c[..5], &c[5..])),
        Family::E7 => {
            if c[6] != c[7] {
                return Err(Error::InvalidArgument(
                    "rank-7 E vectors carry equal last coordinates".into(),
                ));
            }
            // Permutations and evenly many sign changes act on the first
            // six coordinates; the joint flip of the last two is free, so
            // only the magnitude of the pair survives in the key.
            let mut key = signed_perm_key(&c[..6], &[]);
            key.magnitudes.push(c[6].abs());
            Ok(key)
        }
    }
}

/// Key under permutations of the slots and evenly many sign flips across
/// them: sorted magnitudes plus the parity of the negative count, with the
/// parity wildcarded when a zero slot makes both parities reachable.
fn signed_perm_key(slots: &[i64], tail: &[i64]) -> DisplayKey {
    let mut magnitudes: Vec<i64> = slots.iter().map(|v| v.abs()).collect();
    magnitudes.sort_unstable();
    let parity = if slots.iter().any(|&v| v == 0) {
        -1
    } else {
        (slots.iter().filter(|&&v| v < 0).count() % 2) as i8
    };
    DisplayKey {
        magnitudes,
        parity,
        fixed_tail: tail.to_vec(),
    }
}

/// Computes the display-class decomposition of every vertex orbit.
pub fn compute_golden_orbits(real: &Realization) -> Result<GoldenOrbits> {
    let mut types = Vec::with_capacity(real.rank());
    for t in 1..=real.rank() {
        let orbit = vertex_orbit(real, t)?;
        let mut classes: BTreeMap<DisplayKey, (Vec<i64>, u128)> = BTreeMap::new();
        for x in &orbit {
            let key = display_key(real, x)?;
            let entry = classes
                .entry(key)
                .or_insert_with(|| (x.coords().to_vec(), 0));
            entry.1 += 1;
            if x.coords() < entry.0.as_slice() {
                entry.0 = x.coords().to_vec();
            }
        }
        let mut classes: Vec<GoldenOrbitClass> = classes
            .into_values()
            .map(|(representative, size)| GoldenOrbitClass {
                representative,
                size,
            })
            .collect();
        classes.sort_by(|a, b| {
            b.size
                .cmp(&a.size)
                .then_with(|| a.representative.cmp(&b.representative))
        });
        types.push(GoldenOrbitType {
            vertex_type: t,
            size: orbit.len() as u128,
            classes,
        });
    }
    Ok(GoldenOrbits {
        family: format!("{:?}", real.family()),
        rank: real.rank(),
        types,
    })
}

/// Regenerates the orbit decompositions and reports diffs.
pub fn verify_orbits(real: &Realization, golden: &GoldenOrbits) -> Result<Vec<TableReport>> {
    let fresh = compute_golden_orbits(real)?;
    let mut reports = Vec::new();
    for (g, f) in golden.types.iter().zip(&fresh.types) {
        let mut diffs = Vec::new();
        if g.size != f.size {
            diffs.push(format!("orbit size: stored {} regenerated {}", g.size, f.size));
        }
        if g.classes != f.classes {
            diffs.push(format!(
                "class decomposition: stored {} classes, regenerated {}",
                g.classes.len(),
                f.classes.len()
            ));
        }
        reports.push(TableReport {
            label: format!("orbit type {}", g.vertex_type),
            rows: g.classes.len(),
            pass: diffs.is_empty(),
            diffs,
        });
    }
    if golden.types.len() != fresh.types.len() {
        reports.push(TableReport {
            label: "orbit type count".into(),
            rows: golden.types.len(),
            pass: false,
            diffs: vec![format!(
                "stored {} types, regenerated {}",
                golden.types.len(),
                fresh.types.len()
            )],
        });
    }
    Ok(reports)
}

/// The standard golden table set for a realization: every base/target pair
/// a reference table or distance menu is stated for.
pub fn standard_table_specs(family: Family, rank: usize) -> Vec<(usize, usize, Vec<usize>)> {
    match family {
        Family::E8 => vec![
            (1, 1, vec![]),
            (2, 2, vec![]),
            (2, 8, vec![]),
            (7, 7, vec![]),
            (7, 8, vec![]),
            (8, 8, vec![]),
            (7, 7, vec![2, 8]),
            (1, 1, vec![2, 7, 8]),
            (6, 6, vec![1, 2, 7, 8]),
        ],
        Family::E7 => vec![
            (2, 2, vec![]),
            (2, 7, vec![]),
            (7, 2, vec![]),
            (7, 7, vec![]),
        ],
        Family::E6 => vec![(2, 2, vec![]), (2, 6, vec![]), (6, 6, vec![])],
        Family::D => vec![
            (rank, rank, vec![]),
            (rank - 1, rank - 1, vec![]),
            (1, 1, vec![]),
            (2, 2, vec![]),
            (1, rank, vec![]),
            (2, rank, vec![]),
        ],
        Family::A => vec![(1, 1, vec![]), (1, rank, vec![])],
    }
}

/// Computes the full standard golden set for a realization.
pub fn compute_standard_tables(real: &Realization) -> Result<GoldenTables> {
    let mut tables = Vec::new();
    for (base, target, excluded) in standard_table_specs(real.family(), real.rank()) {
        let set = TypeSet::from_iter(excluded.iter().copied());
        tables.push(compute_golden_table(real, base, target, &set)?);
    }
    Ok(GoldenTables {
        family: format!("{:?}", real.family()),
        rank: real.rank(),
        tables,
    })
}

/// TSV projection of a golden table set (one line per row, tables separated
/// by headers) for human-readable diffs.
pub fn tables_tsv(golden: &GoldenTables) -> String {
    let mut out = String::new();
    for table in &golden.tables {
        out.push_str(&format!(
            "# {} rank {} {} | orbit total {}\n",
            golden.family,
            golden.rank,
            table.label(),
            table.total
        ));
        out.push_str("representative\tangle\tsigma\tsize\ttype_string\tsingular\thull_dim\n");
        for r in &table.rows {
            let coords: Vec<String> = r.representative.iter().map(|c| c.to_string()).collect();
            let (ts, sing, hull) = match &r.segment {
                Some(s) => (
                    s.type_string.clone(),
                    s.singular.to_string(),
                    s.hull_dim.to_string(),
                ),
                None => ("-".into(), "-".into(), "-".into()),
            };
            out.push_str(&format!(
                "({})\t{}\t{}\t{}\t{}\t{}\t{}\n",
                coords.join(","),
                r.angle,
                r.sigma,
                r.size,
                ts,
                sing,
                hull
            ));
        }
        out.push('\n');
    }
    out
}
