use crate::cos::Cos;
use crate::diagram::TypeSet;
use crate::error::{Error, Result};
use crate::geometry::{
    face_orbit_size, face_stabilizer_order, flag_labels, opposition_involution, vertex_orbit,
};
use crate::realization::Realization;
use crate::segment::direction;
use crate::vector::Ray;
use serde::{Deserialize, Serialize};

/// One distance class of target vertices as seen from a base vertex: all
/// target vertices in one orbit of the base vertex's stabilizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigonRow {
    /// The unique class representative inside the base vertex's closed
    /// star region (nonnegative against every wall through the base).
    pub representative: Ray,
    /// Cosine of the distance from the base vertex.
    pub cos: Cos,
    /// Face germ of the segment from the base vertex toward the class: the
    /// labels (≠ base) of the walls the representative pairs positively
    /// with. Empty exactly for the base vertex itself and its antipode.
    pub sigma: TypeSet,
    /// Number of target vertices in the class.
    pub orbit_size: u128,
}

/// The complete decomposition of one vertex orbit into distance classes
/// around a base vertex.
#[derive(Clone, Debug)]
pub struct BigonTable {
    pub realization_name: String,
    /// Label of the base vertex (the table describes distances from `v_base`).
    pub base: usize,
    /// Label of the vertex orbit being decomposed.
    pub target: usize,
    /// Rows ordered by increasing distance (decreasing cosine), then by
    /// representative.
    pub rows: Vec<BigonRow>,
    /// Size of the full target orbit.
    pub total: u128,
}

impl BigonTable {
    /// Whether the class sizes add up to the whole orbit.
    pub fn exhaustion_holds(&self) -> bool {
        self.rows.iter().map(|r| r.orbit_size).sum::<u128>() == self.total
    }

    /// Rows whose face germ avoids all of the given labels (equivalently,
    /// by the wall-vanishing correspondence: classes lying on every wall
    /// `r_l`, `l ∈ avoid`, through the base vertex).
    pub fn rows_avoiding(&self, avoid: &TypeSet) -> Vec<&BigonRow> {
        self.rows
            .iter()
            .filter(|r| r.sigma.is_disjoint(avoid))
            .collect()
    }

    /// Serializable document.
    pub fn to_doc(&self) -> BigonTableDoc {
        BigonTableDoc {
            realization: self.realization_name.clone(),
            base: self.base,
            target: self.target,
            total: self.total,
            rows: self
                .rows
                .iter()
                .map(|r| BigonRowDoc {
                    representative: r.representative.coords().to_vec(),
                    angle: r.cos.angle_str(),
                    cos: r.cos.cos_str(),
                    sigma: r.sigma.to_string(),
                    size: r.orbit_size,
                })
                .collect(),
        }
    }
}

/// Serialized bigon table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BigonTableDoc {
    pub realization: String,
    pub base: usize,
    pub target: usize,
    pub total: u128,
    pub rows: Vec<BigonRowDoc>,
}

/// Serialized bigon row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BigonRowDoc {
    pub representative: Vec<i64>,
    pub angle: String,
    pub cos: String,
    pub sigma: String,
    pub size: u128,
}

/// Decomposes the orbit of `v_target` into orbits of the stabilizer of
/// `v_base`, with one row per class.
///
/// Every stabilizer orbit meets the region `{⟨r_l,·⟩ ≥ 0 for all l ≠ base}`
/// in exactly one point, so the survivors of that filter are canonical
/// representatives and the rows are found without any orbit bookkeeping.
/// Class sizes come from the orbit–stabilizer identity.
pub fn enumerate_bigon(real: &Realization, base: usize, target: usize) -> Result<BigonTable> {
    enumerate_bigon_constrained(real, base, target, &TypeSet::empty())
}

/// Like [`enumerate_bigon`], but restricted to the sub-bigon swept out
/// through the walls named by `excluded`: only classes whose representative
/// vanishes against every wall `r_l`, `l ∈ excluded`, are listed.
///
/// By the wall-vanishing correspondence these are exactly the classes of the
/// full table whose face germ avoids `excluded`: a segment from the base
/// vertex whose germ lies on a wall through the base stays on that wall, so
/// its far endpoint vanishes there too, and conversely. Class sizes still
/// count the whole stabilizer orbit of the class (which leaves the walls);
/// `total` still counts the whole target orbit, so `exhaustion_holds` is
/// only meaningful when `excluded` is empty.
pub fn enumerate_bigon_constrained(
    real: &Realization,
    base: usize,
    target: usize,
    excluded: &TypeSet,
) -> Result<BigonTable> {
    if excluded.contains(base) {
        return Err(Error::InvalidArgument(format!(
            "excluded walls {excluded} contain the base label {base}"
        )));
    }
    for l in excluded.iter() {
        if l > real.rank() {
            return Err(Error::InvalidType {
                label: l,
                rank: real.rank(),
            });
        }
    }
    let base_vertex = real.vertex(base)?.clone();
    let orbit = vertex_orbit(real, target)?;
    let total = orbit.len() as u128;
    let base_face = TypeSet::singleton(base);
    let base_stab = face_stabilizer_order(real, &base_face)?;
    let mut rows = Vec::new();
    'point: for x in &orbit {
        let mut sigma = TypeSet::empty();
        for l in 1..=real.rank() {
            if l == base {
                continue;
            }
            let d = real.simple_root(l)?.dot(x)?;
            if d < 0 || (d > 0 && excluded.contains(l)) {
                continue 'point;
            }
            if d > 0 {
                sigma.insert(l);
            }
        }
        let spanned = base_face.union(&sigma);
        let orbit_size = base_stab / face_stabilizer_order(real, &spanned)?;
        rows.push(BigonRow {
            representative: x.clone(),
            cos: Cos::between(&base_vertex, x)?,
            sigma,
            orbit_size,
        });
    }
    rows.sort_by(|a, b| {
        b.cos
            .cmp(&a.cos)
            .then_with(|| a.representative.cmp(&b.representative))
    });
    let table = BigonTable {
        realization_name: real.name(),
        base,
        target,
        rows,
        total,
    };
    debug_assert!(face_orbit_size(real, &TypeSet::singleton(target))? == total);
    Ok(table)
}

/// Vertices of the target orbit lying strictly inside the sub-bigon region:
/// on every wall of `excluded`, strictly positive against every other wall
/// except the base, and strictly negative against the base wall.
///
/// These are the inequalities cutting out the open region swept by the
/// geodesics from the base vertex through the open sub-chamber and past the
/// equator; a vertex there would subdivide those geodesics.
pub fn strict_interior_vertices(
    real: &Realization,
    base: usize,
    target: usize,
    excluded: &TypeSet,
) -> Result<Vec<Ray>> {
    if excluded.contains(base) {
        return Err(Error::InvalidArgument(format!(
            "excluded walls {excluded} contain the base label {base}"
        )));
    }
    let orbit = vertex_orbit(real, target)?;
    let mut found = Vec::new();
    'point: for x in &orbit {
        for l in 1..=real.rank() {
            let d = real.simple_root(l)?.dot(x)?;
            let ok = if l == base {
                d < 0
            } else if excluded.contains(l) {
                d == 0
            } else {
                d > 0
            };
            if !ok {
                continue 'point;
            }
        }
        found.push(x.clone());
    }
    Ok(found)
}

/// The face germ of the geodesic from the vertex `v` toward `x`: the labels
/// naming the initial direction in the link of `v`. Errors when `x` is `v`
/// itself or its antipode (no well-defined germ).
pub fn sigma_face(real: &Realization, v: &Ray, x: &Ray) -> Result<TypeSet> {
    let d = direction(v, x)?;
    let vertex_labels = flag_labels(real, std::slice::from_ref(v))?;
    if vertex_labels.len() != 1 {
        return Err(Error::InvalidArgument(format!(
            "face germs are taken at vertices; {v} has type {vertex_labels}"
        )));
    }
    let both = flag_labels(real, &[v.clone(), d])?;
    Ok(both.difference(&vertex_labels))
}

/// Report of the antipodal folding identity for a half table.
#[derive(Clone, Debug, Serialize)]
pub struct HalfTableReport {
    /// Sum of class sizes over the half with nonpositive cosine.
    pub half_sum: u128,
    /// Sum of class sizes over the classes at distance exactly π/2.
    pub right_angle_sum: u128,
    /// Full orbit size.
    pub total: u128,
    /// Whether `2·half_sum − right_angle_sum == total`.
    pub holds: bool,
}

/// Checks the antipodal folding identity on the far half of a bigon table:
/// the antipodal map pairs the classes at distance ≥ π/2 with those at
/// distance ≤ π/2, double-counting distance exactly π/2, so
/// `2·Σ_{d ≥ π/2} − Σ_{d = π/2} = total`. Requires the target type to be
/// fixed by the opposition involution (otherwise antipodes leave the orbit
/// and no such folding exists).
pub fn verify_half_table(real: &Realization, table: &BigonTable) -> Result<HalfTableReport> {
    let involution = opposition_involution(real)?;
    if involution[table.target - 1] != table.target {
        return Err(Error::TargetNotSelfOpposite(table.target));
    }
    let zero = Cos::zero();
    let mut half_sum = 0u128;
    let mut right_angle_sum = 0u128;
    for row in &table.rows {
        if row.cos <= zero {
            half_sum += row.orbit_size;
        }
        if row.cos == zero {
            right_angle_sum += row.orbit_size;
        }
    }
    let holds = 2 * half_sum - right_angle_sum == table.total;
    Ok(HalfTableReport {
        half_sum,
        right_angle_sum,
        total: table.total,
        holds,
    })
}
