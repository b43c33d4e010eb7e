use crate::diagram::{Diagram, Family};
use crate::error::{Error, Result};
use crate::vector::Ray;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A spherical Coxeter complex realized by integer vectors: a labeled simple
/// system `r_1..r_rank` together with the fundamental chamber vertices
/// `v_1..v_rank`, where `v_i` is the vertex opposite the `i`-th wall
/// (`⟨r_j, v_i⟩ = 0` for `j ≠ i` and `⟨r_i, v_i⟩ > 0`).
///
/// E6 and E7 are realized inside the 8-dimensional ambient space on the
/// subspaces `x6 = x7 = x8` and `x7 = x8` respectively; A_n lives in the
/// sum-zero hyperplane of `R^{n+1}`; D_n and E8 fill their ambient space.
#[derive(Clone, Debug)]
pub struct Realization {
    family: Family,
    rank: usize,
    ambient_dim: usize,
    simple_roots: Vec<Ray>,
    vertices: Vec<Ray>,
    diagram: Diagram,
    positive_roots: Vec<Ray>,
    subspace_basis: Vec<Vec<i64>>,
}

/// Serialized form: family, rank, and the defining integer vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationDoc {
    pub family: String,
    pub rank: usize,
    pub ambient_dim: usize,
    pub simple_roots: Vec<Vec<i64>>,
    pub vertices: Vec<Vec<i64>>,
    pub positive_root_count: usize,
}

fn ray(coords: &[i64]) -> Ray {
    Ray::new(coords.to_vec()).expect("nonzero constant vector")
}

/// `e_i − e_{i−1}` in dimension `dim` (1-based `i ≥ 2`).
fn step_root(dim: usize, i: usize) -> Ray {
    let mut c = vec![0i64; dim];
    c[i - 1] = 1;
    c[i - 2] = -1;
    ray(&c)
}

impl Realization {
    /// Builds the realization of the given family and rank.
    ///
    /// Supported: `A_n` (n ≥ 1), `D_n` (n ≥ 3, with D3 carrying the D-style
    /// labels on an A3 diagram), `E6`, `E7`, `E8`. Ranks above 16 are
    /// rejected (type sets are 16-bit and group orders are kept in `u128`).
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        match family {
            Family::A if (1..=16).contains(&rank) => Self::build_a(rank),
            Family::D if (3..=16).contains(&rank) => Self::build_d(rank),
            Family::E6 => Self::build_e(6),
            Family::E7 => Self::build_e(7),
            Family::E8 => Self::build_e(8),
            _ => Err(Error::UnsupportedRealization(family.name(rank))),
        }
    }

    /// A_n in the sum-zero hyperplane of `R^{n+1}`:
    /// `r_i = e_{i+1} − e_i`; chamber `x_1 ≤ x_2 ≤ … ≤ x_{n+1}`.
    fn build_a(n: usize) -> Result<Self> {
        let dim = n + 1;
        let simple_roots: Vec<Ray> = (1..=n).map(|i| step_root(dim, i + 1)).collect();
        let vertices: Vec<Ray> = (1..=n)
            .map(|i| {
                let mut c = vec![0i64; dim];
                for (k, slot) in c.iter_mut().enumerate() {
                    *slot = if k < i { i as i64 - dim as i64 } else { i as i64 };
                }
                ray(&c)
            })
            .collect();
        let subspace_basis: Vec<Vec<i64>> = (1..=n)
            .map(|i| step_root(dim, i + 1).coords().to_vec())
            .collect();
        Self::assemble(Family::A, n, dim, simple_roots, vertices, subspace_basis)
    }

    /// D_n in `R^n`: `r_1 = e_1 + e_2`, `r_i = e_i − e_{i−1}` for `i ≥ 2`;
    /// chamber `−x_2 ≤ x_1 ≤ x_2 ≤ … ≤ x_n`.
    fn build_d(n: usize) -> Result<Self> {
        let mut simple_roots = Vec::with_capacity(n);
        let mut first = vec![0i64; n];
        first[0] = 1;
        first[1] = 1;
        simple_roots.push(ray(&first));
        for i in 2..=n {
            simple_roots.push(step_root(n, i));
        }
        let mut vertices = Vec::with_capacity(n);
        vertices.push(ray(&vec![1i64; n]));
        let mut v2 = vec![1i64; n];
        v2[0] = -1;
        vertices.push(ray(&v2));
        for k in 3..=n {
            let mut c = vec![0i64; n];
            for slot in c.iter_mut().skip(k - 1) {
                *slot = 1;
            }
            vertices.push(ray(&c));
        }
        let subspace_basis = (0..n)
            .map(|i| {
                let mut c = vec![0i64; n];
                c[i] = 1;
                c
            })
            .collect();
        Self::assemble(Family::D, n, n, simple_roots, vertices, subspace_basis)
    }

    /// E6/E7/E8 in `R^8`.
    ///
    /// All three share `r_1` spanning `(1,1,1,−1,−1,−1,−1,−1)` and the chain
    /// `r_i = e_i − e_{i−1}`; E6 and E7 close their chains with the roots
    /// spanning `(1,1,1,1,−1,1,1,1)` and `(1,1,1,1,1,−1,1,1)` and live on the
    /// subspaces `x6 = x7 = x8` and `x7 = x8`.
    fn build_e(n: usize) -> Result<Self> {
        let dim = 8;
        let r1 = ray(&[1, 1, 1, -1, -1, -1, -1, -1]);
        let (family, simple_roots, vertices, subspace_basis): (
            Family,
            Vec<Ray>,
            Vec<Ray>,
            Vec<Vec<i64>>,
        ) = match n {
            6 => {
                let mut roots = vec![r1];
                for i in 2..=5 {
                    roots.push(step_root(dim, i));
                }
                roots.push(ray(&[1, 1, 1, 1, -1, 1, 1, 1]));
                let verts = vec![
                    ray(&[1, 1, 1, 1, 1, -1, -1, -1]),
                    ray(&[-3, 3, 3, 3, 3, -1, -1, -1]),
                    ray(&[0, 0, 3, 3, 3, -1, -1, -1]),
                    ray(&[1, 1, 1, 3, 3, -1, -1, -1]),
                    ray(&[3, 3, 3, 3, 9, -1, -1, -1]),
                    ray(&[3, 3, 3, 3, 3, 1, 1, 1]),
                ];
                let mut basis: Vec<Vec<i64>> = (0..5)
                    .map(|i| {
                        let mut c = vec![0i64; 8];
                        c[i] = 1;
                        c
                    })
                    .collect();
                basis.push(vec![0, 0, 0, 0, 0, 1, 1, 1]);
                (Family::E6, roots, verts, basis)
            }
            7 => {
                let mut roots = vec![r1];
                for i in 2..=6 {
                    roots.push(step_root(dim, i));
                }
                roots.push(ray(&[1, 1, 1, 1, 1, -1, 1, 1]));
                let verts = vec![
                    ray(&[1, 1, 1, 1, 1, 1, -2, -2]),
                    ray(&[-1, 1, 1, 1, 1, 1, -1, -1]),
                    ray(&[0, 0, 1, 1, 1, 1, -1, -1]),
                    ray(&[1, 1, 1, 3, 3, 3, -3, -3]),
                    ray(&[1, 1, 1, 1, 3, 3, -2, -2]),
                    ray(&[1, 1, 1, 1, 1, 3, -1, -1]),
                    ray(&[1, 1, 1, 1, 1, 1, 0, 0]),
                ];
                let mut basis: Vec<Vec<i64>> = (0..6)
                    .map(|i| {
                        let mut c = vec![0i64; 8];
                        c[i] = 1;
                        c
                    })
                    .collect();
                basis.push(vec![0, 0, 0, 0, 0, 0, 1, 1]);
                (Family::E7, roots, verts, basis)
            }
            8 => {
                let mut roots = vec![r1];
                for i in 2..=8 {
                    roots.push(step_root(dim, i));
                }
                let verts = vec![
                    ray(&[-1, -1, -1, -1, -1, -1, -1, -1]),
                    ray(&[-3, -1, -1, -1, -1, -1, -1, -1]),
                    ray(&[-2, -2, -1, -1, -1, -1, -1, -1]),
                    ray(&[-5, -5, -5, -3, -3, -3, -3, -3]),
                    ray(&[-2, -2, -2, -2, -1, -1, -1, -1]),
                    ray(&[-3, -3, -3, -3, -3, -1, -1, -1]),
                    ray(&[-1, -1, -1, -1, -1, -1, 0, 0]),
                    ray(&[-1, -1, -1, -1, -1, -1, -1, 1]),
                ];
                let basis = (0..8)
                    .map(|i| {
                        let mut c = vec![0i64; 8];
                        c[i] = 1;
                        c
                    })
                    .collect();
                (Family::E8, roots, verts, basis)
            }
            _ => unreachable!("build_e called with n ∉ {{6,7,8}}"),
        };
        Self::assemble(family, n, dim, simple_roots, vertices, subspace_basis)
    }

    fn assemble(
        family: Family,
        rank: usize,
        ambient_dim: usize,
        simple_roots: Vec<Ray>,
        vertices: Vec<Ray>,
        subspace_basis: Vec<Vec<i64>>,
    ) -> Result<Self> {
        let labeled: Vec<(usize, Ray)> = simple_roots
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, r)| (k + 1, r))
            .collect();
        let diagram = Diagram::from_simple_system(&labeled)?;
        let positive_roots = positive_root_closure(&simple_roots, &vertices)?;
        let realization = Realization {
            family,
            rank,
            ambient_dim,
            simple_roots,
            vertices,
            diagram,
            positive_roots,
            subspace_basis,
        };
        realization.check_invariants()?;
        Ok(realization)
    }

    /// Defining invariants: `⟨r_j, v_i⟩ = 0` iff `j ≠ i`, positive at `j = i`.
    fn check_invariants(&self) -> Result<()> {
        for (i, v) in self.vertices.iter().enumerate() {
            for (j, r) in self.simple_roots.iter().enumerate() {
                let d = r.dot(v)?;
                let ok = if i == j { d > 0 } else { d == 0 };
                if !ok {
                    return Err(Error::InvalidArgument(format!(
                        "vertex {} pairs badly with root {}: {d}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension of the ambient coordinate space the vectors live in.
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension of the linear span of the complex (= rank); the sphere
    /// itself has dimension `rank − 1`.
    pub fn space_dim(&self) -> usize {
        self.rank
    }

    /// Short name, e.g. `"E8"` or `"D5"`.
    pub fn name(&self) -> String {
        self.family.name(self.rank)
    }

    /// The labeled simple roots `r_1..r_rank` (slice index is label − 1).
    pub fn simple_roots(&self) -> &[Ray] {
        &self.simple_roots
    }

    /// The simple root with 1-based label `i`.
    pub fn simple_root(&self, i: usize) -> Result<&Ray> {
        self.simple_roots
            .get(i.wrapping_sub(1))
            .ok_or(Error::InvalidType { label: i, rank: self.rank })
    }

    /// The fundamental chamber vertices `v_1..v_rank`.
    pub fn vertices(&self) -> &[Ray] {
        &self.vertices
    }

    /// The fundamental vertex with 1-based label `i`.
    pub fn vertex(&self, i: usize) -> Result<&Ray> {
        self.vertices
            .get(i.wrapping_sub(1))
            .ok_or(Error::InvalidType { label: i, rank: self.rank })
    }

    /// The Dynkin diagram with this realization's labels.
    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    /// One representative per wall, oriented to be nonnegative on the
    /// fundamental chamber.
    pub fn positive_roots(&self) -> &[Ray] {
        &self.positive_roots
    }

    /// An integer basis of the subspace the complex spans (used for random
    /// point generation and membership checks).
    pub fn subspace_basis(&self) -> &[Vec<i64>] {
        &self.subspace_basis
    }

    /// Whether a vector lies in the realization's subspace.
    pub fn contains(&self, p: &Ray) -> Result<bool> {
        if p.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch(p.dim(), self.ambient_dim));
        }
        Ok(match self.family {
            Family::A => p.coords().iter().map(|&c| i128::from(c)).sum::<i128>() == 0,
            Family::D | Family::E8 => true,
            Family::E6 => {
                let c = p.coords();
                c[5] == c[6] && c[6] == c[7]
            }
            Family::E7 => {
                let c = p.coords();
                c[6] == c[7]
            }
        })
    }

    /// An interior point of the fundamental chamber (the vertex sum).
    pub fn chamber_interior_point(&self) -> Ray {
        let refs: Vec<&Ray> = self.vertices.iter().collect();
        Ray::sum(&refs).expect("vertex sum is interior, hence nonzero")
    }

    /// Serializable document with the defining data.
    pub fn to_doc(&self) -> RealizationDoc {
        RealizationDoc {
            family: self.name(),
            rank: self.rank,
            ambient_dim: self.ambient_dim,
            simple_roots: self.simple_roots.iter().map(|r| r.coords().to_vec()).collect(),
            vertices: self.vertices.iter().map(|v| v.coords().to_vec()).collect(),
            positive_root_count: self.positive_roots.len(),
        }
    }
}

/// Closes the simple system under its own reflections and returns one
/// representative per wall, oriented nonnegatively on the fundamental
/// chamber (simple roots keep their own orientation).
fn positive_root_closure(simple_roots: &[Ray], vertices: &[Ray]) -> Result<Vec<Ray>> {
    let refs: Vec<&Ray> = vertices.iter().collect();
    let interior = Ray::sum(&refs)?;
    let orient = |r: &Ray| -> Result<Ray> {
        let d = r.dot(&interior)?;
        debug_assert!(d != 0, "a root cannot vanish on a chamber-interior point");
        Ok(if d < 0 { r.antipode() } else { r.clone() })
    };
    let mut set: BTreeSet<Ray> = BTreeSet::new();
    let mut queue: Vec<Ray> = Vec::new();
    for r in simple_roots {
        let o = orient(r)?;
        if set.insert(o.clone()) {
            queue.push(o);
        }
    }
    while let Some(r) = queue.pop() {
        for s in simple_roots {
            let o = orient(&r.reflect(s)?)?;
            if set.insert(o.clone()) {
                queue.push(o);
            }
        }
    }
    Ok(set.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_root_counts() {
        let cases = [
            (Family::A, 4, 10),
            (Family::D, 4, 12),
            (Family::D, 5, 20),
            (Family::D, 8, 56),
            (Family::E6, 6, 36),
            (Family::E7, 7, 63),
            (Family::E8, 8, 120),
        ];
        for (f, n, count) in cases {
            let r = Realization::new(f, n).unwrap();
            assert_eq!(r.positive_roots().len(), count, "{}", r.name());
        }
    }

    #[test]
    fn stated_vertex_representatives() {
        let e8 = Realization::new(Family::E8, 8).unwrap();
        assert_eq!(
            e8.vertex(8).unwrap().coords(),
            &[-1, -1, -1, -1, -1, -1, -1, 1]
        );
        let d4 = Realization::new(Family::D, 4).unwrap();
        assert_eq!(d4.vertex(4).unwrap().coords(), &[0, 0, 0, 1]);
        assert_eq!(d4.vertex(1).unwrap().coords(), &[1, 1, 1, 1]);
    }

    #[test]
    fn diagrams_classify_as_their_family() {
        for (f, n) in [
            (Family::A, 5),
            (Family::D, 3),
            (Family::D, 6),
            (Family::E6, 6),
            (Family::E7, 7),
            (Family::E8, 8),
        ] {
            let r = Realization::new(f, n).unwrap();
            let class = r.diagram().classify_component().unwrap();
            let expected = match (f, n) {
                (Family::D, 3) => (Family::A, 3), // D3 carries an A3 diagram
                other => other,
            };
            assert_eq!(class, expected, "{}", r.name());
        }
    }

    #[test]
    fn positive_roots_are_nonnegative_on_chamber() {
        for (f, n) in [(Family::D, 5), (Family::E6, 6), (Family::E8, 8)] {
            let r = Realization::new(f, n).unwrap();
            for root in r.positive_roots() {
                for v in r.vertices() {
                    assert!(root.dot(v).unwrap() >= 0);
                }
            }
        }
    }

    #[test]
    fn subspace_membership() {
        let e7 = Realization::new(Family::E7, 7).unwrap();
        for v in e7.vertices() {
            assert!(e7.contains(v).unwrap());
        }
        for r in e7.positive_roots() {
            assert!(e7.contains(r).unwrap(), "root {r} outside x7=x8");
        }
        let outside = Ray::new(vec![0, 0, 0, 0, 0, 0, 1, 0]).unwrap();
        assert!(!e7.contains(&outside).unwrap());
    }

    #[test]
    fn unsupported_ranks_are_rejected() {
        assert!(Realization::new(Family::D, 2).is_err());
        assert!(Realization::new(Family::A, 0).is_err());
        assert!(Realization::new(Family::D, 17).is_err());
    }
}
