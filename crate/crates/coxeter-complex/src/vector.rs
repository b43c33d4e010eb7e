use crate::error::{Error, Result};
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// A point on the sphere, stored as the primitive integer vector spanning its
/// ray.
///
/// Two proportional vectors with a positive ratio denote the same point, so
/// every `Ray` is normalized on construction: the gcd of the coordinates is
/// divided out and the orientation is kept. Antipodal points are distinct
/// rays. Equality, ordering, and hashing are coordinate-wise on the primitive
/// representative.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Ray(Vec<i64>);

impl Ray {
    /// Builds a ray from integer coordinates, dividing out their content.
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        Self::from_i128(coords.into_iter().map(i128::from).collect())
    }

    /// Builds a ray from wide coordinates, normalizing and narrowing.
    pub fn from_i128(coords: Vec<i128>) -> Result<Self> {
        let mut g: i128 = 0;
        for &c in &coords {
            g = g.gcd(&c);
        }
        if g == 0 {
            return Err(Error::ZeroVector);
        }
        let mut out = Vec::with_capacity(coords.len());
        for c in coords {
            let v = c / g;
            out.push(i64::try_from(v).map_err(|_| Error::Overflow)?);
        }
        Ok(Ray(out))
    }

    /// Coordinates of the primitive representative.
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Exact inner product, computed in wide integers.
    pub fn dot(&self, other: &Ray) -> Result<i128> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(self.dim(), other.dim()));
        }
        Ok(self
            .0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| i128::from(a) * i128::from(b))
            .sum())
    }

    /// Exact squared norm of the primitive representative.
    pub fn norm_sq(&self) -> i128 {
        self.0.iter().map(|&a| i128::from(a) * i128::from(a)).sum()
    }

    /// The antipodal point.
    pub fn antipode(&self) -> Ray {
        Ray(self.0.iter().map(|&a| -a).collect())
    }

    /// Reflects the point in the wall orthogonal to `root`:
    /// `p ↦ p·⟨r,r⟩ − 2⟨p,r⟩·r`, re-normalized. An involution on rays.
    pub fn reflect(&self, root: &Ray) -> Result<Ray> {
        let pr = self.dot(root)?;
        let rr = root.norm_sq();
        let coords = self
            .0
            .iter()
            .zip(&root.0)
            .map(|(&p, &r)| i128::from(p) * rr - 2 * pr * i128::from(r))
            .collect();
        Ray::from_i128(coords)
    }

    /// The primitive ray spanned by `a·x + b·y`.
    pub fn combine(a: i128, x: &Ray, b: i128, y: &Ray) -> Result<Ray> {
        if x.dim() != y.dim() {
            return Err(Error::DimensionMismatch(x.dim(), y.dim()));
        }
        let coords = x
            .0
            .iter()
            .zip(&y.0)
            .map(|(&p, &q)| a * i128::from(p) + b * i128::from(q))
            .collect();
        Ray::from_i128(coords)
    }

    /// The primitive ray spanned by the sum of the given points.
    pub fn sum(points: &[&Ray]) -> Result<Ray> {
        let first = points.first().ok_or(Error::ZeroVector)?;
        let mut coords = vec![0i128; first.dim()];
        for p in points {
            if p.dim() != coords.len() {
                return Err(Error::DimensionMismatch(coords.len(), p.dim()));
            }
            for (c, &v) in coords.iter_mut().zip(&p.0) {
                *c += i128::from(v);
            }
        }
        Ray::from_i128(coords)
    }

    /// Floating-point unit vector, for cross-check harnesses only.
    pub fn unit_f64(&self) -> Vec<f64> {
        let n = (self.norm_sq() as f64).sqrt();
        self.0.iter().map(|&a| a as f64 / n).collect()
    }
}

impl fmt::Debug for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Ray {
    type Err = Error;

    /// Parses `(1,-1,0)` or `1 -1 0` (commas or whitespace, optional parens).
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut coords = Vec::new();
        for tok in trimmed.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            coords.push(
                tok.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad coordinate {tok:?}")))?,
            );
        }
        if coords.is_empty() {
            return Err(Error::Parse(format!("no coordinates in {s:?}")));
        }
        Ray::new(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_content_and_keeps_orientation() {
        let r = Ray::new(vec![2, -4, 6]).unwrap();
        assert_eq!(r.coords(), &[1, -2, 3]);
        let n = Ray::new(vec![-2, 4, -6]).unwrap();
        assert_eq!(n.coords(), &[-1, 2, -3]);
        assert_ne!(r, n);
        assert_eq!(r.antipode(), n);
    }

    #[test]
    fn zero_vector_is_rejected() {
        assert_eq!(Ray::new(vec![0, 0]).unwrap_err(), Error::ZeroVector);
    }

    #[test]
    fn reflection_is_an_involution() {
        let p = Ray::new(vec![3, 1, -2, 5]).unwrap();
        let r = Ray::new(vec![1, -1, 0, 0]).unwrap();
        let q = p.reflect(&r).unwrap();
        assert_eq!(q.coords(), &[1, 3, -2, 5]);
        assert_eq!(q.reflect(&r).unwrap(), p);
    }

    #[test]
    fn reflection_with_scaled_root_agrees() {
        let p = Ray::new(vec![7, -3, 2]).unwrap();
        let r1 = Ray::new(vec![1, 1, 0]).unwrap();
        let r2 = Ray::new(vec![5, 5, 0]).unwrap();
        assert_eq!(p.reflect(&r1).unwrap(), p.reflect(&r2).unwrap());
    }

    #[test]
    fn combine_is_primitive() {
        let x = Ray::new(vec![1, 1]).unwrap();
        let y = Ray::new(vec![1, -1]).unwrap();
        assert_eq!(Ray::combine(2, &x, 2, &y).unwrap().coords(), &[1, 0]);
    }

    #[test]
    fn parses_common_forms() {
        let a: Ray = "(1,-1,0)".parse().unwrap();
        let b: Ray = "1 -1 0".parse().unwrap();
        assert_eq!(a, b);
        assert!("()".parse::<Ray>().is_err());
        assert!("(1,x)".parse::<Ray>().is_err());
    }

    #[test]
    fn display_round_trips() {
        let a = Ray::new(vec![0, 0, 0, 0, 0, 1, -2, -1]).unwrap();
        let s = a.to_string();
        assert_eq!(s, "(0,0,0,0,0,1,-2,-1)");
        assert_eq!(s.parse::<Ray>().unwrap(), a);
    }
}
