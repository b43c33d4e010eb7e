use crate::error::{Error, Result};
use crate::vector::Ray;
use num_rational::Ratio;
use num_traits::Signed;
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;

/// An exact cosine value: a sign together with the rational square of the
/// value.
///
/// Every cosine arising between rays is of the form `±sqrt(p/q)` with
/// `0 ≤ p/q ≤ 1`, so this representation is closed under the products and
/// negations used by spherical trigonometry on a Coxeter complex, and it
/// admits a decidable total order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Cos {
    sign: i8,
    square: Ratio<i128>,
}

impl Cos {
    /// Builds a cosine from a sign and the (nonnegative) square of its value.
    pub fn from_sign_square(sign: i8, square: Ratio<i128>) -> Result<Self> {
        if square.is_negative() || square > Ratio::from_integer(1) {
            return Err(Error::InvalidArgument(format!(
                "cosine square {square} outside [0,1]"
            )));
        }
        let sign = if square == Ratio::from_integer(0) {
            0
        } else {
            match sign.cmp(&0) {
                Ordering::Less => -1,
                Ordering::Equal => {
                    return Err(Error::InvalidArgument(
                        "sign 0 with nonzero square".into(),
                    ))
                }
                Ordering::Greater => 1,
            }
        };
        Ok(Cos { sign, square })
    }

    /// The exact cosine of the angle between two rays.
    pub fn between(x: &Ray, y: &Ray) -> Result<Self> {
        let d = x.dot(y)?;
        let sq = Ratio::new(d * d, x.norm_sq() * y.norm_sq());
        Cos::from_sign_square(d.signum() as i8, sq)
    }

    /// Cosine `+1` (angle 0).
    pub fn one() -> Self {
        Cos { sign: 1, square: Ratio::from_integer(1) }
    }

    /// Cosine `−1` (angle π).
    pub fn minus_one() -> Self {
        Cos { sign: -1, square: Ratio::from_integer(1) }
    }

    /// Cosine `0` (angle π/2).
    pub fn zero() -> Self {
        Cos { sign: 0, square: Ratio::from_integer(0) }
    }

    /// Exact rational cosine `n/d`.
    pub fn rational(n: i128, d: i128) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        let r = Ratio::new(n, d);
        Cos::from_sign_square(if r.is_negative() { -1 } else { 1 }, &r * &r)
    }

    /// The sign of the value: −1, 0, or +1.
    pub fn sign(&self) -> i8 {
        self.sign
    }

    /// The square of the value, in lowest terms.
    pub fn square(&self) -> Ratio<i128> {
        self.square
    }

    /// Negation (cos θ ↦ cos(π−θ)).
    pub fn neg(&self) -> Self {
        Cos { sign: -self.sign, square: self.square }
    }

    /// Exact product of two cosines.
    pub fn mul(&self, other: &Cos) -> Self {
        let square = self.square * other.square;
        Cos { sign: self.sign * other.sign, square }
    }

    /// Floating-point value, for cross-check harnesses only.
    pub fn value_f64(&self) -> f64 {
        let s = (*self.square.numer() as f64) / (*self.square.denom() as f64);
        f64::from(self.sign) * s.sqrt()
    }

    /// Angle in radians, for cross-check harnesses only.
    pub fn angle_f64(&self) -> f64 {
        self.value_f64().clamp(-1.0, 1.0).acos()
    }

    /// Signed-square key whose order agrees with the order of the values.
    fn signed_square(&self) -> Ratio<i128> {
        if self.sign < 0 {
            -self.square
        } else if self.sign > 0 {
            self.square
        } else {
            Ratio::from_integer(0)
        }
    }

    /// Canonical angle string.
    ///
    /// Fractions of π are used when the cosine lies in
    /// `{0, ±1, ±1/2, ±√2/2, ±√3/2}`; every other value is rendered as
    /// `arccos(...)` with a canonical radical form, e.g. `arccos(-1/(2*sqrt(3)))`.
    pub fn angle_str(&self) -> String {
        let one = Ratio::from_integer(1);
        if self.sign == 0 {
            return "pi/2".into();
        }
        if self.square == one {
            return if self.sign > 0 { "0".into() } else { "pi".into() };
        }
        if self.square == Ratio::new(1, 4) {
            return if self.sign > 0 { "pi/3".into() } else { "2pi/3".into() };
        }
        if self.square == Ratio::new(1, 2) {
            return if self.sign > 0 { "pi/4".into() } else { "3pi/4".into() };
        }
        if self.square == Ratio::new(3, 4) {
            return if self.sign > 0 { "pi/6".into() } else { "5pi/6".into() };
        }
        let inner = render_radical(self.square);
        if self.sign > 0 {
            format!("arccos({inner})")
        } else {
            format!("arccos(-{inner})")
        }
    }

    /// Canonical value string: `0`, `±1`, `±1/2`, rationals as `p/q`, and
    /// `±sqrt(p/q)` otherwise.
    pub fn cos_str(&self) -> String {
        if self.sign == 0 {
            return "0".into();
        }
        let sgn = if self.sign < 0 { "-" } else { "" };
        let (p, q) = (*self.square.numer(), *self.square.denom());
        let (sp, sq) = (integer_sqrt(p), integer_sqrt(q));
        if let (Some(a), Some(b)) = (sp, sq) {
            if b == 1 {
                format!("{sgn}{a}")
            } else {
                format!("{sgn}{a}/{b}")
            }
        } else {
            format!("{sgn}sqrt({p}/{q})")
        }
    }

    /// Parses a canonical angle string back into a cosine.
    pub fn parse_angle(s: &str) -> Result<Self> {
        parse_angle_str(s)
    }
}

impl Ord for Cos {
    fn cmp(&self, other: &Self) -> Ordering {
        self.signed_square().cmp(&other.signed_square())
    }
}

impl PartialOrd for Cos {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.angle_str())
    }
}

impl Serialize for Cos {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.angle_str())
    }
}

impl<'de> Deserialize<'de> for Cos {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Cos::parse_angle(&s).map_err(|e| D::Error::custom(format!("{e}: {s:?}")))
    }
}

/// Integer square root if `n` is a perfect square.
pub(crate) fn integer_sqrt(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let r = (n as u128).isqrt() as i128;
    (r * r == n).then_some(r)
}

/// Splits `n = a² · n₀` with `n₀` squarefree, returning `(a, n₀)`.
fn squarefree_decompose(mut n: i128) -> (i128, i128) {
    debug_assert!(n > 0);
    let mut a = 1;
    let mut d = 2;
    while d * d <= n {
        while n % (d * d) == 0 {
            n /= d * d;
            a *= d;
        }
        d += 1;
    }
    (a, n)
}

/// Renders `sqrt(p/q)` (0 < p/q < 1, lowest terms) canonically:
/// `a/b`, `a/sqrt(q₀)`, `a/(b*sqrt(q₀))`, `sqrt(p₀)*a/b`-style, or the
/// combined single-radical form `a*sqrt(p₀q₀)/(b·q₀)`.
fn render_radical(square: Ratio<i128>) -> String {
    let (p, q) = (*square.numer(), *square.denom());
    let (a, p0) = squarefree_decompose(p);
    let (b, q0) = squarefree_decompose(q);
    match (p0 == 1, q0 == 1) {
        (true, true) => format!("{a}/{b}"),
        (true, false) => {
            if b == 1 {
                format!("{a}/sqrt({q0})")
            } else {
                format!("{a}/({b}*sqrt({q0}))")
            }
        }
        (false, true) => {
            let num = if a == 1 {
                format!("sqrt({p0})")
            } else {
                format!("{a}*sqrt({p0})")
            };
            if b == 1 {
                num
            } else {
                format!("{num}/{b}")
            }
        }
        (false, false) => {
            // a·sqrt(p0)/(b·sqrt(q0)) = a·sqrt(p0·q0)/(b·q0)
            let rad = p0 * q0;
            let den = b * q0;
            let num = if a == 1 {
                format!("sqrt({rad})")
            } else {
                format!("{a}*sqrt({rad})")
            };
            if den == 1 {
                num
            } else {
                format!("{num}/{den}")
            }
        }
    }
}

fn parse_angle_str(s: &str) -> Result<Cos> {
    let s = s.trim();
    match s {
        "0" => return Ok(Cos::one()),
        "pi" => return Ok(Cos::minus_one()),
        "pi/2" => return Ok(Cos::zero()),
        "pi/3" => return Cos::from_sign_square(1, Ratio::new(1, 4)),
        "2pi/3" => return Cos::from_sign_square(-1, Ratio::new(1, 4)),
        "pi/4" => return Cos::from_sign_square(1, Ratio::new(1, 2)),
        "3pi/4" => return Cos::from_sign_square(-1, Ratio::new(1, 2)),
        "pi/6" => return Cos::from_sign_square(1, Ratio::new(3, 4)),
        "5pi/6" => return Cos::from_sign_square(-1, Ratio::new(3, 4)),
        _ => {}
    }
    let inner = s
        .strip_prefix("arccos(")
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("unrecognized angle {s:?}")))?;
    let (sign, body) = match inner.strip_prefix('-') {
        Some(rest) => (-1i8, rest),
        None => (1i8, inner),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, d),
        None => (body, "1"),
    };
    let den = if den.starts_with('(') && den.ends_with(')') {
        &den[1..den.len() - 1]
    } else {
        den
    };
    let num_sq = parse_radical_product(num)?;
    let den_sq = parse_radical_product(den)?;
    if den_sq == 0 {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Cos::from_sign_square(sign, Ratio::new(num_sq, den_sq))
}

/// Parses a factor string like `3`, `sqrt(2)`, or `2*sqrt(3)` and returns the
/// square of its value.
fn parse_radical_product(s: &str) -> Result<i128> {
    let mut square: i128 = 1;
    for factor in s.split('*') {
        let factor = factor.trim();
        if let Some(r) = factor.strip_prefix("sqrt(").and_then(|t| t.strip_suffix(')')) {
            let v: i128 = r
                .parse()
                .map_err(|_| Error::Parse(format!("bad radicand {r:?}")))?;
            square = square
                .checked_mul(v)
                .ok_or(Error::Overflow)?;
        } else {
            let v: i128 = factor
                .parse()
                .map_err(|_| Error::Parse(format!("bad factor {factor:?}")))?;
            square = square
                .checked_mul(v.checked_mul(v).ok_or(Error::Overflow)?)
                .ok_or(Error::Overflow)?;
        }
    }
    Ok(square)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(sign: i8, p: i128, q: i128) -> Cos {
        Cos::from_sign_square(sign, Ratio::new(p, q)).unwrap()
    }

    #[test]
    fn between_matches_hand_values() {
        // Two rays at right angles.
        let x = Ray::new(vec![1, 1, 0]).unwrap();
        let y = Ray::new(vec![1, -1, 0]).unwrap();
        assert_eq!(Cos::between(&x, &y).unwrap(), Cos::zero());
        // cos = -1 for antipodes.
        assert_eq!(Cos::between(&x, &x.antipode()).unwrap(), Cos::minus_one());
        // A scaled copy gives cos = +1.
        let z = Ray::new(vec![2, 2, 0]).unwrap();
        assert_eq!(Cos::between(&x, &z).unwrap(), Cos::one());
    }

    #[test]
    fn order_is_by_signed_value() {
        let vals = [
            Cos::minus_one(),
            c(-1, 3, 4),
            c(-1, 1, 2),
            c(-1, 1, 4),
            c(-1, 1, 8),
            Cos::zero(),
            c(1, 1, 12),
            c(1, 1, 4),
            c(1, 9, 16),
            Cos::one(),
        ];
        for w in vals.windows(2) {
            assert!(w[0] < w[1], "{} !< {}", w[0], w[1]);
        }
    }

    #[test]
    fn canonical_angle_strings() {
        assert_eq!(Cos::one().angle_str(), "0");
        assert_eq!(Cos::minus_one().angle_str(), "pi");
        assert_eq!(Cos::zero().angle_str(), "pi/2");
        assert_eq!(c(1, 1, 4).angle_str(), "pi/3");
        assert_eq!(c(-1, 1, 4).angle_str(), "2pi/3");
        assert_eq!(c(1, 1, 2).angle_str(), "pi/4");
        assert_eq!(c(-1, 1, 2).angle_str(), "3pi/4");
        assert_eq!(c(-1, 3, 4).angle_str(), "5pi/6");
        assert_eq!(c(1, 1, 16).angle_str(), "arccos(1/4)");
        assert_eq!(c(-1, 9, 16).angle_str(), "arccos(-3/4)");
        assert_eq!(c(-1, 1, 36).angle_str(), "arccos(-1/6)");
        assert_eq!(c(-1, 1, 8).angle_str(), "arccos(-1/(2*sqrt(2)))");
        assert_eq!(c(-1, 1, 12).angle_str(), "arccos(-1/(2*sqrt(3)))");
        assert_eq!(c(1, 1, 3).angle_str(), "arccos(1/sqrt(3))");
        assert_eq!(c(1, 1, 5).angle_str(), "arccos(1/sqrt(5))");
        assert_eq!(c(-1, 25, 64).angle_str(), "arccos(-5/8)");
    }

    #[test]
    fn parse_inverts_render() {
        let menu = [
            Cos::one(),
            Cos::minus_one(),
            Cos::zero(),
            c(1, 1, 4),
            c(-1, 1, 4),
            c(1, 1, 2),
            c(-1, 1, 2),
            c(1, 3, 4),
            c(-1, 3, 4),
            c(1, 1, 16),
            c(-1, 9, 16),
            c(-1, 1, 8),
            c(-1, 1, 12),
            c(1, 1, 3),
            c(-1, 4, 9),
            c(-1, 1, 36),
            c(-1, 25, 36),
            c(1, 9, 25),
            c(-1, 2, 3),
            c(1, 5, 8),
            c(-1, 3, 5),
        ];
        for v in menu {
            let s = v.angle_str();
            assert_eq!(Cos::parse_angle(&s).unwrap(), v, "round-trip of {s}");
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Cos::parse_angle("arccos(2)").is_err()); // square > 1
        assert!(Cos::parse_angle("pi/7").is_err());
        assert!(Cos::parse_angle("arccos(1/0)").is_err());
        assert!(Cos::parse_angle("cos(1/2)").is_err());
    }

    #[test]
    fn product_and_negation() {
        let a = c(-1, 1, 3); // -1/sqrt(3)
        let b = c(1, 3, 4); // sqrt(3)/2
        assert_eq!(a.mul(&b), c(-1, 1, 4)); // -1/2
        assert_eq!(a.neg(), c(1, 1, 3));
    }

    #[test]
    fn cos_str_forms() {
        assert_eq!(Cos::zero().cos_str(), "0");
        assert_eq!(Cos::one().cos_str(), "1");
        assert_eq!(Cos::minus_one().cos_str(), "-1");
        assert_eq!(c(-1, 1, 4).cos_str(), "-1/2");
        assert_eq!(c(1, 9, 16).cos_str(), "3/4");
        assert_eq!(c(-1, 1, 8).cos_str(), "-sqrt(1/8)");
    }
}
