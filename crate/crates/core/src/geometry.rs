//! Exact rational plane geometry for the two dual definitions of the line
//! attached to a pair of circles — the common chord where they meet, the
//! radical axis in every non-concentric position — and for the chord
//! configuration cut from an axis-aligned ellipse by a vertical secant,
//! including the ideal case carried by the supplementary conic.
//!
//! Everything is exact over the rationals. Chord endpoints are represented
//! by a rational midpoint plus a squared half-length, so every identity
//! checked here is an exact equality with no tolerances.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    pub x: BigRational,
    pub y: BigRational,
}

impl Point {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        Point { x, y }
    }

    pub fn from_integers(x: i64, y: i64) -> Self {
        Point {
            x: BigRational::from(BigInt::from(x)),
            y: BigRational::from(BigInt::from(y)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circle {
    center: Point,
    r_squared: BigRational,
}

impl Circle {
    pub fn new(center: Point, r_squared: BigRational) -> Result<Self> {
        if !r_squared.is_positive() {
            return Err(Error::NonpositiveRadius);
        }
        Ok(Circle { center, r_squared })
    }

    pub fn center(&self) -> &Point {
        &self.center
    }

    pub fn r_squared(&self) -> &BigRational {
        &self.r_squared
    }
}

/// |pt − center|² − r², the power of the point with respect to the circle.
pub fn power_of_point(pt: &Point, circle: &Circle) -> BigRational {
    let dx = &pt.x - &circle.center.x;
    let dy = &pt.y - &circle.center.y;
    &dx * &dx + &dy * &dy - &circle.r_squared
}

/// The line ax + by = c with integer coefficients, gcd 1, and the first
/// nonzero of (a, b) positive — so equal lines have equal triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl Line {
    pub fn from_rationals(a: &BigRational, b: &BigRational, c: &BigRational) -> Option<Self> {
        if a.is_zero() && b.is_zero() {
            return None;
        }
        let scale = BigRational::from(
            a.denom()
                .lcm(b.denom())
                .lcm(c.denom()),
        );
        let mut ai = (a * &scale).to_integer();
        let mut bi = (b * &scale).to_integer();
        let mut ci = (c * &scale).to_integer();
        let g = ai.gcd(&bi).gcd(&ci);
        if !g.is_zero() {
            ai /= &g;
            bi /= &g;
            ci /= &g;
        }
        let leading_negative = if !ai.is_zero() {
            ai.is_negative()
        } else {
            bi.is_negative()
        };
        if leading_negative {
            ai = -ai;
            bi = -bi;
            ci = -ci;
        }
        Some(Line { a: ai, b: bi, c: ci })
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn contains(&self, pt: &Point) -> bool {
        let lhs = BigRational::from(self.a.clone()) * &pt.x
            + BigRational::from(self.b.clone()) * &pt.y;
        lhs == BigRational::from(self.c.clone())
    }

    /// Whether the line is perpendicular to the direction (dx, dy); the line
    /// itself runs along (b, −a).
    pub fn perpendicular_to(&self, dx: &BigRational, dy: &BigRational) -> bool {
        (BigRational::from(self.b.clone()) * dx - BigRational::from(self.a.clone()) * dy)
            .is_zero()
    }
}

impl std::fmt::Display for Line {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}x + {}y = {}", self.a, self.b, self.c)
    }
}

/// The permanent definition: the locus of equal power with respect to both
/// circles. Exists for every non-concentric pair, intersecting or not.
pub fn radical_axis(c1: &Circle, c2: &Circle) -> Result<Line> {
    if c1.center == c2.center {
        return Err(Error::ConcentricCircles);
    }
    let two = BigRational::from(BigInt::from(2));
    let a = &two * (&c2.center.x - &c1.center.x);
    let b = &two * (&c2.center.y - &c1.center.y);
    let sq = |p: &Point| &p.x * &p.x + &p.y * &p.y;
    let c = (sq(&c2.center) - &c2.r_squared) - (sq(&c1.center) - &c1.r_squared);
    Line::from_rationals(&a, &b, &c).ok_or(Error::ConcentricCircles)
}

/// A pair of real intersection points: the chord line, the foot of the
/// center line on it, and the squared half-distance from the foot to either
/// endpoint (the endpoints themselves may need a square root).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommonChord {
    pub line: Line,
    pub foot: Point,
    pub half_distance_sq: BigRational,
}

/// The contingent definition: present exactly when the circles meet in two
/// real points (decided exactly over the rationals). Tangency is the
/// excluded particular case and yields `None`.
pub fn common_chord_line(c1: &Circle, c2: &Circle) -> Result<Option<CommonChord>> {
    let line = radical_axis(c1, c2)?;
    let dx = &c2.center.x - &c1.center.x;
    let dy = &c2.center.y - &c1.center.y;
    let d_sq = &dx * &dx + &dy * &dy;
    let delta = &d_sq + &c1.r_squared - &c2.r_squared;
    let four = BigRational::from(BigInt::from(4));
    let disc = &four * &d_sq * &c1.r_squared - &delta * &delta;
    if !disc.is_positive() {
        return Ok(None);
    }
    let s = &delta / (&BigRational::from(BigInt::from(2)) * &d_sq);
    let foot = Point::new(&c1.center.x + &s * &dx, &c1.center.y + &s * &dy);
    let half_distance_sq = &disc / (&four * &d_sq);
    Ok(Some(CommonChord {
        line,
        foot,
        half_distance_sq,
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChordKind {
    Real,
    Ideal,
    Tangent,
}

impl ChordKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ChordKind::Real => "real",
            ChordKind::Ideal => "ideal",
            ChordKind::Tangent => "tangent",
        }
    }
}

/// The chord cut from the ellipse x²/a² + y²/b² = 1 by the vertical secant
/// x = x0, together with the points A = (−a,0), B = (a,0), O = (x0,0) and
/// O' = (a²/x0, 0) on the conjugate diameter.
///
/// For |x0| > a the secant misses the ellipse and the chord is ideal: its
/// representative endpoints (x0, ±√halfChordSq) lie on the supplementary
/// conic x²/a² − y²/b² = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordConfiguration {
    a_axis: BigRational,
    b_axis: BigRational,
    x0: BigRational,
    kind: ChordKind,
    half_chord_sq: BigRational,
    o_prime: BigRational,
}

/// Builds the configuration for semi-axes a, b > 0 and a nonzero secant
/// abscissa x0 (x0 = 0 would put O at the center, where O' is undefined).
pub fn chord_configuration(
    a_axis: &BigRational,
    b_axis: &BigRational,
    x0: &BigRational,
) -> Result<ChordConfiguration> {
    if !a_axis.is_positive() || !b_axis.is_positive() {
        return Err(Error::NonpositiveAxis);
    }
    if x0.is_zero() {
        return Err(Error::ZeroAbscissa);
    }
    let abs_x0 = x0.abs();
    let kind = match abs_x0.cmp(a_axis) {
        std::cmp::Ordering::Less => ChordKind::Real,
        std::cmp::Ordering::Greater => ChordKind::Ideal,
        std::cmp::Ordering::Equal => ChordKind::Tangent,
    };
    let kappa = (b_axis * b_axis) / (a_axis * a_axis);
    let half_chord_sq = (&kappa * (a_axis * a_axis - x0 * x0)).abs();
    let o_prime = (a_axis * a_axis) / x0;
    Ok(ChordConfiguration {
        a_axis: a_axis.clone(),
        b_axis: b_axis.clone(),
        x0: x0.clone(),
        kind,
        half_chord_sq,
        o_prime,
    })
}

impl ChordConfiguration {
    pub fn kind(&self) -> ChordKind {
        self.kind
    }

    pub fn half_chord_sq(&self) -> &BigRational {
        &self.half_chord_sq
    }

    /// κ = b²/a², the section constant of the vertical direction.
    pub fn section_constant(&self) -> BigRational {
        (&self.b_axis * &self.b_axis) / (&self.a_axis * &self.a_axis)
    }

    pub fn a_point(&self) -> Point {
        Point::new(-self.a_axis.clone(), BigRational::zero())
    }

    pub fn b_point(&self) -> Point {
        Point::new(self.a_axis.clone(), BigRational::zero())
    }

    pub fn o_point(&self) -> Point {
        Point::new(self.x0.clone(), BigRational::zero())
    }

    pub fn o_prime_point(&self) -> Point {
        Point::new(self.o_prime.clone(), BigRational::zero())
    }

    /// Exact endpoint identity on the carrying conic: real chord endpoints
    /// lie on the ellipse, ideal representative endpoints on the
    /// supplementary conic, tangent contact collapses to a point.
    pub fn endpoints_on_carrier_conic(&self) -> bool {
        let a2 = &self.a_axis * &self.a_axis;
        let b2 = &self.b_axis * &self.b_axis;
        let xterm = (&self.x0 * &self.x0) / &a2;
        let yterm = &self.half_chord_sq / &b2;
        match self.kind {
            ChordKind::Real => xterm + yterm == BigRational::one(),
            ChordKind::Ideal => xterm - yterm == BigRational::one(),
            ChordKind::Tangent => self.half_chord_sq.is_zero() && xterm.is_one(),
        }
    }
}

/// The section relation O'A/O'B = OA/OB, checked exactly by
/// cross-multiplication of absolute lengths. True for every non-tangent
/// configuration; a `false` return signals an implementation bug.
pub fn verify_section_relation(cfg: &ChordConfiguration) -> Result<bool> {
    if cfg.kind == ChordKind::Tangent {
        return Err(Error::TangentConfiguration);
    }
    let a = &cfg.a_axis;
    let o = &cfg.x0;
    let op = &cfg.o_prime;
    let oa = (o + a).abs();
    let ob = (o - a).abs();
    let opa = (op + a).abs();
    let opb = (op - a).abs();
    Ok(opa * ob == opb * oa)
}

/// The half-chord power relation OM² = κ·OA·OB in absolute value, exact for
/// every kind including tangency (0 = κ·0).
pub fn verify_chord_power_relation(cfg: &ChordConfiguration) -> bool {
    let a = &cfg.a_axis;
    let o = &cfg.x0;
    let oa_ob = ((o + a) * (o - a)).abs();
    cfg.half_chord_sq == cfg.section_constant() * oa_ob
}
