//! Exact rational points, orientation and segment intersection.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact coordinate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coord(pub BigRational);

impl Coord {
    pub fn int(v: i64) -> Coord {
        Coord(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn ratio(p: i64, q: i64) -> Coord {
        Coord(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Parses `-12`, `3.25`, `1e-3` style decimals or `p/q`, exactly.
    pub fn parse(s: &str) -> Result<Coord> {
        let bad = || Error::Parse(format!("not an exact number: {s:?}"));
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            return Ok(Coord(BigRational::new(p, q)));
        }
        let (mant, exp) = match s.find(['e', 'E']) {
            Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
            None => (s, 0),
        };
        let (neg, mant) = match mant.strip_prefix('-') {
            Some(m) => (true, m),
            None => (false, mant.strip_prefix('+').unwrap_or(mant)),
        };
        let (int, frac) = mant.split_once('.').unwrap_or((mant, ""));
        if (int.is_empty() && frac.is_empty()) || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: BigInt = format!("{int}{frac}0").parse().map_err(|_| bad())?;
        let scale = exp - frac.len() as i32 - 1;
        let ten = BigRational::from_integer(BigInt::from(10));
        let mut v = BigRational::from_integer(digits);
        let pow = num_traits::pow(ten, scale.unsigned_abs() as usize);
        if scale >= 0 {
            v *= pow;
        } else {
            v /= pow;
        }
        Ok(Coord(if neg { -v } else { v }))
    }
}

impl fmt::Display for Coord {
    /// Terminating decimals print as decimals, anything else as `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = &self.0;
        let mut d = r.denom().clone();
        let (two, five) = (BigInt::from(2), BigInt::from(5));
        let mut places = 0usize;
        let (mut twos, mut fives) = (0usize, 0usize);
        while (&d % &two).is_zero() {
            d /= &two;
            twos += 1;
        }
        while (&d % &five).is_zero() {
            d /= &five;
            fives += 1;
        }
        if !d.is_one() {
            return write!(f, "{}/{}", r.numer(), r.denom());
        }
        places += twos.max(fives);
        if places == 0 {
            return write!(f, "{}", r.numer());
        }
        let scaled = r * BigRational::from_integer(num_traits::pow(BigInt::from(10), places));
        let digits = scaled.to_integer().abs().to_string();
        let digits = format!("{digits:0>width$}", width = places + 1);
        let (i, frac) = digits.split_at(digits.len() - places);
        let sign = if r.is_negative() { "-" } else { "" };
        write!(f, "{sign}{i}.{frac}")
    }
}

impl fmt::Debug for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Coord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Coord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Coord;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a decimal string or number")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Coord, E> {
                Coord::parse(v).map_err(E::custom)
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Coord, E> {
                Ok(Coord::int(v))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Coord, E> {
                Ok(Coord(BigRational::from_integer(BigInt::from(v))))
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Coord, E> {
                // Shortest round-trip representation, then exact parse.
                Coord::parse(&v.to_string()).map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Point {
    pub x: Coord,
    pub y: Coord,
}

impl Point {
    pub fn new(x: Coord, y: Coord) -> Self {
        Point { x, y }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Point::new(Coord::int(x), Coord::int(y))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

/// Sign of the cross product (b - a) × (c - a).
pub fn orient(a: &Point, b: &Point, c: &Point) -> Ordering {
    let l = (&b.x.0 - &a.x.0) * (&c.y.0 - &a.y.0);
    let r = (&b.y.0 - &a.y.0) * (&c.x.0 - &a.x.0);
    l.cmp(&r)
}

/// `p` lies on the closed segment `ab`.
pub fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    orient(a, b, p) == Ordering::Equal
        && (&a.x).min(&b.x) <= &p.x
        && &p.x <= (&a.x).max(&b.x)
        && (&a.y).min(&b.y) <= &p.y
        && &p.y <= (&a.y).max(&b.y)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SegmentContact {
    None,
    /// Interiors cross at a single point.
    Proper(Point),
    /// Touching, overlapping or meeting at an endpoint.
    Degenerate(Point),
}

pub fn segment_contact(a: &Point, b: &Point, c: &Point, d: &Point) -> SegmentContact {
    let (o1, o2) = (orient(a, b, c), orient(a, b, d));
    let (o3, o4) = (orient(c, d, a), orient(c, d, b));
    use Ordering::Equal;
    if o1 != Equal && o2 != Equal && o3 != Equal && o4 != Equal {
        if o1 != o2 && o3 != o4 {
            return SegmentContact::Proper(line_intersection(a, b, c, d));
        }
        return SegmentContact::None;
    }
    for (s, t, p) in [(a, b, c), (a, b, d), (c, d, a), (c, d, b)] {
        if on_segment(s, t, p) {
            return SegmentContact::Degenerate(p.clone());
        }
    }
    SegmentContact::None
}

fn line_intersection(a: &Point, b: &Point, c: &Point, d: &Point) -> Point {
    let (x1, y1, x2, y2) = (&a.x.0, &a.y.0, &b.x.0, &b.y.0);
    let (x3, y3, x4, y4) = (&c.x.0, &c.y.0, &d.x.0, &d.y.0);
    let den = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4);
    let t = ((x1 - x3) * (y3 - y4) - (y1 - y3) * (x3 - x4)) / den;
    Point::new(Coord(x1 + &t * (x2 - x1)), Coord(y1 + &t * (y2 - y1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_parsing_is_exact() {
        assert_eq!(Coord::parse("0.1").unwrap(), Coord::ratio(1, 10));
        assert_eq!(Coord::parse("-2.50").unwrap(), Coord::ratio(-5, 2));
        assert_eq!(Coord::parse("1e2").unwrap(), Coord::int(100));
        assert_eq!(Coord::parse("3/6").unwrap(), Coord::ratio(1, 2));
        assert_eq!(Coord::parse(".5").unwrap(), Coord::ratio(1, 2));
        assert!(Coord::parse("abc").is_err());
        assert!(Coord::parse("1/0").is_err());
        for s in ["0.125", "-3", "1/3", "-0.05"] {
            assert_eq!(Coord::parse(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn contacts() {
        let p = Point::int;
        assert!(
            matches!(segment_contact(&p(0, 0), &p(2, 2), &p(0, 2), &p(2, 0)), SegmentContact::Proper(q) if q == p(1, 1))
        );
        assert_eq!(
            segment_contact(&p(0, 0), &p(1, 1), &p(2, 0), &p(3, 1)),
            SegmentContact::None
        );
        assert!(matches!(
            segment_contact(&p(0, 0), &p(2, 2), &p(1, 1), &p(2, 0)),
            SegmentContact::Degenerate(_)
        ));
        assert!(matches!(
            segment_contact(&p(0, 0), &p(2, 0), &p(1, 0), &p(3, 0)),
            SegmentContact::Degenerate(_)
        ));
    }
}
