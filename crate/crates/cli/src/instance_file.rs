//! JSON instance files: `{"groups": [[[x, y], ...], ...]}`.
//!
//! Coordinates are JSON integers or strings holding an integer, a decimal
//! or a fraction `p/q`, all parsed exactly. JSON floats are read through
//! their shortest decimal form, so `0.1` means one tenth.

use std::fmt;

use num::ToPrimitive;
use serde::de::{self, DeserializeSeed, Deserializer, SeqAccess, Visitor};
use serde::Deserialize;
use thiserror::Error;
use twolevel_core::{Coord, Instance, Point};

#[derive(Debug, Error)]
pub enum InstanceFileError {
    /// Syntax and content errors alike carry serde_json's line and column.
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Instance(#[from] twolevel_core::Error),
}

/// A parsed file plus the groups in which repeated points were dropped.
#[derive(Clone, Debug)]
pub struct ParsedInstance {
    pub instance: Instance,
    /// `(group index, number of duplicates removed)`.
    pub duplicates: Vec<(usize, usize)>,
}

pub fn parse_instance(text: &str) -> Result<ParsedInstance, InstanceFileError> {
    let raw: RawFile = serde_json::from_str(text)?;
    let duplicates: Vec<(usize, usize)> = raw
        .groups
        .0
        .iter()
        .enumerate()
        .filter_map(|(i, g)| {
            let mut distinct = g.clone();
            distinct.sort();
            distinct.dedup();
            (distinct.len() < g.len()).then_some((i, g.len() - distinct.len()))
        })
        .collect();
    for &(i, n) in &duplicates {
        log::warn!("group {} has {n} repeated point(s); duplicates dropped", i + 1);
    }
    let instance = Instance::new(raw.groups.0)?;
    Ok(ParsedInstance { instance, duplicates })
}

/// Canonical text for a coordinate: a JSON integer when integral, else a
/// string holding the exact decimal if it terminates, else `p/q`.
fn coord_json(c: &Coord) -> String {
    // Integers past i64 would come back through f64, so they stay strings.
    if c.is_integer() && c.numer().to_i64().is_some() {
        c.to_string()
    } else {
        format!("\"{}\"", c.to_terminating_decimal().unwrap_or_else(|| c.to_string()))
    }
}

/// One group per line. `parse_instance(print_instance(i))` yields `i`, and
/// printing that again reproduces the same bytes.
pub fn print_instance(instance: &Instance) -> String {
    let groups: Vec<String> = instance
        .groups()
        .iter()
        .map(|g| {
            let pts: Vec<String> = g.iter().map(|p| format!("[{}, {}]", coord_json(&p.x), coord_json(&p.y))).collect();
            format!("    [{}]", pts.join(", "))
        })
        .collect();
    format!("{{\n  \"groups\": [\n{}\n  ]\n}}\n", groups.join(",\n"))
}

/// Parses `"x,y;x,y;..."`, as accepted by `--connect`.
pub fn parse_point_list(text: &str) -> Result<Vec<Point>, String> {
    text.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|pair| {
            let (x, y) = pair.split_once(',').ok_or_else(|| format!("expected `x,y`, got `{pair}`"))?;
            let parse = |s: &str| s.trim().parse::<Coord>().map_err(|e| e.to_string());
            Ok(Point::new(parse(x)?, parse(y)?))
        })
        .collect()
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    groups: Groups,
}

struct Groups(Vec<Vec<Point>>);

impl<'de> Deserialize<'de> for Groups {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Groups;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a list of groups")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Groups, A::Error> {
                let mut out = Vec::new();
                while let Some(g) = seq.next_element_seed(GroupSeed(out.len()))? {
                    out.push(g);
                }
                if out.is_empty() {
                    return Err(de::Error::custom("no groups"));
                }
                Ok(Groups(out))
            }
        }
        d.deserialize_seq(V)
    }
}

struct GroupSeed(usize);

impl<'de> DeserializeSeed<'de> for GroupSeed {
    type Value = Vec<Point>;

    fn deserialize<D: Deserializer<'de>>(self, d: D) -> Result<Self::Value, D::Error> {
        struct V(usize);
        impl<'de> Visitor<'de> for V {
            type Value = Vec<Point>;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "group {} as a list of [x, y] points", self.0 + 1)
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Vec<Point>, A::Error> {
                let mut out = Vec::new();
                while let Some(RawPoint(p)) = seq.next_element()? {
                    out.push(p);
                }
                if out.is_empty() {
                    return Err(de::Error::custom(format_args!("group {} is empty", self.0 + 1)));
                }
                Ok(out)
            }
        }
        d.deserialize_seq(V(self.0))
    }
}

struct RawPoint(Point);

impl<'de> Deserialize<'de> for RawPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [RawCoord(x), RawCoord(y)] = <[RawCoord; 2]>::deserialize(d)?;
        Ok(RawPoint(Point::new(x, y)))
    }
}

struct RawCoord(Coord);

impl<'de> Deserialize<'de> for RawCoord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = RawCoord;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a coordinate (integer, or string holding a decimal or p/q)")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<RawCoord, E> {
                Ok(RawCoord(Coord::from_int(v)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<RawCoord, E> {
                self.visit_str(&v.to_string())
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<RawCoord, E> {
                if !v.is_finite() {
                    return Err(E::custom("non-finite coordinate"));
                }
                self.visit_str(&format!("{v}"))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<RawCoord, E> {
                v.trim().parse::<Coord>().map(RawCoord).map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}
