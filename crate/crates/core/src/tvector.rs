//! The multiplicity data of an arrangement and the identities it must satisfy.
//!
//! A [`TVector`] records only the number of lines `d` and, for each
//! multiplicity `r >= 2`, the number `t_r` of points where exactly `r` lines
//! meet. Every invariant computed in this crate is a function of these
//! numbers. Whether a t-vector is realized by actual lines is never stored;
//! callers assert it through a [`RealizabilityClass`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Position, Result};

/// Smallest admissible arrangement size.
pub const MIN_LINES: u32 = 3;

/// Combinatorial fingerprint of a line or pseudoline arrangement.
///
/// Canonical form: keys satisfy `2 <= r <= d` and no zero counts are stored,
/// so derived `Eq`/`Hash` coincide with equality of the underlying data.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Deserialize)]
#[serde(try_from = "RawTVector")]
pub struct TVector {
    d: u32,
    t: BTreeMap<u32, u64>,
}

impl TVector {
    /// Builds a canonical t-vector, dropping zero counts.
    pub fn new<I>(d: u32, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u64)>,
    {
        if d < MIN_LINES {
            return Err(Error::InvalidTVector(format!(
                "d = {d} is below the minimum of {MIN_LINES} lines"
            )));
        }
        let mut t = BTreeMap::new();
        for (r, count) in entries {
            if r < 2 {
                return Err(Error::InvalidTVector(format!(
                    "multiplicity r = {r} is below 2"
                )));
            }
            if r > d {
                return Err(Error::InvalidTVector(format!(
                    "multiplicity r = {r} exceeds d = {d}"
                )));
            }
            if count == 0 {
                continue;
            }
            if t.insert(r, count).is_some() {
                return Err(Error::InvalidTVector(format!(
                    "multiplicity r = {r} given twice"
                )));
            }
        }
        Ok(TVector { d, t })
    }

    /// Builds from a dense slice where `dense[i]` is `t_{i+2}`.
    pub fn from_dense(d: u32, dense: &[u64]) -> Result<Self> {
        Self::new(d, dense.iter().enumerate().map(|(i, &c)| (i as u32 + 2, c)))
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// `t_r`, zero when absent or out of range.
    pub fn t(&self, r: u32) -> u64 {
        self.t.get(&r).copied().unwrap_or(0)
    }

    /// Nonzero `(r, t_r)` pairs in ascending `r`.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.t.iter().map(|(&r, &c)| (r, c))
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }

    /// `t_{d-k}`, or zero if `d - k < 2`.
    pub fn t_from_top(&self, k: u32) -> u64 {
        self.d.checked_sub(k).map_or(0, |r| self.t(r))
    }

    /// Number of intersection points, `f0 = sum t_r`.
    pub fn f0(&self) -> u64 {
        self.t.values().sum()
    }

    /// Incidences between points and lines, `f1 = sum r t_r`.
    pub fn f1(&self) -> u64 {
        self.entries().map(|(r, c)| r as u64 * c).sum()
    }

    /// `sum r(r-1) t_r`, the ordered line pairs accounted for by the points.
    pub fn incident_pairs(&self) -> u64 {
        self.entries()
            .map(|(r, c)| (r as u64) * (r as u64 - 1) * c)
            .sum()
    }

    /// Whether `d(d-1) = sum r(r-1) t_r`: every pair of lines meets in exactly
    /// one recorded point.
    pub fn check_identity(&self) -> bool {
        let d = self.d as u64;
        d * (d - 1) == self.incident_pairs()
    }

    /// Largest multiplicity present.
    pub fn max_multiplicity(&self) -> Result<u32> {
        self.t
            .keys()
            .next_back()
            .copied()
            .ok_or(Error::NoIntersectionPoints(self.d))
    }

    /// Counts `t_2 ..= t_d`, zeros included.
    pub fn dense(&self) -> Vec<u64> {
        (2..=self.d).map(|r| self.t(r)).collect()
    }

    /// Compact text form, `d=6;t2=3;t3=4`.
    pub fn to_compact(&self) -> String {
        let mut s = format!("d={}", self.d);
        for (r, c) in self.entries() {
            s.push_str(&format!(";t{r}={c}"));
        }
        s
    }

    /// JSON form, `{"d":6,"t":{"2":3,"3":4}}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("t-vector serialization cannot fail")
    }

    /// Parses either the compact grammar or the JSON object form.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim_start();
        if trimmed.starts_with('{') {
            parse_json(text)
        } else {
            parse_compact(text)
        }
    }
}

impl Ord for TVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.d.cmp(&other.d).then_with(|| {
            let top = self.d.max(other.d);
            (2..=top)
                .map(|r| self.t(r).cmp(&other.t(r)))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialOrd for TVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_compact())
    }
}

impl FromStr for TVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TVector::parse(s)
    }
}

impl Serialize for TVector {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        // Integer keys keep numeric order; serde_json writes them as strings.
        #[derive(Serialize)]
        struct Out<'a> {
            d: u32,
            t: &'a BTreeMap<u32, u64>,
        }
        Out {
            d: self.d,
            t: &self.t,
        }
        .serialize(serializer)
    }
}

/// `{"d": <int>, "t": {"<r>": <int>}}` before validation.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTVector {
    d: i64,
    #[serde(default)]
    t: BTreeMap<String, i64>,
}

impl TryFrom<RawTVector> for TVector {
    type Error = Error;

    fn try_from(raw: RawTVector) -> Result<Self> {
        validate_raw(raw)
    }
}

fn validate_raw(raw: RawTVector) -> Result<TVector> {
    let d = u32::try_from(raw.d)
        .ok()
        .filter(|&d| d >= MIN_LINES)
        .ok_or_else(|| Error::Parse {
            pos: Position::Member("d".into()),
            msg: format!("d = {} must be an integer >= {MIN_LINES}", raw.d),
        })?;
    let mut entries = Vec::with_capacity(raw.t.len());
    for (key, count) in raw.t {
        let pos = Position::Member(format!("t.{key:?}"));
        let r: u32 = key.parse().map_err(|_| Error::Parse {
            pos: pos.clone(),
            msg: format!("multiplicity key {key:?} is not a nonnegative integer"),
        })?;
        check_entry(d, r, count).map_err(|msg| Error::Parse { pos, msg })?;
        entries.push((r, count as u64));
    }
    TVector::new(d, entries)
}

fn check_entry(d: u32, r: u32, count: i64) -> std::result::Result<(), String> {
    if r < 2 {
        return Err(format!("multiplicity r = {r} is below 2"));
    }
    if r > d {
        return Err(format!("multiplicity r = {r} exceeds d = {d}"));
    }
    if count < 0 {
        return Err(format!("t{r} = {count} is negative"));
    }
    Ok(())
}

fn parse_json(text: &str) -> Result<TVector> {
    let raw: RawTVector = serde_json::from_str(text).map_err(|e| Error::Parse {
        pos: Position::LineColumn(e.line(), e.column()),
        msg: e.to_string(),
    })?;
    validate_raw(raw)
}

fn parse_compact(text: &str) -> Result<TVector> {
    let err = |offset: usize, msg: String| Error::Parse {
        pos: Position::Offset(offset),
        msg,
    };

    let mut offset = 0;
    let mut fields = text.split(';');
    let head = fields.next().unwrap_or_default();
    let d_text = head
        .strip_prefix("d=")
        .ok_or_else(|| err(0, "expected `d=<int>`".into()))?;
    let d: i64 = d_text
        .parse()
        .map_err(|_| err(2, format!("`{d_text}` is not an integer")))?;
    if d < MIN_LINES as i64 || d > u32::MAX as i64 {
        return Err(err(2, format!("d = {d} must be an integer >= {MIN_LINES}")));
    }
    let d = d as u32;
    offset += head.len() + 1;

    let mut seen = BTreeMap::new();
    for field in fields {
        let here = offset;
        offset += field.len() + 1;
        let body = field
            .strip_prefix('t')
            .ok_or_else(|| err(here, format!("expected `t<r>=<int>`, found `{field}`")))?;
        let (r_text, count_text) = body
            .split_once('=')
            .ok_or_else(|| err(here, format!("missing `=` in `{field}`")))?;
        let r: u32 = r_text
            .parse()
            .map_err(|_| err(here + 1, format!("`{r_text}` is not a multiplicity")))?;
        let count_at = here + 2 + r_text.len();
        let count: i64 = count_text
            .parse()
            .map_err(|_| err(count_at, format!("`{count_text}` is not an integer")))?;
        check_entry(d, r, count)
            .map_err(|m| err(if count < 0 { count_at } else { here + 1 }, m))?;
        if seen.insert(r, count as u64).is_some() {
            return Err(err(here + 1, format!("multiplicity r = {r} given twice")));
        }
    }
    TVector::new(d, seen)
}

/// The hypothesis a caller asserts about where an arrangement lives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RealizabilityClass {
    /// Pseudolines in the real projective plane.
    Pseudoline,
    /// Straight lines realizable over the reals; also pseudolines.
    RealLine,
    /// Lines over the complex numbers.
    ComplexLine,
}

impl RealizabilityClass {
    /// Whether statements proven for pseudoline arrangements cover this class.
    pub fn is_pseudoline(self) -> bool {
        matches!(self, Self::Pseudoline | Self::RealLine)
    }

    /// Whether the class consists of algebraic lines (real or complex).
    pub fn is_algebraic(self) -> bool {
        matches!(self, Self::RealLine | Self::ComplexLine)
    }

    pub fn short_name(self) -> &'static str {
        match self {
            Self::Pseudoline => "pseudo",
            Self::RealLine => "real",
            Self::ComplexLine => "complex",
        }
    }
}

impl fmt::Display for RealizabilityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for RealizabilityClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pseudo" | "pseudoline" => Ok(Self::Pseudoline),
            "real" | "real_line" => Ok(Self::RealLine),
            "complex" | "complex_line" => Ok(Self::ComplexLine),
            _ => Err(Error::Parse {
                pos: Position::Offset(0),
                msg: format!("unknown class `{s}`; expected real, complex or pseudo"),
            }),
        }
    }
}
