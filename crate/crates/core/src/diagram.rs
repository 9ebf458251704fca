//! Knot diagrams as crossing/arc incidence, the pretzel diagram generator and
//! Reidemeister I/II surgery.
//!
//! A diagram with `n` crossings has `n` arcs. Crossing `c` records the arc
//! passing over it and the two arcs that end and begin underneath it. After
//! [`KnotDiagram::canonical`] the arc beginning under crossing `c` has id `c`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub over: usize,
    pub under_in: usize,
    pub under_out: usize,
}

impl Crossing {
    pub fn new(over: usize, under_in: usize, under_out: usize) -> Self {
        Self {
            over,
            under_in,
            under_out,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct KnotDiagram {
    crossings: Vec<Crossing>,
}

/// Checks the incidence invariants: arc ids in range, every arc begins under
/// exactly one crossing and ends under exactly one crossing.
pub fn validate_crossings(crossings: &[Crossing]) -> Result<()> {
    let n = crossings.len();
    let mut starts = vec![None; n];
    let mut ends = vec![None; n];
    for (c, x) in crossings.iter().enumerate() {
        for (role, arc) in [
            ("over", x.over),
            ("under_in", x.under_in),
            ("under_out", x.under_out),
        ] {
            if arc >= n {
                return Err(Error::InvalidDiagram(format!(
                    "crossing {c}: {role} arc {arc} out of range for {n} arcs"
                )));
            }
        }
        if let Some(prev) = starts[x.under_out].replace(c) {
            return Err(Error::InvalidDiagram(format!(
                "arc {} is under_out of crossings {prev} and {c}",
                x.under_out
            )));
        }
        if let Some(prev) = ends[x.under_in].replace(c) {
            return Err(Error::InvalidDiagram(format!(
                "arc {} is under_in of crossings {prev} and {c}",
                x.under_in
            )));
        }
    }
    Ok(())
}

impl KnotDiagram {
    pub fn new(crossings: Vec<Crossing>) -> Result<Self> {
        validate_crossings(&crossings)?;
        Ok(Self { crossings })
    }

    /// The crossingless diagram.
    pub fn unknot() -> Self {
        Self::default()
    }

    /// Standard 3-crossing trefoil, the pretzel closure `P(1,1,1)`.
    pub fn trefoil() -> Self {
        pretzel_diagram(&PretzelSpec::new(vec![1, 1, 1]).expect("valid spec"))
            .expect("trefoil diagram")
    }

    pub fn validate(&self) -> Result<()> {
        validate_crossings(&self.crossings)
    }

    pub fn n(&self) -> usize {
        self.crossings.len()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    fn check_arc(&self, arc: usize) -> Result<()> {
        if arc >= self.n() {
            return Err(Error::InvalidDiagram(format!(
                "arc {arc} does not exist in a diagram with {} arcs",
                self.n()
            )));
        }
        Ok(())
    }

    /// Crossing under which `arc` ends.
    fn end_of(&self, arc: usize) -> usize {
        self.crossings
            .iter()
            .position(|x| x.under_in == arc)
            .expect("validated diagram")
    }

    /// Number of link components, read off as cycles of the successor map
    /// `arc -> arc beginning where it ends`.
    pub fn component_count(&self) -> usize {
        let n = self.n();
        let mut next = vec![0; n];
        for x in &self.crossings {
            next[x.under_in] = x.under_out;
        }
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut a = start;
            while !seen[a] {
                seen[a] = true;
                a = next[a];
            }
        }
        count
    }

    /// Relabels arcs so that the arc beginning under crossing `c` is `c`.
    pub fn canonical(&self) -> Self {
        let mut rename = vec![0; self.n()];
        for (c, x) in self.crossings.iter().enumerate() {
            rename[x.under_out] = c;
        }
        let crossings = self
            .crossings
            .iter()
            .map(|x| Crossing::new(rename[x.over], rename[x.under_in], rename[x.under_out]))
            .collect();
        Self { crossings }
    }

    pub fn is_canonical(&self) -> bool {
        self.crossings
            .iter()
            .enumerate()
            .all(|(c, x)| x.under_out == c)
    }

    /// Reidemeister I: a kink at the end of `arc`. The new crossing has the new
    /// arc `a'` both over and outgoing, so its equation is `a + a' - 2a' = 0`.
    pub fn reidemeister_one_insert(&self, arc: usize) -> Result<Self> {
        self.check_arc(arc)?;
        let end = self.end_of(arc);
        let fresh = self.n();
        let mut crossings = self.crossings.clone();
        crossings[end].under_in = fresh;
        crossings.push(Crossing::new(fresh, arc, fresh));
        let d = Self { crossings }.canonical();
        debug_assert!(d.validate().is_ok());
        Ok(d)
    }

    /// Reidemeister II: the end of `arc_a` is pushed under `arc_b`, creating
    /// arcs `a1'`, `a2'` with `a + a1' = 2b` and `a1' + a2' = 2b`.
    pub fn reidemeister_two_insert(&self, arc_a: usize, arc_b: usize) -> Result<Self> {
        self.check_arc(arc_a)?;
        self.check_arc(arc_b)?;
        if arc_a == arc_b {
            return Err(Error::InvalidDiagram(format!(
                "Reidemeister II needs two distinct arcs, got {arc_a} twice"
            )));
        }
        let end = self.end_of(arc_a);
        let (a1, a2) = (self.n(), self.n() + 1);
        let mut crossings = self.crossings.clone();
        crossings[end].under_in = a2;
        crossings.push(Crossing::new(arc_b, arc_a, a1));
        crossings.push(Crossing::new(arc_b, a1, a2));
        let d = Self { crossings }.canonical();
        debug_assert!(d.validate().is_ok());
        Ok(d)
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramWire {
    n: usize,
    crossings: Vec<Crossing>,
}

impl Serialize for KnotDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramWire {
            n: self.n(),
            crossings: self.crossings.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for KnotDiagram {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = DiagramWire::deserialize(d)?;
        if w.n != w.crossings.len() {
            return Err(serde::de::Error::custom(format!(
                "n = {} but {} crossings listed",
                w.n,
                w.crossings.len()
            )));
        }
        KnotDiagram::new(w.crossings).map_err(serde::de::Error::custom)
    }
}

/// Colors emerging from the crossings of an `n`-twist whose top strands carry
/// `a` (left) and `b` (right): `b + i(b - a)` for `i = 1..=n`.
pub fn twist_propagate(a: &BigInt, b: &BigInt, n: usize) -> Vec<BigInt> {
    let step = b - a;
    (1..=n).map(|i| b + BigInt::from(i) * &step).collect()
}

/// Tassel description `P(n1, ..., nN)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PretzelSpec {
    tassels: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    AllOdd,
    /// Exactly one even tassel, at this position.
    OneEven(usize),
    Other,
}

impl PretzelSpec {
    pub fn new(tassels: Vec<i64>) -> Result<Self> {
        if tassels.is_empty() {
            return Err(Error::InvalidSpec(
                "a pretzel needs at least one tassel".into(),
            ));
        }
        Ok(Self { tassels })
    }

    pub fn tassels(&self) -> &[i64] {
        &self.tassels
    }

    pub fn len(&self) -> usize {
        self.tassels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tassels.is_empty()
    }

    pub fn crossing_count(&self) -> u64 {
        self.tassels.iter().map(|n| n.unsigned_abs()).sum()
    }

    pub fn parity(&self) -> Parity {
        let evens: Vec<usize> = (0..self.len())
            .filter(|&k| self.tassels[k] % 2 == 0)
            .collect();
        match evens.as_slice() {
            [] => Parity::AllOdd,
            [k] => Parity::OneEven(*k),
            _ => Parity::Other,
        }
    }
}

impl fmt::Display for PretzelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.tassels.iter().map(ToString::to_string).collect();
        write!(f, "P({})", parts.join(","))
    }
}

/// Parses the comma-separated body of `NAME(...)` after checking the prefix.
pub(crate) fn parse_call<'a>(s: &'a str, name: &str) -> Result<&'a str> {
    let t = s.trim();
    t.strip_prefix(name)
        .map(str::trim_start)
        .and_then(|r| r.strip_prefix('('))
        .and_then(|r| r.trim_end().strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected {name}(...), got {s:?}")))
}

pub(crate) fn parse_int_list<T: FromStr>(body: &str) -> Result<Vec<T>> {
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("not an integer: {:?}", x.trim())))
        })
        .collect()
}

impl FromStr for PretzelSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_int_list(parse_call(s, "P")?)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Port {
    UnderTop(usize),
    UnderBottom(usize),
    OverTop(usize),
    OverBottom(usize),
    TopLeft(usize),
    TopRight(usize),
    BottomLeft(usize),
    BottomRight(usize),
}

/// Diagram of `P(n1, ..., nN)` with every `n_k >= 1` and `N >= 2`.
///
/// Within a tassel the strand `E_j` starts under crossing `j` (or at the
/// top-left/top-right boundary for `j = -1, 0`), passes over crossing `j + 1`
/// and ends under crossing `j + 2`, or at the bottom boundary when those
/// crossings do not exist. Adjacent tassels are joined along top and bottom,
/// cyclically.
pub fn pretzel_diagram(spec: &PretzelSpec) -> Result<KnotDiagram> {
    let tassels = spec.tassels();
    if tassels.len() < 2 {
        return Err(Error::InvalidSpec(format!(
            "the diagram generator needs at least 2 tassels, got {spec}"
        )));
    }
    if let Some(bad) = tassels.iter().find(|&&n| n < 1) {
        return Err(Error::InvalidSpec(format!(
            "the diagram generator needs positive tassels, got {bad} in {spec}"
        )));
    }
    let total: usize = tassels.iter().map(|&n| n as usize).sum();
    let mut wire: HashMap<Port, Port> = HashMap::new();
    let mut connect = |a: Port, b: Port| {
        wire.insert(a, b);
        wire.insert(b, a);
    };
    let mut offset = 0;
    for (k, &nk) in tassels.iter().enumerate() {
        let n = nk;
        let c = |j: i64| offset + (j - 1) as usize;
        for j in -1..=n {
            let mut at = match j {
                -1 => Port::TopLeft(k),
                0 => Port::TopRight(k),
                _ => Port::UnderBottom(c(j)),
            };
            if (1..=n).contains(&(j + 1)) {
                connect(at, Port::OverTop(c(j + 1)));
                at = Port::OverBottom(c(j + 1));
            }
            let end = if j + 2 <= n {
                Port::UnderTop(c(j + 2))
            } else if j == n - 1 {
                Port::BottomLeft(k)
            } else {
                Port::BottomRight(k)
            };
            connect(at, end);
        }
        offset += nk as usize;
    }
    let count = tassels.len();
    let through = |p: Port| match p {
        Port::UnderTop(c) => Port::UnderBottom(c),
        Port::UnderBottom(c) => Port::UnderTop(c),
        Port::OverTop(c) => Port::OverBottom(c),
        Port::OverBottom(c) => Port::OverTop(c),
        Port::TopLeft(k) => Port::TopRight((k + count - 1) % count),
        Port::TopRight(k) => Port::TopLeft((k + 1) % count),
        Port::BottomLeft(k) => Port::BottomRight((k + count - 1) % count),
        Port::BottomRight(k) => Port::BottomLeft((k + 1) % count),
    };

    let mut over = vec![None; total];
    let mut under_in = vec![None; total];
    let mut visited = vec![false; total];
    for start in 0..total {
        if visited[start] {
            continue;
        }
        visited[start] = true;
        let mut arc = start;
        let mut exit = Port::UnderBottom(start);
        loop {
            let entry = wire[&exit];
            match entry {
                Port::UnderTop(d) | Port::UnderBottom(d) => {
                    under_in[d] = Some(arc);
                    if d == start {
                        break;
                    }
                    visited[d] = true;
                    arc = d;
                }
                Port::OverTop(d) | Port::OverBottom(d) => over[d] = Some(arc),
                _ => {}
            }
            exit = through(entry);
        }
    }
    let crossings = (0..total)
        .map(|c| match (over[c], under_in[c]) {
            (Some(o), Some(i)) => Ok(Crossing::new(o, i, c)),
            _ => Err(Error::InvalidDiagram(format!(
                "{spec} has a component without undercrossings"
            ))),
        })
        .collect::<Result<Vec<_>>>()?;
    let d = KnotDiagram::new(crossings)?;
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(o: usize, i: usize, u: usize) -> Crossing {
        Crossing::new(o, i, u)
    }

    #[test]
    fn validation() {
        let trefoil = vec![x(2, 0, 1), x(0, 1, 2), x(1, 2, 0)];
        assert!(validate_crossings(&trefoil).is_ok());
        let twice_out = vec![x(2, 0, 1), x(0, 1, 1), x(1, 2, 0)];
        assert!(validate_crossings(&twice_out).is_err());
        let out_of_range = vec![x(3, 0, 1), x(0, 1, 2), x(1, 2, 0)];
        assert!(validate_crossings(&out_of_range).is_err());
        assert!(validate_crossings(&[]).is_ok());
        assert!(KnotDiagram::unknot().validate().is_ok());
    }

    #[test]
    fn twists() {
        let v = |a: i64, b: i64, n| -> Vec<i64> {
            twist_propagate(&a.into(), &b.into(), n)
                .iter()
                .map(|c| i64::try_from(c).unwrap())
                .collect()
        };
        assert_eq!(v(0, 1, 3), vec![2, 3, 4]);
        assert_eq!(v(4, 4, 3), vec![4, 4, 4]);
        assert_eq!(v(0, 1, 5), vec![2, 3, 4, 5, 6]);
        assert!(v(0, 1, 0).is_empty());
    }

    #[test]
    fn twist_colors_satisfy_crossing_rule() {
        let (a, b) = (BigInt::from(3), BigInt::from(-2));
        let mut strands = vec![a.clone(), b.clone()];
        strands.extend(twist_propagate(&a, &b, 6));
        for w in strands.windows(3) {
            assert_eq!(&w[0] + &w[2], BigInt::from(2) * &w[1]);
        }
    }

    #[test]
    fn pretzel_sizes_and_components() {
        for (tassels, comps) in [
            (vec![1, 1, 1], 1),
            (vec![3, 5, 7], 1),
            (vec![1, 1], 2),
            (vec![2, 2, 2], 3),
            (vec![1, 1, 1, 1], 2),
            (vec![5, 3, 7, 4], 1),
            (vec![2, 3, 3], 1),
        ] {
            let spec = PretzelSpec::new(tassels.clone()).unwrap();
            let d = pretzel_diagram(&spec).unwrap();
            assert_eq!(d.n() as u64, spec.crossing_count());
            assert!(d.validate().is_ok() && d.is_canonical());
            assert_eq!(d.component_count(), comps, "{spec}");
        }
    }

    #[test]
    fn pretzel_rejects_bad_specs() {
        for s in ["P(3)", "P(1,0,1)", "P(2,-1,3)"] {
            assert!(pretzel_diagram(&s.parse().unwrap()).is_err(), "{s}");
        }
    }

    #[test]
    fn reidemeister_bookkeeping() {
        let t = KnotDiagram::trefoil();
        let r1 = t.reidemeister_one_insert(0).unwrap();
        assert_eq!(r1.n(), 4);
        let r11 = r1.reidemeister_one_insert(0).unwrap();
        assert_eq!(r11.n(), 5);
        let r2 = t.reidemeister_two_insert(0, 1).unwrap();
        assert_eq!(r2.n(), 5);
        for d in [&r1, &r11, &r2] {
            assert!(d.validate().is_ok() && d.is_canonical());
            assert_eq!(d.component_count(), 1);
        }
        assert!(r1.crossings().iter().any(|c| c.over == c.under_out));
        assert!(KnotDiagram::unknot().reidemeister_one_insert(0).is_err());
        assert!(t.reidemeister_two_insert(1, 1).is_err());
        assert!(t.reidemeister_two_insert(0, 3).is_err());
    }

    #[test]
    fn canonical_relabel() {
        let d = KnotDiagram::new(vec![x(0, 2, 1), x(2, 1, 0), x(1, 0, 2)]).unwrap();
        let c = d.canonical();
        assert!(c.is_canonical() && c.validate().is_ok());
        assert_eq!(c.canonical(), c);
    }

    #[test]
    fn json_round_trip() {
        let d = pretzel_diagram(&"P(2,3,3)".parse().unwrap()).unwrap();
        let s = serde_json::to_string(&d).unwrap();
        assert!(s.starts_with("{\"n\":8,"));
        let back: KnotDiagram = serde_json::from_str(&s).unwrap();
        assert_eq!(back, d);
        let bad = r#"{"n":2,"crossings":[{"over":0,"under_in":0,"under_out":1}]}"#;
        assert!(serde_json::from_str::<KnotDiagram>(bad).is_err());
        let dup = r#"{"n":2,"crossings":[{"over":0,"under_in":0,"under_out":1},{"over":0,"under_in":1,"under_out":1}]}"#;
        assert!(serde_json::from_str::<KnotDiagram>(dup).is_err());
    }

    #[test]
    fn spec_parsing() {
        let s: PretzelSpec = " P( 5, 3 ,7,4 ) ".parse().unwrap();
        assert_eq!(s.tassels(), &[5, 3, 7, 4]);
        assert_eq!(s.to_string(), "P(5,3,7,4)");
        assert_eq!(s.parity(), Parity::OneEven(3));
        assert_eq!(
            "P(1,1,1)".parse::<PretzelSpec>().unwrap().parity(),
            Parity::AllOdd
        );
        assert_eq!(
            "P(2,2,1)".parse::<PretzelSpec>().unwrap().parity(),
            Parity::Other
        );
        for bad in ["P()", "Q(1,2)", "P(1,x)", "P(1,2"] {
            assert!(bad.parse::<PretzelSpec>().is_err(), "{bad}");
        }
    }
}
