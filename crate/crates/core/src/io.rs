//! Input detection and the JSON reports shared by the command line and the
//! browser demo.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::cartan::{root_length, FoldData, IntMatrix, ValuedQuiver, ValuedQuiverFile};
use crate::error::{Error, Result};
use crate::fixtures::all_fixtures;
use crate::quiver::{Automorphism, Quiver, QuiverFile};
use crate::roots::{RootClassification, RootLattice, RootSet, DEFAULT_ROOT_CAP};

/// A parsed input file: a quiver (with an automorphism, possibly the identity)
/// or a valued quiver. Told apart by the `arrows` and `edges` keys.
#[derive(Debug, Clone)]
pub enum Input {
    Quiver(Quiver, Automorphism),
    Valued(ValuedQuiver),
}

impl Input {
    pub fn parse(json: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(json)?;
        if v.get("arrows").is_some() {
            let (q, a) = serde_json::from_value::<QuiverFile>(v)?.build()?;
            Ok(Input::Quiver(q, a))
        } else if v.get("edges").is_some() {
            Ok(Input::Valued(serde_json::from_value::<ValuedQuiverFile>(v)?.build()?))
        } else {
            Err(Error::Parse("expected a quiver (`arrows`) or valued quiver (`edges`) file".into()))
        }
    }

    /// The lattice of the quiver, or of its fold when `folded` is set. Valued
    /// quivers always give their own lattice.
    pub fn lattice(&self, folded: bool) -> RootLattice {
        match self {
            Input::Quiver(q, a) if folded => RootLattice::from_fold(&FoldData::new(q, a)),
            Input::Quiver(q, _) => RootLattice::from_quiver(q),
            Input::Valued(vq) => RootLattice::from_valued(vq),
        }
    }

    pub fn quiver(&self) -> Result<(&Quiver, &Automorphism)> {
        match self {
            Input::Quiver(q, a) => Ok((q, a)),
            Input::Valued(_) => Err(Error::Parse("expected a quiver file, found a valued quiver".into())),
        }
    }

    pub fn valued(&self) -> Result<&ValuedQuiver> {
        match self {
            Input::Valued(vq) => Ok(vq),
            Input::Quiver(..) => Err(Error::Parse("expected a valued quiver file, found a quiver".into())),
        }
    }
}

/// `"1,2,0"` to a vector.
pub fn parse_vector(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad vector entry `{}` in `{s}`", t.trim())))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldEdge {
    pub from: String,
    pub to: String,
    pub arrows: i64,
    /// `(|c_ji|, |c_ij|)` read from `from` to `to`.
    pub pair: (i64, i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldReport {
    pub orbits: Vec<String>,
    pub b: IntMatrix,
    pub d: Vec<i64>,
    pub c: IntMatrix,
    pub edges: Vec<FoldEdge>,
    pub valued: ValuedQuiverFile,
}

impl FoldReport {
    pub fn new(f: &FoldData) -> Self {
        let labels = &f.valued.labels;
        FoldReport {
            orbits: labels.clone(),
            b: f.b.clone(),
            d: f.d.clone(),
            c: f.c.clone(),
            edges: f
                .valued
                .edges
                .iter()
                .map(|e| FoldEdge {
                    from: labels[e.from].clone(),
                    to: labels[e.to].clone(),
                    arrows: e.b,
                    pair: f.pair(e.from, e.to),
                })
                .collect(),
            valued: ValuedQuiverFile::from_valued(&f.valued),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsReport {
    pub labels: Vec<String>,
    pub height: i64,
    pub roots: RootSet,
    pub null_root: Option<Vec<i64>>,
}

pub fn roots_report(lat: &RootLattice, h: i64, cap: usize) -> Result<RootsReport> {
    Ok(RootsReport {
        labels: lat.labels.clone(),
        height: h,
        roots: lat.positive_roots_up_to(h, cap)?,
        null_root: lat.null_root(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub labels: Vec<String>,
    pub vector: Vec<i64>,
    #[serde(flatten)]
    pub classification: RootClassification,
    /// `(v, v) / 2` in the lattice form.
    pub length: String,
}

pub fn classify_report(lat: &RootLattice, v: &[i64]) -> Result<ClassifyReport> {
    if v.len() != lat.rank() {
        return Err(Error::LatticeMismatch(format!(
            "vector {v:?} has {} entries, lattice has rank {}",
            v.len(),
            lat.rank()
        )));
    }
    Ok(ClassifyReport {
        labels: lat.labels.clone(),
        vector: v.to_vec(),
        classification: lat.classify(v)?,
        length: root_length(&lat.b, v).to_string(),
    })
}

/// Fold of a quiver file, as JSON.
pub fn fold_json(input: &str) -> Result<String> {
    let (q, a) = match Input::parse(input)? {
        Input::Quiver(q, a) => (q, a),
        Input::Valued(_) => return Err(Error::Parse("fold needs a quiver file".into())),
    };
    Ok(to_json(&FoldReport::new(&FoldData::new(&q, &a))))
}

/// Positive roots up to height `h`, as JSON.
pub fn roots_json(input: &str, folded: bool, h: i64) -> Result<String> {
    let lat = Input::parse(input)?.lattice(folded);
    Ok(to_json(&roots_report(&lat, h, DEFAULT_ROOT_CAP)?))
}

/// Classification of a comma-separated vector, as JSON.
pub fn classify_json(input: &str, folded: bool, vector: &str) -> Result<String> {
    let lat = Input::parse(input)?.lattice(folded);
    Ok(to_json(&classify_report(&lat, &parse_vector(vector)?)?))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialise")
}

/// `(file name, JSON)` for every fixture pair and the two valued edges used
/// in the examples.
pub fn fixture_files() -> Vec<(String, String)> {
    let mut out = Vec::new();
    for fx in all_fixtures() {
        for (name, a) in &fx.automorphisms {
            let file = if fx.automorphisms.len() == 1 {
                format!("{}.json", fx.name)
            } else {
                format!("{}-{}.json", fx.name, name)
            };
            out.push((file, to_json(&QuiverFile::from_pair(&fx.quiver, a))));
        }
    }
    for (name, d, b) in [("edge-2-1", 2, 2), ("edge-4-1", 4, 4)] {
        let file = ValuedQuiverFile {
            vertices: vec!["i".into(), "j".into()],
            d: [("i".to_string(), d), ("j".to_string(), 1)].into_iter().collect(),
            edges: vec![crate::cartan::RawValuedEdge {
                from: "i".into(),
                to: "j".into(),
                b,
            }],
        };
        out.push((format!("{name}.json"), to_json(&file)));
    }
    out
}
