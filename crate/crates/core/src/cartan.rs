//! Symmetric and symmetrisable Cartan data: the GCM of a quiver, folding along
//! an admissible automorphism, valued quivers, and the lattice maps between the
//! quiver lattice and the folded lattice.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{act, Automorphism, DimensionVector, Lattice, OrbitStructure, Quiver};

/// Square integer matrix stored as rows.
pub type IntMatrix = Vec<Vec<i64>>;

/// `x^T M y`.
pub fn bilinear(m: &IntMatrix, x: &[i64], y: &[i64]) -> i64 {
    let mut s = 0;
    for (i, row) in m.iter().enumerate() {
        if x[i] == 0 {
            continue;
        }
        for (j, &mij) in row.iter().enumerate() {
            s += x[i] * mij * y[j];
        }
    }
    s
}

/// The symmetric GCM `A` of a quiver: `2` on the diagonal and minus the number
/// of edges off it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricGcm {
    pub matrix: IntMatrix,
}

impl SymmetricGcm {
    pub fn new(q: &Quiver) -> Self {
        let n = q.vertex_count();
        let mut matrix = vec![vec![0i64; n]; n];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = 2;
        }
        for a in q.arrows() {
            matrix[a.source][a.target] -= 1;
            matrix[a.target][a.source] -= 1;
        }
        SymmetricGcm { matrix }
    }

    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    /// `(x, y)_Q`, checked against the quiver lattice.
    pub fn bilinear(&self, x: &DimensionVector, y: &DimensionVector) -> Result<i64> {
        check(x, Lattice::Quiver, self.size())?;
        check(y, Lattice::Quiver, self.size())?;
        Ok(bilinear(&self.matrix, &x.coords, &y.coords))
    }
}

fn check(v: &DimensionVector, lattice: Lattice, len: usize) -> Result<()> {
    if v.lattice != lattice || v.coords.len() != len {
        return Err(Error::LatticeMismatch(format!(
            "expected {lattice:?} vector of length {len}, got {:?} of length {}",
            v.lattice,
            v.coords.len()
        )));
    }
    Ok(())
}

/// The Euler form `<x, y> = sum_i x_i y_i - sum_{i -> j} x_i y_j`.
pub fn euler_form(q: &Quiver, x: &[i64], y: &[i64]) -> i64 {
    let diag: i64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
    let off: i64 = q.arrows().iter().map(|a| x[a.source] * y[a.target]).sum();
    diag - off
}

/// An oriented valued edge carrying `b_ij > 0` (the absolute value of the
/// symmetrised entry).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValuedEdge {
    pub from: usize,
    pub to: usize,
    pub b: i64,
}

/// A valued quiver: vertex labels, symmetriser `d`, oriented valued edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuedQuiver {
    pub labels: Vec<String>,
    pub d: Vec<i64>,
    pub edges: Vec<ValuedEdge>,
}

/// File schema for valued quivers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValuedQuiverFile {
    pub vertices: Vec<String>,
    pub d: BTreeMap<String, i64>,
    pub edges: Vec<RawValuedEdge>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawValuedEdge {
    pub from: String,
    pub to: String,
    pub b: i64,
}

impl ValuedQuiverFile {
    pub fn parse(json: &str) -> Result<Self> {
        Ok(serde_json::from_str(json)?)
    }

    pub fn build(&self) -> Result<ValuedQuiver> {
        let idx = |v: &str| {
            self.vertices
                .iter()
                .position(|x| x == v)
                .ok_or_else(|| Error::UnknownVertex(v.to_string()))
        };
        let mut d = vec![1; self.vertices.len()];
        for (k, &dk) in &self.d {
            d[idx(k)?] = dk;
        }
        let edges = self
            .edges
            .iter()
            .map(|e| {
                Ok(ValuedEdge {
                    from: idx(&e.from)?,
                    to: idx(&e.to)?,
                    b: e.b,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        ValuedQuiver::new(self.vertices.clone(), d, edges)
    }

    pub fn from_valued(vq: &ValuedQuiver) -> Self {
        ValuedQuiverFile {
            vertices: vq.labels.clone(),
            d: vq
                .labels
                .iter()
                .cloned()
                .zip(vq.d.iter().copied())
                .collect(),
            edges: vq
                .edges
                .iter()
                .map(|e| RawValuedEdge {
                    from: vq.labels[e.from].clone(),
                    to: vq.labels[e.to].clone(),
                    b: e.b,
                })
                .collect(),
        }
    }
}

impl ValuedQuiver {
    /// Validates: labels unique, `d_i >= 1`, no loops, `b > 0`, and `d_i | b`,
    /// `d_j | b` on every edge.
    pub fn new(labels: Vec<String>, d: Vec<i64>, edges: Vec<ValuedEdge>) -> Result<Self> {
        for (k, l) in labels.iter().enumerate() {
            if labels[..k].contains(l) {
                return Err(Error::DuplicateId(l.clone()));
            }
        }
        if d.len() != labels.len() {
            return Err(Error::LatticeMismatch("symmetriser length".into()));
        }
        if let Some(k) = d.iter().position(|&x| x < 1) {
            return Err(Error::BadParameter(format!(
                "symmetriser entry for `{}` must be positive",
                labels[k]
            )));
        }
        for e in &edges {
            if e.from >= labels.len() || e.to >= labels.len() {
                return Err(Error::UnknownVertex(format!("{}->{}", e.from, e.to)));
            }
            if e.from == e.to {
                return Err(Error::VertexLoop {
                    arrow: format!("{}->{}", labels[e.from], labels[e.to]),
                    vertex: labels[e.from].clone(),
                });
            }
            if e.b <= 0 || e.b % d[e.from] != 0 || e.b % d[e.to] != 0 {
                return Err(Error::BadParameter(format!(
                    "edge {}->{} with b = {} is incompatible with d = ({}, {})",
                    labels[e.from], labels[e.to], e.b, d[e.from], d[e.to]
                )));
            }
        }
        Ok(ValuedQuiver { labels, d, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// The symmetric matrix `B`.
    pub fn b_matrix(&self) -> IntMatrix {
        let n = self.vertex_count();
        let mut b = vec![vec![0; n]; n];
        for i in 0..n {
            b[i][i] = 2 * self.d[i];
        }
        for e in &self.edges {
            b[e.from][e.to] -= e.b;
            b[e.to][e.from] -= e.b;
        }
        b
    }

    /// The GCM `C = D^{-1} B`.
    pub fn c_matrix(&self) -> IntMatrix {
        let b = self.b_matrix();
        b.iter()
            .enumerate()
            .map(|(i, row)| row.iter().map(|&x| x / self.d[i]).collect())
            .collect()
    }

    /// The displayed valuation `(|c_ji|, |c_ij|)` of an edge read from `i` to `j`.
    pub fn pair(&self, i: usize, j: usize) -> (i64, i64) {
        let b: i64 = self
            .edges
            .iter()
            .filter(|e| (e.from == i && e.to == j) || (e.from == j && e.to == i))
            .map(|e| e.b)
            .sum();
        (b / self.d[j], b / self.d[i])
    }

    /// Undirected valued graph: `(i, j, |b_ij|)` for `i < j` with `b_ij != 0`.
    pub fn graph_edges(&self) -> Vec<(usize, usize, i64)> {
        let b = self.b_matrix();
        let n = self.vertex_count();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if b[i][j] != 0 {
                    out.push((i, j, -b[i][j]));
                }
            }
        }
        out
    }

    /// `lcm` of the symmetriser.
    pub fn t(&self) -> i64 {
        self.d.iter().fold(1, |acc, &x| acc.lcm(&x))
    }
}

/// Folding data of an admissible pair `(Q, a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldData {
    pub orbits: OrbitStructure,
    pub b: IntMatrix,
    pub d: Vec<i64>,
    pub c: IntMatrix,
    /// The folded valued quiver: one edge per ordered pair of orbits joined by
    /// arrows, carrying the number of those arrows.
    pub valued: ValuedQuiver,
}

impl FoldData {
    pub fn new(q: &Quiver, a: &Automorphism) -> Self {
        let orbits = OrbitStructure::new(q, a);
        let k = orbits.orbit_count();
        let d: Vec<i64> = orbits.sizes().into_iter().map(|s| s as i64).collect();
        let mut b = vec![vec![0i64; k]; k];
        for i in 0..k {
            b[i][i] = 2 * d[i];
        }
        let mut oriented: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for ar in q.arrows() {
            let (i, j) = (orbits.orbit_of[ar.source], orbits.orbit_of[ar.target]);
            b[i][j] -= 1;
            b[j][i] -= 1;
            *oriented.entry((i, j)).or_default() += 1;
        }
        let c = b
            .iter()
            .enumerate()
            .map(|(i, row)| row.iter().map(|&x| x / d[i]).collect())
            .collect();
        let labels = orbits
            .vertex_orbits
            .iter()
            .map(|o| {
                let ids: Vec<&str> = o.iter().map(|&v| q.vertex_id(v)).collect();
                format!("{{{}}}", ids.join(","))
            })
            .collect();
        let edges = oriented
            .into_iter()
            .map(|((from, to), b)| ValuedEdge { from, to, b })
            .collect();
        let valued = ValuedQuiver::new(labels, d.clone(), edges)
            .expect("folding an admissible pair yields a valid valued quiver");
        FoldData {
            orbits,
            b,
            d,
            c,
            valued,
        }
    }

    pub fn size(&self) -> usize {
        self.d.len()
    }

    /// `(x, y)_Gamma`, checked against the folded lattice.
    pub fn bilinear(&self, x: &DimensionVector, y: &DimensionVector) -> Result<i64> {
        check(x, Lattice::Folded, self.size())?;
        check(y, Lattice::Folded, self.size())?;
        Ok(bilinear(&self.b, &x.coords, &y.coords))
    }

    /// `f`: reads one coordinate per orbit of an `a`-fixed vector.
    pub fn f_map(&self, a: &Automorphism, v: &[i64]) -> Result<Vec<i64>> {
        if act(a, v) != v {
            return Err(Error::NotFixed(v.to_vec()));
        }
        Ok(self.orbits.vertex_orbits.iter().map(|o| v[o[0]]).collect())
    }

    /// `f^{-1}`: spreads each orbit coordinate over the orbit.
    pub fn f_inverse(&self, w: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.orbits.orbit_of.len()];
        for (v, &o) in self.orbits.orbit_of.iter().enumerate() {
            out[v] = w[o];
        }
        out
    }

    /// Valuation of the folded edge between orbits `i` and `j`, read from `i`.
    pub fn pair(&self, i: usize, j: usize) -> (i64, i64) {
        self.valued.pair(i, j)
    }
}

/// `sigma(v) = v + a(v) + ... + a^{r-1}(v)` with `r` minimal such that
/// `a^r(v) = v`.
pub fn sigma(a: &Automorphism, v: &[i64]) -> Vec<i64> {
    let mut acc = v.to_vec();
    let mut cur = act(a, v);
    while cur != v {
        for (x, y) in acc.iter_mut().zip(&cur) {
            *x += y;
        }
        cur = act(a, &cur);
    }
    acc
}

/// `(w, w)_Gamma / 2`.
pub fn root_length(b: &IntMatrix, w: &[i64]) -> Rational64 {
    Rational64::new(bilinear(b, w, w), 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3_flip() -> (Quiver, Automorphism) {
        let q = Quiver::new(&["1", "2", "3"], &[("r1", "1", "2"), ("r3", "3", "2")]).unwrap();
        let a = Automorphism::new(&q, vec![2, 1, 0], vec![1, 0]).unwrap();
        (q, a)
    }

    #[test]
    fn gcm_of_small_quivers() {
        let a2 = Quiver::new(&["1", "2"], &[("r", "1", "2")]).unwrap();
        assert_eq!(SymmetricGcm::new(&a2).matrix, vec![vec![2, -1], vec![-1, 2]]);
        let (a3, _) = a3_flip();
        assert_eq!(
            SymmetricGcm::new(&a3).matrix,
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]
        );
    }

    #[test]
    fn fold_a3_flip() {
        let (q, a) = a3_flip();
        let f = FoldData::new(&q, &a);
        assert_eq!(f.b, vec![vec![4, -2], vec![-2, 2]]);
        assert_eq!(f.d, vec![2, 1]);
        assert_eq!(f.c, vec![vec![2, -1], vec![-2, 2]]);
        assert_eq!(f.pair(0, 1), (2, 1));
        assert_eq!(f.valued.labels, vec!["{1,3}", "{2}"]);
    }

    #[test]
    fn forms_and_lattice_maps() {
        let (q, a) = a3_flip();
        let f = FoldData::new(&q, &a);
        let ei = DimensionVector::folded(vec![1, 0]);
        let ej = DimensionVector::folded(vec![0, 1]);
        assert_eq!(f.bilinear(&ei, &ej).unwrap(), -2);
        assert!(f.bilinear(&ei, &DimensionVector::quiver(vec![1, 0])).is_err());
        assert_eq!(f.f_map(&a, &[1, 2, 1]).unwrap(), vec![1, 2]);
        assert_eq!(f.f_map(&a, &[1, 0, 0]), Err(Error::NotFixed(vec![1, 0, 0])));
        assert_eq!(f.f_inverse(&[1, 2]), vec![1, 2, 1]);
        assert_eq!(sigma(&a, &[1, 0, 0]), vec![1, 0, 1]);
        assert_eq!(sigma(&a, &[1, 1, 0]), vec![1, 2, 1]);
        assert_eq!(sigma(&a, &[1, 2, 1]), vec![1, 2, 1]);
        assert_eq!(root_length(&f.b, &[1, 0]), Rational64::from_integer(2));
    }

    #[test]
    fn euler_on_a2() {
        let a2 = Quiver::new(&["1", "2"], &[("r", "1", "2")]).unwrap();
        assert_eq!(euler_form(&a2, &[1, 0], &[0, 1]), -1);
        assert_eq!(euler_form(&a2, &[0, 1], &[1, 0]), 0);
        let gcm = SymmetricGcm::new(&a2);
        let e1 = DimensionVector::quiver(vec![1, 0]);
        assert_eq!(gcm.bilinear(&e1, &e1).unwrap(), 2);
    }

    #[test]
    fn valued_file_validation() {
        let ok = r#"{"vertices":["i","j"],"d":{"i":2,"j":1},"edges":[{"from":"i","to":"j","b":2}]}"#;
        let vq = ValuedQuiverFile::parse(ok).unwrap().build().unwrap();
        assert_eq!(vq.c_matrix(), vec![vec![2, -1], vec![-2, 2]]);
        assert_eq!(vq.pair(0, 1), (2, 1));
        let bad = r#"{"vertices":["i","j"],"d":{"i":2,"j":1},"edges":[{"from":"i","to":"j","b":3}]}"#;
        assert!(ValuedQuiverFile::parse(bad).unwrap().build().is_err());
        let looped = r#"{"vertices":["i"],"d":{"i":1},"edges":[{"from":"i","to":"i","b":1}]}"#;
        assert!(ValuedQuiverFile::parse(looped).unwrap().build().is_err());
    }
}
