//! Quivers, admissible automorphisms, orbits and dimension vectors.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver without vertex loops. Vertices and arrows are addressed by
/// their position; identifiers are kept for I/O.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

/// Raw description, before validation.
#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct RawArrow {
    pub id: String,
    pub from: String,
    pub to: String,
}

/// Raw permutations keyed by identifier.
#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct RawAutomorphism {
    #[serde(default)]
    pub vertices: BTreeMap<String, String>,
    #[serde(default)]
    pub arrows: BTreeMap<String, String>,
}

/// The quiver file schema. The automorphism block is optional and defaults to
/// the identity.
#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct QuiverFile {
    pub vertices: Vec<String>,
    pub arrows: Vec<RawArrow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub automorphism: Option<RawAutomorphism>,
}

impl QuiverFile {
    pub fn parse(json: &str) -> Result<Self> {
        Ok(serde_json::from_str(json)?)
    }

    /// Validates the quiver and the (possibly defaulted) automorphism.
    pub fn build(&self) -> Result<(Quiver, Automorphism)> {
        let arrows: Vec<(&str, &str, &str)> = self
            .arrows
            .iter()
            .map(|a| (a.id.as_str(), a.from.as_str(), a.to.as_str()))
            .collect();
        let vertices: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        let q = Quiver::new(&vertices, &arrows)?;
        let a = match &self.automorphism {
            None => Automorphism::identity(&q),
            Some(raw) => Automorphism::from_raw(&q, raw)?,
        };
        Ok((q, a))
    }

    pub fn from_pair(q: &Quiver, a: &Automorphism) -> Self {
        let automorphism = (!a.is_identity()).then(|| RawAutomorphism {
            vertices: (0..q.vertex_count())
                .map(|v| {
                    (
                        q.vertex_id(v).to_string(),
                        q.vertex_id(a.vertex(v)).to_string(),
                    )
                })
                .collect(),
            arrows: (0..q.arrow_count())
                .map(|r| (q.arrow(r).id.clone(), q.arrow(a.arrow(r)).id.clone()))
                .collect(),
        });
        QuiverFile {
            vertices: q.vertices.clone(),
            arrows: q
                .arrows
                .iter()
                .map(|r| RawArrow {
                    id: r.id.clone(),
                    from: q.vertices[r.source].clone(),
                    to: q.vertices[r.target].clone(),
                })
                .collect(),
            automorphism,
        }
    }
}

impl Quiver {
    /// Validates a quiver given vertex identifiers and `(id, from, to)` arrows.
    pub fn new(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self> {
        let mut index = HashMap::new();
        for (k, v) in vertices.iter().enumerate() {
            if index.insert(v.to_string(), k).is_some() {
                return Err(Error::DuplicateId(v.to_string()));
            }
        }
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(arrows.len());
        for &(id, from, to) in arrows {
            if !seen.insert(id) {
                return Err(Error::DuplicateId(id.to_string()));
            }
            let endpoint = |v: &str| {
                index.get(v).copied().ok_or_else(|| Error::DanglingEndpoint {
                    arrow: id.to_string(),
                    vertex: v.to_string(),
                })
            };
            let source = endpoint(from)?;
            let target = endpoint(to)?;
            if source == target {
                return Err(Error::VertexLoop {
                    arrow: id.to_string(),
                    vertex: from.to_string(),
                });
            }
            out.push(Arrow {
                id: id.to_string(),
                source,
                target,
            });
        }
        Ok(Quiver {
            vertices: vertices.iter().map(|v| v.to_string()).collect(),
            arrows: out,
        })
    }

    /// Builds from owned labels and index-based arrows (used by constructions).
    pub fn from_parts(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let vs: Vec<&str> = vertices.iter().map(String::as_str).collect();
        let raw: Vec<(&str, &str, &str)> = arrows
            .iter()
            .map(|a| {
                (
                    a.id.as_str(),
                    vertices[a.source].as_str(),
                    vertices[a.target].as_str(),
                )
            })
            .collect();
        Quiver::new(&vs, &raw)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_id(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_ids(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, id: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == id)
            .ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    pub fn arrow(&self, r: usize) -> &Arrow {
        &self.arrows[r]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.arrows.iter().all(|a| a.source != v)
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.arrows.iter().all(|a| a.target != v)
    }

    /// Number of edges between two vertices, ignoring orientation.
    pub fn edges_between(&self, u: usize, v: usize) -> usize {
        self.arrows
            .iter()
            .filter(|a| (a.source == u && a.target == v) || (a.source == v && a.target == u))
            .count()
    }

    /// The same quiver with every arrow incident to `v` reversed.
    pub fn reflect_at(&self, v: usize) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| {
                if a.source == v || a.target == v {
                    Arrow {
                        id: a.id.clone(),
                        source: a.target,
                        target: a.source,
                    }
                } else {
                    a.clone()
                }
            })
            .collect();
        Quiver {
            vertices: self.vertices.clone(),
            arrows,
        }
    }

    /// Whether the vertices in `support` induce a connected subgraph.
    pub fn is_connected_on(&self, support: &[usize]) -> bool {
        let set: HashSet<usize> = support.iter().copied().collect();
        connected(&set, |u, v| self.edges_between(u, v) > 0)
    }
}

/// Connectivity of a vertex set under an adjacency predicate.
pub(crate) fn connected(set: &HashSet<usize>, adjacent: impl Fn(usize, usize) -> bool) -> bool {
    let Some(&start) = set.iter().min() else {
        return false;
    };
    let mut seen = HashSet::from([start]);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &v in set {
            if !seen.contains(&v) && adjacent(u, v) {
                seen.insert(v);
                stack.push(v);
            }
        }
    }
    seen.len() == set.len()
}

/// An admissible automorphism given by compatible vertex and arrow permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    vertex_map: Vec<usize>,
    arrow_map: Vec<usize>,
    order: usize,
}

fn check_permutation(map: &[usize], what: &str) -> Result<()> {
    let mut hit = vec![false; map.len()];
    for &x in map {
        if x >= map.len() || hit[x] {
            return Err(Error::NotPermutation {
                what: what.to_string(),
                detail: format!("image {x} repeated or out of range"),
            });
        }
        hit[x] = true;
    }
    Ok(())
}

fn cycle_lengths(map: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; map.len()];
    let mut out = Vec::new();
    for s in 0..map.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = map[x];
            len += 1;
        }
        out.push(len);
    }
    out
}

impl Automorphism {
    pub fn identity(q: &Quiver) -> Self {
        Automorphism {
            vertex_map: (0..q.vertex_count()).collect(),
            arrow_map: (0..q.arrow_count()).collect(),
            order: 1,
        }
    }

    /// Validates index-based permutations against `q`.
    pub fn new(q: &Quiver, vertex_map: Vec<usize>, arrow_map: Vec<usize>) -> Result<Self> {
        if vertex_map.len() != q.vertex_count() {
            return Err(Error::NotPermutation {
                what: "vertex map".into(),
                detail: format!("{} entries for {} vertices", vertex_map.len(), q.vertex_count()),
            });
        }
        if arrow_map.len() != q.arrow_count() {
            return Err(Error::NotPermutation {
                what: "arrow map".into(),
                detail: format!("{} entries for {} arrows", arrow_map.len(), q.arrow_count()),
            });
        }
        check_permutation(&vertex_map, "vertex map")?;
        check_permutation(&arrow_map, "arrow map")?;
        for (r, a) in q.arrows.iter().enumerate() {
            let image = &q.arrows[arrow_map[r]];
            if image.source != vertex_map[a.source] || image.target != vertex_map[a.target] {
                return Err(Error::Incompatible { arrow: a.id.clone() });
            }
        }
        let order = cycle_lengths(&vertex_map)
            .into_iter()
            .chain(cycle_lengths(&arrow_map))
            .fold(1usize, |acc, l| acc.lcm(&l));
        let aut = Automorphism {
            vertex_map,
            arrow_map,
            order,
        };
        let orbit_of = aut.vertex_orbit_index();
        for a in &q.arrows {
            if orbit_of[a.source] == orbit_of[a.target] {
                return Err(Error::NotAdmissible { arrow: a.id.clone() });
            }
        }
        Ok(aut)
    }

    /// Validates permutations keyed by identifier. Missing entries default to
    /// fixed points.
    pub fn from_raw(q: &Quiver, raw: &RawAutomorphism) -> Result<Self> {
        let mut vmap: Vec<usize> = (0..q.vertex_count()).collect();
        for (from, to) in &raw.vertices {
            vmap[q.vertex_index(from)?] = q.vertex_index(to)?;
        }
        let arrow_idx = |id: &str| {
            q.arrow_index(id).ok_or_else(|| Error::NotPermutation {
                what: "arrow map".into(),
                detail: format!("unknown arrow `{id}`"),
            })
        };
        let mut amap: Vec<usize> = (0..q.arrow_count()).collect();
        for (from, to) in &raw.arrows {
            amap[arrow_idx(from)?] = arrow_idx(to)?;
        }
        Automorphism::new(q, vmap, amap)
    }

    /// Builds the automorphism from a vertex permutation alone, choosing the
    /// arrow map that preserves the relative order of parallel arrows.
    pub fn from_vertex_map(q: &Quiver, vertex_map: Vec<usize>) -> Result<Self> {
        if vertex_map.len() != q.vertex_count() {
            return Err(Error::NotPermutation {
                what: "vertex map".into(),
                detail: "wrong length".into(),
            });
        }
        check_permutation(&vertex_map, "vertex map")?;
        let mut buckets: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (r, a) in q.arrows.iter().enumerate() {
            buckets.entry((a.source, a.target)).or_default().push(r);
        }
        let mut arrow_map = vec![0; q.arrow_count()];
        for ((s, t), list) in &buckets {
            let Some(images) = buckets.get(&(vertex_map[*s], vertex_map[*t])) else {
                return Err(Error::Incompatible {
                    arrow: q.arrows[list[0]].id.clone(),
                });
            };
            if images.len() != list.len() {
                return Err(Error::Incompatible {
                    arrow: q.arrows[list[0]].id.clone(),
                });
            }
            for (k, &r) in list.iter().enumerate() {
                arrow_map[r] = images[k];
            }
        }
        Automorphism::new(q, vertex_map, arrow_map)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_identity(&self) -> bool {
        self.order == 1
    }

    #[inline]
    pub fn vertex(&self, v: usize) -> usize {
        self.vertex_map[v]
    }

    #[inline]
    pub fn arrow(&self, r: usize) -> usize {
        self.arrow_map[r]
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    pub fn arrow_map(&self) -> &[usize] {
        &self.arrow_map
    }

    pub fn inverse(&self) -> Automorphism {
        let mut vi = vec![0; self.vertex_map.len()];
        for (v, &w) in self.vertex_map.iter().enumerate() {
            vi[w] = v;
        }
        let mut ai = vec![0; self.arrow_map.len()];
        for (r, &s) in self.arrow_map.iter().enumerate() {
            ai[s] = r;
        }
        Automorphism {
            vertex_map: vi,
            arrow_map: ai,
            order: self.order,
        }
    }

    /// `a^k` for any integer `k`.
    pub fn power(&self, k: i64) -> Automorphism {
        let k = k.rem_euclid(self.order as i64) as usize;
        let mut vm: Vec<usize> = (0..self.vertex_map.len()).collect();
        let mut am: Vec<usize> = (0..self.arrow_map.len()).collect();
        for _ in 0..k {
            vm = vm.iter().map(|&v| self.vertex_map[v]).collect();
            am = am.iter().map(|&r| self.arrow_map[r]).collect();
        }
        let order = self.order / self.order.gcd(&k);
        Automorphism {
            vertex_map: vm,
            arrow_map: am,
            order,
        }
    }

    /// For each vertex, the index of its orbit (orbits ordered by least member).
    pub fn vertex_orbit_index(&self) -> Vec<usize> {
        orbit_index(&self.vertex_map)
    }
}

fn orbit_index(map: &[usize]) -> Vec<usize> {
    let mut idx = vec![usize::MAX; map.len()];
    let mut next = 0;
    for s in 0..map.len() {
        if idx[s] != usize::MAX {
            continue;
        }
        let mut x = s;
        while idx[x] == usize::MAX {
            idx[x] = next;
            x = map[x];
        }
        next += 1;
    }
    idx
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowOrbit {
    /// Arrows in the orbit, starting at the least index and following the map.
    pub arrows: Vec<usize>,
    pub source_orbit: usize,
    pub target_orbit: usize,
}

impl ArrowOrbit {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// Vertex orbits (indexed by least member) with sizes, and arrow orbits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitStructure {
    pub vertex_orbits: Vec<Vec<usize>>,
    pub orbit_of: Vec<usize>,
    pub arrow_orbits: Vec<ArrowOrbit>,
    pub order: usize,
}

impl OrbitStructure {
    pub fn new(q: &Quiver, a: &Automorphism) -> Self {
        let orbit_of = a.vertex_orbit_index();
        let count = orbit_of.iter().max().map_or(0, |m| m + 1);
        let mut vertex_orbits = vec![Vec::new(); count];
        for v in 0..q.vertex_count() {
            // cycle order starting from the least member
            if vertex_orbits[orbit_of[v]].is_empty() {
                let mut x = v;
                loop {
                    vertex_orbits[orbit_of[v]].push(x);
                    x = a.vertex(x);
                    if x == v {
                        break;
                    }
                }
            }
        }
        let arrow_of = orbit_index(a.arrow_map());
        let acount = arrow_of.iter().max().map_or(0, |m| m + 1);
        let mut arrow_orbits: Vec<ArrowOrbit> = Vec::with_capacity(acount);
        for r in 0..q.arrow_count() {
            if arrow_of[r] == arrow_orbits.len() {
                let mut arrows = Vec::new();
                let mut x = r;
                loop {
                    arrows.push(x);
                    x = a.arrow(x);
                    if x == r {
                        break;
                    }
                }
                let ar = q.arrow(r);
                arrow_orbits.push(ArrowOrbit {
                    arrows,
                    source_orbit: orbit_of[ar.source],
                    target_orbit: orbit_of[ar.target],
                });
            }
        }
        OrbitStructure {
            vertex_orbits,
            orbit_of,
            arrow_orbits,
            order: a.order(),
        }
    }

    pub fn orbit_count(&self) -> usize {
        self.vertex_orbits.len()
    }

    /// Orbit sizes `d_i`.
    pub fn sizes(&self) -> Vec<usize> {
        self.vertex_orbits.iter().map(Vec::len).collect()
    }
}

/// Which root lattice a vector lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Lattice {
    /// Indexed by the vertices of a quiver.
    Quiver,
    /// Indexed by vertex orbits (or the vertices of a valued graph).
    Folded,
}

/// A lattice vector carrying its lattice tag. Coordinates are non-negative when
/// it denotes a module dimension.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DimensionVector {
    pub lattice: Lattice,
    pub coords: Vec<i64>,
}

impl DimensionVector {
    pub fn quiver(coords: Vec<i64>) -> Self {
        DimensionVector {
            lattice: Lattice::Quiver,
            coords,
        }
    }

    pub fn folded(coords: Vec<i64>) -> Self {
        DimensionVector {
            lattice: Lattice::Folded,
            coords,
        }
    }

    pub fn is_dimension(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }
}

/// `d'_{a(i)} = d_i`.
pub fn act_on_dimension_vector(a: &Automorphism, d: &DimensionVector) -> Result<DimensionVector> {
    if d.lattice != Lattice::Quiver || d.coords.len() != a.vertex_map.len() {
        return Err(Error::LatticeMismatch(format!(
            "expected a quiver-lattice vector of length {}",
            a.vertex_map.len()
        )));
    }
    Ok(DimensionVector::quiver(act(a, &d.coords)))
}

/// Untagged form of [`act_on_dimension_vector`].
pub fn act(a: &Automorphism, v: &[i64]) -> Vec<i64> {
    let mut out = vec![0; v.len()];
    for (i, &x) in v.iter().enumerate() {
        out[a.vertex(i)] = x;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Quiver {
        Quiver::new(&["1", "2"], &[("r", "1", "2")]).unwrap()
    }

    fn a3() -> Quiver {
        Quiver::new(&["1", "2", "3"], &[("r1", "1", "2"), ("r3", "3", "2")]).unwrap()
    }

    #[test]
    fn validation_errors() {
        assert_eq!(a2().vertex_count(), 2);
        assert!(matches!(
            Quiver::new(&["1"], &[("r", "1", "1")]),
            Err(Error::VertexLoop { .. })
        ));
        assert!(matches!(
            Quiver::new(&["1"], &[("r", "1", "2")]),
            Err(Error::DanglingEndpoint { .. })
        ));
        assert!(matches!(
            Quiver::new(&["1", "1"], &[]),
            Err(Error::DuplicateId(_))
        ));
        assert!(matches!(
            Quiver::new(&["1", "2"], &[("r", "1", "2"), ("r", "2", "1")]),
            Err(Error::DuplicateId(_))
        ));
    }

    #[test]
    fn a3_flip() {
        let q = a3();
        let a = Automorphism::new(&q, vec![2, 1, 0], vec![1, 0]).unwrap();
        assert_eq!(a.order(), 2);
        let o = OrbitStructure::new(&q, &a);
        assert_eq!(o.vertex_orbits, vec![vec![0, 2], vec![1]]);
        assert_eq!(o.sizes(), vec![2, 1]);
        assert_eq!(o.arrow_orbits.len(), 1);
        assert_eq!(o.arrow_orbits[0].len(), 2);
        let d = DimensionVector::quiver(vec![1, 0, 0]);
        assert_eq!(
            act_on_dimension_vector(&a, &d).unwrap().coords,
            vec![0, 0, 1]
        );
        let fixed = DimensionVector::quiver(vec![1, 2, 1]);
        assert_eq!(act_on_dimension_vector(&a, &fixed).unwrap(), fixed);
        assert!(act_on_dimension_vector(&a, &DimensionVector::folded(vec![1, 2])).is_err());
    }

    #[test]
    fn a2_swap_rejected() {
        let q = a2();
        let r = Automorphism::new(&q, vec![1, 0], vec![0]);
        assert!(matches!(
            r,
            Err(Error::Incompatible { .. }) | Err(Error::NotAdmissible { .. })
        ));
        assert!(Automorphism::from_vertex_map(&q, vec![1, 0]).is_err());
    }

    #[test]
    fn not_admissible() {
        // 1 -> 2, 3 -> 4 with the swap (1 3)(2 4) is fine; 1 -> 2 -> ... inside one orbit is not.
        let q = Quiver::new(&["1", "2", "3", "4"], &[("x", "1", "2"), ("y", "3", "4")]).unwrap();
        assert!(Automorphism::new(&q, vec![2, 3, 0, 1], vec![1, 0]).is_ok());
        let cyc = Quiver::new(&["1", "2"], &[("x", "1", "2"), ("y", "2", "1")]).unwrap();
        assert!(matches!(
            Automorphism::new(&cyc, vec![1, 0], vec![1, 0]),
            Err(Error::NotAdmissible { .. })
        ));
    }

    #[test]
    fn identity_orbits_are_singletons() {
        let q = a3();
        let o = OrbitStructure::new(&q, &Automorphism::identity(&q));
        assert_eq!(o.sizes(), vec![1, 1, 1]);
    }

    #[test]
    fn bad_permutations() {
        let q = a3();
        assert!(matches!(
            Automorphism::new(&q, vec![0, 0, 1], vec![0, 1]),
            Err(Error::NotPermutation { .. })
        ));
    }

    #[test]
    fn quiver_file_roundtrip() {
        let json = r#"{"vertices":["1","2","3"],
            "arrows":[{"id":"r1","from":"1","to":"2"},{"id":"r3","from":"3","to":"2"}],
            "automorphism":{"vertices":{"1":"3","3":"1"},"arrows":{"r1":"r3","r3":"r1"}}}"#;
        let file = QuiverFile::parse(json).unwrap();
        let (q, a) = file.build().unwrap();
        assert_eq!(a.order(), 2);
        let again = QuiverFile::from_pair(&q, &a);
        assert_eq!(again.build().unwrap(), (q, a));
    }
}
