//! Isomorphism classes of representations of a fixed dimension vector.
//!
//! Every orbit of `prod GL(d_i)` meets the slice where one chosen arrow is in
//! rank normal form `J_r`. Orbits on the slice are the orbits of the stabiliser
//! of `J_r`, found by breadth-first closure under generators over an indexed
//! state table. A class is represented by the least slice state of its orbit.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, FiniteField};
use crate::linalg::{rank_normal, Matrix};
use crate::quiver::Quiver;
use crate::rep::{is_indecomposable, Representation, RepresentationFile, SearchConfig};

/// Default cap on the number of slice states.
pub const DEFAULT_STATE_CAP: u64 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumConfig {
    pub cap_states: u64,
    pub search: SearchConfig,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            cap_states: DEFAULT_STATE_CAP,
            search: SearchConfig::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassInfo {
    pub rep: Representation,
    /// Rank of the slice arrow.
    pub rank: usize,
    /// Index of the representative among the slice states of that rank.
    pub index: u64,
    /// Number of representations in the class.
    pub orbit_size: u128,
    pub indecomposable: bool,
}

/// One element of the base-change group, stored only at the vertices where it
/// is not the identity.
#[derive(Debug, Clone)]
struct Generator {
    /// `(vertex, g, g^{-1})`.
    parts: Vec<(usize, Matrix, Matrix)>,
}

#[derive(Debug, Clone)]
pub struct Catalog {
    pub quiver: Quiver,
    pub field: Arc<FiniteField>,
    pub dims: Vec<usize>,
    pub classes: Vec<ClassInfo>,
    slice: Option<usize>,
    rest: Vec<usize>,
    /// Class id for every slice state, one table per rank.
    tables: Vec<Vec<u32>>,
}

fn checked_pow(q: u64, e: usize) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..e {
        acc = acc.checked_mul(q)?;
    }
    Some(acc)
}

/// Number of `m x n` matrices of rank `r` over `F_q`.
pub fn rank_count(q: u128, m: usize, n: usize, r: usize) -> u128 {
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    let qp = |e: usize| q.pow(e as u32);
    for i in 0..r {
        num *= (qp(m) - qp(i)) * (qp(n) - qp(i));
        den *= qp(r) - qp(i);
    }
    num / den
}

/// Generators of `GL_k(F_q)`: `diag(w, 1, ...)`, a swap, a cycle and a
/// transvection.
pub fn gl_generators(f: &FiniteField, k: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    let w = f.primitive();
    if w != 1 {
        let mut m = Matrix::identity(k);
        m.set(0, 0, w);
        out.push(m);
    }
    if k >= 2 {
        let mut swap = Matrix::zeros(k, k);
        swap.set(0, 1, 1);
        swap.set(1, 0, 1);
        for i in 2..k {
            swap.set(i, i, 1);
        }
        out.push(swap);
        if k >= 3 {
            let mut cycle = Matrix::zeros(k, k);
            for i in 0..k {
                cycle.set((i + 1) % k, i, 1);
            }
            out.push(cycle);
        }
        let mut t = Matrix::identity(k);
        t.set(0, 1, 1);
        out.push(t);
    }
    out
}

fn embed(k: usize, offset: usize, block: &Matrix) -> Matrix {
    let mut m = Matrix::identity(k);
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            m.set(offset + i, offset + j, block.get(i, j));
        }
    }
    m
}

fn generator(f: &FiniteField, parts: Vec<(usize, Matrix)>) -> Generator {
    Generator {
        parts: parts
            .into_iter()
            .map(|(v, g)| {
                let inv = g.inverse(f).expect("generators are invertible");
                (v, g, inv)
            })
            .collect(),
    }
}

/// `left * x * right` for row-major `x`, either factor optional.
fn transform(f: &FiniteField, left: Option<&Matrix>, x: &[Elem], rows: usize, cols: usize, right: Option<&Matrix>, out: &mut [Elem]) {
    let mut tmp = vec![0; rows * cols];
    match left {
        Some(l) => {
            for i in 0..rows {
                for j in 0..cols {
                    let mut s = 0;
                    for k in 0..rows {
                        let a = l.get(i, k);
                        if a != 0 {
                            s = f.add(s, f.mul(a, x[k * cols + j]));
                        }
                    }
                    tmp[i * cols + j] = s;
                }
            }
        }
        None => tmp.copy_from_slice(x),
    }
    match right {
        Some(r) => {
            for i in 0..rows {
                for j in 0..cols {
                    let mut s = 0;
                    for k in 0..cols {
                        let b = r.get(k, j);
                        if b != 0 {
                            s = f.add(s, f.mul(tmp[i * cols + k], b));
                        }
                    }
                    out[i * cols + j] = s;
                }
            }
        }
        None => out.copy_from_slice(&tmp),
    }
}

/// Layout of the non-slice arrows inside a flat state vector.
struct Layout {
    q: u64,
    /// `(arrow, source, target, rows, cols, offset)`.
    blocks: Vec<(usize, usize, usize, usize, usize, usize)>,
    len: usize,
}

impl Layout {
    fn new(qv: &Quiver, dims: &[usize], rest: &[usize], q: u64) -> Self {
        let mut blocks = Vec::new();
        let mut off = 0;
        for &r in rest {
            let a = qv.arrow(r);
            let (rows, cols) = (dims[a.target], dims[a.source]);
            blocks.push((r, a.source, a.target, rows, cols, off));
            off += rows * cols;
        }
        Layout { q, blocks, len: off }
    }

    fn decode(&self, mut idx: u64, out: &mut [Elem]) {
        for k in (0..self.len).rev() {
            out[k] = (idx % self.q) as Elem;
            idx /= self.q;
        }
    }

    fn encode(&self, x: &[Elem]) -> u64 {
        x.iter().fold(0u64, |acc, &e| acc * self.q + e as u64)
    }

    fn apply(&self, f: &FiniteField, g: &Generator, x: &[Elem], out: &mut [Elem]) {
        out.copy_from_slice(x);
        for &(_, s, t, rows, cols, off) in &self.blocks {
            let left = g.parts.iter().find(|p| p.0 == t).map(|p| &p.1);
            let right = g.parts.iter().find(|p| p.0 == s).map(|p| &p.2);
            if left.is_none() && right.is_none() {
                continue;
            }
            transform(f, left, &x[off..off + rows * cols], rows, cols, right, &mut out[off..off + rows * cols]);
        }
    }
}

const UNSEEN: u32 = u32::MAX;

impl Catalog {
    /// Enumerates the isomorphism classes of representations of `q` with
    /// dimension vector `dims` over `field`.
    pub fn build(q: &Quiver, field: Arc<FiniteField>, dims: &[usize], cfg: &EnumConfig) -> Result<Self> {
        if dims.len() != q.vertex_count() {
            return Err(Error::LatticeMismatch("dimension vector length".into()));
        }
        let f = &*field;
        let qs = f.size() as u64;
        let slice = (0..q.arrow_count())
            .map(|r| {
                let a = q.arrow(r);
                (dims[a.source] * dims[a.target], r)
            })
            .filter(|&(p, _)| p > 0)
            .max_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)))
            .map(|(_, r)| r);
        let rest: Vec<usize> = (0..q.arrow_count()).filter(|&r| Some(r) != slice).collect();
        let layout = Layout::new(q, dims, &rest, qs);
        let (s, t) = slice.map_or((0, 0), |r| (q.arrow(r).source, q.arrow(r).target));
        let max_rank = slice.map_or(0, |_| dims[s].min(dims[t]));
        let per_rank = checked_pow(qs, layout.len);
        let predicted = per_rank.and_then(|p| p.checked_mul(max_rank as u64 + 1));
        match predicted {
            Some(p) if p <= cfg.cap_states && p <= u32::MAX as u64 => {}
            _ => {
                return Err(Error::BudgetExceeded {
                    what: format!("representation states for dimension vector {dims:?}"),
                    predicted: predicted.map_or(u128::MAX, u128::from),
                    cap: cfg.cap_states as u128,
                })
            }
        }
        let per_rank = per_rank.expect("checked above");

        // Generators for the vertices away from the slice arrow.
        let mut common = Vec::new();
        for v in 0..q.vertex_count() {
            if slice.is_some() && (v == s || v == t) {
                continue;
            }
            for g in gl_generators(f, dims[v]) {
                common.push(generator(f, vec![(v, g)]));
            }
        }

        let mut classes = Vec::new();
        let mut tables = Vec::new();
        let mut x = vec![0; layout.len];
        let mut y = vec![0; layout.len];
        for r in 0..=max_rank {
            let mut gens = common.clone();
            if slice.is_some() {
                gens.extend(slice_generators(f, s, t, dims[s], dims[t], r));
            }
            let mut table = vec![UNSEEN; per_rank as usize];
            let matrices = match slice {
                Some(_) => rank_count(qs as u128, dims[t], dims[s], r),
                None => 1,
            };
            let mut stack = Vec::new();
            for start in 0..per_rank {
                if table[start as usize] != UNSEEN {
                    continue;
                }
                let id = classes.len() as u32;
                table[start as usize] = id;
                stack.push(start);
                let mut size: u128 = 0;
                while let Some(cur) = stack.pop() {
                    size += 1;
                    layout.decode(cur, &mut x);
                    for g in &gens {
                        layout.apply(f, g, &x, &mut y);
                        let next = layout.encode(&y);
                        if table[next as usize] == UNSEEN {
                            table[next as usize] = id;
                            stack.push(next);
                        }
                    }
                }
                let rep = Self::state_rep(q, &field, dims, slice, &layout, r, start);
                classes.push(ClassInfo {
                    rep,
                    rank: r,
                    index: start,
                    orbit_size: size * matrices,
                    indecomposable: false,
                });
            }
            tables.push(table);
        }
        for c in &mut classes {
            c.indecomposable = is_indecomposable(q, &c.rep, &cfg.search)?;
        }
        Ok(Catalog {
            quiver: q.clone(),
            field,
            dims: dims.to_vec(),
            classes,
            slice,
            rest,
            tables,
        })
    }

    fn state_rep(
        q: &Quiver,
        field: &Arc<FiniteField>,
        dims: &[usize],
        slice: Option<usize>,
        layout: &Layout,
        r: usize,
        idx: u64,
    ) -> Representation {
        let mut x = vec![0; layout.len];
        layout.decode(idx, &mut x);
        let mut rep = Representation::with_dims_zero(q, field.clone(), dims.to_vec());
        if let Some(sl) = slice {
            let a = q.arrow(sl);
            rep.maps[sl] = rank_normal(dims[a.target], dims[a.source], r);
        }
        for &(arrow, _, _, rows, cols, off) in &layout.blocks {
            rep.maps[arrow] = Matrix::from_vec(rows, cols, x[off..off + rows * cols].to_vec());
        }
        rep
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn indecomposables(&self) -> impl Iterator<Item = (usize, &ClassInfo)> {
        self.classes.iter().enumerate().filter(|(_, c)| c.indecomposable)
    }

    pub fn indecomposable_count(&self) -> usize {
        self.indecomposables().count()
    }

    /// `q^(sum_r d_s d_t)`, the number of representations.
    pub fn space_size(&self) -> u128 {
        let n: usize = self
            .quiver
            .arrows()
            .iter()
            .map(|a| self.dims[a.source] * self.dims[a.target])
            .sum();
        (self.field.size() as u128).pow(n as u32)
    }

    pub fn orbit_size_total(&self) -> u128 {
        self.classes.iter().map(|c| c.orbit_size).sum()
    }

    /// The class of an arbitrary representation with this dimension vector.
    pub fn lookup(&self, x: &Representation) -> Result<usize> {
        if x.dims != self.dims || x.field != self.field {
            return Err(Error::FieldMismatch);
        }
        let f = &*self.field;
        let layout = Layout::new(&self.quiver, &self.dims, &self.rest, f.size() as u64);
        let mut y = x.clone();
        let mut rank = 0;
        if let Some(sl) = self.slice {
            let a = self.quiver.arrow(sl);
            let (p, qm, r) = x.maps[sl].rank_normal_form(f);
            rank = r;
            // g_t = P at the target, g_s^{-1} = Q at the source.
            for (k, b) in self.quiver.arrows().iter().enumerate() {
                let mut m = y.maps[k].clone();
                if b.target == a.target {
                    m = p.mul(f, &m);
                } else if b.target == a.source {
                    m = qm.inverse(f).expect("invertible").mul(f, &m);
                }
                if b.source == a.source {
                    m = m.mul(f, &qm);
                } else if b.source == a.target {
                    m = m.mul(f, &p.inverse(f).expect("invertible"));
                }
                y.maps[k] = m;
            }
        }
        let mut flat = vec![0; layout.len];
        for &(arrow, _, _, rows, cols, off) in &layout.blocks {
            flat[off..off + rows * cols].copy_from_slice(y.maps[arrow].data());
            debug_assert_eq!(y.maps[arrow].shape(), (rows, cols));
        }
        Ok(self.tables[rank][layout.encode(&flat) as usize] as usize)
    }

    pub fn to_file(&self) -> CatalogFile {
        CatalogFile {
            dims: self.dims.clone(),
            field: self.field.spec().to_string(),
            class_count: self.classes.len(),
            classes: self
                .classes
                .iter()
                .map(|c| ClassEntry {
                    maps: RepresentationFile::from_rep(&self.quiver, &c.rep).maps,
                    indecomposable: c.indecomposable,
                    orbit_size: c.orbit_size,
                })
                .collect(),
        }
    }
}

/// Generators of the stabiliser of `J_r` in `GL(d_t) x GL(d_s)`: pairs
/// `g_s = [[A, 0], [C, D]]`, `g_t = [[A, B], [0, D']]`.
fn slice_generators(f: &FiniteField, s: usize, t: usize, ds: usize, dt: usize, r: usize) -> Vec<Generator> {
    let mut out = Vec::new();
    for a in gl_generators(f, r) {
        out.push(generator(f, vec![(s, embed(ds, 0, &a)), (t, embed(dt, 0, &a))]));
    }
    for d in gl_generators(f, ds - r) {
        out.push(generator(f, vec![(s, embed(ds, r, &d))]));
    }
    for d in gl_generators(f, dt - r) {
        out.push(generator(f, vec![(t, embed(dt, r, &d))]));
    }
    for i in r..ds {
        for j in 0..r {
            let mut c = Matrix::identity(ds);
            c.set(i, j, 1);
            out.push(generator(f, vec![(s, c)]));
        }
    }
    for i in 0..r {
        for j in r..dt {
            let mut b = Matrix::identity(dt);
            b.set(i, j, 1);
            out.push(generator(f, vec![(t, b)]));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub maps: std::collections::BTreeMap<String, Vec<Vec<Elem>>>,
    pub indecomposable: bool,
    pub orbit_size: u128,
}

/// Catalog export.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogFile {
    pub dims: Vec<usize>,
    pub field: String,
    pub class_count: usize,
    pub classes: Vec<ClassEntry>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::is_isomorphic;

    fn field(p: u32, m: u32) -> Arc<FiniteField> {
        Arc::new(FiniteField::new(p, m).unwrap())
    }

    fn a2() -> Quiver {
        Quiver::new(&["1", "2"], &[("r", "1", "2")]).unwrap()
    }

    #[test]
    fn rank_counts() {
        assert_eq!(rank_count(2, 2, 2, 0), 1);
        assert_eq!(rank_count(2, 2, 2, 1), 9);
        assert_eq!(rank_count(2, 2, 2, 2), 6);
        assert_eq!(rank_count(3, 1, 1, 1), 2);
    }

    #[test]
    fn a2_small() {
        let cfg = EnumConfig::default();
        for p in [2, 3] {
            let c = Catalog::build(&a2(), field(p, 1), &[1, 1], &cfg).unwrap();
            assert_eq!(c.len(), 2);
            assert_eq!(c.indecomposable_count(), 1);
            assert_eq!(c.orbit_size_total(), c.space_size());
        }
        let c = Catalog::build(&a2(), field(2, 1), &[2, 1], &cfg).unwrap();
        assert_eq!(c.indecomposable_count(), 0);
    }

    #[test]
    fn gl_generators_generate() {
        // Orbit of e_1 under GL_3(F_2) is every nonzero vector.
        let f = FiniteField::new(2, 1).unwrap();
        let gens = gl_generators(&f, 3);
        let mut seen = std::collections::BTreeSet::from([vec![1u32, 0, 0]]);
        let mut stack = vec![vec![1u32, 0, 0]];
        while let Some(v) = stack.pop() {
            for g in &gens {
                let w = g.mul(&f, &Matrix::from_columns(3, &[v.clone()])).column(0);
                if seen.insert(w.clone()) {
                    stack.push(w);
                }
            }
        }
        assert_eq!(seen.len(), 7);
    }

    #[test]
    fn lookup_matches_iso_classes() {
        let q = Quiver::new(&["1", "2", "3"], &[("r1", "1", "2"), ("r3", "3", "2")]).unwrap();
        let f = field(3, 1);
        let cfg = EnumConfig::default();
        let c = Catalog::build(&q, f.clone(), &[1, 2, 1], &cfg).unwrap();
        assert_eq!(c.orbit_size_total(), c.space_size());
        let x = Representation::new(
            &q,
            f,
            vec![1, 2, 1],
            vec![Matrix::from_rows(&[vec![2], vec![1]]), Matrix::from_rows(&[vec![1], vec![2]])],
        )
        .unwrap();
        let id = c.lookup(&x).unwrap();
        assert!(is_isomorphic(&q, &x, &c.classes[id].rep, &cfg.search).unwrap());
    }

    #[test]
    fn kronecker_lines() {
        // Indecomposables of dimension (1,1) on two parallel arrows are the
        // points of the projective line.
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")]).unwrap();
        let cfg = EnumConfig::default();
        for (p, m) in [(2, 1), (3, 1), (2, 2)] {
            let f = field(p, m);
            let n = f.size() as usize;
            let c = Catalog::build(&q, f, &[1, 1], &cfg).unwrap();
            assert_eq!(c.indecomposable_count(), n + 1);
            assert_eq!(c.orbit_size_total(), c.space_size());
        }
    }

    #[test]
    fn affine_d4_null_root() {
        // The Kac polynomial of the null root of affine D4 is q + 4.
        let q = Quiver::new(
            &["1", "2", "3", "4", "5"],
            &[("r1", "1", "5"), ("r2", "2", "5"), ("r3", "3", "5"), ("r4", "4", "5")],
        )
        .unwrap();
        let cfg = EnumConfig::default();
        for (p, m) in [(2, 1), (3, 1), (2, 2)] {
            let f = field(p, m);
            let n = f.size() as usize;
            let c = Catalog::build(&q, f, &[1, 1, 1, 1, 2], &cfg).unwrap();
            assert_eq!(c.indecomposable_count(), n + 4);
            assert_eq!(c.orbit_size_total(), c.space_size());
        }
    }

    #[test]
    fn budget_is_enforced() {
        let cfg = EnumConfig {
            cap_states: 10,
            ..EnumConfig::default()
        };
        let q = Quiver::new(&["1", "2", "3"], &[("r1", "1", "2"), ("r2", "2", "3")]).unwrap();
        let err = Catalog::build(&q, field(3, 1), &[2, 2, 2], &cfg).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }
}
