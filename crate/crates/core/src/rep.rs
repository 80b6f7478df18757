//! Representations of a quiver over a finite field.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec, FiniteField};
use crate::linalg::{block_diag, Matrix};
use crate::quiver::{Automorphism, Quiver};

/// Limits and seed for the searches over Hom and End spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest `|End(X)|` enumerated exhaustively.
    pub end_cap: u64,
    /// Largest `|Hom(X, Y)|` enumerated exhaustively.
    pub hom_cap: u64,
    pub seed: u64,
    /// Random elements tried before falling back to enumeration.
    pub random_trials: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            end_cap: 1 << 20,
            hom_cap: 1 << 20,
            seed: 0x5eed,
            random_trials: 200,
        }
    }
}

/// One matrix per vertex.
pub type Morphism = Vec<Matrix>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub field: Arc<FiniteField>,
    pub dims: Vec<usize>,
    /// `maps[r]` has shape `dims[target] x dims[source]`.
    pub maps: Vec<Matrix>,
}

impl Representation {
    pub fn new(q: &Quiver, field: Arc<FiniteField>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        if dims.len() != q.vertex_count() || maps.len() != q.arrow_count() {
            return Err(Error::LatticeMismatch(format!(
                "representation has {} spaces and {} maps for a quiver with {} vertices and {} arrows",
                dims.len(),
                maps.len(),
                q.vertex_count(),
                q.arrow_count()
            )));
        }
        for (r, m) in maps.iter().enumerate() {
            let a = q.arrow(r);
            if m.shape() != (dims[a.target], dims[a.source]) {
                return Err(Error::LatticeMismatch(format!(
                    "map `{}` has shape {:?}, expected {:?}",
                    a.id,
                    m.shape(),
                    (dims[a.target], dims[a.source])
                )));
            }
            if m.data().iter().any(|&x| x >= field.size()) {
                return Err(Error::BadParameter(format!("map `{}` has entries outside the field", a.id)));
            }
        }
        Ok(Representation { field, dims, maps })
    }

    pub fn zero(q: &Quiver, field: Arc<FiniteField>) -> Self {
        Self::with_dims_zero(q, field, vec![0; q.vertex_count()])
    }

    /// All maps zero.
    pub fn with_dims_zero(q: &Quiver, field: Arc<FiniteField>, dims: Vec<usize>) -> Self {
        let maps = q
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(dims[a.target], dims[a.source]))
            .collect();
        Representation { field, dims, maps }
    }

    pub fn simple(q: &Quiver, field: Arc<FiniteField>, i: usize) -> Self {
        let mut dims = vec![0; q.vertex_count()];
        dims[i] = 1;
        Self::with_dims_zero(q, field, dims)
    }

    pub fn dim_vector(&self) -> Vec<i64> {
        self.dims.iter().map(|&d| d as i64).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&i| self.dims[i] > 0).collect()
    }

    fn same_field(&self, other: &Representation) -> Result<()> {
        if self.field != other.field || self.dims.len() != other.dims.len() || self.maps.len() != other.maps.len()
        {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }
}

/// `X_1 (+) ... (+) X_k`.
pub fn direct_sum(q: &Quiver, parts: &[&Representation]) -> Result<Representation> {
    let Some(first) = parts.first() else {
        return Err(Error::BadParameter("empty direct sum".into()));
    };
    for p in parts {
        first.same_field(p)?;
    }
    let dims = (0..q.vertex_count()).map(|i| parts.iter().map(|p| p.dims[i]).sum()).collect();
    let maps = (0..q.arrow_count())
        .map(|r| block_diag(&parts.iter().map(|p| &p.maps[r]).collect::<Vec<_>>()))
        .collect();
    Ok(Representation {
        field: first.field.clone(),
        dims,
        maps,
    })
}

/// A basis of `Hom(X, Y)` together with the cokernel dimension of the
/// defining linear map `(phi_i) -> (phi_j X_r - Y_r phi_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomSpace {
    pub basis: Vec<Morphism>,
    pub coker_dim: usize,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn combine(&self, f: &FiniteField, coeffs: &[Elem]) -> Morphism {
        let mut out: Morphism = self.basis[0].iter().map(|m| Matrix::zeros(m.rows(), m.cols())).collect();
        for (b, &c) in self.basis.iter().zip(coeffs) {
            if c == 0 {
                continue;
            }
            for (o, m) in out.iter_mut().zip(b) {
                *o = o.add(f, &m.scale(f, c));
            }
        }
        out
    }
}

pub fn hom_space(q: &Quiver, x: &Representation, y: &Representation) -> Result<HomSpace> {
    x.same_field(y)?;
    let f = &*x.field;
    let n = q.vertex_count();
    let mut offset = vec![0; n + 1];
    for i in 0..n {
        offset[i + 1] = offset[i] + y.dims[i] * x.dims[i];
    }
    let unknowns = offset[n];
    let equations: usize = q.arrows().iter().map(|a| y.dims[a.target] * x.dims[a.source]).sum();
    let mut sys = Matrix::zeros(equations, unknowns);
    let mut row = 0;
    for (r, a) in q.arrows().iter().enumerate() {
        let (i, j) = (a.source, a.target);
        let (xr, yr) = (&x.maps[r], &y.maps[r]);
        for rr in 0..y.dims[j] {
            for c in 0..x.dims[i] {
                // phi_j[rr, k] * X_r[k, c]
                for k in 0..x.dims[j] {
                    let col = offset[j] + rr * x.dims[j] + k;
                    let v = f.add(sys.get(row, col), xr.get(k, c));
                    sys.set(row, col, v);
                }
                // - Y_r[rr, k] * phi_i[k, c]
                for k in 0..y.dims[i] {
                    let col = offset[i] + k * x.dims[i] + c;
                    let v = f.sub(sys.get(row, col), yr.get(rr, k));
                    sys.set(row, col, v);
                }
                row += 1;
            }
        }
    }
    let null = sys.nullspace(f);
    let rank = unknowns - null.cols();
    let basis = (0..null.cols())
        .map(|b| {
            (0..n)
                .map(|i| {
                    let data = (offset[i]..offset[i + 1]).map(|u| null.get(u, b)).collect();
                    Matrix::from_vec(y.dims[i], x.dims[i], data)
                })
                .collect()
        })
        .collect();
    Ok(HomSpace {
        basis,
        coker_dim: equations - rank,
    })
}

pub fn end_space(q: &Quiver, x: &Representation) -> Result<HomSpace> {
    hom_space(q, x, x)
}

fn mat_pow(f: &FiniteField, m: &Matrix, mut e: usize) -> Matrix {
    let mut base = m.clone();
    let mut acc = Matrix::identity(m.rows());
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(f, &base);
        }
        e >>= 1;
        if e > 0 {
            base = base.mul(f, &base);
        }
    }
    acc
}

/// `phi^N` with `N` large enough that the image and kernel have stabilised, if
/// `phi` is neither nilpotent nor invertible. Then `X = Im (+) Ker` is a proper
/// splitting.
fn fitting_power(f: &FiniteField, phi: &Morphism) -> Option<Morphism> {
    let big = phi.iter().map(Matrix::rows).max().unwrap_or(0);
    let psi: Morphism = phi.iter().map(|m| mat_pow(f, m, big)).collect();
    let nilpotent = psi.iter().all(Matrix::is_zero);
    let invertible = phi.iter().all(|m| m.is_invertible(f));
    (!nilpotent && !invertible).then_some(psi)
}

fn random_coeffs(rng: &mut ChaCha8Rng, q: u32, k: usize) -> Vec<Elem> {
    (0..k).map(|_| rng.gen_range(0..q)).collect()
}

/// Iterates over all coefficient vectors of length `k` over `F_q` in
/// lexicographic order, stopping when `visit` returns true.
fn exhaust(q: u32, k: usize, mut visit: impl FnMut(&[Elem]) -> bool) -> bool {
    let mut c = vec![0; k];
    loop {
        if visit(&c) {
            return true;
        }
        let mut pos = 0;
        loop {
            if pos == k {
                return false;
            }
            c[pos] += 1;
            if c[pos] < q {
                break;
            }
            c[pos] = 0;
            pos += 1;
        }
    }
}

fn within(q: u32, dim: usize, cap: u64) -> bool {
    (q as f64).powi(dim as i32) <= cap as f64
}

/// An endomorphism splitting `x` properly, or `None` when `x` is
/// indecomposable.
fn find_splitting(q: &Quiver, x: &Representation, cfg: &SearchConfig) -> Result<Option<Morphism>> {
    let f = &*x.field;
    let support = x.support();
    if support.is_empty() {
        return Ok(None);
    }
    if !q.is_connected_on(&support) {
        // Projection onto the component of the least supported vertex.
        let mut comp = vec![support[0]];
        let mut k = 0;
        while k < comp.len() {
            let u = comp[k];
            for &v in &support {
                if !comp.contains(&v) && q.edges_between(u, v) > 0 {
                    comp.push(v);
                }
            }
            k += 1;
        }
        let proj = (0..x.dims.len())
            .map(|i| {
                if comp.contains(&i) {
                    Matrix::identity(x.dims[i])
                } else {
                    Matrix::zeros(x.dims[i], x.dims[i])
                }
            })
            .collect();
        return Ok(Some(proj));
    }
    let end = end_space(q, x)?;
    let k = end.dim();
    if k <= 1 {
        return Ok(None);
    }
    for b in &end.basis {
        if let Some(psi) = fitting_power(f, b) {
            return Ok(Some(psi));
        }
    }
    for s in 0..k {
        for t in s + 1..k {
            let mut c = vec![0; k];
            c[s] = 1;
            c[t] = 1;
            if let Some(psi) = fitting_power(f, &end.combine(f, &c)) {
                return Ok(Some(psi));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.random_trials {
        let c = random_coeffs(&mut rng, f.size(), k);
        if let Some(psi) = fitting_power(f, &end.combine(f, &c)) {
            return Ok(Some(psi));
        }
    }
    if !within(f.size(), k, cfg.end_cap) {
        return Err(Error::EndRingTooLarge { q: f.size(), dim: k });
    }
    let mut found = None;
    exhaust(f.size(), k, |c| {
        found = fitting_power(f, &end.combine(f, c));
        found.is_some()
    });
    Ok(found)
}

/// Indecomposable iff `End(X)` is local, i.e. its only idempotents are `0` and
/// `1`. Every element of a local ring is nilpotent or invertible, so an element
/// that is neither witnesses a splitting.
pub fn is_indecomposable(q: &Quiver, x: &Representation, cfg: &SearchConfig) -> Result<bool> {
    if x.is_zero() {
        return Ok(false);
    }
    Ok(find_splitting(q, x, cfg)?.is_none())
}

/// Restriction of `x` to the subrepresentation spanned by the columns of
/// `bases[i]` at each vertex.
fn restrict(q: &Quiver, x: &Representation, bases: &[Matrix]) -> Representation {
    let f = &*x.field;
    let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(r, a)| {
            let img = x.maps[r].mul(f, &bases[a.source]);
            let cols: Vec<Vec<Elem>> = (0..img.cols())
                .map(|c| {
                    bases[a.target]
                        .solve(f, &img.column(c))
                        .expect("subrepresentation is closed under the arrow maps")
                })
                .collect();
            Matrix::from_columns(dims[a.target], &cols)
        })
        .collect();
    Representation {
        field: x.field.clone(),
        dims,
        maps,
    }
}

/// Indecomposable summands, sorted by dimension vector and then matrices.
pub fn decompose(q: &Quiver, x: &Representation, cfg: &SearchConfig) -> Result<Vec<Representation>> {
    let mut out = Vec::new();
    let mut stack = vec![x.clone()];
    while let Some(y) = stack.pop() {
        if y.is_zero() {
            continue;
        }
        match find_splitting(q, &y, cfg)? {
            None => out.push(y),
            Some(psi) => {
                let f = &*y.field;
                let im: Vec<Matrix> = psi.iter().map(|m| m.column_space(f)).collect();
                let ker: Vec<Matrix> = psi.iter().map(|m| m.nullspace(f)).collect();
                stack.push(restrict(q, &y, &im));
                stack.push(restrict(q, &y, &ker));
            }
        }
    }
    out.sort_by(|a, b| a.dims.cmp(&b.dims).then_with(|| a.maps.cmp(&b.maps)));
    Ok(out)
}

fn is_iso_map(f: &FiniteField, phi: &Morphism) -> bool {
    phi.iter().all(|m| m.is_invertible(f))
}

/// Whether some element of `Hom(X, Y)` is invertible at every vertex.
pub fn is_isomorphic(q: &Quiver, x: &Representation, y: &Representation, cfg: &SearchConfig) -> Result<bool> {
    x.same_field(y)?;
    if x.dims != y.dims {
        return Ok(false);
    }
    if x.is_zero() {
        return Ok(true);
    }
    let f = &*x.field;
    if x.maps.iter().zip(&y.maps).any(|(a, b)| a.rank(f) != b.rank(f)) {
        return Ok(false);
    }
    let hom = hom_space(q, x, y)?;
    let k = hom.dim();
    if k == 0 || k != end_space(q, x)?.dim() || k != end_space(q, y)?.dim() {
        return Ok(false);
    }
    if hom.basis.iter().any(|b| is_iso_map(f, b)) {
        return Ok(true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.random_trials {
        let c = random_coeffs(&mut rng, f.size(), k);
        if is_iso_map(f, &hom.combine(f, &c)) {
            return Ok(true);
        }
    }
    if !within(f.size(), k, cfg.hom_cap) {
        return Err(Error::HomSpaceTooLarge { q: f.size(), dim: k });
    }
    Ok(exhaust(f.size(), k, |c| is_iso_map(f, &hom.combine(f, c))))
}

/// `(aX)_{a(i)} = X_i` and `(aX)_{a(r)} = X_r`.
pub fn twist_auto(a: &Automorphism, x: &Representation) -> Representation {
    let mut dims = vec![0; x.dims.len()];
    for (i, &d) in x.dims.iter().enumerate() {
        dims[a.vertex(i)] = d;
    }
    let mut maps = x.maps.clone();
    for (r, m) in x.maps.iter().enumerate() {
        maps[a.arrow(r)] = m.clone();
    }
    Representation {
        field: x.field.clone(),
        dims,
        maps,
    }
}

/// Raises every matrix entry to the power `p^s`.
pub fn twist_frobenius(s: u32, x: &Representation) -> Representation {
    let f = &*x.field;
    Representation {
        field: x.field.clone(),
        dims: x.dims.clone(),
        maps: x.maps.iter().map(|m| m.map_entries(|e| f.frobenius(s, e))).collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    /// At a sink.
    Plus,
    /// At a source.
    Minus,
}

/// `R_i^+` at a sink or `R_i^-` at a source. Returns the reflected quiver, whose
/// arrows keep their indices and ids.
pub fn reflection_functor(
    q: &Quiver,
    i: usize,
    dir: Direction,
    x: &Representation,
) -> Result<(Quiver, Representation)> {
    let f = &*x.field;
    let incident: Vec<usize> = (0..q.arrow_count())
        .filter(|&r| q.arrow(r).source == i || q.arrow(r).target == i)
        .collect();
    let others: Vec<usize> = incident
        .iter()
        .map(|&r| {
            let a = q.arrow(r);
            if a.source == i {
                a.target
            } else {
                a.source
            }
        })
        .collect();
    let total: usize = others.iter().map(|&j| x.dims[j]).sum();
    let mut dims = x.dims.clone();
    let mut maps = x.maps.clone();
    match dir {
        Direction::Plus => {
            if !q.is_sink(i) {
                return Err(Error::NotSink(q.vertex_id(i).to_string()));
            }
            // h = [X_r1 | X_r2 | ...] : (+) X_j -> X_i
            let mut h = Matrix::zeros(x.dims[i], total);
            let mut c0 = 0;
            for (&r, &j) in incident.iter().zip(&others) {
                for rr in 0..x.dims[i] {
                    for c in 0..x.dims[j] {
                        h.set(rr, c0 + c, x.maps[r].get(rr, c));
                    }
                }
                c0 += x.dims[j];
            }
            let k = h.nullspace(f);
            dims[i] = k.cols();
            let mut r0 = 0;
            for (&r, &j) in incident.iter().zip(&others) {
                let mut m = Matrix::zeros(x.dims[j], k.cols());
                for rr in 0..x.dims[j] {
                    for c in 0..k.cols() {
                        m.set(rr, c, k.get(r0 + rr, c));
                    }
                }
                maps[r] = m;
                r0 += x.dims[j];
            }
        }
        Direction::Minus => {
            if !q.is_source(i) {
                return Err(Error::NotSource(q.vertex_id(i).to_string()));
            }
            // h = [X_r1; X_r2; ...] : X_i -> (+) X_j
            let mut h = Matrix::zeros(total, x.dims[i]);
            let mut r0 = 0;
            for (&r, &j) in incident.iter().zip(&others) {
                for rr in 0..x.dims[j] {
                    for c in 0..x.dims[i] {
                        h.set(r0 + rr, c, x.maps[r].get(rr, c));
                    }
                }
                r0 += x.dims[j];
            }
            let p = h.cokernel_map(f);
            dims[i] = p.rows();
            let mut c0 = 0;
            for (&r, &j) in incident.iter().zip(&others) {
                let mut m = Matrix::zeros(p.rows(), x.dims[j]);
                for rr in 0..p.rows() {
                    for c in 0..x.dims[j] {
                        m.set(rr, c, p.get(rr, c0 + c));
                    }
                }
                maps[r] = m;
                c0 += x.dims[j];
            }
        }
    }
    let q2 = q.reflect_at(i);
    Ok((
        q2,
        Representation {
            field: x.field.clone(),
            dims,
            maps,
        },
    ))
}

/// `S_i^{+/-}`: the reflection functors over every vertex of an orbit.
pub fn s_fold_functor(
    q: &Quiver,
    orbit: &[usize],
    dir: Direction,
    x: &Representation,
) -> Result<(Quiver, Representation)> {
    let mut cur = (q.clone(), x.clone());
    for &i in orbit {
        cur = reflection_functor(&cur.0, i, dir, &cur.1)?;
    }
    Ok(cur)
}

/// The least `r >= 1` with `a^r Z ~= Z`, and `Z (+) aZ (+) ... (+) a^{r-1} Z`.
pub fn ii_orbit_sum(
    q: &Quiver,
    a: &Automorphism,
    z: &Representation,
    cfg: &SearchConfig,
) -> Result<(Representation, usize)> {
    let mut twists = vec![z.clone()];
    loop {
        let next = twist_auto(a, twists.last().expect("non-empty"));
        if is_isomorphic(q, &next, z, cfg)? {
            break;
        }
        twists.push(next);
    }
    let parts: Vec<&Representation> = twists.iter().collect();
    Ok((direct_sum(q, &parts)?, twists.len()))
}

/// Representation file: field spec, dimension vector, and row-major matrices
/// keyed by arrow id, entries as field element codes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationFile {
    pub field: String,
    pub dims: Vec<usize>,
    pub maps: BTreeMap<String, Vec<Vec<Elem>>>,
}

impl RepresentationFile {
    pub fn from_rep(q: &Quiver, x: &Representation) -> Self {
        RepresentationFile {
            field: x.field.spec().to_string(),
            dims: x.dims.clone(),
            maps: q
                .arrows()
                .iter()
                .zip(&x.maps)
                .map(|(a, m)| (a.id.clone(), m.to_rows()))
                .collect(),
        }
    }

    pub fn parse(json: &str) -> Result<Self> {
        Ok(serde_json::from_str(json)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("representation files serialise")
    }

    /// Builds the representation, reusing `field` when it matches the file.
    pub fn build(&self, q: &Quiver, field: Option<Arc<FiniteField>>) -> Result<Representation> {
        let spec: FieldSpec = self.field.parse()?;
        let field = match field {
            Some(f) if f.spec() == spec => f,
            Some(_) => return Err(Error::FieldMismatch),
            None => Arc::new(FiniteField::from_spec(spec)?),
        };
        let maps = q
            .arrows()
            .iter()
            .map(|a| {
                let (rows, cols) = (self.dims[a.target], self.dims[a.source]);
                match self.maps.get(&a.id) {
                    None => Ok(Matrix::zeros(rows, cols)),
                    Some(m) if m.len() == rows && m.iter().all(|row| row.len() == cols) => {
                        let data = m.iter().flatten().copied().collect();
                        Ok(Matrix::from_vec(rows, cols, data))
                    }
                    Some(_) => Err(Error::LatticeMismatch(format!("map `{}` has the wrong shape", a.id))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        if self.dims.len() != q.vertex_count() {
            return Err(Error::LatticeMismatch("dimension vector length".into()));
        }
        if let Some(extra) = self.maps.keys().find(|k| q.arrow_index(k).is_none()) {
            return Err(Error::UnknownVertex(extra.clone()));
        }
        Representation::new(q, field, self.dims.clone(), maps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u32, m: u32) -> Arc<FiniteField> {
        Arc::new(FiniteField::new(p, m).unwrap())
    }

    fn a2() -> Quiver {
        Quiver::new(&["1", "2"], &[("r", "1", "2")]).unwrap()
    }

    fn p1(f: Arc<FiniteField>) -> Representation {
        Representation::new(&a2(), f, vec![1, 1], vec![Matrix::identity(1)]).unwrap()
    }

    #[test]
    fn hom_dimensions_on_a2() {
        let q = a2();
        let f = field(2, 1);
        let s1 = Representation::simple(&q, f.clone(), 0);
        let s2 = Representation::simple(&q, f.clone(), 1);
        assert_eq!(hom_space(&q, &s1, &s2).unwrap().dim(), 0);
        assert_eq!(hom_space(&q, &s1, &s1).unwrap().dim(), 1);
        // S2 is the socle of P1 and S1 its top.
        assert_eq!(hom_space(&q, &p1(f.clone()), &s2).unwrap().dim(), 0);
        assert_eq!(hom_space(&q, &s2, &p1(f.clone())).unwrap().dim(), 1);
        assert_eq!(hom_space(&q, &p1(f.clone()), &s1).unwrap().dim(), 1);
        let other = Representation::simple(&q, field(3, 1), 0);
        assert_eq!(hom_space(&q, &s1, &other), Err(Error::FieldMismatch));
    }

    #[test]
    fn indecomposability() {
        let q = a2();
        let f = field(3, 1);
        let cfg = SearchConfig::default();
        let s1 = Representation::simple(&q, f.clone(), 0);
        assert!(is_indecomposable(&q, &s1, &cfg).unwrap());
        let ss = direct_sum(&q, &[&s1, &s1]).unwrap();
        assert!(!is_indecomposable(&q, &ss, &cfg).unwrap());
        assert!(is_indecomposable(&q, &p1(f.clone()), &cfg).unwrap());
        let s2 = Representation::simple(&q, f.clone(), 1);
        let parts = decompose(&q, &direct_sum(&q, &[&s2, &s1]).unwrap(), &cfg).unwrap();
        assert_eq!(parts, vec![s2.clone(), s1.clone()]);
        assert_eq!(decompose(&q, &p1(f.clone()), &cfg).unwrap(), vec![p1(f)]);
    }

    #[test]
    fn isomorphism() {
        let q = a2();
        let f = field(5, 1);
        let cfg = SearchConfig::default();
        let s1 = Representation::simple(&q, f.clone(), 0);
        let s2 = Representation::simple(&q, f.clone(), 1);
        assert!(is_isomorphic(&q, &s1, &s1, &cfg).unwrap());
        assert!(!is_isomorphic(&q, &s1, &s2, &cfg).unwrap());
        let scaled = Representation::new(&q, f.clone(), vec![1, 1], vec![Matrix::from_rows(&[vec![3]])]).unwrap();
        assert!(is_isomorphic(&q, &scaled, &p1(f.clone()), &cfg).unwrap());
        let zero = Representation::with_dims_zero(&q, f, vec![1, 1]);
        assert!(!is_isomorphic(&q, &zero, &scaled, &cfg).unwrap());
    }

    #[test]
    fn twists() {
        let q = Quiver::new(&["1", "2", "3"], &[("r1", "1", "2"), ("r3", "3", "2")]).unwrap();
        let a = Automorphism::new(&q, vec![2, 1, 0], vec![1, 0]).unwrap();
        let f = field(2, 2);
        let s1 = Representation::simple(&q, f.clone(), 0);
        assert_eq!(twist_auto(&a, &s1), Representation::simple(&q, f.clone(), 2));
        assert_eq!(twist_auto(&Automorphism::identity(&q), &s1), s1);
        let x = Representation::new(
            &q,
            f.clone(),
            vec![1, 1, 0],
            vec![Matrix::from_rows(&[vec![2]]), Matrix::zeros(1, 0)],
        )
        .unwrap();
        let y = twist_frobenius(1, &x);
        assert_eq!(y.maps[0].get(0, 0), 3);
        assert_eq!(twist_frobenius(1, &y), x);
        let (sum, r) = ii_orbit_sum(&q, &a, &s1, &SearchConfig::default()).unwrap();
        assert_eq!(r, 2);
        assert_eq!(sum.dims, vec![1, 0, 1]);
    }

    #[test]
    fn reflection_functors_on_a2() {
        let q = a2();
        let f = field(2, 1);
        let s2 = Representation::simple(&q, f.clone(), 1);
        let (q2, y) = reflection_functor(&q, 1, Direction::Plus, &s2).unwrap();
        assert!(y.is_zero());
        assert!(q2.is_source(1));
        let (_, y) = reflection_functor(&q, 1, Direction::Plus, &p1(f.clone())).unwrap();
        assert_eq!(y.dims, vec![1, 0]);
        assert!(matches!(
            reflection_functor(&q, 0, Direction::Plus, &s2),
            Err(Error::NotSink(_))
        ));
        assert!(matches!(
            reflection_functor(&q, 1, Direction::Minus, &s2),
            Err(Error::NotSource(_))
        ));
        // R^- at the source 1 of the reflected quiver undoes R^+ on P1.
        let (q2, y) = reflection_functor(&q, 1, Direction::Plus, &p1(f.clone())).unwrap();
        let (q3, z) = reflection_functor(&q2, 1, Direction::Minus, &y).unwrap();
        assert_eq!(q3, q);
        assert!(is_isomorphic(&q, &z, &p1(f), &SearchConfig::default()).unwrap());
    }

    #[test]
    fn file_roundtrip() {
        let q = a2();
        let x = p1(field(2, 2));
        let file = RepresentationFile::from_rep(&q, &x);
        let back = RepresentationFile::parse(&file.to_json()).unwrap().build(&q, None).unwrap();
        assert_eq!(back, x);
    }
}
