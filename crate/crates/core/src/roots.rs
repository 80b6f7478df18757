//! Reflections, root classification by descent, bounded root enumeration, the
//! null root and the defect.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use num_integer::Integer;
use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::cartan::{bilinear, euler_form, FoldData, IntMatrix, SymmetricGcm, ValuedQuiver};
use crate::error::{Error, Result};
use crate::linalg::rational_kernel;
use crate::quiver::{act, connected, Automorphism, Quiver};

/// Default cap on the number of stored roots.
pub const DEFAULT_ROOT_CAP: usize = 1_000_000;

/// A lattice `Z^I` with a symmetric form `B` and symmetriser `d` such that
/// `d_i` divides every entry of row `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootLattice {
    pub b: IntMatrix,
    pub d: Vec<i64>,
    pub labels: Vec<String>,
}

impl RootLattice {
    pub fn new(b: IntMatrix, d: Vec<i64>, labels: Vec<String>) -> Result<Self> {
        let n = d.len();
        if b.len() != n || labels.len() != n || b.iter().any(|r| r.len() != n) {
            return Err(Error::LatticeMismatch("matrix and symmetriser sizes differ".into()));
        }
        for i in 0..n {
            if d[i] < 1 || b[i][i] != 2 * d[i] {
                return Err(Error::BadParameter(format!("diagonal entry {i} is not 2 d_i")));
            }
            for j in 0..n {
                if b[i][j] != b[j][i] || (i != j && b[i][j] > 0) || b[i][j] % d[i] != 0 {
                    return Err(Error::BadParameter(format!("entry ({i}, {j}) is invalid")));
                }
            }
        }
        Ok(RootLattice { b, d, labels })
    }

    pub fn from_quiver(q: &Quiver) -> Self {
        RootLattice {
            b: SymmetricGcm::new(q).matrix,
            d: vec![1; q.vertex_count()],
            labels: q.vertex_ids().to_vec(),
        }
    }

    pub fn from_fold(f: &FoldData) -> Self {
        RootLattice {
            b: f.b.clone(),
            d: f.d.clone(),
            labels: f.valued.labels.clone(),
        }
    }

    pub fn from_valued(vq: &ValuedQuiver) -> Self {
        RootLattice {
            b: vq.b_matrix(),
            d: vq.d.clone(),
            labels: vq.labels.clone(),
        }
    }

    pub fn rank(&self) -> usize {
        self.d.len()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn form(&self, x: &[i64], y: &[i64]) -> i64 {
        bilinear(&self.b, x, y)
    }

    /// `(v, e_i)`.
    pub fn pairing(&self, v: &[i64], i: usize) -> i64 {
        self.b[i].iter().zip(v).map(|(a, b)| a * b).sum()
    }

    /// `r_i(v) = v - (v, e_i) / d_i * e_i`.
    pub fn reflect(&self, i: usize, v: &[i64]) -> Result<Vec<i64>> {
        if i >= self.rank() {
            return Err(Error::UnknownVertex(i.to_string()));
        }
        self.check_len(v)?;
        let mut out = v.to_vec();
        self.reflect_in_place(i, &mut out);
        Ok(out)
    }

    fn reflect_in_place(&self, i: usize, v: &mut [i64]) {
        let c = self.pairing(v, i) / self.d[i];
        v[i] -= c;
    }

    fn check_len(&self, v: &[i64]) -> Result<()> {
        if v.len() != self.rank() {
            return Err(Error::LatticeMismatch(format!(
                "vector of length {} in a lattice of rank {}",
                v.len(),
                self.rank()
            )));
        }
        Ok(())
    }

    pub fn support_connected(&self, v: &[i64]) -> bool {
        let set: HashSet<usize> = (0..v.len()).filter(|&i| v[i] != 0).collect();
        connected(&set, |i, j| self.b[i][j] != 0)
    }

    fn simple_index(v: &[i64]) -> Option<usize> {
        let mut idx = None;
        for (i, &x) in v.iter().enumerate() {
            match x {
                0 => {}
                1 if idx.is_none() => idx = Some(i),
                _ => return None,
            }
        }
        idx
    }

    /// Is `v` in the fundamental region: positive, all pairings `<= 0`, connected
    /// support.
    pub fn in_fundamental_region(&self, v: &[i64]) -> bool {
        v.iter().all(|&x| x >= 0)
            && v.iter().any(|&x| x > 0)
            && (0..self.rank()).all(|i| self.pairing(v, i) <= 0)
            && self.support_connected(v)
    }

    /// Height-descent classification.
    pub fn classify(&self, v: &[i64]) -> Result<RootClassification> {
        self.check_len(v)?;
        if v.iter().all(|&x| x == 0) {
            return Err(Error::ZeroVector);
        }
        let sign = if v.iter().all(|&x| x >= 0) {
            Sign::Positive
        } else if v.iter().all(|&x| x <= 0) {
            Sign::Negative
        } else {
            return Ok(RootClassification {
                verdict: Verdict::NonRoot {
                    reason: "mixed signs".into(),
                },
                sign: Sign::Positive,
            });
        };
        let mut cur: Vec<i64> = v.iter().map(|x| x.abs()).collect();
        let mut witness = Vec::new();
        let verdict = loop {
            if let Some(i) = Self::simple_index(&cur) {
                break Verdict::Real { witness, simple: i };
            }
            match (0..self.rank()).find(|&i| self.pairing(&cur, i) > 0) {
                Some(i) => {
                    self.reflect_in_place(i, &mut cur);
                    witness.push(i);
                    if cur[i] < 0 {
                        break Verdict::NonRoot {
                            reason: format!("coordinate {i} turned negative after {witness:?}"),
                        };
                    }
                }
                None if self.support_connected(&cur) => {
                    break Verdict::Imaginary {
                        witness,
                        landing: cur,
                    }
                }
                None => {
                    break Verdict::NonRoot {
                        reason: format!("{cur:?} has disconnected support"),
                    }
                }
            }
        };
        Ok(RootClassification { verdict, sign })
    }

    /// All positive roots of height at most `h`.
    pub fn positive_roots_up_to(&self, h: i64, cap: usize) -> Result<RootSet> {
        if h < 1 {
            return Err(Error::BadParameter("height bound must be at least 1".into()));
        }
        let n = self.rank();
        let mut kinds: BTreeMap<Vec<i64>, RootKind> = BTreeMap::new();
        let mut queue = VecDeque::new();
        let budget = |len: usize| -> Result<()> {
            if len > cap {
                return Err(Error::BudgetExceeded {
                    what: "stored roots".into(),
                    predicted: len as u128,
                    cap: cap as u128,
                });
            }
            Ok(())
        };
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            kinds.insert(e.clone(), RootKind::Real);
            queue.push_back(e);
        }
        let mut candidates = 0usize;
        let mut seeds = Vec::new();
        for_each_vector(n, h, &mut |v| {
            candidates += 1;
            if self.in_fundamental_region(v) {
                seeds.push(v.to_vec());
            }
            candidates <= cap.saturating_mul(16)
        });
        if candidates > cap.saturating_mul(16) {
            return Err(Error::BudgetExceeded {
                what: "fundamental region candidates".into(),
                predicted: candidates as u128,
                cap: cap.saturating_mul(16) as u128,
            });
        }
        for s in seeds {
            kinds.insert(s.clone(), RootKind::Imaginary);
            queue.push_back(s);
        }
        budget(kinds.len())?;
        while let Some(v) = queue.pop_front() {
            let kind = kinds[&v];
            let height: i64 = v.iter().sum();
            for i in 0..n {
                let c = self.pairing(&v, i) / self.d[i];
                if c >= 0 || height - c > h {
                    continue;
                }
                let mut w = v.clone();
                w[i] -= c;
                if !kinds.contains_key(&w) {
                    kinds.insert(w.clone(), kind);
                    budget(kinds.len())?;
                    queue.push_back(w);
                }
            }
        }
        let mut roots: Vec<RootEntry> = kinds
            .into_iter()
            .map(|(vector, kind)| RootEntry { vector, kind })
            .collect();
        roots.sort_by(|a, b| {
            let (ha, hb): (i64, i64) = (a.vector.iter().sum(), b.vector.iter().sum());
            ha.cmp(&hb).then_with(|| a.vector.cmp(&b.vector))
        });
        Ok(RootSet { roots })
    }

    /// The primitive positive generator of the radical, if the radical has rank
    /// one and is spanned by a non-negative vector.
    pub fn null_root(&self) -> Option<Vec<i64>> {
        let ker = rational_kernel(&self.b);
        if ker.len() != 1 {
            return None;
        }
        let v = &ker[0];
        let den = v.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
        let mut ints: Vec<i64> = v.iter().map(|x| (x * Rational64::from(den)).to_integer()).collect();
        let g = ints.iter().fold(0i64, |acc, x| acc.gcd(x));
        for x in &mut ints {
            *x /= g;
        }
        if ints.iter().all(|&x| x <= 0) {
            for x in &mut ints {
                *x = -*x;
            }
        }
        ints.iter().all(|&x| x >= 0).then_some(ints)
    }
}

/// Calls `visit` on every non-negative vector of length `n` with height in
/// `1..=h`, stopping early when `visit` returns false.
pub fn for_each_vector(n: usize, h: i64, visit: &mut dyn FnMut(&[i64]) -> bool) {
    fn rec(v: &mut Vec<i64>, pos: usize, left: i64, visit: &mut dyn FnMut(&[i64]) -> bool) -> bool {
        if pos == v.len() {
            if v.iter().any(|&x| x > 0) {
                return visit(v);
            }
            return true;
        }
        for x in 0..=left {
            v[pos] = x;
            if !rec(v, pos + 1, left - x, visit) {
                return false;
            }
        }
        v[pos] = 0;
        true
    }
    let mut v = vec![0; n];
    rec(&mut v, 0, h, visit);
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Verdict {
    /// Reflecting at `witness` in order reaches the simple root `e_simple`.
    Real { witness: Vec<usize>, simple: usize },
    /// Reflecting at `witness` in order reaches `landing` in the fundamental region.
    Imaginary { witness: Vec<usize>, landing: Vec<i64> },
    NonRoot { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootClassification {
    #[serde(flatten)]
    pub verdict: Verdict,
    pub sign: Sign,
}

impl RootClassification {
    pub fn is_root(&self) -> bool {
        !matches!(self.verdict, Verdict::NonRoot { .. })
    }

    pub fn kind(&self) -> Option<RootKind> {
        match self.verdict {
            Verdict::Real { .. } => Some(RootKind::Real),
            Verdict::Imaginary { .. } => Some(RootKind::Imaginary),
            Verdict::NonRoot { .. } => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootKind {
    Real,
    Imaginary,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootEntry {
    pub vector: Vec<i64>,
    pub kind: RootKind,
}

/// Roots sorted by height, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootSet {
    pub roots: Vec<RootEntry>,
}

impl RootSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.roots.iter().any(|r| r.vector == v)
    }

    pub fn kind_of(&self, v: &[i64]) -> Option<RootKind> {
        self.roots.iter().find(|r| r.vector == v).map(|r| r.kind)
    }

    pub fn vectors(&self) -> BTreeSet<Vec<i64>> {
        self.roots.iter().map(|r| r.vector.clone()).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("root sets serialise")
    }
}

/// `s_i`: the product of the quiver reflections over the orbit `orbit`.
pub fn s_fold(q: &Quiver, orbit: &[usize], v: &[i64]) -> Vec<i64> {
    let lat = RootLattice::from_quiver(q);
    let mut out = v.to_vec();
    for &i in orbit {
        lat.reflect_in_place(i, &mut out);
    }
    out
}

/// Preimages of one folded root under `beta -> f(sigma(beta))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Preimage {
    pub folded: Vec<i64>,
    pub kind: RootKind,
    /// `a`-orbits of quiver roots mapping to `folded`, each orbit sorted.
    pub orbits: Vec<Vec<Vec<i64>>>,
    pub all_real: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaImageReport {
    pub height: i64,
    pub image: Vec<Vec<i64>>,
    pub folded_roots: RootSet,
    pub preimages: Vec<Preimage>,
}

impl SigmaImageReport {
    /// Image equals the folded positive roots, and every real folded root has a
    /// single orbit of real preimages.
    pub fn holds(&self) -> bool {
        self.image.iter().cloned().collect::<BTreeSet<_>>() == self.folded_roots.vectors()
            && self
                .preimages
                .iter()
                .filter(|p| p.kind == RootKind::Real)
                .all(|p| p.orbits.len() == 1 && p.all_real)
    }
}

/// Compares `{f(sigma(beta))}` over the positive roots of `Q` with the positive
/// roots of the folded lattice, up to folded height `h`.
pub fn sigma_root_image(q: &Quiver, a: &Automorphism, h: i64, cap: usize) -> Result<SigmaImageReport> {
    let fold = FoldData::new(q, a);
    let n = a.order() as i64;
    let quiver_roots = RootLattice::from_quiver(q).positive_roots_up_to(n * h, cap)?;
    let folded_roots = RootLattice::from_fold(&fold).positive_roots_up_to(h, cap)?;
    let mut by_image: BTreeMap<Vec<i64>, Vec<&RootEntry>> = BTreeMap::new();
    for r in &quiver_roots.roots {
        let s = crate::cartan::sigma(a, &r.vector);
        let w = fold.f_map(a, &s)?;
        if w.iter().sum::<i64>() <= h {
            by_image.entry(w).or_default().push(r);
        }
    }
    let image: Vec<Vec<i64>> = by_image.keys().cloned().collect();
    let mut preimages = Vec::new();
    for entry in &folded_roots.roots {
        let pre = by_image.get(&entry.vector).cloned().unwrap_or_default();
        let mut orbits: BTreeSet<Vec<Vec<i64>>> = BTreeSet::new();
        for r in &pre {
            orbits.insert(orbit_of_vector(a, &r.vector));
        }
        preimages.push(Preimage {
            folded: entry.vector.clone(),
            kind: entry.kind,
            orbits: orbits.into_iter().collect(),
            all_real: pre.iter().all(|r| r.kind == RootKind::Real),
        });
    }
    Ok(SigmaImageReport {
        height: h,
        image,
        folded_roots,
        preimages,
    })
}

/// The `a`-orbit of a lattice vector, sorted.
pub fn orbit_of_vector(a: &Automorphism, v: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![v.to_vec()];
    let mut cur = act(a, v);
    while cur != v {
        out.push(cur.clone());
        cur = act(a, &cur);
    }
    out.sort();
    out
}

/// `defect(x) = <delta, x>`.
pub fn defect(q: &Quiver, x: &[i64]) -> Result<i64> {
    let delta = RootLattice::from_quiver(q).null_root().ok_or(Error::NoNullRoot)?;
    if x.len() != delta.len() {
        return Err(Error::LatticeMismatch("defect of a vector of the wrong length".into()));
    }
    Ok(euler_form(q, &delta, x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge21() -> RootLattice {
        RootLattice::new(
            vec![vec![4, -2], vec![-2, 2]],
            vec![2, 1],
            vec!["i".into(), "j".into()],
        )
        .unwrap()
    }

    fn edge41() -> RootLattice {
        RootLattice::new(
            vec![vec![8, -4], vec![-4, 2]],
            vec![4, 1],
            vec!["i".into(), "j".into()],
        )
        .unwrap()
    }

    fn a2() -> Quiver {
        Quiver::new(&["1", "2"], &[("r", "1", "2")]).unwrap()
    }

    #[test]
    fn folded_reflections() {
        let l = edge21();
        assert_eq!(l.reflect(0, &[0, 1]).unwrap(), vec![1, 1]);
        assert_eq!(l.reflect(1, &[1, 0]).unwrap(), vec![1, 2]);
        assert_eq!(l.reflect(0, &[1, 0]).unwrap(), vec![-1, 0]);
        assert!(matches!(l.reflect(2, &[1, 0]), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn s_fold_on_a3() {
        let q = Quiver::new(&["1", "2", "3"], &[("r1", "1", "2"), ("r3", "3", "2")]).unwrap();
        assert_eq!(s_fold(&q, &[0, 2], &[0, 1, 0]), vec![1, 1, 1]);
        assert_eq!(s_fold(&q, &[1], &[1, 0, 1]), vec![1, 2, 1]);
    }

    #[test]
    fn classify_examples() {
        let c = edge21().classify(&[1, 2]).unwrap();
        assert_eq!(c.kind(), Some(RootKind::Real));
        let c = edge41().classify(&[1, 2]).unwrap();
        assert_eq!(c.kind(), Some(RootKind::Imaginary));
        let c = edge21().classify(&[0, 1]).unwrap();
        assert_eq!(
            c.verdict,
            Verdict::Real {
                witness: vec![],
                simple: 1
            }
        );
        let c = edge21().classify(&[-1, -1]).unwrap();
        assert_eq!(c.sign, Sign::Negative);
        assert!(c.is_root());
        assert!(!edge21().classify(&[1, -1]).unwrap().is_root());
        assert!(!edge21().classify(&[2, 0]).unwrap().is_root());
        assert_eq!(edge21().classify(&[0, 0]), Err(Error::ZeroVector));
    }

    #[test]
    fn bounded_enumeration() {
        let roots = edge21().positive_roots_up_to(4, DEFAULT_ROOT_CAP).unwrap();
        let want: BTreeSet<Vec<i64>> = [vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]].into();
        assert_eq!(roots.vectors(), want);
        assert!(roots.roots.iter().all(|r| r.kind == RootKind::Real));
        let roots = RootLattice::from_quiver(&a2()).positive_roots_up_to(3, DEFAULT_ROOT_CAP).unwrap();
        assert_eq!(roots.len(), 3);
        let roots = edge41().positive_roots_up_to(3, DEFAULT_ROOT_CAP).unwrap();
        assert_eq!(roots.kind_of(&[1, 2]), Some(RootKind::Imaginary));
        assert!(matches!(
            edge41().positive_roots_up_to(20, 5),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn null_roots() {
        assert_eq!(edge41().null_root(), Some(vec![1, 2]));
        assert_eq!(RootLattice::from_quiver(&a2()).null_root(), None);
    }

    #[test]
    fn sigma_image_a3() {
        let q = Quiver::new(&["1", "2", "3"], &[("r1", "1", "2"), ("r3", "3", "2")]).unwrap();
        let a = Automorphism::new(&q, vec![2, 1, 0], vec![1, 0]).unwrap();
        let rep = sigma_root_image(&q, &a, 4, DEFAULT_ROOT_CAP).unwrap();
        assert_eq!(rep.image, vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![1, 2]]);
        assert!(rep.holds());
        let pre = rep.preimages.iter().find(|p| p.folded == vec![1, 2]).unwrap();
        assert_eq!(pre.orbits, vec![vec![vec![0, 1, 1], vec![1, 1, 0]]]);
    }
}
