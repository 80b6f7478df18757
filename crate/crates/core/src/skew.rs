//! Unfolding valued quivers and building the skew quiver of a pair `(Q, a)`.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::cartan::{FoldData, ValuedQuiver};
use crate::error::{Error, Result};
use crate::quiver::{Arrow, Automorphism, OrbitStructure, Quiver};
use crate::roots::{orbit_of_vector, Preimage, RootEntry, RootKind, RootLattice, SigmaImageReport};

/// Default vertex cap for [`double_skew_check`].
pub const DEFAULT_VERTEX_CAP: usize = 10;

/// Unfolds a valued quiver into a quiver with an admissible automorphism whose
/// fold is the original valued quiver.
pub fn unfold(vq: &ValuedQuiver) -> Result<(Quiver, Automorphism)> {
    let mut offsets = Vec::with_capacity(vq.vertex_count());
    let mut vertices = Vec::new();
    for (i, label) in vq.labels.iter().enumerate() {
        offsets.push(vertices.len());
        for mu in 0..vq.d[i] {
            vertices.push(format!("{label}:{mu}"));
        }
    }
    let mut vmap = vec![0; vertices.len()];
    for (i, &off) in offsets.iter().enumerate() {
        let d = vq.d[i] as usize;
        for mu in 0..d {
            vmap[off + mu] = off + (mu + 1) % d;
        }
    }
    let mut arrows = Vec::new();
    let mut amap = Vec::new();
    for (k, e) in vq.edges.iter().enumerate() {
        let (di, dj) = (vq.d[e.from], vq.d[e.to]);
        let l = di.lcm(&dj);
        if e.b % l != 0 {
            return Err(Error::NotUnfoldable(format!(
                "b = {} on {}->{} is not divisible by lcm({di}, {dj}) = {l}",
                e.b, vq.labels[e.from], vq.labels[e.to]
            )));
        }
        let mult = e.b / l;
        let g = di.gcd(&dj);
        let base = arrows.len();
        // Arrows are laid out by (mu, nu, copy) so that the successor of an
        // arrow can be located arithmetically.
        let index = |mu: i64, nu: i64, c: i64| base + ((mu * dj + nu) * mult + c) as usize;
        for mu in 0..di {
            for nu in 0..dj {
                for c in 0..mult {
                    let id = format!("e{k}:{mu}:{nu}:{c}");
                    let valid = (mu - nu).rem_euclid(g) == 0;
                    arrows.push(Arrow {
                        id,
                        source: offsets[e.from] + mu as usize,
                        target: offsets[e.to] + nu as usize,
                    });
                    amap.push(if valid { index((mu + 1) % di, (nu + 1) % dj, c) } else { usize::MAX });
                }
            }
        }
    }
    // Drop the placeholder arrows with mu != nu mod gcd and renumber.
    let keep: Vec<usize> = (0..arrows.len()).filter(|&r| amap[r] != usize::MAX).collect();
    let mut renumber = vec![usize::MAX; arrows.len()];
    for (new, &old) in keep.iter().enumerate() {
        renumber[old] = new;
    }
    let arrows: Vec<Arrow> = keep.iter().map(|&r| arrows[r].clone()).collect();
    let amap: Vec<usize> = keep.iter().map(|&r| renumber[amap[r]]).collect();
    let q = Quiver::from_parts(vertices, arrows)?;
    let a = Automorphism::new(&q, vmap, amap)?;
    Ok((q, a))
}

/// Where a skew-quiver arrow came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub arrow: String,
    /// Index of the arrow orbit of `Q` (orbits ordered by least arrow).
    pub source_orbit: usize,
    /// Representative arrow of that orbit.
    pub source_arrow: String,
    pub residue: usize,
}

/// The skew quiver with its dual automorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewQuiver {
    pub quiver: Quiver,
    pub automorphism: Automorphism,
    /// Orbit of `Q` that each skew vertex lies over.
    pub base_orbit: Vec<usize>,
    pub orbit_count: usize,
    pub provenance: Vec<Provenance>,
}

impl SkewQuiver {
    /// `h(beta)_i = sum_mu beta_(i, mu)`.
    pub fn h_map(&self, beta: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.orbit_count];
        for (v, &o) in self.base_orbit.iter().enumerate() {
            out[o] += beta[v];
        }
        out
    }

    /// Skew vertices lying over orbit `i`, in `mu` order.
    pub fn fibre(&self, i: usize) -> Vec<usize> {
        (0..self.base_orbit.len()).filter(|&v| self.base_orbit[v] == i).collect()
    }

    /// Fold data of `(Q~, a~)`, for comparing its valued graph with that of `Q`.
    pub fn fold(&self) -> FoldData {
        FoldData::new(&self.quiver, &self.automorphism)
    }
}

/// Builds `(Q~, a~)` from an admissible pair.
pub fn skew(q: &Quiver, a: &Automorphism) -> Result<SkewQuiver> {
    let orbits = OrbitStructure::new(q, a);
    let fold = FoldData::new(q, a);
    let n = a.order();
    let d = orbits.sizes();
    let mut offsets = Vec::new();
    let mut vertices = Vec::new();
    let mut base_orbit = Vec::new();
    for (i, label) in fold.valued.labels.iter().enumerate() {
        offsets.push(vertices.len());
        for mu in 0..n / d[i] {
            vertices.push(format!("{label}:{mu}"));
            base_orbit.push(i);
        }
    }
    let mut vmap = vec![0; vertices.len()];
    for (i, &off) in offsets.iter().enumerate() {
        let m = n / d[i];
        for mu in 0..m {
            vmap[off + mu] = off + (mu + 1) % m;
        }
    }
    let mut arrows = Vec::new();
    let mut keys: Vec<(usize, usize, usize, usize)> = Vec::new();
    let mut provenance = Vec::new();
    for (k, orbit) in orbits.arrow_orbits.iter().enumerate() {
        let (i, j) = (orbit.source_orbit, orbit.target_orbit);
        let l = orbit.len();
        let t = d[i].lcm(&d[j]);
        let m = n / t;
        let (mi, mj) = (n / d[i], n / d[j]);
        let rep = q.arrow(orbit.arrows[0]).id.clone();
        for kk in 0..l / t {
            let r = (kk * (n / l)) % m;
            for mu in 0..mi {
                for nu in 0..mj {
                    if (mu + m - (nu + r) % m) % m != 0 {
                        continue;
                    }
                    let id = format!("{rep}~{r}:{mu}:{nu}");
                    arrows.push(Arrow {
                        id: id.clone(),
                        source: offsets[i] + mu,
                        target: offsets[j] + nu,
                    });
                    keys.push((k, r, mu, nu));
                    provenance.push(Provenance {
                        arrow: id,
                        source_orbit: k,
                        source_arrow: rep.clone(),
                        residue: r,
                    });
                }
            }
        }
    }
    let lookup: BTreeMap<(usize, usize, usize, usize), usize> =
        keys.iter().enumerate().map(|(idx, &key)| (key, idx)).collect();
    let amap = keys
        .iter()
        .map(|&(k, r, mu, nu)| {
            let o = &orbits.arrow_orbits[k];
            let (mi, mj) = (n / d[o.source_orbit], n / d[o.target_orbit]);
            lookup[&(k, r, (mu + 1) % mi, (nu + 1) % mj)]
        })
        .collect();
    let quiver = Quiver::from_parts(vertices, arrows)?;
    let automorphism = Automorphism::new(&quiver, vmap, amap)?;
    Ok(SkewQuiver {
        quiver,
        automorphism,
        base_orbit,
        orbit_count: orbits.orbit_count(),
        provenance,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleSkewReport {
    pub found: bool,
    /// Vertex of `Q` to vertex of the double skew quiver.
    pub vertex_map: Option<BTreeMap<String, String>>,
}

/// Searches for an isomorphism `Q -> skew(skew(Q, a))` intertwining `a` with
/// the double dual automorphism.
pub fn double_skew_check(q: &Quiver, a: &Automorphism, vertex_cap: usize) -> Result<DoubleSkewReport> {
    if q.vertex_count() > vertex_cap {
        return Err(Error::BudgetExceeded {
            what: "double skew vertex search".into(),
            predicted: q.vertex_count() as u128,
            cap: vertex_cap as u128,
        });
    }
    let s1 = skew(q, a)?;
    let s2 = skew(&s1.quiver, &s1.automorphism)?;
    let phi = find_intertwining_iso(q, a, &s2.quiver, &s2.automorphism);
    Ok(DoubleSkewReport {
        found: phi.is_some(),
        vertex_map: phi.map(|phi| {
            phi.iter()
                .enumerate()
                .map(|(v, &w)| (q.vertex_id(v).to_string(), s2.quiver.vertex_id(w).to_string()))
                .collect()
        }),
    })
}

/// A vertex bijection `phi` with `phi a = b phi` that extends to an arrow
/// bijection intertwining the arrow permutations.
pub fn find_intertwining_iso(q: &Quiver, a: &Automorphism, p: &Quiver, b: &Automorphism) -> Option<Vec<usize>> {
    if q.vertex_count() != p.vertex_count() || q.arrow_count() != p.arrow_count() {
        return None;
    }
    let oq = OrbitStructure::new(q, a);
    let op = OrbitStructure::new(p, b);
    let mut phi = vec![usize::MAX; q.vertex_count()];
    let mut used = vec![false; p.vertex_count()];
    let mut found = None;
    assign(q, a, p, b, &oq, &op, 0, &mut phi, &mut used, &mut found);
    found
}

#[allow(clippy::too_many_arguments)]
fn assign(
    q: &Quiver,
    a: &Automorphism,
    p: &Quiver,
    b: &Automorphism,
    oq: &OrbitStructure,
    op: &OrbitStructure,
    k: usize,
    phi: &mut Vec<usize>,
    used: &mut Vec<bool>,
    found: &mut Option<Vec<usize>>,
) {
    if found.is_some() {
        return;
    }
    if k == oq.vertex_orbits.len() {
        if arrows_match(q, a, p, b, phi) {
            *found = Some(phi.clone());
        }
        return;
    }
    let orbit = &oq.vertex_orbits[k];
    let rep = orbit[0];
    for w in 0..p.vertex_count() {
        if used[w] || op.vertex_orbits[op.orbit_of[w]].len() != orbit.len() {
            continue;
        }
        let (mut v, mut x) = (rep, w);
        for _ in 0..orbit.len() {
            phi[v] = x;
            used[x] = true;
            v = a.vertex(v);
            x = b.vertex(x);
        }
        if partial_counts_match(q, p, phi) {
            assign(q, a, p, b, oq, op, k + 1, phi, used, found);
        }
        for &v in orbit {
            used[phi[v]] = false;
            phi[v] = usize::MAX;
        }
        if found.is_some() {
            return;
        }
    }
}

fn partial_counts_match(q: &Quiver, p: &Quiver, phi: &[usize]) -> bool {
    let count = |quiver: &Quiver, s: usize, t: usize| {
        quiver.arrows().iter().filter(|r| r.source == s && r.target == t).count()
    };
    let assigned: Vec<usize> = (0..phi.len()).filter(|&v| phi[v] != usize::MAX).collect();
    assigned.iter().all(|&u| {
        assigned
            .iter()
            .all(|&v| count(q, u, v) == count(p, phi[u], phi[v]))
    })
}

fn arrows_match(q: &Quiver, a: &Automorphism, p: &Quiver, b: &Automorphism, phi: &[usize]) -> bool {
    let oq = OrbitStructure::new(q, a);
    let op = OrbitStructure::new(p, b);
    let mut taken = vec![false; op.arrow_orbits.len()];
    match_orbits(q, p, &oq, &op, phi, 0, &mut taken)
}

fn match_orbits(
    q: &Quiver,
    p: &Quiver,
    oq: &OrbitStructure,
    op: &OrbitStructure,
    phi: &[usize],
    k: usize,
    taken: &mut Vec<bool>,
) -> bool {
    if k == oq.arrow_orbits.len() {
        return true;
    }
    let orbit = &oq.arrow_orbits[k];
    let r = q.arrow(orbit.arrows[0]);
    let (s, t) = (phi[r.source], phi[r.target]);
    for (m, other) in op.arrow_orbits.iter().enumerate() {
        if taken[m] || other.len() != orbit.len() {
            continue;
        }
        let hit = other.arrows.iter().any(|&x| {
            let y = p.arrow(x);
            y.source == s && y.target == t
        });
        if hit {
            taken[m] = true;
            if match_orbits(q, p, oq, op, phi, k + 1, taken) {
                return true;
            }
            taken[m] = false;
        }
    }
    false
}

/// Compares `{h(beta)}` over the positive roots of the skew quiver (height at
/// most `n h`) with the positive roots of the fold of `(Q, a)` up to height `h`.
/// Preimages are grouped into orbits of the dual automorphism.
pub fn skew_root_image(q: &Quiver, a: &Automorphism, h: i64, cap: usize) -> Result<SigmaImageReport> {
    let sk = skew(q, a)?;
    let fold = FoldData::new(q, a);
    let n = a.order() as i64;
    let skew_roots = RootLattice::from_quiver(&sk.quiver).positive_roots_up_to(n * h, cap)?;
    let folded_roots = RootLattice::from_fold(&fold).positive_roots_up_to(h, cap)?;
    let mut by_image: BTreeMap<Vec<i64>, Vec<&RootEntry>> = BTreeMap::new();
    for r in &skew_roots.roots {
        let w = sk.h_map(&r.vector);
        if w.iter().sum::<i64>() <= h {
            by_image.entry(w).or_default().push(r);
        }
    }
    let preimages = folded_roots
        .roots
        .iter()
        .map(|entry| {
            let pre = by_image.get(&entry.vector).cloned().unwrap_or_default();
            let orbits: BTreeSet<Vec<Vec<i64>>> =
                pre.iter().map(|r| orbit_of_vector(&sk.automorphism, &r.vector)).collect();
            Preimage {
                folded: entry.vector.clone(),
                kind: entry.kind,
                orbits: orbits.into_iter().collect(),
                all_real: pre.iter().all(|r| r.kind == RootKind::Real),
            }
        })
        .collect();
    Ok(SigmaImageReport {
        height: h,
        image: by_image.into_keys().collect(),
        folded_roots,
        preimages,
    })
}
