//! ii-indecomposables and species counts: orbits of a twist operator on
//! indecomposable classes, keeping those whose summed dimension vector is the
//! target.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::catalog::{Catalog, EnumConfig};
use crate::cartan::{FoldData, ValuedQuiver};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, FiniteField};
use crate::quiver::{act, Automorphism, Quiver};
use crate::rep::{direct_sum, twist_auto, twist_frobenius, Representation};
use crate::skew::unfold;

/// Catalogs keyed by dimension vector, for one quiver and field.
pub struct CatalogCache {
    pub quiver: Quiver,
    pub field: Arc<FiniteField>,
    pub config: EnumConfig,
    catalogs: BTreeMap<Vec<usize>, Catalog>,
}

impl CatalogCache {
    pub fn new(quiver: &Quiver, field: Arc<FiniteField>, config: EnumConfig) -> Self {
        CatalogCache {
            quiver: quiver.clone(),
            field,
            config,
            catalogs: BTreeMap::new(),
        }
    }

    pub fn get(&mut self, dims: &[usize]) -> Result<&Catalog> {
        if !self.catalogs.contains_key(dims) {
            let c = Catalog::build(&self.quiver, self.field.clone(), dims, &self.config)?;
            self.catalogs.insert(dims.to_vec(), c);
        }
        Ok(&self.catalogs[dims])
    }
}

/// One orbit of indecomposable classes under a twist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistOrbit {
    /// `(dimension vector, class index)` of each member, in twist order from the
    /// least member.
    pub members: Vec<(Vec<usize>, usize)>,
    pub sum: Representation,
}

impl TwistOrbit {
    pub fn period(&self) -> usize {
        self.members.len()
    }
}

fn to_i64(v: &[usize]) -> Vec<i64> {
    v.iter().map(|&x| x as i64).collect()
}

fn to_usize(v: &[i64]) -> Vec<usize> {
    v.iter().map(|&x| x as usize).collect()
}

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|r| n % r == 0).collect()
}

/// Orbits of `twist` (of order dividing `order`, acting on dimension vectors
/// by `dim_action`) on indecomposable classes whose orbit sum has dimension
/// `target`.
fn twist_orbits(
    cache: &mut CatalogCache,
    target: &[usize],
    order: usize,
    dim_action: &dyn Fn(&[i64]) -> Vec<i64>,
    twist: &dyn Fn(&Representation) -> Representation,
) -> Result<Vec<TwistOrbit>> {
    let target_i = to_i64(target);
    let orbit_sum = |beta: &[i64], r: usize| {
        let mut acc = vec![0; beta.len()];
        let mut cur = beta.to_vec();
        for _ in 0..r {
            for (a, b) in acc.iter_mut().zip(&cur) {
                *a += b;
            }
            cur = dim_action(&cur);
        }
        acc
    };
    let rs = divisors(order);
    let mut candidates = Vec::new();
    let mut beta = vec![0i64; target.len()];
    loop {
        // Next vector in the box below `target`.
        let mut pos = 0;
        loop {
            if pos == beta.len() {
                break;
            }
            if beta[pos] < target_i[pos] {
                beta[pos] += 1;
                break;
            }
            beta[pos] = 0;
            pos += 1;
        }
        if pos == beta.len() {
            break;
        }
        if rs.iter().any(|&r| orbit_sum(&beta, r) == target_i) {
            candidates.push(beta.clone());
        }
    }
    let mut seen: BTreeSet<(Vec<usize>, usize)> = BTreeSet::new();
    let mut out = Vec::new();
    for beta in candidates {
        let beta_u = to_usize(&beta);
        let indecs: Vec<(usize, Representation)> = cache
            .get(&beta_u)?
            .indecomposables()
            .map(|(i, c)| (i, c.rep.clone()))
            .collect();
        for (id, rep) in indecs {
            if seen.contains(&(beta_u.clone(), id)) {
                continue;
            }
            let mut members = vec![(beta_u.clone(), id)];
            let mut reps = vec![rep.clone()];
            let mut cur = rep;
            loop {
                cur = twist(&cur);
                let d = cur.dims.clone();
                let cid = cache.get(&d)?.lookup(&cur)?;
                if (d.clone(), cid) == members[0] {
                    break;
                }
                members.push((d, cid));
                reps.push(cur.clone());
                if members.len() > order {
                    return Err(Error::BadParameter("twist period exceeds its order".into()));
                }
            }
            for m in &members {
                seen.insert(m.clone());
            }
            if orbit_sum(&beta, members.len()) != target_i {
                continue;
            }
            let parts: Vec<&Representation> = reps.iter().collect();
            let sum = direct_sum(&cache.quiver, &parts)?;
            let start = (0..members.len()).min_by_key(|&k| &members[k]).expect("non-empty");
            members.rotate_left(start);
            out.push(TwistOrbit { members, sum });
        }
    }
    out.sort_by(|a, b| a.members.cmp(&b.members));
    Ok(out)
}

/// ii-indecomposables of dimension `d` for `(Q, a)`, as `a`-twist orbits of
/// indecomposables.
pub fn ii_classes(cache: &mut CatalogCache, a: &Automorphism, d: &[usize]) -> Result<Vec<TwistOrbit>> {
    let di = to_i64(d);
    if act(a, &di) != di {
        return Err(Error::NotFixed(di));
    }
    let a2 = a.clone();
    twist_orbits(cache, d, a.order(), &|v| act(a, v), &move |x| twist_auto(&a2, x))
}

/// The unfolded quiver over `F_{q^t}` with the twist `a^{-1}` composed with
/// the `q`-Frobenius, whose orbits correspond to species indecomposables.
pub struct SpeciesSetup {
    pub quiver: Quiver,
    pub automorphism: Automorphism,
    pub fold: FoldData,
    pub big_field: Arc<FiniteField>,
    pub base: FieldSpec,
    pub t: usize,
}

impl SpeciesSetup {
    pub fn new(vq: &ValuedQuiver, base: FieldSpec) -> Result<Self> {
        let (quiver, automorphism) = unfold(vq)?;
        let fold = FoldData::new(&quiver, &automorphism);
        let t = automorphism.order();
        let big_field = Arc::new(FiniteField::new(base.p, base.m * t as u32)?);
        Ok(SpeciesSetup {
            quiver,
            automorphism,
            fold,
            big_field,
            base,
            t,
        })
    }
}

/// `I(alpha, q)`: the number of indecomposable representations of dimension
/// `alpha` for the `F_q`-species of `vq`.
pub fn species_count(setup: &SpeciesSetup, cache: &mut CatalogCache, alpha: &[i64]) -> Result<usize> {
    if alpha.len() != setup.fold.size() || alpha.iter().any(|&x| x < 0) {
        return Err(Error::LatticeMismatch("folded dimension vector".into()));
    }
    let d = to_usize(&setup.fold.f_inverse(alpha));
    let inv = setup.automorphism.inverse();
    let inv2 = inv.clone();
    let s = setup.base.m;
    let orbits = twist_orbits(cache, &d, setup.t, &|v| act(&inv, v), &move |x| {
        twist_auto(&inv2, &twist_frobenius(s, x))
    })?;
    Ok(orbits.len())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IiSummary {
    pub dims: Vec<usize>,
    pub period: usize,
    pub summands: Vec<Vec<usize>>,
}

impl From<&TwistOrbit> for IiSummary {
    fn from(o: &TwistOrbit) -> Self {
        IiSummary {
            dims: o.sum.dims.clone(),
            period: o.period(),
            summands: o.members.iter().map(|m| m.0.clone()).collect(),
        }
    }
}
