//! Desk-scale checks of Kac's theorem, the folding theorem and the species
//! theorem, plus a Krull-Schmidt consistency check of the catalogs.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::catalog::EnumConfig;
use super::orbits::{ii_classes, species_count, CatalogCache, IiSummary, SpeciesSetup};
use crate::cartan::{root_length, FoldData, ValuedQuiver};
use crate::error::Result;
use crate::field::{FieldSpec, FiniteField};
use crate::quiver::{Automorphism, Quiver};
use crate::roots::{for_each_vector, RootKind, RootLattice, DEFAULT_ROOT_CAP};

fn vectors(n: usize, h: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for_each_vector(n, h, &mut |v| {
        out.push(v.to_vec());
        true
    });
    out.sort_by(|a, b| {
        let (ha, hb): (i64, i64) = (a.iter().sum(), b.iter().sum());
        ha.cmp(&hb).then_with(|| a.cmp(b))
    });
    out
}

fn to_usize(v: &[i64]) -> Vec<usize> {
    v.iter().map(|&x| x as usize).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KacEntry {
    pub dims: Vec<i64>,
    pub root: Option<RootKind>,
    pub indecomposables: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KacReport {
    pub field: String,
    pub height: i64,
    pub entries: Vec<KacEntry>,
    pub failures: Vec<String>,
    pub passed: bool,
}

/// Indecomposables exist exactly at the positive roots, uniquely at real roots.
pub fn verify_kac(q: &Quiver, field: Arc<FiniteField>, h: i64, cfg: &EnumConfig) -> Result<KacReport> {
    let roots = RootLattice::from_quiver(q).positive_roots_up_to(h, DEFAULT_ROOT_CAP)?;
    let mut cache = CatalogCache::new(q, field.clone(), *cfg);
    let mut entries = Vec::new();
    let mut failures = Vec::new();
    for d in vectors(q.vertex_count(), h) {
        let count = cache.get(&to_usize(&d))?.indecomposable_count();
        let root = roots.kind_of(&d);
        match root {
            None if count > 0 => failures.push(format!("{d:?} is not a root but has {count} indecomposables")),
            Some(_) if count == 0 => failures.push(format!("root {d:?} has no indecomposable")),
            Some(RootKind::Real) if count != 1 => {
                failures.push(format!("real root {d:?} has {count} indecomposables"))
            }
            _ => {}
        }
        entries.push(KacEntry {
            dims: d,
            root,
            indecomposables: count,
        });
    }
    Ok(KacReport {
        field: field.spec().to_string(),
        height: h,
        passed: failures.is_empty(),
        entries,
        failures,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MainEntry {
    pub folded: Vec<i64>,
    pub dims: Vec<usize>,
    pub root: Option<RootKind>,
    pub classes: Vec<IiSummary>,
    /// `(alpha, alpha) / 2` as a string, since it may be a fraction.
    pub root_length: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MainReport {
    pub field: String,
    pub height: i64,
    pub warning: Option<String>,
    pub entries: Vec<MainEntry>,
    /// Imaginary folded roots with exactly one ii-indecomposable.
    pub unique_imaginary: Vec<Vec<i64>>,
    pub failures: Vec<String>,
    pub passed: bool,
}

/// ii-indecomposables of `(Q, a)` live at the folded positive roots, every
/// folded root occurs, and a real root has one ii class with `(alpha, alpha)/2`
/// summands.
pub fn verify_main_theorem(
    q: &Quiver,
    a: &Automorphism,
    field: Arc<FiniteField>,
    h: i64,
    cfg: &EnumConfig,
) -> Result<MainReport> {
    let fold = FoldData::new(q, a);
    let roots = RootLattice::from_fold(&fold).positive_roots_up_to(h, DEFAULT_ROOT_CAP)?;
    let warning = ((field.size() as usize).gcd(&a.order()) != 1).then(|| {
        format!(
            "field size {} is not coprime to the automorphism order {}",
            field.size(),
            a.order()
        )
    });
    let mut cache = CatalogCache::new(q, field.clone(), *cfg);
    let mut entries = Vec::new();
    let mut failures = Vec::new();
    let mut unique_imaginary = Vec::new();
    for alpha in vectors(fold.size(), h) {
        let dims = to_usize(&fold.f_inverse(&alpha));
        let classes = ii_classes(&mut cache, a, &dims)?;
        let root = roots.kind_of(&alpha);
        let len = root_length(&fold.b, &alpha);
        match root {
            None if !classes.is_empty() => failures.push(format!(
                "{alpha:?} is not a folded root but has {} ii-indecomposables",
                classes.len()
            )),
            Some(_) if classes.is_empty() => failures.push(format!("folded root {alpha:?} is not realised")),
            Some(RootKind::Real) => {
                if classes.len() != 1 {
                    failures.push(format!("real root {alpha:?} has {} ii classes", classes.len()));
                } else if num_rational::Rational64::from(classes[0].period() as i64) != len {
                    failures.push(format!(
                        "real root {alpha:?}: {} summands but root length {len}",
                        classes[0].period()
                    ));
                }
            }
            Some(RootKind::Imaginary) if classes.len() == 1 => unique_imaginary.push(alpha.clone()),
            _ => {}
        }
        entries.push(MainEntry {
            folded: alpha,
            dims,
            root,
            classes: classes.iter().map(IiSummary::from).collect(),
            root_length: len.to_string(),
        });
    }
    Ok(MainReport {
        field: field.spec().to_string(),
        height: h,
        warning,
        passed: failures.is_empty(),
        entries,
        unique_imaginary,
        failures,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpeciesEntry {
    pub alpha: Vec<i64>,
    pub root: Option<RootKind>,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpeciesReport {
    pub q: u64,
    pub height: i64,
    pub entries: Vec<SpeciesEntry>,
    pub failures: Vec<String>,
    pub passed: bool,
}

/// `I(alpha, q) > 0` exactly at the positive roots and `= 1` at real roots.
pub fn verify_species_theorem(vq: &ValuedQuiver, base: FieldSpec, h: i64, cfg: &EnumConfig) -> Result<SpeciesReport> {
    let roots = RootLattice::from_valued(vq).positive_roots_up_to(h, DEFAULT_ROOT_CAP)?;
    let setup = SpeciesSetup::new(vq, base)?;
    let mut cache = CatalogCache::new(&setup.quiver, setup.big_field.clone(), *cfg);
    let mut entries = Vec::new();
    let mut failures = Vec::new();
    for alpha in vectors(vq.vertex_count(), h) {
        let count = species_count(&setup, &mut cache, &alpha)?;
        let root = roots.kind_of(&alpha);
        match root {
            None if count > 0 => failures.push(format!("{alpha:?} is not a root but I = {count}")),
            Some(_) if count == 0 => failures.push(format!("root {alpha:?} has I = 0")),
            Some(RootKind::Real) if count != 1 => failures.push(format!("real root {alpha:?} has I = {count}")),
            _ => {}
        }
        entries.push(SpeciesEntry { alpha, root, count });
    }
    Ok(SpeciesReport {
        q: base.size(),
        height: h,
        passed: failures.is_empty(),
        entries,
        failures,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultisetEntry {
    pub dims: Vec<i64>,
    pub classes: usize,
    pub multisets: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultisetReport {
    pub entries: Vec<MultisetEntry>,
    pub passed: bool,
}

/// Every class is a unique multiset of indecomposables: the class count at
/// each `d` equals the number of multisets of indecomposable classes summing
/// to `d`.
pub fn multiset_crosscheck(q: &Quiver, field: Arc<FiniteField>, h: i64, cfg: &EnumConfig) -> Result<MultisetReport> {
    let all = vectors(q.vertex_count(), h);
    let mut cache = CatalogCache::new(q, field, *cfg);
    let mut counts: BTreeMap<Vec<i64>, (usize, usize)> = BTreeMap::new();
    for d in &all {
        let c = cache.get(&to_usize(d))?;
        counts.insert(d.clone(), (c.len(), c.indecomposable_count()));
    }
    // Unbounded knapsack over indecomposable classes, vectors in height order.
    let mut ways: BTreeMap<Vec<i64>, u128> = all.iter().map(|d| (d.clone(), 0)).collect();
    ways.insert(vec![0; q.vertex_count()], 1);
    for beta in &all {
        for _ in 0..counts[beta].1 {
            for d in &all {
                let diff: Vec<i64> = d.iter().zip(beta).map(|(x, y)| x - y).collect();
                if diff.iter().all(|&x| x >= 0) {
                    let add = ways[&diff];
                    *ways.get_mut(d).expect("present") += add;
                }
            }
        }
    }
    let entries: Vec<MultisetEntry> = all
        .iter()
        .map(|d| MultisetEntry {
            dims: d.clone(),
            classes: counts[d].0,
            multisets: ways[d],
        })
        .collect();
    let passed = entries.iter().all(|e| e.classes as u128 == e.multisets);
    Ok(MultisetReport { entries, passed })
}
