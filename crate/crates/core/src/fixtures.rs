//! Worked examples: the flip of A3, the affine D4 quiver with automorphisms of
//! order 4 and 3 and its regular simples, and the complete bipartite 3x2 quiver
//! with an automorphism of order 6.
//!
//! Affine D4 labelling: outer vertices 1 = top right, 2 = bottom right,
//! 3 = bottom left, 4 = top left, centre 5, arrows `rk: k -> 5`.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Elem, FiniteField};
use crate::linalg::Matrix;
use crate::quiver::{Automorphism, Quiver};
use crate::rep::{is_isomorphic, twist_auto, Representation, SearchConfig};

/// A named quiver with its named automorphisms.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub quiver: Quiver,
    pub automorphisms: Vec<(&'static str, Automorphism)>,
}

pub fn build_a3_flip() -> (Quiver, Automorphism) {
    let q = Quiver::new(&["1", "2", "3"], &[("r1", "1", "2"), ("r3", "3", "2")]).expect("valid quiver");
    let a = Automorphism::from_vertex_map(&q, vec![2, 1, 0]).expect("admissible");
    (q, a)
}

pub fn dtilde4() -> Quiver {
    Quiver::new(
        &["1", "2", "3", "4", "5"],
        &[("r1", "1", "5"), ("r2", "2", "5"), ("r3", "3", "5"), ("r4", "4", "5")],
    )
    .expect("valid quiver")
}

/// Affine D4 with the 4-cycle `(1 2 3 4)` and the 3-cycle `(1 2 3)`.
pub fn build_dtilde4() -> (Quiver, Automorphism, Automorphism) {
    let q = dtilde4();
    let four = Automorphism::from_vertex_map(&q, vec![1, 2, 3, 0, 4]).expect("admissible");
    let three = Automorphism::from_vertex_map(&q, vec![1, 2, 0, 3, 4]).expect("admissible");
    (q, four, three)
}

/// All six arrows from `{1, 2, 3}` to `{4, 5}`, with `(1 2 3)(4 5)`.
pub fn build_counterexample() -> (Quiver, Automorphism) {
    let mut arrows = Vec::new();
    for i in ["1", "2", "3"] {
        for j in ["4", "5"] {
            arrows.push((format!("r{i}{j}"), i, j));
        }
    }
    let refs: Vec<(&str, &str, &str)> = arrows.iter().map(|(id, s, t)| (id.as_str(), *s, *t)).collect();
    let q = Quiver::new(&["1", "2", "3", "4", "5"], &refs).expect("valid quiver");
    let a = Automorphism::from_vertex_map(&q, vec![1, 2, 0, 4, 3]).expect("admissible");
    (q, a)
}

pub fn all_fixtures() -> Vec<Fixture> {
    let (a3, flip) = build_a3_flip();
    let (d4, four, three) = build_dtilde4();
    let (k32, six) = build_counterexample();
    vec![
        Fixture {
            name: "a3-flip",
            quiver: a3,
            automorphisms: vec![("flip", flip)],
        },
        Fixture {
            name: "dtilde4",
            quiver: d4,
            automorphisms: vec![("four-cycle", four), ("three-cycle", three)],
        },
        Fixture {
            name: "counterexample",
            quiver: k32,
            automorphisms: vec![("order-six", six)],
        },
    ]
}

/// The six regular simples of the period-2 tubes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RegularSimple {
    E0,
    E0p,
    E0pp,
    E1,
    E1p,
    E1pp,
}

impl RegularSimple {
    pub const ALL: [RegularSimple; 6] = [
        RegularSimple::E0,
        RegularSimple::E0p,
        RegularSimple::E0pp,
        RegularSimple::E1,
        RegularSimple::E1p,
        RegularSimple::E1pp,
    ];

    /// The two outer vertices in the support (the centre is always included).
    fn outer(self) -> [usize; 2] {
        match self {
            RegularSimple::E0 => [3, 2],
            RegularSimple::E0p => [3, 0],
            RegularSimple::E0pp => [3, 1],
            RegularSimple::E1 => [0, 1],
            RegularSimple::E1p => [2, 1],
            RegularSimple::E1pp => [0, 2],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RegularSimple::E0 => "E0",
            RegularSimple::E0p => "E0'",
            RegularSimple::E0pp => "E0''",
            RegularSimple::E1 => "E1",
            RegularSimple::E1p => "E1'",
            RegularSimple::E1pp => "E1''",
        }
    }
}

pub fn regular_simple(which: RegularSimple, field: Arc<FiniteField>) -> Representation {
    let q = dtilde4();
    let mut dims = vec![0, 0, 0, 0, 1];
    for v in which.outer() {
        dims[v] = 1;
    }
    let maps = (0..4)
        .map(|k| {
            if dims[k] == 1 {
                Matrix::identity(1)
            } else {
                Matrix::zeros(1, 0)
            }
        })
        .collect();
    Representation::new(&q, field, dims, maps).expect("valid fixture")
}

/// `T(lambda)`: the centre is 2-dimensional and the outer lines are spanned by
/// `(1,1)`, `(1,lambda)`, `(0,1)` and `(1,0)` at vertices 1 to 4.
pub fn tube_rep(lambda: Elem, field: Arc<FiniteField>) -> Result<Representation> {
    if lambda == 0 || lambda == 1 || lambda >= field.size() {
        return Err(Error::BadParameter(format!(
            "tube parameter {} must lie in F \\ {{0, 1}}",
            field.format(lambda.min(field.size().saturating_sub(1)))
        )));
    }
    let col = |x: Elem, y: Elem| Matrix::from_rows(&[vec![x], vec![y]]);
    let maps = vec![col(1, 1), col(1, lambda), col(0, 1), col(1, 0)];
    Representation::new(&dtilde4(), field, vec![1, 1, 1, 1, 2], maps)
}

/// For each `lambda` in `F \ {0, 1}`, the `mu` with `a T(lambda) ~= T(mu)`.
pub fn tube_parameter_action(
    a: &Automorphism,
    field: Arc<FiniteField>,
    cfg: &SearchConfig,
) -> Result<BTreeMap<Elem, Elem>> {
    let q = dtilde4();
    let params: Vec<Elem> = (2..field.size()).collect();
    let tubes: Vec<Representation> = params
        .iter()
        .map(|&l| tube_rep(l, field.clone()))
        .collect::<Result<_>>()?;
    let mut out = BTreeMap::new();
    for (&l, t) in params.iter().zip(&tubes) {
        let twisted = twist_auto(a, t);
        let mut image = None;
        for (&m, u) in params.iter().zip(&tubes) {
            if is_isomorphic(&q, &twisted, u, cfg)? {
                image = Some(m);
                break;
            }
        }
        let m = image.ok_or_else(|| {
            Error::BadParameter(format!("twist of T({}) is not a tube T(mu)", field.format(l)))
        })?;
        out.insert(l, m);
    }
    Ok(out)
}

/// `lambda -> lambda / (lambda - 1)`.
pub fn four_cycle_mobius(f: &FiniteField, l: Elem) -> Elem {
    f.div(l, f.sub(l, 1)).expect("lambda != 1")
}

/// `lambda -> 1 / (1 - lambda)`.
pub fn three_cycle_mobius(f: &FiniteField, l: Elem) -> Elem {
    f.inv(f.sub(1, l)).expect("lambda != 1")
}

/// Tubes fixed by the 3-cycle: the roots of `lambda^2 - lambda + 1`.
pub fn three_cycle_fixed_tubes(f: &FiniteField) -> Vec<Elem> {
    f.solve_univariate(&[1, f.neg(1), 1])
        .into_iter()
        .filter(|&l| l != 0 && l != 1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::FoldData;
    use crate::rep::is_indecomposable;
    use crate::roots::defect;

    fn field(p: u32) -> Arc<FiniteField> {
        Arc::new(FiniteField::new(p, 1).unwrap())
    }

    #[test]
    fn folds() {
        let (q, a) = build_counterexample();
        let f = FoldData::new(&q, &a);
        assert_eq!(f.c, vec![vec![2, -2], vec![-3, 2]]);
        assert_eq!(f.pair(0, 1), (3, 2));
        let (q, four, _) = build_dtilde4();
        let f = FoldData::new(&q, &four);
        assert_eq!(f.c, vec![vec![2, -1], vec![-4, 2]]);
        assert_eq!(f.pair(0, 1), (4, 1));
        let (q, a) = build_a3_flip();
        assert_eq!(FoldData::new(&q, &a).pair(0, 1), (2, 1));
    }

    #[test]
    fn regular_simples_are_regular() {
        let q = dtilde4();
        let cfg = SearchConfig::default();
        for e in RegularSimple::ALL {
            let x = regular_simple(e, field(2));
            assert_eq!(defect(&q, &x.dim_vector()).unwrap(), 0, "{}", e.name());
            assert!(is_indecomposable(&q, &x, &cfg).unwrap());
        }
        assert_eq!(regular_simple(RegularSimple::E0, field(2)).dims, vec![0, 0, 1, 1, 1]);
    }

    #[test]
    fn tubes() {
        let q = dtilde4();
        let t = tube_rep(2, field(5)).unwrap();
        assert_eq!(t.dims, vec![1, 1, 1, 1, 2]);
        assert!(is_indecomposable(&q, &t, &SearchConfig::default()).unwrap());
        assert_eq!(defect(&q, &t.dim_vector()).unwrap(), 0);
        assert!(matches!(tube_rep(1, field(5)), Err(Error::BadParameter(_))));
        assert!(matches!(tube_rep(0, field(5)), Err(Error::BadParameter(_))));
    }

    #[test]
    fn tube_actions() {
        let (_, four, three) = build_dtilde4();
        let cfg = SearchConfig::default();
        let f5 = field(5);
        let act = tube_parameter_action(&four, f5.clone(), &cfg).unwrap();
        assert_eq!(act, BTreeMap::from([(2, 2), (3, 4), (4, 3)]));
        for (&l, &m) in &act {
            assert_eq!(four_cycle_mobius(&f5, l), m);
        }
        let f7 = field(7);
        let act = tube_parameter_action(&three, f7.clone(), &cfg).unwrap();
        for (&l, &m) in &act {
            assert_eq!(three_cycle_mobius(&f7, l), m);
        }
        assert_eq!(three_cycle_fixed_tubes(&f7), vec![3, 5]);
    }
}
