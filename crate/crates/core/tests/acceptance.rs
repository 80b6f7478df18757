//! Acceptance matrix: one line per criterion, non-zero exit if any fails.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quiverfold::cartan::{euler_form, FoldData, ValuedEdge, ValuedQuiver};
use quiverfold::enumerate::{
    ii_classes, multiset_crosscheck, verify_kac, verify_main_theorem, verify_species_theorem, CatalogCache,
    EnumConfig,
};
use quiverfold::field::{FieldSpec, FiniteField};
use quiverfold::fixtures::{
    build_a3_flip, build_counterexample, build_dtilde4, regular_simple, three_cycle_fixed_tubes, tube_parameter_action,
    tube_rep, RegularSimple,
};
use quiverfold::quiver::{act, Automorphism, Quiver};
use quiverfold::rep::{
    direct_sum, end_space, hom_space, is_isomorphic, s_fold_functor, twist_auto, Direction, Representation,
    SearchConfig,
};
use quiverfold::roots::{for_each_vector, s_fold, sigma_root_image, RootKind, RootLattice};
use quiverfold::skew::{double_skew_check, skew, skew_root_image, unfold, DEFAULT_VERTEX_CAP};

type Check = std::result::Result<(), String>;

const SEED: u64 = 0x5eed;
const SAMPLES: usize = 200;
const CAP: usize = 1_000_000;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn gf(p: u32, m: u32) -> Arc<FiniteField> {
    Arc::new(FiniteField::new(p, m).expect("field"))
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn pairs() -> Vec<(&'static str, Quiver, Automorphism)> {
    let (a3, flip) = build_a3_flip();
    let (d4, four, three) = build_dtilde4();
    let (k32, six) = build_counterexample();
    vec![
        ("a3-flip", a3, flip),
        ("dtilde4/4", d4.clone(), four),
        ("dtilde4/3", d4, three),
        ("counterexample", k32, six),
    ]
}

fn orbit_index(f: &FoldData, label: &str) -> usize {
    f.valued.labels.iter().position(|l| l == label).expect("orbit label")
}

fn a2() -> Quiver {
    Quiver::new(&["1", "2"], &[("r", "1", "2")]).expect("A2")
}

fn a3_linear() -> Quiver {
    Quiver::new(&["1", "2", "3"], &[("r1", "1", "2"), ("r2", "2", "3")]).expect("A3")
}

fn set(vs: &[&[i64]]) -> BTreeSet<Vec<i64>> {
    vs.iter().map(|v| v.to_vec()).collect()
}

fn c1_folding() -> Check {
    let (q, a) = build_a3_flip();
    let f = FoldData::new(&q, &a);
    ensure!(f.c == vec![vec![2, -1], vec![-2, 2]], "A3 flip C = {:?}", f.c);
    ensure!(f.pair(0, 1) == (2, 1), "A3 flip edge {:?}", f.pair(0, 1));

    let (q, four, three) = build_dtilde4();
    let f = FoldData::new(&q, &four);
    let (o, c) = (orbit_index(&f, "{1,2,3,4}"), orbit_index(&f, "{5}"));
    ensure!(f.pair(o, c) == (4, 1), "4-cycle edge {:?}", f.pair(o, c));

    let f = FoldData::new(&q, &three);
    let (o, s, c) = (orbit_index(&f, "{1,2,3}"), orbit_index(&f, "{4}"), orbit_index(&f, "{5}"));
    ensure!(f.pair(s, c) == (1, 1), "3-cycle edge at {{4}}: {:?}", f.pair(s, c));
    ensure!(f.pair(c, o) == (1, 3), "3-cycle edge at {{1,2,3}}: {:?}", f.pair(c, o));
    ensure!(f.valued.edges.len() == 2, "3-cycle has {} edges", f.valued.edges.len());

    let (q, a) = build_counterexample();
    let f = FoldData::new(&q, &a);
    let (l, r) = (orbit_index(&f, "{1,2,3}"), orbit_index(&f, "{4,5}"));
    ensure!(f.pair(l, r) == (3, 2), "counterexample edge {:?}", f.pair(l, r));
    Ok(())
}

fn c2_roots() -> Check {
    let (q, a) = build_a3_flip();
    let f = FoldData::new(&q, &a);
    let lat = RootLattice::from_fold(&f);
    let expected = set(&[&[1, 0], &[0, 1], &[1, 1], &[1, 2]]);
    let found = lat.positive_roots_up_to(4, CAP).map_err(err)?.vectors();
    ensure!(found == expected, "positive roots {found:?}");
    let mut swept = BTreeSet::new();
    let mut failure = None;
    for_each_vector(2, 4, &mut |v| {
        match lat.classify(v) {
            Ok(c) if c.is_root() => {
                swept.insert(v.to_vec());
            }
            Ok(_) => {}
            Err(e) => failure = Some(e.to_string()),
        }
        true
    });
    if let Some(e) = failure {
        return Err(e);
    }
    ensure!(swept == expected, "classify sweep {swept:?}");
    let report = sigma_root_image(&q, &a, 4, CAP).map_err(err)?;
    let image: BTreeSet<Vec<i64>> = report.image.iter().cloned().collect();
    ensure!(image == expected, "sigma image {image:?}");
    ensure!(report.holds(), "preimage orbits {:?}", report.preimages);
    Ok(())
}

fn kac(q: &Quiver, field: Arc<FiniteField>, h: i64, roots: Option<usize>) -> Check {
    let name = field.spec().to_string();
    let report = verify_kac(q, field, h, &EnumConfig::default()).map_err(err)?;
    ensure!(report.passed, "over {name}: {:?}", report.failures);
    let realised: BTreeSet<Vec<i64>> = report
        .entries
        .iter()
        .filter(|e| e.indecomposables > 0)
        .map(|e| e.dims.clone())
        .collect();
    let expected = RootLattice::from_quiver(q).positive_roots_up_to(h, CAP).map_err(err)?.vectors();
    ensure!(realised == expected, "over {name}: realised {realised:?}");
    if let Some(n) = roots {
        ensure!(realised.len() == n, "over {name}: {} roots", realised.len());
    }
    Ok(())
}

fn c3_kac() -> Check {
    let q = a2();
    for p in [2, 3] {
        kac(&q, gf(p, 1), 3, Some(3))?;
    }
    kac(&a3_linear(), gf(2, 1), 4, Some(6))?;
    let (d4, _, _) = build_dtilde4();
    kac(&d4, gf(2, 1), 6, None)
}

fn c4_main() -> Check {
    let cfg = EnumConfig::default();
    let (q, a) = build_a3_flip();
    let report = verify_main_theorem(&q, &a, gf(2, 1), 4, &cfg).map_err(err)?;
    ensure!(report.passed, "A3 flip: {:?}", report.failures);
    let periods: Vec<(Vec<i64>, usize, String)> = report
        .entries
        .iter()
        .filter(|e| e.root.is_some())
        .map(|e| (e.folded.clone(), e.classes[0].period, e.root_length.clone()))
        .collect();
    let want: Vec<(Vec<i64>, usize, String)> = [([0, 1], 1), ([1, 0], 2), ([1, 1], 1), ([1, 2], 2)]
        .into_iter()
        .map(|(v, n)| (v.to_vec(), n, n.to_string()))
        .collect();
    ensure!(periods == want, "A3 flip summands {periods:?}");

    let (d4, four, _) = build_dtilde4();
    let f = FoldData::new(&d4, &four);
    let (o, c) = (orbit_index(&f, "{1,2,3,4}"), orbit_index(&f, "{5}"));
    let mut alpha = vec![0; 2];
    alpha[o] = 1;
    alpha[c] = 2;
    for p in [3, 5] {
        let report = verify_main_theorem(&d4, &four, gf(p, 1), 3, &cfg).map_err(err)?;
        ensure!(report.passed, "4-cycle over F{p}: {:?}", report.failures);
        let entry = report.entries.iter().find(|e| e.folded == alpha).expect("height 3");
        ensure!(
            entry.root == Some(RootKind::Imaginary) && !entry.classes.is_empty(),
            "4-cycle over F{p}: {alpha:?} is {:?} with {} classes",
            entry.root,
            entry.classes.len()
        );
    }

    let field = gf(5, 1);
    let mut cache = CatalogCache::new(&d4, field.clone(), cfg);
    let dims = vec![1, 1, 1, 1, 2];
    let classes = ii_classes(&mut cache, &four, &dims).map_err(err)?;
    let t2 = tube_rep(2, field).map_err(err)?;
    let id = cache.get(&dims).map_err(err)?.lookup(&t2).map_err(err)?;
    ensure!(
        classes.iter().any(|o| o.period() == 1 && o.members[0] == (dims.clone(), id)),
        "T(2) is not a one-summand ii class over F5"
    );
    Ok(())
}

fn c5_counterexample() -> Check {
    let (q, a) = build_counterexample();
    let mut cache = CatalogCache::new(&q, gf(5, 1), EnumConfig::default());
    let classes = ii_classes(&mut cache, &a, &[1, 1, 1, 1, 1]).map_err(err)?;
    ensure!(classes.len() == 1, "{} ii-indecomposables", classes.len());
    let f = FoldData::new(&q, &a);
    let w = f.f_map(&a, &[1; 5]).map_err(err)?;
    ensure!(w == vec![1, 1], "f = {w:?}");
    let kind = RootLattice::from_fold(&f).classify(&w).map_err(err)?.kind();
    ensure!(kind == Some(RootKind::Imaginary), "(1,1) classified {kind:?}");
    Ok(())
}

/// Orbits of the six regular simples under the twist, as sets of names.
fn simple_orbits(a: &Automorphism) -> std::result::Result<BTreeSet<BTreeSet<&'static str>>, String> {
    let (q, _, _) = build_dtilde4();
    let field = gf(2, 1);
    let cfg = SearchConfig::default();
    let reps: Vec<(RegularSimple, Representation)> =
        RegularSimple::ALL.iter().map(|&e| (e, regular_simple(e, field.clone()))).collect();
    let mut next = BTreeMap::new();
    for (e, x) in &reps {
        let y = twist_auto(a, x);
        let mut image = None;
        for (g, z) in &reps {
            if is_isomorphic(&q, &y, z, &cfg).map_err(err)? {
                image = Some(*g);
            }
        }
        next.insert(*e, image.ok_or_else(|| format!("twist of {} is not a regular simple", e.name()))?);
    }
    let mut orbits = BTreeSet::new();
    for e in RegularSimple::ALL {
        let mut orbit = BTreeSet::from([e.name()]);
        let mut cur = next[&e];
        while cur != e {
            orbit.insert(cur.name());
            cur = next[&cur];
        }
        orbits.insert(orbit);
    }
    Ok(orbits)
}

fn c6_orbits() -> Check {
    let (_, four, three) = build_dtilde4();
    let names = |v: &[&[&'static str]]| -> BTreeSet<BTreeSet<&'static str>> {
        v.iter().map(|o| o.iter().copied().collect()).collect()
    };
    let got = simple_orbits(&four)?;
    ensure!(
        got == names(&[&["E0", "E0'", "E1", "E1'"], &["E0''", "E1''"]]),
        "4-cycle orbits {got:?}"
    );
    let got = simple_orbits(&three)?;
    ensure!(
        got == names(&[&["E0", "E0'", "E0''"], &["E1", "E1'", "E1''"]]),
        "3-cycle orbits {got:?}"
    );
    let cfg = SearchConfig::default();
    let act5 = tube_parameter_action(&four, gf(5, 1), &cfg).map_err(err)?;
    ensure!(act5 == BTreeMap::from([(2, 2), (3, 4), (4, 3)]), "4-cycle tubes {act5:?}");
    let f7 = gf(7, 1);
    let act7 = tube_parameter_action(&three, f7.clone(), &cfg).map_err(err)?;
    let fixed: Vec<u32> = act7.iter().filter(|(l, m)| l == m).map(|(&l, _)| l).collect();
    ensure!(fixed == vec![3, 5], "3-cycle fixed tubes {fixed:?}");
    ensure!(three_cycle_fixed_tubes(&f7) == fixed, "solver disagrees with the action");
    ensure!(
        act7.get(&2) == Some(&6) && act7.get(&6) == Some(&4) && act7.get(&4) == Some(&2),
        "3-cycle tubes {act7:?}"
    );
    Ok(())
}

fn c7_species() -> Check {
    let vq = ValuedQuiver::new(
        vec!["i".into(), "j".into()],
        vec![2, 1],
        vec![ValuedEdge { from: 0, to: 1, b: 2 }],
    )
    .map_err(err)?;
    let expected = set(&[&[1, 0], &[0, 1], &[1, 1], &[1, 2]]);
    for p in [2, 3] {
        let report = verify_species_theorem(&vq, FieldSpec { p, m: 1 }, 4, &EnumConfig::default()).map_err(err)?;
        ensure!(report.passed, "q = {p}: {:?}", report.failures);
        for e in &report.entries {
            let want = usize::from(expected.contains(&e.alpha));
            ensure!(e.count == want, "q = {p}: I({:?}) = {}", e.alpha, e.count);
        }
    }
    Ok(())
}

fn random_fixed(rng: &mut ChaCha8Rng, f: &FoldData, n: usize, lo: i64, hi: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    for orbit in &f.orbits.vertex_orbits {
        let c = rng.gen_range(lo..=hi);
        for &i in orbit {
            v[i] = c;
        }
    }
    v
}

fn lemma_fold(rng: &mut ChaCha8Rng) -> Check {
    for (name, q, a) in pairs() {
        let f = FoldData::new(&q, &a);
        let (ql, fl) = (RootLattice::from_quiver(&q), RootLattice::from_fold(&f));
        let n = q.vertex_count();
        for _ in 0..SAMPLES {
            let x = random_fixed(rng, &f, n, -3, 3);
            let y = random_fixed(rng, &f, n, -3, 3);
            let (fx, fy) = (f.f_map(&a, &x).map_err(err)?, f.f_map(&a, &y).map_err(err)?);
            ensure!(ql.form(&x, &y) == fl.form(&fx, &fy), "{name}: form at {x:?}, {y:?}");
            for (i, orbit) in f.orbits.vertex_orbits.iter().enumerate() {
                let s = s_fold(&q, orbit, &x);
                ensure!(act(&a, &s) == s, "{name}: s_fold leaves the fixed lattice");
                let lhs = f.f_map(&a, &s).map_err(err)?;
                let rhs = fl.reflect(i, &fx).map_err(err)?;
                ensure!(lhs == rhs, "{name}: f s_{i} {x:?} = {lhs:?}, r_{i} f = {rhs:?}");
                let ry = fl.reflect(i, &fy).map_err(err)?;
                ensure!(fl.form(&rhs, &ry) == fl.form(&fx, &fy), "{name}: r_{i} is not an isometry");
            }
        }
    }
    Ok(())
}

fn lemma_h(rng: &mut ChaCha8Rng) -> Check {
    for (name, q, a) in pairs() {
        let sk = skew(&q, &a).map_err(err)?;
        let f = FoldData::new(&q, &a);
        let (sl, fl) = (RootLattice::from_quiver(&sk.quiver), RootLattice::from_fold(&f));
        let n = sk.quiver.vertex_count();
        for _ in 0..SAMPLES {
            let beta: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
            let h = sk.h_map(&beta);
            for i in 0..f.size() {
                let fibre = sk.fibre(i);
                let mut e = vec![0; f.size()];
                e[i] = 1;
                let rhs: i64 = fibre
                    .iter()
                    .map(|&v| {
                        let mut ev = vec![0; n];
                        ev[v] = 1;
                        sl.form(&beta, &ev)
                    })
                    .sum::<i64>()
                    * f.d[i];
                ensure!(fl.form(&h, &e) == rhs, "{name}: (h(b), e_{i}) at {beta:?}");
                let lhs = sk.h_map(&s_fold(&sk.quiver, &fibre, &beta));
                let r = fl.reflect(i, &h).map_err(err)?;
                ensure!(lhs == r, "{name}: h s~_{i} {beta:?} = {lhs:?}, r_{i} h = {r:?}");
            }
        }
    }
    Ok(())
}

fn prop_skew_surjective() -> Check {
    let (a3, flip) = build_a3_flip();
    let (d4, four, _) = build_dtilde4();
    for (name, q, a, h) in [("a3-flip", a3, flip, 4), ("dtilde4/4", d4, four, 3)] {
        let report = skew_root_image(&q, &a, h, CAP).map_err(err)?;
        ensure!(report.holds(), "{name}: {:?}", report.preimages);
    }
    Ok(())
}

fn reflection_functors() -> Check {
    let cfg = EnumConfig::default();
    let (a3, flip) = build_a3_flip();
    let (d4, four, _) = build_dtilde4();
    let (k32, six) = build_counterexample();
    for (name, q, a, p, h) in [("a3-flip", a3, flip, 2, 4), ("dtilde4/4", d4, four, 2, 3), ("counterexample", k32, six, 5, 2)] {
        let f = FoldData::new(&q, &a);
        let field = gf(p, 1);
        let mut cache = CatalogCache::new(&q, field.clone(), cfg);
        for (i, orbit) in f.orbits.vertex_orbits.iter().enumerate() {
            if !orbit.iter().all(|&v| q.is_sink(v)) {
                continue;
            }
            let simples: Vec<Representation> =
                orbit.iter().map(|&v| Representation::simple(&q, field.clone(), v)).collect();
            let k = direct_sum(&q, &simples.iter().collect::<Vec<_>>()).map_err(err)?;
            let (_, image) = s_fold_functor(&q, orbit, Direction::Plus, &k).map_err(err)?;
            ensure!(image.is_zero(), "{name}: S+ of the simple at orbit {i} is non-zero");
            let mut vectors = Vec::new();
            for_each_vector(f.size(), h, &mut |w| {
                vectors.push(w.to_vec());
                true
            });
            for w in vectors {
                let dims: Vec<usize> = f.f_inverse(&w).iter().map(|&x| x as usize).collect();
                let mut unit = vec![0; f.size()];
                unit[i] = 1;
                for class in ii_classes(&mut cache, &a, &dims).map_err(err)? {
                    if w == unit {
                        continue;
                    }
                    let x = &class.sum;
                    let (q2, y) = s_fold_functor(&q, orbit, Direction::Plus, x).map_err(err)?;
                    let want = s_fold(&q, orbit, &x.dim_vector());
                    ensure!(y.dim_vector() == want, "{name}: dim S+ X = {:?}, s_i dim X = {want:?}", y.dim_vector());
                    let (ex, ey) = (end_space(&q, x).map_err(err)?.dim(), end_space(&q2, &y).map_err(err)?.dim());
                    ensure!(ex == ey, "{name}: End dims {ex} and {ey} at {dims:?}");
                }
            }
        }
    }
    Ok(())
}

fn hom_euler() -> Check {
    let q = a2();
    let mut cache = CatalogCache::new(&q, gf(2, 1), EnumConfig::default());
    let mut reps = Vec::new();
    for d1 in 0..=2 {
        for d2 in 0..=2 {
            reps.extend(cache.get(&[d1, d2]).map_err(err)?.classes.iter().map(|c| c.rep.clone()));
        }
    }
    for x in &reps {
        for y in &reps {
            let h = hom_space(&q, x, y).map_err(err)?;
            let lhs = h.dim() as i64 - h.coker_dim as i64;
            let rhs = euler_form(&q, &x.dim_vector(), &y.dim_vector());
            ensure!(lhs == rhs, "Hom-Euler at {:?}, {:?}", x.dims, y.dims);
        }
    }
    Ok(())
}

fn fold_unfold(rng: &mut ChaCha8Rng) -> Check {
    let mut cases: Vec<ValuedQuiver> = pairs().iter().map(|(_, q, a)| FoldData::new(q, a).valued).collect();
    while cases.len() < SAMPLES {
        let n = rng.gen_range(2..=3);
        let d: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(0.7) {
                    let l = num_integer::lcm(d[i], d[j]);
                    let (from, to) = if rng.gen_bool(0.5) { (i, j) } else { (j, i) };
                    edges.push(ValuedEdge { from, to, b: l * rng.gen_range(1..=2) });
                }
            }
        }
        let labels = (0..n).map(|i| format!("v{i}")).collect();
        cases.push(ValuedQuiver::new(labels, d, edges).map_err(err)?);
    }
    for vq in &cases {
        let (q, a) = unfold(vq).map_err(err)?;
        let t = vq.d.iter().fold(1, |acc, &x| num_integer::lcm(acc, x));
        ensure!(a.order() as i64 == t, "unfold order {} for t = {t}", a.order());
        let f = FoldData::new(&q, &a);
        // Orbits come back in the order of their least unfolded vertex, which
        // follows the original vertex order.
        ensure!(f.d == vq.d, "d {:?} vs {:?}", f.d, vq.d);
        let key = |e: &ValuedEdge| (e.from, e.to, e.b);
        let got: BTreeSet<_> = f.valued.edges.iter().map(key).collect();
        let want: BTreeSet<_> = vq.edges.iter().map(key).collect();
        ensure!(got == want, "edges {got:?} vs {want:?}");
    }
    Ok(())
}

fn double_skews() -> Check {
    for (name, q, a) in pairs() {
        let report = double_skew_check(&q, &a, DEFAULT_VERTEX_CAP).map_err(err)?;
        ensure!(report.found, "{name}: no intertwining isomorphism");
    }
    Ok(())
}

fn field_tables() -> Check {
    for size in 2u32..=256 {
        let Some((p, m)) = prime_power(size) else { continue };
        let f = FiniteField::new(p, m).map_err(err)?;
        let els: Vec<u32> = f.elements().collect();
        ensure!(els.len() as u32 == size, "F{size} has {} elements", els.len());
        for &x in &els {
            ensure!(f.add(x, 0) == x && f.mul(x, 1) == x, "F{size}: identities at {x}");
            ensure!(f.add(x, f.neg(x)) == 0, "F{size}: additive inverse of {x}");
            if x != 0 {
                let inv = f.inv(x).ok_or(format!("F{size}: {x} has no inverse"))?;
                ensure!(f.mul(x, inv) == 1, "F{size}: inverse of {x}");
            }
            for &y in &els {
                ensure!(f.add(x, y) == f.add(y, x) && f.mul(x, y) == f.mul(y, x), "F{size}: commutativity");
                for &z in &els {
                    ensure!(f.add(f.add(x, y), z) == f.add(x, f.add(y, z)), "F{size}: + associativity");
                    ensure!(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)), "F{size}: * associativity");
                    ensure!(
                        f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)),
                        "F{size}: distributivity"
                    );
                }
            }
        }
    }
    Ok(())
}

fn prime_power(n: u32) -> Option<(u32, u32)> {
    let p = (2..=n).find(|d| n % d == 0)?;
    let (mut k, mut m) = (n, 0);
    while k % p == 0 {
        k /= p;
        m += 1;
    }
    (k == 1).then_some((p, m))
}

fn c8_properties() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut failures = Vec::new();
    let mut run = |name: &str, r: Check| {
        if let Err(e) = r {
            failures.push(format!("{name}: {e}"));
        }
    };
    run("fold lemma", lemma_fold(&mut rng));
    run("h lemma", lemma_h(&mut rng));
    run("skew surjectivity", prop_skew_surjective());
    run("reflection functors", reflection_functors());
    run("Hom-Euler", hom_euler());
    run(
        "multiset",
        multiset_crosscheck(&a2(), gf(2, 1), 4, &EnumConfig::default())
            .map_err(err)
            .and_then(|r| if r.passed { Ok(()) } else { Err(format!("{:?}", r.entries)) }),
    );
    run("fold after unfold", fold_unfold(&mut rng));
    run("double skew", double_skews());
    run("field tables", field_tables());
    if failures.is_empty() {
        Ok(())
    } else {
        Err(failures.join("; "))
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check, Duration); 8] = [
        ("folding exactness", c1_folding, Duration::from_secs(1)),
        ("root engine", c2_roots, Duration::from_secs(1)),
        ("Kac at desk scale", c3_kac, Duration::from_secs(120)),
        ("folding theorem at desk scale", c4_main, Duration::from_secs(300)),
        ("order-6 counterexample", c5_counterexample, Duration::from_secs(60)),
        ("affine D4 orbit structure", c6_orbits, Duration::from_secs(60)),
        ("species theorem at desk scale", c7_species, Duration::from_secs(300)),
        ("property suites", c8_properties, Duration::from_secs(180)),
    ];
    let mut all = true;
    for (k, (name, check, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let verdict = match (&result, took <= *budget) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => format!("FAIL (over the {:?} budget)", budget),
            (Err(e), _) => format!("FAIL ({e})"),
        };
        all &= verdict == "PASS";
        println!("criterion {}: {name}: {verdict} [{:.2?}]", k + 1, took);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
