//! Acceptance checks, one line per criterion. All comparisons are exact;
//! the only tolerances are the wall-clock limits below.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use grouplabel::run_parallel;
use grouplabel_core::constructions::figures::{figure1, figure2, figure3, figure4};
use grouplabel_core::constructions::{
    construct_ant_path, construct_path_antimagic, construct_path_ek, decide_cycle_zk_cordial,
    decide_path_ek_cordial, project_labeling, rotate_to_star, rstar_to_path_antimagic,
    shift_labeling, sigma_max_formula, Construction,
};
use grouplabel_core::labeling::{
    class_counts, induce_vertex_labels, verify_a_antimagic, verify_a_star_antimagic,
    verify_ea_cordial,
};
use grouplabel_core::search::{
    compute_sigma_max, explore_with, EdgeLabelSearch, RStarSearch, VertexLabelSearch,
};
use grouplabel_core::{
    groups_of_order, Budget, EdgeLabeling, GroupElement, GroupSpec, SearchStatus, SimpleGraph,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

const LIMIT_FIGURES: Duration = Duration::from_secs(1);
const LIMIT_BLOCK_SWEEP: Duration = Duration::from_secs(5);
const LIMIT_PATH_EK: Duration = Duration::from_secs(600);
const LIMIT_CYCLE_SPOT: Duration = Duration::from_secs(120);
const LIMIT_SIGMA: Duration = Duration::from_secs(60);
const LIMIT_ANTIMAGIC: Duration = Duration::from_secs(900);
const LIMIT_STAR_REFUTATION: Duration = Duration::from_secs(60);
const LIMIT_RSTAR_SMALL: Duration = Duration::from_secs(1);
const LIMIT_RSTAR_LARGE: Duration = Duration::from_secs(60);
const LIMIT_PROPERTIES: Duration = Duration::from_secs(60);
const LIMIT_EXPLORE: Duration = Duration::from_secs(600);
const PROPERTY_CASES: u32 = 1000;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn spec(f: &[u64]) -> GroupSpec {
    GroupSpec::new(f.to_vec()).unwrap()
}

fn within(limit: Duration, start: Instant, detail: String) -> Check {
    let took = start.elapsed();
    if took <= limit {
        Ok(format!("{detail}; {took:.2?} ≤ {limit:?}"))
    } else {
        Err(format!("{detail}; took {took:.2?} > {limit:?}"))
    }
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn figures() -> Check {
    let t = Instant::now();
    let f1 = figure1();
    ensure(verify_a_star_antimagic(&f1.graph, &f1.labeling).is_ok(), || "figure 1 not A*-antimagic".into())?;
    let f4 = figure4();
    ensure(verify_a_antimagic(&f4.graph, &f4.labeling).is_ok(), || "figure 4 not A-antimagic".into())?;
    for (fig, g) in [(figure2(), spec(&[8, 3])), (figure3(), spec(&[24]))] {
        ensure(verify_ea_cordial(&fig.graph, &fig.labeling).is_ok(), || format!("figure {} not cordial", fig.number))?;
        let built = construct_ant_path(&g).map_err(|e| e.to_string())?;
        ensure(built == fig.labeling, || format!("figure {} not reproduced", fig.number))?;
    }
    within(LIMIT_FIGURES, t, "figures 1-4 verify; 2 and 3 reproduced bit-exactly".into())
}

fn block_sweep() -> Check {
    let t = Instant::now();
    let mut specs: Vec<GroupSpec> = (1..=48).flat_map(groups_of_order).collect();
    for f in [&[8u64, 3][..], &[16, 3], &[12, 3], &[3, 4], &[4, 3, 3], &[3, 8, 2]] {
        specs.push(spec(f));
    }
    let mut applicable = 0;
    for g in specs.iter().filter(|g| g.ant_decomposition().is_some()) {
        applicable += 1;
        let f = construct_ant_path(g).map_err(|e| format!("{g}: {e}"))?;
        let p = SimpleGraph::path(g.order() as usize).unwrap();
        ensure(verify_ea_cordial(&p, &f).is_ok(), || format!("{g}: not E_A-cordial"))?;
        ensure(verify_a_antimagic(&p, &f).is_ok(), || format!("{g}: vertex sums repeat"))?;
    }
    for must in [&[8u64][..], &[12], &[16], &[24], &[8, 3], &[16, 3], &[12, 3]] {
        ensure(spec(must).ant_decomposition().is_some(), || format!("{must:?} should be applicable"))?;
    }
    within(LIMIT_BLOCK_SWEEP, t, format!("{applicable} applicable presentations of order ≤ 48 verified"))
}

fn path_ek() -> Check {
    let t = Instant::now();
    let mut cases = 0;
    for k in 2..=6u64 {
        for n in 2..=18usize {
            let d = decide_path_ek_cordial(n as u64, k).map_err(|e| e.to_string())?;
            let search = EdgeLabelSearch::ea_cordial(&SimpleGraph::path(n).unwrap(), &spec(&[k])).unwrap();
            let out = run_parallel(&search, Budget::default());
            ensure(out.status != SearchStatus::Unknown, || format!("P_{n}/Z_{k}: search inconclusive"))?;
            ensure(out.is_found() == d, || format!("P_{n}/Z_{k}: predicate {d}, search {}", out.status.as_str()))?;
            let built = construct_path_ek(n, k, Budget::default()).map_err(|e| format!("P_{n}/Z_{k}: {e}"))?;
            match (&built, d) {
                (Construction::Built { labeling, .. }, true) => ensure(
                    verify_ea_cordial(&SimpleGraph::path(n).unwrap(), labeling).is_ok(),
                    || format!("P_{n}/Z_{k}: construction fails"),
                )?,
                (Construction::Impossible, false) => {}
                _ => return Err(format!("P_{n}/Z_{k}: construction {built:?} vs predicate {d}")),
            }
            cases += 1;
        }
    }
    within(LIMIT_PATH_EK, t, format!("{cases} (n, k) pairs agree and construct"))
}

fn cycle_spot() -> Check {
    let t = Instant::now();
    let mut line = Vec::new();
    for (n, k) in [(12usize, 4u64), (12, 12), (9, 3), (6, 2), (5, 5), (10, 5)] {
        let d = decide_cycle_zk_cordial(n as u64, k).map_err(|e| e.to_string())?;
        let s = VertexLabelSearch::a_cordial(&SimpleGraph::cycle(n).unwrap(), &spec(&[k])).unwrap();
        let out = run_parallel(&s, Budget::default());
        ensure(out.status != SearchStatus::Unknown, || format!("C_{n}/Z_{k}: inconclusive"))?;
        ensure(out.is_found() == d, || format!("C_{n}/Z_{k}: predicate {d}, search {}", out.status.as_str()))?;
        line.push(format!("C{n}/Z{k}={d}"));
    }
    within(LIMIT_CYCLE_SPOT, t, line.join(" "))
}

fn sigma() -> Check {
    let t = Instant::now();
    let groups: [&[u64]; 9] = [&[3], &[4], &[2, 2], &[5], &[6], &[7], &[8], &[4, 2], &[2, 2, 2]];
    let expected = [3u64, 3, 2, 5, 5, 7, 7, 8, 6];
    for (f, want) in groups.iter().zip(expected) {
        let g = spec(f);
        let formula = sigma_max_formula(&g).map_err(|e| e.to_string())?;
        let out = compute_sigma_max(&g, Budget::default()).map_err(|e| e.to_string())?;
        let found = out.certificate.map(|c| c.distinct_sum_count as u64);
        ensure(formula == want && found == Some(want), || format!("{g}: formula {formula}, search {found:?}, want {want}"))?;
    }
    within(LIMIT_SIGMA, t, "values 3,3,2,5,5,7,7,8,6 by formula and search".into())
}

fn antimagic_paths() -> Check {
    let t = Instant::now();
    let mut built = 0;
    for n in 4..=16u64 {
        for g in groups_of_order(n) {
            let c = construct_path_antimagic(&g, Budget::default()).map_err(|e| format!("{g}: {e}"))?;
            match c {
                Construction::Built { labeling, .. } if n % 4 != 2 => {
                    let p = SimpleGraph::path(n as usize).unwrap();
                    ensure(verify_a_antimagic(&p, &labeling).is_ok(), || format!("{g}: not A-antimagic"))?;
                    built += 1;
                }
                Construction::Impossible if n % 4 == 2 => {}
                Construction::Unknown { .. } if n > 15 && n % 4 != 2 => {}
                other => return Err(format!("{g}: {other:?}")),
            }
        }
    }
    for n in [6u64, 10] {
        for g in groups_of_order(n) {
            let s = EdgeLabelSearch::a_antimagic(&SimpleGraph::path(n as usize).unwrap(), &g).unwrap();
            let out = run_parallel(&s, Budget::default());
            ensure(out.status == SearchStatus::NotExists, || format!("P_{n} over {g}: {}", out.status.as_str()))?;
        }
    }
    within(LIMIT_ANTIMAGIC, t, format!("{built} groups built; orders 6, 10 exhausted"))
}

fn star_refutation() -> Check {
    let t = Instant::now();
    for m in [2usize, 3] {
        let g = GroupSpec::elementary_two(m);
        let p = SimpleGraph::path(g.order() as usize).unwrap();
        let out = run_parallel(&EdgeLabelSearch::a_star_antimagic(&p, &g).unwrap(), Budget::default());
        ensure(out.status == SearchStatus::NotExists, || format!("P_{} over {g}: {}", g.order(), out.status.as_str()))?;
    }
    let f1 = figure1();
    let g = GroupSpec::elementary_two(3);
    let out = run_parallel(&EdgeLabelSearch::a_star_antimagic(&f1.graph, &g).unwrap(), Budget::default());
    ensure(out.is_found(), || "figure 1 tree: no A*-antimagic labeling found".into())?;
    within(LIMIT_STAR_REFUTATION, t, "P4, P8 not A*-antimagic; figure 1 tree is".into())
}

fn rstar() -> Check {
    let mut detail = Vec::new();
    for (m, limit) in [(2usize, LIMIT_RSTAR_SMALL), (4, LIMIT_RSTAR_LARGE)] {
        let t = Instant::now();
        let g = GroupSpec::elementary_two(m);
        let out = run_parallel(&RStarSearch::new(&g).unwrap(), Budget::default());
        let rs = out.certificate.ok_or_else(|| format!("{g}: {}", out.status.as_str()))?;
        let took = t.elapsed();
        ensure(took <= limit, || format!("{g}: {took:.2?} > {limit:?}"))?;
        let f = rstar_to_path_antimagic(&rotate_to_star(rs)).map_err(|e| e.to_string())?;
        let p = SimpleGraph::path(g.order() as usize).unwrap();
        ensure(verify_a_antimagic(&p, &f).is_ok(), || format!("{g}: path not A-antimagic"))?;
        detail.push(format!("{g} {took:.2?}"));
    }
    Ok(detail.join(", "))
}

fn small_group() -> impl Strategy<Value = GroupSpec> {
    prop::collection::vec(2u64..=6, 1..=3).prop_map(|f| GroupSpec::new(f).unwrap())
}

fn with_labels(len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = (GroupSpec, Vec<GroupElement>)> {
    (small_group(), len).prop_flat_map(|(g, n)| {
        let order = g.order();
        (Just(g), prop::collection::vec(0..order, n))
            .prop_map(|(g, idx)| {
                let ls = idx.into_iter().map(|i| g.element_at(i)).collect();
                (g, ls)
            })
    })
}

fn fail<T: std::fmt::Debug>(name: &str, e: proptest::test_runner::TestError<T>) -> String {
    format!("{name}: {e}")
}

fn properties() -> Check {
    let t = Instant::now();
    let runner = || TestRunner::new(Config {
        cases: PROPERTY_CASES,
        failure_persistence: None,
        ..Config::default()
    });

    runner()
        .run(&with_labels(3..=3), |(g, e)| {
            let (a, b, c) = (&e[0], &e[1], &e[2]);
            prop_assert_eq!(g.add(&g.add(a, b).unwrap(), c).unwrap(), g.add(a, &g.add(b, c).unwrap()).unwrap());
            prop_assert_eq!(g.add(a, b).unwrap(), g.add(b, a).unwrap());
            prop_assert_eq!(&g.add(a, &g.zero()).unwrap(), a);
            prop_assert!(g.add(a, &g.negate(a).unwrap()).unwrap().is_zero());
            Ok(())
        })
        .map_err(|e| fail("group axioms", e))?;

    runner()
        .run(&(with_labels(2..=12), any::<u64>()), |((g, ls), seed)| {
            let n = ls.len() + 1;
            let p = SimpleGraph::path(n).unwrap();
            let f = EdgeLabeling { group: g.clone(), labels: ls };
            let h = EdgeLabeling {
                group: g.clone(),
                labels: (0..n as u64 - 1).map(|i| g.element_at(seed.rotate_left(i as u32) % g.order())).collect(),
            };
            let lhs = induce_vertex_labels(&p, &f.pointwise_add(&h).unwrap()).unwrap();
            let rhs = induce_vertex_labels(&p, &f).unwrap().pointwise_add(&induce_vertex_labels(&p, &h).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            let total = |xs: &[GroupElement]| xs.iter().fold(g.zero(), |a, x| g.add(&a, x).unwrap());
            prop_assert_eq!(
                total(&induce_vertex_labels(&p, &f).unwrap().labels),
                g.scale(&total(&f.labels), 2).unwrap()
            );
            Ok(())
        })
        .map_err(|e| fail("linearity and sum conservation", e))?;

    runner()
        .run(&(with_labels(3..=12), any::<u64>()), |((g, ls), s)| {
            let c = SimpleGraph::cycle(ls.len()).unwrap();
            let f = EdgeLabeling { group: g.clone(), labels: ls };
            let shift = g.element_at(s % g.order());
            let moved = shift_labeling(&f, &g.negate(&shift).unwrap()).unwrap();
            let two = g.scale(&shift, 2).unwrap();
            let a = induce_vertex_labels(&c, &f).unwrap().labels;
            let b = induce_vertex_labels(&c, &moved).unwrap().labels;
            for (x, y) in a.iter().zip(&b) {
                prop_assert_eq!(&g.add(x, &two).unwrap(), y);
            }
            prop_assert_eq!(verify_ea_cordial(&c, &f).is_ok(), verify_ea_cordial(&c, &moved).is_ok());
            Ok(())
        })
        .map_err(|e| fail("cycle shift by 2g", e))?;

    runner()
        .run(&with_labels(1..=16), |(g, ls)| {
            let counts = class_counts(&g, &ls).unwrap();
            let b = GroupSpec::new(vec![g.factors()[0]]).unwrap();
            let projected: Vec<GroupElement> = ls.iter().map(|a| GroupElement::new(vec![a.residues()[0]])).collect();
            let out = class_counts(&b, &projected).unwrap();
            for (elem, n) in out {
                let sum: usize = counts.iter().filter(|(a, _)| a.residues()[0] == elem.residues()[0]).map(|(_, c)| c).sum();
                prop_assert_eq!(n, sum);
            }
            Ok(())
        })
        .map_err(|e| fail("projection count identity", e))?;

    // Searched instances: every tree of order |A| for small groups.
    let tree_groups: [&[u64]; 6] = [&[2, 2], &[4], &[5], &[2, 3], &[7], &[2, 4]];
    let mut searched = 0;
    for f in tree_groups {
        let g = spec(f);
        for tree in grouplabel_core::search::enumerate_trees(g.order() as usize).unwrap() {
            let out = run_parallel(&EdgeLabelSearch::ea_cordial(&tree, &g).unwrap(), Budget::default());
            if let Some(l) = &out.certificate {
                ensure(verify_a_antimagic(&tree, l).is_ok(), || format!("{g}: cordial but not antimagic"))?;
                let p = project_labeling(&tree, l, &[0]).map_err(|e| e.to_string())?;
                ensure(verify_ea_cordial(&tree, &p).is_ok(), || format!("{g}: projection not cordial"))?;
            }
            let anti = run_parallel(&EdgeLabelSearch::a_antimagic(&tree, &g).unwrap(), Budget::default());
            ensure(anti.status == out.status, || format!("{g}: cordial and antimagic searches differ"))?;
            searched += 1;
        }
    }
    within(LIMIT_PROPERTIES, t, format!("4 suites × {PROPERTY_CASES} cases, {searched} searched trees"))
}

fn explore() -> Check {
    let t = Instant::now();
    let report = explore_with(8, |s| run_parallel(s, Budget::default())).map_err(|e| e.to_string())?;
    for row in &report.rows {
        let want = match row.n {
            2 | 6 => SearchStatus::NotExists,
            3 | 4 | 5 | 7 | 8 => SearchStatus::Found,
            _ => continue,
        };
        ensure(row.antimagic.status == want, || {
            format!("n={} {} tree {:?}: {}", row.n, row.group, row.tree.edges(), row.antimagic.status.as_str())
        })?;
    }
    within(LIMIT_EXPLORE, t, format!("{} rows match", report.rows.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("figure fidelity", figures),
        ("block construction sweep", block_sweep),
        ("E_{Z_k}-cordial paths, 2 ≤ k ≤ 6, 2 ≤ n ≤ 18", path_ek),
        ("Z_k-cordial cycle spot-check", cycle_spot),
        ("sigma_max for orders 3-8", sigma),
        ("A-antimagic paths for orders 4-16", antimagic_paths),
        ("A*-antimagic refutation", star_refutation),
        ("R*-sequence route", rstar),
        ("property suites", properties),
        ("explore_conjecture(8)", explore),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
