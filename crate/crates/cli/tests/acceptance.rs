//! Acceptance gate, run without the libtest harness so every criterion
//! prints its `PASS`/`FAIL` line. Exits non-zero if any criterion fails.
//! Timing limits are wall-clock and fixed here.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use numsg::construct::{dual, glue, GluingSpec};
use numsg::enumerate::count_by_genus;
use numsg::suites::{GluingBounds, Sweep};
use numsg::valuation::length_between;
use numsg::{build_semigroup, classify, n_of_set, probe_open_questions, rohrbach_number, NumericalSemigroup};

const EXAMPLE_LIMIT: Duration = Duration::from_millis(10);
const SWEEP_LIMIT: Duration = Duration::from_secs(60);
const ROHRBACH_5_LIMIT: Duration = Duration::from_secs(5);
const ROHRBACH_8_LIMIT: Duration = Duration::from_secs(60);
const PROBE_LIMIT: Duration = Duration::from_secs(120);

fn verdict(n: u32, title: &str, failures: &[String]) -> bool {
    if failures.is_empty() {
        println!("criterion {n} PASS: {title}");
    } else {
        println!("criterion {n} FAIL: {title}: {}", failures.join("; "));
    }
    failures.is_empty()
}

fn h(g: &[i64]) -> NumericalSemigroup {
    build_semigroup(g).unwrap()
}

fn check(failures: &mut Vec<String>, ok: bool, what: impl Into<String>) {
    if !ok {
        failures.push(what.into());
    }
}

fn criterion_1_example_table() -> bool {
    let mut f = Vec::new();
    // (generators, s, type, conductor or None, PF or None)
    type Row = (&'static [i64], usize, usize, Option<i64>, Option<&'static [i64]>);
    let rows: [Row; 11] = [
        (&[5, 8, 9, 11], 1, 2, Some(13), None),
        (&[4, 6, 9, 11], 2, 3, None, None),
        (&[4, 6, 11, 13], 2, 3, Some(10), None),
        (&[5, 7, 8, 11], 2, 3, None, None),
        (&[8, 11, 12, 13, 15, 17, 18], 4, 6, None, Some(&[4, 5, 7, 9, 10, 14])),
        (&[34, 51, 53, 70], 2, 3, Some(832), Some(&[17, 814, 831])),
        (&[4, 9, 11], 1, 2, None, Some(&[7, 14])),
        (&[5, 6, 7, 9], 2, 2, None, Some(&[4, 8])),
        (&[12, 13, 14, 15, 16, 19], 6, 6, Some(24), Some(&[17, 18, 20, 21, 22, 23])),
        (&[4, 5, 11], 2, 2, None, None),
        (&[5, 11, 17, 18, 19], 3, 4, None, None),
    ];
    for (gens, s, t, c, pf) in rows {
        let start = Instant::now();
        let sg = h(gens);
        let r = classify(&sg).unwrap();
        let colength = length_between(&sg.conductor_values(), &sg.values()).unwrap();
        let elapsed = start.elapsed();
        let tag = format!("{sg}");
        check(&mut f, elapsed < EXAMPLE_LIMIT, format!("{tag} took {elapsed:?}"));
        check(&mut f, r.reduced_type == s, format!("{tag} s = {}", r.reduced_type));
        check(&mut f, r.semigroup_type == t, format!("{tag} type = {}", r.semigroup_type));
        if let Some(c) = c {
            check(&mut f, r.conductor == c, format!("{tag} c = {}", r.conductor));
        }
        if let Some(pf) = pf {
            check(&mut f, r.pf_set == pf, format!("{tag} PF = {:?}", r.pf_set));
        }
        match gens {
            [4, 6, 9, 11] => check(&mut f, colength == 3, format!("{tag} length {colength}")),
            [5, 7, 8, 11] => {
                check(&mut f, colength == 4, format!("{tag} length {colength}"));
                check(&mut f, !r.minimal_multiplicity, format!("{tag} minimal multiplicity"));
            }
            [8, 11, 12, 13, 15, 17, 18] | [34, 51, 53, 70] => {
                check(&mut f, r.almost_gorenstein, format!("{tag} not AG"))
            }
            [4, 9, 11] | [5, 6, 7, 9] => {
                check(&mut f, r.pseudo_symmetric, format!("{tag} not pseudo-symmetric"))
            }
            [4, 5, 11] => check(&mut f, !r.far_flung_gorenstein, format!("{tag} FFG")),
            [5, 11, 17, 18, 19] => check(&mut f, r.far_flung_gorenstein, format!("{tag} not FFG")),
            _ => {}
        }
    }
    verdict(1, "worked-example regression table", &f)
}

fn criterion_2_gluings() -> bool {
    let mut f = Vec::new();
    // (H1, H2, x, y, conductor, PF, s)
    type Case = (&'static [i64], &'static [i64], i64, i64, i64, &'static [i64], usize);
    let cases: [Case; 3] = [
        (&[4, 9, 11], &[5, 6, 7, 9], 10, 13, 375, &[252, 304, 322, 374], 1),
        (&[5, 6, 7, 9], &[3, 7, 8], 6, 11, 170, &[134, 145, 158, 169], 3),
        (
            &[4, 9, 11],
            &[12, 13, 14, 15, 16, 19],
            24,
            13,
            948,
            &[701, 714, 740, 753, 766, 779, 869, 882, 908, 921, 934, 947],
            6,
        ),
    ];
    for (h1, h2, x, y, c, pf, s) in cases {
        let spec = GluingSpec::new(h(h1), h(h2), x, y).unwrap();
        match glue(&spec) {
            Ok(g) => {
                check(&mut f, g.conductor() == c, format!("{g} c = {}", g.conductor()));
                check(&mut f, g.pseudo_frobenius().unwrap() == pf, format!("{g} PF"));
                check(&mut f, g.reduced_type().unwrap() == s, format!("{g} s"));
            }
            Err(e) => f.push(format!("gluing assertion tripped: {e}")),
        }
    }
    verdict(2, "gluing regressions", &f)
}

fn criterion_3_duals() -> bool {
    let mut f = Vec::new();
    let pairs: [(&[i64], &[i64]); 4] = [
        (&[4, 5, 6], &[4, 5, 6, 7]),
        (&[4, 6, 7, 9], &[2, 3]),
        (&[5, 7, 9], &[5, 7, 9, 11, 13]),
        (&[5, 9, 11, 12], &[5, 6, 7, 9]),
    ];
    for (from, to) in pairs {
        let b = dual(&h(from)).unwrap();
        check(&mut f, b.generators() == to, format!("dual of {} is {b}", h(from)));
    }
    let b = dual(&h(&[40, 65, 78, 90, 91, 110, 117])).unwrap();
    check(&mut f, b.conductor() == 335, format!("c_B = {}", b.conductor()));
    let expected = [187, 212, 213, 226, 232, 239, 257, 264, 282, 283, 284, 296, 309, 334];
    check(&mut f, b.pseudo_frobenius().unwrap() == expected, "PF(H*) of the 7-generator example");
    verdict(3, "dual regressions", &f)
}

fn gap_set_count(g: usize) -> usize {
    if g == 0 {
        return 1;
    }
    let top = 2 * g - 1;
    let mut found = BTreeSet::new();
    for mask in 0u32..(1 << top) {
        if mask.count_ones() as usize != g {
            continue;
        }
        let gap = |x: usize| x >= 1 && x <= top && mask & (1 << (x - 1)) != 0;
        let closed = (1..=top)
            .filter(|&a| !gap(a))
            .all(|a| (a..=top).filter(|&b| !gap(b)).all(|b| !gap(a + b)));
        if closed {
            found.insert(mask);
        }
    }
    found.len()
}

fn criterion_4_theorem_sweeps() -> bool {
    let mut f = Vec::new();
    let oracle: Vec<usize> = (0..=8).map(gap_set_count).collect();
    check(&mut f, count_by_genus(8).unwrap() == oracle, "counts differ from gap-set oracle");

    let start = Instant::now();
    let results = Sweep::new(15, GluingBounds::default()).unwrap().run_all().unwrap();
    let elapsed = start.elapsed();
    for r in &results {
        check(&mut f, r.passed(), format!("{} has {} violations", r.suite_name, r.violations.len()));
    }
    check(&mut f, elapsed < SWEEP_LIMIT, format!("sweeps took {elapsed:?}"));
    verdict(4, &format!("all {} suites clean at genus 15 in {elapsed:.2?}", results.len()), &f)
}

fn criterion_5_classifications() -> bool {
    let mut f = Vec::new();
    let sweep = Sweep::new(12, GluingBounds::default()).unwrap();

    let cm = sweep.run("cm-classification").unwrap();
    check(&mut f, cm.passed(), format!("cm-classification violations {:?}", cm.violations));
    let listed: Vec<Vec<i64>> = cm.findings.iter().map(|r| r.generators.clone()).collect();
    check(&mut f, listed == [vec![3, 4, 5], vec![3, 5, 7]], format!("CM-finite non-Gorenstein {listed:?}"));

    let re = sweep.run("ref-ag-classification").unwrap();
    check(&mut f, re.passed(), format!("ref-ag-classification violations {:?}", re.violations));
    let minimal: Vec<Vec<i64>> = re
        .findings
        .iter()
        .filter(|r| r.detail.contains("minimal reduced type"))
        .map(|r| r.generators.clone())
        .collect();
    check(&mut f, minimal == [vec![3, 7, 11], vec![3, 8, 13]], format!("AG minimal reduced type {minimal:?}"));

    // Every family member with b1 <= 8 that lies within genus 12.
    let mut members = Vec::new();
    for b1 in 3..=8i64 {
        members.push((b1..2 * b1).collect::<Vec<_>>());
        let mut second = vec![b1];
        second.extend(b1 + 2..2 * b1);
        second.push(2 * b1 + 1);
        members.push(second);
        if b1 >= 4 {
            let mut third = vec![b1, b1 + 1];
            third.extend(b1 + 3..2 * b1);
            members.push(third);
        }
    }
    let confirmed: BTreeSet<Vec<i64>> = re
        .findings
        .iter()
        .filter(|r| r.detail.contains("Ref-finite confirmed"))
        .map(|r| r.generators.clone())
        .collect();
    for m in members {
        let sg = h(&m);
        if sg.genus() <= 12 {
            check(&mut f, confirmed.contains(sg.generators()), format!("{sg} not confirmed Ref-finite"));
            let r = classify(&sg).unwrap();
            check(&mut f, r.ref_finite == numsg::RefFiniteness::Finite, format!("{sg} Ref verdict {}", r.ref_finite));
        }
    }
    verdict(5, "CM and Ref classification reproductions at genus 12", &f)
}

fn criterion_6_rohrbach() -> bool {
    let mut f = Vec::new();
    let start = Instant::now();
    let five = rohrbach_number(5).unwrap();
    let t5 = start.elapsed();
    check(&mut f, five.value == 13, format!("n(5) = {}", five.value));
    check(&mut f, t5 < ROHRBACH_5_LIMIT, format!("r = 5 took {t5:?}"));

    let start = Instant::now();
    for r in 1..=8 {
        let w = rohrbach_number(r).unwrap();
        let set: Vec<i64> = w.witness.iter().map(|&a| a as i64).collect();
        check(&mut f, w.witness.len() == r, format!("r = {r} witness size"));
        check(&mut f, n_of_set(&set).unwrap() == w.value, format!("r = {r} witness fails"));
    }
    let t8 = start.elapsed();
    check(&mut f, t8 < ROHRBACH_8_LIMIT, format!("r <= 8 took {t8:?}"));
    verdict(6, &format!("Rohrbach n(5) = 13 in {t5:.2?}, r <= 8 in {t8:.2?}"), &f)
}

fn criterion_7_probe() -> bool {
    let mut f = Vec::new();
    let start = Instant::now();
    let probe = probe_open_questions(12).unwrap();
    let elapsed = start.elapsed();
    for finding in &probe.findings {
        f.push(format!("{:?}: {}", finding.generators, finding.detail));
    }
    check(&mut f, elapsed < PROBE_LIMIT, format!("probe took {elapsed:?}"));
    verdict(7, "open-question probe at genus 12 has no findings", &f)
}

fn criterion_8_determinism() -> bool {
    let bin = env!("CARGO_BIN_EXE_numsg");
    let run = || {
        Command::new(bin)
            .args(["verify", "--suite", "all", "--max-genus", "12", "--workers", "8"])
            .output()
            .unwrap()
    };
    let (a, b) = (run(), run());
    let mut f = Vec::new();
    check(&mut f, a.status.success() && b.status.success(), format!("exit {:?} / {:?}", a.status, b.status));
    check(&mut f, !a.stdout.is_empty() && a.stdout == b.stdout, "outputs differ");
    verdict(8, "verify output is byte-identical across runs", &f)
}

fn main() {
    let criteria: [fn() -> bool; 8] = [
        criterion_1_example_table,
        criterion_2_gluings,
        criterion_3_duals,
        criterion_4_theorem_sweeps,
        criterion_5_classifications,
        criterion_6_rohrbach,
        criterion_7_probe,
        criterion_8_determinism,
    ];
    let mut failed = 0;
    for (i, criterion) in criteria.into_iter().enumerate() {
        let passed = std::panic::catch_unwind(criterion).unwrap_or_else(|_| {
            println!("criterion {} FAIL: panicked", i + 1);
            false
        });
        failed += usize::from(!passed);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
