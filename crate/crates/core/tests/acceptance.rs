//! Acceptance suite: one line per criterion, non-zero exit if any fails.

mod common;

use std::time::{Duration, Instant};

use homrecon::cli::run_cli_with;
use homrecon::generators::{partition_coloring, random_coloring, A0Change};
use homrecon::reconstruct::constraints_of;
use homrecon::rng::SplitMix64;
use homrecon::survey::{hunt_no_critical, prefix_profile, recognize_triples};
use homrecon::{
    check_criterio_equiv, classify, critical_pairs, generate, is_reconstructible,
    maximal_homogeneous, solve_all, Coloring, GeneratorSpec, TripleFamily,
};

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration) -> Result<(), String> {
    check(start.elapsed() <= budget, || {
        format!("took {:.1?}, budget {budget:?}", start.elapsed())
    })
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for n in 3..=5 {
        for (_, class) in common::classes_by_triples(n) {
            for phi in &class {
                let sols = solve_all(&constraints_of(phi).unwrap(), 1 << 12).unwrap();
                check(!sols.truncated && sols.colorings == class, || {
                    format!("solver disagrees with brute force on {phi:?}")
                })?;
                checked += 1;
            }
        }
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{checked} colorings, zero mismatches"))
}

fn triples_determine_family() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0u64;
    for n in 4..=5 {
        let all = common::all_colorings(n);
        let keys: Vec<(Vec<[usize; 3]>, Vec<homrecon::VertexSet>)> = all
            .iter()
            .map(|phi| {
                (
                    phi.hom_triples()
                        .unwrap()
                        .triples()
                        .iter()
                        .map(|&(a, b, c)| [a, b, c])
                        .collect(),
                    phi.homogeneous_family(3).unwrap(),
                )
            })
            .collect();
        for a in &keys {
            for b in &keys {
                check((a.0 == b.0) == (a.1 == b.1), || {
                    "triples and family disagree".into()
                })?;
                pairs += 1;
            }
        }
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("{pairs} ordered pairs, zero violations"))
}

fn r_never_two() -> Outcome {
    let mut seen = 0;
    for n in 3..=5 {
        for (_, class) in common::classes_by_triples(n) {
            for phi in &class {
                let r = classify(phi).map_err(|e| format!("{phi:?}: {e}"))?.r_value;
                check(r != 2 && r == common::r_brute(phi, &class), || {
                    format!("r = {r} on {phi:?}")
                })?;
                seen += 1;
            }
        }
    }
    let mut rng = SplitMix64::new(2024);
    for n in [6, 7] {
        for _ in 0..10_000 {
            let phi = random_coloring(n, rng.next_u64());
            match classify(&phi) {
                Ok(rep) => check(rep.r_value != 2, || format!("r = 2 on {phi:?}"))?,
                Err(e) => return Err(format!("{phi:?}: {e}")),
            }
            seen += 1;
        }
    }
    Ok(format!("{seen} colorings, r = 2 never observed"))
}

fn critical_iff_r_one() -> Outcome {
    let mut seen = 0;
    for n in 3..=5 {
        for phi in common::all_colorings(n) {
            let rep = classify(&phi).map_err(|e| e.to_string())?;
            let crit = common::critical(&phi);
            check(rep.critical_pairs == crit, || {
                format!("critical pairs differ on {phi:?}")
            })?;
            check((rep.r_value == 1) == !crit.is_empty(), || {
                format!("r/critical mismatch on {phi:?}")
            })?;
            check(crit.is_empty() || !rep.reconstructible, || {
                format!("critical yet reconstructible: {phi:?}")
            })?;
            check(check_criterio_equiv(&phi).unwrap(), || {
                format!("single-vertex criterion fails on {phi:?}")
            })?;
            seen += 1;
        }
    }
    Ok(format!("{seen} colorings, zero violations"))
}

fn gen(spec: GeneratorSpec) -> Coloring {
    generate(&spec).unwrap()
}

fn worked_examples() -> Outcome {
    for n in 3..=8 {
        check(is_reconstructible(&Coloring::ones(n)).unwrap(), || {
            format!("constant n = {n}")
        })?;
        check(is_reconstructible(&Coloring::zeros(n)).unwrap(), || {
            format!("constant zero n = {n}")
        })?;
    }
    let particion = partition_coloring(&[vec![0, 1, 2], vec![3, 4], vec![5]]).unwrap();
    check(is_reconstructible(&particion).unwrap(), || {
        "particion".into()
    })?;

    let eo = partition_coloring(&[vec![0, 2, 4], vec![1, 3, 5]]).unwrap();
    check(!is_reconstructible(&eo).unwrap(), || {
        "even/odd reconstructible".into()
    })?;
    check(critical_pairs(&eo).unwrap().contains(&(0, 1)), || {
        "{0,1} not critical".into()
    })?;

    for m in 0u32..64 {
        let inner = Coloring::from_bits(4, (0..6).map(|p| (m >> p) & 1 == 1)).unwrap();
        let phi = gen(GeneratorSpec::PropertyEGadget { inner });
        check(is_reconstructible(&phi).unwrap(), || {
            format!("property-E gadget {m}")
        })?;
    }
    for m in 0u32..1024 {
        let inner = Coloring::from_bits(5, (0..10).map(|p| (m >> p) & 1 == 1)).unwrap();
        let phi = gen(GeneratorSpec::Particion2Gadget { inner });
        check(is_reconstructible(&phi).unwrap(), || {
            format!("particion2 gadget {m}")
        })?;
    }

    let start = Instant::now();
    let tree = gen(GeneratorSpec::BinaryTree { depth: 3 });
    check(tree.n() == 15 && is_reconstructible(&tree).unwrap(), || {
        "binary tree".into()
    })?;
    within(start, Duration::from_secs(60))?;

    let a = gen(GeneratorSpec::A0Finite {
        n: 6,
        change: A0Change::A,
    });
    check(!is_reconstructible(&a).unwrap(), || {
        "a0 a-variant reconstructible".into()
    })?;
    check(critical_pairs(&a).unwrap().contains(&(4, 5)), || {
        "{4,5} not critical".into()
    })?;
    let b = gen(GeneratorSpec::A0Finite {
        n: 6,
        change: A0Change::B,
    });
    check(is_reconstructible(&b).unwrap(), || {
        "a0 b-variant unreconstructible".into()
    })?;

    let three = gen(GeneratorSpec::ThreeMax { a: 3, b: 3, c: 4 });
    check(critical_pairs(&three).unwrap().contains(&(0, 3)), || {
        "{a0,b0} not critical".into()
    })?;

    let ex = gen(GeneratorSpec::ExAnonempty { n: 12 });
    check(maximal_homogeneous(&ex).unwrap().len() == 2, || {
        "ExAnonempty maximal count".into()
    })?;
    check(!is_reconstructible(&ex).unwrap(), || {
        "ExAnonempty reconstructible".into()
    })?;
    Ok("all listed verdicts match".into())
}

fn partitions_three_blocks() -> Outcome {
    let start = Instant::now();
    let mut seen = 0;
    for n in 3..=8 {
        for blocks in common::set_partitions(n)
            .into_iter()
            .filter(|b| b.len() >= 3)
        {
            let phi = partition_coloring(&blocks).unwrap();
            check(phi == common::partition(n, &blocks), || {
                "generator mismatch".into()
            })?;
            check(is_reconstructible(&phi).unwrap(), || {
                format!("{blocks:?} unreconstructible")
            })?;
            seen += 1;
        }
    }
    within(start, Duration::from_secs(600))?;
    Ok(format!("{seen} partitions, all reconstructible"))
}

fn partitions_two_blocks() -> Outcome {
    let mut seen = 0;
    for n in 3..=7 {
        for blocks in common::set_partitions(n)
            .into_iter()
            .filter(|b| b.len() == 2)
        {
            let phi = partition_coloring(&blocks).unwrap();
            check(!is_reconstructible(&phi).unwrap(), || {
                format!("{blocks:?} reconstructible")
            })?;
            let cross = critical_pairs(&phi)
                .unwrap()
                .iter()
                .any(|&(x, y)| blocks[0].contains(&x) != blocks[0].contains(&y));
            check(cross, || {
                format!("{blocks:?} has no cross-block critical pair")
            })?;
            seen += 1;
        }
    }
    // both blocks need four vertices, so the finite changes run at n = 8, 9
    for (p, q) in [(4, 4), (4, 5)] {
        let a: Vec<usize> = (0..p).collect();
        let b: Vec<usize> = (p..p + q).collect();
        let phi = partition_coloring(&[a, b]).unwrap();
        let pool = [0, 1, p, p + 1];
        let pairs: Vec<(usize, usize)> = (0..4)
            .flat_map(|x| (x + 1..4).map(move |y| (pool[x], pool[y])))
            .collect();
        for m in 0u32..1 << pairs.len() {
            let change: Vec<_> = (0..pairs.len())
                .filter(|k| (m >> k) & 1 == 1)
                .map(|k| pairs[k])
                .collect();
            let psi = phi.finite_change(&change).unwrap();
            check(!is_reconstructible(&psi).unwrap(), || {
                format!("change {change:?} of {p}+{q} reconstructible")
            })?;
            seen += 1;
        }
    }
    Ok(format!("{seen} colorings, all unreconstructible"))
}

fn hunt_without_critical() -> Outcome {
    check(hunt_no_critical(4, 0).unwrap().is_empty(), || {
        "n = 4 not empty".into()
    })?;
    let mut sizes = Vec::new();
    for n in [5, 6] {
        let found = hunt_no_critical(n, 0).unwrap();
        check(!found.is_empty(), || format!("n = {n} empty"))?;
        for phi in &found {
            check(common::critical(phi).is_empty(), || {
                format!("{phi:?} has a critical pair")
            })?;
            let r = classify(phi).unwrap().r_value;
            check(r >= 3, || format!("r = {r} on {phi:?}"))?;
        }
        sizes.push(found.len());
    }
    Ok(format!(
        "n=4: 0, n=5: {}, n=6: {} witnesses, all r >= 3",
        sizes[0], sizes[1]
    ))
}

fn selector_contract() -> Outcome {
    let mut seen = 0;
    for n in 3..=5 {
        for phi in common::all_colorings(n) {
            let t = phi.hom_triples().unwrap();
            let out = recognize_triples(&t).unwrap();
            let canon = out.canonical_reconstruction.ok_or("not realizable")?;
            check(
                out.realizable && out.infeasibility_witness.is_none(),
                || "bad outcome".into(),
            )?;
            check(canon.hom_triples().unwrap() == t, || {
                format!("h(g(L)) != L for {phi:?}")
            })?;
            check(canon <= phi && canon <= phi.complement(), || {
                "reconstruction not least".into()
            })?;
            seen += 1;
        }
    }
    let forced = TripleFamily::from_triples(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3)]).unwrap();
    let out = recognize_triples(&forced).unwrap();
    check(
        !out.realizable && out.canonical_reconstruction.is_none(),
        || "forced family realizable".into(),
    )?;
    check(out.infeasibility_witness == Some((1, 2, 3)), || {
        format!("witness {:?}", out.infeasibility_witness)
    })?;
    Ok(format!(
        "{seen} families realized; forced merge rejected at {{1,2,3}}"
    ))
}

fn final_recursion_profile() -> Outcome {
    let spec = GeneratorSpec::FinalRecursion { n: 10 };
    let phi = gen(spec.clone());
    for p in prefix_profile(&spec, 10).unwrap() {
        let m = p.m;
        check(p.critical_pairs == common::critical(&phi.prefix(m)), || {
            format!("m = {m}: oracle mismatch")
        })?;
        check(p.critical_pairs.contains(&(0, m - 1)), || {
            format!("m = {m}: {{0,{}}} not critical", m - 1)
        })?;
        check(m < 5 || !p.critical_pairs.contains(&(0, m - 2)), || {
            format!("m = {m}: {{0,{}}} critical", m - 2)
        })?;
        check(!p.reconstructible, || format!("m = {m} reconstructible"))?;
    }
    Ok("prefixes 3..=10 match".into())
}

fn cli(args: &[&str]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("homrecon")
        .chain(args.iter().copied())
        .map(String::from);
    let code = run_cli_with(argv, &mut std::io::empty(), &mut out, &mut err);
    (code, out)
}

fn determinism() -> Outcome {
    let runs: [&[&str]; 4] = [
        &["survey", "--n", "5"],
        &["survey", "--n", "7", "--samples", "300", "--seed", "77"],
        &["hunt", "no-critical", "--n", "6"],
        &["hunt", "segment", "--n", "6", "--n0", "4"],
    ];
    for args in runs {
        let mut outputs = Vec::new();
        for workers in ["1", "8", "1", "8"] {
            let mut full = args.to_vec();
            full.extend(["--workers", workers]);
            let (code, out) = cli(&full);
            check(code == 0, || format!("{args:?} exited {code}"))?;
            outputs.push(out);
        }
        check(outputs.windows(2).all(|w| w[0] == w[1]), || {
            format!("{args:?} differs between runs")
        })?;
    }
    Ok("survey and hunts byte-identical for 1 and 8 workers".into())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 11] = [
        ("solver equals brute force, n = 3..5", oracle_equivalence),
        (
            "triples determine the homogeneous family, n = 4, 5",
            triples_determine_family,
        ),
        ("r-value never 2", r_never_two),
        (
            "critical pair iff r = 1, single-vertex criterion",
            critical_iff_r_one,
        ),
        ("worked examples", worked_examples),
        (
            "partitions with >= 3 blocks reconstructible, n <= 8",
            partitions_three_blocks,
        ),
        (
            "two-block partitions and their finite changes unreconstructible",
            partitions_two_blocks,
        ),
        (
            "unreconstructible colorings without critical pairs",
            hunt_without_critical,
        ),
        (
            "canonical reconstruction realizes every triple family",
            selector_contract,
        ),
        (
            "final recursion prefix profile to n = 10",
            final_recursion_profile,
        ),
        ("campaign determinism across worker counts", determinism),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2}. {name}: {detail} ({secs:.1}s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2}. {name}: {why} ({secs:.1}s)", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
