//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero if any fails.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use matadj::adjoint::{
    check_chain_independence, check_modular_pairs, check_rank_complement, contract_adjoint, delete_adjoint,
    full_verification, induced_map, minor_adjoint, vanishing_hyperplanes_by_codependence,
    vanishing_hyperplanes_by_rank, verify_adjoint,
};
use matadj::catalog::catalog;
use matadj::minor::surviving_labels;
use matadj::{adjoint_from_representation, AdjointMap, Check, ElementSet, Matroid, SearchBudget};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn definition_conformance() -> Outcome {
    let mut slowest = Duration::ZERO;
    let mut count = 0;
    for e in catalog() {
        let Some(rep) = &e.representation else { continue };
        let start = Instant::now();
        let phi = adjoint_from_representation(&e.matroid, rep).map_err(|err| format!("{}: {err}", e.name))?;
        let report = verify_adjoint(&phi);
        let took = start.elapsed();
        ensure(report.valid, || format!("{}:\n{report}", e.name))?;
        ensure(took < Duration::from_secs(1), || format!("{} took {took:?}", e.name))?;
        slowest = slowest.max(took);
        count += 1;
    }
    Ok(format!("{count} fixtures, slowest {slowest:?}"))
}

fn rank_and_chain_theorems() -> Outcome {
    let mut chains = 0;
    for (e, phi) in fixture_maps() {
        let report = check_rank_complement(&phi);
        ensure(report.valid, || format!("{}:\n{report}", e.name))?;
        for f in phi.source().flats().flats() {
            let chain = phi.source().hyperplane_chain(f).map_err(|err| err.to_string())?;
            let report = check_chain_independence(&phi, &chain).map_err(|err| format!("{} {f}: {err}", e.name))?;
            ensure(report.valid, || format!("{} chain of {f}:\n{report}", e.name))?;
            chains += 1;
        }
    }
    Ok(format!("{chains} chains"))
}

fn minor_closedness() -> Outcome {
    let start = Instant::now();
    let mut specs = 0;
    for (e, phi) in fixture_maps() {
        for spec in minor_specs(e.matroid.n(), 3) {
            let minor = minor_adjoint(&phi, &spec).map_err(|err| format!("{} {spec:?}: {err}", e.name))?;
            let report = full_verification(&minor);
            ensure(report.valid, || format!("{} {spec:?}:\n{report}", e.name))?;
            ensure(minor.source() == &e.matroid.minor(&spec), || format!("{} {spec:?}: wrong minor", e.name))?;
            specs += 1;
        }
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(60), || format!("sweep took {took:?}"))?;
    Ok(format!("{specs} (fixture, spec) pairs in {took:?}"))
}

fn oracle_equivalence() -> Outcome {
    let mut sets = 0;
    for e in catalog() {
        let m = &e.matroid;
        if m.n() <= 9 {
            let level: Vec<ElementSet> = m.flats().flats().to_vec();
            let brute = brute_flats(m);
            ensure(level.len() == brute.len() && level.iter().all(|f| brute.contains(f)), || {
                format!("{}: {} flats vs {} by brute force", e.name, level.len(), brute.len())
            })?;
        }
        for d in subsets(m.n()) {
            let (a, b) = (vanishing_hyperplanes_by_rank(m, &d), vanishing_hyperplanes_by_codependence(m, &d));
            ensure(a == b, || format!("{} D={d}: {a:?} vs {b:?}", e.name))?;
            sets += 1;
        }
    }
    Ok(format!("{sets} deletion sets"))
}

fn search_oracle() -> Outcome {
    let names = ["U_{2,3}", "U_{2,4}", "U_{1,2}", "U_{3,4}"];
    for name in names {
        let m = entry(name).matroid;
        let first = matadj::search_adjoint(&m, &SearchBudget::default());
        let second = matadj::search_adjoint(&m, &SearchBudget::default());
        let phi = first.found.as_ref().ok_or_else(|| format!("{name}: not found ({:?})", first.log))?;
        let report = full_verification(phi);
        ensure(report.valid, || format!("{name}:\n{report}"))?;
        ensure(second.found.as_ref() == Some(phi), || format!("{name}: runs disagree"))?;
        let strip = |mut log: matadj::search::SearchLog| {
            log.elapsed_ms = 0;
            log
        };
        ensure(strip(first.log) == strip(second.log), || format!("{name}: logs differ"))?;
    }
    Ok(format!("{} matroids", names.len()))
}

fn lifted_table(
    phi: &AdjointMap,
    source_kept: &[usize],
    n: usize,
    target_n: usize,
) -> BTreeMap<ElementSet, ElementSet> {
    phi.table().iter().map(|(f, img)| (lift(f, source_kept, n), lift(img, phi.target_labels(), target_n))).collect()
}

fn flat_correspondences() -> Outcome {
    let mut cases = 0;
    for (e, phi) in fixture_maps() {
        let m = phi.source();
        let n = m.n();
        let brute = brute_flats(m);
        let p = phi.target().n();
        for c in subsets(n).filter(|c| c.len() <= 2) {
            let (kept, _) = surviving_labels(&c);
            let mc = m.contract(&c);
            let from_minor: Vec<ElementSet> = mc.flats().flats().iter().map(|f| lift(f, &kept, n).union(&c)).collect();
            let containing: Vec<&ElementSet> = brute.iter().filter(|g| c.is_subset(g)).collect();
            ensure(from_minor.iter().all(|g| brute.contains(g)) && from_minor.len() == containing.len(), || {
                format!("{} C={c}: contraction flats do not correspond", e.name)
            })?;
            let phi_c = contract_adjoint(&phi, &c).map_err(|err| format!("{} C={c}: {err}", e.name))?;
            let expected: BTreeMap<ElementSet, ElementSet> = mc
                .flats()
                .flats()
                .iter()
                .map(|f| (lift(f, &kept, n), phi.image(&lift(f, &kept, n).union(&c))))
                .collect();
            ensure(lifted_table(&phi_c, &kept, n, p) == expected, || format!("{} C={c}: image formula", e.name))?;
            cases += 1;
        }
        for d in subsets(n).filter(|d| m.is_coindependent(d)) {
            let (kept, _) = surviving_labels(&d);
            let md = m.delete(&d);
            let ours: std::collections::BTreeSet<ElementSet> =
                md.flats().flats().iter().map(|f| lift(f, &kept, n)).collect();
            let theirs: std::collections::BTreeSet<ElementSet> = brute.iter().map(|f| f.difference(&d)).collect();
            ensure(ours == theirs, || format!("{} D={d}: deletion flats do not correspond", e.name))?;
            let vanishing = vanishing_hyperplanes_by_rank(m, &d);
            let removed = vanishing.iter().fold(phi.target().empty_set(), |acc, h| acc.union(&phi.image(h)));
            let phi_d = delete_adjoint(&phi, &d).map_err(|err| format!("{} D={d}: {err}", e.name))?;
            let expected: BTreeMap<ElementSet, ElementSet> = md
                .flats()
                .flats()
                .iter()
                .map(|f| {
                    let up = lift(f, &kept, n);
                    (up, phi.image(&brute_closure(m, &up)).difference(&removed))
                })
                .collect();
            ensure(lifted_table(&phi_d, &kept, n, p) == expected, || format!("{} D={d}: image formula", e.name))?;
            ensure(check_rank_complement(&phi_d).valid, || format!("{} D={d}: rank claim", e.name))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} contraction and deletion cases"))
}

fn modular_pairs() -> Outcome {
    let mut notes = Vec::new();
    for (e, phi) in fixture_maps() {
        let start = Instant::now();
        let report = check_modular_pairs(&phi);
        let took = start.elapsed();
        ensure(report.valid, || format!("{}:\n{report}", e.name))?;
        if e.slug == "fano" {
            ensure(took < Duration::from_secs(1), || format!("Fano took {took:?}"))?;
            notes.push(format!("Fano {}x{} pairs in {took:?}", phi.table().len(), phi.table().len()));
        }
    }
    Ok(notes.join(", "))
}

fn expect_violation(
    label: &str,
    phi: &AdjointMap,
    check: Check,
    witness_ok: impl Fn(&[ElementSet]) -> bool,
) -> Result<(), String> {
    let report = verify_adjoint(phi);
    ensure(!report.valid, || format!("{label}: corruption not detected"))?;
    let hit = report.violations_of(check).any(|v| !v.witness.is_empty() && witness_ok(&v.witness));
    ensure(hit, || format!("{label}: no {check} violation with a matching witness:\n{report}"))
}

fn with_image(phi: &AdjointMap, flat: ElementSet, image: ElementSet) -> AdjointMap {
    let mut table = phi.table().clone();
    table.insert(flat, image);
    AdjointMap::new(phi.source().clone(), phi.target().clone(), table).expect("structurally valid")
}

fn negative_paths() -> Outcome {
    let fano = adjoint_from_representation(&entry("fano").matroid, &entry("fano").representation.unwrap())
        .map_err(|e| e.to_string())?;
    let lines = fano.hyperplane_order().to_vec();

    // two lines sent to the same point
    let dup = with_image(&fano, lines[1], fano.image(&lines[0]));
    expect_violation("injectivity", &dup, Check::Injectivity, |w| w.contains(&lines[0]) && w.contains(&lines[1]))?;

    // a point of Fano sent to the line belonging to another point
    let points = fano.source().flats().layer(1).to_vec();
    let point = points[0];
    let reversed = with_image(&fano, point, fano.image(&points[1]));
    expect_violation("reversal", &reversed, Check::InclusionReversal, |w| w.contains(&point))?;

    // a line sent to a line of the target instead of a point
    let target_line = fano.image(&point);
    let not_a_point = with_image(&fano, lines[0], target_line);
    expect_violation("hyperplane bijection", &not_a_point, Check::HyperplaneBijection, |w| w.contains(&lines[0]))?;

    // target of the wrong rank
    let u23 = Matroid::uniform(2, 3).unwrap();
    let u33 = Matroid::uniform(3, 3).unwrap();
    let good = induced_map(&u23, &u23, &[0, 1, 2]).unwrap();
    let table = good.table().iter().map(|(f, img)| (*f, ElementSet::from_bits(3, img.bits()))).collect();
    let wrong_rank = AdjointMap::new(u23.clone(), u33, table).unwrap();
    expect_violation("wrong rank", &wrong_rank, Check::RankEquality, |w| w.len() == 2)?;

    // target with a parallel pair {2,3}
    let parallel = Matroid::from_basis_lists(4, &[vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]]).unwrap();
    let table = good
        .table()
        .iter()
        .map(|(f, img)| {
            let mut up = ElementSet::from_bits(4, img.bits());
            if up.contains(2) {
                up = up.with(3);
            }
            (*f, up)
        })
        .collect();
    let non_simple = AdjointMap::new(u23, parallel, table).map_err(|e| e.to_string())?;
    let pair = ElementSet::from_elements(4, [2, 3]);
    expect_violation("non-simple target", &non_simple, Check::TargetSimple, |w| w.contains(&pair))?;
    Ok("5 corruptions detected with witnesses".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 definition conformance", definition_conformance),
        ("2 rank complement and chain independence", rank_and_chain_theorems),
        ("3 minor-closedness sweep", minor_closedness),
        ("4 oracle equivalence", oracle_equivalence),
        ("5 search oracle", search_oracle),
        ("6 contraction and deletion flat correspondence", flat_correspondences),
        ("7 modular pairs", modular_pairs),
        ("8 negative paths", negative_paths),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
