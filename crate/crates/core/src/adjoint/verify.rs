use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::AdjointMap;
use crate::error::AdjointError;
use crate::set::ElementSet;

/// Names of the individual checks, in the order they run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    TargetSimple,
    RankEquality,
    Injectivity,
    InclusionReversal,
    HyperplaneBijection,
    RankComplement,
    ChainIndependence,
    ModularPairs,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::TargetSimple => "target-simple",
            Check::RankEquality => "rank-equality",
            Check::Injectivity => "injectivity",
            Check::InclusionReversal => "inclusion-reversal",
            Check::HyperplaneBijection => "hyperplane-bijection",
            Check::RankComplement => "rank-complement",
            Check::ChainIndependence => "chain-independence",
            Check::ModularPairs => "modular-pairs",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One failed check with a concrete witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: Check,
    pub witness: Vec<ElementSet>,
    pub expected: String,
    pub actual: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub checks_run: Vec<Check>,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    fn new() -> Self {
        VerificationReport { valid: true, checks_run: Vec::new(), violations: Vec::new() }
    }

    fn run(&mut self, check: Check) {
        if !self.checks_run.contains(&check) {
            self.checks_run.push(check);
        }
    }

    fn fail(&mut self, check: Check, witness: Vec<ElementSet>, expected: impl Into<String>, actual: impl Into<String>) {
        self.valid = false;
        self.violations.push(Violation {
            check,
            witness,
            expected: expected.into(),
            actual: actual.into(),
            note: None,
        });
    }

    /// Appends another report's checks and violations.
    pub fn merge(&mut self, other: VerificationReport) {
        for c in other.checks_run {
            self.run(c);
        }
        self.valid &= other.valid;
        self.violations.extend(other.violations);
    }

    pub fn violations_of(&self, check: Check) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(move |v| v.check == check)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let checks: Vec<&str> = self.checks_run.iter().map(|c| c.name()).collect();
        writeln!(f, "checks: {}", checks.join(", "))?;
        writeln!(f, "valid: {}", self.valid)?;
        for v in &self.violations {
            let witness: Vec<String> = v.witness.iter().map(|w| w.to_string()).collect();
            write!(f, "  [{}] witness {}: expected {}, got {}", v.check, witness.join(" "), v.expected, v.actual)?;
            if let Some(note) = &v.note {
                write!(f, " ({note})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Runs the defining checks: target simple, equal ranks, injectivity,
/// inclusion reversal, and the hyperplane-to-point bijection.
///
/// Checks never short-circuit; every violation found is listed.
pub fn verify_adjoint(phi: &AdjointMap) -> VerificationReport {
    let mut report = VerificationReport::new();
    let source = phi.source();
    let target = phi.target();
    let lattice = phi.source_lattice();
    let flats = lattice.flats();

    report.run(Check::TargetSimple);
    if let Some(l) = target.loops().first() {
        report.fail(Check::TargetSimple, vec![ElementSet::singleton(target.n(), l)], "no loops", "loop");
    }
    for class in target.parallel_classes().iter().filter(|c| c.len() > 1) {
        report.fail(Check::TargetSimple, vec![*class], "no parallel elements", "parallel class");
    }

    report.run(Check::RankEquality);
    if source.rank() != target.rank() {
        report.fail(
            Check::RankEquality,
            vec![source.ground_set(), target.ground_set()],
            format!("target rank {}", source.rank()),
            format!("target rank {}", target.rank()),
        );
    }

    report.run(Check::Injectivity);
    let mut by_image: BTreeMap<ElementSet, Vec<ElementSet>> = BTreeMap::new();
    for f in flats {
        by_image.entry(phi.image(f)).or_default().push(*f);
    }
    for (img, preimages) in &by_image {
        for other in &preimages[1..] {
            report.fail(
                Check::Injectivity,
                vec![preimages[0], *other, *img],
                "distinct images",
                format!("both map to {img}"),
            );
        }
    }

    report.run(Check::InclusionReversal);
    for f1 in flats {
        for f2 in flats {
            if f1 != f2 && f1.is_subset(f2) {
                let (i1, i2) = (phi.image(f1), phi.image(f2));
                if !i2.is_subset(&i1) {
                    report.fail(
                        Check::InclusionReversal,
                        vec![*f1, *f2, i1, i2],
                        format!("image of {f2} inside image of {f1}"),
                        format!("{i2} not inside {i1}"),
                    );
                }
            }
        }
    }

    report.run(Check::HyperplaneBijection);
    let target_lattice = target.flats();
    let points = target_lattice.points();
    if let Ok(hyperplanes) = lattice.hyperplanes() {
        let mut first_preimage: BTreeMap<ElementSet, ElementSet> = BTreeMap::new();
        for h in hyperplanes {
            let img = phi.image(h);
            if !points.contains(&img) {
                report.fail(
                    Check::HyperplaneBijection,
                    vec![*h, img],
                    "a point (rank-1 flat) of the target",
                    format!("flat of rank {}", target.rank_of(&img)),
                );
                continue;
            }
            if let Some(prev) = first_preimage.insert(img, *h) {
                report.fail(
                    Check::HyperplaneBijection,
                    vec![prev, *h, img],
                    "distinct points for distinct hyperplanes",
                    format!("both map to {img}"),
                );
                first_preimage.insert(img, prev);
            }
        }
        for p in points {
            if !first_preimage.contains_key(p) {
                report.fail(
                    Check::HyperplaneBijection,
                    vec![*p],
                    "image of some hyperplane",
                    "no hyperplane maps here",
                );
            }
        }
    } else if !points.is_empty() {
        for p in points {
            report.fail(Check::HyperplaneBijection, vec![*p], "no points (source has rank 0)", "a point");
        }
    }
    report
}

/// Checks `r'(phi(F)) = r - r(F)` for every flat.
///
/// This identity holds for every adjoint map. A violation on a map that passes
/// [`verify_adjoint`] is flagged as an implementation bug.
pub fn check_rank_complement(phi: &AdjointMap) -> VerificationReport {
    let mut report = VerificationReport::new();
    report.run(Check::RankComplement);
    let r = phi.source().rank();
    for f in phi.source_lattice().flats() {
        let k = phi.source().rank_of(f);
        let img = phi.image(f);
        let got = phi.target().rank_of(&img);
        if got + k != r {
            report.fail(Check::RankComplement, vec![*f, img], format!("rank {}", r - k), format!("rank {got}"));
        }
    }
    if !report.valid {
        let note = if verify_adjoint(phi).valid {
            "map passes verify_adjoint, so this is an implementation bug"
        } else {
            "map is not a valid adjoint map"
        };
        for v in &mut report.violations {
            v.note = Some(note.to_string());
        }
    }
    report
}

/// Checks that the images of a strictly shrinking chain of hyperplanes form an
/// independent set of points in the target.
pub fn check_chain_independence(phi: &AdjointMap, chain: &[ElementSet]) -> Result<VerificationReport, AdjointError> {
    let source = phi.source();
    for h in chain {
        source.check_set(h)?;
        if !phi.hyperplane_order().contains(h) {
            return Err(AdjointError::NotAHyperplane(*h));
        }
    }
    let mut running = source.ground_set();
    for (i, h) in chain.iter().enumerate() {
        let next = running.intersection(h);
        if next == running {
            return Err(AdjointError::ChainNotStrict { position: i });
        }
        running = next;
    }

    let mut report = VerificationReport::new();
    report.run(Check::ChainIndependence);
    let images: Vec<ElementSet> = chain.iter().map(|h| phi.image(h)).collect();
    let union = images.iter().fold(phi.target().empty_set(), |acc, s| acc.union(s));
    let distinct = images.iter().enumerate().all(|(i, a)| images[..i].iter().all(|b| a != b));
    let rank = phi.target().rank_of(&union);
    if !distinct || rank != chain.len() || union.len() != chain.len() {
        let mut witness = chain.to_vec();
        witness.push(union);
        report.fail(
            Check::ChainIndependence,
            witness,
            format!("{} independent points", chain.len()),
            format!("{} points of rank {rank}", union.len()),
        );
    }
    Ok(report)
}

/// Runs [`check_chain_independence`] on the greedy hyperplane chain of every flat.
pub fn check_all_chains(phi: &AdjointMap) -> VerificationReport {
    let mut report = VerificationReport::new();
    report.run(Check::ChainIndependence);
    for f in phi.source_lattice().flats() {
        let chain = phi.source().hyperplane_chain(f).expect("lattice members are flats");
        match check_chain_independence(phi, &chain) {
            Ok(r) => report.merge(r),
            Err(e) => report.fail(Check::ChainIndependence, vec![*f], "a valid chain", e.to_string()),
        }
    }
    report
}

/// Checks that the images of every pair of flats form a modular pair in the target.
pub fn check_modular_pairs(phi: &AdjointMap) -> VerificationReport {
    let mut report = VerificationReport::new();
    report.run(Check::ModularPairs);
    let target = phi.target();
    let flats = phi.source_lattice().flats().to_vec();
    for (i, x) in flats.iter().enumerate() {
        for y in &flats[i + 1..] {
            let (a, b) = (phi.image(x), phi.image(y));
            let join = target.closure(&a.union(&b));
            let meet = a.intersection(&b);
            let lhs = target.rank_of(&a) + target.rank_of(&b);
            let rhs = target.rank_of(&join) + target.rank_of(&meet);
            if lhs != rhs {
                report.fail(
                    Check::ModularPairs,
                    vec![*x, *y, a, b],
                    format!("r(join) + r(meet) = {lhs}"),
                    format!("{rhs}"),
                );
            }
        }
    }
    report
}

/// Defining checks, then rank complement, chain independence, and modular pairs.
pub fn full_verification(phi: &AdjointMap) -> VerificationReport {
    let mut report = verify_adjoint(phi);
    report.merge(check_rank_complement(phi));
    report.merge(check_all_chains(phi));
    report.merge(check_modular_pairs(phi));
    report
}
