//! Mechanical checks of the index identities.
//!
//! Every check computes its two sides along separate code paths that share
//! nothing beyond the constructed [`RootSystem`], and compares them exactly.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::cartan::{Family, SimpleType};
use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;
use crate::principal::{self, IndexReport};
use crate::rational::{big, binomial, frac, int, Rational};
use crate::reps::{self, HighestWeight, SizeGuard, WeightSumMode};
use crate::rootsys::{Root, RootSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    StrangeFormula,
    CanonicalGram,
    NormalizedRewrite,
    HeightSquareSum,
    MainTheoremThreeWay,
    TableEntry,
    Unfolding,
    WeightSumRhoCheck,
    WeightSumFdV,
    SimplyLacedHeightSum,
    GeneralHeightSum,
    ExponentDecomposition,
    IndexIntegrality,
    DualCoxeterConjecture,
}

impl IdentityId {
    pub const ALL: [IdentityId; 14] = [
        IdentityId::StrangeFormula,
        IdentityId::CanonicalGram,
        IdentityId::NormalizedRewrite,
        IdentityId::HeightSquareSum,
        IdentityId::MainTheoremThreeWay,
        IdentityId::TableEntry,
        IdentityId::Unfolding,
        IdentityId::WeightSumRhoCheck,
        IdentityId::WeightSumFdV,
        IdentityId::SimplyLacedHeightSum,
        IdentityId::GeneralHeightSum,
        IdentityId::ExponentDecomposition,
        IdentityId::IndexIntegrality,
        IdentityId::DualCoxeterConjecture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::StrangeFormula => "StrangeFormula",
            IdentityId::CanonicalGram => "CanonicalGram",
            IdentityId::NormalizedRewrite => "NormalizedRewrite",
            IdentityId::HeightSquareSum => "HeightSquareSum",
            IdentityId::MainTheoremThreeWay => "MainTheoremThreeWay",
            IdentityId::TableEntry => "TableEntry",
            IdentityId::Unfolding => "Unfolding",
            IdentityId::WeightSumRhoCheck => "WeightSumRhoCheck",
            IdentityId::WeightSumFdV => "WeightSumFdV",
            IdentityId::SimplyLacedHeightSum => "SimplyLacedHeightSum",
            IdentityId::GeneralHeightSum => "GeneralHeightSum",
            IdentityId::ExponentDecomposition => "ExponentDecomposition",
            IdentityId::IndexIntegrality => "IndexIntegrality",
            IdentityId::DualCoxeterConjecture => "DualCoxeterConjecture",
        }
    }

    /// The identity being checked, as a formula.
    pub fn statement(self) -> &'static str {
        match self {
            IdentityId::StrangeFormula => "(ρ,ρ) = (dim g/12)·h*",
            IdentityId::CanonicalGram => "⟨α_i,α_j⟩ = Σ_{γ∈Δ} ⟨α_i,γ⟩⟨α_j,γ⟩",
            IdentityId::NormalizedRewrite => "h*·(α_i,α_j) = Σ_{γ>0} (α_i,γ)(α_j,γ)",
            IdentityId::HeightSquareSum => "Σ_{γ>0} ht²(γ) = (dim g/12)·h*·h*(g∨)·r",
            IdentityId::MainTheoremThreeWay => {
                "(dim g/6)·h*(g∨)·r = (2/h*)·Σ ht² = (1/2h*)·Σ C(2m_i+2,3)"
            }
            IdentityId::TableEntry => "principal index = tabulated value",
            IdentityId::Unfolding => "ind(sl2^pr ↪ g) = ind(sl2^pr ↪ g̃) for the unfolded g̃",
            IdentityId::WeightSumRhoCheck => "Σ_μ (μ,ρ∨)² = (dim V/12)·h*(g∨)·r·(λ,λ+2ρ)",
            IdentityId::WeightSumFdV => "Σ_μ ⟨μ,ρ⟩² = (dim V/24)·⟨λ,λ+2ρ⟩",
            IdentityId::SimplyLacedHeightSum => "Σ_{γ>0} ht(γ) = dim g·h/6 (simply laced)",
            IdentityId::GeneralHeightSum => "2(ρ,ρ∨) = Σ_{γ>0} ht(γ)",
            IdentityId::ExponentDecomposition => "g = ⊕ R_{2m_i} as a principal sl2-module",
            IdentityId::IndexIntegrality => "ind_D(g,V_λ) ∈ ℤ≥0, and ind_D(g,ad) = 2h*",
            IdentityId::DualCoxeterConjecture => "h*(g∨) = 1 + ht(θ_s)",
        }
    }

    /// Whether the check runs once per highest weight.
    pub fn takes_weight(self) -> bool {
        matches!(
            self,
            IdentityId::WeightSumRhoCheck | IdentityId::WeightSumFdV | IdentityId::IndexIntegrality
        )
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    /// Case-insensitive; `-` and `_` are ignored, so `height-square-sum`
    /// parses as `HeightSquareSum`.
    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| !matches!(c, '-' | '_'))
            .collect::<String>()
            .to_ascii_lowercase();
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name().to_ascii_lowercase() == key)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Passed,
    Failed,
    Skipped,
}

/// Result of one exact comparison.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub identity: IdentityId,
    pub simple_type: SimpleType,
    /// Highest weight for per-module identities.
    pub weight: Option<Vec<i64>>,
    /// `None` exactly when the check was skipped.
    pub lhs: Option<Rational>,
    pub rhs: Option<Rational>,
    pub passed: bool,
    pub skipped: bool,
    pub note: Option<String>,
    pub elapsed: Duration,
}

impl CheckResult {
    pub fn outcome(&self) -> Outcome {
        if self.skipped {
            Outcome::Skipped
        } else if self.passed {
            Outcome::Passed
        } else {
            Outcome::Failed
        }
    }

    pub fn failed(&self) -> bool {
        self.outcome() == Outcome::Failed
    }
}

#[derive(Debug, Clone)]
pub struct CheckOptions {
    /// Highest weight for per-module identities; `None` means the adjoint
    /// for [`check`] and the adjoint plus every fundamental weight for
    /// [`check_all`].
    pub weight: Option<Vec<i64>>,
    pub guard: SizeGuard,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            weight: None,
            guard: SizeGuard::DEFAULT,
        }
    }
}

/// Index of the principal `sl2` as tabulated per family, independent of any
/// root-system computation.
pub fn tabulated_principal_index(t: SimpleType) -> Rational {
    let n = t.rank() as i64;
    match t.family() {
        Family::A => big(binomial(n + 2, 3)),
        Family::B => frac(n * (n + 1) * (2 * n + 1), 3),
        Family::C => big(binomial(2 * n + 1, 3)),
        Family::D => frac((n - 1) * n * (2 * n - 1), 3),
        Family::E => int(match n {
            6 => 156,
            7 => 399,
            _ => 1240,
        }),
        Family::F => int(156),
        Family::G => int(28),
    }
}

/// Simply-laced type obtained by unfolding the Dynkin diagram, with a note
/// when a low-rank coincidence was used.
pub fn unfolding_partner(t: SimpleType) -> Option<(SimpleType, Option<&'static str>)> {
    let n = t.rank();
    let ok = |f, r| SimpleType::new(f, r).expect("admissible");
    match t.family() {
        Family::C => Some((ok(Family::A, 2 * n - 1), None)),
        Family::B if n == 2 => Some((ok(Family::A, 3), Some("B2 unfolds to D3, taken as A3"))),
        Family::B => Some((ok(Family::D, n + 1), None)),
        Family::F => Some((ok(Family::E, 6), None)),
        Family::G => Some((ok(Family::D, 4), None)),
        Family::A | Family::D | Family::E => None,
    }
}

struct Comparison {
    lhs: Rational,
    rhs: Rational,
    note: Option<String>,
}

enum Evaluation {
    Compared(Comparison),
    Skipped(String),
}

fn compared(lhs: Rational, rhs: Rational) -> Evaluation {
    Evaluation::Compared(Comparison {
        lhs,
        rhs,
        note: None,
    })
}

fn compared_with_note(lhs: Rational, rhs: Rational, note: String) -> Evaluation {
    Evaluation::Compared(Comparison {
        lhs,
        rhs,
        note: Some(note),
    })
}

/// Reduces an entrywise comparison to a pair of rationals: the first
/// differing entries, or the two entry sums when the matrices agree.
fn compare_matrices(lhs: &RationalMatrix, rhs: &RationalMatrix) -> Evaluation {
    for (i, (a, b)) in lhs.iter().zip(rhs).enumerate() {
        for (j, (x, y)) in a.iter().zip(b).enumerate() {
            if x != y {
                return compared_with_note(
                    x.clone(),
                    y.clone(),
                    format!("entry ({i},{j}) differs"),
                );
            }
        }
    }
    let sum = |m: &RationalMatrix| m.iter().flatten().sum::<Rational>();
    compared_with_note(
        sum(lhs),
        sum(rhs),
        "all entries agree; entry sums shown".into(),
    )
}

fn compare_lists(lhs: &[i64], rhs: &[i64]) -> Evaluation {
    let note = format!("{lhs:?} vs {rhs:?}");
    if lhs.len() != rhs.len() {
        return compared_with_note(int(lhs.len() as i64), int(rhs.len() as i64), note);
    }
    if let Some((a, b)) = lhs.iter().zip(rhs).find(|(a, b)| a != b) {
        return compared_with_note(int(*a), int(*b), note);
    }
    let total = |v: &[i64]| int(v.iter().map(|m| 2 * m + 1).sum());
    compared_with_note(total(lhs), total(rhs), note)
}

fn canonical_gram_identity(rs: &RootSystem) -> Evaluation {
    let canonical = rs.canonical_form();
    let n = rs.rank();
    let g = canonical.gram();
    // ⟨α_i, γ⟩ for every root γ ∈ Δ = Δ⁺ ∪ −Δ⁺.
    let pairings: Vec<Vec<Rational>> = rs
        .positive_roots()
        .iter()
        .flat_map(|root| {
            let row: Vec<Rational> = (0..n)
                .map(|i| {
                    root.coords()
                        .iter()
                        .enumerate()
                        .map(|(k, &c)| int(c) * &g[i][k])
                        .sum()
                })
                .collect();
            let neg: Vec<Rational> = row.iter().map(|x| -x).collect();
            [row, neg]
        })
        .collect();
    let rhs: RationalMatrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| pairings.iter().map(|p| &p[i] * &p[j]).sum())
                .collect()
        })
        .collect();
    compare_matrices(g, &rhs)
}

fn normalized_rewrite_identity(rs: &RootSystem) -> Evaluation {
    let n = rs.rank();
    let g = rs.form().gram();
    let h_star = int(rs.dual_coxeter_number());
    let lhs: RationalMatrix = g
        .iter()
        .map(|row| row.iter().map(|x| x * &h_star).collect())
        .collect();
    let pairings: Vec<Vec<Rational>> = rs
        .positive_roots()
        .iter()
        .map(|root| {
            (0..n)
                .map(|i| {
                    rs.form()
                        .pairing(&Root::new(unit(n, i)).to_rational(), &root.to_rational())
                        .expect("rank matches")
                })
                .collect()
        })
        .collect();
    let rhs: RationalMatrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| pairings.iter().map(|p| &p[i] * &p[j]).sum())
                .collect()
        })
        .collect();
    compare_matrices(&lhs, &rhs)
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    (0..n).map(|k| i64::from(k == i)).collect()
}

fn evaluate(
    rs: &RootSystem,
    id: IdentityId,
    lambda: Option<&HighestWeight>,
    guard: SizeGuard,
) -> Result<Evaluation> {
    let dim_g = rs.dim();
    let h_star = rs.dual_coxeter_number();
    let h_star_dual = rs.dual_coxeter_number_of_dual();
    Ok(match id {
        IdentityId::StrangeFormula => {
            let rho = rs.rho_root_coords();
            compared(rs.form().pairing(rho, rho)?, frac(dim_g * h_star, 12))
        }
        IdentityId::CanonicalGram => canonical_gram_identity(rs),
        IdentityId::NormalizedRewrite => normalized_rewrite_identity(rs),
        IdentityId::HeightSquareSum => compared(
            big(principal::height_power_sum(rs, 2)),
            frac(dim_g * h_star * h_star_dual * rs.r(), 12),
        ),
        IdentityId::MainTheoremThreeWay => {
            let report = IndexReport::compute(rs);
            let rhs = if report.via_heights != report.closed_form {
                report.via_heights.clone()
            } else {
                report.via_exponents.clone()
            };
            let note = format!(
                "closed {} / heights {} / exponents {}",
                report.closed_form, report.via_heights, report.via_exponents
            );
            compared_with_note(report.closed_form, rhs, note)
        }
        IdentityId::TableEntry => compared(
            IndexReport::compute(rs).via_heights,
            tabulated_principal_index(rs.simple_type()),
        ),
        IdentityId::Unfolding => match unfolding_partner(rs.simple_type()) {
            None => Evaluation::Skipped("simply laced: nothing to unfold".into()),
            Some((partner, remark)) => {
                let other = RootSystem::new(partner)?;
                let note = match remark {
                    Some(r) => format!("partner {partner}; {r}"),
                    None => format!("partner {partner}"),
                };
                compared_with_note(
                    IndexReport::compute(rs).via_heights,
                    IndexReport::compute(&other).via_heights,
                    note,
                )
            }
        },
        IdentityId::WeightSumRhoCheck | IdentityId::WeightSumFdV => {
            let adjoint = HighestWeight::adjoint(rs);
            let lambda = lambda.unwrap_or(&adjoint);
            let dim_v = reps::weyl_dim(rs, lambda);
            if let Err(e) = guard.check(&dim_v) {
                return Ok(Evaluation::Skipped(e.to_string()));
            }
            let casimir = reps::casimir(rs, lambda.weight());
            if id == IdentityId::WeightSumRhoCheck {
                let lhs =
                    reps::weight_sum_squares(rs, lambda, WeightSumMode::RhoCheckNormalized, guard)?;
                let rhs = big(dim_v) * frac(h_star_dual * rs.r(), 12) * casimir;
                compared(lhs, rhs)
            } else {
                let lhs = reps::weight_sum_squares(rs, lambda, WeightSumMode::RhoCanonical, guard)?;
                let canonical_casimir = casimir * frac(1, 2 * h_star);
                compared(lhs, big(dim_v) * frac(1, 24) * canonical_casimir)
            }
        }
        IdentityId::SimplyLacedHeightSum => {
            if !rs.simple_type().is_simply_laced() {
                Evaluation::Skipped("not simply laced".into())
            } else {
                compared(
                    big(principal::height_power_sum(rs, 1)),
                    frac(dim_g * rs.coxeter_number(), 6),
                )
            }
        }
        IdentityId::GeneralHeightSum => compared(
            rs.form().pairing(rs.rho_root_coords(), rs.rho_check())? * int(2),
            big(principal::height_power_sum(rs, 1)),
        ),
        IdentityId::ExponentDecomposition => {
            let from_adjoint = principal::adjoint_exponents(rs)?;
            compare_lists(&from_adjoint, rs.exponents())
        }
        IdentityId::IndexIntegrality => {
            let adjoint = HighestWeight::adjoint(rs);
            let lambda = lambda.unwrap_or(&adjoint);
            let value = reps::dynkin_index_value(rs, lambda);
            if *lambda == adjoint {
                compared_with_note(value, int(2 * h_star), "adjoint: ind_D = 2h*".into())
            } else {
                let floor = big(value.floor().to_integer().max(BigInt::zero()));
                compared(value, floor)
            }
        }
        IdentityId::DualCoxeterConjecture => {
            let ht = rs.theta_s().height();
            compared_with_note(
                int(h_star_dual),
                int(1 + ht),
                format!(
                    "checks h*(g∨) = 1 + ht(θ_s); the off-by-one form h*(g∨) = ht(θ_s) would give {ht}"
                ),
            )
        }
    })
}

fn run(
    rs: &RootSystem,
    id: IdentityId,
    lambda: Option<&HighestWeight>,
    guard: SizeGuard,
) -> CheckResult {
    let start = Instant::now();
    let evaluation = evaluate(rs, id, lambda, guard);
    let mut result = CheckResult {
        identity: id,
        simple_type: rs.simple_type(),
        weight: lambda.map(|l| l.coords().to_vec()),
        lhs: None,
        rhs: None,
        passed: false,
        skipped: false,
        note: None,
        elapsed: Duration::ZERO,
    };
    match evaluation {
        Ok(Evaluation::Compared(c)) => {
            result.passed = c.lhs == c.rhs;
            result.lhs = Some(c.lhs);
            result.rhs = Some(c.rhs);
            result.note = c.note;
        }
        Ok(Evaluation::Skipped(why)) => {
            result.skipped = true;
            result.note = Some(why);
        }
        Err(Error::SizeGuard { dim, max }) => {
            result.skipped = true;
            result.note = Some(format!("dim {dim} exceeds size guard {max}"));
        }
        Err(e) => result.note = Some(e.to_string()),
    }
    result.elapsed = start.elapsed();
    result
}

/// Runs one identity on one type.
pub fn check(id: IdentityId, t: SimpleType, opts: &CheckOptions) -> Result<CheckResult> {
    let rs = RootSystem::new(t)?;
    let lambda = match &opts.weight {
        Some(c) if id.takes_weight() => Some(HighestWeight::new(&rs, c.clone())?),
        _ => None,
    };
    Ok(run(&rs, id, lambda.as_ref(), opts.guard))
}

fn default_weights(rs: &RootSystem) -> Vec<HighestWeight> {
    let mut out = vec![HighestWeight::adjoint(rs)];
    for i in 0..rs.rank() {
        let w = HighestWeight::fundamental(rs, i);
        if w != out[0] {
            out.push(w);
        }
    }
    out
}

/// Runs every identity in `ids` over every type, in `(identity, type)`
/// order. Per-module identities are expanded over the adjoint and each
/// fundamental weight unless `opts.weight` pins one.
///
/// Fails only on input errors (a pinned weight of the wrong length or
/// sign); identity failures are reported in the results.
pub fn check_all(
    types: &[SimpleType],
    ids: &[IdentityId],
    opts: &CheckOptions,
) -> Result<Vec<CheckResult>> {
    let systems: Vec<RootSystem> = types
        .par_iter()
        .map(|&t| RootSystem::new(t))
        .collect::<Result<_>>()?;

    let mut tasks: Vec<(IdentityId, usize, Option<HighestWeight>)> = Vec::new();
    for &id in ids {
        for (k, rs) in systems.iter().enumerate() {
            if !id.takes_weight() {
                tasks.push((id, k, None));
                continue;
            }
            match &opts.weight {
                Some(c) => tasks.push((id, k, Some(HighestWeight::new(rs, c.clone())?))),
                None => tasks.extend(default_weights(rs).into_iter().map(|w| (id, k, Some(w)))),
            }
        }
    }
    Ok(tasks
        .par_iter()
        .map(|(id, k, lambda)| run(&systems[*k], *id, lambda.as_ref(), opts.guard))
        .collect())
}

/// Counts of `(passed, failed, skipped)`.
pub fn summarize(results: &[CheckResult]) -> (usize, usize, usize) {
    results
        .iter()
        .fold((0, 0, 0), |(p, f, s), r| match r.outcome() {
            Outcome::Passed => (p + 1, f, s),
            Outcome::Failed => (p, f + 1, s),
            Outcome::Skipped => (p, f, s + 1),
        })
}
