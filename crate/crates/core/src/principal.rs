//! The principal `sl2`-subalgebra: its index, the decomposition of modules
//! restricted to it, and the exponents.
//!
//! The semisimple element `h` of the principal triple is taken dominant, so
//! `α(h) = 2` on simple roots and a weight `μ` has `h`-eigenvalue
//! `2(μ, ρ∨)`. No nilpotent elements are ever built; everything is read off
//! weight systems.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::rational::{self, big, binomial, frac, int, Rational};
use crate::reps::{self, HighestWeight, SizeGuard, WeightSystem};
use crate::rootsys::{Root, RootSystem, Weight};

/// Multiset of irreducible `sl2`-constituents `R_d` (highest weight `d`,
/// dimension `d+1`), sorted by `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Decomposition {
    parts: Vec<(u64, u64)>,
}

impl Sl2Decomposition {
    /// `(d, n_d)` pairs with `n_d > 0`.
    pub fn parts(&self) -> &[(u64, u64)] {
        &self.parts
    }

    pub fn dim(&self) -> BigInt {
        self.parts
            .iter()
            .map(|&(d, n)| BigInt::from(n) * BigInt::from(d + 1))
            .sum()
    }

    /// Number of constituents counted with multiplicity.
    pub fn len(&self) -> u64 {
        self.parts.iter().map(|&(_, n)| n).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `Σ n_d · C(d+2, 3)`: the Dynkin index as an `sl2`-module.
    pub fn dynkin_index(&self) -> BigInt {
        self.parts
            .iter()
            .map(|&(d, n)| BigInt::from(n) * binomial(d as i64 + 2, 3))
            .sum()
    }
}

/// The principal index computed three ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexReport {
    /// `(dim g / 6) · h*(g∨) · r`
    pub closed_form: Rational,
    /// `(2 / h*) · Σ_{γ>0} ht²(γ)`
    pub via_heights: Rational,
    /// `(1 / 2h*) · Σ_i C(2m_i + 2, 3)`
    pub via_exponents: Rational,
    pub agree: bool,
}

impl IndexReport {
    /// Computes all three routes without judging them.
    pub fn compute(rs: &RootSystem) -> IndexReport {
        let h_star = rs.dual_coxeter_number();
        let closed_form = frac(rs.dim() * rs.dual_coxeter_number_of_dual() * rs.r(), 6);
        let via_heights = frac(2, h_star) * big(height_power_sum(rs, 2));
        let exps: BigInt = rs.exponents().iter().map(|&m| binomial(2 * m + 2, 3)).sum();
        let via_exponents = frac(1, 2 * h_star) * big(exps);
        let agree = closed_form == via_heights && via_heights == via_exponents;
        IndexReport {
            closed_form,
            via_heights,
            via_exponents,
            agree,
        }
    }

    /// The agreed value, if all three routes coincide.
    pub fn value(&self) -> Option<&Rational> {
        self.agree.then_some(&self.closed_form)
    }
}

/// `μ(h) = 2(μ, ρ∨)`.
pub fn principal_h_eigenvalue(rs: &RootSystem, mu: &Weight) -> Rational {
    rs.pair_with_rho_check(mu) * int(2)
}

/// `Σ_{γ>0} ht(γ)^s` by enumeration.
pub fn height_power_sum(rs: &RootSystem, s: u32) -> BigInt {
    rs.positive_roots()
        .iter()
        .map(|g| BigInt::from(g.height()).pow(s))
        .sum()
}

/// `Σ_{γ>0} ht²(γ)`, checked against `(dim g/12) · h* · h*(g∨) · r`.
pub fn sum_height_squares(rs: &RootSystem) -> Result<BigInt> {
    let sum = height_power_sum(rs, 2);
    let closed = frac(
        rs.dim() * rs.dual_coxeter_number() * rs.dual_coxeter_number_of_dual() * rs.r(),
        12,
    );
    if big(sum.clone()) != closed {
        return Err(Error::Inconsistent(format!(
            "Σ ht² = {sum} but the closed form gives {closed} for {}",
            rs.simple_type()
        )));
    }
    Ok(sum)
}

/// Index of the principal `sl2` in `g`, with all three routes agreeing on an
/// integer.
pub fn principal_index(rs: &RootSystem) -> Result<IndexReport> {
    let report = IndexReport::compute(rs);
    if !report.agree || !report.closed_form.is_integer() {
        return Err(Error::Inconsistent(format!(
            "principal index routes for {} give {} / {} / {}",
            rs.simple_type(),
            report.closed_form,
            report.via_heights,
            report.via_exponents
        )));
    }
    Ok(report)
}

/// Decomposition from the h-eigenvalue histogram of a weight system:
/// `n_d = N_d − N_{d+2}`.
pub fn sl2_decompose_weights(rs: &RootSystem, ws: &WeightSystem) -> Result<Sl2Decomposition> {
    let mut hist: BTreeMap<i64, u64> = BTreeMap::new();
    for (w, m) in ws.all_weights(rs) {
        let ev = principal_h_eigenvalue(rs, &w);
        let ev = rational::as_integer(&ev)
            .and_then(|x| x.to_i64())
            .ok_or_else(|| Error::Inconsistent(format!("non-integral h-eigenvalue {ev} at {w}")))?;
        *hist.entry(ev).or_default() += m;
    }
    let count = |k: i64| hist.get(&k).copied().unwrap_or(0);
    let top = hist.keys().next_back().copied().unwrap_or(0);
    let mut parts = Vec::new();
    for d in 0..=top {
        let (a, b) = (count(d), count(d + 2));
        if b > a {
            return Err(Error::Inconsistent(format!(
                "negative sl2 multiplicity at d = {d}: N_d = {a}, N_(d+2) = {b}"
            )));
        }
        if a > b {
            parts.push((d as u64, a - b));
        }
    }
    let decomposition = Sl2Decomposition { parts };
    if &decomposition.dim() != ws.dim() {
        return Err(Error::Inconsistent(format!(
            "sl2 decomposition has dimension {}, module has {}",
            decomposition.dim(),
            ws.dim()
        )));
    }
    Ok(decomposition)
}

/// `V_λ` restricted to the principal `sl2`.
pub fn sl2_decompose(
    rs: &RootSystem,
    lambda: &HighestWeight,
    guard: SizeGuard,
) -> Result<Sl2Decomposition> {
    let ws = reps::freudenthal_multiplicities(rs, lambda, guard)?;
    sl2_decompose_weights(rs, &ws)
}

/// Exponents read off the adjoint module: `g = ⊕ R_{2m_i}`.
pub fn exponents_via_adjoint(rs: &RootSystem) -> Result<Vec<i64>> {
    let exps = adjoint_exponents(rs)?;
    if exps != rs.exponents() {
        return Err(Error::Inconsistent(format!(
            "adjoint decomposition gives exponents {exps:?}, height histogram gives {:?}",
            rs.exponents()
        )));
    }
    Ok(exps)
}

/// Exponents from the adjoint decomposition with no comparison.
pub fn adjoint_exponents(rs: &RootSystem) -> Result<Vec<i64>> {
    let decomposition = sl2_decompose(rs, &HighestWeight::adjoint(rs), SizeGuard(u64::MAX))?;
    let mut exps = Vec::new();
    for &(d, n) in decomposition.parts() {
        if d % 2 != 0 {
            return Err(Error::Inconsistent(format!(
                "adjoint module has an odd constituent R_{d}"
            )));
        }
        exps.extend(std::iter::repeat_n(d as i64 / 2, n as usize));
    }
    Ok(exps)
}

/// `(dim V_λ / 6) · h*(g∨) · r · (λ, λ+2ρ)`.
pub fn principal_index_rep_closed_form(rs: &RootSystem, lambda: &HighestWeight) -> Rational {
    big(reps::weyl_dim(rs, lambda))
        * frac(rs.dual_coxeter_number_of_dual() * rs.r(), 6)
        * reps::casimir(rs, lambda.weight())
}

/// Dynkin index of `V_λ` as a module over the principal `sl2`, by the closed
/// form and by summing `C(d+2, 3)` over the decomposition.
pub fn principal_index_rep(
    rs: &RootSystem,
    lambda: &HighestWeight,
    guard: SizeGuard,
) -> Result<BigInt> {
    let closed = principal_index_rep_closed_form(rs, lambda);
    let by_parts = sl2_decompose(rs, lambda, guard)?.dynkin_index();
    if closed != big(by_parts.clone()) {
        return Err(Error::Inconsistent(format!(
            "principal index of V{}: closed form {closed}, decomposition sum {by_parts}",
            lambda.weight()
        )));
    }
    Ok(by_parts)
}

/// `ind_AVE((sl2)^pr, V_λ) = Σ_μ (μ, ρ∨)² / 2`.
pub fn principal_ave_index_rep(rs: &RootSystem, ws: &WeightSystem) -> Rational {
    reps::weight_sum_squares_of(rs, ws, reps::WeightSumMode::RhoCheckNormalized) * frac(1, 2)
}

/// `(ρ∨, γ) = ht(γ)` for every positive root.
pub fn rho_check_is_height(rs: &RootSystem) -> bool {
    let rc = rs.rho_check();
    rs.positive_roots()
        .iter()
        .all(|g: &Root| rs.form().pairing(rc, &g.to_rational()).ok() == Some(int(g.height())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn eigenvalues() {
        let g2 = rs("G2");
        for i in 0..2 {
            let alpha = g2.root_to_weight(&g2.positive_roots()[i]);
            assert_eq!(principal_h_eigenvalue(&g2, &alpha), int(2));
        }
        assert_eq!(
            principal_h_eigenvalue(&g2, &g2.root_to_weight(g2.theta())),
            int(10)
        );
        assert_eq!(principal_h_eigenvalue(&g2, &Weight::zero(2)), int(0));
    }

    #[test]
    fn height_squares() {
        assert_eq!(sum_height_squares(&rs("A2")).unwrap(), BigInt::from(6));
        assert_eq!(sum_height_squares(&rs("B2")).unwrap(), BigInt::from(15));
        assert_eq!(sum_height_squares(&rs("G2")).unwrap(), BigInt::from(56));
    }

    #[test]
    fn principal_indices() {
        assert_eq!(principal_index(&rs("G2")).unwrap().closed_form, int(28));
        assert_eq!(principal_index(&rs("E7")).unwrap().closed_form, int(399));
        assert_eq!(principal_index(&rs("A1")).unwrap().closed_form, int(1));
    }

    #[test]
    fn decompositions() {
        let a1 = rs("A1");
        let l = HighestWeight::new(&a1, vec![2]).unwrap();
        assert_eq!(
            sl2_decompose(&a1, &l, SizeGuard::DEFAULT).unwrap().parts(),
            [(2, 1)]
        );
        let a2 = rs("A2");
        let ad = HighestWeight::adjoint(&a2);
        assert_eq!(
            sl2_decompose(&a2, &ad, SizeGuard::DEFAULT).unwrap().parts(),
            [(2, 1), (4, 1)]
        );
        let g2 = rs("G2");
        let ad = HighestWeight::adjoint(&g2);
        assert_eq!(
            sl2_decompose(&g2, &ad, SizeGuard::DEFAULT).unwrap().parts(),
            [(2, 1), (10, 1)]
        );
    }

    #[test]
    fn adjoint_exponents_match() {
        assert_eq!(exponents_via_adjoint(&rs("A2")).unwrap(), [1, 2]);
        assert_eq!(exponents_via_adjoint(&rs("D4")).unwrap(), [1, 3, 3, 5]);
        assert_eq!(
            exponents_via_adjoint(&rs("E8")).unwrap(),
            [1, 7, 11, 13, 17, 19, 23, 29]
        );
    }

    #[test]
    fn representation_indices() {
        let a1 = rs("A1");
        let l = HighestWeight::new(&a1, vec![1]).unwrap();
        assert_eq!(
            principal_index_rep(&a1, &l, SizeGuard::DEFAULT).unwrap(),
            BigInt::from(1)
        );
        let g2 = rs("G2");
        let ad = HighestWeight::adjoint(&g2);
        assert_eq!(
            principal_index_rep(&g2, &ad, SizeGuard::DEFAULT).unwrap(),
            BigInt::from(224)
        );
        let ws = reps::freudenthal_multiplicities(&g2, &ad, SizeGuard::DEFAULT).unwrap();
        assert_eq!(principal_ave_index_rep(&g2, &ws) * int(4), int(224));
    }

    #[test]
    fn rho_check_heights() {
        for t in crate::SimpleType::all_up_to(6) {
            assert!(rho_check_is_height(&rs(&t.to_string())), "{t}");
        }
    }
}
