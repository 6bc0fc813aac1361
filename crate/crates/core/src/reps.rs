//! Irreducible representations: dimensions, weight multiplicities, Weyl
//! orbits and Dynkin indices.

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, big, frac, int, Rational};
use crate::rootsys::{Root, RootSystem, Weight};

/// Upper bound on the dimension of modules whose weight systems are
/// materialized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeGuard(pub u64);

impl SizeGuard {
    pub const DEFAULT: SizeGuard = SizeGuard(1_000_000);

    pub fn check(&self, dim: &BigInt) -> Result<()> {
        if *dim > BigInt::from(self.0) {
            Err(Error::SizeGuard {
                dim: dim.to_string(),
                max: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for SizeGuard {
    fn default() -> Self {
        SizeGuard::DEFAULT
    }
}

/// A dominant weight, validated against a root system.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HighestWeight(Weight);

impl HighestWeight {
    pub fn new(rs: &RootSystem, coords: Vec<i64>) -> Result<Self> {
        if coords.len() != rs.rank() {
            return Err(Error::DimensionMismatch {
                expected: rs.rank(),
                got: coords.len(),
            });
        }
        let w = Weight::new(coords);
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.into_coords()));
        }
        Ok(HighestWeight(w))
    }

    /// The highest root as a weight: highest weight of the adjoint module.
    pub fn adjoint(rs: &RootSystem) -> Self {
        HighestWeight(rs.root_to_weight(rs.theta()))
    }

    /// `ω_i`, zero-based index in Bourbaki order.
    pub fn fundamental(rs: &RootSystem, i: usize) -> Self {
        let mut c = vec![0; rs.rank()];
        c[i] = 1;
        HighestWeight(Weight::new(c))
    }

    pub fn weight(&self) -> &Weight {
        &self.0
    }

    pub fn coords(&self) -> &[i64] {
        self.0.coords()
    }
}

/// One dominant weight of a module with its multiplicity and orbit size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightEntry {
    pub weight: Weight,
    pub multiplicity: u64,
    pub orbit_size: u64,
}

/// Dominant weights of `V_λ` with multiplicities; other weights are
/// recovered through Weyl orbits.
#[derive(Debug, Clone)]
pub struct WeightSystem {
    lambda: HighestWeight,
    entries: Vec<WeightEntry>,
    index: HashMap<Vec<i64>, usize>,
    dim: BigInt,
}

impl WeightSystem {
    pub fn highest_weight(&self) -> &HighestWeight {
        &self.lambda
    }

    pub fn entries(&self) -> &[WeightEntry] {
        &self.entries
    }

    pub fn dim(&self) -> &BigInt {
        &self.dim
    }

    /// Multiplicity of an arbitrary weight, zero if it does not occur.
    pub fn multiplicity(&self, rs: &RootSystem, w: &Weight) -> u64 {
        let dom = dominant_representative(rs, w.coords().to_vec());
        self.index
            .get(&dom)
            .map_or(0, |&k| self.entries[k].multiplicity)
    }

    /// All weights with multiplicity, orbit by orbit.
    pub fn all_weights<'a>(
        &'a self,
        rs: &'a RootSystem,
    ) -> impl Iterator<Item = (Weight, u64)> + 'a {
        self.entries.iter().flat_map(move |e| {
            let m = e.multiplicity;
            weyl_orbit(rs, &e.weight).into_iter().map(move |w| (w, m))
        })
    }
}

/// Weight of `s_i(μ) = μ − μ_i α_i`, in place.
fn reflect(rs: &RootSystem, w: &mut [i64], i: usize) {
    let c = w[i];
    if c != 0 {
        for (j, a) in rs.cartan().rows()[i].iter().enumerate() {
            w[j] -= c * a;
        }
    }
}

/// The unique dominant weight in the Weyl orbit of `w`.
pub fn dominant_representative(rs: &RootSystem, mut w: Vec<i64>) -> Vec<i64> {
    while let Some(i) = w.iter().position(|&c| c < 0) {
        reflect(rs, &mut w, i);
    }
    w
}

/// Full Weyl orbit of `μ` by breadth-first application of simple
/// reflections, starting from `μ` itself.
pub fn weyl_orbit(rs: &RootSystem, mu: &Weight) -> Vec<Weight> {
    let n = rs.rank();
    let start = mu.coords().to_vec();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    let mut out = Vec::new();
    while let Some(w) = queue.pop_front() {
        for i in 0..n {
            if w[i] == 0 {
                continue;
            }
            let mut next = w.clone();
            reflect(rs, &mut next, i);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
        out.push(Weight::new(w));
    }
    out
}

/// `dim V_λ = Π_{γ>0} (λ+ρ, γ)/(ρ, γ)`.
pub fn weyl_dim(rs: &RootSystem, lambda: &HighestWeight) -> BigInt {
    let shifted: Vec<i64> = lambda.coords().iter().map(|c| c + 1).collect();
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for g in rs.positive_roots() {
        num *= BigInt::from(rs.pair_weight_root_scaled(&shifted, g.coords()));
        den *= BigInt::from(rs.pair_weight_root_scaled(rs.rho().coords(), g.coords()));
    }
    let (q, rem) = num.div_rem(&den);
    assert!(rem.is_zero(), "Weyl dimension formula must be integral");
    q
}

/// `(λ, λ+2ρ)` under the normalized form.
pub fn casimir(rs: &RootSystem, lambda: &Weight) -> Rational {
    let shifted = Weight::new(lambda.coords().iter().map(|c| c + 2).collect());
    rs.pair_weights(lambda, &shifted)
}

/// `(dim V_λ / dim g) · (λ, λ+2ρ)` without the integrality assertion.
pub fn dynkin_index_value(rs: &RootSystem, lambda: &HighestWeight) -> Rational {
    big(weyl_dim(rs, lambda)) * frac(1, rs.dim()) * casimir(rs, lambda.weight())
}

/// Dynkin index of `V_λ`; fails if the value is not a nonnegative integer.
pub fn dynkin_index_rep(rs: &RootSystem, lambda: &HighestWeight) -> Result<Rational> {
    let q = dynkin_index_value(rs, lambda);
    if !q.is_integer() || q < Rational::zero() {
        return Err(Error::Inconsistent(format!(
            "Dynkin index of V{} in {} is {q}, not a nonnegative integer",
            lambda.weight(),
            rs.simple_type()
        )));
    }
    Ok(q)
}

/// Index normalized by the adjoint module: `ind_D(V_λ) / (2h*)`.
pub fn ave_index_rep(rs: &RootSystem, lambda: &HighestWeight) -> Rational {
    dynkin_index_value(rs, lambda) * frac(1, 2 * rs.dual_coxeter_number())
}

/// Dynkin index of an arbitrary module given by its weights with
/// multiplicity, from the trace form evaluated at `ρ∨`:
/// `Σ m_μ (μ, ρ∨)² / (ρ∨, ρ∨)`. Additive over direct sums by construction.
pub fn dynkin_index_by_trace<I>(rs: &RootSystem, weights: I) -> Rational
where
    I: IntoIterator<Item = (Weight, u64)>,
{
    let trace: Rational = weights
        .into_iter()
        .map(|(w, m)| {
            let x = rs.pair_with_rho_check(&w);
            &x * &x * int(m as i64)
        })
        .sum();
    let rc = rs.rho_check();
    let norm = rs.form().pairing(rc, rc).expect("rank matches");
    trace / norm
}

struct DominantCandidate {
    weight: Vec<i64>,
    /// `λ − μ` in simple-root coordinates.
    depth: Root,
}

fn dominant_candidates(rs: &RootSystem, lambda: &HighestWeight) -> Vec<DominantCandidate> {
    let n = rs.rank();
    let start = lambda.coords().to_vec();
    let mut seen: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
    seen.insert(start.clone(), vec![0; n]);
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        let depth = seen[&w].clone();
        for (g, gw) in rs
            .positive_roots()
            .iter()
            .zip(rs.positive_roots_as_weights())
        {
            let next: Vec<i64> = w.iter().zip(gw).map(|(a, b)| a - b).collect();
            if next.iter().all(|&c| c >= 0) && !seen.contains_key(&next) {
                let d = depth.iter().zip(g.coords()).map(|(a, b)| a + b).collect();
                seen.insert(next.clone(), d);
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<DominantCandidate> = seen
        .into_iter()
        .map(|(weight, depth)| DominantCandidate {
            weight,
            depth: Root::new(depth),
        })
        .collect();
    out.sort_by(|a, b| {
        a.depth
            .height()
            .cmp(&b.depth.height())
            .then_with(|| b.weight.cmp(&a.weight))
    });
    out
}

/// Dominant weights `μ ≤ λ`, starting with `λ` and ordered by the height of
/// `λ − μ`.
pub fn dominant_weights(rs: &RootSystem, lambda: &HighestWeight) -> Vec<Weight> {
    dominant_candidates(rs, lambda)
        .into_iter()
        .map(|c| Weight::new(c.weight))
        .collect()
}

/// Weight system of `V_λ` by Freudenthal's recursion.
///
/// Dominant weights are processed by decreasing `(μ+ρ, μ+ρ)`, so every
/// `m_{μ+kγ}` on the right-hand side is already known once mapped to its
/// dominant representative.
pub fn freudenthal_multiplicities(
    rs: &RootSystem,
    lambda: &HighestWeight,
    guard: SizeGuard,
) -> Result<WeightSystem> {
    let dim = weyl_dim(rs, lambda);
    guard.check(&dim)?;

    let lambda_rho: Vec<i64> = lambda.coords().iter().map(|c| c + 1).collect();
    let mut candidates = dominant_candidates(rs, lambda);
    // (λ+ρ,λ+ρ) − (μ+ρ,μ+ρ) = (λ + μ + 2ρ, λ − μ), scaled to an integer.
    let gap = |c: &DominantCandidate| -> i128 {
        let s: Vec<i64> = lambda_rho
            .iter()
            .zip(&c.weight)
            .map(|(a, b)| a + b + 1)
            .collect();
        rs.pair_weight_root_scaled(&s, c.depth.coords())
    };
    candidates.sort_by(|a, b| gap(a).cmp(&gap(b)).then_with(|| b.weight.cmp(&a.weight)));

    let index: HashMap<Vec<i64>, usize> = candidates
        .iter()
        .enumerate()
        .map(|(k, c)| (c.weight.clone(), k))
        .collect();
    let mut mult: Vec<Option<u64>> = vec![None; candidates.len()];

    for (k, cand) in candidates.iter().enumerate() {
        if k == 0 {
            mult[0] = Some(1);
            continue;
        }
        let den = gap(cand);
        if den <= 0 {
            return Err(Error::Inconsistent(format!(
                "Freudenthal denominator {den} at weight {:?}",
                cand.weight
            )));
        }
        let mut num: i128 = 0;
        for (g, gw) in rs
            .positive_roots()
            .iter()
            .zip(rs.positive_roots_as_weights())
        {
            let mut shifted = cand.weight.clone();
            loop {
                for (s, d) in shifted.iter_mut().zip(gw) {
                    *s += d;
                }
                let dom = dominant_representative(rs, shifted.clone());
                let Some(&j) = index.get(&dom) else { break };
                let m = mult[j].ok_or_else(|| {
                    Error::Inconsistent(format!(
                        "multiplicity of {dom:?} needed before it was computed"
                    ))
                })?;
                num += m as i128 * rs.pair_weight_root_scaled(&shifted, g.coords());
            }
        }
        num *= 2;
        if num % den != 0 || num / den <= 0 {
            return Err(Error::Inconsistent(format!(
                "Freudenthal recursion gives {num}/{den} at weight {:?}",
                cand.weight
            )));
        }
        mult[k] = Some((num / den) as u64);
    }

    // Restore the height-of-depth order of `dominant_weights`.
    let mut order: Vec<usize> = (0..candidates.len()).collect();
    order.sort_by(|&a, &b| {
        let (ca, cb) = (&candidates[a], &candidates[b]);
        ca.depth
            .height()
            .cmp(&cb.depth.height())
            .then_with(|| cb.weight.cmp(&ca.weight))
    });
    let entries: Vec<WeightEntry> = order
        .iter()
        .map(|&k| {
            let weight = Weight::new(candidates[k].weight.clone());
            let orbit_size = weyl_orbit(rs, &weight).len() as u64;
            WeightEntry {
                weight,
                multiplicity: mult[k].expect("computed"),
                orbit_size,
            }
        })
        .collect();
    let index = entries
        .iter()
        .enumerate()
        .map(|(k, e)| (e.weight.coords().to_vec(), k))
        .collect();

    let mass: BigInt = entries
        .iter()
        .map(|e| BigInt::from(e.multiplicity) * BigInt::from(e.orbit_size))
        .sum();
    if mass != dim {
        return Err(Error::Inconsistent(format!(
            "weight system of V{} has mass {mass}, Weyl dimension is {dim}",
            lambda.weight()
        )));
    }
    Ok(WeightSystem {
        lambda: lambda.clone(),
        entries,
        index,
        dim,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightSumMode {
    /// `Σ (μ, ρ∨)²` under the normalized form.
    RhoCheckNormalized,
    /// `Σ ⟨μ, ρ⟩²` under the canonical form.
    RhoCanonical,
}

/// Sum of squared pairings over all weights of `V_λ` with multiplicity.
pub fn weight_sum_squares(
    rs: &RootSystem,
    lambda: &HighestWeight,
    mode: WeightSumMode,
    guard: SizeGuard,
) -> Result<Rational> {
    let ws = freudenthal_multiplicities(rs, lambda, guard)?;
    Ok(weight_sum_squares_of(rs, &ws, mode))
}

pub fn weight_sum_squares_of(rs: &RootSystem, ws: &WeightSystem, mode: WeightSumMode) -> Rational {
    // Linear functional μ ↦ (μ, v) on weight coordinates: (ω_i, v) = v_i d_i.
    let target: &[Rational] = match mode {
        WeightSumMode::RhoCheckNormalized => rs.rho_check(),
        WeightSumMode::RhoCanonical => rs.rho_root_coords(),
    };
    let coeffs: Vec<Rational> = target
        .iter()
        .zip(rs.half_norms())
        .map(|(v, d)| v * d)
        .collect();
    let denom = rational::lcm_of_denominators(&coeffs);
    let int_coeffs: Vec<i128> = coeffs
        .iter()
        .map(|c| {
            (c * big(denom.clone()))
                .to_integer()
                .to_i128()
                .expect("small")
        })
        .collect();
    let mut total: i128 = 0;
    for (w, m) in ws.all_weights(rs) {
        let x: i128 = w
            .coords()
            .iter()
            .zip(&int_coeffs)
            .map(|(&a, b)| a as i128 * b)
            .sum();
        total += m as i128 * x * x;
    }
    let mut result = Rational::from_integer(BigInt::from(total)) / big(&denom * &denom);
    if mode == WeightSumMode::RhoCanonical {
        let t = frac(1, 2 * rs.dual_coxeter_number());
        result = result * &t * &t;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::binomial;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    fn hw(rs: &RootSystem, c: &[i64]) -> HighestWeight {
        HighestWeight::new(rs, c.to_vec()).unwrap()
    }

    #[test]
    fn dimensions() {
        let a1 = rs("A1");
        for d in 0..10 {
            assert_eq!(weyl_dim(&a1, &hw(&a1, &[d])), BigInt::from(d + 1));
        }
        let a2 = rs("A2");
        assert_eq!(weyl_dim(&a2, &hw(&a2, &[1, 1])), BigInt::from(8));
        let g2 = rs("G2");
        assert_eq!(weyl_dim(&g2, &hw(&g2, &[1, 0])), BigInt::from(7));
        let e8 = rs("E8");
        assert_eq!(
            weyl_dim(&e8, &HighestWeight::fundamental(&e8, 0)),
            BigInt::from(3875)
        );
        assert_eq!(
            weyl_dim(&e8, &HighestWeight::adjoint(&e8)),
            BigInt::from(248)
        );
    }

    #[test]
    fn highest_weight_validation() {
        let a2 = rs("A2");
        assert!(matches!(
            HighestWeight::new(&a2, vec![1, -1]),
            Err(Error::NotDominant(_))
        ));
        assert!(matches!(
            HighestWeight::new(&a2, vec![1]),
            Err(Error::DimensionMismatch {
                expected: 2,
                got: 1
            })
        ));
    }

    #[test]
    fn dynkin_indices() {
        let a1 = rs("A1");
        for d in 0..=20 {
            assert_eq!(
                dynkin_index_rep(&a1, &hw(&a1, &[d])).unwrap(),
                big(binomial(d + 2, 3))
            );
        }
        let a2 = rs("A2");
        assert_eq!(dynkin_index_rep(&a2, &hw(&a2, &[1, 0])).unwrap(), int(1));
        assert_eq!(ave_index_rep(&a2, &hw(&a2, &[1, 0])), frac(1, 6));
        assert_eq!(ave_index_rep(&a1, &hw(&a1, &[1])), frac(1, 4));
        for t in crate::SimpleType::all_up_to(8) {
            let r = RootSystem::new(t).unwrap();
            let ad = HighestWeight::adjoint(&r);
            assert_eq!(
                dynkin_index_rep(&r, &ad).unwrap(),
                int(2 * r.dual_coxeter_number())
            );
            assert_eq!(ave_index_rep(&r, &ad), int(1));
        }
    }

    #[test]
    fn dominant_weight_lists() {
        let a1 = rs("A1");
        let got: Vec<Vec<i64>> = dominant_weights(&a1, &hw(&a1, &[3]))
            .into_iter()
            .map(Weight::into_coords)
            .collect();
        assert_eq!(got, [vec![3], vec![1]]);
        let a2 = rs("A2");
        let got: Vec<Vec<i64>> = dominant_weights(&a2, &hw(&a2, &[1, 1]))
            .into_iter()
            .map(Weight::into_coords)
            .collect();
        assert_eq!(got, [vec![1, 1], vec![0, 0]]);
        let g2 = rs("G2");
        let got: Vec<Vec<i64>> = dominant_weights(&g2, &HighestWeight::adjoint(&g2))
            .into_iter()
            .map(Weight::into_coords)
            .collect();
        assert_eq!(got, [vec![0, 1], vec![1, 0], vec![0, 0]]);
    }

    #[test]
    fn multiplicities() {
        let a1 = rs("A1");
        let ws = freudenthal_multiplicities(&a1, &hw(&a1, &[5]), SizeGuard::DEFAULT).unwrap();
        assert!(ws.entries().iter().all(|e| e.multiplicity == 1));
        let a2 = rs("A2");
        let ws = freudenthal_multiplicities(&a2, &hw(&a2, &[1, 1]), SizeGuard::DEFAULT).unwrap();
        assert_eq!(ws.multiplicity(&a2, &Weight::zero(2)), 2);
        assert_eq!(ws.multiplicity(&a2, &Weight::new(vec![-1, 2])), 1);
        assert_eq!(ws.multiplicity(&a2, &Weight::new(vec![3, 0])), 0);
        let b3 = rs("B3");
        let ws = freudenthal_multiplicities(&b3, &HighestWeight::adjoint(&b3), SizeGuard::DEFAULT)
            .unwrap();
        assert_eq!(ws.multiplicity(&b3, &Weight::zero(3)), 3);
        // E6: 27 ⊗ 27* contains V(ω1+ω6) of dimension 650 with zero weight multiplicity 20
        let e6 = rs("E6");
        let ws = freudenthal_multiplicities(&e6, &hw(&e6, &[1, 0, 0, 0, 0, 1]), SizeGuard::DEFAULT)
            .unwrap();
        assert_eq!(ws.dim(), &BigInt::from(650));
        assert_eq!(ws.multiplicity(&e6, &Weight::zero(6)), 20);
    }

    #[test]
    fn size_guard() {
        let e8 = rs("E8");
        let lambda = HighestWeight::fundamental(&e8, 2);
        let err = freudenthal_multiplicities(&e8, &lambda, SizeGuard::DEFAULT).unwrap_err();
        assert!(matches!(err, Error::SizeGuard { max: 1_000_000, .. }));
    }

    #[test]
    fn orbits() {
        let a2 = rs("A2");
        assert_eq!(weyl_orbit(&a2, &Weight::zero(2)).len(), 1);
        assert_eq!(weyl_orbit(&a2, &Weight::new(vec![1, 1])).len(), 6);
        let theta = a2.root_to_weight(a2.theta());
        let orbit: HashSet<Weight> = weyl_orbit(&a2, &theta).into_iter().collect();
        let roots: HashSet<Weight> = a2
            .positive_roots()
            .iter()
            .flat_map(|g| {
                let w = a2.root_to_weight(g);
                let neg = Weight::new(w.coords().iter().map(|c| -c).collect());
                [w, neg]
            })
            .collect();
        assert_eq!(orbit, roots);
        let e8 = rs("E8");
        assert_eq!(weyl_orbit(&e8, &e8.root_to_weight(e8.theta())).len(), 240);
    }

    #[test]
    fn weight_sums() {
        let a1 = rs("A1");
        let ad = HighestWeight::adjoint(&a1);
        let g = SizeGuard::DEFAULT;
        assert_eq!(
            weight_sum_squares(&a1, &ad, WeightSumMode::RhoCheckNormalized, g).unwrap(),
            int(2)
        );
        assert_eq!(
            weight_sum_squares(&a1, &ad, WeightSumMode::RhoCanonical, g).unwrap(),
            frac(1, 8)
        );
        let g2 = rs("G2");
        let ad = HighestWeight::adjoint(&g2);
        assert_eq!(
            weight_sum_squares(&g2, &ad, WeightSumMode::RhoCheckNormalized, g).unwrap(),
            int(112)
        );
    }

    #[test]
    fn trace_index_matches_dynkin_formula_and_is_additive() {
        let b3 = rs("B3");
        let l1 = hw(&b3, &[1, 0, 0]);
        let l2 = hw(&b3, &[0, 0, 1]);
        let w1 = freudenthal_multiplicities(&b3, &l1, SizeGuard::DEFAULT).unwrap();
        let w2 = freudenthal_multiplicities(&b3, &l2, SizeGuard::DEFAULT).unwrap();
        let i1 = dynkin_index_by_trace(&b3, w1.all_weights(&b3));
        let i2 = dynkin_index_by_trace(&b3, w2.all_weights(&b3));
        assert_eq!(i1, dynkin_index_rep(&b3, &l1).unwrap());
        assert_eq!(i2, dynkin_index_rep(&b3, &l2).unwrap());
        let sum = dynkin_index_by_trace(&b3, w1.all_weights(&b3).chain(w2.all_weights(&b3)));
        assert_eq!(sum, i1 + i2);
    }
}
