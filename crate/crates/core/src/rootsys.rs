//! Root systems of simple Lie algebras in exact arithmetic.
//!
//! Roots are integer vectors in the simple-root basis, weights are integer
//! vectors in the fundamental-weight basis. A root with coordinates `c` has
//! weight coordinates `Aᵀc` where `A` is the Cartan matrix (see
//! [`crate::cartan`] for the convention).

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::cartan::{CartanMatrix, SimpleType};
use crate::error::{Error, Result};
use crate::linalg::{self, RationalMatrix};
use crate::rational::{self, frac, int, Rational};

/// A vector in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Root(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn to_rational(&self) -> Vec<Rational> {
        self.0.iter().map(|&c| int(c)).collect()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_coords(f, &self.0)
    }
}

/// A vector in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_coords(f, &self.0)
    }
}

fn write_coords(f: &mut fmt::Formatter<'_>, c: &[i64]) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in c.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Normalization {
    /// Long roots have squared length 2.
    Normalized,
    /// Form induced by the Killing form; the normalized form divided by `2h*`.
    Canonical,
}

/// Symmetric bilinear form on the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    gram: RationalMatrix,
    normalization: Normalization,
}

impl BilinearForm {
    pub fn gram(&self) -> &RationalMatrix {
        &self.gram
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    /// `(x, y)` for vectors given in simple-root coordinates.
    pub fn pairing(&self, x: &[Rational], y: &[Rational]) -> Result<Rational> {
        let n = self.rank();
        for v in [x, y] {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: v.len(),
                });
            }
        }
        let mut acc = Rational::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() && !self.gram[i][j].is_zero() {
                    acc += xi * &self.gram[i][j] * yj;
                }
            }
        }
        Ok(acc)
    }

    pub fn pairing_roots(&self, x: &Root, y: &Root) -> Result<Rational> {
        self.pairing(&x.to_rational(), &y.to_rational())
    }

    pub fn scaled(&self, factor: &Rational, normalization: Normalization) -> BilinearForm {
        BilinearForm {
            gram: self
                .gram
                .iter()
                .map(|row| row.iter().map(|g| g * factor).collect())
                .collect(),
            normalization,
        }
    }
}

/// The Cartan matrix symmetrized so that long roots have squared length 2.
///
/// Returns the form together with the half squared lengths `d_i = (α_i, α_i)/2`,
/// which satisfy `(α_i, α_j) = a_ij · d_j`.
pub fn normalized_form(cartan: &CartanMatrix) -> Result<(BilinearForm, Vec<Rational>)> {
    let n = cartan.rank();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    let mut queue = VecDeque::new();
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        if start > 0 {
            return Err(Error::Inconsistent("Cartan matrix is decomposable".into()));
        }
        d[start] = Some(Rational::one());
        queue.push_back(start);
        while let Some(i) = queue.pop_front() {
            let di = d[i].clone().expect("visited");
            for j in 0..n {
                let (aij, aji) = (cartan.get(i, j), cartan.get(j, i));
                if i == j || aij == 0 {
                    continue;
                }
                // a_ij d_j = a_ji d_i
                let dj = &di * frac(aji, aij);
                match &d[j] {
                    Some(existing) if *existing != dj => {
                        return Err(Error::Inconsistent(
                            "Cartan matrix is not symmetrizable".into(),
                        ))
                    }
                    Some(_) => {}
                    None => {
                        d[j] = Some(dj);
                        queue.push_back(j);
                    }
                }
            }
        }
    }
    let d: Vec<Rational> = d.into_iter().map(|x| x.expect("connected")).collect();
    let max = d.iter().max().cloned().expect("rank >= 1");
    let d: Vec<Rational> = d.iter().map(|x| x / &max).collect();
    let gram: RationalMatrix = (0..n)
        .map(|i| (0..n).map(|j| int(cartan.get(i, j)) * &d[j]).collect())
        .collect();
    for i in 0..n {
        for j in 0..i {
            if gram[i][j] != gram[j][i] {
                return Err(Error::Inconsistent(
                    "symmetrized form is not symmetric".into(),
                ));
            }
        }
    }
    Ok((
        BilinearForm {
            gram,
            normalization: Normalization::Normalized,
        },
        d,
    ))
}

/// Complete set of positive roots by height-by-height root-string closure,
/// sorted by height and then lexicographically.
pub fn positive_roots(cartan: &CartanMatrix) -> Vec<Root> {
    let n = cartan.rank();
    let simple: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut known: HashSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut all = simple.clone();
    let mut layer = simple;
    while !layer.is_empty() {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for gamma in &layer {
            for i in 0..n {
                // ⟨γ, α_i∨⟩
                let coroot_pairing: i64 = (0..n).map(|j| gamma[j] * cartan.get(j, i)).sum();
                let mut p = 0;
                let mut probe = gamma.clone();
                loop {
                    probe[i] -= 1;
                    if known.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - coroot_pairing > 0 {
                    let mut up = gamma.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    let mut roots: Vec<Root> = all.into_iter().map(Root).collect();
    roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
    roots
}

/// Exponents from the height histogram of the positive roots: `k` occurs
/// `#{ht = k} − #{ht = k+1}` times (conjugate partition).
pub fn exponents_from_heights(roots: &[Root]) -> Vec<i64> {
    let max = roots.iter().map(Root::height).max().unwrap_or(0);
    let mut hist = vec![0i64; max as usize + 2];
    for r in roots {
        hist[r.height() as usize] += 1;
    }
    let mut exps = Vec::new();
    for k in 1..=max as usize {
        for _ in 0..hist[k] - hist[k + 1] {
            exps.push(k as i64);
        }
    }
    exps
}

/// Root system of a simple Lie algebra with all derived data.
#[derive(Debug, Clone)]
pub struct RootSystem {
    simple_type: SimpleType,
    cartan: CartanMatrix,
    positive_roots: Vec<Root>,
    /// Positive roots in weight coordinates, aligned with `positive_roots`.
    root_weights: Vec<Vec<i64>>,
    form: BilinearForm,
    half_norms: Vec<Rational>,
    /// `d_i · scale` as integers.
    scaled_half_norms: Vec<i64>,
    scale: i64,
    /// `(Aᵀ)⁻¹`: weight coordinates to root coordinates.
    weight_to_root: RationalMatrix,
    /// `(ω_i, ω_j)` under the normalized form.
    weight_gram: RationalMatrix,
    theta: Root,
    theta_s: Root,
    r: i64,
    rho: Weight,
    rho_root: Vec<Rational>,
    rho_check: Vec<Rational>,
    exponents: Vec<i64>,
    h: i64,
    h_star: i64,
    h_star_dual: i64,
    dim_g: i64,
}

impl RootSystem {
    pub fn new(simple_type: SimpleType) -> Result<Self> {
        let cartan = simple_type.cartan_matrix();
        let mut rs = Self::build(simple_type, cartan)?;
        let dual = Self::build(simple_type.dual(), rs.cartan.transpose())?;
        rs.h_star_dual = dual.h_star;
        Ok(rs)
    }

    /// Root system on the coroots. Its Cartan matrix is the transpose of this
    /// one and its form is renormalized so that long coroots have length 2.
    pub fn dual_root_system(&self) -> Result<RootSystem> {
        let mut dual = Self::build(self.simple_type.dual(), self.cartan.transpose())?;
        dual.h_star_dual = self.h_star;
        Ok(dual)
    }

    fn build(simple_type: SimpleType, cartan: CartanMatrix) -> Result<Self> {
        let n = cartan.rank();
        let (form, half_norms) = normalized_form(&cartan)?;
        let scale_big = rational::lcm_of_denominators(&half_norms);
        let scale = scale_big.to_i64().expect("small lcm");
        let scaled_half_norms: Vec<i64> = half_norms
            .iter()
            .map(|d| (d * &scale_big).to_integer().to_i64().expect("small"))
            .collect();

        let positive_roots = positive_roots(&cartan);
        let root_weights: Vec<Vec<i64>> = positive_roots
            .iter()
            .map(|g| root_to_weight_coords(&cartan, g.coords()))
            .collect();

        let a_t = linalg::transpose(&linalg::from_integers(cartan.rows()));
        let weight_to_root = linalg::inverse(&a_t)
            .ok_or_else(|| Error::Inconsistent("singular Cartan matrix".into()))?;
        let weight_gram: RationalMatrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| &weight_to_root[j][i] * &half_norms[j])
                    .collect()
            })
            .collect();

        let norm = |w: &[i64], c: &[i64]| -> Rational {
            w.iter()
                .zip(c)
                .zip(&half_norms)
                .map(|((&wi, &ci), d)| int(wi * ci) * d)
                .sum()
        };
        let lengths: Vec<Rational> = positive_roots
            .iter()
            .zip(&root_weights)
            .map(|(g, w)| norm(w, g.coords()))
            .collect();

        let dominant: Vec<usize> = (0..positive_roots.len())
            .filter(|&k| root_weights[k].iter().all(|&x| x >= 0))
            .collect();
        let long = lengths.iter().max().cloned().expect("nonempty");
        let short = lengths.iter().min().cloned().expect("nonempty");
        let pick = |len: &Rational, what: &str| -> Result<usize> {
            let hits: Vec<usize> = dominant
                .iter()
                .copied()
                .filter(|&k| lengths[k] == *len)
                .collect();
            match hits.as_slice() {
                [k] => Ok(*k),
                _ => Err(Error::Inconsistent(format!(
                    "expected a unique dominant {what} root, found {}",
                    hits.len()
                ))),
            }
        };
        let theta_idx = pick(&long, "long")?;
        let theta_s_idx = pick(&short, "short")?;
        if long != int(2) {
            return Err(Error::Inconsistent("long roots must have length 2".into()));
        }
        let r = rational::as_integer(&(&long / &short))
            .and_then(|x| x.to_i64())
            .ok_or_else(|| Error::Inconsistent("non-integral length ratio".into()))?;
        let theta = positive_roots[theta_idx].clone();
        let theta_s = positive_roots[theta_s_idx].clone();

        let rho = Weight(vec![1; n]);
        let mut rho_root = vec![Rational::zero(); n];
        let mut rho_check = vec![Rational::zero(); n];
        for (g, len) in positive_roots.iter().zip(&lengths) {
            for i in 0..n {
                rho_root[i] += frac(g.coords()[i], 2);
                rho_check[i] += int(g.coords()[i]) / len;
            }
        }

        // h* = 1 + (ρ, θ∨) = 1 + 2(ρ, θ)/(θ, θ)
        let rho_theta: Rational = rho
            .coords()
            .iter()
            .zip(theta.coords())
            .zip(&half_norms)
            .map(|((&w, &c), d)| int(w * c) * d)
            .sum();
        let h_star_q = Rational::one() + rho_theta * int(2) / &long;
        let h_star = rational::as_integer(&h_star_q)
            .and_then(|x| x.to_i64())
            .ok_or_else(|| Error::Inconsistent("non-integral dual Coxeter number".into()))?;

        let exponents = exponents_from_heights(&positive_roots);
        let h = theta.height() + 1;
        let dim_g = n as i64 + 2 * positive_roots.len() as i64;

        Ok(RootSystem {
            simple_type,
            cartan,
            positive_roots,
            root_weights,
            form,
            half_norms,
            scaled_half_norms,
            scale,
            weight_to_root,
            weight_gram,
            theta,
            theta_s,
            r,
            rho,
            rho_root,
            rho_check,
            exponents,
            h,
            h_star,
            h_star_dual: 0,
            dim_g,
        })
    }

    pub fn simple_type(&self) -> SimpleType {
        self.simple_type
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// Positive roots in fundamental-weight coordinates, in the same order as
    /// [`RootSystem::positive_roots`].
    pub fn positive_roots_as_weights(&self) -> &[Vec<i64>] {
        &self.root_weights
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    pub fn canonical_form(&self) -> BilinearForm {
        self.form
            .scaled(&frac(1, 2 * self.h_star), Normalization::Canonical)
    }

    /// `(α_i, α_i)/2` under the normalized form.
    pub fn half_norms(&self) -> &[Rational] {
        &self.half_norms
    }

    pub fn theta(&self) -> &Root {
        &self.theta
    }

    pub fn theta_s(&self) -> &Root {
        &self.theta_s
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn distinguished_roots(&self) -> (&Root, &Root, i64) {
        (&self.theta, &self.theta_s, self.r)
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// `ρ` in simple-root coordinates.
    pub fn rho_root_coords(&self) -> &[Rational] {
        &self.rho_root
    }

    /// `ρ∨ = Σ_{γ>0} γ/(γ,γ)` in simple-root coordinates of this system.
    pub fn rho_check(&self) -> &[Rational] {
        &self.rho_check
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn coxeter_number(&self) -> i64 {
        self.h
    }

    pub fn dual_coxeter_number(&self) -> i64 {
        self.h_star
    }

    /// Dual Coxeter number of the Langlands dual, computed on the dual system.
    pub fn dual_coxeter_number_of_dual(&self) -> i64 {
        self.h_star_dual
    }

    /// `(h, h*, h*(g∨))`.
    pub fn coxeter_data(&self) -> (i64, i64, i64) {
        (self.h, self.h_star, self.h_star_dual)
    }

    pub fn dim(&self) -> i64 {
        self.dim_g
    }

    pub fn is_simply_laced(&self) -> bool {
        self.r == 1
    }

    pub fn root_to_weight(&self, root: &Root) -> Weight {
        Weight(root_to_weight_coords(&self.cartan, root.coords()))
    }

    /// Root-coordinate image of a weight; rational in general.
    pub fn weight_to_root_coords(&self, w: &Weight) -> Vec<Rational> {
        let v: Vec<Rational> = w.coords().iter().map(|&c| int(c)).collect();
        linalg::mat_vec(&self.weight_to_root, &v)
    }

    /// Exact inverse of [`RootSystem::root_to_weight`], `None` if the weight
    /// is not in the root lattice.
    pub fn weight_to_root(&self, w: &Weight) -> Option<Root> {
        self.weight_to_root_coords(w)
            .iter()
            .map(|q| rational::as_integer(q).and_then(|x| x.to_i64()))
            .collect::<Option<Vec<_>>>()
            .map(Root)
    }

    /// `(w, γ)` for a weight and a root.
    pub fn pair_weight_root(&self, w: &[i64], root: &[i64]) -> Rational {
        frac(1, self.scale) * big_int(self.pair_weight_root_scaled(w, root))
    }

    /// `scale · (w, γ)` where `scale` clears the denominators of the `d_i`.
    pub(crate) fn pair_weight_root_scaled(&self, w: &[i64], root: &[i64]) -> i128 {
        w.iter()
            .zip(root)
            .zip(&self.scaled_half_norms)
            .map(|((&a, &b), &d)| a as i128 * b as i128 * d as i128)
            .sum()
    }

    /// `(λ, μ)` for two weights.
    pub fn pair_weights(&self, x: &Weight, y: &Weight) -> Rational {
        let mut acc = Rational::zero();
        for (i, &xi) in x.coords().iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.coords().iter().enumerate() {
                if yj != 0 {
                    acc += int(xi * yj) * &self.weight_gram[i][j];
                }
            }
        }
        acc
    }

    /// `(w, ρ∨)`, the eigenvalue of `h/2` for the dominant principal `h`.
    pub fn pair_with_rho_check(&self, w: &Weight) -> Rational {
        w.coords()
            .iter()
            .zip(&self.rho_check)
            .zip(&self.half_norms)
            .map(|((&c, x), d)| int(c) * x * d)
            .sum()
    }
}

fn root_to_weight_coords(cartan: &CartanMatrix, c: &[i64]) -> Vec<i64> {
    let n = cartan.rank();
    (0..n)
        .map(|j| (0..n).map(|i| c[i] * cartan.get(i, j)).sum())
        .collect()
}

fn big_int(x: i128) -> BigInt {
    BigInt::from(x)
}
