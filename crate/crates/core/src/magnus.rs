//! Series solution of the kinematic reconstruction equation `Ċ = V^ C`.
//!
//! Writing `X(t) = Σ tⁱ/i! Xᵢ` with `X₀ = 0`, the coefficients follow from the
//! initial twist jet through
//!
//! ```text
//! X_k = V₀^(k-1) - (k-1)! Σ_{j=1}^{k-1} 1/(j-1)! Σ_{l=1}^{k-j} 1/(l+1)!
//!                                  Σ_{π ∈ Π(k-j, l)} ad_{Y_π₁} ⋯ ad_{Y_π_l} X_j
//! ```
//!
//! with `Yᵢ = Xᵢ / i!` and `Π(n, l)` the compositions of `n` into `l` parts.
//! Parts are strictly positive: any term with a zero part contains `ad_{X₀} = 0`.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::lie::{bracket, ScrewVector};

/// Largest order supported by [`magnus_coefficients`].
pub const MAX_ORDER: usize = 12;

/// A twist and its time derivatives at a single instant; entry `i` is `dⁱV/dtⁱ`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct TwistJet {
    derivatives: Vec<ScrewVector>,
}

impl TwistJet {
    pub fn new(derivatives: Vec<ScrewVector>) -> Self {
        Self { derivatives }
    }

    /// A jet holding no derivatives; only valid for first-order interpolation.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn derivatives(&self) -> &[ScrewVector] {
        &self.derivatives
    }

    pub fn order(&self) -> usize {
        self.derivatives.len()
    }

    pub fn get(&self, i: usize) -> Option<&ScrewVector> {
        self.derivatives.get(i)
    }

    fn require(&self, needed: usize) -> Result<()> {
        if self.derivatives.len() < needed {
            return Err(Error::InsufficientJet {
                needed,
                got: self.derivatives.len(),
            });
        }
        Ok(())
    }
}

impl From<Vec<ScrewVector>> for TwistJet {
    fn from(derivatives: Vec<ScrewVector>) -> Self {
        Self::new(derivatives)
    }
}

/// Coefficients `X₁..X_k` of the truncated series; `X₀ = 0` is implicit.
#[derive(Clone, Debug, PartialEq)]
pub struct MagnusCoefficients {
    coefficients: Vec<ScrewVector>,
}

impl MagnusCoefficients {
    /// Entry `i` holds `X_{i+1}`.
    pub fn coefficients(&self) -> &[ScrewVector] {
        &self.coefficients
    }

    pub fn horizon(&self) -> usize {
        self.coefficients.len()
    }

    /// `X_i` for `i ≥ 1`; `X_0` is zero.
    pub fn coefficient(&self, i: usize) -> ScrewVector {
        if i == 0 {
            ScrewVector::zero()
        } else {
            self.coefficients[i - 1]
        }
    }
}

/// Ordered tuple of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

/// All compositions of `k` into `l` positive parts, in lexicographic order.
pub fn compositions(k: usize, l: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    if l == 0 || l > k {
        return out;
    }
    let mut current = Vec::with_capacity(l);
    fill_compositions(k, l, &mut current, &mut out);
    out
}

fn fill_compositions(remaining: usize, slots: usize, current: &mut Vec<usize>, out: &mut Vec<Composition>) {
    if slots == 1 {
        current.push(remaining);
        out.push(Composition(current.clone()));
        current.pop();
        return;
    }
    // leave at least one unit for each remaining slot
    for first in 1..=remaining - (slots - 1) {
        current.push(first);
        fill_compositions(remaining - first, slots - 1, current, out);
        current.pop();
    }
}

/// `table[n][l]` = compositions of `n` into `l` parts, for `n < MAX_ORDER`.
fn composition_table() -> &'static Vec<Vec<Vec<Composition>>> {
    static TABLE: OnceLock<Vec<Vec<Vec<Composition>>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (0..MAX_ORDER)
            .map(|n| (0..=n).map(|l| compositions(n, l)).collect())
            .collect()
    })
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

/// Runs the coefficient recursion up to order `k`.
pub fn magnus_coefficients(jet: &TwistJet, k: usize) -> Result<MagnusCoefficients> {
    if k == 0 {
        return Err(Error::InvalidArgument("series order must be at least 1".into()));
    }
    if k > MAX_ORDER {
        return Err(Error::OrderTooHigh(k));
    }
    jet.require(k)?;
    let table = composition_table();

    let mut x: Vec<ScrewVector> = Vec::with_capacity(k + 1);
    let mut y: Vec<ScrewVector> = Vec::with_capacity(k + 1);
    x.push(ScrewVector::zero());
    y.push(ScrewVector::zero());

    for m in 1..=k {
        let mut correction = ScrewVector::zero();
        for j in 1..m {
            let n = m - j;
            let mut inner = ScrewVector::zero();
            for l in 1..=n {
                let mut partial = ScrewVector::zero();
                for pi in &table[n][l] {
                    // ad_{Y_π₁} ⋯ ad_{Y_π_l} X_j, innermost first
                    let term = pi
                        .parts()
                        .iter()
                        .rev()
                        .fold(x[j], |acc, &p| bracket(&y[p], &acc));
                    partial += term;
                }
                inner += partial / factorial(l + 1);
            }
            correction += inner / factorial(j - 1);
        }
        let xm = jet.derivatives[m - 1] - correction * factorial(m - 1);
        y.push(xm / factorial(m));
        x.push(xm);
    }
    x.remove(0);
    Ok(MagnusCoefficients { coefficients: x })
}

/// Evaluates `Σ_{i=1}^{k} tⁱ/i! Xᵢ` by Horner's rule.
pub fn eval_series(coeffs: &MagnusCoefficients, t: f64) -> ScrewVector {
    let k = coeffs.horizon();
    let mut acc = ScrewVector::zero();
    for i in (1..=k).rev() {
        acc = acc * t + coeffs.coefficient(i) / factorial(i);
    }
    acc * t
}

/// Third-order closed form:
/// `tV₀ + ½t²V̇₀ + ⅙t³V̈₀ - (1/12)t³[V₀, V̇₀]`.
pub fn x3_closed(jet: &TwistJet, t: f64) -> Result<ScrewVector> {
    jet.require(3)?;
    let d = jet.derivatives();
    let (t2, t3) = (t * t, t * t * t);
    Ok(d[0] * t + d[1] * (0.5 * t2) + d[2] * (t3 / 6.0) - bracket(&d[0], &d[1]) * (t3 / 12.0))
}

/// Fourth-order closed form: [`x3_closed`] plus
/// `(1/24)t⁴V⃛₀ - (1/24)t⁴[V₀, V̈₀]`.
pub fn x4_closed(jet: &TwistJet, t: f64) -> Result<ScrewVector> {
    jet.require(4)?;
    let d = jet.derivatives();
    let t4 = t * t * t * t;
    Ok(x3_closed(jet, t)? + d[3] * (t4 / 24.0) - bracket(&d[0], &d[2]) * (t4 / 24.0))
}
