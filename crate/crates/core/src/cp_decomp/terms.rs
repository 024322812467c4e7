use crate::error::{Error, Result};
use crate::matrix_core::rational::{one, Rational, RationalJson};
use crate::matrix_core::{IndexSet, SymMatrix};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// One weighted rank-one term `λ·vvᵀ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CpTerm {
    pub vector: Vec<Rational>,
    pub weight: Rational,
}

impl CpTerm {
    pub fn new(vector: Vec<Rational>, weight: Rational) -> Self {
        CpTerm { vector, weight }
    }

    pub fn unit(vector: Vec<Rational>) -> Self {
        CpTerm { vector, weight: one() }
    }

    pub fn support(&self) -> IndexSet {
        let pos: Vec<usize> = (0..self.vector.len()).filter(|&i| !self.vector[i].is_zero()).collect();
        IndexSet::from_positions(self.vector.len(), &pos)
    }

    fn validate(&self, n: usize, idx: usize) -> Result<()> {
        if self.vector.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: self.vector.len() });
        }
        if self.vector.iter().any(Signed::is_negative) {
            return Err(Error::PreconditionViolated(format!("term {idx} has a negative entry")));
        }
        if self.vector.iter().all(Zero::is_zero) {
            return Err(Error::PreconditionViolated(format!("term {idx} is the zero vector")));
        }
        if !self.weight.is_positive() {
            return Err(Error::PreconditionViolated(format!("term {idx} has a non-positive weight")));
        }
        Ok(())
    }
}

/// `A = Σ λ_i v_i v_iᵀ` with `v_i ≥ 0`, `v_i ≠ 0`, `λ_i > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedCpDecomposition {
    pub n: usize,
    pub terms: Vec<CpTerm>,
}

impl WeightedCpDecomposition {
    pub fn new(n: usize, terms: Vec<CpTerm>) -> Result<Self> {
        for (i, t) in terms.iter().enumerate() {
            t.validate(n, i)?;
        }
        Ok(WeightedCpDecomposition { n, terms })
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn realize(&self) -> SymMatrix {
        SymMatrix::from_outer_products(self.n, self.terms.iter().map(|t| (t.vector.as_slice(), &t.weight)))
    }

    pub fn supports(&self) -> Vec<IndexSet> {
        self.terms.iter().map(CpTerm::support).collect()
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    vector: Vec<RationalJson>,
    weight: RationalJson,
}

#[derive(Serialize, Deserialize)]
struct DecompJson {
    n: usize,
    terms: Vec<TermJson>,
}

impl Serialize for WeightedCpDecomposition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DecompJson {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|t| TermJson {
                    vector: t.vector.iter().cloned().map(RationalJson).collect(),
                    weight: RationalJson(t.weight.clone()),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightedCpDecomposition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = DecompJson::deserialize(d)?;
        let terms = raw
            .terms
            .into_iter()
            .map(|t| CpTerm::new(t.vector.into_iter().map(|r| r.0).collect(), t.weight.0))
            .collect();
        WeightedCpDecomposition::new(raw.n, terms).map_err(serde::de::Error::custom)
    }
}

/// Rotates a pair of terms with nested supports.
///
/// With `r₀ = min_{i ∈ supp b} d_i/b_i` and `ρ = λ_d/λ_b`, returns
/// `b̃ = d − r₀b` with weight `λ_d/(1+ρr₀²)` and `d̃ = b + ρr₀d` with weight
/// `λ_b/(1+ρr₀²)`. This is the rotation of `(√λ_b·b, √λ_d·d)` by the angle
/// whose tangent is `√ρ·r₀`, written so every quantity stays rational.
/// `b̃` is `None` when it vanishes.
pub fn pairmove(b: &CpTerm, d: &CpTerm) -> Result<(Option<CpTerm>, CpTerm)> {
    let n = b.vector.len();
    if d.vector.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: d.vector.len() });
    }
    let (sb, sd) = (b.support(), d.support());
    if sb.is_empty() || !sb.is_subset(&sd) {
        return Err(Error::SupportNotNested);
    }
    if !b.weight.is_positive() || !d.weight.is_positive() {
        return Err(Error::PreconditionViolated("weights must be positive".into()));
    }
    let r0 = sb.iter().map(|i| &d.vector[i] / &b.vector[i]).min().expect("nonempty support");
    let rho = &d.weight / &b.weight;
    let scale = one() + &rho * &r0 * &r0;
    let bt: Vec<Rational> = d.vector.iter().zip(&b.vector).map(|(di, bi)| di - &r0 * bi).collect();
    let coeff = &rho * &r0;
    let dt: Vec<Rational> = b.vector.iter().zip(&d.vector).map(|(bi, di)| bi + &coeff * di).collect();
    let bt_term = (!bt.iter().all(Zero::is_zero)).then(|| CpTerm::new(bt, &d.weight / &scale));
    Ok((bt_term, CpTerm::new(dt, &b.weight / &scale)))
}

/// Rewrites a decomposition until all supports are pairwise distinct.
///
/// Repeatedly applies [`pairmove`] to two terms sharing a support of largest
/// size. Each step keeps one term on that support and moves the other to a
/// strictly smaller one (or drops it), so the process terminates.
pub fn distinct_supports(decomp: &WeightedCpDecomposition) -> WeightedCpDecomposition {
    let mut terms = decomp.terms.clone();
    loop {
        let supports: Vec<IndexSet> = terms.iter().map(CpTerm::support).collect();
        let mut pair: Option<(usize, usize)> = None;
        for i in 0..terms.len() {
            for j in (i + 1)..terms.len() {
                if supports[i] == supports[j] && pair.map_or(true, |(p, _)| supports[p].len() < supports[i].len()) {
                    pair = Some((i, j));
                }
            }
        }
        let Some((i, j)) = pair else { break };
        let (bt, dt) = pairmove(&terms[i], &terms[j]).expect("equal supports are nested");
        terms[j] = dt;
        match bt {
            Some(t) => terms[i] = t,
            None => {
                terms.remove(i);
            }
        }
    }
    WeightedCpDecomposition { n: decomp.n, terms }
}
