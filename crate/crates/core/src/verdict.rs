//! Checker outcomes with exact witnesses and certificates.
//!
//! Element and variable indices inside witnesses are 0-based in memory and
//! serialized 1-based, like every other file format in the crate.

use serde::Serialize;

use crate::convention::TropicalValue;
use crate::kernel::{EigenSignature, Rational, RootCount, UniPoly};
use crate::subset::{one_based, BitSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    PassCertified,
    PassSampled,
    Fail,
}

impl Status {
    pub fn is_pass(self) -> bool {
        !matches!(self, Status::Fail)
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::PassCertified => "PASS_CERTIFIED",
            Status::PassSampled => "PASS_SAMPLED",
            Status::Fail => "FAIL",
        }
    }

    /// Combines statuses: any failure wins, then any sampled pass.
    pub fn combine(self, other: Status) -> Status {
        self.max(other)
    }
}

/// Work performed by a checker.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Effort {
    pub samples: u64,
    pub relations: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    pub effort: Effort,
}

impl Verdict {
    pub fn certified(certificate: Certificate) -> Self {
        Verdict {
            status: Status::PassCertified,
            witness: None,
            certificate: Some(certificate),
            effort: Effort::default(),
        }
    }

    pub fn sampled() -> Self {
        Verdict { status: Status::PassSampled, witness: None, certificate: None, effort: Effort::default() }
    }

    pub fn fail(witness: Witness) -> Self {
        Verdict { status: Status::Fail, witness: Some(witness), certificate: None, effort: Effort::default() }
    }

    pub fn with_relations(mut self, relations: u64) -> Self {
        self.effort.relations = relations;
        self
    }

    pub fn with_samples(mut self, samples: u64) -> Self {
        self.effort.samples = samples;
        self
    }

    pub fn with_certificate(mut self, certificate: Certificate) -> Self {
        self.certificate = Some(certificate);
        self
    }

    pub fn is_pass(&self) -> bool {
        self.status.is_pass()
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Evidence of a failure, exact and re-checkable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A maximal minor below zero.
    NegativeMinor {
        set: BitSet,
        minor: Rational,
    },
    /// `Pr(ij) > Pr(i)·Pr(j)` under the uniform basis measure.
    CorrelatedPair {
        #[serde(serialize_with = "one_based")]
        i: usize,
        #[serde(serialize_with = "one_based")]
        j: usize,
        pr_both: Rational,
        pr_i: Rational,
        pr_j: Rational,
        /// `Pr(ij) − Pr(i)Pr(j)`, strictly positive.
        gap: Rational,
    },
    /// A minor that is not negatively correlated; the inner pair uses the
    /// original element labels.
    CorrelatedMinor {
        deleted: BitSet,
        contracted: BitSet,
        pair: Box<Witness>,
    },
    /// A basis of the necklace positroid missing from the matroid.
    MissingBasis {
        set: BitSet,
    },
    /// Exponent vectors of different total degree.
    DegreeMismatch {
        alpha: Vec<u32>,
        beta: Vec<u32>,
    },
    /// M-convex set exchange failure for `(α, β, i)`.
    SetExchange {
        alpha: Vec<u32>,
        beta: Vec<u32>,
        #[serde(serialize_with = "one_based")]
        i: usize,
    },
    /// M-convex function exchange failure, values in min-plus orientation.
    /// `best` is the smallest admissible right-hand side (`None` if every
    /// exchange leaves the domain).
    FunctionExchange {
        alpha: Vec<u32>,
        beta: Vec<u32>,
        #[serde(serialize_with = "one_based")]
        i: usize,
        lhs: Rational,
        best: Option<Rational>,
    },
    NegativeCoefficient {
        exponent: Vec<u32>,
        coeff: Rational,
    },
    NotHomogeneous {
        exponent: Vec<u32>,
        other: Vec<u32>,
    },
    /// Hessian of `∂^α f` with two or more positive eigenvalues.
    HessianSignature {
        alpha: Vec<u32>,
        signature: EigenSignature,
    },
    /// `c·∂^{α+i}f·∂^{α+j}f − ∂^α f·∂^{α+i+j}f < 0` at `point`.
    RayleighPoint {
        #[serde(serialize_with = "one_based")]
        i: usize,
        #[serde(serialize_with = "one_based")]
        j: usize,
        alpha: Vec<u32>,
        c: Rational,
        point: Vec<Rational>,
        delta: Rational,
    },
    /// `t ↦ f(base + t·direction)` has a non-real root.
    Line {
        base: Vec<Rational>,
        direction: Vec<Rational>,
        restriction: UniPoly,
        roots: RootCount,
    },
    /// `t ↦ f(base + t·direction)` has degree below `deg f` although
    /// `direction > 0`, so the top-degree part of `f` vanishes there.
    DegreeDrop {
        base: Vec<Rational>,
        direction: Vec<Rational>,
        restriction: UniPoly,
    },
    /// `t ↦ h(t·e − x)` has a non-real root, or (cone mode) a negative root.
    HyperbolicPoint {
        point: Vec<Rational>,
        restriction: UniPoly,
        roots: RootCount,
        #[serde(skip_serializing_if = "Option::is_none")]
        negative_roots: Option<usize>,
    },
    /// Three-term tropical relation on `S ∪ {a,b,c,d}`; products are
    /// `(Sab+Scd, Sac+Sbd, Sad+Sbc)` in the input's convention.
    TropicalRelation {
        set: BitSet,
        #[serde(serialize_with = "one_based")]
        a: usize,
        #[serde(serialize_with = "one_based")]
        b: usize,
        #[serde(serialize_with = "one_based")]
        c: usize,
        #[serde(serialize_with = "one_based")]
        d: usize,
        products: [TropicalValue; 3],
    },
    /// Incidence relation between constituents `index` and `index + 1` of a
    /// flag, with the terms `μ_index(S∪j) + μ_{index+1}(T∖j)`.
    Incidence {
        #[serde(serialize_with = "one_based")]
        index: usize,
        s: BitSet,
        t: BitSet,
        terms: Vec<IncidenceTerm>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncidenceTerm {
    #[serde(serialize_with = "one_based")]
    pub j: usize,
    pub value: TropicalValue,
}

/// Why a pass is a certified pass.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    AllMinorsNonnegative,
    /// Every pair checked exactly.
    AllPairs,
    /// Every minor of the matroid checked exactly.
    AllMinors {
        minors: u64,
    },
    NecklaceRoundTrip,
    /// Exhaustive exchange check; `symmetric_agrees` reports whether the
    /// stronger symmetric variant gives the same answer, when it was run.
    Exchange {
        #[serde(skip_serializing_if = "Option::is_none")]
        symmetric_agrees: Option<bool>,
    },
    /// Exhaustive local (`|α−β|₁ = 4`) exchange check.
    LocalExchange,
    /// Nonnegative coefficients, homogeneous, M-convex support and the
    /// listed number of Hessians with at most one positive eigenvalue.
    Lorentzian {
        degree: usize,
        hessians: u64,
    },
    /// Every Rayleigh difference has nonnegative coefficients.
    CoefficientwiseNonnegative,
    /// Every Rayleigh difference is a nonnegative sum of even-power monomials.
    EvenSquares,
    TropicalRelations,
    PositiveRelations,
    IncidenceRelations,
}
