//! Full invariant reports, as produced by the command-line front end.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::catalog::{self, BigAction, FamilySpec, MaximalCompat};
use crate::error::{HkgError, ReportError};
use crate::hkg::{
    lower_to_upper, parse_rational, upper_to_lower, CaseReport, FiltrationRun, HasseArfReport, HkgCover,
    JumpSequence, JumpWitnesses, RamificationData, ValidationOptions, ValidationReport,
};
use crate::oracle::{oracle_residue_minima, OracleConfig, ResidueMinima};
use crate::polydiff::{self, CanonicalDegree, Indecomposability, PolyBasis};

/// Gaps are listed only for genus up to this.
pub const GAP_LIST_LIMIT: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub verify: bool,
    pub warn_only: bool,
    pub m_values: Vec<u64>,
    /// `None` means `p, ..., p^{h_0}`.
    pub q_values: Option<Vec<u64>>,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self {
            verify: false,
            warn_only: false,
            m_values: vec![1, 2, 3],
            q_values: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupBlock {
    pub generators: Vec<u64>,
    pub minimal_generators: Vec<u64>,
    pub gap_count: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gaps: Option<Vec<u64>>,
    pub frobenius: i64,
    pub conductor: u64,
    pub symmetric: bool,
    pub telescopic_order: Vec<u64>,
    pub gcd_tower: Vec<u64>,
    pub telescopic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerBlock {
    pub index: usize,
    pub generators: Vec<u64>,
    pub minimal_generators: Vec<u64>,
    pub genus: u64,
    pub conductor: u64,
    pub kernel_order: u64,
    pub quotient_order: u64,
    pub rational: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyBlock {
    pub basis: PolyBasis,
    pub canonical_degree: CanonicalDegree,
    pub indecomposability: Indecomposability,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub input: RamificationData,
    pub validation: ValidationReport,
    pub semigroup: SemigroupBlock,
    pub tower: Vec<TowerBlock>,
    #[serde(with = "crate::serde_num::bigint")]
    pub genus: BigInt,
    #[serde(with = "crate::serde_num::bigint")]
    pub conductor_brauer: BigInt,
    #[serde(with = "crate::serde_num::bigint")]
    pub delta: BigInt,
    pub filtration: Vec<FiltrationRun>,
    pub lower_jumps: JumpSequence,
    pub upper_jumps: JumpSequence,
    pub hasse_arf: HasseArfReport,
    pub structural_case: CaseReport,
    pub possible_jumps: JumpWitnesses,
    pub polydiff: Vec<PolyBlock>,
    pub big_action: BigAction,
    pub maximal_compat: Vec<MaximalCompat>,
    pub p_rank: u64,
    #[serde(with = "crate::serde_num::bigint")]
    pub deformation_dimension: BigInt,
    pub oracle_verified: bool,
}

/// Parses `{"p": .., "exponents": [..], "jumps": [..]}`; `p` must be prime.
pub fn parse_input(text: &str) -> Result<RamificationData, ReportError> {
    let data: RamificationData = serde_json::from_str(text).map_err(|e| ReportError::Parse(e.to_string()))?;
    if !is_prime(data.p()) {
        return Err(ReportError::Parse(format!("p = {} is not prime", data.p())));
    }
    Ok(data)
}

fn build_cover(data: RamificationData, warn_only: bool) -> Result<HkgCover, ReportError> {
    HkgCover::with_options(data, ValidationOptions { warn_only }).map_err(|e| match e {
        HkgError::InvalidData(report) => ReportError::Validation(report),
        other => other.into(),
    })
}

fn poly_block(cover: &HkgCover, m: u64) -> Result<PolyBlock, HkgError> {
    Ok(PolyBlock {
        basis: polydiff::basis_polydifferentials(cover, m)?,
        canonical_degree: polydiff::canonical_degree_check(cover, m)?,
        indecomposability: polydiff::indecomposability(cover, m)?,
    })
}

pub fn run_analyze(text: &str, options: &AnalyzeOptions) -> Result<InvariantReport, ReportError> {
    analyze_data(parse_input(text)?, options)
}

pub fn run_catalog(spec: &FamilySpec, options: &AnalyzeOptions) -> Result<InvariantReport, ReportError> {
    analyze_data(spec.build()?, options)
}

pub fn analyze_data(data: RamificationData, options: &AnalyzeOptions) -> Result<InvariantReport, ReportError> {
    let cover = build_cover(data, options.warn_only)?;
    let h = cover.weierstrass_semigroup();
    let chain = cover.telescopic_chain();
    let semigroup = SemigroupBlock {
        generators: cover.generators().to_vec(),
        minimal_generators: h.minimal_generators(),
        gap_count: h.genus(),
        gaps: (h.genus() <= GAP_LIST_LIMIT).then(|| h.gaps()),
        frobenius: h.frobenius(),
        conductor: h.conductor(),
        symmetric: h.is_symmetric(),
        telescopic_order: chain.ordered_generators().to_vec(),
        gcd_tower: chain.gcd_tower().to_vec(),
        telescopic: chain.is_telescopic(),
    };
    let tower = cover
        .tower()?
        .into_iter()
        .map(|level| TowerBlock {
            index: level.index,
            generators: level.semigroup.generators().to_vec(),
            minimal_generators: level.semigroup.minimal_generators(),
            genus: level.semigroup.genus(),
            conductor: level.semigroup.conductor(),
            kernel_order: level.kernel_order,
            quotient_order: level.quotient_order,
            rational: level.is_rational,
        })
        .collect();
    // degenerate genus only reaches here with warn_only; skip the blocks then
    let polydiff = if cover.genus() >= &BigInt::from(2) {
        options
            .m_values
            .iter()
            .map(|&m| poly_block(&cover, m))
            .collect::<Result<Vec<_>, _>>()?
    } else {
        Vec::new()
    };
    let q_values = options
        .q_values
        .clone()
        .unwrap_or_else(|| catalog::default_q_values(&cover));
    let maximal_compat = q_values
        .iter()
        .map(|&q| catalog::maximal_compat_check(&cover, q))
        .collect::<Result<Vec<_>, _>>()?;

    let mut report = InvariantReport {
        input: cover.data().clone(),
        validation: cover.validation().clone(),
        semigroup,
        tower,
        genus: cover.genus().clone(),
        conductor_brauer: cover.conductor_brauer(),
        delta: cover.different_delta(),
        filtration: cover.ramification_filtration(),
        lower_jumps: cover.lower_jumps(),
        upper_jumps: cover.upper_jumps(),
        hasse_arf: cover.hasse_arf()?,
        structural_case: cover.structural_case(),
        possible_jumps: cover.possible_jumps(),
        polydiff,
        big_action: catalog::big_action_check(&cover),
        maximal_compat,
        p_rank: cover.p_rank()?,
        deformation_dimension: cover.deformation_dimension(),
        oracle_verified: false,
    };
    if options.verify {
        verify_report(&report)?;
        report.oracle_verified = true;
    }
    Ok(report)
}

fn mismatch(field: &str, reported: impl ToString, oracle: impl ToString) -> ReportError {
    ReportError::VerificationMismatch {
        field: field.to_string(),
        reported: reported.to_string(),
        oracle: oracle.to_string(),
    }
}

fn compare<T: PartialEq + std::fmt::Debug>(field: &str, reported: T, oracle: T) -> Result<(), ReportError> {
    if reported == oracle {
        Ok(())
    } else {
        Err(mismatch(field, format!("{reported:?}"), format!("{oracle:?}")))
    }
}

fn oracle_for(gens: &[u64]) -> Result<ResidueMinima, ReportError> {
    Ok(oracle_residue_minima(gens, &OracleConfig::for_generators(gens))?)
}

/// Recomputes every semigroup-derived number in `report` by brute force from
/// the echoed input and fails on the first disagreement.
pub fn verify_report(report: &InvariantReport) -> Result<(), ReportError> {
    let input = &report.input;
    let p = input.p();
    let h = |i: usize| input.exponents().get(i).copied().unwrap_or(0);
    let pow = |e: u32| p.checked_pow(e).ok_or_else(|| mismatch("generators", "u64", "overflow"));

    let mut gens = vec![pow(h(0))?];
    for (i, &b) in input.lower_jumps().iter().enumerate() {
        gens.push(pow(h(i + 1))? * b);
    }
    compare("semigroup.generators", &report.semigroup.generators, &gens)?;

    let oracle = oracle_for(&gens)?;
    let conductor = oracle.conductor();
    compare("semigroup.conductor", report.semigroup.conductor, conductor)?;
    compare("semigroup.frobenius", report.semigroup.frobenius, conductor as i64 - 1)?;
    compare("conductor_brauer", report.conductor_brauer.clone(), BigInt::from(conductor))?;
    let gap_count = oracle.genus();
    compare("semigroup.gap_count", report.semigroup.gap_count, gap_count)?;
    compare("genus", report.genus.clone(), BigInt::from(gap_count))?;
    compare("semigroup.symmetric", report.semigroup.symmetric, oracle.is_symmetric())?;
    compare(
        "semigroup.minimal_generators",
        &report.semigroup.minimal_generators,
        &oracle.minimal_generators(&gens),
    )?;
    if let Some(gaps) = &report.semigroup.gaps {
        compare("semigroup.gaps", gaps, &oracle.gaps())?;
    }

    for block in &report.polydiff {
        let field = format!("polydiff[m={}].dimension", block.basis.m);
        compare(&field, block.basis.dimension, oracle.count_members_up_to(block.basis.bound))?;
        if let Some(poles) = &block.basis.pole_numbers {
            let listed: Vec<u64> = (0..=block.basis.bound).filter(|&x| oracle.is_member(x)).collect();
            compare(&format!("polydiff[m={}].pole_numbers", block.basis.m), poles, &listed)?;
        }
    }

    for level in &report.tower {
        let i = level.index;
        let below = h(i - 1);
        let mut level_gens = vec![pow(h(0) - below)?];
        for j in 1..i {
            level_gens.push(pow(h(j) - below)? * input.lower_jumps()[j - 1]);
        }
        let o = oracle_for(&level_gens)?;
        compare(&format!("tower[{i}].conductor"), level.conductor, o.conductor())?;
        compare(&format!("tower[{i}].genus"), level.genus, o.genus())?;
    }
    Ok(())
}

/// Direction for [`run_jumps`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JumpDirection {
    LowerToUpper,
    UpperToLower,
}

/// Converts jumps given as strings: integers for lower jumps, `"a/b"` for
/// upper jumps.
pub fn run_jumps(
    direction: JumpDirection,
    p: u64,
    exponents: &[u32],
    values: &[String],
) -> Result<JumpSequence, ReportError> {
    if !is_prime(p) {
        return Err(ReportError::Parse(format!("p = {p} is not prime")));
    }
    match direction {
        JumpDirection::LowerToUpper => {
            let lower = values
                .iter()
                .map(|v| v.trim().parse::<u64>().map_err(|_| ReportError::Parse(format!("bad lower jump {v:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(lower_to_upper(p, exponents, &lower)?)
        }
        JumpDirection::UpperToLower => {
            let upper = values
                .iter()
                .map(|v| parse_rational(v).map_err(ReportError::Parse))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(upper_to_lower(p, exponents, &upper)?)
        }
    }
}

/// Polydifferential blocks alone.
pub fn run_basis(
    data: RamificationData,
    m_values: &[u64],
    warn_only: bool,
) -> Result<Vec<PolyBlock>, ReportError> {
    let cover = build_cover(data, warn_only)?;
    Ok(m_values
        .iter()
        .map(|&m| poly_block(&cover, m))
        .collect::<Result<Vec<_>, _>>()?)
}
