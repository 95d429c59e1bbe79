//! Sequence homology from the variety of optimal LCS alignments.
//!
//! Two sequences are compared through their *extremal* optimal alignments,
//! the highest and lowest chains among all longest common subsequence
//! alignments. The gap between them, and where they coincide, separates
//! related sequences from independent ones better than the LCS length alone.

pub mod casestudy;
pub mod error;
pub mod extremal;
pub mod genes;
pub mod genmodel;
pub mod lcs;
pub mod plot;
pub mod scalar;
pub mod seqio;
pub mod stats;
pub mod theory;

pub use casestudy::{run_case_study, CaseStudyTable, CheckLine, ReferenceTable, Verdict};
pub use error::{Error, Result};
pub use extremal::{
    enumerate_optimal_alignments, extremal_pair, oracle_extremal, Alignment, ExtremalPair,
};
pub use genmodel::{
    generate_independent_pair, generate_related_pair, replicate_seed, GenerativeParams, ModelFile,
    ModelTag, PairGenerator, RelatedPair,
};
pub use lcs::{co_optimal_cells, lcs_length, CellBudget, CoOptimalCell, DpTable, LcsTables};
pub use plot::{render_svg, PlotOptions, PlotSpec};
pub use scalar::Scalar;
pub use seqio::{
    embedded_case_study_genes, parse_fasta, validate_sequence, write_fasta, Alphabet,
    NucleotideSequence,
};
pub use stats::{compare, compare_detailed, Comparison, HomologyReport, StepCurve};
pub use theory::{
    binary_entropy, condition_lhs, condition_plugin, estimate_gamma, joint_letter_law,
    scaling_experiment, ConditionReport, GammaEstimate, GammaSource, LetterLawSummary,
    ScalingResult, ScalingRow,
};

pub type GenerativeParamsF64 = GenerativeParams<f64>;
pub type GenerativeParamsF32 = GenerativeParams<f32>;
pub type PairGeneratorF64 = PairGenerator<f64>;
pub type PairGeneratorF32 = PairGenerator<f32>;
pub type LetterLawSummaryF64 = LetterLawSummary<f64>;
pub type LetterLawSummaryF32 = LetterLawSummary<f32>;
pub type ConditionReportF64 = ConditionReport<f64>;
pub type ConditionReportF32 = ConditionReport<f32>;
