//! Parallel drivers that reproduce the serial core results exactly.

use brui_core::econ::{
    impulse_response, replicate, summarize, BootstrapSpec, ImpulseResponses, IrfResult, Matrix, VarModel,
};
use brui_core::indexer::{analyze_report, assemble_indices};
use brui_core::{IndexSeries, Lexicon, Report};
use rayon::prelude::*;

/// Same output as `brui_core::build_indices`, scanning reports in parallel.
pub fn build_indices(
    corpus: &[Report],
    lexicon: &Lexicon,
    radius: usize,
) -> brui_core::Result<(IndexSeries, IndexSeries)> {
    if radius == 0 {
        return Err(brui_core::Error::InvalidArgument(
            "radius must be at least 1".into(),
        ));
    }
    let counts = corpus
        .par_iter()
        .map(|r| analyze_report(r, lexicon, radius).counts)
        .collect();
    assemble_indices(counts)
}

/// Same output as `brui_core::econ::bootstrap_irf`; replications run in
/// parallel and are merged by replication index.
pub fn bootstrap_irf(model: &VarModel, data: &Matrix, spec: &BootstrapSpec) -> brui_core::Result<IrfResult> {
    spec.validate()?;
    let point = impulse_response(model, spec.horizon)?;
    let draws: Vec<Option<ImpulseResponses>> = (0..spec.reps as u64)
        .into_par_iter()
        .map(|rep| replicate(model, data, spec, rep).ok())
        .collect();
    if draws.iter().all(Option::is_none) {
        // surface input errors rather than a generic failure count
        replicate(model, data, spec, 0)?;
    }
    summarize(point, &draws, spec)
}
