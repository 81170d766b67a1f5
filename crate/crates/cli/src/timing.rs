//! Per-stage wall-clock timing for the summarization pipeline.

use std::time::Duration;

/// Stage timings for one document. The total is measured around the
/// whole per-document pipeline, so each component is bounded by it.
#[derive(Debug, Clone)]
pub struct TimingRecord {
    pub doc_id: String,
    pub filter: Duration,
    pub normalize: Duration,
    pub vectorize: Duration,
    pub summarize: Duration,
    pub total: Duration,
}

impl TimingRecord {
    pub const CSV_HEADER: &'static str =
        "doc_id,filter_ms,normalize_ms,vectorize_ms,summarize_ms,total_ms";

    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{:.4},{:.4},{:.4},{:.4},{:.4}",
            self.doc_id,
            ms(self.filter),
            ms(self.normalize),
            ms(self.vectorize),
            ms(self.summarize),
            ms(self.total),
        )
    }
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}
