//! Criterion benchmarks for `lie-index-core`; see `benches/`.
