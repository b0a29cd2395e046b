//! Criterion benchmarks for the counting and encoding paths; see `benches/`.
