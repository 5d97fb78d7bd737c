//! Criterion benchmarks for `kdyck-core` live under `benches/`.
