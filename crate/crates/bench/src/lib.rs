//! Criterion benchmarks for the exact-arithmetic hot paths; see `benches/`.
