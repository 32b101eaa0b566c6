//! Benchmarks for the linecfg crate live under `benches/`.
