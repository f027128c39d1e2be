"""
Quality Tests for CodedSTS

Full-size Monte Carlo acceptance runs: detection statistics over 10^6 cells,
2000-trial SIR sweeps for n_rx in {1, 2, 4}, and decoding guarantees of GF(631).

Run: pytest quality_tests/ -v -s -m quality --no-cov
Execution time: several minutes
"""
