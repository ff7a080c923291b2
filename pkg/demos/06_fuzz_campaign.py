"""
Seeded fuzz campaigns
=====================

Draw class members from a seeded stream and check, per sample: the engine
coloring is proper and within the bound, the exact chromatic number is
within the bound, clique-number-2 samples are 4-colorable, and every
sample containing a 4-cycle yields a goodness certificate.  The report
also tracks how often the engine had to fall back to the exact solver.
"""

from chibind import SamplerConfig, fuzz_bound

cfg = SamplerConfig(n=12, edge_prob=0.45, seed=2024, mode="repair")
report = fuzz_bound(cfg, 60)
for line in report.render():
    print(line)
print("campaign passed:", report.passed)
