"""Exploring exchange graphs: finite type counts and resource bounds.

Gr(2,n) is finite type; exhaustive geometric exploration visits exactly
the Catalan number of clusters.  Larger Grassmannians are infinite type,
so exploration is always bounded.
"""

import time

from qgrass import explore_exchange_graph

for m, n in [(2, 5), (2, 6), (2, 7)]:
    t0 = time.time()
    summary = explore_exchange_graph(m, n, geometric_only=True)
    print(
        f"Gr({m},{n}): {summary.seeds} clusters, "
        f"{len(summary.labels)} non-frozen minor labels, "
        f"depth {summary.depth}  ({time.time() - t0:.2f}s)"
    )

# Gr(3,6) is still finite type but has non-minor cluster variables, so the
# geometric-only walk covers just the minor part of the exchange graph
summary = explore_exchange_graph(3, 6, geometric_only=True)
print(f"\nGr(3,6) geometric-only: {summary.seeds} clusters of minors, "
      f"{len(summary.labels)} labels")

# unrestricted mutation leaves the minor locus; seeds with non-minor
# variables are deduplicated by expansion fingerprints, and we bound work
summary = explore_exchange_graph(3, 6, geometric_only=False, max_seeds=25)
print(f"Gr(3,6) unrestricted, capped at 25 seeds: "
      f"{summary.seeds} seeds, truncated = {summary.truncated}")
