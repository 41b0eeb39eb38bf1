"""Bulk verification suites: oracle agreement, mutation consistency, Plücker.

Each function returns a JSON-friendly report dictionary with a
``violations`` list; an empty list means the property holds on the swept
range.  The CLI ``verify`` subcommands and the acceptance tests are thin
wrappers around these.
"""

from __future__ import annotations

import random

from .builder import (
    classical_plucker_eval,
    exchange_quad,
    explore_exchange_graph,
    initial_seed,
    relabel_after_exchange,
)
from .qmatrix import QuantumMatrixAlgebra
from .rankone import lambda_pair
from .seeds import QuantumSeed, check_compatible, mutate_seed
from .subsets import as_subset


_algebras: dict[tuple[int, int], QuantumMatrixAlgebra] = {}


def algebra(m: int, n: int) -> QuantumMatrixAlgebra:
    """Shared algebra instances so straightening caches persist."""
    key = (m, n)
    if key not in _algebras:
        _algebras[key] = QuantumMatrixAlgebra(m, n)
    return _algebras[key]


def verify_lz(m: int, n: int) -> dict:
    """Oracle quasi-commutation against c(I, J) and the kappa difference."""
    report = algebra(m, n).verify_lz()
    report.update({"m": m, "n": n})
    return report


def _lambda_matrix(labels, n: int):
    N = len(labels)
    return tuple(
        tuple(lambda_pair(labels[i], labels[j], n) for j in range(N))
        for i in range(N)
    )


def _geometric_moves(seed: QuantumSeed) -> list[int]:
    return [
        k
        for k in range(seed.n_mutable)
        if relabel_after_exchange(seed.labels, seed.B, k) is not None
    ]


def verify_mutation_consistency(
    m: int, n: int, paths: int = 100, depth: int = 6, rng: random.Random | None = None
) -> dict:
    """Random geometric-exchange paths; after each step the engine's L must
    equal both the c-matrix of the new labels and the kappa-difference
    matrix, and (B, L) must stay compatible with d = 2."""
    from .builder import L_from_labels

    rng = rng or random.Random(2024)
    violations = []
    steps = 0
    for p in range(paths):
        seed = initial_seed(m, n)
        for _ in range(depth):
            moves = _geometric_moves(seed)
            if not moves:
                break
            k = rng.choice(moves)
            seed = mutate_seed(seed, k)
            steps += 1
            d = check_compatible(seed.B, seed.L)
            if any(x != 2 for x in d):
                violations.append({"path": p, "history": list(seed.history), "d": list(d)})
            from_labels = L_from_labels(seed.labels)
            from_kappa = _lambda_matrix(seed.labels, n)
            if seed.L != from_labels:
                violations.append(
                    {"path": p, "history": list(seed.history), "mismatch": "L vs c-matrix"}
                )
            if seed.L != from_kappa:
                violations.append(
                    {"path": p, "history": list(seed.history), "mismatch": "L vs kappa-matrix"}
                )
    return {"m": m, "n": n, "paths": paths, "steps": steps, "violations": violations}


def random_matrix_with_nonzero_minors(
    m: int, n: int, labels, rng: random.Random, bound: int = 9
) -> list[list[int]]:
    """Random integer matrix whose minors at all given labels are nonzero."""
    labels = [as_subset(l) for l in labels]
    while True:
        mat = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(m)]
        if all(classical_plucker_eval(mat, l) != 0 for l in labels):
            return mat


def _geometric_events(m: int, n: int, depth: int):
    """All geometric exchanges (seed, k) reachable within the given depth."""
    from collections import deque

    root = initial_seed(m, n)
    seen = {frozenset(root.labels)}
    queue = deque([(root, 0)])
    while queue:
        seed, d = queue.popleft()
        if d >= depth:
            continue
        for k in _geometric_moves(seed):
            child = mutate_seed(seed, k)
            yield seed, k, child
            key = frozenset(child.labels)
            if key not in seen:
                seen.add(key)
                queue.append((child, d + 1))


def verify_plucker(
    m: int,
    n: int,
    depth: int = 3,
    matrices: int = 3,
    rng: random.Random | None = None,
) -> dict:
    """Every geometric exchange within the given depth satisfies the short
    quantum Plücker relation (by normal form in the quantum matrix algebra)
    and specialises at q = 1 to the expected classical minor."""
    rng = rng or random.Random(99)
    alg = algebra(m, n)
    initial_labels = initial_seed(m, n).labels
    violations = []
    events = 0
    checked_quads = set()
    for seed, k, child in _geometric_events(m, n, depth):
        events += 1
        new_label = child.labels[k]
        quad = exchange_quad(seed.labels, seed.B, k)
        J, (a, b, c, d) = quad
        if (J, a, b, c, d) not in checked_quads:
            checked_quads.add((J, a, b, c, d))
            if not alg.verify_short_plucker(J, a, b, c, d):
                violations.append(
                    {"J": list(J), "quad": [a, b, c, d], "mismatch": "quantum Plücker"}
                )
        for _ in range(matrices):
            mat = random_matrix_with_nonzero_minors(m, n, initial_labels, rng)
            values = [classical_plucker_eval(mat, l) for l in initial_labels]
            got = child.vars[k].evaluate_classical(values)
            want = classical_plucker_eval(mat, new_label)
            if got != want:
                violations.append(
                    {
                        "history": list(child.history),
                        "label": list(new_label),
                        "mismatch": f"classical value {got} != minor {want}",
                    }
                )
    return {
        "m": m,
        "n": n,
        "depth": depth,
        "exchanges": events,
        "plucker_instances": len(checked_quads),
        "violations": violations,
    }


def verify_laurent_involution(
    m: int,
    n: int,
    paths: int = 50,
    depth: int = 8,
    rng: random.Random | None = None,
) -> dict:
    """Random unrestricted mutation paths: every stored variable must stay
    integer Laurent, and immediately re-mutating must restore the previous
    seed exactly (labels, B, L and variables)."""
    rng = rng or random.Random(7)
    violations = []
    steps = 0
    for p in range(paths):
        seed = initial_seed(m, n)
        for _ in range(depth):
            k = rng.randrange(seed.n_mutable)
            child = mutate_seed(seed, k)
            steps += 1
            for pos, var in enumerate(child.vars):
                if not var.is_integer_laurent():
                    violations.append(
                        {"path": p, "history": list(child.history), "position": pos,
                         "mismatch": "non-Laurent coefficient"}
                    )
            back = mutate_seed(child, k)
            if back != seed:
                violations.append(
                    {"path": p, "history": list(child.history), "mismatch": "involution"}
                )
            seed = child
    return {"m": m, "n": n, "paths": paths, "steps": steps, "violations": violations}


def verify_finite_type_counts(expected=None) -> dict:
    """Exhaustive exploration counts for the finite-type Grassmannians."""
    expected = expected or {(2, 5): (5, 5), (2, 6): (14, 9), (2, 7): (42, 14)}
    violations = []
    results = {}
    for (m, n), (want_seeds, want_labels) in expected.items():
        summary = explore_exchange_graph(m, n, geometric_only=True)
        results[f"Gr({m},{n})"] = {
            "seeds": summary.seeds,
            "labels": len(summary.labels),
            "truncated": summary.truncated,
        }
        if summary.seeds != want_seeds or len(summary.labels) != want_labels:
            violations.append(
                {"m": m, "n": n, "got": (summary.seeds, len(summary.labels)),
                 "want": (want_seeds, want_labels)}
            )
    return {"results": results, "violations": violations}
