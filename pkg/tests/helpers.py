"""Random graphs and command sequences shared by the randomized suites."""

import random

import numpy as np

from fockgraph.fock import Mode
from fockgraph.graph import Orientation, from_adjacency
from fockgraph.oracle import OracleGraph
from fockgraph.script import Command

PAW = [[0, 1, 1, 1], [1, 0, 0, 0], [1, 0, 0, 1], [1, 0, 1, 0]]

COMBOS = [(mode, orient) for mode in Mode for orient in Orientation]


def random_matrix(rng, n, mode, orientation, max_mult=3):
    top = 1 if mode is Mode.FERMIONIC else max_mult
    m = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if orientation is Orientation.UNDIRECTED and j < i:
                m[i, j] = m[j, i]
            else:
                m[i, j] = rng.randint(0, top) if rng.random() < 0.6 else 0
    return m


def random_pair(rng, mode, orientation, max_vertices=8):
    n = rng.randint(0, max_vertices)
    m = random_matrix(rng, n, mode, orientation)
    labels = [f"v{i}" for i in range(n)]
    g = from_adjacency(m, mode, orientation, labels)
    o = OracleGraph.from_matrix(
        m, mode is Mode.FERMIONIC, orientation is Orientation.DIRECTED, labels
    )
    return g, o


def random_command(rng, labels, fresh, max_vertices=8):
    """A command over ``labels``; sometimes deliberately invalid."""
    def pick():
        if not labels or rng.random() < 0.05:
            return "ghost"
        return rng.choice(labels)

    verbs = ["ADDE"] * 4 + ["DELE"] * 4 + ["DELV", "CONTRACT", "CONTRACT", "MATRIX"]
    if len(labels) < max_vertices or rng.random() < 0.1:
        verbs += ["ADDV", "ADDV"]
    verb = rng.choice(verbs)
    if verb == "ADDV":
        lab = rng.choice(labels) if labels and rng.random() < 0.15 else fresh
        return Command("ADDV", (lab,))
    if verb == "DELV":
        return Command("DELV", (pick(),))
    if verb in ("ADDE", "DELE"):
        u = pick()
        v = u if rng.random() < 0.05 else pick()
        return Command(verb, (u, v, rng.randint(1, 3)))
    if verb == "CONTRACT":
        u = pick()
        v = u if rng.random() < 0.05 else pick()
        return Command("CONTRACT", (u, v))
    return Command(verb)


def random_sequence(rng, labels_fn, length):
    """Yield ``length`` commands; ``labels_fn()`` gives the current labels."""
    for k in range(length):
        yield random_command(rng, list(labels_fn()), f"n{k}")
