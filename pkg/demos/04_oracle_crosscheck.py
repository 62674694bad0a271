# %% [markdown]
# # Cross-checking against plain adjacency matrices
#
# Run a random transformation script through the Fock engine and through the
# classical matrix oracle side by side, comparing after every step.

# %%
import random

from fockgraph import Mode, Orientation, from_adjacency
from fockgraph.cli import apply_command
from fockgraph.errors import FockGraphError
from fockgraph.oracle import OracleGraph, equivalent, oracle_step
from fockgraph.script import parse_script

SCRIPT = """
ADDV 5
ADDE 5 2 2
ADDE 5 3 1
DELE 1 3 1
CONTRACT 1 5
DELE 2 3 1   # no such edge: both sides must refuse
DELV 4
"""

PAW = [[0, 1, 1, 1], [1, 0, 0, 0], [1, 0, 0, 1], [1, 0, 1, 0]]
g = from_adjacency(PAW, Mode.BOSONIC, Orientation.UNDIRECTED)
o = OracleGraph.from_matrix(PAW, simple=False, directed=False)

for cmd in parse_script(SCRIPT):
    results = []
    for side in ("fock", "oracle"):
        try:
            if side == "fock":
                g = apply_command(g, cmd)[0]
            else:
                o = oracle_step(o, cmd)
            results.append("ok")
        except FockGraphError as exc:
            results.append(exc.category)
    print(f"{str(cmd):16s} fock={results[0]:20s} oracle={results[1]:20s} equivalent={equivalent(o, g)}")

print(g)

# %% The same comparison on random scripts over a random multigraph
rng = random.Random(3)
g = from_adjacency([[0, 2, 0], [2, 0, 1], [0, 1, 0]], Mode.BOSONIC, Orientation.UNDIRECTED)
o = OracleGraph.from_matrix([[0, 2, 0], [2, 0, 1], [0, 1, 0]], simple=False, directed=False)
agree = 0
for step in range(500):
    labels = list(o.labels) or ["1"]
    verb = rng.choice(["ADDE", "DELE", "DELE", "CONTRACT", "ADDV"])
    if verb == "ADDV":
        line = f"ADDV n{step}"
    elif verb == "CONTRACT":
        line = f"CONTRACT {rng.choice(labels)} {rng.choice(labels)}"
    else:
        line = f"{verb} {rng.choice(labels)} {rng.choice(labels)} {rng.randint(1, 2)}"
    [cmd] = parse_script(line)
    outcome = []
    for run in (lambda: apply_command(g, cmd)[0], lambda: oracle_step(o, cmd)):
        try:
            outcome.append(run())
        except FockGraphError as exc:
            outcome.append(exc.category)
    if isinstance(outcome[0], str) or isinstance(outcome[1], str):
        agree += outcome[0] == outcome[1]
    else:
        g, o = outcome
        agree += equivalent(o, g)
print(f"{agree}/500 steps agree; final |V| = {g.n_vertices}")
