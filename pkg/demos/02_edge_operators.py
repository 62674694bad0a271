# %% [markdown]
# # Adding and removing edges
#
# The normalized edge operators change occupations and leave amplitudes at 1.
# In an undirected graph both rows holding the edge are updated.

# %%
from fockgraph import Mode, Orientation, add_edges, delete_edges, from_adjacency, to_adjacency
from fockgraph.edges import de_raw

PAW = [[0, 1, 1, 1], [1, 0, 0, 0], [1, 0, 0, 1], [1, 0, 1, 0]]
g = from_adjacency(PAW, Mode.FERMIONIC, Orientation.UNDIRECTED)
print(g)

# %% Remove edge 1-2, add edge 2-3
h = add_edges(delete_edges(g, g.index("1"), g.index("2"), 1), g.index("2"), g.index("3"), 1)
print(h)
print(to_adjacency(h))

# %% A multigraph: remove two of three parallel edges.
m = from_adjacency([[0, 3], [3, 0]], Mode.BOSONIC, Orientation.UNDIRECTED, ["a", "b"])
raw, factor = de_raw(m.rows[0], 1, 2)
print("raw a^2 on row a:", raw, " prefactor^2 =", factor)
print(delete_edges(m, 0, 1, 2))

# %% Simple graphs refuse a second parallel edge
try:
    add_edges(g, 0, 1, 1)
except Exception as exc:
    print(type(exc).__name__, "-", exc)
