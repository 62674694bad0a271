# %% [markdown]
# # Deleting and contracting vertices
#
# Deletion empties the vertex's row, empties its column in every neighbour
# row, and then drops the mode. Contraction captures the removed vertex's
# edges, deletes it, and re-attaches the edges to the vertex that is kept.

# %%
from fockgraph import (
    Mode,
    Orientation,
    clean_row,
    contract,
    delete_vertex,
    from_adjacency,
    to_adjacency,
)

PAW = [[0, 1, 1, 1], [1, 0, 0, 0], [1, 0, 0, 1], [1, 0, 1, 0]]

# %% clean_row returns the raw amplitude prod(n!) collected by annihilation
b = from_adjacency([[0, 2, 0, 3], [2, 0, 0, 0], [0, 0, 0, 0], [3, 0, 0, 0]], Mode.BOSONIC, Orientation.UNDIRECTED)
row, amp = clean_row(b, 0)
print("cleaned row:", row, " raw amp2 =", amp.squared)

# %%
g = from_adjacency(PAW, Mode.FERMIONIC, Orientation.UNDIRECTED)
print("delete 4:\n", to_adjacency(delete_vertex(g, g.index("4"))))
print("delete 2:\n", to_adjacency(delete_vertex(g, g.index("2"))))

# %% Contract 4 into 3. Vertex 1 is adjacent to both, so in a simple graph
# the transfer is suppressed and reported.
for mode in Mode:
    g = from_adjacency(PAW, mode, Orientation.UNDIRECTED)
    merged, report = contract(g, g.index("3"), g.index("4"))
    print(mode.value, merged.labels)
    print(to_adjacency(merged))
    print(report)
