# %% [markdown]
# # Rows as Fock states
#
# One row of an adjacency matrix becomes an occupation-number state.
# Ladder operators change a single entry and multiply the amplitude by a
# square-root factorial factor; we keep the square of that amplitude exactly.

# %%
from fockgraph import Mode, apply_annihilation, apply_creation, build_row_from_occupations, vacuum
from fockgraph.fock import raw_row_from_vacuum

v = vacuum(4)
print("vacuum:", v)

# %% Creating two more particles in a mode holding one: (1+2)!/1! = 6
s = apply_creation(build_row_from_occupations([0, 1, 0, 0], Mode.BOSONIC), 1, 2, Mode.BOSONIC)
print("a+^2 |0,1,0,0> =", s)
print("  sqrt of amp2 ~", float(s.amplitude))

# %% Annihilating back picks up 3!/1! = 6 again
print("a^2 of that    =", apply_annihilation(s, 1, 2))

# %% Fermionic modes hold at most one particle
print("fermionic a+ on occupied mode ->", apply_creation(build_row_from_occupations([0, 1], Mode.FERMIONIC), 1, 1, Mode.FERMIONIC))

# %% Building a row from the vacuum accumulates prod(n!) before normalization
raw = raw_row_from_vacuum([0, 2, 0, 3], Mode.BOSONIC)
print("raw |0,2,0,3> from vacuum:", raw, "(2!*3! = 12)")
print("normalized:", build_row_from_occupations([0, 2, 0, 3], Mode.BOSONIC))
