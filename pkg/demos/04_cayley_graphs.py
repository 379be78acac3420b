# %% [markdown]
# # Cayley graphs
#
# Vertices are the deck arrangements reachable from the sorted deck; each
# shuffle contributes one outgoing edge per vertex.  Four cards give a cube,
# m**3 cards with m**2-shuffles give a cuboctahedron.

# %%
from pathlib import Path

from shufflegroups import ShuffleKind, power_shuffle
from shufflegroups.cayley import build, to_dot

out_dir = Path("cayley_out")
out_dir.mkdir(exist_ok=True)

for m, k, y, name in [(2, 2, 1, "cube"), (2, 3, 2, "cuboctahedron")]:
    g = build([("O", power_shuffle(m, k, y, ShuffleKind.OUT)),
               ("I", power_shuffle(m, k, y, ShuffleKind.IN))])
    path = out_dir / f"{name}.dot"
    path.write_text(to_dot(g))
    print(f"{name}: {g.num_vertices} vertices, {g.num_edges} directed edges, "
          f"{len(g.undirected_skeleton())} undirected edges -> {path}")

# %% [markdown]
# Render with Graphviz, e.g. `neato -Tsvg cayley_out/cube.dot > cube.svg`.
