# %% [markdown]
# # Orders of m-shuffle groups on small decks
#
# Every in/out m-shuffle keeps pairs of cards equidistant from the centre,
# so on 2n (or 2n+1) cards the group order divides n! * 2**n.

# %%
from shufflegroups.cli import table_rows
from shufflegroups.structure import symmetry_bound

print(f"{'deck':>4} {'m':>3} {'order':>10} {'bound':>10}")
for row in table_rows(16):
    bound = symmetry_bound(row.deck_size // 2)
    mark = "  <- maximal" if row.order == bound else ""
    print(f"{row.deck_size:>4} {row.m:>3} {row.order:>10} {bound:>10}{mark}")

# %% [markdown]
# The bound is reached for 6 cards with 3-shuffles (48) but not for 12 cards,
# where the bound is 46080 and the largest m-shuffle group has 7680 elements.
# Larger decks are just as cheap with the stabilizer chain engine:

# %%
from shufflegroups import in_shuffle, out_shuffle, schreier_sims

for deck in (30, 32, 52):
    print(deck, schreier_sims([in_shuffle(2, deck // 2), out_shuffle(2, deck // 2)]).order)
