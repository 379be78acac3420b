# %% [markdown]
# # Perfect shuffles as permutations
#
# Cards are indexed by their distance from the top of the deck.  A shuffle is
# stored as a destination map: `p.dest[i]` is where the card at `i` ends up.

# %%
from shufflegroups import apply_to_deck, element_order, in_shuffle, out_shuffle
from shufflegroups.perm import format_cycles

deck = list("ABCDEFGHIJKL")
print("out 2-shuffle:", "".join(apply_to_deck(out_shuffle(2, 6), deck)))
print("in  2-shuffle:", "".join(apply_to_deck(in_shuffle(2, 6), deck)))
print("out 3-shuffle:", "".join(apply_to_deck(out_shuffle(3, 4), deck)))
print("in  3-shuffle:", "".join(apply_to_deck(in_shuffle(3, 4), deck)))

# %% [markdown]
# The out shuffle keeps the top card on top; the in 3-shuffle drops it to
# third place.  On a standard 52-card deck eight out shuffles restore the
# order, while in shuffles need 52.

# %%
print("order of O on 52 cards:", element_order(out_shuffle(2, 26)))
print("order of I on 52 cards:", element_order(in_shuffle(2, 26)))
print("O on 10 cards as cycles:", format_cycles(out_shuffle(2, 5)))

# %% [markdown]
# Products are read left to right, so `O * I` means "out, then in".

# %%
o, i = out_shuffle(2, 26), in_shuffle(2, 26)
card = 17
for name, p in [("O", o), ("O*I", o * i), ("O*I*I", o * i * i)]:
    print(f"card {card} after {name}: position {p(card)}")
