# %% [markdown]
# # Shuffles on m**k cards act on base-m digits
#
# Write a position in base `m` with `k` digits.  The out m-shuffle rotates the
# digits left; the in m-shuffle rotates and flips the digit that wrapped
# around (`x -> (m-1) - x`).

# %%
from shufflegroups import (ShuffleKind, b_generator, c_generator, digit_action,
                           index_to_digits, power_shuffle)

m, k = 3, 3
o = power_shuffle(m, k, 1, ShuffleKind.OUT)
i = power_shuffle(m, k, 1, ShuffleKind.IN)
for card in (5, 11, 19):
    d = index_to_digits(card, m, k)
    print(card, d.digits,
          "O ->", index_to_digits(o(card), m, k).digits,
          "I ->", index_to_digits(i(card), m, k).digits,
          "(model:", digit_action(ShuffleKind.IN, 1, d).digits, ")")

# %% [markdown]
# Conjugating the in shuffle by powers of the out shuffle isolates single
# digit flips (`B_j`), and using the in m^2-shuffle isolates flips of two
# neighbouring digits (`C_j`).

# %%
def show(p, label):
    moved = [(index_to_digits(c, m, k).digits, index_to_digits(p(c), m, k).digits)
             for c in (0, 13)]
    print(label, moved)


for j in range(1, k + 1):
    show(b_generator(j, m, k), f"B{j}")
for j in range(1, k + 1):
    show(c_generator(j, m, k), f"C{j}")
