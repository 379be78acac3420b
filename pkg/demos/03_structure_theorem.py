# %% [markdown]
# # Predicting and checking the shuffle group on m**k cards
#
# The group generated by the in and out m**y-shuffles depends only on
# `t = k / gcd(y, k)` and the parity of `y / gcd(y, k)`.

# %%
from shufflegroups import predict, verify

for m, k, y in [(2, 2, 1), (5, 2, 1), (2, 3, 2), (3, 4, 2), (2, 6, 4), (2, 12, 5)]:
    p = predict(m, k, y)
    print(f"m={m} k={k} y={y}: {p.describe():40s} order {p.predicted_order}")

# %% [markdown]
# `verify` recomputes the order with Schreier-Sims and checks the relations
# behind the prediction: involutions, commutation, the conjugation action,
# the product relation in the twisted case, and the complement.

# %%
r = verify(2, 5, 2)
print(r.to_json(indent=1))

# %% [markdown]
# The order does not depend on m:

# %%
for k, y in [(3, 1), (3, 2), (4, 2), (5, 2)]:
    orders = {m: verify(m, k, y).computed_order for m in (2, 3, 4) if m**k <= 4096}
    print(f"k={k} y={y}:", orders)
