"""Walk the discriminant group of the rescaled root lattice at one level.

Labels are pairs (j, bits): j counts fundamental-weight shifts, bits a
sign pattern, with (j, bits) ~ (j - weight, complement).  The group they
form is elementary abelian times one cyclic factor, and every coset has
an exact minimal norm with a closed form checked here against a direct
search.
"""

from pfkit import (
    canonicalize,
    coset_add,
    coset_labels,
    coset_neg,
    identity_label,
    min_norm,
    min_norm_oracle,
    minimizer_count,
    representative,
)

K = 4

labels = coset_labels(K)
print(f"level {K}: {len(labels)} cosets (2^{K-1} * {K})")
print("identity:", identity_label(K))

# raw labels canonicalize: shifts reduce mod k, heavy bit patterns flip
x = canonicalize(K, 5, (0, 0, 1, 0))
y = canonicalize(K, 1, (1, 1, 0, 0))
print("canonical forms:", x, y)
print("sum:", coset_add(x, y), " inverse of x:", coset_neg(x))
print("representative of x:", representative(x).coords)

print()
print("coset        min norm  vectors")
for label in labels:
    norm = min_norm(label)
    count = minimizer_count(label)
    tag = f"{label.j}:{''.join(map(str, label.bits))}"
    print(f"{tag:<12} {str(norm):<9} {count}")
    assert (norm, count) == min_norm_oracle(label)

print()
print("closed form agrees with the search oracle on all",
      len(labels), "cosets")
