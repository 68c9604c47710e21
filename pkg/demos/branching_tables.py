"""Branch coset modules into minimal-model times parafermion pieces.

Each lattice coset splits over the chain of Virasoro minimal models with
a parafermion factor at the end; the component of least weight carries
half the coset's minimal norm.
"""

from pfkit import branch, branch_tail, canonicalize, locate_pf, min_norm
from pfkit.branching import vir_h
from pfkit.parafermion import all_labels as pf_labels

K = 3

for j, bits in [(0, (1, 1, 1)), (1, (1, 1, 0))]:
    tag = f"{j}:{''.join(map(str, bits))}"
    comps = branch(K, j, bits)
    label = canonicalize(K, j, bits)
    print(f"coset {tag}: {len(comps)} components, min norm {min_norm(label)}")
    for c in comps:
        vir = " ".join(f"({v.r},{v.s})" for v in c.virasoro)
        print(f"  indices={c.indices} vir={vir} pf=({c.pf.i},{c.pf.j})"
              f" weight={c.weight}")
    print()

# the tail of the chain: the last minimal model paired with the parafermion
print("tail pairs for the shifted coset, both spin structures:")
for d in (0, 1):
    for vir, pf in branch_tail(K, 1, d):
        print(f"  d={d}: h={vir_h(vir.m, vir.r, vir.s)} pf=({pf.i},{pf.j})")

# and the reverse lookup: every parafermion label sits in some tail
print()
for x in pf_labels(K):
    eta = locate_pf(x, 0)
    print(f"({x.i},{x.j}) appears in the d=0 tail at eta={eta}")
