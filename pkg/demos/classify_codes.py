"""Classify a handful of codes and print what the extension looks like.

A code over Z_k is supported when every self-pairing vanishes mod k
(an even extension) or when the half-period condition holds (a
superalgebra).  Everything else is out of scope and says so.
"""

from fractions import Fraction

from pfkit import Case, central_charge, span

CANDIDATES = [
    (2, 1, ((1,),)),
    (4, 1, ((2,),)),
    (4, 1, ((1,),)),
    (5, 2, ((1, 2),)),
    (6, 1, ((3,),)),
    (6, 2, ((3, 3),)),
    (9, 1, ((3,),)),
]

for k, ell, gens in CANDIDATES:
    code = span(gens, k, ell)
    c = ell * central_charge(k)
    line = f"k={k} ell={ell} gens={list(map(list, gens))}: {code.case.value}"
    line += f", {len(code.words)} words, c={c}"
    print(line)
    if code.case is Case.B:
        # the even half carries the vertex algebra, the odd half the twist
        print(f"  even part {sorted(code.even_part)}")
        odd = sorted(set(code.words) - set(code.even_part))
        print(f"  odd part  {odd}")

# the smallest supported examples frame the whole range: the free fermion
# at k=2 (c = 1/2) up through rank-two codes at higher level
print()
print("free fermion check: c =", central_charge(2), "== 1/2:",
      central_charge(2) == Fraction(1, 2))
