"""Half-period codes build superalgebras; pair up their even-part sectors.

At level 6 the code {0, 3} has half-integral current weight on its odd
part.  The even part is an honest vertex algebra whose module orbits
either fuse in pairs into one irreducible of the superalgebra or split
into two; the verdicts below are verified against the induced
decompositions.
"""

from pfkit import span
from pfkit.modules import caseB_modules, even_part_code, sc_ext_weight

for k, gens in [(2, ((1,),)), (6, ((3,),))]:
    code = span(gens, k, 1)
    even = even_part_code(code)
    print(f"k={k}: code {sorted(code.words)}, even part {sorted(even.words)}")
    for w in sorted(code.words):
        print(f"  current weight at {w}: {sc_ext_weight(k, w)}")

    records = caseB_modules(code)
    fused = sum(r.verdict.value == "Fused" for r in records)
    split = sum(r.verdict.value == "Split" for r in records)
    print(f"  {len(records)} sector pairs: {fused} fused, {split} split")
    for r in records:
        a = ",".join(f"({f.i},{f.j})" for f in r.pair[0].factors)
        b = ",".join(f"({f.i},{f.j})" for f in r.pair[1].factors)
        print(f"  [{a}] | [{b}] -> {r.verdict.value}"
              f" ({r.induced.num_irreducibles} irreducible(s))")
    print()
