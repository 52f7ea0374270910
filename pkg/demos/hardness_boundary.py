#!/usr/bin/env python3
"""Show where the set cover reduction is tight and where it is not.

At radius 1 the gadget transfers budget answers in both directions, so
solving the domination instance decides the cover instance.  Subdividing
for larger radii keeps the backward direction only; the instance records
that honestly in its regime tag.
"""

from lkcds import (
    exact_cds,
    exact_setcover,
    hardness_instance,
    hardness_sweep,
    parse_setcover,
    random_setcover,
)

EXAMPLE = """\
u 5 4 2
0 1 2
2 3
3 4
0 4
"""


def main():
    sc = parse_setcover(EXAMPLE)
    print(f"cover instance: {sc.universe_size} elements, "
          f"{len(sc.sets)} sets, budget {sc.k}")
    cover = exact_setcover(sc)
    print(f"  optimal cover: {cover.solution} (value {cover.value})")

    for r in (1, 2):
        hi = hardness_instance(sc, r)
        dom = exact_cds(hi.graph, r, hi.k_out)
        print(f"r={r}: gadget has {hi.graph.n} vertices, domination budget "
              f"{hi.k_out} = k + {hi.offset}, regime {hi.regime}")
        print(f"  budget-{hi.k_out} connected {r}-dominating set "
              f"{'exists' if dom.found else 'does not exist'}")
    print()

    # a seeded sweep puts numbers on the equivalence claim
    rows = hardness_sweep(range(30), 1)
    agree = sum(1 for row in rows if row.forward_ok and row.backward_ok)
    yes = sum(1 for row in rows if row.cover_found)
    print(f"radius-1 sweep over 30 seeded instances: {agree}/30 transfer "
          f"in both directions ({yes} covers exist, {30 - yes} do not)")

    # the backward direction alone still holds after subdivision
    bad = 0
    for seed in range(12):
        sc = random_setcover(seed)
        hi = hardness_instance(sc, 2)
        dom = exact_cds(hi.graph, 2, hi.k_out)
        if dom.found and not exact_setcover(sc).found:
            bad += 1
    print(f"radius-2 spot check on 12 seeds: "
          f"{bad} backward violations (expect 0)")


if __name__ == "__main__":
    main()
