#!/usr/bin/env python3
"""Walk through the package's main computations on concrete diagrams.

Covers the trefoil's labeling and polynomial, the three kink variants,
a crossing change with its f/g prediction, the one-bridge family, span
behaviour of positive braid closures, and pinning a dealternating number
from span and crossing count alone.
"""

from warppoly import (
    BraidWord,
    braid_closure,
    dealternating_number,
    diagram_span,
    fg_decomposition,
    find_edge_with_label,
    insert_kink_over_first,
    insert_kink_under_first,
    labeling,
    one_bridge_diagram,
    parse_gauss,
    parse_poly,
    predict_crossing_change,
    recognize,
    span_witness,
    warping_polynomial,
    witness,
)


def show(title, diagram):
    print(f"{title}: {diagram}")
    print(f"  labels {labeling(diagram)}  W = {warping_polynomial(diagram)}"
          f"  span {diagram_span(diagram)}")


def main():
    trefoil = parse_gauss("O1 U2 O3 U1 O2 U3")
    show("alternating trefoil diagram", trefoil)

    print("\nkink insertions (curl added at an edge):")
    for name, insert, label in (
        ("over-first at a label-1 edge", insert_kink_over_first, 1),
        ("over-first at a label-2 edge", insert_kink_over_first, 2),
        ("under-first at a label-1 edge", insert_kink_under_first, 1),
    ):
        out = insert(trefoil, find_edge_with_label(trefoil, label))
        print(f"  {name}: W = {warping_polynomial(out)}")

    print("\ncrossing change at crossing 1:")
    f, g = fg_decomposition(trefoil, 1)
    print(f"  f = {f}, g = {g}")
    print(f"  predicted W' = t*g + f/t = {predict_crossing_change(trefoil, 1)}")
    changed = trefoil.crossing_change(1)
    show("  changed diagram", changed)

    print("\none-bridge family (span equals crossing number):")
    for l in (1, 2, 3, 8):
        d = one_bridge_diagram(l)
        print(f"  l={l}: {d}  W = {warping_polynomial(d)}")

    print("\npositive braid closures have span = strands - 1:")
    for strands, letters in ((2, (1, 1, 1)), (3, (1, 2) * 4), (4, (1, 2, 3) * 5)):
        d = braid_closure(BraidWord(strands, letters))
        print(f"  n={strands}, {len(letters)} letters: span {diagram_span(d)}")

    print("\nspan 8 with 9 crossings pins the dealternating number:")
    d = span_witness(9, 8)
    print(f"  {d}")
    print(f"  span {diagram_span(d)}, crossings {d.crossing_count}: "
          f"(8-1)/2 <= dalt <= 9/2 forces dalt = {dealternating_number(d)}")

    print("\nrecognition and realization:")
    for text in ("3t+3t^2", "1+2t+2t^2+t^3", "t+t^2"):
        result = recognize(parse_poly(text))
        print(f"  {text}: {result}")
        if not hasattr(result, "reason"):
            print(f"    witness: {witness(result)}")


if __name__ == "__main__":
    main()
