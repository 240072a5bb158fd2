"""Realising a group with an involutory automorphism as Aut^pi of a graph.

For H = Z5 with inversion the graph is asymmetric yet has five two-fold
automorphisms, acting as translations on the cells H x {i}.
"""

from __future__ import annotations

from twofold import aut, aut_pi, builtin_group, gamma_construction
from twofold.constructions import translation_element
from twofold.groups import inversion_automorphism

if __name__ == "__main__":
    h = builtin_group("Z:5")
    lg = gamma_construction(h, inversion_automorphism(h))
    g = lg.graph
    tfs = aut_pi(g)
    print(f"vertices={g.n} edges={g.num_edges()} |Aut|={aut(g).order()} |Aut^pi|={tfs.aut_pi.order()} inst={tfs.inst}")
    for p in tfs.elements:
        a = translation_element(h, p)
        b = translation_element(h, tfs.gamma[p])
        print(f"translation by {a} pairs with translation by {b}")
