"""A graphical regular representation of Z2^13 and its 8164 TF-isomorphism mates.

The local graph on the connection set is asymmetric, which certifies that
Aut^pi is the translation group; the census is then read off directly.
"""

from __future__ import annotations

from twofold import aut, local_graph, m0_graph, m_graph
from twofold.constructions import grr_connection_set
from twofold.tf_iso import translation_census

if __name__ == "__main__":
    k = 13
    m = m_graph(k)
    print(f"M({k}): {m.n} vertices, {m.num_edges()} edges")
    m0 = m0_graph(k)
    print(f"M0({k}): {m0.n} vertices, |Aut| = {aut(m0).order()}, equals local graph: {local_graph(k) == m0}")
    s = grr_connection_set(k)
    tc = translation_census(k, s)
    print(f"|S| = {len(s)}, census classes = {tc.class_count} (2^{k} - {len(s)} = {(1 << k) - len(s)})")
