"""Stability of small graphs: stable, unstable and trivially unstable examples."""

from __future__ import annotations

from twofold import Graph, aut, aut_pi, graph6_decode, is_stable


def show(name: str, g: Graph) -> None:
    verdict = is_stable(g)
    line = f"{name:<12} n={g.n:<3} |Aut|={aut(g).order():<5} verdict={verdict}"
    if verdict.kind != "trivially_unstable":
        line += f"  |Aut^pi|={aut_pi(g).aut_pi.order()}"
    print(line)


if __name__ == "__main__":
    show("Petersen", Graph.petersen())
    show("C5", Graph.cycle(5))
    show("C6", Graph.cycle(6))
    show("C4", Graph.cycle(4))
    # a 5-vertex graph whose double cover has extra symmetry
    show("D`{", graph6_decode("D`{"))
