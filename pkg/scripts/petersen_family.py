"""Delta-wye closure of K6 with per-graph MMNA verdicts and degree sequences."""

from apexion.graph import complete_graph, degree_sequence
from apexion.graph6 import encode
from apexion.mmna import is_mmna
from apexion.transforms import dy_closure


def main():
    for g in dy_closure([complete_graph(6)]):
        v = is_mmna(g)
        print(f"{encode(g).decode():12s} n={g.order:2d} e={g.size}  {v.kind.value:18s} {degree_sequence(g)}")


if __name__ == "__main__":
    main()
