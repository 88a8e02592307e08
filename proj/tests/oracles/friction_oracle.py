#!/usr/bin/env python3
"""networkx cross-check of the friction fixture's adjustment-set claims.

Independent of the C++ graph code: uses networkx d-separation on the back-door
graph and a single-removal minimality check.
"""
import json
import pathlib
import networkx as nx

ROOT = pathlib.Path(__file__).resolve().parents[2]
TABLE_SET = {
    "ego_tire_temperature", "planned_steering", "ego_longitudinal_wheel_slip", "wet_grip", "tire_type",
    "planned_acceleration", "tire_pressure", "ego_forward_velocity", "ego_slip_angle",
}


def main():
    doc = json.loads((ROOT / "data/fixtures/friction-relation.json").read_text())
    g = nx.DiGraph()
    g.add_nodes_from(v["name"] for v in doc["variables"])
    g.add_edges_from(tuple(e) for e in doc["edges"])
    assert nx.is_directed_acyclic_graph(g)
    latent = {v["name"] for v in doc["variables"] if v["latent"]}
    x, y = "coefficient_of_friction", "agg_btn_stn"
    de = nx.descendants(g, x)
    print("descendants(x) =", sorted(de))
    bd = g.copy()
    bd.remove_edges_from(list(g.out_edges(x)))
    is_sep = nx.is_d_separator if hasattr(nx, "is_d_separator") else nx.d_separated

    def admissible(s):
        return not (s & de) and not (s & latent) and is_sep(bd, {x}, {y}, s)

    print("table set admissible:", admissible(TABLE_SET))
    for v in sorted(TABLE_SET):
        print("  minus", v, "->", admissible(TABLE_SET - {v}))
    parents = set(g.predecessors(x))
    print("parent set admissible:", admissible(parents), len(parents))
    # single-member removal suffices for separator minimality (Tian, Paz, Pearl 1998)
    print("table set minimal:", all(not admissible(TABLE_SET - {v}) for v in TABLE_SET))


if __name__ == "__main__":
    main()
