#!/usr/bin/env python3
"""Independent enumeration oracle for the heavy-rain model pair.

Recomputes every frozen expected value used by the C++ tests from the raw
CPD tables with plain itertools/math. Run: python3 heavy_rain_oracle.py
"""
import itertools
import math

V1 = ["Summer", "Winter"]
V2 = ["Slow", "Fast"]
V3 = ["Oceanic", "Continental"]
X = ["CP", "notCP"]
PHI = ["Short", "Long"]
CODE = {"Short": 1.0, "Long": 0.0}

p_v1 = {"Summer": 0.5, "Winter": 0.5}
p_v2 = {"Slow": 0.6, "Fast": 0.4}
p_v3 = {"Oceanic": 0.6, "Continental": 0.4}
# P(X=CP | first parent, second parent); same numbers for (V1,V3) and (V1,V2)
cp_table = {("Summer", 0): 0.6, ("Summer", 1): 0.8, ("Winter", 0): 0.7, ("Winter", 1): 0.6}
phi_short = {("notCP", "Slow"): 0.6, ("notCP", "Fast"): 0.1, ("CP", "Slow"): 0.8, ("CP", "Fast"): 0.3}


def p_x(x, v1, idx):
    p = cp_table[(v1, idx)]
    return p if x == "CP" else 1 - p


def p_phi(phi, x, v2):
    p = phi_short[(x, v2)]
    return p if phi == "Short" else 1 - p


def reality(v1, v2, v3, x, phi):
    return p_v1[v1] * p_v2[v2] * p_v3[v3] * p_x(x, v1, V3.index(v3)) * p_phi(phi, x, v2)


def model(v1, v2, x, phi):
    return p_v1[v1] * p_v2[v2] * p_x(x, v1, V2.index(v2)) * p_phi(phi, x, v2)


def kl(p, q):
    return sum(a * math.log(a / b) for a, b in zip(p, q) if a > 0)


def main():
    print("joint(Summer,Oceanic,CP,Slow,Short) =", reality("Summer", "Slow", "Oceanic", "CP", "Short"))
    pcp_r = sum(reality(a, b, c, "CP", f) for a, b, c, f in itertools.product(V1, V2, V3, PHI))
    pcp_m = sum(model(a, b, "CP", f) for a, b, f in itertools.product(V1, V2, PHI))
    print("P_R(X=CP) =", pcp_r, " P_M(X=CP) =", pcp_m)

    def do_e(x):
        return sum(p_v2[b] * p_phi(f, x, b) * CODE[f] for b in V2 for f in PHI)

    e_cp, e_ncp = do_e("CP"), do_e("notCP")
    e_r = sum(reality(a, b, c, x, f) * CODE[f] for a, b, c, x, f in itertools.product(V1, V2, V3, X, PHI))
    print("E(phi|do CP) =", e_cp, " E(phi|do notCP) =", e_ncp, " E_R(phi) =", e_r)
    print("ACE =", e_cp - e_ncp, " RCE =", e_cp / e_ncp, " sigma =", 1 - e_ncp / e_r)
    print("printed-sigma reconstruction 1-0.4/0.466 =", 1 - 0.4 / 0.466)
    e_slow = sum(reality(a, "Slow", c, x, f) / p_v2["Slow"] * CODE[f]
                 for a, c, x, f in itertools.product(V1, V3, X, PHI))
    print("E(phi|do V2=Slow) =", e_slow, " delta =", e_slow - e_r)
    print("rho1 two-point (0.5,0.5)||(0.67,0.33) =", kl([0.5, 0.5], [0.67, 0.33]))
    print("kl((0.6,0.4),(0.68,0.32)) =", kl([0.6, 0.4], [0.68, 0.32]))

    keys = list(itertools.product(V1, V2, X))
    pr = [sum(reality(a, b, c, x, f) for c in V3 for f in PHI) for a, b, x in keys]
    qm = [sum(model(a, b, x, f) for f in PHI) for a, b, x in keys]
    print("rho2 KL(model||reality) =", kl(qm, pr), " KL(reality||model) =", kl(pr, qm))

    # Causal influence: KL(P || P_cut) with cut parents replaced by independent marginal copies.
    # reality, out(V2) = {V2->phi}
    def reality_cut_v2(v1, v2, v3, x, phi):
        mix = sum(p_v2[w] * p_phi(phi, x, w) for w in V2)
        return p_v1[v1] * p_v2[v2] * p_v3[v3] * p_x(x, v1, V3.index(v3)) * mix

    def reality_cut_v1(v1, v2, v3, x, phi):
        mix = sum(p_v1[w] * p_x(x, w, V3.index(v3)) for w in V1)
        return p_v1[v1] * p_v2[v2] * p_v3[v3] * mix * p_phi(phi, x, v2)

    grid_r = list(itertools.product(V1, V2, V3, X, PHI))
    i_r_v2 = kl([reality(*g) for g in grid_r], [reality_cut_v2(*g) for g in grid_r])
    i_r_v1 = kl([reality(*g) for g in grid_r], [reality_cut_v1(*g) for g in grid_r])

    def model_cut_v2_all(v1, v2, x, phi):
        mx = sum(p_v2[w] * p_x(x, v1, V2.index(w)) for w in V2)
        mp = sum(p_v2[w] * p_phi(phi, x, w) for w in V2)
        return p_v1[v1] * p_v2[v2] * mx * mp

    def model_cut_v1(v1, v2, x, phi):
        mx = sum(p_v1[w] * p_x(x, w, V2.index(v2)) for w in V1)
        return p_v1[v1] * p_v2[v2] * mx * p_phi(phi, x, v2)

    grid_m = list(itertools.product(V1, V2, X, PHI))
    pm = [model(*g) for g in grid_m]
    i_m_v2 = kl(pm, [model_cut_v2_all(*g) for g in grid_m])
    i_m_v1 = kl(pm, [model_cut_v1(*g) for g in grid_m])
    print("I_R(out V2) =", i_r_v2, " I_M(out V2) =", i_m_v2)
    print("I_R(out V1) =", i_r_v1, " I_M(out V1) =", i_m_v1)
    full = (i_r_v1 - i_m_v1, i_r_v2 - i_m_v2)
    print("rho3 full components =", full, " norm =", math.hypot(*full))

    # restrict-to-N: project both models onto N = {V1, V2, X} (each node keeps
    # its parents inside N, CPDs from the full joint) and cut out(n) within N.
    def px_r(x, v1):
        return sum(p_v3[c] * p_x(x, v1, V3.index(c)) for c in V3)

    grid_n = list(itertools.product(V1, V2, X))
    pr_n = [p_v1[a] * p_v2[b] * px_r(x, a) for a, b, x in grid_n]
    pr_n_cut_v1 = [p_v1[a] * p_v2[b] * sum(p_v1[u] * px_r(x, u) for u in V1) for a, b, x in grid_n]
    pm_n = [p_v1[a] * p_v2[b] * p_x(x, a, V2.index(b)) for a, b, x in grid_n]
    pm_n_cut_v1 = [p_v1[a] * p_v2[b] * sum(p_v1[u] * p_x(x, u, V2.index(b)) for u in V1) for a, b, x in grid_n]
    pm_n_cut_v2 = [p_v1[a] * p_v2[b] * sum(p_v2[w] * p_x(x, a, V2.index(w)) for w in V2) for a, b, x in grid_n]
    restricted = (kl(pr_n, pr_n_cut_v1) - kl(pm_n, pm_n_cut_v1), 0.0 - kl(pm_n, pm_n_cut_v2))
    print("rho3 restricted components =", restricted, " norm =", math.hypot(*restricted))


if __name__ == "__main__":
    main()
