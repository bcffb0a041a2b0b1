"""Regenerate fixtures/*.json.

Inputs are built from closed-form class data; the ``expected`` blocks are
written out by hand below and never computed by the package, so replaying
the fixtures is a genuine check.
"""

import json
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1] / "fixtures"


def box(d, n):
    return {"d": d, "n": n}


def grass_variety(d, n, terms, dim=None):
    doc = {"class": {"box": box(d, n), "terms": [{"partition": p, "coeff": c} for p, c in terms]}}
    if dim is not None:
        doc["dim"] = dim
    return doc


def bi_variety(d, n, left, right):
    terms = [{"lambda": lp, "mu": rp, "coeff": lc * rc} for lp, lc in left for rp, rc in right]
    return {"class": {"box": box(d, n), "terms": terms}}


def hansen_harris(n, d):
    w = n - d
    fx = [([w - 1], 2)]
    y = [([1] * (d + 1), 1)]
    return fx, y


def quadric(d, r):
    fx = [(list(range(d + 1, 0, -1)), 2 ** (d + 1))]
    y = [([r] * r, 1)]
    return fx, y


def fixtures():
    out = {}
    for n, d in [(3, 1), (4, 1), (4, 2)]:
        fx, y = hansen_harris(n, d)
        prov = f"Hansen-Harris conic example, n={n}, d={d}: [f(X)] = 2 sigma_(n-d-1), [Y] = sigma_(1^(d+1))"
        out[f"ex51_n{n}_d{d}_cor73"] = {
            "provenance": prov,
            "criterion": "cor7.3",
            "inputs": {"X": grass_variety(d, n, fx), "Y": grass_variety(d, n, y)},
            "expected": {"holds": False},
        }
        out[f"ex51_n{n}_d{d}_th71"] = {
            "provenance": prov + "; class of X x Y in G x G",
            "criterion": "th7.1",
            "inputs": {"F": bi_variety(d, n, fx, y)},
            "expected": {"holds": False},
        }
    # the default Hansen-Harris request used in the README
    out["ex51"] = dict(out["ex51_n3_d1_cor73"])
    # dim f(X) + dim Y = 3 + 2 = 5 >= n = 3
    out["ex51_n3_d1_hansen"] = {
        "provenance": "Hansen-Harris conic example, n=3, d=1: the image of X x Y in G x G has dimension 5, outside Hansen's range",
        "criterion": "hansen",
        "inputs": {"dim": 5, "box": box(1, 3)},
        "expected": {"holds": False},
    }
    for d, r in [(1, 2), (2, 2)]:
        n = d + 2 * r
        fx, y = quadric(d, r)
        prov = f"quadric example, d={d}, r={r}, n={n}: [X] = 2^(d+1) sigma_(d+1,...,1), [Y] = sigma_(r^r)"
        out[f"ex52_d{d}_r{r}_cor73"] = {
            "provenance": prov,
            "criterion": "cor7.3",
            "inputs": {"X": grass_variety(d, n, fx), "Y": grass_variety(d, n, y)},
            "expected": {"holds": False},
        }
        out[f"ex52_d{d}_r{r}_th71"] = {
            "provenance": prov + "; class of X x Y in G x G",
            "criterion": "th7.1",
            "inputs": {"F": bi_variety(d, n, fx, y)},
            "expected": {"holds": False},
        }
    out["enlarge_w6"] = {
        "provenance": "enlargements of mu = (5,2,2,1) with n-d = 6",
        "argv": ["mu-j", "--box", "d=3,n=9", "5,2,2,1"],
        "expected": [
            {"j": 0, "mu_j": [6, 2, 2, 1]},
            {"j": 2, "mu_j": [3, 3, 3, 1]},
            {"j": 3, "mu_j": [2, 2, 2, 2]},
        ],
    }
    out["enlarge_w5"] = {
        "provenance": "enlargements of mu = (5,2,2,1), the n-d = 5 variant, where mu_0 = n-d",
        "argv": ["mu-j", "--box", "d=3,n=8", "5,2,2,1"],
        "expected": [
            {"j": 0, "mu_j": [5, 5, 2, 1]},
            {"j": 2, "mu_j": [3, 3, 3, 1]},
            {"j": 3, "mu_j": [2, 2, 2, 2]},
        ],
    }
    out["enlarge_dual"] = {
        "provenance": "dual enlargement conditions of mu = (5,2,2,1) for d >= 4, by running the checker on conjugated data (d=4, n=10)",
        "criterion": "th8.1",
        "inputs": {"F": grass_variety(4, 10, [([0], 1)]), "mu": [5, 2, 2, 1], "dual": True},
        "expected": {
            "holds": True,
            "witnesses": [
                {"j": 0, "mu_j": [5, 2, 2, 1, 1]},
                {"j": 1, "mu_j": [5, 2, 2, 2, 0]},
                {"j": 4, "mu_j": [5, 5, 0, 0, 0]},
            ],
        },
    }
    out["special_enlarge"] = {
        "provenance": "mu = (m) special with m < n-d gives the single condition against sigma_(m+1)",
        "argv": ["mu-j", "--box", "d=1,n=5", "2"],
        "expected": [{"j": 0, "mu_j": [3, 0]}],
    }
    out["sigma1_squared"] = {
        "provenance": "sigma_1^2 = sigma_2 + sigma_(1,1) in G(1,P^3)",
        "argv": ["mult", "--box", "d=1,n=3", "1", "1"],
        "expected": {"terms": [{"partition": [2, 0], "coeff": 1}, {"partition": [1, 1], "coeff": 1}]},
    }
    out["delta_strict"] = {
        "provenance": "delta table: strictly decreasing mu with mu_0 < n-d has delta 0",
        "argv": ["delta", "--box", "d=3,n=7", "3,2,1,0"],
        "expected": {"delta": 0},
    }
    out["delta_constant"] = {
        "provenance": "delta table: constant mu has delta d",
        "argv": ["delta", "--box", "d=3,n=7", "2,2,2,2"],
        "expected": {"delta": 3},
    }
    out["delta_full_row"] = {
        "provenance": "delta table: mu = (n-d, 0, ..., 0) has delta n-d-1",
        "argv": ["delta", "--box", "d=3,n=7", "4"],
        "expected": {"delta": 3},
    }
    out["cor83_sharp"] = {
        "provenance": "sharpness of the delta bound: Hansen-Harris example with n=3, d=1 and mu = (1,1); equality, so the criterion fails",
        "criterion": "cor8.3",
        "inputs": {"F": grass_variety(1, 3, [([1], 2)]), "mu": [1, 1]},
        "expected": {"holds": False, "witnesses": [{"dim_sigma": 2, "codim_F": 1, "delta": 1}]},
    }
    out["conj_example"] = {
        "provenance": "conjugate (4,3,2,2)* = (4,4,2,1), here in G(3,P^8) so the transposed box has 5 rows",
        "argv": ["conj", "--box", "d=3,n=8", "4,3,2,2"],
        "expected": [4, 4, 2, 1, 0],
    }
    out["cor73_sigma1"] = {
        "provenance": "G(1,P^3) with [X] = [Y] = sigma_1: the triple product is 2 sigma_(2,2)",
        "criterion": "cor7.3",
        "inputs": {"X": grass_variety(1, 3, [([1], 1)]), "Y": grass_variety(1, 3, [([1], 1)])},
        "expected": {"holds": True},
    }
    return out


def main():
    ROOT.mkdir(exist_ok=True)
    for name, doc in fixtures().items():
        (ROOT / f"{name}.json").write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    print(f"wrote {len(fixtures())} fixtures to {ROOT}")


if __name__ == "__main__":
    main()
