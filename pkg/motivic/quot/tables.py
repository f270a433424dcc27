"""
Hodge and Betti numbers of Quot_C(E, n).

Quot_C(E, n) is smooth and projective, so the t^n coefficient of the Hodge
product is sum (-1)^(p+q) h^{p,q} u^p v^q and the t^n coefficient of the
Poincare product is sum (-1)^k b_k u^k.
"""

import pandas as pd

from motives.classes import euler_characteristic

from .generating import hodge_product, poincare_product


def hodge_frame(g: int, r: int, nmax: int) -> pd.DataFrame:
    series = hodge_product(g, r, nmax)
    rows = []
    for n, coefficient in enumerate(series.coeffs):
        for monom, coef in coefficient.terms():
            p, q = monom[0], monom[1]
            rows.append({"n": n, "p": p, "q": q, "h": (-1) ** (p + q) * int(coef)})
    frame = pd.DataFrame(rows, columns=["n", "p", "q", "h"])
    return frame.sort_values(["n", "p", "q"], ignore_index=True)


def euler_frame(g: int, r: int, nmax: int) -> pd.DataFrame:
    series = hodge_product(g, r, nmax)
    return pd.DataFrame(
        {
            "n": list(range(nmax + 1)),
            "euler": [euler_characteristic(c) for c in series.coeffs],
        }
    )


def betti_frame(g: int, r: int, nmax: int) -> pd.DataFrame:
    series = poincare_product(g, r, nmax)
    rows = []
    for n, coefficient in enumerate(series.coeffs):
        for monom, coef in coefficient.terms():
            k = monom[0]
            rows.append({"n": n, "k": k, "b": (-1) ** k * int(coef)})
    frame = pd.DataFrame(rows, columns=["n", "k", "b"])
    return frame.sort_values(["n", "k"], ignore_index=True)
