"""Independent reference computation with sympy.

Shares no code with minsphere: curves are typed in from their displayed
formulas, zbar is a second independent symbol and every quantity is built
straight from the projector definitions.
"""
import json
from pathlib import Path

import sympy as sp

z, w = sp.symbols("z w")  # w stands for zbar
I = sp.I
r2, r3 = sp.sqrt(2), sp.sqrt(3)

FROZEN = Path(__file__).with_name("frozen.json")


def conj(e):
    """Complex conjugate with z and zbar swapped."""
    a, b = sp.Dummy("a"), sp.Dummy("b")
    e = sp.sympify(e).subs({z: a, w: b}, simultaneous=True)
    e = sp.conjugate(e)
    return e.subs({sp.conjugate(a): w, sp.conjugate(b): z}, simultaneous=True)


def projector(frames):
    n = len(frames[0])
    p = sp.zeros(n, n)
    for f in frames:
        col = sp.Matrix(f)
        row = col.applyfunc(conj).T
        norm = sp.expand(sum(col[k] * conj(col[k]) for k in range(n)))
        p += col * row / norm
    return p


def geometry(frames):
    p = projector(frames)
    n = p.shape[0]
    s = 2 * p - sp.eye(n)
    az = (s * s.diff(z) / 2).applyfunc(sp.cancel)
    azb = (s * s.diff(w) / 2).applyfunc(sp.cancel)
    lam = sp.factor(sp.cancel(-(az * azb).trace()))
    k = sp.factor(sp.cancel(-2 / lam * sp.diff(sp.log(lam), z, w)))
    pm = (az / lam).diff(z).applyfunc(sp.cancel)
    b = sp.factor(sp.cancel(4 * sum(pm[i, j] * conj(pm[i, j]) for i in range(n) for j in range(n))))
    h = (az.diff(w) - (az * azb - azb * az)).applyfunc(sp.cancel)
    return {"lambda2": lam, "K": k, "sff": b, "harmonic": h == sp.zeros(n, n)}


CURVES = {
    "cubic-pair": [1 + z**3, I * (1 - z**3), r3 * z - z**2 / r3, I * (r3 * z + z**2 / r3),
                   sp.sqrt(8) / r3 * z**2, I * sp.sqrt(8) / r3 * z**2],
    "conic-pair": [1 + z**2 / 2, I * (1 - z**2 / 2), -I * r3 / 2 * z**2, -r3 / 2 * z**2, z, -I * r3 * z],
    "isotropic-conic-pair": [1, I, r2 * z, I * r2 * z, z**2, I * z**2],
    "veronese-middle-pair": [-r2 * w, -I * r2 * w, 1 - z * w, I * (1 - z * w), r2 * z, I * r2 * z],
    "quartic-middle-sum": [z**2 + w**2, I * (w**2 - z**2), (z + w) * (z * w - 1),
                           I * (w - z) * (z * w - 1), (1 - 4 * z * w + z**2 * w**2) / r3, 0],
}
C0 = [0, 0, 0, 0, 0, 1]


def frames(name):
    f = CURVES[name]
    if name == "quartic-middle-sum":
        return [f, C0]
    return [[conj(x) for x in f], f]


def compute(name):
    return geometry(frames(name))


def freeze(names=tuple(CURVES)):
    out = {}
    for name in names:
        g = compute(name)
        out[name] = {k: (v if isinstance(v, bool) else sp.srepr(v)) for k, v in g.items()}
    FROZEN.write_text(json.dumps(out, indent=1, sort_keys=True) + "\n")
    return out


def load_frozen():
    data = json.loads(FROZEN.read_text())
    return {
        name: {k: (v if isinstance(v, bool) else sp.sympify(v)) for k, v in rec.items()}
        for name, rec in data.items()
    }


if __name__ == "__main__":
    print(freeze())
