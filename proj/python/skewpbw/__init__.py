"""Groebner bases, syzygies and Tor/Ext presentations over bijective skew PBW
extensions of Q.

The heavy lifting happens in the compiled extension `_skewpbw`; this wrapper
adds JSON decoding so commands return plain dictionaries.
"""

import json as _json

try:
    from ._skewpbw import Session as _Session, SkewError  # noqa: F401
except ImportError:  # module on PYTHONPATH next to the package (build tree)
    from _skewpbw import Session as _Session, SkewError  # noqa: F401

__all__ = ["Session", "SkewError"]


class Session:
    """A parsed session: one algebra plus named modules, matrices and
    presentations."""

    def __init__(self, text):
        self._impl = _Session(text)

    def run(self, command, args=(), side="left", r=0, max=-1, delta_a="paper", format="json"):
        out = self._impl.run(command, list(args), side, r, max, delta_a, format)
        if format == "json":
            return _json.loads(out)
        return out

    def multiply(self, f, g):
        return self._impl.multiply(f, g)

    def is_central(self, f):
        return self._impl.is_central(f)

    # convenience wrappers over the subcommands
    def groebner(self, name, side="left"):
        return self.run("groebner", [name], side=side)

    def syzygy(self, name, side="left"):
        return self.run("syzygy", [name], side=side)

    def presentation(self, name, side="left"):
        return self.run("presentation", [name], side=side)

    def resolution(self, name, side="left", max=-1):
        return self.run("resolution", [name], side=side, max=max)

    def tensor(self, m, n):
        return self.run("tensor", [m, n])

    def tor(self, m, n, r):
        return self.run("tor", [m, n], r=r)

    def hom(self, m, n):
        return self.run("hom", [m, n])

    def ext(self, m, n, r):
        return self.run("ext", [m, n], r=r)

    def dual(self, name, delta_a="paper"):
        return self.run("dual", [name], delta_a=delta_a)

    def grade(self, name, max=4, delta_a="paper"):
        return self.run("grade", [name], max=max, delta_a=delta_a)

    def transpose(self, name):
        return self.run("transpose", [name])

    def torsion(self, name):
        return self.run("torsion", [name])

    def stably_free(self, name):
        return self.run("stably-free", [name])

    def torsion_free(self, name):
        return self.run("torsion-free", [name])

    def torsion_module(self, name, delta_a="paper"):
        return self.run("torsion-module", [name], delta_a=delta_a)

    def reflexive(self, name):
        return self.run("reflexive", [name])
