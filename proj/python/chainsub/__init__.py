"""Submodule categories over truncated chain rings."""

import json

from ._core import Error, commutant_dim, run

__all__ = [
    "CommandError",
    "Error",
    "commutant_dim",
    "end_quotient",
    "f_apply",
    "g_embed",
    "hom",
    "phi_apply",
    "run",
    "truncpoly",
    "verify",
    "zmod",
]


class CommandError(RuntimeError):
    def __init__(self, code, message):
        super().__init__(message.strip())
        self.code = code


def _call(subcommand, payload=None, ring=None, allow_failure=False, **flags):
    args = [subcommand]
    if payload is not None:
        args += ["--json", json.dumps(payload)]
    if ring is not None:
        args += ["--ring", json.dumps(ring)]
    for key, value in flags.items():
        args += ["--" + key, str(value)]
    code, out, err = run(args)
    if code == 2 or (code != 0 and not allow_failure) or not out:
        raise CommandError(code, err)
    return json.loads(out)


def zmod(p, n):
    return {"kind": "zmod", "p": p, "n": n}


def truncpoly(q, n):
    return {"kind": "truncpoly", "q": q, "n": n}


def g_embed(X, Y, p=None, q=None, n=7):
    payload = {"n": n, "X": X, "Y": Y}
    if q is None:
        payload["p"] = 2 if p is None else p
    else:
        payload["q"] = q
    return _call("g-embed", payload)


def hom(source, target, ring=None, through_I=False):
    return _call("hom", {"source": source, "target": target, "through_I": through_I}, ring)


def f_apply(obj, m=None, ring=None):
    payload = {"object": obj}
    if m is not None:
        payload["m"] = m
    return _call("f-apply", payload, ring)


def phi_apply(triple, ring=None):
    return _call("phi-apply", {"triple": triple}, ring)


def end_quotient(obj, ring=None):
    return _call("end-quotient", {"object": obj}, ring)


def verify(seed=1):
    return _call("verify", seed=seed, allow_failure=True)
