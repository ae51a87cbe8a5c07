"""Python front end for the liouville-lab core."""

import json

from ._liouville_lab import (
    InputError,
    NumericalError,
    cayley_inverse,
    cayley_map,
    construct_cotamed,
    cotamed_exists,
    pfaffian,
    ray_nondegenerate,
    run,
    segment_nondegenerate,
    set_threads,
    standard_omega,
    tames,
)
from . import _liouville_lab as _core

__all__ = [
    "InputError",
    "NumericalError",
    "cayley_inverse",
    "cayley_map",
    "construct_cotamed",
    "cotamed_exists",
    "pair_certificate",
    "pencil_reduce",
    "pfaffian",
    "ray_nondegenerate",
    "run",
    "run_json",
    "segment_nondegenerate",
    "set_threads",
    "standard_omega",
    "tames",
    "units",
]


def _ints(x):
    if isinstance(x, str):
        return int(x)
    if isinstance(x, list):
        return [_ints(v) for v in x]
    return x


def run_json(*args):
    """Run a command with --json; returns (exit code, report dict)."""
    code, out, err = run([*args, "--json"])
    if not out:
        raise InputError(err.strip())
    return code, json.loads(out)


def units(coeffs, box=0):
    """Units, positive units, Gamma basis and monodromy of Z[X]/(f), f given by ascending coefficients."""
    d = json.loads(_core._units(list(coeffs), box))
    for key in ("torsion", "free", "positive_free", "monodromy"):
        d[key] = _ints(d[key])
    return d


def pencil_reduce(A0, A1, eps=1e-3):
    return json.loads(_core._pencil_reduce(A0, A1, eps))


def pair_certificate(preset):
    return json.loads(_core._pair_certificate(preset))
