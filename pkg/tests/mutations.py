"""Single-field mutations of serialized certificates."""

import copy
import json

from staircase_kit.certify import deserialize
from staircase_kit.errors import MalformedCertificate, StaircaseKitError
from staircase_kit.extcalc import reduce_to_maximal


def _leaves(obj, path=()):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _leaves(v, path + (k,))
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            yield from _leaves(v, path + (i,))
    else:
        yield path, obj


def _set(obj, path, value):
    for key in path[:-1]:
        obj = obj[key]
    obj[path[-1]] = value


def _delete(obj, path):
    for key in path[:-1]:
        obj = obj[key]
    del obj[path[-1]]


def single_field_mutations(data: bytes):
    """Yield (description, mutated bytes): every integer ±1, every axis and sign
    flipped, every exponent pair and every step dropped."""
    obj = json.loads(data)
    for path, value in _leaves(obj):
        if isinstance(value, int) and not isinstance(value, bool):
            for delta in (1, -1):
                m = copy.deepcopy(obj)
                _set(m, path, value + delta)
                yield f"{path} {value}->{value + delta}", json.dumps(m).encode()
        elif value in ("x", "y"):
            m = copy.deepcopy(obj)
            _set(m, path, "y" if value == "x" else "x")
            yield f"{path} axis flip", json.dumps(m).encode()
        elif value in ("+", "-"):
            m = copy.deepcopy(obj)
            _set(m, path, "+" if value == "-" else "-")
            yield f"{path} sign flip", json.dumps(m).encode()
    for path, value in list(_walk_lists(obj)):
        for i in range(len(value)):
            m = copy.deepcopy(obj)
            _delete(m, path + (i,))
            yield f"{path} drop {i}", json.dumps(m).encode()


def _walk_lists(obj, path=()):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _walk_lists(v, path + (k,))
    elif isinstance(obj, list):
        if obj and not all(isinstance(v, int) for v in obj):
            yield path, obj
        for i, v in enumerate(obj):
            yield from _walk_lists(v, path + (i,))


def is_genuine(data: bytes) -> bool:
    """Whether the bytes are exactly what the engine emits for their own ring and
    initial ideal, i.e. the mutation produced a different but honest certificate."""
    try:
        cert = deserialize(data)
        return reduce_to_maximal(cert.initial_ideal) == cert
    except (MalformedCertificate, StaircaseKitError):
        return False
