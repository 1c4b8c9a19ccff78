"""Report envelopes and user-instance files.

Reports carry the version tag ``coring-lab/1``; rationals are serialized as
``"p/q"`` strings and field elements as coefficient vectors over the ground
tower.  Identical inputs produce byte-identical output: keys are sorted,
nothing carries a timestamp, and optional timing fields are opt-in.

Input files describe an instance of the cyclic-algebra family plus
user-supplied subalgebra generators and coideal generator sets; validation
failures point at the offending node with a JSON pointer.
"""

import json
from fractions import Fraction

SCHEMA = "coring-lab/1"


class SchemaError(ValueError):
    """Malformed input; ``pointer`` locates the node."""

    def __init__(self, message, pointer):
        super().__init__("%s (at %s)" % (message, pointer or "/"))
        self.pointer = pointer or "/"


def frac_str(q):
    q = Fraction(q)
    return "%d/%d" % (q.numerator, q.denominator)


def qvec_str(vec):
    return [frac_str(c) for c in vec]


def parse_frac(value, pointer):
    if isinstance(value, bool):
        raise SchemaError("expected a rational", pointer)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise SchemaError("not a rational %r" % value, pointer) from None
    raise SchemaError("expected a rational string", pointer)


def parse_qvec(value, length, pointer):
    if not isinstance(value, list):
        raise SchemaError("expected a coefficient vector", pointer)
    if length is not None and len(value) != length:
        raise SchemaError(
            "expected %d coefficients, got %d" % (length, len(value)), pointer
        )
    return [parse_frac(v, "%s/%d" % (pointer, i)) for i, v in enumerate(value)]


def _expect(cond, message, pointer):
    if not cond:
        raise SchemaError(message, pointer)


def load_instance_file(path):
    """Parse and validate a user instance description.

    Returns a plain dict: instance id, family parameters (rationals as
    Fraction, absent keys omitted), and raw subalgebra/coideal entries with
    coefficient vectors already parsed (field-element assembly needs the
    built tower and happens in the command layer).
    """
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as e:
        raise SchemaError("cannot read input: %s" % e, "") from None
    except json.JSONDecodeError as e:
        raise SchemaError("invalid JSON: %s" % e, "") from None
    _expect(isinstance(doc, dict), "expected an object", "")
    _expect(doc.get("schema") == SCHEMA,
            "expected schema %r" % SCHEMA, "/schema")
    out = {"instance": doc.get("instance", "aomega")}
    _expect(isinstance(out["instance"], str), "expected a string", "/instance")
    params = doc.get("params", {})
    _expect(isinstance(params, dict), "expected an object", "/params")
    parsed = {}
    for key, val in params.items():
        ptr = "/params/%s" % key
        if key == "n":
            _expect(isinstance(val, int) and not isinstance(val, bool),
                    "expected an integer", ptr)
            parsed[key] = val
        elif key == "field":
            _expect(isinstance(val, str), "expected a preset name", ptr)
            parsed[key] = val
        elif key in ("omega", "alpha", "beta"):
            parsed[key] = parse_frac(val, ptr)
        else:
            raise SchemaError("unknown parameter %r" % key, ptr)
    out["params"] = parsed
    out["subalgebras"] = []
    subs = doc.get("subalgebras", [])
    _expect(isinstance(subs, list), "expected a list", "/subalgebras")
    for i, entry in enumerate(subs):
        ptr = "/subalgebras/%d" % i
        _expect(isinstance(entry, dict), "expected an object", ptr)
        name = entry.get("name")
        _expect(isinstance(name, str) and name, "expected a name", ptr + "/name")
        mats = entry.get("matrices")
        _expect(isinstance(mats, list) and mats, "expected generator matrices",
                ptr + "/matrices")
        gens = []
        for j, mat in enumerate(mats):
            mptr = "%s/matrices/%d" % (ptr, j)
            _expect(isinstance(mat, list) and mat, "expected a matrix", mptr)
            rows = []
            for r, row in enumerate(mat):
                rptr = "%s/%d" % (mptr, r)
                _expect(isinstance(row, list) and len(row) == len(mat),
                        "expected a square matrix row", rptr)
                rows.append([
                    parse_qvec(cell, None, "%s/%d" % (rptr, c))
                    for c, cell in enumerate(row)
                ])
            gens.append(rows)
        out["subalgebras"].append({"name": name, "matrices": gens})
    out["coideals"] = []
    coids = doc.get("coideals", [])
    _expect(isinstance(coids, list), "expected a list", "/coideals")
    for i, entry in enumerate(coids):
        ptr = "/coideals/%d" % i
        _expect(isinstance(entry, dict), "expected an object", ptr)
        name = entry.get("name")
        _expect(isinstance(name, str) and name, "expected a name", ptr + "/name")
        gens = entry.get("generators")
        _expect(isinstance(gens, list) and gens, "expected generator vectors",
                ptr + "/generators")
        out["coideals"].append({
            "name": name,
            "generators": [
                parse_qvec(g, None, "%s/generators/%d" % (ptr, j))
                for j, g in enumerate(gens)
            ],
        })
    extra = set(doc) - {"schema", "instance", "params", "subalgebras", "coideals"}
    _expect(not extra, "unknown keys %s" % sorted(extra), "")
    return out


def envelope(command, payload):
    out = {"schema": SCHEMA, "command": command}
    out.update(payload)
    return out


def dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
