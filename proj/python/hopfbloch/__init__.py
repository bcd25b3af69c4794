"""Two-qubit pure states on base, entanglement and fiber spheres."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import __version__, _map_json, _run_json, _verify_json


def map_state(state, assignment="both"):
    """Output record of one state as a dict (same schema as ``hopfbloch map``)."""
    return _json.loads(_map_json(state, assignment))


def run_circuit(text, steps=True, assignment="both"):
    """Trace a circuit given as text; returns the ``hopfbloch run`` document."""
    return _json.loads(_run_json(text, steps, assignment))


def verify(seed=None, samples=None):
    """Run the invariant suite and return the report as a dict."""
    args = {}
    if seed is not None:
        args["seed"] = seed
    if samples is not None:
        args["samples"] = samples
    return _json.loads(_verify_json(**args))
