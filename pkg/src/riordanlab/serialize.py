"""Canonical JSON text for every serializable object.

The CLI prints exactly these bytes in --json mode, so a verdict on the
command line is byte-identical to the library's own serialization.
"""

import json


def dumps(obj) -> str:
    return json.dumps(obj)


def loads(text: str):
    return json.loads(text)
