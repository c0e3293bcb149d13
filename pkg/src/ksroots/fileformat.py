"""Configuration files: JSON with a header and one ray per line.

::

    {
      "name": "E7",
      "d": 7,
      "n": 8,
      "ring": "Z[tau]",
      "rays": [
        [[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[1,0],[-1,0]],
        ...
      ]
    }

Each coordinate is the pair ``[a, b]`` for ``a + b*tau``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .config import Configuration, canonical_ray
from .scalar import GoldenInt

RING = "Z[tau]"


class ConfigFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


def dumps(c: Configuration) -> str:
    header = [
        "{",
        f'  "name": {json.dumps(c.name)},',
        f'  "d": {c.d},',
        f'  "n": {c.n},',
        f'  "ring": "{RING}",',
    ]
    if not c.rays:
        return "\n".join(header + ['  "rays": []', "}"]) + "\n"
    body = ['  "rays": [']
    for k, r in enumerate(c.rays):
        coords = ",".join(f"[{x.a},{x.b}]" for x in r.v)
        body.append(f"    [{coords}]" + ("," if k + 1 < len(c.rays) else ""))
    body += ["  ]", "}"]
    return "\n".join(header + body) + "\n"


def loads(text: str) -> Configuration:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigFormatError(exc.msg, exc.lineno) from None
    if not isinstance(doc, dict):
        raise ConfigFormatError("top level must be an object", 1)
    for key in ("d", "n", "rays"):
        if key not in doc:
            raise ConfigFormatError(f"missing field {key!r}", 1)
    if doc.get("ring", RING) != RING:
        raise ConfigFormatError(f"unsupported scalar ring {doc['ring']!r}", _line_of(text, '"ring"'))
    d, n = doc["d"], doc["n"]
    if not isinstance(d, int) or not isinstance(n, int) or d < 0 or n < 0:
        raise ConfigFormatError("d and n must be non-negative integers", _line_of(text, '"d"'))
    first = _line_of(text, '"rays"')
    rays = []
    for k, raw in enumerate(doc["rays"]):
        line = first + 1 + k if first else None
        if not isinstance(raw, list) or len(raw) != n:
            raise ConfigFormatError(f"ray {k} must list {n} coordinate pairs", line)
        coords = []
        for pair in raw:
            if (
                not isinstance(pair, list)
                or len(pair) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in pair)
            ):
                raise ConfigFormatError(f"ray {k}: coordinates must be [a, b] integer pairs", line)
            coords.append(GoldenInt(*pair))
        try:
            r = canonical_ray(coords)
        except ValueError:
            raise ConfigFormatError(f"ray {k} is the zero vector", line) from None
        if r.v != tuple(coords):
            raise ConfigFormatError(f"ray {k} is not in canonical form", line)
        rays.append(r)
    try:
        return Configuration(rays, d, doc.get("name", ""))
    except ValueError as exc:
        raise ConfigFormatError(str(exc), first) from None


def _line_of(text: str, needle: str) -> int | None:
    for i, line in enumerate(text.splitlines(), start=1):
        if needle in line:
            return i
    return None


def save(c: Configuration, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(c))


def load(path: Union[str, Path]) -> Configuration:
    return loads(Path(path).read_text())
