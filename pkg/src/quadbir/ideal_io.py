"""Plain-text files for rings, ideals, and generator lists.

Format:

    # free-form comments
    ring x0 x1 x2 over QQ
    ideal:
    x1^2 - x0*x2
    2*x0 - 1/3*x1

One generator per line after the `ideal:` marker.  Coefficients are
integers or fractions, `*` separates factors (optional between a leading
coefficient and a variable), `^` takes powers.  Serialization is canonical
(terms in descending degree-reverse-lexicographic order), so files
round-trip identically.
"""

from __future__ import annotations

import io

from .groebner import Ideal
from .polyring import Poly, PolyParseError, Ring, format_poly, parse_poly


def parse_ideal_text(text: str) -> Ideal:
    ring: Ring | None = None
    gens: list[Poly] = []
    in_ideal = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("ring "):
            if ring is not None:
                raise PolyParseError("duplicate ring header", lineno)
            body = line[len("ring "):].strip()
            if body.endswith("over QQ"):
                body = body[: -len("over QQ")].strip()
            else:
                raise PolyParseError(
                    "ring header must end with 'over QQ'", lineno
                )
            names = body.split()
            if not names:
                raise PolyParseError("ring header lists no variables", lineno)
            ring = Ring(names)
            continue
        if line == "ideal:":
            if ring is None:
                raise PolyParseError("'ideal:' before the ring header", lineno)
            in_ideal = True
            continue
        if not in_ideal or ring is None:
            raise PolyParseError(f"unexpected content {line!r}", lineno)
        gens.append(parse_poly(ring, line, lineno))
    if ring is None:
        raise PolyParseError("missing ring header", None)
    return Ideal(ring, gens)


def read_ideal(path: str) -> Ideal:
    with open(path, encoding="utf-8") as fh:
        return parse_ideal_text(fh.read())


def serialize_ideal(I: Ideal, comments: list[str] | None = None) -> str:
    out = io.StringIO()
    for c in comments or []:
        out.write(f"# {c}\n")
    out.write("ring " + " ".join(I.ring.variables) + " over QQ\n")
    out.write("ideal:\n")
    for g in I.generators:
        out.write(format_poly(g) + "\n")
    return out.getvalue()


def write_ideal(I: Ideal, path: str, comments: list[str] | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_ideal(I, comments))
