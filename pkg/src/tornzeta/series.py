"""Series family descriptors and the compact spec syntax used by the CLI.

A ``SeriesSpec`` names one member of the identity catalog: which family,
plus its integer parameters.  The text syntax is the one accepted on the
command line and echoed in reports, e.g. ``A3:s=2``, ``An:n=4,s=0``,
``halfint:c``, ``baseT:2``, ``ln``, ``tornheim:a=2,b=1,c=1``.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

# family -> tuple of required parameter field names, in syntax order
_PARAM_FIELDS: dict[str, tuple[str, ...]] = {
    "A3": ("s",),
    "An": ("n", "s"),
    "aXL": ("k",),
    "S111": (),
    "LnSeries": (),
    "OnSeries": (),
    "BaseT": ("j",),
    "HalfInt": ("variant",),
    "EvenOddAux": (),
    "OddSquares": (),
    "BInter": (),
    "TornheimRaw": ("a", "b", "c"),
}

# family -> CLI token
_TOKEN_OF_KIND = {
    "A3": "A3",
    "An": "An",
    "aXL": "aXL",
    "S111": "S111",
    "LnSeries": "ln",
    "OnSeries": "on",
    "BaseT": "baseT",
    "HalfInt": "halfint",
    "EvenOddAux": "evenodd",
    "OddSquares": "oddsq",
    "BInter": "binter",
    "TornheimRaw": "tornheim",
}
_KIND_OF_TOKEN = {tok: kind for kind, tok in _TOKEN_OF_KIND.items()}

KINDS = tuple(_PARAM_FIELDS)


@dataclass(frozen=True)
class SeriesSpec:
    """Tagged identifier of one series in the catalog.

    Exactly the parameters belonging to ``kind`` may be set; everything
    else must stay None.  Construction validates ranges, so a SeriesSpec
    that exists is always a convergent, well-posed series.
    """

    kind: str
    s: int | None = None
    n: int | None = None
    k: int | None = None
    j: int | None = None
    variant: str | None = None
    a: int | None = None
    b: int | None = None
    c: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in _PARAM_FIELDS:
            raise ValueError(f"unknown series family {self.kind!r}")
        wanted = _PARAM_FIELDS[self.kind]
        for f in fields(self):
            if f.name == "kind":
                continue
            val = getattr(self, f.name)
            if f.name in wanted:
                if val is None:
                    raise ValueError(f"{self.kind} requires parameter {f.name!r}")
            elif val is not None:
                raise ValueError(f"{self.kind} takes no parameter {f.name!r}")
        self._check_ranges()

    def _check_ranges(self) -> None:
        kind = self.kind
        if kind == "A3" and self.s < 0:
            raise ValueError(f"A3 needs s >= 0, got s={self.s}")
        if kind == "An":
            if self.n < 2:
                raise ValueError(f"An needs n >= 2, got n={self.n}")
            if self.s < 0:
                raise ValueError(f"An needs s >= 0, got s={self.s}")
        if kind == "aXL" and self.k < 0:
            raise ValueError(f"aXL needs k >= 0, got k={self.k}")
        if kind == "BaseT" and self.j not in (1, 2, 3):
            raise ValueError(f"BaseT needs j in 1..3, got j={self.j}")
        if kind == "HalfInt" and self.variant not in ("a", "b", "c"):
            raise ValueError(f"HalfInt variant must be a, b or c, got {self.variant!r}")
        if kind == "TornheimRaw":
            a, b, c = self.a, self.b, self.c
            if min(a, b, c) < 1:
                raise ValueError(f"tornheim needs a, b, c >= 1, got ({a},{b},{c})")
            # convergence region: either weight >= 4 with both cross sums
            # a+c, b+c >= 2, or the boundary case (1,1,1)
            ok = (a + c >= 2 and b + c >= 2 and a + b + c >= 4) or (a, b, c) == (1, 1, 1)
            if not ok:
                raise ValueError(f"tornheim ({a},{b},{c}) diverges; rejected")

    # -- text form ------------------------------------------------------

    def params_text(self) -> str:
        """Parameter part of the syntax: ``s=2``, ``n=4,s=0``, ``c``, ``2``, ``""``."""
        kind = self.kind
        if kind == "BaseT":
            return str(self.j)
        if kind == "HalfInt":
            return self.variant
        return ",".join(f"{name}={getattr(self, name)}" for name in _PARAM_FIELDS[kind])

    def token(self) -> str:
        return _TOKEN_OF_KIND[self.kind]

    def label(self) -> str:
        """Full spec syntax, e.g. ``A3:s=2`` or ``ln``."""
        ptext = self.params_text()
        return f"{self.token()}:{ptext}" if ptext else self.token()

    def __str__(self) -> str:
        return self.label()


def parse_spec(text: str) -> SeriesSpec:
    """Parse the CLI spec syntax back into a SeriesSpec.

    Inverse of ``SeriesSpec.label``; raises ValueError with a usable
    message on unknown families, missing/extra parameters, or values out
    of range.
    """
    text = text.strip()
    token, sep, ptext = text.partition(":")
    kind = _KIND_OF_TOKEN.get(token)
    if kind is None:
        known = ", ".join(sorted(_KIND_OF_TOKEN))
        raise ValueError(f"unknown series spec {token!r}; known: {known}")
    wanted = _PARAM_FIELDS[kind]
    if not sep:
        if wanted:
            raise ValueError(f"{token} requires parameters {','.join(wanted)}; e.g. {token}:{'...'}")
        return SeriesSpec(kind)
    if not wanted:
        raise ValueError(f"{token} takes no parameters, got {ptext!r}")
    if kind == "BaseT":
        return SeriesSpec(kind, j=_parse_int(ptext, "j"))
    if kind == "HalfInt":
        return SeriesSpec(kind, variant=ptext.strip())
    given: dict[str, int] = {}
    for part in ptext.split(","):
        name, eq, val = part.partition("=")
        if not eq:
            raise ValueError(f"malformed parameter {part!r} in {text!r}; expected name=value")
        name = name.strip()
        if name not in wanted:
            raise ValueError(f"{token} takes parameters {','.join(wanted)}, not {name!r}")
        if name in given:
            raise ValueError(f"duplicate parameter {name!r} in {text!r}")
        given[name] = _parse_int(val, name)
    missing = [name for name in wanted if name not in given]
    if missing:
        raise ValueError(f"{token} is missing parameters: {','.join(missing)}")
    return SeriesSpec(kind, **given)


def _parse_int(text: str, name: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise ValueError(f"parameter {name!r} must be an integer, got {text.strip()!r}") from None
