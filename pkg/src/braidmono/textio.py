"""
Text formats for braid words, factorizations, arrangements, presentations
and rule assignments.

All formats are line based; blank lines and lines starting with `#` are
ignored.  Every emitter round-trips bit-exactly through its parser.

braid word          strands 3
                    s1 s2 S1
factorization       strands 3
                    factors 2
                    conj= s2 ; base= 1 2 ; exp= 2
                    conj= ; block= 1 3 ; exp= 2
arrangement         arrangement 3
                    line 1/2 -3/4
                    line 0 1
                    line -2 5/3
presentation        gens 2
                    x1 x2 X1 X2
rule assignment     0 II
                    1 pass
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .braid import BraidWord, HalfTwist, format_letters, parse_letters
from .factorization import BlockFactor, Factor, Factorization, StructuredFactor
from .arrangements import LineArrangement
from .regeneration import Rule
from .vankampen import FreeWord, Presentation


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{message}{where}")


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((no, line))
    return out


def _header(lines: list[tuple[int, str]], keyword: str) -> int:
    if not lines:
        raise ParseError(f"empty input, expected `{keyword} <n>` header")
    no, line = lines[0]
    parts = line.split()
    if len(parts) != 2 or parts[0] != keyword or not parts[1].lstrip("-").isdigit():
        raise ParseError(f"expected `{keyword} <n>` header, got {line!r}", no)
    return int(parts[1])


# --- braid words -----------------------------------------------------------


def parse_braid_word(text: str) -> BraidWord:
    lines = _content_lines(text)
    m = _header(lines, "strands")
    tokens: list[str] = []
    for _no, line in lines[1:]:
        tokens.extend(line.split())
    try:
        return BraidWord(m, parse_letters(tokens))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_braid_word(w: BraidWord) -> str:
    body = format_letters(w.letters)
    return f"strands {w.strands}\n{body}\n" if body else f"strands {w.strands}\n"


# --- factorizations --------------------------------------------------------


def _parse_factor(m: int, no: int, line: str) -> Factor:
    fields = [f.strip() for f in line.split(";")]
    conj_tokens: list[str] | None = None
    base: tuple[int, int] | None = None
    block: tuple[int, int] | None = None
    exp: int | None = None
    for field in fields:
        if field.startswith("conj="):
            conj_tokens = field[len("conj=") :].split()
        elif field.startswith("base="):
            parts = field[len("base=") :].split()
            if len(parts) != 2:
                raise ParseError("base= needs two strand indices", no)
            base = (int(parts[0]), int(parts[1]))
        elif field.startswith("block="):
            parts = field[len("block=") :].split()
            if len(parts) != 2:
                raise ParseError("block= needs two strand indices", no)
            block = (int(parts[0]), int(parts[1]))
        elif field.startswith("exp="):
            exp = int(field[len("exp=") :])
        elif field:
            raise ParseError(f"unknown factor field {field!r}", no)
    if conj_tokens is None or exp is None or (base is None) == (block is None):
        raise ParseError(
            "factor needs conj=, exp= and exactly one of base=/block=", no
        )
    try:
        conj = BraidWord(m, parse_letters(conj_tokens))
        if base is not None:
            return StructuredFactor(conj, HalfTwist(m, base[0], base[1]), exp)
        return BlockFactor(conj, block[0], block[1], exp)
    except ValueError as exc:
        raise ParseError(str(exc), no) from exc


def parse_factorization(text: str) -> Factorization:
    lines = _content_lines(text)
    m = _header(lines, "strands")
    if len(lines) < 2:
        raise ParseError("expected `factors <n>` after the strands header")
    count_no, count_line = lines[1]
    parts = count_line.split()
    if len(parts) != 2 or parts[0] != "factors" or not parts[1].isdigit():
        raise ParseError(f"expected `factors <n>`, got {count_line!r}", count_no)
    n = int(parts[1])
    body = lines[2:]
    if len(body) != n:
        raise ParseError(
            f"declared {n} factors but found {len(body)} factor lines"
        )
    factors = tuple(_parse_factor(m, no, line) for no, line in body)
    try:
        return Factorization(m, factors)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_factorization(fact: Factorization, header_comments: Iterable[str] = ()) -> str:
    out = [f"# {line}" for line in header_comments]
    out.append(f"strands {fact.strands}")
    out.append(f"factors {len(fact.factors)}")
    for f in fact.factors:
        conj = format_letters(f.conjugator.letters)
        conj_field = f"conj= {conj}" if conj else "conj="
        if isinstance(f, StructuredFactor):
            out.append(
                f"{conj_field} ; base= {f.base.low} {f.base.high} ; exp= {f.exponent}"
            )
        else:
            out.append(
                f"{conj_field} ; block= {f.low} {f.high} ; exp= {f.exponent}"
            )
    return "\n".join(out) + "\n"


# --- arrangements ----------------------------------------------------------


def _parse_rational(token: str, no: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {token!r}", no) from exc


def parse_arrangement(text: str) -> LineArrangement:
    lines = _content_lines(text)
    m = _header(lines, "arrangement")
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"declared {m} lines but found {len(body)}")
    pairs = []
    for no, line in body:
        parts = line.split()
        if len(parts) != 3 or parts[0] != "line":
            raise ParseError(f"expected `line <slope> <intercept>`, got {line!r}", no)
        pairs.append((_parse_rational(parts[1], no), _parse_rational(parts[2], no)))
    try:
        return LineArrangement.from_pairs(pairs)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_arrangement(arr: LineArrangement) -> str:
    out = [f"arrangement {arr.m}"]
    for a, b in arr.lines:
        out.append(f"line {a} {b}")
    return "\n".join(out) + "\n"


# --- presentations ----------------------------------------------------------


def parse_presentation(text: str) -> Presentation:
    lines = _content_lines(text)
    m = _header(lines, "gens")
    relators = []
    for no, line in lines[1:]:
        letters = []
        for tok in line.split():
            if len(tok) < 2 or tok[0] not in "xX" or not tok[1:].isdigit():
                raise ParseError(f"bad generator token {tok!r}", no)
            k = int(tok[1:])
            letters.append(k if tok[0] == "x" else -k)
        relators.append(FreeWord.reduce(letters))
    try:
        return Presentation(m, tuple(relators))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_presentation(pres: Presentation) -> str:
    out = [f"gens {pres.generator_count}"]
    for rel in pres.relators:
        out.append(" ".join(f"x{l}" if l > 0 else f"X{-l}" for l in rel.letters))
    return "\n".join(out) + "\n"


# --- rule assignments --------------------------------------------------------


def parse_rules(text: str) -> dict[int, Rule]:
    out: dict[int, Rule] = {}
    for no, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 2 or not parts[0].isdigit():
            raise ParseError(f"expected `<index> I|II|III|pass`, got {line!r}", no)
        try:
            rule = Rule(parts[1])
        except ValueError as exc:
            raise ParseError(f"unknown rule {parts[1]!r}", no) from exc
        out[int(parts[0])] = rule
    return out


def format_rules(rules: dict[int, Rule]) -> str:
    return "\n".join(f"{idx} {rule.value}" for idx, rule in sorted(rules.items())) + "\n"
