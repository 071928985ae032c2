"""Exact sparse multivariate polynomials over rationals in the indexed
variable families S_j, R_j (j >= 2), p_i, q_i (i >= 1) and the dilation
variable s.

A variable is a pair (family, index) with family one of "S", "R", "p", "q",
"s"; the dilation variable is ("s", 1).  A monomial is a tuple of
(variable, exponent) pairs in canonical order.  All coefficients are
fractions.Fraction; no floating point anywhere.

Canonical text form: terms ordered by descending weight (S_j and R_j weigh
j, all other variables weigh 1), ties broken lexicographically on the
descending variable sequence, e.g. "R7 + 35*R5 + 35*R3*R2 + 84*R3".
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Var = tuple[str, int]
Mono = tuple[tuple[Var, int], ...]

_CANON_RANK = {"s": 0, "p": 1, "q": 2, "R": 3, "S": 4}
_PRINT_RANK = {"S": 0, "R": 1, "p": 2, "q": 3, "s": 4}
_MIN_INDEX = {"S": 2, "R": 2, "p": 1, "q": 1, "s": 1}


def make_var(family: str, index: int = 1) -> Var:
    if family not in _CANON_RANK:
        raise ValueError(f"unknown variable family {family!r}")
    if family == "s" and index != 1:
        raise ValueError("the dilation variable has no index")
    if index < _MIN_INDEX[family]:
        raise ValueError(f"index {index} too small for family {family!r}")
    return (family, index)


def var_name(v: Var) -> str:
    fam, idx = v
    return "s" if fam == "s" else f"{fam}{idx}"


def parse_var_name(name: str) -> Var:
    if name == "s":
        return ("s", 1)
    m = re.fullmatch(r"([SRpq])(\d+)", name)
    if not m:
        raise ValueError(f"malformed variable name {name!r}")
    return make_var(m.group(1), int(m.group(2)))


def _var_key(v: Var) -> tuple[int, int]:
    return (_CANON_RANK[v[0]], v[1])


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) or isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def normalize_mono(mono: Union[Mono, Mapping[Var, int]]) -> Mono:
    if isinstance(mono, tuple):
        pairs = list(mono)
    else:
        pairs = list(mono.items())
    merged: dict[Var, int] = {}
    for var, exp in pairs:
        fam, idx = var
        make_var(fam, idx)
        exp = int(exp)
        if exp < 0:
            raise ValueError("exponents must be nonnegative")
        if exp:
            merged[var] = merged.get(var, 0) + exp
    return tuple(sorted(merged.items(), key=lambda it: _var_key(it[0])))


def mono_weight(mono: Mono) -> int:
    """Grading weight: S_j and R_j weigh j, the p/q/s variables weigh 1."""
    total = 0
    for (fam, idx), exp in mono:
        total += (idx if fam in ("S", "R") else 1) * exp
    return total


def mono_degree(mono: Mono) -> int:
    return sum(exp for _, exp in mono)


def _term_sort_key(mono: Mono):
    seq = []
    for var, exp in sorted(mono, key=lambda it: _var_key(it[0]), reverse=True):
        rank, idx = _var_key(var)
        seq.extend([(-rank, -idx)] * exp)
    return (-mono_weight(mono), tuple(seq))


def _mono_mul(m1: Mono, m2: Mono) -> Mono:
    if not m1:
        return m2
    if not m2:
        return m1
    merged = dict(m1)
    for var, exp in m2:
        merged[var] = merged.get(var, 0) + exp
    return tuple(sorted(merged.items(), key=lambda it: _var_key(it[0])))


class RatPoly:
    """Immutable sparse polynomial; operations return fresh values."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | None = None):
        normalized: dict[Mono, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = _as_fraction(coeff)
                if not coeff:
                    continue
                mono = normalize_mono(mono)
                acc = normalized.get(mono, 0) + coeff
                if acc:
                    normalized[mono] = acc
                elif mono in normalized:
                    del normalized[mono]
        self._terms = normalized

    @classmethod
    def zero(cls) -> "RatPoly":
        return cls()

    @classmethod
    def const(cls, c) -> "RatPoly":
        return cls({(): _as_fraction(c)})

    @classmethod
    def variable(cls, v: Var) -> "RatPoly":
        return cls({((make_var(*v), 1),): Fraction(1)})

    def is_zero(self) -> bool:
        return not self._terms

    def items(self) -> list[tuple[Mono, Fraction]]:
        """Terms in canonical print order."""
        return sorted(self._terms.items(), key=lambda it: _term_sort_key(it[0]))

    def variables(self) -> set[Var]:
        return {var for mono in self._terms for var, _ in mono}

    def total_degree(self) -> int:
        return max((mono_degree(m) for m in self._terms), default=0)

    def coefficient_of(self, mono) -> Fraction:
        return self._terms.get(normalize_mono(mono), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def __eq__(self, other) -> bool:
        if isinstance(other, RatPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == RatPoly.const(other)
        return NotImplemented

    __hash__ = None

    def __add__(self, other) -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            other = RatPoly.const(other)
        if not isinstance(other, RatPoly):
            return NotImplemented
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            acc = out.get(mono, 0) + coeff
            if acc:
                out[mono] = acc
            elif mono in out:
                del out[mono]
        return self._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> "RatPoly":
        return self._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "RatPoly":
        return self + (-other if isinstance(other, RatPoly) else RatPoly.const(-_as_fraction(other)))

    def __rsub__(self, other) -> "RatPoly":
        return (-self) + other

    def __mul__(self, other) -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return RatPoly.zero()
            return self._wrap({m: v * c for m, v in self._terms.items()})
        if not isinstance(other, RatPoly):
            return NotImplemented
        out: dict[Mono, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = _mono_mul(m1, m2)
                acc = out.get(mono, 0) + c1 * c2
                if acc:
                    out[mono] = acc
                elif mono in out:
                    del out[mono]
        return self._wrap(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RatPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = RatPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    @classmethod
    def _wrap(cls, terms: dict[Mono, Fraction]) -> "RatPoly":
        poly = cls.__new__(cls)
        poly._terms = terms
        return poly

    def _diff(self, v: Var) -> "RatPoly":
        out: dict[Mono, Fraction] = {}
        for mono, coeff in self._terms.items():
            for pos, (var, exp) in enumerate(mono):
                if var == v:
                    if exp == 1:
                        new = mono[:pos] + mono[pos + 1:]
                    else:
                        new = mono[:pos] + ((var, exp - 1),) + mono[pos + 1:]
                    acc = out.get(new, 0) + coeff * exp
                    if acc:
                        out[new] = acc
                    elif new in out:
                        del out[new]
                    break
        return self._wrap(out)

    def derivative_at_zero(self, variables: Iterable[Var]) -> Fraction:
        """Iterated partial derivative, then every S- and R-family variable
        set to 0.  The p/q/s variables are never implicitly zeroed; a
        non-constant remainder in them is an error."""
        poly = self
        for v in variables:
            poly = poly._diff(make_var(*v))
        result = Fraction(0)
        for mono, coeff in poly._terms.items():
            if any(fam in ("S", "R") for (fam, _), _ in mono):
                continue
            if mono:
                raise ValueError(
                    "derivative does not evaluate to a constant; "
                    f"p/q/s variables remain: {mono}")
            result = coeff
        return result

    def evaluate(self, assignment: Mapping[Var, object]) -> Fraction:
        values = {make_var(*v): _as_fraction(x) for v, x in assignment.items()}
        missing = self.variables() - set(values)
        if missing:
            names = ", ".join(sorted(var_name(v) for v in missing))
            raise KeyError(f"assignment missing variables: {names}")
        total = Fraction(0)
        for mono, coeff in self._terms.items():
            term = coeff
            for var, exp in mono:
                term *= values[var] ** exp
            total += term
        return total

    def substitute(self, replacements: Mapping[Var, "RatPoly"]) -> "RatPoly":
        """Replace variables by polynomials; unmentioned variables persist."""
        reps = {make_var(*v): poly for v, poly in replacements.items()}
        total = RatPoly.zero()
        for mono, coeff in self._terms.items():
            term = RatPoly.const(coeff)
            for var, exp in mono:
                base = reps.get(var)
                if base is None:
                    base = RatPoly.variable(var)
                term = term * base ** exp
            total = total + term
        return total

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for mono, coeff in self.items():
            pieces = []
            for var, exp in sorted(mono, key=lambda it: (_PRINT_RANK[it[0][0]], -it[0][1])):
                pieces.append(var_name(var) if exp == 1 else f"{var_name(var)}^{exp}")
            mag = abs(coeff)
            if not pieces:
                body = str(mag)
            elif mag == 1:
                body = "*".join(pieces)
            else:
                body = "*".join([str(mag)] + pieces)
            if not chunks:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f" + {body}" if coeff > 0 else f" - {body}")
        return "".join(chunks)

    __repr__ = __str__

    @classmethod
    def from_text(cls, text: str) -> "RatPoly":
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        if s == "0":
            return cls.zero()
        terms: dict[Mono, Fraction] = {}
        for chunk in re.findall(r"[+-]?[^+-]+", s):
            sign = Fraction(1)
            if chunk[0] in "+-":
                if chunk[0] == "-":
                    sign = Fraction(-1)
                chunk = chunk[1:]
            coeff = sign
            mono: dict[Var, int] = {}
            for piece in chunk.split("*"):
                num = re.fullmatch(r"(\d+)(?:/(\d+))?", piece)
                if num:
                    coeff *= Fraction(int(num.group(1)), int(num.group(2) or 1))
                    continue
                var_m = re.fullmatch(r"([SRpq]\d+|s)(?:\^(\d+))?", piece)
                if not var_m:
                    raise ValueError(f"malformed term piece {piece!r}")
                var = parse_var_name(var_m.group(1))
                mono[var] = mono.get(var, 0) + int(var_m.group(2) or 1)
            key = normalize_mono(mono)
            acc = terms.get(key, 0) + coeff
            if acc:
                terms[key] = acc
            elif key in terms:
                del terms[key]
        return cls._wrap(terms)

    def to_json_dict(self) -> dict:
        return {
            "terms": [
                {"mono": {var_name(v): e for v, e in mono}, "coeff": str(coeff)}
                for mono, coeff in self.items()
            ]
        }

    @classmethod
    def from_json_dict(cls, doc: Mapping) -> "RatPoly":
        terms: dict[Mono, Fraction] = {}
        for entry in doc["terms"]:
            mono = normalize_mono({parse_var_name(n): e for n, e in entry["mono"].items()})
            acc = terms.get(mono, 0) + Fraction(entry["coeff"])
            if acc:
                terms[mono] = acc
            elif mono in terms:
                del terms[mono]
        return cls._wrap(terms)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "RatPoly":
        return cls.from_json_dict(json.loads(text))


def S(j: int) -> RatPoly:
    return RatPoly.variable(("S", j))


def R(j: int) -> RatPoly:
    return RatPoly.variable(("R", j))


def P(i: int) -> RatPoly:
    return RatPoly.variable(("p", i))


def Q(i: int) -> RatPoly:
    return RatPoly.variable(("q", i))


def dilation_var() -> RatPoly:
    return RatPoly.variable(("s", 1))


def interpolate_univariate(points: Sequence[tuple], max_degree: int) -> RatPoly:
    """Exact Lagrange interpolation in the dilation variable s.

    Requires at least max_degree + 1 points with distinct abscissae.  Points
    beyond the first max_degree + 1 must be consistent with the degree bound,
    otherwise ValueError("degree bound violated") is raised.
    """
    pts = [(_as_fraction(x), _as_fraction(y)) for x, y in points]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("abscissae must be distinct")
    if len(pts) < max_degree + 1:
        raise ValueError(f"need at least {max_degree + 1} points, got {len(pts)}")
    base, rest = pts[:max_degree + 1], pts[max_degree + 1:]
    svar = dilation_var()
    poly = RatPoly.zero()
    for i, (xi, yi) in enumerate(base):
        if not yi:
            continue
        basis = RatPoly.const(yi)
        for j, (xj, _) in enumerate(base):
            if j == i:
                continue
            basis = basis * (svar - RatPoly.const(xj)) * Fraction(1, xi - xj)
        poly = poly + basis
    for x, y in rest:
        if poly.evaluate({("s", 1): x}) != y:
            raise ValueError("degree bound violated")
    return poly
