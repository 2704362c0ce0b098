"""Exact sparse polynomials over the colored Tutte variables and z-symbols.

A monomial is an exponent vector over variables ``x/X/y/Y`` per regular color
together with a multiset of pivot-class keys (the z-symbols); coefficients
are exact Python integers. Equality modulo the labeling-independence ideal is
decided by randomized evaluation at points that annihilate the ideal by
construction: sampling integers x, y per color plus two global scalars a, b
and setting X = x + b*y, Y = y + a*x makes every generator of the ideal
vanish identically.
"""

from __future__ import annotations

import hashlib
import random
from typing import Callable, Iterable, Mapping, Union

from .errors import MissingKey, NotLinearInZ
from .graph import EMPTY_KEY, PivotClassKey

VAR_KINDS = ("x", "X", "y", "Y")
_KIND_RANK = {"x": 0, "X": 1, "y": 2, "Y": 3}

# monomial: (vars, zkeys) with vars a sorted tuple of ((kind, color), exp)
# and zkeys a sorted tuple of PivotClassKey
Monomial = tuple[tuple, tuple]


def _merge_zkeys(keys: Iterable[PivotClassKey]) -> tuple:
    """Canonical z-multiset: the empty key is absorbed by any other key."""
    ks = list(keys)
    nonempty = [k for k in ks if k.codes]
    if nonempty:
        return tuple(sorted(nonempty, key=lambda k: k.codes))
    return (EMPTY_KEY,) if ks else ()


def monomial_key(vars_: Iterable[tuple], zkeys: Iterable[PivotClassKey]) -> Monomial:
    """Canonical monomial key from raw ((kind, color), exp) items and z keys."""
    acc: dict = {}
    for (kind, color), exp in vars_:
        acc[(kind, color)] = acc.get((kind, color), 0) + exp
    vt = tuple(sorted(((k, v) for k, v in acc.items() if v), key=lambda it: (it[0][1], _KIND_RANK[it[0][0]])))
    return (vt, _merge_zkeys(zkeys))


def _mul_vars(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    acc = dict(a)
    for var, exp in b:
        acc[var] = acc.get(var, 0) + exp
    return tuple(sorted(acc.items(), key=lambda it: (it[0][1], _KIND_RANK[it[0][0]])))


def _vars_text(vars_: tuple) -> str:
    parts = []
    for (kind, color), exp in vars_:
        parts.append(f"{kind}[{color}]" if exp == 1 else f"{kind}[{color}]^{exp}")
    return "·".join(parts)


def _zkeys_text(zkeys: tuple) -> str:
    return "·".join(k.render() for k in zkeys)


class RelPolynomial:
    """Immutable sparse polynomial with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self._terms = {m: c for m, c in (terms or {}).items() if c != 0}

    # -- constructors -----------------------------------------------------------

    @staticmethod
    def zero() -> "RelPolynomial":
        return _ZERO

    @staticmethod
    def const(c: int) -> "RelPolynomial":
        return RelPolynomial({((), ()): int(c)})

    @staticmethod
    def variable(kind: str, color: str, exp: int = 1) -> "RelPolynomial":
        if kind not in VAR_KINDS:
            raise ValueError(f"unknown variable kind {kind!r}")
        return RelPolynomial({monomial_key((((kind, color), exp),), ()): 1})

    @staticmethod
    def z_symbol(key: PivotClassKey) -> "RelPolynomial":
        return RelPolynomial({((), (key,)): 1})

    @staticmethod
    def monomial(coeff: int, vars_: Iterable[tuple] = (), zkeys: Iterable[PivotClassKey] = ()) -> "RelPolynomial":
        """Build c * prod (kind,color)^exp * prod z_key from raw parts."""
        return RelPolynomial({monomial_key(vars_, zkeys): int(coeff)})

    # -- inspection -------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def terms(self) -> list[tuple[Monomial, int]]:
        """Terms in canonical order: by z-key string, then variable string."""
        return sorted(
            self._terms.items(),
            key=lambda it: (_zkeys_text(it[0][1]), _vars_text(it[0][0])),
        )

    def colors(self) -> set[str]:
        return {color for vars_, _ in self._terms for (kind, color), _e in vars_}

    def zkeys(self) -> set[PivotClassKey]:
        return {k for _, zs in self._terms for k in zs}

    def max_total_degree(self) -> int:
        deg = 0
        for vars_, zs in self._terms:
            deg = max(deg, sum(e for _, e in vars_) + len(zs))
        return deg

    def is_linear_in_z(self) -> bool:
        return all(len(zs) <= 1 for _, zs in self._terms)

    def coefficient(self, mono: Monomial) -> int:
        return self._terms.get(mono, 0)

    # -- arithmetic ----------------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, 0) + c
        return RelPolynomial(acc)

    __radd__ = __add__

    def __neg__(self):
        return RelPolynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict = {}
        for (v1, z1), c1 in self._terms.items():
            for (v2, z2), c2 in other._terms.items():
                m = (_mul_vars(v1, v2), _merge_zkeys(z1 + z2))
                acc[m] = acc.get(m, 0) + c1 * c2
        return RelPolynomial(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = RelPolynomial.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- rendering ---------------------------------------------------------------------

    def render(self) -> str:
        if self.is_zero:
            return "0"
        chunks = []
        for (vars_, zs), coeff in self.terms():
            factors = []
            vt = _vars_text(vars_)
            if vt:
                factors.append(vt)
            zt = _zkeys_text(zs)
            if zt:
                factors.append(zt)
            mag = abs(coeff)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            body = "·".join(factors)
            if not chunks:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(chunks)

    def term_records(self) -> list[dict]:
        """Stable JSON-friendly term list."""
        return [
            {"coeff": coeff, "vars": _vars_text(vars_), "zkey": _zkeys_text(zs)}
            for (vars_, zs), coeff in self.terms()
        ]

    def __repr__(self):
        return f"RelPolynomial({self.render()})"


_ZERO = RelPolynomial({})


def _coerce(x) -> Union[RelPolynomial, type(NotImplemented)]:
    if isinstance(x, RelPolynomial):
        return x
    if isinstance(x, int):
        return RelPolynomial.const(x)
    return NotImplemented


def variable(kind: str, color: str) -> RelPolynomial:
    return RelPolynomial.variable(kind, color)


def z_symbol(key: PivotClassKey) -> RelPolynomial:
    return RelPolynomial.z_symbol(key)


def ideal_generators(lam: str, mu: str) -> tuple[RelPolynomial, RelPolynomial]:
    """The two determinant-difference generators for a pair of colors."""
    x_l, x_m = variable("x", lam), variable("x", mu)
    y_l, y_m = variable("y", lam), variable("y", mu)
    cx_l, cx_m = variable("X", lam), variable("X", mu)
    cy_l, cy_m = variable("Y", lam), variable("Y", mu)
    gen_a = (cx_l * y_m - cx_m * y_l) - (x_l * cy_m - x_m * cy_l)
    gen_b = (x_l * cy_m - x_m * cy_l) - (x_l * y_m - x_m * y_l)
    return gen_a, gen_b


# -- evaluation -----------------------------------------------------------------------


def _hashed_int(seed: int, tag: str, payload: str, lo: int, hi: int) -> int:
    digest = hashlib.sha256(f"{seed}|{tag}|{payload}".encode()).digest()
    return lo + int.from_bytes(digest[:8], "big") % (hi - lo + 1)


class EvaluationPoint:
    """Numeric assignment that annihilates the ideal by construction.

    Per color the point stores integers (x, y); the active weights derive as
    X = x + beta*y and Y = y + alpha*x with two global scalars. z-symbols get
    explicit values or a deterministic seeded-hash default in [2, bound].
    """

    def __init__(
        self,
        xy: Mapping[str, tuple[int, int]] | None = None,
        alpha: int = 0,
        beta: int = 0,
        z_values: Mapping[PivotClassKey, int] | None = None,
        seed: int = 0,
        bound: int = 101,
    ):
        self._xy = dict(xy or {})
        self.alpha = int(alpha)
        self.beta = int(beta)
        self._z = dict(z_values or {})
        self.seed = int(seed)
        self.bound = max(int(bound), 2)

    def _xy_for(self, color: str) -> tuple[int, int]:
        if color not in self._xy:
            x = _hashed_int(self.seed, "x", color, -self.bound, self.bound)
            y = _hashed_int(self.seed, "y", color, -self.bound, self.bound)
            self._xy[color] = (x, y)
        return self._xy[color]

    def var_value(self, kind: str, color: str) -> int:
        x, y = self._xy_for(color)
        if kind == "x":
            return x
        if kind == "y":
            return y
        if kind == "X":
            return x + self.beta * y
        if kind == "Y":
            return y + self.alpha * x
        raise ValueError(f"unknown variable kind {kind!r}")

    def z_value(self, key: PivotClassKey) -> int:
        if key in self._z:
            return self._z[key]
        return _hashed_int(self.seed, "z", ",".join(key.codes), 2, self.bound)

    @staticmethod
    def random(colors: Iterable[str], keys: Iterable[PivotClassKey], bound: int, rng: random.Random) -> "EvaluationPoint":
        xy = {c: (rng.randint(-bound, bound), rng.randint(-bound, bound)) for c in sorted(colors)}
        zv = {k: rng.randint(2, bound) for k in sorted(keys, key=lambda k: k.codes)}
        return EvaluationPoint(
            xy=xy,
            alpha=rng.randint(-bound, bound),
            beta=rng.randint(-bound, bound),
            z_values=zv,
            seed=rng.randint(0, 2**31),
            bound=bound,
        )


def evaluate(p: RelPolynomial, pt: EvaluationPoint) -> int:
    total = 0
    for (vars_, zs), coeff in p._terms.items():
        val = coeff
        for (kind, color), exp in vars_:
            val *= pt.var_value(kind, color) ** exp
        for key in zs:
            val *= pt.z_value(key)
        total += val
    return total


def equal_mod_ideal(
    p: RelPolynomial,
    q: RelPolynomial,
    trials: int = 32,
    seed: int = 0,
) -> bool:
    """Randomized equality test in the quotient by the labeling ideal.

    Sound per trial (ideal members vanish at every sampled point); a nonzero
    difference is detected with high probability since coordinates range over
    an interval wider than the total degree.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    diff = p - q
    if diff.is_zero:
        return True
    bound = 10 * (1 + max(p.max_total_degree(), q.max_total_degree()))
    colors = sorted(diff.colors())
    keys = sorted(diff.zkeys(), key=lambda k: k.codes)
    for t in range(trials):
        rng = random.Random(seed * 1_000_003 + t)
        pt = EvaluationPoint.random(colors, keys, bound, rng)
        if evaluate(diff, pt) != 0:
            return False
    return True


def specialize_psi(
    p: RelPolynomial,
    psi: Mapping[PivotClassKey, RelPolynomial] | Callable[[PivotClassKey], RelPolynomial],
) -> RelPolynomial:
    """Substitute every z-symbol of a z-linear polynomial by its psi image."""
    lookup = psi if callable(psi) else psi.__getitem__
    out = RelPolynomial.zero()
    for (vars_, zs), coeff in p.terms():
        if len(zs) > 1:
            raise NotLinearInZ(f"monomial carries {len(zs)} z-symbols")
        base = RelPolynomial({(vars_, ()): coeff})
        if zs:
            try:
                image = lookup(zs[0])
            except KeyError:
                raise MissingKey(f"psi undefined on {zs[0].render()}") from None
            image = _coerce(image)
            if any(z for _, z in image._terms):
                raise NotLinearInZ("psi image must be free of z-symbols")
            base = base * image
        out = out + base
    return out
