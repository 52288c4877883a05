"""Exact supercommutative polynomial arithmetic.

A polynomial lives in C[x_1..x_nb ; t_1..t_nf] where the x_i are ordinary
(bosonic) commuting variables and the t_p are fermionic: t_p t_q = -t_q t_p,
so t_p^2 = 0.  A monomial is a pair

    SuperMonomial(bos, mask)

where ``bos`` is the tuple of bosonic exponents and ``mask`` is a bitset of
the fermionic factors present, always read in ascending index order (bit p-1
set means t_p is a factor).  That ascending order is the canonical form; all
signs produced by reordering are absorbed into coefficients.

Coefficients are ``fractions.Fraction`` and zero coefficients are never
stored, so the zero polynomial is the one with an empty term map.

Two conventions are pinned here and relied on everywhere else:

* fermionic derivatives are LEFT derivatives: on a canonical monomial that
  contains t_q in position s (1-based among the fermionic factors), d/dt_q
  removes t_q and multiplies by (-1)**(s-1);
* an operator chain acts rightmost-action-first, i.e. the chain (a, b, c)
  sends p to a(b(c(p))).

Both choices are validated downstream by demanding that the matrix-unit
realizations actually define representations and that the quadratic
invariant is harmonic; any other combination of conventions fails those
checks.

The text format for polynomials is ``c * x1^2 x3 t1 t4`` with terms joined
by " + ", rational coefficients printed as ``p/q`` or an integer, and
exponent 1 omitted.  ``parse_poly`` accepts the same grammar (the ``c *``
part may be omitted when c == 1).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, NamedTuple


class VariableSignature(NamedTuple):
    """Number of bosonic and fermionic variables of an algebra."""

    num_bosonic: int
    num_fermionic: int

    def check(self) -> "VariableSignature":
        if self.num_bosonic < 0 or self.num_fermionic < 0:
            raise ValueError("variable counts must be nonnegative")
        return self


class SuperMonomial(NamedTuple):
    """Canonical monomial: bosonic exponent tuple + fermionic bitset."""

    bos: tuple[int, ...]
    mask: int

    @property
    def fermionic_degree(self) -> int:
        return _popcount(self.mask)

    @property
    def total_degree(self) -> int:
        return sum(self.bos) + _popcount(self.mask)

    def sort_key(self):
        """Graded lexicographic: (total degree, exponent vector, mask)."""
        return (self.total_degree, self.bos, self.mask)


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _low_bits(p: int) -> int:
    """Bitmask of all fermionic indices strictly below 1-based index p."""
    return (1 << (p - 1)) - 1


def mono_one(sig: VariableSignature) -> SuperMonomial:
    return SuperMonomial((0,) * sig.num_bosonic, 0)


def mono_mul(a: SuperMonomial, b: SuperMonomial):
    """Multiply canonical monomials.

    Returns (sign, product) with sign in {+1, -1}, or None when the product
    vanishes because the two share a fermionic factor.  The sign counts the
    transpositions needed to interleave the two ascending fermionic lists.
    """
    if len(a.bos) != len(b.bos):
        raise ValueError("monomials from different signatures")
    if a.mask & b.mask:
        return None
    # Each factor of b below a factor of a must jump over it.
    inversions = 0
    rest = a.mask
    while rest:
        low = rest & -rest
        inversions += _popcount(b.mask & (low - 1))
        rest ^= low
    bos = tuple(x + y for x, y in zip(a.bos, b.bos))
    return (-1 if inversions & 1 else 1, SuperMonomial(bos, a.mask | b.mask))


# Atomic operator actions; chains are applied rightmost-first.
MUL_X, MUL_T, DER_X, DER_T = 0, 1, 2, 3
_ACTION_NAMES = {MUL_X: "x", MUL_T: "t", DER_X: "dx", DER_T: "dt"}


class SuperPolynomial:
    """Sparse exact polynomial: map from SuperMonomial to nonzero Fraction."""

    __slots__ = ("sig", "terms")

    def __init__(self, sig: VariableSignature, terms=None):
        self.sig = sig
        self.terms: dict[SuperMonomial, Fraction] = terms if terms is not None else {}

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(sig: VariableSignature) -> "SuperPolynomial":
        return SuperPolynomial(sig)

    @staticmethod
    def one(sig: VariableSignature) -> "SuperPolynomial":
        return SuperPolynomial(sig, {mono_one(sig): Fraction(1)})

    @staticmethod
    def from_monomial(sig, mono: SuperMonomial, coeff=1) -> "SuperPolynomial":
        c = Fraction(coeff)
        if c == 0:
            return SuperPolynomial(sig)
        return SuperPolynomial(sig, {mono: c})

    @staticmethod
    def x(sig: VariableSignature, i: int) -> "SuperPolynomial":
        """The bosonic variable x_i (1-based)."""
        if not 1 <= i <= sig.num_bosonic:
            raise ValueError(f"x{i} outside signature {sig}")
        bos = tuple(1 if j == i - 1 else 0 for j in range(sig.num_bosonic))
        return SuperPolynomial(sig, {SuperMonomial(bos, 0): Fraction(1)})

    @staticmethod
    def theta(sig: VariableSignature, p: int) -> "SuperPolynomial":
        """The fermionic variable t_p (1-based)."""
        if not 1 <= p <= sig.num_fermionic:
            raise ValueError(f"t{p} outside signature {sig}")
        return SuperPolynomial(
            sig, {SuperMonomial((0,) * sig.num_bosonic, 1 << (p - 1)): Fraction(1)}
        )

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def max_degree(self) -> int:
        """Largest total degree among terms; -1 for the zero polynomial."""
        return max((m.total_degree for m in self.terms), default=-1)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def __eq__(self, other):
        return (
            isinstance(other, SuperPolynomial)
            and self.sig == other.sig
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.sig, frozenset(self.terms.items())))

    # -- arithmetic ----------------------------------------------------

    def _check_sig(self, other: "SuperPolynomial"):
        if self.sig != other.sig:
            raise ValueError(f"signature mismatch: {self.sig} vs {other.sig}")

    def __add__(self, other: "SuperPolynomial") -> "SuperPolynomial":
        self._check_sig(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return SuperPolynomial(self.sig, out)

    def __neg__(self) -> "SuperPolynomial":
        return SuperPolynomial(self.sig, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "SuperPolynomial") -> "SuperPolynomial":
        return self + (-other)

    def scale(self, c) -> "SuperPolynomial":
        c = Fraction(c)
        if c == 0:
            return SuperPolynomial(self.sig)
        return SuperPolynomial(self.sig, {m: c * v for m, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_sig(other)
        out: dict[SuperMonomial, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                sm = mono_mul(ma, mb)
                if sm is None:
                    continue
                sign, m = sm
                s = out.get(m, 0) + sign * ca * cb
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return SuperPolynomial(self.sig, out)

    def __pow__(self, e: int) -> "SuperPolynomial":
        if e < 0:
            raise ValueError("negative power")
        result = SuperPolynomial.one(self.sig)
        for _ in range(e):
            result = result * self
        return result

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"SuperPolynomial({format_poly(self)!r})"


def derive(p: SuperPolynomial, var: tuple[str, int]) -> SuperPolynomial:
    """Left super-derivative by ("x", i) or ("t", q), 1-based indices."""
    kind, idx = var
    if kind == "x":
        if not 1 <= idx <= p.sig.num_bosonic:
            raise ValueError(f"x{idx} outside signature {p.sig}")
        action = (DER_X, idx - 1)
    elif kind == "t":
        if not 1 <= idx <= p.sig.num_fermionic:
            raise ValueError(f"t{idx} outside signature {p.sig}")
        action = (DER_T, idx - 1)
    else:
        raise ValueError(f"unknown variable kind {kind!r}")
    out: dict[SuperMonomial, Fraction] = {}
    for m, c in p.terms.items():
        _apply_action_into(action, m, c, out)
    return SuperPolynomial(p.sig, out)


def _apply_action_into(action, mono: SuperMonomial, coeff: Fraction, out: dict):
    """Apply one atomic action to coeff*mono, accumulating into out."""
    kind, i = action
    bos, mask = mono
    if kind == MUL_X:
        bos = bos[:i] + (bos[i] + 1,) + bos[i + 1 :]
    elif kind == DER_X:
        e = bos[i]
        if e == 0:
            return
        coeff = coeff * e
        bos = bos[:i] + (e - 1,) + bos[i + 1 :]
    elif kind == MUL_T:
        bit = 1 << i
        if mask & bit:
            return
        if _popcount(mask & (bit - 1)) & 1:
            coeff = -coeff
        mask |= bit
    else:  # DER_T, left derivative
        bit = 1 << i
        if not mask & bit:
            return
        if _popcount(mask & (bit - 1)) & 1:
            coeff = -coeff
        mask &= ~bit
    key = SuperMonomial(bos, mask)
    s = out.get(key, 0) + coeff
    if s:
        out[key] = s
    else:
        out.pop(key, None)


class SuperOperator:
    """Formal sum of signed atomic-action chains with a declared parity.

    atoms: list of (coefficient, chain) where chain is a tuple of atomic
    actions applied rightmost-first.  Parity 0 (even) or 1 (odd) must equal
    the number of fermionic actions mod 2 in every atom.
    """

    __slots__ = ("sig", "atoms", "parity")

    def __init__(self, sig: VariableSignature, atoms, parity: int):
        self.sig = sig
        self.atoms: list[tuple[Fraction, tuple]] = [
            (Fraction(c), tuple(chain)) for c, chain in atoms if c != 0
        ]
        self.parity = parity & 1
        for _, chain in self.atoms:
            ferm = sum(1 for k, _ in chain if k in (MUL_T, DER_T))
            if ferm & 1 != self.parity:
                raise ValueError("atom parity disagrees with declared parity")

    @staticmethod
    def zero(sig, parity=0) -> "SuperOperator":
        return SuperOperator(sig, [], parity)

    def __add__(self, other: "SuperOperator") -> "SuperOperator":
        if self.sig != other.sig:
            raise ValueError("signature mismatch")
        if not self.atoms:
            return other
        if not other.atoms:
            return self
        if self.parity != other.parity:
            raise ValueError("cannot add operators of different parity")
        return SuperOperator(self.sig, self.atoms + other.atoms, self.parity)

    def scale(self, c) -> "SuperOperator":
        c = Fraction(c)
        return SuperOperator(
            self.sig, [(c * a, chain) for a, chain in self.atoms], self.parity
        )

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + other.scale(-1)

    def compose(self, other: "SuperOperator") -> "SuperOperator":
        """Operator product self . other (other acts first)."""
        if self.sig != other.sig:
            raise ValueError("signature mismatch")
        atoms = [
            (ca * cb, chain_a + chain_b)
            for ca, chain_a in self.atoms
            for cb, chain_b in other.atoms
        ]
        return SuperOperator(self.sig, atoms, self.parity ^ other.parity)

    def max_degree_shift(self) -> int:
        """Upper bound on the total-degree shift of any atom."""
        best = 0
        for _, chain in self.atoms:
            shift = sum(1 if k in (MUL_X, MUL_T) else -1 for k, _ in chain)
            best = max(best, shift)
        return best

    def __call__(self, p: SuperPolynomial) -> SuperPolynomial:
        return apply_operator(self, p)

    def __str__(self):
        if not self.atoms:
            return "0"
        parts = []
        for c, chain in self.atoms:
            ops = " ".join(
                f"{_ACTION_NAMES[k]}{i + 1}" if k in (MUL_X, MUL_T) else f"{_ACTION_NAMES[k]}{i + 1}"
                for k, i in chain
            )
            parts.append(f"{c} * [{ops}]" if ops else f"{c} * [1]")
        return " + ".join(parts)

    def __repr__(self):
        return f"SuperOperator({self})"


def apply_operator(op: SuperOperator, p: SuperPolynomial) -> SuperPolynomial:
    """Apply op to p exactly.  Chains act rightmost-first; atoms are summed."""
    if op.sig != p.sig:
        raise ValueError(f"signature mismatch: {op.sig} vs {p.sig}")
    out: dict[SuperMonomial, Fraction] = {}
    for coeff, chain in op.atoms:
        for mono, c in p.terms.items():
            cur = {mono: coeff * c}
            for action in reversed(chain):
                nxt: dict[SuperMonomial, Fraction] = {}
                for m, v in cur.items():
                    _apply_action_into(action, m, v, nxt)
                cur = nxt
                if not cur:
                    break
            for m, v in cur.items():
                s = out.get(m, 0) + v
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
    return SuperPolynomial(p.sig, out)


# -- text format -------------------------------------------------------

def format_poly(p: SuperPolynomial) -> str:
    if not p.terms:
        return "0"
    parts = []
    for mono, c in p.sorted_terms():
        factors = []
        for i, e in enumerate(mono.bos):
            if e == 1:
                factors.append(f"x{i + 1}")
            elif e > 1:
                factors.append(f"x{i + 1}^{e}")
        mask = mono.mask
        pbit = 1
        while mask:
            if mask & 1:
                factors.append(f"t{pbit}")
            mask >>= 1
            pbit += 1
        coeff = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
        parts.append(f"{coeff} * {' '.join(factors)}" if factors else coeff)
    return " + ".join(parts)


_FACTOR_RE = re.compile(r"([xt])(\d+)(?:\^(-?\d+))?$")
_COEFF_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_poly(text: str, sig: VariableSignature) -> SuperPolynomial:
    """Parse the text format produced by format_poly (and mild variants)."""
    text = text.strip()
    if text in ("", "0"):
        return SuperPolynomial.zero(sig)
    total = SuperPolynomial.zero(sig)
    for raw in text.split("+"):
        term = raw.strip()
        if not term:
            raise ValueError("empty term in polynomial text")
        coeff = Fraction(1)
        if "*" in term:
            cpart, _, rest = term.partition("*")
            coeff = Fraction(cpart.strip())
            term = rest.strip()
        elif _COEFF_RE.match(term):
            coeff = Fraction(term)
            term = ""
        poly = SuperPolynomial.from_monomial(sig, mono_one(sig), coeff)
        for tok in term.split():
            m = _FACTOR_RE.match(tok)
            if not m:
                raise ValueError(f"cannot parse factor {tok!r}")
            kind, idx, exp = m.group(1), int(m.group(2)), int(m.group(3) or 1)
            if exp < 0:
                raise ValueError(f"negative exponent in {tok!r}")
            base = (
                SuperPolynomial.x(sig, idx)
                if kind == "x"
                else SuperPolynomial.theta(sig, idx)
            )
            poly = poly * base**exp
        total = total + poly
    return total


def theta_word(sig: VariableSignature, indices: Iterable[int]) -> SuperPolynomial:
    """Product t_{i1} ... t_{ik} of distinct fermionic variables, in order."""
    p = SuperPolynomial.one(sig)
    for i in indices:
        p = p * SuperPolynomial.theta(sig, i)
    return p
