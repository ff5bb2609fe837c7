"""Exact arithmetic over big rationals and cyclotomic fields Q(zeta_n).

Every value is immutable.  A :class:`CycloNum` is stored as the canonical
residue modulo the n-th cyclotomic polynomial, so equality of field elements
is literal equality of coefficient vectors (at the same conductor).  Complex
conjugation is the ring map zeta -> zeta^(n-1), and signs of real elements
are decided exactly: zero from the representation, nonzero by adaptive
interval evaluation.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache

Rational = Fraction


class NonRealInput(ValueError):
    """Raised when real_sign is applied to an element outside the real subfield."""


class ParseError(ValueError):
    """Raised on malformed scalar literals."""


# ---------------------------------------------------------------------------
# integer polynomial helpers (coefficient lists, ascending degree)


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (den monic up to sign)."""
    num = list(num)
    dn = len(den) - 1
    lead = den[-1]
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c == 0:
            continue
        q, r = divmod(c, lead)
        if r:
            raise ArithmeticError("non-exact polynomial division")
        out[i - dn] = q
        for j, dj in enumerate(den):
            num[i - dn + j] -= q * dj
    if any(num[:dn]):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("conductor must be positive")
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, ascending, monic of degree phi(n)."""
    if n == 1:
        return (-1, 1)
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            den = _poly_mul(den, list(cyclotomic_poly(d)))
    return tuple(_poly_divexact(num, den))


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """zeta_n^k in the canonical basis 1, zeta, ..., zeta^(phi-1), for 0 <= k < n."""
    phi = euler_phi(n)
    mod = cyclotomic_poly(n)
    tail = [-c for c in mod[:phi]]  # x^phi == tail
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        lead = cur[phi - 1]
        nxt = [0] + cur[: phi - 1]
        if lead:
            for i in range(phi):
                nxt[i] += lead * tail[i]
        cur = nxt
    return tuple(rows)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to a rational")


class CycloNum:
    """Element of Q(zeta_n), reduced modulo the n-th cyclotomic polynomial."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs):
        if n < 1:
            raise ValueError("conductor must be positive")
        phi = euler_phi(n)
        coeffs = tuple(_as_fraction(c) for c in coeffs)
        if len(coeffs) != phi:
            raise ValueError(f"need {phi} coefficients for conductor {n}, got {len(coeffs)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *_):
        raise AttributeError("CycloNum is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def rational(value, n: int = 1) -> "CycloNum":
        phi = euler_phi(n)
        coeffs = [Fraction(0)] * phi
        coeffs[0] = _as_fraction(value)
        return CycloNum(n, coeffs)

    @staticmethod
    def zeta_power(n: int, k: int) -> "CycloNum":
        phi = euler_phi(n)
        row = _power_table(n)[k % n]
        return CycloNum(n, [Fraction(c) for c in row[:phi]])

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def embed(self, m: int) -> "CycloNum":
        """Image under zeta_n -> zeta_m^(m/n); requires n | m."""
        if m == self.n:
            return self
        if m % self.n != 0:
            raise ValueError(f"no embedding of Q(zeta_{self.n}) into Q(zeta_{m})")
        step = m // self.n
        phi = euler_phi(m)
        table = _power_table(m)
        out = [Fraction(0)] * phi
        for i, c in enumerate(self.coeffs):
            if c:
                row = table[(i * step) % m]
                for j in range(phi):
                    if row[j]:
                        out[j] += c * row[j]
        return CycloNum(m, out)

    def minimal_conductor_form(self) -> "CycloNum":
        """The same value expressed at the smallest conductor dividing n."""
        n = self.n
        for d in sorted(k for k in range(1, n) if n % k == 0):
            down = _descend(self, d)
            if down is not None:
                return down
        return self

    # -- arithmetic --------------------------------------------------------

    def _unify(self, other):
        other = _coerce(other, self.n)
        if other.n == self.n:
            return self, other
        m = _lcm(self.n, other.n)
        return self.embed(m), other.embed(m)

    def __add__(self, other):
        a, b = self._unify(other)
        return CycloNum(a.n, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.n, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_coerce(other, self.n))

    def __rsub__(self, other):
        return _coerce(other, self.n) + (-self)

    def __mul__(self, other):
        a, b = self._unify(other)
        n, phi = a.n, len(a.coeffs)
        table = _power_table(n)
        out = [Fraction(0)] * phi
        for i, ci in enumerate(a.coeffs):
            if not ci:
                continue
            for j, cj in enumerate(b.coeffs):
                if not cj:
                    continue
                prod = ci * cj
                k = i + j
                if k < phi:
                    out[k] += prod
                else:
                    row = table[k % n]
                    for m in range(phi):
                        if row[m]:
                            out[m] += prod * row[m]
        return CycloNum(n, out)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        if self.is_zero():
            raise ZeroDivisionError("cyclotomic division by zero")
        if self.is_rational():
            return CycloNum.rational(1 / self.coeffs[0], self.n)
        n, phi = self.n, len(self.coeffs)
        # columns of the multiplication-by-self matrix
        cols = [(self * CycloNum.zeta_power(n, j)).coeffs for j in range(phi)]
        mat = [[cols[j][i] for j in range(phi)] for i in range(phi)]
        rhs = [Fraction(1)] + [Fraction(0)] * (phi - 1)
        sol = _solve_linear(mat, rhs)
        return CycloNum(n, sol)

    def __truediv__(self, other):
        other = _coerce(other, self.n)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other, self.n) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloNum.rational(1, self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        try:
            a, b = self._unify(other)
        except TypeError:
            return NotImplemented
        return a.coeffs == b.coeffs

    def __hash__(self):
        m = self.minimal_conductor_form()
        return hash((m.n, m.coeffs))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mon = f"z{self.n}" if i == 1 else f"z{self.n}^{i}"
                terms.append(mon if c == 1 else f"{c}*{mon}")
        return " + ".join(terms) if terms else "0"


def _lcm(a: int, b: int) -> int:
    from math import gcd

    return a // gcd(a, b) * b


def _coerce(x, conductor_hint: int) -> CycloNum:
    if isinstance(x, CycloNum):
        return x
    if isinstance(x, (int, Fraction)):
        return CycloNum.rational(x, 1)
    raise TypeError(f"cannot coerce {type(x).__name__} into a cyclotomic field")


def _descend(x: CycloNum, d: int) -> CycloNum | None:
    """Express x at conductor d | n if it lies in Q(zeta_d), else None."""
    n = x.n
    phi_d, phi_n = euler_phi(d), euler_phi(n)
    basis = [CycloNum.zeta_power(d, j).embed(n).coeffs for j in range(phi_d)]
    mat = [[basis[j][i] for j in range(phi_d)] for i in range(phi_n)]
    sol = _solve_linear_overdetermined(mat, list(x.coeffs))
    if sol is None:
        return None
    return CycloNum(d, sol)


def _solve_linear(mat, rhs):
    """Solve square system over Fraction by Gaussian elimination."""
    n = len(mat)
    aug = [list(mat[i]) + [rhs[i]] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [c * inv for c in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def _solve_linear_overdetermined(mat, rhs):
    """Solve a tall system exactly; None when inconsistent."""
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    aug = [list(mat[i]) + [rhs[i]] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if aug[i][cols] != 0:
            return None
    sol = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        sol[c] = aug[i][cols]
    # consistency of non-pivot rows was already checked; pivot rows define sol
    for i in range(rows):
        acc = sum((mat[i][j] * sol[j] for j in range(cols)), Fraction(0))
        if acc != rhs[i]:
            return None
    return sol


# ---------------------------------------------------------------------------
# module-level operations (the public surface used by the rest of the package)


def cyclo_make(n: int, k: int) -> CycloNum:
    """zeta_n^k reduced modulo the n-th cyclotomic polynomial."""
    return CycloNum.zeta_power(n, k)


def conj(x: CycloNum) -> CycloNum:
    """Complex conjugation, the ring involution zeta -> zeta^(n-1)."""
    n, phi = x.n, len(x.coeffs)
    table = _power_table(n)
    out = [Fraction(0)] * phi
    for i, c in enumerate(x.coeffs):
        if c:
            row = table[(n - i) % n]
            for j in range(phi):
                if row[j]:
                    out[j] += c * row[j]
    return CycloNum(n, out)


def real_sign(x: CycloNum) -> int:
    """Sign of a real cyclotomic number under zeta_n -> exp(2*pi*i/n).

    Zero is decided exactly from the representation; a nonzero sign is
    obtained by interval evaluation at increasing precision, which
    terminates because the value is a nonzero real algebraic number.
    """
    if conj(x) != x:
        raise NonRealInput(f"{x!r} is not fixed by conjugation")
    if x.is_zero():
        return 0
    if x.is_rational():
        q = x.coeffs[0]
        return 1 if q > 0 else -1
    import mpmath

    iv = mpmath.iv
    saved = iv.prec
    try:
        prec = 64
        while True:
            iv.prec = prec
            two_pi = 2 * iv.pi
            total = iv.mpf(0)
            for k, c in enumerate(x.coeffs):
                if c:
                    coeff = iv.mpf(c.numerator) / iv.mpf(c.denominator)
                    total += coeff * iv.cos(two_pi * k / x.n)
            if total.a > 0:
                return 1
            if total.b < 0:
                return -1
            prec *= 2
            if prec > 1 << 16:
                raise ArithmeticError("interval refinement failed to separate from zero")
    finally:
        iv.prec = saved


def float_value(x: CycloNum) -> complex:
    """Floating image under zeta_n -> exp(2*pi*i/n) (for tests and display)."""
    import cmath

    return sum(
        complex(c) * cmath.exp(2j * cmath.pi * k / x.n) for k, c in enumerate(x.coeffs)
    )


# ---------------------------------------------------------------------------
# literal parser: rationals "p/q" and cyclotomic monomials "z<n>^<k>" composed
# with +, -, * and parentheses


def context_conductor() -> int | None:
    """Global conductor override (DELPEZZO_CONDUCTOR); None means untouched."""
    raw = os.environ.get("DELPEZZO_CONDUCTOR")
    if not raw:
        return None
    n = int(raw)
    if n < 1:
        raise ValueError("DELPEZZO_CONDUCTOR must be a positive integer")
    return n


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*()":
            tokens.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            if j < len(text) and text[j] == "/":
                k = j + 1
                while k < len(text) and text[k].isdigit():
                    k += 1
                if k == j + 1:
                    raise ParseError(f"malformed rational near {text[i:]!r}")
                tokens.append(Fraction(int(text[i:j]), int(text[j + 1 : k])))
                i = k
            else:
                tokens.append(Fraction(int(text[i:j])))
                i = j
        elif ch == "z":
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise ParseError(f"malformed zeta literal near {text[i:]!r}")
            n = int(text[i + 1 : j])
            k = 1
            if j < len(text) and text[j] == "^":
                sign = 1
                j += 1
                if j < len(text) and text[j] == "-":
                    sign = -1
                    j += 1
                m = j
                while m < len(text) and text[m].isdigit():
                    m += 1
                if m == j:
                    raise ParseError(f"malformed exponent near {text[i:]!r}")
                k = sign * int(text[j:m])
                j = m
            tokens.append(("zeta", n, k))
            i = j
        else:
            raise ParseError(f"unexpected character {ch!r} in scalar literal")
    return tokens


def parse_scalar(text: str, conductor: int | None = None) -> CycloNum:
    """Parse 'p/q' / 'z<n>^<k>' expressions combined with +, -, * and parens."""
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def parse_atom() -> CycloNum:
        tok = peek()
        if tok is None:
            raise ParseError("unexpected end of expression")
        if tok == "(":
            take()
            val = parse_sum()
            if peek() != ")":
                raise ParseError("missing closing parenthesis")
            take()
            return val
        if tok == "-":
            take()
            return -parse_atom()
        if tok == "+":
            take()
            return parse_atom()
        take()
        if isinstance(tok, Fraction):
            return CycloNum.rational(tok, 1)
        if isinstance(tok, tuple) and tok[0] == "zeta":
            return cyclo_make(tok[1], tok[2])
        raise ParseError(f"unexpected token {tok!r}")

    def parse_product() -> CycloNum:
        val = parse_atom()
        while peek() == "*":
            take()
            val = val * parse_atom()
        return val

    def parse_sum() -> CycloNum:
        val = parse_product()
        while peek() in ("+", "-"):
            if take() == "+":
                val = val + parse_product()
            else:
                val = val - parse_product()
        return val

    result = parse_sum()
    if pos != len(tokens):
        raise ParseError(f"trailing tokens in scalar literal {text!r}")
    target = conductor if conductor is not None else context_conductor()
    if target is not None and target % result.n == 0:
        result = result.embed(target)
    return result
