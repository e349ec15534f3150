"""Exact field arithmetic: Q, prime fields F_p, and extension fields F_{p^k}.

Scalars are plain Python values (Fraction for Q, int residues for F_p,
tuples of int residues, low degree first, for F_{p^k}).  A Field object
carries the operations so that everything above this module is
field-generic.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction


class FieldError(Exception):
    pass


class FieldMismatch(FieldError):
    pass


class DivisionByZero(FieldError):
    pass


def is_prime(p):
    """Deterministic trial division; p < 2^31 by construction."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Field:
    """Common interface.  Subclasses must be immutable and hashable."""

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, n):
        raise NotImplementedError

    @property
    def zero(self):
        return self.from_int(0)

    @property
    def one(self):
        return self.from_int(1)

    def is_zero(self, a):
        return a == self.zero

    # finite fields iterate their elements; Q raises
    def elements(self):
        raise FieldError("field is infinite")

    @property
    def size(self):
        return None

    def scalar_to_json(self, a):
        raise NotImplementedError

    def scalar_from_json(self, v):
        raise NotImplementedError

    def to_json(self):
        raise NotImplementedError


class Rationals(Field):
    char = 0

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of 0")
        return 1 / Fraction(a)

    def from_int(self, n):
        return Fraction(n)

    def scalar_to_json(self, a):
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else "%d/%d" % (a.numerator, a.denominator)

    def scalar_from_json(self, v):
        if isinstance(v, str):
            return Fraction(v)
        return Fraction(v)

    def to_json(self):
        return {"kind": "Q"}

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")


class PrimeField(Field):
    def __init__(self, p):
        if p >= 2 ** 31:
            raise FieldError("p too large: %d" % p)
        if not is_prime(p):
            raise FieldError("p is not prime: %d" % p)
        self.p = p
        self.char = p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero("inverse of 0 in F_%d" % self.p)
        return pow(a, -1, self.p)

    def from_int(self, n):
        return n % self.p

    def elements(self):
        return range(self.p)

    @property
    def size(self):
        return self.p

    def scalar_to_json(self, a):
        return a

    def scalar_from_json(self, v):
        return int(v) % self.p

    def to_json(self):
        return {"kind": "Fp", "p": self.p}

    def __repr__(self):
        return "F_%d" % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


def _poly_trim(c):
    while c and c[-1] == 0:
        c = c[:-1]
    return c


def _poly_mod(c, modulus, p):
    """Reduce polynomial c (list, low degree first) by monic modulus over F_p."""
    c = list(c)
    k = len(modulus) - 1
    while len(c) > k:
        lead = c[-1] % p
        d = len(c) - 1 - k
        if lead:
            for i in range(k):
                c[d + i] = (c[d + i] - lead * modulus[i]) % p
        c.pop()
    return [x % p for x in c]


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_has_root(modulus, p):
    for x in range(p):
        acc = 0
        for c in reversed(modulus):
            acc = (acc * x + c) % p
        if acc == 0:
            return True
    return False


def _poly_divides(d, f, p):
    """Whether monic d divides f over F_p."""
    f = [x % p for x in f]
    while len(f) >= len(d) and _poly_trim(f):
        f = _poly_trim(f)
        if len(f) < len(d):
            break
        lead = f[-1]
        shift = len(f) - len(d)
        for i in range(len(d)):
            f[shift + i] = (f[shift + i] - lead * d[i]) % p
        f.pop()
    return not _poly_trim(f)


def _is_irreducible(modulus, p):
    k = len(modulus) - 1
    if k < 1 or modulus[-1] != 1:
        return False
    if k == 1:
        return True
    if _poly_has_root(modulus, p):
        return False
    if k <= 3:
        return True  # no root and degree <= 3
    # exhaustive check for monic factors of degree 2..k/2
    for deg in range(2, k // 2 + 1):
        for code in range(p ** deg):
            cand = []
            c = code
            for _ in range(deg):
                cand.append(c % p)
                c //= p
            cand.append(1)
            if _poly_divides(cand, modulus, p):
                return False
    return True


def find_irreducible(p, k):
    """Lowest lexicographic (by low-degree coefficient vector) monic irreducible of degree k."""
    for code in range(p ** k):
        cand = []
        c = code
        for _ in range(k):
            cand.append(c % p)
            c //= p
        cand.append(1)
        if _is_irreducible(cand, p):
            return cand
    raise FieldError("no irreducible polynomial found (unreachable)")


class ExtField(Field):
    """F_{p^k} = F_p[x]/(modulus); elements are k-tuples, low degree first."""

    def __init__(self, p, k, modulus=None):
        if not is_prime(p):
            raise FieldError("p is not prime: %d" % p)
        if k < 1 or k > 8:
            raise FieldError("extension degree k must be in 1..8")
        if modulus is None:
            modulus = find_irreducible(p, k)
        modulus = [x % p for x in modulus]
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree k")
        if not _is_irreducible(modulus, p):
            raise FieldError("modulus is reducible over F_%d" % p)
        self.p = p
        self.k = k
        self.modulus = tuple(modulus)
        self.char = p

    def _norm(self, c):
        c = _poly_mod(list(c), self.modulus, self.p)
        return tuple(c + [0] * (self.k - len(c)))

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def mul(self, a, b):
        return self._norm(_poly_mul(list(a), list(b), self.p))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def inv(self, a):
        if all(x == 0 for x in a):
            raise DivisionByZero("inverse of 0 in F_%d^%d" % (self.p, self.k))
        # a^(q-2) with q = p^k
        q = self.p ** self.k
        result = self.one
        base = a
        e = q - 2
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def from_int(self, n):
        return tuple([n % self.p] + [0] * (self.k - 1))

    def elements(self):
        q = self.p ** self.k
        for code in range(q):
            el = []
            c = code
            for _ in range(self.k):
                el.append(c % self.p)
                c //= self.p
            yield tuple(el)

    @property
    def size(self):
        return self.p ** self.k

    def frobenius(self, a, i=1):
        """a^(p^i)."""
        return self._pow(a, self.p ** (i % self.k))

    def _pow(self, a, e):
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def scalar_to_json(self, a):
        return list(a)

    def scalar_from_json(self, v):
        if isinstance(v, int):
            return self.from_int(v)
        return self._norm([int(x) for x in v])

    def to_json(self):
        return {"kind": "Fpk", "p": self.p, "k": self.k, "modulus": list(self.modulus)}

    def __repr__(self):
        return "F_%d^%d" % (self.p, self.k)

    def __eq__(self, other):
        return (
            isinstance(other, ExtField)
            and other.p == self.p
            and other.k == self.k
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("Fpk", self.p, self.k, self.modulus))


QQ = Rationals()
F2 = PrimeField(2)
F3 = PrimeField(3)


def field_from_json(d):
    kind = d.get("kind")
    if kind == "Q":
        return QQ
    if kind == "Fp":
        return PrimeField(int(d["p"]))
    if kind == "Fpk":
        return ExtField(int(d["p"]), int(d["k"]), d.get("modulus"))
    raise FieldError("unknown field kind: %r" % (kind,))


def check_same_field(f1, f2):
    if f1 != f2:
        raise FieldMismatch("%r vs %r" % (f1, f2))
