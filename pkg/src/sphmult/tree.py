"""Reduced words, tree spheres, and radial convolution on free products.

Groups of the form (Z/2Z * ... * Z/2Z) * (Z * ... * Z) with M involutive
and N infinite factors, M + 2N >= 3, have a Cayley graph that is the
homogeneous tree of degree q + 1 with q = M + 2N - 1.  Words are stored
as reduced letter sequences; a letter is (factor_id, exponent) with
exponent fixed to +1 on the involutive factors.  Word length equals
graph distance from the identity, spheres E_n = {|x| = n} satisfy
|E_n| = (q+1) q^(n-1), and the radial functions (those depending only on
|x|) form a commutative convolution algebra.

Everything combinatorial is computed by explicit enumeration over balls
(capped, raising CapacityError beyond the cap); the enumeration doubles
as the exact oracle for all identities tested against this module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational

from .errors import CapacityError, DomainError

DEFAULT_SPHERE_CAP = 10**6


@dataclass(frozen=True)
class FreeProductSpec:
    """M involutive factors and N infinite cyclic factors."""

    involutive: int
    free: int

    def __post_init__(self):
        if self.involutive < 0 or self.free < 0:
            raise DomainError("factor counts must be nonnegative")
        if self.involutive + 2 * self.free < 3:
            raise DomainError("need M + 2N >= 3 for a tree of degree >= 3")

    @property
    def q(self) -> int:
        return self.involutive + 2 * self.free - 1

    @property
    def degree(self) -> int:
        return self.q + 1


@dataclass(frozen=True)
class Word:
    """Reduced word; letters are (factor_id, exponent) pairs."""

    letters: tuple = field(default_factory=tuple)

    def __len__(self):
        return len(self.letters)


IDENTITY = Word(())


def _is_involutive(spec: FreeProductSpec, fid: int) -> bool:
    return fid < spec.involutive


def _check_letter(spec: FreeProductSpec, letter):
    fid, exp = letter
    if not 0 <= fid < spec.involutive + spec.free:
        raise DomainError(f"factor id {fid} out of range")
    if _is_involutive(spec, fid):
        if exp != 1:
            raise DomainError("involutive letters carry exponent +1")
    elif exp not in (1, -1):
        raise DomainError("free letters carry exponent +1 or -1")


def _cancels(spec: FreeProductSpec, a, b) -> bool:
    if a[0] != b[0]:
        return False
    if _is_involutive(spec, a[0]):
        return True
    return a[1] == -b[1]


def word(spec: FreeProductSpec, letters) -> Word:
    """Reduce an arbitrary letter sequence to a Word."""
    out = []
    for letter in letters:
        letter = (int(letter[0]), int(letter[1]))
        _check_letter(spec, letter)
        if out and _cancels(spec, out[-1], letter):
            out.pop()
        else:
            out.append(letter)
    return Word(tuple(out))


def multiply(spec: FreeProductSpec, a: Word, b: Word) -> Word:
    """Reduced product; cancellation cascades at the seam only."""
    out = list(a.letters)
    for letter in b.letters:
        if out and _cancels(spec, out[-1], letter):
            out.pop()
        else:
            out.append(letter)
    return Word(tuple(out))


def inverse(spec: FreeProductSpec, a: Word) -> Word:
    out = []
    for fid, exp in reversed(a.letters):
        out.append((fid, 1 if _is_involutive(spec, fid) else -exp))
    return Word(tuple(out))


def generators(spec: FreeProductSpec) -> list[Word]:
    gens = [Word(((fid, 1),)) for fid in range(spec.involutive)]
    for fid in range(spec.involutive, spec.involutive + spec.free):
        gens.append(Word(((fid, 1),)))
        gens.append(Word(((fid, -1),)))
    return gens


def sphere_size(spec: FreeProductSpec, n: int) -> int:
    """|E_n| in closed form: 1 for n = 0, (q+1) q^(n-1) otherwise."""
    if n < 0:
        raise DomainError("shell index must be nonnegative")
    if n == 0:
        return 1
    return spec.degree * spec.q ** (n - 1)


_SPHERE_CACHE: dict[FreeProductSpec, list[list[Word]]] = {}


def spheres(spec: FreeProductSpec, radius: int,
            cap: int = DEFAULT_SPHERE_CAP) -> list[list[Word]]:
    """Enumerate E_0 .. E_radius by breadth-first search (cached per spec)."""
    if radius < 0:
        raise DomainError("radius must be nonnegative")
    for n in range(1, radius + 1):
        if sphere_size(spec, n) > cap:
            raise CapacityError(f"sphere E_{n} would exceed the cap of {cap} words")
    out = _SPHERE_CACHE.setdefault(spec, [[IDENTITY]])
    gens = generators(spec)
    while len(out) <= radius:
        n = len(out) - 1
        nxt = set()
        for w in out[-1]:
            for g in gens:
                wg = multiply(spec, w, g)
                if len(wg) == n + 1:
                    nxt.add(wg)
        out.append(sorted(nxt, key=lambda w: w.letters))
    return out[: radius + 1]


def representative(spec: FreeProductSpec, n: int) -> Word:
    """A canonical word of length n."""
    if n < 0:
        raise DomainError("length must be nonnegative")
    if spec.free > 0:
        fid = spec.involutive
        return Word(tuple((fid, 1) for _ in range(n)))
    letters = tuple((k % 2, 1) for k in range(n))
    return Word(letters)


@dataclass(frozen=True)
class RadialFn:
    """Finitely supported function of the shell index."""

    shells: tuple

    @classmethod
    def from_dict(cls, values: dict) -> "RadialFn":
        cleaned = {int(n): v for n, v in values.items() if v != 0}
        if any(n < 0 for n in cleaned):
            raise DomainError("shell indices must be nonnegative")
        return cls(shells=tuple(sorted(cleaned.items())))

    def as_dict(self) -> dict:
        return dict(self.shells)

    def __call__(self, n: int):
        for k, v in self.shells:
            if k == n:
                return v
        return 0

    @property
    def max_shell(self) -> int:
        return self.shells[-1][0] if self.shells else 0


def shell_indicator(n: int) -> RadialFn:
    """The radial function equal to 1 on E_n (as a function on the group)."""
    return RadialFn.from_dict({n: 1})


def l1_norm(spec: FreeProductSpec, f: RadialFn) -> float:
    """l^1 norm of the induced function on the group: sum |E_n| |f(n)|."""
    return sum(sphere_size(spec, n) * abs(v) for n, v in f.shells)


def radialize(spec: FreeProductSpec, f: dict) -> RadialFn:
    """Average a finitely supported function over the word-length shells."""
    sums: dict[int, object] = {}
    for w, v in f.items():
        sums[len(w)] = sums.get(len(w), 0) + v
    exact = all(isinstance(v, (int, Rational)) for v in f.values())
    out = {}
    for n, total in sums.items():
        size = sphere_size(spec, n)
        out[n] = Fraction(total, size) if exact else total / size
    return RadialFn.from_dict(out)


def expand(spec: FreeProductSpec, f: RadialFn,
           cap: int = DEFAULT_SPHERE_CAP) -> dict:
    """Explicit dictionary of the induced function on the ball."""
    shells_list = spheres(spec, f.max_shell, cap)
    out = {}
    for n, v in f.shells:
        for w in shells_list[n]:
            out[w] = v
    return out


def _shell_distribution(spec: FreeProductSpec, i: int, z: Word,
                        cap: int) -> dict[int, int]:
    """Counts {j: #{x in E_i with |x^-1 z| = j}}."""
    dist: dict[int, int] = {}
    for x in spheres(spec, i, cap)[i]:
        j = len(multiply(spec, inverse(spec, x), z))
        dist[j] = dist.get(j, 0) + 1
    return dist


def radial_convolve(f: RadialFn, g: RadialFn, spec: FreeProductSpec,
                    cap: int = DEFAULT_SPHERE_CAP) -> RadialFn:
    """Convolution of the induced functions, computed per shell.

    (f * g)(z) = sum_x f(x) g(x^-1 z) depends only on |z| because the
    radial algebra is commutative; each shell value is obtained by
    enumerating the spheres in the support of f against one
    representative z.  Exact (integer / Fraction) inputs stay exact.
    """
    if not f.shells or not g.shells:
        return RadialFn.from_dict({})
    max_shell = f.max_shell + g.max_shell
    if sphere_size(spec, max(f.max_shell, 1)) > cap:
        raise CapacityError("convolution support exceeds the enumeration cap")
    out = {}
    for k in range(max_shell + 1):
        z = representative(spec, k)
        total = 0
        for i, fv in f.shells:
            dist = _shell_distribution(spec, i, z, cap)
            for j, count in dist.items():
                gv = g(j)
                if gv != 0:
                    total = total + fv * gv * count
        if total != 0:
            out[k] = total
    return RadialFn.from_dict(out)


def bz_counts(spec: FreeProductSpec, x: Word, y: Word, ball_radius: int,
              cap: int = DEFAULT_SPHERE_CAP) -> dict[Word, int]:
    """Pair counts of the two-point radialization.

    For B = {(s, t): |s| = |x|, |t| = |y|, |t^-1 s| = |y^-1 x|} returns
    {z: #{(s, t) in B : t^-1 s = z}}, one entry per z of length
    |y^-1 x|.  All counts are equal, and each equals the convolution of
    the two sphere indicators evaluated at z.
    """
    target = len(multiply(spec, inverse(spec, y), x))
    if max(len(x), len(y), target) > ball_radius:
        raise DomainError("words exceed the declared ball radius")
    shells_list = spheres(spec, max(len(x), len(y)), cap)
    counts: dict[Word, int] = {}
    for t in shells_list[len(y)]:
        t_inv = inverse(spec, t)
        for s_w in shells_list[len(x)]:
            z = multiply(spec, t_inv, s_w)
            if len(z) == target:
                counts[z] = counts.get(z, 0) + 1
    return counts


def radialize_two_point(spec: FreeProductSpec, h: dict, x: Word, y: Word,
                        ball_radius: int | None = None,
                        cap: int = DEFAULT_SPHERE_CAP):
    """(1/|B|) sum over (s,t) in B of h(t^-1 s).

    This is the discrete form of averaging h(k(y)^-1 k(x)) over the
    tree's isometry group; it equals the one-point radialization of h at
    shell |y^-1 x|.
    """
    if ball_radius is None:
        ball_radius = max(len(x), len(y)) + 1
        ball_radius = max(ball_radius, len(multiply(spec, inverse(spec, y), x)))
    counts = bz_counts(spec, x, y, ball_radius, cap)
    total_pairs = sum(counts.values())
    acc = 0
    for z, c in counts.items():
        hv = h.get(z, 0) if isinstance(h, dict) else h(z)
        if hv != 0:
            acc = acc + hv * c
    exact = isinstance(acc, (int, Rational)) and not isinstance(acc, float)
    return Fraction(acc, total_pairs) if exact else acc / total_pairs


def pairing(f: dict, phi) -> complex:
    """<f, phi> = sum over the support of f of f(x) phi(x)."""
    total = 0
    for w, v in f.items():
        pv = phi.get(w, 0) if isinstance(phi, dict) else phi(w)
        total = total + v * pv
    return total


def pairing_radial(spec: FreeProductSpec, f: RadialFn, phi: RadialFn):
    """<f, phi> for two radial functions: sum |E_n| f(n) phi(n)."""
    total = 0
    for n, v in f.shells:
        pv = phi(n)
        if pv != 0:
            total = total + sphere_size(spec, n) * v * pv
    return total


def multiplicative_shell_function(spec: FreeProductSpec, alpha,
                                  max_shell: int,
                                  cap: int = DEFAULT_SPHERE_CAP) -> RadialFn:
    """Shell function making f -> <f, phi> multiplicative on radial f.

    Built recursively from the convolution table of the first-shell
    indicator: phi(0) = 1, phi(1) = alpha, and each higher shell value is
    forced by <chi_1 * chi_n, phi> = <chi_1, phi><chi_n, phi>.  With a
    Fraction alpha the construction is exact.
    """
    values = {0: Fraction(1) if isinstance(alpha, Rational) else 1.0, 1: alpha}
    for n in range(1, max_shell):
        conv = radial_convolve(shell_indicator(1), shell_indicator(n), spec, cap)
        u1 = sphere_size(spec, 1) * values[1]
        un = sphere_size(spec, n) * values[n]
        known = 0
        lead = None
        for k, cv in conv.shells:
            if k <= n:
                known = known + cv * sphere_size(spec, k) * values[k]
            elif k == n + 1:
                lead = cv * sphere_size(spec, n + 1)
            else:
                raise DomainError("unexpected convolution support")
        if lead is None:
            raise DomainError("convolution table does not reach the next shell")
        values[n + 1] = (u1 * un - known) / lead
    return RadialFn.from_dict(values)
