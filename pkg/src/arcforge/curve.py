"""Homogeneous plane curves over GF(q) and the checks built on them.

A Curve is a trivariate homogeneous polynomial stored as a monomial map
{(e0, e1, e2): coefficient code}.  On top of evaluation and formal partial
derivatives this module provides:

  * rational point enumeration over the base field,
  * tangent lines and singular-point scans (over extensions too),
  * intersection multiplicity of the curve with a line at a point,
  * the dominance test "does F divide X0^q*dF/dX0 + X1^q*dF/dX1 +
    X2^q*dF/dX2" that decides whether the image of every point under the
    q-power map lands on the tangent line at that point,
  * a sampled estimate of the generic tangent contact order, and
  * exact expansion checks for supplied polynomial identities.

The divisibility test replaces a Wronskian-determinant criterion with exact
multivariate division, which only needs first-order derivatives.  Division
is performed univariately in a pivot variable X_i whose pure power X_i^d
occurs with a nonzero (hence invertible) coefficient, so quotient and
remainder are unique and the zero-remainder verdict is exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .errors import (
    BadParametersError,
    DegreeMismatchError,
    FieldMismatchError,
    NoPivotError,
    NoPointsFoundError,
    NotIncidentError,
    NotOnCurveError,
    SingularPointError,
    TooLargeError,
)
from .gf import FieldElement, FieldSpec, field_create
from .plane import ProjLine, ProjPoint, plane_for

EXTENSION_CAP = 1 << 20

Exponents = tuple[int, int, int]


class Curve:
    """A homogeneous trivariate polynomial; possibly zero (empty term map)."""

    __slots__ = ("field", "degree", "terms")

    def __init__(self, field: FieldSpec, degree: int, terms: dict[Exponents, int]):
        clean = {}
        for exps, code in terms.items():
            if code == 0:
                continue
            if sum(exps) != degree or min(exps) < 0:
                raise BadParametersError(
                    f"monomial {exps} is not homogeneous of degree {degree}"
                )
            clean[tuple(exps)] = code
        self.field = field
        self.degree = degree
        self.terms = clean

    @classmethod
    def from_monomials(cls, field: FieldSpec, monomials) -> "Curve":
        """Build from (coefficient, (e0, e1, e2)) pairs.

        Coefficients may be FieldElements, coefficient lists, or ints
        (reduced mod p).  All exponent triples must have equal sum.
        """
        terms: dict[Exponents, int] = {}
        degree = None
        for coef, exps in monomials:
            if isinstance(coef, FieldElement):
                if coef.field != field:
                    raise FieldMismatchError("coefficient from a different field")
                code = coef.code
            elif isinstance(coef, int):
                code = coef % field.p
            else:
                code = field.encode(coef)
            exps = tuple(int(e) for e in exps)
            if degree is None:
                degree = sum(exps)
            terms[exps] = field.add(terms.get(exps, 0), code)
        if degree is None:
            raise BadParametersError("empty monomial list")
        return cls(field, degree, terms)

    # -- ring operations ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def monomials(self) -> list[tuple[Exponents, int]]:
        """Terms in canonical order: exponent triples descending."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def __add__(self, other: "Curve") -> "Curve":
        self._check_compatible(other)
        out = dict(self.terms)
        f = self.field
        for exps, code in other.terms.items():
            s = f.add(out.get(exps, 0), code)
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return Curve(f, self.degree, out)

    def __sub__(self, other: "Curve") -> "Curve":
        return self + other.scale(self.field.neg(1))

    def __mul__(self, other: "Curve") -> "Curve":
        if self.field != other.field:
            raise FieldMismatchError("curves over different fields")
        f = self.field
        out: dict[Exponents, int] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exps = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2])
                s = f.add(out.get(exps, 0), f.mul(ca, cb))
                if s:
                    out[exps] = s
                else:
                    out.pop(exps, None)
        return Curve(f, self.degree + other.degree, out)

    def scale(self, code: int) -> "Curve":
        f = self.field
        return Curve(
            f, self.degree, {e: f.mul(c, code) for e, c in self.terms.items()}
        )

    def pow(self, k: int) -> "Curve":
        out = Curve(self.field, 0, {(0, 0, 0): 1})
        for _ in range(k):
            out = out * self
        return out

    def _check_compatible(self, other: "Curve") -> None:
        if self.field != other.field:
            raise FieldMismatchError("curves over different fields")
        if self.degree != other.degree and not (self.is_zero or other.is_zero):
            raise DegreeMismatchError(
                f"degree {self.degree} vs {other.degree}"
            )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Curve)
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.field.key, tuple(self.monomials())))

    # -- evaluation -----------------------------------------------------------

    def evaluate_codes(self, codes) -> int:
        f = self.field
        x0, x1, x2 = codes
        acc = 0
        for (e0, e1, e2), c in self.terms.items():
            v = c
            if e0:
                v = f.mul(v, f.pow(x0, e0))
            if e1:
                v = f.mul(v, f.pow(x1, e1))
            if e2:
                v = f.mul(v, f.pow(x2, e2))
            acc = f.add(acc, v)
        return acc

    def evaluate(self, P: ProjPoint) -> FieldElement:
        """Value at the normalized representative; zero iff P is on the curve."""
        if P.field != self.field:
            raise FieldMismatchError("point from a different field")
        return FieldElement(self.field, self.evaluate_codes(P.codes))

    def contains(self, P: ProjPoint) -> bool:
        return self.evaluate_codes(P.codes) == 0

    def partial(self, i: int) -> "Curve":
        """Formal derivative in X_i; may be identically zero."""
        if i not in (0, 1, 2):
            raise BadParametersError(f"coordinate index {i}")
        f = self.field
        out: dict[Exponents, int] = {}
        for exps, c in self.terms.items():
            e = exps[i]
            scaled = f.smul(e, c)
            if scaled == 0:
                continue
            new = list(exps)
            new[i] = e - 1
            key = tuple(new)
            s = f.add(out.get(key, 0), scaled)
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return Curve(f, max(self.degree - 1, 0), out)

    def __repr__(self) -> str:
        if self.is_zero:
            return "Curve(0)"
        names = ("X", "Y", "Z")
        parts = []
        for exps, c in self.monomials():
            coef = list(self.field.digits(c))
            mono = "*".join(
                f"{names[i]}^{e}" if e > 1 else names[i]
                for i, e in enumerate(exps)
                if e
            )
            parts.append(f"{coef}*{mono}" if mono else f"{coef}")
        return "Curve(" + " + ".join(parts) + ")"


# ---------------------------------------------------------------------------
# points
# ---------------------------------------------------------------------------


def rational_points(F: Curve) -> list[ProjPoint]:
    """All plane points where F vanishes, in canonical order."""
    plane = plane_for(F.field)
    return [P for P in plane.points if F.evaluate_codes(P.codes) == 0]


def tangent_line(F: Curve, P: ProjPoint) -> ProjLine:
    """The line whose coefficients are the three partials evaluated at P.

    Requires P on the curve and not singular.  Incidence with P holds by the
    Euler relation and is re-checked numerically.
    """
    if P.field != F.field:
        raise FieldMismatchError("point from a different field")
    if not F.contains(P):
        raise NotOnCurveError(f"{P} is not on the curve")
    grads = tuple(F.partial(i).evaluate_codes(P.codes) for i in (0, 1, 2))
    if grads == (0, 0, 0):
        raise SingularPointError(f"all partials vanish at {P}")
    line = ProjLine(F.field, grads)
    if not line.incident(P):
        raise AssertionError("tangent line misses its point")  # pragma: no cover
    return line


def extension_with_embedding(field: FieldSpec, m: int) -> tuple[FieldSpec, list[int]]:
    """GF(q^m) together with the code map embedding GF(q) into it.

    The extension is built as GF(p^(n*m)) over its own default polynomial;
    the embedding sends the residue generator of the base field to the
    smallest root of the base defining polynomial in the extension, which
    pins down a single canonical field inclusion.
    """
    if m == 1:
        return field, list(range(field.q))
    if field.q**m > EXTENSION_CAP:
        raise TooLargeError(f"q^m = {field.q}^{m} exceeds the extension cap 2^20")
    ext = field_create(field.p, field.n * m)
    root = None
    for cand in range(ext.q):
        acc = 0
        for c in reversed(field.poly):
            acc = ext.add(ext.mul(acc, cand), c % field.p)
        if acc == 0:
            root = cand
            break
    if root is None:  # pragma: no cover
        raise AssertionError("defining polynomial has no root in the extension")
    powers = [1]
    for _ in range(field.n - 1):
        powers.append(ext.mul(powers[-1], root))
    emb = [
        sum_codes(ext, [ext.smul(d, powers[i]) for i, d in enumerate(field.digits(c))])
        for c in range(field.q)
    ]
    return ext, emb


def sum_codes(field: FieldSpec, codes) -> int:
    acc = 0
    for c in codes:
        acc = field.add(acc, c)
    return acc


def embed_curve(F: Curve, ext: FieldSpec, emb: list[int]) -> Curve:
    return Curve(ext, F.degree, {e: emb[c] for e, c in F.terms.items()})


def singular_points(F: Curve, m: int = 1) -> list[ProjPoint]:
    """Points of PG(2, q^m) where F and all three partials vanish.

    The scan is exhaustive over the chosen extension; callers decide how far
    to push m (singular points can live over larger extensions than any
    finite scan covers).
    """
    if m < 1:
        raise BadParametersError("extension degree m must be >= 1")
    if F.field.q**m > EXTENSION_CAP:
        raise TooLargeError(f"q^m = {F.field.q}^{m} exceeds the extension cap 2^20")
    ext, emb = extension_with_embedding(F.field, m)
    Fe = embed_curve(F, ext, emb)
    polys = [Fe] + [Fe.partial(i) for i in (0, 1, 2)]
    plane = plane_for(ext)
    out = []
    for codes in plane.iter_point_codes():
        if all(g.evaluate_codes(codes) == 0 for g in polys):
            out.append(ProjPoint(ext, codes, normalize=False))
    return out


# ---------------------------------------------------------------------------
# intersection multiplicity
# ---------------------------------------------------------------------------


def intersection_multiplicity(F: Curve, line: ProjLine, P: ProjPoint) -> int:
    """Order of contact of the curve with a line at a common point.

    The line is parametrized as P + s*B with B its first canonical point
    distinct from P; the returned value is the multiplicity of the root
    s = 0 in the restriction of F to the line.  If the restriction is
    identically zero (the line divides F) the sentinel degree+1 is returned.
    The value does not depend on the parametrization choice.
    """
    f = F.field
    if not line.incident(P):
        raise NotIncidentError(f"{P} is not on {line}")
    if not F.contains(P):
        raise NotOnCurveError(f"{P} is not on the curve")
    B = None
    for Q in plane_for(f).points_on_line(line):
        if Q.codes != P.codes:
            B = Q
            break
    assert B is not None
    d = F.degree
    # restriction g(s) = F(P + s*B), coefficients by convolution
    g = [0] * (d + 1)
    for exps, c in F.terms.items():
        mono = [c]
        for i in (0, 1, 2):
            base = (P.codes[i], B.codes[i])  # A_i + s B_i
            for _ in range(exps[i]):
                nxt = [0] * (len(mono) + 1)
                for k, mc in enumerate(mono):
                    if mc == 0:
                        continue
                    nxt[k] = f.add(nxt[k], f.mul(mc, base[0]))
                    nxt[k + 1] = f.add(nxt[k + 1], f.mul(mc, base[1]))
                mono = nxt
        for k, mc in enumerate(mono):
            g[k] = f.add(g[k], mc)
    for k, coef in enumerate(g):
        if coef != 0:
            return k
    return d + 1


# ---------------------------------------------------------------------------
# divisibility test for the q-power tangency property
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FrobeniusVerdict:
    """Outcome of the exact division of the q-power gradient sum by F."""

    nonclassical: bool
    pivot: int
    quotient: Curve | None
    remainder: Curve | None

    def __bool__(self) -> bool:
        return self.nonclassical


def _pivot_divmod(num: Curve, den: Curve, pivot: int) -> tuple[Curve, Curve]:
    """Exact long division viewing both polynomials as univariate in X_pivot.

    Valid because den contains X_pivot^d with a nonzero constant coefficient,
    making the leading coefficient (in the pivot) a unit of the coefficient
    ring.  Quotient and remainder are then unique with the remainder of
    pivot-degree < d.
    """
    f = num.field
    d = den.degree
    lead_key = tuple(d if i == pivot else 0 for i in range(3))
    lead_inv = f.inv(den.terms[lead_key])
    rem = dict(num.terms)
    quot: dict[Exponents, int] = {}

    def pivot_degree() -> int:
        return max((e[pivot] for e in rem), default=-1)

    top = pivot_degree()
    while top >= d:
        heads = [e for e in rem if e[pivot] == top]
        for e in heads:
            qc = f.mul(rem[e], lead_inv)
            qe = tuple(e[i] - d if i == pivot else e[i] for i in range(3))
            quot[qe] = f.add(quot.get(qe, 0), qc)
            for de, dc in den.terms.items():
                re = (qe[0] + de[0], qe[1] + de[1], qe[2] + de[2])
                s = f.sub(rem.get(re, 0), f.mul(qc, dc))
                if s:
                    rem[re] = s
                else:
                    rem.pop(re, None)
        new_top = pivot_degree()
        assert new_top < top
        top = new_top
    q_curve = Curve(f, num.degree - d, quot)
    r_curve = Curve(f, num.degree, rem)
    return q_curve, r_curve


def frobenius_nonclassical_test(F: Curve) -> FrobeniusVerdict:
    """Decide whether F divides X0^q*F_0 + X1^q*F_1 + X2^q*F_2.

    Divisibility is equivalent to the q-power image of every non-singular
    curve point lying on the tangent line there.  Returns the quotient on
    success, or the nonzero remainder as a non-divisibility witness.  F is
    assumed irreducible (not checked) and must contain some pure power
    X_i^d, which serves as the division pivot.
    """
    f = F.field
    d = F.degree
    pivot = None
    for i in (0, 1, 2):
        key = tuple(d if j == i else 0 for j in range(3))
        if F.terms.get(key, 0) != 0:
            pivot = i
            break
    if pivot is None:
        raise NoPivotError("no variable occurs as a pure d-th power")
    q = f.q
    G = Curve(f, q + d - 1, {})
    for i in (0, 1, 2):
        gi = F.partial(i)
        if gi.is_zero:
            continue
        xi_q = tuple(q if j == i else 0 for j in range(3))
        G = G + (Curve(f, q, {xi_q: 1}) * gi)
    if G.is_zero:
        # gradient sum collapses entirely; divisible with zero quotient
        return FrobeniusVerdict(True, pivot, Curve(f, q - 1, {}), None)
    quot, rem = _pivot_divmod(G, F, pivot)
    if rem.is_zero:
        check = F * quot
        if check != G:  # pragma: no cover
            raise AssertionError("division re-expansion mismatch")
        return FrobeniusVerdict(True, pivot, quot, None)
    return FrobeniusVerdict(False, pivot, None, rem)


# ---------------------------------------------------------------------------
# contact-order estimation by sampling
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EpsilonEstimate:
    """Sampled estimate of the generic tangent contact order."""

    value: int
    m_max: int
    sample_size: int
    seed: int
    per_level: tuple[dict, ...]  # one entry per extension degree sampled

    def to_json_dict(self) -> dict:
        return {
            "value": self.value,
            "method": "empirical",
            "m_max": self.m_max,
            "sample_size": self.sample_size,
            "seed": self.seed,
            "levels": list(self.per_level),
        }


def sample_curve_points(
    F: Curve, m: int, count: int, rng: random.Random, max_attempts: int | None = None
) -> tuple[FieldSpec, Curve, list[ProjPoint]]:
    """Draw non-singular points of F over GF(q^m) by rejection sampling.

    Returns the extension field, the embedded curve, and the sampled points
    (duplicates allowed; order fixed by the RNG stream).
    """
    ext, emb = extension_with_embedding(F.field, m)
    Fe = embed_curve(F, ext, emb)
    partials = [Fe.partial(i) for i in (0, 1, 2)]
    attempts = max_attempts if max_attempts is not None else max(2000, count * 1000)
    found = []
    for _ in range(attempts):
        if len(found) >= count:
            break
        codes = (rng.randrange(ext.q), rng.randrange(ext.q), rng.randrange(ext.q))
        if codes == (0, 0, 0):
            continue
        P = ProjPoint(ext, codes)
        if Fe.evaluate_codes(P.codes) != 0:
            continue
        if all(g.evaluate_codes(P.codes) == 0 for g in partials):
            continue
        found.append(P)
    return ext, Fe, found


def epsilon_estimate(
    F: Curve, m_max: int = 2, sample_size: int = 200, seed: int = 0
) -> EpsilonEstimate:
    """Minimum tangent contact order among sampled points over GF(q^m), m <= m_max.

    Deterministic for a fixed seed.  This is a heuristic for the generic
    contact order: special points only ever push the observed multiplicity
    up, so the minimum over a spread of extensions is the estimate.
    """
    if m_max < 1:
        raise BadParametersError("m_max must be >= 1")
    rng = random.Random(seed)
    best = None
    levels = []
    for m in range(1, m_max + 1):
        ext, Fe, pts = sample_curve_points(F, m, sample_size, rng)
        mults: dict[int, int] = {}
        for P in pts:
            tl = tangent_line(Fe, P)
            mult = intersection_multiplicity(Fe, tl, P)
            mults[mult] = mults.get(mult, 0) + 1
        level_min = min(mults) if mults else None
        levels.append(
            {"m": m, "q_ext": ext.q, "points_sampled": len(pts), "min_multiplicity": level_min}
        )
        if level_min is not None and (best is None or level_min < best):
            best = level_min
    if best is None:
        raise NoPointsFoundError("no curve points found over any sampled extension")
    return EpsilonEstimate(best, m_max, sample_size, seed, tuple(levels))


# ---------------------------------------------------------------------------
# identity verification
# ---------------------------------------------------------------------------


def verify_identity(
    F: Curve,
    H: Curve,
    P0: Curve,
    P1: Curve,
    P2: Curve,
    eps: int,
    variant: str = "eps-power",
) -> bool:
    """Exact expansion check of a supplied polynomial identity.

    variant "eps-power":  F*H == X0*P0^eps + X1*P1^eps + X2*P2^eps
    variant "q-power":    F*H == X0^(q/eps)*P0 + X1^(q/eps)*P1 + X2^(q/eps)*P2

    Degrees must be consistent before expansion; both sides are compared
    monomial by monomial.
    """
    f = F.field
    for name, poly in (("H", H), ("P0", P0), ("P1", P1), ("P2", P2)):
        if poly.field != f:
            raise FieldMismatchError(f"{name} over a different field")
    ps = (P0, P1, P2)
    if variant == "eps-power":
        if len({p.degree for p in ps}) != 1:
            raise DegreeMismatchError("P0, P1, P2 must share a degree")
        if F.degree + H.degree != 1 + eps * P0.degree:
            raise DegreeMismatchError(
                f"deg(F*H) = {F.degree + H.degree} but right side has degree "
                f"{1 + eps * P0.degree}"
            )
        rhs = Curve(f, F.degree + H.degree, {})
        for i, p in enumerate(ps):
            xi = tuple(1 if j == i else 0 for j in range(3))
            rhs = rhs + (Curve(f, 1, {xi: 1}) * p.pow(eps))
    elif variant == "q-power":
        if eps <= 0 or f.q % eps != 0:
            raise BadParametersError(f"eps = {eps} does not divide q = {f.q}")
        shift = f.q // eps
        if len({p.degree for p in ps}) != 1:
            raise DegreeMismatchError("P0, P1, P2 must share a degree")
        if F.degree + H.degree != shift + P0.degree:
            raise DegreeMismatchError(
                f"deg(F*H) = {F.degree + H.degree} but right side has degree "
                f"{shift + P0.degree}"
            )
        rhs = Curve(f, F.degree + H.degree, {})
        for i, p in enumerate(ps):
            xi = tuple(shift if j == i else 0 for j in range(3))
            rhs = rhs + (Curve(f, shift, {xi: 1}) * p)
    else:
        raise BadParametersError(f"unknown variant {variant!r}")
    return (F * H).terms == rhs.terms


# ---------------------------------------------------------------------------
# bundled analysis
# ---------------------------------------------------------------------------


@dataclass
class CurveAnalysis:
    """Everything the certificate records about a curve."""

    rational_point_count: int
    points: list[ProjPoint]
    singular_search_m: int
    singular: list[ProjPoint]
    frobenius: FrobeniusVerdict | None = None
    epsilon: EpsilonEstimate | None = None
    diagnostics: list[str] = dc_field(default_factory=list)


def analyze_curve(
    F: Curve,
    *,
    singular_m: int = 1,
    run_frobenius: bool = True,
    run_epsilon: bool = True,
    eps_m_max: int = 2,
    eps_samples: int = 200,
    seed: int = 0,
) -> CurveAnalysis:
    """Run the standard battery of curve checks with recorded bounds.

    When the divisibility test proves the tangency property and p > 2, the
    sampled contact order must exceed 2 and be a power of p; a violation
    means the sample was inadequate and is reported as a diagnostic.
    """
    pts = rational_points(F)
    sing = singular_points(F, singular_m)
    analysis = CurveAnalysis(
        rational_point_count=len(pts),
        points=pts,
        singular_search_m=singular_m,
        singular=sing,
    )
    if run_frobenius:
        analysis.frobenius = frobenius_nonclassical_test(F)
    if run_epsilon:
        analysis.epsilon = epsilon_estimate(F, eps_m_max, eps_samples, seed)
    if (
        analysis.frobenius is not None
        and analysis.frobenius.nonclassical
        and analysis.epsilon is not None
        and F.field.p > 2
    ):
        eps = analysis.epsilon.value
        if eps <= 2:
            analysis.diagnostics.append(
                f"contact order estimate {eps} should exceed 2 in characteristic "
                f"{F.field.p} for a curve with the tangency property"
            )
        else:
            e = eps
            while e % F.field.p == 0:
                e //= F.field.p
            if e != 1:
                analysis.diagnostics.append(
                    f"contact order estimate {eps} is not a power of {F.field.p}"
                )
    return analysis


# ---------------------------------------------------------------------------
# file formats
# ---------------------------------------------------------------------------


def curve_to_json_dict(F: Curve, include_field: bool = True) -> dict:
    out: dict = {}
    if include_field:
        out["field"] = {"p": F.field.p, "n": F.field.n, "poly": list(F.field.poly)}
    out["monomials"] = [
        {"c": list(F.field.digits(c)), "e": list(e)} for e, c in F.monomials()
    ]
    return out


def curve_to_text(F: Curve) -> str:
    lines = []
    for e, c in F.monomials():
        coef = ",".join(str(d) for d in F.field.digits(c))
        lines.append(f"coef=[{coef}] exp={e[0]},{e[1]},{e[2]}")
    return "\n".join(lines) + "\n"


def curve_from_json_dict(obj: dict, field: FieldSpec | None = None) -> Curve:
    if field is None:
        spec = obj.get("field")
        if spec is None:
            raise BadParametersError("curve file carries no field and none was supplied")
        field = field_create(spec["p"], spec["n"], spec.get("poly"))
    monos = [(m["c"], tuple(m["e"])) for m in obj["monomials"]]
    return Curve.from_monomials(field, monos)


def curve_from_text(text: str, field: FieldSpec) -> Curve:
    monos = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            coef_part, exp_part = line.split()
            coeffs = [int(v) for v in coef_part.removeprefix("coef=[").removesuffix("]").split(",")]
            exps = tuple(int(v) for v in exp_part.removeprefix("exp=").split(","))
        except ValueError as exc:
            raise BadParametersError(f"bad curve line: {raw!r}") from exc
        monos.append((coeffs, exps))
    if not monos:
        raise BadParametersError("curve file has no monomials")
    return Curve.from_monomials(field, monos)
