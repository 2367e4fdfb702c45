"""Exact verification routines: Appell property, derivative matrices,
branching (lattice) check, CK restriction identities and closed-form
agreement. Each returns a small report object instead of raising."""
from __future__ import annotations

from dataclasses import dataclass, field

from .ck import InitialDatum, ck_extend, edge_components, initial_data_decomposition, make_datum
from .dimensions import dim_M
from .fischer import fischer, gram
from .gt import (
    BasisFamily,
    closed_family_n2,
    closed_form_n2,
    edge_closed_form,
    edge_via_ck,
    gt_basis,
    interlacing_set,
    weight_of,
)
from .operators import apply_upz, apply_upzd, is_hermitean_monogenic
from .poly import SpaceDescriptor, SpinorPolynomial
from .scalar import ZERO, GaussianRational

__all__ = [
    "CheckReport",
    "appell_check",
    "edge_derivative_check",
    "DerivativeMatrix",
    "derivative_matrix",
    "LatticeReport",
    "lattice_check",
    "ck_restriction_check",
    "data_for",
    "scalar_multiple",
    "closed_form_agreement",
    "edge_agreement",
    "family_soundness",
]


@dataclass
class CheckReport:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, detail) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(detail)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": [str(f) for f in self.failures[:20]],
            "info": self.info,
        }


# --- Appell property --------------------------------------------------------

_VARS = {"z1": (1, False), "z2": (2, False), "zb1": (1, True), "zb2": (2, True)}


def appell_check(a_max: int, b_max: int) -> CheckReport:
    """The four derivative identities for the grade-1 closed forms in C^2,
    plus the edge-grade differentiation rules (see :func:`edge_derivative_check`)."""
    rep = CheckReport("appell")
    P = closed_form_n2
    per_identity = {"i": 0, "ii": 0, "iii": 0, "iv": 0}
    for a in range(a_max + 1):
        for b in range(b_max + 1):
            for mu in range(-b, a + 2):
                src = P(a, b, mu)
                cases = (
                    ("i", src.partial(2, True), P(a, b - 1, mu)),
                    ("ii", src.partial(2), P(a - 1, b, mu)),
                    ("iii", src.partial(1, True), -P(a, b - 1, mu + 1)),
                    ("iv", src.partial(1), P(a - 1, b, mu - 1)),
                )
                for tag, lhs, rhs in cases:
                    per_identity[tag] += 1
                    rep.record(lhs == rhs, (tag, a, b, mu))
    edge = edge_derivative_check(max(a_max, b_max), max_n=3)
    rep.checked += edge.checked
    rep.failures.extend(edge.failures)
    rep.info = {"identities": per_identity, "edge_checks": edge.checked}
    return rep


def _shift_chain(weights: tuple, level: int, position: int, delta: int) -> tuple:
    # weights[0] is the U(n) weight; level counts from n down to 1
    out = []
    for w in weights:
        m = len(w)
        if m >= level:
            w = list(w)
            w[position if position >= 0 else m + position] += delta
            w = tuple(w)
        out.append(w)
    return tuple(out)


def edge_derivative_check(deg_max: int, max_n: int = 3) -> CheckReport:
    """Edge-grade differentiation rules for the monomial bases, n <= max_n.

    Grade 0: d/dzbar_v maps a basis element to the element whose weight
    chain has its last entry raised by one on every level >= v (zero if
    that chain is not a GT pattern); every d/dz_v vanishes. Grade n: d/dz_v
    lowers the first entry on levels >= v; every d/dzbar_v vanishes.
    """
    rep = CheckReport("edge-derivatives")
    for n in range(1, max_n + 1):
        for deg in range(deg_max + 1):
            for r, conj_live in ((0, True), (n, False)):
                a, b = (0, deg) if r == 0 else (deg, 0)
                fam = edge_closed_form(n, a, b, r)
                if deg == 0:
                    lower = None
                else:
                    la, lb = (0, deg - 1) if r == 0 else (deg - 1, 0)
                    lower = {lab.weights: p for lab, p in edge_closed_form(n, la, lb, r).members}
                for lab, p in fam.members:
                    for v in range(1, n + 1):
                        dead = p.partial(v, not conj_live)
                        rep.record(dead.is_zero(), (n, r, deg, str(lab), v, "dead"))
                        live = p.partial(v, conj_live)
                        if lower is None:
                            expected = SpinorPolynomial.zero(n)
                        else:
                            chain = _shift_chain(lab.weights, v, -1 if r == 0 else 0, 1 if r == 0 else -1)
                            expected = lower.get(chain, SpinorPolynomial.zero(n))
                        rep.record(live == expected, (n, r, deg, str(lab), v, "live"))
    return rep


# --- derivative matrices ----------------------------------------------------

@dataclass(frozen=True)
class DerivativeMatrix:
    variable: str
    source: SpaceDescriptor
    target: SpaceDescriptor | None
    row_labels: tuple
    col_labels: tuple
    entries: tuple  # rows x cols of GaussianRational

    def column_ok(self) -> bool:
        """At most one nonzero entry per column, and it is +1 or -1."""
        ncols = len(self.col_labels)
        for c in range(ncols):
            nz = [self.entries[r][c] for r in range(len(self.row_labels)) if self.entries[r][c]]
            if len(nz) > 1:
                return False
            if nz and nz[0] not in (GaussianRational(1), GaussianRational(-1)):
                return False
        return True

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_labels), len(self.col_labels)


def derivative_matrix(variable: str, source: SpaceDescriptor, families=None) -> DerivativeMatrix:
    """Matrix of a derivative between the closed-form bases in C^2.

    Columns index the source basis, rows the target basis (bidegree
    lowered by one). Coordinates come from the orthogonality of the target
    basis and are checked by exact reconstruction.
    """
    if variable not in _VARS:
        raise ValueError(f"variable must be one of {sorted(_VARS)}")
    if source.n != 2:
        raise ValueError("derivative matrices are defined for n = 2")
    fam_of = families or closed_family_n2
    j, conj = _VARS[variable]
    src = fam_of(source.a, source.b, source.r)
    ta, tb = (source.a, source.b - 1) if conj else (source.a - 1, source.b)
    if ta < 0 or tb < 0:
        cols = tuple(lab for lab, _ in src.members)
        for _, p in src.members:
            if not p.partial(j, conj).is_zero():
                raise ValueError("derivative into an empty bidegree is nonzero")
        return DerivativeMatrix(variable, source, None, (), cols, ())
    tgt = fam_of(ta, tb, source.r)
    norms = [fischer(p, p) for _, p in tgt.members]
    rows = [[ZERO] * len(src.members) for _ in tgt.members]
    for c, (_, p) in enumerate(src.members):
        dp = p.partial(j, conj)
        recon = SpinorPolynomial.zero(2)
        for r_, (_, t) in enumerate(tgt.members):
            coord = fischer(t, dp) / norms[r_]
            rows[r_][c] = coord
            if coord:
                recon = recon + t.scale(coord)
        if recon != dp:
            raise ValueError(f"derivative of column {c} leaves the target space")
    return DerivativeMatrix(
        variable,
        source,
        tgt.descriptor,
        tuple(lab for lab, _ in tgt.members),
        tuple(lab for lab, _ in src.members),
        tuple(tuple(r) for r in rows),
    )


# --- branching / lattice ----------------------------------------------------

@dataclass
class LatticeReport:
    descriptor: SpaceDescriptor
    top_weight: tuple
    component_weights: list
    interlacing: set
    component_dims: int
    grid_count: int
    nonzero_components: int

    @property
    def missing(self) -> set:
        return self.interlacing - set(self.component_weights)

    @property
    def extra(self) -> set:
        return set(self.component_weights) - self.interlacing

    @property
    def duplicates(self) -> list:
        seen, dup = set(), []
        for w in self.component_weights:
            if w in seen:
                dup.append(w)
            seen.add(w)
        return dup

    @property
    def generic(self) -> bool:
        d = self.descriptor
        return 2 <= d.r <= d.n - 2

    @property
    def passed(self) -> bool:
        d = self.descriptor
        ok = not self.missing and not self.extra and not self.duplicates
        ok = ok and self.component_dims == dim_M(d.n, d.a, d.b, d.r)
        if self.generic:
            ok = ok and self.nonzero_components == self.grid_count
        return ok

    def to_json(self) -> dict:
        return {
            "descriptor": self.descriptor.to_json(),
            "top_weight": list(self.top_weight),
            "component_weights": [list(w) for w in self.component_weights],
            "interlacing_count": len(self.interlacing),
            "missing": sorted(list(w) for w in self.missing),
            "extra": sorted(list(w) for w in self.extra),
            "duplicates": [list(w) for w in self.duplicates],
            "grid_count": self.grid_count,
            "nonzero_components": self.nonzero_components,
            "generic_position": self.generic,
            "passed": self.passed,
        }


def lattice_check(n: int, a: int, b: int, r: int) -> LatticeReport:
    """Compare the weights of the nonzero Fischer components against the
    direct enumeration of weights interlacing the top weight."""
    comps = [c for c in initial_data_decomposition(n, a, b, r) if not c.empty]
    weights = [weight_of(c.source.a, c.source.b, c.source.r, c.source.n) for c in comps]
    top = weight_of(a, b, r, n)
    return LatticeReport(
        SpaceDescriptor(n, a, b, r),
        top,
        weights,
        interlacing_set(top),
        sum(dim_M(c.source.n, c.source.a, c.source.b, c.source.r) for c in comps),
        2 * (a + 1) * (b + 1),
        len(comps),
    )


# --- CK restriction identities ----------------------------------------------

def _derivs(P: SpinorPolynomial, n: int, times: int, conjugated: bool) -> SpinorPolynomial:
    for _ in range(times):
        P = P.partial(n, conjugated)
    return P


def ck_restriction_check(data: list[InitialDatum]) -> CheckReport:
    """Restrictions of the CK extension of a set of data sharing one target.

    With p0[j] the summed A-payloads of offset j and p1[i] the summed
    B-payloads of offset i, the extension M must satisfy
      M|                = p0[0] + f†_n p1[0]
      d^j/dzbar_n^j M|  = p0[j] - f†_n upzd p0[j-1]        (j >= 1)
      d^i/dz_n^i M|     = upz p1[i-1] + f†_n p1[i]          (i >= 1)
    where ``|`` restricts to C^{n-1} and splits off f†_n.
    """
    rep = CheckReport("ck-restriction")
    if not data:
        return rep
    t = data[0].target
    if any(d.target != t for d in data):
        raise ValueError("data must share one target descriptor")
    n, m = t.n, t.n - 1
    zero = SpinorPolynomial.zero(m)
    p0 = [zero] * (t.b + 1)
    p1 = [zero] * (t.a + 1)
    M = SpinorPolynomial.zero(n)
    for d in data:
        if d.kind == "A":
            p0[d.offset] = p0[d.offset] + d.payload
        else:
            p1[d.offset] = p1[d.offset] + d.payload
        M = M + ck_extend(d)
    rep.record(is_hermitean_monogenic(M), ("h-monogenic", t))
    rep.record(M.conforms_to(t), ("homogeneity", t))
    rep.record(M.restrict_last() == (p0[0], p1[0]), ("restriction", 0))
    for j in range(1, t.b + 1):
        got = _derivs(M, n, j, True).restrict_last()
        want = (p0[j], -apply_upzd(p0[j - 1]))
        rep.record(got == want, ("zbar-derivative", j))
    for i in range(1, t.a + 1):
        got = _derivs(M, n, i, False).restrict_last()
        want = (apply_upz(p1[i - 1]), p1[i])
        rep.record(got == want, ("z-derivative", i))
    return rep


def data_for(n: int, a: int, b: int, r: int) -> list[InitialDatum]:
    """All initial data (one per source basis element) of a descriptor."""
    comps = initial_data_decomposition(n, a, b, r) if 0 < r < n else edge_components(n, a, b, r)
    src_family = gt_basis
    out = []
    for comp in comps:
        if comp.empty:
            continue
        s = comp.source
        for _, P in src_family(s.n, s.a, s.b, s.r).members:
            out.append(make_datum(comp, P))
    return out


# --- closed-form agreement --------------------------------------------------

def scalar_multiple(P: SpinorPolynomial, Q: SpinorPolynomial):
    """The scalar s with ``P == s * Q`` if it exists and is nonzero, else None."""
    if P.n != Q.n or P.is_zero() or Q.is_zero():
        return None
    if set(P.terms) != set(Q.terms):
        return None
    key = next(iter(Q.terms))
    s = P.terms[key] / Q.terms[key]
    return s if Q.scale(s) == P else None


def closed_form_agreement(a: int, b: int) -> CheckReport:
    """Recursive grade-1 basis of M^{(1)}_{a,b}(C^2) versus the closed forms,
    matched by the U(1) weight; records the scalar per element."""
    rep = CheckReport("closed-form-n2")
    fam = gt_basis(2, a, b, 1)
    scalars = {}
    seen = set()
    for lab, P in fam.members:
        mu = lab.weights[-1][0]
        seen.add(mu)
        s = scalar_multiple(P, closed_form_n2(a, b, mu))
        scalars[mu] = str(s) if s is not None else None
        rep.record(s is not None, (a, b, mu))
    rep.record(seen == set(range(-b, a + 2)), ("weights", a, b))
    rep.info["scalars"] = scalars
    return rep


def edge_agreement(n: int, a: int, b: int, r: int) -> CheckReport:
    """gt_basis at r in {0, n} against the monomial display (exactly) and
    against the CK route (up to a recorded nonzero scalar)."""
    rep = CheckReport("closed-form-edge")
    fam = gt_basis(n, a, b, r)
    disp = edge_closed_form(n, a, b, r)
    rep.record(fam.members == disp.members, ("display", n, a, b, r))
    ck_fam = edge_via_ck(n, a, b, r).by_label()
    scalars = []
    for lab, P in fam.members:
        Q = ck_fam.get(lab)
        s = scalar_multiple(Q, P) if Q is not None else None
        rep.record(s is not None, ("ck-route", str(lab)))
        scalars.append(str(s))
    rep.info["ck_scalars"] = sorted(set(scalars))
    return rep


def family_soundness(fam: BasisFamily) -> CheckReport:
    """Count, h-monogenicity, homogeneity, label validity and diagonal Gram."""
    d = fam.descriptor
    rep = CheckReport("soundness")
    rep.record(len(fam) == dim_M(d.n, d.a, d.b, d.r), ("count", len(fam)))
    for lab, P in fam.members:
        rep.record(is_hermitean_monogenic(P), ("hmono", str(lab)))
        rep.record(P.conforms_to(d) and not P.is_zero(), ("homogeneity", str(lab)))
        rep.record(lab.is_interlacing() and lab.weights[0] == weight_of(d.a, d.b, d.r, d.n), ("label", str(lab)))
    rep.record(len(set(fam.labels)) == len(fam), ("distinct labels",))
    g = gram(fam)
    rep.record(g.is_diagonal(), ("gram off-diagonal", g.off_diagonal_nonzeros()[:5]))
    rep.record(g.has_positive_diagonal(), ("gram diagonal",))
    return rep
