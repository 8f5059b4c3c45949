"""Construction of the test elements (bracket-reduction table, Jacobi and
restricted Leibniz elements), the PBW check itself, and the redundant-
relation toolkit for rank-two and B2-shaped presentations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import NCPoly
from .rewrite import RuleSystem, build_rules, normal_form, reduce_bounded
from .oracle import span_contains
from .words import format_word, prec_cmp, shirshov_decompose, xlen


# ---------------------------------------------------------------------------
# bracket-reduction table
# ---------------------------------------------------------------------------

def bracket_table(datum) -> dict:
    """For every u < v in L, the reduction target of [x_u, x_v]: the letter
    x_{uv} or the stored relation right-hand side when uv splits as (u|v),
    and otherwise the value of the defining recursion
        delta_{u1}(T[u2, v]) + q_{u2,v} T[u1, v] x_{u2} - q_{u1,u2} x_{u2} T[u1, v]
    with (u1, u2) the decomposition of u."""
    members = set(datum.L)
    pairs = sorted(
        ((u, v) for u in datum.L for v in datum.L if u < v),
        key=lambda p: (len(p[0]), p[0], p[1]),
    )
    table = {}

    def lookup(a, b):
        return table[(tuple(a), tuple(b))]

    for u, v in pairs:
        w = u + v
        if shirshov_decompose(w) == (u, v):
            if w in members:
                table[(u, v)] = datum.letter(w)
            else:
                table[(u, v)] = datum.reds[w].copy()
        else:
            u1, u2 = shirshov_decompose(u)
            t = datum.partial_delta(u1, table[(u2, v)], lookup, u2 + v)
            t = t + datum.mul(table[(u1, v)], datum.letter(u2)).scale(datum.q_uv(u2, v))
            t = t - datum.mul(datum.letter(u2), table[(u1, v)]).scale(datum.q_uv(u1, u2))
            table[(u, v)] = t
    return table


# ---------------------------------------------------------------------------
# test elements
# ---------------------------------------------------------------------------

def jacobi_element(datum, table, u, v, w) -> NCPoly:
    """[T[u,v], x_w]_{q_{uv,w}} - [x_u, T[v,w]]_{q_{u,vw}}
       + q_{u,v} x_v [x_u, x_w] - q_{v,w} [x_u, x_w] x_v."""
    if not (u < v < w):
        raise ValueError("need u < v < w")
    xu, xv, xw = datum.letter(u), datum.letter(v), datum.letter(w)
    bruv, brvw = table[(u, v)], table[(v, w)]
    inner = datum.q_commutator(xu, xw, datum.q_uv(u, w))
    out = datum.q_commutator(bruv, xw, datum.q_uv(u + v, w))
    out = out - datum.q_commutator(xu, brvw, datum.q_uv(u, v + w))
    out = out + datum.mul(xv, inner).scale(datum.q_uv(u, v))
    out = out - datum.mul(inner, xv).scale(datum.q_uv(v, w))
    return out


def leibniz_le_element(datum, table, u, v) -> NCPoly:
    """For u < v with finite N_u: the N_u - 1 times nested bracket
    [x_u, ... [x_u, T[u,v]]_{q_uu q_uv} ...] minus [redhat_u, x_v]_{q_uv^N}."""
    n = datum.heights[u]
    xu = datum.letter(u)
    quu, quv = datum.q_exp(u, u), datum.q_exp(u, v)
    m = datum.field.unit_order
    acc = table[(u, v)].copy()
    for k in range(1, n):
        acc = datum.q_commutator(xu, acc, datum.field.root((k * quu + quv) % m))
    hat = datum.q_commutator(datum.redhats[u], datum.letter(v), datum.field.root(n * quv % m))
    return acc - hat


def leibniz_self_element(datum, u) -> NCPoly:
    """-[redhat_u, x_u] at trivial twist."""
    return -datum.q_commutator(datum.redhats[u], datum.letter(u), datum.field.one())


def leibniz_gt_element(datum, table, v, u) -> NCPoly:
    """For v < u with finite N_u: the left-nested bracket
    [...[T[v,u], x_u]_{q_vu q_uu} ...] minus [x_v, redhat_u]_{q_vu^N}."""
    n = datum.heights[u]
    xu = datum.letter(u)
    qvu, quu = datum.q_exp(v, u), datum.q_exp(u, u)
    m = datum.field.unit_order
    acc = table[(v, u)].copy()
    for k in range(1, n):
        acc = datum.q_commutator(acc, xu, datum.field.root((qvu + k * quu) % m))
    hat = datum.q_commutator(datum.letter(v), datum.redhats[u], datum.field.root(n * qvu % m))
    return acc - hat


# ---------------------------------------------------------------------------
# bounded membership
# ---------------------------------------------------------------------------

def bounded_span_elements(rs: RuleSystem, bound):
    """All rule elements in word contexts whose full word precedes the bound;
    finite for a finite group.  Group letters on the left are absorbed by
    character homogeneity, so contexts are words times a right group factor."""
    datum = rs.datum
    if not datum.group.is_finite():
        raise ValueError("span enumeration needs a finite group")
    letters = sorted(datum.L)
    lb = xlen(bound)

    all_words, frontier = [()], [()]
    while frontier:
        nxt = [w + (l,) for w in frontier for l in letters if xlen(w) + len(l) <= lb]
        all_words.extend(nxt)
        frontier = nxt

    rules = []
    for (u, v), rhs in rs.pair_rhs.items():
        lhs = datum.monomial((u, v))
        rules.append(((u, v), lhs - rhs))
    for u, rhs in rs.power_rhs.items():
        n = datum.heights[u]
        rules.append(((u,) * n, datum.monomial((u,) * n) - rhs))

    out = []
    els = datum.group.elements()
    for lhs_word, elem in rules:
        ll = xlen(lhs_word)
        for a in all_words:
            la = xlen(a)
            if la + ll > lb:
                continue
            for b in all_words:
                if la + ll + xlen(b) > lb:
                    continue
                site = a + lhs_word + b
                if prec_cmp(site, bound) >= 0:
                    continue
                placed = rs.datum.mul_many(datum.monomial(a), elem, datum.monomial(b))
                for h in els:
                    out.append(NCPoly({
                        (U, datum.group.mul(g, h)): c for (U, g), c in placed.terms.items()
                    }))
    return out


def in_bounded_ideal(rs: RuleSystem, a: NCPoly, bound, use_span_fallback=True):
    """Membership test for the bounded span: deterministic bounded reduction
    first; on a nonzero residue, the exact span test (when available).

    Returns (member, residue, used_fallback)."""
    residue = reduce_bounded(rs, a, bound)
    if residue.is_zero():
        return True, residue, False
    if not use_span_fallback or not rs.datum.group.is_finite():
        return False, residue, False
    elements = bounded_span_elements(rs, bound)
    return span_contains(elements, a), residue, True


# ---------------------------------------------------------------------------
# reports and the check itself
# ---------------------------------------------------------------------------

@dataclass
class ConditionReport:
    kind: str           # jacobi | leibniz_le | leibniz_self | leibniz_gt
    words: tuple
    passed: bool
    element: NCPoly     # the constructed test element
    residue: NCPoly     # what bounded reduction left of it
    used_fallback: bool

    @property
    def residue_terms(self):
        return len(self.residue.terms)

    @property
    def condition_id(self):
        ws = [format_word(w) for w in self.words]
        if self.kind == "jacobi":
            return f"jacobi({'<'.join(ws)})"
        if self.kind == "leibniz_le":
            return f"leibniz({ws[0]};{ws[0]}<{ws[1]})"
        if self.kind == "leibniz_self":
            return f"leibniz({ws[0]};{ws[0]}={ws[0]})"
        return f"leibniz({ws[1]};{ws[0]}<{ws[1]})"

    def line(self):
        status = "pass" if self.passed else "FAIL"
        extra = ", span fallback" if self.used_fallback else ""
        res = "" if self.passed else f", residue terms: {self.residue_terms}"
        return f"{self.condition_id}: {status}{extra}{res}"

    def to_json(self):
        return {
            "id": self.condition_id,
            "status": "pass" if self.passed else "fail",
            "residue_terms": self.residue_terms,
            "span_fallback": self.used_fallback,
        }


@dataclass
class PBWReport:
    mode: str
    conditions: list
    table: dict

    @property
    def passed(self):
        return all(c.passed for c in self.conditions)

    def lines(self):
        out = [c.line() for c in self.conditions]
        out.append(f"verdict: {'PASS' if self.passed else 'FAIL'} ({self.mode} mode, {len(self.conditions)} conditions)")
        return out

    def to_json(self):
        return {
            "mode": self.mode,
            "verdict": "pass" if self.passed else "fail",
            "conditions": [c.to_json() for c in self.conditions],
        }


def _jacobi_triples(datum, mode):
    members = set(datum.L)
    for i, u in enumerate(datum.L):
        for j in range(i + 1, len(datum.L)):
            v = datum.L[j]
            if mode == "reduced":
                w0 = u + v
                if w0 in members and shirshov_decompose(w0) == (u, v):
                    continue
            for k in range(j + 1, len(datum.L)):
                yield u, v, datum.L[k]


def _leibniz_pairs(datum, mode):
    """Yields ("le", u, v) for u <= v and ("gt", v, u) for v < u, u of finite
    height, thinned in reduced mode."""
    members = set(datum.L)
    for u in datum.d_set():
        yield ("self", u, u)
        for v in datum.L:
            if v > u:
                if mode == "reduced" and any(v == u + t for t in members):
                    continue
                yield ("le", u, v)
            elif v < u:
                if mode == "reduced" and any(v == t + u for t in members):
                    continue
                yield ("gt", v, u)


def check_pbw(datum, mode="full", use_span_fallback=True, table=None, rules=None) -> PBWReport:
    """Evaluate the q-Jacobi and restricted q-Leibniz conditions; each test
    element must lie in the span of rule elements placed below its bound."""
    if mode not in ("full", "reduced"):
        raise ValueError("mode must be 'full' or 'reduced'")
    if table is None:
        table = bracket_table(datum)
    if rules is None:
        rules = build_rules(datum, table)
    conditions = []

    def record(kind, words, element, bound):
        ok, residue, fb = in_bounded_ideal(rules, element, bound, use_span_fallback)
        conditions.append(ConditionReport(kind, words, ok, element, residue, fb))

    for u, v, w in _jacobi_triples(datum, mode):
        record("jacobi", (u, v, w), jacobi_element(datum, table, u, v, w), (u, v, w))
    for kind, a, b in _leibniz_pairs(datum, mode):
        if kind == "self":
            n = datum.heights[a]
            record("leibniz_self", (a,), leibniz_self_element(datum, a), (a,) * (n + 1))
        elif kind == "le":
            n = datum.heights[a]
            record("leibniz_le", (a, b), leibniz_le_element(datum, table, a, b), (a,) * n + (b,))
        else:
            n = datum.heights[b]
            record("leibniz_gt", (a, b), leibniz_gt_element(datum, table, a, b), (a,) + (b,) * n)
    return PBWReport(mode, conditions, table)


# ---------------------------------------------------------------------------
# redundant-relation toolkit
# ---------------------------------------------------------------------------

def forced_serre_from_power(datum, u, v, side) -> NCPoly:
    """The relation right-hand side forced by a height-2 power:
    side "left" gives the target for uuv via [redhat_u, x_v]_{q_uv^2},
    side "right" the target for uvv via [x_u, redhat_v]_{q_uv^2}."""
    u, v = tuple(u), tuple(v)
    q2 = datum.field.root(2 * datum.q_exp(u, v) % datum.field.unit_order)
    if side == "left":
        if datum.heights.get(u) != 2:
            raise ValueError(f"height of {format_word(u)} must be 2")
        return datum.q_commutator(datum.redhats[u], datum.letter(v), q2)
    if side == "right":
        if datum.heights.get(v) != 2:
            raise ValueError(f"height of {format_word(v)} must be 2")
        return datum.q_commutator(datum.letter(u), datum.redhats[v], q2)
    raise ValueError("side must be 'left' or 'right'")


def forced_power_from_jacobi(datum, table, level):
    """Closed-form redundant power relations.  Returns (coefficient, rhs,
    replaced word, replaced height) or None when the leading coefficient
    vanishes.

    Levels: "rank2-12" needs L containing {1, 12, 2} with N_12 = 2;
    "b2-11212", "b2-112" (N_112 = 2), "b2-12" (N_12 = 3) need
    L = {1, 112, 12, 2}."""
    x1, x2 = (1,), (2,)
    x12, x112 = (1, 2), (1, 1, 2)
    x11212 = (1, 1, 2, 1, 2)
    q = datum.q_uv
    f = datum.field

    def check_shape(rhs, word, n):
        if not datum.prec_L_check(rhs, (word,) * n, strict=True):
            raise ValueError(
                f"forced right-hand side for {format_word(word)}^{n} violates the lower-terms shape"
            )

    if level == "rank2-12":
        _need_letters(datum, (x1, x12, x2), level)
        if datum.heights.get(x12) != 2:
            raise ValueError("rank2-12 needs height 2 for the word 12")
        coeff = q(x1, x12) - q(x12, x2)
        if coeff.is_zero():
            return None
        combo = datum.q_commutator(table[(x1, x12)], datum.letter(x2), q(x112, x2))
        combo = combo - datum.q_commutator(datum.letter(x1), table[(x12, x2)], q(x1, (1, 2, 2)))
        rhs = combo.scale(-coeff.inverse())
        check_shape(rhs, x12, 2)
        return coeff, rhs, x12, 2

    _need_letters(datum, (x1, x112, x12, x2), level)
    q11, q22, q12, q21 = q(x1, x1), q(x2, x2), q(x1, x2), q(x2, x1)

    def lookup(a, b):
        return table[(tuple(a), tuple(b))]

    if level == "b2-11212":
        # coefficient q12 * ((3)_q11 - (2)_q22)
        coeff = q12 * (f.one() + q11 + q11 * q11 - f.one() - q22)
        if coeff.is_zero():
            return None
        qp = q12 * (coeff * (f.one() + q11 * q11 * q12 * q21 * q22) - q11 * q12 * (f.one() + q22))
        combo = datum.q_commutator(table[(x1, x112)], datum.letter(x2), q((1, 1, 1, 2), x2))
        delta = datum.partial_delta(x1, table[(x12, x2)], lookup, (1, 2, 2))
        combo = combo - datum.q_commutator(datum.letter(x1), delta, q(x1, (1, 1, 2, 2)))
        combo = combo + datum.monomial((x12, x112)).scale(qp)
        rhs = combo.scale(-coeff.inverse())
        if not datum.prec_L_check(rhs, (x11212,), strict=True):
            raise ValueError("forced right-hand side for 11212 violates the lower-terms shape")
        return coeff, rhs, x11212, 1

    if level == "b2-112":
        if datum.heights.get(x112) != 2:
            raise ValueError("b2-112 needs height 2 for the word 112")
        coeff = q11 * q11 * q12 * (f.one() - q12 * q21 * q22)
        if coeff.is_zero():
            return None
        combo = datum.q_commutator(table[(x1, x112)], datum.letter(x12), q((1, 1, 1, 2), x12))
        combo = combo - datum.q_commutator(datum.letter(x1), table[(x112, x12)], q(x1, x11212))
        rhs = combo.scale(-coeff.inverse())
        check_shape(rhs, x112, 2)
        return coeff, rhs, x112, 2

    if level == "b2-12":
        if datum.heights.get(x12) != 3:
            raise ValueError("b2-12 needs height 3 for the word 12")
        coeff = q12 * q12 * q22 * (q22 - q11) * (q11 * q11 * q12 * q21 - f.one())
        if coeff.is_zero():
            return None
        delta = datum.partial_delta(x1, table[(x12, x2)], lookup, (1, 2, 2))
        combo = datum.q_commutator(table[(x112, x12)], datum.letter(x2), q(x11212, x2))
        combo = combo - datum.q_commutator(datum.letter(x112), table[(x12, x2)], q(x112, (1, 2, 2)))
        combo = combo + datum.mul(datum.letter(x12), delta).scale(q(x112, x12))
        combo = combo - datum.mul(delta, datum.letter(x12)).scale(q(x12, x2))
        rhs = combo.scale(-coeff.inverse())
        check_shape(rhs, x12, 3)
        return coeff, rhs, x12, 3

    raise ValueError(f"unknown level {level!r}")


def _need_letters(datum, needed, level):
    members = set(datum.L)
    missing = [format_word(w) for w in needed if w not in members]
    if missing:
        raise ValueError(f"{level} needs L to contain {missing}")


def generic_redundancies(datum, table=None):
    """Relations implied by the others: drop one rule, reduce its element by
    the remaining system, redundant when the normal form is zero.  Returns a
    list of ("red", w) / ("redhat", u) labels."""
    if table is None:
        table = bracket_table(datum)
    rules = build_rules(datum, table)
    out = []
    for w in sorted(datum.reds):
        u, v = shirshov_decompose(w)
        elem = datum.monomial((u, v)) - rules.pair_rhs[(u, v)]
        pruned = RuleSystem(
            datum,
            {k: r for k, r in rules.pair_rhs.items() if k != (u, v)},
            rules.power_rhs,
        )
        if normal_form(pruned, elem).is_zero():
            out.append(("red", w))
    for u in sorted(datum.redhats):
        n = datum.heights[u]
        elem = datum.monomial((u,) * n) - rules.power_rhs[u]
        pruned = RuleSystem(
            datum,
            rules.pair_rhs,
            {k: r for k, r in rules.power_rhs.items() if k != u},
        )
        if normal_form(pruned, elem).is_zero():
            out.append(("redhat", u))
    return out
