import pytest
import sympy
from hypothesis import given, settings, strategies as st

from bei_lab.groebner import (
    GroebnerBasis,
    Ideal,
    Ring,
    RingMismatchError,
    buchberger,
    ideal_contained,
    ideal_equal,
    intersect,
    is_groebner,
    is_reduced,
    krull_dimension,
    normal_form,
    parse_polynomial,
)
from bei_lab.graph import complete_graph, path_graph
from bei_lab.primes import associated_primes, bei_generators, bei_ring, generators


def ring3(p=32003):
    return bei_ring((1, 2, 3), p)


def jp3(r):
    return Ideal(r, bei_generators(path_graph(3), r))


def test_single_binomial_is_its_own_basis():
    r = ring3()
    gb = buchberger(Ideal(r, ["x1*y2 - x2*y1"]))
    assert len(gb) == 1
    assert gb.basis[0] == r.parse("x2*y1 - x1*y2")


def test_path_basis_is_groebner_and_reduced():
    gb = jp3(ring3()).groebner()
    assert is_groebner(gb) and is_reduced(gb)
    # leading terms x2*y1 and x3*y2 are coprime, so the generators already form a basis
    assert [g.lm for g in gb.basis] == [(0, 1, 0, 1, 0, 0), (0, 0, 1, 0, 1, 0)]


def test_monomial_ideal_basis():
    r = ring3()
    gb = buchberger(Ideal(r, ["y1", "x1"]))
    assert set(gb.as_strings()) == {"x1", "y1"}


def test_zero_generators_are_stripped():
    r = ring3()
    gb = buchberger(Ideal(r, [r.zero(), r.parse("x1")]))
    assert gb.as_strings() == ["x1"]


def test_non_prime_characteristic_rejected():
    with pytest.raises(ValueError, match="not prime"):
        Ring(["x"], 32004)


def test_normal_form_examples():
    r = ring3()
    gb = jp3(r).groebner()
    assert not normal_form(r.parse("x1*y2 - x2*y1"), gb)
    assert normal_form(r.one(), gb) == r.one()
    assert normal_form(r.parse("x1*y3 - x3*y1"), gb)


def test_normal_form_ring_mismatch():
    gb = jp3(ring3()).groebner()
    other = Ring(["x1", "y1"])
    with pytest.raises(RingMismatchError):
        normal_form(other.parse("x1"), gb)
    with pytest.raises(RingMismatchError):
        ideal_equal(jp3(ring3()), Ideal(other, ["x1"]))
    with pytest.raises(RingMismatchError):
        intersect(jp3(ring3()), Ideal(other, ["x1"]))


def test_intersect_examples():
    r = ring3()
    j = jp3(r)
    assert ideal_equal(intersect(j, j), j)
    assert ideal_equal(intersect(Ideal(r, ["x1"]), Ideal(r, ["y1"])), Ideal(r, ["x1*y1"]))
    p_empty, p_two = associated_primes(path_graph(3)).primes
    meet = intersect(Ideal(r, generators(p_empty, r)), Ideal(r, generators(p_two, r)))
    assert ideal_equal(meet, j)


def test_ideal_equal_examples():
    r = ring3()
    assert ideal_equal(Ideal(r, ["x1*y2 - x2*y1"]), Ideal(r, ["2*x1*y2 - 2*x2*y1"]))
    assert not ideal_equal(jp3(r), Ideal(r, bei_generators(complete_graph(3), r)))
    assert ideal_equal(Ideal(r, ["x1", "y1"]), Ideal(r, ["y1", "x1"]))
    assert ideal_contained(jp3(r), Ideal(r, bei_generators(complete_graph(3), r)))


def test_parse_and_print():
    r = Ring(["t", "x1", "x2", "y1", "y2"])
    f = r.parse("(x1 + 2*t)^2 - x2**3*y1 + 3 - 4")
    assert f == r.parse("x1^2 + 4*t*x1 + 4*t^2 - x2^3*y1 - 1")
    assert r.parse(str(f)) == f
    assert str(r.parse("x1*y2 - x2*y1")) == "-x2*y1 + x1*y2"
    with pytest.raises(ValueError):
        r.parse("x1 + z3")
    with pytest.raises(ValueError):
        r.parse("x1 +")


def test_krull_dimension_basics():
    r = ring3()
    assert krull_dimension(buchberger(Ideal(r, []))) == 6
    assert krull_dimension(buchberger(Ideal(r, ["x1", "y1"]))) == 4
    assert krull_dimension(jp3(r).groebner()) == 4
    assert krull_dimension(buchberger(Ideal(r, ["1"]))) == -1


def test_unit_ideal():
    r = ring3()
    gb = buchberger(Ideal(r, ["x1", "x1 + 1"]))
    assert gb.is_unit() and gb.as_strings() == ["1"]


def test_lex_and_block_orders():
    r = Ring(["t", "x", "y"], order="block", elim=1)
    assert r.key(r.parse("t").lm) > r.key(r.parse("x^5*y^5").lm)
    lex = Ring(["x", "y"], order="lex")
    assert lex.key(lex.parse("x").lm) > lex.key(lex.parse("y^9").lm)


# -- independent oracle: sympy's Groebner bases over GF(p) ------------------

def _sympy_basis(ring, polys):
    syms = sympy.symbols(ring.names)
    exprs = [sympy.sympify(str(f).replace("^", "**"), locals=dict(zip(ring.names, syms))) for f in polys]
    gb = sympy.groebner(exprs, *syms, order="grevlex", modulus=ring.p)
    out = set()
    for g in gb.exprs:
        poly = sympy.Poly(g, *syms)
        lc = int(poly.LC(order="grevlex")) % ring.p
        inv = pow(lc, -1, ring.p)
        terms = {m: int(c) * inv % ring.p for m, c in poly.terms()}
        out.add(frozenset((m, c) for m, c in terms.items() if c))
    return out


def _ours(gb: GroebnerBasis):
    return {frozenset(g.terms.items()) for g in gb.basis}


binomials = st.lists(
    st.tuples(st.integers(1, 4), st.integers(1, 4)).filter(lambda e: e[0] < e[1]),
    min_size=1, max_size=5, unique=True,
)


@settings(max_examples=25, deadline=None)
@given(binomials, st.sampled_from([32003, 101]), st.lists(st.sampled_from(["x", "y"]), max_size=2))
def test_matches_sympy(edges, p, extra):
    r = bei_ring((1, 2, 3, 4), p)
    polys = [r.parse(f"x{a}*y{b} - x{b}*y{a}") for a, b in edges]
    polys += [r.parse(f"{name}{edges[0][0]}") for name in extra]
    assert _ours(buchberger(Ideal(r, polys))) == _sympy_basis(r, polys)


@settings(max_examples=25, deadline=None)
@given(binomials)
def test_basis_invariants(edges):
    r = bei_ring((1, 2, 3, 4))
    ideal = Ideal(r, [r.parse(f"x{a}*y{b} - x{b}*y{a}") for a, b in edges])
    gb = ideal.groebner()
    assert is_groebner(gb) and is_reduced(gb)
    # idempotence and determinism
    again = buchberger(Ideal(r, gb.basis))
    assert again.as_strings() == gb.as_strings()
    assert buchberger(Ideal(r, ideal.generators)).as_strings() == gb.as_strings()
    # membership soundness
    assert all(not normal_form(f, gb) for f in ideal.generators)


@settings(max_examples=15, deadline=None)
@given(binomials, binomials)
def test_intersection_contained_in_both(e1, e2):
    r = bei_ring((1, 2, 3, 4))
    i = Ideal(r, [r.parse(f"x{a}*y{b} - x{b}*y{a}") for a, b in e1])
    j = Ideal(r, [r.parse(f"x{a}*y{b} - x{b}*y{a}") for a, b in e2] + [r.parse("x1")])
    meet = intersect(i, j)
    assert ideal_contained(meet, i) and ideal_contained(meet, j)
    # products always lie in the intersection
    for f in i.generators:
        for g in j.generators:
            assert meet.contains(f * g)
