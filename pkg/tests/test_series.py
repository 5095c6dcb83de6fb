import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indigo.core import (
    MANY,
    ZERO,
    BoundExceededError,
    ContextMismatchError,
    SemiringCtx,
    fin,
)
from indigo.series import (
    NEG_INFINITY,
    Poly,
    TruncSeries,
    factorization_oracle,
    idempotent_series_from_generators,
    make_poly,
    make_series,
    parse_poly,
    poly_from_json,
    quadratic,
    quadratic_irreducible,
    series_from_json,
    ts_is_idempotent_window,
)


def all_polys(ctx, max_deg):
    """Every polynomial of degree <= max_deg, including zero."""
    elems = ctx.elements()
    for length in range(max_deg + 2):
        if length == 0:
            yield Poly.zero(ctx)
            continue
        for coeffs in itertools.product(elems, repeat=length):
            if coeffs[-1] == ZERO:
                continue
            yield make_poly(ctx, coeffs)


def all_windows(ctx, depth):
    for coeffs in itertools.product(ctx.elements(), repeat=depth + 1):
        yield TruncSeries(ctx, depth, coeffs)


# --- worked examples ---------------------------------------------------------


def test_square_of_one_plus_mx():
    c = SemiringCtx(3)
    f = make_poly(c, (fin(1), MANY))
    assert f * f == make_poly(c, (fin(1), MANY, MANY))


def test_scaling_by_a_constant():
    c = SemiringCtx(4)
    f = make_poly(c, (fin(2), fin(1)))
    two = Poly.constant(c, fin(2))
    assert f * two == make_poly(c, (fin(4), fin(2)))


def test_saturating_convolution():
    c = SemiringCtx(2)
    f = make_poly(c, (fin(2), fin(2)))
    assert f * f == make_poly(c, (MANY, MANY, MANY))


# --- polynomial structure ----------------------------------------------------


@pytest.mark.parametrize("k", [1, 2])
def test_units_are_exactly_one(k):
    c = SemiringCtx(k)
    one = Poly.one(c)
    pool = list(all_polys(c, 2))
    for f in pool:
        # degree is additive and there are no zero divisors, so any
        # inverse of a degree <= 2 polynomial appears in the same pool
        semantic = any(f * g == one for g in pool)
        assert f.is_unit() == semantic
    units = [f for f in pool if f.is_unit()]
    assert units == [one]


@pytest.mark.parametrize("k", [1, 2, 3])
def test_idempotents_are_exactly_the_idempotent_constants(k):
    c = SemiringCtx(k)
    expected = {Poly.zero(c), Poly.one(c), Poly.constant(c, MANY)}
    got = {f for f in all_polys(c, 2) if f * f == f}
    assert got == expected
    for f in all_polys(c, 2):
        assert f.is_idempotent() == (f in expected)


def test_degree_is_a_morphism_to_max_plus():
    c = SemiringCtx(2)
    pool = list(all_polys(c, 2))
    for f in pool:
        for g in pool:
            assert (f * g).degree() == f.degree() + g.degree()
            assert (f + g).degree() == max(f.degree(), g.degree())


def test_degree_of_zero():
    c = SemiringCtx(5)
    assert Poly.zero(c).degree() == NEG_INFINITY
    assert NEG_INFINITY + 3 == NEG_INFINITY
    assert Poly.one(c).degree() == 0
    assert Poly.x(c).degree() == 1


def test_no_zero_divisors():
    c = SemiringCtx(2)
    zero = Poly.zero(c)
    pool = list(all_polys(c, 1))
    for f in pool:
        for g in pool:
            assert (f * g == zero) == (f == zero or g == zero)


def test_make_poly_trims_trailing_zeros():
    c = SemiringCtx(3)
    assert make_poly(c, (fin(1), ZERO, ZERO)) == Poly.one(c)
    assert make_poly(c, (ZERO, ZERO)) == Poly.zero(c)
    assert make_poly(c, ()) == Poly.zero(c)


def test_poly_compat_errors():
    f = make_poly(SemiringCtx(2), (fin(1),))
    g = make_poly(SemiringCtx(3), (fin(1),))
    with pytest.raises(ContextMismatchError):
        f + g
    with pytest.raises(ContextMismatchError):
        f * g
    with pytest.raises(TypeError):
        f + 1


# --- parsing and rendering ---------------------------------------------------


def test_render_forms():
    c = SemiringCtx(4)
    assert Poly.zero(c).render() == "0"
    assert Poly.one(c).render() == "1"
    assert Poly.constant(c, MANY).render() == "m"
    assert Poly.x(c).render() == "X"
    assert make_poly(c, (ZERO, ZERO, fin(1))).render() == "X^2"
    assert make_poly(c, (fin(2), MANY, fin(3))).render() == "2 + m X + 3 X^2"


def test_parse_forms():
    c = SemiringCtx(4)
    assert parse_poly(c, "0") == Poly.zero(c)
    assert parse_poly(c, "m") == Poly.constant(c, MANY)
    assert parse_poly(c, "x") == Poly.x(c)
    assert parse_poly(c, "2 + mX + 3X^2") == make_poly(c, (fin(2), MANY, fin(3)))
    assert parse_poly(c, "mX^2") == make_poly(c, (ZERO, ZERO, MANY))


def test_parse_accumulates_repeated_degrees():
    c = SemiringCtx(4)
    assert parse_poly(c, "X + X") == make_poly(c, (ZERO, fin(2)))
    assert parse_poly(c, "3 + 3") == make_poly(c, (MANY,))


def test_parse_rejects_garbage():
    c = SemiringCtx(4)
    for text in ("2Y", "X^", "X^-1", "2 3", ""):
        with pytest.raises(ValueError):
            parse_poly(c, text)


def test_parse_render_roundtrip():
    c = SemiringCtx(2)
    for f in all_polys(c, 2):
        assert parse_poly(c, f.render()) == f


def test_poly_json_roundtrip():
    c = SemiringCtx(3)
    for f in all_polys(c, 2):
        assert poly_from_json(c, f.to_json()) == f


# --- truncated series --------------------------------------------------------


def test_window_shape_validation():
    c = SemiringCtx(2)
    with pytest.raises(ValueError):
        TruncSeries(c, 2, (fin(1),))
    with pytest.raises(ValueError):
        TruncSeries(c, -1, ())
    low = make_series(c, 1, (fin(1),))
    high = make_series(c, 2, (fin(1),))
    with pytest.raises(ValueError):
        low + high


def test_make_series_pads():
    c = SemiringCtx(2)
    s = make_series(c, 3, (fin(1),))
    assert s.coeffs == (fin(1), ZERO, ZERO, ZERO)
    with pytest.raises(ValueError):
        make_series(c, 1, (fin(1), fin(1), fin(1)))


def test_window_product_truncates():
    c = SemiringCtx(3)
    x = make_series(c, 2, (ZERO, fin(1)))
    cube_window = x * x * x
    assert cube_window.coeffs == (ZERO, ZERO, ZERO)


def test_series_json_roundtrip():
    c = SemiringCtx(2)
    s = make_series(c, 3, (fin(1), ZERO, MANY))
    assert series_from_json(c, s.to_json()) == s


@pytest.mark.parametrize("k,depth", [(1, 4), (2, 3), (3, 2)])
def test_window_idempotent_shape_matches_squaring(k, depth):
    c = SemiringCtx(k)
    for s in all_windows(c, depth):
        verdict = ts_is_idempotent_window(s)
        assert verdict == s.squares_to_self()
        assert verdict == s.has_idempotent_shape()


def test_window_units_are_exactly_constant_one():
    c = SemiringCtx(2)
    pool = list(all_windows(c, 2))
    one = make_series(c, 2, (fin(1),))
    for s in pool:
        semantic = any(s * t == one for t in pool)
        assert s.is_unit() == semantic


def test_idempotent_window_from_generators():
    c = SemiringCtx(3)
    s = idempotent_series_from_generators(c, fin(1), [3, 5], 10)
    assert s.support() == (3, 5, 6, 8, 9, 10)
    assert s.coeffs[0] == fin(1)
    assert s.squares_to_self()
    assert s.has_idempotent_shape()


def test_idempotent_generator_validation():
    c = SemiringCtx(3)
    with pytest.raises(ValueError):
        idempotent_series_from_generators(c, fin(2), [2], 5)
    with pytest.raises(ValueError):
        idempotent_series_from_generators(c, fin(1), [], 5)
    with pytest.raises(ValueError):
        idempotent_series_from_generators(c, fin(1), [0], 5)


def test_many_constant_idempotent_window():
    c = SemiringCtx(2)
    s = idempotent_series_from_generators(c, MANY, [1], 4)
    assert s.coeffs == (MANY, MANY, MANY, MANY, MANY)
    assert s.squares_to_self()


# --- quadratic irreducibility ------------------------------------------------


def test_quadratic_builder():
    c = SemiringCtx(4)
    assert quadratic(c, fin(2), fin(3)) == make_poly(c, (fin(3), ZERO, fin(2)))


def test_quadratic_closed_form_samples():
    c = SemiringCtx(4)
    assert quadratic_irreducible(c, fin(2), fin(3))
    assert not quadratic_irreducible(c, fin(2), fin(4))
    assert quadratic_irreducible(c, MANY, fin(1))
    assert quadratic_irreducible(c, fin(1), MANY)
    assert not quadratic_irreducible(c, MANY, MANY)
    assert not quadratic_irreducible(c, fin(3), ZERO)
    assert not quadratic_irreducible(c, MANY, fin(2))
    with pytest.raises(ValueError):
        quadratic_irreducible(c, ZERO, fin(1))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_closed_form_agrees_with_exhaustive_search(k):
    c = SemiringCtx(k)
    for alpha in c.nonzero_elements():
        for beta in c.elements():
            witness = factorization_oracle(quadratic(c, alpha, beta))
            assert quadratic_irreducible(c, alpha, beta) == (witness is None)
            if witness is not None:
                g, h = witness
                assert g * h == quadratic(c, alpha, beta)
                assert not g.is_unit() and not h.is_unit()


def test_oracle_is_deterministic():
    c = SemiringCtx(3)
    f = make_poly(c, (MANY, ZERO, MANY))
    assert factorization_oracle(f) == factorization_oracle(f)


def test_oracle_on_linear_and_constant_inputs():
    c = SemiringCtx(3)
    # X is irreducible; 4 = 2 * 2 saturates to m, which factors as 2 * 2
    assert factorization_oracle(Poly.x(c)) is None
    witness = factorization_oracle(Poly.constant(c, MANY))
    assert witness is not None
    g, h = witness
    assert g * h == Poly.constant(c, MANY)


def test_oracle_rejects_out_of_scope_inputs():
    c = SemiringCtx(3)
    with pytest.raises(ValueError):
        factorization_oracle(Poly.zero(c))
    with pytest.raises(ValueError):
        factorization_oracle(make_poly(c, (ZERO, ZERO, ZERO, fin(1))))
    big = SemiringCtx(7)
    with pytest.raises(BoundExceededError):
        factorization_oracle(Poly.x(big))
    assert factorization_oracle(Poly.x(big), max_k=7) is None


# --- algebraic laws under random inputs --------------------------------------


coeff_codes = st.lists(st.integers(min_value=0, max_value=4), min_size=0, max_size=4)


@given(st.integers(min_value=1, max_value=3), coeff_codes, coeff_codes, coeff_codes)
@settings(max_examples=100, deadline=None)
def test_property_poly_semiring_laws(k, a, b, c):
    ctx = SemiringCtx(k)

    def mk(codes):
        return make_poly(ctx, [ctx.decode(min(x, ctx.size - 1)) for x in codes])

    f, g, h = mk(a), mk(b), mk(c)
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
