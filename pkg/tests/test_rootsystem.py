import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import group
from zipstrata.rootsystem import (RootDatumError, apply_galois, build_root_datum,
                                  pairing, positive_roots, reflect, vneg)


def test_c3_preset_coordinates():
    rd, _ = group("C3")
    assert len(rd.roots) == 18
    assert len(rd.positive) == 9
    assert rd.simple_roots == ((1, -1, 0), (0, 1, -1), (0, 0, 2))
    assert rd.coroot((0, 0, 2)) == (0, 0, 1)


def test_a1_preset():
    rd, wg = group("A1")
    assert len(rd.roots) == 2
    assert wg.order() == 2


def test_gl4_preset():
    rd, _ = group("GL4")
    assert rd.rank == 4
    assert len(rd.roots) == 12
    assert rd.simple_roots == ((1, -1, 0, 0), (0, 1, -1, 0), (0, 0, 1, -1))


def test_positive_root_counts():
    assert len(positive_roots(group("C3")[0])) == 9
    assert len(positive_roots(group("GL4")[0])) == 6
    assert positive_roots(group("A1")[0]) == [(1, -1)]


def test_product_preset():
    rd, _ = group("C3xGL1")
    assert rd.rank == 4
    assert len(rd.roots) == 18
    rd1, _ = group("GL1")
    assert rd1.rank == 1 and len(rd1.roots) == 0


def test_pairing_examples():
    rd, _ = group("C3")
    assert pairing((1, 0, 0), (1, -1, 0)) == 1
    assert pairing((1, 1, 0), (1, 1, 0)) == 2  # coroot of e1+e2
    assert pairing((0, 0, 0), (1, -1, 0)) == 0
    with pytest.raises(RootDatumError):
        pairing((1, 0), (1, 0, 0))


def test_reflect_examples():
    rd, _ = group("C3")
    a = (0, 0, 2)
    assert reflect(rd, a, a) == (0, 0, -2)
    assert reflect(rd, a, (1, 0, 0)) == (1, 0, 0)
    assert reflect(rd, a, (0, 0, 1)) == (0, 0, -1)
    with pytest.raises(RootDatumError):
        reflect(rd, (1, 1, 1), (1, 0, 0))


def test_reflect_involutive_and_preserves_roots():
    rd, _ = group("B2")
    for a in rd.roots:
        for b in rd.roots:
            img = reflect(rd, a, b)
            assert img in rd.roots
            assert reflect(rd, a, img) == b


def test_coroot_pairing_two():
    for preset in ("A2", "B2", "C3", "GL4", "D4"):
        rd, _ = group(preset)
        for a in rd.roots:
            assert pairing(a, rd.coroot(a)) == 2


def test_galois_split_identity():
    rd, _ = group("C3")
    assert apply_galois(rd, 1, (1, 2, 3)) == (1, 2, 3)


def test_galois_flip_a3():
    rd, _ = group("A3", "flip")
    a1, a2, a3 = rd.simple_roots
    assert apply_galois(rd, 1, a1) == a3
    assert apply_galois(rd, 1, a2) == a2
    assert apply_galois(rd, 2, a1) == a1
    # positive roots map to positive roots bijectively
    pos = set(rd.positive)
    assert {apply_galois(rd, 1, a) for a in pos} == pos


def test_galois_dswap_d4():
    rd, _ = group("D4", "dswap")
    assert rd.galois.order == 2
    pos = set(rd.positive)
    assert {apply_galois(rd, 1, a) for a in pos} == pos


def test_invalid_cartan_detected():
    # Cartan product a12 * a21 = 4: infinite Weyl group; the enumeration cap trips
    with pytest.raises(RootDatumError):
        build_root_datum({"rank": 2,
                          "simple_roots": [(1, 0), (-2, 1)],
                          "simple_coroots": [(2, 0), (-1, 0)]})


def test_invalid_galois_rejected():
    with pytest.raises(RootDatumError):
        build_root_datum("C3", galois="flip")
    with pytest.raises(RootDatumError):
        # matrix that does not permute the simple roots
        build_root_datum("A1", galois={"matrix": [[1, 1], [0, 1]], "order": 1})


def test_explicit_datum_roundtrip():
    rd0, _ = group("B2")
    rd = build_root_datum({"rank": 2,
                           "simple_roots": [list(a) for a in rd0.simple_roots],
                           "simple_coroots": [list(rd0.coroot(a)) for a in rd0.simple_roots]})
    assert rd.roots == rd0.roots


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["A2", "B2", "C3"]), st.integers(-3, 3), st.integers(-3, 3),
       st.integers(-3, 3))
def test_reflection_fixed_hyperplane(preset, x, y, z):
    rd, _ = group(preset)
    v = (x, y, z)[: rd.rank]
    for a in rd.simple_roots:
        if pairing(v, rd.coroot(a)) == 0:
            assert reflect(rd, a, v) == v
