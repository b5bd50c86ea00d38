"""Tangle words: parsing, the link polynomial, skein checks, transport."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from moycalc.boxcomb import all_compositions
from moycalc.qlaurent import LaurentPoly, ONE, ZERO, parse_laurent, quantum_int
from moycalc.reporting import all_passed
from moycalc.symhecke import O_set, Permutation
from moycalc.tangleinv import (
    CORPUS,
    GrothVector,
    TangleLayer,
    TangleParseError,
    TangleWord,
    compare_theorem13,
    corpus_word,
    crossing_sites,
    grothendieck_map,
    link_poly,
    move_pairs,
    parse_tangle,
    reidemeister_suite,
    skein_check,
    skein_oracle,
    skein_triple,
    special_generator_webs,
    tangle_matrix,
    to_web,
)
from moycalc.weblin import QMatrix, TensorBasis
from moycalc.webgraph import Layer, Web, evaluate


def qp(m: int) -> LaurentPoly:
    return LaurentPoly.q_power(m)


_POLY_CACHE: dict[tuple[str, int], LaurentPoly] = {}


def cached_poly(word: TangleWord, k: int) -> LaurentPoly:
    key = (word.text(), k)
    if key not in _POLY_CACHE:
        _POLY_CACHE[key] = link_poly(word, k)
    return _POLY_CACHE[key]


# ----------------------------------------------------------------------
# layers and words


def test_layer_rejects_unknown_kind():
    with pytest.raises(ValueError, match="unknown tangle layer kind"):
        TangleLayer("loop", 1)


def test_layer_rejects_bad_position():
    with pytest.raises(ValueError, match="position"):
        TangleLayer("cap", 0)


def test_layer_orientation_arity():
    with pytest.raises(ValueError, match="cup requires an orientation pair"):
        TangleLayer("cup", 1)
    with pytest.raises(ValueError, match=r"one '-' and one '\+' end"):
        TangleLayer("cup", 1, ("-", "-"))
    with pytest.raises(ValueError, match="takes no orientation pair"):
        TangleLayer("cap", 1, ("-", "+"))
    with pytest.raises(ValueError, match="takes no orientation pair"):
        TangleLayer("X+", 1, ("-", "+"))


def test_word_boundaries_walk():
    word = corpus_word("hopf-antiparallel")
    assert word.boundaries == (
        (),
        ("-", "+"),
        ("-", "+", "-", "+"),
        ("-", "-", "+", "+"),
        ("-", "+", "-", "+"),
        ("-", "+"),
        (),
    )
    assert word.is_closed


def test_crossing_swaps_orientations():
    word = TangleWord(("-", "+"), (TangleLayer("X+", 1),))
    assert word.top == ("+", "-")


def test_word_rejects_bad_bottom_sign():
    with pytest.raises(ValueError, match="orientation must be"):
        TangleWord(("-", "o"))


def test_word_rejects_low_rank():
    with pytest.raises(ValueError, match="rank k must be >= 2"):
        TangleWord((), (), 1)


def test_word_rejects_cap_on_equal_signs():
    with pytest.raises(ValueError, match="layer 1: cap at position 1"):
        TangleWord(("-", "-"), (TangleLayer("cap", 1),))


def test_word_rejects_out_of_range_layers():
    with pytest.raises(ValueError, match="layer 1: cap position 2"):
        TangleWord(("-", "+"), (TangleLayer("cap", 2),))
    with pytest.raises(ValueError, match="layer 1: cup position 3"):
        TangleWord(("-",), (TangleLayer("cup", 3, ("-", "+")),))


# ----------------------------------------------------------------------
# parsing


def test_parse_unknot_word():
    word = parse_tangle("cup(-+@1); cap(@1)")
    assert word == TangleWord(
        (), (TangleLayer("cup", 1, ("-", "+")), TangleLayer("cap", 1))
    )
    assert word.is_closed


def test_parse_trefoil_plat_word():
    word = corpus_word("trefoil-plus")
    assert word.is_closed
    assert crossing_sites(word) == [2, 3, 4]
    assert word.layers[0] == TangleLayer("cup", 1, ("+", "-"))


def test_parse_header_sets_rank_and_bottom():
    word = parse_tangle("tangle k=3 bottom=-+\nX-(@1)")
    assert word.k == 3
    assert word.bottom == ("-", "+")
    assert word.layers == (TangleLayer("X-", 1),)


def test_parse_headerless_takes_bottom_argument():
    word = parse_tangle("X+(@1); X-(@1)", bottom=("-", "-"))
    assert word.k is None
    assert word.bottom == ("-", "-")


def test_parse_rejects_bottom_next_to_header():
    with pytest.raises(ValueError, match="do not also pass bottom"):
        parse_tangle("tangle k=2 bottom=-+\ncap(@1)", bottom=("-", "+"))


def test_parse_accepts_spaced_arguments_and_comments():
    text = "# a closed loop\ncup( - , + @ 1 ) # grows\ncap( @1 )"
    assert parse_tangle(text) == parse_tangle("cup(-+@1); cap(@1)")


def test_parse_positions_errors():
    with pytest.raises(TangleParseError) as info:
        parse_tangle("cup(-+@1); cup(--@2)")
    assert info.value.line == 1
    assert info.value.column == 12
    assert "one '-' and one '+' end" in info.value.reason

    with pytest.raises(TangleParseError) as info:
        parse_tangle("cup(-+@1)\nbogus(@1)")
    assert (info.value.line, info.value.column) == (2, 1)
    assert "cannot parse layer" in info.value.reason


def test_parse_rejects_bad_headers():
    with pytest.raises(TangleParseError, match="bad rank"):
        parse_tangle("tangle k=x bottom=-+")
    with pytest.raises(TangleParseError, match="k out of range"):
        parse_tangle("tangle k=1 bottom=-+")
    with pytest.raises(TangleParseError, match="bad orientation character"):
        parse_tangle("tangle k=2 bottom=-*")


def test_parse_rejects_bad_layer_arguments():
    with pytest.raises(TangleParseError, match="orientation pair"):
        parse_tangle("cup(@1)", bottom=())
    with pytest.raises(TangleParseError, match="optional @position"):
        parse_tangle("X+(-+@1)", bottom=("-", "-"))


def test_text_round_trips_every_corpus_word():
    for name in sorted(CORPUS):
        word = corpus_word(name)
        assert parse_tangle(word.text()) == word


def test_text_round_trips_header_words():
    word = TangleWord(("-", "+"), (TangleLayer("X-", 1),), 3)
    assert word.text() == "tangle k=3 bottom=-+\nX-(@1)"
    assert parse_tangle(word.text()) == word


def test_corpus_rejects_unknown_name():
    with pytest.raises(ValueError, match="unknown corpus entry"):
        corpus_word("borromean")


# ----------------------------------------------------------------------
# compilation to webs


def test_compile_labels_follow_orientations():
    web = to_web(parse_tangle("cup(-+@1); cap(@1)"), 3)
    assert web.k == 3
    assert web.layers == (Layer("cup", 1, 1, 2), Layer("cap", 1))
    assert to_web(parse_tangle("cup(+-@1); cap(@1)"), 3).layers[0] == Layer(
        "cup", 1, 2, 1
    )


def test_compile_plain_crossing_on_downward_pair():
    word = TangleWord(("-", "-"), (TangleLayer("X+", 1),))
    assert to_web(word, 3).layers == (Layer("cross+", 1),)


def test_compile_rotates_side_crossings():
    word = TangleWord(("-", "+"), (TangleLayer("X+", 1),))
    assert to_web(word, 3).layers == (
        Layer("cup", 1, 2, 1),
        Layer("cross+", 2),
        Layer("cap", 3),
    )
    word = TangleWord(("+", "-"), (TangleLayer("X+", 1),))
    assert to_web(word, 3).layers == (
        Layer("cup", 3, 1, 2),
        Layer("cross+", 2),
        Layer("cap", 1),
    )
    word = TangleWord(("+", "+"), (TangleLayer("X-", 1),))
    assert to_web(word, 3).layers == (
        Layer("cup", 3, 1, 2),
        Layer("cup", 4, 1, 2),
        Layer("cross-", 3),
        Layer("cap", 2),
        Layer("cap", 1),
    )


def test_header_rank_feeds_evaluation():
    word = parse_tangle("tangle k=3 bottom=\ncup(-+@1); cap(@1)")
    assert link_poly(word) == quantum_int(3)
    assert link_poly(word, 2) == quantum_int(2)
    assert to_web(word, 4).k == 4


def test_rank_is_required_somewhere():
    with pytest.raises(ValueError, match="no rank given"):
        link_poly(parse_tangle("cup(-+@1); cap(@1)"))


def test_link_poly_rejects_open_words():
    with pytest.raises(ValueError, match="closed tangle word required"):
        link_poly(TangleWord(("-",), ()), 2)


# ----------------------------------------------------------------------
# link polynomial values


@pytest.mark.parametrize("k", [2, 3, 4])
def test_unknot_is_quantum_k(k):
    assert link_poly(corpus_word("unknot"), k) == quantum_int(k)


@pytest.mark.parametrize("k", [2, 3])
@pytest.mark.parametrize(
    "name",
    [
        "unknot-coiled",
        "unknot-kink-plus",
        "unknot-kink-minus",
        "unknot-one-crossing",
    ],
)
def test_unknot_presentations_keep_coefficient_one(name, k):
    assert link_poly(corpus_word(name), k) == quantum_int(k)


@pytest.mark.parametrize("k", [2, 3])
def test_unlink_values_multiply(k):
    circle = quantum_int(k)
    assert link_poly(corpus_word("unlink-2"), k) == circle**2
    assert link_poly(corpus_word("unlink-2-slid"), k) == circle**2
    assert link_poly(corpus_word("unlink-3-nested"), k) == circle**3


def test_hopf_link_frozen_values():
    hopf = corpus_word("hopf-plus")
    assert link_poly(hopf, 2) == parse_laurent("1 + q^-2 + q^-4 + q^-6")
    assert link_poly(hopf, 3) == parse_laurent(
        "1 + q^-2 + 2q^-4 + 2q^-6 + 2q^-8 + q^-10"
    )


def test_trefoil_frozen_values():
    trefoil = corpus_word("trefoil-plus")
    assert str(link_poly(trefoil, 2)) == "q^-1 + q^-3 + q^-5 - q^-9"
    assert str(link_poly(trefoil, 3)) == (
        "q^-2 + q^-4 + 2q^-6 + q^-8 - q^-12 - q^-14"
    )


@pytest.mark.parametrize("k", [2, 3])
def test_mirror_words_conjugate_the_value(k):
    for name in ("hopf", "trefoil"):
        plus = link_poly(corpus_word(f"{name}-plus"), k)
        minus = link_poly(corpus_word(f"{name}-minus"), k)
        assert minus == plus.bar()


@pytest.mark.parametrize("k", [2, 3])
def test_reoriented_and_replatted_hopf_words_agree(k):
    value = link_poly(corpus_word("hopf-plus"), k)
    assert link_poly(corpus_word("hopf-antiparallel"), k) == value
    assert link_poly(corpus_word("plat-braid-121"), k) == value


# ----------------------------------------------------------------------
# per-site crossing identities at rank 2


def test_crossing_matrices_split_into_weighted_pictures():
    keep = QMatrix.identity(TensorBasis(2, (1, 1)))
    turn = evaluate(Web(2, (1, 1), (Layer("cap", 1), Layer("cup", 1, 1, 1))))
    weights = {"X+": (qp(-1), -qp(-2)), "X-": (qp(1), -qp(2))}
    for cross, (straight, turned) in weights.items():
        for first in ("-", "+"):
            for second in ("-", "+"):
                word = TangleWord(
                    (first, second), (TangleLayer(cross, 1),)
                )
                got = tangle_matrix(word, 2)
                if first == second:
                    expected = straight * keep + turned * turn
                else:
                    expected = straight * turn + turned * keep
                assert got == expected, (cross, first, second)


# ----------------------------------------------------------------------
# the independent rank-2 oracle


def test_oracle_frozen_values():
    assert skein_oracle(corpus_word("unknot")) == quantum_int(2)
    assert skein_oracle(corpus_word("unlink-2")) == quantum_int(2) ** 2
    assert skein_oracle(corpus_word("trefoil-plus")) == parse_laurent(
        "q^-1 + q^-3 + q^-5 - q^-9"
    )


def test_oracle_matches_the_compiled_pipeline_on_the_corpus():
    for name in sorted(CORPUS):
        word = corpus_word(name)
        assert skein_oracle(word) == cached_poly(word, 2), name


def test_oracle_only_speaks_rank_2():
    with pytest.raises(ValueError, match="covers only k=2"):
        skein_oracle(corpus_word("unknot"), 3)


def test_oracle_rejects_open_words():
    with pytest.raises(ValueError, match="closed tangle word required"):
        skein_oracle(TangleWord(("-",), ()))


# ----------------------------------------------------------------------
# skein triples


def test_trefoil_triple_is_trefoil_unknot_hopf():
    trefoil = corpus_word("trefoil-plus")
    plus, minus, zero = skein_triple(trefoil, 2)
    assert plus == trefoil
    assert minus.layers[2] == TangleLayer("X-", 2)
    assert zero == corpus_word("hopf-plus")
    for k in (2, 3):
        assert cached_poly(minus, k) == quantum_int(k)
        assert skein_check(plus, minus, zero, k)


def test_kink_triple_smooths_to_the_two_component_unlink():
    plus, minus, zero = skein_triple(corpus_word("unknot-kink-plus"), 2)
    assert minus == corpus_word("unknot-kink-minus")
    assert crossing_sites(zero) == []
    for k in (2, 3):
        assert cached_poly(zero, k) == quantum_int(k) ** 2
        assert skein_check(plus, minus, zero, k)


def test_antiparallel_smoothing_turns_the_strands_back():
    host = corpus_word("hopf-antiparallel")
    plus, minus, zero = skein_triple(host, 2)
    assert zero.layers[2] == TangleLayer("cap", 2)
    assert zero.layers[3] == TangleLayer("cup", 2, ("-", "+"))
    for k in (2, 3):
        assert skein_check(plus, minus, zero, k)


def test_skein_relation_on_randomized_triples():
    rng = random.Random(0)
    hosts = [
        "trefoil-plus",
        "twist-4",
        "twist-5",
        "hopf-antiparallel",
        "twist-4-antiparallel",
    ]
    for name in hosts:
        word = corpus_word(name)
        index = rng.choice(crossing_sites(word))
        plus, minus, zero = skein_triple(word, index)
        for k in (2, 3):
            assert skein_check(plus, minus, zero, k), (name, index, k)


def test_skein_triple_rejects_non_crossing_sites():
    with pytest.raises(ValueError, match="not a crossing"):
        skein_triple(corpus_word("unknot"), 0)


def test_skein_check_validates_the_triple():
    plus, minus, zero = skein_triple(corpus_word("trefoil-plus"), 2)
    other = corpus_word("hopf-plus")
    with pytest.raises(ValueError, match="word lengths differ"):
        skein_check(plus, other, zero, 2)
    with pytest.raises(ValueError, match="bottom boundaries differ"):
        skein_check(
            TangleWord(("-", "-"), (TangleLayer("X+", 1),)),
            TangleWord(("+", "+"), (TangleLayer("X-", 1),)),
            zero,
            2,
        )
    with pytest.raises(ValueError, match="need exactly one"):
        skein_check(plus, plus, zero, 2)
    with pytest.raises(ValueError, match="must hold X"):
        skein_check(minus, plus, zero, 2)
    with pytest.raises(ValueError, match="oriented smoothing"):
        skein_check(plus, minus, plus, 2)


# ----------------------------------------------------------------------
# local moves


@pytest.mark.parametrize("k", [2, 3])
def test_reidemeister_suite_passes(k):
    reports = reidemeister_suite(k)
    assert len(reports) == 4
    assert [r.check for r in reports] == [
        f"reidemeister-1-k{k}",
        f"reidemeister-2-k{k}",
        f"reidemeister-3-k{k}",
        f"zigzag-k{k}",
    ]
    assert all_passed(reports)
    assert all(r.line().startswith("PASS") for r in reports)


def test_move_pairs_rejects_unknown_move():
    with pytest.raises(ValueError, match="unknown move"):
        move_pairs("r4")


def test_move_pairs_respects_the_limit():
    assert len(move_pairs("r1", limit=3)) == 3


@pytest.mark.parametrize("move", ["r1", "r2", "r3", "zigzag"])
@pytest.mark.parametrize("k", [2, 3])
def test_link_poly_is_invariant_under_move(move, k):
    pairs = move_pairs(move)
    assert len(pairs) >= 10
    for left, right in pairs:
        assert cached_poly(left, k) == cached_poly(right, k), (
            move,
            k,
            left.text(),
            right.text(),
        )


# ----------------------------------------------------------------------
# class vectors


def e(n: int) -> Permutation:
    return Permutation.identity(n)


def s(n: int, i: int) -> Permutation:
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def test_vector_drops_zero_coordinates():
    vec = GrothVector(2, (1, 1), {((1, 1), e(2)): ZERO})
    assert vec.is_zero()
    assert vec == GrothVector.zero(2, (1, 1))


def test_vector_validates_keys():
    with pytest.raises(ValueError, match="not a composition with 2 parts"):
        GrothVector(2, (1, 1), {((1, 1, 0), e(2)): ONE})
    with pytest.raises(ValueError, match="not a composition"):
        GrothVector(2, (1, 1), {((3, -1), e(2)): ONE})
    with pytest.raises(ValueError, match="does not match"):
        GrothVector(2, (1, 1), {((2, 1), e(2)): ONE})
    with pytest.raises(ValueError, match="does not match"):
        GrothVector(2, (1, 1), {((1, 1), e(3)): ONE})


def test_vector_addition_and_scaling():
    basis = GrothVector.basis(2, (1, 1), (1, 1), e(2))
    double = basis + basis
    assert double.coords[((1, 1), e(2))] == ONE + ONE
    assert 2 * basis == double
    assert basis * qp(1) + basis * qp(-1) == quantum_int(2) * basis
    assert basis + (-1) * basis == GrothVector.zero(2, (1, 1))


def test_vector_addition_needs_matching_content():
    left = GrothVector.basis(2, (1, 1), (1, 1), e(2))
    right = GrothVector.basis(2, (2,), (1, 1), e(2))
    with pytest.raises(ValueError, match="different contents"):
        left + right


def test_vector_rejects_strange_scalars():
    basis = GrothVector.basis(2, (1, 1), (1, 1), e(2))
    with pytest.raises(TypeError):
        basis * 1.5


def test_vector_text_is_sorted_and_canonical():
    vec = GrothVector(
        2,
        (1, 1),
        {((2, 0), e(2)): qp(1), ((1, 1), s(2, 1)): ONE},
    )
    assert vec.text() == "(1,1 | 21): 1; (2,0 | 12): q"
    assert str(GrothVector.zero(2, (1, 1))) == "0"


# ----------------------------------------------------------------------
# transport routes


ROUTES = ("curly", "translation", "matrix")


def test_identity_web_transports_identically():
    f = Web(3, (1, 2), ())
    maps = [
        grothendieck_map(f, (1, 2), (1, 2), 3, route=route)
        for route in ROUTES
    ]
    for mu in all_compositions(3, 3):
        for z in O_set(mu, (1, 2)):
            vec = GrothVector.basis(3, (1, 2), mu, z)
            for apply in maps:
                assert apply(vec) == vec


def test_merge_transport_frozen_coordinates():
    f = Web(3, (1, 1), (Layer("merge", 1, 1, 1),))
    apply = grothendieck_map(f, (1, 1), (2,), 3, route="curly")
    killed = GrothVector.basis(3, (1, 1), (2, 0, 0), e(2))
    assert apply(killed).is_zero()
    straight = GrothVector.basis(3, (1, 1), (1, 1, 0), e(2))
    bent = GrothVector.basis(3, (1, 1), (1, 1, 0), s(2, 1))
    target = GrothVector.basis(3, (2,), (1, 1, 0), e(2))
    assert apply(straight) == target
    assert apply(bent) == qp(-1) * target


def test_split_transport_frozen_coordinates():
    f = Web(2, (2,), (Layer("split", 1, 1, 1),))
    apply = grothendieck_map(f, (2,), (1, 1), 2, route="curly")
    image = apply(GrothVector.basis(2, (2,), (1, 1), e(2)))
    assert image.text() == "(1,1 | 12): q; (1,1 | 21): 1"

    g = Web(3, (3,), (Layer("split", 1, 1, 2),))
    apply_g = grothendieck_map(g, (3,), (1, 2), 3, route="curly")
    image_g = apply_g(GrothVector.basis(3, (3,), (1, 1, 1), e(3)))
    assert image_g.text() == (
        "(1,1,1 | 123): q^2; (1,1,1 | 213): q; (1,1,1 | 312): 1"
    )


def test_routes_agree_on_the_named_generator_webs():
    merge = Web(3, (1, 1), (Layer("merge", 1, 1, 1),))
    split = Web(3, (3,), (Layer("split", 1, 1, 2),))
    assert compare_theorem13(merge)
    assert compare_theorem13(split)


@pytest.mark.parametrize("k", [2, 3])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_routes_agree_on_all_small_special_generators(n, k):
    for web in special_generator_webs(n, k):
        assert compare_theorem13(web), (web.bottom, web.layers)


def test_special_generator_web_inventory():
    webs = special_generator_webs(2, 2)
    assert [(w.bottom, w.layers[0].kind) for w in webs] == [
        ((1, 1), "merge"),
        ((2,), "split"),
    ]
    counts = {
        (n, k): len(special_generator_webs(n, k))
        for k in (2, 3)
        for n in (1, 2, 3, 4)
    }
    assert counts == {
        (1, 2): 0,
        (2, 2): 2,
        (3, 2): 4,
        (4, 2): 10,
        (1, 3): 0,
        (2, 3): 2,
        (3, 3): 8,
        (4, 3): 18,
    }


def test_transport_validates_its_arguments():
    f = Web(3, (1, 1), (Layer("merge", 1, 1, 1),))
    with pytest.raises(ValueError, match="unknown route"):
        grothendieck_map(f, (1, 1), (2,), 3, route="spectral")
    with pytest.raises(ValueError, match="web was typed at k=3"):
        grothendieck_map(f, (1, 1), (2,), 2)
    with pytest.raises(ValueError, match="boundary mismatch"):
        grothendieck_map(f, (2,), (1, 1), 3)
    bent = Web(3, (), (Layer("cup", 1, 1, 2),))
    with pytest.raises(ValueError, match="merge/split webs only"):
        grothendieck_map(bent, (), (1, 2), 3)
    apply = grothendieck_map(f, (1, 1), (2,), 3)
    with pytest.raises(ValueError, match="does not match"):
        apply(GrothVector.basis(3, (2,), (1, 1, 0), e(2)))
    with pytest.raises(ValueError, match="web was typed at k=3"):
        compare_theorem13(f, 2)


MERGE_WEB = Web(3, (1, 1), (Layer("merge", 1, 1, 1),))
MERGE_KEYS = [
    (mu, z)
    for mu in all_compositions(2, 3)
    for z in sorted(O_set(mu, (1, 1)), key=lambda w: w.images)
]
small_polys = st.builds(
    LaurentPoly,
    st.dictionaries(
        st.integers(min_value=-3, max_value=3),
        st.integers(min_value=-4, max_value=4),
        max_size=3,
    ),
)


@given(
    key_a=st.sampled_from(MERGE_KEYS),
    key_b=st.sampled_from(MERGE_KEYS),
    coeff=small_polys,
    route=st.sampled_from(ROUTES),
)
def test_transport_is_linear(key_a, key_b, coeff, route):
    apply = grothendieck_map(MERGE_WEB, (1, 1), (2,), 3, route=route)
    vec_a = GrothVector.basis(3, (1, 1), *key_a)
    vec_b = GrothVector.basis(3, (1, 1), *key_b)
    assert apply(vec_a + vec_b) == apply(vec_a) + apply(vec_b)
    assert apply(vec_a * coeff) == apply(vec_a) * coeff
