from __future__ import annotations

import random
from itertools import combinations

import pytest
from sympy import Poly, groebner, symbols, sympify

from tac_approx.algebra import (
    FreeMap,
    NotMember,
    Polynomial,
    QuotientRing,
    Submodule,
    VectorElement,
    buchberger,
    membership_with_witness,
    normal_form,
    parse_polynomial,
    syzygies,
)
from tac_approx.algebra.groebner import ideal_multiples
from tests._helpers import random_map, random_polynomial
from tests.algebra import _oracle

pytestmark = [
    pytest.mark.unit,
]


def _vector(ring: QuotientRing, *entries: str) -> VectorElement:
    return VectorElement([ring.parse(e) for e in entries])


class Test_groebner_basis:
    @pytest.mark.parametrize(
        ("variables", "ideal", "modulus"),
        [
            pytest.param(["x", "y"], ["x^2 - y", "x*y"], 32003, id="twisted-cubic-like"),
            pytest.param(["x", "y", "z"], ["x*y - z^2", "y^2 - x*z", "x^2 - y*z"], 101, id="determinantal"),
            pytest.param(["x", "y", "z"], ["x^3 + y^2*z", "x*y*z - 1", "z^2 + x"], 7, id="inhomogeneous"),
            pytest.param(["x", "y"], ["x^2", "y^2", "x*y"], 32003, id="monomial"),
        ],
    )
    def test_matches_sympy(self, variables: list[str], ideal: list[str], modulus: int) -> None:
        # Arrange
        ring = QuotientRing(variables, ideal, modulus=modulus)
        gens = symbols(variables)
        locals_ = dict(zip(variables, gens))
        exprs = [sympify(g.replace("^", "**"), locals=locals_) for g in ideal]
        expected_basis = groebner(exprs, *gens, modulus=modulus, order="grevlex")
        expected = set()
        for g in expected_basis.exprs:
            terms = Poly(g, *gens, modulus=modulus).terms()
            expected.add(frozenset((tuple(m), int(c) % modulus) for m, c in terms))

        # Act
        actual = {frozenset(g.term_dict.items()) for g in ring.groebner_basis}

        # Assert
        assert actual == expected


class Test_buchberger:
    def test_submodule_basis_is_groebner(self) -> None:
        # Arrange
        ring = QuotientRing(["x", "y"], ["x^2"], modulus=101)
        generators = [_vector(ring, "x", "y"), _vector(ring, "y^2", "x*y"), _vector(ring, "0", "x + y")]

        # Act
        basis = buchberger(generators, ring)

        # Assert
        sparse = [b.to_sparse() for b in basis]
        assert _oracle.is_groebner_basis(sparse, ring.modulus)
        for g in generators:
            assert not _oracle.remainder(g.to_sparse(), sparse, ring.modulus)
            assert normal_form(g, basis, ring).is_zero()

    def test_ideal_multiples_included(self) -> None:
        # Arrange
        ring = QuotientRing(["x", "y"], ["x^2"])

        # Act
        basis = buchberger([], ring, rank=2)

        # Assert
        x2, zero = parse_polynomial("x^2", ring.variables, ring.modulus), ring.zero
        assert len(basis) == 2
        assert VectorElement([x2, zero]) in basis
        assert VectorElement([zero, x2]) in basis


class Test_membership_with_witness:
    def test_member(self) -> None:
        # Arrange
        ring = QuotientRing(["x", "y"], ["x^2"])
        generators = [_vector(ring, "x"), _vector(ring, "y")]
        v = _vector(ring, "x*y + y^2")

        # Act
        witness = membership_with_witness(v, generators, ring)

        # Assert
        assert not isinstance(witness, NotMember)
        assert ring.reduce(witness[0] * ring.parse("x") + witness[1] * ring.parse("y")) == v[0]

    def test_not_member(self) -> None:
        # Arrange
        ring = QuotientRing(["x", "y"], ["x^2"])
        generators = [_vector(ring, "x"), _vector(ring, "y")]

        # Act
        witness = membership_with_witness(_vector(ring, "1"), generators, ring)

        # Assert
        assert isinstance(witness, NotMember)
        assert not witness

    def test_zero_has_empty_witness(self) -> None:
        # Arrange
        ring = QuotientRing(["x"])

        # Act
        witness = Submodule([], ring, rank=1).witness(VectorElement.zero(ring, 1))

        # Assert
        assert witness == []


class Test_Submodule_syzygies:
    def test_koszul_relation(self) -> None:
        # Arrange
        ring = QuotientRing(["x", "y"])

        # Act
        kernel = Submodule([_vector(ring, "x"), _vector(ring, "y")], ring).syzygies()

        # Assert
        assert len(kernel) == 1
        assert kernel[0] in (_vector(ring, "y", "-x"), _vector(ring, "-y", "x"))

    def test_quotient_adds_annihilators(self) -> None:
        # Arrange
        ring = QuotientRing(["x", "y"], ["x^2"])

        # Act
        kernel = Submodule([_vector(ring, "x"), _vector(ring, "y")], ring).syzygies()

        # Assert
        assert len(kernel) == 2  # noqa: PLR2004
        for relation in kernel:
            assert ring.is_zero(relation[0] * ring.parse("x") + relation[1] * ring.parse("y"))


def _random_vector(ring: QuotientRing, rng: random.Random, rank: int) -> VectorElement:
    return VectorElement([ring.reduce(random_polynomial(ring, rng, degrees=(1, 2))) for _ in range(rank)])


def _random_ring(rng: random.Random) -> QuotientRing:
    variables = ["x", "y", "z"][: rng.randint(1, 3)]
    ambient = QuotientRing(variables, modulus=rng.choice([32003, 101]))
    ideal = [random_polynomial(ambient, rng, degrees=(2,), zero_rate=0) for _ in range(rng.randint(0, 2))]
    return QuotientRing(variables, ideal, modulus=ambient.modulus)


def _combination(ring: QuotientRing, coefficients: list[Polynomial], vectors: list[VectorElement]) -> VectorElement:
    rank = len(vectors[0].components)
    components = []
    for i in range(rank):
        total = ring.zero
        for c, v in zip(coefficients, vectors):
            total = total + c * v[i]

        components.append(ring.reduce(total))

    return VectorElement(components)


class Test_reduced_basis_corpus:
    @pytest.mark.parametrize("seed", range(30))
    def test_matches_naive_closure(self, seed: int) -> None:
        # Arrange
        rng = random.Random(seed)
        ring = _random_ring(rng)
        rank = rng.randint(1, 2)
        generators = [_random_vector(ring, rng, rank) for _ in range(rng.randint(1, 3))]
        vectors = [g.to_sparse() for g in generators] + ideal_multiples(ring, rank)

        # Act
        basis = buchberger(generators, ring, rank=rank)

        # Assert
        assert {frozenset(b.to_sparse().items()) for b in basis} == _oracle.reduced_basis(vectors, ring.modulus)


class Test_normal_form_against_membership:
    @pytest.mark.parametrize("seed", range(20))
    def test_agree(self, seed: int) -> None:
        # Arrange
        rng = random.Random(seed)
        ring = QuotientRing(["x", "y"], ["x^2"])
        rank = rng.randint(1, 2)
        generators = [_random_vector(ring, rng, rank) for _ in range(rng.randint(1, 3))]
        coefficients = [random_polynomial(ring, rng) for _ in generators]
        member = _combination(ring, coefficients, generators)
        candidates = [member, _random_vector(ring, rng, rank)]

        # Act
        basis = buchberger(generators, ring)

        # Assert
        assert normal_form(member, basis, ring).is_zero()
        for v in candidates:
            witness = membership_with_witness(v, generators, ring)
            assert normal_form(v, basis, ring).is_zero() == (not isinstance(witness, NotMember))
            if not isinstance(witness, NotMember):
                assert _combination(ring, list(witness), generators) == _combination(ring, [ring.one], [v])


class Test_syzygies_completeness:
    @pytest.mark.parametrize("seed", range(15))
    def test_koszul_relations_reduce_to_zero(self, seed: int) -> None:
        # Arrange
        rng = random.Random(seed)
        ring = QuotientRing(["x", "y", "z"][: rng.randint(2, 3)], ["x^2"])
        m = random_map(ring, rng, 1, rng.randint(2, 3), degrees=(1, 2), zero_rate=0)
        entries = [m[0, j] for j in range(m.source_rank)]
        relations = []
        for i, j in combinations(range(m.source_rank), 2):
            relation = [ring.zero] * m.source_rank
            relation[i], relation[j] = entries[j], -entries[i]
            relations.append(VectorElement(relation))

        relations += [
            VectorElement.unit(ring, m.source_rank, i).scale(u)
            for i in range(m.source_rank)
            for u in (ring.parse("x"), ring.parse("y"))
            if ring.is_zero(u * entries[i])
        ]
        v = _combination(ring, [random_polynomial(ring, rng) for _ in relations], relations)

        # Act
        kernel = syzygies(m)

        # Assert
        assert (m @ kernel).is_zero()
        assert (m @ FreeMap.from_columns(ring, [v], target_rank=m.source_rank)).is_zero()
        basis = buchberger(kernel.columns(), ring, rank=m.source_rank)
        assert normal_form(v, basis, ring).is_zero()
